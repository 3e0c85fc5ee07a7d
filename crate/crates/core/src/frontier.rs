use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrontierKind {
    Vertex,
    Edge,
}

/// An explicit ordered collection of vertex ids or edge ids: the working set
/// of one bulk-synchronous step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    kind: FrontierKind,
    items: Vec<u32>,
    generation: u32,
}

impl Frontier {
    pub fn new(kind: FrontierKind, items: Vec<u32>) -> Self {
        Self { kind, items, generation: 0 }
    }

    pub fn vertices(items: Vec<VertexId>) -> Self {
        Self::new(FrontierKind::Vertex, items)
    }

    pub fn edges(items: Vec<u32>) -> Self {
        Self::new(FrontierKind::Edge, items)
    }

    pub fn empty(kind: FrontierKind) -> Self {
        Self::new(kind, Vec::new())
    }

    /// Every vertex `0..n`, in order.
    pub fn all_vertices(n: usize) -> Self {
        Self::vertices((0..n as VertexId).collect())
    }

    pub fn with_generation(mut self, generation: u32) -> Self {
        self.generation = generation;
        self
    }

    #[inline]
    pub fn kind(&self) -> FrontierKind {
        self.kind
    }

    #[inline]
    pub fn generation(&self) -> u32 {
        self.generation
    }

    #[inline]
    pub fn items(&self) -> &[u32] {
        &self.items
    }

    pub fn into_items(self) -> Vec<u32> {
        self.items
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.items.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn extend(&mut self, other: Frontier) {
        debug_assert_eq!(self.kind, other.kind);
        self.items.extend(other.items);
    }

    pub(crate) fn items_mut(&mut self) -> &mut Vec<u32> {
        &mut self.items
    }
}
