use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::{Frontier, VertexId};

/// One bit per vertex, settable concurrently.
#[derive(Debug)]
pub struct VisitedBitmap {
    words: Vec<AtomicU64>,
    len: usize,
    set_count: AtomicUsize,
}

impl VisitedBitmap {
    pub fn new(len: usize) -> Self {
        Self { words: (0..len.div_ceil(64)).map(|_| AtomicU64::new(0)).collect(), len, set_count: AtomicUsize::new(0) }
    }

    /// Bitmap with exactly the vertices of `f` set.
    pub fn from_frontier(f: &Frontier, n: usize) -> Self {
        let bitmap = Self::new(n);
        bitmap.insert_all(f.items());
        bitmap
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> bool {
        let v = v as usize;
        self.words[v / 64].load(Ordering::Relaxed) & (1 << (v % 64)) != 0
    }

    /// Set bit `v`; returns whether it was already set.
    #[inline]
    pub fn test_and_set(&self, v: VertexId) -> bool {
        let v = v as usize;
        let mask = 1u64 << (v % 64);
        let was_set = self.words[v / 64].fetch_or(mask, Ordering::AcqRel) & mask != 0;
        if !was_set {
            self.set_count.fetch_add(1, Ordering::Relaxed);
        }
        was_set
    }

    /// Clear bit `v`; returns whether it was set.
    pub fn clear(&self, v: VertexId) -> bool {
        let v = v as usize;
        let mask = 1u64 << (v % 64);
        let was_set = self.words[v / 64].fetch_and(!mask, Ordering::AcqRel) & mask != 0;
        if was_set {
            self.set_count.fetch_sub(1, Ordering::Relaxed);
        }
        was_set
    }

    pub fn insert_all(&self, vertices: &[VertexId]) {
        vertices.par_iter().for_each(|&v| {
            self.test_and_set(v);
        });
    }

    /// Number of set bits.
    #[inline]
    pub fn set_count(&self) -> usize {
        self.set_count.load(Ordering::Relaxed)
    }

    #[inline]
    pub fn unset_count(&self) -> usize {
        self.len - self.set_count()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len as VertexId).map(|v| self.get(v)).collect()
    }
}
