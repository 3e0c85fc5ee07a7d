use num_traits::NumCast;
use rayon::prelude::*;

use crate::atomic::AtomicArray;
use crate::error::{Error, Result};
use crate::scalar::Weight;
use crate::Frontier;

/// Exclusive upper label bound of the near slice at `level`.
fn band_limit<W: Weight>(delta: W, level: usize) -> W {
    match <W as NumCast>::from(level as u128 + 1) {
        Some(l) => delta.checked_mul(&l).unwrap_or_else(W::max_value),
        None => W::max_value(),
    }
}

/// Partition `f` into vertices with `labels[v] < (level + 1) * delta` and the rest.
/// Both outputs keep input order.
pub fn split_near_far<W: Weight>(f: &Frontier, labels: &AtomicArray<W>, delta: W, level: usize) -> Result<(Frontier, Frontier)> {
    if delta.is_zero() {
        return Err(Error::Usage("delta must be positive".into()));
    }
    let limit = band_limit(delta, level);
    let (near, far): (Vec<u32>, Vec<u32>) = f.items().par_iter().partition(|&&v| labels.get(v as usize) < limit);
    Ok((
        Frontier::new(f.kind(), near).with_generation(f.generation()),
        Frontier::new(f.kind(), far).with_generation(f.generation()),
    ))
}

/// Two-slice priority queue over tentative distance labels.
///
/// Only `near` is processed; newly improved vertices beyond the current band
/// go to `far`. When `near` runs dry, [`NearFarQueue::advance_level`] jumps
/// to the lowest band holding a far vertex and re-splits `far`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearFarQueue<W> {
    pub near: Frontier,
    pub far: Frontier,
    pub delta: W,
    pub level: usize,
}

impl<W: Weight> NearFarQueue<W> {
    pub fn new(delta: W) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::Usage("delta must be positive".into()));
        }
        Ok(Self { near: Frontier::vertices(Vec::new()), far: Frontier::vertices(Vec::new()), delta, level: 0 })
    }

    /// Split `incoming` at the current band, appending the far part.
    pub fn push(&mut self, incoming: &Frontier, labels: &AtomicArray<W>) -> Result<()> {
        let (near, far) = split_near_far(incoming, labels, self.delta, self.level)?;
        self.near = near;
        self.far.extend(far);
        Ok(())
    }

    pub fn is_exhausted(&self) -> bool {
        self.near.is_empty() && self.far.is_empty()
    }

    /// Move to the smallest band containing a far vertex, under current labels.
    ///
    /// Far entries are deduplicated first; a vertex whose label has since
    /// dropped lands in whatever band its label now falls in. With an empty
    /// far slice the queue is returned unchanged (terminal).
    pub fn advance_level(mut self, labels: &AtomicArray<W>) -> Result<Self> {
        if !self.near.is_empty() {
            return Err(Error::Usage("advance_level called while the near slice is non-empty".into()));
        }
        if self.far.is_empty() {
            return Ok(self);
        }
        let far = self.far.items_mut();
        far.par_sort_unstable();
        far.dedup();
        let min_label = far.par_iter().map(|&v| labels.get(v as usize)).min().expect("far is non-empty");
        self.level = (min_label / self.delta).to_usize().unwrap_or(usize::MAX);
        let (near, far) = split_near_far(&self.far, labels, self.delta, self.level)?;
        self.near = near;
        self.far = far;
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_examples() {
        let labels = AtomicArray::from_vec(vec![3u32, 17]);
        let (near, far) = split_near_far(&Frontier::vertices(vec![0, 1]), &labels, 10, 0).unwrap();
        assert_eq!((near.into_items(), far.into_items()), (vec![0], vec![1]));

        let labels = AtomicArray::from_vec(vec![1u32, 9, 0]);
        let (near, far) = split_near_far(&Frontier::vertices(vec![2, 0, 1]), &labels, 10, 0).unwrap();
        assert_eq!(near.into_items(), vec![2, 0, 1]);
        assert!(far.is_empty());

        let (near, far) = split_near_far(&Frontier::vertices(vec![]), &labels, 10, 0).unwrap();
        assert!(near.is_empty() && far.is_empty());

        assert!(split_near_far(&Frontier::vertices(vec![0]), &labels, 0, 0).is_err());
    }

    #[test]
    fn infinite_delta_keeps_everything_near() {
        let labels = AtomicArray::from_vec(vec![u32::MAX - 1, 5]);
        let (near, far) = split_near_far(&Frontier::vertices(vec![0, 1]), &labels, u32::MAX, 3).unwrap();
        assert_eq!(near.len(), 2);
        assert!(far.is_empty());
    }

    #[test]
    fn advance_to_next_band() {
        let labels = AtomicArray::from_vec(vec![12u32, 25]);
        let mut q = NearFarQueue::new(10).unwrap();
        q.far = Frontier::vertices(vec![1, 0]);
        let q = q.advance_level(&labels).unwrap();
        assert_eq!(q.level, 1);
        assert_eq!(q.near.items(), &[0]);
        assert_eq!(q.far.items(), &[1]);
    }

    #[test]
    fn empty_far_is_terminal() {
        let labels = AtomicArray::from_vec(vec![0u32]);
        let q = NearFarQueue::new(10u32).unwrap().advance_level(&labels).unwrap();
        assert!(q.is_exhausted());
    }

    #[test]
    fn near_must_be_empty() {
        let labels = AtomicArray::from_vec(vec![0u32]);
        let mut q = NearFarQueue::new(10u32).unwrap();
        q.near = Frontier::vertices(vec![0]);
        assert!(matches!(q.advance_level(&labels), Err(Error::Usage(_))));
    }

    // Re-split oracle: recompute the band of every far vertex from current labels.
    #[test]
    fn stale_far_entry_reclassified() {
        let labels = AtomicArray::from_vec(vec![42u32, 37, 55, 61]);
        let mut q = NearFarQueue::new(10u32).unwrap();
        q.level = 2;
        q.far = Frontier::vertices(vec![0, 1, 2, 3, 1]);
        labels.set(2, 3);
        let q = q.advance_level(&labels).unwrap();

        let current: Vec<u32> = labels.to_vec();
        let min_band = [0usize, 1, 2, 3].iter().map(|&v| current[v] / 10).min().unwrap() as usize;
        let expected_near: Vec<u32> = [0u32, 1, 2, 3].into_iter().filter(|&v| (current[v as usize] / 10) as usize <= min_band).collect();
        assert_eq!(q.level, 0);
        assert_eq!(q.near.items(), &expected_near[..]);
        assert_eq!(q.near.items(), &[2]);
        assert_eq!(q.far.items(), &[0, 1, 3]);
    }
}
