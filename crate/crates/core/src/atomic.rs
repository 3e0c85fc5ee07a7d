//! Shared per-vertex and per-edge arrays that functors update from parallel
//! workers. All mutation of problem data goes through these helpers.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::scalar::AtomicScalar;

/// A fixed-length array of atomic cells.
pub struct AtomicArray<T: AtomicScalar> {
    cells: Box<[T::Atomic]>,
}

impl<T: AtomicScalar> AtomicArray<T> {
    pub fn new(len: usize, init: T) -> Self {
        let cells: Vec<T::Atomic> = (0..len).into_par_iter().map(|_| T::new_atomic(init)).collect();
        Self { cells: cells.into_boxed_slice() }
    }

    pub fn from_vec(values: Vec<T>) -> Self {
        let cells: Vec<T::Atomic> = values.into_par_iter().map(T::new_atomic).collect();
        Self { cells: cells.into_boxed_slice() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> T {
        T::atomic_load(&self.cells[i], Ordering::Relaxed)
    }

    #[inline]
    pub fn set(&self, i: usize, value: T) {
        T::atomic_store(&self.cells[i], value, Ordering::Relaxed)
    }

    #[inline]
    pub fn swap(&self, i: usize, value: T) -> T {
        T::atomic_swap(&self.cells[i], value, Ordering::AcqRel)
    }

    #[inline]
    pub fn compare_exchange(&self, i: usize, current: T, new: T) -> Result<T, T> {
        T::atomic_compare_exchange(&self.cells[i], current, new)
    }

    /// Atomic minimum; returns the value held before the update.
    #[inline]
    pub fn fetch_min(&self, i: usize, value: T) -> T {
        T::atomic_fetch_min(&self.cells[i], value)
    }

    /// Atomic addition; returns the value held before the update.
    #[inline]
    pub fn fetch_add(&self, i: usize, value: T) -> T {
        T::atomic_fetch_add(&self.cells[i], value)
    }

    pub fn fill(&self, value: T) {
        self.cells.par_iter().for_each(|c| T::atomic_store(c, value, Ordering::Relaxed));
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.cells.par_iter().map(|c| T::atomic_load(c, Ordering::Relaxed)).collect()
    }
}

impl<T: AtomicScalar + std::fmt::Debug> std::fmt::Debug for AtomicArray<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries((0..self.len()).map(|i| self.get(i))).finish()
    }
}

/// Number of fractional bits used by [`FixedAddArray`].
pub const FIXED_FRACTION_BITS: i32 = 62;

/// Atomic accumulators for non-negative reals below 4, stored in fixed point.
///
/// Integer addition is associative, so the accumulated value does not depend
/// on the order in which workers add their contributions.
pub struct FixedAddArray {
    cells: Box<[AtomicU64]>,
}

impl FixedAddArray {
    pub fn new(len: usize) -> Self {
        Self { cells: (0..len).map(|_| AtomicU64::new(0)).collect() }
    }

    /// Converts a value in `[0, 4)` to fixed point, rounding to nearest.
    #[inline]
    pub fn encode(value: f64) -> u64 {
        debug_assert!((0.0..4.0).contains(&value), "fixed-point value out of range: {value}");
        (value * 2f64.powi(FIXED_FRACTION_BITS)).round() as u64
    }

    #[inline]
    pub fn decode(raw: u64) -> f64 {
        raw as f64 / 2f64.powi(FIXED_FRACTION_BITS)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    #[inline]
    pub fn add_raw(&self, i: usize, raw: u64) {
        self.cells[i].fetch_add(raw, Ordering::Relaxed);
    }

    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        Self::decode(self.cells[i].load(Ordering::Relaxed))
    }

    pub fn clear(&self) {
        self.cells.par_iter().for_each(|c| c.store(0, Ordering::Relaxed));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_array_roundtrip() {
        let a = AtomicArray::from_vec(vec![3u32, 1, 4]);
        assert_eq!(a.fetch_min(0, 2), 3);
        assert_eq!(a.fetch_add(1, 5), 1);
        assert_eq!(a.to_vec(), vec![2, 6, 4]);
    }

    #[test]
    fn fixed_add_is_order_independent() {
        let values = [0.1, 0.2, 0.3, 1e-9, 0.7];
        let forward = FixedAddArray::new(1);
        let backward = FixedAddArray::new(1);
        for v in values {
            forward.add_raw(0, FixedAddArray::encode(v));
        }
        for v in values.iter().rev() {
            backward.add_raw(0, FixedAddArray::encode(*v));
        }
        assert_eq!(forward.get(0).to_bits(), backward.get(0).to_bits());
        assert!((forward.get(0) - 1.300000001).abs() < 1e-15);
    }
}
