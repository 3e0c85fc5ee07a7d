//! Scalar traits the primitives are generic over.
//!
//! Edge weights and shortest-path labels use an unsigned integer type
//! ([`Weight`]); ranks and centrality scores use a float type ([`Real`]).
//! Both need an atomic cell type so functors can update shared problem
//! arrays from parallel workers, which is what [`AtomicScalar`] provides.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::iter::Sum;
use std::sync::atomic::{AtomicI32, AtomicI64, AtomicU32, AtomicU64, AtomicUsize, Ordering};

use num_traits::{Float, FromPrimitive, NumCast, PrimInt, ToPrimitive, Unsigned};

/// A plain value type with a matching lock-free atomic cell.
pub trait AtomicScalar: Copy + Send + Sync + 'static {
    type Atomic: Send + Sync;

    fn new_atomic(value: Self) -> Self::Atomic;
    fn atomic_load(cell: &Self::Atomic, order: Ordering) -> Self;
    fn atomic_store(cell: &Self::Atomic, value: Self, order: Ordering);
    fn atomic_swap(cell: &Self::Atomic, value: Self, order: Ordering) -> Self;
    /// Returns `Ok(previous)` on success, `Err(actual)` otherwise.
    fn atomic_compare_exchange(cell: &Self::Atomic, current: Self, new: Self) -> Result<Self, Self>;
    /// Stores `min(current, value)`, returning the previous value.
    fn atomic_fetch_min(cell: &Self::Atomic, value: Self) -> Self;
    /// Adds `value`, returning the previous value.
    fn atomic_fetch_add(cell: &Self::Atomic, value: Self) -> Self;
}

macro_rules! impl_atomic_int {
    ($($t:ty => $a:ty),* $(,)?) => {$(
        impl AtomicScalar for $t {
            type Atomic = $a;

            #[inline]
            fn new_atomic(value: Self) -> $a {
                <$a>::new(value)
            }
            #[inline]
            fn atomic_load(cell: &$a, order: Ordering) -> Self {
                cell.load(order)
            }
            #[inline]
            fn atomic_store(cell: &$a, value: Self, order: Ordering) {
                cell.store(value, order)
            }
            #[inline]
            fn atomic_swap(cell: &$a, value: Self, order: Ordering) -> Self {
                cell.swap(value, order)
            }
            #[inline]
            fn atomic_compare_exchange(cell: &$a, current: Self, new: Self) -> Result<Self, Self> {
                cell.compare_exchange(current, new, Ordering::AcqRel, Ordering::Acquire)
            }
            #[inline]
            fn atomic_fetch_min(cell: &$a, value: Self) -> Self {
                cell.fetch_min(value, Ordering::AcqRel)
            }
            #[inline]
            fn atomic_fetch_add(cell: &$a, value: Self) -> Self {
                cell.fetch_add(value, Ordering::AcqRel)
            }
        }
    )*};
}

impl_atomic_int!(
    u32 => AtomicU32,
    u64 => AtomicU64,
    usize => AtomicUsize,
    i32 => AtomicI32,
    i64 => AtomicI64,
);

macro_rules! impl_atomic_float {
    ($($t:ty => $a:ty),* $(,)?) => {$(
        impl AtomicScalar for $t {
            type Atomic = $a;

            #[inline]
            fn new_atomic(value: Self) -> $a {
                <$a>::new(value.to_bits())
            }
            #[inline]
            fn atomic_load(cell: &$a, order: Ordering) -> Self {
                <$t>::from_bits(cell.load(order))
            }
            #[inline]
            fn atomic_store(cell: &$a, value: Self, order: Ordering) {
                cell.store(value.to_bits(), order)
            }
            #[inline]
            fn atomic_swap(cell: &$a, value: Self, order: Ordering) -> Self {
                <$t>::from_bits(cell.swap(value.to_bits(), order))
            }
            #[inline]
            fn atomic_compare_exchange(cell: &$a, current: Self, new: Self) -> Result<Self, Self> {
                cell.compare_exchange(current.to_bits(), new.to_bits(), Ordering::AcqRel, Ordering::Acquire)
                    .map(<$t>::from_bits)
                    .map_err(<$t>::from_bits)
            }
            fn atomic_fetch_min(cell: &$a, value: Self) -> Self {
                let mut seen = cell.load(Ordering::Acquire);
                loop {
                    let current = <$t>::from_bits(seen);
                    if value.partial_cmp(&current) != Some(std::cmp::Ordering::Less) {
                        return current;
                    }
                    match cell.compare_exchange_weak(seen, value.to_bits(), Ordering::AcqRel, Ordering::Acquire) {
                        Ok(_) => return current,
                        Err(actual) => seen = actual,
                    }
                }
            }
            fn atomic_fetch_add(cell: &$a, value: Self) -> Self {
                let mut seen = cell.load(Ordering::Acquire);
                loop {
                    let current = <$t>::from_bits(seen);
                    let next = (current + value).to_bits();
                    match cell.compare_exchange_weak(seen, next, Ordering::AcqRel, Ordering::Acquire) {
                        Ok(_) => return current,
                        Err(actual) => seen = actual,
                    }
                }
            }
        }
    )*};
}

impl_atomic_float!(f32 => AtomicU32, f64 => AtomicU64);

/// Non-negative integer edge weight, also used as the shortest-path label type.
pub trait Weight:
    PrimInt + Unsigned + AtomicScalar + NumCast + Hash + Default + Debug + Display + Send + Sync
{
    /// Adds without wrapping; `max_value()` doubles as the "unreached" label.
    #[inline]
    fn saturating_sum(self, other: Self) -> Self {
        self.saturating_add(other)
    }
}

impl Weight for u32 {}
impl Weight for u64 {}
impl Weight for usize {}

/// Floating point type for ranks and centrality scores.
pub trait Real:
    Float + AtomicScalar + FromPrimitive + ToPrimitive + Sum + Default + Debug + Display + Send + Sync
{
}

impl Real for f32 {}
impl Real for f64 {}
