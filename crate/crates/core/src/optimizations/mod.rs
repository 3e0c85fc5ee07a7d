//! Frontier-level optimizations: idempotent duplicate culling, push/pull
//! direction switching, and the two-level near/far priority queue.

mod bitmap;
mod dedupe;
mod direction;
mod near_far;

pub use bitmap::VisitedBitmap;
pub use dedupe::{idempotent_dedupe, CullingState, CULL_WINDOW};
pub use direction::{decide_direction, pull_advance, Direction, DirectionMode};
pub use near_far::{split_near_far, NearFarQueue};
