use rayon::prelude::*;

use super::VisitedBitmap;
use crate::Frontier;

/// Entries in each worker's recent-item window.
pub const CULL_WINDOW: usize = 1024;

/// Scratch space for [`idempotent_dedupe`], sized to the id space of the
/// frontiers it will cull and reused across calls.
#[derive(Debug)]
pub struct CullingState {
    seen: VisitedBitmap,
}

impl CullingState {
    pub fn new(id_space: usize) -> Self {
        Self { seen: VisitedBitmap::new(id_space) }
    }
}

#[inline]
fn window_slot(v: u32) -> usize {
    (v.wrapping_mul(0x9E37_79B9) >> 22) as usize % CULL_WINDOW
}

/// Best-effort duplicate removal for idempotent traversals.
///
/// Each worker drops an item it finds in its own recent-item window or in
/// the shared bitmap, which is probed without an atomic read-modify-write.
/// Bits and window slots are only written for kept items, so every distinct
/// input item survives at least once; racing workers may both keep a copy.
pub fn idempotent_dedupe(f: &Frontier, state: &mut CullingState) -> Frontier {
    let seen = &state.seen;
    let parts: Vec<Vec<u32>> = f
        .items()
        .par_iter()
        .with_min_len(1024)
        .fold(
            || (Vec::new(), vec![u32::MAX; CULL_WINDOW]),
            |(mut out, mut window), &v| {
                let slot = window_slot(v);
                if window[slot] != v && !seen.get(v) {
                    window[slot] = v;
                    seen.test_and_set(v);
                    out.push(v);
                }
                (out, window)
            },
        )
        .map(|(out, _)| out)
        .collect();
    let mut items = Vec::with_capacity(parts.iter().map(Vec::len).sum());
    for p in parts {
        items.extend(p);
    }
    items.par_iter().for_each(|&v| {
        seen.clear(v);
    });
    Frontier::new(f.kind(), items).with_generation(f.generation())
}
