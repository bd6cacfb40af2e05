//! Benchmark-only crate; see `benches/hot_paths.rs`. Shared helpers for
//! setting up benchmark inputs live here.

use qwalk_core::{c64, BasisTag, CoinParameter, CoinVector, Vec3};

pub fn grover() -> CoinParameter {
    CoinParameter::grover()
}

/// A fixed nontrivial state with weight in all three coin directions.
pub fn mixed_state() -> CoinVector {
    let raw = Vec3([c64(0.6, 0.2), c64(-0.3, 0.5), c64(0.4, -0.1)]);
    let scale = c64(1.0 / raw.norm(), 0.0);
    CoinVector::state(raw.scale(scale), BasisTag::Standard).unwrap()
}
