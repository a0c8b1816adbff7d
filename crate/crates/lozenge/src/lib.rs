//! Exact lozenge-tiling engine for dented hexagons on the triangular
//! lattice: region builders, exact tiling counters (plain and centrally
//! symmetric), closed-form product formulas, and numeric verification of
//! the shuffling, condensation and base-case identities relating them.

pub mod cell;
pub mod enumerate;
pub mod formulas;
pub mod region;
pub mod spec;
pub mod verify;

pub use cell::{Cell, Lozenge, SigmaCenter};
pub use enumerate::{
    count_cs_tilings, count_cs_with_deletions, count_tilings, count_tilings_backtrack,
    count_with_deletions, enumerate_tilings, is_cs_tiling, nth_tiling, visit_tilings, BigCount,
    Tiling,
};
pub use region::{
    build_cs, build_e, build_e_prime, build_h, build_hexagon, build_r, build_region, build_s,
    build_t, BuildError, Region,
};
pub use spec::{Fern, IndexSet, Orientation, RegionSpec};
