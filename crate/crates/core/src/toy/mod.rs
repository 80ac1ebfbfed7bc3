//! Two small instances used as test beds and oracles: the free commutative
//! monoid `N^k` and the cyclic group `Z/n`.

mod cyclic;
mod nk;

pub use cyclic::{Cyclic, CyclicElement};
pub use nk::{FreeAbelian, VecElement};
