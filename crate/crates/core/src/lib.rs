//! Left-cancellative monoids with right lcms, their groups of right
//! fractions, and constructive torsion witnesses.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! * [`monoid`]: the [`LcmMonoid`] contract and lcm certificates.
//! * [`toy`], [`braid`], [`klein`]: the instances `N^k`, `Z/n`, `B_n^+` and
//!   `<x, y | x^2 = y^2>+`.
//! * [`fraction`]: the group of right fractions of any instance.
//! * [`torsion`]: the pair chain, its identities and torsion witnesses.
//! * [`oracle`]: brute-force searches used to check all of the above.
//!
//! ```
//! use lcm_core::braid::PositiveBraids;
//! use lcm_core::torsion::{torsion_check, TorsionVerdict};
//! use lcm_core::{Fraction, LcmMonoid};
//!
//! let b = PositiveBraids::new(4)?;
//! let cert = b.right_lcm(&b.generator(0)?, &b.generator(1)?)?;
//! assert!(cert.is_sound(&b)?);
//!
//! let z = Fraction::new(b.generator(0)?, b.generator(2)?);
//! assert_eq!(torsion_check(&b, &z, 6)?, TorsionVerdict::NoTorsionUpTo(6));
//! # Ok::<(), lcm_core::MonoidError>(())
//! ```
#![no_std]

extern crate alloc;

pub mod braid;
pub mod error;
pub mod fraction;
pub mod klein;
pub mod monoid;
pub mod oracle;
pub mod smith;
pub mod torsion;
pub mod toy;
pub mod twist;

pub use error::{MonoidError, Result};
pub use fraction::{Fraction, FractionGroup};
pub use monoid::{LcmCertificate, LcmMonoid, MonoidCapabilities, SignedLetter};
