//! Exact computations with numerical semigroup rings `R = k[[t^{a_1}, ..., t^{a_l}]]`
//! and their monomial fractional ideals.
//!
//! * [`semigroup`]: the semigroup `H`, its gaps, Frobenius number and
//!   per-residue gap maxima.
//! * [`ideal`]: monomial ideals as `H`-closed exponent sets, with colons,
//!   products, the canonical ideal, duals and endomorphism rings.
//! * [`torsion`]: the length of the torsion part of `I ⊗ J`.
//! * [`conjecture`]: classification of `I` by torsion in `I ⊗ Hom(I, K_R)`
//!   and exhaustive search over all monomial ideals of a ring.
//!
//! ```
//! use numsemi::{MonomialIdeal, NumericalSemigroup, torsion};
//!
//! let h: NumericalSemigroup = "8,11,14,15".parse().unwrap();
//! let i = MonomialIdeal::from_generators(&h, &[0, 1]).unwrap();
//! assert_eq!(i.dual().to_string(), "(1, t^3)");
//! assert_eq!(torsion::torsion_self(&i).length, 1);
//! ```

pub mod conjecture;
pub mod error;
pub mod ideal;
pub mod semigroup;
pub mod torsion;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use semigroup::NumericalSemigroup;
pub use torsion::TorsionReport;
