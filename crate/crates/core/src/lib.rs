//! Symbolic algebra for the two-parameter deformed Virasoro algebra `V_{p,q}`
//! and the associated quantum group `U_{p,q}`.
//!
//! * [`field`]: exact arithmetic in ℚ(p, q) and quantum integers.
//! * [`freealg`]: words in `T, T⁻¹, L_n, C`, the rewriting system and normal forms.
//! * [`oscillator`]: truncated Fock-space matrices for the deformed boson.
//! * [`homlie`]: the Hom-Lie bracket and twist on `{L_n, C}`.
//! * [`hopf`]: coproduct, counit and antipode with axiom residuals.

mod error;
pub mod field;
pub mod freealg;
pub mod homlie;
pub mod hopf;
pub mod oscillator;

pub use error::Error;
pub use field::{pq_int, q_int, RatFunc};
pub use freealg::{AlgebraElement, Generator, NormalWord, Relations, Word};
pub use homlie::HomLieElement;
pub use hopf::{CoproductC, HopfAlgebra, HopfMap, TensorElement};
pub use oscillator::{FockOperator, GuardSpec, Mode, Oscillator};
