//! The associative algebra `U_{p,q}`: words, linear combinations and the
//! terminating rewriting system that reduces them to normal forms
//! `T^d L_{n_1}^{k_1} ... L_{n_m}^{k_m} C^e`.

mod element;
mod rewrite;
mod word;

pub(crate) use element::write_linear_combination;
pub use element::AlgebraElement;
pub use rewrite::{termination_measure, BasisTerm, R5Variant, Relation, Relations, Strategy};
pub use word::{enumerate_normal_words, random_word, Generator, NormalWord, Word};
