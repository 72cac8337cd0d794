//! Quantum integers `{n}_q = (q^n - 1)/(q - 1)` and `[n]_{p,q} = (p^n - q^n)/(p - q)`.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Exp, Poly};
use super::RatFunc;

/// One-parameter quantum integer `{n}_q`.
///
/// For `n >= 0` this is `1 + q + ... + q^{n-1}`; negative arguments use
/// `{-k}_q = -q^{-k} {k}_q`.
pub fn q_int(n: i64) -> RatFunc {
    let k = n.unsigned_abs() as u32;
    let poly = Poly::from_terms((0..k).map(|i| (Exp::new(0, i), BigInt::one())));
    let base = RatFunc::from_poly(poly);
    if n >= 0 {
        base
    } else {
        -base.scale_monomial(0, n)
    }
}

/// Two-parameter quantum integer `[n]_{p,q}`.
///
/// For `n >= 0` this is `sum_{i<n} p^{n-1-i} q^i`; negative arguments use
/// `[-k] = -(pq)^{-k} [k]`.
pub fn pq_int(n: i64) -> RatFunc {
    let k = n.unsigned_abs() as u32;
    let poly = Poly::from_terms((0..k).map(|i| (Exp::new(k - 1 - i, i), BigInt::one())));
    let base = RatFunc::from_poly(poly);
    if n >= 0 {
        base
    } else {
        -base.scale_monomial(n, n)
    }
}

/// `[n]_{p,q} / p^n`, the normalized quantum integer that appears in every
/// bracket coefficient. Equals `(1 - (q/p)^n)/(p - q)`.
pub fn pq_int_normalized(n: i64) -> RatFunc {
    pq_int(n).scale_monomial(-n, 0)
}
