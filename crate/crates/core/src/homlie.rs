//! The Hom-Lie algebra `V_{p,q}` on the basis `{L_n, C}`.
//!
//! `[L_n, L_m] = ([m]/p^m - [n]/p^n) L_{n+m} + δ_{n+m,0} g(n) C`, with
//! `g(n) = (q/p)^{-n} / (6 (1 + (q/p)^n)) · [n-1]/p^{n-1} · [n]/p^n · [n+1]/p^{n+1}`,
//! `C` central, and twist `α(L_n) = (1 + (q/p)^n) L_n`, `α(C) = C`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{pq_int_normalized, RatFunc};

/// `[m]/p^m - [n]/p^n`, the `L_{n+m}` coefficient of `[L_n, L_m]`.
pub fn bracket_coefficient(n: i64, m: i64) -> RatFunc {
    &pq_int_normalized(m) - &pq_int_normalized(n)
}

/// The central coefficient `g(n)`.
pub fn central_coefficient(n: i64) -> RatFunc {
    let product = &(&pq_int_normalized(n - 1) * &pq_int_normalized(n)) * &pq_int_normalized(n + 1);
    if product.is_zero() {
        return RatFunc::zero();
    }
    let denom = (&RatFunc::one() + &RatFunc::ratio_power(n)) * RatFunc::int(6);
    let lead = RatFunc::ratio_power(-n)
        .checked_div(&denom)
        .expect("1 + (q/p)^n is nonzero in Q(p,q)");
    &lead * &product
}

/// The twist eigenvalue `1 + (q/p)^n` on `L_n`.
pub fn alpha_coefficient(n: i64) -> RatFunc {
    &RatFunc::one() + &RatFunc::ratio_power(n)
}

/// A finite combination `sum a_n L_n + c C`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomLieElement {
    l_coeffs: BTreeMap<i64, RatFunc>,
    c_coeff: RatFunc,
}

impl HomLieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn l(n: i64) -> Self {
        Self::l_scaled(n, RatFunc::one())
    }

    pub fn l_scaled(n: i64, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_l(n, c);
        out
    }

    pub fn c() -> Self {
        Self::c_scaled(RatFunc::one())
    }

    pub fn c_scaled(c: RatFunc) -> Self {
        HomLieElement {
            l_coeffs: BTreeMap::new(),
            c_coeff: c,
        }
    }

    fn add_l(&mut self, n: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = match self.l_coeffs.remove(&n) {
            Some(old) => &old + &c,
            None => c,
        };
        if !s.is_zero() {
            self.l_coeffs.insert(n, s);
        }
    }

    pub fn l_coeff(&self, n: i64) -> RatFunc {
        self.l_coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn l_terms(&self) -> impl Iterator<Item = (i64, &RatFunc)> {
        self.l_coeffs.iter().map(|(&n, c)| (n, c))
    }

    pub fn c_coeff(&self) -> &RatFunc {
        &self.c_coeff
    }

    pub fn is_zero(&self) -> bool {
        self.l_coeffs.is_empty() && self.c_coeff.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, c) in &other.l_coeffs {
            out.add_l(n, c.clone());
        }
        out.c_coeff = &out.c_coeff + &other.c_coeff;
        out
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (&n, c) in &self.l_coeffs {
            out.add_l(n, c * k);
        }
        out.c_coeff = &self.c_coeff * k;
        out
    }
}

impl fmt::Display for HomLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        #[derive(PartialEq)]
        enum B {
            L(i64),
            C,
        }
        impl fmt::Display for B {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self {
                    B::L(n) => write!(f, "L({n})"),
                    B::C => f.write_str("C"),
                }
            }
        }
        let mut items: Vec<(B, RatFunc)> = self
            .l_coeffs
            .iter()
            .map(|(&n, c)| (B::L(n), c.clone()))
            .collect();
        if !self.c_coeff.is_zero() {
            items.push((B::C, self.c_coeff.clone()));
        }
        crate::freealg::write_linear_combination(f, items.iter().map(|(b, c)| (b, c)), |_| false)
    }
}

/// Bilinear bracket; `C` is central.
pub fn vbracket(x: &HomLieElement, y: &HomLieElement) -> HomLieElement {
    let mut out = HomLieElement::zero();
    for (&n, a) in &x.l_coeffs {
        for (&m, b) in &y.l_coeffs {
            let k = a * b;
            out.add_l(n + m, &k * &bracket_coefficient(n, m));
            if n + m == 0 {
                out.c_coeff = &out.c_coeff + &(&k * &central_coefficient(n));
            }
        }
    }
    out
}

/// The twist `α`.
pub fn alpha(x: &HomLieElement) -> HomLieElement {
    let mut out = HomLieElement::c_scaled(x.c_coeff.clone());
    for (&n, c) in &x.l_coeffs {
        out.add_l(n, c * &alpha_coefficient(n));
    }
    out
}

/// `[L_n, L_m] + [L_m, L_n]`.
pub fn skew_residual(n: i64, m: i64) -> HomLieElement {
    let (a, b) = (HomLieElement::l(n), HomLieElement::l(m));
    vbracket(&a, &b).add(&vbracket(&b, &a))
}

/// `[α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]]` for arbitrary elements.
pub fn hom_jacobi(x: &HomLieElement, y: &HomLieElement, z: &HomLieElement) -> HomLieElement {
    vbracket(&alpha(x), &vbracket(y, z))
        .add(&vbracket(&alpha(y), &vbracket(z, x)))
        .add(&vbracket(&alpha(z), &vbracket(x, y)))
}

/// The Hom-Jacobi sum on basis elements `L_n, L_m, L_k`.
pub fn hom_jacobi_residual(n: i64, m: i64, k: i64) -> HomLieElement {
    hom_jacobi(
        &HomLieElement::l(n),
        &HomLieElement::l(m),
        &HomLieElement::l(k),
    )
}

/// `[α(L_n), α(L_m)] - α([L_n, L_m])`; nonzero witnesses that `α` is not
/// multiplicative.
pub fn multiplicativity_defect(n: i64, m: i64) -> HomLieElement {
    let (a, b) = (HomLieElement::l(n), HomLieElement::l(m));
    vbracket(&alpha(&a), &alpha(&b)).add(&alpha(&vbracket(&a, &b)).scale(&RatFunc::int(-1)))
}

/// One row of the structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstant {
    pub n: i64,
    pub m: i64,
    #[serde(rename = "coeff_L")]
    pub coeff_l: String,
    #[serde(rename = "coeff_C")]
    pub coeff_c: String,
}

/// `[L_n, L_m]` coefficients for all `n, m` in `window`, sorted by `(n, m)`.
pub fn structure_constants(window: std::ops::RangeInclusive<i64>) -> Vec<StructureConstant> {
    let mut out = Vec::new();
    for n in window.clone() {
        for m in window.clone() {
            let cc = if n + m == 0 {
                central_coefficient(n)
            } else {
                RatFunc::zero()
            };
            out.push(StructureConstant {
                n,
                m,
                coeff_l: bracket_coefficient(n, m).to_string(),
                coeff_c: cc.to_string(),
            });
        }
    }
    out
}
