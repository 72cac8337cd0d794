//! Sparse polynomials in `p, q` with arbitrary-precision integer coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order with `p > q`
//! and never carry a zero coefficient, so structural equality is polynomial
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `p^p q^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exp {
    pub p: u32,
    pub q: u32,
}

impl Exp {
    pub const ONE: Exp = Exp { p: 0, q: 0 };

    pub fn new(p: u32, q: u32) -> Self {
        Exp { p, q }
    }

    pub fn degree(self) -> u32 {
        self.p + self.q
    }

    fn checked_sub(self, other: Exp) -> Option<Exp> {
        Some(Exp {
            p: self.p.checked_sub(other.p)?,
            q: self.q.checked_sub(other.q)?,
        })
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.p.cmp(&other.p))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for Exp {
    type Output = Exp;
    fn add(self, o: Exp) -> Exp {
        Exp {
            p: self.p + o.p,
            q: self.q + o.q,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    /// Descending grlex order.
    terms: Vec<(Exp, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(Exp::ONE, c)],
            }
        }
    }

    pub fn monomial(e: Exp, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(e, c)],
            }
        }
    }

    pub fn p() -> Self {
        Self::monomial(Exp::new(1, 0), BigInt::one())
    }

    pub fn q() -> Self {
        Self::monomial(Exp::new(0, 1), BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(iter: I) -> Self {
        let mut acc: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e, c) in iter {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Poly {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exp::ONE && self.terms[0].1.is_one()
    }

    /// The constant value if the polynomial has degree 0 (zero counts).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(e, c)] if *e == Exp::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Exp::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Exp, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_p(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.p).max().unwrap_or(0)
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.q).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        merge(&self.terms, &other.terms, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        merge(&self.terms, &other.terms, true)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Poly {
                terms: self
                    .terms
                    .iter()
                    .map(|(e2, c2)| (*e2 + *e, c2 * c))
                    .collect(),
            };
        }
        Poly::from_terms(
            self.terms
                .iter()
                .flat_map(|(e1, c1)| other.terms.iter().map(move |(e2, c2)| (*e1 + *e2, c1 * c2))),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `p^a q^b`.
    pub fn shift(&self, by: Exp) -> Poly {
        if by == Exp::ONE {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e + by, c.clone()))
                .collect(),
        }
    }

    /// Divides by `p^a q^b`; the caller guarantees divisibility.
    pub fn unshift(&self, by: Exp) -> Poly {
        if by == Exp::ONE {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.checked_sub(by).expect("monomial content not divisible"),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Exp::ONE;
        };
        it.fold(*first, |acc, (e, _)| {
            Exp::new(acc.p.min(e.p), acc.q.min(e.q))
        })
    }

    /// Non-negative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division by an integer that divides every coefficient.
    pub fn div_int(&self, d: &BigInt) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % d).is_zero());
                    (*e, c / d)
                })
                .collect(),
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            if self.terms.iter().all(|(_, x)| (x % &c).is_zero()) {
                return Some(Poly {
                    terms: self.terms.iter().map(|(e, x)| (*e, x / &c)).collect(),
                });
            }
            return None;
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let ne = e.checked_sub(*de)?;
                let (qc, rc) = c.div_rem(dc);
                if !rc.is_zero() {
                    return None;
                }
                out.push((ne, qc));
            }
            return Some(Poly { terms: out });
        }
        let (lde, ldc) = divisor.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.terms.first().cloned() {
            let qe = re.checked_sub(lde)?;
            let (qc, r) = rc.div_rem(&ldc);
            if !r.is_zero() {
                return None;
            }
            rem = rem.sub(&divisor.mul(&Poly::monomial(qe, qc.clone())));
            quot.push((qe, qc));
        }
        Some(Poly::from_terms(quot))
    }

    /// Substitutes `p := 1`.
    pub fn eval_p_one(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (Exp::new(0, e.q), c.clone())),
        )
    }

    /// Substitutes `q := 1`.
    pub fn eval_q_one(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (Exp::new(e.p, 0), c.clone())),
        )
    }
}

fn merge(a: &[(Exp, BigInt)], b: &[(Exp, BigInt)], negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (e, c) in &b[j..] {
        out.push((*e, if negate_b { -c } else { c.clone() }));
    }
    Poly { terms: out }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: Exp) -> fmt::Result {
    let mut first = true;
    for (name, k) in [("p", e.p), ("q", e.q)] {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if k == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *e == Exp::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, *e)?;
            }
        }
        Ok(())
    }
}
