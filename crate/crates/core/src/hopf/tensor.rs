use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::field::RatFunc;
use crate::freealg::{write_linear_combination, AlgebraElement, Relations, Word};

/// A finite ℚ(p,q)-combination of `k`-fold tensors of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, RatFunc>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn unit(arity: usize) -> Self {
        Self::pure(vec![Word::unit(); arity], RatFunc::one())
    }

    pub fn pure(slots: Vec<Word>, c: RatFunc) -> Self {
        let mut out = Self::zero(slots.len());
        out.add_term(slots, c);
        out
    }

    /// `x₁ ⊗ … ⊗ x_k` for elements `x_i`, expanded bilinearly.
    pub fn product_of(factors: &[AlgebraElement]) -> Self {
        let mut out = Self::unit(0);
        for x in factors {
            let mut next = Self::zero(out.arity + 1);
            for (ws, c) in &out.terms {
                for (w, d) in x.terms() {
                    let mut slots = ws.clone();
                    slots.push(w.clone());
                    next.add_term(slots, c * d);
                }
            }
            out = next;
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, slots: Vec<Word>, c: RatFunc) {
        debug_assert_eq!(slots.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RatFunc)> {
        self.terms.iter()
    }

    /// Number of terms. Emptiness is [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_arity(&self, other: &Self) -> Result<(), Error> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.arity, other.arity))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (ws, c) in &other.terms {
            out.add_term(ws.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            out.add_term(ws.clone(), c * k);
        }
        out
    }

    /// The flip `a ⊗ b ↦ b ⊗ a` on a two-fold tensor.
    pub fn swap(&self) -> Result<Self, Error> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch(self.arity, 2));
        }
        let mut out = Self::zero(2);
        for (ws, c) in &self.terms {
            out.add_term(vec![ws[1].clone(), ws[0].clone()], c.clone());
        }
        Ok(out)
    }

    /// Puts every slot in normal form.
    pub fn normalize(&self, rel: &Relations) -> Self {
        let mut out = Self::zero(self.arity);
        for (ws, c) in &self.terms {
            let slots: Vec<AlgebraElement> = ws
                .iter()
                .map(|w| rel.normalize(&AlgebraElement::word(w.clone())))
                .collect();
            for (ws2, d) in &Self::product_of(&slots).terms {
                out.add_term(ws2.clone(), c * d);
            }
        }
        out
    }

    /// Slotwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, slots normalized.
    pub fn multiply(&self, other: &Self, rel: &Relations) -> Result<Self, Error> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (xs, c) in &self.terms {
            for (ys, d) in &other.terms {
                let slots: Vec<AlgebraElement> = xs
                    .iter()
                    .zip(ys)
                    .map(|(x, y)| rel.normalize(&AlgebraElement::word(x.concat(y))))
                    .collect();
                let k = c * d;
                for (ws, e) in &Self::product_of(&slots).terms {
                    out.add_term(ws.clone(), &k * e);
                }
            }
        }
        Ok(out)
    }
}

struct Slots<'a>(&'a [Word]);

impl fmt::Display for Slots<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("(x)")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Terms are listed in decreasing slot order, so `Δ(L(0))` reads
/// `L(0)(x)1 + 1(x)L(0)`.
impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(Slots<'_>, &RatFunc)> = self
            .terms
            .iter()
            .rev()
            .map(|(ws, c)| (Slots(ws), c))
            .collect();
        // A pure `1⊗…⊗1` term already prints its coefficient explicitly.
        write_linear_combination(f, items.iter().map(|(s, c)| (s, *c)), |_| false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Generator::*;

    fn w(letters: &[crate::freealg::Generator]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn unit_is_neutral() {
        let rel = Relations::default();
        let x = TensorElement::pure(vec![w(&[L(1)]), w(&[T])], RatFunc::int(3));
        assert_eq!(TensorElement::unit(2).multiply(&x, &rel).unwrap(), x);
        assert_eq!(x.multiply(&TensorElement::unit(2), &rel).unwrap(), x);
    }

    #[test]
    fn group_likes_cancel() {
        let rel = Relations::default();
        let t = TensorElement::pure(vec![w(&[T]), w(&[T])], RatFunc::one());
        let ti = TensorElement::pure(vec![w(&[Tinv]), w(&[Tinv])], RatFunc::one());
        assert_eq!(t.multiply(&ti, &rel).unwrap(), TensorElement::unit(2));
    }

    #[test]
    fn cross_term_picks_up_weight() {
        // (L_n ⊗ T^n)(T^m ⊗ L_m) = r^{m(n+1)} T^m L_n ⊗ T^n L_m
        let rel = Relations::default();
        let (n, m) = (2, 1);
        let x = TensorElement::pure(vec![w(&[L(n)]), w(&[T, T])], RatFunc::one());
        let y = TensorElement::pure(vec![w(&[T]), w(&[L(m)])], RatFunc::one());
        let got = x.multiply(&y, &rel).unwrap();
        let expected = TensorElement::pure(
            vec![w(&[T, L(n)]), w(&[T, T, L(m)])],
            RatFunc::monomial(-m * (n + 1), m * (n + 1)),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn arity_mismatch() {
        let rel = Relations::default();
        let err = TensorElement::unit(2).multiply(&TensorElement::unit(3), &rel);
        assert_eq!(err.unwrap_err(), Error::ArityMismatch(2, 3));
    }

    #[test]
    fn display() {
        let x = TensorElement::pure(vec![w(&[L(0)]), Word::unit()], RatFunc::one())
            .add(&TensorElement::pure(
                vec![Word::unit(), w(&[L(0)])],
                RatFunc::one(),
            ))
            .unwrap();
        assert_eq!(x.to_string(), "L(0)(x)1 + 1(x)L(0)");
        assert_eq!(TensorElement::zero(2).to_string(), "0");
        assert_eq!(
            TensorElement::unit(2).scale(&RatFunc::int(-2)).to_string(),
            "-2*1(x)1"
        );
    }
}
