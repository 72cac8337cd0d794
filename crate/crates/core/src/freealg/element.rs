use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::word::{Generator, NormalWord, Word};
use crate::field::RatFunc;

/// A finite ℚ(p,q)-linear combination of words. No stored coefficient is zero.
///
/// Elements built by hand or by the parser are not normalized; use
/// [`super::Relations::normalize`] to reduce them to the normal-form basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, RatFunc>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(Word::unit(), c)
    }

    pub fn term(w: Word, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RatFunc::one())
    }

    pub fn gen(g: Generator) -> Self {
        Self::word(Word::new(vec![g]))
    }

    pub fn l(n: i64) -> Self {
        Self::gen(Generator::L(n))
    }

    pub fn t() -> Self {
        Self::gen(Generator::T)
    }

    pub fn tinv() -> Self {
        Self::gen(Generator::Tinv)
    }

    pub fn c() -> Self {
        Self::gen(Generator::C)
    }

    pub fn t_power(d: i64) -> Self {
        Self::word(Word::t_power(d))
    }

    pub fn normal(w: &NormalWord, c: RatFunc) -> Self {
        Self::term(w.to_word(), c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RatFunc)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, RatFunc)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Number of terms. Emptiness is [`Self::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value when the element is a multiple of the unit word.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }

    /// True when every word is a normal form.
    pub fn is_normalized(&self) -> bool {
        self.terms.keys().all(|w| w.as_normal().is_some())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), -x)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Free-algebra product: concatenation of words, no reduction.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// JSON object mapping rendered words to rendered coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| (w.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// True when `c` prints best after a leading minus sign.
fn is_negative(c: &RatFunc) -> bool {
    c.numerator().leading_coeff().is_negative()
}

/// Rendering `c` as a factor: bare when it has no top-level operator.
pub(crate) fn coefficient_factor(c: &RatFunc) -> String {
    let s = c.to_string();
    if s.contains(' ') || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

/// Writes `sum c_i * x_i` with signs pulled out of the coefficients.
pub(crate) fn write_linear_combination<'a, I, X>(
    f: &mut fmt::Formatter<'_>,
    terms: I,
    is_unit: impl Fn(&X) -> bool,
) -> fmt::Result
where
    I: IntoIterator<Item = (&'a X, &'a RatFunc)>,
    X: fmt::Display + 'a,
{
    let mut first = true;
    for (x, c) in terms {
        let neg = is_negative(c);
        let mag = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if is_unit(x) {
            write!(f, "{}", coefficient_factor(&mag))?;
        } else if mag.is_one() {
            write!(f, "{x}")?;
        } else {
            write!(f, "{}*{x}", coefficient_factor(&mag))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter(), |w: &Word| w.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x = AlgebraElement::l(1);
        x.add_term(Word::new(vec![Generator::L(1)]), -RatFunc::one());
        assert!(x.is_zero());
        assert_eq!(x.to_string(), "0");
    }

    #[test]
    fn rendering_pulls_out_signs() {
        let x = AlgebraElement::l(0)
            .scale(&-(&RatFunc::p() + &RatFunc::q()))
            .add(&AlgebraElement::scalar(RatFunc::int(3)))
            .sub(&AlgebraElement::c());
        assert_eq!(x.to_string(), "3 - (p + q)*L(0) - C");
    }

    #[test]
    fn json_export() {
        let x = AlgebraElement::l(2).scale(&RatFunc::q().pow(-1));
        assert_eq!(x.to_json().to_string(), r#"{"L(2)":"1/q"}"#);
    }
}
