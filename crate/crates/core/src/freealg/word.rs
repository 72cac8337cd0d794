use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator of `U_{p,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    T,
    Tinv,
    L(i64),
    C,
}

impl Generator {
    pub fn is_t(self) -> bool {
        matches!(self, Generator::T | Generator::Tinv)
    }

    pub fn is_l(self) -> bool {
        matches!(self, Generator::L(_))
    }
}

/// A finite product of generators; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `T^d` for any integer `d`, spelled with `T⁻¹` letters when negative.
    pub fn t_power(d: i64) -> Word {
        let g = if d >= 0 {
            Generator::T
        } else {
            Generator::Tinv
        };
        Word(vec![g; d.unsigned_abs() as usize])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Parses the word as a normal form, if it is one.
    pub fn as_normal(&self) -> Option<NormalWord> {
        NormalWord::from_word(self)
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Renders runs of equal letters as powers: `T^2 L(1) L(3)^2 C`,
/// with `T⁻¹` runs written `T^-k`. The unit renders as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            let k = j - i;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match g {
                Generator::T if k == 1 => f.write_str("T")?,
                Generator::T => write!(f, "T^{k}")?,
                Generator::Tinv => write!(f, "T^-{k}")?,
                Generator::L(n) if k == 1 => write!(f, "L({n})")?,
                Generator::L(n) => write!(f, "L({n})^{k}")?,
                Generator::C if k == 1 => f.write_str("C")?,
                Generator::C => write!(f, "C^{k}")?,
            }
            i = j;
        }
        Ok(())
    }
}

/// A basis monomial `T^d L_{n_1}^{k_1} ... L_{n_m}^{k_m} C^{e}` with
/// `n_1 < ... < n_m` and every `k_i > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalWord {
    pub t_exp: i64,
    pub l_part: Vec<(i64, u32)>,
    pub c_exp: u32,
}

impl NormalWord {
    pub fn unit() -> Self {
        NormalWord::default()
    }

    /// Validating constructor.
    pub fn new(t_exp: i64, l_part: Vec<(i64, u32)>, c_exp: u32) -> Option<Self> {
        let increasing = l_part.windows(2).all(|w| w[0].0 < w[1].0);
        let positive = l_part.iter().all(|&(_, k)| k > 0);
        (increasing && positive).then_some(NormalWord {
            t_exp,
            l_part,
            c_exp,
        })
    }

    /// Number of `L` and `C` letters.
    pub fn degree(&self) -> u32 {
        self.l_part.iter().map(|&(_, k)| k).sum::<u32>() + self.c_exp
    }

    pub fn l_count(&self) -> u32 {
        self.l_part.iter().map(|&(_, k)| k).sum()
    }

    /// Sum over `L` letters of `n + 1`, the exponent that `T` picks up when
    /// commuted past this word's `L` part.
    pub fn t_weight(&self) -> i64 {
        self.l_part.iter().map(|&(n, k)| (n + 1) * k as i64).sum()
    }

    pub fn to_word(&self) -> Word {
        let mut v = Word::t_power(self.t_exp).into_letters();
        for &(n, k) in &self.l_part {
            v.extend(std::iter::repeat_n(Generator::L(n), k as usize));
        }
        v.extend(std::iter::repeat_n(Generator::C, self.c_exp as usize));
        Word(v)
    }

    pub fn from_word(w: &Word) -> Option<Self> {
        let letters = w.letters();
        let mut i = 0;
        let mut t_exp = 0i64;
        if let Some(&first) = letters.first() {
            if first.is_t() {
                while i < letters.len() && letters[i] == first {
                    i += 1;
                }
                t_exp = if first == Generator::T {
                    i as i64
                } else {
                    -(i as i64)
                };
            }
        }
        let mut l_part: Vec<(i64, u32)> = Vec::new();
        while i < letters.len() {
            match letters[i] {
                Generator::L(n) => {
                    match l_part.last_mut() {
                        Some((m, k)) if *m == n => *k += 1,
                        Some((m, _)) if *m > n => return None,
                        _ => l_part.push((n, 1)),
                    }
                    i += 1;
                }
                _ => break,
            }
        }
        let c_start = i;
        while i < letters.len() && letters[i] == Generator::C {
            i += 1;
        }
        if i != letters.len() {
            return None;
        }
        Some(NormalWord {
            t_exp,
            l_part,
            c_exp: (i - c_start) as u32,
        })
    }

    /// Splits `T^d · M` into the Laurent factor `d` and the `L/C` monomial `M`.
    pub fn factor(&self) -> (i64, NormalWord) {
        (
            self.t_exp,
            NormalWord {
                t_exp: 0,
                l_part: self.l_part.clone(),
                c_exp: self.c_exp,
            },
        )
    }

    /// Inverse of [`NormalWord::factor`].
    pub fn compose(t_exp: i64, lc: &NormalWord) -> NormalWord {
        NormalWord {
            t_exp,
            l_part: lc.l_part.clone(),
            c_exp: lc.c_exp,
        }
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

/// All normal words with `t_exp` in `t_range`, indices in `index_range` and
/// degree (number of `L` and `C` letters) at most `max_degree`.
pub fn enumerate_normal_words(
    t_range: std::ops::RangeInclusive<i64>,
    index_range: std::ops::RangeInclusive<i64>,
    max_degree: u32,
) -> Vec<NormalWord> {
    let indices: Vec<i64> = index_range.collect();
    let mut l_parts: Vec<Vec<(i64, u32)>> = Vec::new();
    fn rec(
        indices: &[i64],
        budget: u32,
        cur: &mut Vec<(i64, u32)>,
        out: &mut Vec<Vec<(i64, u32)>>,
    ) {
        out.push(cur.clone());
        for (pos, &n) in indices.iter().enumerate() {
            for k in 1..=budget {
                cur.push((n, k));
                rec(&indices[pos + 1..], budget - k, cur, out);
                cur.pop();
            }
        }
    }
    rec(&indices, max_degree, &mut Vec::new(), &mut l_parts);
    let mut out = Vec::new();
    for d in t_range {
        for lp in &l_parts {
            let used: u32 = lp.iter().map(|&(_, k)| k).sum();
            for c in 0..=(max_degree - used) {
                out.push(NormalWord {
                    t_exp: d,
                    l_part: lp.clone(),
                    c_exp: c,
                });
            }
        }
    }
    out.sort();
    out
}

/// A uniformly random word: length in `0..=max_len`, each letter drawn from
/// `T, T⁻¹, C` and `L_n` for `n` in `indices`, all equally likely.
pub fn random_word<R: rand::Rng + ?Sized>(
    rng: &mut R,
    max_len: usize,
    indices: std::ops::RangeInclusive<i64>,
) -> Word {
    let len = rng.gen_range(0..=max_len);
    let (lo, hi) = (*indices.start(), *indices.end());
    let n_l = (hi - lo + 1) as usize;
    (0..len)
        .map(|_| match rng.gen_range(0..n_l + 3) {
            0 => Generator::T,
            1 => Generator::Tinv,
            2 => Generator::C,
            k => Generator::L(lo + (k - 3) as i64),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn render_normal_word() {
        let w = NormalWord::new(2, vec![(-1, 1), (3, 2)], 1).unwrap();
        assert_eq!(w.to_string(), "T^2 L(-1) L(3)^2 C");
        assert_eq!(NormalWord::unit().to_string(), "1");
        assert_eq!(
            NormalWord::new(-3, vec![], 2).unwrap().to_string(),
            "T^-3 C^2"
        );
    }

    #[test]
    fn normal_word_round_trips_through_word() {
        let w = NormalWord::new(-2, vec![(0, 2), (4, 1)], 3).unwrap();
        assert_eq!(NormalWord::from_word(&w.to_word()), Some(w));
    }

    #[test]
    fn non_normal_words_are_rejected() {
        for letters in [
            vec![L(1), T],
            vec![C, L(0)],
            vec![L(2), L(1)],
            vec![T, Tinv],
            vec![C, T],
        ] {
            assert_eq!(
                NormalWord::from_word(&Word::new(letters.clone())),
                None,
                "{letters:?}"
            );
        }
    }

    #[test]
    fn invalid_normal_word_construction() {
        assert!(NormalWord::new(0, vec![(2, 1), (1, 1)], 0).is_none());
        assert!(NormalWord::new(0, vec![(1, 0)], 0).is_none());
    }

    #[test]
    fn enumeration_counts() {
        // Degree <= 1 over indices {0, 1}: 1, L0, L1, C -> 4 per T exponent.
        assert_eq!(enumerate_normal_words(0..=0, 0..=1, 1).len(), 4);
        assert_eq!(enumerate_normal_words(-1..=1, 0..=1, 1).len(), 12);
    }

    #[test]
    fn random_words_respect_bounds() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_word(&mut rng, 5, -2..=2);
            assert!(w.len() <= 5);
            assert!(w
                .letters()
                .iter()
                .all(|g| !matches!(g, L(n) if n.abs() > 2)));
        }
    }
}
