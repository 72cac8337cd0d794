//! Truncated Fock-space realization of the deformed boson and of
//! `L_n = (a⁺)^{n+1} a`.
//!
//! The basis is `|0⟩, …, |N-1⟩`. `a⁺` raises (and kills `|N-1⟩`), `a` lowers
//! with weight `λ_k`. Identities are only asserted on the columns a
//! [`GuardSpec`] declares safe from truncation.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::field::{pq_int, pq_int_normalized, q_int, RatFunc};
use crate::freealg::{AlgebraElement, Generator};

/// Which oscillator algebra the matrices realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `a a⁺ - a⁺ a = 1`.
    Classical,
    /// `a a⁺ - q a⁺ a = 1`.
    OneParam,
    /// `p a a⁺ - q a⁺ a = 1`.
    TwoParam,
}

impl Mode {
    /// The lowering weight `a|k⟩ = λ_k |k-1⟩`.
    pub fn lambda(self, k: i64) -> RatFunc {
        match self {
            Mode::Classical => RatFunc::int(k),
            Mode::OneParam => q_int(k),
            Mode::TwoParam => pq_int_normalized(k),
        }
    }

    /// `(α, β, c)` with `α a (a⁺)ⁿ - β (a⁺)ⁿ a = c (a⁺)^{n-1}`.
    pub fn power_commutator_coefficients(self, n: i64) -> (RatFunc, RatFunc, RatFunc) {
        match self {
            Mode::Classical => (RatFunc::one(), RatFunc::one(), RatFunc::int(n)),
            Mode::OneParam => (RatFunc::one(), RatFunc::q().pow(n), q_int(n)),
            Mode::TwoParam => (RatFunc::p().pow(n), RatFunc::q().pow(n), pq_int(n)),
        }
    }

    /// `(α, β, c)` with `α L_n L_m - β L_m L_n = c L_{n+m}`.
    pub fn bracket_coefficients(self, n: i64, m: i64) -> (RatFunc, RatFunc, RatFunc) {
        match self {
            Mode::Classical => (RatFunc::one(), RatFunc::one(), RatFunc::int(m - n)),
            Mode::OneParam => (
                RatFunc::q().pow(n),
                RatFunc::q().pow(m),
                &q_int(m) - &q_int(n),
            ),
            Mode::TwoParam => (
                RatFunc::ratio_power(n),
                RatFunc::ratio_power(m),
                &pq_int_normalized(m) - &pq_int_normalized(n),
            ),
        }
    }
}

/// An `N × N` matrix over ℚ(p,q), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockOperator {
    dim: usize,
    entries: Vec<RatFunc>,
}

impl FockOperator {
    pub fn zeros(dim: usize) -> Self {
        FockOperator {
            dim,
            entries: vec![RatFunc::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut out = Self::zeros(dim);
        for i in 0..dim {
            out.set(i, i, RatFunc::one());
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &RatFunc {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RatFunc) {
        self.entries[row * self.dim + col] = value;
    }

    fn check_dim(&self, other: &Self) -> Result<(), Error> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, Error> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n);
        // Fock operators are very sparse; skip zero rows of the inner product.
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.dim);
        for _ in 0..k {
            out = out.matmul(self).expect("same dimension");
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_dim(other)?;
        Ok(FockOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_dim(other)?;
        Ok(FockOperator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        FockOperator {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    /// Zeroes every column outside `cols`.
    pub fn restrict_columns(&self, cols: std::ops::Range<usize>) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !cols.contains(&j) {
                    out.set(i, j, RatFunc::zero());
                }
            }
        }
        out
    }

    pub fn specialize_p1(&self) -> Result<Self, Error> {
        self.map_entries(RatFunc::specialize_p1)
    }

    pub fn specialize_q1(&self) -> Result<Self, Error> {
        self.map_entries(RatFunc::specialize_q1)
    }

    fn map_entries(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, Error>) -> Result<Self, Error> {
        Ok(FockOperator {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Nonzero entries as `(row, col, value)`, in row-major order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &RatFunc)> {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i / n, i % n, v))
            .collect()
    }

    /// One line per row, comma separated entry strings.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            w.write_record(&row).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("utf-8")
    }

    /// `{"dim": N, "entries": [[row, col, "value"], ...]}` listing nonzero entries.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .nonzero_entries()
            .into_iter()
            .map(|(i, j, v)| serde_json::json!([i, j, v.to_string()]))
            .collect();
        serde_json::json!({ "dim": self.dim, "entries": entries })
    }
}

impl fmt::Display for FockOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, v) in self.nonzero_entries() {
            writeln!(f, "({i},{j}) {v}")?;
        }
        Ok(())
    }
}

/// Columns on which a product of at most `word_length` letters, each raising
/// the occupation number by at most `max_shift`, never touches the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuardSpec {
    pub dim: usize,
    pub word_length: usize,
    pub max_shift: usize,
}

impl GuardSpec {
    pub fn new(dim: usize, word_length: usize, max_shift: usize) -> Result<Self, Error> {
        let g = GuardSpec {
            dim,
            word_length,
            max_shift,
        };
        if word_length * max_shift >= dim {
            return Err(Error::GuardViolation(format!(
                "no safe columns for word length {word_length}, shift {max_shift} at N = {dim}"
            )));
        }
        Ok(g)
    }

    /// `0..N-w·s`.
    pub fn safe_columns(&self) -> std::ops::Range<usize> {
        0..self.dim - self.word_length * self.max_shift
    }

    fn require(&self, dim: usize, word_length: usize, max_shift: usize) -> Result<(), Error> {
        if self.dim != dim {
            return Err(Error::DimensionMismatch(self.dim, dim));
        }
        if self.word_length < word_length || self.max_shift < max_shift {
            return Err(Error::GuardViolation(format!(
                "guard (w = {}, s = {}) too narrow for (w = {word_length}, s = {max_shift})",
                self.word_length, self.max_shift
            )));
        }
        Ok(())
    }
}

/// `a` and `a⁺` on an `N`-dimensional truncation.
#[derive(Clone, Debug)]
pub struct Oscillator {
    mode: Mode,
    a: FockOperator,
    a_plus: FockOperator,
}

/// `(a, a⁺)` for the given mode.
pub fn make_oscillator(dim: usize, mode: Mode) -> Result<(FockOperator, FockOperator), Error> {
    let osc = Oscillator::new(dim, mode)?;
    Ok((osc.a, osc.a_plus))
}

impl Oscillator {
    pub fn new(dim: usize, mode: Mode) -> Result<Self, Error> {
        if dim < 3 {
            return Err(Error::InvalidDimension(dim));
        }
        let mut a = FockOperator::zeros(dim);
        let mut a_plus = FockOperator::zeros(dim);
        for k in 1..dim {
            a.set(k - 1, k, mode.lambda(k as i64));
            a_plus.set(k, k - 1, RatFunc::one());
        }
        Ok(Oscillator { mode, a, a_plus })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.a.dim
    }

    pub fn a(&self) -> &FockOperator {
        &self.a
    }

    pub fn a_plus(&self) -> &FockOperator {
        &self.a_plus
    }

    /// `L_n = (a⁺)^{n+1} a`.
    pub fn l(&self, n: i64) -> Result<FockOperator, Error> {
        if n < -1 {
            return Err(Error::UnsupportedIndex(n));
        }
        self.a_plus.pow((n + 1) as u32).matmul(&self.a)
    }

    /// Matrix image of an element in the `T`-free sector; `C` acts as 0.
    pub fn image(&self, x: &AlgebraElement) -> Result<FockOperator, Error> {
        let mut out = FockOperator::zeros(self.dim());
        for (w, c) in x.terms() {
            let mut m = FockOperator::identity(self.dim());
            for &g in w.letters() {
                let letter = match g {
                    Generator::T | Generator::Tinv => return Err(Error::NoFockImage),
                    Generator::C => FockOperator::zeros(self.dim()),
                    Generator::L(n) => self.l(n)?,
                };
                m = m.matmul(&letter)?;
            }
            out = out.add(&m.scale(c))?;
        }
        Ok(out)
    }
}

/// `L_n` as a matrix on the oscillator's Fock space.
#[allow(non_snake_case)]
pub fn make_L(n: i64, osc: &Oscillator) -> Result<FockOperator, Error> {
    osc.l(n)
}

/// `α A B - β B A`.
pub fn deformed_commutator(
    a: &FockOperator,
    b: &FockOperator,
    alpha: &RatFunc,
    beta: &RatFunc,
) -> Result<FockOperator, Error> {
    a.matmul(b)?.scale(alpha).sub(&b.matmul(a)?.scale(beta))
}

/// `α L_n L_m - β L_m L_n - c L_{n+m}` on safe columns, with the mode's
/// bracket coefficients.
pub fn verify_bracket(
    n: i64,
    m: i64,
    osc: &Oscillator,
    guard: &GuardSpec,
) -> Result<FockOperator, Error> {
    let shift = n.max(m).max(0) as usize;
    guard.require(osc.dim(), 2, shift)?;
    let (alpha, beta, c) = osc.mode.bracket_coefficients(n, m);
    let (ln, lm) = (osc.l(n)?, osc.l(m)?);
    let mut res = deformed_commutator(&ln, &lm, &alpha, &beta)?;
    if !c.is_zero() {
        res = res.sub(&osc.l(n + m)?.scale(&c))?;
    }
    Ok(res.restrict_columns(guard.safe_columns()))
}

/// `α a (a⁺)ⁿ - β (a⁺)ⁿ a - c (a⁺)^{n-1}` on safe columns.
pub fn verify_power_commutator(n: i64, osc: &Oscillator) -> Result<FockOperator, Error> {
    if n < 1 {
        return Err(Error::UnsupportedIndex(n));
    }
    let guard = GuardSpec::new(osc.dim(), n as usize + 1, 1)?;
    let (alpha, beta, c) = osc.mode.power_commutator_coefficients(n);
    let up = osc.a_plus.pow(n as u32);
    let lower = osc.a_plus.pow(n as u32 - 1).scale(&c);
    let res = deformed_commutator(&osc.a, &up, &alpha, &beta)?.sub(&lower)?;
    Ok(res.restrict_columns(guard.safe_columns()))
}
