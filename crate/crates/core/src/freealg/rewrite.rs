//! The rewriting system for `U_{p,q}` and its normal forms.
//!
//! Rules, applied to adjacent letter pairs (`r = q/p`):
//!
//! 1. `T T⁻¹ → 1`, `T⁻¹ T → 1`
//! 2. `L_n T → r^{n+1} T L_n`, `L_n T⁻¹ → r^{-(n+1)} T⁻¹ L_n`
//! 3. `C T → r T C`, `C T⁻¹ → r⁻¹ T⁻¹ C`
//! 4. `C L_n → r^n L_n C` (or `q^n L_n C` under the enveloping variant)
//! 5. `L_n L_m → r^{m-n} L_m L_n + r^{-n} B(n, m)` for `n > m`
//!
//! where `B(n, m)` is the bracket with central term. Irreducible words are
//! exactly the [`NormalWord`]s.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use super::element::AlgebraElement;
use super::word::{Generator, NormalWord, Word};
use crate::field::RatFunc;
use crate::homlie::{bracket_coefficient, central_coefficient};

/// Which form of the `L`–`C` commutation relation is in force.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum R5Variant {
    /// `q^n L_n C = p^n C L_n`, the relation the Hopf structure is built on.
    #[default]
    Hopf,
    /// `q^n L_n C = C L_n`, the enveloping-algebra form.
    Enveloping,
}

/// Order in which redexes are picked by [`Relations::normalize_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A named defining relation, instantiated at concrete indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `T T⁻¹ = 1`.
    R1Right,
    /// `T⁻¹ T = 1`.
    R1Left,
    /// `T^m L_n = p^{m(n+1)} q^{-m(n+1)} L_n T^m`.
    R2 { m: i64, n: i64 },
    /// `q^m T^m C = p^m C T^m`.
    R3 { m: i64 },
    /// `q^n p^{-n} L_n L_m - q^m p^{-m} L_m L_n = B(n, m)`.
    R4 { n: i64, m: i64 },
    /// `q^n L_n C = p^n C L_n`, or `= C L_n` under [`R5Variant::Enveloping`].
    R5 { n: i64 },
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::R1Right | Relation::R1Left => "R1",
            Relation::R2 { .. } => "R2",
            Relation::R3 { .. } => "R3",
            Relation::R4 { .. } => "R4",
            Relation::R5 { .. } => "R5",
        }
    }
}

/// Coefficients for rewriting `L_n L_m` with `n > m`:
/// `L_n L_m = swap · L_m L_n + lower · L_{n+m} + central · C`.
#[derive(Clone, Debug)]
struct Reorder {
    swap: RatFunc,
    lower: RatFunc,
    central: RatFunc,
}

/// A cached normal-form expansion.
type Expansion = Arc<Vec<(NormalWord, RatFunc)>>;

/// The relation set (R1)–(R5) together with the reduction machinery.
///
/// Holds a memo of reordering coefficients; it is safe to share between
/// threads.
#[derive(Default)]
pub struct Relations {
    variant: R5Variant,
    reorder_cache: Mutex<HashMap<(i64, i64), Reorder>>,
    prepend_cache: Mutex<HashMap<(Generator, NormalWord), Expansion>>,
}

impl std::fmt::Debug for Relations {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Relations")
            .field("variant", &self.variant)
            .finish()
    }
}

impl Clone for Relations {
    fn clone(&self) -> Self {
        Relations::new(self.variant)
    }
}

type NMap = HashMap<NormalWord, RatFunc>;

fn acc(out: &mut NMap, w: NormalWord, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match out.entry(w) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn acc_word(out: &mut HashMap<Word, RatFunc>, w: Word, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match out.entry(w) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Termination measure, compared lexicographically. Every rule strictly
/// decreases it.
///
/// Components: `L` letters; `L`-index inversions; (non-`T` letter, `T±`
/// letter) pairs plus (`C`, non-`C` letter) pairs; `T±` letters.
pub fn termination_measure(w: &Word) -> (usize, usize, usize, usize) {
    let letters = w.letters();
    let l_count = letters.iter().filter(|g| g.is_l()).count();
    let mut inversions = 0;
    let mut misplaced = 0;
    let mut non_t_seen = 0;
    let mut c_seen = 0;
    let mut l_seen: Vec<i64> = Vec::new();
    for &g in letters {
        match g {
            Generator::L(n) => {
                inversions += l_seen.iter().filter(|&&a| a > n).count();
                l_seen.push(n);
                misplaced += c_seen;
                non_t_seen += 1;
            }
            Generator::T | Generator::Tinv => {
                misplaced += non_t_seen + c_seen;
            }
            Generator::C => {
                non_t_seen += 1;
                c_seen += 1;
            }
        }
    }
    let t_count = letters.iter().filter(|g| g.is_t()).count();
    (l_count, inversions, misplaced, t_count)
}

impl Relations {
    pub fn new(variant: R5Variant) -> Self {
        Relations {
            variant,
            reorder_cache: Mutex::new(HashMap::new()),
            prepend_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn variant(&self) -> R5Variant {
        self.variant
    }

    /// `x` with `L_x T = x · T L_n`.
    fn l_past_t(n: i64) -> RatFunc {
        RatFunc::ratio_power(n + 1)
    }

    /// `x` with `C L_n = x · L_n C`.
    fn c_past_l(&self, n: i64) -> RatFunc {
        match self.variant {
            R5Variant::Hopf => RatFunc::ratio_power(n),
            R5Variant::Enveloping => RatFunc::monomial(0, n),
        }
    }

    fn reorder(&self, n: i64, m: i64) -> Reorder {
        if let Some(r) = self.reorder_cache.lock().unwrap().get(&(n, m)) {
            return r.clone();
        }
        // L_n L_m = (p/q)^n (q^m p^{-m} L_m L_n + B(n, m))
        let up = RatFunc::ratio_power(-n);
        let r = Reorder {
            swap: RatFunc::ratio_power(m - n),
            lower: &up * &bracket_coefficient(n, m),
            central: if n + m == 0 {
                &up * &central_coefficient(n)
            } else {
                RatFunc::zero()
            },
        };
        self.reorder_cache.lock().unwrap().insert((n, m), r.clone());
        r
    }

    /// `B(n, m) = ([m]/p^m - [n]/p^n) L_{n+m} + δ_{n+m,0} g(n) C`.
    pub fn bracket_env(&self, n: i64, m: i64) -> AlgebraElement {
        let mut out = AlgebraElement::l(n + m).scale(&bracket_coefficient(n, m));
        if n + m == 0 {
            out = out.add(&AlgebraElement::c().scale(&central_coefficient(n)));
        }
        out
    }

    // ---- fast normalization (leftmost strategy) -------------------------

    /// `w · g` for a normal word `w`, accumulated into `out` with factor `coeff`.
    fn mul_letter_into(&self, w: &NormalWord, g: Generator, coeff: &RatFunc, out: &mut NMap) {
        match g {
            Generator::T | Generator::Tinv => {
                let sign = if g == Generator::T { 1 } else { -1 };
                let k = sign * (w.t_weight() + w.c_exp as i64);
                let mut nw = w.clone();
                nw.t_exp += sign;
                acc(out, nw, coeff * &RatFunc::ratio_power(k));
            }
            Generator::C => {
                let mut nw = w.clone();
                nw.c_exp += 1;
                acc(out, nw, coeff.clone());
            }
            Generator::L(m) => {
                let factor = if w.c_exp == 0 {
                    coeff.clone()
                } else {
                    coeff * &self.c_past_l(m).pow(w.c_exp as i64)
                };
                let mut inserted = NMap::new();
                self.insert_l(w.t_exp, &w.l_part, m, &RatFunc::one(), &mut inserted);
                for (mut nw, c) in inserted {
                    nw.c_exp += w.c_exp;
                    acc(out, nw, &factor * &c);
                }
            }
        }
    }

    /// `T^t · L-part · L_m` (no `C` on the left), into `out`.
    fn insert_l(&self, t: i64, l_part: &[(i64, u32)], m: i64, coeff: &RatFunc, out: &mut NMap) {
        match l_part.last() {
            Some(&(n, k)) if n > m => {
                let mut prefix = l_part.to_vec();
                if k == 1 {
                    prefix.pop();
                } else {
                    prefix.last_mut().unwrap().1 -= 1;
                }
                let Reorder {
                    swap,
                    lower,
                    central,
                } = self.reorder(n, m);
                let mut moved = NMap::new();
                self.insert_l(t, &prefix, m, &(coeff * &swap), &mut moved);
                for (w, c) in moved {
                    self.mul_letter_into(&w, Generator::L(n), &c, out);
                }
                if !lower.is_zero() {
                    self.insert_l(t, &prefix, n + m, &(coeff * &lower), out);
                }
                if !central.is_zero() {
                    let w = NormalWord {
                        t_exp: t,
                        l_part: prefix,
                        c_exp: 1,
                    };
                    acc(out, w, coeff * &central);
                }
            }
            _ => {
                let mut l_part = l_part.to_vec();
                match l_part.last_mut() {
                    Some((n, k)) if *n == m => *k += 1,
                    _ => l_part.push((m, 1)),
                }
                acc(
                    out,
                    NormalWord {
                        t_exp: t,
                        l_part,
                        c_exp: 0,
                    },
                    coeff.clone(),
                );
            }
        }
    }

    fn normalize_word_into(&self, w: &Word, coeff: &RatFunc, out: &mut NMap) {
        let mut cur: NMap = NMap::new();
        cur.insert(NormalWord::unit(), coeff.clone());
        for &g in w.letters() {
            let mut next = NMap::with_capacity(cur.len());
            for (nw, c) in &cur {
                self.mul_letter_into(nw, g, c, &mut next);
            }
            cur = next;
        }
        for (nw, c) in cur {
            acc(out, nw, c);
        }
    }

    /// Reduces every word to normal form. Equivalent to
    /// `normalize_with(x, Strategy::Leftmost)`.
    pub fn normalize(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = NMap::new();
        for (w, c) in x.terms() {
            if let Some(nw) = w.as_normal() {
                acc(&mut out, nw, c.clone());
            } else {
                self.normalize_word_into(w, c, &mut out);
            }
        }
        from_nmap(out)
    }

    /// Normal product `normalize(x · y)`.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.normalize(&x.concat(y))
    }

    pub fn equals(&self, x: &AlgebraElement, y: &AlgebraElement) -> bool {
        self.normalize(&x.sub(y)).is_zero()
    }

    /// Normalizes a product of normal words term by term, returning the
    /// result as a map keyed by normal word.
    pub fn normal_terms(&self, x: &AlgebraElement) -> BTreeMap<NormalWord, RatFunc> {
        self.normalize(x)
            .into_terms()
            .map(|(w, c)| (w.as_normal().expect("normalized"), c))
            .collect()
    }

    // ---- generic single-step rewriting ----------------------------------

    /// All one-step rewrites at position `i`, or `None` if `w[i] w[i+1]` is
    /// not a redex.
    pub fn rewrite_at(&self, w: &Word, i: usize) -> Option<Vec<(RatFunc, Word)>> {
        use Generator::*;
        let letters = w.letters();
        let (a, b) = (*letters.get(i)?, *letters.get(i + 1)?);
        let splice = |mid: &[Generator]| -> Word {
            let mut v = Vec::with_capacity(letters.len());
            v.extend_from_slice(&letters[..i]);
            v.extend_from_slice(mid);
            v.extend_from_slice(&letters[i + 2..]);
            Word::new(v)
        };
        let out = match (a, b) {
            (T, Tinv) | (Tinv, T) => vec![(RatFunc::one(), splice(&[]))],
            (L(n), T) => vec![(Self::l_past_t(n), splice(&[T, L(n)]))],
            (L(n), Tinv) => vec![(Self::l_past_t(n).pow(-1), splice(&[Tinv, L(n)]))],
            (C, T) => vec![(RatFunc::ratio_power(1), splice(&[T, C]))],
            (C, Tinv) => vec![(RatFunc::ratio_power(-1), splice(&[Tinv, C]))],
            (C, L(n)) => vec![(self.c_past_l(n), splice(&[L(n), C]))],
            (L(n), L(m)) if n > m => {
                let r = self.reorder(n, m);
                let mut v = vec![(r.swap, splice(&[L(m), L(n)]))];
                if !r.lower.is_zero() {
                    v.push((r.lower, splice(&[L(n + m)])));
                }
                if !r.central.is_zero() {
                    v.push((r.central, splice(&[C])));
                }
                v
            }
            _ => return None,
        };
        Some(out)
    }

    /// Positions of all redexes in `w`.
    pub fn redexes(&self, w: &Word) -> Vec<usize> {
        use Generator::*;
        w.letters()
            .windows(2)
            .enumerate()
            .filter(|(_, p)| match (p[0], p[1]) {
                (T, Tinv) | (Tinv, T) => true,
                (L(_), T | Tinv) | (C, T | Tinv) | (C, L(_)) => true,
                (L(n), L(m)) => n > m,
                _ => false,
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Normal form under the given strategy.
    ///
    /// Leftmost rewriting is the same as inserting letters one at a time into
    /// a normal prefix ([`Relations::normalize`]); rightmost rewriting is the
    /// same as prepending letters, right to left, to a normal suffix. Both
    /// agree with [`Relations::normalize_stepwise`].
    pub fn normalize_with(&self, x: &AlgebraElement, strategy: Strategy) -> AlgebraElement {
        match strategy {
            Strategy::Leftmost => self.normalize(x),
            Strategy::Rightmost => {
                let mut out = NMap::new();
                for (w, c) in x.terms() {
                    self.rightmost_word_into(w, c, &mut out);
                }
                from_nmap(out)
            }
        }
    }

    fn rightmost_word_into(&self, w: &Word, coeff: &RatFunc, out: &mut NMap) {
        let mut cur: NMap = NMap::new();
        cur.insert(NormalWord::unit(), coeff.clone());
        for &g in w.letters().iter().rev() {
            let mut next = NMap::with_capacity(cur.len());
            for (nw, c) in &cur {
                for (nw2, d) in self.prepend(g, nw).iter() {
                    acc(&mut next, nw2.clone(), c * d);
                }
            }
            cur = next;
        }
        for (nw, c) in cur {
            acc(out, nw, c);
        }
    }

    /// Rightmost normal form of `g · w` for a normal word `w`. The only redex
    /// is at the junction.
    fn prepend(&self, g: Generator, w: &NormalWord) -> Arc<Vec<(NormalWord, RatFunc)>> {
        let key = (g, w.clone());
        if let Some(r) = self.prepend_cache.lock().unwrap().get(&key) {
            return r.clone();
        }
        let mut letters = vec![g];
        letters.extend(w.to_word().into_letters());
        let word = Word::new(letters);
        let result: Vec<(NormalWord, RatFunc)> = match word.as_normal() {
            Some(nw) => vec![(nw, RatFunc::one())],
            None => {
                let mut out = NMap::new();
                for (c, u) in self.rewrite_at(&word, 0).expect("junction redex") {
                    self.rightmost_word_into(&u, &c, &mut out);
                }
                out.into_iter().collect()
            }
        };
        let result = Arc::new(result);
        self.prepend_cache
            .lock()
            .unwrap()
            .insert(key, result.clone());
        result
    }

    /// Reduces by repeatedly rewriting one redex chosen by `strategy`.
    ///
    /// Words are processed in decreasing termination measure, so identical
    /// intermediate words are merged before they are expanded.
    pub fn normalize_stepwise(&self, x: &AlgebraElement, strategy: Strategy) -> AlgebraElement {
        type Key = ((usize, usize, usize, usize), Word);
        let mut pending: BTreeMap<Key, RatFunc> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<Key, RatFunc>, w: Word, c: RatFunc| {
            if c.is_zero() {
                return;
            }
            let key = (termination_measure(&w), w);
            match pending.entry(key) {
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
        };
        for (w, c) in x.terms() {
            push(&mut pending, w.clone(), c.clone());
        }
        let mut done: HashMap<Word, RatFunc> = HashMap::new();
        while let Some(((_, w), c)) = pending.pop_last() {
            let rs = self.redexes(&w);
            let pos = match strategy {
                Strategy::Leftmost => rs.first(),
                Strategy::Rightmost => rs.last(),
            };
            match pos {
                None => acc_word(&mut done, w, c),
                Some(&i) => {
                    for (k, w2) in self.rewrite_at(&w, i).expect("redex") {
                        push(&mut pending, w2, &c * &k);
                    }
                }
            }
        }
        AlgebraElement::from_terms(done)
    }

    /// Leftmost minus rightmost normal form; zero when the two strategies agree.
    pub fn strategy_defect(&self, x: &AlgebraElement) -> AlgebraElement {
        self.normalize_with(x, Strategy::Leftmost)
            .sub(&self.normalize_with(x, Strategy::Rightmost))
    }

    // ---- relations ------------------------------------------------------

    /// The two sides of a relation as unnormalized elements.
    pub fn relation(&self, rel: Relation) -> (AlgebraElement, AlgebraElement) {
        let t = AlgebraElement::t_power;
        let l = AlgebraElement::l;
        let c = AlgebraElement::c;
        match rel {
            Relation::R1Right => (
                AlgebraElement::t().concat(&AlgebraElement::tinv()),
                AlgebraElement::one(),
            ),
            Relation::R1Left => (
                AlgebraElement::tinv().concat(&AlgebraElement::t()),
                AlgebraElement::one(),
            ),
            Relation::R2 { m, n } => (
                t(m).concat(&l(n)),
                l(n).concat(&t(m))
                    .scale(&RatFunc::monomial(m * (n + 1), -m * (n + 1))),
            ),
            Relation::R3 { m } => (
                t(m).concat(&c()).scale(&RatFunc::monomial(0, m)),
                c().concat(&t(m)).scale(&RatFunc::monomial(m, 0)),
            ),
            Relation::R4 { n, m } => (
                l(n).concat(&l(m))
                    .scale(&RatFunc::ratio_power(n))
                    .sub(&l(m).concat(&l(n)).scale(&RatFunc::ratio_power(m))),
                self.bracket_env(n, m),
            ),
            Relation::R5 { n } => {
                let lhs = l(n).concat(&c()).scale(&RatFunc::monomial(0, n));
                let rhs = match self.variant {
                    R5Variant::Hopf => c().concat(&l(n)).scale(&RatFunc::monomial(n, 0)),
                    R5Variant::Enveloping => c().concat(&l(n)),
                };
                (lhs, rhs)
            }
        }
    }

    /// `normalize(lhs - rhs)` for the relation; zero when it holds.
    pub fn relation_residual(&self, rel: Relation) -> AlgebraElement {
        let (a, b) = self.relation(rel);
        self.normalize(&a.sub(&b))
    }

    /// Splits each normal word into its `T`-power and `L/C` factor.
    pub fn basis_decompose(&self, x: &AlgebraElement) -> Vec<BasisTerm> {
        self.normal_terms(x)
            .into_iter()
            .map(|(w, coeff)| {
                let (t_power, monomial) = w.factor();
                BasisTerm {
                    t_power,
                    monomial,
                    coeff,
                }
            })
            .collect()
    }
}

/// One term `coeff · T^{t_power} ⊗ monomial` of the Laurent–enveloping
/// factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTerm {
    pub t_power: i64,
    pub monomial: NormalWord,
    pub coeff: RatFunc,
}

fn from_nmap(m: NMap) -> AlgebraElement {
    AlgebraElement::from_terms(m.into_iter().map(|(w, c)| (w.to_word(), c)))
}
