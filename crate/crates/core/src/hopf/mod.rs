//! Coproduct, counit and antipode on `U_{p,q}`, with residual checks for
//! the Hopf axioms and for compatibility with the defining relations.
//!
//! On generators:
//!
//! * `Δ(T^{±1}) = T^{±1} ⊗ T^{±1}`, `Δ(L_n) = L_n ⊗ Tⁿ + Tⁿ ⊗ L_n`, `Δ(C) = C ⊗ 1 + 1 ⊗ C`
//! * `ε(T^{±1}) = 1`, `ε(L_n) = ε(C) = 0`
//! * `S(T^{±1}) = T^{∓1}`, `S(L_n) = -T⁻ⁿ L_n T⁻ⁿ`, `S(C) = -C`
//!
//! `Δ` and `ε` extend multiplicatively, `S` anti-multiplicatively.

mod tensor;

use std::fmt;

use serde::Serialize;

pub use tensor::TensorElement;

use crate::field::RatFunc;
use crate::freealg::{
    enumerate_normal_words, AlgebraElement, Generator, Relation, Relations, Word,
};

/// Which formula is used for `Δ(C)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoproductC {
    /// `C ⊗ 1 + 1 ⊗ C`.
    #[default]
    Corrected,
    /// `C ⊗ 1 + 1 ⊗ T`, kept to show that the axioms then fail.
    Printed,
}

/// One of the three structure maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HopfMap {
    #[serde(rename = "coproduct")]
    Coproduct,
    #[serde(rename = "antipode")]
    Antipode,
    #[serde(rename = "counit")]
    Counit,
}

impl HopfMap {
    pub fn name(self) -> &'static str {
        match self {
            HopfMap::Coproduct => "coproduct",
            HopfMap::Antipode => "antipode",
            HopfMap::Counit => "counit",
        }
    }
}

/// A residual living in whichever space the checked map lands in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Tensor(TensorElement),
    Element(AlgebraElement),
    Scalar(RatFunc),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Tensor(t) => t.is_zero(),
            Residual::Element(x) => x.is_zero(),
            Residual::Scalar(c) => c.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Tensor(t) => t.fmt(f),
            Residual::Element(x) => x.fmt(f),
            Residual::Scalar(c) => c.fmt(f),
        }
    }
}

/// `U_{p,q}` with its Hopf structure maps.
#[derive(Clone, Debug, Default)]
pub struct HopfAlgebra {
    relations: Relations,
    coproduct_c: CoproductC,
}

impl HopfAlgebra {
    pub fn new(relations: Relations, coproduct_c: CoproductC) -> Self {
        HopfAlgebra {
            relations,
            coproduct_c,
        }
    }

    pub fn relations(&self) -> &Relations {
        &self.relations
    }

    pub fn coproduct_c(&self) -> CoproductC {
        self.coproduct_c
    }

    fn coproduct_letter(&self, g: Generator) -> TensorElement {
        let w = |g: Generator| Word::new(vec![g]);
        let one = RatFunc::one();
        match g {
            Generator::T | Generator::Tinv => TensorElement::pure(vec![w(g), w(g)], one),
            Generator::L(n) => {
                let tn = Word::t_power(n);
                let mut out = TensorElement::pure(vec![w(g), tn.clone()], one.clone());
                out.add_term(vec![tn, w(g)], one);
                out
            }
            Generator::C => {
                let right = match self.coproduct_c {
                    CoproductC::Corrected => w(Generator::C),
                    CoproductC::Printed => w(Generator::T),
                };
                let mut out = TensorElement::pure(vec![w(g), Word::unit()], one.clone());
                out.add_term(vec![Word::unit(), right], one);
                out
            }
        }
    }

    fn coproduct_word(&self, w: &Word) -> TensorElement {
        let mut acc = TensorElement::unit(2);
        for &g in w.letters() {
            acc = acc
                .multiply(&self.coproduct_letter(g), &self.relations)
                .expect("arity 2");
        }
        acc
    }

    /// `Δ(x)` with both slots in normal form.
    pub fn coproduct(&self, x: &AlgebraElement) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (w, c) in x.terms() {
            for (ws, d) in self.coproduct_word(w).terms() {
                out.add_term(ws.clone(), c * d);
            }
        }
        out
    }

    /// `ε(x)`.
    pub fn counit(&self, x: &AlgebraElement) -> RatFunc {
        x.terms()
            .filter(|(w, _)| w.letters().iter().all(|g| g.is_t()))
            .fold(RatFunc::zero(), |acc, (_, c)| &acc + c)
    }

    fn antipode_letter(g: Generator) -> AlgebraElement {
        match g {
            Generator::T => AlgebraElement::tinv(),
            Generator::Tinv => AlgebraElement::t(),
            Generator::L(n) => {
                let t = AlgebraElement::t_power(-n);
                t.concat(&AlgebraElement::l(n)).concat(&t).neg()
            }
            Generator::C => AlgebraElement::c().neg(),
        }
    }

    /// `S(x)`, normalized.
    pub fn antipode(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (w, c) in x.terms() {
            let mut acc = AlgebraElement::one();
            for &g in w.letters().iter().rev() {
                acc = self.relations.multiply(&acc, &Self::antipode_letter(g));
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// `(Δ ⊗ id)Δ(x) - (id ⊗ Δ)Δ(x)`.
    pub fn check_coassoc(&self, x: &AlgebraElement) -> TensorElement {
        let d = self.coproduct(x);
        let mut left = TensorElement::zero(3);
        let mut right = TensorElement::zero(3);
        for (ws, c) in d.terms() {
            for (a, e) in self.coproduct_word(&ws[0]).terms() {
                left.add_term(vec![a[0].clone(), a[1].clone(), ws[1].clone()], c * e);
            }
            for (b, e) in self.coproduct_word(&ws[1]).terms() {
                right.add_term(vec![ws[0].clone(), b[0].clone(), b[1].clone()], c * e);
            }
        }
        left.sub(&right).expect("arity 3")
    }

    /// `(m(id ⊗ ε)Δ(x) - x, m(ε ⊗ id)Δ(x) - x)`.
    pub fn check_counit(&self, x: &AlgebraElement) -> (AlgebraElement, AlgebraElement) {
        let d = self.coproduct(x);
        let mut left = AlgebraElement::zero();
        let mut right = AlgebraElement::zero();
        for (ws, c) in d.terms() {
            let e1 = self.counit(&AlgebraElement::word(ws[1].clone()));
            left.add_term(ws[0].clone(), c * &e1);
            let e0 = self.counit(&AlgebraElement::word(ws[0].clone()));
            right.add_term(ws[1].clone(), c * &e0);
        }
        let x = self.relations.normalize(x);
        (
            self.relations.normalize(&left).sub(&x),
            self.relations.normalize(&right).sub(&x),
        )
    }

    /// `(m(S ⊗ id)Δ(x) - ε(x)·1, m(id ⊗ S)Δ(x) - ε(x)·1)`.
    pub fn check_antipode(&self, x: &AlgebraElement) -> (AlgebraElement, AlgebraElement) {
        let d = self.coproduct(x);
        let eps = AlgebraElement::scalar(self.counit(x));
        let mut left = AlgebraElement::zero();
        let mut right = AlgebraElement::zero();
        for (ws, c) in d.terms() {
            let a = AlgebraElement::word(ws[0].clone());
            let b = AlgebraElement::word(ws[1].clone());
            left = left.add(&self.relations.multiply(&self.antipode(&a), &b).scale(c));
            right = right.add(&self.relations.multiply(&a, &self.antipode(&b)).scale(c));
        }
        (left.sub(&eps), right.sub(&eps))
    }

    /// Image of `lhs - rhs` of the relation under `map`. For `S` the images
    /// multiply in the opposite order, which the anti-homomorphic extension
    /// already does.
    pub fn check_relation_preservation(&self, map: HopfMap, rel: Relation) -> Residual {
        let (lhs, rhs) = self.relations.relation(rel);
        let diff = lhs.sub(&rhs);
        match map {
            HopfMap::Coproduct => Residual::Tensor(self.coproduct(&diff)),
            HopfMap::Antipode => Residual::Element(self.antipode(&diff)),
            HopfMap::Counit => Residual::Scalar(&self.counit(&lhs) - &self.counit(&rhs)),
        }
    }

    /// `S(S(x)) - x`.
    pub fn antipode_squared(&self, x: &AlgebraElement) -> AlgebraElement {
        self.antipode(&self.antipode(x))
            .sub(&self.relations.normalize(x))
    }

    /// `Δ(x) - τΔ(x)`; nonzero when `x` is not cocommutative.
    pub fn cocommutativity_defect(&self, x: &AlgebraElement) -> TensorElement {
        let d = self.coproduct(x);
        d.sub(&d.swap().expect("arity 2")).expect("arity 2")
    }
}

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Record {
    pub axiom: String,
    pub map: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl Record {
    fn new(axiom: &str, map: &str, residual: &Residual) -> Self {
        let ok = residual.is_zero();
        Record {
            axiom: axiom.to_string(),
            map: map.to_string(),
            relation: None,
            n: None,
            m: None,
            element: None,
            status: if ok { Status::Ok } else { Status::Fail },
            residual: (!ok).then(|| residual.to_string()),
        }
    }

    fn on(mut self, x: &AlgebraElement) -> Self {
        self.element = Some(x.to_string());
        self
    }
}

/// Every relation instance with indices in `-w..=w`.
pub fn relation_instances(w: i64) -> Vec<Relation> {
    let mut out = vec![Relation::R1Right, Relation::R1Left];
    for n in -w..=w {
        for m in -w..=w {
            out.push(Relation::R2 { m, n });
            out.push(Relation::R4 { n, m });
        }
        out.push(Relation::R3 { m: n });
        out.push(Relation::R5 { n });
    }
    out
}

fn relation_indices(rel: Relation) -> (Option<i64>, Option<i64>) {
    match rel {
        Relation::R1Right | Relation::R1Left => (None, None),
        Relation::R2 { m, n } => (Some(n), Some(m)),
        Relation::R3 { m } => (None, Some(m)),
        Relation::R4 { n, m } => (Some(n), Some(m)),
        Relation::R5 { n } => (Some(n), None),
    }
}

/// The generators `T, T⁻¹, C, L_n` with `|n| ≤ w`.
pub fn generators(w: i64) -> Vec<AlgebraElement> {
    let mut out = vec![
        AlgebraElement::t(),
        AlgebraElement::tinv(),
        AlgebraElement::c(),
    ];
    out.extend((-w..=w).map(AlgebraElement::l));
    out
}

impl HopfAlgebra {
    /// Axiom records for `x`: coassociativity, both counit sides, both
    /// antipode sides.
    pub fn axiom_records(&self, x: &AlgebraElement) -> Vec<Record> {
        let (cl, cr) = self.check_counit(x);
        let (al, ar) = self.check_antipode(x);
        vec![
            Record::new(
                "coassociativity",
                "coproduct",
                &Residual::Tensor(self.check_coassoc(x)),
            )
            .on(x),
            Record::new("counit_left", "counit", &Residual::Element(cl)).on(x),
            Record::new("counit_right", "counit", &Residual::Element(cr)).on(x),
            Record::new("antipode_left", "antipode", &Residual::Element(al)).on(x),
            Record::new("antipode_right", "antipode", &Residual::Element(ar)).on(x),
        ]
    }

    pub fn relation_record(&self, map: HopfMap, rel: Relation) -> Record {
        let mut r = Record::new(
            "relation",
            map.name(),
            &self.check_relation_preservation(map, rel),
        );
        r.relation = Some(rel.name().to_string());
        (r.n, r.m) = relation_indices(rel);
        r
    }

    pub fn antipode_squared_record(&self, x: &AlgebraElement) -> Record {
        Record::new(
            "antipode_squared",
            "antipode",
            &Residual::Element(self.antipode_squared(x)),
        )
        .on(x)
    }

    /// The full sweep on index window `|n| ≤ w`, sorted.
    ///
    /// Axioms run on generators and on their pairwise products; relation
    /// preservation runs for all three maps; `S² = id` on normal words of
    /// length at most 3.
    pub fn verification_report(&self, w: i64) -> Vec<Record> {
        let gens = generators(w);
        let mut out = Vec::new();
        for x in &gens {
            out.extend(self.axiom_records(x));
        }
        for x in &gens {
            for y in &gens {
                out.extend(self.axiom_records(&x.concat(y)));
            }
        }
        for rel in relation_instances(w) {
            for map in [HopfMap::Coproduct, HopfMap::Antipode, HopfMap::Counit] {
                out.push(self.relation_record(map, rel));
            }
        }
        for x in short_normal_words(w.min(4)) {
            out.push(self.antipode_squared_record(&x));
        }
        out.sort();
        out
    }
}

/// Normal words of letter length at most 3 with indices in `-w..=w`.
pub fn short_normal_words(w: i64) -> Vec<AlgebraElement> {
    enumerate_normal_words(-3..=3, -w..=w, 3)
        .into_iter()
        .filter(|nw| nw.to_word().len() <= 3)
        .map(|nw| AlgebraElement::normal(&nw, RatFunc::one()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf() -> HopfAlgebra {
        HopfAlgebra::default()
    }

    fn w(letters: &[Generator]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn coproduct_examples() {
        let h = hopf();
        assert_eq!(
            h.coproduct(&AlgebraElement::l(0)).to_string(),
            "L(0)(x)1 + 1(x)L(0)"
        );
        let t3 = AlgebraElement::t_power(3);
        assert_eq!(
            h.coproduct(&t3),
            TensorElement::pure(vec![Word::t_power(3), Word::t_power(3)], RatFunc::one())
        );
    }

    #[test]
    fn coproduct_of_l_product() {
        // Δ(L_n)Δ(L_m): the cross terms carry r^{...} from moving T past L.
        use Generator::*;
        let h = hopf();
        let (n, m) = (2i64, 1i64);
        let got = h.coproduct(&AlgebraElement::l(n).concat(&AlgebraElement::l(m)));
        let tn = Word::t_power(n);
        let tm = Word::t_power(m);
        let tnm = Word::t_power(n + m);
        let mut expected = TensorElement::zero(2);
        expected.add_term(vec![w(&[L(n), L(m)]), tnm.clone()], RatFunc::one());
        expected.add_term(vec![tnm.clone(), w(&[L(n), L(m)])], RatFunc::one());
        // L_n T^m ⊗ T^n L_m = r^{m(n+1)} T^m L_n ⊗ T^n L_m
        expected.add_term(
            vec![tm.concat(&w(&[L(n)])), tn.concat(&w(&[L(m)]))],
            RatFunc::ratio_power(m * (n + 1)),
        );
        // T^n L_m ⊗ L_n T^m = r^{m(n+1)} T^n L_m ⊗ T^m L_n
        expected.add_term(
            vec![tn.concat(&w(&[L(m)])), tm.concat(&w(&[L(n)]))],
            RatFunc::ratio_power(m * (n + 1)),
        );
        assert_eq!(got, expected.normalize(h.relations()));
    }

    #[test]
    fn counit_examples() {
        let h = hopf();
        assert!(h.counit(&AlgebraElement::t_power(3)).is_one());
        let l2c = AlgebraElement::l(2).concat(&AlgebraElement::c());
        assert!(h.counit(&l2c).is_zero());
        let x = AlgebraElement::scalar(RatFunc::int(5))
            .add(&AlgebraElement::tinv().scale(&RatFunc::int(2)));
        assert_eq!(h.counit(&x), RatFunc::int(7));
    }

    #[test]
    fn antipode_examples() {
        let h = hopf();
        assert_eq!(h.antipode(&AlgebraElement::t()), AlgebraElement::tinv());
        assert_eq!(h.antipode(&AlgebraElement::c()), AlgebraElement::c().neg());
        for n in -3i64..=3 {
            // -T^{-n} L_n T^{-n} = -r^{-n(n+1)} T^{-2n} L_n
            let expected = AlgebraElement::t_power(-2 * n)
                .concat(&AlgebraElement::l(n))
                .scale(&-RatFunc::monomial(n * (n + 1), -n * (n + 1)));
            assert_eq!(h.antipode(&AlgebraElement::l(n)), expected, "n = {n}");
        }
    }

    #[test]
    fn axioms_on_generators() {
        let h = hopf();
        for x in generators(3) {
            for r in h.axiom_records(&x) {
                assert_eq!(r.status, Status::Ok, "{r:?}");
            }
        }
    }

    #[test]
    fn counit_on_t_and_l1l2() {
        let h = hopf();
        let l1l2 = AlgebraElement::l(1).concat(&AlgebraElement::l(2));
        assert!(h.check_coassoc(&l1l2).is_zero());
        assert!(h.check_coassoc(&AlgebraElement::t()).is_zero());
    }

    #[test]
    fn relation_examples() {
        let h = hopf();
        assert!(h
            .check_relation_preservation(HopfMap::Coproduct, Relation::R4 { n: 1, m: -1 })
            .is_zero());
        assert!(h
            .check_relation_preservation(HopfMap::Antipode, Relation::R2 { m: 2, n: 1 })
            .is_zero());
        for (n, m) in [(3, -2), (0, 0), (2, -2)] {
            assert!(h
                .check_relation_preservation(HopfMap::Counit, Relation::R4 { n, m })
                .is_zero());
        }
    }

    #[test]
    fn antipode_is_involutive_on_examples() {
        let h = hopf();
        assert!(h.antipode_squared(&AlgebraElement::t()).is_zero());
        assert!(h.antipode_squared(&AlgebraElement::l(3)).is_zero());
        let l1c = AlgebraElement::l(1).concat(&AlgebraElement::c());
        assert!(h.antipode_squared(&l1c).is_zero());
    }

    #[test]
    fn coproduct_commutes_with_the_flip() {
        // Every generator image is flip-symmetric and the flip is an algebra
        // map of U ⊗ U, so Δ = τΔ everywhere.
        let h = hopf();
        let gens = generators(2);
        for x in &gens {
            assert!(h.cocommutativity_defect(x).is_zero(), "{x}");
            for y in &gens {
                let xy = x.concat(y);
                assert!(h.cocommutativity_defect(&xy).is_zero(), "{xy}");
            }
        }
    }

    #[test]
    fn printed_coproduct_of_c_breaks_counit() {
        let h = HopfAlgebra::new(Relations::default(), CoproductC::Printed);
        let (left, right) = h.check_counit(&AlgebraElement::c());
        assert_eq!(left, AlgebraElement::one());
        assert_eq!(right, AlgebraElement::t().sub(&AlgebraElement::c()));
    }

    #[test]
    fn report_serializes() {
        let h = hopf();
        let r = h.relation_record(HopfMap::Coproduct, Relation::R4 { n: 1, m: -1 });
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"axiom":"relation","map":"coproduct","relation":"R4","n":1,"m":-1,"status":"ok"}"#
        );
    }
}
