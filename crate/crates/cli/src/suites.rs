//! Verification suites emitting one record per check.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use vpq_core::freealg::{random_word, R5Variant};
use vpq_core::homlie::{hom_jacobi_residual, skew_residual};
use vpq_core::hopf::{self, Status};
use vpq_core::oscillator::{verify_bracket, verify_power_commutator};
use vpq_core::{
    AlgebraElement, CoproductC, Error, FockOperator, GuardSpec, HomLieElement, HopfAlgebra, Mode,
    Oscillator, Relations,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fock,
    Homlie,
    Hopf,
    Confluence,
    All,
}

/// One JSON line of `verify` output. Fields are in sort order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Record {
    pub suite: Suite,
    pub axiom: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl Record {
    fn new(suite: Suite, axiom: &str, residual: Option<String>) -> Self {
        Record {
            suite,
            axiom: axiom.to_string(),
            map: None,
            mode: None,
            relation: None,
            n: None,
            m: None,
            k: None,
            element: None,
            seed: None,
            status: if residual.is_none() {
                Status::Ok
            } else {
                Status::Fail
            },
            residual,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Ok
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Index window half-width.
    pub range: i64,
    pub dim: usize,
    pub variant: R5Variant,
    pub coproduct_c: CoproductC,
    pub seed: u64,
    pub samples: usize,
    pub max_len: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            range: 2,
            dim: 12,
            variant: R5Variant::Hopf,
            coproduct_c: CoproductC::Corrected,
            seed: 20_240_917,
            samples: 200,
            max_len: 8,
        }
    }
}

fn fock_residual(op: &FockOperator) -> Option<String> {
    let nz = op.nonzero_entries();
    let (i, j, v) = nz.first()?;
    Some(format!("{} nonzero entries; ({i},{j}) = {v}", nz.len()))
}

fn element_residual(x: &AlgebraElement) -> Option<String> {
    (!x.is_zero()).then(|| x.to_string())
}

fn homlie_residual(x: &HomLieElement) -> Option<String> {
    (!x.is_zero()).then(|| x.to_string())
}

/// Bracket and power-commutator identities for each deformed mode on
/// `L_n, -1 ≤ n ≤ range`.
pub fn fock(opts: &VerifyOptions) -> Result<Vec<Record>, Error> {
    let guard = GuardSpec::new(opts.dim, 2, opts.range.max(0) as usize)?;
    let mut out = Vec::new();
    for mode in [Mode::Classical, Mode::OneParam, Mode::TwoParam] {
        let osc = Oscillator::new(opts.dim, mode)?;
        for n in -1..=opts.range {
            for m in -1..=opts.range {
                let res = verify_bracket(n, m, &osc, &guard)?;
                let mut r = Record::new(Suite::Fock, "bracket", fock_residual(&res));
                (r.mode, r.n, r.m) = (Some(mode), Some(n), Some(m));
                out.push(r);
            }
        }
        for n in 1..=opts.range.max(1) {
            let res = verify_power_commutator(n, &osc)?;
            let mut r = Record::new(Suite::Fock, "power_commutator", fock_residual(&res));
            (r.mode, r.n) = (Some(mode), Some(n));
            out.push(r);
        }
    }
    Ok(out)
}

/// Skew-symmetry and the Hom-Jacobi identity on `L_n, |n| ≤ range`.
pub fn homlie(opts: &VerifyOptions) -> Vec<Record> {
    let w = opts.range;
    let mut out = Vec::new();
    for n in -w..=w {
        for m in -w..=w {
            let mut r = Record::new(
                Suite::Homlie,
                "skew_symmetry",
                homlie_residual(&skew_residual(n, m)),
            );
            (r.n, r.m) = (Some(n), Some(m));
            out.push(r);
            for k in -w..=w {
                let res = hom_jacobi_residual(n, m, k);
                let mut r = Record::new(Suite::Homlie, "hom_jacobi", homlie_residual(&res));
                (r.n, r.m, r.k) = (Some(n), Some(m), Some(k));
                out.push(r);
            }
        }
    }
    out
}

pub fn hopf(opts: &VerifyOptions) -> Vec<Record> {
    let h = HopfAlgebra::new(Relations::new(opts.variant), opts.coproduct_c);
    h.verification_report(opts.range)
        .into_iter()
        .map(|hr: hopf::Record| Record {
            suite: Suite::Hopf,
            axiom: hr.axiom,
            map: Some(hr.map),
            mode: None,
            relation: hr.relation,
            n: hr.n,
            m: hr.m,
            k: None,
            element: hr.element,
            seed: None,
            status: hr.status,
            residual: hr.residual,
        })
        .collect()
}

/// Leftmost against rightmost normalization on seeded random words.
pub fn confluence(opts: &VerifyOptions) -> Vec<Record> {
    let rel = Relations::new(opts.variant);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut words: Vec<_> = (0..opts.samples)
        .map(|_| random_word(&mut rng, opts.max_len, -opts.range..=opts.range))
        .collect();
    words.sort();
    words.dedup();
    words
        .into_iter()
        .map(|w| {
            let x = AlgebraElement::word(w);
            let mut r = Record::new(
                Suite::Confluence,
                "strategy_agreement",
                element_residual(&rel.strategy_defect(&x)),
            );
            r.element = Some(x.to_string());
            r.seed = Some(opts.seed);
            r
        })
        .collect()
}

/// Runs `suite`; records come back sorted.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Record>, Error> {
    let mut out = match suite {
        Suite::Fock => fock(opts)?,
        Suite::Homlie => homlie(opts),
        Suite::Hopf => hopf(opts),
        Suite::Confluence => confluence(opts),
        Suite::All => {
            let mut v = fock(opts)?;
            v.extend(homlie(opts));
            v.extend(hopf(opts));
            v.extend(confluence(opts));
            v
        }
    };
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fock_window_passes() {
        let recs = run(Suite::Fock, &VerifyOptions::default()).unwrap();
        assert_eq!(recs.len(), 3 * (16 + 2));
        assert!(recs.iter().all(Record::passed));
    }

    #[test]
    fn fock_guard_is_enforced() {
        let opts = VerifyOptions {
            dim: 4,
            ..VerifyOptions::default()
        };
        assert!(matches!(
            run(Suite::Fock, &opts),
            Err(Error::GuardViolation(_))
        ));
    }

    #[test]
    fn homlie_window_passes() {
        let recs = run(Suite::Homlie, &VerifyOptions::default()).unwrap();
        assert_eq!(recs.len(), 25 + 125);
        assert!(recs.iter().all(Record::passed));
    }

    #[test]
    fn confluence_is_reproducible() {
        let opts = VerifyOptions {
            samples: 20,
            ..VerifyOptions::default()
        };
        let a = run(Suite::Confluence, &opts).unwrap();
        assert_eq!(a, run(Suite::Confluence, &opts).unwrap());
        assert!(a.iter().all(|r| r.seed == Some(opts.seed)));
    }

    #[test]
    fn record_json_shape() {
        let mut r = Record::new(Suite::Fock, "bracket", None);
        (r.mode, r.n, r.m) = (Some(Mode::TwoParam), Some(1), Some(-1));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"suite":"fock","axiom":"bracket","mode":"two_param","n":1,"m":-1,"status":"ok"}"#
        );
    }
}
