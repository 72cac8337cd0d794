//! Structure-constant and Hopf-map tables as JSON or LaTeX.

use serde::Serialize;
use vpq_core::homlie::{structure_constants, vbracket};
use vpq_core::{AlgebraElement, HomLieElement, HopfAlgebra};

use crate::latex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    StructureConstants,
    HopfMaps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Latex,
}

#[derive(Serialize)]
struct HopfRow {
    generator: String,
    coproduct: String,
    counit: String,
    antipode: String,
}

fn generators(range: i64) -> Vec<AlgebraElement> {
    vpq_core::hopf::generators(range)
}

fn align(rows: Vec<String>) -> String {
    let mut s = String::from("\\begin{align*}\n");
    let n = rows.len();
    for (i, row) in rows.into_iter().enumerate() {
        s.push_str(&row);
        s.push_str(if i + 1 < n { " \\\\\n" } else { "\n" });
    }
    s.push_str("\\end{align*}\n");
    s
}

pub fn export(kind: TableKind, format: TableFormat, range: i64, h: &HopfAlgebra) -> String {
    let window = -range..=range;
    match (kind, format) {
        (TableKind::StructureConstants, TableFormat::Json) => {
            let rows = structure_constants(window);
            serde_json::to_string_pretty(&rows).expect("plain data") + "\n"
        }
        (TableKind::StructureConstants, TableFormat::Latex) => {
            let mut rows = Vec::new();
            for n in window.clone() {
                for m in window.clone() {
                    let b = vbracket(&HomLieElement::l(n), &HomLieElement::l(m));
                    rows.push(format!("[L_{{{n}}}, L_{{{m}}}] &= {}", latex::homlie(&b)));
                }
            }
            align(rows)
        }
        (TableKind::HopfMaps, TableFormat::Json) => {
            let rows: Vec<HopfRow> = generators(range)
                .iter()
                .map(|x| HopfRow {
                    generator: x.to_string(),
                    coproduct: h.coproduct(x).to_string(),
                    counit: h.counit(x).to_string(),
                    antipode: h.antipode(x).to_string(),
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("plain data") + "\n"
        }
        (TableKind::HopfMaps, TableFormat::Latex) => {
            let mut rows = Vec::new();
            for x in generators(range) {
                let g = latex::element(&x);
                rows.push(format!(
                    "\\Delta({g}) &= {}",
                    latex::tensor(&h.coproduct(&x))
                ));
                rows.push(format!(
                    "\\varepsilon({g}) &= {}",
                    latex::ratfunc(&h.counit(&x))
                ));
                rows.push(format!("S({g}) &= {}", latex::element(&h.antipode(&x))));
            }
            align(rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_constants_json_keys() {
        let s = export(
            TableKind::StructureConstants,
            TableFormat::Json,
            1,
            &HopfAlgebra::default(),
        );
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[0]["n"], -1);
        assert_eq!(rows[0]["m"], -1);
        assert_eq!(rows[0]["coeff_L"], "0");
        assert!(rows.iter().all(|r| r.get("coeff_C").is_some()));
    }

    #[test]
    fn hopf_maps_cover_generators() {
        let s = export(
            TableKind::HopfMaps,
            TableFormat::Json,
            1,
            &HopfAlgebra::default(),
        );
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let l0 = v
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["generator"] == "L(0)")
            .unwrap();
        assert_eq!(l0["coproduct"], "L(0)(x)1 + 1(x)L(0)");
        assert_eq!(l0["counit"], "0");
        assert_eq!(l0["antipode"], "-L(0)");
    }

    #[test]
    fn latex_is_an_align_block() {
        let s = export(
            TableKind::StructureConstants,
            TableFormat::Latex,
            1,
            &HopfAlgebra::default(),
        );
        assert!(s.starts_with("\\begin{align*}\n"));
        assert!(s.ends_with("\\end{align*}\n"));
        assert!(s.contains("[L_{1}, L_{-1}] &= "));
        let h = export(
            TableKind::HopfMaps,
            TableFormat::Latex,
            0,
            &HopfAlgebra::default(),
        );
        assert!(h.contains("\\Delta(T) &= T \\otimes T"));
    }
}
