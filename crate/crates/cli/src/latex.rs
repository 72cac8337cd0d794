//! LaTeX rendering of coefficients, words and tensors.

use num_traits::{One, Signed};
use vpq_core::field::Poly;
use vpq_core::{AlgebraElement, Generator, HomLieElement, RatFunc, TensorElement, Word};

fn poly(f: &Poly) -> String {
    let mut s = String::new();
    for (i, (e, c)) in f.terms().iter().enumerate() {
        let mag = c.abs();
        match (i, c.is_negative()) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mut mono = Vec::new();
        for (name, k) in [("p", e.p), ("q", e.q)] {
            match k {
                0 => {}
                1 => mono.push(name.to_string()),
                _ => mono.push(format!("{name}^{{{k}}}")),
            }
        }
        if mono.is_empty() || !mag.is_one() {
            mono.insert(0, mag.to_string());
        }
        s.push_str(&mono.join(" "));
    }
    s
}

/// `(negative, magnitude)`, with the magnitude as a fraction when needed.
fn signed_ratfunc(c: &RatFunc) -> (bool, String) {
    let (num, den) = c.folded();
    let neg = num.leading_coeff().is_negative();
    let num = if neg { num.neg() } else { num };
    let body = if den.is_one() {
        poly(&num)
    } else {
        format!("\\frac{{{}}}{{{}}}", poly(&num), poly(&den))
    };
    (neg, body)
}

pub fn ratfunc(c: &RatFunc) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let (neg, body) = signed_ratfunc(c);
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

pub fn word(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let letters = w.letters();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let g = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == g {
            j += 1;
        }
        let k = j - i;
        let (base, exp) = match g {
            Generator::T => ("T".to_string(), k.to_string()),
            Generator::Tinv => ("T".to_string(), format!("-{k}")),
            Generator::L(n) => (format!("L_{{{n}}}"), k.to_string()),
            Generator::C => ("C".to_string(), k.to_string()),
        };
        if exp == "1" {
            parts.push(base);
        } else {
            parts.push(format!("{base}^{{{exp}}}"));
        }
        i = j;
    }
    parts.join(" ")
}

fn combination<I: IntoIterator<Item = (String, RatFunc)>>(terms: I) -> String {
    let mut s = String::new();
    for (x, c) in terms {
        let (neg, mag) = signed_ratfunc(&c);
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let unit_coeff = mag == "1";
        let needs_parens = mag.contains(' ') && !mag.starts_with("\\frac");
        let mag = if needs_parens {
            format!("({mag})")
        } else {
            mag
        };
        match (unit_coeff, x == "1") {
            (true, _) => s.push_str(&x),
            (false, true) => s.push_str(&mag),
            (false, false) => s.push_str(&format!("{mag} {x}")),
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub fn element(x: &AlgebraElement) -> String {
    combination(x.terms().map(|(w, c)| (word(w), c.clone())))
}

pub fn homlie(x: &HomLieElement) -> String {
    let mut terms: Vec<(String, RatFunc)> = x
        .l_terms()
        .map(|(n, c)| (format!("L_{{{n}}}"), c.clone()))
        .collect();
    if !x.c_coeff().is_zero() {
        terms.push(("C".into(), x.c_coeff().clone()));
    }
    combination(terms)
}

pub fn tensor(x: &TensorElement) -> String {
    let terms: Vec<(String, RatFunc)> = x
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(ws, c)| {
            let slots: Vec<String> = ws.iter().map(word).collect();
            (slots.join(" \\otimes "), c.clone())
        })
        .collect();
    combination(terms)
}
