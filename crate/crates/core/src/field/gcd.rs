//! Polynomial GCD over ℤ[p, q].
//!
//! The sparse polynomial is viewed as a dense polynomial in `p` whose
//! coefficients are dense polynomials in `q`, and reduced with a primitive
//! pseudo-remainder sequence at both levels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Exp, Poly};

/// Dense univariate polynomial over ℤ, little-endian, no trailing zeros.
type ZPoly = Vec<BigInt>;
/// Dense polynomial in `p` with `ZPoly` coefficients in `q`.
type BiPoly = Vec<ZPoly>;

fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn zp_content(a: &ZPoly) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn zp_div_int(a: &ZPoly, d: &BigInt) -> ZPoly {
    a.iter().map(|c| c / d).collect()
}

fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn zp_sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b assumed or trivially `a`).
fn zp_prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let offset = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[offset + j] -= &lr * y;
        }
        trim(&mut r);
    }
    r
}

fn zp_primitive(a: &ZPoly) -> ZPoly {
    let c = zp_content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out = zp_div_int(a, &c);
    if out.last().is_some_and(Signed::is_negative) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

/// GCD in ℤ[q] with positive leading coefficient.
fn zp_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return zp_primitive(b).iter().map(|x| x * zp_content(b)).collect();
    }
    if b.is_empty() {
        return zp_primitive(a).iter().map(|x| x * zp_content(a)).collect();
    }
    let c = zp_content(a).gcd(&zp_content(b));
    let (mut x, mut y) = (zp_primitive(a), zp_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = zp_primitive(&zp_prem(&x, &y));
        x = y;
        y = r;
    }
    x.iter().map(|v| v * &c).collect()
}

/// Exact division in ℤ[q]; the caller guarantees divisibility.
fn zp_div_exact(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut quot = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let coeff = &r[dr] / lb;
        let offset = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[offset + j] -= &coeff * y;
        }
        quot[offset] = coeff;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact division in Z[q]");
    trim(&mut quot);
    quot
}

fn bi_content(a: &BiPoly) -> ZPoly {
    bi_content_from(a, Vec::new())
}

/// `gcd(start, content(a))`.
fn bi_content_from(a: &BiPoly, start: ZPoly) -> ZPoly {
    let mut g = start;
    for (i, c) in a.iter().enumerate() {
        if g.len() == 1 {
            // Down to an integer: finish with integer contents only.
            let mut k = g[0].clone();
            for c in &a[i..] {
                if k.is_one() {
                    break;
                }
                k = k.gcd(&zp_content(c));
            }
            return vec![k];
        }
        g = zp_gcd(&g, c);
    }
    g
}

fn bi_trim(a: &mut BiPoly) {
    while a.last().is_some_and(Vec::is_empty) {
        a.pop();
    }
}

fn bi_div_zp(a: &BiPoly, d: &ZPoly) -> BiPoly {
    a.iter().map(|c| zp_div_exact(c, d)).collect()
}

fn bi_primitive(a: &BiPoly) -> BiPoly {
    let c = bi_content(a);
    if c.is_empty() {
        return Vec::new();
    }
    bi_div_zp(a, &c)
}

fn bi_prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let offset = dr - db;
        for c in r.iter_mut() {
            *c = zp_mul(c, lb);
        }
        for (j, y) in b.iter().enumerate() {
            let t = zp_mul(&lr, y);
            r[offset + j] = zp_sub(&r[offset + j], &t);
        }
        bi_trim(&mut r);
    }
    r
}

/// Prime for the modular coprimality test.
const PRIME: u64 = 2_147_483_647;

fn mod_prime(c: &BigInt) -> u64 {
    let r = c % BigInt::from(PRIME);
    let r = if r.is_negative() {
        r + BigInt::from(PRIME)
    } else {
        r
    };
    u64::try_from(r).expect("reduced below the prime")
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

/// `a(p, q0) mod PRIME` as a dense polynomial in `p`, or `None` when the
/// leading coefficient in `p` vanishes there.
fn image_at(a: &Poly, q0: u64) -> Option<Vec<u64>> {
    let deg = a.degree_p() as usize;
    let mut out = vec![0u64; deg + 1];
    for (e, c) in a.terms() {
        let v = mod_prime(c) * pow_mod(q0, e.q as u64) % PRIME;
        out[e.p as usize] = (out[e.p as usize] + v) % PRIME;
    }
    (out[deg] != 0).then_some(out)
}

/// Degree of the gcd of two dense polynomials over 𝔽_PRIME.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        if a.len() >= b.len() {
            let inv = pow_mod(*b.last().unwrap(), PRIME - 2);
            while a.len() >= b.len() {
                let f = a.last().unwrap() * inv % PRIME;
                let off = a.len() - b.len();
                for (i, &bi) in b.iter().enumerate() {
                    a[off + i] = (a[off + i] + PRIME - f * bi % PRIME) % PRIME;
                }
                trim(&mut a);
                if a.is_empty() {
                    break;
                }
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when `gcd(a, b)` certainly has degree 0 in `p`.
///
/// The gcd's image under `q ↦ q0` divides both images, and keeps its
/// `p`-degree whenever the inputs' leading coefficients survive.
fn coprime_in_p(a: &Poly, b: &Poly) -> bool {
    for q0 in [1_000_003u64, 7_368_787, 104_729] {
        if let (Some(x), Some(y)) = (image_at(a, q0), image_at(b, q0)) {
            return gcd_degree_mod(x, y) == 0;
        }
    }
    false
}

fn to_dense(a: &Poly) -> BiPoly {
    let mut out: BiPoly = vec![Vec::new(); a.degree_p() as usize + 1];
    for (e, c) in a.terms() {
        let row = &mut out[e.p as usize];
        if row.len() <= e.q as usize {
            row.resize(e.q as usize + 1, BigInt::zero());
        }
        row[e.q as usize] = c.clone();
    }
    bi_trim(&mut out);
    out
}

fn from_dense(a: &BiPoly) -> Poly {
    Poly::from_terms(a.iter().enumerate().flat_map(|(i, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (Exp::new(i as u32, j as u32), c.clone()))
    }))
}

/// Greatest common divisor in ℤ[p, q], normalized to a positive grlex
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        let g = a.content().gcd(&b.content());
        return Poly::constant(g);
    }
    if a.is_monomial() || b.is_monomial() {
        // Monomial content is handled by the caller; only integer content remains.
        let ma = a.monomial_content();
        let mb = b.monomial_content();
        let g = a.content().gcd(&b.content());
        return Poly::monomial(Exp::new(ma.p.min(mb.p), ma.q.min(mb.q)), g);
    }
    // Make `b` the smaller input; only its primitive part is needed, since a
    // primitive divisor of `b` divides `a` iff it divides `pp(a)`.
    let (a, b) = if a.terms().len() < b.terms().len() {
        (b, a)
    } else {
        (a, b)
    };
    let db = to_dense(b);
    let cb = bi_content(&db);
    if coprime_in_p(a, b) {
        let c = if cb.len() == 1 {
            vec![a.content().gcd(&cb[0])]
        } else {
            bi_content_from(&to_dense(a), cb)
        };
        return normalize_sign(from_dense(&vec![c]));
    }
    let da = to_dense(a);
    let c = bi_content_from(&da, cb.clone());
    let (mut x, mut y) = (da, bi_div_zp(&db, &cb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // y is a nonzero element of ℤ[q]; the primitive part is 1.
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = bi_primitive(&bi_prem(&x, &y));
        x = y;
        y = r;
    }
    // The last remainder may be the unreduced `a`.
    let x = bi_primitive(&x);
    let g: BiPoly = x.iter().map(|row| zp_mul(row, &c)).collect();
    normalize_sign(from_dense(&g))
}

fn normalize_sign(a: Poly) -> Poly {
    if a.leading_coeff().is_negative() {
        a.neg()
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Poly {
        Poly::p()
    }
    fn q() -> Poly {
        Poly::q()
    }
    fn c(n: i64) -> Poly {
        Poly::constant(BigInt::from(n))
    }

    #[test]
    fn gcd_of_products_finds_common_factor() {
        let f = p().sub(&q());
        let g1 = p().add(&q()).mul(&f);
        let g2 = p().mul(&p()).add(&q()).mul(&f);
        assert_eq!(gcd(&g1, &g2), f);
    }

    #[test]
    fn gcd_includes_integer_content() {
        let a = c(6).mul(&p().add(&c(1)));
        let b = c(4).mul(&p().add(&c(1))).mul(&q());
        assert_eq!(gcd(&a, &b), c(2).mul(&p().add(&c(1))));
    }

    #[test]
    fn gcd_with_q_only_content() {
        // (q + 1) divides both; coefficients in q only exercise the inner level.
        let qp1 = q().add(&c(1));
        let a = qp1.mul(&p().add(&q()));
        let b = qp1.mul(&qp1).mul(&p().sub(&c(2)));
        assert_eq!(gcd(&a, &b), qp1);
    }

    #[test]
    fn coprime_quantum_integers() {
        // p^2 + pq + q^2 and p + q are coprime.
        let a = Poly::from_terms([
            (Exp::new(2, 0), BigInt::from(1)),
            (Exp::new(1, 1), BigInt::from(1)),
            (Exp::new(0, 2), BigInt::from(1)),
        ]);
        assert_eq!(gcd(&a, &p().add(&q())), c(1));
    }

    #[test]
    fn gcd_sign_is_positive() {
        let f = q().sub(&p());
        let g = gcd(&f, &f.mul(&p().add(&c(3))));
        assert_eq!(g, p().sub(&q()));
    }
}
