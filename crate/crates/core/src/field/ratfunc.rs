use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::{Exp, Poly};
use crate::Error;

/// An exact element of ℚ(p, q).
///
/// Stored as `p^a q^b · num / den` where neither polynomial is divisible by
/// `p` or `q`, `gcd(num, den)` is a unit, the integer contents are coprime and
/// the grlex-leading coefficient of `den` is positive. This form is unique,
/// so the derived equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: (i64, i64),
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            shift: (0, 0),
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        RatFunc {
            shift: (0, 0),
            num: Poly::constant(n),
            den: Poly::one(),
        }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::int(n)
            .checked_div(&Self::int(d))
            .expect("zero denominator in RatFunc::ratio")
    }

    /// `p^a q^b` for any integers `a, b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        RatFunc {
            shift: (a, b),
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn p() -> Self {
        Self::monomial(1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(0, 1)
    }

    /// `(q/p)^k`, the ratio that most structure constants are built from.
    pub fn ratio_power(k: i64) -> Self {
        Self::monomial(-k, k)
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_parts((0, 0), p, Poly::one())
    }

    /// Builds the canonical form of `p^a q^b · num / den`.
    ///
    /// Panics if `den` is zero.
    pub fn from_parts(shift: (i64, i64), num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "RatFunc with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let mn = num.monomial_content();
        let md = den.monomial_content();
        let mut num = num.unshift(mn);
        let mut den = den.unshift(md);
        let shift = (
            shift.0 + mn.p as i64 - md.p as i64,
            shift.1 + mn.q as i64 - md.q as i64,
        );
        if !den.is_constant() {
            let g = gcd(&num, &den);
            if !g.is_one() {
                if g.is_constant() {
                    let c = g.as_constant().unwrap();
                    num = num.div_int(&c);
                    den = den.div_int(&c);
                } else {
                    num = num.div_exact(&g).expect("gcd divides numerator");
                    den = den.div_exact(&g).expect("gcd divides denominator");
                }
            }
        } else {
            let c = num.content().gcd(&den.content());
            if !c.is_one() {
                num = num.div_int(&c);
                den = den.div_int(&c);
            }
        }
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { shift, num, den }
    }

    pub fn shift(&self) -> (i64, i64) {
        self.shift
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == (0, 0) && self.num.is_one() && self.den.is_one()
    }

    /// True for `±c p^a q^b` with an integer `c`.
    pub fn is_scaled_monomial(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// True when the denominator is trivial, i.e. the value is a Laurent polynomial.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplies by `p^a q^b` without touching the polynomial parts.
    pub fn scale_monomial(&self, a: i64, b: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        RatFunc {
            shift: (self.shift.0 + a, self.shift.1 + b),
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFunc {
            shift: (-self.shift.0, -self.shift.1),
            num,
            den,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let e = k.unsigned_abs() as u32;
        if base.is_zero() {
            return Self::zero();
        }
        // Powers of coprime polynomials stay coprime, so no reduction is needed.
        let mut num = base.num.pow(e);
        let mut den = base.den.pow(e);
        if den.leading_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc {
            shift: (base.shift.0 * k.abs(), base.shift.1 * k.abs()),
            num,
            den,
        }
    }

    /// Substitutes `p := 1`; the result is a rational function of `q` alone.
    pub fn specialize_p1(&self) -> Result<Self, Error> {
        let den = self.den.eval_p_one();
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization {
                param: "p",
                value: self.to_string(),
            });
        }
        Ok(Self::from_parts(
            (0, self.shift.1),
            self.num.eval_p_one(),
            den,
        ))
    }

    /// Substitutes `q := 1`.
    pub fn specialize_q1(&self) -> Result<Self, Error> {
        let den = self.den.eval_q_one();
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization {
                param: "q",
                value: self.to_string(),
            });
        }
        Ok(Self::from_parts(
            (self.shift.0, 0),
            self.num.eval_q_one(),
            den,
        ))
    }

    /// True when the value does not depend on `p`.
    pub fn is_free_of_p(&self) -> bool {
        self.shift.0 == 0 && self.num.degree_p() == 0 && self.den.degree_p() == 0
    }

    /// Evaluates at a rational point; `None` at a pole.
    pub fn eval(&self, p: &BigRational, q: &BigRational) -> Option<BigRational> {
        let d = eval_poly(&self.den, p, q);
        if d.is_zero() {
            return None;
        }
        if (p.is_zero() && self.shift.0 < 0) || (q.is_zero() && self.shift.1 < 0) {
            return None;
        }
        let n = eval_poly(&self.num, p, q);
        Some(n / d * rat_pow(p, self.shift.0) * rat_pow(q, self.shift.1))
    }

    /// Numerator and denominator with the monomial shift folded in, as
    /// polynomials with non-negative exponents.
    pub fn folded(&self) -> (Poly, Poly) {
        let (a, b) = self.shift;
        let up = Exp::new(a.max(0) as u32, b.max(0) as u32);
        let down = Exp::new((-a).max(0) as u32, (-b).max(0) as u32);
        (self.num.shift(up), self.den.shift(down))
    }
}

fn rat_pow(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

fn eval_poly(f: &Poly, p: &BigRational, q: &BigRational) -> BigRational {
    f.terms()
        .iter()
        .map(|(e, c)| {
            BigRational::from_integer(c.clone()) * rat_pow(p, e.p as i64) * rat_pow(q, e.q as i64)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn add(self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = (
            self.shift.0.min(other.shift.0),
            self.shift.1.min(other.shift.1),
        );
        let lift = |x: &RatFunc| {
            x.num
                .shift(Exp::new((x.shift.0 - s.0) as u32, (x.shift.1 - s.1) as u32))
        };
        let (xn, yn) = (lift(self), lift(other));
        if self.den == other.den {
            if self.den.is_one() {
                let num = xn.add(&yn);
                return RatFunc::from_parts(s, num, Poly::one());
            }
            return RatFunc::from_parts(s, xn.add(&yn), self.den.clone());
        }
        if self.den.is_constant() && other.den.is_constant() {
            let a = self.den.as_constant().unwrap();
            let b = other.den.as_constant().unwrap();
            let l = a.lcm(&b);
            let num = xn.scale(&(&l / &a)).add(&yn.scale(&(&l / &b)));
            return RatFunc::from_parts(s, num, Poly::constant(l));
        }
        let g = gcd(&self.den, &other.den);
        let xa = other.den.div_exact(&g).expect("gcd divides");
        let yb = self.den.div_exact(&g).expect("gcd divides");
        let num = xn.mul(&xa).add(&yn.mul(&yb));
        let den = self.den.mul(&xa);
        RatFunc::from_parts(s, num, den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn sub(self, other: &RatFunc) -> RatFunc {
        self + &(-other)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;

    fn mul(self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let shift = (self.shift.0 + other.shift.0, self.shift.1 + other.shift.1);
        if self.den.is_one() && other.den.is_one() {
            // Product of polynomials free of p- and q-content has none either.
            return RatFunc {
                shift,
                num: self.num.mul(&other.num),
                den: Poly::one(),
            };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let div = |a: &Poly, g: &Poly| {
            if g.is_one() {
                a.clone()
            } else {
                a.div_exact(g).expect("gcd divides")
            }
        };
        let num = div(&self.num, &g1).mul(&div(&other.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&other.den, &g1));
        if den.leading_coeff().is_negative() {
            return RatFunc {
                shift,
                num: num.neg(),
                den: den.neg(),
            };
        }
        RatFunc { shift, num, den }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, other: RatFunc) -> RatFunc {
                (&self).$m(&other)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, other: &RatFunc) -> RatFunc {
                (&self).$m(other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

/// A polynomial is a single printable atom when it is an integer or a lone
/// power of a single variable.
fn is_atom(f: &Poly) -> bool {
    match f.terms() {
        [(e, c)] => (*e == Exp::ONE) || (c.is_one() && (e.p == 0 || e.q == 0)),
        _ => false,
    }
}

impl fmt::Display for RatFunc {
    /// Renders as `num/den` with the monomial shift folded into whichever
    /// side it belongs, e.g. `-(p + q)/(p*q)` or `p^-1` as `1/p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (mut num, den) = self.folded();
        let negative = num.leading_coeff().is_negative();
        if negative {
            num = num.neg();
        }
        let multi = num.terms().len() > 1;
        if den.is_one() {
            return match (negative, multi) {
                (true, true) => write!(f, "-({num})"),
                (true, false) => write!(f, "-{num}"),
                (false, _) => write!(f, "{num}"),
            };
        }
        if negative {
            f.write_str("-")?;
        }
        if multi {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if is_atom(&den) {
            write!(f, "/{den}")
        } else {
            write!(f, "/({den})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> RatFunc {
        RatFunc::p()
    }
    fn q() -> RatFunc {
        RatFunc::q()
    }
    fn one() -> RatFunc {
        RatFunc::one()
    }

    #[test]
    fn subtraction_to_zero() {
        let a = &p() + &q();
        assert!((&a - &a).is_zero());
        assert_eq!(&a - &a, RatFunc::zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            p().checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn fraction_reduces_to_polynomial() {
        let n = &p().pow(2) - &q().pow(2);
        let d = &p() - &q();
        let r = n.checked_div(&d).unwrap();
        assert_eq!(r, &p() + &q());
        assert_eq!(r.to_string(), "p + q");
    }

    #[test]
    fn self_division_is_one() {
        let a = &(&p().pow(2) + &(&p() * &q())) + &q().pow(2);
        assert!(a.checked_div(&a).unwrap().is_one());
    }

    #[test]
    fn monomial_content_goes_to_shift() {
        let r = &(&p() * &q()) + &(&p() * &q().pow(3));
        assert_eq!(r.shift(), (1, 1));
        assert_eq!(r.to_string(), "p*q^3 + p*q");
    }

    #[test]
    fn rendering() {
        let r = -(&p() + &q()).checked_div(&(&p() * &q())).unwrap();
        assert_eq!(r.to_string(), "-(p + q)/(p*q)");
        assert_eq!((-q().pow(-1)).to_string(), "-1/q");
        assert_eq!(RatFunc::ratio(3, 6).to_string(), "1/2");
        assert_eq!(
            one().checked_div(&(&p() - &q())).unwrap().to_string(),
            "1/(p - q)"
        );
        assert_eq!(q().pow(2).checked_div(&p()).unwrap().to_string(), "q^2/p");
        assert_eq!((-p().pow(-2)).to_string(), "-1/p^2");
    }

    #[test]
    fn denominator_sign_is_positive() {
        let r = one().checked_div(&(&q() - &p())).unwrap();
        assert!(r.denominator().leading_coeff().is_positive());
        assert_eq!(r.to_string(), "-1/(p - q)");
    }

    #[test]
    fn specialization_at_p_one() {
        assert_eq!((&p() + &q()).specialize_p1().unwrap(), &one() + &q());
        let r = one().checked_div(&(&p() - &q())).unwrap();
        assert_eq!(
            r.specialize_p1().unwrap(),
            one().checked_div(&(&one() - &q())).unwrap()
        );
        let pole = one().checked_div(&(&p() - &one())).unwrap();
        assert!(matches!(
            pole.specialize_p1(),
            Err(Error::PoleAtSpecialization { .. })
        ));
    }

    #[test]
    fn rational_evaluation() {
        let r = (&p() + &q()).checked_div(&(&p() * &q())).unwrap();
        let v = r
            .eval(
                &BigRational::from_integer(2.into()),
                &BigRational::from_integer(3.into()),
            )
            .unwrap();
        assert_eq!(v, BigRational::new(5.into(), 6.into()));
    }

    #[test]
    fn integer_content_is_coprime() {
        let r = RatFunc::from_parts(
            (0, 0),
            Poly::p().scale(&BigInt::from(4)),
            Poly::p().add(&Poly::q()).scale(&BigInt::from(6)),
        );
        assert_eq!(r.to_string(), "2*p/(3*p + 3*q)");
        assert_eq!(r.shift(), (1, 0));
    }
}
