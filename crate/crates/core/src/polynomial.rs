//! Dense polynomials and rational functions in `x` over a base field.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::expr::{self, Algebra};
use crate::valued_field::{FieldElement, ValuedField};

/// `c₀ + c₁x + … + c_n xⁿ` with `c_n ≠ 0`; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(vec![c])
    }

    pub fn x(field: &ValuedField) -> Self {
        Poly::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &ValuedField, c: FieldElement, i: usize) -> Self {
        let mut coeffs = vec![field.zero(); i];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `x − c`.
    pub fn linear(field: &ValuedField, c: &FieldElement) -> Self {
        Poly::new(vec![field.neg(c), field.one()])
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, field: &ValuedField, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self, field: &ValuedField) -> bool {
        self.leading() == Some(&field.one())
    }

    pub fn add(&self, other: &Poly, field: &ValuedField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i))).collect())
    }

    pub fn neg(&self, field: &ValuedField) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Poly, field: &ValuedField) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: &FieldElement, field: &ValuedField) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, field: &ValuedField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, n: u32, field: &ValuedField) -> Poly {
        let mut acc = Poly::constant(field.one());
        for _ in 0..n {
            acc = acc.mul(self, field);
        }
        acc
    }

    pub fn divrem(&self, d: &Poly, field: &ValuedField) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = field.inv(d.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = field.mul(&rem[top], &inv_lead);
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    let k = top - dd + j;
                    rem[k] = field.sub(&rem[k], &field.mul(&c, dj));
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn monic(&self, field: &ValuedField) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&field.inv(l).unwrap(), field),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly, field: &ValuedField) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b, field).unwrap().1;
            a = b;
            b = r.monic(field);
        }
        a.monic(field)
    }

    pub fn eval(&self, a: &FieldElement, field: &ValuedField) -> FieldElement {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, a), c);
        }
        acc
    }

    /// `∂_i f = Σ_j binom(j, i) c_j x^{j−i}`.
    pub fn hasse_derivative(&self, i: usize, field: &ValuedField) -> Poly {
        if i == 0 {
            return self.clone();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(i)
                .map(|(j, c)| field.mul(&field.from_bigint(&binomial(j, i)), c))
                .collect(),
        )
    }

    /// `(∂₀f(c), …, ∂_n f(c))` where `n = deg f`.
    pub fn taylor_coefficients(&self, c: &FieldElement, field: &ValuedField) -> Vec<FieldElement> {
        (0..self.coeffs.len()).map(|i| self.hasse_derivative(i, field).eval(c, field)).collect()
    }

    /// `Σ d_i (x − c)^i`.
    pub fn from_taylor(coeffs: &[FieldElement], c: &FieldElement, field: &ValuedField) -> Poly {
        let lin = Poly::linear(field, c);
        let mut acc = Poly::zero();
        for d in coeffs.iter().rev() {
            acc = acc.mul(&lin, field).add(&Poly::constant(d.clone()), field);
        }
        acc
    }

    /// `f(x + b)`.
    pub fn compose_shift(&self, b: &FieldElement, field: &ValuedField) -> Poly {
        let shift = Poly::new(vec![b.clone(), field.one()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift, field).add(&Poly::constant(c.clone()), field);
        }
        acc
    }

    pub fn parse(s: &str, field: &ValuedField) -> Result<Poly> {
        let r = RatFun::parse(s, field)?;
        if !r.den.is_constant() {
            return Err(Error::Parse(format!("{s:?} is not a polynomial")));
        }
        Ok(r.num.scale(&field.inv(&r.den.coeffs[0])?, field))
    }
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let term = if i == 0 {
                cs
            } else {
                let pow = if i == 1 { "x".to_string() } else { format!("x^{i}") };
                match cs.as_str() {
                    "1" => pow,
                    "-1" => format!("-{pow}"),
                    _ if is_integer_literal(&cs) => format!("{cs}{pow}"),
                    _ => format!("({cs}){pow}"),
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

/// `num/den` with `den` monic and coprime to `num`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly, field: &ValuedField) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun::from_poly(Poly::zero(), field));
        }
        let g = num.gcd(&den, field);
        let num = num.divrem(&g, field)?.0;
        let den = den.divrem(&g, field)?.0;
        let l = field.inv(den.leading().unwrap())?;
        Ok(RatFun { num: num.scale(&l, field), den: den.scale(&l, field) })
    }

    pub fn from_poly(p: Poly, field: &ValuedField) -> RatFun {
        RatFun { num: p, den: Poly::constant(field.one()) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFun, field: &ValuedField) -> RatFun {
        let num = self.num.mul(&o.den, field).add(&o.num.mul(&self.den, field), field);
        RatFun::new(num, self.den.mul(&o.den, field), field).unwrap()
    }

    pub fn neg(&self, field: &ValuedField) -> RatFun {
        RatFun { num: self.num.neg(field), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFun, field: &ValuedField) -> RatFun {
        RatFun::new(self.num.mul(&o.num, field), self.den.mul(&o.den, field), field).unwrap()
    }

    pub fn inv(&self, field: &ValuedField) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone(), field)
    }

    pub fn parse(s: &str, field: &ValuedField) -> Result<RatFun> {
        expr::parse_in(s, &FunctionField { field })
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeffs[0].to_string() == "1" {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// `K(x)` as an expression algebra over variables `x` and, for function fields, `t`.
struct FunctionField<'a> {
    field: &'a ValuedField,
}

impl Algebra for FunctionField<'_> {
    type Val = RatFun;

    fn int(&self, n: &BigInt) -> Result<RatFun> {
        Ok(RatFun::from_poly(Poly::constant(self.field.from_bigint(n)), self.field))
    }
    fn var(&self, name: char) -> Result<RatFun> {
        match name {
            'x' => Ok(RatFun::from_poly(Poly::x(self.field), self.field)),
            _ => Ok(RatFun::from_poly(Poly::constant(expr::Algebra::var(self.field, name)?), self.field)),
        }
    }
    fn add(&self, a: &RatFun, b: &RatFun) -> Result<RatFun> {
        Ok(a.add(b, self.field))
    }
    fn neg(&self, a: &RatFun) -> Result<RatFun> {
        Ok(a.neg(self.field))
    }
    fn mul(&self, a: &RatFun, b: &RatFun) -> Result<RatFun> {
        Ok(a.mul(b, self.field))
    }
    fn div(&self, a: &RatFun, b: &RatFun) -> Result<RatFun> {
        Ok(a.mul(&b.inv(self.field)?, self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &ValuedField, s: &str) -> Poly {
        Poly::parse(s, f).unwrap()
    }

    fn el(f: &ValuedField, s: &str) -> FieldElement {
        f.parse_element(s).unwrap()
    }

    #[test]
    fn hasse_derivatives() {
        let q = ValuedField::padic(2).unwrap();
        assert_eq!(poly(&q, "x^3").hasse_derivative(2, &q), poly(&q, "3x"));
        let f2 = ValuedField::fp_rational_functions(2).unwrap();
        assert!(poly(&f2, "x^2").hasse_derivative(1, &f2).is_zero());
        let f3 = ValuedField::fp_rational_functions(3).unwrap();
        assert_eq!(poly(&f3, "x^2 + t x").hasse_derivative(1, &f3), poly(&f3, "2x + t"));
    }

    #[test]
    fn taylor() {
        let q = ValuedField::padic(2).unwrap();
        let one = q.one();
        assert_eq!(poly(&q, "x^2").taylor_coefficients(&one, &q), vec![q.from_int(1), q.from_int(2), q.from_int(1)]);
        assert_eq!(poly(&q, "x").taylor_coefficients(&q.zero(), &q), vec![q.zero(), q.one()]);
        let f2 = ValuedField::fp_rational_functions(2).unwrap();
        let t = f2.t().unwrap();
        let f = poly(&f2, "x^2+x+t");
        let tc = f.taylor_coefficients(&t, &f2);
        assert_eq!(tc, vec![el(&f2, "t^2"), f2.one(), f2.one()]);
        assert_eq!(Poly::from_taylor(&tc, &t, &f2), f);
    }

    #[test]
    fn arithmetic() {
        let q = ValuedField::padic(2).unwrap();
        assert_eq!(poly(&q, "x^2+1").eval(&q.from_int(2), &q), q.from_int(5));
        assert_eq!(poly(&q, "x^2").compose_shift(&q.one(), &q), poly(&q, "x^2+2x+1"));
        assert_eq!(poly(&q, "x+1").mul(&poly(&q, "x-1"), &q), poly(&q, "x^2-1"));
        let (quot, rem) = poly(&q, "x^3+2").divrem(&poly(&q, "x+1"), &q).unwrap();
        assert_eq!(quot, poly(&q, "x^2-x+1"));
        assert_eq!(rem, poly(&q, "1"));
    }

    #[test]
    fn literals() {
        let q = ValuedField::padic(2).unwrap();
        let f = poly(&q, "x^2 + (1/2)x + 3");
        assert_eq!(f.to_string(), "x^2+(1/2)x+3");
        let f3 = ValuedField::fp_rational_functions(3).unwrap();
        for s in ["x^2+x+t", "(t+1)x^3+2x-t", "(1/t)x+t^2+1", "-x"] {
            let p = poly(&f3, s);
            assert_eq!(poly(&f3, &p.to_string()), p, "{s}");
        }
        assert!(Poly::parse("1/x", &q).is_err());
        let r = RatFun::parse("(x^2+2)/(2x^2+2x)", &q).unwrap();
        assert_eq!(r.den(), &poly(&q, "x^2+x"));
        assert_eq!(RatFun::parse(&r.to_string(), &q).unwrap(), r);
        let r = RatFun::parse("(x^2-1)/(x-1)", &q).unwrap();
        assert_eq!(r.num(), &poly(&q, "x+1"));
    }
}
