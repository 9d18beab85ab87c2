//! Sparse univariate polynomials and rational functions over 𝔽_p and ℚ.
//!
//! These back the function fields 𝔽_p(t), ℚ(t) and the residue function
//! fields `Kv(y)`. Terms are kept sorted by exponent with no zero
//! coefficients, so structural equality is mathematical equality.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Exponent = u128;

/// Arithmetic of a coefficient field. Implementors are small context
/// objects; elements are plain data.
pub trait CoeffField: Clone + Debug + PartialEq + Eq + Hash {
    type Elem: Clone + Debug + PartialEq + Eq + Hash;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// `None` when the denominator vanishes in this field.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
    /// Integer-valued elements render without parentheses.
    fn is_integral_literal(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    pub p: u64,
}

impl CoeffField for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverting zero in F_{}", self.p);
        let (g, x, _) = ext_gcd(*a as i128, self.p as i128);
        debug_assert_eq!(g, 1);
        x.rem_euclid(self.p as i128) as u64
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.from_bigint(q.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(&self.from_bigint(q.numer()), &self.inv(&d)))
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_integral_literal(&self, _a: &u64) -> bool {
        true
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalField;

impl CoeffField for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverting zero in Q");
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn is_integral_literal(&self, a: &BigRational) -> bool {
        a.is_integer()
    }
}

/// Sparse polynomial `Σ c_e t^e`, terms ascending by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<E> {
    terms: Vec<(Exponent, E)>,
}

fn add_exp(a: Exponent, b: Exponent) -> Exponent {
    a.checked_add(b).expect("exponent overflow")
}

impl<E: Clone + Debug + PartialEq + Eq + Hash> SparsePoly<E> {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Exponent, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<Exponent> {
        self.terms.last().map(|t| t.0)
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn order(&self) -> Option<Exponent> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lead(&self) -> Option<&E> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn low(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient<F: CoeffField<Elem = E>>(&self, f: &F, e: Exponent) -> E {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => f.zero(),
        }
    }

    pub fn monomial<F: CoeffField<Elem = E>>(f: &F, e: Exponent, c: E) -> Self {
        if f.is_zero(&c) {
            Self::zero()
        } else {
            SparsePoly { terms: vec![(e, c)] }
        }
    }

    pub fn constant<F: CoeffField<Elem = E>>(f: &F, c: E) -> Self {
        Self::monomial(f, 0, c)
    }

    pub fn one<F: CoeffField<Elem = E>>(f: &F) -> Self {
        Self::constant(f, f.one())
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<F: CoeffField<Elem = E>>(f: &F, mut raw: Vec<(Exponent, E)>) -> Self {
        raw.sort_by_key(|t| t.0);
        let mut terms: Vec<(Exponent, E)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = f.add(&last.1, &c),
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| !f.is_zero(&t.1));
        SparsePoly { terms }
    }

    pub fn from_dense<F: CoeffField<Elem = E>>(f: &F, coeffs: Vec<E>) -> Self {
        Self::from_terms(f, coeffs.into_iter().enumerate().map(|(i, c)| (i as Exponent, c)).collect())
    }

    pub fn add<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            if ea < eb {
                out.push((*ea, ca.clone()));
                i += 1;
            } else if eb < ea {
                out.push((*eb, cb.clone()));
                j += 1;
            } else {
                let c = f.add(ca, cb);
                if !f.is_zero(&c) {
                    out.push((*ea, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        SparsePoly { terms: out }
    }

    pub fn neg<F: CoeffField<Elem = E>>(&self, f: &F) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(e, c)| (*e, f.neg(c))).collect() }
    }

    pub fn sub<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn scale<F: CoeffField<Elem = E>>(&self, c: &E, f: &F) -> Self {
        if f.is_zero(c) {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(e, x)| (*e, f.mul(x, c))).collect() }
    }

    /// Multiplication by `c·t^k`.
    pub fn mul_term<F: CoeffField<Elem = E>>(&self, k: Exponent, c: &E, f: &F) -> Self {
        if f.is_zero(c) {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(e, x)| (add_exp(*e, k), f.mul(x, c))).collect(),
        }
    }

    /// Division by `t^k`; all exponents must be at least `k`.
    pub fn shift_down(&self, k: Exponent) -> Self {
        SparsePoly { terms: self.terms.iter().map(|(e, x)| (e - k, x.clone())).collect() }
    }

    pub fn mul<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (k, c) = &self.terms[0];
            return other.mul_term(*k, c, f);
        }
        if other.terms.len() == 1 {
            let (k, c) = &other.terms[0];
            return self.mul_term(*k, c, f);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((add_exp(*ea, *eb), f.mul(ca, cb)));
            }
        }
        Self::from_terms(f, raw)
    }

    pub fn monic<F: CoeffField<Elem = E>>(&self, f: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if f.is_one(l) => self.clone(),
            Some(l) => self.scale(&f.inv(l), f),
        }
    }

    pub fn divrem<F: CoeffField<Elem = E>>(&self, d: &Self, f: &F) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lead = f.inv(d.lead().unwrap());
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = f.mul(rem.lead().unwrap(), &inv_lead);
            let k = rd - dd;
            rem = rem.sub(&d.mul_term(k, &c, f), f);
            quot.push((k, c));
        }
        (Self::from_terms(f, quot), rem)
    }

    /// Remainder modulo `d`. Very sparse high-degree dividends are reduced
    /// term by term via `t^e mod d` by repeated squaring.
    pub fn rem<F: CoeffField<Elem = E>>(&self, d: &Self, f: &F) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(sd) = self.degree() else { return Self::zero() };
        if sd < dd {
            return self.clone();
        }
        if d.is_monomial() {
            return SparsePoly { terms: self.terms.iter().filter(|t| t.0 < dd).cloned().collect() };
        }
        if sd - dd < 256 {
            return self.divrem(d, f).1;
        }
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            acc = acc.add(&t_pow_mod(*e, d, f).scale(c, f), f);
        }
        acc
    }

    /// Monic gcd.
    pub fn gcd<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        if self.is_zero() {
            return other.monic(f);
        }
        if other.is_zero() {
            return self.monic(f);
        }
        if self.is_constant() || other.is_constant() {
            return Self::one(f);
        }
        // split off the common power of t first
        let k = self.order().unwrap().min(other.order().unwrap());
        let (mut a, mut b) = (self.shift_down(self.order().unwrap()), other.shift_down(other.order().unwrap()));
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                a = Self::one(f);
                break;
            }
            let r = a.rem(&b, f).monic(f);
            a = b;
            b = r;
        }
        a.monic(f).mul_term(k, &f.one(), f)
    }

    pub fn exact_div<F: CoeffField<Elem = E>>(&self, d: &Self, f: &F) -> Self {
        if d.is_monomial() {
            let (k, c) = &d.terms[0];
            return self.shift_down(*k).scale(&f.inv(c), f);
        }
        let (q, r) = self.divrem(d, f);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn eval<F: CoeffField<Elem = E>>(&self, x: &E, f: &F) -> E {
        let mut acc = f.zero();
        for (e, c) in &self.terms {
            acc = f.add(&acc, &f.mul(c, &pow_elem(x, *e, f)));
        }
        acc
    }

    pub fn render<F: CoeffField<Elem = E>>(&self, var: &str, f: &F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let (neg, mag) = split_sign(f, c);
            let coeff_str = f.render(&mag);
            let term = if *e == 0 {
                if f.is_integral_literal(&mag) { coeff_str } else { format!("({coeff_str})") }
            } else {
                let pow = if *e == 1 { var.to_string() } else { format!("{var}^{e}") };
                if f.is_one(&mag) {
                    pow
                } else if f.is_integral_literal(&mag) {
                    format!("{coeff_str}{pow}")
                } else {
                    format!("({coeff_str}){pow}")
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            out.push_str(&term);
        }
        out
    }
}

/// Sign convention for rendering: rationals by sign, 𝔽_p elements never negative.
fn split_sign<F: CoeffField>(f: &F, c: &F::Elem) -> (bool, F::Elem) {
    let rendered = f.render(c);
    if rendered.starts_with('-') {
        (true, f.neg(c))
    } else {
        (false, c.clone())
    }
}

fn pow_elem<F: CoeffField>(x: &F::Elem, mut e: Exponent, f: &F) -> F::Elem {
    let mut base = x.clone();
    let mut acc = f.one();
    while e > 0 {
        if e & 1 == 1 {
            acc = f.mul(&acc, &base);
        }
        base = f.mul(&base, &base);
        e >>= 1;
    }
    acc
}

fn t_pow_mod<F: CoeffField>(mut e: Exponent, d: &SparsePoly<F::Elem>, f: &F) -> SparsePoly<F::Elem> {
    let mut acc = SparsePoly::one(f);
    let mut base = SparsePoly::monomial(f, 1, f.one()).rem(d, f);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base, f).divrem(d, f).1;
        }
        base = base.mul(&base, f).divrem(d, f).1;
        e >>= 1;
    }
    acc
}

/// Reduced fraction `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn<E> {
    num: SparsePoly<E>,
    den: SparsePoly<E>,
}

impl<E: Clone + Debug + PartialEq + Eq + Hash> RatFn<E> {
    pub fn new<F: CoeffField<Elem = E>>(num: SparsePoly<E>, den: SparsePoly<E>, f: &F) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero(f);
        }
        let g = num.gcd(&den, f);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g, f), den.exact_div(&g, f))
        };
        let l = f.inv(den.lead().unwrap());
        RatFn { num: num.scale(&l, f), den: den.scale(&l, f) }
    }

    pub fn from_poly<F: CoeffField<Elem = E>>(num: SparsePoly<E>, f: &F) -> Self {
        RatFn { num, den: SparsePoly::one(f) }
    }

    pub fn zero<F: CoeffField<Elem = E>>(f: &F) -> Self {
        Self::from_poly(SparsePoly::zero(), f)
    }

    pub fn constant<F: CoeffField<Elem = E>>(c: E, f: &F) -> Self {
        Self::from_poly(SparsePoly::constant(f, c), f)
    }

    /// `t^k` for any integer `k`.
    pub fn power_of_var<F: CoeffField<Elem = E>>(k: i128, f: &F) -> Self {
        let m = SparsePoly::monomial(f, k.unsigned_abs(), f.one());
        if k >= 0 {
            Self::from_poly(m, f)
        } else {
            RatFn { num: SparsePoly::one(f), den: m }
        }
    }

    pub fn num(&self) -> &SparsePoly<E> {
        &self.num
    }

    pub fn den(&self) -> &SparsePoly<E> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant<F: CoeffField<Elem = E>>(&self, f: &F) -> Option<E> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coefficient(f, 0))
        } else {
            None
        }
    }

    fn den_is_one<F: CoeffField<Elem = E>>(&self, f: &F) -> bool {
        self.den.is_constant() && f.is_one(self.den.lead().unwrap())
    }

    pub fn add<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        if self.den_is_one(f) && other.den_is_one(f) {
            return Self::from_poly(self.num.add(&other.num, f), f);
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num, f), self.den.clone(), f);
        }
        let num = self.num.mul(&other.den, f).add(&other.num.mul(&self.den, f), f);
        Self::new(num, self.den.mul(&other.den, f), f)
    }

    pub fn neg<F: CoeffField<Elem = E>>(&self, f: &F) -> Self {
        RatFn { num: self.num.neg(f), den: self.den.clone() }
    }

    pub fn sub<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        self.add(&other.neg(f), f)
    }

    pub fn mul<F: CoeffField<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        if self.den_is_one(f) && other.den_is_one(f) {
            return Self::from_poly(self.num.mul(&other.num, f), f);
        }
        // inputs are reduced, so cross-cancelling keeps the product reduced
        let g1 = self.num.gcd(&other.den, f);
        let g2 = other.num.gcd(&self.den, f);
        let a = self.num.exact_div(&g1, f);
        let d = other.den.exact_div(&g1, f);
        let c = other.num.exact_div(&g2, f);
        let b = self.den.exact_div(&g2, f);
        let num = a.mul(&c, f);
        let den = b.mul(&d, f);
        let l = f.inv(den.lead().unwrap());
        RatFn { num: num.scale(&l, f), den: den.scale(&l, f) }
    }

    /// Panics on zero.
    pub fn inv<F: CoeffField<Elem = E>>(&self, f: &F) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        let l = f.inv(self.num.lead().unwrap());
        RatFn { num: self.den.scale(&l, f), den: self.num.scale(&l, f) }
    }

    /// Order of vanishing at `t = 0`; `None` for zero.
    pub fn order_at_zero(&self) -> Option<BigInt> {
        let n = self.num.order()?;
        let d = self.den.order().unwrap();
        Some(BigInt::from(n) - BigInt::from(d))
    }

    /// Value at `t = 0` after clearing powers of `t`; requires order ≥ 0.
    pub fn residue_at_zero<F: CoeffField<Elem = E>>(&self, f: &F) -> Option<E> {
        let ord = self.order_at_zero()?;
        if ord.is_negative() {
            return None;
        }
        if ord.is_positive() {
            return Some(f.zero());
        }
        Some(f.mul(self.num.low().unwrap(), &f.inv(self.den.low().unwrap())))
    }

    pub fn render<F: CoeffField<Elem = E>>(&self, var: &str, f: &F) -> String {
        let num = self.num.render(var, f);
        if self.den_is_one(f) {
            return num;
        }
        let den = self.den.render(var, f);
        let wrap = |s: String, poly: &SparsePoly<E>| {
            if poly.terms().len() == 1 && poly.lead().is_some_and(|c| f.is_one(c)) {
                s
            } else {
                format!("({s})")
            }
        };
        format!("{}/{}", wrap(num, &self.num), wrap(den, &self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: PrimeField = PrimeField { p: 2 };
    const F3: PrimeField = PrimeField { p: 3 };

    fn poly(f: &PrimeField, c: &[u64]) -> SparsePoly<u64> {
        SparsePoly::from_dense(f, c.iter().map(|x| x % f.p).collect())
    }

    #[test]
    fn arithmetic_mod_p() {
        let a = poly(&F3, &[1, 1]); // 1 + t
        let b = poly(&F3, &[2, 1]); // 2 + t = t - 1
        let prod = a.mul(&b, &F3);
        assert_eq!(prod, poly(&F3, &[2, 0, 1])); // t^2 - 1
        assert_eq!(prod.divrem(&a, &F3), (b.clone(), SparsePoly::zero()));
        assert_eq!(prod.gcd(&a.mul(&a, &F3), &F3), a);
    }

    #[test]
    fn fast_remainder_matches_long_division() {
        let d = poly(&F2, &[1, 1, 1]);
        let a = SparsePoly::from_terms(&F2, vec![(1000, 1), (3, 1), (0, 1)]);
        assert_eq!(a.rem(&d, &F2), a.divrem(&d, &F2).1);
        let q = RationalField;
        let dq = SparsePoly::from_dense(&q, vec![BigRational::from_integer(3.into()), BigRational::one(), BigRational::one()]);
        let aq = SparsePoly::from_terms(&q, vec![(700, BigRational::one()), (2, BigRational::from_integer(5.into()))]);
        assert_eq!(aq.rem(&dq, &q), aq.divrem(&dq, &q).1);
    }

    #[test]
    fn ratfn_reduces() {
        let f = F3;
        let a = poly(&f, &[1, 1]);
        let r = RatFn::new(a.mul(&poly(&f, &[0, 1]), &f), a.mul(&poly(&f, &[0, 0, 2]), &f), &f);
        // t(1+t) / 2t^2(1+t) = 1/(2t) = 2/t
        assert_eq!(r.num(), &poly(&f, &[2]));
        assert_eq!(r.den(), &poly(&f, &[0, 1]));
        assert_eq!(r.order_at_zero(), Some(BigInt::from(-1)));
        let sum = r.add(&r.neg(&f), &f);
        assert!(sum.is_zero());
        assert_eq!(r.mul(&r.inv(&f), &f), RatFn::constant(1, &f));
    }

    #[test]
    fn rendering() {
        let q = RationalField;
        let half = BigRational::new(1.into(), 2.into());
        let p = SparsePoly::from_dense(&q, vec![BigRational::from_integer((-3).into()), half, BigRational::one()]);
        assert_eq!(p.render("t", &q), "t^2+(1/2)t-3");
        let r = RatFn::new(SparsePoly::one(&q), p, &q);
        assert_eq!(r.render("t", &q), "1/(t^2+(1/2)t-3)");
    }
}
