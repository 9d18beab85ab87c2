//! The base fields: (ℚ, v_p), (𝔽_p(t), v_t) and (ℚ(t), v_t).

pub mod tpoly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expr::{self, Algebra};
use crate::ordered_group::{GroupDescriptor, GroupValue};
use tpoly::{CoeffField, PrimeField, RatFn, RationalField, SparsePoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    PAdicRationals { p: u64 },
    FpRationalFunctions { p: u64 },
    QRationalFunctions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValuedField {
    kind: FieldKind,
}

/// An element in canonical form. Function-field elements carry their
/// characteristic so that they render without the field at hand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    PrimeFunction(u64, RatFn<u64>),
    RationalFunction(RatFn<BigRational>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueField {
    Prime(u64),
    Rationals,
}

/// Element of `Kv` or of the rational function field `Kv(y)`.
/// Constants are never stored as functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ResidueElement {
    Prime(u64),
    Rational(BigRational),
    PrimeFunction(u64, RatFn<u64>),
    RationalFunction(RatFn<BigRational>),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<u64> {
    if p > u32::MAX as u64 || !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not a supported prime")));
    }
    Ok(p)
}

fn p_adic_order(n: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

impl ValuedField {
    pub fn padic(p: u64) -> Result<Self> {
        Ok(ValuedField { kind: FieldKind::PAdicRationals { p: check_prime(p)? } })
    }

    pub fn fp_rational_functions(p: u64) -> Result<Self> {
        Ok(ValuedField { kind: FieldKind::FpRationalFunctions { p: check_prime(p)? } })
    }

    pub fn q_rational_functions() -> Self {
        ValuedField { kind: FieldKind::QRationalFunctions }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn value_group(&self) -> GroupDescriptor {
        GroupDescriptor::INTEGERS
    }

    pub fn residue_field(&self) -> ResidueField {
        match self.kind {
            FieldKind::PAdicRationals { p } | FieldKind::FpRationalFunctions { p } => ResidueField::Prime(p),
            FieldKind::QRationalFunctions => ResidueField::Rationals,
        }
    }

    pub fn has_infinite_residue_field(&self) -> bool {
        self.residue_field() == ResidueField::Rationals
    }

    pub fn is_function_field(&self) -> bool {
        !matches!(self.kind, FieldKind::PAdicRationals { .. })
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.kind {
            FieldKind::PAdicRationals { .. } => FieldElement::Rational(BigRational::from_integer(n.clone())),
            FieldKind::FpRationalFunctions { p } => {
                let f = PrimeField { p };
                FieldElement::PrimeFunction(p, RatFn::constant(f.from_bigint(n), &f))
            }
            FieldKind::QRationalFunctions => {
                FieldElement::RationalFunction(RatFn::constant(BigRational::from_integer(n.clone()), &RationalField))
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        match self.kind {
            FieldKind::PAdicRationals { .. } => Ok(FieldElement::Rational(q.clone())),
            FieldKind::FpRationalFunctions { p } => {
                let f = PrimeField { p };
                let c = f.from_rational(q).ok_or(Error::DivisionByZero)?;
                Ok(FieldElement::PrimeFunction(p, RatFn::constant(c, &f)))
            }
            FieldKind::QRationalFunctions => Ok(FieldElement::RationalFunction(RatFn::constant(q.clone(), &RationalField))),
        }
    }

    /// The variable `t` of a function field.
    pub fn t(&self) -> Result<FieldElement> {
        self.t_power(1)
    }

    /// `t^k` for any integer `k` (function fields only).
    pub fn t_power(&self, k: i128) -> Result<FieldElement> {
        match self.kind {
            FieldKind::PAdicRationals { .. } => Err(Error::Invalid("the p-adic field has no variable t".into())),
            FieldKind::FpRationalFunctions { p } => {
                Ok(FieldElement::PrimeFunction(p, RatFn::power_of_var(k, &PrimeField { p })))
            }
            FieldKind::QRationalFunctions => Ok(FieldElement::RationalFunction(RatFn::power_of_var(k, &RationalField))),
        }
    }

    /// Polynomial in `t` from sparse (exponent, integer coefficient) terms.
    pub fn t_poly(&self, terms: &[(u128, BigInt)]) -> Result<FieldElement> {
        match self.kind {
            FieldKind::PAdicRationals { .. } => Err(Error::Invalid("the p-adic field has no variable t".into())),
            FieldKind::FpRationalFunctions { p } => {
                let f = PrimeField { p };
                let poly = SparsePoly::from_terms(&f, terms.iter().map(|(e, c)| (*e, f.from_bigint(c))).collect());
                Ok(FieldElement::PrimeFunction(p, RatFn::from_poly(poly, &f)))
            }
            FieldKind::QRationalFunctions => {
                let f = RationalField;
                let poly = SparsePoly::from_terms(&f, terms.iter().map(|(e, c)| (*e, f.from_bigint(c))).collect());
                Ok(FieldElement::RationalFunction(RatFn::from_poly(poly, &f)))
            }
        }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.binary(a, b, |x, y| x + y, |f, x, y| x.add(y, f), |f, x, y| x.add(y, f))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.binary(a, b, |x, y| x - y, |f, x, y| x.sub(y, f), |f, x, y| x.sub(y, f))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.binary(a, b, |x, y| x * y, |f, x, y| x.mul(y, f), |f, x, y| x.mul(y, f))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match a {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::PrimeFunction(p, r) => FieldElement::PrimeFunction(*p, r.neg(&PrimeField { p: *p })),
            FieldElement::RationalFunction(r) => FieldElement::RationalFunction(r.neg(&RationalField)),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.check(a);
        Ok(match a {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::PrimeFunction(p, r) => FieldElement::PrimeFunction(*p, r.inv(&PrimeField { p: *p })),
            FieldElement::RationalFunction(r) => FieldElement::RationalFunction(r.inv(&RationalField)),
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, e: i64) -> Result<FieldElement> {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        if e < 0 {
            self.inv(&acc)
        } else {
            Ok(acc)
        }
    }

    pub fn value(&self, a: &FieldElement) -> GroupValue {
        self.check(a);
        match a {
            FieldElement::Rational(q) => {
                if q.is_zero() {
                    return GroupValue::Infinity;
                }
                let p = self.prime();
                let k = p_adic_order(q.numer(), p) as i64 - p_adic_order(q.denom(), p) as i64;
                GroupValue::int(k)
            }
            FieldElement::PrimeFunction(_, r) => r.order_at_zero().map_or(GroupValue::Infinity, GroupValue::from_bigint),
            FieldElement::RationalFunction(r) => r.order_at_zero().map_or(GroupValue::Infinity, GroupValue::from_bigint),
        }
    }

    pub fn residue(&self, a: &FieldElement) -> Result<ResidueElement> {
        self.check(a);
        match a {
            FieldElement::Rational(q) => {
                let v = self.value(a);
                if v < GroupValue::zero() {
                    return Err(Error::NegativeValue);
                }
                let f = PrimeField { p: self.prime() };
                Ok(ResidueElement::Prime(if v > GroupValue::zero() {
                    0
                } else {
                    f.from_rational(q).expect("unit has invertible denominator")
                }))
            }
            FieldElement::PrimeFunction(p, r) => {
                r.residue_at_zero(&PrimeField { p: *p }).map(ResidueElement::Prime).ok_or(Error::NegativeValue)
            }
            FieldElement::RationalFunction(r) => {
                r.residue_at_zero(&RationalField).map(ResidueElement::Rational).ok_or(Error::NegativeValue)
            }
        }
    }

    /// A preimage of a constant residue: integers mod p map to `0..p`.
    pub fn lift_residue(&self, r: &ResidueElement) -> Result<FieldElement> {
        match r {
            ResidueElement::Prime(k) => Ok(self.from_int(*k as i64)),
            ResidueElement::Rational(q) => self.from_rational(q),
            _ => Err(Error::Invalid("only constant residues lift to the base field".into())),
        }
    }

    pub fn uniformizer(&self) -> FieldElement {
        match self.kind {
            FieldKind::PAdicRationals { p } => self.from_int(p as i64),
            _ => self.t().unwrap(),
        }
    }

    pub fn element_of_value(&self, gamma: &GroupValue) -> Result<FieldElement> {
        let k = gamma
            .as_integer()
            .ok_or_else(|| Error::Invalid(format!("{gamma} is not a finite integer value")))?;
        match self.kind {
            FieldKind::PAdicRationals { p } => {
                let e = k.abs().to_u32().ok_or_else(|| Error::Invalid("value too large".into()))?;
                let m = num_traits::pow(BigInt::from(p), e as usize);
                let q = BigRational::from_integer(m);
                Ok(FieldElement::Rational(if k.is_negative() { q.recip() } else { q }))
            }
            _ => self.t_power(k.to_i128().ok_or_else(|| Error::Invalid("value too large".into()))?),
        }
    }

    /// Residue characteristic.
    pub fn prime(&self) -> u64 {
        match self.kind {
            FieldKind::PAdicRationals { p } | FieldKind::FpRationalFunctions { p } => p,
            FieldKind::QRationalFunctions => 0,
        }
    }

    /// Characteristic of the field itself.
    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::FpRationalFunctions { p } => p,
            _ => 0,
        }
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        expr::parse_in(s, self)
    }

    fn check(&self, a: &FieldElement) {
        let ok = matches!(
            (self.kind, a),
            (FieldKind::PAdicRationals { .. }, FieldElement::Rational(_))
                | (FieldKind::QRationalFunctions, FieldElement::RationalFunction(_))
        ) || matches!((self.kind, a), (FieldKind::FpRationalFunctions { p }, FieldElement::PrimeFunction(q, _)) if p == *q);
        assert!(ok, "element {a} does not belong to {self}");
    }

    fn binary(
        &self,
        a: &FieldElement,
        b: &FieldElement,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        prime: impl Fn(&PrimeField, &RatFn<u64>, &RatFn<u64>) -> RatFn<u64>,
        ratfn: impl Fn(&RationalField, &RatFn<BigRational>, &RatFn<BigRational>) -> RatFn<BigRational>,
    ) -> FieldElement {
        self.check(a);
        self.check(b);
        match (a, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(rat(x, y)),
            (FieldElement::PrimeFunction(p, x), FieldElement::PrimeFunction(_, y)) => {
                FieldElement::PrimeFunction(*p, prime(&PrimeField { p: *p }, x, y))
            }
            (FieldElement::RationalFunction(x), FieldElement::RationalFunction(y)) => {
                FieldElement::RationalFunction(ratfn(&RationalField, x, y))
            }
            _ => unreachable!(),
        }
    }
}

impl Algebra for ValuedField {
    type Val = FieldElement;

    fn int(&self, n: &BigInt) -> Result<FieldElement> {
        Ok(self.from_bigint(n))
    }
    fn var(&self, name: char) -> Result<FieldElement> {
        match name {
            't' if self.is_function_field() => self.t(),
            _ => Err(Error::Parse(format!("unknown variable {name:?} in an element of {self}"))),
        }
    }
    fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(ValuedField::add(self, a, b))
    }
    fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        Ok(ValuedField::neg(self, a))
    }
    fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(ValuedField::mul(self, a, b))
    }
    fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        ValuedField::div(self, a, b)
    }
}

impl fmt::Display for ValuedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::PAdicRationals { p } => write!(f, "Q@p={p}"),
            FieldKind::FpRationalFunctions { p } => write!(f, "Fp(t)@p={p}"),
            FieldKind::QRationalFunctions => write!(f, "Q(t)"),
        }
    }
}

impl FromStr for ValuedField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let prime = |rest: &str| -> Result<u64> {
            rest.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad prime in field spec {s:?}")))
        };
        if s == "Q(t)" {
            Ok(Self::q_rational_functions())
        } else if let Some(rest) = s.strip_prefix("Q@p=") {
            Self::padic(prime(rest)?)
        } else if let Some(rest) = s.strip_prefix("Fp(t)@p=") {
            Self::fp_rational_functions(prime(rest)?)
        } else {
            Err(Error::Parse(format!("unknown field spec {s:?}")))
        }
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::PrimeFunction(_, r) => r.is_zero(),
            FieldElement::RationalFunction(r) => r.is_zero(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::PrimeFunction(p, r) => f.write_str(&r.render("t", &PrimeField { p: *p })),
            FieldElement::RationalFunction(r) => f.write_str(&r.render("t", &RationalField)),
        }
    }
}

impl ResidueField {
    pub fn zero(&self) -> ResidueElement {
        self.constant_int(0)
    }

    pub fn one(&self) -> ResidueElement {
        self.constant_int(1)
    }

    pub fn constant_int(&self, n: i64) -> ResidueElement {
        match self {
            ResidueField::Prime(p) => ResidueElement::Prime(PrimeField { p: *p }.from_bigint(&BigInt::from(n))),
            ResidueField::Rationals => ResidueElement::Rational(BigRational::from_integer(n.into())),
        }
    }

    /// The transcendental generator `y`.
    pub fn y(&self) -> ResidueElement {
        match self {
            ResidueField::Prime(p) => ResidueElement::PrimeFunction(*p, RatFn::power_of_var(1, &PrimeField { p: *p })),
            ResidueField::Rationals => ResidueElement::RationalFunction(RatFn::power_of_var(1, &RationalField)),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ResidueField::Rationals)
    }

    /// `Σ num_i y^i / Σ den_i y^i` for constant coefficients.
    pub fn function(&self, num: &[ResidueElement], den: &[ResidueElement]) -> Result<ResidueElement> {
        match self {
            ResidueField::Prime(p) => {
                let f = PrimeField { p: *p };
                let conv = |c: &[ResidueElement]| -> Result<SparsePoly<u64>> {
                    let cs = c
                        .iter()
                        .map(|r| match r {
                            ResidueElement::Prime(k) => Ok(*k),
                            _ => Err(Error::Invalid("expected a constant residue".into())),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(SparsePoly::from_dense(&f, cs))
                };
                let (n, d) = (conv(num)?, conv(den)?);
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.demote_prime(RatFn::new(n, d, &f)))
            }
            ResidueField::Rationals => {
                let f = RationalField;
                let conv = |c: &[ResidueElement]| -> Result<SparsePoly<BigRational>> {
                    let cs = c
                        .iter()
                        .map(|r| match r {
                            ResidueElement::Rational(q) => Ok(q.clone()),
                            _ => Err(Error::Invalid("expected a constant residue".into())),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(SparsePoly::from_dense(&f, cs))
                };
                let (n, d) = (conv(num)?, conv(den)?);
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.demote_rational(RatFn::new(n, d, &f)))
            }
        }
    }

    fn demote_prime(&self, r: RatFn<u64>) -> ResidueElement {
        let ResidueField::Prime(p) = *self else { unreachable!() };
        match r.as_constant(&PrimeField { p }) {
            Some(c) => ResidueElement::Prime(c),
            None => ResidueElement::PrimeFunction(p, r),
        }
    }

    fn demote_rational(&self, r: RatFn<BigRational>) -> ResidueElement {
        match r.as_constant(&RationalField) {
            Some(c) => ResidueElement::Rational(c),
            None => ResidueElement::RationalFunction(r),
        }
    }

    fn promote_prime(&self, a: &ResidueElement) -> RatFn<u64> {
        let ResidueField::Prime(p) = *self else { unreachable!() };
        match a {
            ResidueElement::Prime(k) => RatFn::constant(*k, &PrimeField { p }),
            ResidueElement::PrimeFunction(q, r) if *q == p => r.clone(),
            _ => panic!("residue {a} does not belong to F_{p}"),
        }
    }

    fn promote_rational(&self, a: &ResidueElement) -> RatFn<BigRational> {
        match a {
            ResidueElement::Rational(q) => RatFn::constant(q.clone(), &RationalField),
            ResidueElement::RationalFunction(r) => r.clone(),
            _ => panic!("residue {a} does not belong to Q"),
        }
    }

    fn lift2(
        &self,
        a: &ResidueElement,
        b: &ResidueElement,
        prime: impl Fn(&PrimeField, &RatFn<u64>, &RatFn<u64>) -> RatFn<u64>,
        rational: impl Fn(&RationalField, &RatFn<BigRational>, &RatFn<BigRational>) -> RatFn<BigRational>,
    ) -> ResidueElement {
        match self {
            ResidueField::Prime(p) => {
                let r = prime(&PrimeField { p: *p }, &self.promote_prime(a), &self.promote_prime(b));
                self.demote_prime(r)
            }
            ResidueField::Rationals => {
                let r = rational(&RationalField, &self.promote_rational(a), &self.promote_rational(b));
                self.demote_rational(r)
            }
        }
    }

    pub fn add(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        self.lift2(a, b, |f, x, y| x.add(y, f), |f, x, y| x.add(y, f))
    }

    pub fn mul(&self, a: &ResidueElement, b: &ResidueElement) -> ResidueElement {
        self.lift2(a, b, |f, x, y| x.mul(y, f), |f, x, y| x.mul(y, f))
    }

    pub fn neg(&self, a: &ResidueElement) -> ResidueElement {
        self.mul(a, &self.constant_int(-1))
    }

    pub fn inv(&self, a: &ResidueElement) -> Result<ResidueElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            ResidueField::Prime(p) => self.demote_prime(self.promote_prime(a).inv(&PrimeField { p: *p })),
            ResidueField::Rationals => self.demote_rational(self.promote_rational(a).inv(&RationalField)),
        })
    }

    pub fn parse(&self, s: &str) -> Result<ResidueElement> {
        expr::parse_in(s, self)
    }
}

impl Algebra for ResidueField {
    type Val = ResidueElement;

    fn int(&self, n: &BigInt) -> Result<ResidueElement> {
        Ok(match self {
            ResidueField::Prime(p) => ResidueElement::Prime(PrimeField { p: *p }.from_bigint(n)),
            ResidueField::Rationals => ResidueElement::Rational(BigRational::from_integer(n.clone())),
        })
    }
    fn var(&self, name: char) -> Result<ResidueElement> {
        match name {
            'y' => Ok(self.y()),
            _ => Err(Error::Parse(format!("unknown variable {name:?} in a residue"))),
        }
    }
    fn add(&self, a: &ResidueElement, b: &ResidueElement) -> Result<ResidueElement> {
        Ok(ResidueField::add(self, a, b))
    }
    fn neg(&self, a: &ResidueElement) -> Result<ResidueElement> {
        Ok(ResidueField::neg(self, a))
    }
    fn mul(&self, a: &ResidueElement, b: &ResidueElement) -> Result<ResidueElement> {
        Ok(ResidueField::mul(self, a, b))
    }
    fn div(&self, a: &ResidueElement, b: &ResidueElement) -> Result<ResidueElement> {
        Ok(ResidueField::mul(self, a, &self.inv(b)?))
    }
}

impl ResidueElement {
    pub fn is_zero(&self) -> bool {
        match self {
            ResidueElement::Prime(k) => *k == 0,
            ResidueElement::Rational(q) => q.is_zero(),
            ResidueElement::PrimeFunction(_, r) => r.is_zero(),
            ResidueElement::RationalFunction(r) => r.is_zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, ResidueElement::Prime(_) | ResidueElement::Rational(_))
    }

    pub fn is_one(&self) -> bool {
        match self {
            ResidueElement::Prime(k) => *k == 1,
            ResidueElement::Rational(q) => q.is_one(),
            _ => false,
        }
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueElement::Prime(k) => write!(f, "{k}"),
            ResidueElement::Rational(q) => write!(f, "{q}"),
            ResidueElement::PrimeFunction(p, r) => f.write_str(&r.render("y", &PrimeField { p: *p })),
            ResidueElement::RationalFunction(r) => f.write_str(&r.render("y", &RationalField)),
        }
    }
}
