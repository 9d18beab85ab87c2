//! Valuations on `K(x)` extending the base valuation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::approx_type::{ApproxType, AtShape};
use crate::error::{Error, Result};
use crate::kaplansky::{check_fixed, FixedReport};
use crate::ordered_group::{Cut, GroupValue, Side, Value};
use crate::polynomial::{Poly, RatFun};
use crate::valued_field::{FieldElement, ResidueElement, ValuedField};

/// Value assigned to `x − b` by a monomial valuation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Alpha {
    Value(GroupValue),
    /// An element `α` of a larger group realizing the cut in `vK`.
    Transcendental(Cut),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionValuation {
    /// `v(Σ c_i (x−b)^i) = min v c_i + i·α`.
    Monomial { field: ValuedField, b: FieldElement, alpha: Alpha },
    /// `v g(x)` is the value `at` fixes for `g`. Without a transcendence
    /// declaration only polynomials of degree below `degree_bound` are valued.
    LimitImmediate { at: ApproxType, declared_transcendental: bool, degree_bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtensionClass {
    Immediate,
    ValueTranscendental,
    ResidueTranscendental,
    ValuationAlgebraicDetected,
}

impl ExtensionClass {
    pub fn tag(&self) -> &'static str {
        match self {
            ExtensionClass::Immediate => "immediate",
            ExtensionClass::ValueTranscendental => "value-transcendental",
            ExtensionClass::ResidueTranscendental => "residue-transcendental",
            ExtensionClass::ValuationAlgebraicDetected => "immediate-or-detected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    NotEquivalent(Poly),
    UndecidedAtBound,
}

/// Where a value sits relative to `vK = ℤ`: `v ≥ m` holds exactly for
/// `m ≤ k`, and `strict` records whether `v > k`.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Position {
    Int { k: BigInt, strict: bool },
    AboveAll,
    BelowAll,
    Infinity,
}

fn position(v: &Value) -> Position {
    match v {
        Value::Plain(GroupValue::Infinity) => Position::Infinity,
        Value::Plain(g) => Position::Int { k: g.as_rational().expect("rank one").floor().to_integer(), strict: !g.as_rational().unwrap().is_integer() },
        Value::Augmented(a) => match &a.cut {
            Cut::Principal { q, side } => {
                let n = num_rational::BigRational::from_integer(a.multiplicity.into());
                let pos = a.base.as_rational().expect("rank one") + &n * q;
                let up = (*side == Side::Right) == (a.multiplicity > 0);
                let k = pos.floor().to_integer();
                if pos.is_integer() && !up {
                    Position::Int { k: k - 1, strict: true }
                } else {
                    Position::Int { k, strict: true }
                }
            }
            Cut::AboveAll if a.multiplicity > 0 => Position::AboveAll,
            Cut::BelowAll if a.multiplicity < 0 => Position::AboveAll,
            _ => Position::BelowAll,
        },
    }
}

/// Whether two values compare the same way against every element of `vK`.
pub fn same_position(a: &Value, b: &Value) -> bool {
    position(a) == position(b)
}

fn min_value(vals: impl IntoIterator<Item = Value>) -> Result<Value> {
    let mut best = Value::Plain(GroupValue::Infinity);
    for v in vals {
        if v.compare(&best)? == Ordering::Less {
            best = v;
        }
    }
    Ok(best)
}

impl ExtensionValuation {
    pub fn gauss(field: ValuedField) -> ExtensionValuation {
        ExtensionValuation::Monomial { field, b: field.zero(), alpha: Alpha::Value(GroupValue::zero()) }
    }

    pub fn monomial(field: ValuedField, b: FieldElement, alpha: Alpha) -> Result<ExtensionValuation> {
        if let Alpha::Value(g) = &alpha {
            if g.as_integer().is_none() {
                return Err(Error::Invalid(format!("{g} is not in the value group")));
            }
        }
        Ok(ExtensionValuation::Monomial { field, b, alpha })
    }

    pub fn limit(at: ApproxType) -> Result<ExtensionValuation> {
        let g = at.generator().ok_or(Error::NotImmediate)?;
        Ok(ExtensionValuation::LimitImmediate {
            declared_transcendental: g.declared_transcendental(),
            at,
            degree_bound: 2,
        })
    }

    pub fn with_degree_bound(self, bound: usize) -> ExtensionValuation {
        match self {
            ExtensionValuation::LimitImmediate { at, declared_transcendental, .. } => {
                ExtensionValuation::LimitImmediate { at, declared_transcendental, degree_bound: bound }
            }
            m => m,
        }
    }

    pub fn field(&self) -> &ValuedField {
        match self {
            ExtensionValuation::Monomial { field, .. } => field,
            ExtensionValuation::LimitImmediate { at, .. } => at.field(),
        }
    }

    fn alpha_value(alpha: &Alpha, i: usize) -> Value {
        match alpha {
            Alpha::Value(g) => Value::Plain(g.scale(i as i64)),
            Alpha::Transcendental(cut) => Value::augmented(GroupValue::zero(), i as i64, cut.clone()),
        }
    }

    fn fixed_report(&self, f: &Poly, budget: usize) -> Result<FixedReport> {
        let ExtensionValuation::LimitImmediate { at, declared_transcendental, degree_bound } = self else {
            unreachable!()
        };
        if !declared_transcendental && f.degree().unwrap_or(0) >= *degree_bound {
            return Err(Error::UnsupportedAlgebraicImmediate);
        }
        match check_fixed(f, at, budget)? {
            FixedReport::NotFixed { .. } => Err(Error::NotActuallyTranscendental(f.to_string())),
            FixedReport::Undecided { budget } => Err(Error::BudgetExhausted(budget)),
            r => Ok(r),
        }
    }

    pub fn value_poly(&self, f: &Poly, budget: usize) -> Result<Value> {
        match self {
            ExtensionValuation::Monomial { field, b, alpha } => {
                let shifted = f.compose_shift(b, field);
                let terms = shifted.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero());
                let vals: Vec<Value> = terms
                    .map(|(i, c)| Ok(Value::Plain(field.value(c)).add(&Self::alpha_value(alpha, i))?))
                    .collect::<Result<_>>()?;
                min_value(vals)
            }
            ExtensionValuation::LimitImmediate { .. } => match self.fixed_report(f, budget)? {
                FixedReport::Fixed { value, .. } => Ok(Value::Plain(value)),
                _ => unreachable!(),
            },
        }
    }

    pub fn value_ratfun(&self, r: &RatFun, budget: usize) -> Result<Value> {
        let num = self.value_poly(r.num(), budget)?;
        let den = self.value_poly(r.den(), budget)?;
        Ok(num.add(&den.negate()?)?)
    }

    pub fn residue_ratfun(&self, r: &RatFun, budget: usize) -> Result<ResidueElement> {
        if self.value_ratfun(r, budget)? != Value::Plain(GroupValue::zero()) {
            return Err(Error::NonzeroValue);
        }
        if r.is_zero() {
            return Err(Error::NonzeroValue);
        }
        let field = *self.field();
        match self {
            ExtensionValuation::Monomial { b, alpha: Alpha::Value(delta), .. } => {
                let d = field.element_of_value(&delta.negate()?)?;
                let dinv = field.inv(&d)?;
                let w = self.value_poly(r.num(), budget)?;
                let pw = field.inv(&field.element_of_value(w.plain().unwrap())?)?;
                let residues = |p: &Poly| -> Result<Vec<ResidueElement>> {
                    let shifted = p.compose_shift(b, &field);
                    let mut scale = pw.clone();
                    let mut out = Vec::new();
                    for c in shifted.coeffs() {
                        let e = field.mul(c, &scale);
                        out.push(if field.value(&e) > GroupValue::zero() { field.residue_field().zero() } else { field.residue(&e)? });
                        scale = field.mul(&scale, &dinv);
                    }
                    Ok(out)
                };
                field.residue_field().function(&residues(r.num())?, &residues(r.den())?)
            }
            ExtensionValuation::Monomial { b, alpha: Alpha::Transcendental(cut), .. } => {
                let lowest = |p: &Poly| -> Result<(usize, FieldElement)> {
                    let shifted = p.compose_shift(b, &field);
                    let v = self.value_poly(p, budget)?;
                    for (i, c) in shifted.coeffs().iter().enumerate() {
                        if !c.is_zero() && Value::augmented(field.value(c), i as i64, cut.clone()) == v {
                            return Ok((i, c.clone()));
                        }
                    }
                    unreachable!("the minimum is attained by a term")
                };
                let (_, cn) = lowest(r.num())?;
                let (_, cd) = lowest(r.den())?;
                field.residue(&field.div(&cn, &cd)?)
            }
            ExtensionValuation::LimitImmediate { at, .. } => {
                let t = |p: &Poly| -> Result<usize> {
                    match self.fixed_report(p, budget)? {
                        FixedReport::Fixed { threshold, .. } => Ok(threshold),
                        _ => unreachable!(),
                    }
                };
                let nu = t(r.num())?.max(t(r.den())?);
                let c = at.generator().unwrap().term(nu)?;
                let q = field.div(&r.num().eval(&c, &field), &r.den().eval(&c, &field))?;
                field.residue(&q)
            }
        }
    }

    pub fn approx_type_of(&self) -> ApproxType {
        match self {
            ExtensionValuation::Monomial { field, b, alpha: Alpha::Transcendental(cut) } => {
                ApproxType::value_extending(*field, b.clone(), cut.clone())
            }
            ExtensionValuation::Monomial { field, b, alpha: Alpha::Value(delta) } => {
                ApproxType::residue_extending(*field, b.clone(), delta.clone()).expect("checked on construction")
            }
            ExtensionValuation::LimitImmediate { at, .. } => at.clone(),
        }
    }

    pub fn realize(at: &ApproxType) -> Result<ExtensionValuation> {
        let field = *at.field();
        match at.shape() {
            AtShape::Trivial(_) => Err(Error::TrivialType),
            AtShape::Empty => Err(Error::EmptyType),
            AtShape::ValueExtending { b, cut } => Self::monomial(field, b.clone(), Alpha::Transcendental(cut.clone())),
            AtShape::ResidueExtending { b, delta } => Self::monomial(field, b.clone(), Alpha::Value(delta.clone())),
            AtShape::Immediate(g) if g.declared_transcendental() => Self::limit(at.clone()),
            AtShape::Immediate(_) => Err(Error::UnsupportedAlgebraicImmediate),
        }
    }

    pub fn classify(&self) -> ExtensionClass {
        match self {
            ExtensionValuation::Monomial { alpha: Alpha::Transcendental(_), .. } => ExtensionClass::ValueTranscendental,
            ExtensionValuation::Monomial { alpha: Alpha::Value(_), .. } => ExtensionClass::ResidueTranscendental,
            ExtensionValuation::LimitImmediate { declared_transcendental: true, .. } => ExtensionClass::Immediate,
            ExtensionValuation::LimitImmediate { .. } => ExtensionClass::ValuationAlgebraicDetected,
        }
    }

    /// `(rational rank of vK(x)/vK, transcendence degree of K(x)v over Kv)`.
    pub fn abhyankar_contributions(&self) -> (usize, usize) {
        match self.classify() {
            ExtensionClass::ValueTranscendental => (1, 0),
            ExtensionClass::ResidueTranscendental => (0, 1),
            _ => (0, 0),
        }
    }

    pub fn is_pure(&self) -> bool {
        !matches!(self.classify(), ExtensionClass::ValuationAlgebraicDetected)
    }

    pub fn is_almost_pure(&self) -> Result<bool> {
        if self.is_pure() {
            return Ok(true);
        }
        self.approx_type_of().is_completion_type()
    }

    fn centers(&self, budget: usize) -> Vec<FieldElement> {
        match self {
            ExtensionValuation::Monomial { b, .. } => vec![b.clone()],
            ExtensionValuation::LimitImmediate { at, .. } => {
                let g = at.generator().unwrap();
                (0..budget.min(g.budget())).map_while(|nu| g.term(nu).ok()).collect()
            }
        }
    }

    fn witness_degree(&self, other: &ExtensionValuation) -> usize {
        let den = |v: &ExtensionValuation| match v {
            ExtensionValuation::Monomial { alpha: Alpha::Transcendental(Cut::Principal { q, .. }), .. } => {
                q.denom().clone()
            }
            _ => BigInt::from(1),
        };
        let d = den(self).lcm(&den(other)) * den(self) * den(other);
        usize::try_from(d).unwrap_or(usize::MAX).clamp(4, 4096)
    }

    fn rule(&self, other: &ExtensionValuation) -> Option<bool> {
        let f = self.field();
        match (self, other) {
            (
                ExtensionValuation::Monomial { b: b1, alpha: a1, .. },
                ExtensionValuation::Monomial { b: b2, alpha: a2, .. },
            ) => {
                let w = f.value(&f.sub(b1, b2));
                Some(match (a1, a2) {
                    (Alpha::Value(d1), Alpha::Value(d2)) => d1 == d2 && w >= *d1,
                    (Alpha::Transcendental(c1), Alpha::Transcendental(c2)) => c1 == c2 && c1.exceeds_lower_set(&w),
                    _ => false,
                })
            }
            (ExtensionValuation::LimitImmediate { at: a1, .. }, ExtensionValuation::LimitImmediate { at: a2, .. }) => {
                (a1 == a2).then_some(true)
            }
            _ => Some(false),
        }
    }

    pub fn equivalent(&self, other: &ExtensionValuation, budget: usize) -> Equivalence {
        if self.field() != other.field() {
            return Equivalence::UndecidedAtBound;
        }
        match self.rule(other) {
            Some(true) => return Equivalence::Equivalent,
            None => return Equivalence::UndecidedAtBound,
            Some(false) => {}
        }
        let field = *self.field();
        let mut centers = self.centers(budget);
        centers.extend(other.centers(budget));
        let differs = |p: &Poly| -> bool {
            match (self.value_poly(p, budget), other.value_poly(p, budget)) {
                (Ok(a), Ok(b)) => !same_position(&a, &b),
                _ => false,
            }
        };
        for c in &centers {
            let lin = Poly::linear(&field, c);
            if differs(&lin) {
                return Equivalence::NotEquivalent(lin);
            }
        }
        let max_k = self.witness_degree(other);
        for c in &centers[..centers.len().min(2)] {
            let lin = Poly::linear(&field, c);
            let mut p = lin.clone();
            for _ in 2..=max_k {
                p = p.mul(&lin, &field);
                if differs(&p) {
                    return Equivalence::NotEquivalent(p);
                }
            }
        }
        Equivalence::UndecidedAtBound
    }
}

impl fmt::Display for ExtensionValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionValuation::Monomial { b, alpha: Alpha::Value(g), .. } => write!(f, "monomial:b={b},alpha={g}"),
            ExtensionValuation::Monomial { b, alpha: Alpha::Transcendental(c), .. } => {
                write!(f, "monomial:b={b},cut={}", c.to_spec())
            }
            ExtensionValuation::LimitImmediate { at, .. } => write!(f, "limit:{at}"),
        }
    }
}
