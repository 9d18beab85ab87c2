//! Finitely presented approximation types over a base field.

use std::fmt;

use crate::balls::{compare_balls, Ball, BallKind, BallRelation};
use crate::error::{Error, Result};
use crate::ordered_group::{Cut, GroupValue, IntegerLowerSet, Side};
use crate::pcs::PcsGenerator;
use crate::valued_field::{FieldElement, ResidueElement, ValuedField};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AtShape {
    /// All balls around `c`; `A_∞ = {c}`.
    Trivial(FieldElement),
    Empty,
    /// `B_γ(b)` and `B°_γ(b)` for `γ` in the lower set of `cut`.
    ValueExtending { b: FieldElement, cut: Cut },
    /// `B_γ(b)` for `γ ≤ δ` and `B°_γ(b)` for `γ < δ`.
    ResidueExtending { b: FieldElement, delta: GroupValue },
    /// The full nest generated by `B_{γ_ν}(c_ν)`.
    Immediate(PcsGenerator),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ApproxType {
    field: ValuedField,
    shape: AtShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtClass {
    Trivial,
    Empty,
    Immediate,
    ValueExtending,
    ResidueExtending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtEquality {
    Equal,
    /// The balls of the given radius and kind differ.
    NotEqual { radius: GroupValue, kind: BallKind },
    UndecidedAtBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntersectionWitness {
    Element(FieldElement),
    EmptyByDeclaration,
}

/// One condition on an unknown `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Ge(FieldElement, GroupValue),
    Gt(FieldElement, GroupValue),
    Eq(FieldElement, GroupValue),
    NotGe(FieldElement, GroupValue),
    NotGt(FieldElement, GroupValue),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Fragment {
    pub constraints: Vec<Constraint>,
}

impl Constraint {
    pub fn holds(&self, field: &ValuedField, a: &FieldElement) -> bool {
        let v = |c: &FieldElement| field.value(&field.sub(a, c));
        match self {
            Constraint::Ge(c, g) => v(c) >= *g,
            Constraint::Gt(c, g) => v(c) > *g,
            Constraint::Eq(c, g) => v(c) == *g,
            Constraint::NotGe(c, g) => v(c) < *g,
            Constraint::NotGt(c, g) => v(c) <= *g,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, c, op, g) = match self {
            Constraint::Ge(c, g) => (false, c, ">=", g),
            Constraint::Gt(c, g) => (false, c, ">", g),
            Constraint::Eq(c, g) => (false, c, "=", g),
            Constraint::NotGe(c, g) => (true, c, ">=", g),
            Constraint::NotGt(c, g) => (true, c, ">", g),
        };
        write!(f, "{}v(X-({c})){op}{g}", if neg { "not " } else { "" })
    }
}

impl Fragment {
    pub fn holds(&self, field: &ValuedField, a: &FieldElement) -> bool {
        self.constraints.iter().all(|c| c.holds(field, a))
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidFragment(msg.to_string())
}

impl ApproxType {
    pub fn trivial(field: ValuedField, c: FieldElement) -> ApproxType {
        ApproxType { field, shape: AtShape::Trivial(c) }
    }

    pub fn empty(field: ValuedField) -> ApproxType {
        ApproxType { field, shape: AtShape::Empty }
    }

    /// The cut `BelowAll` yields the empty type.
    pub fn value_extending(field: ValuedField, b: FieldElement, cut: Cut) -> ApproxType {
        if cut.integer_lower_set() == IntegerLowerSet::Empty {
            return Self::empty(field);
        }
        ApproxType { field, shape: AtShape::ValueExtending { b, cut } }
    }

    pub fn residue_extending(field: ValuedField, b: FieldElement, delta: GroupValue) -> Result<ApproxType> {
        if delta.as_integer().is_none() {
            return Err(Error::Invalid(format!("{delta} is not in the value group")));
        }
        Ok(ApproxType { field, shape: AtShape::ResidueExtending { b, delta } })
    }

    pub fn immediate(g: PcsGenerator) -> Result<ApproxType> {
        if !g.declared_limitless() || g.detect_limit().is_some() {
            return Err(Error::LimitInK);
        }
        g.gamma(0)?;
        Ok(ApproxType { field: *g.field(), shape: AtShape::Immediate(g) })
    }

    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    pub fn shape(&self) -> &AtShape {
        &self.shape
    }

    pub fn generator(&self) -> Option<&PcsGenerator> {
        match &self.shape {
            AtShape::Immediate(g) => Some(g),
            _ => None,
        }
    }

    /// Same type, with searches over the generator bounded by `budget` terms.
    pub fn with_budget(&self, budget: usize) -> ApproxType {
        match &self.shape {
            AtShape::Immediate(g) => ApproxType { field: self.field, shape: AtShape::Immediate(g.clone().with_budget(budget)) },
            _ => self.clone(),
        }
    }

    pub fn classify(&self) -> AtClass {
        match self.shape {
            AtShape::Trivial(_) => AtClass::Trivial,
            AtShape::Empty => AtClass::Empty,
            AtShape::ValueExtending { .. } => AtClass::ValueExtending,
            AtShape::ResidueExtending { .. } => AtClass::ResidueExtending,
            AtShape::Immediate(_) => AtClass::Immediate,
        }
    }

    pub fn supp_contains(&self, gamma: &GroupValue) -> Result<bool> {
        Ok(match &self.shape {
            AtShape::Trivial(_) => true,
            AtShape::Empty => false,
            AtShape::ValueExtending { cut, .. } => cut.contains_in_lower(gamma),
            AtShape::ResidueExtending { delta, .. } => gamma <= delta,
            AtShape::Immediate(g) => {
                if gamma.is_infinite() {
                    false
                } else if g.index_reaching(gamma)?.is_some() || g.declared_cofinal() {
                    true
                } else {
                    return Err(Error::BudgetExhausted(g.budget()));
                }
            }
        })
    }

    /// The support as a cut in `vK`; the trivial type also contains ∞.
    pub fn supp_cut(&self) -> Cut {
        match &self.shape {
            AtShape::Trivial(_) => Cut::AboveAll,
            AtShape::Empty => Cut::BelowAll,
            AtShape::ValueExtending { cut, .. } => cut.clone(),
            AtShape::ResidueExtending { delta, .. } => {
                Cut::Principal { q: delta.as_rational().unwrap().clone(), side: Side::Right }
            }
            // strictly increasing integers are unbounded
            AtShape::Immediate(_) => Cut::AboveAll,
        }
    }

    /// `A_γ` (closed) or `A°_γ` (open) as a ball, `None` when empty.
    pub fn ball(&self, gamma: &GroupValue, kind: BallKind) -> Result<Option<Ball>> {
        let closed_in_supp = self.supp_contains(gamma)?;
        if kind == BallKind::Closed && !closed_in_supp {
            return Err(Error::OutOfSupport);
        }
        if kind == BallKind::Open && (gamma.is_infinite() || !closed_in_supp) {
            return Ok(None);
        }
        let center = match &self.shape {
            AtShape::Trivial(c) => c.clone(),
            AtShape::Empty => unreachable!(),
            AtShape::ValueExtending { b, .. } => b.clone(),
            AtShape::ResidueExtending { b, delta } => {
                if kind == BallKind::Open && gamma >= delta {
                    return Ok(None);
                }
                b.clone()
            }
            AtShape::Immediate(g) => {
                let need = if kind == BallKind::Open { gamma.succ() } else { gamma.clone() };
                let nu = g.index_reaching(&need)?.ok_or(Error::BudgetExhausted(g.budget()))?;
                g.term(nu)?
            }
        };
        Ball::new(center, gamma.clone(), kind).map(Some)
    }

    fn ball_or_empty(&self, gamma: &GroupValue, kind: BallKind) -> Result<Option<Ball>> {
        match self.ball(gamma, kind) {
            Err(Error::OutOfSupport) => Ok(None),
            r => r,
        }
    }

    pub fn member(&self, c: &FieldElement, gamma: &GroupValue, kind: BallKind) -> Result<bool> {
        Ok(self.ball(gamma, kind)?.is_some_and(|b| b.member(&self.field, c)))
    }

    pub fn intersection_witness(&self) -> IntersectionWitness {
        match &self.shape {
            AtShape::Trivial(c) => IntersectionWitness::Element(c.clone()),
            AtShape::Empty => IntersectionWitness::Element(self.field.zero()),
            AtShape::ValueExtending { b, .. } | AtShape::ResidueExtending { b, .. } => {
                IntersectionWitness::Element(b.clone())
            }
            AtShape::Immediate(_) => IntersectionWitness::EmptyByDeclaration,
        }
    }

    /// Completion types are immediate types with support all of `vK`.
    pub fn is_completion_type(&self) -> Result<bool> {
        match &self.shape {
            AtShape::Immediate(g) => {
                // validates strict increase over the whole budget window
                g.gamma_prefix(g.budget())?;
                if g.declared_cofinal() {
                    Ok(true)
                } else {
                    Err(Error::BudgetExhausted(g.budget()))
                }
            }
            _ => Ok(false),
        }
    }

    fn center(&self) -> Option<&FieldElement> {
        match &self.shape {
            AtShape::Trivial(c) => Some(c),
            AtShape::ValueExtending { b, .. } | AtShape::ResidueExtending { b, .. } => Some(b),
            _ => None,
        }
    }

    fn rule_equal(&self, other: &ApproxType) -> Option<bool> {
        let f = &self.field;
        let dist = |a: &FieldElement, b: &FieldElement| f.value(&f.sub(a, b));
        Some(match (&self.shape, &other.shape) {
            (AtShape::Trivial(a), AtShape::Trivial(b)) => a == b,
            (AtShape::Empty, AtShape::Empty) => true,
            (AtShape::ValueExtending { b: b1, cut: c1 }, AtShape::ValueExtending { b: b2, cut: c2 }) => {
                c1.same_lower_set(c2, &f.value_group()) && c1.exceeds_lower_set(&dist(b1, b2))
            }
            (AtShape::ResidueExtending { b: b1, delta: d1 }, AtShape::ResidueExtending { b: b2, delta: d2 }) => {
                d1 == d2 && dist(b1, b2) >= *d1
            }
            (AtShape::Immediate(g1), AtShape::Immediate(g2)) => {
                if g1 == g2 {
                    true
                } else {
                    return None;
                }
            }
            _ => false,
        })
    }

    fn critical_radii(&self, other: &ApproxType) -> Result<Vec<GroupValue>> {
        let f = &self.field;
        let mut out = vec![GroupValue::Infinity, GroupValue::zero()];
        for (a, b) in [(self, other), (other, self)] {
            match &a.shape {
                AtShape::ValueExtending { cut, .. } => {
                    if let IntegerLowerSet::UpTo(n) = cut.integer_lower_set() {
                        out.push(GroupValue::from_bigint(n.clone()));
                        out.push(GroupValue::from_bigint(n + 1));
                    }
                }
                AtShape::ResidueExtending { delta, .. } => {
                    out.push(delta.clone());
                    out.push(delta.succ());
                }
                AtShape::Immediate(g) => {
                    for nu in 0..g.budget() {
                        match g.gamma(nu) {
                            Ok(x) => out.push(x),
                            Err(Error::BudgetExhausted(_)) => break,
                            Err(e) => return Err(e),
                        }
                    }
                    if let Some(c) = b.center() {
                        match g.fixed_distance(c) {
                            Ok(d) => out.push(d.succ()),
                            Err(Error::BudgetExhausted(_)) => {}
                            Err(e) => return Err(e),
                        }
                    }
                }
                _ => {}
            }
        }
        if let (Some(a), Some(b)) = (self.center(), other.center()) {
            let w = f.value(&f.sub(a, b));
            if w.is_finite() {
                out.push(w.succ());
            }
            out.push(w);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn differs_at(&self, other: &ApproxType, gamma: &GroupValue, kind: BallKind) -> Result<bool> {
        if kind == BallKind::Open && gamma.is_infinite() {
            return Ok(false);
        }
        Ok(match (self.ball_or_empty(gamma, kind)?, other.ball_or_empty(gamma, kind)?) {
            (None, None) => false,
            (Some(a), Some(b)) => compare_balls(&self.field, &a, &b) != BallRelation::Equal,
            _ => true,
        })
    }

    pub fn equals(&self, other: &ApproxType, budget: usize) -> AtEquality {
        let (a, b) = (self.with_budget(budget), other.with_budget(budget));
        let decided = a.rule_equal(&b);
        if decided == Some(true) {
            return AtEquality::Equal;
        }
        let search = || -> Result<Option<(GroupValue, BallKind)>> {
            let radii = a.critical_radii(&b)?;
            for kind in [BallKind::Closed, BallKind::Open] {
                for g in &radii {
                    if a.differs_at(&b, g, kind)? {
                        return Ok(Some((g.clone(), kind)));
                    }
                }
            }
            Ok(None)
        };
        match search() {
            Ok(Some((radius, kind))) => AtEquality::NotEqual { radius, kind },
            _ => AtEquality::UndecidedAtBound,
        }
    }

    /// The first `n` constraints of the canonical realizability set.
    pub fn canonical_fragment(&self, n: usize) -> Result<Fragment> {
        let f = &self.field;
        let pi = f.uniformizer();
        let constraints = match &self.shape {
            AtShape::Trivial(_) => return Err(Error::TrivialType),
            AtShape::Immediate(g) => (0..n)
                .map(|i| Ok(Constraint::Ge(g.term(i)?, g.gamma(i)?)))
                .collect::<Result<Vec<_>>>()?,
            AtShape::ResidueExtending { b, delta } => {
                let d = f.element_of_value(delta)?;
                let mut out = Vec::new();
                if n > 0 {
                    out.push(Constraint::Eq(b.clone(), delta.clone()));
                }
                for j in 1..n {
                    out.push(Constraint::NotGt(f.add(b, &f.mul(&f.from_int(j as i64), &d)), delta.clone()));
                }
                out
            }
            AtShape::ValueExtending { b, cut } => {
                let top = match cut.integer_lower_set() {
                    IntegerLowerSet::UpTo(m) => Some(m),
                    _ => None,
                };
                let mut out = Vec::new();
                for j in 0..n {
                    let k = (j / 2) as i64;
                    match &top {
                        Some(m) if j % 2 == 1 => {
                            let eps = GroupValue::from_bigint(m + 1 + k);
                            let c = f.add(b, &f.pow(&pi, k)?);
                            out.push(Constraint::NotGe(c, eps));
                        }
                        Some(m) => out.push(Constraint::Gt(b.clone(), GroupValue::from_bigint(m - k))),
                        None => out.push(Constraint::Gt(b.clone(), GroupValue::int(j as i64))),
                    }
                }
                out
            }
            AtShape::Empty => (0..n)
                .map(|j| Constraint::NotGe(f.from_int(j as i64), GroupValue::int(j as i64)))
                .collect(),
        };
        Ok(Fragment { constraints })
    }

    /// An element of `K` satisfying a fragment of the canonical realizability set.
    pub fn realize_fragment(&self, frag: &Fragment) -> Result<FieldElement> {
        let f = &self.field;
        match &self.shape {
            AtShape::Trivial(_) => Err(Error::TrivialType),
            AtShape::Immediate(g) => {
                let mut top: Option<GroupValue> = None;
                for c in &frag.constraints {
                    let Constraint::Ge(center, gamma) = c else {
                        return Err(invalid("immediate fragments only contain v(X-c) >= γ"));
                    };
                    if !self.member(center, gamma, BallKind::Closed)? {
                        return Err(invalid("center outside the ball of the type"));
                    }
                    if top.as_ref().is_none_or(|t| gamma > t) {
                        top = Some(gamma.clone());
                    }
                }
                let Some(top) = top else { return g.term(0) };
                let nu = g.index_reaching(&top.succ())?.ok_or(Error::BudgetExhausted(g.budget()))?;
                g.term(nu)
            }
            AtShape::ValueExtending { b, cut } => {
                for c in &frag.constraints {
                    match c {
                        Constraint::Gt(center, gamma)
                            if cut.contains_in_lower(gamma) && !cut.exceeds_lower_set(&f.value(&f.sub(center, b))) => {}
                        Constraint::Gt(center, gamma) if cut.contains_in_lower(gamma) && center == b => {}
                        Constraint::NotGe(_, eps) if !cut.contains_in_lower(eps) && eps.is_finite() => {}
                        _ => return Err(invalid("value-extending fragments contain v(X-b) > γ and not v(X-c) >= ε")),
                    }
                }
                Err(Error::DenseValueGroupRequired)
            }
            AtShape::ResidueExtending { b, delta } => {
                if !f.has_infinite_residue_field() {
                    return Err(Error::InfiniteResidueRequired);
                }
                let mut center = None;
                let mut others = Vec::new();
                for c in &frag.constraints {
                    match c {
                        Constraint::Eq(b2, d) if d == delta && f.value(&f.sub(b, b2)) >= *delta => center = Some(b2.clone()),
                        Constraint::NotGt(cj, d) if d == delta => others.push(cj.clone()),
                        _ => return Err(invalid("residue-extending fragments contain v(X-b) = δ and not v(X-c) > δ")),
                    }
                }
                let b = center.unwrap_or_else(|| b.clone());
                let d = f.element_of_value(delta)?;
                let mut excluded: Vec<ResidueElement> = Vec::new();
                for cj in &others {
                    let diff = f.sub(&b, cj);
                    if f.value(&diff) == *delta {
                        excluded.push(f.residue(&f.neg(&f.div(&diff, &d)?))?);
                    }
                }
                let rf = f.residue_field();
                let mut k = 1i64;
                while excluded.contains(&rf.constant_int(k)) {
                    k += 1;
                }
                Ok(f.add(&b, &f.mul(&f.from_int(k), &d)))
            }
            AtShape::Empty => {
                let mut m = GroupValue::Infinity;
                for c in &frag.constraints {
                    let Constraint::NotGe(cj, eps) = c else {
                        return Err(invalid("fragments of the empty type only contain not v(X-c) >= ε"));
                    };
                    m = m.min(eps.clone()).min(f.value(cj));
                }
                let m = if m.is_infinite() { GroupValue::zero() } else { m.sub(&GroupValue::int(1)) };
                f.element_of_value(&m)
            }
        }
    }

    pub fn realize_canonical_fragment(&self, n: usize) -> Result<FieldElement> {
        self.realize_fragment(&self.canonical_fragment(n)?)
    }
}

impl fmt::Display for ApproxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            AtShape::Trivial(c) => write!(f, "at:trivial:c={c}"),
            AtShape::Empty => write!(f, "at:empty"),
            AtShape::ValueExtending { b, cut } => write!(f, "at:value:b={b},cut={}", cut.to_spec()),
            AtShape::ResidueExtending { b, delta } => write!(f, "at:residue:b={b},delta={delta}"),
            AtShape::Immediate(g) => write!(f, "at:immediate:{g}"),
        }
    }
}
