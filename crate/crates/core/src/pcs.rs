//! ω-indexed pseudo Cauchy sequences presented by deterministic generators.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::approx_type::ApproxType;
use crate::balls::{Ball, Nest};
use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::ordered_group::GroupValue;
use crate::valued_field::{FieldElement, FieldKind, ValuedField};

pub const DEFAULT_BUDGET: usize = 64;

/// Largest exponent of `p` allowed in a p-adic term.
const MAX_PADIC_EXPONENT: i64 = 1 << 16;

/// An integer-valued map `i ↦ e(i)` such as `i^2`, `2^i` or `3i+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentFn {
    expr: Expr,
    text: String,
}

impl ExponentFn {
    pub fn parse(s: &str) -> Result<ExponentFn> {
        let expr = expr::parse(s)?;
        let mut vars = Vec::new();
        expr.variables(&mut vars);
        if let Some(v) = vars.iter().find(|&&v| v != 'i') {
            return Err(Error::Parse(format!("exponent maps use the variable i, found {v:?}")));
        }
        Ok(ExponentFn { expr, text: s.trim().to_string() })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn eval(&self, i: usize) -> Result<BigInt> {
        let q = eval_rational(&self.expr, &BigRational::from_integer(BigInt::from(i)))?;
        if !q.is_integer() {
            return Err(Error::Invalid(format!("e({i}) = {q} is not an integer")));
        }
        Ok(q.to_integer())
    }

    /// `(a, b)` with `e(i) = a·i + b` when that is evident from the expression.
    pub fn affine(&self) -> Option<(BigRational, BigRational)> {
        affine(&self.expr)
    }
}

fn eval_rational(e: &Expr, i: &BigRational) -> Result<BigRational> {
    let small = |q: &BigRational| -> Result<i64> {
        if !q.is_integer() {
            return Err(Error::Invalid("non-integer exponent".into()));
        }
        q.to_integer().to_i64().filter(|k| k.abs() <= 4096).ok_or_else(|| Error::Invalid("exponent too large".into()))
    };
    Ok(match e {
        Expr::Int(n) => BigRational::from_integer(n.clone()),
        Expr::Var(_) => i.clone(),
        Expr::Neg(a) => -eval_rational(a, i)?,
        Expr::Add(a, b) => eval_rational(a, i)? + eval_rational(b, i)?,
        Expr::Sub(a, b) => eval_rational(a, i)? - eval_rational(b, i)?,
        Expr::Mul(a, b) => eval_rational(a, i)? * eval_rational(b, i)?,
        Expr::Div(a, b) => {
            let d = eval_rational(b, i)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            eval_rational(a, i)? / d
        }
        Expr::Pow(a, b) => {
            let base = eval_rational(a, i)?;
            let k = small(&eval_rational(b, i)?)?;
            if base.is_zero() && k < 0 {
                return Err(Error::DivisionByZero);
            }
            num_traits::pow(if k < 0 { base.recip() } else { base }, k.unsigned_abs() as usize)
        }
    })
}

fn affine(e: &Expr) -> Option<(BigRational, BigRational)> {
    let zero = BigRational::zero();
    Some(match e {
        Expr::Int(n) => (zero, BigRational::from_integer(n.clone())),
        Expr::Var(_) => (BigRational::one(), zero),
        Expr::Neg(a) => {
            let (x, y) = affine(a)?;
            (-x, -y)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let ((x1, y1), (x2, y2)) = (affine(a)?, affine(b)?);
            if matches!(e, Expr::Add(..)) {
                (x1 + x2, y1 + y2)
            } else {
                (x1 - x2, y1 - y2)
            }
        }
        Expr::Mul(a, b) => {
            let ((x1, y1), (x2, y2)) = (affine(a)?, affine(b)?);
            if x1.is_zero() {
                (x2 * &y1, y2 * y1)
            } else if x2.is_zero() {
                (x1 * &y2, y1 * y2)
            } else {
                return None;
            }
        }
        Expr::Div(a, b) => {
            let ((x1, y1), (x2, y2)) = (affine(a)?, affine(b)?);
            if !x2.is_zero() || y2.is_zero() {
                return None;
            }
            (x1 / &y2, y1 / y2)
        }
        Expr::Pow(a, b) => {
            let k = b.const_int()?;
            if k.is_zero() {
                (zero, BigRational::one())
            } else if k.is_one() {
                affine(a)?
            } else {
                let (x, y) = affine(a)?;
                if !x.is_zero() {
                    return None;
                }
                let k = k.to_i32()?;
                if y.is_zero() && k < 0 {
                    return None;
                }
                (zero, num_traits::pow(if k < 0 { y.recip() } else { y }, k.unsigned_abs() as usize))
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PcsSource {
    /// `c_ν = Σ_{i<ν} t^{p^i}` over 𝔽_p(t).
    ArtinSchreier,
    /// `c_ν = Σ_{i<ν} π^{e(i)}` for the uniformizer `π`.
    PowerGap(ExponentFn),
    Explicit(Vec<FieldElement>),
    /// Built from an immediate approximation type by picking ball centers.
    Picked(Box<ApproxType>),
}

#[derive(Debug, Default)]
struct Cache {
    terms: Vec<FieldElement>,
    gammas: Vec<GroupValue>,
}

#[derive(Debug, Clone)]
pub struct PcsGenerator {
    field: ValuedField,
    source: PcsSource,
    declared_limitless: bool,
    declared_cofinal: bool,
    declared_transcendental: bool,
    budget: usize,
    cache: Arc<Mutex<Cache>>,
}

impl PartialEq for PcsGenerator {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.source == other.source
            && self.declared_limitless == other.declared_limitless
            && self.declared_cofinal == other.declared_cofinal
            && self.declared_transcendental == other.declared_transcendental
    }
}

impl Eq for PcsGenerator {}

impl Hash for PcsGenerator {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.to_string().hash(state);
    }
}

impl PcsGenerator {
    fn with_source(field: ValuedField, source: PcsSource) -> PcsGenerator {
        PcsGenerator {
            field,
            source,
            declared_limitless: true,
            declared_cofinal: true,
            declared_transcendental: false,
            budget: DEFAULT_BUDGET,
            cache: Arc::default(),
        }
    }

    pub fn artin_schreier(field: ValuedField) -> Result<PcsGenerator> {
        if !matches!(field.kind(), FieldKind::FpRationalFunctions { .. }) {
            return Err(Error::Invalid("the Artin-Schreier sequence lives in Fp(t)".into()));
        }
        Ok(Self::with_source(field, PcsSource::ArtinSchreier))
    }

    pub fn power_gap(field: ValuedField, e: ExponentFn) -> PcsGenerator {
        Self::with_source(field, PcsSource::PowerGap(e))
    }

    /// A finite list; carries no limitlessness or cofinality claim until declared.
    pub fn explicit(field: ValuedField, terms: Vec<FieldElement>) -> PcsGenerator {
        let mut g = Self::with_source(field, PcsSource::Explicit(terms));
        g.declared_limitless = false;
        g.declared_cofinal = false;
        g
    }

    pub fn declare_limitless(mut self, yes: bool) -> Self {
        self.declared_limitless = yes;
        self
    }

    pub fn declare_cofinal(mut self, yes: bool) -> Self {
        self.declared_cofinal = yes;
        self
    }

    pub fn declare_transcendental(mut self, yes: bool) -> Self {
        self.declared_transcendental = yes;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    pub fn source(&self) -> &PcsSource {
        &self.source
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn declared_limitless(&self) -> bool {
        self.declared_limitless
    }

    pub fn declared_cofinal(&self) -> bool {
        self.declared_cofinal
    }

    pub fn declared_transcendental(&self) -> bool {
        self.declared_transcendental
    }

    pub fn term(&self, nu: usize) -> Result<FieldElement> {
        if let PcsSource::Explicit(ts) = &self.source {
            return ts.get(nu).cloned().ok_or(Error::BudgetExhausted(ts.len()));
        }
        loop {
            let prev = {
                let cache = self.cache.lock().unwrap();
                if nu < cache.terms.len() {
                    return Ok(cache.terms[nu].clone());
                }
                cache.terms.last().cloned().map(|c| (cache.terms.len(), c))
            };
            let expected = prev.as_ref().map_or(0, |p| p.0);
            let next = self.next_term(prev)?;
            let mut cache = self.cache.lock().unwrap();
            if cache.terms.len() == expected {
                cache.terms.push(next);
            }
        }
    }

    /// Term `k` given term `k − 1` (or the first term when `prev` is `None`).
    fn next_term(&self, prev: Option<(usize, FieldElement)>) -> Result<FieldElement> {
        let f = &self.field;
        let Some((k, prev)) = prev else {
            return Ok(f.zero());
        };
        match &self.source {
            PcsSource::ArtinSchreier => {
                let e = (f.characteristic() as u128)
                    .checked_pow((k - 1) as u32)
                    .ok_or_else(|| Error::Invalid("exponent overflow".into()))?;
                Ok(f.add(&prev, &f.t_power(e as i128)?))
            }
            PcsSource::PowerGap(e) => {
                let ek = e.eval(k - 1)?;
                if !f.is_function_field() && ek.abs() > BigInt::from(MAX_PADIC_EXPONENT) {
                    return Err(Error::Invalid(format!("exponent {ek} too large for {f}")));
                }
                Ok(f.add(&prev, &f.element_of_value(&GroupValue::from_bigint(ek))?))
            }
            PcsSource::Explicit(_) => unreachable!(),
            PcsSource::Picked(at) => {
                let inner = at.generator().ok_or(Error::NotImmediate)?;
                let d = inner.fixed_distance(&prev)?;
                let mu = inner.index_reaching(&d.succ())?.ok_or(Error::BudgetExhausted(inner.budget))?;
                inner.term(mu)
            }
        }
    }

    pub fn prefix(&self, n: usize) -> Result<Vec<FieldElement>> {
        (0..n).map(|i| self.term(i)).collect()
    }

    /// `γ_ν = v(c_{ν+1} − c_ν)`, validating the sequence up to `ν + 1`.
    pub fn gamma(&self, nu: usize) -> Result<GroupValue> {
        loop {
            let k = {
                let cache = self.cache.lock().unwrap();
                if nu < cache.gammas.len() {
                    return Ok(cache.gammas[nu].clone());
                }
                cache.gammas.len()
            };
            let g = self.validate_next(k)?;
            let mut cache = self.cache.lock().unwrap();
            if cache.gammas.len() == k {
                cache.gammas.push(g);
            }
        }
    }

    fn validate_next(&self, k: usize) -> Result<GroupValue> {
        let f = &self.field;
        let (ck, ck1) = (self.term(k)?, self.term(k + 1)?);
        let g = f.value(&f.sub(&ck1, &ck));
        if g.is_infinite() {
            return Err(Error::NotPseudoCauchy(vec![k, k + 1]));
        }
        if k > 0 && g <= self.gamma(k - 1)? {
            return Err(Error::NotPseudoCauchy(vec![k - 1, k, k + 1]));
        }
        // spot checks of v(c_{k+1} − c_μ) = γ_μ
        for mu in [0, k / 2] {
            if mu < k && f.value(&f.sub(&ck1, &self.term(mu)?)) != self.gamma(mu)? {
                return Err(Error::NotPseudoCauchy(vec![mu, k + 1]));
            }
        }
        Ok(g)
    }

    pub fn gamma_prefix(&self, n: usize) -> Result<Vec<GroupValue>> {
        (0..n).map(|i| self.gamma(i)).collect()
    }

    /// Whether `v(a − c_ν) ≥ γ_ν` for all `ν < n`.
    pub fn is_limit_prefix(&self, a: &FieldElement, n: usize) -> Result<bool> {
        let f = &self.field;
        for nu in 0..n {
            if f.value(&f.sub(a, &self.term(nu)?)) < self.gamma(nu)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Least `ν` below the budget with `γ_ν ≥ γ`.
    pub fn index_reaching(&self, gamma: &GroupValue) -> Result<Option<usize>> {
        for nu in 0..self.budget {
            match self.gamma(nu) {
                Ok(g) if &g >= gamma => return Ok(Some(nu)),
                Ok(_) => {}
                Err(Error::BudgetExhausted(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(None)
    }

    /// The eventual value `v(c_ν − a)`, which is `v(x − a)` for any limit `x`.
    pub fn fixed_distance(&self, a: &FieldElement) -> Result<GroupValue> {
        let f = &self.field;
        for mu in 0..self.budget {
            let gm = match self.gamma(mu) {
                Err(Error::BudgetExhausted(_)) => break,
                r => r?,
            };
            let w = f.value(&f.sub(&self.term(mu)?, a));
            if w < gm {
                return Ok(w);
            }
        }
        Err(Error::BudgetExhausted(self.budget))
    }

    /// A limit in `K`, when the presentation makes one evident.
    pub fn detect_limit(&self) -> Option<FieldElement> {
        let f = &self.field;
        let PcsSource::PowerGap(e) = &self.source else { return None };
        let (a, b) = e.affine()?;
        if !a.is_integer() || !b.is_integer() || !a.is_positive() {
            return None;
        }
        // Σ_{i≥0} π^{a i + b} = π^b / (1 − π^a)
        let pa = f.element_of_value(&GroupValue::from_bigint(a.to_integer())).ok()?;
        let pb = f.element_of_value(&GroupValue::from_bigint(b.to_integer())).ok()?;
        let lim = f.div(&pb, &f.sub(&f.one(), &pa)).ok()?;
        self.is_limit_prefix(&lim, self.budget.min(16)).ok()?.then_some(lim)
    }

    pub fn to_approx_type(&self) -> Result<ApproxType> {
        ApproxType::immediate(self.clone())
    }

    /// A sequence associated with `at`: starts at 0, then each term is the
    /// center of the first ball of `at` that excludes the previous term.
    pub fn from_approx_type(at: &ApproxType) -> Result<PcsGenerator> {
        let inner = at.generator().ok_or(Error::NotImmediate)?;
        let mut g = Self::with_source(*at.field(), PcsSource::Picked(Box::new(at.clone())));
        g.declared_limitless = inner.declared_limitless;
        g.declared_cofinal = inner.declared_cofinal;
        g.declared_transcendental = inner.declared_transcendental;
        g.budget = inner.budget;
        Ok(g)
    }

    /// The balls `B_{γ_ν}(c_ν)` for `ν < n`.
    pub fn nest(&self, n: usize) -> Result<Nest> {
        let mut nest = Nest::new();
        for nu in 0..n {
            nest = nest.insert(&self.field, Ball::closed(self.term(nu)?, self.gamma(nu)?))?;
        }
        Ok(nest)
    }

    fn flags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let (limitless, cofinal) = match self.source {
            PcsSource::Explicit(_) => (false, false),
            _ => (true, true),
        };
        if self.declared_limitless != limitless {
            out.push(if self.declared_limitless { "limitless" } else { "limit" });
        }
        if self.declared_cofinal != cofinal {
            out.push(if self.declared_cofinal { "cofinal" } else { "not-cofinal" });
        }
        if self.declared_transcendental {
            out.push("transcendental");
        }
        out
    }
}

impl fmt::Display for PcsGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            PcsSource::ArtinSchreier => write!(f, "pcs:artin_schreier")?,
            PcsSource::PowerGap(e) => write!(f, "pcs:powergap:e={}", e.text())?,
            PcsSource::Explicit(ts) => {
                write!(f, "pcs:list:")?;
                for (i, t) in ts.iter().enumerate() {
                    write!(f, "{}{t}", if i > 0 { "," } else { "" })?;
                }
            }
            PcsSource::Picked(at) => write!(f, "pcs:picked({at})")?,
        }
        for flag in self.flags() {
            write!(f, ";{flag}")?;
        }
        Ok(())
    }
}
