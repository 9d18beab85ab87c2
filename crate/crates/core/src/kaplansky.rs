//! Fixed values of polynomials along immediate approximation types.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::approx_type::ApproxType;
use crate::error::{Error, Result};
use crate::ordered_group::{Cut, GroupValue};
use crate::pcs::PcsGenerator;
use crate::polynomial::Poly;

/// The set of values the pivot lemma ranges over. It must have no maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Upsilon {
    Integers,
    Rationals,
    /// Integers in the lower set of a cut.
    Support(Cut),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OstPivot {
    pub beta: GroupValue,
    /// Indices into the input, ordered so values strictly decrease for `γ ≥ β`.
    pub sigma: Vec<usize>,
}

/// Orders the lines `α_i + t_i·γ` for all large `γ` in `Υ`.
pub fn ost_pivot(pairs: &[(GroupValue, i64)], upsilon: &Upsilon) -> Result<OstPivot> {
    if let Upsilon::Support(cut) = upsilon {
        if *cut != Cut::AboveAll {
            return Err(Error::UpsilonBoundedAbove);
        }
    }
    let finite: Vec<(usize, BigRational, i64)> = pairs
        .iter()
        .enumerate()
        .filter_map(|(i, (a, t))| a.as_rational().map(|q| (i, q.clone(), *t)))
        .collect();
    for (k, (_, _, t)) in finite.iter().enumerate() {
        if finite[..k].iter().any(|(_, _, s)| s == t) {
            return Err(Error::Invalid(format!("slope {t} repeated")));
        }
    }
    let mut top: Option<BigRational> = None;
    for (k, (_, ai, ti)) in finite.iter().enumerate() {
        for (_, aj, tj) in &finite[..k] {
            let x = (ai - aj) / BigRational::from_integer((tj - ti).into());
            if top.as_ref().is_none_or(|m| x > *m) {
                top = Some(x);
            }
        }
    }
    let beta = match top {
        Some(x) => GroupValue::from_bigint(x.floor().to_integer() + 1),
        None => GroupValue::zero(),
    };
    let mut sigma: Vec<(usize, i64)> = finite.iter().map(|(i, _, t)| (*i, *t)).collect();
    sigma.sort_by_key(|b| std::cmp::Reverse(b.1));
    Ok(OstPivot { beta, sigma: sigma.into_iter().map(|p| p.0).collect() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotData {
    /// `β_i` for `i = 1..=deg f`, with `∞` for vanishing derivatives.
    pub betas: Vec<GroupValue>,
    pub h: usize,
    pub ost_threshold: GroupValue,
}

impl PivotData {
    pub fn beta_h(&self) -> &GroupValue {
        &self.betas[self.h - 1]
    }

    /// `β_h + h·γ`.
    pub fn line(&self, gamma: &GroupValue) -> GroupValue {
        self.beta_h().add(&gamma.scale(self.h as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedReport {
    /// `v f(c_ν) = value` for every `ν ≥ threshold`.
    Fixed { value: GroupValue, threshold: usize, pivot: Option<PivotData> },
    /// `v f(c_ν)` met the pivot line at every index in `threshold..=confirmed_through`.
    /// A positive `derivative_order` means the evidence comes from `∂_k f`.
    NotFixed { threshold: usize, pivot: PivotData, derivative_order: usize, confirmed_through: usize },
    Undecided { budget: usize },
}

impl FixedReport {
    pub fn verdict(&self) -> &'static str {
        match self {
            FixedReport::Fixed { .. } => "fixed",
            FixedReport::NotFixed { .. } => "not-fixed",
            FixedReport::Undecided { .. } => "undecided",
        }
    }
}

struct Checker<'a> {
    gen: &'a PcsGenerator,
    budget: usize,
    memo: HashMap<Poly, FixedReport>,
}

fn budget_to_undecided(e: Error, budget: usize) -> Result<FixedReport> {
    match e {
        Error::BudgetExhausted(_) => Ok(FixedReport::Undecided { budget }),
        e => Err(e),
    }
}

impl Checker<'_> {
    fn check(&mut self, f: &Poly) -> Result<FixedReport> {
        if let Some(r) = self.memo.get(f) {
            return Ok(r.clone());
        }
        let r = match self.check_uncached(f) {
            Ok(r) => r,
            Err(e) => budget_to_undecided(e, self.budget)?,
        };
        self.memo.insert(f.clone(), r.clone());
        Ok(r)
    }

    fn check_uncached(&mut self, f: &Poly) -> Result<FixedReport> {
        let field = *self.gen.field();
        let Some(deg) = f.degree().filter(|d| *d > 0) else {
            let c = f.coeffs().first().cloned().unwrap_or_else(|| field.zero());
            return Ok(FixedReport::Fixed { value: field.value(&c), threshold: 0, pivot: None });
        };
        let mut betas = Vec::with_capacity(deg);
        let mut start = 0usize;
        for i in 1..=deg {
            match self.check(&f.hasse_derivative(i, &field))? {
                FixedReport::Fixed { value, threshold, .. } => {
                    betas.push(value);
                    start = start.max(threshold);
                }
                FixedReport::NotFixed { threshold, pivot, derivative_order, confirmed_through } => {
                    return Ok(FixedReport::NotFixed {
                        threshold,
                        pivot,
                        derivative_order: derivative_order + i,
                        confirmed_through,
                    });
                }
                u @ FixedReport::Undecided { .. } => return Ok(u),
            }
        }
        let pairs: Vec<(GroupValue, i64)> = betas.iter().cloned().zip(1..).collect();
        let ost = ost_pivot(&pairs, &Upsilon::Integers)?;
        let h = *ost.sigma.last().expect("the leading derivative is a nonzero constant") + 1;
        let pivot = PivotData { betas, h, ost_threshold: ost.beta.clone() };
        let constrained = ost.sigma.len() > 1;
        let mut threshold = None;
        for nu in start..self.budget {
            let gamma = self.gen.gamma(nu)?;
            if constrained && gamma < ost.beta {
                continue;
            }
            let t = *threshold.get_or_insert(nu);
            let v = field.value(&f.eval(&self.gen.term(nu)?, &field));
            let line = pivot.line(&gamma);
            if v < line {
                return Ok(FixedReport::Fixed { value: v, threshold: nu, pivot: Some(pivot) });
            }
            if v > line {
                // v f(c_{ν+1}) then equals the line at ν, below the next line
                continue;
            }
            if nu + 1 == self.budget && nu > t {
                let all_on_line = (t..=nu).try_fold(true, |acc, mu| -> Result<bool> {
                    let g = self.gen.gamma(mu)?;
                    Ok(acc && field.value(&f.eval(&self.gen.term(mu)?, &field)) == pivot.line(&g))
                })?;
                if all_on_line {
                    return Ok(FixedReport::NotFixed {
                        threshold: t,
                        pivot,
                        derivative_order: 0,
                        confirmed_through: nu,
                    });
                }
            }
        }
        Ok(FixedReport::Undecided { budget: self.budget })
    }
}

/// Decides whether the immediate type `at` fixes the value of `f`.
pub fn check_fixed(f: &Poly, at: &ApproxType, budget: usize) -> Result<FixedReport> {
    let gen = at.generator().ok_or(Error::NotImmediate)?;
    let mut checker = Checker { gen, budget, memo: HashMap::new() };
    checker.check(f)
}

/// The fixed value of `g`, given that `deg g` is below the degree of `at`.
pub fn fixed_linear_values(at: &ApproxType, g: &Poly, degree_bound: usize, budget: usize) -> Result<GroupValue> {
    if g.degree().unwrap_or(0) >= degree_bound.max(1) {
        return Err(Error::Invalid(format!("degree of {g} is not below {degree_bound}")));
    }
    match check_fixed(g, at, budget)? {
        FixedReport::Fixed { value, .. } => Ok(value),
        FixedReport::NotFixed { .. } => Err(Error::AssertionViolated(format!("{g} is not fixed"))),
        FixedReport::Undecided { budget } => Err(Error::BudgetExhausted(budget)),
    }
}

/// Whether the lines ordered by `sigma` strictly decrease at `γ`.
pub fn chain_holds(pairs: &[(GroupValue, i64)], sigma: &[usize], gamma: &GroupValue) -> bool {
    let vals: Vec<GroupValue> = sigma.iter().map(|&i| pairs[i].0.add(&gamma.scale(pairs[i].1))).collect();
    vals.windows(2).all(|w| w[0] > w[1])
}
