//! Acceptance criteria, each checked with exact arithmetic.
//! Prints one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;
use valx::approx_type::{ApproxType, AtEquality, Constraint, Fragment};
use valx::balls::{compare_balls, Ball, BallKind, BallRelation};
use valx::extension::{same_position, Alpha, Equivalence, ExtensionClass, ExtensionValuation};
use valx::kaplansky::{check_fixed, ost_pivot, FixedReport, Upsilon};
use valx::ordered_group::{Cut, GroupValue, Side, Value};
use valx::pcs::{ExponentFn, PcsGenerator};
use valx::polynomial::Poly;
use valx::valued_field::{FieldElement, ValuedField};
use valx::Error;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn min_value_formula() -> Check {
    let mut r = rng(1);
    for f in [q2(), f3t()] {
        for n in 0..200 {
            let p = poly(&mut r, &f, 8);
            let gauss = ExtensionValuation::gauss(f);
            let oracle = brute_min(&f, &p, &f.zero(), &Value::Plain(g(0)));
            ensure!(gauss.value_poly(&p, 64).unwrap() == oracle, "gauss value of {p} over {f}");
            let b = elem(&mut r, &f);
            let alpha = if n % 2 == 0 {
                Alpha::Value(g(r.gen_range(-3..=3)))
            } else {
                Alpha::Transcendental(cut(&mut r, -3, 3))
            };
            let alpha_value = match &alpha {
                Alpha::Value(d) => Value::Plain(d.clone()),
                Alpha::Transcendental(c) => Value::augmented(g(0), 1, c.clone()),
            };
            let v = ExtensionValuation::monomial(f, b.clone(), alpha).unwrap();
            ensure!(v.value_poly(&p, 64).unwrap() == brute_min(&f, &p, &b, &alpha_value), "{v} on {p}");
        }
    }
    Ok(())
}

fn taylor_identity() -> Check {
    let mut r = rng(2);
    for f in [q2(), f3t(), qt(), f2t()] {
        for _ in 0..200 {
            let p = poly(&mut r, &f, 6);
            let c = elem(&mut r, &f);
            let lin = Poly::linear(&f, &c);
            let mut power = Poly::constant(f.one());
            let mut sum = Poly::zero();
            for i in 0..=p.degree().unwrap_or(0) {
                let d = p.hasse_derivative(i, &f).eval(&c, &f);
                sum = sum.add(&power.scale(&d, &f), &f);
                power = power.mul(&lin, &f);
            }
            ensure!(sum == p, "Taylor expansion of {p} at {c} over {f} gave {sum}");
        }
    }
    Ok(())
}

fn sample_points(r: &mut rand_chacha::ChaCha8Rng, f: &ValuedField, centers: &[&FieldElement]) -> Vec<FieldElement> {
    let mut out = Vec::new();
    for c in centers {
        out.push((*c).clone());
        for k in -4..10 {
            let pi = f.element_of_value(&g(k)).unwrap();
            out.push(f.add(c, &pi));
            let u = nonzero_elem(r, f);
            out.push(f.add(c, &f.mul(&pi, &u)));
        }
    }
    out
}

fn ball_laws() -> Check {
    let mut r = rng(3);
    for n in 0..200 {
        let f = if n % 2 == 0 { q2() } else { f3t() };
        let kind = |r: &mut rand_chacha::ChaCha8Rng| if r.gen_bool(0.5) { BallKind::Closed } else { BallKind::Open };
        let c1 = elem(&mut r, &f);
        let c2 = if r.gen_bool(0.5) {
            let near = g(r.gen_range(-2..4));
            f.add(&c1, &small_elem(&mut r, &f, &near))
        } else {
            elem(&mut r, &f)
        };
        let a = Ball::new(c1.clone(), g(r.gen_range(-3..=4)), kind(&mut r)).unwrap();
        let b = Ball::new(c2.clone(), g(r.gen_range(-3..=4)), kind(&mut r)).unwrap();

        let inner = f.add(&c1, &small_elem(&mut r, &f, &a.radius().succ()));
        let moved = a.recenter(&f, &inner).ok_or("recentering at a member failed")?;
        ensure!(compare_balls(&f, &a, &moved) == BallRelation::Equal, "recentered {a} at {inner}");

        let pts = sample_points(&mut r, &f, &[&c1, &c2, &inner]);
        for p in &pts {
            ensure!(a.member(&f, p) == moved.member(&f, p), "recentered ball differs at {p}");
        }
        let ina: Vec<bool> = pts.iter().map(|p| a.member(&f, p)).collect();
        let inb: Vec<bool> = pts.iter().map(|p| b.member(&f, p)).collect();
        let both = ina.iter().zip(&inb).any(|(x, y)| *x && *y);
        let a_sub_b = ina.iter().zip(&inb).all(|(x, y)| !*x || *y);
        let b_sub_a = ina.iter().zip(&inb).all(|(x, y)| !*y || *x);
        let ok = match compare_balls(&f, &a, &b) {
            BallRelation::Disjoint => !both,
            BallRelation::Equal => a_sub_b && b_sub_a,
            BallRelation::SubsetStrict => a_sub_b && !b_sub_a,
            BallRelation::SupersetStrict => b_sub_a && !a_sub_b,
        };
        ensure!(ok, "relation of {a} and {b} disagrees with membership");
        ensure!(!both || a_sub_b || b_sub_a, "{a} and {b} overlap without nesting");
    }
    Ok(())
}

fn realize_round_trip() -> Check {
    let mut r = rng(4);
    for n in 0..100 {
        let f = [q2(), f3t(), qt()][n % 3];
        let b = elem(&mut r, &f);
        let at = if n % 2 == 0 {
            ApproxType::value_extending(f, b, cut(&mut r, -5, 5))
        } else {
            ApproxType::residue_extending(f, b, g(r.gen_range(-5..=5))).unwrap()
        };
        let v = ExtensionValuation::realize(&at).map_err(|e| format!("{at}: {e}"))?;
        ensure!(v.approx_type_of() == at, "round trip of {at} gave {}", v.approx_type_of());
    }
    Ok(())
}

fn generators() -> Vec<PcsGenerator> {
    vec![
        PcsGenerator::artin_schreier(f2t()).unwrap(),
        PcsGenerator::power_gap(f3t(), ExponentFn::parse("i^2").unwrap()),
        PcsGenerator::power_gap(qt(), ExponentFn::parse("i^2+i").unwrap()),
        PcsGenerator::power_gap(q2(), ExponentFn::parse("2^i").unwrap()),
    ]
}

fn associated(at: &ApproxType, g: &PcsGenerator, n: usize) -> Check {
    let f = at.field();
    for nu in 0..n {
        let gamma = g.gamma(nu).unwrap();
        let ball = at.ball(&gamma, BallKind::Closed).unwrap().unwrap();
        let own = Ball::closed(g.term(nu).unwrap(), gamma.clone());
        ensure!(compare_balls(f, &ball, &own) == BallRelation::Equal, "A at {gamma} is not B(c_{nu}) for {g}");
    }
    Ok(())
}

fn pcs_association() -> Check {
    for g in generators() {
        let at = g.to_approx_type().unwrap();
        let f = *at.field();
        associated(&at, &g, 8)?;
        let picked = PcsGenerator::from_approx_type(&at).unwrap();
        let at2 = picked.to_approx_type().unwrap();
        associated(&at, &picked, 6)?;
        associated(&at2, &picked, 6)?;
        let top = g.gamma(5).unwrap().as_i64().unwrap();
        for gamma in -3..=top {
            for kind in [BallKind::Closed, BallKind::Open] {
                let (x, y) = (at.ball(&GroupValue::int(gamma), kind).unwrap(), at2.ball(&GroupValue::int(gamma), kind).unwrap());
                let same = match (&x, &y) {
                    (Some(x), Some(y)) => compare_balls(&f, x, y) == BallRelation::Equal,
                    (None, None) => true,
                    _ => false,
                };
                ensure!(same, "conversion of {g} disagrees at radius {gamma} ({kind:?})");
            }
        }
    }
    Ok(())
}

fn artin_schreier_at() -> ApproxType {
    PcsGenerator::artin_schreier(f2t()).unwrap().to_approx_type().unwrap()
}

fn kaplansky_certificates() -> Check {
    let f = f2t();
    let at = artin_schreier_at();
    let gen = at.generator().unwrap();
    let q = Poly::parse("x^2+x+t", &f).unwrap();
    match check_fixed(&q, &at, 13).unwrap() {
        FixedReport::NotFixed { .. } => {}
        other => return Err(format!("x^2+x+t gave {other:?}")),
    }
    for nu in 0..=12usize {
        let v = f.value(&q.eval(&gen.term(nu).unwrap(), &f));
        ensure!(v == GroupValue::int(1i64 << nu), "v f(c_{nu}) = {v}");
    }
    let mut r = rng(6);
    for _ in 0..20 {
        let c = if r.gen_bool(0.5) {
            let k = r.gen_range(0..6);
            let near = g(r.gen_range(-1..6));
            f.add(&gen.term(k).unwrap(), &small_elem(&mut r, &f, &near))
        } else {
            elem(&mut r, &f)
        };
        let p = Poly::linear(&f, &c);
        let FixedReport::Fixed { value, threshold, pivot } = check_fixed(&p, &at, 64).unwrap() else {
            return Err(format!("{p} not reported fixed"));
        };
        let pivot = pivot.ok_or("linear polynomial without pivot data")?;
        for nu in threshold..threshold + 5 {
            let gamma = gen.gamma(nu).unwrap();
            let line = pivot.beta_h().add(&gamma.scale(pivot.h as i64));
            ensure!(line > value, "certificate fails for {p} at {nu}");
            ensure!(f.value(&p.eval(&gen.term(nu).unwrap(), &f)) == value, "value of {p} moved at {nu}");
        }
    }
    Ok(())
}

fn ost_chain() -> Check {
    let mut r = rng(7);
    for _ in 0..100 {
        let m = r.gen_range(1..=5);
        let mut slopes: Vec<i64> = (-6..=6).collect();
        slopes.shuffle(&mut r);
        let pairs: Vec<(GroupValue, i64)> = slopes[..m].iter().map(|&t| (g(r.gen_range(-20..=20)), t)).collect();
        let p = ost_pivot(&pairs, &Upsilon::Integers).unwrap();
        let beta = p.beta.as_i64().unwrap();
        for _ in 0..20 {
            let gamma = beta + r.gen_range(0..60);
            let vals: Vec<i64> = p
                .sigma
                .iter()
                .map(|&i| pairs[i].0.as_i64().unwrap() + pairs[i].1 * gamma)
                .collect();
            ensure!(vals.windows(2).all(|w| w[0] > w[1]), "{pairs:?} at {gamma}: {vals:?}");
        }
    }
    Ok(())
}

fn monomial(r: &mut rand_chacha::ChaCha8Rng, f: &ValuedField) -> ExtensionValuation {
    let centers = [0, 1, 2, 4, 6, 8];
    let b = f.from_int(*centers.choose(r).unwrap());
    let alpha = if r.gen_bool(0.5) {
        Alpha::Value(g(r.gen_range(0..=3)))
    } else {
        let qs = [(-1, 1), (1, 2), (1, 1), (3, 2), (2, 1), (5, 3)];
        let (n, d) = *qs.choose(r).unwrap();
        let side = if r.gen_bool(0.5) { Side::Left } else { Side::Right };
        Alpha::Transcendental(Cut::Principal { q: BigRational::new(n.into(), d.into()), side })
    };
    ExtensionValuation::monomial(*f, b, alpha).unwrap()
}

fn equivalence_soundness() -> Check {
    let mut r = rng(8);
    let f = q2();
    let (mut eq, mut ne) = (0, 0);
    for _ in 0..200 {
        let v1 = monomial(&mut r, &f);
        let v2 = if r.gen_bool(0.3) {
            match &v1 {
                ExtensionValuation::Monomial { alpha, .. } => {
                    ExtensionValuation::monomial(f, f.from_int(*[0, 2, 4, 8].choose(&mut r).unwrap()), alpha.clone()).unwrap()
                }
                _ => unreachable!(),
            }
        } else {
            monomial(&mut r, &f)
        };
        match v1.equivalent(&v2, 64) {
            Equivalence::Equivalent => {
                eq += 1;
                for _ in 0..100 {
                    let p = poly(&mut r, &f, 6);
                    ensure!(v1.value_poly(&p, 64).unwrap() == v2.value_poly(&p, 64).unwrap(), "{v1} ~ {v2} but {p} differs");
                }
            }
            Equivalence::NotEquivalent(w) => {
                ne += 1;
                let (a, b) = (v1.value_poly(&w, 64).unwrap(), v2.value_poly(&w, 64).unwrap());
                ensure!(a != b && !same_position(&a, &b), "witness {w} for {v1} vs {v2} gives {a}, {b}");
            }
            Equivalence::UndecidedAtBound => return Err(format!("{v1} vs {v2} undecided")),
        }
    }
    ensure!(eq > 0 && ne > 0, "degenerate sample: {eq} equivalent, {ne} not");
    Ok(())
}

fn non_injectivity() -> Check {
    let f = q2();
    let half = |side| Cut::Principal { q: BigRational::new(1.into(), 2.into()), side };
    let l = ExtensionValuation::monomial(f, f.zero(), Alpha::Transcendental(half(Side::Left))).unwrap();
    let r = ExtensionValuation::monomial(f, f.zero(), Alpha::Transcendental(half(Side::Right))).unwrap();
    ensure!(l.approx_type_of().equals(&r.approx_type_of(), 64) == AtEquality::Equal, "types differ");
    let x2 = Poly::parse("x^2", &f).unwrap();
    ensure!(l.equivalent(&r, 64) == Equivalence::NotEquivalent(x2.clone()), "witness is not x^2");
    let two = Value::Plain(g(1));
    let (vl, vr) = (l.value_poly(&x2, 64).unwrap(), r.value_poly(&x2, 64).unwrap());
    ensure!(vl.compare(&two).unwrap().is_lt() && vr.compare(&two).unwrap().is_gt(), "x^2 against v(2): {vl}, {vr}");
    Ok(())
}

fn fragment_realization() -> Check {
    let mut r = rng(10);
    let f = qt();
    for _ in 0..50 {
        let b = elem(&mut r, &f);
        let delta = g(r.gen_range(-3..=3));
        let at = ApproxType::residue_extending(f, b.clone(), delta.clone()).unwrap();
        let mut frag = at.canonical_fragment(r.gen_range(1..=6)).unwrap();
        for _ in 0..r.gen_range(0..4) {
            let near = f.add(&b, &small_elem(&mut r, &f, &delta));
            frag.constraints.push(Constraint::NotGt(near, delta.clone()));
        }
        let a = at.realize_fragment(&frag).map_err(|e| format!("{at}: {e}"))?;
        ensure!(frag.holds(&f, &a), "{a} violates a fragment of {at}");
    }
    let gens = generators();
    for k in 0..50 {
        let g0 = &gens[k % gens.len()];
        let at = g0.to_approx_type().unwrap();
        let fld = *at.field();
        let mut cs = Vec::new();
        for _ in 0..r.gen_range(1..=5) {
            let i = r.gen_range(0..6);
            let center = g0.term(i + r.gen_range(0..3)).unwrap();
            cs.push(Constraint::Ge(center, g0.gamma(i).unwrap()));
        }
        let frag = Fragment { constraints: cs };
        let a = at.realize_fragment(&frag).map_err(|e| format!("{at}: {e}"))?;
        ensure!(frag.holds(&fld, &a), "{a} violates an immediate fragment of {at}");
    }
    for fld in [q2(), f3t(), f2t()] {
        let at = ApproxType::value_extending(fld, elem(&mut r, &fld), cut(&mut r, -5, 5));
        ensure!(at.realize_canonical_fragment(4) == Err(Error::DenseValueGroupRequired), "value-extending over {fld}");
    }
    Ok(())
}

fn purity() -> Check {
    for f in [q2(), f3t(), qt()] {
        let gauss = ExtensionValuation::gauss(f);
        ensure!(gauss.classify() == ExtensionClass::ResidueTranscendental && gauss.is_pure(), "gauss over {f}");
        for c in [Cut::Principal { q: BigRational::from_integer(2.into()), side: Side::Right }, Cut::AboveAll] {
            let v = ExtensionValuation::monomial(f, f.zero(), Alpha::Transcendental(c)).unwrap();
            ensure!(v.classify() == ExtensionClass::ValueTranscendental && v.is_pure(), "{v}");
        }
    }
    let lim = ExtensionValuation::limit(artin_schreier_at()).unwrap();
    ensure!(!lim.is_pure(), "artin-schreier limit reported pure");
    ensure!(lim.is_almost_pure().unwrap(), "artin-schreier limit not almost pure");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("min-value formula", min_value_formula),
        ("taylor identity", taylor_identity),
        ("ultrametric ball laws", ball_laws),
        ("realize round trip", realize_round_trip),
        ("pcs and type association", pcs_association),
        ("fixed-value certificates", kaplansky_certificates),
        ("pivot chain", ost_chain),
        ("equivalence soundness", equivalence_soundness),
        ("non-injectivity over Z", non_injectivity),
        ("fragment realization", fragment_realization),
        ("purity classification", purity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
