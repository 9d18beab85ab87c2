mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use valx::approx_type::{ApproxType, AtClass, AtEquality};
use valx::balls::BallKind;
use valx::extension::{Alpha, ExtensionValuation};
use valx::kaplansky::{check_fixed, FixedReport};
use valx::notation::{parse_at, parse_pcs};
use valx::ordered_group::{GroupValue, Value};
use valx::pcs::{ExponentFn, PcsGenerator};
use valx::polynomial::{Poly, RatFun};
use valx::valued_field::{ResidueElement, ValuedField};

fn field(k: u8) -> ValuedField {
    [q2(), f3t(), qt(), f2t()][k as usize % 4]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn base_valuation_axioms(seed in any::<u64>(), k in 0u8..4) {
        let f = field(k);
        let mut r = rng(seed);
        let (a, b) = (elem(&mut r, &f), elem(&mut r, &f));
        prop_assert_eq!(f.value(&f.mul(&a, &b)), f.value(&a).add(&f.value(&b)));
        prop_assert!(f.value(&f.add(&a, &b)) >= f.value(&a).min(f.value(&b)));
        if f.value(&a) != f.value(&b) {
            prop_assert_eq!(f.value(&f.add(&a, &b)), f.value(&a).min(f.value(&b)));
        }
    }

    #[test]
    fn monomial_valuation_axioms(seed in any::<u64>(), k in 0u8..3) {
        let f = field(k);
        let mut r = rng(seed);
        let alpha = if r.gen_bool(0.5) { Alpha::Value(g(r.gen_range(-2..=2))) } else { Alpha::Transcendental(cut(&mut r, -2, 2)) };
        let v = ExtensionValuation::monomial(f, elem(&mut r, &f), alpha).unwrap();
        // reducing fractions over k(t) is costly, so keep degrees low there
        let deg = if f.is_function_field() { 2 } else { 4 };
        let (p, q) = (poly(&mut r, &f, deg), poly(&mut r, &f, deg));
        let (vp, vq) = (v.value_poly(&p, 64).unwrap(), v.value_poly(&q, 64).unwrap());
        prop_assert_eq!(v.value_poly(&p.mul(&q, &f), 64).unwrap(), vp.add(&vq).unwrap());
        let vs = v.value_poly(&p.add(&q, &f), 64).unwrap();
        let low = if vp.compare(&vq).unwrap().is_lt() { vp.clone() } else { vq.clone() };
        prop_assert!(!vs.compare(&low).unwrap().is_lt());
        let rf = RatFun::new(p.clone(), q.clone(), &f);
        if let Ok(rf) = rf {
            prop_assert_eq!(v.value_ratfun(&rf, 64).unwrap(), vp.add(&vq.negate().unwrap()).unwrap());
        }
    }

    #[test]
    fn residues_of_unit_ratios(seed in any::<u64>(), k in 0u8..3) {
        let f = field(k);
        let mut r = rng(seed);
        let v = ExtensionValuation::monomial(f, elem(&mut r, &f), Alpha::Value(g(r.gen_range(-2..=2)))).unwrap();
        let deg = if f.is_function_field() { 2 } else { 3 };
        let p = poly(&mut r, &f, deg);
        let q = poly(&mut r, &f, deg);
        let rf = RatFun::new(p.clone(), q.clone(), &f).unwrap();
        let val = v.value_ratfun(&rf, 64).unwrap();
        let shift = f.element_of_value(val.plain().unwrap()).unwrap();
        let unit = RatFun::new(p, q.scale(&shift, &f), &f).unwrap();
        let res = v.residue_ratfun(&unit, 64).unwrap();
        prop_assert!(!res.is_zero());
        // residue maps are multiplicative
        let sq = RatFun::new(unit.num().mul(unit.num(), &f), unit.den().mul(unit.den(), &f), &f).unwrap();
        let rf2 = f.residue_field();
        prop_assert_eq!(v.residue_ratfun(&sq, 64).unwrap(), rf2.mul(&res, &res));
    }

    #[test]
    fn recentered_types_are_equal(seed in any::<u64>(), k in 0u8..3) {
        let f = field(k);
        let mut r = rng(seed);
        let b = elem(&mut r, &f);
        let (at, moved) = if r.gen_bool(0.5) {
            let delta = g(r.gen_range(-3..=3));
            let b2 = f.add(&b, &small_elem(&mut r, &f, &delta));
            (ApproxType::residue_extending(f, b, delta.clone()).unwrap(), ApproxType::residue_extending(f, b2, delta).unwrap())
        } else {
            let c = cut(&mut r, -3, 3);
            let top = match c.integer_lower_set() {
                valx::ordered_group::IntegerLowerSet::UpTo(n) => GroupValue::from_bigint(n + 1),
                _ => unreachable!(),
            };
            let b2 = f.add(&b, &small_elem(&mut r, &f, &top));
            (ApproxType::value_extending(f, b, c.clone()), ApproxType::value_extending(f, b2, c))
        };
        prop_assert_eq!(at.equals(&moved, 64), AtEquality::Equal);
        prop_assert_eq!(at.classify(), moved.classify());
    }

    #[test]
    fn finitely_presented_shapes(seed in any::<u64>(), k in 0u8..3) {
        let f = field(k);
        let mut r = rng(seed);
        let b = elem(&mut r, &f);
        let delta = g(r.gen_range(-3..=3));
        let res = ApproxType::residue_extending(f, b.clone(), delta.clone()).unwrap();
        prop_assert!(res.ball(&delta, BallKind::Open).unwrap().is_none());
        prop_assert!(res.member(&b, &delta, BallKind::Closed).unwrap());
        let c = cut(&mut r, -3, 3);
        let val = ApproxType::value_extending(f, b.clone(), c.clone());
        for gamma in -6..=6 {
            let gamma = g(gamma);
            if c.contains_in_lower(&gamma) {
                prop_assert!(val.member(&b, &gamma, BallKind::Closed).unwrap());
                prop_assert!(val.member(&b, &gamma, BallKind::Open).unwrap());
            } else {
                prop_assert!(val.ball(&gamma, BallKind::Closed).is_err());
            }
        }
    }

    #[test]
    fn spec_strings_round_trip(seed in any::<u64>(), k in 0u8..3) {
        let f = field(k);
        let mut r = rng(seed);
        let at = if r.gen_bool(0.5) {
            ApproxType::residue_extending(f, elem(&mut r, &f), g(r.gen_range(-3..=3))).unwrap()
        } else {
            ApproxType::value_extending(f, elem(&mut r, &f), cut(&mut r, -3, 3))
        };
        prop_assert_eq!(parse_at(&at.to_string(), &f).unwrap(), at);
        let p = poly(&mut r, &f, 5);
        prop_assert_eq!(Poly::parse(&p.to_string(), &f).unwrap(), p);
        let e = elem(&mut r, &f);
        prop_assert_eq!(f.parse_element(&e.to_string()).unwrap(), e);
    }
}

fn power_gap(f: ValuedField, e: &str) -> PcsGenerator {
    PcsGenerator::power_gap(f, ExponentFn::parse(e).unwrap())
}

#[test]
fn gamma_law_on_prefixes() {
    for gen in [
        PcsGenerator::artin_schreier(f2t()).unwrap(),
        PcsGenerator::artin_schreier(f3t()).unwrap(),
        power_gap(f3t(), "i^2"),
        power_gap(qt(), "i^2+i"),
        power_gap(q2(), "2^i"),
        power_gap(q2(), "3i-4"),
    ] {
        let f = *gen.field();
        let gammas = gen.gamma_prefix(8).unwrap();
        assert!(gammas.windows(2).all(|w| w[0] < w[1]));
        for nu in 0..8 {
            for mu in 0..nu {
                let d = f.sub(&gen.term(nu).unwrap(), &gen.term(mu).unwrap());
                assert_eq!(f.value(&d), gammas[mu], "{gen}: v(c_{nu} - c_{mu})");
            }
        }
        // v(c_ν) is strictly increasing or ultimately constant
        let vals: Vec<GroupValue> = (1..8).map(|nu| f.value(&gen.term(nu).unwrap())).collect();
        let increasing = vals.windows(2).all(|w| w[0] < w[1]);
        let settles = vals.windows(2).skip_while(|w| w[0] != w[1]).all(|w| w[0] == w[1]);
        assert!(increasing || settles, "{gen}: {vals:?}");
    }
}

#[test]
fn pivot_is_strict_minimum_past_threshold() {
    let f = f2t();
    let at = PcsGenerator::artin_schreier(f).unwrap().to_approx_type().unwrap();
    let mut r = rng(11);
    let mut checked = 0;
    for _ in 0..30 {
        let p = poly(&mut r, &f, 3);
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let pivot = match check_fixed(&p, &at, 16).unwrap() {
            FixedReport::Fixed { pivot: Some(pv), .. } | FixedReport::NotFixed { pivot: pv, .. } => pv,
            _ => continue,
        };
        let start = pivot.ost_threshold.as_i64().unwrap();
        for _ in 0..50 {
            let gamma = g(start + r.gen_range(0..200));
            let line = pivot.line(&gamma);
            for (i, beta) in pivot.betas.iter().enumerate() {
                if i + 1 != pivot.h && beta.is_finite() {
                    assert!(beta.add(&gamma.scale(i as i64 + 1)) > line, "{p}: term {} at {gamma}", i + 1);
                }
            }
        }
        checked += 1;
    }
    assert!(checked > 10);
}

#[test]
fn fixed_and_not_fixed_reevaluate() {
    let f = f2t();
    let at = PcsGenerator::artin_schreier(f).unwrap().to_approx_type().unwrap();
    let gen = at.generator().unwrap();
    let q = Poly::parse("x^2+x+t", &f).unwrap();
    let FixedReport::NotFixed { threshold, pivot, .. } = check_fixed(&q, &at, 12).unwrap() else { panic!() };
    for nu in threshold..threshold + 5 {
        assert_eq!(f.value(&q.eval(&gen.term(nu).unwrap(), &f)), pivot.line(&gen.gamma(nu).unwrap()));
    }
    let mut r = rng(12);
    for _ in 0..10 {
        let p = Poly::linear(&f, &elem(&mut r, &f));
        let FixedReport::Fixed { value, threshold, .. } = check_fixed(&p, &at, 64).unwrap() else { panic!("{p}") };
        for nu in threshold..threshold + 5 {
            assert_eq!(f.value(&p.eval(&gen.term(nu).unwrap(), &f)), value);
        }
    }
}

#[test]
fn transcendental_limit_is_immediate() {
    let f = f3t();
    let at = parse_at("at:immediate:pcs:powergap:e=i^2;transcendental", &f).unwrap();
    let v = ExtensionValuation::limit(at).unwrap();
    assert_eq!(v.abhyankar_contributions(), (0, 0));
    let mut r = rng(13);
    let mut decided = 0;
    for _ in 0..20 {
        let p = poly(&mut r, &f, 3);
        let q = poly(&mut r, &f, 2);
        let (Ok(vp), Ok(vq)) = (v.value_poly(&p, 24), v.value_poly(&q, 24)) else { continue };
        assert!(matches!(vp, Value::Plain(_)) && matches!(vq, Value::Plain(_)));
        decided += 1;
        if q.is_zero() || vp.is_infinite() {
            continue;
        }
        let shift = f.element_of_value(&vp.add(&vq.negate().unwrap()).unwrap().plain().unwrap().clone()).unwrap();
        let unit = RatFun::new(p, q.scale(&shift, &f), &f).unwrap();
        let res = v.residue_ratfun(&unit, 24).unwrap();
        assert!(matches!(res, ResidueElement::Prime(_)), "residue {res} outside the residue field");
    }
    assert!(decided > 10);
}

#[test]
fn classification_is_exclusive() {
    let f = q2();
    let vals = [
        ExtensionValuation::gauss(f),
        ExtensionValuation::monomial(f, f.one(), Alpha::Transcendental(valx::ordered_group::Cut::AboveAll)).unwrap(),
        ExtensionValuation::limit(parse_at("at:immediate:pcs:powergap:e=2^i;transcendental", &f).unwrap()).unwrap(),
        ExtensionValuation::limit(parse_at("at:immediate:pcs:powergap:e=2^i", &f).unwrap()).unwrap(),
    ];
    let tags: Vec<_> = vals.iter().map(|v| v.classify()).collect();
    for (i, a) in tags.iter().enumerate() {
        for b in &tags[i + 1..] {
            assert_ne!(a, b);
        }
    }
    for v in &vals {
        let (rr, tr) = v.abhyankar_contributions();
        assert!(rr + tr <= 1);
    }
}

#[test]
fn picked_sequence_round_trip() {
    let f = f2t();
    let g0 = parse_pcs("pcs:artin_schreier", &f).unwrap();
    let at = g0.to_approx_type().unwrap();
    let picked = PcsGenerator::from_approx_type(&at).unwrap();
    assert_eq!(picked.gamma_prefix(5).unwrap(), (0..5).map(|k| g(1 << k)).collect::<Vec<_>>());
    assert_eq!(picked.to_approx_type().unwrap().classify(), AtClass::Immediate);
    assert!(PcsGenerator::from_approx_type(&ApproxType::empty(f)).is_err());
}
