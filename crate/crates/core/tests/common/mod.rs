#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use valx::ordered_group::{Cut, GroupValue, Side, Value};
use valx::polynomial::Poly;
use valx::valued_field::{FieldElement, ValuedField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q2() -> ValuedField {
    ValuedField::padic(2).unwrap()
}

pub fn f2t() -> ValuedField {
    ValuedField::fp_rational_functions(2).unwrap()
}

pub fn f3t() -> ValuedField {
    ValuedField::fp_rational_functions(3).unwrap()
}

pub fn qt() -> ValuedField {
    ValuedField::q_rational_functions()
}

pub fn g(k: i64) -> GroupValue {
    GroupValue::int(k)
}

pub fn elem(rng: &mut ChaCha8Rng, f: &ValuedField) -> FieldElement {
    if !f.is_function_field() {
        let n: i64 = rng.gen_range(-64..=64);
        let d: i64 = rng.gen_range(1..=16);
        return f.from_rational(&BigRational::new(n.into(), d.into())).unwrap();
    }
    let mut acc = f.zero();
    for i in 0..rng.gen_range(1..=4) {
        let c = f.from_int(rng.gen_range(-3..=3));
        acc = f.add(&acc, &f.mul(&c, &f.t_power(i).unwrap()));
    }
    acc = f.mul(&acc, &f.t_power(rng.gen_range(-2..=2)).unwrap());
    if rng.gen_bool(0.2) {
        let den = f.add(&f.one(), &f.t().unwrap());
        acc = f.div(&acc, &den).unwrap();
    }
    acc
}

pub fn nonzero_elem(rng: &mut ChaCha8Rng, f: &ValuedField) -> FieldElement {
    loop {
        let e = elem(rng, f);
        if !e.is_zero() {
            return e;
        }
    }
}

/// An element of value at least `gamma`.
pub fn small_elem(rng: &mut ChaCha8Rng, f: &ValuedField, gamma: &GroupValue) -> FieldElement {
    let u = loop {
        let e = nonzero_elem(rng, f);
        if f.value(&e) == g(0) {
            break e;
        }
        if rng.gen_bool(0.5) {
            break f.one();
        }
    };
    let extra = rng.gen_range(0..3);
    let pi = f.element_of_value(&gamma.add(&g(extra))).unwrap();
    f.mul(&u, &pi)
}

pub fn poly(rng: &mut ChaCha8Rng, f: &ValuedField, max_deg: usize) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    let coeffs = (0..=d)
        .map(|i| if i == d || rng.gen_bool(0.7) { nonzero_elem(rng, f) } else { f.zero() })
        .collect();
    Poly::new(coeffs)
}

pub fn cut(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Cut {
    let den: i64 = rng.gen_range(1..=4);
    let num: i64 = rng.gen_range(lo * den..=hi * den);
    let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
    Cut::Principal { q: BigRational::new(num.into(), den.into()), side }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Coefficients of `f(x + b)` by binomial expansion.
pub fn shifted_coefficients(f: &ValuedField, p: &Poly, b: &FieldElement) -> Vec<FieldElement> {
    let a = p.coeffs();
    (0..a.len())
        .map(|k| {
            (k..a.len()).fold(f.zero(), |acc, j| {
                let term = f.mul(&f.mul(&f.from_bigint(&binomial(j, k)), &a[j]), &f.pow(b, (j - k) as i64).unwrap());
                f.add(&acc, &term)
            })
        })
        .collect()
}

/// `min_k v(a_k) + k·α` over the monomials of `f(x + b)`, computed without the library's shift.
pub fn brute_min(f: &ValuedField, p: &Poly, b: &FieldElement, alpha: &Value) -> Value {
    let mut best = Value::Plain(GroupValue::Infinity);
    for (k, c) in shifted_coefficients(f, p, b).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = Value::Plain(f.value(c));
        for _ in 0..k {
            term = term.add(alpha).unwrap();
        }
        if term.compare(&best).unwrap().is_lt() {
            best = term;
        }
    }
    best
}
