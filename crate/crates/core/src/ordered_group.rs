//! Value groups and their cut-augmented extensions.
//!
//! Supported groups are ℤ, ℚ and the lexicographically ordered plane ℤ²
//! (with divisible hull ℚ²). A [`GroupValue`] is either a finite element
//! or the symbol `∞`, which is larger than every finite element.
//!
//! An element `α` outside `Γ` is described by the [`Cut`] it induces in
//! `Γ`. For principal cuts the element is modelled as `α = q ± ι` where
//! `ι` is a positive infinitesimal, so that the ordering of `Γ ⊕ ℤα` is
//! fully determined by `(q, side)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("augmented values carry different cuts")]
    MixedCuts,
    #[error("values belong to groups of different rank")]
    RankMismatch,
    #[error("principal cuts are only supported over rank-one groups")]
    UnsupportedCut,
    #[error("infinity has no additive inverse")]
    InfiniteNegation,
    #[error("value {0} is not an element of {1:?}")]
    NotInGroup(String, GroupKind),
    #[error("cannot parse value: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Integers,
    Rationals,
    LexSquare,
    /// The divisible hull of [`GroupKind::LexSquare`].
    LexRationalSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
}

impl GroupDescriptor {
    pub const INTEGERS: GroupDescriptor = GroupDescriptor { kind: GroupKind::Integers };
    pub const RATIONALS: GroupDescriptor = GroupDescriptor { kind: GroupKind::Rationals };
    pub const LEX_SQUARE: GroupDescriptor = GroupDescriptor { kind: GroupKind::LexSquare };

    pub fn divisible_hull(&self) -> GroupDescriptor {
        let kind = match self.kind {
            GroupKind::Integers | GroupKind::Rationals => GroupKind::Rationals,
            GroupKind::LexSquare | GroupKind::LexRationalSquare => GroupKind::LexRationalSquare,
        };
        GroupDescriptor { kind }
    }

    pub fn is_divisible(&self) -> bool {
        matches!(self.kind, GroupKind::Rationals | GroupKind::LexRationalSquare)
    }

    pub fn rank(&self) -> usize {
        match self.kind {
            GroupKind::Integers | GroupKind::Rationals => 1,
            GroupKind::LexSquare | GroupKind::LexRationalSquare => 2,
        }
    }

    /// Membership of a finite value (infinity is always admitted).
    pub fn contains(&self, value: &GroupValue) -> bool {
        match value {
            GroupValue::Infinity => true,
            GroupValue::Finite(coords) => {
                coords.len() == self.rank()
                    && (self.is_divisible() || coords.iter().all(|c| c.is_integer()))
            }
        }
    }
}

/// `dim_ℚ (ℚ ⊗ Γ)`, plus one when `Γ` is augmented by a non-torsion element.
pub fn rational_rank(descriptor: &GroupDescriptor, augmented: bool) -> usize {
    descriptor.rank() + usize::from(augmented)
}

/// An element of a supported value group, or `∞`.
///
/// Finite values hold one coordinate for ℤ and ℚ, two for the
/// lexicographic planes. The derived ordering is lexicographic on the
/// coordinates and places `Infinity` above everything; use
/// [`GroupValue::compare`] when ranks are not known to agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupValue {
    Finite(Vec<BigRational>),
    Infinity,
}

impl GroupValue {
    pub fn int(n: i64) -> Self {
        GroupValue::Finite(vec![BigRational::from_integer(n.into())])
    }

    pub fn from_bigint(n: BigInt) -> Self {
        GroupValue::Finite(vec![BigRational::from_integer(n)])
    }

    pub fn rational(q: BigRational) -> Self {
        GroupValue::Finite(vec![q])
    }

    pub fn lex(a: BigRational, b: BigRational) -> Self {
        GroupValue::Finite(vec![a, b])
    }

    pub fn zero() -> Self {
        GroupValue::int(0)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroupValue::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            GroupValue::Finite(c) => Some(c.len()),
            GroupValue::Infinity => None,
        }
    }

    /// The single coordinate of a finite rank-one value.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            GroupValue::Finite(c) if c.len() == 1 => Some(&c[0]),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| i64::try_from(n).ok())
    }

    pub fn compare(&self, other: &GroupValue) -> Result<Ordering, GroupError> {
        match (self, other) {
            (GroupValue::Finite(a), GroupValue::Finite(b)) if a.len() != b.len() => {
                Err(GroupError::RankMismatch)
            }
            _ => Ok(self.cmp(other)),
        }
    }

    pub fn add(&self, other: &GroupValue) -> GroupValue {
        match (self, other) {
            (GroupValue::Finite(a), GroupValue::Finite(b)) => {
                assert_eq!(a.len(), b.len(), "adding values of different rank");
                GroupValue::Finite(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => GroupValue::Infinity,
        }
    }

    pub fn negate(&self) -> Result<GroupValue, GroupError> {
        match self {
            GroupValue::Finite(a) => Ok(GroupValue::Finite(a.iter().map(|x| -x).collect())),
            GroupValue::Infinity => Err(GroupError::InfiniteNegation),
        }
    }

    /// `self − other`; `other` must be finite.
    pub fn sub(&self, other: &GroupValue) -> GroupValue {
        self.add(&other.negate().expect("subtracting infinity"))
    }

    pub fn scale(&self, n: i64) -> GroupValue {
        self.scale_big(&BigInt::from(n))
    }

    pub fn scale_big(&self, n: &BigInt) -> GroupValue {
        match self {
            GroupValue::Finite(a) => {
                let n = BigRational::from_integer(n.clone());
                GroupValue::Finite(a.iter().map(|x| x * &n).collect())
            }
            GroupValue::Infinity => {
                assert!(n.is_positive(), "scaling infinity by a non-positive integer");
                GroupValue::Infinity
            }
        }
    }

    /// Successor in ℤ; only meaningful for integer values.
    pub fn succ(&self) -> GroupValue {
        match self {
            GroupValue::Finite(_) => self.add(&GroupValue::int(1)),
            GroupValue::Infinity => GroupValue::Infinity,
        }
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Infinity => write!(f, "inf"),
            GroupValue::Finite(c) if c.len() == 1 => write!(f, "{}", c[0]),
            GroupValue::Finite(c) => {
                write!(f, "(")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, GroupError> {
    let s = s.trim();
    let bad = || GroupError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for GroupValue {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(GroupValue::Infinity);
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let coords = inner
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != 2 {
                return Err(GroupError::Parse(s.to_string()));
            }
            return Ok(GroupValue::Finite(coords));
        }
        Ok(GroupValue::rational(parse_rational(s)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A cut `(D, E)` in a value group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cut {
    /// `D = ∅`.
    BelowAll,
    /// `D = Γ`.
    AboveAll,
    /// `D = {γ < q}` (left) or `D = {γ ≤ q}` (right), for `q` in the divisible hull.
    Principal { q: BigRational, side: Side },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutMembership {
    InD,
    InE,
}

/// The lower set of a cut in ℤ, in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IntegerLowerSet {
    Empty,
    All,
    UpTo(BigInt),
}

impl Cut {
    pub fn principal(
        descriptor: &GroupDescriptor,
        q: BigRational,
        side: Side,
    ) -> Result<Cut, GroupError> {
        if descriptor.rank() != 1 {
            return Err(GroupError::UnsupportedCut);
        }
        Ok(Cut::Principal { q, side })
    }

    pub fn membership(&self, gamma: &GroupValue) -> CutMembership {
        let in_d = match self {
            Cut::BelowAll => false,
            Cut::AboveAll => gamma.is_finite(),
            Cut::Principal { q, side } => match gamma.as_rational() {
                Some(g) => match side {
                    Side::Left => g < q,
                    Side::Right => g <= q,
                },
                None => false,
            },
        };
        if in_d {
            CutMembership::InD
        } else {
            CutMembership::InE
        }
    }

    pub fn contains_in_lower(&self, gamma: &GroupValue) -> bool {
        self.membership(gamma) == CutMembership::InD
    }

    /// The lower set `D ∩ ℤ`.
    pub fn integer_lower_set(&self) -> IntegerLowerSet {
        match self {
            Cut::BelowAll => IntegerLowerSet::Empty,
            Cut::AboveAll => IntegerLowerSet::All,
            Cut::Principal { q, side: Side::Right } => IntegerLowerSet::UpTo(q.floor().to_integer()),
            Cut::Principal { q, side: Side::Left } => {
                IntegerLowerSet::UpTo(q.ceil().to_integer() - BigInt::one())
            }
        }
    }

    /// Whether both cuts induce the same lower set in the group `descriptor`.
    pub fn same_lower_set(&self, other: &Cut, descriptor: &GroupDescriptor) -> bool {
        if descriptor.kind == GroupKind::Integers {
            return self.integer_lower_set() == other.integer_lower_set();
        }
        self == other
    }

    /// Whether `gamma` lies strictly above every element of `D` (in ℤ).
    pub fn exceeds_lower_set(&self, gamma: &GroupValue) -> bool {
        match self.integer_lower_set() {
            IntegerLowerSet::Empty => true,
            IntegerLowerSet::All => gamma.is_infinite(),
            IntegerLowerSet::UpTo(m) => match gamma {
                GroupValue::Infinity => true,
                GroupValue::Finite(_) => {
                    gamma.as_rational().expect("rank-one value") > &BigRational::from_integer(m)
                }
            },
        }
    }

    /// Spec-string form: `3/2L`, `-1R`, `above`, `below`.
    pub fn to_spec(&self) -> String {
        match self {
            Cut::BelowAll => "below".into(),
            Cut::AboveAll => "above".into(),
            Cut::Principal { q, side } => {
                format!("{q}{}", if *side == Side::Left { 'L' } else { 'R' })
            }
        }
    }

    pub fn parse_spec(s: &str) -> Result<Cut, GroupError> {
        let s = s.trim();
        match s {
            "above" | "+inf" => return Ok(Cut::AboveAll),
            "below" | "-inf" => return Ok(Cut::BelowAll),
            _ => {}
        }
        let side = match s.chars().last() {
            Some('L') | Some('l') => Side::Left,
            Some('R') | Some('r') => Side::Right,
            _ => return Err(GroupError::Parse(s.to_string())),
        };
        let q = parse_rational(&s[..s.len() - 1])?;
        Ok(Cut::Principal { q, side })
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::BelowAll => write!(f, "below"),
            Cut::AboveAll => write!(f, "above"),
            Cut::Principal { q, side } => write!(
                f,
                "q={q} side={}",
                if *side == Side::Left { "left" } else { "right" }
            ),
        }
    }
}

/// `base + multiplicity·α` where `α` realizes `cut`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AugmentedValue {
    pub base: GroupValue,
    pub multiplicity: i64,
    pub cut: Cut,
}

impl AugmentedValue {
    pub fn new(base: GroupValue, multiplicity: i64, cut: Cut) -> Self {
        AugmentedValue { base, multiplicity, cut }
    }

    /// The element `α` itself.
    pub fn alpha(cut: Cut) -> Self {
        AugmentedValue::new(GroupValue::zero(), 1, cut)
    }

    pub fn is_torsion_modulo_base(&self) -> bool {
        self.multiplicity == 0
    }

    /// Sort key realizing the order of `Γ ⊕ ℤα` for the given cut.
    fn key(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let n = BigRational::from_integer(self.multiplicity.into());
        let base = match &self.base {
            GroupValue::Finite(c) => c.clone(),
            GroupValue::Infinity => unreachable!("infinite values are compared separately"),
        };
        match &self.cut {
            Cut::Principal { q, side } => {
                assert_eq!(base.len(), 1, "principal cuts live over rank-one groups");
                let position = &base[0] + &n * q;
                let inf = if *side == Side::Right { n } else { -n };
                (vec![position], vec![inf])
            }
            Cut::AboveAll => (vec![n], base),
            Cut::BelowAll => (vec![-n], base),
        }
    }

    pub fn compare(&self, other: &AugmentedValue) -> Result<Ordering, GroupError> {
        if self.cut != other.cut {
            return Err(GroupError::MixedCuts);
        }
        if let (Some(a), Some(b)) = (self.base.rank(), other.base.rank()) {
            if a != b {
                return Err(GroupError::RankMismatch);
            }
        }
        Ok(match (self.base.is_infinite(), other.base.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => self.key().cmp(&other.key()),
        })
    }
}

/// An element of `Γ ∪ {∞}` or of `Γ ⊕ ℤα`, in normal form: values with
/// zero multiplicity or infinite base are always `Plain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Plain(GroupValue),
    Augmented(AugmentedValue),
}

impl Value {
    pub fn augmented(base: GroupValue, multiplicity: i64, cut: Cut) -> Value {
        if multiplicity == 0 || base.is_infinite() {
            Value::Plain(base)
        } else {
            Value::Augmented(AugmentedValue::new(base, multiplicity, cut))
        }
    }

    pub fn plain(&self) -> Option<&GroupValue> {
        match self {
            Value::Plain(g) => Some(g),
            Value::Augmented(_) => None,
        }
    }

    pub fn cut(&self) -> Option<&Cut> {
        match self {
            Value::Plain(_) => None,
            Value::Augmented(a) => Some(&a.cut),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Value::Plain(GroupValue::Infinity))
    }

    fn embed(&self, cut: &Cut) -> AugmentedValue {
        match self {
            Value::Plain(g) => AugmentedValue::new(g.clone(), 0, cut.clone()),
            Value::Augmented(a) => a.clone(),
        }
    }

    pub fn compare(&self, other: &Value) -> Result<Ordering, GroupError> {
        match (self, other) {
            (Value::Plain(a), Value::Plain(b)) => a.compare(b),
            (Value::Augmented(a), _) => a.compare(&other.embed(&a.cut)),
            (_, Value::Augmented(b)) => self.embed(&b.cut).compare(b),
        }
    }

    pub fn add(&self, other: &Value) -> Result<Value, GroupError> {
        let cut = match (self.cut(), other.cut()) {
            (Some(a), Some(b)) if a != b => return Err(GroupError::MixedCuts),
            (Some(c), _) | (_, Some(c)) => c.clone(),
            (None, None) => {
                return Ok(Value::Plain(self.plain().unwrap().add(other.plain().unwrap())));
            }
        };
        let a = self.embed(&cut);
        let b = other.embed(&cut);
        Ok(Value::augmented(a.base.add(&b.base), a.multiplicity + b.multiplicity, cut))
    }

    pub fn negate(&self) -> Result<Value, GroupError> {
        match self {
            Value::Plain(g) => Ok(Value::Plain(g.negate()?)),
            Value::Augmented(a) => Ok(Value::augmented(a.base.negate()?, -a.multiplicity, a.cut.clone())),
        }
    }

    pub fn is_torsion_modulo_base(&self) -> bool {
        match self {
            Value::Plain(_) => true,
            Value::Augmented(a) => a.is_torsion_modulo_base(),
        }
    }

    /// Renders as `2+i`, `1-2i` for principal cuts (`i` the positive
    /// infinitesimal), `3+2w` / `3-2w` for `α` above / below the group.
    pub fn render(&self) -> String {
        match self {
            Value::Plain(g) => g.to_string(),
            Value::Augmented(a) => {
                let (head, coeff, marker) = match &a.cut {
                    Cut::Principal { q, side } => {
                        let n = BigRational::from_integer(a.multiplicity.into());
                        let base = a.base.as_rational().expect("rank-one value");
                        let pos = base + &n * q;
                        let c = if *side == Side::Right { a.multiplicity } else { -a.multiplicity };
                        (pos.to_string(), c, 'i')
                    }
                    Cut::AboveAll => (a.base.to_string(), a.multiplicity, 'w'),
                    Cut::BelowAll => (a.base.to_string(), -a.multiplicity, 'w'),
                };
                let sign = if coeff < 0 { '-' } else { '+' };
                let mag = coeff.unsigned_abs();
                if mag == 1 {
                    format!("{head}{sign}{marker}")
                } else {
                    format!("{head}{sign}{mag}{marker}")
                }
            }
        }
    }

    /// Inverse of [`Value::render`]; `cut` supplies the meaning of `i`/`w`.
    pub fn parse(s: &str, cut: Option<&Cut>) -> Result<Value, GroupError> {
        let s = s.trim();
        let bad = || GroupError::Parse(s.to_string());
        let marker = s.chars().last().filter(|c| *c == 'i' || *c == 'w');
        let Some(marker) = marker else {
            return Ok(Value::Plain(s.parse()?));
        };
        let cut = cut.ok_or_else(bad)?;
        let body = &s[..s.len() - 1];
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .filter(|(i, c)| *i > 0 && (*c == '+' || *c == '-'))
            .map(|(i, _)| i)
            .next_back()
            .ok_or_else(bad)?;
        let head = parse_rational(&body[..split])?;
        let sign = if body.as_bytes()[split] == b'-' { -1i64 } else { 1 };
        let mag_str = &body[split + 1..];
        let mag: i64 = if mag_str.is_empty() { 1 } else { mag_str.parse().map_err(|_| bad())? };
        let coeff = sign * mag;
        let (base, n) = match (cut, marker) {
            (Cut::Principal { q, side }, 'i') => {
                let n = if *side == Side::Right { coeff } else { -coeff };
                let base = head - BigRational::from_integer(n.into()) * q;
                (GroupValue::rational(base), n)
            }
            (Cut::AboveAll, 'w') => (GroupValue::rational(head), coeff),
            (Cut::BelowAll, 'w') => (GroupValue::rational(head), -coeff),
            _ => return Err(bad()),
        };
        Ok(Value::augmented(base, n, cut.clone()))
    }
}

impl From<GroupValue> for Value {
    fn from(g: GroupValue) -> Self {
        Value::Plain(g)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
