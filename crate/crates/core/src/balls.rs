//! Ultrametric balls in a valued field and nests of them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ordered_group::GroupValue;
use crate::valued_field::{FieldElement, ValuedField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BallKind {
    Closed,
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    center: FieldElement,
    radius: GroupValue,
    kind: BallKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallRelation {
    Equal,
    /// The first ball is strictly contained in the second.
    SubsetStrict,
    SupersetStrict,
    Disjoint,
}

impl Ball {
    pub fn closed(center: FieldElement, radius: GroupValue) -> Ball {
        Ball { center, radius, kind: BallKind::Closed }
    }

    pub fn open(center: FieldElement, radius: GroupValue) -> Result<Ball> {
        if radius.is_infinite() {
            return Err(Error::Invalid("open balls need a finite radius".into()));
        }
        Ok(Ball { center, radius, kind: BallKind::Open })
    }

    pub fn new(center: FieldElement, radius: GroupValue, kind: BallKind) -> Result<Ball> {
        match kind {
            BallKind::Closed => Ok(Ball::closed(center, radius)),
            BallKind::Open => Ball::open(center, radius),
        }
    }

    pub fn center(&self) -> &FieldElement {
        &self.center
    }

    pub fn radius(&self) -> &GroupValue {
        &self.radius
    }

    pub fn kind(&self) -> BallKind {
        self.kind
    }

    /// Radius of the same set written as a closed ball; valid since the value group is ℤ.
    fn closed_radius(&self) -> GroupValue {
        match self.kind {
            BallKind::Closed => self.radius.clone(),
            BallKind::Open => self.radius.succ(),
        }
    }

    pub fn member(&self, field: &ValuedField, a: &FieldElement) -> bool {
        let v = field.value(&field.sub(a, &self.center));
        match self.kind {
            BallKind::Closed => v >= self.radius,
            BallKind::Open => v > self.radius,
        }
    }

    /// The same set with a different center, if `c` lies in it.
    pub fn recenter(&self, field: &ValuedField, c: &FieldElement) -> Option<Ball> {
        self.member(field, c).then(|| Ball { center: c.clone(), ..self.clone() })
    }

    pub fn parse(s: &str, field: &ValuedField) -> Result<Ball> {
        let s = s.trim();
        let (kind, rest) = if let Some(r) = s.strip_prefix("B°[").or_else(|| s.strip_prefix("Bo[")) {
            (BallKind::Open, r)
        } else if let Some(r) = s.strip_prefix("B[") {
            (BallKind::Closed, r)
        } else {
            return Err(Error::Parse(format!("not a ball literal: {s:?}")));
        };
        let (radius, center) = rest
            .split_once("](")
            .and_then(|(r, c)| Some((r, c.strip_suffix(')')?)))
            .ok_or_else(|| Error::Parse(format!("not a ball literal: {s:?}")))?;
        let radius: GroupValue = radius.trim().parse()?;
        Ball::new(field.parse_element(center)?, radius, kind)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            BallKind::Closed => "B",
            BallKind::Open => "B°",
        };
        write!(f, "{tag}[{}]({})", self.radius, self.center)
    }
}

pub fn compare_balls(field: &ValuedField, a: &Ball, b: &Ball) -> BallRelation {
    let (ra, rb) = (a.closed_radius(), b.closed_radius());
    match ra.cmp(&rb) {
        Ordering::Equal if a.member(field, &b.center) => BallRelation::Equal,
        Ordering::Less if a.member(field, &b.center) => BallRelation::SupersetStrict,
        Ordering::Greater if b.member(field, &a.center) => BallRelation::SubsetStrict,
        _ => BallRelation::Disjoint,
    }
}

/// Balls totally ordered by inclusion, largest first. Only generating balls
/// are stored; larger balls of the full nest come from [`Nest::ball_at`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Nest {
    balls: Vec<Ball>,
}

impl Nest {
    pub fn new() -> Nest {
        Nest::default()
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    pub fn insert(&self, field: &ValuedField, ball: Ball) -> Result<Nest> {
        let mut pos = self.balls.len();
        for (i, b) in self.balls.iter().enumerate() {
            match compare_balls(field, &ball, b) {
                BallRelation::Disjoint => return Err(Error::NotComparable),
                BallRelation::Equal if b.radius == ball.radius && b.kind == ball.kind => return Ok(self.clone()),
                _ => {}
            }
            let key = |x: &Ball| (x.closed_radius(), x.radius.clone());
            if pos == self.balls.len() && key(&ball) < key(b) {
                pos = i;
            }
        }
        let mut balls = self.balls.clone();
        balls.insert(pos, ball);
        Ok(Nest { balls })
    }

    /// The ball of the full nest with the given radius and kind, if the nest reaches it.
    pub fn ball_at(&self, radius: &GroupValue, kind: BallKind) -> Result<Option<Ball>> {
        let need = match kind {
            BallKind::Closed => radius.clone(),
            BallKind::Open if radius.is_infinite() => {
                return Err(Error::Invalid("open balls need a finite radius".into()))
            }
            BallKind::Open => radius.succ(),
        };
        Ok(self
            .balls
            .iter()
            .find(|b| b.closed_radius() >= need)
            .map(|b| Ball { center: b.center.clone(), radius: radius.clone(), kind }))
    }
}
