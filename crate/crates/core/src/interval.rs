//! Intervals with independently open or closed ends on an ordered point
//! domain, and the pairwise compatibility predicate that decides rigidity of a
//! direct sum of interval modules.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational used for offsets inside a segment.
pub type Rational = Ratio<i64>;

/// Whether an end of an interval belongs to it.
///
/// The derived order (`Closed < Open`) is the canonical sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryKind {
    Closed,
    Open,
}

impl BoundaryKind {
    pub const ALL: [BoundaryKind; 2] = [BoundaryKind::Closed, BoundaryKind::Open];

    pub fn is_open(self) -> bool {
        self == BoundaryKind::Open
    }
}

/// A point of `[0,1]` relative to a breakpoint sequence `a_0 < ... < a_n`.
///
/// `Breakpoint(i)` is `a_i`; `Generic(j, t)` is the point at relative offset
/// `t in (0,1)` inside the open segment `(a_j, a_{j+1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Breakpoint(usize),
    Generic(usize, Rational),
}

impl Point {
    /// Builds a generic point, checking that the offset lies strictly inside
    /// the segment.
    pub fn generic(segment: usize, offset: Rational) -> Result<Point, IntervalError> {
        if offset <= Rational::zero() || offset >= Rational::one() {
            return Err(IntervalError::OffsetOutOfRange(offset));
        }
        Ok(Point::Generic(segment, offset))
    }

    pub fn is_breakpoint(&self) -> bool {
        matches!(self, Point::Breakpoint(_))
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Point::Generic(..))
    }

    /// Sort key placing `a_i` at `2i` and the whole segment `(a_j, a_{j+1})`
    /// at `2j + 1`; ties inside a segment are broken by offset.
    fn coarse_rank(&self) -> usize {
        match *self {
            Point::Breakpoint(i) => 2 * i,
            Point::Generic(j, _) => 2 * j + 1,
        }
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Point::Generic(j, t), Point::Generic(k, u)) if j == k => t.cmp(u),
            _ => self.coarse_rank().cmp(&other.coarse_rank()),
        }
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Breakpoint(i) => write!(f, "a{i}"),
            Point::Generic(j, t) => write!(f, "x{j}:{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("EmptyInterval: {0} has equal endpoints with an open end")]
    EmptyInterval(Interval),
    #[error("InvertedInterval: upper endpoint of {0} precedes the lower one")]
    InvertedInterval(Interval),
    #[error("generic offset {0} is not strictly between 0 and 1")]
    OffsetOutOfRange(Rational),
}

/// The support `|lo, hi|` of an interval module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Point,
    pub lo_kind: BoundaryKind,
    pub hi: Point,
    pub hi_kind: BoundaryKind,
}

impl Interval {
    /// Validating constructor.
    pub fn new(
        lo: Point,
        lo_kind: BoundaryKind,
        hi: Point,
        hi_kind: BoundaryKind,
    ) -> Result<Interval, IntervalError> {
        let iv = Interval { lo, lo_kind, hi, hi_kind };
        validate_interval(&iv)?;
        Ok(iv)
    }

    pub fn closed(lo: Point, hi: Point) -> Result<Interval, IntervalError> {
        Interval::new(lo, BoundaryKind::Closed, hi, BoundaryKind::Closed)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// Whether the point `p` belongs to this interval.
    pub fn contains_point(&self, p: &Point) -> bool {
        let above_lo = match p.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => !self.lo_kind.is_open(),
            Ordering::Less => false,
        };
        let below_hi = match p.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => !self.hi_kind.is_open(),
            Ordering::Greater => false,
        };
        above_lo && below_hi
    }

    /// Set inclusion `self ⊆ other`; both intervals must be nonempty.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        let lo_ok = match other.lo.cmp(&self.lo) {
            Ordering::Less => true,
            Ordering::Equal => !other.lo_kind.is_open() || self.lo_kind.is_open(),
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp(&other.hi) {
            Ordering::Less => true,
            Ordering::Equal => !other.hi_kind.is_open() || self.hi_kind.is_open(),
            Ordering::Greater => false,
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_kind.is_open() { '(' } else { '[' };
        let close = if self.hi_kind.is_open() { ')' } else { ']' };
        write!(f, "{open}{},{}{close}", self.lo, self.hi)
    }
}

pub fn validate_interval(iv: &Interval) -> Result<(), IntervalError> {
    match iv.lo.cmp(&iv.hi) {
        Ordering::Less => Ok(()),
        Ordering::Equal if !iv.lo_kind.is_open() && !iv.hi_kind.is_open() => Ok(()),
        Ordering::Equal => Err(IntervalError::EmptyInterval(*iv)),
        Ordering::Greater => Err(IntervalError::InvertedInterval(*iv)),
    }
}

/// Whether the sum `T_I ⊕ T_J` has no self-extensions.
///
/// True when one interval contains the other, when they are strictly
/// separated, or when they touch at a single point at which the left interval
/// is open on the right and the right interval is open on the left.
/// Comparing an interval with itself returns `true` (it nests in itself).
pub fn compatible(i: &Interval, j: &Interval) -> bool {
    if i.is_subset_of(j) || j.is_subset_of(i) {
        return true;
    }
    if i.hi < j.lo || j.hi < i.lo {
        return true;
    }
    let touches = |left: &Interval, right: &Interval| {
        left.hi == right.lo && left.hi_kind.is_open() && right.lo_kind.is_open()
    };
    touches(i, j) || touches(j, i)
}

/// A random valid interval over `n` segments. Generic offsets use small
/// denominators so that coincident endpoints are common.
pub fn random_interval<R: rand::Rng + ?Sized>(rng: &mut R, n: usize) -> Interval {
    let point = |rng: &mut R| {
        if rng.gen_bool(0.4) {
            Point::Breakpoint(rng.gen_range(0..=n))
        } else {
            let den = rng.gen_range(2..=6);
            Point::Generic(rng.gen_range(0..n), Rational::new(rng.gen_range(1..den), den))
        }
    };
    loop {
        let (mut lo, mut hi) = (point(rng), point(rng));
        if hi < lo {
            std::mem::swap(&mut lo, &mut hi);
        }
        let kind = |rng: &mut R| if rng.gen_bool(0.5) { BoundaryKind::Open } else { BoundaryKind::Closed };
        let (lo_kind, hi_kind) = (kind(rng), kind(rng));
        if let Ok(iv) = Interval::new(lo, lo_kind, hi, hi_kind) {
            return iv;
        }
    }
}
