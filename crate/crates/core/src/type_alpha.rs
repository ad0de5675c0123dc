//! Representations of type α: finitely many breakpoint intervals plus, on
//! every open segment `(a_j, a_{j+1})`, one uniform two-member family of
//! intervals with one generic end `x` and the other end anchored at a
//! breakpoint.
//!
//! Statements quantified over every `x` in a segment are decided on finite
//! sampled models. Compatibility only sees the order pattern of endpoints and
//! their boundary kinds, so a grid that realizes every pattern decides the
//! continuum statement exactly.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finite::{compat_masks, maximal_compatible_sets, members};
use crate::interval::{compatible, BoundaryKind, Interval, IntervalError, Point, Rational};

/// Default cap on the segment count for [`enumerate_type_alpha`].
pub const DEFAULT_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TypeAlphaError {
    #[error("breakpoints must start at 0, end at 1 and increase strictly")]
    BadAlpha,
    #[error("DuplicateSummand({0})")]
    DuplicateSummand(String),
    #[error("BadAnchorRange(segment {segment}, anchor {anchor})")]
    BadAnchorRange { segment: usize, anchor: usize },
    #[error("MissingFamily({0})")]
    MissingFamily(usize),
    #[error("DuplicateFamily({0})")]
    DuplicateFamily(usize),
    #[error("SegmentOutOfRange({0})")]
    SegmentOutOfRange(usize),
    #[error("BreakpointOutOfRange({0})")]
    BreakpointOutOfRange(usize),
    #[error("InvalidSummand: {0}")]
    InvalidSummand(IntervalError),
    #[error("point {0} is not generic")]
    NotGeneric(String),
    #[error("NotRigid: maximality is only defined for rigid representations")]
    NotRigid,
    #[error("resource limit exceeded: n = {n} is above the cap {cap}")]
    ResourceLimit { n: usize, cap: usize },
}

/// Breakpoints `0 = a_0 < a_1 < ... < a_n = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alpha {
    breakpoints: Vec<Rational>,
}

impl Alpha {
    pub fn new(breakpoints: Vec<Rational>) -> Result<Alpha, TypeAlphaError> {
        let ok = breakpoints.len() >= 2
            && breakpoints[0].is_zero()
            && breakpoints[breakpoints.len() - 1].is_one()
            && breakpoints.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(Alpha { breakpoints })
        } else {
            Err(TypeAlphaError::BadAlpha)
        }
    }

    /// `a_i = i/n`.
    pub fn uniform(n: usize) -> Alpha {
        assert!(n >= 1);
        Alpha { breakpoints: (0..=n).map(|i| Ratio::new(i as i64, n as i64)).collect() }
    }

    /// Number of segments.
    pub fn n(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }
}

/// A summand `T_{|a_lo, a_hi|}` with both ends at breakpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BreakSummand {
    pub lo: usize,
    pub lo_kind: BoundaryKind,
    pub hi: usize,
    pub hi_kind: BoundaryKind,
}

impl BreakSummand {
    pub fn new(lo: usize, lo_kind: BoundaryKind, hi: usize, hi_kind: BoundaryKind) -> BreakSummand {
        BreakSummand { lo, lo_kind, hi, hi_kind }
    }

    pub fn interval(&self) -> Result<Interval, IntervalError> {
        Interval::new(Point::Breakpoint(self.lo), self.lo_kind, Point::Breakpoint(self.hi), self.hi_kind)
    }

    /// Every valid breakpoint summand for `n` segments, in canonical order.
    pub fn all(n: usize) -> Vec<BreakSummand> {
        let mut out = Vec::new();
        for lo in 0..=n {
            for lo_kind in BoundaryKind::ALL {
                for hi in lo..=n {
                    for hi_kind in BoundaryKind::ALL {
                        let s = BreakSummand { lo, lo_kind, hi, hi_kind };
                        if s.interval().is_ok() {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BreakSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_kind.is_open() { '(' } else { '[' };
        let close = if self.hi_kind.is_open() { ')' } else { ']' };
        write!(f, "{open}a{},a{}{close}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// The family on one segment.
///
/// `Right` with anchor `s` is `{T_{[x,a_s|}, T_{(x,a_s|}}`; `Left` is
/// `{T_{|a_s,x]}, T_{|a_s,x)}}`; `anchor_kind` is the `|` at `a_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyChoice {
    pub segment: usize,
    pub side: Side,
    pub anchor: usize,
    pub anchor_kind: BoundaryKind,
}

impl FamilyChoice {
    pub fn new(segment: usize, side: Side, anchor: usize, anchor_kind: BoundaryKind) -> FamilyChoice {
        FamilyChoice { segment, side, anchor, anchor_kind }
    }

    pub fn anchor_in_range(&self) -> bool {
        match self.side {
            Side::Right => self.anchor > self.segment,
            Side::Left => self.anchor <= self.segment,
        }
    }

    /// All in-range families on `segment` for `n` segments.
    pub fn choices(n: usize, segment: usize) -> Vec<FamilyChoice> {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            for anchor in 0..=n {
                for anchor_kind in BoundaryKind::ALL {
                    let f = FamilyChoice { segment, side, anchor, anchor_kind };
                    if f.anchor_in_range() {
                        out.push(f);
                    }
                }
            }
        }
        out
    }

    /// The two members at `x`, unvalidated.
    pub fn members_at(&self, x: Point) -> [Interval; 2] {
        use BoundaryKind::{Closed, Open};
        let a = Point::Breakpoint(self.anchor);
        let k = self.anchor_kind;
        match self.side {
            Side::Right => [
                Interval { lo: x, lo_kind: Closed, hi: a, hi_kind: k },
                Interval { lo: x, lo_kind: Open, hi: a, hi_kind: k },
            ],
            Side::Left => [
                Interval { lo: a, lo_kind: k, hi: x, hi_kind: Closed },
                Interval { lo: a, lo_kind: k, hi: x, hi_kind: Open },
            ],
        }
    }

    /// Whether `iv` is a member of this family at some `x` of its segment.
    pub fn has_member(&self, iv: &Interval) -> bool {
        let in_segment = |p: &Point| matches!(p, Point::Generic(j, _) if *j == self.segment);
        let a = Point::Breakpoint(self.anchor);
        match self.side {
            Side::Right => in_segment(&iv.lo) && iv.hi == a && iv.hi_kind == self.anchor_kind,
            Side::Left => in_segment(&iv.hi) && iv.lo == a && iv.lo_kind == self.anchor_kind,
        }
    }

    /// Compact rendering, e.g. `[x,a1],(x,a1]@seg0`.
    pub fn notation(&self) -> String {
        let a = format!("a{}", self.anchor);
        let s = match (self.side, self.anchor_kind) {
            (Side::Right, BoundaryKind::Closed) => format!("[x,{a}],(x,{a}]"),
            (Side::Right, BoundaryKind::Open) => format!("[x,{a}),(x,{a})"),
            (Side::Left, BoundaryKind::Closed) => format!("[{a},x],[{a},x)"),
            (Side::Left, BoundaryKind::Open) => format!("({a},x],({a},x)"),
        };
        format!("{s}@seg{}", self.segment)
    }
}

/// Finite encoding of a type-α representation.
///
/// The vectors are stored as given so that malformed inputs can be
/// represented and rejected; [`validate_rep`] checks the invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeAlphaRep {
    pub alpha: Alpha,
    pub t_part: Vec<BreakSummand>,
    pub families: Vec<FamilyChoice>,
}

impl TypeAlphaRep {
    pub fn new(alpha: Alpha, t_part: Vec<BreakSummand>, families: Vec<FamilyChoice>) -> TypeAlphaRep {
        TypeAlphaRep { alpha, t_part, families }
    }

    pub fn n(&self) -> usize {
        self.alpha.n()
    }

    /// The family on `segment`, if exactly one is present.
    pub fn family(&self, segment: usize) -> Option<&FamilyChoice> {
        let mut it = self.families.iter().filter(|f| f.segment == segment);
        match (it.next(), it.next()) {
            (Some(f), None) => Some(f),
            _ => None,
        }
    }

    /// Whether the indecomposable `iv` is a summand.
    pub fn contains_summand(&self, iv: &Interval) -> bool {
        if iv.lo.is_breakpoint() && iv.hi.is_breakpoint() {
            self.t_part.iter().any(|s| s.interval().ok().as_ref() == Some(iv))
        } else {
            self.families.iter().any(|f| f.has_member(iv))
        }
    }

    /// One-line rendering: t-part summands, then the families.
    pub fn notation(&self) -> String {
        let t: Vec<String> = self.t_part.iter().map(|s| s.to_string()).collect();
        let f: Vec<String> = self.families.iter().map(|f| f.notation()).collect();
        format!("{} | {}", t.join(" "), f.join(" "))
    }
}

impl Ord for TypeAlphaRep {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.alpha, &self.t_part, &self.families).cmp(&(&other.alpha, &other.t_part, &other.families))
    }
}

impl PartialOrd for TypeAlphaRep {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub fn validate_rep(r: &TypeAlphaRep) -> Result<(), TypeAlphaError> {
    let n = r.n();
    let mut seen = BTreeSet::new();
    for s in &r.t_part {
        for idx in [s.lo, s.hi] {
            if idx > n {
                return Err(TypeAlphaError::BreakpointOutOfRange(idx));
            }
        }
        s.interval().map_err(TypeAlphaError::InvalidSummand)?;
        if !seen.insert(*s) {
            return Err(TypeAlphaError::DuplicateSummand(s.to_string()));
        }
    }
    let mut counts = vec![0usize; n];
    for f in &r.families {
        if f.segment >= n {
            return Err(TypeAlphaError::SegmentOutOfRange(f.segment));
        }
        if f.anchor > n || !f.anchor_in_range() {
            return Err(TypeAlphaError::BadAnchorRange { segment: f.segment, anchor: f.anchor });
        }
        counts[f.segment] += 1;
    }
    for (segment, &c) in counts.iter().enumerate() {
        match c {
            0 => return Err(TypeAlphaError::MissingFamily(segment)),
            1 => {}
            _ => return Err(TypeAlphaError::DuplicateFamily(segment)),
        }
    }
    Ok(())
}

/// Sorted t-part and families; equal outputs iff isomorphic representations.
pub fn canonicalize(r: &TypeAlphaRep) -> TypeAlphaRep {
    let mut out = r.clone();
    out.t_part.sort();
    out.families.sort();
    out
}

/// A finite set of intervals standing in for a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledModel {
    pub intervals: Vec<Interval>,
}

/// The `k` sample points `i/(k+1)` of `segment`.
pub fn sample_points(segment: usize, k: usize) -> Vec<Point> {
    (1..=k).map(|i| Point::Generic(segment, Ratio::new(i as i64, k as i64 + 1))).collect()
}

/// The t-part plus both family members at `k` evenly spaced points of each
/// segment; `|t_part| + 2kn` intervals for a valid rep.
pub fn instantiate_samples(r: &TypeAlphaRep, k: usize) -> SampledModel {
    let mut intervals: Vec<Interval> = r.t_part.iter().filter_map(|s| s.interval().ok()).collect();
    for f in &r.families {
        for x in sample_points(f.segment, k) {
            intervals.extend(f.members_at(x));
        }
    }
    SampledModel { intervals }
}

/// The eight sets `φ_1^r .. φ_4^r, φ_1^l .. φ_4^l` at a generic point.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PhiProfile {
    /// Far ends `d >= a_{s+1}` of `[c,d]`, `[c,d)`, `(c,d]`, `(c,d)`.
    pub right: [BTreeSet<Point>; 4],
    /// Far ends `d <= a_s` of `[d,c]`, `(d,c]`, `[d,c)`, `(d,c)`.
    pub left: [BTreeSet<Point>; 4],
}

impl PhiProfile {
    fn all_sets(&self) -> impl Iterator<Item = &BTreeSet<Point>> {
        self.right.iter().chain(self.left.iter())
    }

    pub fn is_empty(&self) -> bool {
        self.all_sets().all(|s| s.is_empty())
    }
}

/// Reads the φ-sets at `c` off the intervals of `model`.
pub fn phi_profile(model: &SampledModel, c: Point, alpha: &Alpha) -> Result<PhiProfile, TypeAlphaError> {
    use BoundaryKind::{Closed, Open};
    let s = match c {
        Point::Generic(s, _) if s < alpha.n() => s,
        _ => return Err(TypeAlphaError::NotGeneric(c.to_string())),
    };
    let right_slot = |lo: BoundaryKind, hi: BoundaryKind| match (lo, hi) {
        (Closed, Closed) => 0,
        (Closed, Open) => 1,
        (Open, Closed) => 2,
        (Open, Open) => 3,
    };
    let left_slot = |lo: BoundaryKind, hi: BoundaryKind| match (lo, hi) {
        (Closed, Closed) => 0,
        (Open, Closed) => 1,
        (Closed, Open) => 2,
        (Open, Open) => 3,
    };
    let mut p = PhiProfile::default();
    for iv in &model.intervals {
        if iv.lo == c && iv.hi >= Point::Breakpoint(s + 1) {
            p.right[right_slot(iv.lo_kind, iv.hi_kind)].insert(iv.hi);
        }
        if iv.hi == c && iv.lo <= Point::Breakpoint(s) {
            p.left[left_slot(iv.lo_kind, iv.hi_kind)].insert(iv.lo);
        }
    }
    Ok(p)
}

fn profile_is_admissible(p: &PhiProfile) -> bool {
    let paired = p.right[0] == p.right[2]
        && p.right[1] == p.right[3]
        && p.left[0] == p.left[2]
        && p.left[1] == p.left[3];
    let at_breakpoints = p.all_sets().flatten().all(Point::is_breakpoint);
    let total = p.right[0].len() + p.right[1].len() + p.left[0].len() + p.left[1].len();
    paired && at_breakpoints && total == 1
}

fn within_unit_interval(iv: &Interval, n: usize) -> bool {
    let ok = |p: &Point| match *p {
        Point::Breakpoint(i) => i <= n,
        Point::Generic(j, _) => j < n,
    };
    ok(&iv.lo) && ok(&iv.hi) && crate::interval::validate_interval(iv).is_ok()
}

/// The literal type-α test evaluated on a sampled model: pairing equalities
/// and unit total cardinality at every sample point, and equal profiles
/// across the samples of a segment. Works on malformed encodings too.
pub fn is_type_alpha(r: &TypeAlphaRep) -> bool {
    let n = r.n();
    if r.t_part.iter().any(|s| s.interval().is_err() || s.hi > n) {
        return false;
    }
    let k = 3;
    let model = instantiate_samples(r, k);
    if !model.intervals.iter().all(|iv| within_unit_interval(iv, n)) {
        return false;
    }
    (0..n).all(|segment| {
        let profiles: Vec<PhiProfile> = sample_points(segment, k)
            .into_iter()
            .map(|c| phi_profile(&model, c, &r.alpha).expect("sample points are generic"))
            .collect();
        profiles.iter().all(profile_is_admissible) && profiles.windows(2).all(|w| w[0] == w[1])
    })
}

fn pairwise_compatible(intervals: &[Interval]) -> bool {
    intervals
        .iter()
        .enumerate()
        .all(|(i, x)| intervals[i + 1..].iter().all(|y| compatible(x, y)))
}

/// Rigidity via pairwise compatibility on the two-sample model.
///
/// Two samples per segment already realize every order pattern between
/// family members (`x < y`, `x = y`, `x > y`).
pub fn is_rigid_cont(r: &TypeAlphaRep) -> bool {
    pairwise_compatible(&instantiate_samples(r, 2).intervals)
}

/// Candidate placement for the maximality sweep.
///
/// Families are instantiated at `witness_samples` evenly spaced points per
/// segment. Candidates with one generic end in a segment put it at
/// `single`; candidates with both ends in one segment use `pair`. All of
/// these must be witness points with witnesses strictly below, between and
/// above, so that every order pattern against the family is realized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub witness_samples: usize,
    pub single: Rational,
    pub pair: (Rational, Rational),
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            witness_samples: 5,
            single: Ratio::new(1, 2),
            pair: (Ratio::new(1, 3), Ratio::new(2, 3)),
        }
    }
}

impl SweepConfig {
    fn check(&self) {
        let grid: Vec<Rational> = (1..=self.witness_samples)
            .map(|i| Ratio::new(i as i64, self.witness_samples as i64 + 1))
            .collect();
        let inner = |x: &Rational| grid.contains(x) && grid[0] < *x && *x < grid[grid.len() - 1];
        assert!(inner(&self.single), "single candidate position must be an inner witness point");
        let (p, q) = self.pair;
        assert!(inner(&p) && inner(&q) && p < q, "pair candidate positions must be inner witness points");
        assert!(grid.iter().any(|g| p < *g && *g < q), "a witness must sit between the pair positions");
    }
}

/// Every candidate indecomposable the maximality sweep tries, over `n`
/// segments, without regard to any representation.
pub fn maximality_candidates(n: usize, cfg: &SweepConfig) -> Vec<Interval> {
    let mut out: Vec<Interval> = BreakSummand::all(n).iter().filter_map(|s| s.interval().ok()).collect();
    let push = |out: &mut Vec<Interval>, lo: Point, hi: Point| {
        for lo_kind in BoundaryKind::ALL {
            for hi_kind in BoundaryKind::ALL {
                if let Ok(iv) = Interval::new(lo, lo_kind, hi, hi_kind) {
                    out.push(iv);
                }
            }
        }
    };
    for j in 0..n {
        let x = Point::Generic(j, cfg.single);
        for s in 0..=n {
            let a = Point::Breakpoint(s);
            if s > j {
                push(&mut out, x, a);
            } else {
                push(&mut out, a, x);
            }
        }
        // generic point module
        out.push(Interval { lo: x, lo_kind: BoundaryKind::Closed, hi: x, hi_kind: BoundaryKind::Closed });
        push(&mut out, Point::Generic(j, cfg.pair.0), Point::Generic(j, cfg.pair.1));
        for j2 in j + 1..n {
            push(&mut out, x, Point::Generic(j2, cfg.single));
        }
    }
    out
}

/// Indecomposables outside `add(R)` that are compatible with every summand
/// of `R`; empty iff `R` is maximal rigid.
pub fn addable_summands(r: &TypeAlphaRep, cfg: &SweepConfig) -> Vec<Interval> {
    cfg.check();
    let witness = instantiate_samples(r, cfg.witness_samples).intervals;
    maximality_candidates(r.n(), cfg)
        .into_iter()
        .filter(|c| !r.contains_summand(c))
        .filter(|c| witness.iter().all(|w| compatible(c, w)))
        .collect()
}

pub fn is_maximal_rigid_cont(r: &TypeAlphaRep) -> Result<bool, TypeAlphaError> {
    is_maximal_rigid_cont_with(r, &SweepConfig::default())
}

pub fn is_maximal_rigid_cont_with(r: &TypeAlphaRep, cfg: &SweepConfig) -> Result<bool, TypeAlphaError> {
    if !is_rigid_cont(r) {
        return Err(TypeAlphaError::NotRigid);
    }
    Ok(addable_summands(r, cfg).is_empty())
}

pub fn enumerate_type_alpha(alpha: &Alpha) -> Result<Vec<TypeAlphaRep>, TypeAlphaError> {
    enumerate_type_alpha_capped(alpha, DEFAULT_MAX_N)
}

/// All maximal rigid type-α representations over `alpha`, canonical and
/// sorted.
///
/// For each assignment of one family per segment, the breakpoint summands
/// compatible with the families are collected; every maximal compatible
/// subset of them is a t-part candidate, kept if the full sweep (generic
/// candidates included) finds nothing addable.
pub fn enumerate_type_alpha_capped(alpha: &Alpha, max_n: usize) -> Result<Vec<TypeAlphaRep>, TypeAlphaError> {
    let n = alpha.n();
    if n > max_n {
        return Err(TypeAlphaError::ResourceLimit { n, cap: max_n });
    }
    let per_segment: Vec<Vec<FamilyChoice>> = (0..n).map(|j| FamilyChoice::choices(n, j)).collect();
    let total: usize = per_segment.iter().map(Vec::len).product();
    let summands = BreakSummand::all(n);
    let cfg = SweepConfig::default();

    let mut out: Vec<TypeAlphaRep> = (0..total)
        .into_par_iter()
        .flat_map_iter(|code| {
            let families = decode_assignment(code, &per_segment);
            t_parts_for(alpha, &families, &summands)
                .into_iter()
                .map(move |t_part| TypeAlphaRep::new(alpha.clone(), t_part, families.clone()))
                .filter(|r| addable_summands(r, &cfg).is_empty())
                .map(|r| canonicalize(&r))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    Ok(out)
}

fn decode_assignment(mut code: usize, per_segment: &[Vec<FamilyChoice>]) -> Vec<FamilyChoice> {
    per_segment
        .iter()
        .map(|choices| {
            let f = choices[code % choices.len()];
            code /= choices.len();
            f
        })
        .collect()
}

/// Maximal sets of breakpoint summands compatible with each other and with
/// the given families; empty when the families conflict among themselves.
fn t_parts_for(alpha: &Alpha, families: &[FamilyChoice], summands: &[BreakSummand]) -> Vec<Vec<BreakSummand>> {
    let bare = TypeAlphaRep::new(alpha.clone(), Vec::new(), families.to_vec());
    let family_model = instantiate_samples(&bare, 2).intervals;
    if !pairwise_compatible(&family_model) {
        return Vec::new();
    }
    let allowed: Vec<(BreakSummand, Interval)> = summands
        .iter()
        .map(|s| (*s, s.interval().expect("BreakSummand::all yields valid intervals")))
        .filter(|(_, iv)| family_model.iter().all(|w| compatible(iv, w)))
        .collect();
    let compat = compat_masks(&allowed, |x, y| compatible(&x.1, &y.1));
    let items: Vec<BreakSummand> = allowed.iter().map(|(s, _)| *s).collect();
    maximal_compatible_sets(&compat)
        .into_iter()
        .map(|mask| members(mask, &items))
        .collect()
}
