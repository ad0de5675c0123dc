//! The passage from continuous representations to finite linear quivers.
//!
//! `tau1` sends breakpoint summands to the `3n+1`-vertex quiver
//! `a_0, a_0^+, a_1^-, a_1, a_1^+, ..., a_n^-, a_n` (an open end at `a_i`
//! becomes the neighbouring `±` vertex) and kills summands with a generic end.
//! `tau2` collapses each pair `a_i^+, a_{i+1}^-` to the midpoint vertex
//! `a_{i,i+1}` of the `2n+1`-vertex quiver. Their composite `phi` carries
//! maximal rigid type-α representations onto maximal rigid sets with fibers of
//! size `2^n`; [`fiber_expand`] rebuilds a fiber from its image.

use rayon::prelude::*;
use thiserror::Error;

use crate::finite::{
    enumerate_maximal_rigid_finite, ext_dim, is_maximal_rigid_finite, FiniteError, FiniteInterval,
    LinearQuiver,
};
use crate::interval::{compatible, BoundaryKind, Interval, Point};
use crate::type_alpha::{
    addable_summands, canonicalize, instantiate_samples, Alpha, BreakSummand, FamilyChoice, Side,
    SweepConfig, TypeAlphaRep,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("{0} starts at a minus vertex or ends at a plus vertex")]
    OutsideBTilde(FiniteInterval),
    #[error("generic point modules have no image")]
    GenericPointModule,
    #[error("no admissible anchor for the {side:?} family on segment {segment}")]
    NoAnchor { segment: usize, side: Side },
    #[error("{count} admissible anchors for the {side:?} family on segment {segment}")]
    AmbiguousAnchor { segment: usize, side: Side, count: usize },
    #[error("input set is not maximal rigid")]
    NotMaximal,
    #[error(transparent)]
    Finite(#[from] FiniteError),
}

fn labelled(labels: Vec<String>) -> LinearQuiver {
    LinearQuiver::with_labels(labels.len(), labels).expect("at least one vertex")
}

/// The quiver `a_0 -> a_0^+ -> a_1^- -> a_1 -> ... -> a_n^- -> a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TildeQuiver {
    n: usize,
    quiver: LinearQuiver,
}

impl TildeQuiver {
    pub fn new(n: usize) -> TildeQuiver {
        let mut labels = Vec::with_capacity(3 * n + 1);
        for i in 0..=n {
            if i > 0 {
                labels.push(format!("a{i}-"));
            }
            labels.push(format!("a{i}"));
            if i < n {
                labels.push(format!("a{i}+"));
            }
        }
        TildeQuiver { n, quiver: labelled(labels) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quiver(&self) -> &LinearQuiver {
        &self.quiver
    }

    pub fn breakpoint(&self, i: usize) -> usize {
        3 * i + 1
    }

    /// `a_i^+`, for `i < n`.
    pub fn plus(&self, i: usize) -> usize {
        3 * i + 2
    }

    /// `a_i^-`, for `i >= 1`.
    pub fn minus(&self, i: usize) -> usize {
        3 * i
    }

    fn is_plus(&self, v: usize) -> bool {
        v % 3 == 2
    }

    fn is_minus(&self, v: usize) -> bool {
        v.is_multiple_of(3)
    }

    /// Whether `iv` meets the endpoint restriction (no left end at a minus
    /// vertex, no right end at a plus vertex).
    pub fn admits(&self, iv: &FiniteInterval) -> bool {
        self.quiver.contains(iv) && !self.is_minus(iv.a) && !self.is_plus(iv.b)
    }
}

/// The quiver `a_0 -> a_{01} -> a_1 -> ... -> a_{n-1,n} -> a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HatQuiver {
    n: usize,
    quiver: LinearQuiver,
}

impl HatQuiver {
    pub fn new(n: usize) -> HatQuiver {
        let mut labels = Vec::with_capacity(2 * n + 1);
        for i in 0..=n {
            labels.push(format!("a{i}"));
            if i < n {
                labels.push(format!("a{i}{}", i + 1));
            }
        }
        HatQuiver { n, quiver: labelled(labels) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quiver(&self) -> &LinearQuiver {
        &self.quiver
    }

    pub fn breakpoint(&self, i: usize) -> usize {
        2 * i + 1
    }

    /// The midpoint `a_{i,i+1}`.
    pub fn mid(&self, i: usize) -> usize {
        2 * i + 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TildeRep {
    pub quiver: TildeQuiver,
    pub summands: Vec<FiniteInterval>,
}

impl TildeRep {
    pub fn new(quiver: TildeQuiver, mut summands: Vec<FiniteInterval>) -> Result<TildeRep, CorrespondenceError> {
        if let Some(bad) = summands.iter().find(|s| !quiver.admits(s)) {
            return Err(CorrespondenceError::OutsideBTilde(*bad));
        }
        summands.sort();
        Ok(TildeRep { quiver, summands })
    }
}

/// Image of one breakpoint summand on the tilde quiver.
pub fn tau1_summand(q: &TildeQuiver, s: &BreakSummand) -> FiniteInterval {
    let a = match s.lo_kind {
        BoundaryKind::Closed => q.breakpoint(s.lo),
        BoundaryKind::Open => q.plus(s.lo),
    };
    let b = match s.hi_kind {
        BoundaryKind::Closed => q.breakpoint(s.hi),
        BoundaryKind::Open => q.minus(s.hi),
    };
    FiniteInterval::new(a, b)
}

/// Image of an arbitrary indecomposable: `None` when an end is generic.
pub fn tau1_interval(q: &TildeQuiver, iv: &Interval) -> Result<Option<FiniteInterval>, CorrespondenceError> {
    match (iv.lo, iv.hi) {
        (Point::Breakpoint(lo), Point::Breakpoint(hi)) => {
            Ok(Some(tau1_summand(q, &BreakSummand::new(lo, iv.lo_kind, hi, iv.hi_kind))))
        }
        _ if iv.is_point() => Err(CorrespondenceError::GenericPointModule),
        _ => Ok(None),
    }
}

/// Inverse of [`tau1_summand`] on the admissible intervals.
pub fn tau1_inv_summand(q: &TildeQuiver, iv: &FiniteInterval) -> Result<BreakSummand, CorrespondenceError> {
    if !q.admits(iv) {
        return Err(CorrespondenceError::OutsideBTilde(*iv));
    }
    let (lo, lo_kind) = if q.is_plus(iv.a) {
        ((iv.a - 2) / 3, BoundaryKind::Open)
    } else {
        ((iv.a - 1) / 3, BoundaryKind::Closed)
    };
    let (hi, hi_kind) = if q.is_minus(iv.b) {
        (iv.b / 3, BoundaryKind::Open)
    } else {
        ((iv.b - 1) / 3, BoundaryKind::Closed)
    };
    Ok(BreakSummand::new(lo, lo_kind, hi, hi_kind))
}

/// The t-part's image; families contribute nothing.
pub fn tau1(r: &TypeAlphaRep) -> TildeRep {
    let q = TildeQuiver::new(r.n());
    let summands = r.t_part.iter().map(|s| tau1_summand(&q, s)).collect();
    TildeRep::new(q, summands).expect("images of breakpoint summands are admissible")
}

fn tau2_vertex(v: usize) -> usize {
    // a_i = 3i+1 -> 2i+1, a_i^+ = 3i+2 -> 2i+2, a_i^- = 3i -> 2i
    match v % 3 {
        1 => 2 * (v / 3) + 1,
        2 => 2 * (v / 3) + 2,
        _ => 2 * (v / 3),
    }
}

pub fn tau2_interval(q: &TildeQuiver, iv: &FiniteInterval) -> Result<FiniteInterval, CorrespondenceError> {
    if !q.admits(iv) {
        return Err(CorrespondenceError::OutsideBTilde(*iv));
    }
    Ok(FiniteInterval::new(tau2_vertex(iv.a), tau2_vertex(iv.b)))
}

pub fn tau2(t: &TildeRep) -> Result<Vec<FiniteInterval>, CorrespondenceError> {
    let mut out = t
        .summands
        .iter()
        .map(|s| tau2_interval(&t.quiver, s))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

/// Inverse of [`tau2`]: a midpoint on the left end becomes `a_i^+`, on the
/// right end `a_{i+1}^-`.
pub fn tau2_inv_interval(h: &HatQuiver, iv: &FiniteInterval) -> Result<FiniteInterval, CorrespondenceError> {
    if !h.quiver().contains(iv) {
        return Err(FiniteError::OutOfRange { interval: *iv, m: h.quiver().vertex_count() }.into());
    }
    let a = if iv.a % 2 == 1 { 3 * (iv.a / 2) + 1 } else { 3 * (iv.a / 2 - 1) + 2 };
    let b = if iv.b % 2 == 1 { 3 * (iv.b / 2) + 1 } else { 3 * (iv.b / 2) };
    Ok(FiniteInterval::new(a, b))
}

pub fn tau2_inv(h: &HatQuiver, set: &[FiniteInterval]) -> Result<TildeRep, CorrespondenceError> {
    let summands = set.iter().map(|s| tau2_inv_interval(h, s)).collect::<Result<Vec<_>, _>>()?;
    TildeRep::new(TildeQuiver::new(h.n()), summands)
}

/// `phi = tau2 . tau1`, sorted.
pub fn phi(r: &TypeAlphaRep) -> Vec<FiniteInterval> {
    phi_t_part(r.n(), &r.t_part)
}

/// `phi` of a plain direct sum of breakpoint summands.
pub fn phi_t_part(n: usize, t_part: &[BreakSummand]) -> Vec<FiniteInterval> {
    let q = TildeQuiver::new(n);
    let mut out: Vec<FiniteInterval> = t_part
        .iter()
        .map(|s| tau2_interval(&q, &tau1_summand(&q, s)).expect("tau1 images are admissible"))
        .collect();
    out.sort();
    out
}

/// Breakpoint summands whose `phi`-images are `set`.
pub fn pullback(h: &HatQuiver, set: &[FiniteInterval]) -> Result<Vec<BreakSummand>, CorrespondenceError> {
    let tilde = tau2_inv(h, set)?;
    let mut out = tilde
        .summands
        .iter()
        .map(|s| tau1_inv_summand(&tilde.quiver, s))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

/// The anchor of the `side` family on `segment` over a pulled-back t-part.
///
/// Candidates are the in-range anchors whose family is compatible with the
/// t-part. Should several survive, those to which another survivor could
/// still be added are discarded. Anything other than exactly one survivor is
/// reported as an error.
pub fn anchor_for(
    n: usize,
    segment: usize,
    side: Side,
    t_part: &[BreakSummand],
) -> Result<(usize, BoundaryKind), CorrespondenceError> {
    let t: Vec<Interval> = t_part
        .iter()
        .map(|s| s.interval().expect("pulled-back summands are valid"))
        .collect();
    let alpha = Alpha::uniform(n);
    let family_ok = |f: &FamilyChoice| {
        let bare = TypeAlphaRep::new(alpha.clone(), Vec::new(), vec![*f]);
        instantiate_samples(&bare, 2)
            .intervals
            .iter()
            .all(|m| t.iter().all(|x| compatible(m, x)))
    };
    let mut survivors: Vec<FamilyChoice> = FamilyChoice::choices(n, segment)
        .into_iter()
        .filter(|f| f.side == side)
        .filter(family_ok)
        .collect();
    if survivors.len() > 1 {
        let cfg = SweepConfig::default();
        let x = Point::Generic(segment, cfg.single);
        let snapshot = survivors.clone();
        survivors.retain(|f| {
            let local = TypeAlphaRep::new(alpha.clone(), t_part.to_vec(), vec![*f]);
            let witness = instantiate_samples(&local, cfg.witness_samples).intervals;
            !snapshot.iter().filter(|g| *g != f).any(|g| {
                g.members_at(x).iter().all(|m| witness.iter().all(|w| compatible(m, w)))
            })
        });
    }
    match survivors.as_slice() {
        [f] => Ok((f.anchor, f.anchor_kind)),
        [] => Err(CorrespondenceError::NoAnchor { segment, side }),
        many => Err(CorrespondenceError::AmbiguousAnchor { segment, side, count: many.len() }),
    }
}

/// The `2^n` type-α representations over a maximal rigid set of the hat
/// quiver, one per left/right choice on each segment, canonical and sorted.
pub fn fiber_expand(alpha: &Alpha, hat_set: &[FiniteInterval]) -> Result<Vec<TypeAlphaRep>, CorrespondenceError> {
    let n = alpha.n();
    let h = HatQuiver::new(n);
    if !is_maximal_rigid_finite(h.quiver(), hat_set)? {
        return Err(CorrespondenceError::NotMaximal);
    }
    let t_part = pullback(&h, hat_set)?;
    let mut anchors = Vec::with_capacity(n);
    for segment in 0..n {
        let left = anchor_for(n, segment, Side::Left, &t_part)?;
        let right = anchor_for(n, segment, Side::Right, &t_part)?;
        anchors.push([(Side::Left, left), (Side::Right, right)]);
    }
    let mut out: Vec<TypeAlphaRep> = (0..1usize << n)
        .map(|sides| {
            let families = anchors
                .iter()
                .enumerate()
                .map(|(segment, pair)| {
                    let (side, (anchor, kind)) = pair[(sides >> segment) & 1];
                    FamilyChoice::new(segment, side, anchor, kind)
                })
                .collect();
            canonicalize(&TypeAlphaRep::new(alpha.clone(), t_part.clone(), families))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All maximal rigid type-α representations, obtained by expanding the fiber
/// over every maximal rigid set of the hat quiver.
pub fn enumerate_by_fibers(alpha: &Alpha) -> Result<Vec<TypeAlphaRep>, CorrespondenceError> {
    let h = HatQuiver::new(alpha.n());
    let hats = enumerate_maximal_rigid_finite(h.quiver())?;
    let fibers = hats
        .par_iter()
        .map(|set| fiber_expand(alpha, &set.summands))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out: Vec<TypeAlphaRep> = fibers.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

/// Whether the fiber is consistent: every member maximal rigid with image
/// `hat_set`.
pub fn fiber_is_sound(alpha: &Alpha, hat_set: &[FiniteInterval], fiber: &[TypeAlphaRep]) -> bool {
    let cfg = SweepConfig::default();
    fiber.len() == 1 << alpha.n()
        && fiber.iter().all(|r| {
            crate::type_alpha::is_rigid_cont(r) && addable_summands(r, &cfg).is_empty() && phi(r) == hat_set
        })
}

/// Independent Ext test for a pair of intervals.
///
/// The distinct endpoints `p_0 < ... < p_{k-1}` become the linear quiver
/// `p_0^- -> p_0 -> p_0^+ -> p_1^- -> ...`; an open left end at `p` moves to
/// `p^+`, an open right end to `p^-`. Returns whether `Ext^1` vanishes in
/// both directions there.
pub fn discretize_pair_ext(i: &Interval, j: &Interval) -> bool {
    let mut points = vec![i.lo, i.hi, j.lo, j.hi];
    points.sort();
    points.dedup();
    let q = LinearQuiver::new(3 * points.len()).expect("nonempty");
    let vertex = |p: &Point| 3 * points.iter().position(|x| x == p).expect("collected") + 2;
    let discretize = |iv: &Interval| {
        let a = vertex(&iv.lo) + usize::from(iv.lo_kind.is_open());
        let b = vertex(&iv.hi) - usize::from(iv.hi_kind.is_open());
        FiniteInterval::new(a, b)
    };
    let (di, dj) = (discretize(i), discretize(j));
    ext_dim(&q, &di, &dj).expect("in range") == 0 && ext_dim(&q, &dj, &di).expect("in range") == 0
}
