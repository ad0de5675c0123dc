//! Interval modules over the linearly oriented quiver `1 -> 2 -> ... -> m`.
//!
//! Hom and Ext dimensions between interval modules are pure combinatorics of
//! 0/1 dimension vectors and structure maps, so nothing here depends on the
//! ground field. Two routes are provided for each: an explicit computation
//! (commuting-scalar enumeration for Hom, the projective resolution
//! `0 -> P_{b+1} -> P_a -> T[a,b] -> 0` for Ext) and a closed form used by
//! the enumerators.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest quiver the bitmask enumerator can address (`m(m+1)/2 <= 128`).
pub const MAX_SUPPORTED_M: usize = 15;
/// Default resource cap for [`enumerate_maximal_rigid_finite`].
pub const DEFAULT_MAX_M: usize = 15;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("interval {interval} is not valid on a quiver with {m} vertices")]
    OutOfRange { interval: FiniteInterval, m: usize },
    #[error("quiver must have at least one vertex")]
    EmptyQuiver,
    #[error("resource limit exceeded: m = {m} is above the cap {cap}")]
    ResourceLimit { m: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearQuiver {
    m: usize,
    labels: Option<Vec<String>>,
}

impl LinearQuiver {
    pub fn new(m: usize) -> Result<LinearQuiver, FiniteError> {
        if m == 0 {
            return Err(FiniteError::EmptyQuiver);
        }
        Ok(LinearQuiver { m, labels: None })
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(m: usize, labels: Vec<String>) -> Result<LinearQuiver, FiniteError> {
        assert_eq!(labels.len(), m, "one label per vertex");
        let mut q = LinearQuiver::new(m)?;
        q.labels = Some(labels);
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    /// Label of vertex `v` (1-based); falls back to the index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v - 1].clone(),
            None => v.to_string(),
        }
    }

    pub fn contains(&self, iv: &FiniteInterval) -> bool {
        1 <= iv.a && iv.a <= iv.b && iv.b <= self.m
    }

    fn check(&self, iv: &FiniteInterval) -> Result<(), FiniteError> {
        if self.contains(iv) {
            Ok(())
        } else {
            Err(FiniteError::OutOfRange { interval: *iv, m: self.m })
        }
    }

    /// All intervals `[a,b]` in lexicographic order.
    pub fn intervals(&self) -> Vec<FiniteInterval> {
        (1..=self.m)
            .flat_map(|a| (a..=self.m).map(move |b| FiniteInterval { a, b }))
            .collect()
    }

    /// Renders an interval with vertex labels, e.g. `[a01,a1]`.
    pub fn show(&self, iv: &FiniteInterval) -> String {
        format!("[{},{}]", self.label(iv.a), self.label(iv.b))
    }
}

/// The interval module `T[a,b]`, vertices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FiniteInterval {
    pub a: usize,
    pub b: usize,
}

impl FiniteInterval {
    pub fn new(a: usize, b: usize) -> FiniteInterval {
        FiniteInterval { a, b }
    }

    fn dim_at(&self, v: usize) -> u8 {
        u8::from(self.a <= v && v <= self.b)
    }

    /// Structure map on the arrow `v -> v+1` as a 1x1 matrix (0 when either
    /// end is outside the support).
    fn map_at(&self, v: usize) -> u8 {
        self.dim_at(v) & self.dim_at(v + 1)
    }

    pub fn dimension_vector(&self, m: usize) -> Vec<u8> {
        (1..=m).map(|v| self.dim_at(v)).collect()
    }
}

impl fmt::Display for FiniteInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// `dim Hom(T_I, T_J)` by the closed form: 1 iff `c <= a <= d <= b`.
pub fn hom_dim(q: &LinearQuiver, i: &FiniteInterval, j: &FiniteInterval) -> Result<usize, FiniteError> {
    q.check(i)?;
    q.check(j)?;
    Ok(hom_closed(i, j))
}

fn hom_closed(i: &FiniteInterval, j: &FiniteInterval) -> usize {
    usize::from(j.a <= i.a && i.a <= j.b && j.b <= i.b)
}

/// `dim Hom(T_I, T_J)` by enumerating every family of scalars `(f_v)` over
/// GF(2) and keeping the ones commuting with all structure maps. The
/// solution set is a subspace, so its dimension is `log2` of its size.
pub fn hom_dim_enumerated(
    q: &LinearQuiver,
    i: &FiniteInterval,
    j: &FiniteInterval,
) -> Result<usize, FiniteError> {
    q.check(i)?;
    q.check(j)?;
    let m = q.vertex_count();
    // one unknown per vertex where both spaces are nonzero
    let vars: Vec<usize> = (1..=m).filter(|&v| i.dim_at(v) == 1 && j.dim_at(v) == 1).collect();
    let mut solutions = 0usize;
    for bits in 0u32..(1u32 << vars.len()) {
        let f = |v: usize| -> u8 {
            match vars.iter().position(|&w| w == v) {
                Some(k) => ((bits >> k) & 1) as u8,
                None => 0,
            }
        };
        let commutes = (1..m).all(|v| {
            if i.dim_at(v) == 0 || j.dim_at(v + 1) == 0 {
                return true;
            }
            // f_{v+1} . I(v->v+1) == J(v->v+1) . f_v, as maps I(v) -> J(v+1)
            (f(v + 1) & i.map_at(v)) == (j.map_at(v) & f(v))
        });
        if commutes {
            solutions += 1;
        }
    }
    Ok(solutions.trailing_zeros() as usize)
}

/// `dim Ext^1(T_I, T_J)` from the projective resolution of `T_I = T[a,b]`.
///
/// Applying `Hom(-, N)` to `0 -> P_{b+1} -> P_a -> T[a,b] -> 0` leaves
/// `Ext^1 = coker(N(a) -> N(b+1))`, the map being the composite of the
/// structure maps of `N` along the path `a -> b+1`. `P_{m+1} = 0`.
pub fn ext_dim(q: &LinearQuiver, i: &FiniteInterval, j: &FiniteInterval) -> Result<usize, FiniteError> {
    q.check(i)?;
    q.check(j)?;
    let m = q.vertex_count();
    let target = i.b + 1;
    if target > m {
        return Ok(0);
    }
    let target_dim = j.dim_at(target) as usize;
    // rank of the composite 1x1 (or 0-sized) matrix
    let rank = if j.dim_at(i.a) == 0 || target_dim == 0 {
        0
    } else {
        (i.a..target).map(|v| j.map_at(v)).product::<u8>() as usize
    };
    Ok(target_dim - rank)
}

/// `dim Ext^1(T[a,b], T[c,d])` by the closed form: 1 iff `a < c <= b+1 <= d`.
pub fn ext_dim_closed(
    q: &LinearQuiver,
    i: &FiniteInterval,
    j: &FiniteInterval,
) -> Result<usize, FiniteError> {
    q.check(i)?;
    q.check(j)?;
    Ok(ext_closed(i, j))
}

fn ext_closed(i: &FiniteInterval, j: &FiniteInterval) -> usize {
    usize::from(i.a < j.a && j.a <= i.b + 1 && i.b < j.b)
}

/// Ext-orthogonality in both directions.
pub fn ext_compatible(i: &FiniteInterval, j: &FiniteInterval) -> bool {
    ext_closed(i, j) == 0 && ext_closed(j, i) == 0
}

/// The Euler form `<dim I, dim J>` of the linear quiver.
pub fn euler_form(q: &LinearQuiver, i: &FiniteInterval, j: &FiniteInterval) -> i64 {
    let m = q.vertex_count();
    let di = i.dimension_vector(m);
    let dj = j.dimension_vector(m);
    let vertices: i64 = (0..m).map(|v| (di[v] * dj[v]) as i64).sum();
    let arrows: i64 = (0..m.saturating_sub(1)).map(|v| (di[v] * dj[v + 1]) as i64).sum();
    vertices - arrows
}

/// `Ext^1(S, S) = 0`, checked over every ordered pair including each summand
/// against itself.
pub fn is_rigid_set(q: &LinearQuiver, s: &[FiniteInterval]) -> Result<bool, FiniteError> {
    for x in s {
        q.check(x)?;
        debug_assert_eq!(ext_closed(x, x), 0, "interval modules have no self-extensions");
    }
    Ok(s.iter().all(|x| s.iter().all(|y| ext_closed(x, y) == 0)))
}

fn pairwise_distinct(s: &[FiniteInterval]) -> bool {
    let mut v = s.to_vec();
    v.sort();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Basic tilting test: rigid, no repeated summands, and exactly `m` of them.
pub fn is_tilting(q: &LinearQuiver, s: &[FiniteInterval]) -> Result<bool, FiniteError> {
    Ok(is_rigid_set(q, s)? && pairwise_distinct(s) && s.len() == q.vertex_count())
}

/// Basic, rigid, and not extendable by any further interval module.
pub fn is_maximal_rigid_finite(q: &LinearQuiver, s: &[FiniteInterval]) -> Result<bool, FiniteError> {
    if !is_rigid_set(q, s)? || !pairwise_distinct(s) {
        return Ok(false);
    }
    let addable = q
        .intervals()
        .into_iter()
        .filter(|c| !s.contains(c))
        .any(|c| s.iter().all(|x| ext_compatible(x, &c)));
    Ok(!addable)
}

/// A basic rigid collection of interval modules, summands in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RigidSet {
    pub quiver: LinearQuiver,
    pub summands: Vec<FiniteInterval>,
}

impl RigidSet {
    pub fn show(&self) -> String {
        let parts: Vec<String> = self.summands.iter().map(|s| self.quiver.show(s)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn enumerate_maximal_rigid_finite(q: &LinearQuiver) -> Result<Vec<RigidSet>, FiniteError> {
    enumerate_maximal_rigid_finite_capped(q, DEFAULT_MAX_M)
}

/// All maximal rigid sets on `q`, each sorted, the list sorted
/// lexicographically.
pub fn enumerate_maximal_rigid_finite_capped(
    q: &LinearQuiver,
    max_m: usize,
) -> Result<Vec<RigidSet>, FiniteError> {
    let m = q.vertex_count();
    let cap = max_m.min(MAX_SUPPORTED_M);
    if m > cap {
        return Err(FiniteError::ResourceLimit { m, cap });
    }
    let intervals = q.intervals();
    let compat = compat_masks(&intervals, ext_compatible);
    let masks = maximal_compatible_sets(&compat);
    let mut out: Vec<RigidSet> = masks
        .into_iter()
        .map(|mask| RigidSet { quiver: q.clone(), summands: members(mask, &intervals) })
        .collect();
    out.sort_by(|x, y| x.summands.cmp(&y.summands));
    Ok(out)
}

/// Every rigid set on `q` (the empty set included), sorted.
pub fn enumerate_rigid_finite(q: &LinearQuiver, max_m: usize) -> Result<Vec<Vec<FiniteInterval>>, FiniteError> {
    let m = q.vertex_count();
    let cap = max_m.min(MAX_SUPPORTED_M);
    if m > cap {
        return Err(FiniteError::ResourceLimit { m, cap });
    }
    let intervals = q.intervals();
    let compat = compat_masks(&intervals, ext_compatible);
    let mut masks = Vec::new();
    cliques(&compat, 0, 0, &mut masks);
    let mut out: Vec<Vec<FiniteInterval>> = masks.into_iter().map(|k| members(k, &intervals)).collect();
    out.sort();
    Ok(out)
}

fn cliques(compat: &[Mask], chosen: Mask, candidates: Mask, out: &mut Vec<Mask>) {
    out.push(chosen);
    let mut rest = if chosen == 0 { full_mask(compat.len()) } else { candidates };
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        cliques(compat, chosen | 1 << k, rest & compat[k], out);
    }
}

fn full_mask(len: usize) -> Mask {
    if len == Mask::BITS as usize {
        Mask::MAX
    } else {
        (1 << len) - 1
    }
}

pub(crate) type Mask = u128;

pub(crate) fn members<T: Copy>(mask: Mask, items: &[T]) -> Vec<T> {
    items
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, x)| *x)
        .collect()
}

/// `compat[k]` has bit `l` set iff items `k` and `l` are compatible.
pub(crate) fn compat_masks<T>(items: &[T], ok: impl Fn(&T, &T) -> bool) -> Vec<Mask> {
    assert!(items.len() <= Mask::BITS as usize);
    items
        .iter()
        .map(|x| {
            items
                .iter()
                .enumerate()
                .filter(|(_, y)| ok(x, y))
                .fold(0, |acc, (l, _)| acc | (1 << l))
        })
        .collect()
}

/// Every maximal clique of the compatibility graph, as bitmasks.
///
/// Items are decided in index order. `skipped` tracks excluded items that no
/// chosen item blocks yet; a branch dies as soon as one of them can no longer
/// be blocked by any remaining candidate, and a leaf is kept only when every
/// skipped item ended up blocked.
pub(crate) fn maximal_compatible_sets(compat: &[Mask]) -> Vec<Mask> {
    let all = full_mask(compat.len());
    let mut out = Vec::new();
    search(compat, 0, 0, all, 0, 0, &mut out);
    out
}

const PARALLEL_DEPTH: usize = 8;

fn search(
    compat: &[Mask],
    index: usize,
    chosen: Mask,
    allowed: Mask,
    skipped: Mask,
    depth: usize,
    out: &mut Vec<Mask>,
) {
    let later = allowed & mask_from(index);
    let mut s = skipped;
    while s != 0 {
        let u = s.trailing_zeros() as usize;
        s &= s - 1;
        if later & !compat[u] == 0 {
            return;
        }
    }
    let Some(next) = next_allowed(allowed, index) else {
        if skipped == 0 {
            out.push(chosen);
        }
        return;
    };
    let bit: Mask = 1 << next;
    let take = (chosen | bit, allowed & compat[next], skipped & compat[next]);
    let leave = (chosen, allowed & !bit, skipped | bit);
    if depth < PARALLEL_DEPTH {
        let (mut a, b) = rayon::join(
            || {
                let mut v = Vec::new();
                search(compat, next + 1, take.0, take.1, take.2, depth + 1, &mut v);
                v
            },
            || {
                let mut v = Vec::new();
                search(compat, next + 1, leave.0, leave.1, leave.2, depth + 1, &mut v);
                v
            },
        );
        a.extend(b);
        out.extend(a);
    } else {
        search(compat, next + 1, take.0, take.1, take.2, depth + 1, out);
        search(compat, next + 1, leave.0, leave.1, leave.2, depth + 1, out);
    }
}

fn mask_from(index: usize) -> Mask {
    if index >= Mask::BITS as usize {
        0
    } else {
        Mask::MAX << index
    }
}

fn next_allowed(allowed: Mask, index: usize) -> Option<usize> {
    let rest = allowed & mask_from(index);
    (rest != 0).then(|| rest.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(a: usize, b: usize) -> FiniteInterval {
        FiniteInterval::new(a, b)
    }

    fn q(m: usize) -> LinearQuiver {
        LinearQuiver::new(m).unwrap()
    }

    #[test]
    fn hom_examples() {
        // T[2,2] is the simple projective at the sink: it embeds in T[1,2]
        // but T[1,2] has no nonzero map onto it
        assert_eq!(hom_dim_enumerated(&q(2), &fi(2, 2), &fi(1, 2)).unwrap(), 1);
        assert_eq!(hom_dim(&q(2), &fi(2, 2), &fi(1, 2)).unwrap(), 1);
        assert_eq!(hom_dim_enumerated(&q(2), &fi(1, 2), &fi(2, 2)).unwrap(), 0);
        assert_eq!(hom_dim(&q(2), &fi(1, 2), &fi(2, 2)).unwrap(), 0);
        assert_eq!(hom_dim(&q(2), &fi(2, 2), &fi(1, 1)).unwrap(), 0);
        assert_eq!(hom_dim_enumerated(&q(2), &fi(2, 2), &fi(1, 1)).unwrap(), 0);
        assert_eq!(hom_dim(&q(3), &fi(1, 3), &fi(1, 3)).unwrap(), 1);
        assert_eq!(hom_dim_enumerated(&q(3), &fi(1, 3), &fi(1, 3)).unwrap(), 1);
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim(&q(2), &fi(1, 1), &fi(2, 2)).unwrap(), 1);
        assert_eq!(ext_dim(&q(3), &fi(2, 3), &fi(1, 1)).unwrap(), 0);
        assert_eq!(ext_dim(&q(3), &fi(1, 1), &fi(2, 3)).unwrap(), 1);
        assert_eq!(ext_dim_closed(&q(3), &fi(1, 1), &fi(2, 3)).unwrap(), 1);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(hom_dim(&q(2), &fi(1, 3), &fi(1, 1)), Err(FiniteError::OutOfRange { .. })));
        assert!(matches!(ext_dim(&q(2), &fi(2, 1), &fi(1, 1)), Err(FiniteError::OutOfRange { .. })));
        assert!(matches!(hom_dim_enumerated(&q(2), &fi(0, 1), &fi(1, 1)), Err(FiniteError::OutOfRange { .. })));
        assert_eq!(LinearQuiver::new(0), Err(FiniteError::EmptyQuiver));
    }

    #[test]
    fn rigid_and_tilting_examples() {
        assert!(is_rigid_set(&q(2), &[fi(1, 2), fi(2, 2)]).unwrap());
        assert!(!is_rigid_set(&q(2), &[fi(1, 1), fi(2, 2)]).unwrap());
        assert!(is_rigid_set(&q(1), &[fi(1, 1)]).unwrap());

        assert!(is_tilting(&q(2), &[fi(1, 2), fi(2, 2)]).unwrap());
        assert!(!is_tilting(&q(2), &[fi(1, 2)]).unwrap());
        assert!(is_tilting(&q(3), &[fi(1, 3), fi(2, 3), fi(3, 3)]).unwrap());
        assert!(!is_tilting(&q(2), &[fi(1, 2), fi(1, 2)]).unwrap());

        assert!(is_maximal_rigid_finite(&q(2), &[fi(1, 2), fi(1, 1)]).unwrap());
        assert!(!is_maximal_rigid_finite(&q(2), &[fi(1, 2)]).unwrap());
        assert!(is_maximal_rigid_finite(&q(3), &[fi(1, 3), fi(1, 1), fi(1, 2)]).unwrap());
    }

    #[test]
    fn small_enumerations() {
        let one = enumerate_maximal_rigid_finite(&q(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].summands, vec![fi(1, 1)]);

        let two = enumerate_maximal_rigid_finite(&q(2)).unwrap();
        let sets: Vec<_> = two.iter().map(|r| r.summands.clone()).collect();
        assert_eq!(sets, vec![vec![fi(1, 1), fi(1, 2)], vec![fi(1, 2), fi(2, 2)]]);

        assert_eq!(enumerate_maximal_rigid_finite(&q(3)).unwrap().len(), 5);
    }

    #[test]
    fn rigid_sets_match_subset_filter() {
        for m in 1..=4 {
            let quiver = q(m);
            let all = quiver.intervals();
            let mut brute: Vec<Vec<FiniteInterval>> = (0u32..1 << all.len())
                .map(|bits| members(bits as Mask, &all))
                .filter(|s| is_rigid_set(&quiver, s).unwrap())
                .collect();
            brute.sort();
            assert_eq!(enumerate_rigid_finite(&quiver, DEFAULT_MAX_M).unwrap(), brute);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_maximal_rigid_finite_capped(&q(6), 5).unwrap_err();
        assert_eq!(err, FiniteError::ResourceLimit { m: 6, cap: 5 });
        assert!(enumerate_maximal_rigid_finite(&q(16)).is_err());
    }

    #[test]
    fn labels() {
        let lq = LinearQuiver::with_labels(3, vec!["a0".into(), "a01".into(), "a1".into()]).unwrap();
        assert_eq!(lq.show(&fi(2, 3)), "[a01,a1]");
        assert_eq!(q(3).show(&fi(2, 3)), "[2,3]");
    }
}
