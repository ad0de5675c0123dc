#![allow(dead_code)]

use rigid_quiver::finite::FiniteInterval;
use rigid_quiver::interval::BoundaryKind::{self, Closed, Open};
use rigid_quiver::type_alpha::{canonicalize, Alpha, BreakSummand, FamilyChoice, Side, TypeAlphaRep};

pub fn t(lo: usize, lk: BoundaryKind, hi: usize, hk: BoundaryKind) -> BreakSummand {
    BreakSummand::new(lo, lk, hi, hk)
}

fn rep(t_part: Vec<BreakSummand>, side: Side, anchor: usize, kind: BoundaryKind) -> TypeAlphaRep {
    canonicalize(&TypeAlphaRep::new(
        Alpha::uniform(1),
        t_part,
        vec![FamilyChoice::new(0, side, anchor, kind)],
    ))
}

/// The ten maximal rigid representations of type (0,1), in the order
/// `M_1, ..., M_10`, transcribed by hand.
pub fn example_reps() -> Vec<TypeAlphaRep> {
    let c01 = t(0, Closed, 1, Closed);
    let o01c = t(0, Open, 1, Closed);
    let c01o = t(0, Closed, 1, Open);
    let o01o = t(0, Open, 1, Open);
    let p0 = t(0, Closed, 0, Closed);
    let p1 = t(1, Closed, 1, Closed);
    vec![
        // M1: [0,1] (0,1] [1,1] + [x,1] (x,1]
        rep(vec![c01, o01c, p1], Side::Right, 1, Closed),
        // M2: [0,1] (0,1] [1,1] + (0,x] (0,x)
        rep(vec![c01, o01c, p1], Side::Left, 0, Open),
        // M3: [0,1] (0,1] (0,1) + [x,1) (x,1)
        rep(vec![c01, o01c, o01o], Side::Right, 1, Open),
        // M4: [0,1] (0,1] (0,1) + (0,x) (0,x]
        rep(vec![c01, o01c, o01o], Side::Left, 0, Open),
        // M5: [0,1] [0,1) (0,1) + [x,1) (x,1)
        rep(vec![c01, c01o, o01o], Side::Right, 1, Open),
        // M6: [0,1] [0,1) (0,1) + (0,x] (0,x)
        rep(vec![c01, c01o, o01o], Side::Left, 0, Open),
        // M7: [0,0] [1,1] [0,1] + [x,1] (x,1]
        rep(vec![p0, p1, c01], Side::Right, 1, Closed),
        // M8: [0,0] [1,1] [0,1] + [0,x] [0,x)
        rep(vec![p0, p1, c01], Side::Left, 0, Closed),
        // M9: [0,0] [0,1) [0,1] + [x,1) (x,1)
        rep(vec![p0, c01o, c01], Side::Right, 1, Open),
        // M10: [0,0] [0,1) [0,1] + [0,x] [0,x)
        rep(vec![p0, c01o, c01], Side::Left, 0, Closed),
    ]
}

/// `M̂_1, ..., M̂_5` on the quiver `a0 -> a01 -> a1` (vertices 1, 2, 3).
pub fn example_hat_sets() -> Vec<Vec<FiniteInterval>> {
    let f = FiniteInterval::new;
    let mut sets = vec![
        vec![f(1, 3), f(3, 3), f(2, 3)],
        vec![f(1, 3), f(2, 2), f(2, 3)],
        vec![f(1, 3), f(2, 2), f(1, 2)],
        vec![f(1, 1), f(3, 3), f(1, 3)],
        vec![f(1, 1), f(1, 2), f(1, 3)],
    ];
    for s in &mut sets {
        s.sort();
    }
    sets
}
