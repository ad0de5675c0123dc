//! The cross-check suite behind the `verify` command.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::correspondence::{
    discretize_pair_ext, enumerate_by_fibers, phi, phi_t_part, pullback, tau2_interval, tau2_inv_interval,
    HatQuiver, TildeQuiver,
};
use crate::counting::{hat_count, theorem_count};
use crate::finite::{enumerate_maximal_rigid_finite, enumerate_rigid_finite, FiniteInterval, DEFAULT_MAX_M};
use crate::interval::{compatible, random_interval};
use crate::type_alpha::{enumerate_type_alpha_capped, is_type_alpha, Alpha, BreakSummand};

/// Random pairs tried against the discretized Ext oracle.
pub const RANDOM_PAIRS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

/// Runs every check for `n` segments; errors are reported as failed checks.
pub fn run_suite(n: usize, seed: u64, max_n: usize) -> Vec<Check> {
    let alpha = Alpha::uniform(n);
    let hat = HatQuiver::new(n);
    let mut out = Vec::new();

    let direct = match enumerate_type_alpha_capped(&alpha, max_n) {
        Ok(v) => v,
        Err(e) => return vec![check("direct enumeration", false, e.to_string())],
    };
    let hats = match enumerate_maximal_rigid_finite(hat.quiver()) {
        Ok(v) => v,
        Err(e) => return vec![check("hat enumeration", false, e.to_string())],
    };

    let expected = theorem_count(n as u64);
    out.push(check(
        "theorem count",
        BigUint::from(direct.len()) == expected,
        format!("enumerated={} formula={expected}", direct.len()),
    ));
    let expected_hat = hat_count(n as u64);
    out.push(check(
        "hat count",
        BigUint::from(hats.len()) == expected_hat,
        format!("enumerated={} formula={expected_hat}", hats.len()),
    ));

    out.push(match enumerate_by_fibers(&alpha) {
        Ok(fibers) => check(
            "cross enumeration",
            fibers == direct,
            format!("direct={} fiber-expansion={}", direct.len(), fibers.len()),
        ),
        Err(e) => check("cross enumeration", false, e.to_string()),
    });

    let mut preimages: BTreeMap<Vec<FiniteInterval>, usize> = BTreeMap::new();
    for r in &direct {
        *preimages.entry(phi(r)).or_default() += 1;
    }
    let hat_sets: BTreeSet<Vec<FiniteInterval>> = hats.iter().map(|h| h.summands.clone()).collect();
    let image: BTreeSet<Vec<FiniteInterval>> = preimages.keys().cloned().collect();
    out.push(check("phi image equals hat maximal rigid sets", image == hat_sets, format!("|image|={}", image.len())));
    let bad_fibers = preimages.values().filter(|&&c| c != 1 << n).count();
    out.push(check("fiber size 2^n", bad_fibers == 0, format!("{bad_fibers} fibers of wrong size")));

    let not_alpha = direct.iter().filter(|r| !is_type_alpha(r)).count();
    out.push(check("enumerated reps are of type alpha", not_alpha == 0, format!("{not_alpha} failures")));

    out.push(match enumerate_rigid_finite(hat.quiver(), DEFAULT_MAX_M) {
        Ok(rigid) => {
            let missing = rigid
                .iter()
                .filter(|s| match pullback(&hat, s) {
                    Ok(t) => {
                        let ivs: Vec<_> = t.iter().map(|b| b.interval().expect("valid")).collect();
                        let rigid_cont = ivs.iter().all(|x| ivs.iter().all(|y| compatible(x, y)));
                        !(rigid_cont && phi_t_part(n, &t) == **s)
                    }
                    Err(_) => true,
                })
                .count();
            check(
                "phi surjective onto rigid hat sets",
                missing == 0,
                format!("{} rigid sets, {missing} without a rigid preimage", rigid.len()),
            )
        }
        Err(e) => check("phi surjective onto rigid hat sets", false, e.to_string()),
    });

    let tilde = TildeQuiver::new(n);
    let admissible: Vec<FiniteInterval> =
        tilde.quiver().intervals().into_iter().filter(|iv| tilde.admits(iv)).collect();
    let round_trip_failures = admissible
        .iter()
        .filter(|iv| {
            tau2_interval(&tilde, iv).and_then(|h| tau2_inv_interval(&hat, &h)).ok().as_ref() != Some(*iv)
        })
        .count();
    let bijective = admissible.len() == hat.quiver().intervals().len();
    out.push(check(
        "tau2 round trip",
        round_trip_failures == 0 && bijective,
        format!("{} indecomposables, {round_trip_failures} failures", admissible.len()),
    ));

    let summands: Vec<_> = BreakSummand::all(n).iter().map(|s| s.interval().expect("valid")).collect();
    let disagreements = summands
        .iter()
        .flat_map(|x| summands.iter().map(move |y| (x, y)))
        .filter(|(x, y)| compatible(x, y) != discretize_pair_ext(x, y))
        .count();
    out.push(check(
        "compatibility vs discretized Ext, breakpoint pairs",
        disagreements == 0,
        format!("{} pairs, {disagreements} disagreements", summands.len() * summands.len()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_disagreements = (0..RANDOM_PAIRS)
        .filter(|_| {
            let (x, y) = (random_interval(&mut rng, n), random_interval(&mut rng, n));
            compatible(&x, &y) != discretize_pair_ext(&x, &y)
        })
        .count();
    out.push(check(
        "compatibility vs discretized Ext, random pairs",
        random_disagreements == 0,
        format!("{RANDOM_PAIRS} pairs (seed {seed}), {random_disagreements} disagreements"),
    ));

    out
}
