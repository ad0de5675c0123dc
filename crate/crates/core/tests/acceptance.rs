//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails if
//! any criterion does.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigid_quiver::cli::{self, json::RepJson};
use rigid_quiver::correspondence::{
    discretize_pair_ext, enumerate_by_fibers, phi, tau2_interval, tau2_inv_interval, HatQuiver, TildeQuiver,
};
use rigid_quiver::counting::theorem_count;
use rigid_quiver::finite::{
    enumerate_maximal_rigid_finite, ext_dim, ext_dim_closed, hom_dim, hom_dim_enumerated, is_maximal_rigid_finite,
    is_tilting, FiniteInterval, LinearQuiver,
};
use rigid_quiver::interval::{compatible, random_interval};
use rigid_quiver::type_alpha::{canonicalize, enumerate_type_alpha, Alpha, BreakSummand, TypeAlphaRep};

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rigid-quiver").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn criterion_1_finite_catalan() -> Outcome {
    let expected = [1usize, 2, 5, 14, 42, 132, 429, 1430, 4862];
    let limit = Duration::from_secs(10);
    let start = Instant::now();
    let mut got = Vec::new();
    for m in 1..=9 {
        let (code, text) = run_cli(&["finite", "--m", &m.to_string(), "--enumerate"]);
        let listed = text.lines().skip(1).count();
        let header_ok = text.lines().next().is_some_and(|l| l.contains(&format!("enumerated={listed} ")));
        got.push(if code == 0 && header_ok { listed } else { usize::MAX });
    }
    let elapsed = start.elapsed();
    outcome(got == expected && elapsed < limit, format!("counts {got:?} in {elapsed:?} (limit {limit:?})"))
}

fn criterion_2_example_golden() -> Outcome {
    let (code, text) = run_cli(&["enumerate", "--n", "1", "--format", "json"]);
    let parsed: Vec<RepJson> = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return outcome(false, format!("unparseable output: {e}")),
    };
    let reps: BTreeSet<TypeAlphaRep> =
        parsed.into_iter().map(|j| canonicalize(&j.into_rep().unwrap())).collect();
    let golden: BTreeSet<TypeAlphaRep> = common::example_reps().into_iter().collect();
    outcome(
        code == 0 && reps.len() == 10 && golden.len() == 10 && reps == golden,
        format!("{} encodings, equal to M_1..M_10: {}", reps.len(), reps == golden),
    )
}

fn criterion_3_theorem_counts() -> Outcome {
    let expected = [10u32, 168, 3432];
    let mut details = Vec::new();
    let mut ok = true;
    for (n, want) in (1..=3).zip(expected) {
        let start = Instant::now();
        let reps = enumerate_type_alpha(&Alpha::uniform(n)).unwrap();
        let elapsed = start.elapsed();
        let formula = theorem_count(n as u64);
        ok &= BigUint::from(reps.len()) == formula && formula == BigUint::from(want);
        if n == 3 {
            ok &= elapsed < Duration::from_secs(60);
        }
        details.push(format!("n={n}: {} vs {formula} ({elapsed:?})", reps.len()));
    }
    outcome(ok, details.join(", "))
}

fn criterion_4_correspondence() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=3 {
        let alpha = Alpha::uniform(n);
        let reps = enumerate_type_alpha(&alpha).unwrap();
        let hat = HatQuiver::new(n);
        let hats: BTreeSet<Vec<FiniteInterval>> =
            enumerate_maximal_rigid_finite(hat.quiver()).unwrap().into_iter().map(|r| r.summands).collect();
        let mut fibers: BTreeMap<Vec<FiniteInterval>, usize> = BTreeMap::new();
        for r in &reps {
            *fibers.entry(phi(r)).or_default() += 1;
        }
        let image: BTreeSet<_> = fibers.keys().cloned().collect();
        let onto = image == hats;
        let sizes = fibers.values().all(|&c| c == 1 << n);

        let tilde = TildeQuiver::new(n);
        let admissible: Vec<_> = tilde.quiver().intervals().into_iter().filter(|iv| tilde.admits(iv)).collect();
        let round_trip = admissible.len() == hat.quiver().intervals().len()
            && admissible
                .iter()
                .all(|iv| tau2_inv_interval(&hat, &tau2_interval(&tilde, iv).unwrap()).unwrap() == *iv);
        ok &= onto && sizes && round_trip;
        details.push(format!("n={n}: onto={onto} fibers=2^n:{sizes} tau2={round_trip}"));
    }
    outcome(ok, details.join(", "))
}

fn subset(bits: u64, all: &[FiniteInterval]) -> Vec<FiniteInterval> {
    all.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, x)| *x).collect()
}

fn criterion_5_tilting_iff_maximal() -> Outcome {
    let mut checked = 0u64;
    let mut counterexamples = 0u64;
    for m in 1..=4 {
        let q = LinearQuiver::new(m).unwrap();
        let all = q.intervals();
        for bits in 0..1u64 << all.len() {
            let s = subset(bits, &all);
            checked += 1;
            if is_tilting(&q, &s).unwrap() != is_maximal_rigid_finite(&q, &s).unwrap() {
                counterexamples += 1;
            }
        }
    }
    let q = LinearQuiver::new(5).unwrap();
    let all = q.intervals();
    let mut rng = ChaCha8Rng::seed_from_u64(3_2);
    for _ in 0..100_000 {
        let s = subset(rng.gen_range(0..1u64 << all.len()), &all);
        checked += 1;
        if is_tilting(&q, &s).unwrap() != is_maximal_rigid_finite(&q, &s).unwrap() {
            counterexamples += 1;
        }
    }
    outcome(counterexamples == 0, format!("{checked} subsets, {counterexamples} counterexamples"))
}

fn criterion_6_oracles() -> Outcome {
    let mut disagreements = 0usize;
    let mut pairs = 0usize;
    for n in 1..=3 {
        let ivs: Vec<_> = BreakSummand::all(n).iter().map(|s| s.interval().unwrap()).collect();
        for x in &ivs {
            for y in &ivs {
                pairs += 1;
                disagreements += usize::from(compatible(x, y) != discretize_pair_ext(x, y));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=3);
        let (x, y) = (random_interval(&mut rng, n), random_interval(&mut rng, n));
        pairs += 1;
        disagreements += usize::from(compatible(&x, &y) != discretize_pair_ext(&x, &y));
    }
    let mut finite_pairs = 0usize;
    let mut finite_disagreements = 0usize;
    for m in 1..=6 {
        let q = LinearQuiver::new(m).unwrap();
        for i in q.intervals() {
            for j in q.intervals() {
                finite_pairs += 1;
                let ext_ok = ext_dim(&q, &i, &j).unwrap() == ext_dim_closed(&q, &i, &j).unwrap();
                let hom_ok = hom_dim(&q, &i, &j).unwrap() == hom_dim_enumerated(&q, &i, &j).unwrap();
                finite_disagreements += usize::from(!(ext_ok && hom_ok));
            }
        }
    }
    outcome(
        disagreements == 0 && finite_disagreements == 0,
        format!(
            "compatibility: {pairs} pairs, {disagreements} disagreements; hom/ext: {finite_pairs} pairs, {finite_disagreements} disagreements"
        ),
    )
}

fn criterion_7_cross_enumeration() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=3 {
        let alpha = Alpha::uniform(n);
        let direct: BTreeSet<_> = enumerate_type_alpha(&alpha).unwrap().into_iter().collect();
        let fibers: BTreeSet<_> = enumerate_by_fibers(&alpha).unwrap().into_iter().collect();
        ok &= direct == fibers;
        details.push(format!("n={n}: {} vs {}", direct.len(), fibers.len()));
    }
    outcome(ok, details.join(", "))
}

fn criterion_8_phi_golden() -> Outcome {
    let reps = common::example_reps();
    let hats = common::example_hat_sets();
    let failures: Vec<usize> = (0..5)
        .filter(|&k| phi(&reps[2 * k]) != hats[k] || phi(&reps[2 * k + 1]) != hats[k])
        .map(|k| k + 1)
        .collect();
    outcome(failures.is_empty(), format!("k with mismatches: {failures:?}"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 finite Catalan counts m=1..9", criterion_1_finite_catalan),
        ("2 type (0,1) golden enumeration", criterion_2_example_golden),
        ("3 closed-form count n=1..3", criterion_3_theorem_counts),
        ("4 phi onto, 2^n fibers, tau2 round trip", criterion_4_correspondence),
        ("5 tilting iff maximal rigid", criterion_5_tilting_iff_maximal),
        ("6 oracle equivalence", criterion_6_oracles),
        ("7 direct vs fiber enumeration", criterion_7_cross_enumeration),
        ("8 phi on the (0,1) examples", criterion_8_phi_golden),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let o = f();
        println!("criterion {name}: {} ({})", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
