//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::time::{Duration, Instant};

use cayley_stability::cayley::lift_to_double;
use cayley_stability::perm::naive_automorphisms;
use cayley_stability::products::FactorClaim;
use cayley_stability::{
    automorphism_group, bip_product_check, chao_check, direct_product, dorfler_check, graph6_read,
    graph6_write, reproduce_example_21, stability_check, theorem_sweep, verify_scaling_lemma,
    walk_count_mod_check, ColoredGraph, ConnectionSet, FiniteGroup, GroupSpec, SweepOptions,
};
use num_bigint::BigUint;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn example_21() -> Check {
    let start = Instant::now();
    let e = reproduce_example_21();
    let elapsed = start.elapsed();
    let r = &e.report;
    ensure(
        r.aut_x_order == big(42),
        format!("|Aut X| = {}", r.aut_x_order),
    )?;
    ensure(
        r.aut_bx_order == big(252),
        format!("|Aut BX| = {}", r.aut_bx_order),
    )?;
    ensure(
        r.connected && r.twin_free,
        "expected connected and twin-free",
    )?;
    ensure(!r.stable, "expected unstable")?;
    ensure(e.witness_verified, "witness is not a verified non-member")?;
    ensure(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "|Aut X| = 42, |Aut BX| = 252, witness verified, {elapsed:.2?}"
    ))
}

const SWEEP_GROUPS: [&str; 9] = ["Z3", "Z5", "Z7", "Z9", "Z11", "Z13", "Z15", "Z3xZ3", "Z21"];

fn sweeps() -> Check {
    let start = Instant::now();
    let mut runs: Vec<(String, SweepOptions)> = SWEEP_GROUPS
        .iter()
        .map(|g| (g.to_string(), SweepOptions::default()))
        .collect();
    runs.push((
        "Z3xZ3".into(),
        SweepOptions {
            colored: true,
            ..SweepOptions::default()
        },
    ));
    let (mut total, mut checked) = (0, 0);
    for (group, options) in runs {
        let spec: GroupSpec = group.parse().map_err(|e| format!("{e}"))?;
        let s = theorem_sweep(&spec, options).map_err(|e| format!("{group}: {e}"))?;
        ensure(
            s.total == s.disconnected + s.has_twins + s.checked,
            format!("{group}: counts do not add up"),
        )?;
        ensure(s.unstable == 0, format!("{group}: {} unstable", s.unstable))?;
        ensure(
            s.invariant_failures.is_empty(),
            format!("{group}: {:?}", s.invariant_failures),
        )?;
        total += s.total;
        checked += s.checked;
    }
    Ok(format!(
        "{total} connection sets, {checked} connected twin-free, 0 unstable, {:.2?}",
        start.elapsed()
    ))
}

const LEMMA_GROUPS: [&[usize]; 11] = [
    &[3],
    &[5],
    &[7],
    &[9],
    &[11],
    &[13],
    &[15],
    &[17],
    &[19],
    &[21],
    &[3, 3],
];

fn random_set<'g>(group: &'g FiniteGroup, rng: &mut ChaCha8Rng) -> ConnectionSet<'g> {
    let colored = rng.gen_bool(0.3);
    let mut members = Vec::new();
    for s in group.elements() {
        let t = group.inverse_of(s);
        if s != group.identity() && s <= t && rng.gen_bool(0.5) {
            let c = if colored { rng.gen_range(0..2) } else { 0 };
            members.push((s, c));
            members.push((t, c));
        }
    }
    if members.is_empty() || rng.gen_bool(0.1) {
        members.push((group.identity(), 0));
    }
    ConnectionSet::with_colors(group, members).expect("symmetric by construction")
}

fn lemma_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca1e);
    let mut generators = 0;
    for i in 0..200 {
        let factors = LEMMA_GROUPS.choose(&mut rng).unwrap();
        let group = FiniteGroup::abelian(factors).map_err(|e| e.to_string())?;
        let order = group.order() as i64;
        let set = random_set(&group, &mut rng);
        let k = loop {
            let k = rng.gen_range(1..4 * order);
            if k.gcd(&order) == 1 {
                break k;
            }
        };
        let report =
            verify_scaling_lemma(&set, k).map_err(|e| format!("instance {i} (k = {k}): {e}"))?;
        ensure(
            report.all_pass(),
            format!("instance {i}: {:?} k = {k} failed", set.describe()),
        )?;
        generators += report.checks.len();
    }
    let z2 = FiniteGroup::abelian(&[2]).unwrap();
    for name in SWEEP_GROUPS {
        let spec: GroupSpec = name.parse().unwrap();
        let group = spec.build().unwrap();
        let doubled = group.direct_product(&z2).unwrap();
        let pairs = group.elements().filter(|&g| g != group.identity());
        let set = ConnectionSet::new(&group, pairs.take(4).flat_map(|g| [g, group.inverse_of(g)]))
            .unwrap();
        let lifted = lift_to_double(&set, &doubled).unwrap();
        let k = group.order() as i64 + 1;
        let report = verify_scaling_lemma(&lifted, k).map_err(|e| format!("{name} x Z2: {e}"))?;
        ensure(
            report.all_pass(),
            format!("{name} x Z2 with k = {k} failed"),
        )?;
        generators += report.checks.len();
    }
    Ok(format!(
        "200 random instances + 9 doubled instances, {generators} generators preserved"
    ))
}

fn walk_counts() -> Check {
    let cases: [(&[usize], &[usize], usize); 3] = [
        (&[7], &[1, 6], 3),
        (&[5], &[1, 4], 5),
        (&[9], &[1, 8, 2, 7], 5),
    ];
    let mut pairs = 0;
    for (factors, members, p) in cases {
        let group = FiniteGroup::abelian(factors).unwrap();
        let set = ConnectionSet::new(&group, members.iter().copied()).unwrap();
        let report = walk_count_mod_check(&set, p).map_err(|e| e.to_string())?;
        ensure(
            report.holds(),
            format!(
                "Z{} p = {p}: {} violations",
                factors[0],
                report.violations.len()
            ),
        )?;
        pairs += report.pairs_checked;
    }
    Ok(format!("3 instances, {pairs} vertex pairs"))
}

fn chao() -> Check {
    let mut sets = 0;
    for p in [3, 5, 7, 11, 13] {
        let r = chao_check(p).map_err(|e| e.to_string())?;
        ensure(
            r.enumerated == 1 << ((p - 1) / 2),
            format!("p = {p}: wrong enumeration"),
        )?;
        ensure(
            r.holds(),
            format!("p = {p}: {} disagreements", r.disagreements.len()),
        )?;
        sets += r.instances.len();
    }
    Ok(format!("{sets} non-empty symmetric sets, predicates agree"))
}

fn dorfler() -> Check {
    for (a, b, expected) in [(5, 7, 140u64), (3, 5, 60)] {
        let (x, y) = (ColoredGraph::cycle(a), ColoredGraph::cycle(b));
        let r = dorfler_check(&x, &y);
        ensure(r.applicable, format!("(C{a}, C{b}) not applicable"))?;
        ensure(r.holds == Some(true), format!("(C{a}, C{b}) does not hold"))?;
        ensure(
            r.aut_product == Some(big(expected)),
            format!("(C{a}, C{b}): {:?}", r.aut_product),
        )?;
    }
    let c3c5 = direct_product(&ColoredGraph::cycle(3), &ColoredGraph::cycle(5)).unwrap();
    ensure(
        common::backtrack_count(&c3c5) == 60,
        "backtracking disagrees on C3 x C5",
    )?;
    Ok("|Aut(C5 x C7)| = 140, |Aut(C3 x C5)| = 60".into())
}

fn bipartite_product() -> Check {
    let z5 = FiniteGroup::abelian(&[5]).unwrap();
    let x = ConnectionSet::new(&z5, [1, 4]).unwrap().cayley_graph();
    let y = ColoredGraph::path(4);
    let r = bip_product_check(&x, &y, FactorClaim::OddAbelianCayley);
    ensure(r.applicable, "(Cay(Z5; +-1), P4) not applicable")?;
    ensure(
        r.aut_product == Some(big(20)),
        format!("{:?}", r.aut_product),
    )?;
    ensure(r.holds == Some(true), "order equation fails")?;
    let brute = common::backtrack_count(&direct_product(&x, &y).unwrap());
    ensure(brute == 20, format!("backtracking counts {brute}"))?;
    let k2 = ColoredGraph::complete(2);
    for n in [3, 5, 9] {
        let x = ColoredGraph::cycle(n);
        ensure(stability_check(&x).stable, format!("C{n} unstable"))?;
        let r = bip_product_check(&x, &k2, FactorClaim::NonBipartiteStable);
        ensure(r.holds == Some(true), format!("(C{n}, K2) fails"))?;
    }
    Ok("|Aut(C5 x P4)| = 20 (backtracking agrees); stable X with K2 agrees".into())
}

fn oracle_corpus() -> Check {
    let corpus = common::corpus();
    ensure(corpus.len() == 30, "corpus must hold 30 graphs")?;
    for (name, g) in &corpus {
        let engine = automorphism_group(g).order().clone();
        let naive = naive_automorphisms(g).map_err(|e| e.to_string())?.len();
        ensure(
            engine == big(naive as u64),
            format!("{name}: engine {engine}, naive {naive}"),
        )?;
    }
    Ok("30 graphs, engine order equals naive count".into())
}

fn graph6_round_trip() -> Check {
    let mut count = 0;
    for (name, g) in common::corpus() {
        if !g.is_simple() || g.color_count() > 1 {
            continue;
        }
        let text = graph6_write(&g).map_err(|e| format!("{name}: {e}"))?;
        let back = graph6_read(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(back == g, format!("{name}: decoded graph differs"))?;
        ensure(
            graph6_write(&back).unwrap() == text,
            format!("{name}: re-encoding differs"),
        )?;
        count += 1;
    }
    Ok(format!("{count} simple graphs round-trip bit-exactly"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("order-21 counterexample", example_21),
        ("odd abelian sweeps", sweeps),
        ("scaling lemma", lemma_suite),
        ("walk counts mod p", walk_counts),
        ("prime circulant edge-transitivity", chao),
        ("coprime non-bipartite products", dorfler),
        ("bipartite-factor product", bipartite_product),
        ("engine vs naive oracle", oracle_corpus),
        ("graph6 round trip", graph6_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
