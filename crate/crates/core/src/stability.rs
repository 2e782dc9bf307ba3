//! Stability of a graph under the canonical double cover, exhaustive sweeps over
//! Cayley graphs of abelian groups of odd order, and the order-21 counterexample.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::ConnectionSet;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::group::{FiniteGroup, GroupSpec};
use crate::perm::{automorphism_group, PermGroup, Permutation};
use crate::products::double_cover;

/// `X` is stable when `Aut BX` is exactly the image of `Aut X x S2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub connected: bool,
    pub twin_free: bool,
    pub aut_x_order: BigUint,
    pub aut_bx_order: BigUint,
    pub stable: bool,
    /// A generator of `Aut BX` outside `Aut X x S2`, when one exists.
    pub witness: Option<Permutation>,
    pub reason: Option<String>,
}

/// `Aut X x S2` acting on the double cover, `(v, i)` numbered `v + i n`.
pub fn obvious_subgroup(aut_x: &PermGroup) -> PermGroup {
    let n = aut_x.degree();
    let mut gens: Vec<Permutation> = aut_x
        .generators()
        .iter()
        .map(|g| {
            let images = (0..2 * n).map(|p| g.apply(p % n) + p / n * n).collect();
            Permutation::from_images(images).expect("lifted automorphism")
        })
        .collect();
    let swap = (0..2 * n).map(|p| (p + n) % (2 * n)).collect();
    gens.push(Permutation::from_images(swap).expect("part swap"));
    PermGroup::from_generators(2 * n, gens).expect("degrees agree")
}

pub fn stability_check(x: &ColoredGraph) -> StabilityReport {
    let connected = x.is_connected();
    let twin_free = x.is_twin_free();
    let aut_x = automorphism_group(x);
    let bx = double_cover(x);
    let aut_bx = automorphism_group(&bx);
    let aut_x_order = aut_x.order().clone();
    let aut_bx_order = aut_bx.order().clone();
    let stable = connected && twin_free && aut_bx_order == &aut_x_order * 2u32;
    let witness = if aut_bx_order == &aut_x_order * 2u32 {
        None
    } else {
        let obvious = obvious_subgroup(&aut_x);
        aut_bx
            .generators()
            .iter()
            .find(|g| !obvious.contains(g).expect("degrees agree"))
            .cloned()
    };
    let reason = match (connected, twin_free) {
        (false, _) => Some("disconnected".to_string()),
        (true, false) => Some("has twins".to_string()),
        _ => None,
    };
    StabilityReport {
        connected,
        twin_free,
        aut_x_order,
        aut_bx_order,
        stable,
        witness,
        reason,
    }
}

/// JSON form: `{"group", "S", "connected", "twin_free", "autX", "autBX", "stable", "witness"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityJson {
    pub group: Option<String>,
    #[serde(rename = "S")]
    pub set: Vec<String>,
    pub connected: bool,
    pub twin_free: bool,
    #[serde(rename = "autX")]
    pub aut_x: String,
    #[serde(rename = "autBX")]
    pub aut_bx: String,
    pub stable: bool,
    pub witness: Option<Vec<usize>>,
}

impl StabilityReport {
    pub fn to_json(&self, group: Option<String>, set: Vec<String>) -> StabilityJson {
        StabilityJson {
            group,
            set,
            connected: self.connected,
            twin_free: self.twin_free,
            aut_x: self.aut_x_order.to_string(),
            aut_bx: self.aut_bx_order.to_string(),
            stable: self.stable,
            witness: self.witness.as_ref().map(|w| w.images().to_vec()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepOptions {
    /// Put the identity in every connection set.
    pub loops: bool,
    /// Give each inverse pair colour 0 or 1 independently.
    pub colored: bool,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceClass {
    Disconnected,
    HasTwins,
    Stable,
    Unstable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepInstance {
    /// Base-2 (or base-3 in coloured mode) digits select the inverse pairs.
    pub code: u64,
    #[serde(rename = "S")]
    pub set: Vec<String>,
    pub class: InstanceClass,
    #[serde(rename = "autX", with = "crate::decimal::option")]
    pub aut_x: Option<BigUint>,
    #[serde(rename = "autBX", with = "crate::decimal::option")]
    pub aut_bx: Option<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub group: String,
    pub loops: bool,
    pub colored: bool,
    pub total: usize,
    pub disconnected: usize,
    pub has_twins: usize,
    pub checked: usize,
    pub stable: usize,
    pub unstable: usize,
    pub unstable_instances: Vec<SweepInstance>,
    /// Divisibility facts that failed: `2|Aut X|` divides `|Aut BX|`, and in
    /// coloured mode `|Aut X|` divides the order for the uncoloured shadow.
    pub invariant_failures: Vec<String>,
    #[serde(skip)]
    pub instances: Vec<SweepInstance>,
}

impl SweepSummary {
    pub fn holds(&self) -> bool {
        self.unstable == 0 && self.invariant_failures.is_empty()
    }
}

/// Non-identity elements grouped into `{s, s^-1}` pairs, ordered by smaller element.
fn inverse_pairs(group: &FiniteGroup) -> Vec<(usize, usize)> {
    group
        .elements()
        .filter(|&s| s != group.identity())
        .map(|s| (s, group.inverse_of(s)))
        .filter(|&(s, t)| s <= t)
        .collect()
}

/// Every symmetric connection set of an abelian group of odd order.
pub fn theorem_sweep(spec: &GroupSpec, options: SweepOptions) -> Result<SweepSummary> {
    let group = spec.build()?;
    if !group.is_abelian() {
        return Err(Error::Refused(format!(
            "{spec} is not abelian; the theorem needs an abelian group \
             (SD(7,3,2) gives an unstable twin-free connected Cayley graph)"
        )));
    }
    if group.order() % 2 == 0 {
        return Err(Error::Refused(format!(
            "{spec} has even order {}; the theorem covers odd order only",
            group.order()
        )));
    }
    let pairs = inverse_pairs(&group);
    let radix: u64 = if options.colored { 3 } else { 2 };
    let total = radix.checked_pow(pairs.len() as u32).ok_or_else(|| {
        Error::Refused(format!(
            "{} inverse pairs is too many to sweep",
            pairs.len()
        ))
    })?;

    let build = |code: u64| -> ConnectionSet<'_> {
        let mut members = Vec::new();
        if options.loops {
            members.push((group.identity(), 0));
        }
        let mut rest = code;
        for &(s, t) in &pairs {
            let digit = rest % radix;
            rest /= radix;
            if digit > 0 {
                let color = (digit - 1) as u32;
                members.push((s, color));
                members.push((t, color));
            }
        }
        ConnectionSet::with_colors(&group, members).expect("pairs are inverse-closed")
    };
    let run = |code: u64| -> (SweepInstance, Option<String>) {
        let set = build(code);
        let x = set.cayley_graph();
        let described = set.describe();
        if !x.is_connected() {
            return (
                instance(code, described, InstanceClass::Disconnected, None, None),
                None,
            );
        }
        if !x.is_twin_free() {
            return (
                instance(code, described, InstanceClass::HasTwins, None, None),
                None,
            );
        }
        let report = stability_check(&x);
        let mut failure = None;
        if &report.aut_bx_order % (&report.aut_x_order * 2u32) != BigUint::from(0u32) {
            failure = Some(format!("code {code}: 2|Aut X| does not divide |Aut BX|"));
        }
        if options.colored && set.is_colored() {
            let shadow = automorphism_group(&x.uncolored_shadow()).order().clone();
            if shadow % &report.aut_x_order != BigUint::from(0u32) {
                failure = Some(format!(
                    "code {code}: |Aut X| does not divide its shadow's order"
                ));
            }
        }
        let class = if report.stable {
            InstanceClass::Stable
        } else {
            InstanceClass::Unstable
        };
        (
            instance(
                code,
                described,
                class,
                Some(report.aut_x_order),
                Some(report.aut_bx_order),
            ),
            failure,
        )
    };

    let codes: Vec<u64> = (0..total).collect();
    let results: Vec<(SweepInstance, Option<String>)> = if options.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        pool.install(|| codes.par_iter().map(|&c| run(c)).collect())
    } else {
        codes.iter().map(|&c| run(c)).collect()
    };

    let mut summary = SweepSummary {
        group: spec.to_string(),
        loops: options.loops,
        colored: options.colored,
        total: results.len(),
        disconnected: 0,
        has_twins: 0,
        checked: 0,
        stable: 0,
        unstable: 0,
        unstable_instances: Vec::new(),
        invariant_failures: Vec::new(),
        instances: Vec::with_capacity(results.len()),
    };
    for (inst, failure) in results {
        match inst.class {
            InstanceClass::Disconnected => summary.disconnected += 1,
            InstanceClass::HasTwins => summary.has_twins += 1,
            InstanceClass::Stable => {
                summary.checked += 1;
                summary.stable += 1;
            }
            InstanceClass::Unstable => {
                summary.checked += 1;
                summary.unstable += 1;
                summary.unstable_instances.push(inst.clone());
            }
        }
        summary.invariant_failures.extend(failure);
        summary.instances.push(inst);
    }
    Ok(summary)
}

fn instance(
    code: u64,
    set: Vec<String>,
    class: InstanceClass,
    aut_x: Option<BigUint>,
    aut_bx: Option<BigUint>,
) -> SweepInstance {
    SweepInstance {
        code,
        set,
        class,
        aut_x,
        aut_bx,
    }
}

pub const EXAMPLE_21_GROUP: &str = "SD(7,3,2)";
pub const EXAMPLE_21_SET: &str = "a,a^-1,x,x^-1,ax,(ax)^-1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example21Report {
    pub set: Vec<String>,
    pub report: StabilityReport,
    /// The witness is an automorphism of `BX` and sifts out of `Aut X x S2`.
    pub witness_verified: bool,
}

impl Example21Report {
    pub fn holds(&self) -> bool {
        self.report.aut_x_order == BigUint::from(42u32)
            && self.report.aut_bx_order == BigUint::from(252u32)
            && self.report.connected
            && self.report.twin_free
            && !self.report.stable
            && self.witness_verified
    }
}

/// `Cay(G; {a^±1, x^±1, (ax)^±1})` on the nonabelian group of order 21.
pub fn reproduce_example_21() -> Example21Report {
    let spec: GroupSpec = EXAMPLE_21_GROUP.parse().expect("valid spec");
    let group = spec.build().expect("valid group");
    let set = ConnectionSet::parse(&group, EXAMPLE_21_SET).expect("valid set");
    let x = set.cayley_graph();
    let report = stability_check(&x);
    let witness_verified = match &report.witness {
        Some(w) => {
            let bx = double_cover(&x);
            let obvious = obvious_subgroup(&automorphism_group(&x));
            bx.is_automorphism(w.images()) && !obvious.contains(w).expect("degrees agree")
        }
        None => false,
    };
    Example21Report {
        set: set.describe(),
        report,
        witness_verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_cycle_is_stable() {
        let r = stability_check(&ColoredGraph::cycle(9));
        assert!(r.connected && r.twin_free && r.stable);
        assert_eq!(r.aut_x_order, BigUint::from(18u32));
        assert_eq!(r.aut_bx_order, BigUint::from(36u32));
        assert!(r.witness.is_none());
    }

    #[test]
    fn disconnected_is_unstable() {
        let g =
            ColoredGraph::uncolored(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = stability_check(&g);
        assert!(!r.stable);
        assert_eq!(r.reason.as_deref(), Some("disconnected"));
        assert!(r.witness.is_some());
    }

    #[test]
    fn twins_make_unstable() {
        let r = stability_check(&ColoredGraph::cycle(4));
        assert!(!r.stable);
        assert_eq!(r.reason.as_deref(), Some("has twins"));
        assert!(r.aut_bx_order > &r.aut_x_order * 2u32);
    }

    #[test]
    fn example_21() {
        let e = reproduce_example_21();
        assert_eq!(e.report.aut_x_order, BigUint::from(42u32));
        assert_eq!(e.report.aut_bx_order, BigUint::from(252u32));
        assert!(e.holds());
    }

    #[test]
    fn small_sweeps() {
        let s = theorem_sweep(&GroupSpec::Abelian(vec![7]), SweepOptions::default()).unwrap();
        assert_eq!(s.total, 8);
        assert_eq!(s.total, s.disconnected + s.has_twins + s.checked);
        assert!(s.holds());
        let s = theorem_sweep(&GroupSpec::Abelian(vec![3, 3]), SweepOptions::default()).unwrap();
        assert_eq!(s.total, 16);
        assert!(s.holds());
    }

    #[test]
    fn refused_groups() {
        assert!(matches!(
            theorem_sweep(&GroupSpec::Abelian(vec![4]), SweepOptions::default()),
            Err(Error::Refused(_))
        ));
        assert!(matches!(
            theorem_sweep(
                &GroupSpec::Semidirect { n: 7, m: 3, t: 2 },
                SweepOptions::default()
            ),
            Err(Error::Refused(_))
        ));
    }
}
