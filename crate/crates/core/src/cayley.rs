//! Coloured connection sets, Cayley graphs and the scaling map `S -> kS`.
//!
//! `Cay(G; S)` joins `g` and `h` whenever `g = s h` for some `s` in `S`. Edge
//! labels are sets of colours: ordinary colourings use singletons, and scaling
//! merges the colours of every preimage of an element.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::group::FiniteGroup;
use crate::perm::{automorphism_group, Permutation};

pub type ColorSet = BTreeSet<u32>;

/// An inverse-closed subset of a group with a colour set on each member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet<'g> {
    group: &'g FiniteGroup,
    colors: BTreeMap<usize, ColorSet>,
}

impl<'g> ConnectionSet<'g> {
    /// Uncoloured set (every member gets colour 0).
    pub fn new(group: &'g FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::with_colors(group, members.into_iter().map(|s| (s, 0)))
    }

    pub fn with_colors(
        group: &'g FiniteGroup,
        members: impl IntoIterator<Item = (usize, u32)>,
    ) -> Result<Self> {
        let mut colors: BTreeMap<usize, ColorSet> = BTreeMap::new();
        for (s, c) in members {
            let set = colors.entry(s).or_default();
            set.insert(c);
            if set.len() > 1 {
                return Err(Error::InvalidConnectionSet(format!(
                    "element {} given two colours",
                    group.name(s.min(group.order() - 1))
                )));
            }
        }
        Self::with_color_sets(group, colors)
    }

    pub fn with_color_sets(
        group: &'g FiniteGroup,
        colors: BTreeMap<usize, ColorSet>,
    ) -> Result<Self> {
        for (&s, set) in &colors {
            if s >= group.order() {
                return Err(Error::InvalidElement {
                    index: s,
                    order: group.order(),
                });
            }
            if set.is_empty() {
                return Err(Error::InvalidConnectionSet(format!(
                    "{} has an empty colour set",
                    group.name(s)
                )));
            }
            let inv = group.inverse_of(s);
            match colors.get(&inv) {
                None => {
                    return Err(Error::InvalidConnectionSet(format!(
                        "{} is present but its inverse {} is not",
                        group.name(s),
                        group.name(inv)
                    )))
                }
                Some(other) if other != set => {
                    return Err(Error::InvalidConnectionSet(format!(
                        "{} and its inverse {} have different colours",
                        group.name(s),
                        group.name(inv)
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(ConnectionSet { group, colors })
    }

    /// Parses `1,-1@0,2,-2@1`: a tag `@c` colours its own element and every
    /// untagged element since the previous tag; trailing untagged elements get
    /// colour 0. The set must already be inverse-closed.
    pub fn parse(group: &'g FiniteGroup, text: &str) -> Result<Self> {
        let mut members: Vec<(usize, u32)> = Vec::new();
        let mut pending: Vec<usize> = Vec::new();
        for token in split_top_level(text) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            match token.rsplit_once('@') {
                Some((element, color)) => {
                    let color: u32 = color
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad colour in {token:?}")))?;
                    pending.push(group.parse_element(element)?);
                    members.extend(pending.drain(..).map(|s| (s, color)));
                }
                None => pending.push(group.parse_element(token)?),
            }
        }
        members.extend(pending.into_iter().map(|s| (s, 0)));
        Self::with_colors(group, members)
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.colors.keys().copied()
    }

    pub fn contains(&self, s: usize) -> bool {
        self.colors.contains_key(&s)
    }

    pub fn color(&self, s: usize) -> Option<&ColorSet> {
        self.colors.get(&s)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Whether more than one distinct colour label occurs.
    pub fn is_colored(&self) -> bool {
        self.colors.values().collect::<BTreeSet<_>>().len() > 1
    }

    /// Members grouped by colour label.
    pub fn color_classes(&self) -> BTreeMap<&ColorSet, Vec<usize>> {
        let mut classes: BTreeMap<&ColorSet, Vec<usize>> = BTreeMap::new();
        for (s, c) in &self.colors {
            classes.entry(c).or_default().push(*s);
        }
        classes
    }

    /// Display strings: element names, with `@c` suffixes when coloured.
    pub fn describe(&self) -> Vec<String> {
        let colored = self.is_colored() || self.colors.values().any(|c| c != &ColorSet::from([0]));
        self.colors
            .iter()
            .map(|(&s, c)| {
                let name = self.group.name(s);
                if !colored {
                    name.to_string()
                } else if c.len() == 1 {
                    format!("{name}@{}", c.first().unwrap())
                } else {
                    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    format!("{name}@{{{}}}", parts.join(","))
                }
            })
            .collect()
    }

    /// The Cayley graph; distinct colour sets become distinct edge colours.
    pub fn cayley_graph(&self) -> ColoredGraph {
        let g = self.group;
        let mut labels: BTreeMap<(usize, usize), ColorSet> = BTreeMap::new();
        for h in g.elements() {
            for (&s, c) in &self.colors {
                let target = g.op(s, h);
                labels
                    .entry((h.min(target), h.max(target)))
                    .or_default()
                    .extend(c.iter().copied());
            }
        }
        ColoredGraph::from_labeled(g.order(), labels.into_iter().map(|((u, v), l)| (u, v, l)))
            .expect("Cayley graph edges are in range")
    }

    /// `kS = { s^k }`, where each image carries the union of its preimages' colours.
    pub fn scaled(&self, k: i64) -> ConnectionSet<'g> {
        let mut colors: BTreeMap<usize, ColorSet> = BTreeMap::new();
        for (&s, c) in &self.colors {
            colors
                .entry(self.group.pow(s, k))
                .or_default()
                .extend(c.iter().copied());
        }
        ConnectionSet {
            group: self.group,
            colors,
        }
    }

    /// Evaluates the injectivity hypotheses of the scaling lemma for `k`.
    pub fn scaling_hypothesis(&self, k: i64) -> ScalingHypothesis {
        let injective_on = |members: &[usize]| {
            let images: BTreeSet<usize> = members.iter().map(|&s| self.group.pow(s, k)).collect();
            images.len() == members.len()
        };
        let all: Vec<usize> = self.members().collect();
        ScalingHypothesis {
            k,
            injective: injective_on(&all),
            colorwise_injective: self
                .color_classes()
                .values()
                .all(|class| injective_on(class)),
            coprime_to_order: (k.unsigned_abs() as usize).gcd(&self.group.order()) == 1,
        }
    }

    /// Same set with every colour replaced by 0.
    pub fn uncolored(&self) -> ConnectionSet<'g> {
        ConnectionSet {
            group: self.group,
            colors: self
                .colors
                .keys()
                .map(|&s| (s, ColorSet::from([0])))
                .collect(),
        }
    }
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// Injectivity of `s -> s^k` on the whole set and on each colour class, plus the
/// sufficient condition `gcd(k, |G|) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingHypothesis {
    pub k: i64,
    pub injective: bool,
    pub colorwise_injective: bool,
    pub coprime_to_order: bool,
}

impl ScalingHypothesis {
    /// The colourwise condition, which is all the lemma needs.
    pub fn holds(&self) -> bool {
        self.colorwise_injective
    }
}

/// Whether one generator of `Aut Cay(G; S)` is also an automorphism of `Cay(G; kS)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub generator: Permutation,
    pub preserved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingLemmaReport {
    pub k: i64,
    pub hypothesis: ScalingHypothesis,
    pub scaled: Vec<String>,
    pub checks: Vec<GeneratorCheck>,
}

impl ScalingLemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.preserved)
    }
}

/// Checks every generator of `Aut Cay(G; S)` against `Cay(G; kS)`.
pub fn verify_scaling_lemma(set: &ConnectionSet<'_>, k: i64) -> Result<ScalingLemmaReport> {
    if !set.group().is_abelian() {
        return Err(Error::Precondition(
            "the scaling lemma needs an abelian group".into(),
        ));
    }
    if k < 1 {
        return Err(Error::Precondition(format!(
            "k must be a positive integer, got {k}"
        )));
    }
    let hypothesis = set.scaling_hypothesis(k);
    if !hypothesis.holds() {
        return Err(Error::Precondition(format!(
            "s -> {k}s is not injective on every colour class"
        )));
    }
    let scaled = set.scaled(k);
    let target = scaled.cayley_graph();
    let group = automorphism_group(&set.cayley_graph());
    let checks = group
        .generators()
        .iter()
        .map(|p| GeneratorCheck {
            generator: p.clone(),
            preserved: target.is_automorphism(p.images()),
        })
        .collect();
    Ok(ScalingLemmaReport {
        k,
        hypothesis,
        scaled: scaled.describe(),
        checks,
    })
}

/// The right translation `v -> v g`, an automorphism of every Cayley graph on the
/// group under the rule `g = s h`.
pub fn right_translation(group: &FiniteGroup, g: usize) -> Permutation {
    Permutation::from_images(group.elements().map(|v| group.op(v, g)).collect())
        .expect("group rows are permutations")
}

/// The `S x {1}` subset of `G x Z2` (pairs numbered `2 g + i`), whose Cayley graph
/// is the canonical double cover of `Cay(G; S)`.
pub fn lift_to_double<'h>(
    set: &ConnectionSet<'_>,
    doubled: &'h FiniteGroup,
) -> Result<ConnectionSet<'h>> {
    if doubled.order() != 2 * set.group().order() {
        return Err(Error::InvalidParameter("the target must be G x Z2".into()));
    }
    let colors = set
        .colors
        .iter()
        .map(|(&s, c)| (2 * s + 1, c.clone()))
        .collect();
    ConnectionSet::with_color_sets(doubled, colors)
}
