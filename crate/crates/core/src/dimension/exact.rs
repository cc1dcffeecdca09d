use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::poset::{ElementId, Poset};

use super::{
    verify_realizer, DimensionError, DimensionReport, LinearExtension, LinearExtensions, Method,
    Realizer,
};

pub const DEFAULT_EXTENSION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Give up once no realizer of this size exists.
    pub max_dim: usize,
    /// Refuse posets with more linear extensions than this.
    pub max_extensions: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            max_dim: usize::MAX,
            max_extensions: DEFAULT_EXTENSION_CAP,
        }
    }
}

/// Exact dimension by exhaustive search over the linear extensions.
///
/// Dimension two is decided by looking for two extensions with complementary
/// orientations of every incomparable pair. Beyond that the search is a set cover
/// over critical pairs: a family is a realizer iff each critical pair `(a, b)` has
/// some member putting `b` before `a`.
pub fn dimension_exact(p: &Poset, opts: &ExactOptions) -> Result<DimensionReport, DimensionError> {
    let report = |dim: usize, exts: Vec<LinearExtension>, method| {
        let witness = Realizer::new(exts);
        debug_assert_eq!(verify_realizer(p, &witness), Ok(()));
        Ok(DimensionReport {
            dim,
            witness,
            method,
            planar: None,
        })
    };
    if p.is_chain() {
        return report(
            1,
            vec![LinearExtension::new(p.topological_order())],
            Method::Chain,
        );
    }
    if opts.max_dim < 2 {
        return Err(DimensionError::DimensionAboveLimit {
            max_dim: opts.max_dim,
        });
    }

    let pairs: Vec<(ElementId, ElementId)> = (0..p.len())
        .flat_map(|x| (x + 1..p.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| p.incomparable(x, y))
        .collect();
    let critical: Vec<(ElementId, ElementId)> = (0..p.len())
        .flat_map(|a| (0..p.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| is_critical(p, a, b))
        .collect();

    let mut first_with: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut crit_sigs: Vec<(FixedBitSet, usize)> = Vec::new();
    let mut crit_seen: HashMap<FixedBitSet, ()> = HashMap::new();
    let mut exts = Vec::new();
    for ext in LinearExtensions::new(p) {
        if exts.len() == opts.max_extensions {
            return Err(DimensionError::ExtensionCapExceeded {
                cap: opts.max_extensions,
            });
        }
        let pos = ext
            .positions(p.len())
            .expect("enumerated extensions are permutations");
        let idx = exts.len();
        let mut sig = FixedBitSet::with_capacity(pairs.len());
        for (k, &(x, y)) in pairs.iter().enumerate() {
            sig.set(k, pos[x] < pos[y]);
        }
        first_with.entry(sig).or_insert(idx);
        let mut crit = FixedBitSet::with_capacity(critical.len());
        for (k, &(a, b)) in critical.iter().enumerate() {
            crit.set(k, pos[b] < pos[a]);
        }
        if crit_seen.insert(crit.clone(), ()).is_none() {
            crit_sigs.push((crit, idx));
        }
        exts.push(ext);
    }

    // dimension two: a pair of extensions with complementary signatures
    let mut best: Option<(usize, usize)> = None;
    for (sig, &i) in &first_with {
        let mut comp = sig.clone();
        comp.toggle_range(..);
        if let Some(&j) = first_with.get(&comp) {
            let cand = (i.min(j), i.max(j));
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
    }
    if let Some((i, j)) = best {
        return report(
            2,
            vec![exts[i].clone(), exts[j].clone()],
            Method::BruteForce,
        );
    }

    // keep only signatures not strictly contained in another
    let maximal: Vec<&(FixedBitSet, usize)> = crit_sigs
        .iter()
        .filter(|(s, _)| !crit_sigs.iter().any(|(o, _)| o != s && s.is_subset(o)))
        .collect();
    let sets: Vec<&FixedBitSet> = maximal.iter().map(|(s, _)| s).collect();
    let limit = opts.max_dim.min(critical.len().max(2));
    for t in 3..=limit {
        let mut chosen = Vec::with_capacity(t);
        let uncovered = {
            let mut u = FixedBitSet::with_capacity(critical.len());
            u.insert_range(..);
            u
        };
        if cover(&sets, uncovered, t, &mut chosen) {
            let witness = chosen.iter().map(|&s| exts[maximal[s].1].clone()).collect();
            return report(t, witness, Method::BruteForce);
        }
    }
    Err(DimensionError::DimensionAboveLimit {
        max_dim: opts.max_dim,
    })
}

// D(a) ⊆ D(b) and U(b) ⊆ U(a) for incomparable a, b.
fn is_critical(p: &Poset, a: ElementId, b: ElementId) -> bool {
    if !p.incomparable(a, b) {
        return false;
    }
    let mut da = p.down_bits(a).clone();
    da.set(a, false);
    let mut ub = p.up_bits(b).clone();
    ub.set(b, false);
    da.is_subset(p.down_bits(b)) && ub.is_subset(p.up_bits(a))
}

// Depth-limited exact cover search: branch on the uncovered element hit by the
// fewest sets.
fn cover(
    sets: &[&FixedBitSet],
    uncovered: FixedBitSet,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if uncovered.is_clear() {
        return true;
    }
    if chosen.len() == budget {
        return false;
    }
    let pick = uncovered
        .ones()
        .map(|e| (sets.iter().filter(|s| s.contains(e)).count(), e))
        .min()
        .expect("nonempty");
    if pick.0 == 0 {
        return false;
    }
    for (i, s) in sets.iter().enumerate() {
        if !s.contains(pick.1) {
            continue;
        }
        let mut rest = uncovered.clone();
        rest.difference_with(s);
        chosen.push(i);
        if cover(sets, rest, budget, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
