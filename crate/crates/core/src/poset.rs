//! Finite posets stored as a Hasse diagram plus a cached comparability closure.
//!
//! Elements are dense indices `0..n`. A [`Poset`] is immutable once built: every
//! constructor computes the transitive reduction (the cover relation) and the
//! reflexive-transitive closure as one bit row per element, so all order queries
//! are O(1) bit lookups.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

/// Index of an element inside a [`Poset`].
pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("element {id} is out of range for a poset on {n} elements")]
    IdOutOfRange { id: ElementId, n: usize },
    #[error("the relation is not an order: element {0} lies on a cycle")]
    CycleDetected(ElementId),
    #[error("interval ({a}, {b}) is undefined: {a} is not strictly below {b}")]
    IntervalUndefined { a: ElementId, b: ElementId },
    #[error("label {0:?} is used by more than one element")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("crown search refused: {n} elements exceeds the cap of {cap}")]
    SearchCapExceeded { n: usize, cap: usize },
}

/// A pair dropped while reducing an input relation to its cover relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationWarning {
    /// `(a, b)` is implied by transitivity through other pairs.
    Redundant(ElementId, ElementId),
    /// `(a, a)`; reflexivity is implicit.
    Reflexive(ElementId),
}

/// Default element cap for [`Poset::find_crown`].
pub const DEFAULT_CROWN_CAP: usize = 20;

/// A crown `x_1 < y_1 > x_2 < y_2 > ... > x_n < y_n > x_1` (with `n >= 3`) found
/// as an induced subposet: these are its only comparabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrownWitness {
    pub xs: Vec<ElementId>,
    pub ys: Vec<ElementId>,
}

impl CrownWitness {
    /// Checks the crown pattern against `p`, including the absence of any extra
    /// comparability among the `2n` elements.
    pub fn is_valid_in(&self, p: &Poset) -> bool {
        let k = self.xs.len();
        if k < 3 || self.ys.len() != k {
            return false;
        }
        let mut seen = HashSet::new();
        if !self
            .xs
            .iter()
            .chain(&self.ys)
            .all(|&e| e < p.len() && seen.insert(e))
        {
            return false;
        }
        for i in 0..k {
            for j in 0..k {
                if i != j
                    && (!p.incomparable(self.xs[i], self.xs[j])
                        || !p.incomparable(self.ys[i], self.ys[j]))
                {
                    return false;
                }
                let expected = j == i || j + 1 == i || (i == 0 && j == k - 1);
                if p.lt(self.xs[i], self.ys[j]) != expected || p.lt(self.ys[j], self.xs[i]) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    covers: Vec<(ElementId, ElementId)>,
    upper: Vec<Vec<ElementId>>,
    lower: Vec<Vec<ElementId>>,
    // up[x] = [x), down[x] = (x]
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    labels: Vec<Option<String>>,
}

/// Structural equality: same size and same cover relation. Labels are ignored.
impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from a relation, reducing it to covers. Transitively implied
    /// and reflexive pairs are dropped silently; use
    /// [`Poset::from_covers_with_warnings`] to see them.
    pub fn from_covers(n: usize, pairs: &[(ElementId, ElementId)]) -> Result<Self, PosetError> {
        Self::from_covers_with_warnings(n, pairs).map(|(p, _)| p)
    }

    pub fn from_covers_with_warnings(
        n: usize,
        pairs: &[(ElementId, ElementId)],
    ) -> Result<(Self, Vec<RelationWarning>), PosetError> {
        let mut warnings = Vec::new();
        let mut succ = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(a, b) in pairs {
            for id in [a, b] {
                if id >= n {
                    return Err(PosetError::IdOutOfRange { id, n });
                }
            }
            if a == b {
                warnings.push(RelationWarning::Reflexive(a));
                continue;
            }
            if seen.insert((a, b)) {
                succ[a].push(b);
            }
        }

        let topo = topological_order(n, &succ)?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(x);
            for &s in &succ[x] {
                row.union_with(&up[s]);
            }
            up[x] = row;
        }

        let mut covers = Vec::new();
        for (a, targets) in succ.iter().enumerate() {
            for &b in targets {
                let implied = targets.iter().any(|&w| w != b && up[w].contains(b));
                if implied {
                    warnings.push(RelationWarning::Redundant(a, b));
                } else {
                    covers.push((a, b));
                }
            }
        }
        Ok((Self::assemble(n, covers, up, vec![None; n]), warnings))
    }

    /// Builds a poset from a closure matrix that is already known to be a partial
    /// order (`up[x]` holds every `y` with `x <= y`).
    fn from_closure(up: Vec<FixedBitSet>, labels: Vec<Option<String>>) -> Self {
        let n = up.len();
        let mut strict_down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones().filter(|&y| y != x) {
                strict_down[y].insert(x);
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            let mut above = up[x].clone();
            above.set(x, false);
            for y in above.ones() {
                // x -< y iff nothing lies strictly between them
                if above.is_disjoint(&strict_down[y]) {
                    covers.push((x, y));
                }
            }
        }
        Self::assemble(n, covers, up, labels)
    }

    fn assemble(
        n: usize,
        mut covers: Vec<(ElementId, ElementId)>,
        up: Vec<FixedBitSet>,
        labels: Vec<Option<String>>,
    ) -> Self {
        covers.sort_unstable();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper[a].push(b);
            lower[b].push(a);
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        Poset {
            n,
            covers,
            upper,
            lower,
            up,
            down,
            labels,
        }
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &pairs).expect("a chain is an order")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_covers(n, &[]).expect("an antichain is an order")
    }

    /// The crown on `2k` elements, `x_i = 2i` and `y_i = 2i + 1`.
    pub fn crown(k: usize) -> Self {
        assert!(k >= 2, "a crown needs at least two minimal elements");
        let mut pairs = Vec::new();
        for i in 0..k {
            pairs.push((2 * i, 2 * i + 1));
            pairs.push((2 * ((i + 1) % k), 2 * i + 1));
        }
        Self::from_covers(2 * k, &pairs).expect("a crown is an order")
    }

    /// Attaches labels; `labels.len()` must equal the size and labels must be unique.
    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self, PosetError> {
        if labels.len() != self.n {
            return Err(PosetError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for l in labels.iter().flatten() {
            if !seen.insert(l.as_str()) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.n
    }

    /// Cover pairs `(lower, upper)`, sorted lexicographically.
    pub fn covers(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: ElementId) -> &[ElementId] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: ElementId) -> &[ElementId] {
        &self.lower[x]
    }

    pub fn is_cover(&self, a: ElementId, b: ElementId) -> bool {
        self.upper[a].binary_search(&b).is_ok()
    }

    pub fn label(&self, x: ElementId) -> Option<&str> {
        self.labels[x].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Looks an element up by label.
    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    /// Label if present, otherwise the decimal id.
    pub fn display_name(&self, x: ElementId) -> String {
        self.label(x).map_or_else(|| x.to_string(), str::to_owned)
    }

    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn incomparable(&self, x: ElementId, y: ElementId) -> bool {
        !self.comparable(x, y)
    }

    /// `[x)` as a bit row.
    pub fn up_bits(&self, x: ElementId) -> &FixedBitSet {
        &self.up[x]
    }

    /// `(x]` as a bit row.
    pub fn down_bits(&self, x: ElementId) -> &FixedBitSet {
        &self.down[x]
    }

    /// `(a]`
    pub fn down_set(&self, a: ElementId) -> Vec<ElementId> {
        self.down[a].ones().collect()
    }

    /// `[a)`
    pub fn up_set(&self, a: ElementId) -> Vec<ElementId> {
        self.up[a].ones().collect()
    }

    /// `D(a)`
    pub fn strict_down(&self, a: ElementId) -> Vec<ElementId> {
        self.down[a].ones().filter(|&x| x != a).collect()
    }

    /// `U(a)`
    pub fn strict_up(&self, a: ElementId) -> Vec<ElementId> {
        self.up[a].ones().filter(|&x| x != a).collect()
    }

    /// `I(a)`
    pub fn incomparables_of(&self, a: ElementId) -> Vec<ElementId> {
        (0..self.n).filter(|&x| self.incomparable(a, x)).collect()
    }

    /// `(a, b) = { x : a < x < b }`; defined only when `a < b`.
    pub fn open_interval(&self, a: ElementId, b: ElementId) -> Result<Vec<ElementId>, PosetError> {
        for id in [a, b] {
            if id >= self.n {
                return Err(PosetError::IdOutOfRange { id, n: self.n });
            }
        }
        if !self.lt(a, b) {
            return Err(PosetError::IntervalUndefined { a, b });
        }
        let mut between = self.up[a].clone();
        between.intersect_with(&self.down[b]);
        Ok(between.ones().filter(|&x| x != a && x != b).collect())
    }

    pub fn is_doubly_irreducible(&self, x: ElementId) -> bool {
        self.lower[x].len() <= 1 && self.upper[x].len() <= 1
    }

    /// `Irr(P)`
    pub fn irreducibles(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.is_doubly_irreducible(x))
            .collect()
    }

    /// `Red(P) = P \ Irr(P)`
    pub fn reducibles(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| !self.is_doubly_irreducible(x))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.lower[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| self.upper[x].is_empty())
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|x| self.up[x].count_ones(..) + self.down[x].count_ones(..) == self.n + 1)
    }

    /// Connected components of the undirected cover graph.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in self.elements() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in self.upper[x].iter().chain(&self.lower[x]) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Cycle rank of the cover graph: `|E| - |V| + c`.
    pub fn nullity(&self) -> usize {
        self.covers.len() + self.component_count() - self.n
    }

    /// Size of a maximum antichain, via Dilworth: `n` minus a maximum matching in
    /// the strict comparability bipartite graph.
    pub fn width(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let mut match_right: Vec<Option<ElementId>> = vec![None; self.n];
        let mut matched = 0;
        for x in self.elements() {
            let mut visited = vec![false; self.n];
            if self.augment(x, &mut visited, &mut match_right) {
                matched += 1;
            }
        }
        self.n - matched
    }

    fn augment(
        &self,
        x: ElementId,
        visited: &mut [bool],
        match_right: &mut [Option<ElementId>],
    ) -> bool {
        for y in self.up[x].ones() {
            if y == x || visited[y] {
                continue;
            }
            visited[y] = true;
            if match_right[y].is_none_or(|x2| self.augment(x2, visited, match_right)) {
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }

    /// Searches for a crown with [`DEFAULT_CROWN_CAP`].
    pub fn find_crown(&self) -> Result<Option<CrownWitness>, PosetError> {
        self.find_crown_with_cap(DEFAULT_CROWN_CAP)
    }

    /// Exhaustive crown search. Posets larger than `cap` are refused; pass
    /// `usize::MAX` to force the search.
    pub fn find_crown_with_cap(&self, cap: usize) -> Result<Option<CrownWitness>, PosetError> {
        if self.n > cap {
            return Err(PosetError::SearchCapExceeded { n: self.n, cap });
        }
        let mut path = Vec::new();
        let mut used = FixedBitSet::with_capacity(self.n);
        for x1 in self.elements() {
            // x1 is the smallest-id minimal element of the crown
            if self.upper[x1].is_empty() {
                continue;
            }
            path.push(x1);
            used.insert(x1);
            if self.extend_crown(&mut path, &mut used) {
                let xs = path.iter().step_by(2).copied().collect();
                let ys = path.iter().skip(1).step_by(2).copied().collect();
                return Ok(Some(CrownWitness { xs, ys }));
            }
            path.pop();
            used.set(x1, false);
        }
        Ok(None)
    }

    // path = [x1, y1, x2, y2, ...]; every element is comparable only to its
    // neighbours on the path.
    fn extend_crown(&self, path: &mut Vec<ElementId>, used: &mut FixedBitSet) -> bool {
        let last = *path.last().expect("path starts with x1");
        let x1 = path[0];
        let next_is_y = path.len() % 2 == 1;
        let candidates: Vec<ElementId> = if next_is_y {
            self.up[last].ones().filter(|&e| e != last).collect()
        } else {
            self.down[last]
                .ones()
                .filter(|&e| e != last && e > x1)
                .collect()
        };
        for e in candidates {
            if used.contains(e) {
                continue;
            }
            // only `last` (and x1, when closing) may be comparable to e
            let prev = &path[..path.len() - 1];
            let closes = next_is_y && path.len() > 1 && self.lt(x1, e);
            let clean = prev
                .iter()
                .all(|&q| self.incomparable(q, e) || (closes && q == x1));
            if !clean {
                continue;
            }
            if closes {
                // e = y_k closing the cycle; k = (len + 1) / 2
                if path.len() + 1 >= 6 {
                    path.push(e);
                    return true;
                }
                continue;
            }
            path.push(e);
            used.insert(e);
            if self.extend_crown(path, used) {
                return true;
            }
            path.pop();
            used.set(e, false);
        }
        false
    }

    /// Induced subposet on `elems`; element `elems[i]` becomes `i`.
    pub fn induced(&self, elems: &[ElementId]) -> Poset {
        let k = elems.len();
        let mut up = vec![FixedBitSet::with_capacity(k); k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if self.leq(x, y) {
                    up[i].insert(j);
                }
            }
        }
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        Poset::from_closure(up, labels)
    }

    /// Renames element `x` to `perm[x]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[ElementId]) -> Poset {
        assert_eq!(perm.len(), self.n, "relabel needs one target per element");
        let mut inverse = vec![usize::MAX; self.n];
        for (old, &new) in perm.iter().enumerate() {
            assert!(
                new < self.n && inverse[new] == usize::MAX,
                "relabel target is not a permutation"
            );
            inverse[new] = old;
        }
        let mut up = vec![FixedBitSet::with_capacity(self.n); self.n];
        for x in self.elements() {
            for y in self.up[x].ones() {
                up[perm[x]].insert(perm[y]);
            }
        }
        let labels = inverse
            .iter()
            .map(|&old| self.labels[old].clone())
            .collect();
        Poset::from_closure(up, labels)
    }

    /// A topological order of the elements (smallest available id first).
    pub fn topological_order(&self) -> Vec<ElementId> {
        topological_order(self.n, &self.upper).expect("posets are acyclic")
    }
}

/// `M ⊕ N`: every element of `m` below every element of `n`. Elements of `n` are
/// shifted by `m.len()`; new covers join each maximal element of `m` to each
/// minimal element of `n`.
pub fn direct_sum(m: &Poset, n: &Poset) -> Poset {
    let offset = m.len();
    let size = offset + n.len();
    let mut pairs: Vec<_> = m.covers().to_vec();
    pairs.extend(n.covers().iter().map(|&(a, b)| (a + offset, b + offset)));
    for a in m.maximal_elements() {
        for b in n.minimal_elements() {
            pairs.push((a, b + offset));
        }
    }
    let labels = m.labels().iter().chain(n.labels()).cloned().collect();
    let sum = Poset::from_covers(size, &pairs).expect("a direct sum of orders is an order");
    // disjoint operands may still share label text; keep labels only when unique
    sum.clone().with_labels(labels).unwrap_or(sum)
}

fn topological_order(n: usize, succ: &[Vec<ElementId>]) -> Result<Vec<ElementId>, PosetError> {
    let mut indegree = vec![0usize; n];
    for targets in succ {
        for &b in targets {
            indegree[b] += 1;
        }
    }
    let mut ready: std::collections::BTreeSet<ElementId> =
        (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop_first() {
        order.push(x);
        for &b in &succ[x] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.insert(b);
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n)
            .find(|&x| indegree[x] > 0)
            .expect("some element is left over");
        return Err(PosetError::CycleDetected(stuck));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        // 0 = bottom, 1 = x, 2 = c, 3 = top
        Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn from_covers_reduces_and_warns() {
        let p = Poset::from_covers(2, &[(0, 1)]).unwrap();
        assert!(p.is_chain());
        assert_eq!(p.covers(), &[(0, 1)]);

        let (p, w) = Poset::from_covers_with_warnings(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(w, vec![RelationWarning::Redundant(0, 2)]);
    }

    #[test]
    fn from_covers_rejects_cycles_and_bad_ids() {
        assert!(matches!(
            Poset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(PosetError::CycleDetected(_))
        ));
        assert_eq!(
            Poset::from_covers(2, &[(0, 2)]),
            Err(PosetError::IdOutOfRange { id: 2, n: 2 })
        );
    }

    #[test]
    fn duplicates_and_reflexive_pairs_are_tolerated() {
        let (p, w) = Poset::from_covers_with_warnings(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1)]);
        assert_eq!(w, vec![RelationWarning::Reflexive(1)]);
    }

    #[test]
    fn order_queries() {
        let c = Poset::chain(3);
        assert!(c.leq(0, 2));
        assert!(!c.leq(2, 0));
        assert!(Poset::antichain(2).incomparable(0, 1));
        assert!(diamond().incomparable(1, 2));
        assert_eq!(c.strict_down(2), vec![0, 1]);
        assert_eq!(c.down_set(1), vec![0, 1]);
        assert_eq!(c.strict_up(0), vec![1, 2]);
    }

    #[test]
    fn intervals() {
        let d = diamond();
        assert_eq!(d.open_interval(0, 3).unwrap(), vec![1, 2]);
        assert_eq!(
            d.open_interval(1, 2),
            Err(PosetError::IntervalUndefined { a: 1, b: 2 })
        );
        assert_eq!(
            d.open_interval(3, 0),
            Err(PosetError::IntervalUndefined { a: 3, b: 0 })
        );
        assert_eq!(d.incomparables_of(1), vec![2]);
    }

    #[test]
    fn irreducibles_and_nullity() {
        let c = Poset::chain(5);
        assert_eq!(c.irreducibles().len(), 5);
        assert_eq!(c.nullity(), 0);
        let d = diamond();
        assert_eq!(d.reducibles(), vec![0, 3]);
        assert_eq!(d.nullity(), 1);
        assert_eq!(Poset::antichain(3).nullity(), 0);
    }

    #[test]
    fn width_values() {
        assert_eq!(Poset::antichain(4).width(), 4);
        assert_eq!(diamond().width(), 2);
        assert_eq!(Poset::chain(6).width(), 1);
        assert_eq!(Poset::crown(3).width(), 3);
    }

    #[test]
    fn crowns() {
        assert_eq!(diamond().find_crown().unwrap(), None);
        let crown = Poset::crown(3);
        let w = crown.find_crown().unwrap().expect("the hexagon is a crown");
        assert_eq!(w.xs.len(), 3);
        assert!(w.is_valid_in(&crown));
        // four-element crowns do not count
        assert_eq!(Poset::crown(2).find_crown().unwrap(), None);
        let big = Poset::crown(4);
        assert!(big.find_crown().unwrap().unwrap().is_valid_in(&big));
        assert_eq!(
            Poset::antichain(21).find_crown(),
            Err(PosetError::SearchCapExceeded {
                n: 21,
                cap: DEFAULT_CROWN_CAP
            })
        );
        assert_eq!(
            Poset::antichain(21).find_crown_with_cap(usize::MAX),
            Ok(None)
        );
    }

    #[test]
    fn direct_sums() {
        let s = direct_sum(&Poset::chain(2), &Poset::chain(2));
        assert_eq!(s, Poset::chain(4));
        let s = direct_sum(&Poset::antichain(2), &Poset::chain(1));
        assert_eq!(s.covers(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn induced_and_relabel() {
        let d = diamond();
        let sub = d.induced(&[0, 1, 3]);
        assert_eq!(sub, Poset::chain(3));
        let r = d.relabel(&[3, 1, 2, 0]);
        assert_eq!(r.covers(), &[(1, 0), (2, 0), (3, 1), (3, 2)]);
    }

    #[test]
    fn labels_must_be_unique() {
        let p = Poset::chain(2);
        assert_eq!(
            p.with_labels(vec![Some("a".into()), Some("a".into())])
                .unwrap_err(),
            PosetError::DuplicateLabel("a".into())
        );
        let p = Poset::chain(2)
            .with_labels(vec![Some("lo".into()), None])
            .unwrap();
        assert_eq!(p.find_label("lo"), Some(0));
        assert_eq!(p.display_name(1), "1");
    }
}
