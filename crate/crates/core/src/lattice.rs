//! Lattices, the adjunct operation, and decomposition of dismantlable lattices
//! into adjuncts of chains.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::poset::{ElementId, Poset, PosetError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFailure {
    NoMeet,
    NoJoin,
    NonUniqueMeet,
    NonUniqueJoin,
}

impl fmt::Display for BoundFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFailure::NoMeet => "no-meet",
            BoundFailure::NoJoin => "no-join",
            BoundFailure::NonUniqueMeet => "non-unique meet",
            BoundFailure::NonUniqueJoin => "non-unique join",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("the empty poset is not a lattice")]
    Empty,
    #[error("not a lattice: elements {x} and {y} have {reason}")]
    NotALattice {
        x: ElementId,
        y: ElementId,
        reason: BoundFailure,
    },
    #[error("({a}, {b}) is not an adjunct pair: {reason}")]
    InvalidAdjunctPair {
        a: ElementId,
        b: ElementId,
        reason: &'static str,
    },
    #[error("the lattice is not dismantlable")]
    NotDismantlable,
    #[error("the chain {0:?} cannot serve as the base of an adjunct decomposition")]
    BaseNotCompatible(Vec<ElementId>),
    #[error("malformed adjunct decomposition: {0}")]
    MalformedDecomposition(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A finite lattice with precomputed meet and join tables.
#[derive(Debug, Clone)]
pub struct Lattice {
    poset: Poset,
    bottom: ElementId,
    top: ElementId,
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for Lattice {}

impl Lattice {
    /// Validates that every pair has a unique meet and join.
    pub fn new(poset: Poset) -> Result<Self, LatticeError> {
        let n = poset.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let m = greatest_common(&poset, x, y, Poset::down_bits).map_err(|empty| {
                    let reason = if empty {
                        BoundFailure::NoMeet
                    } else {
                        BoundFailure::NonUniqueMeet
                    };
                    LatticeError::NotALattice { x, y, reason }
                })?;
                let j = greatest_common(&poset, x, y, Poset::up_bits).map_err(|empty| {
                    let reason = if empty {
                        BoundFailure::NoJoin
                    } else {
                        BoundFailure::NonUniqueJoin
                    };
                    LatticeError::NotALattice { x, y, reason }
                })?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(Lattice {
            poset,
            bottom,
            top,
            meet,
            join,
        })
    }

    pub fn chain(n: usize) -> Self {
        Lattice::new(Poset::chain(n)).expect("a nonempty chain is a lattice")
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x * self.len() + y]
    }

    pub fn is_chain(&self) -> bool {
        self.poset.is_chain()
    }

    /// Induced subposet on `elems`, validated as a lattice. Element `elems[i]`
    /// becomes `i`.
    pub fn induced(&self, elems: &[ElementId]) -> Result<Lattice, LatticeError> {
        Lattice::new(self.poset.induced(elems))
    }

    /// Whether `elems` is closed under meet and join.
    pub fn is_sublattice(&self, elems: &[ElementId]) -> bool {
        let mut set = FixedBitSet::with_capacity(self.len());
        elems.iter().for_each(|&e| set.insert(e));
        elems.iter().all(|&x| {
            elems
                .iter()
                .all(|&y| set.contains(self.meet(x, y)) && set.contains(self.join(x, y)))
        })
    }
}

// Ok(greatest element of rows[x] ∩ rows[y]); Err(true) if the intersection is
// empty, Err(false) if it has no greatest element. Called with down rows this
// is the meet, with up rows (greatest in the reversed order) the join.
fn greatest_common(
    p: &Poset,
    x: ElementId,
    y: ElementId,
    rows: fn(&Poset, ElementId) -> &FixedBitSet,
) -> Result<ElementId, bool> {
    let mut common = rows(p, x).clone();
    common.intersect_with(rows(p, y));
    if common.is_clear() {
        return Err(true);
    }
    common
        .ones()
        .find(|&m| common.is_subset(rows(p, m)))
        .ok_or(false)
}

/// Shorthand for [`Lattice::new`].
pub fn validate_lattice(p: Poset) -> Result<Lattice, LatticeError> {
    Lattice::new(p)
}

/// The gap `(a, b)` an adjunct sum glues into: `a < b` and `a` is not covered by `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjunctPair {
    pub a: ElementId,
    pub b: ElementId,
}

impl AdjunctPair {
    pub fn new(a: ElementId, b: ElementId) -> Self {
        AdjunctPair { a, b }
    }

    pub fn check(&self, l: &Lattice) -> Result<(), LatticeError> {
        let AdjunctPair { a, b } = *self;
        let invalid = |reason| Err(LatticeError::InvalidAdjunctPair { a, b, reason });
        if a >= l.len() || b >= l.len() {
            return invalid("element out of range");
        }
        if !l.poset().lt(a, b) {
            return invalid("a is not below b");
        }
        if l.poset().is_cover(a, b) {
            return invalid("b covers a");
        }
        Ok(())
    }
}

/// `L1 ]_a^b L2`. Elements of `l2` are renumbered to `l1.len()..`; the new covers
/// are `a -< 0_2` and `1_2 -< b`.
pub fn adjunct_sum(l1: &Lattice, pair: AdjunctPair, l2: &Lattice) -> Result<Lattice, LatticeError> {
    pair.check(l1)?;
    let offset = l1.len();
    let mut covers = l1.poset().covers().to_vec();
    covers.extend(
        l2.poset()
            .covers()
            .iter()
            .map(|&(x, y)| (x + offset, y + offset)),
    );
    covers.push((pair.a, l2.bottom() + offset));
    covers.push((l2.top() + offset, pair.b));
    let mut poset = Poset::from_covers(offset + l2.len(), &covers)?;
    let labels: Vec<_> = l1
        .poset()
        .labels()
        .iter()
        .chain(l2.poset().labels())
        .cloned()
        .collect();
    if labels.iter().any(Option::is_some) {
        poset = poset.with_labels(labels)?;
    }
    Lattice::new(poset)
}

/// Element removal order of a greedy dismantling: at each step the smallest-id
/// doubly irreducible element of the remaining sublattice is removed. The lattice
/// is dismantlable iff the sequence has length `n - 1`.
pub fn dismantle_sequence(l: &Lattice) -> Vec<ElementId> {
    let p = l.poset();
    let mut alive = full_set(p.len());
    let mut removed = Vec::new();
    while alive.count_ones(..) > 1 {
        let cov = AliveCovers::new(p, &alive);
        let Some(x) = alive
            .ones()
            .find(|&x| cov.lower[x].len() <= 1 && cov.upper[x].len() <= 1)
        else {
            break;
        };
        alive.set(x, false);
        removed.push(x);
    }
    removed
}

pub fn is_dismantlable(l: &Lattice) -> bool {
    dismantle_sequence(l).len() + 1 == l.len()
}

/// A chain glued into the host through an adjunct pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    /// Bottom to top.
    pub chain: Vec<ElementId>,
    pub pair: AdjunctPair,
}

/// `L = C_0 ]_{a_1}^{b_1} C_1 ... ]_{a_k}^{b_k} C_k` over the ids of the source lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctDecomposition {
    /// `C_0`, bottom to top.
    pub base: Vec<ElementId>,
    /// In a valid gluing order.
    pub attachments: Vec<Attachment>,
}

impl AdjunctDecomposition {
    pub fn chain_count(&self) -> usize {
        1 + self.attachments.len()
    }

    pub fn element_count(&self) -> usize {
        self.base.len()
            + self
                .attachments
                .iter()
                .map(|a| a.chain.len())
                .sum::<usize>()
    }
}

/// Decomposes a dismantlable lattice into an adjunct of chains by repeatedly
/// detaching a maximal run of doubly irreducible elements that is an ear (its end
/// points stay comparable through some other element). Runs holding the largest
/// id go first, so the base chain prefers small ids.
pub fn adjunct_decompose(l: &Lattice) -> Result<AdjunctDecomposition, LatticeError> {
    let protected = FixedBitSet::with_capacity(l.len());
    let (base, ears) = peel_ears(l, &protected).ok_or(LatticeError::NotDismantlable)?;
    let attachments = canonical_order(l, &base_set(l, &base), ears);
    Ok(AdjunctDecomposition { base, attachments })
}

/// Like [`adjunct_decompose`] with `base` fixed as `C_0`. `base` must be a
/// maximal chain, listed bottom to top.
pub fn adjunct_decompose_with_base(
    l: &Lattice,
    base: &[ElementId],
) -> Result<AdjunctDecomposition, LatticeError> {
    let p = l.poset();
    let maximal = base.first() == Some(&l.bottom())
        && base.last() == Some(&l.top())
        && base.windows(2).all(|w| p.is_cover(w[0], w[1]));
    if !maximal {
        return Err(LatticeError::BaseNotCompatible(base.to_vec()));
    }
    let protected = base_set(l, base);
    let (found, ears) =
        peel_ears(l, &protected).ok_or_else(|| LatticeError::BaseNotCompatible(base.to_vec()))?;
    debug_assert_eq!(found, base);
    Ok(AdjunctDecomposition {
        base: base.to_vec(),
        attachments: canonical_order(l, &protected, ears),
    })
}

/// Every maximal run of doubly irreducible elements of `l` whose removal leaves
/// its end points comparable through another element, i.e. every chain that could
/// have been the last one glued on.
pub fn ear_runs(l: &Lattice) -> Vec<Attachment> {
    let p = l.poset();
    let alive = full_set(p.len());
    let cov = AliveCovers::new(p, &alive);
    let protected = FixedBitSet::with_capacity(p.len());
    let mut seen = FixedBitSet::with_capacity(p.len());
    let mut runs = Vec::new();
    for x in p.elements() {
        if seen.contains(x) {
            continue;
        }
        if let Some(run) = cov.run_through(p, &alive, &protected, x) {
            run.chain.iter().for_each(|&e| seen.insert(e));
            if cov.is_ear(p, &alive, &run) {
                runs.push(run);
            }
        }
    }
    runs
}

/// Glues the decomposition back together by a left fold of [`adjunct_sum`] and
/// renumbers the result to the decomposition's ids.
pub fn recompose(d: &AdjunctDecomposition) -> Result<Lattice, LatticeError> {
    let total = d.element_count();
    let mut fold_to_orig: Vec<ElementId> = d.base.clone();
    let mut orig_to_fold: Vec<Option<ElementId>> = vec![None; total];
    let claim = |orig: ElementId, fold: ElementId, map: &mut Vec<Option<ElementId>>| {
        if orig >= total || map[orig].is_some() {
            return Err(LatticeError::MalformedDecomposition(format!(
                "element {orig} is repeated or outside 0..{total}"
            )));
        }
        map[orig] = Some(fold);
        Ok(())
    };
    if d.base.is_empty() {
        return Err(LatticeError::MalformedDecomposition(
            "empty base chain".into(),
        ));
    }
    for (i, &e) in d.base.iter().enumerate() {
        claim(e, i, &mut orig_to_fold)?;
    }
    let mut lattice = Lattice::chain(d.base.len());
    for att in &d.attachments {
        let lookup = |e: ElementId| {
            orig_to_fold.get(e).copied().flatten().ok_or_else(|| {
                LatticeError::MalformedDecomposition(format!(
                    "pair end point {e} is not placed yet"
                ))
            })
        };
        let pair = AdjunctPair::new(lookup(att.pair.a)?, lookup(att.pair.b)?);
        if att.chain.is_empty() {
            return Err(LatticeError::MalformedDecomposition(
                "empty attachment chain".into(),
            ));
        }
        let offset = lattice.len();
        lattice = adjunct_sum(&lattice, pair, &Lattice::chain(att.chain.len()))?;
        for (k, &e) in att.chain.iter().enumerate() {
            claim(e, offset + k, &mut orig_to_fold)?;
            fold_to_orig.push(e);
        }
    }
    Lattice::new(lattice.poset().relabel(&fold_to_orig))
}

fn full_set(n: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

fn base_set(l: &Lattice, base: &[ElementId]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(l.len());
    base.iter().for_each(|&e| s.insert(e));
    s
}

/// Cover relation of the subposet induced on `alive`.
struct AliveCovers {
    lower: Vec<Vec<ElementId>>,
    upper: Vec<Vec<ElementId>>,
}

impl AliveCovers {
    fn new(p: &Poset, alive: &FixedBitSet) -> Self {
        let n = p.len();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for x in alive.ones() {
            let mut below = p.down_bits(x).clone();
            below.intersect_with(alive);
            below.set(x, false);
            for y in below.ones() {
                if p.up_bits(y).intersection(&below).count() == 1 {
                    lower[x].push(y);
                    upper[y].push(x);
                }
            }
        }
        for row in &mut upper {
            row.sort_unstable();
        }
        AliveCovers { lower, upper }
    }

    fn interior(&self, x: ElementId, protected: &FixedBitSet) -> bool {
        !protected.contains(x) && self.lower[x].len() == 1 && self.upper[x].len() == 1
    }

    /// The maximal run of unprotected doubly irreducible elements through `x`.
    fn run_through(
        &self,
        p: &Poset,
        alive: &FixedBitSet,
        protected: &FixedBitSet,
        x: ElementId,
    ) -> Option<Attachment> {
        if !alive.contains(x) || !self.interior(x, protected) {
            return None;
        }
        let mut bottom = x;
        while self.interior(self.lower[bottom][0], protected) {
            bottom = self.lower[bottom][0];
        }
        let mut chain = vec![bottom];
        let mut top = bottom;
        while self.interior(self.upper[top][0], protected) {
            top = self.upper[top][0];
            chain.push(top);
        }
        debug_assert!(chain.windows(2).all(|w| p.lt(w[0], w[1])));
        let pair = AdjunctPair::new(self.lower[bottom][0], self.upper[top][0]);
        Some(Attachment { chain, pair })
    }

    fn is_ear(&self, p: &Poset, alive: &FixedBitSet, run: &Attachment) -> bool {
        let AdjunctPair { a, b } = run.pair;
        let mut between = p.up_bits(a).clone();
        between.intersect_with(p.down_bits(b));
        between.intersect_with(alive);
        between.set(a, false);
        between.set(b, false);
        run.chain.iter().for_each(|&e| between.set(e, false));
        !between.is_clear()
    }
}

/// Detaches ears until only a chain is left. `None` if it gets stuck.
fn peel_ears(l: &Lattice, protected: &FixedBitSet) -> Option<(Vec<ElementId>, Vec<Attachment>)> {
    let p = l.poset();
    let mut alive = full_set(p.len());
    let mut ears = Vec::new();
    loop {
        let cov = AliveCovers::new(p, &alive);
        let is_chain = alive
            .ones()
            .all(|x| cov.lower[x].len() <= 1 && cov.upper[x].len() <= 1);
        if is_chain {
            let mut base = Vec::with_capacity(alive.count_ones(..));
            let mut cur = Some(l.bottom());
            while let Some(x) = cur {
                base.push(x);
                cur = cov.upper[x].first().copied();
            }
            return Some((base, ears));
        }
        let mut ones: Vec<ElementId> = alive.ones().collect();
        ones.reverse();
        let ear = ones.into_iter().find_map(|x| {
            cov.run_through(p, &alive, protected, x)
                .filter(|run| cov.is_ear(p, &alive, run))
        })?;
        ear.chain.iter().for_each(|&e| alive.set(e, false));
        ears.push(ear);
    }
}

/// Orders attachments by `(a, b, first element)`, subject to every pair being
/// valid at the moment its chain is glued on.
fn canonical_order(
    l: &Lattice,
    base: &FixedBitSet,
    mut pending: Vec<Attachment>,
) -> Vec<Attachment> {
    let p = l.poset();
    let mut placed = base.clone();
    let mut ordered = Vec::with_capacity(pending.len());
    pending.sort_by_key(|att| (att.pair, att.chain[0]));
    while !pending.is_empty() {
        let idx = pending
            .iter()
            .position(|att| {
                let AdjunctPair { a, b } = att.pair;
                if !placed.contains(a) || !placed.contains(b) {
                    return false;
                }
                let mut between = p.up_bits(a).clone();
                between.intersect_with(p.down_bits(b));
                between.intersect_with(&placed);
                between.count_ones(..) > 2
            })
            .expect("peeling order is always a valid gluing order");
        let att = pending.remove(idx);
        att.chain.iter().for_each(|&e| placed.insert(e));
        ordered.push(att);
    }
    ordered
}
