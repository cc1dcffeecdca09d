use std::collections::BTreeMap;

use crate::lattice::{AdjunctPair, Lattice};
use crate::poset::{ElementId, Poset};

use super::BlockError;

/// The pieces of an RC-lattice around a maximal chain `K` through all reducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcSkeleton {
    /// Maximal chain through every reducible, bottom to top.
    pub chain: Vec<ElementId>,
    /// The reducibles in increasing order.
    pub reducibles: Vec<ElementId>,
    /// `runs[j]`: the chain elements strictly between `reducibles[j]` and `reducibles[j + 1]`.
    pub runs: Vec<Vec<ElementId>>,
    /// Chain elements below the least reducible.
    pub below: Vec<ElementId>,
    /// Chain elements above the greatest reducible.
    pub above: Vec<ElementId>,
    /// Components off the chain, each a chain glued onto a pair of reducibles,
    /// sorted by `(pair, first element)`.
    pub ears: Vec<(Vec<ElementId>, AdjunctPair)>,
}

/// `Some((x, y))` for two incomparable reducibles, `None` if the reducibles form a chain.
pub fn incomparable_reducibles(p: &Poset) -> Option<(ElementId, ElementId)> {
    let reds = p.reducibles();
    reds.iter()
        .enumerate()
        .flat_map(|(i, &x)| reds[i + 1..].iter().map(move |&y| (x, y)))
        .find(|&(x, y)| p.incomparable(x, y))
}

impl RcSkeleton {
    /// The chain `K` picks, between consecutive reducibles, the smallest-id upper
    /// cover that stays below the next target.
    pub fn of(l: &Lattice) -> Result<RcSkeleton, BlockError> {
        let p = l.poset();
        if let Some((x, y)) = incomparable_reducibles(p) {
            return Err(BlockError::NotRc { x, y });
        }
        let mut reducibles = p.reducibles();
        reducibles.sort_by_key(|&x| p.down_bits(x).count_ones(..));

        let mut chain = vec![l.bottom()];
        let mut cur = l.bottom();
        let mut next_red = reducibles.iter().peekable();
        while cur != l.top() {
            while next_red.peek().is_some_and(|&&t| !p.lt(cur, t)) {
                next_red.next();
            }
            let target = next_red.peek().map_or(l.top(), |&&t| t);
            cur = *p
                .upper_covers(cur)
                .iter()
                .filter(|&&u| p.leq(u, target))
                .min()
                .expect("some upper cover lies below the target");
            chain.push(cur);
        }

        let mut on_chain = vec![false; p.len()];
        chain.iter().for_each(|&e| on_chain[e] = true);
        let is_red = |e: ElementId| reducibles.contains(&e);
        let mut runs = Vec::new();
        let mut below = Vec::new();
        let mut above = Vec::new();
        let mut seen_red = 0;
        let mut run = Vec::new();
        for &e in &chain {
            if is_red(e) {
                if seen_red > 0 {
                    runs.push(std::mem::take(&mut run));
                }
                seen_red += 1;
            } else if seen_red == 0 {
                below.push(e);
            } else {
                run.push(e);
            }
        }
        above.extend(run);
        if reducibles.is_empty() {
            // a chain: everything counts as hanging below
            above.clear();
        }

        let mut ears = Vec::new();
        for &k in &chain {
            for &start in p.upper_covers(k) {
                if on_chain[start] {
                    continue;
                }
                let mut ear = vec![start];
                let mut top = start;
                loop {
                    let ups = p.upper_covers(top);
                    debug_assert_eq!(ups.len(), 1, "off-chain elements are doubly irreducible");
                    if on_chain[ups[0]] {
                        ears.push((ear, AdjunctPair::new(k, ups[0])));
                        break;
                    }
                    top = ups[0];
                    ear.push(top);
                }
            }
        }
        ears.sort_by_key(|(ear, pair)| (*pair, ear[0]));
        Ok(RcSkeleton {
            chain,
            reducibles,
            runs,
            below,
            above,
            ears,
        })
    }

    fn has_ear_on(&self, pair: AdjunctPair) -> bool {
        self.ears.iter().any(|(_, q)| *q == pair)
    }
}

/// `C ]_{a_1}^{b_1} {c_1} ... ]_{a_k}^{b_k} {c_k}` over ids of a source lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicBlockForm {
    /// Bottom to top; holds every reducible.
    pub chain: Vec<ElementId>,
    /// Singleton ears, sorted by `(pair, element)`.
    pub ears: Vec<(ElementId, AdjunctPair)>,
}

impl BasicBlockForm {
    /// Every element of the block, ascending.
    pub fn elements(&self) -> Vec<ElementId> {
        let mut all: Vec<ElementId> = self
            .chain
            .iter()
            .copied()
            .chain(self.ears.iter().map(|e| e.0))
            .collect();
        all.sort_unstable();
        all
    }

    pub fn len(&self) -> usize {
        self.chain.len() + self.ears.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The block as a lattice in its own right; element `elements()[i]` becomes `i`.
    pub fn to_lattice(&self, source: &Lattice) -> Result<Lattice, BlockError> {
        Ok(source.induced(&self.elements())?)
    }

    /// Number of distinct pairs whose open interval in the block is all doubly irreducible.
    pub fn irreducible_interval_pairs(&self, block: &Poset) -> usize {
        let index = self.index();
        let mut pairs: Vec<AdjunctPair> = self.ears.iter().map(|e| e.1).collect();
        pairs.dedup();
        pairs
            .iter()
            .filter(|q| {
                block
                    .open_interval(index[&q.a], index[&q.b])
                    .is_ok_and(|iv| iv.iter().all(|&e| block.is_doubly_irreducible(e)))
            })
            .count()
    }

    /// The four identities characterizing an RC basic block of nullity `k`:
    /// singleton ears, `n = |C| + k`, `|Irr| = k + m`, `|C| = |Red| + m`, where `m`
    /// counts distinct pairs with an all-irreducible interval. The one-point block of
    /// a chain passes trivially.
    pub fn check_identities(&self, source: &Lattice) -> Result<(), String> {
        let block = self.to_lattice(source).map_err(|e| e.to_string())?;
        let b = block.poset();
        if self.ears.is_empty() {
            // a chain collapses to a point, which is not a block
            return if b.len() == 1 {
                Ok(())
            } else {
                Err("earless block with more than one element".into())
            };
        }
        let k = self.ears.len();
        let m = self.irreducible_interval_pairs(b);
        let red = b.reducibles().len();
        let checks = [
            (b.len() == self.chain.len() + k, "n = |C| + k"),
            (b.nullity() == k, "nullity = k"),
            (b.irreducibles().len() == k + m, "|Irr| = k + m"),
            (self.chain.len() == red + m, "|C| = |Red| + m"),
            (b.len() == red + m + k, "n = r + m + k"),
        ];
        match checks.iter().find(|c| !c.0) {
            Some((_, what)) => Err(format!("identity fails: {what}")),
            None => Ok(()),
        }
    }

    fn index(&self) -> BTreeMap<ElementId, ElementId> {
        self.elements()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect()
    }
}

/// The basic block of an RC-lattice: each ear shrinks to its lowest id, each
/// chain run between consecutive reducibles shrinks to its lowest id when the two
/// reducibles carry an ear and disappears otherwise, and the pendant chain ends
/// are dropped. A chain reduces to its bottom element.
pub fn basic_block_of_rc(l: &Lattice) -> Result<BasicBlockForm, BlockError> {
    let sk = RcSkeleton::of(l)?;
    Ok(basic_block_of_skeleton(&sk))
}

pub fn basic_block_of_skeleton(sk: &RcSkeleton) -> BasicBlockForm {
    if sk.reducibles.is_empty() {
        return BasicBlockForm {
            chain: vec![sk.chain[0]],
            ears: Vec::new(),
        };
    }
    let mut chain = vec![sk.reducibles[0]];
    for (j, run) in sk.runs.iter().enumerate() {
        let pair = AdjunctPair::new(sk.reducibles[j], sk.reducibles[j + 1]);
        if !run.is_empty() && sk.has_ear_on(pair) {
            chain.push(*run.iter().min().expect("nonempty"));
        }
        chain.push(sk.reducibles[j + 1]);
    }
    let mut ears: Vec<(ElementId, AdjunctPair)> = sk
        .ears
        .iter()
        .map(|(ear, pair)| (*ear.iter().min().expect("nonempty"), *pair))
        .collect();
    ears.sort_by_key(|&(c, pair)| (pair, c));
    BasicBlockForm { chain, ears }
}

/// Keeps the lowest-id ear of every distinct pair. The chain element between two
/// consecutive reducibles, where present, already plays the part of the second
/// ear on an all-irreducible interval.
pub fn fundamental_basic_block_of(b: &BasicBlockForm) -> BasicBlockForm {
    let mut ears: Vec<(ElementId, AdjunctPair)> = Vec::new();
    let mut sorted = b.ears.clone();
    sorted.sort_by_key(|&(c, pair)| (pair, c));
    for (c, pair) in sorted {
        if ears.last().is_none_or(|last| last.1 != pair) {
            ears.push((c, pair));
        }
    }
    BasicBlockForm {
        chain: b.chain.clone(),
        ears,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::build_lr;
    use crate::lattice::{adjunct_sum, recompose, AdjunctDecomposition, Attachment};

    fn diamond() -> Lattice {
        Lattice::new(Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()).unwrap()
    }

    #[test]
    fn diamond_is_basic() {
        let d = diamond();
        let b = basic_block_of_rc(&d).unwrap();
        assert_eq!(
            b,
            BasicBlockForm {
                chain: vec![0, 1, 3],
                ears: vec![(2, AdjunctPair::new(0, 3))]
            }
        );
        b.check_identities(&d).unwrap();
        assert_eq!(fundamental_basic_block_of(&b), b);
    }

    #[test]
    fn long_chain_and_ear_shrink() {
        let d = AdjunctDecomposition {
            base: (0..6).collect(),
            attachments: vec![Attachment {
                chain: vec![6, 7, 8],
                pair: AdjunctPair::new(0, 5),
            }],
        };
        let l = recompose(&d).unwrap();
        let b = basic_block_of_rc(&l).unwrap();
        assert_eq!(b.chain, vec![0, 1, 5]);
        assert_eq!(b.ears, vec![(6, AdjunctPair::new(0, 5))]);
        b.check_identities(&l).unwrap();
        assert_eq!(b.len(), b.chain.len() + 1);
    }

    #[test]
    fn pendants_go() {
        // chain 0 < ... < 6 with ears 7 on (1, 3) and 8 on (3, 5); 0 and 6 hang off the ends
        let d = AdjunctDecomposition {
            base: (0..7).collect(),
            attachments: vec![
                Attachment {
                    chain: vec![7],
                    pair: AdjunctPair::new(1, 3),
                },
                Attachment {
                    chain: vec![8],
                    pair: AdjunctPair::new(3, 5),
                },
            ],
        };
        let l = recompose(&d).unwrap();
        let sk = RcSkeleton::of(&l).unwrap();
        assert_eq!((sk.below.clone(), sk.above.clone()), (vec![0], vec![6]));
        let b = basic_block_of_rc(&l).unwrap();
        assert_eq!(b.chain, vec![1, 2, 3, 4, 5]);
        b.check_identities(&l).unwrap();
        let bl = b.to_lattice(&l).unwrap();
        assert_eq!(bl.poset().nullity(), l.poset().nullity());
        let elems = b.elements();
        let mut red_b: Vec<_> = bl
            .poset()
            .reducibles()
            .into_iter()
            .map(|i| elems[i])
            .collect();
        red_b.sort_unstable();
        assert_eq!(red_b, vec![1, 3, 5]);
    }

    #[test]
    fn run_without_ear_collapses_to_a_cover() {
        // reducibles 0, 2, 4, 6; nothing else joins 2 and 4, so 3 goes
        let d = AdjunctDecomposition {
            base: (0..7).collect(),
            attachments: vec![
                Attachment {
                    chain: vec![7],
                    pair: AdjunctPair::new(0, 2),
                },
                Attachment {
                    chain: vec![8],
                    pair: AdjunctPair::new(4, 6),
                },
            ],
        };
        let l = recompose(&d).unwrap();
        let b = basic_block_of_rc(&l).unwrap();
        assert_eq!(b.chain, vec![0, 1, 2, 4, 5, 6]);
        b.check_identities(&l).unwrap();
    }

    #[test]
    fn repeated_pairs_thin_out() {
        let d = diamond();
        let m3 = adjunct_sum(&d, AdjunctPair::new(0, 3), &Lattice::chain(1)).unwrap();
        let m4 = adjunct_sum(&m3, AdjunctPair::new(0, 3), &Lattice::chain(1)).unwrap();
        let b = basic_block_of_rc(&m4).unwrap();
        assert_eq!(b.ears.len(), 3);
        b.check_identities(&m4).unwrap();
        let f = fundamental_basic_block_of(&b);
        assert_eq!(
            f,
            BasicBlockForm {
                chain: vec![0, 1, 3],
                ears: vec![(2, AdjunctPair::new(0, 3))]
            }
        );
        assert_eq!(fundamental_basic_block_of(&f), f);
        assert_eq!(
            basic_block_of_rc(&b.to_lattice(&m4).unwrap())
                .unwrap()
                .ears
                .len(),
            3
        );
    }

    #[test]
    fn lr_is_its_own_block() {
        for r in 1..=6 {
            let block = build_lr(r).unwrap();
            let b = basic_block_of_rc(block.lattice()).unwrap();
            assert_eq!(b.len(), block.poset().len());
            assert_eq!(fundamental_basic_block_of(&b), b);
            if r > 1 {
                b.check_identities(block.lattice()).unwrap();
            }
        }
    }

    #[test]
    fn not_rc() {
        let mut covers = Vec::new();
        for s in 0..8usize {
            for bit in 0..3 {
                if s & (1 << bit) == 0 {
                    covers.push((s, s | (1 << bit)));
                }
            }
        }
        let b3 = Lattice::new(Poset::from_covers(8, &covers).unwrap()).unwrap();
        assert!(matches!(
            basic_block_of_rc(&b3),
            Err(BlockError::NotRc { .. })
        ));
    }
}
