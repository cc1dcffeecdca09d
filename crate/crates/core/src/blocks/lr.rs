use crate::dimension::{two_realizer, LinearExtension, Realizer};
use crate::lattice::{AdjunctPair, Lattice};
use crate::poset::{ElementId, Poset};

use super::BlockError;

/// `C(n, 2)`.
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The complete fundamental basic block `L_r` on `r` comparable reducibles.
///
/// Ids follow the recursive construction: `L_1` is `A1 = 0`; step `q` appends
/// `x_{q-1}`, then `A_q`, then the ears `c_{C(q-1,2)+p}` on `(A_p, A_q)` for
/// `p = 1..q-1`. So `L_2` is `A1 = 0, x1 = 1, A2 = 2, c1 = 3`.
#[derive(Debug, Clone)]
pub struct LrBlock {
    r: usize,
    lattice: Lattice,
    a: Vec<ElementId>,
    x: Vec<ElementId>,
    c: Vec<ElementId>,
    pairs: Vec<AdjunctPair>,
}

/// Builds `L_r`, labelled `A1.., x1.., c1..`.
pub fn build_lr(r: usize) -> Result<LrBlock, BlockError> {
    if r == 0 {
        return Err(BlockError::RankTooSmall { r, min: 1 });
    }
    let mut covers = Vec::new();
    let mut a = vec![0];
    let mut x = Vec::new();
    let mut c = Vec::new();
    let mut pairs = Vec::new();
    let mut n = 1;
    for q in 2..=r {
        let (xq, aq) = (n, n + 1);
        covers.push((a[q - 2], xq));
        covers.push((xq, aq));
        for p in 1..q {
            let cp = n + 1 + p;
            covers.push((a[p - 1], cp));
            covers.push((cp, aq));
            c.push(cp);
            pairs.push(AdjunctPair::new(a[p - 1], aq));
        }
        x.push(xq);
        a.push(aq);
        n += q + 1;
    }
    let mut labels = vec![None; n];
    for (i, &e) in a.iter().enumerate() {
        labels[e] = Some(format!("A{}", i + 1));
    }
    for (i, &e) in x.iter().enumerate() {
        labels[e] = Some(format!("x{}", i + 1));
    }
    for (i, &e) in c.iter().enumerate() {
        labels[e] = Some(format!("c{}", i + 1));
    }
    let poset = Poset::from_covers(n, &covers)?.with_labels(labels)?;
    let lattice = Lattice::new(poset)?;
    Ok(LrBlock {
        r,
        lattice,
        a,
        x,
        c,
        pairs,
    })
}

impl LrBlock {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn poset(&self) -> &Poset {
        self.lattice.poset()
    }

    /// `A_k`, 1-based.
    pub fn a(&self, k: usize) -> ElementId {
        self.a[k - 1]
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> ElementId {
        self.x[i - 1]
    }

    /// `c_i`, 1-based.
    pub fn c(&self, i: usize) -> ElementId {
        self.c[i - 1]
    }

    /// `(a_i, b_i)`, 1-based.
    pub fn pair(&self, i: usize) -> AdjunctPair {
        self.pairs[i - 1]
    }

    pub fn ear_count(&self) -> usize {
        self.c.len()
    }

    /// Index `i` of the ear `c_i` on `(A_p, A_q)`, `p < q`.
    pub fn ear_index(p: usize, q: usize) -> usize {
        binom2(q - 1) + p
    }

    /// `A_1 -< x_1 -< A_2 -< ... -< x_{r-1} -< A_r`.
    pub fn chain(&self) -> Vec<ElementId> {
        let mut out = vec![self.a[0]];
        for (xi, ai) in self.x.iter().zip(&self.a[1..]) {
            out.push(*xi);
            out.push(*ai);
        }
        out
    }

    /// Checks size, nullity, the chain of reducibles, the covers around every ear,
    /// and the closed-form index identities for the end points `a_i`, `b_i`.
    pub fn check_invariants(&self) -> Result<(), String> {
        let r = self.r;
        let p = self.poset();
        let expect = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        expect(p.len() == (r * r + 3 * r - 2) / 2, "size")?;
        expect(p.nullity() == binom2(r), "nullity")?;
        let chain = self.chain();
        expect(
            chain.windows(2).all(|w| p.is_cover(w[0], w[1])),
            "chain covers",
        )?;
        expect(
            chain.first() == Some(&self.lattice.bottom()),
            "chain bottom",
        )?;
        expect(chain.last() == Some(&self.lattice.top()), "chain top")?;
        let mut reds = p.reducibles();
        reds.sort_unstable();
        let mut a_sorted = self.a.clone();
        a_sorted.sort_unstable();
        if r >= 2 {
            expect(reds == a_sorted, "reducibles are exactly the A_k")?;
        }
        for i in binom2(r - 1) + 1..=binom2(r) {
            let AdjunctPair { a, b } = self.pair(i);
            let ci = self.c(i);
            expect(p.is_cover(a, ci) && p.is_cover(ci, b), "a_i -< c_i -< b_i")?;
        }
        for i in 1..=binom2(r) {
            let AdjunctPair { a, b } = self.pair(i);
            expect(
                Some(a) == closed_form_a(r, i).map(|k| self.a(k)),
                "closed form a_i",
            )?;
            expect(
                Some(b) == closed_form_b(r, i).map(|k| self.a(k)),
                "closed form b_i",
            )?;
        }
        for k in 1..=r {
            let a_count = self.pairs.iter().filter(|q| q.a == self.a(k)).count();
            let b_count = self.pairs.iter().filter(|q| q.b == self.a(k)).count();
            expect(
                a_count == r - k && b_count == k - 1,
                "a_i and b_i multiplicities",
            )?;
        }
        Ok(())
    }
}

/// `k` with `a_i = A_k`, from the index lists `a_{C(j,2)+k} = A_k` for `j = k..r-1`.
pub fn closed_form_a(r: usize, i: usize) -> Option<usize> {
    (1..r).find(|&k| (k..r).any(|j| binom2(j) + k == i))
}

/// `k` with `b_i = A_k`, from `b_{C(k-1,2)+1} = ... = b_{C(k,2)} = A_k`.
pub fn closed_form_b(r: usize, i: usize) -> Option<usize> {
    (2..=r).find(|&k| binom2(k - 1) < i && i <= binom2(k))
}

/// `(|L_r|, nullity, reducible count)` by formula, cross-checked against the built
/// lattice. The reducible count of `L_1` is reported as 1 by the labelling
/// convention although its single element has no covers.
pub fn lr_stats(r: usize) -> Result<(usize, usize, usize), BlockError> {
    let stats = ((r * r + 3 * r - 2) / 2, binom2(r), r);
    let block = build_lr(r)?;
    let built_reds = if r == 1 {
        1
    } else {
        block.poset().reducibles().len()
    };
    let built = (block.poset().len(), block.poset().nullity(), built_reds);
    if built != stats {
        return Err(BlockError::Inconsistent(format!(
            "L_{r}: formula {stats:?}, built {built:?}"
        )));
    }
    Ok(stats)
}

/// Largest `r` for which [`lr_realizer`] has a construction.
pub const LR_REALIZER_MAX_RANK: usize = 12;

// For the ear c_i on (A_p, A_q), i = C(q-1, 2) + p, the gap g (between A_g and
// A_{g+1}, p <= g < q) it occupies in each of the three extensions. Restricting to
// ears with q <= r gives the construction for L_r.
#[rustfmt::skip]
const EAR_GAPS: [[u8; 3]; 66] = [
    [1, 1, 1],
    [2, 1, 2], [2, 2, 2],
    [3, 1, 3], [3, 3, 2], [3, 3, 3],
    [4, 4, 1], [4, 4, 2], [3, 4, 4], [4, 4, 4],
    [5, 5, 1], [4, 5, 2], [3, 5, 5], [4, 5, 4], [5, 5, 5],
    [6, 6, 1], [4, 6, 2], [3, 6, 3], [4, 6, 4], [6, 5, 6], [6, 6, 6],
    [1, 7, 7], [2, 7, 7], [3, 7, 7], [7, 4, 7], [7, 5, 7], [6, 6, 7], [7, 7, 7],
    [8, 1, 8], [2, 7, 8], [3, 7, 8], [7, 4, 8], [7, 5, 8], [6, 6, 8], [8, 8, 7], [8, 8, 8],
    [9, 9, 1], [2, 7, 9], [3, 6, 9], [9, 4, 8], [7, 5, 9], [6, 6, 9], [9, 8, 7], [9, 8, 8], [9, 9, 9],
    [10, 10, 1], [10, 3, 2], [10, 3, 3], [10, 4, 8], [10, 5, 7], [10, 6, 6], [9, 10, 7], [10, 8, 8], [9, 10, 9], [10, 10, 10],
    [1, 11, 11], [2, 11, 2], [11, 3, 3], [8, 4, 11], [6, 5, 11], [6, 6, 11], [8, 11, 7], [8, 11, 8], [9, 11, 9], [10, 10, 11], [11, 11, 11],
];

/// Three linear extensions realizing `L_r` for `5 <= r <= 12`.
///
/// Each extension lists `A_1, ..., A_r` and drops every ear into one gap between
/// consecutive `A`s, following `EAR_GAPS`. Inside a gap the ears are sorted by
/// `p + q` descending, then by `q` descending; `x_g` sits next to the ear on
/// `(A_g, A_{g+1})`, after it in the first extension and before it in the others.
pub fn lr_realizer(block: &LrBlock) -> Result<Realizer, BlockError> {
    let r = block.r();
    if r < 5 {
        return Err(BlockError::RankTooSmall { r, min: 5 });
    }
    if r > LR_REALIZER_MAX_RANK {
        return Err(BlockError::RankTooLarge {
            r,
            max: LR_REALIZER_MAX_RANK,
        });
    }
    let exts = (0..3)
        .map(|k| {
            let mut gaps: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r];
            for q in 2..=r {
                for p in 1..q {
                    let g = EAR_GAPS[LrBlock::ear_index(p, q) - 1][k] as usize;
                    gaps[g].push((p, q));
                }
            }
            let mut order = Vec::with_capacity(block.poset().len());
            for g in 1..=r {
                order.push(block.a(g));
                if g == r {
                    break;
                }
                let ears = &mut gaps[g];
                ears.sort_by_key(|&(p, q)| std::cmp::Reverse((p + q, q)));
                for &(p, q) in ears.iter() {
                    let c = block.c(LrBlock::ear_index(p, q));
                    if q == p + 1 && k == 0 {
                        order.extend([c, block.x(p)]);
                    } else if q == p + 1 {
                        order.extend([block.x(p), c]);
                    } else {
                        order.push(c);
                    }
                }
            }
            LinearExtension::new(order)
        })
        .collect();
    Ok(Realizer::new(exts))
}

/// A smallest realizer of `L_r` that is known without search: the chain for
/// `r = 1`, the conjugate-order pair for `r = 2..4`, and the three extensions of
/// [`lr_realizer`] up to rank 12. `None` beyond that.
pub fn lr_witness(block: &LrBlock) -> Option<Realizer> {
    match block.r() {
        1 => Some(Realizer::new(vec![LinearExtension::new(vec![0])])),
        2..=4 => Some(two_realizer(block.poset()).expect("L_2, L_3 and L_4 are planar")),
        _ => lr_realizer(block).ok(),
    }
}

/// Whether `map` (an injection from `q`'s ids into `p`'s ids) carries the covers
/// of `q` exactly onto the covers of the subposet of `p` it lands on.
pub fn is_embedding_onto_induced(q: &Poset, p: &Poset, map: &[ElementId]) -> bool {
    let mut seen = vec![false; p.len()];
    if map.len() != q.len()
        || map
            .iter()
            .any(|&x| x >= p.len() || std::mem::replace(&mut seen[x], true))
    {
        return false;
    }
    let image = p.induced(map);
    let mut mapped = q.covers().to_vec();
    mapped.sort_unstable();
    mapped == image.covers()
}

/// The map from `L_i` into `(A_i]` of `L_r`, by labels.
pub fn lower_embedding(big: &LrBlock, small: &LrBlock) -> Vec<ElementId> {
    let mut map = vec![0; small.poset().len()];
    for k in 1..=small.r() {
        map[small.a(k)] = big.a(k);
    }
    for i in 1..small.r() {
        map[small.x(i)] = big.x(i);
    }
    for i in 1..=small.ear_count() {
        map[small.c(i)] = big.c(i);
    }
    map
}

/// The map from `L_{r-i+1}` onto `[A_i)` of `L_r`: indices shift by `i - 1`.
pub fn upper_embedding(big: &LrBlock, small: &LrBlock, i: usize) -> Vec<ElementId> {
    let s = i - 1;
    let mut map = vec![0; small.poset().len()];
    for k in 1..=small.r() {
        map[small.a(k)] = big.a(k + s);
    }
    for j in 1..small.r() {
        map[small.x(j)] = big.x(j + s);
    }
    for q in 2..=small.r() {
        for p in 1..q {
            map[small.c(LrBlock::ear_index(p, q))] = big.c(LrBlock::ear_index(p + s, q + s));
        }
    }
    map
}
