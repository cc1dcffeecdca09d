use std::ops::RangeInclusive;

use crate::lattice::{adjunct_sum, AdjunctPair, Lattice};
use crate::poset::ElementId;

use super::{verify_realizer, DimensionError, LinearExtension, Realizer};

/// Bounds on `Dim(L1 ]_a^b L2)` from `m = Dim(L1)` and `n = Dim(L2)`.
pub fn adjunct_dimension_bounds(m: usize, n: usize) -> RangeInclusive<usize> {
    if m >= n {
        m..=m + 1
    } else {
        n..=n
    }
}

/// The weaker bounds `max(m, n) <= Dim <= max(2m, m + n)`.
pub fn adjunct_dimension_loose_bounds(m: usize, n: usize) -> RangeInclusive<usize> {
    m.max(n)..=(2 * m).max(m + n)
}

/// A realizer of `L1 ]_a^b L2` (ids as produced by [`adjunct_sum`]) built from
/// realizers of the two parts. It has `m + 1` extensions when `m >= n` and `n`
/// otherwise.
pub fn adjunct_realizer(
    l1: &Lattice,
    r1: &Realizer,
    pair: AdjunctPair,
    l2: &Lattice,
    r2: &Realizer,
) -> Result<Realizer, DimensionError> {
    pair.check(l1)?;
    verify_realizer(l1.poset(), r1).map_err(DimensionError::InvalidRealizer)?;
    verify_realizer(l2.poset(), r2).map_err(DimensionError::InvalidRealizer)?;
    let p1 = l1.poset();
    let offset = l1.len();
    let AdjunctPair { a, b } = pair;
    let es: Vec<&[ElementId]> = r1.extensions.iter().map(|e| e.order()).collect();
    let fs: Vec<Vec<ElementId>> = r2
        .extensions
        .iter()
        .map(|f| f.order().iter().map(|&y| y + offset).collect())
        .collect();
    let (m, n) = (es.len(), fs.len());
    let in_down_a = |x: ElementId| p1.leq(x, a);
    let in_up_b = |x: ElementId| p1.leq(b, x);

    // M1 = E((a] ∪ I) ⊕ F1 ⊕ E([b)),  M2 = E((a]) ⊕ F2 ⊕ E(I ∪ [b))
    let e = es[0];
    let mut m1: Vec<ElementId> = e.iter().copied().filter(|&x| !in_up_b(x)).collect();
    m1.extend(&fs[0]);
    m1.extend(e.iter().copied().filter(|&x| in_up_b(x)));
    let f2 = if n == 1 { &fs[0] } else { &fs[1] };
    let mut m2: Vec<ElementId> = e.iter().copied().filter(|&x| in_down_a(x)).collect();
    m2.extend(f2);
    m2.extend(e.iter().copied().filter(|&x| !in_down_a(x)));

    let mut out = vec![LinearExtension::new(m1), LinearExtension::new(m2)];
    if m >= n {
        for (i, e_i) in es.iter().enumerate().skip(1) {
            let f = fs.get(i + 1).unwrap_or(&fs[0]);
            out.push(LinearExtension::new(insert_after(e_i, a, f)));
        }
    } else {
        for (j, f_j) in fs.iter().enumerate().skip(2) {
            let e_j = es.get(j - 1).copied().unwrap_or(es[0]);
            out.push(LinearExtension::new(insert_after(e_j, a, f_j)));
        }
    }
    Ok(Realizer::new(out))
}

fn insert_after(order: &[ElementId], at: ElementId, block: &[ElementId]) -> Vec<ElementId> {
    let mut out = Vec::with_capacity(order.len() + block.len());
    for &x in order {
        out.push(x);
        if x == at {
            out.extend(block);
        }
    }
    out
}

/// A run `a -< d_1 -< ... -< d_k -< b` of doubly irreducible elements such that
/// some other element also lies strictly between `a` and `b`. The run with the
/// smallest `d_1` is returned.
pub fn doubly_irreducible_run(l: &Lattice, pair: AdjunctPair) -> Option<Vec<ElementId>> {
    let p = l.poset();
    let AdjunctPair { a, b } = pair;
    if a >= p.len() || b >= p.len() || !p.lt(a, b) || p.is_cover(a, b) {
        return None;
    }
    let interval = p.open_interval(a, b).ok()?;
    p.upper_covers(a).iter().find_map(|&d1| {
        let mut run = vec![d1];
        let mut cur = d1;
        loop {
            if !(p.lower_covers(cur).len() == 1 && p.upper_covers(cur).len() == 1) {
                return None;
            }
            let up = p.upper_covers(cur)[0];
            if up == b {
                break;
            }
            run.push(up);
            cur = up;
        }
        (interval.len() > run.len()).then_some(run)
    })
}

/// Moves the elements of `run` (a chain of doubly irreducible elements) next to
/// its first element in every extension. Every element outside the run is
/// comparable to all of it or to none of it, so the result is still a realizer.
pub fn compress_run(r: &Realizer, run: &[ElementId]) -> Realizer {
    let first = run[0];
    let exts = r
        .extensions
        .iter()
        .map(|e| {
            let mut out = Vec::with_capacity(e.len());
            for &x in e.order() {
                if x == first {
                    out.extend_from_slice(run);
                } else if !run.contains(&x) {
                    out.push(x);
                }
            }
            LinearExtension::new(out)
        })
        .collect();
    Realizer::new(exts)
}

/// For an adjunct pair `(a, b)` already carrying an ear of doubly irreducible
/// elements, glues a chain of `chain_len` elements onto the same pair and
/// returns the new lattice with a realizer of the same size as `r`.
///
/// The ear is made contiguous in every extension, then the new chain is placed
/// immediately below it in the first extension and immediately above it in the
/// others, so it inherits the ear's relations to everything else.
pub fn adjunct_on_existing_pair_realizer(
    l: &Lattice,
    r: &Realizer,
    pair: AdjunctPair,
    chain_len: usize,
) -> Result<(Lattice, Realizer), DimensionError> {
    if l.is_chain() {
        return Err(DimensionError::ChainHost);
    }
    verify_realizer(l.poset(), r).map_err(DimensionError::InvalidRealizer)?;
    let run = doubly_irreducible_run(l, pair).ok_or(DimensionError::PairNotAdjunct {
        a: pair.a,
        b: pair.b,
    })?;
    let extended = adjunct_sum(l, pair, &Lattice::chain(chain_len.max(1)))?;
    let chain: Vec<ElementId> = (l.len()..extended.len()).collect();
    let compressed = compress_run(r, &run);
    let last = *run.last().expect("nonempty run");
    let exts = compressed
        .extensions
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut out = Vec::with_capacity(extended.len());
            for &x in e.order() {
                if i == 0 && x == run[0] {
                    out.extend(&chain);
                }
                out.push(x);
                if i > 0 && x == last {
                    out.extend(&chain);
                }
            }
            LinearExtension::new(out)
        })
        .collect();
    Ok((extended, Realizer::new(exts)))
}

#[cfg(test)]
mod tests {
    use super::super::{dimension_exact, two_realizer, ExactOptions};
    use super::*;
    use crate::poset::Poset;

    fn diamond() -> Lattice {
        Lattice::new(Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()).unwrap()
    }

    fn chain_realizer(n: usize) -> Realizer {
        Realizer::new(vec![LinearExtension::new((0..n).collect())])
    }

    #[test]
    fn bounds() {
        assert_eq!(adjunct_dimension_bounds(2, 2), 2..=3);
        assert_eq!(adjunct_dimension_bounds(1, 3), 3..=3);
        assert_eq!(adjunct_dimension_bounds(3, 1), 3..=4);
        assert_eq!(adjunct_dimension_loose_bounds(3, 1), 3..=6);
        assert_eq!(adjunct_dimension_loose_bounds(1, 3), 3..=4);
    }

    #[test]
    fn chain_into_chain() {
        let c3 = Lattice::chain(3);
        let pair = AdjunctPair::new(0, 2);
        let r = adjunct_realizer(
            &c3,
            &chain_realizer(3),
            pair,
            &Lattice::chain(1),
            &chain_realizer(1),
        )
        .unwrap();
        let l = adjunct_sum(&c3, pair, &Lattice::chain(1)).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(verify_realizer(l.poset(), &r), Ok(()));
    }

    #[test]
    fn diamond_gets_a_third_atom() {
        let d = diamond();
        let rd = two_realizer(d.poset()).unwrap();
        let pair = AdjunctPair::new(0, 3);
        let r = adjunct_realizer(&d, &rd, pair, &Lattice::chain(1), &chain_realizer(1)).unwrap();
        let m3 = adjunct_sum(&d, pair, &Lattice::chain(1)).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(verify_realizer(m3.poset(), &r), Ok(()));

        let (m3b, r2) = adjunct_on_existing_pair_realizer(&d, &rd, pair, 1).unwrap();
        assert_eq!(m3b, m3);
        assert_eq!(r2.len(), 2);
        assert_eq!(verify_realizer(m3.poset(), &r2), Ok(()));
        assert_eq!(
            dimension_exact(m3.poset(), &ExactOptions::default())
                .unwrap()
                .dim,
            2
        );
    }

    #[test]
    fn larger_second_operand() {
        // the diamond glued into the gap of a 3-chain: m = 1 < n = 2
        let c3 = Lattice::chain(3);
        let d = diamond();
        let pair = AdjunctPair::new(0, 2);
        let r = adjunct_realizer(
            &c3,
            &chain_realizer(3),
            pair,
            &d,
            &two_realizer(d.poset()).unwrap(),
        )
        .unwrap();
        let l = adjunct_sum(&c3, pair, &d).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(verify_realizer(l.poset(), &r), Ok(()));
    }

    #[test]
    fn existing_pair_errors() {
        let c = Lattice::chain(4);
        assert_eq!(
            adjunct_on_existing_pair_realizer(&c, &chain_realizer(4), AdjunctPair::new(0, 3), 1),
            Err(DimensionError::ChainHost)
        );
        let d = diamond();
        let rd = two_realizer(d.poset()).unwrap();
        assert_eq!(
            adjunct_on_existing_pair_realizer(&d, &rd, AdjunctPair::new(0, 1), 1),
            Err(DimensionError::PairNotAdjunct { a: 0, b: 1 })
        );
    }

    #[test]
    fn long_ear_is_compressed() {
        // base 0 < 1 < 5, ear 2 < 3 < 4 on (0, 5); glue a 2-chain beside the ear
        let p = Poset::from_covers(6, &[(0, 1), (1, 5), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let l = Lattice::new(p).unwrap();
        let r = two_realizer(l.poset()).unwrap();
        assert_eq!(
            doubly_irreducible_run(&l, AdjunctPair::new(0, 5)),
            Some(vec![1])
        );
        let (l2, r2) =
            adjunct_on_existing_pair_realizer(&l, &r, AdjunctPair::new(0, 5), 2).unwrap();
        assert_eq!(l2.len(), 8);
        assert_eq!(verify_realizer(l2.poset(), &r2), Ok(()));
    }
}
