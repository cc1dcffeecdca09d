use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::poset::Poset;

use super::{verify_realizer, LinearExtension, Realizer};

/// A transitive orientation of the incomparability graph of `p` (a conjugate
/// order), as rows `q[x]` = set of `y` with `x -> y`. `None` if the incomparability
/// graph is not a comparability graph.
///
/// Implication classes are peeled off one at a time; each class is grown from an
/// arbitrarily oriented edge by the forcing relation of the current graph.
pub fn transitive_orientation(p: &Poset) -> Option<Vec<FixedBitSet>> {
    let n = p.len();
    let mut edges: Vec<FixedBitSet> = (0..n)
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert_range(..);
            row.difference_with(p.up_bits(x));
            row.difference_with(p.down_bits(x));
            row
        })
        .collect();
    let mut orient = vec![FixedBitSet::with_capacity(n); n];
    let mut class = vec![FixedBitSet::with_capacity(n); n];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for u in 0..n {
        while let Some(v) = edges[u].ones().next() {
            members.clear();
            class[u].insert(v);
            members.push((u, v));
            queue.push_back((u, v));
            while let Some((a, b)) = queue.pop_front() {
                // a -> b forces a -> c when b c is not an edge, and c -> b when a c is not
                for c in edges[a].ones() {
                    if c != b && !edges[b].contains(c) {
                        force(a, c, &mut class, &mut members, &mut queue)?;
                    }
                }
                for c in edges[b].ones() {
                    if c != a && !edges[a].contains(c) {
                        force(c, b, &mut class, &mut members, &mut queue)?;
                    }
                }
            }
            for &(a, b) in &members {
                class[a].set(b, false);
                edges[a].set(b, false);
                edges[b].set(a, false);
                orient[a].insert(b);
            }
        }
    }
    Some(orient)
}

// Adds a -> b to the class; `None` when b -> a is already in it.
fn force(
    a: usize,
    b: usize,
    class: &mut [FixedBitSet],
    members: &mut Vec<(usize, usize)>,
    queue: &mut VecDeque<(usize, usize)>,
) -> Option<()> {
    if class[b].contains(a) {
        return None;
    }
    if !class[a].contains(b) {
        class[a].insert(b);
        members.push((a, b));
        queue.push_back((a, b));
    }
    Some(())
}

/// A realizer of at most two extensions, if one exists: `P ∪ Q` and `P ∪ Q⁻¹`
/// for a conjugate order `Q`. A chain gets a single extension.
pub fn two_realizer(p: &Poset) -> Option<Realizer> {
    let q = transitive_orientation(p)?;
    let n = p.len();
    let build = |reverse: bool| {
        let mut order: Vec<usize> = (0..n).collect();
        // rank = number of elements below in the combined total order
        let rank = |x: usize| {
            let below_p = p.down_bits(x).count_ones(..) - 1;
            let below_q = (0..n)
                .filter(|&y| {
                    if reverse {
                        q[x].contains(y)
                    } else {
                        q[y].contains(x)
                    }
                })
                .count();
            below_p + below_q
        };
        let ranks: Vec<usize> = (0..n).map(rank).collect();
        order.sort_by_key(|&x| ranks[x]);
        LinearExtension::new(order)
    };
    let first = build(false);
    let second = build(true);
    let realizer = if first == second {
        Realizer::new(vec![first])
    } else {
        Realizer::new(vec![first, second])
    };
    let ok = verify_realizer(p, &realizer).is_ok();
    debug_assert!(ok, "conjugate order did not yield a realizer");
    ok.then_some(realizer)
}

/// Whether the dimension is at most two.
pub fn has_dim_le_2(p: &Poset) -> bool {
    two_realizer(p).is_some()
}
