//! Seeded random posets and lattices for the batteries and property tests.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::{adjunct_sum, AdjunctPair, Lattice};
use crate::poset::{ElementId, Poset};

pub type BatteryRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> BatteryRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random poset on `n` elements: each pair `i < j` of a hidden linear order is
/// related with probability `density`, then closed transitively.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut perm: Vec<ElementId> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_covers(n, &pairs).expect("pairs follow a linear order")
}

/// The lattice of a random family of subsets of a `k`-set closed under
/// intersection, with the full set added. At most `max_n` elements; the family
/// is grown until the next subset would overflow it.
pub fn random_closure_lattice<R: Rng>(rng: &mut R, k: usize, max_n: usize) -> Lattice {
    let full: u32 = (1 << k) - 1;
    let mut family = vec![full];
    let mut candidates: Vec<u32> = (0..full).collect();
    candidates.shuffle(rng);
    let target = rng.gen_range(1..=max_n.max(1));
    for s in candidates {
        if family.len() >= target {
            break;
        }
        if family.contains(&s) {
            continue;
        }
        let mut grown = family.clone();
        let mut queue = vec![s];
        while let Some(t) = queue.pop() {
            if grown.contains(&t) {
                continue;
            }
            let meets: Vec<u32> = grown.iter().map(|&u| u & t).collect();
            grown.push(t);
            queue.extend(meets);
        }
        if grown.len() <= max_n {
            family = grown;
        }
    }
    family.sort_unstable();
    let n = family.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && family[i] & family[j] == family[i] {
                pairs.push((i, j));
            }
        }
    }
    Lattice::new(Poset::from_covers(n, &pairs).expect("inclusion is an order"))
        .expect("intersection-closed families with a top are lattices")
}

/// A random adjunct sum of chains with at most `max_n` elements.
pub fn random_dismantlable<R: Rng>(rng: &mut R, max_n: usize) -> Lattice {
    let max_n = max_n.max(1);
    let mut l = Lattice::chain(rng.gen_range(1..=max_n.min(5)));
    loop {
        let room = max_n - l.len();
        let pairs = gap_pairs(&l);
        if room == 0 || pairs.is_empty() || rng.gen_bool(0.25) {
            return l;
        }
        let pair = *pairs.choose(rng).expect("nonempty");
        let len = rng.gen_range(1..=room.min(3));
        l = adjunct_sum(&l, pair, &Lattice::chain(len)).expect("gap pairs are valid");
    }
}

/// Every `a < b` that is not a cover.
pub fn gap_pairs(l: &Lattice) -> Vec<AdjunctPair> {
    let p = l.poset();
    let mut out = Vec::new();
    for a in p.elements() {
        for b in p.elements() {
            if p.lt(a, b) && !p.is_cover(a, b) {
                out.push(AdjunctPair::new(a, b));
            }
        }
    }
    out
}

/// Shape of a random RC-lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RcShape {
    /// Length of the base chain.
    pub chain_len: usize,
    /// Number of attached chains.
    pub ears: usize,
    /// Longest attached chain.
    pub max_ear_len: usize,
    /// Cap on the number of base positions used as ear ends.
    pub max_reducibles: usize,
}

/// A random RC-lattice: a base chain with chains glued onto random pairs of its
/// elements at distance at least two. Every reducible lies on the base chain.
pub fn random_rc_lattice<R: Rng>(rng: &mut R, shape: RcShape) -> Lattice {
    let m = shape.chain_len.max(1);
    let mut l = Lattice::chain(m);
    if m < 3 {
        return l;
    }
    let mut ends: Vec<ElementId> = (0..m).collect();
    ends.shuffle(rng);
    ends.truncate(shape.max_reducibles.clamp(2, m));
    ends.sort_unstable();
    let pairs: Vec<AdjunctPair> = ends
        .iter()
        .flat_map(|&a| {
            ends.iter()
                .filter(move |&&b| b >= a + 2)
                .map(move |&b| AdjunctPair::new(a, b))
        })
        .collect();
    if pairs.is_empty() {
        return l;
    }
    for _ in 0..shape.ears {
        let pair = *pairs.choose(rng).expect("nonempty");
        let len = rng.gen_range(1..=shape.max_ear_len.max(1));
        l = adjunct_sum(&l, pair, &Lattice::chain(len)).expect("base chain pairs are gaps");
    }
    l
}

/// A random RC-lattice with at most `max_n` elements and a small base chain.
pub fn random_small_rc<R: Rng>(rng: &mut R, max_n: usize) -> Lattice {
    let chain_len = rng.gen_range(3..=max_n.clamp(3, 7));
    let room = max_n.saturating_sub(chain_len);
    let ears = rng.gen_range(0..=room.min(4));
    let max_ear_len = room.checked_div(ears).map_or(1, |q| q.clamp(1, 2));
    random_rc_lattice(
        rng,
        RcShape {
            chain_len,
            ears,
            max_ear_len,
            max_reducibles: chain_len,
        },
    )
}
