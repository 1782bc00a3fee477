//! Brute-force reference implementations. They read the graph only through
//! `has_edge` and share no code with the library's algorithms.

#![allow(dead_code)]

use hamcert::outcome::{Certificate, ExtractionOutcome};
use hamcert::Graph;

/// Dense adjacency with vertex subsets as `u32` masks (n <= 16).
pub struct Dense {
    pub n: usize,
    rows: Vec<u32>,
}

impl Dense {
    pub fn new(g: &Graph) -> Dense {
        let n = g.order();
        assert!(n <= 16, "oracles are for small graphs");
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| g.has_edge(a, b))
                    .fold(0, |m, b| m | 1 << b)
            })
            .collect();
        Dense { n, rows }
    }

    pub fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|a| self.rows[a].count_ones() as usize == self.n - 1)
    }

    /// Components of the subgraph induced by `keep`, each as a mask.
    pub fn components(&self, keep: u32) -> Vec<u32> {
        let mut left = keep;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                let mut fresh = self.rows[a] & left & !comp;
                comp |= fresh;
                while fresh != 0 {
                    stack.push(fresh.trailing_zeros() as usize);
                    fresh &= fresh - 1;
                }
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn edges_within(&self, set: u32) -> u32 {
        (0..self.n)
            .filter(|&a| set >> a & 1 == 1)
            .map(|a| (self.rows[a] & set).count_ones())
            .sum::<u32>()
            / 2
    }
}

/// Smallest separating set, `n - 1` for complete graphs.
pub fn connectivity(d: &Dense) -> usize {
    if d.is_complete() {
        return d.n - 1;
    }
    (0..=d.full())
        .filter(|&s| d.components(d.full() & !s).len() >= 2)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// `min |S| / c(G - S)` over cuts with at least two components, reduced.
/// `None` when no such cut exists (complete graphs).
pub fn toughness(d: &Dense) -> Option<(u64, u64)> {
    let mut best: Option<(u64, u64)> = None;
    for s in 0..=d.full() {
        let c = d.components(d.full() & !s).len() as u64;
        if c < 2 {
            continue;
        }
        let cand = (s.count_ones() as u64, c);
        if best.is_none_or(|b| cand.0 * b.1 < b.0 * cand.1) {
            best = Some(cand);
        }
    }
    best.map(|(a, b)| {
        let g = gcd(a, b);
        (a / g, b / g)
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// No `k + 2` vertices span exactly one edge.
pub fn forbidden_free(d: &Dense, k: usize) -> bool {
    !(0..=d.full())
        .filter(|s| s.count_ones() as usize == k + 2)
        .any(|s| d.edges_within(s) == 1)
}

/// `ok[s][t]`: a Hamilton path from `s` to `t` exists. Subset dynamic
/// programming, independent of any search order.
pub fn hamilton_table(d: &Dense) -> Vec<Vec<bool>> {
    let n = d.n;
    let size = 1usize << n;
    let mut table = vec![vec![false; n]; n];
    let mut ends = vec![0u32; size];
    for s in 0..n {
        ends.iter_mut().for_each(|e| *e = 0);
        ends[1 << s] = 1 << s;
        for mask in 1..size {
            let e = ends[mask];
            if e == 0 || mask >> s & 1 == 0 {
                continue;
            }
            for a in 0..n {
                if e >> a & 1 == 1 {
                    let mut next = d.rows[a] & !(mask as u32);
                    while next != 0 {
                        let b = next.trailing_zeros() as usize;
                        next &= next - 1;
                        ends[mask | 1 << b] |= 1 << b;
                    }
                }
            }
        }
        for t in 0..n {
            table[s][t] = t != s && ends[size - 1] >> t & 1 == 1;
        }
    }
    table
}

pub fn hamiltonian_connected(d: &Dense) -> bool {
    let t = hamilton_table(d);
    (0..d.n).all(|s| (0..d.n).all(|v| v == s || t[s][v]))
}

/// All three hypotheses for `(G, k)`.
pub fn hypotheses(d: &Dense, k: usize) -> bool {
    connectivity(d) >= 2 * k && forbidden_free(d, k) && toughness(d).is_none_or(|(a, b)| a > b)
}

fn mask_of(set: impl IntoIterator<Item = usize>) -> u32 {
    set.into_iter().fold(0, |m, v| m | 1 << v)
}

/// Reference reading of what each outcome asserts.
pub fn outcome_holds(d: &Dense, k: usize, u: usize, v: usize, outcome: &ExtractionOutcome) -> bool {
    let n = d.n;
    let in_range = |m: u64| m >> n == 0;
    match outcome {
        ExtractionOutcome::HamiltonPath(p) => {
            p.len() == n
                && p.first() == Some(&u)
                && p.last() == Some(&v)
                && p.iter().all(|&w| w < n)
                && mask_of(p.iter().copied()) == d.full()
                && p.windows(2).all(|w| d.adjacent(w[0], w[1]))
        }
        ExtractionOutcome::Certificate(Certificate::SmallCut { cut, components }) => {
            if !in_range(cut.bits()) || components.iter().any(|c| !in_range(c.bits())) {
                return false;
            }
            let cut = cut.bits() as u32;
            let mut actual = d.components(d.full() & !cut);
            let mut listed: Vec<u32> = components.iter().map(|c| c.bits() as u32).collect();
            actual.sort_unstable();
            listed.sort_unstable();
            (cut.count_ones() as usize) < 2 * k && actual.len() >= 2 && actual == listed
        }
        ExtractionOutcome::Certificate(Certificate::ForbiddenInduced { edge, independent }) => {
            let (z, w) = *edge;
            if z >= n || w >= n || z == w || !in_range(independent.bits()) {
                return false;
            }
            let ind = independent.bits() as u32;
            let all = ind | 1 << z | 1 << w;
            ind.count_ones() as usize == k
                && all.count_ones() as usize == k + 2
                && d.adjacent(z, w)
                && d.edges_within(all) == 1
        }
        ExtractionOutcome::Certificate(Certificate::ToughnessWitness {
            cut,
            independent,
            components,
        }) => {
            if !in_range(cut.bits())
                || !in_range(independent.bits())
                || components.iter().any(|c| !in_range(c.bits()))
            {
                return false;
            }
            let cut = cut.bits() as u32;
            let ind = independent.bits() as u32;
            let mut actual = d.components(d.full() & !cut);
            let mut listed: Vec<u32> = components.iter().map(|c| c.bits() as u32).collect();
            actual.sort_unstable();
            listed.sort_unstable();
            ind == d.full() & !cut
                && d.edges_within(ind) == 0
                && actual.len() >= 2
                && cut.count_ones() as usize <= actual.len()
                && actual == listed
        }
    }
}
