//! Graph families and generators.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Largest order accepted by [`FamilySpec::Exhaustive`].
pub const EXHAUSTIVE_CEILING: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    PathGraph(usize),
    /// Erdős–Rényi G(n, p) with exact rational `p`; sample `i` is drawn from
    /// stream `i` of a ChaCha generator keyed by `seed`.
    Gnp {
        n: usize,
        p: Ratio<u32>,
        seed: u64,
    },
    /// Every labeled graph on `n` vertices.
    Exhaustive(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let order = match *self {
            FamilySpec::Complete(n) | FamilySpec::PathGraph(n) => n,
            FamilySpec::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
                }
                n
            }
            FamilySpec::CompleteBipartite(s, t) => {
                if s == 0 || t == 0 {
                    return Err(Error::InvalidInput("both parts must be nonempty".into()));
                }
                s + t
            }
            FamilySpec::Gnp { n, p, .. } => {
                if *p.numer() > *p.denom() {
                    return Err(Error::InvalidInput(format!(
                        "edge probability {p} exceeds 1"
                    )));
                }
                n
            }
            FamilySpec::Exhaustive(n) => {
                if n > EXHAUSTIVE_CEILING {
                    return Err(Error::Capacity(format!(
                        "exhaustive enumeration is limited to n <= {EXHAUSTIVE_CEILING}, got {n}"
                    )));
                }
                n
            }
        };
        if order == 0 {
            return Err(Error::InvalidInput(
                "a graph needs at least one vertex".into(),
            ));
        }
        if order > MAX_ORDER {
            return Err(Error::Capacity(format!(
                "order {order} exceeds the supported maximum of {MAX_ORDER}"
            )));
        }
        Ok(())
    }

    /// Number of graphs the family yields, or `None` for unbounded streams.
    pub fn size(&self) -> Option<u64> {
        match *self {
            FamilySpec::Gnp { .. } => None,
            FamilySpec::Exhaustive(n) => Some(1u64 << pair_count(n)),
            _ => Some(1),
        }
    }

    /// Order of every graph in the family.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::PathGraph(n)
            | FamilySpec::Exhaustive(n)
            | FamilySpec::Gnp { n, .. } => n,
            FamilySpec::CompleteBipartite(s, t) => s + t,
        }
    }

    /// The `index`-th graph of the stream. Random access is what lets sweeps
    /// split a family across workers without changing its contents.
    pub fn nth(&self, index: u64) -> Result<Graph> {
        self.validate()?;
        if let Some(len) = self.size() {
            if index >= len {
                return Err(Error::InvalidInput(format!(
                    "index {index} is past the end of {self} ({len} graphs)"
                )));
            }
        }
        Ok(match *self {
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::CompleteBipartite(s, t) => complete_bipartite(s, t),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::PathGraph(n) => path_graph(n),
            FamilySpec::Gnp { n, p, seed } => gnp_sample(n, p, seed, index),
            FamilySpec::Exhaustive(n) => exhaustive_graph(n, index),
        })
    }
}

/// Stream of graphs described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<impl Iterator<Item = Graph> + '_> {
    spec.validate()?;
    let end = spec.size().unwrap_or(u64::MAX);
    Ok((0..end).map(move |i| spec.nth(i).expect("validated family index")))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(s, t) => write!(f, "bipartite:{s},{t}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::PathGraph(n) => write!(f, "path:{n}"),
            FamilySpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p},{seed}"),
            FamilySpec::Exhaustive(n) => write!(f, "exhaustive:{n}"),
        }
    }
}

/// Parses `complete:N`, `bipartite:S,T`, `cycle:N`, `path:N`,
/// `gnp:N,P,SEED` (P as `a/b` or `0`/`1`), `exhaustive:N`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unrecognized family '{s}'"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let num = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let spec = match (name.trim(), args.len()) {
            ("complete", 1) => FamilySpec::Complete(num(0)?),
            ("bipartite", 2) => FamilySpec::CompleteBipartite(num(0)?, num(1)?),
            ("cycle", 1) => FamilySpec::Cycle(num(0)?),
            ("path", 1) => FamilySpec::PathGraph(num(0)?),
            ("exhaustive", 1) => FamilySpec::Exhaustive(num(0)?),
            ("gnp", 3) => FamilySpec::Gnp {
                n: num(0)?,
                p: parse_probability(args[1]).ok_or_else(bad)?,
                seed: args[2].parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_probability(s: &str) -> Option<Ratio<u32>> {
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
        None => (s.parse().ok()?, 1),
    };
    if b == 0 {
        return None;
    }
    Some(Ratio::new(a, b))
}

pub(crate) fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn from_pairs(n: usize, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    for j in 1..n {
        for i in 0..j {
            if keep(i, j) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    Graph::from_rows_unchecked(adj)
}

pub fn complete(n: usize) -> Graph {
    from_pairs(n, |_, _| true)
}

/// `K_{s,t}` with parts `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    from_pairs(s + t, |i, j| (i < s) != (j < s))
}

pub fn cycle(n: usize) -> Graph {
    from_pairs(n, |i, j| j == i + 1 || (i == 0 && j == n - 1))
}

pub fn path_graph(n: usize) -> Graph {
    from_pairs(n, |i, j| j == i + 1)
}

/// The labeled graph whose edge set is the bit pattern of `index`, pair `b`
/// being the `b`-th pair in graph6 column order.
pub fn exhaustive_graph(n: usize, index: u64) -> Graph {
    let mut bit = 0;
    from_pairs(n, |_, _| {
        let on = (index >> bit) & 1 == 1;
        bit += 1;
        on
    })
}

pub fn gnp_sample(n: usize, p: Ratio<u32>, seed: u64, index: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let (num, den) = (*p.numer(), *p.denom());
    from_pairs(n, |_, _| rng.gen_range(0..den) < num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::write_graph6;

    #[test]
    fn complete_bipartite_4_4() {
        let g = complete_bipartite(4, 4);
        assert_eq!(g.edge_count(), 16);
        for a in 0..4 {
            assert_eq!(g.neighbors(a).to_vec(), vec![4, 5, 6, 7]);
        }
        for b in 4..8 {
            assert_eq!(g.neighbors(b).to_vec(), vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn exhaustive_three_yields_eight_distinct_graphs() {
        let all: Vec<_> = generate(&FamilySpec::Exhaustive(3)).unwrap().collect();
        assert_eq!(all.len(), 8);
        let words: std::collections::BTreeSet<_> = all.iter().map(write_graph6).collect();
        assert_eq!(words.len(), 8);
    }

    #[test]
    fn gnp_is_deterministic() {
        let spec = FamilySpec::Gnp {
            n: 5,
            p: Ratio::new(1, 2),
            seed: 7,
        };
        let a: Vec<_> = generate(&spec).unwrap().take(50).collect();
        let b: Vec<_> = generate(&spec).unwrap().take(50).collect();
        assert_eq!(a, b);
        // Different streams actually differ.
        assert!(a.iter().any(|g| g != &a[0]));
    }

    #[test]
    fn gnp_extreme_probabilities() {
        assert_eq!(gnp_sample(6, Ratio::new(0, 1), 1, 0).edge_count(), 0);
        assert_eq!(gnp_sample(6, Ratio::new(1, 1), 1, 0), complete(6));
    }

    #[test]
    fn exhaustive_above_ceiling_is_refused() {
        assert!(matches!(
            generate(&FamilySpec::Exhaustive(8)).err(),
            Some(Error::Capacity(_))
        ));
    }

    #[test]
    fn standard_families() {
        assert_eq!(cycle(5).edge_count(), 5);
        assert!((0..5).all(|v| cycle(5).degree(v) == 2));
        assert_eq!(
            path_graph(4).edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert!(complete(5).is_complete());
    }

    #[test]
    fn family_strings_round_trip() {
        for s in [
            "complete:5",
            "bipartite:4,4",
            "cycle:6",
            "path:4",
            "gnp:10,1/2,42",
            "exhaustive:6",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("gnp:10,3/2,1".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert!(matches!(
            "exhaustive:8".parse::<FamilySpec>(),
            Err(Error::Capacity(_))
        ));
        assert!("torus:3".parse::<FamilySpec>().is_err());
    }
}
