//! Exact toughness by subset enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact toughness is refused above this order.
pub const TOUGHNESS_CEILING: usize = 16;

/// `τ(G)`: infinite for complete graphs, otherwise `|S| / c(G - S)` for a
/// minimizing cut `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    Infinite,
    Finite {
        value: Ratio<u64>,
        cut: VertexSet,
        components: usize,
    },
}

impl Toughness {
    pub fn value(&self) -> Option<Ratio<u64>> {
        match self {
            Toughness::Infinite => None,
            Toughness::Finite { value, .. } => Some(*value),
        }
    }

    /// Compares `τ` with a finite rational.
    pub fn cmp_value(&self, t: Ratio<u64>) -> Ordering {
        match self {
            Toughness::Infinite => Ordering::Greater,
            Toughness::Finite { value, .. } => value.cmp(&t),
        }
    }

    pub fn exceeds(&self, t: Ratio<u64>) -> bool {
        self.cmp_value(t) == Ordering::Greater
    }

    pub fn at_least(&self, t: Ratio<u64>) -> bool {
        self.cmp_value(t) != Ordering::Less
    }
}

/// `num/den` (never reduced to a bare integer) or `inf`.
impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Infinite => f.write_str("inf"),
            Toughness::Finite { value, .. } => write!(f, "{}/{}", value.numer(), value.denom()),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_capacity(g: &Graph) -> Result<()> {
    if g.order() > TOUGHNESS_CEILING {
        return Err(Error::Capacity(format!(
            "exact toughness is limited to n <= {TOUGHNESS_CEILING}, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Exact minimization of `|S| / c(G - S)` over cuts with `c(G - S) >= 2`.
///
/// Cuts are scanned by increasing size, colex within a size; the first
/// minimizer wins. Since `c(G - S) <= n - |S|`, every cut of size `s` has
/// ratio at least `s / (n - s)`, and the scan stops once that bound reaches
/// the best ratio seen.
pub fn toughness(g: &Graph) -> Result<Toughness> {
    check_capacity(g)?;
    if g.is_complete() {
        return Ok(Toughness::Infinite);
    }
    let n = g.order();
    let all = g.vertices();
    // (size, components) of the best cut so far.
    let mut best: Option<(usize, usize, VertexSet)> = None;
    for size in 0..=n - 2 {
        if let Some((bs, bc, _)) = best {
            // size / (n - size) >= bs / bc
            if size * bc >= bs * (n - size) {
                break;
            }
        }
        for cut in VertexSet::subsets_of_size(n, size) {
            let c = g.count_components_within(all - cut, usize::MAX);
            if c < 2 {
                continue;
            }
            let better = match best {
                None => true,
                Some((bs, bc, _)) => size * bc < bs * c,
            };
            if better {
                best = Some((size, c, cut));
            }
        }
    }
    let (size, components, cut) = best.expect("a non-complete graph has a disconnecting cut");
    Ok(Toughness::Finite {
        value: Ratio::new(size as u64, components as u64),
        cut,
        components,
    })
}

/// Searches for a cut `S` with `c(G - S) >= 2` and `violates(|S|, c)`.
/// `hopeless(s)` must be true only when no cut of size `>= s` can violate.
fn find_cut(
    g: &Graph,
    violates: impl Fn(usize, usize) -> bool,
    hopeless: impl Fn(usize) -> bool,
) -> Option<(VertexSet, usize)> {
    let n = g.order();
    let all = g.vertices();
    for size in 0..=n - 2 {
        if hopeless(size) {
            break;
        }
        for cut in VertexSet::subsets_of_size(n, size) {
            let c = g.count_components_within(all - cut, usize::MAX);
            if c >= 2 && violates(size, c) {
                return Some((cut, c));
            }
        }
    }
    None
}

/// `τ(G) >= t`, decided with exact arithmetic and an early exit.
pub fn is_t_tough(g: &Graph, t: Ratio<u64>) -> Result<bool> {
    if t <= Ratio::from_integer(0) {
        return Err(Error::InvalidInput(format!(
            "toughness threshold must be positive, got {t}"
        )));
    }
    check_capacity(g)?;
    if g.is_complete() {
        return Ok(true);
    }
    let n = g.order() as u64;
    let (a, b) = (*t.numer(), *t.denom());
    // violation: s < t c  <=>  s b < a c; hopeless once s >= t (n - s).
    let found = find_cut(
        g,
        |s, c| (s as u64) * b < a * c as u64,
        |s| (s as u64) * b >= a * (n - s as u64),
    );
    Ok(found.is_none())
}

/// `τ(G) > t`: no cut with `|S| <= t * c(G - S)`.
pub fn toughness_exceeds(g: &Graph, t: Ratio<u64>) -> Result<bool> {
    check_capacity(g)?;
    if g.is_complete() {
        return Ok(true);
    }
    let n = g.order() as u64;
    let (a, b) = (*t.numer(), *t.denom());
    let found = find_cut(
        g,
        |s, c| (s as u64) * b <= a * c as u64,
        |s| (s as u64) * b > a * (n - s as u64),
    );
    Ok(found.is_none())
}
