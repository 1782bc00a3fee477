//! Batch drivers: theorem sweeps over graph streams and the tightness
//! demonstration on balanced complete bipartite graphs.

mod tightness;

pub use tightness::{tightness, TightnessReport, TIGHTNESS_CEILING};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::certificates::validate_outcome;
use crate::engine::extract;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::invariants::{first_non_hamiltonian_pair, GraphInvariants, HypothesisReport};
use crate::outcome::{Certificate, ExtractionOutcome};

/// Which endpoint pairs to extract on. Pairs are unordered (`u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairPolicy {
    All,
    /// Up to this many distinct pairs per `(G, k)`, drawn from a seeded stream.
    Sample(usize),
}

impl FromStr for PairPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(PairPolicy::All);
        }
        s.strip_prefix("sample:")
            .and_then(|c| c.parse().ok())
            .map(PairPolicy::Sample)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "pair policy must be 'all' or 'sample:N', got '{s}'"
                ))
            })
    }
}

impl fmt::Display for PairPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairPolicy::All => f.write_str("all"),
            PairPolicy::Sample(c) => write!(f, "sample:{c}"),
        }
    }
}

#[derive(Clone, Debug)]
pub enum GraphSource {
    Family(FamilySpec),
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub sources: Vec<GraphSource>,
    pub ks: Vec<usize>,
    /// Applies to `(G, k)` that fail a hypothesis. When all hypotheses hold
    /// every pair is extracted, since that is what the theorem speaks about.
    pub pairs: PairPolicy,
    /// Graphs drawn from each random family.
    pub samples: Option<u64>,
    /// Seed for pair sampling.
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Record wall-clock time per record. Off for byte-identical output.
    pub timing: bool,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.ks.is_empty() || self.ks.contains(&0) {
            return Err(Error::InvalidInput("k values must be positive".into()));
        }
        for source in &self.sources {
            if let GraphSource::Family(spec) = source {
                spec.validate()?;
                if spec.size().is_none() && self.samples.is_none() {
                    return Err(Error::InvalidInput(format!(
                        "random family {spec} needs a sample count"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Per-pair outcome counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tallies {
    pub hamilton: u64,
    pub small_cut: u64,
    pub forbidden: u64,
    pub toughness: u64,
    pub stalled: u64,
}

impl Tallies {
    pub fn total(&self) -> u64 {
        self.hamilton + self.small_cut + self.forbidden + self.toughness + self.stalled
    }

    fn add(&mut self, o: &Tallies) {
        self.hamilton += o.hamilton;
        self.small_cut += o.small_cut;
        self.forbidden += o.forbidden;
        self.toughness += o.toughness;
        self.stalled += o.stalled;
    }
}

/// One `(graph, k)` line of a sweep report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub connectivity: usize,
    pub toughness: String,
    pub forbidden_free: bool,
    pub all_hypotheses: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hamiltonian_connected: Option<bool>,
    pub pairs: u64,
    #[serde(rename = "outcomes")]
    pub tallies: Tallies,
    /// Outcomes accepted by the independent validator.
    pub validated: u64,
    /// Extractions where the exhaustive insertion search was needed.
    pub insertion_searches: u64,
    pub max_extended_steps: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs: u64,
    pub records: u64,
    pub extractions: u64,
    /// `(G, k)` records with all three hypotheses.
    pub hypothesis_records: u64,
    pub hypothesis_by_k: BTreeMap<usize, u64>,
    /// Records where the `k`-tough, `(P2 ∪ kP1)`-free premise held (`k >= 2`).
    pub corollary_records: u64,
    pub outcomes: Tallies,
    pub stalled_on_hypothesis: u64,
    pub insertion_searches: u64,
    pub insertion_searches_on_hypothesis: u64,
    pub validated: u64,
    pub invalid_outcomes: u64,
    pub violating_records: u64,
    pub max_extended_steps: usize,
}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.violating_records == 0 && self.invalid_outcomes == 0
    }

    fn absorb(&mut self, r: &SweepRecord, corollary: bool, invalid: u64) {
        self.records += 1;
        self.extractions += r.pairs;
        if r.all_hypotheses {
            self.hypothesis_records += 1;
            *self.hypothesis_by_k.entry(r.k).or_default() += 1;
            self.stalled_on_hypothesis += r.tallies.stalled;
            self.insertion_searches_on_hypothesis += r.insertion_searches;
        }
        self.corollary_records += corollary as u64;
        self.outcomes.add(&r.tallies);
        self.insertion_searches += r.insertion_searches;
        self.validated += r.validated;
        self.invalid_outcomes += invalid;
        self.violating_records += !r.violations.is_empty() as u64;
        self.max_extended_steps = self.max_extended_steps.max(r.max_extended_steps);
    }
}

struct Analyzed {
    record: SweepRecord,
    corollary: bool,
    invalid: u64,
}

/// Unordered pairs chosen by `policy` for the graph at `index` of a stream.
pub fn choose_pairs(n: usize, policy: PairPolicy, seed: u64, index: u64) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    match policy {
        PairPolicy::Sample(count) if count < all.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index);
            let mut picked = rand::seq::index::sample(&mut rng, all.len(), count).into_vec();
            picked.sort_unstable();
            picked.into_iter().map(|i| all[i]).collect()
        }
        _ => all,
    }
}

fn analyze(g: &Graph, index: u64, config: &SweepConfig) -> Result<Vec<Analyzed>> {
    let n = g.order();
    let inv = GraphInvariants::compute(g)?;
    let reports: Vec<HypothesisReport> = config
        .ks
        .iter()
        .map(|&k| inv.report(g, k))
        .collect::<Result<_>>()?;
    let corollary: Vec<bool> = reports
        .iter()
        .map(|r| {
            r.k >= 2 && r.forbidden_free && inv.toughness.at_least(Ratio::from_integer(r.k as u64))
        })
        .collect();

    let need_hc = n >= 3
        && reports
            .iter()
            .zip(&corollary)
            .any(|(r, &c)| r.all_hypotheses || c);
    let hc = if need_hc {
        Some(first_non_hamiltonian_pair(g)?.is_none())
    } else {
        None
    };

    // A non-complete t-tough graph is ⌈2t⌉-connected.
    let mut graph_violations = Vec::new();
    if let Some(t) = inv.toughness.value() {
        let bound = (t * 2).ceil().to_integer() as usize;
        if inv.connectivity < bound {
            graph_violations.push(format!(
                "connectivity {} is below ceil(2 * toughness) = {bound}",
                inv.connectivity
            ));
        }
    }

    let word = write_graph6(g);
    let mut out = Vec::with_capacity(reports.len());
    for (report, &corollary) in reports.iter().zip(&corollary) {
        let start = Instant::now();
        let k = report.k;
        let mut violations = graph_violations.clone();
        let mut tallies = Tallies::default();
        let mut validated = 0;
        let mut invalid = 0;
        let mut searches = 0;
        let mut max_steps = 0;
        let pairs = if n < 3 {
            Vec::new()
        } else if report.all_hypotheses {
            choose_pairs(n, PairPolicy::All, config.seed, index)
        } else {
            choose_pairs(n, config.pairs, config.seed, index)
        };

        for &(u, v) in &pairs {
            let ex = extract(g, k, u, v)?;
            let steps = ex.extended_steps();
            max_steps = max_steps.max(steps);
            if steps > n - 2 {
                violations.push(format!("({u},{v}): {steps} extension steps exceed n - 2"));
            }
            searches += ex.used_search() as u64;
            let outcome = match ex.result {
                Ok(o) => o,
                Err(stall) => {
                    tallies.stalled += 1;
                    if report.all_hypotheses {
                        violations.push(format!(
                            "({u},{v}): stalled on path {:?}: {}",
                            stall.path,
                            stall.reasons.join("; ")
                        ));
                    }
                    continue;
                }
            };
            let check = validate_outcome(g, k, u, v, &outcome);
            if check.accepted() {
                validated += 1;
            } else {
                invalid += 1;
                violations.push(format!("({u},{v}): invalid outcome: {check}"));
            }
            match &outcome {
                ExtractionOutcome::HamiltonPath(_) => tallies.hamilton += 1,
                ExtractionOutcome::Certificate(c) => {
                    let refuted = match c {
                        Certificate::SmallCut { .. } => {
                            tallies.small_cut += 1;
                            !report.is_2k_connected
                        }
                        Certificate::ForbiddenInduced { .. } => {
                            tallies.forbidden += 1;
                            !report.forbidden_free
                        }
                        Certificate::ToughnessWitness { .. } => {
                            tallies.toughness += 1;
                            !report.toughness_exceeds_one
                        }
                    };
                    if report.all_hypotheses {
                        violations.push(format!(
                            "({u},{v}): theorem violation, extract returned {}",
                            c.kind().as_str()
                        ));
                    } else if !refuted {
                        violations.push(format!(
                            "({u},{v}): {} certificate but the oracles say that hypothesis holds",
                            c.kind().as_str()
                        ));
                    }
                }
            }
        }

        if hc == Some(false) {
            if report.all_hypotheses {
                violations.push(
                    "theorem violation: hypotheses hold but not hamiltonian-connected".into(),
                );
            }
            if corollary {
                violations.push(
                    "corollary violation: k-tough and free but not hamiltonian-connected".into(),
                );
            }
        }

        out.push(Analyzed {
            record: SweepRecord {
                graph6: word.clone(),
                n,
                k,
                connectivity: inv.connectivity,
                toughness: inv.toughness.to_string(),
                forbidden_free: report.forbidden_free,
                all_hypotheses: report.all_hypotheses,
                hamiltonian_connected: hc,
                pairs: pairs.len() as u64,
                tallies,
                validated,
                insertion_searches: searches,
                max_extended_steps: max_steps,
                violations,
                elapsed_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
            },
            corollary,
            invalid,
        });
    }
    Ok(out)
}

const CHUNK: u64 = 512;

/// Runs the sweep, handing records to `sink` in stream order.
pub fn run_sweep(
    config: &SweepConfig,
    mut sink: impl FnMut(&SweepRecord) -> Result<()>,
) -> Result<SweepSummary> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    let mut summary = SweepSummary::default();
    let mut offset = 0u64;
    for source in &config.sources {
        let count = match source {
            GraphSource::Family(spec) => spec.size().or(config.samples).unwrap_or(0),
            GraphSource::Graphs(gs) => gs.len() as u64,
        };
        let graph = |i: u64| -> Result<Graph> {
            match source {
                GraphSource::Family(spec) => spec.nth(i),
                GraphSource::Graphs(gs) => Ok(gs[i as usize].clone()),
            }
        };
        let mut start = 0;
        while start < count {
            let end = (start + CHUNK).min(count);
            let batch: Vec<Result<Vec<Analyzed>>> = pool.install(|| {
                (start..end)
                    .into_par_iter()
                    .map(|i| analyze(&graph(i)?, offset + i, config))
                    .collect()
            });
            for analyzed in batch {
                summary.graphs += 1;
                for a in analyzed? {
                    summary.absorb(&a.record, a.corollary, a.invalid);
                    sink(&a.record)?;
                }
            }
            start = end;
        }
        offset += count;
    }
    Ok(summary)
}
