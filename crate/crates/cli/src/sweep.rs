//! Seeded experiment grids written as CSV.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize};

use fullsub::constructions::edges_for_density;
use fullsub::finders::{small_p_window, two_thirds_bound};
use fullsub::{
    full_two_thirds, greedy_full, heuristic_largest_full, is_full, oracle_largest_full, small_p_full, Error, FullMode,
    FullSubgraphResult, GenSpec, Graph, Rational, TieBreak,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `G(n, p)`; the p grid is the edge probability
    Gnp,
    /// clique plus isolated vertices; the p grid is the target density
    CliqueIsolated,
    /// planted multipartite graph with part size n; the p grid is c
    MultipartitePlanted,
    /// greedy adversary on 4n + 2 vertices; the p grid must have one entry and is ignored
    Adversary,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gnp => "gnp",
            Family::CliqueIsolated => "clique-isolated",
            Family::MultipartitePlanted => "multipartite-planted",
            Family::Adversary => "adversary",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Greedy,
    GreedyAntipodal,
    TwoThirds,
    SmallP,
    Heuristic,
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Greedy => "greedy",
            Algorithm::GreedyAntipodal => "greedy-antipodal",
            Algorithm::TwoThirds => "two-thirds",
            Algorithm::SmallP => "small-p",
            Algorithm::Heuristic => "heuristic",
            Algorithm::Oracle => "oracle",
        })
    }
}

fn rationals<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    let raw = Vec::<String>::deserialize(d)?;
    raw.iter()
        .map(|s| Rational::from_str(s).map_err(serde::de::Error::custom))
        .collect()
}

fn default_r() -> usize {
    1
}

fn default_cap() -> usize {
    fullsub::DEFAULT_EXACT_CAP
}

/// A sweep over `n` x `p` x seeds, running every algorithm on each graph.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub family: Family,
    pub n: Vec<usize>,
    #[serde(deserialize_with = "rationals")]
    pub p: Vec<Rational>,
    /// multipartite only
    #[serde(default = "default_r")]
    pub r: usize,
    /// seeds per cell: `base_seed, base_seed + 1, ..`
    pub seeds: u64,
    #[serde(default)]
    pub base_seed: u64,
    pub algorithms: Vec<Algorithm>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    /// fill the runtime column; off by default so reruns are byte-identical
    #[serde(default)]
    pub timing: bool,
    #[serde(default = "default_cap")]
    pub exact_cap: usize,
}

impl SweepConfig {
    pub fn from_toml(text: &str) -> anyhow::Result<Self> {
        let config: SweepConfig = toml::from_str(text).context("invalid sweep configuration")?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.n.is_empty() || self.p.is_empty() || self.algorithms.is_empty() || self.seeds == 0 {
            bail!(Error::InvalidInput(
                "n, p, algorithm grids and the seed count must be nonempty".into()
            ));
        }
        if self.family == Family::Adversary && self.p.len() != 1 {
            bail!(Error::InvalidInput(
                "the adversary family ignores p; give exactly one p entry".into()
            ));
        }
        Ok(())
    }

    fn cells(&self) -> Vec<(usize, Rational, u64)> {
        let mut cells = Vec::new();
        for &n in &self.n {
            for p in &self.p {
                for i in 0..self.seeds {
                    cells.push((n, p.clone(), self.base_seed + i));
                }
            }
        }
        cells
    }
}

/// One CSV line. Refused runs (outside an algorithm's range or above the
/// exact cap) leave `witness_size` and `bound_value` empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub family: String,
    /// vertex count of the generated graph
    pub n: usize,
    /// realized density
    pub p: String,
    pub seed: u64,
    pub algorithm: String,
    pub witness_size: Option<usize>,
    /// least witness size the applicable lower bound allows
    pub bound_value: Option<String>,
    pub runtime_ms: Option<u64>,
    pub passed_verification: bool,
}

pub fn generate(family: Family, n: usize, p: &Rational, r: usize, seed: u64) -> fullsub::Result<Graph> {
    let spec = match family {
        Family::Gnp => GenSpec::Gnp { n, p: p.clone(), seed },
        Family::CliqueIsolated => GenSpec::CliqueIsolated {
            n,
            edges: edges_for_density(n, p)?,
        },
        Family::MultipartitePlanted => GenSpec::MultipartitePlanted { n, r, c: p.clone() },
        Family::Adversary => GenSpec::Adversary { n },
    };
    spec.generate()
}

/// Runs one algorithm at the graph's density. `Ok(None)` is a refusal.
pub fn run_algorithm(
    g: &Graph,
    algorithm: Algorithm,
    seed: u64,
    cap: usize,
) -> fullsub::Result<Option<(FullSubgraphResult, Option<Rational>)>> {
    let p = g.density();
    let outcome = match algorithm {
        Algorithm::Greedy => greedy_full(g, &p, TieBreak::MinIndex).map(|r| (r, None)),
        Algorithm::GreedyAntipodal => greedy_full(g, &p, TieBreak::AdversarialAntipodal).map(|r| (r, None)),
        Algorithm::TwoThirds => full_two_thirds(g).and_then(|r| {
            let bound = two_thirds_bound(&p, g.n())?;
            Ok((r, Some(Rational::from_bigint(bound))))
        }),
        Algorithm::SmallP => small_p_full(g).map(|r| {
            let bound = Rational::from_bigint(small_p_window(&p, g.n()).0);
            (r, Some(bound))
        }),
        Algorithm::Heuristic => heuristic_largest_full(g, &p, seed).map(|r| (r, None)),
        Algorithm::Oracle => oracle_largest_full(g, &p, FullMode::Full, cap).map(|r| (r, None)),
    };
    match outcome {
        Ok(found) => Ok(Some(found)),
        Err(Error::Precondition(_) | Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn run_cell(config: &SweepConfig, n: usize, p: &Rational, seed: u64) -> anyhow::Result<Vec<ExperimentRow>> {
    let cell = || format!("cell family={} n={n} p={p} seed={seed}", config.family);
    let g = generate(config.family, n, p, config.r, seed).with_context(cell)?;
    let density = g.density();
    let mut rows = Vec::with_capacity(config.algorithms.len());
    for &algorithm in &config.algorithms {
        let start = Instant::now();
        let found = run_algorithm(&g, algorithm, seed, config.exact_cap)
            .with_context(|| format!("{} algorithm={algorithm}", cell()))?;
        let runtime_ms = config.timing.then(|| start.elapsed().as_millis() as u64);
        let (witness_size, bound_value) = match &found {
            Some((res, bound)) => {
                if !is_full(&g, &density, &res.vertices, FullMode::Full)?.holds {
                    bail!(Error::Verification(format!(
                        "{}: {algorithm} witness is not full",
                        cell()
                    )));
                }
                (Some(res.size), bound.as_ref().map(ToString::to_string))
            }
            None => (None, None),
        };
        rows.push(ExperimentRow {
            family: config.family.to_string(),
            n: g.n(),
            p: density.to_string(),
            seed,
            algorithm: algorithm.to_string(),
            witness_size,
            bound_value,
            runtime_ms,
            passed_verification: true,
        });
    }
    Ok(rows)
}

/// All rows in grid order (`n`, then `p`, then seed, then algorithm),
/// whatever order the worker pool finishes cells in.
pub fn run_sweep(config: &SweepConfig) -> anyhow::Result<Vec<ExperimentRow>> {
    config.validate()?;
    let per_cell: Vec<Vec<ExperimentRow>> = config
        .cells()
        .par_iter()
        .map(|(n, p, seed)| run_cell(config, *n, p, *seed))
        .collect::<anyhow::Result<_>>()?;
    Ok(per_cell.into_iter().flatten().collect())
}

pub fn write_csv<W: Write>(rows: &[ExperimentRow], out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> anyhow::Result<Vec<ExperimentRow>> {
    let mut r = csv::Reader::from_reader(input);
    let rows = r
        .deserialize()
        .collect::<Result<Vec<ExperimentRow>, _>>()
        .context("malformed sweep CSV")?;
    Ok(rows)
}

/// Per `(family, n, algorithm)` aggregate of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryLine {
    pub family: String,
    pub n: usize,
    pub algorithm: String,
    pub rows: usize,
    pub refused: usize,
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
    /// every row with a bound has `witness_size >= bound_value`
    pub bounds_met: bool,
    pub all_verified: bool,
}

impl fmt::Display for SummaryLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        write!(
            f,
            "{} n={} {}: rows={} refused={} size={}..{} bounds_met={} verified={}",
            self.family,
            self.n,
            self.algorithm,
            self.rows,
            self.refused,
            opt(self.min_size),
            opt(self.max_size),
            self.bounds_met,
            self.all_verified
        )
    }
}

pub fn summarize(rows: &[ExperimentRow]) -> anyhow::Result<Vec<SummaryLine>> {
    let mut groups: BTreeMap<(String, usize, String), Vec<&ExperimentRow>> = BTreeMap::new();
    for row in rows {
        groups
            .entry((row.family.clone(), row.n, row.algorithm.clone()))
            .or_default()
            .push(row);
    }
    let mut out = Vec::new();
    for ((family, n, algorithm), group) in groups {
        let sizes: Vec<usize> = group.iter().filter_map(|r| r.witness_size).collect();
        let mut bounds_met = true;
        for r in &group {
            if let (Some(size), Some(bound)) = (r.witness_size, &r.bound_value) {
                let bound = Rational::from_str(bound).with_context(|| format!("bad bound {bound:?}"))?;
                bounds_met &= Rational::integer(size as i128) >= bound;
            }
        }
        out.push(SummaryLine {
            family,
            n,
            algorithm,
            rows: group.len(),
            refused: group.iter().filter(|r| r.witness_size.is_none()).count(),
            min_size: sizes.iter().copied().min(),
            max_size: sizes.iter().copied().max(),
            bounds_met,
            all_verified: group.iter().all(|r| r.passed_verification),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parses_rationals_and_defaults() {
        let c = SweepConfig::from_toml(
            "family = \"multipartite-planted\"\nn = [8]\np = [\"1/2\", \"1\"]\nr = 2\nseeds = 1\nalgorithms = [\"oracle\"]\n",
        )
        .unwrap();
        assert_eq!(c.p, vec![Rational::new(1, 2), Rational::one()]);
        assert_eq!(
            (c.r, c.base_seed, c.timing, c.exact_cap),
            (2, 0, false, fullsub::DEFAULT_EXACT_CAP)
        );
    }

    #[test]
    fn config_rejects_bad_input() {
        assert!(SweepConfig::from_toml(
            "family = \"gnp\"\nn = [8]\np = [\"0.5\"]\nseeds = 1\nalgorithms = [\"greedy\"]\n"
        )
        .is_err());
        assert!(SweepConfig::from_toml(
            "family = \"gnp\"\nn = []\np = [\"1/2\"]\nseeds = 1\nalgorithms = [\"greedy\"]\n"
        )
        .is_err());
        assert!(SweepConfig::from_toml(
            "family = \"adversary\"\nn = [4]\np = [\"1/2\", \"1/3\"]\nseeds = 1\nalgorithms = [\"greedy\"]\n"
        )
        .is_err());
    }

    #[test]
    fn adversary_rows_use_graph_order() {
        let c = SweepConfig::from_toml(
            "family = \"adversary\"\nn = [4]\np = [\"1/2\"]\nseeds = 1\nalgorithms = [\"greedy-antipodal\", \"oracle\"]\n",
        )
        .unwrap();
        let rows = run_sweep(&c).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.n == 18 && r.witness_size.is_some()));
    }
}
