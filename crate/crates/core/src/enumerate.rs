//! Isomorphism-free enumeration of twisted Ward left quasigroups of a given
//! order, with the quasigroup count cross-checked against the group catalog.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use crate::construct::{build_twq, representative_specs};
use crate::error::{Error, Result};
use crate::qcore::{canonical_form, CayleyTable};
use crate::search::{self, Law, SearchConfig};

pub const MAX_ENUMERATION_ORDER: usize = 11;
pub const MAX_QUASIGROUP_ORDER: usize = 8;
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(600);
/// Environment variable overriding [`DEFAULT_BUDGET`], in seconds.
pub const BUDGET_ENV: &str = "TWARD_BUDGET_SECS";

/// [`DEFAULT_BUDGET`] unless [`BUDGET_ENV`] holds a number of seconds.
pub fn default_budget() -> Duration {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .map(Duration::from_secs)
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: usize,
    pub total: usize,
    /// Tables with all rows equal (for `n = 1` this includes the one table).
    pub permutational_count: usize,
    /// Quasigroups that are not permutational.
    pub quasigroup_count: usize,
    pub neither_count: usize,
    /// Canonical forms, sorted.
    pub representatives: Vec<CayleyTable>,
}

impl EnumerationReport {
    fn from_representatives(n: usize, representatives: Vec<CayleyTable>) -> Self {
        let permutational_count = representatives.iter().filter(|t| t.is_permutational()).count();
        let quasigroup_count = representatives
            .iter()
            .filter(|t| !t.is_permutational() && t.is_quasigroup())
            .count();
        EnumerationReport {
            n,
            total: representatives.len(),
            permutational_count,
            quasigroup_count,
            neither_count: representatives.len() - permutational_count - quasigroup_count,
            representatives,
        }
    }

    /// `n total perm quasi neither`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            self.n, self.total, self.permutational_count, self.quasigroup_count, self.neither_count
        )
    }

    /// Writes one table file per representative and `summary.txt`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        let width = self.representatives.len().max(1).to_string().len();
        for (i, t) in self.representatives.iter().enumerate() {
            let path = dir.join(format!("n{}_{:0width$}.tbl", self.n, i + 1));
            std::fs::write(path, t.to_string()).map_err(io)?;
        }
        std::fs::write(dir.join("summary.txt"), format!("{}\n", self.summary_line())).map_err(io)
    }
}

fn check_order(n: usize, max: usize) -> Result<()> {
    if !(1..=max).contains(&n) {
        return Err(Error::Range { n, min: 1, max });
    }
    Ok(())
}

/// Every twisted Ward left quasigroup of order `n` up to isomorphism. A
/// `budget` of `None` means no limit; running out reports how many work units
/// were finished.
pub fn enumerate_tw_left_quasigroups(n: usize, budget: Option<Duration>) -> Result<EnumerationReport> {
    check_order(n, MAX_ENUMERATION_ORDER)?;
    let deadline = budget.map(|b| Instant::now() + b);
    let cfg = SearchConfig {
        n,
        law: Law::TwistedWard,
        latin_columns: false,
        identity_zero: false,
    };
    let classes = search::collect(cfg, deadline, |t| Some(canonical_form(t)))?;
    Ok(EnumerationReport::from_representatives(n, classes.into_iter().collect()))
}

/// Twisted Ward quasigroups of order `n` built from the group catalog: one
/// per group and conjugacy class of its automorphism group, canonicalized.
pub fn twq_representatives(n: usize) -> Result<Vec<CayleyTable>> {
    let set: BTreeSet<CayleyTable> = representative_specs(n)?
        .iter()
        .map(|s| canonical_form(&build_twq(s)))
        .collect();
    Ok(set.into_iter().collect())
}

/// Twisted Ward quasigroups of order `n`, computed twice: by filtering the
/// full enumeration and from the group catalog. The two lists must coincide.
pub fn enumerate_tw_quasigroups(n: usize, budget: Option<Duration>) -> Result<Vec<CayleyTable>> {
    check_order(n, MAX_QUASIGROUP_ORDER)?;
    let filtered: BTreeSet<CayleyTable> = enumerate_tw_left_quasigroups(n, budget)?
        .representatives
        .into_iter()
        .filter(|t| t.is_quasigroup())
        .collect();
    let built: BTreeSet<CayleyTable> = twq_representatives(n)?.into_iter().collect();
    if filtered != built {
        let only_filtered: Vec<String> = filtered.difference(&built).map(|t| format!("{t:?}")).collect();
        let only_built: Vec<String> = built.difference(&filtered).map(|t| format!("{t:?}")).collect();
        return Err(Error::Consistency(format!(
            "quasigroup pipelines disagree at n = {n}: {} filtered vs {} built; only filtered: [{}]; only built: [{}]",
            filtered.len(),
            built.len(),
            only_filtered.join(", "),
            only_built.join(", ")
        )));
    }
    Ok(built.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub n: usize,
    pub holds: bool,
    pub permutational: usize,
    pub quasigroups: usize,
    /// Representatives that are neither permutational nor quasigroups.
    pub witnesses: Vec<CayleyTable>,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// For prime `p`: whether every twisted Ward left quasigroup of order `p` is
/// permutational or a quasigroup.
pub fn dichotomy_report(p: usize, budget: Option<Duration>) -> Result<DichotomyReport> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let report = enumerate_tw_left_quasigroups(p, budget)?;
    let witnesses: Vec<CayleyTable> = report
        .representatives
        .iter()
        .filter(|t| !t.is_permutational() && !t.is_quasigroup())
        .cloned()
        .collect();
    Ok(DichotomyReport {
        n: p,
        holds: witnesses.is_empty(),
        permutational: report.permutational_count,
        quasigroups: report.quasigroup_count,
        witnesses,
    })
}
