//! Theorem checks run over every admissible instance drawn from a list of
//! graphs. Pairs whose larger graph is beyond [`CampaignConfig::all_pairs_max_n`]
//! are sampled with a seeded generator so runs repeat exactly.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    check_base_containment, check_handle_or_circuit, check_one_extension, check_two_extension, check_typed_expansion,
    TheoremReport, Verdict, VerifyError,
};
use crate::connectivity::is_dodecahedrally_connected;
use crate::embedding::{FixConstraint, DEFAULT_BUDGET};
use crate::expansions::ExpansionType;
use crate::graph::{quadrangles, Graph};

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub budget: u64,
    /// every pair is checked while the host has at most this many vertices
    pub all_pairs_max_n: usize,
    /// pairs drawn when the host is larger
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig { budget: DEFAULT_BUDGET, all_pairs_max_n: 14, sample_size: 64, seed: 0 }
    }
}

/// Reports sorted by instance, plus how many candidate instances fell
/// outside the hypotheses.
#[derive(Clone, Debug, Default)]
pub struct Campaign {
    pub reports: Vec<TheoremReport>,
    /// pairs where the guest does not embed, or a hypothesis fails
    pub inadmissible: usize,
    /// pairs removed by the theorem's own exceptions
    pub excluded: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    AllWitnessed,
    /// some instance was searched to the end without a witness
    Falsified,
    BudgetExceeded,
}

impl Campaign {
    pub fn witnessed(&self) -> usize {
        self.reports.iter().filter(|r| r.verdict.witness().is_some()).count()
    }

    pub fn count(&self, pred: impl Fn(&Verdict) -> bool) -> usize {
        self.reports.iter().filter(|r| pred(&r.verdict)).count()
    }

    pub fn outcome(&self) -> Outcome {
        if self.reports.iter().any(|r| r.verdict == Verdict::Exhausted) {
            Outcome::Falsified
        } else if self.reports.iter().any(|r| r.verdict == Verdict::BudgetExceeded) {
            Outcome::BudgetExceeded
        } else {
            Outcome::AllWitnessed
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "instances={} witnessed={} exhausted={} budget-exceeded={} inadmissible={} excluded={}",
            self.reports.len(),
            self.witnessed(),
            self.count(|v| *v == Verdict::Exhausted),
            self.count(|v| *v == Verdict::BudgetExceeded),
            self.inadmissible,
            self.excluded
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            writeln!(out, "{}", r.to_line()).unwrap();
        }
        out
    }

    fn collect(results: Vec<Result<TheoremReport, VerifyError>>) -> Result<Campaign, VerifyError> {
        let mut c = Campaign::default();
        for r in results {
            match r {
                Ok(rep) => c.reports.push(rep),
                Err(VerifyError::NoBaseEmbedding | VerifyError::Precondition(_)) => c.inadmissible += 1,
                Err(VerifyError::ExceptionApplies(_)) => c.excluded += 1,
                Err(e) => return Err(e),
            }
        }
        c.reports.sort_by(|a, b| a.instance.cmp(&b.instance));
        Ok(c)
    }
}

/// Index pairs `(i, j)` with `graphs[i]` smaller than `graphs[j]`: all of
/// them up to the all-pairs bound, a seeded sample above it.
pub fn instance_pairs(guests: &[Graph], hosts: &[Graph], cfg: &CampaignConfig) -> Vec<(usize, usize)> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    for (i, g) in guests.iter().enumerate() {
        for (j, h) in hosts.iter().enumerate() {
            if g.order() < h.order() {
                if h.order() <= cfg.all_pairs_max_n {
                    small.push((i, j));
                } else {
                    large.push((i, j));
                }
            }
        }
    }
    if large.len() > cfg.sample_size {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut picked = sample(&mut rng, large.len(), cfg.sample_size).into_vec();
        picked.sort_unstable();
        large = picked.into_iter().map(|k| large[k]).collect();
    }
    small.extend(large);
    small
}

/// Base-graph containment for every graph.
pub fn base_containment_campaign(graphs: &[Graph], cfg: &CampaignConfig) -> Result<Campaign, VerifyError> {
    let results = graphs.par_iter().map(|g| check_base_containment(g, cfg.budget)).collect();
    Campaign::collect(results)
}

/// 1-extensions, with a null fixed set, over the pairs of `graphs`.
pub fn one_extension_campaign(graphs: &[Graph], cfg: &CampaignConfig) -> Result<Campaign, VerifyError> {
    let pairs = instance_pairs(graphs, graphs, cfg);
    let results = pairs
        .par_iter()
        .map(|&(i, j)| check_one_extension(&graphs[i], &graphs[j], &FixConstraint::null(), cfg.budget))
        .collect();
    Campaign::collect(results)
}

/// Typed expansions at every quadrangle of every guest, into every larger
/// host; restricted to types A to E when the host is dodecahedrally
/// connected.
pub fn typed_expansion_campaign(guests: &[Graph], hosts: &[Graph], cfg: &CampaignConfig) -> Result<Campaign, VerifyError> {
    let dodec: Vec<bool> = hosts.par_iter().map(|h| is_dodecahedrally_connected(h).unwrap_or(false)).collect();
    let mut jobs = Vec::new();
    for (i, j) in instance_pairs(guests, hosts, cfg) {
        for c in quadrangles(&guests[i]) {
            jobs.push((i, j, c));
        }
    }
    let results = jobs
        .par_iter()
        .map(|(i, j, c)| {
            let types: &[ExpansionType] = if dodec[*j] { &ExpansionType::ALL[..5] } else { &ExpansionType::ALL };
            check_typed_expansion(&guests[*i], c, &hosts[*j], types, cfg.budget)
        })
        .collect();
    Campaign::collect(results)
}

/// 1- or 2-extensions or circuit expansions; with `dodecahedral` only
/// dodecahedrally connected hosts and no circuit expansions.
pub fn two_extension_campaign(graphs: &[Graph], dodecahedral: bool, cfg: &CampaignConfig) -> Result<Campaign, VerifyError> {
    let pairs = instance_pairs(graphs, graphs, cfg);
    let results = pairs
        .par_iter()
        .map(|&(i, j)| check_two_extension(&graphs[i], &graphs[j], dodecahedral, cfg.budget))
        .collect();
    Campaign::collect(results)
}

/// Handle or circuit expansions, exceptions excluded.
pub fn handle_or_circuit_campaign(graphs: &[Graph], cfg: &CampaignConfig) -> Result<Campaign, VerifyError> {
    let pairs = instance_pairs(graphs, graphs, cfg);
    let results = pairs
        .par_iter()
        .map(|&(i, j)| check_handle_or_circuit(&graphs[i], &graphs[j], cfg.budget))
        .collect();
    Campaign::collect(results)
}
