//! Independent brute-force verification of the decomposition theory.
//!
//! The oracle generates a deterministic corpus of small finite instances
//! (fixed semirings plus axiom-checked random tables), re-derives every
//! theorem's conclusion with the deliberately naive checkers in [`naive`],
//! and cross-examines the main implementation against them. Any
//! disagreement or theorem violation produces a certificate that embeds the
//! full instance, so it re-verifies standalone.

pub mod naive;
mod claims;

pub use claims::claim_registry;

use std::sync::Arc;

use serde_json::{json, Value};

use crate::decomposition::Lattice;
use crate::error::{Error, Result};
use crate::greens::Greens;
use crate::json::{semiring_from_json, semiring_to_json, vector_to_json};
use crate::module::{Budget, Enumeration, Subset};
use crate::semiring::{Semiring, Table};

/// Corpus generation parameters. Regeneration from the same `(seed, config)`
/// is bit-identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusConfig {
    pub ranks: Vec<usize>,
    pub budget: Budget,
    /// Random-table attempts per carrier size 2, 3, 4.
    pub random_attempts: [usize; 3],
}

impl Default for CorpusConfig {
    fn default() -> CorpusConfig {
        CorpusConfig {
            ranks: vec![1, 2, 3],
            budget: Budget {
                max_elements: 4096,
                max_submodules: 5000,
                max_family: 4,
            },
            random_attempts: [2, 60, 2000],
        }
    }
}

/// The deterministic instance corpus: named semirings crossed with ranks,
/// plus the random-table bookkeeping (attempts = accepted + discarded).
#[derive(Debug, Clone)]
pub struct InstanceCorpus {
    pub seed: u64,
    pub members: Vec<(String, Arc<Semiring>)>,
    pub ranks: Vec<usize>,
    pub budget: Budget,
    pub attempts: usize,
    pub discarded: usize,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Propose a random table over `size` labels. The additive identity row,
/// the multiplicative identity row, and the annihilator row are forced
/// (nothing could pass verification without them); the rest is random.
/// Half the proposals draw an idempotent addition (`a + a = a`), which is
/// far likelier to be associative on larger carriers; either way, axiom
/// verification accepts or rejects the proposal.
#[allow(clippy::needless_range_loop)] // symmetric writes need both indices
fn random_table(state: &mut u64, size: usize, idempotent_add: bool) -> Semiring {
    let names = ["0", "1", "a", "b"];
    let labels: Vec<String> = names[..size].iter().map(|s| s.to_string()).collect();
    let mut add = vec![vec![String::new(); size]; size];
    let mut mul = vec![vec![String::new(); size]; size];
    for i in 0..size {
        add[0][i] = labels[i].clone();
        add[i][0] = labels[i].clone();
        mul[0][i] = labels[0].clone();
        mul[i][0] = labels[0].clone();
        mul[1][i] = labels[i].clone();
        mul[i][1] = labels[i].clone();
    }
    for i in 1..size {
        for j in i..size {
            let r = (splitmix64(state) % size as u64) as usize;
            let value = if i == j && idempotent_add { i } else { r };
            add[i][j] = labels[value].clone();
            add[j][i] = labels[value].clone();
        }
    }
    for i in 2..size {
        for j in 2..size {
            let r = (splitmix64(state) % size as u64) as usize;
            mul[i][j] = labels[r].clone();
        }
    }
    let table = Table::new(labels, &add, &mul, "0", "1").expect("proposal is shape-valid");
    Semiring::Table(table)
}

/// Build the default corpus: the fixed members (boolean, truncated(2),
/// truncated(3), Z/2Z, B×B) plus random axiom-verified tables of carrier
/// size at most 4, found by rejection sampling.
pub fn generate_corpus(seed: u64, config: &CorpusConfig) -> Result<InstanceCorpus> {
    if config.ranks.is_empty() {
        return Err(Error::precondition("corpus config has no ranks"));
    }
    if config.budget.max_elements < 2 {
        return Err(Error::precondition("corpus budget must allow 2 elements"));
    }
    let mut members: Vec<(String, Arc<Semiring>)> = vec![
        ("boolean".into(), Arc::new(Semiring::boolean())),
        ("truncated(2)".into(), Arc::new(Semiring::truncated(2)?)),
        ("truncated(3)".into(), Arc::new(Semiring::truncated(3)?)),
        ("zmod2".into(), Arc::new(Semiring::zmod2())),
        ("bxb".into(), Arc::new(Semiring::bxb())),
    ];
    let mut state = seed ^ 0xA076_1D64_78BD_642F;
    let mut attempts = 0;
    let mut discarded = 0;
    for (idx, &n) in config.random_attempts.iter().enumerate() {
        let size = idx + 2;
        let mut accepted = 0usize;
        for round in 0..n {
            attempts += 1;
            let candidate = random_table(&mut state, size, round % 2 == 1);
            if accepted >= 2 || !candidate.verify_axioms().is_valid() {
                discarded += 1;
                continue;
            }
            if members.iter().any(|(_, m)| **m == candidate) {
                discarded += 1;
                continue;
            }
            members.push((format!("rand{size}-{accepted}"), Arc::new(candidate)));
            accepted += 1;
        }
    }
    Ok(InstanceCorpus {
        seed,
        members,
        ranks: config.ranks.clone(),
        budget: config.budget.clone(),
        attempts,
        discarded,
    })
}

impl InstanceCorpus {
    /// The (semiring, rank) pairs within the element budget, in
    /// deterministic order.
    pub fn instance_specs(&self) -> Vec<(String, Arc<Semiring>, usize)> {
        let mut out = Vec::new();
        for (name, sr) in &self.members {
            let k = sr.carrier_size().expect("corpus members are finite");
            for &rank in &self.ranks {
                if k.checked_pow(rank as u32)
                    .is_some_and(|n| n <= self.budget.max_elements)
                {
                    out.push((format!("{name}^{rank}"), Arc::clone(sr), rank));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "semirings": self
                .members
                .iter()
                .map(|(name, sr)| json!({"name": name, "spec": semiring_to_json(sr)}))
                .collect::<Vec<_>>(),
            "ranks": self.ranks,
            "attempts": self.attempts,
            "discarded": self.discarded,
        })
    }
}

/// One corpus instance with everything the claim checkers need, computed
/// once: the enumeration, the (budget-permitting) submodule lattice with
/// naive cross-verification, Green's preorder data, and per-submodule
/// caches.
pub struct PreparedInstance {
    pub name: String,
    pub semiring: Arc<Semiring>,
    pub rank: usize,
    pub en: Arc<Enumeration>,
    pub ambient_ids: Vec<usize>,
    pub lattice: Option<Lattice>,
    /// Submodules as sorted id lists, aligned with `lattice.submodules()`.
    pub subs: Option<Vec<Vec<usize>>>,
    /// Per-submodule summand-absorbing flags (present when `subs` is and
    /// the lattice is small enough for pair quantification).
    pub sa_flags: Option<Vec<bool>>,
    /// Per-submodule lacking-zero-sums flags.
    pub lzs_flags: Option<Vec<bool>>,
    /// Ordered index pairs `(t, w)` with `V = T ⊕ W`, naive-verified and
    /// cross-checked against the main implementation.
    pub direct_pairs: Option<Vec<(usize, usize)>>,
    /// Ordered index pairs `(w, t)` with `T` a weak complement of `W`,
    /// found by the naive quantifier.
    pub weak_pairs: Option<Vec<(usize, usize)>>,
    pub greens: Greens,
    pub budget: Budget,
    pub sr_lzs: bool,
    pub module_lzs: bool,
}

/// Submodule counts above this stop pair-quantified work on an instance.
pub const PAIR_CAP: usize = 600;
/// Submodule counts above this stop triple-quantified work.
pub const TRIPLE_CAP: usize = 90;
/// Ambient sizes up to this allow full power-set quantification.
pub const POWERSET_CAP: usize = 16;

impl PreparedInstance {
    pub fn prepare(
        name: String,
        semiring: Arc<Semiring>,
        rank: usize,
        budget: &Budget,
    ) -> Result<PreparedInstance> {
        let en = Arc::new(Enumeration::new(Arc::clone(&semiring), rank, budget)?);
        let ambient_ids: Vec<usize> = (0..en.size()).collect();
        let lattice = match Lattice::full(&en, budget) {
            Ok(l) => Some(l),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let subs: Option<Vec<Vec<usize>>> = lattice
            .as_ref()
            .map(|l| l.submodules().iter().map(|s| s.iter().collect()).collect());
        if let Some(subs) = &subs {
            // dual-path check of the lattice itself: the full power-set
            // filter for tiny ambients, membership verification otherwise
            if en.size() <= POWERSET_CAP {
                let naive_list = naive::all_submodules(&en, &ambient_ids);
                if naive_list != *subs {
                    return Err(Error::Invariant(format!(
                        "submodule lattices disagree on {name}: {} vs {}",
                        naive_list.len(),
                        subs.len()
                    )));
                }
            } else {
                for s in subs {
                    if !naive::is_submodule(&en, s) {
                        return Err(Error::Invariant(format!(
                            "lattice member fails the naive closure check on {name}"
                        )));
                    }
                }
            }
        }
        let small = subs.as_ref().is_some_and(|s| s.len() <= PAIR_CAP);
        let sa_flags = if small {
            subs.as_ref()
                .map(|subs| subs.iter().map(|s| naive::is_sa(&en, &ambient_ids, s)).collect())
        } else {
            None
        };
        let lzs_flags = if small {
            subs.as_ref().map(|subs| {
                subs.iter()
                    .map(|s| naive::lacks_zero_sums(&en, s))
                    .collect()
            })
        } else {
            None
        };
        let direct_pairs = if small {
            let subs = subs.as_ref().expect("small implies present");
            let lat = lattice.as_ref().expect("small implies present");
            let total = en.size();
            let mut pairs = Vec::new();
            for (i, t) in subs.iter().enumerate() {
                for (j, w) in subs.iter().enumerate() {
                    if t.len() * w.len() != total {
                        continue;
                    }
                    let naive_direct = naive::is_direct(&en, &ambient_ids, t, w);
                    let main_direct = lat.is_direct_pair(
                        &lat.submodules()[i],
                        &lat.submodules()[j],
                    );
                    if naive_direct != main_direct {
                        return Err(Error::Invariant(format!(
                            "directness verdicts disagree on {name}"
                        )));
                    }
                    if naive_direct {
                        pairs.push((i, j));
                    }
                }
            }
            Some(pairs)
        } else {
            None
        };
        let weak_pairs = if small {
            let subs = subs.as_ref().expect("small implies present");
            let mut pairs = Vec::new();
            for (i, w) in subs.iter().enumerate() {
                for (j, t) in subs.iter().enumerate() {
                    if naive::is_weak(&en, &ambient_ids, w, t) {
                        pairs.push((i, j));
                    }
                }
            }
            Some(pairs)
        } else {
            None
        };
        let greens = Greens::full(&en);
        let sr_lzs = semiring.lacks_zero_sums();
        let module_lzs = en.lacks_zero_sums_in(&en.full_set());
        Ok(PreparedInstance {
            name,
            semiring,
            rank,
            en,
            ambient_ids,
            lattice,
            subs,
            sa_flags,
            lzs_flags,
            direct_pairs,
            weak_pairs,
            greens,
            budget: budget.clone(),
            sr_lzs,
            module_lzs,
        })
    }

    pub fn subset(&self, ids: &[usize]) -> Subset {
        let mut s = Subset::empty(self.en.size());
        for &i in ids {
            s.insert(i);
        }
        s
    }

    pub fn id_list(&self, s: &Subset) -> Vec<usize> {
        s.iter().collect()
    }

    /// Certificate fragment identifying this instance.
    pub fn instance_json(&self) -> Value {
        json!({
            "name": self.name,
            "rank": self.rank,
            "semiring": semiring_to_json(&self.semiring),
        })
    }

    pub fn ids_json(&self, ids: &[usize]) -> Value {
        Value::Array(
            ids.iter()
                .map(|&id| vector_to_json(self.en.semiring(), self.en.vector(id)))
                .collect(),
        )
    }

    pub fn id_json(&self, id: usize) -> Value {
        vector_to_json(self.en.semiring(), self.en.vector(id))
    }
}

pub fn prepare_instances(corpus: &InstanceCorpus) -> Result<Vec<PreparedInstance>> {
    corpus
        .instance_specs()
        .into_iter()
        .map(|(name, sr, rank)| PreparedInstance::prepare(name, sr, rank, &corpus.budget))
        .collect()
}

/// Outcome of one claim on one instance.
pub enum InstanceCheck {
    /// Hypotheses were satisfiable; `configurations` tuples were checked.
    Ran { configurations: u64 },
    /// The instance does not satisfy the claim's hypotheses or exceeds its
    /// quantification budget.
    Skipped { reason: String },
    /// The claim failed; the certificate re-verifies standalone.
    Counterexample { certificate: Value },
}

/// A registered theorem claim.
pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    /// Hidden claims only run when named explicitly in a filter; the
    /// deliberately falsified harness self-test lives here.
    pub hidden: bool,
    pub check: fn(&PreparedInstance) -> InstanceCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Verified,
    Counterexample,
    Skipped,
}

impl ClaimStatus {
    pub fn name(self) -> &'static str {
        match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Counterexample => "counterexample",
            ClaimStatus::Skipped => "skipped",
        }
    }
}

/// Aggregated result of one claim over the corpus.
#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub claim_id: String,
    pub title: String,
    pub instances_checked: usize,
    pub configurations: u64,
    pub skips: Vec<(String, String)>,
    pub status: ClaimStatus,
    pub certificate: Option<Value>,
}

impl ClaimResult {
    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim_id,
            "title": self.title,
            "instances": self.instances_checked,
            "configurations": self.configurations,
            "skips": self
                .skips
                .iter()
                .map(|(i, r)| json!({"instance": i, "reason": r}))
                .collect::<Vec<_>>(),
            "status": self.status.name(),
            "certificate": self.certificate,
        })
    }
}

pub fn results_to_json(results: &[ClaimResult]) -> Value {
    Value::Array(results.iter().map(ClaimResult::to_json).collect())
}

/// Does a claim id match a filter token? Tokens select by exact id or by
/// prefix, so `thm-2.4` selects `thm-2.4-descent`.
fn matches_filter(id: &str, filter: &[String]) -> bool {
    filter.iter().any(|f| id == f || id.starts_with(f))
}

/// Run the registered claims over prepared instances. Claims execute in
/// registry (id) order; results are canonical by claim id.
pub fn run_claims_prepared(
    prepared: &[PreparedInstance],
    filter: Option<&[String]>,
) -> Vec<ClaimResult> {
    let mut results = Vec::new();
    for claim in claim_registry() {
        match filter {
            Some(f) => {
                if !matches_filter(claim.id, f) {
                    continue;
                }
            }
            None => {
                if claim.hidden {
                    continue;
                }
            }
        }
        let mut instances_checked = 0usize;
        let mut configurations = 0u64;
        let mut skips = Vec::new();
        let mut certificate = None;
        for inst in prepared {
            match (claim.check)(inst) {
                InstanceCheck::Ran { configurations: c } => {
                    instances_checked += 1;
                    configurations += c;
                }
                InstanceCheck::Skipped { reason } => {
                    skips.push((inst.name.clone(), reason));
                }
                InstanceCheck::Counterexample { certificate: cert } => {
                    certificate = Some(cert);
                    break;
                }
            }
        }
        let status = if certificate.is_some() {
            ClaimStatus::Counterexample
        } else if instances_checked == 0 {
            ClaimStatus::Skipped
        } else {
            ClaimStatus::Verified
        };
        results.push(ClaimResult {
            claim_id: claim.id.to_string(),
            title: claim.title.to_string(),
            instances_checked,
            configurations,
            skips,
            status,
            certificate,
        });
    }
    results.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    results
}

/// Generate, prepare, run: the whole verification pipeline.
pub fn run_claims(corpus: &InstanceCorpus, filter: Option<&[String]>) -> Result<Vec<ClaimResult>> {
    let prepared = prepare_instances(corpus)?;
    Ok(run_claims_prepared(&prepared, filter))
}

/// Re-verify a counterexample certificate from scratch: rebuild the
/// instance from its embedded serialization, re-run the claim on it alone,
/// and require the identical certificate.
pub fn verify_certificate(cert: &Value, budget: &Budget) -> Result<bool> {
    let claim_id = cert
        .get("claim")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse("certificate needs a `claim` field"))?;
    let inst = cert
        .get("instance")
        .ok_or_else(|| Error::parse("certificate needs an `instance` field"))?;
    let semiring = Arc::new(semiring_from_json(
        inst.get("semiring")
            .ok_or_else(|| Error::parse("certificate instance needs a `semiring`"))?,
    )?);
    let rank = inst
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse("certificate instance needs a `rank`"))? as usize;
    let name = inst
        .get("name")
        .and_then(Value::as_str)
        .unwrap_or("certificate")
        .to_string();
    let claim = claim_registry()
        .into_iter()
        .find(|c| c.id == claim_id)
        .ok_or_else(|| Error::parse(format!("unknown claim `{claim_id}`")))?;
    let prepared = PreparedInstance::prepare(name, semiring, rank, budget)?;
    match (claim.check)(&prepared) {
        InstanceCheck::Counterexample { certificate } => {
            if certificate != *cert {
                return Ok(false);
            }
            // Beyond replaying the claim, check the embedded witness data
            // itself wherever the certificate carries submodules `w` and
            // `t`: both sets must be genuine submodules of the rebuilt
            // instance, checked here by a local closure scan rather than by
            // the code that produced them.
            let detail = &cert["detail"];
            for key in ["w", "t", "u", "s", "y", "z"] {
                let Some(vectors) = detail.get(key).and_then(Value::as_array) else {
                    continue;
                };
                let mut ids = Vec::with_capacity(vectors.len());
                for v in vectors {
                    let vector = crate::json::vector_from_json(
                        prepared.en.semiring(),
                        prepared.rank,
                        v,
                    )?;
                    let id = prepared.en.id_of(&vector).ok_or_else(|| {
                        Error::parse("certificate vector is outside the instance")
                    })?;
                    ids.push(id);
                }
                ids.sort_unstable();
                for &a in &ids {
                    for &b in &ids {
                        if ids.binary_search(&prepared.en.add_id(a, b)).is_err() {
                            return Ok(false);
                        }
                    }
                    for r in 0..prepared.en.carrier_size() {
                        if ids.binary_search(&prepared.en.scale_id(r, a)).is_err() {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        _ => Ok(false),
    }
}

/// Census of the complement hierarchy: the count of submodule pairs at each
/// exact level, with the four downward implications re-verified on every
/// pair by independent predicate evaluations.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub per_instance: Vec<InstanceCensus>,
    /// Count of hierarchy-implication violations (always zero).
    pub violations: u64,
}

#[derive(Debug, Clone)]
pub struct InstanceCensus {
    pub instance: String,
    /// Keys: `direct`, `semidirect-not-direct`, `weak-not-semidirect`,
    /// `trivial-intersection-not-weak`, `none`.
    pub counts: std::collections::BTreeMap<String, u64>,
    pub skipped: bool,
}

/// Census over a freshly prepared corpus.
pub fn hierarchy_census_corpus(corpus: &InstanceCorpus) -> Result<CensusReport> {
    hierarchy_census(&prepare_instances(corpus)?)
}

pub fn hierarchy_census(prepared: &[PreparedInstance]) -> Result<CensusReport> {
    let mut per_instance = Vec::new();
    let mut violations = 0u64;
    for inst in prepared {
        let mut counts = std::collections::BTreeMap::new();
        for key in [
            "direct",
            "semidirect-not-direct",
            "weak-not-semidirect",
            "trivial-intersection-not-weak",
            "none",
        ] {
            counts.insert(key.to_string(), 0u64);
        }
        let Some(subs) = inst.subs.as_ref().filter(|s| s.len() <= PAIR_CAP) else {
            per_instance.push(InstanceCensus {
                instance: inst.name.clone(),
                counts,
                skipped: true,
            });
            continue;
        };
        let lat = inst.lattice.as_ref().expect("subs implies lattice");
        let en = &inst.en;
        let ambient = &inst.ambient_ids;
        for (i, w) in subs.iter().enumerate() {
            for (j, t) in subs.iter().enumerate() {
                // four independent predicate evaluations
                let trivial = naive::trivial_intersection(en, ambient, w, t);
                let weak = naive::is_weak(en, ambient, w, t);
                let semi = naive::is_semidirect(en, ambient, w, t);
                let direct = naive::is_direct(en, ambient, w, t);
                if (direct && !semi) || (semi && !weak) || (weak && !trivial) {
                    violations += 1;
                }
                let key = if direct {
                    "direct"
                } else if semi {
                    "semidirect-not-direct"
                } else if weak {
                    "weak-not-semidirect"
                } else if trivial {
                    "trivial-intersection-not-weak"
                } else {
                    "none"
                };
                *counts.get_mut(key).expect("key present") += 1;
                // dual path: the main classifier must land on the same level
                let class = lat.classify(&lat.submodules()[i], &lat.submodules()[j])?;
                let main_key = match class.level {
                    crate::decomposition::Level::Direct => "direct",
                    crate::decomposition::Level::Semidirect => "semidirect-not-direct",
                    crate::decomposition::Level::Weak => "weak-not-semidirect",
                    crate::decomposition::Level::TrivialIntersection => {
                        "trivial-intersection-not-weak"
                    }
                    crate::decomposition::Level::None => "none",
                };
                if main_key != key {
                    return Err(Error::Invariant(format!(
                        "hierarchy classification disagrees on {}",
                        inst.name
                    )));
                }
            }
        }
        per_instance.push(InstanceCensus {
            instance: inst.name.clone(),
            counts,
            skipped: false,
        });
    }
    Ok(CensusReport {
        per_instance,
        violations,
    })
}

impl CensusReport {
    pub fn to_json(&self) -> Value {
        json!({
            "violations": self.violations,
            "instances": self
                .per_instance
                .iter()
                .map(|c| json!({
                    "instance": c.instance,
                    "counts": c.counts,
                    "skipped": c.skipped,
                }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn total(&self, key: &str) -> u64 {
        self.per_instance
            .iter()
            .filter_map(|c| c.counts.get(key))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_generation_is_deterministic() {
        let config = CorpusConfig::default();
        let a = generate_corpus(7, &config).unwrap();
        let b = generate_corpus(7, &config).unwrap();
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            serde_json::to_string(&b.to_json()).unwrap()
        );
        // bookkeeping identity: every attempt is accepted or discarded
        let accepted = a.members.len() - 5;
        assert_eq!(accepted + a.discarded, a.attempts);
    }

    #[test]
    fn corpus_contains_the_fixed_members() {
        let corpus = generate_corpus(0, &CorpusConfig::default()).unwrap();
        let names: Vec<&str> = corpus.members.iter().map(|(n, _)| n.as_str()).collect();
        for fixed in ["boolean", "truncated(2)", "truncated(3)", "zmod2", "bxb"] {
            assert!(names.contains(&fixed));
        }
        let specs = corpus.instance_specs();
        assert!(specs.iter().any(|(n, _, _)| n == "boolean^1"));
        assert!(specs.iter().any(|(n, _, _)| n == "boolean^3"));
    }

    #[test]
    fn random_members_pass_axiom_verification() {
        let corpus = generate_corpus(3, &CorpusConfig::default()).unwrap();
        for (name, sr) in &corpus.members {
            assert!(sr.verify_axioms().is_valid(), "{name} fails axioms");
        }
    }

    #[test]
    fn empty_config_is_a_precondition_error() {
        let config = CorpusConfig {
            ranks: vec![],
            ..CorpusConfig::default()
        };
        assert!(matches!(
            generate_corpus(0, &config),
            Err(Error::Precondition(_))
        ));
    }
}
