//! Integration tests for the verification pipeline: determinism, the
//! deliberately falsified self-test claim, certificate re-verification, and
//! the hierarchy census.

use std::sync::Arc;

use zsmod_core::decomposition::{Lattice, Level, Witness};
use zsmod_core::module::{Budget, FreeModule, Vector};
use zsmod_core::oracle::{
    generate_corpus, hierarchy_census, prepare_instances, results_to_json, run_claims,
    run_claims_prepared, verify_certificate, ClaimStatus, CorpusConfig, PreparedInstance,
};
use zsmod_core::semiring::{Elem, Semiring};

fn small_config() -> CorpusConfig {
    // trim to ranks 1-2 so these tests stay snappy; the full default corpus
    // is exercised by the acceptance suite
    CorpusConfig {
        ranks: vec![1, 2],
        random_attempts: [2, 10, 10],
        ..CorpusConfig::default()
    }
}

#[test]
fn identical_seeds_give_byte_identical_results() {
    let config = small_config();
    let corpus_a = generate_corpus(42, &config).unwrap();
    let corpus_b = generate_corpus(42, &config).unwrap();
    let a = run_claims(&corpus_a, None).unwrap();
    let b = run_claims(&corpus_b, None).unwrap();
    assert_eq!(
        serde_json::to_string(&results_to_json(&a)).unwrap(),
        serde_json::to_string(&results_to_json(&b)).unwrap()
    );
}

#[test]
fn default_run_verifies_every_visible_claim() {
    let results = run_claims(&generate_corpus(1, &small_config()).unwrap(), None).unwrap();
    assert_eq!(results.len(), 31);
    for r in &results {
        assert_eq!(r.status, ClaimStatus::Verified, "claim {}", r.claim_id);
        assert!(r.certificate.is_none());
        assert!(r.instances_checked > 0);
    }
    // hidden claims stay out of unfiltered runs
    assert!(!results.iter().any(|r| r.claim_id.starts_with("self-test")));
}

#[test]
fn claim_filters_select_by_prefix() {
    let corpus = generate_corpus(0, &small_config()).unwrap();
    let results = run_claims(&corpus, Some(&["thm-2.4".to_string()])).unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0].claim_id, "thm-2.4-descent");
}

#[test]
fn broken_claim_yields_a_reverifiable_certificate() {
    let corpus = generate_corpus(0, &small_config()).unwrap();
    let filter = vec!["self-test-negated-direct".to_string()];
    let results = run_claims(&corpus, Some(&filter)).unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0].status, ClaimStatus::Counterexample);
    let cert = results[0].certificate.as_ref().unwrap();
    // the certificate embeds the full instance, so it re-verifies standalone
    assert!(verify_certificate(cert, &corpus.budget).unwrap());
    // tampering with the detail breaks re-verification
    let mut tampered = cert.clone();
    tampered["detail"]["statement"] = serde_json::json!("altered");
    assert!(!verify_certificate(&tampered, &corpus.budget).unwrap());
}

#[test]
fn census_exhibits_the_expected_boolean_plane_gaps() {
    let corpus = generate_corpus(0, &small_config()).unwrap();
    let prepared = prepare_instances(&corpus).unwrap();
    let census = hierarchy_census(&prepared).unwrap();
    assert_eq!(census.violations, 0);

    let plane = census
        .per_instance
        .iter()
        .find(|c| c.instance == "boolean^2")
        .unwrap();
    assert!(plane.counts["direct"] >= 1);
    assert!(plane.counts["trivial-intersection-not-weak"] >= 1);

    // the concrete gap witness: W = span{(1,0)}, T = span{(0,1),(1,1)}
    let m = FreeModule::new(Arc::new(Semiring::boolean()), 2);
    let budget = Budget::default();
    let en = Arc::new(m.enumeration(&budget).unwrap());
    let lat = Lattice::full(&en, &budget).unwrap();
    let gen = |bits: &[u16]| Vector::new(bits.iter().map(|&b| Elem::Fin(b)).collect());
    let w = en.span_vectors(&[gen(&[1, 0])]).unwrap();
    let t = en.span_vectors(&[gen(&[0, 1]), gen(&[1, 1])]).unwrap();
    let class = lat.classify(&w, &t).unwrap();
    assert_eq!(class.level, Level::TrivialIntersection);
    assert!(matches!(class.witness, Some(Witness::NotWeak { .. })));
}

#[test]
fn census_of_the_zero_module_is_degenerate() {
    let budget = Budget::default();
    let prepared =
        PreparedInstance::prepare("zero".into(), Arc::new(Semiring::boolean()), 1, &budget)
            .unwrap();
    // restrict attention to the one degenerate triple by hand
    let lat = prepared.lattice.as_ref().unwrap();
    let zero = prepared.en.zero_set();
    let sub = lat.sub_lattice(&zero);
    let class = sub.classify(&zero, &zero).unwrap();
    assert_eq!(class.level, Level::Direct);
}

#[test]
fn naive_lattice_search_agrees_beyond_the_powerset_range() {
    // truncated(26) has a 27-element carrier, too big for the power-set
    // filter, so this drives the breadth-first branch of the naive search
    let budget = Budget {
        max_submodules: 50_000,
        ..Budget::default()
    };
    let m = FreeModule::new(Arc::new(Semiring::truncated(26).unwrap()), 1);
    let en = Arc::new(m.enumeration(&budget).unwrap());
    let ambient: Vec<usize> = (0..en.size()).collect();
    let naive_subs = zsmod_core::oracle::naive::all_submodules(&en, &ambient);
    let lat = Lattice::full(&en, &budget).unwrap();
    let main_subs: Vec<Vec<usize>> = lat
        .submodules()
        .iter()
        .map(|s| s.iter().collect())
        .collect();
    assert_eq!(naive_subs, main_subs);
    // far more than the chain of upper intervals: every subset of the top
    // half is closed, since all of its sums cap at 26
    assert_eq!(naive_subs.len(), 23205);
}

#[test]
fn no_claim_is_permanently_skipped_on_the_default_corpus() {
    let results = run_claims(&generate_corpus(0, &CorpusConfig::default()).unwrap(), None).unwrap();
    for r in &results {
        assert_ne!(
            r.status,
            ClaimStatus::Skipped,
            "claim {} never found an eligible instance",
            r.claim_id
        );
    }
}

#[test]
fn prepared_instances_expose_consistent_caches() {
    let corpus = generate_corpus(0, &small_config()).unwrap();
    let prepared = prepare_instances(&corpus).unwrap();
    for inst in &prepared {
        if let (Some(subs), Some(lat)) = (&inst.subs, &inst.lattice) {
            assert_eq!(subs.len(), lat.submodules().len());
            // weak pairs really are weak per the main classifier
            if let Some(weak) = &inst.weak_pairs {
                for &(wi, ti) in weak {
                    let class = lat
                        .classify(&lat.submodules()[wi], &lat.submodules()[ti])
                        .unwrap();
                    assert!(class.level >= Level::Weak);
                }
            }
        }
    }
}

#[test]
fn run_claims_over_prepared_instances_is_reusable() {
    let corpus = generate_corpus(0, &small_config()).unwrap();
    let prepared = prepare_instances(&corpus).unwrap();
    let once = run_claims_prepared(&prepared, None);
    let twice = run_claims_prepared(&prepared, None);
    assert_eq!(
        serde_json::to_string(&results_to_json(&once)).unwrap(),
        serde_json::to_string(&results_to_json(&twice)).unwrap()
    );
}
