mod common;

use fmc_core::corpus::{forests_up_to_iso, graphs_up_to_iso};
use fmc_core::oracle::{contains_minor, find_minor};
use fmc_core::{
    complete_forest_to_tree, decide, decide_with, generate, pathwidth_bruteforce, restrict_model,
    spanning_separation, spanning_separation_traced, validate_model, verify, ChoiceMode,
    EngineConfig, Evidence, Graph, GraphKind, VertexSet,
};

fn path(n: usize) -> Graph {
    generate(GraphKind::Path { n }, 0).unwrap()
}

fn complete(n: usize) -> Graph {
    generate(GraphKind::Complete { n }, 0).unwrap()
}

fn boundary_bijection(cert: &fmc_core::SpanningCertificate) -> bool {
    let boundary = cert.sep.boundary();
    let mut hit = VertexSet::EMPTY;
    for set in &cert.model.branch_sets {
        let meet = *set & boundary;
        if meet.len() != 1 || !hit.is_disjoint(meet) {
            return false;
        }
        hit = hit | meet;
    }
    hit == boundary
}

#[test]
fn small_spanning_certificates() {
    let k3 = complete(3);
    let c = spanning_separation(&k3, &path(2), 0).unwrap();
    assert_eq!(c.sep.order(), 2);
    assert!(c.check(&k3).is_empty());

    let p4 = path(4);
    let c = spanning_separation(&p4, &path(1), 0).unwrap();
    assert_eq!(c.sep.order(), 1);
    assert!(c.check(&p4).is_empty());

    let k5 = complete(5);
    let c = spanning_separation(&k5, &path(4), 2).unwrap();
    assert_eq!(c.sep.order(), 4);
    assert!(c.check(&k5).is_empty());
    assert!(boundary_bijection(&c));

    let c = spanning_separation(&p4, &path(2), 0).unwrap();
    assert!(c.check(&p4).is_empty());
    assert_eq!(c.model.branch_sets.len(), 2);
}

#[test]
fn decide_examples() {
    let k4 = complete(4);
    let cert = decide(&k4, &path(5)).unwrap();
    assert!(matches!(&cert.evidence, Evidence::Decomposition(d) if d.width() == 3));
    let cert = decide(&k4, &path(4)).unwrap();
    assert!(matches!(cert.evidence, Evidence::Model(_)));
    assert!(verify(&k4, &path(4), &cert).is_clean());
    let c5 = generate(GraphKind::Cycle { n: 5 }, 0).unwrap();
    let star = generate(GraphKind::Star { n: 4 }, 0).unwrap();
    assert!(matches!(
        decide(&c5, &star).unwrap().evidence,
        Evidence::Decomposition(_)
    ));
}

#[test]
fn dichotomy_is_exact_on_six_vertices() {
    let forests = forests_up_to_iso(5).unwrap();
    for n in 0..=6 {
        for g in graphs_up_to_iso(n).unwrap() {
            let pw = pathwidth_bruteforce(&g).unwrap();
            for f in &forests {
                if f.is_null() {
                    continue;
                }
                let cert = decide(&g, f).unwrap();
                let report = verify(&g, f, &cert);
                assert!(report.is_clean(), "{g:?} {f:?}: {report}");
                let narrow = pw <= f.n() as isize - 2;
                assert_eq!(matches!(cert.evidence, Evidence::Decomposition(_)), narrow);
            }
        }
    }
}

#[test]
fn minor_oracle_confirms_engine_models() {
    let forests: Vec<_> = forests_up_to_iso(4)
        .unwrap()
        .into_iter()
        .filter(|f| !f.is_null())
        .collect();
    for n in 0..=6 {
        for g in graphs_up_to_iso(n).unwrap() {
            for f in &forests {
                let cert = decide(&g, f).unwrap();
                let found = find_minor(&g, f).unwrap();
                if let Some(m) = &found {
                    assert!(validate_model(&g, m).is_clean());
                }
                match cert.evidence {
                    Evidence::Model(m) => {
                        assert!(validate_model(&g, &m).is_clean());
                        assert!(
                            found.is_some(),
                            "engine claims a model the oracle cannot find"
                        );
                    }
                    // A graph with no F minor must be narrow; the converse need not hold.
                    Evidence::Decomposition(_) => {}
                }
                if found.is_none() {
                    assert!(matches!(
                        decide(&g, f).unwrap().evidence,
                        Evidence::Decomposition(_)
                    ));
                }
            }
        }
    }
    assert!(contains_minor(&complete(4), &path(4)).unwrap());
    assert!(!contains_minor(&complete(3), &path(4)).unwrap());
}

#[test]
fn every_intermediate_certificate_is_spanning() {
    let mut rng = common::rng(7);
    for round in 0..60u64 {
        let n = 5 + (round % 4) as usize;
        let g = generate(GraphKind::Gnp { n, p: 0.6 }, round).unwrap();
        let (pw, _) = fmc_core::pathwidth_exact(&g).unwrap();
        if pw < 1 {
            continue;
        }
        let w = rand::Rng::gen_range(&mut rng, 0..pw as usize);
        let size = rand::Rng::gen_range(&mut rng, 1..=w + 2);
        let tree = generate(GraphKind::RandomTree { n: size }, round).unwrap();
        for choice in [ChoiceMode::Lowest, ChoiceMode::Seeded(round)] {
            let config = EngineConfig {
                choice,
                ..EngineConfig::default()
            };
            let mut seen = 0;
            let (cert, _) = spanning_separation_traced(&g, &tree, w, config, |c| {
                assert!(c.check(&g).is_empty(), "{:?}", c.check(&g));
                assert!(boundary_bijection(c));
                seen += 1;
            })
            .unwrap();
            assert_eq!(seen, size + 1);
            assert_eq!(cert.tree().n(), size);
        }
    }
}

#[test]
fn seeded_choice_is_deterministic_and_sound() {
    let g = generate(GraphKind::Gnp { n: 8, p: 0.5 }, 3).unwrap();
    let forests = forests_up_to_iso(5).unwrap();
    for f in forests.iter().filter(|f| !f.is_null()) {
        for seed in 0..4 {
            let config = EngineConfig {
                choice: ChoiceMode::Seeded(seed),
                ..EngineConfig::default()
            };
            let a = decide_with(&g, f, config).unwrap();
            let b = decide_with(&g, f, config).unwrap();
            assert_eq!(a, b);
            assert!(verify(&g, f, &a).is_clean());
        }
    }
}

#[test]
fn restricting_tree_models_gives_forest_models() {
    for f in forests_up_to_iso(5).unwrap().iter().filter(|f| f.n() >= 2) {
        let (tree, added) = complete_forest_to_tree(f).unwrap();
        let host = complete(tree.n() + 1);
        let cert = spanning_separation(&host, &tree, tree.n() - 2).unwrap();
        let model = restrict_model(&cert.model, f, &added).unwrap();
        assert!(validate_model(&host, &model).is_clean());
        assert_eq!(model.branch_sets, cert.model.branch_sets);
    }
}

#[test]
fn certificates_round_trip_through_text() {
    let g = generate(GraphKind::Gnp { n: 7, p: 0.5 }, 11).unwrap();
    for f in forests_up_to_iso(4)
        .unwrap()
        .iter()
        .filter(|f| !f.is_null())
    {
        let cert = decide(&g, f).unwrap();
        let text = cert.write(&g);
        let back = fmc_core::Certificate::parse(&text, &g, f).unwrap();
        assert_eq!(back.write(&g), text);
        assert!(verify(&g, f, &back).is_clean());
    }
}

#[test]
fn rejects_bad_patterns() {
    let g = complete(4);
    assert!(decide(&g, &Graph::null()).is_err());
    assert!(decide(&g, &complete(3)).is_err());
    assert!(spanning_separation(&path(3), &path(2), 1).is_err());
    assert!(spanning_separation(&complete(5), &path(4), 1).is_err());
}
