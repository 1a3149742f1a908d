use zarlab::harness::{Suite, SuiteConfig};

fn config(suite: Suite) -> SuiteConfig {
    SuiteConfig {
        trials: 150,
        seed: 0xdead_beef,
        max_len: 30,
        max_index: 10,
        ..SuiteConfig::new(suite)
    }
}

#[test]
fn same_seed_same_report() {
    for suite in [
        Suite::LemmaDecomposition,
        Suite::Density,
        Suite::SemigroupExample,
    ] {
        let a = config(suite).run().unwrap();
        let b = config(suite).run().unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint(), "{suite:?}");
        assert_eq!(a.stats, b.stats, "{suite:?}");
    }
}

#[test]
fn parallel_matches_sequential() {
    for suite in [
        Suite::LemmaDecomposition,
        Suite::Density,
        Suite::SemigroupExample,
    ] {
        let par = config(suite).run().unwrap();
        let seq = SuiteConfig {
            parallel: false,
            ..config(suite)
        }
        .run()
        .unwrap();
        assert_eq!(par.fingerprint(), seq.fingerprint(), "{suite:?}");
        assert_eq!(par.stats, seq.stats, "{suite:?}");
    }
}

#[test]
fn seeds_matter() {
    let a = config(Suite::LemmaDecomposition).run().unwrap();
    let b = SuiteConfig {
        seed: 1,
        ..config(Suite::LemmaDecomposition)
    }
    .run()
    .unwrap();
    assert_ne!(a.stats, b.stats);
}

#[test]
fn deterministic_suites_run_from_config() {
    let r = SuiteConfig {
        k: 10,
        ..config(Suite::SmallCancellation)
    }
    .run()
    .unwrap();
    assert!(r.ok());
    let r = config(Suite::Theorem).run().unwrap();
    assert_eq!(r.passed, 11);
    assert!(SuiteConfig {
        k: 9,
        ..config(Suite::Theorem)
    }
    .run()
    .is_err());
}
