//! Acceptance suite: one test per criterion, each printing a PASS line on
//! success (run with `--nocapture` to see them). All comparisons are exact;
//! the arithmetic is rational, so tolerances are zero throughout.

use std::time::Instant;

use flanders::cli;
use flanders::decomposition::{
    canonical_nilpotent, index, nilpotent_similarity, weyr_sequence,
};
use flanders::gen_inverse::{drazin, drazin_cline, group_inverse};
use flanders::instances::{
    random_group_invertible_triple, random_nilpotent_pair, random_partition, random_triple,
    GenConfig, SplitMix64,
};
use flanders::matrix::Matrix;
use flanders::scalar::Scalar;
use flanders::similarity::{
    drazin_similarity_certificate, full_similarity, group_similarity_certificate,
    power_similarity, rank_sequence, validate_triple, FlandersTriple, SimilarityOutcome,
};

fn group_example_triple() -> FlandersTriple {
    validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[1, 1], &[1, 1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 1]]),
    )
    .unwrap()
}

fn power_example_triple() -> FlandersTriple {
    validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[0, 1], &[1, 0]]),
    )
    .unwrap()
}

/// Shared batch of triples covering sizes 2..=5 and all feasible rank
/// deficits up to 2; generated once, reused by several criteria.
fn general_triples() -> &'static [FlandersTriple] {
    static TRIPLES: std::sync::OnceLock<Vec<FlandersTriple>> = std::sync::OnceLock::new();
    TRIPLES.get_or_init(|| {
        let mut out = Vec::new();
        for n in 2..=5 {
            for deficit in 0..=2.min(n - 1) {
                for seed in 0..19u64 {
                    let cfg = GenConfig {
                        rank_deficit: deficit,
                        ..GenConfig::new(n, seed.wrapping_mul(0x9E37) + n as u64 + deficit as u64)
                    };
                    out.push(random_triple(&cfg).unwrap());
                }
            }
        }
        out
    })
}

#[test]
fn criterion_1_group_example_reproduction() {
    let start = Instant::now();
    let t = group_example_triple();

    let ac_sharp = group_inverse(&t.ac()).unwrap();
    let ba_sharp = group_inverse(&t.ba()).unwrap();
    assert_eq!(ac_sharp, Matrix::parse_rows(&[&["1/4", "1/4"], &["1/4", "1/4"]]).unwrap());
    assert_eq!(ba_sharp, Matrix::parse_rows(&[&["0", "1/2"], &["0", "1/2"]]).unwrap());

    let (cert, cert_sharp, _) = group_similarity_certificate(&t).unwrap();
    assert!(cert.verify() && cert_sharp.verify());

    let dir = tempfile::tempdir().unwrap();
    for (name, c) in [("product.json", &cert), ("sharp.json", &cert_sharp)] {
        let path = dir.path().join(name);
        let doc = cli::CertificateDocument::from_certificate(c, serde_json::Map::new());
        cli::write_certificate_document(&path, &doc).unwrap();
        assert_eq!(cli::cmd_verify_cert(&path), cli::EXIT_OK);
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, limit 1 s");
    println!("ACCEPTANCE criterion 1: PASS — group example reproduced, certificates verify ({elapsed:?})");
}

#[test]
fn criterion_2_power_example_reproduction() {
    let start = Instant::now();
    let t = power_example_triple();
    assert_eq!(index(&t.ac()).unwrap(), 1);
    assert_eq!(index(&t.ba()).unwrap(), 1);

    let dir = tempfile::tempdir().unwrap();
    for s in 1..=5 {
        let cert = power_similarity(&t, s).unwrap();
        assert!(cert.verify());
        assert_eq!(cert.lhs, t.ac().pow(s).unwrap());
        assert_eq!(cert.rhs, t.ba().pow(s).unwrap());
        let path = dir.path().join(format!("power_{s}.json"));
        let doc = cli::CertificateDocument::from_certificate(&cert, serde_json::Map::new());
        cli::write_certificate_document(&path, &doc).unwrap();
        assert_eq!(cli::cmd_verify_cert(&path), cli::EXIT_OK);
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, limit 1 s");
    println!("ACCEPTANCE criterion 2: PASS — (AC)^s ~ (BA)^s certified for s = 1..5 ({elapsed:?})");
}

#[test]
fn criterion_3_lemma1_property_suite() {
    let start = Instant::now();
    let triples = general_triples();
    assert!(triples.len() >= 200, "only {} triples", triples.len());

    for t in triples {
        let ac_d = drazin(&t.ac()).unwrap().inverse;
        let transferred = &(t.b() * &(&ac_d * &ac_d)) * t.a();
        assert_eq!(transferred, drazin(&t.ba()).unwrap().inverse);
        assert_eq!(t.a() * &transferred, &ac_d * t.a());
        assert_eq!(&(t.a() * t.b()) * &ac_d, &(t.a() * t.c()) * &ac_d);
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, limit 60 s");
    println!(
        "ACCEPTANCE criterion 3: PASS — inverse transfer identities exact on {}/{} triples ({elapsed:?})",
        triples.len(),
        triples.len()
    );
}

#[test]
fn criterion_4_similarity_certificate_suites() {
    let start = Instant::now();

    let mut group_count = 0;
    for n in 2..=4 {
        for deficit in 0..=1.min(n - 1) {
            for seed in 0..17u64 {
                let cfg = GenConfig {
                    rank_deficit: deficit,
                    max_rejects: 256,
                    ..GenConfig::new(n, 1000 + seed * 31 + n as u64)
                };
                let t = random_group_invertible_triple(&cfg).unwrap();
                let (cert, cert_sharp, _) = group_similarity_certificate(&t).unwrap();
                assert!(cert.verify() && cert_sharp.verify());
                assert_eq!(cert.u, cert_sharp.u, "the same unit must conjugate the inverses");
                group_count += 1;
            }
        }
    }
    assert!(group_count >= 100, "only {group_count} group-invertible triples");

    let triples = general_triples();
    assert!(triples.len() >= 200);
    for t in triples {
        let (cert, core_cert, _) = drazin_similarity_certificate(t);
        assert!(cert.verify() && core_cert.verify());
        assert_eq!(core_cert.lhs, &t.ac().pow(2).unwrap() * &cert.lhs);
        assert_eq!(core_cert.rhs, &t.ba().pow(2).unwrap() * &cert.rhs);
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}, limit 120 s");
    println!(
        "ACCEPTANCE criterion 4: PASS — {group_count} group + {} Drazin/core certificates verify ({elapsed:?})",
        triples.len()
    );
}

#[test]
fn criterion_5_rank_sequence_iff_both_directions() {
    let hand_built = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
    )
    .unwrap();

    let mut triples: Vec<FlandersTriple> = general_triples().iter().take(120).cloned().collect();
    triples.push(hand_built.clone());

    // generated mismatches: embed the rank-diverging 2x2 pattern in a larger
    // block and conjugate the whole triple by a random invertible matrix,
    // which preserves both ABA = ACA and the rank-sequence gap
    let mut rng = SplitMix64::new(0x5EED);
    for n in 3..=5usize {
        for _ in 0..4 {
            let pad = Matrix::identity(n - 2);
            let a = Matrix::block_diag(&[hand_built.a().clone(), pad.clone()]);
            let b = Matrix::block_diag(&[hand_built.b().clone(), pad.clone()]);
            let c = Matrix::block_diag(&[hand_built.c().clone(), pad.clone()]);
            let s = loop {
                let s = Matrix::from_fn(n, n, |_, _| Scalar::from_int(rng.next_int(2)));
                if s.rank() == n {
                    break s;
                }
            };
            let s_inv = s.inverse().unwrap();
            let conj = |m: &Matrix| &(&s_inv * m) * &s;
            triples.push(validate_triple(conj(&a), conj(&b), conj(&c)).unwrap());
        }
    }

    let mut similar = 0;
    let mut dissimilar = 0;
    for t in &triples {
        let (ac_ranks, ba_ranks) = rank_sequence(t);
        let sequences_equal = ac_ranks == ba_ranks;
        match full_similarity(t) {
            SimilarityOutcome::Similar(cert) => {
                assert!(sequences_equal, "certificate produced despite differing ranks");
                assert!(cert.verify());
                assert_eq!(cert.lhs, t.ac());
                assert_eq!(cert.rhs, t.ba());
                similar += 1;
            }
            SimilarityOutcome::NotSimilar(w) => {
                assert!(!sequences_equal, "refused despite equal rank sequences");
                // recompute the witness ranks independently of rank_sequence
                let ra = t.ac().pow(w.witness_power).unwrap().rank();
                let rb = t.ba().pow(w.witness_power).unwrap().rank();
                assert_eq!(ra, w.rank_lhs);
                assert_eq!(rb, w.rank_rhs);
                assert_ne!(ra, rb);
                dissimilar += 1;
            }
        }
    }
    assert!(dissimilar >= 13, "the hand-built and embedded mismatches must be refuted");
    assert!(similar >= 1);
    println!(
        "ACCEPTANCE criterion 5: PASS — {similar} constructive certificates, {dissimilar} refutations, all consistent with rank sequences"
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let mut rng = SplitMix64::new(0xD1A2);
    let mut count = 0;
    for n in 1..=5usize {
        for _ in 0..24 {
            // mixed ranks: full random or forced low rank via a factored product
            let target_rank = rng.next_below(n as u64 + 1) as usize;
            let a = if target_rank == n {
                Matrix::from_fn(n, n, |_, _| Scalar::ratio(rng.next_int(4), 1 + rng.next_below(3) as i64))
            } else {
                let left = Matrix::from_fn(n, target_rank, |_, _| Scalar::from_int(rng.next_int(3)));
                let right = Matrix::from_fn(target_rank, n, |_, _| Scalar::from_int(rng.next_int(3)));
                &left * &right
            };
            let via_core = drazin(&a).unwrap();
            let via_cline = drazin_cline(&a).unwrap();
            assert_eq!(via_core.inverse, via_cline, "routes disagree on\n{a}");
            count += 1;
        }
    }
    assert!(count >= 100);
    println!("ACCEPTANCE criterion 6: PASS — core-nilpotent and Cline routes agree on {count}/{count} matrices");
}

#[test]
fn criterion_7_powers_at_or_above_index_are_group_invertible() {
    let triples: Vec<FlandersTriple> = general_triples().iter().step_by(3).cloned().collect();
    let mut checked = 0;
    for t in &triples {
        for product in [t.ac(), t.ba()] {
            let ind = index(&product).unwrap();
            for s in ind.max(1)..=ind + 2 {
                let power = product.pow(s).unwrap();
                let sharp = group_inverse(&power).expect("power at the index is group invertible");
                assert_eq!(&power * &sharp, &sharp * &power);
                assert_eq!(&(&sharp * &power) * &sharp, sharp);
                assert_eq!(&(&power * &sharp) * &power, power);
                checked += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE criterion 7: PASS — group axioms hold for all {checked} powers at or above the index"
    );
}

#[test]
fn criterion_8_nilpotent_similarity_suite() {
    let mut matched = 0;
    for n in 2..=8usize {
        for seed in 0..16u64 {
            let (n1, n2) = random_nilpotent_pair(n, seed * 977 + n as u64);
            let s = nilpotent_similarity(&n1, &n2).unwrap();
            assert_eq!(&(&s.inverse().unwrap() * &n2) * &s, n1);
            matched += 1;
        }
    }
    assert!(matched >= 100);

    // mismatched pairs: different partitions, hence different Weyr sequences
    let mut rng = SplitMix64::new(0xBEEF);
    let mut mismatched = 0;
    while mismatched < 20 {
        let n = 2 + rng.next_below(6) as usize;
        let j1 = canonical_nilpotent(&random_partition(&mut rng, n));
        let j2 = canonical_nilpotent(&random_partition(&mut rng, n));
        if weyr_sequence(&j1).unwrap() == weyr_sequence(&j2).unwrap() {
            continue;
        }
        match nilpotent_similarity(&j1, &j2) {
            Err(flanders::Error::WeyrMismatch { power }) => {
                assert!(power >= 1 && power <= n);
            }
            other => panic!("expected Weyr mismatch, got {other:?}"),
        }
        mismatched += 1;
    }
    println!(
        "ACCEPTANCE criterion 8: PASS — {matched} matched pairs conjugated exactly, {mismatched} mismatches detected"
    );
}
