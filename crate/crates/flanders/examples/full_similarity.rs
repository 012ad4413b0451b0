//! The rank-sequence criterion: AC ~ BA if and only if rank((AC)^k) equals
//! rank((BA)^k) for every k. Positive answers come with an explicit
//! conjugator; negative answers carry the first diverging power.
//!
//! ```bash
//! cargo run -p flanders --example full_similarity
//! ```

use flanders::matrix::Matrix;
use flanders::similarity::{full_similarity, rank_sequence, validate_triple, SimilarityOutcome};

fn report(label: &str, triple: &flanders::similarity::FlandersTriple) {
    println!("== {label} ==");
    let (ac_ranks, ba_ranks) = rank_sequence(triple);
    println!("k      | {}", (1..=ac_ranks.len()).map(|k| k.to_string()).collect::<Vec<_>>().join(" "));
    println!("AC^k   | {}", ac_ranks.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    println!("BA^k   | {}", ba_ranks.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    match full_similarity(triple) {
        SimilarityOutcome::Similar(cert) => {
            println!("similar; conjugator S with AC = S^-1 (BA) S:\n{}", cert.u);
            assert!(cert.verify());
        }
        SimilarityOutcome::NotSimilar(w) => {
            println!(
                "not similar; witness power {}: ranks {} vs {}",
                w.witness_power, w.rank_lhs, w.rank_rhs
            );
        }
    }
    println!();
}

fn main() {
    let similar = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[1, 1], &[1, 1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 1]]),
    )
    .unwrap();
    report("equal rank sequences", &similar);

    let not_similar = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
    )
    .unwrap();
    report("diverging rank sequences", &not_similar);

    // a 4x4 instance: the 2x2 pattern above extended by a genuine nilpotent
    // tail, so the conjugator has to glue a core block and a Jordan chain
    let similar_4x4 = validate_triple(
        Matrix::from_i64(&[&[0, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
        Matrix::from_i64(&[&[1, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
        Matrix::from_i64(&[&[0, 0, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
    )
    .unwrap();
    report("4x4 with core and nilpotent tail", &similar_4x4);
}
