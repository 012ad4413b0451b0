//! Powers at or above the index: (AC)^s ~ (BA)^s for every
//! s >= max(ind(AC), ind(BA)), and (AB)^s ~ (BA)^s as the B = C case.
//!
//! ```bash
//! cargo run -p flanders --example power_similarity
//! ```

use flanders::matrix::Matrix;
use flanders::similarity::{ab_ba_power, power_similarity, validate_triple};

fn main() {
    let triple = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[0, 1], &[1, 0]]),
    )
    .unwrap();
    println!("AC:\n{}\nBA:\n{}", triple.ac(), triple.ba());
    for s in 1..=5 {
        let cert = power_similarity(&triple, s).unwrap();
        assert!(cert.verify());
        println!("s = {s}: (AC)^{s} = u^-1 (BA)^{s} u with u =\n{}", cert.u);
    }

    println!("\nbelow the index the reduction is refused:");
    let shifted = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
    )
    .unwrap();
    println!("  {}", power_similarity(&shifted, 1).unwrap_err());

    // the two-matrix convenience form
    let a = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
    let b = Matrix::from_i64(&[&[0, 1], &[1, 1]]);
    let cert = ab_ba_power(&a, &b, 1).unwrap();
    println!("\n(AB)^1 ~ (BA)^1 for a generic invertible pair: {}", cert.verify());
}
