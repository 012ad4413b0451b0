//! The general case: whatever the indices, (AC)^D ~ (BA)^D, and the same unit
//! also conjugates the core parts (AC)^2 (AC)^D ~ (BA)^2 (BA)^D.
//!
//! AC and BA themselves need not be similar here — that stronger claim is the
//! rank-sequence criterion of the `full_similarity` example.
//!
//! ```bash
//! cargo run -p flanders --example drazin_certificate
//! ```

use flanders::decomposition::index;
use flanders::matrix::Matrix;
use flanders::similarity::{drazin_similarity_certificate, validate_triple};

fn main() {
    // AC = 0 but BA is a shift of index 2: the products are NOT similar,
    // yet their Drazin inverses are
    let triple = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, 0]]),
    )
    .unwrap();
    println!("AC:\n{}\nBA:\n{}", triple.ac(), triple.ba());
    println!("ind(AC) = {}, ind(BA) = {}", index(&triple.ac()).unwrap(), index(&triple.ba()).unwrap());

    let (cert, core_cert, _) = drazin_similarity_certificate(&triple);
    println!("(AC)^D:\n{}\n(BA)^D:\n{}", cert.lhs, cert.rhs);
    println!("(AC)^D = u^-1 (BA)^D u verifies: {}", cert.verify());
    println!(
        "core parts (AC)^2(AC)^D ~ (BA)^2(BA)^D with the same u: {}",
        core_cert.verify()
    );
}
