//! Compute Drazin inverses exactly and check the defining axioms.
//!
//! ```bash
//! cargo run -p flanders --example drazin_inverse
//! ```

use flanders::gen_inverse::{drazin, drazin_cline, verify_drazin};
use flanders::matrix::Matrix;

fn show(label: &str, a: &Matrix) {
    let d = drazin(a).unwrap();
    println!("{label}:\n{a}");
    println!("index = {}, Drazin inverse:\n{}", d.index, d.inverse);
    println!(
        "axioms AX = XA, XAX = X, A^(k+1)X = A^k hold: {}",
        verify_drazin(a, &d.inverse, d.index).unwrap()
    );
    // the recursive full-rank factorization is an independent route
    assert_eq!(d.inverse, drazin_cline(a).unwrap());
    println!("independent Cline-style route agrees exactly\n");
}

fn main() {
    show("rank-one J", &Matrix::from_i64(&[&[1, 1], &[1, 1]]));
    show("invertible", &Matrix::from_i64(&[&[2, 1], &[1, 1]]));
    show("nilpotent shift", &Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]));
    show(
        "mixed core and nilpotent part",
        &Matrix::from_i64(&[&[2, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
    );
}
