//! The group-invertible case: for A, B, C with ABA = ACA and both AC and BA
//! group invertible, construct the unit u with AC = u^-1 (BA) u, and watch the
//! same u conjugate the group inverses.
//!
//! ```bash
//! cargo run -p flanders --example group_certificate
//! ```

use flanders::matrix::Matrix;
use flanders::similarity::{group_similarity_certificate, validate_triple};

fn main() {
    let triple = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[1, 1], &[1, 1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 1]]),
    )
    .unwrap();
    println!("A:\n{}\nB:\n{}\nC:\n{}", triple.a(), triple.b(), triple.c());
    println!("AC:\n{}\nBA:\n{}", triple.ac(), triple.ba());

    let (cert, cert_sharp, workings) = group_similarity_certificate(&triple).unwrap();
    println!("unit u:\n{}", cert.u);
    println!("u^-1 (closed form v - vxv + y):\n{}", cert.u_inv);
    println!("AC = u^-1 (BA) u verifies: {}", cert.verify());
    println!("(AC)^#:\n{}\n(BA)^#:\n{}", cert_sharp.lhs, cert_sharp.rhs);
    println!("(AC)^# = u^-1 (BA)^# u with the same u: {}", cert_sharp.verify());

    println!("\nconstruction intermediates");
    println!("x = B (AC)^#:\n{}", workings.x);
    println!("y = AC (AC)^# A:\n{}", workings.y);
    println!("unit-regular factor v of x:\n{}", workings.v);
}
