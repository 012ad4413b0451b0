//! Transfer a Drazin inverse across the constraint ABA = ACA:
//! (BA)^D = B ((AC)^D)^2 A, so one decomposition pays for both products.
//!
//! ```bash
//! cargo run -p flanders --example inverse_transfer
//! ```

use flanders::gen_inverse::drazin;
use flanders::matrix::Matrix;
use flanders::similarity::{lemma1_transfer, validate_triple};

fn main() {
    let triple = validate_triple(
        Matrix::from_i64(&[&[0, 1], &[0, 1]]),
        Matrix::from_i64(&[&[1, 1], &[1, 1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 1]]),
    )
    .unwrap();

    let (ba_d, ac_d) = lemma1_transfer(&triple);
    println!("(AC)^D computed directly:\n{ac_d}");
    println!("(BA)^D obtained as B ((AC)^D)^2 A:\n{ba_d}");

    let direct = drazin(&triple.ba()).unwrap().inverse;
    assert_eq!(ba_d, direct);
    println!("matches the directly computed (BA)^D exactly");

    // the companion identities travel with the transfer
    assert_eq!(triple.a() * &ba_d, &ac_d * triple.a());
    println!("A (BA)^D = (AC)^D A holds");
    assert_eq!(
        &(triple.a() * triple.b()) * &ac_d,
        &(triple.a() * triple.c()) * &ac_d
    );
    println!("AB (AC)^D = AC (AC)^D holds");
}
