//! Group inverses: the index-at-most-1 case of the Drazin inverse, where the
//! extra axiom A A^# A = A also holds.
//!
//! ```bash
//! cargo run -p flanders --example group_inverse
//! ```

use flanders::gen_inverse::group_inverse;
use flanders::matrix::Matrix;

fn main() {
    let a = Matrix::from_i64(&[&[0, 2], &[0, 2]]);
    let sharp = group_inverse(&a).unwrap();
    println!("A:\n{a}\nA^#:\n{sharp}");
    assert_eq!(&(&a * &sharp) * &a, a);
    assert_eq!(&a * &sharp, &sharp * &a);
    println!("A A^# A = A and A A^# = A^# A hold exactly\n");

    // a nilpotent shift has index 2: no group inverse exists
    let shift = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    match group_inverse(&shift) {
        Err(e) => println!("shift matrix: {e}"),
        Ok(_) => unreachable!(),
    }
}
