//! Split a matrix into its invertible core and nilpotent part, and conjugate
//! two nilpotents with matching Weyr sequences onto each other.
//!
//! ```bash
//! cargo run -p flanders --example core_nilpotent
//! ```

use flanders::decomposition::{core_nilpotent, nilpotent_similarity, weyr_sequence};
use flanders::instances::random_nilpotent_pair;
use flanders::matrix::Matrix;

fn main() {
    let a = Matrix::from_i64(&[&[2, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    let d = core_nilpotent(&a).unwrap();
    println!("A:\n{a}");
    println!("index = {}, core rank = {}", d.index, d.core_rank);
    println!("core (invertible):\n{}", d.core);
    println!("nil (nilpotent):\n{}", d.nil);
    assert_eq!(d.reassemble(), a);
    println!("P^-1 diag(core, nil) P reassembles A exactly\n");

    let (n1, n2) = random_nilpotent_pair(5, 42);
    println!("N1:\n{n1}\nN2:\n{n2}");
    println!("shared Weyr sequence: {:?}", weyr_sequence(&n1).unwrap().values);
    let s = nilpotent_similarity(&n1, &n2).unwrap();
    assert_eq!(&(&s.inverse().unwrap() * &n2) * &s, n1);
    println!("found S with N1 = S^-1 N2 S:\n{s}");
}
