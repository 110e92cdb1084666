//! Restricting O(n)-types to O(a) x O(b), to O(n-1), and tensoring.

use theta_ktypes::orth::branch_one_step;
use theta_ktypes::tensor::{stable_o_branch_ext, tensor};
use theta_ktypes::OLabel;

fn main() {
    let x = OLabel::parse("[2]", 6).unwrap();
    let split = stable_o_branch_ext(&x, 3, 3).unwrap();
    println!("{x} of O(6) on O(3)xO(3): {}", split.pretty());

    let y = OLabel::parse("[2,1]", 4).unwrap();
    let down: Vec<String> = branch_one_step(&y).iter().map(|z| z.to_string()).collect();
    println!("{y} of O(4) on O(3): {}", down.join(" + "));

    let v = OLabel::parse("[1]", 5).unwrap();
    println!("{v} ⊗ {v} on O(5): {}", tensor(&v, &v).unwrap().pretty());
}
