//! Littlewood–Richardson coefficients and a product of two GL(3)-modules.

use theta_ktypes::tensor::{gl_dim, lr_coeff, lr_product};
use theta_ktypes::Partition;

fn main() {
    let lam: Partition = "[3,2,1]".parse().unwrap();
    let mu: Partition = "[2,1]".parse().unwrap();
    println!("c^{lam}_{{{mu},{mu}}} = {}", lr_coeff(&lam, &mu, &mu));

    let a: Partition = "[1]".parse().unwrap();
    let b: Partition = "[1,1]".parse().unwrap();
    for (nu, c) in lr_product(&a, &b, 3) {
        println!("  {c} x {nu}  (dim {})", gl_dim(&nu, 3));
    }
}
