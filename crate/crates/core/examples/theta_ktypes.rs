//! K-types of the lift of the trivial representation, with and without the
//! reduction outside the stable range.

use theta_ktypes::theta::{outside_stable_reduce, reduced_theta_one_ktypes, theta_one_ktypes, ThetaParams};

fn main() {
    let t = ThetaParams::new(1, 2, 4);
    println!("{t}: {}", theta_one_ktypes(t, 3).unwrap().pretty());

    let outside = ThetaParams::new(2, 3, 5);
    let red = outside_stable_reduce(outside).unwrap().expect("reducible");
    println!("{outside} reduces to {} ({:?})", red.equivalent, red.case);
    println!("  {}", reduced_theta_one_ktypes(outside, 2).unwrap().pretty());
}
