//! Assembling Zuckerman images of the restricted trivial lift and comparing
//! with the lift to the larger group.

use theta_ktypes::theta::{theta_one_ktypes, ThetaParams};
use theta_ktypes::zuckerman::{gamma_theta_assembly, verify_thm11, AssemblyMode};

fn main() {
    let t = ThetaParams::new(1, 2, 6);
    let r = 2;
    let got = gamma_theta_assembly(t, r, 3, AssemblyMode::Formula).unwrap();
    let want = theta_one_ktypes(ThetaParams::new(1, 4, 4), 3).unwrap();
    println!("assembled: {}", got.pretty());
    println!("expected:  {}", want.pretty());
    for mode in [AssemblyMode::Formula, AssemblyMode::BruteForce] {
        println!("{mode:?}: {:?}", verify_thm11(t, r, 3, mode).verdict);
    }
}
