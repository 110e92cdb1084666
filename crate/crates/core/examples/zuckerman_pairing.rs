//! Hom dimensions of the derived Zuckerman functor against a lift, in the
//! distinguished degree and around it.

use theta_ktypes::theta::OmegaParams;
use theta_ktypes::zuckerman::{hom_dim_against_omega, verify_prop32, xi};
use theta_ktypes::OLabel;

fn main() {
    let op = OmegaParams::new(1, 2, 2, 4);
    let mu = OLabel::parse("[1]", 4).unwrap();
    let f = xi(&mu, op).unwrap().twist(op.p % 2 == 1);
    let top = op.p * op.r;
    for i in top - 1..=top + 1 {
        let here = hom_dim_against_omega(&f, i, op, &mu).unwrap();
        let twisted = hom_dim_against_omega(&f.det_twist(), i, op, &mu).unwrap();
        println!("degree {i}: {f} -> {here}, {} -> {twisted}", f.det_twist());
    }
    let rep = verify_prop32(op, &mu, &[0, 1]);
    println!("{}: {:?}", rep.check, rep.verdict);
}
