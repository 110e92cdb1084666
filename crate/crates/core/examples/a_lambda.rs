//! K-types of A(λ) next to the lift they contain.

use theta_ktypes::cohomology::{a_lambda_mu_ktypes, aq_numerology, minimal_ktype, verify_thm14};
use theta_ktypes::theta::{omega_ktypes, OmegaParams};
use theta_ktypes::{ktype::ktype_string, OLabel, Partition};

fn main() {
    let (p, n, r, m) = (1, 2, 2, 6);
    let d = aq_numerology(p, n, r, m).unwrap();
    println!("s0 = {}, s1 = {}, s0' = {}", d.s0, d.s1, d.s0prime);

    let mu = Partition::empty();
    let a = a_lambda_mu_ktypes(p, n, r, m, &mu, 3).unwrap();
    let lift = omega_ktypes(OmegaParams::new(p, n, r, m - r), &OLabel::trivial(m - r), 3).unwrap();
    println!("A(λ):   {}", a.pretty());
    println!("lift:   {}", lift.pretty());
    println!("minimal {}", ktype_string(&minimal_ktype(p, n, r, m, &mu).unwrap()));
    println!("{:?}", verify_thm14(p, n, r, m, &OLabel::trivial(m - r), 3).verdict);
}
