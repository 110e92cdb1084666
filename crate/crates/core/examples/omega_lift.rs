//! The lift attached to an O(r')-type: K-types, infinitesimal character,
//! regularity.

use theta_ktypes::theta::{infchar_theta_lift, omega_ktypes, OmegaParams};
use theta_ktypes::OLabel;

fn main() {
    let op = OmegaParams::new(1, 2, 2, 4);
    for s in ["[]", "[1]", "[2]", "d*[1]"] {
        let mu = OLabel::parse(s, op.rprime).unwrap();
        let k = omega_ktypes(op, &mu, 3).unwrap();
        match infchar_theta_lift(op, &mu) {
            Ok((c, regular)) => println!("{mu}: infchar {c}, regular {regular}"),
            Err(e) => println!("{mu}: {e}"),
        }
        println!("  {}", if k.is_empty() { "0".into() } else { k.pretty() });
    }
}
