//! Stratum dimensions and the degrees they are built from.

use std::fmt::Write;

use arcorder::{Dimensions, S2Object};

pub fn run_example() -> String {
    let mut out = String::new();
    for s in [
        "B(3,1)+P1(1)",
        "P1(3)+P1(1)+P1(1)",
        "B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)",
    ] {
        let object: S2Object = s.parse().unwrap();
        let d = Dimensions::of(&object);
        writeln!(
            out,
            "{object}: stratum {}, hall {}, aut {}, orbit {}",
            d.stratum_dim, d.hall_degree, d.aut_degree, d.subspace_orbit_dim
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
