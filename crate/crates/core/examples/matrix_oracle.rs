//! Realizes objects as explicit matrices over a prime field and solves for
//! the space of homomorphisms.

use std::fmt::Write;

use arcorder::{hom_obj, oracle_hom_dim, S2Object};

pub fn run_example() -> String {
    let pairs = [
        ("B(5,2)", "B(4,2)"),
        ("B(4,1)+P1(2)", "P2(3)+P0(2)+P1(3)"),
        ("P1(3)", "P2(4)"),
    ];
    let mut out = String::new();
    for (a, b) in pairs {
        let (x, y): (S2Object, S2Object) = (a.parse().unwrap(), b.parse().unwrap());
        for p in [2, 101] {
            let dim = oracle_hom_dim(&x, &y, p).unwrap();
            writeln!(
                out,
                "[{x}, {y}] over F_{p}: {dim} (table {})",
                hom_obj(&x, &y)
            )
            .unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
