//! Compares two objects through Hom dimensions against the finite test set.

use std::fmt::Write;

use arcorder::{arc_leq, delta_hom, hom_leq, test_set, S2Object};

pub fn run_example() -> String {
    let y: S2Object = "B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)".parse().unwrap();
    let z: S2Object = "B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)".parse().unwrap();
    let (beta, _) = y.object_type();
    let mut out = String::new();
    for x in test_set(&beta) {
        let d = delta_hom(&y, &z, x).unwrap();
        if d != 0 {
            writeln!(out, "[{x}, Z] - [{x}, Y] = {d}").unwrap();
        }
    }
    writeln!(out, "hom order: {}", hom_leq(&y, &z).unwrap()).unwrap();
    writeln!(out, "arc order: {}", arc_leq(&y, &z).unwrap()).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
