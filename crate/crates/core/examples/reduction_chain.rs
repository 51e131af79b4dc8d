//! Walks from a larger object down to a smaller one by single arc moves,
//! printing each intermediate object.

use std::fmt::Write;

use arcorder::reduction::{reduction_steps, Strategy};
use arcorder::S2Object;

pub fn run_example() -> String {
    let y: S2Object = "B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)".parse().unwrap();
    let z: S2Object = "B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)".parse().unwrap();
    let mut out = String::new();
    for strategy in [Strategy::Canonical, Strategy::Walk] {
        writeln!(out, "{strategy:?}").unwrap();
        for step in reduction_steps(&y, &z, strategy).unwrap() {
            writeln!(out, "  {:<12} {} -> {}", step.mv, step.before, step.after).unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
