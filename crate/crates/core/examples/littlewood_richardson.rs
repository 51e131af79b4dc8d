//! Counts minimal strata and compares with Littlewood-Richardson coefficients.

use std::fmt::Write;

use arcorder::{alpha_for_type, lr_coefficient, minimal_count_prediction, Partition, Poset};

pub fn run_example() -> String {
    let types = [
        (vec![4, 3, 3, 2, 1], vec![3, 2, 1, 1]),
        (vec![3, 3, 2, 1], vec![2, 2, 1]),
        (vec![4, 2, 1], vec![2, 1]),
    ];
    let mut out = String::new();
    for (b, g) in types {
        let (beta, gamma) = (Partition::new(b), Partition::new(g));
        let alpha = alpha_for_type(&beta, &gamma).unwrap();
        let minimal = Poset::new(&beta, &gamma).minimal().len();
        let c = lr_coefficient(&alpha, &gamma, &beta);
        let predicted = minimal_count_prediction(&beta, &gamma).unwrap();
        writeln!(
            out,
            "{beta:?} / {gamma:?}: {minimal} minimal, c = {c}, prediction {predicted:?}"
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
