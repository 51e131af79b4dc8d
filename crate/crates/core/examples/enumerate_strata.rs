//! Lists the strata of one type with their arc diagrams and dimensions.

use std::fmt::Write;

use arcorder::{diagram_of_object, enumerate_objects, stratum_dim, Partition};

pub fn run_example() -> String {
    let beta = Partition::from([4, 3, 3, 2, 1]);
    let gamma = Partition::from([3, 2, 1, 1]);
    let mut out = String::new();
    for object in enumerate_objects(&beta, &gamma) {
        let diagram = diagram_of_object(&object);
        writeln!(
            out,
            "{:>4}  {:<36} {diagram}",
            stratum_dim(&object),
            object.to_string()
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
