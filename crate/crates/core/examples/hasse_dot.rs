//! Prints the Hasse diagram of a small type in Graphviz format.

use arcorder::{Partition, Poset};

pub fn run_example() -> String {
    let poset = Poset::new(&Partition::from([3, 3, 2, 1]), &Partition::from([2, 2, 1]));
    poset.to_dot()
}

fn main() {
    print!("{}", run_example());
}
