//! Every runnable example executes and produces the expected headline values.

#[allow(dead_code)]
#[path = "../examples/enumerate_strata.rs"]
mod enumerate_strata;

#[allow(dead_code)]
#[path = "../examples/hasse_dot.rs"]
mod hasse_dot;

#[allow(dead_code)]
#[path = "../examples/reduction_chain.rs"]
mod reduction_chain;

#[allow(dead_code)]
#[path = "../examples/hom_order.rs"]
mod hom_order;

#[allow(dead_code)]
#[path = "../examples/matrix_oracle.rs"]
mod matrix_oracle;

#[allow(dead_code)]
#[path = "../examples/dimensions.rs"]
mod dimensions;

#[allow(dead_code)]
#[path = "../examples/littlewood_richardson.rs"]
mod littlewood_richardson;

#[test]
fn enumerate_strata_lists_ten() {
    let out = enumerate_strata::run_example();
    assert_eq!(out.lines().count(), 10);
    assert!(out.contains("poles:4,3,2,1; loops:3"));
}

#[test]
fn hasse_dot_is_a_digraph() {
    let out = hasse_dot::run_example();
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches(" -> ").count(), 4);
}

#[test]
fn reduction_chain_reaches_target() {
    let out = reduction_chain::run_example();
    let target = "-> B(7,3)+B(6,2)+P2(5)+P1(1)+P0(4)";
    assert_eq!(out.matches(target).count(), 2);
}

#[test]
fn hom_order_agrees() {
    let out = hom_order::run_example();
    assert!(out.contains("hom order: true") && out.contains("arc order: true"));
}

#[test]
fn matrix_oracle_matches_table() {
    for line in matrix_oracle::run_example().lines() {
        let (lhs, rhs) = line.rsplit_once(" (table ").unwrap();
        assert_eq!(
            lhs.rsplit(' ').next().unwrap(),
            rhs.trim_end_matches(')'),
            "{line}"
        );
    }
}

#[test]
fn dimensions_example() {
    assert!(dimensions::run_example().contains("stratum 25, hall 2, aut 5, orbit 7"));
}

#[test]
fn littlewood_richardson_example() {
    assert!(littlewood_richardson::run_example().contains("1 minimal, c = 1, prediction Some(1)"));
}
