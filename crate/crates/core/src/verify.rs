//! Exhaustive property checks over every type up to a given weight.

use serde::Serialize;

use crate::diagram::diagram_of_object;
use crate::geometry::{stratum_dim, stratum_dim_via_orbit};
use crate::hom::{delta_hom, hom_leq, hom_leq_over, mesh_defect_report, test_set_with_bound};
use crate::lr::minimal_count_prediction;
use crate::moves::down_moves;
use crate::objects::Indecomposable;
use crate::order::Poset;
use crate::partition::Partition;
use crate::reduction::{reduction_steps, replay, Strategy};

/// Outcome of one property over all types considered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        // keep reports short
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

/// Every type `(β, γ)` with `|β| <= max_weight` and at least one object.
pub fn all_posets(max_weight: u32) -> Vec<Poset> {
    let mut out = Vec::new();
    for beta in Partition::all_up_to_weight(max_weight) {
        for gamma in beta.subpartitions() {
            let poset = Poset::new(&beta, &gamma);
            if !poset.is_empty() {
                out.push(poset);
            }
        }
    }
    out
}

/// `arc_leq` and `hom_leq` agree on every ordered pair.
pub fn check_order_equivalence(posets: &[Poset]) -> Check {
    let mut c = Check::new("arc order equals hom order");
    for poset in posets {
        let objs = poset.objects();
        for (i, z) in objs.iter().enumerate() {
            for (j, y) in objs.iter().enumerate() {
                let hom = hom_leq(y, z).expect("same type");
                c.record(poset.leq(j, i) == hom, || format!("{y} vs {z}"));
            }
        }
    }
    c
}

/// The hom order computed with bipicket bound `β₁ + 1` matches bound `β₁ + 4`.
pub fn check_test_set_bound(posets: &[Poset]) -> Check {
    let mut c = Check::new("test set bound is sufficient");
    for poset in posets {
        let beta = poset.beta();
        let small = test_set_with_bound(beta, beta.first() + 1);
        let large = test_set_with_bound(beta, beta.first() + 4);
        for y in poset.objects() {
            for z in poset.objects() {
                let ok = hom_leq_over(y, z, &small) == hom_leq_over(y, z, &large);
                c.record(ok, || format!("{y} vs {z}"));
            }
        }
    }
    c
}

/// Every single down-move raises the stratum dimension; the two dimension
/// formulas agree on every object.
pub fn check_dimensions(posets: &[Poset]) -> (Check, Check) {
    let mut mono = Check::new("down-moves raise stratum dimension");
    let mut ident = Check::new("dimension consistency identity");
    for poset in posets {
        for (i, o) in poset.objects().iter().enumerate() {
            let d = stratum_dim(o);
            ident.record(d == stratum_dim_via_orbit(o), || o.to_string());
            for &(mv, j) in poset.moves_from(i) {
                let lower = &poset.objects()[j];
                mono.record(stratum_dim(lower) > d, || format!("{mv} from {o}"));
            }
        }
    }
    (mono, ident)
}

/// Both descent strategies produce chains that replay to the target with
/// hom-monotone prefixes.
pub fn check_reduction(posets: &[Poset], strategy: Strategy) -> Check {
    let name = match strategy {
        Strategy::Canonical => "descent chains exist (canonical)",
        Strategy::Walk => "descent chains exist (band walk)",
    };
    let mut c = Check::new(name);
    for poset in posets {
        let objs = poset.objects();
        for (i, z) in objs.iter().enumerate() {
            for (j, y) in objs.iter().enumerate() {
                if !poset.leq(j, i) {
                    continue;
                }
                let outcome = reduction_steps(y, z, strategy)
                    .map_err(|e| e.to_string())
                    .and_then(|steps| {
                        let moves: Vec<_> = steps.iter().map(|s| s.mv).collect();
                        let objs = replay(z, &moves).map_err(|e| e.to_string())?;
                        let monotone = objs.windows(2).all(|w| {
                            hom_leq(&w[1], &w[0]).unwrap_or(false)
                                && hom_leq(y, &w[1]).unwrap_or(false)
                        });
                        if objs.last() == Some(y) && monotone {
                            Ok(())
                        } else {
                            Err("chain does not replay monotonically".to_string())
                        }
                    });
                c.record(outcome.is_ok(), || {
                    format!("{y} <= {z}: {}", outcome.clone().unwrap_err())
                });
            }
        }
    }
    c
}

/// The four-term mesh identity holds for every same-type pair.
pub fn check_mesh(posets: &[Poset]) -> Check {
    let mut c = Check::new("mesh identity");
    for poset in posets {
        let n = poset.beta().first() + 4;
        for y in poset.objects() {
            for z in poset.objects() {
                let report = mesh_defect_report(y, z, n).expect("same type");
                c.record(report.is_empty(), || format!("{y} vs {z}: {report:?}"));
            }
        }
    }
    c
}

/// A single move changes `δH` exactly on its region.
pub fn check_regions(posets: &[Poset]) -> Check {
    let mut c = Check::new("move regions");
    for poset in posets {
        let beta = poset.beta();
        let tests = test_set_with_bound(beta, beta.first() + 1);
        for (i, z) in poset.objects().iter().enumerate() {
            for &(mv, j) in poset.moves_from(i) {
                let y = &poset.objects()[j];
                let ok = tests
                    .iter()
                    .all(|&x| delta_hom(y, z, x).expect("same type") == i64::from(mv.region(&x)));
                c.record(ok, || format!("{mv} from {z}"));
            }
        }
    }
    c
}

/// `δH` vanishes at `P0` and `P2`.
pub fn check_vanishing(posets: &[Poset]) -> Check {
    let mut c = Check::new("delta-hom vanishes on P0 and P2");
    for poset in posets {
        let top = poset.beta().first() + 2;
        for y in poset.objects() {
            for z in poset.objects() {
                let ok = (1..=top).all(|m| {
                    let p2 = m < 2 || delta_hom(y, z, Indecomposable::P2(m)) == Ok(0);
                    p2 && delta_hom(y, z, Indecomposable::P0(m)) == Ok(0)
                });
                c.record(ok, || format!("{y} vs {z}"));
            }
        }
    }
    c
}

/// Exactly one maximal element, with no arcs; on column strips the number
/// of minimal elements is the Littlewood-Richardson coefficient.
pub fn check_extrema(posets: &[Poset]) -> (Check, Check) {
    let mut max = Check::new("unique maximal element without arcs");
    let mut min = Check::new("minimal elements counted by LR coefficient");
    for poset in posets {
        let top = poset.maximal();
        let ok = top.len() == 1 && poset.diagrams()[top[0]].arcs().is_empty();
        max.record(ok, || format!("({:?}; {:?})", poset.beta(), poset.gamma()));
        if let Ok(Some(c)) = minimal_count_prediction(poset.beta(), poset.gamma()) {
            let got = poset.minimal().len() as u64;
            min.record(got == c, || {
                format!(
                    "({:?}; {:?}): {got} minimal, c = {c}",
                    poset.beta(),
                    poset.gamma()
                )
            });
        }
    }
    (max, min)
}

/// Down-move results are canonical diagrams of objects of the same type.
pub fn check_moves_stay_in_type(posets: &[Poset]) -> Check {
    let mut c = Check::new("moves preserve type");
    for poset in posets {
        for d in poset.diagrams() {
            for (mv, lower) in down_moves(d) {
                let ok = lower
                    .to_object(poset.beta(), poset.gamma())
                    .map(|o| diagram_of_object(&o) == lower)
                    .unwrap_or(false);
                c.record(ok, || format!("{mv} on {d}"));
            }
        }
    }
    c
}

/// The whole suite.
pub fn run_all(max_weight: u32) -> Vec<Check> {
    let posets = all_posets(max_weight);
    let (mono, ident) = check_dimensions(&posets);
    let (max, min) = check_extrema(&posets);
    vec![
        check_moves_stay_in_type(&posets),
        check_order_equivalence(&posets),
        check_test_set_bound(&posets),
        check_vanishing(&posets),
        check_regions(&posets),
        check_mesh(&posets),
        check_reduction(&posets, Strategy::Canonical),
        check_reduction(&posets, Strategy::Walk),
        mono,
        ident,
        max,
        min,
    ]
}
