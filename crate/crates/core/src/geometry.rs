//! Stratum and orbit dimensions.
//!
//! All quantities are exact integers; arithmetic is checked `i128` and an
//! overflow panics rather than wrapping.

use serde::Serialize;

use crate::diagram::diagram_of_object;
use crate::objects::S2Object;
use crate::partition::Partition;

fn w(p: &Partition) -> i128 {
    p.weight().into()
}

fn n(p: &Partition) -> i128 {
    p.moment().into()
}

fn sum(terms: &[i128]) -> i128 {
    terms
        .iter()
        .try_fold(0i128, |acc, &t| acc.checked_add(t))
        .expect("dimension overflow")
}

fn sq(x: i128) -> i128 {
    x.checked_mul(x).expect("dimension overflow")
}

/// `|β|² + |α|² - n(α) - n(β) - n(γ) - |β| - x(Δ)`.
pub fn stratum_dim(object: &S2Object) -> i128 {
    let (beta, gamma) = object.object_type();
    let alpha = object.alpha();
    let x = i128::from(diagram_of_object(object).crossings());
    sum(&[
        sq(w(&beta)),
        sq(w(&alpha)),
        -n(&alpha),
        -n(&beta),
        -n(&gamma),
        -w(&beta),
        -x,
    ])
}

/// Degree of the Hall polynomial, `n(β) - n(α) - n(γ)`.
pub fn hall_degree(alpha: &Partition, beta: &Partition, gamma: &Partition) -> i128 {
    sum(&[n(beta), -n(alpha), -n(gamma)])
}

/// Degree of `a_α(q)`, the order of the automorphism group: `|α| + 2n(α)`.
pub fn aut_degree(alpha: &Partition) -> i128 {
    sum(&[w(alpha), 2 * n(alpha)])
}

/// Dimension of the orbit of the embedding inside the space of monomorphisms.
pub fn subspace_orbit_dim(object: &S2Object) -> i128 {
    let (beta, gamma) = object.object_type();
    let alpha = object.alpha();
    let x = i128::from(diagram_of_object(object).crossings());
    sum(&[hall_degree(&alpha, &beta, &gamma), aut_degree(&alpha), -x])
}

/// Right-hand side of the consistency identity
/// `dim V = |α|² + |β|² - deg a_α - deg a_β + dim G_f`.
pub fn stratum_dim_via_orbit(object: &S2Object) -> i128 {
    let (beta, _) = object.object_type();
    let alpha = object.alpha();
    sum(&[
        sq(w(&alpha)),
        sq(w(&beta)),
        -aut_degree(&alpha),
        -aut_degree(&beta),
        subspace_orbit_dim(object),
    ])
}

/// Every dimension quantity of one object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub crossings: u64,
    pub stratum_dim: i128,
    pub hall_degree: i128,
    pub aut_degree: i128,
    pub subspace_orbit_dim: i128,
}

impl Dimensions {
    pub fn of(object: &S2Object) -> Self {
        let (beta, gamma) = object.object_type();
        let alpha = object.alpha();
        Dimensions {
            crossings: diagram_of_object(object).crossings(),
            stratum_dim: stratum_dim(object),
            hall_degree: hall_degree(&alpha, &beta, &gamma),
            aut_degree: aut_degree(&alpha),
            subspace_orbit_dim: subspace_orbit_dim(object),
            alpha,
            beta,
            gamma,
        }
    }
}
