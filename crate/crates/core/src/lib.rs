//! Invariant subspaces of nilpotent operators with subspace exponent at most 2.
//!
//! Objects are direct sums of the indecomposables `P0(m)`, `P1(m)`, `P2(m)`
//! and the bipickets `B2(m, r)`. Each object of a fixed type `(β, γ)` has an
//! arc diagram, and the five arc moves generate a partial order that
//! coincides with the order given by Hom dimensions. The crate computes both
//! orders, explicit move chains between comparable objects, stratum
//! dimensions, and the Littlewood-Richardson count of minimal strata.
//!
//! ```
//! use arcorder::{hom_leq, reduction_chain, S2Object};
//!
//! let y: S2Object = "B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)".parse().unwrap();
//! let z: S2Object = "B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)".parse().unwrap();
//! assert!(hom_leq(&y, &z).unwrap());
//! let chain = reduction_chain(&y, &z).unwrap();
//! assert!(!chain.is_empty());
//! ```

pub mod cli;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod hom;
pub mod lr;
pub mod moves;
pub mod objects;
pub mod oracle;
pub mod order;
pub mod partition;
pub mod reduction;
pub mod verify;

pub use diagram::{diagram_of_object, object_of_diagram, ArcDiagram};
pub use error::{Error, Result};
pub use geometry::{aut_degree, hall_degree, stratum_dim, subspace_orbit_dim, Dimensions};
pub use hom::{
    delta_hom, delta_mult, hom_indec, hom_leq, hom_obj, mesh_defect_report, test_set, BandCell,
};
pub use lr::{alpha_for_type, lr_coefficient, minimal_count_prediction};
pub use moves::{down_moves, up_moves, Move};
pub use objects::{enumerate_objects, Indecomposable, S2Object};
pub use oracle::{oracle_hom_dim, realize};
pub use order::{arc_leq, extrema, hasse, Poset};
pub use partition::Partition;
pub use reduction::{find_descent_move, reduction_chain, Strategy};
