//! Construction, verification, and exact computation of distinguishing proper
//! colorings of circulant graphs `C_n(1,k)` with maximum degree at most four.
//!
//! A *distinguishing* proper coloring is one preserved by no automorphism of
//! the graph except the identity; the minimum palette size admitting one is
//! the distinguishing chromatic number. This crate provides:
//!
//! * [`graph`]: canonical circulant graphs, adjacency, and multiplier
//!   isomorphisms (`v_i -> v_{p*i}` for `gcd(p, n) = 1`),
//! * [`autgroups`]: classification and enumeration of the automorphism
//!   groups of the tetravalent graphs `C_n(1,k)`, plus a generic
//!   backtracking search usable as an independent oracle,
//! * [`chromatic`]: the closed-form chromatic number and an exact solver,
//! * [`constructions`]: explicit optimal distinguishing colorings for every
//!   canonical pair `(n, k)`,
//! * [`verification`]: certificates (properness, distinguishing, witness),
//! * [`exact_search`]: exhaustive oracles for the distinguishing chromatic
//!   number on small graphs,
//! * [`document`]: JSON document formats consumed and produced by the CLI,
//! * [`cli`]: the `circsym` command line front end.
//!
//! All core values (graphs, permutations, groups, colorings, certificates)
//! are immutable after construction, so they can be shared and sent across
//! threads freely; batch sweeps over `(n, k)` ranges parallelize per pair.
//!
//! ```
//! use circsym::{chi_d_target, construct_certified};
//!
//! // C_12(1,5) is the wreath graph W(6,2); five colors are needed and reached
//! let (coloring, certificate) = construct_certified(12, 5).unwrap();
//! assert_eq!(chi_d_target(12, 5).unwrap(), 5);
//! assert_eq!(coloring.palette(), 5);
//! assert!(certificate.proper && certificate.distinguishing);
//! assert_eq!(certificate.group_order_checked, 768); // 2^6 * 12
//! ```

pub mod autgroups;
pub mod chromatic;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod exact_search;
pub mod graph;
pub mod perm;
pub mod verification;

pub use autgroups::{classify, AutClass, AutGroup};
pub use chromatic::{chi_exact, chi_formula, ChiValue};
pub use constructions::{chi_d_target, construct, construct_certified, Coloring};
pub use graph::CirculantGraph;
pub use perm::Permutation;
pub use verification::{certify, Certificate};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
