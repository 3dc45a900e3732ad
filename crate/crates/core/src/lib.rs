//! Hosoya polynomial, Wiener index and hyper-Wiener index of distance-regular
//! graphs, computed in closed form from intersection arrays and checked
//! exactly against all-pairs BFS.
//!
//! ```
//! use hosoya::IntersectionArray;
//!
//! let cube = IntersectionArray::validate(&[3, 2, 1], &[1, 2, 3]).unwrap().array;
//! assert_eq!(cube.hosoya_closed_form().unwrap().render(), "12*t + 12*t^2 + 4*t^3");
//! assert_eq!(cube.wiener_closed_form().unwrap(), 48.into());
//! ```

pub mod families;
pub mod graphs;
pub mod intersection;
pub mod polynomial;
pub mod report;

pub use families::{FamilySpec, DEFAULT_MAX_VERTICES};
pub use graphs::{check_distance_regular, distance_distribution, DistanceDistribution, Graph};
pub use intersection::{IntersectionArray, IntersectionError, SrgParams};
pub use polynomial::IntPolynomial;
pub use report::{Report, Verification};
