//! Geodetic convexity on finite simple graphs: closed intervals, convex
//! hulls, exact minimum hull sets, and complementary prisms.
//!
//! ```
//! use geohull::{hull_number_prism, FamilySpec, SearchConfig};
//!
//! let p4: FamilySpec = "path:4".parse().unwrap();
//! let report = hull_number_prism(&p4.generate().unwrap(), &SearchConfig::default()).unwrap();
//! assert_eq!(report.hull_number, 2);
//! ```

pub mod convexity;
pub mod edgelist;
pub mod error;
pub mod family;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod vertex_set;

pub use convexity::{
    all_pairs_distances, convex_hull, interval_pair, interval_set, is_convex, is_hull_set,
    Distance, DistanceMatrix, HullTrace, IntervalTable,
};
pub use edgelist::{read_edge_list, write_edge_list};
pub use error::{FamilyError, GraphError, ParseError, SolverError};
pub use family::FamilySpec;
pub use graph::Graph;
pub use solver::{
    all_minimum_hull_sets, forced_pairs_prism, forced_vertices, hull_number, hull_number_exact,
    hull_number_prism, HullReport, SearchConfig,
};
pub use vertex_set::VertexSet;
