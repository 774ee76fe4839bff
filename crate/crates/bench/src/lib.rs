//! Benchmark instances shared by the criterion targets.

/// Base graphs whose complementary prisms are timed, as family text.
pub const PRISM_INSTANCES: &[&str] = &[
    "path:9",
    "cycle:9",
    "complete:8",
    "star:7",
    "tree:9:seed=4",
    "union(complete:3,path:4,complete:1)",
    "theorem9:6",
];
