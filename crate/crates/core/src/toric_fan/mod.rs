//! Lattice combinatorics of a toric Fano manifold: the face fan of its Fano
//! polytope, smoothness, dual bases of the maximal cones, and the section
//! polytope of the anticanonical bundle with an exact lattice-point counter.

mod fan;
mod lattice;
mod polytope;

pub use fan::{check_smooth, dual_basis, face_fan, Fan, MaximalCone, SmoothnessReport};
pub use lattice::{count_lattice_points, for_each_lattice_point, lattice_summary, LatticeSummary};
pub use polytope::{dual_polytope, DualPolytope, FanoPolytope, Inequality};
