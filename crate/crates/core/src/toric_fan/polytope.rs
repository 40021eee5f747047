use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact_math::QMatrix;

/// A lattice polytope in `Z^n` given by its vertices, assumed to contain the
/// origin in its interior. Its face fan defines a toric Fano variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoPolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl FanoPolytope {
    /// Validates row lengths, primitivity, distinctness and spanning.
    pub fn new(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPolytope("dimension must be positive".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::InvalidPolytope(format!(
                    "vertex {} has {} coordinates, expected {dim}",
                    i + 1,
                    v.len()
                )));
            }
            let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 {
                return Err(Error::InvalidPolytope(format!(
                    "vertex {} = {v:?} is not primitive (gcd {g})",
                    i + 1
                )));
            }
            if let Some(j) = vertices[..i].iter().position(|w| w == v) {
                return Err(Error::InvalidPolytope(format!(
                    "vertex {} duplicates vertex {}",
                    i + 1,
                    j + 1
                )));
            }
        }
        if vertices.len() <= dim {
            return Err(Error::Degenerate(format!(
                "{} vertices cannot surround the origin in dimension {dim}",
                vertices.len()
            )));
        }
        let rank = QMatrix::from_int_rows(&vertices)?.rank();
        if rank != dim {
            return Err(Error::Degenerate(format!(
                "vertices span a {rank}-dimensional subspace of R^{dim}"
            )));
        }
        Ok(FanoPolytope { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> &[i64] {
        &self.vertices[index]
    }
}

/// One half-space `⟨normal, u⟩ ≥ offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// A polytope in the dual lattice, cut out by integer half-spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPolytope {
    dim: usize,
    inequalities: Vec<Inequality>,
}

impl DualPolytope {
    pub fn new(dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        if let Some(bad) = inequalities.iter().find(|h| h.normal.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "normal {:?} in dimension {dim}",
                bad.normal
            )));
        }
        Ok(DualPolytope { dim, inequalities })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    /// True when the integer point satisfies every inequality of the `k`-th
    /// dilate.
    pub fn contains(&self, u: &[i64], k: i64) -> bool {
        self.inequalities.iter().all(|h| {
            let s: i128 = h
                .normal
                .iter()
                .zip(u)
                .map(|(&a, &x)| a as i128 * x as i128)
                .sum();
            s >= (k as i128) * (h.offset as i128)
        })
    }
}

/// `Q = {u : ⟨u, v⟩ ≥ -1 for every vertex v}`; the lattice points of `kQ`
/// index the torus-invariant sections of `-kK`.
pub fn dual_polytope(p: &FanoPolytope) -> DualPolytope {
    DualPolytope {
        dim: p.dim,
        inequalities: p
            .vertices
            .iter()
            .map(|v| Inequality {
                normal: v.clone(),
                offset: -1,
            })
            .collect(),
    }
}
