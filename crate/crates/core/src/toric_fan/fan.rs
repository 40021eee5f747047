use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::polytope::FanoPolytope;
use crate::error::{Error, Result};
use crate::exact_math::{format_rational, QMatrix, Rational};

/// An n-dimensional cone of the face fan, spanned by the vertices of one
/// facet. Each maximal cone is one torus-fixed point of the variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCone {
    vertex_indices: Vec<usize>,
    generators: QMatrix,
    dual: QMatrix,
    facet_normal: Vec<Rational>,
}

impl MaximalCone {
    /// Indices into the polytope's vertex list, ascending.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    /// `n × n` matrix whose columns are the generators in index order.
    pub fn generator_matrix(&self) -> &QMatrix {
        &self.generators
    }

    /// `V⁻¹`; its rows pair with the generators to give the identity.
    pub fn dual_matrix(&self) -> &QMatrix {
        &self.dual
    }

    /// The `a` with `⟨a, v⟩ = 1` on the facet and `≤ 1` on every vertex.
    pub fn facet_normal(&self) -> &[Rational] {
        &self.facet_normal
    }

    pub fn det(&self) -> Rational {
        self.generators.det().expect("generator matrix is square")
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }
}

/// Cones over the facets of `conv(vertices)`.
///
/// Every `n`-subset of vertices is tried: the hyperplane `⟨a, x⟩ = 1`
/// through it is a facet iff no vertex lies beyond it. Facets containing more
/// than `n` vertices are rejected.
pub fn face_fan(p: &FanoPolytope) -> Result<Vec<MaximalCone>> {
    let n = p.dim();
    let subsets = combinations(p.vertices().len(), n);
    let found: Vec<Option<MaximalCone>> = subsets
        .par_iter()
        .map(|subset| facet_through(p, subset))
        .collect::<Result<_>>()?;
    let cones: Vec<MaximalCone> = found.into_iter().flatten().collect();
    if cones.is_empty() {
        return Err(Error::Degenerate("no facet avoids the origin".into()));
    }
    check_complete(&cones)?;
    Ok(cones)
}

fn facet_through(p: &FanoPolytope, subset: &[usize]) -> Result<Option<MaximalCone>> {
    let rows: Vec<Vec<i64>> = subset.iter().map(|&i| p.vertex(i).to_vec()).collect();
    let m = QMatrix::from_int_rows(&rows)?;
    let ones = vec![Rational::one(); subset.len()];
    let normal = match m.solve(&ones) {
        Ok(a) => a,
        Err(Error::Singular) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut on_facet = Vec::new();
    for (i, v) in p.vertices().iter().enumerate() {
        let value: Rational = normal
            .iter()
            .zip(v)
            .filter(|(_, &x)| x != 0)
            .map(|(a, &x)| a * Rational::from_integer(BigInt::from(x)))
            .sum();
        if value > Rational::one() {
            return Ok(None);
        }
        if value.is_one() {
            on_facet.push(i);
        }
    }
    if on_facet.len() > subset.len() {
        return Err(Error::NonSimplicialFacet { vertices: on_facet });
    }
    let generators = m.transpose();
    let dual = generators.inverse()?;
    Ok(Some(MaximalCone {
        vertex_indices: subset.to_vec(),
        generators,
        dual,
        facet_normal: normal,
    }))
}

/// A simplicial fan covers `R^n` exactly when every ridge lies in two cones.
fn check_complete(cones: &[MaximalCone]) -> Result<()> {
    let mut ridges: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for c in cones {
        for skip in 0..c.vertex_indices.len() {
            let mut r = c.vertex_indices.clone();
            r.remove(skip);
            *ridges.entry(r).or_default() += 1;
        }
    }
    match ridges.iter().find(|(_, &count)| count != 2) {
        Some((ridge, _)) => Err(Error::Degenerate(format!(
            "origin is not in the interior (ridge {:?} bounds a single facet)",
            ridge.iter().map(|i| i + 1).collect::<Vec<_>>()
        ))),
        None => Ok(()),
    }
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Per-cone `|det V|` and the overall smoothness flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub abs_dets: Vec<Rational>,
    pub smooth: bool,
}

impl SmoothnessReport {
    /// Positions (into the cone list) of cones with `|det| ≠ 1`.
    pub fn failures(&self) -> Vec<usize> {
        self.abs_dets
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn check_smooth(cones: &[MaximalCone]) -> SmoothnessReport {
    let abs_dets: Vec<Rational> = cones.iter().map(|c| c.det().abs()).collect();
    let smooth = abs_dets.iter().all(One::is_one);
    SmoothnessReport { abs_dets, smooth }
}

/// Rows `u_1..u_n` with `⟨u_i, v_j⟩ = δ_ij`; integral for unimodular cones.
pub fn dual_basis(c: &MaximalCone) -> Result<QMatrix> {
    let det = c.det();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular {
            vertices: c.vertex_indices.iter().map(|i| i + 1).collect(),
            det: format_rational(&det.abs()),
        });
    }
    Ok(c.dual.clone())
}

/// The face fan of a Fano polytope together with its smoothness report.
#[derive(Debug, Clone)]
pub struct Fan {
    polytope: FanoPolytope,
    cones: Vec<MaximalCone>,
    smoothness: SmoothnessReport,
}

impl Fan {
    pub fn new(polytope: FanoPolytope) -> Result<Self> {
        let cones = face_fan(&polytope)?;
        let smoothness = check_smooth(&cones);
        Ok(Fan {
            polytope,
            cones,
            smoothness,
        })
    }

    pub fn polytope(&self) -> &FanoPolytope {
        &self.polytope
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn cones(&self) -> &[MaximalCone] {
        &self.cones
    }

    pub fn smoothness(&self) -> &SmoothnessReport {
        &self.smoothness
    }

    pub fn is_smooth(&self) -> bool {
        self.smoothness.smooth
    }

    /// Fails with the first non-unimodular cone if the fan is singular.
    pub fn require_smooth(&self) -> Result<()> {
        match self.smoothness.failures().first() {
            None => Ok(()),
            Some(&i) => dual_basis(&self.cones[i]).map(|_| ()),
        }
    }

    /// Position of the cone spanned by exactly these vertices (any order).
    pub fn find_cone(&self, vertices: &[usize]) -> Result<usize> {
        let wanted: BTreeSet<usize> = vertices.iter().copied().collect();
        self.cones
            .iter()
            .position(|c| {
                c.vertex_indices.len() == wanted.len()
                    && c.vertex_indices.iter().all(|i| wanted.contains(i))
            })
            .ok_or_else(|| Error::UnknownCone(vertices.iter().map(|i| i + 1).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::int;

    fn poly(dim: usize, rows: &[&[i64]]) -> FanoPolytope {
        FanoPolytope::new(dim, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn indices(cones: &[MaximalCone]) -> Vec<Vec<usize>> {
        cones.iter().map(|c| c.vertex_indices().to_vec()).collect()
    }

    #[test]
    fn cp1_and_cp2() {
        let cp1 = face_fan(&poly(1, &[&[1], &[-1]])).unwrap();
        assert_eq!(indices(&cp1), vec![vec![0], vec![1]]);
        let cp2 = face_fan(&poly(2, &[&[1, 0], &[0, 1], &[-1, -1]])).unwrap();
        assert_eq!(indices(&cp2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(check_smooth(&cp2).smooth);
    }

    #[test]
    fn weighted_projective_plane_is_singular() {
        let p = poly(2, &[&[1, 0], &[0, 1], &[-1, -2]]);
        let cones = face_fan(&p).unwrap();
        let report = check_smooth(&cones);
        assert!(!report.smooth);
        let bad = cones
            .iter()
            .position(|c| c.vertex_indices() == [0, 2])
            .unwrap();
        assert_eq!(report.abs_dets[bad], int(2));
        assert_eq!(report.failures(), vec![bad]);
        assert!(matches!(
            dual_basis(&cones[bad]),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(Fan::new(p).unwrap().require_smooth().is_err());
    }

    #[test]
    fn square_facets_are_rejected() {
        // octahedron's dual, the cube, has 4 vertices per facet
        let rows: Vec<Vec<i64>> = (0..8)
            .map(|m| {
                (0..3)
                    .map(|b| if m >> b & 1 == 1 { 1 } else { -1 })
                    .collect()
            })
            .collect();
        let p = FanoPolytope::new(3, rows).unwrap();
        assert!(matches!(
            face_fan(&p),
            Err(Error::NonSimplicialFacet { .. })
        ));
    }

    #[test]
    fn origin_outside_is_degenerate() {
        let p = poly(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(face_fan(&p), Err(Error::Degenerate(_))));
    }

    #[test]
    fn dual_bases_invert_generators() {
        let p = poly(2, &[&[1, 0], &[0, 1], &[-1, -1]]);
        for c in face_fan(&p).unwrap() {
            let u = dual_basis(&c).unwrap();
            assert!(u.is_integral());
            assert_eq!(u.mul(c.generator_matrix()).unwrap(), QMatrix::identity(2));
        }
        let id = face_fan(&p).unwrap().remove(0);
        assert_eq!(dual_basis(&id).unwrap(), QMatrix::identity(2));
    }

    #[test]
    fn cp2_cone_dual_matches_hand_inverse() {
        // generators (1,0) and (-1,-1) as columns: V = [[1,-1],[0,-1]]
        let p = poly(2, &[&[1, 0], &[0, 1], &[-1, -1]]);
        let fan = Fan::new(p).unwrap();
        let c = &fan.cones()[fan.find_cone(&[2, 0]).unwrap()];
        let expected = QMatrix::from_int_rows(&[vec![1, -1], vec![0, -1]]).unwrap();
        assert_eq!(c.generator_matrix(), &expected);
        assert_eq!(dual_basis(c).unwrap(), expected);
        assert!(matches!(fan.find_cone(&[0]), Err(Error::UnknownCone(_))));
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(12, 7).len(), 792);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
