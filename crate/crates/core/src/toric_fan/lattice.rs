//! Exact lattice-point enumeration in dilates of a [`DualPolytope`].
//!
//! Coordinates are fixed one at a time. The admissible range of coordinate
//! `j`, given integer values for coordinates `0..j`, comes from the
//! projection of the polytope onto the first `j + 1` coordinates, computed
//! once per dilate by Fourier–Motzkin elimination. Projected inequalities are
//! normalized by the gcd of their normal and rounded inward, which keeps every
//! projected integer point of the polytope and nothing more than the real
//! projection allows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::polytope::DualPolytope;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Row {
    normal: Vec<BigInt>,
    offset: BigInt,
}

/// Inequalities `⟨normal, u⟩ ≥ offset` on the first `level + 1`
/// coordinates, in machine integers for the enumeration loop.
#[derive(Debug, Clone)]
struct Level {
    rows: Vec<(Vec<i128>, i128)>,
}

/// Lattice-point count and coordinate sum of one dilate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSummary {
    pub count: u64,
    pub coordinate_sum: Vec<i128>,
}

/// `#(kQ ∩ Z^n)`.
pub fn count_lattice_points(q: &DualPolytope, k: u32) -> Result<u64> {
    let mut count = 0u64;
    for_each_lattice_point(q, k, |_| count += 1)?;
    Ok(count)
}

/// Count together with `Σ u` over `kQ ∩ Z^n`. Pairing the sum with a
/// one-parameter subgroup gives the total weight of the sections of `-kK`.
pub fn lattice_summary(q: &DualPolytope, k: u32) -> Result<LatticeSummary> {
    let mut count = 0u64;
    let mut coordinate_sum = vec![0i128; q.dim()];
    for_each_lattice_point(q, k, |u| {
        count += 1;
        for (s, &x) in coordinate_sum.iter_mut().zip(u) {
            *s += x as i128;
        }
    })?;
    Ok(LatticeSummary {
        count,
        coordinate_sum,
    })
}

/// Calls `visit` once for every integer point of `kQ`, in lexicographic
/// order.
pub fn for_each_lattice_point<F: FnMut(&[i64])>(
    q: &DualPolytope,
    k: u32,
    mut visit: F,
) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "dilation factor must be positive".into(),
        ));
    }
    let n = q.dim();
    let top: Vec<Row> = q
        .inequalities()
        .iter()
        .map(|h| Row {
            normal: h.normal.iter().map(|&a| BigInt::from(a)).collect(),
            offset: BigInt::from(h.offset) * BigInt::from(k),
        })
        .collect();
    let Some(levels) = projections(top, n)? else {
        return Ok(());
    };
    let mut point = vec![0i64; n];
    walk(&levels, 0, &mut point, &mut visit)
}

fn walk<F: FnMut(&[i64])>(
    levels: &[Level],
    j: usize,
    point: &mut [i64],
    visit: &mut F,
) -> Result<()> {
    let mut lo: Option<i128> = None;
    let mut hi: Option<i128> = None;
    for (normal, offset) in &levels[j].rows {
        let a = normal[j];
        if a == 0 {
            continue;
        }
        let rest: i128 = normal[..j]
            .iter()
            .zip(point.iter())
            .map(|(&c, &x)| c * x as i128)
            .sum();
        let r = offset - rest;
        // a·x_j ≥ r
        if a > 0 {
            let b = Integer::div_ceil(&r, &a);
            lo = Some(lo.map_or(b, |l| l.max(b)));
        } else {
            let b = Integer::div_floor(&r, &a);
            hi = Some(hi.map_or(b, |h| h.min(b)));
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Error::Unbounded(j));
    };
    let last = j + 1 == levels.len();
    for x in lo..=hi {
        point[j] =
            i64::try_from(x).map_err(|_| Error::Inconsistent("coordinate overflow".into()))?;
        if last {
            let ok = levels[j].rows.iter().all(|(normal, offset)| {
                let s: i128 = normal
                    .iter()
                    .zip(point.iter())
                    .map(|(&c, &x)| c * x as i128)
                    .sum();
                s >= *offset
            });
            if ok {
                visit(point);
            }
        } else {
            walk(levels, j + 1, point, visit)?;
        }
    }
    Ok(())
}

/// Projection chain: entry `j` constrains coordinates `0..=j`. `None` when
/// an infeasible constant inequality shows the polytope has no points.
fn projections(top: Vec<Row>, n: usize) -> Result<Option<Vec<Level>>> {
    let mut chain: Vec<Vec<Row>> = vec![Vec::new(); n];
    let Some(mut current) = reduce(top) else {
        return Ok(None);
    };
    for j in (0..n).rev() {
        chain[j] = current.clone();
        if j == 0 {
            break;
        }
        let (pos, rest): (Vec<Row>, Vec<Row>) =
            current.into_iter().partition(|r| r.normal[j].is_positive());
        let (neg, zero): (Vec<Row>, Vec<Row>) =
            rest.into_iter().partition(|r| r.normal[j].is_negative());
        if pos.is_empty() || neg.is_empty() {
            return Err(Error::Unbounded(j));
        }
        let mut next = zero;
        for p in &pos {
            for m in &neg {
                let cp = -&m.normal[j];
                let cm = p.normal[j].clone();
                let normal = p
                    .normal
                    .iter()
                    .zip(&m.normal)
                    .map(|(a, b)| a * &cp + b * &cm)
                    .collect();
                next.push(Row {
                    normal,
                    offset: &p.offset * &cp + &m.offset * &cm,
                });
            }
        }
        let Some(reduced) = reduce(next) else {
            return Ok(None);
        };
        current = reduced;
    }
    let levels = chain
        .into_iter()
        .map(|rows| {
            let rows = rows
                .into_iter()
                .map(|r| {
                    let normal = r
                        .normal
                        .iter()
                        .map(|a| a.to_i128())
                        .collect::<Option<Vec<_>>>();
                    match (normal, r.offset.to_i128()) {
                        (Some(nm), Some(off)) => Ok((nm, off)),
                        _ => Err(Error::Inconsistent(
                            "projection coefficients overflow".into(),
                        )),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Level { rows })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(levels))
}

/// Normalizes by gcd with inward rounding and keeps only the tightest
/// inequality per direction. `None` signals an unsatisfiable `0 ≥ c > 0`.
fn reduce(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut best: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    for r in rows {
        let g = r.normal.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
        if g.is_zero() {
            if r.offset.is_positive() {
                return None;
            }
            continue;
        }
        let normal: Vec<BigInt> = r.normal.iter().map(|a| a / &g).collect();
        let offset = ceil_div(&r.offset, &g);
        best.entry(normal)
            .and_modify(|o| {
                if offset > *o {
                    *o = offset.clone();
                }
            })
            .or_insert(offset);
    }
    Some(
        best.into_iter()
            .map(|(normal, offset)| Row { normal, offset })
            .collect(),
    )
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}
