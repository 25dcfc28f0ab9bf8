//! Vertex enumeration (H- to V-representation).
//!
//! [`enumerate_vertices`] runs an exact double description over the
//! homogenized cone `{(t, x) : t ≥ 0, b t − a · x ≥ 0}`, with integer rays and
//! the combinatorial adjacency test. [`enumerate_vertices_exhaustive`]
//! intersects every `d`-subset of hyperplanes and keeps the feasible unique
//! solutions; it is slow and kept as an independent cross-check.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::hrep::HalfspaceSystem;
use super::linalg::{affine_dimension, inverse, rank, solve};
use super::rational::{clear_denominators, is_integer, make_primitive, Rational};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Exact vertex list, sorted lexicographically and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    pub dim: usize,
    pub vertices: Vec<Vec<Rational>>,
}

impl VertexSet {
    pub fn new(dim: usize, vertices: impl IntoIterator<Item = Vec<Rational>>) -> Result<Self> {
        let set: BTreeSet<Vec<Rational>> = vertices.into_iter().collect();
        if let Some(v) = set.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        Ok(VertexSet { dim, vertices: set.into_iter().collect() })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.vertices.binary_search_by(|w| w.as_slice().cmp(v)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.vertices.iter()
    }
}

fn check_dim(sys: &HalfspaceSystem, limits: &Limits) -> Result<()> {
    if sys.dim == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if sys.dim > limits.vertex_dimension {
        return Err(Error::limit("vertex enumeration dimension", sys.dim, limits.vertex_dimension));
    }
    Ok(())
}

pub fn enumerate_vertices(sys: &HalfspaceSystem) -> Result<VertexSet> {
    enumerate_vertices_with(sys, &Limits::default())
}

struct Ray {
    z: Vec<BigInt>,
    zero: FixedBitSet,
}

fn dot(row: &[BigInt], z: &[BigInt]) -> BigInt {
    row.iter()
        .zip(z)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

pub fn enumerate_vertices_with(sys: &HalfspaceSystem, limits: &Limits) -> Result<VertexSet> {
    check_dim(sys, limits)?;
    let d = sys.dim;
    let width = d + 1;

    // row · (t, x) ≥ 0; row 0 is t ≥ 0
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(sys.len() + 1);
    let mut t_row = vec![BigInt::zero(); width];
    t_row[0] = BigInt::one();
    rows.push(t_row);
    for h in &sys.halfspaces {
        let mut values = vec![h.bound.clone()];
        values.extend(h.coefficients.iter().map(|a| -a));
        let (mut ints, _) = clear_denominators(&values);
        make_primitive(&mut ints);
        rows.push(ints);
    }
    let m = rows.len();

    // Initial simplicial cone from the first independent rows.
    let mut basis: Vec<usize> = Vec::with_capacity(width);
    let mut basis_rows: Vec<Vec<Rational>> = Vec::with_capacity(width);
    for (k, row) in rows.iter().enumerate() {
        let r: Vec<Rational> = row.iter().cloned().map(Rational::from_integer).collect();
        basis_rows.push(r);
        if rank(basis_rows.clone()) == basis_rows.len() {
            basis.push(k);
            if basis.len() == width {
                break;
            }
        } else {
            basis_rows.pop();
        }
    }
    if basis.len() < width {
        return Err(Error::Unbounded);
    }
    let inv = inverse(&basis_rows).expect("independent rows");
    let mut rays: Vec<Ray> = Vec::with_capacity(width);
    for (col, &own) in basis.iter().enumerate() {
        let column: Vec<Rational> = (0..width).map(|i| inv[i][col].clone()).collect();
        let (mut z, _) = clear_denominators(&column);
        make_primitive(&mut z);
        let mut zero = FixedBitSet::with_capacity(m);
        for &other in &basis {
            if other != own {
                zero.insert(other);
            }
        }
        rays.push(Ray { z, zero });
    }

    let in_basis: FixedBitSet = basis.iter().copied().collect();
    for r in (0..m).filter(|k| !in_basis.contains(*k)) {
        let values: Vec<BigInt> = rays.iter().map(|ray| dot(&rows[r], &ray.z)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        if neg.is_empty() {
            for (ray, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    ray.zero.insert(r);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let mut common = rays[p].zero.clone();
                common.intersect_with(&rays[n].zero);
                if common.count_ones(..) + 1 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(q, ray)| q != p && q != n && common.is_subset(&ray.zero));
                if blocked {
                    continue;
                }
                let mut z: Vec<BigInt> = rays[n]
                    .z
                    .iter()
                    .zip(&rays[p].z)
                    .map(|(zn, zp)| &values[p] * zn - &values[n] * zp)
                    .collect();
                make_primitive(&mut z);
                common.insert(r);
                created.push(Ray { z, zero: common });
            }
        }

        let mut next = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, v) in rays.into_iter().zip(values) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                ray.zero.insert(r);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }

    let mut vertices = Vec::with_capacity(rays.len());
    let mut recession = false;
    for ray in &rays {
        let t = &ray.z[0];
        if t.is_positive() {
            vertices.push(ray.z[1..].iter().map(|x| Rational::new(x.clone(), t.clone())).collect());
        } else if ray.z.iter().any(|x| !x.is_zero()) {
            recession = true;
        }
    }
    if recession {
        return Err(Error::Unbounded);
    }
    if vertices.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    VertexSet::new(d, vertices)
}

/// Intersects every `d`-subset of hyperplanes. Exponential in the number of
/// inequalities; meant for cross-checking [`enumerate_vertices`].
pub fn enumerate_vertices_exhaustive(sys: &HalfspaceSystem) -> Result<VertexSet> {
    check_dim(sys, &Limits::default())?;
    let d = sys.dim;
    let m = sys.len();
    let mut found = BTreeSet::new();
    let mut pick: Vec<usize> = (0..d).collect();
    if m < d {
        return Err(Error::Unbounded);
    }
    loop {
        let a: Vec<Vec<Rational>> = pick.iter().map(|&k| sys.halfspaces[k].coefficients.clone()).collect();
        let b: Vec<Rational> = pick.iter().map(|&k| sys.halfspaces[k].bound.clone()).collect();
        if let Some(x) = solve(&a, &b) {
            if sys.contains(&x) {
                found.insert(x);
            }
        }
        // next combination in lexicographic order
        let Some(k) = (0..d).rev().find(|&k| pick[k] < m - d + k) else {
            break;
        };
        pick[k] += 1;
        for j in k + 1..d {
            pick[j] = pick[j - 1] + 1;
        }
    }
    if found.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    VertexSet::new(d, found)
}

/// True when every coordinate of every vertex is an integer.
pub fn is_integral(v: &VertexSet) -> bool {
    v.vertices.iter().flatten().all(is_integer)
}

/// Dimension of the affine hull of the vertices.
pub fn polytope_dimension(v: &VertexSet) -> usize {
    affine_dimension(&v.vertices).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hrep::{hrep_chain, hrep_order, hrep_order_chain, indicator_vector, Halfspace, HalfspaceTag};
    use crate::geometry::rational::{int, ratio};
    use crate::partition::EdgePartition;
    use crate::poset::Poset;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn triangle() {
        let v = enumerate_vertices(&hrep_order(&Poset::chain(2).unwrap())).unwrap();
        assert_eq!(v.vertices, ints(&[&[0, 0], &[1, 0], &[1, 1]]));
    }

    #[test]
    fn diamond_half_vertex() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let l1 = EdgePartition::new(&p, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        let v = enumerate_vertices(&hrep_order_chain(&l1)).unwrap();
        assert!(v.contains(&vec![ratio(1, 2); 4]));
        assert!(!is_integral(&v));
        let l2 = EdgePartition::new(&p, &[(1, 3)]).unwrap();
        assert!(is_integral(&enumerate_vertices(&hrep_order_chain(&l2)).unwrap()));
    }

    #[test]
    fn chain_polytope_vertices_are_antichains() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).unwrap();
        let v = enumerate_vertices(&hrep_chain(&p)).unwrap();
        let expected = VertexSet::new(4, p.antichains().iter().map(|a| indicator_vector(a, 4).unwrap())).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn matches_exhaustive_on_small_systems() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        for l in crate::partition::enumerate_partitions(&p).unwrap() {
            let sys = hrep_order_chain(&l);
            assert_eq!(enumerate_vertices(&sys).unwrap(), enumerate_vertices_exhaustive(&sys).unwrap());
        }
    }

    #[test]
    fn empty_and_unbounded() {
        let infeasible = HalfspaceSystem::new(
            1,
            vec![
                Halfspace::from_ints(&[1], -1, HalfspaceTag::Other),
                Halfspace::from_ints(&[-1], 0, HalfspaceTag::Other),
            ],
        )
        .unwrap();
        assert_eq!(enumerate_vertices(&infeasible), Err(Error::EmptyPolytope));
        let ray = HalfspaceSystem::new(1, vec![Halfspace::from_ints(&[-1], 0, HalfspaceTag::Other)]).unwrap();
        assert_eq!(enumerate_vertices(&ray), Err(Error::Unbounded));
        let big = hrep_order(&Poset::antichain(9).unwrap());
        assert!(matches!(enumerate_vertices(&big), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn dimensions() {
        let point = VertexSet::new(3, vec![vec![int(0); 3]]).unwrap();
        assert_eq!(polytope_dimension(&point), 0);
        let square = VertexSet::new(2, ints(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]])).unwrap();
        assert_eq!(polytope_dimension(&square), 2);
    }
}
