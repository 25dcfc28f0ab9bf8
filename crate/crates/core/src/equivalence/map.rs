use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::linalg::{determinant, inverse};
use crate::geometry::rational::{int, is_integer};
use crate::geometry::{Halfspace, HalfspaceSystem, Polytope, Rational, VertexSet};

/// `x ↦ U x + w` with integer `U`, `|det U| = 1` and integer `w`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineUnimodularMap {
    matrix: Vec<Vec<i64>>,
    shift: Vec<i64>,
}

impl fmt::Debug for AffineUnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter().map(|row| row.iter().map(|&v| int(v)).collect()).collect()
}

impl AffineUnimodularMap {
    pub fn new(matrix: Vec<Vec<i64>>, shift: Vec<i64>) -> Result<Self> {
        let d = matrix.len();
        if shift.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: shift.len() });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: row.len() });
        }
        let det = determinant(to_rational(&matrix));
        if det != int(1) && det != int(-1) {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(AffineUnimodularMap { matrix, shift })
    }

    pub fn identity(d: usize) -> Self {
        let matrix = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        AffineUnimodularMap { matrix, shift: vec![0; d] }
    }

    /// `x_i ↦ 1 − x_i` for every listed (1-based) coordinate.
    pub fn reflection(d: usize, coordinates: &[usize]) -> Result<Self> {
        let mut m = AffineUnimodularMap::identity(d);
        for &i in coordinates {
            if i == 0 || i > d {
                return Err(Error::IndexOutOfRange { element: i, d });
            }
            m.matrix[i - 1][i - 1] = -1;
            m.shift[i - 1] = 1;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn determinant(&self) -> i64 {
        determinant(to_rational(&self.matrix)).to_integer().to_i64().expect("unit determinant")
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        Ok(self
            .matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, &w)| {
                let mut y = int(w);
                for (&u, v) in row.iter().zip(x) {
                    if u != 0 {
                        y += int(u) * v;
                    }
                }
                y
            })
            .collect())
    }

    pub fn inverse(&self) -> AffineUnimodularMap {
        let inv = inverse(&to_rational(&self.matrix)).expect("unimodular matrix is invertible");
        let matrix: Vec<Vec<i64>> = inv
            .iter()
            .map(|row| row.iter().map(|v| v.to_integer().to_i64().expect("integral inverse")).collect())
            .collect();
        let mut shift = Vec::with_capacity(self.dim());
        for row in &matrix {
            shift.push(-row.iter().zip(&self.shift).map(|(a, b)| a * b).sum::<i64>());
        }
        AffineUnimodularMap { matrix, shift }
    }

    /// The image of `a · x ≤ b`: with `x = U⁻¹(y − w)` it reads
    /// `(a U⁻¹) y ≤ b + (a U⁻¹) w`.
    pub fn transform_halfspace(&self, h: &Halfspace) -> Result<Halfspace> {
        if h.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: h.dim() });
        }
        let inv = self.inverse();
        let d = self.dim();
        let coefficients: Vec<Rational> = (0..d)
            .map(|j| {
                let mut c = Rational::zero();
                for (i, a) in h.coefficients.iter().enumerate() {
                    if inv.matrix[i][j] != 0 {
                        c += a * int(inv.matrix[i][j]);
                    }
                }
                c
            })
            .collect();
        let mut bound = h.bound.clone();
        for (c, &w) in coefficients.iter().zip(&self.shift) {
            bound += c * int(w);
        }
        Ok(Halfspace::new(coefficients, bound, h.tag.clone()))
    }

    /// Rows as `x'_i = …` strings, e.g. `x'1 = x1 - x2`.
    pub fn describe(&self) -> String {
        let mut rows = Vec::with_capacity(self.dim());
        for (i, (row, &w)) in self.matrix.iter().zip(&self.shift).enumerate() {
            let mut rhs = String::new();
            if w != 0 {
                rhs.push_str(&w.to_string());
            }
            for (j, &u) in row.iter().enumerate() {
                if u == 0 {
                    continue;
                }
                let sign = if u < 0 { "-" } else { "+" };
                if rhs.is_empty() {
                    if u < 0 {
                        rhs.push('-');
                    }
                } else {
                    rhs.push_str(&format!(" {sign} "));
                }
                if u.abs() != 1 {
                    rhs.push_str(&format!("{}*", u.abs()));
                }
                rhs.push_str(&format!("x{}", j + 1));
            }
            if rhs.is_empty() {
                rhs.push('0');
            }
            rows.push(format!("x'{} = {}", i + 1, rhs));
        }
        rows.join(", ")
    }
}

/// Image of a vertex set, re-sorted canonically.
pub fn apply_map(m: &AffineUnimodularMap, v: &VertexSet) -> Result<VertexSet> {
    if v.dim != m.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: v.dim });
    }
    let image: Vec<Vec<Rational>> = v.iter().map(|x| m.apply(x)).collect::<Result<_>>()?;
    VertexSet::new(v.dim, image)
}

pub fn apply_map_system(m: &AffineUnimodularMap, sys: &HalfspaceSystem) -> Result<HalfspaceSystem> {
    let halfspaces = sys.halfspaces.iter().map(|h| m.transform_halfspace(h)).collect::<Result<_>>()?;
    HalfspaceSystem::new(sys.dim, halfspaces)
}

/// Image of a polytope with both representations carried along.
pub fn apply_map_polytope(m: &AffineUnimodularMap, p: &Polytope) -> Result<Polytope> {
    let system = apply_map_system(m, &p.system)?;
    let vertices = apply_map(m, &p.vertices)?;
    let facets = p.facets.iter().map(|h| m.transform_halfspace(h)).collect::<Result<_>>()?;
    Ok(Polytope::from_parts(system, vertices, facets))
}

/// Solves `U B = C` for `U` when `B` is invertible; `None` unless `U` is
/// integral and unimodular.
pub(crate) fn unimodular_solution(b: &[Vec<Rational>], c: &[Vec<Rational>]) -> Option<Vec<Vec<i64>>> {
    let b_inv = inverse(b)?;
    let d = b.len();
    let mut u = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut s = Rational::zero();
            for k in 0..d {
                if !c[i][k].is_zero() && !b_inv[k][j].is_zero() {
                    s += &c[i][k] * &b_inv[k][j];
                }
            }
            if !is_integer(&s) {
                return None;
            }
            u[i][j] = s.to_integer().to_i64()?;
        }
    }
    let det = determinant(to_rational(&u));
    (det == int(1) || det == int(-1)).then_some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::ratio;

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            AffineUnimodularMap::new(vec![vec![2, 0], vec![0, 1]], vec![0, 0]),
            Err(Error::NotUnimodular(_))
        ));
        assert!(AffineUnimodularMap::new(vec![vec![1, 1], vec![0, 1]], vec![3, -1]).is_ok());
    }

    #[test]
    fn reflection_and_inverse() {
        let m = AffineUnimodularMap::reflection(3, &[2]).unwrap();
        assert_eq!(m.determinant(), -1);
        let x = vec![ratio(1, 3), ratio(1, 4), int(0)];
        assert_eq!(m.apply(&x).unwrap(), vec![ratio(1, 3), ratio(3, 4), int(0)]);
        let shear = AffineUnimodularMap::new(vec![vec![1, -1, 0], vec![0, 1, 2], vec![0, 0, 1]], vec![1, 0, -2]).unwrap();
        let back = shear.inverse();
        assert_eq!(back.apply(&shear.apply(&x).unwrap()).unwrap(), x);
        assert_eq!(m.describe(), "x'1 = x1, x'2 = 1 - x2, x'3 = x3");
    }

    #[test]
    fn halfspace_transport() {
        let shear = AffineUnimodularMap::new(vec![vec![1, -1], vec![0, 1]], vec![1, 0]).unwrap();
        let h = Halfspace::new(vec![int(1), int(2)], int(3), crate::geometry::HalfspaceTag::Other);
        let g = shear.transform_halfspace(&h).unwrap();
        for x in [vec![int(0), int(0)], vec![ratio(1, 2), int(5)], vec![int(3), int(-1)]] {
            let y = shear.apply(&x).unwrap();
            assert_eq!(h.evaluate(&x).unwrap(), g.evaluate(&y).unwrap());
        }
    }
}
