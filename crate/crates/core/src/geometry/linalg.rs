//! Small dense exact linear algebra over [`Rational`].

use num_traits::{One, Zero};

use super::rational::Rational;

/// Row-reduces `rows` in place and returns the rank.
pub(crate) fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for k in r + 1..rows.len() {
            if rows[k][c].is_zero() {
                continue;
            }
            let f = &rows[k][c] / &pivot;
            for j in c..cols {
                let delta = &f * &rows[r][j];
                rows[k][j] -= delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Determinant of a square matrix.
pub(crate) fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&k| !m[k][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for k in c + 1..n {
            if m[k][c].is_zero() {
                continue;
            }
            let f = &m[k][c] / &pivot;
            for j in c..n {
                let delta = &f * &m[c][j];
                m[k][j] -= delta;
            }
        }
    }
    det
}

/// Solves `a x = b` for square `a`; `None` when singular.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&k| !m[k][c].is_zero())?;
        m.swap(p, c);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &pivot;
        }
        for k in 0..n {
            if k == c || m[k][c].is_zero() {
                continue;
            }
            let f = m[k][c].clone();
            for j in c..=n {
                let delta = &f * &m[c][j];
                m[k][j] -= delta;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

/// Inverse of a square matrix; `None` when singular.
pub(crate) fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|i| if i == k { Rational::one() } else { Rational::zero() })
            .collect();
        cols.push(solve(a, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Dimension of the affine hull of `points` (`None` for an empty set).
pub(crate) fn affine_dimension<'a>(points: impl IntoIterator<Item = &'a Vec<Rational>>) -> Option<usize> {
    let mut it = points.into_iter();
    let first = it.next()?;
    let diffs: Vec<Vec<Rational>> = it
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        return Some(0);
    }
    Some(rank(diffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])), 2);
        assert_eq!(determinant(m(&[&[2, 1], &[1, 1]])), int(1));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]])), int(0));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[1, 1, 0, 0], &[0, 1, -1, 0], &[1, 0, 0, -1], &[1, 0, 1, 0]]);
        // x1 + x2 = 1, x2 = x3, x1 = x4, x1 + x3 = 1
        let x = solve(&a, &[int(1), int(0), int(0), int(1)]);
        assert!(x.is_none());
        let a = m(&[&[1, -1, 0, 0], &[0, 1, 0, -1], &[0, 0, 1, -1], &[1, 0, 1, 0]]);
        let x = solve(&a, &[int(0), int(0), int(0), int(1)]).unwrap();
        assert_eq!(x, vec![ratio(1, 2); 4]);
        let inv = inverse(&m(&[&[1, -1], &[0, 1]])).unwrap();
        assert_eq!(inv, m(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn affine_dims() {
        let square = m(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(affine_dimension(&square), Some(2));
        assert_eq!(affine_dimension(&square[..1]), Some(0));
        assert_eq!(affine_dimension(&square[..2]), Some(1));
        assert_eq!(affine_dimension(&[] as &[Vec<Rational>]), None);
    }
}
