use num_traits::ToPrimitive;

use super::hrep::HalfspaceSystem;
use super::rational::{clear_denominators, Rational};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub fn lattice_points(sys: &HalfspaceSystem, t: u32) -> Result<u64> {
    lattice_points_with(sys, t, &Limits::default())
}

/// Integer points of the dilation `t · P`, by scanning the box `[0, t]^d`.
/// Systems built from posets lie in the unit cube, so the scan is complete.
pub fn lattice_points_with(sys: &HalfspaceSystem, t: u32, limits: &Limits) -> Result<u64> {
    let d = sys.dim;
    count_in_box(sys, t, &vec![0; d], &vec![i64::from(t); d], limits)
}

/// Integer points of `t · P` inside the box `lo ≤ x ≤ hi`.
pub(crate) fn count_in_box(sys: &HalfspaceSystem, t: u32, lo: &[i64], hi: &[i64], limits: &Limits) -> Result<u64> {
    let d = sys.dim;
    let mut work: u64 = 1;
    for (a, b) in lo.iter().zip(hi) {
        if b < a {
            return Ok(0);
        }
        work = work.saturating_mul((b - a + 1) as u64);
    }
    if work > limits.lattice_work {
        return Err(Error::limit("lattice scan size", work, limits.lattice_work));
    }
    let rows: Vec<(Vec<i64>, i64)> = sys
        .halfspaces
        .iter()
        .map(|h| {
            let mut values: Vec<Rational> = h.coefficients.clone();
            values.push(h.bound.clone());
            let (ints, _) = clear_denominators(&values);
            let ints: Option<Vec<i64>> = ints.iter().map(ToPrimitive::to_i64).collect();
            let mut ints = ints.ok_or(Error::limit("coefficient magnitude", u64::MAX, i64::MAX as u64))?;
            let b = ints.pop().expect("bound") * i64::from(t);
            Ok((ints, b))
        })
        .collect::<Result<_>>()?;

    let mut x = lo.to_vec();
    let mut count = 0;
    loop {
        if rows
            .iter()
            .all(|(a, b)| a.iter().zip(&x).map(|(c, v)| c * v).sum::<i64>() <= *b)
        {
            count += 1;
        }
        // odometer over the box
        let mut k = 0;
        while k < d {
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
        if k == d {
            break;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hrep::hrep_order;
    use crate::poset::Poset;

    #[test]
    fn small_counts() {
        let square = hrep_order(&Poset::antichain(2).unwrap());
        assert_eq!(lattice_points(&square, 1).unwrap(), 4);
        assert_eq!(lattice_points(&square, 3).unwrap(), 16);
        let triangle = hrep_order(&Poset::chain(2).unwrap());
        assert_eq!(lattice_points(&triangle, 1).unwrap(), 3);
        assert_eq!(lattice_points(&triangle, 2).unwrap(), 6);
    }

    #[test]
    fn forked_chain_second_dilation() {
        // independent oracle: x2, x3 <= x1 and x4 <= x3 on {0,1,2}^4
        let mut expected = 0;
        for x1 in 0..=2 {
            for x2 in 0..=2 {
                for x3 in 0..=2 {
                    for x4 in 0..=2 {
                        if x2 <= x1 && x3 <= x1 && x4 <= x3 {
                            expected += 1;
                        }
                    }
                }
            }
        }
        let p = Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(lattice_points(&hrep_order(&p), 2).unwrap(), expected);
        assert_eq!(expected, 25);
    }

    #[test]
    fn cap() {
        let cube = hrep_order(&Poset::antichain(8).unwrap());
        let limits = Limits { lattice_work: 100, ..Limits::default() };
        assert!(lattice_points_with(&cube, 1, &limits).is_err());
    }
}
