//! The explicit maps carrying order-chain polytopes of chains and zigzags
//! onto chain polytopes of zigzags.

use num_traits::{One, Zero};

use super::map::{apply_map_polytope, AffineUnimodularMap};
use crate::error::{Error, Result};
use crate::geometry::{hrep_order_chain, Polytope, Rational};
use crate::partition::EdgePartition;
use crate::poset::{descent_set_of_zigzag, Poset};

/// Every cover joins `i` to `i + 1`, ascending.
fn is_consecutive_chain_union(p: &Poset) -> bool {
    p.covers().iter().all(|&(i, j)| j == i + 1)
}

/// `x'_i = x_i` when `i` is maximal in the order part, else
/// `x'_i = x_i − x_{i+1}`.
pub fn phi_chain(l: &EdgePartition) -> Result<AffineUnimodularMap> {
    if !is_consecutive_chain_union(l.base()) {
        return Err(Error::NotChainUnion);
    }
    phi_rows(l)
}

/// `x'_i = x_i` when `i` is maximal in the order part, `x'_i = x_i − x_j`
/// when `j` is its only upper cover there, `x'_i = 1 − x_i` when both
/// neighbours cover it.
pub fn phi_zigzag(l: &EdgePartition) -> Result<AffineUnimodularMap> {
    descent_set_of_zigzag(l.base())?;
    phi_rows(l)
}

fn phi_rows(l: &EdgePartition) -> Result<AffineUnimodularMap> {
    let order = l.order_part();
    let d = order.d();
    let mut matrix = vec![vec![0i64; d]; d];
    let mut shift = vec![0i64; d];
    for i in 1..=d {
        let row = &mut matrix[i - 1];
        match order.upper_covers(i).as_slice() {
            [] => row[i - 1] = 1,
            [j] => {
                row[i - 1] = 1;
                row[j - 1] = -1;
            }
            _ => {
                row[i - 1] = -1;
                shift[i - 1] = 1;
            }
        }
    }
    AffineUnimodularMap::new(matrix, shift)
}

/// Reads the poset `Q` with `C(Q) = φ(P)` off the facets of the image: each
/// must be `−x_i ≤ 0` or `Σ_{i ∈ I} x_i ≤ 1` with `I` an interval, and the
/// intervals must tile `[d]` with consecutive ones sharing at most an
/// endpoint. Intervals sharing an endpoint alternate direction, starting
/// ascending in each component.
pub fn chain_polytope_target(source: &Polytope, m: &AffineUnimodularMap) -> Result<Poset> {
    let image = apply_map_polytope(m, source)?;
    let d = image.dim();
    let mut intervals: Vec<(usize, usize)> = Vec::new();
    for h in &image.facets {
        let support: Vec<usize> = (1..=d).filter(|&i| !h.coefficients[i - 1].is_zero()).collect();
        let unit_sum = h.bound.is_one() && support.iter().all(|&i| h.coefficients[i - 1].is_one());
        let nonnegativity = h.bound.is_zero() && support.len() == 1 && h.coefficients[support[0] - 1] == -Rational::one();
        if nonnegativity {
            continue;
        }
        let (first, last) = (support[0], support[support.len() - 1]);
        if !unit_sum || last - first + 1 != support.len() {
            return Err(Error::NotZigzagImage(format!("facet {}", h.inequality_string())));
        }
        intervals.push((first, last));
    }
    intervals.sort_unstable();
    let mut covers = Vec::new();
    let mut expected_start = 1;
    let mut ascending = true;
    let mut previous: Option<(usize, usize)> = None;
    for &(s, e) in &intervals {
        match previous {
            Some((ps, pe)) if s == pe && ps < pe && s < e => ascending = !ascending,
            _ if s == expected_start => ascending = true,
            _ => return Err(Error::NotZigzagImage(format!("chain facets do not tile [1, {d}] at {s}"))),
        }
        for k in s..e {
            covers.push(if ascending { (k, k + 1) } else { (k + 1, k) });
        }
        expected_start = e + 1;
        previous = Some((s, e));
    }
    if expected_start != d + 1 {
        return Err(Error::NotZigzagImage(format!("chain facets do not cover {expected_start}")));
    }
    Poset::new(d, &covers)
}

/// The map for `ℓ` together with the zigzag union `Q` it targets.
#[derive(Clone, Debug)]
pub struct ZigzagEquivalence {
    pub map: AffineUnimodularMap,
    pub target: Poset,
}

/// Applies [`phi_chain`] or [`phi_zigzag`] as the base poset allows and
/// derives the target.
pub fn zigzag_equivalence(l: &EdgePartition) -> Result<ZigzagEquivalence> {
    let map = if is_consecutive_chain_union(l.base()) { phi_chain(l)? } else { phi_zigzag(l)? };
    let source = Polytope::new(hrep_order_chain(l))?;
    let target = chain_polytope_target(&source, &map)?;
    Ok(ZigzagEquivalence { map, target })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::map::apply_map;
    use crate::geometry::{enumerate_vertices, hrep_chain};
    use crate::poset::{zigzag_from_descent_set, DescentSet};

    #[test]
    fn identity_on_pure_chain_part() {
        let p = Poset::chain(4).unwrap();
        let l = EdgePartition::all_chain(&p);
        assert_eq!(phi_chain(&l).unwrap(), AffineUnimodularMap::identity(4));
    }

    #[test]
    fn full_order_part_on_chain() {
        let p = Poset::chain(3).unwrap();
        let l = EdgePartition::all_order(&p);
        let m = phi_chain(&l).unwrap();
        assert_eq!(m.describe(), "x'1 = x1 - x2, x'2 = x2 - x3, x'3 = x3");
        let z = zigzag_equivalence(&l).unwrap();
        let image = apply_map(&m, &enumerate_vertices(&hrep_order_chain(&l)).unwrap()).unwrap();
        assert_eq!(image, enumerate_vertices(&hrep_chain(&Poset::chain(3).unwrap())).unwrap());
        assert_eq!(z.target, Poset::chain(3).unwrap());
    }

    #[test]
    fn doubly_covered_element_is_reflected() {
        // 2 is covered by both 1 and 3
        let p = zigzag_from_descent_set(&DescentSet::new(3, &[1]).unwrap());
        let l = EdgePartition::all_order(&p);
        assert_eq!(phi_zigzag(&l).unwrap().describe(), "x'1 = x1, x'2 = 1 - x2, x'3 = x3");
        // 2 covers both neighbours and stays put
        let p = zigzag_from_descent_set(&DescentSet::new(3, &[2]).unwrap());
        let l = EdgePartition::all_order(&p);
        assert_eq!(phi_zigzag(&l).unwrap().describe(), "x'1 = x1 - x2, x'2 = x2, x'3 = -x2 + x3");
    }

    #[test]
    fn wrong_bases_rejected() {
        let diamond = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let l = EdgePartition::all_order(&diamond);
        assert_eq!(phi_chain(&l), Err(Error::NotChainUnion));
        assert!(matches!(phi_zigzag(&l), Err(Error::NotZigzag(..))));
    }

    #[test]
    fn intro_chain_partition() {
        let p = Poset::chain(7).unwrap();
        let l = EdgePartition::new(&p, &[(1, 2), (4, 5), (5, 6)]).unwrap();
        let z = zigzag_equivalence(&l).unwrap();
        assert!(z.target.is_zigzag());
        let image = apply_map(&z.map, &enumerate_vertices(&hrep_order_chain(&l)).unwrap()).unwrap();
        assert_eq!(image, enumerate_vertices(&hrep_chain(&z.target)).unwrap());
    }

    #[test]
    fn chain_unions() {
        let p = Poset::chain(3).unwrap().disjoint_union(&Poset::chain(2).unwrap()).unwrap();
        for l in crate::partition::enumerate_partitions(&p).unwrap() {
            let z = zigzag_equivalence(&l).unwrap();
            let image = apply_map(&z.map, &enumerate_vertices(&hrep_order_chain(&l)).unwrap()).unwrap();
            assert_eq!(image, enumerate_vertices(&hrep_chain(&z.target)).unwrap());
            assert_eq!(z.target.components().len(), 2);
        }
    }
}
