use std::fmt;

use super::{bit, mask_elements, Poset};
use crate::error::{Error, Result};

/// A subset `S ⊆ [n − 1]`, used both as a permutation descent set and as the
/// label of a zigzag poset on `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: usize,
    mask: u64,
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DescentSet(n={}, {:?})", self.n, self.elements())
    }
}

impl DescentSet {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if n > 64 {
            return Err(Error::limit("descent set length", n, 64));
        }
        let mut mask = 0;
        for &j in elements {
            if j == 0 || j >= n {
                return Err(Error::IndexOutOfRange { element: j, d: n - 1 });
            }
            mask |= bit(j);
        }
        Ok(DescentSet { n, mask })
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n >= 1 && (n == 64 || mask >> (n - 1) == 0));
        DescentSet { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, j: usize) -> bool {
        j >= 1 && j < self.n && self.mask & bit(j) != 0
    }

    pub fn elements(&self) -> Vec<usize> {
        mask_elements(self.mask)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// `[n − 1] ∖ S`.
    pub fn complement(&self) -> DescentSet {
        let full = if self.n == 1 { 0 } else { (1u64 << (self.n - 1)) - 1 };
        DescentSet { n: self.n, mask: full & !self.mask }
    }

    /// Every subset of `[n − 1]`, ascending by mask.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        (0..1u64 << (n.max(1) - 1)).map(move |mask| DescentSet { n, mask })
    }
}

impl Poset {
    /// True when every cover joins `j` and `j + 1` for some `j` and each such
    /// pair is joined, i.e. the Hasse diagram is the path `1 - 2 - ⋯ - d`.
    pub fn is_zigzag(&self) -> bool {
        self.edge_count() == self.d() - 1
            && self.covers().iter().all(|&(i, j)| i.abs_diff(j) == 1)
    }
}

/// The zigzag poset on `[n]` with `j ≻ j + 1` exactly when `j ∈ S`.
pub fn zigzag_from_descent_set(s: &DescentSet) -> Poset {
    let covers: Vec<_> = (1..s.n())
        .map(|j| if s.contains(j) { (j + 1, j) } else { (j, j + 1) })
        .collect();
    Poset::new(s.n(), &covers).expect("zigzag covers form a path")
}

/// `S(P) = {j : j ≻ j + 1}`.
pub fn descent_set_of_zigzag(p: &Poset) -> Result<DescentSet> {
    if let Some(&(i, j)) = p.covers().iter().find(|&&(i, j)| i.abs_diff(j) != 1) {
        return Err(Error::NotZigzag(i, j));
    }
    if !p.is_zigzag() {
        let gap = (1..p.d()).find(|&j| !p.comparable(j, j + 1)).unwrap_or(1);
        return Err(Error::NotZigzag(gap, gap + 1));
    }
    let mask = p
        .covers()
        .iter()
        .filter(|&&(i, j)| i == j + 1)
        .fold(0, |m, &(_, j)| m | bit(j));
    Ok(DescentSet::from_mask(p.d(), mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_examples() {
        let chain = zigzag_from_descent_set(&DescentSet::new(3, &[]).unwrap());
        assert_eq!(chain, Poset::chain(3).unwrap());
        let down = zigzag_from_descent_set(&DescentSet::new(3, &[1, 2]).unwrap());
        assert_eq!(down.covers(), &[(2, 1), (3, 2)]);
        let z = zigzag_from_descent_set(&DescentSet::new(5, &[1, 4]).unwrap());
        // 1 ≻ 2 ≺ 3 ≺ 4 ≻ 5
        assert_eq!(z.covers(), &[(2, 1), (2, 3), (3, 4), (5, 4)]);
        assert_eq!(descent_set_of_zigzag(&z).unwrap().elements(), vec![1, 4]);
        assert!(descent_set_of_zigzag(&Poset::chain(4).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn not_zigzag() {
        let diamond = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(descent_set_of_zigzag(&diamond), Err(Error::NotZigzag(1, 3)));
        let split = Poset::new(3, &[(1, 2)]).unwrap();
        assert_eq!(descent_set_of_zigzag(&split), Err(Error::NotZigzag(2, 3)));
    }

    #[test]
    fn roundtrip_all_small() {
        for n in 1..=8 {
            for s in DescentSet::all(n) {
                let z = zigzag_from_descent_set(&s);
                assert_eq!(descent_set_of_zigzag(&z).unwrap(), s);
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert_eq!(
            DescentSet::new(3, &[3]),
            Err(Error::IndexOutOfRange { element: 3, d: 2 })
        );
    }
}
