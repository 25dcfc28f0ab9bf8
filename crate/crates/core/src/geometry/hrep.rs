//! Inequality descriptions of order, chain and order-chain polytopes.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};
use crate::partition::EdgePartition;
use crate::poset::Poset;

/// Which defining inequality produced a halfspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfspaceTag {
    /// `−x_i ≤ 0`
    BoxLower(usize),
    /// `x_i ≤ 1`
    BoxUpper(usize),
    /// `x_j − x_i ≤ 0` for the cover `i ≺ j`
    OrderEdge(usize, usize),
    /// `Σ_{i ∈ C} x_i ≤ 1` for a maximal chain `C`
    Chain(Vec<usize>),
    /// Anything not built from a poset.
    Other,
}

impl fmt::Display for HalfspaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HalfspaceTag::BoxLower(i) => write!(f, "box-lower {i}"),
            HalfspaceTag::BoxUpper(i) => write!(f, "box-upper {i}"),
            HalfspaceTag::OrderEdge(i, j) => write!(f, "order-edge {i} {j}"),
            HalfspaceTag::Chain(c) => {
                let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "chain {}", parts.join(" "))
            }
            HalfspaceTag::Other => write!(f, "other"),
        }
    }
}

/// `a · x ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub coefficients: Vec<Rational>,
    pub bound: Rational,
    pub tag: HalfspaceTag,
}

impl Halfspace {
    pub fn new(coefficients: Vec<Rational>, bound: Rational, tag: HalfspaceTag) -> Self {
        debug_assert!(coefficients.iter().any(|c| !c.is_zero()), "zero normal");
        Halfspace { coefficients, bound, tag }
    }

    pub(crate) fn from_ints(coefficients: &[i64], bound: i64, tag: HalfspaceTag) -> Self {
        Halfspace::new(coefficients.iter().map(|&c| int(c)).collect(), int(bound), tag)
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    /// `H(v) = a · v − b`: zero on the hyperplane, negative strictly inside.
    pub fn evaluate(&self, v: &[Rational]) -> Result<Rational> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(self.evaluate_unchecked(v))
    }

    pub(crate) fn evaluate_unchecked(&self, v: &[Rational]) -> Rational {
        let mut s = -self.bound.clone();
        for (a, x) in self.coefficients.iter().zip(v) {
            if !a.is_zero() {
                s += a * x;
            }
        }
        s
    }

    fn same_inequality(&self, other: &Halfspace) -> bool {
        self.coefficients == other.coefficients && self.bound == other.bound
    }

    /// Renders `a · x ≤ b` as e.g. `x2 + x3 + x4 <= 1`.
    pub fn inequality_string(&self) -> String {
        let mut lhs = String::new();
        for (k, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let sign = if a.is_negative() { "-" } else { "+" };
            if lhs.is_empty() {
                if a.is_negative() {
                    lhs.push('-');
                }
            } else {
                lhs.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    lhs.push_str(&format!("{}*", mag.numer()));
                } else {
                    lhs.push_str(&format!("{}*", format_rational(&mag)));
                }
            }
            lhs.push_str(&format!("x{}", k + 1));
        }
        let rhs = if self.bound.is_integer() {
            self.bound.numer().to_string()
        } else {
            format_rational(&self.bound)
        };
        format!("{lhs} <= {rhs}")
    }
}

/// Evaluates `h` at `v`.
pub fn evaluate(h: &Halfspace, v: &[Rational]) -> Result<Rational> {
    h.evaluate(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfspaceSystem {
    pub dim: usize,
    pub halfspaces: Vec<Halfspace>,
}

impl HalfspaceSystem {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        for h in &halfspaces {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
        }
        Ok(HalfspaceSystem { dim, halfspaces })
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    /// True when `v` satisfies every inequality.
    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.dim && self.halfspaces.iter().all(|h| !h.evaluate_unchecked(v).is_positive())
    }

    /// Appends `h` unless an identical inequality is already present.
    fn push_unique(&mut self, h: Halfspace) {
        if !self.halfspaces.iter().any(|g| g.same_inequality(&h)) {
            self.halfspaces.push(h);
        }
    }
}

fn unit(d: usize, i: usize, value: i64) -> Vec<i64> {
    let mut a = vec![0; d];
    a[i - 1] = value;
    a
}

fn box_system(d: usize) -> HalfspaceSystem {
    let mut hs = Vec::with_capacity(2 * d);
    for i in 1..=d {
        hs.push(Halfspace::from_ints(&unit(d, i, 1), 1, HalfspaceTag::BoxUpper(i)));
        hs.push(Halfspace::from_ints(&unit(d, i, -1), 0, HalfspaceTag::BoxLower(i)));
    }
    HalfspaceSystem { dim: d, halfspaces: hs }
}

fn order_edge(d: usize, i: usize, j: usize) -> Halfspace {
    let mut a = vec![0; d];
    a[j - 1] = 1;
    a[i - 1] = -1;
    Halfspace::from_ints(&a, 0, HalfspaceTag::OrderEdge(i, j))
}

fn chain_sum(d: usize, chain: &[usize]) -> Halfspace {
    let mut a = vec![0; d];
    for &i in chain {
        a[i - 1] = 1;
    }
    Halfspace::from_ints(&a, 1, HalfspaceTag::Chain(chain.to_vec()))
}

/// O(P): the unit cube plus `x_j ≤ x_i` for every cover `i ≺ j`.
pub fn hrep_order(p: &Poset) -> HalfspaceSystem {
    let mut sys = box_system(p.d());
    for &(i, j) in p.covers() {
        sys.push_unique(order_edge(p.d(), i, j));
    }
    sys
}

/// C(P): the unit cube plus one sum inequality per maximal chain. Singleton
/// chains coincide with box inequalities and are not repeated.
pub fn hrep_chain(p: &Poset) -> HalfspaceSystem {
    let mut sys = box_system(p.d());
    for c in p.maximal_chains() {
        sys.push_unique(chain_sum(p.d(), &c.elements));
    }
    sys
}

/// OC_ℓ(P) = O(P′_ℓ) ∩ C(P″_ℓ).
pub fn hrep_order_chain(l: &EdgePartition) -> HalfspaceSystem {
    let d = l.base().d();
    let mut sys = box_system(d);
    for (i, j) in l.order_edges() {
        sys.push_unique(order_edge(d, i, j));
    }
    for c in l.chain_part().maximal_chains() {
        sys.push_unique(chain_sum(d, &c.elements));
    }
    sys
}

/// ρ(S) = Σ_{i ∈ S} e_i.
pub fn indicator_vector(subset: &[usize], d: usize) -> Result<Vec<Rational>> {
    let mut v = vec![Rational::zero(); d];
    for &i in subset {
        if i == 0 || i > d {
            return Err(Error::IndexOutOfRange { element: i, d });
        }
        v[i - 1] = Rational::one();
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::ratio;

    fn strings(sys: &HalfspaceSystem) -> Vec<String> {
        sys.halfspaces.iter().map(Halfspace::inequality_string).collect()
    }

    #[test]
    fn evaluate_examples() {
        let h = Halfspace::from_ints(&[1, 0, 1, 0], 1, HalfspaceTag::Other);
        assert_eq!(h.evaluate(&vec![ratio(1, 2); 4]).unwrap(), int(0));
        let h = Halfspace::from_ints(&[1], 1, HalfspaceTag::BoxUpper(1));
        assert_eq!(h.evaluate(&[int(0)]).unwrap(), int(-1));
        let h = Halfspace::from_ints(&[0, -1, 0], 0, HalfspaceTag::BoxLower(2));
        assert_eq!(h.evaluate(&[int(0), int(1), int(0)]).unwrap(), int(-1));
        assert!(matches!(h.evaluate(&[int(0)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn order_of_small_chain() {
        let sys = hrep_order(&Poset::chain(2).unwrap());
        assert_eq!(
            strings(&sys),
            vec!["x1 <= 1", "-x1 <= 0", "x2 <= 1", "-x2 <= 0", "-x1 + x2 <= 0"]
        );
    }

    #[test]
    fn antichain_gives_cube() {
        let p = Poset::antichain(3).unwrap();
        assert_eq!(hrep_order(&p), box_system(3));
        assert_eq!(hrep_chain(&p), box_system(3));
    }

    #[test]
    fn forked_chain_systems() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).unwrap();
        let extra: Vec<String> = strings(&hrep_order(&p))[8..].to_vec();
        assert_eq!(extra, vec!["-x1 + x2 <= 0", "-x1 + x3 <= 0", "-x3 + x4 <= 0"]);
        let extra: Vec<String> = strings(&hrep_chain(&p))[8..].to_vec();
        assert_eq!(extra, vec!["x1 + x2 <= 1", "x1 + x3 + x4 <= 1"]);
    }

    #[test]
    fn intro_order_chain_system() {
        let p = Poset::chain(7).unwrap();
        let l = EdgePartition::new(&p, &[(1, 2), (4, 5), (5, 6)]).unwrap();
        let sys = hrep_order_chain(&l);
        assert_eq!(sys.len(), 14 + 5);
        let extra: Vec<String> = strings(&sys)[14..].to_vec();
        assert_eq!(
            extra,
            vec!["-x1 + x2 <= 0", "-x4 + x5 <= 0", "-x5 + x6 <= 0", "x2 + x3 + x4 <= 1", "x6 + x7 <= 1"]
        );
    }

    #[test]
    fn trivial_partitions_reduce() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(hrep_order_chain(&EdgePartition::all_order(&p)), hrep_order(&p));
        assert_eq!(hrep_order_chain(&EdgePartition::all_chain(&p)), hrep_chain(&p));
    }

    #[test]
    fn indicators() {
        assert_eq!(indicator_vector(&[], 3).unwrap(), vec![int(0); 3]);
        assert_eq!(indicator_vector(&[1, 3], 4).unwrap(), vec![int(1), int(0), int(1), int(0)]);
        assert_eq!(indicator_vector(&[1, 2], 2).unwrap(), vec![int(1); 2]);
        assert!(indicator_vector(&[5], 4).is_err());
    }
}
