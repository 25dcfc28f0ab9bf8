//! Upper bounds on facet counts of order and chain polytopes, checked over
//! every poset on `[d]`.

use serde::Serialize;

use crate::descent::max_product_composition;
use crate::error::Result;
use crate::geometry::{hrep_chain, hrep_order, Polytope};
use crate::limits::Limits;
use crate::poset::{enumerate_posets_up_to_iso_with, Poset};

/// `⌊(d+1)/2⌋ (d − ⌊(d+1)/2⌋) + d` for `d ≥ 5`, else `2d`.
pub fn order_facet_bound(d: usize) -> usize {
    if d <= 4 {
        return 2 * d;
    }
    let h = d.div_ceil(2);
    h * (d - h) + d
}

/// `M(d) + d` for `d ≥ 5`, else `2d`.
pub fn chain_facet_bound(d: usize) -> u128 {
    if d <= 4 {
        return 2 * d as u128;
    }
    max_product_composition(d).1 + d as u128
}

/// Complete bipartite poset with lower block `[⌊(d+1)/2⌋]`; the antichain
/// for `d ≤ 4`.
pub fn order_extremal_poset(d: usize) -> Result<Poset> {
    if d <= 4 {
        return Poset::antichain(d);
    }
    let h = d.div_ceil(2);
    Poset::leveled(&[h, d - h])
}

/// Levels sized by a maximizing composition of `d`, each level covering the
/// whole previous one; the antichain for `d ≤ 4`.
pub fn chain_extremal_poset(d: usize) -> Result<Poset> {
    if d <= 4 {
        return Poset::antichain(d);
    }
    Poset::leveled(&max_product_composition(d).0)
}

#[derive(Clone, Debug, Serialize)]
pub struct FacetBoundReport {
    pub d: usize,
    pub posets_checked: usize,
    pub order_bound: usize,
    pub chain_bound: u128,
    pub max_order_facets: usize,
    pub max_chain_facets: usize,
    /// Cover lists of the classes attaining the order bound.
    pub order_extremal: Vec<Vec<(usize, usize)>>,
    pub chain_extremal: Vec<Vec<(usize, usize)>>,
    pub documented_order_facets: usize,
    pub documented_chain_facets: usize,
    pub holds: bool,
    pub tight: bool,
}

pub fn verify_facet_bounds(d: usize) -> Result<FacetBoundReport> {
    verify_facet_bounds_with(d, &Limits::default())
}

pub fn verify_facet_bounds_with(d: usize, limits: &Limits) -> Result<FacetBoundReport> {
    let order_bound = order_facet_bound(d);
    let chain_bound = chain_facet_bound(d);
    let classes = enumerate_posets_up_to_iso_with(d, limits)?;
    let mut report = FacetBoundReport {
        d,
        posets_checked: classes.len(),
        order_bound,
        chain_bound,
        max_order_facets: 0,
        max_chain_facets: 0,
        order_extremal: Vec::new(),
        chain_extremal: Vec::new(),
        documented_order_facets: 0,
        documented_chain_facets: 0,
        holds: true,
        tight: false,
    };
    for p in &classes {
        let fo = Polytope::with_limits(hrep_order(p), limits)?.facet_count();
        let fc = Polytope::with_limits(hrep_chain(p), limits)?.facet_count();
        report.max_order_facets = report.max_order_facets.max(fo);
        report.max_chain_facets = report.max_chain_facets.max(fc);
        report.holds &= fo <= order_bound && fc as u128 <= chain_bound;
        if fo == order_bound {
            report.order_extremal.push(p.covers().to_vec());
        }
        if fc as u128 == chain_bound {
            report.chain_extremal.push(p.covers().to_vec());
        }
    }
    report.documented_order_facets = Polytope::with_limits(hrep_order(&order_extremal_poset(d)?), limits)?.facet_count();
    report.documented_chain_facets = Polytope::with_limits(hrep_chain(&chain_extremal_poset(d)?), limits)?.facet_count();
    report.tight = report.documented_order_facets == order_bound && report.documented_chain_facets as u128 == chain_bound;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(order_facet_bound(5), 11);
        assert_eq!(chain_facet_bound(5), 11);
        assert_eq!(chain_facet_bound(6), 15);
        assert_eq!(order_facet_bound(8), 24);
        assert_eq!(chain_facet_bound(8), 26);
        assert!(order_facet_bound(9) < chain_facet_bound(9) as usize);
    }

    #[test]
    fn d5_report() {
        let r = verify_facet_bounds(5).unwrap();
        assert!(r.holds && r.tight);
        assert_eq!(r.posets_checked, 63);
        assert_eq!(r.max_order_facets, 11);
        assert_eq!(r.documented_order_facets, 11);
        assert_eq!(r.documented_chain_facets, 11);
    }
}
