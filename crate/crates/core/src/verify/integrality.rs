use num_traits::{One, Zero};

use super::{check, Assertion};
use crate::fixtures::{diamond, diamond_half_integral, diamond_integral};
use crate::geometry::rational::ratio;
use crate::geometry::{enumerate_vertices, hrep_order_chain, is_integral, polytope_dimension, Rational};
use crate::partition::{enumerate_partitions, is_hasse_forest, minimal_incident_partition};
use crate::poset::{enumerate_posets_up_to_iso, Poset};

fn all_posets_up_to(n: usize) -> crate::Result<Vec<Poset>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_posets_up_to_iso(k)?);
    }
    Ok(out)
}

pub fn integrality_acyclic() -> Vec<Assertion> {
    let half = vec![ratio(1, 2); 4];
    vec![
        check(
            "diamond, chain part {13}: half-integral vertex",
            "(1/2, 1/2, 1/2, 1/2) is a vertex, so the polytope is not integral",
            || {
                let v = enumerate_vertices(&hrep_order_chain(&diamond_half_integral()))?;
                Ok((v.contains(&half) && !is_integral(&v), format!("{} vertices", v.len())))
            },
        ),
        check("diamond, order part {13}: integral", "the partition is integral", || {
            let v = enumerate_vertices(&hrep_order_chain(&diamond_integral()))?;
            Ok((is_integral(&v), format!("{} vertices", v.len())))
        }),
        check(
            "diamond, all 16 partitions",
            "every vertex coordinate is 0, 1 or 1/2",
            || {
                let allowed = [Rational::zero(), Rational::one(), ratio(1, 2)];
                let mut count = 0;
                for l in enumerate_partitions(&diamond())? {
                    let v = enumerate_vertices(&hrep_order_chain(&l))?;
                    if !v.iter().flatten().all(|x| allowed.contains(x)) {
                        return Ok((false, format!("partition {:?}", l.order_edges())));
                    }
                    count += 1;
                }
                Ok((count == 16, format!("{count} partitions")))
            },
        ),
        check(
            "all posets with d <= 5, all partitions",
            "every partition is integral if and only if the Hasse diagram is a forest",
            || {
                let posets = all_posets_up_to(5)?;
                let (mut partitions, mut exceptions, mut full_dim) = (0, Vec::new(), true);
                for p in &posets {
                    let mut all_integral = true;
                    for l in enumerate_partitions(p)? {
                        let v = enumerate_vertices(&hrep_order_chain(&l))?;
                        full_dim &= polytope_dimension(&v) == p.d();
                        all_integral &= is_integral(&v);
                        partitions += 1;
                    }
                    if all_integral != is_hasse_forest(p) {
                        exceptions.push(format!("{p:?}"));
                    }
                }
                let ok = posets.len() == 87 && exceptions.is_empty() && full_dim;
                Ok((
                    ok,
                    format!(
                        "{} posets, {partitions} partitions, {} exceptions, all full-dimensional: {full_dim}",
                        posets.len(),
                        exceptions.len()
                    ),
                ))
            },
        ),
    ]
}

pub fn minimal_partition() -> Vec<Assertion> {
    vec![
        check("diamond, S = {1}", "chain part {12, 13}, order part {24, 34}", || {
            let l = minimal_incident_partition(&diamond(), &[1])?;
            let integral = is_integral(&enumerate_vertices(&hrep_order_chain(&l))?);
            let ok = l.chain_edges() == vec![(1, 2), (1, 3)] && l.order_edges() == vec![(2, 4), (3, 4)] && integral;
            Ok((ok, format!("order part {:?}, integral {integral}", l.order_edges())))
        }),
        check(
            "all posets with d <= 5, all sets S of minimal elements",
            "moving every edge at S into the chain part gives an integral polytope",
            || {
                let mut checked = 0;
                for p in all_posets_up_to(5)? {
                    let minimal = p.minimal_elements();
                    for mask in 0u32..1 << minimal.len() {
                        let s: Vec<usize> =
                            minimal.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &m)| m).collect();
                        let l = minimal_incident_partition(&p, &s)?;
                        if !is_integral(&enumerate_vertices(&hrep_order_chain(&l))?) {
                            return Ok((false, format!("{p:?} with S = {s:?}")));
                        }
                        checked += 1;
                    }
                }
                Ok((true, format!("{checked} partitions, all integral")))
            },
        ),
    ]
}
