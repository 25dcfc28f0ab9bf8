use super::{check, Assertion};
use crate::descent::{max_product_closed_form, max_product_composition};
use crate::equivalence::{
    apply_map, contains_forbidden_x, equivalent_exhaustive, order_facet_bound, chain_facet_bound, phi_zigzag,
    verify_facet_bounds, zigzag_equivalence, AffineUnimodularMap, DistinctReason, Verdict,
};
use crate::error::Result;
use crate::fixtures::{bowtie_tower, bowtie_tower_partition, seven_chain_partition, x_partition, x_poset};
use crate::geometry::{enumerate_vertices, hrep_chain, hrep_order, hrep_order_chain, Polytope};
use crate::limits::Limits;
use crate::partition::{enumerate_partitions, EdgePartition};
use crate::poset::{enumerate_posets_pruned, enumerate_posets_up_to_iso, zigzag_from_descent_set, DescentSet, Poset};

/// Checks that the map for `ℓ` is unimodular and carries the vertex set onto
/// that of the chain polytope of its target.
fn map_is_exact(l: &EdgePartition) -> Result<bool> {
    let z = zigzag_equivalence(l)?;
    let image = apply_map(&z.map, &enumerate_vertices(&hrep_order_chain(l))?)?;
    let target = enumerate_vertices(&hrep_chain(&z.target))?;
    let unions_of_zigzags = z.target.components().iter().all(|c| c.windows(2).all(|w| w[1] == w[0] + 1));
    Ok(z.map.determinant().abs() == 1 && image == target && unions_of_zigzags)
}

fn sweep(posets: impl IntoIterator<Item = Poset>) -> Result<(bool, String)> {
    let (mut count, mut failures) = (0, Vec::new());
    for p in posets {
        for l in enumerate_partitions(&p)? {
            if !map_is_exact(&l)? {
                failures.push(format!("{:?} order part {:?}", p, l.order_edges()));
            }
            count += 1;
        }
    }
    Ok((failures.is_empty(), format!("{count} partitions, {} failures {:?}", failures.len(), failures.first())))
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn chain_equiv() -> Vec<Assertion> {
    vec![
        check(
            "seven-element chain, order part {12, 45, 56}",
            "the order-chain polytope is unimodularly equivalent to the chain polytope of a zigzag",
            || {
                let l = seven_chain_partition();
                let z = zigzag_equivalence(&l)?;
                Ok((map_is_exact(&l)? && z.target.is_zigzag(), format!("{}; target covers {:?}", z.map.describe(), z.target.covers())))
            },
        ),
        check(
            "chains with n <= 7, all partitions",
            "the map has determinant ±1 and carries the vertices onto those of a zigzag chain polytope",
            || sweep((1..=7).map(|n| Poset::chain(n).expect("nonempty"))),
        ),
        check(
            "disjoint unions of chains on 5 elements, all partitions",
            "the image is the chain polytope of a disjoint union of zigzags",
            || {
                let unions = compositions(5).into_iter().map(|parts| {
                    let mut p = Poset::chain(parts[0]).expect("nonempty");
                    for &k in &parts[1..] {
                        p = p.disjoint_union(&Poset::chain(k).expect("nonempty")).expect("small");
                    }
                    p
                });
                sweep(unions)
            },
        ),
    ]
}

pub fn zigzag_equiv() -> Vec<Assertion> {
    vec![
        check(
            "zigzags with n <= 7, all partitions",
            "the map has determinant ±1 and carries the vertices onto those of a zigzag chain polytope",
            || sweep((1..=7).flat_map(|n| DescentSet::all(n).map(|s| zigzag_from_descent_set(&s)).collect::<Vec<_>>())),
        ),
        check(
            "zigzag 1 > 2 < 3, order part = all covers",
            "an element covered by both neighbours is reflected: x'2 = 1 - x2",
            || {
                let p = zigzag_from_descent_set(&DescentSet::new(3, &[1])?);
                let m = phi_zigzag(&EdgePartition::all_order(&p))?;
                Ok((m.describe() == "x'1 = x1, x'2 = 1 - x2, x'3 = x3", m.describe()))
            },
        ),
        check(
            "X poset, order part {13, 34, 35}",
            "reflecting x2 maps the order-chain polytope onto the order polytope",
            || {
                let m = AffineUnimodularMap::reflection(5, &[2])?;
                let image = apply_map(&m, &enumerate_vertices(&hrep_order_chain(&x_partition()))?)?;
                let target = enumerate_vertices(&hrep_order(&x_poset()))?;
                Ok((image == target, format!("{} vertices", image.len())))
            },
        ),
    ]
}

fn all_posets_up_to(n: usize) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_posets_up_to_iso(k)?);
    }
    Ok(out)
}

pub fn forbidden_x() -> Vec<Assertion> {
    vec![
        check("X poset and stacked bowties", "both contain X as an induced subposet", || {
            Ok((contains_forbidden_x(&x_poset()) && contains_forbidden_x(&bowtie_tower(6)?), String::new()))
        }),
        check("zigzags with n <= 7", "no zigzag contains X", || {
            let any = (1..=7).any(|n| DescentSet::all(n).any(|s| contains_forbidden_x(&zigzag_from_descent_set(&s))));
            Ok((!any, String::new()))
        }),
        check(
            "all posets with d <= 5",
            "O(P) and C(P) are unimodularly equivalent if and only if P does not contain X",
            || {
                let (mut equivalent, mut distinct, mut mismatches, mut unknown) = (0, 0, Vec::new(), 0);
                for p in all_posets_up_to(5)? {
                    let cert = equivalent_exhaustive(&Polytope::new(hrep_order(&p))?, &Polytope::new(hrep_chain(&p))?)?;
                    match cert.verdict {
                        Verdict::Equivalent(_) => equivalent += 1,
                        Verdict::Distinct(_) => distinct += 1,
                        Verdict::Unknown => unknown += 1,
                    }
                    if cert.is_equivalent() == contains_forbidden_x(&p) || matches!(cert.verdict, Verdict::Unknown) {
                        mismatches.push(format!("{p:?}"));
                    }
                }
                Ok((
                    mismatches.is_empty(),
                    format!("{equivalent} equivalent, {distinct} distinct, {unknown} unknown, mismatches {mismatches:?}"),
                ))
            },
        ),
        check(
            "posets with d <= 4",
            "O(P) and C(P) are unimodularly equivalent",
            || {
                for p in all_posets_up_to(4)? {
                    let cert = equivalent_exhaustive(&Polytope::new(hrep_order(&p))?, &Polytope::new(hrep_chain(&p))?)?;
                    if !cert.is_equivalent() {
                        return Ok((false, format!("{p:?}: {}", cert.summary())));
                    }
                }
                Ok((true, "34 posets".to_string()))
            },
        ),
        check(
            "O(X) against C(Q) for all 63 posets Q on [5]",
            "the order polytope of X is not equivalent to any chain polytope",
            || {
                let o = Polytope::new(hrep_order(&x_poset()))?;
                let (mut by_invariant, mut by_search, mut other) = (0, 0, Vec::new());
                let classes = enumerate_posets_up_to_iso(5)?;
                for q in &classes {
                    let cert = equivalent_exhaustive(&o, &Polytope::new(hrep_chain(q))?)?;
                    match cert.verdict {
                        Verdict::Distinct(DistinctReason::Invariant(_)) => by_invariant += 1,
                        Verdict::Distinct(DistinctReason::ExhaustedSearch) => by_search += 1,
                        _ => other.push(format!("{q:?}: {}", cert.summary())),
                    }
                }
                Ok((
                    classes.len() == 63 && other.is_empty(),
                    format!("{by_invariant} separated by invariants, {by_search} by exhausted search, others {other:?}"),
                ))
            },
        ),
    ]
}

pub fn facet_bounds() -> Vec<Assertion> {
    let mut out = vec![check(
        "all posets with d <= 5",
        "f(O(P)) = m_min + m_max + |E|, f(C(P)) = d + c(P), f(O(P)) <= f(C(P)), and both have as many vertices as P has antichains",
        || {
            for p in all_posets_up_to(5)? {
                let o = Polytope::new(hrep_order(&p))?;
                let c = Polytope::new(hrep_chain(&p))?;
                let s = p.stats();
                let antichains = p.antichains().len();
                let ok = o.facet_count() == s.min_count + s.max_count + s.edge_count
                    && c.facet_count() == p.d() + s.chain_count
                    && o.facet_count() <= c.facet_count()
                    && o.vertex_count() == antichains
                    && c.vertex_count() == antichains;
                if !ok {
                    return Ok((false, format!("{p:?}")));
                }
            }
            Ok((true, "87 posets".to_string()))
        },
    )];
    for d in 1..=6 {
        out.push(check(
            &format!("all posets with d = {d}"),
            "f(O(P)) and f(C(P)) respect their upper bounds, and the extremal posets attain them",
            || {
                let r = verify_facet_bounds(d)?;
                Ok((
                    r.holds && r.tight,
                    format!(
                        "{} posets; max f(O) = {} (bound {}), max f(C) = {} (bound {})",
                        r.posets_checked, r.max_order_facets, r.order_bound, r.max_chain_facets, r.chain_bound
                    ),
                ))
            },
        ));
    }
    out.push(check("d = 5 and d = 6 bound values", "order bound 11 at d = 5, chain bound 15 at d = 6", || {
        let r5 = verify_facet_bounds(5)?;
        let r6 = verify_facet_bounds(6)?;
        Ok((r5.order_bound == 11 && r5.documented_order_facets == 11 && r6.chain_bound == 15 && r6.documented_chain_facets == 15, String::new()))
    }));
    out.push(check("2 <= d <= 40", "the largest product of a composition of d is 3^k, 4·3^(k-1) or 2·3^k", || {
        let bad: Vec<usize> = (2..=40).filter(|&d| max_product_composition(d).1 != max_product_closed_form(d)).collect();
        Ok((bad.is_empty(), format!("mismatches at {bad:?}")))
    }));
    out.push(check(
        "bound comparison",
        "the two bounds agree for d <= 7 and the order bound is strictly smaller for 8 <= d <= 40",
        || {
            let agree = (1..=7).all(|d| order_facet_bound(d) as u128 == chain_facet_bound(d));
            let below = (8..=40).all(|d| (order_facet_bound(d) as u128) < chain_facet_bound(d));
            Ok((agree && below, format!("d = 8: {} vs {}", order_facet_bound(8), chain_facet_bound(8))))
        },
    ));
    out
}

pub fn new_type() -> Vec<Assertion> {
    let mut out = vec![check(
        "stacked bowties, order part {35, 36}",
        "the order-chain polytope is integral with 10 vertices and 13 facets",
        || {
            let p = Polytope::new(hrep_order_chain(&bowtie_tower_partition(6)?))?;
            Ok((p.is_integral() && p.vertex_count() == 10 && p.facet_count() == 13, format!("({}, {})", p.vertex_count(), p.facet_count())))
        },
    )];
    out.push(check(
        "all 318 posets on [6]",
        "no order or chain polytope has 10 vertices and 13 facets",
        || {
            let classes = enumerate_posets_up_to_iso(6)?;
            for p in &classes {
                for sys in [hrep_order(p), hrep_chain(p)] {
                    let q = Polytope::new(sys)?;
                    if (q.vertex_count(), q.facet_count()) == (10, 13) {
                        return Ok((false, format!("{p:?}")));
                    }
                }
            }
            Ok((classes.len() == 318, format!("{} posets", classes.len())))
        },
    ));
    for d in [7, 8] {
        out.push(check(
            &format!("bowtie tower, d = {d}"),
            "the order-chain polytope is integral with d + 4 vertices and d + 7 facets",
            || {
                let p = Polytope::new(hrep_order_chain(&bowtie_tower_partition(d)?))?;
                Ok((p.is_integral() && p.vertex_count() == d + 4 && p.facet_count() == d + 7, format!("({}, {})", p.vertex_count(), p.facet_count())))
            },
        ));
        out.push(check(
            &format!("every poset on [{d}] with d + 4 antichains"),
            "no order or chain polytope has d + 4 vertices and d + 7 facets",
            || {
                // deleting a maximal element removes at least one antichain
                let limits = Limits { iso_class_elements: d, ..Limits::default() };
                let family = enumerate_posets_pruned(d, &limits, |p| p.antichains().len() <= p.d() + 4)?;
                let mut exact = 0;
                for p in family.iter().filter(|p| p.antichains().len() == d + 4) {
                    exact += 1;
                    let widths_ok = p.antichains().iter().all(|a| a.len() <= 2);
                    for sys in [hrep_order(p), hrep_chain(p)] {
                        let q = Polytope::new(sys)?;
                        if q.vertex_count() != d + 4 || q.facet_count() == d + 7 || !widths_ok {
                            return Ok((false, format!("{p:?}")));
                        }
                    }
                }
                Ok((exact > 0, format!("{exact} posets with d + 4 antichains, none with d + 7 facets")))
            },
        ));
    }
    out
}
