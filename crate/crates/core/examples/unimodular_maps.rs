//! Explicit unimodular maps onto chain polytopes of zigzags, and the
//! exhaustive search deciding equivalence when no explicit map applies.

use order_chain::equivalence::{
    apply_map, contains_forbidden_x, equivalent_exhaustive, zigzag_equivalence,
};
use order_chain::fixtures::{seven_chain_partition, x_poset};
use order_chain::geometry::{enumerate_vertices, hrep_chain, hrep_order, hrep_order_chain, Polytope};
use order_chain::partition::EdgePartition;
use order_chain::poset::{zigzag_from_descent_set, DescentSet};

fn main() -> order_chain::Result<()> {
    let l = seven_chain_partition();
    let z = zigzag_equivalence(&l)?;
    println!("seven-element chain, order part {:?}", l.order_edges());
    println!("  map      {}", z.map.describe());
    println!("  target   zigzag with covers {:?}", z.target.covers());
    let image = apply_map(&z.map, &enumerate_vertices(&hrep_order_chain(&l))?)?;
    println!("  exact    {}", image == enumerate_vertices(&hrep_chain(&z.target))?);

    let zigzag = zigzag_from_descent_set(&DescentSet::new(5, &[1, 3])?);
    let all = EdgePartition::all_order(&zigzag);
    println!("\nzigzag {:?} with every cover in the order part", zigzag.covers());
    println!("  map      {}", zigzag_equivalence(&all)?.map.describe());

    let x = x_poset();
    let cert = equivalent_exhaustive(&Polytope::new(hrep_order(&x))?, &Polytope::new(hrep_chain(&x))?)?;
    println!("\nX poset contains X: {}; order vs chain polytope: {}", contains_forbidden_x(&x), cert.summary());
    Ok(())
}
