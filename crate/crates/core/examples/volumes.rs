//! Exact volumes: order and chain polytopes share the volume `e(P)/d!`, and
//! edge partitions can move it either way.

use order_chain::fixtures::{forked_chain, forked_chain_large, forked_chain_small};
use order_chain::geometry::{hrep_chain, hrep_order, hrep_order_chain, Polytope};
use order_chain::poset::enumerate_posets_up_to_iso;

fn main() -> order_chain::Result<()> {
    let p = forked_chain();
    println!("forked chain, {} linear extensions", p.linear_extensions_count()?);
    println!("  order polytope        {}", Polytope::new(hrep_order(&p))?.volume()?);
    println!("  chain polytope        {}", Polytope::new(hrep_chain(&p))?.volume()?);
    for l in [forked_chain_small(), forked_chain_large()] {
        let v = Polytope::new(hrep_order_chain(&l))?.volume()?;
        println!("  order part {:<16} {v}", format!("{:?}", l.order_edges()));
    }

    println!("\nposets on [4]: volume of the order polytope against e(P)/4!");
    for q in enumerate_posets_up_to_iso(4)? {
        let v = Polytope::new(hrep_order(&q))?.volume()?;
        println!("  {:<34} {:>5} {:>3}/24", format!("{:?}", q.covers()), v.to_string(), q.linear_extensions_count()?);
    }
    Ok(())
}
