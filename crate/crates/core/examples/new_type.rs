//! Order-chain polytopes with `d + 4` vertices and `d + 7` facets, a
//! combination no order or chain polytope attains.

use order_chain::fixtures::bowtie_tower_partition;
use order_chain::geometry::{hrep_chain, hrep_order, hrep_order_chain, Polytope};
use order_chain::poset::enumerate_posets_up_to_iso;

fn main() -> order_chain::Result<()> {
    for d in 6..=8 {
        let l = bowtie_tower_partition(d)?;
        let p = Polytope::new(hrep_order_chain(&l))?;
        println!("d = {d}: {} vertices, {} facets, integral {}", p.vertex_count(), p.facet_count(), p.is_integral());
    }
    let mut attained = 0;
    for q in enumerate_posets_up_to_iso(6)? {
        for sys in [hrep_order(&q), hrep_chain(&q)] {
            let p = Polytope::new(sys)?;
            if (p.vertex_count(), p.facet_count()) == (10, 13) {
                attained += 1;
            }
        }
    }
    println!("order or chain polytopes on [6] with 10 vertices and 13 facets: {attained}");
    Ok(())
}
