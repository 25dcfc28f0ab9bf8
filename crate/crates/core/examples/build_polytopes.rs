//! Builds the order, chain and order-chain polytopes of the seven-element
//! chain and prints their inequalities, vertices and facets.

use order_chain::fixtures::seven_chain_partition;
use order_chain::geometry::{format_rational, hrep_chain, hrep_order, hrep_order_chain, Polytope};

fn main() -> order_chain::Result<()> {
    let l = seven_chain_partition();
    println!("order part {:?}, chain part {:?}", l.order_edges(), l.chain_edges());
    for (name, sys) in [
        ("order polytope", hrep_order(l.base())),
        ("chain polytope", hrep_chain(l.base())),
        ("order-chain polytope", hrep_order_chain(&l)),
    ] {
        let p = Polytope::new(sys)?;
        println!("\n{name}: {} vertices, {} facets", p.vertex_count(), p.facet_count());
        for h in &p.facets {
            println!("  {:<24} {}", h.inequality_string(), h.tag);
        }
        let sample: Vec<String> = p.vertices.vertices[..3.min(p.vertex_count())]
            .iter()
            .map(|v| v.iter().map(format_rational).collect::<Vec<_>>().join(" "))
            .collect();
        println!("  first vertices: {}", sample.join(" | "));
    }
    Ok(())
}
