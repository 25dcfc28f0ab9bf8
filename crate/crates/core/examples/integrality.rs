//! The diamond's edge partitions: which are integral, and the half-integral
//! vertex that appears when they are not.

use order_chain::fixtures::diamond;
use order_chain::geometry::{format_rational, hrep_order_chain, Polytope};
use order_chain::partition::{enumerate_partitions, is_hasse_forest, minimal_incident_partition};

fn main() -> order_chain::Result<()> {
    let p = diamond();
    println!("covers {:?}; Hasse forest: {}", p.covers(), is_hasse_forest(&p));
    for l in enumerate_partitions(&p)? {
        let poly = Polytope::new(hrep_order_chain(&l))?;
        let fractional: Vec<String> = poly
            .vertices
            .iter()
            .filter(|v| v.iter().any(|x| !x.is_integer()))
            .map(|v| format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(", ")))
            .collect();
        println!(
            "order part {:<32} integral {:<5} {}",
            format!("{:?}", l.order_edges()),
            poly.is_integral(),
            fractional.join(" ")
        );
    }
    let l = minimal_incident_partition(&p, &[1])?;
    println!(
        "\nmoving the covers at the minimal element into the chain part: order part {:?}, integral {}",
        l.order_edges(),
        Polytope::new(hrep_order_chain(&l))?.is_integral()
    );
    Ok(())
}
