//! Isomorphism classes of small posets with their antichain, linear
//! extension and facet statistics.

use order_chain::equivalence::{chain_facet_bound, order_facet_bound};
use order_chain::geometry::{hrep_chain, hrep_order, Polytope};
use order_chain::partition::is_hasse_forest;
use order_chain::poset::enumerate_posets_up_to_iso;

fn main() -> order_chain::Result<()> {
    println!("{:>2} {:>7} {:>8} {:>12} {:>12}", "d", "classes", "forests", "max f(O)", "max f(C)");
    for d in 1..=6 {
        let classes = enumerate_posets_up_to_iso(d)?;
        let forests = classes.iter().filter(|p| is_hasse_forest(p)).count();
        let (mut fo, mut fc) = (0, 0);
        for p in &classes {
            fo = fo.max(Polytope::new(hrep_order(p))?.facet_count());
            fc = fc.max(Polytope::new(hrep_chain(p))?.facet_count());
        }
        println!(
            "{d:>2} {:>7} {:>8} {:>12} {:>12}",
            classes.len(),
            forests,
            format!("{fo} <= {}", order_facet_bound(d)),
            format!("{fc} <= {}", chain_facet_bound(d))
        );
    }
    Ok(())
}
