//! Descent statistics and the volume-maximizing edge partitions of chains.

use order_chain::descent::{beta, best_chain_partition, family_f, fibonacci, max_beta_over_f, runs};

fn main() -> order_chain::Result<()> {
    println!("{:>3} {:>6} {:>8} {:>8}  maximizing descent sets with run-lists", "n", "|F(n)|", "2 F_n", "max β");
    for n in 2..=10 {
        let best = max_beta_over_f(n)?;
        let argmax: Vec<String> = best.argmax.iter().map(|s| format!("{:?} {:?}", s.elements(), runs(s).parts)).collect();
        println!("{n:>3} {:>6} {:>8} {:>8}  {}", family_f(n)?.len(), 2 * fibonacci(n), best.value, argmax.join(" "));
    }
    let s = order_chain::DescentSet::new(6, &[2, 3])?;
    println!("\npermutations of [6] with descent set {{2, 3}}: {}", beta(&s)?);
    for n in 2..=7 {
        let best = best_chain_partition(n)?;
        let shown: Vec<String> = best.argmax.iter().map(|l| format!("{:?}", l.order_edges())).collect();
        println!("chain [{n}]: max volume {}, order parts {}", best.volume, shown.join(" "));
    }
    Ok(())
}
