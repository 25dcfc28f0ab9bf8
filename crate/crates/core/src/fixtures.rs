//! Small posets and partitions with known polytopes, shared by the verify
//! suites, the command line and the examples.

use crate::error::Result;
use crate::partition::EdgePartition;
use crate::poset::Poset;

/// `1 ≺ 2, 3 ≺ 4` with `1 ≺ 3 ≺ 4`: the Hasse diagram is a 4-cycle.
pub fn diamond() -> Poset {
    Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).expect("valid poset")
}

/// Order part `{12, 24, 34}`, chain part `{13}`; has the vertex `(½, ½, ½, ½)`.
pub fn diamond_half_integral() -> EdgePartition {
    EdgePartition::new(&diamond(), &[(1, 2), (2, 4), (3, 4)]).expect("covers of the diamond")
}

/// Order part `{13}`, chain part `{12, 24, 34}`; integral.
pub fn diamond_integral() -> EdgePartition {
    EdgePartition::new(&diamond(), &[(1, 3)]).expect("covers of the diamond")
}

/// `1 ≺ 2`, `1 ≺ 3 ≺ 4`.
pub fn forked_chain() -> Poset {
    Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).expect("valid poset")
}

/// Order part `{12}` on [`forked_chain`]; volume `1/24`.
pub fn forked_chain_small() -> EdgePartition {
    EdgePartition::new(&forked_chain(), &[(1, 2)]).expect("covers of the fork")
}

/// Order part `{12, 13}` on [`forked_chain`]; volume `5/24`.
pub fn forked_chain_large() -> EdgePartition {
    EdgePartition::new(&forked_chain(), &[(1, 2), (1, 3)]).expect("covers of the fork")
}

/// `1, 2 ≺ 3 ≺ 4, 5`.
pub fn x_poset() -> Poset {
    Poset::new(5, &[(1, 3), (2, 3), (3, 4), (3, 5)]).expect("valid poset")
}

/// Order part `{13, 34, 35}`, chain part `{23}`; reflecting `x₂` maps it onto
/// the order polytope of [`x_poset`].
pub fn x_partition() -> EdgePartition {
    EdgePartition::new(&x_poset(), &[(1, 3), (3, 4), (3, 5)]).expect("covers of X")
}

/// The chain `[7]` with order part `{12, 45, 56}`.
pub fn seven_chain_partition() -> EdgePartition {
    let chain = Poset::chain(7).expect("nonempty");
    EdgePartition::new(&chain, &[(1, 2), (4, 5), (5, 6)]).expect("covers of the chain")
}

/// For `d = 6`, two stacked complete bipartite layers `1, 2 ≺ 3, 4 ≺ 5, 6`;
/// for `d > 6`, additionally `5, 6 ≺ 7 ≺ 8 ≺ ⋯ ≺ d`.
pub fn bowtie_tower(d: usize) -> Result<Poset> {
    let mut covers = vec![(1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6)];
    if d > 6 {
        covers.extend([(5, 7), (6, 7)]);
        covers.extend((7..d).map(|i| (i, i + 1)));
    }
    Poset::new(d.max(6), &covers)
}

/// Order part `{35, 36, 57, 67, 78, …, (d−1)d}` on [`bowtie_tower`]; the
/// polytope is integral with `d + 4` vertices and `d + 7` facets.
pub fn bowtie_tower_partition(d: usize) -> Result<EdgePartition> {
    let p = bowtie_tower(d)?;
    let mut order = vec![(3, 5), (3, 6)];
    if d > 6 {
        order.extend([(5, 7), (6, 7)]);
        order.extend((7..d).map(|i| (i, i + 1)));
    }
    EdgePartition::new(&p, &order)
}
