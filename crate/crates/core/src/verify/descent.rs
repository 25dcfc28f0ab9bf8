use num_bigint::BigInt;

use super::{check, Assertion};
use crate::descent::{
    alternating_partition, beta, beta_brute_force, best_chain_partition, family_f, fibonacci, max_beta_over_f,
    predicted_maximizer_runs, runs,
};
use crate::equivalence::zigzag_equivalence;
use crate::fixtures::{forked_chain, forked_chain_large, forked_chain_small};
use crate::geometry::rational::ratio;
use crate::geometry::{hrep_chain, hrep_order, hrep_order_chain, Polytope, Rational};
use crate::partition::enumerate_partitions;
use crate::poset::{descent_set_of_zigzag, enumerate_posets_up_to_iso, zigzag_from_descent_set, DescentSet, Poset};

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn over_factorial(count: u128, n: usize) -> Rational {
    Rational::new(BigInt::from(count), BigInt::from(factorial(n)))
}

pub fn volume_example() -> Vec<Assertion> {
    vec![
        check(
            "forked chain 1 < 2, 1 < 3 < 4",
            "V(OC) = 1/24 for order part {12}, V(O) = V(C) = 3/24, V(OC) = 5/24 for order part {12, 13}",
            || {
                let small = Polytope::new(hrep_order_chain(&forked_chain_small()))?.volume()?;
                let o = Polytope::new(hrep_order(&forked_chain()))?.volume()?;
                let c = Polytope::new(hrep_chain(&forked_chain()))?.volume()?;
                let large = Polytope::new(hrep_order_chain(&forked_chain_large()))?.volume()?;
                let ok = small == ratio(1, 24) && o == ratio(3, 24) && c == o && large == ratio(5, 24) && small < o && o < large;
                Ok((ok, format!("{small} < {o} = {c} < {large}")))
            },
        ),
        check(
            "all posets with d <= 6",
            "V(O(P)) = V(C(P)) = e(P)/d!",
            || {
                let mut count = 0;
                for d in 1..=6 {
                    for p in enumerate_posets_up_to_iso(d)? {
                        let expected = over_factorial(p.linear_extensions_count()?, d);
                        let o = Polytope::new(hrep_order(&p))?.volume()?;
                        let c = Polytope::new(hrep_chain(&p))?.volume()?;
                        if o != expected || c != expected {
                            return Ok((false, format!("{p:?}: {o}, {c}, expected {expected}")));
                        }
                        count += 1;
                    }
                }
                Ok((count == 405, format!("{count} posets")))
            },
        ),
    ]
}

/// Zigzag condition: every maximal chain other than those through `1` and
/// `n` has at least three elements.
fn long_interior_chains(p: &Poset) -> bool {
    let n = p.d();
    p.maximal_chains()
        .iter()
        .filter(|c| !c.elements.contains(&1) && !c.elements.contains(&n))
        .all(|c| c.len() >= 3)
}

pub fn fibonacci_family() -> Vec<Assertion> {
    vec![
        check("n = 10, S = {1, 2, 5, 8, 9}", "the run-list is (2, 2, 1, 2, 2)", || {
            let r = runs(&DescentSet::new(10, &[1, 2, 5, 8, 9])?);
            Ok((r.parts == vec![2, 2, 1, 2, 2], format!("{:?}", r.parts)))
        }),
        check(
            "2 <= n <= 12",
            "S belongs to the family exactly when its zigzag has no interior maximal chain with fewer than three elements",
            || {
                for n in 2..=12 {
                    let family = family_f(n)?;
                    for s in DescentSet::all(n) {
                        if family.contains(&s) != long_interior_chains(&zigzag_from_descent_set(&s)) {
                            return Ok((false, format!("n = {n}, S = {:?}", s.elements())));
                        }
                    }
                }
                Ok((true, String::new()))
            },
        ),
        check("2 <= n <= 12", "|F(n)| = 2 F_n", || {
            let sizes: Vec<(usize, usize)> = (2..=12).map(|n| Ok((family_f(n)?.len(), 2 * fibonacci(n) as usize))).collect::<crate::Result<_>>()?;
            let ok = sizes.iter().all(|(a, b)| a == b) && family_f(8)?.len() == 42;
            Ok((ok, format!("{:?}", sizes.iter().map(|s| s.0).collect::<Vec<_>>())))
        }),
    ]
}

pub fn descent_max() -> Vec<Assertion> {
    vec![
        check("n <= 8, every S", "brute-force permutation count equals the inclusion-exclusion formula", || {
            let mut count = 0;
            for n in 1..=8 {
                for s in DescentSet::all(n) {
                    if beta_brute_force(&s)? != beta(&s)? {
                        return Ok((false, format!("n = {n}, S = {:?}", s.elements())));
                    }
                    count += 1;
                }
            }
            Ok((true, format!("{count} sets")))
        }),
        check("n <= 8, every S", "β(S) = β(complement of S)", || {
            for n in 1..=8 {
                for s in DescentSet::all(n) {
                    if beta(&s)? != beta(&s.complement())? {
                        return Ok((false, format!("n = {n}, S = {:?}", s.elements())));
                    }
                }
            }
            Ok((true, String::new()))
        }),
        check(
            "2 <= n <= 10",
            "the maximum of β over the family is attained at run-lists (1,2,…,2) and (2,…,2,1) for even n, (1,2,…,2,1) for odd n",
            || {
                let mut values = Vec::new();
                for n in 2..=10 {
                    let best = max_beta_over_f(n)?;
                    let found: Vec<Vec<usize>> = best.argmax.iter().map(|s| runs(s).parts).collect();
                    if !predicted_maximizer_runs(n).iter().all(|l| found.contains(l)) {
                        return Ok((false, format!("n = {n}: argmax run-lists {found:?}")));
                    }
                    values.push(best.value);
                }
                Ok((true, format!("maxima {values:?}")))
            },
        ),
    ]
}

pub fn chain_argmax() -> Vec<Assertion> {
    vec![
        check(
            "chains with n <= 7, every partition",
            "V(OC) = β(S)/n! where S is the descent set of the target zigzag",
            || {
                let mut count = 0;
                for n in 1..=7 {
                    for l in enumerate_partitions(&Poset::chain(n)?)? {
                        let v = Polytope::new(hrep_order_chain(&l))?.volume()?;
                        let s = descent_set_of_zigzag(&zigzag_equivalence(&l)?.target)?;
                        if v != over_factorial(beta(&s)?, n) {
                            return Ok((false, format!("n = {n}, order part {:?}", l.order_edges())));
                        }
                        count += 1;
                    }
                }
                Ok((true, format!("{count} partitions")))
            },
        ),
        check(
            "chains with 2 <= n <= 7",
            "the alternating partition maximizes the volume, and the maximum is max β / n!",
            || {
                let mut maxima = Vec::new();
                for n in 2..=7 {
                    let best = best_chain_partition(n)?;
                    let by_beta = over_factorial(max_beta_over_f(n)?.value, n);
                    if !best.argmax.contains(&alternating_partition(n)?) || best.volume != by_beta {
                        return Ok((false, format!("n = {n}: max {} vs {by_beta}", best.volume)));
                    }
                    maxima.push(best.volume.to_string());
                }
                Ok((true, format!("maxima {}", maxima.join(", "))))
            },
        ),
    ]
}
