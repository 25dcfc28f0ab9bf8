//! Exact decision of affine unimodular equivalence for small integral
//! polytopes.
//!
//! A lattice equivalence sends vertices to vertices and edges to edges, so it
//! is determined by the images of one vertex `b₀` and of `d` neighbours of
//! `b₀` whose edge directions are independent. The search tries every such
//! assignment compatible with facet degrees and checks the solved map.

use fixedbitset::FixedBitSet;
use num_traits::Zero;

use super::fingerprint::Fingerprint;
use super::map::{apply_map, unimodular_solution, AffineUnimodularMap};
use crate::error::{Error, Result};
use crate::geometry::linalg::rank;
use crate::geometry::rational::{int, is_integer};
use crate::geometry::{polytope_dimension, Polytope, Rational};
use crate::limits::Limits;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistinctReason {
    /// A unimodular invariant differs.
    Invariant(&'static str),
    /// Every candidate map was tried and none works.
    ExhaustedSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(AffineUnimodularMap),
    Distinct(DistinctReason),
    /// The search budget ran out first.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub verdict: Verdict,
    /// Candidate assignments examined.
    pub tuples_tried: u64,
}

impl EquivalenceCertificate {
    pub fn is_equivalent(&self) -> bool {
        matches!(self.verdict, Verdict::Equivalent(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self.verdict, Verdict::Distinct(_))
    }

    pub fn summary(&self) -> String {
        match &self.verdict {
            Verdict::Equivalent(m) => format!("equivalent via {}", m.describe()),
            Verdict::Distinct(DistinctReason::Invariant(name)) => format!("distinct: {name} differs"),
            Verdict::Distinct(DistinctReason::ExhaustedSearch) => {
                format!("distinct: no map among {} candidates", self.tuples_tried)
            }
            Verdict::Unknown => format!("unknown: budget exhausted after {} candidates", self.tuples_tried),
        }
    }
}

struct Combinatorics {
    degree: Vec<usize>,
    neighbours: Vec<Vec<usize>>,
}

fn combinatorics(p: &Polytope) -> Combinatorics {
    let n = p.vertex_count();
    let incidence: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(p.facet_count());
            for (f, mask) in p.facet_masks.iter().enumerate() {
                if mask.contains(v) {
                    s.insert(f);
                }
            }
            s
        })
        .collect();
    let mut neighbours = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            let mut common = incidence[u].clone();
            common.intersect_with(&incidence[v]);
            let mut face = FixedBitSet::with_capacity(n);
            face.insert_range(..);
            for f in common.ones() {
                face.intersect_with(&p.facet_masks[f]);
            }
            if face.count_ones(..) == 2 {
                neighbours[u].push(v);
                neighbours[v].push(u);
            }
        }
    }
    Combinatorics { degree: incidence.iter().map(|s| s.count_ones(..)).collect(), neighbours }
}

fn difference(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn check_inputs(a: &Polytope, b: &Polytope, limits: &Limits) -> Result<()> {
    for p in [a, b] {
        if p.dim() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: p.dim() });
        }
        if p.vertex_count() > limits.equivalence_vertices {
            return Err(Error::limit("vertex count for equivalence search", p.vertex_count(), limits.equivalence_vertices));
        }
        let dim = polytope_dimension(&p.vertices);
        if dim < p.dim() {
            return Err(Error::NotFullDimensional { dim, ambient: p.dim() });
        }
    }
    Ok(())
}

pub fn equivalent_exhaustive(a: &Polytope, b: &Polytope) -> Result<EquivalenceCertificate> {
    equivalent_exhaustive_with(a, b, &Limits::default())
}

/// Decides whether `b = U a + w` for some affine unimodular map. Returns
/// `Unknown` only when `limits.equivalence_budget` assignments are exhausted.
pub fn equivalent_exhaustive_with(a: &Polytope, b: &Polytope, limits: &Limits) -> Result<EquivalenceCertificate> {
    check_inputs(a, b, limits)?;
    let distinct = |name| EquivalenceCertificate { verdict: Verdict::Distinct(DistinctReason::Invariant(name)), tuples_tried: 0 };
    let fa = Fingerprint::of(a, limits)?;
    let fb = Fingerprint::of(b, limits)?;
    if let Some(name) = fa.first_difference(&fb) {
        return Ok(distinct(name));
    }
    let integral_a = a.vertices.iter().flatten().all(is_integer);
    let integral_b = b.vertices.iter().flatten().all(is_integer);
    if integral_a != integral_b {
        return Ok(distinct("integrality"));
    }
    let ca = combinatorics(a);
    let cb = combinatorics(b);
    let profile = |c: &Combinatorics| {
        let mut v: Vec<(usize, usize)> = c.degree.iter().zip(&c.neighbours).map(|(&d, n)| (d, n.len())).collect();
        v.sort_unstable();
        v
    };
    if profile(&ca) != profile(&cb) {
        return Ok(distinct("vertex degree profile"));
    }

    let d = a.dim();
    let va = &a.vertices.vertices;
    let vb = &b.vertices.vertices;
    // base: vertex 0 of `a` and d neighbours with independent edge directions
    let b0 = 0;
    let mut base = Vec::with_capacity(d);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(d);
    for &n in &ca.neighbours[b0] {
        rows.push(difference(&va[n], &va[b0]));
        if rank(rows.clone()) == rows.len() {
            base.push(n);
            if base.len() == d {
                break;
            }
        } else {
            rows.pop();
        }
    }
    debug_assert_eq!(base.len(), d, "edges at a vertex of a full-dimensional polytope span");
    // columns of B are the edge directions
    let b_matrix: Vec<Vec<Rational>> = (0..d).map(|i| (0..d).map(|k| rows[k][i].clone()).collect()).collect();

    let mut tried = 0u64;
    let mut image = vec![0usize; d];
    for c0 in 0..vb.len() {
        if cb.degree[c0] != ca.degree[b0] || cb.neighbours[c0].len() != ca.neighbours[b0].len() {
            continue;
        }
        let mut used = FixedBitSet::with_capacity(vb.len());
        let found = assign(
            &Search { ca: &ca, cb: &cb, a, b, base: &base, b_matrix: &b_matrix, c0, budget: limits.equivalence_budget },
            0,
            &mut image,
            &mut used,
            &mut tried,
        )?;
        match found {
            Step::Found(m) => return Ok(EquivalenceCertificate { verdict: Verdict::Equivalent(m), tuples_tried: tried }),
            Step::Budget => return Ok(EquivalenceCertificate { verdict: Verdict::Unknown, tuples_tried: tried }),
            Step::None => {}
        }
    }
    Ok(EquivalenceCertificate { verdict: Verdict::Distinct(DistinctReason::ExhaustedSearch), tuples_tried: tried })
}

struct Search<'a> {
    ca: &'a Combinatorics,
    cb: &'a Combinatorics,
    a: &'a Polytope,
    b: &'a Polytope,
    base: &'a [usize],
    b_matrix: &'a [Vec<Rational>],
    c0: usize,
    budget: u64,
}

enum Step {
    Found(AffineUnimodularMap),
    Budget,
    None,
}

fn assign(s: &Search, k: usize, image: &mut [usize], used: &mut FixedBitSet, tried: &mut u64) -> Result<Step> {
    let d = s.base.len();
    if k == d {
        *tried += 1;
        if *tried > s.budget {
            return Ok(Step::Budget);
        }
        return Ok(match candidate_map(s, image) {
            Some(m) => Step::Found(m),
            None => Step::None,
        });
    }
    let want = s.base[k];
    for &c in &s.cb.neighbours[s.c0] {
        if used.contains(c)
            || s.cb.degree[c] != s.ca.degree[want]
            || s.cb.neighbours[c].len() != s.ca.neighbours[want].len()
        {
            continue;
        }
        used.insert(c);
        image[k] = c;
        let step = assign(s, k + 1, image, used, tried)?;
        used.set(c, false);
        if !matches!(step, Step::None) {
            return Ok(step);
        }
    }
    Ok(Step::None)
}

fn candidate_map(s: &Search, image: &[usize]) -> Option<AffineUnimodularMap> {
    let d = image.len();
    let va = &s.a.vertices.vertices;
    let vb = &s.b.vertices.vertices;
    let c0 = &vb[s.c0];
    let cols: Vec<Vec<Rational>> = image.iter().map(|&c| difference(&vb[c], c0)).collect();
    let c_matrix: Vec<Vec<Rational>> = (0..d).map(|i| (0..d).map(|k| cols[k][i].clone()).collect()).collect();
    let u = unimodular_solution(s.b_matrix, &c_matrix)?;
    let b0 = &va[0];
    let mut shift = Vec::with_capacity(d);
    for i in 0..d {
        let mut w = c0[i].clone();
        for j in 0..d {
            if u[i][j] != 0 && !b0[j].is_zero() {
                w -= int(u[i][j]) * &b0[j];
            }
        }
        if !is_integer(&w) {
            return None;
        }
        shift.push(w.to_integer().to_i64()?);
    }
    let m = AffineUnimodularMap::new(u, shift).ok()?;
    (apply_map(&m, &s.a.vertices).ok()? == s.b.vertices).then_some(m)
}
