use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::equivalence::{AffineUnimodularMap, DistinctReason, EquivalenceCertificate, Verdict};
use crate::geometry::{format_rational, Halfspace, Rational};

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
pub(crate) fn table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn pair(key: &str, value: impl ToString) -> Vec<String> {
    vec![key.to_string(), value.to_string()]
}

pub(crate) fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn tuple(v: &[Rational]) -> String {
    format!("({})", rationals(v).join(", "))
}

pub(crate) trait Report: Serialize {
    fn text(&self) -> String;
}

#[derive(Serialize)]
pub(crate) struct Inequality {
    pub inequality: String,
    pub coefficients: Vec<String>,
    pub bound: String,
    pub source: String,
}

impl From<&Halfspace> for Inequality {
    fn from(h: &Halfspace) -> Self {
        Inequality {
            inequality: h.inequality_string(),
            coefficients: rationals(&h.coefficients),
            bound: format_rational(&h.bound),
            source: h.tag.to_string(),
        }
    }
}

fn inequality_table(list: &[Inequality]) -> String {
    let rows: Vec<Vec<String>> = list.iter().map(|h| vec![h.inequality.clone(), h.source.clone()]).collect();
    table(&rows)
}

#[derive(Serialize)]
pub(crate) struct HrepReport {
    pub d: usize,
    pub inequalities: Vec<Inequality>,
}

impl Report for HrepReport {
    fn text(&self) -> String {
        inequality_table(&self.inequalities)
    }
}

#[derive(Serialize)]
pub(crate) struct VerticesReport {
    pub d: usize,
    pub vertex_count: usize,
    pub vertices: Vec<Vec<String>>,
}

impl Report for VerticesReport {
    fn text(&self) -> String {
        table(&self.vertices)
    }
}

#[derive(Serialize)]
pub(crate) struct FacetsReport {
    pub d: usize,
    pub facet_count: usize,
    pub facets: Vec<Inequality>,
}

impl Report for FacetsReport {
    fn text(&self) -> String {
        inequality_table(&self.facets)
    }
}

#[derive(Serialize)]
pub(crate) struct IntegralReport {
    pub d: usize,
    pub integral: bool,
    /// First non-integral vertex in lexicographic order.
    pub witness: Option<Vec<String>>,
    #[serde(skip)]
    pub witness_point: Option<Vec<Rational>>,
}

impl Report for IntegralReport {
    fn text(&self) -> String {
        let mut rows = vec![pair("integral", self.integral)];
        if let Some(w) = &self.witness_point {
            rows.push(pair("witness", tuple(w)));
        }
        table(&rows)
    }
}

#[derive(Serialize)]
pub(crate) struct VolumeReport {
    pub d: usize,
    pub volume: String,
    /// `d! · volume`.
    pub normalized_volume: String,
}

impl Report for VolumeReport {
    fn text(&self) -> String {
        table(&[pair("volume", &self.volume), pair("normalized_volume", &self.normalized_volume)])
    }
}

/// Lattice point counts keyed by dilation, in ascending dilation order.
pub(crate) struct LatticeCounts(pub Vec<(u32, u64)>);

impl Serialize for LatticeCounts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (t, count) in &self.0 {
            map.serialize_entry(&t.to_string(), count)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
pub(crate) struct InvariantsReport {
    pub d: usize,
    pub vertices: Vec<Vec<String>>,
    pub facets: usize,
    pub volume: String,
    pub integral: bool,
    pub lattice_counts: LatticeCounts,
    pub vertex_count: usize,
    pub facet_count: usize,
}

impl Report for InvariantsReport {
    fn text(&self) -> String {
        let mut rows = vec![
            pair("d", self.d),
            pair("vertex_count", self.vertex_count),
            pair("facet_count", self.facet_count),
            pair("volume", &self.volume),
            pair("integral", self.integral),
        ];
        for (t, count) in &self.lattice_counts.0 {
            rows.push(pair(&format!("lattice_count t={t}"), count));
        }
        table(&rows)
    }
}

#[derive(Serialize)]
pub(crate) struct MapJson {
    pub matrix: Vec<Vec<i64>>,
    pub shift: Vec<i64>,
    pub description: String,
}

impl From<&AffineUnimodularMap> for MapJson {
    fn from(m: &AffineUnimodularMap) -> Self {
        MapJson { matrix: m.matrix().to_vec(), shift: m.shift().to_vec(), description: m.describe() }
    }
}

#[derive(Serialize)]
pub(crate) struct EquivReport {
    pub verdict: &'static str,
    pub reason: Option<String>,
    pub candidates_tried: u64,
    pub map: Option<MapJson>,
}

impl From<&EquivalenceCertificate> for EquivReport {
    fn from(c: &EquivalenceCertificate) -> Self {
        let (verdict, reason, map) = match &c.verdict {
            Verdict::Equivalent(m) => ("equivalent", None, Some(MapJson::from(m))),
            Verdict::Distinct(DistinctReason::Invariant(name)) => ("distinct", Some(format!("{name} differs")), None),
            Verdict::Distinct(DistinctReason::ExhaustedSearch) => {
                ("distinct", Some("no candidate map works".to_string()), None)
            }
            Verdict::Unknown => ("unknown", Some("search budget exhausted".to_string()), None),
        };
        EquivReport { verdict, reason, candidates_tried: c.tuples_tried, map }
    }
}

impl Report for EquivReport {
    fn text(&self) -> String {
        let mut rows = vec![pair("verdict", self.verdict)];
        if let Some(r) = &self.reason {
            rows.push(pair("reason", r));
        }
        rows.push(pair("candidates_tried", self.candidates_tried));
        if let Some(m) = &self.map {
            rows.push(pair("map", &m.description));
        }
        table(&rows)
    }
}

#[derive(Serialize)]
pub(crate) struct SearchReport {
    pub d: usize,
    pub partitions_checked: usize,
    pub max_volume: String,
    /// Order parts of every maximizing partition, ascending bitmask order.
    pub argmax: Vec<Vec<(usize, usize)>>,
}

fn edge_list(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    format!("{{{}}}", parts.join(", "))
}

impl Report for SearchReport {
    fn text(&self) -> String {
        let mut rows = vec![
            pair("partitions_checked", self.partitions_checked),
            pair("max_volume", &self.max_volume),
        ];
        for edges in &self.argmax {
            rows.push(pair("argmax order part", edge_list(edges)));
        }
        table(&rows)
    }
}

#[derive(Serialize)]
pub(crate) struct DescentEntry {
    pub descent_set: Vec<usize>,
    pub run_list: Vec<usize>,
}

#[derive(Serialize)]
pub(crate) struct DescentReport {
    pub n: usize,
    pub family_size: usize,
    pub max_beta: u128,
    pub argmax: Vec<DescentEntry>,
}

impl Report for DescentReport {
    fn text(&self) -> String {
        let mut rows = vec![
            pair("n", self.n),
            pair("family_size", self.family_size),
            pair("max_beta", self.max_beta),
        ];
        for e in &self.argmax {
            let set: Vec<String> = e.descent_set.iter().map(ToString::to_string).collect();
            let runs: Vec<String> = e.run_list.iter().map(ToString::to_string).collect();
            rows.push(vec![
                "argmax".to_string(),
                format!("S = {{{}}}", set.join(", ")),
                format!("runs ({})", runs.join(", ")),
            ]);
        }
        table(&rows)
    }
}

impl Report for crate::verify::SuiteReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let status = if a.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}: {}", a.description, a.claim));
            if !a.detail.is_empty() {
                out.push_str(&format!(" [{}]", a.detail));
            }
            out.push('\n');
        }
        let passed = self.assertions.iter().filter(|a| a.passed).count();
        out.push_str(&format!(
            "{}  {}: {passed}/{} assertions passed\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.assertions.len()
        ));
        out
    }
}
