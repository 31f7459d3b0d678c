//! t-uniform hypergraphs, vertex-map homomorphisms, and variable-strength
//! orthogonal arrays (VOAs): arrays that must be lambda-covered exactly on
//! the edges of a prescribed hypergraph.
//!
//! An OOA is a VOA over the left-justified hypergraph H_{t,m,s}; a plain OA
//! is a VOA over the complete hypergraph K_m^t. The independence hypergraphs
//! LI (vectors, edges = linearly independent subsets) and PI (projective
//! points, edges = spanning subsets) describe the coverage structure of
//! subinterval arrays: pulling the subinterval array back along a vertex map
//! H_{t,q+1,t} -> PI_{t-1,q} reproduces the RUNS construction column for
//! column.
//!
//! Text formats: a hypergraph is
//!
//! ```text
//! hypergraph t=<t> n=<|V|>
//! vertices:
//! <one label per line>
//! edges:
//! <space-separated labels, one edge per line>
//! ```
//!
//! and a vertex map is one `src -> dst` line per vertex.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::construct;
use crate::error::{Error, Result};
use crate::field::{matrix_rank, Elem, FieldSpec};
use crate::lfsr::LfsrSpec;
use crate::ooa::{self, covered_on_indices, CoverageReport, OoaArray};

/// Edges are stored as sorted vertex indices packed 16 bits apiece, which
/// bounds the uniformity and the vertex count at desk scale.
pub const MAX_UNIFORMITY: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    t: usize,
    vertices: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: BTreeSet<u128>,
}

impl Hypergraph {
    pub fn new(t: usize, vertices: Vec<String>) -> Result<Self> {
        if t == 0 || t > MAX_UNIFORMITY {
            return Err(Error::BadDimension(alloc::format!(
                "uniformity must be in 1..={MAX_UNIFORMITY}"
            )));
        }
        if vertices.len() > u16::MAX as usize {
            return Err(Error::BadDimension("too many vertices".into()));
        }
        let mut index = BTreeMap::new();
        for (i, label) in vertices.iter().enumerate() {
            if label.is_empty() || label.contains(char::is_whitespace) {
                return Err(Error::UnknownLabel(label.clone()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::UnknownLabel(alloc::format!(
                    "duplicate vertex {label}"
                )));
            }
        }
        Ok(Hypergraph {
            t,
            vertices,
            index,
            edges: BTreeSet::new(),
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn pack(&self, idxs: &[usize]) -> Result<u128> {
        if idxs.len() != self.t {
            return Err(Error::BadDimension(alloc::format!(
                "edge of size {} in a {}-uniform hypergraph",
                idxs.len(),
                self.t
            )));
        }
        let mut sorted = idxs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.t {
            return Err(Error::BadDimension("edge vertices must be distinct".into()));
        }
        let mut key = 0u128;
        for &i in &sorted {
            if i >= self.vertices.len() {
                return Err(Error::UnknownLabel(alloc::format!("vertex index {i}")));
            }
            key = (key << 16) | i as u128;
        }
        Ok(key)
    }

    fn unpack(&self, mut key: u128) -> Vec<usize> {
        let mut out = alloc::vec![0usize; self.t];
        for slot in out.iter_mut().rev() {
            *slot = (key & 0xffff) as usize;
            key >>= 16;
        }
        out
    }

    pub fn add_edge_indices(&mut self, idxs: &[usize]) -> Result<()> {
        let key = self.pack(idxs)?;
        self.edges.insert(key);
        Ok(())
    }

    pub fn add_edge_labels(&mut self, labels: &[&str]) -> Result<()> {
        let idxs = labels
            .iter()
            .map(|l| {
                self.vertex_index(l)
                    .ok_or_else(|| Error::UnknownLabel((*l).to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.add_edge_indices(&idxs)
    }

    /// Membership; false (not an error) for repeated or out-of-size sets.
    pub fn has_edge_indices(&self, idxs: &[usize]) -> bool {
        match self.pack(idxs) {
            Ok(key) => self.edges.contains(&key),
            Err(_) => false,
        }
    }

    /// Edges as sorted index lists, in deterministic order.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter().map(|&k| self.unpack(k))
    }

    pub fn to_text(&self) -> String {
        let mut out = alloc::format!(
            "hypergraph t={} n={}\nvertices:\n",
            self.t,
            self.vertices.len()
        );
        for v in &self.vertices {
            out.push_str(v);
            out.push('\n');
        }
        out.push_str("edges:\n");
        for edge in self.edges() {
            let labels: Vec<&str> = edge.iter().map(|&i| self.vertices[i].as_str()).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("hypergraph") {
            return Err(Error::Parse("expected 'hypergraph' header".into()));
        }
        let mut t = None;
        let mut n = None;
        for tok in parts {
            match tok.split_once('=') {
                Some(("t", v)) => t = v.parse::<usize>().ok(),
                Some(("n", v)) => n = v.parse::<usize>().ok(),
                _ => return Err(Error::Parse(alloc::format!("bad header token {tok:?}"))),
            }
        }
        let (Some(t), Some(n)) = (t, n) else {
            return Err(Error::Parse("missing t= or n= in header".into()));
        };
        if lines.next() != Some("vertices:") {
            return Err(Error::Parse("expected 'vertices:' marker".into()));
        }
        let mut vertices = Vec::with_capacity(n);
        let mut edges_seen = false;
        for line in lines.by_ref() {
            if line.trim() == "edges:" {
                edges_seen = true;
                break;
            }
            vertices.push(line.trim().to_string());
        }
        if !edges_seen {
            return Err(Error::Parse("expected 'edges:' marker".into()));
        }
        if vertices.len() != n {
            return Err(Error::Parse(alloc::format!(
                "header declares {n} vertices, found {}",
                vertices.len()
            )));
        }
        let mut graph = Hypergraph::new(t, vertices)?;
        for line in lines {
            let labels: Vec<&str> = line.split_whitespace().collect();
            graph.add_edge_labels(&labels)?;
        }
        Ok(graph)
    }
}

/// A total map between vertex label sets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexMap {
    map: BTreeMap<String, String>,
}

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, src: impl Into<String>, dst: impl Into<String>) {
        self.map.insert(src.into(), dst.into());
    }

    pub fn get(&self, src: &str) -> Option<&str> {
        self.map.get(src).map(String::as_str)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (src, dst) in &self.map {
            out.push_str(&alloc::format!("{src} -> {dst}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut map = VertexMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (src, dst) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(alloc::format!("expected 'src -> dst': {line:?}")))?;
            map.insert(src.trim(), dst.trim());
        }
        Ok(map)
    }
}

/// Whether `f` is a hypergraph homomorphism G -> H: total on V(G), sending
/// every edge to an edge of H of the same size. Errors on missing vertices;
/// an edge that collapses or misses E(H) makes the answer false.
pub fn is_homomorphism(g: &Hypergraph, h: &Hypergraph, f: &VertexMap) -> Result<bool> {
    let mut images = Vec::with_capacity(g.vertices().len());
    for v in g.vertices() {
        let dst = f
            .get(v)
            .ok_or_else(|| Error::NotAHomomorphism(alloc::format!("map undefined on {v}")))?;
        let idx = h
            .vertex_index(dst)
            .ok_or_else(|| Error::UnknownLabel(dst.to_string()))?;
        images.push(idx);
    }
    if g.t() != h.t() {
        return Ok(false);
    }
    for edge in g.edges() {
        let mut image: Vec<usize> = edge.iter().map(|&v| images[v]).collect();
        image.sort_unstable();
        image.dedup();
        if image.len() != g.t() || !h.has_edge_indices(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The hypergraph whose edges are the left-justified t-subsets of the m x s label grid;
/// vertices are labeled `(i,j)` in row-major order.
pub fn left_justified_hypergraph(t: u32, m: u32, s: u32) -> Result<Hypergraph> {
    let mut vertices = Vec::with_capacity((m * s) as usize);
    for i in 1..=m {
        for j in 1..=s {
            vertices.push(ooa::render_label((i, j)));
        }
    }
    let mut graph = Hypergraph::new(t as usize, vertices)?;
    for set in ooa::left_justified_sets(m, s, t) {
        let idxs: Vec<usize> = set
            .iter()
            .map(|&(i, j)| ((i - 1) * s + (j - 1)) as usize)
            .collect();
        graph.add_edge_indices(&idxs)?;
    }
    Ok(graph)
}

/// The complete t-uniform hypergraph on n vertices labeled 1..n.
pub fn complete_hypergraph(n: u32, t: u32) -> Result<Hypergraph> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut graph = Hypergraph::new(t as usize, vertices)?;
    ooa::for_each_combination(n as usize, t as usize, |idxs| {
        graph.add_edge_indices(idxs).expect("valid combination");
    });
    Ok(graph)
}

/// Label for a coordinate vector: codes joined by ':'.
pub fn vector_label(coords: &[Elem]) -> String {
    let parts: Vec<String> = coords.iter().map(|e| e.0.to_string()).collect();
    parts.join(":")
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
pub fn canonical_point(field: &FieldSpec, coords: &[Elem]) -> Vec<Elem> {
    let lead = coords.iter().find(|c| !c.is_zero()).copied();
    match lead {
        Some(l) => {
            let inv = field.inv(l).expect("nonzero");
            coords.iter().map(|&c| field.mul(c, inv)).collect()
        }
        None => coords.to_vec(),
    }
}

fn all_vectors(field: &FieldSpec, dim: usize) -> Vec<Vec<Elem>> {
    let q = field.q();
    let count = crate::field::checked_pow(q, dim as u32).expect("desk scale");
    (0..count)
        .map(|code| {
            let mut v = code;
            (0..dim)
                .map(|_| {
                    let d = Elem(v % q);
                    v /= q;
                    d
                })
                .collect()
        })
        .collect()
}

/// The linear independence hypergraph on all q^d vectors of F_q^d: edges are
/// the d-subsets that are linearly independent over F_q.
pub fn linear_independence_hypergraph(field: &FieldSpec, d: u32) -> Result<Hypergraph> {
    let vectors = all_vectors(field, d as usize);
    let labels: Vec<String> = vectors.iter().map(|v| vector_label(v)).collect();
    let mut graph = Hypergraph::new(d as usize, labels)?;
    ooa::for_each_combination(vectors.len(), d as usize, |idxs| {
        let rows: Vec<Vec<Elem>> = idxs.iter().map(|&i| vectors[i].clone()).collect();
        if matrix_rank(field, rows) == d as usize {
            graph.add_edge_indices(idxs).expect("valid combination");
        }
    });
    Ok(graph)
}

/// Canonical representatives of the points of the projective space of
/// dimension d over F_q, ascending by packed coordinate code.
pub fn projective_points(field: &FieldSpec, d: u32) -> Vec<Vec<Elem>> {
    all_vectors(field, d as usize + 1)
        .into_iter()
        .filter(|v| {
            // canonical: first nonzero coordinate is 1
            v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.0 == 1)
        })
        .collect()
}

/// The projective independence hypergraph on the points of PG(d, q): edges
/// are the (d+1)-subsets of points not contained in any hyperplane, i.e.
/// whose representatives are linearly independent.
pub fn projective_independence_hypergraph(field: &FieldSpec, d: u32) -> Result<Hypergraph> {
    let points = projective_points(field, d);
    let labels: Vec<String> = points.iter().map(|v| vector_label(v)).collect();
    let uniformity = d as usize + 1;
    let mut graph = Hypergraph::new(uniformity, labels)?;
    ooa::for_each_combination(points.len(), uniformity, |idxs| {
        let rows: Vec<Vec<Elem>> = idxs.iter().map(|&i| points[i].clone()).collect();
        if matrix_rank(field, rows) == uniformity {
            graph.add_edge_indices(idxs).expect("valid combination");
        }
    });
    Ok(graph)
}

/// The injective map sending each projective point of PG(d, q) to its
/// canonical representative vector in F_q^{d+1}, as a vertex map
/// PI_{d,q} -> LI_{d+1,q}.
pub fn point_to_vector_map(field: &FieldSpec, d: u32) -> VertexMap {
    let mut map = VertexMap::new();
    for p in projective_points(field, d) {
        let label = vector_label(&p);
        map.insert(label.clone(), label);
    }
    map
}

/// An array with columns labeled by hypergraph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoaArray {
    labels: Vec<String>,
    rows: Vec<Vec<u64>>,
    v: u64,
}

impl VoaArray {
    pub fn new(labels: Vec<String>, rows: Vec<Vec<u64>>, v: u64) -> Result<Self> {
        if v < 2 {
            return Err(Error::BadArray("alphabet must have v >= 2".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::BadArray("duplicate column labels".into()));
        }
        for row in &rows {
            if row.len() != labels.len() {
                return Err(Error::BadArray("row width mismatch".into()));
            }
            if row.iter().any(|&x| x >= v) {
                return Err(Error::BadArray("symbol out of range".into()));
            }
        }
        Ok(VoaArray { labels, rows, v })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn column_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl OoaArray {
    /// View with columns labeled by the `(i,j)` strings, for use as a VOA
    /// over [`left_justified_hypergraph`].
    pub fn to_voa(&self) -> VoaArray {
        let labels = self
            .labels()
            .iter()
            .map(|&l| ooa::render_label(l))
            .collect();
        VoaArray::new(labels, self.rows().to_vec(), self.v()).expect("already validated")
    }
}

/// Verifies lambda-coverage of every edge of `g` in the array.
pub fn verify_voa(array: &VoaArray, g: &Hypergraph, lambda: u64) -> Result<CoverageReport> {
    let vt = crate::field::checked_pow(array.v(), g.t() as u32)
        .ok_or_else(|| Error::BadArray("v^t overflow".into()))?;
    if array.rows().len() as u64 != lambda * vt {
        return Err(Error::BadArray("rows != lambda v^t".into()));
    }
    let col_of: Vec<usize> = g
        .vertices()
        .iter()
        .map(|v| {
            array
                .column_index(v)
                .ok_or_else(|| Error::UnknownLabel(v.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counter = Vec::new();
    let mut covered = 0u64;
    let mut failures = Vec::new();
    let mut total = 0u64;
    for edge in g.edges() {
        total += 1;
        let idxs: Vec<usize> = edge.iter().map(|&vi| col_of[vi]).collect();
        if covered_on_indices(array.rows(), &idxs, array.v(), lambda, &mut counter) {
            covered += 1;
        } else {
            let labels: Vec<&str> = edge.iter().map(|&vi| g.vertices()[vi].as_str()).collect();
            failures.push(labels.join(" "));
        }
    }
    Ok(CoverageReport {
        covered,
        total,
        failures,
    })
}

/// Pulls a VOA over H back along a homomorphism f: G -> H: the column for a
/// vertex g of G is the H-column f(g). The result is a VOA over G.
pub fn pull_back(
    voa: &VoaArray,
    g: &Hypergraph,
    h: &Hypergraph,
    f: &VertexMap,
) -> Result<VoaArray> {
    if !is_homomorphism(g, h, f)? {
        return Err(Error::NotAHomomorphism(
            "vertex map does not preserve edges".into(),
        ));
    }
    let cols: Vec<usize> = g
        .vertices()
        .iter()
        .map(|v| {
            let dst = f.get(v).expect("totality checked");
            voa.column_index(dst)
                .ok_or_else(|| Error::UnknownLabel(dst.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Vec<u64>> = voa
        .rows()
        .iter()
        .map(|row| cols.iter().map(|&c| row[c]).collect())
        .collect();
    VoaArray::new(g.vertices().to_vec(), rows, voa.v())
}

/// The subinterval array of `spec` as a VOA over PI_{t-1,q}: column c is
/// labeled by the projective point of alpha^c.
pub fn subinterval_voa(spec: &LfsrSpec) -> Result<VoaArray> {
    let m = spec.subinterval_array();
    let base = spec.base();
    let labels: Vec<String> = (0..m.k() as u64)
        .map(|c| vector_label(&canonical_point(base, &spec.alpha_power_coords(c))))
        .collect();
    VoaArray::new(labels, m.rows_codes(), base.q())
}

/// The vertex map realizing H_{t,q+1,t} -> PI_{t-1,q}: label (i,j) goes to
/// the projective point of alpha^c for its assigned subinterval column c.
pub fn runs_projective_map(spec: &LfsrSpec) -> Result<VertexMap> {
    let cmap = construct::runs_column_map(spec)?;
    let base = spec.base();
    let mut map = VertexMap::new();
    for &(label, col) in cmap.entries() {
        let point = canonical_point(base, &spec.alpha_power_coords(col as u64));
        map.insert(ooa::render_label(label), vector_label(&point));
    }
    Ok(map)
}
