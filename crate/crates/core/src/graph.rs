//! Simple undirected graphs on dense vertex ids `0..n`, edge-list ingestion,
//! triangle enumeration, maximal cliques and a few generators.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use log::debug;
use rand::Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::tuples;

/// A simple undirected graph. Vertices are `0..n`; each vertex also carries
/// the integer label it had in the input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Vec<usize>,
}

/// A vertex triple in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple(pub [usize; 3]);

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let t = tuples::sort3(a, b, c);
        assert!(
            t[0] < t[1] && t[1] < t[2],
            "triple needs three distinct vertices"
        );
        Triple(t)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn pairs(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }
}

impl Graph {
    /// Graph on `0..n` with the given edges. Duplicates collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::config("graph needs at least one vertex"));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
            if u >= n || v >= n {
                return Err(Error::config(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        Graph {
            n,
            adj: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
            edge_count: 0,
            labels: (0..n).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for (i, j) in tuples::pairs(n) {
            g.add_edge(i, j);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Graph::empty(n);
        for (i, j) in tuples::pairs(n) {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Graph whose edge set is given by the bits of `mask`, bit `k` standing
    /// for the pair with [`tuples::pair_index`] `k`. Enumerating masks
    /// `0..2^C(n,2)` lists every labelled graph on `n` vertices.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        for (i, j) in tuples::pairs(n) {
            if mask >> tuples::pair_index(i, j) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u * self.n + v] {
            return false;
        }
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.neighbors[u].sort_unstable();
        self.neighbors[v].sort_unstable();
        self.edge_count += 1;
        true
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_triangle(&self, a: usize, b: usize, c: usize) -> bool {
        self.has_edge(a, b) && self.has_edge(a, c) && self.has_edge(b, c)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Edge density `|E| / C(n,2)`; zero for a single vertex.
    pub fn density(&self) -> f64 {
        let pairs = tuples::choose2(self.n);
        if pairs == 0 {
            0.0
        } else {
            self.edge_count as f64 / pairs as f64
        }
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn vertex_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn neighbor_set(&self, u: usize) -> BitSet {
        let mut s = BitSet::new(self.n);
        for &v in &self.neighbors[u] {
            s.insert(v);
        }
        s
    }

    /// Edge list in the input format, using the original labels.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct EdgeListOptions {
    /// Ids in the file start at 1.
    pub one_based: bool,
    /// Vertex count override; must be at least max id + 1.
    pub n: Option<usize>,
}

/// Parse a whitespace-separated edge list. `#` starts a comment line and
/// blank lines are skipped.
pub fn parse_edge_list(text: &str, opts: &EdgeListOptions) -> Result<Graph> {
    let base = usize::from(opts.one_based);
    let mut edges = Vec::new();
    let mut max_id = None::<usize>;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let (Some(a), Some(b), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected two vertex ids, got {line:?}"),
            });
        };
        let id = |tok: &str| -> Result<usize> {
            let raw: usize = tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("not a non-negative integer: {tok:?}"),
            })?;
            raw.checked_sub(base).ok_or_else(|| Error::Parse {
                line: lineno,
                msg: "vertex id 0 in a one-based file".into(),
            })
        };
        let (u, v) = (id(a)?, id(b)?);
        if u == v {
            return Err(Error::SelfLoop {
                line: lineno,
                vertex: u + base,
            });
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u, v));
    }
    let n_min = max_id.map_or(0, |m| m + 1);
    let n = match opts.n {
        Some(n) if n < n_min => {
            return Err(Error::config(format!(
                "--n {n} is below max id + 1 = {n_min}"
            )))
        }
        Some(n) => n,
        None => n_min,
    };
    if n == 0 {
        return Err(Error::Parse {
            line: 0,
            msg: "edge list has no edges".into(),
        });
    }
    let mut g = Graph::empty(n);
    let mut dups = 0;
    for (u, v) in edges {
        if !g.add_edge(u, v) {
            dups += 1;
        }
    }
    if dups > 0 {
        debug!("collapsed {dups} duplicate edge(s)");
    }
    Ok(g.with_labels((0..n).map(|v| v + base).collect()))
}

/// All triangles, each in ascending vertex order, sorted lexicographically.
pub fn enumerate_triangles(g: &Graph) -> Vec<Triple> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        let nu = g.neighbors(u);
        for (i, &v) in nu.iter().enumerate() {
            if v <= u {
                continue;
            }
            for &w in &nu[i + 1..] {
                if g.has_edge(v, w) {
                    out.push(Triple([u, v, w]));
                }
            }
        }
    }
    out
}

/// Turán graph `T(n, parts)`: complete multipartite with part sizes as equal
/// as possible. Parts are contiguous id ranges, larger parts first.
pub fn turan_graph(n: usize, parts: usize) -> Graph {
    assert!(parts >= 1 && n >= parts, "need n >= parts >= 1");
    let part_of = turan_parts(n, parts);
    let mut g = Graph::empty(n);
    for (i, j) in tuples::pairs(n) {
        if part_of[i] != part_of[j] {
            g.add_edge(i, j);
        }
    }
    g
}

fn turan_parts(n: usize, parts: usize) -> Vec<usize> {
    let (q, r) = (n / parts, n % parts);
    let mut out = Vec::with_capacity(n);
    for p in 0..parts {
        let size = q + usize::from(p < r);
        out.extend(std::iter::repeat_n(p, size));
    }
    out
}

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting). Each clique is
/// sorted; the list is sorted lexicographically. Isolated vertices come back
/// as singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let nbrs: Vec<BitSet> = (0..g.n()).map(|u| g.neighbor_set(u)).collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(
        &nbrs,
        &mut r,
        BitSet::full(g.n()),
        BitSet::new(g.n()),
        &mut out,
    );
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    nbrs: &[BitSet],
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(&nbrs[u]))
        .expect("p is non-empty");
    let mut candidates = p.clone();
    candidates.difference_with(&nbrs[pivot]);
    for v in candidates.iter() {
        r.push(v);
        bron_kerbosch(
            nbrs,
            r,
            p.intersection(&nbrs[v]),
            x.intersection(&nbrs[v]),
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Cliques as a set, for order-insensitive comparisons.
pub fn clique_set(cliques: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    cliques.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn parse(text: &str) -> Result<Graph> {
        parse_edge_list(text, &EdgeListOptions::default())
    }

    #[test]
    fn parse_triangle() {
        let g = parse("0 1\n1 2\n0 2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
    }

    #[test]
    fn parse_comments_blanks_duplicates() {
        let g = parse("# header\n\n0 1\n1 0\n  0 1  \n2 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
    }

    #[test]
    fn parse_self_loop_is_error() {
        assert!(matches!(
            parse("0 0"),
            Err(Error::SelfLoop { line: 1, vertex: 0 })
        ));
    }

    #[test]
    fn parse_malformed_reports_line() {
        match parse("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("0 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("-1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(parse("# nothing\n").is_err());
    }

    #[test]
    fn parse_one_based_and_override() {
        let opts = EdgeListOptions {
            one_based: true,
            n: Some(5),
        };
        let g = parse_edge_list("1 2\n2 3\n", &opts).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.label(0), 1);
        assert_eq!(g.vertex_of_label(3), Some(2));
        assert_eq!(g.degree(4), 0);
        let bad = EdgeListOptions {
            one_based: true,
            n: None,
        };
        assert!(parse_edge_list("0 1", &bad).is_err());
        let small = EdgeListOptions {
            one_based: false,
            n: Some(2),
        };
        assert!(matches!(
            parse_edge_list("0 4", &small),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn triangles_small() {
        assert_eq!(
            enumerate_triangles(&Graph::complete(3)),
            vec![Triple([0, 1, 2])]
        );
        assert!(enumerate_triangles(&Graph::path(3)).is_empty());
        assert_eq!(enumerate_triangles(&Graph::complete(5)).len(), 10);
    }

    #[test]
    fn turan_examples() {
        let c4 = turan_graph(4, 2);
        assert_eq!(c4.edge_count(), 4);
        assert!(enumerate_triangles(&c4).is_empty());
        assert!(c4.is_clique(&[0, 2]) && !c4.has_edge(0, 1));
        let k333 = turan_graph(9, 3);
        assert_eq!(k333.edge_count(), 27);
        assert_eq!(enumerate_triangles(&k333).len(), 27);
        assert_eq!(turan_graph(6, 3).edge_count(), 12);
    }

    fn brute_triangles(g: &Graph) -> Vec<Triple> {
        tuples::triples(g.n())
            .filter(|&[a, b, c]| g.is_triangle(a, b, c))
            .map(Triple)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    #[test]
    fn turan_triangle_count_is_product_of_parts() {
        for n in 3..=15usize {
            let expected = (n / 3) * ((n + 1) / 3) * n.div_ceil(3);
            let g = turan_graph(n, 3);
            assert_eq!(enumerate_triangles(&g).len(), expected, "n={n}");
            assert_eq!(brute_triangles(&g).len(), expected, "n={n}");
        }
    }

    #[test]
    fn cliques_small() {
        assert_eq!(maximal_cliques(&Graph::complete(3)), vec![vec![0, 1, 2]]);
        assert_eq!(
            maximal_cliques(&Graph::cycle(4)),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        let t = maximal_cliques(&turan_graph(9, 3));
        assert_eq!(t.len(), 27);
        assert!(t.iter().all(|c| c.len() == 3));
    }

    /// Maximal cliques by scanning every vertex subset.
    fn brute_maximal_cliques(g: &Graph) -> BTreeSet<Vec<usize>> {
        let n = g.n();
        let is_clique = |m: u32| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            g.is_clique(&vs)
        };
        (1u32..1 << n)
            .filter(|&m| is_clique(m) && (0..n).all(|v| m >> v & 1 == 1 || !is_clique(m | 1 << v)))
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn cliques_match_subset_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12 {
            for &p in &[0.2, 0.5, 0.8] {
                let g = Graph::random(n, p, &mut rng);
                let bk = maximal_cliques(&g);
                assert_eq!(bk.len(), clique_set(&bk).len(), "duplicates");
                assert_eq!(clique_set(&bk), brute_maximal_cliques(&g), "n={n} p={p}");
            }
        }
        let t = clique_set(&maximal_cliques(&turan_graph(9, 3)));
        assert_eq!(t, brute_maximal_cliques(&turan_graph(9, 3)));
    }

    proptest! {
        #[test]
        fn edge_list_roundtrip(n in 2usize..12, mask in any::<u64>(), one_based in any::<bool>()) {
            let g = Graph::from_pair_mask(n, mask & ((1u64 << tuples::choose2(n)) - 1));
            let g = g.with_labels((0..n).map(|v| v + usize::from(one_based)).collect());
            let opts = EdgeListOptions { one_based, n: Some(n) };
            let back = parse_edge_list(&g.to_edge_list(), &opts).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
