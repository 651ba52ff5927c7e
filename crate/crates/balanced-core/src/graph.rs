//! Graph-side verification of the word-commutation criterion.
//!
//! A connected graph with a chosen base vertex is partitioned into layers
//! by distance from the base. The raising matrix `R` sends a vertex to the
//! sum of its neighbors one layer up, the lowering matrix `L` one layer
//! down; for bipartite graphs the adjacency matrix satisfies `A = R + L`
//! exactly. Substituting these matrices for the letters of a balanced word
//! and asking whether all such products commute is the matrix-level
//! criterion this module checks, primarily on hypercubes.
//!
//! Everything here is exact integer arithmetic; see [`crate::matrix`].

use crate::gens::enumerate_primes;
use crate::matrix::Matrix;
use crate::prime::PrimeKind;
use crate::word::{balanced_words, Letter, Word};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest hypercube dimension accepted by [`hypercube`].
pub const MAX_HYPERCUBE_DIM: usize = 12;

/// Errors from graph construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Hypercube dimension outside `1..=12`.
    DimensionOutOfRange,
    /// An edge list line does not consist of two vertex tokens.
    MalformedLine {
        /// 1-based line number.
        line: usize,
    },
    /// An edge joins a vertex to itself.
    SelfLoop {
        /// 1-based line number.
        line: usize,
    },
    /// The same edge (in either orientation) appears twice.
    DuplicateEdge {
        /// 1-based line number.
        line: usize,
    },
    /// The base vertex does not occur in the edge list.
    UnknownBaseVertex,
    /// Some vertex is unreachable from the base.
    Disconnected {
        /// Label of an unreached vertex.
        unreached: String,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DimensionOutOfRange => {
                write!(
                    f,
                    "hypercube dimension must be between 1 and {MAX_HYPERCUBE_DIM}"
                )
            }
            GraphError::MalformedLine { line } => {
                write!(f, "line {line}: expected two vertex tokens")
            }
            GraphError::SelfLoop { line } => write!(f, "line {line}: self-loop"),
            GraphError::DuplicateEdge { line } => write!(f, "line {line}: duplicate edge"),
            GraphError::UnknownBaseVertex => f.write_str("base vertex not present in edge list"),
            GraphError::Disconnected { unreached } => {
                write!(
                    f,
                    "graph is not connected: vertex {unreached} unreachable from base"
                )
            }
        }
    }
}

/// Witness that a graph is not distance-regular: two vertex pairs at the
/// same distance whose neighbor counts differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDistanceRegular {
    /// Distance of both witness pairs.
    pub distance: usize,
    /// First vertex pair.
    pub pair_a: (String, String),
    /// Second vertex pair, with counts differing from the first.
    pub pair_b: (String, String),
}

impl fmt::Display for NotDistanceRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not distance-regular: pairs ({}, {}) and ({}, {}) at distance {} have differing neighbor counts",
            self.pair_a.0, self.pair_a.1, self.pair_b.0, self.pair_b.1, self.distance
        )
    }
}

/// A connected, loop-free, simple graph with a base vertex and its
/// distance partition.
///
/// Vertices are indexed in layer order (distance from the base), and within
/// a layer in input order; the base is always index 0. All matrices derived
/// from the graph use this order for rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphModel {
    labels: Vec<String>,
    adj: Vec<bool>,
    n: usize,
    layers: Vec<Vec<usize>>,
    layer_of: Vec<usize>,
}

impl GraphModel {
    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The vertex labels in matrix order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of vertex `v`.
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of the base vertex (always 0).
    pub fn base(&self) -> usize {
        0
    }

    /// Maximal distance from the base vertex.
    pub fn diameter(&self) -> usize {
        self.layers.len() - 1
    }

    /// The distance partition: `layers()[i]` holds the vertices at distance
    /// exactly `i` from the base.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Distance of vertex `v` from the base.
    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    /// Whether `u` and `v` are adjacent.
    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// The adjacency matrix in vertex order.
    pub fn adjacency_matrix(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.are_adjacent(u, v) {
                    a.set(u, v, 1);
                }
            }
        }
        a
    }

    fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|u| (0..self.n).filter(|&v| self.are_adjacent(u, v)).collect())
            .collect()
    }

    /// All-pairs distances, row-major.
    fn distances(&self) -> Vec<u16> {
        let nbrs = self.neighbor_lists();
        let mut dist = vec![u16::MAX; self.n * self.n];
        let mut queue = alloc::collections::VecDeque::new();
        for s in 0..self.n {
            let row = &mut dist[s * self.n..(s + 1) * self.n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &nbrs[u] {
                    if row[v] == u16::MAX {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        dist
    }
}

/// Assembles a model from labels, an edge list over label indices, and the
/// base index, re-indexing vertices into layer order.
fn build_model(
    labels: Vec<String>,
    edges: &[(usize, usize)],
    base: usize,
) -> Result<GraphModel, GraphError> {
    let n = labels.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut dist: Vec<Option<usize>> = vec![None; n];
    dist[base] = Some(0);
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(base);
    while let Some(u) = queue.pop_front() {
        for &v in &nbrs[u] {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].expect("visited") + 1);
                queue.push_back(v);
            }
        }
    }
    if let Some(unreached) = (0..n).find(|&v| dist[v].is_none()) {
        return Err(GraphError::Disconnected {
            unreached: labels[unreached].clone(),
        });
    }
    let diameter = (0..n)
        .map(|v| dist[v].expect("connected"))
        .max()
        .unwrap_or(0);
    // layer order, within a layer the original input order
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for layer in 0..=diameter {
        order.extend((0..n).filter(|&v| dist[v] == Some(layer)));
    }
    let mut new_index = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in edges {
        let (u, v) = (new_index[u], new_index[v]);
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let relabeled: Vec<String> = order.iter().map(|&old| labels[old].clone()).collect();
    let layer_of: Vec<usize> = order
        .iter()
        .map(|&old| dist[old].expect("connected"))
        .collect();
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); diameter + 1];
    for (v, &layer) in layer_of.iter().enumerate() {
        layers[layer].push(v);
    }
    Ok(GraphModel {
        labels: relabeled,
        adj,
        n,
        layers,
        layer_of,
    })
}

/// The hypercube `Q_d`: vertices are the binary strings of length `d`, two
/// being adjacent when they differ in exactly one position. The base is the
/// all-zeros vertex and the diameter is `d`.
pub fn hypercube(d: usize) -> Result<GraphModel, GraphError> {
    if d == 0 || d > MAX_HYPERCUBE_DIM {
        return Err(GraphError::DimensionOutOfRange);
    }
    let n = 1usize << d;
    let labels: Vec<String> = (0..n).map(|v| format!("{v:0width$b}", width = d)).collect();
    let mut edges = Vec::with_capacity(n * d / 2);
    for v in 0..n {
        for bit in 0..d {
            let u = v ^ (1 << bit);
            if u > v {
                edges.push((v, u));
            }
        }
    }
    let model = build_model(labels, &edges, 0)?;
    debug_assert_eq!(model.diameter(), d);
    Ok(model)
}

/// Parses an edge list (one `u v` pair of vertex tokens per line, blank
/// lines ignored) and builds the model with BFS layers from `base`. A line
/// with a single token declares an isolated vertex, which is the only way
/// to express the one-vertex graph.
pub fn load_graph(edge_list: &str, base: &str) -> Result<GraphModel, GraphError> {
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (lineno, raw) in edge_list.lines().enumerate() {
        let line = lineno + 1;
        let mut tokens = raw.split_whitespace();
        let mut intern = |t: &str, labels: &mut Vec<String>| -> usize {
            *index.entry(t.to_string()).or_insert_with(|| {
                labels.push(t.to_string());
                labels.len() - 1
            })
        };
        let Some(a) = tokens.next() else {
            continue;
        };
        let Some(b) = tokens.next() else {
            intern(a, &mut labels);
            continue;
        };
        if tokens.next().is_some() {
            return Err(GraphError::MalformedLine { line });
        }
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        if u == v {
            return Err(GraphError::SelfLoop { line });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphError::DuplicateEdge { line });
        }
        edges.push((u, v));
    }
    let base = *index.get(base).ok_or(GraphError::UnknownBaseVertex)?;
    build_model(labels, &edges, base)
}

/// The table of intersection numbers `p[h][i][j]` of a distance-regular
/// graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    diameter: usize,
    p: Vec<Vec<Vec<u32>>>,
}

impl IntersectionTable {
    /// The graph diameter; indices run over `0..=diameter()`.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// The number of vertices at distance `i` from one end and `j` from the
    /// other end of any pair at distance `h`.
    pub fn get(&self, h: usize, i: usize, j: usize) -> u32 {
        self.p[h][i][j]
    }

    /// The full table as nested vectors `[h][i][j]`.
    pub fn entries(&self) -> &[Vec<Vec<u32>>] {
        &self.p
    }
}

/// Computes the intersection numbers, or reports a witness that the graph
/// is not distance-regular.
///
/// Distance-regularity is decided by its neighbor-count formulation over
/// all ordered vertex pairs: the counts of neighbors of `y` one step closer
/// to and one step farther from `x` must depend only on the distance
/// `h = ∂(x, y)`. The full table is then read off by bucketing distances
/// against one reference pair per `h`.
pub fn intersection_numbers(g: &GraphModel) -> Result<IntersectionTable, NotDistanceRegular> {
    struct Reference {
        closer: u32,
        farther: u32,
        pair: (usize, usize),
    }

    let n = g.vertex_count();
    let dist = g.distances();
    let d = dist.iter().map(|&v| v as usize).max().unwrap_or(0);
    let nbrs = g.neighbor_lists();
    // closer/farther neighbor counts per distance, with the pair that set them
    let mut reference: Vec<Option<Reference>> = (0..=d).map(|_| None).collect();
    for x in 0..n {
        for y in 0..n {
            let h = dist[x * n + y];
            let mut closer = 0u32;
            let mut farther = 0u32;
            for &z in &nbrs[y] {
                let dz = dist[x * n + z];
                if dz + 1 == h {
                    closer += 1;
                } else if dz == h + 1 {
                    farther += 1;
                }
            }
            match &reference[h as usize] {
                None => {
                    reference[h as usize] = Some(Reference {
                        closer,
                        farther,
                        pair: (x, y),
                    })
                }
                Some(seen) => {
                    if (seen.closer, seen.farther) != (closer, farther) {
                        return Err(NotDistanceRegular {
                            distance: h as usize,
                            pair_a: (
                                g.label(seen.pair.0).to_string(),
                                g.label(seen.pair.1).to_string(),
                            ),
                            pair_b: (g.label(x).to_string(), g.label(y).to_string()),
                        });
                    }
                }
            }
        }
    }
    // distance-regular: counts for any (i, j) are pair-independent, so one
    // reference pair per h determines the whole table
    let mut p = vec![vec![vec![0u32; d + 1]; d + 1]; d + 1];
    for (h, slot) in reference.iter().enumerate() {
        let (x, y) = slot
            .as_ref()
            .expect("every distance up to the diameter occurs")
            .pair;
        for z in 0..n {
            let i = dist[x * n + z] as usize;
            let j = dist[y * n + z] as usize;
            p[h][i][j] += 1;
        }
    }
    Ok(IntersectionTable { diameter: d, p })
}

/// The raising/lowering decomposition of the adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingLowering {
    /// Sends a vertex to the sum of its neighbors one layer up.
    pub raising: Matrix,
    /// Sends a vertex to the sum of its neighbors one layer down.
    pub lowering: Matrix,
    /// The adjacency matrix.
    pub adjacency: Matrix,
    /// `A - R - L`: the within-layer adjacency, zero exactly for bipartite
    /// graphs.
    pub residue: Matrix,
}

impl RaisingLowering {
    /// Whether `A = R + L` holds exactly.
    pub fn is_bipartite(&self) -> bool {
        self.residue.is_zero()
    }
}

/// Splits the adjacency matrix into raising, lowering, and within-layer
/// parts with respect to the base vertex. Matrices act on column vectors:
/// column `v` of the raising matrix lists the neighbors of `v` one layer
/// up.
pub fn raising_lowering(g: &GraphModel) -> RaisingLowering {
    let n = g.vertex_count();
    let adjacency = g.adjacency_matrix();
    let mut raising = Matrix::zeros(n);
    let mut lowering = Matrix::zeros(n);
    for u in 0..n {
        for v in 0..n {
            if !g.are_adjacent(u, v) {
                continue;
            }
            if g.layer_of(u) == g.layer_of(v) + 1 {
                raising.set(u, v, 1);
            } else if g.layer_of(u) + 1 == g.layer_of(v) {
                lowering.set(u, v, 1);
            }
        }
    }
    let residue = adjacency.sub(&raising).sub(&lowering);
    RaisingLowering {
        raising,
        lowering,
        adjacency,
        residue,
    }
}

/// The diagonal 0/1 projection matrices, one per layer; their sum is the
/// identity.
pub fn projections(g: &GraphModel) -> Vec<Matrix> {
    let n = g.vertex_count();
    g.layers()
        .iter()
        .map(|layer| {
            let mut e = Matrix::zeros(n);
            for &v in layer {
                e.set(v, v, 1);
            }
            e
        })
        .collect()
}

/// Evaluates a word as a product of the letter matrices. The first letter
/// acts on the standard module first: for the word `RL`, column `v` of the
/// result is `L(Rv)`. The empty word evaluates to the identity.
pub fn word_matrix(w: &Word, lowering: &Matrix, raising: &Matrix) -> Matrix {
    let mut m = Matrix::identity(lowering.size());
    for &a in w.letters() {
        m = match a {
            Letter::L => lowering.mul(&m),
            Letter::R => raising.mul(&m),
        };
    }
    m
}

/// Outcome of a commutation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    /// Number of unordered word pairs compared.
    pub pairs_checked: usize,
    /// Pairs `(F, G)` with `word_matrix(FG) != word_matrix(GF)`, sorted.
    pub violations: Vec<(Word, Word)>,
}

impl CommutationReport {
    /// True when no violating pair was found.
    pub fn all_commute(&self) -> bool {
        self.violations.is_empty()
    }
}

fn commutation_over(g: &GraphModel, words: Vec<Word>) -> CommutationReport {
    let rl = raising_lowering(g);
    let mats: Vec<Matrix> = words
        .iter()
        .map(|w| word_matrix(w, &rl.lowering, &rl.raising))
        .collect();
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            pairs_checked += 1;
            if mats[i].mul(&mats[j]) != mats[j].mul(&mats[i]) {
                violations.push((words[i].clone(), words[j].clone()));
            }
        }
    }
    violations.sort();
    CommutationReport {
        pairs_checked,
        violations,
    }
}

/// Checks that the balanced words in `R` and `L` of length at most
/// `max_word_len` commute pairwise as matrices.
///
/// It suffices to compare prime pairs: every balanced commutator lies in
/// the ideal generated by the prime commutators of no greater length, and
/// word evaluation respects that decomposition. The exhaustive variant
/// [`check_thin_commutation_exhaustive`] exists as the cross-check.
pub fn check_thin_commutation(g: &GraphModel, max_word_len: usize) -> CommutationReport {
    let mut primes = enumerate_primes(PrimeKind::Upper, max_word_len);
    primes.extend(enumerate_primes(PrimeKind::Lower, max_word_len));
    primes.sort();
    commutation_over(g, primes)
}

/// Like [`check_thin_commutation`] but compares every pair of nonempty
/// balanced words up to the length bound.
pub fn check_thin_commutation_exhaustive(g: &GraphModel, max_word_len: usize) -> CommutationReport {
    let mut words = Vec::new();
    for len in (2..=max_word_len).step_by(2) {
        words.extend(balanced_words(len));
    }
    words.sort();
    commutation_over(g, words)
}
