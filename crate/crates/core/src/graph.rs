//! Directed word-overlap graphs: the de Bruijn graph on all length-`n`
//! words and its induced subgraph on pattern vertices, plus line graphs,
//! chord tests, acyclicity and strong-connectivity checks, and the
//! exhaustive search for the longest chordless loop-free simple path.
//!
//! Vertices are kept in lexicographic order and adjacency lists sorted, so
//! every algorithm on a graph is deterministic.

use serde::{Deserialize, Serialize};

use crate::words::{enumerate_patterns, Params, Word};
use crate::{Error, Limits, Result};

/// How a graph's vertex set was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphKind {
    /// All words of length `n` over `[m]`.
    #[serde(rename = "debruijn")]
    DeBruijn,
    /// All patterns of length `n`; arcs induced from the de Bruijn graph.
    #[serde(rename = "pattern")]
    PatternOverlap,
}

/// A directed graph on words of a fixed length, with an arc `u -> v`
/// exactly when `u = aW` and `v = Wb` for some word `W` and letters `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordGraph {
    kind: GraphKind,
    order: usize,
    alphabet: usize,
    vertices: Vec<Word>,
    out: Vec<Vec<usize>>,
}

impl WordGraph {
    /// The full de Bruijn graph on `[m]^n`. Loops sit at the constant
    /// words.
    pub fn de_bruijn(n: usize, m: usize, limits: &Limits) -> Result<Self> {
        let p = Params::new(n, m)?;
        let count = m
            .checked_pow(n as u32)
            .filter(|&c| c <= limits.max_vertices)
            .ok_or(Error::VertexCapExceeded {
                required: usize::MAX,
                cap: limits.max_vertices,
            })?;
        let mut vertices = Vec::with_capacity(count);
        let mut letters = vec![1u32; n];
        loop {
            vertices.push(Word::new(letters.clone()).expect("letters are positive"));
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(Self::from_vertex_set(GraphKind::DeBruijn, p, vertices));
                }
                pos -= 1;
                if letters[pos] < m as u32 {
                    letters[pos] += 1;
                    for a in letters[pos + 1..].iter_mut() {
                        *a = 1;
                    }
                    break;
                }
            }
        }
    }

    /// The pattern-overlap graph: the de Bruijn subgraph induced on the
    /// patterns of length `n` (over the effective alphabet `min(n, m)`).
    pub fn pattern_overlap(n: usize, m: usize, limits: &Limits) -> Result<Self> {
        let p = Params::new(n, m)?;
        let vertices = enumerate_patterns(p, limits)?;
        Ok(Self::from_vertex_set(GraphKind::PatternOverlap, p, vertices))
    }

    /// Builds adjacency for a sorted vertex set by the overlap rule.
    fn from_vertex_set(kind: GraphKind, p: Params, vertices: Vec<Word>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut out = vec![Vec::new(); vertices.len()];
        let top = match kind {
            GraphKind::DeBruijn => p.m as u32,
            GraphKind::PatternOverlap => p.effective_m() as u32,
        };
        for (i, u) in vertices.iter().enumerate() {
            let mut target = Vec::with_capacity(p.n);
            target.extend_from_slice(&u.letters()[1..]);
            target.push(0);
            for b in 1..=top {
                *target.last_mut().expect("n >= 1") = b;
                let v = Word::new(target.clone()).expect("letters are positive");
                if let Ok(j) = vertices.binary_search(&v) {
                    out[i].push(j);
                }
            }
        }
        WordGraph {
            kind,
            order: p.n,
            alphabet: p.m,
            vertices,
            out,
        }
    }

    /// The line graph: one vertex per arc, labeled by the length-`n+1`
    /// word the arc spells; arcs join consecutive arcs.
    pub fn line_graph(&self) -> WordGraph {
        // arc (u -> v) spells u plus the last letter of v
        let mut arc_words: Vec<(Word, usize)> = Vec::with_capacity(self.arc_count());
        let mut arc_heads: Vec<usize> = Vec::new();
        for (u, outs) in self.out.iter().enumerate() {
            for &v in outs {
                let mut letters = self.vertices[u].letters().to_vec();
                letters.push(*self.vertices[v].letters().last().expect("n >= 1"));
                arc_words.push((Word::new(letters).expect("letters are positive"), arc_heads.len()));
                arc_heads.push(v);
            }
        }
        arc_words.sort();
        debug_assert!(arc_words.windows(2).all(|w| w[0].0 < w[1].0));

        // arcs starting at each vertex of self, as new (sorted) indices
        let mut new_index_of_arc = vec![0usize; arc_heads.len()];
        for (new_idx, (_, old_idx)) in arc_words.iter().enumerate() {
            new_index_of_arc[*old_idx] = new_idx;
        }
        let mut arcs_from_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        let mut old_idx = 0;
        for (u, outs) in self.out.iter().enumerate() {
            for _ in outs {
                arcs_from_vertex[u].push(new_index_of_arc[old_idx]);
                old_idx += 1;
            }
        }
        for list in arcs_from_vertex.iter_mut() {
            list.sort_unstable();
        }

        let mut out = Vec::with_capacity(arc_words.len());
        for (_, old_idx) in &arc_words {
            out.push(arcs_from_vertex[arc_heads[*old_idx]].clone());
        }
        WordGraph {
            kind: self.kind,
            order: self.order + 1,
            alphabet: self.alphabet,
            vertices: arc_words.into_iter().map(|(w, _)| w).collect(),
            out,
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn word(&self, v: usize) -> &Word {
        &self.vertices[v]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// All arcs in deterministic (from, to) order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for (_, v) in self.arcs() {
            deg[v] += 1;
        }
        deg
    }

    /// Whether the graph is acyclic after deleting the masked vertices
    /// (and their incident arcs). Loops count as cycles.
    pub fn is_acyclic(&self, removed: &[bool]) -> bool {
        assert_eq!(removed.len(), self.vertices.len());
        let mut indeg = vec![0usize; self.vertices.len()];
        let mut alive = 0usize;
        for v in 0..self.vertices.len() {
            if removed[v] {
                continue;
            }
            alive += 1;
            for &u in &self.out[v] {
                if !removed[u] {
                    indeg[u] += 1;
                }
            }
        }
        let mut queue: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| !removed[v] && indeg[v] == 0)
            .collect();
        let mut seen = 0usize;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &u in &self.out[v] {
                if !removed[u] {
                    indeg[u] -= 1;
                    if indeg[u] == 0 {
                        queue.push(u);
                    }
                }
            }
        }
        seen == alive
    }

    /// Whether every ordered vertex pair is joined by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertices.len();
        if n <= 1 {
            return true;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let ins = if forward { None } else { Some(self.reverse_adjacency()) };
            while let Some(v) = stack.pop() {
                let neighbors: &[usize] = if forward {
                    &self.out[v]
                } else {
                    &ins.as_ref().expect("built above")[v]
                };
                for &u in neighbors {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    fn reverse_adjacency(&self) -> Vec<Vec<usize>> {
        let mut ins = vec![Vec::new(); self.vertices.len()];
        for (u, v) in self.arcs() {
            ins[v].push(u);
        }
        ins
    }

    /// Graphviz rendering: one node per word label, one edge per arc.
    pub fn to_dot(&self) -> String {
        let name = match self.kind {
            GraphKind::DeBruijn => "debruijn",
            GraphKind::PatternOverlap => "pattern",
        };
        let mut s = format!("digraph {}_{}_{} {{\n", name, self.order, self.alphabet);
        for w in &self.vertices {
            s.push_str(&format!("  \"{}\";\n", w.to_text(self.alphabet)));
        }
        for (u, v) in self.arcs() {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.vertices[u].to_text(self.alphabet),
                self.vertices[v].to_text(self.alphabet)
            ));
        }
        s.push_str("}\n");
        s
    }

    /// JSON interchange form with stable lexicographic vertex order.
    pub fn to_json(&self) -> String {
        let record = GraphJson {
            n: self.order,
            m: self.alphabet,
            kind: self.kind,
            vertices: self
                .vertices
                .iter()
                .map(|w| w.to_text(self.alphabet))
                .collect(),
            arcs: self.arcs().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&record).expect("graph record serializes")
    }

    /// Parses the JSON interchange form, validating word lengths, letter
    /// ranges, vertex order, and the overlap rule on every arc.
    pub fn from_json(text: &str) -> Result<Self> {
        let record: GraphJson = serde_json::from_str(text)?;
        if record.n == 0 || record.m == 0 {
            return Err(Error::InvalidParams("graph needs n >= 1 and m >= 1".into()));
        }
        let mut vertices = Vec::with_capacity(record.vertices.len());
        for s in &record.vertices {
            let w = Word::parse(s, record.m)?;
            if w.len() != record.n {
                return Err(Error::LengthMismatch {
                    expected: record.n,
                    found: w.len(),
                });
            }
            vertices.push(w);
        }
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(
                "vertices must be strictly sorted".into(),
            ));
        }
        let mut out = vec![Vec::new(); vertices.len()];
        for &[u, v] in &record.arcs {
            if u >= vertices.len() || v >= vertices.len() {
                return Err(Error::InvalidParams(format!(
                    "arc [{u}, {v}] out of range"
                )));
            }
            if vertices[u].letters()[1..] != vertices[v].letters()[..record.n - 1] {
                return Err(Error::InvalidParams(format!(
                    "arc [{u}, {v}] violates the overlap rule"
                )));
            }
            out[u].push(v);
        }
        for list in out.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Ok(WordGraph {
            kind: record.kind,
            order: record.n,
            alphabet: record.m,
            vertices,
            out,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    m: usize,
    kind: GraphKind,
    vertices: Vec<String>,
    arcs: Vec<[usize; 2]>,
}

/// A simple directed path, as vertex indices into a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphPath {
    pub vertices: Vec<usize>,
}

impl GraphPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Whether `arc` is a chord of `path`: both endpoints on the path and the
/// arc runs from a later vertex back to an earlier-or-equal one, closing a
/// circuit with the path segment. A loop at a path vertex is a chord; a
/// forward skip is not.
pub fn is_chord(path: &GraphPath, arc: (usize, usize)) -> bool {
    let pos_of = |x: usize| path.vertices.iter().position(|&v| v == x);
    match (pos_of(arc.0), pos_of(arc.1)) {
        (Some(from), Some(to)) => from >= to,
        _ => false,
    }
}

/// Whether `path` avoids loop vertices and no arc of `g` is a chord of it.
pub fn verify_chordless_path(g: &WordGraph, path: &GraphPath) -> bool {
    if path.vertices.iter().any(|&v| g.has_loop(v)) {
        return false;
    }
    g.arcs().all(|arc| !is_chord(path, arc))
}

/// Result of the exhaustive chordless-path search. When the expansion
/// budget runs out, `exact` is false and the path is a lower bound only.
#[derive(Clone, Debug)]
pub struct ChordlessSearch {
    pub path: GraphPath,
    pub exact: bool,
}

/// Longest simple path that avoids loop vertices and admits no chord,
/// found by depth-first search over simple paths with incremental chord
/// pruning. Ties break to the lexicographically least vertex sequence.
pub fn longest_chordless_path(g: &WordGraph, limits: &Limits) -> ChordlessSearch {
    struct Search<'a> {
        g: &'a WordGraph,
        on_path: Vec<bool>,
        path: Vec<usize>,
        best: Vec<usize>,
        expansions: u64,
        budget: u64,
        exhausted: bool,
    }

    impl Search<'_> {
        // a vertex may extend the path only if none of its out-arcs
        // points back into the new path (that arc would be a chord)
        fn can_extend(&self, v: usize) -> bool {
            !self.on_path[v]
                && !self.g.has_loop(v)
                && self.g.out_neighbors(v).iter().all(|&u| !self.on_path[u] && u != v)
        }

        fn dfs(&mut self, v: usize) {
            if self.exhausted {
                return;
            }
            self.expansions += 1;
            if self.expansions > self.budget {
                self.exhausted = true;
                return;
            }
            self.path.push(v);
            self.on_path[v] = true;
            if self.path.len() > self.best.len() {
                self.best = self.path.clone();
            }
            for &u in self.g.out_neighbors(v) {
                if self.can_extend(u) {
                    self.dfs(u);
                }
            }
            self.on_path[v] = false;
            self.path.pop();
        }
    }

    let mut search = Search {
        g,
        on_path: vec![false; g.vertex_count()],
        path: Vec::new(),
        best: Vec::new(),
        expansions: 0,
        budget: limits.max_expansions,
        exhausted: false,
    };
    for start in 0..g.vertex_count() {
        if search.can_extend(start) || (!g.has_loop(start) && !search.on_path[start]) {
            search.dfs(start);
        }
        if search.exhausted {
            break;
        }
    }
    let result = ChordlessSearch {
        path: GraphPath {
            vertices: search.best,
        },
        exact: !search.exhausted,
    };
    debug_assert!(verify_chordless_path(g, &result.path));
    result
}
