//! Undirected simple graphs over dense integer vertex ids.
//!
//! Vertex ids are stable: removing a vertex leaves a dead slot behind so that
//! ids in witnesses, charge functions and subgraphs keep referring to the same
//! vertex of the original input.

use std::fmt;

use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is out of range or has been removed")]
    NoSuchVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    live: usize,
    edges: usize,
}

impl SimpleGraph {
    /// Edgeless graph on vertices `0..n`.
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            alive: vec![true; n],
            live: n,
            edges: 0,
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::ParallelEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edges += 1;
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let pos = self.adj[u].binary_search(&v).unwrap();
        self.adj[u].remove(pos);
        let pos = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(pos);
        self.edges -= 1;
        true
    }

    /// Removes `u` and its incident edges. The id stays reserved.
    pub fn remove_vertex(&mut self, u: VertexId) -> Result<(), GraphError> {
        self.check(u)?;
        let nbrs = std::mem::take(&mut self.adj[u]);
        for &w in &nbrs {
            let pos = self.adj[w].binary_search(&u).unwrap();
            self.adj[w].remove(pos);
        }
        self.edges -= nbrs.len();
        self.alive[u] = false;
        self.live -= 1;
        Ok(())
    }

    /// Subgraph induced by the live vertices with `keep[v]` set.
    pub fn induced(&self, keep: &[bool]) -> SimpleGraph {
        let mut adj = vec![Vec::new(); self.capacity()];
        let mut alive = vec![false; self.capacity()];
        let mut live = 0;
        let mut twice_edges = 0;
        for v in self.vertices() {
            if !keep[v] {
                continue;
            }
            alive[v] = true;
            live += 1;
            adj[v] = self.adj[v].iter().copied().filter(|&w| keep[w]).collect();
            twice_edges += adj[v].len();
        }
        SimpleGraph {
            adj,
            alive,
            live,
            edges: twice_edges / 2,
        }
    }

    /// Upper bound on vertex ids (dead slots included).
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    /// Number of live vertices.
    pub fn vertex_count(&self) -> usize {
        self.live
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adj.len()).filter(move |&v| self.alive[v])
    }

    /// Sorted neighbor list. Empty for dead or out-of-range ids.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adj.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    /// True when every id in `0..capacity` is live.
    pub fn is_dense(&self) -> bool {
        self.live == self.adj.len()
    }

    /// Connected components of the live vertices, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.capacity()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.live <= 1 || self.components().len() == 1
    }

    /// Articulation points (cut vertices), sorted.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        let n = self.capacity();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in self.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex(v))
        }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph {{ n: {}, edges: [", self.live)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "] }}")
    }
}
