//! Plane graphs: a simple graph together with a combinatorial embedding.
//!
//! The embedding is a rotation system giving, for each vertex, the clockwise
//! cyclic order of its neighbors. Faces are traced by the rule "arrive at `v`
//! from `u`, leave towards the neighbor that follows `u` in the rotation of
//! `v`". Under this rule a face lies to the left of each of its darts, so in a
//! straight-line drawing inner faces are traced counterclockwise.
//!
//! Every connected component with at least one edge carries one designated
//! outer dart; the face to its left is the outer face of that component.
//! Isolated vertices lie on the outer face by definition.

mod chords;
mod cycles;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph, VertexId};

pub use chords::{find_chords, SeparatingPath};
pub(crate) use chords::orient as orient_sides;
pub use cycles::{cycle_interior, first_short_cycle_with_interior, ShortCycle};

/// A directed edge `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Dart {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Dart { tail, head }
    }

    pub fn twin(self) -> Dart {
        Dart::new(self.head, self.tail)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected {expected} rotations, got {got}")]
    RotationCount { expected: usize, got: usize },
    #[error("rotation of vertex {0} is not a permutation of its neighbors")]
    BadRotation(VertexId),
    #[error("outer dart {0:?} is not an edge")]
    OuterNotAnEdge(Dart),
    #[error("component containing vertex {0} has no outer dart")]
    MissingOuter(VertexId),
    #[error("component containing vertex {0} has more than one outer dart")]
    DuplicateOuter(VertexId),
    #[error("outer walk {given:?} does not match the traced face {traced:?}")]
    OuterWalkMismatch {
        given: Vec<VertexId>,
        traced: Vec<VertexId>,
    },
    #[error(
        "Euler check fails on component of vertex {vertex}: n={n} m={m} faces={faces}"
    )]
    Euler {
        vertex: VertexId,
        n: usize,
        m: usize,
        faces: usize,
    },
    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(VertexId, VertexId),
    #[error("{0:?} is not an inner face walk containing both endpoints")]
    NotCofacial(Vec<VertexId>),
    #[error("invalid separating path: {0}")]
    InvalidPath(String),
}

/// Vertices and edges of the outer face boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    /// `on[v]` is true iff `v` is incident to the outer face.
    pub on: Vec<bool>,
    /// Boundary edges as `(u, v)` with `u < v`.
    pub edges: BTreeSet<(VertexId, VertexId)>,
    /// One closed walk per component, starting at its outer dart; isolated
    /// vertices give walks of length one.
    pub walks: Vec<Vec<VertexId>>,
}

impl Boundary {
    pub fn vertices(&self) -> Vec<VertexId> {
        (0..self.on.len()).filter(|&v| self.on[v]).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: SimpleGraph,
    rot: Vec<Vec<VertexId>>,
    // rank[v][k]: position in rot[v] of graph.neighbors(v)[k]
    rank: Vec<Vec<u32>>,
    outer: Vec<Dart>,
}

impl std::fmt::Debug for PlaneGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PlaneGraph")
            .field("graph", &self.graph)
            .field("outer", &self.outer)
            .finish()
    }
}

impl PlaneGraph {
    /// Builds and validates an embedding on vertices `0..rotations.len()`.
    pub fn new(rotations: Vec<Vec<VertexId>>, outer: Vec<Dart>) -> Result<Self, EmbedError> {
        let n = rotations.len();
        let mut graph = SimpleGraph::new(n);
        for (v, rv) in rotations.iter().enumerate() {
            for &w in rv {
                if w >= n {
                    return Err(GraphError::NoSuchVertex(w).into());
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v).into());
                }
                if v < w {
                    graph.add_edge(v, w)?;
                }
            }
        }
        let pg = PlaneGraph::from_parts(graph, rotations, outer)?;
        pg.validate()?;
        Ok(pg)
    }

    /// Like [`PlaneGraph::new`], with the outer face of each component given
    /// as a closed vertex walk (without repeating the first vertex).
    pub fn from_outer_walks(
        rotations: Vec<Vec<VertexId>>,
        walks: &[Vec<VertexId>],
    ) -> Result<Self, EmbedError> {
        let mut outer = Vec::new();
        for w in walks {
            if w.len() >= 2 {
                outer.push(Dart::new(w[0], w[1]));
            }
        }
        let pg = PlaneGraph::new(rotations, outer)?;
        let n = pg.capacity();
        let mut listed = vec![false; n];
        for w in walks {
            match w.len() {
                0 => {}
                1 => {
                    let v = w[0];
                    if v >= n {
                        return Err(GraphError::NoSuchVertex(v).into());
                    }
                    if pg.graph.degree(v) != 0 {
                        return Err(EmbedError::OuterWalkMismatch {
                            given: w.clone(),
                            traced: pg.face_walk(Dart::new(v, pg.rot[v][0])),
                        });
                    }
                    listed[v] = true;
                }
                _ => {
                    let traced = pg.face_walk(Dart::new(w[0], w[1]));
                    if &traced != w {
                        return Err(EmbedError::OuterWalkMismatch {
                            given: w.clone(),
                            traced,
                        });
                    }
                }
            }
        }
        for v in pg.graph.vertices() {
            if pg.graph.degree(v) == 0 && !listed[v] {
                return Err(EmbedError::MissingOuter(v));
            }
        }
        Ok(pg)
    }

    /// Assembles a plane graph without running [`PlaneGraph::validate`].
    /// Rotations must still be permutations of the adjacency lists.
    pub(crate) fn from_parts(
        graph: SimpleGraph,
        rot: Vec<Vec<VertexId>>,
        outer: Vec<Dart>,
    ) -> Result<Self, EmbedError> {
        if rot.len() != graph.capacity() {
            return Err(EmbedError::RotationCount {
                expected: graph.capacity(),
                got: rot.len(),
            });
        }
        let mut rank = Vec::with_capacity(rot.len());
        for (v, rv) in rot.iter().enumerate() {
            let nb = graph.neighbors(v);
            if nb.len() != rv.len() {
                return Err(EmbedError::BadRotation(v));
            }
            let mut r = vec![u32::MAX; nb.len()];
            for (i, &w) in rv.iter().enumerate() {
                match nb.binary_search(&w) {
                    Ok(k) if r[k] == u32::MAX => r[k] = i as u32,
                    _ => return Err(EmbedError::BadRotation(v)),
                }
            }
            rank.push(r);
        }
        Ok(PlaneGraph {
            graph,
            rot,
            rank,
            outer,
        })
    }

    /// Checks every embedding invariant: rotations are permutations of the
    /// adjacency, each component with edges has exactly one outer dart, and
    /// each component satisfies Euler's formula.
    pub fn validate(&self) -> Result<(), EmbedError> {
        let n = self.capacity();
        for v in 0..n {
            if !self.graph.contains(v) && !self.rot[v].is_empty() {
                return Err(EmbedError::BadRotation(v));
            }
        }
        let comp = self.component_ids();
        let comps = self.graph.components();
        let mut has_outer = vec![false; comps.len()];
        for &d in &self.outer {
            if !self.graph.has_edge(d.tail, d.head) {
                return Err(EmbedError::OuterNotAnEdge(d));
            }
            let c = comp[d.tail];
            if has_outer[c] {
                return Err(EmbedError::DuplicateOuter(d.tail));
            }
            has_outer[c] = true;
        }
        let mut faces = vec![0usize; comps.len()];
        let mut edges = vec![0usize; comps.len()];
        let ids = self.face_ids();
        for v in self.graph.vertices() {
            edges[comp[v]] += self.graph.degree(v);
        }
        for f in 0..ids.count {
            let d = ids.start[f];
            faces[comp[d.tail]] += 1;
        }
        for (c, members) in comps.iter().enumerate() {
            let nv = members.len();
            let m = edges[c] / 2;
            if m == 0 {
                continue;
            }
            if !has_outer[c] {
                return Err(EmbedError::MissingOuter(members[0]));
            }
            if nv + faces[c] != m + 2 {
                return Err(EmbedError::Euler {
                    vertex: members[0],
                    n: nv,
                    m,
                    faces: faces[c],
                });
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn capacity(&self) -> usize {
        self.graph.capacity()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Clockwise rotation at `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }

    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer
    }

    /// Position of neighbor `u` in the rotation of `v`.
    pub fn rot_index(&self, v: VertexId, u: VertexId) -> Option<usize> {
        let k = self.graph.neighbors(v).binary_search(&u).ok()?;
        Some(self.rank[v][k] as usize)
    }

    /// The neighbor following `u` clockwise around `v`.
    pub fn succ(&self, v: VertexId, u: VertexId) -> VertexId {
        let i = self.rot_index(v, u).expect("succ: not a neighbor");
        let r = &self.rot[v];
        r[(i + 1) % r.len()]
    }

    /// The neighbor preceding `u` clockwise around `v`.
    pub fn pred(&self, v: VertexId, u: VertexId) -> VertexId {
        let i = self.rot_index(v, u).expect("pred: not a neighbor");
        let r = &self.rot[v];
        r[(i + r.len() - 1) % r.len()]
    }

    pub fn next_dart(&self, d: Dart) -> Dart {
        Dart::new(d.head, self.succ(d.head, d.tail))
    }

    /// Tails of the darts of the face to the left of `start`, in order.
    pub fn face_walk(&self, start: Dart) -> Vec<VertexId> {
        let mut walk = vec![start.tail];
        let mut d = self.next_dart(start);
        while d != start {
            walk.push(d.tail);
            d = self.next_dart(d);
        }
        walk
    }

    /// All faces as closed walks. The outer walks come first, in the order of
    /// [`PlaneGraph::outer_darts`], followed by the inner faces in dart order.
    /// Isolated vertices are not listed (they have no darts).
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        let ids = self.face_ids();
        let mut out: Vec<Vec<VertexId>> =
            self.outer.iter().map(|&d| self.face_walk(d)).collect();
        let outer_ids: BTreeSet<usize> = self.outer.iter().map(|&d| ids.of(self, d)).collect();
        for f in 0..ids.count {
            if !outer_ids.contains(&f) {
                out.push(self.face_walk(ids.start[f]));
            }
        }
        out
    }

    /// Inner faces as dart-started walks.
    pub fn inner_faces(&self) -> Vec<Vec<VertexId>> {
        let ids = self.face_ids();
        let outer_ids: BTreeSet<usize> = self.outer.iter().map(|&d| ids.of(self, d)).collect();
        (0..ids.count)
            .filter(|f| !outer_ids.contains(f))
            .map(|f| self.face_walk(ids.start[f]))
            .collect()
    }

    pub fn outer_walks(&self) -> Vec<Vec<VertexId>> {
        let mut walks: Vec<Vec<VertexId>> =
            self.outer.iter().map(|&d| self.face_walk(d)).collect();
        for v in self.graph.vertices() {
            if self.graph.degree(v) == 0 {
                walks.push(vec![v]);
            }
        }
        walks
    }

    pub fn boundary(&self) -> Boundary {
        let mut on = vec![false; self.capacity()];
        let mut edges = BTreeSet::new();
        let walks = self.outer_walks();
        for w in &walks {
            for (i, &v) in w.iter().enumerate() {
                on[v] = true;
                if w.len() > 1 {
                    let x = w[(i + 1) % w.len()];
                    edges.insert((v.min(x), v.max(x)));
                }
            }
        }
        Boundary { on, edges, walks }
    }

    pub fn is_two_connected(&self) -> bool {
        self.vertex_count() >= 3 && self.graph.is_connected() && self.graph.cut_vertices().is_empty()
    }

    /// Sub-embedding induced by the vertices with `keep[v]` set.
    ///
    /// The outer face of each new component is the face that contains the old
    /// outer face of the component it came from.
    pub fn induced(&self, keep: &[bool]) -> PlaneGraph {
        let graph = self.graph.induced(keep);
        let rot: Vec<Vec<VertexId>> = (0..self.capacity())
            .map(|v| {
                if graph.contains(v) {
                    self.rot[v].iter().copied().filter(|&w| keep[w]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let comps = graph.components();
        let mut comp = vec![usize::MAX; self.capacity()];
        for (c, members) in comps.iter().enumerate() {
            for &v in members {
                comp[v] = c;
            }
        }
        let mut outer: Vec<Option<Dart>> = vec![None; comps.len()];
        for &od in &self.outer {
            let start = od;
            let mut d = start;
            loop {
                if keep[d.tail] && keep[d.head] {
                    let c = comp[d.tail];
                    if outer[c].is_none() {
                        outer[c] = Some(d);
                    }
                }
                d = self.next_dart(d);
                if d == start {
                    break;
                }
            }
        }
        let mut old_ids: Option<(FaceIds, Vec<usize>)> = None;
        for (c, members) in comps.iter().enumerate() {
            if outer[c].is_some() || members.len() < 2 {
                continue;
            }
            let (ids, old_comp) = old_ids.get_or_insert_with(|| (self.face_ids(), self.component_ids()));
            outer[c] = Some(self.outer_dart_by_dual_search(ids, old_comp, &comp, c, members[0]));
        }
        let outer: Vec<Dart> = outer.into_iter().flatten().collect();
        let pg = PlaneGraph::from_parts(graph, rot, outer).expect("induced rotation");
        debug_assert_eq!(pg.validate(), Ok(()));
        pg
    }

    /// Walks the faces of the old embedding, starting from the old outer face
    /// and crossing only edges outside the new component `c`, until a face
    /// with a dart of `c` is reached. That dart bounds the new outer face.
    fn outer_dart_by_dual_search(
        &self,
        ids: &FaceIds,
        old_comp: &[usize],
        comp: &[usize],
        c: usize,
        member: VertexId,
    ) -> Dart {
        let start = *self
            .outer
            .iter()
            .find(|d| old_comp[d.tail] == old_comp[member])
            .expect("old component has an outer dart");
        let mut seen = vec![false; ids.count];
        let f0 = ids.of(self, start);
        seen[f0] = true;
        let mut queue = std::collections::VecDeque::from([f0]);
        while let Some(f) = queue.pop_front() {
            let s = ids.start[f];
            let mut d = s;
            loop {
                let inside = comp[d.tail] == c && comp[d.head] == c;
                if inside {
                    return d;
                }
                let g = ids.of(self, d.twin());
                if !seen[g] {
                    seen[g] = true;
                    queue.push_back(g);
                }
                d = self.next_dart(d);
                if d == s {
                    break;
                }
            }
        }
        unreachable!("dual search exhausted without reaching the component")
    }

    pub fn delete_vertex(&self, u: VertexId) -> Result<PlaneGraph, EmbedError> {
        if !self.graph.contains(u) {
            return Err(GraphError::NoSuchVertex(u).into());
        }
        let mut keep: Vec<bool> = (0..self.capacity()).map(|v| self.graph.contains(v)).collect();
        keep[u] = false;
        Ok(self.induced(&keep))
    }

    pub fn delete_vertices(&self, us: &[VertexId]) -> PlaneGraph {
        let mut keep: Vec<bool> = (0..self.capacity()).map(|v| self.graph.contains(v)).collect();
        for &u in us {
            keep[u] = false;
        }
        self.induced(&keep)
    }

    /// Joins `u` and `w` by an edge drawn inside the inner face `face`.
    ///
    /// `face` is a walk as returned by [`PlaneGraph::faces`] (any rotation of
    /// it); the first occurrence of each endpoint is used.
    pub fn add_edge_in_face(
        &self,
        u: VertexId,
        w: VertexId,
        face: &[VertexId],
    ) -> Result<PlaneGraph, EmbedError> {
        if self.graph.has_edge(u, w) {
            return Err(EmbedError::AlreadyAdjacent(u, w));
        }
        let k = face.len();
        let pu = face.iter().position(|&x| x == u);
        let pw = face.iter().position(|&x| x == w);
        let (Some(pu), Some(pw)) = (pu, pw) else {
            return Err(EmbedError::NotCofacial(face.to_vec()));
        };
        if u == w || k < 3 {
            return Err(EmbedError::NotCofacial(face.to_vec()));
        }
        // the walk must be a genuine inner face of this embedding
        let d0 = Dart::new(face[0], face[1 % k]);
        if !self.graph.has_edge(d0.tail, d0.head) || self.face_walk(d0) != face {
            return Err(EmbedError::NotCofacial(face.to_vec()));
        }
        let ids = self.face_ids();
        let fid = ids.of(self, d0);
        if self.outer.iter().any(|&d| ids.of(self, d) == fid) {
            return Err(EmbedError::NotCofacial(face.to_vec()));
        }
        let a = face[(pu + k - 1) % k];
        let c = face[(pw + k - 1) % k];
        let mut graph = self.graph.clone();
        graph.add_edge(u, w)?;
        let mut rot = self.rot.clone();
        let ia = self.rot_index(u, a).unwrap();
        rot[u].insert(ia + 1, w);
        let ic = self.rot_index(w, c).unwrap();
        rot[w].insert(ic + 1, u);
        let pg = PlaneGraph::from_parts(graph, rot, self.outer.clone())?;
        debug_assert_eq!(pg.validate(), Ok(()));
        Ok(pg)
    }

    /// Splits along a separating path into the two sides, each with the
    /// inherited embedding.
    pub fn split(&self, p: &SeparatingPath) -> Result<(PlaneGraph, PlaneGraph), EmbedError> {
        chords::check_separation(self, &p.path, &p.side1, &p.side2)
            .map_err(EmbedError::InvalidPath)?;
        let mut k1 = vec![false; self.capacity()];
        let mut k2 = vec![false; self.capacity()];
        for &v in &p.side1 {
            k1[v] = true;
        }
        for &v in &p.side2 {
            k2[v] = true;
        }
        Ok((self.induced(&k1), self.induced(&k2)))
    }

    pub(crate) fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.capacity()];
        for (c, members) in self.graph.components().iter().enumerate() {
            for &v in members {
                comp[v] = c;
            }
        }
        comp
    }

    pub(crate) fn face_ids(&self) -> FaceIds {
        let n = self.capacity();
        let mut offset = vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + self.rot[v].len();
        }
        let total = offset[n];
        let mut id = vec![usize::MAX; total];
        let mut start = Vec::new();
        for v in 0..n {
            for i in 0..self.rot[v].len() {
                if id[offset[v] + i] != usize::MAX {
                    continue;
                }
                let f = start.len();
                let s = Dart::new(v, self.rot[v][i]);
                start.push(s);
                let mut d = s;
                loop {
                    let j = self.rot_index(d.tail, d.head).unwrap();
                    id[offset[d.tail] + j] = f;
                    d = self.next_dart(d);
                    if d == s {
                        break;
                    }
                }
            }
        }
        FaceIds {
            offset,
            id,
            count: start.len(),
            start,
        }
    }
}

/// Face index of every dart.
pub(crate) struct FaceIds {
    offset: Vec<usize>,
    id: Vec<usize>,
    pub count: usize,
    pub start: Vec<Dart>,
}

impl FaceIds {
    pub fn of(&self, g: &PlaneGraph, d: Dart) -> usize {
        let j = g.rot_index(d.tail, d.head).expect("dart is an edge");
        self.id[self.offset[d.tail] + j]
    }
}
