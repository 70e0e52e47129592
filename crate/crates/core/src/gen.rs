//! Seeded graph generators.
//!
//! Every random family draws from [`SplitMix64`], so a `(family, seed)` pair
//! names one graph independent of platform. Planar families come with an
//! embedding.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{SimpleGraph, VertexId};
use crate::plane::{Dart, PlaneGraph};

/// SplitMix64.
///
/// State update `s += 0x9E3779B97F4A7C15`; output `z = s`, then
/// `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9`,
/// `z = (z ^ (z >> 27)) * 0x94D049BB133111EB`, `z ^ (z >> 31)`, all
/// arithmetic wrapping mod 2^64.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` by multiply-shift: `(next * n) >> 64`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Fisher-Yates, swapping `i` with `below(i + 1)` for `i` from the top.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("{family}: {msg}")]
    BadParams { family: &'static str, msg: String },
    #[error("random_regular({n}, {d}): no simple pairing after {tries} tries")]
    Retries { n: usize, d: usize, tries: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

fn bad(family: &'static str, msg: impl Into<String>) -> GenError {
    GenError::BadParams {
        family,
        msg: msg.into(),
    }
}

/// A generator family with its size parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Cycle { n: usize },
    Path { n: usize },
    Clique { n: usize },
    /// `n` rim vertices around one hub.
    Wheel { n: usize },
    /// `rows x cols` grid with one diagonal in every square.
    Grid { rows: usize, cols: usize },
    Icosahedron,
    Petersen,
    Apollonian { n: usize },
    /// Stacked triangulation scrambled by random edge flips.
    Triangulation { n: usize },
    Gnp { n: usize, p: f64 },
    Regular { n: usize, d: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Clique { .. } => "clique",
            Family::Wheel { .. } => "wheel",
            Family::Grid { .. } => "grid",
            Family::Icosahedron => "icosahedron",
            Family::Petersen => "petersen",
            Family::Apollonian { .. } => "apollonian",
            Family::Triangulation { .. } => "triangulation",
            Family::Gnp { .. } => "gnp",
            Family::Regular { .. } => "regular",
        }
    }

    /// Parses a family name and its positional parameters, e.g.
    /// `("grid", ["10", "10"])`.
    pub fn parse(name: &str, params: &[&str]) -> Result<Family, GenError> {
        let fam = |n: &str| -> &'static str {
            match n {
                "cycle" => "cycle",
                "path" => "path",
                "clique" => "clique",
                "wheel" => "wheel",
                "grid" => "grid",
                "icosahedron" => "icosahedron",
                "petersen" => "petersen",
                "apollonian" => "apollonian",
                "triangulation" => "triangulation",
                "gnp" => "gnp",
                "regular" => "regular",
                _ => "",
            }
        };
        let f = fam(name);
        if f.is_empty() {
            return Err(GenError::UnknownFamily(name.to_string()));
        }
        let want = match f {
            "icosahedron" | "petersen" => 0,
            "grid" | "gnp" | "regular" => 2,
            _ => 1,
        };
        if params.len() != want {
            return Err(bad(f, format!("expected {want} parameters, got {}", params.len())));
        }
        let int = |k: usize| -> Result<usize, GenError> {
            params[k]
                .parse()
                .map_err(|_| bad(f, format!("{:?} is not a nonnegative integer", params[k])))
        };
        Ok(match f {
            "cycle" => Family::Cycle { n: int(0)? },
            "path" => Family::Path { n: int(0)? },
            "clique" => Family::Clique { n: int(0)? },
            "wheel" => Family::Wheel { n: int(0)? },
            "grid" => Family::Grid {
                rows: int(0)?,
                cols: int(1)?,
            },
            "icosahedron" => Family::Icosahedron,
            "petersen" => Family::Petersen,
            "apollonian" => Family::Apollonian { n: int(0)? },
            "triangulation" => Family::Triangulation { n: int(0)? },
            "gnp" => Family::Gnp {
                n: int(0)?,
                p: params[1]
                    .parse()
                    .ok()
                    .filter(|p: &f64| (0.0..=1.0).contains(p))
                    .ok_or_else(|| bad(f, format!("{:?} is not a probability", params[1])))?,
            },
            _ => Family::Regular {
                n: int(0)?,
                d: int(1)?,
            },
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={}", self.name())?;
        match self {
            Family::Cycle { n }
            | Family::Path { n }
            | Family::Clique { n }
            | Family::Wheel { n }
            | Family::Apollonian { n }
            | Family::Triangulation { n } => write!(f, " n={n}"),
            Family::Grid { rows, cols } => write!(f, " rows={rows} cols={cols}"),
            Family::Gnp { n, p } => write!(f, " n={n} p={p}"),
            Family::Regular { n, d } => write!(f, " n={n} d={d}"),
            Family::Icosahedron | Family::Petersen => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    /// `# family=... seed=...`, the header line of generated files.
    pub fn header(&self) -> String {
        format!("# {} seed={}", self.family, self.seed)
    }
}

#[derive(Clone, Debug)]
pub enum Generated {
    Plane(PlaneGraph),
    Simple(SimpleGraph),
}

impl Generated {
    pub fn graph(&self) -> &SimpleGraph {
        match self {
            Generated::Plane(p) => p.graph(),
            Generated::Simple(g) => g,
        }
    }

    pub fn plane(&self) -> Option<&PlaneGraph> {
        match self {
            Generated::Plane(p) => Some(p),
            Generated::Simple(_) => None,
        }
    }
}

pub fn gen(spec: &GenSpec) -> Result<Generated, GenError> {
    let seed = spec.seed;
    Ok(match spec.family {
        Family::Cycle { n } => Generated::Plane(cycle(n)?),
        Family::Path { n } => Generated::Plane(path(n)?),
        Family::Clique { n } => Generated::Simple(clique(n)),
        Family::Wheel { n } => Generated::Plane(wheel(n)?),
        Family::Grid { rows, cols } => Generated::Plane(triangulated_grid(rows, cols)?),
        Family::Icosahedron => Generated::Plane(icosahedron()),
        Family::Petersen => Generated::Simple(petersen()),
        Family::Apollonian { n } => Generated::Plane(apollonian(n, seed)?),
        Family::Triangulation { n } => Generated::Plane(random_triangulation(n, seed)?),
        Family::Gnp { n, p } => Generated::Simple(gnp(n, p, seed)),
        Family::Regular { n, d } => Generated::Simple(random_regular(n, d, seed)?),
    })
}

/// Cycle `0, 1, ..., n-1` drawn counterclockwise.
pub fn cycle(n: usize) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(bad("cycle", "needs n >= 3"));
    }
    let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
    Ok(PlaneGraph::new(rot, vec![Dart::new(0, n - 1)]).expect("cycle embedding"))
}

pub fn path(n: usize) -> Result<PlaneGraph, GenError> {
    if n == 0 {
        return Err(bad("path", "needs n >= 1"));
    }
    let rot: Vec<Vec<VertexId>> = (0..n)
        .map(|i| {
            let mut r = Vec::new();
            if i > 0 {
                r.push(i - 1);
            }
            if i + 1 < n {
                r.push(i + 1);
            }
            r
        })
        .collect();
    let outer = if n > 1 { vec![Dart::new(0, 1)] } else { vec![] };
    Ok(PlaneGraph::new(rot, outer).expect("path embedding"))
}

pub fn clique(n: usize) -> SimpleGraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    SimpleGraph::from_edges(n, edges).expect("clique edges")
}

/// Rim `0..n` counterclockwise, hub `n`.
pub fn wheel(n: usize) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(bad("wheel", "needs n >= 3 rim vertices"));
    }
    let mut rot: Vec<Vec<VertexId>> = (0..n)
        .map(|i| vec![(i + 1) % n, (i + n - 1) % n, n])
        .collect();
    rot.push((0..n).rev().collect());
    Ok(PlaneGraph::new(rot, vec![Dart::new(0, n - 1)]).expect("wheel embedding"))
}

/// Vertex `(i, j)` is `i * cols + j`; squares get the diagonal
/// `(i, j)-(i+1, j+1)`.
pub fn triangulated_grid(rows: usize, cols: usize) -> Result<PlaneGraph, GenError> {
    if rows < 2 || cols < 2 {
        return Err(bad("grid", "needs at least 2 rows and 2 columns"));
    }
    let id = |i: usize, j: usize| i * cols + j;
    let mut pts = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            pts.push((j as f64, -(i as f64)));
        }
    }
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
                if j + 1 < cols {
                    edges.push((id(i, j), id(i + 1, j + 1)));
                }
            }
        }
    }
    Ok(straight_line(&pts, &edges))
}

/// Embedding of a connected straight-line drawing: rotations sort
/// neighbors clockwise, and the outer face is the one with negative area.
fn straight_line(pts: &[(f64, f64)], edges: &[(VertexId, VertexId)]) -> PlaneGraph {
    let n = pts.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let rot: Vec<Vec<VertexId>> = (0..n)
        .map(|v| {
            let (x, y) = pts[v];
            let mut r = adj[v].clone();
            let ang = |w: &VertexId| (pts[*w].1 - y).atan2(pts[*w].0 - x);
            r.sort_by(|a, b| ang(b).total_cmp(&ang(a)));
            r
        })
        .collect();
    let (u, v) = edges[0];
    let probe = PlaneGraph::new(rot.clone(), vec![Dart::new(u, v)]).expect("drawing is plane");
    let area = |walk: &[VertexId]| -> f64 {
        let k = walk.len();
        (0..k)
            .map(|i| {
                let (a, b) = (pts[walk[i]], pts[walk[(i + 1) % k]]);
                a.0 * b.1 - b.0 * a.1
            })
            .sum()
    };
    let outer = probe
        .faces()
        .into_iter()
        .min_by(|a, b| area(a).total_cmp(&area(b)))
        .expect("at least one face");
    PlaneGraph::new(rot, vec![Dart::new(outer[0], outer[1])]).expect("drawing is plane")
}

/// Builds a triangulation of the sphere from consistently oriented faces:
/// the face `(a, b, c)` gives `succ_b(a) = c`. The face `outer` becomes the
/// outer face.
fn from_triangles(n: usize, faces: &[[VertexId; 3]], outer: usize) -> PlaneGraph {
    let mut succ: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); n];
    for &[a, b, c] in faces {
        succ[b].push((a, c));
        succ[c].push((b, a));
        succ[a].push((c, b));
    }
    let rot: Vec<Vec<VertexId>> = succ
        .iter()
        .map(|s| {
            if s.is_empty() {
                return Vec::new();
            }
            let mut r = vec![s[0].0];
            let mut cur = s[0].1;
            while cur != r[0] {
                r.push(cur);
                cur = s.iter().find(|p| p.0 == cur).expect("closed rotation").1;
            }
            r
        })
        .collect();
    let [a, b, _] = faces[outer];
    PlaneGraph::new(rot, vec![Dart::new(a, b)]).expect("triangle list is a sphere")
}

/// The icosahedron, from its coordinates `(0, ±1, ±phi)` and cyclic
/// shifts. Vertex ids follow the coordinate listing.
pub fn icosahedron() -> PlaneGraph {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut p: Vec<[f64; 3]> = Vec::new();
    for &(a, b) in &[(-1.0, phi), (1.0, phi), (-1.0, -phi), (1.0, -phi)] {
        p.push([a, b, 0.0]);
    }
    for &(a, b) in &[(-1.0, phi), (1.0, phi), (-1.0, -phi), (1.0, -phi)] {
        p.push([0.0, a, b]);
    }
    for &(a, b) in &[(-1.0, phi), (1.0, phi), (-1.0, -phi), (1.0, -phi)] {
        p.push([b, 0.0, a]);
    }
    let d2 = |a: [f64; 3], b: [f64; 3]| (0..3).map(|k| (a[k] - b[k]).powi(2)).sum::<f64>();
    let adj = |u: usize, v: usize| (d2(p[u], p[v]) - 4.0).abs() < 1e-9;
    let mut faces = Vec::new();
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                if adj(a, b) && adj(b, c) && adj(a, c) {
                    let e1: Vec<f64> = (0..3).map(|k| p[b][k] - p[a][k]).collect();
                    let e2: Vec<f64> = (0..3).map(|k| p[c][k] - p[a][k]).collect();
                    let nrm = [
                        e1[1] * e2[2] - e1[2] * e2[1],
                        e1[2] * e2[0] - e1[0] * e2[2],
                        e1[0] * e2[1] - e1[1] * e2[0],
                    ];
                    let out: f64 = (0..3).map(|k| nrm[k] * (p[a][k] + p[b][k] + p[c][k])).sum();
                    faces.push(if out > 0.0 { [a, b, c] } else { [a, c, b] });
                }
            }
        }
    }
    debug_assert_eq!(faces.len(), 20);
    from_triangles(12, &faces, 0)
}

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram.
pub fn petersen() -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((i + 5, (i + 2) % 5 + 5));
    }
    SimpleGraph::from_edges(10, e).expect("petersen edges")
}

/// Stacked triangulation: start from the triangle `0, 1, 2`, then insert
/// vertex `v` into an inner face picked by `below(#inner faces)` and join
/// it to the three corners.
pub fn apollonian(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(bad("apollonian", "needs n >= 3"));
    }
    let mut rng = SplitMix64::new(seed);
    let faces = stacked_faces(n, &mut rng);
    Ok(from_triangles(n, &faces, 0))
}

// faces[0] is the outer triangle
fn stacked_faces(n: usize, rng: &mut SplitMix64) -> Vec<[VertexId; 3]> {
    let mut faces = vec![[0, 2, 1], [0, 1, 2]];
    for v in 3..n {
        let k = 1 + rng.below(faces.len() - 1);
        let [a, b, c] = faces[k];
        faces[k] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    faces
}

/// A stacked triangulation on `n` vertices followed by `10 n` random flip
/// attempts; the outer face is then drawn uniformly among all faces.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(bad("triangulation", "needs n >= 3"));
    }
    let mut rng = SplitMix64::new(seed);
    let mut faces = stacked_faces(n, &mut rng);
    let mut edges: HashSet<(VertexId, VertexId)> = HashSet::new();
    let mut deg = vec![0usize; n];
    for &[a, b, c] in &faces {
        for (x, y) in [(a, b), (b, c), (c, a)] {
            if edges.insert((x.min(y), x.max(y))) {
                deg[x] += 1;
                deg[y] += 1;
            }
        }
    }
    if n >= 4 {
        for _ in 0..10 * n {
            let f1 = rng.below(faces.len());
            let r = rng.below(3);
            let [a, b, c] = [faces[f1][r], faces[f1][(r + 1) % 3], faces[f1][(r + 2) % 3]];
            let f2 = faces
                .iter()
                .position(|f| (0..3).any(|j| f[j] == b && f[(j + 1) % 3] == a))
                .expect("every dart has a twin face");
            let d = faces[f2].iter().copied().find(|&x| x != a && x != b).unwrap();
            if c == d || edges.contains(&(c.min(d), c.max(d))) || deg[a] <= 3 || deg[b] <= 3 {
                continue;
            }
            edges.remove(&(a.min(b), a.max(b)));
            edges.insert((c.min(d), c.max(d)));
            deg[a] -= 1;
            deg[b] -= 1;
            deg[c] += 1;
            deg[d] += 1;
            faces[f1] = [a, d, c];
            faces[f2] = [d, b, c];
        }
    }
    let outer = rng.below(faces.len());
    Ok(from_triangles(n, &faces, outer))
}

/// Each pair `u < v` in lexicographic order becomes an edge when
/// `unit() < p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> SimpleGraph {
    let mut rng = SplitMix64::new(seed);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.unit() < p {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

const REGULAR_TRIES: usize = 1000;

/// Pairing model: shuffle `n d` half-edges, pair them up in order, and
/// start over on a loop or a repeated pair.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<SimpleGraph, GenError> {
    if (n * d) % 2 == 1 {
        return Err(bad("regular", format!("n d = {} is odd", n * d)));
    }
    if d >= n && n > 0 {
        return Err(bad("regular", format!("degree {d} needs more than {n} vertices")));
    }
    let mut rng = SplitMix64::new(seed);
    'retry: for _ in 0..REGULAR_TRIES {
        let mut pts: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        rng.shuffle(&mut pts);
        let mut g = SimpleGraph::new(n);
        for pair in pts.chunks(2) {
            if g.add_edge(pair[0], pair[1]).is_err() {
                continue 'retry;
            }
        }
        return Ok(g);
    }
    Err(GenError::Retries {
        n,
        d,
        tries: REGULAR_TRIES,
    })
}

/// A random valid `(S, I)` for a 2-connected plane graph: `|S|` uniform in
/// `0..=3`, `S` a run of the outer cycle at a random start, then each
/// remaining boundary vertex in random order joins `I` with probability 1/2
/// when that keeps `I` independent and the vertex has at most 2 neighbors
/// in `S`.
pub fn sample_instance(g: &PlaneGraph, rng: &mut SplitMix64) -> (Vec<VertexId>, Vec<VertexId>) {
    let walk = g.boundary().walks.swap_remove(0);
    let k = walk.len();
    let size = rng.below(4).min(k);
    let start = rng.below(k);
    let s: Vec<VertexId> = (0..size).map(|j| walk[(start + j) % k]).collect();
    let mut rest: Vec<VertexId> = walk.iter().copied().filter(|v| !s.contains(v)).collect();
    rng.shuffle(&mut rest);
    let gr = g.graph();
    let mut i: Vec<VertexId> = Vec::new();
    for v in rest {
        if rng.below(2) == 0 {
            continue;
        }
        let in_s = gr.neighbors(v).iter().filter(|w| s.contains(w)).count();
        if in_s < 3 && !i.iter().any(|&x| gr.has_edge(x, v)) {
            i.push(v);
        }
    }
    (s, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0, as published with the algorithm
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn planar_families_have_expected_sizes() {
        let c = cycle(5).unwrap();
        assert_eq!(c.faces().len(), 2);
        let a = apollonian(5, 1).unwrap();
        assert_eq!((a.vertex_count(), a.edge_count()), (5, 9));
        let ico = icosahedron();
        assert_eq!((ico.vertex_count(), ico.edge_count()), (12, 30));
        assert!(ico.graph().vertices().all(|v| ico.graph().degree(v) == 5));
        assert_eq!(ico.faces().len(), 20);
        assert!(ico.faces().iter().all(|f| f.len() == 3));
        let g = triangulated_grid(10, 10).unwrap();
        assert_eq!(g.vertex_count(), 100);
        assert_eq!(g.edge_count(), 2 * 90 + 81);
        assert_eq!(g.boundary().walks[0].len(), 36);
        assert!(g.inner_faces().iter().all(|f| f.len() == 3));
        let w = wheel(6).unwrap();
        assert_eq!(w.boundary().walks[0].len(), 6);
        assert_eq!(path(1).unwrap().vertex_count(), 1);
    }

    #[test]
    fn stacked_and_flipped_are_triangulations() {
        for seed in 0..30 {
            for n in [3, 4, 7, 12, 40] {
                for g in [apollonian(n, seed).unwrap(), random_triangulation(n, seed).unwrap()] {
                    assert_eq!(g.edge_count(), 3 * n - 6);
                    assert!(g.faces().iter().all(|f| f.len() == 3));
                    assert!(g.validate().is_ok());
                }
            }
        }
    }

    #[test]
    fn flips_change_the_graph() {
        let differs = (0..10).any(|s| {
            random_triangulation(10, s).unwrap().graph() != apollonian(10, s).unwrap().graph()
        });
        assert!(differs);
    }

    #[test]
    fn regular_graphs() {
        let g = random_regular(6, 3, 7).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(random_regular(4, 3, 0).unwrap(), clique(4));
        assert!(matches!(random_regular(5, 3, 0), Err(GenError::BadParams { .. })));
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(
            random_triangulation(12, 99).unwrap(),
            random_triangulation(12, 99).unwrap()
        );
        assert_eq!(gnp(8, 0.5, 3), gnp(8, 0.5, 3));
    }

    #[test]
    fn parse_families() {
        assert_eq!(
            Family::parse("grid", &["3", "4"]).unwrap(),
            Family::Grid { rows: 3, cols: 4 }
        );
        assert!(Family::parse("grid", &["3"]).is_err());
        assert!(Family::parse("nope", &[]).is_err());
        let spec = GenSpec {
            family: Family::Apollonian { n: 50 },
            seed: 3,
        };
        assert_eq!(spec.header(), "# family=apollonian n=50 seed=3");
    }

    #[test]
    fn sampled_instances_are_valid() {
        let mut rng = SplitMix64::new(5);
        for seed in 0..50 {
            let g = random_triangulation(9, seed).unwrap();
            let (s, i) = sample_instance(&g, &mut rng);
            crate::witness::make_instance(g, &s, &i).unwrap();
        }
    }
}
