//! Separating paths of length 0, 1 and 2 (cut vertices, 1-chords, 2-chords).

use crate::graph::VertexId;

use super::PlaneGraph;

/// A path with both ends on the outer boundary that splits the graph into
/// two smaller induced pieces sharing exactly the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingPath {
    pub path: Vec<VertexId>,
    /// Sorted vertex set of the first side; it holds at least as many
    /// vertices of the reference set as `side2`.
    pub side1: Vec<VertexId>,
    pub side2: Vec<VertexId>,
    /// Set on exactly one 1-chord of maximum `side1` size.
    pub max_side1: bool,
}

/// Every separating path of length `ell` in the connected plane graph `g`.
///
/// Each split is oriented so that `side1` contains at least as many vertices
/// of `s` as `side2`; ties go to the larger side, then to the
/// lexicographically smaller vertex set. Paths are produced in lexicographic
/// order. When removing the path leaves more than ten components, only the
/// splits putting a single component on one side are examined.
pub fn find_chords(g: &PlaneGraph, s: &[VertexId], ell: usize) -> Vec<SeparatingPath> {
    let b = g.boundary();
    let on = &b.on;
    let gr = g.graph();
    let mut candidates: Vec<Vec<VertexId>> = Vec::new();
    match ell {
        0 => candidates.extend(gr.vertices().filter(|&v| on[v]).map(|v| vec![v])),
        1 => {
            for (u, w) in gr.edges() {
                if on[u] && on[w] {
                    candidates.push(vec![u, w]);
                }
            }
        }
        2 => {
            for x in gr.vertices().filter(|&v| on[v]) {
                for &y in gr.neighbors(x) {
                    for &z in gr.neighbors(y) {
                        if z > x && on[z] {
                            candidates.push(vec![x, y, z]);
                        }
                    }
                }
            }
            candidates.sort();
        }
        _ => {}
    }
    let mut in_s = vec![false; g.capacity()];
    for &v in s {
        in_s[v] = true;
    }
    let mut out = Vec::new();
    for path in candidates {
        for (a, bside) in bipartitions(g, &path) {
            if check_separation(g, &path, &a, &bside).is_err() {
                continue;
            }
            let (side1, side2) = orient(a, bside, &in_s);
            out.push(SeparatingPath {
                path: path.clone(),
                side1,
                side2,
                max_side1: false,
            });
        }
    }
    if ell == 1 {
        if let Some(best) = (0..out.len()).max_by_key(|&i| (out[i].side1.len(), std::cmp::Reverse(i)))
        {
            out[best].max_side1 = true;
        }
    }
    out
}

/// Orders two sides by the number of `in_s` vertices they hold, then by size,
/// then lexicographically.
pub(crate) fn orient(
    a: Vec<VertexId>,
    b: Vec<VertexId>,
    in_s: &[bool],
) -> (Vec<VertexId>, Vec<VertexId>) {
    let ca = a.iter().filter(|&&v| in_s[v]).count();
    let cb = b.iter().filter(|&&v| in_s[v]).count();
    let a_first = (ca, a.len(), std::cmp::Reverse(&a)) >= (cb, b.len(), std::cmp::Reverse(&b));
    if a_first {
        (a, b)
    } else {
        (b, a)
    }
}

fn bipartitions(g: &PlaneGraph, path: &[VertexId]) -> Vec<(Vec<VertexId>, Vec<VertexId>)> {
    let mut keep: Vec<bool> = (0..g.capacity()).map(|v| g.graph().contains(v)).collect();
    for &p in path {
        keep[p] = false;
    }
    let comps = g.graph().induced(&keep).components();
    let k = comps.len();
    if k < 2 {
        return Vec::new();
    }
    let masks: Vec<u64> = if k <= 10 {
        // component 0 always on the first side
        (0..(1u64 << (k - 1)) - 1).map(|m| (m << 1) | 1).collect()
    } else {
        (0..k).map(|i| 1u64 << i).collect()
    };
    let mut out = Vec::new();
    for m in masks {
        let mut a: Vec<VertexId> = path.to_vec();
        let mut b: Vec<VertexId> = path.to_vec();
        for (i, c) in comps.iter().enumerate() {
            if m >> i & 1 == 1 {
                a.extend(c);
            } else {
                b.extend(c);
            }
        }
        a.sort_unstable();
        b.sort_unstable();
        out.push((a, b));
    }
    out
}

/// Checks every condition of a separating path directly.
pub(crate) fn check_separation(
    g: &PlaneGraph,
    path: &[VertexId],
    side1: &[VertexId],
    side2: &[VertexId],
) -> Result<(), String> {
    let gr = g.graph();
    let n = g.capacity();
    if path.is_empty() {
        return Err("empty path".into());
    }
    for (i, &v) in path.iter().enumerate() {
        if !gr.contains(v) {
            return Err(format!("vertex {v} not in graph"));
        }
        if path[..i].contains(&v) {
            return Err(format!("vertex {v} repeated"));
        }
        if i > 0 && !gr.has_edge(path[i - 1], v) {
            return Err(format!("{}-{v} is not an edge", path[i - 1]));
        }
    }
    let b = g.boundary();
    let (first, last) = (path[0], path[path.len() - 1]);
    if !b.on[first] || !b.on[last] {
        return Err("endpoints must lie on the outer boundary".into());
    }
    let mut m1 = vec![false; n];
    let mut m2 = vec![false; n];
    for &v in side1 {
        m1[v] = true;
    }
    for &v in side2 {
        m2[v] = true;
    }
    for v in 0..n {
        let on_path = path.contains(&v);
        if gr.contains(v) {
            if !(m1[v] || m2[v]) {
                return Err(format!("vertex {v} on neither side"));
            }
            if m1[v] && m2[v] && !on_path {
                return Err(format!("vertex {v} on both sides but not on the path"));
            }
        } else if m1[v] || m2[v] {
            return Err(format!("vertex {v} not in graph"));
        }
        if on_path && !(m1[v] && m2[v]) {
            return Err(format!("path vertex {v} missing from a side"));
        }
    }
    let live = gr.vertex_count();
    if side1.len() >= live || side2.len() >= live {
        return Err("a side is not smaller than the graph".into());
    }
    for (u, w) in gr.edges() {
        if !((m1[u] && m1[w]) || (m2[u] && m2[w])) {
            return Err(format!("edge {u}-{w} lies in neither side"));
        }
    }
    for mask in [&m1, &m2] {
        let h = g.induced(mask);
        if !h.graph().is_connected() {
            return Err("a side is disconnected".into());
        }
        let hb = h.boundary();
        for (i, &v) in path.iter().enumerate() {
            if !hb.on[v] {
                return Err(format!("path vertex {v} not on a side's outer boundary"));
            }
            if i > 0 && !hb.has_edge(path[i - 1], v) {
                return Err(format!("path edge {}-{v} not on a side's outer boundary", path[i - 1]));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::tests::{cycle, wheel};
    use crate::plane::Dart;

    #[test]
    fn cycle_has_no_chords() {
        let c = cycle(5);
        for ell in 0..3 {
            assert!(find_chords(&c, &[], ell).is_empty(), "ell={ell}");
        }
    }

    #[test]
    fn bowtie_cut_vertex() {
        // triangles 0,1,2 and 2,3,4 sharing vertex 2
        let rot = vec![
            vec![2, 1],
            vec![0, 2],
            vec![1, 0, 4, 3],
            vec![2, 4],
            vec![3, 2],
        ];
        let g = PlaneGraph::new(rot, vec![Dart::new(1, 0)]).unwrap();
        let c0 = find_chords(&g, &[0, 1], 0);
        assert_eq!(c0.len(), 1);
        assert_eq!(c0[0].path, vec![2]);
        assert_eq!(c0[0].side1, vec![0, 1, 2]);
        assert_eq!(c0[0].side2, vec![2, 3, 4]);
        let (g1, g2) = g.split(&c0[0]).unwrap();
        assert_eq!(g1.edge_count(), 3);
        assert_eq!(g2.edge_count(), 3);
    }

    #[test]
    fn square_with_diagonal() {
        // 4-cycle 0,1,2,3 counterclockwise with chord 0-2
        let rot = vec![
            vec![3, 2, 1],
            vec![0, 2],
            vec![1, 0, 3],
            vec![2, 0],
        ];
        let g = PlaneGraph::new(rot, vec![Dart::new(0, 3)]).unwrap();
        let c1 = find_chords(&g, &[1], 1);
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[0].path, vec![0, 2]);
        assert_eq!(c1[0].side1, vec![0, 1, 2]);
        assert!(c1[0].max_side1);
        let (g1, g2) = g.split(&c1[0]).unwrap();
        assert_eq!(g1.inner_faces(), vec![vec![0, 1, 2]]);
        assert_eq!(g2.vertex_count(), 3);
        assert_eq!(g2.edge_count(), 3);
    }

    #[test]
    fn wheel_spokes_are_two_chords() {
        // in W6 every path rim-hub-rim between nonadjacent rim vertices separates
        let w = wheel(6);
        let c2 = find_chords(&w, &[0, 1, 2], 2);
        let paths: Vec<Vec<usize>> = c2.iter().map(|p| p.path.clone()).collect();
        assert!(paths.contains(&vec![0, 6, 2]));
        assert!(paths.contains(&vec![0, 6, 3]));
        assert!(!paths.contains(&vec![0, 6, 1]));
        let p = c2.iter().find(|p| p.path == vec![0, 6, 3]).unwrap();
        assert_eq!(p.side1, vec![0, 1, 2, 3, 6]);
        assert_eq!(p.side2, vec![0, 3, 4, 5, 6]);
    }
}
