//! Instances `(G, S, I)` and their charge function.

use std::fmt;

use thiserror::Error;

use crate::delsave::ChargeFn;
use crate::graph::VertexId;
use crate::plane::{Boundary, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("vertex {0} is not in the graph")]
    NotInGraph(VertexId),
    #[error("vertex {0} is listed twice")]
    Duplicate(VertexId),
    #[error("S has {0} vertices; at most 3 are allowed")]
    TooManyS(usize),
    #[error("S vertex {0} is not on the outer boundary")]
    SNotOnBoundary(VertexId),
    #[error("S is not consecutive on the outer boundary")]
    SNotConsecutive,
    #[error("I vertex {0} is not on the outer boundary")]
    INotOnBoundary(VertexId),
    #[error("vertex {0} is in both S and I")]
    IInS(VertexId),
    #[error("I is not independent: {0} and {1} are adjacent")]
    INotIndependent(VertexId, VertexId),
    #[error("I vertex {0} has 3 neighbors in S")]
    IThreeInS(VertexId),
}

/// A validated triple `(G, S, I)`.
///
/// The charge of a vertex `v` of `G - S` is `4 - deg_S(v)` if `v` is off the
/// outer boundary, `2 - deg_S(v)` if `v` is in `I`, and `3 - deg_S(v)` for
/// the remaining boundary vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Instance {
    g: PlaneGraph,
    s: Vec<VertexId>,
    i: Vec<VertexId>,
    f: ChargeFn,
    boundary: Boundary,
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Instance")
            .field("g", &self.g)
            .field("s", &self.s)
            .field("i", &self.i)
            .finish()
    }
}

/// Validates `(g, s, i)` and computes its charges.
pub fn make_instance(
    g: PlaneGraph,
    s: &[VertexId],
    i: &[VertexId],
) -> Result<Instance, InstanceError> {
    let gr = g.graph();
    let n = g.capacity();
    let mut in_s = vec![false; n];
    let mut in_i = vec![false; n];
    for &v in s {
        if !gr.contains(v) {
            return Err(InstanceError::NotInGraph(v));
        }
        if in_s[v] {
            return Err(InstanceError::Duplicate(v));
        }
        in_s[v] = true;
    }
    for &v in i {
        if !gr.contains(v) {
            return Err(InstanceError::NotInGraph(v));
        }
        if in_i[v] {
            return Err(InstanceError::Duplicate(v));
        }
        if in_s[v] {
            return Err(InstanceError::IInS(v));
        }
        in_i[v] = true;
    }
    if s.len() > 3 {
        return Err(InstanceError::TooManyS(s.len()));
    }
    let boundary = g.boundary();
    if let Some(&v) = s.iter().find(|&&v| !boundary.on[v]) {
        return Err(InstanceError::SNotOnBoundary(v));
    }
    if s.len() > 1 {
        // S must be connected through boundary edges
        let mut seen = vec![s[0]];
        let mut k = 0;
        while k < seen.len() {
            let v = seen[k];
            k += 1;
            for &w in s {
                if !seen.contains(&w) && boundary.has_edge(v, w) {
                    seen.push(w);
                }
            }
        }
        if seen.len() != s.len() {
            return Err(InstanceError::SNotConsecutive);
        }
    }
    for &v in i {
        if !boundary.on[v] {
            return Err(InstanceError::INotOnBoundary(v));
        }
        if let Some(&w) = gr.neighbors(v).iter().find(|&&w| in_i[w]) {
            return Err(InstanceError::INotIndependent(v.min(w), v.max(w)));
        }
        if gr.neighbors(v).iter().filter(|&&w| in_s[w]).count() >= 3 {
            return Err(InstanceError::IThreeInS(v));
        }
    }
    let mut f = ChargeFn::new(n);
    for v in gr.vertices().filter(|&v| !in_s[v]) {
        let base = if !boundary.on[v] {
            4
        } else if in_i[v] {
            2
        } else {
            3
        };
        let ds = gr.neighbors(v).iter().filter(|&&w| in_s[w]).count() as i64;
        f.set(v, base - ds);
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    let mut i = i.to_vec();
    i.sort_unstable();
    Ok(Instance {
        g,
        s,
        i,
        f,
        boundary,
    })
}

impl Instance {
    pub fn graph(&self) -> &PlaneGraph {
        &self.g
    }

    /// `S`, sorted.
    pub fn s(&self) -> &[VertexId] {
        &self.s
    }

    /// `I`, sorted.
    pub fn i(&self) -> &[VertexId] {
        &self.i
    }

    /// Charges on `G - S`.
    pub fn charges(&self) -> &ChargeFn {
        &self.f
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn in_s(&self, v: VertexId) -> bool {
        self.s.binary_search(&v).is_ok()
    }

    pub fn in_i(&self, v: VertexId) -> bool {
        self.i.binary_search(&v).is_ok()
    }

    /// `G - S` as a plain graph.
    pub fn residual(&self) -> crate::graph::SimpleGraph {
        let mut keep: Vec<bool> = (0..self.g.capacity()).map(|v| self.g.graph().contains(v)).collect();
        for &v in &self.s {
            keep[v] = false;
        }
        self.g.graph().induced(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::tests::{cycle, wheel};

    #[test]
    fn cycle_with_three_in_s() {
        let c = cycle(5);
        let inst = make_instance(c, &[0, 1, 2], &[]).unwrap();
        assert_eq!(inst.charges().get(3), Some(2));
        assert_eq!(inst.charges().get(4), Some(2));
        assert_eq!(inst.charges().get(0), None);
    }

    #[test]
    fn wheel_charges() {
        let w = wheel(6);
        let inst = make_instance(w, &[], &[]).unwrap();
        assert_eq!(inst.charges().get(6), Some(4));
        for v in 0..6 {
            assert_eq!(inst.charges().get(v), Some(3));
        }
    }

    #[test]
    fn triangle_fully_in_s() {
        let t = cycle(3);
        let inst = make_instance(t, &[0, 1, 2], &[]).unwrap();
        assert_eq!(inst.residual().vertex_count(), 0);
    }

    #[test]
    fn rejects_bad_instances() {
        let w = wheel(6);
        assert_eq!(
            make_instance(w.clone(), &[0, 2], &[]).unwrap_err(),
            InstanceError::SNotConsecutive
        );
        assert_eq!(
            make_instance(w.clone(), &[6], &[]).unwrap_err(),
            InstanceError::SNotOnBoundary(6)
        );
        assert_eq!(
            make_instance(w.clone(), &[], &[1, 2]).unwrap_err(),
            InstanceError::INotIndependent(1, 2)
        );
        assert_eq!(
            make_instance(w.clone(), &[0, 1, 2, 3], &[]).unwrap_err(),
            InstanceError::TooManyS(4)
        );
        // 4-cycle with chord 0-2: vertex 0 sees all of S = {1, 2, 3}
        let rot = vec![vec![3, 2, 1], vec![0, 2], vec![1, 0, 3], vec![2, 0]];
        let sq = PlaneGraph::new(rot, vec![crate::plane::Dart::new(0, 3)]).unwrap();
        assert_eq!(
            make_instance(sq.clone(), &[1, 2, 3], &[0]).unwrap_err(),
            InstanceError::IThreeInS(0)
        );
        assert!(make_instance(sq, &[1, 2], &[0]).is_ok());
    }
}
