//! Greedy colorings driven by a vertex order or by a DelSave witness.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::delsave::{ChargeFn, Witness};
use crate::gen::SplitMix64;
use crate::graph::{SimpleGraph, VertexId};

pub type Color = u32;

/// A finite color list per vertex; `None` outside the graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Option<BTreeSet<Color>>>,
}

impl ListAssignment {
    pub fn new(capacity: usize) -> Self {
        ListAssignment {
            lists: vec![None; capacity],
        }
    }

    /// `{1, ..., k}` on every vertex of `g`.
    pub fn palette(g: &SimpleGraph, k: Color) -> Self {
        let mut l = ListAssignment::new(g.capacity());
        for v in g.vertices() {
            l.set(v, 1..=k);
        }
        l
    }

    /// Lists of `size` distinct colors drawn uniformly from `1..=universe`.
    pub fn random(g: &SimpleGraph, size: usize, universe: Color, rng: &mut SplitMix64) -> Self {
        assert!(size <= universe as usize, "list larger than the universe");
        let mut l = ListAssignment::new(g.capacity());
        let mut all: Vec<Color> = (1..=universe).collect();
        for v in g.vertices() {
            rng.shuffle(&mut all);
            l.set(v, all[..size].iter().copied());
        }
        l
    }

    pub fn set(&mut self, v: VertexId, colors: impl IntoIterator<Item = Color>) {
        if v >= self.lists.len() {
            self.lists.resize(v + 1, None);
        }
        self.lists[v] = Some(colors.into_iter().collect());
    }

    pub fn get(&self, v: VertexId) -> Option<&BTreeSet<Color>> {
        self.lists.get(v).and_then(|l| l.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &BTreeSet<Color>)> {
        self.lists
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.as_ref().map(|l| (v, l)))
    }
}

/// A color per vertex; `None` outside the graph.
pub type Coloring = Vec<Option<Color>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("vertex {0} appears more than once or is not in the graph")]
    BadOrder(VertexId),
    #[error("order misses vertex {0}")]
    Incomplete(VertexId),
    #[error("step {step}: no color left for vertex {vertex}")]
    Exhausted { step: usize, vertex: VertexId },
    #[error("vertex {vertex} has {have} colors but charge {charge} needs {need}")]
    ListTooSmall {
        vertex: VertexId,
        have: usize,
        charge: i64,
        need: usize,
    },
    #[error("vertex {0} has no list or no charge")]
    Missing(VertexId),
}

/// Resolves the "arbitrary color" of the greedy algorithms. `options` is
/// nonempty and sorted ascending.
pub trait ColorChooser {
    fn choose(&mut self, v: VertexId, options: &[Color]) -> Color;
}

pub struct MinChooser;

impl ColorChooser for MinChooser {
    fn choose(&mut self, _: VertexId, options: &[Color]) -> Color {
        options[0]
    }
}

pub struct MaxChooser;

impl ColorChooser for MaxChooser {
    fn choose(&mut self, _: VertexId, options: &[Color]) -> Color {
        options[options.len() - 1]
    }
}

pub struct RandomChooser(pub SplitMix64);

impl ColorChooser for RandomChooser {
    fn choose(&mut self, _: VertexId, options: &[Color]) -> Color {
        options[self.0.below(options.len())]
    }
}

fn check_order(g: &SimpleGraph, order: &[VertexId]) -> Result<(), ColorError> {
    let mut seen = vec![false; g.capacity()];
    for &v in order {
        if !g.contains(v) || seen[v] {
            return Err(ColorError::BadOrder(v));
        }
        seen[v] = true;
    }
    match g.vertices().find(|&v| !seen[v]) {
        Some(v) => Err(ColorError::Incomplete(v)),
        None => Ok(()),
    }
}

/// Plain greedy coloring from the palette `{1, ..., d+1}`, taking the
/// smallest available color at each vertex.
///
/// Succeeds when every vertex is preceded by at most `d` of its neighbors,
/// e.g. a reversed degeneracy peeling order.
pub fn greedy_color(g: &SimpleGraph, d: usize, order: &[VertexId]) -> Result<Coloring, ColorError> {
    check_order(g, order)?;
    let mut lists = ListAssignment::palette(g, d as Color + 1);
    let mut out = vec![None; g.capacity()];
    for (step, &u) in order.iter().enumerate() {
        let c = lists.lists[u]
            .take()
            .and_then(|l| l.first().copied())
            .ok_or(ColorError::Exhausted { step, vertex: u })?;
        out[u] = Some(c);
        for &v in g.neighbors(u) {
            if let Some(l) = lists.lists[v].as_mut() {
                l.remove(&c);
            }
        }
    }
    Ok(out)
}

/// Greedy coloring with savings along a witness for `(g, f)`.
///
/// At move `(u, w)` the color comes from `L(u) - L(w)` when `w` is not blank
/// and `|L(u)| > |L(w)|`, and from `L(u)` otherwise; it is then removed from
/// the lists of the uncolored neighbors of `u`. Needs `|L(v)| >= f(v) + 1`.
/// The witness is assumed to verify; an empty choice set is reported as
/// [`ColorError::Exhausted`].
pub fn color_from_witness(
    g: &SimpleGraph,
    f: &ChargeFn,
    wit: &Witness,
    lists: &ListAssignment,
    chooser: &mut dyn ColorChooser,
) -> Result<Coloring, ColorError> {
    for v in g.vertices() {
        let (Some(l), Some(x)) = (lists.get(v), f.get(v)) else {
            return Err(ColorError::Missing(v));
        };
        let need = (x + 1).max(0) as usize;
        if l.len() < need {
            return Err(ColorError::ListTooSmall {
                vertex: v,
                have: l.len(),
                charge: x,
                need,
            });
        }
    }
    let order: Vec<VertexId> = wit.moves.iter().map(|m| m.vertex).collect();
    check_order(g, &order)?;
    let mut lists = lists.clone();
    let mut out = vec![None; g.capacity()];
    for (step, m) in wit.moves.iter().enumerate() {
        let u = m.vertex;
        let lu = lists.lists[u].take().expect("checked above");
        let lw = m
            .save
            .and_then(|w| lists.get(w))
            .filter(|lw| lu.len() > lw.len());
        let options: Vec<Color> = match lw {
            Some(lw) => lu.difference(lw).copied().collect(),
            None => lu.iter().copied().collect(),
        };
        if options.is_empty() {
            return Err(ColorError::Exhausted { step, vertex: u });
        }
        let c = chooser.choose(u, &options);
        debug_assert!(options.contains(&c));
        out[u] = Some(c);
        for &v in g.neighbors(u) {
            if let Some(l) = lists.lists[v].as_mut() {
                l.remove(&c);
            }
        }
    }
    Ok(out)
}

/// True iff every vertex of `g` is colored, adjacent vertices differ, and
/// each color lies in its list when lists are given.
pub fn validate_coloring(g: &SimpleGraph, coloring: &[Option<Color>], lists: Option<&ListAssignment>) -> bool {
    let col = |v: VertexId| coloring.get(v).copied().flatten();
    g.vertices().all(|v| {
        let Some(c) = col(v) else { return false };
        let in_list = lists.is_none_or(|l| l.get(v).is_some_and(|l| l.contains(&c)));
        in_list && g.neighbors(v).iter().all(|&w| col(w) != Some(c))
    })
}
