//! Exhaustive oracles for small graphs: weak and strong degeneracy, plain
//! degeneracy and the chromatic number.

use std::collections::HashSet;

use thiserror::Error;

use crate::delsave::{verify, ChargeFn, Move, Witness};
use crate::graph::{SimpleGraph, VertexId};

/// Largest live vertex count the bitmask searchers accept.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("graph has {0} vertices; the search handles at most 64")]
    TooLarge(usize),
    #[error("charge domain does not match the graph at vertex {0}")]
    ChargeDomain(VertexId),
}

/// Switches for the game search. The defaults enable everything.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Remember losing states.
    pub memo: bool,
    /// Skip saves whose condition cannot trigger; such a move equals Delete.
    pub prune_saves: bool,
    /// Only try blank targets, i.e. decide strong degeneracy.
    pub blank_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            memo: true,
            prune_saves: true,
            blank_only: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<Witness>,
    /// Positions expanded.
    pub nodes: u64,
}

struct Compact {
    ids: Vec<VertexId>,
    adj: Vec<u64>,
}

impl Compact {
    fn new(g: &SimpleGraph) -> Result<Self, SearchError> {
        let n = g.vertex_count();
        if n > MAX_VERTICES {
            return Err(SearchError::TooLarge(n));
        }
        let ids: Vec<VertexId> = g.vertices().collect();
        let mut idx = vec![usize::MAX; g.capacity()];
        for (i, &v) in ids.iter().enumerate() {
            idx[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << idx[w]))
            .collect();
        Ok(Compact { ids, adj })
    }

    fn full(&self) -> u64 {
        if self.ids.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.ids.len()) - 1
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

struct Searcher<'a> {
    c: &'a Compact,
    opts: SearchOptions,
    losing: HashSet<(u64, Vec<i64>)>,
    nodes: u64,
    moves: Vec<(usize, Option<usize>)>,
}

impl Searcher<'_> {
    fn key(mask: u64, ch: &[i64]) -> (u64, Vec<i64>) {
        (mask, bits(mask).map(|i| ch[i]).collect())
    }

    fn wins(&mut self, mask: u64, ch: &mut [i64]) -> bool {
        if mask == 0 {
            return true;
        }
        self.nodes += 1;
        if self.opts.memo && self.losing.contains(&Self::key(mask, ch)) {
            return false;
        }
        let mut order: Vec<usize> = bits(mask).collect();
        order.sort_by_key(|&i| (ch[i], i));
        for &u in &order {
            let nb = self.c.adj[u] & mask;
            // vertices at 0 cannot afford another decrement
            let zeros = bits(nb).filter(|&w| ch[w] == 0).count();
            if zeros > 1 {
                continue;
            }
            let mut targets: Vec<Option<usize>> = Vec::new();
            if !self.opts.blank_only {
                for w in bits(nb) {
                    if self.opts.prune_saves && ch[u] <= ch[w] {
                        continue;
                    }
                    targets.push(Some(w));
                }
                targets.sort_by_key(|t| std::cmp::Reverse(t.map(|w| ch[w])));
            }
            targets.push(None);
            for t in targets {
                let spared = t.filter(|&w| ch[u] > ch[w]);
                if bits(nb).any(|w| Some(w) != spared && ch[w] == 0) {
                    continue;
                }
                for w in bits(nb) {
                    if Some(w) != spared {
                        ch[w] -= 1;
                    }
                }
                self.moves.push((u, t));
                let ok = self.wins(mask & !(1 << u), ch);
                if ok {
                    return true;
                }
                self.moves.pop();
                for w in bits(nb) {
                    if Some(w) != spared {
                        ch[w] += 1;
                    }
                }
            }
        }
        if self.opts.memo {
            self.losing.insert(Self::key(mask, ch));
        }
        false
    }
}

/// Decides whether `g` is weakly `f`-degenerate by exhaustive search.
pub fn search(g: &SimpleGraph, f: &ChargeFn, opts: SearchOptions) -> Result<SearchOutcome, SearchError> {
    let c = Compact::new(g)?;
    for v in 0..g.capacity().max(f.capacity()) {
        if g.contains(v) != f.get(v).is_some() {
            return Err(SearchError::ChargeDomain(v));
        }
    }
    let mut ch: Vec<i64> = c.ids.iter().map(|&v| f.at(v)).collect();
    if ch.iter().any(|&x| x < 0) {
        return Ok(SearchOutcome {
            witness: None,
            nodes: 0,
        });
    }
    let mut s = Searcher {
        c: &c,
        opts,
        losing: HashSet::new(),
        nodes: 0,
        moves: Vec::new(),
    };
    let won = s.wins(c.full(), &mut ch);
    let witness = won.then(|| {
        Witness::new(
            s.moves
                .iter()
                .map(|&(u, t)| Move {
                    vertex: c.ids[u],
                    save: t.map(|w| c.ids[w]),
                })
                .collect(),
        )
    });
    if let Some(w) = &witness {
        debug_assert!(verify(g, f, w).is_ok(), "search produced a bad witness");
    }
    Ok(SearchOutcome {
        witness,
        nodes: s.nodes,
    })
}

/// A witness of weak `f`-degeneracy, if one exists.
pub fn is_weakly_degenerate(g: &SimpleGraph, f: &ChargeFn) -> Result<Option<Witness>, SearchError> {
    Ok(search(g, f, SearchOptions::default())?.witness)
}

/// A Delete-only witness, if one exists. Uses reverse peeling: a vertex whose
/// current degree is at most its charge can always go last.
pub fn is_strongly_degenerate(g: &SimpleGraph, f: &ChargeFn) -> Result<Option<Witness>, SearchError> {
    for v in 0..g.capacity().max(f.capacity()) {
        if g.contains(v) != f.get(v).is_some() {
            return Err(SearchError::ChargeDomain(v));
        }
    }
    if f.iter().any(|(_, x)| x < 0) {
        return Ok(None);
    }
    let mut deg: Vec<i64> = (0..g.capacity()).map(|v| g.degree(v) as i64).collect();
    let mut gone = vec![false; g.capacity()];
    let mut stack: Vec<VertexId> = g.vertices().filter(|&v| deg[v] <= f.at(v)).collect();
    let mut queued = vec![false; g.capacity()];
    for &v in &stack {
        queued[v] = true;
    }
    let mut rev = Vec::new();
    while let Some(v) = stack.pop() {
        gone[v] = true;
        rev.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                if !queued[w] && deg[w] <= f.at(w) {
                    queued[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    if rev.len() < g.vertex_count() {
        return Ok(None);
    }
    rev.reverse();
    Ok(Some(Witness::new(rev.into_iter().map(Move::delete).collect())))
}

/// Degeneracy and a min-degree peeling order (first peeled first). Deleting in
/// the reverse of this order is legal under the constant degeneracy charge.
pub fn degeneracy(g: &SimpleGraph) -> (usize, Vec<VertexId>) {
    let n = g.capacity();
    let maxdeg = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); maxdeg + 1];
    for v in g.vertices().collect::<Vec<_>>().into_iter().rev() {
        buckets[deg[v]].push(v);
    }
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut best = 0;
    let mut low = 0;
    while order.len() < g.vertex_count() {
        low = low.min(maxdeg);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop().unwrap();
        if gone[v] || deg[v] != low {
            continue;
        }
        gone[v] = true;
        best = best.max(low);
        order.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                low = low.min(deg[w]);
            }
        }
    }
    (best, order)
}

/// Smallest `d` such that `g` is weakly degenerate under the constant `d`,
/// with a witness.
pub fn weak_degeneracy(g: &SimpleGraph) -> Result<(usize, Witness), SearchError> {
    weak_degeneracy_with(g, SearchOptions::default())
}

pub fn weak_degeneracy_with(g: &SimpleGraph, opts: SearchOptions) -> Result<(usize, Witness), SearchError> {
    if g.vertex_count() > MAX_VERTICES {
        return Err(SearchError::TooLarge(g.vertex_count()));
    }
    let (dg, order) = degeneracy(g);
    for d in 0..dg {
        if let Some(w) = search(g, &ChargeFn::constant(g, d as i64), opts)?.witness {
            return Ok((d, w));
        }
    }
    let peel = Witness::new(order.into_iter().rev().map(Move::delete).collect());
    Ok((dg, peel))
}

/// Exact chromatic number by backtracking over vertices in descending degree.
pub fn chromatic_number(g: &SimpleGraph) -> Result<usize, SearchError> {
    let c = Compact::new(g)?;
    let n = c.ids.len();
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(c.adj[i].count_ones()));
    let mut k = 1;
    loop {
        let mut col = vec![usize::MAX; n];
        if color_bt(&c, &order, 0, k, 0, &mut col) {
            return Ok(k);
        }
        k += 1;
    }
}

fn color_bt(c: &Compact, order: &[usize], pos: usize, k: usize, used: usize, col: &mut [usize]) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // colors above `used` are interchangeable, so try only one of them
    for x in 0..k.min(used + 1) {
        if bits(c.adj[v]).any(|w| col[w] == x) {
            continue;
        }
        col[v] = x;
        if color_bt(c, order, pos + 1, k, used.max(x + 1), col) {
            return true;
        }
        col[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn clique(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn petersen() -> SimpleGraph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        SimpleGraph::from_edges(10, e).unwrap()
    }

    #[test]
    fn k2_with_save() {
        let g = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
        let f = ChargeFn::from_values([1, 0]);
        let w = is_weakly_degenerate(&g, &f).unwrap().unwrap();
        verify(&g, &f, &w).unwrap();
        verify(&g, &f, &Witness::new(vec![Move::save(0, 1), Move::delete(1)])).unwrap();
        // deleting w first also works, so no save is needed here
        assert!(is_strongly_degenerate(&g, &f).unwrap().is_some());
        let both_one = ChargeFn::from_values([0, 0]);
        assert!(is_weakly_degenerate(&g, &both_one).unwrap().is_none());
        let one = SimpleGraph::new(1);
        assert!(is_weakly_degenerate(&one, &ChargeFn::from_values([0])).unwrap().is_some());
    }

    #[test]
    fn cycles_have_weak_degeneracy_two() {
        for n in 3..=9 {
            let g = cycle(n);
            assert_eq!(weak_degeneracy(&g).unwrap().0, 2, "C{n}");
        }
        assert!(is_weakly_degenerate(&cycle(5), &ChargeFn::constant(&cycle(5), 1)).unwrap().is_none());
        assert!(is_weakly_degenerate(&cycle(4), &ChargeFn::constant(&cycle(4), 1)).unwrap().is_none());
    }

    #[test]
    fn cliques_and_petersen() {
        for n in 2..=6 {
            assert_eq!(weak_degeneracy(&clique(n)).unwrap().0, n - 1, "K{n}");
        }
        let p = petersen();
        let (d, w) = weak_degeneracy(&p).unwrap();
        assert_eq!(d, 2);
        verify(&p, &ChargeFn::constant(&p, 2), &w).unwrap();
        assert_eq!(chromatic_number(&p).unwrap(), 3);
        assert_eq!(degeneracy(&p).0, 3);
    }

    #[test]
    fn degeneracy_examples() {
        let tree = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(degeneracy(&tree).0, 1);
        assert_eq!(degeneracy(&cycle(7)).0, 2);
        assert_eq!(degeneracy(&clique(5)).0, 4);
        assert_eq!(degeneracy(&SimpleGraph::new(3)).0, 0);
    }

    #[test]
    fn strong_degeneracy_examples() {
        let p3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_strongly_degenerate(&p3, &ChargeFn::constant(&p3, 1)).unwrap().is_some());
        let c4 = cycle(4);
        assert!(is_strongly_degenerate(&c4, &ChargeFn::constant(&c4, 1)).unwrap().is_none());
        let w = is_strongly_degenerate(&c4, &ChargeFn::constant(&c4, 2)).unwrap().unwrap();
        verify(&c4, &ChargeFn::constant(&c4, 2), &w).unwrap();
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&clique(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&SimpleGraph::new(2)).unwrap(), 1);
    }

    #[test]
    fn option_toggles_agree_on_small_cases() {
        let graphs = [cycle(5), clique(4), petersen()];
        for g in &graphs {
            for d in 0..4 {
                let f = ChargeFn::constant(g, d);
                let base = search(g, &f, SearchOptions::default()).unwrap().witness.is_some();
                for (memo, prune) in [(false, true), (true, false)] {
                    if !memo && g.vertex_count() > 8 {
                        continue;
                    }
                    let o = SearchOptions {
                        memo,
                        prune_saves: prune,
                        blank_only: false,
                    };
                    assert_eq!(search(g, &f, o).unwrap().witness.is_some(), base);
                }
                let strong = search(g, &f, SearchOptions { blank_only: true, ..Default::default() })
                    .unwrap()
                    .witness
                    .is_some();
                assert_eq!(strong, is_strongly_degenerate(g, &f).unwrap().is_some());
            }
        }
    }

    #[test]
    fn rejects_large_graphs() {
        assert_eq!(
            is_weakly_degenerate(&SimpleGraph::new(65), &ChargeFn::from_values(vec![0; 65])),
            Err(SearchError::TooLarge(65))
        );
    }
}
