//! The acceptance suite, shared by the `acceptance` test target and
//! `wdeg selfcheck`.

use std::fmt;
use std::time::{Duration, Instant};

use crate::coloring::{color_from_witness, validate_coloring, ListAssignment, RandomChooser};
use crate::delsave::{dominance_check, project, reuse_monotone, verify, ChargeFn, Move, Witness};
use crate::exact::{
    chromatic_number, degeneracy, is_strongly_degenerate, is_weakly_degenerate, search,
    weak_degeneracy, SearchOptions,
};
use crate::gen::{
    apollonian, clique, cycle, gnp, icosahedron, petersen, random_triangulation, sample_instance,
    triangulated_grid, wheel, SplitMix64,
};
use crate::graph::SimpleGraph;
use crate::plane::PlaneGraph;
use crate::witness::{make_instance, witness, witness_planar_4};

/// Wall-clock limit for one corpus graph in criterion 1.
pub const PER_GRAPH_LIMIT: Duration = Duration::from_secs(5);
/// Wall-clock limit for all exact values of criterion 3.
pub const EXACT_VALUES_LIMIT: Duration = Duration::from_secs(120);
/// Random instances per property in criterion 5.
pub const PROPERTY_CASES: usize = 500;
/// Random list assignments per corpus graph in criterion 6.
pub const LIST_TRIALS: usize = 100;
/// Random triangulations in criterion 7.
pub const CROSS_CASES: usize = 200;
/// Random graphs in criterion 8.
pub const TOGGLE_CASES: usize = 100;

#[derive(Clone, Debug)]
pub struct Check {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}. {}: {}", self.id, self.title, self.detail)
    }
}

fn check(id: u8, title: &'static str, failures: &[String], ok_detail: String) -> Check {
    let passed = failures.is_empty();
    let detail = if passed {
        ok_detail
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        format!("{} failures, first: {}", failures.len(), shown.join("; "))
    };
    Check {
        id,
        title,
        passed,
        detail,
    }
}

/// The plane corpus: wheels with 4 to 50 rim vertices, Apollonian
/// triangulations on 10, 50, 200 and 500 vertices (seeds 1 to 5), the 10x10
/// triangulated grid, the icosahedron, and 200 flipped triangulations on 4
/// to 12 vertices.
pub fn corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = Vec::new();
    for n in 4..=50 {
        out.push((format!("wheel {n}"), wheel(n).unwrap()));
    }
    for n in [10, 50, 200, 500] {
        for seed in 1..=5 {
            out.push((format!("apollonian {n} seed {seed}"), apollonian(n, seed).unwrap()));
        }
    }
    out.push(("grid 10x10".into(), triangulated_grid(10, 10).unwrap()));
    out.push(("icosahedron".into(), icosahedron()));
    for seed in 0..200u64 {
        let n = 4 + (seed as usize % 9);
        out.push((
            format!("triangulation {n} seed {seed}"),
            random_triangulation(n, seed).unwrap(),
        ));
    }
    out
}

/// Every corpus graph gets a witness that verifies under the constant 4.
pub fn planar_corpus(corpus: &[(String, PlaneGraph)]) -> Check {
    let mut failures = Vec::new();
    let mut slowest = (Duration::ZERO, String::new());
    for (name, g) in corpus {
        let t = Instant::now();
        let res = witness_planar_4(g);
        let dt = t.elapsed();
        if let Err(e) = res {
            failures.push(format!("{name}: {e}"));
        } else if dt > PER_GRAPH_LIMIT {
            failures.push(format!("{name}: {dt:?} over {PER_GRAPH_LIMIT:?}"));
        }
        if dt > slowest.0 {
            slowest = (dt, name.clone());
        }
    }
    check(
        1,
        "plane corpus is weakly 4-degenerate",
        &failures,
        format!(
            "{} graphs verified under f=4, slowest {} in {:?}",
            corpus.len(),
            slowest.1,
            slowest.0
        ),
    )
}

/// The icosahedron needs saves: degeneracy 5, no Delete-only witness under
/// the constant 4, yet the engine finds one with saves.
pub fn saves_are_essential() -> Check {
    let ico = icosahedron();
    let g = ico.graph();
    let mut failures = Vec::new();
    let (d, _) = degeneracy(g);
    if d != 5 {
        failures.push(format!("degeneracy {d}, expected 5"));
    }
    match is_strongly_degenerate(g, &ChargeFn::constant(g, 4)) {
        Ok(None) => {}
        Ok(Some(_)) => failures.push("strongly 4-degenerate".into()),
        Err(e) => failures.push(e.to_string()),
    }
    let saves = match witness_planar_4(&ico) {
        Ok(out) => out.witness.save_count(),
        Err(e) => {
            failures.push(format!("engine: {e}"));
            0
        }
    };
    check(
        2,
        "saves are essential on the icosahedron",
        &failures,
        format!("degeneracy 5, not strongly 4-degenerate, engine witness uses {saves} saves"),
    )
}

/// `wd(C_n) = 2` for `3 <= n <= 10`, `wd(K_n) = n - 1` for `2 <= n <= 6`,
/// and `wd(Petersen) = 2`.
pub fn exact_values() -> Check {
    let t = Instant::now();
    let mut cases: Vec<(String, SimpleGraph, usize)> = Vec::new();
    for n in 3..=10 {
        cases.push((format!("C{n}"), cycle(n).unwrap().graph().clone(), 2));
    }
    for n in 2..=6 {
        cases.push((format!("K{n}"), clique(n), n - 1));
    }
    cases.push(("Petersen".into(), petersen(), 2));
    let mut failures = Vec::new();
    for (name, g, want) in &cases {
        match weak_degeneracy(g) {
            Ok((d, w)) => {
                if d != *want {
                    failures.push(format!("{name}: wd {d}, expected {want}"));
                } else if let Err(e) = verify(g, &ChargeFn::constant(g, d as i64), &w) {
                    failures.push(format!("{name}: witness rejected: {e}"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let dt = t.elapsed();
    if dt > EXACT_VALUES_LIMIT {
        failures.push(format!("took {dt:?}, limit {EXACT_VALUES_LIMIT:?}"));
    }
    check(
        3,
        "exact weak degeneracy values",
        &failures,
        format!("{} graphs match in {dt:?}", cases.len()),
    )
}

/// On `K_2 = uw`, the witness `DelSave(u, w), Delete(w)` is legal under
/// `f = (1, 0)` and under `f' = (1, 1)`, and `w` holds charge 0 when it is
/// deleted in both runs.
pub fn k2_larger_charges() -> Check {
    let g = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
    let wit = Witness::new(vec![Move::save(0, 1), Move::delete(1)]);
    let mut failures = Vec::new();
    let mut at_w = Vec::new();
    for vals in [[1, 0], [1, 1]] {
        match verify(&g, &ChargeFn::from_values(vals), &wit) {
            Ok(tr) => {
                let c = tr.steps[1].charge_before;
                at_w.push(c);
                if c != 0 {
                    failures.push(format!("f={vals:?}: w has charge {c} at deletion"));
                }
            }
            Err(e) => failures.push(format!("f={vals:?}: {e}")),
        }
    }
    check(
        4,
        "K2 save under larger charges",
        &failures,
        format!("both runs legal, charge of w at deletion {at_w:?}"),
    )
}

fn random_small_graph(rng: &mut SplitMix64, max_n: usize) -> SimpleGraph {
    let n = 1 + rng.below(max_n);
    let p = rng.unit();
    gnp(n, p, rng.next_u64())
}

fn random_charges(g: &SimpleGraph, hi: i64, rng: &mut SplitMix64) -> ChargeFn {
    let mut f = ChargeFn::new(g.capacity());
    for v in g.vertices() {
        f.set(v, rng.below(hi as usize + 1) as i64);
    }
    f
}

/// A random charge function with a witness; falls back to `f(v) = deg(v)`,
/// under which any order of deletions is legal.
fn verified_instance(g: &SimpleGraph, rng: &mut SplitMix64) -> (ChargeFn, Witness) {
    let f = random_charges(g, 3, rng);
    if let Some(w) = is_weakly_degenerate(g, &f).expect("small graph") {
        return (f, w);
    }
    let mut f = ChargeFn::new(g.capacity());
    for v in g.vertices() {
        f.set(v, g.degree(v) as i64);
    }
    let w = Witness::new(g.vertices().map(Move::delete).collect());
    (f, w)
}

/// Monotone reuse, projection with dominance, `wd <= d` and `chi <= wd + 1`
/// on random graphs with at most 8 vertices.
pub fn properties(seed: u64) -> Check {
    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    for k in 0..PROPERTY_CASES {
        let g = random_small_graph(&mut rng, 8);
        let (f, w) = verified_instance(&g, &mut rng);
        let mut f2 = f.clone();
        for (v, x) in f.iter() {
            f2.set(v, x + rng.below(3) as i64);
        }
        if let Err(e) = reuse_monotone(&g, &f, &f2, &w) {
            failures.push(format!("reuse case {k}: {e}"));
        }
    }
    for k in 0..PROPERTY_CASES {
        let g = random_small_graph(&mut rng, 8);
        let (f, w) = verified_instance(&g, &mut rng);
        let mut sub = g.clone();
        for (u, v) in g.edges() {
            if rng.below(2) == 0 {
                sub.remove_edge(u, v);
            }
        }
        match project(&w, &g, &sub, &f) {
            Ok(pw) => {
                let ts = verify(&g, &f, &w).expect("checked by project");
                let tp = verify(&sub, &f, &pw).expect("checked by project");
                if !dominance_check(&tp, &ts) {
                    failures.push(format!("projection case {k}: dominance fails"));
                }
            }
            Err(e) => failures.push(format!("projection case {k}: {e}")),
        }
    }
    for k in 0..PROPERTY_CASES {
        let g = random_small_graph(&mut rng, 8);
        let (d, _) = degeneracy(&g);
        let wd = weak_degeneracy(&g).expect("small graph").0;
        let chi = chromatic_number(&g).expect("small graph");
        if wd > d {
            failures.push(format!("case {k}: wd {wd} > d {d}"));
        }
        if chi > wd + 1 {
            failures.push(format!("case {k}: chi {chi} > wd + 1 = {}", wd + 1));
        }
    }
    check(
        5,
        "reuse, projection and coloring bounds",
        &failures,
        format!("{PROPERTY_CASES} cases per property"),
    )
}

/// 100 random 5-lists from 10 colors per corpus graph, colored along the
/// engine witness with a random chooser.
pub fn list_coloring(corpus: &[(String, PlaneGraph)], seed: u64) -> Check {
    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    let mut runs = 0;
    for (name, pg) in corpus {
        let g = pg.graph();
        let f = ChargeFn::constant(g, 4);
        let wit = match witness_planar_4(pg) {
            Ok(out) => out.witness,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        for t in 0..LIST_TRIALS {
            let lists = ListAssignment::random(g, 5, 10, &mut rng);
            let mut chooser = RandomChooser(SplitMix64::new(rng.next_u64()));
            runs += 1;
            match color_from_witness(g, &f, &wit, &lists, &mut chooser) {
                Ok(c) if validate_coloring(g, &c, Some(&lists)) => {}
                Ok(_) => failures.push(format!("{name} trial {t}: invalid coloring")),
                Err(e) => failures.push(format!("{name} trial {t}: {e}")),
            }
        }
    }
    check(
        6,
        "5-list-coloring from witnesses",
        &failures,
        format!("{runs} list assignments colored and validated"),
    )
}

/// Random triangulations on 4 to 9 vertices with sampled `(S, I)`: the
/// engine succeeds and exhaustive search agrees.
pub fn cross_oracle(seed: u64) -> Check {
    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    let mut with_s = 0;
    for k in 0..CROSS_CASES {
        let n = 4 + rng.below(6);
        let g = random_triangulation(n, rng.next_u64()).unwrap();
        let (s, i) = sample_instance(&g, &mut rng);
        let inst = match make_instance(g, &s, &i) {
            Ok(inst) => inst,
            Err(e) => {
                failures.push(format!("case {k}: sampler produced {e}"));
                continue;
            }
        };
        if !s.is_empty() || !i.is_empty() {
            with_s += 1;
        }
        let res = inst.residual();
        if let Err(e) = witness(&inst) {
            failures.push(format!("case {k}: engine: {e}"));
        }
        match is_weakly_degenerate(&res, inst.charges()) {
            Ok(Some(_)) => {}
            Ok(None) => failures.push(format!("case {k}: search finds no witness")),
            Err(e) => failures.push(format!("case {k}: {e}")),
        }
    }
    check(
        7,
        "engine and search agree",
        &failures,
        format!("{CROSS_CASES} instances, {with_s} with nonempty S or I"),
    )
}

/// Memoization and save pruning do not change any verdict.
pub fn search_toggles(seed: u64) -> Check {
    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    let mut verdicts = 0;
    for k in 0..TOGGLE_CASES {
        let g = random_small_graph(&mut rng, 7);
        let mut fs: Vec<ChargeFn> = (0..4).map(|d| ChargeFn::constant(&g, d)).collect();
        fs.push(random_charges(&g, 3, &mut rng));
        fs.push(random_charges(&g, 3, &mut rng));
        for f in &fs {
            let mut seen = Vec::new();
            for memo in [true, false] {
                for prune_saves in [true, false] {
                    let opts = SearchOptions {
                        memo,
                        prune_saves,
                        ..SearchOptions::default()
                    };
                    let out = search(&g, f, opts).expect("small graph");
                    seen.push(out.witness.is_some());
                }
            }
            verdicts += seen.len();
            if seen.iter().any(|&b| b != seen[0]) {
                failures.push(format!("case {k}: verdicts {seen:?}"));
            }
        }
    }
    check(
        8,
        "search toggles agree",
        &failures,
        format!("{TOGGLE_CASES} graphs, {verdicts} verdicts identical"),
    )
}

/// Runs all eight checks in order, calling `report` after each.
pub fn run_all(mut report: impl FnMut(&Check)) -> Vec<Check> {
    let corpus = corpus();
    let steps: Vec<Box<dyn Fn() -> Check + '_>> = vec![
        Box::new(|| planar_corpus(&corpus)),
        Box::new(saves_are_essential),
        Box::new(exact_values),
        Box::new(k2_larger_charges),
        Box::new(|| properties(5)),
        Box::new(|| list_coloring(&corpus, 6)),
        Box::new(|| cross_oracle(7)),
        Box::new(|| search_toggles(8)),
    ];
    steps
        .iter()
        .map(|s| {
            let c = s();
            report(&c);
            c
        })
        .collect()
}
