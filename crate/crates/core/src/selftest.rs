//! Oracle-equivalence suites. Each suite checks one contract of the crate
//! at desk scale and reports counterexamples in edge-list form; the CLI
//! `selftest` subcommand and the acceptance test target both run these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convexity::{
    hull, hull_bruteforce, interval_bruteforce, is_convex, is_independent_def,
};
use crate::decomposition::{
    atoms, enumerate_flowers, is_gamma1, is_gamma2, is_independent_charac,
};
use crate::error::Result;
use crate::gadgets::{alpha, alpha_bruteforce, half_threshold, npc_gadget, split_to_bipartite};
use crate::graph::{
    all_connected, line_graph, random_connected, random_split, random_tree, save_graph, Graph,
    VertexSet,
};
use crate::rank::{
    rank_bruteforce, rank_flower_exact, rank_gamma1, rank_gamma2, rank_line, rank_split,
    rank_tree,
};
use crate::tree_dp::{tree_dp_run_with_order, Inbox};

#[derive(Debug, Clone, Copy)]
pub struct SelftestConfig {
    /// Upper bound on exhaustive enumeration order (full scale: 6).
    pub max_n: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { max_n: 6, seed: 0x5eed }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Suite names in acceptance order.
pub const SUITES: [&str; 12] = [
    "hull",
    "convexity",
    "charac",
    "rank-oracles",
    "tree",
    "gamma1",
    "gamma2",
    "meta",
    "line",
    "split",
    "npc",
    "petals",
];

pub fn run_suite(name: &str, cfg: &SelftestConfig) -> Result<SuiteResult> {
    match name {
        "hull" => suite_hull(cfg),
        "convexity" => suite_convexity(cfg),
        "charac" => suite_charac(cfg),
        "rank-oracles" => suite_rank_oracles(cfg),
        "tree" => suite_tree(cfg),
        "gamma1" => suite_gamma1(cfg),
        "gamma2" => suite_gamma2(cfg),
        "meta" => suite_meta(cfg),
        "line" => suite_line(cfg),
        "split" => suite_split(cfg),
        "npc" => suite_npc(cfg),
        "petals" => suite_petals(cfg),
        other => Err(crate::error::Error::Invalid(format!(
            "unknown suite '{other}' (expected one of {SUITES:?})"
        ))),
    }
}

fn dump(g: &Graph, detail: String) -> String {
    format!("{detail}\n{}", save_graph(g))
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Exhaustive corpus: every connected labeled graph with n ≤ max.
fn exhaustive_connected(max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max.min(6) {
        out.extend(all_connected(n).expect("within cap"));
    }
    out
}

/// Stride-sample the exhaustive family at order n down to ~target graphs.
fn strided_connected(n: usize, target: usize) -> Vec<Graph> {
    let all: Vec<Graph> = all_connected(n).expect("within cap").collect();
    if all.len() <= target {
        return all;
    }
    let step = all.len() / target;
    all.into_iter().step_by(step.max(1)).take(target).collect()
}

/// Criterion 1: the closure computed by `hull` equals the fixpoint of the
/// exhaustive interval oracle.
fn suite_hull(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "hull", checked: 0, failures: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut corpus = exhaustive_connected(cfg.max_n);
    for i in 0..500u64 {
        let n = 5 + (i as usize % 6); // 5..=10
        corpus.push(random_connected(n, 0.3, cfg.seed.wrapping_add(i)));
    }
    for g in &corpus {
        let subsets = if g.n() <= 4 { 1 << g.n() } else { 50 };
        for t in 0..subsets {
            let s = if g.n() <= 4 {
                (0..g.n()).filter(|&v| t >> v & 1 == 1).collect()
            } else {
                random_subset(&mut rng, g.n(), 0.4)
            };
            let (h, _) = hull(g, &s)?;
            let oracle = hull_bruteforce(g, &s)?;
            r.checked += 1;
            if h != oracle {
                r.failures.push(dump(g, format!("hull({s:?}) = {h:?}, oracle {oracle:?}")));
            }
        }
    }
    Ok(r)
}

/// Criterion 2: is_convex agrees with interval closure; cliques are convex;
/// in a prime graph every non-adjacent pair is a hull set.
fn suite_convexity(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "convexity", checked: 0, failures: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut corpus = exhaustive_connected(cfg.max_n);
    for i in 0..500u64 {
        let n = 5 + (i as usize % 6);
        corpus.push(random_connected(n, 0.3, cfg.seed.wrapping_add(1000 + i)));
    }
    for g in &corpus {
        for _ in 0..20 {
            let s = random_subset(&mut rng, g.n(), 0.5);
            let closed = interval_bruteforce(g, &s)? == s;
            r.checked += 1;
            if is_convex(g, &s)? != closed {
                r.failures.push(dump(g, format!("is_convex({s:?}) != interval-closedness")));
            }
            if g.is_clique(&s) && !is_convex(g, &s)? {
                r.failures.push(dump(g, format!("clique {s:?} not convex")));
            }
        }
        // prime graphs: every non-adjacent pair generates everything
        if g.n() >= 2 && atoms(g)?.atoms.len() == 1 {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let pair: VertexSet = [u, v].into_iter().collect();
                    let (h, _) = hull(g, &pair)?;
                    r.checked += 1;
                    if h.len() != g.n() {
                        r.failures.push(dump(g, format!("pair {{{u},{v}}} hull {h:?} != V")));
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Criterion 3: the characterization-based independence test equals the
/// definition on all subsets of all small graphs plus random pairs.
fn suite_charac(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "charac", checked: 0, failures: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    for g in exhaustive_connected(cfg.max_n) {
        for mask in 0u32..(1 << g.n()) {
            let s: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let a = is_independent_charac(&g, &s)?;
            let b = is_independent_def(&g, &s)?;
            r.checked += 1;
            if a != b {
                r.failures.push(dump(&g, format!("charac({s:?})={a}, def={b}")));
            }
        }
    }
    for i in 0..1000u64 {
        let n = 7 + (i as usize % 4); // 7..=10
        let g = random_connected(n, 0.3, cfg.seed.wrapping_add(2000 + i));
        let s = random_subset(&mut rng, n, 0.35);
        let a = is_independent_charac(&g, &s)?;
        let b = is_independent_def(&g, &s)?;
        r.checked += 1;
        if a != b {
            r.failures.push(dump(&g, format!("charac({s:?})={a}, def={b}")));
        }
    }
    Ok(r)
}

/// Criterion 4: flower-enumeration rank equals brute-force rank.
fn suite_rank_oracles(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "rank-oracles", checked: 0, failures: Vec::new() };
    let mut corpus = exhaustive_connected(cfg.max_n.min(5));
    if cfg.max_n >= 6 {
        corpus.extend(strided_connected(6, 2500));
        corpus.extend(strided_connected(7, 2500));
        for i in 0..2500u64 {
            corpus.push(random_connected(8, 0.2 + 0.05 * (i % 8) as f64, cfg.seed.wrapping_add(i)));
        }
    }
    for i in 0..500u64 {
        let n = 9 + (i as usize % 4); // 9..=12
        corpus.push(random_connected(n, 0.3, cfg.seed.wrapping_add(4000 + i)));
    }
    for g in &corpus {
        let rf = rank_flower_exact(g)?;
        let rb = rank_bruteforce(g)?;
        r.checked += 1;
        if rf.value != rb.value {
            r.failures.push(dump(g, format!("flower {} != brute {}", rf.value, rb.value)));
        } else if rf.witness.len() != rf.value || !is_independent_def(g, &rf.witness)? {
            r.failures.push(dump(g, format!("bad flower witness {:?}", rf.witness)));
        }
    }
    Ok(r)
}

/// Criterion 5: tree rank = leaf count, verified against brute force, plus
/// a large-scale timing sanity bound.
fn suite_tree(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "tree", checked: 0, failures: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(5));
    for i in 0..200u64 {
        let n = 2 + (rng.gen_range(0..17usize)); // 2..=18
        let t = random_tree(n, cfg.seed.wrapping_add(5000 + i));
        let rt = rank_tree(&t)?;
        let rb = rank_bruteforce(&t)?;
        r.checked += 1;
        if rt.value != t.leaves().len() || rt.value != rb.value {
            r.failures.push(dump(&t, format!("tree {} leaves {} brute {}", rt.value, t.leaves().len(), rb.value)));
        }
    }
    // n = 10^4 in well under a second
    let big = random_tree(10_000, cfg.seed);
    let start = std::time::Instant::now();
    let rt = rank_tree(&big)?;
    let elapsed = start.elapsed();
    r.checked += 1;
    if rt.value != big.leaves().len() {
        r.failures.push(format!("big tree rank {} != leaf count", rt.value));
    }
    if elapsed.as_secs_f64() >= 1.0 {
        r.failures.push(format!("big tree rank took {elapsed:?} (budget 1 s)"));
    }
    Ok(r)
}

/// Connected bipartite generator: tree plus random cross-class edges.
fn random_bipartite(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = random_tree(n, seed.wrapping_mul(31).wrapping_add(7));
    let color = g.two_coloring().expect("trees are bipartite");
    for u in 0..n {
        for v in u + 1..n {
            if color[u] != color[v] && !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Triangle-free generator by rejection, falling back to a tree.
fn random_triangle_free(n: usize, seed: u64) -> Graph {
    for attempt in 0..50u64 {
        let g = random_connected(n, 0.12, seed.wrapping_add(attempt.wrapping_mul(977)));
        let has_triangle = g.edges().iter().any(|&(u, v)| {
            g.adj(u).intersection(g.adj(v)).next().is_some()
        });
        if !has_triangle {
            return g;
        }
    }
    random_tree(n, seed)
}

/// Criterion 6: the K4-free solver on bipartite, cactus and triangle-free
/// instances, plus the two named regressions.
fn suite_gamma1(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "gamma1", checked: 0, failures: Vec::new() };
    let mut corpus: Vec<Graph> = Vec::new();
    for i in 0..100u64 {
        let n = 4 + (i as usize % 9); // 4..=12
        corpus.push(random_bipartite(n, 0.25, cfg.seed.wrapping_add(6000 + i)));
        corpus.push(crate::graph::random_cactus(n, cfg.seed.wrapping_add(6500 + i)));
        corpus.push(random_triangle_free(n, cfg.seed.wrapping_add(7000 + i)));
    }
    corpus.push(Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()); // K3+pendant -> 3
    corpus.push(Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap()); // C5+pendant -> 3
    for g in &corpus {
        if !is_gamma1(g)? {
            r.failures.push(dump(g, "generated instance is not in the class".into()));
            continue;
        }
        let rg = rank_gamma1(g)?;
        let rb = rank_bruteforce(g)?;
        r.checked += 1;
        if rg.value != rb.value {
            r.failures.push(dump(g, format!("gamma1 {} != brute {}", rg.value, rb.value)));
        } else if !is_independent_def(g, &rg.witness)? {
            r.failures.push(dump(g, format!("bad gamma1 witness {:?}", rg.witness)));
        }
    }
    Ok(r)
}

/// Instances whose atoms meet in a tree: small prime pieces (cliques and
/// cycles) glued at fresh single vertices.
fn random_gamma2_instance(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    // first piece
    let first = (2 + rng.gen_range(0..3usize)).min(n); // 2..=4 vertices
    grow_piece(&mut g, None, first, 0, &mut rng);
    let mut built = first;
    let mut used_anchor: VertexSet = VertexSet::new();
    while built < n {
        let room = n - built;
        let size = (2 + rng.gen_range(0..4usize)).min(room + 1); // piece order incl. anchor
        let anchor = loop {
            let a = rng.gen_range(0..built);
            if !used_anchor.contains(&a) {
                break a;
            }
        };
        grow_piece(&mut g, Some(anchor), size, built, &mut rng);
        used_anchor.insert(anchor);
        built += size - 1;
    }
    debug_assert!(g.is_connected());
    g
}

/// Attach a clique or cycle of `size` vertices, one of them being `anchor`
/// (or all fresh when anchor is None). Fresh ids are `start..`.
fn grow_piece(g: &mut Graph, anchor: Option<usize>, size: usize, start: usize, rng: &mut ChaCha8Rng) {
    let fresh = size - anchor.map_or(0, |_| 1);
    let mut members: Vec<usize> = anchor.into_iter().collect();
    members.extend(start..start + fresh);
    let cycle = size >= 4 && rng.gen_bool(0.5);
    if cycle {
        for w in 0..size {
            g.add_edge(members[w], members[(w + 1) % size]).unwrap();
        }
    } else {
        for a in 0..size {
            for b in a + 1..size {
                g.add_edge(members[a], members[b]).unwrap();
            }
        }
    }
}

/// Criterion 7: the tree-of-atoms solver against the flower oracle,
/// including the regression that needs the per-edge term.
fn suite_gamma2(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "gamma2", checked: 0, failures: Vec::new() };
    let mut corpus: Vec<Graph> = Vec::new();
    for i in 0..300u64 {
        let n = 6 + (i as usize % 9); // 6..=14
        corpus.push(random_gamma2_instance(n, cfg.seed.wrapping_add(8000 + i)));
    }
    let c5p = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
    corpus.push(c5p.clone());
    for g in &corpus {
        if !is_gamma2(g)? {
            r.failures.push(dump(g, "generated instance is not in the class".into()));
            continue;
        }
        let rg = rank_gamma2(g)?;
        let rf = rank_flower_exact(g)?;
        r.checked += 1;
        if rg.value != rf.value {
            r.failures.push(dump(g, format!("gamma2 {} != flower {}", rg.value, rf.value)));
        } else if !is_independent_def(g, &rg.witness)? {
            r.failures.push(dump(g, format!("bad gamma2 witness {:?}", rg.witness)));
        }
    }
    // must be 3, not the 2 that a node-max-only formula reports
    let reg = rank_gamma2(&c5p)?;
    r.checked += 1;
    if reg.value != 3 {
        r.failures.push(dump(&c5p, format!("regression expects 3, got {}", reg.value)));
    }
    Ok(r)
}

/// Criterion 8: exact invocation counts and leaf-order invariance of the
/// tree meta-algorithm.
fn suite_meta(cfg: &SelftestConfig) -> Result<SuiteResult> {
    use rand::seq::SliceRandom;
    let mut r = SuiteResult { name: "meta", checked: 0, failures: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(9));
    for i in 0..40u64 {
        let n = [2usize, 3, 5, 10, 50, 200, 1000][i as usize % 7];
        let t = random_tree(n, cfg.seed.wrapping_add(9000 + i));
        let run = |order: &[usize]| {
            tree_dp_run_with_order(
                &t,
                order,
                &mut |_, _, msgs: &Inbox<usize>| 1 + msgs.iter().map(|(_, &v)| v).sum::<usize>(),
                &mut |_, msgs: &Inbox<usize>| msgs.iter().map(|(_, &v)| v).sum(),
            )
        };
        let base = run(&(0..n).collect::<Vec<usize>>())?;
        r.checked += 1;
        if base.edge_calls != 2 * n - 2 || base.node_calls != n {
            r.failures.push(format!(
                "n={n}: {} edge calls (want {}), {} node calls (want {n})",
                base.edge_calls, 2 * n - 2, base.node_calls
            ));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let shuffled = run(&order)?;
        if shuffled.edge_values != base.edge_values || shuffled.node_values != base.node_values {
            r.failures.push(format!("n={n}: tables depend on the leaf order"));
        }
    }
    Ok(r)
}

/// Criterion 9: the line-graph formula against brute force for every root
/// with ≤ 8 edges that we enumerate, plus named specials; roots are verified
/// inside rank_line by reconstruction.
fn suite_line(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "line", checked: 0, failures: Vec::new() };
    let mut roots: Vec<Graph> = Vec::new();
    for n in 2..=cfg.max_n.min(6) {
        roots.extend(all_connected(n).expect("within cap").filter(|g| g.m() <= 8));
    }
    for i in 0..300u64 {
        let n = 7 + (i as usize % 3); // 7..=9
        let g = random_tree(n, cfg.seed.wrapping_add(9500 + i));
        roots.push(g); // trees on ≤9 vertices have ≤8 edges
    }
    for i in 0..200u64 {
        let n = 7 + (i as usize % 2);
        let g = random_connected(n, 0.08, cfg.seed.wrapping_add(9800 + i));
        if g.m() <= 8 {
            roots.push(g);
        }
    }
    roots.push(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()); // K1,3
    roots.push(Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()); // K3
    roots.push(Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()); // P4
    roots.push(Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()); // C5
    roots.push(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()); // K4
    for h in &roots {
        if h.m() == 0 {
            continue;
        }
        let (lg, _) = line_graph(h)?;
        let rl = rank_line(&lg)?;
        let rb = rank_bruteforce(&lg)?;
        r.checked += 1;
        if rl.value != rb.value {
            r.failures.push(dump(h, format!("line formula {} != brute {} (root above)", rl.value, rb.value)));
        } else if !is_independent_def(&lg, &rl.witness)? {
            r.failures.push(dump(&lg, format!("bad line witness {:?}", rl.witness)));
        }
    }
    Ok(r)
}

/// Criterion 10: the split solver against brute force, and the two
/// independence-number oracles against each other.
fn suite_split(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "split", checked: 0, failures: Vec::new() };
    for i in 0..300u64 {
        let n = 4 + (i as usize % 9); // 4..=12
        let g = random_split(n, cfg.seed.wrapping_add(10_000 + i));
        let rs = rank_split(&g)?;
        let rb = rank_bruteforce(&g)?;
        r.checked += 1;
        if rs.value != rb.value {
            r.failures.push(dump(&g, format!("split {} != brute {}", rs.value, rb.value)));
            continue;
        }
        if !is_independent_def(&g, &rs.witness)? {
            r.failures.push(dump(&g, format!("bad split witness {:?}", rs.witness)));
        }
        let out = split_to_bipartite(&g)?;
        let a1 = alpha(&out.graph)?;
        let a2 = alpha_bruteforce(&out.graph)?;
        if a1 != a2 || a1 != rs.value {
            r.failures.push(dump(&g, format!("alpha mismatch: clique-compl {a1}, subsets {a2}, rank {}", rs.value)));
        }
    }
    Ok(r)
}

/// Criterion 11: gadget shape and the independence biconditional on every
/// connected source with 2 or 3 vertices.
fn suite_npc(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let _ = cfg;
    let mut r = SuiteResult { name: "npc", checked: 0, failures: Vec::new() };
    let mut sources: Vec<Graph> = vec![Graph::from_edges(2, &[(0, 1)]).unwrap()];
    sources.extend(all_connected(3).expect("within cap"));
    for g in &sources {
        let n = g.n();
        let inst = npc_gadget(g, 2)?;
        r.checked += 1;
        if inst.graph.n() != 4 * n * n + n {
            r.failures.push(dump(g, format!("gadget order {} != 4n^2+n", inst.graph.n())));
            continue;
        }
        let p = inst.threshold.expect("threshold set");
        if p != n + (4 * n - 1) * half_threshold(n) {
            r.failures.push(dump(g, format!("threshold {p} is off")));
        }
        // two w-groups are at distance 3 exactly when their source vertices
        // have no common neighbor; otherwise everything meets inside U at
        // distance 2 (so complete sources give diameter 2, not 3)
        let spread = (0..n)
            .any(|i| (i + 1..n).any(|j| g.adj(i).intersection(g.adj(j)).next().is_none()));
        let want = if spread { 3 } else { 2 };
        if inst.graph.diameter()? != want {
            r.failures.push(dump(g, format!("gadget diameter != {want}")));
        }
        if !crate::graph::is_chordal(&inst.graph) {
            r.failures.push(dump(g, "gadget not chordal".into()));
        }
        let d = atoms(&inst.graph)?;
        if d.atoms.iter().any(|a| !inst.graph.is_clique(&a.vertices)) {
            r.failures.push(dump(g, "gadget has a non-clique atom".into()));
        }
        let rank = rank_flower_exact(&inst.graph)?.value;
        let lhs = rank >= p;
        let rhs = alpha(g)? >= half_threshold(n);
        if lhs != rhs {
            r.failures.push(dump(
                g,
                format!("biconditional broken: rank {rank} vs p {p}, alpha {} vs {}", alpha(g)?, half_threshold(n)),
            ));
        }
    }
    Ok(r)
}

/// Criterion 12: peeling never increases the petal count.
fn suite_petals(cfg: &SelftestConfig) -> Result<SuiteResult> {
    let mut r = SuiteResult { name: "petals", checked: 0, failures: Vec::new() };
    let mut corpus = exhaustive_connected(cfg.max_n.min(5));
    corpus.extend(strided_connected(6, 1000));
    for i in 0..300u64 {
        let n = 7 + (i as usize % 2);
        corpus.push(random_connected(n, 0.3, cfg.seed.wrapping_add(11_000 + i)));
    }
    for g in &corpus {
        let flowers = enumerate_flowers(g, 20_000)?;
        let root = flowers[0].petals(g).len();
        r.checked += 1;
        for f in &flowers {
            if f.petals(g).len() > root {
                r.failures.push(dump(g, format!("flower {:?} has more petals than the whole graph", f.alive)));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smoke-run every suite at reduced scale; the acceptance target runs
    /// them at full scale.
    #[test]
    fn suites_pass_at_small_scale() {
        let cfg = SelftestConfig { max_n: 4, seed: 1 };
        for name in SUITES {
            let res = run_suite(name, &cfg).unwrap();
            assert!(res.checked > 0, "{name} checked nothing");
            assert!(res.passed(), "{name}: {:?}", res.failures.first());
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &SelftestConfig::default()).is_err());
    }

    #[test]
    fn gamma2_generator_lands_in_class() {
        for seed in 0..60 {
            let g = random_gamma2_instance(6 + (seed as usize % 9), seed);
            assert!(is_gamma2(&g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn bipartite_and_triangle_free_generators() {
        for seed in 0..30 {
            assert!(random_bipartite(9, 0.3, seed).is_bipartite());
            let g = random_triangle_free(9, seed);
            assert!(g.edges().iter().all(|&(u, v)| g.adj(u).intersection(g.adj(v)).next().is_none()));
        }
    }
}
