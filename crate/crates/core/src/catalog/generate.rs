//! Test-corpus generators: seeded random connected bipartite subcubic graphs
//! (optionally of girth at least six) and exhaustive enumeration of all
//! connected bipartite subcubic graphs up to isomorphism.

use crate::graph::{canonical_form, Graph};
use crate::{Error, Result};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

#[derive(Clone, Debug)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    pub connected: bool,
    /// Only a floor of 6 is meaningful here (no 4-cycles).
    pub min_girth: Option<usize>,
    /// Edge-addition attempts beyond the spanning tree, as a multiple of n.
    pub extra_edge_attempts_per_vertex: usize,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            n,
            seed,
            connected: true,
            min_girth: None,
            extra_edge_attempts_per_vertex: 3,
        }
    }

    pub fn with_girth_at_least_six(mut self) -> GeneratorConfig {
        self.min_girth = Some(6);
        self
    }
}

/// Random connected bipartite graph with max degree 3, deterministic per seed.
/// A degree-capped random tree guarantees connectivity; extra edges are added
/// only where they respect the bipartition, the degree cap, and the girth
/// floor (an edge u-v creates a cycle of length dist(u,v)+1).
pub fn random_bipartite_subcubic(cfg: &GeneratorConfig) -> Result<Graph> {
    if cfg.n == 0 {
        return Err(Error::InfeasibleConfig("n must be at least 1".into()));
    }
    if let Some(gf) = cfg.min_girth {
        if gf > 6 {
            return Err(Error::InfeasibleConfig(format!(
                "girth floor {gf} not supported (max 6)"
            )));
        }
    }
    let n = cfg.n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut degree = vec![0usize; n];
    let mut color = vec![0u8; n];
    for v in 1..n {
        // attach to a random earlier vertex with spare degree; vertex v-1
        // always has spare degree in a tree built this way unless full, so
        // retry until one is found
        let u = loop {
            let cand = rng.gen_range(0..v);
            if degree[cand] < if v >= 2 { 3 } else { 3 } {
                break cand;
            }
        };
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
        color[v] = 1 - color[u];
    }
    let mut g = Graph::from_edge_list(n, &edges)?;
    let attempts = cfg.extra_edge_attempts_per_vertex * n;
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || color[u] == color[v] || degree[u] >= 3 || degree[v] >= 3 || g.has_edge(u, v) {
            continue;
        }
        if let Some(gf) = cfg.min_girth {
            let dist = g.distances_from(u)[v];
            if dist + 1 < gf {
                continue;
            }
        }
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
        g = Graph::from_edge_list(n, &edges)?;
    }
    debug_assert!(g.is_subcubic() && g.is_bipartite());
    debug_assert!(!cfg.connected || g.is_connected());
    Ok(g)
}

/// Convenience: a deterministic corpus of graphs with assorted sizes.
pub fn corpus(count: usize, n_lo: usize, n_hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = n_lo + (i * 7919) % (n_hi - n_lo + 1);
            let cfg = GeneratorConfig::new(n, rng.gen());
            random_bipartite_subcubic(&cfg).unwrap()
        })
        .collect()
}

pub const ENUMERATION_BOUND: usize = 14;

/// Every connected bipartite graph with max degree 3 on `1..=n_max` vertices,
/// exactly once up to isomorphism. Graphs are produced level by level (all
/// graphs on k vertices before any on k+1) in canonical-form order, so the
/// stream is deterministic and restartable by order.
pub fn enumerate_bipartite_subcubic(n_max: usize) -> Result<Enumerator> {
    if n_max > ENUMERATION_BOUND {
        return Err(Error::SizeBound {
            n: n_max,
            bound: ENUMERATION_BOUND,
        });
    }
    Ok(Enumerator {
        n_max,
        level: vec![Graph::empty(1)],
        queue: vec![Graph::empty(1)],
        next_n: 2,
    })
}

pub struct Enumerator {
    n_max: usize,
    /// graphs of the most recently completed level
    level: Vec<Graph>,
    /// graphs not yet yielded, in reverse order
    queue: Vec<Graph>,
    next_n: usize,
}

impl Iterator for Enumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.queue.pop() {
                return Some(g);
            }
            if self.next_n > self.n_max {
                return None;
            }
            let next = extend_level(&self.level);
            self.level = next.clone();
            self.queue = next;
            self.queue.reverse();
            self.next_n += 1;
        }
    }
}

/// All one-vertex extensions of the level, deduplicated by canonical form and
/// sorted by it. Every connected graph on k+1 vertices arises from a
/// connected graph on k vertices by deleting a non-cut vertex, so extending
/// every level-k graph by one new vertex joined to 1..=3 existing vertices
/// (keeping the bipartite and degree constraints) reaches everything.
fn extend_level(level: &[Graph]) -> Vec<Graph> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<(Vec<u64>, Graph)> = Vec::new();
    for g in level {
        let k = g.n();
        let spare: Vec<usize> = (0..k).filter(|&v| g.degree(v) < 3).collect();
        let mut base: Vec<(usize, usize)> = g.edges().collect();
        for subset in subsets_up_to_3(&spare) {
            let mut edges = base.clone();
            for &u in &subset {
                edges.push((u, k));
            }
            let Ok(candidate) = Graph::from_edge_list(k + 1, &edges) else {
                continue;
            };
            if !candidate.is_bipartite() {
                continue;
            }
            let canon = canonical_form(&candidate);
            if seen.insert(canon.clone()) {
                out.push((canon, candidate));
            }
            edges.truncate(base.len());
        }
        base.clear();
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

fn subsets_up_to_3(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let m = items.len();
    for i in 0..m {
        out.push(vec![items[i]]);
        for j in i + 1..m {
            out.push(vec![items[i], items[j]]);
            for l in j + 1..m {
                out.push(vec![items[i], items[j], items[l]]);
            }
        }
    }
    out
}

/// Brute-force oracle for small n: every labeled graph on exactly `n`
/// vertices with max degree 3, filtered to connected bipartite, deduplicated
/// by canonical form. Exponential; for cross-checking the enumerator only.
pub fn brute_force_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    fn rec(
        i: usize,
        pairs: &[(usize, usize)],
        n: usize,
        degree: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        seen: &mut HashSet<Vec<u64>>,
    ) {
        if i == pairs.len() {
            let g = Graph::from_edge_list(n, edges).unwrap();
            if g.is_connected() && g.is_bipartite() {
                seen.insert(canonical_form(&g));
            }
            return;
        }
        rec(i + 1, pairs, n, degree, edges, seen);
        let (u, v) = pairs[i];
        if degree[u] < 3 && degree[v] < 3 {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
            rec(i + 1, pairs, n, degree, edges, seen);
            edges.pop();
            degree[u] -= 1;
            degree[v] -= 1;
        }
    }
    rec(0, &pairs, n, &mut degree, &mut edges, &mut seen);
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic() {
        let cfg = GeneratorConfig::new(14, 1);
        let a = random_bipartite_subcubic(&cfg).unwrap();
        let b = random_bipartite_subcubic(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn generator_respects_constraints() {
        for seed in 0..50 {
            let g = random_bipartite_subcubic(&GeneratorConfig::new(20, seed)).unwrap();
            assert!(g.is_subcubic());
            assert!(g.is_bipartite());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn girth_constrained_samples_have_no_short_cycles() {
        for seed in 0..30 {
            let cfg = GeneratorConfig::new(24, seed).with_girth_at_least_six();
            let g = random_bipartite_subcubic(&cfg).unwrap();
            if let Some(girth) = crate::graph::girth(&g) {
                assert!(girth >= 6, "seed {seed} girth {girth}");
            }
        }
    }

    #[test]
    fn enumeration_small_counts() {
        let by_n = |n: usize| {
            enumerate_bipartite_subcubic(n)
                .unwrap()
                .filter(|g| g.n() == n)
                .count()
        };
        assert_eq!(by_n(1), 1);
        assert_eq!(by_n(2), 1);
        assert_eq!(by_n(3), 1); // the path
        assert_eq!(by_n(4), 3); // path, star, 4-cycle
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=7 {
            let fast = enumerate_bipartite_subcubic(n)
                .unwrap()
                .filter(|g| g.n() == n)
                .count();
            assert_eq!(fast, brute_force_count(n), "n={n}");
        }
    }

    #[test]
    fn rejects_oversize() {
        assert!(enumerate_bipartite_subcubic(15).is_err());
        assert!(random_bipartite_subcubic(&GeneratorConfig::new(0, 1)).is_err());
    }
}
