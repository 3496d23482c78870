//! Canonical labeling for small graphs (refinement plus backtracking over the
//! smallest cell), exact isomorphism, and the Heawood-graph test.

use super::Graph;

/// Canonical form: the lexicographically smallest upper-triangle bit string of
/// the adjacency matrix over all labelings reachable by
/// individualization-refinement. Exact for the sizes used here (enumeration
/// caps at n <= 14, catalog graphs at n <= 26).
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let color = refine(g, (0..n).map(|v| g.degree(v) as u32).collect());
    let mut best: Option<Vec<u64>> = None;
    ir_search(g, color, &mut best);
    best.unwrap()
}

/// Iterated refinement: split color classes by the multiset of neighbor
/// colors until stable. Equivariant under isomorphism.
fn refine(g: &Graph, mut color: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    loop {
        let sig: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<u32> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
        let mut new_color = vec![0u32; n];
        let mut c = 0;
        for i in 1..n {
            if sig[order[i]] != sig[order[i - 1]] {
                c += 1;
            }
            new_color[order[i]] = c;
        }
        if new_color == color {
            return color;
        }
        color = new_color;
    }
}

/// Individualize one vertex of the first non-singleton class, refine, recurse;
/// discrete colorings are permutations, whose bit strings compete for minimum.
fn ir_search(g: &Graph, color: Vec<u32>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    // find the smallest non-singleton color class
    let mut counts = vec![0usize; n];
    for &c in &color {
        counts[c as usize] += 1;
    }
    let target = (0..n).map(|c| c as u32).find(|&c| counts[c as usize] > 1);
    let Some(target) = target else {
        // discrete: vertex with color c gets label c
        let mut perm = vec![0usize; n];
        for (v, &c) in color.iter().enumerate() {
            perm[v] = c as usize;
        }
        let bits = bits_under(g, &perm);
        if best.as_ref().map_or(true, |b| bits < *b) {
            *best = Some(bits);
        }
        return;
    };
    for v in 0..n {
        if color[v] != target {
            continue;
        }
        // give v its own class just below the rest of its cell
        let mut c2: Vec<u32> = color.iter().map(|&c| 2 * c + 1).collect();
        c2[v] = 2 * color[v];
        ir_search(g, refine(g, c2), best);
    }
}

fn bits_under(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(inv[i], inv[j]) {
                bits[idx / 64] |= 1 << (63 - (idx % 64));
            }
            idx += 1;
        }
    }
    bits
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

/// True iff `g` is the Heawood graph: screened by order, regularity,
/// bipartiteness and girth, then settled by canonical labeling.
pub fn is_heawood(g: &Graph) -> bool {
    if g.n() != 14 || g.edge_count() != 21 || g.max_degree() != 3 {
        return false;
    }
    if g.degree_sequence() != vec![3; 14] || !g.is_bipartite() {
        return false;
    }
    if super::cycles::girth(g) != Some(6) {
        return false;
    }
    is_isomorphic(g, &crate::catalog::heawood())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn canonical_form_invariance() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let canon = canonical_form(&g);
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)), canon);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p4 = Graph::path(4);
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star));
        let c6 = Graph::cycle(6);
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
        assert_eq!(
            two_triangles.degree_sequence(),
            c6.degree_sequence(),
            "same degrees, different graphs"
        );
    }

    #[test]
    fn heawood_detection() {
        let h = crate::catalog::heawood();
        assert!(is_heawood(&h));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..14).collect();
            perm.shuffle(&mut rng);
            assert!(is_heawood(&h.relabel(&perm)));
        }
        assert!(!is_heawood(&Graph::cycle(14)));
        assert!(!is_heawood(&Graph::complete_bipartite(7, 7)));
    }
}
