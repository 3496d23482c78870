//! 2-induced paths inside balls of bipartite girth >= 6 graphs.
//!
//! Given x, y in the ball of radius r around v0, produce a path from x to y
//! with no 1-chord and no 2-chord, contained in the ball of radius r+1. The
//! construction follows shortest paths toward v0 with a maximized common
//! suffix, then a single 2-chord repair; when the tie-breaks leave a chord
//! standing, a bounded exhaustive search over the ball finishes the job.

use super::{Graph, VertexSet};

/// Returns the path as a vertex sequence from `x` to `y`, or `None` when the
/// preconditions fail (not bipartite, girth < 6, or x/y outside the ball).
pub fn find_2_induced_path(
    g: &Graph,
    v0: usize,
    r: usize,
    x: usize,
    y: usize,
) -> Option<Vec<usize>> {
    if g.bipartition().is_none() {
        return None;
    }
    if let Some(girth) = super::cycles::girth(g) {
        if girth < 6 {
            return None;
        }
    }
    let ball_r = g.ball(v0, r);
    if !ball_r.contains(x) || !ball_r.contains(y) {
        return None;
    }
    if x == y {
        return Some(vec![x]);
    }
    let ball_big = g.ball(v0, r + 1);

    if let Some(p) = constructive(g, v0, x, y) {
        if inside(&p, &ball_big) && is_clean(g, &p) {
            return Some(p);
        }
    }
    // Fall back to exhaustive search restricted to the larger ball, shortest first.
    exhaustive(g, &ball_big, x, y)
}

fn inside(path: &[usize], ball: &VertexSet) -> bool {
    path.iter().all(|&v| ball.contains(v))
}

/// No 1-chord and no 2-chord. A 1-chord is an edge between non-consecutive
/// path vertices; a 2-chord is an off-path vertex adjacent to two distinct
/// path vertices.
fn is_clean(g: &Graph, path: &[usize]) -> bool {
    let pos: std::collections::HashMap<usize, usize> =
        path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if pos.len() != path.len() {
        return false;
    }
    for (i, &u) in path.iter().enumerate() {
        for &w in g.neighbors(u) {
            if let Some(&j) = pos.get(&w) {
                if j.abs_diff(i) != 1 {
                    return false;
                }
            }
        }
        for &m in g.neighbors(u) {
            if pos.contains_key(&m) {
                continue;
            }
            for &w in g.neighbors(m) {
                if let Some(&j) = pos.get(&w) {
                    if j != i {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Shortest paths to v0 with maximized shared suffix, then one repair pass.
fn constructive(g: &Graph, v0: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let d0 = g.distances_from(v0);
    let dx = g.distances_from(x);
    let dy = g.distances_from(y);
    if d0[x] == usize::MAX || d0[y] == usize::MAX {
        return None;
    }
    // Meeting vertex z: on shortest paths from both x and y to v0, as deep as
    // possible (maximal d0[z]), ties broken by vertex index.
    let mut z_best: Option<usize> = None;
    for z in 0..g.n() {
        if dx[z] == usize::MAX || dy[z] == usize::MAX || d0[z] == usize::MAX {
            continue;
        }
        if dx[z] + d0[z] == d0[x] && dy[z] + d0[z] == d0[y] {
            if z_best.map_or(true, |b| (d0[z], std::cmp::Reverse(z)) > (d0[b], std::cmp::Reverse(b)))
            {
                z_best = Some(z);
            }
        }
    }
    let z = z_best?;
    let seg_x = shortest_path(g, &dx, x, z)?;
    let seg_y = shortest_path(g, &dy, y, z)?;
    let mut path = seg_x;
    path.extend(seg_y.iter().rev().take(seg_y.len() - 1));
    // Repair: replace one 2-chord u-w-v (deepest u) by the chord itself.
    for _ in 0..g.n() {
        if is_clean(g, &path) {
            return Some(path);
        }
        let pos: std::collections::HashMap<usize, usize> =
            path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut repair: Option<(usize, usize, usize)> = None;
        for (i, &u) in path.iter().enumerate() {
            for &m in g.neighbors(u) {
                if pos.contains_key(&m) {
                    continue;
                }
                for &w in g.neighbors(m) {
                    if let Some(&j) = pos.get(&w) {
                        if j > i + 2 {
                            repair = Some((i, m, j));
                        }
                    }
                }
            }
        }
        let (i, m, j) = repair?;
        let mut next = path[..=i].to_vec();
        next.push(m);
        next.extend_from_slice(&path[j..]);
        path = next;
    }
    None
}

fn shortest_path(g: &Graph, dist_from_src: &[usize], src: usize, dst: usize) -> Option<Vec<usize>> {
    // walk from dst back toward src following decreasing distance, lowest index first
    let mut path = vec![dst];
    let mut cur = dst;
    while cur != src {
        let d = dist_from_src[cur];
        let prev = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| dist_from_src[w] + 1 == d)?;
        path.push(prev);
        cur = prev;
    }
    path.reverse();
    Some(path)
}

/// Bounded DFS over paths inside the ball, shortest extensions first, pruning
/// as soon as the partial path carries a chord or 2-chord.
fn exhaustive(g: &Graph, ball: &VertexSet, x: usize, y: usize) -> Option<Vec<usize>> {
    let mut path = vec![x];
    let mut on = vec![false; g.n()];
    on[x] = true;
    let mut budget = 200_000usize;
    dfs(g, ball, y, &mut path, &mut on, &mut budget)
}

fn dfs(
    g: &Graph,
    ball: &VertexSet,
    y: usize,
    path: &mut Vec<usize>,
    on: &mut [bool],
    budget: &mut usize,
) -> Option<Vec<usize>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let last = *path.last().unwrap();
    if last == y {
        if is_clean(g, path) {
            return Some(path.clone());
        }
        return None;
    }
    for &w in g.neighbors(last) {
        if on[w] || !ball.contains(w) {
            continue;
        }
        path.push(w);
        on[w] = true;
        // prune: partial path must stay chordless so far
        let ok = partial_clean(g, path);
        let res = if ok { dfs(g, ball, y, path, on, budget) } else { None };
        on[w] = false;
        path.pop();
        if res.is_some() {
            return res;
        }
    }
    None
}

/// Incremental prune for the DFS: the freshly appended vertex may introduce a
/// 1-chord, or share an off-path neighbor with an earlier vertex. In a graph
/// of girth >= 6 neither defect can be repaired by extending the path.
fn partial_clean(g: &Graph, path: &[usize]) -> bool {
    let n = path.len();
    let v = path[n - 1];
    for &u in path.iter().take(n.saturating_sub(2)) {
        if g.has_edge(u, v) {
            return false;
        }
    }
    for &m in g.neighbors(v) {
        if path.contains(&m) {
            continue;
        }
        if path.iter().take(n - 1).any(|&u| g.has_edge(m, u)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_cases() {
        let c6 = Graph::cycle(6);
        assert_eq!(find_2_induced_path(&c6, 0, 2, 1, 1), Some(vec![1]));
        // adjacent endpoints: the single edge
        let p = find_2_induced_path(&c6, 0, 1, 0, 1).unwrap();
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rejects_bad_preconditions() {
        let c4 = Graph::cycle(4); // girth 4
        assert_eq!(find_2_induced_path(&c4, 0, 1, 0, 2), None);
        let c5 = Graph::cycle(5); // odd
        assert_eq!(find_2_induced_path(&c5, 0, 1, 0, 2), None);
        let c6 = Graph::cycle(6);
        assert_eq!(find_2_induced_path(&c6, 0, 0, 0, 3), None); // y outside ball
    }

    #[test]
    fn heawood_paths_are_clean_and_inside() {
        let h = crate::catalog::heawood();
        for x in 0..14 {
            for y in 0..14 {
                let ball = h.ball(0, 3);
                if !ball.contains(x) || !ball.contains(y) {
                    continue;
                }
                let p = find_2_induced_path(&h, 0, 3, x, y).expect("path exists");
                assert!(is_clean(&h, &p), "path {p:?} has a chord");
                let big = h.ball(0, 4);
                assert!(p.iter().all(|&v| big.contains(v)));
                assert_eq!(*p.first().unwrap(), x);
                assert_eq!(*p.last().unwrap(), y);
            }
        }
    }
}
