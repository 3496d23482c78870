//! Exact eigenvalue counting (inertia relative to a rational threshold).
//!
//! Two engines share the same contract and the same tests:
//!   * symmetric rational elimination of `A - tI` with pivoting that is safe
//!     for zero diagonals (2x2 off-diagonal blocks), the default at any size;
//!   * Sturm-sequence counting on the exact characteristic polynomial, the
//!     reference for graphs within the characteristic-polynomial bound.
//! Bipartite graphs take a fast path through the bipartite half-matrix
//! `N N^T` (N the biadjacency matrix), which halves the dimension: the
//! spectrum of a bipartite graph is `{±sqrt(mu)}` over eigenvalues `mu` of
//! `N N^T` plus zeros.

use super::poly::{self, counts_from_char_poly};
use crate::graph::Graph;
use crate::{format_rational, Error, Int, Rat, Result};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Exact counts of eigenvalues above, at, and below a rational threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaCount {
    pub threshold: String,
    pub greater: usize,
    pub equal: usize,
    pub less: usize,
}

impl InertiaCount {
    fn new(t: &Rat, greater: usize, equal: usize, less: usize) -> InertiaCount {
        InertiaCount {
            threshold: format_rational(t),
            greater,
            equal,
            less,
        }
    }

    pub fn total(&self) -> usize {
        self.greater + self.equal + self.less
    }
}

/// Exact eigenvalue counts of the adjacency matrix relative to `t`.
pub fn inertia(g: &Graph, t: &Rat) -> InertiaCount {
    let n = g.n();
    if n == 0 {
        return InertiaCount::new(t, 0, 0, 0);
    }
    if let Some(bip) = g.bipartition() {
        return inertia_bipartite(g, &bip.a_side.members().to_vec(), t);
    }
    let (pos, zero, neg) = shifted_inertia(g, t);
    InertiaCount::new(t, pos, zero, neg)
}

/// Eigenvalue counts via the bipartite half-matrix.
fn inertia_bipartite(g: &Graph, a_side: &[usize], t: &Rat) -> InertiaCount {
    let n = g.n();
    // Use the smaller side for the Gram matrix.
    let other: Vec<usize> = (0..n).filter(|v| !a_side.contains(v)).collect();
    let (rows, cols): (&[usize], &[usize]) = if a_side.len() <= other.len() {
        (a_side, &other)
    } else {
        (&other, a_side)
    };
    let p = rows.len();
    let gram = gram_matrix(g, rows, cols);

    if t.is_zero() {
        // eigenvalues of the graph: ±sqrt(mu) plus n - 2p zeros
        let zero = Rat::zero();
        let (rank, kernel, _) = rational_inertia(shift(&gram, &zero));
        debug_assert_eq!(rank + kernel, p);
        return InertiaCount::new(t, rank, n - 2 * rank, rank);
    }
    let s = if t.is_positive() { t.clone() } else { -t.clone() };
    let s2 = &s * &s;
    let (above, at, _below) = rational_inertia(shift(&gram, &s2));
    if t.is_positive() {
        InertiaCount::new(t, above, at, n - above - at)
    } else {
        // counts relative to -s by spectral symmetry
        InertiaCount::new(t, n - above - at, at, above)
    }
}

fn gram_matrix(g: &Graph, rows: &[usize], cols: &[usize]) -> Vec<Vec<Int>> {
    let p = rows.len();
    let mut col_index = vec![usize::MAX; g.n()];
    for (j, &c) in cols.iter().enumerate() {
        col_index[c] = j;
    }
    // biadjacency rows as index lists
    let rows_adj: Vec<Vec<usize>> = rows
        .iter()
        .map(|&r| {
            g.neighbors(r)
                .iter()
                .filter_map(|&w| (col_index[w] != usize::MAX).then_some(col_index[w]))
                .collect()
        })
        .collect();
    let mut gram = vec![vec![Int::zero(); p]; p];
    for i in 0..p {
        for j in i..p {
            let mut count = 0usize;
            let (a, b) = (&rows_adj[i], &rows_adj[j]);
            let (mut x, mut y) = (0, 0);
            while x < a.len() && y < b.len() {
                match a[x].cmp(&b[y]) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        x += 1;
                        y += 1;
                    }
                }
            }
            gram[i][j] = Int::from(count);
            gram[j][i] = Int::from(count);
        }
    }
    gram
}

fn shift(m: &[Vec<Int>], t: &Rat) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut out: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    for (i, row) in out.iter_mut().enumerate().take(n) {
        row[i] -= t.clone();
    }
    out
}

/// Inertia of `A - tI` for the full adjacency matrix (general engine).
fn shifted_inertia(g: &Graph, t: &Rat) -> (usize, usize, usize) {
    let n = g.n();
    let mut m = vec![vec![Rat::zero(); n]; n];
    for (u, v) in g.edges() {
        m[u][v] = Rat::from_integer(Int::from(1));
        m[v][u] = Rat::from_integer(Int::from(1));
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= t.clone();
    }
    rational_inertia(m)
}

/// Sylvester inertia `(positive, zero, negative)` of a symmetric rational
/// matrix by congruence elimination. Diagonal pivots are preferred (smallest
/// operand size first); when the active diagonal is entirely zero, a 2x2
/// off-diagonal block contributes one positive and one negative eigenvalue.
pub fn rational_inertia(mut m: Vec<Vec<Rat>>) -> (usize, usize, usize) {
    let n = m.len();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    while !active.is_empty() {
        // diagonal pivot with the smallest bit size
        let mut best: Option<(u64, usize)> = None;
        for (idx, &k) in active.iter().enumerate() {
            if !m[k][k].is_zero() {
                let sz = rat_bits(&m[k][k]);
                if best.map_or(true, |(b, _)| sz < b) {
                    best = Some((sz, idx));
                }
            }
        }
        if let Some((_, idx)) = best {
            let k = active.remove(idx);
            let pivot = m[k][k].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let col: Vec<(usize, Rat)> = active
                .iter()
                .filter(|&&i| !m[i][k].is_zero())
                .map(|&i| (i, m[i][k].clone()))
                .collect();
            for (ai, ci) in &col {
                for (aj, cj) in &col {
                    if aj < ai {
                        continue;
                    }
                    let delta = ci * cj / &pivot;
                    let v = &m[*ai][*aj] - &delta;
                    m[*ai][*aj] = v.clone();
                    if ai != aj {
                        m[*aj][*ai] = v;
                    }
                }
            }
            continue;
        }
        // all active diagonals zero: find an off-diagonal entry
        let mut block: Option<(usize, usize)> = None;
        'outer: for (i_idx, &i) in active.iter().enumerate() {
            for &j in active.iter().skip(i_idx + 1) {
                if !m[i][j].is_zero() {
                    block = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((r, s)) = block else {
            // zero matrix on the active set
            break;
        };
        pos += 1;
        neg += 1;
        let a = m[r][s].clone();
        active.retain(|&x| x != r && x != s);
        let col_r: Vec<(usize, Rat)> = active.iter().map(|&i| (i, m[i][r].clone())).collect();
        let col_s: Vec<(usize, Rat)> = active.iter().map(|&i| (i, m[i][s].clone())).collect();
        for (ii, (ai, cir)) in col_r.iter().enumerate() {
            for (jj, (aj, _)) in col_r.iter().enumerate() {
                if jj < ii {
                    continue;
                }
                let cis = &col_s[ii].1;
                let cjr = &col_r[jj].1;
                let cjs = &col_s[jj].1;
                // Schur complement of [[0, a], [a, 0]]
                let delta = (cir * cjs + cis * cjr) / &a;
                let v = &m[*ai][*aj] - &delta;
                m[*ai][*aj] = v.clone();
                if ai != aj {
                    m[*aj][*ai] = v;
                }
            }
        }
    }
    let zero = n - pos - neg;
    (pos, zero, neg)
}

fn rat_bits(x: &Rat) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Reference engine: Sturm counting on the exact characteristic polynomial.
pub fn inertia_sturm(g: &Graph, t: &Rat) -> Result<InertiaCount> {
    if g.n() == 0 {
        return Ok(InertiaCount::new(t, 0, 0, 0));
    }
    let phi = poly::char_poly(g)?;
    let (greater, equal, less) = counts_from_char_poly(&phi, t);
    Ok(InertiaCount::new(t, greater, equal, less))
}

/// Exact count of eigenvalues in the closed interval `[lo, hi]`.
pub fn count_in_interval(g: &Graph, lo: &Rat, hi: &Rat) -> usize {
    assert!(lo <= hi);
    let above = inertia(g, hi).greater;
    let below = inertia(g, lo).less;
    g.n() - above - below
}

/// Exact test `lambda_k(G) <= t` (eigenvalues sorted descending, 1-based k).
pub fn lambda_k_at_most(g: &Graph, k: usize, t: &Rat) -> Result<bool> {
    if k == 0 || k > g.n() {
        return Err(Error::IndexOutOfRange { k, n: g.n() });
    }
    Ok(inertia(g, t).greater <= k - 1)
}

/// Exact multiplicity of `t` as an eigenvalue via the rank of `A - tI`
/// (independent of the elimination path; used as a cross-check).
pub fn eigenvalue_multiplicity(g: &Graph, t: &Rat) -> usize {
    let n = g.n();
    // clear denominators: nullity of q*A - p*I equals nullity of A - tI
    let p = t.numer();
    let q = t.denom();
    let mut m = vec![vec![Int::zero(); n]; n];
    for (u, v) in g.edges() {
        m[u][v] = q.clone();
        m[v][u] = q.clone();
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= p;
    }
    n - poly::rank_int(&m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(Int::from(p), Int::from(q))
    }

    #[test]
    fn k2_at_one() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let i = inertia(&k2, &rat(1, 1));
        assert_eq!((i.greater, i.equal, i.less), (0, 1, 1));
    }

    #[test]
    fn c6_counts() {
        let c6 = Graph::cycle(6);
        let i = inertia(&c6, &rat(1, 1));
        assert_eq!((i.greater, i.equal, i.less), (1, 2, 3));
        assert_eq!(count_in_interval(&c6, &rat(-1, 1), &rat(1, 1)), 4);
        assert!(lambda_k_at_most(&c6, 2, &rat(1, 1)).unwrap());
        assert!(!lambda_k_at_most(&c6, 1, &rat(1, 1)).unwrap());
        assert!(lambda_k_at_most(&c6, 7, &rat(1, 1)).is_err());
    }

    #[test]
    fn heawood_counts() {
        let h = crate::catalog::heawood();
        let i = inertia(&h, &rat(1, 1));
        assert_eq!(i.greater, 7); // 3 and sqrt(2) with multiplicity 6
        assert_eq!(i.equal, 0);
        assert_eq!(count_in_interval(&h, &rat(-1, 1), &rat(1, 1)), 0);
    }

    #[test]
    fn engines_agree_with_symmetry() {
        let graphs = vec![
            Graph::cycle(6),
            Graph::path(7),
            Graph::complete_bipartite(3, 3),
            crate::catalog::heawood(),
            Graph::cycle(5), // odd cycle exercises the general engine
        ];
        let thresholds = [rat(-2, 1), rat(-1, 1), rat(0, 1), rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1)];
        for g in &graphs {
            for t in &thresholds {
                let a = inertia(g, t);
                let b = inertia_sturm(g, t).unwrap();
                assert_eq!(a, b, "engines disagree on n={} t={}", g.n(), t);
                assert_eq!(a.total(), g.n());
                // multiplicity by exact rank agrees
                assert_eq!(a.equal, eigenvalue_multiplicity(g, t));
            }
        }
    }

    #[test]
    fn empty_and_edgeless() {
        let e = Graph::empty(0);
        assert_eq!(inertia(&e, &rat(1, 1)).total(), 0);
        let iso = Graph::empty(3);
        let i = inertia(&iso, &rat(0, 1));
        assert_eq!((i.greater, i.equal, i.less), (0, 3, 0));
    }

    #[test]
    fn bipartite_symmetry_greater_vs_less() {
        let g = Graph::complete_bipartite(2, 3);
        for t in [rat(1, 1), rat(1, 2), rat(3, 2)] {
            let pos = inertia(&g, &t);
            let neg = inertia(&g, &(-t.clone()));
            assert_eq!(pos.greater, neg.less);
            assert_eq!(pos.equal, neg.equal);
        }
    }
}
