//! The partition-imbalance calculus.
//!
//! For an ordered partition (A, B) of the vertices, `s` is the least index
//! with `lambda_s(G(B)) <= 1` (computed exactly by inertia) and
//! `t = floor((|B| - |A| + 1)/2)`; the imbalance is `t - s + 1`. Moving a set
//! C from A into B raises the imbalance whenever the components of G(B u C)
//! touching C have their |C|-th eigenvalue at most 1, and this machinery
//! bounds median eigenvalues: `lambda_{h-r}(G) <= 1` with `r = imb - 1`.

mod pipeline;
mod search;

pub use pipeline::{fraction_pipeline, PipelineParams, PipelineReport, VertexOutcome};
pub use search::{
    search_increasing_set, ExhaustedReport, SearchContext, SearchOutcome, SearchParams,
};

use crate::graph::{Graph, ThickStatus, VertexSet};
use crate::spectra::{inertia, lambda_k_at_most, InertiaCount};
use crate::{Error, Int, Rat, Result};
use serde::{Deserialize, Serialize};

fn one() -> Rat {
    Rat::from_integer(Int::from(1))
}

/// Imbalance data of an ordered partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImbalanceReport {
    /// least index with `lambda_s(G(B)) <= 1`; 1 when B is empty
    pub s: usize,
    pub t: i64,
    pub imb: i64,
}

fn validate_partition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.len() + b.len() != g.n() || !a.is_disjoint_from(b) {
        return Err(Error::InvalidPartition);
    }
    Ok(())
}

/// Exact imbalance of the ordered partition (A, B). The sets may be any
/// partition of the vertices, not only a bipartition.
pub fn imbalance(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<ImbalanceReport> {
    validate_partition(g, a, b)?;
    let s = if b.is_empty() {
        1
    } else {
        let sub = g.induced_subgraph(b);
        1 + inertia(&sub.induced_graph, &one()).greater
    };
    let t = (b.len() as i64 - a.len() as i64 + 1).div_euclid(2);
    Ok(ImbalanceReport {
        s,
        t,
        imb: t - s as i64 + 1,
    })
}

/// The median-eigenvalue bound extracted from a partition's imbalance.
#[derive(Clone, Debug, Serialize)]
pub struct MedianBound {
    pub r: i64,
    /// the bounded position: `lambda_index(G) <= 1`
    pub index: usize,
    /// exact confirmation by inertia
    pub certified: bool,
}

/// From `r = imb(A,B) - 1` conclude `lambda_{h-r}(G) <= 1`, certified exactly.
/// The identity `h - r = |A| + s` is asserted.
pub fn median_bound(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<MedianBound> {
    let rep = imbalance(g, a, b)?;
    let n = g.n() as i64;
    let h = (n + 1) / 2;
    let r = rep.imb - 1;
    let index = h - r;
    if index < 1 || index > n {
        return Err(Error::IndexOutOfRange {
            k: index.max(0) as usize,
            n: g.n(),
        });
    }
    assert_eq!(
        index,
        a.len() as i64 + rep.s as i64,
        "index identity violated"
    );
    let certified = lambda_k_at_most(g, index as usize, &one())?;
    Ok(MedianBound {
        r,
        index: index as usize,
        certified,
    })
}

/// Which ordered partition a certificate increased.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "AB")]
    AB,
    #[serde(rename = "BA")]
    BA,
}

/// Replayable proof that moving `c_set` across the partition increased its
/// imbalance: the subgraph Q, its exact inertia at 1, and both imbalances.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IncreaseCertificate {
    pub side: Side,
    pub c_set: Vec<usize>,
    pub q_vertices: Vec<usize>,
    pub q_inertia: InertiaCount,
    pub imb_before: i64,
    pub imb_after: i64,
}

/// Union of the components of `G(B u C)` that contain vertices of C.
pub fn moved_component(g: &Graph, b: &VertexSet, c: &VertexSet) -> VertexSet {
    let bc = b.union(c);
    let sub = g.induced_subgraph(&bc);
    let mut keep = Vec::new();
    for comp in sub.induced_graph.connected_components() {
        let hosts: Vec<usize> = comp.members().iter().map(|&i| sub.vertex_map[i]).collect();
        if hosts.iter().any(|&v| c.contains(v)) {
            keep.extend(hosts);
        }
    }
    keep.sort_unstable();
    VertexSet::from_sorted(keep, g.n())
}

/// Does moving C (a nonempty subset of A) into B increase `imb(A, B)`?
/// Returns a certificate exactly when `lambda_{|C|}(Q) <= 1`, in which case
/// the increase is also confirmed by direct recomputation. When the
/// neighborhood precondition for the converse holds (N(C) inside B and all
/// of N(C)'s neighbors inside A), a `None` answer additionally asserts that
/// recomputation shows no increase.
pub fn increases_imbalance(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    c: &VertexSet,
    side: Side,
) -> Result<Option<IncreaseCertificate>> {
    validate_partition(g, a, b)?;
    if c.is_empty() || !c.is_subset_of(a) {
        return Err(Error::Invalid("C must be a nonempty subset of A".into()));
    }
    let q = moved_component(g, b, c);
    let q_sub = g.induced_subgraph(&q);
    let q_inertia = inertia(&q_sub.induced_graph, &one());
    let before = imbalance(g, a, b)?.imb;

    if q_inertia.greater <= c.len() - 1 {
        let a2 = a.difference(c);
        let b2 = b.union(c);
        let after = imbalance(g, &a2, &b2)?.imb;
        if after <= before {
            return Err(Error::Invalid(format!(
                "eigenvalue test passed but imbalance did not increase ({before} -> {after})"
            )));
        }
        Ok(Some(IncreaseCertificate {
            side,
            c_set: c.members().to_vec(),
            q_vertices: q.members().to_vec(),
            q_inertia,
            imb_before: before,
            imb_after: after,
        }))
    } else {
        if converse_precondition(g, a, c) {
            let a2 = a.difference(c);
            let b2 = b.union(c);
            let after = imbalance(g, &a2, &b2)?.imb;
            if after > before {
                return Err(Error::Invalid(format!(
                    "converse violated: no eigenvalue certificate but imbalance rose \
                     ({before} -> {after})"
                )));
            }
            // under the precondition Q must equal G(C u N(C))
            let cn = c.union(&g.neighbors_of_set(c));
            debug_assert_eq!(q, cn);
        }
        Ok(None)
    }
}

/// N(C) lies in B (no neighbor of C inside A beyond C itself) and every
/// vertex of N(C) has all its neighbors in A.
pub fn converse_precondition(g: &Graph, a: &VertexSet, c: &VertexSet) -> bool {
    let nc = g.neighbors_of_set(c);
    for &w in nc.members() {
        if a.contains(w) {
            return false;
        }
        if g.neighbors(w).iter().any(|&x| !a.contains(x)) {
            return false;
        }
    }
    true
}

/// Replay a certificate against the graph and ordered partition it was issued
/// for: recompute Q, its inertia, and both imbalances, and compare field by
/// field.
pub fn replay_certificate(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    cert: &IncreaseCertificate,
) -> Result<()> {
    let c = VertexSet::new(cert.c_set.clone(), g.n())?;
    if c.is_empty() || !c.is_subset_of(a) {
        return Err(Error::Invalid(
            "certificate set not inside the moving side".into(),
        ));
    }
    let q = moved_component(g, b, &c);
    if q.members() != cert.q_vertices.as_slice() {
        return Err(Error::Invalid("certificate Q vertices do not replay".into()));
    }
    let q_inertia = inertia(&g.induced_subgraph(&q).induced_graph, &one());
    if q_inertia != cert.q_inertia {
        return Err(Error::Invalid("certificate inertia does not replay".into()));
    }
    if q_inertia.greater > c.len() - 1 {
        return Err(Error::Invalid("certificate eigenvalue test fails".into()));
    }
    let before = imbalance(g, a, b)?.imb;
    let after = imbalance(g, &a.difference(&c), &b.union(&c))?.imb;
    if before != cert.imb_before || after != cert.imb_after || after <= before {
        return Err(Error::Invalid(format!(
            "imbalances do not replay: {before} -> {after} vs {} -> {}",
            cert.imb_before, cert.imb_after
        )));
    }
    Ok(())
}

/// Thick sets always produce a certificate: A-thick sets move `A n U` across
/// (A, B), B-thick sets move `B n U` across (B, A). A thick set that fails to
/// increase imbalance indicates a bug, reported as an error.
pub fn thick_increase(
    g: &Graph,
    bip: &crate::graph::Bipartition,
    u: &VertexSet,
) -> Result<Option<IncreaseCertificate>> {
    match crate::graph::is_thick(g, bip, u) {
        ThickStatus::AThick => {
            let c = u.intersection(&bip.a_side);
            match increases_imbalance(g, &bip.a_side, &bip.b_side, &c, Side::AB)? {
                Some(cert) => Ok(Some(cert)),
                None => Err(Error::Invalid(
                    "A-thick set failed to increase imbalance".into(),
                )),
            }
        }
        ThickStatus::BThick => {
            let c = u.intersection(&bip.b_side);
            match increases_imbalance(g, &bip.b_side, &bip.a_side, &c, Side::BA)? {
                Some(cert) => Ok(Some(cert)),
                None => Err(Error::Invalid(
                    "B-thick set failed to increase imbalance".into(),
                )),
            }
        }
        ThickStatus::BothFail => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(m: &[usize], n: usize) -> VertexSet {
        VertexSet::new(m.to_vec(), n).unwrap()
    }

    #[test]
    fn k2_imbalance() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let rep = imbalance(&k2, &vs(&[0], 2), &vs(&[1], 2)).unwrap();
        assert_eq!(rep, ImbalanceReport { s: 1, t: 0, imb: 0 });
    }

    #[test]
    fn star_imbalance() {
        // center plus three leaves: G(B) edgeless so s = 1, t = 1
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let rep = imbalance(&star, &vs(&[0], 4), &vs(&[1, 2, 3], 4)).unwrap();
        assert_eq!(rep, ImbalanceReport { s: 1, t: 1, imb: 1 });
    }

    #[test]
    fn empty_b_side() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let rep = imbalance(&k2, &vs(&[0, 1], 2), &vs(&[], 2)).unwrap();
        assert_eq!(rep.s, 1);
        assert!(imbalance(&k2, &vs(&[0], 2), &vs(&[0, 1], 2)).is_err());
    }

    #[test]
    fn median_bound_examples() {
        // star: imb = 1, r = 0, claim lambda_2 <= 1 (it is 0)
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mb = median_bound(&star, &vs(&[0], 4), &vs(&[1, 2, 3], 4)).unwrap();
        assert_eq!((mb.r, mb.index), (0, 2));
        assert!(mb.certified);

        // C6 bipartition: imb = 0, r = -1, claim lambda_4 <= 1 (it is -1)
        let c6 = Graph::cycle(6);
        let bip = c6.bipartition().unwrap();
        let mb = median_bound(&c6, &bip.a_side, &bip.b_side).unwrap();
        assert_eq!((mb.r, mb.index), (-1, 4));
        assert!(mb.certified);

        // Heawood bipartition: imb = 0, claim lambda_8 <= 1 (it is -sqrt 2)
        let h = crate::catalog::heawood();
        let bip = h.bipartition().unwrap();
        let mb = median_bound(&h, &bip.a_side, &bip.b_side).unwrap();
        assert_eq!((mb.r, mb.index), (-1, 8));
        assert!(mb.certified);

        // degenerate: all vertices in A
        assert!(median_bound(&c6, &VertexSet::full(6), &VertexSet::empty(6)).is_err());
    }

    #[test]
    fn c6_side_move_increases() {
        let c6 = Graph::cycle(6);
        let bip = c6.bipartition().unwrap();
        let cert = increases_imbalance(&c6, &bip.a_side, &bip.b_side, &bip.a_side, Side::AB)
            .unwrap()
            .expect("full side increases");
        // Q is the whole cycle, lambda_3(C6) = 1
        assert_eq!(cert.q_vertices.len(), 6);
        assert_eq!(cert.imb_before, 0);
        assert!(cert.imb_after > 0);
        replay_certificate(&c6, &bip.a_side, &bip.b_side, &cert).unwrap();
    }

    #[test]
    fn c6_single_vertex_fails_with_converse() {
        let c6 = Graph::cycle(6);
        let bip = c6.bipartition().unwrap();
        let c = vs(&[0], 6);
        assert!(bip.a_side.contains(0));
        // Q is a 3-vertex path with lambda_1 = sqrt 2 > 1; the converse
        // precondition holds, so the recomputation check runs inside
        let out = increases_imbalance(&c6, &bip.a_side, &bip.b_side, &c, Side::AB).unwrap();
        assert!(out.is_none());
        assert!(converse_precondition(&c6, &bip.a_side, &c));
    }

    #[test]
    fn degree_one_singleton_always_works() {
        let p5 = Graph::path(5);
        let bip = p5.bipartition().unwrap();
        let c = vs(&[4], 5);
        assert_eq!(p5.degree(4), 1);
        let (a, b, side) = if bip.a_side.contains(4) {
            (bip.a_side.clone(), bip.b_side.clone(), Side::AB)
        } else {
            (bip.b_side.clone(), bip.a_side.clone(), Side::BA)
        };
        let cert = increases_imbalance(&p5, &a, &b, &c, side).unwrap().unwrap();
        assert!(cert.q_vertices.len() <= 2);
    }

    #[test]
    fn thick_p5_example() {
        let p5 = Graph::path(5);
        let bip = p5.bipartition().unwrap();
        let u = vs(&[0, 1, 2], 5);
        let cert = thick_increase(&p5, &bip, &u).unwrap().expect("thick");
        assert_eq!(cert.side, Side::AB);
        assert_eq!(cert.c_set, vec![0, 2]);
        assert_eq!(cert.imb_before, 0);
        assert_eq!(cert.imb_after, 1);
        assert!(thick_increase(&p5, &bip, &VertexSet::empty(5))
            .unwrap()
            .is_none());
    }

    #[test]
    fn bipartition_imbalance_sum_nonnegative() {
        for g in [Graph::cycle(6), Graph::path(7), crate::catalog::heawood()] {
            let bip = g.bipartition().unwrap();
            let ab = imbalance(&g, &bip.a_side, &bip.b_side).unwrap().imb;
            let ba = imbalance(&g, &bip.b_side, &bip.a_side).unwrap().imb;
            assert!(ab + ba >= 0, "sum {} on n={}", ab + ba, g.n());
        }
    }

    #[test]
    fn certificate_json_schema() {
        let c6 = Graph::cycle(6);
        let bip = c6.bipartition().unwrap();
        let cert = increases_imbalance(&c6, &bip.a_side, &bip.b_side, &bip.a_side, Side::AB)
            .unwrap()
            .unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        for key in [
            "side",
            "c_set",
            "q_vertices",
            "q_inertia",
            "imb_before",
            "imb_after",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        for key in ["threshold", "greater", "equal", "less"] {
            assert!(
                json["q_inertia"].get(key).is_some(),
                "missing q_inertia.{key}"
            );
        }
        assert_eq!(json["side"], "AB");
        // round trip
        let back: IncreaseCertificate = serde_json::from_value(json).unwrap();
        replay_certificate(&c6, &bip.a_side, &bip.b_side, &back).unwrap();
    }
}
