//! Thick-set test: a vertex set whose boundary degrees are at most one on one
//! side and whose intersection with that side is strictly larger.

use super::{Bipartition, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThickStatus {
    AThick,
    BThick,
    BothFail,
}

/// A-thick: every vertex of U on the A side has at most one neighbor outside U,
/// every B-side vertex outside U has at most one neighbor inside U, and U meets
/// A in strictly more vertices than B. B-thick is the mirror image. The A test
/// runs first.
pub fn is_thick(g: &Graph, bip: &Bipartition, u: &VertexSet) -> ThickStatus {
    if side_thick(g, &bip.a_side, &bip.b_side, u) {
        ThickStatus::AThick
    } else if side_thick(g, &bip.b_side, &bip.a_side, u) {
        ThickStatus::BThick
    } else {
        ThickStatus::BothFail
    }
}

fn side_thick(g: &Graph, heavy: &VertexSet, light: &VertexSet, u: &VertexSet) -> bool {
    let in_heavy = u.intersection(heavy);
    let in_light = u.intersection(light);
    if in_heavy.len() <= in_light.len() {
        return false;
    }
    for &v in in_heavy.members() {
        let outside = g.neighbors(v).iter().filter(|&&w| !u.contains(w)).count();
        if outside > 1 {
            return false;
        }
    }
    for &w in light.members() {
        if u.contains(w) {
            continue;
        }
        let inside = g.neighbors(w).iter().filter(|&&x| u.contains(x)).count();
        if inside > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_prefix_is_a_thick() {
        let p5 = Graph::path(5);
        let bip = p5.bipartition().unwrap();
        assert_eq!(bip.a_side.members(), &[0, 2, 4]);
        let u = VertexSet::new(vec![0, 1, 2], 5).unwrap();
        assert_eq!(is_thick(&p5, &bip, &u), ThickStatus::AThick);
    }

    #[test]
    fn degenerate_sets_fail() {
        let c6 = Graph::cycle(6);
        let bip = c6.bipartition().unwrap();
        assert_eq!(is_thick(&c6, &bip, &VertexSet::empty(6)), ThickStatus::BothFail);
        // whole vertex set: balanced sides, strict inequality fails both ways
        assert_eq!(is_thick(&c6, &bip, &VertexSet::full(6)), ThickStatus::BothFail);
    }
}
