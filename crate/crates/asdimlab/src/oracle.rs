//! Brute-force reference implementations and corpus generators.
//!
//! Everything here deliberately uses a different algorithmic strategy than
//! the production code (plain subset enumeration instead of branch and
//! bound, canonical assignment search instead of DSATUR) so that the two
//! sides cannot share a bug. These run only at desk scale.

use thiserror::Error;

use crate::engine::Split;
use crate::graph::{DefiningGraph, EdgeLabel, GroupKind, VertexId, VertexSet};
use crate::word::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {got} vertices; the oracle accepts at most {limit}")]
    SizeGuard { got: usize, limit: usize },
}

/// Exact clique number by enumerating every vertex subset. Guarded to 20
/// vertices.
pub fn brute_clique_number(g: &DefiningGraph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > 20 {
        return Err(OracleError::SizeGuard { got: n, limit: 20 });
    }
    let adjacent = |i: usize, j: usize| g.adjacent(&g.vertices()[i], &g.vertices()[j]);
    let mut best = 0usize;
    for subset in 0u32..(1u32 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| subset & (1 << i) != 0).collect();
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(k, &i)| members[k + 1..].iter().all(|&j| adjacent(i, j)));
        if is_clique {
            best = size;
        }
    }
    Ok(best)
}

/// Exact chromatic number by exhaustive color assignment with the canonical
/// symmetry pruning (vertex i may only open color max_used + 1). Guarded to
/// 12 vertices.
pub fn brute_chromatic(g: &DefiningGraph) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > 12 {
        return Err(OracleError::SizeGuard { got: n, limit: 12 });
    }
    if n == 0 {
        return Ok(0);
    }
    fn colorable(
        g: &DefiningGraph,
        k: usize,
        colors: &mut Vec<usize>,
        next: usize,
        max_used: usize,
    ) -> bool {
        if next == g.vertex_count() {
            return true;
        }
        let vs = g.vertices();
        for c in 0..k.min(max_used + 2) {
            let clash = (0..next).any(|i| colors[i] == c && g.adjacent(&vs[i], &vs[next]));
            if !clash {
                colors[next] = c;
                if colorable(g, k, colors, next + 1, max_used.max(c)) {
                    return true;
                }
            }
        }
        false
    }
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        colors[0] = 0;
        if colorable(g, k, &mut colors, 1, 0) {
            return Ok(k);
        }
    }
    unreachable!("every graph on n vertices is n-colorable")
}

/// Independently re-checks every structural invariant of an amalgam split by
/// direct edge scans: cover, intersection, proper containments, and the
/// absence of edges between the two open sides.
pub fn validate_split(g: &DefiningGraph, split: &Split) -> bool {
    let all = g.vertex_set();
    let union: VertexSet = split
        .left
        .iter()
        .chain(split.right.iter())
        .cloned()
        .collect();
    if union != all {
        return false;
    }
    let intersection: VertexSet = split
        .left
        .iter()
        .filter(|v| split.right.contains(v))
        .cloned()
        .collect();
    if intersection != split.separator {
        return false;
    }
    if split.separator.len() >= split.left.len() || split.separator.len() >= split.right.len() {
        return false;
    }
    let left_only: Vec<&VertexId> = split
        .left
        .iter()
        .filter(|v| !split.separator.contains(v))
        .collect();
    let right_only: Vec<&VertexId> = split
        .right
        .iter()
        .filter(|v| !split.separator.contains(v))
        .collect();
    left_only
        .iter()
        .all(|a| right_only.iter().all(|b| !g.adjacent(a, b)))
}

/// Streams every simple graph on `n` ordered vertices (`v1..vn`) with every
/// edge labeled by each choice from `labels`, in a fixed deterministic
/// order: edge subsets by ascending bitmask, label assignments in odometer
/// order. For graph groups, a coefficient `m` stands for the standard Artin
/// relator of coefficient `m`.
pub fn enumerate_graphs(
    n: usize,
    kind: GroupKind,
    labels: &[u32],
) -> Result<impl Iterator<Item = DefiningGraph>, OracleError> {
    if n > 7 {
        return Err(OracleError::SizeGuard { got: n, limit: 7 });
    }
    assert!(!labels.is_empty(), "label menu must be non-empty");
    let names: Vec<VertexId> = (1..=n)
        .map(|i| VertexId::new(format!("v{i}")).unwrap())
        .collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let labels = labels.to_vec();
    let total_masks = 1u32 << pairs.len();
    Ok((0..total_masks).flat_map(move |mask| {
        let edge_slots: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, p)| *p)
            .collect();
        let names = names.clone();
        let labels = labels.clone();
        let count = labels.len().pow(edge_slots.len() as u32);
        (0..count).map(move |assignment| {
            let mut idx = assignment;
            let edges = edge_slots
                .iter()
                .map(|&(i, j)| {
                    let m = labels[idx % labels.len()];
                    idx /= labels.len();
                    (
                        names[i].clone(),
                        names[j].clone(),
                        make_label(kind, &names[i], &names[j], m),
                    )
                })
                .collect();
            DefiningGraph::new(kind, names.clone(), edges).expect("enumerated graph must be valid")
        })
    }))
}

pub(crate) fn make_label(kind: GroupKind, a: &VertexId, b: &VertexId, m: u32) -> EdgeLabel {
    match kind {
        GroupKind::Artin | GroupKind::Coxeter => EdgeLabel::Coefficient(m),
        GroupKind::GraphGroup => EdgeLabel::Relator(Word::artin_relator(a, b, m)),
    }
}

// ---- named corpus graphs ----

/// The cycle graph on `n >= 3` vertices, all edges labeled `m`.
pub fn cycle_graph(kind: GroupKind, n: usize, m: u32) -> DefiningGraph {
    assert!(n >= 3);
    let names: Vec<VertexId> = (1..=n)
        .map(|i| VertexId::new(format!("v{i}")).unwrap())
        .collect();
    let edges = (0..n)
        .map(|i| {
            let (a, b) = (&names[i], &names[(i + 1) % n]);
            (a.clone(), b.clone(), make_label(kind, a, b, m))
        })
        .collect();
    DefiningGraph::new(kind, names, edges).unwrap()
}

/// The complete graph on `n` vertices, all edges labeled `m`.
pub fn complete_graph(kind: GroupKind, n: usize, m: u32) -> DefiningGraph {
    let names: Vec<VertexId> = (1..=n)
        .map(|i| VertexId::new(format!("v{i}")).unwrap())
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((
                names[i].clone(),
                names[j].clone(),
                make_label(kind, &names[i], &names[j], m),
            ));
        }
    }
    DefiningGraph::new(kind, names, edges).unwrap()
}

/// The Petersen graph (outer 5-cycle, inner pentagram, spokes), all edges
/// labeled `m`.
pub fn petersen(kind: GroupKind, m: u32) -> DefiningGraph {
    let names: Vec<VertexId> = (0..5)
        .map(|i| VertexId::new(format!("p{i}")).unwrap())
        .chain((0..5).map(|i| VertexId::new(format!("q{i}")).unwrap()))
        .collect();
    let mut edges = Vec::new();
    for i in 0..5usize {
        for (a, b) in [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)] {
            edges.push((
                names[a].clone(),
                names[b].clone(),
                make_label(kind, &names[a], &names[b], m),
            ));
        }
    }
    DefiningGraph::new(kind, names, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chromatic_number_upper, clique_number};

    #[test]
    fn brute_clique_examples() {
        assert_eq!(
            brute_clique_number(&petersen(GroupKind::Artin, 3)).unwrap(),
            2
        );
        assert_eq!(
            brute_clique_number(&complete_graph(GroupKind::Artin, 6, 2)).unwrap(),
            6
        );
        let empty = DefiningGraph::from_coefficient_edges(GroupKind::Artin, &[], &[]).unwrap();
        assert_eq!(brute_clique_number(&empty).unwrap(), 0);
    }

    #[test]
    fn petersen_triangle_freeness_by_edge_pair_scan() {
        // cross-check the clique oracle with a direct scan for triangles
        let g = petersen(GroupKind::Artin, 3);
        let vs = g.vertices();
        let mut has_triangle = false;
        for a in 0..vs.len() {
            for b in (a + 1)..vs.len() {
                for c in (b + 1)..vs.len() {
                    if g.adjacent(&vs[a], &vs[b])
                        && g.adjacent(&vs[b], &vs[c])
                        && g.adjacent(&vs[a], &vs[c])
                    {
                        has_triangle = true;
                    }
                }
            }
        }
        assert!(!has_triangle);
    }

    #[test]
    fn brute_chromatic_examples() {
        assert_eq!(
            brute_chromatic(&cycle_graph(GroupKind::Artin, 5, 2)).unwrap(),
            3
        );
        assert_eq!(
            brute_chromatic(&complete_graph(GroupKind::Artin, 4, 2)).unwrap(),
            4
        );
        let edgeless =
            DefiningGraph::from_coefficient_edges(GroupKind::Artin, &["a", "b"], &[]).unwrap();
        assert_eq!(brute_chromatic(&edgeless).unwrap(), 1);
        let empty = DefiningGraph::from_coefficient_edges(GroupKind::Artin, &[], &[]).unwrap();
        assert_eq!(brute_chromatic(&empty).unwrap(), 0);
    }

    #[test]
    fn size_guards_fire() {
        let big = complete_graph(GroupKind::Coxeter, 13, 2);
        assert!(brute_chromatic(&big).is_err());
        assert!(enumerate_graphs(8, GroupKind::Artin, &[2]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |n, labels: &[u32]| {
            enumerate_graphs(n, GroupKind::Artin, labels)
                .unwrap()
                .count()
        };
        assert_eq!(count(2, &[2]), 2);
        assert_eq!(count(3, &[2]), 8);
        assert_eq!(count(4, &[2]), 64);
        // full menu product: sum over edge subsets of 2^|E| = 3^3
        assert_eq!(count(3, &[2, 3]), 27);
    }

    #[test]
    fn production_agrees_with_oracles_on_small_graphs() {
        for g in enumerate_graphs(5, GroupKind::Coxeter, &[3]).unwrap() {
            assert_eq!(clique_number(&g), brute_clique_number(&g).unwrap());
            assert_eq!(chromatic_number_upper(&g), brute_chromatic(&g).unwrap());
        }
    }

    #[test]
    fn production_agrees_with_oracles_on_larger_random_style_graphs() {
        // deterministic pseudo-random edge pattern on 16 vertices
        let names: Vec<&str> = vec![
            "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
        ];
        let mut edges = Vec::new();
        let mut state = 0x9e3779b97f4a7c15u64;
        for i in 0..16usize {
            for j in (i + 1)..16 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if state >> 61 > 4 {
                    edges.push((names[i], names[j], 2 + ((state >> 20) % 5) as u32));
                }
            }
        }
        let g = DefiningGraph::from_coefficient_edges(GroupKind::Artin, &names, &edges).unwrap();
        assert_eq!(clique_number(&g), brute_clique_number(&g).unwrap());
    }
}
