//! Exhaustive enumeration of small ordered flag complexes.

use std::collections::BTreeSet;

use crate::complex::{Complex, VertexId};
use crate::ordering::{OrderRelation, OrderedComplex};
use crate::toolkit::fixtures::vertex_name;

/// Every ordered flag complex on `1..=max_vertices` vertices, one
/// representative per isomorphism class, ordered by vertex count and then by
/// canonical code. Practical up to five vertices.
pub fn ordered_flag_corpus(max_vertices: usize) -> Vec<OrderedComplex> {
    assert!(max_vertices <= 6, "corpus enumeration is exponential in the vertex count");
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for graph in 0u32..(1 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| graph & (1 << k) != 0)
                .map(|(_, &p)| p)
                .collect();
            for orientation in 0u32..(1 << chosen.len()) {
                let arcs: Vec<(usize, usize)> = chosen
                    .iter()
                    .enumerate()
                    .map(|(k, &(i, j))| if orientation & (1 << k) != 0 { (j, i) } else { (i, j) })
                    .collect();
                if has_cyclic_triangle(n, &arcs) {
                    continue;
                }
                let code = canonical_code(n, &arcs, &perms);
                if seen.insert(code) {
                    out.push((n, code, arcs));
                }
            }
        }
    }
    out.sort_by_key(|(n, code, _)| (*n, *code));
    out.into_iter()
        .map(|(n, _, arcs)| build(n, &arcs))
        .collect()
}

fn build(n: usize, arcs: &[(usize, usize)]) -> OrderedComplex {
    let names: Vec<VertexId> = (0..n).map(vertex_name).collect();
    let edges: Vec<(VertexId, VertexId)> = arcs
        .iter()
        .map(|&(i, j)| (names[i].clone(), names[j].clone()))
        .collect();
    let rel: OrderRelation = edges.iter().cloned().collect();
    let c = Complex::flag(names, edges).expect("distinct names");
    OrderedComplex::new(c, &rel).expect("cyclic triangles were filtered out")
}

fn has_cyclic_triangle(n: usize, arcs: &[(usize, usize)]) -> bool {
    let arc = |i: usize, j: usize| arcs.contains(&(i, j));
    (0..n).any(|a| {
        (0..n).any(|b| (0..n).any(|c| a != b && b != c && a != c && arc(a, b) && arc(b, c) && arc(c, a)))
    })
}

/// Smallest adjacency-bit code over all relabellings.
fn canonical_code(n: usize, arcs: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            arcs.iter()
                .fold(0u64, |code, &(i, j)| code | 1 << (p[i] * n + p[j]))
        })
        .min()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let corpus = ordered_flag_corpus(3);
        let by_size = |k: usize| corpus.iter().filter(|c| c.complex().vertex_count() == k).count();
        // one vertex; two vertices: empty or one edge; three vertices:
        // empty, one edge, three oriented paths, transitive triangle
        assert_eq!((by_size(1), by_size(2), by_size(3)), (1, 2, 6));
    }

    #[test]
    fn corpus_members_are_valid_flag_complexes() {
        for oc in ordered_flag_corpus(4) {
            assert!(oc.complex().is_flag());
        }
    }
}
