//! Deterministic random ordered flag complexes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Complex, VertexId};
use crate::ordering::{OrderRelation, OrderedComplex};
use crate::toolkit::fixtures::vertex_name;

/// A random graph on `n` vertices (each edge with probability 1/2), taken as
/// a flag complex and ordered by a random linear order of all vertices
/// restricted to the edges. Identical `(n, seed)` give identical output.
pub fn gen_random_ordered_flag(n: usize, seed: u64) -> OrderedComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<VertexId> = (0..n).map(vertex_name).collect();
    let mut position: Vec<usize> = (0..n).collect();
    position.shuffle(&mut rng);

    let mut edges = Vec::new();
    let mut rel = OrderRelation::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                let (lo, hi) = if position[i] < position[j] { (i, j) } else { (j, i) };
                edges.push((vertices[i].clone(), vertices[j].clone()));
                rel.insert(vertices[lo].clone(), vertices[hi].clone());
            }
        }
    }
    let c = Complex::flag(vertices, edges).expect("generated names are distinct");
    OrderedComplex::new(c, &rel).expect("a linear order restricted to edges satisfies the axioms")
}
