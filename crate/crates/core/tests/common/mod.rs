#![allow(dead_code)]

use operad_gf::presentation::{expand_planar_skeleton, Presentation};
use operad_gf::tree::{GenId, Generator, Kind, Skeleton, Tree};
use rand::Rng;

/// One or two generators of arity 2 or 3.
pub fn random_generators<R: Rng>(rng: &mut R) -> Vec<Generator> {
    let count = rng.gen_range(1..=2);
    ["a", "b"][..count]
        .iter()
        .map(|name| Generator::new(*name, rng.gen_range(2..=3)))
        .collect()
}

/// A tree monomial with placeholder leaves and at most `levels` levels of
/// vertices; the root is always a vertex.
pub fn random_shape<R: Rng>(rng: &mut R, gens: &[Generator], levels: usize) -> Tree {
    let g = rng.gen_range(0..gens.len());
    let children = (0..gens[g].arity)
        .map(|_| {
            if levels > 1 && rng.gen_bool(0.45) {
                random_shape(rng, gens, levels - 1)
            } else {
                Tree::Hole
            }
        })
        .collect();
    Tree::node(GenId(g as u16), children)
}

pub fn random_nonsym<R: Rng>(rng: &mut R) -> Presentation {
    let gens = random_generators(rng);
    let count = rng.gen_range(1..=3);
    let rels = (0..count).map(|_| random_shape(rng, &gens, 3)).collect();
    Presentation::new(Kind::Nonsym, gens, rels).expect("valid random presentation")
}

/// Shuffle presentation whose relations are full planar-skeleton classes
/// of arity at most `max_arity`.
pub fn random_shuffle_regular<R: Rng>(rng: &mut R, max_arity: usize) -> Presentation {
    let gens = random_generators(rng);
    let count = rng.gen_range(1..=3);
    let skeletons: Vec<Skeleton> = (0..count)
        .map(|_| loop {
            let shape = random_shape(rng, &gens, 3);
            if shape.arity() <= max_arity {
                break Skeleton::planar(&shape);
            }
        })
        .collect();
    let rels = skeletons.iter().flat_map(expand_planar_skeleton).collect();
    Presentation::with_skeletons(Kind::Shuffle, gens, rels, skeletons).expect("valid random presentation")
}
