use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::tree::{divides, left_common_multiple, left_divides_planar, GenId, Generator, Kind, Tree};

use super::{Descriptor, EqSystem, Equation, SystemKind, Term, Variable};

/// Size limit for the inclusion-exclusion closure.
pub const INCL_EXCL_GUARD: usize = 20_000;

/// Stump system of the matching kind.
pub fn build_stump_system(p: &Presentation) -> Result<EqSystem> {
    match p.kind() {
        Kind::Nonsym => build_stump_system_nonsym(p),
        Kind::Shuffle => build_stump_system_shuffle(p),
    }
}

pub fn build_stump_system_nonsym(p: &Presentation) -> Result<EqSystem> {
    if p.kind() != Kind::Nonsym {
        return Err(Error::KindMismatch("the product stump system needs a nonsym operad".into()));
    }
    let rels: Vec<Tree> = p.relations().to_vec();
    Ok(StumpBuilder::new(p, rels, SystemKind::NonsymProduct).build())
}

/// Integral-equation system over planar-skeleton stumps.
pub fn build_stump_system_shuffle(p: &Presentation) -> Result<EqSystem> {
    if p.kind() != Kind::Shuffle {
        return Err(Error::KindMismatch("the C-operator system needs a shuffle operad".into()));
    }
    p.require_shuffle_regular()?;
    let rels: BTreeSet<Tree> = p.relations().iter().map(Tree::erase_labels).collect();
    Ok(StumpBuilder::new(p, rels.into_iter().collect(), SystemKind::ShuffleC).build())
}

fn var_name(shape: &Tree, gens: &[Generator]) -> String {
    match shape {
        Tree::Hole | Tree::Leaf(_) => "z".to_string(),
        Tree::Node(g, c) if c.iter().all(Tree::is_identity) => format!("y_{}", gens[g.index()].name),
        other => format!("y[{}]", other.encode(gens)),
    }
}

/// Stump builder on placeholder trees, shared by the product and the
/// C-operator systems. A generator over a tuple of child stumps is
/// rejected when a relation left-divides it, and otherwise lands on the
/// stump `g(truncated children)`.
struct StumpBuilder<'p> {
    p: &'p Presentation,
    rels: Vec<Tree>,
    kind: SystemKind,
    depth: usize,
}

impl<'p> StumpBuilder<'p> {
    fn new(p: &'p Presentation, rels: Vec<Tree>, kind: SystemKind) -> Self {
        StumpBuilder {
            p,
            rels,
            kind,
            depth: p.stump_depth(),
        }
    }

    fn build(&self) -> EqSystem {
        let gens = self.p.generators();
        let mut shapes: Vec<Tree> = vec![Tree::Hole];
        let mut index: HashMap<Tree, usize> = HashMap::from([(Tree::Hole, 0)]);
        // Grow the stump set to a fixed point, then emit terms once.
        let raw = loop {
            let (terms, new_shapes) = self.enumerate(&shapes, &index);
            if new_shapes.is_empty() {
                break terms;
            }
            for s in new_shapes {
                index.insert(s.clone(), shapes.len());
                shapes.push(s);
            }
        };
        finish(
            self.kind,
            gens,
            shapes
                .into_iter()
                .map(|s| if s.is_identity() { Descriptor::Ground } else { Descriptor::Stump(s) })
                .collect(),
            raw,
            |_| 1,
        )
    }

    /// All terms over the current stump set, plus targets not yet in it.
    fn enumerate(&self, shapes: &[Tree], index: &HashMap<Tree, usize>) -> (Vec<(usize, Term)>, Vec<Tree>) {
        let gens = self.p.generators();
        let cut = self.depth as isize - 3;
        let truncated: Vec<Tree> = shapes.iter().map(|s| s.truncate(cut)).collect();
        let mut terms = Vec::new();
        let mut fresh: BTreeSet<Tree> = BTreeSet::new();
        for (gi, gen) in gens.iter().enumerate() {
            let gid = GenId(gi as u16);
            let pats: Vec<&[Tree]> = self
                .rels
                .iter()
                .filter(|r| r.root_gen() == Some(gid))
                .map(|r| r.children())
                .collect();
            // matches[r][j][s]: pattern child j of relation r fits stump s
            let matches: Vec<Vec<Vec<bool>>> = pats
                .iter()
                .map(|pc| {
                    pc.iter()
                        .map(|c| shapes.iter().map(|s| left_divides_planar(c, s)).collect())
                        .collect()
                })
                .collect();
            let mut tuple = Vec::with_capacity(gen.arity);
            let alive: Vec<usize> = (0..pats.len()).collect();
            tuples(shapes.len(), gen.arity, &mut tuple, &alive, &matches, &mut |tup| {
                let target = Tree::Node(gid, tup.iter().map(|&s| truncated[s].clone()).collect());
                match index.get(&target) {
                    Some(&t) => terms.push((t, Term::new(gen.weight, tup.to_vec()))),
                    None => {
                        fresh.insert(target);
                    }
                }
            });
        }
        (terms, fresh.into_iter().collect())
    }
}

/// Enumerate tuples over `0..n_shapes`. `alive` holds the patterns that
/// still match the prefix; tuples matched in full by a pattern are skipped.
fn tuples(
    n_shapes: usize,
    arity: usize,
    tuple: &mut Vec<usize>,
    alive: &[usize],
    matches: &[Vec<Vec<bool>>],
    emit: &mut impl FnMut(&[usize]),
) {
    let j = tuple.len();
    if j == arity {
        if alive.is_empty() {
            emit(tuple);
        }
        return;
    }
    let mut next = Vec::with_capacity(alive.len());
    for s in 0..n_shapes {
        next.clear();
        next.extend(alive.iter().copied().filter(|&r| matches[r][j][s]));
        tuple.push(s);
        tuples(n_shapes, arity, tuple, &next, matches, emit);
        tuple.pop();
    }
}

/// Sort variables (ground first, then by size), renumber terms and merge
/// them into equations.
fn finish(
    kind: SystemKind,
    gens: &[Generator],
    descriptors: Vec<Descriptor>,
    raw: Vec<(usize, Term)>,
    multiplicity: impl Fn(&Descriptor) -> u64,
) -> EqSystem {
    let mut order: Vec<usize> = (0..descriptors.len()).collect();
    let key = |d: &Descriptor| match d.shape() {
        None => (0, Tree::Hole),
        Some(t) => (1 + t.vertex_count(), t.clone()),
    };
    order.sort_by_key(|&i| key(&descriptors[i]));
    let mut renum = vec![0; descriptors.len()];
    for (new, &old) in order.iter().enumerate() {
        renum[old] = new;
    }
    let variables: Vec<Variable> = order
        .iter()
        .map(|&i| {
            let d = descriptors[i].clone();
            let name = match &d {
                Descriptor::Ground => "z".to_string(),
                Descriptor::LeftIdeal(Tree::Hole) => "y_1".to_string(),
                other => var_name(other.shape().unwrap(), gens),
            };
            Variable {
                name,
                multiplicity: multiplicity(&d),
                descriptor: d,
            }
        })
        .collect();
    let ground = variables.iter().position(|v| v.descriptor == Descriptor::Ground).unwrap_or(0);
    let mut by_target: BTreeMap<usize, Vec<Term>> = BTreeMap::new();
    for (t, mut term) in raw {
        term.factors.iter_mut().for_each(|f| *f = renum[*f]);
        by_target.entry(renum[t]).or_default().push(term);
    }
    let equations = (0..variables.len())
        .filter(|&v| v != ground)
        .map(|v| {
            let mut terms = by_target.remove(&v).unwrap_or_default();
            terms.sort();
            Equation { target: v, terms }
        })
        .collect();
    let total = match variables.iter().position(|v| v.descriptor == Descriptor::LeftIdeal(Tree::Hole)) {
        Some(one) => vec![one],
        None => (0..variables.len()).collect(),
    };
    EqSystem {
        kind,
        variables,
        equations,
        ground,
        total,
        generators: gens.to_vec(),
    }
}

/// Inclusion-exclusion system over left ideals: `y_v` counts the basis
/// monomials that `v` left-divides, `y_1 = z + Σ_μ y_μ`.
pub fn build_incl_excl_system_nonsym(p: &Presentation) -> Result<EqSystem> {
    if p.kind() != Kind::Nonsym {
        return Err(Error::KindMismatch("inclusion-exclusion needs a nonsym operad".into()));
    }
    let gens = p.generators();
    let rels = p.relations();
    // descriptors[0] is the ground variable, descriptors[1] the identity.
    let mut descriptors = vec![Descriptor::Ground, Descriptor::LeftIdeal(Tree::Hole)];
    let mut index: HashMap<Tree, usize> = HashMap::from([(Tree::Hole, 1)]);
    let mut raw: Vec<(usize, Term)> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();

    let mut intern = |t: Tree, descriptors: &mut Vec<Descriptor>, queue: &mut Vec<usize>| -> Result<usize> {
        if let Some(&i) = index.get(&t) {
            return Ok(i);
        }
        if descriptors.len() >= INCL_EXCL_GUARD {
            return Err(Error::GrowthGuard(INCL_EXCL_GUARD));
        }
        let i = descriptors.len();
        index.insert(t.clone(), i);
        descriptors.push(Descriptor::LeftIdeal(t));
        queue.push(i);
        Ok(i)
    };

    raw.push((1, Term::new(0, vec![0])));
    for (gi, g) in gens.iter().enumerate() {
        let c = intern(Tree::corolla(GenId(gi as u16), g.arity), &mut descriptors, &mut queue)?;
        raw.push((1, Term::new(0, vec![c])));
    }
    while let Some(vi) = queue.pop() {
        let Descriptor::LeftIdeal(v) = descriptors[vi].clone() else { unreachable!() };
        let Tree::Node(g, vkids) = &v else { unreachable!() };
        let weight = gens[g.index()].weight;
        let phi: Vec<&Tree> = rels
            .iter()
            .filter(|r| r.root_gen() == Some(*g) && left_common_multiple(&[v.clone(), (*r).clone()]).is_some())
            .collect();
        if phi.len() > 20 {
            return Err(Error::GrowthGuard(INCL_EXCL_GUARD));
        }
        'subsets: for mask in 0u32..(1 << phi.len()) {
            let chosen: Vec<&Tree> = (0..phi.len()).filter(|i| mask >> i & 1 == 1).map(|i| phi[i]).collect();
            let mut factors = Vec::with_capacity(vkids.len());
            for (i, vk) in vkids.iter().enumerate() {
                let mut parts = vec![vk.clone()];
                parts.extend(chosen.iter().map(|r| r.children()[i].clone()));
                let Some(u) = left_common_multiple(&parts) else { continue 'subsets };
                if rels.iter().any(|r| divides(r, &u).unwrap_or(false)) {
                    continue 'subsets;
                }
                factors.push(u);
            }
            let mut ids = Vec::with_capacity(factors.len());
            for u in factors {
                ids.push(intern(u, &mut descriptors, &mut queue)?);
            }
            let sign = if chosen.len() % 2 == 0 { 1 } else { -1 };
            raw.push((
                vi,
                Term {
                    sign,
                    t_exp: weight,
                    factors: ids,
                    divisor: 1,
                },
            ));
        }
    }
    Ok(finish(SystemKind::NonsymProduct, gens, descriptors, raw, |_| 1))
}

/// Algebraic system over tree-skeleton classes of stumps. The variable of
/// a class is the exponential series of all basis monomials whose stump
/// lies in the class, and each term carries `1/Π m_i!` for the repeated
/// children of its multiset.
pub fn build_symmetric_regular_system(p: &Presentation) -> Result<EqSystem> {
    if p.kind() != Kind::Shuffle {
        return Err(Error::KindMismatch("symmetric regular systems need a shuffle operad".into()));
    }
    p.require_symmetric_regular()?;
    let gens = p.generators();
    let depth = p.stump_depth();
    let rels: BTreeSet<Tree> = p.relations().iter().map(|r| r.erase_labels().sorted_unordered()).collect();
    let rels: Vec<Tree> = rels.into_iter().collect();
    let cut = depth as isize - 3;

    let mut classes: Vec<Tree> = vec![Tree::Hole];
    let mut index: HashMap<Tree, usize> = HashMap::from([(Tree::Hole, 0)]);
    let raw = loop {
        let mut terms = Vec::new();
        let mut fresh: BTreeSet<Tree> = BTreeSet::new();
        for (gi, gen) in gens.iter().enumerate() {
            let gid = GenId(gi as u16);
            let pats: Vec<&Tree> = rels.iter().filter(|r| r.root_gen() == Some(gid)).collect();
            for multiset in multisets(classes.len(), gen.arity) {
                let composite = Tree::Node(gid, multiset.iter().map(|&k| classes[k].clone()).collect());
                if pats.iter().any(|r| left_divides_unordered(r, &composite)) {
                    continue;
                }
                let target = Tree::Node(gid, multiset.iter().map(|&k| classes[k].truncate(cut)).collect())
                    .sorted_unordered();
                match index.get(&target) {
                    Some(&t) => terms.push((
                        t,
                        Term {
                            sign: 1,
                            t_exp: gen.weight,
                            factors: multiset.clone(),
                            divisor: repeat_divisor(&multiset),
                        },
                    )),
                    None => {
                        fresh.insert(target);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break terms;
        }
        for t in fresh {
            index.insert(t.clone(), classes.len());
            classes.push(t);
        }
    };
    let descriptors = classes
        .into_iter()
        .map(|c| if c.is_identity() { Descriptor::Ground } else { Descriptor::SkeletonClass(c) })
        .collect();
    Ok(finish(SystemKind::SymmetricAlgebraic, gens, descriptors, raw, |d| match d {
        Descriptor::SkeletonClass(t) => crate::tree::Skeleton::tree(t).planar_realizations().len() as u64,
        _ => 1,
    }))
}

/// Non-decreasing index tuples of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn repeat_divisor(multiset: &[usize]) -> u64 {
    let mut d = 1u64;
    let mut run = 1u64;
    for w in multiset.windows(2) {
        if w[0] == w[1] {
            run += 1;
            d *= run;
        } else {
            run = 1;
        }
    }
    d
}

/// Root-anchored embedding of placeholder trees ignoring child order.
pub(crate) fn left_divides_unordered(w: &Tree, v: &Tree) -> bool {
    match (w, v) {
        (Tree::Hole | Tree::Leaf(_), _) => true,
        (Tree::Node(g, wc), Tree::Node(h, vc)) if g == h && wc.len() == vc.len() => {
            let mut used = vec![false; vc.len()];
            assign(wc, vc, 0, &mut used)
        }
        _ => false,
    }
}

fn assign(wc: &[Tree], vc: &[Tree], i: usize, used: &mut [bool]) -> bool {
    if i == wc.len() {
        return true;
    }
    for j in 0..vc.len() {
        if !used[j] && left_divides_unordered(&wc[i], &vc[j]) {
            used[j] = true;
            if assign(wc, vc, i + 1, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}
