//! Brute-force basis enumeration, independent of the equation systems.
//!
//! Arity-`n` basis monomials are a root generator over a tuple of smaller
//! basis monomials (with a shuffle of the labels in shuffle mode). Since the
//! children already avoid every relation, only embeddings through the new
//! root need checking. Arities below the target are materialized in an
//! arena; the target arity is only counted.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::series::{shuffle_count, TPoly};
use crate::tree::{ordered_min_splits, GenId, Kind, Tree};

pub const DEFAULT_CEILING: u64 = 50_000_000;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Maximal number of candidates examined per arity.
    pub ceiling: u64,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            ceiling: DEFAULT_CEILING,
            parallel: true,
        }
    }
}

/// `dims[n-1] = dim P(n)` for `n = 1..=n_max`.
pub fn basis_dims(p: &Presentation, n_max: usize) -> Result<Vec<u64>> {
    basis_dims_with(p, n_max, OracleConfig::default())
}

pub fn basis_dims_with(p: &Presentation, n_max: usize, cfg: OracleConfig) -> Result<Vec<u64>> {
    let hist = Oracle::new(p, cfg).histograms(n_max)?;
    Ok(hist.iter().map(|h| h.iter().sum()).collect())
}

/// Graded dimensions: entry `n-1` is `Σ_k dim P(n)_k t^k` where `k` is the
/// total generator weight.
pub fn basis_dims_weighted(p: &Presentation, n_max: usize) -> Result<Vec<TPoly>> {
    basis_dims_weighted_with(p, n_max, OracleConfig::default())
}

pub fn basis_dims_weighted_with(p: &Presentation, n_max: usize, cfg: OracleConfig) -> Result<Vec<TPoly>> {
    let hist = Oracle::new(p, cfg).histograms(n_max)?;
    Ok(hist
        .into_iter()
        .map(|h| TPoly::new(h.into_iter().map(|c| BigRational::from_integer(BigInt::from(c))).collect()))
        .collect())
}

/// The explicit basis of arity `n`, in canonical realization for shuffle
/// operads and with placeholder leaves for nonsym ones.
pub fn basis_monomials(p: &Presentation, n: usize) -> Result<Vec<Tree>> {
    let mut o = Oracle::new(p, OracleConfig::default());
    if n == 0 {
        return Ok(Vec::new());
    }
    o.materialize_up_to(n)?;
    let mut out: Vec<Tree> = o.by_arity[n].iter().map(|&id| o.to_tree(id)).collect();
    out.sort();
    Ok(out)
}

struct Elem {
    gen: Option<GenId>,
    children: Vec<u32>,
    /// For shuffle elements: local labels assigned to each child.
    blocks: Vec<Vec<u8>>,
    degree: u32,
}

/// Relation rooted at a generator, kept as child patterns.
struct Pattern {
    children: Vec<Tree>,
}

struct Oracle<'a> {
    p: &'a Presentation,
    cfg: OracleConfig,
    shuffle: bool,
    elems: Vec<Elem>,
    by_arity: Vec<Vec<u32>>,
    /// Patterns indexed by root generator.
    patterns: Vec<Vec<Pattern>>,
}

impl<'a> Oracle<'a> {
    fn new(p: &'a Presentation, cfg: OracleConfig) -> Self {
        let mut patterns: Vec<Vec<Pattern>> = (0..p.generators().len()).map(|_| Vec::new()).collect();
        for r in p.relations() {
            if let Tree::Node(g, c) = r {
                patterns[g.index()].push(Pattern { children: c.clone() });
            }
        }
        Oracle {
            p,
            cfg,
            shuffle: p.kind() == Kind::Shuffle,
            elems: Vec::new(),
            by_arity: vec![Vec::new()],
            patterns,
        }
    }

    fn has_unary(&self) -> bool {
        self.p.generators().iter().any(|g| g.arity == 1)
    }

    fn histograms(&mut self, n_max: usize) -> Result<Vec<Vec<u64>>> {
        if n_max == 0 {
            return Ok(Vec::new());
        }
        if self.has_unary() {
            // Unary vertices keep the arity, so the target arity has to be
            // closed under them explicitly.
            self.materialize_up_to(n_max)?;
            return Ok((1..=n_max).map(|n| self.histogram_of(n)).collect());
        }
        self.materialize_up_to(n_max - 1)?;
        let mut out: Vec<Vec<u64>> = (1..n_max).map(|n| self.histogram_of(n)).collect();
        out.push(self.count_arity(n_max)?);
        Ok(out)
    }

    fn histogram_of(&self, n: usize) -> Vec<u64> {
        let mut h = vec![0u64];
        for &id in &self.by_arity[n] {
            let d = self.elems[id as usize].degree as usize;
            if d >= h.len() {
                h.resize(d + 1, 0);
            }
            h[d] += 1;
        }
        trim(h)
    }

    fn materialize_up_to(&mut self, n_max: usize) -> Result<()> {
        let p = self.p;
        for n in self.by_arity.len()..=n_max {
            let mut produced: Vec<Elem> = Vec::new();
            let mut candidates = 0u64;
            if n == 1 {
                produced.push(Elem {
                    gen: None,
                    children: Vec::new(),
                    blocks: Vec::new(),
                    degree: 0,
                });
            }
            for (gi, gen) in p.generators().iter().enumerate() {
                if gen.arity == 1 {
                    continue;
                }
                let gid = GenId(gi as u16);
                for sizes in compositions(n, gen.arity) {
                    if sizes.iter().any(|&s| self.by_arity[s].is_empty()) {
                        continue;
                    }
                    let splits = self.splits_for(&sizes);
                    let lists: Vec<&[u32]> = sizes.iter().map(|&s| self.by_arity[s].as_slice()).collect();
                    let mut tuple = Vec::with_capacity(sizes.len());
                    self.for_each_tuple(&lists, &mut tuple, &mut |slf, tup| {
                        let alive = slf.alive_patterns(gid, tup);
                        for split in &splits {
                            candidates += 1;
                            if !alive.is_empty() && slf.rejected(gid, tup, split, &alive) {
                                continue;
                            }
                            produced.push(slf.make_elem(gid, gen.weight, tup, split.clone()));
                        }
                    });
                    self.check_ceiling(candidates, n)?;
                }
            }
            // Close under unary generators, one layer at a time.
            let start = self.elems.len() as u32;
            let mut wave_lo = 0;
            self.elems.append(&mut produced);
            loop {
                let wave_hi = self.elems.len() as u32 - start;
                if wave_lo == wave_hi {
                    break;
                }
                let mut next = Vec::new();
                for (gi, gen) in p.generators().iter().enumerate() {
                    if gen.arity != 1 {
                        continue;
                    }
                    let gid = GenId(gi as u16);
                    for id in start + wave_lo..start + wave_hi {
                        candidates += 1;
                        let tup = [id];
                        let alive = self.alive_patterns(gid, &tup);
                        let split = if self.shuffle { vec![(1..=n as u8).collect()] } else { Vec::new() };
                        if !alive.is_empty() && self.rejected(gid, &tup, &split, &alive) {
                            continue;
                        }
                        next.push(self.make_elem(gid, gen.weight, &tup, split));
                    }
                }
                self.check_ceiling(candidates, n)?;
                wave_lo = wave_hi;
                self.elems.append(&mut next);
            }
            let end = self.elems.len() as u32;
            self.by_arity.push((start..end).collect());
        }
        Ok(())
    }

    fn make_elem(&self, gen: GenId, weight: u32, tuple: &[u32], blocks: Vec<Vec<u8>>) -> Elem {
        Elem {
            gen: Some(gen),
            children: tuple.to_vec(),
            blocks,
            degree: weight + tuple.iter().map(|&c| self.elems[c as usize].degree).sum::<u32>(),
        }
    }

    fn check_ceiling(&self, candidates: u64, arity: usize) -> Result<()> {
        if candidates > self.cfg.ceiling {
            return Err(Error::CountCeiling {
                arity,
                ceiling: self.cfg.ceiling,
            });
        }
        Ok(())
    }

    /// Label splits for child sizes; nonsym mode has a single trivial split.
    fn splits_for(&self, sizes: &[usize]) -> Vec<Vec<Vec<u8>>> {
        if !self.shuffle {
            return vec![Vec::new()];
        }
        let n: usize = sizes.iter().sum();
        let labels: Vec<u32> = (1..=n as u32).collect();
        ordered_min_splits(&labels, sizes)
            .into_iter()
            .map(|s| s.into_iter().map(|b| b.into_iter().map(|l| l as u8).collect()).collect())
            .collect()
    }

    fn for_each_tuple(&self, lists: &[&[u32]], tuple: &mut Vec<u32>, f: &mut impl FnMut(&Self, &[u32])) {
        if tuple.len() == lists.len() {
            f(self, tuple);
            return;
        }
        for &id in lists[tuple.len()] {
            tuple.push(id);
            self.for_each_tuple(lists, tuple, f);
            tuple.pop();
        }
    }

    /// Patterns at `gen` whose planar shape matches the full tuple.
    fn alive_patterns(&self, gen: GenId, tuple: &[u32]) -> Vec<usize> {
        self.patterns[gen.index()]
            .iter()
            .enumerate()
            .filter(|(_, pat)| pat.children.iter().zip(tuple).all(|(c, &id)| self.matches_planar(c, id)))
            .map(|(i, _)| i)
            .collect()
    }

    fn matches_planar(&self, pat: &Tree, id: u32) -> bool {
        match pat {
            Tree::Node(g, pc) => {
                let e = &self.elems[id as usize];
                e.gen == Some(*g) && pc.iter().zip(&e.children).all(|(c, &k)| self.matches_planar(c, k))
            }
            _ => true,
        }
    }

    /// Some alive pattern also satisfies the minima condition under `split`.
    fn rejected(&self, gen: GenId, tuple: &[u32], split: &[Vec<u8>], alive: &[usize]) -> bool {
        if !self.shuffle {
            return true;
        }
        let pats = &self.patterns[gen.index()];
        let mut pairs = Vec::new();
        alive.iter().any(|&pi| {
            pairs.clear();
            for ((c, &id), block) in pats[pi].children.iter().zip(tuple).zip(split) {
                self.collect_minima(c, id, block, &mut pairs);
            }
            pairs.sort_unstable();
            pairs.windows(2).all(|w| w[0].1 < w[1].1)
        })
    }

    /// `map[i]` is the label (in the ambient numbering) of local label `i+1`.
    fn collect_minima(&self, pat: &Tree, id: u32, map: &[u8], pairs: &mut Vec<(u32, u8)>) {
        match pat {
            Tree::Leaf(l) => pairs.push((*l, map[0])),
            Tree::Hole => {}
            Tree::Node(_, pc) => {
                let e = &self.elems[id as usize];
                for ((c, &k), block) in pc.iter().zip(&e.children).zip(&e.blocks) {
                    let sub: Vec<u8> = block.iter().map(|&b| map[b as usize - 1]).collect();
                    self.collect_minima(c, k, &sub, pairs);
                }
            }
        }
    }

    /// Count the arity-`n` basis without materializing it.
    fn count_arity(&self, n: usize) -> Result<Vec<u64>> {
        if n == 1 {
            return Ok(vec![1]);
        }
        let hists: Vec<Vec<u64>> = (0..n).map(|k| if k == 0 { Vec::new() } else { self.histogram_of(k) }).collect();
        let mut total = vec![0u64];
        let mut candidates = 0u64;
        for (gi, gen) in self.p.generators().iter().enumerate() {
            let gid = GenId(gi as u16);
            for sizes in compositions(n, gen.arity) {
                if sizes.iter().any(|&s| self.by_arity[s].is_empty()) {
                    continue;
                }
                let splits = self.splits_for(&sizes);
                let free_splits = if self.shuffle {
                    u64::try_from(shuffle_count(&sizes)).unwrap_or(u64::MAX)
                } else {
                    1
                };
                let all_pats: Vec<usize> = (0..self.patterns[gi].len()).collect();
                let job = CountJob {
                    gen: gid,
                    sizes: &sizes,
                    hists: &hists,
                    splits: &splits,
                    free_splits,
                };
                let first = &self.by_arity[sizes[0]];
                let results: Vec<(Vec<u64>, u64)> = if self.cfg.parallel && first.len() > 64 {
                    first
                        .par_iter()
                        .map(|&id| self.count_from(&job, vec![id], &all_pats))
                        .collect()
                } else {
                    first.iter().map(|&id| self.count_from(&job, vec![id], &all_pats)).collect()
                };
                let mut h = vec![0u64];
                for (r, c) in results {
                    add_into(&mut h, &r);
                    candidates = candidates.saturating_add(c);
                }
                self.check_ceiling(candidates, n)?;
                add_into(&mut total, &shift(&h, gen.weight as usize));
            }
        }
        Ok(trim(total))
    }

    /// Degree histogram of completions of a tuple prefix; also returns the
    /// number of candidates represented.
    fn count_from(&self, job: &CountJob, mut prefix: Vec<u32>, alive: &[usize]) -> (Vec<u64>, u64) {
        let pats = &self.patterns[job.gen.index()];
        let k = prefix.len() - 1;
        let last = prefix[k];
        let alive: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&pi| self.matches_planar(&pats[pi].children[k], last))
            .collect();
        let prefix_degree: usize = prefix.iter().map(|&c| self.elems[c as usize].degree as usize).sum();
        if alive.is_empty() {
            // Every completion survives.
            let mut h = vec![0u64; prefix_degree + 1];
            h[prefix_degree] = job.free_splits;
            for &s in &job.sizes[prefix.len()..] {
                h = convolve(&h, &job.hists[s]);
            }
            let c = h.iter().sum();
            return (h, c);
        }
        if prefix.len() == job.sizes.len() {
            let mut good = 0u64;
            for split in job.splits {
                if !self.rejected(job.gen, &prefix, split, &alive) {
                    good += 1;
                }
            }
            let mut h = vec![0u64; prefix_degree + 1];
            h[prefix_degree] = good;
            return (h, job.splits.len() as u64);
        }
        let mut h = vec![0u64];
        let mut cands = 0u64;
        for &id in &self.by_arity[job.sizes[prefix.len()]] {
            prefix.push(id);
            let (r, c) = self.count_from(job, prefix.clone(), &alive);
            prefix.pop();
            add_into(&mut h, &r);
            cands = cands.saturating_add(c);
        }
        (h, cands)
    }

    fn to_tree(&self, id: u32) -> Tree {
        let n = self.arity_of(id);
        let map: Vec<u8> = (1..=n as u8).collect();
        self.to_tree_mapped(id, &map)
    }

    fn arity_of(&self, id: u32) -> usize {
        let e = &self.elems[id as usize];
        match e.gen {
            None => 1,
            Some(_) => e.children.iter().map(|&c| self.arity_of(c)).sum(),
        }
    }

    fn to_tree_mapped(&self, id: u32, map: &[u8]) -> Tree {
        let e = &self.elems[id as usize];
        match e.gen {
            None if self.shuffle => Tree::Leaf(map[0] as u32),
            None => Tree::Hole,
            Some(g) => {
                let kids = if self.shuffle {
                    e.children
                        .iter()
                        .zip(&e.blocks)
                        .map(|(&c, b)| {
                            let sub: Vec<u8> = b.iter().map(|&l| map[l as usize - 1]).collect();
                            self.to_tree_mapped(c, &sub)
                        })
                        .collect()
                } else {
                    e.children.iter().map(|&c| self.to_tree_mapped(c, map)).collect()
                };
                Tree::Node(g, kids)
            }
        }
    }
}

struct CountJob<'j> {
    gen: GenId,
    sizes: &'j [usize],
    hists: &'j [Vec<u64>],
    splits: &'j [Vec<Vec<u8>>],
    free_splits: u64,
}

/// Ordered compositions of `n` into `k` positive parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    comp_rec(n, k, &mut cur, &mut out);
    out
}

fn comp_rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        if n == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if n < k {
        return;
    }
    for first in 1..=n - (k - 1) {
        cur.push(first);
        comp_rec(n - first, k - 1, cur, out);
        cur.pop();
    }
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![0];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].saturating_add(x.saturating_mul(y));
        }
    }
    out
}

fn add_into(acc: &mut Vec<u64>, h: &[u64]) {
    if acc.len() < h.len() {
        acc.resize(h.len(), 0);
    }
    for (a, &b) in acc.iter_mut().zip(h) {
        *a = a.saturating_add(b);
    }
}

fn shift(h: &[u64], by: usize) -> Vec<u64> {
    let mut out = vec![0u64; by];
    out.extend_from_slice(h);
    out
}

fn trim(mut h: Vec<u64>) -> Vec<u64> {
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    h
}
