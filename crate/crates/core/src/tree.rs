//! Tree monomials of free non-symmetric and shuffle operads.
//!
//! A monomial is a rooted planar tree whose internal vertices carry
//! generators. Non-symmetric monomials and skeletons use placeholder
//! leaves ([`Tree::Hole`]); shuffle monomials carry leaf labels
//! ([`Tree::Leaf`]) and are stored in their canonical realization, where
//! the children of every vertex are ordered by the minimal leaf label
//! reachable through them.
//!
//! Levels count edges from the root, so the root vertex sits at level 0.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenId(pub u16);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub arity: usize,
    /// Internal grading degree; the exponent of `t` contributed by one vertex.
    pub weight: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Generator {
            name: name.into(),
            arity,
            weight: 1,
        }
    }

    pub fn with_weight(mut self, weight: u32) -> Self {
        self.weight = weight;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Nonsym,
    Shuffle,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Nonsym => f.write_str("nonsym"),
            Kind::Shuffle => f.write_str("shuffle"),
        }
    }
}

/// A rooted planar tree with generator-labeled vertices.
///
/// The derived ordering is structural and is what `tree_skeleton` uses to
/// sort children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    /// A labeled input `x_i` of a shuffle monomial.
    Leaf(u32),
    /// An unlabeled input.
    Hole,
    Node(GenId, Vec<Tree>),
}

impl Tree {
    pub fn node(gen: GenId, children: Vec<Tree>) -> Tree {
        Tree::Node(gen, children)
    }

    /// The corolla of `gen` with placeholder leaves.
    pub fn corolla(gen: GenId, arity: usize) -> Tree {
        Tree::Node(gen, vec![Tree::Hole; arity])
    }

    pub fn is_identity(&self) -> bool {
        !matches!(self, Tree::Node(..))
    }

    pub fn root_gen(&self) -> Option<GenId> {
        match self {
            Tree::Node(g, _) => Some(*g),
            _ => None,
        }
    }

    pub fn children(&self) -> &[Tree] {
        match self {
            Tree::Node(_, c) => c,
            _ => &[],
        }
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        match self {
            Tree::Node(_, c) => c.iter().map(Tree::arity).sum(),
            _ => 1,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Tree::Node(_, c) => 1 + c.iter().map(Tree::vertex_count).sum::<usize>(),
            _ => 0,
        }
    }

    /// Sum of generator weights over internal vertices.
    pub fn degree(&self, gens: &[Generator]) -> u32 {
        match self {
            Tree::Node(g, c) => gens[g.index()].weight + c.iter().map(|t| t.degree(gens)).sum::<u32>(),
            _ => 0,
        }
    }

    /// Maximal level of a leaf.
    pub fn leaf_depth(&self) -> usize {
        match self {
            Tree::Node(_, c) => 1 + c.iter().map(Tree::leaf_depth).max().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn has_labels(&self) -> bool {
        match self {
            Tree::Leaf(_) => true,
            Tree::Hole => false,
            Tree::Node(_, c) => c.iter().any(Tree::has_labels),
        }
    }

    pub fn has_holes(&self) -> bool {
        match self {
            Tree::Leaf(_) => false,
            Tree::Hole => true,
            Tree::Node(_, c) => c.iter().any(Tree::has_holes),
        }
    }

    /// Leaf labels in planar (left-to-right) order.
    pub fn leaf_labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<u32>) {
        match self {
            Tree::Leaf(l) => out.push(*l),
            Tree::Hole => {}
            Tree::Node(_, c) => c.iter().for_each(|t| t.collect_labels(out)),
        }
    }

    /// Smallest leaf label in the tree, if any leaf is labeled.
    pub fn min_label(&self) -> Option<u32> {
        match self {
            Tree::Leaf(l) => Some(*l),
            Tree::Hole => None,
            Tree::Node(_, c) => c.iter().filter_map(Tree::min_label).min(),
        }
    }

    /// Replace every leaf by a placeholder.
    pub fn erase_labels(&self) -> Tree {
        match self {
            Tree::Leaf(_) | Tree::Hole => Tree::Hole,
            Tree::Node(g, c) => Tree::Node(*g, c.iter().map(Tree::erase_labels).collect()),
        }
    }

    /// Keep vertices at level `<= max_level`; deeper subtrees become holes.
    /// A negative bound keeps nothing but the root edge.
    pub fn truncate(&self, max_level: isize) -> Tree {
        match self {
            Tree::Node(g, c) if max_level >= 0 => {
                Tree::Node(*g, c.iter().map(|t| t.truncate(max_level - 1)).collect())
            }
            _ => Tree::Hole,
        }
    }

    /// Recursively sort children so that planar realizations of one
    /// abstract tree compare equal.
    pub fn sorted_unordered(&self) -> Tree {
        match self {
            Tree::Node(g, c) => {
                let mut kids: Vec<Tree> = c.iter().map(Tree::sorted_unordered).collect();
                kids.sort();
                Tree::Node(*g, kids)
            }
            other => other.clone(),
        }
    }

    /// Replace the holes of `self`, left to right, by `subs`.
    pub fn graft(&self, subs: &[Tree]) -> Tree {
        let mut it = subs.iter();
        let out = self.graft_inner(&mut it);
        debug_assert!(it.next().is_none());
        out
    }

    fn graft_inner<'a>(&self, it: &mut impl Iterator<Item = &'a Tree>) -> Tree {
        match self {
            Tree::Hole => it.next().cloned().unwrap_or(Tree::Hole),
            Tree::Leaf(l) => Tree::Leaf(*l),
            Tree::Node(g, c) => Tree::Node(*g, c.iter().map(|t| t.graft_inner(it)).collect()),
        }
    }

    /// All subtrees in preorder.
    pub fn subtrees(&self) -> Vec<&Tree> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            if let Tree::Node(_, c) = t {
                stack.extend(c.iter().rev());
            }
        }
        out
    }

    /// Validate child counts against a generator table.
    pub fn check_arities(&self, gens: &[Generator]) -> Result<()> {
        if let Tree::Node(g, c) = self {
            let gen = gens
                .get(g.index())
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", g.0)))?;
            if gen.arity != c.len() {
                return Err(Error::ArityMismatch {
                    name: gen.name.clone(),
                    expected: gen.arity,
                    found: c.len(),
                });
            }
            for t in c {
                t.check_arities(gens)?;
            }
        }
        Ok(())
    }

    pub fn display<'a>(&'a self, gens: &'a [Generator]) -> DisplayTree<'a> {
        DisplayTree { tree: self, gens }
    }

    /// Canonical text encoding, usable as a dictionary key.
    pub fn encode(&self, gens: &[Generator]) -> String {
        self.display(gens).to_string()
    }
}

pub struct DisplayTree<'a> {
    tree: &'a Tree,
    gens: &'a [Generator],
}

impl fmt::Display for DisplayTree<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            Tree::Leaf(l) => write!(f, "x{l}"),
            Tree::Hole => f.write_str("-"),
            Tree::Node(g, c) => {
                match self.gens.get(g.index()) {
                    Some(gen) => f.write_str(&gen.name)?,
                    None => write!(f, "#{}", g.0)?,
                }
                f.write_str("(")?;
                for (i, t) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", t.display(self.gens))?;
                }
                f.write_str(")")
            }
        }
    }
}

fn check_leaf_kind(t: &Tree) -> Result<LeafKind> {
    match (t.has_labels(), t.has_holes()) {
        (true, true) => Err(Error::KindMismatch(
            "tree mixes labeled and placeholder leaves".into(),
        )),
        (true, false) => Ok(LeafKind::Labeled),
        _ => Ok(LeafKind::Holes),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LeafKind {
    Labeled,
    Holes,
}

fn check_labels_exact(t: &Tree) -> Result<()> {
    let mut labels = t.leaf_labels();
    if labels.len() != t.arity() {
        return Err(Error::InvalidLabeling("unlabeled leaves in a shuffle monomial".into()));
    }
    labels.sort_unstable();
    for (i, &l) in labels.iter().enumerate() {
        if l as usize != i + 1 {
            let msg = if i > 0 && labels[i - 1] == l {
                format!("label {l} appears twice")
            } else {
                format!("label {} is missing", i + 1)
            };
            return Err(Error::InvalidLabeling(msg));
        }
    }
    Ok(())
}

/// Planar embedding of an abstract shuffle tree with children ordered by
/// their minimal leaves.
pub fn canonical_realization(tree: &Tree) -> Result<Tree> {
    check_labels_exact(tree)?;
    Ok(sort_by_minima(tree))
}

fn sort_by_minima(t: &Tree) -> Tree {
    match t {
        Tree::Node(g, c) => {
            let mut kids: Vec<Tree> = c.iter().map(sort_by_minima).collect();
            kids.sort_by_key(|k| k.min_label());
            Tree::Node(*g, kids)
        }
        other => other.clone(),
    }
}

pub fn is_valid_shuffle(m: &Tree) -> bool {
    check_labels_exact(m).is_ok() && minima_increasing(m)
}

fn minima_increasing(t: &Tree) -> bool {
    match t {
        Tree::Node(_, c) => {
            let mins: Vec<Option<u32>> = c.iter().map(Tree::min_label).collect();
            mins.windows(2).all(|w| w[0] < w[1]) && c.iter().all(minima_increasing)
        }
        _ => true,
    }
}

/// Match the planar shape of `w` at the root of `v`. For labeled `w`,
/// records `(label of w's leaf, minimal label of the hanging subtree of v)`.
fn embed_at_root(w: &Tree, v: &Tree, pairs: &mut Vec<(u32, u32)>) -> bool {
    match (w, v) {
        (Tree::Hole, _) => true,
        (Tree::Leaf(l), _) => match v.min_label() {
            Some(m) => {
                pairs.push((*l, m));
                true
            }
            None => false,
        },
        (Tree::Node(g, wc), Tree::Node(h, vc)) => {
            g == h && wc.len() == vc.len() && wc.iter().zip(vc).all(|(a, b)| embed_at_root(a, b, pairs))
        }
        _ => false,
    }
}

fn minima_order_matches(pairs: &mut [(u32, u32)]) -> bool {
    pairs.sort_unstable();
    pairs.windows(2).all(|p| p[0].1 < p[1].1)
}

fn left_divides_unchecked(w: &Tree, v: &Tree, labeled: bool) -> bool {
    let mut pairs = Vec::new();
    if !embed_at_root(w, v, &mut pairs) {
        return false;
    }
    !labeled || minima_order_matches(&mut pairs)
}

fn same_kind(w: &Tree, v: &Tree) -> Result<bool> {
    let kw = check_leaf_kind(w)?;
    let kv = check_leaf_kind(v)?;
    // The identity holds no information about the kind.
    if w.is_identity() {
        return Ok(kv == LeafKind::Labeled);
    }
    if kw != kv {
        return Err(Error::KindMismatch(
            "divisor and monomial use different leaf kinds".into(),
        ));
    }
    Ok(kw == LeafKind::Labeled)
}

/// `w` divides `v`: some connected planar subtree of `v` matches `w`,
/// and for shuffle monomials the minima hanging off the subtree's inputs
/// are ordered like the leaves of `w`.
pub fn divides(w: &Tree, v: &Tree) -> Result<bool> {
    let labeled = same_kind(w, v)?;
    if w.is_identity() {
        return Ok(true);
    }
    Ok(v.subtrees().into_iter().any(|u| left_divides_unchecked(w, u, labeled)))
}

/// `w` divides `v` through a subtree sharing the root of `v`.
pub fn left_divides(w: &Tree, v: &Tree) -> Result<bool> {
    let labeled = same_kind(w, v)?;
    if w.is_identity() {
        return Ok(true);
    }
    Ok(left_divides_unchecked(w, v, labeled))
}

/// Root-anchored planar match of placeholder trees. Both arguments must
/// use placeholder leaves.
pub fn left_divides_planar(w: &Tree, v: &Tree) -> bool {
    match (w, v) {
        (Tree::Hole, _) | (Tree::Leaf(_), _) => true,
        (Tree::Node(g, wc), Tree::Node(h, vc)) => {
            g == h && wc.len() == vc.len() && wc.iter().zip(vc).all(|(a, b)| left_divides_planar(a, b))
        }
        _ => false,
    }
}

/// Planar divisibility ignoring labels.
pub fn divides_planar(w: &Tree, v: &Tree) -> bool {
    w.is_identity() || v.subtrees().into_iter().any(|u| left_divides_planar(w, u))
}

/// Overlay placeholder trees at a common root; `None` on a label clash.
pub fn left_common_multiple(ms: &[Tree]) -> Option<Tree> {
    let mut acc = Tree::Hole;
    for m in ms {
        acc = overlay(&acc, m)?;
    }
    Some(acc)
}

fn overlay(a: &Tree, b: &Tree) -> Option<Tree> {
    match (a, b) {
        (Tree::Node(g, ac), Tree::Node(h, bc)) => {
            if g != h || ac.len() != bc.len() {
                return None;
            }
            let kids = ac.iter().zip(bc).map(|(x, y)| overlay(x, y)).collect::<Option<Vec<_>>>()?;
            Some(Tree::Node(*g, kids))
        }
        (Tree::Node(..), _) => Some(a.erase_labels()),
        (_, t) => Some(t.erase_labels()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SkeletonFlavor {
    Planar,
    Tree,
}

/// A tree with placeholder leaves. Tree-flavored skeletons keep their
/// children sorted so that equality ignores planar order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Skeleton {
    shape: Tree,
    flavor: SkeletonFlavor,
}

impl Skeleton {
    pub fn planar(shape: &Tree) -> Skeleton {
        Skeleton {
            shape: shape.erase_labels(),
            flavor: SkeletonFlavor::Planar,
        }
    }

    pub fn tree(shape: &Tree) -> Skeleton {
        Skeleton {
            shape: shape.erase_labels().sorted_unordered(),
            flavor: SkeletonFlavor::Tree,
        }
    }

    pub fn shape(&self) -> &Tree {
        &self.shape
    }

    pub fn flavor(&self) -> SkeletonFlavor {
        self.flavor
    }

    /// Distinct planar trees whose tree skeleton is this one.
    pub fn planar_realizations(&self) -> Vec<Tree> {
        let mut out = planar_realizations(&self.shape);
        out.sort();
        out.dedup();
        out
    }
}

pub fn planar_skeleton(m: &Tree) -> Skeleton {
    Skeleton::planar(m)
}

pub fn tree_skeleton(m: &Tree) -> Skeleton {
    Skeleton::tree(m)
}

fn planar_realizations(t: &Tree) -> Vec<Tree> {
    match t {
        Tree::Node(g, c) => {
            let options: Vec<Vec<Tree>> = c.iter().map(planar_realizations).collect();
            let mut out = Vec::new();
            let mut order: Vec<usize> = (0..c.len()).collect();
            let mut seen_orders = std::collections::BTreeSet::new();
            loop {
                // Permutations that only swap equal children give the same trees.
                let key: Vec<&Tree> = order.iter().map(|&i| &c[i]).collect();
                if seen_orders.insert(key) {
                    let slots: Vec<&Vec<Tree>> = order.iter().map(|&i| &options[i]).collect();
                    for combo in cartesian(&slots) {
                        out.push(Tree::Node(*g, combo));
                    }
                }
                if !next_permutation(&mut order) {
                    break;
                }
            }
            out
        }
        other => vec![other.clone()],
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn cartesian(slots: &[&Vec<Tree>]) -> Vec<Vec<Tree>> {
    let mut acc: Vec<Vec<Tree>> = vec![Vec::new()];
    for slot in slots {
        let mut next = Vec::with_capacity(acc.len() * slot.len());
        for prefix in &acc {
            for t in slot.iter() {
                let mut p = prefix.clone();
                p.push(t.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// Splits of the sorted label list into consecutive blocks of the given
/// sizes (as sets) with strictly increasing minima, so the first block
/// always contains the smallest label.
pub fn ordered_min_splits(labels: &[u32], sizes: &[usize]) -> Vec<Vec<Vec<u32>>> {
    debug_assert_eq!(labels.len(), sizes.iter().sum::<usize>());
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(sizes.len());
    splits_rec(labels, sizes, &mut current, &mut out);
    out
}

fn splits_rec(labels: &[u32], sizes: &[usize], current: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
    let Some((&size, rest_sizes)) = sizes.split_first() else {
        out.push(current.clone());
        return;
    };
    let (&first, rest) = labels.split_first().expect("sizes sum to label count");
    for chosen in subsets_of_size(rest.len(), size - 1) {
        let mut block = Vec::with_capacity(size);
        block.push(first);
        let mut remaining = Vec::with_capacity(rest.len() + 1 - size);
        let mut ci = 0;
        for (i, &l) in rest.iter().enumerate() {
            if ci < chosen.len() && chosen[ci] == i {
                block.push(l);
                ci += 1;
            } else {
                remaining.push(l);
            }
        }
        current.push(block);
        splits_rec(&remaining, rest_sizes, current, out);
        current.pop();
    }
}

/// All increasing index tuples of length `k` drawn from `0..n`.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All valid shuffle labelings of a planar placeholder tree.
pub fn shuffle_labelings(shape: &Tree) -> Vec<Tree> {
    let labels: Vec<u32> = (1..=shape.arity() as u32).collect();
    label_into(shape, &labels)
}

fn label_into(shape: &Tree, labels: &[u32]) -> Vec<Tree> {
    match shape {
        Tree::Node(g, c) => {
            let sizes: Vec<usize> = c.iter().map(Tree::arity).collect();
            let mut out = Vec::new();
            for split in ordered_min_splits(labels, &sizes) {
                let options: Vec<Vec<Tree>> = c.iter().zip(&split).map(|(t, b)| label_into(t, b)).collect();
                let slots: Vec<&Vec<Tree>> = options.iter().collect();
                for combo in cartesian(&slots) {
                    out.push(Tree::Node(*g, combo));
                }
            }
            out
        }
        _ => vec![Tree::Leaf(labels[0])],
    }
}

/// Stump of `v` for relation depth `d`: the maximal left divisor whose
/// leaves sit at level `< d`, with labels erased.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stump {
    pub shape: Tree,
    pub depth: usize,
}

pub fn stump(v: &Tree, d: usize) -> Stump {
    Stump {
        shape: v.truncate(d as isize - 2),
        depth: d,
    }
}

/// Compare trees by canonical encoding independent of generator names.
pub fn cmp_trees(a: &Tree, b: &Tree) -> Ordering {
    a.cmp(b)
}

/// Parse a monomial such as `m(m(x1,x2),x3)` or `m(-,m(-,-))`.
pub fn parse_monomial(text: &str, gens: &[Generator]) -> Result<Tree> {
    let mut p = MonomialParser {
        src: text.as_bytes(),
        pos: 0,
        gens,
    };
    p.skip_ws();
    let t = p.tree()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

/// Parse error positions are reported as 1-based columns within the text.
pub(crate) struct MonomialParser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [Generator],
}

impl MonomialParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            line: 1,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> Option<&str> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            None
        } else {
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Tree::Hole);
        }
        let start = self.pos;
        let Some(name) = self.ident().map(str::to_string) else {
            return Err(self.error("expected a generator, `-` or a leaf `x<n>`"));
        };
        self.skip_ws();
        if self.peek() != Some(b'(') {
            if let Some(num) = name.strip_prefix('x') {
                if let Ok(label) = num.parse::<u32>() {
                    if label == 0 {
                        self.pos = start;
                        return Err(self.error("leaf labels start at 1"));
                    }
                    return Ok(Tree::Leaf(label));
                }
            }
            self.pos = start;
            return Err(self.error(&format!("expected `(` after `{name}`")));
        }
        self.pos += 1;
        let Some(gid) = self.gens.iter().position(|g| g.name == name) else {
            self.pos = start;
            return Err(Error::UnknownGenerator(name));
        };
        let mut children = Vec::new();
        loop {
            children.push(self.tree()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected `,` or `)`")),
            }
        }
        let gen = &self.gens[gid];
        if gen.arity != children.len() {
            return Err(Error::ArityMismatch {
                name: gen.name.clone(),
                expected: gen.arity,
                found: children.len(),
            });
        }
        Ok(Tree::Node(GenId(gid as u16), children))
    }
}
