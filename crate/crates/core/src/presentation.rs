//! Presentations of monomial operads: generators plus leading-term
//! relations, a small line-oriented DSL, skeleton expansion and the
//! regularity checks used by the shuffle builders.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::tree::{
    canonical_realization, divides, parse_monomial, shuffle_labelings, GenId,
    Generator, Kind, Skeleton, SkeletonFlavor, Tree,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    kind: Kind,
    generators: Vec<Generator>,
    relations: Vec<Tree>,
    source_skeletons: Vec<Skeleton>,
}

impl Presentation {
    /// Validate and reduce. Nonsym relations are stored with placeholder
    /// leaves, shuffle relations in canonical realization.
    pub fn new(kind: Kind, generators: Vec<Generator>, relations: Vec<Tree>) -> Result<Presentation> {
        Self::with_skeletons(kind, generators, relations, Vec::new())
    }

    pub fn with_skeletons(
        kind: Kind,
        generators: Vec<Generator>,
        relations: Vec<Tree>,
        source_skeletons: Vec<Skeleton>,
    ) -> Result<Presentation> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.arity == 0 {
                return Err(Error::InvalidGenerator(format!("`{}` has arity 0", g.name)));
            }
            if !valid_name(&g.name) {
                return Err(Error::InvalidGenerator(format!("`{}` is not a valid name", g.name)));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        if generators.len() > u16::MAX as usize {
            return Err(Error::InvalidGenerator("too many generators".into()));
        }
        let mut normalized = Vec::with_capacity(relations.len());
        for r in relations {
            r.check_arities(&generators)?;
            if r.is_identity() {
                return Err(Error::InvalidLabeling("the identity cannot be a relation".into()));
            }
            let r = match kind {
                Kind::Nonsym => r.erase_labels(),
                Kind::Shuffle => {
                    if r.has_holes() {
                        return Err(Error::InvalidLabeling(format!(
                            "shuffle relation `{}` needs leaf labels x1..xn",
                            r.encode(&generators)
                        )));
                    }
                    canonical_realization(&r)?
                }
            };
            normalized.push(r);
        }
        Ok(Presentation {
            kind,
            relations: reduce(normalized),
            generators,
            source_skeletons,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Tree] {
        &self.relations
    }

    pub fn source_skeletons(&self) -> &[Skeleton] {
        &self.source_skeletons
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.generators[id.index()]
    }

    pub fn gen_id(&self, name: &str) -> Option<GenId> {
        self.generators.iter().position(|g| g.name == name).map(|i| GenId(i as u16))
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Tree> {
        parse_monomial(text, &self.generators)
    }

    pub fn encode(&self, t: &Tree) -> String {
        t.encode(&self.generators)
    }

    /// Maximal leaf level over the relations (0 without relations).
    pub fn relation_depth(&self) -> usize {
        self.relations.iter().map(Tree::leaf_depth).max().unwrap_or(0)
    }

    /// Depth bound used for stumps. Depth 1 would make every stump the
    /// identity, so the bound never drops below 2.
    pub fn stump_depth(&self) -> usize {
        self.relation_depth().max(2)
    }

    pub fn is_weighted(&self) -> bool {
        self.generators.iter().any(|g| g.weight != 1)
    }

    /// Returns a copy with the same generators and an extra relation.
    pub fn with_relation(&self, rel: Tree) -> Result<Presentation> {
        let mut rels = self.relations.clone();
        rels.push(rel);
        Presentation::with_skeletons(self.kind, self.generators.clone(), rels, self.source_skeletons.clone())
    }

    /// True iff no relation divides a different one.
    pub fn is_reduced(&self) -> bool {
        self.relations.iter().enumerate().all(|(i, a)| {
            self.relations
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !divides(a, b).unwrap_or(false))
        })
    }

    fn in_ideal(&self, m: &Tree) -> bool {
        self.relations.iter().any(|r| divides(r, m).unwrap_or(false))
    }

    /// Class-mates of relations (under `expand`) lying outside the ideal.
    fn missing_from_classes(&self, expand: impl Fn(&Tree) -> Vec<Tree>) -> Vec<Tree> {
        let mut missing = BTreeSet::new();
        for r in &self.relations {
            for m in expand(r) {
                if !self.in_ideal(&m) {
                    missing.insert(m);
                }
            }
        }
        missing.into_iter().collect()
    }

    pub fn shuffle_regular_missing(&self) -> Result<Vec<Tree>> {
        self.require_shuffle()?;
        Ok(self.missing_from_classes(|r| expand_planar_skeleton(&Skeleton::planar(r))))
    }

    pub fn symmetric_regular_missing(&self) -> Result<Vec<Tree>> {
        self.require_shuffle()?;
        Ok(self.missing_from_classes(|r| expand_tree_skeleton(&Skeleton::tree(r))))
    }

    /// Every monomial sharing a planar skeleton with a relation lies in the
    /// relation ideal.
    pub fn check_shuffle_regular(&self) -> bool {
        self.shuffle_regular_missing().is_ok_and(|m| m.is_empty())
    }

    /// Every monomial sharing a tree skeleton with a relation lies in the
    /// relation ideal.
    pub fn check_symmetric_regular(&self) -> bool {
        self.symmetric_regular_missing().is_ok_and(|m| m.is_empty())
    }

    pub fn require_shuffle_regular(&self) -> Result<()> {
        let missing = self.shuffle_regular_missing()?;
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::NotShuffleRegular {
                missing: missing.iter().map(|m| self.encode(m)).collect(),
            })
        }
    }

    pub fn require_symmetric_regular(&self) -> Result<()> {
        let missing = self.symmetric_regular_missing()?;
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::NotSymmetricRegular {
                missing: missing.iter().map(|m| self.encode(m)).collect(),
            })
        }
    }

    fn require_shuffle(&self) -> Result<()> {
        if self.kind != Kind::Shuffle {
            return Err(Error::KindMismatch("regularity is defined for shuffle operads".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "generators": self.generators.iter().map(|g| json!({
                "name": g.name, "arity": g.arity, "weight": g.weight,
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| tree_json(r, &self.generators)).collect::<Vec<_>>(),
            "source_skeletons": self.source_skeletons.iter().map(|s| json!({
                "flavor": s.flavor(),
                "shape": tree_json(s.shape(), &self.generators),
            })).collect::<Vec<_>>(),
        })
    }

    /// Text in the DSL that parses back to an equal presentation.
    pub fn to_dsl(&self) -> String {
        let mut out = format!("operad {}\n", self.kind);
        for g in &self.generators {
            out.push_str(&format!("gen {} : {}", g.name, g.arity));
            if g.weight != 1 {
                out.push_str(&format!(" weight {}", g.weight));
            }
            out.push('\n');
        }
        for r in &self.relations {
            out.push_str(&format!("rel {}\n", self.encode(r)));
        }
        out
    }
}

/// Nested-array form: a vertex is `[name, child, ...]`, a labeled leaf is
/// its label and a placeholder is `null`.
pub fn tree_json(t: &Tree, gens: &[Generator]) -> Value {
    match t {
        Tree::Leaf(l) => json!(l),
        Tree::Hole => Value::Null,
        Tree::Node(g, c) => {
            let mut v = vec![Value::String(gens[g.index()].name.clone())];
            v.extend(c.iter().map(|x| tree_json(x, gens)));
            Value::Array(v)
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let leaf_like = name.strip_prefix('x').is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()));
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && !leaf_like
}

/// Drop duplicates and every relation divisible by another one.
fn reduce(mut rels: Vec<Tree>) -> Vec<Tree> {
    rels.sort_by(|a, b| a.vertex_count().cmp(&b.vertex_count()).then_with(|| a.cmp(b)));
    rels.dedup();
    let mut kept: Vec<Tree> = Vec::with_capacity(rels.len());
    for r in rels {
        if !kept.iter().any(|k| divides(k, &r).unwrap_or(false)) {
            kept.push(r);
        }
    }
    kept
}

/// All valid shuffle labelings of a planar skeleton.
pub fn expand_planar_skeleton(s: &Skeleton) -> Vec<Tree> {
    let mut out = shuffle_labelings(s.shape());
    out.sort();
    out.dedup();
    out
}

/// Union of planar expansions over all planar realizations of a skeleton.
/// Planar-flavored input is used as given.
pub fn expand_tree_skeleton(s: &Skeleton) -> Vec<Tree> {
    let shapes = match s.flavor() {
        SkeletonFlavor::Tree => s.planar_realizations(),
        SkeletonFlavor::Planar => Skeleton::tree(s.shape()).planar_realizations(),
    };
    let mut out: Vec<Tree> = shapes.iter().flat_map(shuffle_labelings).collect();
    out.sort();
    out.dedup();
    out
}

/// Parse the presentation DSL.
///
/// ```text
/// operad shuffle
/// gen a : 2
/// gen b : 2 weight 1
/// rel b(x1, a(x2, x3))
/// skeleton planar b(a(-,-),a(-,-))
/// ```
///
/// Statements are separated by newlines or `;`, and `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut kind: Option<Kind> = None;
    let mut gens: Vec<Generator> = Vec::new();
    let mut rels: Vec<Tree> = Vec::new();
    let mut skeletons: Vec<Skeleton> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for stmt in line.split(';') {
            let ctx = StmtCtx {
                line: lineno + 1,
                base: offset + (stmt.len() - stmt.trim_start().len()),
            };
            offset += stmt.len() + 1;
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let (keyword, rest) = match stmt.find(char::is_whitespace) {
                Some(i) => (&stmt[..i], &stmt[i..]),
                None => (stmt, ""),
            };
            let rest_base = ctx.base + keyword.len() + (rest.len() - rest.trim_start().len());
            let rest = rest.trim();
            match keyword {
                "operad" => {
                    if kind.is_some() {
                        return Err(ctx.err(0, "operad kind declared twice"));
                    }
                    kind = Some(match rest {
                        "nonsym" => Kind::Nonsym,
                        "shuffle" => Kind::Shuffle,
                        _ => return Err(ctx.err(rest_base - ctx.base, "expected `nonsym` or `shuffle`")),
                    });
                }
                "gen" => {
                    if !rels.is_empty() || !skeletons.is_empty() {
                        return Err(ctx.err(0, "generators must be declared before relations"));
                    }
                    let g = parse_gen(rest, &ctx, rest_base)?;
                    if gens.iter().any(|h| h.name == g.name) {
                        return Err(Error::DuplicateGenerator(g.name));
                    }
                    gens.push(g);
                }
                "rel" => {
                    let k = kind.ok_or_else(|| ctx.err(0, "`operad` must come first"))?;
                    let t = ctx.monomial(rest, rest_base, &gens)?;
                    match k {
                        Kind::Shuffle if t.has_holes() => {
                            return Err(Error::InvalidLabeling(format!(
                                "line {}: shuffle relations need leaf labels; use `skeleton` for shapes",
                                ctx.line
                            )))
                        }
                        _ => rels.push(t),
                    }
                }
                "skeleton" => {
                    let k = kind.ok_or_else(|| ctx.err(0, "`operad` must come first"))?;
                    if k != Kind::Shuffle {
                        return Err(ctx.err(0, "skeleton relations need a shuffle operad"));
                    }
                    let (flavor, body) = match rest.find(char::is_whitespace) {
                        Some(i) => (&rest[..i], &rest[i..]),
                        None => (rest, ""),
                    };
                    let body_base = rest_base + flavor.len() + (body.len() - body.trim_start().len());
                    let shape = ctx.monomial(body.trim(), body_base, &gens)?;
                    let skel = match flavor {
                        "planar" => Skeleton::planar(&shape),
                        "tree" => Skeleton::tree(&shape),
                        _ => return Err(ctx.err(rest_base - ctx.base, "expected `planar` or `tree`")),
                    };
                    if skel.shape().is_identity() {
                        return Err(ctx.err(body_base - ctx.base, "a skeleton needs at least one vertex"));
                    }
                    rels.extend(match flavor {
                        "planar" => expand_planar_skeleton(&skel),
                        _ => expand_tree_skeleton(&skel),
                    });
                    skeletons.push(skel);
                }
                _ => return Err(ctx.err(0, &format!("unknown statement `{keyword}`"))),
            }
        }
    }
    let kind = kind.ok_or(Error::Syntax {
        line: 1,
        column: 1,
        message: "missing `operad nonsym|shuffle` declaration".into(),
    })?;
    if gens.is_empty() {
        return Err(Error::InvalidGenerator("no generators declared".into()));
    }
    Presentation::with_skeletons(kind, gens, rels, skeletons)
}

struct StmtCtx {
    line: usize,
    base: usize,
}

impl StmtCtx {
    fn err(&self, rel_col: usize, message: &str) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.base + rel_col + 1,
            message: message.to_string(),
        }
    }

    fn monomial(&self, text: &str, base: usize, gens: &[Generator]) -> Result<Tree> {
        if text.is_empty() {
            return Err(self.err(base - self.base, "expected a monomial"));
        }
        parse_monomial(text, gens).map_err(|e| match e {
            Error::Syntax { column, message, .. } => Error::Syntax {
                line: self.line,
                column: base + column,
                message,
            },
            other => other,
        })
    }
}

fn parse_gen(rest: &str, ctx: &StmtCtx, base: usize) -> Result<Generator> {
    let Some(colon) = rest.find(':') else {
        return Err(ctx.err(base - ctx.base, "expected `NAME : ARITY`"));
    };
    let name = rest[..colon].trim();
    if !valid_name(name) {
        return Err(ctx.err(base - ctx.base, &format!("invalid generator name `{name}`")));
    }
    let after = &rest[colon + 1..];
    let after_base = base + colon + 1;
    let mut tokens = tokenize(after, after_base);
    let (arity_tok, arity_col) = tokens.next().ok_or_else(|| ctx.err(after_base - ctx.base, "missing arity"))?;
    let arity: usize = arity_tok
        .parse()
        .map_err(|_| ctx.err(arity_col - ctx.base, &format!("invalid arity `{arity_tok}`")))?;
    if arity == 0 {
        return Err(ctx.err(arity_col - ctx.base, "arity must be at least 1"));
    }
    let mut weight = 1;
    if let Some((kw, col)) = tokens.next() {
        if kw != "weight" {
            return Err(ctx.err(col - ctx.base, &format!("unexpected `{kw}`")));
        }
        let (w, wcol) = tokens.next().ok_or_else(|| ctx.err(col - ctx.base, "missing weight value"))?;
        weight = w
            .parse()
            .map_err(|_| ctx.err(wcol - ctx.base, &format!("invalid weight `{w}`")))?;
    }
    if let Some((extra, col)) = tokens.next() {
        return Err(ctx.err(col - ctx.base, &format!("unexpected `{extra}`")));
    }
    Ok(Generator::new(name, arity).with_weight(weight))
}

fn tokenize(s: &str, base: usize) -> impl Iterator<Item = (&str, usize)> {
    let mut pos = 0;
    std::iter::from_fn(move || {
        let rest = &s[pos..];
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
        let tok = &rest[start..start + len];
        let col = base + pos + start;
        pos += start + len;
        Some((tok, col))
    })
}

// Built-in catalog.

pub const BUILTIN_NAMES: &[&str] = &[
    "assoc",
    "asw",
    "q_k:K",
    "free_binary",
    "alia",
    "nu2",
    "nu3",
    "lieadm",
    "free_shuffle_binary",
];

const ASSOC: &str = "operad nonsym\ngen mu : 2\nrel mu(mu(-,-),-)\n";

const ASW: &str = "operad nonsym\ngen m : 2\nrel m(m(m(-,-),-),-)\nrel m(-,m(-,m(m(-,-),-)))\n";

const FREE_BINARY: &str = "operad nonsym\ngen m : 2\n";

const ALIA: &str = "operad shuffle\ngen a : 2\ngen b : 2\nrel b(x1,a(x2,x3))\n";

const NU2: &str = "operad shuffle\ngen mu : 2\ngen a : 2\n\
skeleton tree mu(a(-,-),a(-,-))\nskeleton tree a(a(-,-),a(-,-))\n";

const NU3: &str = "operad shuffle\ngen a : 2\ngen b : 2\n\
skeleton tree a(a(a(-,-),a(-,-)),a(-,-))\n\
skeleton tree a(b(a(-,-),a(-,-)),a(-,-))\n\
skeleton tree b(a(a(-,-),a(-,-)),a(-,-))\n\
skeleton tree b(b(a(-,-),a(-,-)),a(-,-))\n";

const LIEADM: &str = "operad shuffle\ngen a : 2\ngen b : 2\n\
rel a(x1,a(x2,x3))\nskeleton planar b(a(-,-),a(-,-))\n";

const FREE_SHUFFLE_BINARY: &str = "operad shuffle\ngen m : 2\n";

/// DSL source of the relation `m(-, m(-, ... m(m(-,-),-)))` with `k-2`
/// right steps followed by a left step.
pub fn q_k_source(k: usize) -> Result<String> {
    if k < 2 {
        return Err(Error::UnknownBuiltin(format!("q_k:{k} (k must be at least 2)")));
    }
    let mut rel = "m(m(-,-),-)".to_string();
    for _ in 0..k - 2 {
        rel = format!("m(-,{rel})");
    }
    Ok(format!("operad nonsym\ngen m : 2\nrel {rel}\n"))
}

fn parse_q_k(name: &str) -> Option<Option<usize>> {
    let arg = name
        .strip_prefix("q_k:")
        .or_else(|| name.strip_prefix("q_k(").and_then(|r| r.strip_suffix(')')))
        .or_else(|| name.strip_prefix("q_").filter(|r| r.chars().all(|c| c.is_ascii_digit())))
        .or_else(|| name.strip_prefix('q').filter(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit())))?;
    Some(arg.trim().parse().ok())
}

pub fn builtin_source(name: &str) -> Result<String> {
    let lower = name.trim().to_ascii_lowercase();
    let src = match lower.as_str() {
        "assoc" => ASSOC,
        "asw" => ASW,
        "free_binary" => FREE_BINARY,
        "alia" => ALIA,
        "nu2" => NU2,
        "nu3" => NU3,
        "lieadm" => LIEADM,
        "free_shuffle_binary" => FREE_SHUFFLE_BINARY,
        other => {
            return match parse_q_k(other) {
                Some(Some(k)) => q_k_source(k),
                _ => Err(Error::UnknownBuiltin(name.to_string())),
            }
        }
    };
    Ok(src.to_string())
}

pub fn builtin(name: &str) -> Result<Presentation> {
    parse_presentation(&builtin_source(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_assoc_and_alia() {
        let p = parse_presentation("operad nonsym; gen m:2; rel m(m(-,-),-)").unwrap();
        assert_eq!(p.generators().len(), 1);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.relation_depth(), 2);
        let q = parse_presentation("operad shuffle; gen a:2; gen b:2; rel b(x1,a(x2,x3))").unwrap();
        assert_eq!(q.generators().len(), 2);
        assert_eq!(q.relations().len(), 1);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_presentation("operad nonsym\ngen m:2\nrel m(m(-,-)").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, 13);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("operad nonsym\ngen m:2\ngen m:3"),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("operad nonsym\ngen m:2\nrel m(-,-,-)"),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            parse_presentation("operad shuffle\ngen m:2\nrel m(x1,x1)"),
            Err(Error::InvalidLabeling(_))
        ));
        assert!(matches!(
            parse_presentation("operad nonsym\ngen m:0"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn weights_and_comments() {
        let p = parse_presentation("# demo\noperad nonsym\ngen f : 3 weight 2 # ternary\ngen g:2").unwrap();
        assert_eq!(p.generators()[0].weight, 2);
        assert_eq!(p.generators()[1].weight, 1);
        assert!(p.is_weighted());
    }

    #[test]
    fn planar_expansion() {
        let g = vec![Generator::new("a", 2), Generator::new("b", 2), Generator::new("c", 2)];
        let s = Skeleton::planar(&parse_monomial("a(b(-,-),c(-,-))", &g).unwrap());
        let ms = expand_planar_skeleton(&s);
        assert_eq!(ms.len(), 3);
        let s = Skeleton::planar(&parse_monomial("a(-,b(-,-))", &g).unwrap());
        assert_eq!(expand_planar_skeleton(&s), vec![parse_monomial("a(x1,b(x2,x3))", &g).unwrap()]);
        let s = Skeleton::planar(&parse_monomial("a(-,-)", &g).unwrap());
        assert_eq!(expand_planar_skeleton(&s).len(), 1);
    }

    #[test]
    fn tree_expansion() {
        let g = vec![Generator::new("a", 2), Generator::new("b", 2), Generator::new("c", 2)];
        let s = Skeleton::tree(&parse_monomial("a(b(-,-),c(-,-))", &g).unwrap());
        assert_eq!(expand_tree_skeleton(&s).len(), 6);
        let s = Skeleton::tree(&parse_monomial("a(b(-,-),b(-,-))", &g).unwrap());
        assert_eq!(expand_tree_skeleton(&s).len(), 3);
        let s = Skeleton::tree(&parse_monomial("c(-,-)", &g).unwrap());
        assert_eq!(expand_tree_skeleton(&s).len(), 1);
    }

    #[test]
    fn regularity() {
        let alia = builtin("alia").unwrap();
        assert!(alia.check_shuffle_regular());
        let nu2 = builtin("nu2").unwrap();
        assert_eq!(nu2.relations().len(), 6);
        assert!(nu2.check_shuffle_regular());
        assert!(nu2.check_symmetric_regular());
        let half = Presentation::new(Kind::Shuffle, nu2.generators().to_vec(), nu2.relations()[..2].to_vec()).unwrap();
        assert!(!half.check_symmetric_regular());
        let left = parse_presentation("operad shuffle\ngen a:2\nrel a(a(x1,x2),x3)").unwrap();
        assert!(!left.check_shuffle_regular());
        assert_eq!(left.shuffle_regular_missing().unwrap().len(), 1);
    }

    #[test]
    fn alia_is_not_symmetric_regular() {
        // The tree class of b(-,a(-,-)) also holds b(a(x1,x2),x3) and
        // b(a(x1,x3),x2), neither of which contains the relation.
        let alia = builtin("alia").unwrap();
        let missing = alia.symmetric_regular_missing().unwrap();
        assert_eq!(missing.len(), 2);
        assert!(matches!(alia.require_symmetric_regular(), Err(Error::NotSymmetricRegular { .. })));
    }

    #[test]
    fn builtins() {
        for name in ["assoc", "asw", "q_k:3", "q_k(4)", "q5", "free_binary", "alia", "nu2", "nu3", "lieadm", "free_shuffle_binary"] {
            let p = builtin(name).unwrap();
            assert!(p.is_reduced(), "{name}");
        }
        let q3 = builtin("q_k(3)").unwrap();
        assert_eq!(q3.encode(&q3.relations()[0]), "m(-,m(m(-,-),-))");
        let nu3 = builtin("nu3").unwrap();
        assert_eq!(nu3.source_skeletons().len(), 4);
        assert!(nu3.check_symmetric_regular());
        assert!(builtin("lieadm").unwrap().check_shuffle_regular());
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn reduction_drops_multiples() {
        let p = parse_presentation("operad nonsym\ngen m:2\nrel m(m(-,-),-)\nrel m(m(m(-,-),-),-)\nrel m(m(-,-),-)").unwrap();
        assert_eq!(p.relations().len(), 1);
    }

    #[test]
    fn dsl_round_trip() {
        for name in ["asw", "nu2", "lieadm"] {
            let p = builtin(name).unwrap();
            let q = parse_presentation(&p.to_dsl()).unwrap();
            assert_eq!(p.relations(), q.relations());
        }
    }

    #[test]
    fn json_uses_nested_arrays() {
        let p = builtin("alia").unwrap();
        let v = p.to_json();
        assert_eq!(v["relations"][0], json!(["b", 1, ["a", 2, 3]]));
        assert_eq!(v["kind"], json!("shuffle"));
    }
}
