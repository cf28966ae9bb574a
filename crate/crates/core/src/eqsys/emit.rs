use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{fmt_rational, rat};

use super::{EqSystem, SystemKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Text,
    Json,
    /// Differentiated form of a C-operator system.
    Ode,
}

impl std::str::FromStr for EmitFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(EmitFormat::Text),
            "json" => Ok(EmitFormat::Json),
            "ode" => Ok(EmitFormat::Ode),
            other => Err(Error::Usage(format!("unknown emit format `{other}`"))),
        }
    }
}

/// Render a system. `show_t` prints the grading variable in text and ODE form.
pub fn emit_system(s: &EqSystem, format: EmitFormat, show_t: bool) -> Result<String> {
    match format {
        EmitFormat::Text => Ok(emit_text(s, show_t)),
        EmitFormat::Json => Ok(serde_json::to_string_pretty(&s.to_json()).expect("serializable") + "\n"),
        EmitFormat::Ode => {
            if s.kind != SystemKind::ShuffleC {
                return Err(Error::Usage("the ode form needs a C-operator system".into()));
            }
            Ok(emit_ode(s, show_t))
        }
    }
}

/// Group equal terms; products are commutative, C-terms are not.
fn merged(s: &EqSystem, target: usize) -> BTreeMap<(Vec<usize>, u32), BigRational> {
    let mut out: BTreeMap<(Vec<usize>, u32), BigRational> = BTreeMap::new();
    let Some(eq) = s.equation_of(target) else { return out };
    for t in &eq.terms {
        let mut f = t.factors.clone();
        if s.kind != SystemKind::ShuffleC {
            f.sort_unstable();
        }
        *out.entry((f, t.t_exp)).or_insert_with(BigRational::zero) += rat(t.sign as i64, t.divisor as i64);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn t_part(t_exp: u32, show_t: bool) -> Option<String> {
    match (show_t, t_exp) {
        (false, _) | (true, 0) => None,
        (true, 1) => Some("t".into()),
        (true, k) => Some(format!("t^{k}")),
    }
}

fn product_text(s: &EqSystem, factors: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        let name = &s.variables[factors[i]].name;
        parts.push(if j - i == 1 { name.clone() } else { format!("{name}^{}", j - i) });
        i = j;
    }
    parts.join("*")
}

fn c_text(s: &EqSystem, factors: &[usize]) -> String {
    if factors.len() == 1 {
        return s.variables[factors[0]].name.clone();
    }
    let names: Vec<&str> = factors.iter().map(|&f| s.variables[f].name.as_str()).collect();
    format!("C({})", names.join(", "))
}

/// Join `(coefficient, body)` pairs as a signed sum.
fn signed_sum(items: &[(BigRational, String)]) -> String {
    if items.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, body)) in items.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else {
            if !mag.is_one() {
                let _ = write!(out, "{}*", fmt_rational(&mag));
            }
            out.push_str(body);
        }
    }
    out
}

fn term_body(prefix: Option<String>, body: String) -> String {
    match prefix {
        Some(t) if body.is_empty() => t,
        Some(t) => format!("{t}*{body}"),
        None => body,
    }
}

fn emit_text(s: &EqSystem, show_t: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# kind: {}", serde_json::to_value(s.kind).unwrap().as_str().unwrap());
    for v in &s.variables {
        let desc = match v.descriptor.shape() {
            None => "ground".to_string(),
            Some(t) => {
                let kind = v.descriptor.kind_name();
                let mut d = format!("{kind} {}", t.encode(&s.generators));
                if v.multiplicity != 1 {
                    let _ = write!(d, " (multiplicity {})", v.multiplicity);
                }
                d
            }
        };
        let _ = writeln!(out, "# {}: {desc}", v.name);
    }
    for eq in &s.equations {
        let items: Vec<(BigRational, String)> = merged(s, eq.target)
            .into_iter()
            .map(|((f, t), c)| {
                let body = if s.kind == SystemKind::ShuffleC { c_text(s, &f) } else { product_text(s, &f) };
                (c, term_body(t_part(t, show_t), body))
            })
            .collect();
        let _ = writeln!(out, "{} = {}", s.variables[eq.target].name, signed_sum(&items));
    }
    let total: Vec<(BigRational, String)> = s
        .total
        .iter()
        .map(|&v| (BigRational::one(), s.variables[v].name.clone()))
        .collect();
    let _ = writeln!(out, "total = {}", signed_sum(&total));
    out
}

/// `d/dz C(f1, ..., fm) = f1' * C(f2, ..., fm)`; every inner `C` with two or
/// more arguments becomes a ghost variable with its own equation.
fn emit_ode(s: &EqSystem, show_t: bool) -> String {
    let mut ghosts: Vec<Vec<usize>> = Vec::new();
    let mut ghost_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut ghost_of = |seq: &[usize], ghosts: &mut Vec<Vec<usize>>| -> String {
        if seq.len() == 1 {
            return s.variables[seq[0]].name.clone();
        }
        let i = *ghost_index.entry(seq.to_vec()).or_insert_with(|| {
            ghosts.push(seq.to_vec());
            ghosts.len() - 1
        });
        format!("h_{}", i + 1)
    };
    let deriv = |v: usize| -> Option<String> {
        if v == s.ground {
            None
        } else {
            Some(format!("{}'", s.variables[v].name))
        }
    };

    let mut lines = Vec::new();
    for eq in &s.equations {
        // first factor -> terms of the remaining bracket
        let mut groups: BTreeMap<usize, Vec<(BigRational, String)>> = BTreeMap::new();
        for ((f, t), c) in merged(s, eq.target) {
            let rest = if f.len() == 1 { String::new() } else { ghost_of(&f[1..], &mut ghosts) };
            groups.entry(f[0]).or_default().push((c, term_body(t_part(t, show_t), rest)));
        }
        lines.push(format!("{}' = {}", s.variables[eq.target].name, ode_rhs(&groups, &deriv)));
    }
    let mut k = 0;
    while k < ghosts.len() {
        let seq = ghosts[k].clone();
        let rest = ghost_of(&seq[1..], &mut ghosts);
        let mut groups = BTreeMap::new();
        groups.insert(seq[0], vec![(BigRational::one(), rest)]);
        let names: Vec<&str> = seq.iter().map(|&f| s.variables[f].name.as_str()).collect();
        lines.push(format!("h_{}' = {}    # h_{} = C({})", k + 1, ode_rhs(&groups, &deriv), k + 1, names.join(", ")));
        k += 1;
    }
    let mut out = String::from("# differentiated system, ' = d/dz\n");
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    let mut init: Vec<String> = s
        .variables
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != s.ground)
        .map(|(_, v)| format!("{}(0) = 0", v.name))
        .collect();
    init.extend((1..=ghosts.len()).map(|i| format!("h_{i}(0) = 0")));
    out.push_str(&format!("# initial conditions: {}\n", init.join(", ")));
    let total: Vec<&str> = s.total.iter().map(|&v| s.variables[v].name.as_str()).collect();
    out.push_str(&format!("total = {}\n", total.join(" + ")));
    out
}

fn ode_rhs(groups: &BTreeMap<usize, Vec<(BigRational, String)>>, deriv: &impl Fn(usize) -> Option<String>) -> String {
    let mut parts: Vec<(BigRational, String)> = Vec::new();
    for (&f, items) in groups {
        let d = deriv(f);
        if let [(c, rest)] = items.as_slice() {
            let body = match (d, rest.is_empty()) {
                (None, _) => rest.clone(),
                (Some(d), true) => d,
                (Some(d), false) => format!("{d}*{rest}"),
            };
            parts.push((c.clone(), body));
        } else {
            let bracket = format!("({})", signed_sum(items));
            parts.push((BigRational::one(), match d {
                Some(d) => format!("{d}*{bracket}"),
                None => bracket,
            }));
        }
    }
    signed_sum(&parts)
}
