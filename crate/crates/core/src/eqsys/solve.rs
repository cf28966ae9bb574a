//! Coefficient recursion for equation systems.
//!
//! The terms of each equation are stored as a trie over their factor
//! sequences, with identical sub-tries shared. A node stands for
//! `Σ_e op(y_{f_e}, c_e + node_e)`, so the value of a node at arity `n`
//! only needs child values below `n`, except for terms ending at the root,
//! which are resolved in dependency order.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{int, rat, Coeff, TruncatedSeries};

use super::{EqSystem, SystemKind, Term};

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSolution<C: Coeff> {
    pub names: Vec<String>,
    pub series: Vec<TruncatedSeries<C>>,
    pub total: TruncatedSeries<C>,
}

impl<C: Coeff> SeriesSolution<C> {
    pub fn get(&self, name: &str) -> Option<&TruncatedSeries<C>> {
        self.names.iter().position(|n| n == name).map(|i| &self.series[i])
    }
}

type EndKey = Vec<(u32, BigRational)>;
type NodeKey = Vec<(usize, EndKey, Option<usize>)>;

struct Dag {
    nodes: Vec<NodeKey>,
    memo: HashMap<NodeKey, usize>,
}

impl Dag {
    fn build(&mut self, entries: &[&Term], depth: usize) -> Option<usize> {
        let mut key: NodeKey = Vec::new();
        let mut i = 0;
        while i < entries.len() {
            let f = entries[i].factors[depth];
            let mut j = i;
            while j < entries.len() && entries[j].factors[depth] == f {
                j += 1;
            }
            let group = &entries[i..j];
            let mut ends: BTreeMap<u32, BigRational> = BTreeMap::new();
            let mut k = 0;
            while k < group.len() && group[k].factors.len() == depth + 1 {
                let t = group[k];
                *ends.entry(t.t_exp).or_insert_with(BigRational::zero) += rat(t.sign as i64, t.divisor as i64);
                k += 1;
            }
            let ends: EndKey = ends.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let child = self.build(&group[k..], depth + 1);
            if !ends.is_empty() || child.is_some() {
                key.push((f, ends, child));
            }
            i = j;
        }
        if key.is_empty() {
            return None;
        }
        if let Some(&id) = self.memo.get(&key) {
            return Some(id);
        }
        let id = self.nodes.len();
        self.nodes.push(key.clone());
        self.memo.insert(key, id);
        Some(id)
    }
}

struct Edge<C> {
    factor: usize,
    end: Option<C>,
    child: Option<usize>,
}

pub fn solve_coefficients<C: Coeff>(s: &EqSystem, n_max: usize) -> Result<SeriesSolution<C>> {
    let nvars = s.variables.len();
    let mut dag = Dag {
        nodes: Vec::new(),
        memo: HashMap::new(),
    };
    let mut roots: Vec<Option<usize>> = vec![None; nvars];
    for eq in &s.equations {
        let mut entries: Vec<&Term> = eq.terms.iter().filter(|t| !t.factors.is_empty()).collect();
        entries.sort_by(|a, b| a.factors.cmp(&b.factors));
        let root = dag.build(&entries, 0);
        if roots[eq.target].is_some() {
            return Err(Error::Usage(format!("two equations for `{}`", s.variables[eq.target].name)));
        }
        roots[eq.target] = root;
    }
    let nodes: Vec<Vec<Edge<C>>> = dag
        .nodes
        .iter()
        .map(|key| {
            key.iter()
                .map(|(f, ends, child)| Edge {
                    factor: *f,
                    end: if ends.is_empty() {
                        None
                    } else {
                        let mut c = C::nil();
                        for (k, r) in ends {
                            c.add_assign(&C::t_power(*k, r.clone()));
                        }
                        Some(c)
                    },
                    child: *child,
                })
                .collect()
        })
        .collect();

    let order = resolution_order(s, &roots, &nodes)?;
    let is_c = s.kind == SystemKind::ShuffleC;
    let flavor = s.flavor();
    let mut y: Vec<Vec<C>> = vec![vec![C::nil(); n_max + 1]; nvars];
    if n_max >= 1 {
        y[s.ground][1] = C::unit();
    }
    let mut vals: Vec<Vec<C>> = vec![vec![C::nil(); n_max + 1]; nodes.len()];
    let mut partial: Vec<C> = vec![C::nil(); nodes.len()];

    for n in 1..=n_max {
        let inv_n = rat(1, n as i64);
        for (id, edges) in nodes.iter().enumerate() {
            let mut acc = C::nil();
            for e in edges {
                let Some(child) = e.child else { continue };
                let yf = &y[e.factor];
                let vc = &vals[child];
                for k in 1..n {
                    if is_c {
                        if !yf[k].is_nil() && !vc[n - k].is_nil() {
                            acc.add_assign(&yf[k].mul(&vc[n - k]).scale(&int(k as i64)));
                        }
                    } else {
                        acc.add_mul(&yf[k], &vc[n - k]);
                    }
                }
            }
            partial[id] = if is_c { acc.scale(&inv_n) } else { acc };
        }
        for &v in &order {
            let Some(root) = roots[v] else { continue };
            let mut value = partial[root].clone();
            for e in &nodes[root] {
                if let Some(c) = &e.end {
                    value.add_mul(c, &y[e.factor][n]);
                }
            }
            y[v][n] = value;
        }
        for (id, edges) in nodes.iter().enumerate() {
            let mut value = std::mem::replace(&mut partial[id], C::nil());
            for e in edges {
                if let Some(c) = &e.end {
                    value.add_mul(c, &y[e.factor][n]);
                }
            }
            vals[id][n] = value;
        }
    }

    let series: Vec<TruncatedSeries<C>> = y
        .into_iter()
        .map(|c| TruncatedSeries::from_coeffs(c, n_max, flavor))
        .collect();
    let mut total = TruncatedSeries::zero(n_max, flavor);
    for &v in &s.total {
        total = total.add(&series[v])?;
    }
    Ok(SeriesSolution {
        names: s.variables.iter().map(|v| v.name.clone()).collect(),
        series,
        total,
    })
}

/// Order in which same-arity values are resolved: a variable comes after
/// every variable it uses through a single-factor term.
fn resolution_order<C>(s: &EqSystem, roots: &[Option<usize>], nodes: &[Vec<Edge<C>>]) -> Result<Vec<usize>> {
    let n = s.variables.len();
    let deps: Vec<Vec<usize>> = (0..n)
        .map(|v| match roots[v] {
            Some(r) => nodes[r]
                .iter()
                .filter(|e| e.end.is_some() && e.factor != s.ground)
                .map(|e| e.factor)
                .collect(),
            None => Vec::new(),
        })
        .collect();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        state[start] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < deps[v].len() {
                let w = deps[v][*i];
                *i += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return Err(Error::NotWellFounded(s.variables[w].name.clone())),
                    _ => {}
                }
            } else {
                state[v] = 2;
                order.push(v);
                stack.pop();
            }
        }
    }
    Ok(order.into_iter().filter(|&v| v != s.ground).collect())
}
