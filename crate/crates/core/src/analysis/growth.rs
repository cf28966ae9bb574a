use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde_json::{json, Value};

use crate::eqsys::{EqSystem, SeriesSolution, SystemKind};

use super::{guess_rational, RationalFunction, RATIONAL_SPARE};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepEdge {
    pub from: usize,
    pub to: usize,
    /// Some term using `to` has another non-ground factor.
    pub nonlinear: bool,
}

/// Variables of a system, with an edge `b -> b'` when the equation of `b`
/// uses `b'`. The ground variable is not a node target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceGraph {
    pub kind: SystemKind,
    pub names: Vec<String>,
    pub ground: usize,
    pub edges: Vec<DepEdge>,
}

pub fn dependence_graph(s: &EqSystem) -> DependenceGraph {
    let mut edges: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for eq in &s.equations {
        for t in &eq.terms {
            let series: Vec<usize> = t.factors.iter().copied().filter(|&f| f != s.ground).collect();
            for &f in &series {
                *edges.entry((eq.target, f)).or_insert(false) |= series.len() > 1;
            }
        }
    }
    DependenceGraph {
        kind: s.kind,
        names: s.variables.iter().map(|v| v.name.clone()).collect(),
        ground: s.ground,
        edges: edges
            .into_iter()
            .map(|((from, to), nonlinear)| DepEdge { from, to, nonlinear })
            .collect(),
    }
}

impl DependenceGraph {
    /// Strongly connected components (as sorted variable ids) containing a
    /// nonlinear edge, self-loops included.
    pub fn nonlinear_cycles(&self) -> Vec<Vec<usize>> {
        let mut g: DiGraph<usize, bool> = DiGraph::new();
        let nodes: Vec<_> = (0..self.names.len()).map(|i| g.add_node(i)).collect();
        for e in &self.edges {
            g.add_edge(nodes[e.from], nodes[e.to], e.nonlinear);
        }
        let mut out: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut ids: Vec<usize> = c.into_iter().map(|n| g[n]).collect();
                ids.sort_unstable();
                ids
            })
            .filter(|ids| {
                self.edges
                    .iter()
                    .any(|e| e.nonlinear && ids.binary_search(&e.from).is_ok() && ids.binary_search(&e.to).is_ok())
            })
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> Value {
        let mut adj: BTreeMap<&str, Vec<Value>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(self.names[e.from].as_str())
                .or_default()
                .push(json!({"to": self.names[e.to], "nonlinear": e.nonlinear}));
        }
        json!({
            "nodes": self.names,
            "adjacency": adj,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthExpectation {
    Rational,
    ExponentialOrFaster,
    Factorial,
}

impl fmt::Display for GrowthExpectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthExpectation::Rational => "rational expected",
            GrowthExpectation::ExponentialOrFaster => "exponential-or-faster expected",
            GrowthExpectation::Factorial => "factorial growth expected",
        })
    }
}

/// Advisory growth summary of a solved system.
#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub nonlinear_cycles: Vec<Vec<String>>,
    pub expectation: GrowthExpectation,
    /// `d_n / d_(n-1)`, or `d_n / (n d_(n-1))` for exponential systems,
    /// over the last few arities.
    pub ratios: Vec<f64>,
    pub observed: String,
    pub rational_fit: Option<RationalFunction>,
    pub warning: Option<String>,
}

impl GrowthReport {
    pub fn to_json(&self) -> Value {
        json!({
            "nonlinear_cycles": self.nonlinear_cycles,
            "expectation": self.expectation.to_string(),
            "ratios": self.ratios,
            "observed": self.observed,
            "rational_fit": self.rational_fit.as_ref().map(|r| r.to_json()),
            "warning": self.warning,
        })
    }
}

impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.nonlinear_cycles.is_empty() {
            writeln!(f, "no nonlinear cycles")?;
        }
        for c in &self.nonlinear_cycles {
            writeln!(f, "nonlinear cycle: {}", c.join(", "))?;
        }
        writeln!(f, "{}", self.expectation)?;
        writeln!(f, "observed: {}", self.observed)?;
        if let Some(r) = &self.rational_fit {
            writeln!(f, "rational fit: {r}")?;
        }
        if let Some(w) = &self.warning {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

pub fn classify_growth(g: &DependenceGraph, solution: &SeriesSolution<num_rational::BigRational>) -> GrowthReport {
    let cycles = g.nonlinear_cycles();
    let exponential = g.kind != SystemKind::NonsymProduct;
    let expectation = match (cycles.is_empty(), exponential) {
        (true, _) => GrowthExpectation::Rational,
        (false, false) => GrowthExpectation::ExponentialOrFaster,
        (false, true) => GrowthExpectation::Factorial,
    };
    let dims: Vec<f64> = solution
        .total
        .dims()
        .map(|d| d.iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect())
        .unwrap_or_default();
    let mut ratios = Vec::new();
    for n in dims.len().saturating_sub(4).max(2)..=dims.len() {
        let (a, b) = (dims[n - 1], dims[n - 2]);
        if b > 0.0 {
            ratios.push(if exponential { a / (n as f64 * b) } else { a / b });
        }
    }
    let decreasing = ratios.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let last = ratios.last().copied();
    let observed = match (exponential, last) {
        (_, None) => "too few nonzero dimensions".to_string(),
        (false, Some(r)) if r <= 1.0 + 1e-9 || (decreasing && r < 1.2) => "subexponential-looking".into(),
        (false, Some(_)) => "exponential-looking".into(),
        (true, Some(r)) if decreasing && r < 0.4 => "subfactorial-looking".into(),
        (true, Some(_)) => "factorial-looking".into(),
    };
    let n = solution.total.order();
    let rational_fit = if n >= 2 + RATIONAL_SPARE {
        guess_rational(&solution.total, (n - RATIONAL_SPARE) / 3).ok().flatten()
    } else {
        None
    };
    let warning = if exponential && !cycles.is_empty() && rational_fit.is_some() {
        Some("a nonlinear cycle is present but the ordinary series fits a rational function".to_string())
    } else {
        None
    };
    GrowthReport {
        nonlinear_cycles: cycles
            .into_iter()
            .map(|c| c.into_iter().map(|i| g.names[i].clone()).collect())
            .collect(),
        expectation,
        ratios,
        observed,
        rational_fit,
        warning,
    }
}
