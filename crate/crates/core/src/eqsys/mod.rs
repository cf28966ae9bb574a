//! Equation systems for generating series of monomial operads.
//!
//! Every system has a ground variable fixed to `z` and one equation per
//! other variable. A [`Term`] is `sign * t^a / divisor` times a composition
//! of variables: a product for non-symmetric and symmetric systems, a
//! right-nested `C(..)` for shuffle systems.

mod build;
mod emit;
mod solve;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::presentation::tree_json;
use crate::series::{Coeff, Flavor, TruncatedSeries};
use crate::tree::{Generator, Tree};

pub use build::{
    build_incl_excl_system_nonsym, build_stump_system, build_stump_system_nonsym, build_stump_system_shuffle,
    build_symmetric_regular_system, INCL_EXCL_GUARD,
};
pub use emit::{emit_system, EmitFormat};
pub use solve::SeriesSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemKind {
    /// Products of variables; ordinary series.
    NonsymProduct,
    /// Right-nested `C` operators; exponential series.
    ShuffleC,
    /// Products with symmetrization divisors; exponential series.
    SymmetricAlgebraic,
}

impl SystemKind {
    pub fn flavor(self) -> Flavor {
        match self {
            SystemKind::NonsymProduct => Flavor::Ordinary,
            _ => Flavor::Exponential,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Ground,
    /// Stump shape; planar skeleton for shuffle systems.
    Stump(Tree),
    /// Tree-skeleton class of stumps, by its sorted representative.
    SkeletonClass(Tree),
    /// Element of the inclusion-exclusion set; the variable counts the
    /// basis monomials it left-divides.
    LeftIdeal(Tree),
}

impl Descriptor {
    pub fn shape(&self) -> Option<&Tree> {
        match self {
            Descriptor::Ground => None,
            Descriptor::Stump(t) | Descriptor::SkeletonClass(t) | Descriptor::LeftIdeal(t) => Some(t),
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            Descriptor::Ground => "ground",
            Descriptor::Stump(_) => "stump",
            Descriptor::SkeletonClass(_) => "skeleton-class",
            Descriptor::LeftIdeal(_) => "left-ideal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub descriptor: Descriptor,
    /// Number of planar stumps represented (1 except for skeleton classes).
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub sign: i8,
    pub t_exp: u32,
    pub factors: Vec<usize>,
    pub divisor: u64,
}

impl Term {
    pub fn new(t_exp: u32, factors: Vec<usize>) -> Term {
        Term {
            sign: 1,
            t_exp,
            factors,
            divisor: 1,
        }
    }

    pub fn coefficient<C: Coeff>(&self) -> C {
        C::t_power(
            self.t_exp,
            crate::series::rat(self.sign as i64, self.divisor as i64),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub target: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqSystem {
    pub kind: SystemKind,
    pub variables: Vec<Variable>,
    pub equations: Vec<Equation>,
    pub ground: usize,
    /// Variables summed to give the generating series of the operad.
    pub total: Vec<usize>,
    pub generators: Vec<Generator>,
}

impl EqSystem {
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn equation_of(&self, var: usize) -> Option<&Equation> {
        self.equations.iter().find(|e| e.target == var)
    }

    pub fn term_count(&self) -> usize {
        self.equations.iter().map(|e| e.terms.len()).sum()
    }

    /// Number of unknowns, not counting the ground variable.
    pub fn unknowns(&self) -> usize {
        self.variables.len() - 1
    }

    pub fn flavor(&self) -> Flavor {
        self.kind.flavor()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "ground": self.ground,
            "variables": self.variables.iter().enumerate().map(|(i, v)| json!({
                "id": i,
                "name": v.name,
                "descriptor": {
                    "type": v.descriptor.kind_name(),
                    "shape": v.descriptor.shape().map(|t| tree_json(t, &self.generators)),
                    "text": v.descriptor.shape().map(|t| t.encode(&self.generators)),
                },
                "multiplicity": v.multiplicity,
            })).collect::<Vec<_>>(),
            "equations": self.equations.iter().map(|e| json!({
                "target": e.target,
                "terms": e.terms.iter().map(|t| json!({
                    "sign": t.sign,
                    "t_exp": t.t_exp,
                    "factors": t.factors,
                    "divisor": t.divisor,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "total": self.total,
        })
    }

    /// Inverse of [`EqSystem::to_json`] for hand-written systems.
    pub fn from_json(v: &Value, generators: Vec<Generator>) -> crate::Result<EqSystem> {
        use crate::error::Error;
        let bad = |m: &str| Error::Usage(format!("malformed system JSON: {m}"));
        let kind: SystemKind = serde_json::from_value(v["kind"].clone()).map_err(|_| bad("kind"))?;
        let ground = v["ground"].as_u64().ok_or_else(|| bad("ground"))? as usize;
        let vars = v["variables"].as_array().ok_or_else(|| bad("variables"))?;
        let mut variables = Vec::new();
        for (i, var) in vars.iter().enumerate() {
            let name = var["name"].as_str().ok_or_else(|| bad("variable name"))?.to_string();
            let descriptor = if i == ground {
                Descriptor::Ground
            } else {
                match var["descriptor"]["text"].as_str() {
                    Some(text) => Descriptor::Stump(crate::tree::parse_monomial(text, &generators)?),
                    None => Descriptor::Stump(Tree::Hole),
                }
            };
            let multiplicity = var["multiplicity"].as_u64().unwrap_or(1);
            variables.push(Variable {
                name,
                descriptor,
                multiplicity,
            });
        }
        let n = variables.len();
        if ground >= n {
            return Err(bad("ground out of range"));
        }
        let mut equations = Vec::new();
        for e in v["equations"].as_array().ok_or_else(|| bad("equations"))? {
            let target = e["target"].as_u64().ok_or_else(|| bad("target"))? as usize;
            if target >= n || target == ground {
                return Err(bad("target out of range"));
            }
            let mut terms = Vec::new();
            for t in e["terms"].as_array().ok_or_else(|| bad("terms"))? {
                let factors: Vec<usize> = t["factors"]
                    .as_array()
                    .ok_or_else(|| bad("factors"))?
                    .iter()
                    .map(|f| f.as_u64().map(|x| x as usize).filter(|&x| x < n))
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad("factor id"))?;
                if factors.is_empty() {
                    return Err(bad("empty factor list"));
                }
                let sign = t["sign"].as_i64().unwrap_or(1);
                let divisor = t["divisor"].as_u64().unwrap_or(1);
                if (sign != 1 && sign != -1) || divisor == 0 {
                    return Err(bad("sign or divisor"));
                }
                terms.push(Term {
                    sign: sign as i8,
                    t_exp: t["t_exp"].as_u64().unwrap_or(0) as u32,
                    factors,
                    divisor,
                });
            }
            equations.push(Equation { target, terms });
        }
        let total = match v["total"].as_array() {
            Some(a) => a
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).filter(|&x| x < n))
                .collect::<Option<_>>()
                .ok_or_else(|| bad("total"))?,
            None => (0..n).collect(),
        };
        Ok(EqSystem {
            kind,
            variables,
            equations,
            ground,
            total,
            generators,
        })
    }

    pub fn solve(&self, n_max: usize) -> crate::Result<SeriesSolution<num_rational::BigRational>> {
        solve::solve_coefficients(self, n_max)
    }

    pub fn solve_weighted(&self, n_max: usize) -> crate::Result<SeriesSolution<crate::series::TPoly>> {
        solve::solve_coefficients(self, n_max)
    }

    /// Series of the total at `t = 1`.
    pub fn total_series(&self, n_max: usize) -> crate::Result<TruncatedSeries> {
        Ok(self.solve(n_max)?.total)
    }
}

pub use solve::solve_coefficients;

#[cfg(test)]
mod tests;
