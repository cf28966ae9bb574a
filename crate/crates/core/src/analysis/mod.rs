//! Closed forms for generating series: rational and algebraic guessing,
//! exact verification, and the dependence graph of a system.
//!
//! Guesses are certified against every available coefficient, so a result
//! holds to the truncation order of its input and no further.

mod growth;
pub(crate) mod linalg;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::series::{fmt_rational, Coeff, Flavor, Series};

pub use growth::{classify_growth, dependence_graph, DependenceGraph, DepEdge, GrowthExpectation, GrowthReport};
use linalg::{fmt_poly, kernel, trim};

/// Spare coefficients a rational fit must reproduce beyond its unknowns.
pub const RATIONAL_SPARE: usize = 2;
/// Extra equations required beyond the unknowns of an algebraic ansatz.
pub const ALGEBRAIC_MARGIN: usize = 5;

/// `num / den` in lowest terms with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Vec<BigRational>,
    den: Vec<BigRational>,
}

impl RationalFunction {
    /// Reduce and normalize; fails when `den(0) = 0`.
    pub fn new(num: Vec<BigRational>, den: Vec<BigRational>) -> Result<RationalFunction> {
        let den = trim(den);
        if den.first().map_or(true, |c| c.is_zero()) {
            return Err(Error::NotInvertible("denominator vanishes at z = 0".into()));
        }
        let g = linalg::gcd(&num, &den);
        let mut num = linalg::div_exact(&num, &g);
        let mut den = linalg::div_exact(&den, &g);
        let c0 = den[0].clone();
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c /= &c0;
        }
        num = trim(num);
        den = trim(den);
        Ok(RationalFunction { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<RationalFunction> {
        let cv = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        RationalFunction::new(cv(num), cv(den))
    }

    pub fn numerator(&self) -> &[BigRational] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigRational] {
        &self.den
    }

    /// Ordinary power series expansion to `z^order`.
    pub fn expand(&self, order: usize) -> Series {
        let mut out = vec![BigRational::zero(); order + 1];
        for n in 0..=order {
            let mut c = self.num.get(n).cloned().unwrap_or_else(BigRational::zero);
            for k in 1..=n.min(self.den.len().saturating_sub(1)) {
                if !self.den[k].is_zero() {
                    c -= &self.den[k] * &out[n - k];
                }
            }
            out[n] = c;
        }
        Series::from_coeffs(out, order, Flavor::Ordinary)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "num": self.num.iter().map(Coeff::to_json).collect::<Vec<_>>(),
            "den": self.den.iter().map(Coeff::to_json).collect::<Vec<_>>(),
        })
    }
}

fn paren_poly(p: &[BigRational]) -> String {
    let nonzero = p.iter().filter(|c| !c.is_zero()).count();
    let text = fmt_poly(p, "z");
    if nonzero > 1 {
        format!("({text})")
    } else {
        text
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.len() == 1 {
            return f.write_str(&fmt_poly(&self.num, "z"));
        }
        write!(f, "{}/{}", paren_poly(&self.num), paren_poly(&self.den))
    }
}

/// Polynomial `Q(z, y) = Σ_j P_j(z) y^j`, kept primitive with integer
/// coefficients and a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicEquation {
    /// `coeffs[j][i]` is the coefficient of `z^i y^j`.
    coeffs: Vec<Vec<BigRational>>,
}

impl AlgebraicEquation {
    /// Build from `(z power, y power, coefficient)` triples.
    pub fn from_terms<I>(terms: I) -> Result<AlgebraicEquation>
    where
        I: IntoIterator<Item = (usize, usize, BigRational)>,
    {
        let mut coeffs: Vec<Vec<BigRational>> = Vec::new();
        for (i, j, c) in terms {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, Vec::new());
            }
            if coeffs[j].len() <= i {
                coeffs[j].resize(i + 1, BigRational::zero());
            }
            coeffs[j][i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `rows[j]` lists the `z`-coefficients of `y^j`.
    pub fn from_coeffs(rows: Vec<Vec<BigRational>>) -> Result<AlgebraicEquation> {
        let mut coeffs: Vec<Vec<BigRational>> = rows.into_iter().map(trim).collect();
        while coeffs.last().is_some_and(|r| r.is_empty()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::Usage("the zero polynomial is not an equation".into()));
        }
        let mut q = AlgebraicEquation { coeffs };
        q.normalize();
        Ok(q)
    }

    /// Integer rows, `rows[j][i]` the coefficient of `z^i y^j`.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<AlgebraicEquation> {
        Self::from_coeffs(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    fn normalize(&mut self) {
        let mut lcm = BigInt::one();
        for c in self.coeffs.iter().flatten() {
            lcm = lcm.lcm(c.denom());
        }
        let scale = BigRational::from_integer(lcm);
        let mut g = BigInt::zero();
        for c in self.coeffs.iter_mut().flatten() {
            *c *= &scale;
            g = g.gcd(c.numer());
        }
        let last = self.coeffs.last().and_then(|r| r.last()).expect("nonzero");
        if last.is_negative() {
            g = -g;
        }
        let g = BigRational::from_integer(g);
        for c in self.coeffs.iter_mut().flatten() {
            *c /= &g;
        }
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn deg_z(&self) -> usize {
        self.coeffs.iter().map(|r| r.len().saturating_sub(1)).max().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Vec<BigRational>] {
        &self.coeffs
    }

    pub fn coeff(&self, z_pow: usize, y_pow: usize) -> BigRational {
        self.coeffs
            .get(y_pow)
            .and_then(|r| r.get(z_pow))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `Q(z, f(z))` truncated at the order of `f`.
    pub fn substitute(&self, f: &Series) -> Series {
        let order = f.order();
        let f = f.clone().with_flavor(Flavor::Ordinary);
        let mut acc = Series::zero(order, Flavor::Ordinary);
        // Horner in y
        for row in self.coeffs.iter().rev() {
            acc = acc.mul(&f).expect("same order");
            let p = Series::from_coeffs(row.clone(), order, Flavor::Ordinary);
            acc = acc.add(&p).expect("same order");
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "deg_y": self.deg_y(),
            "deg_z": self.deg_z(),
            "coeffs": self.coeffs.iter()
                .map(|r| r.iter().map(Coeff::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for AlgebraicEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, row) in self.coeffs.iter().enumerate().rev() {
            let nonzero: Vec<(usize, &BigRational)> = row.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if nonzero.is_empty() {
                continue;
            }
            let y = match j {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{j}"),
            };
            let (neg, body) = if let [(i, c)] = nonzero.as_slice() {
                let z = match i {
                    0 => String::new(),
                    1 => "z".to_string(),
                    _ => format!("z^{i}"),
                };
                let mag = c.abs();
                let mut parts = Vec::new();
                if !mag.is_one() || (z.is_empty() && y.is_empty()) {
                    parts.push(fmt_rational(&mag));
                }
                parts.extend([z, y.clone()].into_iter().filter(|s| !s.is_empty()));
                (c.is_negative(), parts.join("*"))
            } else if y.is_empty() {
                (false, fmt_poly(row, "z"))
            } else {
                (false, format!("({})*{y}", fmt_poly(row, "z")))
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            f.write_str(&body)?;
            first = false;
        }
        Ok(())
    }
}

fn ordinary(f: &Series) -> Series {
    match f.flavor() {
        Flavor::Ordinary => f.clone(),
        Flavor::Exponential => f.exp_to_ord(),
    }
}

/// Smallest `p/q` with `deg p, deg q <= d <= max_deg` matching every
/// coefficient of `f`. Exponential input is converted to ordinary first.
pub fn guess_rational(f: &Series, max_deg: usize) -> Result<Option<RationalFunction>> {
    let f = ordinary(f);
    let n = f.order();
    if n < 2 * max_deg + RATIONAL_SPARE {
        return Err(Error::InsufficientOrder(format!(
            "a rational fit of degree {max_deg} needs order {}, got {n}",
            2 * max_deg + RATIONAL_SPARE
        )));
    }
    let a = f.coeffs();
    for d in 0..=max_deg {
        let cols = 2 * d + 2;
        let rows: Vec<Vec<BigRational>> = (0..=n)
            .map(|k| {
                let mut row = vec![BigRational::zero(); cols];
                if k <= d {
                    row[k] = -BigRational::one();
                }
                for j in 0..=d.min(k) {
                    row[d + 1 + j] = a[k - j].clone();
                }
                row
            })
            .collect();
        let Some(v) = kernel(rows, cols).into_iter().find(|v| !v[d + 1].is_zero()) else { continue };
        let rf = RationalFunction::new(v[..=d].to_vec(), v[d + 1..].to_vec())?;
        debug_assert_eq!(rf.expand(n).coeffs(), f.coeffs());
        return Ok(Some(rf));
    }
    Ok(None)
}

fn algebraic_fit(powers: &[Series], dy: usize, dz: usize) -> Option<AlgebraicEquation> {
    let n = powers[0].order();
    let cols = (dy + 1) * (dz + 1);
    let rows: Vec<Vec<BigRational>> = (0..=n)
        .map(|k| {
            let mut row = vec![BigRational::zero(); cols];
            for (j, pw) in powers.iter().enumerate().take(dy + 1) {
                for i in 0..=dz.min(k) {
                    row[j * (dz + 1) + i] = pw.coeff(k - i).clone();
                }
            }
            row
        })
        .collect();
    let v = kernel(rows, cols).into_iter().next()?;
    let rows = (0..=dy).map(|j| v[j * (dz + 1)..(j + 1) * (dz + 1)].to_vec()).collect();
    AlgebraicEquation::from_coeffs(rows).ok()
}

fn powers_of(f: &Series, k: usize) -> Vec<Series> {
    let f = f.clone().with_flavor(Flavor::Ordinary);
    let mut out = vec![Series::constant(BigRational::one(), f.order(), Flavor::Ordinary)];
    for _ in 0..k {
        let next = out.last().unwrap().mul(&f).expect("same order");
        out.push(next);
    }
    out
}

/// Smallest `Q` with `deg_y Q <= deg_y`, `deg_z Q <= deg_z` and
/// `Q(z, f) = 0` to the order of `f`, searching `y`-degree first. The
/// coefficients of `f` are used as they are, whatever its flavor.
pub fn guess_algebraic(f: &Series, deg_y: usize, deg_z: usize) -> Result<Option<AlgebraicEquation>> {
    if deg_y == 0 {
        return Err(Error::Usage("deg_y must be at least 1".into()));
    }
    let need = (deg_y + 1) * (deg_z + 1) + ALGEBRAIC_MARGIN;
    if f.order() < need {
        return Err(Error::InsufficientOrder(format!(
            "an algebraic fit of degrees ({deg_y}, {deg_z}) needs order {need}, got {}",
            f.order()
        )));
    }
    let powers = powers_of(f, deg_y);
    for dy in 1..=deg_y {
        for dz in 0..=deg_z {
            if let Some(q) = algebraic_fit(&powers, dy, dz) {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// [`guess_algebraic`] with the largest `z`-degree the order of `f`
/// supports at each `y`-degree.
pub fn guess_algebraic_auto(f: &Series, max_deg_y: usize) -> Result<Option<AlgebraicEquation>> {
    if max_deg_y == 0 {
        return Err(Error::Usage("deg_y must be at least 1".into()));
    }
    let n = f.order();
    let dz_max = |dy: usize| (n.saturating_sub(ALGEBRAIC_MARGIN) / (dy + 1)).checked_sub(1);
    if dz_max(max_deg_y).is_none() {
        return Err(Error::InsufficientOrder(format!(
            "y-degree {max_deg_y} needs order {}, got {n}",
            max_deg_y + 1 + ALGEBRAIC_MARGIN
        )));
    }
    let powers = powers_of(f, max_deg_y);
    for dy in 1..=max_deg_y {
        for dz in 0..=dz_max(dy).unwrap_or(0) {
            if let Some(q) = algebraic_fit(&powers, dy, dz) {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// `Q(z, f) = 0` modulo `z^(N+1)`, `N` the order of `f`.
pub fn verify_equation(f: &Series, q: &AlgebraicEquation) -> bool {
    q.substitute(f).is_zero()
}

#[cfg(test)]
mod tests;
