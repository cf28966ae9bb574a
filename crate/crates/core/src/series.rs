//! Exact truncated power series in `z`.
//!
//! Coefficients are arbitrary-precision rationals or dense polynomials in a
//! grading variable `t` ([`TPoly`]). A series of order `N` stores the
//! coefficients of `z^0 ..= z^N`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER: usize = 12;

/// Coefficient ring of a series.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn sub_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
    fn from_rational(r: BigRational) -> Self;
    /// Monomial `c * t^k`; rational coefficients ignore `k`.
    fn t_power(k: u32, c: BigRational) -> Self;
    fn to_json(&self) -> Value;

    fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !a.is_nil() && !b.is_nil() {
            self.add_assign(&a.mul(b));
        }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl Coeff for BigRational {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &BigRational) -> Self {
        self * r
    }
    fn from_rational(r: BigRational) -> Self {
        r
    }
    fn t_power(_k: u32, c: BigRational) -> Self {
        c
    }
    fn to_json(&self) -> Value {
        Value::String(fmt_rational(self))
    }
}

/// Dense polynomial in `t` with rational coefficients; index = power of `t`.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct TPoly(Vec<BigRational>);

impl TPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> TPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                f.write_str(&fmt_rational(&mag))?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Coeff for TPoly {
    fn nil() -> Self {
        TPoly(Vec::new())
    }
    fn unit() -> Self {
        TPoly(vec![BigRational::one()])
    }
    fn is_nil(&self) -> bool {
        self.0.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
        *self = TPoly::new(std::mem::take(&mut self.0));
    }
    fn sub_assign(&mut self, other: &Self) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
        *self = TPoly::new(std::mem::take(&mut self.0));
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return TPoly(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }
    fn scale(&self, r: &BigRational) -> Self {
        TPoly::new(self.0.iter().map(|c| c * r).collect())
    }
    fn from_rational(r: BigRational) -> Self {
        TPoly::new(vec![r])
    }
    fn t_power(k: u32, c: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); k as usize];
        v.push(c);
        TPoly::new(v)
    }
    fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|c| Value::String(fmt_rational(c))).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Ordinary,
    Exponential,
}

/// Truncated series `Σ_{n=0}^{N} c_n z^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C: Coeff = BigRational> {
    coeffs: Vec<C>,
    flavor: Flavor,
}

pub type Series = TruncatedSeries<BigRational>;

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(order: usize, flavor: Flavor) -> Self {
        TruncatedSeries {
            coeffs: vec![C::nil(); order + 1],
            flavor,
        }
    }

    /// The series `z`.
    pub fn z(order: usize, flavor: Flavor) -> Self {
        let mut s = Self::zero(order, flavor);
        if order >= 1 {
            s.coeffs[1] = C::unit();
        }
        s
    }

    pub fn constant(c: C, order: usize, flavor: Flavor) -> Self {
        let mut s = Self::zero(order, flavor);
        s.coeffs[0] = c;
        s
    }

    /// Build from coefficients `c_0, c_1, ...`, padding or cutting to `order`.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize, flavor: Flavor) -> Self {
        coeffs.resize(order + 1, C::nil());
        TruncatedSeries { coeffs, flavor }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: C) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
            flavor: self.flavor,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_nil)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_nil())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::SeriesMismatch(format!(
                "flavors differ: {:?} and {:?}",
                self.flavor, other.flavor
            )));
        }
        if self.order() != other.order() {
            return Err(Error::SeriesMismatch(format!(
                "truncation orders differ: {} and {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign(b);
        }
        Ok(out)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
            flavor: self.flavor,
        }
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
            flavor: self.flavor,
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![C::nil(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_nil() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        TruncatedSeries {
            coeffs: out,
            flavor: self.flavor,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(C::unit(), self.order(), self.flavor);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    fn check_exponential(&self) -> Result<()> {
        if self.flavor != Flavor::Exponential {
            return Err(Error::SeriesMismatch(
                "the operator C acts on exponential series".into(),
            ));
        }
        Ok(())
    }

    /// `C(f,g)(z) = ∫₀ᶻ f'(w) g(w) dw`, i.e. `[z^n] = (1/n) Σ k f_k g_{n-k}`.
    pub fn c_op(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        self.check_exponential()?;
        Ok(c_op_unchecked(self, other))
    }

    /// Right-nested `C(f1, C(f2, ..., C(f_{m-1}, f_m)))`; a single argument
    /// is returned as is.
    pub fn c_multi(fs: &[Self]) -> Result<Self> {
        let (last, init) = fs
            .split_last()
            .ok_or_else(|| Error::Usage("c_multi needs at least one series".into()))?;
        last.check_exponential()?;
        let mut acc = last.clone();
        for f in init.iter().rev() {
            acc = f.c_op(&acc)?;
        }
        Ok(acc)
    }

    /// `f(g(z))` by Horner evaluation; `g` must have no constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_compatible(g)?;
        if !g.coeffs[0].is_nil() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.order();
        // the partial sum at coefficient i is later multiplied by g^i, so
        // only its terms up to z^(n-i) matter
        let mut acc = vec![self.coeffs[n].clone()];
        for (i, c) in self.coeffs[..n].iter().enumerate().rev() {
            let m = n - i;
            let mut next = vec![C::nil(); m + 1];
            for (a, x) in acc.iter().enumerate() {
                if x.is_nil() {
                    continue;
                }
                for (b, y) in g.coeffs[1..=m - a].iter().enumerate() {
                    next[a + b + 1].add_mul(x, y);
                }
            }
            next[0].add_assign(c);
            acc = next;
        }
        Ok(TruncatedSeries {
            coeffs: acc,
            flavor: self.flavor,
        })
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = vec![C::nil(); n + 1];
        for k in 1..=n {
            out[k - 1] = self.coeffs[k].scale(&int(k as i64));
        }
        TruncatedSeries {
            coeffs: out,
            flavor: self.flavor,
        }
    }

    /// Coefficient-wise multiplication by `n!`.
    pub fn exp_to_ord(&self) -> Self {
        let mut f = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    f *= BigInt::from(n);
                }
                c.scale(&BigRational::from_integer(f.clone()))
            })
            .collect();
        TruncatedSeries {
            coeffs,
            flavor: Flavor::Ordinary,
        }
    }

    /// Coefficient-wise division by `n!`.
    pub fn ord_to_exp(&self) -> Self {
        let mut f = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    f *= BigInt::from(n);
                }
                c.scale(&BigRational::new(BigInt::one(), f.clone()))
            })
            .collect();
        TruncatedSeries {
            coeffs,
            flavor: Flavor::Exponential,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "flavor": self.flavor,
            "order": self.order(),
            "coefficients": self.coeffs.iter().map(C::to_json).collect::<Vec<_>>(),
        })
    }
}

fn c_op_unchecked<C: Coeff>(f: &TruncatedSeries<C>, g: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    let n_max = f.order();
    let mut out = vec![C::nil(); n_max + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        let mut acc = C::nil();
        for k in 1..=n {
            let fk = &f.coeffs[k];
            if fk.is_nil() {
                continue;
            }
            acc.add_mul(&fk.scale(&int(k as i64)), &g.coeffs[n - k]);
        }
        *slot = acc.scale(&rat(1, n as i64));
    }
    TruncatedSeries {
        coeffs: out,
        flavor: f.flavor,
    }
}

impl TruncatedSeries<BigRational> {
    /// Series with integer-valued coefficients.
    pub fn from_ints(values: &[i64], order: usize, flavor: Flavor) -> Self {
        Self::from_coeffs(values.iter().map(|&v| int(v)).collect(), order, flavor)
    }

    /// Ordinary series `Σ dims[n-1] z^n`.
    pub fn from_dims(dims: &[BigInt]) -> Self {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(dims.iter().map(|d| BigRational::from_integer(d.clone())));
        let order = dims.len();
        Self::from_coeffs(coeffs, order, Flavor::Ordinary)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if Zero::is_zero(c0) {
            return Err(Error::NotInvertible("constant term is zero".into()));
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                acc += &self.coeffs[k] * &out[m - k];
            }
            out[m] = -acc * &inv0;
        }
        Ok(TruncatedSeries {
            coeffs: out,
            flavor: self.flavor,
        })
    }

    /// Compositional inverse: `g` with `f(g(z)) = z` to the truncation order.
    pub fn reversion(&self) -> Result<Self> {
        if !Zero::is_zero(&self.coeffs[0]) {
            return Err(Error::NonZeroConstant);
        }
        let n = self.order();
        if n == 0 {
            return Err(Error::NotInvertible("order-0 series".into()));
        }
        let f1 = &self.coeffs[1];
        if Zero::is_zero(f1) {
            return Err(Error::NotInvertible("linear coefficient is zero".into()));
        }
        // Lagrange inversion: [z^m] g = (1/m) [w^(m-1)] (w / f(w))^m
        let shifted = TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
            flavor: self.flavor,
        };
        let h = shifted.inverse()?;
        let mut power = Self::constant(BigRational::one(), n - 1, self.flavor);
        let mut g = Self::zero(n, self.flavor);
        for m in 1..=n {
            power = power.mul_unchecked(&h);
            g.coeffs[m] = &power.coeffs[m - 1] / BigRational::from_integer(BigInt::from(m));
        }
        Ok(g)
    }

    /// Dimension list `dim P(1), ..., dim P(N)` read off either flavor.
    pub fn dims(&self) -> Result<Vec<BigInt>> {
        let ord = match self.flavor {
            Flavor::Ordinary => self.clone(),
            Flavor::Exponential => self.exp_to_ord(),
        };
        ord.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| {
                if c.is_integer() && !c.is_negative() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral {
                        index: n,
                        value: fmt_rational(c),
                    })
                }
            })
            .collect()
    }

    /// Dimensions as machine integers when they fit.
    pub fn dims_u64(&self) -> Result<Vec<u64>> {
        self.dims()?
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                d.to_u64().ok_or(Error::NonIntegral {
                    index: i + 1,
                    value: d.to_string(),
                })
            })
            .collect()
    }
}

impl TruncatedSeries<TPoly> {
    /// Specialize the grading variable.
    pub fn eval_t(&self, t: &BigRational) -> Series {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.eval(t)).collect(),
            flavor: self.flavor,
        }
    }
}

impl<C: Coeff> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::add(self, rhs).expect("incompatible series")
    }
}

impl<C: Coeff> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::sub(self, rhs).expect("incompatible series")
    }
}

impl<C: Coeff> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::mul(self, rhs).expect("incompatible series")
    }
}

impl<C: Coeff> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.scale(&int(-1))
    }
}

impl fmt::Display for TruncatedSeries<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if n == 0 || !mag.is_one() {
                f.write_str(&fmt_rational(&mag))?;
                if n > 0 {
                    f.write_str("*")?;
                }
            }
            match n {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Shuffle composition count `c(n1,...,nm)`: the number of splittings of
/// `{1..n}` into blocks of the given sizes with increasing minima.
pub fn shuffle_count(sizes: &[usize]) -> BigInt {
    let mut n: usize = sizes.iter().sum();
    let mut acc = BigInt::one();
    for &k in sizes {
        if k == 0 {
            return BigInt::zero();
        }
        acc *= binomial(n - 1, k - 1);
        n -= k;
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    const E: Flavor = Flavor::Exponential;
    const O: Flavor = Flavor::Ordinary;

    fn geometric(n: usize) -> Series {
        let mut v = vec![0];
        v.extend(std::iter::repeat(1).take(n));
        Series::from_ints(&v, n, O)
    }

    #[test]
    fn products() {
        let z = Series::z(6, O);
        assert_eq!(&z * &z, Series::from_ints(&[0, 0, 1], 6, O));
        let g = geometric(6);
        let sq = &g * &g;
        assert_eq!(sq, Series::from_ints(&[0, 0, 1, 2, 3, 4, 5], 6, O));
        assert!((&g * &Series::zero(6, O)).is_zero());
    }

    #[test]
    fn mismatches_are_rejected() {
        let a = Series::z(5, O);
        assert!(matches!(a.add(&Series::z(6, O)), Err(Error::SeriesMismatch(_))));
        assert!(matches!(a.mul(&Series::z(5, E)), Err(Error::SeriesMismatch(_))));
        assert!(matches!(a.c_op(&a), Err(Error::SeriesMismatch(_))));
    }

    #[test]
    fn c_operator_examples() {
        let z = Series::z(5, E);
        let z2 = Series::from_ints(&[0, 0, 1], 5, E);
        let half = Series::from_coeffs(vec![int(0), int(0), rat(1, 2)], 5, E);
        assert_eq!(z.c_op(&z).unwrap(), half);
        let sum = &z.c_op(&z2).unwrap() + &z2.c_op(&z).unwrap();
        assert_eq!(sum, Series::from_ints(&[0, 0, 0, 1], 5, E));
        // c(2,2) from the series rule
        let a = Series::from_coeffs(vec![int(0), int(0), rat(1, 2)], 4, E);
        let c = a.c_op(&a).unwrap();
        assert_eq!(c.coeff(4) * BigRational::from_integer(factorial(4)), int(3));
        assert_eq!(shuffle_count(&[2, 2]), BigInt::from(3));
    }

    #[test]
    fn compose_examples() {
        let g = geometric(8);
        assert_eq!(g.compose(&Series::z(8, O)).unwrap(), g);
        let expected = Series::from_ints(&[0, 1, 2, 4, 8, 16, 32, 64, 128], 8, O);
        assert_eq!(g.compose(&g).unwrap(), expected);
        assert!(matches!(g.compose(&Series::constant(int(1), 8, O)), Err(Error::NonZeroConstant)));
    }

    #[test]
    fn reversion_examples() {
        let z = Series::z(7, O);
        assert_eq!(z.reversion().unwrap(), z);
        let rev = geometric(7).reversion().unwrap();
        assert_eq!(rev, Series::from_ints(&[0, 1, -1, 1, -1, 1, -1, 1], 7, O));
        let f = Series::from_ints(&[0, 1, -1], 7, O);
        assert_eq!(f.compose(&f.reversion().unwrap()).unwrap(), z);
        assert!(matches!(
            Series::from_ints(&[0, 0, 1], 7, O).reversion(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn flavor_conversion() {
        let exp = geometric(6).ord_to_exp();
        assert_eq!(exp.coeff(3), &rat(1, 6));
        assert_eq!(exp.exp_to_ord(), geometric(6));
        let alia3 = Series::from_coeffs(vec![int(0), int(1), int(1), rat(11, 6)], 3, E);
        assert_eq!(alia3.exp_to_ord().coeff(3), &int(11));
        assert_eq!(alia3.dims_u64().unwrap(), vec![1, 2, 11]);
        assert_eq!(Series::zero(3, O).dims_u64().unwrap(), vec![0, 0, 0]);
        let bad = Series::from_coeffs(vec![int(0), rat(1, 2)], 1, O);
        assert!(matches!(bad.dims(), Err(Error::NonIntegral { index: 1, .. })));
    }

    #[test]
    fn tpoly_arithmetic() {
        let t = TPoly::t_power(1, int(1));
        let one = TPoly::unit();
        let mut s = t.clone();
        s.add_assign(&one);
        let sq = s.mul(&s);
        assert_eq!(sq, TPoly::new(vec![int(1), int(2), int(1)]));
        assert_eq!(sq.eval(&int(1)), int(4));
        assert_eq!(sq.to_string(), "1 + 2*t + t^2");
        let mut z = s.clone();
        z.sub_assign(&s);
        assert!(z.is_nil());
    }

    #[test]
    fn shuffle_count_matches_recursion() {
        assert_eq!(shuffle_count(&[1, 1, 1]), BigInt::from(1));
        assert_eq!(shuffle_count(&[1, 2]), BigInt::from(1));
        assert_eq!(shuffle_count(&[2, 1]), BigInt::from(2));
    }
}
