//! Dense exact linear algebra and univariate polynomials over Q.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Basis of the right kernel of `rows` (each row has `cols` entries).
pub fn kernel(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Remainder of `a` modulo `b`, `b` nonzero.
fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = trim(a.to_vec());
    let db = degree(b).expect("nonzero divisor");
    let lead = b[db].clone();
    while let Some(da) = degree(&a) {
        if da < db {
            break;
        }
        let q = &a[da] / &lead;
        for i in 0..=db {
            a[da - db + i] -= &q * &b[i];
        }
        a = trim(a);
    }
    a
}

pub fn div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = trim(a.to_vec());
    let db = degree(b).expect("nonzero divisor");
    let Some(da) = degree(&a) else { return Vec::new() };
    let mut q = vec![BigRational::zero(); da.saturating_sub(db) + 1];
    while let Some(d) = degree(&a) {
        if d < db {
            break;
        }
        let c = &a[d] / &b[db];
        for i in 0..=db {
            a[d - db + i] -= &c * &b[i];
        }
        q[d - db] = c;
        a = trim(a);
    }
    trim(q)
}

/// Monic greatest common divisor.
pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let lead = x[d].clone();
        for c in &mut x {
            *c /= &lead;
        }
    }
    x
}

/// Polynomial text in `var`, highest degree last: `1 - 2*z + z^3`.
pub fn fmt_poly(p: &[BigRational], var: &str) -> String {
    use crate::series::fmt_rational;
    use num_traits::Signed;
    let mut out = String::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", fmt_rational(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn p(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(vec![p(&[1, 2, 3]), p(&[2, 4, 6])], 3);
        assert_eq!(k.len(), 2);
        for v in k {
            let dot: BigRational = v.iter().zip(p(&[1, 2, 3])).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn poly_gcd() {
        // (1 - z)(1 + z) and (1 - z)^2
        let g = gcd(&p(&[1, 0, -1]), &p(&[1, -2, 1]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(div_exact(&p(&[1, 0, -1]), &g), p(&[-1, -1]));
        assert_eq!(fmt_poly(&p(&[0, 1, -2, 0, 1]), "z"), "z - 2*z^2 + z^4");
    }
}
