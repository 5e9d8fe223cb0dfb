//! Exact dense linear algebra over Q.
//!
//! Elimination runs fraction-free on integer rows: each row is scaled by the
//! lcm of its denominators, then eliminated Bareiss-style (determinant) or
//! with content removal (echelon forms).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{denominator_lcm, divisors, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::arith::rat(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols,
            entries,
        })
    }

    /// Subtracts `c` from every diagonal entry.
    pub fn shift_diagonal(&self, c: &Rational) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("shift of a non-square matrix".into()));
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] -= c;
        }
        Ok(m)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut scales = Vec::with_capacity(self.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = denominator_lcm(row);
                let ints = row
                    .iter()
                    .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                    .collect();
                scales.push(l);
                ints
            })
            .collect();
        (rows, scales)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by Bareiss elimination, first nonzero pivot in column
/// order.
pub fn determinant(m: &RationalMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rational::one());
    }
    let (mut a, scales) = m.integer_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let scale: BigInt = scales.iter().product();
    Ok(Rational::new(sign * &a[n - 1][n - 1], scale))
}

/// Reduced row echelon data: pivot columns and the rows (rational, pivot
/// entry 1) that carry them.
pub struct Echelon {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<Rational>>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Fraction-free Gauss–Jordan elimination to reduced row echelon form.
pub fn echelon(m: &RationalMatrix) -> Echelon {
    let (mut a, _) = m.integer_rows();
    for row in a.iter_mut() {
        primitive(row);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (before, rest) = a.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("row r exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let fp = &pivot_row[c] / &g;
            let fr = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &*x * &fp - &fr * y;
            }
            primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    let rows = pivots
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let lead = a[i][c].clone();
            a[i].iter()
                .map(|v| Rational::new(v.clone(), lead.clone()))
                .collect()
        })
        .collect();
    Echelon {
        pivots,
        rows,
        cols: m.cols,
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    echelon(m).rank()
}

/// Basis of {v : Mv = 0}. One vector per non-pivot column, in increasing
/// column order; that column's coordinate is 1 and the other free
/// coordinates are 0.
pub fn nullspace(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let ech = echelon(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

/// Characteristic polynomial det(tI − M) by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &RationalMatrix) -> Result<UniPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk)?;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let am = m.mul(&next)?;
        coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
        mk = next;
    }
    Ok(UniPoly::new(coeffs))
}

/// All rational roots with multiplicity, ascending, via the rational root
/// theorem on the primitive integer form.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("rational roots of the zero polynomial".into()));
    }
    let mut roots = Vec::new();
    let mut cur = p.clone();
    while cur.coeff(0).is_zero() && cur.degree().is_some_and(|d| d > 0) {
        roots.push(Rational::zero());
        cur = UniPoly::new(cur.coeffs()[1..].to_vec());
    }
    loop {
        let Some(deg) = cur.degree() else { break };
        if deg == 0 {
            break;
        }
        let l = denominator_lcm(cur.coeffs());
        let ints: Vec<BigInt> = cur
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let lead = ints[deg].clone();
        let constant = ints[0].clone();
        let mut found = None;
        'search: for q in divisors(&lead) {
            for pnum in divisors(&constant) {
                for cand in [
                    Rational::new(-pnum.clone(), q.clone()),
                    Rational::new(pnum.clone(), q.clone()),
                ] {
                    if cur.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let Some(root) = found else { break };
        let (quot, rem) = cur.div_rem(&UniPoly::new(vec![-root.clone(), Rational::one()]));
        debug_assert!(rem.is_zero());
        roots.push(root);
        cur = quot;
    }
    roots.sort();
    Ok(roots)
}

/// Rational roots without multiplicity.
pub fn distinct_rational_roots(p: &UniPoly) -> Result<Vec<Rational>> {
    let mut r = rational_roots(p)?;
    r.dedup();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    /// Laplace expansion along the first row.
    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_examples() {
        let m = RationalMatrix::from_i64(&[&[-1, 2], &[0, -1]]);
        assert_eq!(determinant(&m).unwrap(), rat(1));
        let jou = RationalMatrix::from_i64(&[&[-1, 2, 0], &[0, -1, 2], &[2, 0, -1]]);
        assert_eq!(cofactor_det(&jou.to_rows()), rat(7));
        assert_eq!(determinant(&jou).unwrap(), rat(7));
        let four = RationalMatrix::from_i64(&[
            &[-1, 0, 0, 2],
            &[0, -1, 1, 1],
            &[0, 2, -1, 0],
            &[1, 1, 0, -1],
        ]);
        assert_eq!(determinant(&four).unwrap(), rat(0));
        assert!(matches!(
            determinant(&RationalMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn determinant_with_fractions_and_swaps() {
        let m = RationalMatrix::from_rows(vec![
            vec![rat(0), rat_frac(1, 2), rat(3)],
            vec![rat_frac(2, 3), rat(1), rat(0)],
            vec![rat(1), rat(0), rat_frac(-1, 5)],
        ])
        .unwrap();
        assert_eq!(determinant(&m).unwrap(), cofactor_det(&m.to_rows()));
    }

    #[test]
    fn nullspace_examples() {
        let m = RationalMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(nullspace(&m), vec![vec![rat(-1), rat(1)]]);
        assert!(nullspace(&RationalMatrix::identity(3)).is_empty());
        let wide = RationalMatrix::zeros(0, 2);
        assert_eq!(nullspace(&wide).len(), 2);
    }

    #[test]
    fn char_poly_examples() {
        let nil = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(char_poly(&nil).unwrap(), UniPoly::from_i64(&[0, 0, 1]));
        let diag = RationalMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(char_poly(&diag).unwrap(), UniPoly::from_i64(&[6, -5, 1]));
        let ones = RationalMatrix::from_i64(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(char_poly(&ones).unwrap(), UniPoly::from_i64(&[0, 0, -3, 1]));
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(
            rational_roots(&UniPoly::from_i64(&[-1, 0, 1])).unwrap(),
            vec![rat(-1), rat(1)]
        );
        assert_eq!(rational_roots(&UniPoly::from_i64(&[1, 0, 0, 1])).unwrap(), vec![rat(-1)]);
        assert!(rational_roots(&UniPoly::from_i64(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&UniPoly::from_i64(&[0, 0, -3, 1])).unwrap(),
            vec![rat(0), rat(0), rat(3)]
        );
        // (2t − 1)^2 (t + 3)
        let p = UniPoly::from_i64(&[-1, 2])
            .mul(&UniPoly::from_i64(&[-1, 2]))
            .mul(&UniPoly::from_i64(&[3, 1]));
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![rat(-3), rat_frac(1, 2), rat_frac(1, 2)]
        );
        assert!(rational_roots(&UniPoly::zero()).is_err());
    }
}
