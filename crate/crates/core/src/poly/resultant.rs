use super::Polynomial;
use crate::arith::Coefficient;
use crate::error::{Error, Result};

impl<C: Coefficient> Polynomial<C> {
    /// Coefficients of `self` as a polynomial in variable `var`, lowest
    /// degree first; each coefficient is free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(&self.ctx); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.exponents().to_vec();
            let k = e[var] as usize;
            e[var] = 0;
            out[k].add_term(super::Monomial::new(e), c.clone());
        }
        out
    }

    /// Resultant with respect to `var`, as the determinant of the Sylvester
    /// matrix computed by fraction-free Bareiss elimination over the
    /// remaining variables.
    pub fn resultant(&self, other: &Self, var: usize) -> Result<Self> {
        self.check_ctx(other)?;
        let (a, b) = (self.coefficients_in(var), other.coefficients_in(var));
        let (m, n) = (a.len() - 1, b.len() - 1);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        if m == 0 && n == 0 {
            return Err(Error::InvalidInput("resultant of two constants in the variable".into()));
        }
        let size = m + n;
        let zero = Self::zero(&self.ctx);
        let mut rows: Vec<Vec<Self>> = Vec::with_capacity(size);
        // Row i holds the coefficients shifted right by i, highest first.
        for i in 0..n {
            let mut row = vec![zero.clone(); size];
            for (j, c) in a.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![zero.clone(); size];
            for (j, c) in b.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        let one = self
            .terms
            .values()
            .next()
            .expect("nonzero")
            .one_like();
        let mut prev = Self::constant(&self.ctx, one);
        let mut negate = false;
        for k in 0..size {
            let Some(p) = (k..size).find(|&r| !rows[r][k].is_zero()) else {
                return Ok(zero);
            };
            if p != k {
                rows.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = rows[i][j].mul(&rows[k][k])?.sub(&rows[i][k].mul(&rows[k][j])?)?;
                    rows[i][j] = v
                        .divide_exact(&prev)?
                        .expect("Bareiss quotients are exact");
                }
                rows[i][k] = zero.clone();
            }
            prev = rows[k][k].clone();
        }
        let det = rows[size - 1][size - 1].clone();
        Ok(if negate { det.neg() } else { det })
    }
}
