//! Sparse multivariate polynomials over Q or Q(ζ_N).

mod automorphism;
pub mod groebner;
mod monomial;
mod parse;
mod resultant;

pub use automorphism::DiagonalAutomorphism;
pub use monomial::{monomial_basis, Monomial, VariableContext};
pub use parse::parse_polynomial;

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Coefficient, CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{Error, Result};

/// Polynomial with coefficients in `C`, keyed by exponent vector. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    ctx: VariableContext,
    terms: BTreeMap<Monomial, C>,
}

pub type QPoly = Polynomial<Rational>;
pub type CyclotomicPoly = Polynomial<CyclotomicNumber>;

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    /// Terms in descending graded-lex order, e.g. `x^3 - 3/2*x*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.sign_split();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", mag.render())?;
            } else if mag.coeff_is_one() {
                write!(f, "{}", m.render(&self.ctx))?;
            } else {
                write!(f, "{}*{}", mag.render(), m.render(&self.ctx))?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(ctx: &VariableContext) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &VariableContext, c: C) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn monomial(ctx: &VariableContext, m: Monomial, c: C) -> Self {
        assert_eq!(m.arity(), ctx.len(), "monomial arity does not match context");
        let mut terms = BTreeMap::new();
        if !c.coeff_is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(ctx: &VariableContext, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            assert_eq!(m.arity(), ctx.len(), "monomial arity does not match context");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.coeff_is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.coeff_is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (mm, cc) in &self.terms {
            out.add_term(mm.mul(m), cc.mul_ref(c));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, cc)| (m.clone(), cc.mul_ref(c))),
        )
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, cc)| (m.clone(), cc.scale(r))),
        )
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let one = match self.terms.values().next() {
            Some(c) => c.one_like(),
            None if e == 0 => {
                return Err(Error::InvalidInput("0^0 has no coefficient field".into()))
            }
            None => return Ok(self.clone()),
        };
        let mut acc = Self::constant(&self.ctx, one);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `Some(m)` when every term has total degree m. Errors on zero.
    pub fn is_homogeneous(&self) -> Result<Option<u32>> {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        let first = degs
            .next()
            .ok_or_else(|| Error::InvalidInput("homogeneity of the zero polynomial".into()))?;
        Ok(degs.all(|d| d == first).then_some(first))
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.total_degree())
                .or_insert_with(|| Self::zero(&self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor` under graded-lex division, or `None`
    /// when the remainder is nonzero.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_ctx(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv_checked().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx);
        // A single divisor is a Gröbner basis of its ideal, so a leading term
        // that lm does not divide means a nonzero remainder.
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(lm) else {
                return Ok(None);
            };
            let qc = c.mul_ref(&lc_inv);
            rem = rem.sub(&divisor.mul_monomial(&qm, &qc))?;
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Returns the polynomial over Q when every coefficient is rational.
    pub fn to_rational(&self) -> Option<QPoly> {
        let terms: Option<Vec<_>> = self
            .terms
            .iter()
            .map(|(m, c)| c.to_rational().map(|r| (m.clone(), r)))
            .collect();
        Some(Polynomial::from_terms(&self.ctx, terms?))
    }

    /// Indices of variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ctx.len())
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[var]).max().unwrap_or(0)
    }

    /// Re-expresses the polynomial in a larger context, placing this
    /// context's variables at positions `offset..offset + len`.
    pub fn embed(&self, target: &VariableContext, offset: usize) -> Result<Self> {
        let n = self.ctx.len();
        if offset + n > target.len()
            || (0..n).any(|i| self.ctx.name(i) != target.name(offset + i))
        {
            return Err(Error::ContextMismatch);
        }
        Ok(Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; target.len()];
                e[offset..offset + n].copy_from_slice(m.exponents());
                (Monomial::new(e), c.clone())
            }),
        ))
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self> {
        self.check_ctx(value)?;
        let mut powers: Vec<Self> = Vec::new();
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.exponents()[var] as usize;
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            while powers.len() <= e {
                let next = match powers.last() {
                    None => Self::constant(&self.ctx, c.one_like()),
                    Some(p) => p.mul(value)?,
                };
                powers.push(next);
            }
            let mut rest = m.exponents().to_vec();
            rest[var] = 0;
            let piece = powers[e].mul_monomial(&Monomial::new(rest), c);
            out = out.add(&piece)?;
        }
        Ok(out)
    }
}

impl QPoly {
    pub fn one(ctx: &VariableContext) -> Self {
        Self::constant(ctx, Rational::from_integer(1.into()))
    }

    pub fn var(ctx: &VariableContext, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.len(), i), Rational::from_integer(1.into()))
    }

    pub fn to_cyclotomic(&self, field: &CyclotomicField) -> CyclotomicPoly {
        self.map_coeffs(|c| field.from_rational(c.clone()))
    }

    /// Coefficient vector over `basis`; `None` if some term lies outside it.
    pub fn coordinates(&self, basis: &[Monomial]) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::from_integer(0.into()); basis.len()];
        let mut seen = 0;
        for (i, m) in basis.iter().enumerate() {
            if let Some(c) = self.terms.get(m) {
                v[i] = c.clone();
                seen += 1;
            }
        }
        (seen == self.terms.len()).then_some(v)
    }

    pub fn from_coordinates(ctx: &VariableContext, basis: &[Monomial], v: &[Rational]) -> Self {
        Self::from_terms(ctx, basis.iter().cloned().zip(v.iter().cloned()))
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        use num_traits::{Pow, Zero};
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= Pow::pow(x, e);
                }
            }
            acc + t
        })
    }
}
