use std::collections::HashMap;

use super::{CyclotomicPoly, Monomial, Polynomial, QPoly, VariableContext};
use crate::arith::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};

/// Diagonal automorphism x_i ↦ scale_i · x_i with nonzero scales in Q(ζ_N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalAutomorphism {
    ctx: VariableContext,
    scales: Vec<CyclotomicNumber>,
}

impl DiagonalAutomorphism {
    pub fn new(ctx: &VariableContext, scales: Vec<CyclotomicNumber>) -> Result<Self> {
        if scales.len() != ctx.len() {
            return Err(Error::Dimension(format!(
                "{} scales for {} variables",
                scales.len(),
                ctx.len()
            )));
        }
        if scales.iter().any(CyclotomicNumber::is_zero) {
            return Err(Error::InvalidInput("automorphism scale must be nonzero".into()));
        }
        if scales.windows(2).any(|w| w[0].field() != w[1].field()) {
            return Err(Error::InvalidInput("scales from different fields".into()));
        }
        Ok(DiagonalAutomorphism {
            ctx: ctx.clone(),
            scales,
        })
    }

    pub fn identity(ctx: &VariableContext, field: &CyclotomicField) -> Self {
        DiagonalAutomorphism {
            ctx: ctx.clone(),
            scales: vec![field.one(); ctx.len()],
        }
    }

    /// x_i ↦ ζ^{e_i} x_i.
    pub fn roots_of_unity(ctx: &VariableContext, field: &CyclotomicField, exps: &[i64]) -> Result<Self> {
        Self::new(ctx, exps.iter().map(|&e| field.zeta_pow(e)).collect())
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn scales(&self) -> &[CyclotomicNumber] {
        &self.scales
    }

    pub fn field(&self) -> &CyclotomicField {
        self.scales[0].field()
    }

    /// ∏ scale_i^{e_i}.
    pub fn monomial_factor(&self, m: &Monomial) -> CyclotomicNumber {
        m.exponents()
            .iter()
            .zip(&self.scales)
            .filter(|(&e, _)| e > 0)
            .fold(self.field().one(), |acc, (&e, s)| acc.mul(&s.pow(e as u64)))
    }

    pub fn apply(&self, p: &CyclotomicPoly) -> Result<CyclotomicPoly> {
        if p.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut cache: HashMap<(usize, u32), CyclotomicNumber> = HashMap::new();
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in p.terms() {
            let mut factor = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let s = cache
                    .entry((i, e))
                    .or_insert_with(|| self.scales[i].pow(e as u64));
                factor = factor.mul(s);
            }
            out.add_term(m.clone(), factor);
        }
        Ok(out)
    }

    pub fn apply_rational(&self, p: &QPoly) -> Result<CyclotomicPoly> {
        self.apply(&p.to_cyclotomic(self.field()))
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Self::new(
            &self.ctx,
            self.scales.iter().zip(&other.scales).map(|(a, b)| a.mul(b)).collect(),
        )
    }

    pub fn pow(&self, e: u64) -> Self {
        DiagonalAutomorphism {
            ctx: self.ctx.clone(),
            scales: self.scales.iter().map(|s| s.pow(e)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        DiagonalAutomorphism {
            ctx: self.ctx.clone(),
            scales: self
                .scales
                .iter()
                .map(|s| s.invert().expect("scales are nonzero"))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.scales.iter().all(|s| s == &self.field().one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y"]).unwrap()
    }

    #[test]
    fn sign_flip_on_y() {
        let f2 = CyclotomicField::new(2).unwrap();
        let sigma = DiagonalAutomorphism::roots_of_unity(&ctx(), &f2, &[0, 1]).unwrap();
        let p = parse_polynomial(&ctx(), "x + y").unwrap();
        let expected = parse_polynomial(&ctx(), "x - y").unwrap().to_cyclotomic(&f2);
        assert_eq!(sigma.apply_rational(&p).unwrap(), expected);
    }

    #[test]
    fn identity_leaves_polynomial() {
        let f3 = CyclotomicField::new(3).unwrap();
        let id = DiagonalAutomorphism::identity(&ctx(), &f3);
        let p = parse_polynomial(&ctx(), "x^2 - 3*x*y + 7").unwrap().to_cyclotomic(&f3);
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn zeta3_scaling() {
        let f3 = CyclotomicField::new(3).unwrap();
        let sigma = DiagonalAutomorphism::roots_of_unity(&ctx(), &f3, &[0, 1]).unwrap();
        let p = parse_polynomial(&ctx(), "x - y").unwrap();
        let out = sigma.apply_rational(&p).unwrap();
        let x = Polynomial::monomial(&ctx(), Monomial::var(2, 0), f3.one());
        let zy = Polynomial::monomial(&ctx(), Monomial::var(2, 1), f3.zeta_pow(1));
        assert_eq!(out, x.sub(&zy).unwrap());
        assert_eq!(sigma.pow(3), DiagonalAutomorphism::identity(&ctx(), &f3));
        assert!(sigma.compose(&sigma.inverse()).unwrap().is_identity());
    }
}
