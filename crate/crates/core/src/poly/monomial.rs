use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered, duplicate-free list of variable names. The declared order fixes
/// the term order everywhere.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Arc<Vec<String>>,
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidInput("variable list is empty".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidInput(format!("duplicate variable '{n}'")));
            }
        }
        Ok(VariableContext {
            names: Arc::new(names),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Concatenation of two contexts with disjoint names.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        Self::new(self.names.iter().chain(other.names.iter()).cloned())
    }
}

/// Exponent vector of a monomial. Ordered graded-lexicographically: total
/// degree first, then lexicographically in the declared variable order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// The variable `i` to the first power.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Divides out one factor of variable `i`.
    pub fn lower(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    pub fn render(&self, ctx: &VariableContext) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ctx.name(i).to_string()
                } else {
                    format!("{}^{e}", ctx.name(i))
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `m` in `arity` variables, in
/// descending lexicographic order.
pub fn monomial_basis(arity: usize, m: u32) -> Vec<Monomial> {
    fn rec(arity: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == arity {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(arity, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if arity == 0 {
        if m == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(arity, m, &mut Vec::with_capacity(arity), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn basis_order() {
        let b: Vec<Vec<u32>> = monomial_basis(2, 2).into_iter().map(|m| m.0).collect();
        assert_eq!(b, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let b: Vec<Vec<u32>> = monomial_basis(3, 1).into_iter().map(|m| m.0).collect();
        assert_eq!(b, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomial_basis(2, 1).len(), 2);
    }

    #[test]
    fn basis_sizes() {
        for n in 1..6usize {
            for m in 0..6u32 {
                let b = monomial_basis(n, m);
                assert_eq!(b.len() as u64, binom(m as u64 + n as u64 - 1, n as u64 - 1));
                assert!(b.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn grlex() {
        let x2 = Monomial::new(vec![2, 0]);
        let y3 = Monomial::new(vec![0, 3]);
        let xy = Monomial::new(vec![1, 1]);
        assert!(y3 > x2);
        assert!(x2 > xy);
    }

    #[test]
    fn context_rejects_duplicates() {
        assert!(VariableContext::new(["x", "x"]).is_err());
        assert!(VariableContext::new(Vec::<String>::new()).is_err());
    }
}
