//! Buchberger's algorithm over Q with the product and chain criteria.
//!
//! Used by the Darboux solver as a last resort on small residual systems,
//! so the implementation favours clarity over speed. A work limit turns
//! runaway computations into `None` instead of hanging.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{denominator_lcm, Rational};
use crate::poly::{Monomial, QPoly, VariableContext};

/// Term orders. Variables are ranked by index: x0 > x1 > ...
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    Grevlex,
}

impl TermOrder {
    pub fn compare(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// Primitive integer polynomial with positive leading coefficient; terms
/// sorted descending in the chosen order. Over Q every polynomial is a unit
/// multiple of one of these, so the ideal is unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GPoly {
    terms: Vec<(Vec<u32>, BigInt)>,
}

impl GPoly {
    fn from_qpoly(p: &QPoly, order: TermOrder) -> Self {
        let den = denominator_lcm(p.terms().map(|(_, c)| c));
        let mut terms: Vec<(Vec<u32>, BigInt)> = p
            .terms()
            .map(|(m, c)| (m.exponents().to_vec(), (c * &den).to_integer()))
            .collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        GPoly { terms }.primitive()
    }

    fn to_qpoly(&self, ctx: &VariableContext) -> QPoly {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        QPoly::from_terms(
            ctx,
            self.terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.clone()), Rational::from_integer(c.clone()) / &lc)),
        )
    }

    fn lm(&self) -> &[u32] {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    fn primitive(mut self) -> Self {
        let Some((_, lc)) = self.terms.first() else {
            return self;
        };
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if lc.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        self
    }

    /// a * self - b * x^shift * other
    fn combine(&self, a: &BigInt, b: &BigInt, shift: &[u32], other: &GPoly, order: TermOrder) -> GPoly {
        let mut shifted = other.terms.iter().map(|(e, k)| {
            let e: Vec<u32> = e.iter().zip(shift).map(|(x, y)| x + y).collect();
            (e, -(k * b))
        });
        let mut left = self.terms.iter().map(|(e, k)| (e.clone(), k * a));
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut l = left.next();
        let mut r = shifted.next();
        loop {
            match (l.take(), r.take()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x);
                    l = left.next();
                }
                (None, Some(y)) => {
                    out.push(y);
                    r = shifted.next();
                }
                (Some(x), Some(y)) => match order.compare(&x.0, &y.0) {
                    Ordering::Greater => {
                        out.push(x);
                        l = left.next();
                        r = Some(y);
                    }
                    Ordering::Less => {
                        out.push(y);
                        r = shifted.next();
                        l = Some(x);
                    }
                    Ordering::Equal => {
                        let s = x.1 + y.1;
                        if !s.is_zero() {
                            out.push((x.0, s));
                        }
                        l = left.next();
                        r = shifted.next();
                    }
                },
            }
        }
        GPoly { terms: out }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn quotient(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Pseudo-reduction of p by the basis, up to a nonzero rational factor.
/// With `full` every term is reduced, otherwise only the leading one.
fn reduce(p: GPoly, basis: &[GPoly], order: TermOrder, full: bool, work: &mut usize) -> GPoly {
    let mut rest = p;
    // Irreducible terms already split off, in descending order.
    let mut done: Vec<(Vec<u32>, BigInt)> = Vec::new();
    let mut steps = 0usize;
    'outer: while let Some((lm, lc)) = rest.terms.first().cloned() {
        *work += rest.terms.len();
        if let Some(g) = basis.iter().find(|g| divides(g.lm(), &lm)) {
            let glc = &g.terms[0].1;
            let d = glc.gcd(&lc);
            let a = glc / &d;
            let b = &lc / &d;
            rest = rest.combine(&a, &b, &quotient(&lm, g.lm()), g, order);
            if !a.is_one() {
                for (_, c) in &mut done {
                    *c *= &a;
                }
            }
            steps += 1;
            if steps % 8 == 0 {
                let mut all = GPoly { terms: std::mem::take(&mut done) };
                let split = all.terms.len();
                all.terms.extend(rest.terms);
                let all = all.primitive_keep_sign();
                let mut terms = all.terms;
                rest = GPoly { terms: terms.split_off(split) };
                done = terms;
            }
            continue 'outer;
        }
        if !full {
            break;
        }
        done.push(rest.terms.remove(0));
    }
    done.extend(rest.terms);
    GPoly { terms: done }.primitive()
}

impl GPoly {
    /// Divides by the positive content without normalising the sign.
    fn primitive_keep_sign(mut self) -> Self {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                return self;
            }
        }
        if !g.is_zero() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        self
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, or `None` if the
/// work limit (roughly the number of term operations) is exceeded. Each
/// element is returned with leading coefficient 1.
pub fn groebner_basis(gens: &[QPoly], order: TermOrder, work_limit: usize) -> Option<Vec<QPoly>> {
    let ctx = gens.first()?.context().clone();
    let one = || Some(vec![QPoly::constant(&ctx, Rational::one())]);
    let mut work = 0usize;
    let mut basis: Vec<GPoly> = Vec::new();
    for g in gens {
        let r = reduce(GPoly::from_qpoly(g, order), &basis, order, true, &mut work);
        if r.is_constant() {
            return one();
        }
        if !r.is_zero() {
            basis.push(r);
        }
    }

    // Pending pairs with their lcm.
    let mut pairs: Vec<(usize, usize, Vec<u32>)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, lcm(basis[i].lm(), basis[j].lm())));
        }
    }
    while !pairs.is_empty() {
        if work > work_limit {
            return None;
        }
        // Normal strategy: smallest lcm first.
        let pos = (0..pairs.len())
            .min_by(|&a, &b| order.compare(&pairs[a].2, &pairs[b].2))
            .expect("nonempty");
        let (i, j, l) = pairs.swap_remove(pos);
        let (fi, fj) = (&basis[i], &basis[j]);
        if coprime(fi.lm(), fj.lm()) {
            continue;
        }
        let pending = |a: usize, b: usize| pairs.iter().any(|p| p.0 == a.min(b) && p.1 == a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && divides(basis[k].lm(), &l) && !pending(i, k) && !pending(j, k)
        });
        if chain {
            continue;
        }
        let (ci, cj) = (&fi.terms[0].1, &fj.terms[0].1);
        let d = ci.gcd(cj);
        // s = (cj/d) x^(l - lm_i) fi - (ci/d) x^(l - lm_j) fj
        let s = GPoly { terms: Vec::new() }
            .combine(&BigInt::one(), &-(cj / &d), &quotient(&l, fi.lm()), fi, order)
            .combine(&BigInt::one(), &(ci / &d), &quotient(&l, fj.lm()), fj, order);
        let r = reduce(s, &basis, order, false, &mut work);
        if r.is_zero() {
            continue;
        }
        let r = reduce(r, &basis, order, true, &mut work);
        if r.is_constant() {
            return one();
        }
        basis.push(r);
        let n = basis.len() - 1;
        for k in 0..n {
            pairs.push((k, n, lcm(basis[k].lm(), basis[n].lm())));
        }
    }

    // Minimise and interreduce.
    let mut minimal: Vec<GPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && divides(h.lm(), g.lm()) && (h.lm() != g.lm() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut sorted: BTreeMap<Vec<u32>, QPoly> = BTreeMap::new();
    for i in 0..minimal.len() {
        let others: Vec<GPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        // The leading term is irreducible by the others, so full reduction
        // only rewrites the tail.
        let g = reduce(minimal[i].clone(), &others, order, true, &mut work);
        sorted.insert(g.lm().to_vec(), g.to_qpoly(&ctx));
    }
    Some(sorted.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> QPoly {
        parse_polynomial(&ctx(), s).unwrap()
    }

    #[test]
    fn inconsistent_system_gives_one() {
        let gb = groebner_basis(&[p("x*y - 1"), p("x"), p("z")], TermOrder::Lex, 10_000).unwrap();
        assert_eq!(gb, vec![p("1")]);
    }

    #[test]
    fn lex_basis_is_triangular() {
        // x^2 + y^2 = 2, x = y  => y^2 = 1
        let gb = groebner_basis(&[p("x^2 + y^2 - 2"), p("x - y")], TermOrder::Lex, 10_000).unwrap();
        assert!(gb.contains(&p("y^2 - 1")));
        assert!(gb.contains(&p("x - y")));
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn textbook_example() {
        // Cox-Little-O'Shea: x^3 - 2xy, x^2 y - 2y^2 + x under grlex.
        let gb = groebner_basis(
            &[p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")],
            TermOrder::Grevlex,
            10_000,
        )
        .unwrap();
        let expected = [p("x^2"), p("x*y"), p("y^2 - 1/2*x")];
        assert_eq!(gb.len(), 3);
        for e in expected {
            assert!(gb.contains(&e), "missing {e}");
        }
    }

    #[test]
    fn members_reduce_to_zero() {
        let gens = [p("x^2*y + z"), p("x*z^2 - y"), p("y*z - x")];
        let gb = groebner_basis(&gens, TermOrder::Grevlex, 100_000).unwrap();
        let g: Vec<GPoly> = gb.iter().map(|q| GPoly::from_qpoly(q, TermOrder::Grevlex)).collect();
        let mut work = 0;
        for f in &gens {
            let r = reduce(GPoly::from_qpoly(f, TermOrder::Grevlex), &g, TermOrder::Grevlex, true, &mut work);
            assert!(r.is_zero());
        }
    }
}
