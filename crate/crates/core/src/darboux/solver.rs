//! Case-splitting solver for the bilinear system d(f) = λ·f.
//!
//! Unknowns are the coefficients of f (one per degree-m monomial) and of λ
//! (one per degree-(s−1) monomial). Each pivot choice fixes the leading
//! monomial of f with coefficient 1. Inside a branch the rules are applied
//! in this order until none fires:
//!
//! 1. drop zero equations; a nonzero constant closes the branch;
//! 2. once every cofactor unknown is a constant, λ is known and the rest is
//!    linear: the branch reports λ and the caller computes the eigenspace;
//! 3. with no equations left, free unknowns are set to 0 and λ is read off;
//! 4. eliminate an unknown that occurs only as `k·u` with constant k ≠ 0;
//! 5. a univariate equation branches over its rational roots;
//! 6. a single-term equation branches over which of its unknowns is 0;
//! 7. two equations in the same two unknowns are reduced to one unknown by
//!    a resultant, which branches over its rational roots;
//! 8. otherwise the system is replaced by its reduced lex Gröbner basis,
//!    with the f-coefficients ranked above the cofactor coefficients so the
//!    basis contains generators of the elimination ideal in the cofactor
//!    unknowns; a basis {1} closes the branch.
//!
//! Every rule keeps all solutions of its branch, and every reported
//! cofactor is re-checked by an exact eigenspace computation, so extra
//! branches can only cost time.
//!
//! A branch where nothing applies is undecided and its residual system is
//! reported verbatim.

use num_traits::Zero;

use crate::arith::{Coefficient, Rational, UniPoly};
use crate::deriv::MonomialDerivation;
use crate::error::Result;
use crate::linalg::{distinct_rational_roots, RationalMatrix};
use crate::poly::{monomial_basis, Monomial, QPoly, VariableContext};
use crate::poly::groebner::{groebner_basis, TermOrder};

/// Reduction steps allowed per Gröbner basis computation.
const GROEBNER_WORK_LIMIT: usize = 2_000_000;

pub(super) struct Problem {
    d_ctx: VariableContext,
    unknowns: VariableContext,
    f_monomials: Vec<Monomial>,
    cofactor_monomials: Vec<Monomial>,
    equations: Vec<QPoly>,
}

pub(super) struct PivotOutcome {
    pub cofactors: Vec<QPoly>,
    pub undecided: Vec<String>,
    pub branches: usize,
}

#[derive(Clone)]
struct Branch {
    eqs: Vec<QPoly>,
    subs: Vec<Option<QPoly>>,
    /// Set once the equations are a reduced Gröbner basis.
    groebner: bool,
}

enum Step {
    Closed,
    Cofactor(QPoly),
    Split(Vec<Branch>),
    Undecided(String),
}

impl Problem {
    pub fn new(d: &MonomialDerivation, m: u32, md: &RationalMatrix) -> Result<Self> {
        let n = d.arity();
        let f_monomials = monomial_basis(n, m);
        let cofactor_monomials = super::cofactor_basis(d)?;
        let s = d.image_degree().expect("checked by caller");
        let rows = monomial_basis(n, m + s - 1);
        let d_ctx = d.context().clone();
        let names = f_monomials
            .iter()
            .map(|mono| format!("a[{}]", mono.render(&d_ctx)))
            .chain(
                cofactor_monomials
                    .iter()
                    .map(|mono| format!("c[{}]", mono.render(&d_ctx))),
            );
        let unknowns = VariableContext::new(names)?;
        let na = f_monomials.len();
        let width = unknowns.len();
        let one = Rational::from_integer(1.into());

        let mut equations = Vec::with_capacity(rows.len());
        for (r, rho) in rows.iter().enumerate() {
            let mut eq = QPoly::zero(&unknowns);
            for (j, c) in md.row(r).iter().enumerate() {
                if !c.is_zero() {
                    eq.add_term(Monomial::var(width, j), c.clone());
                }
            }
            for (b, beta) in cofactor_monomials.iter().enumerate() {
                let Some(nu) = rho.div(beta) else { continue };
                let Some(j) = f_monomials.iter().position(|x| x == &nu) else {
                    continue;
                };
                let mut e = vec![0; width];
                e[j] += 1;
                e[na + b] += 1;
                eq.add_term(Monomial::new(e), -one.clone());
            }
            equations.push(eq);
        }
        Ok(Problem {
            d_ctx,
            unknowns,
            f_monomials,
            cofactor_monomials,
            equations,
        })
    }

    pub fn num_pivots(&self) -> usize {
        self.f_monomials.len()
    }

    pub fn cofactor_monomials(&self) -> &[Monomial] {
        &self.cofactor_monomials
    }

    fn na(&self) -> usize {
        self.f_monomials.len()
    }

    fn constant(&self, c: Rational) -> QPoly {
        QPoly::constant(&self.unknowns, c)
    }

    fn assign(&self, mut b: Branch, u: usize, value: QPoly) -> Result<Branch> {
        for eq in b.eqs.iter_mut() {
            if eq.degree_in(u) > 0 {
                *eq = eq.substitute(u, &value)?;
            }
        }
        b.groebner = false;
        for expr in b.subs.iter_mut().flatten() {
            if expr.degree_in(u) > 0 {
                *expr = expr.substitute(u, &value)?;
            }
        }
        b.subs[u] = Some(value);
        Ok(b)
    }

    pub fn solve_pivot(&self, pivot: usize, cap: usize) -> Result<PivotOutcome> {
        let mut root = Branch {
            eqs: self.equations.clone(),
            subs: vec![None; self.unknowns.len()],
            groebner: false,
        };
        for j in 0..pivot {
            root = self.assign(root, j, QPoly::zero(&self.unknowns))?;
        }
        root = self.assign(root, pivot, QPoly::one(&self.unknowns))?;

        let mut out = PivotOutcome {
            cofactors: Vec::new(),
            undecided: Vec::new(),
            branches: 1,
        };
        let label = self.f_monomials[pivot].render(&self.d_ctx);
        let mut stack = vec![root];
        while let Some(b) = stack.pop() {
            match self.run(b)? {
                Step::Closed => {}
                Step::Cofactor(c) => out.cofactors.push(c),
                Step::Undecided(residual) => {
                    out.undecided.push(format!("pivot {label}: {residual}"));
                }
                Step::Split(children) => {
                    if out.branches + children.len() > cap {
                        out.undecided
                            .push(format!("pivot {label}: branch cap {cap} reached"));
                        break;
                    }
                    out.branches += children.len();
                    stack.extend(children.into_iter().rev());
                }
            }
        }
        Ok(out)
    }

    fn cofactor_from(&self, b: &Branch) -> QPoly {
        let na = self.na();
        let zero_point = Monomial::one(self.unknowns.len());
        QPoly::from_terms(
            &self.d_ctx,
            self.cofactor_monomials.iter().enumerate().map(|(i, mono)| {
                let value = b.subs[na + i]
                    .as_ref()
                    .and_then(|e| e.coefficient(&zero_point).cloned())
                    .unwrap_or_else(Rational::zero);
                (mono.clone(), value)
            }),
        )
    }

    fn run(&self, mut b: Branch) -> Result<Step> {
        let na = self.na();
        loop {
            b.eqs.retain(|e| !e.is_zero());
            if b.eqs.iter().any(QPoly::is_constant) {
                return Ok(Step::Closed);
            }
            let cofactor_known = b.subs[na..]
                .iter()
                .all(|s| s.as_ref().is_some_and(QPoly::is_constant));
            if cofactor_known || b.eqs.is_empty() {
                return Ok(Step::Cofactor(self.cofactor_from(&b)));
            }

            if let Some((u, value)) = self.find_linear(&b.eqs) {
                b = self.assign(b, u, value)?;
                continue;
            }

            if let Some((u, poly)) = b.eqs.iter().find_map(|e| univariate(e)) {
                let mut children = Vec::new();
                for root in distinct_rational_roots(&poly)? {
                    children.push(self.assign(b.clone(), u, self.constant(root))?);
                }
                return Ok(if children.is_empty() {
                    Step::Closed
                } else {
                    Step::Split(children)
                });
            }

            if let Some(eq) = b.eqs.iter().find(|e| e.len() == 1) {
                let mut children = Vec::new();
                for u in eq.variables() {
                    children.push(self.assign(b.clone(), u, QPoly::zero(&self.unknowns))?);
                }
                return Ok(Step::Split(children));
            }

            if let Some((i, g)) = b.eqs.iter().enumerate().find_map(|(i, e)| {
                let g = monomial_content(e);
                (!g.is_one()).then_some((i, g))
            }) {
                let mut children = Vec::new();
                for u in (0..g.arity()).filter(|&u| g.exponents()[u] > 0) {
                    children.push(self.assign(b.clone(), u, QPoly::zero(&self.unknowns))?);
                }
                let mut rest = b;
                let eq = &rest.eqs[i];
                let reduced = QPoly::from_terms(
                    &self.unknowns,
                    eq.terms().map(|(m, c)| (m.div(&g).expect("content divides"), c.clone())),
                );
                rest.eqs[i] = reduced;
                children.push(rest);
                return Ok(Step::Split(children));
            }

            if let Some((v, res)) = self.find_resultant(&b.eqs)? {
                if res.is_constant() {
                    return Ok(Step::Closed);
                }
                let (_, poly) = univariate(&res).expect("resultant has one unknown");
                let mut children = Vec::new();
                for root in distinct_rational_roots(&poly)? {
                    children.push(self.assign(b.clone(), v, self.constant(root))?);
                }
                return Ok(if children.is_empty() {
                    Step::Closed
                } else {
                    Step::Split(children)
                });
            }

            if !b.groebner {
                // Grevlex detects inconsistency cheaply; lex is only needed
                // to expose the elimination ideal of a proper ideal.
                let basis = groebner_basis(&b.eqs, TermOrder::Grevlex, GROEBNER_WORK_LIMIT)
                    .and_then(|g| {
                        if g.iter().any(QPoly::is_constant) {
                            Some(g)
                        } else {
                            groebner_basis(&g, TermOrder::Lex, GROEBNER_WORK_LIMIT)
                        }
                    });
                match basis {
                    Some(gb) => {
                        b.eqs = gb;
                        b.groebner = true;
                        continue;
                    }
                    None => {
                        return Ok(Step::Undecided(format!(
                            "Gröbner basis exceeded its work limit on: {}",
                            self.render_eqs(&b.eqs)
                        )))
                    }
                }
            }

            return Ok(Step::Undecided(self.render_eqs(&b.eqs)));
        }
    }

    /// A nonzero resultant of two equations whose unknowns are the same pair
    /// {u, v}, eliminating u. Returns v and the resultant.
    fn find_resultant(&self, eqs: &[QPoly]) -> Result<Option<(usize, QPoly)>> {
        let vars: Vec<Vec<usize>> = eqs.iter().map(QPoly::variables).collect();
        for i in 0..eqs.len() {
            if vars[i].len() != 2 {
                continue;
            }
            for j in i + 1..eqs.len() {
                if vars[j] != vars[i] {
                    continue;
                }
                for (u, v) in [(vars[i][0], vars[i][1]), (vars[i][1], vars[i][0])] {
                    let res = eqs[i].resultant(&eqs[j], u)?;
                    if !res.is_zero() {
                        return Ok(Some((v, res)));
                    }
                }
            }
        }
        Ok(None)
    }

    fn render_eqs(&self, eqs: &[QPoly]) -> String {
        eqs.iter().map(|e| format!("{e} = 0")).collect::<Vec<_>>().join("; ")
    }

    /// An equation `k·u + r = 0` with constant k ≠ 0 and u absent from r.
    fn find_linear(&self, eqs: &[QPoly]) -> Option<(usize, QPoly)> {
        let width = self.unknowns.len();
        for eq in eqs {
            for u in eq.variables() {
                let mut hits = eq.terms().filter(|(m, _)| m.exponents()[u] > 0);
                let Some((m, k)) = hits.next() else { continue };
                if hits.next().is_some() || m != &Monomial::var(width, u) {
                    continue;
                }
                let k_inv = k.inv_checked().expect("stored coefficients are nonzero");
                let rest = QPoly::from_terms(
                    &self.unknowns,
                    eq.terms()
                        .filter(|(mm, _)| *mm != m)
                        .map(|(mm, c)| (mm.clone(), c.clone())),
                );
                return Some((u, rest.scale(&(-k_inv))));
            }
        }
        None
    }
}

/// Greatest monomial dividing every term.
fn monomial_content(eq: &QPoly) -> Monomial {
    let mut terms = eq.terms();
    let Some((first, _)) = terms.next() else {
        return Monomial::one(eq.context().len());
    };
    let mut exps = first.exponents().to_vec();
    for (m, _) in terms {
        for (e, &x) in exps.iter_mut().zip(m.exponents()) {
            *e = (*e).min(x);
        }
    }
    Monomial::new(exps)
}

fn univariate(eq: &QPoly) -> Option<(usize, UniPoly)> {
    let vars = eq.variables();
    let [u] = vars[..] else { return None };
    let deg = eq.degree_in(u) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in eq.terms() {
        coeffs[m.exponents()[u] as usize] = c.clone();
    }
    Some((u, UniPoly::new(coeffs)))
}
