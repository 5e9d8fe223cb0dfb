//! Degree-bounded search for Darboux polynomials d(f) = λ·f over Q.
//!
//! Only homogeneous f are searched: for a homogeneous derivation every
//! homogeneous component of a Darboux polynomial is Darboux with the same
//! cofactor, and the cofactor is homogeneous of degree s − 1.

mod solver;

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::Rational;
use crate::deriv::MonomialDerivation;
use crate::error::{Error, Result};
use crate::linalg::{char_poly, distinct_rational_roots, echelon, nullspace, RationalMatrix};
use crate::poly::{monomial_basis, Monomial, QPoly};

/// A Darboux polynomial with its cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxPair {
    pub f: QPoly,
    pub cofactor: QPoly,
}

/// All homogeneous degree-m solutions of d(f) = λf for one cofactor λ, as a
/// basis in reduced echelon form (leading coefficients 1, descending
/// graded-lex pivots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxSolution {
    pub cofactor: QPoly,
    pub basis: Vec<QPoly>,
}

impl DarbouxSolution {
    pub fn pairs(&self) -> impl Iterator<Item = DarbouxPair> + '_ {
        self.basis.iter().map(|f| DarbouxPair {
            f: f.clone(),
            cofactor: self.cofactor.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeStatus {
    /// Every branch closed without a solution: no Darboux polynomial of this
    /// degree over Q.
    None,
    Found,
    Undecided,
}

impl DegreeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DegreeStatus::None => "NONE",
            DegreeStatus::Found => "FOUND",
            DegreeStatus::Undecided => "UNDECIDED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    pub degree: u32,
    pub status: DegreeStatus,
    pub solutions: Vec<DarbouxSolution>,
    /// Residual systems of branches the solver could not close.
    pub undecided: Vec<String>,
    pub branches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub max_degree: u32,
    pub degrees: Vec<DegreeResult>,
}

impl SearchReport {
    pub fn any_undecided(&self) -> bool {
        self.degrees.iter().any(|d| d.status == DegreeStatus::Undecided)
    }

    pub fn all_none(&self) -> bool {
        self.degrees.iter().all(|d| d.status == DegreeStatus::None)
    }

    pub fn first_pair(&self) -> Option<DarbouxPair> {
        self.degrees
            .iter()
            .flat_map(|d| d.solutions.iter())
            .flat_map(DarbouxSolution::pairs)
            .next()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum branches explored below each pivot choice.
    pub branch_cap: usize,
    pub monomial_cofactors_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            branch_cap: 4096,
            monomial_cofactors_only: false,
        }
    }
}

fn image_degree(d: &MonomialDerivation) -> Result<u32> {
    d.image_degree().ok_or_else(|| {
        Error::Unsupported("Darboux search needs a homogeneous derivation".into())
    })
}

/// Cofactor monomials: the degree-(s−1) basis, empty when s = 0.
pub fn cofactor_basis(d: &MonomialDerivation) -> Result<Vec<Monomial>> {
    let s = image_degree(d)?;
    Ok(if s == 0 {
        Vec::new()
    } else {
        monomial_basis(d.arity(), s - 1)
    })
}

fn target_degree(m: u32, s: u32) -> Result<u32> {
    (m + s)
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidInput("degree must be at least 1".into()))
}

fn index_map(basis: &[Monomial]) -> BTreeMap<&Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Matrix of d: A^m → A^{m+s−1} in the monomial bases.
pub fn derivation_matrix(d: &MonomialDerivation, m: u32) -> Result<RationalMatrix> {
    let s = image_degree(d)?;
    if m == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let cols = monomial_basis(d.arity(), m);
    let rows = monomial_basis(d.arity(), target_degree(m, s)?);
    let row_of = index_map(&rows);
    let mut mat = RationalMatrix::zeros(rows.len(), cols.len());
    for (j, mono) in cols.iter().enumerate() {
        let image = d.apply(&QPoly::monomial(d.context(), mono.clone(), Rational::from_integer(1.into())))?;
        for (rm, c) in image.terms() {
            mat[(row_of[rm], j)] = c.clone();
        }
    }
    Ok(mat)
}

/// Matrix of f ↦ d(f) − λ·f on A^m.
fn eigen_system(d: &MonomialDerivation, cofactor: &QPoly, m: u32) -> Result<RationalMatrix> {
    let s = image_degree(d)?;
    let mut mat = derivation_matrix(d, m)?;
    let cols = monomial_basis(d.arity(), m);
    let rows = monomial_basis(d.arity(), target_degree(m, s)?);
    let row_of = index_map(&rows);
    for (beta, c) in cofactor.terms() {
        for (j, nu) in cols.iter().enumerate() {
            let r = row_of.get(&beta.mul(nu)).ok_or_else(|| {
                Error::InvalidInput(format!("cofactor {cofactor} is not homogeneous of degree {}", s as i64 - 1))
            })?;
            mat[(*r, j)] -= c;
        }
    }
    Ok(mat)
}

/// Canonical basis of the span of coordinate vectors over `basis`.
fn canonical_basis(d: &MonomialDerivation, basis: &[Monomial], vectors: Vec<Vec<Rational>>) -> Vec<QPoly> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mat = RationalMatrix::from_rows(vectors).expect("equal lengths");
    echelon(&mat)
        .rows
        .iter()
        .map(|row| QPoly::from_coordinates(d.context(), basis, row))
        .collect()
}

/// Basis of {f ∈ A^m : d(f) = λ·f}.
pub fn eigenspace(d: &MonomialDerivation, cofactor: &QPoly, m: u32) -> Result<Vec<QPoly>> {
    let sys = eigen_system(d, cofactor, m)?;
    let basis = monomial_basis(d.arity(), m);
    Ok(canonical_basis(d, &basis, nullspace(&sys)))
}

fn checked_solution(d: &MonomialDerivation, cofactor: QPoly, basis: Vec<QPoly>) -> Result<DarbouxSolution> {
    for f in &basis {
        let q = d.apply(f)?.divide_exact(f)?;
        if q.as_ref() != Some(&cofactor) {
            return Err(Error::Verification(format!(
                "solver produced {f} with cofactor {cofactor}, which does not re-verify"
            )));
        }
    }
    Ok(DarbouxSolution { cofactor, basis })
}

/// Solutions whose cofactor is zero or c·μ for a single monomial μ.
///
/// Complete for that cofactor shape: for each μ the rows ν+μ of M_d give a
/// square matrix E whose rational eigenvalues are the candidate c, and the
/// remaining rows must vanish.
pub fn monomial_cofactor_search(d: &MonomialDerivation, m: u32) -> Result<Vec<DarbouxSolution>> {
    let s = image_degree(d)?;
    let md = derivation_matrix(d, m)?;
    let cols = monomial_basis(d.arity(), m);
    let rows = monomial_basis(d.arity(), target_degree(m, s)?);
    let row_of = index_map(&rows);
    let mut out = Vec::new();

    let zero_cofactor = QPoly::zero(d.context());
    let kernel = canonical_basis(d, &cols, nullspace(&md));
    if !kernel.is_empty() {
        out.push(checked_solution(d, zero_cofactor, kernel)?);
    }

    for mu in cofactor_basis(d)? {
        let shifted: Vec<usize> = cols.iter().map(|nu| row_of[&nu.mul(&mu)]).collect();
        let mut is_shift = vec![false; rows.len()];
        for &r in &shifted {
            is_shift[r] = true;
        }
        let e = RationalMatrix::from_rows(shifted.iter().map(|&r| md.row(r).to_vec()).collect())?;
        let constraints = RationalMatrix::from_rows(
            (0..rows.len())
                .filter(|&r| !is_shift[r])
                .map(|r| md.row(r).to_vec())
                .collect(),
        )?;
        for c in distinct_rational_roots(&char_poly(&e)?)? {
            if c.is_zero() {
                continue;
            }
            let sys = e.shift_diagonal(&c)?.vstack(&constraints)?;
            let basis = canonical_basis(d, &cols, nullspace(&sys));
            if basis.is_empty() {
                continue;
            }
            let cofactor = QPoly::monomial(d.context(), mu.clone(), c);
            out.push(checked_solution(d, cofactor, basis)?);
        }
    }
    sort_solutions(&mut out);
    Ok(out)
}

fn sort_solutions(sols: &mut [DarbouxSolution]) {
    sols.sort_by(|a, b| {
        let key = |p: &QPoly| -> Vec<(Monomial, Rational)> {
            p.terms().rev().map(|(m, c)| (m.clone(), c.clone())).collect()
        };
        key(&b.cofactor).cmp(&key(&a.cofactor))
    });
}

/// Full search at degree m with an arbitrary degree-(s−1) cofactor.
pub fn general_cofactor_search(
    d: &MonomialDerivation,
    m: u32,
    options: &SearchOptions,
) -> Result<DegreeResult> {
    let s = image_degree(d)?;
    target_degree(m, s)?;
    let md = derivation_matrix(d, m)?;
    let problem = solver::Problem::new(d, m, &md)?;
    let outcomes: Vec<solver::PivotOutcome> = (0..problem.num_pivots())
        .into_par_iter()
        .map(|pivot| problem.solve_pivot(pivot, options.branch_cap))
        .collect::<Result<_>>()?;

    let mut cofactors: BTreeMap<Vec<Rational>, QPoly> = BTreeMap::new();
    let mut undecided = Vec::new();
    let mut branches = 0;
    for o in outcomes {
        branches += o.branches;
        for c in o.cofactors {
            let key = c.coordinates(problem.cofactor_monomials()).expect("cofactor lies in basis");
            cofactors.insert(key, c);
        }
        undecided.extend(o.undecided);
    }
    let mut solutions = Vec::new();
    for cofactor in cofactors.into_values() {
        let basis = eigenspace(d, &cofactor, m)?;
        if !basis.is_empty() {
            solutions.push(checked_solution(d, cofactor, basis)?);
        }
    }
    sort_solutions(&mut solutions);
    let status = if !solutions.is_empty() {
        DegreeStatus::Found
    } else if undecided.is_empty() {
        DegreeStatus::None
    } else {
        DegreeStatus::Undecided
    };
    Ok(DegreeResult {
        degree: m,
        status,
        solutions,
        undecided,
        branches,
    })
}

/// Runs the search for m = 1..=max_degree, merging the monomial-cofactor
/// fast path into the general solver's findings.
pub fn search_up_to(d: &MonomialDerivation, max_degree: u32, options: &SearchOptions) -> Result<SearchReport> {
    if max_degree == 0 {
        return Err(Error::InvalidInput("max degree must be at least 1".into()));
    }
    image_degree(d)?;
    let mut degrees = Vec::new();
    for m in 1..=max_degree {
        let fast = monomial_cofactor_search(d, m)?;
        let mut result = if options.monomial_cofactors_only {
            DegreeResult {
                degree: m,
                status: DegreeStatus::Undecided,
                solutions: Vec::new(),
                undecided: vec!["only cofactors of the form c*monomial were searched".into()],
                branches: 0,
            }
        } else {
            general_cofactor_search(d, m, options)?
        };
        for sol in fast {
            if !result.solutions.iter().any(|s| s.cofactor == sol.cofactor) {
                result.solutions.push(sol);
            }
        }
        sort_solutions(&mut result.solutions);
        if !result.solutions.is_empty() {
            result.status = DegreeStatus::Found;
        }
        degrees.push(result);
    }
    Ok(SearchReport {
        max_degree,
        degrees,
    })
}

/// d(f) = λ·f exactly.
pub fn verify_darboux(d: &MonomialDerivation, f: &QPoly, cofactor: &QPoly) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::InvalidInput("a Darboux polynomial must be non-constant".into()));
    }
    Ok(d.apply(f)? == cofactor.mul(f)?)
}

/// Splits a rational constant p/q (d(p)q = p·d(q)) into its Darboux
/// numerator and denominator. Constant parts yield `None`.
///
/// The pair must be reduced; a common factor may produce spurious cofactors
/// or a non-polynomial quotient.
pub fn rational_constant_to_darboux(
    d: &MonomialDerivation,
    p: &QPoly,
    q: &QPoly,
) -> Result<(Option<DarbouxPair>, Option<DarbouxPair>)> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::InvalidInput("numerator and denominator must be nonzero".into()));
    }
    if p.is_constant() && q.is_constant() {
        return Err(Error::InvalidInput("p/q is a constant of K".into()));
    }
    let dp = d.apply(p)?;
    let dq = d.apply(q)?;
    if !dp.mul(q)?.sub(&p.mul(&dq)?)?.is_zero() {
        return Err(Error::Verification("d(p/q) != 0: not a rational constant".into()));
    }
    let pair = |f: &QPoly, df: &QPoly| -> Result<Option<DarbouxPair>> {
        if f.is_constant() {
            return Ok(None);
        }
        let cofactor = df.divide_exact(f)?.ok_or_else(|| {
            Error::Verification(format!("d({f}) is not divisible by {f}; p and q share a factor?"))
        })?;
        Ok(Some(DarbouxPair {
            f: f.clone(),
            cofactor,
        }))
    };
    let (a, b) = (pair(p, &dp)?, pair(q, &dq)?);
    if let (Some(a), Some(b)) = (&a, &b) {
        if a.cofactor != b.cofactor {
            return Err(Error::Verification("numerator and denominator cofactors differ".into()));
        }
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::gen_jouanolou;
    use crate::poly::{parse_polynomial, VariableContext};

    fn jou22() -> MonomialDerivation {
        gen_jouanolou(2, 2).unwrap()
    }

    fn p(d: &MonomialDerivation, text: &str) -> QPoly {
        parse_polynomial(d.context(), text).unwrap()
    }

    #[test]
    fn matrix_of_jouanolou_22() {
        let d = jou22();
        assert_eq!(
            derivation_matrix(&d, 1).unwrap(),
            RationalMatrix::from_i64(&[&[0, 1], &[0, 0], &[1, 0]])
        );
        // columns x^3, x^2y, xy^2, y^3; rows x^4 .. y^4
        assert_eq!(
            derivation_matrix(&d, 3).unwrap(),
            RationalMatrix::from_i64(&[
                &[0, 1, 0, 0],
                &[0, 0, 2, 0],
                &[3, 0, 0, 3],
                &[0, 2, 0, 0],
                &[0, 0, 1, 0],
            ])
        );
    }

    #[test]
    fn monomial_fast_path() {
        let d = jou22();
        assert!(monomial_cofactor_search(&d, 1).unwrap().is_empty());
        let sols = monomial_cofactor_search(&d, 3).unwrap();
        assert_eq!(sols.len(), 1);
        assert!(sols[0].cofactor.is_zero());
        assert_eq!(sols[0].basis, vec![p(&d, "x1^3 - x2^3")]);
    }

    #[test]
    fn general_search_jouanolou_22() {
        let d = jou22();
        let opts = SearchOptions::default();
        let r1 = general_cofactor_search(&d, 1, &opts).unwrap();
        assert_eq!(r1.status, DegreeStatus::Found);
        assert_eq!(r1.solutions.len(), 1);
        assert_eq!(r1.solutions[0].cofactor, p(&d, "-x1 - x2"));
        assert_eq!(r1.solutions[0].basis, vec![p(&d, "x1 - x2")]);
        let r2 = general_cofactor_search(&d, 2, &opts).unwrap();
        assert!(r2
            .solutions
            .iter()
            .any(|s| s.cofactor == p(&d, "x1 + x2") && s.basis == vec![p(&d, "x1^2 + x1*x2 + x2^2")]));
    }

    #[test]
    fn general_search_jouanolou_32_degree_one_is_empty() {
        let d = gen_jouanolou(3, 2).unwrap();
        let r = general_cofactor_search(&d, 1, &SearchOptions::default()).unwrap();
        assert_eq!(r.status, DegreeStatus::None, "{:?}", r.undecided);
    }

    #[test]
    fn toy_degree_one() {
        let d = gen_jouanolou(2, 1).unwrap();
        let r = search_up_to(&d, 1, &SearchOptions::default()).unwrap();
        let sols = &r.degrees[0].solutions;
        assert!(sols
            .iter()
            .any(|s| s.cofactor == p(&d, "1") && s.basis == vec![p(&d, "x1 + x2")]));
    }

    #[test]
    fn verify_examples() {
        let d = jou22();
        assert!(verify_darboux(&d, &p(&d, "x1 - x2"), &p(&d, "-x1 - x2")).unwrap());
        assert!(!verify_darboux(&d, &p(&d, "x1 - x2"), &p(&d, "x1 + x2")).unwrap());
        let t = gen_jouanolou(2, 1).unwrap();
        assert!(verify_darboux(&t, &p(&t, "x1 + x2"), &p(&t, "1")).unwrap());
        assert!(verify_darboux(&t, &p(&t, "3"), &p(&t, "0")).is_err());
    }

    #[test]
    fn rational_constants_split() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let euler = MonomialDerivation::from_exponents(&ctx, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let x = QPoly::var(&ctx, 0);
        let y = QPoly::var(&ctx, 1);
        let (a, b) = rational_constant_to_darboux(&euler, &x, &y).unwrap();
        assert_eq!(a.unwrap().cofactor, QPoly::one(&ctx));
        assert_eq!(b.unwrap().cofactor, QPoly::one(&ctx));

        let d = jou22();
        let one = QPoly::one(d.context());
        let (a, b) = rational_constant_to_darboux(&d, &p(&d, "x1^3 - x2^3"), &one).unwrap();
        assert!(a.unwrap().cofactor.is_zero());
        assert!(b.is_none());

        let t = gen_jouanolou(2, 1).unwrap();
        let one = QPoly::one(t.context());
        let (a, _) = rational_constant_to_darboux(&t, &p(&t, "x1^2 - x2^2"), &one).unwrap();
        assert!(a.unwrap().cofactor.is_zero());

        assert!(matches!(
            rational_constant_to_darboux(&t, &p(&t, "x1"), &one),
            Err(Error::Verification(_))
        ));
        assert!(rational_constant_to_darboux(&t, &one, &one).is_err());
    }

    #[test]
    fn non_homogeneous_is_unsupported() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let d = MonomialDerivation::from_exponents(&ctx, vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert!(matches!(derivation_matrix(&d, 1), Err(Error::Unsupported(_))));
        assert!(matches!(
            search_up_to(&d, 1, &SearchOptions::default()),
            Err(Error::Unsupported(_))
        ));
    }
}
