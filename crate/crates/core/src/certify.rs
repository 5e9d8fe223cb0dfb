//! Root-of-unity symmetry of generalized cyclotomic monomial derivations.
//!
//! For blocks S_1..S_k with d(S_i) ⊆ K[S_{i+1}] and images of degree s, put
//! N = 1 + s + ... + s^{k−1}, q_i = 1 + s + ... + s^i and let σ scale every
//! variable of S_{k−i} by ζ^{q_i}, ζ a primitive N-th root of unity. Then
//! σ⁻¹dσ = ζd, so for a Darboux pair (f, λ) the product
//! F = ∏_{m<N} σ^m(f) has d(F) = Λ·F with Λ = Σ_m ζ^m σ^m(λ), and Λ = 0
//! because every cofactor monomial X^β is scaled by ζ^δ with 0 < δ+1 < N.
//! Each step of that argument is an executable check here.

use rayon::prelude::*;

use crate::arith::CyclotomicField;
use crate::darboux::{search_up_to, verify_darboux, DarbouxPair, SearchOptions, SearchReport};
use crate::deriv::{detect_cyclotomic_partition, partition_for_k, CyclotomicPartition, MonomialDerivation};
use crate::error::{Error, Result};
use crate::poly::{monomial_basis, CyclotomicPoly, DiagonalAutomorphism, Monomial, QPoly, VariableContext};

/// Largest N for which a structure is built; the field keeps N powers of ζ.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct CyclotomicStructure {
    partition: CyclotomicPartition,
    s: u32,
    n: u64,
    q: Vec<u64>,
    field: CyclotomicField,
    sigma: DiagonalAutomorphism,
    /// σ(x_v) = ζ^{e_v} x_v with e_v reduced mod N.
    sigma_exponents: Vec<u64>,
}

impl CyclotomicStructure {
    pub fn partition(&self) -> &CyclotomicPartition {
        &self.partition
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// N = q_{k−1}.
    pub fn order(&self) -> u64 {
        self.n
    }

    /// q_0, ..., q_{k−1}.
    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn sigma(&self) -> &DiagonalAutomorphism {
        &self.sigma
    }

    pub fn sigma_exponents(&self) -> &[u64] {
        &self.sigma_exponents
    }

    /// s^{k−1}, the bound on δ+1.
    pub fn delta_bound(&self) -> u64 {
        (self.s as u64).pow(self.k() as u32 - 1)
    }
}

/// Checked N and q for given k and s.
pub fn structure_constants(k: usize, s: u32) -> Result<(u64, Vec<u64>)> {
    let mut q = Vec::with_capacity(k);
    let mut power = 1u64;
    let mut sum = 0u64;
    for j in 0..k {
        if j > 0 {
            power = power.checked_mul(s as u64).ok_or(Error::Overflow("s^j"))?;
        }
        sum = sum.checked_add(power).ok_or(Error::Overflow("q_i"))?;
        q.push(sum);
    }
    Ok((sum, q))
}

/// Builds the structure for a unit-coefficient homogeneous derivation and a
/// partition valid for it.
pub fn build_structure(d: &MonomialDerivation, partition: &CyclotomicPartition) -> Result<CyclotomicStructure> {
    if !d.has_unit_coefficients() {
        return Err(Error::InvalidInput(
            "cyclotomic structure requires every image coefficient to be 1".into(),
        ));
    }
    let s = d
        .image_degree()
        .ok_or_else(|| Error::InvalidInput("images do not share a total degree".into()))?;
    if s == 0 {
        return Err(Error::InvalidInput("images of degree 0 (s = 0) are not supported".into()));
    }
    partition.validate(d)?;
    build_structure_with_s(d.context(), partition, s)
}

/// Builds the structure from the partition and s alone, without checking
/// them against any derivation. Useful for testing that a wrong structure
/// is rejected by `check_conjugation`.
pub fn build_structure_with_s(
    ctx: &VariableContext,
    partition: &CyclotomicPartition,
    s: u32,
) -> Result<CyclotomicStructure> {
    if partition.classes().len() != ctx.len() {
        return Err(Error::Dimension(format!(
            "partition covers {} variables, context has {}",
            partition.classes().len(),
            ctx.len()
        )));
    }
    if s == 0 {
        return Err(Error::InvalidInput("s must be positive".into()));
    }
    let k = partition.k();
    let (n, q) = structure_constants(k, s)?;
    if n > MAX_ORDER {
        return Err(Error::Unsupported(format!("N = {n} exceeds {MAX_ORDER}")));
    }
    debug_assert_eq!(q[k - 1], n);
    let field = CyclotomicField::new(n)?;
    // Class c = k − i gets q_i.
    let sigma_exponents: Vec<u64> = partition
        .classes()
        .iter()
        .map(|&c| q[k - c] % n)
        .collect();
    let exps: Vec<i64> = sigma_exponents.iter().map(|&e| e as i64).collect();
    let sigma = DiagonalAutomorphism::roots_of_unity(ctx, &field, &exps)?;
    Ok(CyclotomicStructure {
        partition: partition.clone(),
        s,
        n,
        q,
        field,
        sigma,
        sigma_exponents,
    })
}

impl CyclotomicStructure {
    /// σ, after checking it acts on the variables of `d`.
    fn sigma_for(&self, d: &MonomialDerivation) -> Result<&DiagonalAutomorphism> {
        if d.context() != self.sigma.context() {
            return Err(Error::ContextMismatch);
        }
        Ok(&self.sigma)
    }

    /// σ^N is the identity on every variable.
    pub fn sigma_has_order_n(&self) -> bool {
        self.sigma.pow(self.n).is_identity()
    }
}

#[derive(Clone, Debug)]
pub struct ConjugationRow {
    pub var: usize,
    /// σ⁻¹(d(σ(v))).
    pub lhs: CyclotomicPoly,
    /// ζ·d(v).
    pub rhs: CyclotomicPoly,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct ConjugationCheck {
    pub holds: bool,
    pub rows: Vec<ConjugationRow>,
    pub first_failure: Option<usize>,
}

/// Checks σ⁻¹dσ = ζd on every variable. Both sides are derivations (σ is
/// an automorphism and ζ a scalar), so agreement on the variables implies
/// agreement everywhere.
pub fn check_conjugation(d: &MonomialDerivation, structure: &CyclotomicStructure) -> Result<ConjugationCheck> {
    let sigma = structure.sigma_for(d)?;
    let inverse = sigma.inverse();
    let field = structure.field();
    let zeta = field.zeta_pow(1);
    let rows: Vec<ConjugationRow> = (0..d.arity())
        .into_par_iter()
        .map(|v| -> Result<ConjugationRow> {
            let x = QPoly::var(d.context(), v).to_cyclotomic(field);
            let lhs = inverse.apply(&d.apply(&sigma.apply(&x)?)?)?;
            let rhs = d.apply(&x)?.scale(&zeta);
            let equal = lhs == rhs;
            Ok(ConjugationRow { var: v, lhs, rhs, equal })
        })
        .collect::<Result<_>>()?;
    let first_failure = rows.iter().find(|r| !r.equal).map(|r| r.var);
    Ok(ConjugationCheck {
        holds: first_failure.is_none(),
        rows,
        first_failure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta {
    /// Block degree sums p_1..p_k of β.
    pub p: Vec<u32>,
    /// δ = Σ_{l=2}^{k} p_l q_{k−l}.
    pub delta: u64,
}

pub fn delta_of(beta: &Monomial, structure: &CyclotomicStructure) -> Result<Delta> {
    let classes = structure.partition.classes();
    if beta.arity() != classes.len() {
        return Err(Error::Dimension(format!(
            "monomial has {} exponents, structure {} variables",
            beta.arity(),
            classes.len()
        )));
    }
    if beta.total_degree() != structure.s - 1 {
        return Err(Error::InvalidInput(format!(
            "cofactor monomial has degree {}, expected s − 1 = {}",
            beta.total_degree(),
            structure.s - 1
        )));
    }
    let k = structure.k();
    let mut p = vec![0u32; k];
    for (v, &e) in beta.exponents().iter().enumerate() {
        p[classes[v] - 1] += e;
    }
    let mut delta = 0u64;
    for l in 2..=k {
        let term = (p[l - 1] as u64)
            .checked_mul(structure.q[k - l])
            .ok_or(Error::Overflow("delta"))?;
        delta = delta.checked_add(term).ok_or(Error::Overflow("delta"))?;
    }
    Ok(Delta { p, delta })
}

#[derive(Clone, Debug)]
pub struct LambdaRow {
    pub beta: Monomial,
    pub p: Vec<u32>,
    pub delta: u64,
    /// 0 < δ+1 ≤ s^{k−1} < N.
    pub bound_holds: bool,
    /// Σ_{m<N} ζ^{m(δ+1)} = 0.
    pub geometric_sum_zero: bool,
    /// σ(X^β) = ζ^δ X^β, computed from the scales of σ.
    pub scaling_matches: bool,
    /// The block S_1 contributes ζ^{p_1 q_{k−1}} = ζ^{p_1 N} = 1.
    pub first_block_trivial: bool,
    /// Σ_{m<N} ζ^m · (scale of X^β under σ^m) = 0, summed literally.
    pub direct_sum_zero: bool,
}

impl LambdaRow {
    pub fn holds(&self) -> bool {
        self.bound_holds
            && self.geometric_sum_zero
            && self.scaling_matches
            && self.first_block_trivial
            && self.direct_sum_zero
    }
}

#[derive(Clone, Debug)]
pub struct LambdaCertificate {
    pub holds: bool,
    pub rows: Vec<LambdaRow>,
    pub first_failure: Option<Monomial>,
}

/// Checks, for every monomial β of degree s − 1, that the coefficient of
/// X^β in Λ = Σ_m ζ^m σ^m(λ) vanishes for any cofactor λ.
pub fn lambda_vanishing_certificate(structure: &CyclotomicStructure) -> Result<LambdaCertificate> {
    let arity = structure.partition.classes().len();
    let basis = monomial_basis(arity, structure.s - 1);
    let n = structure.n;
    let field = structure.field();
    let rows: Vec<LambdaRow> = basis
        .into_par_iter()
        .map(|beta| -> Result<LambdaRow> {
            let Delta { p, delta } = delta_of(&beta, structure)?;
            let e = delta + 1;
            let bound_holds = 0 < e && e <= structure.delta_bound() && structure.delta_bound() < n;
            let geometric_sum_zero = field.geometric_sum(e as i64).is_zero();
            let factor = structure.sigma.monomial_factor(&beta);
            let scaling_matches = factor == field.zeta_pow(delta as i64);
            let first = (p[0] as u64)
                .checked_mul(structure.q[structure.k() - 1])
                .ok_or(Error::Overflow("p_1 q_{k-1}"))?;
            let first_block_trivial = field.zeta_pow((first % n) as i64) == field.one();
            let zeta = field.zeta_pow(1);
            let mut sum = field.zero();
            let mut zeta_m = field.one();
            let mut factor_m = field.one();
            for _ in 0..n {
                sum = sum.add(&zeta_m.mul(&factor_m));
                zeta_m = zeta_m.mul(&zeta);
                factor_m = factor_m.mul(&factor);
            }
            Ok(LambdaRow {
                beta,
                p,
                delta,
                bound_holds,
                geometric_sum_zero,
                scaling_matches,
                first_block_trivial,
                direct_sum_zero: sum.is_zero(),
            })
        })
        .collect::<Result<_>>()?;
    let first_failure = rows.iter().find(|r| !r.holds()).map(|r| r.beta.clone());
    Ok(LambdaCertificate {
        holds: first_failure.is_none(),
        rows,
        first_failure,
    })
}

/// Λ = Σ_{m<N} ζ^m σ^m(λ), summed literally.
pub fn lambda_sum(d: &MonomialDerivation, structure: &CyclotomicStructure, cofactor: &QPoly) -> Result<CyclotomicPoly> {
    let sigma = structure.sigma_for(d)?;
    let field = structure.field();
    let zeta = field.zeta_pow(1);
    let mut current = cofactor.to_cyclotomic(field);
    let mut zeta_m = field.one();
    let mut total = CyclotomicPoly::zero(d.context());
    for _ in 0..structure.n {
        total = total.add(&current.scale(&zeta_m))?;
        current = sigma.apply(&current)?;
        zeta_m = zeta_m.mul(&zeta);
    }
    Ok(total)
}

/// The orbit product of a Darboux polynomial: a non-constant rational
/// constant of d.
#[derive(Clone, Debug)]
pub struct OrbitProduct {
    pub f: QPoly,
    pub cofactor: QPoly,
    /// F = ∏_{m<N} σ^m(f).
    pub product: CyclotomicPoly,
    /// F, when all its coefficients are rational.
    pub rational: Option<QPoly>,
}

/// Computes F = ∏_{m<N} σ^m(f) and asserts d(F) = 0 and F non-constant.
///
/// # Panics
/// If d(F) ≠ 0 or F is constant despite verified inputs; that would mean
/// the arithmetic itself is broken.
pub fn orbit_product(
    d: &MonomialDerivation,
    structure: &CyclotomicStructure,
    pair: &DarbouxPair,
) -> Result<OrbitProduct> {
    if pair.f.is_constant() {
        return Err(Error::InvalidInput("f must be non-constant".into()));
    }
    if !verify_darboux(d, &pair.f, &pair.cofactor)? {
        return Err(Error::Verification(format!(
            "d(f) != λ·f for f = {}, λ = {}",
            pair.f, pair.cofactor
        )));
    }
    let conj = check_conjugation(d, structure)?;
    if let Some(v) = conj.first_failure {
        return Err(Error::Verification(format!(
            "σ⁻¹dσ != ζd on {}",
            d.context().name(v)
        )));
    }
    let sigma = structure.sigma_for(d)?;
    let field = structure.field();
    let mut image = pair.f.to_cyclotomic(field);
    let mut product = CyclotomicPoly::constant(d.context(), field.one());
    for _ in 0..structure.n {
        product = product.mul(&image)?;
        image = sigma.apply(&image)?;
    }
    assert!(
        d.apply(&product)?.is_zero(),
        "orbit product is not a constant of d"
    );
    assert!(!product.is_constant(), "orbit product is constant");
    Ok(OrbitProduct {
        f: pair.f.clone(),
        cofactor: pair.cofactor.clone(),
        rational: product.to_rational(),
        product,
    })
}

#[derive(Clone, Debug)]
pub struct ComponentRow {
    pub degree: u32,
    pub component: QPoly,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub holds: bool,
    /// λ is zero or homogeneous of degree s − 1.
    pub cofactor_homogeneous: bool,
    pub components: Vec<ComponentRow>,
    pub first_failure: Option<u32>,
}

/// For a homogeneous d and a verified pair (f, λ): λ is zero or homogeneous
/// of degree s − 1, and each homogeneous component of f is Darboux with
/// cofactor λ.
pub fn check_lemma_components(d: &MonomialDerivation, f: &QPoly, cofactor: &QPoly) -> Result<LemmaCheck> {
    let s = d
        .image_degree()
        .ok_or_else(|| Error::InvalidInput("derivation is not homogeneous".into()))?;
    if !verify_darboux(d, f, cofactor)? {
        return Err(Error::Verification(format!(
            "d(f) != λ·f for f = {f}, λ = {cofactor}"
        )));
    }
    let cofactor_homogeneous = cofactor.is_zero()
        || (s >= 1 && cofactor.is_homogeneous()? == Some(s - 1));
    let mut components = Vec::new();
    for (degree, component) in f.homogeneous_components() {
        let holds = d.apply(&component)? == cofactor.mul(&component)?;
        components.push(ComponentRow {
            degree,
            component,
            holds,
        });
    }
    let first_failure = components.iter().find(|c| !c.holds).map(|c| c.degree);
    Ok(LemmaCheck {
        holds: cofactor_homogeneous && first_failure.is_none(),
        cofactor_homogeneous,
        components,
        first_failure,
    })
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub derivation: MonomialDerivation,
    pub structure: CyclotomicStructure,
    pub conjugation: ConjugationCheck,
    pub lambda: LambdaCertificate,
    pub search: SearchReport,
    pub witness: Option<OrbitProduct>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A Darboux polynomial was found and its orbit product is a
    /// non-constant rational constant.
    RationalConstant,
    /// No Darboux polynomial of degree ≤ D over Q.
    NoneUpTo(u32),
    /// Some degrees could not be decided; nothing is claimed for them.
    Undecided(Vec<u32>),
    /// The conjugation or Λ certificate failed.
    StructureFailed,
}

impl Certificate {
    pub fn verdict(&self) -> Verdict {
        if !self.conjugation.holds || !self.lambda.holds {
            return Verdict::StructureFailed;
        }
        if self.witness.is_some() {
            return Verdict::RationalConstant;
        }
        let undecided: Vec<u32> = self
            .search
            .degrees
            .iter()
            .filter(|r| r.status == crate::darboux::DegreeStatus::Undecided)
            .map(|r| r.degree)
            .collect();
        if undecided.is_empty() {
            Verdict::NoneUpTo(self.search.max_degree)
        } else {
            Verdict::Undecided(undecided)
        }
    }

    pub fn summary(&self) -> String {
        match self.verdict() {
            Verdict::RationalConstant => {
                "Darboux polynomial found; its orbit product is a non-trivial rational constant".into()
            }
            Verdict::NoneUpTo(d) => format!("no Darboux polynomial of degree <= {d} over Q"),
            Verdict::Undecided(ds) => format!(
                "undecided at degree(s) {}",
                ds.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
            ),
            Verdict::StructureFailed => "cyclotomic structure certificate failed".into(),
        }
    }
}

/// Detects (or takes the requested k for) the block structure, certifies
/// the conjugation identity and Λ-vanishing, searches up to `max_degree`
/// and attaches an orbit product when a Darboux polynomial exists.
pub fn theorem_pipeline(
    d: &MonomialDerivation,
    max_degree: u32,
    k: Option<usize>,
    options: &SearchOptions,
) -> Result<Certificate> {
    let partition = match k {
        Some(k) => partition_for_k(d, k).ok_or_else(|| {
            Error::InvalidInput(format!("no generalized cyclotomic partition with k = {k}"))
        })?,
        None => detect_cyclotomic_partition(d)
            .ok_or_else(|| Error::InvalidInput("no generalized cyclotomic partition".into()))?,
    };
    let structure = build_structure(d, &partition)?;
    let conjugation = check_conjugation(d, &structure)?;
    let lambda = lambda_vanishing_certificate(&structure)?;
    let search = search_up_to(d, max_degree, options)?;
    let witness = match search.first_pair() {
        Some(pair) if conjugation.holds => Some(orbit_product(d, &structure, &pair)?),
        _ => None,
    };
    Ok(Certificate {
        derivation: d.clone(),
        structure,
        conjugation,
        lambda,
        search,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::darboux::DegreeStatus;
    use crate::deriv::{four_variable_example, gen_jouanolou};
    use crate::poly::{parse_polynomial, VariableContext};

    fn jouanolou_structure(n: usize, s: u32) -> (MonomialDerivation, CyclotomicStructure) {
        let d = gen_jouanolou(n, s).unwrap();
        let p = detect_cyclotomic_partition(&d).unwrap();
        let st = build_structure(&d, &p).unwrap();
        (d, st)
    }

    fn toy() -> MonomialDerivation {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        MonomialDerivation::from_exponents(&ctx, vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn jouanolou_3_2_constants() {
        let (_, st) = jouanolou_structure(3, 2);
        assert_eq!(st.k(), 3);
        assert_eq!(st.order(), 7);
        assert_eq!(st.q(), &[1, 3, 7]);
        // x1 fixed, x2 -> ζ^3, x3 -> ζ.
        assert_eq!(st.sigma_exponents(), &[0, 3, 1]);
        assert!(st.sigma_has_order_n());
    }

    #[test]
    fn four_variable_constants() {
        let d = four_variable_example();
        let p = detect_cyclotomic_partition(&d).unwrap();
        let st = build_structure(&d, &p).unwrap();
        assert_eq!((st.k(), st.order()), (2, 3));
        assert_eq!(st.q(), &[1, 3]);
        assert_eq!(st.sigma_exponents(), &[0, 0, 1, 1]);
    }

    #[test]
    fn toy_constants() {
        let d = toy();
        let p = detect_cyclotomic_partition(&d).unwrap();
        let st = build_structure(&d, &p).unwrap();
        assert_eq!((st.order(), st.q().to_vec()), (2, vec![1, 2]));
        assert_eq!(st.sigma_exponents(), &[0, 1]);
    }

    #[test]
    fn non_unit_coefficients_rejected() {
        let d = crate::dsl::parse_spec("vars x,y; d(x)=2*y^2; d(y)=x^2;").unwrap();
        let p = detect_cyclotomic_partition(&d).unwrap();
        assert!(build_structure(&d, &p).is_err());
    }

    #[test]
    fn conjugation_holds_and_fails_when_corrupted() {
        let (d, st) = jouanolou_structure(3, 2);
        let c = check_conjugation(&d, &st).unwrap();
        assert!(c.holds);
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let d = MonomialDerivation::from_exponents(&ctx, vec![vec![0, 2], vec![2, 0]]).unwrap();
        let p = detect_cyclotomic_partition(&d).unwrap();
        assert!(check_conjugation(&d, &build_structure(&d, &p).unwrap()).unwrap().holds);
        let wrong = build_structure_with_s(d.context(), &p, 1).unwrap();
        assert_eq!(wrong.order(), 2);
        let c = check_conjugation(&d, &wrong).unwrap();
        assert!(!c.holds);
        assert_eq!(c.first_failure, Some(0));
    }

    #[test]
    fn delta_examples() {
        let (_, st) = jouanolou_structure(3, 2);
        let deltas: Vec<u64> = (0..3)
            .map(|v| delta_of(&Monomial::var(3, v), &st).unwrap().delta)
            .collect();
        assert_eq!(deltas, vec![0, 3, 1]);
        assert!(delta_of(&Monomial::one(3), &st).is_err());

        let d = four_variable_example();
        let st = build_structure(&d, &detect_cyclotomic_partition(&d).unwrap()).unwrap();
        assert_eq!(delta_of(&Monomial::var(4, 0), &st).unwrap().delta, 0);
        assert_eq!(delta_of(&Monomial::var(4, 2), &st).unwrap().delta, 1);

        let d = toy();
        let st = build_structure(&d, &detect_cyclotomic_partition(&d).unwrap()).unwrap();
        assert_eq!(delta_of(&Monomial::one(2), &st).unwrap().delta, 0);
    }

    #[test]
    fn lambda_tables() {
        let (_, st) = jouanolou_structure(3, 2);
        let cert = lambda_vanishing_certificate(&st).unwrap();
        assert!(cert.holds);
        let mut e: Vec<u64> = cert.rows.iter().map(|r| r.delta + 1).collect();
        e.sort();
        assert_eq!(e, vec![1, 2, 4]);

        let d = toy();
        let st = build_structure(&d, &detect_cyclotomic_partition(&d).unwrap()).unwrap();
        let cert = lambda_vanishing_certificate(&st).unwrap();
        assert!(cert.holds);
        assert_eq!(cert.rows.len(), 1);
    }

    #[test]
    fn lambda_sum_vanishes() {
        let (d, st) = jouanolou_structure(3, 2);
        let lam = parse_polynomial(d.context(), "3*x1 - 1/2*x2 + 7*x3").unwrap();
        assert!(lambda_sum(&d, &st, &lam).unwrap().is_zero());
    }

    #[test]
    fn orbit_products() {
        let d = gen_jouanolou(2, 2).unwrap();
        let st = build_structure(&d, &partition_for_k(&d, 2).unwrap()).unwrap();
        let ctx = d.context();
        let pair = DarbouxPair {
            f: parse_polynomial(ctx, "x1 - x2").unwrap(),
            cofactor: parse_polynomial(ctx, "-x1 - x2").unwrap(),
        };
        let op = orbit_product(&d, &st, &pair).unwrap();
        assert_eq!(op.rational.unwrap(), parse_polynomial(ctx, "x1^3 - x2^3").unwrap());

        let d = toy();
        let st = build_structure(&d, &detect_cyclotomic_partition(&d).unwrap()).unwrap();
        let ctx = d.context();
        let pair = DarbouxPair {
            f: parse_polynomial(ctx, "x + y").unwrap(),
            cofactor: QPoly::one(ctx),
        };
        let op = orbit_product(&d, &st, &pair).unwrap();
        assert_eq!(op.rational.unwrap(), parse_polynomial(ctx, "x^2 - y^2").unwrap());

        let bad = DarbouxPair {
            f: QPoly::one(ctx),
            cofactor: QPoly::zero(ctx),
        };
        assert!(orbit_product(&d, &st, &bad).is_err());
    }

    #[test]
    fn lemma_components() {
        let d = gen_jouanolou(2, 2).unwrap();
        let ctx = d.context();
        let f = parse_polynomial(ctx, "x1^3 - x2^3").unwrap();
        let c = check_lemma_components(&d, &f, &QPoly::zero(ctx)).unwrap();
        assert!(c.holds);
        assert_eq!(c.components.len(), 1);

        let d = toy();
        let ctx = d.context();
        let f = parse_polynomial(ctx, "(x + y) + (x + y)^2").unwrap();
        assert!(check_lemma_components(&d, &f, &QPoly::one(ctx)).is_err());
    }

    #[test]
    fn pipeline() {
        let d = gen_jouanolou(2, 2).unwrap();
        let cert = theorem_pipeline(&d, 1, None, &SearchOptions::default()).unwrap();
        assert_eq!(cert.verdict(), Verdict::RationalConstant);
        let ctx = d.context();
        assert_eq!(
            cert.witness.unwrap().rational.unwrap(),
            parse_polynomial(ctx, "x1^3 - x2^3").unwrap()
        );

        let d = gen_jouanolou(3, 2).unwrap();
        let cert = theorem_pipeline(&d, 2, None, &SearchOptions::default()).unwrap();
        assert_eq!(cert.verdict(), Verdict::NoneUpTo(2));
        assert!(cert.search.degrees.iter().all(|r| r.status == DegreeStatus::None));
    }
}
