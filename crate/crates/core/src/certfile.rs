//! Certificate files (JSON, schema `cyclo-darboux/1`) and an independent
//! re-checker.
//!
//! Rationals are strings `"n"` or `"n/d"`; elements of Q(ζ_N) are vectors of
//! rationals in the power basis 1, ζ, ..., ζ^{φ(N)−1} together with N.
//! Polynomials are lists of exponent vectors with coefficients.
//!
//! The re-checker rebuilds everything it needs from the file with plain
//! field and polynomial arithmetic; it never calls the search or the
//! certify module. Nonexistence claims (status NONE) cannot be re-derived
//! without repeating the search, so for those it only checks consistency.

use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, CyclotomicField, CyclotomicNumber, Rational};
use crate::certify::{Certificate, Verdict};
use crate::darboux::{DegreeResult, DegreeStatus, SearchReport};
use crate::deriv::{Image, MonomialDerivation};
use crate::dsl::print_spec;
use crate::error::{Error, Result};
use crate::poly::{CyclotomicPoly, DiagonalAutomorphism, Monomial, QPoly, VariableContext};

pub const SCHEMA: &str = "cyclo-darboux/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTerm {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycNumber {
    #[serde(rename = "N")]
    pub order: u64,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycTerm {
    pub exponents: Vec<u32>,
    pub coeff: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycPolyFile {
    #[serde(rename = "N")]
    pub order: u64,
    pub terms: Vec<CycTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageFile {
    pub var: String,
    pub coeff: String,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationFile {
    pub vars: Vec<String>,
    pub images: Vec<ImageFile>,
    pub spec: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub k: usize,
    pub s: u32,
    #[serde(rename = "N")]
    pub order: u64,
    pub q: Vec<u64>,
    /// 1-based block of each variable.
    pub classes: Vec<usize>,
    /// σ(x_v) = ζ^{e_v} x_v.
    pub sigma_exponents: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationRowFile {
    pub var: String,
    pub lhs: CycPolyFile,
    pub rhs: CycPolyFile,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationFile {
    pub holds: bool,
    pub justification: String,
    pub rows: Vec<ConjugationRowFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaRowFile {
    pub beta: Vec<u32>,
    pub p: Vec<u32>,
    pub delta: u64,
    pub bound_holds: bool,
    /// Σ_{m<N} ζ^{m(δ+1)}.
    pub geometric_sum: CycNumber,
    /// Scale of X^β under σ.
    pub sigma_factor: CycNumber,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaFile {
    pub holds: bool,
    /// s^{k−1}.
    pub delta_bound: u64,
    pub rows: Vec<LambdaRowFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub cofactor: Vec<QTerm>,
    pub basis: Vec<Vec<QTerm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeFile {
    pub degree: u32,
    pub status: String,
    pub branches: usize,
    pub solutions: Vec<SolutionFile>,
    pub undecided: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchFile {
    pub max_degree: u32,
    pub degrees: Vec<DegreeFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub f: Vec<QTerm>,
    pub cofactor: Vec<QTerm>,
    #[serde(rename = "F")]
    pub product: CycPolyFile,
    #[serde(rename = "F_rational")]
    pub rational: Option<Vec<QTerm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema: String,
    pub derivation: DerivationFile,
    pub structure: StructureFile,
    pub conjugation: ConjugationFile,
    pub lambda: LambdaFile,
    pub search: SearchFile,
    pub witness: Option<WitnessFile>,
    pub verdict: String,
}

fn qpoly_file(p: &QPoly) -> Vec<QTerm> {
    p.terms()
        .rev()
        .map(|(m, c)| QTerm {
            exponents: m.exponents().to_vec(),
            coeff: c.to_string(),
        })
        .collect()
}

fn cyc_number_file(x: &CyclotomicNumber) -> CycNumber {
    CycNumber {
        order: x.field().order(),
        coeffs: x.coeffs().iter().map(Rational::to_string).collect(),
    }
}

fn cyc_poly_file(p: &CyclotomicPoly, order: u64) -> CycPolyFile {
    CycPolyFile {
        order,
        terms: p
            .terms()
            .rev()
            .map(|(m, c)| CycTerm {
                exponents: m.exponents().to_vec(),
                coeff: c.coeffs().iter().map(Rational::to_string).collect(),
            })
            .collect(),
    }
}

pub fn search_file(report: &SearchReport) -> SearchFile {
    SearchFile {
        max_degree: report.max_degree,
        degrees: report.degrees.iter().map(degree_file).collect(),
    }
}

pub fn search_json(report: &SearchReport) -> String {
    serde_json::to_string_pretty(&search_file(report)).expect("report serializes")
}

fn degree_file(r: &DegreeResult) -> DegreeFile {
    DegreeFile {
        degree: r.degree,
        status: r.status.as_str().into(),
        branches: r.branches,
        solutions: r
            .solutions
            .iter()
            .map(|s| SolutionFile {
                cofactor: qpoly_file(&s.cofactor),
                basis: s.basis.iter().map(qpoly_file).collect(),
            })
            .collect(),
        undecided: r.undecided.clone(),
    }
}

pub fn verdict_string(v: &Verdict) -> String {
    match v {
        Verdict::RationalConstant => "RATIONAL_CONSTANT".into(),
        Verdict::NoneUpTo(d) => format!("NONE_UP_TO_{d}"),
        Verdict::Undecided(_) => "UNDECIDED".into(),
        Verdict::StructureFailed => "STRUCTURE_FAILED".into(),
    }
}

pub fn certificate_file(cert: &Certificate) -> CertificateFile {
    let d = &cert.derivation;
    let ctx = d.context();
    let st = &cert.structure;
    let n = st.order();
    CertificateFile {
        schema: SCHEMA.into(),
        derivation: DerivationFile {
            vars: ctx.names().to_vec(),
            images: d
                .images()
                .iter()
                .enumerate()
                .map(|(i, img)| ImageFile {
                    var: ctx.name(i).into(),
                    coeff: img.coeff.to_string(),
                    exponents: img.exponents.exponents().to_vec(),
                })
                .collect(),
            spec: print_spec(d),
        },
        structure: StructureFile {
            k: st.k(),
            s: st.s(),
            order: n,
            q: st.q().to_vec(),
            classes: st.partition().classes().to_vec(),
            sigma_exponents: st.sigma_exponents().to_vec(),
        },
        conjugation: ConjugationFile {
            holds: cert.conjugation.holds,
            justification: "sigma^-1 d sigma and zeta*d are both derivations, so equality on every variable implies equality".into(),
            rows: cert
                .conjugation
                .rows
                .iter()
                .map(|r| ConjugationRowFile {
                    var: ctx.name(r.var).into(),
                    lhs: cyc_poly_file(&r.lhs, n),
                    rhs: cyc_poly_file(&r.rhs, n),
                    equal: r.equal,
                })
                .collect(),
        },
        lambda: LambdaFile {
            holds: cert.lambda.holds,
            delta_bound: st.delta_bound(),
            rows: cert
                .lambda
                .rows
                .iter()
                .map(|r| LambdaRowFile {
                    beta: r.beta.exponents().to_vec(),
                    p: r.p.clone(),
                    delta: r.delta,
                    bound_holds: r.bound_holds,
                    geometric_sum: cyc_number_file(&st.field().geometric_sum(r.delta as i64 + 1)),
                    sigma_factor: cyc_number_file(&st.sigma().monomial_factor(&r.beta)),
                    holds: r.holds(),
                })
                .collect(),
        },
        search: search_file(&cert.search),
        witness: cert.witness.as_ref().map(|w| WitnessFile {
            f: qpoly_file(&w.f),
            cofactor: qpoly_file(&w.cofactor),
            product: cyc_poly_file(&w.product, n),
            rational: w.rational.as_ref().map(qpoly_file),
        }),
        verdict: verdict_string(&cert.verdict()),
    }
}

pub fn to_json(cert: &Certificate) -> String {
    serde_json::to_string_pretty(&certificate_file(cert)).expect("certificate serializes")
}

/// Outcome of re-checking a certificate file.
#[derive(Clone, Debug, Default)]
pub struct RecheckReport {
    pub passed: Vec<String>,
    pub failed: Vec<String>,
}

impl RecheckReport {
    pub fn ok(&self) -> bool {
        self.failed.is_empty()
    }

    fn check(&mut self, name: impl Into<String>, cond: bool) {
        if cond {
            self.passed.push(name.into());
        } else {
            self.failed.push(name.into());
        }
    }
}

/// Re-verifies every claim in a certificate JSON document.
pub fn recheck_json(text: &str) -> Result<RecheckReport> {
    let file: CertificateFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("certificate JSON: {e}")))?;
    recheck(&file)
}

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::InvalidInput(format!("bad rational '{s}'")))
}

fn read_qpoly(ctx: &VariableContext, terms: &[QTerm]) -> Result<QPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.exponents.len() != ctx.len() {
            return Err(Error::Dimension("exponent vector length".into()));
        }
        out.push((Monomial::new(t.exponents.clone()), rational(&t.coeff)?));
    }
    let p = QPoly::from_terms(ctx, out);
    // A canonical file has no zero or repeated terms.
    if p.len() != terms.len() {
        return Err(Error::InvalidInput("polynomial has zero or repeated terms".into()));
    }
    Ok(p)
}

fn read_cyc_number(field: &CyclotomicField, x: &CycNumber) -> Result<CyclotomicNumber> {
    if x.order != field.order() || x.coeffs.len() != field.degree() {
        return Err(Error::InvalidInput("cyclotomic number has wrong N or length".into()));
    }
    let coeffs = x.coeffs.iter().map(|c| rational(c)).collect::<Result<Vec<_>>>()?;
    Ok(field.from_coeffs(coeffs))
}

fn read_cyc_poly(ctx: &VariableContext, field: &CyclotomicField, p: &CycPolyFile) -> Result<CyclotomicPoly> {
    if p.order != field.order() {
        return Err(Error::InvalidInput("polynomial over the wrong field".into()));
    }
    let mut out = Vec::with_capacity(p.terms.len());
    for t in &p.terms {
        if t.exponents.len() != ctx.len() || t.coeff.len() != field.degree() {
            return Err(Error::Dimension("cyclotomic term shape".into()));
        }
        let c = t.coeff.iter().map(|c| rational(c)).collect::<Result<Vec<_>>>()?;
        out.push((Monomial::new(t.exponents.clone()), field.from_coeffs(c)));
    }
    let q = CyclotomicPoly::from_terms(ctx, out);
    if q.len() != p.terms.len() {
        return Err(Error::InvalidInput("polynomial has zero or repeated terms".into()));
    }
    Ok(q)
}

fn read_derivation(f: &DerivationFile) -> Result<MonomialDerivation> {
    let ctx = VariableContext::new(f.vars.clone())?;
    if f.images.len() != ctx.len() {
        return Err(Error::Dimension("one image per variable".into()));
    }
    let mut images = Vec::with_capacity(ctx.len());
    for (i, img) in f.images.iter().enumerate() {
        if img.var != ctx.name(i) || img.exponents.len() != ctx.len() {
            return Err(Error::InvalidInput(format!("image {} does not match variable list", i + 1)));
        }
        images.push(Image {
            coeff: rational(&img.coeff)?,
            exponents: Monomial::new(img.exponents.clone()),
        });
    }
    MonomialDerivation::new(&ctx, images)
}

/// Leading coefficient 1 and zeros at the other elements' leading
/// monomials: the canonical basis of the solution space.
fn is_reduced_basis(basis: &[QPoly]) -> bool {
    let leads: Vec<&Monomial> = match basis.iter().map(|b| b.leading_term().map(|(m, _)| m)).collect() {
        Some(l) => l,
        None => return false,
    };
    basis.iter().enumerate().all(|(i, b)| {
        let lc_one = b.leading_term().is_some_and(|(_, c)| *c == Rational::from_integer(1.into()));
        let clean = leads
            .iter()
            .enumerate()
            .all(|(j, m)| i == j || b.coefficient(m).is_none());
        lc_one && clean
    })
}

pub fn recheck(file: &CertificateFile) -> Result<RecheckReport> {
    let mut rep = RecheckReport::default();
    rep.check("schema", file.schema == SCHEMA);

    let d = read_derivation(&file.derivation)?;
    let ctx = d.context().clone();
    rep.check("spec echo matches images", file.derivation.spec == print_spec(&d));
    rep.check(
        "image coefficients are 1",
        d.images().iter().all(|img| img.coeff == Rational::from_integer(1.into())),
    );
    let s = d.image_degree();
    rep.check("images share total degree s", s == Some(file.structure.s));

    // Structure constants.
    let st = &file.structure;
    let mut q = Vec::new();
    let mut acc: u64 = 0;
    let mut power: u64 = 1;
    for j in 0..st.k {
        if j > 0 {
            power = power.checked_mul(st.s as u64).ok_or(Error::Overflow("s^j"))?;
        }
        acc = acc.checked_add(power).ok_or(Error::Overflow("q"))?;
        q.push(acc);
    }
    rep.check("q_i = 1 + s + ... + s^i", q == st.q);
    rep.check("N = q_{k-1}", q.last() == Some(&st.order));
    rep.check("k >= 2", st.k >= 2);
    let classes_ok = st.classes.len() == ctx.len()
        && st.classes.iter().all(|&c| (1..=st.k).contains(&c))
        && (1..=st.k).all(|c| st.classes.contains(&c));
    rep.check("classes form k nonempty blocks", classes_ok);
    if !classes_ok || st.k < 2 || st.s == 0 || q != st.q {
        return Ok(rep);
    }
    let blocks_ok = d.images().iter().enumerate().all(|(u, img)| {
        img.exponents
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .all(|(v, _)| st.classes[v] == st.classes[u] % st.k + 1)
    });
    rep.check("d(S_i) lies in K[S_{i+1}]", blocks_ok);
    let expected_sigma: Vec<u64> = st.classes.iter().map(|&c| q[st.k - c] % st.order).collect();
    rep.check("sigma exponents", expected_sigma == st.sigma_exponents);

    let field = CyclotomicField::new(st.order)?;
    let exps: Vec<i64> = expected_sigma.iter().map(|&e| e as i64).collect();
    let sigma = DiagonalAutomorphism::roots_of_unity(&ctx, &field, &exps)?;
    let zeta = field.zeta_pow(1);

    // Conjugation table, recomputed term by term.
    let conj = &file.conjugation;
    rep.check("conjugation has one row per variable", conj.rows.len() == ctx.len());
    let mut all_equal = conj.rows.len() == ctx.len();
    for (v, row) in conj.rows.iter().enumerate().take(ctx.len()) {
        let lhs = read_cyc_poly(&ctx, &field, &row.lhs)?;
        let rhs = read_cyc_poly(&ctx, &field, &row.rhs)?;
        let x = QPoly::var(&ctx, v).to_cyclotomic(&field);
        let want_lhs = sigma.inverse().apply(&d.apply(&sigma.apply(&x)?)?)?;
        let want_rhs = d.apply(&x)?.scale(&zeta);
        let name = ctx.name(v);
        rep.check(format!("conjugation lhs for {name}"), row.var == name && lhs == want_lhs);
        rep.check(format!("conjugation rhs for {name}"), rhs == want_rhs);
        rep.check(format!("conjugation flag for {name}"), row.equal == (lhs == rhs));
        all_equal &= lhs == rhs;
    }
    rep.check("conjugation verdict", conj.holds == all_equal);

    // Λ table.
    let lam = &file.lambda;
    let s = st.s;
    let bound = (s as u64).checked_pow(st.k as u32 - 1).ok_or(Error::Overflow("s^(k-1)"))?;
    rep.check("delta bound s^(k-1)", lam.delta_bound == bound);
    let mut seen: Vec<Vec<u32>> = Vec::new();
    let mut all_hold = true;
    for row in &lam.rows {
        let beta = Monomial::new(row.beta.clone());
        let label = beta.render(&ctx);
        let shape = row.beta.len() == ctx.len() && beta.total_degree() + 1 == s;
        rep.check(format!("beta {label} has degree s-1"), shape);
        if !shape {
            all_hold = false;
            continue;
        }
        let mut p = vec![0u32; st.k];
        for (v, &e) in row.beta.iter().enumerate() {
            p[st.classes[v] - 1] += e;
        }
        let delta: u64 = (2..=st.k).map(|l| p[l - 1] as u64 * q[st.k - l]).sum();
        rep.check(format!("p and delta for {label}"), p == row.p && delta == row.delta);
        let bound_holds = delta + 1 <= bound && bound < st.order;
        rep.check(format!("bound flag for {label}"), bound_holds == row.bound_holds);
        let mut gsum = field.zero();
        for m in 0..st.order {
            gsum = gsum.add(&field.zeta_pow(((m * (delta + 1)) % st.order) as i64));
        }
        let stored_gsum = read_cyc_number(&field, &row.geometric_sum)?;
        rep.check(format!("geometric sum for {label}"), stored_gsum == gsum);
        let factor = sigma.monomial_factor(&beta);
        let stored_factor = read_cyc_number(&field, &row.sigma_factor)?;
        rep.check(
            format!("sigma factor of {label} is zeta^delta"),
            stored_factor == factor && factor == field.zeta_pow(delta as i64),
        );
        let holds = bound_holds && gsum.is_zero() && factor == field.zeta_pow(delta as i64);
        rep.check(format!("row flag for {label}"), row.holds == holds);
        all_hold &= holds;
        seen.push(row.beta.clone());
    }
    let mut expected = crate::poly::monomial_basis(ctx.len(), s - 1)
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect::<Vec<_>>();
    expected.sort();
    seen.sort();
    rep.check("lambda table covers every degree s-1 monomial once", seen == expected);
    rep.check("lambda verdict", lam.holds == (all_hold && seen == expected));

    // Search report: every listed solution is re-verified.
    let search = &file.search;
    rep.check(
        "search degrees 1..=max",
        search.degrees.iter().map(|r| r.degree).eq(1..=search.max_degree),
    );
    let mut any_found = false;
    let mut any_undecided = false;
    for r in &search.degrees {
        let status_ok = match r.status.as_str() {
            "NONE" => r.solutions.is_empty() && r.undecided.is_empty(),
            "FOUND" => !r.solutions.is_empty(),
            "UNDECIDED" => r.solutions.is_empty() && !r.undecided.is_empty(),
            _ => false,
        };
        rep.check(format!("degree {} status consistent", r.degree), status_ok);
        any_found |= r.status == DegreeStatus::Found.as_str();
        any_undecided |= r.status == DegreeStatus::Undecided.as_str();
        for (i, sol) in r.solutions.iter().enumerate() {
            let cofactor = read_qpoly(&ctx, &sol.cofactor)?;
            let basis = sol
                .basis
                .iter()
                .map(|b| read_qpoly(&ctx, b))
                .collect::<Result<Vec<_>>>()?;
            let label = format!("degree {} solution {}", r.degree, i + 1);
            let cof_shape = cofactor.is_zero() || cofactor.is_homogeneous()? == Some(s - 1);
            rep.check(format!("{label}: cofactor homogeneous of degree s-1"), cof_shape);
            rep.check(format!("{label}: basis in reduced form"), !basis.is_empty() && is_reduced_basis(&basis));
            for (j, f) in basis.iter().enumerate() {
                let homogeneous = !f.is_zero() && f.is_homogeneous()? == Some(r.degree);
                let darboux = d.apply(f)? == cofactor.mul(f)?;
                rep.check(format!("{label}: element {} is Darboux of degree {}", j + 1, r.degree), homogeneous && darboux);
            }
        }
    }

    // Witness.
    match &file.witness {
        Some(w) => {
            let f = read_qpoly(&ctx, &w.f)?;
            let cofactor = read_qpoly(&ctx, &w.cofactor)?;
            rep.check("witness f is non-constant", !f.is_constant());
            rep.check("witness d(f) = lambda f", d.apply(&f)? == cofactor.mul(&f)?);
            let listed = search.degrees.iter().any(|r| {
                r.solutions.iter().any(|sol| {
                    read_qpoly(&ctx, &sol.cofactor).ok().as_ref() == Some(&cofactor)
                        && sol.basis.iter().any(|b| read_qpoly(&ctx, b).ok().as_ref() == Some(&f))
                })
            });
            rep.check("witness comes from the search report", listed);
            let stored = read_cyc_poly(&ctx, &field, &w.product)?;
            let mut image = f.to_cyclotomic(&field);
            let mut product = CyclotomicPoly::constant(&ctx, field.one());
            for _ in 0..st.order {
                product = product.mul(&image)?;
                image = sigma.apply(&image)?;
            }
            rep.check("F = prod sigma^m(f)", stored == product);
            rep.check("d(F) = 0", d.apply(&stored)?.is_zero());
            rep.check("F is non-constant", !stored.is_constant());
            let rational = match &w.rational {
                Some(r) => Some(read_qpoly(&ctx, r)?),
                None => None,
            };
            rep.check("F_rational matches F", rational == stored.to_rational());
        }
        None => rep.check("no witness only when nothing was found", !any_found),
    }

    let structure_ok = conj.holds && lam.holds;
    let verdict = if !structure_ok {
        "STRUCTURE_FAILED".to_string()
    } else if file.witness.is_some() {
        "RATIONAL_CONSTANT".to_string()
    } else if any_undecided {
        "UNDECIDED".to_string()
    } else {
        format!("NONE_UP_TO_{}", search.max_degree)
    };
    rep.check("verdict", file.verdict == verdict);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::theorem_pipeline;
    use crate::darboux::SearchOptions;
    use crate::deriv::gen_jouanolou;

    #[test]
    fn round_trip_and_recheck() {
        let d = gen_jouanolou(2, 2).unwrap();
        let cert = theorem_pipeline(&d, 2, None, &SearchOptions::default()).unwrap();
        let json = to_json(&cert);
        let back: CertificateFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, certificate_file(&cert));
        let rep = recheck_json(&json).unwrap();
        assert!(rep.ok(), "{:?}", rep.failed);
    }

    #[test]
    fn tampered_witness_fails() {
        let d = gen_jouanolou(2, 2).unwrap();
        let cert = theorem_pipeline(&d, 1, None, &SearchOptions::default()).unwrap();
        let mut file = certificate_file(&cert);
        let w = file.witness.as_mut().unwrap();
        w.f[0].coeff = "2".into();
        assert!(!recheck(&file).unwrap().ok());
    }
}
