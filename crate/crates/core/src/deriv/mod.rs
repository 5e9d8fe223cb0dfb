//! Monomial derivations d(x_i) = c_i · X^{α_i}.

mod partition;

pub use partition::{
    analyze_partitions, detect_cyclotomic_partition, partition_for_k, CyclotomicPartition,
    PartitionAnalysis,
};

use num_traits::{One, Zero};

use crate::arith::{rat, Coefficient, Rational};
use crate::error::{Error, Result};
use crate::linalg::{determinant, RationalMatrix};
use crate::poly::{Monomial, Polynomial, QPoly, VariableContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    pub coeff: Rational,
    pub exponents: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialDerivation {
    ctx: VariableContext,
    images: Vec<Image>,
}

/// A = [α_ij] − I together with w_d = det A.
#[derive(Clone, Debug)]
pub struct ExponentMatrix {
    pub matrix: RationalMatrix,
    pub w_d: Rational,
    /// False when some image coefficient is not 1; the matrix still uses
    /// exponents only.
    pub unit_coefficients: bool,
}

impl MonomialDerivation {
    pub fn new(ctx: &VariableContext, images: Vec<Image>) -> Result<Self> {
        if images.len() != ctx.len() {
            return Err(Error::Dimension(format!(
                "{} images for {} variables",
                images.len(),
                ctx.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.coeff.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "image of '{}' has zero coefficient",
                    ctx.name(i)
                )));
            }
            if img.exponents.arity() != ctx.len() {
                return Err(Error::Dimension(format!(
                    "image of '{}' has {} exponents",
                    ctx.name(i),
                    img.exponents.arity()
                )));
            }
        }
        Ok(MonomialDerivation {
            ctx: ctx.clone(),
            images,
        })
    }

    /// Unit-coefficient derivation from exponent rows.
    pub fn from_exponents(ctx: &VariableContext, rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(
            ctx,
            rows.into_iter()
                .map(|e| Image {
                    coeff: Rational::one(),
                    exponents: Monomial::new(e),
                })
                .collect(),
        )
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn arity(&self) -> usize {
        self.ctx.len()
    }

    pub fn images(&self) -> &[Image] {
        &self.images
    }

    pub fn image_poly(&self, i: usize) -> QPoly {
        let img = &self.images[i];
        QPoly::monomial(&self.ctx, img.exponents.clone(), img.coeff.clone())
    }

    pub fn has_unit_coefficients(&self) -> bool {
        self.images.iter().all(|img| img.coeff.is_one())
    }

    /// Leibniz extension: d(X^β) = Σ_i β_i · X^{β−e_i} · d(x_i).
    pub fn apply<C: Coefficient>(&self, p: &Polynomial<C>) -> Result<Polynomial<C>> {
        if p.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = Polynomial::zero(&self.ctx);
        for (m, c) in p.terms() {
            for (i, img) in self.images.iter().enumerate() {
                let Some(lowered) = m.lower(i) else { continue };
                let factor = &img.coeff * rat(m.exponents()[i] as i64);
                out.add_term(lowered.mul(&img.exponents), c.scale(&factor));
            }
        }
        Ok(out)
    }

    /// The common total degree s of all images, if there is one.
    pub fn image_degree(&self) -> Option<u32> {
        let s = self.images.first()?.exponents.total_degree();
        self.images
            .iter()
            .all(|img| img.exponents.total_degree() == s)
            .then_some(s)
    }

    /// s − 1 when every image has total degree s.
    pub fn homogeneity_degree(&self) -> Option<i64> {
        self.image_degree().map(|s| s as i64 - 1)
    }

    pub fn exponent_matrix_and_wd(&self) -> ExponentMatrix {
        let n = self.arity();
        let mut a = RationalMatrix::zeros(n, n);
        for (i, img) in self.images.iter().enumerate() {
            for (j, &e) in img.exponents.exponents().iter().enumerate() {
                a[(i, j)] = rat(e as i64);
            }
            a[(i, i)] -= Rational::one();
        }
        let w_d = determinant(&a).expect("square by construction");
        ExponentMatrix {
            matrix: a,
            w_d,
            unit_coefficients: self.has_unit_coefficients(),
        }
    }

    /// d1 ⊕ d2 on the concatenated variable list.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let ctx = self.ctx.concat(&other.ctx).map_err(|_| {
            Error::InvalidInput("direct sum requires disjoint variable names".into())
        })?;
        let (n1, n2) = (self.arity(), other.arity());
        let pad = |img: &Image, offset: usize, width: usize| {
            let mut e = vec![0; n1 + n2];
            e[offset..offset + width].copy_from_slice(img.exponents.exponents());
            Image {
                coeff: img.coeff.clone(),
                exponents: Monomial::new(e),
            }
        };
        let images = self
            .images
            .iter()
            .map(|img| pad(img, 0, n1))
            .chain(other.images.iter().map(|img| pad(img, n1, n2)))
            .collect();
        Self::new(&ctx, images)
    }

    /// Edges u → v where v occurs in the image of u.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .flat_map(|(u, img)| {
                img.exponents
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(move |(v, _)| (u, v))
            })
            .collect()
    }
}

/// Jouanolou derivation d(x_i) = x_{i+1}^s, d(x_n) = x_1^s on x1..xn.
pub fn gen_jouanolou(n: usize, s: u32) -> Result<MonomialDerivation> {
    if n < 2 || s < 1 {
        return Err(Error::InvalidInput(format!(
            "Jouanolou derivation needs n >= 2 and s >= 1, got n = {n}, s = {s}"
        )));
    }
    let ctx = VariableContext::new((1..=n).map(|i| format!("x{i}")))?;
    let rows = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[(i + 1) % n] = s;
            e
        })
        .collect();
    MonomialDerivation::from_exponents(&ctx, rows)
}

/// Generalized cyclotomic derivation with blocks of the given sizes.
/// `tables[i]` has one row per variable of block i, and each row holds the
/// exponents of the variables of block i+1 (cyclically). Default variable
/// names are `x{block}_{index}`, 1-based.
pub fn gen_generalized_cyclotomic(
    sizes: &[usize],
    tables: &[Vec<Vec<u32>>],
    names: Option<Vec<String>>,
) -> Result<MonomialDerivation> {
    let k = sizes.len();
    if k < 2 {
        return Err(Error::InvalidInput("need at least two blocks".into()));
    }
    if sizes.iter().any(|&t| t == 0) {
        return Err(Error::InvalidInput("blocks must be nonempty".into()));
    }
    if tables.len() != k {
        return Err(Error::Dimension(format!("{} tables for {k} blocks", tables.len())));
    }
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &t| {
            let o = *acc;
            *acc += t;
            Some(o)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let names = names.unwrap_or_else(|| {
        sizes
            .iter()
            .enumerate()
            .flat_map(|(b, &t)| (1..=t).map(move |j| format!("x{}_{j}", b + 1)))
            .collect()
    });
    let ctx = VariableContext::new(names)?;
    if ctx.len() != n {
        return Err(Error::Dimension(format!("{} names for {n} variables", ctx.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (b, table) in tables.iter().enumerate() {
        let next = (b + 1) % k;
        if table.len() != sizes[b] {
            return Err(Error::Dimension(format!(
                "table {} has {} rows, block has {} variables",
                b + 1,
                table.len(),
                sizes[b]
            )));
        }
        for row in table {
            if row.len() != sizes[next] {
                return Err(Error::Dimension(format!(
                    "table {} row has {} entries, block {} has {} variables",
                    b + 1,
                    row.len(),
                    next + 1,
                    sizes[next]
                )));
            }
            let mut e = vec![0; n];
            e[offsets[next]..offsets[next] + sizes[next]].copy_from_slice(row);
            rows.push(e);
        }
    }
    MonomialDerivation::from_exponents(&ctx, rows)
}

/// The four-variable example d(x)=w², d(y)=zw, d(z)=y², d(w)=xy.
pub fn four_variable_example() -> MonomialDerivation {
    let ctx = VariableContext::new(["x", "y", "z", "w"]).expect("distinct names");
    MonomialDerivation::from_exponents(
        &ctx,
        vec![
            vec![0, 0, 0, 2],
            vec![0, 0, 1, 1],
            vec![0, 2, 0, 0],
            vec![1, 1, 0, 0],
        ],
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn toy() -> MonomialDerivation {
        gen_jouanolou(2, 1).unwrap()
    }

    #[test]
    fn leibniz_examples() {
        let d = gen_jouanolou(2, 2).unwrap();
        let ctx = d.context().clone();
        let f = parse_polynomial(&ctx, "x1 - x2").unwrap();
        assert_eq!(d.apply(&f).unwrap(), parse_polynomial(&ctx, "x2^2 - x1^2").unwrap());
        let t = toy();
        let g = parse_polynomial(t.context(), "x1^2 - x2^2").unwrap();
        assert!(t.apply(&g).unwrap().is_zero());
        let c = parse_polynomial(t.context(), "5").unwrap();
        assert!(t.apply(&c).unwrap().is_zero());
    }

    #[test]
    fn homogeneity_degrees() {
        assert_eq!(gen_jouanolou(3, 2).unwrap().homogeneity_degree(), Some(1));
        assert_eq!(toy().homogeneity_degree(), Some(0));
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let d = MonomialDerivation::from_exponents(&ctx, vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert_eq!(d.homogeneity_degree(), None);
    }

    #[test]
    fn exponent_matrix() {
        let em = gen_jouanolou(3, 2).unwrap().exponent_matrix_and_wd();
        assert_eq!(em.matrix, RationalMatrix::from_i64(&[&[-1, 2, 0], &[0, -1, 2], &[2, 0, -1]]));
        assert_eq!(em.w_d, rat(7));
        let em = four_variable_example().exponent_matrix_and_wd();
        assert_eq!(em.w_d, rat(0));
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let id = MonomialDerivation::from_exponents(&ctx, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let em = id.exponent_matrix_and_wd();
        assert_eq!(em.matrix, RationalMatrix::zeros(2, 2));
        assert_eq!(em.w_d, rat(0));
    }

    #[test]
    fn direct_sum_images() {
        let a = gen_jouanolou(2, 2).unwrap();
        let ctx_b = VariableContext::new(["u", "v"]).unwrap();
        let b = MonomialDerivation::from_exponents(&ctx_b, vec![vec![0, 2], vec![2, 0]]).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        let rendered: Vec<String> = (0..4).map(|i| sum.image_poly(i).to_string()).collect();
        assert_eq!(rendered, ["x2^2", "x1^2", "v^2", "u^2"]);
        assert_eq!(sum.homogeneity_degree(), Some(1));
        assert!(a.direct_sum(&a).is_err());
        let f = parse_polynomial(a.context(), "x1^2 - 3*x1*x2").unwrap();
        assert_eq!(
            sum.apply(&f.embed(sum.context(), 0).unwrap()).unwrap(),
            a.apply(&f).unwrap().embed(sum.context(), 0).unwrap()
        );
    }

    #[test]
    fn generators() {
        let d = gen_jouanolou(3, 2).unwrap();
        let imgs: Vec<String> = (0..3).map(|i| d.image_poly(i).to_string()).collect();
        assert_eq!(imgs, ["x2^2", "x3^2", "x1^2"]);
        let t = toy();
        assert_eq!(t.image_poly(0).to_string(), "x2");
        assert_eq!(t.image_poly(1).to_string(), "x1");
        assert!(gen_jouanolou(1, 2).is_err());
        assert!(gen_jouanolou(3, 0).is_err());

        let four = gen_generalized_cyclotomic(
            &[2, 2],
            &[vec![vec![0, 2], vec![1, 1]], vec![vec![0, 2], vec![1, 1]]],
            Some(["x", "y", "z", "w"].map(String::from).to_vec()),
        )
        .unwrap();
        assert_eq!(four, four_variable_example());

        let jou = gen_generalized_cyclotomic(
            &[1, 1, 1],
            &[vec![vec![2]], vec![vec![2]], vec![vec![2]]],
            Some(vec!["x1".into(), "x2".into(), "x3".into()]),
        )
        .unwrap();
        assert_eq!(jou, d);

        let small = gen_generalized_cyclotomic(&[1, 1], &[vec![vec![2]], vec![vec![2]]], None).unwrap();
        let imgs: Vec<String> = (0..2).map(|i| small.image_poly(i).to_string()).collect();
        assert_eq!(imgs, ["x2_1^2", "x1_1^2"]);
        assert!(gen_generalized_cyclotomic(&[1, 1], &[vec![vec![2, 1]], vec![vec![2]]], None).is_err());
    }
}
