//! Detection of generalized cyclotomic block structure.
//!
//! Every edge u → v (v occurs in d(u)) must go from block i to block i+1
//! mod k. Potentials are propagated along a spanning forest of the
//! underlying undirected graph with pot(v) = pot(u) + 1 across edges; the
//! gcd g of all edge discrepancies pot(u) + 1 − pot(v) is the only
//! constraint, so k must divide g (any k when g = 0).

use std::collections::VecDeque;

use num_integer::Integer;

use super::MonomialDerivation;
use crate::error::{Error, Result};

/// A split of the variables into k cyclically ordered nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicPartition {
    k: usize,
    /// 1-based block index per variable.
    classes: Vec<usize>,
    sizes: Vec<usize>,
}

impl CyclotomicPartition {
    pub fn new(k: usize, classes: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidInput(format!("k = {k} < 2")));
        }
        let mut sizes = vec![0; k];
        for &c in &classes {
            if c == 0 || c > k {
                return Err(Error::InvalidInput(format!("class {c} outside 1..={k}")));
            }
            sizes[c - 1] += 1;
        }
        if let Some(empty) = sizes.iter().position(|&t| t == 0) {
            return Err(Error::InvalidInput(format!("block S_{} is empty", empty + 1)));
        }
        Ok(CyclotomicPartition { k, classes, sizes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_of(&self, var: usize) -> usize {
        self.classes[var]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Variable indices of block `c` (1-based).
    pub fn block(&self, c: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&v| self.classes[v] == c)
            .collect()
    }

    /// Checks d(S_i) ⊆ K[S_{i+1 mod k}] term by term.
    pub fn validate(&self, d: &MonomialDerivation) -> Result<()> {
        if self.classes.len() != d.arity() {
            return Err(Error::Dimension(format!(
                "partition covers {} variables, derivation has {}",
                self.classes.len(),
                d.arity()
            )));
        }
        for (u, v) in d.edges() {
            let want = self.classes[u] % self.k + 1;
            if self.classes[v] != want {
                let ctx = d.context();
                return Err(Error::Verification(format!(
                    "d({}) involves {} from S_{}, expected S_{}",
                    ctx.name(u),
                    ctx.name(v),
                    self.classes[v],
                    want
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self, d: &MonomialDerivation) -> String {
        (1..=self.k)
            .map(|c| {
                let names: Vec<&str> = self.block(c).iter().map(|&v| d.context().name(v)).collect();
                format!("S_{c} = {{{}}}", names.join(", "))
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Everything the detector learned about a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionAnalysis {
    /// gcd of edge discrepancies; 0 means unconstrained.
    pub discrepancy_gcd: u64,
    /// Divisors of g (or 2..=n when g = 0) that are at least 2 and at most n.
    pub candidate_k: Vec<usize>,
    /// Candidates that produced a valid partition, descending.
    pub partitions: Vec<CyclotomicPartition>,
}

impl PartitionAnalysis {
    pub fn feasible_k(&self) -> Vec<usize> {
        self.partitions.iter().map(CyclotomicPartition::k).collect()
    }

    pub fn largest(&self) -> Option<&CyclotomicPartition> {
        self.partitions.first()
    }
}

struct Potentials {
    pot: Vec<i64>,
    component: Vec<usize>,
    components: usize,
    gcd: u64,
}

fn potentials(d: &MonomialDerivation) -> Potentials {
    let n = d.arity();
    let edges = d.edges();
    // (neighbor, +1 for forward edge, −1 for backward)
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push((v, 1));
        if u != v {
            adj[v].push((u, -1));
        }
    }
    let mut pot = vec![0i64; n];
    let mut component = vec![usize::MAX; n];
    let mut components = 0;
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        component[root] = components;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, step) in &adj[u] {
                if component[v] == usize::MAX {
                    component[v] = components;
                    pot[v] = pot[u] + step;
                    queue.push_back(v);
                }
            }
        }
        components += 1;
    }
    let gcd = edges
        .iter()
        .map(|&(u, v)| (pot[u] + 1 - pot[v]).unsigned_abs())
        .fold(0u64, |g, x| g.gcd(&x));
    Potentials {
        pot,
        component,
        components,
        gcd,
    }
}

fn assign(p: &Potentials, k: usize) -> Option<Vec<usize>> {
    let n = p.pot.len();
    let k_i = k as i64;
    let mut covered = vec![false; k];
    let mut shifts = vec![0i64; p.components];
    for comp in 0..p.components {
        let residues: Vec<usize> = (0..n)
            .filter(|&v| p.component[v] == comp)
            .map(|v| p.pot[v].rem_euclid(k_i) as usize)
            .collect();
        // First component is anchored; later ones pick the shift covering
        // the most new blocks, smallest shift on ties.
        let shift = if comp == 0 {
            0
        } else {
            (0..k)
                .max_by_key(|&t| {
                    let mut seen = covered.clone();
                    let gain = residues
                        .iter()
                        .filter(|&&r| {
                            let c = (r + t) % k;
                            !std::mem::replace(&mut seen[c], true)
                        })
                        .count();
                    (gain, std::cmp::Reverse(t))
                })
                .unwrap_or(0)
        };
        shifts[comp] = shift as i64;
        for r in residues {
            covered[(r + shift) % k] = true;
        }
    }
    covered.iter().all(|&c| c).then(|| {
        (0..n)
            .map(|v| ((p.pot[v] + shifts[p.component[v]]).rem_euclid(k_i)) as usize + 1)
            .collect()
    })
}

fn build(d: &MonomialDerivation, p: &Potentials, k: usize) -> Option<CyclotomicPartition> {
    let classes = assign(p, k)?;
    let part = CyclotomicPartition::new(k, classes).ok()?;
    part.validate(d)
        .expect("potential assignment satisfies every edge");
    Some(part)
}

pub fn analyze_partitions(d: &MonomialDerivation) -> PartitionAnalysis {
    let p = potentials(d);
    let n = d.arity();
    let candidate_k: Vec<usize> = (2..=n)
        .filter(|&k| p.gcd == 0 || p.gcd % k as u64 == 0)
        .collect();
    let partitions = candidate_k
        .iter()
        .rev()
        .filter_map(|&k| build(d, &p, k))
        .collect();
    PartitionAnalysis {
        discrepancy_gcd: p.gcd,
        candidate_k,
        partitions,
    }
}

/// Partition with the largest feasible k.
pub fn detect_cyclotomic_partition(d: &MonomialDerivation) -> Option<CyclotomicPartition> {
    analyze_partitions(d).partitions.into_iter().next()
}

/// Partition for a specific k, if feasible.
pub fn partition_for_k(d: &MonomialDerivation, k: usize) -> Option<CyclotomicPartition> {
    let p = potentials(d);
    if k < 2 || k > d.arity() || (p.gcd != 0 && p.gcd % k as u64 != 0) {
        return None;
    }
    build(d, &p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::{four_variable_example, gen_jouanolou};
    use crate::poly::VariableContext;

    #[test]
    fn four_variable_example_splits_in_two() {
        let d = four_variable_example();
        let a = analyze_partitions(&d);
        assert_eq!(a.discrepancy_gcd, 2);
        let p = a.largest().unwrap();
        assert_eq!(p.k(), 2);
        assert_eq!(p.classes(), &[1, 1, 2, 2]);
        assert_eq!(p.render(&d), "S_1 = {x, y}, S_2 = {z, w}");
    }

    #[test]
    fn jouanolou_cycles() {
        let d = gen_jouanolou(3, 2).unwrap();
        let p = detect_cyclotomic_partition(&d).unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(p.classes(), &[1, 2, 3]);
        let a = analyze_partitions(&gen_jouanolou(4, 2).unwrap());
        assert_eq!(a.discrepancy_gcd, 4);
        assert_eq!(a.feasible_k(), vec![4, 2]);
    }

    #[test]
    fn self_loop_has_no_partition() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let d = MonomialDerivation::from_exponents(&ctx, vec![vec![2]]).unwrap();
        let a = analyze_partitions(&d);
        assert_eq!(a.discrepancy_gcd, 1);
        assert!(a.partitions.is_empty());
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let d = MonomialDerivation::from_exponents(&ctx, vec![vec![2, 0], vec![1, 0]]).unwrap();
        assert!(detect_cyclotomic_partition(&d).is_none());
    }

    #[test]
    fn constant_images_are_unconstrained() {
        // d(x) = y, d(y) = 1: a path, g = 0.
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let d = MonomialDerivation::from_exponents(&ctx, vec![vec![0, 1], vec![0, 0]]).unwrap();
        let a = analyze_partitions(&d);
        assert_eq!(a.discrepancy_gcd, 0);
        assert_eq!(a.largest().unwrap().classes(), &[1, 2]);
    }

    #[test]
    fn components_are_aligned() {
        let j = gen_jouanolou(3, 2).unwrap();
        let ctx = VariableContext::new(["u1", "u2", "u3"]).unwrap();
        let other = MonomialDerivation::from_exponents(
            &ctx,
            vec![vec![0, 2, 0], vec![0, 0, 2], vec![2, 0, 0]],
        )
        .unwrap();
        let sum = j.direct_sum(&other).unwrap();
        let p = detect_cyclotomic_partition(&sum).unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(p.sizes(), &[2, 2, 2]);
        p.validate(&sum).unwrap();
        assert!(partition_for_k(&sum, 2).is_none());
    }

    #[test]
    fn validate_rejects_bad_partition() {
        let d = gen_jouanolou(3, 2).unwrap();
        let bad = CyclotomicPartition::new(3, vec![1, 3, 2]).unwrap();
        assert!(bad.validate(&d).is_err());
        assert!(CyclotomicPartition::new(3, vec![1, 1, 2]).is_err());
    }
}
