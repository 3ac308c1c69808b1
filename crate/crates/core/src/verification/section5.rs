//! Cardinality and bijection shadows of the Specht homomorphisms
//! `φ_{λ,μ}: S^μ -> S^λ` between two-column shapes.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{check_e, Error, Result};
use crate::paths::{on_wall, paths_of_shape, Path2};
use crate::regularisation::{dstd_paths, r_e, reg_e};
use crate::tableaux::{Partition, StandardTableau};

/// `λ = (2^x, 1^y)` with `y = me - j - 1`, `1 <= j < e`, `x >= j`, and the
/// partner `μ = (2^{x-j}, 1^{y+2j})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pairing {
    pub lambda: Partition,
    pub mu: Partition,
    pub e: usize,
    pub x: usize,
    pub y: usize,
    pub j: usize,
    pub m: usize,
}

impl Pairing {
    pub fn new(lambda: &Partition, e: usize) -> Result<Self> {
        check_e(e)?;
        let (x, y) = lambda.require_two_column()?;
        let j = (-(y as i64) - 1).rem_euclid(e as i64) as usize;
        if j == 0 {
            return Err(Error::Pairing(format!(
                "{lambda}: y = {y} is congruent to -1 mod {e}"
            )));
        }
        if x < j {
            return Err(Error::Pairing(format!("{lambda}: x = {x} < j = {j}")));
        }
        Ok(Self {
            lambda: lambda.clone(),
            mu: Partition::two_column(x - j, y + 2 * j),
            e,
            x,
            y,
            j,
            m: (y + j + 1) / e,
        })
    }

    /// Every two-column `λ ⊢ n` admitting a partner.
    pub fn all(n: usize, e: usize) -> Vec<Self> {
        crate::tableaux::partitions_two_column(n)
            .iter()
            .filter_map(|lam| Self::new(lam, e).ok())
            .collect()
    }

    /// Position `2r + me - 1` where members of `Q_r` meet `H_m`.
    pub fn q_position(&self, r: usize) -> usize {
        2 * r + self.m * self.e - 1
    }
}

/// `T^λ_e`: `t^{(2^{x-j})}` on top of `t_{(2^j, 1^y)}` shifted by `2(x - j)`.
pub fn t_lambda_e(lambda: &Partition, e: usize) -> Result<StandardTableau> {
    let pr = Pairing::new(lambda, e)?;
    let (x, y, top) = (pr.x, pr.y, pr.x - pr.j);
    let rows: Vec<Vec<usize>> = (1..=x + y)
        .map(|a| {
            if a <= top {
                vec![2 * (a - 1) + 1, 2 * (a - 1) + 2]
            } else if a <= x {
                vec![top + a, x + y + a]
            } else {
                vec![top + a]
            }
        })
        .collect();
    StandardTableau::from_rows(&rows)
}

/// `Q_0, ..., Q_{x-j}` together with the cover check against the
/// non-regular set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QrPartition {
    pub pairing: Pairing,
    pub sets: Vec<Vec<Path2>>,
    pub non_regular: Vec<Path2>,
}

impl QrPartition {
    /// The `Q_r` are pairwise disjoint and cover `Std(λ) ∖ DStd_e(λ)`.
    pub fn is_exact_cover(&self) -> bool {
        let mut seen = BTreeSet::new();
        for q in &self.sets {
            for pi in q {
                if !seen.insert(pi.clone()) {
                    return false;
                }
            }
        }
        let target: BTreeSet<Path2> = self.non_regular.iter().cloned().collect();
        seen == target
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }
}

/// `π ∈ Q_r`: on `H_m` at `2r + me - 1`, and off every wall afterwards.
pub fn in_q_r(pi: &Path2, pr: &Pairing, r: usize) -> bool {
    let a = pr.q_position(r);
    a <= pi.len()
        && pi.height(a) == (pr.m * pr.e) as i64 - 1
        && pi.heights()[a + 1..].iter().all(|&h| !on_wall(h, pr.e))
}

pub fn q_r_partition(lambda: &Partition, e: usize) -> Result<QrPartition> {
    let pairing = Pairing::new(lambda, e)?;
    let all = paths_of_shape(lambda)?;
    let sets = (0..=pairing.x - pairing.j)
        .map(|r| all.iter().filter(|pi| in_q_r(pi, &pairing, r)).cloned().collect())
        .collect();
    let non_regular = all.into_iter().filter(|pi| r_e(pi, e) == 1).collect();
    Ok(QrPartition {
        pairing,
        sets,
        non_regular,
    })
}

/// Predicted kernel and image sizes of `φ_{λ,μ}` and the checks tying them
/// to `reg_e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KerIm {
    pub lambda: Partition,
    pub mu: Partition,
    pub std_mu: usize,
    pub regular_mu: usize,
    pub kernel: usize,
    pub image: usize,
    /// `|Std(μ)| = dim ker + dim im`.
    pub rank_identity: bool,
    /// `reg_e: Std(λ) ∖ DStd_e(λ) -> DStd_e(μ)` is a bijection.
    pub bijection: bool,
    /// Residues kept and degree lowered by one along that bijection.
    pub grading: bool,
}

impl KerIm {
    pub fn passed(&self) -> bool {
        self.rank_identity && self.bijection && self.grading
    }
}

pub fn kernel_image_dims(lambda: &Partition, mu: &Partition, e: usize) -> Result<KerIm> {
    let pr = Pairing::new(lambda, e)?;
    if &pr.mu != mu {
        return Err(Error::Pairing(format!(
            "{mu} is not the partner {} of {lambda}",
            pr.mu
        )));
    }
    let std_mu = paths_of_shape(mu)?.len();
    let regular: BTreeSet<Path2> = dstd_paths(mu, e, 0)?.into_iter().collect();
    let non_regular: Vec<Path2> = paths_of_shape(lambda)?
        .into_iter()
        .filter(|pi| r_e(pi, e) == 1)
        .collect();
    let mut images = BTreeSet::new();
    let mut grading = true;
    for pi in &non_regular {
        let s = reg_e(pi, e)?.output;
        grading &= s.residue_sequence(e) == pi.residue_sequence(e) && s.degree(e) == pi.degree(e) - 1;
        images.insert(s);
    }
    let kernel = std_mu - regular.len();
    let image = non_regular.len();
    Ok(KerIm {
        lambda: lambda.clone(),
        mu: mu.clone(),
        std_mu,
        regular_mu: regular.len(),
        kernel,
        image,
        rank_identity: std_mu == kernel + image,
        bijection: images.len() == non_regular.len() && images == regular,
        grading,
    })
}

/// `0 -> S^{λ^1} -> S^{λ^2} -> ... -> S^{λ^m}` and its cardinality checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactChain {
    pub e: usize,
    pub shapes: Vec<Partition>,
    /// `DStd_e(λ^1) = Std(λ^1)`.
    pub first_all_regular: bool,
    /// Each `(λ^{k+1}, λ^k)` satisfies the pairing hypotheses and its
    /// kernel/image check.
    pub pairs_ok: bool,
    /// `Σ_k (-1)^{m-k} |Std(λ^k)| = |DStd_e(λ^m)|`.
    pub alternating_ok: bool,
}

impl ExactChain {
    pub fn passed(&self) -> bool {
        self.first_all_regular && self.pairs_ok && self.alternating_ok
    }
}

/// `s_i · y = 2(ie - 1) - y`.
fn reflect(i: usize, e: usize, y: i64) -> i64 {
    2 * (i * e) as i64 - 2 - y
}

/// The chain `λ^1, ..., λ^m` with `y_1 = me - 1 + j` and
/// `y_k = s_{m-k+2} ... s_m · y_1`.
pub fn exact_sequence_chain(lambda1: &Partition, e: usize) -> Result<ExactChain> {
    check_e(e)?;
    let (x1, y1) = lambda1.require_two_column()?;
    let n = lambda1.size();
    let (m, j) = ((y1 + 1) / e, (y1 + 1) % e);
    if m == 0 || j == 0 || x1 + j >= e {
        return Err(Error::Pairing(format!(
            "{lambda1} needs y = me - 1 + j with m > 0, 1 <= j < {e} and x < e - j"
        )));
    }
    let mut shapes = vec![lambda1.clone()];
    let mut y = y1 as i64;
    for k in 2..=m {
        y = reflect(m - k + 2, e, y);
        debug_assert!(y >= 0 && (n as i64 - y) % 2 == 0);
        shapes.push(Partition::two_column((n - y as usize) / 2, y as usize));
    }
    let std_sizes: Vec<usize> = shapes.iter().map(|s| paths_of_shape(s).map(|v| v.len())).collect::<Result<_>>()?;
    let first_all_regular = dstd_paths(lambda1, e, 0)?.len() == std_sizes[0];
    let mut pairs_ok = true;
    for w in shapes.windows(2) {
        pairs_ok &= match kernel_image_dims(&w[1], &w[0], e) {
            Ok(k) => k.passed(),
            Err(_) => false,
        };
    }
    let alt: i64 = std_sizes
        .iter()
        .enumerate()
        .map(|(k, s)| if (m - 1 - k) % 2 == 0 { *s as i64 } else { -(*s as i64) })
        .sum();
    let last_regular = dstd_paths(shapes.last().unwrap(), e, 0)?.len() as i64;
    Ok(ExactChain {
        e,
        shapes,
        first_all_regular,
        pairs_ok,
        alternating_ok: alt == last_regular,
    })
}

/// Every `λ^1 ⊢ n` satisfying the chain hypotheses.
pub fn chain_starts(n: usize, e: usize) -> Vec<Partition> {
    crate::tableaux::partitions_two_column(n)
        .into_iter()
        .filter(|lam| {
            let (x, y) = lam.two_column_params().unwrap();
            let (m, j) = ((y + 1) / e, (y + 1) % e);
            m > 0 && j > 0 && x + j < e
        })
        .collect()
}
