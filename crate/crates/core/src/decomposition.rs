//! Graded decomposition numbers for two-column partitions, adjustment
//! matrices, and the combinatorial cross-check through `reg_{e,p}`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::LaurentPoly;
use crate::error::{check_e, check_p, Error, Result};
use crate::paths::{paths_of_shape, Path2};
use crate::regularisation::{dstd_paths, in_theorem_scope, r_e, reg_ep};
use crate::tableaux::{partitions_two_column, restricted_two_column, Partition};

/// `b ≼_p a`: every base-`p` digit of `b` is `0` or equals the digit of `a`.
/// For `p = 0` this holds iff `b = 0`.
pub fn base_p_contains(b: u64, a: u64, p: u64) -> bool {
    assert!(p != 1, "base 1 containment is undefined");
    if p == 0 {
        return b == 0;
    }
    let (mut a, mut b) = (a, b);
    while b > 0 {
        let (da, db) = (a % p, b % p);
        if db != 0 && db != da {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// `y = (a_s p^s + ... + a_0) e + l - 1` with `0 <= l < e`, `0 <= a_i < p`.
/// `digits[i] = a_i`; the list is empty when `y < e - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EPExpansion {
    pub l: usize,
    pub digits: Vec<usize>,
}

impl EPExpansion {
    /// `Σ a_i p^i`.
    pub fn multiplier(&self, p: usize) -> usize {
        self.digits.iter().rev().fold(0, |acc, d| acc * p + d)
    }

    pub fn reconstruct(&self, e: usize, p: usize) -> i64 {
        (self.multiplier(p) * e + self.l) as i64 - 1
    }
}

pub fn ep_expansion(y: usize, e: usize, p: usize) -> Result<EPExpansion> {
    check_e(e)?;
    if p < 2 {
        return Err(Error::InvalidParameter(format!(
            "(e,p)-expansions need p >= 2, got p = {p}"
        )));
    }
    let (mut big, l) = ((y + 1) / e, (y + 1) % e);
    let mut digits = Vec::new();
    while big > 0 {
        digits.push(big % p);
        big /= p;
    }
    Ok(EPExpansion { l, digits })
}

fn divides(e: usize, v: i64) -> bool {
    v.rem_euclid(e as i64) == 0
}

/// The ungraded `f_{e,p}(l, s)`.
pub fn f_ungraded(l: usize, s: usize, e: usize, p: usize) -> i64 {
    f_q(l, s, e, p).eval_at_one()
}

/// `f^q_{e,p}(l, s)`: `1` if `s_e ≼_p (l+1)_e` and `e | s`; `q` if
/// `s_e ≼_p (l+1)_e`, `e | l + 1 - s` and `e ∤ s`; `0` otherwise.
/// Here `x_e` is the integer part of `x / e`.
pub fn f_q(l: usize, s: usize, e: usize, p: usize) -> LaurentPoly {
    let contained = base_p_contains((s / e) as u64, ((l + 1) / e) as u64, p as u64);
    if !contained {
        return LaurentPoly::zero();
    }
    let e_div_s = s.is_multiple_of(e);
    let e_div_rest = divides(e, l as i64 + 1 - s as i64);
    if e_div_s {
        LaurentPoly::one()
    } else if e_div_rest {
        LaurentPoly::q()
    } else {
        LaurentPoly::zero()
    }
}

/// One admissible signed expansion `v = (a_s p^s ± ... ± a_0) e ± l - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    /// `signs[i]` is the sign in front of `a_i`; the leading sign is `+`.
    pub signs: Vec<i8>,
    /// Sign in front of `l`.
    pub l_sign: i8,
}

/// All sign patterns (up to the irrelevant signs of zero digits and of
/// `l = 0`, which are fixed to `+`) that produce `v`.
pub fn signed_patterns(exp: &EPExpansion, v: i64, e: usize, p: usize) -> Vec<SignPattern> {
    let s = exp.digits.len();
    let free: Vec<usize> = (0..s.saturating_sub(1))
        .filter(|&i| exp.digits[i] != 0)
        .collect();
    let l_free = exp.l != 0;
    let count = 1usize << (free.len() + usize::from(l_free));
    let mut out = Vec::new();
    for mask in 0..count {
        let mut signs = vec![1i8; s];
        for (bit, &i) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                signs[i] = -1;
            }
        }
        let l_sign = if l_free && mask >> free.len() & 1 == 1 { -1 } else { 1 };
        let mut mult: i64 = 0;
        let mut pw: i64 = 1;
        for (&sg, &d) in signs.iter().zip(&exp.digits).take(s) {
            mult += sg as i64 * d as i64 * pw;
            pw *= p as i64;
        }
        if mult * e as i64 + l_sign as i64 * exp.l as i64 - 1 == v {
            out.push(SignPattern { signs, l_sign });
        }
    }
    out
}

/// `f^q_{e,p}(y, u - x)` through signed expansions: nonzero iff
/// `v = y - 2(u - x)` has a signed form; `1` when `l = 0` or the sign of `l`
/// is `+`, `q` when it is `-`.
pub fn f_q_sign_form(y: usize, v: i64, e: usize, p: usize) -> Result<LaurentPoly> {
    let exp = ep_expansion(y, e, p)?;
    let patterns = signed_patterns(&exp, v, e, p);
    Ok(match patterns.first() {
        None => LaurentPoly::zero(),
        Some(_) if exp.l == 0 => LaurentPoly::one(),
        Some(pat) if pat.l_sign > 0 => LaurentPoly::one(),
        Some(_) => LaurentPoly::q(),
    })
}

/// The `p = 0` three-case form of `f^q_{e,0}(y, d)`: `1` if `d = 0`, `q` if
/// `0 < d < e <= y + 1` and `e | y + 1 - d`, else `0`.
pub fn f_q_p0_alt(y: usize, d: usize, e: usize) -> LaurentPoly {
    if d == 0 {
        LaurentPoly::one()
    } else if d < e && e <= y + 1 && divides(e, y as i64 + 1 - d as i64) {
        LaurentPoly::q()
    } else {
        LaurentPoly::zero()
    }
}

fn check_scope(e: usize, p: usize) -> Result<()> {
    check_e(e)?;
    check_p(p)?;
    if !in_theorem_scope(e, p) {
        return Err(Error::HypothesisGate { e, p });
    }
    Ok(())
}

fn check_pair(lambda: &Partition, mu: &Partition, e: usize) -> Result<((usize, usize), (usize, usize))> {
    let lp = lambda.require_two_column()?;
    let mp = mu.require_two_column()?;
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch {
            left: lambda.clone(),
            right: mu.clone(),
        });
    }
    if !mu.is_e_restricted(e) {
        return Err(Error::NotRestricted {
            shape: mu.clone(),
            e,
        });
    }
    Ok((lp, mp))
}

/// `[S^λ : D^μ]_q = f^q_{e,p}(y, u - x)` for `λ = (2^u, 1^v)`,
/// `μ = (2^x, 1^y)`, zero when `u < x`. Refuses `(e, p)` outside the
/// certified range.
pub fn decomp_entry(lambda: &Partition, mu: &Partition, e: usize, p: usize) -> Result<LaurentPoly> {
    check_scope(e, p)?;
    let ((u, _), (x, y)) = check_pair(lambda, mu, e)?;
    Ok(if u >= x {
        f_q(y, u - x, e, p)
    } else {
        LaurentPoly::zero()
    })
}

/// `Σ q^{r_e(t)}` over `t ∈ Std(λ)` with `reg_{e,p}(t) = s`, for the first
/// `s ∈ DStd_{e,p}(μ)` in column-word order. Defined for every `(e, p)`;
/// see [`in_theorem_scope`] for where it is certified.
pub fn decomp_entry_combinatorial(
    lambda: &Partition,
    mu: &Partition,
    e: usize,
    p: usize,
) -> Result<LaurentPoly> {
    check_e(e)?;
    check_p(p)?;
    lambda.require_two_column()?;
    mu.require_two_column()?;
    let s = dstd_paths(mu, e, p)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::EmptyRegularSet(mu.clone()))?;
    let mut total = LaurentPoly::zero();
    for t in paths_of_shape(lambda)? {
        if reg_ep(&t, e, p)?.output() == &s {
            total += &LaurentPoly::q_pow(r_e(&t, e) as i64);
        }
    }
    Ok(total)
}

/// `Std(λ)` grouped by `reg_{e,p}` image, with `r_e` of each member.
fn fibres(lambda: &Partition, e: usize, p: usize) -> Result<HashMap<Path2, Vec<u8>>> {
    let mut out: HashMap<Path2, Vec<u8>> = HashMap::new();
    for t in paths_of_shape(lambda)? {
        let image = reg_ep(&t, e, p)?.output().clone();
        out.entry(image).or_default().push(r_e(&t, e));
    }
    Ok(out)
}

/// Rows `Par_{≤2}(n)` and columns `RPar_{e,≤2}(n)`, both by ascending `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecompMatrix {
    pub n: usize,
    pub e: usize,
    pub p: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<LaurentPoly>>,
    /// Built combinatorially outside the certified `(e, p)` range.
    pub extrapolated: bool,
}

/// Square over `RPar_{e,≤2}(n)`, ascending `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjustmentMatrix {
    pub n: usize,
    pub e: usize,
    pub p: usize,
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<i64>>,
}

/// `0`, `1`, `q`, or the general Laurent form.
pub fn entry_label(f: &LaurentPoly) -> String {
    f.to_string()
}

fn csv_table(cols: &[Partition], rows: &[Partition], cell: impl Fn(usize, usize) -> String) -> String {
    let mut out = String::from("lambda");
    for c in cols {
        out.push_str(&format!(",\"{c}\""));
    }
    out.push('\n');
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&format!("\"{r}\""));
        for j in 0..cols.len() {
            out.push(',');
            out.push_str(&cell(i, j));
        }
        out.push('\n');
    }
    out
}

fn pretty_table(cols: &[Partition], rows: &[Partition], cell: impl Fn(usize, usize) -> String) -> String {
    let col_labels: Vec<String> = cols.iter().map(|c| c.to_string()).collect();
    let row_labels: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    let lw = row_labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols.len())
        .map(|j| {
            let body = (0..rows.len()).map(|i| cell(i, j).chars().count()).max().unwrap_or(0);
            body.max(col_labels[j].chars().count())
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut out = pad("", lw);
    for (j, l) in col_labels.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&pad(l, widths[j]));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for (i, r) in row_labels.iter().enumerate() {
        let mut line = pad(r, lw);
        for (j, w) in widths.iter().enumerate() {
            line.push_str("  ");
            line.push_str(&pad(&cell(i, j), *w));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

impl GradedDecompMatrix {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&LaurentPoly> {
        let i = self.rows.iter().position(|r| r == lambda)?;
        let j = self.cols.iter().position(|c| c == mu)?;
        Some(&self.entries[i][j])
    }

    pub fn to_csv(&self) -> String {
        csv_table(&self.cols, &self.rows, |i, j| entry_label(&self.entries[i][j]))
    }

    pub fn to_pretty(&self) -> String {
        pretty_table(&self.cols, &self.rows, |i, j| entry_label(&self.entries[i][j]))
    }

    /// Specialisation at `q = 1`.
    pub fn at_one(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(LaurentPoly::eval_at_one).collect())
            .collect()
    }
}

impl AdjustmentMatrix {
    pub fn to_csv(&self) -> String {
        csv_table(&self.labels, &self.labels, |i, j| self.entries[i][j].to_string())
    }

    pub fn to_pretty(&self) -> String {
        pretty_table(&self.labels, &self.labels, |i, j| self.entries[i][j].to_string())
    }

    pub fn is_unitriangular(&self) -> bool {
        let k = self.labels.len();
        (0..k).all(|i| {
            self.entries[i][i] == 1
                && (0..k).all(|j| self.entries[i][j] == 0 || self.labels[i].dominates(&self.labels[j]) || i == j)
        })
    }
}

#[derive(Serialize)]
struct MatrixWire {
    n: usize,
    e: usize,
    p: usize,
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    extrapolated: bool,
}

impl Serialize for GradedDecompMatrix {
    /// `{n, e, p, rows, cols, entries}` with partition labels and entries
    /// as strings (`"0"`, `"1"`, `"q"`), plus `"extrapolated": true` when
    /// built outside the certified range.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire {
            n: self.n,
            e: self.e,
            p: self.p,
            rows: self.rows.iter().map(|r| r.to_string()).collect(),
            cols: self.cols.iter().map(|c| c.to_string()).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(entry_label).collect())
                .collect(),
            extrapolated: self.extrapolated,
        }
        .serialize(serializer)
    }
}

impl Serialize for AdjustmentMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let labels: Vec<String> = self.labels.iter().map(|r| r.to_string()).collect();
        MatrixWire {
            n: self.n,
            e: self.e,
            p: self.p,
            rows: labels.clone(),
            cols: labels,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
            extrapolated: false,
        }
        .serialize(serializer)
    }
}

fn ascending_x(mut v: Vec<Partition>) -> Vec<Partition> {
    v.reverse();
    v
}

/// `D^p(q)` from the closed formula.
pub fn decomp_matrix(n: usize, e: usize, p: usize) -> Result<GradedDecompMatrix> {
    check_scope(e, p)?;
    let rows = ascending_x(partitions_two_column(n));
    let cols = ascending_x(restricted_two_column(n, e));
    let entries = rows
        .par_iter()
        .map(|lam| {
            cols.iter()
                .map(|mu| decomp_entry(lam, mu, e, p))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedDecompMatrix {
        n,
        e,
        p,
        rows,
        cols,
        entries,
        extrapolated: false,
    })
}

/// The same matrix assembled from `reg_{e,p}` fibres. Defined for every
/// `(e, p)`; outside [`in_theorem_scope`] it carries no guarantee.
pub fn decomp_matrix_combinatorial(n: usize, e: usize, p: usize) -> Result<GradedDecompMatrix> {
    check_e(e)?;
    check_p(p)?;
    let rows = ascending_x(partitions_two_column(n));
    let cols = ascending_x(restricted_two_column(n, e));
    let reps: Vec<Path2> = cols
        .iter()
        .map(|mu| {
            dstd_paths(mu, e, p)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::EmptyRegularSet(mu.clone()))
        })
        .collect::<Result<_>>()?;
    let entries = rows
        .par_iter()
        .map(|lam| {
            let fib = fibres(lam, e, p)?;
            Ok(reps
                .iter()
                .map(|s| {
                    fib.get(s).map_or_else(LaurentPoly::zero, |rs| {
                        rs.iter().map(|r| LaurentPoly::q_pow(*r as i64)).sum()
                    })
                })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedDecompMatrix {
        n,
        e,
        p,
        rows,
        cols,
        entries,
        extrapolated: !in_theorem_scope(e, p),
    })
}

/// `ã^p_{λμ} = 1` iff `v = (a_s p^s ± ... ± a_0) e + l - 1` for some signs
/// (with `+l`); the identity when `p = 0`.
pub fn adjustment_entry(lambda: &Partition, mu: &Partition, e: usize, p: usize) -> Result<i64> {
    let ((_, v), (_, y)) = check_pair(lambda, mu, e)?;
    if !lambda.is_e_restricted(e) {
        return Err(Error::NotRestricted {
            shape: lambda.clone(),
            e,
        });
    }
    if p == 0 {
        return Ok(i64::from(lambda == mu));
    }
    let exp = ep_expansion(y, e, p)?;
    let hit = signed_patterns(&exp, v as i64, e, p)
        .iter()
        .any(|pat| exp.l == 0 || pat.l_sign > 0);
    Ok(i64::from(hit))
}

pub fn adjustment_matrix(n: usize, e: usize, p: usize) -> Result<AdjustmentMatrix> {
    check_scope(e, p)?;
    let labels = ascending_x(restricted_two_column(n, e));
    let entries = labels
        .iter()
        .map(|lam| {
            labels
                .iter()
                .map(|mu| adjustment_entry(lam, mu, e, p))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AdjustmentMatrix {
        n,
        e,
        p,
        labels,
        entries,
    })
}

/// Outcome of checking `D^p(q) = D^0(q) Ã^p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjustmentCheck {
    pub n: usize,
    pub e: usize,
    pub p: usize,
    pub passed: bool,
    /// `(λ, μ, D^p(q) entry, (D^0(q) Ã^p) entry)` for the first mismatch.
    pub first_mismatch: Option<(String, String, String, String)>,
}

pub fn verify_adjustment(n: usize, e: usize, p: usize) -> Result<AdjustmentCheck> {
    let dp = decomp_matrix(n, e, p)?;
    let d0 = decomp_matrix(n, e, 0)?;
    let a = adjustment_matrix(n, e, p)?;
    let k = a.labels.len();
    let mut first_mismatch = None;
    'outer: for (i, lam) in dp.rows.iter().enumerate() {
        for (j, mu) in dp.cols.iter().enumerate() {
            let mut prod = LaurentPoly::zero();
            for m in 0..k {
                if a.entries[m][j] != 0 {
                    prod += &(&d0.entries[i][m] * &LaurentPoly::constant(a.entries[m][j]));
                }
            }
            if prod != dp.entries[i][j] {
                first_mismatch = Some((
                    lam.to_string(),
                    mu.to_string(),
                    dp.entries[i][j].to_string(),
                    prod.to_string(),
                ));
                break 'outer;
            }
        }
    }
    Ok(AdjustmentCheck {
        n,
        e,
        p,
        passed: first_mismatch.is_none(),
        first_mismatch,
    })
}
