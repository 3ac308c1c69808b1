use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::json;

use super::census::counterexample_census;
use super::section5::{
    chain_starts, exact_sequence_chain, in_q_r, kernel_image_dims, q_r_partition, t_lambda_e, Pairing,
};
use super::{CaseResult, Grid, Plan, Suite};
use crate::characters::{ch_q_simple, degree_sums, verify_char_sum};
use crate::decomposition::{
    decomp_matrix, decomp_matrix_combinatorial, f_q_p0_alt, f_q_sign_form, verify_adjustment,
};
use crate::error::Result;
use crate::paths::{dominant_paths, Path2};
use crate::regularisation::{dstd_paths, in_theorem_scope, iota, preimage_reg_e_path, r_e, reg_e, reg_ep, reg_prime_path};
use crate::tableaux::{partitions, partitions_two_column, restricted_two_column, StandardTableau};

/// Recursive degree, path degree (`k = 2` and general `k`), and the arc
/// count agree on every two-column tableau of size `n`.
pub fn degree_case(n: usize, e: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e}"));
    for pi in dominant_paths(n) {
        let t = pi.to_tableau();
        let recursive = t.degree(e);
        let path = pi.degree(e);
        let general = pi.to_pathk().degree(e)?;
        let (pos, neg) = pi.arcs_by_sign(e);
        let arcs = neg.len() as i64 - pos.len() as i64 + r_e(&pi, e) as i64;
        res.checked += 1;
        if !(recursive == path && path == general && general == arcs) {
            res.fail(json!({
                "tableau": t.to_string(),
                "recursive": recursive,
                "path": path,
                "path_general": general,
                "arcs": arcs,
            }));
        }
    }
    Ok(res)
}

/// `reg_e` idempotence and degree shift, preimages against brute-force
/// inversion, and `ι` as a residue-preserving involution negating degrees
/// on `e`-regular paths.
pub fn bijection_case(n: usize, e: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e}"));
    let all = dominant_paths(n);
    let mut inverse: HashMap<Path2, Vec<Path2>> = HashMap::new();
    for pi in &all {
        res.checked += 1;
        let out = reg_e(pi, e)?.output;
        let r = r_e(pi, e) as i64;
        if reg_e(&out, e)?.output != out
            || out.degree(e) != pi.degree(e) - r
            || out.residue_sequence(e) != pi.residue_sequence(e)
        {
            res.fail(json!({"check": "reg_e", "path": pi.step_word(), "image": out.step_word()}));
        }
        inverse.entry(out).or_default().push(pi.clone());

        let flipped = iota(pi, e);
        let ok = iota(&flipped, e) == *pi
            && flipped.shape() == pi.shape()
            && flipped.residue_sequence(e) == pi.residue_sequence(e)
            && (r != 0 || flipped.degree(e) == -pi.degree(e));
        if !ok {
            res.fail(json!({"check": "iota", "path": pi.step_word(), "image": flipped.step_word()}));
        }
    }
    for s in &all {
        let mut predicted = preimage_reg_e_path(s, e)?;
        predicted.sort();
        let mut brute = inverse.remove(s).unwrap_or_default();
        brute.sort();
        if predicted != brute {
            let words = |v: &[Path2]| v.iter().map(Path2::step_word).collect::<Vec<_>>();
            res.fail(json!({
                "check": "preimage",
                "path": s.step_word(),
                "predicted": words(&predicted),
                "brute_force": words(&brute),
            }));
        }
    }
    Ok(res)
}

/// For each `λ ⊢ n` and target `μ`: the regularisation set and `r_e` are
/// constant on `Std_{e,p,μ}(λ)`, `reg_{e,p}` and `reg'` are bijections onto
/// `DStd_{e,p}(μ)`, `reg'` keeps residues and lowers the degree by `r`, and
/// `ι` preserves `DStd_{e,p}(μ)`.
pub fn reg_prime_case(n: usize, e: usize, p: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e} p={p}"));
    for lam in partitions_two_column(n) {
        let mut fibres: BTreeMap<_, Vec<Path2>> = BTreeMap::new();
        for pi in crate::paths::paths_of_shape(&lam)? {
            let chain = reg_ep(&pi, e, p)?;
            fibres.entry(chain.output().shape()).or_default().push(pi);
        }
        for (mu, fibre) in fibres {
            let regular: BTreeSet<Path2> = dstd_paths(&mu, e, p)?.into_iter().collect();
            let mut zsets = BTreeSet::new();
            let mut rs = BTreeSet::new();
            let mut images = BTreeSet::new();
            let mut primes = BTreeSet::new();
            let mut graded = true;
            for t in &fibre {
                res.checked += 1;
                let rp = reg_prime_path(t, e, p)?;
                let r = r_e(t, e) as i64;
                zsets.insert(rp.chain.zset());
                rs.insert(r);
                images.insert(rp.chain.output().clone());
                graded &= rp.output.residue_sequence(e) == t.residue_sequence(e)
                    && rp.output.degree(e) == t.degree(e) - r;
                primes.insert(rp.output);
            }
            let iota_ok = regular.iter().all(|s| regular.contains(&iota(s, e)));
            let ok = zsets.len() == 1
                && rs.len() == 1
                && images.len() == fibre.len()
                && images == regular
                && primes == regular
                && graded
                && iota_ok;
            if !ok {
                res.fail(json!({
                    "lambda": lam.to_string(),
                    "mu": mu.to_string(),
                    "fibre": fibre.len(),
                    "regular": regular.len(),
                    "z_sets": zsets.len(),
                    "r_values": rs.len(),
                    "graded": graded,
                    "iota_preserves_regular": iota_ok,
                }));
            }
        }
    }
    Ok(res)
}

/// The character sums for every `λ ⊢ n`, both sides rebuilt from
/// enumeration.
pub fn characters_case(n: usize, e: usize, p: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e} p={p}"));
    for lam in partitions_two_column(n) {
        res.checked += 1;
        let rep = verify_char_sum(&lam, e, p)?;
        if !rep.passed {
            res.fail(serde_json::to_value(&rep.first_failure).expect("serialisable"));
        }
    }
    Ok(res)
}

/// `ch_q DStd_{e,p}(μ)` is bar-invariant for every restricted `μ ⊢ n`.
pub fn bar_invariance_case(n: usize, e: usize, p: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e} p={p} bar"));
    for mu in restricted_two_column(n, e) {
        res.checked += 1;
        let ch = ch_q_simple(&mu, e, p)?;
        if !ch.is_bar_invariant() {
            let (i, f) = ch
                .iter()
                .find(|(_, f)| !f.is_bar_invariant())
                .map(|(i, f)| (i.to_string(), f.to_string()))
                .unwrap_or_default();
            res.fail(json!({"mu": mu.to_string(), "residues": i, "coefficient": f}));
        }
    }
    Ok(res)
}

/// Closed-form decomposition numbers against `reg_{e,p}` fibres, plus the
/// signed-expansion and `p = 0` three-case forms of `f^q`.
pub fn decomp_case(n: usize, e: usize, p: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e} p={p}"));
    let closed = decomp_matrix(n, e, p)?;
    let comb = decomp_matrix_combinatorial(n, e, p)?;
    for (i, lam) in closed.rows.iter().enumerate() {
        let (u, v) = lam.two_column_params().expect("two-column rows");
        for (j, mu) in closed.cols.iter().enumerate() {
            res.checked += 1;
            let f = &closed.entries[i][j];
            let g = &comb.entries[i][j];
            let (x, y) = mu.two_column_params().expect("two-column cols");
            let alt = if u < x {
                None
            } else if p == 0 {
                Some(f_q_p0_alt(y, u - x, e))
            } else {
                Some(f_q_sign_form(y, v as i64, e, p)?)
            };
            let alt_ok = alt.as_ref().is_none_or(|a| a == f);
            if f != g || !alt_ok {
                res.fail(json!({
                    "lambda": lam.to_string(),
                    "mu": mu.to_string(),
                    "closed_form": f.to_string(),
                    "combinatorial": g.to_string(),
                    "alternative_form": alt.map(|a| a.to_string()),
                }));
            }
        }
    }
    Ok(res)
}

pub fn adjustment_case(n: usize, e: usize, p: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e} p={p}"));
    let check = verify_adjustment(n, e, p)?;
    res.checked = partitions_two_column(n).len() * restricted_two_column(n, e).len();
    if !check.passed {
        res.fail(serde_json::to_value(&check.first_mismatch).expect("serialisable"));
    }
    Ok(res)
}

/// `Q_r` cover, kernel/image cardinalities with the `reg_e` bijection,
/// `T^λ_e`, and the exact-sequence chains, for every admissible shape of
/// size `n`.
pub fn section5_case(n: usize, e: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(format!("n={n} e={e}"));
    for pr in Pairing::all(n, e) {
        res.checked += 1;
        let lam = pr.lambda.to_string();
        let q = q_r_partition(&pr.lambda, e)?;
        let sizes = q.sizes();
        let last = sizes.len() - 1;
        let shape_ok = if e == 2 {
            sizes[..last].iter().all(|&s| s == 0)
        } else {
            sizes.iter().all(|&s| s > 0)
        };
        if !q.is_exact_cover() || !shape_ok {
            res.fail(json!({"check": "q_r", "lambda": lam, "sizes": sizes, "non_regular": q.non_regular.len()}));
        }
        let k = kernel_image_dims(&pr.lambda, &pr.mu, e)?;
        if !k.passed() {
            res.fail(json!({"check": "kernel_image", "record": k}));
        }
        let t = t_lambda_e(&pr.lambda, e)?;
        let tmu = StandardTableau::row_filled(&pr.mu);
        let t_path = Path2::from_tableau(&t)?;
        if t.residue_sequence(e) != tmu.residue_sequence(e)
            || t.degree(e) != tmu.degree(e) + 1
            || !in_q_r(&t_path, &pr, pr.x - pr.j)
        {
            res.fail(json!({"check": "t_lambda", "lambda": lam, "tableau": t.to_string()}));
        }
    }
    for lam in chain_starts(n, e) {
        res.checked += 1;
        let chain = exact_sequence_chain(&lam, e)?;
        if !chain.passed() {
            res.fail(json!({"check": "exact_chain", "chain": chain}));
        }
    }
    Ok(res)
}

/// `Σ_{t ∈ Std(λ, i)} deg t >= 0` for every `i` and every `λ` in the list.
pub fn inequality_case(label: String, shapes: Vec<crate::tableaux::Partition>, e: usize) -> Result<CaseResult> {
    let mut res = CaseResult::new(label);
    for lam in shapes {
        for (i, s) in degree_sums(&lam, e)? {
            res.checked += 1;
            if s < 0 {
                res.fail(json!({"lambda": lam.to_string(), "residues": i.to_string(), "degree_sum": s}));
            }
        }
    }
    Ok(res)
}

fn counterexample_case() -> Result<CaseResult> {
    let rep = counterexample_census()?;
    let mut res = CaseResult::new("e=3 lambda=(4,3,1) i=01220101".into());
    res.checked = rep.members.len();
    if !rep.passed {
        res.fail(serde_json::to_value(&rep).expect("serialisable"));
    }
    Ok(res)
}

pub(super) fn plan(suite: Suite, grid: &Grid) -> Plan {
    let mut plan = Plan::new();
    let sizes = 0..=grid.max_n;
    let es = grid.e_values.clone();
    let pairs = grid.pairs.clone();
    match suite {
        Suite::Degrees => {
            for n in sizes {
                for &e in &es {
                    plan.case(move || degree_case(n, e));
                }
            }
        }
        Suite::Bijections => {
            for n in sizes {
                for &e in &es {
                    plan.case(move || bijection_case(n, e));
                }
                for &(e, p) in &pairs {
                    plan.case(move || reg_prime_case(n, e, p));
                }
            }
        }
        Suite::Characters => {
            for n in sizes {
                for &(e, p) in &pairs {
                    plan.case(move || characters_case(n, e, p));
                    plan.case(move || bar_invariance_case(n, e, p));
                }
            }
        }
        Suite::Decomp | Suite::Adjustment => {
            for &(e, p) in &pairs {
                if !in_theorem_scope(e, p) {
                    plan.skip(format!("e={e} p={p}: outside the certified range"));
                    continue;
                }
                for n in sizes.clone() {
                    if suite == Suite::Decomp {
                        plan.case(move || decomp_case(n, e, p));
                    } else {
                        plan.case(move || adjustment_case(n, e, p));
                    }
                }
            }
        }
        Suite::Section5 => {
            for n in sizes {
                for &e in &es {
                    plan.case(move || section5_case(n, e));
                }
            }
        }
        Suite::Counterexample => plan.case(counterexample_case),
        Suite::Inequality => {
            for n in sizes {
                for &e in &es {
                    plan.case(move || inequality_case(format!("n={n} e={e}"), partitions_two_column(n), e));
                }
            }
            for n in 0..=grid.max_n.min(9) {
                for &e in &es {
                    let wide: Vec<_> = partitions(n).into_iter().filter(|l| l.num_columns() > 2).collect();
                    plan.exploratory(move || inequality_case(format!("n={n} e={e} general"), wide.clone(), e));
                }
            }
        }
    }
    plan
}
