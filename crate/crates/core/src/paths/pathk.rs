use serde::{Deserialize, Serialize};

use crate::algebra::ResidueSequence;
use crate::error::{Error, Result};
use crate::tableaux::StandardTableau;

/// A lattice path in the weight lattice of type `A_{k-1}`, given by the
/// column index (`1..=k`) of each step. Points are stored implicitly as the
/// count vectors `(c_{a,1}, ..., c_{a,k})`.
///
/// The same data is a column tableau: step `a` puts `a` at the bottom of
/// column `steps[a-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathK {
    k: usize,
    steps: Vec<usize>,
}

/// `(v + ρ, ε_r - ε_t) = c_r - c_t + t - r` for 1-based `r < t`.
pub fn pairing(counts: &[i64], r: usize, t: usize) -> i64 {
    counts[r - 1] - counts[t - 1] + t as i64 - r as i64
}

/// Degree of a single step `u -> v` summed over all positive roots:
/// `+1` when `u` lies on a wall `H_{α,m}` (`m > 0`) and `v` is strictly on
/// its negative side, `-1` when `v` lies on such a wall and `u` is strictly
/// on its positive side.
pub fn deg_step(u: &[i64], v: &[i64], e: usize) -> i64 {
    let e = e as i64;
    let k = u.len();
    let mut d = 0;
    for r in 1..=k {
        for t in r + 1..=k {
            let pu = pairing(u, r, t);
            let pv = pairing(v, r, t);
            if pu > 0 && pu % e == 0 && pv < pu {
                d += 1;
            }
            if pv > 0 && pv % e == 0 && pu > pv {
                d -= 1;
            }
        }
    }
    d
}

impl PathK {
    pub fn new(k: usize, steps: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        if let Some(bad) = steps.iter().find(|s| **s == 0 || **s > k) {
            return Err(Error::InvalidParameter(format!(
                "step index {bad} outside 1..={k}"
            )));
        }
        Ok(Self { k, steps })
    }

    /// `π_t`, for `t` with at most `k` columns.
    pub fn from_tableau(t: &StandardTableau, k: usize) -> Result<Self> {
        if t.shape().num_columns() > k {
            return Err(Error::InvalidParameter(format!(
                "tableau of shape {} has more than {k} columns",
                t.shape()
            )));
        }
        Self::new(k, t.column_word())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// `(c_{a,1}, ..., c_{a,k})`.
    pub fn counts_at(&self, a: usize) -> Vec<i64> {
        let mut c = vec![0i64; self.k];
        for &s in &self.steps[..a] {
            c[s - 1] += 1;
        }
        c
    }

    /// All points `π(0), ..., π(n)` as count vectors.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut c = vec![0i64; self.k];
        out.push(c.clone());
        for &s in &self.steps {
            c[s - 1] += 1;
            out.push(c.clone());
        }
        out
    }

    /// First position whose point leaves the dominant chamber.
    pub fn first_non_dominant(&self) -> Option<usize> {
        let mut c = vec![0i64; self.k];
        for (idx, &s) in self.steps.iter().enumerate() {
            c[s - 1] += 1;
            if s >= 2 && c[s - 1] > c[s - 2] {
                return Some(idx + 1);
            }
        }
        None
    }

    /// Dominant iff `c_{a,j} >= c_{a,j+1}` for all `a, j`.
    pub fn is_dominant(&self) -> bool {
        self.first_non_dominant().is_none()
    }

    /// The column tableau of the path; standard iff the path is dominant.
    pub fn to_tableau(&self) -> Result<StandardTableau> {
        if let Some(position) = self.first_non_dominant() {
            return Err(Error::NotDominant { position });
        }
        StandardTableau::from_column_word(&self.steps)
    }

    /// `i_a = j - c_{a,j} mod e` where `j` is the `a`-th step.
    pub fn residue_sequence(&self, e: usize) -> ResidueSequence {
        let mut c = vec![0i64; self.k];
        let entries = self
            .steps
            .iter()
            .map(|&j| {
                c[j - 1] += 1;
                (j as i64 - c[j - 1]).rem_euclid(e as i64) as usize
            })
            .collect();
        ResidueSequence::from_raw(e, entries)
    }

    /// `deg_e(π) = Σ_a deg_e(π(a), π(a+1))`.
    pub fn degree(&self, e: usize) -> Result<i64> {
        if let Some(position) = self.first_non_dominant() {
            return Err(Error::NotDominant { position });
        }
        let pts = self.points();
        Ok(pts.windows(2).map(|w| deg_step(&w[0], &w[1], e)).sum())
    }

    /// `s^a_{α,m}·π` for `α = ε_r - ε_t`: keeps `π` up to `a` and applies
    /// the linear part of the reflection (swapping `r` and `t`) to every
    /// later step. Requires `(π(a) + ρ, α) = me`.
    pub fn reflect_tail(&self, a: usize, r: usize, t: usize, m: i64, e: usize) -> Result<PathK> {
        if a > self.len() || r == 0 || t > self.k || r >= t {
            return Err(Error::InvalidParameter(format!(
                "bad reflection data a={a}, r={r}, t={t}"
            )));
        }
        if pairing(&self.counts_at(a), r, t) != m * e as i64 {
            return Err(Error::NotOnWall { position: a });
        }
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(idx, &s)| {
                if idx < a {
                    s
                } else if s == r {
                    t
                } else if s == t {
                    r
                } else {
                    s
                }
            })
            .collect();
        Ok(PathK { k: self.k, steps })
    }

    /// Every wall `(r, t, m)` containing the point `π(a)`, with
    /// `m` possibly zero or negative.
    pub fn walls_at(&self, a: usize, e: usize) -> Vec<(usize, usize, i64)> {
        let c = self.counts_at(a);
        let mut out = Vec::new();
        for r in 1..=self.k {
            for t in r + 1..=self.k {
                let v = pairing(&c, r, t);
                if v % e as i64 == 0 {
                    out.push((r, t, v / e as i64));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_std, partitions_max_part};

    #[test]
    fn roundtrip_and_dominance() {
        for n in 0..=8 {
            for lam in partitions_max_part(n, 3) {
                for t in enumerate_std(&lam) {
                    let pi = PathK::from_tableau(&t, 3).unwrap();
                    assert!(pi.is_dominant());
                    assert_eq!(pi.to_tableau().unwrap(), t);
                }
            }
        }
        let bad = PathK::new(2, vec![1, 2, 2]).unwrap();
        assert_eq!(bad.first_non_dominant(), Some(3));
        assert!(matches!(bad.degree(2), Err(Error::NotDominant { position: 3 })));
    }

    #[test]
    fn residues_match_tableau() {
        for n in 0..=8 {
            for lam in partitions_max_part(n, 3) {
                for t in enumerate_std(&lam) {
                    let pi = PathK::from_tableau(&t, 3).unwrap();
                    for e in 2..5 {
                        assert_eq!(pi.residue_sequence(e), t.residue_sequence(e));
                    }
                }
            }
        }
    }

    #[test]
    fn degree_matches_recursion_k3() {
        for n in 0..=8 {
            for lam in partitions_max_part(n, 3) {
                for t in enumerate_std(&lam) {
                    let pi = PathK::from_tableau(&t, 3).unwrap();
                    for e in 2..5 {
                        assert_eq!(pi.degree(e).unwrap(), t.degree(e), "t = {t}, e = {e}");
                    }
                }
            }
        }
    }

    #[test]
    fn wall_adjacent_steps_k2() {
        // k = 2, height h = c1 - c2 and pairing h + 1; wall at h = me - 1
        let e = 3;
        let pt = |h: i64| vec![h.max(0) + 5, 5 - (-h).max(0)];
        let (m1, on, p1) = (pt(1), pt(2), pt(3));
        assert_eq!(deg_step(&on, &m1, e), 1); // leaving the wall downward
        assert_eq!(deg_step(&on, &p1, e), 0); // leaving upward
        assert_eq!(deg_step(&m1, &on, e), 0); // arriving from below
        assert_eq!(deg_step(&p1, &on, e), -1); // arriving from above
    }

    #[test]
    fn reflect_requires_wall() {
        let pi = PathK::new(2, vec![1, 1, 2]).unwrap();
        // after two steps pairing is 3 = 1·3
        let r = pi.reflect_tail(2, 1, 2, 1, 3).unwrap();
        assert_eq!(r.steps(), &[1, 1, 1]);
        assert!(matches!(
            pi.reflect_tail(1, 1, 2, 1, 3),
            Err(Error::NotOnWall { position: 1 })
        ));
        assert_eq!(pi.reflect_tail(3, 1, 2, 1, 2).unwrap(), pi);
    }
}
