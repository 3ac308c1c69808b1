//! The three-column census at `e = 3`, `λ = (4,3,1)`, `i = 01220101`.

use serde::Serialize;

use crate::algebra::ResidueSequence;
use crate::error::Result;
use crate::tableaux::{enumerate_std_with_residue, Partition, StandardTableau};

pub const CENSUS_E: usize = 3;
pub const CENSUS_SHAPE: [usize; 3] = [4, 3, 1];
pub const CENSUS_RESIDUES: &str = "01220101";

/// The displayed tableaux `t_1`, `t_2` (degree 2) and `s` (degree -2).
pub fn census_tableaux() -> (StandardTableau, StandardTableau, StandardTableau) {
    let t1 = StandardTableau::from_rows(&[vec![1, 2, 3, 5], vec![4, 7, 8], vec![6]]).unwrap();
    let t2 = StandardTableau::from_rows(&[vec![1, 2, 3, 7], vec![4, 5, 6], vec![8]]).unwrap();
    let s = StandardTableau::from_rows(&[vec![1, 2, 4, 7], vec![3, 5, 8], vec![6]]).unwrap();
    (t1, t2, s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub e: usize,
    pub shape: Partition,
    pub residues: String,
    /// `(tableau, degree)` for every member of `Std(λ, i)`.
    pub members: Vec<(StandardTableau, i64)>,
    pub degree_two: Vec<StandardTableau>,
    pub degree_minus_two: Vec<StandardTableau>,
    pub degree_two_matches: bool,
    pub degree_minus_two_matches: bool,
    pub mutually_non_dominant: bool,
    pub passed: bool,
}

pub fn counterexample_census() -> Result<CensusReport> {
    let e = CENSUS_E;
    let shape = Partition::new(CENSUS_SHAPE.to_vec())?;
    let i = ResidueSequence::parse(e, CENSUS_RESIDUES)?;
    let members: Vec<(StandardTableau, i64)> = enumerate_std_with_residue(&shape, &i)
        .into_iter()
        .map(|t| {
            let d = t.degree(e);
            (t, d)
        })
        .collect();
    let pick = |d: i64| -> Vec<StandardTableau> {
        members
            .iter()
            .filter(|(_, k)| *k == d)
            .map(|(t, _)| t.clone())
            .collect()
    };
    let (degree_two, degree_minus_two) = (pick(2), pick(-2));
    let (t1, t2, s) = census_tableaux();
    let degree_two_matches = degree_two.len() == 2 && degree_two.contains(&t1) && degree_two.contains(&t2);
    let degree_minus_two_matches = degree_minus_two == vec![s];
    let mutually_non_dominant = !t1.dominates(&t2)? && !t2.dominates(&t1)?;
    Ok(CensusReport {
        e,
        shape,
        residues: CENSUS_RESIDUES.into(),
        members,
        degree_two,
        degree_minus_two,
        degree_two_matches,
        degree_minus_two_matches,
        mutually_non_dominant,
        passed: degree_two_matches && degree_minus_two_matches && mutually_non_dominant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_passes() {
        let rep = counterexample_census().unwrap();
        assert!(rep.passed, "{rep:?}");
        assert!(rep.members.len() >= 3);
    }
}
