use super::partition::Partition;
use super::tableau::StandardTableau;
use crate::algebra::ResidueSequence;

/// Lazy iterator over `Std(λ)` in lexicographic order of column words.
pub struct StdIter {
    shape: Partition,
    col_lens: Vec<usize>,
    heights: Vec<usize>,
    word: Vec<usize>,
    started: bool,
    done: bool,
}

impl StdIter {
    fn new(shape: &Partition) -> Self {
        let col_lens = shape.conjugate().parts().to_vec();
        let k = col_lens.len();
        Self {
            shape: shape.clone(),
            col_lens,
            heights: vec![0; k],
            word: Vec::with_capacity(shape.size()),
            started: false,
            done: false,
        }
    }

    fn can_place(&self, c: usize) -> bool {
        let h = self.heights[c];
        h < self.col_lens[c] && (c == 0 || self.heights[c - 1] > h)
    }

    fn fill_greedy(&mut self) {
        let n = self.shape.size();
        while self.word.len() < n {
            let c = (0..self.col_lens.len())
                .find(|&c| self.can_place(c))
                .expect("a partial standard filling always extends");
            self.heights[c] += 1;
            self.word.push(c);
        }
    }

    /// Advances to the lexicographic successor; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(c) = self.word.pop() {
            self.heights[c] -= 1;
            if let Some(next) = (c + 1..self.col_lens.len()).find(|&d| self.can_place(d)) {
                self.heights[next] += 1;
                self.word.push(next);
                self.fill_greedy();
                return true;
            }
        }
        false
    }

    fn current(&self) -> StandardTableau {
        let word: Vec<usize> = self.word.iter().map(|c| c + 1).collect();
        StandardTableau::from_column_word_unchecked(&word, self.shape.clone())
    }
}

impl Iterator for StdIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_greedy();
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// `Std(λ)`, each standard tableau exactly once, in lexicographic order of
/// the column word of `1..n`.
pub fn enumerate_std(shape: &Partition) -> StdIter {
    StdIter::new(shape)
}

/// `Std(λ, i)`: standard tableaux of shape `λ` with residue sequence `i`,
/// in the same order as [`enumerate_std`]. Branches are pruned by residue.
pub fn enumerate_std_with_residue(shape: &Partition, i: &ResidueSequence) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    if i.len() != n {
        return out;
    }
    let e = i.modulus();
    let col_lens = shape.conjugate().parts().to_vec();
    let mut heights = vec![0usize; col_lens.len()];
    let mut word = Vec::with_capacity(n);

    fn go(
        shape: &Partition,
        target: &[usize],
        e: usize,
        col_lens: &[usize],
        heights: &mut [usize],
        word: &mut Vec<usize>,
        out: &mut Vec<StandardTableau>,
    ) {
        let a = word.len();
        if a == target.len() {
            out.push(StandardTableau::from_column_word_unchecked(word, shape.clone()));
            return;
        }
        for c in 0..col_lens.len() {
            let h = heights[c];
            if h >= col_lens[c] || (c > 0 && heights[c - 1] <= h) {
                continue;
            }
            // node (h + 1, c + 1) has residue c - h mod e
            let res = (c as i64 - h as i64).rem_euclid(e as i64) as usize;
            if res != target[a] {
                continue;
            }
            heights[c] += 1;
            word.push(c + 1);
            go(shape, target, e, col_lens, heights, word, out);
            word.pop();
            heights[c] -= 1;
        }
    }

    go(shape, i.entries(), e, &col_lens, &mut heights, &mut word, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hook_length_count(shape: &Partition) -> u128 {
        let n = shape.size() as u128;
        let conj = shape.conjugate();
        let mut num: u128 = (1..=n).product();
        let mut den: u128 = 1;
        for r in 1..=shape.len() {
            for c in 1..=shape.part(r) {
                den *= ((shape.part(r) - c) + (conj.part(c) - r) + 1) as u128;
            }
        }
        num /= den;
        num
    }

    #[test]
    fn counts_match_hook_formula() {
        for n in 0..=8 {
            for lam in partitions(n) {
                let got = enumerate_std(&lam).count() as u128;
                assert_eq!(got, hook_length_count(&lam), "shape {lam}");
            }
        }
        assert_eq!(enumerate_std(&p("2,2,1,1")).count(), 9);
        assert_eq!(enumerate_std(&p("1^7")).count(), 1);
    }

    fn next_permutation(v: &mut [usize]) -> bool {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    #[test]
    fn count_431_by_permutation_brute_force() {
        // every permutation of 1..8 laid out in the rows of (4,3,1)
        let mut perm: Vec<usize> = (1..=8).collect();
        let mut count = 0;
        loop {
            let rows = vec![perm[0..4].to_vec(), perm[4..7].to_vec(), perm[7..8].to_vec()];
            if StandardTableau::from_rows(&rows).is_ok() {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(count, 70);
        assert_eq!(enumerate_std(&p("4,3,1")).count(), 70);
    }

    #[test]
    fn order_is_lexicographic_and_distinct() {
        for lam in partitions(7) {
            let words: Vec<Vec<usize>> = enumerate_std(&lam).map(|t| t.column_word()).collect();
            assert!(words.windows(2).all(|w| w[0] < w[1]), "shape {lam}");
        }
    }

    #[test]
    fn residue_filtered() {
        let lam = p("4,3,1");
        let i = ResidueSequence::parse(3, "01220101").unwrap();
        let got = enumerate_std_with_residue(&lam, &i);
        let brute: Vec<_> = enumerate_std(&lam)
            .filter(|t| t.residue_sequence(3) == i)
            .collect();
        assert_eq!(got, brute);
        let degs: Vec<i64> = got.iter().map(|t| t.degree(3)).collect();
        assert_eq!(degs.iter().filter(|d| **d == 2).count(), 2);
        assert_eq!(degs.iter().filter(|d| **d == -2).count(), 1);

        let col = p("1,1");
        let zeros = ResidueSequence::parse(2, "00").unwrap();
        assert!(enumerate_std_with_residue(&col, &zeros).is_empty());

        let lam = p("2,1");
        let top = StandardTableau::row_filled(&lam);
        assert!(enumerate_std_with_residue(&lam, &top.residue_sequence(3)).contains(&top));
    }

    #[test]
    fn row_filled_dominates_everything() {
        let lam = p("2,2,1");
        let top = StandardTableau::row_filled(&lam);
        let all: Vec<_> = enumerate_std(&lam).collect();
        assert_eq!(all.len(), 5);
        for t in &all {
            assert!(top.dominates(t).unwrap());
        }
    }

    #[test]
    fn dominance_is_partial_order() {
        let lam = p("3,2,1");
        let all: Vec<_> = enumerate_std(&lam).collect();
        for a in &all {
            assert!(a.dominates(a).unwrap());
            for b in &all {
                if a != b && a.dominates(b).unwrap() {
                    assert!(!b.dominates(a).unwrap());
                }
                for c in &all {
                    if a.dominates(b).unwrap() && b.dominates(c).unwrap() {
                        assert!(a.dominates(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn empty_shape() {
        let all: Vec<_> = enumerate_std(&Partition::empty()).collect();
        assert_eq!(all, vec![StandardTableau::empty()]);
    }
}
