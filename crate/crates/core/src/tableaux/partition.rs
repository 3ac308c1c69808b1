use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Residue;
use crate::error::{Error, Result};

/// A box `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Self { row, col }
    }

    /// `res(a, b) = b - a mod e`.
    pub fn residue(self, e: usize) -> Residue {
        Residue::new(self.col as i64 - self.row as i64, e)
    }

    pub(crate) fn residue_value(self, e: usize) -> usize {
        (self.col as i64 - self.row as i64).rem_euclid(e as i64) as usize
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition: a weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the part list, which refines dominance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(2^x, 1^y)`.
    pub fn two_column(x: usize, y: usize) -> Self {
        let mut parts = vec![2; x];
        parts.extend(std::iter::repeat_n(1, y));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_r` for 1-based `r`; zero past the last part.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Number of columns, i.e. `λ_1`.
    pub fn num_columns(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.num_columns();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|p| **p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Dominance `self ⊵ other` on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for r in 1..=len {
            a += self.part(r);
            b += other.part(r);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `λ_r - λ_{r+1} < e` for every `r`, counting a trailing zero part.
    pub fn is_e_restricted(&self, e: usize) -> bool {
        (1..=self.len()).all(|r| self.part(r) - self.part(r + 1) < e)
    }

    /// `(x, y)` when `self = (2^x, 1^y)`.
    pub fn two_column_params(&self) -> Option<(usize, usize)> {
        if self.num_columns() > 2 {
            return None;
        }
        let x = self.parts.iter().filter(|p| **p == 2).count();
        Some((x, self.len() - x))
    }

    pub(crate) fn require_two_column(&self) -> Result<(usize, usize)> {
        self.two_column_params()
            .ok_or_else(|| Error::NotTwoColumn(self.clone()))
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && self.part(node.row) >= node.col
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| Node::new(r, self.part(r) + 1))
            .collect()
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Node::new(r, self.part(r)))
            .collect()
    }

    /// `d_A(λ)`: addable `i`-nodes strictly below `A` minus removable
    /// `i`-nodes strictly below `A`, where `i = res(A)`.
    pub fn degree_contribution(&self, node: Node, e: usize) -> i64 {
        let i = node.residue_value(e);
        let mut d = 0i64;
        for r in node.row + 1..=self.len() + 1 {
            let lr = self.part(r);
            if self.part(r - 1) > lr && Node::new(r, lr + 1).residue_value(e) == i {
                d += 1;
            }
            if lr > 0 && lr > self.part(r + 1) && Node::new(r, lr).residue_value(e) == i {
                d -= 1;
            }
        }
        d
    }

    pub(crate) fn with_node_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    /// Runs of three or more equal parts use exponent notation:
    /// `(2,2,1,1)`, `(2,1^4)`, `(2^4,1^21)`, `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == v {
                j += 1;
            }
            let run = j - i;
            if run >= 3 {
                items.push(format!("{v}^{run}"));
            } else {
                items.extend(std::iter::repeat_n(v.to_string(), run));
            }
            i = j;
        }
        write!(f, "({})", items.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,2,1,1`, `(2,1^4)`, `2^4,1^21`, and `∅` / `()` / `0` / empty
    /// for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() || inner == "∅" || inner == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in inner.split(',') {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {item:?} in {s:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {item:?} in {s:?}")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_max_part(n, n)
}

/// Partitions of `n` with every part at most `k`, reverse lexicographic.
pub fn partitions_max_part(n: usize, k: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// `Par_{≤2}(n)`: every `(2^x, 1^y)` with `2x + y = n`, by descending `x`.
pub fn partitions_two_column(n: usize) -> Vec<Partition> {
    (0..=n / 2)
        .rev()
        .map(|x| Partition::two_column(x, n - 2 * x))
        .collect()
}

/// `RPar_{e,≤2}(n)`: the `e`-restricted members of [`partitions_two_column`].
pub fn restricted_two_column(n: usize, e: usize) -> Vec<Partition> {
    partitions_two_column(n)
        .into_iter()
        .filter(|p| p.is_e_restricted(e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_column_listing() {
        assert_eq!(partitions_two_column(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_two_column(4),
            vec![p("2,2"), p("2,1,1"), p("1,1,1,1")]
        );
        assert!(partitions_two_column(6).contains(&p("2,2,1,1")));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("2^4,1^21"), Partition::two_column(4, 21));
        assert_eq!(p("(2,1^4)").to_string(), "(2,1^4)");
        assert_eq!(p("2,2,1,1").to_string(), "(2,2,1,1)");
        assert_eq!(p("2^4,1^21").to_string(), "(2^4,1^21)");
        assert_eq!(p("∅"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "∅");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn restricted() {
        for n in 0..8 {
            assert!(Partition::two_column(0, n).is_e_restricted(2));
        }
        assert!(!p("2").is_e_restricted(2));
        assert!(p("2,2,1,1").is_e_restricted(2));
        assert!(!p("2,2").is_e_restricted(2));
        assert!(p("2,2").is_e_restricted(3));
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..9 {
            for lam in partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), n);
            }
        }
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
    }

    #[test]
    fn dominance() {
        assert!(p("2,2").dominates(&p("2,1,1")));
        assert!(!p("2,1,1").dominates(&p("2,2")));
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")));
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")));
    }

    #[test]
    fn residues() {
        assert_eq!(Node::new(1, 1).residue(5).value(), 0);
        assert_eq!(Node::new(4, 3).residue(3).value(), 2);
        for e in 2..7 {
            assert_eq!(Node::new(2, 2).residue(e).value(), 0);
        }
    }

    #[test]
    fn addable_removable() {
        let lam = p("4,3,1");
        assert_eq!(
            lam.addable_nodes(),
            vec![Node::new(1, 5), Node::new(2, 4), Node::new(3, 2), Node::new(4, 1)]
        );
        assert_eq!(
            lam.removable_nodes(),
            vec![Node::new(1, 4), Node::new(2, 3), Node::new(3, 1)]
        );
        assert_eq!(Partition::empty().addable_nodes(), vec![Node::new(1, 1)]);
    }
}
