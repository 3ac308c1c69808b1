use std::fmt;

use serde::{Serialize, Serializer};

use super::pathk::PathK;
use crate::algebra::ResidueSequence;
use crate::error::{Error, Result};
use crate::tableaux::{Partition, StandardTableau};

/// A dominant path for `k = 2` in scalar form: `π(a)` is the height
/// `c_{a,1} - c_{a,2}` after `a` steps, and every height is nonnegative.
///
/// Walls sit at heights `me - 1`, `m > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path2 {
    heights: Vec<i64>,
}

/// `h` lies on a wall `mM - 1` with `m > 0`.
pub fn on_wall(h: i64, modulus: usize) -> bool {
    let m = modulus as i64;
    h >= m - 1 && (h + 1) % m == 0
}

impl Path2 {
    /// Builds a path from ±1 steps; fails at the first negative height.
    pub fn from_steps(steps: &[i8]) -> Result<Self> {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        let mut h = 0i64;
        heights.push(0);
        for (idx, &s) in steps.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::InvalidParameter(format!("step {s} is not ±1")));
            }
            h += s as i64;
            if h < 0 {
                return Err(Error::NotDominant { position: idx + 1 });
            }
            heights.push(h);
        }
        Ok(Self { heights })
    }

    fn from_heights(heights: Vec<i64>) -> Result<Self> {
        if let Some(position) = heights.iter().position(|h| *h < 0) {
            return Err(Error::NotDominant { position });
        }
        Ok(Self { heights })
    }

    /// Parses a step word over `{+, -}` (also accepting `−`) or over `{1, 2}`
    /// (column indices). Whitespace is ignored.
    pub fn from_step_word(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' | '1' => Ok(1i8),
                '-' | '−' | '2' => Ok(-1i8),
                other => Err(Error::Parse(format!("bad step character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(&steps)
    }

    /// Expands run-length notation like `+4 - +4 -2 +3 -4 +` (each token is
    /// a sign followed by an optional repeat count).
    pub fn from_runs(spec: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for token in spec.split_whitespace() {
            let mut chars = token.chars();
            let sign = match chars.next() {
                Some('+') => 1i8,
                Some('-') | Some('−') => -1i8,
                _ => return Err(Error::Parse(format!("bad run {token:?}"))),
            };
            let rest: String = chars.collect();
            let count: usize = if rest.is_empty() {
                1
            } else {
                rest.parse()
                    .map_err(|_| Error::Parse(format!("bad run length in {token:?}")))?
            };
            steps.extend(std::iter::repeat_n(sign, count));
        }
        Self::from_steps(&steps)
    }

    pub fn empty() -> Self {
        Self { heights: vec![0] }
    }

    pub fn steps(&self) -> Vec<i8> {
        self.heights.windows(2).map(|w| (w[1] - w[0]) as i8).collect()
    }

    /// The step word over `{+, -}`.
    pub fn step_word(&self) -> String {
        self.heights
            .windows(2)
            .map(|w| if w[1] > w[0] { '+' } else { '-' })
            .collect()
    }

    /// The step word over `{1, 2}` (the column word of the tableau).
    pub fn column_word(&self) -> Vec<usize> {
        self.heights
            .windows(2)
            .map(|w| if w[1] > w[0] { 1 } else { 2 })
            .collect()
    }

    pub fn from_tableau(t: &StandardTableau) -> Result<Self> {
        t.shape().require_two_column()?;
        let mut h = 0i64;
        let mut heights = Vec::with_capacity(t.size() + 1);
        heights.push(0);
        for c in t.column_word() {
            h += if c == 1 { 1 } else { -1 };
            heights.push(h);
        }
        Ok(Self { heights })
    }

    pub fn to_tableau(&self) -> StandardTableau {
        let word = self.column_word();
        StandardTableau::from_column_word_unchecked(&word, self.shape())
    }

    pub fn from_pathk(pi: &PathK) -> Result<Self> {
        if pi.k() != 2 {
            return Err(Error::InvalidParameter(format!(
                "expected a k = 2 path, got k = {}",
                pi.k()
            )));
        }
        let steps: Vec<i8> = pi.steps().iter().map(|&s| if s == 1 { 1 } else { -1 }).collect();
        Self::from_steps(&steps)
    }

    pub fn to_pathk(&self) -> PathK {
        PathK::new(2, self.column_word()).expect("steps lie in 1..=2")
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `π(a)`.
    pub fn height(&self, a: usize) -> i64 {
        self.heights[a]
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn endpoint(&self) -> i64 {
        *self.heights.last().expect("nonempty")
    }

    pub fn max_height(&self) -> i64 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// `(2^x, 1^y)` with `y = π(n)` and `x = (n - y) / 2`.
    pub fn shape(&self) -> Partition {
        let y = self.endpoint() as usize;
        Partition::two_column((self.len() - y) / 2, y)
    }

    /// Residues read off the heights: a `+` step from `h` at position `a`
    /// puts a node in column 1, row `(a + h) / 2 + 1`.
    pub fn residue_sequence(&self, e: usize) -> ResidueSequence {
        let e_i = e as i64;
        let entries = self
            .heights
            .windows(2)
            .enumerate()
            .map(|(a, w)| {
                let a = a as i64 + 1;
                let (c1, c2) = ((a + w[1]) / 2, (a - w[1]) / 2);
                let v = if w[1] > w[0] { 1 - c1 } else { 2 - c2 };
                v.rem_euclid(e_i) as usize
            })
            .collect();
        ResidueSequence::from_raw(e, entries)
    }

    /// Degree of the step from `π(a-1)` to `π(a)`: `+1` when leaving a wall
    /// downward, `-1` when arriving at a wall from above, else `0`.
    pub fn step_degree(&self, a: usize, e: usize) -> i64 {
        step_degree(self.heights[a - 1], self.heights[a], e)
    }

    /// `deg_e(π)`.
    pub fn degree(&self, e: usize) -> i64 {
        self.heights
            .windows(2)
            .map(|w| step_degree(w[0], w[1], e))
            .sum()
    }

    /// `B(π)`: ascending positions `b` with `π(b)` on a wall.
    pub fn wall_hits(&self, e: usize) -> Vec<usize> {
        self.wall_hits_mod(e)
    }

    /// Positions on walls `mM - 1`, `m > 0`, for an arbitrary modulus `M`.
    pub fn wall_hits_mod(&self, modulus: usize) -> Vec<usize> {
        self.heights
            .iter()
            .enumerate()
            .filter(|(_, h)| on_wall(**h, modulus))
            .map(|(b, _)| b)
            .collect()
    }

    pub fn last_wall_hit(&self, modulus: usize) -> Option<usize> {
        self.heights.iter().rposition(|h| on_wall(*h, modulus))
    }

    /// Arcs: segments `π[b_i, b_{i+1}]` between consecutive wall hits with
    /// `π(b_i) = π(b_{i+1})`, in order of position.
    pub fn arcs(&self, e: usize) -> Vec<Arc> {
        let hits = self.wall_hits(e);
        hits.windows(2)
            .filter(|w| self.heights[w[0]] == self.heights[w[1]] && w[1] > w[0] + 1)
            .map(|w| {
                let h = self.heights[w[0]];
                let sign = if self.heights[w[0] + 1] > h {
                    ArcSign::Positive
                } else {
                    ArcSign::Negative
                };
                Arc {
                    start: w[0],
                    end: w[1],
                    wall: ((h + 1) / e as i64) as usize,
                    height: h,
                    sign,
                }
            })
            .collect()
    }

    /// `(A^+(π), A^-(π))`.
    pub fn arcs_by_sign(&self, e: usize) -> (Vec<Arc>, Vec<Arc>) {
        self.arcs(e)
            .into_iter()
            .partition(|a| a.sign == ArcSign::Positive)
    }

    /// Reflects `π` after position `a` about the height `π(a)`, which must
    /// lie on a wall for the given modulus.
    pub fn reflect_tail(&self, a: usize, modulus: usize) -> Result<Path2> {
        if a > self.len() {
            return Err(Error::InvalidParameter(format!("position {a} past the end")));
        }
        let w = self.heights[a];
        if !on_wall(w, modulus) {
            return Err(Error::NotOnWall { position: a });
        }
        let mut heights = self.heights.clone();
        for h in &mut heights[a + 1..] {
            *h = 2 * w - *h;
        }
        Self::from_heights(heights)
    }

    /// Reflects the open interior of `π[start, end]` about `π(start)`;
    /// requires `π(start) = π(end)`.
    pub(crate) fn reflect_segment(&mut self, start: usize, end: usize) {
        let w = self.heights[start];
        debug_assert_eq!(w, self.heights[end]);
        for h in &mut self.heights[start + 1..end] {
            *h = 2 * w - *h;
        }
        debug_assert!(self.heights.iter().all(|h| *h >= 0));
    }

    /// `π[start, end]`.
    pub fn segment(&self, start: usize, end: usize) -> Result<Segment<'_>> {
        if start > end || end > self.len() {
            return Err(Error::InvalidParameter(format!(
                "segment [{start}, {end}] outside [0, {}]",
                self.len()
            )));
        }
        Ok(Segment {
            parent: self,
            start,
            end,
        })
    }
}

/// Degree of a `k = 2` step from height `u` to height `v`.
pub fn step_degree(u: i64, v: i64, e: usize) -> i64 {
    if v < u && on_wall(u, e) {
        1
    } else if v < u && on_wall(v, e) {
        -1
    } else {
        0
    }
}

/// All dominant paths with `n` steps, ordered lexicographically with `+`
/// before `-` (the column-word order of the tableaux).
pub fn dominant_paths(n: usize) -> Vec<Path2> {
    let mut out = Vec::new();
    let mut heights = vec![0i64];
    fn go(n: usize, heights: &mut Vec<i64>, out: &mut Vec<Path2>) {
        let a = heights.len() - 1;
        if a == n {
            out.push(Path2 {
                heights: heights.clone(),
            });
            return;
        }
        let h = heights[a];
        for next in [h + 1, h - 1] {
            if next >= 0 {
                heights.push(next);
                go(n, heights, out);
                heights.pop();
            }
        }
    }
    go(n, &mut heights, &mut out);
    out
}

/// Dominant paths with `n` steps ending at height `y`, i.e. `Std((2^x, 1^y))`
/// with `2x + y = n`, in column-word order.
pub fn dominant_paths_to(n: usize, y: usize) -> Vec<Path2> {
    let mut out = Vec::new();
    if y > n || !(n - y).is_multiple_of(2) {
        return out;
    }
    let mut heights = vec![0i64];
    fn go(n: usize, target: i64, heights: &mut Vec<i64>, out: &mut Vec<Path2>) {
        let a = heights.len() - 1;
        let h = heights[a];
        if a == n {
            out.push(Path2 {
                heights: heights.clone(),
            });
            return;
        }
        let rem = (n - a - 1) as i64;
        for next in [h + 1, h - 1] {
            if next >= 0 && (next - target).abs() <= rem {
                heights.push(next);
                go(n, target, heights, out);
                heights.pop();
            }
        }
    }
    go(n, y as i64, &mut heights, &mut out);
    out
}

/// The paths of `Std(λ)` for a two-column shape `λ`.
pub fn paths_of_shape(shape: &Partition) -> Result<Vec<Path2>> {
    let (_, y) = shape.require_two_column()?;
    Ok(dominant_paths_to(shape.size(), y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcSign {
    /// Interior strictly above the wall.
    Positive,
    /// Interior strictly below the wall.
    Negative,
}

/// An arc `π[start, end]` on the wall `H_wall` at height `wall·e - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arc {
    pub start: usize,
    pub end: usize,
    pub wall: usize,
    pub height: i64,
    pub sign: ArcSign,
}

/// The restriction `π[start, end]` of a path.
#[derive(Debug, Clone, Copy)]
pub struct Segment<'a> {
    parent: &'a Path2,
    start: usize,
    end: usize,
}

impl<'a> Segment<'a> {
    pub fn parent(&self) -> &'a Path2 {
        self.parent
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn heights(&self) -> &'a [i64] {
        &self.parent.heights[self.start..=self.end]
    }

    /// Sum of the step degrees inside the segment.
    pub fn degree(&self, e: usize) -> i64 {
        self.heights()
            .windows(2)
            .map(|w| step_degree(w[0], w[1], e))
            .sum()
    }

    /// Both ends on the same wall and no wall hit in between.
    pub fn is_arc(&self, e: usize) -> bool {
        let hs = self.heights();
        hs.len() >= 3
            && hs[0] == hs[hs.len() - 1]
            && on_wall(hs[0], e)
            && hs[1..hs.len() - 1].iter().all(|h| !on_wall(*h, e))
    }
}

impl fmt::Display for Path2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_word())
    }
}

impl Serialize for Path2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
