use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::partition::{Node, Partition};
use crate::algebra::ResidueSequence;
use crate::error::{Error, Result};

/// A standard tableau, stored as the node occupied by each entry:
/// `cells[a - 1]` is the node holding `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: Partition,
    cells: Vec<Node>,
}

impl StandardTableau {
    /// Validates that every initial segment `1..=m` fills a partition shape,
    /// which is equivalent to standardness.
    pub fn from_cells(cells: Vec<Node>) -> Result<Self> {
        let mut rows: Vec<usize> = Vec::new();
        for (idx, node) in cells.iter().enumerate() {
            let r = node.row;
            if r == 0 || node.col == 0 || r > rows.len() + 1 {
                return Err(Error::InvalidTableau(format!(
                    "entry {} at {node} leaves a gap",
                    idx + 1
                )));
            }
            let current = rows.get(r - 1).copied().unwrap_or(0);
            let above = if r == 1 { usize::MAX } else { rows[r - 2] };
            if node.col != current + 1 || above <= current {
                return Err(Error::InvalidTableau(format!(
                    "entry {} at {node} breaks standardness",
                    idx + 1
                )));
            }
            if r > rows.len() {
                rows.push(1);
            } else {
                rows[r - 1] += 1;
            }
        }
        Ok(Self {
            shape: Partition::from_parts_unchecked(rows),
            cells,
        })
    }

    /// Builds a tableau from its rows, e.g. `[[1,2,3,5],[4,7,8],[6]]`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut cells = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                if entry == 0 || entry > n || cells[entry - 1].is_some() {
                    return Err(Error::InvalidTableau(format!(
                        "entries must be a permutation of 1..={n}"
                    )));
                }
                cells[entry - 1] = Some(Node::new(r + 1, c + 1));
            }
        }
        let cells: Vec<Node> = cells.into_iter().map(|c| c.expect("filled")).collect();
        let t = Self::from_cells(cells)?;
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if t.shape.parts() != lens.as_slice() {
            return Err(Error::InvalidTableau("rows do not form a partition".into()));
        }
        Ok(t)
    }

    /// Builds a tableau from its column word: `word[a - 1]` is the column
    /// (1-based) containing `a`.
    pub fn from_column_word(word: &[usize]) -> Result<Self> {
        let mut heights: Vec<usize> = Vec::new();
        let mut cells = Vec::with_capacity(word.len());
        for (idx, &c) in word.iter().enumerate() {
            if c == 0 || c > heights.len() + 1 {
                return Err(Error::InvalidTableau(format!(
                    "entry {} placed in column {c} leaves a gap",
                    idx + 1
                )));
            }
            if c > heights.len() {
                heights.push(0);
            }
            heights[c - 1] += 1;
            cells.push(Node::new(heights[c - 1], c));
        }
        Self::from_cells(cells)
    }

    pub(crate) fn from_column_word_unchecked(word: &[usize], shape: Partition) -> Self {
        let mut heights = vec![0usize; shape.num_columns()];
        let cells = word
            .iter()
            .map(|&c| {
                heights[c - 1] += 1;
                Node::new(heights[c - 1], c)
            })
            .collect();
        Self { shape, cells }
    }

    pub fn empty() -> Self {
        Self {
            shape: Partition::empty(),
            cells: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Node holding entry `a` (1-based).
    pub fn node(&self, a: usize) -> Node {
        self.cells[a - 1]
    }

    pub fn cells(&self) -> &[Node] {
        &self.cells
    }

    pub fn column_word(&self) -> Vec<usize> {
        self.cells.iter().map(|n| n.col).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|p| vec![0; *p]).collect();
        for (idx, node) in self.cells.iter().enumerate() {
            rows[node.row - 1][node.col - 1] = idx + 1;
        }
        rows
    }

    /// Entries in reading order (row by row, left to right).
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows().into_iter().flatten().collect()
    }

    /// `t↓_m`: the subtableau holding `1..=m`.
    pub fn restrict(&self, m: usize) -> StandardTableau {
        let cells = self.cells[..m].to_vec();
        let shape = self.shape_at(m);
        Self { shape, cells }
    }

    /// Shape of `t↓_m`.
    pub fn shape_at(&self, m: usize) -> Partition {
        let mut rows: Vec<usize> = Vec::new();
        for node in &self.cells[..m] {
            if node.row > rows.len() {
                rows.push(0);
            }
            rows[node.row - 1] += 1;
        }
        Partition::from_parts_unchecked(rows)
    }

    pub fn residue_sequence(&self, e: usize) -> ResidueSequence {
        ResidueSequence::from_raw(e, self.cells.iter().map(|n| n.residue_value(e)).collect())
    }

    /// The recursive degree `deg_e(t) = d_{t(n)}(λ) + deg_e(t↓_{n-1})`.
    pub fn degree(&self, e: usize) -> i64 {
        let mut shape = Partition::empty();
        let mut deg = 0;
        for node in &self.cells {
            shape = shape.with_node_added(node.row);
            deg += shape.degree_contribution(*node, e);
        }
        deg
    }

    /// Dominance `self ⊵ other`: `Shape(self↓_m) ⊵ Shape(other↓_m)` for every `m`.
    pub fn dominates(&self, other: &StandardTableau) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                left: self.shape.clone(),
                right: other.shape.clone(),
            });
        }
        let mut mine: Vec<usize> = Vec::new();
        let mut theirs: Vec<usize> = Vec::new();
        for (a, b) in self.cells.iter().zip(&other.cells) {
            bump(&mut mine, a.row);
            bump(&mut theirs, b.row);
            let (mut sa, mut sb) = (0, 0);
            for r in 0..mine.len().max(theirs.len()) {
                sa += mine.get(r).copied().unwrap_or(0);
                sb += theirs.get(r).copied().unwrap_or(0);
                if sa < sb {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `t^λ`: rows filled successively.
    pub fn row_filled(shape: &Partition) -> StandardTableau {
        let cells = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
            .collect();
        Self {
            shape: shape.clone(),
            cells,
        }
    }

    /// `t_λ`: columns filled successively from the left.
    pub fn column_filled(shape: &Partition) -> StandardTableau {
        let cells = shape
            .conjugate()
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(c, &len)| (1..=len).map(move |r| Node::new(r, c + 1)))
            .collect();
        Self {
            shape: shape.clone(),
            cells,
        }
    }
}

fn bump(rows: &mut Vec<usize>, r: usize) {
    if r > rows.len() {
        rows.push(0);
    }
    rows[r - 1] += 1;
}

/// `(t^λ, t_λ)`.
pub fn canonical_tableaux(shape: &Partition) -> (StandardTableau, StandardTableau) {
    (
        StandardTableau::row_filled(shape),
        StandardTableau::column_filled(shape),
    )
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `/`, e.g. `1 2 3 5/4 7 8/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// Column words for tableaux with at most nine columns, as digit strings.
pub fn column_word_string(word: &[usize]) -> String {
    word.iter().map(|c| c.to_string()).collect::<Vec<_>>().concat()
}

impl Serialize for StandardTableau {
    /// `{"shape": [..], "entries": [..reading order..], "column_word": "1121.."}`;
    /// `column_word` is omitted for shapes with more than nine columns.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let narrow = self.shape.num_columns() <= 9;
        let mut st = serializer.serialize_struct("StandardTableau", if narrow { 3 } else { 2 })?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("entries", &self.reading_word())?;
        if narrow {
            st.serialize_field("column_word", &column_word_string(&self.column_word()))?;
        }
        st.end()
    }
}
