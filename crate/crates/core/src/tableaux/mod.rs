//! Partitions, Young diagrams and standard tableaux of arbitrary shape.

mod enumerate;
mod partition;
mod tableau;

pub use enumerate::{enumerate_std, enumerate_std_with_residue, StdIter};
pub use partition::{
    partitions, partitions_max_part, partitions_two_column, restricted_two_column, Node,
    Partition,
};
pub use tableau::{canonical_tableaux, column_word_string, StandardTableau};
