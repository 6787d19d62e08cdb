//! Label-level combinatorics: set compositions, partial and total orders,
//! natural unit interval orders and Dyck words.

mod composition;
mod nuio;
mod order;

pub use composition::{AscEqInv, SetComposition};
pub use nuio::{DyckWord, IncGraph, Nuio};
pub use order::{cano, GroundSet, LabelBijection, PartialOrder, TotalOrder};

pub type Label = u32;
pub type Pair = (Label, Label);

/// `{1, ..., n}`
pub fn interval(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

/// All subsets of `labels`, each sorted, in binary-counter order.
pub fn subsets(labels: &[Label]) -> Vec<Vec<Label>> {
    (0u64..(1u64 << labels.len()))
        .map(|mask| {
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, l)| *l)
                .collect()
        })
        .collect()
}

/// `labels \ sub`
pub fn complement(labels: &[Label], sub: &[Label]) -> Vec<Label> {
    labels
        .iter()
        .copied()
        .filter(|l| !sub.contains(l))
        .collect()
}
