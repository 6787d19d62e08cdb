use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{GroundSet, Label, Pair};
use crate::error::{Error, Result};

/// Ordered list of disjoint nonempty blocks; each block is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Label>>", into = "Vec<Vec<Label>>")]
pub struct SetComposition {
    parts: Vec<Vec<Label>>,
}

/// The `A`-ascents, `A`-equalities and `A`-inversions of a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscEqInv {
    pub asc: BTreeSet<Pair>,
    pub eq: BTreeSet<Pair>,
    pub inv: BTreeSet<Pair>,
}

impl SetComposition {
    pub fn new(parts: Vec<Vec<Label>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut sorted = Vec::with_capacity(parts.len());
        for mut part in parts {
            if part.is_empty() {
                return Err(Error::InvalidComposition("empty block".into()));
            }
            part.sort_unstable();
            for l in &part {
                if !seen.insert(*l) {
                    return Err(Error::InvalidComposition(format!(
                        "label {l} appears twice"
                    )));
                }
            }
            sorted.push(part);
        }
        Ok(Self { parts: sorted })
    }

    /// The composition with zero parts.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// One block containing every label; `labels` must be nonempty unless the
    /// result should be the empty composition.
    pub fn single(labels: &[Label]) -> Self {
        if labels.is_empty() {
            return Self::empty();
        }
        Self::new(vec![labels.to_vec()]).expect("single block")
    }

    /// `(I, Iᶜ)` with empty blocks dropped.
    pub fn split(first: &[Label], second: &[Label]) -> Result<Self> {
        Self::new(
            [first, second]
                .into_iter()
                .filter(|b| !b.is_empty())
                .map(<[Label]>::to_vec)
                .collect(),
        )
    }

    pub fn parts(&self) -> &[Vec<Label>] {
        &self.parts
    }

    /// `ℓ(A)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.parts.iter().flatten().copied())
    }

    /// Index of the block containing `l`.
    pub fn block_of(&self, l: Label) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&l).is_ok())
    }

    fn same_ground(&self, other: &SetComposition) -> Result<GroundSet> {
        let (g, h) = (self.ground(), other.ground());
        if g != h {
            return Err(Error::GroundMismatch {
                left: g.labels().to_vec(),
                right: h.labels().to_vec(),
            });
        }
        Ok(g)
    }

    pub fn concat(&self, other: &SetComposition) -> Result<SetComposition> {
        let (g, h) = (self.ground(), other.ground());
        if !g.is_disjoint(&h) {
            let common = g
                .labels()
                .iter()
                .copied()
                .filter(|l| h.contains(*l))
                .collect();
            return Err(Error::OverlappingGround(common));
        }
        Ok(Self {
            parts: self
                .parts
                .iter()
                .chain(other.parts.iter())
                .cloned()
                .collect(),
        })
    }

    /// `(C_1 ∩ I, ..., C_ℓ ∩ I)` with empty blocks removed.
    pub fn restrict(&self, sub: &[Label]) -> Result<SetComposition> {
        self.ground().check_subset(sub)?;
        let parts = self
            .parts
            .iter()
            .map(|p| {
                p.iter()
                    .copied()
                    .filter(|l| sub.contains(l))
                    .collect::<Vec<_>>()
            })
            .filter(|p| !p.is_empty())
            .collect();
        Ok(Self { parts })
    }

    /// True iff `self = self|_{A_1} · ... · self|_{A_ℓ}`.
    pub fn refines(&self, coarser: &SetComposition) -> Result<bool> {
        self.same_ground(coarser)?;
        Ok(coarser.tits(self)? == *self)
    }

    /// `A ∧ B = B|_{A_1} · ... · B|_{A_ℓ(A)}` with `A = self`.
    pub fn tits(&self, other: &SetComposition) -> Result<SetComposition> {
        self.same_ground(other)?;
        let mut parts = Vec::new();
        for block in &self.parts {
            parts.extend(other.restrict(block)?.parts);
        }
        Ok(Self { parts })
    }

    pub fn asc_eq_inv(&self) -> AscEqInv {
        let mut out = AscEqInv {
            asc: BTreeSet::new(),
            eq: BTreeSet::new(),
            inv: BTreeSet::new(),
        };
        for (a, pa) in self.parts.iter().enumerate() {
            for (b, pb) in self.parts.iter().enumerate() {
                let target = match a.cmp(&b) {
                    std::cmp::Ordering::Less => &mut out.asc,
                    std::cmp::Ordering::Equal => &mut out.eq,
                    std::cmp::Ordering::Greater => &mut out.inv,
                };
                for &i in pa {
                    for &j in pb {
                        target.insert((i, j));
                    }
                }
            }
        }
        out
    }

    pub fn asc(&self) -> BTreeSet<Pair> {
        self.asc_eq_inv().asc
    }

    pub fn eq_pairs(&self) -> BTreeSet<Pair> {
        self.asc_eq_inv().eq
    }

    /// Every set composition of `labels`.
    pub fn all(labels: &[Label]) -> Vec<SetComposition> {
        if labels.is_empty() {
            return vec![Self::empty()];
        }
        let n = labels.len();
        let mut out = Vec::new();
        // Assign each label a block index, keep surjective assignments onto 0..k.
        for k in 1..=n {
            for assignment in (0..n).map(|_| 0..k).multi_cartesian_product() {
                if (0..k).all(|b| assignment.contains(&b)) {
                    let parts = (0..k)
                        .map(|b| {
                            labels
                                .iter()
                                .zip(&assignment)
                                .filter(|(_, a)| **a == b)
                                .map(|(l, _)| *l)
                                .collect()
                        })
                        .collect();
                    out.push(Self::new(parts).expect("surjective assignment"));
                }
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<Label>>> for SetComposition {
    type Error = Error;
    fn try_from(parts: Vec<Vec<Label>>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<SetComposition> for Vec<Vec<Label>> {
    fn from(c: SetComposition) -> Self {
        c.parts
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self
            .parts
            .iter()
            .map(|p| format!("{{{}}}", p.iter().join(",")))
            .join(",");
        write!(f, "({blocks})")
    }
}
