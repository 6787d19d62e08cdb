use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::combinatorics::{Label, Pair, PartialOrder, SetComposition};
use crate::error::{Error, Result};
use crate::matrix::{FqMatrix, PrimeField};

/// Support of a pattern subgroup of `GL_n`: `g` belongs iff `g - 1` vanishes
/// outside the allowed strict pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternDescriptor {
    n: usize,
    allowed: BTreeSet<Pair>,
}

impl PatternDescriptor {
    /// Rejects loops, labels outside `[n]` and sets not closed under
    /// `(i, j), (j, k) ↦ (i, k)`.
    pub fn new<I: IntoIterator<Item = Pair>>(n: usize, allowed: I) -> Result<Self> {
        let allowed: BTreeSet<Pair> = allowed.into_iter().collect();
        let render = |a: &BTreeSet<Pair>| a.iter().map(|(i, j)| format!("{i}<{j}")).join(",");
        for &(i, j) in &allowed {
            if i == j || i == 0 || j == 0 || i as usize > n || j as usize > n {
                return Err(Error::PatternNotClosed(render(&allowed)));
            }
        }
        for &(i, j) in &allowed {
            for &(j2, k) in allowed.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(j, j2);
                if !allowed.contains(&(i, k)) {
                    return Err(Error::PatternNotClosed(render(&allowed)));
                }
            }
        }
        Ok(Self { n, allowed })
    }

    /// `UT(π)` for an order on `[n]`.
    pub fn from_order(po: &PartialOrder) -> Result<Self> {
        if !po.ground().is_interval() {
            return Err(Error::Precondition(format!(
                "ground {:?} is not [n]",
                po.ground().labels()
            )));
        }
        Self::new(po.ground().len(), po.strict_pairs())
    }

    /// `UT_n`
    pub fn upper_triangular(n: usize) -> Self {
        Self {
            n,
            allowed: (1..=n as Label).tuple_combinations().collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            allowed: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn allowed(&self) -> &BTreeSet<Pair> {
        &self.allowed
    }

    pub fn contains(&self, g: &FqMatrix) -> bool {
        let n = self.n as Label;
        g.n() == self.n
            && (1..=n).all(|i| {
                (1..=n).all(|j| {
                    let v = g.get(i, j);
                    if i == j {
                        v == 1
                    } else {
                        v == 0 || self.allowed.contains(&(i, j))
                    }
                })
            })
    }

    /// `q^{#allowed}`
    pub fn order(&self, q: u32) -> u128 {
        (q as u128).pow(self.allowed.len() as u32)
    }

    /// All members, sorted by row-major entries.
    pub fn enumerate(&self, field: PrimeField) -> Vec<FqMatrix> {
        let pairs: Vec<Pair> = self.allowed.iter().copied().collect();
        let p = field.p() as u8;
        let mut out = Vec::with_capacity(self.order(field.p()) as usize);
        let mut values = vec![0u8; pairs.len()];
        loop {
            let mut g = FqMatrix::identity(self.n, field);
            for (pair, v) in pairs.iter().zip(&values) {
                g.set(pair.0, pair.1, *v);
            }
            out.push(g);
            // Odometer increment.
            let mut k = 0;
            loop {
                if k == values.len() {
                    out.sort_unstable();
                    return out;
                }
                values[k] += 1;
                if values[k] < p {
                    break;
                }
                values[k] = 0;
                k += 1;
            }
        }
    }

    /// Root elements `1 + E_{ij}` for every allowed pair.
    pub fn generators(&self, field: PrimeField) -> Vec<FqMatrix> {
        self.allowed
            .iter()
            .map(|(i, j)| FqMatrix::elementary(self.n, field, *i, *j, 1))
            .collect()
    }

    pub fn is_subpattern_of(&self, other: &PatternDescriptor) -> bool {
        self.n == other.n && self.allowed.is_subset(&other.allowed)
    }

    /// `UT(self) ⊴ UT(other)`: closure of `self` under composing with `other`
    /// on either side.
    pub fn is_normal_in(&self, other: &PatternDescriptor) -> bool {
        self.is_subpattern_of(other)
            && self.allowed.iter().all(|&(i, j)| {
                other.allowed.iter().all(|&(a, b)| {
                    (b != i || self.allowed.contains(&(a, j)))
                        && (a != j || self.allowed.contains(&(i, b)))
                })
            })
    }

    /// `(UL, UR, UP)` for the order `σ` and composition `A`:
    /// `σ ∩ Eq(A)`, `σ ∩ Asc(A)` and `σ ∩ (Eq(A) ∪ Asc(A))`.
    pub fn levi_radical_parabolic(
        sigma: &PartialOrder,
        a: &SetComposition,
    ) -> Result<(Self, Self, Self)> {
        if sigma.ground() != &a.ground() {
            return Err(Error::GroundMismatch {
                left: sigma.ground().labels().to_vec(),
                right: a.ground().labels().to_vec(),
            });
        }
        let stats = a.asc_eq_inv();
        let strict: BTreeSet<Pair> = sigma.strict_pairs().into_iter().collect();
        let n = sigma.ground().len();
        let levi = Self::new(n, strict.intersection(&stats.eq).copied())?;
        let radical = Self::new(n, strict.intersection(&stats.asc).copied())?;
        let parabolic = Self::new(n, strict.iter().copied().filter(|p| !stats.inv.contains(p)))?;
        Ok((levi, radical, parabolic))
    }

    /// Relabels every pair by `w` (`w[i - 1]` is the image of `i`).
    pub fn relabel(&self, w: &[Label]) -> Self {
        Self {
            n: self.n,
            allowed: self
                .allowed
                .iter()
                .map(|(i, j)| (w[*i as usize - 1], w[*j as usize - 1]))
                .collect(),
        }
    }
}

impl fmt::Display for PatternDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{};{}]",
            self.n,
            self.allowed
                .iter()
                .map(|(i, j)| format!("{i}<{j}"))
                .join(",")
        )
    }
}

/// Unique `(g_L, g_R)` with `g = g_L g_R`, `g_L ∈ UL(σ, A)`, `g_R ∈ UR(σ, A)`,
/// found by searching `UL` for the element making `g_L⁻¹ g` radical.
pub fn semidirect_factorize(
    g: &FqMatrix,
    sigma: &PartialOrder,
    a: &SetComposition,
) -> Result<(FqMatrix, FqMatrix)> {
    let (levi, radical, parabolic) = PatternDescriptor::levi_radical_parabolic(sigma, a)?;
    if !parabolic.contains(g) {
        return Err(Error::NotInGroup(g.digits(), format!("UP{parabolic}")));
    }
    let mut found = levi.enumerate(g.field()).into_iter().filter_map(|l| {
        let r = l.inverse().expect("unipotent").mul(g);
        radical.contains(&r).then_some((l, r))
    });
    let first = found
        .next()
        .ok_or_else(|| Error::NotComplement(format!("no factorization of {g:?}")))?;
    if found.next().is_some() {
        return Err(Error::NotComplement(format!(
            "factorization of {g:?} is not unique"
        )));
    }
    Ok(first)
}
