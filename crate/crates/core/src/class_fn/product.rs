use std::sync::Arc;

use num_traits::Zero;

use super::{ClassFunction, ClassMap, Transfer};
use crate::combinatorics::{complement, interval, Label};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::matrix::FqMatrix;
use crate::scalar::Scalar;

/// A class function on `G × H`, stored on pairs of classes.
#[derive(Clone)]
pub struct ProductClassFunction<S> {
    left: Arc<GroupTable>,
    right: Arc<GroupTable>,
    values: Vec<S>,
}

impl<S: Scalar> ProductClassFunction<S> {
    pub fn zero(left: Arc<GroupTable>, right: Arc<GroupTable>) -> Self {
        let values = vec![S::zero(); left.class_count() * right.class_count()];
        Self {
            left,
            right,
            values,
        }
    }

    pub fn from_values(
        left: Arc<GroupTable>,
        right: Arc<GroupTable>,
        values: Vec<S>,
    ) -> Result<Self> {
        if values.len() != left.class_count() * right.class_count() {
            return Err(Error::Precondition(format!(
                "{} values for a product of class counts",
                values.len()
            )));
        }
        Ok(Self {
            left,
            right,
            values,
        })
    }

    /// `ψ ⊗ φ`
    pub fn tensor(psi: &ClassFunction<S>, phi: &ClassFunction<S>) -> Self {
        let values = psi
            .values()
            .iter()
            .flat_map(|a| phi.values().iter().map(move |b| a.clone() * b.clone()))
            .collect();
        Self {
            left: psi.group().clone(),
            right: phi.group().clone(),
            values,
        }
    }

    pub fn indicator(left: Arc<GroupTable>, right: Arc<GroupTable>, a: u32, b: u32) -> Self {
        let mut f = Self::zero(left, right);
        let idx = f.index(a, b);
        f.values[idx] = S::one();
        f
    }

    fn index(&self, a: u32, b: u32) -> usize {
        a as usize * self.right.class_count() + b as usize
    }

    pub fn left(&self) -> &Arc<GroupTable> {
        &self.left
    }

    pub fn right(&self) -> &Arc<GroupTable> {
        &self.right
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn value(&self, a: u32, b: u32) -> &S {
        &self.values[self.index(a, b)]
    }

    fn same_groups(&self, other: &Self) -> Result<()> {
        if self.left.label() != other.left.label() || self.right.label() != other.right.label() {
            return Err(Error::GroupMismatch(
                format!("{} x {}", self.left.label(), self.right.label()),
                format!("{} x {}", other.left.label(), other.right.label()),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_groups(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self {
            left: self.left.clone(),
            right: self.right.clone(),
            values,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            left: self.left.clone(),
            right: self.right.clone(),
            values: self.values.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `(f ⊗ g)` applied to `self`.
    pub fn map_factors(&self, left_map: &ClassMap, right_map: &ClassMap) -> Result<Self> {
        if left_map.source().label() != self.left.label()
            || right_map.source().label() != self.right.label()
        {
            return Err(Error::GroupMismatch(
                format!("{} x {}", self.left.label(), self.right.label()),
                format!(
                    "{} x {}",
                    left_map.source().label(),
                    right_map.source().label()
                ),
            ));
        }
        let (nl, nr) = (self.left.class_count(), self.right.class_count());
        let rows: Vec<Vec<S>> = (0..nl)
            .map(|a| {
                right_map
                    .transfer()
                    .apply_values(&self.values[a * nr..(a + 1) * nr])
            })
            .collect();
        let nr2 = right_map.target().class_count();
        let nl2 = left_map.target().class_count();
        let mut values = vec![S::zero(); nl2 * nr2];
        for b in 0..nr2 {
            let column: Vec<S> = rows.iter().map(|r| r[b].clone()).collect();
            for (a, v) in left_map
                .transfer()
                .apply_values(&column)
                .into_iter()
                .enumerate()
            {
                values[a * nr2 + b] = v;
            }
        }
        Ok(Self {
            left: left_map.target().clone(),
            right: right_map.target().clone(),
            values,
        })
    }

    /// `swap ∘`: a class function on `H × G`.
    pub fn swap(&self) -> Self {
        let (nl, nr) = (self.left.class_count(), self.right.class_count());
        let mut values = Vec::with_capacity(nl * nr);
        for b in 0..nr {
            for a in 0..nl {
                values.push(self.values[a * nr + b].clone());
            }
        }
        Self {
            left: self.right.clone(),
            right: self.left.clone(),
            values,
        }
    }
}

impl<S: Scalar> PartialEq for ProductClassFunction<S> {
    fn eq(&self, other: &Self) -> bool {
        self.left.label() == other.left.label()
            && self.right.label() == other.right.label()
            && self.values == other.values
    }
}

impl<S: Scalar> std::fmt::Debug for ProductClassFunction<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vals: Vec<String> = self.values.iter().map(Scalar::render).collect();
        write!(
            f,
            "{} x {}[{}]",
            self.left.label(),
            self.right.label(),
            vals.join(", ")
        )
    }
}

/// The isomorphism between a block-diagonal group on `I ⊔ Iᶜ ⊆ [n]` and the
/// product of its relabelled blocks, in both directions.
#[derive(Debug)]
pub struct Straightening {
    whole: Arc<GroupTable>,
    left: Arc<GroupTable>,
    right: Arc<GroupTable>,
    first: Vec<Label>,
    second: Vec<Label>,
    forward: Transfer,
    backward: Transfer,
}

impl Straightening {
    /// `whole` must consist of block-diagonal matrices for `(first, [n] \ first)`
    /// whose blocks, read in increasing label order, are exactly the elements
    /// of `left` and `right`.
    pub fn new(
        whole: Arc<GroupTable>,
        left: Arc<GroupTable>,
        right: Arc<GroupTable>,
        first: &[Label],
    ) -> Result<Self> {
        let n = whole.n();
        let mut first = first.to_vec();
        first.sort_unstable();
        let second = complement(&interval(n), &first);
        if whole.order() != left.order() * right.order() {
            return Err(Error::NotStructurePreserving(format!(
                "{} is not {} x {}",
                whole.label(),
                left.label(),
                right.label()
            )));
        }
        let nr = right.class_count();
        let mut forward_picks = vec![0; left.class_count() * nr];
        for a in 0..left.class_count() as u32 {
            for b in 0..nr as u32 {
                let g = embed(
                    n,
                    &first,
                    &second,
                    left.class_rep_matrix(a),
                    right.class_rep_matrix(b),
                );
                forward_picks[a as usize * nr + b as usize] = whole
                    .class_of_matrix(&g)
                    .ok_or_else(|| Error::NotInGroup(g.digits(), whole.label().to_string()))?;
            }
        }
        let mut backward_picks = Vec::with_capacity(whole.class_count());
        for c in 0..whole.class_count() as u32 {
            let g = whole.class_rep_matrix(c);
            let a = left.class_of_matrix(&g.block(&first));
            let b = right.class_of_matrix(&g.block(&second));
            match (a, b) {
                (Some(a), Some(b))
                    if embed(n, &first, &second, &g.block(&first), &g.block(&second)) == *g =>
                {
                    backward_picks.push(a * nr as u32 + b)
                }
                _ => {
                    return Err(Error::NotInGroup(
                        g.digits(),
                        format!("{} x {}", left.label(), right.label()),
                    ))
                }
            }
        }
        Ok(Self {
            forward: Transfer::selection(whole.class_count(), forward_picks),
            backward: Transfer::selection(left.class_count() * nr, backward_picks),
            whole,
            left,
            right,
            first,
            second,
        })
    }

    pub fn whole(&self) -> &Arc<GroupTable> {
        &self.whole
    }

    pub fn first(&self) -> &[Label] {
        &self.first
    }

    pub fn second(&self) -> &[Label] {
        &self.second
    }

    /// `st`
    pub fn straighten<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<ProductClassFunction<S>> {
        if psi.group().label() != self.whole.label() {
            return Err(Error::GroupMismatch(
                psi.group().label().to_string(),
                self.whole.label().to_string(),
            ));
        }
        ProductClassFunction::from_values(
            self.left.clone(),
            self.right.clone(),
            self.forward.apply_values(psi.values()),
        )
    }

    /// `st⁻¹`
    pub fn unstraighten<S: Scalar>(&self, x: &ProductClassFunction<S>) -> Result<ClassFunction<S>> {
        if x.left.label() != self.left.label() || x.right.label() != self.right.label() {
            return Err(Error::GroupMismatch(
                format!("{} x {}", x.left.label(), x.right.label()),
                format!("{} x {}", self.left.label(), self.right.label()),
            ));
        }
        ClassFunction::from_class_values(self.whole.clone(), self.backward.apply_values(&x.values))
    }
}

fn embed(n: usize, first: &[Label], second: &[Label], a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
    let mut g = FqMatrix::zero(n, a.field());
    for (labels, m) in [(first, a), (second, b)] {
        for (r, i) in labels.iter().enumerate() {
            for (s, j) in labels.iter().enumerate() {
                g.set(*i, *j, m.get(r as Label + 1, s as Label + 1));
            }
        }
    }
    g
}
