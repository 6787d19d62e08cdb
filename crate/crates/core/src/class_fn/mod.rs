//! Class functions on enumerated groups and the maps between them.

mod product;
mod transfer;

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use product::{ProductClassFunction, Straightening};
pub use transfer::{ClassMap, ComposedMap, Split, Transfer};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::matrix::FqMatrix;
use crate::scalar::Scalar;

/// A function on a group, constant on conjugacy classes; stored per class.
#[derive(Clone)]
pub struct ClassFunction<S> {
    group: Arc<GroupTable>,
    values: Vec<S>,
}

/// Serialized class function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub group_id: String,
    pub values: Vec<ClassValueJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValueJson {
    pub class_rep: String,
    pub value: String,
}

impl<S: Scalar> ClassFunction<S> {
    /// `values[c]` is the value on class `c`.
    pub fn from_class_values(group: Arc<GroupTable>, values: Vec<S>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::Precondition(format!(
                "{} values for {} classes of {}",
                values.len(),
                group.class_count(),
                group.label()
            )));
        }
        Ok(Self { group, values })
    }

    /// Checks that per-element values are constant on classes.
    pub fn from_element_values(group: Arc<GroupTable>, values: &[S]) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::Precondition(format!(
                "{} values for {} elements",
                values.len(),
                group.order()
            )));
        }
        let mut per_class = Vec::with_capacity(group.class_count());
        for class in group.classes() {
            let v = &values[class[0] as usize];
            if class.iter().any(|i| &values[*i as usize] != v) {
                return Err(Error::NotClassFunction(group.label().to_string()));
            }
            per_class.push(v.clone());
        }
        Ok(Self {
            group,
            values: per_class,
        })
    }

    /// Evaluates `f` on each element and checks the result is a class function.
    pub fn from_fn(group: Arc<GroupTable>, f: impl Fn(&FqMatrix) -> S) -> Result<Self> {
        let values: Vec<S> = group.elements().iter().map(f).collect();
        Self::from_element_values(group, &values)
    }

    pub fn zero(group: Arc<GroupTable>) -> Self {
        let values = vec![S::zero(); group.class_count()];
        Self { group, values }
    }

    /// The trivial character `𝟙`.
    pub fn one(group: Arc<GroupTable>) -> Self {
        let values = vec![S::one(); group.class_count()];
        Self { group, values }
    }

    pub fn class_indicator(group: Arc<GroupTable>, c: u32) -> Self {
        let mut f = Self::zero(group);
        f.values[c as usize] = S::one();
        f
    }

    /// Every class indicator, in class order.
    pub fn indicator_basis(group: &Arc<GroupTable>) -> Vec<Self> {
        (0..group.class_count() as u32)
            .map(|c| Self::class_indicator(group.clone(), c))
            .collect()
    }

    /// Indicator of a subgroup that is a union of classes of `group`.
    pub fn subgroup_indicator(group: Arc<GroupTable>, sub: &GroupTable) -> Result<Self> {
        if !sub.is_subset_of(&group) {
            return Err(Error::NotSubgroup(
                sub.label().to_string(),
                group.label().to_string(),
            ));
        }
        Self::from_fn(
            group,
            |g| if sub.contains(g) { S::one() } else { S::zero() },
        )
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn class_value(&self, c: u32) -> &S {
        &self.values[c as usize]
    }

    /// Value at the element with index `i`.
    pub fn value(&self, i: u32) -> &S {
        &self.values[self.group.class_of(i) as usize]
    }

    pub fn value_at(&self, g: &FqMatrix) -> Option<&S> {
        self.group
            .class_of_matrix(g)
            .map(|c| &self.values[c as usize])
    }

    /// Per-element values in element order.
    pub fn element_values(&self) -> Vec<S> {
        (0..self.group.order() as u32)
            .map(|i| self.value(i).clone())
            .collect()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group.label() != other.group.label() || self.group.field() != other.group.field() {
            return Err(Error::GroupMismatch(
                self.group.label().to_string(),
                other.group.label().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self {
            group: self.group.clone(),
            values,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Self {
            group: self.group.clone(),
            values,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `(1/|G|) Σ_g ψ(g) φ(g)`; values are real so no conjugation is applied.
    pub fn inner_product(&self, other: &Self) -> Result<S> {
        self.same_group(other)?;
        let mut acc = S::zero();
        for (c, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            acc = acc + S::from_int(self.group.class_size(c as u32) as i64) * a.clone() * b.clone();
        }
        Ok(acc / S::from_int(self.group.order() as i64))
    }

    pub fn to_json(&self) -> ClassFunctionJson {
        ClassFunctionJson {
            group_id: self.group.label().to_string(),
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(c, v)| ClassValueJson {
                    class_rep: self.group.class_rep_matrix(c as u32).digits(),
                    value: v.render(),
                })
                .collect(),
        }
    }

    /// Values for classes not listed are zero.
    pub fn from_json(group: Arc<GroupTable>, json: &ClassFunctionJson) -> Result<Self> {
        if json.group_id != group.label() {
            return Err(Error::GroupMismatch(
                json.group_id.clone(),
                group.label().to_string(),
            ));
        }
        let mut f = Self::zero(group.clone());
        for entry in &json.values {
            let g = FqMatrix::parse_digits(&entry.class_rep, group.field())?;
            let c = group.class_of_matrix(&g).ok_or_else(|| {
                Error::NotInGroup(entry.class_rep.clone(), group.label().to_string())
            })?;
            if group.class_rep(c) != group.index_of(&g).expect("member") {
                return Err(Error::Parse(format!(
                    "{} is not a class representative",
                    entry.class_rep
                )));
            }
            f.values[c as usize] =
                S::parse(&entry.value).ok_or_else(|| Error::Parse(entry.value.clone()))?;
        }
        Ok(f)
    }
}

impl<S: Scalar> PartialEq for ClassFunction<S> {
    fn eq(&self, other: &Self) -> bool {
        self.group.label() == other.group.label() && self.values == other.values
    }
}

impl<S: Scalar> std::fmt::Debug for ClassFunction<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vals: Vec<String> = self.values.iter().map(Scalar::render).collect();
        write!(f, "{}[{}]", self.group.label(), vals.join(", "))
    }
}

/// `Res^G_K ψ`
pub fn restrict<S: Scalar>(
    psi: &ClassFunction<S>,
    sub: &Arc<GroupTable>,
) -> Result<ClassFunction<S>> {
    ClassMap::restriction(psi.group(), sub)?.apply(psi)
}

/// `Ind_K^G ψ` with the `1/|K|` normalization.
pub fn induce<S: Scalar>(
    psi: &ClassFunction<S>,
    whole: &Arc<GroupTable>,
) -> Result<ClassFunction<S>> {
    ClassMap::induction(psi.group(), whole)?.apply(psi)
}

/// `Inf_L^K ψ` for `K = L ⋉ H`.
pub fn inflate<S: Scalar>(psi: &ClassFunction<S>, split: &Split) -> Result<ClassFunction<S>> {
    ClassMap::inflation(split).apply(psi)
}

/// `Def_L^K ψ` for `K = L ⋉ H`.
pub fn deflate<S: Scalar>(psi: &ClassFunction<S>, split: &Split) -> Result<ClassFunction<S>> {
    ClassMap::deflation(split).apply(psi)
}
