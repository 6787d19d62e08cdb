use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;

use super::ClassFunction;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::matrix::FqMatrix;
use crate::scalar::Scalar;

/// Linear map between value vectors: `out[r] = scale[r] · Σ w · in[s]` over
/// the `(s, w)` entries of row `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    source_dim: usize,
    rows: Vec<Vec<(u32, u64)>>,
    scale: Vec<(u64, u64)>,
}

impl Transfer {
    pub(crate) fn new(
        source_dim: usize,
        rows: Vec<BTreeMap<u32, u64>>,
        scale: Vec<(u64, u64)>,
    ) -> Self {
        let scale = scale
            .into_iter()
            .map(|(a, b)| {
                let g = a.gcd(&b).max(1);
                (a / g, b / g)
            })
            .collect();
        Self {
            source_dim,
            rows: rows.into_iter().map(|r| r.into_iter().collect()).collect(),
            scale,
        }
    }

    /// Each target row reads one source entry.
    pub(crate) fn selection(source_dim: usize, picks: Vec<u32>) -> Self {
        let n = picks.len();
        Self {
            source_dim,
            rows: picks.into_iter().map(|s| vec![(s, 1)]).collect(),
            scale: vec![(1, 1); n],
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply_values<S: Scalar>(&self, input: &[S]) -> Vec<S> {
        debug_assert_eq!(input.len(), self.source_dim);
        self.rows
            .iter()
            .zip(&self.scale)
            .map(|(row, (num, den))| {
                let mut acc = S::zero();
                for (s, w) in row {
                    let v = &input[*s as usize];
                    acc = acc
                        + if *w == 1 {
                            v.clone()
                        } else {
                            S::from_int(*w as i64) * v.clone()
                        };
                }
                if (*num, *den) == (1, 1) {
                    acc
                } else {
                    acc * S::from_frac(*num as i64, *den as i64)
                }
            })
            .collect()
    }
}

/// `K = L ⋉ H`: `L` and `H` subgroups of `K`, `H` normal, `L ∩ H = 1`,
/// `|L||H| = |K|`.
#[derive(Debug)]
pub struct Split {
    whole: Arc<GroupTable>,
    levi: Arc<GroupTable>,
    kernel: Arc<GroupTable>,
    /// For each element `k = l·h` of `whole`, the index of `l` in `levi`.
    levi_part: Vec<u32>,
}

impl Split {
    pub fn new(
        whole: Arc<GroupTable>,
        levi: Arc<GroupTable>,
        kernel: Arc<GroupTable>,
    ) -> Result<Self> {
        for sub in [&levi, &kernel] {
            if !sub.is_subset_of(&whole) {
                return Err(Error::NotSubgroup(
                    sub.label().to_string(),
                    whole.label().to_string(),
                ));
            }
        }
        if !whole.normalizes(&kernel) {
            return Err(Error::NotNormal(
                kernel.label().to_string(),
                whole.label().to_string(),
            ));
        }
        let meet = levi
            .elements()
            .iter()
            .filter(|g| kernel.contains(g))
            .count();
        if meet != 1 || levi.order() * kernel.order() != whole.order() {
            return Err(Error::NotComplement(format!(
                "{} is not a complement of {} in {}",
                levi.label(),
                kernel.label(),
                whole.label()
            )));
        }
        let mut levi_part = vec![u32::MAX; whole.order()];
        for (li, l) in levi.elements().iter().enumerate() {
            for h in kernel.elements() {
                let k = whole.index_of(&l.mul(h)).expect("closed under products");
                levi_part[k as usize] = li as u32;
            }
        }
        Ok(Self {
            whole,
            levi,
            kernel,
            levi_part,
        })
    }

    pub fn whole(&self) -> &Arc<GroupTable> {
        &self.whole
    }

    pub fn levi(&self) -> &Arc<GroupTable> {
        &self.levi
    }

    pub fn kernel(&self) -> &Arc<GroupTable> {
        &self.kernel
    }

    /// `(l, h)` with `k = l·h`, as element indices in `levi` and `kernel`.
    pub fn factor(&self, k: u32) -> (u32, u32) {
        let l = self.levi_part[k as usize];
        let lm = self.levi.element(l);
        let h = lm.inverse().expect("invertible").mul(self.whole.element(k));
        (l, self.kernel.index_of(&h).expect("kernel element"))
    }
}

/// A linear map `cf(source) → cf(target)`.
#[derive(Clone, Debug)]
pub struct ClassMap {
    source: Arc<GroupTable>,
    target: Arc<GroupTable>,
    transfer: Transfer,
}

impl ClassMap {
    pub fn source(&self) -> &Arc<GroupTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    pub fn transfer(&self) -> &Transfer {
        &self.transfer
    }

    pub fn apply<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<ClassFunction<S>> {
        if psi.group().label() != self.source.label() {
            return Err(Error::GroupMismatch(
                psi.group().label().to_string(),
                self.source.label().to_string(),
            ));
        }
        Ok(ClassFunction {
            group: self.target.clone(),
            values: self.transfer.apply_values(psi.values()),
        })
    }

    pub fn identity(group: &Arc<GroupTable>) -> Self {
        Self {
            source: group.clone(),
            target: group.clone(),
            transfer: Transfer::selection(
                group.class_count(),
                (0..group.class_count() as u32).collect(),
            ),
        }
    }

    /// `Res^G_K`
    pub fn restriction(whole: &Arc<GroupTable>, sub: &Arc<GroupTable>) -> Result<Self> {
        if !sub.is_subset_of(whole) {
            return Err(Error::NotSubgroup(
                sub.label().to_string(),
                whole.label().to_string(),
            ));
        }
        let picks = (0..sub.class_count() as u32)
            .map(|c| {
                whole
                    .class_of_matrix(sub.class_rep_matrix(c))
                    .expect("subset")
            })
            .collect();
        Ok(Self {
            source: whole.clone(),
            target: sub.clone(),
            transfer: Transfer::selection(whole.class_count(), picks),
        })
    }

    /// `Ind_K^G ψ (c) = |G| / (|K| |c|) · Σ_{h ∈ K ∩ c} ψ(h)`.
    pub fn induction(sub: &Arc<GroupTable>, whole: &Arc<GroupTable>) -> Result<Self> {
        if !sub.is_subset_of(whole) {
            return Err(Error::NotSubgroup(
                sub.label().to_string(),
                whole.label().to_string(),
            ));
        }
        let mut rows = vec![BTreeMap::new(); whole.class_count()];
        for (i, h) in sub.elements().iter().enumerate() {
            let c = whole.class_of_matrix(h).expect("subset");
            *rows[c as usize].entry(sub.class_of(i as u32)).or_insert(0) += 1;
        }
        let scale = (0..whole.class_count() as u32)
            .map(|c| {
                (
                    whole.order() as u64,
                    (sub.order() * whole.class_size(c)) as u64,
                )
            })
            .collect();
        Ok(Self {
            source: sub.clone(),
            target: whole.clone(),
            transfer: Transfer::new(sub.class_count(), rows, scale),
        })
    }

    /// `Inf_L^K ψ (l·h) = ψ(l)`
    pub fn inflation(split: &Split) -> Self {
        let whole = split.whole();
        let picks = (0..whole.class_count() as u32)
            .map(|c| {
                split
                    .levi()
                    .class_of(split.levi_part[whole.class_rep(c) as usize])
            })
            .collect();
        Self {
            source: split.levi().clone(),
            target: whole.clone(),
            transfer: Transfer::selection(split.levi().class_count(), picks),
        }
    }

    /// `Def_L^K ψ (l) = (1/|H|) Σ_{h ∈ H} ψ(l·h)`
    pub fn deflation(split: &Split) -> Self {
        let (whole, levi, kernel) = (split.whole(), split.levi(), split.kernel());
        Self {
            source: whole.clone(),
            target: levi.clone(),
            transfer: coset_average(whole, levi, kernel),
        }
    }

    /// `g ↦ (1/|R|) Σ_{x ∈ R} ψ(g·x)` from `whole` to `levi`, without
    /// building the parabolic in between.
    pub fn coset_average(
        whole: &Arc<GroupTable>,
        levi: &Arc<GroupTable>,
        radical: &Arc<GroupTable>,
    ) -> Result<Self> {
        for sub in [levi, radical] {
            if !sub.is_subset_of(whole) {
                return Err(Error::NotSubgroup(
                    sub.label().to_string(),
                    whole.label().to_string(),
                ));
            }
        }
        Ok(Self {
            source: whole.clone(),
            target: levi.clone(),
            transfer: coset_average(whole, levi, radical),
        })
    }

    /// `ψ ↦ ψ ∘ f` for a homomorphism or antihomomorphism
    /// `f: domain → codomain`; the map runs `cf(codomain) → cf(domain)`.
    pub fn pullback(
        domain: &Arc<GroupTable>,
        codomain: &Arc<GroupTable>,
        f: impl Fn(&FqMatrix) -> FqMatrix,
    ) -> Result<Self> {
        let image: Vec<u32> = domain
            .elements()
            .iter()
            .map(|g| {
                codomain
                    .index_of(&f(g))
                    .ok_or_else(|| Error::NotInGroup(f(g).digits(), codomain.label().to_string()))
            })
            .collect::<Result<_>>()?;
        let not_preserving = || Error::NotStructurePreserving(domain.label().to_string());
        let gens: Vec<u32> = domain
            .generators()
            .iter()
            .map(|s| domain.index_of(s).expect("generator"))
            .collect();
        let mut hom = true;
        let mut antihom = true;
        for k in 0..domain.order() as u32 {
            for &s in &gens {
                let fks = image[domain.mul(k, s) as usize];
                let (fk, fs) = (image[k as usize], image[s as usize]);
                hom &= fks == codomain.mul(fk, fs);
                antihom &= fks == codomain.mul(fs, fk);
            }
            if !hom && !antihom {
                return Err(not_preserving());
            }
        }
        let mut picks = Vec::with_capacity(domain.class_count());
        for class in domain.classes() {
            let c = codomain.class_of(image[class[0] as usize]);
            if class
                .iter()
                .any(|i| codomain.class_of(image[*i as usize]) != c)
            {
                return Err(Error::NotClassFunction(domain.label().to_string()));
            }
            picks.push(c);
        }
        Ok(Self {
            source: codomain.clone(),
            target: domain.clone(),
            transfer: Transfer::selection(codomain.class_count(), picks),
        })
    }

    /// `self` after `first`.
    pub fn after(&self, first: &ClassMap) -> Result<ComposedMap> {
        ComposedMap::new(vec![first.clone(), self.clone()])
    }
}

fn coset_average(whole: &GroupTable, levi: &GroupTable, radical: &GroupTable) -> Transfer {
    let mut rows = vec![BTreeMap::new(); levi.class_count()];
    for (c, row) in rows.iter_mut().enumerate() {
        let g = levi.class_rep_matrix(c as u32);
        for x in radical.elements() {
            let k = whole
                .class_of_matrix(&g.mul(x))
                .expect("product stays in the group");
            *row.entry(k).or_insert(0) += 1;
        }
    }
    let scale = vec![(1, radical.order() as u64); levi.class_count()];
    Transfer::new(whole.class_count(), rows, scale)
}

/// A chain of class maps applied left to right.
#[derive(Clone, Debug)]
pub struct ComposedMap {
    steps: Vec<ClassMap>,
}

impl ComposedMap {
    pub fn new(steps: Vec<ClassMap>) -> Result<Self> {
        for w in steps.windows(2) {
            if w[0].target.label() != w[1].source.label() {
                return Err(Error::GroupMismatch(
                    w[0].target.label().to_string(),
                    w[1].source.label().to_string(),
                ));
            }
        }
        Ok(Self { steps })
    }

    pub fn apply<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<ClassFunction<S>> {
        let mut cur = psi.clone();
        for s in &self.steps {
            cur = s.apply(&cur)?;
        }
        Ok(cur)
    }
}
