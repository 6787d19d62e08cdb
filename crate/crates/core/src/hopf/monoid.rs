use std::sync::Arc;

use rayon::prelude::*;

use crate::class_fn::{ClassFunction, ClassMap, ComposedMap, Split};
use crate::combinatorics::{
    interval, Label, LabelBijection, PartialOrder, SetComposition, TotalOrder,
};
use crate::error::{Error, Result};
use crate::group::{Engine, GroupTable, PatternDescriptor};
use crate::matrix::FqMatrix;
use crate::report::{Report, ReportEntry};
use crate::scalar::Scalar;
use crate::Rational;

/// `σ ∩ Eq(A)`
pub fn meet_eq(sigma: &PartialOrder, a: &SetComposition) -> Result<PartialOrder> {
    let eq = a.eq_pairs();
    PartialOrder::from_relation(sigma.ground().clone(), sigma.intersect_pairs(&eq))
}

/// The structure maps of the Hopf monoid of class functions of pattern groups,
/// at the engine's field.
pub struct MonoidMaps<'e> {
    engine: &'e Engine,
}

/// Tensor of class functions on `UT(cano(τ|_{A_1})) × ... × UT(cano(τ|_{A_ℓ}))`,
/// stored on tuples of classes in mixed radix (last factor fastest).
#[derive(Clone, Debug)]
pub struct BlockTensor<S> {
    factors: Vec<Arc<GroupTable>>,
    values: Vec<S>,
}

impl<S: Scalar> PartialEq for BlockTensor<S> {
    fn eq(&self, other: &Self) -> bool {
        self.factors
            .iter()
            .map(|g| g.label())
            .eq(other.factors.iter().map(|g| g.label()))
            && self.values == other.values
    }
}

impl<S: Scalar> BlockTensor<S> {
    pub fn pure(parts: &[ClassFunction<S>]) -> Self {
        let mut values = vec![S::one()];
        for f in parts {
            values = values
                .iter()
                .flat_map(|v| f.values().iter().map(move |w| v.clone() * w.clone()))
                .collect();
        }
        Self {
            factors: parts.iter().map(|f| f.group().clone()).collect(),
            values,
        }
    }

    pub fn factors(&self) -> &[Arc<GroupTable>] {
        &self.factors
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    fn index(&self, classes: &[u32]) -> usize {
        classes
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (c, g)| acc * g.class_count() + *c as usize)
    }

    fn tuples(factors: &[Arc<GroupTable>]) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for g in factors {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..g.class_count() as u32).map(move |c| [t.clone(), vec![c]].concat())
                })
                .collect();
        }
        out
    }
}

impl<'e> MonoidMaps<'e> {
    pub fn new(engine: &'e Engine) -> Self {
        Self { engine }
    }

    pub fn engine(&self) -> &Engine {
        self.engine
    }

    /// `UT(σ)` for an order on `[k]`.
    pub fn group(&self, sigma: &PartialOrder) -> Result<Arc<GroupTable>> {
        self.engine.pattern(&PatternDescriptor::from_order(sigma)?)
    }

    fn shapes(&self, sigma: &PartialOrder, a: &SetComposition) -> Result<[Arc<GroupTable>; 3]> {
        let (l, r, p) = PatternDescriptor::levi_radical_parabolic(sigma, a)?;
        Ok([
            self.engine.pattern(&l)?,
            self.engine.pattern(&r)?,
            self.engine.pattern(&p)?,
        ])
    }

    /// `Resf`: `cf(UT(σ)) → cf(UL(σ, A))`, `g ↦ (1/|UR|) Σ_{x ∈ UR} ψ(g·x)`.
    pub fn resflate(&self, sigma: &PartialOrder, a: &SetComposition) -> Result<ClassMap> {
        let [levi, radical, _] = self.shapes(sigma, a)?;
        ClassMap::coset_average(&self.group(sigma)?, &levi, &radical)
    }

    /// `Def^{UP}_{UL} ∘ Res^{UT(σ)}_{UP}`
    pub fn resflate_via_parabolic(
        &self,
        sigma: &PartialOrder,
        a: &SetComposition,
    ) -> Result<ComposedMap> {
        let [levi, radical, parabolic] = self.shapes(sigma, a)?;
        let split = Split::new(parabolic.clone(), levi, radical)?;
        ComposedMap::new(vec![
            ClassMap::restriction(&self.group(sigma)?, &parabolic)?,
            ClassMap::deflation(&split),
        ])
    }

    /// `Inf`: `cf(UL(σ, A)) → cf(UT(σ))`; needs `σ ∩ Inv(A) = ∅`, so that the
    /// parabolic is all of `UT(σ)`.
    pub fn inflate(&self, sigma: &PartialOrder, a: &SetComposition) -> Result<ClassMap> {
        let inv = a.asc_eq_inv().inv;
        if sigma.strict_pairs().iter().any(|p| inv.contains(p)) {
            return Err(Error::Precondition(format!(
                "{sigma} has inversions of {a}"
            )));
        }
        let [levi, radical, parabolic] = self.shapes(sigma, a)?;
        Ok(ClassMap::inflation(&Split::new(parabolic, levi, radical)?))
    }

    /// `cf(UT(σ)) → cf(UT(^wσ))`, `ψ ↦ ψ ∘ (h ↦ W⁻¹ h W)`.
    pub fn relabel(&self, sigma: &PartialOrder, w: &LabelBijection) -> Result<ClassMap> {
        let moved = sigma.relabel(w)?;
        let back = images(&w.inverse(), sigma.ground().len());
        ClassMap::pullback(&self.group(&moved)?, &self.group(sigma)?, |h| {
            h.conjugate_by_permutation(&back)
        })
    }

    fn factor_groups(
        &self,
        tau: &PartialOrder,
        a: &SetComposition,
    ) -> Result<Vec<Arc<GroupTable>>> {
        a.parts()
            .iter()
            .map(|part| {
                let local = tau
                    .restrict(part)?
                    .relabel(&crate::combinatorics::cano(part))?;
                self.group(&local)
            })
            .collect()
    }

    /// `Δ_A ψ`: resflation followed by splitting `UL(τ, A)` into its blocks.
    pub fn delta<S: Scalar>(
        &self,
        tau: &PartialOrder,
        a: &SetComposition,
        psi: &ClassFunction<S>,
    ) -> Result<BlockTensor<S>> {
        let resf = self.resflate(tau, a)?.apply(psi)?;
        let ul = resf.group().clone();
        let factors = self.factor_groups(tau, a)?;
        let n = tau.ground().len();
        let values = BlockTensor::<S>::tuples(&factors)
            .into_iter()
            .map(|t| {
                let g = embed_blocks(n, ul.field(), a, &factors, &t);
                resf.value_at(&g)
                    .cloned()
                    .ok_or_else(|| Error::NotInGroup(g.digits(), ul.label().to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(BlockTensor { factors, values })
    }

    /// `μ_A x`: reassembling the blocks into `UL(τ, A)` and inflating.
    pub fn mu<S: Scalar>(
        &self,
        tau: &PartialOrder,
        a: &SetComposition,
        x: &BlockTensor<S>,
    ) -> Result<ClassFunction<S>> {
        let inf = self.inflate(tau, a)?;
        let factors = self.factor_groups(tau, a)?;
        if factors
            .iter()
            .map(|g| g.label())
            .ne(x.factors.iter().map(|g| g.label()))
        {
            return Err(Error::GroupMismatch(
                format!("{:?}", x.factors),
                format!("{factors:?}"),
            ));
        }
        let ul = inf.source().clone();
        let values = (0..ul.class_count() as u32)
            .map(|c| {
                let g = ul.class_rep_matrix(c);
                let classes: Vec<u32> = a
                    .parts()
                    .iter()
                    .zip(&factors)
                    .map(|(part, f)| {
                        f.class_of_matrix(&g.block(part))
                            .expect("block lies in factor")
                    })
                    .collect();
                x.values[x.index(&classes)].clone()
            })
            .collect();
        inf.apply(&ClassFunction::from_class_values(ul, values)?)
    }
}

fn embed_blocks(
    n: usize,
    field: crate::PrimeField,
    a: &SetComposition,
    factors: &[Arc<GroupTable>],
    classes: &[u32],
) -> FqMatrix {
    let mut g = FqMatrix::identity(n, field);
    for ((part, f), c) in a.parts().iter().zip(factors).zip(classes) {
        let m = f.class_rep_matrix(*c);
        for (r, i) in part.iter().enumerate() {
            for (s, j) in part.iter().enumerate() {
                g.set(*i, *j, m.get(r as Label + 1, s as Label + 1));
            }
        }
    }
    g
}

/// `w` as a list of images of `1..=k`.
fn images(w: &LabelBijection, k: usize) -> Vec<Label> {
    (1..=k as Label).map(|i| w.apply(i)).collect()
}

fn relabel_composition(a: &SetComposition, w: &LabelBijection) -> SetComposition {
    SetComposition::new(
        a.parts()
            .iter()
            .map(|p| p.iter().map(|l| w.apply(*l)).collect())
            .collect(),
    )
    .expect("bijection preserves disjointness")
}

fn asc_in(a: &SetComposition, tau: &TotalOrder) -> bool {
    a.asc().iter().all(|(i, j)| tau.as_order().contains(*i, *j))
}

/// One diagram of the Hopf monoid axioms on the ground set `[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomInstance {
    /// `B` refines `A`.
    Coassociativity {
        tau: TotalOrder,
        a: SetComposition,
        b: SetComposition,
    },
    /// `B` refines `A`, `Asc(B) ⊆ τ`.
    Associativity {
        tau: TotalOrder,
        a: SetComposition,
        b: SetComposition,
    },
    /// `Asc(A) ⊆ τ`.
    Compatibility {
        tau: TotalOrder,
        a: SetComposition,
        b: SetComposition,
    },
    NaturalityResf {
        tau: TotalOrder,
        a: SetComposition,
        sigma: LabelBijection,
    },
    /// `Asc(A) ⊆ τ`.
    NaturalityInf {
        tau: TotalOrder,
        a: SetComposition,
        sigma: LabelBijection,
    },
}

impl AxiomInstance {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Coassociativity { .. } => "coassociativity",
            Self::Associativity { .. } => "associativity",
            Self::Compatibility { .. } => "compatibility",
            Self::NaturalityResf { .. } => "naturality-resf",
            Self::NaturalityInf { .. } => "naturality-inf",
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Coassociativity { tau, a, b }
            | Self::Associativity { tau, a, b }
            | Self::Compatibility { tau, a, b } => {
                format!("tau={tau} A={a} B={b}")
            }
            Self::NaturalityResf { tau, a, sigma } | Self::NaturalityInf { tau, a, sigma } => {
                let w: Vec<String> = sigma.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
                format!("tau={tau} A={a} sigma=[{}]", w.join(","))
            }
        }
    }

    /// Whether the diagram's hypotheses hold.
    pub fn applicable(&self) -> bool {
        match self {
            Self::Coassociativity { a, b, .. } => b.refines(a).unwrap_or(false),
            Self::Associativity { tau, a, b } => b.refines(a).unwrap_or(false) && asc_in(b, tau),
            Self::Compatibility { tau, a, .. } | Self::NaturalityInf { tau, a, .. } => {
                asc_in(a, tau)
            }
            Self::NaturalityResf { .. } => true,
        }
    }

    /// Every applicable instance on `[k]`.
    pub fn exhaustive(k: usize) -> Vec<AxiomInstance> {
        let labels = interval(k);
        let orders = TotalOrder::all(&labels);
        let comps = SetComposition::all(&labels);
        let perms: Vec<LabelBijection> = TotalOrder::all(&labels)
            .iter()
            .map(|t| {
                LabelBijection::new(labels.iter().copied().zip(t.chain())).expect("permutation")
            })
            .collect();
        let mut out = Vec::new();
        for tau in &orders {
            for a in &comps {
                for b in &comps {
                    out.push(Self::Coassociativity {
                        tau: tau.clone(),
                        a: a.clone(),
                        b: b.clone(),
                    });
                    out.push(Self::Associativity {
                        tau: tau.clone(),
                        a: a.clone(),
                        b: b.clone(),
                    });
                    out.push(Self::Compatibility {
                        tau: tau.clone(),
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
                for s in &perms {
                    out.push(Self::NaturalityResf {
                        tau: tau.clone(),
                        a: a.clone(),
                        sigma: s.clone(),
                    });
                    out.push(Self::NaturalityInf {
                        tau: tau.clone(),
                        a: a.clone(),
                        sigma: s.clone(),
                    });
                }
            }
        }
        out.retain(Self::applicable);
        out
    }

    /// Evaluates both sides of the diagram on the full class-indicator basis
    /// of its source space.
    pub fn check(&self, maps: &MonoidMaps<'_>) -> Result<ReportEntry> {
        if !self.applicable() {
            return Err(Error::Precondition(format!(
                "{} hypotheses fail for {}",
                self.name(),
                self.describe()
            )));
        }
        type Cf = ClassFunction<Rational>;
        let run = |basis: Vec<Cf>,
                   lhs: &dyn Fn(&Cf) -> Result<Cf>,
                   rhs: &dyn Fn(&Cf) -> Result<Cf>|
         -> Result<ReportEntry> {
            let l: Vec<Cf> = basis.iter().map(lhs).collect::<Result<_>>()?;
            let r: Vec<Cf> = basis.iter().map(rhs).collect::<Result<_>>()?;
            Ok(ReportEntry::compare(self.name(), self.describe(), &l, &r))
        };
        match self {
            Self::Coassociativity { tau, a, b } => {
                let t = tau.as_order();
                let direct = maps.resflate(t, b)?;
                let first = maps.resflate(t, a)?;
                let second = maps.resflate(&meet_eq(t, a)?, b)?;
                run(
                    Cf::indicator_basis(direct.source()),
                    &|p| direct.apply(p),
                    &|p| second.apply(&first.apply(p)?),
                )
            }
            Self::Associativity { tau, a, b } => {
                let t = tau.as_order();
                let direct = maps.inflate(t, b)?;
                let inner = maps.inflate(&meet_eq(t, a)?, b)?;
                let outer = maps.inflate(t, a)?;
                run(
                    Cf::indicator_basis(direct.source()),
                    &|p| direct.apply(p),
                    &|p| outer.apply(&inner.apply(p)?),
                )
            }
            Self::Compatibility { tau, a, b } => {
                let t = tau.as_order();
                let inf = maps.inflate(t, a)?;
                let resf = maps.resflate(t, b)?;
                let resf2 = maps.resflate(&meet_eq(t, a)?, &a.tits(b)?)?;
                let inf2 = maps.inflate(&meet_eq(t, b)?, &b.tits(a)?)?;
                run(
                    Cf::indicator_basis(inf.source()),
                    &|p| resf.apply(&inf.apply(p)?),
                    &|p| inf2.apply(&resf2.apply(p)?),
                )
            }
            Self::NaturalityResf { tau, a, sigma } => {
                let t = tau.as_order();
                let moved_tau = t.relabel(sigma)?;
                let moved_a = relabel_composition(a, sigma);
                let resf = maps.resflate(t, a)?;
                let moved_resf = maps.resflate(&moved_tau, &moved_a)?;
                let before = maps.relabel(t, sigma)?;
                let after = maps.relabel(&meet_eq(t, a)?, sigma)?;
                run(
                    Cf::indicator_basis(resf.source()),
                    &|p| after.apply(&resf.apply(p)?),
                    &|p| moved_resf.apply(&before.apply(p)?),
                )
            }
            Self::NaturalityInf { tau, a, sigma } => {
                let t = tau.as_order();
                let moved_tau = t.relabel(sigma)?;
                let moved_a = relabel_composition(a, sigma);
                let inf = maps.inflate(t, a)?;
                let moved_inf = maps.inflate(&moved_tau, &moved_a)?;
                let before = maps.relabel(&meet_eq(t, a)?, sigma)?;
                let after = maps.relabel(t, sigma)?;
                run(
                    Cf::indicator_basis(inf.source()),
                    &|p| after.apply(&inf.apply(p)?),
                    &|p| moved_inf.apply(&before.apply(p)?),
                )
            }
        }
    }
}

/// Every axiom diagram on ground sets `[k]`, `k ≤ n_max`.
pub fn axiom_suite(engine: &Engine, n_max: usize) -> Result<Report> {
    let maps = MonoidMaps::new(engine);
    let instances: Vec<AxiomInstance> = (0..=n_max).flat_map(AxiomInstance::exhaustive).collect();
    let entries: Vec<ReportEntry> = instances
        .par_iter()
        .map(|i| i.check(&maps))
        .collect::<Result<_>>()?;
    Ok(entries.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{GroundSet, Nuio};

    type Cf = ClassFunction<Rational>;

    fn engine() -> Engine {
        Engine::with_budget(2, 25_000).unwrap()
    }

    #[test]
    fn exhaustive_suite_small() {
        let e = engine();
        for k in 0..=2 {
            let report = axiom_suite(&e, k).unwrap();
            assert!(report.passed(), "{:?}", report.failures().next());
        }
        let counts = AxiomInstance::exhaustive(3)
            .iter()
            .filter(|i| i.name() == "naturality-resf")
            .count();
        assert_eq!(counts, 6 * 13 * 6);
    }

    #[test]
    fn resflation_two_routes_agree() {
        let e = engine();
        let maps = MonoidMaps::new(&e);
        let sigma =
            PartialOrder::from_strict(GroundSet::interval(4), [(1, 3), (2, 3), (2, 4)]).unwrap();
        for a in SetComposition::all(&interval(4)) {
            let closed = maps.resflate(&sigma, &a).unwrap();
            let routed = maps.resflate_via_parabolic(&sigma, &a).unwrap();
            for psi in Cf::indicator_basis(closed.source()) {
                assert_eq!(closed.apply(&psi).unwrap(), routed.apply(&psi).unwrap());
            }
        }
    }

    #[test]
    fn inflation_needs_ascents_in_the_order() {
        let e = engine();
        let maps = MonoidMaps::new(&e);
        let tau = TotalOrder::standard(2);
        let rev = SetComposition::new(vec![vec![2], vec![1]]).unwrap();
        assert!(maps.inflate(tau.as_order(), &rev).is_err());
    }

    #[test]
    fn monoid_product_and_coproduct() {
        let e = engine();
        let maps = MonoidMaps::new(&e);
        let tau = TotalOrder::standard(4);
        let t = tau.as_order();
        let one_block = SetComposition::single(&interval(4));
        let ut4 = e.ut(4).unwrap();
        for psi in Cf::indicator_basis(&ut4) {
            let d = maps.delta(t, &one_block, &psi).unwrap();
            assert_eq!(d.values(), psi.values());
            assert_eq!(maps.mu(t, &one_block, &d).unwrap(), psi);
        }

        let a = SetComposition::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let ut2 = e.ut(2).unwrap();
        let d = maps.delta(t, &a, &Cf::one(ut4.clone())).unwrap();
        assert_eq!(
            d,
            BlockTensor::pure(&[Cf::one(ut2.clone()), Cf::one(ut2.clone())])
        );
        assert_eq!(maps.mu(t, &a, &d).unwrap(), Cf::one(ut4.clone()));

        // δ_{π1} ⊗ δ_{π2} ↦ δ_{π1 ⊕ π2}
        for i in 0..=2 {
            for j in 0..=2 {
                let n = i + j;
                let tau = TotalOrder::standard(n);
                let a = SetComposition::split(
                    &interval(i),
                    &(i as Label + 1..=n as Label).collect::<Vec<_>>(),
                )
                .unwrap();
                let utn = e.ut(n).unwrap();
                for p1 in Nuio::enumerate(i) {
                    for p2 in Nuio::enumerate(j) {
                        let ind = |p: &Nuio, g: &Arc<GroupTable>| {
                            Cf::subgroup_indicator(
                                g.clone(),
                                &e.pattern(&PatternDescriptor::from_order(&p.to_order()).unwrap())
                                    .unwrap(),
                            )
                            .unwrap()
                        };
                        let parts: Vec<Cf> = [(&p1, i), (&p2, j)]
                            .into_iter()
                            .filter(|(_, m)| *m > 0)
                            .map(|(p, m)| ind(p, &e.ut(m).unwrap()))
                            .collect();
                        let x = BlockTensor::pure(&parts);
                        let sum = p1.shifted_ordinal_sum(&p2);
                        assert_eq!(maps.mu(tau.as_order(), &a, &x).unwrap(), ind(&sum, &utn));
                    }
                }
            }
        }
    }
}
