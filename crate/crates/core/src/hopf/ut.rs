//! `cf(UT_•)` at a fixed prime: graded class functions on `UT_n(F_q)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::class_fn::{
    ClassFunction, ClassMap, ComposedMap, ProductClassFunction, Split, Straightening,
};
use crate::combinatorics::{
    complement, interval, subsets, Label, PartialOrder, SetComposition, TotalOrder,
};
use crate::error::{Error, Result};
use crate::group::{Engine, GroupTable, PatternDescriptor};
use crate::hopf::monoid::MonoidMaps;
use crate::scalar::Scalar;

/// Finitely many graded pieces, the degree `n` piece a class function on
/// `UT_n(F_q)` or `GL_n(F_q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCf<S: Scalar> {
    components: BTreeMap<usize, ClassFunction<S>>,
}

/// Bigraded pieces, each a class function on a product of two groups.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedTensor<S: Scalar> {
    components: BTreeMap<(usize, usize), ProductClassFunction<S>>,
}

impl<S: Scalar> GradedCf<S> {
    pub fn zero() -> Self {
        Self {
            components: BTreeMap::new(),
        }
    }

    pub fn homogeneous(psi: ClassFunction<S>) -> Self {
        let mut out = Self::zero();
        out.add_component(psi).expect("fresh");
        out
    }

    pub fn components(&self) -> &BTreeMap<usize, ClassFunction<S>> {
        &self.components
    }

    pub fn component(&self, n: usize) -> Option<&ClassFunction<S>> {
        self.components.get(&n)
    }

    pub fn add_component(&mut self, psi: ClassFunction<S>) -> Result<()> {
        let n = psi.group().n();
        let sum = match self.components.remove(&n) {
            Some(prev) => prev.add(&psi)?,
            None => psi,
        };
        if !sum.is_zero() {
            self.components.insert(n, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for psi in other.components.values() {
            out.add_component(psi.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for psi in self.components.values() {
            out.add_component(psi.scale(c)).expect("distinct degrees");
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

impl<S: Scalar> GradedTensor<S> {
    pub fn zero() -> Self {
        Self {
            components: BTreeMap::new(),
        }
    }

    pub fn components(&self) -> &BTreeMap<(usize, usize), ProductClassFunction<S>> {
        &self.components
    }

    pub fn component(&self, i: usize, j: usize) -> Option<&ProductClassFunction<S>> {
        self.components.get(&(i, j))
    }

    pub fn add_component(&mut self, x: ProductClassFunction<S>) -> Result<()> {
        let key = (x.left().n(), x.right().n());
        let sum = match self.components.remove(&key) {
            Some(prev) => prev.add(&x)?,
            None => x,
        };
        if !sum.is_zero() {
            self.components.insert(key, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for x in other.components.values() {
            out.add_component(x.clone())?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

pub type UtCf<S> = GradedCf<S>;
pub type UtTensor<S> = GradedTensor<S>;

struct ProductStep {
    straightening: Straightening,
    inflation: ClassMap,
}

struct CoproductStep {
    resflation: ClassMap,
    straightening: Straightening,
}

type CoproductCache = HashMap<(usize, Vec<Label>), Arc<CoproductStep>>;

/// The graded Hopf algebra `cf(UT_•)` over one prime field, with cached
/// structure maps.
pub struct UtHopf<'e> {
    maps: MonoidMaps<'e>,
    products: Mutex<HashMap<(usize, usize), Arc<ProductStep>>>,
    coproducts: Mutex<CoproductCache>,
}

impl<'e> UtHopf<'e> {
    pub fn new(engine: &'e Engine) -> Self {
        Self {
            maps: MonoidMaps::new(engine),
            products: Mutex::default(),
            coproducts: Mutex::default(),
        }
    }

    pub fn engine(&self) -> &Engine {
        self.maps.engine()
    }

    pub fn ut(&self, n: usize) -> Result<Arc<GroupTable>> {
        self.engine().ut(n)
    }

    pub fn unit<S: Scalar>(&self) -> Result<UtCf<S>> {
        Ok(UtCf::homogeneous(ClassFunction::one(self.ut(0)?)))
    }

    pub fn counit<S: Scalar>(&self, x: &UtCf<S>) -> S {
        x.component(0)
            .map(|c| c.values()[0].clone())
            .unwrap_or_else(S::zero)
    }

    fn check_field<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<()> {
        let q = psi.group().q();
        if q != self.engine().q() {
            return Err(Error::FieldMismatch(q, self.engine().q()));
        }
        Ok(())
    }

    fn product_step(&self, i: usize, j: usize) -> Result<Arc<ProductStep>> {
        if let Some(s) = self.products.lock().expect("poisoned").get(&(i, j)) {
            return Ok(s.clone());
        }
        let n = i + j;
        let first = interval(i);
        let tau = TotalOrder::standard(n);
        let a = SetComposition::split(&first, &complement(&interval(n), &first))?;
        let (levi, radical, _) = PatternDescriptor::levi_radical_parabolic(tau.as_order(), &a)?;
        let engine = self.engine();
        let (levi, radical) = (engine.pattern(&levi)?, engine.pattern(&radical)?);
        let step = Arc::new(ProductStep {
            straightening: Straightening::new(levi.clone(), self.ut(i)?, self.ut(j)?, &first)?,
            inflation: ClassMap::inflation(&Split::new(self.ut(n)?, levi, radical)?),
        });
        self.products
            .lock()
            .expect("poisoned")
            .insert((i, j), step.clone());
        Ok(step)
    }

    fn coproduct_step(&self, n: usize, first: &[Label]) -> Result<Arc<CoproductStep>> {
        let key = (n, first.to_vec());
        if let Some(s) = self.coproducts.lock().expect("poisoned").get(&key) {
            return Ok(s.clone());
        }
        let tau = TotalOrder::standard(n);
        let a = SetComposition::split(first, &complement(&interval(n), first))?;
        let resflation = self.maps.resflate(tau.as_order(), &a)?;
        let straightening = Straightening::new(
            resflation.target().clone(),
            self.ut(first.len())?,
            self.ut(n - first.len())?,
            first,
        )?;
        let step = Arc::new(CoproductStep {
            resflation,
            straightening,
        });
        self.coproducts
            .lock()
            .expect("poisoned")
            .insert(key, step.clone());
        Ok(step)
    }

    /// `Inf ∘ st⁻¹` on one bigraded piece.
    pub fn mu_tensor<S: Scalar>(&self, x: &ProductClassFunction<S>) -> Result<ClassFunction<S>> {
        let step = self.product_step(x.left().n(), x.right().n())?;
        step.inflation.apply(&step.straightening.unstraighten(x)?)
    }

    pub fn mu_homogeneous<S: Scalar>(
        &self,
        x: &ClassFunction<S>,
        y: &ClassFunction<S>,
    ) -> Result<ClassFunction<S>> {
        self.check_field(x)?;
        self.check_field(y)?;
        self.mu_tensor(&ProductClassFunction::tensor(x, y))
    }

    pub fn mu<S: Scalar>(&self, x: &UtCf<S>, y: &UtCf<S>) -> Result<UtCf<S>> {
        let mut out = UtCf::zero();
        for a in x.components.values() {
            for b in y.components.values() {
                out.add_component(self.mu_homogeneous(a, b)?)?;
            }
        }
        Ok(out)
    }

    /// `μ` on a tensor.
    pub fn multiply<S: Scalar>(&self, x: &UtTensor<S>) -> Result<UtCf<S>> {
        let mut out = UtCf::zero();
        for piece in x.components.values() {
            out.add_component(self.mu_tensor(piece)?)?;
        }
        Ok(out)
    }

    /// `st ∘ Resf` for the composition `(I, Iᶜ)` of `[n]`.
    pub fn delta_subset<S: Scalar>(
        &self,
        psi: &ClassFunction<S>,
        first: &[Label],
    ) -> Result<ProductClassFunction<S>> {
        self.check_field(psi)?;
        let step = self.coproduct_step(psi.group().n(), first)?;
        step.straightening.straighten(&step.resflation.apply(psi)?)
    }

    pub fn delta_homogeneous<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<UtTensor<S>> {
        let pieces: Vec<ProductClassFunction<S>> = subsets(&interval(psi.group().n()))
            .par_iter()
            .map(|sub| self.delta_subset(psi, sub))
            .collect::<Result<_>>()?;
        let mut out = UtTensor::zero();
        for p in pieces {
            out.add_component(p)?;
        }
        Ok(out)
    }

    pub fn delta<S: Scalar>(&self, x: &UtCf<S>) -> Result<UtTensor<S>> {
        let mut out = UtTensor::zero();
        for psi in x.components.values() {
            out = out.add(&self.delta_homogeneous(psi)?)?;
        }
        Ok(out)
    }

    /// The coproduct computed literally as `st ∘ Def ∘ Res` through each
    /// parabolic subgroup, for cross-checking.
    pub fn delta_via_parabolic<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<UtTensor<S>> {
        self.check_field(psi)?;
        let n = psi.group().n();
        let tau = TotalOrder::standard(n);
        let mut out = UtTensor::zero();
        for sub in subsets(&interval(n)) {
            let a = SetComposition::split(&sub, &complement(&interval(n), &sub))?;
            let route: ComposedMap = self.maps.resflate_via_parabolic(tau.as_order(), &a)?;
            let on_levi = route.apply(psi)?;
            let st = Straightening::new(
                on_levi.group().clone(),
                self.ut(sub.len())?,
                self.ut(n - sub.len())?,
                &sub,
            )?;
            out.add_component(st.straighten(&on_levi)?)?;
        }
        Ok(out)
    }

    /// `UT(σ)` for an order on `[n]`.
    pub fn pattern(&self, sigma: &PartialOrder) -> Result<Arc<GroupTable>> {
        self.maps.group(sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Nuio;
    use crate::Rational;

    type Cf = ClassFunction<Rational>;

    fn delta_pi(e: &Engine, p: &Nuio) -> Cf {
        let g = e.ut(p.n()).unwrap();
        let sub = e
            .pattern(&PatternDescriptor::from_order(&p.to_order()).unwrap())
            .unwrap();
        Cf::subgroup_indicator(g, &sub).unwrap()
    }

    #[test]
    fn unit_and_point() {
        let e = Engine::with_budget(2, 25_000).unwrap();
        let h = UtHopf::new(&e);
        let unit: UtCf<Rational> = h.unit().unwrap();
        let x = UtCf::homogeneous(delta_pi(&e, &Nuio::antichain(2)));
        assert_eq!(h.mu(&unit, &x).unwrap(), x);
        assert_eq!(h.mu(&x, &unit).unwrap(), x);
        assert_eq!(h.counit(&unit), Rational::from_int(1));
        assert_eq!(h.counit(&x), Rational::from_int(0));

        let one0 = unit.component(0).unwrap().clone();
        let mut expected = UtTensor::zero();
        expected
            .add_component(ProductClassFunction::tensor(&one0, &one0))
            .unwrap();
        assert_eq!(h.delta(&unit).unwrap(), expected);

        let p = delta_pi(&e, &Nuio::point());
        let mut expected = UtTensor::zero();
        expected
            .add_component(ProductClassFunction::tensor(&p, &one0))
            .unwrap();
        expected
            .add_component(ProductClassFunction::tensor(&one0, &p))
            .unwrap();
        assert_eq!(h.delta_homogeneous(&p).unwrap(), expected);
    }

    #[test]
    fn noncommutative_at_q2() {
        let e = Engine::with_budget(2, 25_000).unwrap();
        let h = UtHopf::new(&e);
        let point = delta_pi(&e, &Nuio::point());
        let ac2 = delta_pi(&e, &Nuio::antichain(2));
        let left = Nuio::new(3, [(1, 2), (1, 3)]).unwrap();
        let right = Nuio::new(3, [(1, 3), (2, 3)]).unwrap();
        assert_eq!(h.mu_homogeneous(&point, &ac2).unwrap(), delta_pi(&e, &left));
        assert_eq!(
            h.mu_homogeneous(&ac2, &point).unwrap(),
            delta_pi(&e, &right)
        );
    }

    #[test]
    fn closed_form_matches_parabolic_route() {
        for q in [2, 3] {
            let e = Engine::with_budget(q, 25_000).unwrap();
            let h = UtHopf::new(&e);
            for n in 0..=3 {
                for psi in Cf::indicator_basis(&e.ut(n).unwrap()) {
                    assert_eq!(
                        h.delta_homogeneous(&psi).unwrap(),
                        h.delta_via_parabolic(&psi).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn field_mismatch() {
        let e2 = Engine::with_budget(2, 25_000).unwrap();
        let e3 = Engine::with_budget(3, 25_000).unwrap();
        let h = UtHopf::new(&e2);
        let psi = Cf::one(e3.ut(2).unwrap());
        assert!(matches!(
            h.delta_homogeneous(&psi),
            Err(Error::FieldMismatch(3, 2))
        ));
    }
}
