//! `cf(GL_•)` at a fixed prime under parabolic induction and Harish-Chandra
//! restriction, and the induction map from `cf(UT_•)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::class_fn::{ClassFunction, ClassMap, ProductClassFunction, Transfer};
use crate::combinatorics::{
    complement, interval, subsets, Label, Nuio, SetComposition, TotalOrder,
};
use crate::error::{Error, Result};
use crate::group::{coset_rep_w, in_parabolic, Engine, GroupTable, PatternDescriptor};
use crate::hopf::{delta_indicator, GradedCf, GradedTensor, UtHopf};
use crate::matrix::FqMatrix;
use crate::report::{Report, ReportEntry};
use crate::scalar::Scalar;
use crate::Rational;

pub type GlCf<S> = GradedCf<S>;
pub type GlTensor<S> = GradedTensor<S>;

/// The graded Hopf algebra `cf(GL_•)` over one prime field, together with
/// `cf(UT_•)` and the induction map between them.
pub struct GlHopf<'e> {
    ut: UtHopf<'e>,
    products: Mutex<HashMap<(usize, usize), Arc<Transfer>>>,
    coproducts: Mutex<HashMap<(usize, usize), Arc<Transfer>>>,
    inductions: Mutex<HashMap<usize, Arc<ClassMap>>>,
}

impl<'e> GlHopf<'e> {
    pub fn new(engine: &'e Engine) -> Self {
        Self {
            ut: UtHopf::new(engine),
            products: Mutex::default(),
            coproducts: Mutex::default(),
            inductions: Mutex::default(),
        }
    }

    pub fn engine(&self) -> &Engine {
        self.ut.engine()
    }

    pub fn ut_hopf(&self) -> &UtHopf<'e> {
        &self.ut
    }

    pub fn gl(&self, n: usize) -> Result<Arc<GroupTable>> {
        self.engine().gl(n)
    }

    pub fn unit<S: Scalar>(&self) -> Result<GlCf<S>> {
        Ok(GlCf::homogeneous(ClassFunction::one(self.gl(0)?)))
    }

    fn check_gl<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<()> {
        let g = psi.group();
        if g.q() != self.engine().q() {
            return Err(Error::FieldMismatch(g.q(), self.engine().q()));
        }
        let gl = self.gl(g.n())?;
        if g.label() != gl.label() {
            return Err(Error::GroupMismatch(
                g.label().to_string(),
                gl.label().to_string(),
            ));
        }
        Ok(())
    }

    /// `Ind_{P_i}^{GL_n} ∘ Inf_{L_i}^{P_i} ∘ st⁻¹` as a transfer from
    /// `cf(GL_i × GL_j)` to `cf(GL_{i+j})`, by class fusion over `P_i`.
    fn product_transfer(&self, i: usize, j: usize) -> Result<Arc<Transfer>> {
        if let Some(t) = self.products.lock().expect("poisoned").get(&(i, j)) {
            return Ok(t.clone());
        }
        let (gi, gj, gn) = (self.gl(i)?, self.gl(j)?, self.gl(i + j)?);
        let first = interval(i);
        let second: Vec<Label> = (i as Label + 1..=(i + j) as Label).collect();
        let nr = gj.class_count() as u32;
        let rows: Vec<BTreeMap<u32, u64>> = gn
            .elements()
            .par_iter()
            .enumerate()
            .filter(|(_, g)| in_parabolic(g, i))
            .fold(
                || vec![BTreeMap::new(); gn.class_count()],
                |mut rows, (k, g)| {
                    let a = gi
                        .class_of_matrix(&g.block(&first))
                        .expect("invertible diagonal block");
                    let b = gj
                        .class_of_matrix(&g.block(&second))
                        .expect("invertible diagonal block");
                    *rows[gn.class_of(k as u32) as usize]
                        .entry(a * nr + b)
                        .or_insert(0) += 1;
                    rows
                },
            )
            .reduce(|| vec![BTreeMap::new(); gn.class_count()], merge_rows);
        let parabolic: u64 = rows.iter().flat_map(|r| r.values()).sum();
        let scale = (0..gn.class_count() as u32)
            .map(|c| (gn.order() as u64, parabolic * gn.class_size(c) as u64))
            .collect();
        let t = Arc::new(Transfer::new(
            gi.class_count() * gj.class_count(),
            rows,
            scale,
        ));
        self.products
            .lock()
            .expect("poisoned")
            .insert((i, j), t.clone());
        Ok(t)
    }

    /// `st ∘ Def_{L_i}^{P_i} ∘ Res^{GL_n}_{P_i}`: at `(A, D)` the average of
    /// `ψ(diag(A, D)·y)` over the radical `y = [[1, B], [0, 1]]`.
    fn coproduct_transfer(&self, n: usize, i: usize) -> Result<Arc<Transfer>> {
        if let Some(t) = self.coproducts.lock().expect("poisoned").get(&(n, i)) {
            return Ok(t.clone());
        }
        let j = n - i;
        let (gi, gj, gn) = (self.gl(i)?, self.gl(j)?, self.gl(n)?);
        let field = gn.field();
        let q = field.p() as u64;
        let radical = radical_elements(n, i, field);
        let mut rows = Vec::with_capacity(gi.class_count() * gj.class_count());
        for a in 0..gi.class_count() as u32 {
            for b in 0..gj.class_count() as u32 {
                let mut g = FqMatrix::identity(n, field);
                let (ma, mb) = (gi.class_rep_matrix(a), gj.class_rep_matrix(b));
                for r in 1..=i as Label {
                    for s in 1..=i as Label {
                        g.set(r, s, ma.get(r, s));
                    }
                }
                for r in 1..=j as Label {
                    for s in 1..=j as Label {
                        g.set(r + i as Label, s + i as Label, mb.get(r, s));
                    }
                }
                let mut row = BTreeMap::new();
                for y in &radical {
                    *row.entry(gn.class_of_matrix(&g.mul(y)).expect("invertible"))
                        .or_insert(0) += 1;
                }
                rows.push(row);
            }
        }
        let scale = vec![(1, q.pow((i * j) as u32)); rows.len()];
        let t = Arc::new(Transfer::new(gn.class_count(), rows, scale));
        self.coproducts
            .lock()
            .expect("poisoned")
            .insert((n, i), t.clone());
        Ok(t)
    }

    pub fn mu_tensor<S: Scalar>(&self, x: &ProductClassFunction<S>) -> Result<ClassFunction<S>> {
        let (i, j) = (x.left().n(), x.right().n());
        let t = self.product_transfer(i, j)?;
        let gl = self.gl(i + j)?;
        if x.left().label() != self.gl(i)?.label() || x.right().label() != self.gl(j)?.label() {
            return Err(Error::GroupMismatch(
                format!("{} x {}", x.left().label(), x.right().label()),
                format!("GL_{i} x GL_{j}"),
            ));
        }
        ClassFunction::from_class_values(gl, t.apply_values(x.values()))
    }

    pub fn mu_homogeneous<S: Scalar>(
        &self,
        x: &ClassFunction<S>,
        y: &ClassFunction<S>,
    ) -> Result<ClassFunction<S>> {
        self.check_gl(x)?;
        self.check_gl(y)?;
        self.mu_tensor(&ProductClassFunction::tensor(x, y))
    }

    pub fn mu<S: Scalar>(&self, x: &GlCf<S>, y: &GlCf<S>) -> Result<GlCf<S>> {
        let mut out = GlCf::zero();
        for a in x.components().values() {
            for b in y.components().values() {
                out.add_component(self.mu_homogeneous(a, b)?)?;
            }
        }
        Ok(out)
    }

    pub fn multiply<S: Scalar>(&self, x: &GlTensor<S>) -> Result<GlCf<S>> {
        let mut out = GlCf::zero();
        for piece in x.components().values() {
            out.add_component(self.mu_tensor(piece)?)?;
        }
        Ok(out)
    }

    pub fn delta_homogeneous<S: Scalar>(&self, psi: &ClassFunction<S>) -> Result<GlTensor<S>> {
        self.check_gl(psi)?;
        let n = psi.group().n();
        let mut out = GlTensor::zero();
        for i in 0..=n {
            let t = self.coproduct_transfer(n, i)?;
            out.add_component(ProductClassFunction::from_values(
                self.gl(i)?,
                self.gl(n - i)?,
                t.apply_values(psi.values()),
            )?)?;
        }
        Ok(out)
    }

    pub fn delta<S: Scalar>(&self, x: &GlCf<S>) -> Result<GlTensor<S>> {
        let mut out = GlTensor::zero();
        for psi in x.components().values() {
            out = out.add(&self.delta_homogeneous(psi)?)?;
        }
        Ok(out)
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, expanded over class indicators.
    pub fn tensor_mu<S: Scalar>(&self, x: &GlTensor<S>, y: &GlTensor<S>) -> Result<GlTensor<S>> {
        let mut out = GlTensor::zero();
        for u in x.components().values() {
            for v in y.components().values() {
                let left: Vec<ClassFunction<S>> = self.indicator_products(u.left(), v.left())?;
                let right: Vec<ClassFunction<S>> = self.indicator_products(u.right(), v.right())?;
                let (nl, nr) = (v.left().class_count(), v.right().class_count());
                let (gl, gr) = (left[0].group().clone(), right[0].group().clone());
                let mut values = vec![S::zero(); gl.class_count() * gr.class_count()];
                for a in 0..u.left().class_count() as u32 {
                    for b in 0..u.right().class_count() as u32 {
                        let ub = u.value(a, b);
                        if ub.is_zero() {
                            continue;
                        }
                        for c in 0..nl as u32 {
                            for d in 0..nr as u32 {
                                let w = ub.clone() * v.value(c, d).clone();
                                if w.is_zero() {
                                    continue;
                                }
                                let l = &left[a as usize * nl + c as usize];
                                let r = &right[b as usize * nr + d as usize];
                                for (s, lv) in l.values().iter().enumerate() {
                                    if lv.is_zero() {
                                        continue;
                                    }
                                    for (t, rv) in r.values().iter().enumerate() {
                                        let slot = &mut values[s * gr.class_count() + t];
                                        *slot = slot.clone() + w.clone() * lv.clone() * rv.clone();
                                    }
                                }
                            }
                        }
                    }
                }
                out.add_component(ProductClassFunction::from_values(gl, gr, values)?)?;
            }
        }
        Ok(out)
    }

    fn indicator_products<S: Scalar>(
        &self,
        a: &Arc<GroupTable>,
        b: &Arc<GroupTable>,
    ) -> Result<Vec<ClassFunction<S>>> {
        let mut out = Vec::with_capacity(a.class_count() * b.class_count());
        for x in ClassFunction::indicator_basis(a) {
            for y in ClassFunction::indicator_basis(b) {
                out.push(self.mu_homogeneous(&x, &y)?);
            }
        }
        Ok(out)
    }

    fn induction(&self, n: usize) -> Result<Arc<ClassMap>> {
        if let Some(m) = self.inductions.lock().expect("poisoned").get(&n) {
            return Ok(m.clone());
        }
        let m = Arc::new(ClassMap::induction(&self.ut.ut(n)?, &self.gl(n)?)?);
        self.inductions
            .lock()
            .expect("poisoned")
            .insert(n, m.clone());
        Ok(m)
    }

    /// `Ind_{UT_n}^{GL_n}` on one piece.
    pub fn induce_homogeneous<S: Scalar>(
        &self,
        psi: &ClassFunction<S>,
    ) -> Result<ClassFunction<S>> {
        self.induction(psi.group().n())?.apply(psi)
    }

    pub fn induce<S: Scalar>(&self, x: &GradedCf<S>) -> Result<GlCf<S>> {
        let mut out = GlCf::zero();
        for psi in x.components().values() {
            out.add_component(self.induce_homogeneous(psi)?)?;
        }
        Ok(out)
    }

    /// `Ind ⊗ Ind`
    pub fn induce_tensor<S: Scalar>(&self, x: &GradedTensor<S>) -> Result<GlTensor<S>> {
        let mut out = GlTensor::zero();
        for piece in x.components().values() {
            let (l, r) = (
                self.induction(piece.left().n())?,
                self.induction(piece.right().n())?,
            );
            out.add_component(piece.map_factors(&l, &r)?)?;
        }
        Ok(out)
    }

    /// `𝔡 = ψ ↦ ψ ∘ †` on `cf(UT_n)`.
    pub fn dagger_map(&self, n: usize) -> Result<ClassMap> {
        let ut = self.ut.ut(n)?;
        ClassMap::pullback(&ut, &ut, FqMatrix::dagger)
    }
}

fn merge_rows(
    mut a: Vec<BTreeMap<u32, u64>>,
    b: Vec<BTreeMap<u32, u64>>,
) -> Vec<BTreeMap<u32, u64>> {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (k, v) in rb {
            *ra.entry(k).or_insert(0) += v;
        }
    }
    a
}

/// `[[1, B], [0, 1]]` for all `i × (n - i)` blocks `B`.
fn radical_elements(n: usize, i: usize, field: crate::PrimeField) -> Vec<FqMatrix> {
    let slots: Vec<(Label, Label)> = (1..=i as Label)
        .flat_map(|r| (i as Label + 1..=n as Label).map(move |s| (r, s)))
        .collect();
    let p = field.p() as usize;
    let mut out = Vec::with_capacity(p.pow(slots.len() as u32));
    for mut code in 0..p.pow(slots.len() as u32) {
        let mut g = FqMatrix::identity(n, field);
        for (r, s) in &slots {
            g.set(*r, *s, (code % p) as u8);
            code /= p;
        }
        out.push(g);
    }
    out
}

/// Checks `μ_GL ∘ (Ind ⊗ Ind) = Ind ∘ μ_UT` and `Δ_GL ∘ Ind = (Ind ⊗ Ind) ∘ Δ_UT`
/// on every `δ̄_π` and pair `δ̄_π ⊗ δ̄_ρ` of total degree at most `n_max`.
pub fn verify_induction_hom(engine: &Engine, n_max: usize) -> Result<Report> {
    let hopf = GlHopf::new(engine);
    let ut = hopf.ut_hopf();
    let mut report = Report::default();
    let basis: Vec<Nuio> = (0..=n_max).flat_map(Nuio::enumerate).collect();
    let deltas: HashMap<Nuio, ClassFunction<Rational>> = basis
        .iter()
        .map(|p| Ok((p.clone(), delta_indicator(engine, p)?)))
        .collect::<Result<_>>()?;
    for p in &basis {
        let x = &deltas[p];
        let lhs = hopf.delta_homogeneous(&hopf.induce_homogeneous(x)?)?;
        let rhs = hopf.induce_tensor(&ut.delta_homogeneous(x)?)?;
        report.push(ReportEntry::compare(
            "induction-coproduct",
            format!("q={} pi={p} n={}", engine.q(), p.n()),
            &lhs,
            &rhs,
        ));
    }
    for a in &basis {
        for b in &basis {
            if a.n() + b.n() > n_max {
                continue;
            }
            let (x, y) = (&deltas[a], &deltas[b]);
            let lhs =
                hopf.mu_homogeneous(&hopf.induce_homogeneous(x)?, &hopf.induce_homogeneous(y)?)?;
            let rhs = hopf.induce_homogeneous(&ut.mu_homogeneous(x, y)?)?;
            report.push(ReportEntry::compare(
                "induction-product",
                format!("q={} pi={a} n={} rho={b} m={}", engine.q(), a.n(), b.n()),
                &lhs,
                &rhs,
            ));
        }
    }
    Ok(report)
}

/// `Ind ∘ 𝔡 = Ind` on every `δ̄_π` and class indicator of `UT_n`, `n ≤ n_max`.
pub fn verify_dagger_invariance(engine: &Engine, n_max: usize) -> Result<Report> {
    let hopf = GlHopf::new(engine);
    let mut report = Report::default();
    for n in 0..=n_max {
        let d = hopf.dagger_map(n)?;
        let mut inputs: Vec<(String, ClassFunction<Rational>)> = Nuio::enumerate(n)
            .iter()
            .map(|p| Ok((format!("pi={p} n={n}"), delta_indicator(engine, p)?)))
            .collect::<Result<_>>()?;
        let ut = hopf.ut_hopf().ut(n)?;
        inputs.extend(
            ClassFunction::indicator_basis(&ut)
                .into_iter()
                .enumerate()
                .map(|(c, f)| (format!("n={n} class={c}"), f)),
        );
        for (name, psi) in inputs {
            let lhs = hopf.induce_homogeneous(&d.apply(&psi)?)?;
            let rhs = hopf.induce_homogeneous(&psi)?;
            report.push(ReportEntry::compare(
                "induction-dagger",
                format!("q={} {name}", engine.q()),
                &lhs,
                &rhs,
            ));
        }
    }
    Ok(report)
}

/// The subgroup `W⁻¹ · UP_I · W` of `P_i`, with `W` the permutation matrix
/// of `w_I`.
fn mackey_subgroup(
    engine: &Engine,
    n: usize,
    sub: &[Label],
) -> Result<(Arc<GroupTable>, Arc<GroupTable>, Vec<Label>)> {
    let w = coset_rep_w(sub, n);
    let mut back = vec![0; n];
    for (k, img) in w.iter().enumerate() {
        back[*img as usize - 1] = k as Label + 1;
    }
    let a = SetComposition::split(sub, &complement(&interval(n), sub))?;
    let (_, _, parabolic) =
        PatternDescriptor::levi_radical_parabolic(TotalOrder::standard(n).as_order(), &a)?;
    let up = engine.pattern(&parabolic)?;
    let conj = |g: &FqMatrix| g.conjugate_by_permutation(&back);
    let k = engine.custom(
        format!("K_{sub:?}(P_{}(GL_{n}(F_{})))", sub.len(), engine.q()),
        n,
        up.elements().iter().map(conj).collect(),
        up.generators().iter().map(conj).collect(),
    )?;
    Ok((up, k, w))
}

/// `Res_{P_i} ∘ Ind_{UT_n}^{GL_n} = Σ_{|I| = i} Ind_{K_I}^{P_i} ∘ w_I^* ∘ Res_{UP_I}`
/// on the class indicators of `UT_n`.
pub fn mackey_witness(engine: &Engine, n: usize, i: usize) -> Result<Report> {
    if i > n {
        return Err(Error::Precondition(format!("block size {i} exceeds {n}")));
    }
    let ut = engine.ut(n)?;
    let gl = engine.gl(n)?;
    let p = engine.parabolic(n, i)?;
    let ind = ClassMap::induction(&ut, &gl)?;
    let res = ClassMap::restriction(&gl, &p)?;
    let mut terms = Vec::new();
    for sub in subsets(&interval(n)).into_iter().filter(|s| s.len() == i) {
        let (up, k, w) = mackey_subgroup(engine, n, &sub)?;
        let to_up = ClassMap::restriction(&ut, &up)?;
        let pull = ClassMap::pullback(&k, &up, |h| h.conjugate_by_permutation(&w))?;
        let up_to_p = ClassMap::induction(&k, &p)?;
        terms.push((to_up, pull, up_to_p));
    }
    let mut report = Report::default();
    for (c, psi) in ClassFunction::<Rational>::indicator_basis(&ut)
        .into_iter()
        .enumerate()
    {
        let lhs = res.apply(&ind.apply(&psi)?)?;
        let mut rhs = ClassFunction::zero(p.clone());
        for (to_up, pull, up_to_p) in &terms {
            rhs = rhs.add(&up_to_p.apply(&pull.apply(&to_up.apply(&psi)?)?)?)?;
        }
        report.push(ReportEntry::compare(
            "mackey",
            format!("q={} n={n} i={i} class={c}", engine.q()),
            &lhs,
            &rhs,
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
