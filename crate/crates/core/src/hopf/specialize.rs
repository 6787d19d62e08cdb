//! Evaluation of symbolic elements at a prime: `t ↦ 1/q`, `δ̄_π ↦ 1_{UT(π)}`.

use crate::class_fn::{ClassFunction, ProductClassFunction};
use crate::combinatorics::Nuio;
use crate::error::Result;
use crate::group::{Engine, PatternDescriptor};
use crate::hopf::scf;
use crate::hopf::scf::{ScfElement, ScfTensor};
use crate::hopf::ut::{UtCf, UtHopf, UtTensor};
use crate::report::{Report, ReportEntry};
use crate::Rational;

/// `δ̄_π` on `UT_n(F_q)`.
pub fn delta_indicator(engine: &Engine, pi: &Nuio) -> Result<ClassFunction<Rational>> {
    let whole = engine.ut(pi.n())?;
    let sub = engine.pattern(&PatternDescriptor::from_order(&pi.to_order())?)?;
    ClassFunction::subgroup_indicator(whole, &sub)
}

pub fn specialize(engine: &Engine, x: &ScfElement) -> Result<UtCf<Rational>> {
    let mut out = UtCf::zero();
    for (pi, c) in x.iter() {
        out.add_component(delta_indicator(engine, pi)?.scale(&c.eval_inv_q(engine.q())))?;
    }
    Ok(out)
}

pub fn specialize_tensor(engine: &Engine, x: &ScfTensor) -> Result<UtTensor<Rational>> {
    let mut out = UtTensor::zero();
    for ((a, b), c) in x.iter() {
        let piece = ProductClassFunction::tensor(
            &delta_indicator(engine, a)?,
            &delta_indicator(engine, b)?,
        );
        out.add_component(piece.scale(&c.eval_inv_q(engine.q())))?;
    }
    Ok(out)
}

/// Brute-force `st ∘ Def ∘ Res` and `Inf ∘ st⁻¹` on `UT_n(F_q)` against the
/// symbolic structure constants at `t = 1/q`: every `δ̄_π` with `n ≤ n_max`,
/// every pair `δ̄_π ⊗ δ̄_ρ` of total degree at most `n_max`.
pub fn oracle_suite(engine: &Engine, n_max: usize) -> Result<Report> {
    let hopf = UtHopf::new(engine);
    let q = engine.q();
    let basis = scf::basis_through(n_max);
    let mut report = Report::default();
    for pi in &basis {
        let brute = hopf.delta_via_parabolic(&delta_indicator(engine, pi)?)?;
        let formula = specialize_tensor(engine, &scf::coproduct(&scf::delta(pi)))?;
        report.push(ReportEntry::compare(
            "coproduct-oracle",
            format!("q={q} pi={pi} n={}", pi.n()),
            &brute,
            &formula,
        ));
    }
    for pi in &basis {
        for rho in basis.iter().filter(|r| r.n() + pi.n() <= n_max) {
            let brute = hopf.mu_homogeneous(
                &delta_indicator(engine, pi)?,
                &delta_indicator(engine, rho)?,
            )?;
            let formula = delta_indicator(engine, &pi.shifted_ordinal_sum(rho))?;
            report.push(ReportEntry::compare(
                "product-oracle",
                format!("q={q} pi={pi} n={} rho={rho} m={}", pi.n(), rho.n()),
                &brute,
                &formula,
            ));
        }
    }
    Ok(report)
}
