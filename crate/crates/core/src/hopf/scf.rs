//! The symbolic Hopf algebra spanned by `δ̄_π`, `π` a natural unit interval
//! order, with coefficients Laurent polynomials in `t = 1/q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{complement, interval, subsets, Label, Nuio};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, LinComb};
use crate::report::{fingerprint, Report, ReportEntry, Status};
use crate::scalar::Scalar;
use crate::{Laurent, Rational};

/// `Σ c_π δ̄_π`
pub type ScfElement = LinComb<Nuio, Rational>;
/// `Σ c_{π,ρ} δ̄_π ⊗ δ̄_ρ`
pub type ScfTensor = LinComb<(Nuio, Nuio), Rational>;

pub fn delta(pi: &Nuio) -> ScfElement {
    ScfElement::basis(pi.clone())
}

pub fn unit() -> ScfElement {
    delta(&Nuio::empty())
}

pub fn counit(x: &ScfElement) -> Laurent {
    x.coeff(&Nuio::empty())
}

pub fn product(x: &ScfElement, y: &ScfElement) -> ScfElement {
    x.bilinear(y, |a, b| ScfElement::basis(a.shifted_ordinal_sum(b)))
}

/// One summand `t^{asc_I(π)} δ̄_{π|_I} ⊗ δ̄_{π|_{Iᶜ}}` of `Δ(δ̄_π)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTerm {
    pub subset: Vec<Label>,
    pub exponent: usize,
    pub left: Nuio,
    pub right: Nuio,
}

/// The `2^n` summands of `Δ(δ̄_π)`, one per `I ⊆ [n]`, before merging.
pub fn subset_terms(pi: &Nuio) -> Vec<SubsetTerm> {
    let all = interval(pi.n());
    subsets(&all)
        .into_par_iter()
        .map(|sub| {
            let rest = complement(&all, &sub);
            SubsetTerm {
                exponent: pi.asc_count(&sub).expect("subset"),
                left: pi.shifted_restrict(&sub).expect("subset"),
                right: pi.shifted_restrict(&rest).expect("subset"),
                subset: sub,
            }
        })
        .collect()
}

/// `Δ(δ̄_π) = Σ_{I ⊆ [n]} t^{asc_I(π)} δ̄_{π|_I} ⊗ δ̄_{π|_{Iᶜ}}`
pub fn coproduct_basis(pi: &Nuio) -> ScfTensor {
    subset_terms(pi)
        .into_iter()
        .map(|t| ((t.left, t.right), Laurent::t_pow(t.exponent as i32)))
        .collect()
}

pub fn coproduct(x: &ScfElement) -> ScfTensor {
    x.map(coproduct_basis)
}

/// Terms of `Δ(δ̄_π)` in bidegree `(i, j)` coming from the subsets `I` with
/// `|I| = i`.
pub fn coproduct_component(x: &ScfElement, i: usize, j: usize) -> ScfTensor {
    graded_component(&coproduct(x), i, j)
}

pub fn graded_component(x: &ScfTensor, i: usize, j: usize) -> ScfTensor {
    x.iter()
        .filter(|((a, b), _)| a.n() == i && b.n() == j)
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect()
}

pub fn degree_component(x: &ScfElement, n: usize) -> ScfElement {
    x.iter()
        .filter(|(p, _)| p.n() == n)
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect()
}

pub fn swap(x: &ScfTensor) -> ScfTensor {
    x.map(|(a, b)| ScfTensor::basis((b.clone(), a.clone())))
}

pub fn tensor(x: &ScfElement, y: &ScfElement) -> ScfTensor {
    x.bilinear(y, |a, b| ScfTensor::basis((a.clone(), b.clone())))
}

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`
pub fn tensor_product(x: &ScfTensor, y: &ScfTensor) -> ScfTensor {
    x.bilinear(y, |(a, b), (c, d)| {
        ScfTensor::basis((a.shifted_ordinal_sum(c), b.shifted_ordinal_sum(d)))
    })
}

/// `μ: scf ⊗ scf → scf`
pub fn multiply(x: &ScfTensor) -> ScfElement {
    x.map(|(a, b)| ScfElement::basis(a.shifted_ordinal_sum(b)))
}

/// `f ⊗ g`
pub fn map_tensor(
    x: &ScfTensor,
    f: impl Fn(&Nuio) -> ScfElement,
    g: impl Fn(&Nuio) -> ScfElement,
) -> ScfTensor {
    x.map(|(a, b)| tensor(&f(a), &g(b)))
}

/// `𝔡`: `δ̄_π ↦ δ̄_{π†}`.
pub fn dagger(x: &ScfElement) -> ScfElement {
    x.map(|p| ScfElement::basis(p.dagger()))
}

/// Antipode by the graded recursion `S(x) = -x - Σ S(x')x''` over the terms
/// of `Δ(x)` with both tensor factors of positive degree.
#[derive(Debug, Default)]
pub struct Antipode {
    memo: HashMap<Nuio, ScfElement>,
}

impl Antipode {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of_basis(&mut self, pi: &Nuio) -> ScfElement {
        if let Some(v) = self.memo.get(pi) {
            return v.clone();
        }
        let mut out = delta(pi).scale(&-&Laurent::one());
        if pi.n() > 0 {
            for ((a, b), c) in coproduct_basis(pi).iter() {
                if a.n() == 0 || b.n() == 0 {
                    continue;
                }
                let term = product(&self.of_basis(a), &delta(b)).scale(c);
                out = out.sub(&term);
            }
        } else {
            out = delta(pi);
        }
        self.memo.insert(pi.clone(), out.clone());
        out
    }

    pub fn apply(&mut self, x: &ScfElement) -> ScfElement {
        x.map(|p| self.of_basis(p))
    }
}

pub fn antipode(x: &ScfElement) -> ScfElement {
    Antipode::new().apply(x)
}

/// Every `δ̄_π` with `π` on `[n]`, `n ≤ max`.
pub fn basis_through(max: usize) -> Vec<Nuio> {
    (0..=max).flat_map(Nuio::enumerate).collect()
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    n: usize,
    strict: Vec<[Label; 2]>,
    coeff: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TensorTermJson {
    left: Nuio,
    right: Nuio,
    coeff: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    terms: Vec<TensorTermJson>,
}

fn coeff_json(c: &Laurent) -> BTreeMap<String, String> {
    c.terms()
        .map(|(e, v)| (e.to_string(), v.render()))
        .collect()
}

fn coeff_from_json(m: &BTreeMap<String, String>) -> Result<Laurent> {
    let mut out = Laurent::zero();
    for (e, v) in m {
        let e: i32 = e
            .parse()
            .map_err(|_| Error::Parse(format!("exponent {e:?}")))?;
        let v = Rational::parse(v).ok_or_else(|| Error::Parse(format!("coefficient {v:?}")))?;
        out.add_term(e, v);
    }
    Ok(out)
}

fn strict_json(p: &Nuio) -> Vec<[Label; 2]> {
    p.strict_pairs().iter().map(|(a, b)| [*a, *b]).collect()
}

pub fn element_to_json(x: &ScfElement) -> serde_json::Value {
    let terms = x
        .iter()
        .map(|(p, c)| TermJson {
            n: p.n(),
            strict: strict_json(p),
            coeff: coeff_json(c),
        })
        .collect();
    serde_json::to_value(ElementJson { terms }).expect("serializable")
}

pub fn element_from_json(v: &serde_json::Value) -> Result<ScfElement> {
    let parsed: ElementJson = serde_json::from_value(v.clone())?;
    let mut out = ScfElement::zero();
    for t in parsed.terms {
        let p = Nuio::new(t.n, t.strict.into_iter().map(|[a, b]| (a, b)))?;
        out.add_term(p, coeff_from_json(&t.coeff)?);
    }
    Ok(out)
}

pub fn tensor_to_json(x: &ScfTensor) -> serde_json::Value {
    let terms = x
        .iter()
        .map(|((a, b), c)| TensorTermJson {
            left: a.clone(),
            right: b.clone(),
            coeff: coeff_json(c),
        })
        .collect();
    serde_json::to_value(TensorJson { terms }).expect("serializable")
}

pub fn tensor_from_json(v: &serde_json::Value) -> Result<ScfTensor> {
    let parsed: TensorJson = serde_json::from_value(v.clone())?;
    let mut out = ScfTensor::zero();
    for t in parsed.terms {
        out.add_term((t.left, t.right), coeff_from_json(&t.coeff)?);
    }
    Ok(out)
}

/// One term per line: `coefficient * d[π]`.
pub struct ElementDisplay<'a>(pub &'a ScfElement);

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return writeln!(f, "0");
        }
        for (p, c) in self.0.iter() {
            writeln!(f, "({c}) d[n={} {}]", p.n(), pairs_text(p))?;
        }
        Ok(())
    }
}

pub struct TensorDisplay<'a>(pub &'a ScfTensor);

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return writeln!(f, "0");
        }
        for ((a, b), c) in self.0.iter() {
            writeln!(
                f,
                "({c}) d[n={} {}] (x) d[n={} {}]",
                a.n(),
                pairs_text(a),
                b.n(),
                pairs_text(b)
            )?;
        }
        Ok(())
    }
}

fn pairs_text(p: &Nuio) -> String {
    let pairs: Vec<String> = p
        .strict_pairs()
        .iter()
        .map(|(a, b)| format!("{a}<{b}"))
        .collect();
    format!("{{{}}}", pairs.join(","))
}

/// The smallest witnesses that the algebra is neither commutative nor
/// cocommutative; an entry passes when its two sides differ.
pub fn noncommutativity_report() -> Report {
    let point = delta(&Nuio::point());
    let ac2 = delta(&Nuio::antichain(2));
    let pi = Nuio::new(4, [(1, 4), (2, 4)]).expect("valid order");
    let full = coproduct(&delta(&pi));
    let differ = |check: &str, instance: &str, lhs: String, rhs: String| {
        let status = if lhs != rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        ReportEntry {
            check: check.into(),
            instance: instance.into(),
            status,
            lhs_hash: fingerprint(&lhs),
            rhs_hash: fingerprint(&rhs),
        }
    };
    let lhs = product(&point, &ac2);
    let rhs = product(&ac2, &point);
    let swapped = swap(&graded_component(&full, 3, 1));
    let other = graded_component(&full, 1, 3);
    [
        differ(
            "noncommutativity",
            "d[point]*d[antichain2] vs d[antichain2]*d[point]",
            format!("{lhs:?}"),
            format!("{rhs:?}"),
        ),
        differ(
            "noncocommutativity",
            "swap(D_(3,1)) vs D_(1,3) on d[{1<4,2<4}]",
            format!("{swapped:?}"),
            format!("{other:?}"),
        ),
    ]
    .into_iter()
    .collect()
}

/// `t`-polynomial from `(exponent, integer)` pairs.
pub fn poly(terms: &[(i32, i64)]) -> Laurent {
    LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, Rational::from_int(*c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu(n: usize, pairs: &[(Label, Label)]) -> Nuio {
        Nuio::new(n, pairs.iter().copied()).unwrap()
    }

    fn basis_tensor(a: &Nuio, b: &Nuio, c: Laurent) -> ScfTensor {
        ScfTensor::term((a.clone(), b.clone()), c)
    }

    #[test]
    fn noncommutative_products() {
        let point = Nuio::point();
        let ac2 = Nuio::antichain(2);
        assert_eq!(
            product(&delta(&point), &delta(&ac2)),
            delta(&nu(3, &[(1, 2), (1, 3)]))
        );
        assert_eq!(
            product(&delta(&ac2), &delta(&point)),
            delta(&nu(3, &[(1, 3), (2, 3)]))
        );
        let x = delta(&nu(2, &[(1, 2)]));
        assert_eq!(product(&unit(), &x), x);
        assert_eq!(product(&x, &unit()), x);
    }

    #[test]
    fn coproduct_components_of_the_witness() {
        let pi = nu(4, &[(1, 4), (2, 4)]);
        let full = coproduct(&delta(&pi));
        let total: usize = (0..=4)
            .map(|i| graded_component(&full, i, 4 - i).len())
            .sum();
        assert_eq!(total, full.len());
        let point = Nuio::point();
        let expected31 = basis_tensor(&Nuio::antichain(3), &point, poly(&[(1, 1)]))
            .add(&basis_tensor(
                &nu(3, &[(1, 3), (2, 3)]),
                &point,
                poly(&[(2, 1)]),
            ))
            .add(&basis_tensor(
                &nu(3, &[(1, 3)]),
                &point,
                poly(&[(0, 1), (1, 1)]),
            ));
        assert_eq!(graded_component(&full, 3, 1), expected31);
        let expected13 = basis_tensor(&point, &nu(3, &[(1, 3)]), poly(&[(1, 1), (2, 1)]))
            .add(&basis_tensor(
                &point,
                &nu(3, &[(1, 3), (2, 3)]),
                poly(&[(1, 1)]),
            ))
            .add(&basis_tensor(&point, &Nuio::antichain(3), poly(&[(0, 1)])));
        assert_eq!(graded_component(&full, 1, 3), expected13);
        assert_ne!(swap(&expected31), expected13);
        assert_eq!(coproduct(&unit()), tensor(&unit(), &unit()));
    }

    #[test]
    fn primitive_point() {
        let p = delta(&Nuio::point());
        assert_eq!(coproduct(&p), tensor(&p, &unit()).add(&tensor(&unit(), &p)));
        assert_eq!(antipode(&p), p.scale(&-&Laurent::one()));
        assert_eq!(antipode(&unit()), unit());
    }

    #[test]
    fn antipode_of_antichain2() {
        let ac2 = delta(&Nuio::antichain(2));
        let expected = ac2
            .scale(&-&Laurent::one())
            .add(&delta(&Nuio::chain(2)).scale(&poly(&[(0, 1), (1, 1)])));
        assert_eq!(antipode(&ac2), expected);
    }

    #[test]
    fn coassociative_and_associative() {
        let basis = basis_through(4);
        for p in &basis {
            let d = coproduct_basis(p);
            let left: LinComb<(Nuio, Nuio, Nuio), Rational> = d.map(|(a, b)| {
                coproduct_basis(a).map(|(x, y)| LinComb::basis((x.clone(), y.clone(), b.clone())))
            });
            let right: LinComb<(Nuio, Nuio, Nuio), Rational> = d.map(|(a, b)| {
                coproduct_basis(b).map(|(x, y)| LinComb::basis((a.clone(), x.clone(), y.clone())))
            });
            assert_eq!(left, right, "{p}");
        }
        let small = basis_through(2);
        for a in &small {
            for b in &small {
                for c in &small {
                    let (x, y, z) = (delta(a), delta(b), delta(c));
                    assert_eq!(product(&product(&x, &y), &z), product(&x, &product(&y, &z)));
                }
            }
        }
    }

    #[test]
    fn bialgebra_and_antipode_identities() {
        let basis = basis_through(3);
        for a in &basis {
            for b in &basis {
                if a.n() + b.n() > 4 {
                    continue;
                }
                let (x, y) = (delta(a), delta(b));
                assert_eq!(
                    coproduct(&product(&x, &y)),
                    tensor_product(&coproduct(&x), &coproduct(&y))
                );
            }
        }
        let mut s = Antipode::new();
        for p in basis_through(4) {
            let d = coproduct_basis(&p);
            let eps = if p.n() == 0 {
                unit()
            } else {
                ScfElement::zero()
            };
            let left = multiply(&d.map(|(a, b)| tensor(&s.of_basis(a), &delta(b))));
            let right = multiply(&d.map(|(a, b)| tensor(&delta(a), &s.of_basis(b))));
            assert_eq!(left, eps, "{p}");
            assert_eq!(right, eps, "{p}");
        }
    }

    #[test]
    fn dagger_is_antiautomorphism() {
        let basis = basis_through(3);
        for a in &basis {
            let x = delta(a);
            assert_eq!(dagger(&dagger(&x)), x);
            let lhs = map_tensor(
                &swap(&coproduct(&x)),
                |p| dagger(&delta(p)),
                |p| dagger(&delta(p)),
            );
            assert_eq!(lhs, coproduct(&dagger(&x)));
            for b in &basis {
                let y = delta(b);
                assert_eq!(dagger(&product(&x, &y)), product(&dagger(&y), &dagger(&x)));
            }
        }
        assert_eq!(nu(4, &[(1, 4), (2, 4)]).dagger(), nu(4, &[(1, 3), (1, 4)]));
    }

    #[test]
    fn witnesses_pass() {
        let r = noncommutativity_report();
        assert_eq!(r.len(), 2);
        assert!(r.passed());
    }

    #[test]
    fn json_round_trip() {
        let x = antipode(&delta(&nu(3, &[(1, 3)])))
            .add(&delta(&Nuio::point()).scale(&poly(&[(-2, 3)])));
        assert_eq!(element_from_json(&element_to_json(&x)).unwrap(), x);
        let d = coproduct(&x);
        assert_eq!(tensor_from_json(&tensor_to_json(&d)).unwrap(), d);
        let v: serde_json::Value = serde_json::from_str(
            r#"{"terms":[{"n":2,"strict":[[1,2]],"coeff":{"-2":"1/1","0":"3/2"}}]}"#,
        )
        .unwrap();
        let e = element_from_json(&v).unwrap();
        assert_eq!(e.coeff(&Nuio::chain(2)).coeff(-2), Rational::from_int(1));
        assert!(element_from_json(
            &serde_json::json!({"terms":[{"n":2,"strict":[[2,1]],"coeff":{}}]})
        )
        .is_err());
    }
}
