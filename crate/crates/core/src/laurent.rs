//! Laurent polynomials in `t = 1/q` and finitely supported linear combinations
//! with Laurent coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{inv_q_pow, Scalar};

/// Finitely supported map from exponents of `t` to coefficients. No zero
/// coefficient is ever stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<S> {
    coeffs: BTreeMap<i32, S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, S::one())
    }

    /// `c * t^e`
    pub fn monomial(e: i32, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn t_pow(e: i32) -> Self {
        Self::monomial(e, S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, S)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(S::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> S {
        self.coeffs.get(&e).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &S)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms().map(|(e, v)| (e, v.clone() * c.clone())))
    }

    /// Substitutes `t = 1/q`.
    pub fn eval_inv_q(&self, q: u32) -> S {
        self.terms().fold(S::zero(), |acc, (e, c)| {
            acc + c.clone() * inv_q_pow::<S>(q, e)
        })
    }

    pub fn eval(&self, t: &S) -> S {
        let tinv = || S::one() / t.clone();
        self.terms().fold(S::zero(), |acc, (e, c)| {
            let p = if e >= 0 {
                t.pow_i(e as u32)
            } else {
                tinv().pow_i(e.unsigned_abs())
            };
            acc + c.clone() * p
        })
    }
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Add for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: Self) -> LaurentPoly<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, -c.clone())))
    }
}

impl<S: Scalar> Mul for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: Self) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = c.render();
            let c = c.strip_suffix("/1").unwrap_or(&c).to_string();
            match (e, c.as_str()) {
                (0, _) => write!(f, "{c}")?,
                (1, "1") => write!(f, "t")?,
                (_, "1") => write!(f, "t^{e}")?,
                (1, _) => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Linear combination of basis keys with Laurent coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LinComb<K: Ord, S> {
    terms: BTreeMap<K, LaurentPoly<S>>,
}

impl<K: Ord + Clone, S: Scalar> LinComb<K, S> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, LaurentPoly::one())
    }

    pub fn term(k: K, c: LaurentPoly<S>) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: LaurentPoly<S>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> LaurentPoly<S> {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &LaurentPoly<S>)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &LaurentPoly<S>) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.clone(), -v);
        }
        out
    }

    /// Linear extension of `f` on basis keys.
    pub fn map<K2: Ord + Clone, F>(&self, mut f: F) -> LinComb<K2, S>
    where
        F: FnMut(&K) -> LinComb<K2, S>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c * c2);
            }
        }
        out
    }

    /// Bilinear extension of `f` on pairs of basis keys.
    pub fn bilinear<K2, K3, F>(&self, other: &LinComb<K2, S>, mut f: F) -> LinComb<K3, S>
    where
        K2: Ord + Clone,
        K3: Ord + Clone,
        F: FnMut(&K, &K2) -> LinComb<K3, S>,
    {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let c = ca * cb;
                for (k, ck) in f(a, b).iter() {
                    out.add_term(k.clone(), &c * ck);
                }
            }
        }
        out
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, LaurentPoly<S>)> for LinComb<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, LaurentPoly<S>)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}
