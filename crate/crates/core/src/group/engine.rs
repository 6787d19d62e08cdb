use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::gl::{enumerate_gl, gl_generators, gl_order, in_parabolic};
use super::{GroupTable, PatternDescriptor};
use crate::error::{Error, Result};
use crate::matrix::{FqMatrix, PrimeField};

/// Largest group enumerated unless `UTHOPF_BUDGET` says otherwise.
pub const DEFAULT_BUDGET: usize = 25_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum GroupKey {
    Pattern(PatternDescriptor),
    Gl(usize),
    Parabolic(usize, usize),
}

/// Builds and caches group tables over one prime field.
pub struct Engine {
    field: PrimeField,
    budget: usize,
    groups: Mutex<HashMap<GroupKey, Arc<GroupTable>>>,
}

impl Engine {
    /// Reads the enumeration budget from `UTHOPF_BUDGET`, if set.
    pub fn new(q: u32) -> Result<Self> {
        let budget = match std::env::var("UTHOPF_BUDGET") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("UTHOPF_BUDGET={v:?}")))?,
            Err(_) => DEFAULT_BUDGET,
        };
        Self::with_budget(q, budget)
    }

    pub fn with_budget(q: u32, budget: usize) -> Result<Self> {
        Ok(Self {
            field: PrimeField::new(q)?,
            budget,
            groups: Mutex::new(HashMap::new()),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.p()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn check_budget(&self, what: impl FnOnce() -> String, requested: u128) -> Result<()> {
        if requested > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                what: what(),
                requested,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn cached(
        &self,
        key: GroupKey,
        build: impl FnOnce() -> Result<GroupTable>,
    ) -> Result<Arc<GroupTable>> {
        if let Some(g) = self.groups.lock().expect("cache lock").get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(build()?);
        Ok(self
            .groups
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(g)
            .clone())
    }

    pub fn pattern(&self, desc: &PatternDescriptor) -> Result<Arc<GroupTable>> {
        let q = self.q();
        let label = if *desc == PatternDescriptor::upper_triangular(desc.n()) {
            format!("UT_{}(F_{q})", desc.n())
        } else {
            format!("UT{desc}(F_{q})")
        };
        self.check_budget(|| label.clone(), desc.order(q))?;
        self.cached(GroupKey::Pattern(desc.clone()), || {
            let elements = desc.enumerate(self.field);
            Ok(GroupTable::new(
                label,
                desc.n(),
                self.field,
                elements,
                desc.generators(self.field),
            ))
        })
    }

    /// `UT_n(F_q)`
    pub fn ut(&self, n: usize) -> Result<Arc<GroupTable>> {
        self.pattern(&PatternDescriptor::upper_triangular(n))
    }

    /// `GL_n(F_q)`
    pub fn gl(&self, n: usize) -> Result<Arc<GroupTable>> {
        let q = self.q();
        self.check_budget(|| format!("GL_{n}(F_{q})"), gl_order(n, q))?;
        self.cached(GroupKey::Gl(n), || {
            let elements = enumerate_gl(n, self.field);
            Ok(GroupTable::new(
                format!("GL_{n}(F_{q})"),
                n,
                self.field,
                elements,
                gl_generators(n, self.field),
            ))
        })
    }

    /// The parabolic `P_i ⊆ GL_n`, found by filtering `GL_n` on its membership
    /// predicate.
    pub fn parabolic(&self, n: usize, i: usize) -> Result<Arc<GroupTable>> {
        let gl = self.gl(n)?;
        let q = self.q();
        self.cached(GroupKey::Parabolic(n, i), || {
            let elements: Vec<FqMatrix> = gl
                .elements()
                .iter()
                .copied()
                .filter(|g| in_parabolic(g, i))
                .collect();
            let generators = elements.clone();
            Ok(GroupTable::new(
                format!("P_{i}(GL_{n}(F_{q}))"),
                n,
                self.field,
                elements,
                generators,
            ))
        })
    }

    /// Group on an explicit element list; classes use conjugation by
    /// `generators`.
    pub fn custom(
        &self,
        label: String,
        n: usize,
        elements: Vec<FqMatrix>,
        generators: Vec<FqMatrix>,
    ) -> Result<Arc<GroupTable>> {
        self.check_budget(|| label.clone(), elements.len() as u128)?;
        Ok(Arc::new(GroupTable::new(
            label, n, self.field, elements, generators,
        )))
    }
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("q", &self.q())
            .field("budget", &self.budget)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{GroundSet, PartialOrder};
    use std::collections::BTreeSet;

    /// Conjugacy classes by conjugating with every element.
    fn brute_force_classes(g: &GroupTable) -> BTreeSet<BTreeSet<usize>> {
        let els = g.elements();
        let mut seen = vec![false; els.len()];
        let mut out = BTreeSet::new();
        for i in 0..els.len() {
            if seen[i] {
                continue;
            }
            let orbit: BTreeSet<usize> = els
                .iter()
                .map(|x| {
                    g.index_of(&x.mul(&els[i]).mul(&x.inverse().unwrap()))
                        .unwrap() as usize
                })
                .collect();
            for j in &orbit {
                seen[*j] = true;
            }
            out.insert(orbit);
        }
        out
    }

    fn table_classes(g: &GroupTable) -> BTreeSet<BTreeSet<usize>> {
        g.classes()
            .iter()
            .map(|c| c.iter().map(|i| *i as usize).collect())
            .collect()
    }

    #[test]
    fn class_examples() {
        let e = Engine::with_budget(2, DEFAULT_BUDGET).unwrap();
        let ut2 = e.ut(2).unwrap();
        assert_eq!(ut2.class_count(), 2);
        let gl2 = e.gl(2).unwrap();
        // Classes numbered by least element: order 2, order 3, identity.
        let sizes: Vec<usize> = gl2.classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
        assert_eq!(gl2.class_of(gl2.identity()), 2);
        assert_eq!(e.ut(3).unwrap().class_count(), 5);
        let ut3 = e.ut(3).unwrap();
        let center = ut3.classes().iter().filter(|c| c.len() == 1).count();
        let total: usize = ut3.classes().iter().map(Vec::len).sum();
        assert_eq!((center, total), (2, 8));
    }

    #[test]
    fn generator_orbits_match_brute_force() {
        for q in [2, 3] {
            let e = Engine::with_budget(q, DEFAULT_BUDGET).unwrap();
            for n in 1..=3 {
                let g = e.gl(n).unwrap();
                assert_eq!(table_classes(&g), brute_force_classes(&g), "GL_{n}(F_{q})");
                let u = e.ut(n).unwrap();
                assert_eq!(table_classes(&u), brute_force_classes(&u), "UT_{n}(F_{q})");
            }
            let u4 = e.ut(4).unwrap();
            assert_eq!(table_classes(&u4), brute_force_classes(&u4));
        }
        let e = Engine::with_budget(2, DEFAULT_BUDGET).unwrap();
        let p = e
            .pattern(&PatternDescriptor::new(4, [(1, 3), (1, 4), (2, 4), (3, 4), (2, 3)]).unwrap())
            .unwrap();
        assert_eq!(table_classes(&p), brute_force_classes(&p));
    }

    #[test]
    fn pattern_group_orders() {
        for q in [2u32, 3] {
            let e = Engine::with_budget(q, DEFAULT_BUDGET).unwrap();
            for n in 0..=4usize {
                let pairs: Vec<(u32, u32)> = (1..=n as u32)
                    .flat_map(|i| (i + 1..=n as u32).map(move |j| (i, j)))
                    .collect();
                for mask in 0u32..(1 << pairs.len()) {
                    let strict = pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, p)| *p);
                    let po = PartialOrder::from_strict(GroundSet::interval(n), strict).unwrap();
                    let desc = PatternDescriptor::from_order(&po).unwrap();
                    let g = e.pattern(&desc).unwrap();
                    assert_eq!(g.order() as u128, (q as u128).pow((po.len() - n) as u32));
                    assert!(g.is_closed());
                }
            }
        }
    }

    #[test]
    fn tables_and_budget() {
        let e = Engine::with_budget(2, 100).unwrap();
        assert!(matches!(e.gl(3), Err(Error::BudgetExceeded { .. })));
        let ut3 = e.ut(3).unwrap();
        let t = ut3.mult_table().unwrap();
        assert_eq!(t.len(), 64);
        for a in 0..8u32 {
            assert_eq!(ut3.mul(a, ut3.inv(a)), ut3.identity());
            for b in 0..8u32 {
                assert_eq!(
                    ut3.element(ut3.mul(a, b)),
                    &ut3.element(a).mul(ut3.element(b))
                );
            }
        }
        assert!(Arc::ptr_eq(&ut3, &e.ut(3).unwrap()));
        assert!(ut3.is_subset_of(&Engine::with_budget(2, 1000).unwrap().gl(3).unwrap()));
    }

    #[test]
    fn summary_json() {
        let e = Engine::with_budget(2, DEFAULT_BUDGET).unwrap();
        let s = e.gl(2).unwrap().summary();
        assert_eq!(s.order, 6);
        assert_eq!(s.class_sizes, vec![3, 2, 1]);
        assert_eq!(s.class_reps[0], "0110");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            serde_json::from_str::<crate::group::GroupSummary>(&json).unwrap(),
            s
        );
    }
}
