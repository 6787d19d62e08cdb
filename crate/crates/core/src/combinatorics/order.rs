use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use super::{Label, Pair};
use crate::error::{Error, Result};

/// Strictly increasing list of labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroundSet(Vec<Label>);

impl GroundSet {
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Self {
        let set: BTreeSet<Label> = labels.into_iter().collect();
        Self(set.into_iter().collect())
    }

    pub fn interval(n: usize) -> Self {
        Self((1..=n as Label).collect())
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: Label) -> bool {
        self.0.binary_search(&l).is_ok()
    }

    /// Position of `l` in increasing order.
    pub fn position(&self, l: Label) -> Option<usize> {
        self.0.binary_search(&l).ok()
    }

    pub fn is_disjoint(&self, other: &GroundSet) -> bool {
        self.0.iter().all(|l| !other.contains(*l))
    }

    pub fn union(&self, other: &GroundSet) -> GroundSet {
        GroundSet::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub(crate) fn check_subset(&self, sub: &[Label]) -> Result<()> {
        let missing: Vec<Label> = sub.iter().copied().filter(|l| !self.contains(*l)).collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::NotSubset { missing })
        }
    }

    /// True when the ground set is `{1, ..., n}`.
    pub fn is_interval(&self) -> bool {
        self.0.iter().enumerate().all(|(i, l)| *l as usize == i + 1)
    }
}

/// Reflexive, antisymmetric, transitively closed relation on a ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialOrder {
    ground: GroundSet,
    relation: BTreeSet<Pair>,
}

impl PartialOrder {
    /// Closes `strict` reflexively and transitively; fails if the closure is
    /// not antisymmetric or mentions labels outside `ground`.
    pub fn from_strict<I: IntoIterator<Item = Pair>>(ground: GroundSet, strict: I) -> Result<Self> {
        let mut relation: BTreeSet<Pair> = ground.labels().iter().map(|l| (*l, *l)).collect();
        for (a, b) in strict {
            ground.check_subset(&[a, b])?;
            relation.insert((a, b));
        }
        let labels = ground.labels().to_vec();
        // Warshall closure.
        for &k in &labels {
            for &i in &labels {
                if !relation.contains(&(i, k)) {
                    continue;
                }
                for &j in &labels {
                    if relation.contains(&(k, j)) {
                        relation.insert((i, j));
                    }
                }
            }
        }
        if let Some((a, b)) = relation
            .iter()
            .find(|(a, b)| a != b && relation.contains(&(*b, *a)))
        {
            return Err(Error::InvalidOrder(format!(
                "{a} and {b} are related both ways"
            )));
        }
        Ok(Self { ground, relation })
    }

    /// Accepts an already closed relation and validates every invariant.
    pub fn from_relation(ground: GroundSet, relation: BTreeSet<Pair>) -> Result<Self> {
        let po = Self::from_strict(ground, relation.iter().copied().filter(|(a, b)| a != b))?;
        if po.relation != relation {
            return Err(Error::InvalidOrder(
                "relation is not reflexive and transitively closed".into(),
            ));
        }
        Ok(po)
    }

    pub fn antichain(ground: GroundSet) -> Self {
        Self::from_strict(ground, std::iter::empty()).expect("antichain is a partial order")
    }

    pub fn empty() -> Self {
        Self::antichain(GroundSet::default())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn relation(&self) -> &BTreeSet<Pair> {
        &self.relation
    }

    pub fn len(&self) -> usize {
        self.relation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relation.is_empty()
    }

    pub fn contains(&self, a: Label, b: Label) -> bool {
        self.relation.contains(&(a, b))
    }

    pub fn comparable(&self, a: Label, b: Label) -> bool {
        self.contains(a, b) || self.contains(b, a)
    }

    /// Sorted strict pairs; the canonical serialization.
    pub fn strict_pairs(&self) -> Vec<Pair> {
        self.relation
            .iter()
            .copied()
            .filter(|(a, b)| a != b)
            .collect()
    }

    pub fn is_total(&self) -> bool {
        let n = self.ground.len();
        self.relation.len() == n * (n + 1) / 2
    }

    /// `π1 ⊔ π2 ⊔ I1 × I2`
    pub fn ordinal_sum(&self, other: &PartialOrder) -> Result<PartialOrder> {
        if !self.ground.is_disjoint(&other.ground) {
            let common = self
                .ground
                .labels()
                .iter()
                .copied()
                .filter(|l| other.ground.contains(*l))
                .collect();
            return Err(Error::OverlappingGround(common));
        }
        let mut relation = self.relation.clone();
        relation.extend(other.relation.iter().copied());
        for &a in self.ground.labels() {
            for &b in other.ground.labels() {
                relation.insert((a, b));
            }
        }
        Ok(PartialOrder {
            ground: self.ground.union(&other.ground),
            relation,
        })
    }

    pub fn restrict(&self, sub: &[Label]) -> Result<PartialOrder> {
        self.ground.check_subset(sub)?;
        let ground = GroundSet::new(sub.iter().copied());
        let relation = self
            .relation
            .iter()
            .copied()
            .filter(|(a, b)| ground.contains(*a) && ground.contains(*b))
            .collect();
        Ok(PartialOrder { ground, relation })
    }

    /// `{(σ(i), σ(j)) : (i, j) ∈ π}`
    pub fn relabel(&self, sigma: &LabelBijection) -> Result<PartialOrder> {
        if sigma.domain() != self.ground {
            return Err(Error::GroundMismatch {
                left: sigma.domain().labels().to_vec(),
                right: self.ground.labels().to_vec(),
            });
        }
        let relation = self
            .relation
            .iter()
            .map(|(a, b)| (sigma.apply(*a), sigma.apply(*b)))
            .collect();
        Ok(PartialOrder {
            ground: sigma.codomain(),
            relation,
        })
    }

    /// Intersection of relations on the same ground set.
    pub fn intersect_pairs(&self, pairs: &BTreeSet<Pair>) -> BTreeSet<Pair> {
        self.relation.intersection(pairs).copied().collect()
    }
}

impl fmt::Display for PartialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strict = self.strict_pairs();
        if strict.is_empty() {
            return write!(f, "{{}} on {:?}", self.ground.labels());
        }
        write!(
            f,
            "{{{}}}",
            strict.iter().map(|(a, b)| format!("{a}<{b}")).join(",")
        )
    }
}

/// A partial order with `binom(|I| + 1, 2)` relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalOrder(PartialOrder);

impl TotalOrder {
    /// `chain[0] < chain[1] < ...`
    pub fn from_chain(chain: &[Label]) -> Result<Self> {
        let ground = GroundSet::new(chain.iter().copied());
        if ground.len() != chain.len() {
            return Err(Error::InvalidOrder(format!(
                "chain {chain:?} repeats a label"
            )));
        }
        let strict = chain.iter().tuple_combinations().map(|(a, b)| (*a, *b));
        Ok(Self(PartialOrder::from_strict(ground, strict)?))
    }

    /// `1 < 2 < ... < n`
    pub fn standard(n: usize) -> Self {
        Self::from_chain(&super::interval(n)).expect("standard chain")
    }

    pub fn try_from_order(po: PartialOrder) -> Result<Self> {
        if po.is_total() {
            Ok(Self(po))
        } else {
            Err(Error::InvalidOrder(format!("{po} is not total")))
        }
    }

    pub fn as_order(&self) -> &PartialOrder {
        &self.0
    }

    pub fn ground(&self) -> &GroundSet {
        self.0.ground()
    }

    /// Labels from least to greatest.
    pub fn chain(&self) -> Vec<Label> {
        let mut labels = self.0.ground().labels().to_vec();
        labels.sort_by_key(|l| {
            self.0
                .ground()
                .labels()
                .iter()
                .filter(|m| self.0.contains(**m, *l))
                .count()
        });
        labels
    }

    pub fn restrict(&self, sub: &[Label]) -> Result<TotalOrder> {
        Ok(TotalOrder(self.0.restrict(sub)?))
    }

    pub fn ordinal_sum(&self, other: &TotalOrder) -> Result<TotalOrder> {
        Ok(TotalOrder(self.0.ordinal_sum(&other.0)?))
    }

    pub fn relabel(&self, sigma: &LabelBijection) -> Result<TotalOrder> {
        Ok(TotalOrder(self.0.relabel(sigma)?))
    }

    /// Every total order of `labels`, in lexicographic order of chains.
    pub fn all(labels: &[Label]) -> Vec<TotalOrder> {
        labels
            .iter()
            .copied()
            .permutations(labels.len())
            .map(|c| TotalOrder::from_chain(&c).expect("permutation is a chain"))
            .collect()
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.chain().iter().join("<"))
    }
}

/// Bijection between two label sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelBijection {
    map: BTreeMap<Label, Label>,
}

impl LabelBijection {
    pub fn new<I: IntoIterator<Item = Pair>>(pairs: I) -> Result<Self> {
        let map: BTreeMap<Label, Label> = pairs.into_iter().collect();
        let image: BTreeSet<Label> = map.values().copied().collect();
        if image.len() != map.len() {
            return Err(Error::InvalidOrder("label map is not injective".into()));
        }
        Ok(Self { map })
    }

    pub fn identity(ground: &GroundSet) -> Self {
        Self {
            map: ground.labels().iter().map(|l| (*l, *l)).collect(),
        }
    }

    pub fn domain(&self) -> GroundSet {
        GroundSet::new(self.map.keys().copied())
    }

    pub fn codomain(&self) -> GroundSet {
        GroundSet::new(self.map.values().copied())
    }

    /// Panics on labels outside the domain.
    pub fn apply(&self, l: Label) -> Label {
        self.map[&l]
    }

    pub fn get(&self, l: Label) -> Option<Label> {
        self.map.get(&l).copied()
    }

    pub fn inverse(&self) -> LabelBijection {
        Self {
            map: self.map.iter().map(|(a, b)| (*b, *a)).collect(),
        }
    }

    pub fn compose(&self, first: &LabelBijection) -> Result<LabelBijection> {
        if first.codomain() != self.domain() {
            return Err(Error::GroundMismatch {
                left: first.codomain().labels().to_vec(),
                right: self.domain().labels().to_vec(),
            });
        }
        Ok(Self {
            map: first
                .map
                .iter()
                .map(|(a, b)| (*a, self.apply(*b)))
                .collect(),
        })
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.map.iter().map(|(a, b)| (*a, *b))
    }
}

/// Order-preserving bijection `I → {1, ..., |I|}`: `r ↦ #{s ∈ I : s ≤ r}`.
pub fn cano(labels: &[Label]) -> LabelBijection {
    let ground = GroundSet::new(labels.iter().copied());
    LabelBijection {
        map: ground
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (*l, i as Label + 1))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn po(ground: &[Label], strict: &[Pair]) -> PartialOrder {
        PartialOrder::from_strict(
            GroundSet::new(ground.iter().copied()),
            strict.iter().copied(),
        )
        .unwrap()
    }

    // a=1, b=2, c=3, d=4
    #[test]
    fn ordinal_sum_of_antichain_and_point() {
        let s = po(&[1, 2, 3], &[]).ordinal_sum(&po(&[4], &[])).unwrap();
        assert_eq!(s.strict_pairs(), vec![(1, 4), (2, 4), (3, 4)]);
        let p = po(&[1, 2], &[(1, 2)]);
        assert_eq!(p.ordinal_sum(&PartialOrder::empty()).unwrap(), p);
        let chain = po(&[1, 2], &[(1, 2)])
            .ordinal_sum(&po(&[3, 4], &[(3, 4)]))
            .unwrap();
        assert_eq!(chain, TotalOrder::standard(4).as_order().clone());
        assert!(matches!(
            p.ordinal_sum(&p),
            Err(Error::OverlappingGround(_))
        ));
    }

    #[test]
    fn restriction_examples() {
        // a < d, b < c < d restricted to {a, b, c} keeps only b < c
        let p = po(&[1, 2, 3, 4], &[(1, 4), (2, 3), (3, 4)]);
        assert_eq!(p.restrict(&[1, 2, 3]).unwrap().strict_pairs(), vec![(2, 3)]);
        let chain = TotalOrder::standard(4);
        assert_eq!(chain.restrict(&[1, 2, 4]).unwrap().chain(), vec![1, 2, 4]);
        assert!(p.restrict(&[]).unwrap().is_empty());
        assert!(matches!(p.restrict(&[9]), Err(Error::NotSubset { .. })));
    }

    #[test]
    fn relabeling() {
        let p = po(&[1, 2], &[(1, 2)]);
        let id = LabelBijection::identity(p.ground());
        assert_eq!(p.relabel(&id).unwrap(), p);
        let swap = LabelBijection::new([(1, 2), (2, 1)]).unwrap();
        let q = p.relabel(&swap).unwrap();
        assert_eq!(q.strict_pairs(), vec![(2, 1)]);
        assert_eq!(q.relabel(&swap.inverse()).unwrap(), p);
        let bad = LabelBijection::new([(1, 5)]).unwrap();
        assert!(p.relabel(&bad).is_err());
    }

    #[test]
    fn cano_examples() {
        let c = cano(&[2, 4]);
        assert_eq!(c.pairs().collect::<Vec<_>>(), vec![(2, 1), (4, 2)]);
        assert_eq!(
            cano(&[1, 2, 3]),
            LabelBijection::identity(&GroundSet::interval(3))
        );
        let c = cano(&[2, 3, 5, 6]);
        assert_eq!(
            c.pairs().collect::<Vec<_>>(),
            vec![(2, 1), (3, 2), (5, 3), (6, 4)]
        );
    }

    #[test]
    fn closure_and_antisymmetry() {
        let p = po(&[1, 2, 3], &[(1, 2), (2, 3)]);
        assert!(p.contains(1, 3));
        assert!(p.is_total());
        assert_eq!(p.len(), 6);
        let bad = PartialOrder::from_strict(GroundSet::interval(2), [(1, 2), (2, 1)]);
        assert!(bad.is_err());
        let t = TotalOrder::from_chain(&[3, 1, 2]).unwrap();
        assert_eq!(t.chain(), vec![3, 1, 2]);
        assert_eq!(TotalOrder::all(&[1, 2, 3]).len(), 6);
    }

    #[test]
    fn ordinal_sum_is_associative_small() {
        let grounds: [&[Label]; 3] = [&[1, 2], &[3], &[4, 5]];
        let orders: Vec<Vec<PartialOrder>> = grounds
            .iter()
            .map(|g| {
                let pairs: Vec<Pair> = g.iter().copied().tuple_combinations().collect();
                super::super::subsets(&(0..pairs.len() as u32).collect::<Vec<_>>())
                    .into_iter()
                    .filter_map(|s| {
                        PartialOrder::from_strict(
                            GroundSet::new(g.iter().copied()),
                            s.iter().map(|i| pairs[*i as usize]),
                        )
                        .ok()
                    })
                    .collect()
            })
            .collect();
        for a in &orders[0] {
            for b in &orders[1] {
                for c in &orders[2] {
                    let left = a.ordinal_sum(b).unwrap().ordinal_sum(c).unwrap();
                    let right = a.ordinal_sum(&b.ordinal_sum(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                    assert_eq!(left.restrict(a.ground().labels()).unwrap(), *a);
                }
            }
        }
    }
}
