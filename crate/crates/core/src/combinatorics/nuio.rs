use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{cano, GroundSet, Label, Pair, PartialOrder};
use crate::error::{Error, Result};

/// A natural unit interval order on `[n]`, stored as its sorted strict pairs.
///
/// Ordered by `(n, strict pairs)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PosetJson", into = "PosetJson")]
pub struct Nuio {
    n: usize,
    strict: Vec<Pair>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    strict: Vec<[Label; 2]>,
}

impl TryFrom<PosetJson> for Nuio {
    type Error = Error;
    fn try_from(p: PosetJson) -> Result<Self> {
        Nuio::new(p.n, p.strict.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Nuio> for PosetJson {
    fn from(p: Nuio) -> Self {
        PosetJson {
            n: p.n,
            strict: p.strict.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl Nuio {
    /// Closes `strict` transitively on `[n]` and validates the result.
    pub fn new<I: IntoIterator<Item = Pair>>(n: usize, strict: I) -> Result<Self> {
        let po = PartialOrder::from_strict(GroundSet::interval(n), strict)?;
        Self::try_from_order(&po)
    }

    pub fn try_from_order(po: &PartialOrder) -> Result<Self> {
        if !Self::is_nuio(po)? {
            return Err(Error::NotNuio(po.to_string()));
        }
        Ok(Self {
            n: po.ground().len(),
            strict: po.strict_pairs(),
        })
    }

    /// True iff `po` extends `1 < ... < n` and is closed under moving a strict
    /// pair `(j, k)` to any `(i, l)` with `i ≤ j`, `k ≤ l`.
    pub fn is_nuio(po: &PartialOrder) -> Result<bool> {
        if !po.ground().is_interval() {
            return Err(Error::NotNuio(format!(
                "ground {:?} is not [n]",
                po.ground().labels()
            )));
        }
        let n = po.ground().len() as Label;
        for (j, k) in po.strict_pairs() {
            if j > k {
                return Ok(false);
            }
            for i in 1..=j {
                for l in k..=n {
                    if !po.contains(i, l) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn empty() -> Self {
        Self {
            n: 0,
            strict: Vec::new(),
        }
    }

    /// `1 < 2 < ... < n`
    pub fn chain(n: usize) -> Self {
        let strict = (1..=n as Label).tuple_combinations().collect();
        Self { n, strict }
    }

    pub fn antichain(n: usize) -> Self {
        Self {
            n,
            strict: Vec::new(),
        }
    }

    pub fn point() -> Self {
        Self::antichain(1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn strict_pairs(&self) -> &[Pair] {
        &self.strict
    }

    pub fn contains(&self, i: Label, j: Label) -> bool {
        i == j || self.strict.binary_search(&(i, j)).is_ok()
    }

    /// `|π|`, counting the diagonal.
    pub fn relation_size(&self) -> usize {
        self.n + self.strict.len()
    }

    pub fn to_order(&self) -> PartialOrder {
        PartialOrder::from_strict(GroundSet::interval(self.n), self.strict.iter().copied())
            .expect("valid order")
    }

    /// Row bounds `b_r`: the last column of row `r` outside the strict relation.
    fn row_bounds(&self) -> Vec<usize> {
        (1..=self.n as Label)
            .map(|r| {
                (r..=self.n as Label)
                    .filter(|c| *c == r || !self.contains(r, *c))
                    .max()
                    .unwrap() as usize
            })
            .collect()
    }

    fn from_row_bounds(bounds: &[usize]) -> Self {
        let n = bounds.len();
        let mut strict = Vec::new();
        for (r, b) in bounds.iter().enumerate() {
            for c in b + 1..=n {
                strict.push((r as Label + 1, c as Label));
            }
        }
        strict.sort_unstable();
        Self { n, strict }
    }

    /// All of `NO_n`, sorted by strict-pair list.
    pub fn enumerate(n: usize) -> Vec<Nuio> {
        let mut out = Vec::new();
        let mut bounds = Vec::with_capacity(n);
        fn go(n: usize, bounds: &mut Vec<usize>, out: &mut Vec<Nuio>) {
            let r = bounds.len() + 1;
            if r > n {
                out.push(Nuio::from_row_bounds(bounds));
                return;
            }
            let lo = bounds.last().copied().unwrap_or(0).max(r);
            for b in lo..=n {
                bounds.push(b);
                go(n, bounds, out);
                bounds.pop();
            }
        }
        go(n, &mut bounds, &mut out);
        out.sort();
        out
    }

    pub fn to_dyck(&self) -> DyckWord {
        let mut word = String::with_capacity(2 * self.n);
        let mut prev = 0;
        for b in self.row_bounds() {
            word.extend(std::iter::repeat_n('E', b - prev));
            word.push('S');
            prev = b;
        }
        DyckWord(word)
    }

    pub fn from_dyck(word: &DyckWord) -> Nuio {
        let mut bounds = Vec::new();
        let mut east = 0;
        for ch in word.0.chars() {
            match ch {
                'E' => east += 1,
                _ => bounds.push(east),
            }
        }
        Self::from_row_bounds(&bounds)
    }

    pub fn inc_graph(&self) -> IncGraph {
        IncGraph::of_order(&self.to_order())
    }

    /// `cano_I(π|_I)`
    pub fn shifted_restrict(&self, sub: &[Label]) -> Result<Nuio> {
        GroundSet::interval(self.n).check_subset(sub)?;
        let relabel = cano(sub);
        let mut strict: Vec<Pair> = self
            .strict
            .iter()
            .filter(|(a, b)| sub.contains(a) && sub.contains(b))
            .map(|(a, b)| (relabel.apply(*a), relabel.apply(*b)))
            .collect();
        strict.sort_unstable();
        Ok(Self {
            n: relabel.domain().len(),
            strict,
        })
    }

    /// `π ⊕ ρ` with `ρ` shifted up by `n`.
    pub fn shifted_ordinal_sum(&self, other: &Nuio) -> Nuio {
        let n = self.n as Label;
        let m = other.n as Label;
        let mut strict = self.strict.clone();
        for i in 1..=n {
            for j in 1..=m {
                strict.push((i, n + j));
            }
        }
        strict.extend(other.strict.iter().map(|(a, b)| (a + n, b + n)));
        strict.sort_unstable();
        Self {
            n: self.n + other.n,
            strict,
        }
    }

    /// `|{(i, j) ∈ I × Iᶜ : i < j, (i, j) ∉ π}|`
    pub fn asc_count(&self, sub: &[Label]) -> Result<usize> {
        GroundSet::interval(self.n).check_subset(sub)?;
        let inside: BTreeSet<Label> = sub.iter().copied().collect();
        let mut count = 0;
        for &i in &inside {
            for j in i + 1..=self.n as Label {
                if !inside.contains(&j) && !self.contains(i, j) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// `π† = {(w̃(j), w̃(i)) : (i, j) ∈ π}` with `w̃(i) = n + 1 - i`.
    pub fn dagger(&self) -> Nuio {
        let m = self.n as Label + 1;
        let mut strict: Vec<Pair> = self.strict.iter().map(|(i, j)| (m - j, m - i)).collect();
        strict.sort_unstable();
        Self { n: self.n, strict }
    }
}

impl fmt::Display for Nuio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strict.is_empty() {
            return write!(f, "antichain{}", self.n);
        }
        write!(
            f,
            "{{{}}}",
            self.strict
                .iter()
                .map(|(a, b)| format!("{a}<{b}"))
                .join(",")
        )
    }
}

/// Word over `{E, S}` with every prefix holding at least as many `E` as `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord(String);

impl DyckWord {
    pub fn parse(word: &str) -> Result<Self> {
        let mut depth: i64 = 0;
        for ch in word.chars() {
            depth += match ch {
                'E' => 1,
                'S' => -1,
                _ => return Err(Error::MalformedDyck(word.to_string())),
            };
            if depth < 0 {
                return Err(Error::MalformedDyck(word.to_string()));
            }
        }
        if depth != 0 {
            return Err(Error::MalformedDyck(word.to_string()));
        }
        Ok(Self(word.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Half the length.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Simple graph on `[n]`; edges stored as `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncGraph {
    pub n: usize,
    pub edges: BTreeSet<Pair>,
}

impl IncGraph {
    /// Joins every incomparable pair of `po`; vertices are the ground labels.
    pub fn of_order(po: &PartialOrder) -> Self {
        let edges = po
            .ground()
            .labels()
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| !po.comparable(**a, **b))
            .map(|(a, b)| (*a, *b))
            .collect();
        Self {
            n: po.ground().len(),
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn six() -> Nuio {
        Nuio::new(
            6,
            [
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
            ],
        )
        .unwrap()
    }

    fn four() -> Nuio {
        Nuio::new(4, [(1, 2), (1, 3), (1, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn membership() {
        assert!(Nuio::new(4, [(1, 4), (2, 4)]).is_ok());
        let rho = PartialOrder::from_strict(GroundSet::interval(4), [(1, 3), (2, 3)]).unwrap();
        assert!(!Nuio::is_nuio(&rho).unwrap());
        assert!(Nuio::is_nuio(&Nuio::chain(5).to_order()).unwrap());
        let off = PartialOrder::from_strict(GroundSet::new([2, 3]), [(2, 3)]).unwrap();
        assert!(Nuio::is_nuio(&off).is_err());
        let reversed = PartialOrder::from_strict(GroundSet::interval(2), [(2, 1)]).unwrap();
        assert!(!Nuio::is_nuio(&reversed).unwrap());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| Nuio::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(Nuio::enumerate(2), vec![Nuio::antichain(2), Nuio::chain(2)]);
        for n in 0..=5 {
            for p in Nuio::enumerate(n) {
                assert!(Nuio::is_nuio(&p.to_order()).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        for n in 0..=4 {
            let pairs: Vec<Pair> = (1..=n as Label).tuple_combinations().collect();
            let mut brute = Vec::new();
            for mask in 0u32..(1 << pairs.len()) {
                let strict = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| *p);
                if let Ok(po) = PartialOrder::from_strict(GroundSet::interval(n), strict) {
                    if po.strict_pairs().len() == mask.count_ones() as usize
                        && Nuio::is_nuio(&po).unwrap()
                    {
                        brute.push(Nuio::try_from_order(&po).unwrap());
                    }
                }
            }
            brute.sort();
            assert_eq!(brute, Nuio::enumerate(n));
        }
    }

    #[test]
    fn dyck_words() {
        let p = Nuio::new(4, [(1, 4), (2, 4)]).unwrap();
        assert_eq!(p.to_dyck().as_str(), "EEESSESS");
        assert_eq!(Nuio::chain(3).to_dyck().as_str(), "ESESES");
        assert_eq!(Nuio::antichain(3).to_dyck().as_str(), "EEESSS");
        assert_eq!(Nuio::point().to_dyck().as_str(), "ES");
        for n in 0..=6 {
            for p in Nuio::enumerate(n) {
                let w = p.to_dyck();
                assert_eq!(DyckWord::parse(w.as_str()).unwrap(), w);
                assert_eq!(Nuio::from_dyck(&w), p);
            }
        }
        assert!(DyckWord::parse("SE").is_err());
        assert!(DyckWord::parse("EES").is_err());
        assert!(DyckWord::parse("EX").is_err());
    }

    #[test]
    fn incomparability_graphs() {
        assert!(Nuio::chain(4).inc_graph().edges.is_empty());
        assert_eq!(Nuio::antichain(4).inc_graph().edges.len(), 6);
        let p = Nuio::new(4, [(1, 4), (2, 4)]).unwrap();
        let expected: BTreeSet<Pair> = [(1, 2), (1, 3), (2, 3), (3, 4)].into_iter().collect();
        assert_eq!(p.inc_graph().edges, expected);
    }

    #[test]
    fn shifted_operations() {
        let r = six().shifted_restrict(&[2, 3, 5, 6]).unwrap();
        assert_eq!(r, Nuio::new(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap());
        assert_eq!(six().shifted_restrict(&[1, 2, 3, 4, 5, 6]).unwrap(), six());
        assert_eq!(six().shifted_restrict(&[]).unwrap(), Nuio::empty());
        assert!(six().shifted_restrict(&[7]).is_err());

        assert_eq!(four().shifted_ordinal_sum(&Nuio::antichain(2)), six());
        assert_eq!(four().shifted_ordinal_sum(&Nuio::empty()), four());
        assert_eq!(
            Nuio::point().shifted_ordinal_sum(&Nuio::antichain(2)),
            Nuio::new(3, [(1, 2), (1, 3)]).unwrap()
        );
    }

    #[test]
    fn shifted_operations_stay_in_nuio() {
        for n in 0..=5 {
            let labels = super::super::interval(n);
            for p in Nuio::enumerate(n) {
                for sub in super::super::subsets(&labels) {
                    let r = p.shifted_restrict(&sub).unwrap();
                    assert!(Nuio::is_nuio(&r.to_order()).unwrap());
                }
                for m in 0..=(5 - n) {
                    for q in Nuio::enumerate(m) {
                        assert!(Nuio::is_nuio(&p.shifted_ordinal_sum(&q).to_order()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn ascents() {
        assert_eq!(six().asc_count(&[2, 3, 5, 6]).unwrap(), 1);
        assert_eq!(six().asc_count(&[1, 2, 3, 4, 5, 6]).unwrap(), 0);
        assert_eq!(six().asc_count(&[]).unwrap(), 0);
        assert_eq!(Nuio::antichain(2).asc_count(&[1]).unwrap(), 1);
        assert_eq!(Nuio::antichain(2).asc_count(&[2]).unwrap(), 0);
        for n in 0..=5 {
            let labels = super::super::interval(n);
            for p in Nuio::enumerate(n) {
                for sub in super::super::subsets(&labels) {
                    let comp = super::super::complement(&labels, &sub);
                    let cross = sub
                        .iter()
                        .flat_map(|i| comp.iter().map(move |j| (*i, *j)))
                        .filter(|(i, j)| i < j);
                    let total = cross.clone().count();
                    let related = cross.filter(|(i, j)| p.contains(*i, *j)).count();
                    assert_eq!(p.asc_count(&sub).unwrap(), total - related);
                }
            }
        }
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(Nuio::chain(4).dagger(), Nuio::chain(4));
        assert_eq!(
            Nuio::new(3, [(1, 3)]).unwrap().dagger(),
            Nuio::new(3, [(1, 3)]).unwrap()
        );
        let p = Nuio::new(4, [(1, 4), (2, 4)]).unwrap();
        assert_eq!(p.dagger(), Nuio::new(4, [(1, 3), (1, 4)]).unwrap());
        for n in 0..=5 {
            for p in Nuio::enumerate(n) {
                assert_eq!(p.dagger().dagger(), p);
                assert!(Nuio::is_nuio(&p.dagger().to_order()).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let p: Nuio = serde_json::from_str(r#"{"n":4,"strict":[[1,4],[2,4]]}"#).unwrap();
        assert_eq!(p, Nuio::new(4, [(1, 4), (2, 4)]).unwrap());
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"n":4,"strict":[[1,4],[2,4]]}"#
        );
        assert!(serde_json::from_str::<Nuio>(r#"{"n":4,"strict":[[1,3],[2,3]]}"#).is_err());
    }
}
