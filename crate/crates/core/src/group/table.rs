use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::matrix::{FqMatrix, PrimeField};

/// Above this order no multiplication table is kept.
const MULT_TABLE_LIMIT: usize = 4096;

/// A finite matrix group with every element enumerated.
///
/// Elements are sorted by row-major entries; conjugacy classes are numbered by
/// their least element, which is also the representative.
pub struct GroupTable {
    label: String,
    field: PrimeField,
    n: usize,
    elements: Vec<FqMatrix>,
    index: HashMap<FqMatrix, u32>,
    inverse: Vec<u32>,
    identity: u32,
    generators: Vec<FqMatrix>,
    class_of: Vec<u32>,
    classes: Vec<Vec<u32>>,
    mult: OnceLock<Option<Vec<u32>>>,
}

/// JSON export of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub group_id: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    pub class_sizes: Vec<usize>,
    pub class_reps: Vec<String>,
}

impl GroupTable {
    /// `elements` must be closed under products and contain the identity;
    /// `generators` must generate it. Classes are the orbits of conjugation by
    /// the generators.
    pub fn new(
        label: impl Into<String>,
        n: usize,
        field: PrimeField,
        mut elements: Vec<FqMatrix>,
        generators: Vec<FqMatrix>,
    ) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let index: HashMap<FqMatrix, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (*g, i as u32))
            .collect();
        let identity = index[&FqMatrix::identity(n, field)];
        let inverse = elements
            .iter()
            .map(|g| index[&g.inverse().expect("group elements are invertible")])
            .collect();
        let gen_pairs: Vec<(FqMatrix, FqMatrix)> = generators
            .iter()
            .map(|s| (*s, s.inverse().expect("generator is invertible")))
            .collect();

        let mut class_of = vec![u32::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = vec![start as u32];
            class_of[start] = c;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for (s, s_inv) in &gen_pairs {
                    let conj = s.mul(&elements[i]).mul(s_inv);
                    let j = index[&conj] as usize;
                    if class_of[j] == u32::MAX {
                        class_of[j] = c;
                        members.push(j as u32);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }

        Self {
            label: label.into(),
            field,
            n,
            elements,
            index,
            inverse,
            identity,
            generators,
            class_of,
            classes,
            mult: OnceLock::new(),
        }
    }

    /// Identifier used as `group_id` in serialized class functions.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.p()
    }

    /// Matrix dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[FqMatrix] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &FqMatrix {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, g: &FqMatrix) -> Option<u32> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &FqMatrix) -> bool {
        self.index.contains_key(g)
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn inv(&self, i: u32) -> u32 {
        self.inverse[i as usize]
    }

    pub fn generators(&self) -> &[FqMatrix] {
        &self.generators
    }

    /// Full multiplication table, built on first use for groups of order at
    /// most 4096.
    pub fn mult_table(&self) -> Option<&[u32]> {
        self.mult
            .get_or_init(|| {
                let n = self.order();
                (n <= MULT_TABLE_LIMIT).then(|| {
                    let mut t = Vec::with_capacity(n * n);
                    for a in &self.elements {
                        for b in &self.elements {
                            t.push(self.index[&a.mul(b)]);
                        }
                    }
                    t
                })
            })
            .as_deref()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(Some(t)) = self.mult.get() {
            return t[a as usize * self.order() + b as usize];
        }
        self.index[&self.elements[a as usize].mul(&self.elements[b as usize])]
    }

    pub fn class_of(&self, i: u32) -> u32 {
        self.class_of[i as usize]
    }

    pub fn class_of_matrix(&self, g: &FqMatrix) -> Option<u32> {
        self.index_of(g).map(|i| self.class_of(i))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_size(&self, c: u32) -> usize {
        self.classes[c as usize].len()
    }

    /// Least element index of the class.
    pub fn class_rep(&self, c: u32) -> u32 {
        self.classes[c as usize][0]
    }

    pub fn class_rep_matrix(&self, c: u32) -> &FqMatrix {
        self.element(self.class_rep(c))
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &GroupTable) -> bool {
        self.n == other.n
            && self.field == other.field
            && self.elements.iter().all(|g| other.contains(g))
    }

    /// True when `g h g⁻¹ ∈ sub` for every `h ∈ sub` and generator `g` of `self`.
    pub fn normalizes(&self, sub: &GroupTable) -> bool {
        self.generators.iter().all(|g| {
            let g_inv = g.inverse().expect("invertible");
            sub.elements
                .iter()
                .all(|h| sub.contains(&g.mul(h).mul(&g_inv)))
        })
    }

    /// Checks closure under products with the generators and that every
    /// generator lies in the group.
    pub fn is_closed(&self) -> bool {
        self.generators.iter().all(|s| self.contains(s))
            && self
                .elements
                .iter()
                .all(|g| self.generators.iter().all(|s| self.contains(&g.mul(s))))
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            group_id: self.label.clone(),
            order: self.order(),
            generators: Some(self.generators.iter().map(FqMatrix::digits).collect()),
            class_sizes: self.classes.iter().map(Vec::len).collect(),
            class_reps: (0..self.class_count() as u32)
                .map(|c| self.class_rep_matrix(c).digits())
                .collect(),
        }
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("classes", &self.class_count())
            .finish()
    }
}
