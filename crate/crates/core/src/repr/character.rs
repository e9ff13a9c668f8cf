use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::liealg::{weyl_group, Weight};

/// Formal character: weight multiplicities, zero entries never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    multiplicities: BTreeMap<Weight, usize>,
}

impl Character {
    pub fn from_weights<I: IntoIterator<Item = Weight>>(weights: I) -> Self {
        let mut multiplicities = BTreeMap::new();
        for w in weights {
            *multiplicities.entry(w).or_insert(0) += 1;
        }
        Character { multiplicities }
    }

    pub fn from_map(map: BTreeMap<Weight, usize>) -> Self {
        let multiplicities = map.into_iter().filter(|e| e.1 > 0).collect();
        Character { multiplicities }
    }

    pub fn multiplicities(&self) -> &BTreeMap<Weight, usize> {
        &self.multiplicities
    }

    pub fn get(&self, w: Weight) -> usize {
        self.multiplicities.get(&w).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn is_weyl_symmetric(&self) -> bool {
        let group = weyl_group();
        self.multiplicities
            .iter()
            .all(|(w, m)| group.iter().all(|el| self.get(el.apply(*w)) == *m))
    }

    /// `ch(M*)`: weights negated.
    pub fn dual(&self) -> Character {
        Character {
            multiplicities: self.multiplicities.iter().map(|(w, m)| (-*w, *m)).collect(),
        }
    }

    /// Frobenius twist: weights scaled by `p`.
    pub fn twist(&self, p: u32) -> Character {
        Character {
            multiplicities: self
                .multiplicities
                .iter()
                .map(|(w, m)| ((p as i64) * *w, *m))
                .collect(),
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.multiplicities.clone();
        for (w, m) in &other.multiplicities {
            *out.entry(*w).or_insert(0) += m;
        }
        Character { multiplicities: out }
    }

    pub fn scaled(&self, k: usize) -> Character {
        Character::from_map(self.multiplicities.iter().map(|(w, m)| (*w, m * k)).collect())
    }

    /// `self - other`, or `None` if some multiplicity would go negative.
    pub fn checked_sub(&self, other: &Character) -> Option<Character> {
        let mut out = self.multiplicities.clone();
        for (w, m) in &other.multiplicities {
            let e = out.get_mut(w)?;
            *e = e.checked_sub(*m)?;
        }
        Some(Character::from_map(out))
    }

    pub fn tensor(&self, other: &Character) -> Character {
        let mut out = BTreeMap::new();
        for (a, m) in &self.multiplicities {
            for (b, n) in &other.multiplicities {
                *out.entry(*a + *b).or_insert(0) += m * n;
            }
        }
        Character { multiplicities: out }
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }
}

impl FromIterator<(Weight, usize)> for Character {
    fn from_iter<I: IntoIterator<Item = (Weight, usize)>>(iter: I) -> Self {
        let mut out = BTreeMap::new();
        for (w, m) in iter {
            *out.entry(w).or_insert(0) += m;
        }
        Character::from_map(out)
    }
}
