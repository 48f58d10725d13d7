use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Graded Betti numbers `β_{i,a}` keyed by homological index and multidegree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Vec<i64>), usize>,
}

impl BettiTable {
    pub fn add(&mut self, i: usize, deg: Vec<i64>, n: usize) {
        if n > 0 {
            *self.entries.entry((i, deg)).or_insert(0) += n;
        }
    }

    pub fn get(&self, i: usize, deg: &[i64]) -> usize {
        self.entries.get(&(i, deg.to_vec())).copied().unwrap_or(0)
    }

    /// Total rank per homological index, up to the last nonzero one.
    pub fn total(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for ((i, _), n) in &self.entries {
            out[*i] += n;
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &[i64], usize)> {
        self.entries.iter().map(|((i, d), n)| (*i, d.as_slice(), *n))
    }

    pub fn key(i: usize, deg: &[i64]) -> String {
        let mut parts = vec![i.to_string()];
        parts.extend(deg.iter().map(|d| d.to_string()));
        parts.join(",")
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let sorted: BTreeMap<String, usize> = self.entries.iter().map(|((i, d), n)| (Self::key(*i, d), *n)).collect();
        let mut m = s.serialize_map(Some(sorted.len()))?;
        for (k, v) in sorted {
            m.serialize_entry(&k, &v)?;
        }
        m.end()
    }
}
