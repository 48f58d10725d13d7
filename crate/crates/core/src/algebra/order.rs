use std::cmp::Ordering;
use std::sync::Arc;

use super::monomial::{Monomial, MAX_VARS};

/// Weighted graded reverse lexicographic order.
///
/// `revlex_seq` lists variables starting from the cheapest one; by default the
/// last variable is cheapest, as in ordinary grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    nvars: usize,
    weights: [u32; MAX_VARS],
    revlex_seq: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(weights: &[u32]) -> Self {
        let nvars = weights.len();
        let mut w = [0u32; MAX_VARS];
        w[..nvars].copy_from_slice(weights);
        MonomialOrder { nvars, weights: w, revlex_seq: (0..nvars).rev().collect() }
    }

    /// Same weights, with `v` moved to the cheapest position.
    pub fn with_cheapest(&self, v: usize) -> Self {
        let mut seq = vec![v];
        seq.extend(self.revlex_seq.iter().copied().filter(|&u| u != v));
        MonomialOrder { revlex_seq: seq, ..self.clone() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights[..self.nvars]
    }

    #[inline]
    pub fn wdeg(&self, m: &Monomial) -> i64 {
        let mut d = 0i64;
        for v in 0..self.nvars {
            d += self.weights[v] as i64 * m.0[v] as i64;
        }
        d
    }

    /// Reverse lexicographic tie-break: larger exponent in the cheapest variable is smaller.
    #[inline]
    fn cmp_revlex(&self, a: &Monomial, wa: &Monomial, b: &Monomial, wb: &Monomial) -> Ordering {
        for &v in &self.revlex_seq {
            let ea = a.0[v] as u32 + wa.0[v] as u32;
            let eb = b.0[v] as u32 + wb.0[v] as u32;
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.wdeg(a).cmp(&self.wdeg(b)).then_with(|| self.cmp_revlex(a, &Monomial::ONE, b, &Monomial::ONE))
    }
}

/// Per-component data of a module order: `m e_c` is compared through
/// `(deg(m·weight) + shift, revlex(m·weight), key)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentWeight {
    pub shift: i64,
    pub weight: Monomial,
    pub key: Vec<i32>,
    offset: i64,
}

impl ComponentWeight {
    pub fn new(mono: &MonomialOrder, shift: i64, weight: Monomial, key: Vec<i32>) -> Self {
        let offset = shift + mono.wdeg(&weight);
        ComponentWeight { shift, weight, key, offset }
    }
}

/// Term order on a free module. Covers both twisted term-over-position orders and
/// Schreyer orders induced by a list of leading terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: Arc<MonomialOrder>,
    pub comps: Vec<ComponentWeight>,
}

impl ModuleOrder {
    /// Term-over-position order with the given degree shifts; earlier components are larger.
    pub fn base(mono: Arc<MonomialOrder>, shifts: &[i64]) -> Self {
        let comps = shifts
            .iter()
            .enumerate()
            .map(|(i, &s)| ComponentWeight::new(&mono, s, Monomial::ONE, vec![-(i as i32)]))
            .collect();
        ModuleOrder { mono, comps }
    }

    /// Order on `S^1`.
    pub fn ring(mono: Arc<MonomialOrder>) -> Self {
        Self::base(mono, &[0])
    }

    /// Schreyer order induced by leading terms `(lead monomial, component)` of elements of a
    /// module with order `self`. Ties go to the larger index.
    pub fn schreyer(&self, leads: &[(Monomial, usize)]) -> Self {
        let comps = leads
            .iter()
            .enumerate()
            .map(|(i, (m, c))| {
                let parent = &self.comps[*c];
                let mut key = parent.key.clone();
                key.push(i as i32);
                ComponentWeight::new(&self.mono, parent.shift, m.mul(&parent.weight), key)
            })
            .collect();
        ModuleOrder { mono: self.mono.clone(), comps }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    /// Degree used by the order for `m e_c`.
    #[inline]
    pub fn degree(&self, m: &Monomial, c: usize) -> i64 {
        self.mono.wdeg(m) + self.comps[c].offset
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        let (ca, cb) = (&self.comps[ac], &self.comps[bc]);
        let da = self.mono.wdeg(am) + ca.offset;
        let db = self.mono.wdeg(bm) + cb.offset;
        if da != db {
            return da.cmp(&db);
        }
        match self.mono.cmp_revlex(am, &ca.weight, bm, &cb.weight) {
            Ordering::Equal => {
                if ac == bc {
                    Ordering::Equal
                } else {
                    ca.key.cmp(&cb.key)
                }
            }
            o => o,
        }
    }

    /// Same component data with a different monomial order.
    pub fn with_mono(&self, mono: Arc<MonomialOrder>) -> Self {
        let comps = self.comps.iter().map(|c| ComponentWeight::new(&mono, c.shift, c.weight, c.key.clone())).collect();
        ModuleOrder { mono, comps }
    }
}
