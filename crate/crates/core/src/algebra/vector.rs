use std::cmp::Ordering;

use super::monomial::Monomial;
use super::order::ModuleOrder;
use crate::field::PrimeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: u32,
}

impl Term {
    pub fn new(mon: Monomial, comp: usize, coef: u32) -> Self {
        Term { mon, comp: comp as u32, coef }
    }
}

/// An element of a free module: terms sorted decreasingly for some module order,
/// with no zero coefficients and no repeated (monomial, component) pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModVec(pub Vec<Term>);

impl ModVec {
    pub fn zero() -> Self {
        ModVec(Vec::new())
    }

    /// Builds a vector from arbitrary terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<Term>, order: &ModuleOrder, f: &PrimeField) -> Self {
        terms.retain(|t| t.coef != 0);
        terms.sort_by(|a, b| order.cmp(&b.mon, b.comp as usize, &a.mon, a.comp as usize));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon && last.comp == t.comp => {
                    last.coef = f.add(last.coef, t.coef);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        ModVec(out)
    }

    /// Basis vector `e_c`.
    pub fn unit(c: usize) -> Self {
        ModVec(vec![Term::new(Monomial::ONE, c, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.0.first()
    }

    pub fn terms(&self) -> &[Term] {
        &self.0
    }

    /// Re-sorts under a different order.
    pub fn resort(&self, order: &ModuleOrder) -> Self {
        let mut t = self.0.clone();
        t.sort_by(|a, b| order.cmp(&b.mon, b.comp as usize, &a.mon, a.comp as usize));
        ModVec(t)
    }

    pub fn scale(&self, c: u32, f: &PrimeField) -> Self {
        if c == 0 {
            return ModVec::zero();
        }
        ModVec(self.0.iter().map(|t| Term { coef: f.mul(t.coef, c), ..*t }).collect())
    }

    pub fn make_monic(&mut self, f: &PrimeField) -> u32 {
        let Some(l) = self.0.first() else { return 0 };
        let lc = l.coef;
        if lc != 1 {
            let inv = f.inv(lc);
            for t in self.0.iter_mut() {
                t.coef = f.mul(t.coef, inv);
            }
        }
        lc
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        ModVec(self.0.iter().map(|t| Term { mon: t.mon.mul(m), ..*t }).collect())
    }

    /// `self + c·m·other`.
    pub fn axpy(&self, c: u32, m: &Monomial, other: &ModVec, order: &ModuleOrder, f: &PrimeField) -> Self {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let a = &self.0;
        let b = &other.0;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = b[j].mon.mul(m);
            match order.cmp(&a[i].mon, a[i].comp as usize, &bm, b[j].comp as usize) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mon: bm, comp: b[j].comp, coef: f.mul(c, b[j].coef) });
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].coef, f.mul(c, b[j].coef));
                    if v != 0 {
                        out.push(Term { coef: v, ..a[i] });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push(Term { mon: t.mon.mul(m), comp: t.comp, coef: f.mul(c, t.coef) });
        }
        ModVec(out)
    }

    pub fn add(&self, other: &ModVec, order: &ModuleOrder, f: &PrimeField) -> Self {
        self.axpy(1, &Monomial::ONE, other, order, f)
    }

    pub fn sub(&self, other: &ModVec, order: &ModuleOrder, f: &PrimeField) -> Self {
        self.axpy(f.neg(1), &Monomial::ONE, other, order, f)
    }

    /// Multiplies by a ring element given as (monomial, coefficient) terms.
    pub fn mul_terms(&self, p: &[(Monomial, u32)], order: &ModuleOrder, f: &PrimeField) -> Self {
        let mut acc = ModVec::zero();
        for (m, c) in p {
            acc = acc.axpy(*c, m, self, order, f);
        }
        acc
    }

    /// Terms in component `c`, as (monomial, coefficient) pairs.
    pub fn component(&self, c: usize) -> Vec<(Monomial, u32)> {
        self.0.iter().filter(|t| t.comp as usize == c).map(|t| (t.mon, t.coef)).collect()
    }

    /// Renames components; `None` drops the term. The caller guarantees the result
    /// stays sorted under `order`, otherwise it re-sorts.
    pub fn map_comps(&self, map: impl Fn(usize) -> Option<usize>, order: &ModuleOrder, f: &PrimeField) -> Self {
        let terms: Vec<Term> =
            self.0.iter().filter_map(|t| map(t.comp as usize).map(|c| Term { comp: c as u32, ..*t })).collect();
        ModVec::from_terms(terms, order, f)
    }
}
