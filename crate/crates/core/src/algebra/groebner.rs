//! Buchberger's algorithm for homogeneous submodules of graded free modules.

use std::sync::Arc;

use super::monomial::Monomial;
use super::order::ModuleOrder;
use super::ring::Ring;
use super::vector::{ModVec, Term};
use crate::field::PrimeField;

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i64,
}

/// A Gröbner basis of a submodule, optionally recording each element as a combination
/// of the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: Arc<ModuleOrder>,
    elems: Vec<ModVec>,
    /// `reps[k]` expresses `elems[k]` in the input generators (vector of `S^n`).
    reps: Option<Vec<ModVec>>,
    rep_order: Option<Arc<ModuleOrder>>,
    /// Lead monomials grouped by component: (lead, element index).
    by_comp: Vec<Vec<(Monomial, usize)>>,
}

/// Quotient terms `(monomial, basis index, coefficient)` collected during division.
pub type Quotients = Vec<Term>;

impl GroebnerBasis {
    fn empty(order: Arc<ModuleOrder>, rep_order: Option<Arc<ModuleOrder>>) -> Self {
        let n = order.rank();
        GroebnerBasis {
            order,
            elems: Vec::new(),
            reps: rep_order.as_ref().map(|_| Vec::new()),
            rep_order,
            by_comp: vec![Vec::new(); n],
        }
    }

    /// Wraps vectors already known to form a Gröbner basis (e.g. Schreyer syzygies).
    pub fn from_basis(order: Arc<ModuleOrder>, elems: Vec<ModVec>, f: &PrimeField) -> Self {
        let mut gb = Self::empty(order, None);
        for mut e in elems {
            e.make_monic(f);
            gb.push(e, None);
        }
        gb
    }

    /// Reduced Gröbner basis of the submodule generated by `gens` (which are re-sorted).
    pub fn compute(ring: &Ring, order: Arc<ModuleOrder>, gens: &[ModVec]) -> Self {
        Self::run(ring, order, gens, None).0
    }

    /// Like [`compute`](Self::compute), also returning the indices of a minimal
    /// generating subset of `gens` (inputs not reducible by lower-degree data).
    pub fn compute_with_minimal(ring: &Ring, order: Arc<ModuleOrder>, gens: &[ModVec]) -> (Self, Vec<usize>) {
        Self::run(ring, order, gens, None)
    }

    /// Like [`compute`](Self::compute) but tracks representations in the generators;
    /// `rep_order` orders the free module `S^n` indexing the generators.
    pub fn compute_tracked(ring: &Ring, order: Arc<ModuleOrder>, gens: &[ModVec], rep_order: Arc<ModuleOrder>) -> Self {
        Self::run(ring, order, gens, Some(rep_order)).0
    }

    fn push(&mut self, e: ModVec, rep: Option<ModVec>) -> usize {
        let idx = self.elems.len();
        let lt = *e.lead().expect("nonzero basis element");
        self.by_comp[lt.comp as usize].push((lt.mon, idx));
        self.elems.push(e);
        if let (Some(reps), Some(r)) = (self.reps.as_mut(), rep) {
            reps.push(r);
        }
        idx
    }

    fn run(
        ring: &Ring,
        order: Arc<ModuleOrder>,
        gens: &[ModVec],
        rep_order: Option<Arc<ModuleOrder>>,
    ) -> (Self, Vec<usize>) {
        let f = *ring.field();
        let track = rep_order.is_some();
        let mut gb = Self::empty(order.clone(), rep_order);
        let mut input: Vec<(i64, ModVec, Option<ModVec>, usize)> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_zero())
            .map(|(k, g)| {
                let g = g.resort(&order);
                let lt = g.lead().unwrap();
                let d = order.degree(&lt.mon, lt.comp as usize);
                (d, g, track.then(|| ModVec::unit(k)), k)
            })
            .collect();
        input.sort_by_key(|x| x.0);
        input.reverse();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut minimal = Vec::new();
        let rank_one = order.rank() == 1;
        loop {
            let next_gen = input.last().map(|x| x.0);
            let next_pair = pairs.iter().map(|p| p.degree).min();
            let d = match (next_gen, next_pair) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let (mut batch, rest): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.degree == d);
            pairs = rest;
            batch.sort_by(|a, b| {
                order.cmp(&a.lcm, gb.comp_of(a.i), &b.lcm, gb.comp_of(b.i)).then((a.i, a.j).cmp(&(b.i, b.j)))
            });
            let mut candidates: Vec<(ModVec, Option<ModVec>, Option<usize>)> = Vec::new();
            for p in &batch {
                let (s, r) = gb.s_vector(p, &f);
                candidates.push((s, r, None));
            }
            while input.last().is_some_and(|x| x.0 == d) {
                let (_, g, r, k) = input.pop().unwrap();
                candidates.push((g, r, Some(k)));
            }
            for (v, r, k) in candidates {
                let (mut h, mut hr) = gb.reduce_with_rep(&v, r, &f);
                if h.is_zero() {
                    continue;
                }
                if let Some(k) = k {
                    minimal.push(k);
                }
                let lc = h.make_monic(&f);
                if let Some(rr) = hr.as_mut() {
                    *rr = rr.scale(f.inv(lc), &f);
                }
                let t = gb.push(h, hr);
                gb.update_pairs(t, &mut pairs, rank_one);
            }
        }
        gb.interreduce(&f);
        minimal.sort_unstable();
        (gb, minimal)
    }

    fn comp_of(&self, i: usize) -> usize {
        self.elems[i].lead().unwrap().comp as usize
    }

    fn lead_mon(&self, i: usize) -> Monomial {
        self.elems[i].lead().unwrap().mon
    }

    fn s_vector(&self, p: &Pair, f: &PrimeField) -> (ModVec, Option<ModVec>) {
        let (gi, gj) = (&self.elems[p.i], &self.elems[p.j]);
        let mi = gi.lead().unwrap().mon.quotient_of(&p.lcm).unwrap();
        let mj = gj.lead().unwrap().mon.quotient_of(&p.lcm).unwrap();
        let s = gi.mul_monomial(&mi).axpy(f.neg(1), &mj, gj, &self.order, f);
        let r = match (&self.reps, &self.rep_order) {
            (Some(reps), Some(ro)) => Some(reps[p.i].mul_monomial(&mi).axpy(f.neg(1), &mj, &reps[p.j], ro, f)),
            _ => None,
        };
        (s, r)
    }

    /// Gebauer-Möller update after inserting element `t`.
    fn update_pairs(&mut self, t: usize, pairs: &mut Vec<Pair>, rank_one: bool) {
        let ct = self.comp_of(t);
        let lt = self.lead_mon(t);
        // Criterion B on existing pairs.
        pairs.retain(|p| {
            if self.comp_of(p.i) != ct || !lt.divides(&p.lcm) {
                return true;
            }
            let li = self.lead_mon(p.i).lcm(&lt);
            let lj = self.lead_mon(p.j).lcm(&lt);
            li == p.lcm || lj == p.lcm
        });
        let mut fresh: Vec<(Monomial, usize, bool)> = self.by_comp[ct]
            .iter()
            .filter(|&&(_, i)| i != t)
            .map(|&(m, i)| (m.lcm(&lt), i, rank_one && m.is_coprime(&lt)))
            .collect();
        // Criterion M: drop pairs whose lcm is a proper multiple of another one.
        let all = fresh.clone();
        fresh.retain(|(l, _, _)| !all.iter().any(|(l2, _, _)| l2 != l && l2.divides(l)));
        // Criterion F with the product criterion: one pair per lcm class, none if a member is coprime.
        fresh.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut k = 0;
        while k < fresh.len() {
            let mut e = k;
            let mut coprime = false;
            while e < fresh.len() && fresh[e].0 == fresh[k].0 {
                coprime |= fresh[e].2;
                e += 1;
            }
            if !coprime {
                let (lcm, i, _) = fresh[k];
                let degree = self.order.degree(&lcm, ct);
                pairs.push(Pair { i, j: t, lcm, degree });
            }
            k = e;
        }
    }

    fn find_reducer(&self, t: &Term) -> Option<usize> {
        self.by_comp[t.comp as usize].iter().find(|(m, _)| m.divides(&t.mon)).map(|&(_, i)| i)
    }

    fn reduce_with_rep(&self, v: &ModVec, rep: Option<ModVec>, f: &PrimeField) -> (ModVec, Option<ModVec>) {
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = v.0.clone();
        let mut rep = rep;
        let mut pos = 0;
        while pos < cur.len() {
            let t = cur[pos];
            match self.find_reducer(&t) {
                Some(i) => {
                    let g = &self.elems[i];
                    let q = g.lead().unwrap().mon.quotient_of(&t.mon).unwrap();
                    let c = f.neg(t.coef);
                    cur = ModVec(cur[pos..].to_vec()).axpy(c, &q, g, &self.order, f).0;
                    pos = 0;
                    if let (Some(r), Some(reps), Some(ro)) = (rep.as_mut(), &self.reps, &self.rep_order) {
                        *r = r.axpy(c, &q, &reps[i], ro, f);
                    }
                }
                None => {
                    rem.push(t);
                    pos += 1;
                }
            }
        }
        (ModVec(rem), rep)
    }

    /// Normal form of `v`.
    pub fn reduce(&self, v: &ModVec, f: &PrimeField) -> ModVec {
        self.reduce_with_rep(&v.resort(&self.order), None, f).0
    }

    /// Division with quotients: `v = Σ q_k·elems[k] + remainder`.
    pub fn reduce_quotients(&self, v: &ModVec, f: &PrimeField) -> (ModVec, Quotients) {
        let mut rem: Vec<Term> = Vec::new();
        let mut quot: Quotients = Vec::new();
        let mut cur = v.resort(&self.order).0;
        let mut pos = 0;
        while pos < cur.len() {
            let t = cur[pos];
            match self.find_reducer(&t) {
                Some(i) => {
                    let g = &self.elems[i];
                    let q = g.lead().unwrap().mon.quotient_of(&t.mon).unwrap();
                    quot.push(Term::new(q, i, t.coef));
                    cur = ModVec(cur[pos..].to_vec()).axpy(f.neg(t.coef), &q, g, &self.order, f).0;
                    pos = 0;
                }
                None => {
                    rem.push(t);
                    pos += 1;
                }
            }
        }
        (ModVec(rem), quot)
    }

    pub fn contains(&self, v: &ModVec, f: &PrimeField) -> bool {
        self.reduce(v, f).is_zero()
    }

    /// Removes redundant elements and reduces tails.
    fn interreduce(&mut self, f: &PrimeField) {
        let n = self.elems.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            let li = self.elems[i].lead().unwrap();
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                let lj = self.elems[j].lead().unwrap();
                if lj.comp == li.comp && lj.mon.divides(&li.mon) && (lj.mon != li.mon || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let elems = std::mem::take(&mut self.elems);
        let reps = self.reps.take();
        let mut kept: Vec<(ModVec, Option<ModVec>)> = Vec::new();
        for (k, e) in elems.into_iter().enumerate() {
            if keep[k] {
                kept.push((e, reps.as_ref().map(|r| r[k].clone())));
            }
        }
        kept.sort_by(|a, b| {
            let (x, y) = (a.0.lead().unwrap(), b.0.lead().unwrap());
            self.order.cmp(&x.mon, x.comp as usize, &y.mon, y.comp as usize)
        });
        let tracked = reps.is_some();
        let mut fresh = Self::empty(self.order.clone(), self.rep_order.clone());
        if !tracked {
            fresh.reps = None;
        }
        // Leads are fixed; reduce tails against the full set of leads.
        let snapshot = {
            let mut s = Self::empty(self.order.clone(), self.rep_order.clone());
            if !tracked {
                s.reps = None;
            }
            for (e, r) in &kept {
                s.push(e.clone(), r.clone());
            }
            s
        };
        for (e, r) in kept {
            let lead = e.0[0];
            let tail = ModVec(e.0[1..].to_vec());
            let (red, rr) = snapshot.reduce_with_rep(&tail, r, f);
            let mut terms = vec![lead];
            terms.extend(red.0);
            fresh.push(ModVec(terms), rr);
        }
        *self = fresh;
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elems
    }

    pub fn into_elements(self) -> Vec<ModVec> {
        self.elems
    }

    pub fn representations(&self) -> Option<&[ModVec]> {
        self.reps.as_deref()
    }

    pub fn order(&self) -> &Arc<ModuleOrder> {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Lead (monomial, component) pairs in basis order.
    pub fn leads(&self) -> Vec<(Monomial, usize)> {
        self.elems
            .iter()
            .map(|e| {
                let t = e.lead().unwrap();
                (t.mon, t.comp as usize)
            })
            .collect()
    }

    /// Lead monomials of the elements with lead in component `c`.
    pub fn leads_in(&self, c: usize) -> Vec<Monomial> {
        self.by_comp[c].iter().map(|x| x.0).collect()
    }
}
