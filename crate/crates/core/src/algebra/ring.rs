use std::sync::Arc;

use super::monomial::{Monomial, MAX_VARS};
use super::order::{ModuleOrder, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A multidegree.
pub type Degree = Vec<i64>;

/// Polynomial ring with a multigrading and an irrelevant ideal.
///
/// For a product of projective spaces, variable `x_{i,j}` has degree `e_i` and the
/// irrelevant ideal is the product of the block ideals.
#[derive(Clone, Debug)]
pub struct Ring {
    field: PrimeField,
    names: Vec<String>,
    degrees: Vec<Degree>,
    /// Variable blocks whose ideals multiply to the irrelevant ideal (products only).
    blocks: Option<Vec<Vec<usize>>>,
    irrelevant: Vec<Monomial>,
    mono: Arc<MonomialOrder>,
    ring_order: Arc<ModuleOrder>,
}

impl PartialEq for Ring {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.degrees == o.degrees && self.irrelevant == o.irrelevant
    }
}

impl Ring {
    /// Cox ring of `P^{n_1} × … × P^{n_r}` given block sizes `n_i + 1`.
    pub fn product(block_sizes: &[usize], field: PrimeField) -> Result<Self> {
        let r = block_sizes.len();
        let n: usize = block_sizes.iter().sum();
        if r == 0 || block_sizes.contains(&0) {
            return Err(Error::Domain("block sizes must be positive".into()));
        }
        if n > MAX_VARS {
            return Err(Error::Domain(format!("{n} variables exceed the limit of {MAX_VARS}")));
        }
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut blocks = Vec::new();
        for (i, &s) in block_sizes.iter().enumerate() {
            let mut block = Vec::new();
            for j in 0..s {
                names.push(if r == 1 { format!("x{j}") } else { format!("x_{}_{}", i + 1, j) });
                let mut d = vec![0; r];
                d[i] = 1;
                block.push(degrees.len());
                degrees.push(d);
            }
            blocks.push(block);
        }
        let mut irrelevant = vec![Monomial::ONE];
        for b in &blocks {
            irrelevant = irrelevant.iter().flat_map(|m| b.iter().map(move |&v| m.mul(&Monomial::var(v)))).collect();
        }
        let mono = Arc::new(MonomialOrder::grevlex(&vec![1; n]));
        let ring_order = Arc::new(ModuleOrder::ring(mono.clone()));
        Ok(Ring { field, names, degrees, blocks: Some(blocks), irrelevant, mono, ring_order })
    }

    /// A ring with an arbitrary degree matrix and monomial irrelevant ideal.
    ///
    /// `weights` must be positive and constant on each multidegree (a positive linear form of the grading).
    pub fn general(
        names: Vec<String>,
        degrees: Vec<Degree>,
        weights: Vec<u32>,
        irrelevant: Vec<Monomial>,
        field: PrimeField,
    ) -> Result<Self> {
        let n = names.len();
        if n > MAX_VARS || degrees.len() != n || weights.len() != n {
            return Err(Error::Domain("inconsistent ring description".into()));
        }
        if weights.contains(&0) {
            return Err(Error::Domain("weights must be positive".into()));
        }
        let dim = degrees.first().map_or(0, |d| d.len());
        if degrees.iter().any(|d| d.len() != dim) {
            return Err(Error::Domain("degree vectors differ in length".into()));
        }
        let mono = Arc::new(MonomialOrder::grevlex(&weights));
        let ring_order = Arc::new(ModuleOrder::ring(mono.clone()));
        Ok(Ring { field, names, degrees, blocks: None, irrelevant, mono, ring_order })
    }

    /// Same variables with the fine `Z^N` grading and the same irrelevant ideal.
    pub fn fine_grading(&self) -> Ring {
        let n = self.nvars();
        let degrees = (0..n)
            .map(|i| {
                let mut d = vec![0; n];
                d[i] = 1;
                d
            })
            .collect();
        Ring { degrees, ..self.clone() }
    }

    pub fn with_field(&self, field: PrimeField) -> Ring {
        Ring { field, ..self.clone() }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn grading_rank(&self) -> usize {
        self.degrees.first().map_or(0, |d| d.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_degree(&self, v: usize) -> &Degree {
        &self.degrees[v]
    }

    pub fn mono_order(&self) -> &Arc<MonomialOrder> {
        &self.mono
    }

    /// Order on ring elements viewed as vectors in `S^1`.
    pub fn ring_order(&self) -> &Arc<ModuleOrder> {
        &self.ring_order
    }

    pub fn blocks(&self) -> Option<&[Vec<usize>]> {
        self.blocks.as_deref()
    }

    /// Block sizes for a product ring.
    pub fn block_sizes(&self) -> Option<Vec<usize>> {
        self.blocks.as_ref().map(|b| b.iter().map(|v| v.len()).collect())
    }

    pub fn irrelevant_generators(&self) -> &[Monomial] {
        &self.irrelevant
    }

    pub fn degree(&self, m: &Monomial) -> Degree {
        let mut d = vec![0; self.grading_rank()];
        for v in 0..self.nvars() {
            let e = m.exp(v) as i64;
            if e != 0 {
                for (k, x) in self.degrees[v].iter().enumerate() {
                    d[k] += e * x;
                }
            }
        }
        d
    }

    /// Value of the order's positive linear form on a multidegree.
    ///
    /// For products this is the sum of entries. For general gradings it is the linear
    /// form matching the variable weights, falling back to the entry sum.
    pub fn weight_of_degree(&self, d: &[i64]) -> i64 {
        if self.blocks.is_some() {
            return d.iter().sum();
        }
        weight_form(&self.degrees, self.mono.weights())
            .map(|l| l.iter().zip(d).map(|(a, b)| a * *b as f64).sum::<f64>().round() as i64)
            .unwrap_or_else(|| d.iter().sum())
    }

    /// Index of a variable by name. Accepts `x_i_j`, `x_{i}_{j}`, and `xj` for one block.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Some(i);
        }
        let cleaned: String = name.chars().filter(|c| *c != '{' && *c != '}').collect();
        self.names.iter().position(|n| *n == cleaned)
    }
}

/// Finds a rational linear form `λ` with `λ(deg x_v) = w_v` for all variables.
fn weight_form(degrees: &[Degree], weights: &[u32]) -> Option<Vec<f64>> {
    let d = degrees.first()?.len();
    // Gaussian elimination over f64 on the augmented system D λ = w.
    let mut rows: Vec<Vec<f64>> = degrees
        .iter()
        .zip(weights)
        .map(|(deg, &w)| {
            let mut r: Vec<f64> = deg.iter().map(|&x| x as f64).collect();
            r.push(w as f64);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..d {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c].abs() > 1e-9) else { continue };
        rows.swap(rank, p);
        let pv = rows[rank][c];
        for x in rows[rank].iter_mut() {
            *x /= pv;
        }
        let pr = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank {
                let f = row[c];
                for k in 0..=d {
                    row[k] -= f * pr[k];
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| r[d].abs() > 1e-9) {
        return None;
    }
    let mut l = vec![0.0; d];
    for (i, &c) in pivots.iter().enumerate() {
        l[c] = rows[i][d];
    }
    Some(l)
}
