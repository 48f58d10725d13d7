//! Linear algebra over GF(p): ranks and kernels of dense and sparse matrices.

use crate::field::PrimeField;

/// Column count above which [`rank`] switches to sparse elimination.
pub const SPARSE_THRESHOLD: usize = 2000;

/// A sparse matrix stored by rows, entries sorted by column.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, u32)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn push(&mut self, f: &PrimeField, r: usize, c: usize, v: u32) {
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => {
                row[i].1 = f.add(row[i].1, v);
                if row[i].1 == 0 {
                    row.remove(i);
                }
            }
            Err(i) => {
                if v != 0 {
                    row.insert(i, (c, v));
                }
            }
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut d = vec![vec![0u32; self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                d[r][c] = v;
            }
        }
        d
    }
}

/// Rank of a dense matrix (row-major). Consumes a copy.
pub fn dense_rank(f: &PrimeField, mut m: Vec<Vec<u32>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let nrows = m.len();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = f.inv(m[rank][c]);
        for x in m[rank][c..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for k in c..ncols {
                if pivot_row[k] != 0 {
                    row[k] = f.sub(row[k], f.mul(factor, pivot_row[k]));
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank via sparse elimination with a sparsest-row pivot heuristic.
pub fn sparse_rank(f: &PrimeField, m: &SparseMatrix) -> usize {
    let mut rows: Vec<Vec<(usize, u32)>> = m.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    // Pivots indexed by leading column.
    let mut pivots: Vec<Option<Vec<(usize, u32)>>> = vec![None; m.ncols];
    let mut rank = 0;
    rows.sort_by_key(|r| r.len());
    for mut row in rows {
        while let Some(&(c, v)) = row.first() {
            match &pivots[c] {
                Some(p) => {
                    let factor = f.neg(v);
                    row = axpy_sparse(f, &row, factor, p);
                }
                None => {
                    let inv = f.inv(v);
                    for e in row.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                    pivots[c] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Returns `a + s * b` for sorted sparse rows.
fn axpy_sparse(f: &PrimeField, a: &[(usize, u32)], s: u32, b: &[(usize, u32)]) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(s, b[j].1);
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.add(a[i].1, f.mul(s, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank, choosing dense or sparse elimination by size.
pub fn rank(f: &PrimeField, m: &SparseMatrix) -> usize {
    if m.nrows == 0 || m.ncols == 0 {
        return 0;
    }
    if m.ncols > SPARSE_THRESHOLD || m.nrows > SPARSE_THRESHOLD {
        sparse_rank(f, m)
    } else {
        dense_rank(f, m.to_dense())
    }
}

/// Basis of the right kernel `{x : M x = 0}` of a dense matrix with `ncols` columns.
pub fn kernel(f: &PrimeField, m: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut a: Vec<Vec<u32>> = m.to_vec();
    let nrows = a.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = f.inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for k in 0..ncols {
                    row[k] = f.sub(row[k], f.mul(factor, prow[k]));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = f.neg(a[i][free]);
        }
        basis.push(v);
    }
    basis
}
