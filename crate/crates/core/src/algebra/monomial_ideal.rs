//! Combinatorics of monomial ideals: dimension, irreducible decomposition and
//! associated primes.

use super::monomial::Monomial;

/// Krull dimension of `S/J` for the monomial ideal `J` in `nvars` variables, or
/// `None` when `J` is the unit ideal.
///
/// This is the largest set of variables containing the support of no generator.
pub fn monomial_dim(nvars: usize, gens: &[Monomial]) -> Option<usize> {
    if gens.iter().any(|g| g.is_one()) {
        return None;
    }
    let mut supports: Vec<u32> = gens.iter().map(|g| g.support()).collect();
    supports.sort_unstable();
    supports.dedup();
    let mut best = 0;
    search_free(nvars, 0, 0, &supports, &mut best);
    Some(best)
}

/// Branch over variables, keeping `chosen` free of any generator support.
fn search_free(nvars: usize, v: usize, chosen: u32, supports: &[u32], best: &mut usize) {
    let size = chosen.count_ones() as usize;
    if size + (nvars - v) <= *best {
        return;
    }
    if v == nvars {
        *best = size;
        return;
    }
    let with = chosen | 1 << v;
    if supports.iter().all(|&s| s & !with != 0) {
        search_free(nvars, v + 1, with, supports, best);
    }
    search_free(nvars, v + 1, chosen, supports, best);
}

/// An irreducible monomial ideal `⟨x_i^{a_i}⟩`, stored as its exponent vector (0 = absent).
pub type IrreducibleComponent = Monomial;

/// Irredundant irreducible decomposition of a proper monomial ideal.
pub fn irreducible_decomposition(gens: &[Monomial]) -> Vec<IrreducibleComponent> {
    let mut out: Vec<Monomial> = Vec::new();
    split(minimalize(gens.to_vec()), &mut out);
    out.sort_by(|a, b| a.cmp_lex(b));
    out.dedup();
    // Drop components containing another one.
    let keep: Vec<Monomial> =
        out.iter().filter(|c| !out.iter().any(|d| d != *c && component_contains(c, d))).copied().collect();
    keep
}

/// Whether the irreducible ideal `a` contains `b`: each `x^{b_i}` generator of `b` is
/// divisible by a generator of `a`.
fn component_contains(a: &Monomial, b: &Monomial) -> bool {
    (0..super::MAX_VARS).all(|i| b.0[i] == 0 || (a.0[i] != 0 && a.0[i] <= b.0[i]))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.total_degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn split(gens: Vec<Monomial>, out: &mut Vec<Monomial>) {
    if gens.iter().any(|g| g.is_one()) {
        return;
    }
    let mixed = gens.iter().position(|g| g.support().count_ones() > 1);
    match mixed {
        None => {
            let mut c = Monomial::ONE;
            for g in &gens {
                let v = g.support().trailing_zeros() as usize;
                c.0[v] = if c.0[v] == 0 { g.0[v] } else { c.0[v].min(g.0[v]) };
            }
            out.push(c);
        }
        Some(k) => {
            let g = gens[k];
            let v = g.support().trailing_zeros() as usize;
            let mut pure = Monomial::ONE;
            pure.0[v] = g.0[v];
            let rest = g.without_var(v);
            for piece in [pure, rest] {
                let mut next: Vec<Monomial> =
                    gens.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, m)| *m).collect();
                next.push(piece);
                split(minimalize(next), out);
            }
        }
    }
}

/// Associated primes of `S/J`, as variable bitmasks.
pub fn associated_primes(gens: &[Monomial]) -> Vec<u32> {
    let mut p: Vec<u32> = irreducible_decomposition(gens).iter().map(|c| c.support()).collect();
    p.sort_unstable();
    p.dedup();
    p
}

/// Whether all associated primes of `S/J` have the same height.
pub fn is_unmixed(gens: &[Monomial]) -> bool {
    let heights: Vec<u32> = associated_primes(gens).iter().map(|p| p.count_ones()).collect();
    heights.windows(2).all(|w| w[0] == w[1])
}
