use std::fmt;

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 16;

/// An exponent vector. Unused trailing slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(i: usize) -> Self {
        let mut m = Self::ONE;
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u16]) -> Self {
        let mut m = Self::ONE;
        m.0[..e.len()].copy_from_slice(e);
        m
    }

    /// Squarefree monomial on the variables of a bitmask.
    pub fn from_mask(mask: u32) -> Self {
        let mut m = Self::ONE;
        for i in 0..MAX_VARS {
            if mask >> i & 1 == 1 {
                m.0[i] = 1;
            }
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.0[i] += o.0[i];
        }
        r
    }

    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.0[i] <= o.0[i])
    }

    /// `o / self` when `self` divides `o`.
    #[inline]
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        let mut r = *o;
        for i in 0..MAX_VARS {
            if self.0[i] > o.0[i] {
                return None;
            }
            r.0[i] -= self.0[i];
        }
        Some(r)
    }

    #[inline]
    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.0[i] = r.0[i].max(o.0[i]);
        }
        r
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.0[i] = r.0[i].min(o.0[i]);
        }
        r
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.0[i] == 0 || o.0[i] == 0)
    }

    /// Bitmask of variables with positive exponent.
    pub fn support(&self) -> u32 {
        (0..MAX_VARS).filter(|&i| self.0[i] > 0).fold(0, |a, i| a | 1 << i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Sets the exponent of variable `i` to zero.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut r = *self;
        r.0[i] = 0;
        r
    }

    /// Lexicographic comparison with variable 0 most significant.
    pub fn cmp_lex(&self, o: &Monomial) -> std::cmp::Ordering {
        self.0.cmp(&o.0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[1, 2, 0]);
        let b = Monomial::from_exponents(&[2, 1, 1]);
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[2, 2, 1]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.quotient_of(&a.lcm(&b)), Some(Monomial::from_exponents(&[1, 0, 1])));
        assert_eq!(a.quotient_of(&b), None);
        assert_eq!(a.support(), 0b011);
        assert!(!a.is_coprime(&b));
    }
}
