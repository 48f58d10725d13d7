use super::monomial::Monomial;
use super::ring::{Degree, Ring};
use super::vector::{ModVec, Term};
use crate::error::{Error, Result};

/// A ring element, stored as a vector in `S^1` sorted by the ring's grevlex order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial(pub ModVec);

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial(ModVec::zero())
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        Self::from_terms(ring, vec![(Monomial::ONE, ring.field().from_i64(c))])
    }

    pub fn monomial(m: Monomial, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial(ModVec(vec![Term::new(m, 0, c)]))
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), 1)
    }

    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, u32)>) -> Self {
        let t = terms.into_iter().map(|(m, c)| Term::new(m, 0, c)).collect();
        Polynomial(ModVec::from_terms(t, ring.ring_order(), ring.field()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, u32)> + '_ {
        self.0 .0.iter().map(|t| (t.mon, t.coef))
    }

    pub fn term_list(&self) -> Vec<(Monomial, u32)> {
        self.terms().collect()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn lead(&self) -> Option<(Monomial, u32)> {
        self.0.lead().map(|t| (t.mon, t.coef))
    }

    /// The coefficient when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<u32> {
        match self.0 .0.as_slice() {
            [] => Some(0),
            [t] if t.mon.is_one() => Some(t.coef),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self, ring: &Ring) -> Self {
        Polynomial(self.0.add(&o.0, ring.ring_order(), ring.field()))
    }

    pub fn sub(&self, o: &Self, ring: &Ring) -> Self {
        Polynomial(self.0.sub(&o.0, ring.ring_order(), ring.field()))
    }

    pub fn neg(&self, ring: &Ring) -> Self {
        Polynomial(self.0.scale(ring.field().neg(1), ring.field()))
    }

    pub fn scale(&self, c: u32, ring: &Ring) -> Self {
        Polynomial(self.0.scale(c, ring.field()))
    }

    pub fn mul(&self, o: &Self, ring: &Ring) -> Self {
        Polynomial(self.0.mul_terms(&o.term_list(), ring.ring_order(), ring.field()))
    }

    pub fn pow(&self, e: u32, ring: &Ring) -> Self {
        let mut r = Polynomial::constant(ring, 1);
        for _ in 0..e {
            r = r.mul(self, ring);
        }
        r
    }

    /// Multidegree if homogeneous; the zero polynomial has none.
    pub fn homogeneous_degree(&self, ring: &Ring) -> Option<Degree> {
        let mut it = self.terms();
        let d = ring.degree(&it.next()?.0);
        it.all(|(m, _)| ring.degree(&m) == d).then_some(d)
    }

    pub fn is_homogeneous(&self, ring: &Ring) -> bool {
        self.is_zero() || self.homogeneous_degree(ring).is_some()
    }

    /// Text form with symmetric coefficients, e.g. `x0^2 - 3*x1*x2 + 1`.
    pub fn format(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = ring.field();
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let s = f.to_symmetric(c);
            let mag = s.unsigned_abs();
            if k == 0 {
                if s < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if s < 0 { " - " } else { " + " });
            }
            let mono = format_monomial(&m, ring);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    pub fn parse(s: &str, ring: &Ring) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, ring };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!("unexpected '{}' in '{s}'", &s[p.pos..])));
        }
        Ok(v)
    }
}

pub fn format_monomial(m: &Monomial, ring: &Ring) -> String {
    let mut parts = Vec::new();
    for v in 0..ring.nvars() {
        match m.exp(v) {
            0 => {}
            1 => parts.push(ring.names()[v].clone()),
            e => parts.push(format!("{}^{e}", ring.names()[v])),
        }
    }
    parts.join("*")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in '{}'", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg(self.ring)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?, self.ring);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?, self.ring);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?, self.ring);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e, self.ring));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| self.err("integer out of range"))
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg(self.ring))
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.ring.field().characteristic() as u64;
                let start = self.pos;
                let mut v: u64 = 0;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    v = (v * 10 + (self.src[self.pos] - b'0') as u64) % p;
                    self.pos += 1;
                }
                debug_assert!(self.pos > start);
                Ok(Polynomial::monomial(Monomial::ONE, v as u32))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() {
                    let ch = self.src[self.pos];
                    if ch.is_ascii_alphanumeric() || ch == b'_' || ch == b'{' || ch == b'}' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = self.ring.var_index(name).ok_or_else(|| self.err(&format!("unknown variable '{name}'")))?;
                Ok(Polynomial::var(v))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::product(&[2, 3], PrimeField::default()).unwrap()
    }

    #[test]
    fn parse_and_format() {
        let r = ring();
        let p = Polynomial::parse("(x_1_0 + x_{1}_{1})^2 - 2*x_1_0*x_1_1", &r).unwrap();
        assert_eq!(p.format(&r), "x_1_0^2 + x_1_1^2");
        let q = Polynomial::parse("-3*x_2_2 + x_2_0 - 1 + 1", &r).unwrap();
        assert_eq!(q.format(&r), "x_2_0 - 3*x_2_2");
        assert!(Polynomial::parse("x_3_0", &r).is_err());
        assert!(Polynomial::parse("x_1_0 +", &r).is_err());
        let single = Ring::product(&[3], PrimeField::default()).unwrap();
        let s = Polynomial::parse("x0*x2 - x1^2", &single).unwrap();
        assert_eq!(s.format(&single), "-x1^2 + x0*x2");
        assert_eq!(s.homogeneous_degree(&single), Some(vec![2]));
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        assert!(Polynomial::parse("x_1_0*x_2_1 + x_1_1*x_2_2", &r).unwrap().is_homogeneous(&r));
        assert!(!Polynomial::parse("x_1_0 + x_2_1", &r).unwrap().is_homogeneous(&r));
    }

    proptest! {
        #[test]
        fn format_roundtrip(terms in prop::collection::vec((prop::collection::vec(0u16..3, 5), -40i64..40), 0..6)) {
            let r = ring();
            let p = Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), r.field().from_i64(c))).collect(),
            );
            let s = p.format(&r);
            let q = Polynomial::parse(&s, &r).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(q.format(&r), s);
        }

        #[test]
        fn ring_axioms(a in prop::collection::vec((prop::collection::vec(0u16..2, 5), 1u32..9), 0..4),
                       b in prop::collection::vec((prop::collection::vec(0u16..2, 5), 1u32..9), 0..4),
                       c in prop::collection::vec((prop::collection::vec(0u16..2, 5), 1u32..9), 0..4)) {
            let r = ring();
            let mk = |t: Vec<(Vec<u16>, u32)>| Polynomial::from_terms(&r, t.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)).collect());
            let (a, b, c) = (mk(a), mk(b), mk(c));
            prop_assert_eq!(a.mul(&b, &r), b.mul(&a, &r));
            prop_assert_eq!(a.mul(&b.add(&c, &r), &r), a.mul(&b, &r).add(&a.mul(&c, &r), &r));
            prop_assert_eq!(a.mul(&b, &r).mul(&c, &r), a.mul(&b.mul(&c, &r), &r));
        }
    }
}
