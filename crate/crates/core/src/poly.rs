use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder, OrderKind};

/// Sparse polynomial; terms strictly descending in the ambient order, no zero
/// coefficients. Only meaningful together with the [`PolyRing`] that built it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// `Some(d)` iff every term has total degree `d`. The zero polynomial is
    /// homogeneous of every degree; it reports `None` here and callers treat
    /// it separately.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, u32)>) -> Self {
        Polynomial { terms }
    }
}

/// The polynomial ring `F_p[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

const MAX_PARSE_DEGREE: u32 = 128;
const MAX_PARSE_TERMS: usize = 100_000;

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, kind: OrderKind) -> Self {
        let order = MonomialOrder::new(kind, vars.len());
        PolyRing { field, vars, order }
    }

    pub fn with_order(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Self {
        assert_eq!(order.nvars(), vars.len());
        PolyRing { field, vars, order }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: vec![(Monomial::one(self.nvars()), c)] }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial { terms: vec![(Monomial::var(self.nvars(), i), 1)] }
    }

    pub fn term(&self, m: Monomial, c: u32) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Sorts, merges duplicate monomials and drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, u32)>) -> Polynomial {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let p = self.field.modulus();
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % p;
            if let Some((lm, lc)) = out.last_mut() {
                if *lm == m {
                    *lc = self.field.add(*lc, c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { terms: out }
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        match f.terms.first() {
            Some((m, _)) if m.nvars() != self.nvars() => {
                Err(Error::VariableCount { expected: self.nvars(), found: m.nvars() })
            }
            _ => Ok(()),
        }
    }

    pub fn try_add(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.add(f, g))
    }

    pub fn try_mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul(f, g))
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, g, 1, None)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, g, self.field.neg(1), None)
    }

    /// `f + c * mono * g`, merging two sorted term lists.
    pub fn add_scaled(&self, f: &Polynomial, g: &Polynomial, c: u32, mono: Option<&Monomial>) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let fld = self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(m, gc)| {
            let m = match mono {
                Some(u) => m.mul(u),
                None => m.clone(),
            };
            (m, fld.mul(*gc, c))
        });
        let mut next_g = gi.next();
        while let Some((gm, gc)) = next_g.take() {
            while i < f.terms.len() && self.order.cmp(&f.terms[i].0, &gm) == Ordering::Greater {
                out.push(f.terms[i].clone());
                i += 1;
            }
            if i < f.terms.len() && f.terms[i].0 == gm {
                let s = fld.add(f.terms[i].1, gc);
                if s != 0 {
                    out.push((gm, s));
                }
                i += 1;
            } else {
                out.push((gm, gc));
            }
            next_g = gi.next();
        }
        out.extend_from_slice(&f.terms[i..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: f.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(*a, c))).collect() }
    }

    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        // multiplication by a monomial preserves the order
        Polynomial { terms: f.terms.iter().map(|(fm, a)| (fm.mul(m), self.field.mul(*a, c))).collect() }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, big, *c, Some(m));
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            Some((_, c)) if *c != 1 => self.scale(f, self.field.inv(*c).expect("nonzero")),
            _ => f.clone(),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0 };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let c = self.field.signed(*c);
            let (neg, a) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                let _ = write!(s, "{a}");
            } else if a == 1 {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{a}*{mono}");
            }
        }
        s
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn guard(&self, f: &Polynomial) -> Result<()> {
        if f.len() > MAX_PARSE_TERMS || f.max_degree().unwrap_or(0) > MAX_PARSE_DEGREE {
            return Err(self.error("polynomial too large"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let t = self.unary()?;
            if acc.max_degree().unwrap_or(0) + t.max_degree().unwrap_or(0) > MAX_PARSE_DEGREE
                || acc.len().saturating_mul(t.len()) > MAX_PARSE_TERMS
            {
                return Err(self.error("polynomial too large"));
            }
            acc = self.ring.mul(&acc, &t);
            self.guard(&acc)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let f = self.unary()?;
                Ok(self.ring.neg(&f))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let e = self.integer()?;
        let d = base.max_degree().unwrap_or(0) as u128;
        if e > MAX_PARSE_DEGREE as u128 || d * e > MAX_PARSE_DEGREE as u128 {
            return Err(self.error("exponent too large"));
        }
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = self.ring.mul(&acc, &base);
            self.guard(&acc)?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<u128> {
        let start = self.pos;
        let mut v: u128 = 0;
        while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            v = v.saturating_mul(10).saturating_add((c - b'0') as u128);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected integer"));
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let p = self.ring.field.modulus() as u128;
                Ok(self.ring.constant((v % p) as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_alphanumeric() || **c == b'_') {
                    let _ = c;
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn ring(p: u32, vars: &[&str]) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), vars.iter().map(|s| s.to_string()).collect(), OrderKind::DegRevLex)
    }

    #[test]
    fn addition_examples() {
        let r = ring(32003, &["x", "y"]);
        let f = r.parse("x + y").unwrap();
        let g = r.parse("-x").unwrap();
        assert_eq!(r.add(&f, &g), r.parse("y").unwrap());
        assert_eq!(r.add(&Polynomial::zero(), &f), f);
        let r3 = ring(3, &["x", "y"]);
        let xy = r3.parse("x*y").unwrap();
        let sum = r3.add(&xy, &xy);
        assert_eq!(sum.terms()[0].1, 2);
        assert_eq!(r3.format(&sum), "-x*y");
    }

    #[test]
    fn multiplication_examples() {
        let r = ring(32003, &["x", "y"]);
        let xy = r.mul(&r.var(0), &r.var(1));
        assert_eq!(xy, r.parse("x*y").unwrap());
        assert_eq!(xy.homogeneous_degree(), Some(2));
        let f = r.mul(&r.parse("x+y").unwrap(), &r.parse("x-y").unwrap());
        assert_eq!(f, r.parse("x^2 - y^2").unwrap());
        let r4 = ring(32003, &["x1", "x2", "y1", "y2"]);
        let minor = r4.parse("x1*y2 - x2*y1").unwrap();
        let prod = r4.mul(&minor, &r4.parse("x1").unwrap());
        assert_eq!(prod, r4.parse("x1^2*y2 - x1*x2*y1").unwrap());
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring(32003, &["x", "y", "z", "t"]);
        assert_eq!(r.parse("x^2 + y^2").unwrap().homogeneous_degree(), Some(2));
        assert_eq!(r.parse("x + y^2").unwrap().homogeneous_degree(), None);
        assert_eq!(r.parse("x+3*t").unwrap().homogeneous_degree(), Some(1));
    }

    #[test]
    fn mismatched_variable_counts_are_rejected() {
        let r2 = ring(32003, &["x", "y"]);
        let r3 = ring(32003, &["x", "y", "z"]);
        let f = r3.parse("z").unwrap();
        assert!(matches!(r2.try_add(&r2.var(0), &f), Err(Error::VariableCount { .. })));
        assert!(r2.try_mul(&f, &r2.var(0)).is_err());
    }

    #[test]
    fn parse_errors_carry_columns() {
        let r = ring(32003, &["x", "y"]);
        match r.parse("x + q") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(r.parse("x +").is_err());
        assert!(r.parse("(x").is_err());
        assert!(r.parse("x^999").is_err());
        assert_eq!(r.parse("7 - 32010").unwrap(), Polynomial::zero());
        assert_eq!(r.parse("(x+y)^2").unwrap(), r.parse("x^2+2*x*y+y^2").unwrap());
    }

    #[test]
    fn format_roundtrips() {
        let r = ring(32003, &["x", "y", "z"]);
        for s in ["x^2*y + 3*z^3", "-x + y", "0", "5", "x*y*z - 2*y^3"] {
            let f = r.parse(s).unwrap();
            assert_eq!(r.parse(&r.format(&f)).unwrap(), f);
        }
    }

    fn naive_mul(r: &PolyRing, f: &Polynomial, g: &Polynomial) -> HashMap<Monomial, u32> {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                let e = acc.entry(a.mul(b)).or_insert(0);
                *e = r.field().add(*e, r.field().mul(*ca, *cb));
            }
        }
        acc.retain(|_, c| *c != 0);
        acc
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 3), 0u32..7), 0..6)
    }

    proptest! {
        #[test]
        fn mul_matches_naive_double_loop(a in arb_poly(), b in arb_poly()) {
            let r = ring(7, &["x", "y", "z"]);
            let mk = |t: &Vec<(Vec<u16>, u32)>| r.from_terms(t.iter().map(|(e, c)| (Monomial::from_exponents(e), *c)).collect());
            let (f, g) = (mk(&a), mk(&b));
            let prod = r.mul(&f, &g);
            let oracle = naive_mul(&r, &f, &g);
            prop_assert_eq!(prod.len(), oracle.len());
            for (m, c) in prod.terms() {
                prop_assert_eq!(oracle.get(m), Some(c));
            }
            for w in prod.terms().windows(2) {
                prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), Ordering::Greater);
            }
        }
    }
}
