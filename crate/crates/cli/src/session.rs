//! The session language: `;`-terminated declarations of rings, ideals,
//! modules, short exact sequences and filtrations.
//!
//! ```text
//! ring R = poly(p=32003; x,y,z,t) / (x^2, x*y, y^2, z^2, z*t, t^2);
//! module N = coker R(-1)^3 -> R^2 [[y, x+3*t, t],[z, -t, x+t]];
//! ideal m = maximal;
//! module Q = R / m;
//! ```
//!
//! Ideals and filtrations live over the most recently declared ring, or the
//! one named by `use NAME;`.

use std::collections::HashMap;
use std::fmt::Write as _;

use lindef::structure::{FiltrationMember, FiltrationSpec, ShortExactSequence};
use lindef::{Error as CoreError, FreeVector, GradedModule, GradedRing, Ideal, OrderKind, PolyRing, Polynomial, PrimeField};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct SessionError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Defaults for ring declarations that leave them out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub prime: u32,
    pub order: OrderKind,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions { prime: 32003, order: OrderKind::DegRevLex }
    }
}

#[derive(Clone, Debug)]
pub enum Object {
    Ring(GradedRing),
    Ideal(Ideal),
    Module(GradedModule),
    Ses { sub: String, ambient: String, seq: ShortExactSequence },
    Filtration(FiltrationSpec),
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Ring(_) => "ring",
            Object::Ideal(_) => "ideal",
            Object::Module(_) => "module",
            Object::Ses { .. } => "ses",
            Object::Filtration(_) => "filtration",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decl {
    pub name: String,
    pub line: usize,
    /// The ring the object lives over; `None` for rings and sequences.
    pub ring: Option<String>,
    pub object: Object,
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    decls: Vec<Decl>,
    index: HashMap<String, usize>,
}

/// A lookup failure, reported against the command line rather than the
/// source.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error("no declaration named `{0}`")]
    Missing(String),
    #[error("`{name}` is a {found}, expected {expected}")]
    WrongKind { name: String, found: &'static str, expected: &'static str },
}

impl Session {
    pub fn parse(text: &str) -> Result<Session, SessionError> {
        Self::parse_with(text, ParseOptions::default())
    }

    pub fn parse_with(text: &str, opts: ParseOptions) -> Result<Session, SessionError> {
        let mut p = Parser { src: text, pos: 0, opts, session: Session::default(), current: None };
        p.statements()?;
        Ok(p.session)
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    pub fn get(&self, name: &str) -> Option<&Decl> {
        self.index.get(name).map(|&i| &self.decls[i])
    }

    fn lookup(&self, name: &str) -> Result<&Decl, LookupError> {
        self.get(name).ok_or_else(|| LookupError::Missing(name.to_string()))
    }

    pub fn ring(&self, name: &str) -> Result<&GradedRing, LookupError> {
        match &self.lookup(name)?.object {
            Object::Ring(r) => Ok(r),
            o => Err(LookupError::WrongKind { name: name.into(), found: o.kind(), expected: "ring" }),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal, LookupError> {
        match &self.lookup(name)?.object {
            Object::Ideal(i) => Ok(i),
            o => Err(LookupError::WrongKind { name: name.into(), found: o.kind(), expected: "ideal" }),
        }
    }

    /// A module, an ideal viewed as a module, or a ring as the free module
    /// of rank one.
    pub fn module(&self, name: &str) -> Result<GradedModule, LookupError> {
        match &self.lookup(name)?.object {
            Object::Module(m) => Ok(m.clone()),
            Object::Ideal(i) => Ok(i.as_module()),
            Object::Ring(r) => Ok(GradedModule::free(r, vec![0])),
            o => Err(LookupError::WrongKind { name: name.into(), found: o.kind(), expected: "module" }),
        }
    }

    pub fn ses(&self, name: &str) -> Result<&ShortExactSequence, LookupError> {
        match &self.lookup(name)?.object {
            Object::Ses { seq, .. } => Ok(seq),
            o => Err(LookupError::WrongKind { name: name.into(), found: o.kind(), expected: "ses" }),
        }
    }

    pub fn filtration(&self, name: &str) -> Result<&FiltrationSpec, LookupError> {
        match &self.lookup(name)?.object {
            Object::Filtration(f) => Ok(f),
            o => Err(LookupError::WrongKind { name: name.into(), found: o.kind(), expected: "filtration" }),
        }
    }

    /// Canonical source text: every object written out explicitly, so that
    /// parsing it back rebuilds the same objects.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut current: Option<&str> = None;
        for d in &self.decls {
            if let (Some(r), Object::Ideal(_) | Object::Filtration(_)) = (&d.ring, &d.object) {
                if current != Some(r.as_str()) {
                    let _ = writeln!(out, "use {r};");
                }
            }
            match &d.object {
                Object::Ring(r) => {
                    let _ = write!(out, "ring {} = poly(p={}; {}", d.name, r.field().modulus(), r.vars().join(","));
                    if r.poly().order().kind() != OrderKind::DegRevLex {
                        out.push_str("; order=deglex");
                    }
                    out.push(')');
                    if !r.defining_ideal().is_empty() {
                        let _ = write!(out, " / ({})", poly_list(r, r.defining_ideal()));
                    }
                    out.push_str(";\n");
                }
                Object::Ideal(i) => {
                    let _ = writeln!(out, "ideal {} = ({});", d.name, poly_list(i.ring(), i.generators()));
                }
                Object::Module(m) => {
                    let ring = d.ring.as_deref().unwrap_or("R");
                    let _ = write!(out, "module {} = sub {} {}", d.name, render_shifts(ring, m.shifts()), matrix(m.ring(), m.rank(), m.generators()));
                    if !m.relations().is_empty() {
                        let _ = write!(out, " / {}", matrix(m.ring(), m.rank(), m.relations()));
                    }
                    out.push_str(";\n");
                }
                Object::Ses { sub, ambient, .. } => {
                    let _ = writeln!(out, "ses {} = ({sub} in {ambient});", d.name);
                }
                Object::Filtration(f) => {
                    let members: Vec<String> =
                        f.members.iter().map(|m| format!("{}: ({})", m.name, poly_list(&f.ring, &m.chain))).collect();
                    let _ = writeln!(out, "filtration {} = {{ {} }};", d.name, members.join(", "));
                }
            }
            if let Some(r) = &d.ring {
                if matches!(d.object, Object::Ideal(_) | Object::Filtration(_)) {
                    current = Some(r.as_str());
                }
            }
            if let Object::Ring(_) = d.object {
                current = Some(d.name.as_str());
            }
        }
        out
    }
}

fn poly_list(r: &GradedRing, fs: &[Polynomial]) -> String {
    fs.iter().map(|f| r.format(f)).collect::<Vec<_>>().join(", ")
}

fn matrix(r: &GradedRing, rank: usize, cols: &[FreeVector]) -> String {
    let rows: Vec<String> = (0..rank)
        .map(|c| {
            let entries: Vec<String> = cols.iter().map(|v| r.format(&v.entries[c])).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn render_shifts(ring: &str, shifts: &[i32]) -> String {
    if shifts.is_empty() {
        return format!("{ring}^0");
    }
    let mut parts = Vec::new();
    let mut k = 0;
    while k < shifts.len() {
        let s = shifts[k];
        let mut e = k;
        while e < shifts.len() && shifts[e] == s {
            e += 1;
        }
        let base = if s == 0 { ring.to_string() } else { format!("{ring}({})", -s) };
        parts.push(if e - k == 1 { base } else { format!("{base}^{}", e - k) });
        k = e;
    }
    parts.join(" + ")
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    opts: ParseOptions,
    session: Session,
    current: Option<String>,
}

type PResult<T> = Result<T, SessionError>;

impl<'a> Parser<'a> {
    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> SessionError {
        let (line, column) = self.location(pos);
        SessionError { line, column, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> SessionError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        loop {
            let r = self.rest();
            let trimmed = r.trim_start();
            self.pos += r.len() - trimmed.len();
            if trimmed.starts_with('#') || trimmed.starts_with("//") {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(match self.peek() {
                Some(f) => format!("expected `{c}`, found `{f}`"),
                None => format!("expected `{c}`, found end of input"),
            }))
        }
    }

    fn ident(&mut self) -> PResult<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let len = r
            .char_indices()
            .find(|&(i, c)| !(c == '_' || c.is_ascii_alphanumeric()) || (i == 0 && c.is_ascii_digit()))
            .map_or(r.len(), |(i, _)| i);
        if len == 0 {
            return Err(self.error("expected a name"));
        }
        self.pos += len;
        Ok((start, &r[..len]))
    }

    fn keyword(&mut self, word: &str) -> PResult<()> {
        let save = self.pos;
        match self.ident() {
            Ok((_, w)) if w == word => Ok(()),
            _ => {
                self.pos = save;
                self.skip_ws();
                Err(self.error(format!("expected `{word}`")))
            }
        }
    }

    fn peek_ident(&mut self) -> Option<&'a str> {
        let save = self.pos;
        let out = self.ident().ok().map(|(_, w)| w);
        self.pos = save;
        out
    }

    fn integer(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let r = self.rest();
        let len = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if len == 0 {
            return Err(self.error_at(start, "expected an integer"));
        }
        let v: i64 = r[..len].parse().map_err(|_| self.error_at(start, "integer out of range"))?;
        self.pos += len;
        Ok(if neg { -v } else { v })
    }

    /// The raw text of one list item, ending at a `,` or a closing bracket
    /// outside parentheses.
    fn item(&mut self) -> PResult<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                ',' | ')' | ']' | '}' | ';' if depth == 0 => {
                    let text = &self.src[start..start + i];
                    self.pos = start + i;
                    return Ok((start, text));
                }
                _ => {}
            }
        }
        Err(self.error_at(start, "unterminated list"))
    }

    fn poly(&mut self, ring: &GradedRing) -> PResult<Polynomial> {
        let (start, text) = self.item()?;
        let lead = text.len() - text.trim_start().len();
        if text.trim().is_empty() {
            return Err(self.error_at(start, "expected a polynomial"));
        }
        ring.parse_poly(text.trim()).map_err(|e| match e {
            CoreError::Parse { column, message, .. } => self.error_at(start + lead + column - 1, message),
            other => self.error_at(start + lead, other.to_string()),
        })
    }

    /// `( f, g, ... )`, possibly empty.
    fn poly_list(&mut self, ring: &GradedRing) -> PResult<Vec<Polynomial>> {
        self.expect('(')?;
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            out.push(self.poly(ring)?);
            if self.eat(')') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn name_list(&mut self) -> PResult<Vec<(usize, &'a str)>> {
        self.expect('(')?;
        let mut out = vec![self.ident()?];
        while self.eat(',') {
            out.push(self.ident()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn statements(&mut self) -> PResult<()> {
        loop {
            self.skip_ws();
            if self.pos >= self.src.len() {
                return Ok(());
            }
            let (at, word) = self.ident()?;
            match word {
                "ring" => self.ring_decl()?,
                "ideal" => self.ideal_decl()?,
                "module" => self.module_decl()?,
                "ses" => self.ses_decl()?,
                "filtration" => self.filtration_decl()?,
                "use" => {
                    let (p, name) = self.ident()?;
                    self.ring_named(p, name)?;
                    self.current = Some(name.to_string());
                }
                other => return Err(self.error_at(at, format!("unknown statement `{other}`"))),
            }
            self.expect(';')?;
        }
    }

    fn new_name(&mut self) -> PResult<(usize, String)> {
        let (p, name) = self.ident()?;
        if self.session.index.contains_key(name) {
            return Err(self.error_at(p, format!("`{name}` is already declared")));
        }
        self.expect('=')?;
        Ok((p, name.to_string()))
    }

    fn declare(&mut self, at: usize, name: String, ring: Option<String>, object: Object) {
        let (line, _) = self.location(at);
        self.session.index.insert(name.clone(), self.session.decls.len());
        self.session.decls.push(Decl { name, line, ring, object });
    }

    fn ring_named(&self, at: usize, name: &str) -> PResult<GradedRing> {
        match self.session.get(name).map(|d| &d.object) {
            Some(Object::Ring(r)) => Ok(r.clone()),
            Some(o) => Err(self.error_at(at, format!("`{name}` is a {}, expected ring", o.kind()))),
            None => Err(self.error_at(at, format!("unknown ring `{name}`"))),
        }
    }

    fn ideal_named(&self, at: usize, name: &str) -> PResult<Ideal> {
        match self.session.get(name).map(|d| &d.object) {
            Some(Object::Ideal(i)) => Ok(i.clone()),
            Some(o) => Err(self.error_at(at, format!("`{name}` is a {}, expected ideal", o.kind()))),
            None => Err(self.error_at(at, format!("unknown ideal `{name}`"))),
        }
    }

    fn current_ring(&self, at: usize) -> PResult<(String, GradedRing)> {
        let Some(name) = &self.current else {
            return Err(self.error_at(at, "no ring declared yet"));
        };
        Ok((name.clone(), self.ring_named(at, name)?))
    }

    fn ring_decl(&mut self) -> PResult<()> {
        let (at, name) = self.new_name()?;
        let (bp, base) = self.ident()?;
        let ring = if base == "poly" {
            self.expect('(')?;
            let mut prime = self.opts.prime;
            let save = self.pos;
            if self.peek_ident() == Some("p") && {
                self.ident()?;
                self.eat('=')
            } {
                let pp = self.pos;
                let v = self.integer()?;
                prime = u32::try_from(v).map_err(|_| self.error_at(pp, format!("{v} is not a prime below 2^31")))?;
                self.expect(';')?;
            } else {
                self.pos = save;
            }
            let mut vars = vec![self.ident()?.1.to_string()];
            while self.eat(',') {
                vars.push(self.ident()?.1.to_string());
            }
            let mut order = self.opts.order;
            if self.eat(';') {
                self.keyword("order")?;
                self.expect('=')?;
                let (op, o) = self.ident()?;
                order = match o {
                    "degrevlex" => OrderKind::DegRevLex,
                    "deglex" => OrderKind::DegLex,
                    other => return Err(self.error_at(op, format!("unknown monomial order `{other}`"))),
                };
            }
            self.expect(')')?;
            let mut seen = std::collections::HashSet::new();
            if let Some(v) = vars.iter().find(|v| !seen.insert(v.as_str())) {
                return Err(self.error_at(bp, format!("variable `{v}` listed twice")));
            }
            let field = PrimeField::new(prime).map_err(|e| self.error_at(bp, e.to_string()))?;
            GradedRing::new(PolyRing::new(field, vars, order), Vec::new()).map_err(|e| self.error_at(bp, e.to_string()))?
        } else {
            self.ring_named(bp, base)?
        };
        let ring = if self.eat('/') {
            let rp = self.pos;
            let rels = self.poly_list(&ring)?;
            ring.quotient(&rels).map_err(|e| self.error_at(rp, format!("in ring `{name}`: {e}")))?
        } else {
            ring
        };
        self.current = Some(name.clone());
        self.declare(at, name, None, Object::Ring(ring));
        Ok(())
    }

    fn ideal_expr(&mut self) -> PResult<(String, Ideal)> {
        self.skip_ws();
        let at = self.pos;
        if self.peek() == Some('(') {
            let (rname, ring) = self.current_ring(at)?;
            let gens = self.poly_list(&ring)?;
            let i = Ideal::new(&ring, gens).map_err(|e| self.error_at(at, e.to_string()))?;
            return Ok((rname, i));
        }
        let (op_at, op) = self.ident()?;
        match op {
            "maximal" => {
                let (rname, ring) = self.current_ring(at)?;
                Ok((rname, Ideal::maximal(&ring)))
            }
            "intersect" | "plus" | "times" => {
                let names = self.name_list()?;
                let mut acc: Option<(String, Ideal)> = None;
                for (p, n) in names {
                    let i = self.ideal_named(p, n)?;
                    let rname = self.session.get(n).and_then(|d| d.ring.clone()).unwrap_or_default();
                    acc = Some(match acc {
                        None => (rname, i),
                        Some((r, a)) => {
                            let next = match op {
                                "intersect" => a.intersect(&i),
                                "plus" => a.plus(&i),
                                _ => a.times(&i),
                            };
                            (r, next.map_err(|e| self.error_at(p, e.to_string()))?)
                        }
                    });
                }
                Ok(acc.expect("nonempty list"))
            }
            "colon" | "power" => {
                self.expect('(')?;
                let (p, n) = self.ident()?;
                let i = self.ideal_named(p, n)?;
                let rname = self.session.get(n).and_then(|d| d.ring.clone()).unwrap_or_default();
                self.expect(',')?;
                let out = if op == "colon" {
                    let f = self.poly(i.ring())?;
                    if f.is_zero() {
                        return Err(self.error_at(op_at, "colon by zero"));
                    }
                    i.colon(&f)
                } else {
                    let ep = self.pos;
                    let e = self.integer()?;
                    let e = u32::try_from(e).map_err(|_| self.error_at(ep, "exponent must be nonnegative"))?;
                    i.power(e)
                };
                self.expect(')')?;
                Ok((rname, out.map_err(|e| self.error_at(op_at, e.to_string()))?))
            }
            other => Err(self.error_at(op_at, format!("unknown ideal expression `{other}`"))),
        }
    }

    fn ideal_decl(&mut self) -> PResult<()> {
        let (at, name) = self.new_name()?;
        let (rname, i) = self.ideal_expr()?;
        self.declare(at, name, Some(rname), Object::Ideal(i));
        Ok(())
    }

    /// `R(-1)^3 + R^2`, returning the ring name and the shifts.
    fn shifts(&mut self) -> PResult<(String, GradedRing, Vec<i32>)> {
        let mut out = Vec::new();
        let mut ring: Option<(String, GradedRing)> = None;
        loop {
            let (p, name) = self.ident()?;
            let r = self.ring_named(p, name)?;
            if let Some((n, _)) = &ring {
                if n != name {
                    return Err(self.error_at(p, format!("free summands over `{n}` and `{name}`")));
                }
            }
            ring = Some((name.to_string(), r));
            let mut twist = 0i64;
            if self.eat('(') {
                twist = self.integer()?;
                self.expect(')')?;
            }
            let mut count = 1i64;
            if self.eat('^') {
                let cp = self.pos;
                count = self.integer()?;
                if !(0..=64).contains(&count) {
                    return Err(self.error_at(cp, "rank must be between 0 and 64"));
                }
            }
            let shift = i32::try_from(-twist).map_err(|_| self.error_at(p, "twist out of range"))?;
            out.extend(std::iter::repeat_n(shift, count as usize));
            if !self.eat('+') {
                let (n, r) = ring.expect("one summand");
                return Ok((n, r, out));
            }
        }
    }

    /// `[[row], [row]]` as columns of a matrix with `rank` rows.
    fn matrix(&mut self, ring: &GradedRing, rank: usize) -> PResult<Vec<FreeVector>> {
        let at = self.pos;
        self.expect('[')?;
        let mut rows: Vec<Vec<Polynomial>> = Vec::new();
        if !self.eat(']') {
            loop {
                self.expect('[')?;
                let mut row = Vec::new();
                if !self.eat(']') {
                    loop {
                        row.push(self.poly(ring)?);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                rows.push(row);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        if rows.len() != rank && !(rank == 0 && rows.is_empty()) {
            return Err(self.error_at(at, format!("matrix has {} rows, the target has rank {rank}", rows.len())));
        }
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(self.error_at(at, "rows of different lengths"));
        }
        Ok((0..width).map(|c| FreeVector::new(rows.iter().map(|r| r[c].clone()).collect())).collect())
    }

    fn module_decl(&mut self) -> PResult<()> {
        let (at, name) = self.new_name()?;
        self.skip_ws();
        let start = self.pos;
        let (word_at, word) = self.ident()?;
        let wrap = |p: &Self, e: CoreError| p.error_at(start, format!("in module `{name}`: {e}"));
        let (rname, m) = match word {
            "coker" => {
                let (rname, ring, src) = self.shifts()?;
                self.expect('-')?;
                self.expect('>')?;
                let tp = self.pos;
                let (tname, _, tgt) = self.shifts()?;
                if tname != rname {
                    return Err(self.error_at(tp, "source and target over different rings"));
                }
                let cols = self.matrix(&ring, tgt.len())?;
                let m = GradedModule::cokernel(&ring, tgt, Some(&src), cols).map_err(|e| wrap(self, e))?;
                (rname, m)
            }
            "sub" => {
                let (rname, ring, shifts) = self.shifts()?;
                let gens = self.matrix(&ring, shifts.len())?;
                let rels = if self.eat('/') { self.matrix(&ring, shifts.len())? } else { Vec::new() };
                let m = GradedModule::subquotient(&ring, shifts, gens, rels).map_err(|e| wrap(self, e))?;
                (rname, m)
            }
            "free" => {
                let (rname, ring, shifts) = self.shifts()?;
                (rname, GradedModule::free(&ring, shifts))
            }
            other => match self.session.get(other).map(|d| &d.object) {
                Some(Object::Ring(ring)) => {
                    let ring = ring.clone();
                    self.expect('/')?;
                    self.skip_ws();
                    let i = if self.peek() == Some('(') {
                        let ip = self.pos;
                        let gens = self.poly_list(&ring)?;
                        Ideal::new(&ring, gens).map_err(|e| self.error_at(ip, e.to_string()))?
                    } else {
                        let (p, n) = self.ident()?;
                        let i = self.ideal_named(p, n)?;
                        if !i.ring().same_as(&ring) {
                            return Err(self.error_at(p, format!("`{n}` is an ideal of a different ring")));
                        }
                        i
                    };
                    (other.to_string(), i.quotient_module())
                }
                Some(Object::Ideal(i)) => {
                    let rname = self.session.get(other).and_then(|d| d.ring.clone()).unwrap_or_default();
                    (rname, i.as_module())
                }
                _ => return Err(self.error_at(word_at, format!("expected coker, sub, free, a ring or an ideal, found `{other}`"))),
            },
        };
        self.declare(at, name, Some(rname), Object::Module(m));
        Ok(())
    }

    fn ses_decl(&mut self) -> PResult<()> {
        let (at, name) = self.new_name()?;
        self.expect('(')?;
        let (sp, sub) = self.ident()?;
        self.keyword("in")?;
        let (ap, amb) = self.ident()?;
        self.expect(')')?;
        let m = self.session.module(sub).map_err(|e| self.error_at(sp, e.to_string()))?;
        let p = self.session.module(amb).map_err(|e| self.error_at(ap, e.to_string()))?;
        let seq = ShortExactSequence::new(m, p).map_err(|e| self.error_at(sp, format!("in ses `{name}`: {e}")))?;
        self.declare(at, name, None, Object::Ses { sub: sub.into(), ambient: amb.into(), seq });
        Ok(())
    }

    fn filtration_decl(&mut self) -> PResult<()> {
        let (at, name) = self.new_name()?;
        let (rname, ring) = self.current_ring(at)?;
        self.expect('{')?;
        let mut members = Vec::new();
        let mut seen = std::collections::HashSet::new();
        loop {
            let (mp, mname) = self.ident()?;
            if !seen.insert(mname) {
                return Err(self.error_at(mp, format!("member `{mname}` listed twice")));
            }
            self.expect(':')?;
            let cp = self.pos;
            let chain = self.poly_list(&ring)?;
            if let Some(f) = chain.iter().find(|f| f.homogeneous_degree().is_none()) {
                return Err(self.error_at(cp, format!("{} is not homogeneous", ring.format(f))));
            }
            let ideal = Ideal::new(&ring, chain.clone()).map_err(|e| self.error_at(cp, e.to_string()))?;
            members.push(FiltrationMember { name: mname.to_string(), ideal, chain });
            if self.eat('}') {
                break;
            }
            self.expect(',')?;
        }
        self.declare(at, name, Some(rname), Object::Filtration(FiltrationSpec { ring, members }));
        Ok(())
    }
}
