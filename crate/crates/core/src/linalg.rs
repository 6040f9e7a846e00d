//! Sparse exact linear algebra over `F_p`.
//!
//! Vectors are sorted `(column, value)` lists without zeros. Elimination
//! scatters into a dense `u64` accumulator, which is cheap at the sizes the
//! graded pieces reach.

use crate::field::PrimeField;

pub type SparseVec = Vec<(u32, u32)>;

/// Row echelon form kept incrementally. Every stored row is monic at its
/// pivot and pivots are distinct.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
    reduced: bool,
}

const NONE: u32 = u32::MAX;

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: vec![NONE; ncols], reduced: true }
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Self::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_row[col as usize] != NONE
    }

    /// Remainder of `v` after eliminating every pivot column it touches.
    pub fn reduce(&self, v: &[(u32, u32)]) -> SparseVec {
        let Some(&(first, _)) = v.first() else {
            return Vec::new();
        };
        let p = self.field.modulus() as u64;
        let mut acc = vec![0u64; self.ncols];
        for &(c, x) in v {
            acc[c as usize] = x as u64;
        }
        let mut out = Vec::new();
        for c in first as usize..self.ncols {
            let a = acc[c] % p;
            if a == 0 {
                continue;
            }
            let r = self.pivot_row[c];
            if r == NONE {
                out.push((c as u32, a as u32));
                continue;
            }
            let f = p - a;
            for &(j, y) in &self.rows[r as usize] {
                let j = j as usize;
                acc[j] = (acc[j] + f * y as u64) % p;
            }
        }
        out
    }

    pub fn contains(&self, v: &[(u32, u32)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` if it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        if r.is_empty() {
            return false;
        }
        let inv = self.field.inv(r[0].1).expect("nonzero");
        let row: SparseVec = r.into_iter().map(|(c, x)| (c, self.field.mul(x, inv))).collect();
        self.pivot_row[row[0].0 as usize] = self.rows.len() as u32;
        self.rows.push(row);
        self.reduced = false;
        true
    }

    /// Back-substitutes so every pivot column is zero outside its own row,
    /// then sorts rows by pivot.
    pub fn to_rref(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i].first().map(|e| e.0));
        let mut rows: Vec<SparseVec> = order.iter().map(|&i| std::mem::take(&mut self.rows[i])).collect();
        let p = self.field.modulus() as u64;
        let mut acc = vec![0u64; self.ncols];
        let mut pivot_row = vec![NONE; self.ncols];
        for (i, r) in rows.iter().enumerate() {
            pivot_row[r[0].0 as usize] = i as u32;
        }
        for i in (0..rows.len()).rev() {
            let touches = rows[i][1..].iter().any(|&(c, _)| pivot_row[c as usize] != NONE);
            if !touches {
                continue;
            }
            let start = rows[i][0].0 as usize;
            for &(c, x) in &rows[i] {
                acc[c as usize] = x as u64;
            }
            let mut out = Vec::with_capacity(rows[i].len());
            for c in start..self.ncols {
                let a = acc[c] % p;
                acc[c] = 0;
                if a == 0 {
                    continue;
                }
                let pr = pivot_row[c];
                if pr == NONE || pr as usize == i {
                    out.push((c as u32, a as u32));
                    continue;
                }
                // rows below i are already fully reduced
                let f = p - a;
                for &(j, y) in &rows[pr as usize] {
                    if j as usize != c {
                        let j = j as usize;
                        acc[j] = (acc[j] + f * y as u64) % p;
                    }
                }
            }
            rows[i] = out;
        }
        self.pivot_row = pivot_row;
        self.rows = rows;
        self.reduced = true;
    }
}

/// Basis of `{x : A x = 0}` where `A` is given by its columns, each a sparse
/// vector of length `nrows`.
pub fn kernel(field: PrimeField, nrows: usize, columns: &[SparseVec]) -> Vec<SparseVec> {
    let ncols = columns.len();
    let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, x) in col {
            rows[i as usize].push((j as u32, x));
        }
    }
    let mut e = Echelon::from_rows(field, ncols, rows);
    e.to_rref();
    let mut free_entries: Vec<Vec<(u32, u32)>> = vec![Vec::new(); ncols];
    for r in e.rows() {
        let pc = r[0].0;
        for &(c, x) in &r[1..] {
            free_entries[c as usize].push((pc, field.neg(x)));
        }
    }
    let mut out = Vec::new();
    for f in 0..ncols as u32 {
        if e.is_pivot(f) {
            continue;
        }
        let mut v = std::mem::take(&mut free_entries[f as usize]);
        v.push((f, 1));
        v.sort_unstable_by_key(|e| e.0);
        out.push(v);
    }
    out
}

/// Rank of the matrix with the given columns.
pub fn rank(field: PrimeField, nrows: usize, columns: &[SparseVec]) -> usize {
    Echelon::from_rows(field, nrows, columns.iter().cloned()).rank()
}

/// Some `x` with `A x = b`, if one exists.
pub fn solve(field: PrimeField, nrows: usize, columns: &[SparseVec], b: &[(u32, u32)]) -> Option<SparseVec> {
    let ncols = columns.len();
    let mut rows: Vec<SparseVec> = vec![Vec::new(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, x) in col {
            rows[i as usize].push((j as u32, x));
        }
    }
    for &(i, x) in b {
        rows[i as usize].push((ncols as u32, x));
    }
    let mut e = Echelon::from_rows(field, ncols + 1, rows);
    if e.is_pivot(ncols as u32) {
        return None;
    }
    e.to_rref();
    let mut x: SparseVec = Vec::new();
    for r in e.rows() {
        if let Some(&(c, v)) = r.last() {
            if c as usize == ncols {
                x.push((r[0].0, v));
            }
        }
    }
    x.sort_unstable_by_key(|e| e.0);
    Some(x)
}

pub fn scale(field: PrimeField, v: &[(u32, u32)], c: u32) -> SparseVec {
    if c == 0 {
        return Vec::new();
    }
    v.iter().map(|&(i, x)| (i, field.mul(x, c))).collect()
}

/// `a + c * b`.
pub fn axpy(field: PrimeField, a: &[(u32, u32)], c: u32, b: &[(u32, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let y = field.mul(c, b[j].1);
            if y != 0 {
                out.push((b[j].0, y));
            }
            j += 1;
        } else {
            let s = field.add(a[i].1, field.mul(c, b[j].1));
            if s != 0 {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
