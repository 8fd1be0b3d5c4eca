//! Matrices over the polynomial ring and over ℚ(i).

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// Dense row-major matrix of polynomials sharing one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    ring: Arc<Ring>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<Ring>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| !Ring::same(e.ring(), ring)) {
            return Err(Error::VarSetMismatch(
                "matrix entries over different rings".into(),
            ));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            ring: ring.clone(),
            entries,
        })
    }

    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            ring: ring.clone(),
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for k in 0..n {
            m.set(k, k, Polynomial::one(ring));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Applies `f` to every entry, producing a matrix over `target`.
    pub fn map(
        &self,
        target: &Arc<Ring>,
        f: impl Fn(&Polynomial) -> Result<Polynomial>,
    ) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(target, self.rows, self.cols, entries)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || !Ring::same(&self.ring, &other.ring) {
            return Err(Error::Invalid("hconcat shape or ring mismatch".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        PolyMatrix::new(&self.ring, self.rows, self.cols + other.cols, entries)
    }

    /// `self · v` for a column vector of polynomials.
    pub fn mul_vec(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::Invalid("vector length mismatch".into()));
        }
        (0..self.rows)
            .map(|r| {
                let mut acc = Polynomial::zero(&self.ring);
                for c in 0..self.cols {
                    acc = acc.try_add(&self.get(r, c).try_mul(&v[c])?)?;
                }
                Ok(acc)
            })
            .collect()
    }

    fn check_indices(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<()> {
        if row_idx.len() != col_idx.len() {
            return Err(Error::Invalid(
                "minor needs equally many rows and columns".into(),
            ));
        }
        if let Some(r) = row_idx.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {r} of {}", self.rows)));
        }
        if let Some(c) = col_idx.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange(format!(
                "column {c} of {}",
                self.cols
            )));
        }
        Ok(())
    }

    /// Determinant of the submatrix on the given rows and columns, by
    /// cofactor expansion with minors memoised over column subsets.
    pub fn minor(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Polynomial> {
        self.check_indices(row_idx, col_idx)?;
        let k = row_idx.len();
        if k == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if k > 30 {
            return Err(Error::Invalid(
                "minor too large for subset memoisation".into(),
            ));
        }
        // level j holds determinants of rows row_idx[..j] against column subsets of size j
        let mut level: HashMap<u32, Polynomial> = HashMap::new();
        level.insert(0, Polynomial::one(&self.ring));
        for j in 0..k {
            let row = row_idx[j];
            let mut next: HashMap<u32, Polynomial> = HashMap::new();
            for (&mask, det) in &level {
                if det.is_zero() {
                    continue;
                }
                for (p, &c) in col_idx.iter().enumerate() {
                    if mask & (1 << p) != 0 {
                        continue;
                    }
                    let entry = self.get(row, c);
                    if entry.is_zero() {
                        continue;
                    }
                    // position of the new column among the selected ones
                    let above = (mask >> p).count_ones() as usize;
                    let sign_neg = above % 2 == 1;
                    let mut t = entry * det;
                    if sign_neg {
                        t = -&t;
                    }
                    let slot = next
                        .entry(mask | (1 << p))
                        .or_insert_with(|| Polynomial::zero(&self.ring));
                    *slot = &*slot + &t;
                }
            }
            level = next;
        }
        let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        Ok(level
            .remove(&full)
            .unwrap_or_else(|| Polynomial::zero(&self.ring)))
    }

    /// All `k×k` minors, ordered lexicographically by (row set, column set).
    pub fn all_minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k > self.rows.min(self.cols) {
            return Err(Error::IndexOutOfRange(format!(
                "minor size {k} exceeds {}x{}",
                self.rows, self.cols
            )));
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let pairs: Vec<(Vec<usize>, Vec<usize>)> = row_sets
            .iter()
            .flat_map(|r| col_sets.iter().map(move |c| (r.clone(), c.clone())))
            .collect();
        use rayon::prelude::*;
        pairs.par_iter().map(|(r, c)| self.minor(r, c)).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination; square matrices only.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Invalid("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut prev = Polynomial::one(&self.ring);
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(&self.ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .ok_or_else(|| Error::Invalid("Bareiss division was not exact".into()))?;
                }
                a[i][k] = Polynomial::zero(&self.ring);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dense matrix over ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ScalarMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Invalid("ragged rows".into()));
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::Invalid("matrix product shape mismatch".into()));
        }
        let mut out = ScalarMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = &out.data[r * other.cols + c] + &(a * b);
                        out.data[r * other.cols + c] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..m.cols {
                    m.data.swap(p * m.cols + k, r * m.cols + k);
                }
            }
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for k in c..m.cols {
                let v = m.get(r, k) * &inv;
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for k in c..m.cols {
                    let prk = m.get(r, k);
                    if prk.is_zero() {
                        continue;
                    }
                    let v = m.get(i, k) - &(&f * prk);
                    m.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[f] = GaussianRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<ScalarMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = ScalarMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, GaussianRational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ScalarMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Solves `self · x = b` for one solution, if consistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        let mut aug = ScalarMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(r, self.cols).clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring() -> Arc<Ring> {
        Ring::with_names(&["x1", "x2", "x3", "x4"]).unwrap()
    }

    #[test]
    fn identity_minor_is_one() {
        let r = ring();
        let m = PolyMatrix::identity(&r, 4);
        assert!(m.minor(&[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap().is_one());
    }

    #[test]
    fn two_by_two() {
        let r = ring();
        let e = |s: &str| parse_poly(s, &r, None).unwrap();
        let m = PolyMatrix::new(&r, 2, 2, vec![e("x1"), e("x2"), e("x3"), e("x4")]).unwrap();
        assert_eq!(m.minor(&[0, 1], &[0, 1]).unwrap(), e("x1*x4 - x2*x3"));
        assert_eq!(m.det_bareiss().unwrap(), e("x1*x4 - x2*x3"));
    }

    #[test]
    fn index_errors() {
        let r = ring();
        let m = PolyMatrix::identity(&r, 3);
        assert!(matches!(
            m.minor(&[0, 3], &[0, 1]),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(m.all_minors(4), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn three_by_three_single_minor() {
        let r = ring();
        let e = |s: &str| parse_poly(s, &r, None).unwrap();
        let m = PolyMatrix::new(
            &r,
            3,
            3,
            vec![
                e("x1"),
                e("x2"),
                e("0"),
                e("1"),
                e("x3"),
                e("x4"),
                e("x2"),
                e("0"),
                e("x1"),
            ],
        )
        .unwrap();
        let all = m.all_minors(3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], m.det_bareiss().unwrap());
    }

    #[test]
    fn nullspace_examples() {
        assert!(ScalarMatrix::identity(4).nullspace().is_empty());
        assert_eq!(ScalarMatrix::zeros(2, 5).nullspace().len(), 5);
        let m = ScalarMatrix::from_rows(vec![vec![
            GaussianRational::from_int(1),
            GaussianRational::i(),
        ]])
        .unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let dot = &(&ns[0][0] * m.get(0, 0)) + &(&ns[0][1] * m.get(0, 1));
        assert!(dot.is_zero());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        assert_eq!(
            c,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(10, 8).len(), 45);
    }
}
