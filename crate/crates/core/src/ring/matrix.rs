use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::poly::{check_ring, PolyRing, Polynomial};
use crate::error::{Error, Result};

/// A dense matrix of polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
            for e in r {
                check_ring(e.ring(), ring)?;
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Parses rows of polynomial text.
    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Polynomial::parse(ring, s.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_ring(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// `T^t = -T` with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero()
                    && (i + 1..self.cols).all(|j| self.get(i, j).add(self.get(j, i)).is_zero())
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Determinant by Laplace expansion along the first row, memoized over
    /// column subsets.
    pub fn det(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        let mut memo = HashMap::new();
        Ok(self.minor_memo(&rows, &cols, &mut memo))
    }

    fn minor_memo(
        &self,
        rows: &[usize],
        cols: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), Polynomial>,
    ) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(&self.ring);
        }
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let key = (rows.to_vec(), cols.to_vec());
        if let Some(p) = memo.get(&key) {
            return p.clone();
        }
        let r0 = rows[0];
        let mut acc = Polynomial::zero(&self.ring);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(r0, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().cloned().filter(|&x| x != c).collect();
            let sub = self.minor_memo(&rows[1..], &rest, memo);
            if sub.is_zero() {
                continue;
            }
            let term = a.mul(&sub);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        memo.insert(key, acc.clone());
        acc
    }

    /// All `k x k` minors in a fixed order (row subsets outer, column
    /// subsets inner, both lexicographic), zeros included.
    pub fn minors(&self, k: usize) -> Vec<Polynomial> {
        if k == 0 {
            return vec![Polynomial::one(&self.ring)];
        }
        if k > self.rows || k > self.cols {
            return Vec::new();
        }
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        for rs in subsets(self.rows, k) {
            for cs in subsets(self.cols, k) {
                out.push(self.minor_memo(&rs, &cs, &mut memo));
            }
        }
        out
    }

    /// Rank over the fraction field by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Polynomial>> = self.rows();
        let (n, m) = (self.rows, self.cols);
        let mut prev = Polynomial::one(&self.ring);
        let mut rank = 0;
        let mut col = 0;
        while rank < n && col < m {
            let pivot = (rank..n).find(|&i| !a[i][col].is_zero());
            let Some(p) = pivot else {
                col += 1;
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..n {
                for j in col + 1..m {
                    let num = a[rank][col].mul(&a[i][j]).sub(&a[i][col].mul(&a[rank][j]));
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly");
                }
                a[i][col] = Polynomial::zero(&self.ring);
            }
            prev = a[rank][col].clone();
            rank += 1;
            col += 1;
        }
        rank
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    #[test]
    fn determinant_and_minors() {
        let r = PolyRing::new(Field::Rational, &["a", "b", "c", "d"]).unwrap();
        let m = PolyMatrix::parse(&r, &[vec!["a", "b"], vec!["c", "d"]]).unwrap();
        assert_eq!(m.det().unwrap(), Polynomial::parse(&r, "a*d - b*c").unwrap());
        assert_eq!(m.minors(1).len(), 4);
        assert_eq!(m.minors(3).len(), 0);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn char_two_symmetric_determinant_vanishes() {
        let rows = vec![vec!["0", "x1", "x2"], vec!["x1", "0", "x3"], vec!["x2", "x3", "0"]];
        let r2 = PolyRing::new(Field::Prime(2), &["x1", "x2", "x3"]).unwrap();
        assert!(PolyMatrix::parse(&r2, &rows).unwrap().det().unwrap().is_zero());
        let rq = PolyRing::new(Field::Rational, &["x1", "x2", "x3"]).unwrap();
        let d = PolyMatrix::parse(&rq, &rows).unwrap().det().unwrap();
        assert_eq!(d.to_string(), "2*x1*x2*x3");
    }

    #[test]
    fn bareiss_rank() {
        let r = PolyRing::new(Field::Rational, &["x", "y"]).unwrap();
        let m = PolyMatrix::parse(&r, &[vec!["x", "y"], vec!["x^2", "x*y"]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(PolyMatrix::zero(&r, 2, 3).rank(), 0);
    }
}
