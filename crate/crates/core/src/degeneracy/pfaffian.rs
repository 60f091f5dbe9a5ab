//! Pfaffians of alternating matrices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{subsets_of, Ideal, PolyMatrix, Polynomial};

fn check_alternating(t: &PolyMatrix) -> Result<()> {
    if !t.is_square() || !t.is_alternating() {
        return Err(Error::InvalidInput("the matrix is not alternating".into()));
    }
    if t.nrows() > 64 {
        return Err(Error::InvalidInput("Pfaffians are limited to 64 rows".into()));
    }
    Ok(())
}

fn expand(t: &PolyMatrix, idx: &[usize], memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    let ring = t.ring();
    if idx.is_empty() {
        return Polynomial::one(ring);
    }
    if idx.len() % 2 == 1 {
        return Polynomial::zero(ring);
    }
    let key = idx.iter().fold(0u64, |acc, &i| acc | (1 << i));
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let first = idx[0];
    let mut acc = Polynomial::zero(ring);
    for j in 1..idx.len() {
        let a = t.get(first, idx[j]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[j]).collect();
        let term = a.mul(&expand(t, &rest, memo));
        acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    memo.insert(key, acc.clone());
    acc
}

/// The Pfaffian, expanded along the first row.
pub fn pfaffian(t: &PolyMatrix) -> Result<Polynomial> {
    check_alternating(t)?;
    let idx: Vec<usize> = (0..t.nrows()).collect();
    Ok(expand(t, &idx, &mut HashMap::new()))
}

/// The ideal of `k`-Pfaffians of the principal `k × k` submatrices.
pub fn pfaffian_ideal(t: &PolyMatrix, k: usize) -> Result<Ideal> {
    check_alternating(t)?;
    let ring = t.ring();
    if k == 0 {
        return Ok(Ideal::unit(ring));
    }
    if k % 2 == 1 || k > t.nrows() {
        return Ok(Ideal::zero(ring));
    }
    let mut memo = HashMap::new();
    let gens: Vec<Polynomial> = subsets_of(t.nrows(), k)
        .iter()
        .map(|s| expand(t, s, &mut memo))
        .filter(|p| !p.is_zero())
        .collect();
    Ok(Ideal::new(ring, gens)?.trimmed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, PolyRing};

    #[test]
    fn small_cases() {
        let r = PolyRing::new(Field::Rational, &["a", "b"]).unwrap();
        let t = PolyMatrix::parse(&r, &[vec!["0", "a"], vec!["-a", "0"]]).unwrap();
        assert_eq!(pfaffian(&t).unwrap().to_string(), "a");
        let odd = PolyMatrix::parse(&r, &[vec!["0", "a", "b"], vec!["-a", "0", "0"], vec!["-b", "0", "0"]]).unwrap();
        assert!(pfaffian(&odd).unwrap().is_zero());
        let sym = PolyMatrix::parse(&r, &[vec!["0", "a"], vec!["a", "0"]]).unwrap();
        assert!(pfaffian(&sym).is_err());
    }

    #[test]
    fn generic_four() {
        let names = ["t12", "t13", "t14", "t23", "t24", "t34"];
        let r = PolyRing::new(Field::Rational, &names).unwrap();
        let v = |s: &str| s.to_string();
        let rows = vec![
            vec![v("0"), v("t12"), v("t13"), v("t14")],
            vec![v("-t12"), v("0"), v("t23"), v("t24")],
            vec![v("-t13"), v("-t23"), v("0"), v("t34")],
            vec![v("-t14"), v("-t24"), v("-t34"), v("0")],
        ];
        let t = PolyMatrix::parse(&r, &rows).unwrap();
        let pf = pfaffian(&t).unwrap();
        let expected = Polynomial::parse(&r, "t12*t34 - t13*t24 + t14*t23").unwrap();
        assert_eq!(pf, expected);
        assert_eq!(pf.mul(&pf), t.det().unwrap());
    }
}
