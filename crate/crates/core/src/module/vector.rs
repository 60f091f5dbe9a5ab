//! Dense polynomial vectors and their conversion to module term lists.

use std::sync::Arc;

use crate::ring::{PolyRing, Polynomial, Term};

pub type Vector = Vec<Polynomial>;

pub(crate) fn to_terms(v: &[Polynomial], offset: u32) -> Vec<Term> {
    let mut out = Vec::new();
    for (c, p) in v.iter().enumerate() {
        for t in p.raw_terms() {
            out.push(Term::new(t.mono.clone(), offset + c as u32, t.coeff.clone()));
        }
    }
    out
}

/// Splits components `offset..offset + len` of a sorted term list.
pub(crate) fn from_terms(ring: &Arc<PolyRing>, terms: &[Term], offset: u32, len: usize) -> Vector {
    let mut parts: Vec<Vec<Term>> = vec![Vec::new(); len];
    for t in terms {
        if t.comp >= offset && ((t.comp - offset) as usize) < len {
            parts[(t.comp - offset) as usize].push(Term::new(t.mono.clone(), 0, t.coeff.clone()));
        }
    }
    parts
        .into_iter()
        .map(|p| Polynomial::from_sorted_terms(ring, p))
        .collect()
}

pub fn zero_vector(ring: &Arc<PolyRing>, n: usize) -> Vector {
    vec![Polynomial::zero(ring); n]
}

pub fn unit_vector(ring: &Arc<PolyRing>, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(ring, n);
    v[i] = Polynomial::one(ring);
    v
}

pub fn is_zero(v: &[Polynomial]) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn add(a: &[Polynomial], b: &[Polynomial]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub(a: &[Polynomial], b: &[Polynomial]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn scale(c: &Polynomial, v: &[Polynomial]) -> Vector {
    v.iter().map(|x| c.mul(x)).collect()
}

/// `Σ coeffs[i] · vecs[i]`.
pub fn combine(ring: &Arc<PolyRing>, n: usize, coeffs: &[Polynomial], vecs: &[Vector]) -> Vector {
    let mut acc = zero_vector(ring, n);
    for (c, v) in coeffs.iter().zip(vecs) {
        if c.is_zero() {
            continue;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a = a.add(&c.mul(x));
            }
        }
    }
    acc
}

/// Degree of a homogeneous vector whose basis vectors have the given
/// degrees; `None` for zero or inhomogeneous vectors.
pub fn vector_degree(v: &[Polynomial], basis_degrees: &[i64]) -> Option<i64> {
    let mut deg = None;
    for (p, &d) in v.iter().zip(basis_degrees) {
        if p.is_zero() {
            continue;
        }
        let e = p.homogeneous_degree()? + d;
        match deg {
            None => deg = Some(e),
            Some(x) if x != e => return None,
            _ => {}
        }
    }
    deg
}
