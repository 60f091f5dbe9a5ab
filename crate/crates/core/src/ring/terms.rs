//! Sorted sparse term lists shared by polynomials and free-module vectors.

use std::cmp::Ordering;

use super::coeff::{Coeff, Field};
use super::monomial::{Monomial, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: Coeff,
}

impl Term {
    pub fn new(mono: Monomial, comp: u32, coeff: Coeff) -> Self {
        Term { mono, comp, coeff }
    }
}

#[inline]
pub(crate) fn cmp_terms(ord: &TermOrder, a: &Term, b: &Term) -> Ordering {
    ord.cmp(&a.mono, a.comp, &b.mono, b.comp)
}

/// Sorts descending and merges equal terms, dropping zeros.
pub(crate) fn normalize(field: &Field, ord: &TermOrder, mut terms: Vec<Term>) -> Vec<Term> {
    terms.retain(|t| !t.coeff.is_zero());
    terms.sort_by(|a, b| cmp_terms(ord, b, a));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(last) = out.last_mut() {
            if last.comp == t.comp && last.mono == t.mono {
                last.coeff = field.add(&last.coeff, &t.coeff);
                if last.coeff.is_zero() {
                    out.pop();
                }
                continue;
            }
        }
        out.push(t);
    }
    out
}

/// `a + c * m * b` for sorted inputs; `m` shifts monomials only.
pub(crate) fn axpy(
    field: &Field,
    ord: &TermOrder,
    a: &[Term],
    c: &Coeff,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<Term> = None;
    while i < a.len() || j < b.len() {
        if pending.is_none() && j < b.len() {
            let t = &b[j];
            pending = Some(Term {
                mono: t.mono.mul(m),
                comp: t.comp,
                coeff: field.mul(c, &t.coeff),
            });
        }
        match (a.get(i), pending.as_ref()) {
            (Some(x), Some(y)) => match cmp_terms(ord, x, y) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(&x.coeff, &y.coeff);
                    if !s.is_zero() {
                        out.push(Term {
                            mono: x.mono.clone(),
                            comp: x.comp,
                            coeff: s,
                        });
                    }
                    pending = None;
                    i += 1;
                    j += 1;
                }
            },
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

pub(crate) fn add(field: &Field, ord: &TermOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    let nv = a
        .first()
        .or(b.first())
        .map(|t| t.mono.nvars())
        .unwrap_or(0);
    axpy(field, ord, a, &field.one(), &Monomial::one(nv), b)
}

pub(crate) fn sub(field: &Field, ord: &TermOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    let nv = a
        .first()
        .or(b.first())
        .map(|t| t.mono.nvars())
        .unwrap_or(0);
    axpy(field, ord, a, &field.neg(&field.one()), &Monomial::one(nv), b)
}

pub(crate) fn scale(field: &Field, a: &[Term], c: &Coeff) -> Vec<Term> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter()
        .map(|t| Term {
            mono: t.mono.clone(),
            comp: t.comp,
            coeff: field.mul(&t.coeff, c),
        })
        .collect()
}

/// Multiplies a term list by a polynomial given as a term list with `comp = 0`.
pub(crate) fn mul_poly(field: &Field, ord: &TermOrder, a: &[Term], p: &[Term]) -> Vec<Term> {
    let mut acc: Vec<Term> = Vec::new();
    for t in p {
        acc = axpy(field, ord, &acc, &t.coeff, &t.mono, a);
    }
    acc
}

pub(crate) fn make_monic(field: &Field, a: &mut [Term]) {
    if let Some(first) = a.first() {
        if !first.coeff.is_one() {
            let inv = field.inv(&first.coeff);
            for t in a.iter_mut() {
                t.coeff = field.mul(&t.coeff, &inv);
            }
        }
    }
}
