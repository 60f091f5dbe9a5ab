use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u16; 16]>;

/// An exponent vector with its cached total (unweighted) degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: Exps,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let exps: Exps = exps
            .iter()
            .map(|&e| u16::try_from(e).expect("exponent overflow"))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = u16::try_from(e).expect("exponent overflow");
        m.deg = e;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn weighted_degree(&self, weights: &[i32]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            deg: other.deg - self.deg,
            exps,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .map(|&e| u16::try_from(e as u32 * k).expect("exponent overflow"))
            .collect();
        Monomial {
            deg: self.deg * k,
            exps,
        }
    }

    /// Bitmask of the variables occurring in the monomial (first 64 only).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << i))
    }

}

/// Monomial orders on exponent vectors. `Block(k)` compares the first `k`
/// variables by graded reverse lexicographic order and breaks ties with
/// grevlex on the remaining variables, which eliminates the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block(usize),
}

fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..a.exps.len()).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.exps.len());
                grevlex_range(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex_range(&a.exps[k..], &b.exps[k..]))
            }
        }
    }

    /// True when the order refines total degree, so reduction never raises
    /// the degree of a polynomial.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

/// Ordering of module terms `(monomial, component)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Position over term: lower component index dominates.
    Pot,
    /// Term over position.
    Top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub mono: MonomialOrder,
    pub module: ModuleOrder,
}

impl TermOrder {
    pub fn new(mono: MonomialOrder, module: ModuleOrder) -> Self {
        TermOrder { mono, module }
    }

    #[inline]
    pub fn cmp(&self, ma: &Monomial, ca: u32, mb: &Monomial, cb: u32) -> Ordering {
        match self.module {
            ModuleOrder::Pot => cb.cmp(&ca).then_with(|| self.mono.cmp(ma, mb)),
            ModuleOrder::Top => self.mono.cmp(ma, mb).then_with(|| cb.cmp(&ca)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::GrevLex;
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_is_lexicographic() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_prefix() {
        let o = MonomialOrder::Block(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 1]), &m(&[0, 0, 3])), Ordering::Less);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 1, 1]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[2, 2, 1]));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), m(&[1, 0, 1]));
        assert!(!a.is_coprime(&b));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
    }
}
