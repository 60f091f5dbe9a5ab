//! The Frobenius functor on presented modules, and finite-range checks of
//! p-ample and ample pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{
    double_dual, symmetric_basis, symmetric_power, symmetric_product, FPModule, ModuleMap, Submodule, Vector,
};
use crate::ring::Polynomial;

fn frobenius_q(m: &FPModule, a: u32) -> Result<u32> {
    let p = m.ring().field().characteristic();
    if p == 0 {
        return Err(Error::Precondition("the Frobenius functor needs a prime characteristic".into()));
    }
    if a == 0 {
        return Err(Error::Precondition("the Frobenius exponent must be positive".into()));
    }
    (p as u64)
        .checked_pow(a)
        .filter(|&q| q <= u32::MAX as u64)
        .map(|q| q as u32)
        .ok_or_else(|| Error::InvalidInput(format!("{p}^{a} is too large")))
}

/// `F^a(v)`: every coordinate raised to the `p^a` power.
pub fn frobenius_element(v: &[Polynomial], q: u32) -> Vector {
    v.iter().map(|p| p.inflate(q)).collect()
}

/// `F^a(M)`: the presentation with every entry raised to the `p^a` power
/// and all degrees multiplied by `p^a`.
pub fn frobenius_module(m: &FPModule, a: u32) -> Result<FPModule> {
    let q = frobenius_q(m, a)?;
    let gd = m.gen_degrees().iter().map(|d| d * q as i64).collect();
    let rd = m.rel_degrees().iter().map(|d| d * q as i64).collect();
    let rels = m.relations().iter().map(|r| frobenius_element(r, q)).collect();
    FPModule::new(m.ring(), gd, rd, rels)
}

/// `F^a(f)`.
pub fn frobenius_map(f: &ModuleMap, a: u32) -> Result<ModuleMap> {
    let q = frobenius_q(f.source(), a)?;
    let src = frobenius_module(f.source(), a)?;
    let tgt = frobenius_module(f.target(), a)?;
    let images = f.images().iter().map(|v| frobenius_element(v, q)).collect();
    ModuleMap::new(&src, &tgt, images, f.degree() * q as i64)
}

/// Whether `v` lies in `m·X` for the irrelevant ideal `m`.
pub fn in_max_times(x: &FPModule, v: &[Polynomial]) -> Result<bool> {
    x.check_element(v)?;
    let ring = x.ring();
    let mut gens: Vec<Vector> = x.relations().to_vec();
    for var in ring.positive_degree_vars() {
        let xv = Polynomial::var(ring, var);
        for l in 0..x.ngens() {
            let mut e = x.zero_element();
            e[l] = xv.clone();
            gens.push(e);
        }
    }
    Submodule::new(ring, x.gen_degrees().to_vec(), gens)?.contains(v)
}

/// Whether the image of each element under `M → M^∨∨` lies in
/// `m·M^∨∨`.
fn images_in_max_times(m: &FPModule, elements: &[Vector]) -> Result<bool> {
    let dd = double_dual(m)?;
    for v in elements {
        let img = dd.natural.apply(v)?;
        if !in_max_times(dd.double.module(), &img)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "summary", rename_all = "kebab-case")]
pub enum Summary {
    HoldsOnRange,
    FailsAt { first: u32 },
}

/// Outcome of testing a pair at each exponent of a finite range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeVerdict {
    /// `(exponent, holds)` for every tested exponent.
    pub per_exponent: Vec<(u32, bool)>,
    pub summary: Summary,
}

impl RangeVerdict {
    fn from_results(per_exponent: Vec<(u32, bool)>) -> RangeVerdict {
        let summary = match per_exponent.iter().find(|(_, ok)| !ok) {
            Some(&(a, _)) => Summary::FailsAt { first: a },
            None => Summary::HoldsOnRange,
        };
        RangeVerdict { per_exponent, summary }
    }

    pub fn holds(&self) -> bool {
        self.summary == Summary::HoldsOnRange
    }

    pub fn holds_at(&self, a: u32) -> Option<bool> {
        self.per_exponent.iter().find(|(b, _)| *b == a).map(|(_, ok)| *ok)
    }
}

/// Tests `F^a(M') → F^a(M)^××` landing in `m·F^a(M)^××` for `a = 1..=a_max`.
pub fn p_ample_check(mprime: &[Vector], m: &FPModule, a_max: u32) -> Result<RangeVerdict> {
    for v in mprime {
        m.check_element(v)?;
    }
    frobenius_q(m, 1)?;
    let mut out = Vec::with_capacity(a_max as usize);
    for a in 1..=a_max {
        out.push((a, p_ample_at(mprime, m, a)?));
    }
    Ok(RangeVerdict::from_results(out))
}

/// The check of [`p_ample_check`] at a single exponent.
pub fn p_ample_at(mprime: &[Vector], m: &FPModule, a: u32) -> Result<bool> {
    let q = frobenius_q(m, a)?;
    let fm = frobenius_module(m, a)?;
    let images: Vec<Vector> = mprime.iter().map(|v| frobenius_element(v, q)).collect();
    images_in_max_times(&fm, &images)
}

/// Generators of `S^n M'` inside `S^n M`.
pub fn symmetric_power_elements(mprime: &[Vector], m: &FPModule, n: usize) -> Vec<Vector> {
    let ring = m.ring();
    if n == 0 {
        return vec![vec![Polynomial::one(ring)]];
    }
    symmetric_basis(mprime.len(), n)
        .iter()
        .map(|j| {
            let vs: Vec<Vector> = j.iter().map(|&i| mprime[i].clone()).collect();
            symmetric_product(ring, m.ngens(), &vs)
        })
        .collect()
}

/// Tests `S^n M' → (S^n M)^∨∨` landing in `m·(S^n M)^∨∨` for `n = 1..=n_max`.
pub fn ample_check(mprime: &[Vector], m: &FPModule, n_max: u32) -> Result<RangeVerdict> {
    for v in mprime {
        m.check_element(v)?;
    }
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        out.push((n, ample_at(mprime, m, n)?));
    }
    Ok(RangeVerdict::from_results(out))
}

/// The check of [`ample_check`] at a single `n`.
pub fn ample_at(mprime: &[Vector], m: &FPModule, n: u32) -> Result<bool> {
    let sm = symmetric_power(m, n as usize)?;
    let elements = symmetric_power_elements(mprime, m, n as usize);
    images_in_max_times(&sm, &elements)
}
