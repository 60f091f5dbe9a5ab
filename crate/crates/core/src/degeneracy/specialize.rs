//! The algebra maps `S(E) → A` and `S(E) → A[Y]` induced by linear forms on
//! `E`, and the shift that makes the latter homogeneous.

use std::sync::Arc;

use super::determinantal::pair;
use crate::error::{Error, Result};
use crate::module::{dual, Submodule, SymAlgebra, Vector};
use crate::ring::{check_ring, Ideal, MonomialOrder, PolyRing, Polynomial};

/// Checks that `values` (one per generator of `E`) kill every relation.
fn check_linear_form(sym: &SymAlgebra, values: &[Polynomial]) -> Result<()> {
    let e = sym.module();
    if values.len() != e.ngens() {
        return Err(Error::InvalidInput(format!(
            "{} values for a module with {} generators",
            values.len(),
            e.ngens()
        )));
    }
    for v in values {
        check_ring(v.ring(), sym.base())?;
    }
    for (j, rho) in e.relations().iter().enumerate() {
        if !pair(sym.base(), rho, values).is_zero() {
            return Err(Error::NotWellDefined(format!(
                "the linear form does not vanish on relation {j}"
            )));
        }
    }
    Ok(())
}

/// `φ_f(I)`: substitutes `T_l ↦ f(e_l)` into the generators of `I ⊆ A[T]`.
pub fn phi_specialize(sym: &SymAlgebra, values: &[Polynomial], i: &Ideal) -> Result<Ideal> {
    check_linear_form(sym, values)?;
    check_ring(i.ring(), sym.ring())?;
    let base = sym.base();
    let mut images: Vec<Polynomial> = (0..base.nvars()).map(|v| Polynomial::var(base, v)).collect();
    images.extend(values.iter().cloned());
    Ok(i.substitute(base, &images)?.trimmed())
}

/// The map `e_l T ↦ f(e_l) + Σ_i f_i(e_l)·Y_i` into `A[Y_1..Y_k]` and the
/// image `J` of an ideal of `A[T]`.
#[derive(Clone, Debug)]
pub struct LiftedPhi {
    /// `A[Y]` with the `Y` variables first and a block order eliminating them.
    pub ring: Arc<PolyRing>,
    pub k: usize,
    pub values: Vector,
    pub duals: Vec<Vector>,
    /// Image of `T_l` for each generator `e_l` of `E`.
    pub images: Vec<Polynomial>,
    pub ideal: Ideal,
    base: Arc<PolyRing>,
    source: Ideal,
}

fn y_ring(base: &Arc<PolyRing>, k: usize) -> Result<Arc<PolyRing>> {
    let prefix: Vec<(String, i32)> = (0..k)
        .map(|i| {
            let mut name = format!("Y{}", i + 1);
            while base.var_index(&name).is_some() {
                name = format!("{name}_");
            }
            (name, 1)
        })
        .collect();
    Ok(base.extend(&prefix, &[])?.with_order(MonomialOrder::Block(k)))
}

/// Lifts `φ_f` along the forms `f_1..f_k`, which must generate `E^∨`.
pub fn lift_phi(sym: &SymAlgebra, values: &[Polynomial], duals: &[Vector], i: &Ideal) -> Result<LiftedPhi> {
    check_linear_form(sym, values)?;
    check_ring(i.ring(), sym.ring())?;
    for d in duals {
        check_linear_form(sym, d)?;
    }
    let base = sym.base().clone();
    let e = sym.module();
    // every generator of E^∨ must be a combination of the f_i
    let span = Submodule::new(&base, vec![0; e.ngens()], duals.to_vec())?;
    let ed = dual(e)?;
    for (l, g) in ed.flat_generators().iter().enumerate() {
        if !span.contains(g)? {
            return Err(Error::Hypothesis(format!(
                "the given forms do not generate the dual: generator {l} is missing"
            )));
        }
    }
    let k = duals.len();
    let ring = y_ring(&base, k)?;
    let shift: Vec<usize> = (0..base.nvars()).map(|v| v + k).collect();
    let images: Vec<Polynomial> = (0..e.ngens())
        .map(|l| {
            let mut p = values[l].map_vars(&ring, &shift);
            for (y, d) in duals.iter().enumerate() {
                p = p.add(&d[l].map_vars(&ring, &shift).mul(&Polynomial::var(&ring, y)));
            }
            p
        })
        .collect();
    let mut subst: Vec<Polynomial> = (0..base.nvars()).map(|v| Polynomial::var(&ring, v + k)).collect();
    subst.extend(images.iter().cloned());
    let ideal = i.substitute(&ring, &subst)?;
    Ok(LiftedPhi {
        ring,
        k,
        values: values.to_vec(),
        duals: duals.to_vec(),
        images,
        ideal,
        base,
        source: i.clone(),
    })
}

impl LiftedPhi {
    /// `Y ↦ 0` applied to `J`.
    pub fn at_zero(&self) -> Result<Ideal> {
        let mut subst: Vec<Polynomial> = vec![Polynomial::zero(&self.base); self.k];
        subst.extend((0..self.base.nvars()).map(|v| Polynomial::var(&self.base, v)));
        Ok(self.ideal.substitute(&self.base, &subst)?.trimmed())
    }

    /// Whether `Y ↦ 0` recovers `φ_f(I)`.
    pub fn check_specialization(&self, sym: &SymAlgebra) -> Result<bool> {
        let direct = phi_specialize(sym, &self.values, &self.source)?;
        self.at_zero()?.equals(&direct)
    }

    /// Indices of the `Y` variables.
    pub fn y_indices(&self) -> Vec<usize> {
        (0..self.k).collect()
    }
}

/// Degree of a polynomial in the first `k` variables, when all its terms
/// agree.
pub fn y_degree(p: &Polynomial, k: usize) -> Option<u32> {
    let mut out = None;
    for (m, _) in p.terms() {
        let d: u32 = m.exponents()[..k].iter().map(|&e| e as u32).sum();
        match out {
            None => out = Some(d),
            Some(o) if o != d => return None,
            _ => {}
        }
    }
    out
}

/// `ψ∘φ` for `ψ: Y_i ↦ Y_i - t_i`, where `f = Σ t_i f_i` with `t_i ∈ m`.
#[derive(Clone, Debug)]
pub struct Homogenized {
    pub shifts: Vec<Polynomial>,
    pub images: Vec<Polynomial>,
}

/// Finds `f = Σ t_i f_i` with every `t_i` in the irrelevant ideal and
/// returns the shifted map. Every image is checked to have `Y`-degree one.
pub fn psi_homogenize(lift: &LiftedPhi) -> Result<Homogenized> {
    let base = &lift.base;
    let n = lift.values.len();
    let xs = base.positive_degree_vars();
    let mut gens = Vec::with_capacity(xs.len() * lift.k);
    for &x in &xs {
        let xv = Polynomial::var(base, x);
        for d in &lift.duals {
            gens.push(d.iter().map(|p| p.mul(&xv)).collect::<Vector>());
        }
    }
    let shifts: Vec<Polynomial> = if lift.values.iter().all(|p| p.is_zero()) {
        vec![Polynomial::zero(base); lift.k]
    } else {
        let sub = Submodule::new(base, vec![0; n], gens)?;
        let c = sub.lift(&lift.values)?.ok_or_else(|| {
            Error::Hypothesis("f is not in m·E^∨".into())
        })?;
        (0..lift.k)
            .map(|i| {
                let mut t = Polynomial::zero(base);
                for (a, &x) in xs.iter().enumerate() {
                    let coeff = &c[a * lift.k + i];
                    if !coeff.is_zero() {
                        t = t.add(&coeff.mul(&Polynomial::var(base, x)));
                    }
                }
                t
            })
            .collect()
    };
    let ring = &lift.ring;
    let k = lift.k;
    let shift: Vec<usize> = (0..base.nvars()).map(|v| v + k).collect();
    let mut subst: Vec<Polynomial> = (0..k)
        .map(|i| Polynomial::var(ring, i).sub(&shifts[i].map_vars(ring, &shift)))
        .collect();
    subst.extend((0..base.nvars()).map(|v| Polynomial::var(ring, v + k)));
    let images: Vec<Polynomial> = lift.images.iter().map(|p| p.substitute(ring, &subst)).collect();
    for (l, p) in images.iter().enumerate() {
        if !p.is_zero() && y_degree(p, k) != Some(1) {
            return Err(Error::Internal(format!(
                "image of generator {l} is not of degree one in Y: {p}"
            )));
        }
    }
    Ok(Homogenized { shifts, images })
}
