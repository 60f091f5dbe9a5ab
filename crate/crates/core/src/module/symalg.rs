use std::sync::Arc;

use super::fpmodule::FPModule;
use crate::error::Result;
use crate::ring::{Ideal, PolyRing, Polynomial};

/// `S(E) = A[T_1..T_k] / L` for a module `E` with `k` generators, where `L`
/// holds one linear form `Σ_i P[j][i]·T_i` per relation of `E`. The new
/// variables follow the base variables; `T_i` has the degree of `e_i`.
#[derive(Clone, Debug)]
pub struct SymAlgebra {
    base: Arc<PolyRing>,
    module: FPModule,
    ring: Arc<PolyRing>,
    relations: Ideal,
}

impl SymAlgebra {
    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn module(&self) -> &FPModule {
        &self.module
    }

    /// The polynomial ring `A[T]`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// The ideal `L`.
    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.module.ngens()
    }

    /// Index of `T_i` in the extended ring.
    pub fn t_index(&self, i: usize) -> usize {
        self.base.nvars() + i
    }

    pub fn t_var(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, self.t_index(i))
    }

    /// Indices of the base variables in the extended ring.
    pub fn base_indices(&self) -> Vec<usize> {
        (0..self.base.nvars()).collect()
    }

    /// A base polynomial viewed in `A[T]`.
    pub fn embed(&self, p: &Polynomial) -> Polynomial {
        let map: Vec<usize> = (0..self.base.nvars()).collect();
        p.map_vars(&self.ring, &map)
    }

    /// `Σ_i c_i T_i` for an element of `E` given on its generators.
    pub fn linear_form(&self, coeffs: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&self.embed(c).mul(&self.t_var(i)));
            }
        }
        acc
    }

    /// `I + L` for an ideal `I` of `A[T]`, the ideal of `S(E)/I` in `A[T]`.
    pub fn with_relations(&self, i: &Ideal) -> Result<Ideal> {
        i.add(&self.relations)
    }

    /// Krull dimension of `S(E)/I`.
    pub fn quotient_dimension(&self, i: &Ideal) -> Result<i64> {
        self.with_relations(i)?.krull_dimension()
    }
}

/// The symmetric algebra of `E`.
pub fn symmetric_algebra(e: &FPModule) -> Result<SymAlgebra> {
    let base = e.ring().clone();
    let suffix: Vec<(String, i32)> = (0..e.ngens())
        .map(|i| {
            let mut name = format!("T{}", i + 1);
            while base.var_index(&name).is_some() {
                name = format!("{name}_");
            }
            (name, e.gen_degrees()[i] as i32)
        })
        .collect();
    let ring = base.extend(&[], &suffix)?;
    let mut sa = SymAlgebra {
        base,
        module: e.clone(),
        ring: ring.clone(),
        relations: Ideal::zero(&ring),
    };
    let gens: Vec<Polynomial> = e
        .relations()
        .iter()
        .map(|rho| sa.linear_form(rho))
        .filter(|p| !p.is_zero())
        .collect();
    sa.relations = Ideal::new(&ring, gens)?;
    Ok(sa)
}
