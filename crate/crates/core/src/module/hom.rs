//! `Hom(M, N)` with explicit realizations of its generators, duals and the
//! natural map to the double dual.

use std::sync::Arc;

use super::fpmodule::{FPModule, ModuleMap};
use super::submodule::Submodule;
use super::vector::{self, Vector};
use crate::error::{Error, Result};
use crate::ring::{check_ring, PolyRing, Polynomial};

/// A presentation of `Hom(M, N)`.
///
/// A homomorphism is stored as a vector in `A^{g_M·g_N}` whose entry
/// `i·g_N + k` is the coefficient of `n_k` in the image of `m_i`. The
/// generators of the presentation are such vectors, kept in `flat_gens`.
#[derive(Clone, Debug)]
pub struct HomModule {
    module: FPModule,
    source: FPModule,
    target: FPModule,
    flat_gens: Vec<Vector>,
    ambient: Submodule,
}

fn ambient_degrees(m: &FPModule, n: &FPModule) -> Vec<i64> {
    let mut d = Vec::with_capacity(m.ngens() * n.ngens());
    for a in m.gen_degrees() {
        for b in n.gen_degrees() {
            d.push(b - a);
        }
    }
    d
}

/// Relations of `N` placed in each of the `g_M` blocks.
fn target_relation_blocks(m: &FPModule, n: &FPModule) -> Vec<Vector> {
    let ring = m.ring();
    let (gm, gn) = (m.ngens(), n.ngens());
    let mut out = Vec::new();
    for i in 0..gm {
        for s in n.relations() {
            let mut v = vector::zero_vector(ring, gm * gn);
            for (k, p) in s.iter().enumerate() {
                v[i * gn + k] = p.clone();
            }
            out.push(v);
        }
    }
    out
}

/// Vectors of `A^{g_M g_N}` that define homomorphisms `M → N`.
fn well_defined_maps(m: &FPModule, n: &FPModule) -> Result<Vec<Vector>> {
    let ring = m.ring();
    let (gm, gn, rm) = (m.ngens(), n.ngens(), m.nrels());
    let dim = gm * gn;
    if rm == 0 {
        return Ok((0..dim).map(|c| vector::unit_vector(ring, dim, c)).collect());
    }
    // image of ε_{ik} in N^{r_M}: the j-th block is ρ_{ji}·n_k
    let mut cols: Vec<Vector> = Vec::new();
    for i in 0..gm {
        for k in 0..gn {
            let mut v = vector::zero_vector(ring, rm * gn);
            for (j, rho) in m.relations().iter().enumerate() {
                v[j * gn + k] = rho[i].clone();
            }
            cols.push(v);
        }
    }
    for j in 0..rm {
        for s in n.relations() {
            let mut v = vector::zero_vector(ring, rm * gn);
            for (k, p) in s.iter().enumerate() {
                v[j * gn + k] = p.clone();
            }
            cols.push(v);
        }
    }
    let mut degrees = Vec::with_capacity(rm * gn);
    for c in m.rel_degrees() {
        for b in n.gen_degrees() {
            degrees.push(b - c);
        }
    }
    let syz = Submodule::new(ring, degrees, cols)?.syzygies()?;
    Ok(syz
        .into_iter()
        .map(|s| s[..dim].to_vec())
        .filter(|s| !vector::is_zero(s))
        .collect())
}

/// Drops generators lying in the span of the fixed part and the earlier
/// kept generators, processing by increasing degree.
pub(crate) fn minimize(
    ring: &Arc<PolyRing>,
    degrees: &[i64],
    fixed: &[Vector],
    candidates: Vec<Vector>,
) -> Result<Vec<Vector>> {
    let mut cands: Vec<(i64, usize, Vector)> = candidates
        .into_iter()
        .enumerate()
        .map(|(i, v)| (vector::vector_degree(&v, degrees).unwrap_or(0), i, v))
        .collect();
    cands.sort_by_key(|c| (c.0, c.1));
    let mut kept: Vec<Vector> = Vec::new();
    let mut span = Submodule::new(ring, degrees.to_vec(), fixed.to_vec())?;
    for (_, _, c) in cands {
        if vector::is_zero(&c) || span.contains(&c)? {
            continue;
        }
        kept.push(c);
        let mut gens = fixed.to_vec();
        gens.extend(kept.iter().cloned());
        span = Submodule::new(ring, degrees.to_vec(), gens)?;
    }
    Ok(kept)
}

impl HomModule {
    pub fn module(&self) -> &FPModule {
        &self.module
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn ngens(&self) -> usize {
        self.flat_gens.len()
    }

    /// Generator `k` as a vector in `A^{g_M g_N}`.
    pub fn flat_generator(&self, k: usize) -> &Vector {
        &self.flat_gens[k]
    }

    pub fn flat_generators(&self) -> &[Vector] {
        &self.flat_gens
    }

    /// Image of `m_i` under generator `k`, on the generators of `N`.
    pub fn generator_value(&self, k: usize, i: usize) -> Vector {
        let gn = self.target.ngens();
        self.flat_gens[k][i * gn..(i + 1) * gn].to_vec()
    }

    /// Generator `k` as a map `M → N`.
    pub fn realization(&self, k: usize) -> Result<ModuleMap> {
        let images = (0..self.source.ngens())
            .map(|i| self.generator_value(k, i))
            .collect();
        let deg = self.module.gen_degrees()[k];
        ModuleMap::new(&self.source, &self.target, images, deg)
    }

    /// The map `M → N` represented by an element of `Hom(M, N)`.
    pub fn flatten(&self, h: &[Polynomial]) -> Result<Vector> {
        self.module.check_element(h)?;
        let dim = self.source.ngens() * self.target.ngens();
        Ok(vector::combine(self.module.ring(), dim, h, &self.flat_gens))
    }

    /// `h(m)` for `h ∈ Hom(M, N)` and `m ∈ M`.
    pub fn evaluate(&self, h: &[Polynomial], m: &[Polynomial]) -> Result<Vector> {
        self.source.check_element(m)?;
        let flat = self.flatten(h)?;
        let gn = self.target.ngens();
        let ring = self.module.ring();
        let mut out = vector::zero_vector(ring, gn);
        for (i, c) in m.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 0..gn {
                out[k] = out[k].add(&c.mul(&flat[i * gn + k]));
            }
        }
        Ok(out)
    }

    /// Coordinates on the generators of a map given by the images of the
    /// generators of `M`; fails when the map is not well defined.
    pub fn element_of(&self, images: &[Vector]) -> Result<Vector> {
        if images.len() != self.source.ngens() {
            return Err(Error::InvalidInput("wrong number of generator images".into()));
        }
        let mut flat = Vec::new();
        for img in images {
            self.target.check_element(img)?;
            flat.extend(img.iter().cloned());
        }
        self.element_of_flat(&flat)
    }

    pub fn element_of_flat(&self, flat: &[Polynomial]) -> Result<Vector> {
        let k = self.flat_gens.len();
        match self.ambient.lift(flat)? {
            Some(c) => Ok(c[..k].to_vec()),
            None => Err(Error::NotWellDefined(
                "the given images do not define a homomorphism".into(),
            )),
        }
    }

    /// Whether two flat representatives define the same homomorphism.
    pub fn same_map(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
        let blocks = target_relation_blocks(&self.source, &self.target);
        let sub = Submodule::new(
            self.module.ring(),
            ambient_degrees(&self.source, &self.target),
            blocks,
        )?;
        sub.contains(&vector::sub(a, b))
    }

    /// The submodule of `A^{g_M g_N}` spanned by the generators and the
    /// relations of `N` in every block.
    pub fn ambient(&self) -> &Submodule {
        &self.ambient
    }
}

/// A presentation of `Hom(M, N)` together with its realization table.
pub fn hom_module(m: &FPModule, n: &FPModule) -> Result<HomModule> {
    check_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    let degrees = ambient_degrees(m, n);
    let blocks = target_relation_blocks(m, n);
    let candidates = well_defined_maps(m, n)?;
    let kept = minimize(ring, &degrees, &blocks, candidates)?;
    let mut ambient_gens = kept.clone();
    ambient_gens.extend(blocks.iter().cloned());
    let ambient = Submodule::new(ring, degrees.clone(), ambient_gens)?;
    let gen_degrees: Vec<i64> = kept
        .iter()
        .map(|v| vector::vector_degree(v, &degrees).unwrap_or(0))
        .collect();
    let k = kept.len();
    let rels: Vec<Vector> = if blocks.is_empty() && k > 0 {
        // relations among the kept generators only
        Submodule::new(ring, degrees.clone(), kept.clone())?.syzygies()?
    } else if k > 0 {
        ambient
            .syzygies()?
            .into_iter()
            .map(|s| s[..k].to_vec())
            .collect()
    } else {
        Vec::new()
    };
    let module = FPModule::from_relations(ring, gen_degrees, rels)?;
    Ok(HomModule {
        module,
        source: m.clone(),
        target: n.clone(),
        flat_gens: kept,
        ambient,
    })
}

/// `M^∨ = Hom(M, A)`; generator `k` is the vector of its values on the
/// generators of `M`.
pub fn dual(m: &FPModule) -> Result<HomModule> {
    hom_module(m, &FPModule::free(m.ring(), vec![0]))
}

/// `M^∨∨` with the natural map `M → M^∨∨`.
#[derive(Clone, Debug)]
pub struct DoubleDual {
    pub dual: HomModule,
    pub double: HomModule,
    pub natural: ModuleMap,
}

pub fn double_dual(m: &FPModule) -> Result<DoubleDual> {
    let d = dual(m)?;
    let dd = dual(d.module())?;
    let nd = d.ngens();
    let mut images = Vec::with_capacity(m.ngens());
    for i in 0..m.ngens() {
        // evaluation at m_i, on the generators φ_k of M^∨
        let ev: Vector = (0..nd).map(|k| d.flat_generator(k)[i].clone()).collect();
        images.push(dd.element_of_flat(&ev)?);
    }
    let natural = ModuleMap::new(m, dd.module(), images, 0)?;
    Ok(DoubleDual {
        dual: d,
        double: dd,
        natural,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, vars).unwrap()
    }

    #[test]
    fn hom_from_free_rank_one() {
        let r = ring(&["x", "y"]);
        let n = FPModule::cyclic(&r, &[Polynomial::parse(&r, "x").unwrap()]).unwrap();
        let h = hom_module(&FPModule::free_rank(&r, 1), &n).unwrap();
        assert_eq!(h.ngens(), 1);
        assert_eq!(h.module().nrels(), 1);
        let v = h.evaluate(&[Polynomial::one(&r)], &[Polynomial::one(&r)]).unwrap();
        assert!(n.elements_equal(&v, &[Polynomial::one(&r)]).unwrap());
    }

    #[test]
    fn dual_of_torsion_vanishes() {
        let r = ring(&["x"]);
        let t = FPModule::cyclic(&r, &[Polynomial::parse(&r, "x").unwrap()]).unwrap();
        assert_eq!(dual(&t).unwrap().ngens(), 0);
        let h = hom_module(&t, &t).unwrap();
        assert_eq!(h.ngens(), 1);
        let rel = &h.module().relations()[0][0];
        assert_eq!(rel.make_monic(), Polynomial::parse(&r, "x").unwrap());
    }

    #[test]
    fn double_dual_of_free_is_identity() {
        let r = ring(&["x", "y"]);
        let f = FPModule::free(&r, vec![0, 1]);
        let dd = double_dual(&f).unwrap();
        assert_eq!(dd.double.module().ngens(), 2);
        let units: Vec<usize> = dd
            .natural
            .images()
            .iter()
            .map(|v| {
                assert_eq!(v.iter().filter(|p| !p.is_zero()).count(), 1);
                v.iter().position(|p| p.is_one()).unwrap()
            })
            .collect();
        assert_ne!(units[0], units[1]);
    }
}
