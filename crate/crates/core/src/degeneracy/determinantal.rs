//! Determinantal and order ideals of module maps, and their generic
//! counterparts in a symmetric algebra.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{
    dual, exterior_power, hom_module, symmetric_algebra, symmetric_basis, symmetric_power,
    wedge_basis, FPModule, HomModule, ModuleMap, SymAlgebra, Vector,
};
use crate::ring::{check_ring, Ideal, PolyMatrix, PolyRing, Polynomial};

/// `Σ_k φ[k]·v[k]`: a functional on the generators applied to an element.
pub(crate) fn pair(ring: &Arc<PolyRing>, phi: &[Polynomial], v: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (a, b) in phi.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc.add(&a.mul(b));
        }
    }
    acc
}

fn minors_ideal(mat: &PolyMatrix, k: usize) -> Result<Ideal> {
    let ring = mat.ring();
    if k == 0 {
        return Ok(Ideal::unit(ring));
    }
    if k > mat.nrows() || k > mat.ncols() {
        return Ok(Ideal::zero(ring));
    }
    let gens: Vec<Polynomial> = mat.minors(k).into_iter().filter(|p| !p.is_zero()).collect();
    Ok(Ideal::new(ring, gens)?.trimmed())
}

/// The matrix `(φ_i(f(m_j)))` with rows indexed by the generators of `N^∨`
/// and columns by the generators of `M`.
pub fn evaluation_matrix(f: &ModuleMap) -> Result<PolyMatrix> {
    let nd = dual(f.target())?;
    let ring = f.source().ring();
    let mut mat = PolyMatrix::zero(ring, nd.ngens(), f.source().ngens());
    for i in 0..nd.ngens() {
        let phi = nd.flat_generator(i);
        for (j, img) in f.images().iter().enumerate() {
            mat.set(i, j, pair(ring, phi, img));
        }
    }
    Ok(mat)
}

/// `I_{t+1}(f)`, generated by the `(t+1)`-minors of the evaluation matrix.
pub fn determinantal_ideal(f: &ModuleMap, t: usize) -> Result<Ideal> {
    minors_ideal(&evaluation_matrix(f)?, t + 1)
}

/// The order ideal `N^∨(f) = (φ(f) : φ ∈ N^∨)` of an element of `N`.
pub fn order_ideal(n: &FPModule, f: &[Polynomial]) -> Result<Ideal> {
    n.check_element(f)?;
    let ring = n.ring();
    let nd = dual(n)?;
    let gens = (0..nd.ngens())
        .map(|i| pair(ring, nd.flat_generator(i), f))
        .filter(|p| !p.is_zero())
        .collect();
    Ok(Ideal::new(ring, gens)?.trimmed())
}

/// Which construction a generic determinantal ideal comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Generic,
    Symmetric,
    Alternating,
    Order,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Generic => "generic",
            Flavor::Symmetric => "symmetric",
            Flavor::Alternating => "alternating",
            Flavor::Order => "order",
        }
    }
}

/// `E = H^∨` for the module `H` of maps, the symmetric algebra `S(E)`, the
/// matrix of `ε`-images and the ideal of its `(t+1)`-minors.
#[derive(Clone, Debug)]
pub struct GenericDeterminantal {
    pub flavor: Flavor,
    pub hom: HomModule,
    pub e_dual: HomModule,
    pub sym: SymAlgebra,
    pub epsilon: PolyMatrix,
    pub ideal: Ideal,
    pub t: usize,
}

impl GenericDeterminantal {
    /// The values `ψ_l(h)` of the generators of `E` on `h ∈ H`, i.e. the
    /// element of `E^∨` determined by `h`.
    pub fn values_of(&self, h: &[Polynomial]) -> Result<Vector> {
        self.hom.module().check_element(h)?;
        let ring = self.hom.module().ring();
        Ok((0..self.e_dual.ngens())
            .map(|l| pair(ring, self.e_dual.flat_generator(l), h))
            .collect())
    }
}

/// Builds `E`, `S(E)` and the `ε`-matrix from the per-generator values
/// `v[i][j][s] = φ_i(h_s(m_j))`.
fn assemble(
    flavor: Flavor,
    hom: HomModule,
    rows: usize,
    cols: usize,
    value: impl Fn(usize, usize, usize) -> Result<Polynomial>,
    t: usize,
) -> Result<GenericDeterminantal> {
    let e_dual = dual(hom.module())?;
    let sym = symmetric_algebra(e_dual.module())?;
    let ring = hom.module().ring().clone();
    let mut epsilon = PolyMatrix::zero(sym.ring(), rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let v: Vector = (0..hom.ngens())
                .map(|s| value(i, j, s))
                .collect::<Result<_>>()?;
            let c = if hom.ngens() == 0 {
                vec![Polynomial::zero(&ring); e_dual.ngens()]
            } else {
                e_dual.element_of_flat(&v)?
            };
            epsilon.set(i, j, sym.linear_form(&c));
        }
    }
    let ideal = minors_ideal(&epsilon, t + 1)?;
    Ok(GenericDeterminantal {
        flavor,
        hom,
        e_dual,
        sym,
        epsilon,
        ideal,
        t,
    })
}

/// The generic determinantal ideal `I_{t+1} ⊆ S(Hom(M, N)^∨)`.
pub fn generic_determinantal_ideal(m: &FPModule, n: &FPModule, t: usize) -> Result<GenericDeterminantal> {
    check_ring(m.ring(), n.ring())?;
    let hom = hom_module(m, n)?;
    let nd = dual(n)?;
    let rows = nd.ngens();
    let cols = m.ngens();
    let h = hom.clone();
    let ring = m.ring().clone();
    assemble(
        Flavor::Generic,
        hom,
        rows,
        cols,
        |i, j, s| Ok(pair(&ring, nd.flat_generator(i), &h.generator_value(s, j))),
        t,
    )
}

/// A bilinear map `M × M → L` given by its values on pairs of generators,
/// `values[a][b] ∈ L`, either symmetric or alternating.
#[derive(Clone, Debug)]
pub struct BilinearMap {
    pub source: FPModule,
    pub target: FPModule,
    pub values: Vec<Vec<Vector>>,
    pub alternating: bool,
}

impl BilinearMap {
    pub fn new(source: &FPModule, target: &FPModule, values: Vec<Vec<Vector>>, alternating: bool) -> Result<BilinearMap> {
        check_ring(source.ring(), target.ring())?;
        let g = source.ngens();
        if values.len() != g || values.iter().any(|r| r.len() != g) {
            return Err(Error::InvalidInput(format!("expected a {g}×{g} table of values")));
        }
        for a in 0..g {
            for b in 0..g {
                target.check_element(&values[a][b])?;
                let ok = if alternating {
                    let neg: Vector = values[b][a].iter().map(|p| p.neg()).collect();
                    target.elements_equal(&values[a][b], &neg)?
                        && (a != b || target.is_zero_element(&values[a][a])?)
                } else {
                    target.elements_equal(&values[a][b], &values[b][a])?
                };
                if !ok {
                    let kind = if alternating { "alternating" } else { "symmetric" };
                    return Err(Error::InvalidInput(format!(
                        "values at ({a}, {b}) are not {kind}"
                    )));
                }
            }
        }
        let map = BilinearMap {
            source: source.clone(),
            target: target.clone(),
            values,
            alternating,
        };
        // well defined on the relations of S²M or Λ²M
        map.as_hom()?;
        Ok(map)
    }

    /// From a square matrix of polynomials, as a map into `A`.
    pub fn from_matrix(source: &FPModule, mat: &PolyMatrix, alternating: bool) -> Result<BilinearMap> {
        let target = FPModule::free(source.ring(), vec![0]);
        let values = (0..mat.nrows())
            .map(|a| (0..mat.ncols()).map(|b| vec![mat.get(a, b).clone()]).collect())
            .collect();
        BilinearMap::new(source, &target, values, alternating)
    }

    pub fn flavor(&self) -> Flavor {
        if self.alternating {
            Flavor::Alternating
        } else {
            Flavor::Symmetric
        }
    }

    /// The module `Hom(S²M, L)` or `Hom(Λ²M, L)` housing this map.
    pub fn hom_space(&self) -> Result<HomModule> {
        hom_module(&square(&self.source, self.alternating)?, &self.target)
    }

    /// Coordinates of this map in `hom_space`.
    pub fn as_hom(&self) -> Result<Vector> {
        let h = self.hom_space()?;
        let basis = pair_basis(self.source.ngens(), self.alternating);
        let images: Vec<Vector> = basis.iter().map(|p| self.values[p[0]][p[1]].clone()).collect();
        h.element_of(&images)
    }

    /// The adjoint map `M → Hom(M, L)` together with the presentation of
    /// `Hom(M, L)` it lands in.
    pub fn adjoint(&self) -> Result<(HomModule, ModuleMap)> {
        let n = hom_module(&self.source, &self.target)?;
        let g = self.source.ngens();
        let mut images = Vec::with_capacity(g);
        for j in 0..g {
            let row: Vec<Vector> = (0..g).map(|i| self.values[j][i].clone()).collect();
            images.push(n.element_of(&row)?);
        }
        let map = map_with_inferred_degree(&self.source, n.module(), images)?;
        Ok((n, map))
    }
}

/// A map whose degree is read off the first nonzero image.
pub(crate) fn map_with_inferred_degree(source: &FPModule, target: &FPModule, images: Vec<Vector>) -> Result<ModuleMap> {
    let degree = images
        .iter()
        .enumerate()
        .find_map(|(j, img)| target.element_degree(img).map(|d| d - source.gen_degrees()[j]))
        .unwrap_or(0);
    ModuleMap::new(source, target, images, degree)
}

/// `S²M` or `Λ²M`.
fn square(m: &FPModule, alternating: bool) -> Result<FPModule> {
    if alternating {
        exterior_power(m, 2)
    } else {
        symmetric_power(m, 2)
    }
}

fn pair_basis(g: usize, alternating: bool) -> Vec<Vec<usize>> {
    if alternating {
        wedge_basis(g, 2)
    } else {
        symmetric_basis(g, 2)
    }
}

/// The generic symmetric or alternating determinantal ideal in
/// `S(Hom(S²M, L)^∨)` or `S(Hom(Λ²M, L)^∨)`.
pub fn bilinear_determinantal_ideal(
    m: &FPModule,
    l: &FPModule,
    t: usize,
    alternating: bool,
) -> Result<GenericDeterminantal> {
    check_ring(m.ring(), l.ring())?;
    let ring = m.ring().clone();
    let g = m.ngens();
    let hom = hom_module(&square(m, alternating)?, l)?;
    let n = hom_module(m, l)?;
    let nd = dual(n.module())?;
    let basis = pair_basis(g, alternating);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let gl = l.ngens();
    // h_s(m_a·m_b) as a vector over the generators of L
    let value_at = |s: usize, a: usize, b: usize| -> Vector {
        if alternating {
            if a == b {
                return vec![Polynomial::zero(&ring); gl];
            }
            let (key, neg) = if a < b { (vec![a, b], false) } else { (vec![b, a], true) };
            let v = hom.generator_value(s, index[&key]);
            if neg {
                v.iter().map(|p| p.neg()).collect()
            } else {
                v
            }
        } else {
            let key = if a <= b { vec![a, b] } else { vec![b, a] };
            hom.generator_value(s, index[&key])
        }
    };
    // coordinates in Hom(M, L) of m_i ↦ h_s(m_j·m_i)
    let mut adj: Vec<Vec<Vector>> = Vec::with_capacity(hom.ngens());
    for s in 0..hom.ngens() {
        let mut per_j = Vec::with_capacity(g);
        for j in 0..g {
            let images: Vec<Vector> = (0..g).map(|i| value_at(s, j, i)).collect();
            per_j.push(n.element_of(&images)?);
        }
        adj.push(per_j);
    }
    let flavor = if alternating { Flavor::Alternating } else { Flavor::Symmetric };
    assemble(
        flavor,
        hom,
        nd.ngens(),
        g,
        |i, j, s| {
            Ok(pair(&ring, nd.flat_generator(i), &adj[s][j]))
        },
        t,
    )
}

/// `I_{t+1}` of the adjoint `M → Hom(M, L)` of a bilinear map.
pub fn bilinear_ideal(f: &BilinearMap, t: usize) -> Result<Ideal> {
    let (_, adj) = f.adjoint()?;
    determinantal_ideal(&adj, t)
}
