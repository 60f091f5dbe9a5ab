//! Tensor products, exterior and symmetric powers, Fitting ideals and rank.

use std::collections::HashMap;

use super::fpmodule::{FPModule, ModuleMap};
use super::vector::{self, Vector};
use crate::error::{Error, Result};
use crate::ring::{check_ring, Ideal, Polynomial};

/// `M ⊗ N`; generator `m_i ⊗ n_k` has index `i·g_N + k`.
pub fn tensor(m: &FPModule, n: &FPModule) -> Result<FPModule> {
    check_ring(m.ring(), n.ring())?;
    let ring = m.ring();
    let (gm, gn) = (m.ngens(), n.ngens());
    let mut gd = Vec::with_capacity(gm * gn);
    for a in m.gen_degrees() {
        for b in n.gen_degrees() {
            gd.push(a + b);
        }
    }
    let mut rels = Vec::new();
    let mut rd = Vec::new();
    for (j, rho) in m.relations().iter().enumerate() {
        for k in 0..gn {
            let mut v = vector::zero_vector(ring, gm * gn);
            for i in 0..gm {
                v[i * gn + k] = rho[i].clone();
            }
            rels.push(v);
            rd.push(m.rel_degrees()[j] + n.gen_degrees()[k]);
        }
    }
    for (l, sigma) in n.relations().iter().enumerate() {
        for i in 0..gm {
            let mut v = vector::zero_vector(ring, gm * gn);
            for k in 0..gn {
                v[i * gn + k] = sigma[k].clone();
            }
            rels.push(v);
            rd.push(n.rel_degrees()[l] + m.gen_degrees()[i]);
        }
    }
    FPModule::new(ring, gd, rd, rels)
}

/// `f ⊗ g`.
pub fn tensor_maps(f: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    let src = tensor(f.source(), g.source())?;
    let tgt = tensor(f.target(), g.target())?;
    let ring = src.ring().clone();
    let (gn2, gt2) = (g.source().ngens(), g.target().ngens());
    let mut images = Vec::new();
    for fi in f.images() {
        for gk in g.images() {
            let mut v = vector::zero_vector(&ring, tgt.ngens());
            for (a, x) in fi.iter().enumerate() {
                for (b, y) in gk.iter().enumerate() {
                    if !x.is_zero() && !y.is_zero() {
                        v[a * gt2 + b] = v[a * gt2 + b].add(&x.mul(y));
                    }
                }
            }
            images.push(v);
        }
    }
    debug_assert_eq!(images.len(), f.source().ngens() * gn2);
    ModuleMap::new(&src, &tgt, images, f.degree() + g.degree())
}

/// `k`-subsets of `0..n`, lexicographic; the basis of `Λ^k` of a module
/// with `n` generators.
pub fn wedge_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::ring::subsets_of(n, k)
}

/// Multisets of size `k` from `0..n` as sorted index lists, lexicographic;
/// the basis of `S^k` of a module with `n` generators.
pub fn symmetric_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn index_of(basis: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect()
}

/// Inserts `i` into the sorted set `rest`; returns the sorted set and the
/// sign of the sorting permutation, or `None` when `i ∈ rest`.
fn wedge_insert(i: usize, rest: &[usize]) -> Option<(Vec<usize>, bool)> {
    if rest.contains(&i) {
        return None;
    }
    let pos = rest.iter().filter(|&&x| x < i).count();
    let mut out = rest.to_vec();
    out.insert(pos, i);
    Some((out, pos % 2 == 1))
}

/// `Λ^k M`, generated by `e_J` for `k`-subsets `J` with relations
/// `ρ ∧ e_J'` for each relation `ρ` and each `(k-1)`-subset `J'`.
pub fn exterior_power(m: &FPModule, k: usize) -> Result<FPModule> {
    let ring = m.ring();
    let g = m.ngens();
    if k == 0 {
        return Ok(FPModule::free(ring, vec![0]));
    }
    if k > g {
        return Ok(FPModule::zero(ring));
    }
    let basis = wedge_basis(g, k);
    let idx = index_of(&basis);
    let gd: Vec<i64> = basis
        .iter()
        .map(|j| j.iter().map(|&i| m.gen_degrees()[i]).sum())
        .collect();
    let mut rels = Vec::new();
    let mut rd = Vec::new();
    for (r, rho) in m.relations().iter().enumerate() {
        for jp in wedge_basis(g, k - 1) {
            let mut v = vector::zero_vector(ring, basis.len());
            for (i, c) in rho.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let Some((j, neg)) = wedge_insert(i, &jp) {
                    let t = idx[&j];
                    v[t] = if neg { v[t].sub(c) } else { v[t].add(c) };
                }
            }
            if !vector::is_zero(&v) {
                rels.push(v);
                rd.push(m.rel_degrees()[r] + jp.iter().map(|&i| m.gen_degrees()[i]).sum::<i64>());
            }
        }
    }
    FPModule::new(ring, gd, rd, rels)
}

/// `Λ^k f`.
pub fn exterior_power_map(f: &ModuleMap, k: usize) -> Result<ModuleMap> {
    let src = exterior_power(f.source(), k)?;
    let tgt = exterior_power(f.target(), k)?;
    let ring = src.ring().clone();
    let images = wedge_basis(f.source().ngens(), k)
        .iter()
        .map(|j| {
            let vs: Vec<Vector> = j.iter().map(|&i| f.images()[i].clone()).collect();
            wedge_product(&ring, f.target().ngens(), &vs)
        })
        .collect::<Vec<_>>();
    let images = if k == 0 {
        vec![vec![Polynomial::one(&ring)]]
    } else {
        images
    };
    ModuleMap::new(&src, &tgt, images, f.degree() * k as i64)
}

/// `v_1 ∧ … ∧ v_k` on the wedge basis of a module with `n` generators.
pub fn wedge_product(ring: &std::sync::Arc<crate::ring::PolyRing>, n: usize, vs: &[Vector]) -> Vector {
    let k = vs.len();
    let basis = wedge_basis(n, k);
    let idx = index_of(&basis);
    let mut out = vector::zero_vector(ring, basis.len());
    // expand multilinearly, tracking the sorted index set and sign
    let mut stack: Vec<(usize, Vec<usize>, Polynomial, bool)> =
        vec![(0, Vec::new(), Polynomial::one(ring), false)];
    while let Some((pos, set, coeff, neg)) = stack.pop() {
        if pos == k {
            let t = idx[&set];
            out[t] = if neg { out[t].sub(&coeff) } else { out[t].add(&coeff) };
            continue;
        }
        for (i, c) in vs[pos].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // appending i at the end: sign from the elements greater than i
            if set.contains(&i) {
                continue;
            }
            let greater = set.iter().filter(|&&x| x > i).count();
            let mut s = set.clone();
            s.push(i);
            s.sort_unstable();
            stack.push((pos + 1, s, coeff.mul(c), neg ^ (greater % 2 == 1)));
        }
    }
    out
}

/// `S^k M`, generated by monomials `e^α` with `|α| = k` and relations
/// `ρ·e^β` for `|β| = k - 1`.
pub fn symmetric_power(m: &FPModule, k: usize) -> Result<FPModule> {
    let ring = m.ring();
    let g = m.ngens();
    if k == 0 {
        return Ok(FPModule::free(ring, vec![0]));
    }
    if g == 0 {
        return Ok(FPModule::zero(ring));
    }
    let basis = symmetric_basis(g, k);
    let idx = index_of(&basis);
    let gd: Vec<i64> = basis
        .iter()
        .map(|j| j.iter().map(|&i| m.gen_degrees()[i]).sum())
        .collect();
    let mut rels = Vec::new();
    let mut rd = Vec::new();
    for (r, rho) in m.relations().iter().enumerate() {
        for b in symmetric_basis(g, k - 1) {
            let mut v = vector::zero_vector(ring, basis.len());
            for (i, c) in rho.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut j = b.clone();
                j.push(i);
                j.sort_unstable();
                let t = idx[&j];
                v[t] = v[t].add(c);
            }
            if !vector::is_zero(&v) {
                rels.push(v);
                rd.push(m.rel_degrees()[r] + b.iter().map(|&i| m.gen_degrees()[i]).sum::<i64>());
            }
        }
    }
    FPModule::new(ring, gd, rd, rels)
}

/// `v_1 ⋯ v_k` on the monomial basis of `S^k` of a module with `n`
/// generators.
pub fn symmetric_product(ring: &std::sync::Arc<crate::ring::PolyRing>, n: usize, vs: &[Vector]) -> Vector {
    let k = vs.len();
    let basis = symmetric_basis(n, k);
    let idx = index_of(&basis);
    let mut out = vector::zero_vector(ring, basis.len());
    let mut stack: Vec<(usize, Vec<usize>, Polynomial)> = vec![(0, Vec::new(), Polynomial::one(ring))];
    while let Some((pos, set, coeff)) = stack.pop() {
        if pos == k {
            let t = idx[&set];
            out[t] = out[t].add(&coeff);
            continue;
        }
        for (i, c) in vs[pos].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = set.clone();
            s.push(i);
            s.sort_unstable();
            stack.push((pos + 1, s, coeff.mul(c)));
        }
    }
    out
}

/// `S^k f`.
pub fn symmetric_power_map(f: &ModuleMap, k: usize) -> Result<ModuleMap> {
    let src = symmetric_power(f.source(), k)?;
    let tgt = symmetric_power(f.target(), k)?;
    let ring = src.ring().clone();
    let images = if k == 0 {
        vec![vec![Polynomial::one(&ring)]]
    } else {
        symmetric_basis(f.source().ngens(), k)
            .iter()
            .map(|j| {
                let vs: Vec<Vector> = j.iter().map(|&i| f.images()[i].clone()).collect();
                symmetric_product(&ring, f.target().ngens(), &vs)
            })
            .collect()
    };
    ModuleMap::new(&src, &tgt, images, f.degree() * k as i64)
}

/// `Fitt_j(M)`: the `(g - j)`-minors of the presentation matrix.
pub fn fitting_ideal(m: &FPModule, j: usize) -> Result<Ideal> {
    let ring = m.ring();
    let g = m.ngens();
    if j >= g {
        return Ok(Ideal::unit(ring));
    }
    let size = g - j;
    let minors = m.presentation().minors(size);
    Ideal::new(ring, minors.into_iter().filter(|p| !p.is_zero()).collect())
}

/// Rank at the generic point: generators minus the rank of the
/// presentation over the fraction field.
pub fn generic_rank(m: &FPModule) -> usize {
    m.ngens() - m.presentation().rank()
}

/// Whether `M` is locally free of rank `r` off the irrelevant ideal:
/// `Fitt_{r-1}(M) = 0` and `dim A/Fitt_r(M) ≤ 0`.
pub fn isolated_singularity_check(m: &FPModule, r: usize) -> Result<bool> {
    let gr = generic_rank(m);
    if gr != r {
        return Err(Error::Precondition(format!(
            "module has generic rank {gr}, not {r}"
        )));
    }
    if r > 0 && !fitting_ideal(m, r - 1)?.is_zero() {
        return Ok(false);
    }
    Ok(fitting_ideal(m, r)?.krull_dimension()? <= 0)
}
