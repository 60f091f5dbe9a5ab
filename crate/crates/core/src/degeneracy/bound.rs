//! Lower bounds for the dimension of degeneracy loci.

use serde::{Deserialize, Serialize};

use super::determinantal::{bilinear_ideal, determinantal_ideal, order_ideal, BilinearMap, Flavor};
use crate::ampleness::{in_max_times, p_ample_check, RangeVerdict};
use crate::error::{Error, Result};
use crate::module::{generic_rank, hom_module, FPModule, ModuleMap, Vector};
use crate::ring::Ideal;

/// The map whose degeneracy locus is studied.
#[derive(Clone, Debug)]
pub enum MapData {
    Map(ModuleMap),
    Bilinear(BilinearMap),
    /// An element of a module `N`, i.e. a map `A → N`.
    Element { module: FPModule, element: Vector },
}

/// A map, a threshold `t` and the declared ranks `(m, n)` of source and
/// target at the generic point (`n = 1` for bilinear maps, `m = 1` for
/// elements).
#[derive(Clone, Debug)]
pub struct DegeneracySpec {
    pub data: MapData,
    pub t: usize,
    pub m: usize,
    pub n: usize,
    /// Largest Frobenius exponent tried when `f ∉ m·Hom` in characteristic `p`.
    pub a_max: u32,
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl DegeneracySpec {
    pub fn generic(f: ModuleMap, t: usize, m: usize, n: usize) -> Result<DegeneracySpec> {
        if t > m.min(n) {
            return Err(Error::InvalidInput(format!("t = {t} exceeds min({m}, {n})")));
        }
        Ok(DegeneracySpec { data: MapData::Map(f), t, m, n, a_max: 3 })
    }

    pub fn bilinear(f: BilinearMap, t: usize, m: usize) -> Result<DegeneracySpec> {
        if t > m {
            return Err(Error::InvalidInput(format!("t = {t} exceeds m = {m}")));
        }
        if f.alternating && t % 2 == 1 {
            return Err(Error::InvalidInput(format!("t = {t} must be even for an alternating map")));
        }
        Ok(DegeneracySpec { data: MapData::Bilinear(f), t, m, n: 1, a_max: 3 })
    }

    pub fn order(module: FPModule, element: Vector, n: usize) -> Result<DegeneracySpec> {
        module.check_element(&element)?;
        Ok(DegeneracySpec {
            data: MapData::Element { module, element },
            t: 0,
            m: 1,
            n,
            a_max: 3,
        })
    }

    pub fn with_a_max(mut self, a_max: u32) -> DegeneracySpec {
        self.a_max = a_max;
        self
    }

    pub fn flavor(&self) -> Flavor {
        match &self.data {
            MapData::Map(_) => Flavor::Generic,
            MapData::Bilinear(b) => b.flavor(),
            MapData::Element { .. } => Flavor::Order,
        }
    }

    /// The expected codimension.
    pub fn tau(&self) -> usize {
        let (m, n, t) = (self.m, self.n, self.t);
        match self.flavor() {
            Flavor::Generic => (n - t) * (m - t),
            Flavor::Symmetric => binom2(m - t + 1),
            Flavor::Alternating => binom2(m - t),
            Flavor::Order => n,
        }
    }

    /// The ideal `I_{t+1}(f)` defining `D_t(f)`.
    pub fn locus_ideal(&self) -> Result<Ideal> {
        match &self.data {
            MapData::Map(f) => determinantal_ideal(f, self.t),
            MapData::Bilinear(b) => bilinear_ideal(b, self.t),
            MapData::Element { module, element } => order_ideal(module, element),
        }
    }

    /// The module `H` housing `f` and the coordinates of `f` in it.
    pub fn hom_element(&self) -> Result<(FPModule, Vector)> {
        match &self.data {
            MapData::Map(f) => {
                let h = hom_module(f.source(), f.target())?;
                let c = h.element_of(f.images())?;
                Ok((h.module().clone(), c))
            }
            MapData::Bilinear(b) => {
                let h = b.hom_space()?;
                let c = b.as_hom()?;
                Ok((h.module().clone(), c))
            }
            MapData::Element { module, element } => Ok((module.clone(), element.clone())),
        }
    }

    fn observed_ranks(&self) -> (usize, usize) {
        match &self.data {
            MapData::Map(f) => (generic_rank(f.source()), generic_rank(f.target())),
            MapData::Bilinear(b) => (generic_rank(&b.source), generic_rank(&b.target)),
            MapData::Element { module, .. } => (1, generic_rank(module)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    HypothesisUnmet,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::HypothesisUnmet => "hypothesis-unmet",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub declared_ranks: (usize, usize),
    pub observed_ranks: (usize, usize),
    pub ranks_ok: bool,
    /// Whether `f ∈ m·Hom`.
    pub f_in_max_hom: bool,
    /// Frobenius range tested for `(Af, Hom)`, when `f ∉ m·Hom` in positive
    /// characteristic.
    pub p_ample: Option<RangeVerdict>,
    pub notes: Vec<String>,
}

impl Diagnostics {
    pub fn hypotheses_met(&self) -> bool {
        self.ranks_ok && (self.f_in_max_hom || self.p_ample.as_ref().is_some_and(|v| v.holds()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub flavor: Flavor,
    pub t: usize,
    pub tau: usize,
    pub dim_ambient: i64,
    /// `-1` when the locus is empty.
    pub dim_locus: i64,
    pub verdict: Verdict,
    pub diagnostics: Diagnostics,
}

impl BoundReport {
    pub fn bound(&self) -> i64 {
        self.dim_ambient - self.tau as i64
    }
}

/// Computes `dim D_t(f)`, compares it with `dim A - τ` and checks the
/// hypotheses under which the bound is guaranteed.
pub fn verify_dimension_bound(spec: &DegeneracySpec) -> Result<BoundReport> {
    let ideal = spec.locus_ideal()?;
    let ring = ideal.ring().clone();
    let dim_ambient = Ideal::zero(&ring).krull_dimension()?;
    let dim_locus = ideal.krull_dimension()?;
    let tau = spec.tau();

    let observed = spec.observed_ranks();
    let declared = (spec.m, spec.n);
    let ranks_ok = observed == declared;
    let mut notes = Vec::new();
    if !ranks_ok {
        notes.push(format!(
            "generic ranks are {observed:?}, declared {declared:?}"
        ));
    }
    let (h, c) = spec.hom_element()?;
    let f_in_max_hom = in_max_times(&h, &c)?;
    let mut p_ample = None;
    if !f_in_max_hom {
        notes.push("f is not in m·Hom".into());
        if ring.field().characteristic() > 0 && spec.a_max > 0 {
            let v = p_ample_check(&[c], &h, spec.a_max)?;
            if !v.holds() {
                notes.push("the pair (Af, Hom) fails the p-ample test".into());
            }
            p_ample = Some(v);
        }
    }
    let diagnostics = Diagnostics {
        declared_ranks: declared,
        observed_ranks: observed,
        ranks_ok,
        f_in_max_hom,
        p_ample,
        notes,
    };
    let verdict = if dim_locus >= dim_ambient - tau as i64 {
        Verdict::Holds
    } else if diagnostics.hypotheses_met() {
        Verdict::Violated
    } else {
        Verdict::HypothesisUnmet
    };
    Ok(BoundReport {
        flavor: spec.flavor(),
        t: spec.t,
        tau,
        dim_ambient,
        dim_locus,
        verdict,
        diagnostics,
    })
}
