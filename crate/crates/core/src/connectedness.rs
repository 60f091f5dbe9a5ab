//! Connectedness in dimension `d` through the graph of pairwise
//! intersections of irreducible components.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::degeneracy::{verify_dimension_bound, DegeneracySpec, MapData, Verdict};
use crate::error::{Error, Result};
use crate::module::isolated_singularity_check;
use crate::ring::{Ideal, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Minimal primes of a monomial ideal; primality is certain.
    MonomialComputed,
    /// Checked against the ambient ideal; primality is assumed.
    UserSuppliedVerified,
}

/// Ideals `P_1..P_s` whose zero sets are the irreducible components of the
/// zero set of `ambient`.
#[derive(Clone, Debug)]
pub struct ComponentSet {
    ambient: Ideal,
    components: Vec<Ideal>,
    dims: Vec<i64>,
    provenance: Provenance,
}

impl ComponentSet {
    pub fn ambient(&self) -> &Ideal {
        &self.ambient
    }

    pub fn components(&self) -> &[Ideal] {
        &self.components
    }

    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Dimension of the union, `-1` when empty.
    pub fn dimension(&self) -> i64 {
        self.dims.iter().copied().max().unwrap_or(-1)
    }

    /// The same components in another order.
    pub fn permuted(&self, perm: &[usize]) -> ComponentSet {
        ComponentSet {
            ambient: self.ambient.clone(),
            components: perm.iter().map(|&i| self.components[i].clone()).collect(),
            dims: perm.iter().map(|&i| self.dims[i]).collect(),
            provenance: self.provenance,
        }
    }
}

/// Variable supports of the generators; fails on a non-monomial.
fn supports(i: &Ideal) -> Result<Vec<u64>> {
    if i.ring().nvars() > 64 {
        return Err(Error::InvalidInput("at most 64 variables are supported".into()));
    }
    i.gens()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            if !g.is_monomial() {
                return Err(Error::InvalidInput(format!("`{g}` is not a monomial")));
            }
            let (m, _) = g.terms().next().expect("nonzero");
            Ok(m.support_mask())
        })
        .collect()
}

/// Minimal sets of variables meeting every support.
fn minimal_covers(supports: &[u64]) -> Vec<u64> {
    fn go(supports: &[u64], chosen: u64, out: &mut Vec<u64>) {
        match supports.iter().find(|&&s| s & chosen == 0) {
            None => out.push(chosen),
            Some(&s) => {
                let mut bits = s;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    bits ^= b;
                    go(supports, chosen | b, out);
                }
            }
        }
    }
    let mut all = Vec::new();
    go(supports, 0, &mut all);
    all.sort_by_key(|c| (c.count_ones(), *c));
    all.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    for c in all {
        if !minimal.iter().any(|&m| m & c == m) {
            minimal.push(c);
        }
    }
    minimal
}

/// Minimal primes of a monomial ideal, each generated by variables.
pub fn monomial_minimal_primes(i: &Ideal) -> Result<ComponentSet> {
    let ring = i.ring();
    let sup = supports(i)?;
    if sup.contains(&0) {
        return Ok(ComponentSet {
            ambient: i.clone(),
            components: Vec::new(),
            dims: Vec::new(),
            provenance: Provenance::MonomialComputed,
        });
    }
    let covers = minimal_covers(&sup);
    let n = ring.nvars() as i64;
    let components: Vec<Ideal> = covers
        .iter()
        .map(|&c| {
            let vars: Vec<usize> = (0..ring.nvars()).filter(|&v| c >> v & 1 == 1).collect();
            Ideal::variables(ring, &vars)
        })
        .collect();
    let dims = covers.iter().map(|c| n - c.count_ones() as i64).collect();
    Ok(ComponentSet {
        ambient: i.clone(),
        components,
        dims,
        provenance: Provenance::MonomialComputed,
    })
}

/// `f ∈ √I`, trying small powers before the general test.
fn in_radical(i: &Ideal, f: &Polynomial) -> Result<bool> {
    let mut p = f.clone();
    for _ in 0..3 {
        if i.contains(&p)? {
            return Ok(true);
        }
        p = p.mul(f);
    }
    i.radical_member(f)
}

/// Checks that the candidates contain `I`, that their intersection lies in
/// `√I`, and that none contains another.
pub fn verify_component_set(i: &Ideal, candidates: Vec<Ideal>) -> Result<ComponentSet> {
    for (a, p) in candidates.iter().enumerate() {
        if !p.contains_ideal(i)? {
            return Err(Error::InvalidInput(format!("candidate {a} does not contain the ideal")));
        }
    }
    for a in 0..candidates.len() {
        for b in 0..candidates.len() {
            if a != b && candidates[b].contains_ideal(&candidates[a])? {
                return Err(Error::InvalidInput(format!(
                    "candidates {a} and {b}: the component of {a} lies in that of {b}"
                )));
            }
        }
    }
    if candidates.is_empty() {
        if !i.is_unit()? {
            return Err(Error::InvalidInput("no candidates for a nonempty zero set".into()));
        }
    } else {
        let meet = Ideal::intersect_all(&candidates)?;
        for g in meet.gens() {
            if !in_radical(i, g)? {
                return Err(Error::InvalidInput(format!(
                    "`{g}` vanishes on every candidate but is not in the radical"
                )));
            }
        }
    }
    let dims = candidates
        .iter()
        .map(|p| p.krull_dimension())
        .collect::<Result<Vec<_>>>()?;
    Ok(ComponentSet {
        ambient: i.clone(),
        components: candidates,
        dims,
        provenance: Provenance::UserSuppliedVerified,
    })
}

/// Evidence for a connectedness verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// For each component, a chain from component 0 along which
    /// consecutive intersections have dimension at least `d`.
    Paths { paths: Vec<Vec<usize>> },
    /// A split of the components with every cross intersection of
    /// dimension below `d`.
    Bipartition { left: Vec<usize>, right: Vec<usize> },
    /// The union has dimension at most `d`.
    TooSmall { dimension: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectednessReport {
    pub d: i64,
    pub connected: bool,
    pub component_dims: Vec<i64>,
    /// Dimension of `P_i + P_j`; the diagonal holds the component dimensions.
    pub intersection_dims: Vec<Vec<i64>>,
    pub certificate: Certificate,
    pub provenance: Provenance,
}

/// Decides connectedness in dimension `d`. Components must have dimension
/// at least `d`.
pub fn connected_in_dimension(c: &ComponentSet, d: i64) -> Result<ConnectednessReport> {
    if let Some(k) = c.dims.iter().position(|&e| e < d) {
        return Err(Error::Hypothesis(format!(
            "component {k} has dimension {} < {d}",
            c.dims[k]
        )));
    }
    let s = c.len();
    let mut dims = vec![vec![0i64; s]; s];
    for a in 0..s {
        dims[a][a] = c.dims[a];
        for b in a + 1..s {
            let e = c.components[a].add(&c.components[b])?.krull_dimension()?;
            dims[a][b] = e;
            dims[b][a] = e;
        }
    }
    let report = |connected, certificate| ConnectednessReport {
        d,
        connected,
        component_dims: c.dims.clone(),
        intersection_dims: dims.clone(),
        certificate,
        provenance: c.provenance,
    };
    if c.dimension() <= d {
        return Ok(report(false, Certificate::TooSmall { dimension: c.dimension() }));
    }
    let mut parent: Vec<Option<usize>> = vec![None; s];
    let mut seen = vec![false; s];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(a) = queue.pop_front() {
        for b in 0..s {
            if !seen[b] && dims[a][b] >= d {
                seen[b] = true;
                parent[b] = Some(a);
                queue.push_back(b);
            }
        }
    }
    if seen.iter().all(|&x| x) {
        let paths = (0..s)
            .map(|mut b| {
                let mut p = vec![b];
                while let Some(a) = parent[b] {
                    p.push(a);
                    b = a;
                }
                p.reverse();
                p
            })
            .collect();
        Ok(report(true, Certificate::Paths { paths }))
    } else {
        let (left, right): (Vec<usize>, Vec<usize>) = (0..s).partition(|&a| seen[a]);
        Ok(report(false, Certificate::Bipartition { left, right }))
    }
}

/// Checks a certificate against the intersection dimensions it carries.
pub fn certificate_is_valid(r: &ConnectednessReport) -> bool {
    let s = r.component_dims.len();
    match &r.certificate {
        Certificate::Paths { paths } => {
            r.connected
                && paths.len() == s
                && paths.iter().enumerate().all(|(b, p)| {
                    p.first() == Some(&0)
                        && p.last() == Some(&b)
                        && p.windows(2).all(|w| r.intersection_dims[w[0]][w[1]] >= r.d)
                })
        }
        Certificate::Bipartition { left, right } => {
            let all: BTreeSet<usize> = left.iter().chain(right).copied().collect();
            !r.connected
                && !left.is_empty()
                && !right.is_empty()
                && all.len() == s
                && left.len() + right.len() == s
                && left
                    .iter()
                    .all(|&a| right.iter().all(|&b| r.intersection_dims[a][b] < r.d))
        }
        Certificate::TooSmall { dimension } => !r.connected && *dimension <= r.d,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectednessBoundReport {
    pub d: i64,
    pub tau: usize,
    /// The dimension in which `D_t(f)` is expected to be connected.
    pub target: i64,
    pub verdict: Verdict,
    pub connectedness: Option<ConnectednessReport>,
    pub notes: Vec<String>,
}

/// Checks that `D_t(f)` is connected in dimension `d - τ` when the
/// ambient space is connected in dimension `d`.
pub fn verify_connectedness_bound(
    spec: &DegeneracySpec,
    components: &ComponentSet,
    d: i64,
) -> Result<ConnectednessBoundReport> {
    let bound = verify_dimension_bound(spec)?;
    let tau = bound.tau;
    let target = d - tau as i64;
    let mut notes = bound.diagnostics.notes.clone();
    let mut met = bound.diagnostics.hypotheses_met();
    let (first, second, r1, r2) = match &spec.data {
        MapData::Map(f) => (f.source().clone(), f.target().clone(), spec.m, spec.n),
        MapData::Bilinear(b) => (b.source.clone(), b.target.clone(), spec.m, 1),
        MapData::Element { module, .. } => (
            crate::module::FPModule::free_rank(module.ring(), 1),
            module.clone(),
            1,
            spec.n,
        ),
    };
    for (name, m, r) in [("source", &first, r1), ("target", &second, r2)] {
        if crate::module::generic_rank(m) != r || !isolated_singularity_check(m, r)? {
            met = false;
            notes.push(format!("the {name} does not have an isolated singularity of rank {r}"));
        }
    }
    if d >= bound.dim_ambient {
        met = false;
        notes.push(format!("the ambient ring is not connected in dimension {d}"));
    }
    let locus = spec.locus_ideal()?;
    let same = locus.equals(components.ambient())? || locus.same_radical(components.ambient())?;
    if !same {
        return Err(Error::InvalidInput(
            "the components do not describe the degeneracy locus".into(),
        ));
    }
    if components.provenance() == Provenance::UserSuppliedVerified {
        notes.push("conditional on primality of the supplied components".into());
    }
    let conn = match connected_in_dimension(components, target) {
        Ok(r) => r,
        Err(Error::Hypothesis(msg)) => {
            notes.push(msg);
            return Ok(ConnectednessBoundReport {
                d,
                tau,
                target,
                verdict: Verdict::HypothesisUnmet,
                connectedness: None,
                notes,
            });
        }
        Err(e) => return Err(e),
    };
    let verdict = if conn.connected {
        Verdict::Holds
    } else if met {
        Verdict::Violated
    } else {
        Verdict::HypothesisUnmet
    };
    Ok(ConnectednessBoundReport {
        d,
        tau,
        target,
        verdict,
        connectedness: Some(conn),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, PolyRing};

    fn ring(vars: &[&str]) -> std::sync::Arc<PolyRing> {
        PolyRing::new(Field::Rational, vars).unwrap()
    }

    fn names(c: &ComponentSet) -> Vec<String> {
        c.components().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn monomial_primes() {
        let r = ring(&["x", "y", "z"]);
        let c = monomial_minimal_primes(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert_eq!(names(&c), vec!["(x)", "(y)"]);
        let c = monomial_minimal_primes(&Ideal::parse(&r, &["x*z", "y*z"]).unwrap()).unwrap();
        assert_eq!(names(&c), vec!["(z)", "(x, y)"]);
        assert_eq!(c.dims(), &[2, 1]);
        let c = monomial_minimal_primes(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap();
        assert_eq!(names(&c), vec!["(x, y)"]);
        assert!(monomial_minimal_primes(&Ideal::parse(&r, &["x + y"]).unwrap()).is_err());
    }

    #[test]
    fn component_verification() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        assert!(verify_component_set(&i, vec![Ideal::parse(&r, &["x"]).unwrap()]).is_err());
        let ok = verify_component_set(
            &i,
            vec![Ideal::parse(&r, &["x"]).unwrap(), Ideal::parse(&r, &["y"]).unwrap()],
        )
        .unwrap();
        assert_eq!(ok.dims(), &[1, 1]);
        let q = ring(&["x"]);
        let z = verify_component_set(&Ideal::zero(&q), vec![Ideal::zero(&q)]).unwrap();
        assert_eq!(z.dims(), &[1]);
    }

    #[test]
    fn planes() {
        let r = ring(&["x", "y", "z", "w"]);
        let c = monomial_minimal_primes(&Ideal::parse(&r, &["x*z", "x*w", "y*z", "y*w"]).unwrap()).unwrap();
        let rep = connected_in_dimension(&c, 1).unwrap();
        assert!(!rep.connected);
        assert!(certificate_is_valid(&rep));
        let r = ring(&["x", "y", "z"]);
        let c = monomial_minimal_primes(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        let rep = connected_in_dimension(&c, 1).unwrap();
        assert!(rep.connected);
        assert!(certificate_is_valid(&rep));
        assert!(connected_in_dimension(&c, 3).is_err());
        let single = monomial_minimal_primes(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(connected_in_dimension(&single, 1).unwrap().connected);
        assert!(!connected_in_dimension(&single, 2).unwrap().connected);
    }
}
