//! Submodules of graded free modules: Gröbner bases, membership with
//! certificates, and syzygies.

use std::sync::{Arc, OnceLock};

use super::vector::{self, Vector};
use crate::error::{Error, Result};
use crate::ring::groebner::{self, GbConfig};
use crate::ring::{check_ring, ModuleOrder, PolyMatrix, PolyRing, Polynomial, TermOrder, Term};

/// The submodule of `A^r` generated by a list of vectors. Basis vector `e_c`
/// has degree `degrees[c]`; the order is position over term with `e_0`
/// largest.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<PolyRing>,
    degrees: Vec<i64>,
    gens: Vec<Vector>,
    gb: OnceLock<Vec<Vec<Term>>>,
    aug: OnceLock<Vec<Vec<Term>>>,
}

fn config(ring: &PolyRing, shifts: Vec<i64>) -> GbConfig {
    let mut cfg = GbConfig::new(
        ring.field(),
        TermOrder::new(ring.order(), ModuleOrder::Pot),
        ring.max_degree(),
    );
    cfg.shifts = shifts;
    cfg
}

impl Submodule {
    pub fn new(ring: &Arc<PolyRing>, degrees: Vec<i64>, gens: Vec<Vector>) -> Result<Submodule> {
        for g in &gens {
            if g.len() != degrees.len() {
                return Err(Error::InvalidInput(format!(
                    "vector of length {} in a free module of rank {}",
                    g.len(),
                    degrees.len()
                )));
            }
            for p in g {
                check_ring(p.ring(), ring)?;
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            degrees,
            gens,
            gb: OnceLock::new(),
            aug: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn gens(&self) -> &[Vector] {
        &self.gens
    }

    fn gen_degree(&self, g: &[Polynomial]) -> i64 {
        vector::vector_degree(g, &self.degrees).unwrap_or(0)
    }

    fn gb_terms(&self) -> Result<&[Vec<Term>]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let cfg = config(&self.ring, self.degrees.clone());
        let input: Vec<Vec<Term>> = self.gens.iter().map(|g| vector::to_terms(g, 0)).collect();
        let gb = groebner::groebner(&cfg, &input)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Gröbner basis of `(g_i | e_i)` in `A^{r+k}`.
    fn aug_terms(&self) -> Result<&[Vec<Term>]> {
        if let Some(gb) = self.aug.get() {
            return Ok(gb);
        }
        let r = self.rank();
        let mut shifts = self.degrees.clone();
        shifts.extend(self.gens.iter().map(|g| self.gen_degree(g)));
        let cfg = config(&self.ring, shifts);
        let input: Vec<Vec<Term>> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut t = vector::to_terms(g, 0);
                t.push(Term::new(
                    crate::ring::Monomial::one(self.ring.nvars()),
                    (r + i) as u32,
                    self.ring.field().one(),
                ));
                t
            })
            .collect();
        let gb = groebner::groebner(&cfg, &input)?;
        Ok(self.aug.get_or_init(|| gb))
    }

    /// Reduced Gröbner basis as vectors.
    pub fn groebner_basis(&self) -> Result<Vec<Vector>> {
        let r = self.rank();
        Ok(self
            .gb_terms()?
            .iter()
            .map(|t| vector::from_terms(&self.ring, t, 0, r))
            .collect())
    }

    /// Normal form of `v` modulo the submodule.
    pub fn reduce(&self, v: &[Polynomial]) -> Result<Vector> {
        self.check_vector(v)?;
        let cfg = config(&self.ring, self.degrees.clone());
        let r = groebner::reduce(&cfg, &vector::to_terms(v, 0), self.gb_terms()?)?;
        Ok(vector::from_terms(&self.ring, &r, 0, self.rank()))
    }

    fn check_vector(&self, v: &[Polynomial]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "vector of length {} in a free module of rank {}",
                v.len(),
                self.rank()
            )));
        }
        for p in v {
            check_ring(p.ring(), &self.ring)?;
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        if vector::is_zero(v) {
            self.check_vector(v)?;
            return Ok(true);
        }
        Ok(vector::is_zero(&self.reduce(v)?))
    }

    pub fn contains_submodule(&self, other: &Submodule) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients `c` with `v = Σ c_i·gens[i]`, or `None` when `v` is not
    /// in the submodule.
    pub fn lift(&self, v: &[Polynomial]) -> Result<Option<Vector>> {
        self.check_vector(v)?;
        let r = self.rank();
        let k = self.gens.len();
        let mut shifts = self.degrees.clone();
        shifts.extend(self.gens.iter().map(|g| self.gen_degree(g)));
        let cfg = config(&self.ring, shifts);
        let rem = groebner::reduce(&cfg, &vector::to_terms(v, 0), self.aug_terms()?)?;
        if rem.iter().any(|t| (t.comp as usize) < r) {
            return Ok(None);
        }
        let s = vector::from_terms(&self.ring, &rem, r as u32, k);
        let coeffs: Vector = s.iter().map(|p| p.neg()).collect();
        debug_assert_eq!(
            vector::combine(&self.ring, r, &coeffs, &self.gens),
            v.to_vec()
        );
        Ok(Some(coeffs))
    }

    /// Generators of the module of relations among the generators.
    pub fn syzygies(&self) -> Result<Vec<Vector>> {
        let r = self.rank();
        let k = self.gens.len();
        Ok(self
            .aug_terms()?
            .iter()
            .filter(|t| t[0].comp as usize >= r)
            .map(|t| vector::from_terms(&self.ring, t, r as u32, k))
            .collect())
    }

    /// Degree of each generator (0 for zero or inhomogeneous vectors).
    pub fn gen_degrees(&self) -> Vec<i64> {
        self.gens.iter().map(|g| self.gen_degree(g)).collect()
    }
}

/// Kernel of the map `A^k → A^r` given by an `r × k` matrix: the columns of
/// the result generate it and `P · result = 0`.
pub fn syzygies(p: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = p.ring();
    let cols: Vec<Vector> = (0..p.ncols()).map(|j| p.column(j)).collect();
    let degrees = vec![0; p.nrows()];
    let sub = Submodule::new(ring, degrees, cols)?;
    let syz = sub.syzygies()?;
    let mut out = PolyMatrix::zero(ring, p.ncols(), syz.len());
    for (j, s) in syz.iter().enumerate() {
        for (i, e) in s.iter().enumerate() {
            out.set(i, j, e.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, vars).unwrap()
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"]);
        let p = PolyMatrix::parse(&r, &[vec!["x", "y"]]).unwrap();
        let s = syzygies(&p).unwrap();
        assert_eq!(s.ncols(), 1);
        assert!(p.mul(&s).unwrap().is_zero());
        let expected = vec![Polynomial::parse(&r, "-y").unwrap(), Polynomial::parse(&r, "x").unwrap()];
        let col = s.column(0);
        assert!(col == expected || col == vector::scale(&Polynomial::from_i64(&r, -1), &expected));
    }

    #[test]
    fn identity_has_no_syzygies() {
        let r = ring(&["x"]);
        let s = syzygies(&PolyMatrix::identity(&r, 3)).unwrap();
        assert_eq!(s.ncols(), 0);
    }

    #[test]
    fn lift_certificate() {
        let r = ring(&["x", "y"]);
        let gens = vec![
            vec![Polynomial::parse(&r, "x").unwrap(), Polynomial::parse(&r, "y").unwrap()],
            vec![Polynomial::parse(&r, "y").unwrap(), Polynomial::zero(&r)],
        ];
        let sub = Submodule::new(&r, vec![0, 0], gens.clone()).unwrap();
        let v = vec![
            Polynomial::parse(&r, "x^2 + y^2").unwrap(),
            Polynomial::parse(&r, "x*y").unwrap(),
        ];
        let c = sub.lift(&v).unwrap().unwrap();
        assert_eq!(vector::combine(&r, 2, &c, &gens), v);
        let w = vec![Polynomial::one(&r), Polynomial::zero(&r)];
        assert!(sub.lift(&w).unwrap().is_none());
        assert!(!sub.contains(&w).unwrap());
    }
}
