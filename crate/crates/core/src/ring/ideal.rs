use std::fmt;
use std::sync::{Arc, OnceLock};

use super::groebner::{self, GbConfig};
use super::monomial::MonomialOrder;
use super::poly::{check_ring, same_ring, PolyRing, Polynomial};
use super::terms::Term;
use crate::error::{Error, Result};

/// An ideal given by generators, with its reduced Gröbner basis computed on
/// first use and then kept.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

pub(crate) fn gb_config(ring: &PolyRing) -> GbConfig {
    GbConfig::new(ring.field(), ring.term_order(), ring.max_degree())
}

fn to_vec(p: &Polynomial) -> Vec<Term> {
    p.raw_terms().to_vec()
}

/// Remainder of `p` on division by `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial], ring: &Arc<PolyRing>) -> Result<Polynomial> {
    check_ring(p.ring(), ring)?;
    for b in basis {
        check_ring(b.ring(), ring)?;
    }
    let vs: Vec<Vec<Term>> = basis.iter().filter(|b| !b.is_zero()).map(to_vec).collect();
    let r = groebner::reduce(&gb_config(ring), p.raw_terms(), &vs)?;
    Ok(Polynomial::from_sorted_terms(ring, r))
}

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero
/// modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], ring: &Arc<PolyRing>) -> Result<bool> {
    for b in basis {
        check_ring(b.ring(), ring)?;
    }
    let vs: Vec<Vec<Term>> = basis.iter().filter(|b| !b.is_zero()).map(to_vec).collect();
    groebner::is_groebner(&gb_config(ring), &vs)
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            check_ring(g.ring(), ring)?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, gens: &[S]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: &Arc<PolyRing>, vars: &[usize]) -> Ideal {
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect()).unwrap()
    }

    /// The irrelevant ideal: all variables of positive degree.
    pub fn irrelevant(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::variables(ring, &ring.positive_degree_vars())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Gröbner basis (monic, sorted by increasing leading term).
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let vs: Vec<Vec<Term>> = self.gens.iter().map(to_vec).collect();
        let gb = groebner::groebner(&gb_config(&self.ring), &vs)?;
        let polys = gb
            .into_iter()
            .map(|v| Polynomial::from_sorted_terms(&self.ring, v))
            .collect();
        Ok(self.gb.get_or_init(|| polys))
    }

    /// Copy of the ideal whose generators are its reduced Gröbner basis.
    pub fn groebner(&self) -> Result<Ideal> {
        let gb = self.groebner_basis()?.to_vec();
        let out = Ideal::new(&self.ring, gb.clone())?;
        let _ = out.gb.set(gb);
        Ok(out)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let gb = self.groebner_basis()?;
        normal_form(p, gb, &self.ring)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        check_ring(p.ring(), &self.ring)?;
        Ok(p.is_zero() || self.normal_form(p)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        check_ring(other.ring(), &self.ring)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by mutual containment.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_unit()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn add(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(other.ring(), &self.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn mul(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(other.ring(), &self.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Generators with zeros and repeats removed.
    pub fn trimmed(&self) -> Ideal {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &self.gens {
            if g.is_zero() {
                continue;
            }
            let m = g.make_monic();
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
        Ideal::new(&self.ring, gens).unwrap()
    }

    /// Same generators in a ring differing only by order or degree guard.
    pub fn reorder(&self, target: &Arc<PolyRing>) -> Result<Ideal> {
        if target.var_names() != self.ring.var_names() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch("reorder needs identical variables".into()));
        }
        Ideal::new(target, self.gens.iter().map(|g| g.reorder(target)).collect())
    }

    /// Image under the variable renaming `i -> var_map[i]`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Result<Ideal> {
        Ideal::new(target, self.gens.iter().map(|g| g.map_vars(target, var_map)).collect())
    }

    /// Image under the ring map sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Ideal> {
        Ideal::new(target, self.gens.iter().map(|g| g.substitute(target, images)).collect())
    }

    /// `I ∩ K[kept variables]`, returned in the ring of the kept variables
    /// (in their original relative order, with the caller's order restored).
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        for &d in drop {
            if d >= n {
                return Err(Error::InvalidInput(format!("no variable with index {d}")));
            }
        }
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let names: Vec<String> = keep.iter().map(|&i| self.ring.var_names()[i].clone()).collect();
        let weights: Vec<i32> = keep.iter().map(|&i| self.ring.weights()[i]).collect();
        let order = match self.ring.order() {
            MonomialOrder::Block(_) => MonomialOrder::GrevLex,
            o => o,
        };
        let target = PolyRing::build(self.ring.field(), names, weights, order, self.ring.max_degree())?;
        self.eliminate_into(drop, &target)
    }

    /// Like [`Ideal::eliminate`] with an explicit target ring whose variables
    /// correspond, in order, to the kept variables.
    pub fn eliminate_into(&self, drop: &[usize], target: &Arc<PolyRing>) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut drop: Vec<usize> = drop.to_vec();
        drop.sort_unstable();
        drop.dedup();
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        if target.nvars() != keep.len() {
            return Err(Error::RingMismatch("target ring has the wrong size".into()));
        }
        if drop.is_empty() {
            let back: Vec<usize> = (0..n).collect();
            return self.map_vars(target, &back);
        }
        if self.is_zero() {
            return Ok(Ideal::zero(target));
        }
        // dropped variables first, then the kept ones, under a block order
        let perm: Vec<usize> = drop.iter().chain(keep.iter()).cloned().collect();
        let mut pos = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let names: Vec<String> = perm.iter().map(|&i| self.ring.var_names()[i].clone()).collect();
        let weights: Vec<i32> = perm.iter().map(|&i| self.ring.weights()[i]).collect();
        let ext = PolyRing::build(
            self.ring.field(),
            names,
            weights,
            MonomialOrder::Block(drop.len()),
            self.ring.max_degree(),
        )?;
        let moved = self.map_vars(&ext, &pos)?;
        let k = drop.len();
        let block: Vec<usize> = (k..n).collect();
        let back: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
        let mut gens = Vec::new();
        for g in moved.groebner_basis()? {
            if g.uses_only(&block) {
                gens.push(g.map_vars(target, &back));
            }
        }
        Ideal::new(target, gens)
    }

    /// A copy of the ring with one extra leading variable.
    fn ring_with_prefix(&self, base: &str) -> Result<Arc<PolyRing>> {
        let name = self.ring.fresh_name(base);
        let ext = self.ring.extend(&[(name, 0)], &[])?;
        Ok(ext.with_order(MonomialOrder::GrevLex))
    }

    fn lift_prefix(&self, ext: &Arc<PolyRing>) -> Result<Ideal> {
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        self.map_vars(ext, &shift)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(other.ring(), &self.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring_with_prefix("t")?;
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let a = self.lift_prefix(&ext)?;
        let b = other.lift_prefix(&ext)?;
        let mut gens: Vec<Polynomial> = a.gens.iter().map(|g| t.mul(g)).collect();
        gens.extend(b.gens.iter().map(|g| one_minus_t.mul(g)));
        Ideal::new(&ext, gens)?.eliminate_into(&[0], &self.ring)
    }

    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
        let mut it = ideals.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidInput("intersection of no ideals".into()))?;
        let mut acc = first.clone();
        for i in it {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `I : f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal> {
        check_ring(f.ring(), &self.ring)?;
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let meet = self.intersect(&Ideal::new(&self.ring, vec![f.clone()])?)?;
        let mut gens = Vec::new();
        for g in meet.groebner_basis()? {
            let q = g.div_exact(f).ok_or_else(|| {
                Error::Internal(format!("{g} in the intersection is not divisible by {f}"))
            })?;
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`, intersecting the quotients by the generators of `J`.
    pub fn quotient_ideal(&self, j: &Ideal) -> Result<Ideal> {
        let parts = j
            .gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| self.quotient(g))
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Ok(Ideal::unit(&self.ring));
        }
        Ideal::intersect_all(&parts)
    }

    fn is_standard_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| {
            let mut d = g.raw_terms().iter().map(|t| t.mono.degree());
            match d.next() {
                Some(first) => d.all(|e| e == first),
                None => true,
            }
        })
    }

    /// `I : f^∞`.
    pub fn saturate_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_ring(f.ring(), &self.ring)?;
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        if f.is_monomial() && f.total_degree() == Some(1) && self.is_standard_homogeneous() {
            let v = (0..self.ring.nvars()).find(|&i| f.involves_var(i)).unwrap();
            return self.saturate_variable(v);
        }
        let ext = self.ring_with_prefix("t")?;
        let t = Polynomial::var(&ext, 0);
        let fl = f.map_vars(&ext, &(1..=self.ring.nvars()).collect::<Vec<_>>());
        let mut gens = self.lift_prefix(&ext)?.gens;
        gens.push(Polynomial::one(&ext).sub(&t.mul(&fl)));
        Ideal::new(&ext, gens)?.eliminate_into(&[0], &self.ring)
    }

    /// Saturation by a variable for ideals homogeneous in the total degree:
    /// with that variable last in grevlex, divide each basis element by its
    /// largest power of it.
    fn saturate_variable(&self, v: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        let perm: Vec<usize> = (0..n).filter(|&i| i != v).chain([v]).collect();
        let mut pos = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let names: Vec<String> = perm.iter().map(|&i| self.ring.var_names()[i].clone()).collect();
        let weights: Vec<i32> = perm.iter().map(|&i| self.ring.weights()[i]).collect();
        let ext = PolyRing::build(
            self.ring.field(),
            names,
            weights,
            MonomialOrder::GrevLex,
            self.ring.max_degree(),
        )?;
        let moved = self.map_vars(&ext, &pos)?;
        let mut gens = Vec::new();
        for g in moved.groebner_basis()? {
            let e = g
                .raw_terms()
                .iter()
                .map(|t| t.mono.exp(n - 1))
                .min()
                .unwrap_or(0);
            let g = if e > 0 {
                let mut ex = vec![0u32; n];
                ex[n - 1] = e;
                let m = Polynomial::monomial(
                    &ext,
                    super::monomial::Monomial::from_exponents(&ex),
                    ext.field().one(),
                );
                g.div_exact(&m).expect("monomial divides every term")
            } else {
                g.clone()
            };
            gens.push(g.map_vars(&self.ring, &perm));
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J^∞ = ∩_j (I : g_j^∞)`.
    pub fn saturate(&self, j: &Ideal) -> Result<Ideal> {
        check_ring(j.ring(), &self.ring)?;
        let gens: Vec<&Polynomial> = j.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::InvalidInput("saturation by the zero ideal".into()));
        }
        let parts = gens
            .into_iter()
            .map(|g| self.saturate_poly(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::intersect_all(&parts)
    }

    /// Whether `f` lies in the radical, via `1 ∈ I + (1 - t·f)`.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        check_ring(f.ring(), &self.ring)?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.contains(f)? {
            return Ok(true);
        }
        let ext = self.ring_with_prefix("t")?;
        let t = Polynomial::var(&ext, 0);
        let fl = f.map_vars(&ext, &(1..=self.ring.nvars()).collect::<Vec<_>>());
        let mut gens = self.lift_prefix(&ext)?.gens;
        gens.push(Polynomial::one(&ext).sub(&t.mul(&fl)));
        Ideal::new(&ext, gens)?.is_unit()
    }

    /// `√I = √J`, checked generator by generator.
    pub fn same_radical(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.radical_member(g)? {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !other.radical_member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Krull dimension of `R/I`; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        let all: Vec<usize> = (0..self.ring.nvars()).collect();
        self.independent_dimension(&all)
    }

    /// Largest set of variables drawn from `among` that is independent
    /// modulo the leading-term ideal. With `among` = every variable this is
    /// the Krull dimension; with the trailing block of an elimination order
    /// it is the dimension of the image in that block.
    pub fn independent_dimension(&self, among: &[usize]) -> Result<i64> {
        let n = self.ring.nvars();
        if n > 64 {
            return Err(Error::InvalidInput("dimension needs at most 64 variables".into()));
        }
        let gb = self.groebner_basis()?;
        if gb.iter().any(|g| g.is_unit()) {
            return Ok(-1);
        }
        let mut masks: Vec<u64> = gb
            .iter()
            .map(|g| g.leading_monomial().unwrap().support_mask())
            .collect();
        masks.sort_unstable();
        masks.dedup();
        let minimal: Vec<u64> = masks
            .iter()
            .cloned()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
            .collect();
        Ok(max_independent(&minimal, among) as i64)
    }

    /// Dimension of `V(I)` projected to the variables in `among`, computed
    /// by eliminating the rest.
    pub fn dimension_of_projection(&self, among: &[usize]) -> Result<i64> {
        let drop: Vec<usize> = (0..self.ring.nvars()).filter(|i| !among.contains(i)).collect();
        self.eliminate(&drop)?.krull_dimension()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() <= 1)
    }
}

/// Largest `U ⊆ among` such that no mask is contained in `U`.
fn max_independent(masks: &[u64], among: &[usize]) -> usize {
    fn go(masks: &[u64], vars: &[usize], idx: usize, cur: u64, size: usize, best: &mut usize) {
        if size + (vars.len() - idx) <= *best {
            return;
        }
        if idx == vars.len() {
            *best = size;
            return;
        }
        let v = vars[idx];
        let with = cur | (1u64 << v);
        if !masks.iter().any(|&m| m & (1u64 << v) != 0 && m & with == m) {
            go(masks, vars, idx + 1, with, size + 1, best);
        }
        go(masks, vars, idx + 1, cur, size, best);
    }
    let mut best = 0;
    go(masks, among, 0, 0, 0, &mut best);
    best
}

impl PartialEq for Ideal {
    /// Structural equality of rings and generator lists; use
    /// [`Ideal::equals`] for equality as ideals.
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn ring(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, vars).unwrap()
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let x = p(&r, "x");
        assert_eq!(normal_form(&p(&r, "x^2 + y"), std::slice::from_ref(&x), &r).unwrap(), p(&r, "y"));
        assert!(normal_form(&Polynomial::zero(&r), &[x], &r).unwrap().is_zero());
        let g = [p(&r, "x^2 - 1"), p(&r, "y^2 - 1")];
        assert_eq!(normal_form(&p(&r, "x*y - 1"), &g, &r).unwrap(), p(&r, "x*y - 1"));
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::new(Field::Rational, &["x", "y", "z"])
            .unwrap()
            .with_order(MonomialOrder::Lex);
        let i = Ideal::parse(&r, &["x^2 - y", "x^3 - z"]).unwrap();
        let gb = i.groebner_basis().unwrap();
        assert!(gb.contains(&p(&r, "y^3 - z^2")));
        assert!(i.contains(&p(&r, "y^3 - z^2")).unwrap());
    }

    #[test]
    fn trivial_bases() {
        let r = ring(&["x", "y"]);
        assert_eq!(Ideal::unit(&r).groebner_basis().unwrap(), &[Polynomial::one(&r)]);
        let i = Ideal::parse(&r, &["y", "x"]).unwrap();
        assert_eq!(i.groebner_basis().unwrap(), &[p(&r, "y"), p(&r, "x")]);
        assert!(i.contains(&p(&r, "x*y")).unwrap());
        assert!(!Ideal::parse(&r, &["x"]).unwrap().contains(&p(&r, "x + 1")).unwrap());
    }

    #[test]
    fn elimination() {
        let r = ring(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["t*x - 1", "t*y"]).unwrap();
        let e = i.eliminate(&[0]).unwrap();
        let s = ring(&["x", "y"]);
        assert!(e.equals(&Ideal::parse(&s, &["y"]).unwrap().reorder(e.ring()).unwrap()).unwrap());
        let r2 = ring(&["x", "y"]);
        assert!(Ideal::parse(&r2, &["x"]).unwrap().eliminate(&[0]).unwrap().is_zero());
    }

    #[test]
    fn saturation_quotient_intersection() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let s = i.saturate(&m).unwrap();
        assert!(s.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
        let q = Ideal::parse(&r, &["x*y"]).unwrap().quotient(&p(&r, "x")).unwrap();
        assert!(q.equals(&Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        let a = Ideal::parse(&r, &["x"]).unwrap();
        let b = Ideal::parse(&r, &["y"]).unwrap();
        assert!(a.intersect(&b).unwrap().equals(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
    }

    #[test]
    fn inhomogeneous_saturation() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 + x", "x*y + y"]).unwrap();
        let s = i.saturate_poly(&p(&r, "x + 1")).unwrap();
        assert!(s.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(i.radical_member(&p(&r, "x")).unwrap());
        assert!(!i.radical_member(&p(&r, "y")).unwrap());
        let j = Ideal::parse(&r, &["(x+y)^3", "x*(x+y)"]).unwrap();
        assert!(j.radical_member(&p(&r, "x + y")).unwrap());
    }

    #[test]
    fn dimensions() {
        let r = ring(&["a", "b", "c", "d", "e", "f"]);
        let minors = Ideal::parse(&r, &["a*e - b*d", "a*f - c*d", "b*f - c*e"]).unwrap();
        assert_eq!(minors.krull_dimension().unwrap(), 4);
        assert_eq!(Ideal::zero(&r).krull_dimension().unwrap(), 6);
        assert_eq!(Ideal::unit(&r).krull_dimension().unwrap(), -1);
        // symmetric 3x3 [[a,b,c],[b,d,e],[c,e,f]]
        let sym = Ideal::parse(
            &r,
            &[
                "a*d - b^2", "a*e - b*c", "b*e - c*d", "a*e - c*b", "a*f - c^2", "b*f - c*e",
                "b*e - d*c", "b*f - e*c", "d*f - e^2",
            ],
        )
        .unwrap();
        assert_eq!(sym.krull_dimension().unwrap(), 3);
    }

    #[test]
    fn degree_guard_is_an_error() {
        let r = ring(&["x", "y"]).with_max_degree(3);
        let i = Ideal::parse(&r, &["x^3 - y^2", "x*y^2 - x"]).unwrap();
        match i.groebner_basis() {
            Err(e) => assert!(e.is_resource()),
            Ok(gb) => assert!(gb.iter().all(|g| g.total_degree().unwrap() <= 3)),
        }
        let big = ring(&["x"]).with_max_degree(2);
        assert!(Ideal::parse(&big, &["x^5"]).unwrap().groebner_basis().unwrap_err().is_resource());
    }
}
