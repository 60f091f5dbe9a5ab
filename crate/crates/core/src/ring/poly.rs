use std::fmt;
use std::sync::Arc;


use super::coeff::{Coeff, Field};
use super::monomial::{ModuleOrder, Monomial, MonomialOrder, TermOrder};
use super::terms::{self, Term};
use crate::error::{Error, Result};

/// Default cap on the total degree of intermediate Gröbner basis elements.
pub const DEFAULT_MAX_DEGREE: u32 = 40;

/// A polynomial ring `K[x_1..x_n]` with a monomial order, a grading and the
/// degree guard used by every Gröbner computation performed in it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    weights: Vec<i32>,
    order: MonomialOrder,
    max_degree: u32,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Standard-graded ring with grevlex order.
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S]) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let weights = vec![1; vars.len()];
        PolyRing::build(field, vars, weights, MonomialOrder::GrevLex, DEFAULT_MAX_DEGREE)
    }

    pub fn build(
        field: Field,
        vars: Vec<String>,
        weights: Vec<i32>,
        order: MonomialOrder,
        max_degree: u32,
    ) -> Result<Arc<PolyRing>> {
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidInput(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        if weights.len() != vars.len() {
            return Err(Error::InvalidInput(format!(
                "{} weights for {} variables",
                weights.len(),
                vars.len()
            )));
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidInput(format!(
                    "block of size {k} in a ring with {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            vars,
            weights,
            order,
            max_degree,
        }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub(crate) fn term_order(&self) -> TermOrder {
        TermOrder::new(self.order, ModuleOrder::Pot)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            order,
            ..self.clone()
        })
    }

    pub fn with_max_degree(&self, max_degree: u32) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            max_degree,
            ..self.clone()
        })
    }

    pub fn with_weights(&self, weights: Vec<i32>) -> Result<Arc<PolyRing>> {
        PolyRing::build(
            self.field,
            self.vars.clone(),
            weights,
            self.order,
            self.max_degree,
        )
    }

    /// A ring with `prefix` variables placed before and `suffix` variables
    /// after the current ones. The order becomes grevlex.
    pub fn extend(
        &self,
        prefix: &[(String, i32)],
        suffix: &[(String, i32)],
    ) -> Result<Arc<PolyRing>> {
        let mut vars = Vec::new();
        let mut weights = Vec::new();
        for (v, w) in prefix {
            vars.push(v.clone());
            weights.push(*w);
        }
        vars.extend(self.vars.iter().cloned());
        weights.extend(self.weights.iter().cloned());
        for (v, w) in suffix {
            vars.push(v.clone());
            weights.push(*w);
        }
        PolyRing::build(self.field, vars, weights, MonomialOrder::GrevLex, self.max_degree)
    }

    /// A variable name not yet used in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.var_index(n).is_none())
            .unwrap()
    }

    /// Variables of positive degree: the generators of the irrelevant ideal.
    pub fn positive_degree_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.weights[i] > 0).collect()
    }
}

pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "{:?} vs {:?}",
            a.var_names(),
            b.var_names()
        )))
    }
}

/// A sparse polynomial; terms are stored in descending order for the ring's
/// monomial order and carry no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(Monomial::one(ring.nvars()), 0, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Arc<PolyRing>, v: i64) -> Self {
        Polynomial::constant(ring, ring.field().from_i64(v))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        ring.var_index(name)
            .map(|i| Polynomial::var(ring, i))
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable `{name}`")))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(m, 0, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        let terms = terms
            .into_iter()
            .map(|(m, c)| Term::new(m, 0, c))
            .collect();
        Polynomial {
            ring: ring.clone(),
            terms: terms::normalize(&ring.field(), &ring.term_order(), terms),
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.comp == 0 && !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub(crate) fn raw_terms(&self) -> &[Term] {
        &self.terms
    }


    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().map(|t| (&t.mono, &t.coeff))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].coeff.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total (unweighted) degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Degree with respect to the ring's grading, when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let w = self.ring.weights();
        let mut it = self.terms.iter().map(|t| t.mono.weighted_degree(w));
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// True when every term only involves the listed variables.
    pub fn uses_only(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|t| {
            t.mono
                .exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || vars.contains(&i))
        })
    }

    pub fn involves_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(i) > 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let t = terms::add(&self.field(), &self.ring.term_order(), &self.terms, &other.terms);
        Polynomial::from_sorted_terms(&self.ring, t)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let t = terms::sub(&self.field(), &self.ring.term_order(), &self.terms, &other.terms);
        Polynomial::from_sorted_terms(&self.ring, t)
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field();
        self.scale(&f.neg(&f.one()))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        Polynomial::from_sorted_terms(&self.ring, terms::scale(&self.field(), &self.terms, c))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let t = terms::mul_poly(&self.field(), &self.ring.term_order(), &big.terms, &small.terms);
        Polynomial::from_sorted_terms(&self.ring, t)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let f = self.field();
        let t = terms::axpy(&f, &self.ring.term_order(), &[], c, m, &self.terms);
        Polynomial::from_sorted_terms(&self.ring, t)
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn make_monic(&self) -> Polynomial {
        let mut t = self.terms.clone();
        terms::make_monic(&self.field(), &mut t);
        Polynomial::from_sorted_terms(&self.ring, t)
    }

    /// Substitutes `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = Polynomial::zero(target);
        // cache of powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        for t in &self.terms {
            let mut term = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0u32; n];
                for (i, &x) in t.mono.exponents().iter().enumerate() {
                    e[var_map[i]] += x as u32;
                }
                (Monomial::from_exponents(&e), t.coeff.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables in a ring that differs only by order or guard.
    pub fn reorder(&self, target: &Arc<PolyRing>) -> Polynomial {
        if same_ring(&self.ring, target) {
            return self.clone();
        }
        assert_eq!(target.nvars(), self.ring.nvars());
        Polynomial {
            ring: target.clone(),
            terms: terms::normalize(&target.field(), &target.term_order(), self.terms.clone()),
        }
    }

    /// Raises every variable to the power `q`, keeping coefficients. Over
    /// `F_p` with `q = p^a` this is the `a`-fold Frobenius.
    pub fn inflate(&self, q: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.mono.pow(q), 0, t.coeff.clone()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let f = self.field();
        let ord = self.ring.term_order();
        let lead = divisor.terms.first()?;
        let inv = f.inv(&lead.coeff);
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(t) = rem.first() {
            if !lead.mono.divides(&t.mono) {
                return None;
            }
            let m = lead.mono.quotient_of(&t.mono);
            let c = f.mul(&t.coeff, &inv);
            rem = terms::axpy(&f, &ord, &rem, &f.neg(&c), &m, &divisor.terms);
            quot.push(Term::new(m, 0, c));
        }
        Some(Polynomial::from_sorted_terms(
            &self.ring,
            terms::normalize(&f, &ord, quot),
        ))
    }

    /// Parses the canonical text form, e.g. `x0^2*x1 - 3*x2`.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(ring, text)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative(&field);
            let abs = if neg { field.neg(&t.coeff) } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&t.mono, self.ring.var_names());
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{}", abs.display_in(&field))?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{mono}", abs.display_in(&field))?,
            }
        }
        Ok(())
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            e => parts.push(format!("{}^{e}", names[i])),
        }
    }
    parts.join("*")
}


#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(Field::Rational, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x.add(&y).pow(2);
        assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2");
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.div_exact(&x.add(&y)).unwrap(), x.add(&y));
        assert!(p.div_exact(&x).is_none());
    }

    #[test]
    fn substitution() {
        let r = ring();
        let p = Polynomial::parse(&r, "x^2 - y").unwrap();
        let t = Polynomial::parse(&r, "z + 1").unwrap();
        let q = p.substitute(&r, &[t.clone(), Polynomial::zero(&r), Polynomial::var(&r, 2)]);
        assert_eq!(q, t.pow(2));
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        assert!(Polynomial::parse(&r, "x*y - z^2").unwrap().is_homogeneous());
        assert!(!Polynomial::parse(&r, "x*y - z").unwrap().is_homogeneous());
        let w = r.with_weights(vec![1, 1, 2]).unwrap();
        assert!(Polynomial::parse(&w, "x*y - z").unwrap().is_homogeneous());
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(Field::Rational, &["x", "x"]).is_err());
        assert!(PolyRing::new(Field::Rational, &["1x"]).is_err());
    }

    #[test]
    fn prime_field_printing_uses_symmetric_residues() {
        let r = PolyRing::new(Field::Prime(7), &["x"]).unwrap();
        let p = Polynomial::parse(&r, "x - 3").unwrap();
        assert_eq!(p.to_string(), "x - 3");
        let q = Polynomial::parse(&r, "x + 4").unwrap();
        assert_eq!(q, p);
    }
}
