//! Buchberger's algorithm over free modules `A^r`.
//!
//! Polynomials are the rank-one case (every term in component 0). Pairs are
//! processed by smallest (shifted) degree of their lcm, then by the term
//! order, then by generator index; the Gebauer–Möller update discards
//! redundant pairs. The coprime-leading-term criterion is applied only in
//! rank one.

use std::cmp::Ordering;

use super::coeff::Field;
use super::monomial::{Monomial, TermOrder};
use super::terms::{self, Term};
use crate::error::{Error, Result};

/// Parameters of a Gröbner basis computation.
#[derive(Clone, Debug)]
pub(crate) struct GbConfig {
    pub field: Field,
    pub ord: TermOrder,
    pub max_degree: u32,
    /// Degree offset of each basis vector `e_c`; missing entries are 0.
    pub shifts: Vec<i64>,
}

impl GbConfig {
    pub fn new(field: Field, ord: TermOrder, max_degree: u32) -> Self {
        GbConfig {
            field,
            ord,
            max_degree,
            shifts: Vec::new(),
        }
    }

    fn shift(&self, comp: u32) -> i64 {
        self.shifts.get(comp as usize).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
struct Lead {
    mono: Monomial,
    comp: u32,
    mask: u64,
}

fn lead_of(v: &[Term]) -> Lead {
    let t = &v[0];
    Lead {
        mono: t.mono.clone(),
        comp: t.comp,
        mask: t.mono.support_mask(),
    }
}

/// Reducers indexed by their leading terms.
#[derive(Default)]
pub(crate) struct Reducers {
    elems: Vec<Vec<Term>>,
    leads: Vec<Lead>,
}

impl Reducers {
    pub fn new(elems: Vec<Vec<Term>>) -> Self {
        let leads = elems.iter().map(|e| lead_of(e)).collect();
        Reducers { elems, leads }
    }

    fn push(&mut self, e: Vec<Term>) {
        self.leads.push(lead_of(&e));
        self.elems.push(e);
    }

    fn find_divisor(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        let mask = t.mono.support_mask();
        self.leads.iter().enumerate().find_map(|(i, l)| {
            (Some(i) != skip
                && l.comp == t.comp
                && l.mask & !mask == 0
                && l.mono.divides(&t.mono))
            .then_some(i)
        })
    }
}

fn degree_check(cfg: &GbConfig, v: &[Term]) -> Result<()> {
    if let Some(d) = v.iter().map(|t| t.mono.degree()).max() {
        if d > cfg.max_degree {
            return Err(Error::DegreeGuard {
                degree: d,
                cap: cfg.max_degree,
            });
        }
    }
    Ok(())
}

/// Full reduction of `p`: no term of the result is divisible by a leading
/// term of a reducer (other than `skip`).
fn reduce_inner(
    cfg: &GbConfig,
    p: Vec<Term>,
    red: &Reducers,
    skip: Option<usize>,
    mut quotients: Option<&mut Vec<Vec<Term>>>,
) -> Result<Vec<Term>> {
    let f = &cfg.field;
    let mut rest = p;
    let mut start = 0usize;
    let mut out: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while start < rest.len() {
        match red.find_divisor(&rest[start], skip) {
            Some(i) => {
                let g = &red.elems[i];
                let m = g[0].mono.quotient_of(&rest[start].mono);
                let c = f.div(&rest[start].coeff, &g[0].coeff);
                if let Some(q) = quotients.as_deref_mut() {
                    q[i] = terms::axpy(
                        f,
                        &cfg.ord,
                        &q[i],
                        &c,
                        &m,
                        &[Term::new(Monomial::one(m.nvars()), 0, f.one())],
                    );
                }
                rest = terms::axpy(f, &cfg.ord, &rest[start..], &f.neg(&c), &m, g);
                start = 0;
                steps += 1;
                if steps.is_multiple_of(64) {
                    degree_check(cfg, &rest)?;
                }
            }
            None => {
                out.push(rest[start].clone());
                start += 1;
            }
        }
    }
    Ok(out)
}

pub(crate) fn reduce(cfg: &GbConfig, p: &[Term], basis: &[Vec<Term>]) -> Result<Vec<Term>> {
    let red = Reducers::new(basis.iter().filter(|b| !b.is_empty()).cloned().collect());
    reduce_inner(cfg, p.to_vec(), &red, None, None)
}


#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    key: i64,
}

fn pair_cmp(ord: &TermOrder, a: &Pair, b: &Pair) -> Ordering {
    a.key
        .cmp(&b.key)
        .then_with(|| ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

fn spoly(cfg: &GbConfig, a: &[Term], b: &[Term], lcm: &Monomial) -> Vec<Term> {
    let f = &cfg.field;
    let ma = a[0].mono.quotient_of(lcm);
    let mb = b[0].mono.quotient_of(lcm);
    let ca = f.inv(&a[0].coeff);
    let cb = f.neg(&f.inv(&b[0].coeff));
    let left = terms::axpy(f, &cfg.ord, &[], &ca, &ma, &a[1..]);
    terms::axpy(f, &cfg.ord, &left, &cb, &mb, &b[1..])
}

struct Engine<'a> {
    cfg: &'a GbConfig,
    ideal_case: bool,
    red: Reducers,
    alive: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine<'_> {
    fn update(&mut self, k: usize) {
        let lk = self.red.leads[k].clone();
        // chain criterion on the existing pairs
        self.pairs.retain(|p| {
            if p.comp != lk.comp || !lk.mono.divides(&p.lcm) {
                return true;
            }
            let li = &self.red.leads[p.i].mono;
            let lj = &self.red.leads[p.j].mono;
            li.lcm(&lk.mono) == p.lcm || lj.lcm(&lk.mono) == p.lcm
        });
        let mut fresh: Vec<(Pair, bool)> = Vec::new();
        for i in 0..k {
            if !self.alive[i] || self.red.leads[i].comp != lk.comp {
                continue;
            }
            let li = &self.red.leads[i].mono;
            let lcm = li.lcm(&lk.mono);
            let key = lcm.degree() as i64 + self.cfg.shift(lk.comp);
            let coprime = li.is_coprime(&lk.mono);
            fresh.push((
                Pair {
                    i,
                    j: k,
                    lcm,
                    comp: lk.comp,
                    key,
                },
                coprime,
            ));
        }
        // drop pairs whose lcm is a proper multiple of another new lcm
        let lcms: Vec<Monomial> = fresh.iter().map(|(p, _)| p.lcm.clone()).collect();
        fresh.retain(|(p, _)| !lcms.iter().any(|l| *l != p.lcm && l.divides(&p.lcm)));
        // one pair per lcm; in rank one a coprime member discards the class
        let mut kept: Vec<Pair> = Vec::new();
        let mut seen: Vec<(Monomial, bool)> = Vec::new();
        for (p, coprime) in &fresh {
            if let Some(s) = seen.iter_mut().find(|(l, _)| *l == p.lcm) {
                s.1 |= *coprime;
                continue;
            }
            seen.push((p.lcm.clone(), *coprime));
            kept.push(p.clone());
        }
        for p in kept {
            let class_coprime = seen.iter().any(|(l, c)| *l == p.lcm && *c);
            if self.ideal_case && class_coprime {
                continue;
            }
            self.pairs.push(p);
        }
        // elements whose lead is a multiple of the new lead stop pairing
        for i in 0..k {
            if self.alive[i] && lk.comp == self.red.leads[i].comp && lk.mono.divides(&self.red.leads[i].mono) {
                self.alive[i] = false;
            }
        }
    }

    fn add(&mut self, v: Vec<Term>) -> Result<()> {
        let mut v = v;
        terms::make_monic(&self.cfg.field, &mut v);
        self.red.push(v);
        self.alive.push(true);
        let k = self.red.elems.len() - 1;
        self.update(k);
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.cfg.ord;
        let (idx, _) = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|a, b| pair_cmp(&ord, a.1, b.1))?;
        Some(self.pairs.swap_remove(idx))
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
/// increasing leading term.
pub(crate) fn groebner(cfg: &GbConfig, gens: &[Vec<Term>]) -> Result<Vec<Vec<Term>>> {
    let ideal_case = gens.iter().flatten().all(|t| t.comp == 0);
    let mut eng = Engine {
        cfg,
        ideal_case,
        red: Reducers::default(),
        alive: Vec::new(),
        pairs: Vec::new(),
    };
    let mut input: Vec<Vec<Term>> = gens
        .iter()
        .map(|g| terms::normalize(&cfg.field, &cfg.ord, g.clone()))
        .filter(|g| !g.is_empty())
        .collect();
    // small leading terms first so later inputs get reduced by them
    input.sort_by(|a, b| cfg.ord.cmp(&a[0].mono, a[0].comp, &b[0].mono, b[0].comp));
    for g in input {
        degree_check(cfg, &g)?;
        let r = reduce_inner(cfg, g, &eng.red, None, None)?;
        if !r.is_empty() {
            degree_check(cfg, &r)?;
            if ideal_case && is_unit(&r) {
                return Ok(vec![r_unit(cfg, &r)]);
            }
            eng.add(r)?;
        }
    }
    while let Some(p) = eng.next_pair() {
        if p.lcm.degree() > cfg.max_degree {
            return Err(Error::DegreeGuard {
                degree: p.lcm.degree(),
                cap: cfg.max_degree,
            });
        }
        let s = spoly(cfg, &eng.red.elems[p.i], &eng.red.elems[p.j], &p.lcm);
        let r = reduce_inner(cfg, s, &eng.red, None, None)?;
        if r.is_empty() {
            continue;
        }
        degree_check(cfg, &r)?;
        if ideal_case && is_unit(&r) {
            return Ok(vec![r_unit(cfg, &r)]);
        }
        eng.add(r)?;
    }
    interreduce(cfg, eng.red.elems)
}

fn is_unit(v: &[Term]) -> bool {
    v.len() == 1 && v[0].mono.is_one()
}

fn r_unit(cfg: &GbConfig, v: &[Term]) -> Vec<Term> {
    vec![Term::new(v[0].mono.clone(), v[0].comp, cfg.field.one())]
}

/// Minimal, fully reduced, monic basis from a Gröbner basis.
fn interreduce(cfg: &GbConfig, elems: Vec<Vec<Term>>) -> Result<Vec<Vec<Term>>> {
    let leads: Vec<Lead> = elems.iter().map(|e| lead_of(e)).collect();
    let mut keep = vec![true; elems.len()];
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].comp == leads[i].comp && leads[j].mono.divides(&leads[i].mono) {
                // equal leads: keep the earlier element
                if leads[j].mono != leads[i].mono || j < i {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Vec<Term>> = elems
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    let red = Reducers::new(minimal.clone());
    let mut out: Vec<Vec<Term>> = minimal
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let head = e[0].clone();
            let tail = reduce_inner(cfg, e[1..].to_vec(), &red, Some(i), None)?;
            let mut v = vec![head];
            v.extend(tail);
            terms::make_monic(&cfg.field, &mut v);
            Ok(v)
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| cfg.ord.cmp(&a[0].mono, a[0].comp, &b[0].mono, b[0].comp));
    Ok(out)
}

/// True when every S-vector of `basis` reduces to zero.
pub(crate) fn is_groebner(cfg: &GbConfig, basis: &[Vec<Term>]) -> Result<bool> {
    let red = Reducers::new(basis.to_vec());
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if basis[i][0].comp != basis[j][0].comp {
                continue;
            }
            let lcm = basis[i][0].mono.lcm(&basis[j][0].mono);
            let s = spoly(cfg, &basis[i], &basis[j], &lcm);
            if !reduce_inner(cfg, s, &red, None, None)?.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
