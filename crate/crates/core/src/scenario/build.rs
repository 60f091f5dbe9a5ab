//! Resolution of scenario statements into rings, modules, maps and ideals.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::syntax::{perr, Expr, Line, Name, Stmt};
use crate::degeneracy::BilinearMap;
use crate::error::{Error, Result};
use crate::module::{dual, hom_module, FPModule, HomModule, ModuleMap, SymAlgebra, Vector};
use crate::ring::{Field, Ideal, Monomial, MonomialOrder, PolyMatrix, PolyRing, Polynomial};

/// Settings that override what a scenario declares.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub characteristic: Option<u32>,
    pub order: Option<MonomialOrder>,
    pub max_degree: Option<u32>,
    pub seed: Option<u64>,
    pub a_max: Option<u32>,
}

#[derive(Clone, Debug)]
pub enum Object {
    Ring(Arc<PolyRing>),
    Module {
        module: FPModule,
        hom: Option<HomModule>,
    },
    Element {
        module: String,
        coords: Vector,
    },
    Map(ModuleMap),
    Bilinear(BilinearMap),
    Ideal {
        ideal: Ideal,
        sym_of: Option<String>,
    },
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Ring(_) => "ring",
            Object::Module { .. } => "module",
            Object::Element { .. } => "element",
            Object::Map(_) => "map",
            Object::Bilinear(_) => "bilinear map",
            Object::Ideal { .. } => "ideal",
        }
    }
}

/// Declared objects by name.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub objects: HashMap<String, Object>,
    pub order: Vec<String>,
    pub seed: u64,
    sym: HashMap<String, SymAlgebra>,
}

pub fn parse_order(s: &str) -> Option<MonomialOrder> {
    match s {
        "grevlex" => Some(MonomialOrder::GrevLex),
        "lex" => Some(MonomialOrder::Lex),
        _ => s
            .strip_prefix("block:")
            .and_then(|k| k.parse().ok())
            .map(MonomialOrder::Block),
    }
}

pub fn order_name(o: MonomialOrder) -> String {
    match o {
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::Block(k) => format!("block:{k}"),
    }
}

/// Attaches a position to an error raised while building.
fn at(line: usize, column: usize, e: Error) -> Error {
    match e {
        Error::Parse { column: c, message, .. } => perr(line, column + c - 1, message),
        Error::DegreeGuard { .. } => e,
        other => perr(line, column, other.to_string()),
    }
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    fn lookup(&self, line: usize, n: &Name) -> Result<&Object> {
        self.objects
            .get(&n.text)
            .ok_or_else(|| perr(line, n.column, format!("undeclared identifier `{}`", n.text)))
    }

    pub fn module(&self, name: &str) -> Option<(&FPModule, Option<&HomModule>)> {
        match self.objects.get(name) {
            Some(Object::Module { module, hom }) => Some((module, hom.as_ref())),
            _ => None,
        }
    }

    fn module_at(&self, line: usize, n: &Name) -> Result<(&FPModule, Option<&HomModule>)> {
        match self.lookup(line, n)? {
            Object::Module { module, hom } => Ok((module, hom.as_ref())),
            o => Err(perr(line, n.column, format!("`{}` is a {}, not a module", n.text, o.kind()))),
        }
    }

    /// The symmetric algebra of a declared module, built once.
    pub fn symmetric_algebra(&mut self, name: &str) -> Result<SymAlgebra> {
        if let Some(s) = self.sym.get(name) {
            return Ok(s.clone());
        }
        let (m, _) = self
            .module(name)
            .ok_or_else(|| Error::InvalidInput(format!("`{name}` is not a module")))?;
        let s = crate::module::symmetric_algebra(m)?;
        self.sym.insert(name.to_string(), s.clone());
        Ok(s)
    }

    fn insert(&mut self, line: usize, name: &Name, obj: Object) -> Result<()> {
        if self.objects.contains_key(&name.text) {
            return Err(perr(line, name.column, format!("`{}` is already declared", name.text)));
        }
        self.order.push(name.text.clone());
        self.objects.insert(name.text.clone(), obj);
        Ok(())
    }
}

fn parse_poly(ring: &Arc<PolyRing>, line: usize, e: &Expr) -> Result<Polynomial> {
    Polynomial::parse(ring, &e.text).map_err(|err| at(line, e.column, err))
}

fn parse_row(ring: &Arc<PolyRing>, line: usize, row: &[Expr]) -> Result<Vector> {
    row.iter().map(|e| parse_poly(ring, line, e)).collect()
}

fn canonical(p: &Polynomial, e: &Expr) -> Expr {
    Expr {
        text: p.to_string(),
        column: e.column,
    }
}

fn random_poly(ring: &Arc<PolyRing>, degree: i64, rng: &mut ChaCha8Rng) -> Polynomial {
    if degree < 0 {
        return Polynomial::zero(ring);
    }
    let n = ring.nvars();
    let mut monos = Vec::new();
    let mut cur = vec![0u32; n];
    fn go(i: usize, left: i64, w: &[i32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if w[i] <= 0 {
            go(i + 1, left, w, cur, out);
            return;
        }
        let mut e = 0;
        while e as i64 * w[i] as i64 <= left {
            cur[i] = e;
            go(i + 1, left - e as i64 * w[i] as i64, w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    go(0, degree, ring.weights(), &mut cur, &mut monos);
    let field = ring.field();
    let mut terms = Vec::new();
    for e in monos {
        if rng.gen_bool(0.5) {
            terms.push((Monomial::from_exponents(&e), field.from_i64(rng.gen_range(-3..=3))));
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Builds every declared object in order.
pub fn build(lines: &mut [Line], ov: &Overrides) -> Result<Env> {
    let mut env = Env {
        seed: ov.seed.unwrap_or(0),
        ..Env::default()
    };
    let mut ring: Option<Arc<PolyRing>> = None;
    for l in lines.iter_mut() {
        let line = l.line;
        let current = |ring: &Option<Arc<PolyRing>>| -> Result<Arc<PolyRing>> {
            ring.clone()
                .ok_or_else(|| perr(line, 1, "no ring has been declared"))
        };
        match &mut l.stmt {
            Stmt::Ring { name, field, vars, weights, order } => {
                let p = ov.characteristic.unwrap_or(*field);
                let f = Field::from_characteristic(p).map_err(|e| at(line, name.column, e))?;
                let ord = match (ov.order, order.as_deref()) {
                    (Some(o), _) => o,
                    (None, Some(s)) => parse_order(s)
                        .ok_or_else(|| perr(line, 1, format!("unknown monomial order `{s}`")))?,
                    (None, None) => MonomialOrder::GrevLex,
                };
                let w = weights.clone().unwrap_or_else(|| vec![1; vars.len()]);
                let r = PolyRing::build(
                    f,
                    vars.clone(),
                    w,
                    ord,
                    ov.max_degree.unwrap_or(crate::ring::DEFAULT_MAX_DEGREE),
                )
                .map_err(|e| at(line, name.column, e))?;
                env.insert(line, name, Object::Ring(r.clone()))?;
                ring = Some(r);
            }
            Stmt::Seed(s) => {
                if ov.seed.is_none() {
                    env.seed = *s;
                }
            }
            Stmt::Module { name, gens, rels } => {
                let r = current(&ring)?;
                let mut rows = Vec::new();
                for row in rels.iter_mut() {
                    if row.len() != gens.len() {
                        return Err(perr(line, name.column, format!(
                            "relation with {} entries for {} generators",
                            row.len(),
                            gens.len()
                        )));
                    }
                    let v = parse_row(&r, line, row)?;
                    for (e, p) in row.iter_mut().zip(&v) {
                        *e = canonical(p, e);
                    }
                    rows.push(v);
                }
                let m = FPModule::from_relations(&r, gens.clone(), rows)
                    .map_err(|e| at(line, name.column, e))?;
                env.insert(line, name, Object::Module { module: m, hom: None })?;
            }
            Stmt::Dual { name, of } => {
                let (m, _) = env.module_at(line, of)?;
                let h = dual(m).map_err(|e| at(line, of.column, e))?;
                env.insert(line, name, Object::Module { module: h.module().clone(), hom: Some(h) })?;
            }
            Stmt::Hom { name, source, target } => {
                let (m, _) = env.module_at(line, source)?;
                let (n, _) = env.module_at(line, target)?;
                let h = hom_module(m, n).map_err(|e| at(line, source.column, e))?;
                env.insert(line, name, Object::Module { module: h.module().clone(), hom: Some(h) })?;
            }
            Stmt::Element { name, module, values, entries } => {
                let (m, hom) = env.module_at(line, module)?;
                let r = m.ring().clone();
                let v = parse_row(&r, line, entries)?;
                for (e, p) in entries.iter_mut().zip(&v) {
                    *e = canonical(p, e);
                }
                let coords = if *values {
                    let h = hom.ok_or_else(|| {
                        perr(line, module.column, format!("`{}` is not a module of maps", module.text))
                    })?;
                    h.element_of_flat(&v).map_err(|e| at(line, name.column, e))?
                } else {
                    m.check_element(&v).map_err(|e| at(line, name.column, e))?;
                    v
                };
                env.insert(line, name, Object::Element { module: module.text.clone(), coords })?;
            }
            Stmt::Map { name, source, target, degree, random, rows } => {
                let (m, _) = env.module_at(line, source)?;
                let (n, _) = env.module_at(line, target)?;
                let (m, n) = (m.clone(), n.clone());
                let r = m.ring().clone();
                let images: Vec<Vector> = if *random {
                    if !m.is_free() {
                        return Err(perr(line, source.column, "random maps need a free source"));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(env.seed ^ fnv(&name.text));
                    (0..m.ngens())
                        .map(|j| {
                            (0..n.ngens())
                                .map(|k| {
                                    let d = m.gen_degrees()[j] + *degree - n.gen_degrees()[k];
                                    random_poly(&r, d, &mut rng)
                                })
                                .collect()
                        })
                        .collect()
                } else {
                    let mut out = Vec::new();
                    for row in rows.iter_mut() {
                        let v = parse_row(&r, line, row)?;
                        for (e, p) in row.iter_mut().zip(&v) {
                            *e = canonical(p, e);
                        }
                        out.push(v);
                    }
                    out
                };
                let f = ModuleMap::new(&m, &n, images, *degree).map_err(|e| at(line, name.column, e))?;
                env.insert(line, name, Object::Map(f))?;
            }
            Stmt::Bilinear { name, module, alternating, rows } => {
                let (m, _) = env.module_at(line, module)?;
                let m = m.clone();
                let r = m.ring().clone();
                let mut mat = Vec::new();
                for row in rows.iter_mut() {
                    let v = parse_row(&r, line, row)?;
                    for (e, p) in row.iter_mut().zip(&v) {
                        *e = canonical(p, e);
                    }
                    mat.push(v);
                }
                let mat = PolyMatrix::from_rows(&r, mat).map_err(|e| at(line, name.column, e))?;
                let b = BilinearMap::from_matrix(&m, &mat, *alternating).map_err(|e| at(line, name.column, e))?;
                env.insert(line, name, Object::Bilinear(b))?;
            }
            Stmt::Ideal { name, sym_of, gens } => {
                let r = match sym_of {
                    Some(m) => {
                        env.module_at(line, m)?;
                        env.symmetric_algebra(&m.text).map_err(|e| at(line, m.column, e))?.ring().clone()
                    }
                    None => current(&ring)?,
                };
                let v = parse_row(&r, line, gens)?;
                for (e, p) in gens.iter_mut().zip(&v) {
                    *e = canonical(p, e);
                }
                let ideal = Ideal::new(&r, v).map_err(|e| at(line, name.column, e))?;
                env.insert(
                    line,
                    name,
                    Object::Ideal {
                        ideal,
                        sym_of: sym_of.as_ref().map(|m| m.text.clone()),
                    },
                )?;
            }
            Stmt::Task { .. } => {}
        }
    }
    Ok(env)
}

/// A stable hash so that random objects depend only on seed and name.
fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}
