//! Execution of scenario tasks and report formatting.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::build::{Env, Object};
use super::syntax::{perr, Name};
use super::Scenario;
use crate::ampleness::{ample_check, p_ample_check};
use crate::connectedness::{
    connected_in_dimension, monomial_minimal_primes, verify_component_set, ComponentSet,
};
use crate::degeneracy::{
    bilinear_determinantal_ideal, bilinear_ideal, determinantal_ideal, generic_determinantal_ideal,
    lift_phi, order_ideal, phi_specialize, psi_homogenize, verify_dimension_bound, DegeneracySpec,
    Verdict,
};
use crate::error::{Error, Result};
use crate::module::Vector;
use crate::ring::Ideal;

/// Flags that affect how tasks run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub dry_run: bool,
    pub parallel: bool,
    pub a_max: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Holds,
    Violated,
    HypothesisUnmet,
    Skipped,
    Error,
    Resource,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::HypothesisUnmet => "hypothesis-unmet",
            Status::Skipped => "skipped",
            Status::Error => "error",
            Status::Resource => "resource",
        }
    }

    fn from_verdict(v: Verdict) -> Status {
        match v {
            Verdict::Holds => Status::Holds,
            Verdict::Violated => Status::Violated,
            Verdict::HypothesisUnmet => Status::HypothesisUnmet,
        }
    }
}

/// One line of the JSON Lines report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TaskRecord {
    pub index: usize,
    pub line: usize,
    pub task: String,
    pub status: Status,
    pub result: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub records: Vec<TaskRecord>,
}

impl Report {
    pub fn violations(&self) -> usize {
        self.count(Status::Violated)
    }

    pub fn errors(&self) -> usize {
        self.count(Status::Error)
    }

    pub fn resource_failures(&self) -> usize {
        self.count(Status::Resource)
    }

    fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    /// `0` when nothing was violated or failed, `1` for violations and
    /// errors, `3` when only the degree guard stopped a task.
    pub fn exit_code(&self) -> i32 {
        if self.violations() + self.errors() > 0 {
            1
        } else if self.resource_failures() > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut v = serde_json::to_value(r).expect("records serialize");
            v["scenario"] = Value::String(self.scenario.clone());
            out.push_str(&serde_json::to_string(&v).expect("values serialize"));
            out.push('\n');
        }
        out
    }

    pub fn summary_line(&self) -> String {
        let mut counts: Vec<(Status, usize)> = Vec::new();
        for r in &self.records {
            match counts.iter_mut().find(|(s, _)| *s == r.status) {
                Some((_, c)) => *c += 1,
                None => counts.push((r.status, 1)),
            }
        }
        let parts: Vec<String> = counts.iter().map(|(s, c)| format!("{} {c}", s.as_str())).collect();
        format!(
            "{}: {} tasks{}{}",
            self.scenario,
            self.records.len(),
            if parts.is_empty() { "" } else { ", " },
            parts.join(", ")
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!(
                "{} line {} {}: {}{}\n",
                self.scenario,
                r.line,
                r.task,
                r.status.as_str(),
                brief(&r.result)
            ));
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }
}

fn brief(v: &Value) -> String {
    let keys = ["ideal", "dimension", "equal", "homogeneous", "dim_locus", "bound", "connected", "meets", "summary", "message"];
    let parts: Vec<String> = keys
        .iter()
        .filter_map(|k| v.get(*k).map(|x| format!("{k}={}", compact(x))))
        .collect();
    if parts.is_empty() {
        String::new()
    } else {
        format!(" ({})", parts.join(", "))
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) => o
            .get("summary")
            .map(compact)
            .unwrap_or_else(|| v.to_string()),
        _ => v.to_string(),
    }
}

struct Task<'a> {
    line: usize,
    kind: &'a Name,
    params: HashMap<&'a str, &'a Name>,
}

impl<'a> Task<'a> {
    fn get(&self, key: &str) -> Option<&'a Name> {
        self.params.get(key).copied()
    }

    fn req(&self, key: &str) -> Result<&'a Name> {
        self.get(key)
            .ok_or_else(|| perr(self.line, self.kind.column, format!("task `{}` needs `{key}=`", self.kind.text)))
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key) {
            None => Ok(None),
            Some(n) => n
                .text
                .parse()
                .map(Some)
                .map_err(|_| perr(self.line, n.column, format!("`{key}` expects a number"))),
        }
    }

    fn list(&self, key: &str) -> Result<Vec<usize>> {
        let n = self.req(key)?;
        n.text
            .split(',')
            .map(|s| s.parse().map_err(|_| perr(self.line, n.column, format!("`{key}` expects numbers"))))
            .collect()
    }
}

const KINDS: &[&str] = &[
    "groebner",
    "dimension",
    "order_ideal",
    "determinantal",
    "generic",
    "bound",
    "specialize",
    "homogenize",
    "connectedness",
    "intersects",
    "p_ample",
    "ample",
];

/// Checks task kinds, parameters and referenced names without computing.
pub(crate) fn validate_tasks(s: &Scenario) -> Result<()> {
    for (line, kind, params) in s.tasks() {
        if !KINDS.contains(&kind.text.as_str()) {
            return Err(perr(line, kind.column, format!("unknown task `{}`", kind.text)));
        }
        for (k, v) in params {
            let is_name = matches!(
                k.as_str(),
                "ideal" | "other" | "element" | "map" | "bilinear" | "module" | "source" | "target" | "form"
            );
            if is_name && s.env.get(&v.text).is_none() {
                return Err(perr(line, v.column, format!("undeclared identifier `{}`", v.text)));
            }
            if k == "components" && v.text != "monomial" {
                let mut col = v.column;
                for part in v.text.split(',') {
                    if s.env.get(part).is_none() {
                        return Err(perr(line, col, format!("undeclared identifier `{part}`")));
                    }
                    col += part.chars().count() + 1;
                }
            }
            if k == "elements" {
                for part in v.text.split(',') {
                    if s.env.get(part).is_none() {
                        return Err(perr(line, v.column, format!("undeclared identifier `{part}`")));
                    }
                }
            }
        }
    }
    Ok(())
}

fn ideal_json(i: &Ideal) -> Value {
    Value::Array(i.gens().iter().map(|g| Value::String(g.to_string())).collect())
}

fn ideal<'e>(env: &'e Env, line: usize, n: &Name) -> Result<(&'e Ideal, Option<&'e String>)> {
    match env.get(&n.text) {
        Some(Object::Ideal { ideal, sym_of }) => Ok((ideal, sym_of.as_ref())),
        _ => Err(perr(line, n.column, format!("`{}` is not an ideal", n.text))),
    }
}

fn element<'e>(env: &'e Env, line: usize, n: &Name) -> Result<(&'e String, &'e Vector)> {
    match env.get(&n.text) {
        Some(Object::Element { module, coords }) => Ok((module, coords)),
        _ => Err(perr(line, n.column, format!("`{}` is not an element", n.text))),
    }
}

fn homogenize_record(lift: &crate::degeneracy::LiftedPhi) -> Result<(Status, Value)> {
    match psi_homogenize(lift) {
        Ok(h) => Ok((
            Status::Holds,
            json!({
                "homogeneous": true,
                "shifts": h.shifts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "images": h.images.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }),
        )),
        Err(Error::Hypothesis(msg)) => Ok((
            Status::HypothesisUnmet,
            json!({ "homogeneous": false, "message": msg }),
        )),
        Err(e) => Err(e),
    }
}

fn run_task(env: &Env, t: &Task, opts: &RunOptions) -> Result<(Status, Value)> {
    let line = t.line;
    let a_max = opts.a_max;
    match t.kind.text.as_str() {
        "groebner" => {
            let (i, _) = ideal(env, line, t.req("ideal")?)?;
            let gb = i.groebner_basis()?;
            let basis: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
            Ok((Status::Ok, json!({ "basis": basis })))
        }
        "dimension" => {
            let (i, _) = ideal(env, line, t.req("ideal")?)?;
            Ok((Status::Ok, json!({ "dimension": i.krull_dimension()? })))
        }
        "intersects" => {
            let (a, _) = ideal(env, line, t.req("ideal")?)?;
            let (b, _) = ideal(env, line, t.req("other")?)?;
            let sum = a.add(b)?;
            Ok((Status::Ok, json!({ "meets": !sum.is_unit()?, "dimension": sum.krull_dimension()? })))
        }
        "order_ideal" => {
            let (m, coords) = element(env, line, t.req("element")?)?;
            let (module, _) = env.module(m).expect("resolved at build time");
            let i = order_ideal(module, coords)?;
            Ok((Status::Ok, json!({ "ideal": ideal_json(&i), "dimension": i.krull_dimension()? })))
        }
        "determinantal" => {
            let tt: usize = t.num("t")?.unwrap_or(0);
            let i = if let Some(n) = t.get("map") {
                match env.get(&n.text) {
                    Some(Object::Map(f)) => determinantal_ideal(f, tt)?,
                    _ => return Err(perr(line, n.column, format!("`{}` is not a map", n.text))),
                }
            } else {
                let n = t.req("bilinear")?;
                match env.get(&n.text) {
                    Some(Object::Bilinear(b)) => bilinear_ideal(b, tt)?,
                    _ => return Err(perr(line, n.column, format!("`{}` is not a bilinear map", n.text))),
                }
            };
            Ok((Status::Ok, json!({ "t": tt, "ideal": ideal_json(&i), "dimension": i.krull_dimension()? })))
        }
        "generic" => {
            let tt: usize = t.num("t")?.unwrap_or(0);
            let src = t.req("source")?;
            let (m, _) = env.module(&src.text).ok_or_else(|| perr(line, src.column, "not a module"))?;
            let flavor = t.get("flavor").map_or("generic", |n| n.text.as_str());
            let tgt = t.req("target")?;
            let (n, _) = env.module(&tgt.text).ok_or_else(|| perr(line, tgt.column, "not a module"))?;
            let g = match flavor {
                "generic" => generic_determinantal_ideal(m, n, tt)?,
                "symmetric" => bilinear_determinantal_ideal(m, n, tt, false)?,
                "alternating" => bilinear_determinantal_ideal(m, n, tt, true)?,
                other => {
                    let c = t.get("flavor").map_or(t.kind.column, |n| n.column);
                    return Err(perr(line, c, format!("unknown flavor `{other}`")));
                }
            };
            let dim = g.sym.quotient_dimension(&g.ideal)?;
            let whole = g.sym.quotient_dimension(&Ideal::zero(g.sym.ring()))?;
            Ok((
                Status::Ok,
                json!({
                    "flavor": flavor,
                    "t": tt,
                    "generators": g.ideal.gens().len(),
                    "ambient_dimension": whole,
                    "dimension": dim,
                }),
            ))
        }
        "bound" => {
            let tt: usize = t.num("t")?.unwrap_or(0);
            let ranks = t.list("ranks")?;
            let rank = |i: usize| -> Result<usize> {
                ranks
                    .get(i)
                    .copied()
                    .ok_or_else(|| perr(line, t.kind.column, "`ranks=` has too few entries"))
            };
            let spec = if let Some(n) = t.get("map") {
                match env.get(&n.text) {
                    Some(Object::Map(f)) => DegeneracySpec::generic(f.clone(), tt, rank(0)?, rank(1)?)?,
                    _ => return Err(perr(line, n.column, format!("`{}` is not a map", n.text))),
                }
            } else if let Some(n) = t.get("bilinear") {
                match env.get(&n.text) {
                    Some(Object::Bilinear(b)) => DegeneracySpec::bilinear(b.clone(), tt, rank(0)?)?,
                    _ => return Err(perr(line, n.column, format!("`{}` is not a bilinear map", n.text))),
                }
            } else {
                let (m, coords) = element(env, line, t.req("element")?)?;
                let (module, _) = env.module(m).expect("resolved at build time");
                DegeneracySpec::order(module.clone(), coords.clone(), rank(0)?)?
            };
            let spec = match t.num("a_max")?.or(a_max) {
                Some(a) => spec.with_a_max(a),
                None => spec,
            };
            let rep = verify_dimension_bound(&spec)?;
            let mut v = serde_json::to_value(&rep).expect("reports serialize");
            v["bound"] = json!(rep.bound());
            Ok((Status::from_verdict(rep.verdict), v))
        }
        "specialize" | "homogenize" if t.get("map").is_some() => {
            let n = t.req("map")?;
            let f = match env.get(&n.text) {
                Some(Object::Map(f)) => f,
                _ => return Err(perr(line, n.column, format!("`{}` is not a map", n.text))),
            };
            let tt: usize = t.num("t")?.unwrap_or(0);
            let g = generic_determinantal_ideal(f.source(), f.target(), tt)?;
            let h = g.hom.element_of(f.images())?;
            let values = g.values_of(&h)?;
            if t.kind.text == "specialize" {
                let special = phi_specialize(&g.sym, &values, &g.ideal)?;
                let direct = determinantal_ideal(f, tt)?;
                let equal = special.equals(&direct)?;
                let status = if equal { Status::Holds } else { Status::Violated };
                Ok((
                    status,
                    json!({
                        "t": tt,
                        "equal": equal,
                        "ideal": ideal_json(&special),
                        "dimension": special.krull_dimension()?,
                    }),
                ))
            } else {
                let duals = crate::module::dual(g.sym.module())?.flat_generators().to_vec();
                let lift = lift_phi(&g.sym, &values, &duals, &g.ideal)?;
                homogenize_record(&lift)
            }
        }
        "specialize" | "homogenize" => {
            let (fm, coords) = element(env, line, t.req("form")?)?;
            let form_name = t.req("form")?;
            let (_, hom) = env.module(fm).expect("resolved at build time");
            let hom = hom.ok_or_else(|| perr(line, form_name.column, "the form must lie in a dual module"))?;
            let e_mod = hom.source();
            // the symmetric algebra of the module the form is defined on
            let e_name = env
                .order
                .iter()
                .find(|n| env.module(n).is_some_and(|(m, _)| m == e_mod))
                .cloned();
            let values = hom.flatten(coords)?;
            let mut env2 = env.clone();
            let sym = match e_name {
                Some(n) => env2.symmetric_algebra(&n)?,
                None => crate::module::symmetric_algebra(e_mod)?,
            };
            let i = match t.get("ideal") {
                Some(n) => {
                    let (i, _) = ideal(env, line, n)?;
                    if !crate::ring::same_ring(i.ring(), sym.ring()) {
                        return Err(perr(line, n.column, "the ideal does not live in the symmetric algebra of the form's module"));
                    }
                    i.clone()
                }
                None => Ideal::zero(sym.ring()),
            };
            if t.kind.text == "specialize" {
                let s = phi_specialize(&sym, &values, &i)?;
                let base = Ideal::zero(sym.base()).krull_dimension()?;
                Ok((
                    Status::Ok,
                    json!({
                        "ideal": ideal_json(&s),
                        "dimension": s.krull_dimension()?,
                        "ambient_dimension": base,
                        "symmetric_dimension": sym.quotient_dimension(&i)?,
                    }),
                ))
            } else {
                let duals: Vec<Vector> = crate::module::dual(e_mod)?.flat_generators().to_vec();
                let lift = lift_phi(&sym, &values, &duals, &i)?;
                homogenize_record(&lift)
            }
        }
        "connectedness" => {
            let (i, _) = ideal(env, line, t.req("ideal")?)?;
            let d: i64 = t
                .num("d")?
                .ok_or_else(|| perr(line, t.kind.column, "task `connectedness` needs `d=`"))?;
            let comps = t.req("components")?;
            let cs: ComponentSet = if comps.text == "monomial" {
                monomial_minimal_primes(i)?
            } else {
                let mut cands = Vec::new();
                for part in comps.text.split(',') {
                    match env.get(part) {
                        Some(Object::Ideal { ideal, .. }) => cands.push(ideal.clone()),
                        _ => return Err(perr(line, comps.column, format!("`{part}` is not an ideal"))),
                    }
                }
                verify_component_set(i, cands)?
            };
            match connected_in_dimension(&cs, d) {
                Ok(rep) => {
                    let v = serde_json::to_value(&rep).expect("reports serialize");
                    Ok((Status::Ok, v))
                }
                Err(Error::Hypothesis(msg)) => Ok((
                    Status::HypothesisUnmet,
                    json!({ "component_dims": cs.dims(), "message": msg }),
                )),
                Err(e) => Err(e),
            }
        }
        "p_ample" | "ample" => {
            let mn = t.req("module")?;
            let (m, _) = env.module(&mn.text).ok_or_else(|| perr(line, mn.column, "not a module"))?;
            let mut gens: Vec<Vector> = Vec::new();
            if let Some(list) = t.get("elements") {
                for part in list.text.split(',') {
                    match env.get(part) {
                        Some(Object::Element { module, coords }) if module == &mn.text => gens.push(coords.clone()),
                        _ => {
                            return Err(perr(
                                line,
                                list.column,
                                format!("`{part}` is not an element of `{}`", mn.text),
                            ))
                        }
                    }
                }
            }
            let v = if t.kind.text == "p_ample" {
                let a: u32 = t.num("a_max")?.or(a_max).unwrap_or(3);
                p_ample_check(&gens, m, a)?
            } else {
                let n: u32 = t.num("n_max")?.unwrap_or(3);
                ample_check(&gens, m, n)?
            };
            Ok((Status::Ok, serde_json::to_value(&v).expect("verdicts serialize")))
        }
        other => Err(perr(line, t.kind.column, format!("unknown task `{other}`"))),
    }
}

fn record(index: usize, line: usize, kind: &str, outcome: Result<(Status, Value)>) -> TaskRecord {
    let (status, result) = match outcome {
        Ok(x) => x,
        Err(e) if e.is_resource() => (Status::Resource, json!({ "message": e.to_string() })),
        Err(e) => (Status::Error, json!({ "message": e.to_string() })),
    };
    TaskRecord {
        index,
        line,
        task: kind.to_string(),
        status,
        result,
    }
}

/// Runs every task; records come back in declaration order.
pub fn run(s: &Scenario, opts: &RunOptions) -> Report {
    let tasks: Vec<Task> = s
        .tasks()
        .map(|(line, kind, params)| Task {
            line,
            kind,
            params: params.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        })
        .collect();
    let exec = |(i, t): (usize, &Task)| -> TaskRecord {
        if opts.dry_run {
            return record(i, t.line, &t.kind.text, Ok((Status::Skipped, Value::Null)));
        }
        record(i, t.line, &t.kind.text, run_task(&s.env, t, opts))
    };
    let records = if opts.parallel && tasks.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = tasks
                .iter()
                .enumerate()
                .map(|it| scope.spawn(move || exec(it)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("task thread panicked"))
                .collect()
        })
    } else {
        tasks.iter().enumerate().map(exec).collect()
    };
    Report {
        scenario: s.name.clone(),
        records,
    }
}
