//! The line-oriented scenario format.
//!
//! ```text
//! ring A field 0 vars x y z
//! module M gens 0 0
//!   rel x, y
//! element v in M coords x, 1
//! ideal I = x*y, z
//! task dimension ideal=I
//! ```

use std::fmt;

use crate::error::{Error, Result};

/// A polynomial expression with the column where it starts.
#[derive(Clone, Debug)]
pub struct Expr {
    pub text: String,
    pub column: usize,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.text == other.text
    }
}

impl Eq for Expr {}

/// A name with the column where it appears.
#[derive(Clone, Debug)]
pub struct Name {
    pub text: String,
    pub column: usize,
}

impl PartialEq for Name {
    fn eq(&self, other: &Name) -> bool {
        self.text == other.text
    }
}

impl Eq for Name {}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring {
        name: Name,
        field: u32,
        vars: Vec<String>,
        weights: Option<Vec<i32>>,
        order: Option<String>,
    },
    Seed(u64),
    Module {
        name: Name,
        gens: Vec<i64>,
        rels: Vec<Vec<Expr>>,
    },
    Dual {
        name: Name,
        of: Name,
    },
    Hom {
        name: Name,
        source: Name,
        target: Name,
    },
    Element {
        name: Name,
        module: Name,
        /// Values on the source generators for modules of maps, otherwise
        /// coordinates on the generators.
        values: bool,
        entries: Vec<Expr>,
    },
    Map {
        name: Name,
        source: Name,
        target: Name,
        degree: i64,
        random: bool,
        rows: Vec<Vec<Expr>>,
    },
    Bilinear {
        name: Name,
        module: Name,
        alternating: bool,
        rows: Vec<Vec<Expr>>,
    },
    Ideal {
        name: Name,
        /// The module whose symmetric algebra holds the ideal.
        sym_of: Option<Name>,
        gens: Vec<Expr>,
    },
    Task {
        kind: Name,
        params: Vec<(String, Name)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub line: usize,
    pub stmt: Stmt,
}

pub(crate) fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn word(&mut self) -> Option<Name> {
        self.skip_ws();
        let column = self.column();
        let rest = &self.text[self.pos..];
        let len = rest.find(char::is_whitespace).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(Name {
            text: rest[..len].to_string(),
            column,
        })
    }

    fn expect_word(&mut self, what: &str) -> Result<Name> {
        let col = {
            self.skip_ws();
            self.column()
        };
        self.word()
            .ok_or_else(|| perr(self.line, col, format!("expected {what}")))
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let w = self.expect_word(&format!("`{kw}`"))?;
        if w.text != kw {
            return Err(perr(self.line, w.column, format!("expected `{kw}`, found `{}`", w.text)));
        }
        Ok(())
    }

    fn ident(&mut self, what: &str) -> Result<Name> {
        let w = self.expect_word(what)?;
        if !is_ident(&w.text) {
            return Err(perr(self.line, w.column, format!("`{}` is not a valid {what}", w.text)));
        }
        Ok(w)
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        let w = self.expect_word(what)?;
        w.text
            .parse()
            .map_err(|_| perr(self.line, w.column, format!("expected {what}, found `{}`", w.text)))
    }

    /// The rest of the line as comma-separated expressions.
    fn exprs(&mut self) -> Result<Vec<Expr>> {
        self.skip_ws();
        let mut out = Vec::new();
        if self.pos >= self.text.len() {
            return Ok(out);
        }
        loop {
            let start = self.pos;
            let rest = &self.text[start..];
            let len = rest.find(',').unwrap_or(rest.len());
            let raw = &rest[..len];
            let lead = raw.len() - raw.trim_start().len();
            let text = raw.trim();
            let column = self.text[..start + lead].chars().count() + 1;
            if text.is_empty() {
                return Err(perr(self.line, column, "empty expression"));
            }
            out.push(Expr {
                text: text.to_string(),
                column,
            });
            self.pos = start + len;
            if self.pos >= self.text.len() {
                break;
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses scenario text into statements, without resolving names.
pub fn parse_lines(text: &str) -> Result<Vec<Line>> {
    let mut out: Vec<Line> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        let mut cur = Cursor { text: body, pos: 0, line };
        if cur.at_end() {
            continue;
        }
        let head = cur.word().expect("nonempty line");
        let stmt = match head.text.as_str() {
            "ring" => {
                let name = cur.ident("ring name")?;
                cur.keyword("field")?;
                let field = cur.number("characteristic")?;
                cur.keyword("vars")?;
                let mut vars = Vec::new();
                let mut weights = None;
                let mut order = None;
                while let Some(w) = cur.word() {
                    match w.text.as_str() {
                        "weights" => {
                            let mut ws = Vec::new();
                            for _ in 0..vars.len() {
                                ws.push(cur.number("weight")?);
                            }
                            weights = Some(ws);
                        }
                        "order" => order = Some(cur.expect_word("monomial order")?.text),
                        v if is_ident(v) && weights.is_none() && order.is_none() => vars.push(v.to_string()),
                        v => return Err(perr(line, w.column, format!("unexpected `{v}`"))),
                    }
                }
                Stmt::Ring { name, field, vars, weights, order }
            }
            "seed" => Stmt::Seed(cur.number("seed")?),
            "module" => {
                let name = cur.ident("module name")?;
                cur.keyword("gens")?;
                let mut gens = Vec::new();
                while !cur.at_end() {
                    gens.push(cur.number("generator degree")?);
                }
                Stmt::Module { name, gens, rels: Vec::new() }
            }
            "rel" | "row" => {
                let exprs = cur.exprs()?;
                let target = out.last_mut().map(|l| &mut l.stmt);
                match (head.text.as_str(), target) {
                    ("rel", Some(Stmt::Module { rels, .. })) => rels.push(exprs),
                    ("row", Some(Stmt::Map { rows, random: false, .. }))
                    | ("row", Some(Stmt::Bilinear { rows, .. })) => rows.push(exprs),
                    _ => {
                        return Err(perr(
                            line,
                            head.column,
                            format!("`{}` does not follow a matching declaration", head.text),
                        ))
                    }
                }
                continue;
            }
            "dual" => {
                let name = cur.ident("module name")?;
                cur.keyword("of")?;
                let of = cur.ident("module name")?;
                Stmt::Dual { name, of }
            }
            "hom" => {
                let name = cur.ident("module name")?;
                cur.keyword("of")?;
                let source = cur.ident("module name")?;
                let target = cur.ident("module name")?;
                Stmt::Hom { name, source, target }
            }
            "element" => {
                let name = cur.ident("element name")?;
                cur.keyword("in")?;
                let module = cur.ident("module name")?;
                let mode = cur.expect_word("`coords` or `values`")?;
                let values = match mode.text.as_str() {
                    "coords" => false,
                    "values" => true,
                    other => return Err(perr(line, mode.column, format!("expected `coords` or `values`, found `{other}`"))),
                };
                let entries = cur.exprs()?;
                Stmt::Element { name, module, values, entries }
            }
            "map" => {
                let name = cur.ident("map name")?;
                cur.keyword("from")?;
                let source = cur.ident("module name")?;
                cur.keyword("to")?;
                let target = cur.ident("module name")?;
                cur.keyword("degree")?;
                let degree = cur.number("degree")?;
                let random = match cur.word() {
                    None => false,
                    Some(w) if w.text == "random" => true,
                    Some(w) => return Err(perr(line, w.column, format!("unexpected `{}`", w.text))),
                };
                Stmt::Map { name, source, target, degree, random, rows: Vec::new() }
            }
            "bilinear" => {
                let name = cur.ident("map name")?;
                cur.keyword("on")?;
                let module = cur.ident("module name")?;
                let kind = cur.expect_word("`symmetric` or `alternating`")?;
                let alternating = match kind.text.as_str() {
                    "symmetric" => false,
                    "alternating" => true,
                    other => return Err(perr(line, kind.column, format!("expected `symmetric` or `alternating`, found `{other}`"))),
                };
                Stmt::Bilinear { name, module, alternating, rows: Vec::new() }
            }
            "ideal" => {
                let name = cur.ident("ideal name")?;
                let w = cur.expect_word("`=` or `in`")?;
                let sym_of = match w.text.as_str() {
                    "=" => None,
                    "in" => {
                        cur.keyword("S")?;
                        let m = cur.ident("module name")?;
                        cur.keyword("=")?;
                        Some(m)
                    }
                    other => return Err(perr(line, w.column, format!("expected `=`, found `{other}`"))),
                };
                let gens = cur.exprs()?;
                Stmt::Ideal { name, sym_of, gens }
            }
            "task" => {
                let kind = cur.ident("task kind")?;
                let mut params = Vec::new();
                while let Some(w) = cur.word() {
                    let Some((k, v)) = w.text.split_once('=') else {
                        return Err(perr(line, w.column, format!("expected key=value, found `{}`", w.text)));
                    };
                    if v.is_empty() {
                        return Err(perr(line, w.column, format!("empty value for `{k}`")));
                    }
                    params.push((
                        k.to_string(),
                        Name {
                            text: v.to_string(),
                            column: w.column + k.chars().count() + 1,
                        },
                    ));
                }
                Stmt::Task { kind, params }
            }
            other => return Err(perr(line, head.column, format!("unknown statement `{other}`"))),
        };
        if !cur.at_end() {
            let col = cur.column();
            return Err(perr(line, col, "unexpected trailing input"));
        }
        out.push(Line { line, stmt });
    }
    Ok(out)
}

fn join(exprs: &[Expr]) -> String {
    exprs.iter().map(|e| e.text.as_str()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring { name, field, vars, weights, order } => {
                write!(f, "ring {name} field {field} vars {}", vars.join(" "))?;
                if let Some(w) = weights {
                    let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                    write!(f, " weights {}", w.join(" "))?;
                }
                if let Some(o) = order {
                    write!(f, " order {o}")?;
                }
                Ok(())
            }
            Stmt::Seed(s) => write!(f, "seed {s}"),
            Stmt::Module { name, gens, rels } => {
                let g: Vec<String> = gens.iter().map(|x| x.to_string()).collect();
                write!(f, "module {name} gens {}", g.join(" "))?;
                for r in rels {
                    write!(f, "\n  rel {}", join(r))?;
                }
                Ok(())
            }
            Stmt::Dual { name, of } => write!(f, "dual {name} of {of}"),
            Stmt::Hom { name, source, target } => write!(f, "hom {name} of {source} {target}"),
            Stmt::Element { name, module, values, entries } => {
                let mode = if *values { "values" } else { "coords" };
                write!(f, "element {name} in {module} {mode} {}", join(entries))
            }
            Stmt::Map { name, source, target, degree, random, rows } => {
                write!(f, "map {name} from {source} to {target} degree {degree}")?;
                if *random {
                    write!(f, " random")?;
                }
                for r in rows {
                    write!(f, "\n  row {}", join(r))?;
                }
                Ok(())
            }
            Stmt::Bilinear { name, module, alternating, rows } => {
                let kind = if *alternating { "alternating" } else { "symmetric" };
                write!(f, "bilinear {name} on {module} {kind}")?;
                for r in rows {
                    write!(f, "\n  row {}", join(r))?;
                }
                Ok(())
            }
            Stmt::Ideal { name, sym_of, gens } => match sym_of {
                Some(m) => write!(f, "ideal {name} in S {m} = {}", join(gens)),
                None => write!(f, "ideal {name} = {}", join(gens)),
            },
            Stmt::Task { kind, params } => {
                write!(f, "task {kind}")?;
                for (k, v) in params {
                    write!(f, " {k}={v}")?;
                }
                Ok(())
            }
        }
    }
}
