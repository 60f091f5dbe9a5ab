//! Scenario files: declarations of algebraic objects followed by tasks.

mod build;
mod run;
mod syntax;

use std::fmt;

pub use build::{order_name, parse_order, Env, Object, Overrides};
pub use run::{run, Report, RunOptions, Status, TaskRecord};
pub use syntax::{parse_lines, Expr, Line, Name, Stmt};

use crate::error::Result;

/// A parsed and built scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub lines: Vec<Line>,
    pub env: Env,
}

impl Scenario {
    /// The statements without their line numbers.
    pub fn statements(&self) -> Vec<&Stmt> {
        self.lines.iter().map(|l| &l.stmt).collect()
    }

    pub(crate) fn tasks(&self) -> impl Iterator<Item = (usize, &Name, &Vec<(String, Name)>)> {
        self.lines.iter().filter_map(|l| match &l.stmt {
            Stmt::Task { kind, params } => Some((l.line, kind, params)),
            _ => None,
        })
    }
}

/// Parses, builds and validates a scenario. Polynomial expressions are
/// rewritten in canonical form, so printing the result gives a normalized
/// scenario.
pub fn parse_scenario(name: &str, text: &str, ov: &Overrides) -> Result<Scenario> {
    let mut lines = parse_lines(text)?;
    let env = build::build(&mut lines, ov)?;
    let s = Scenario {
        name: name.to_string(),
        lines,
        env,
    };
    run::validate_tasks(&s)?;
    Ok(s)
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{}", l.stmt)?;
        }
        Ok(())
    }
}
