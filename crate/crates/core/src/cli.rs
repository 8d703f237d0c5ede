//! The `conceptkit` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classic::{enumerate_concepts_with, Enumerator};
use crate::dm::dm_of_sum_with;
use crate::enriched::contextual_closure;
use crate::equivalence::verify_equivalence_with;
use crate::io::json::{ClosureJson, CompletionJson, LatticeJson, RelationJson, VerifyJson};
use crate::io::{emit_dot, emit_json, read_context, ContextDocument};
use crate::laws::{run_all_laws, LawConfig, DEFAULT_SEED, DEFAULT_SIZE};
use crate::relation::{Relation, Subset};
use crate::sum::sum;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "conceptkit", version, about = "Order-enriched formal concept analysis")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Use brute-force enumerators instead of NextClosure.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the concepts of a context.
    Concepts { file: PathBuf },
    /// Print the four quadrants of the contextual closure.
    Closure { file: PathBuf },
    /// Print the negation relation.
    Negation { file: PathBuf },
    /// Print the sum order of the contextual closure.
    Sum { file: PathBuf },
    /// List the quadruple concepts of the completion of the sum.
    Dm { file: PathBuf },
    /// Check that concepts and quadruple concepts form isomorphic lattices.
    Verify { file: PathBuf },
    /// Run the algebraic law suites.
    Laws {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest carrier size for random instances.
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        size: usize,
    },
    /// Print the concept lattice as a Graphviz digraph.
    Dot { file: PathBuf },
}

fn set(s: &Subset) -> String {
    format!("{{{}}}", s.names().join(","))
}

fn pairs(r: &Relation) -> String {
    r.pairs().into_iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

struct Run<'a> {
    format: OutputFormat,
    how: Enumerator,
    out: &'a mut dyn Write,
}

impl Run<'_> {
    fn emit(&mut self, text: String, json: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            OutputFormat::Text => self.out.write_all(text.as_bytes()),
            OutputFormat::Json => self.out.write_all(json().as_bytes()),
        }
    }

    fn command(&mut self, command: &Command, doc: Option<&ContextDocument>) -> crate::Result<i32> {
        let io = |e: std::io::Error| crate::Error::Invalid(format!("writing output: {e}"));
        let Some(doc) = doc else {
            let Command::Laws { seed, size } = *command else { unreachable!("only laws runs without a file") };
            let report = run_all_laws(&LawConfig { seed, size, ..LawConfig::default() });
            self.emit(format!("{report}\n"), || emit_json(&report)).map_err(io)?;
            return Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED });
        };
        let (name, ctx) = (doc.name.as_str(), &doc.context);
        let mu = ctx.incidence();
        match command {
            Command::Concepts { .. } => {
                let l = enumerate_concepts_with(ctx, self.how)?;
                let text = l.concepts().iter().enumerate().map(|(i, c)| format!("{i}: {} / {}\n", set(&c.extent), set(&c.intent))).collect();
                self.emit(text, || emit_json(&LatticeJson::new(name, &l))).map_err(io)?;
            }
            Command::Closure { .. } => {
                let c = contextual_closure(mu);
                let text = format!(
                    "source order\n{}\nforward\n{}\nbackward\n{}\ntarget order\n{}",
                    c.source_order().relation(),
                    c.forward(),
                    c.backward(),
                    c.target_order().relation()
                );
                self.emit(text, || emit_json(&ClosureJson::new(name, &c))).map_err(io)?;
            }
            Command::Negation { .. } => {
                let c = contextual_closure(mu);
                let neg = c.backward();
                self.emit(pairs(neg), || emit_json(&RelationJson::from(neg))).map_err(io)?;
            }
            Command::Sum { .. } => {
                let s = sum(&contextual_closure(mu))?;
                let leq = s.order().relation();
                self.emit(leq.to_string(), || emit_json(&RelationJson::from(leq))).map_err(io)?;
            }
            Command::Dm { .. } => {
                let q = dm_of_sum_with(&contextual_closure(mu), self.how)?;
                let text = q
                    .quads()
                    .iter()
                    .enumerate()
                    .map(|(i, q)| format!("{i}: {} {} | {} {}\n", set(&q.phi0), set(&q.phi1), set(&q.psi0), set(&q.psi1)))
                    .collect();
                self.emit(text, || emit_json(&CompletionJson::new(name, &q))).map_err(io)?;
            }
            Command::Verify { .. } => {
                let r = verify_equivalence_with(mu, self.how)?;
                let text = if r.is_isomorphic() {
                    format!("ISOMORPHIC ({} concepts)\n", r.concepts)
                } else {
                    let mut t = format!("NOT ISOMORPHIC ({} concepts, {} quadruples)\n", r.concepts, r.quads);
                    for c in &r.counterexamples {
                        t.push_str(&format!("  {c}\n"));
                    }
                    t
                };
                self.emit(text, || emit_json(&VerifyJson::new(name, &r))).map_err(io)?;
                if !r.is_isomorphic() {
                    return Ok(EXIT_CHECK_FAILED);
                }
            }
            Command::Dot { .. } => {
                let l = enumerate_concepts_with(ctx, self.how)?;
                self.out.write_all(emit_dot(name, &l).as_bytes()).map_err(io)?;
            }
            Command::Laws { .. } => unreachable!("laws takes no file"),
        }
        Ok(EXIT_OK)
    }
}

fn file(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Concepts { file }
        | Command::Closure { file }
        | Command::Negation { file }
        | Command::Sum { file }
        | Command::Dm { file }
        | Command::Verify { file }
        | Command::Dot { file } => Some(file),
        Command::Laws { .. } => None,
    }
}

/// Runs one invocation and returns its exit code: 0 on success, 1 when a
/// check fails, 2 on usage, input or evaluation errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let doc = match file(&cli.command).map(|p| read_context(p)).transpose() {
        Ok(doc) => doc,
        Err(e) => {
            let _ = writeln!(err, "conceptkit: {e}");
            return EXIT_USAGE;
        }
    };
    let how = if cli.oracle { Enumerator::PowerSet } else { Enumerator::NextClosure };
    let mut run = Run { format: cli.format, how, out };
    match run.command(&cli.command, doc.as_ref()) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "conceptkit: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("conceptkit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_and_version_succeed() {
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["--version"]).0, 0);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["concepts"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["--format", "yaml", "laws"]).0, 2);
    }

    #[test]
    fn missing_file_exits_2() {
        let (code, _, err) = call(&["concepts", "/nonexistent/x.cxt"]);
        assert_eq!(code, 2);
        assert!(err.contains("/nonexistent/x.cxt"));
    }
}
