//! The `orientcomp` command line.
//!
//! Exit codes: 0 yes or completed, 1 no (a certificate or violation is
//! printed), 2 input error, 3 size guard or unsupported instance.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::chordal::{check_peo, complete_to_acyclic_lt, find_hole, lbfs_peo};
use crate::class::{complete, CompletionClass};
use crate::friendly::{extend_circular_arc_representation, recognize_proper_circular_arc, ExtendOptions};
use crate::hardness::{assignment_to_ordering, build_reduction, CnfFormula};
use crate::pog::{Ordering, OrientedGraph, Pog, RenderFormat};
use crate::report::Report;
use crate::representation::{extend_interval_representation, lift, Representation};
use crate::round::{check_ordering, OrderingProperty};
use crate::{verify_certificate, Certificate, Error, Verdict};

#[derive(Debug, Parser)]
#[command(name = "orientcomp", version, about = "Orientation completion for partially oriented graphs")]
struct Cli {
    /// Print a JSON report instead of the text form.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Recognize {
    ProperInterval,
    ProperCircularArc,
    Chordal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderKindArg {
    Round,
    Excellent,
    Nice,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RepArg {
    Interval,
    Circular,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Complete a pog to the chosen class.
    Complete {
        #[arg(long, value_enum)]
        class: CompletionClass,
        file: PathBuf,
        /// Emit the completion as DOT (text mode only).
        #[arg(long)]
        dot: bool,
    },
    /// Recognize a graph class of the underlying graph.
    Recognize {
        #[arg(long, value_enum)]
        class: Recognize,
        file: PathBuf,
    },
    /// Check a cyclic ordering (`order cyclic v1 v2 ...`) against the arcs.
    CheckOrdering {
        #[arg(long, value_enum)]
        kind: OrderKindArg,
        file: PathBuf,
        ordering: PathBuf,
    },
    /// Extend a partial proper representation to the whole graph.
    ExtendRep {
        #[arg(long, value_enum)]
        kind: RepArg,
        graph: PathBuf,
        partial: PathBuf,
        /// Accept complement components without a represented vertex.
        #[arg(long)]
        allow_uncovered: bool,
    },
    /// Build the reduction instance of a 3-CNF formula.
    #[command(name = "reduce-3sat")]
    Reduce3sat {
        dimacs: PathBuf,
        /// A satisfying assignment (signed literals); prints the orientation
        /// and its excellent ordering instead.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a certificate against a pog.
    VerifyCert {
        file: PathBuf,
        certificate: PathBuf,
        /// Orient the represented part first, as `extend-rep` does.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
}

/// A finished command: exit code plus what goes to stdout.
struct Outcome {
    code: i32,
    text: String,
    report: Report,
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("cannot read {}: {e}", path.display()) })
}

fn read_pog(path: &Path) -> Result<Pog, Error> {
    Pog::parse(&read(path)?)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuard(_) | Error::UnsupportedInstance(_) | Error::NotFriendly(_) => 3,
        _ => 2,
    }
}

/// Runs the command line `args` (program name first).
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let _ = if cli.json { writeln!(out, "{}", o.report.to_json_string()) } else { write!(out, "{}", o.text) };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::NotFriendly(cert) = &e {
                let _ = writeln!(err, "witness: {}", cert.tag());
            }
            exit_code(&e)
        }
    }
}

fn refuted(class: &str, cert: &Certificate, p: &Pog) -> Outcome {
    let report = Report::no(class).with_certificate(cert, p);
    let text = format!("{}\n", serde_json::to_string_pretty(&cert.to_json(p)).expect("json"));
    Outcome { code: 1, text, report }
}

fn completed(class: &str, d: &Pog, dot: bool) -> Outcome {
    let format = if dot { RenderFormat::Dot } else { RenderFormat::Native };
    Outcome { code: 0, text: d.render(format), report: Report::yes(class).with_arcs(d) }
}

fn verdict(class: &str, p: &Pog, v: Verdict<OrientedGraph>, dot: bool) -> Outcome {
    match v {
        Ok(d) => completed(class, &d, dot),
        Err(c) => refuted(class, &c, p),
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Complete { class, file, dot } => {
            let p = read_pog(file)?;
            let v = complete(&p, *class)?;
            Ok(verdict(class.name(), &p, v, *dot))
        }
        Command::Recognize { class, file } => {
            let p = read_pog(file)?;
            let g = p.underlying();
            let name = class.to_possible_value().expect("named").get_name().to_string();
            match class {
                Recognize::Chordal => {
                    let peo = lbfs_peo(&g, false)?;
                    if check_peo(&g, &peo).is_ok() {
                        let text = peo.render(&g);
                        Ok(Outcome { code: 0, text, report: Report::yes(&name).with_ordering(&peo, &g) })
                    } else {
                        let hole = find_hole(&g).expect("a non-chordal graph has a hole");
                        Ok(refuted(&name, &Certificate::NotChordal { hole }, &g))
                    }
                }
                Recognize::ProperInterval => match complete_to_acyclic_lt(&g) {
                    Ok(d) => {
                        let rep = crate::representation::representation_from_orientation(
                            &d,
                            crate::representation::Target::Interval,
                        )?;
                        Ok(represented(&name, rep))
                    }
                    Err(c) => Ok(refuted(&name, &c, &g)),
                },
                Recognize::ProperCircularArc => match recognize_proper_circular_arc(&g) {
                    Ok(rep) => Ok(represented(&name, rep)),
                    Err(c) => Ok(refuted(&name, &c, &g)),
                },
            }
        }
        Command::CheckOrdering { kind, file, ordering } => {
            let p = read_pog(file)?;
            let o = Ordering::parse(&read(ordering)?, &p)?;
            let prop = match kind {
                OrderKindArg::Round => OrderingProperty::Round,
                OrderKindArg::Excellent => OrderingProperty::Excellent,
                OrderKindArg::Nice => OrderingProperty::Nice,
            };
            let name = kind.to_possible_value().expect("named").get_name().to_string();
            match check_ordering(&p, &o, prop)? {
                Ok(()) => {
                    Ok(Outcome { code: 0, text: "ok\n".into(), report: Report::yes(&name).with_ordering(&o, &p) })
                }
                Err(v) => {
                    let value = named_violation(&v, &p);
                    let mut report = Report::no(&name).with_ordering(&o, &p);
                    report.violation = Some(value.clone());
                    Ok(Outcome {
                        code: 1,
                        text: format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
                        report,
                    })
                }
            }
        }
        Command::ExtendRep { kind, graph, partial, allow_uncovered } => {
            let g = read_pog(graph)?;
            let part = Representation::parse(&read(partial)?)?;
            let name = kind.to_possible_value().expect("named").get_name().to_string();
            let v = match kind {
                RepArg::Interval => extend_interval_representation(&g, &part)?,
                RepArg::Circular => {
                    extend_circular_arc_representation(&g, &part, ExtendOptions { allow_uncovered: *allow_uncovered })?
                }
            };
            match v {
                Ok(rep) => Ok(represented(&name, rep)),
                Err(c) => Ok(refuted(&name, &c, &lift(&g, &part)?)),
            }
        }
        Command::Reduce3sat { dimacs, witness } => {
            let f = CnfFormula::parse_dimacs(&read(dimacs)?)?;
            let r = build_reduction(&f)?;
            match witness {
                None => Ok(Outcome {
                    code: 0,
                    text: r.pog.render(RenderFormat::Native),
                    report: Report::yes("reduction").with_arcs(&r.pog),
                }),
                Some(path) => {
                    let t = parse_assignment(&read(path)?, f.n_vars)?;
                    match assignment_to_ordering(&r, &t) {
                        Ok((d, o)) => {
                            let text = format!("{}{}", d.render(RenderFormat::Native), o.render(&d));
                            Ok(Outcome {
                                code: 0,
                                text,
                                report: Report::yes("excellent").with_arcs(&d).with_ordering(&o, &d),
                            })
                        }
                        Err(Error::NoExcellentOrdering) => Ok(Outcome {
                            code: 1,
                            text: "no excellent ordering\n".into(),
                            report: Report::no("excellent"),
                        }),
                        Err(e) => Err(e),
                    }
                }
            }
        }
        Command::VerifyCert { file, certificate, rep } => {
            let mut p = read_pog(file)?;
            if let Some(rep) = rep {
                p = lift(&p, &Representation::parse(&read(rep)?)?)?;
            }
            let c = Certificate::from_json(&read(certificate)?, &p)?;
            let ok = verify_certificate(&p, &c);
            let report = if ok { Report::yes(c.tag()) } else { Report::no(c.tag()) };
            Ok(Outcome { code: if ok { 0 } else { 1 }, text: if ok { "valid\n" } else { "invalid\n" }.into(), report })
        }
    }
}

fn represented(class: &str, rep: Representation) -> Outcome {
    Outcome { code: 0, text: rep.render(), report: Report::yes(class).with_representation(rep) }
}

fn named_violation(v: &crate::round::Violation, p: &Pog) -> serde_json::Value {
    use crate::round::Violation::*;
    let n = |x: usize| p.name(x).to_string();
    match *v {
        Unoriented { u, v } => serde_json::json!({"kind": "unoriented", "u": n(u), "v": n(v)}),
        Round { vertex } => serde_json::json!({"kind": "round", "vertex": n(vertex)}),
        Excellent { first, second } => serde_json::json!({
            "kind": "excellent",
            "first": [n(first.0), n(first.1)],
            "second": [n(second.0), n(second.1)],
        }),
        Nice { k, i, j } => serde_json::json!({"kind": "nice", "k": n(k), "i": n(i), "j": n(j)}),
    }
}

/// Signed literals, optionally prefixed by `v` and ended by `0`; every
/// variable must appear exactly once.
fn parse_assignment(text: &str, n_vars: usize) -> Result<Vec<bool>, Error> {
    let mut value: Vec<Option<bool>> = vec![None; n_vars];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        for tok in line.split_whitespace().filter(|&t| t != "v") {
            let perr = |message: String| Error::Parse { line: lineno + 1, message };
            let l: i64 = tok.parse().map_err(|_| perr(format!("`{tok}` is not a literal")))?;
            if l == 0 {
                continue;
            }
            let var = l.unsigned_abs() as usize;
            if var > n_vars || value[var - 1].is_some() {
                return Err(perr(format!("literal {l} out of range or repeated")));
            }
            value[var - 1] = Some(l > 0);
        }
    }
    value
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::MalformedFormula(format!("assignment misses variable {}", i + 1))))
        .collect()
}
