//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::arc::{self, ArcMorphism, Segment};
use crate::dualtrans;
use crate::error::Error;
use crate::hyper::{self, SignedElem};
use crate::permgeom::{self, SetMapFin};
use crate::verify::{self, Bounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "epicyclic", version, about = "Morphism calculus for the cyclic and epicyclic categories")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Payload arguments accept literal JSON, a file path, or `-` for stdin.
#[derive(Subcommand, Debug)]
enum Command {
    /// Composite `A ∘ B` of two morphisms.
    Compose { a: String, b: String },
    /// Canonical representative of a morphism.
    Normalize { m: String },
    /// Value of a morphism at an integer.
    Eval {
        m: String,
        #[arg(allow_hyphen_values = true)]
        x: i64,
    },
    /// Transpose `f^t` of a linear morphism.
    Transpose { m: String },
    /// Star transpose `f*` of a linear morphism.
    Star { m: String },
    /// Minimal semilinear lift of a set map.
    Lift { s: String },
    /// Cyclic descent number of a set map.
    Cdesc { s: String },
    /// Projection of a morphism to a set map.
    Project { m: String },
    /// The morphism `psi_k : hat (k n) -> hat n`.
    Psi { n: i64, k: i64 },
    /// Factorization `f = psi_k ∘ h` with `h` linear.
    Factor { m: String },
    /// Faces, degeneracies, the cyclic generator and `pi^k` at period `n`.
    Generators {
        n: i64,
        /// Cyclic multiplicity `a` of `Arc_a`.
        #[arg(long, default_value_t = 1)]
        eqmod: i64,
        /// Largest `k` for `pi^k`.
        #[arg(long, default_value_t = 3)]
        max_deg: i64,
    },
    /// Embedding `hat |Y| -> hat n` of the submodule for a subset `Y`.
    Submodule { n: i64, y: String },
    /// Points and segments of the abstract circle `hat n / theta`.
    Circle { n: i64 },
    /// Multivalued sum `x ⌣ y` in `B^(n,1) ⊗ S`.
    HyperAdd {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        n: i64,
    },
    /// Number `(a m)^n` of equivariant maps between free `mu_a`-sets.
    HomCount { n: i64, m: i64, a: i64 },
    /// Run a verification suite.
    Verify {
        /// category, presentation, epicyclic, duality, descent, hypergroup,
        /// counts, tropic, circle, or all.
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_period: i64,
        #[arg(long, default_value_t = 3)]
        max_deg: i64,
        #[arg(long, default_value_t = 6)]
        max_rank: i64,
        /// Largest period for literal associativity triples in all degrees.
        #[arg(long, default_value_t = 3)]
        triple_period: i64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn error_json(f: &Failure) -> (i32, Value) {
    match f {
        Failure::Usage(msg) => (EXIT_USAGE, json!({"error": "usage", "message": msg})),
        Failure::Verification(msg) => (EXIT_FAILURE, json!({"error": "verification_failed", "message": msg})),
        Failure::Lib(e) => {
            let code = match e {
                Error::InvalidArgument { .. } | Error::BoundExceeded { .. } => EXIT_USAGE,
                _ => EXIT_FAILURE,
            };
            let mut v = json!({"error": e.kind(), "message": e.to_string()});
            if let Some(name) = e.invariant_name() {
                v["invariant"] = json!(name);
            }
            (code, v)
        }
    }
}

fn read_payload(arg: &str, stdin: &mut dyn Read) -> CliResult<String> {
    let trimmed = arg.trim_start();
    if arg == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Failure::Usage(format!("reading `{arg}`: {e}")))
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("malformed {what} JSON: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    src: i64,
    dst: i64,
    deg: i64,
    #[serde(default = "one")]
    eqmod: i64,
    vals: Vec<i64>,
}

fn one() -> i64 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSetMap {
    src: i64,
    dst: i64,
    table: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawSigned {
    Int(i64),
    Obj { mag: i64, sign: i64 },
}

/// Reading through raw shapes keeps the violated invariant's name, which a
/// `TryFrom` inside serde would flatten into a message.
fn morphism(arg: &str, stdin: &mut dyn Read) -> CliResult<ArcMorphism> {
    let raw: RawMorphism = parse_json("morphism", &read_payload(arg, stdin)?)?;
    Ok(arc::normalize(raw.src, raw.dst, raw.deg, &raw.vals, raw.eqmod)?)
}

fn set_map(arg: &str, stdin: &mut dyn Read) -> CliResult<SetMapFin> {
    let raw: RawSetMap = parse_json("set map", &read_payload(arg, stdin)?)?;
    Ok(SetMapFin::new(raw.src, raw.dst, raw.table)?)
}

fn signed(arg: &str) -> CliResult<SignedElem> {
    match parse_json::<RawSigned>("signed element", arg)? {
        RawSigned::Int(v) => Ok(SignedElem::from_signed(v)),
        RawSigned::Obj { mag, sign } => Ok(SignedElem::new(mag, sign)?),
    }
}

fn morphism_text(f: &ArcMorphism) -> String {
    f.to_string()
}

fn set_text(s: &hyper::HyperSet) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

struct Emit {
    json: Value,
    text: String,
}

fn emit_morphism(f: &ArcMorphism) -> Emit {
    Emit {
        json: serde_json::to_value(f).expect("serializable"),
        text: morphism_text(f),
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> CliResult<Emit> {
    Ok(match cmd {
        Command::Compose { a, b } => {
            let g = morphism(&a, stdin)?;
            let f = morphism(&b, stdin)?;
            emit_morphism(&arc::compose(&g, &f)?)
        }
        Command::Normalize { m } => emit_morphism(&morphism(&m, stdin)?),
        Command::Eval { m, x } => {
            let f = morphism(&m, stdin)?;
            let v = f.eval(x);
            Emit {
                json: json!(v),
                text: v.to_string(),
            }
        }
        Command::Transpose { m } => emit_morphism(&dualtrans::transpose(&morphism(&m, stdin)?)?),
        Command::Star { m } => emit_morphism(&dualtrans::star_transpose(&morphism(&m, stdin)?)?),
        Command::Lift { s } => {
            let s = set_map(&s, stdin)?;
            let f = permgeom::lift(&s);
            let mut e = emit_morphism(&f);
            if f.is_constant() {
                e.text.push_str("\nnote: constant map, degree 0 lift is not a semifield morphism");
            }
            e
        }
        Command::Cdesc { s } => {
            let k = permgeom::cdesc(&set_map(&s, stdin)?);
            Emit {
                json: json!(k),
                text: k.to_string(),
            }
        }
        Command::Project { m } => {
            let s = permgeom::project(&morphism(&m, stdin)?)?;
            Emit {
                json: serde_json::to_value(&s).expect("serializable"),
                text: s.to_string(),
            }
        }
        Command::Psi { n, k } => emit_morphism(&arc::psi(n, k)?),
        Command::Factor { m } => {
            let (p, h) = arc::factor(&morphism(&m, stdin)?)?;
            Emit {
                json: json!({"psi": p, "h": h}),
                text: format!("psi: {}\nh:   {}", morphism_text(&p), morphism_text(&h)),
            }
        }
        Command::Generators { n, eqmod, max_deg } => generators(n, eqmod, max_deg)?,
        Command::Submodule { n, y } => {
            let ys: Vec<i64> = parse_json("subset", &read_payload(&y, stdin)?)?;
            emit_morphism(&arc::submodule_from_subset(n, &ys)?)
        }
        Command::Circle { n } => circle(n)?,
        Command::HyperAdd { x, y, n } => {
            let s = hyper::hyper_add(signed(&x)?, signed(&y)?, n)?;
            Emit {
                json: serde_json::to_value(&s).expect("serializable"),
                text: set_text(&s),
            }
        }
        Command::HomCount { n, m, a } => {
            let c = arc::hom_count_sets(n, m, a)?;
            Emit {
                json: json!(c),
                text: c.to_string(),
            }
        }
        Command::Verify {
            suite,
            max_period,
            max_deg,
            max_rank,
            triple_period,
        } => {
            let bounds = Bounds {
                max_period,
                max_deg,
                max_rank,
                triple_period,
            };
            let reports = if suite == "all" {
                verify::run_all(&bounds)?
            } else {
                let s: Suite = suite.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
                vec![verify::run(s, &bounds)?]
            };
            let json = json!({"bounds": bounds, "passed": reports.iter().all(|r| r.passed()), "suites": reports});
            let mut text = String::new();
            for r in &reports {
                let _ = writeln!(text, "{r}");
            }
            if let Some(bad) = reports.iter().find(|r| !r.passed()) {
                return Err(Failure::Verification(format!(
                    "suite {} failed {} of {} checks\n{}",
                    bad.suite, bad.failed, bad.checked, if suite == "all" { text } else { json.to_string() }
                )));
            }
            Emit {
                json,
                text: text.trim_end().to_string(),
            }
        }
    })
}

fn generators(n: i64, eqmod: i64, max_deg: i64) -> CliResult<Emit> {
    let mut faces = Vec::new();
    for j in 0..=n {
        faces.push(arc::delta(n, j, eqmod)?);
    }
    let mut degeneracies = Vec::new();
    for j in 0..n {
        degeneracies.push(arc::sigma(n, j, eqmod)?);
    }
    let t = arc::tau(n, eqmod)?;
    let mut pis = Vec::new();
    if eqmod == 1 {
        for k in 1..=max_deg {
            pis.push(arc::pi(n, k)?);
        }
    }
    let mut text = String::new();
    for (j, f) in faces.iter().enumerate() {
        let _ = writeln!(text, "delta_{j}: {f}");
    }
    for (j, f) in degeneracies.iter().enumerate() {
        let _ = writeln!(text, "sigma_{j}: {f}");
    }
    let _ = writeln!(text, "tau: {t}");
    for (k, f) in pis.iter().enumerate() {
        let _ = writeln!(text, "pi^{}: {f}", k + 1);
    }
    Ok(Emit {
        json: json!({"delta": faces, "sigma": degeneracies, "tau": t, "pi": pis}),
        text: text.trim_end().to_string(),
    })
}

fn circle(n: i64) -> CliResult<Emit> {
    let c = arc::AbstractCircle::new(n)?;
    let seg = |s: Segment| json!({"start": s.start, "len": s.len, "end": c.boundary1(s)});
    let segments: Vec<Value> = c
        .segments()
        .map(|s| {
            let mut v = seg(s);
            v["star"] = seg(c.star(s));
            v
        })
        .collect();
    let mut text = format!("abstract circle of hat {n} ([{}]): {n} points, {} segments", n - 1, segments.len());
    for s in c.segments() {
        let _ = write!(text, "\n{s} -> {}, star {}", c.boundary1(s), c.star(s));
    }
    Ok(Emit {
        json: json!({"points": c.points().collect::<Vec<_>>(), "segments": segments}),
        text,
    })
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("{}\n", json!({"error": "usage", "message": rendered.trim_end()})),
                },
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(e) => Outcome {
            code: EXIT_OK,
            stdout: match cli.format {
                Format::Json => format!("{}\n", e.json),
                Format::Text => format!("{}\n", e.text),
            },
            stderr: String::new(),
        },
        Err(f) => {
            let (code, v) = error_json(&f);
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("{v}\n"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        let mut argv = vec!["epicyclic"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn compose_tau_squared() {
        let t = r#"{"src":2,"dst":2,"deg":1,"vals":[-1,0]}"#;
        let out = go(&["compose", t, t]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout.trim(), r#"{"src":2,"dst":2,"deg":1,"vals":[0,1]}"#);
    }

    #[test]
    fn lift_example() {
        let out = go(&["lift", r#"{"src":3,"dst":3,"table":[2,1,0]}"#]);
        assert_eq!(out.stdout.trim(), r#"{"src":3,"dst":3,"deg":2,"vals":[2,4,6]}"#);
    }

    #[test]
    fn invariant_errors_are_structured() {
        let out = go(&["normalize", r#"{"src":2,"dst":2,"deg":1,"vals":[1,0]}"#]);
        assert_eq!(out.code, EXIT_FAILURE);
        let v: Value = serde_json::from_str(&out.stderr).unwrap();
        assert_eq!(v["invariant"], "monotone");
        let out = go(&["normalize", "{not json"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert_eq!(go(&["frobnicate"]).code, EXIT_USAGE);
    }

    #[test]
    fn stdin_payload() {
        let mut input = r#"{"src":3,"dst":3,"deg":1,"vals":[0,1,2]}"#.as_bytes();
        let out = run(["epicyclic", "eval", "-", "-4"], &mut input);
        assert_eq!(out.stdout.trim(), "-4");
    }

    #[test]
    fn text_format_shows_brackets() {
        let out = go(&["--format", "text", "psi", "2", "3"]);
        assert!(out.stdout.starts_with("[5] -> [1] (hat 6 -> hat 2), deg 3"), "{}", out.stdout);
    }

    #[test]
    fn hyper_add_forms() {
        let out = go(&["hyper-add", "2", "-2", "2"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);
        let out = go(&["--format", "text", "hyper-add", r#"{"mag":3,"sign":1}"#, "-1", "3"]);
        assert_eq!(out.stdout.trim(), "{+3}");
    }
}
