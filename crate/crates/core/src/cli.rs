//! Command-line front end. Exit codes: 0 success or verdict true, 1 verdict
//! false, 2 usage or parse error, 3 domain error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::amicability::{ternarization_fixed_point, ternarize_morphisms, ternarize_words, SeedCase};
use crate::certify::{
    cross_check, decompose, infer_epsilon, invariance_3iet_check, matrix_necessary_check, spectral_orbit_check,
    yasutomi_check, Certificate,
};
use crate::georep::{build, check_selfsimilar, lengths_from_perron, substitution_from_geometry};
use crate::iet::{two_iet_code, IetParams, SturmianParams};
use crate::morphism::{Morphism, MorphismError};
use crate::qfield::Quadratic;
use crate::words::{classify_profile, complexity_profile, BiWindow, Word, WordError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn morphism_error(e: MorphismError) -> CliError {
    match e {
        MorphismError::Parse { .. } | MorphismError::Word(_) => usage(e),
        other => domain(other),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "iet3", version, about = "Exact tools for three-interval exchange words and their substitutions")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Window {
    #[arg(long, default_value_t = -2000, allow_hyphen_values = true)]
    from: i64,
    #[arg(long, default_value_t = 2000, allow_hyphen_values = true)]
    to: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Code the orbit of 0 under a three-interval exchange.
    Gen3iet {
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        #[arg(long, allow_hyphen_values = true)]
        l: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        window: Window,
    },
    /// Code the orbit of the intercept under a two-interval exchange.
    Gensturm {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[command(flatten)]
        window: Window,
    },
    /// Factor complexity profile of a word.
    Complexity {
        word: String,
        #[arg(long, default_value_t = 15)]
        n_max: usize,
    },
    /// Whether u is amicable to v.
    Amicable { u: String, v: String },
    /// The ternary word w with σ01(w) = u and σ10(w) = v.
    TernarizeWords { u: String, v: String },
    /// The ternary morphism ter(φ, ψ).
    TernarizeMorph {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
    },
    /// Prefix of a fixed point of η, or of ter(φ, ψ).
    Fixedpoint {
        #[arg(long, conflicts_with_all = ["phi", "psi"], required_unless_present_all = ["phi", "psi"])]
        eta: Option<String>,
        #[arg(long, requires = "psi")]
        phi: Option<String>,
        #[arg(long, requires = "phi")]
        psi: Option<String>,
        #[arg(long, default_value_t = 100)]
        len: usize,
    },
    /// Invariance criterion for a Sturmian word of slope α and intercept β.
    CertifySturm {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Invariance criterion for a three-interval word; with --eta also the
    /// lattice conditions for that substitution.
    #[command(name = "certify-3iet")]
    Certify3iet {
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        #[arg(long, allow_hyphen_values = true)]
        l: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        eta: Option<String>,
    },
    /// Necessary matrix conditions for η to fix a word with parameter ε.
    MatrixCheck {
        #[arg(long)]
        eta: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// Amicable pair (φ, ψ) with ter(φ, ψ) = η or η².
    Decompose {
        #[arg(long)]
        eta: String,
    },
    /// The parameter ε determined by the matrix of η.
    InferEps {
        #[arg(long)]
        eta: String,
    },
    /// Geometric self-similarity of the fixed point of η.
    Selfsim {
        #[arg(long)]
        eta: String,
        #[arg(long, default_value_t = 300)]
        len: usize,
        /// Dump the point set as index, exact value, approximation.
        #[arg(long)]
        plot: bool,
    },
}

#[derive(Default)]
struct Outcome {
    inputs: Map<String, Value>,
    result: Value,
    text: String,
    witnesses: Vec<(String, Quadratic)>,
    verdict: Option<bool>,
    /// Printed after the witness table in text mode.
    trailer: String,
}

impl Outcome {
    fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), Value::String(value.to_string()));
    }

    fn certificate(&mut self, cert: &Certificate) {
        self.witnesses.extend(cert.witnesses.iter().cloned());
        let _ = writeln!(self.text, "verdict: {}", cert.verdict);
        if let Some(clause) = cert.failed_clause {
            let _ = writeln!(self.text, "failed_clause: {clause}");
        }
    }
}

fn quadratic(s: &str) -> Result<Quadratic, CliError> {
    s.parse().map_err(usage)
}

fn morphism(s: &str) -> Result<Morphism, CliError> {
    s.parse().map_err(|e: MorphismError| usage(e))
}

fn read_literal(s: &str) -> Result<String, CliError> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|t| t.split_whitespace().collect())
            .map_err(|e| usage(format!("{path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn word(s: &str) -> Result<Word, CliError> {
    read_literal(s)?.parse().map_err(|e: WordError| usage(e))
}

fn window_bounds(w: &Window) -> Result<(), CliError> {
    if w.from > 0 || w.to < 0 {
        return Err(usage("window must satisfy from <= 0 <= to"));
    }
    Ok(())
}

fn show_window(w: &BiWindow) -> String {
    if w.origin() == 0 {
        w.right().to_string()
    } else {
        w.to_string()
    }
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    match command {
        Command::Gen3iet { eps, l, c, window } => {
            out.input("eps", eps);
            out.input("l", l);
            out.input("c", c);
            out.input("from", window.from);
            out.input("to", window.to);
            window_bounds(window)?;
            let p = IetParams::new(quadratic(eps)?, quadratic(l)?, quadratic(c)?).map_err(domain)?;
            let shown = show_window(&p.code(window.from, window.to));
            out.result = Value::String(shown.clone());
            out.text = format!("{shown}\n");
        }
        Command::Gensturm { alpha, beta, window } => {
            out.input("alpha", alpha);
            out.input("beta", beta);
            out.input("from", window.from);
            out.input("to", window.to);
            window_bounds(window)?;
            let s = SturmianParams::new(quadratic(alpha)?, quadratic(beta)?).map_err(domain)?;
            let shown = show_window(&two_iet_code(&s, window.from, window.to));
            out.result = Value::String(shown.clone());
            out.text = format!("{shown}\n");
        }
        Command::Complexity { word: literal, n_max } => {
            out.input("word", literal);
            out.input("n-max", n_max);
            let text = read_literal(literal)?;
            let letters = if text.contains('|') {
                text.parse::<BiWindow>().map_err(usage)?.letters().to_vec()
            } else {
                word(&text)?.into_letters()
            };
            let profile = complexity_profile(&letters, *n_max);
            let class = classify_profile(&profile);
            for (n, c) in profile.iter().enumerate() {
                let _ = writeln!(out.text, "{}\t{c}", n + 1);
            }
            let _ = writeln!(out.text, "class: {class}");
            out.result = json!({ "profile": profile, "class": class.to_string() });
        }
        Command::Amicable { u, v } => {
            out.input("u", u);
            out.input("v", v);
            let verdict = ternarize_words(&word(u)?, &word(v)?).is_ok();
            out.result = Value::Bool(verdict);
            out.text = format!("{verdict}\n");
            out.verdict = Some(verdict);
        }
        Command::TernarizeWords { u, v } => {
            out.input("u", u);
            out.input("v", v);
            let w = ternarize_words(&word(u)?, &word(v)?).map_err(domain)?;
            out.result = Value::String(w.to_string());
            out.text = format!("{w}\n");
        }
        Command::TernarizeMorph { phi, psi } => {
            out.input("phi", phi);
            out.input("psi", psi);
            let eta = ternarize_morphisms(&morphism(phi)?, &morphism(psi)?).map_err(domain)?;
            out.result = Value::String(eta.to_string());
            out.text = format!("{eta}\n");
        }
        Command::Fixedpoint { eta, phi, psi, len } => {
            out.input("len", len);
            if let Some(eta) = eta {
                out.input("eta", eta);
                let w = morphism(eta)?.fixed_point_prefix(*len, None).map_err(morphism_error)?;
                out.result = json!({ "word": w.to_string() });
                out.text = format!("{w}\n");
            } else {
                let (phi, psi) = (phi.as_deref().unwrap_or_default(), psi.as_deref().unwrap_or_default());
                out.input("phi", phi);
                out.input("psi", psi);
                let fp = ternarization_fixed_point(&morphism(phi)?, &morphism(psi)?, *len).map_err(domain)?;
                let case = match fp.case {
                    SeedCase::CommonLetter(x) => format!("common letter {x}"),
                    SeedCase::Crossed => "crossed".to_string(),
                };
                let seed = fp.case.ternary_seed();
                out.result = json!({
                    "eta": fp.eta.to_string(),
                    "seed": seed.to_string(),
                    "case": case,
                    "word": fp.word.to_string(),
                });
                out.text = format!("eta: {}\nseed: {seed} ({case})\n{}\n", fp.eta, fp.word);
            }
        }
        Command::CertifySturm { alpha, beta } => {
            out.input("alpha", alpha);
            out.input("beta", beta);
            let cert = yasutomi_check(&quadratic(alpha)?, &quadratic(beta)?).map_err(domain)?;
            out.certificate(&cert);
            out.result = certificate_json(&cert);
            out.verdict = Some(cert.verdict);
        }
        Command::Certify3iet { eps, l, c, eta } => {
            out.input("eps", eps);
            out.input("l", l);
            out.input("c", c);
            let p = IetParams::new(quadratic(eps)?, quadratic(l)?, quadratic(c)?).map_err(domain)?;
            let cert = invariance_3iet_check(&p).map_err(domain)?;
            let agrees = cross_check(&p).map_err(domain)?;
            out.certificate(&cert);
            let _ = writeln!(out.text, "cross_check: {agrees}");
            let mut result = certificate_json(&cert);
            result["cross_check"] = Value::Bool(agrees);
            let mut verdict = cert.verdict;
            if let Some(eta) = eta {
                out.input("eta", eta);
                let spectral = spectral_orbit_check(&morphism(eta)?, &p).map_err(domain)?;
                let _ = writeln!(out.text, "spectral verdict: {}", spectral.verdict);
                if let Some(clause) = spectral.failed_clause {
                    let _ = writeln!(out.text, "spectral failed_clause: {clause}");
                }
                out.witnesses.extend(spectral.witnesses.iter().cloned());
                result["spectral"] = certificate_json(&spectral);
                verdict &= spectral.verdict;
            }
            out.result = result;
            out.verdict = Some(verdict);
        }
        Command::MatrixCheck { eta, eps } => {
            out.input("eta", eta);
            out.input("eps", eps);
            let cert = matrix_necessary_check(&morphism(eta)?, &quadratic(eps)?).map_err(domain)?;
            out.certificate(&cert);
            out.result = certificate_json(&cert);
            out.verdict = Some(cert.verdict);
        }
        Command::Decompose { eta } => {
            out.input("eta", eta);
            let d = decompose(&morphism(eta)?).map_err(domain)?;
            let sign = if d.lambda_conjugate_positive { "+" } else { "-" };
            out.result = json!({
                "power": d.power,
                "phi": d.phi.to_string(),
                "psi": d.psi.to_string(),
                "lambda_conjugate_sign": sign,
            });
            out.text = format!("power: {}\nphi: {}\npsi: {}\nlambda_conjugate_sign: {sign}\n", d.power, d.phi, d.psi);
        }
        Command::InferEps { eta } => {
            out.input("eta", eta);
            let e = infer_epsilon(&morphism(eta)?).map_err(domain)?;
            out.result = Value::String(e.to_string());
            out.text = format!("{e}\n");
        }
        Command::Selfsim { eta, len, plot } => {
            out.input("eta", eta);
            out.input("len", len);
            let xi = morphism(eta)?;
            let lambda = xi.perron().map_err(morphism_error)?.dominant;
            let lengths = lengths_from_perron(&xi).map_err(domain)?;
            let w = xi.fixed_point_prefix(*len, None).map_err(morphism_error)?;
            let rep = build(&w, &lengths).map_err(domain)?;
            let sim = check_selfsimilar(&rep, &lambda).map_err(domain)?;
            let recovered = substitution_from_geometry(&rep, &lambda).map_err(domain)?;
            out.witnesses.push(("Lambda".to_string(), lambda));
            for (a, l) in name_letters(&lengths) {
                out.witnesses.push((format!("length({a})"), l));
            }
            let _ = writeln!(out.text, "checked gaps: {}", sim.checked);
            let _ = writeln!(out.text, "recovered: {recovered}");
            let verdict = recovered == xi;
            let _ = writeln!(out.text, "verdict: {verdict}");
            let mut result = json!({ "checked": sim.checked, "recovered": recovered.to_string(), "verdict": verdict });
            if *plot {
                out.input("plot", true);
                out.trailer = format!("# index\texact\tapprox (display only)\n{}", rep.plot_data());
                result["points"] = Value::Array(rep.points().iter().map(|t| Value::String(t.to_string())).collect());
            }
            out.result = result;
            out.verdict = Some(verdict);
        }
    }
    Ok(out)
}

fn name_letters(l: &crate::georep::LengthAssignment) -> Vec<(String, Quadratic)> {
    l.alphabet().letters().iter().map(|&a| (a.to_string(), l.get(a).clone())).collect()
}

fn certificate_json(cert: &Certificate) -> Value {
    json!({
        "verdict": cert.verdict,
        "failed_clause": cert.failed_clause.map(|c| c.name()),
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen3iet { .. } => "gen3iet",
        Command::Gensturm { .. } => "gensturm",
        Command::Complexity { .. } => "complexity",
        Command::Amicable { .. } => "amicable",
        Command::TernarizeWords { .. } => "ternarize-words",
        Command::TernarizeMorph { .. } => "ternarize-morph",
        Command::Fixedpoint { .. } => "fixedpoint",
        Command::CertifySturm { .. } => "certify-sturm",
        Command::Certify3iet { .. } => "certify-3iet",
        Command::MatrixCheck { .. } => "matrix-check",
        Command::Decompose { .. } => "decompose",
        Command::InferEps { .. } => "infer-eps",
        Command::Selfsim { .. } => "selfsim",
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(out) => {
            let code = match out.verdict {
                Some(false) => EXIT_FALSE,
                _ => EXIT_OK,
            };
            let _ = match cli.format {
                Format::Text => {
                    let mut text = out.text;
                    for (k, v) in &out.witnesses {
                        let _ = writeln!(text, "{k}\t{v}\t{}", v.approx(15));
                    }
                    text.push_str(&out.trailer);
                    write!(stdout, "{text}")
                }
                Format::Json => {
                    let witnesses: Map<String, Value> =
                        out.witnesses.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect();
                    let doc = json!({
                        "command": name,
                        "inputs": Value::Object(out.inputs),
                        "result": out.result,
                        "witnesses": Value::Object(witnesses),
                    });
                    writeln!(stdout, "{doc}")
                }
            };
            code
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}
