//! Command-line front end. [`run`] maps an argument vector to an exit code
//! and one JSON document with the fields `query`, `result`, `certificate`
//! and `elapsed_ms`.
//!
//! Exit codes: 0 decided, 2 degree cap exceeded, 3 parse error, 64 usage or
//! invalid input.
//!
//! File formats:
//!
//! * config: `key = value` lines with keys `max_splitting_degree`,
//!   `max_input_degree`, `default_p`; `#` comments.
//! * `--problem`: the group-problem format of
//!   [`thalg::embedding::parse_problem`].
//! * `--module`: `p dim` then generator matrices, see
//!   [`thalg::orbit::parse_module`].
//! * `--sets`: `;`-separated index sets, members `,`-separated, `-` for the
//!   empty set, or `all` for every proper subset.

use std::ffi::OsString;
use std::fs;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thalg::axioms::{axiom_check, axiom_stream_with};
use thalg::embedding::{parse_problem, solve_embedding_problem, EmbeddingOutcome};
use thalg::factor::{factor_with_cap, Factorization};
use thalg::galois::{galois_data, Caps, GroupCertificate, DEFAULT_MAX_DEFINING_DEGREE};
use thalg::membership::{ClassKind, Decision, FieldTag, Oracle};
use thalg::orbit::{build_blocks, full_basis, parse_index_sets, parse_module, proper_subsets, verify_lemma};
use thalg::parse::{parse_config, parse_poly, Config};
use thalg::perm::Perm;
use thalg::poly::squarefree_part;
use thalg::roots::isolate_roots;
use thalg::sturm::{count_real_roots, SturmChain};
use thalg::{Error, PolyZ, Rat};

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "thalg", version, about = "Exact root-membership decisions over number fields")]
struct Cli {
    /// key=value config file; flags override it
    #[arg(long, global = true)]
    config: Option<String>,
    #[arg(long, global = true)]
    max_splitting_degree: Option<usize>,
    #[arg(long, global = true)]
    max_input_degree: Option<usize>,
    /// Report `elapsed_ms` as 0, for byte-identical output
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Factor over Q
    Factor {
        #[arg(long)]
        poly: String,
    },
    /// Irreducibility over Q
    Irreducible {
        #[arg(long)]
        poly: String,
    },
    /// Count and isolate real roots
    RealRoots {
        #[arg(long)]
        poly: String,
        /// Interval width bound, a rational such as 1/1000
        #[arg(long, default_value = "1/1000")]
        precision: String,
    },
    /// Whether an irreducible polynomial has only real roots
    TotallyReal {
        #[arg(long)]
        poly: String,
    },
    /// Galois group of a squarefree polynomial as root permutations
    GaloisGroup {
        #[arg(long)]
        poly: String,
    },
    /// Whether the polynomial has a root in the chosen field
    DecideRoot {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Label a monic polynomial for the axiom families
    Classify {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Emit the axiom stream
    Axioms {
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        max_height: i64,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Solve a finite embedding problem read from a file
    EmbedSolve {
        #[arg(long)]
        problem: String,
    },
    /// Check pairwise non-conjugacy of the hyperplanes for given index sets
    OrbitVerify {
        #[arg(long)]
        module: String,
        #[arg(long)]
        blocks: usize,
        /// `1,2;3;-` style list, or `all`
        #[arg(long, allow_hyphen_values = true)]
        sets: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    Qbar,
    Totr,
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "E", alias = "e")]
    E,
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    /// JSON document, or clap's help/version text.
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Answer = Result<(Value, Value), Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let ok = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            return if ok {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let query = query_echo(&cli);
    let answer = settings(&cli).and_then(|s| dispatch(&cli.cmd, &s));
    let elapsed = if cli.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    let (code, doc, stderr) = match answer {
        Ok((result, certificate)) => (
            EXIT_DECIDED,
            json!({"query": query, "result": result, "certificate": certificate, "elapsed_ms": elapsed}),
            String::new(),
        ),
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Lib(e) => {
                    let code = match e {
                        Error::DegreeCapExceeded { .. } => EXIT_CAP,
                        Error::Parse { .. } => EXIT_PARSE,
                        _ => EXIT_USAGE,
                    };
                    (code, error_kind(&e), e.to_string())
                }
                Failure::Usage(m) => (EXIT_USAGE, "usage", m),
            };
            (
                code,
                json!({"query": query, "error": {"kind": kind, "message": msg}, "elapsed_ms": elapsed}),
                format!("thalg: {msg}\n"),
            )
        }
    };
    Outcome {
        code,
        stdout: serde_json::to_string_pretty(&doc).unwrap() + "\n",
        stderr,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DegreeCapExceeded { .. } => "degree_cap_exceeded",
        Error::Parse { .. } => "parse",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::DegreeTooSmall => "degree_too_small",
        Error::NotSquarefree => "not_squarefree",
        Error::NotIrreducible => "not_irreducible",
        Error::NoInvariantComplement { .. } => "no_invariant_complement",
        Error::IndexSetNotProper => "index_set_not_proper",
        _ => "invalid",
    }
}

struct Settings {
    config: Config,
    caps: Caps,
}

impl Settings {
    fn prime(&self, flag: Option<u64>) -> Result<u64, Failure> {
        flag.or(self.config.default_p)
            .ok_or_else(|| Failure::Usage("--p is required (or set default_p in the config)".into()))
    }
}

fn settings(cli: &Cli) -> Result<Settings, Failure> {
    let mut config = match &cli.config {
        Some(path) => parse_config(&read(path)?)?,
        None => Config::default(),
    };
    if cli.max_splitting_degree.is_some() {
        config.max_splitting_degree = cli.max_splitting_degree;
    }
    if cli.max_input_degree.is_some() {
        config.max_input_degree = cli.max_input_degree;
    }
    let caps = Caps {
        max_splitting_degree: config.splitting_degree(),
        max_defining_degree: DEFAULT_MAX_DEFINING_DEGREE,
    };
    Ok(Settings { config, caps })
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn query_echo(cli: &Cli) -> Value {
    match &cli.cmd {
        Cmd::Factor { poly } => json!({"command": "factor", "poly": poly}),
        Cmd::Irreducible { poly } => json!({"command": "irreducible", "poly": poly}),
        Cmd::RealRoots { poly, precision } => {
            json!({"command": "real-roots", "poly": poly, "precision": precision})
        }
        Cmd::TotallyReal { poly } => json!({"command": "totally-real", "poly": poly}),
        Cmd::GaloisGroup { poly } => json!({"command": "galois-group", "poly": poly}),
        Cmd::DecideRoot { poly, field, p } => {
            let field = match field {
                FieldArg::Qbar => "qbar",
                FieldArg::Totr => "totr",
                FieldArg::L => "L",
                FieldArg::E => "E",
            };
            json!({"command": "decide-root", "poly": poly, "field": field, "p": p})
        }
        Cmd::Classify { poly, p } => json!({"command": "classify", "poly": poly, "p": p}),
        Cmd::Axioms { max_deg, max_height, p, out } => {
            json!({"command": "axioms", "max_deg": max_deg, "max_height": max_height, "p": p, "out": out})
        }
        Cmd::EmbedSolve { problem } => json!({"command": "embed-solve", "problem": problem}),
        Cmd::OrbitVerify { module, blocks, sets } => {
            json!({"command": "orbit-verify", "module": module, "blocks": blocks, "sets": sets})
        }
    }
}

fn dispatch(cmd: &Cmd, s: &Settings) -> Answer {
    match cmd {
        Cmd::Factor { poly } => {
            let f = parse_poly(poly)?;
            let fz = factor_with_cap(&f, s.config.input_degree())?;
            let back = fz.reassemble();
            Ok((
                factors_json(&fz),
                json!({"reassembled": back.to_string(), "matches_input": back == f}),
            ))
        }
        Cmd::Irreducible { poly } => {
            let fz = factor_with_cap(&parse_poly(poly)?, s.config.input_degree())?;
            Ok((json!(fz.is_irreducible()), factor_certificate(&fz)))
        }
        Cmd::RealRoots { poly, precision } => real_roots(&parse_poly(poly)?, precision, s),
        Cmd::TotallyReal { poly } => {
            let f = input(poly, s)?;
            let fz = factor_with_cap(&f, s.config.input_degree())?;
            if !fz.is_irreducible() {
                return Err(Error::NotIrreducible.into());
            }
            let real = count_real_roots(&f)?;
            let degree = f.deg();
            Ok((
                json!(real as isize == degree),
                json!({"degree": degree, "real_roots": real, "irreducible": true}),
            ))
        }
        Cmd::GaloisGroup { poly } => {
            let f = input(poly, s)?;
            let d = galois_data(&f, s.caps)?;
            Ok((
                json!(d.group.order()),
                json!({
                    "degree": d.group.degree(),
                    "generators": perms(d.group.generators()),
                    "conjugation": d.conjugation.to_string(),
                    "method": certificate_json(&d.certificate),
                    "root_boxes": d.roots.boxes().iter().map(|b| json!({
                        "re": [b.re.lo.to_string(), b.re.hi.to_string()],
                        "im": [b.im.lo.to_string(), b.im.hi.to_string()],
                    })).collect::<Vec<_>>(),
                }),
            ))
        }
        Cmd::DecideRoot { poly, field, p } => {
            let f = input(poly, s)?;
            let tag = match field {
                FieldArg::Qbar => FieldTag::QBar,
                FieldArg::Totr => FieldTag::TotR,
                FieldArg::L => FieldTag::L,
                FieldArg::E => FieldTag::e(s.prime(*p)?)?,
            };
            let d = Oracle::new(s.caps).decide(&f, tag)?;
            Ok((json!(d.has_root), decision_json(&d)))
        }
        Cmd::Classify { poly, p } => {
            let f = input(poly, s)?;
            if !f.is_monic() || f.deg() < 1 {
                return Err(Failure::Usage("classify needs a monic polynomial of degree >= 1".into()));
            }
            let p = s.prime(*p)?;
            let tail = &f.coeffs()[..f.deg() as usize];
            let oracle = Oracle::new(s.caps);
            let label = oracle.classify(tail, p)?;
            let kind = match label.kind {
                ClassKind::NotIrreducible => "NOT_IRREDUCIBLE",
                ClassKind::IrrNoRootInE => "IRR_NO_ROOT_IN_E",
                ClassKind::IrrSplitsInE => "IRR_SPLITS_IN_E",
            };
            let cert = match label.kind {
                ClassKind::NotIrreducible => factor_certificate(&factor_with_cap(&f, s.config.input_degree())?),
                _ => decision_json(&oracle.decide(&f, FieldTag::E(p))?),
            };
            Ok((json!({"label": kind, "totally_real": label.in_t_n}), cert))
        }
        Cmd::Axioms { max_deg, max_height, p, out } => axioms(*max_deg, *max_height, s.prime(*p)?, out.as_deref(), s),
        Cmd::EmbedSolve { problem } => {
            let e = parse_problem(&read(problem)?)?;
            let orders = json!({"G": e.g.order(), "A": e.a.order(), "B": e.b.order()});
            Ok(match solve_embedding_problem(&e) {
                EmbeddingOutcome::Solved(h) => (
                    json!("solved"),
                    json!({"orders": orders, "gamma": h.images, "verified": e.verify(&h)}),
                ),
                EmbeddingOutcome::NoSolution => (json!("no_solution"), json!({"orders": orders, "search": "exhaustive"})),
            })
        }
        Cmd::OrbitVerify { module, blocks, sets } => {
            let m = parse_module(&read(module)?)?;
            let sets = if sets.trim() == "all" {
                proper_subsets(*blocks)
            } else {
                parse_index_sets(sets)?
            };
            let bl = build_blocks(&m, *blocks)?;
            let basis = full_basis(&m, &bl);
            let r = verify_lemma(&m, &bl, &basis, &sets)?;
            let fmt_set = |s: &std::collections::BTreeSet<usize>| s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            Ok((
                json!(r.ok),
                json!({
                    "p": m.p(),
                    "dim": m.dim(),
                    "group_order": m.elements().len(),
                    "blocks": bl.iter().map(|b| json!({"seed": b.seed, "basis": b.basis})).collect::<Vec<_>>(),
                    "hyperplanes": r.hyperplanes.iter().map(|h| json!({
                        "index_set": fmt_set(&h.index_set),
                        "functional": h.functional,
                    })).collect::<Vec<_>>(),
                    "pairs": r.pairs.iter().map(|pc| json!({
                        "first": pc.first,
                        "second": pc.second,
                        "conjugate": pc.conjugate,
                        "witness": pc.witness.as_ref().map(|w| json!({
                            "block": w.block, "vector": w.vector,
                            "value_in": w.value_in, "value_out": w.value_out,
                        })),
                    })).collect::<Vec<_>>(),
                    "distinct_orbits": r.distinct_orbits,
                }),
            ))
        }
    }
}

/// Parses and applies the input degree cap.
fn input(poly: &str, s: &Settings) -> Result<PolyZ, Failure> {
    let f = parse_poly(poly)?;
    let cap = s.config.input_degree();
    if f.deg() > cap as isize {
        return Err(Error::DegreeCapExceeded { estimate: f.deg() as u64, cap: cap as u64 }.into());
    }
    Ok(f)
}

fn real_roots(f: &PolyZ, precision: &str, s: &Settings) -> Answer {
    let eps: Rat = precision
        .parse()
        .map_err(|_| Failure::Usage(format!("bad precision `{precision}`")))?;
    if f.deg() > s.config.input_degree() as isize {
        return Err(Error::DegreeCapExceeded { estimate: f.deg() as u64, cap: s.config.input_degree() as u64 }.into());
    }
    let count = count_real_roots(f)?;
    let g = squarefree_part(f)?;
    let chain = SturmChain::new(&g);
    let (minus, plus) = (chain.variations_at_infinity(false), chain.variations_at_infinity(true));
    let intervals: Vec<Value> = isolate_roots(&g, &eps)?
        .into_iter()
        .filter(|b| b.is_real())
        .map(|b| json!([b.re.lo.to_string(), b.re.hi.to_string()]))
        .collect();
    Ok((
        json!(count),
        json!({
            "squarefree_part": g.to_string(),
            "sturm_variations": {"minus_infinity": minus, "plus_infinity": plus},
            "intervals": intervals,
        }),
    ))
}

fn axioms(max_deg: usize, h: i64, p: u64, out: Option<&str>, s: &Settings) -> Answer {
    let oracle = Oracle::new(s.caps);
    let mut lines = Vec::new();
    let mut counts = [0usize; 3];
    let mut checked = true;
    axiom_stream_with(max_deg, h, p, &oracle, |r| {
        counts[r.family as usize] += 1;
        checked &= axiom_check(&r, &oracle);
        lines.push(r.to_line());
        Ok(())
    })?;
    let families = json!({"DICHOTOMY": counts[0], "NO_ROOT": counts[1], "SPLITS": counts[2]});
    let cert = json!({"records": lines.len(), "families": families, "all_checked": checked});
    match out {
        Some(path) => {
            let mut text = lines.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))?;
            Ok((json!(path), cert))
        }
        None => Ok((json!(lines), cert)),
    }
}

fn perms(ps: &[Perm]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn factors_json(fz: &Factorization) -> Value {
    json!({
        "content": fz.content.to_string(),
        "factors": fz.factors.iter().map(|(g, m)| json!({
            "factor": g.to_string(),
            "multiplicity": m,
        })).collect::<Vec<_>>(),
    })
}

fn factor_certificate(fz: &Factorization) -> Value {
    json!({"factorization": factors_json(fz), "reassembled": fz.reassemble().to_string()})
}

fn certificate_json(c: &GroupCertificate) -> Value {
    match c {
        GroupCertificate::Tower { degree } => json!({"kind": "tower", "degree": degree}),
        GroupCertificate::Symmetric { primes } => json!({"kind": "symmetric", "frobenius_primes": primes}),
        GroupCertificate::Alternating { primes } => json!({"kind": "alternating", "frobenius_primes": primes}),
    }
}

fn decision_json(d: &Decision) -> Value {
    json!({
        "field": d.field.to_string(),
        "splits": d.splits,
        "factors": d.factors.iter().map(|r| json!({
            "factor": r.factor.to_string(),
            "has_root": r.has_root,
            "group": r.group.as_ref().map(|g| json!({
                "order": g.order,
                "method": certificate_json(&g.certificate),
                "conjugation": g.conjugation.to_string(),
                "h_generators": perms(&g.h_generators),
            })),
        })).collect::<Vec<_>>(),
    })
}
