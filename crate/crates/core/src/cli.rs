//! Command-line front-end.
//!
//! Every invocation is fully assembled in memory before anything is written,
//! so an input error (exit code 2) never leaves a partial document behind.
//! Exit code 1 signals a mathematical negative: a non-member, a proper
//! ideal where a unit was expected, unequal ideals, a failed verifier.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::gf::{Field, FieldElement};
use crate::ideal::{rabinowitsch_lift, vanishing_ideal, Ideal, MembershipCertificate};
use crate::parse::parse_polynomial_with;
use crate::poly::Polynomial;
use crate::ring::{ideal_of_pointset, Point, PointSet, RingElement, SubsetOfS};
use crate::verify::{self, VerificationReport, VerifyGrid};

#[derive(Parser, Debug)]
#[command(
    name = "coordring",
    version,
    about = "Ideals and varieties in coordinate rings K[S] of finite point sets over GF(q)"
)]
struct Cli {
    #[command(flatten)]
    ctx: ContextArgs,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Clone, Default)]
struct ContextArgs {
    /// Field, e.g. "GF(4)", "GF(2^3)", "GF(4; modulus=t^2+t+1)" or just "4".
    #[arg(long, global = true)]
    field: Option<String>,
    /// Number of variables n.
    #[arg(long, global = true)]
    nvars: Option<usize>,
    /// Point-set file, or FULL for all of GF(q)^n (the default).
    #[arg(long, global = true)]
    points: Option<String>,
    /// Problem file with FIELD, VARS, POINTS and named POLY sections.
    #[arg(long, global = true)]
    problem: Option<String>,
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug, Clone)]
struct GensArg {
    /// Comma-separated generators (may reference POLY names). Defaults to
    /// every POLY of the problem file.
    #[arg(long)]
    gens: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Points of S where every generator vanishes.
    Variety(GensArg),
    /// Generators of I(S), or of I_S(T) with --subset.
    IdealOf {
        /// Points of T, separated by ';', e.g. "(0,1);(1,1)".
        #[arg(long)]
        subset: Option<String>,
    },
    /// Decide φ ∈ J; prints a certificate for members.
    Member {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        phi: String,
    },
    /// Certificate φ^m = Σ h_i φ_i (exit 1 for non-members).
    Certify {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        phi: String,
    },
    /// Certificate Σ h_i φ_i = 1 for an ideal with empty variety.
    UnitCert(GensArg),
    /// Sum, product, intersection or quotient of two ideals.
    Op {
        op: IdealOp,
        #[command(flatten)]
        gens: GensArg,
        /// Generators of the second ideal.
        #[arg(long)]
        gens2: String,
    },
    /// Radical of J (always J itself in K[S]).
    Radical(GensArg),
    /// Whether two ideals are equal.
    Equal {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        gens2: String,
    },
    /// Whether J is maximal.
    Maximal(GensArg),
    /// Lift (J, φ) to S × GF(q) with the extra generator 1 − yφ.
    Rabinowitsch {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        phi: String,
    },
    /// Reduced representative and evaluation vector of [φ].
    Reduce {
        #[arg(long)]
        phi: String,
    },
    /// Run verifiers.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum IdealOp {
    Sum,
    Product,
    Intersect,
    Quotient,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum VerifyTarget {
    All,
    Nullstellensatz,
    Weak,
    Radical,
    Bezout,
    Correspondence,
    Quotient,
    SumIdentities,
    ZeroFunction,
    Rabinowitsch,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    target: VerifyTarget,
    /// Field orders for `verify all`, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 4])]
    q: Vec<u32>,
    /// Variable counts for `verify all`, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2])]
    n: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Input problems are reported with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<String> for InputError {
    fn from(s: String) -> Self {
        InputError(s)
    }
}

type CliResult<T> = std::result::Result<T, InputError>;

/// Parsed problem file.
#[derive(Debug, Default, Clone)]
pub struct ProblemFile {
    pub field: Option<String>,
    pub nvars: Option<usize>,
    /// `None` when absent; `Some(None)` for `POINTS FULL`.
    pub points: Option<Option<Vec<Vec<String>>>>,
    /// Named polynomials in file order, as unparsed expressions.
    pub polys: Vec<(String, String)>,
    pub op: Option<String>,
}

/// Parses the line-oriented problem format:
///
/// ```text
/// # comment
/// FIELD GF(4)
/// VARS 2
/// POINTS            (or: POINTS FULL)
/// (0,1)
/// (t,t+1)
/// POLY f = x*y + t
/// OP variety
/// ```
///
/// Point lines are also accepted before any header, so a bare list of
/// points (or the single word `FULL`) is a valid point-set file.
pub fn parse_problem_file(text: &str) -> Result<ProblemFile, String> {
    let mut pf = ProblemFile::default();
    let mut in_points = true;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: &str| format!("line {}: {msg}", lineno + 1);
        let (head, rest) = match line.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (line, ""),
        };
        match head {
            "FIELD" => {
                pf.field = Some(rest.to_string());
                in_points = false;
            }
            "VARS" => {
                pf.nvars = Some(rest.parse().map_err(|_| at("VARS expects a number"))?);
                in_points = false;
            }
            "POINTS" => match rest {
                "" => {
                    pf.points = Some(Some(Vec::new()));
                    in_points = true;
                }
                "FULL" => {
                    pf.points = Some(None);
                    in_points = false;
                }
                _ => return Err(at("POINTS takes no argument other than FULL")),
            },
            "FULL" if rest.is_empty() && in_points => {
                pf.points = Some(None);
                in_points = false;
            }
            "POLY" => {
                let (name, expr) = rest
                    .split_once('=')
                    .ok_or_else(|| at("expected POLY <name> = <expr>"))?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(at("invalid polynomial name"));
                }
                if pf.polys.iter().any(|(n, _)| n == name) {
                    return Err(at(&format!("duplicate polynomial name '{name}'")));
                }
                pf.polys.push((name.to_string(), expr.trim().to_string()));
                in_points = false;
            }
            "OP" => {
                pf.op = Some(rest.to_string());
                in_points = false;
            }
            _ if in_points => {
                let coords = split_point(line);
                if coords.is_empty() {
                    return Err(at("empty point"));
                }
                match &mut pf.points {
                    Some(Some(pts)) => pts.push(coords),
                    Some(None) => return Err(at("points listed after FULL")),
                    None => pf.points = Some(Some(vec![coords])),
                }
            }
            _ => return Err(at(&format!("unexpected '{head}'"))),
        }
    }
    Ok(pf)
}

fn split_point(text: &str) -> Vec<String> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Splits on commas outside parentheses.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Splits an OP line into words, honouring double quotes.
fn split_words(text: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let (mut quoted, mut any) = (false, false);
    for c in text.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    words.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        words.push(cur);
    }
    words
}

/// Everything a subcommand needs: the ring and the named polynomials.
struct Context {
    ring: Arc<PointSet>,
    names: HashMap<String, Polynomial>,
    named_order: Vec<String>,
}

impl Context {
    fn field(&self) -> &Field {
        self.ring.field()
    }

    fn poly(&self, text: &str) -> CliResult<Polynomial> {
        parse_polynomial_with(text, self.field(), self.ring.nvars(), &self.names)
            .map(|p| p.polynomial)
            .map_err(|e| InputError(format!("in '{}': {e}", text.trim())))
    }

    fn element(&self, text: &str) -> CliResult<RingElement> {
        Ok(RingElement::embed(&self.poly(text)?, &self.ring)?)
    }

    fn ideal(&self, gens: Option<&str>) -> CliResult<Ideal> {
        let elements = match gens {
            Some(text) => split_top_level(text)
                .into_iter()
                .map(|g| self.element(g))
                .collect::<CliResult<Vec<_>>>()?,
            None if !self.named_order.is_empty() => self
                .named_order
                .iter()
                .map(|n| RingElement::embed(&self.names[n], &self.ring))
                .collect::<Result<Vec<_>, _>>()?,
            None => {
                return Err(InputError(
                    "no generators: pass --gens or a problem file with POLY lines".into(),
                ))
            }
        };
        Ok(Ideal::new(elements)?)
    }

    fn parse_point(&self, coords: &[String]) -> CliResult<Point> {
        if coords.len() != self.ring.nvars() {
            return Err(InputError(format!(
                "point ({}) has {} coordinates, expected {}",
                coords.join(","),
                coords.len(),
                self.ring.nvars()
            )));
        }
        coords
            .iter()
            .map(|c| self.field().parse_element(c).map_err(InputError::from))
            .collect()
    }
}

fn parse_field(text: &str) -> CliResult<Field> {
    let text = text.trim();
    match text.parse::<u32>() {
        Ok(q) => Ok(Field::from_order(q)?),
        Err(_) => Ok(Field::parse_descriptor(text)?),
    }
}

fn read_file(path: &str) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {path}: {e}")))
}

fn build_context(args: &ContextArgs, problem: Option<&ProblemFile>) -> CliResult<Context> {
    let mut merged = problem.cloned().unwrap_or_default();
    if let Some(path) = &args.points {
        merged.points = Some(if path == "FULL" {
            None
        } else {
            let pf = parse_problem_file(&read_file(path)?).map_err(|e| format!("{path}: {e}"))?;
            if merged.field.is_none() {
                merged.field = pf.field;
            }
            if merged.nvars.is_none() {
                merged.nvars = pf.nvars;
            }
            pf.points.unwrap_or(Some(Vec::new()))
        });
    }
    let field_text = args.field.clone().or(merged.field).ok_or_else(|| {
        InputError("no field given: pass --field or FIELD in a problem file".into())
    })?;
    let field = parse_field(&field_text)?;
    let nvars = args
        .nvars
        .or(merged.nvars)
        .ok_or_else(|| InputError("no variable count given: pass --nvars or VARS".into()))?;
    let ring = match merged.points.unwrap_or(None) {
        None => PointSet::full(&field, nvars)?,
        Some(raw) => {
            let pts = raw
                .iter()
                .map(|c| {
                    if c.len() != nvars {
                        Err(InputError(format!(
                            "point ({}) has {} coordinates, expected {nvars}",
                            c.join(","),
                            c.len()
                        )))
                    } else {
                        c.iter()
                            .map(|e| field.parse_element(e).map_err(InputError::from))
                            .collect()
                    }
                })
                .collect::<CliResult<Vec<Point>>>()?;
            PointSet::new(&field, nvars, pts)?
        }
    };
    let mut ctx = Context {
        ring,
        names: HashMap::new(),
        named_order: Vec::new(),
    };
    for (name, expr) in &merged.polys {
        let p = ctx
            .poly(expr)
            .map_err(|e| InputError(format!("POLY {name}: {}", e.0)))?;
        ctx.names.insert(name.clone(), p);
        ctx.named_order.push(name.clone());
    }
    Ok(ctx)
}

fn element_json(field: &Field, a: FieldElement) -> Value {
    json!(field.coeffs(a))
}

fn point_json(field: &Field, p: &[FieldElement]) -> Value {
    Value::Array(p.iter().map(|&a| element_json(field, a)).collect())
}

fn subset_json(t: &SubsetOfS) -> Value {
    let field = t.ring().field();
    Value::Array(
        t.points()
            .into_iter()
            .map(|p| point_json(field, p))
            .collect(),
    )
}

fn ring_element_json(e: &RingElement) -> Value {
    json!({
        "polynomial": e.representative().to_string(),
        "values": e.values().iter().map(|&v| element_json(e.field(), v)).collect::<Vec<_>>(),
    })
}

fn certificate_json(c: &MembershipCertificate) -> Value {
    json!({
        "exponent": c.exponent,
        "cofactors": c.cofactors.iter().map(ring_element_json).collect::<Vec<_>>(),
    })
}

fn ideal_json(i: &Ideal) -> Value {
    json!({
        "generators": i.generators().iter().map(ring_element_json).collect::<Vec<_>>(),
        "principal_generator": ring_element_json(&i.principal_generator()),
        "variety": subset_json(&i.variety()),
    })
}

fn format_subset(t: &SubsetOfS) -> String {
    let ring = t.ring();
    let pts: Vec<_> = t
        .points()
        .into_iter()
        .map(|p| ring.format_point(p))
        .collect();
    format!("{{{}}}", pts.join(", "))
}

fn format_values(e: &RingElement) -> String {
    let vals: Vec<_> = e
        .values()
        .iter()
        .map(|&v| e.field().format_element(v))
        .collect();
    format!("[{}]", vals.join(", "))
}

fn format_certificate(c: &MembershipCertificate, text: &mut String) {
    let _ = writeln!(text, "exponent: {}", c.exponent);
    for (i, h) in c.cofactors.iter().enumerate() {
        let _ = writeln!(text, "h{}: {}", i + 1, h.representative());
    }
}

/// Outcome of one subcommand, before rendering.
struct Outcome {
    exit: i32,
    operation: String,
    result: Value,
    certificate: Option<Value>,
    report: Option<Value>,
    text: String,
    /// `(field, nvars, pointset)` overrides for context-free commands.
    header: Option<(Value, Value, Value)>,
}

impl Outcome {
    fn new(operation: &str, result: Value, text: String) -> Self {
        Outcome {
            exit: 0,
            operation: operation.to_string(),
            result,
            certificate: None,
            report: None,
            text,
            header: None,
        }
    }

    fn negative_unless(mut self, ok: bool) -> Self {
        if !ok {
            self.exit = 1;
        }
        self
    }
}

fn run_command(
    cmd: &Command,
    ctx_args: &ContextArgs,
    problem: Option<&ProblemFile>,
) -> CliResult<(Outcome, Option<Context>)> {
    if let Command::Verify(v) = cmd {
        return run_verify(v, ctx_args, problem);
    }
    let ctx = build_context(ctx_args, problem)?;
    let outcome = match cmd {
        Command::Variety(g) => {
            let ideal = ctx.ideal(g.gens.as_deref())?;
            let v = ideal.variety();
            let text = format!("variety: {}\n|V| = {}\n", format_subset(&v), v.len());
            Outcome::new(
                "variety",
                json!({ "variety": subset_json(&v), "size": v.len() }),
                text,
            )
        }
        Command::IdealOf { subset } => match subset {
            None => {
                let gens = ideal_of_pointset(&ctx.ring)?;
                let mut text = String::from("generators of I(S):\n");
                for g in &gens {
                    let _ = writeln!(text, "  {g}");
                }
                let strs: Vec<_> = gens.iter().map(|g| g.to_string()).collect();
                Outcome::new("ideal-of", json!({ "generators": strs }), text)
            }
            Some(spec) => {
                let pts = spec
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| ctx.parse_point(&split_point(s)))
                    .collect::<CliResult<Vec<_>>>()?;
                let t = SubsetOfS::from_points(&ctx.ring, &pts)?;
                let ideal = vanishing_ideal(&t);
                let g = &ideal.generators()[0];
                let text = format!(
                    "I_S(T) = <{}>\nvalues: {}\n",
                    g.representative(),
                    format_values(g)
                );
                Outcome::new(
                    "ideal-of",
                    json!({ "subset": subset_json(&t), "ideal": ideal_json(&ideal) }),
                    text,
                )
            }
        },
        Command::Member { gens, phi } | Command::Certify { gens, phi } => {
            let certify_only = matches!(cmd, Command::Certify { .. });
            let ideal = ctx.ideal(gens.gens.as_deref())?;
            let phi_el = ctx.element(phi)?;
            let member = ideal.contains(&phi_el)?;
            let name = if certify_only { "certify" } else { "member" };
            let mut text = format!("member: {member}\n");
            let mut out = Outcome::new(name, json!({ "member": member }), String::new());
            if member {
                let cert = ideal.certify(&phi_el)?;
                format_certificate(&cert, &mut text);
                out.certificate = Some(certificate_json(&cert));
            } else {
                let witness = ideal
                    .variety()
                    .flags()
                    .iter()
                    .zip(phi_el.values())
                    .position(|(&in_v, v)| in_v && !v.is_zero())
                    .expect("non-member is nonzero somewhere on the variety");
                let pt = &ctx.ring.points()[witness];
                let _ = writeln!(
                    text,
                    "phi does not vanish at {} in the variety",
                    ctx.ring.format_point(pt)
                );
                out.result["witness_point"] = point_json(ctx.field(), pt);
            }
            out.text = text;
            out.negative_unless(member)
        }
        Command::UnitCert(g) => {
            let ideal = ctx.ideal(g.gens.as_deref())?;
            match ideal.unit_certificate() {
                Ok(cert) => {
                    let w = ideal.nonvanishing_witness()?;
                    let mut text = String::from("unit ideal: true\n");
                    let _ = writeln!(
                        text,
                        "nowhere-vanishing element: {}",
                        w.element.representative()
                    );
                    format_certificate(&cert, &mut text);
                    let mut out = Outcome::new(
                        "unit-cert",
                        json!({ "unit": true, "nonvanishing": ring_element_json(&w.element) }),
                        text,
                    );
                    out.certificate = Some(certificate_json(&cert));
                    out
                }
                Err(Error::ProperIdeal) => {
                    let v = ideal.variety();
                    let text = format!("unit ideal: false\nvariety: {}\n", format_subset(&v));
                    Outcome::new(
                        "unit-cert",
                        json!({ "unit": false, "variety": subset_json(&v) }),
                        text,
                    )
                    .negative_unless(false)
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Op { op, gens, gens2 } => {
            let a = ctx.ideal(gens.gens.as_deref())?;
            let b = ctx.ideal(Some(gens2))?;
            let (name, r) = match op {
                IdealOp::Sum => ("sum", a.sum(&b)?),
                IdealOp::Product => ("product", a.product(&b)?),
                IdealOp::Intersect => ("intersect", a.intersect(&b)?),
                IdealOp::Quotient => ("quotient", a.quotient(&b)?),
            };
            let g = r.principal_generator();
            let text = format!(
                "{name}: <{}>\nvalues: {}\nvariety: {}\n",
                g.representative(),
                format_values(&g),
                format_subset(&r.variety())
            );
            Outcome::new(&format!("op {name}"), ideal_json(&r), text)
        }
        Command::Radical(g) => {
            let ideal = ctx.ideal(g.gens.as_deref())?;
            let r = ideal.radical();
            let pg = r.principal_generator();
            let text = format!(
                "radical: <{}>\nequal to J: true\nvariety: {}\n",
                pg.representative(),
                format_subset(&r.variety())
            );
            Outcome::new("radical", ideal_json(&r), text)
        }
        Command::Equal { gens, gens2 } => {
            let a = ctx.ideal(gens.gens.as_deref())?;
            let b = ctx.ideal(Some(gens2))?;
            let eq = a.equals(&b)?;
            let text = format!(
                "equal: {eq}\nV(J1) = {}\nV(J2) = {}\n",
                format_subset(&a.variety()),
                format_subset(&b.variety())
            );
            Outcome::new(
                "equal",
                json!({ "equal": eq, "variety1": subset_json(&a.variety()), "variety2": subset_json(&b.variety()) }),
                text,
            )
            .negative_unless(eq)
        }
        Command::Maximal(g) => {
            let ideal = ctx.ideal(g.gens.as_deref())?;
            let m = ideal.is_maximal();
            let v = ideal.variety();
            let text = format!("maximal: {m}\nvariety: {}\n", format_subset(&v));
            Outcome::new(
                "maximal",
                json!({ "maximal": m, "variety": subset_json(&v) }),
                text,
            )
            .negative_unless(m)
        }
        Command::Rabinowitsch { gens, phi } => {
            let ideal = ctx.ideal(gens.gens.as_deref())?;
            let phi_el = ctx.element(phi)?;
            let (lifted_set, lifted) = rabinowitsch_lift(&ideal, &phi_el)?;
            let v = lifted.variety();
            let empty = v.is_empty();
            let mut text = format!(
                "lifted point set: {} points in n={}\nlifted variety empty: {empty}\nphi in I_S(V_S(J)): {empty}\n",
                lifted_set.len(),
                lifted_set.nvars()
            );
            if !empty {
                let _ = writeln!(text, "lifted variety: {}", format_subset(&v));
            }
            let gens: Vec<_> = lifted
                .generators()
                .iter()
                .map(|g| g.representative().to_string())
                .collect();
            Outcome::new(
                "rabinowitsch",
                json!({
                    "lifted_nvars": lifted_set.nvars(),
                    "lifted_points": lifted_set.len(),
                    "lifted_generators": gens,
                    "lifted_variety": subset_json(&v),
                    "lifted_variety_empty": empty,
                    "member_of_vanishing_ideal": empty,
                }),
                text,
            )
            .negative_unless(empty)
        }
        Command::Reduce { phi } => {
            let p = ctx.poly(phi)?;
            let e = RingElement::embed(&p, &ctx.ring)?;
            let reduced = e.representative().clone();
            let text = format!("reduced: {reduced}\nvalues: {}\n", format_values(&e));
            Outcome::new(
                "reduce",
                json!({ "input": p.to_string(), "reduced": ring_element_json(&e) }),
                text,
            )
        }
        Command::Verify(_) => unreachable!(),
    };
    Ok((outcome, Some(ctx)))
}

fn reports_outcome(
    operation: &str,
    reports: &[VerificationReport],
    header: (Value, Value, Value),
) -> Outcome {
    let passed = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    for r in reports {
        let _ = writeln!(
            text,
            "{} {} [{}]: {} instances, {} oracle-checked, {} failures",
            if r.passed() { "PASS" } else { "FAIL" },
            r.statement_id,
            r.scope,
            r.instance_count,
            r.oracle_count,
            r.failure_count
        );
        for f in &r.failures {
            let _ = writeln!(text, "    {f}");
        }
    }
    let _ = writeln!(
        text,
        "{} reports, {}",
        reports.len(),
        if passed { "all passed" } else { "FAILURES" }
    );
    let total: u64 = reports.iter().map(|r| r.instance_count).sum();
    let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    let mut out = Outcome::new(
        operation,
        json!({ "passed": passed, "reports": reports.len(), "instances": total, "failures": failures }),
        text,
    );
    out.report = Some(serde_json::to_value(reports).expect("reports serialize"));
    out.header = Some(header);
    out.negative_unless(passed)
}

fn run_verify(
    v: &VerifyArgs,
    ctx_args: &ContextArgs,
    problem: Option<&ProblemFile>,
) -> CliResult<(Outcome, Option<Context>)> {
    let operation = format!(
        "verify {}",
        v.target.to_possible_value().unwrap().get_name()
    );
    match v.target {
        VerifyTarget::All => {
            let fields =
                v.q.iter()
                    .map(|&q| Field::from_order(q))
                    .collect::<Result<Vec<_>, _>>()?;
            if let Some(&n) = v.n.iter().find(|&&n| n == 0 || n > 8) {
                return Err(InputError(format!("--n {n} out of range 1..=8")));
            }
            let grid = VerifyGrid::new(fields.clone(), v.n.clone(), v.trials, v.seed);
            let reports = verify::verify_all(&grid)?;
            let header = (
                json!(fields.iter().map(|f| f.descriptor()).collect::<Vec<_>>()),
                json!(v.n),
                json!("grid"),
            );
            Ok((reports_outcome(&operation, &reports, header), None))
        }
        VerifyTarget::Bezout => {
            let field = parse_field(
                ctx_args
                    .field
                    .as_deref()
                    .ok_or_else(|| InputError("verify bezout needs --field".into()))?,
            )?;
            let max_m = (v.trials as u64).max(1);
            let reports = vec![verify::verify_bezout(&field, max_m)?];
            let header = (json!(field.descriptor()), Value::Null, Value::Null);
            Ok((reports_outcome(&operation, &reports, header), None))
        }
        target => {
            let ctx = build_context(ctx_args, problem)?;
            let ring = &ctx.ring;
            let (trials, seed) = (v.trials, v.seed);
            let reports = match target {
                VerifyTarget::Nullstellensatz => {
                    vec![verify::verify_nullstellensatz(ring, trials, seed)]
                }
                VerifyTarget::Weak => vec![verify::verify_weak(ring, trials, seed)],
                VerifyTarget::Radical => vec![verify::verify_radical(ring, trials, seed)?],
                VerifyTarget::Correspondence => vec![verify::verify_correspondence(ring)?],
                VerifyTarget::Quotient => vec![verify::verify_quotient(ring)?],
                VerifyTarget::SumIdentities => {
                    verify::verify_sum_identities(ring, trials, seed)?.to_vec()
                }
                VerifyTarget::ZeroFunction => {
                    vec![verify::verify_zero_function(
                        ring.field(),
                        ring.nvars(),
                        trials,
                        seed,
                    )?]
                }
                VerifyTarget::Rabinowitsch => {
                    vec![verify::verify_rabinowitsch(ring, trials, seed)?]
                }
                VerifyTarget::All | VerifyTarget::Bezout => unreachable!(),
            };
            let header = (
                json!(ring.field().descriptor()),
                json!(ring.nvars()),
                pointset_json(ring),
            );
            Ok((reports_outcome(&operation, &reports, header), Some(ctx)))
        }
    }
}

fn pointset_json(ring: &PointSet) -> Value {
    if ring.is_full() {
        json!("FULL")
    } else {
        Value::Array(
            ring.points()
                .iter()
                .map(|p| point_json(ring.field(), p))
                .collect(),
        )
    }
}

fn render(outcome: Outcome, ctx: Option<&Context>, as_json: bool) -> String {
    if !as_json {
        return outcome.text;
    }
    let (field, nvars, pointset) = match (outcome.header, ctx) {
        (Some(h), _) => h,
        (None, Some(c)) => (
            json!(c.field().descriptor()),
            json!(c.ring.nvars()),
            pointset_json(&c.ring),
        ),
        (None, None) => (Value::Null, Value::Null, Value::Null),
    };
    let mut doc = Map::new();
    doc.insert("field".into(), field);
    doc.insert("nvars".into(), nvars);
    doc.insert("pointset".into(), pointset);
    doc.insert("operation".into(), json!(outcome.operation));
    doc.insert("result".into(), outcome.result);
    if let Some(c) = outcome.certificate {
        doc.insert("certificate".into(), c);
    }
    if let Some(r) = outcome.report {
        doc.insert("report".into(), r);
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
    s.push('\n');
    s
}

fn execute(argv: &[String]) -> std::result::Result<(String, i32), (String, i32)> {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Ok((msg, 0))
            } else {
                Err((msg, 2))
            };
        }
    };
    let input_err = |e: InputError| (format!("error: {}\n", e.0), 2);
    let problem = match &cli.ctx.problem {
        Some(path) => {
            let text = read_file(path).map_err(input_err)?;
            Some(
                parse_problem_file(&text)
                    .map_err(|e| input_err(InputError(format!("{path}: {e}"))))?,
            )
        }
        None => None,
    };
    let command = match (&cli.command, problem.as_ref().and_then(|p| p.op.as_ref())) {
        (Some(c), _) => c.clone(),
        (None, Some(op)) => {
            let mut words = vec![argv.first().cloned().unwrap_or_else(|| "coordring".into())];
            words.extend(split_words(op));
            let sub = Cli::try_parse_from(&words)
                .map_err(|e| (format!("error: OP line: {}", e.render()), 2))?;
            sub.command
                .ok_or_else(|| ("error: OP line names no subcommand\n".to_string(), 2))?
        }
        (None, None) => {
            return Err(("error: no subcommand given (try --help)\n".to_string(), 2));
        }
    };
    let (outcome, ctx) = run_command(&command, &cli.ctx, problem.as_ref()).map_err(input_err)?;
    let exit = outcome.exit;
    Ok((render(outcome, ctx.as_ref(), cli.ctx.json), exit))
}

/// Runs the CLI on `argv` (including the program name), writing the result
/// document to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    match execute(argv) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err((text, code)) => {
            let _ = err.write_all(text.as_bytes());
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["coordring".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn problem_file_sections() {
        let pf = parse_problem_file(
            "# system\nFIELD GF(2)\nVARS 2\nPOINTS\n(0,1)\n1 1\nPOLY f = x\nPOLY g = y+1\nOP variety\n",
        )
        .unwrap();
        assert_eq!(pf.field.as_deref(), Some("GF(2)"));
        assert_eq!(pf.nvars, Some(2));
        assert_eq!(
            pf.points,
            Some(Some(vec![
                vec!["0".into(), "1".into()],
                vec!["1".into(), "1".into()]
            ]))
        );
        assert_eq!(pf.polys.len(), 2);
        assert_eq!(pf.op.as_deref(), Some("variety"));
        assert!(parse_problem_file("POLY f = x\nPOLY f = y\n").is_err());
        assert!(parse_problem_file("FIELD GF(2)\n(0,1)\n").is_err());
        assert_eq!(parse_problem_file("FULL\n").unwrap().points, Some(None));
    }

    #[test]
    fn top_level_split_respects_parentheses() {
        assert_eq!(split_top_level("(t+1)*x, y"), vec!["(t+1)*x", " y"]);
        assert_eq!(
            split_words("member --phi \"x + 1\""),
            vec!["member", "--phi", "x + 1"]
        );
    }

    #[test]
    fn member_example() {
        let (code, out, _) = run_args(&[
            "--field", "GF(2)", "--nvars", "1", "member", "--phi", "x^2+x", "--gens", "x",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("member: true"));
        let (code, out, _) = run_args(&[
            "--field", "2", "--nvars", "1", "member", "--phi", "x+1", "--gens", "x",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("member: false"));
    }

    #[test]
    fn input_errors_exit_two_without_output() {
        for args in [
            vec!["--field", "GF(6)", "--nvars", "1", "variety", "--gens", "x"],
            vec![
                "--field", "GF(2)", "--nvars", "1", "variety", "--gens", "x0^",
            ],
            vec!["--field", "GF(2)", "--nvars", "1", "variety", "--gens", "w"],
            vec![
                "--field", "GF(2)", "--nvars", "1", "--json", "member", "--gens", "x",
            ],
            vec!["--nvars", "1", "variety", "--gens", "x"],
        ] {
            let (code, out, err) = run_args(&args);
            assert_eq!(code, 2, "{args:?}");
            assert!(out.is_empty());
            assert!(!err.is_empty());
        }
    }
}
