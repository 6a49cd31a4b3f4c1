//! Command-line front end.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use supergrade_core::cohomology::{cover_kernel_check, fingerprint, fingerprint_with_cartan, h2_dims, isogenous, uce, Isogeny};
use supergrade_core::constructors::{
    construct_assoc, construct_gl, construct_jordan, construct_psl, construct_sl, construct_sl_a,
    construct_sl_natural, AssocKind, JordanKind,
};
use supergrade_core::exact::linalg::{axpy, unit_vector, zero_vector};
use supergrade_core::exact::Rational;
use supergrade_core::jordan::{certify_m11, check_peirce_laws, jordan_from_3grading, m11_cover, peirce, tkk};
use supergrade_core::roots::{
    check_z_trivial, three_grading, verify_delta_graded, weight_decomposition, GradingStyle, Verdict,
};
use supergrade_core::superalg::{
    unit_label, Algebra, CartanBasis, CartanTag, CoverEmbedding, JordanSuperalgebra, LieSuperalgebra, StructureTable,
    SuperSpace,
};
use supergrade_core::Error as CoreError;

use crate::report;
use crate::sca::{parse_sca, validate, write_sca, Validated};

#[derive(Parser, Debug)]
#[command(name = "supergrade", version, about = "Exact computations with Lie and Jordan superalgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an algebra and write it in SCA form.
    ///
    /// Kinds: `gl M N`, `sl M N`, `psl N` (psl(N+1,N+1)), `slA M N ASSOC`,
    /// `sl-natural M N`, `mplus N`, `jp N`, `jq N`, `m11`, `assoc ASSOC`, where
    /// ASSOC is `field`, `dual`, `grassmann K` or `matrix P Q`.
    Construct {
        kind: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the diagonal Cartan basis, one vector per line.
        #[arg(long)]
        cartan_out: Option<PathBuf>,
    },
    /// Parse a document and run the validator of its kind.
    Check {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight-space decomposition against commuting even elements.
    Decompose {
        file: PathBuf,
        /// A vector, or `@file` with one vector per line; repeatable.
        #[arg(long, required = true)]
        cartan: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the root-graded conditions against an embedded cover.
    VerifyGrading {
        file: PathBuf,
        #[command(flatten)]
        cover: CoverArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split into degrees -1, 0, 1 and check the bracket respects them.
    ThreeGrading {
        file: PathBuf,
        /// Cover supplying the diagonal Cartan (height style).
        #[arg(long, value_enum, required_if_eq("style", "height"))]
        cover: Option<CoverName>,
        #[arg(long, default_value = "1")]
        unit: String,
        #[arg(long, value_enum, default_value_t = Style::Height)]
        style: Style,
        /// Even element whose ad-eigenvalues 2, 0, -2 give degrees 1, 0, -1
        /// (sl2 style).
        #[arg(long, required_if_eq("style", "sl2"))]
        h: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tits-Kantor-Koecher algebra of a unital Jordan superalgebra.
    Tkk {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Jordan superalgebra on L(1) of the grading by ad [e, f].
    JordanFromGrading {
        file: PathBuf,
        #[arg(long)]
        e: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Peirce decomposition relative to an even idempotent.
    Peirce {
        file: PathBuf,
        #[arg(long)]
        idempotent: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that four elements span a unital copy of M(1,1)+.
    CertifyM11 {
        file: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Also verify that the TKK algebra is A(1,1)-graded by the
        /// embedding the certificate generates.
        #[arg(long)]
        tkk: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of the even and odd second cohomology.
    H2 {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Universal central extension of a perfect Lie superalgebra.
    Uce {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a JSON summary (and the cover-kernel check when `--cartan`
        /// is given) to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        cartan: Vec<String>,
    },
    /// Isomorphism invariants: dimensions, derived series, center, H2.
    Fingerprint {
        file: PathBuf,
        /// Include root-space dimensions for this Cartan basis.
        #[arg(long)]
        cartan: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the central quotients of two algebras by fingerprint.
    Isogenous {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Height,
    Sl2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoverName {
    Sl22,
    Psl22,
    Sl33,
    Psl33,
}

#[derive(Args, Debug)]
pub struct CoverArgs {
    /// Cover whose off-diagonal units are looked up by label `e[a,b]`.
    #[arg(long, value_enum)]
    pub cover: CoverName,
    /// Coefficient unit used when units are labelled `e[a,b]|s`, as
    /// `s` or `s=c;t=d`.
    #[arg(long, default_value = "1")]
    pub unit: String,
}

/// Whether a run confirmed or refuted what it was asked to check.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Negative,
}

/// Mathematical refutations of the input, reported with exit code 1.
fn is_negative(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::AxiomViolation { .. }
            | CoreError::MissingUnit
            | CoreError::NotCentral { .. }
            | CoreError::NotHomomorphism(_)
            | CoreError::NotThreeGraded(_)
            | CoreError::NotIdempotent
            | CoreError::UnexpectedEigenvalue(_)
            | CoreError::UnitFailure(_)
            | CoreError::JacobiFailure(_)
            | CoreError::NotPerfect { .. }
            | CoreError::ClosureFailure(_)
            | CoreError::CartanNotCommuting(..)
            | CoreError::NotDiagonalizable { .. }
            | CoreError::NonSplitSpectrum { .. }
    )
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command: Vec<String> = std::env::args().skip(1).collect();
    match run(cli, command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let negative = e.chain().any(|c| c.downcast_ref::<CoreError>().is_some_and(is_negative));
            ExitCode::from(if negative { 1 } else { 2 })
        }
    }
}

struct Ctx {
    command: Vec<String>,
    inputs: Vec<(String, Vec<u8>)>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        let text = String::from_utf8(bytes.clone()).with_context(|| format!("{} is not UTF-8", path.display()))?;
        self.inputs.push((path.display().to_string(), bytes));
        Ok(text)
    }

    fn table(&mut self, path: &Path) -> Result<StructureTable> {
        let text = self.read(path)?;
        parse_sca(&text).with_context(|| format!("parsing {}", path.display()))
    }

    fn algebra(&mut self, path: &Path) -> Result<Validated> {
        let t = self.table(path)?;
        validate(t).with_context(|| format!("validating {}", path.display()))
    }

    fn lie(&mut self, path: &Path) -> Result<LieSuperalgebra> {
        match self.algebra(path)? {
            Validated::Lie(l) => Ok(l),
            other => bail!("{} holds a {} algebra, expected lie", path.display(), other.table().kind().name()),
        }
    }

    fn jordan(&mut self, path: &Path) -> Result<JordanSuperalgebra> {
        match self.algebra(path)? {
            Validated::Jordan(j) => Ok(j),
            other => bail!("{} holds a {} algebra, expected jordan", path.display(), other.table().kind().name()),
        }
    }

    /// One element: a label, `label=c;label=c`, comma-separated
    /// coordinates, or `@file`.
    fn element(&mut self, spec: &str, space: &SuperSpace) -> Result<Vec<Rational>> {
        let mut v = self.elements(spec, space)?;
        if v.len() != 1 {
            bail!("{spec:?} gives {} vectors, expected one", v.len());
        }
        Ok(v.remove(0))
    }

    fn elements(&mut self, spec: &str, space: &SuperSpace) -> Result<Vec<Vec<Rational>>> {
        if let Some(path) = spec.strip_prefix('@') {
            let text = self.read(Path::new(path))?;
            return text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| parse_element(l, space))
                .collect();
        }
        Ok(vec![parse_element(spec, space)?])
    }

    fn cartan(&mut self, specs: &[String], space: &SuperSpace) -> Result<CartanBasis> {
        let mut elements = Vec::new();
        for s in specs {
            elements.extend(self.elements(s, space)?);
        }
        Ok(CartanBasis::new(elements, CartanTag::Custom))
    }

    fn emit_json(&self, result: Value, out: Option<&Path>) -> Result<()> {
        println!("{}", serde_json::to_string_pretty(&result)?);
        if let Some(path) = out {
            let doc = report::document(&self.command, &self.inputs, result);
            write_file(path, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
        }
        Ok(())
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit_text(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| anyhow!("bad rational {s:?}: {e}"))
}

/// Parses `label`, `label=c;label=c` or `c1,c2,...` against a labelled space.
pub fn parse_element(spec: &str, space: &SuperSpace) -> Result<Vec<Rational>> {
    let d = space.dim();
    if let Some(i) = space.index_of_label(spec) {
        return Ok(unit_vector(d, i));
    }
    if spec.contains('=') {
        let mut v = zero_vector(d);
        for term in spec.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (label, c) = term.split_once('=').ok_or_else(|| anyhow!("term {term:?} is not label=coefficient"))?;
            let i = space.index_of_label(label.trim()).ok_or_else(|| anyhow!("no basis vector labelled {label:?}"))?;
            v[i] = &v[i] + &parse_rational(c)?;
        }
        return Ok(v);
    }
    let v: Vec<Rational> = spec.split(',').map(parse_rational).collect::<Result<_>>()?;
    if v.len() != d {
        bail!("vector has {} coordinates, the algebra has dimension {d}", v.len());
    }
    Ok(v)
}

/// Looks up the off-diagonal units of the named cover by label.
pub fn resolve_cover(l: &LieSuperalgebra, args: &CoverArgs) -> Result<CoverEmbedding> {
    let n = match args.cover {
        CoverName::Sl22 | CoverName::Psl22 => 1,
        CoverName::Sl33 | CoverName::Psl33 => 2,
    };
    let s = 2 * (n + 1);
    let space = l.space();
    let unit_terms: Vec<(String, Rational)> = if args.unit.contains('=') {
        args.unit
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (a, c) = t.split_once('=').ok_or_else(|| anyhow!("unit term {t:?} is not label=coefficient"))?;
                Ok((a.trim().to_string(), parse_rational(c)?))
            })
            .collect::<Result<_>>()?
    } else {
        vec![(args.unit.clone(), Rational::one())]
    };
    let mut images = vec![None; s * s];
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let base = unit_label(i, j, n + 1);
            let v = match space.index_of_label(&base) {
                Some(k) => unit_vector(l.dim(), k),
                None => {
                    let mut v = zero_vector(l.dim());
                    for (a, c) in &unit_terms {
                        let lab = format!("{base}|{a}");
                        let k = space
                            .index_of_label(&lab)
                            .ok_or_else(|| anyhow!("no basis vector labelled {base} or {lab}"))?;
                        axpy(&mut v, c, &unit_vector(l.dim(), k));
                    }
                    v
                }
            };
            images[i * s + j] = Some(v);
        }
    }
    Ok(CoverEmbedding::from_fn(n, |i, j| images[i * s + j].take().expect("off-diagonal image")))
}

fn usize_param(params: &[String], i: usize, what: &str) -> Result<usize> {
    let p = params.get(i).ok_or_else(|| anyhow!("missing parameter {what}"))?;
    p.parse().with_context(|| format!("parameter {what} = {p:?} is not a number"))
}

fn assoc_kind(params: &[String]) -> Result<(AssocKind, usize)> {
    let name = params.first().ok_or_else(|| anyhow!("missing associative kind"))?;
    Ok(match name.as_str() {
        "field" => (AssocKind::Field, 1),
        "dual" => (AssocKind::DualNumbers, 1),
        "grassmann" => (AssocKind::Grassmann(usize_param(params, 1, "K")?), 2),
        "matrix" => (AssocKind::MatrixSuper(usize_param(params, 1, "P")?, usize_param(params, 2, "Q")?), 3),
        other => bail!("unknown associative kind {other:?}"),
    })
}

enum Built {
    Lie(Box<LieSuperalgebra>),
    Other(StructureTable),
}

fn construct(kind: &str, params: &[String]) -> Result<Built> {
    let exact = |n: usize| -> Result<()> {
        if params.len() != n {
            bail!("{kind} takes {n} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let jordan = |k: JordanKind| -> Result<Built> { Ok(Built::Other(construct_jordan(&k)?.into_table())) };
    Ok(match kind {
        "gl" | "sl" | "sl-natural" => {
            exact(2)?;
            let (m, n) = (usize_param(params, 0, "M")?, usize_param(params, 1, "N")?);
            Built::Lie(Box::new(match kind {
                "gl" => construct_gl(m, n)?,
                "sl" => construct_sl(m, n)?,
                _ => construct_sl_natural(m, n)?,
            }))
        }
        "psl" => {
            exact(1)?;
            Built::Lie(Box::new(construct_psl(usize_param(params, 0, "N")?)?.0))
        }
        "slA" => {
            let (a, used) = assoc_kind(params.get(2..).unwrap_or(&[]))?;
            exact(2 + used)?;
            let a = construct_assoc(&a)?;
            Built::Lie(Box::new(construct_sl_a(usize_param(params, 0, "M")?, usize_param(params, 1, "N")?, &a)?))
        }
        "assoc" => {
            let (a, used) = assoc_kind(params)?;
            exact(used)?;
            Built::Other(construct_assoc(&a)?.into_table())
        }
        "mplus" | "jp" | "jq" => {
            exact(1)?;
            let n = usize_param(params, 0, "N")?;
            jordan(match kind {
                "mplus" => JordanKind::Mplus(n),
                "jp" => JordanKind::JP(n),
                _ => JordanKind::JQ(n),
            })?
        }
        "m11" => {
            exact(0)?;
            jordan(JordanKind::M11)?
        }
        other => bail!("unknown kind {other:?}"),
    })
}

fn vector_lines(vs: &[Vec<Rational>]) -> String {
    vs.iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",") + "\n").collect()
}

pub fn run(cli: Cli, command: Vec<String>) -> Result<Outcome> {
    let mut ctx = Ctx { command, inputs: Vec::new() };
    match cli.command {
        Command::Construct { kind, params, out, cartan_out } => {
            let built = construct(&kind, &params)?;
            if let Some(path) = &cartan_out {
                let Built::Lie(l) = &built else { bail!("--cartan-out needs a Lie superalgebra") };
                let c = l.provenance().cartan.as_ref().ok_or_else(|| anyhow!("{kind} has no distinguished Cartan"))?;
                write_file(path, &vector_lines(&c.elements))?;
            }
            let table = match &built {
                Built::Lie(l) => l.table(),
                Built::Other(t) => t,
            };
            emit_text(&write_sca(table), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Check { file, out } => {
            let t = ctx.table(&file)?;
            let kind = t.kind().name();
            let space = t.space().clone();
            let mut result = report::algebra_summary(kind, &space);
            let outcome = match validate(t) {
                Ok(_) => {
                    result["valid"] = json!(true);
                    Outcome::Pass
                }
                Err(e) => {
                    result["valid"] = json!(false);
                    result["error"] = json!(e.to_string());
                    Outcome::Negative
                }
            };
            ctx.emit_json(result, out.as_deref())?;
            Ok(outcome)
        }
        Command::Decompose { file, cartan, out } => {
            let l = ctx.lie(&file)?;
            let c = ctx.cartan(&cartan, l.space())?;
            let d = weight_decomposition(&l, &c)?;
            ctx.emit_json(report::root_datum(&d), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::VerifyGrading { file, cover, out } => {
            let l = ctx.lie(&file)?;
            let c = resolve_cover(&l, &cover)?;
            let r = verify_delta_graded(&l, &c)?;
            let z = check_z_trivial(&l, &c)?;
            ctx.emit_json(report::grading(&r, &z), out.as_deref())?;
            Ok(if r.verdict == Verdict::Graded { Outcome::Pass } else { Outcome::Negative })
        }
        Command::ThreeGrading { file, cover, unit, style, h, out } => {
            let l = ctx.lie(&file)?;
            let (g, name) = match (style, cover, h) {
                (Style::Height, Some(cover), _) => {
                    let c = resolve_cover(&l, &CoverArgs { cover, unit })?;
                    let r = verify_delta_graded(&l, &c)?;
                    (three_grading(&l, &r.datum, &GradingStyle::Height)?, "height")
                }
                (Style::Sl2, _, Some(h)) => {
                    let h = ctx.element(&h, l.space())?;
                    let datum = weight_decomposition(&l, &CartanBasis::new(vec![h], CartanTag::Custom))?;
                    (three_grading(&l, &datum, &GradingStyle::Sl2 { h_index: 0 })?, "sl2")
                }
                _ => unreachable!("clap enforces the style's required argument"),
            };
            ctx.emit_json(report::three_grading(&l, &g, name), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Tkk { file, out } => {
            let j = ctx.jordan(&file)?;
            let t = tkk(&j)?;
            emit_text(&write_sca(t.lie.table()), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::JordanFromGrading { file, e, f, out } => {
            let l = ctx.lie(&file)?;
            let e = ctx.element(&e, l.space())?;
            let f = ctx.element(&f, l.space())?;
            let j = jordan_from_3grading(&l, &e, &f)?;
            emit_text(&write_sca(j.table()), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Peirce { file, idempotent, out } => {
            let j = ctx.jordan(&file)?;
            let e = ctx.element(&idempotent, j.space())?;
            let p = peirce(&j, &e)?;
            let laws = check_peirce_laws(&j, &p).is_ok();
            ctx.emit_json(report::peirce(j.space(), &p, laws), out.as_deref())?;
            Ok(if laws { Outcome::Pass } else { Outcome::Negative })
        }
        Command::CertifyM11 { file, e1, e2, x, y, tkk: with_tkk, out } => {
            let j = ctx.jordan(&file)?;
            let sp = j.space().clone();
            let (e1, e2) = (ctx.element(&e1, &sp)?, ctx.element(&e2, &sp)?);
            let (x, y) = (ctx.element(&x, &sp)?, ctx.element(&y, &sp)?);
            let cert = certify_m11(&j, &e1, &e2, &x, &y)?;
            let mut result = report::certificate(&cert);
            let mut ok = cert.passed();
            if with_tkk && ok {
                let t = tkk(&j)?;
                let cover = m11_cover(&t, &cert);
                let r = verify_delta_graded(&t.lie, &cover)?;
                let z = check_z_trivial(&t.lie, &cover)?;
                ok = r.verdict == Verdict::Graded;
                result["tkk"] = json!({
                    "dims": [t.lie.space().even_dim(), t.lie.space().odd_dim()],
                    "grading": report::grading(&r, &z),
                });
            }
            ctx.emit_json(result, out.as_deref())?;
            Ok(if ok { Outcome::Pass } else { Outcome::Negative })
        }
        Command::H2 { file, out } => {
            let l = ctx.lie(&file)?;
            let (e, o) = h2_dims(&l);
            ctx.emit_json(report::h2(e, o), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Uce { file, out, report: report_path, cartan } => {
            let l = ctx.lie(&file)?;
            let ext = uce(&l)?;
            emit_text(&write_sca(ext.extended.table()), out.as_deref())?;
            let mut outcome = Outcome::Pass;
            if let Some(path) = report_path {
                let mut result = json!({
                    "base": report::algebra_summary("lie", l.space()),
                    "extended": report::algebra_summary("lie", ext.extended.space()),
                    "cocycle_parities": ext.cocycles.iter().map(|c| c.parity.bit()).collect::<Vec<_>>(),
                });
                if !cartan.is_empty() {
                    let c = ctx.cartan(&cartan, l.space())?;
                    let k = cover_kernel_check(&ext, &c)?;
                    if !k.passed {
                        outcome = Outcome::Negative;
                    }
                    result["kernel_check"] = report::kernel(&k);
                }
                let doc = report::document(&ctx.command, &ctx.inputs, result);
                write_file(&path, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
            } else if !cartan.is_empty() {
                bail!("--cartan needs --report");
            }
            Ok(outcome)
        }
        Command::Fingerprint { file, cartan, out } => {
            let l = ctx.lie(&file)?;
            let f = if cartan.is_empty() {
                fingerprint(&l)
            } else {
                let c = ctx.cartan(&cartan, l.space())?;
                fingerprint_with_cartan(&l, &c)?
            };
            ctx.emit_json(report::fingerprint(&f), out.as_deref())?;
            Ok(Outcome::Pass)
        }
        Command::Isogenous { first, second, out } => {
            let a = ctx.lie(&first)?;
            let b = ctx.lie(&second)?;
            let r = isogenous(&a, &b);
            ctx.emit_json(report::isogeny(&r), out.as_deref())?;
            Ok(if r.verdict == Isogeny::Equal { Outcome::Pass } else { Outcome::Negative })
        }
    }
}
