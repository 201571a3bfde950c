//! The `gsemi` command line.
//!
//! Exit codes: 0 success, 1 user error or a failed check, 2 inconclusive
//! oracle or internal error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::dynkin::cm_classification;
use crate::gp::{
    check_gsemisimple, check_one_gorenstein, singularity_descriptor, Classification, GpIndec,
};
use crate::oracle::matrix::MAX_PRIME;
use crate::oracle::{
    ext_dims, is_isomorphic, is_prime, projective_cover_and_syzygy, realize_ideal, realize_indec,
    GpCertifier, MatrixModule, OracleError,
};
use crate::qalg::{parse_algebra, parse_quiver, BoundQuiverAlgebra, QalgError, DEFAULT_PRIME};
use crate::repcat::export::{
    components_json, export_quiver, pretty, relation_quiver_json, Exportable, Format,
};
use crate::repcat::io::{gp_rep_from_json, gp_rep_to_json, quiver_from_json, stable_rep_from_json};
use crate::repcat::knit::check_component;
use crate::repcat::sn::all_almost_split;
use crate::repcat::{
    almost_split_sn, divisibility_report, knit_stable_component, lift, psi, sn_indecomposables,
    stable_isomorphic, verify_gp_rep, verify_sequence, GpRep, RepError, SnObject, StableComponent,
};

#[derive(Debug, Parser)]
#[command(
    name = "gsemi",
    version,
    about = "Gorenstein projectives over quadratic monomial algebras"
)]
struct Cli {
    /// Characteristic of the ground field.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Highest Ext degree checked; defaults to twice the largest period plus 2.
    #[arg(long, global = true)]
    ext_bound: Option<usize>,
    #[arg(long, global = true, env = "GSEMI_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write realized action matrices as CSV into this directory.
    #[arg(long, global = true)]
    dump_matrices: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full classification report with oracle cross-checks.
    Analyze { alg: PathBuf },
    /// Singularity category descriptor.
    Sing { alg: PathBuf },
    /// Indecomposables of the monomorphism category S_n.
    Sn {
        alg: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(value_enum, default_value = "list")]
        mode: SnMode,
    },
    /// Almost split sequences in S_n, all of them or the one ending at an object.
    Ars {
        alg: PathBuf,
        #[arg(long)]
        n: usize,
        /// e.g. `[2,2,x]`
        #[arg(long)]
        at: Option<String>,
    },
    /// Stable Auslander-Reiten component of S_n for a class.
    Component {
        alg: PathBuf,
        #[arg(long)]
        n: usize,
        /// Class number as listed by `analyze`, or any arrow in the class.
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Dynkin type and CM-finiteness of representations of a quiver.
    Dynkin {
        alg: PathBuf,
        /// Quiver file, or `A<k>` for the linear quiver on k vertices.
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Lift a stable representation to a Gorenstein projective one.
    Lift {
        alg: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        /// Verify the lift and that it stabilizes back to the input.
        #[arg(long)]
        check: bool,
    },
    /// Check that a representation is Gorenstein projective.
    Verify {
        alg: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SnMode {
    List,
    Count,
}

#[derive(Debug)]
enum CliError {
    User(String),
    Inconclusive(String),
    /// A check ran and failed; the report was already printed.
    Failed,
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::User(_) | CliError::Failed => 1,
            CliError::Inconclusive(_) => 2,
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::OracleInconclusive(_) | RepError::Oracle(_) => {
                CliError::Inconclusive(e.to_string())
            }
            _ => CliError::User(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Inconclusive(e.to_string())
    }
}

impl From<QalgError> for CliError {
    fn from(e: QalgError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::User(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

struct Ctx {
    alg: BoundQuiverAlgebra,
    cls: Classification,
    ext_bound: usize,
    seed: u64,
    format: Format,
    dump: Option<PathBuf>,
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            match &e {
                CliError::User(m) => {
                    let _ = writeln!(err, "error: {m}");
                }
                CliError::Inconclusive(m) => {
                    let _ = writeln!(err, "inconclusive: {m}");
                }
                CliError::Failed => {}
            }
            e.code()
        }
    }
}

fn read(path: &FsPath) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::User(format!("{}: {e}", path.display())))
}

fn load(cli: &Cli, path: &FsPath) -> Result<Ctx, CliError> {
    if !is_prime(cli.prime) || cli.prime > MAX_PRIME {
        return Err(CliError::User(format!(
            "--prime {} is not a prime below 2^31",
            cli.prime
        )));
    }
    let alg = parse_algebra(&read(path)?)
        .map_err(|e| CliError::User(format!("{}: {e}", path.display())))?
        .with_field_char(cli.prime);
    let cls = Classification::new(&alg);
    let max_l = cls
        .components
        .iter()
        .map(|c| c.cycle.len())
        .max()
        .unwrap_or(0);
    Ok(Ctx {
        ext_bound: cli.ext_bound.unwrap_or(2 * max_l + 2),
        alg,
        cls,
        seed: cli.seed,
        format: cli.format,
        dump: cli.dump_matrices.clone(),
    })
}

fn dispatch(cli: Cli, out: Out<'_>) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze { alg } => analyze(&load(&cli, alg)?, out),
        Command::Sing { alg } => sing(&load(&cli, alg)?, out),
        Command::Sn { alg, n, mode } => sn(&load(&cli, alg)?, *n, *mode, out),
        Command::Ars { alg, n, at } => ars(&load(&cli, alg)?, *n, at.as_deref(), out),
        Command::Component { alg, n, class, dot } => {
            component(&load(&cli, alg)?, *n, class.as_deref(), dot.as_deref(), out)
        }
        Command::Dynkin { alg, quiver } => dynkin(&load(&cli, alg)?, quiver, out),
        Command::Lift { alg, rep, check } => lift_cmd(&load(&cli, alg)?, rep, *check, out),
        Command::Verify { alg, rep } => verify(&load(&cli, alg)?, rep, out),
    }
}

fn no_text_only(ctx: &Ctx, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&ctx.format) {
        Ok(())
    } else {
        Err(CliError::User(format!(
            "format `{}` is not supported for this command",
            ctx.format.name()
        )))
    }
}

fn names(alg: &BoundQuiverAlgebra, arrows: &[usize]) -> Vec<String> {
    arrows
        .iter()
        .map(|&a| alg.arrow_name(a).to_string())
        .collect()
}

fn dump(ctx: &Ctx, stem: &str, m: &MatrixModule) -> Result<(), CliError> {
    let Some(dir) = &ctx.dump else { return Ok(()) };
    fs::create_dir_all(dir)?;
    for (arrow, csv) in m.dump_csv(&ctx.alg) {
        fs::write(dir.join(format!("{stem}__{arrow}.csv")), csv)?;
    }
    Ok(())
}

fn dump_name(alg: &BoundQuiverAlgebra, g: GpIndec) -> String {
    match g {
        GpIndec::Projective(v) => format!("P_{}", alg.vertex_name(v)),
        GpIndec::ArrowIdeal(a) => format!("I_{}", alg.arrow_name(a)),
    }
}

struct OracleSummary {
    syzygy_agree: usize,
    ext_vanish: usize,
    offending_ext: Vec<(usize, Vec<usize>)>,
}

fn oracle_checks(ctx: &Ctx) -> Result<OracleSummary, CliError> {
    let alg = &ctx.alg;
    let p = alg.field_char();
    let mut summary = OracleSummary {
        syzygy_agree: 0,
        ext_vanish: 0,
        offending_ext: Vec::new(),
    };
    for a in ctx.cls.perfect_arrows() {
        let m = realize_ideal(alg, a, p);
        let syz = projective_cover_and_syzygy(alg, &m)?.syzygy;
        let expected = realize_ideal(alg, ctx.cls.omega(a), p);
        summary.syzygy_agree += is_isomorphic(alg, &syz, &expected, ctx.seed)? as usize;
        summary.ext_vanish += ext_dims(alg, &m, ctx.ext_bound).iter().all(|&d| d == 0) as usize;
    }
    for a in check_one_gorenstein(alg).offending {
        summary
            .offending_ext
            .push((a, ext_dims(alg, &realize_ideal(alg, a, p), ctx.ext_bound)));
    }
    for g in ctx.cls.gp_indecomposables(alg) {
        dump(ctx, &dump_name(alg, g), &realize_indec(alg, g, p))?;
    }
    Ok(summary)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(ctx: &Ctx, out: Out<'_>) -> Result<(), CliError> {
    let alg = &ctx.alg;
    let cls = &ctx.cls;
    if ctx.format == Format::Dot {
        out.write_all(
            export_quiver(
                alg,
                Exportable::RelationQuiver(&cls.relation_quiver),
                Format::Dot,
            )?
            .as_bytes(),
        )?;
        return Ok(());
    }
    let gs = check_gsemisimple(alg);
    let one = check_one_gorenstein(alg);
    let sing = singularity_descriptor(alg);
    let oracle = oracle_checks(ctx)?;
    let perfect = cls.perfect_arrows().len();
    if ctx.format == Format::Json {
        let v = json!({
            "vertices": alg.vertex_count(),
            "arrows": alg.arrow_count(),
            "relations": alg.relations().len(),
            "dimension": alg.dimension(),
            "relation_quiver": relation_quiver_json(alg, &cls.relation_quiver),
            "m": gs.m,
            "classes": gs.classes.iter().map(|c| json!({"members": names(alg, &c.members), "period": c.period})).collect::<Vec<_>>(),
            "gsemisimple": gs.gsemisimple,
            "cm_finite": gs.cm_finite,
            "one_gorenstein": one.one_gorenstein,
            "offending": names(alg, &one.offending),
            "singularity": sing.to_string(),
            "descriptor": sing.periods,
            "oracle": {
                "prime": alg.field_char(),
                "ext_bound": ctx.ext_bound,
                "perfect_arrows": perfect,
                "syzygy_agree": oracle.syzygy_agree,
                "ext_vanish": oracle.ext_vanish,
                "offending_ext": oracle.offending_ext.iter().map(|(a, d)| json!({"arrow": alg.arrow_name(*a), "ext": d})).collect::<Vec<_>>(),
            },
        });
        out.write_all(pretty(&v).as_bytes())?;
        return Ok(());
    }
    writeln!(
        out,
        "algebra: {} vertices, {} arrows, {} relations, dimension {}",
        alg.vertex_count(),
        alg.arrow_count(),
        alg.relations().len(),
        alg.dimension()
    )?;
    let edges: Vec<String> = cls
        .relation_quiver
        .edges()
        .iter()
        .map(|&(b, a)| format!("{} -> {}", alg.arrow_name(b), alg.arrow_name(a)))
        .collect();
    writeln!(
        out,
        "relation quiver: {}",
        if edges.is_empty() {
            "no edges".into()
        } else {
            edges.join(", ")
        }
    )?;
    writeln!(out, "perfect components: {}", cls.components.len())?;
    writeln!(out, "m = {}", gs.m)?;
    for (k, c) in gs.classes.iter().enumerate() {
        let ideals: Vec<String> = c
            .members
            .iter()
            .map(|&a| GpIndec::ArrowIdeal(a).label(alg))
            .collect();
        writeln!(
            out,
            "class {}: {}, l = {}",
            k + 1,
            ideals.join(" -> "),
            c.period
        )?;
    }
    writeln!(
        out,
        "G-semisimple: {} (quadratic monomial)",
        yes(gs.gsemisimple)
    )?;
    writeln!(out, "CM-finite: {}", yes(gs.cm_finite))?;
    if one.one_gorenstein {
        writeln!(out, "1-Gorenstein: yes")?;
    } else {
        writeln!(
            out,
            "1-Gorenstein: no (offending: {})",
            names(alg, &one.offending).join(", ")
        )?;
    }
    writeln!(out, "singularity category: {sing}")?;
    writeln!(out, "descriptor: {}", sing.multiset())?;
    writeln!(
        out,
        "oracle (p = {}): syzygy agrees on {}/{} perfect arrows",
        alg.field_char(),
        oracle.syzygy_agree,
        perfect
    )?;
    writeln!(
        out,
        "oracle (p = {}): Ext^1..{} vanish on {}/{} perfect arrows",
        alg.field_char(),
        ctx.ext_bound,
        oracle.ext_vanish,
        perfect
    )?;
    for (a, d) in &oracle.offending_ext {
        let dims: Vec<String> = d.iter().map(usize::to_string).collect();
        writeln!(
            out,
            "oracle: dim Ext^i({}, Λ) for i = 1..{}: {}",
            GpIndec::ArrowIdeal(*a).label(alg),
            d.len(),
            dims.join(" ")
        )?;
    }
    if oracle.syzygy_agree != perfect || oracle.ext_vanish != perfect {
        return Err(CliError::Failed);
    }
    Ok(())
}

fn sing(ctx: &Ctx, out: Out<'_>) -> Result<(), CliError> {
    no_text_only(ctx, &[Format::Text, Format::Json])?;
    let d = singularity_descriptor(&ctx.alg);
    if ctx.format == Format::Json {
        out.write_all(
            pretty(&json!({"singularity": d.to_string(), "descriptor": d.periods})).as_bytes(),
        )?;
    } else {
        writeln!(out, "{d}")?;
        writeln!(out, "descriptor: {}", d.multiset())?;
    }
    Ok(())
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::User("--n must be at least 1".into()));
    }
    Ok(())
}

fn sn(ctx: &Ctx, n: usize, mode: SnMode, out: Out<'_>) -> Result<(), CliError> {
    check_n(n)?;
    no_text_only(ctx, &[Format::Text, Format::Json])?;
    let objs = sn_indecomposables(&ctx.alg, n);
    let stable = objs.iter().filter(|o| !o.is_projective()).count();
    match (ctx.format, mode) {
        (Format::Json, _) => {
            let v = json!({
                "n": n,
                "count": objs.len(),
                "non_projective": stable,
                "objects": objs.iter().map(|o| o.render(&ctx.alg)).collect::<Vec<_>>(),
            });
            out.write_all(pretty(&v).as_bytes())?;
        }
        (_, SnMode::Count) => writeln!(out, "{}", objs.len())?,
        (_, SnMode::List) => {
            for o in &objs {
                writeln!(out, "{}", o.render(&ctx.alg))?;
            }
        }
    }
    Ok(())
}

fn ars(ctx: &Ctx, n: usize, at: Option<&str>, out: Out<'_>) -> Result<(), CliError> {
    check_n(n)?;
    let alg = &ctx.alg;
    let seqs = match at {
        Some(text) => vec![almost_split_sn(alg, n, SnObject::parse(alg, n, text)?)?],
        None => all_almost_split(alg, n),
    };
    if ctx.format != Format::Text {
        out.write_all(export_quiver(alg, Exportable::Sequences(&seqs), ctx.format)?.as_bytes())?;
        return Ok(());
    }
    let mut failed = false;
    for s in &seqs {
        let check = verify_sequence(alg, s)?;
        failed |= !check.ok();
        writeln!(out, "{}", s.render(alg))?;
        writeln!(
            out,
            "  family: {}; additive: {}; exact: {}; chain maps: {}",
            s.family,
            yes(check.additive),
            yes(check.exact),
            yes(check.morphisms)
        )?;
    }
    if failed {
        return Err(CliError::Failed);
    }
    Ok(())
}

fn pick_class(ctx: &Ctx, class: &str) -> Result<usize, CliError> {
    let count = ctx.cls.components.len();
    if let Ok(k) = class.parse::<usize>() {
        if (1..=count).contains(&k) {
            return Ok(k - 1);
        }
        return Err(CliError::User(format!(
            "class {k} does not exist; there are {count}"
        )));
    }
    let a = ctx.alg.quiver().arrow_index(class).ok_or_else(|| {
        CliError::User(format!("`{class}` is neither a class number nor an arrow"))
    })?;
    ctx.cls
        .class_of(a)
        .ok_or_else(|| CliError::User(format!("arrow `{class}` is not perfect")))
}

fn component(
    ctx: &Ctx,
    n: usize,
    class: Option<&str>,
    dot: Option<&FsPath>,
    out: Out<'_>,
) -> Result<(), CliError> {
    check_n(n)?;
    let alg = &ctx.alg;
    let classes: Vec<usize> = match class {
        Some(c) => vec![pick_class(ctx, c)?],
        None => (0..ctx.cls.components.len()).collect(),
    };
    let comps: Vec<StableComponent> = classes
        .iter()
        .map(|&c| knit_stable_component(alg, n, c))
        .collect();
    if let Some(path) = dot {
        fs::write(
            path,
            export_quiver(alg, Exportable::Components(&comps), Format::Dot)?,
        )?;
    }
    match ctx.format {
        Format::Dot => out.write_all(
            export_quiver(alg, Exportable::Components(&comps), Format::Dot)?.as_bytes(),
        )?,
        Format::Json => out.write_all(pretty(&components_json(alg, &comps)).as_bytes())?,
        Format::Text => {
            let mut failed = false;
            for comp in &comps {
                let check = check_component(alg, comp);
                let div = divisibility_report(n, comp);
                failed |= !check.ok() || !div.pass;
                writeln!(
                    out,
                    "class {}: {} vertices{}",
                    comp.class + 1,
                    comp.len(),
                    if comp.exact {
                        ""
                    } else {
                        " (knitted, not exact)"
                    }
                )?;
                let labels: Vec<String> = (0..comp.len())
                    .map(|k| comp.render_vertex(alg, k))
                    .collect();
                writeln!(out, "  vertices: {}", labels.join(" "))?;
                if let Some(k) = comp.vertices.iter().position(
                    |o| matches!(o, SnObject::Interval { i, j, .. } if *i == n && *j == n),
                ) {
                    writeln!(out, "  tau-period of {}: {}", labels[k], comp.tau_period(k))?;
                }
                writeln!(
                    out,
                    "  meshes: {}; tau closed: {}; divisor {}: {}",
                    yes(check.meshes && check.type_a && check.families),
                    yes(check.tau_closed),
                    div.divisor,
                    if div.pass { "pass" } else { "fail" }
                )?;
            }
            if failed {
                return Err(CliError::Failed);
            }
        }
    }
    Ok(())
}

fn dynkin(ctx: &Ctx, quiver: &FsPath, out: Out<'_>) -> Result<(), CliError> {
    no_text_only(ctx, &[Format::Text, Format::Json])?;
    let shorthand = quiver
        .to_str()
        .filter(|s| !quiver.exists() && s.starts_with('A'));
    let q = match shorthand {
        Some(s) => quiver_from_json(&json!(s)).map_err(|e| CliError::User(format!("{s}: {e}")))?,
        None => parse_quiver(&read(quiver)?)
            .map_err(|e| CliError::User(format!("{}: {e}", quiver.display())))?,
    };
    let report = cm_classification(&ctx.alg, &q).map_err(|e| CliError::User(e.to_string()))?;
    if ctx.format == Format::Json {
        out.write_all(
            pretty(&serde_json::to_value(&report).expect("report serializes")).as_bytes(),
        )?;
        return Ok(());
    }
    writeln!(
        out,
        "type: {}",
        report
            .kind
            .map(|t| t.to_string())
            .unwrap_or_else(|| "not Dynkin".into())
    )?;
    if let Some(r) = report.root_count {
        writeln!(out, "positive roots: {r}")?;
    }
    writeln!(out, "{}", report.summary())?;
    Ok(())
}

fn render_gp_rep(alg: &BoundQuiverAlgebra, rep: &GpRep, out: Out<'_>) -> Result<(), CliError> {
    let q = &rep.quiver;
    for (v, m) in rep.vertices.iter().enumerate() {
        writeln!(out, "{}: {}", q.vertices()[v], m.label(alg))?;
    }
    for (k, ar) in q.arrows().iter().enumerate() {
        let f = &rep.arrows[k];
        let rows: Vec<String> = (0..f.rows())
            .map(|i| {
                (0..f.cols())
                    .map(|j| f.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        writeln!(
            out,
            "{}: {} -> {}: [{}]",
            ar.name,
            q.vertices()[ar.source],
            q.vertices()[ar.target],
            rows.join("; ")
        )?;
    }
    Ok(())
}

fn certifier(ctx: &Ctx) -> GpCertifier<'_> {
    GpCertifier::new(
        &ctx.alg,
        &ctx.cls.gp_indecomposables(&ctx.alg),
        ctx.alg.field_char(),
        ctx.ext_bound,
        ctx.seed,
    )
}

fn dump_rep(ctx: &Ctx, rep: &GpRep) -> Result<(), CliError> {
    if ctx.dump.is_none() {
        return Ok(());
    }
    for (v, m) in rep.vertices.iter().enumerate() {
        let realized = crate::oracle::realize::realize_module(&ctx.alg, m, ctx.alg.field_char());
        dump(
            ctx,
            &format!("vertex_{}", rep.quiver.vertices()[v]),
            &realized.module,
        )?;
    }
    Ok(())
}

fn lift_cmd(ctx: &Ctx, rep: &FsPath, check: bool, out: Out<'_>) -> Result<(), CliError> {
    no_text_only(ctx, &[Format::Text, Format::Json])?;
    let alg = &ctx.alg;
    let r = stable_rep_from_json(alg, &read(rep)?)?;
    let h = lift(alg, &r)?;
    dump_rep(ctx, &h)?;
    if ctx.format == Format::Json {
        out.write_all(pretty(&gp_rep_to_json(alg, &h)).as_bytes())?;
    } else {
        render_gp_rep(alg, &h, out)?;
    }
    if check {
        let report = verify_gp_rep(alg, &h, &certifier(ctx))?;
        let back = stable_isomorphic(&psi(alg, &h), &r, ctx.seed)?;
        if ctx.format == Format::Text {
            writeln!(
                out,
                "check: gorenstein projective: {}; stabilizes to input: {}",
                yes(report.ok),
                yes(back)
            )?;
        }
        if !report.ok || !back {
            return Err(CliError::Failed);
        }
    }
    Ok(())
}

fn verify(ctx: &Ctx, rep: &FsPath, out: Out<'_>) -> Result<(), CliError> {
    no_text_only(ctx, &[Format::Text, Format::Json])?;
    let alg = &ctx.alg;
    let h = gp_rep_from_json(alg, &read(rep)?)?;
    dump_rep(ctx, &h)?;
    let report = verify_gp_rep(alg, &h, &certifier(ctx))?;
    if ctx.format == Format::Json {
        out.write_all(
            pretty(&serde_json::to_value(&report).expect("report serializes")).as_bytes(),
        )?;
    } else {
        for v in &report.vertices {
            writeln!(out, "{}: {} ({})", v.vertex, v.verdict, v.detail)?;
        }
        match &report.first_failure {
            None => writeln!(out, "gorenstein projective: yes")?,
            Some(v) => writeln!(
                out,
                "gorenstein projective: no (first failure at vertex {v})"
            )?,
        }
    }
    if !report.ok {
        return Err(CliError::Failed);
    }
    Ok(())
}
