//! `qf`: batch entry point for the path-algebra workbench.
//!
//! Subcommands build catalog algebras and print analyses, run the full
//! theorem-verification pipeline, query uniserial existence, reduce elements
//! to normal form, check generator maps, and verify the matrix-group
//! corollaries. All reports are JSON; `--out` writes them atomically.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qforge::catalog::{
    self, algebra_for, decomposition, verify_theorem, CatalogKey, Family, PipelineConfig,
};
use qforge::gbasis::{complete, IdealPresentation, MonomialOrder};
use qforge::groups::{classify_2group, construct, dickson_subgroup, two_part, GroupKind};
use qforge::modrep::{uniserial_exists, uniserial_exists_string_check, ModError};
use qforge::morphism::parse_generator_map;
use qforge::quiver::{parse_free_element, Quiver};
use qforge::report::SCHEMA_VERSION;
use qforge::{Field, F128, F16, F2, F256, F32, F4, F64, F8};

#[derive(Parser)]
#[command(name = "qf", version, about = "Workbench for path-algebra quotients over GF(2^m)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build one catalog algebra and print its analyses
    Algebra(AlgebraArgs),
    /// Run the theorem-verification pipeline for one family and degree
    Verify(VerifyArgs),
    /// Matrix-group checks for the projective linear corollaries
    Groups {
        #[command(subcommand)]
        cmd: GroupsCmd,
    },
    /// Decide uniserial existence for a factor sequence
    Uniserial(UniserialArgs),
    /// Normal form of a path-algebra element modulo a catalog or file ideal
    Nf(NfArgs),
    /// Check a generator map given in a map file
    Map(MapArgs),
}

#[derive(Subcommand)]
enum GroupsCmd {
    /// Orders, Sylow types, center and quotient checks at one odd prime q
    Verify(GroupsArgs),
}

#[derive(Args, Clone)]
struct KeyArgs {
    /// Catalog family: 1 or 2
    #[arg(long)]
    family: Option<u8>,
    /// Degree parameter; 3..=5 unless --allow-large
    #[arg(long, default_value_t = 3)]
    d: u32,
    /// Quaternion-type (hatted) family
    #[arg(long, default_value_t = false)]
    hat: bool,
    /// Dihedral parameter c (integer encoding of a field element)
    #[arg(long)]
    c: Option<u64>,
    /// Hatted parameter c^ (integer encoding)
    #[arg(long)]
    chat: Option<u64>,
    /// J-quotient parameter c1
    #[arg(long)]
    c1: Option<u64>,
    /// J-quotient parameter c2 (family 1)
    #[arg(long)]
    c2: Option<u64>,
    /// J-quotient parameter c3 (family 2)
    #[arg(long)]
    c3: Option<u64>,
    /// Coefficient field: gf2, gf4, ..., gf256
    #[arg(long, default_value = "gf2")]
    field: String,
    /// Allow d outside 3..=5
    #[arg(long, default_value_t = false)]
    allow_large: bool,
}

#[derive(Args)]
struct AlgebraArgs {
    #[command(flatten)]
    key: KeyArgs,
    /// Restrict the report: dim, cartan, loewy, socle or all
    #[arg(long, default_value = "all")]
    show: String,
    /// Build from a relation file (one generator per line) instead of the
    /// catalog; requires --quiver
    #[arg(long)]
    relations: Option<std::path::PathBuf>,
    /// Quiver for --relations: q1 or q2
    #[arg(long)]
    quiver: Option<String>,
    /// Write the JSON report here (atomically) instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog family: 1 or 2
    #[arg(long)]
    family: Option<u8>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    field: Option<String>,
    /// Grid of c^ values, comma-separated integer encodings
    #[arg(long)]
    chat_grid: Option<String>,
    /// Grid of c1 values
    #[arg(long)]
    c1_grid: Option<String>,
    /// Uniserial search budget (at most 2^24)
    #[arg(long)]
    budget: Option<u64>,
    /// Negative control, e.g. `c2=2` or `c3=w` (w is the GF(4) generator)
    #[arg(long)]
    inject: Option<String>,
    /// Flat key=value config file mirroring these flags; flags win
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = false)]
    allow_large: bool,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct GroupsArgs {
    /// Odd prime q in {3, 5, 7}
    #[arg(long)]
    q: u16,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct UniserialArgs {
    #[command(flatten)]
    key: KeyArgs,
    /// Descending factor sequence, comma-separated vertex labels
    #[arg(long)]
    seq: String,
    #[arg(long, default_value_t = 1 << 22)]
    budget: u64,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct NfArgs {
    #[command(flatten)]
    key: KeyArgs,
    /// The element to reduce, in path-literal syntax
    #[arg(long)]
    expr: String,
    #[arg(long)]
    relations: Option<std::path::PathBuf>,
    #[arg(long)]
    quiver: Option<String>,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    key: KeyArgs,
    /// Source dihedral parameter c (the source is the plain catalog algebra)
    #[arg(long, default_value_t = 0)]
    source_c: u64,
    /// Map file with `vertex v -> ...` / `arrow z -> ...` lines
    #[arg(long)]
    map: std::path::PathBuf,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Algebra(args) => cmd_algebra(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Groups { cmd: GroupsCmd::Verify(args) } => cmd_groups(args),
        Cmd::Uniserial(args) => cmd_uniserial(args),
        Cmd::Nf(args) => cmd_nf(args),
        Cmd::Map(args) => cmd_map(args),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Run a job at the field selected by name.
trait FieldJob {
    type Out;
    fn run<F: Field>(self) -> Result<Self::Out, String>;
}

fn dispatch<J: FieldJob>(field: &str, job: J) -> Result<J::Out, String> {
    match field {
        "gf2" => job.run::<F2>(),
        "gf4" => job.run::<F4>(),
        "gf8" => job.run::<F8>(),
        "gf16" => job.run::<F16>(),
        "gf32" => job.run::<F32>(),
        "gf64" => job.run::<F64>(),
        "gf128" => job.run::<F128>(),
        "gf256" => job.run::<F256>(),
        other => Err(format!("unknown field {other:?}; use gf2 ... gf256")),
    }
}

fn parse_family(n: u8) -> Result<Family, String> {
    match n {
        1 => Ok(Family::One),
        2 => Ok(Family::Two),
        other => Err(format!("family must be 1 or 2, got {other}")),
    }
}

fn check_d(d: u32, allow_large: bool) -> Result<(), String> {
    if d < 3 {
        return Err(format!("d must be at least 3, got {d}"));
    }
    if d > 5 && !allow_large {
        return Err(format!("d = {d} exceeds the default cap of 5; pass --allow-large"));
    }
    Ok(())
}

fn field_value<F: Field>(x: u64, what: &str) -> Result<F, String> {
    F::from_index(x).ok_or_else(|| format!("{what} = {x} is out of range for the field"))
}

impl KeyArgs {
    fn catalog_key<F: Field>(&self) -> Result<CatalogKey<F>, String> {
        let family = parse_family(self.family.ok_or("missing --family")?)?;
        check_d(self.d, self.allow_large)?;
        let c23 = match family {
            Family::One => self.c2,
            Family::Two => self.c3,
        };
        if let Some(c1) = self.c1 {
            let c23 = c23.ok_or("a J quotient needs --c2 (family 1) or --c3 (family 2)")?;
            return Ok(CatalogKey::JQuotient {
                family,
                d: self.d,
                c1: field_value(c1, "c1")?,
                c23: field_value(c23, "c2/c3")?,
            });
        }
        if self.hat {
            let c_hat = field_value(self.chat.unwrap_or(0), "chat")?;
            Ok(CatalogKey::Hat { family, d: self.d, c_hat })
        } else {
            let c = field_value(self.c.unwrap_or(0), "c")?;
            Ok(CatalogKey::Plain { family, d: self.d, c })
        }
    }
}

fn emit(value: &serde_json::Value, out: Option<&std::path::Path>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => write_atomic(path, &text),
    }
}

/// Write via a temporary file in the same directory plus rename.
fn write_atomic(path: &std::path::Path, text: &str) -> Result<(), String> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = dir
        .unwrap_or(std::path::Path::new("."))
        .join(format!(".{}.tmp", path.file_name().map_or_else(|| "out".into(), |n| n.to_string_lossy())));
    let mut f = std::fs::File::create(&tmp).map_err(|e| format!("create {tmp:?}: {e}"))?;
    f.write_all(text.as_bytes()).map_err(|e| format!("write {tmp:?}: {e}"))?;
    f.sync_all().map_err(|e| format!("sync {tmp:?}: {e}"))?;
    drop(f);
    std::fs::rename(&tmp, path).map_err(|e| format!("rename {tmp:?} -> {path:?}: {e}"))
}

// ---------------------------------------------------------------------------
// algebra

struct AlgebraJob {
    args: AlgebraArgs,
}

impl FieldJob for AlgebraJob {
    type Out = ExitCode;

    fn run<F: Field>(self) -> Result<ExitCode, String> {
        let args = self.args;
        let (label, algebra) = if let Some(path) = &args.relations {
            let quiver = quiver_by_name(args.quiver.as_deref())?;
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path:?}: {e}"))?;
            let gens = parse_relation_file::<F>(&quiver, &text)?;
            let ideal = IdealPresentation::new(quiver.clone(), gens).map_err(|e| e.to_string())?;
            let order = MonomialOrder::length_lex(&quiver);
            let a = qforge::algebra::FiniteDimAlgebra::from_presentation(
                ideal,
                &order,
                catalog::default_cap(args.key.d),
            )
            .map_err(|e| e.to_string())?;
            (format!("file:{}", path.display()), a)
        } else {
            let key = args.key.catalog_key::<F>()?;
            (key.label(), algebra_for(&key).map_err(|e| e.to_string())?)
        };

        let mut body = serde_json::Map::new();
        body.insert("schema".into(), SCHEMA_VERSION.into());
        body.insert("key".into(), label.into());
        body.insert("field_order".into(), F::order().into());
        let show_all = args.show == "all";
        if show_all || args.show == "dim" {
            body.insert("dim".into(), algebra.dim().into());
            let cartan = algebra.cartan_matrix();
            let proj: Vec<u64> = (0..2).map(|v| cartan[0][v] + cartan[1][v]).collect();
            body.insert("projective_dims".into(), serde_json::json!(proj));
        }
        if show_all || args.show == "cartan" {
            body.insert("cartan".into(), serde_json::json!(algebra.cartan_matrix()));
        }
        if show_all || args.show == "loewy" {
            body.insert("loewy_length".into(), algebra.loewy_length().into());
        }
        if show_all || args.show == "socle" {
            let soc = algebra.socle(1);
            let gens: Vec<String> = soc
                .basis()
                .iter()
                .map(|row| algebra.to_free(row).display(algebra.quiver()).to_string())
                .collect();
            body.insert("socle_generators".into(), serde_json::json!(gens));
        }
        if !["all", "dim", "cartan", "loewy", "socle"].contains(&args.show.as_str()) {
            return Err(format!("unknown --show {:?}", args.show));
        }
        emit(&serde_json::Value::Object(body), args.out.as_deref())?;
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_algebra(args: AlgebraArgs) -> Result<ExitCode, String> {
    let field = args.key.field.clone();
    dispatch(&field, AlgebraJob { args })
}

fn quiver_by_name(name: Option<&str>) -> Result<Quiver, String> {
    match name {
        Some("q1") => Ok(catalog::q1()),
        Some("q2") => Ok(catalog::q2()),
        Some(other) => Err(format!("unknown quiver {other:?}; use q1 or q2")),
        None => Err("--relations needs --quiver q1|q2".into()),
    }
}

/// One generator per line; blank lines and `#` comments are skipped.
fn parse_relation_file<F: Field>(
    quiver: &Quiver,
    text: &str,
) -> Result<Vec<qforge::quiver::FreeElement<F>>, String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_free_element(quiver, line).map_err(|e| format!("{line:?}: {e}"))?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// verify

struct VerifyJob {
    family: Family,
    d: u32,
    chat_grid: Option<Vec<u64>>,
    c1_grid: Option<Vec<u64>>,
    budget: Option<u64>,
    inject: Option<(String, String)>,
    out: Option<std::path::PathBuf>,
}

impl FieldJob for VerifyJob {
    type Out = ExitCode;

    fn run<F: Field>(self) -> Result<ExitCode, String> {
        let mut cfg = PipelineConfig::<F>::standard(self.family, self.d);
        if let Some(grid) = self.chat_grid {
            cfg.c_hat_grid = grid
                .into_iter()
                .map(|x| field_value::<F>(x, "chat-grid entry"))
                .collect::<Result<_, _>>()?;
        }
        if let Some(grid) = self.c1_grid {
            cfg.c1_grid = grid
                .into_iter()
                .map(|x| field_value::<F>(x, "c1-grid entry"))
                .collect::<Result<_, _>>()?;
        }
        if let Some(budget) = self.budget {
            if budget > 1 << 24 {
                return Err(format!("budget {budget} exceeds the cap of 2^24"));
            }
            cfg.budget = budget;
        }
        if let Some((param, value)) = &self.inject {
            let expect = match self.family {
                Family::One => "c2",
                Family::Two => "c3",
            };
            if param != expect {
                return Err(format!("--inject for family {:?} must set {expect}", self.family));
            }
            let value = match value.as_str() {
                "w" => 2,
                other => other.parse::<u64>().map_err(|_| format!("bad inject value {other:?}"))?,
            };
            cfg.inject_c23 = Some(field_value::<F>(value, "inject")?);
        }
        let report = verify_theorem(&cfg).map_err(|e| e.to_string())?;
        let value = serde_json::to_value(&report).expect("serializable");
        emit(&value, self.out.as_deref())?;
        if report.passed() {
            Ok(ExitCode::SUCCESS)
        } else {
            let first = report.first_failure().expect("some step failed");
            eprintln!(
                "verification failed at step {} [{}]: {}",
                first.step, first.key, first.claim
            );
            Ok(ExitCode::FAILURE)
        }
    }
}

fn parse_grid(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad grid entry {t:?}")))
        .collect()
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    // defaults < config file < flags
    let mut file: std::collections::HashMap<String, String> = Default::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path:?}: {e}"))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line without '=': {line:?}"))?;
            file.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).cloned());

    let family = match args.family {
        Some(n) => n,
        None => pick(None, "family")
            .ok_or("missing --family")?
            .parse::<u8>()
            .map_err(|_| "bad family in config")?,
    };
    let family = parse_family(family)?;
    let d = match args.d {
        Some(d) => d,
        None => pick(None, "d").ok_or("missing --d")?.parse().map_err(|_| "bad d in config")?,
    };
    let allow_large =
        args.allow_large || file.get("allow-large").is_some_and(|v| v == "true" || v == "1");
    check_d(d, allow_large)?;
    let field = args
        .field
        .or_else(|| file.get("field").cloned())
        .unwrap_or_else(|| "gf2".into());
    let chat_grid = pick(args.chat_grid, "chat-grid").map(|s| parse_grid(&s)).transpose()?;
    let c1_grid = pick(args.c1_grid, "c1-grid").map(|s| parse_grid(&s)).transpose()?;
    let budget = pick(args.budget.map(|b| b.to_string()), "budget")
        .map(|s| s.parse::<u64>().map_err(|_| "bad budget"))
        .transpose()?;
    let inject = pick(args.inject, "inject")
        .map(|s| {
            s.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| format!("bad --inject {s:?}; expected e.g. c2=w"))
        })
        .transpose()?;

    dispatch(
        &field,
        VerifyJob { family, d, chat_grid, c1_grid, budget, inject, out: args.out },
    )
}

// ---------------------------------------------------------------------------
// groups

fn cmd_groups(args: GroupsArgs) -> Result<ExitCode, String> {
    if !matches!(args.q, 3 | 5 | 7) {
        return Err(format!("q must be one of 3, 5, 7; got {}", args.q));
    }
    let q = args.q;
    let pgl = construct(GroupKind::PGL2, q).map_err(|e| e.to_string())?;
    let pgl_sylow = pgl.sylow2();
    let dick = dickson_subgroup(q).map_err(|e| e.to_string())?;
    let ghat_sylow = dick.ghat.sylow2();
    let center = dick.ghat.center();
    let quotient = dick.ghat.quotient_by_center();
    let quotient_sylow = quotient.sylow2();

    let n = q as usize;
    let report = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "q": q,
        "d": two_part(n * n - 1).trailing_zeros(),
        "pgl_order": pgl.order(),
        "sylow": format!("{}({})", classify_2group(&pgl_sylow).name(), pgl_sylow.order()),
        "pgl_sylow_involutions": pgl_sylow.involution_count(),
        "h_order": dick.h.order(),
        "h_isomorphic_to_pgl": dick.h_isomorphic_to_pgl,
        "ghat_order": dick.ghat.order(),
        "ghat_sylow": format!("{}({})", classify_2group(&ghat_sylow).name(), ghat_sylow.order()),
        "ghat_sylow_involutions": ghat_sylow.involution_count(),
        "center": center.order(),
        "quotient_order": quotient.order(),
        "quotient_sylow": format!(
            "{}({})",
            classify_2group(&quotient_sylow).name(),
            quotient_sylow.order()
        ),
        "sl2_order": dick.sl2_order,
        "psl2_order": dick.psl2_order,
    });
    emit(&report, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// uniserial

struct UniserialJob {
    args: UniserialArgs,
}

impl FieldJob for UniserialJob {
    type Out = ExitCode;

    fn run<F: Field>(self) -> Result<ExitCode, String> {
        let args = self.args;
        let key = args.key.catalog_key::<F>()?;
        let algebra = algebra_for(&key).map_err(|e| e.to_string())?;
        let seq: Vec<usize> = args
            .seq
            .split(',')
            .map(|t| {
                algebra
                    .quiver()
                    .vertex_id(t.trim())
                    .ok_or_else(|| format!("unknown vertex {t:?}"))
            })
            .collect::<Result<_, _>>()?;
        if seq.is_empty() {
            return Err("empty factor sequence".into());
        }
        let (exists, method) = match uniserial_exists(&algebra, &seq, args.budget) {
            Ok(found) => (serde_json::json!(found), "matrix search"),
            Err(ModError::SearchOverflow { .. }) => match uniserial_exists_string_check(
                &algebra, &seq,
            ) {
                Some(found) => (serde_json::json!(found), "string combinatorics after overflow"),
                None => (serde_json::json!("undecided"), "search overflow"),
            },
            Err(e) => return Err(e.to_string()),
        };
        let cross = uniserial_exists_string_check(&algebra, &seq);
        let report = serde_json::json!({
            "schema": SCHEMA_VERSION,
            "key": key.label(),
            "field_order": F::order(),
            "seq": seq,
            "exists": exists,
            "method": method,
            "string_check": cross,
            "note": "decision is exact over the working finite field only",
        });
        emit(&report, args.out.as_deref())?;
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_uniserial(args: UniserialArgs) -> Result<ExitCode, String> {
    if args.budget > 1 << 24 {
        return Err(format!("budget {} exceeds the cap of 2^24", args.budget));
    }
    let field = args.key.field.clone();
    dispatch(&field, UniserialJob { args })
}

// ---------------------------------------------------------------------------
// nf

struct NfJob {
    args: NfArgs,
}

impl FieldJob for NfJob {
    type Out = ExitCode;

    fn run<F: Field>(self) -> Result<ExitCode, String> {
        let args = self.args;
        let (quiver, gens) = if let Some(path) = &args.relations {
            let quiver = quiver_by_name(args.quiver.as_deref())?;
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path:?}: {e}"))?;
            let gens = parse_relation_file::<F>(&quiver, &text)?;
            (quiver, gens)
        } else {
            let key = args.key.catalog_key::<F>()?;
            catalog::build(&key).map_err(|e| e.to_string())?
        };
        let ideal = IdealPresentation::new(quiver.clone(), gens).map_err(|e| e.to_string())?;
        let order = MonomialOrder::length_lex(&quiver);
        let gb = complete(&ideal, &order, catalog::default_cap(args.key.d))
            .map_err(|e| e.to_string())?;
        let x = parse_free_element::<F>(&quiver, &args.expr).map_err(|e| e.to_string())?;
        let nf = gb.normal_form(&x).map_err(|e| e.to_string())?;
        println!("{}", nf.display(&quiver));
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_nf(args: NfArgs) -> Result<ExitCode, String> {
    let field = args.key.field.clone();
    dispatch(&field, NfJob { args })
}

// ---------------------------------------------------------------------------
// map

struct MapJob {
    args: MapArgs,
}

impl FieldJob for MapJob {
    type Out = ExitCode;

    fn run<F: Field>(self) -> Result<ExitCode, String> {
        let args = self.args;
        let target_key = args.key.catalog_key::<F>()?;
        let family = parse_family(args.key.family.ok_or("missing --family")?)?;
        let source_key = CatalogKey::Plain {
            family,
            d: args.key.d,
            c: field_value(args.source_c, "source-c")?,
        };
        let source = algebra_for(&source_key).map_err(|e| e.to_string())?;
        let target = algebra_for(&target_key).map_err(|e| e.to_string())?;
        let text = std::fs::read_to_string(&args.map).map_err(|e| format!("{:?}: {e}", args.map))?;
        let map = parse_generator_map(&source, &target, &text).map_err(|e| e.to_string())?;
        let well = map.is_well_defined();
        let report = serde_json::json!({
            "schema": SCHEMA_VERSION,
            "source": source_key.label(),
            "target": target_key.label(),
            "well_defined": well,
            "surjective": well && map.is_surjective(),
            "kernel_dim": if well { Some(map.kernel_basis().dim()) } else { None },
            "isomorphism": map.is_isomorphism(),
        });
        emit(&report, args.out.as_deref())?;
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_map(args: MapArgs) -> Result<ExitCode, String> {
    let field = args.key.field.clone();
    dispatch(&field, MapJob { args })
}
