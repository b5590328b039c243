//! The `mtc` command line. [`run`] takes the argument vector and two output
//! streams and returns the process exit code: 0 on success, 1 when
//! `tables --verify` finds a difference, 2 on usage, parse or input errors.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use mtc_core::catalog::{bundled, Format, TableKey};
use mtc_core::classify::{
    classify_reducible, enumerate_case1, enumerate_case2, enumerate_case2_exhaustive, mtc_report,
    CandidateVerdict, ReducibleSpec, ReducibleVerdict,
};
use mtc_core::error::Error;
use mtc_core::notation::{parse_group, parse_rep, render_rep, Convention};
use mtc_core::rep_calc::{
    dim_u64, effective_weights, freudenthal_multiplicities, summand_fs, Irrep, RepExpr,
};
use mtc_core::root_data::{root_system, GroupSpec, Series, SimpleLieType, Weight};

pub const DEFAULT_RANK_CAP: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "mtc",
    version,
    about = "Maximal totally complex orbits in HP^n"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Node numbering of Dynkin labels on input.
    #[arg(long, global = true, default_value = "bourbaki", value_parser = parse_convention)]
    pub convention: Convention,

    /// Highlight verdicts with ANSI colour in text output.
    #[arg(long, global = true)]
    pub color: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse()
}

fn parse_rank_cap(s: &str) -> Result<usize, String> {
    let n: usize = s
        .parse()
        .map_err(|_| format!("`{s}` is not a positive integer"))?;
    if n < 2 {
        return Err(format!("rank cap must be at least 2, got {n}"));
    }
    Ok(n)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix and positive roots.
    Roots { group: String },
    /// Dimension, Frobenius-Schur type and weights of an irreducible module.
    Irrep {
        group: String,
        rep: String,
        /// List every weight with its multiplicity.
        #[arg(long)]
        weights: bool,
    },
    /// Orbit of the highest weight line: dimension, isotropy, MTC check.
    Orbit { group: String, rep: String },
    /// All classification conditions for one module.
    Check { group: String, rep: String },
    /// Run the classification searches.
    Classify {
        #[arg(long, value_enum, default_value_t = Case::All)]
        case: Case,
        #[arg(long, env = "MTC_RANK_CAP", default_value_t = DEFAULT_RANK_CAP, value_parser = parse_rank_cap)]
        rank_cap: usize,
        /// Also brute-force products of small factors and compare with the
        /// structural search.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Show or verify the bundled tables.
    Tables {
        /// Recompute every expected value.
        #[arg(long, conflicts_with = "show")]
        verify: bool,
        /// Print one table: wolf, simple, nonsimple or parallel.
        #[arg(long, value_name = "KEY")]
        show: Option<String>,
        #[arg(long, env = "MTC_RANK_CAP", default_value_t = DEFAULT_RANK_CAP, value_parser = parse_rank_cap)]
        rank_cap: usize,
    },
}

enum Failure {
    Usage(String),
    Diff,
    /// stdout went away, e.g. piped into `head`.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(format!("error: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(format!("error: {e}"))
    }
}

type Out<'a> = &'a mut dyn Write;

pub fn run<I, S>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Diff) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            2
        }
    }
}

fn parse_input(group: &str, rep: &str, conv: Convention) -> Result<(GroupSpec, RepExpr), Failure> {
    let g = parse_group(group).map_err(|e| Failure::Usage(format!("error: bad group: {e}")))?;
    let r = parse_rep(rep, &g, conv)
        .map_err(|e| Failure::Usage(format!("error: bad representation: {e}")))?;
    Ok((g, r))
}

fn paint(cli: &Cli, yes: bool, text: &str) -> String {
    if cli.color && cli.format == OutputFormat::Text {
        let code = if yes { 32 } else { 31 };
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn json(out: Out, v: &impl serde::Serialize) -> Result<(), Failure> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("serializable")
    )?;
    Ok(())
}

fn csv_line(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn dispatch(cli: &Cli, out: Out) -> Result<(), Failure> {
    match &cli.command {
        Command::Roots { group } => roots(cli, out, group),
        Command::Irrep {
            group,
            rep,
            weights,
        } => irrep(cli, out, group, rep, *weights),
        Command::Orbit { group, rep } => orbit(cli, out, group, rep),
        Command::Check { group, rep } => check(cli, out, group, rep),
        Command::Classify {
            case,
            rank_cap,
            exhaustive,
        } => classify(cli, out, *case, *rank_cap, *exhaustive),
        Command::Tables {
            verify,
            show,
            rank_cap,
        } => tables(cli, out, *verify, show.as_deref(), *rank_cap),
    }
}

fn roots(cli: &Cli, out: Out, group: &str) -> Result<(), Failure> {
    let g = parse_group(group).map_err(|e| Failure::Usage(format!("error: bad group: {e}")))?;
    let systems: Vec<_> = g.factors().iter().map(|t| root_system(*t)).collect();
    match cli.format {
        OutputFormat::Json => {
            let factors: Vec<_> = systems
                .iter()
                .map(|rs| {
                    serde_json::json!({
                        "type": rs.lie_type().to_string(),
                        "rank": rs.rank(),
                        "dim": rs.dim(),
                        "cartan_matrix": rs.cartan_matrix(),
                        "positive_roots": rs.positive_roots().iter().map(|r| serde_json::json!({
                            "coeffs": r.coeffs, "labels": r.labels, "height": r.height(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json(
                out,
                &serde_json::json!({"group": g.to_string(), "rank": g.rank(), "dim": g.dim(), "factors": factors}),
            )
        }
        OutputFormat::Csv => {
            writeln!(out, "factor,height,coeffs,labels")?;
            for rs in &systems {
                for r in rs.positive_roots() {
                    writeln!(
                        out,
                        "{}",
                        csv_line(&[
                            rs.lie_type().to_string(),
                            r.height().to_string(),
                            Weight(r.coeffs.clone()).to_string(),
                            Weight(r.labels.clone()).to_string(),
                        ])
                    )?;
                }
            }
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{}: rank {}, dim {}, {} positive roots",
                g,
                g.rank(),
                g.dim(),
                g.num_positive_roots()
            )?;
            for rs in &systems {
                if systems.len() > 1 {
                    writeln!(out, "{}:", rs.lie_type())?;
                }
                writeln!(out, "  cartan matrix")?;
                for row in rs.cartan_matrix() {
                    writeln!(out, "    {}", Weight(row.clone()))?;
                }
                writeln!(out, "  positive roots (height: coefficients -> labels)")?;
                for r in rs.positive_roots() {
                    writeln!(
                        out,
                        "    {}: {} -> {}",
                        r.height(),
                        Weight(r.coeffs.clone()),
                        Weight(r.labels.clone())
                    )?;
                }
            }
            Ok(())
        }
    }
}

/// Weight multiplicities of an outer tensor product.
fn tensor_multiplicities(
    g: &GroupSpec,
    weights: &[Weight],
) -> Result<BTreeMap<Weight, u64>, Error> {
    let mut acc: BTreeMap<Weight, u64> = BTreeMap::from([(Weight(vec![]), 1)]);
    for (ty, w) in g.factors().iter().zip(weights) {
        let m = freudenthal_multiplicities(*ty, w)?;
        let mut next = BTreeMap::new();
        for (a, ma) in &acc {
            for (b, mb) in &m {
                let mut v = a.0.clone();
                v.extend_from_slice(b);
                next.insert(Weight(v), ma * mb);
            }
        }
        acc = next;
    }
    Ok(acc)
}

fn irrep(cli: &Cli, out: Out, group: &str, rep: &str, list: bool) -> Result<(), Failure> {
    let (g, r) = parse_input(group, rep, cli.convention)?;
    if !r.is_irreducible() {
        return Err(Failure::Usage(format!(
            "error: `irrep` takes one irreducible summand, got {}",
            r.summand_count()
        )));
    }
    let s = &r.summands[0];
    let weights = effective_weights(&g, s);
    let irrep = Irrep::new(g.clone(), mtc_core::rep_calc::concat(&weights))?;
    let mults = tensor_multiplicities(&g, &weights)?;
    let fs = summand_fs(&g, s);
    let dim = dim_u64(irrep.dim());
    match cli.format {
        OutputFormat::Json => {
            let mut v = serde_json::json!({
                "group": g.to_string(),
                "rep": render_rep(&r),
                "dim": dim,
                "fs_type": fs,
                "weight_count": mults.len(),
            });
            if list {
                v["weights"] = mults
                    .iter()
                    .rev()
                    .map(|(w, m)| serde_json::json!({"weight": w.0, "multiplicity": m}))
                    .collect();
            }
            json(out, &v)
        }
        OutputFormat::Csv => {
            if list {
                writeln!(out, "weight,multiplicity")?;
                for (w, m) in mults.iter().rev() {
                    writeln!(out, "{}", csv_line(&[w.to_string(), m.to_string()]))?;
                }
            } else {
                writeln!(out, "group,rep,dim,fs_type,weight_count")?;
                writeln!(
                    out,
                    "{}",
                    csv_line(&[
                        g.to_string(),
                        render_rep(&r),
                        dim.to_string(),
                        fs.to_string(),
                        mults.len().to_string()
                    ])
                )?;
            }
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(out, "dim {dim}, {fs}, {} weights", mults.len())?;
            if list {
                for (w, m) in mults.iter().rev() {
                    writeln!(out, "  {w} x{m}")?;
                }
            }
            Ok(())
        }
    }
}

fn orbit_line(cli: &Cli, v: &CandidateVerdict) -> String {
    format!(
        "orbit_dim_C {}, levi {}, ambient HP^{}, MTC: {}",
        v.orbit.orbit_dim_c,
        v.orbit.levi,
        v.orbit.ambient_n,
        paint(
            cli,
            v.orbit.is_mtc,
            if v.orbit.is_mtc { "yes" } else { "no" }
        )
    )
}

fn orbit(cli: &Cli, out: Out, group: &str, rep: &str) -> Result<(), Failure> {
    let (g, r) = parse_input(group, rep, cli.convention)?;
    let v = mtc_report(&g, &r)?;
    match cli.format {
        OutputFormat::Json => json(
            out,
            &serde_json::json!({
                "group": g.to_string(),
                "rep": render_rep(&r),
                "orbit_dim_c": v.orbit.orbit_dim_c,
                "levi": v.orbit.levi,
                "ambient_n": v.orbit.ambient_n,
                "is_mtc": v.orbit.is_mtc,
            }),
        ),
        OutputFormat::Csv => {
            writeln!(out, "group,rep,orbit_dim_c,levi,ambient_n,is_mtc")?;
            writeln!(
                out,
                "{}",
                csv_line(&[
                    g.to_string(),
                    render_rep(&r),
                    v.orbit.orbit_dim_c.to_string(),
                    v.orbit.levi.to_string(),
                    v.orbit.ambient_n.to_string(),
                    v.orbit.is_mtc.to_string(),
                ])
            )?;
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(out, "{}", orbit_line(cli, &v))?;
            Ok(())
        }
    }
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or("n/a".into(), |b| b.to_string())
}

fn check(cli: &Cli, out: Out, group: &str, rep: &str) -> Result<(), Failure> {
    let (g, r) = parse_input(group, rep, cli.convention)?;
    let v = mtc_report(&g, &r)?;
    match cli.format {
        OutputFormat::Json => json(out, &v),
        OutputFormat::Csv => {
            writeln!(out, "{}", VERDICT_HEADER.join(","))?;
            writeln!(out, "{}", csv_line(&verdict_cells("-", &v)))?;
            Ok(())
        }
        OutputFormat::Text => {
            writeln!(out, "{} on {}", g, render_rep(&r))?;
            writeln!(out, "  fs_type       {}", v.fs_type)?;
            writeln!(
                out,
                "  dim_ok        {}",
                paint(cli, v.dim_ok, &v.dim_ok.to_string())
            )?;
            writeln!(out, "  weight_ok     {}", opt_bool(v.weight_ok))?;
            writeln!(out, "  transitive    {}", v.transitive)?;
            writeln!(out, "  degenerate    {}", v.degenerate)?;
            writeln!(out, "  {}", orbit_line(cli, &v))?;
            writeln!(
                out,
                "  table_row     {}",
                v.table_row.as_deref().unwrap_or("-")
            )?;
            writeln!(
                out,
                "  same_orbit_as {}",
                v.same_orbit_as.as_deref().unwrap_or("-")
            )?;
            for n in &v.notes {
                writeln!(out, "  note: {n}")?;
            }
            Ok(())
        }
    }
}

const VERDICT_HEADER: [&str; 14] = [
    "case",
    "group",
    "rep",
    "fs_type",
    "dim_ok",
    "weight_ok",
    "transitive",
    "degenerate",
    "orbit_dim_c",
    "levi",
    "ambient_n",
    "is_mtc",
    "table_row",
    "same_orbit_as",
];

fn verdict_cells(case: &str, v: &CandidateVerdict) -> Vec<String> {
    vec![
        case.to_string(),
        v.group.to_string(),
        render_rep(&v.rep),
        v.fs_type.to_string(),
        v.dim_ok.to_string(),
        opt_bool(v.weight_ok),
        v.transitive.to_string(),
        v.degenerate.to_string(),
        v.orbit.orbit_dim_c.to_string(),
        v.orbit.levi.to_string(),
        v.orbit.ambient_n.to_string(),
        v.orbit.is_mtc.to_string(),
        v.table_row.clone().unwrap_or_else(|| "-".into()),
        v.same_orbit_as.clone().unwrap_or_else(|| "-".into()),
    ]
}

/// Case 3 rows: the standard modules of `SU(m)` and `Sp(m)` under every
/// `(k, s)` the estimates leave open or rule out by name.
fn case3_rows(rank_cap: usize) -> Result<Vec<(String, u32, u32, ReducibleVerdict)>, Error> {
    let mut bases = Vec::new();
    for m in 2..=rank_cap + 1 {
        let ty = SimpleLieType::new(Series::A, m - 1)?;
        bases.push((format!("SU({m})"), ty));
    }
    for m in 2..=rank_cap {
        let ty = SimpleLieType::new(Series::C, m)?;
        bases.push((format!("Sp({m})"), ty));
    }
    let mut rows = Vec::new();
    for (name, ty) in bases {
        let base = Irrep::simple(ty, Weight::fundamental(ty.rank(), 0))?;
        for (k, s) in [(2, 0), (0, 1), (1, 1), (3, 0), (0, 2)] {
            let Ok(spec) = ReducibleSpec::new(k, s, base.clone()) else {
                continue;
            };
            rows.push((name.clone(), k, s, classify_reducible(&spec)));
        }
    }
    Ok(rows)
}

fn classify(cli: &Cli, out: Out, case: Case, cap: usize, exhaustive: bool) -> Result<(), Failure> {
    let mut verdicts: Vec<(&str, CandidateVerdict)> = Vec::new();
    if matches!(case, Case::One | Case::All) {
        verdicts.extend(enumerate_case1(cap)?.into_iter().map(|v| ("1", v)));
    }
    let case2 = if matches!(case, Case::Two | Case::All) {
        let rows = enumerate_case2(cap)?;
        verdicts.extend(rows.iter().cloned().map(|v| ("2", v)));
        Some(rows)
    } else {
        None
    };
    let case3 = if matches!(case, Case::Three | Case::All) {
        case3_rows(cap)?
    } else {
        Vec::new()
    };

    // brute-force cross-check of the case 2 reduction
    let mut mismatch = false;
    let mut exhaustive_summary = None;
    if exhaustive {
        const MAX_RANK: usize = 3;
        const MAX_FACTORS: usize = 4;
        let brute = enumerate_case2_exhaustive(MAX_RANK, MAX_FACTORS)?;
        let structural = match &case2 {
            Some(rows) => rows.clone(),
            None => enumerate_case2(cap.max(MAX_RANK))?,
        };
        let mut a: Vec<_> = brute.iter().map(|v| v.canonical_key()).collect();
        let mut b: Vec<_> = structural
            .iter()
            .filter(|v| v.group.factors().iter().all(|t| t.rank() <= MAX_RANK))
            .map(|v| v.canonical_key())
            .collect();
        a.sort();
        b.sort();
        mismatch = a != b;
        exhaustive_summary = Some(format!(
            "exhaustive: {} products of up to {MAX_FACTORS} factors of rank <= {MAX_RANK} pass; {}",
            brute.len(),
            if mismatch {
                "MISMATCH with the structural search"
            } else {
                "same set as the structural search"
            }
        ));
    }

    match cli.format {
        OutputFormat::Json => {
            let v1: Vec<_> = verdicts
                .iter()
                .filter(|(c, _)| *c == "1")
                .map(|(_, v)| v)
                .collect();
            let v2: Vec<_> = verdicts
                .iter()
                .filter(|(c, _)| *c == "2")
                .map(|(_, v)| v)
                .collect();
            let v3: Vec<_> = case3
                .iter()
                .map(|(b, k, s, v)| serde_json::json!({"base": b, "k": k, "s": s, "result": v}))
                .collect();
            let mut doc = serde_json::json!({"rank_cap": cap});
            if matches!(case, Case::One | Case::All) {
                doc["case1"] = serde_json::to_value(v1).unwrap();
            }
            if matches!(case, Case::Two | Case::All) {
                doc["case2"] = serde_json::to_value(v2).unwrap();
            }
            if matches!(case, Case::Three | Case::All) {
                doc["case3"] = serde_json::Value::Array(v3);
            }
            if let Some(s) = &exhaustive_summary {
                doc["exhaustive"] = serde_json::json!({"summary": s, "agrees": !mismatch});
            }
            json(out, &doc)?;
        }
        OutputFormat::Csv => {
            if !verdicts.is_empty() {
                writeln!(out, "{}", VERDICT_HEADER.join(","))?;
                for (c, v) in &verdicts {
                    writeln!(out, "{}", csv_line(&verdict_cells(c, v)))?;
                }
            }
            if !case3.is_empty() {
                writeln!(out, "base,k,s,valid,detail")?;
                for (b, k, s, v) in &case3 {
                    let (valid, detail) = reducible_cells(v);
                    writeln!(
                        out,
                        "{}",
                        csv_line(&[b.clone(), k.to_string(), s.to_string(), valid, detail])
                    )?;
                }
            }
        }
        OutputFormat::Text => {
            for c in ["1", "2"] {
                let rows: Vec<_> = verdicts.iter().filter(|(x, _)| *x == c).collect();
                if rows.is_empty() {
                    continue;
                }
                writeln!(out, "case {c} (rank cap {cap})")?;
                for (_, v) in rows {
                    let mut flags = Vec::new();
                    if v.transitive {
                        flags.push("transitive".to_string());
                    }
                    if v.degenerate {
                        flags.push("degenerate".to_string());
                    }
                    if let Some(s) = &v.same_orbit_as {
                        flags.push(format!("same orbit as {s}"));
                    }
                    writeln!(
                        out,
                        "  {:<16} {:<34} {:<22} HP^{:<3} {:<24} {}",
                        v.group.to_string(),
                        render_rep(&v.rep),
                        v.table_row.as_deref().unwrap_or("-"),
                        v.orbit.ambient_n,
                        v.orbit.levi.to_string(),
                        flags.join(", ")
                    )?;
                }
            }
            if !case3.is_empty() {
                writeln!(out, "case 3 (rank cap {cap})")?;
                for (b, k, s, v) in &case3 {
                    let (valid, detail) = reducible_cells(v);
                    let valid = paint(cli, valid == "valid", &valid);
                    writeln!(out, "  {b:<8} k={k} s={s}  {valid}: {detail}")?;
                }
            }
            if let Some(s) = &exhaustive_summary {
                writeln!(out, "{s}")?;
            }
        }
    }
    if mismatch {
        return Err(Failure::Diff);
    }
    Ok(())
}

fn reducible_cells(v: &ReducibleVerdict) -> (String, String) {
    match v {
        ReducibleVerdict::Valid { identification, .. } => ("valid".into(), identification.clone()),
        ReducibleVerdict::Invalid { reason, .. } => ("invalid".into(), reason.to_string()),
    }
}

fn tables(
    cli: &Cli,
    out: Out,
    verify: bool,
    show: Option<&str>,
    cap: usize,
) -> Result<(), Failure> {
    let cat = bundled();
    if let Some(key) = show {
        let which: TableKey = key.parse().map_err(|_| {
            Failure::Usage(format!(
                "error: unknown table `{key}` (expected wolf, simple, nonsimple or parallel)"
            ))
        })?;
        let f = match cli.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        };
        write!(out, "{}", cat.render(f, which))?;
        return Ok(());
    }
    if !verify {
        return Err(Failure::Usage(
            "error: `tables` needs --verify or --show <KEY>".into(),
        ));
    }
    let report = cat.verify(cap)?;
    let diff = report.diff();
    match cli.format {
        OutputFormat::Json => json(
            out,
            &serde_json::json!({"rank_cap": cap, "checks": report.checks.len(), "diff": diff}),
        )?,
        OutputFormat::Csv => {
            writeln!(out, "table,row,field,expected,computed")?;
            for c in &diff {
                writeln!(
                    out,
                    "{}",
                    csv_line(&[
                        c.table.into(),
                        c.row.clone(),
                        c.field.into(),
                        c.expected.clone(),
                        c.computed.clone()
                    ])
                )?;
            }
        }
        OutputFormat::Text => {
            if diff.is_empty() {
                writeln!(out, "{}", paint(cli, true, "all rows match"))?;
                writeln!(out, "{} checks at rank cap {cap}", report.checks.len())?;
            } else {
                for c in &diff {
                    writeln!(
                        out,
                        "{} {} {}: expected {}, computed {}",
                        c.table, c.row, c.field, c.expected, c.computed
                    )?;
                }
                writeln!(
                    out,
                    "{}",
                    paint(
                        cli,
                        false,
                        &format!("{} of {} checks differ", diff.len(), report.checks.len())
                    )
                )?;
            }
        }
    }
    if diff.is_empty() {
        Ok(())
    } else {
        Err(Failure::Diff)
    }
}
