use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use newton_ehrhart::formulas::Family;
use newton_ehrhart::idp::{decompose, idp_brute};
use newton_ehrhart::reflexivity::{
    gorenstein_index_from_hstar, gorenstein_index_geometric, grothendieck_reflexive_form, is_reflexive_geometric,
    schur_gorenstein_form, schur_reflexive_form,
};
use newton_ehrhart::symfun::{grothendieck_expansion, is_positive, schur_expansion, snp_check};
use newton_ehrhart::sweep::{grothendieck_sweep, schur_sweep};
use newton_ehrhart::{
    ehrhart_polynomial, gorenstein_index, hstar, is_palindromic, is_unimodal, FacetInequality, Partition, Point,
    PolytopeHandle, Sense,
};
use serde_json::{json, Value};

mod tables;

/// Exit code 1 for bad input, 2 when two computations disagree.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Disagreement(String),
}

impl From<newton_ehrhart::Error> for Failure {
    fn from(e: newton_ehrhart::Error) -> Self {
        match e {
            newton_ehrhart::Error::Consistency(_) => Failure::Disagreement(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

#[derive(Parser)]
#[command(name = "newton-ehrhart", version, about = "Newton polytopes of Schur and inflated Grothendieck polynomials")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Schur,
    Grothendieck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Geometric,
    Classifier,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdpMethod {
    Brute,
    Constructive,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Schur,
    Grothendieck,
    Both,
}

#[derive(Args, Clone)]
struct Select {
    #[arg(long, value_enum, default_value_t = Kind::Schur)]
    kind: Kind,
    /// Comma-separated parts, e.g. `2,1,0`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Number of variables; defaults to the number of listed parts.
    #[arg(long)]
    m: Option<usize>,
    /// Inflation parameter (grothendieck only, default 1).
    #[arg(long)]
    h: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// The h*-vector.
    Hstar(Select),
    /// Every lattice point.
    Points(Select),
    /// Facet inequalities and the equations of the affine span.
    Facets {
        #[command(flatten)]
        select: Select,
        /// Derive facets from the point set instead of the closed form.
        #[arg(long)]
        geometric: bool,
    },
    /// Vertices.
    Vertices(Select),
    /// Reflexivity verdict with witness.
    Reflexive {
        #[command(flatten)]
        select: Select,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Gorenstein verdict and index.
    Gorenstein {
        #[command(flatten)]
        select: Select,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Integer decomposition property up to a dilate.
    Idp {
        #[command(flatten)]
        select: Select,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        #[arg(long, value_enum, default_value_t = IdpMethod::Both)]
        method: IdpMethod,
    },
    /// Compare the support of the polynomial with the polytope's points.
    Snp {
        #[command(flatten)]
        select: Select,
        /// Include every monomial in JSON output.
        #[arg(long)]
        terms: bool,
    },
    /// Closed-form h*-vector of a reflexive Schur family.
    Formula {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Also run the generic engine and compare.
        #[arg(long)]
        check: bool,
    },
    /// Regenerate a reference table and diff it against the golden copy.
    Tables {
        #[arg(long)]
        which: usize,
        /// Largest m (tables 1 and 2) or n (table 3).
        #[arg(long)]
        max_row: Option<usize>,
        /// Check that rows listed for all h >= h0 have equal point sets at h0 and h0 + 1.
        #[arg(long)]
        stability_check: bool,
    },
    /// Classifier-versus-geometry equivalence over a range of partitions.
    Sweep {
        #[arg(long, default_value_t = 8)]
        max_n: u64,
        #[arg(long, default_value_t = 5)]
        max_m: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        hs: Vec<u32>,
        #[arg(long, value_enum, default_value_t = SweepKind::Both)]
        kind: SweepKind,
        /// Worker threads; results are ordered the same for any value.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

impl Select {
    fn handle(&self) -> Result<PolytopeHandle, Failure> {
        let listed = self.lambda.split(',').filter(|t| !t.trim().is_empty()).count();
        let lambda = Partition::parse(&self.lambda, self.m.unwrap_or(listed))?;
        match self.kind {
            Kind::Schur => {
                if self.h.is_some() {
                    return Err(Failure::Usage("--h only applies to --kind grothendieck".into()));
                }
                Ok(PolytopeHandle::schur(lambda))
            }
            Kind::Grothendieck => Ok(PolytopeHandle::grothendieck(self.h.unwrap_or(1), lambda)?),
        }
    }
}

fn joined<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn no_csv(cmd: &str) -> Failure {
    Failure::Usage(format!("`{cmd}` has no CSV form; use --format text or json"))
}

fn cmd_hstar(select: &Select, format: Format) -> CliResult {
    let handle = select.handle()?;
    let v = hstar(&handle)?;
    match format {
        Format::Text | Format::Csv => println!("{v}"),
        Format::Json => print_json(&json!({
            "handle": handle,
            "hstar": v,
            "ehrhart": ehrhart_polynomial(&handle)?.to_string(),
            "palindromic": is_palindromic(&v),
            "unimodal": is_unimodal(&v),
            "gorenstein_index": gorenstein_index(&v),
        })),
    }
    Ok(())
}

fn print_points(handle: &PolytopeHandle, pts: &[Point], format: Format) {
    match format {
        Format::Text => pts.iter().for_each(|p| println!("{}", joined(p))),
        Format::Csv => {
            println!("{}", (1..=handle.m()).map(|i| format!("x{i}")).collect::<Vec<_>>().join(","));
            pts.iter().for_each(|p| println!("{}", joined(p)));
        }
        Format::Json => print_json(&json!({ "handle": handle, "count": pts.len(), "points": pts })),
    }
}

/// `a·x <= b` form of an inequality, for CSV.
fn as_le(f: &FacetInequality) -> (Vec<i64>, i64) {
    match f.sense {
        Sense::Ge => (f.coeffs.iter().map(|c| -c).collect(), -f.bound),
        _ => (f.coeffs.clone(), f.bound),
    }
}

fn cmd_facets(select: &Select, geometric: bool, format: Format) -> CliResult {
    let handle = select.handle()?;
    let desc = if geometric { handle.geometric_facets()? } else { handle.facets()? };
    match format {
        Format::Text => {
            desc.span.iter().for_each(|e| println!("span: {e}"));
            desc.facets.iter().for_each(|f| println!("{f}"));
        }
        Format::Csv => {
            let head: Vec<String> = (1..=handle.m()).map(|i| format!("a{i}")).collect();
            println!("{},b,eq", head.join(","));
            for (f, eq) in desc.span.iter().map(|e| (e, 1)).chain(desc.facets.iter().map(|f| (f, 0))) {
                let (a, b) = as_le(f);
                println!("{},{b},{eq}", joined(&a));
            }
        }
        Format::Json => print_json(&json!({ "handle": handle, "facets": desc.facets, "span": desc.span })),
    }
    Ok(())
}

fn reflexive_form(handle: &PolytopeHandle) -> Result<Option<&'static str>, Failure> {
    Ok(match handle {
        PolytopeHandle::Schur { lambda } => schur_reflexive_form(lambda)?,
        PolytopeHandle::Grothendieck { h, lambda } => grothendieck_reflexive_form(*h, lambda)?,
    })
}

fn cmd_reflexive(select: &Select, method: Method, format: Format) -> CliResult {
    let handle = select.handle()?;
    if format == Format::Csv {
        return Err(no_csv("reflexive"));
    }
    if handle.is_degenerate() {
        match format {
            Format::Json => print_json(&json!({ "handle": handle, "verdict": "degenerate" })),
            _ => println!("{handle}\ndegenerate: the polytope is a single point"),
        }
        return Ok(());
    }
    let report = match method {
        Method::Classifier => None,
        _ => Some(is_reflexive_geometric(&handle)?),
    };
    let form = match method {
        Method::Geometric => None,
        _ => Some(reflexive_form(&handle)?),
    };
    match format {
        Format::Json => print_json(&json!({
            "handle": handle,
            "geometric": report,
            "classifier": form.map(|f| json!({ "reflexive": f.is_some(), "form": f })),
        })),
        _ => {
            println!("{handle}");
            if let Some(r) = &report {
                println!("geometric: {}", r.is_reflexive());
                println!("  interior lattice points: {}", r.interior_count);
                if let Some(u) = &r.interior_point {
                    println!("  interior point: {}", joined(u));
                    let d: Vec<i64> = r.distances.iter().map(|d| d.distance).collect();
                    println!("  facet distances: {}", joined(&d));
                }
            }
            if let Some(f) = form {
                println!("classifier: {}{}", f.is_some(), f.map(|s| format!(" {s}")).unwrap_or_default());
            }
        }
    }
    if let (Some(r), Some(f)) = (&report, form) {
        if r.is_reflexive() != f.is_some() {
            return Err(Failure::Disagreement(format!(
                "geometry says {} but the classifier says {} for {handle}",
                r.is_reflexive(),
                f.is_some()
            )));
        }
    }
    Ok(())
}

fn cmd_gorenstein(select: &Select, method: Method, format: Format) -> CliResult {
    let handle = select.handle()?;
    if format == Format::Csv {
        return Err(no_csv("gorenstein"));
    }
    if handle.is_degenerate() {
        match format {
            Format::Json => print_json(&json!({ "handle": handle, "verdict": "degenerate" })),
            _ => println!("{handle}\ndegenerate: the polytope is a single point"),
        }
        return Ok(());
    }
    let form = match (method, &handle) {
        (Method::Geometric, _) => None,
        (_, PolytopeHandle::Schur { lambda }) => Some(schur_gorenstein_form(lambda)?),
        (Method::Classifier, PolytopeHandle::Grothendieck { .. }) => {
            return Err(Failure::Usage(
                "no Gorenstein classifier exists for grothendieck handles; use --method geometric".into(),
            ))
        }
        (Method::Both, PolytopeHandle::Grothendieck { .. }) => None,
    };
    let (geometric, by_hstar) = match method {
        Method::Classifier => (None, None),
        _ => (Some(gorenstein_index_geometric(&handle)?), Some(gorenstein_index_from_hstar(&handle)?)),
    };
    match format {
        Format::Json => print_json(&json!({
            "handle": handle,
            "geometric": geometric.map(|g| json!({ "gorenstein": g.is_some(), "index": g })),
            "hstar": by_hstar.map(|g| json!({ "gorenstein": g.is_some(), "index": g })),
            "classifier": form.map(|f| json!({ "gorenstein": f.is_some(), "form": f })),
        })),
        _ => {
            println!("{handle}");
            let show = |name: &str, g: Option<usize>| match g {
                Some(c) => println!("{name}: true (index {c})"),
                None => println!("{name}: false"),
            };
            if let (Some(g), Some(s)) = (geometric, by_hstar) {
                show("geometric", g);
                show("hstar", s);
            }
            if let Some(f) = form {
                println!("classifier: {}{}", f.is_some(), f.map(|s| format!(" {s}")).unwrap_or_default());
            }
        }
    }
    if let (Some(g), Some(s)) = (geometric, by_hstar) {
        if g != s {
            return Err(Failure::Disagreement(format!("geometric index {g:?} but h*-vector index {s:?} for {handle}")));
        }
    }
    if let (Some(g), Some(f)) = (geometric, form) {
        if g.is_some() != f.is_some() {
            return Err(Failure::Disagreement(format!(
                "geometry says {} but the classifier says {} for {handle}",
                g.is_some(),
                f.is_some()
            )));
        }
    }
    Ok(())
}

fn cmd_idp(select: &Select, tmax: u32, method: IdpMethod, format: Format) -> CliResult {
    let handle = select.handle()?;
    if tmax == 0 {
        return Err(Failure::Usage("--tmax must be at least 1".into()));
    }
    if format == Format::Csv {
        return Err(no_csv("idp"));
    }
    let brute = match method {
        IdpMethod::Constructive => None,
        _ => Some(idp_brute(&handle, tmax)?),
    };
    let mut certificates = Vec::new();
    let mut built = 0usize;
    if method != IdpMethod::Brute {
        for t in 1..=tmax {
            for p in handle.dilate(t)?.lattice_points()? {
                let d = decompose(&handle, t, &p)?;
                built += 1;
                if format == Format::Json {
                    certificates.push(json!({ "t": t, "point": d.point, "parts": d.parts, "tableau": d.tableau.rows }));
                }
            }
        }
    }
    match format {
        Format::Json => print_json(&json!({
            "handle": handle,
            "t_max": tmax,
            "brute": brute,
            "certificates": if method == IdpMethod::Brute { Value::Null } else { Value::Array(certificates) },
        })),
        _ => {
            println!("{handle}");
            if let Some(b) = &brute {
                println!("brute: {} (t <= {tmax})", b.holds);
                if let Some((t, p)) = &b.counterexample {
                    println!("  counterexample: {} in the {t}-th dilate", joined(p));
                }
            }
            if method != IdpMethod::Brute {
                println!("constructive: {built} certificates validated (t <= {tmax})");
            }
        }
    }
    if let Some(b) = &brute {
        if !b.holds && method == IdpMethod::Both {
            return Err(Failure::Disagreement(format!("sumsets miss a point that the tableau construction decomposes for {handle}")));
        }
    }
    Ok(())
}

fn cmd_snp(select: &Select, terms: bool, format: Format) -> CliResult {
    let handle = select.handle()?;
    if format == Format::Csv {
        return Err(no_csv("snp"));
    }
    let poly = match &handle {
        PolytopeHandle::Schur { lambda } => schur_expansion(lambda, lambda.m())?,
        PolytopeHandle::Grothendieck { h, lambda } => grothendieck_expansion(*h, lambda, lambda.m())?,
    };
    let pts = handle.lattice_points()?;
    let saturated = snp_check(&poly, |q| handle.contains(q), &pts);
    match format {
        Format::Json => {
            let mut v = json!({
                "handle": handle,
                "saturated": saturated,
                "monomials": poly.len(),
                "lattice_points": pts.len(),
                "positive": is_positive(&poly),
            });
            if terms {
                v["terms"] = serde_json::to_value(&poly).expect("json");
            }
            print_json(&v);
        }
        _ => {
            println!("{handle}");
            println!("saturated: {saturated}");
            println!("monomials: {}", poly.len());
            println!("lattice points: {}", pts.len());
            println!("positive coefficients: {}", is_positive(&poly));
        }
    }
    if !saturated {
        return Err(Failure::Disagreement(format!("support and lattice points differ for {handle}")));
    }
    Ok(())
}

fn cmd_formula(family: &str, n: usize, check: bool, format: Format) -> CliResult {
    let fam: Family = family.parse()?;
    let v = fam.hstar(n)?;
    let engine = if check {
        let lambda = newton_ehrhart::formulas::family_partition(fam, n)?;
        Some(hstar(&PolytopeHandle::schur(lambda))?)
    } else {
        None
    };
    match format {
        Format::Json => print_json(&json!({
            "family": fam.name(),
            "n": n,
            "hstar": v,
            "engine_agrees": engine.as_ref().map(|e| *e == v),
        })),
        _ => println!("{v}"),
    }
    if let Some(e) = engine {
        if e != v {
            return Err(Failure::Disagreement(format!("closed form gives {v}, the engine gives {e}")));
        }
    }
    Ok(())
}

fn cmd_tables(which: usize, max_row: Option<usize>, stability_check: bool, format: Format) -> CliResult {
    if !(1..=3).contains(&which) {
        return Err(Failure::Usage(format!("there is no table {which} (choose 1, 2 or 3)")));
    }
    let rows = tables::compute(which, max_row.unwrap_or(tables::default_max_row(which)), stability_check)?;
    match format {
        Format::Json => print_json(&Value::Array(rows.iter().map(tables::json_row).collect())),
        Format::Csv => rows.iter().for_each(|c| println!("{}", tables::csv_row(which, c))),
        Format::Text => {
            for c in &rows {
                let mut notes = Vec::new();
                if c.formula.is_some() {
                    notes.push("formula agrees".to_string());
                }
                match c.stable {
                    Some(true) => notes.push(format!("stable at h={}", c.row.handle.h().unwrap_or(0) + 1)),
                    Some(false) => notes.push("NOT stable".into()),
                    None => {}
                }
                let status = if c.matches() { "ok" } else { "MISMATCH" };
                let notes = if notes.is_empty() { String::new() } else { format!(" ({})", notes.join(", ")) };
                println!("{}: {}  {status}{notes}", c.row.label, c.hstar);
            }
        }
    }
    let bad: Vec<String> = rows
        .iter()
        .filter(|c| !c.matches())
        .map(|c| format!("{}: got {}, golden {}", c.row.label, c.hstar, c.golden.as_deref().unwrap_or("missing")))
        .collect();
    if !bad.is_empty() {
        return Err(Failure::Disagreement(bad.join("\n")));
    }
    Ok(())
}

fn cmd_sweep(max_n: u64, max_m: usize, hs: &[u32], kind: SweepKind, jobs: Option<usize>, format: Format) -> CliResult {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {j} workers: {e}")))?;
    }
    if format == Format::Csv {
        return Err(no_csv("sweep"));
    }
    let schur = if kind != SweepKind::Grothendieck { Some(schur_sweep(max_n, max_m)?) } else { None };
    let groth = if kind != SweepKind::Schur { Some(grothendieck_sweep(max_n, max_m.min(4), hs)?) } else { None };
    let schur_bad: Vec<_> =
        schur.iter().flatten().filter(|c| !c.reflexive_agrees() || !c.gorenstein_agrees()).cloned().collect();
    let groth_bad: Vec<_> = groth.iter().flatten().filter(|c| !c.agrees()).cloned().collect();
    match format {
        Format::Json => print_json(&json!({
            "schur": schur.as_ref().map(|s| json!({
                "cases": s.len(),
                "reflexive": s.iter().filter(|c| c.reflexive_geometric).count(),
                "gorenstein": s.iter().filter(|c| c.gorenstein_hstar.is_some()).count(),
                "disagreements": schur_bad,
            })),
            "grothendieck": groth.as_ref().map(|g| json!({
                "cases": g.len(),
                "reflexive": g.iter().filter(|c| c.reflexive_geometric).count(),
                "disagreements": groth_bad,
            })),
        })),
        _ => {
            if let Some(s) = &schur {
                println!(
                    "schur |λ| <= {max_n}, m <= {max_m}: {} cases, {} reflexive, {} gorenstein, {} disagreements",
                    s.len(),
                    s.iter().filter(|c| c.reflexive_geometric).count(),
                    s.iter().filter(|c| c.gorenstein_hstar.is_some()).count(),
                    schur_bad.len()
                );
            }
            if let Some(g) = &groth {
                println!(
                    "grothendieck |λ| <= {max_n}, m <= {}, h in {}: {} cases, {} reflexive, {} disagreements",
                    max_m.min(4),
                    joined(hs),
                    g.len(),
                    g.iter().filter(|c| c.reflexive_geometric).count(),
                    groth_bad.len()
                );
            }
        }
    }
    if !schur_bad.is_empty() || !groth_bad.is_empty() {
        let mut lines: Vec<String> = schur_bad.iter().map(|c| format!("schur ({})", c.lambda)).collect();
        lines.extend(groth_bad.iter().map(|c| format!("grothendieck h={} ({})", c.h, c.lambda)));
        return Err(Failure::Disagreement(lines.join("\n")));
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    let f = cli.format;
    match &cli.command {
        Command::Hstar(s) => cmd_hstar(s, f),
        Command::Points(s) => {
            let handle = s.handle()?;
            print_points(&handle, &handle.lattice_points()?, f);
            Ok(())
        }
        Command::Facets { select, geometric } => cmd_facets(select, *geometric, f),
        Command::Vertices(s) => {
            let handle = s.handle()?;
            print_points(&handle, &handle.vertices()?, f);
            Ok(())
        }
        Command::Reflexive { select, method } => cmd_reflexive(select, *method, f),
        Command::Gorenstein { select, method } => cmd_gorenstein(select, *method, f),
        Command::Idp { select, tmax, method } => cmd_idp(select, *tmax, *method, f),
        Command::Snp { select, terms } => cmd_snp(select, *terms, f),
        Command::Formula { family, n, check } => cmd_formula(family, *n, *check, f),
        Command::Tables { which, max_row, stability_check } => cmd_tables(*which, *max_row, *stability_check, f),
        Command::Sweep { max_n, max_m, hs, kind, jobs } => cmd_sweep(*max_n, *max_m, hs, *kind, *jobs, f),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("disagreement: {msg}");
            ExitCode::from(2)
        }
    }
}
