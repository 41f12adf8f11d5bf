use std::io::{self, Write};
use std::process::ExitCode;

use serde::Serialize;
use serde_json::json;

use turanlab::combinatorics::{all_graphs, chromatic_number, clique_number, enumerate_free};
use turanlab::graph::{emit_graph6, parse_graph6, read_graph6_lines};
use turanlab::partition::{edit_distance_to_turan_seeded, exact_feasible, min_edges_to_r_partite_seeded, Mode};
use turanlab::pspectral::{p_spectral_radius, PSpectralConfig, PValue};
use turanlab::spectral::{spectrum, MatrixKind};
use turanlab::verifier::suite::{run_criterion, CriterionResult, Level, CRITERIA};
use turanlab::verifier::{
    a_alpha_extremal_search, check as check_bound, extremal_search, stability_scan, BoundId, BoundParams, DeficitKind,
    Objective, Quantity, Status,
};
use turanlab::{Error, FamilySpec, Graph, Result};

use crate::{
    AlphaArgs, AnalyzeArgs, CheckArgs, ConstructArgs, Emit, EnumerateArgs, ExtremalArgs, Format, Global, PartitionArgs,
    StabilityArgs, VerifyArgs,
};

pub enum Outcome {
    Ok,
    /// A bound was violated or a criterion failed.
    Failed,
}

pub fn report_error(e: &Error) -> ExitCode {
    eprintln!("turanlab: error: {e}");
    ExitCode::from(2)
}

pub fn configure_workers(global: &Global) -> Result<()> {
    let from_env = match std::env::var("TURANLAB_WORKERS") {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("TURANLAB_WORKERS must be a positive integer, got {v:?}")))?,
        ),
        Err(_) => None,
    };
    if let Some(workers) = from_env.or(global.parallelism) {
        if workers == 0 {
            return Err(Error::Usage("worker count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| Error::Usage(format!("worker pool: {e}")))?;
    }
    Ok(())
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

fn write_record<W: Write>(out: &mut W, record: &impl Serialize) -> Result<()> {
    let line = serde_json::to_string(record).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{line}").map_err(io_err)
}

fn write_line<W: Write>(out: &mut W, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(io_err)
}

/// A graph6 argument, or every line of standard input for `-`.
fn read_graphs(arg: &str) -> Result<Vec<Graph>> {
    if arg == "-" {
        read_graph6_lines(io::stdin().lock())
    } else {
        Ok(vec![parse_graph6(arg.trim().as_bytes())?])
    }
}

fn parse_int(s: &str, what: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Usage(format!("{what}: expected a non-negative integer, got {s:?}")))
}

fn parse_p(s: &str) -> Result<PValue> {
    s.parse::<PValue>().map_err(|e| match e {
        Error::Domain(m) => Error::Usage(m),
        other => other,
    })
}

fn pconfig(global: &Global) -> PSpectralConfig {
    PSpectralConfig {
        seed: global.seed,
        ..PSpectralConfig::default()
    }
}

fn family_spec(name: &str, params: &[String]) -> Result<FamilySpec> {
    let ints = || {
        params
            .iter()
            .map(|p| parse_int(p, name))
            .collect::<Result<Vec<usize>>>()
    };
    let want = |k: usize| -> Result<Vec<usize>> {
        let v = ints()?;
        if v.len() == k {
            Ok(v)
        } else {
            Err(Error::Usage(format!(
                "{name} takes {k} integer parameter(s), got {}",
                v.len()
            )))
        }
    };
    let graphs = |k: usize| -> Result<Vec<Graph>> {
        if params.len() < k {
            return Err(Error::Usage(format!("{name} needs {k} graph6 argument(s)")));
        }
        params[..k].iter().map(|p| parse_graph6(p.as_bytes())).collect()
    };
    Ok(match name.to_ascii_lowercase().as_str() {
        "turan" => {
            let v = want(2)?;
            FamilySpec::Turan { r: v[0], n: v[1] }
        }
        "multipartite" => FamilySpec::CompleteMultipartite(ints()?),
        "complete" => FamilySpec::Complete(want(1)?[0]),
        "cycle" => FamilySpec::Cycle(want(1)?[0]),
        "wheel" => FamilySpec::Wheel(want(1)?[0]),
        "book" => FamilySpec::Book(want(1)?[0]),
        "friendship" => FamilySpec::Friendship(want(1)?[0]),
        "split" => {
            let v = want(2)?;
            FamilySpec::Split { n: v[0], k: v[1] }
        }
        "splitplus" => {
            let v = want(2)?;
            FamilySpec::SplitPlus { n: v[0], k: v[1] }
        }
        "empty" => FamilySpec::EmptyGraph(want(1)?[0]),
        "blowup" => {
            if params.len() != 2 {
                return Err(Error::Usage("blowup takes a graph6 string and a factor".into()));
            }
            FamilySpec::BlowUp(parse_graph6(params[0].as_bytes())?, parse_int(&params[1], name)?)
        }
        "join" => {
            let mut g = graphs(2)?;
            let b = g.pop().expect("two graphs");
            FamilySpec::Join(g.pop().expect("two graphs"), b)
        }
        "union" => {
            let mut g = graphs(2)?;
            let b = g.pop().expect("two graphs");
            FamilySpec::DisjointUnion(g.pop().expect("two graphs"), b)
        }
        other => return Err(Error::Usage(format!("unknown family {other:?}"))),
    })
}

pub fn construct<W: Write>(_global: &Global, args: &ConstructArgs, out: &mut W) -> Result<Outcome> {
    let g = family_spec(&args.family, &args.params)?.construct()?;
    match args.emit {
        Emit::Graph6 => write_line(out, &emit_graph6(&g))?,
        Emit::Edges => {
            write_line(out, &format!("{} {}", g.n(), g.m()))?;
            for (u, v) in g.edges() {
                write_line(out, &format!("{u} {v}"))?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn matrix_kind(s: &str) -> Result<MatrixKind> {
    match s {
        "A" | "a" => Ok(MatrixKind::Adjacency),
        "Q" | "q" => Ok(MatrixKind::SignlessLaplacian),
        other => {
            let alpha = other
                .strip_prefix("Aalpha=")
                .or_else(|| other.strip_prefix("aalpha="))
                .and_then(|a| a.parse::<f64>().ok())
                .ok_or_else(|| Error::Usage(format!("unknown matrix {other:?} (A, Q or Aalpha=x)")))?;
            if !(0.0..=1.0).contains(&alpha) {
                return Err(Error::Usage(format!("alpha must lie in [0, 1], got {alpha}")));
            }
            Ok(MatrixKind::AAlpha(alpha))
        }
    }
}

#[derive(Serialize)]
struct Analysis {
    graph6: String,
    n: usize,
    m: usize,
    min_degree: usize,
    max_degree: usize,
    omega: usize,
    chi: usize,
    matrix: String,
    radius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalues: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<PValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_spectral_radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_certification: Option<turanlab::pspectral::Certification>,
}

pub fn analyze<W: Write>(global: &Global, args: &AnalyzeArgs, out: &mut W) -> Result<Outcome> {
    let kind = matrix_kind(&args.matrix)?;
    let p = args.p.as_deref().map(parse_p).transpose()?;
    for g in read_graphs(&args.graph)? {
        let spec = spectrum(&g, kind)?;
        let pres = p.map(|p| p_spectral_radius(&g, p, &pconfig(global))).transpose()?;
        let rec = Analysis {
            graph6: emit_graph6(&g),
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            omega: clique_number(&g),
            chi: chromatic_number(&g)?,
            matrix: args.matrix.clone(),
            radius: spec.radius,
            eigenvalues: args.spectrum.then_some(spec.eigenvalues),
            p,
            p_spectral_radius: pres.as_ref().map(|r| r.value),
            p_certification: pres.as_ref().map(|r| r.certified),
        };
        match global.format {
            Format::Json => write_record(out, &rec)?,
            Format::Text => {
                let mut line = format!(
                    "{:<12} n={:<3} m={:<4} delta={:<3} Delta={:<3} omega={:<2} chi={:<2} radius({})={:.10}",
                    rec.graph6,
                    rec.n,
                    rec.m,
                    rec.min_degree,
                    rec.max_degree,
                    rec.omega,
                    rec.chi,
                    rec.matrix,
                    rec.radius
                );
                if let (Some(p), Some(v)) = (rec.p, rec.p_spectral_radius) {
                    line.push_str(&format!(" lambda^({p})={v:.10}"));
                }
                write_line(out, &line)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn quantity_text(q: &Option<Quantity>) -> String {
    match q {
        None => "-".into(),
        Some(Quantity::Int(x)) => x.to_string(),
        Some(Quantity::Real(x)) => format!("{x:.10}"),
        Some(Quantity::Exact(s)) => s.clone(),
    }
}

pub fn check<W: Write>(global: &Global, args: &CheckArgs, out: &mut W) -> Result<Outcome> {
    let ids: Vec<BoundId> = if args.bound.eq_ignore_ascii_case("all") {
        // without r only the unconditional bounds apply
        BoundId::ALL
            .into_iter()
            .filter(|id| args.r.is_some() || !id.needs_r())
            .collect()
    } else {
        vec![args.bound.parse()?]
    };
    let params = BoundParams {
        r: args.r,
        s: args.s,
        p: args.p.as_deref().map(parse_p).transpose()?,
        q: args.q.as_deref().map(parse_p).transpose()?,
        t: args.t,
        pspectral: pconfig(global),
    };
    let mut violated = false;
    for g in read_graphs(&args.graph)? {
        for &id in &ids {
            let rep = check_bound(id, &g, &params)?;
            violated |= rep.status == Status::Violated;
            match global.format {
                Format::Json => write_line(out, &rep.to_json_line())?,
                Format::Text => write_line(
                    out,
                    &format!(
                        "{:<12} {:<25} {:<13} lhs={:<16} rhs={:<16}{}",
                        rep.graph6,
                        id.name(),
                        format!("{:?}", rep.status),
                        quantity_text(&rep.lhs),
                        quantity_text(&rep.rhs),
                        rep.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                    ),
                )?,
            }
        }
    }
    Ok(if violated { Outcome::Failed } else { Outcome::Ok })
}

pub fn partition<W: Write>(global: &Global, args: &PartitionArgs, out: &mut W) -> Result<Outcome> {
    for g in read_graphs(&args.graph)? {
        let mode = if args.exact {
            Mode::Exact
        } else if args.heuristic || !exact_feasible(g.n(), args.r) {
            Mode::Heuristic
        } else {
            Mode::Exact
        };
        let (what, res) = if args.edit_distance {
            (
                "edit_distance",
                edit_distance_to_turan_seeded(&g, args.r, mode, global.seed)?,
            )
        } else {
            (
                "min_deletions",
                min_edges_to_r_partite_seeded(&g, args.r, mode, global.seed)?,
            )
        };
        let blocks = res.assignment.blocks();
        match global.format {
            Format::Json => write_record(
                out,
                &json!({
                    "graph6": emit_graph6(&g),
                    "r": args.r,
                    "quantity": what,
                    "value": res.value,
                    "mode": res.mode,
                    "blocks": blocks,
                }),
            )?,
            Format::Text => write_line(
                out,
                &format!(
                    "{:<12} r={} {what}={} ({:?}) blocks={blocks:?}",
                    emit_graph6(&g),
                    args.r,
                    res.value,
                    res.mode
                ),
            )?,
        }
    }
    Ok(Outcome::Ok)
}

pub fn extremal<W: Write>(global: &Global, args: &ExtremalArgs, out: &mut W) -> Result<Outcome> {
    let forbidden = parse_graph6(args.forbid.as_bytes())?;
    let objective: Objective = args.objective.parse()?;
    let rec = extremal_search(args.n, &forbidden, objective, args.corpus.as_deref(), &pconfig(global))?;
    match global.format {
        Format::Json => write_line(out, &rec.to_json_line())?,
        Format::Text => {
            write_line(
                out,
                &format!(
                    "n={} forbid={} objective={} best={} classes={} unique={} scanned={}",
                    rec.n,
                    rec.forbidden,
                    rec.objective,
                    quantity_text(&Some(rec.best_value.clone())),
                    rec.extremal_classes.len(),
                    rec.unique,
                    rec.classes_scanned
                ),
            )?;
            for c in &rec.extremal_classes {
                write_line(out, &format!("  {c}"))?;
            }
        }
    }
    Ok(Outcome::Ok)
}

pub fn scan_stability<W: Write>(global: &Global, args: &StabilityArgs, out: &mut W) -> Result<Outcome> {
    let forbidden = parse_graph6(args.forbid.as_bytes())?;
    let kind: DeficitKind = args.deficit.parse()?;
    let points = stability_scan(args.n, &forbidden, args.r, kind, args.corpus.as_deref(), global.seed)?;
    if global.format == Format::Text {
        write_line(out, "graph6        deficit        edit  D_r")?;
    }
    for p in points {
        match global.format {
            Format::Json => write_line(out, &p.to_json_line())?,
            Format::Text => write_line(
                out,
                &format!(
                    "{:<13} {:<14} {:<5} {}{}",
                    p.graph6,
                    quantity_text(&Some(p.deficit.clone())),
                    p.edit_distance,
                    p.dr_value,
                    if p.exact { "" } else { " (heuristic)" }
                ),
            )?,
        }
    }
    Ok(Outcome::Ok)
}

pub fn alpha_extremal<W: Write>(global: &Global, args: &AlphaArgs, out: &mut W) -> Result<Outcome> {
    let recs = a_alpha_extremal_search(args.n, args.r, &args.alpha, args.corpus.as_deref())?;
    for rec in recs {
        match global.format {
            Format::Json => write_record(out, &rec)?,
            Format::Text => write_line(
                out,
                &format!(
                    "alpha={} best={} classes={} matches={}",
                    rec.alpha,
                    quantity_text(&Some(rec.record.best_value.clone())),
                    rec.record.extremal_classes.join(","),
                    rec.matches
                ),
            )?,
        }
    }
    Ok(Outcome::Ok)
}

pub fn enumerate<W: Write>(_global: &Global, args: &EnumerateArgs, out: &mut W) -> Result<Outcome> {
    let graphs = match &args.forbid {
        Some(f) => enumerate_free(args.n, &parse_graph6(f.as_bytes())?)?,
        None => all_graphs(args.n)?.to_vec(),
    };
    for g in graphs {
        write_line(out, &emit_graph6(&g))?;
    }
    Ok(Outcome::Ok)
}

pub fn verify_paper<W: Write>(global: &Global, args: &VerifyArgs, out: &mut W) -> Result<Outcome> {
    let level: Level = args.level.parse()?;
    let ids: Vec<usize> = if args.criteria.is_empty() {
        (1..=CRITERIA.len()).collect()
    } else {
        args.criteria.clone()
    };
    let mut failed = false;
    for id in ids {
        let res = match run_criterion(id, level, args.corpus.as_deref()) {
            Ok(res) => res,
            Err(e @ Error::Usage(_)) => return Err(e),
            Err(e) => CriterionResult {
                id,
                name: CRITERIA[id - 1],
                passed: false,
                detail: format!("error: {e}"),
            },
        };
        failed |= !res.passed;
        match global.format {
            Format::Json => write_record(out, &res)?,
            Format::Text => write_line(out, &res.line())?,
        }
        out.flush().map_err(io_err)?;
    }
    Ok(if failed { Outcome::Failed } else { Outcome::Ok })
}
