//! Commands behind the `zerotwist` binary and the JSON records they emit.

pub mod records;
pub mod reproduce;

use std::fmt::Write as _;

use zerotwist::contact::{xi_k_candidate, xi_k_seifert, StructureCandidate};
use zerotwist::embedding::Embedding;
use zerotwist::fullpath::{ends_correctly, walk, WalkOptions, WalkResult};
use zerotwist::invariants::{classify_tight, full_report, LSpaceAttestation};
use zerotwist::notation::{format_flat, format_grouped, parse_groups, parse_vector};
use zerotwist::plumbing::{standard_graph, CharVector, PlumbingGraph, SeifertData};
use zerotwist::Error;

use records::*;

/// Failure of a command, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::ZeroDenominator
            | Error::RatioOutOfRange(_)
            | Error::NoRatios
            | Error::LengthMismatch { .. }
            | Error::NotCharacteristic { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered output: text for humans, JSON for machines.
pub struct Output {
    pub text: String,
    pub json: String,
}

fn to_json<T: serde::Serialize>(record: &T) -> String {
    serde_json::to_string_pretty(record).expect("records serialise")
}

pub fn parse_seifert(s: &str) -> CliResult<SeifertData> {
    s.parse::<SeifertData>().map_err(CliError::from)
}

/// `A..B`, inclusive at both ends.
pub fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let bad = || CliError::Usage(format!("bad range {s:?}, expected A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn matrix_text(g: &PlumbingGraph) -> String {
    g.intersection_matrix().to_string()
}

pub fn cmd_graph(data: &SeifertData, dual: bool) -> CliResult<Output> {
    let data = if dual { data.dual() } else { data.clone() };
    let g = standard_graph(&data)?;
    let record = GraphRecord {
        seifert: data.clone(),
        graph: g.clone(),
        matrix: g.intersection_matrix().to_rows(),
        determinant: g.determinant().to_string(),
        negative_definite: g.is_negative_definite(),
        bad_vertices: g.count_bad_vertices(),
    };
    let mut text = String::new();
    writeln!(text, "seifert            {data}").unwrap();
    writeln!(text, "centre             {}", g.center()).unwrap();
    for (i, leg) in g.legs().iter().enumerate() {
        writeln!(text, "leg {}              {}", i + 1, format_flat(leg)).unwrap();
    }
    writeln!(text, "vertices           {}", g.vertex_count()).unwrap();
    writeln!(text, "determinant        {}", record.determinant).unwrap();
    writeln!(text, "negative definite  {}", record.negative_definite).unwrap();
    writeln!(text, "bad vertices       {}", record.bad_vertices).unwrap();
    writeln!(text, "intersection matrix").unwrap();
    text.push_str(&matrix_text(&g));
    Ok(Output {
        text,
        json: to_json(&record),
    })
}

pub fn cmd_dual(data: &SeifertData) -> CliResult<Output> {
    let dual = data.dual();
    let record = DualRecord {
        seifert: data.clone(),
        dual: dual.clone(),
        graph: standard_graph(&dual)?,
    };
    let text = format!("{dual}\n");
    Ok(Output {
        text,
        json: to_json(&record),
    })
}

fn trace_text(start: &CharVector, r: &WalkResult, g: &PlumbingGraph, out: &mut String) {
    writeln!(out, "        {}", format_grouped(start.coords(), g)).unwrap();
    for s in &r.trace {
        let label = format!("→{}", s.vertex + 1);
        writeln!(out, "{label:<7} {}", format_grouped(s.vector.coords(), g)).unwrap();
    }
}

fn walk_record(start: &CharVector, r: &WalkResult, with_trace: bool) -> WalkRecord {
    WalkRecord {
        start: start.coords().to_vec(),
        status: r.status,
        terminal: r.terminal.coords().to_vec(),
        steps: r.steps,
        trace: with_trace.then(|| {
            r.trace
                .iter()
                .map(|s| StepRecord {
                    vertex: s.vertex + 1,
                    vector: s.vector.coords().to_vec(),
                })
                .collect()
        }),
    }
}

pub struct FullPathArgs<'a> {
    pub data: &'a SeifertData,
    pub dual: bool,
    pub vector: &'a str,
    pub trace: bool,
    pub both_ends: bool,
    pub cap: usize,
}

pub fn cmd_fullpath(args: FullPathArgs<'_>) -> CliResult<Output> {
    let data = if args.dual {
        args.data.dual()
    } else {
        args.data.clone()
    };
    let g = standard_graph(&data)?;
    let v = CharVector::new(parse_vector(args.vector, &g)?, &g)?;
    let opts = WalkOptions {
        cap: args.cap,
        record_trace: args.trace,
        ..WalkOptions::default()
    };
    let mut text = String::new();
    writeln!(text, "graph   {data}").unwrap();
    writeln!(text, "vector  {}", format_grouped(v.coords(), &g)).unwrap();
    writeln!(text, "flat    {}", format_flat(v.coords())).unwrap();

    let forward = walk(&v, &g, opts)?;
    if args.trace {
        trace_text(&v, &forward, &g, &mut text);
    }
    writeln!(
        text,
        "status  {} after {} steps at {}",
        forward.status,
        forward.steps,
        format_grouped(forward.terminal.coords(), &g)
    )
    .unwrap();

    let backward = if args.both_ends {
        let neg = -&v;
        let r = walk(&neg, &g, opts)?;
        if args.trace {
            writeln!(text, "negated").unwrap();
            trace_text(&neg, &r, &g, &mut text);
        }
        writeln!(
            text,
            "status  {} after {} steps at {} (negated)",
            r.status,
            r.steps,
            format_grouped(r.terminal.coords(), &g)
        )
        .unwrap();
        Some(walk_record(&neg, &r, args.trace))
    } else {
        None
    };
    let ends_correctly = backward.as_ref().map(|b| {
        forward.status == zerotwist::fullpath::WalkStatus::EndsWell
            && b.status == zerotwist::fullpath::WalkStatus::EndsWell
    });
    if let Some(ok) = ends_correctly {
        writeln!(text, "ends correctly  {ok}").unwrap();
    }
    let record = FullPathRecord {
        seifert: data,
        forward: walk_record(&v, &forward, args.trace),
        negated: backward,
        ends_correctly,
    };
    Ok(Output {
        text,
        json: to_json(&record),
    })
}

/// Rotation vector on `G` in grouped notation, leading 1 included.
pub fn parse_candidate(data: &SeifertData, rotations: &str) -> CliResult<StructureCandidate> {
    let g = standard_graph(data)?;
    if parse_groups(rotations)?.len() == 1 {
        return Err(CliError::Usage(
            "rotation vector must be grouped with '|'".into(),
        ));
    }
    let k = parse_vector(rotations, &g)?;
    Ok(StructureCandidate::from_k_vector(data.clone(), &k)?)
}

pub fn cmd_magic_c(candidate: &StructureCandidate) -> CliResult<Output> {
    let emb = Embedding::new(candidate.data())?;
    let mc = emb.magic_c(candidate.k_vector())?;
    let ok = ends_correctly(&mc, emb.dual_graph())?;
    let g = emb.graph();
    let gs = emb.dual_graph();
    let mut text = String::new();
    writeln!(text, "seifert         {}", candidate.data()).unwrap();
    writeln!(text, "rotations       {}", format_grouped(candidate.k_vector().coords(), g)).unwrap();
    writeln!(text, "magic C         {}", format_grouped(mc.coords(), gs)).unwrap();
    writeln!(text, "flat            {}", format_flat(mc.coords())).unwrap();
    writeln!(text, "ends correctly  {ok}").unwrap();
    let record = MagicCRecord {
        candidate: candidate.clone(),
        k_vector: candidate.k_vector().coords().to_vec(),
        magic_c: mc.into_coords(),
        ends_correctly: ok,
    };
    Ok(Output {
        text,
        json: to_json(&record),
    })
}

pub fn cmd_classify(data: &SeifertData, attest: bool) -> CliResult<Output> {
    let attestation = if attest {
        LSpaceAttestation::Attested
    } else {
        LSpaceAttestation::for_data(data)
    };
    let classes = classify_tight(data, attestation)?;
    let gs = standard_graph(&data.dual())?;
    let g = standard_graph(data)?;
    let mut text = String::new();
    writeln!(text, "seifert  {data}").unwrap();
    writeln!(
        text,
        "{} tight candidates in {} full-path classes",
        classes.iter().map(|c| c.count).sum::<usize>(),
        classes.len()
    )
    .unwrap();
    for (i, c) in classes.iter().enumerate() {
        let conj = c
            .conjugate_of
            .map_or("-".to_string(), |j| j.to_string());
        writeln!(
            text,
            "{i:>3}  count {:>3}  spinc {:>3}  conjugate {:>3}  rotations {}  C {}",
            c.count,
            c.spinc_id,
            conj,
            format_grouped(c.representative.k_vector().coords(), &g),
            format_grouped(c.magic_c.coords(), &gs)
        )
        .unwrap();
    }
    let record = ClassifyRecord {
        seifert: data.clone(),
        classes: classes
            .into_iter()
            .map(|c| ClassRecord {
                representative: c.representative,
                magic_c: c.magic_c.into_coords(),
                count: c.count,
                spinc_id: c.spinc_id,
                conjugate_of: c.conjugate_of,
            })
            .collect(),
    };
    Ok(Output {
        text,
        json: to_json(&record),
    })
}

pub fn cmd_report(candidate: &StructureCandidate) -> CliResult<Output> {
    let report = full_report(candidate)?;
    let mut text = String::new();
    writeln!(text, "seifert                 {}", candidate.data()).unwrap();
    writeln!(text, "c-hat nonzero           {}", report.c_hat_nonzero).unwrap();
    writeln!(text, "c-plus                  {}", report.c_plus_status).unwrap();
    match &report.grading_of_c {
        Some(v) => writeln!(text, "grading of C            {v}").unwrap(),
        None => writeln!(text, "grading of C            -").unwrap(),
    }
    for b in &report.bound_chain {
        writeln!(text, "  {:<30} {}", b.label, b.value).unwrap();
    }
    writeln!(text, "fillability obstructed  {}", report.fillability_obstructed).unwrap();
    writeln!(text, "[C] != [-C]             {}", report.conjugate_distinct).unwrap();
    for n in &report.notes {
        writeln!(text, "note: {n}").unwrap();
    }
    let record = ReportRecord {
        candidate: candidate.clone(),
        report,
    };
    Ok(Output {
        text,
        json: to_json(&record),
    })
}

/// `ξ_k` as a candidate, for `--k`.
pub fn xi_k(k: i64) -> CliResult<StructureCandidate> {
    Ok(xi_k_candidate(k)?)
}

pub fn xi_k_data(k: i64) -> CliResult<SeifertData> {
    Ok(xi_k_seifert(k)?)
}
