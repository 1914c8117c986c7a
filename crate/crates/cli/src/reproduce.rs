//! Replays of the published walk displays and closed-form tables.

use std::fmt::Write as _;

use zerotwist::contact::{xi_k_magic_c, xi_k_seifert};
use zerotwist::fullpath::{ends_correctly, full_path_equiv, walk, WalkOptions, WalkStatus};
use zerotwist::invariants::{build_vk, c_plus_verdict, closed_form_grading, CPlusStatus};
use zerotwist::notation::format_grouped;
use zerotwist::plumbing::{standard_graph, CharVector, PlumbingGraph};

use crate::records::{BlockCheck, BranchRecord, ConjugateRow, Lemma6Record, Theorem2Row};
use crate::{CliError, CliResult, Output};

/// How the walk gets from one displayed vector to the next.
#[derive(Clone, Debug)]
enum Move {
    /// Exactly these vertices (1-based), in order.
    Steps(Vec<usize>),
    /// One or more steps, all on the third leg.
    ThirdLeg,
}

impl Move {
    fn label(&self) -> String {
        match self {
            Move::Steps(v) => v
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(","),
            Move::ThirdLeg => "3rd leg".into(),
        }
    }
}

/// Centre, the two short legs, then the third leg as `prefix`, zeros, `suffix`.
fn shown(c: i64, a: [i64; 3], b: [i64; 3], prefix: &[i64], suffix: &[i64], third: usize) -> Vec<i64> {
    let mut v = vec![c];
    v.extend(a);
    v.extend(b);
    let mut leg = prefix.to_vec();
    leg.resize(third - suffix.len(), 0);
    leg.extend_from_slice(suffix);
    v.extend(leg);
    v
}

fn minus_c_display(third: usize) -> Vec<(Move, Vec<i64>)> {
    let s = |c, a, b, p: &[i64], q: &[i64]| shown(c, a, b, p, q, third);
    vec![
        (Move::Steps(vec![7]), s(2, [1, 1, 0], [-2, 1, -2], &[-2], &[])),
        (Move::Steps(vec![1]), s(-2, [3, 1, 0], [0, 1, -2], &[], &[])),
        (Move::Steps(vec![2, 3, 4]), s(0, [-1, -1, -2], [0, 1, -2], &[], &[])),
    ]
}

fn c_display(third: usize) -> Vec<(Move, Vec<i64>)> {
    let s = |c, a, b, p: &[i64], q: &[i64]| shown(c, a, b, p, q, third);
    let one = || Move::Steps(vec![1]);
    vec![
        (Move::Steps(vec![5, 6]), s(0, [-1, -1, 0], [0, -3, 0], &[2], &[])),
        (Move::ThirdLeg, s(2, [-1, -1, 0], [0, -3, 0], &[], &[-2])),
        (one(), s(-2, [1, -1, 0], [2, -3, 0], &[2], &[-2])),
        (Move::Steps(vec![5]), s(0, [1, -1, 0], [-2, -1, 0], &[2], &[-2])),
        (Move::ThirdLeg, s(2, [1, -1, 0], [-2, -1, 0], &[], &[-2, 0])),
        (one(), s(-2, [3, -1, 0], [0, -1, 0], &[2], &[-2, 0])),
        (Move::Steps(vec![2]), s(0, [-3, 1, 0], [0, -1, 0], &[2], &[-2, 0])),
        (Move::ThirdLeg, s(2, [-3, 1, 0], [0, -1, 0], &[], &[-2, 0, 0])),
        (one(), s(-2, [-1, 1, 0], [2, -1, 0], &[2], &[-2, 0, 0])),
        (Move::Steps(vec![5]), s(0, [-1, 1, 0], [-2, 1, 0], &[2], &[-2, 0, 0])),
        (Move::ThirdLeg, s(2, [-1, 1, 0], [-2, 1, 0], &[], &[-2, 0, 0, 0])),
        (one(), s(-2, [1, 1, 0], [0, 1, 0], &[2], &[-2, 0, 0, 0])),
        (Move::ThirdLeg, s(0, [1, 1, 0], [0, 1, 0], &[], &[-2, 0, 0, 0, 0])),
    ]
}

/// Matches a walk from `start` against the displayed blocks in order. The
/// walk must end well exactly at the last block.
fn replay(start: &CharVector, g: &PlumbingGraph, display: &[(Move, Vec<i64>)]) -> CliResult<BranchRecord> {
    let r = walk(start, g, WalkOptions::default())?;
    let third = g.leg_range(2);
    let on_third = |v: usize| third.contains(&(v - 1));
    let mut blocks = Vec::new();
    let mut at = 0;
    let mut lost = false;
    for (mv, expected) in display {
        let mut found = false;
        if !lost {
            match mv {
                Move::Steps(vs) => {
                    let end = at + vs.len();
                    if end <= r.trace.len()
                        && r.trace[at..end].iter().map(|s| s.vertex + 1).eq(vs.iter().copied())
                        && r.trace[end - 1].vector.coords() == expected.as_slice()
                    {
                        found = true;
                        at = end;
                    }
                }
                Move::ThirdLeg => {
                    let mut i = at;
                    while i < r.trace.len() && on_third(r.trace[i].vertex + 1) {
                        if r.trace[i].vector.coords() == expected.as_slice() {
                            found = true;
                            break;
                        }
                        i += 1;
                    }
                    if found {
                        at = i + 1;
                    }
                }
            }
        }
        lost |= !found;
        blocks.push(BlockCheck {
            label: mv.label(),
            expected: expected.clone(),
            found,
        });
    }
    let pass = !lost && at == r.trace.len() && r.status == WalkStatus::EndsWell;
    Ok(BranchRecord {
        start: start.coords().to_vec(),
        status: r.status,
        steps: r.steps,
        blocks,
        pass,
    })
}

fn branch_text(name: &str, b: &BranchRecord, g: &PlumbingGraph, out: &mut String) {
    writeln!(out, "{name}  {}", format_grouped(&b.start, g)).unwrap();
    for blk in &b.blocks {
        let mark = if blk.found { "ok  " } else { "DIFF" };
        writeln!(out, "  {mark} →{:<8} {}", blk.label, format_grouped(&blk.expected, g)).unwrap();
    }
    writeln!(
        out,
        "  {} after {} steps: {}",
        b.status,
        b.steps,
        if b.pass { "PASS" } else { "FAIL" }
    )
    .unwrap();
}

pub fn lemma6(k: i64) -> CliResult<(Output, bool)> {
    if k > 98 {
        return Err(CliError::Domain(format!("lemma6 needs k <= 98, got {k}")));
    }
    let data = xi_k_seifert(k)?;
    let g = standard_graph(&data.dual())?;
    let third = g.legs()[2].len();
    let c = CharVector::new(xi_k_magic_c(k), &g)?;
    let minus_c = replay(&-&c, &g, &minus_c_display(third))?;
    let plus = replay(&c, &g, &c_display(third))?;
    let pass = minus_c.pass && plus.pass;
    let mut text = String::new();
    writeln!(text, "k = {k}, G* = {}", data.dual()).unwrap();
    branch_text("-C_k", &minus_c, &g, &mut text);
    branch_text(" C_k", &plus, &g, &mut text);
    writeln!(text, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    let record = Lemma6Record {
        k,
        minus_c,
        c: plus,
        pass,
    };
    Ok((
        Output {
            text,
            json: serde_json::to_string_pretty(&record).unwrap(),
        },
        pass,
    ))
}

pub fn theorem2_table(lo: i64, hi: i64) -> CliResult<(Output, bool)> {
    if lo < 1 || hi > 35 {
        return Err(CliError::Domain(format!(
            "theorem2-table covers 1..35, got {lo}..{hi}"
        )));
    }
    let gap = zerotwist::fullpath::GradingValue::from_ratio(-15, 2);
    let mut rows = Vec::new();
    for k in lo..=hi {
        let verdict = c_plus_verdict(k)?;
        let m = verdict.bound_chain[0].value.clone();
        let term = verdict.bound_chain[2].value.clone();
        let closed = closed_form_grading(k)?;
        let g = standard_graph(&xi_k_seifert(k)?)?;
        let vk_ok = ends_correctly(&build_vk(k)?, &g)?;
        let matches = m == closed;
        let below = m < gap;
        let gap_below = gap < term;
        rows.push(Theorem2Row {
            k,
            m_c: m.to_string(),
            closed_form: closed.to_string(),
            matches_closed_form: matches,
            below_gap: below,
            chain_term: term.to_string(),
            gap_below_chain_term: gap_below,
            v_k_ends_correctly: vk_ok,
            status: verdict.status,
            pass: matches
                && below
                && gap_below
                && vk_ok
                && verdict.status == CPlusStatus::ZeroByGradingGap,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    let mut text = String::new();
    writeln!(
        text,
        "{:>3}  {:>14}  {:>14}  {:>5}  {:>6}  {:>14}  {:>6}  {:>4}  verdict",
        "k", "M(C_k)", "closed form", "same", "<-15/2", "chain term", ">-15/2", "V_k"
    )
    .unwrap();
    for r in &rows {
        writeln!(
            text,
            "{:>3}  {:>14}  {:>14}  {:>5}  {:>6}  {:>14}  {:>6}  {:>4}  {}",
            r.k,
            r.m_c,
            r.closed_form,
            r.matches_closed_form,
            r.below_gap,
            r.chain_term,
            r.gap_below_chain_term,
            r.v_k_ends_correctly,
            if r.pass { "OK" } else { "FAIL" }
        )
        .unwrap();
    }
    writeln!(text, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    Ok((
        Output {
            text,
            json: serde_json::to_string_pretty(&rows).unwrap(),
        },
        pass,
    ))
}

pub fn conjugates(ks: &[i64]) -> CliResult<(Output, bool)> {
    let mut rows = Vec::new();
    for &k in ks {
        let g = standard_graph(&xi_k_seifert(k)?.dual())?;
        let c = CharVector::new(xi_k_magic_c(k), &g)?;
        rows.push(ConjugateRow {
            k,
            distinct: !full_path_equiv(&c, &-&c, &g)?,
        });
    }
    let pass = rows.iter().all(|r| r.distinct);
    let mut text = String::new();
    for r in &rows {
        writeln!(
            text,
            "k = {:>3}  {}",
            r.k,
            if r.distinct { "DISTINCT" } else { "SAME" }
        )
        .unwrap();
    }
    Ok((
        Output {
            text,
            json: serde_json::to_string_pretty(&rows).unwrap(),
        },
        pass,
    ))
}
