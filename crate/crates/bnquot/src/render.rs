//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::{Dimension, LedgerEntry, Sample, StratumReport, Survey};

pub fn ledger_entry(out: &mut String, e: &LedgerEntry) {
    let _ = writeln!(out, "  [{}] {}", e.id, e.subject);
    if !e.published.is_empty() {
        let _ = writeln!(out, "    published:  {}", e.published);
    }
    let _ = writeln!(out, "    engine:     {}", e.engine);
    if let Some(d) = &e.difference {
        let _ = writeln!(out, "    difference: {d}");
    }
    let _ = writeln!(out, "    note:       {}", e.note);
}

pub fn stratum(r: &StratumReport) -> String {
    let mut out = String::new();
    let p = &r.params;
    let _ = writeln!(
        out,
        "scenario      g={} d={} s={} a={} truncation={}",
        p.genus, p.degree, p.segre, p.a, p.truncation
    );
    let _ = writeln!(
        out,
        "codimension   expected={} expanded={}",
        r.codim.expected, r.codim.expanded
    );
    let k = &r.ranks;
    let _ = writeln!(
        out,
        "ranks         fiber_h0={} source={} target={} large_d_ok={}",
        k.fiber_h0_dim, k.source_rank, k.target_rank, k.large_d_ok
    );
    let _ = writeln!(
        out,
        "euler         chi={} h0_threshold={}",
        k.euler_characteristic, k.h0_threshold
    );
    match r.existence.rule {
        Some(rule) => {
            let _ = writeln!(out, "existence     {} ({rule})", r.existence.status);
        }
        None => {
            let _ = writeln!(out, "existence     {}", r.existence.status);
        }
    }
    if let Some(note) = &r.note {
        let _ = writeln!(out, "note          {note}");
    }
    if let Some(pf) = &r.pushforward {
        let b = &pf.bundle;
        let _ = writeln!(
            out,
            "pushforward   rank={} virtual={}",
            b.rank, b.is_virtual
        );
        for (i, c) in b.chern.iter().enumerate() {
            let _ = writeln!(out, "  c{} = {}", i + 1, c.text);
        }
    }
    if let Some(c) = &r.class {
        let _ = writeln!(
            out,
            "class         codimension={} agree={}",
            c.codimension, c.agree
        );
        let _ = writeln!(out, "  porteous    = {}", c.porteous.text);
        let _ = writeln!(out, "  minus_chern = {}", c.minus_chern.text);
        let _ = writeln!(out, "  difference  = {}", c.difference.text);
        if !c.discrepancies.is_empty() {
            let _ = writeln!(out, "discrepancies");
            for e in &c.discrepancies {
                ledger_entry(&mut out, e);
            }
        }
    }
    out
}

pub fn survey(s: &Survey) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "survey  d={} seed={} trials={}", s.d, s.seed, s.trials);
    for (split, n) in &s.counts.0 {
        let _ = writeln!(out, "  {split}  {n}");
    }
    out
}

pub fn sample(s: &Sample) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sample  d={} seed={}", s.d, s.seed);
    let [b1, b2] = s.kernel.column_degrees;
    let _ = writeln!(
        out,
        "kernel  column degrees ({b1}, {b2}), coefficients of y^e .. x^e"
    );
    for row in &s.kernel.entries {
        let cells: Vec<String> = row.iter().map(|f| format!("[{}]", f.join(", "))).collect();
        let _ = writeln!(out, "  {}", cells.join("  "));
    }
    let _ = writeln!(out, "splitting      {}", s.splitting);
    let _ = writeln!(out, "segre_p1       {}", s.segre_p1);
    let counts: Vec<String> = s
        .twisted_dual_sections
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(out, "h0(E^v(k))     k=0.. {}", counts.join(" "));
    let _ = writeln!(out, "h0(E)          {}", s.h0);
    let _ = writeln!(out, "euler_check    {}", s.euler_check);
    out
}

pub fn dimension(d: &Dimension) -> String {
    format!(
        "stratum  d={} a={}\n  formula 3d+2a+5 = {}\n  lab parameter count = {}\n  agree = {}\n",
        d.d, d.a, d.formula, d.lab, d.agree
    )
}
