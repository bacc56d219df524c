use symbol_calculus::decomp::Leaf;
use symbol_calculus::verify::{AllReport, Prop12Report};
use symbol_calculus::{
    ClosureReport, CountRow, Decomposition, ExceptionalDelta, Family, FiberMarker, OrbitLabel, SpringerSet,
    SymbolPair, TauMap,
};

use crate::table::{seq_cell, Table};
use crate::{json, Format};

fn marker(m: Option<FiberMarker>) -> &'static str {
    match m {
        Some(FiberMarker::I) => "I",
        Some(FiberMarker::II) => "II",
        None => "",
    }
}

fn tabular(t: &Table, format: Format) -> String {
    match format {
        Format::Csv => t.to_csv(),
        _ => t.to_text(),
    }
}

pub fn pairs(pairs: &[SymbolPair], format: Format) -> String {
    if format == Format::Json {
        return json(&pairs);
    }
    let mut t = Table::new(&["n", "k", "a", "a_prime"]);
    for p in pairs {
        t.row(vec![p.size().to_string(), p.k().to_string(), seq_cell(p.a()), seq_cell(p.a_prime())]);
    }
    tabular(&t, format)
}

pub fn membership(p: &SymbolPair, family: Family, is_member: bool, format: Format) -> String {
    match format {
        Format::Json => json(&serde_json::json!({ "pair": p, "family": family, "member": is_member })),
        Format::Csv => format!("family,member\n{family},{is_member}\n"),
        Format::Text => format!("{is_member}\n"),
    }
}

pub fn decomposition(d: &Decomposition, format: Format) -> String {
    match (format, d) {
        (Format::Json, _) => json(d),
        (Format::Csv, Decomposition::Terminal) => {
            "kind,proof_case,m,m_prime,left_a,left_a_prime,right_a,right_a_prime\nterminal,,,,,,,\n".to_string()
        }
        (Format::Csv, Decomposition::Split { split, proof_case }) => {
            format!(
                "kind,proof_case,m,m_prime,left_a,left_a_prime,right_a,right_a_prime\nsplit,{},{},{},{},{},{},{}\n",
                proof_case.tag(),
                split.m,
                split.m_prime,
                seq_cell(split.left.a()),
                seq_cell(split.left.a_prime()),
                seq_cell(split.right.a()),
                seq_cell(split.right.a_prime()),
            )
        }
        (Format::Text, Decomposition::Terminal) => "terminal\n".to_string(),
        (Format::Text, Decomposition::Split { split, proof_case }) => format!(
            "split [{}] m={} m'={}\n  left  {}\n  right {}\n",
            proof_case.tag(),
            split.m, split.m_prime, split.left, split.right
        ),
    }
}

pub fn leaves(leaves: &[Leaf], format: Format) -> String {
    if format == Format::Json {
        return json(&leaves);
    }
    let mut t = Table::new(&["index", "series", "family", "role", "a", "a_prime"]);
    for (i, l) in leaves.iter().enumerate() {
        let role = serde_json::to_value(l.role).expect("serializes");
        t.row(vec![
            i.to_string(),
            l.series.to_string(),
            l.family.to_string(),
            role.as_str().unwrap_or_default().to_string(),
            seq_cell(l.pair.a()),
            seq_cell(l.pair.a_prime()),
        ]);
    }
    tabular(&t, format)
}

fn pass_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

pub fn closure(r: &ClosureReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => format!("rule,max_n,pass,checked\n{},{},{},{}\n", r.rule, r.max_n, r.pass, r.checked),
        Format::Text => match &r.counterexample {
            None => "pass\n".to_string(),
            Some((x, y)) => format!("fail\n  {x} + {y} is not in {}\n", r.rule.target),
        },
    }
}

pub fn prop12(r: &Prop12Report, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => format!(
            "series,max_n,pass,checked,terminal,split,terminal_with_split\n{},{},{},{},{},{},{}\n",
            r.series, r.max_n, r.pass, r.checked, r.terminal, r.split, r.terminal_with_split
        ),
        Format::Text => {
            let mut s = format!(
                "{}\n  series {}  max-n {}  checks {}  terminal {}  split {}  terminal-with-split {}\n",
                pass_word(r.pass),
                r.series,
                r.max_n,
                r.checked,
                r.terminal,
                r.split,
                r.terminal_with_split
            );
            for f in &r.failures {
                s.push_str(&format!("  {f}\n"));
            }
            s
        }
    }
}

pub fn all(r: &AllReport, format: Format) -> String {
    if format == Format::Json {
        return json(r);
    }
    let mut t = Table::new(&["suite", "pass", "checked"]);
    for s in &r.suites {
        t.row(vec![s.name.replace(' ', "_"), s.pass.to_string(), s.checked.to_string()]);
    }
    let mut out = tabular(&t, format);
    if format == Format::Text {
        for s in &r.suites {
            for f in &s.failures {
                out.push_str(&format!("{}: {f}\n", s.name));
            }
        }
        out.push_str(pass_word(r.pass));
        out.push('\n');
    }
    out
}

fn label_row(l: &OrbitLabel) -> Vec<String> {
    vec![
        l.series.to_string(),
        l.n.to_string(),
        marker(l.split).to_string(),
        seq_cell(l.pair.a()),
        seq_cell(l.pair.a_prime()),
    ]
}

pub fn springer(set: &SpringerSet, format: Format) -> String {
    if format == Format::Json {
        return json(set);
    }
    let mut t = Table::new(&["series", "n", "split", "a", "a_prime"]);
    for l in &set.labels {
        t.row(label_row(l));
    }
    tabular(&t, format)
}

pub fn tau(map: &TauMap, format: Format) -> String {
    if format == Format::Json {
        return json(map);
    }
    let mut t = Table::new(&["series", "n", "split", "a", "a_prime", "hit"]);
    let mut all: Vec<(&OrbitLabel, bool)> = map.mapping.iter().map(|(_, to)| (to, true)).collect();
    all.extend(map.unhit.iter().map(|l| (l, false)));
    all.sort();
    for (l, hit) in all {
        let mut row = label_row(l);
        row.push(hit.to_string());
        t.row(row);
    }
    tabular(&t, format)
}

pub fn counts(rows: &[CountRow], format: Format) -> String {
    if format == Format::Json {
        return json(&rows);
    }
    let mut t = Table::new(&["series", "n", "card_group", "card_algebra", "difference"]);
    for r in rows {
        t.row(vec![
            r.series.to_string(),
            r.n.to_string(),
            r.card_group.to_string(),
            r.card_algebra.to_string(),
            r.difference.to_string(),
        ]);
    }
    tabular(&t, format)
}

pub fn exceptional(d: &ExceptionalDelta, format: Format) -> String {
    if format == Format::Json {
        return json(d);
    }
    let mut t = Table::new(&["type", "p", "name", "b_value"]);
    for e in &d.added {
        t.row(vec![d.group_type.to_string(), d.p.to_string(), e.name.clone(), e.b_value.to_string()]);
    }
    let mut out = tabular(&t, format);
    if format == Format::Text && d.added.is_empty() {
        out.push_str("(no algebra-only representations: the two sets coincide)\n");
    }
    out
}
