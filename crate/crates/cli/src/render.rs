use clifftwist_core::forms::{Family, TableRow};
use clifftwist_core::groups::GroupLattice;
use clifftwist_core::spinors::CliData;
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::verify::SignatureReport;

/// JSON shape of a data record; field order is the output key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClidataJson {
    pub field: String,
    pub dim: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub idempotent: String,
    #[serde(rename = "spinor_basis_R")]
    pub spinor_basis_r: Vec<String>,
    pub k_basis: Vec<String>,
    #[serde(rename = "spinor_basis_K")]
    pub spinor_basis_k: Vec<String>,
}

impl ClidataJson {
    pub fn from_data(cd: &CliData) -> Self {
        ClidataJson {
            field: cd.field_name().to_string(),
            dim: cd.n,
            kind: cd.type_name().to_string(),
            idempotent: cd.idempotent.value().to_string(),
            spinor_basis_r: cd.render_list(&cd.data5),
            k_basis: cd.render_list(&cd.data6),
            spinor_basis_k: cd.render_list(&cd.data7),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn bracket(list: &[String]) -> String {
    format!("[{}]", list.join(", "))
}

pub fn clidata(cd: &CliData, format: Format) -> String {
    let j = ClidataJson::from_data(cd);
    match format {
        Format::Text => format!("{cd}\n"),
        Format::Json => j.to_json(),
        Format::Markdown => {
            let mut out = format!("### {}\n\n| entry | value |\n|---|---|\n", cd.sig);
            for (k, v) in [
                ("field", j.field.clone()),
                ("dim", j.dim.to_string()),
                ("type", j.kind.clone()),
                ("idempotent", j.idempotent.clone()),
                ("spinor_basis_R", bracket(&j.spinor_basis_r)),
                ("k_basis", bracket(&j.k_basis)),
                ("spinor_basis_K", bracket(&j.spinor_basis_k)),
            ] {
                out += &format!("| {k} | {v} |\n");
            }
            out
        }
        Format::Csv => csv_string(
            &["p", "q", "field", "dim", "type", "idempotent", "spinor_basis_R", "k_basis", "spinor_basis_K"],
            &[vec![
                cd.sig.p().to_string(),
                cd.sig.q().to_string(),
                j.field,
                j.dim.to_string(),
                j.kind,
                j.idempotent,
                j.spinor_basis_r.join(";"),
                j.k_basis.join(";"),
                j.spinor_basis_k.join(";"),
            ]],
        ),
    }
}

#[derive(Debug, Serialize)]
struct GroupJson {
    name: &'static str,
    order: usize,
    elements: Vec<String>,
}

#[derive(Debug, Serialize)]
struct TransversalJson {
    quotient: &'static str,
    key: &'static str,
    representatives: Vec<String>,
}

#[derive(Debug, Serialize)]
struct GroupsJson {
    p: u32,
    q: u32,
    idempotent: String,
    groups: Vec<GroupJson>,
    transversals: Vec<TransversalJson>,
}

pub fn groups(cd: &CliData, lat: &GroupLattice, format: Format) -> String {
    let n = cd.sig.n();
    let elements = |g: &clifftwist_core::groups::GroupSubset| -> Vec<String> {
        g.elements().map(|e| e.render(n)).collect()
    };
    let groups = [
        ("G", &lat.vee),
        ("G(f)", &lat.stabilizer),
        ("T(f)", &lat.idempotent_group),
        ("K(f)", &lat.field_group),
        ("G'", &lat.commutator),
    ];
    let transversals = [
        ("G/G(f)", "spinor_basis_K", cd.render_list(&cd.data7)),
        ("G(f)/T(f)", "k_basis", cd.render_list(&cd.data6)),
        ("G/T(f)", "spinor_basis_R", cd.render_list(&cd.data5)),
    ];
    match format {
        Format::Json => {
            let j = GroupsJson {
                p: cd.sig.p(),
                q: cd.sig.q(),
                idempotent: cd.idempotent.value().to_string(),
                groups: groups
                    .iter()
                    .map(|(name, g)| GroupJson {
                        name,
                        order: g.order(),
                        elements: elements(g),
                    })
                    .collect(),
                transversals: transversals
                    .iter()
                    .map(|(quotient, key, reps)| TransversalJson {
                        quotient,
                        key,
                        representatives: reps.clone(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&j).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = format!("{}, f = {}\n", cd.sig, cd.idempotent.value());
            for (name, g) in &groups {
                out += &format!("{name:<5} order {:<5} {}\n", g.order(), g.render());
            }
            for (quotient, key, reps) in &transversals {
                out += &format!("{quotient:<10} -> {} ({key})\n", bracket(reps));
            }
            out
        }
        Format::Markdown => {
            let mut out = format!("### {}, f = {}\n\n| group | order | elements |\n|---|---|---|\n", cd.sig, cd.idempotent.value());
            for (name, g) in &groups {
                out += &format!("| {name} | {} | {} |\n", g.order(), g.render());
            }
            out += "\n| quotient | transversal | key |\n|---|---|---|\n";
            for (quotient, key, reps) in &transversals {
                out += &format!("| {quotient} | {} | {key} |\n", bracket(reps));
            }
            out
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = groups
                .iter()
                .map(|(name, g)| vec![name.to_string(), g.order().to_string(), elements(g).join(";")])
                .collect();
            rows.extend(
                transversals
                    .iter()
                    .map(|(quotient, _, reps)| vec![quotient.to_string(), reps.len().to_string(), reps.join(";")]),
            );
            csv_string(&["set", "size", "elements"], &rows)
        }
    }
}

pub fn verify(reports: &[SignatureReport], format: Format, verbose: bool) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("serializable") + "\n",
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| {
                        vec![r.p.to_string(), r.q.to_string(), c.name.clone(), c.passed.to_string(), c.detail.clone()]
                    })
                })
                .collect();
            csv_string(&["p", "q", "check", "passed", "detail"], &rows)
        }
        Format::Text | Format::Markdown => {
            let md = format == Format::Markdown;
            let mut out = String::new();
            if md {
                out += "| p | q | result | clauses | failed checks |\n|---|---|---|---|---|\n";
            }
            let single = reports.len() == 1;
            for r in reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                if md {
                    out += &format!(
                        "| {} | {} | {status} | {}/{} | {} |\n",
                        r.p,
                        r.q,
                        r.clauses_passed,
                        r.clauses_total,
                        failed.join(", ")
                    );
                    continue;
                }
                out += &format!(
                    "Cl({},{}): {status}, {}/{} clauses",
                    r.p, r.q, r.clauses_passed, r.clauses_total
                );
                if !failed.is_empty() {
                    out += &format!(", failed: {}", failed.join(", "));
                }
                out += "\n";
                if verbose || single {
                    for c in &r.checks {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        out += &format!("  {mark} {:<22} {}\n", c.name, c.detail);
                    }
                    for n in &r.notes {
                        out += &format!("  note: {n}\n");
                    }
                }
            }
            if !single {
                let passed = reports.iter().filter(|r| r.passed).count();
                let line = format!("{passed}/{} signatures passed\n", reports.len());
                out += &if md { format!("\n{line}") } else { line };
            }
            out
        }
    }
}

#[derive(Debug, Serialize)]
struct RowJson {
    p: u32,
    q: u32,
    k: usize,
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "KClass")]
    class: &'static str,
    product: &'static str,
    group: String,
    nonstandard: bool,
    alias: Option<String>,
    coincides_with: Vec<&'static str>,
}

fn annotated(r: &TableRow) -> String {
    let mut notes = Vec::new();
    if let Some(a) = &r.group.alias {
        notes.push(format!("Lounesto: {a}"));
    }
    if r.group.nonstandard {
        notes.push("nonstandard involution".to_string());
    }
    if notes.is_empty() {
        r.group.render()
    } else {
        format!("{} ({})", r.group.render(), notes.join("; "))
    }
}

pub fn tables(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Csv => csv_string(
            &["p", "q", "k", "N", "KClass", "group", "coincides_with"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.p.to_string(),
                        r.q.to_string(),
                        r.k.to_string(),
                        r.n.to_string(),
                        r.class.label().to_string(),
                        r.group.render(),
                        r.coincides_label(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Json => {
            let j: Vec<RowJson> = rows
                .iter()
                .map(|r| RowJson {
                    p: r.p,
                    q: r.q,
                    k: r.k,
                    n: r.n,
                    class: r.class.label(),
                    product: r.product.as_str(),
                    group: r.group.render(),
                    nonstandard: r.group.nonstandard,
                    alias: r.group.alias.clone(),
                    coincides_with: r.coincides_with.iter().map(|k| k.as_str()).collect(),
                })
                .collect();
            serde_json::to_string_pretty(&j).expect("serializable") + "\n"
        }
        Format::Markdown => {
            let mut out = String::new();
            let product = rows.first().map(|r| r.product.symbol()).unwrap_or("");
            for family in Family::ALL {
                let members: Vec<&TableRow> = rows.iter().filter(|r| r.family() == family).collect();
                if members.is_empty() {
                    continue;
                }
                out += &format!(
                    "## {}\n\nAutomorphism group of {product}\n\n| (p,q) | k | N | group | coincides with |\n|---|---|---|---|---|\n",
                    family.title()
                );
                for r in members {
                    out += &format!("| ({},{}) | {} | {} | {} | {} |\n", r.p, r.q, r.k, r.n, annotated(r), r.coincides_label());
                }
                out += "\n";
            }
            out
        }
        Format::Text => {
            let mut out = format!("{:<7} {:>2} {:>3} {:<3} {:<36} {}\n", "(p,q)", "k", "N", "K", "group", "coincides_with");
            for r in rows {
                out += &format!(
                    "{:<7} {:>2} {:>3} {:<3} {:<36} {}\n",
                    format!("({},{})", r.p, r.q),
                    r.k,
                    r.n,
                    r.class.label(),
                    annotated(r),
                    r.coincides_label()
                );
            }
            out
        }
    }
}
