//! Text, CSV and JSON renderings of command results.

use std::fmt::Write as _;

use anyhow::Result;
use gapset_core::admissibility::CriterionReport;
use gapset_core::{
    compact_form, tau, CountTable, Gapset, InjectionReport, KunzVector, MFiltration,
};
use serde::Serialize;

use crate::config::Format;

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct CountJson<'a> {
    max_genus: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_g: Option<&'a [u64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_prime_g: Option<&'a [u64]>,
    rows: Vec<RowJson<'a>>,
}

#[derive(Serialize)]
struct RowJson<'a> {
    m: u32,
    counts: &'a [u64],
}

/// Full table, one line per genus: `genus,n_g,n_prime_g,m1,m2,...`.
pub fn count_table(table: &CountTable, format: Format) -> Result<String> {
    let max_m = table.max_multiplicity();
    let grid = |m_label: &dyn Fn(u32) -> String, prime: &str| {
        let mut rows = vec![["genus".to_string(), "n_g".into(), prime.into()]
            .into_iter()
            .chain((1..=max_m).map(m_label))
            .collect::<Vec<_>>()];
        for g in 0..=table.max_genus() {
            let mut row = vec![
                g.to_string(),
                table.n_g(g).to_string(),
                table.n_prime(g).to_string(),
            ];
            row.extend((1..=max_m).map(|m| table.n_gm(g, m).unwrap_or(0).to_string()));
            rows.push(row);
        }
        rows
    };
    match format {
        Format::Csv => csv_string(grid(&|m| format!("m{m}"), "n_prime_g")),
        Format::Text => Ok(aligned(&grid(&|m| format!("m={m}"), "n'_g"))),
        Format::Json => json_string(&CountJson {
            max_genus: table.max_genus(),
            n_g: Some(table.totals()),
            n_prime_g: Some(table.generic()),
            rows: (1..=max_m)
                .map(|m| RowJson {
                    m,
                    counts: table.row(m).unwrap_or(&[]),
                })
                .collect(),
        }),
    }
}

/// One row `n_{0,m}, ..., n_{G,m}`.
pub fn count_row(m: u32, row: &[u64], format: Format) -> Result<String> {
    let grid = |label: String| {
        let mut rows = vec![vec!["genus".to_string(), label]];
        rows.extend(
            row.iter()
                .enumerate()
                .map(|(g, n)| vec![g.to_string(), n.to_string()]),
        );
        rows
    };
    match format {
        Format::Csv => csv_string(grid(format!("m{m}"))),
        Format::Text => Ok(aligned(&grid(format!("m={m}")))),
        Format::Json => json_string(&CountJson {
            max_genus: row.len() as u32 - 1,
            n_g: None,
            n_prime_g: None,
            rows: vec![RowJson { m, counts: row }],
        }),
    }
}

#[derive(Serialize)]
struct GapsetJson<'a> {
    gaps: &'a [u32],
    multiplicity: u32,
    frobenius: i64,
    conductor: u32,
}

/// Gapsets of one genus.
pub fn gapsets(list: &[Gapset], format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(list.iter().map(|g| format!("{g}\n")).collect()),
        Format::Csv => csv_string(
            std::iter::once(vec![
                "gaps".into(),
                "multiplicity".into(),
                "frobenius".into(),
            ])
            .chain(list.iter().map(|g| {
                vec![
                    g.to_string(),
                    g.multiplicity().to_string(),
                    g.frobenius().to_string(),
                ]
            })),
        ),
        Format::Json => json_string(
            &list
                .iter()
                .map(|g| GapsetJson {
                    gaps: g.elements(),
                    multiplicity: g.multiplicity(),
                    frobenius: g.frobenius(),
                    conductor: g.conductor(),
                })
                .collect::<Vec<_>>(),
        ),
    }
}

#[derive(Serialize)]
struct FiltrationJson {
    filtration: String,
    compact: String,
    gaps: Vec<u32>,
}

/// Gapset filtrations of one genus and multiplicity.
pub fn filtrations(list: &[MFiltration], format: Format) -> Result<String> {
    let entries = list.iter().map(|f| FiltrationJson {
        filtration: f.to_string(),
        compact: compact_form(f).to_string(),
        gaps: tau(f).elements().to_vec(),
    });
    match format {
        Format::Text => Ok(list.iter().map(|f| format!("{f}\n")).collect()),
        Format::Csv => csv_string(
            std::iter::once(vec!["filtration".into(), "compact".into(), "gaps".into()]).chain(
                entries.map(|e| {
                    let gaps = e
                        .gaps
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    vec![e.filtration, e.compact, gaps]
                }),
            ),
        ),
        Format::Json => json_string(&entries.collect::<Vec<_>>()),
    }
}

#[derive(Serialize)]
struct CriterionJson {
    max_m: u32,
    max_sum: u32,
    forms: u64,
    admissible: u64,
    discrepancies: Vec<String>,
    passed: bool,
}

pub fn criterion(
    report: &CriterionReport,
    max_m: u32,
    max_sum: u32,
    format: Format,
) -> Result<String> {
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    match format {
        Format::Text => Ok(format!(
            "criterion m<={max_m} sum<={max_sum}: {} forms, {} admissible, {} discrepancies: {verdict}\n",
            report.forms_checked,
            report.admissible,
            report.discrepancies.len()
        )),
        Format::Csv => csv_string([
            vec!["max_m".into(), "max_sum".into(), "forms".into(), "admissible".into(), "discrepancies".into(), "result".into()],
            vec![
                max_m.to_string(),
                max_sum.to_string(),
                report.forms_checked.to_string(),
                report.admissible.to_string(),
                report.discrepancies.len().to_string(),
                verdict.into(),
            ],
        ]),
        Format::Json => json_string(&CriterionJson {
            max_m,
            max_sum,
            forms: report.forms_checked,
            admissible: report.admissible,
            discrepancies: report.discrepancies.iter().map(ToString::to_string).collect(),
            passed: report.passed(),
        }),
    }
}

#[derive(Serialize)]
struct InjectionJson {
    m: u32,
    g: u32,
    map: String,
    domain: usize,
    image: usize,
    failures: Vec<String>,
}

impl From<&InjectionReport> for InjectionJson {
    fn from(r: &InjectionReport) -> Self {
        InjectionJson {
            m: r.multiplicity,
            g: r.genus,
            map: r.map_name(),
            domain: r.domain_size,
            image: r.image_size,
            failures: r.failures.iter().map(ToString::to_string).collect(),
        }
    }
}

/// JSON form of one report: `{m, g, map, domain, image, failures}`.
pub fn injection_json(r: &InjectionReport) -> Result<String> {
    Ok(serde_json::to_string(&InjectionJson::from(r))?)
}

pub fn injections(reports: &[InjectionReport], format: Format) -> Result<String> {
    let verdict = |r: &InjectionReport| if r.verified() { "PASS" } else { "FAIL" };
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                writeln!(
                    out,
                    "m={} g={} {}: domain {}, image {}, {} failures: {}",
                    r.multiplicity,
                    r.genus,
                    r.map_name(),
                    r.domain_size,
                    r.image_size,
                    r.failures.len(),
                    verdict(r)
                )?;
            }
            Ok(out)
        }
        Format::Csv => csv_string(
            std::iter::once(
                ["m", "g", "map", "domain", "image", "failures", "result"]
                    .map(String::from)
                    .to_vec(),
            )
            .chain(reports.iter().map(|r| {
                vec![
                    r.multiplicity.to_string(),
                    r.genus.to_string(),
                    r.map_name(),
                    r.domain_size.to_string(),
                    r.image_size.to_string(),
                    r.failures.len().to_string(),
                    verdict(r).into(),
                ]
            })),
        ),
        Format::Json => json_string(&reports.iter().map(InjectionJson::from).collect::<Vec<_>>()),
    }
}

#[derive(Serialize)]
struct KunzJson<'a> {
    m: u32,
    kunz: &'a [u32],
    apery: Vec<u32>,
}

pub fn kunz(k: &KunzVector, format: Format) -> Result<String> {
    let m = k.multiplicity();
    match format {
        Format::Text => Ok(format!("{k}\n")),
        Format::Csv => csv_string([
            std::iter::once("m".to_string())
                .chain((1..m).map(|r| format!("k_{r}")))
                .collect(),
            std::iter::once(m.to_string())
                .chain(k.coordinates().iter().map(u32::to_string))
                .collect(),
        ]),
        Format::Json => json_string(&KunzJson {
            m,
            kunz: k.coordinates(),
            apery: (0..m).map(|r| k.apery(r)).collect(),
        }),
    }
}

/// Lines of a verification summary.
pub fn checks(lines: &[(String, bool)], format: Format) -> Result<String> {
    #[derive(Serialize)]
    struct Line<'a> {
        check: &'a str,
        passed: bool,
    }
    match format {
        Format::Text => Ok(lines
            .iter()
            .map(|(name, ok)| format!("{}: {name}\n", if *ok { "PASS" } else { "FAIL" }))
            .collect()),
        Format::Csv => {
            csv_string(
                std::iter::once(vec!["check".into(), "result".into()]).chain(lines.iter().map(
                    |(name, ok)| vec![name.clone(), if *ok { "PASS" } else { "FAIL" }.into()],
                )),
            )
        }
        Format::Json => json_string(
            &lines
                .iter()
                .map(|(check, passed)| Line {
                    check,
                    passed: *passed,
                })
                .collect::<Vec<_>>(),
        ),
    }
}
