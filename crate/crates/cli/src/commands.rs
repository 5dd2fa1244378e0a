//! One function per subcommand. Each returns the rendered output plus a list
//! of problems; any problem means a nonzero exit.

use anyhow::{bail, Context, Result};
use gapset_core::enumeration::{enumerate_compact, TreeNode};
use gapset_core::{kunz_of_semigroup, Gapset};

use crate::config::{Check, Command, Format, RunConfig};
use crate::{emit, golden, parallel};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// Human-readable diff lines for standard error.
    pub problems: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    parallel::with_jobs(cfg.jobs, || dispatch(cfg))?
}

fn dispatch(cfg: &RunConfig) -> Result<Outcome> {
    let format = cfg.format;
    match &cfg.command {
        Command::Count {
            max_genus,
            multiplicity: Some(m),
            ..
        } => count_row(*max_genus, *m, format),
        Command::Count {
            max_genus,
            max_multiplicity,
            ..
        } => count(
            *max_genus,
            max_multiplicity.unwrap_or(max_genus + 1),
            cfg.genus_cap,
            format,
        ),
        Command::Enumerate {
            genus,
            multiplicity,
        } => enumerate(*genus, *multiplicity, cfg.genus_cap, format),
        Command::Verify {
            check: Check::Criterion { max_m, max_sum },
        } => criterion(*max_m, *max_sum, format),
        Command::Verify {
            check:
                Check::Injection {
                    multiplicity,
                    max_genus,
                },
        } => injection(*multiplicity, *max_genus, format),
        Command::Verify {
            check: Check::Golden,
        } => golden_check(cfg.genus_cap, format),
        Command::Kunz { gaps } => kunz(gaps, format),
    }
}

fn count_row(max_genus: u32, m: u32, format: Format) -> Result<Outcome> {
    let row = parallel::compact_rows(&[m], max_genus)?.remove(0);
    let problems = golden::compare_row(m, &row)
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(Outcome {
        output: emit::count_row(m, &row, format)?,
        problems,
    })
}

fn count(max_genus: u32, max_m: u32, genus_cap: u32, format: Format) -> Result<Outcome> {
    let (table, tree) = parallel::count_table(max_genus, max_m, genus_cap)?;
    let mut problems = Vec::new();
    for m in 1..=max_m {
        for g in 0..=max_genus {
            let (a, b) = (tree.n_gm(g, m), table.n_gm(g, m).unwrap_or(0));
            if a != b {
                problems.push(format!(
                    "n_{{{g},{m}}}: semigroup tree gives {a}, compact forms give {b}"
                ));
            }
        }
    }
    problems.extend(golden::compare(&table).iter().map(ToString::to_string));
    Ok(Outcome {
        output: emit::count_table(&table, format)?,
        problems,
    })
}

fn enumerate(
    genus: u32,
    multiplicity: Option<u32>,
    genus_cap: u32,
    format: Format,
) -> Result<Outcome> {
    let output = match multiplicity {
        Some(m) => emit::filtrations(&enumerate_compact(m, genus)?, format)?,
        None => {
            gapset_core::TreeEnumerator::with_genus_cap(genus_cap)?.check(genus)?;
            let mut found = Vec::new();
            TreeNode::root().walk(genus, &mut |node| {
                if node.genus() == genus {
                    found.push(node.semigroup().gapset());
                }
            });
            found.sort();
            emit::gapsets(&found, format)?
        }
    };
    Ok(Outcome {
        output,
        problems: Vec::new(),
    })
}

fn criterion(max_m: u32, max_sum: u32, format: Format) -> Result<Outcome> {
    let report = parallel::check_criterion(max_m, max_sum)?;
    let problems = report
        .discrepancies
        .iter()
        .map(|c| {
            format!(
                "{c}: criterion says {}, brute force disagrees",
                gapset_core::is_admissible(c)
            )
        })
        .collect();
    Ok(Outcome {
        output: emit::criterion(&report, max_m, max_sum, format)?,
        problems,
    })
}

fn injection(m: u32, max_genus: u32, format: Format) -> Result<Outcome> {
    let reports = parallel::verify_injections(m, max_genus)?;
    let mut problems = Vec::new();
    for r in &reports {
        for f in &r.failures {
            problems.push(format!(
                "m={m} g={} {}: image of {f} is not a gapset filtration",
                r.genus,
                r.map_name()
            ));
        }
        if r.image_size != r.domain_size {
            problems.push(format!(
                "m={m} g={} {}: {} inputs but {} distinct images",
                r.genus,
                r.map_name(),
                r.domain_size,
                r.image_size
            ));
        }
    }
    for w in reports.windows(2) {
        if w[1].domain_size < w[0].domain_size {
            problems.push(format!(
                "n_{{{},{m}}} = {} is smaller than n_{{{},{m}}} = {}",
                w[1].genus, w[1].domain_size, w[0].genus, w[0].domain_size
            ));
        }
    }
    Ok(Outcome {
        output: emit::injections(&reports, format)?,
        problems,
    })
}

fn golden_check(genus_cap: u32, format: Format) -> Result<Outcome> {
    let max_genus = golden::MAX_GENUS;
    let (table, tree) = parallel::count_table(max_genus, max_genus + 1, genus_cap)?;
    let mismatches = golden::compare(&table);
    let has = |pred: &dyn Fn(&golden::Cell) -> bool| mismatches.iter().any(|x| pred(&x.cell));
    let agree = (1..=max_genus + 1)
        .all(|m| (0..=max_genus).all(|g| Some(tree.n_gm(g, m)) == table.n_gm(g, m)));
    let rows_ok = !has(&|c| matches!(c, golden::Cell::Row { .. }));
    let lines = vec![
        (
            format!("n_g for g = 0..{max_genus}"),
            !has(&|c| matches!(c, golden::Cell::Total(_))),
        ),
        (
            format!("n'_g for g = 0..{max_genus}"),
            !has(&|c| matches!(c, golden::Cell::Generic(_))),
        ),
        ("n_{g,m} for m <= 6, g <= 14".to_string(), rows_ok),
        ("semigroup tree and compact forms agree".to_string(), agree),
    ];
    let mut problems: Vec<String> = mismatches.iter().map(ToString::to_string).collect();
    if !agree {
        problems.push("semigroup tree and compact-form counts differ".into());
    }
    Ok(Outcome {
        output: emit::checks(&lines, format)?,
        problems,
    })
}

fn kunz(gaps: &str, format: Format) -> Result<Outcome> {
    let g: Gapset = gaps
        .parse()
        .with_context(|| format!("cannot read {gaps:?}"))?;
    if !g.is_valid() {
        bail!("{gaps:?} is not a gapset: some element splits into two non-gaps");
    }
    let k = kunz_of_semigroup(&g.complement());
    Ok(Outcome {
        output: emit::kunz(&k, format)?,
        problems: Vec::new(),
    })
}
