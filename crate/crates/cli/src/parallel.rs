//! Rayon drivers over the core enumerators. Work is split into independent
//! pieces whose results are merged in a fixed order, so output never depends
//! on the number of threads.

use anyhow::Result;
use gapset_core::admissibility::{exponent_vectors_bounded_sum, is_admissible, CriterionReport};
use gapset_core::enumeration::{enumerate_compact, TreeCounts, TreeEnumerator, TreeNode};
use gapset_core::perm::Permutations;
use gapset_core::{is_gapset, tau, verify_injection, CompactForm, CountTable, InjectionReport};
use rayon::prelude::*;

/// Genus at which the tree is cut into independent subtrees.
const SPLIT_GENUS: u32 = 10;

/// Runs `f` on a pool with `jobs` threads, or on the global pool for 0.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(f))
}

pub fn tree_counts(max_genus: u32, genus_cap: u32) -> Result<TreeCounts> {
    let tree = TreeEnumerator::with_genus_cap(genus_cap)?;
    tree.check(max_genus)?;
    let split = max_genus.min(SPLIT_GENUS);
    let mut counts = TreeCounts::new(max_genus);
    let mut frontier = Vec::new();
    TreeNode::root().walk(split, &mut |node| {
        if node.genus() == split {
            frontier.push(*node);
        } else {
            counts.add(node);
        }
    });
    let below = frontier
        .par_iter()
        .map(|node| {
            let mut local = TreeCounts::new(max_genus);
            node.walk(max_genus, &mut |n| local.add(n));
            local
        })
        .reduce(
            || TreeCounts::new(max_genus),
            |mut a, b| {
                a.merge(&b);
                a
            },
        );
    counts.merge(&below);
    Ok(counts)
}

/// `rows[i][g] = n_{g, multiplicities[i]}` from compact enumeration.
pub fn compact_rows(multiplicities: &[u32], max_genus: u32) -> Result<Vec<Vec<u64>>> {
    let cells: Vec<(u32, u32)> = multiplicities
        .iter()
        .flat_map(|&m| (0..=max_genus).map(move |g| (m, g)))
        .collect();
    let counts = cells
        .par_iter()
        .map(|&(m, g)| enumerate_compact(m, g).map(|v| v.len() as u64))
        .collect::<gapset_core::Result<Vec<u64>>>()?;
    Ok(counts
        .chunks(max_genus as usize + 1)
        .map(<[u64]>::to_vec)
        .collect())
}

/// Full table: rows `1..=max_multiplicity` from compact forms, totals from
/// the tree. Also returns the tree tallies for cross-checking.
pub fn count_table(
    max_genus: u32,
    max_multiplicity: u32,
    genus_cap: u32,
) -> Result<(CountTable, TreeCounts)> {
    let tree = tree_counts(max_genus, genus_cap)?;
    let ms: Vec<u32> = (1..=max_multiplicity).collect();
    let rows = compact_rows(&ms, max_genus)?;
    Ok((CountTable::assemble(rows, &tree)?, tree))
}

/// Parallel version of the core criterion check, one task per `(m, sigma)`.
pub fn check_criterion(max_m: u32, max_sum: u32) -> Result<CriterionReport> {
    let mut tasks = Vec::new();
    for m in 2..=max_m {
        for sigma in Permutations::new(m - 1) {
            tasks.push((m, sigma));
        }
    }
    let vectors: Vec<Vec<Vec<u32>>> = (0..=max_m)
        .map(|m| exponent_vectors_bounded_sum(m.saturating_sub(1) as usize, max_sum))
        .collect();
    let reports = tasks
        .par_iter()
        .map(|(m, sigma)| {
            let mut report = CriterionReport::default();
            for e in &vectors[*m as usize] {
                let c = CompactForm::new(*m, sigma.clone(), e.clone())?;
                let fast = is_admissible(&c);
                let oracle = is_gapset(tau(&c.expand()).elements());
                report.forms_checked += 1;
                report.admissible += u64::from(oracle);
                if fast != oracle {
                    report.discrepancies.push(c);
                }
            }
            Ok(report)
        })
        .collect::<gapset_core::Result<Vec<_>>>()?;
    let mut total = CriterionReport::default();
    for r in reports {
        total.merge(r);
    }
    Ok(total)
}

/// One report per genus `0..=max_genus`, in genus order.
pub fn verify_injections(m: u32, max_genus: u32) -> Result<Vec<InjectionReport>> {
    let reports = (0..=max_genus)
        .into_par_iter()
        .map(|g| verify_injection(m, g))
        .collect::<gapset_core::Result<Vec<_>>>()?;
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_walk_matches_sequential() {
        for g in [0, 3, 10, 13] {
            let seq = TreeEnumerator::new().count(g).unwrap();
            assert_eq!(tree_counts(g, 35).unwrap(), seq);
        }
    }

    #[test]
    fn parallel_criterion_matches_core() {
        let core = gapset_core::admissibility::check_criterion(5, 6).unwrap();
        let par = check_criterion(5, 6).unwrap();
        assert_eq!(core, par);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let one = with_jobs(1, || tree_counts(12, 35).unwrap()).unwrap();
        let four = with_jobs(4, || tree_counts(12, 35).unwrap()).unwrap();
        assert_eq!(one, four);
    }
}
