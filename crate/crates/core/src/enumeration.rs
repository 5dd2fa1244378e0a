//! Two independent ways to count numerical semigroups.
//!
//! The semigroup tree walks from `N` down: the children of `S` are
//! `S \ {x}` for each minimal generator `x` larger than the Frobenius number.
//! It works on bit masks of gaps and never touches filtration code.
//!
//! The compact enumerator builds every m-filtration of a given genus from
//! exponent vectors and block arrangements of `sigma`, and keeps those that
//! pass [`is_admissible`]. It never tests addition directly.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::admissibility::is_admissible;
use crate::compact::CompactForm;
use crate::error::{Error, Result};
use crate::filtration::{check_multiplicity, MFiltration};
use crate::gapset::NumericalSemigroup;
use crate::perm::{for_each_block_arrangement, Permutations};
use crate::DEFAULT_GENUS_CAP;

/// Genus limit of the tree representation: gaps of a semigroup of genus `g`
/// are below `2g`, and they live in one `u128`.
pub const TREE_GENUS_LIMIT: u32 = 63;

/// A vertex of the semigroup tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeNode {
    gaps: u128,
    genus: u32,
    multiplicity: u32,
    frobenius: i32,
}

impl TreeNode {
    /// The semigroup `N`.
    pub fn root() -> Self {
        TreeNode {
            gaps: 0,
            genus: 0,
            multiplicity: 1,
            frobenius: -1,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn conductor(&self) -> u32 {
        (self.frobenius + 1) as u32
    }

    /// `c <= 3m`.
    pub fn is_generic(&self) -> bool {
        self.conductor() <= 3 * self.multiplicity
    }

    fn is_member(&self, n: u32) -> bool {
        n >= 128 || self.gaps & (1u128 << n) == 0
    }

    /// Children in increasing order of the removed generator.
    pub fn children(&self) -> Vec<TreeNode> {
        if self.frobenius < 0 {
            return alloc::vec![TreeNode {
                gaps: 1 << 1,
                genus: 1,
                multiplicity: 2,
                frobenius: 1
            }];
        }
        let m = self.multiplicity;
        let f = self.frobenius as u32;
        // generators are below c + m; a child of genus g + 1 has Frobenius
        // number at most 2g + 1
        let hi = (f + m).min(2 * self.genus + 1);
        (f + 1..=hi)
            .filter(|&x| !(m..=x / 2).any(|y| self.is_member(y) && self.is_member(x - y)))
            .map(|x| TreeNode {
                gaps: self.gaps | (1u128 << x),
                genus: self.genus + 1,
                multiplicity: if x == m { m + 1 } else { m },
                frobenius: x as i32,
            })
            .collect()
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        let small = (0..=self.conductor())
            .filter(|&n| self.is_member(n))
            .collect();
        NumericalSemigroup::from_small_elements_unchecked(small)
    }

    /// Depth-first walk of the subtree rooted here, down to `max_genus`.
    pub fn walk(&self, max_genus: u32, visit: &mut dyn FnMut(&TreeNode)) {
        let mut stack = alloc::vec![*self];
        while let Some(node) = stack.pop() {
            if node.genus > max_genus {
                continue;
            }
            visit(&node);
            if node.genus < max_genus {
                stack.extend(node.children());
            }
        }
    }
}

/// Semigroup-tree enumerator with a hard genus cap.
#[derive(Clone, Copy, Debug)]
pub struct TreeEnumerator {
    genus_cap: u32,
}

impl Default for TreeEnumerator {
    fn default() -> Self {
        TreeEnumerator {
            genus_cap: DEFAULT_GENUS_CAP,
        }
    }
}

impl TreeEnumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_genus_cap(genus_cap: u32) -> Result<Self> {
        if genus_cap > TREE_GENUS_LIMIT {
            return Err(Error::GenusCap {
                requested: genus_cap,
                cap: TREE_GENUS_LIMIT,
            });
        }
        Ok(TreeEnumerator { genus_cap })
    }

    pub fn genus_cap(&self) -> u32 {
        self.genus_cap
    }

    pub fn check(&self, max_genus: u32) -> Result<()> {
        if max_genus > self.genus_cap {
            Err(Error::GenusCap {
                requested: max_genus,
                cap: self.genus_cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn walk(&self, max_genus: u32, visit: &mut dyn FnMut(&TreeNode)) -> Result<()> {
        self.check(max_genus)?;
        TreeNode::root().walk(max_genus, visit);
        Ok(())
    }

    /// Semigroups grouped by genus `0..=max_genus`, each group sorted by its
    /// small elements.
    pub fn enumerate(&self, max_genus: u32) -> Result<Vec<Vec<NumericalSemigroup>>> {
        let mut by_genus = alloc::vec![Vec::new(); max_genus as usize + 1];
        self.walk(max_genus, &mut |node| {
            by_genus[node.genus as usize].push(node.semigroup())
        })?;
        for group in &mut by_genus {
            group.sort_unstable();
        }
        Ok(by_genus)
    }

    pub fn count(&self, max_genus: u32) -> Result<TreeCounts> {
        let mut counts = TreeCounts::new(max_genus);
        self.walk(max_genus, &mut |node| counts.add(node))?;
        Ok(counts)
    }
}

/// [`TreeEnumerator::enumerate`] with the default cap.
pub fn enumerate_tree(max_genus: u32) -> Result<Vec<Vec<NumericalSemigroup>>> {
    TreeEnumerator::new().enumerate(max_genus)
}

/// Per-genus tallies gathered from the semigroup tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCounts {
    /// `by_multiplicity[g][m]` for `m` in `0..=g + 1`; index 0 is unused.
    pub by_multiplicity: Vec<Vec<u64>>,
    pub totals: Vec<u64>,
    /// Semigroups with `c <= 3m`.
    pub generic: Vec<u64>,
}

impl TreeCounts {
    pub fn new(max_genus: u32) -> Self {
        let n = max_genus as usize + 1;
        TreeCounts {
            by_multiplicity: (0..n).map(|g| alloc::vec![0; g + 2]).collect(),
            totals: alloc::vec![0; n],
            generic: alloc::vec![0; n],
        }
    }

    pub fn add(&mut self, node: &TreeNode) {
        let g = node.genus as usize;
        self.by_multiplicity[g][node.multiplicity as usize] += 1;
        self.totals[g] += 1;
        self.generic[g] += u64::from(node.is_generic());
    }

    pub fn merge(&mut self, other: &TreeCounts) {
        for (mine, theirs) in self.by_multiplicity.iter_mut().zip(&other.by_multiplicity) {
            for (a, b) in mine.iter_mut().zip(theirs) {
                *a += b;
            }
        }
        for (a, b) in self.totals.iter_mut().zip(&other.totals) {
            *a += b;
        }
        for (a, b) in self.generic.iter_mut().zip(&other.generic) {
            *a += b;
        }
    }

    pub fn max_genus(&self) -> u32 {
        self.totals.len() as u32 - 1
    }

    pub fn n_gm(&self, g: u32, m: u32) -> u64 {
        self.by_multiplicity
            .get(g as usize)
            .and_then(|row| row.get(m as usize))
            .copied()
            .unwrap_or(0)
    }
}

/// Exponent vectors `e` of length `m - 1` with `e_0 >= 1` and
/// `Σ e_i (m - 1 - i) = genus`, in colexicographic order.
pub fn exponent_vectors_of_genus(m: u32, genus: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let len = (m - 1) as usize;
    let mut current = alloc::vec![0u32; len];
    fill_weighted(&mut current, len, genus, m - 1, &mut out);
    out
}

// position i has weight top - i; positions are filled from the last
fn fill_weighted(current: &mut [u32], pos: usize, budget: u32, top: u32, out: &mut Vec<Vec<u32>>) {
    let i = pos - 1;
    let weight = top - i as u32;
    if i == 0 {
        if budget.is_multiple_of(weight) && budget >= weight {
            current[0] = budget / weight;
            out.push(current.to_vec());
            current[0] = 0;
        }
        return;
    }
    for v in 0..=budget / weight {
        current[i] = v;
        fill_weighted(current, i, budget - v * weight, top, out);
    }
    current[i] = 0;
}

/// Sizes of the blocks of `sigma` whose contents are fixed by `e`.
fn block_sizes(exponents: &[u32]) -> Vec<u32> {
    let top = exponents.len() as u32;
    let used: Vec<u32> = (0..top)
        .filter(|&i| i == 0 || exponents[i as usize] > 0)
        .collect();
    let mut sizes: Vec<u32> = used.windows(2).map(|w| w[1] - w[0]).collect();
    sizes.push(top - used[used.len() - 1]);
    sizes
}

/// All gapset filtrations of multiplicity `m` and the given genus, sorted.
///
/// Only the canonical `sigma` of each exponent vector is generated (one per
/// distinct filtration); results are still keyed by expanded filtration.
pub fn enumerate_compact(m: u32, genus: u32) -> Result<Vec<MFiltration>> {
    check_multiplicity(m)?;
    if m == 1 {
        return Ok(if genus == 0 {
            alloc::vec![MFiltration::trivial(1)?]
        } else {
            Vec::new()
        });
    }
    let mut found = BTreeSet::new();
    for e in exponent_vectors_of_genus(m, genus) {
        let blocks = block_sizes(&e);
        let mut err = None;
        for_each_block_arrangement(m - 1, &blocks, &mut |sigma| {
            if err.is_some() {
                return;
            }
            match CompactForm::new(m, sigma.to_vec(), e.clone()) {
                Ok(c) => {
                    if is_admissible(&c) {
                        found.insert(c.expand());
                    }
                }
                Err(bad) => err = Some(bad),
            }
        });
        if let Some(bad) = err {
            return Err(bad);
        }
    }
    Ok(found.into_iter().collect())
}

/// Same output as [`enumerate_compact`], iterating the whole symmetric group
/// for every exponent vector and deduplicating by expansion. Much slower;
/// kept as a reference for the pruned version.
pub fn enumerate_compact_all_permutations(m: u32, genus: u32) -> Result<Vec<MFiltration>> {
    check_multiplicity(m)?;
    if m == 1 {
        return enumerate_compact(m, genus);
    }
    let vectors = exponent_vectors_of_genus(m, genus);
    let mut found = BTreeSet::new();
    for sigma in Permutations::new(m - 1) {
        for e in &vectors {
            let c = CompactForm::new(m, sigma.clone(), e.clone())?;
            if is_admissible(&c) {
                found.insert(c.expand());
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Counts `n_{g,m}` (from compact enumeration), `n_g` and `n'_g` (from the
/// semigroup tree) for `g <= max_genus` and `m <= max_multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    max_genus: u32,
    /// `cells[m - 1][g]`
    cells: Vec<Vec<u64>>,
    totals: Vec<u64>,
    generic: Vec<u64>,
}

impl CountTable {
    /// `rows[m - 1][g]` holds `n_{g,m}`; `tree` supplies `n_g` and `n'_g`.
    pub fn assemble(rows: Vec<Vec<u64>>, tree: &TreeCounts) -> Result<Self> {
        let max_genus = tree.max_genus();
        if rows.iter().any(|r| r.len() != max_genus as usize + 1) {
            return Err(Error::InvalidSemigroup(
                "count rows do not span the genus range",
            ));
        }
        Ok(CountTable {
            max_genus,
            cells: rows,
            totals: tree.totals.clone(),
            generic: tree.generic.clone(),
        })
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.cells.len() as u32
    }

    /// `n_{g,m}`, `None` outside the computed range.
    pub fn n_gm(&self, g: u32, m: u32) -> Option<u64> {
        let row = self.cells.get((m as usize).checked_sub(1)?)?;
        row.get(g as usize).copied()
    }

    pub fn row(&self, m: u32) -> Option<&[u64]> {
        self.cells
            .get((m as usize).checked_sub(1)?)
            .map(Vec::as_slice)
    }

    pub fn n_g(&self, g: u32) -> u64 {
        self.totals[g as usize]
    }

    pub fn n_prime(&self, g: u32) -> u64 {
        self.generic[g as usize]
    }

    pub fn totals(&self) -> &[u64] {
        &self.totals
    }

    pub fn generic(&self) -> &[u64] {
        &self.generic
    }
}

/// Row `n_{0,m}, ..., n_{max_genus,m}` from compact enumeration.
pub fn compact_row(m: u32, max_genus: u32) -> Result<Vec<u64>> {
    (0..=max_genus)
        .map(|g| enumerate_compact(m, g).map(|v| v.len() as u64))
        .collect()
}

/// Sequential count table with the default genus cap.
pub fn count_table(max_genus: u32, max_multiplicity: u32) -> Result<CountTable> {
    let tree = TreeEnumerator::new().count(max_genus)?;
    let rows = (1..=max_multiplicity)
        .map(|m| compact_row(m, max_genus))
        .collect::<Result<Vec<_>>>()?;
    CountTable::assemble(rows, &tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn tree_first_levels() {
        let groups = enumerate_tree(2).unwrap();
        assert_eq!(groups[0], [NumericalSemigroup::naturals()]);
        assert_eq!(groups[1].len(), 1);
        assert_eq!(groups[1][0].minimal_generators(), [2, 3]);
        let gens: Vec<Vec<u32>> = groups[2].iter().map(|s| s.minimal_generators()).collect();
        // sorted by small elements: [0, 2, 4] before [0, 3]
        assert_eq!(gens, [alloc::vec![2, 5], alloc::vec![3, 4, 5]]);
    }

    #[test]
    fn tree_counts_small() {
        let counts = TreeEnumerator::new().count(6).unwrap();
        assert_eq!(counts.totals, [1, 1, 2, 4, 7, 12, 23]);
        assert_eq!(
            (2..=5).map(|m| counts.n_gm(4, m)).collect::<Vec<_>>(),
            [1, 2, 3, 1]
        );
    }

    #[test]
    fn genus_cap_is_enforced() {
        assert_eq!(
            TreeEnumerator::with_genus_cap(4).unwrap().count(5),
            Err(Error::GenusCap {
                requested: 5,
                cap: 4
            })
        );
        assert!(TreeEnumerator::with_genus_cap(64).is_err());
    }

    #[test]
    fn weighted_exponent_vectors() {
        // 3a + 2b + c = 4 with a >= 1
        let v = exponent_vectors_of_genus(4, 4);
        assert_eq!(v, [[1, 0, 1]]);
        let v = exponent_vectors_of_genus(3, 6);
        assert_eq!(v, [[3, 0], [2, 2], [1, 4]]);
        assert!(exponent_vectors_of_genus(5, 3).is_empty());
    }

    #[test]
    fn compact_examples() {
        let strings = |v: Vec<MFiltration>| v.iter().map(|f| f.to_string()).collect::<Vec<_>>();
        assert_eq!(
            strings(enumerate_compact(4, 4).unwrap()),
            ["123|1", "123|2", "123|3"]
        );
        assert_eq!(
            strings(enumerate_compact(3, 6).unwrap()),
            ["12|12|1|1", "12|12|2|2", "12|12|12"]
        );
        for g in 1..8 {
            let only = enumerate_compact(2, g).unwrap();
            assert_eq!(only.len(), 1);
            assert_eq!(only[0].genus(), g);
        }
        assert_eq!(enumerate_compact(1, 0).unwrap().len(), 1);
        assert!(enumerate_compact(1, 3).unwrap().is_empty());
        assert!(enumerate_compact(5, 3).unwrap().is_empty());
    }

    #[test]
    fn pruned_matches_full_symmetric_group() {
        for m in 2..=5 {
            for g in 0..=9 {
                assert_eq!(
                    enumerate_compact(m, g).unwrap(),
                    enumerate_compact_all_permutations(m, g).unwrap(),
                    "m={m} g={g}"
                );
            }
        }
    }

    #[test]
    fn block_sizes_from_exponents() {
        assert_eq!(block_sizes(&[1, 0, 1, 1]), [2, 1, 1]);
        assert_eq!(block_sizes(&[2, 0, 0]), [3]);
        assert_eq!(block_sizes(&[1, 1]), [1, 1]);
    }

    #[test]
    fn small_count_table() {
        let t = count_table(6, 4).unwrap();
        assert_eq!(t.row(3).unwrap(), [0, 0, 1, 2, 2, 2, 3]);
        assert_eq!(t.n_gm(6, 4), Some(6));
        assert_eq!(t.n_gm(6, 5), None);
        assert_eq!(t.n_g(6), 23);
        assert_eq!(t.n_prime(5), 11);
    }
}
