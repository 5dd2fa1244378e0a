//! When does a compact form describe a gapset?
//!
//! The semigroup `S(σ, e)` is a union of residue classes, class `σ(i)`
//! starting at `σ(i) + m P_i` with `P_i = e_0 + ... + e_{i-1}`. It is closed
//! under addition iff for all `1 <= i <= j < k <= m - 1`:
//!
//! - `σ(i) + σ(j) = σ(k)` implies `e_j + ... + e_{k-1} <= P_i`,
//! - `σ(i) + σ(j) = σ(k) + m` implies `e_j + ... + e_{k-1} <= P_i + 1`.
//!
//! Pairs with `σ(i) + σ(j) = m` land in `mN` and impose nothing.

use alloc::vec::Vec;

use crate::compact::CompactForm;
use crate::error::{Error, Result};
use crate::filtration::tau;
use crate::gapset::is_gapset;
use crate::perm::Permutations;

/// Exact test that `S(σ, e)` is a numerical semigroup, equivalently that
/// `expand(c)` is a gapset filtration.
pub fn is_admissible(c: &CompactForm) -> bool {
    let m = c.multiplicity();
    if m <= 2 {
        return true;
    }
    let prefix = c.prefix_sums();
    let top = (m - 1) as usize;
    // position[r] = i with σ(i) = r
    let mut position = alloc::vec![0usize; m as usize];
    for i in 1..=top {
        position[c.sigma_at(i) as usize] = i;
    }
    for i in 1..=top {
        for j in i..=top {
            let sum = c.sigma_at(i) + c.sigma_at(j);
            let (target, slack) = if sum < m {
                (sum, 0)
            } else if sum > m {
                (sum - m, 1)
            } else {
                continue;
            };
            let k = position[target as usize];
            if k > j && prefix[k] - prefix[j] > prefix[i] + slack {
                return false;
            }
        }
    }
    true
}

/// The two shapes of 3-filtrations: `(12)^r(1)^s` and `(12)^r(2)^s`,
/// named by the residue that survives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum M3Family {
    One,
    Two,
}

impl M3Family {
    /// `σ = (2, 1)` keeps 1, `σ = (1, 2)` keeps 2.
    pub fn compact(self, r: u32, s: u32) -> Result<CompactForm> {
        let sigma = match self {
            M3Family::One => alloc::vec![2, 1],
            M3Family::Two => alloc::vec![1, 2],
        };
        CompactForm::new(3, sigma, alloc::vec![r, s])
    }
}

/// `(12)^r(2)^s` needs `s <= r`; `(12)^r(1)^s` needs `s <= r + 1`.
pub fn is_admissible_m3(family: M3Family, r: u32, s: u32) -> Result<bool> {
    if r == 0 {
        return Err(Error::ZeroLeadingExponent);
    }
    Ok(match family {
        M3Family::Two => s <= r,
        M3Family::One => s <= r + 1,
    })
}

/// The six-row table for multiplicity 4, `e = (a, b, c)`.
pub fn is_admissible_m4(sigma: [u32; 3], a: u32, b: u32, c: u32) -> Result<bool> {
    if a == 0 {
        return Err(Error::ZeroLeadingExponent);
    }
    Ok(match sigma {
        [1, 2, 3] => b <= a && c <= a,
        [1, 3, 2] => b + c <= a,
        [2, 1, 3] => c <= a,
        [2, 3, 1] => c <= a + 1,
        [3, 1, 2] => b + c <= a + 1 && c <= a + b,
        [3, 2, 1] => b <= a + 1 && c <= a + 1,
        _ => return Err(Error::InvalidPermutation),
    })
}

/// Exponent vectors of length `len` with `e_0 >= 1` and `Σ e_i <= max_sum`,
/// in colexicographic order.
pub fn exponent_vectors_bounded_sum(len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut current = alloc::vec![0u32; len];
    fill_bounded(&mut current, len, max_sum, &mut out);
    out
}

// fills positions from the last one down, so the outer loop runs over the
// last coordinate: colex order
fn fill_bounded(current: &mut [u32], pos: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
    if pos == 0 {
        return;
    }
    let i = pos - 1;
    let lo = u32::from(i == 0);
    for v in lo..=budget {
        current[i] = v;
        if i == 0 {
            out.push(current.to_vec());
        } else {
            fill_bounded(current, i, budget - v, out);
        }
    }
    current[i] = 0;
}

/// Result of comparing [`is_admissible`] with the brute-force gapset test.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CriterionReport {
    pub forms_checked: u64,
    pub admissible: u64,
    pub discrepancies: Vec<CompactForm>,
}

impl CriterionReport {
    pub fn merge(&mut self, other: CriterionReport) {
        self.forms_checked += other.forms_checked;
        self.admissible += other.admissible;
        self.discrepancies.extend(other.discrepancies);
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Every permutation paired with every bounded exponent vector for one
/// multiplicity, checked against `is_gapset(tau(expand(c)))`.
pub fn check_criterion_for(m: u32, max_sum: u32) -> Result<CriterionReport> {
    crate::filtration::check_multiplicity(m)?;
    let exponents = exponent_vectors_bounded_sum((m - 1) as usize, max_sum);
    let mut report = CriterionReport::default();
    for sigma in Permutations::new(m - 1) {
        for e in &exponents {
            let c = CompactForm::new(m, sigma.clone(), e.clone())?;
            let fast = is_admissible(&c);
            let oracle = is_gapset(tau(&c.expand()).elements());
            report.forms_checked += 1;
            report.admissible += u64::from(oracle);
            if fast != oracle {
                report.discrepancies.push(c);
            }
        }
    }
    Ok(report)
}

/// [`check_criterion_for`] over `m = 2..=max_m`.
pub fn check_criterion(max_m: u32, max_sum: u32) -> Result<CriterionReport> {
    let mut report = CriterionReport::default();
    for m in 2..=max_m {
        report.merge(check_criterion_for(m, max_sum)?);
    }
    Ok(report)
}
