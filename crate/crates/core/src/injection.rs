//! Insertion maps and the genus-increasing injections for `m = 3, 4`.
//!
//! `insert(F, i)` adds `i` to the first part that lacks it, or appends the
//! part `{i}` if every part already contains `i`. The result is always an
//! m-filtration of genus one more. Whether it is again a *gapset* filtration
//! depends on `F` and `i`; for `m = 3` and `m = 4` a parity rule on the genus
//! selects an `i` that always works. The maps here re-check every image
//! instead of trusting that rule.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::enumeration::enumerate_compact;
use crate::error::{Error, Result};
use crate::filtration::{is_gapset_filtration, MFiltration};
use crate::residue::ResidueSet;

/// The insertion map `f_i`.
pub fn insert(f: &MFiltration, residue: u32) -> Result<MFiltration> {
    let m = f.multiplicity();
    if residue == 0 || residue >= m {
        return Err(Error::ResidueOutOfRange { residue, m });
    }
    let mut parts = f.parts().to_vec();
    match parts.iter().position(|p| !p.contains(residue)) {
        Some(j) => parts[j] = parts[j].with(residue),
        None => parts.push(ResidueSet::EMPTY.with(residue)),
    }
    Ok(MFiltration::from_parts_unchecked(m, parts))
}

/// Residue inserted by the injection `F(g, m) -> F(g + 1, m)`:
/// for `m = 3`, 1 when `g ≡ 0, 2 (mod 3)` and 2 otherwise; for `m = 4`, 1
/// for even `g` and 3 for odd `g`.
pub fn insertion_residue(m: u32, genus: u32) -> Option<u32> {
    match m {
        3 => Some(if genus % 3 == 1 { 2 } else { 1 }),
        4 => Some(if genus.is_multiple_of(2) { 1 } else { 3 }),
        _ => None,
    }
}

fn inject(f: &MFiltration, m: u32) -> Result<MFiltration> {
    if f.multiplicity() != m {
        return Err(Error::NotInDomain("wrong multiplicity"));
    }
    if !is_gapset_filtration(f) {
        return Err(Error::NotInDomain("not a gapset filtration"));
    }
    let genus = f.genus();
    let residue = insertion_residue(m, genus).expect("m is 3 or 4");
    let image = insert(f, residue)?;
    if !is_gapset_filtration(&image) {
        return Err(Error::ContractViolation {
            m,
            genus,
            residue,
            input: f.to_string(),
        });
    }
    Ok(image)
}

/// The injection `F(g, 3) -> F(g + 1, 3)`.
pub fn inject_m3(f: &MFiltration) -> Result<MFiltration> {
    inject(f, 3)
}

/// The injection `F(g, 4) -> F(g + 1, 4)`.
pub fn inject_m4(f: &MFiltration) -> Result<MFiltration> {
    inject(f, 4)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionReport {
    pub multiplicity: u32,
    pub genus: u32,
    /// `i` of the map `f_i` that was applied.
    pub residue: u32,
    pub domain_size: usize,
    /// Number of distinct images.
    pub image_size: usize,
    /// Inputs whose image is not a gapset filtration of genus `g + 1`.
    pub failures: Vec<MFiltration>,
}

impl InjectionReport {
    pub fn map_name(&self) -> alloc::string::String {
        alloc::format!("f_{}", self.residue)
    }

    pub fn verified(&self) -> bool {
        self.failures.is_empty() && self.image_size == self.domain_size
    }
}

/// Applies the injection to all of `F(g, m)` and checks every image and
/// pairwise distinctness.
pub fn verify_injection(m: u32, genus: u32) -> Result<InjectionReport> {
    let residue = insertion_residue(m, genus)
        .ok_or(Error::NotInDomain("injections are defined for m = 3, 4"))?;
    let domain = enumerate_compact(m, genus)?;
    let mut images = BTreeSet::new();
    let mut failures = Vec::new();
    for f in &domain {
        let image = insert(f, residue)?;
        let ok =
            image.genus() == genus + 1 && image.multiplicity() == m && is_gapset_filtration(&image);
        if !ok {
            failures.push(f.clone());
        }
        images.insert(image);
    }
    Ok(InjectionReport {
        multiplicity: m,
        genus,
        residue,
        domain_size: domain.len(),
        image_size: images.len(),
        failures,
    })
}

/// Gapset filtrations of multiplicity `m` and genus at most `max_genus`
/// whose image under `f_residue` is not a gapset filtration, sorted.
pub fn failure_set(m: u32, residue: u32, max_genus: u32) -> Result<Vec<MFiltration>> {
    let mut out = BTreeSet::new();
    for g in 0..=max_genus {
        for f in enumerate_compact(m, g)? {
            if !is_gapset_filtration(&insert(&f, residue)?) {
                out.insert(f);
            }
        }
    }
    Ok(out.into_iter().collect())
}
