//! m-extensions, m-filtrations and the bijection between them.
//!
//! An m-filtration is a nonincreasing chain `[1, m-1] = F_0 ⊇ F_1 ⊇ ... ⊇ F_t`
//! of residue sets. Shifting `F_i` up by `im` and taking the union gives an
//! m-extension ([`tau`]); slicing an m-extension into windows of width `m`
//! and shifting back recovers the chain ([`phi`]).
//!
//! Parts are never empty: a trailing empty part carries no elements, so it is
//! dropped and the number of parts equals the depth.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::gapset::{is_gapset, parse_list, write_list, Gapset};
use crate::residue::ResidueSet;
use crate::MAX_MULTIPLICITY;

pub(crate) fn check_multiplicity(m: u32) -> Result<()> {
    if m == 0 || m > MAX_MULTIPLICITY {
        Err(Error::MultiplicityOutOfRange(m))
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MFiltration {
    m: u32,
    parts: Vec<ResidueSet>,
}

impl MFiltration {
    /// Checks `F_0 = [1, m-1]`, the chain condition and that no part is
    /// empty. For `m = 1` the only filtration has no parts.
    pub fn new(m: u32, parts: Vec<ResidueSet>) -> Result<Self> {
        check_multiplicity(m)?;
        if m == 1 {
            if !parts.is_empty() {
                return Err(Error::InvalidFiltration(
                    "m = 1 admits only the empty filtration",
                ));
            }
            return Ok(MFiltration { m, parts });
        }
        match parts.first() {
            None => return Err(Error::InvalidFiltration("missing F_0")),
            Some(&first) if first != ResidueSet::full(m) => {
                return Err(Error::InvalidFiltration("F_0 must equal [1, m-1]"))
            }
            Some(_) => {}
        }
        if parts.windows(2).any(|w| !w[1].is_subset(w[0])) {
            return Err(Error::InvalidFiltration("parts must be nonincreasing"));
        }
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidFiltration("empty part"));
        }
        Ok(MFiltration { m, parts })
    }

    /// `([1, m-1])`, or the empty filtration when `m = 1`.
    pub fn trivial(m: u32) -> Result<Self> {
        check_multiplicity(m)?;
        let parts = if m == 1 {
            Vec::new()
        } else {
            alloc::vec![ResidueSet::full(m)]
        };
        Ok(MFiltration { m, parts })
    }

    pub(crate) fn from_parts_unchecked(m: u32, parts: Vec<ResidueSet>) -> Self {
        debug_assert!(MFiltration::new(m, parts.clone()).is_ok());
        MFiltration { m, parts }
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn parts(&self) -> &[ResidueSet] {
        &self.parts
    }

    pub fn depth(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn genus(&self) -> u32 {
        self.parts.iter().map(|p| p.len()).sum()
    }

    pub fn invariants(&self) -> FiltrationInvariants {
        filtration_invariants(self)
    }
}

impl fmt::Debug for MFiltration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MFiltration(m={}, {self})", self.m)
    }
}

/// Parts joined by `|`. For `m <= 10` each part is its residues written as
/// consecutive digits (`1234|12|1`); for larger `m` each part is a comma list
/// (`1,2,...,10|1,2`).
impl fmt::Display for MFiltration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            if self.m <= 10 {
                for r in part.iter() {
                    write!(f, "{r}")?;
                }
            } else {
                let residues: Vec<u32> = part.iter().collect();
                write_list(f, &residues)?;
            }
        }
        Ok(())
    }
}

/// Inverse of the `Display` form. The multiplicity is read off the first
/// part, and comma mode is selected when the first part contains a comma.
impl FromStr for MFiltration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return MFiltration::new(1, Vec::new());
        }
        let raw: Vec<&str> = s.split('|').collect();
        let comma_mode = raw[0].contains(',');
        let mut parts = Vec::with_capacity(raw.len());
        for tok in &raw {
            let residues: Vec<u32> = if comma_mode {
                parse_list(tok)?
            } else {
                tok.trim()
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10).filter(|&d| d > 0).ok_or_else(|| {
                            Error::Parse(alloc::format!("invalid residue digit {ch:?}"))
                        })
                    })
                    .collect::<Result<_>>()?
            };
            if residues.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(alloc::format!(
                    "part {tok:?} is not increasing"
                )));
            }
            if let Some(&r) = residues.iter().find(|&&r| r == 0 || r >= MAX_MULTIPLICITY) {
                return Err(Error::Parse(alloc::format!("residue {r} out of range")));
            }
            parts.push(residues.into_iter().collect::<ResidueSet>());
        }
        let m = parts[0].largest().map_or(1, |x| x + 1);
        if !comma_mode && m > 10 {
            return Err(Error::Parse(String::from(
                "digit notation requires m <= 10",
            )));
        }
        MFiltration::new(m, parts)
    }
}

/// The derived numbers of a filtration, matching those of its gapset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiltrationInvariants {
    pub multiplicity: u32,
    pub genus: u32,
    pub depth: u32,
    pub frobenius: i64,
    pub conductor: u32,
}

/// Frobenius number is `(q - 1)m + max(F_{q-1})` where `q` is the number of
/// parts; the empty filtration takes the empty-gapset conventions.
pub fn filtration_invariants(f: &MFiltration) -> FiltrationInvariants {
    let m = f.m;
    let depth = f.depth();
    let frobenius = match f.parts.last() {
        Some(last) => i64::from((depth - 1) * m + last.largest().expect("parts are nonempty")),
        None => -1,
    };
    FiltrationInvariants {
        multiplicity: m,
        genus: f.genus(),
        depth,
        frobenius,
        conductor: (frobenius + 1) as u32,
    }
}

/// True iff `set` contains `[1, m-1]`, avoids multiples of `m`, and each
/// window slice `A_{i+1}` lies inside `m + A_i`.
///
/// `set` must be strictly increasing.
pub fn is_m_extension(set: &[u32], m: u32) -> bool {
    if m == 0 {
        return false;
    }
    let contains = |x: u32| set.binary_search(&x).is_ok();
    (1..m).all(contains)
        && set.iter().all(|&x| x % m != 0)
        // slices nest iff every element above the first window has its
        // predecessor `x - m` in the set
        && set.iter().all(|&x| x < m || contains(x - m))
}

/// A finite set validated as an m-extension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MExtension {
    m: u32,
    elements: Vec<u32>,
}

impl MExtension {
    pub fn new(m: u32, elements: Vec<u32>) -> Result<Self> {
        check_multiplicity(m)?;
        let g = Gapset::new(elements)?;
        if !is_m_extension(g.elements(), m) {
            return Err(Error::NotAnExtension { m });
        }
        Ok(MExtension {
            m,
            elements: g.into_elements(),
        })
    }

    /// A gapset viewed as an extension of its own multiplicity.
    pub fn from_gapset(g: &Gapset) -> Result<Self> {
        MExtension::new(g.multiplicity(), g.elements().to_vec())
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn to_gapset(&self) -> Gapset {
        Gapset::new(self.elements.clone()).expect("extension elements are increasing and positive")
    }
}

/// Slices the extension into `F_i = A_i - im`.
pub fn phi(a: &MExtension) -> MFiltration {
    let m = a.m;
    let mut parts: Vec<ResidueSet> = Vec::new();
    for &x in &a.elements {
        let i = (x / m) as usize;
        if parts.len() <= i {
            parts.resize(i + 1, ResidueSet::EMPTY);
        }
        parts[i] = parts[i].with(x % m);
    }
    MFiltration::from_parts_unchecked(m, parts)
}

/// The union of `im + F_i`, increasing by construction.
pub fn tau(f: &MFiltration) -> MExtension {
    let m = f.m;
    let elements = f
        .parts
        .iter()
        .zip(0u32..)
        .flat_map(|(part, i)| part.iter().map(move |r| i * m + r))
        .collect();
    MExtension { m, elements }
}

/// True iff `tau(f)` is a gapset.
pub fn is_gapset_filtration(f: &MFiltration) -> bool {
    is_gapset(tau(f).elements())
}

impl Gapset {
    /// The gapset filtration `phi(G)`; `None` if the set is not an extension
    /// of its own multiplicity.
    pub fn filtration(&self) -> Option<MFiltration> {
        MExtension::from_gapset(self).ok().map(|a| phi(&a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn filt(s: &str) -> MFiltration {
        s.parse().unwrap()
    }

    fn ext(m: u32, v: &[u32]) -> MExtension {
        MExtension::new(m, v.to_vec()).unwrap()
    }

    #[test]
    fn extension_predicate() {
        assert!(is_m_extension(&[1, 2, 3, 4, 6, 7, 11], 5));
        assert!(is_m_extension(&[1, 2, 3], 4));
        assert!(!is_m_extension(&[1, 2, 6], 3));
        // slice {7} with nothing below it
        assert!(!is_m_extension(&[1, 2, 7], 3));
        assert!(is_m_extension(&[], 1));
        assert!(!is_m_extension(&[1], 1));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&ext(5, &[1, 2, 3, 4, 6, 7, 11])), filt("1234|12|1"));
        assert_eq!(phi(&ext(3, &[1, 2])), filt("12"));
        assert_eq!(phi(&ext(4, &[1, 2, 3, 5, 6, 9])), filt("123|12|1"));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&filt("1234|12|1")).elements(), [1, 2, 3, 4, 6, 7, 11]);
        assert_eq!(tau(&filt("12")).elements(), [1, 2]);
        assert_eq!(tau(&filt("123|12|1")).elements(), [1, 2, 3, 5, 6, 9]);
    }

    #[test]
    fn invariants() {
        let inv = filtration_invariants(&filt("1234|12|1"));
        assert_eq!(
            inv,
            FiltrationInvariants {
                multiplicity: 5,
                genus: 7,
                depth: 3,
                frobenius: 11,
                conductor: 12
            }
        );
        let inv = filtration_invariants(&filt("12"));
        assert_eq!(
            (
                inv.multiplicity,
                inv.genus,
                inv.depth,
                inv.frobenius,
                inv.conductor
            ),
            (3, 2, 1, 2, 3)
        );
        let inv = filtration_invariants(&filt("12|1"));
        assert_eq!(
            (
                inv.multiplicity,
                inv.genus,
                inv.depth,
                inv.frobenius,
                inv.conductor
            ),
            (3, 3, 2, 4, 5)
        );
        let inv = filtration_invariants(&MFiltration::trivial(1).unwrap());
        assert_eq!(
            (
                inv.multiplicity,
                inv.genus,
                inv.depth,
                inv.frobenius,
                inv.conductor
            ),
            (1, 0, 0, -1, 0)
        );
    }

    #[test]
    fn gapset_filtrations() {
        assert!(is_gapset_filtration(&filt("1234|12|1")));
        assert!(is_gapset_filtration(&filt("12")));
        assert!(!is_gapset_filtration(&filt("12|1|1|1|1")));
    }

    #[test]
    fn validation() {
        let full = ResidueSet::full(4);
        let one: ResidueSet = [1].into_iter().collect();
        let two: ResidueSet = [2].into_iter().collect();
        assert!(MFiltration::new(4, vec![full, one]).is_ok());
        assert!(MFiltration::new(4, vec![one]).is_err());
        assert!(MFiltration::new(4, vec![full, one, two]).is_err());
        assert!(MFiltration::new(4, vec![full, ResidueSet::EMPTY]).is_err());
        assert!(MFiltration::new(4, vec![]).is_err());
        assert!(MFiltration::new(0, vec![]).is_err());
        assert!(MFiltration::new(65, vec![]).is_err());
        assert!(MExtension::new(3, vec![1, 2, 6]).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["", "1", "1|1|1", "1234|12|1", "123456789|9"] {
            assert_eq!(filt(s).to_string(), s);
        }
        let wide = "1,2,3,4,5,6,7,8,9,10|3,10|10";
        let f = filt(wide);
        assert_eq!(f.multiplicity(), 11);
        assert_eq!(f.genus(), 13);
        assert_eq!(f.to_string(), wide);
        assert!("12|3".parse::<MFiltration>().is_err());
        assert!("21".parse::<MFiltration>().is_err());
        assert!("1a".parse::<MFiltration>().is_err());
        assert!("10".parse::<MFiltration>().is_err());
    }

    #[test]
    fn gapset_filtration_from_gapset() {
        let g: Gapset = "1,2,3,4,6,7,11".parse().unwrap();
        assert_eq!(g.filtration(), Some(filt("1234|12|1")));
        assert_eq!(
            Gapset::empty().filtration(),
            Some(MFiltration::trivial(1).unwrap())
        );
    }
}
