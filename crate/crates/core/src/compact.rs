//! The compact `(sigma, e)` representation of m-filtrations.
//!
//! Every m-filtration refines to a maximal chain
//! `[1, m-1] = F'_0 ⊋ F'_1 ⊋ ... ⊋ F'_{m-2}` where `F'_i` drops `sigma(i)`
//! from `F'_{i-1}`. The filtration is then `F'_0` repeated `e_0` times,
//! `F'_1` repeated `e_1` times, and so on.
//!
//! When some `e_i` is zero the chain is not determined by the filtration, so
//! several `sigma` describe the same filtration. Equality of [`CompactForm`]
//! is equality of expansions; [`CompactForm::canonical`] picks the
//! lexicographically smallest `sigma`.

use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::filtration::{check_multiplicity, MFiltration};
use crate::gapset::{parse_list, write_list, NumericalSemigroup};
use crate::perm::is_permutation;
use crate::residue::ResidueSet;

#[derive(Clone)]
pub struct CompactForm {
    m: u32,
    sigma: Vec<u32>,
    exponents: Vec<u32>,
}

impl CompactForm {
    /// `sigma` in window notation (`sigma[i - 1] = σ(i)`), `exponents` are
    /// `e_0, ..., e_{m-2}` with `e_0 >= 1`. For `m = 1` both are empty.
    pub fn new(m: u32, sigma: Vec<u32>, exponents: Vec<u32>) -> Result<Self> {
        check_multiplicity(m)?;
        let len = (m - 1) as usize;
        if sigma.len() != len || !is_permutation(&sigma) {
            return Err(Error::InvalidPermutation);
        }
        if exponents.len() != len {
            return Err(Error::ExponentLength {
                expected: len,
                found: exponents.len(),
            });
        }
        if m >= 2 && exponents[0] == 0 {
            return Err(Error::ZeroLeadingExponent);
        }
        Ok(CompactForm {
            m,
            sigma,
            exponents,
        })
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `σ(i)` for `i` in `[1, m-1]`.
    pub fn sigma_at(&self, i: usize) -> u32 {
        self.sigma[i - 1]
    }

    /// `P_i = e_0 + ... + e_{i-1}` for `i` in `[0, m-1]`.
    pub fn prefix_sums(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        out.push(0);
        let mut acc = 0;
        for &e in &self.exponents {
            acc += e;
            out.push(acc);
        }
        out
    }

    /// `Σ e_i (m - 1 - i)`.
    pub fn genus(&self) -> u32 {
        let m = self.m;
        self.exponents
            .iter()
            .zip(0u32..)
            .map(|(&e, i)| e * (m - 1 - i))
            .sum()
    }

    /// `F'_i = [1, m-1] \ {σ(1), ..., σ(i)}`.
    pub fn level(&self, i: usize) -> ResidueSet {
        self.sigma[..i]
            .iter()
            .fold(ResidueSet::full(self.m), |acc, &r| acc.without(r))
    }

    pub fn expand(&self) -> MFiltration {
        let mut parts = Vec::with_capacity(self.exponents.iter().sum::<u32>() as usize);
        let mut level = ResidueSet::full(self.m);
        for (i, &e) in self.exponents.iter().enumerate() {
            if i > 0 {
                level = level.without(self.sigma[i - 1]);
            }
            parts.extend(core::iter::repeat_n(level, e as usize));
        }
        MFiltration::from_parts_unchecked(self.m, parts)
    }

    /// The lexicographically smallest `sigma` with the same expansion.
    ///
    /// Positions of nonzero exponents cut `sigma` into blocks whose contents
    /// are fixed by the filtration; only the order inside a block is free.
    pub fn canonical_sigma(&self) -> Vec<u32> {
        let mut sigma = self.sigma.clone();
        let mut start = 0;
        for (i, &e) in self.exponents.iter().enumerate().skip(1) {
            if e > 0 {
                sigma[start..i].sort_unstable();
                start = i;
            }
        }
        sigma[start..].sort_unstable();
        sigma
    }

    pub fn canonical(&self) -> CompactForm {
        CompactForm {
            m: self.m,
            sigma: self.canonical_sigma(),
            exponents: self.exponents.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.sigma == self.canonical_sigma()
    }
}

impl PartialEq for CompactForm {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
            && self.exponents == other.exponents
            && self.canonical_sigma() == other.canonical_sigma()
    }
}

impl Eq for CompactForm {}

impl Hash for CompactForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.exponents.hash(state);
        self.canonical_sigma().hash(state);
    }
}

impl fmt::Debug for CompactForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompactForm({self})")
    }
}

/// `m=5;sigma=3,4,2,1;e=1,0,1,1`
impl fmt::Display for CompactForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={};sigma=", self.m)?;
        write_list(f, &self.sigma)?;
        f.write_str(";e=")?;
        write_list(f, &self.exponents)
    }
}

impl FromStr for CompactForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut m = None;
        let mut sigma = None;
        let mut e = None;
        for field in s.trim().split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(alloc::format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "m" => {
                    let v = value.trim();
                    m = Some(
                        v.parse::<u32>()
                            .map_err(|_| Error::Parse(alloc::format!("invalid m {v:?}")))?,
                    )
                }
                "sigma" => sigma = Some(parse_list(value)?),
                "e" => e = Some(parse_list(value)?),
                other => return Err(Error::Parse(alloc::format!("unknown field {other:?}"))),
            }
        }
        match (m, sigma, e) {
            (Some(m), Some(sigma), Some(e)) => CompactForm::new(m, sigma, e),
            _ => Err(Error::Parse("compact form needs m, sigma and e".into())),
        }
    }
}

/// Free-function form of [`CompactForm::expand`].
pub fn expand(c: &CompactForm) -> MFiltration {
    c.expand()
}

/// A compact form of `f` with canonical `sigma`.
pub fn compact_form(f: &MFiltration) -> CompactForm {
    let m = f.multiplicity();
    if m == 1 {
        return CompactForm {
            m,
            sigma: Vec::new(),
            exponents: Vec::new(),
        };
    }
    let top = m - 1;
    let mut exponents = alloc::vec![0u32; top as usize];
    let mut sigma = Vec::with_capacity(top as usize);
    let mut previous = ResidueSet::full(m);
    for &part in f.parts() {
        // parts are nested and nonempty, so |part| in [1, m-1]
        sigma.extend(previous.difference(part).iter());
        exponents[(top - part.len()) as usize] += 1;
        previous = part;
    }
    sigma.extend(previous.iter());
    CompactForm {
        m,
        sigma,
        exponents,
    }
}

/// Kunz coordinates `k_1, ..., k_{m-1}`: `r + m k_r` is the smallest
/// semigroup element congruent to `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KunzVector {
    m: u32,
    k: Vec<u32>,
}

impl KunzVector {
    pub fn new(m: u32, k: Vec<u32>) -> Result<Self> {
        check_multiplicity(m)?;
        if k.len() != (m - 1) as usize {
            return Err(Error::ExponentLength {
                expected: (m - 1) as usize,
                found: k.len(),
            });
        }
        Ok(KunzVector { m, k })
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    /// `k_r` for `r` in `[1, m-1]`.
    pub fn get(&self, r: u32) -> u32 {
        self.k[(r - 1) as usize]
    }

    pub fn coordinates(&self) -> &[u32] {
        &self.k
    }

    /// Apéry set element `w(r) = r + m k_r`.
    pub fn apery(&self, r: u32) -> u32 {
        if r == 0 {
            0
        } else {
            r + self.m * self.get(r)
        }
    }
}

/// `(k_1,...,k_{m-1})`
impl fmt::Display for KunzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_list(f, &self.k)?;
        f.write_str(")")
    }
}

/// `k_{σ(i)} = e_0 + ... + e_{i-1}`.
pub fn kunz_coordinates(c: &CompactForm) -> KunzVector {
    let prefix = c.prefix_sums();
    let mut k = alloc::vec![0; c.sigma.len()];
    for (i, &r) in c.sigma.iter().enumerate() {
        k[(r - 1) as usize] = prefix[i + 1];
    }
    KunzVector { m: c.m, k }
}

/// Reads the Kunz coordinates off the smallest member of each residue class.
pub fn kunz_of_semigroup(s: &NumericalSemigroup) -> KunzVector {
    let m = s.multiplicity();
    let k = (1..m)
        .map(|r| {
            let mut w = r;
            while !s.contains(w) {
                w += m;
            }
            (w - r) / m
        })
        .collect();
    KunzVector { m, k }
}

/// The complement of `tau(expand(c))`, built residue-wise: class `σ(i)`
/// enters the semigroup at `σ(i) + m P_i`.
///
/// Only elements up to the conductor are materialized.
pub fn semigroup_of(c: &CompactForm) -> NumericalSemigroup {
    let kunz = kunz_coordinates(c);
    let m = c.m;
    // largest gap is one step below the latest entry point
    let conductor = (1..m).map(|r| kunz.apery(r) - m + 1).max().unwrap_or(0);
    let small = (0..=conductor)
        .filter(|&n| n >= kunz.apery(n % m))
        .collect();
    NumericalSemigroup::from_small_elements(small)
        .expect("residue formula yields a valid truncation")
}
