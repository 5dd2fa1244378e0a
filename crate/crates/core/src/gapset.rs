//! Gapsets and numerical semigroups as plain values.
//!
//! A [`Gapset`] is any finite set of positive integers; whether it is the gap
//! set of a numerical semigroup is the separate predicate [`is_gapset`].
//! Candidate sets are built freely and tested afterwards.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::MAX_ELEMENT;

/// True iff for every `z` in `set` and every split `z = x + y` with
/// `x, y >= 1`, at least one summand lies in `set`.
///
/// `set` must be strictly increasing. Splits are unordered, so only
/// `x <= z / 2` is inspected.
pub fn is_gapset(set: &[u32]) -> bool {
    let contains = |x: u32| set.binary_search(&x).is_ok();
    set.iter()
        .all(|&z| (1..=z / 2).all(|x| contains(x) || contains(z - x)))
}

/// Finite set of positive integers, stored strictly increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gapset {
    elements: Vec<u32>,
}

impl Gapset {
    pub fn empty() -> Self {
        Gapset {
            elements: Vec::new(),
        }
    }

    /// Wraps a strictly increasing sequence of positive integers. The gapset
    /// property itself is not checked here; see [`Gapset::is_valid`].
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.first() == Some(&0) {
            return Err(Error::ZeroElement);
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        if let Some(&x) = elements.last().filter(|&&x| x >= MAX_ELEMENT) {
            return Err(Error::ElementTooLarge(x));
        }
        Ok(Gapset { elements })
    }

    /// Builds a gapset from elements in any order, dropping duplicates.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(iter: I) -> Result<Self> {
        let mut elements: Vec<u32> = iter.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Gapset::new(elements)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<u32> {
        self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        is_gapset(&self.elements)
    }

    pub fn genus(&self) -> u32 {
        self.elements.len() as u32
    }

    /// Smallest `m >= 1` not in the set.
    pub fn multiplicity(&self) -> u32 {
        // elements are increasing and positive, so the first mismatch with
        // 1, 2, 3, ... is the answer
        self.elements
            .iter()
            .zip(1u32..)
            .find(|(&x, i)| x != *i)
            .map_or(self.elements.len() as u32 + 1, |(_, i)| i)
    }

    /// Largest element, or -1 for the empty set.
    pub fn frobenius(&self) -> i64 {
        self.elements.last().map_or(-1, |&x| i64::from(x))
    }

    /// `1 + max`, or 0 for the empty set.
    pub fn conductor(&self) -> u32 {
        self.elements.last().map_or(0, |&x| x + 1)
    }

    /// `ceil(conductor / multiplicity)`.
    pub fn depth(&self) -> u32 {
        self.conductor().div_ceil(self.multiplicity())
    }

    /// Slices `G_i = G ∩ [im + 1, (i + 1)m - 1]` for `i < depth`.
    ///
    /// For a valid gapset the parts cover the set; for an arbitrary set,
    /// elements that are multiples of `m` are not represented.
    pub fn canonical_partition(&self) -> CanonicalPartition {
        let m = self.multiplicity();
        let depth = self.depth() as usize;
        let mut parts = alloc::vec![Vec::new(); depth];
        for &x in &self.elements {
            if x % m != 0 {
                parts[(x / m) as usize].push(x);
            }
        }
        CanonicalPartition { m, parts }
    }

    /// The semigroup `N \ G`, truncated at the conductor.
    pub fn complement(&self) -> NumericalSemigroup {
        let c = self.conductor();
        let small_elements = (0..=c).filter(|&x| !self.contains(x)).collect();
        NumericalSemigroup { small_elements }
    }
}

/// Free-function form of [`Gapset::complement`].
pub fn complement(g: &Gapset) -> NumericalSemigroup {
    g.complement()
}

impl fmt::Debug for Gapset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.elements).finish()
    }
}

/// Comma separated ascending integers; the empty string is the empty set.
impl fmt::Display for Gapset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.elements)
    }
}

impl FromStr for Gapset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gapset::new(parse_list(s)?)
    }
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[u32]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(alloc::format!("invalid integer {tok:?}")))
        })
        .collect()
}

/// The slices `(G_0, ..., G_{q-1})` of a gapset of multiplicity `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPartition {
    pub m: u32,
    pub parts: Vec<Vec<u32>>,
}

impl CanonicalPartition {
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// `G_0 = [1, m-1]`, each part inside its window, last part nonempty and
    /// `G_{i+1} ⊆ m + G_i`.
    pub fn satisfies_invariants(&self) -> bool {
        let m = self.m;
        let Some(first) = self.parts.first() else {
            return true;
        };
        if !first.iter().copied().eq(1..m) {
            return false;
        }
        if self.parts.last().is_some_and(Vec::is_empty) {
            return false;
        }
        let windows_ok = self.parts.iter().enumerate().all(|(i, part)| {
            let lo = i as u32 * m + 1;
            part.iter().all(|&x| x >= lo && x < lo + m - 1)
        });
        windows_ok
            && self.parts.windows(2).all(|w| {
                w[1].iter()
                    .all(|&x| w[0].binary_search(&(x - self.m)).is_ok())
            })
    }
}

/// A numerical semigroup stored as its elements up to and including the
/// conductor `c`. Every integer `>= c` is implicitly a member.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NumericalSemigroup {
    small_elements: Vec<u32>,
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            small_elements: alloc::vec![0],
        }
    }

    /// Validates the truncated representation: strictly increasing, starts at
    /// 0, ends at the conductor (so the element before it is missing).
    /// Addition stability is a separate check, [`Self::is_addition_stable`].
    pub fn from_small_elements(small_elements: Vec<u32>) -> Result<Self> {
        if small_elements.first() != Some(&0) {
            return Err(Error::InvalidSemigroup("must contain 0"));
        }
        if small_elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing);
        }
        let n = small_elements.len();
        let c = small_elements[n - 1];
        if c >= MAX_ELEMENT {
            return Err(Error::ElementTooLarge(c));
        }
        if c > 0 && n >= 2 && small_elements[n - 2] == c - 1 {
            return Err(Error::InvalidSemigroup("last element is not the conductor"));
        }
        Ok(NumericalSemigroup { small_elements })
    }

    pub(crate) fn from_small_elements_unchecked(small_elements: Vec<u32>) -> Self {
        debug_assert!(NumericalSemigroup::from_small_elements(small_elements.clone()).is_ok());
        NumericalSemigroup { small_elements }
    }

    pub fn small_elements(&self) -> &[u32] {
        &self.small_elements
    }

    pub fn conductor(&self) -> u32 {
        *self.small_elements.last().expect("contains 0")
    }

    pub fn frobenius(&self) -> i64 {
        i64::from(self.conductor()) - 1
    }

    pub fn contains(&self, x: u32) -> bool {
        x >= self.conductor() || self.small_elements.binary_search(&x).is_ok()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        self.small_elements.get(1).copied().unwrap_or(1)
    }

    pub fn genus(&self) -> u32 {
        self.conductor() + 1 - self.small_elements.len() as u32
    }

    pub fn gapset(&self) -> Gapset {
        let elements = (1..self.conductor())
            .filter(|&x| !self.contains(x))
            .collect();
        Gapset { elements }
    }

    /// Pairwise check on the stored elements. Sums reaching the conductor
    /// are members automatically.
    pub fn is_addition_stable(&self) -> bool {
        let c = self.conductor();
        let s = &self.small_elements;
        s.iter().enumerate().skip(1).all(|(i, &a)| {
            s[i..]
                .iter()
                .take_while(|&&b| a + b < c)
                .all(|&b| self.contains(a + b))
        })
    }

    /// The unique minimal generating set.
    ///
    /// Generators lie below `c + m`: anything larger is `m` plus a member.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let m = self.multiplicity();
        let c = self.conductor();
        let bound = (c + m - 1).max(m);
        (m..=bound)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(m..=x / 2).any(|y| self.contains(y) && self.contains(x - y)))
            .collect()
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators().len()
    }
}

/// Free-function form of [`NumericalSemigroup::minimal_generators`].
pub fn minimal_generators(s: &NumericalSemigroup) -> Vec<u32> {
    s.minimal_generators()
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({self})")
    }
}

/// Generator notation, e.g. `<5,8,9,12>`.
impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        write_list(f, &self.minimal_generators())?;
        f.write_str(">")
    }
}

impl NumericalSemigroup {
    /// Comma list of the stored elements, conductor included.
    pub fn small_elements_string(&self) -> String {
        let mut out = String::new();
        for (i, x) in self.small_elements.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&x.to_string());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gs(v: &[u32]) -> Gapset {
        Gapset::new(v.to_vec()).unwrap()
    }

    const EX: &[u32] = &[1, 2, 3, 4, 6, 7, 11];

    #[test]
    fn gapset_predicate() {
        assert!(is_gapset(EX));
        assert!(is_gapset(&[]));
        assert!(!is_gapset(&[2]));
        assert!(is_gapset(&[1, 2, 3, 4, 6, 7, 11, 12]));
    }

    #[test]
    fn invariants_of_worked_example() {
        let g = gs(EX);
        assert_eq!(g.multiplicity(), 5);
        assert_eq!(g.frobenius(), 11);
        assert_eq!(g.conductor(), 12);
        assert_eq!(g.genus(), 7);
        assert_eq!(g.depth(), 3);
    }

    #[test]
    fn empty_gapset_conventions() {
        let g = Gapset::empty();
        assert_eq!(g.multiplicity(), 1);
        assert_eq!(g.frobenius(), -1);
        assert_eq!(g.conductor(), 0);
        assert_eq!(g.genus(), 0);
        assert_eq!(g.depth(), 0);
        assert_eq!(g.canonical_partition().depth(), 0);
        assert_eq!(g.complement().small_elements(), [0]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(gs(&[1, 2]).multiplicity(), 3);
        assert_eq!(gs(&[1]).frobenius(), 1);
        assert_eq!(gs(&[1, 2]).conductor(), 3);
        assert_eq!(gs(&[1, 3]).genus(), 2);
        assert_eq!(gs(&[1, 2]).depth(), 1);
    }

    #[test]
    fn canonical_partitions() {
        let p = gs(EX).canonical_partition();
        assert_eq!(p.parts, vec![vec![1, 2, 3, 4], vec![6, 7], vec![11]]);
        assert!(p.satisfies_invariants());
        assert_eq!(gs(&[1, 2]).canonical_partition().parts, vec![vec![1, 2]]);
        let p = gs(&[1, 2, 3, 5, 6, 9]).canonical_partition();
        assert_eq!(p.m, 4);
        assert_eq!(p.parts, vec![vec![1, 2, 3], vec![5, 6], vec![9]]);
    }

    #[test]
    fn complements() {
        assert_eq!(gs(EX).complement().small_elements(), [0, 5, 8, 9, 10, 12]);
        assert_eq!(gs(&[1]).complement().small_elements(), [0, 2]);
        assert_eq!(gs(EX).complement().gapset(), gs(EX));
    }

    #[test]
    fn generators() {
        assert_eq!(gs(EX).complement().minimal_generators(), [5, 8, 9, 12]);
        assert_eq!(gs(EX).complement().embedding_dimension(), 4);
        assert_eq!(NumericalSemigroup::naturals().minimal_generators(), [1]);
        assert_eq!(gs(&[1, 2]).complement().minimal_generators(), [3, 4, 5]);
        assert_eq!(gs(&[1]).complement().minimal_generators(), [2, 3]);
    }

    #[test]
    fn semigroup_accessors() {
        let s = gs(EX).complement();
        assert_eq!(s.multiplicity(), 5);
        assert_eq!(s.genus(), 7);
        assert_eq!(s.frobenius(), 11);
        assert!(s.contains(100));
        assert!(!s.contains(11));
        assert!(s.is_addition_stable());
        assert_eq!(s.to_string(), "<5,8,9,12>");
        assert_eq!(NumericalSemigroup::naturals().multiplicity(), 1);
        assert_eq!(NumericalSemigroup::naturals().genus(), 0);
    }

    #[test]
    fn semigroup_validation() {
        assert!(NumericalSemigroup::from_small_elements(vec![0, 5, 8, 9, 10, 12]).is_ok());
        assert!(NumericalSemigroup::from_small_elements(vec![5, 8]).is_err());
        assert!(NumericalSemigroup::from_small_elements(vec![0, 1]).is_err());
        assert!(NumericalSemigroup::from_small_elements(vec![0, 3, 3]).is_err());
        assert!(NumericalSemigroup::from_small_elements(vec![0, 3, 4]).is_err());
        let s = NumericalSemigroup::from_small_elements(vec![0, 3]).unwrap();
        assert_eq!(s.gapset(), gs(&[1, 2]));
    }

    #[test]
    fn text_format() {
        assert_eq!(gs(EX).to_string(), "1,2,3,4,6,7,11");
        assert_eq!(Gapset::empty().to_string(), "");
        assert_eq!("1,2,3,4,6,7,11".parse::<Gapset>().unwrap(), gs(EX));
        assert_eq!("".parse::<Gapset>().unwrap(), Gapset::empty());
        assert_eq!("3,1".parse::<Gapset>(), Err(Error::NotIncreasing));
        assert_eq!("0,1".parse::<Gapset>(), Err(Error::ZeroElement));
        assert!("1,x".parse::<Gapset>().is_err());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Gapset::new(vec![2, 2]), Err(Error::NotIncreasing));
        assert_eq!(
            Gapset::new(vec![MAX_ELEMENT]),
            Err(Error::ElementTooLarge(MAX_ELEMENT))
        );
        assert_eq!(Gapset::from_unsorted([3, 1, 3]).unwrap(), gs(&[1, 3]));
    }
}
