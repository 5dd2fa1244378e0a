//! Test-only generators that do not go through the crate's enumerators.

#![allow(dead_code)]

use gapset_core::{MFiltration, ResidueSet};

/// Every m-filtration of genus at most `max_genus`, built by appending
/// nonempty subsets of the last part.
pub fn all_filtrations(m: u32, max_genus: u32) -> Vec<MFiltration> {
    let mut out = Vec::new();
    if m == 1 {
        out.push(MFiltration::new(1, Vec::new()).unwrap());
        return out;
    }
    let full = ResidueSet::full(m);
    if full.len() > max_genus {
        return out;
    }
    let mut parts = vec![full];
    extend_chain(m, &mut parts, full.len(), max_genus, &mut out);
    out
}

fn extend_chain(
    m: u32,
    parts: &mut Vec<ResidueSet>,
    genus: u32,
    max_genus: u32,
    out: &mut Vec<MFiltration>,
) {
    out.push(MFiltration::new(m, parts.clone()).unwrap());
    let last = parts[parts.len() - 1].bits();
    // nonempty submasks of the last part
    let mut sub = last;
    while sub != 0 {
        let next = ResidueSet::from_bits(sub);
        if genus + next.len() <= max_genus {
            parts.push(next);
            extend_chain(m, parts, genus + next.len(), max_genus, out);
            parts.pop();
        }
        sub = (sub - 1) & last;
    }
}

/// Addition-stability straight from the definition on `[0, 2c]`.
pub fn brute_force_is_gapset(set: &[u32]) -> bool {
    let Some(&max) = set.last() else { return true };
    let in_s = |x: u32| !set.contains(&x);
    let bound = 2 * (max + 1);
    (1..=bound).all(|a| (a..=bound).all(|b| !(in_s(a) && in_s(b)) || in_s(a + b)))
}

/// `(12)^r` followed by `s` copies of `{tail}`.
pub fn m3_filtration(r: u32, tail: u32, s: u32) -> MFiltration {
    let mut parts = vec![ResidueSet::full(3); r as usize];
    parts.extend(std::iter::repeat_n(
        ResidueSet::EMPTY.with(tail),
        s as usize,
    ));
    MFiltration::new(3, parts).unwrap()
}

/// `(123)^a` then `b` copies of `middle` then `c` copies of `{last}`.
pub fn m4_filtration(a: u32, middle: &[u32], b: u32, last: u32, c: u32) -> Option<MFiltration> {
    let mid: ResidueSet = middle.iter().copied().collect();
    let mut parts = vec![ResidueSet::full(4); a as usize];
    parts.extend(std::iter::repeat_n(mid, b as usize));
    parts.extend(std::iter::repeat_n(
        ResidueSet::EMPTY.with(last),
        c as usize,
    ));
    MFiltration::new(4, parts).ok()
}
