use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// Set elements must be strictly increasing.
    NotIncreasing,
    /// Gaps are positive integers.
    ZeroElement,
    ElementTooLarge(u32),
    MultiplicityOutOfRange(u32),
    /// The input is not an m-filtration; the payload names the violated rule.
    InvalidFiltration(&'static str),
    NotAnExtension {
        m: u32,
    },
    InvalidPermutation,
    ExponentLength {
        expected: usize,
        found: usize,
    },
    /// Compact forms need `e_0 >= 1`.
    ZeroLeadingExponent,
    ResidueOutOfRange {
        residue: u32,
        m: u32,
    },
    InvalidSemigroup(&'static str),
    /// Requested genus exceeds the configured resource bound.
    GenusCap {
        requested: u32,
        cap: u32,
    },
    /// The input of an injection is not a gapset filtration of the expected
    /// multiplicity.
    NotInDomain(&'static str),
    /// The image of a gapset filtration under an injection failed the gapset
    /// test. This would contradict the injection's construction.
    ContractViolation {
        m: u32,
        genus: u32,
        residue: u32,
        input: String,
    },
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotIncreasing => f.write_str("elements are not strictly increasing"),
            Error::ZeroElement => f.write_str("elements must be positive"),
            Error::ElementTooLarge(x) => write!(f, "element {x} exceeds the supported bound"),
            Error::MultiplicityOutOfRange(m) => {
                write!(f, "multiplicity {m} outside supported range 1..={}", crate::MAX_MULTIPLICITY)
            }
            Error::InvalidFiltration(why) => write!(f, "not an m-filtration: {why}"),
            Error::NotAnExtension { m } => write!(f, "set is not a {m}-extension"),
            Error::InvalidPermutation => f.write_str("sigma is not a permutation of [1, m-1]"),
            Error::ExponentLength { expected, found } => {
                write!(f, "exponent vector has length {found}, expected {expected}")
            }
            Error::ZeroLeadingExponent => f.write_str("leading exponent e_0 must be at least 1"),
            Error::ResidueOutOfRange { residue, m } => {
                write!(f, "residue {residue} outside [1, {}]", m.saturating_sub(1))
            }
            Error::InvalidSemigroup(why) => write!(f, "not a numerical semigroup: {why}"),
            Error::GenusCap { requested, cap } => {
                write!(f, "genus {requested} exceeds the configured cap {cap}")
            }
            Error::NotInDomain(why) => write!(f, "input outside the injection domain: {why}"),
            Error::ContractViolation { m, genus, residue, input } => write!(
                f,
                "insertion of {residue} maps {input} (m={m}, g={genus}) outside the gapset filtrations"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
