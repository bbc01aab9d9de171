use core::fmt;

use crate::partition::{Node, Partition};

/// Errors raised by the combinatorial operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Parts were not weakly decreasing.
    NotAPartition,
    /// Dominance comparison of partitions with different degrees.
    IncomparableDegrees { left: usize, right: usize },
    /// The node set is not a rim hook of the partition.
    NotARimHook,
    /// A reflection was requested for a partition outside `[0, m(l-1)]^n`.
    OutOfReciprocityRange,
    /// Partition has more parts than the padding length allows.
    TooManyParts { len: usize, max: usize },
    /// Concatenation `(alpha | rho)` with `alpha` empty or its last part below `rho_1`.
    IncompatiblePair,
    /// The operation needs an `l`-regular partition.
    NotRegular(Partition),
    /// The operation needs an `l`-restricted label.
    LabelNotRestricted(Partition),
    /// No partition extends the given one by an `l`-edge with the requested data.
    NoEdgeExtension,
    /// More than one partition extends the given one by an `l`-edge.
    AmbiguousExtension,
    /// Distinguished partitions are only defined for `0 < m < l`.
    DistinguishedUndefined { m: usize, l: usize },
    /// A stated precondition of a constructive lemma does not hold.
    PreconditionViolated(&'static str),
    /// The modulus must satisfy `l >= 2`.
    InvalidModulus(usize),
    /// Residue index outside `0..l`.
    ResidueOutOfRange { residue: usize, l: usize },
    /// A polynomial that should be symmetric is not.
    NotSymmetric,
    /// An internal exactness check failed (divided powers, positivity, termination).
    Consistency(&'static str),
    /// Arithmetic overflow in part sizes or coefficients.
    Overflow,
    /// A node that was expected to be removable is not.
    NotRemovable(Node),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPartition => write!(f, "parts are not weakly decreasing"),
            Error::IncomparableDegrees { left, right } => {
                write!(f, "incomparable degrees: {left} and {right}")
            }
            Error::NotARimHook => write!(f, "not a rim hook"),
            Error::OutOfReciprocityRange => write!(f, "out of reciprocity range"),
            Error::TooManyParts { len, max } => {
                write!(f, "partition has {len} parts, more than {max}")
            }
            Error::IncompatiblePair => write!(f, "incompatible pair"),
            Error::NotRegular(p) => write!(f, "{p} is not l-regular"),
            Error::LabelNotRestricted(p) => write!(f, "label not restricted: {p}"),
            Error::NoEdgeExtension => write!(f, "no edge extension"),
            Error::AmbiguousExtension => write!(f, "ambiguous extension"),
            Error::DistinguishedUndefined { m, l } => {
                write!(f, "distinguished undefined for m={m}, l={l}")
            }
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::InvalidModulus(l) => write!(f, "modulus l={l} must be at least 2"),
            Error::ResidueOutOfRange { residue, l } => {
                write!(f, "residue {residue} out of range for l={l}")
            }
            Error::NotSymmetric => write!(f, "not symmetric"),
            Error::Consistency(what) => write!(f, "internal consistency check failed: {what}"),
            Error::Overflow => write!(f, "arithmetic overflow"),
            Error::NotRemovable(n) => write!(f, "node {n} is not removable"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
