use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// Series expansion needs a denominator whose constant term is a nonzero number.
    NotExpandable,
    BoundMismatch,
    NotContained,
    NotHorizontalStrip,
    InvalidPartition,
    LabelOutOfRange {
        a: u32,
        c: u32,
    },
    UndefinedAtBetaZero,
    DifferencePropertyViolation,
    MissingInhomogeneity {
        needed: usize,
        given: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by the zero function"),
            Error::NotExpandable => f.write_str("denominator has no invertible constant term in the series variables"),
            Error::BoundMismatch => f.write_str("truncated series with different bounds or variables"),
            Error::NotContained => f.write_str("inner partition is not contained in the outer one"),
            Error::NotHorizontalStrip => f.write_str("skew shape is not a horizontal strip"),
            Error::InvalidPartition => f.write_str("parts must be positive and weakly decreasing"),
            Error::LabelOutOfRange { a, c } => {
                write!(f, "fermionic line label out of range (a={}, c={})", a, c)
            }
            Error::UndefinedAtBetaZero => f.write_str("r-matrix entries are not defined at beta = 0"),
            Error::DifferencePropertyViolation => f.write_str("specialization does not have the difference property"),
            Error::MissingInhomogeneity { needed, given } => {
                write!(f, "need {} inhomogeneities, got {}", needed, given)
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
