//! Error types, one small enum per subsystem.

use serde::Serialize;
use std::fmt;

/// Structural reasons a cover or threefold input falls outside the elliptic
/// pipeline. These are reported as data (CLI exit code 3), not processed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegeneracyReport {
    /// Branch curve has repeated components; the cover is ramified in a curve
    /// of lower degree and the fibration machinery does not apply.
    MultipleComponents,
    /// Base point multiplicity >= 4: the induced bundle is rational.
    RationalFibration { multiplicity: u32 },
    /// Base point of multiplicity 3: outside the double-point pipeline.
    TripleBasePoint,
    /// Branch curve is not a sextic.
    NotDegreeSix { degree: u32 },
    /// Weighted model whose z³ coefficient vanishes: the threefold fibers
    /// over a K3 surface instead.
    VertexCubic,
}

impl fmt::Display for DegeneracyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegeneracyReport::MultipleComponents => {
                write!(f, "branch curve has multiple components")
            }
            DegeneracyReport::RationalFibration { multiplicity } => {
                write!(
                    f,
                    "base point has multiplicity {multiplicity} >= 4: rational fibration"
                )
            }
            DegeneracyReport::TripleBasePoint => {
                write!(f, "base point has multiplicity 3: unsupported")
            }
            DegeneracyReport::NotDegreeSix { degree } => {
                write!(f, "branch curve has degree {degree}, expected 6")
            }
            DegeneracyReport::VertexCubic => {
                write!(
                    f,
                    "z³ coefficient vanishes: threefold is a P¹-fibration over a K3 surface"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibrationError {
    Degenerate(DegeneracyReport),
    /// Base point is smooth or off the branch curve.
    NotDoublePoint {
        multiplicity: u32,
    },
    /// Pencil line coincides with the multisection line.
    FiberDirection,
    Curve(CurveError),
    Elliptic(EllipticError),
    Arith(ArithError),
}

impl fmt::Display for FibrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibrationError::Degenerate(r) => write!(f, "degenerate: {r}"),
            FibrationError::NotDoublePoint { multiplicity } => {
                write!(
                    f,
                    "base point has multiplicity {multiplicity}, need exactly 2"
                )
            }
            FibrationError::FiberDirection => {
                write!(f, "multisection contains the fiber direction")
            }
            FibrationError::Curve(e) => write!(f, "{e}"),
            FibrationError::Elliptic(e) => write!(f, "{e}"),
            FibrationError::Arith(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FibrationError {}

impl From<CurveError> for FibrationError {
    fn from(e: CurveError) -> Self {
        FibrationError::Curve(e)
    }
}

impl From<EllipticError> for FibrationError {
    fn from(e: EllipticError) -> Self {
        FibrationError::Elliptic(e)
    }
}

impl From<ArithError> for FibrationError {
    fn from(e: ArithError) -> Self {
        FibrationError::Arith(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    ZeroPolynomial,
    DivisionByZeroPoly,
    InexactDivision,
    UndefinedResultant,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::ZeroPolynomial => write!(f, "zero polynomial"),
            ArithError::DivisionByZeroPoly => write!(f, "division by the zero polynomial"),
            ArithError::InexactDivision => write!(f, "polynomial division left a remainder"),
            ArithError::UndefinedResultant => write!(f, "undefined resultant: both inputs zero"),
        }
    }
}

impl std::error::Error for ArithError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    ZeroPolynomial,
    NotSingular,
    SmoothPointRequired,
    PointNotOnCurve,
    PointIsSingular,
    LineIsComponent,
    DuplicateLines,
    WrongLineCount(usize),
    DegreeTooLarge(u32),
    Arith(ArithError),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::ZeroPolynomial => write!(f, "zero polynomial does not define a curve"),
            CurveError::NotSingular => write!(f, "not singular: point is smooth or off the curve"),
            CurveError::SmoothPointRequired => {
                write!(f, "point must be a smooth point of the curve")
            }
            CurveError::PointNotOnCurve => write!(f, "point does not lie on the curve"),
            CurveError::PointIsSingular => write!(f, "point is a singular point of the curve"),
            CurveError::LineIsComponent => write!(f, "line is a component of the curve"),
            CurveError::DuplicateLines => write!(f, "configuration contains duplicate lines"),
            CurveError::WrongLineCount(n) => write!(f, "expected 6 lines, got {n}"),
            CurveError::DegreeTooLarge(d) => {
                write!(f, "curve degree {d} exceeds the supported range")
            }
            CurveError::Arith(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CurveError {}

impl From<ArithError> for CurveError {
    fn from(e: ArithError) -> Self {
        CurveError::Arith(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EllipticError {
    SingularCurve,
    OffCurve,
    HeightOverflow,
    DegenerateQuartic,
    NoMarkedPoint,
    MapUndefined,
    Arith(ArithError),
}

impl fmt::Display for EllipticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticError::SingularCurve => {
                write!(f, "discriminant vanishes: not an elliptic curve")
            }
            EllipticError::OffCurve => write!(f, "point does not satisfy the curve equation"),
            EllipticError::HeightOverflow => {
                write!(f, "height overflow: coordinate exceeds the bit-length cap")
            }
            EllipticError::DegenerateQuartic => {
                write!(f, "degenerate fiber: quartic is not square-free")
            }
            EllipticError::NoMarkedPoint => {
                write!(f, "no rational point supplied on the quartic model")
            }
            EllipticError::MapUndefined => {
                write!(f, "model map undefined at this point (exceptional set)")
            }
            EllipticError::Arith(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EllipticError {}

impl From<ArithError> for EllipticError {
    fn from(e: ArithError) -> Self {
        EllipticError::Arith(e)
    }
}
