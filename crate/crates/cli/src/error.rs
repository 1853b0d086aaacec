use std::fmt;

use ehrhart_core::eulerian::EulerianError;
use ehrhart_core::{Error, MatroidError, OracleError, PolyError, ZonotopeError};
use serde_json::{json, Value};

/// Process exit status attached to a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitKind {
    /// A mathematical precondition failed (rank, dependence, index range).
    Math,
    /// A size guard refused the computation.
    Resource,
    /// Two methods produced different answers.
    Disagreement,
    /// Unreadable file, malformed JSON or bad flags.
    Usage,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        match self {
            ExitKind::Math => 1,
            ExitKind::Resource => 2,
            ExitKind::Disagreement => 3,
            ExitKind::Usage => 4,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ExitKind,
    pub code: &'static str,
    pub message: String,
    pub details: Option<Value>,
}

impl CliError {
    pub fn new(kind: ExitKind, code: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, code, message: message.into(), details: None }
    }

    pub fn usage(code: &'static str, message: impl Into<String>) -> Self {
        Self::new(ExitKind::Usage, code, message)
    }

    pub fn math(code: &'static str, message: impl Into<String>) -> Self {
        Self::new(ExitKind::Math, code, message)
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut body = json!({
            "code": self.code,
            "exit": self.kind.code(),
            "message": self.message,
        });
        if let Some(details) = &self.details {
            body["details"] = details.clone();
        }
        json!({ "error": body })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

fn poly_code(e: &PolyError) -> &'static str {
    match e {
        PolyError::DegreeTooLarge { .. } => "DegreeTooLarge",
        PolyError::NonIntegral { .. } => "NonIntegral",
        PolyError::ZeroPolynomial => "ZeroPolynomial",
        PolyError::Empty => "EmptyPolynomial",
    }
}

fn matroid_code(e: &MatroidError) -> &'static str {
    match e {
        MatroidError::RaggedVector { .. } => "RaggedVector",
        MatroidError::TooManyVectors(_) => "TooManyVectors",
        MatroidError::IndexOutOfRange { .. } => "IndexOutOfRange",
        MatroidError::Dependent(_) => "Dependent",
        MatroidError::NotABasis(_) => "NotABasis",
    }
}

fn classify(e: &Error) -> (ExitKind, &'static str) {
    match e {
        Error::Poly(p) => (ExitKind::Math, poly_code(p)),
        Error::Matroid(m) => (ExitKind::Math, matroid_code(m)),
        Error::Eulerian(EulerianError::EnumerationLimit { .. }) => (ExitKind::Resource, "EnumerationLimit"),
        Error::Eulerian(EulerianError::IndexOutOfRange { .. }) => (ExitKind::Math, "IndexOutOfRange"),
        Error::Eulerian(_) => (ExitKind::Math, "InvalidPermutation"),
        Error::Zonotope(z) => match z {
            ZonotopeError::Matroid(m) => (ExitKind::Math, matroid_code(m)),
            ZonotopeError::Poly(p) => (ExitKind::Math, poly_code(p)),
            ZonotopeError::NotFullDimensional { .. } => (ExitKind::Math, "NotFullDimensional"),
            ZonotopeError::NotTotallyUnimodular(_) => (ExitKind::Math, "NotTotallyUnimodular"),
            ZonotopeError::WrongMode { .. } => (ExitKind::Math, "WrongMode"),
            ZonotopeError::OutOfRange { .. } => (ExitKind::Math, "OutOfRange"),
            ZonotopeError::DependentKey(_) => (ExitKind::Math, "DependentKey"),
        },
        Error::Oracle(o) => match o {
            OracleError::BoxTooLarge { .. } => (ExitKind::Resource, "BoxTooLarge"),
            OracleError::OffPolynomial { .. } => (ExitKind::Disagreement, "OffPolynomial"),
            OracleError::NotFullDimensional { .. } => (ExitKind::Math, "NotFullDimensional"),
            OracleError::DimensionMismatch { .. } => (ExitKind::Math, "DimensionMismatch"),
            OracleError::TooFewCounts { .. } => (ExitKind::Math, "TooFewCounts"),
            OracleError::Poly(p) => (ExitKind::Math, poly_code(p)),
        },
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (kind, code) = classify(&e);
        CliError::new(kind, code, e.to_string())
    }
}

macro_rules! via_core_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        })*
    };
}

via_core_error!(PolyError, MatroidError, EulerianError, ZonotopeError, OracleError);
