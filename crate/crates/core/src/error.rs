//! Library-wide error type and its exit-status classification.

use thiserror::Error;

use crate::certificate::CertificateError;
use crate::constructions::ConstructionError;
use crate::graph::GraphError;
use crate::matrix::MatrixError;
use crate::poly::PolyError;
use crate::search::SearchError;
use crate::spectral::SpectralError;
use crate::witness::WitnessError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}

/// Broad class of a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or unsupported input.
    Usage,
    /// The input was checked and the answer is negative.
    Negative,
    /// A cap or search bound was reached before an answer was found.
    ResourceBound,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Usage => 1,
            ErrorKind::Negative => 2,
            ErrorKind::ResourceBound => 3,
        }
    }
}

fn poly_kind(e: &PolyError) -> ErrorKind {
    match e {
        PolyError::DegreeAboveCap { .. } => ErrorKind::ResourceBound,
        _ => ErrorKind::Usage,
    }
}

fn spectral_kind(e: &SpectralError) -> ErrorKind {
    match e {
        SpectralError::OrderAboveCap { .. } => ErrorKind::ResourceBound,
        SpectralError::Poly(p) => poly_kind(p),
        _ => ErrorKind::Usage,
    }
}

fn search_kind(e: &SearchError) -> ErrorKind {
    match e {
        SearchError::CapExceeded { .. } | SearchError::NotFound { .. } => ErrorKind::ResourceBound,
        SearchError::Spectral(s) => spectral_kind(s),
        SearchError::Poly(p) => poly_kind(p),
        _ => ErrorKind::Usage,
    }
}

fn witness_kind(e: &WitnessError) -> ErrorKind {
    match e {
        WitnessError::Search(s) => search_kind(s),
        WitnessError::Rejected { .. } | WitnessError::Io { .. } => ErrorKind::Usage,
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Graph(_) | Error::Matrix(_) => ErrorKind::Usage,
            Error::Poly(e) => poly_kind(e),
            Error::Spectral(e) => spectral_kind(e),
            Error::Search(e) => search_kind(e),
            Error::Witness(e) => witness_kind(e),
            Error::Construction(e) => match e {
                ConstructionError::NotUnimodal(_) => ErrorKind::Negative,
                ConstructionError::Poly(p) => poly_kind(p),
                ConstructionError::Search(s) => search_kind(s),
                ConstructionError::Witness(w) => witness_kind(w),
                _ => ErrorKind::Usage,
            },
            Error::Certificate(e) => match e {
                CertificateError::Spectral(s) => spectral_kind(s),
                CertificateError::Poly(p) => poly_kind(p),
                _ => ErrorKind::Usage,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;
    use crate::search::SearchBound;

    #[test]
    fn bounds_are_not_negatives() {
        let nf = SearchError::NotFound {
            poly: IntPoly::x(),
            bound: SearchBound::trees(3),
        };
        let e = Error::from(ConstructionError::Witness(WitnessError::Search(nf)));
        assert_eq!(e.kind(), ErrorKind::ResourceBound);
        assert_eq!(e.kind().exit_code(), 3);
        let e = Error::from(ConstructionError::NotUnimodal(IntPoly::x()));
        assert_eq!(e.kind().exit_code(), 2);
        let e = Error::from(GraphError::SelfLoop(0));
        assert_eq!(e.kind().exit_code(), 1);
    }
}
