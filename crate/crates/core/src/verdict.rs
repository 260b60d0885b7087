use crate::exactla::Mat;

/// Tri-state outcome of a decision procedure.
///
/// `CertifiedYes` always carries a witness that has been re-verified by
/// exact arithmetic before being returned.  `CertifiedNo` names a certified
/// obstruction (a dimension mismatch, an inconsistent linear system, or a
/// polynomial proved identically zero on a sufficient grid).
/// `Inconclusive` is reachable only when a bounded randomized search was
/// exhausted; it never claims nonexistence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<C> {
    CertifiedYes { certificate: C, reason: String },
    CertifiedNo { reason: String },
    Inconclusive { reason: String },
}

impl<C> Verdict<C> {
    pub fn yes(certificate: C, reason: impl Into<String>) -> Self {
        Verdict::CertifiedYes {
            certificate,
            reason: reason.into(),
        }
    }

    pub fn no(reason: impl Into<String>) -> Self {
        Verdict::CertifiedNo {
            reason: reason.into(),
        }
    }

    pub fn inconclusive(reason: impl Into<String>) -> Self {
        Verdict::Inconclusive {
            reason: reason.into(),
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::CertifiedYes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::CertifiedNo { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive { .. })
    }

    pub fn reason(&self) -> &str {
        match self {
            Verdict::CertifiedYes { reason, .. } => reason,
            Verdict::CertifiedNo { reason } => reason,
            Verdict::Inconclusive { reason } => reason,
        }
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Verdict::CertifiedYes { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    /// Outcome as a stable lowercase token, used in reports and certificates.
    pub fn outcome_token(&self) -> &'static str {
        match self {
            Verdict::CertifiedYes { .. } => "certified-yes",
            Verdict::CertifiedNo { .. } => "certified-no",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> Verdict<D> {
        match self {
            Verdict::CertifiedYes {
                certificate,
                reason,
            } => Verdict::CertifiedYes {
                certificate: f(certificate),
                reason,
            },
            Verdict::CertifiedNo { reason } => Verdict::CertifiedNo { reason },
            Verdict::Inconclusive { reason } => Verdict::Inconclusive { reason },
        }
    }
}

/// An exact bimodule isomorphism together with its verified inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: Mat,
    pub inverse: Mat,
}

/// Knobs for the isomorphism-search protocol.
///
/// `grid_threshold` bounds the hom-space dimension up to which the
/// deterministic polynomial-identity grid test is used; above it the
/// procedure falls back to at most `max_random_tries` random integer
/// combinations drawn from a seeded generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub max_random_tries: usize,
    pub grid_threshold: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            max_random_tries: 64,
            grid_threshold: 6,
        }
    }
}
