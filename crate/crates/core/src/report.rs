//! Verdict and report types shared by the relation checks and the
//! spectral checks, plus the residual-to-verdict policy.

use serde::Serialize;

use crate::matrix::SquareMatrix;
use crate::scalar::{Backend, BackendKind};

/// Relative tolerance for float-backend residuals: a relation passes
/// when ||residual||_inf <= TOL * max(1, scale of the compared terms).
pub const FLOAT_RESIDUAL_TOL: f64 = 1e-9;

/// Identifier of one verified identity. Serialized as snake_case
/// strings in the JSON report stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationId {
    InterA,
    InterB,
    KernelDim,
    CubicCommA,
    CubicCommAt,
    JacobiLeft,
    JacobiRight,
    JacobiSum,
    Q1CommA,
    Q1CommAt,
    AwX2y,
    AwY2x,
    Aw3Xy,
    Aw3Zx,
    Aw3Yz,
    So3qK0k1,
    So3qK2k0,
    So3qK1k2,
    QAw3CommX,
    QAw3CommY,
    QAw3CommZ,
    QAw3Hermitian,
    QAw3Scalar,
    HeunX2w,
    HeunW2x,
    QHeunCommX,
    QHeunCommW,
    QHeunScalar,
    WCommutesDft,
    AdaCommutesPd,
    UnitaryYx,
    UnitaryXy,
    UnitaryConjugation,
    CirculantSimilarity,
    GaugeRecurrence,
    ZCirculantSpectrum,
    EpsilonEigenY,
    EpsilonTwoDiagX,
    OverlapUnitarity,
    MonomialOrthogonality,
}

impl RelationId {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationId::InterA => "inter_a",
            RelationId::InterB => "inter_b",
            RelationId::KernelDim => "kernel_dim",
            RelationId::CubicCommA => "cubic_comm_a",
            RelationId::CubicCommAt => "cubic_comm_at",
            RelationId::JacobiLeft => "jacobi_left",
            RelationId::JacobiRight => "jacobi_right",
            RelationId::JacobiSum => "jacobi_sum",
            RelationId::Q1CommA => "q1_comm_a",
            RelationId::Q1CommAt => "q1_comm_at",
            RelationId::AwX2y => "aw_x2y",
            RelationId::AwY2x => "aw_y2x",
            RelationId::Aw3Xy => "aw3_xy",
            RelationId::Aw3Zx => "aw3_zx",
            RelationId::Aw3Yz => "aw3_yz",
            RelationId::So3qK0k1 => "so3q_k0k1",
            RelationId::So3qK2k0 => "so3q_k2k0",
            RelationId::So3qK1k2 => "so3q_k1k2",
            RelationId::QAw3CommX => "q_aw3_comm_x",
            RelationId::QAw3CommY => "q_aw3_comm_y",
            RelationId::QAw3CommZ => "q_aw3_comm_z",
            RelationId::QAw3Hermitian => "q_aw3_hermitian",
            RelationId::QAw3Scalar => "q_aw3_scalar",
            RelationId::HeunX2w => "heun_x2w",
            RelationId::HeunW2x => "heun_w2x",
            RelationId::QHeunCommX => "q_heun_comm_x",
            RelationId::QHeunCommW => "q_heun_comm_w",
            RelationId::QHeunScalar => "q_heun_scalar",
            RelationId::WCommutesDft => "w_commutes_dft",
            RelationId::AdaCommutesPd => "ada_commutes_pd",
            RelationId::UnitaryYx => "unitary_yx",
            RelationId::UnitaryXy => "unitary_xy",
            RelationId::UnitaryConjugation => "unitary_conjugation",
            RelationId::CirculantSimilarity => "circulant_similarity",
            RelationId::GaugeRecurrence => "gauge_recurrence",
            RelationId::ZCirculantSpectrum => "z_circulant_spectrum",
            RelationId::EpsilonEigenY => "epsilon_eigen_y",
            RelationId::EpsilonTwoDiagX => "epsilon_two_diag_x",
            RelationId::OverlapUnitarity => "overlap_unitarity",
            RelationId::MonomialOrthogonality => "monomial_orthogonality",
        }
    }
}

impl std::fmt::Display for RelationId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Verdict {
    /// The residual is identically zero in the exact backend.
    ExactZero,
    /// Float backend: residual within tolerance; the norm is attached.
    ResidualNorm(f64),
    /// The relation's structure constants are singular at this N.
    Degenerate,
    /// Residual exceeded tolerance (or was exactly nonzero).
    Failed(f64),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Failed(_))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub relation_id: RelationId,
    pub n: usize,
    pub backend: BackendKind,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_inf_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn degenerate(id: RelationId, n: usize, backend: BackendKind) -> Self {
        RelationReport {
            relation_id: id,
            n,
            backend,
            verdict: Verdict::Degenerate,
            residual_inf_norm: None,
            elapsed_ms: None,
        }
    }

    /// Verdict for a residual matrix that an identity says should vanish.
    /// `scale` is the magnitude of the terms that were subtracted, so the
    /// float tolerance is relative; the exact backend ignores it.
    pub fn from_residual<B: Backend>(
        backend: &B,
        id: RelationId,
        residual: &SquareMatrix<B::Elem>,
        scale: f64,
    ) -> Self {
        let norm = residual.inf_norm();
        let verdict = match backend.kind() {
            BackendKind::Exact => {
                if residual.is_zero() {
                    Verdict::ExactZero
                } else {
                    Verdict::Failed(norm)
                }
            }
            BackendKind::Float => Self::float_verdict(norm, scale, FLOAT_RESIDUAL_TOL),
        };
        RelationReport {
            relation_id: id,
            n: backend.dimension(),
            backend: backend.kind(),
            verdict,
            residual_inf_norm: Some(norm),
            elapsed_ms: None,
        }
    }

    /// Float-only report with an explicit tolerance (used by the checks
    /// whose contract pins an absolute bound such as 1e-12).
    pub fn from_float_norm(
        id: RelationId,
        n: usize,
        norm: f64,
        scale: f64,
        tolerance: f64,
    ) -> Self {
        RelationReport {
            relation_id: id,
            n,
            backend: BackendKind::Float,
            verdict: Self::float_verdict(norm, scale, tolerance),
            residual_inf_norm: Some(norm),
            elapsed_ms: None,
        }
    }

    fn float_verdict(norm: f64, scale: f64, tolerance: f64) -> Verdict {
        if norm <= tolerance * scale.max(1.0) {
            Verdict::ResidualNorm(norm)
        } else {
            Verdict::Failed(norm)
        }
    }
}

/// Scale of a set of matrices entering a relation, for relative
/// tolerances: max of 1 and each infinity norm.
pub fn term_scale<T: crate::scalar::Scalar>(terms: &[&SquareMatrix<T>]) -> f64 {
    terms.iter().map(|m| m.inf_norm()).fold(1.0, f64::max)
}
