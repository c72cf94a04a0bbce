//! Spectral and rank-level facts: Hermitian eigenvalue reports with
//! multiplicity clustering, exact ranks and null spaces over the
//! cyclotomic field, the unitary equivalence of X and Y, the eigenbasis
//! carried by the DFT columns with its overlap table, the circulant
//! reduction of Z, and the ladder construction on the null space of A.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::cyclo::CycloScalar;
use crate::error::{AlgebraError, Result};
use crate::matrix::{commutator, rank_and_kernel, SquareMatrix};
use crate::operators::{
    canonical_a, canonical_a_dagger, circulant_z_tilde, cyclic_z, dft, gauge_s, momentum_y,
    position_x, reflection_pd,
};
use crate::report::{term_scale, RelationId, RelationReport, Verdict, FLOAT_RESIDUAL_TOL};
use crate::scalar::{Backend, BackendKind, ExactBackend, FloatBackend, Scalar};

/// Relative clustering tolerance for eigenvalue multiplicities. Gaps
/// between distinct values 2 sin(2 pi n / N) shrink like 1/N^2, far
/// above this for desk-scale N.
pub const EIGENVALUE_CLUSTER_TOL: f64 = 1e-8;

/// Hermiticity admission tolerance for the float eigensolver.
pub const HERMITIAN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueCluster {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalue/rank summary for one operator. For Hermitian float input
/// the eigenvalues are populated and multiplicities sum to N; exact
/// rank reports (used for the non-Hermitian A) leave them empty.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub operator_id: String,
    pub n: usize,
    pub backend: BackendKind,
    pub eigenvalues: Vec<EigenvalueCluster>,
    pub rank: usize,
    pub nullity: usize,
    /// index pairs (into the sorted eigenvalue list) sharing a cluster
    pub degenerate_pairs: Vec<[usize; 2]>,
}

impl SpectralReport {
    pub fn simple_spectrum(&self) -> bool {
        self.eigenvalues.iter().all(|c| c.multiplicity == 1)
    }

    /// Sorted eigenvalues with multiplicity, flattened back to length N.
    pub fn flattened_eigenvalues(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for c in &self.eigenvalues {
            out.extend(std::iter::repeat_n(c.value, c.multiplicity));
        }
        out
    }
}

/// Dense Hermitian eigendecomposition with multiplicity clustering.
pub fn hermitian_spectrum(
    operator_id: &str,
    m: &SquareMatrix<Complex64>,
) -> Result<SpectralReport> {
    let n = m.n();
    let deviation = m.sub(&m.conj_transpose()).inf_norm();
    let tolerance = HERMITIAN_TOL * m.inf_norm().max(1.0);
    if deviation > tolerance {
        return Err(AlgebraError::NotHermitian {
            deviation,
            tolerance,
        });
    }
    let dm = DMatrix::from_fn(n, n, |r, c| *m.get(r, c));
    let eigen = nalgebra::linalg::SymmetricEigen::new(dm);
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));

    let scale = values.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    let gap = EIGENVALUE_CLUSTER_TOL * scale;
    let mut clusters: Vec<EigenvalueCluster> = Vec::new();
    let mut degenerate_pairs = Vec::new();
    let mut idx = 0usize;
    while idx < values.len() {
        let mut stop = idx + 1;
        while stop < values.len() && (values[stop] - values[stop - 1]).abs() <= gap {
            stop += 1;
        }
        let mult = stop - idx;
        let center = values[idx..stop].iter().sum::<f64>() / mult as f64;
        for j in idx + 1..stop {
            degenerate_pairs.push([idx, j]);
        }
        clusters.push(EigenvalueCluster {
            value: center,
            multiplicity: mult,
        });
        idx = stop;
    }
    let nullity = clusters
        .iter()
        .filter(|c| c.value.abs() <= gap)
        .map(|c| c.multiplicity)
        .sum::<usize>();
    Ok(SpectralReport {
        operator_id: operator_id.to_string(),
        n,
        backend: BackendKind::Float,
        eigenvalues: clusters,
        rank: n - nullity,
        nullity,
        degenerate_pairs,
    })
}

/// Exact rank and null-space basis over Q(zeta_M).
pub fn exact_rank(
    b: &ExactBackend,
    m: &SquareMatrix<CycloScalar>,
) -> Result<(usize, Vec<Vec<CycloScalar>>)> {
    rank_and_kernel(m, &b.zero(), &b.one())
}

/// Rank summary without eigenvalues, for exact-backend reports.
pub fn exact_rank_report(
    b: &ExactBackend,
    operator_id: &str,
    m: &SquareMatrix<CycloScalar>,
) -> Result<SpectralReport> {
    let (rank, basis) = exact_rank(b, m)?;
    Ok(SpectralReport {
        operator_id: operator_id.to_string(),
        n: m.n(),
        backend: BackendKind::Exact,
        eigenvalues: Vec::new(),
        rank,
        nullity: basis.len(),
        degenerate_pairs: Vec::new(),
    })
}

/// The intertwining consequences Y F = F X and X F = -F Y, exact in
/// either backend with the unnormalized transform.
pub fn check_unitary_equivalence<B: Backend>(b: &B) -> Result<[RelationReport; 2]> {
    let f = dft(b, false)?;
    let x = position_x(b);
    let y = momentum_y(b);
    let lhs1 = y.matmul(&f);
    let rhs1 = f.matmul(&x);
    let rep1 = RelationReport::from_residual(
        b,
        RelationId::UnitaryYx,
        &lhs1.sub(&rhs1),
        term_scale(&[&lhs1, &rhs1]),
    );
    let lhs2 = x.matmul(&f);
    let rhs2 = f.matmul(&y).neg();
    let rep2 = RelationReport::from_residual(
        b,
        RelationId::UnitaryXy,
        &lhs2.sub(&rhs2),
        term_scale(&[&lhs2, &rhs2]),
    );
    Ok([rep1, rep2])
}

/// The conjugation form Y = Phi X Phi^dagger with the unitary Phi,
/// float only, at an absolute 1e-12.
pub fn check_unitary_conjugation(fl: &FloatBackend) -> Result<RelationReport> {
    let phi = dft(fl, true)?;
    let x = position_x(fl);
    let y = momentum_y(fl);
    let resid = y.sub(&phi.matmul(&x).matmul(&phi.conj_transpose()));
    Ok(RelationReport::from_float_norm(
        RelationId::UnitaryConjugation,
        fl.dimension(),
        resid.inf_norm(),
        1.0,
        1e-12,
    ))
}

/// Overlap coefficients (eps_k, e_l) between the Y eigenbasis carried
/// by the DFT columns and the standard basis; conjugate-linear in the
/// first slot, so the table is N^{-1/2} q^{-kl}.
#[derive(Debug, Clone)]
pub struct OverlapTable {
    pub n: usize,
    pub entries: Vec<Vec<Complex64>>,
}

/// Computes the table honestly from inner products of the constructed
/// eigenvectors.
pub fn overlap_table(fl: &FloatBackend) -> Result<OverlapTable> {
    let n = fl.dimension();
    let phi = dft(fl, true)?;
    let mut entries = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (k, table_row) in entries.iter_mut().enumerate() {
        // eps_k is column k of Phi; (eps_k, e_l) = conj((eps_k)_l)
        for (l, slot) in table_row.iter_mut().enumerate() {
            *slot = phi.get(l, k).conj();
        }
    }
    Ok(OverlapTable { n, entries })
}

fn report_from_scalars<B: Backend>(
    b: &B,
    id: RelationId,
    residuals: &[B::Elem],
    scale: f64,
) -> RelationReport {
    let norm = residuals
        .iter()
        .map(|v| v.to_complex().norm())
        .fold(0.0, f64::max);
    let verdict = match b.kind() {
        BackendKind::Exact => {
            if residuals.iter().all(Scalar::is_zero) {
                Verdict::ExactZero
            } else {
                Verdict::Failed(norm)
            }
        }
        BackendKind::Float => {
            if norm <= FLOAT_RESIDUAL_TOL * scale.max(1.0) {
                Verdict::ResidualNorm(norm)
            } else {
                Verdict::Failed(norm)
            }
        }
    };
    RelationReport {
        relation_id: id,
        n: b.dimension(),
        backend: b.kind(),
        verdict,
        residual_inf_norm: Some(norm),
        elapsed_ms: None,
    }
}

/// Eigenbasis facts tied to the DFT columns eps_n = F e_n:
/// Y eps_n = x_n eps_n, the two-diagonal action
/// X eps_n = i (eps_{n-1} - eps_{n+1}), and the orthogonality of the
/// overlap monomials mu_k^l under the 1/N normalization.
pub fn check_epsilon_basis<B: Backend>(b: &B) -> Result<Vec<RelationReport>> {
    let n = b.dimension();
    let f = dft(b, false)?;
    let x = position_x(b);
    let y = momentum_y(b);

    // Y (F e_n) = x_n (F e_n) for every column: Y F = F X.
    let lhs = y.matmul(&f);
    let rhs = f.matmul(&x);
    let rep_eigen = RelationReport::from_residual(
        b,
        RelationId::EpsilonEigenY,
        &lhs.sub(&rhs),
        term_scale(&[&lhs, &rhs]),
    );

    // X eps_n = i (eps_{n-1} - eps_{n+1}): column-shift matrices stand
    // in for the index shifts.
    let shift_down = SquareMatrix::from_fn(n, |r, c| {
        if r == (c + n - 1) % n {
            b.one()
        } else {
            b.zero()
        }
    });
    let shift_up = shift_down.transpose();
    let lhs2 = x.matmul(&f);
    let rhs2 = f
        .matmul(&shift_down)
        .sub(&f.matmul(&shift_up))
        .scale(&b.i());
    let rep_twodiag = RelationReport::from_residual(
        b,
        RelationId::EpsilonTwoDiagX,
        &lhs2.sub(&rhs2),
        term_scale(&[&lhs2, &rhs2]),
    );

    // (1/N) sum_j conj(mu_j^k) mu_j^l = delta_kl with mu_j = q^{-j}.
    let inv_n = b.from_ratio(1, n as i64);
    let mut gram_residuals = Vec::with_capacity(n * n);
    for k in 0..n as i64 {
        for l in 0..n as i64 {
            let mut acc = b.zero();
            for j in 0..n as i64 {
                acc = acc.add(&b.q_pow(j * (k - l)));
            }
            let mut entry = acc.mul(&inv_n);
            if k == l {
                entry = entry.sub(&b.one());
            }
            gram_residuals.push(entry);
        }
    }
    let rep_monomial =
        report_from_scalars(b, RelationId::MonomialOrthogonality, &gram_residuals, 1.0);

    Ok(vec![rep_eigen, rep_twodiag, rep_monomial])
}

/// Float-only: the overlap table equals N^{-1/2} q^{-kl} entrywise and
/// its rows are orthonormal, both within 1e-12.
pub fn check_overlap_unitarity(fl: &FloatBackend) -> Result<RelationReport> {
    let n = fl.dimension();
    let table = overlap_table(fl)?;
    let scale = 1.0 / (n as f64).sqrt();
    let mut worst = 0.0f64;
    for k in 0..n {
        for l in 0..n {
            let formula = fl.q_pow(-((k * l) as i64)) * scale;
            worst = worst.max((table.entries[k][l] - formula).norm());
        }
    }
    // rows orthonormal: T T^dagger = I
    let t = SquareMatrix::from_fn(n, |r, c| table.entries[r][c]);
    let gram_dev = t
        .matmul(&t.conj_transpose())
        .sub(&SquareMatrix::from_fn(n, |r, c| {
            Complex64::new(if r == c { 1.0 } else { 0.0 }, 0.0)
        }))
        .inf_norm();
    worst = worst.max(gram_dev);
    Ok(RelationReport::from_float_norm(
        RelationId::OverlapUnitarity,
        n,
        worst,
        1.0,
        1e-12,
    ))
}

/// Similarity onto the circulant: S^{-1} Z S = (-1)^N Z~, plus the
/// recurrence x_{k+1} = (-1)^N q^{k + 1/2} x_k satisfied by the gauge
/// diagonal.
pub fn check_circulant_similarity<B: Backend>(b: &B) -> Result<[RelationReport; 2]> {
    let n = b.dimension();
    let z = cyclic_z(b);
    let s = gauge_s(b);
    let s_inv = SquareMatrix::from_fn(n, |r, c| {
        if r == c {
            s.get(r, r).inv().expect("gauge entries are roots of unity")
        } else {
            b.zero()
        }
    });
    let sign = if n.is_multiple_of(2) {
        b.one()
    } else {
        b.one().neg()
    };
    let lhs = s_inv.matmul(&z).matmul(&s);
    let rhs = circulant_z_tilde(b).scale(&sign);
    let rep_sim = RelationReport::from_residual(
        b,
        RelationId::CirculantSimilarity,
        &lhs.sub(&rhs),
        term_scale(&[&lhs, &rhs]),
    );

    let mut residuals = Vec::with_capacity(n - 1);
    for k in 0..n - 1 {
        let x_k = s.get(k, k);
        let x_k1 = s.get(k + 1, k + 1);
        let step = b.p_pow(2 * k as i64 + 1).mul(&sign);
        residuals.push(x_k1.sub(&step.mul(x_k)));
    }
    let rep_rec = report_from_scalars(b, RelationId::GaugeRecurrence, &residuals, 1.0);
    Ok([rep_sim, rep_rec])
}

/// Float check that the spectrum of Z is the circulant multiset
/// { (-1)^N 2 cos(2 pi n / N) }, within 1e-10.
pub fn check_z_spectrum(fl: &FloatBackend) -> Result<RelationReport> {
    let n = fl.dimension();
    let report = hermitian_spectrum("Z", &cyclic_z(fl))?;
    let got = report.flattened_eigenvalues();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut expected: Vec<f64> = (0..n)
        .map(|k| sign * 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
        .collect();
    expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let worst = got
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(RelationReport::from_float_norm(
        RelationId::ZCirculantSpectrum,
        n,
        worst,
        1.0,
        1e-10,
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderVectorReport {
    pub index: usize,
    /// +1 or -1 when the vector is a reflection eigenvector within
    /// tolerance, None otherwise.
    pub pd_eigenvalue: Option<i8>,
    /// min over the two signs of ||P_d v -/+ v||_2
    pub deviation: f64,
}

/// Observations from the ladder construction on ker A: the chains
/// v, A^dagger v, (A^dagger)^2 v, ... for each exact null vector,
/// sequentially orthonormalized, each surviving vector tested for
/// reflection symmetry. Recorded, not asserted.
#[derive(Debug, Clone, Serialize)]
pub struct LadderReport {
    pub n: usize,
    pub null_dimension: usize,
    pub candidates_generated: usize,
    pub span_dimension: usize,
    pub dropped: usize,
    pub vectors: Vec<LadderVectorReport>,
    pub all_pd_symmetric: bool,
}

const LADDER_DROP_TOL: f64 = 1e-10;
const PD_SYMMETRY_TOL: f64 = 1e-8;

fn vec_norm(v: &DVector<Complex64>) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub fn ladder_hierarchy(n: usize) -> Result<LadderReport> {
    let ex = ExactBackend::new(n)?;
    let fl = FloatBackend::new(n)?;
    let (_, null_basis) = exact_rank(&ex, &canonical_a(&ex))?;
    if null_basis.is_empty() {
        return Err(AlgebraError::Internal(
            "the null space of A is empty, contradicting its rank deficiency".into(),
        ));
    }

    let adag = canonical_a_dagger(&fl);
    let adag_m = DMatrix::from_fn(n, n, |r, c| *adag.get(r, c));
    let pd = reflection_pd(&fl);
    let pd_m = DMatrix::from_fn(n, n, |r, c| *pd.get(r, c));

    let mut candidates: Vec<DVector<Complex64>> = Vec::new();
    for null_vec in &null_basis {
        let mut v = DVector::from_iterator(n, null_vec.iter().map(Scalar::to_complex));
        let norm = vec_norm(&v);
        if norm > 0.0 {
            v /= Complex64::new(norm, 0.0);
        }
        for step in 0..n {
            if step > 0 {
                v = &adag_m * v;
            }
            candidates.push(v.clone());
        }
    }

    let mut basis: Vec<DVector<Complex64>> = Vec::new();
    let mut dropped = 0usize;
    for cand in &candidates {
        if basis.len() == n {
            break;
        }
        let mut w = cand.clone();
        // two projection passes: sequential orthonormalization with
        // re-orthogonalization
        for _ in 0..2 {
            for bvec in &basis {
                let coeff = bvec.dotc(&w);
                w -= bvec * coeff;
            }
        }
        let norm = vec_norm(&w);
        if norm < LADDER_DROP_TOL {
            dropped += 1;
            continue;
        }
        w /= Complex64::new(norm, 0.0);
        basis.push(w);
    }

    let mut vectors = Vec::with_capacity(basis.len());
    for (index, bvec) in basis.iter().enumerate() {
        let image = &pd_m * bvec;
        let dev_plus = vec_norm(&(&image - bvec));
        let dev_minus = vec_norm(&(&image + bvec));
        let (deviation, pd_eigenvalue) = if dev_plus <= dev_minus {
            (dev_plus, (dev_plus < PD_SYMMETRY_TOL).then_some(1i8))
        } else {
            (dev_minus, (dev_minus < PD_SYMMETRY_TOL).then_some(-1i8))
        };
        vectors.push(LadderVectorReport {
            index,
            pd_eigenvalue,
            deviation,
        });
    }
    let all_pd_symmetric = vectors.iter().all(|v| v.pd_eigenvalue.is_some());
    Ok(LadderReport {
        n,
        null_dimension: null_basis.len(),
        candidates_generated: candidates.len(),
        span_dimension: basis.len(),
        dropped,
        vectors,
        all_pd_symmetric,
    })
}

/// The null space of A commutes facts used before laddering: a quick
/// guard that [A^dagger A, P_d] = 0 holds in float arithmetic.
pub fn ladder_precondition(fl: &FloatBackend) -> RelationReport {
    let ada = canonical_a_dagger(fl).matmul(&canonical_a(fl));
    let pd = reflection_pd(fl);
    let resid = commutator(&ada, &pd);
    RelationReport::from_residual(
        fl,
        RelationId::AdaCommutesPd,
        &resid,
        term_scale(&[&ada, &pd]),
    )
}
