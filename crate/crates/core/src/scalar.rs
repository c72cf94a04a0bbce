//! One scalar abstraction over the two computation modes: exact
//! cyclotomic arithmetic and double-precision complex arithmetic.
//! Every operator constructor and relation check is generic over a
//! [`Backend`], so the same code path runs in either mode.

use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::cyclo::{field_order_for, CycloField, CycloScalar};
use crate::error::{AlgebraError, Result};

/// Field operations required of a matrix entry.
///
/// `CycloScalar` panics if two entries from different fields meet; that
/// cannot happen through [`crate::matrix::SquareMatrix`], which is
/// backend-homogeneous by construction. The fallible order-checked API
/// lives on `CycloScalar` itself.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;
    /// Numeric image (identity for the float backend).
    fn to_complex(&self) -> Complex64;
}

impl Scalar for CycloScalar {
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs)
            .expect("mixed cyclotomic orders in matrix arithmetic")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs)
            .expect("mixed cyclotomic orders in matrix arithmetic")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs)
            .expect("mixed cyclotomic orders in matrix arithmetic")
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn conj(&self) -> Self {
        self.conjugate()
    }
    fn inv(&self) -> Result<Self> {
        self.checked_inv()
    }
    fn is_zero(&self) -> bool {
        CycloScalar::is_zero(self)
    }
    fn to_complex(&self) -> Complex64 {
        CycloScalar::to_complex(self)
    }
}

impl Scalar for Complex64 {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inv(&self) -> Result<Self> {
        if self.re == 0.0 && self.im == 0.0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Complex64::new(1.0, 0.0) / self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Which scalar mode a value or report came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    Exact,
    Float,
}

impl std::fmt::Display for BackendKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BackendKind::Exact => write!(f, "exact"),
            BackendKind::Float => write!(f, "float"),
        }
    }
}

/// A scalar factory bound to one DFT dimension N. Supplies the base
/// constants every operator is built from: rationals, the imaginary
/// unit, integer powers of q = exp(2 pi i / N) and of p = q^{1/2}.
#[allow(clippy::wrong_self_convention)] // from_* here are factory methods on the backend
pub trait Backend: Clone + Send + Sync {
    type Elem: Scalar;

    fn dimension(&self) -> usize;
    fn kind(&self) -> BackendKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_ratio(&self, num: i64, den: i64) -> Self::Elem;
    /// The imaginary unit.
    fn i(&self) -> Self::Elem;
    /// q^k with q the primitive N-th root of unity.
    fn q_pow(&self, k: i64) -> Self::Elem;
    /// p^k with p = q^{1/2} the primitive 2N-th root of unity.
    fn p_pow(&self, k: i64) -> Self::Elem;
    /// 1/sqrt(N) where representable (float backend only).
    fn inv_sqrt_dim(&self) -> Option<Self::Elem>;

    fn from_int(&self, v: i64) -> Self::Elem {
        self.from_ratio(v, 1)
    }

    /// s_k = sin(2 pi k / N) = (q^k - q^{-k}) / (2i).
    fn sin_theta(&self, k: i64) -> Self::Elem {
        let diff = self.q_pow(k).sub(&self.q_pow(-k));
        // 1/(2i) = -i/2
        diff.mul(&self.i().neg()).mul(&self.from_ratio(1, 2))
    }

    /// c_k = cos(2 pi k / N) = (q^k + q^{-k}) / 2.
    fn cos_theta(&self, k: i64) -> Self::Elem {
        self.q_pow(k)
            .add(&self.q_pow(-k))
            .mul(&self.from_ratio(1, 2))
    }
}

/// Exact mode: elements of Q(zeta_M) with M = lcm(4, 2N).
#[derive(Clone)]
pub struct ExactBackend {
    n: usize,
    field: Arc<CycloField>,
    /// exponent e with p = zeta_M^e, i.e. e = M / (2N)
    half_step: i64,
}

impl ExactBackend {
    pub fn new(n: usize) -> Result<Self> {
        let m = field_order_for(n)?;
        let field = CycloField::with_order(m);
        Ok(ExactBackend {
            n,
            field,
            half_step: (m / (2 * n as u64)) as i64,
        })
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Field order M.
    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn scalar_from_i64_coeffs(&self, coeffs: &[i64]) -> CycloScalar {
        CycloScalar::from_i64_coeffs(&self.field, coeffs)
    }
}

impl Backend for ExactBackend {
    type Elem = CycloScalar;

    fn dimension(&self) -> usize {
        self.n
    }
    fn kind(&self) -> BackendKind {
        BackendKind::Exact
    }
    fn zero(&self) -> CycloScalar {
        CycloScalar::zero(&self.field)
    }
    fn one(&self) -> CycloScalar {
        CycloScalar::one(&self.field)
    }
    fn from_ratio(&self, num: i64, den: i64) -> CycloScalar {
        CycloScalar::from_ratio(&self.field, num, den)
    }
    fn i(&self) -> CycloScalar {
        CycloScalar::zeta_pow(&self.field, (self.field.order() / 4) as i64)
    }
    fn q_pow(&self, k: i64) -> CycloScalar {
        CycloScalar::zeta_pow(&self.field, 2 * self.half_step * k)
    }
    fn p_pow(&self, k: i64) -> CycloScalar {
        CycloScalar::zeta_pow(&self.field, self.half_step * k)
    }
    fn inv_sqrt_dim(&self) -> Option<CycloScalar> {
        None
    }
}

/// Float mode: IEEE double complex numbers.
#[derive(Clone)]
pub struct FloatBackend {
    n: usize,
}

impl FloatBackend {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(AlgebraError::DegenerateDimension(n));
        }
        Ok(FloatBackend { n })
    }

    fn unit_phase(&self, half_steps: i64) -> Complex64 {
        let angle = std::f64::consts::PI * half_steps as f64 / self.n as f64;
        Complex64::new(angle.cos(), angle.sin())
    }
}

impl Backend for FloatBackend {
    type Elem = Complex64;

    fn dimension(&self) -> usize {
        self.n
    }
    fn kind(&self) -> BackendKind {
        BackendKind::Float
    }
    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn from_ratio(&self, num: i64, den: i64) -> Complex64 {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn i(&self) -> Complex64 {
        Complex64::new(0.0, 1.0)
    }
    fn q_pow(&self, k: i64) -> Complex64 {
        self.unit_phase(2 * k)
    }
    fn p_pow(&self, k: i64) -> Complex64 {
        self.unit_phase(k)
    }
    fn inv_sqrt_dim(&self) -> Option<Complex64> {
        Some(Complex64::new(1.0 / (self.n as f64).sqrt(), 0.0))
    }
}
