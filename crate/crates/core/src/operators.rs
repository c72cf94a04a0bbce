//! Constructors for the operator family attached to the N-point DFT:
//! the transform itself, the cyclic tridiagonal intertwiners A and B,
//! the Hermitian pair X (position) and Y (momentum), their commutator C,
//! the cyclic generator Z with its circulant companion, the Heun
//! bilinear W, the reflection P_d and the so3(q) generators.
//!
//! Index conventions: rows and columns run 0..N-1; "cyclic tridiagonal"
//! means support on the diagonal, the super/subdiagonals and the two
//! corners (0, N-1) and (N-1, 0).

use crate::error::{AlgebraError, Result};
use crate::matrix::{commutator, SquareMatrix};
use crate::scalar::{Backend, Scalar};

/// Parameters of the general intertwiner family. `alpha`/`beta` steer A
/// (which obeys A F = i F A), the tilded pair steers B (B F = -i F B).
#[derive(Clone, Debug)]
pub struct IntertwinerParams<T> {
    pub alpha: T,
    pub beta: T,
    pub alpha_tilde: T,
    pub beta_tilde: T,
}

impl<T: Scalar> IntertwinerParams<T> {
    pub fn new(alpha: T, beta: T, alpha_tilde: T, beta_tilde: T) -> Self {
        IntertwinerParams {
            alpha,
            beta,
            alpha_tilde,
            beta_tilde,
        }
    }

    /// Tilded parameters forced by B = A^dagger: alpha~ = -conj(alpha),
    /// beta~ = -conj(beta)/q.
    pub fn hermitian_pair<B: Backend<Elem = T>>(backend: &B, alpha: T, beta: T) -> Self {
        let alpha_tilde = alpha.conj().neg();
        let beta_tilde = beta.conj().neg().mul(&backend.q_pow(-1));
        IntertwinerParams {
            alpha,
            beta,
            alpha_tilde,
            beta_tilde,
        }
    }

    /// The canonical choice alpha = -i, beta = 0 that makes X diagonal.
    pub fn canonical<B: Backend<Elem = T>>(backend: &B) -> Self {
        Self::hermitian_pair(backend, backend.i().neg(), backend.zero())
    }
}

pub fn identity<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    SquareMatrix::from_fn(
        b.dimension(),
        |r, c| if r == c { b.one() } else { b.zero() },
    )
}

pub fn zero_matrix<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    SquareMatrix::from_fn(b.dimension(), |_, _| b.zero())
}

/// The DFT matrix. Unnormalized, F_{kl} = q^{kl}, satisfying F F^dagger
/// = N I and F = F^T; with `normalized` the unitary Phi = F / sqrt(N),
/// which only the float backend can represent.
pub fn dft<B: Backend>(b: &B, normalized: bool) -> Result<SquareMatrix<B::Elem>> {
    let f = SquareMatrix::from_fn(b.dimension(), |r, c| b.q_pow((r * c) as i64));
    if normalized {
        let scale = b
            .inv_sqrt_dim()
            .ok_or(AlgebraError::UnsupportedNormalization)?;
        Ok(f.scale(&scale))
    } else {
        Ok(f)
    }
}

/// Cyclic tridiagonal matrix from per-index coefficient functions:
/// sub(k) lands at (k+1 mod N, k), diag(k) at (k, k), sup(k) at
/// (k, k+1 mod N).
fn cyclic_tridiagonal<B: Backend>(
    b: &B,
    sub: impl Fn(i64) -> B::Elem,
    diag: impl Fn(i64) -> B::Elem,
    sup: impl Fn(i64) -> B::Elem,
) -> SquareMatrix<B::Elem> {
    let n = b.dimension();
    let mut m = zero_matrix(b);
    for k in 0..n {
        m.set(k, k, diag(k as i64));
        m.set((k + 1) % n, k, sub(k as i64));
        m.set(k, (k + 1) % n, sup(k as i64));
    }
    m
}

/// General intertwiner A(alpha, beta):
/// a_k = -i alpha + beta (i q^{-k} - q^{k+1}),
/// b_k = alpha (q^k - q^{-k}),
/// c_k = i alpha + beta (q^{-k} - i q^{k+1}).
pub fn intertwiner_a<B: Backend>(b: &B, alpha: &B::Elem, beta: &B::Elem) -> SquareMatrix<B::Elem> {
    let i = b.i();
    cyclic_tridiagonal(
        b,
        |k| {
            let t = b.i().mul(&b.q_pow(-k)).sub(&b.q_pow(k + 1));
            i.mul(alpha).neg().add(&beta.mul(&t))
        },
        |k| alpha.mul(&b.q_pow(k).sub(&b.q_pow(-k))),
        |k| {
            let t = b.q_pow(-k).sub(&b.i().mul(&b.q_pow(k + 1)));
            i.mul(alpha).add(&beta.mul(&t))
        },
    )
}

/// General intertwiner B(alpha~, beta~):
/// a~_k = i alpha~ - beta~ (i q^{-k} + q^{k+1}),
/// b~_k = alpha~ (q^k - q^{-k}),
/// c~_k = -i alpha~ + beta~ (q^{-k} + i q^{k+1}).
pub fn intertwiner_b<B: Backend>(
    b: &B,
    alpha_tilde: &B::Elem,
    beta_tilde: &B::Elem,
) -> SquareMatrix<B::Elem> {
    let i = b.i();
    cyclic_tridiagonal(
        b,
        |k| {
            let t = b.i().mul(&b.q_pow(-k)).add(&b.q_pow(k + 1));
            i.mul(alpha_tilde).sub(&beta_tilde.mul(&t))
        },
        |k| alpha_tilde.mul(&b.q_pow(k).sub(&b.q_pow(-k))),
        |k| {
            let t = b.q_pow(-k).add(&b.i().mul(&b.q_pow(k + 1)));
            i.mul(alpha_tilde).neg().add(&beta_tilde.mul(&t))
        },
    )
}

/// Position operator: X = 2 diag(0, s_1, ..., s_{N-1}).
pub fn position_x<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    let two = b.from_int(2);
    SquareMatrix::from_fn(b.dimension(), |r, c| {
        if r == c {
            two.mul(&b.sin_theta(r as i64))
        } else {
            b.zero()
        }
    })
}

/// Momentum operator: Y_{kl} = i (delta_{k,l+1} - delta_{k,l-1}) on the
/// cycle, so Y e_n = i (e_{n+1} - e_{n-1}).
pub fn momentum_y<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    cyclic_tridiagonal(b, |_| b.i(), |_| b.zero(), |_| b.i().neg())
}

/// Canonical lowering intertwiner A = X + iY (the alpha = -i, beta = 0
/// member of the family).
pub fn canonical_a<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    position_x(b).add(&momentum_y(b).scale(&b.i()))
}

/// A^dagger = X - iY; equals both the conjugate transpose and the plain
/// transpose of `canonical_a` (the entries conjugate into each other).
pub fn canonical_a_dagger<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    position_x(b).sub(&momentum_y(b).scale(&b.i()))
}

/// C = [A, A^T], the commutator of the canonical pair. Cyclic symmetric
/// tridiagonal with zero diagonal and off-diagonal entries
/// 4 (s_{k+1} - s_k).
pub fn commutator_c<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    commutator(&canonical_a(b), &canonical_a_dagger(b))
}

/// Cyclic generator Z: Z_{kl} = q^{1/2} ( q^l delta_{k,l+1} + q^{-l}
/// delta_{k,l-1} ), so Z e_n = q^{1/2} ( q^n e_{n+1} + q^{-n} e_{n-1} ).
pub fn cyclic_z<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    let p = b.p_pow(1);
    cyclic_tridiagonal(
        b,
        |k| p.mul(&b.q_pow(k)),
        |_| b.zero(),
        |k| p.mul(&b.q_pow(-(k + 1))),
    )
}

/// The 0/1 circulant with first superdiagonal, first subdiagonal and the
/// two corners set.
pub fn circulant_z_tilde<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    cyclic_tridiagonal(b, |_| b.one(), |_| b.zero(), |_| b.one())
}

/// Diagonal gauge S_{kk} = (-1)^{kN} q^{k^2/2}, the similarity that
/// carries Z onto (-1)^N Z~. The sign is an exact integer parity, not a
/// root-of-unity power.
pub fn gauge_s<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    let n = b.dimension();
    SquareMatrix::from_fn(n, |r, c| {
        if r != c {
            return b.zero();
        }
        let k = r as i64;
        let entry = b.p_pow(k * k);
        if (k * n as i64) % 2 == 0 {
            entry
        } else {
            entry.neg()
        }
    })
}

/// Coefficients of a bilinear Heun combination
/// tau_xy XY + tau_yx YX + tau_x X + tau_y Y + tau_unit I.
#[derive(Clone, Debug)]
pub struct BilinearCoefficients<T> {
    pub xy: T,
    pub yx: T,
    pub x: T,
    pub y: T,
    pub unit: T,
}

pub fn heun_general_w<B: Backend>(
    b: &B,
    tau: &BilinearCoefficients<B::Elem>,
) -> SquareMatrix<B::Elem> {
    let x = position_x(b);
    let y = momentum_y(b);
    x.matmul(&y)
        .scale(&tau.xy)
        .add(&y.matmul(&x).scale(&tau.yx))
        .add(&x.scale(&tau.x))
        .add(&y.scale(&tau.y))
        .add(&identity(b).scale(&tau.unit))
}

/// The DFT-commuting Heun operator W = -2i (XY - YX) = [A, A^dagger],
/// i.e. the bilinear combination with tau_xy = -2i, tau_yx = 2i.
pub fn heun_w<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    let minus_2i = b.i().mul(&b.from_int(-2));
    commutator(&position_x(b), &momentum_y(b)).scale(&minus_2i)
}

/// Reflection P_d: the permutation k -> -k mod N.
pub fn reflection_pd<B: Backend>(b: &B) -> SquareMatrix<B::Elem> {
    let n = b.dimension();
    SquareMatrix::from_fn(n, |r, c| if r == (n - c) % n { b.one() } else { b.zero() })
}

/// so3(q) generators K0 = X/(2 s_1), K1 = Y/(2 s_1), K2 = i Z/(2 s_1).
pub fn k_generators<B: Backend>(b: &B) -> Result<[SquareMatrix<B::Elem>; 3]> {
    let denom = b.from_int(2).mul(&b.sin_theta(1));
    let inv = denom.inv()?;
    Ok([
        position_x(b).scale(&inv),
        momentum_y(b).scale(&inv),
        cyclic_z(b).scale(&inv.mul(&b.i())),
    ])
}
