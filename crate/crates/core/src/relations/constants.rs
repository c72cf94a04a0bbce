//! Structure constants of the three algebras: the cubic algebra of the
//! pair (A, A^T) with its Casimir, the Heun relations of the pair
//! (2X, W) and the Heun Casimir.
//!
//! N = 4 is the degenerate dimension: q = i makes 1 + q^2, q + q^{-1}
//! and cos(2 pi / N) vanish simultaneously, so every constant carrying
//! one of those denominators is absent there (`None`) and dependent
//! relations report `Degenerate` instead of a residual.

use crate::scalar::{Backend, Scalar};

/// The coefficient bundle for one dimension N.
///
/// Always-regular members are plain values; members whose denominators
/// vanish at N = 4 are `Option` and `None` exactly when `degenerate`.
#[derive(Clone, Debug)]
pub struct StructureConstants<T> {
    pub degenerate: bool,
    /// (1-q)^2 / (1+q^2)
    pub beta1: Option<T>,
    /// -4 (q-q^{-1})^2 / (q+q^{-1})
    pub beta2: Option<T>,
    /// (1-q)^2 / (1+q)^2
    pub r1: T,
    /// -4 (1+q^2)(q-q^{-1})^2 / (1+q)^2
    pub r2: T,
    /// 16 s_1^2
    pub g1: T,
    /// -16 c_1 (1+c_1)(1-c_1)^2
    pub g2: T,
    /// 64 (1+c_1)(1-c_1)^2 (3 c_1 + 1)
    pub g3: T,
    /// 1/c_1 - 1 = -(1-q)^2 / (1+q^2)
    pub rho1: Option<T>,
    /// 4 (q-q^{-1})^2 = -16 s_1^2
    pub rho2: T,
    /// 8 s_1^2 (1/c_1 - 1) c_2 — the coefficient of X^4 that closes the
    /// Heun Casimir (see q_heun tests for the exact-zero witness)
    pub rho3: Option<T>,
    /// -4 (1+q)^2 (5q^4+2q^3+2q^2+2q+5)(q-1)^4 / ((q^2+1) q^4)
    pub rho4: Option<T>,
}

pub fn structure_constants<B: Backend>(b: &B) -> StructureConstants<B::Elem> {
    let degenerate = b.dimension() == 4;
    let one = b.one();
    let q = b.q_pow(1);
    let qi = b.q_pow(-1);
    let q2 = b.q_pow(2);

    let one_minus_q_sq = one.sub(&q).mul(&one.sub(&q));
    let one_plus_q_sq = one.add(&q).mul(&one.add(&q));
    let d = q.sub(&qi); // q - q^{-1} = 2i s_1
    let d_sq = d.mul(&d);
    let s1 = b.sin_theta(1);
    let s1_sq = s1.mul(&s1);
    let c1 = b.cos_theta(1);
    let c2 = b.cos_theta(2);

    let beta1 = (!degenerate).then(|| {
        one_minus_q_sq.mul(
            &one.add(&q2)
                .inv()
                .expect("1 + q^2 is nonzero away from N = 4"),
        )
    });
    let beta2 = (!degenerate).then(|| {
        d_sq.mul(&b.from_int(-4)).mul(
            &q.add(&qi)
                .inv()
                .expect("q + q^{-1} is nonzero away from N = 4"),
        )
    });

    let inv_one_plus_q_sq = one_plus_q_sq.inv().expect("(1+q)^2 is nonzero for N >= 3");
    let r1 = one_minus_q_sq.mul(&inv_one_plus_q_sq);
    let r2 = one
        .add(&q2)
        .mul(&d_sq)
        .mul(&b.from_int(-4))
        .mul(&inv_one_plus_q_sq);

    let g1 = s1_sq.mul(&b.from_int(16));
    let one_plus_c1 = one.add(&c1);
    let one_minus_c1_sq = one.sub(&c1).mul(&one.sub(&c1));
    let g2 = c1
        .mul(&one_plus_c1)
        .mul(&one_minus_c1_sq)
        .mul(&b.from_int(-16));
    let g3 = one_plus_c1
        .mul(&one_minus_c1_sq)
        .mul(&c1.mul(&b.from_int(3)).add(&one))
        .mul(&b.from_int(64));

    let rho1 = (!degenerate).then(|| c1.inv().expect("c_1 is nonzero away from N = 4").sub(&one));
    let rho2 = d_sq.mul(&b.from_int(4));
    let rho3 = rho1
        .as_ref()
        .map(|r1c| s1_sq.mul(&b.from_int(8)).mul(r1c).mul(&c2));
    let rho4 = (!degenerate).then(|| {
        let quintic = b
            .from_int(5)
            .mul(&b.q_pow(4))
            .add(&b.from_int(2).mul(&b.q_pow(3)))
            .add(&b.from_int(2).mul(&q2))
            .add(&b.from_int(2).mul(&q))
            .add(&b.from_int(5));
        let q_minus_1_sq = q.sub(&one).mul(&q.sub(&one));
        one.add(&q)
            .mul(&one.add(&q))
            .mul(&quintic)
            .mul(&q_minus_1_sq)
            .mul(&q_minus_1_sq)
            .mul(&b.from_int(-4))
            .mul(
                &q2.add(&one)
                    .inv()
                    .expect("q^2 + 1 is nonzero away from N = 4"),
            )
            .mul(&b.q_pow(-4))
    });

    StructureConstants {
        degenerate,
        beta1,
        beta2,
        r1,
        r2,
        g1,
        g2,
        g3,
        rho1,
        rho2,
        rho3,
        rho4,
    }
}
