//! Exact arithmetic in the cyclotomic fields Q(zeta_M).
//!
//! Elements are polynomials in the primitive root zeta_M with rational
//! coefficients, kept reduced modulo the cyclotomic polynomial Phi_M.
//! The reduced form is canonical, so equality with zero is decidable:
//! that is the whole point of running the verification exactly.

pub mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{AlgebraError, Result};
use poly::{cyclotomic_polynomial, rat_ext_gcd_mod, rat_is_zero_poly, rat_zero};

/// Smallest M such that q = zeta_M^{M/N}, q^{1/2} = zeta_M^{M/(2N)} and
/// i = zeta_M^{M/4} all live in Q(zeta_M): the lcm of 4 and 2N.
pub fn field_order_for(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(AlgebraError::DegenerateDimension(n));
    }
    Ok((2 * n as u64).lcm(&4))
}

/// Shared immutable data for one field Q(zeta_M): the reduction modulus
/// and a table of zeta^j in reduced form for every power that arithmetic
/// can produce ( j < max(M, 2 deg - 1) ).
pub struct CycloField {
    order: u64,
    degree: usize,
    modulus: Vec<BigInt>,
    power_table: Vec<Vec<BigRational>>,
}

static FIELD_CACHE: Lazy<Mutex<HashMap<u64, Arc<CycloField>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl CycloField {
    /// Field of order M, memoized process-wide.
    pub fn with_order(m: u64) -> Arc<CycloField> {
        assert!(m >= 1, "cyclotomic order must be positive");
        let mut cache = FIELD_CACHE.lock().expect("field cache poisoned");
        Arc::clone(cache.entry(m).or_insert_with(|| Arc::new(Self::build(m))))
    }

    /// Field Q(zeta_M) for the DFT dimension `n`, with M = lcm(4, 2n).
    pub fn for_dimension(n: usize) -> Result<Arc<CycloField>> {
        Ok(Self::with_order(field_order_for(n)?))
    }

    fn build(m: u64) -> CycloField {
        let modulus = cyclotomic_polynomial(m);
        let degree = modulus.len() - 1;
        let table_len = (m as usize).max(2 * degree - 1).max(1);
        let mut power_table: Vec<Vec<BigRational>> = Vec::with_capacity(table_len);
        let mut current = vec![rat_zero(); degree];
        current[0] = BigRational::one();
        power_table.push(current.clone());
        for _ in 1..table_len {
            // multiply by x, then fold the overflow back with x^deg = -(low part of Phi)
            let lead = current[degree - 1].clone();
            for k in (1..degree).rev() {
                current[k] = current[k - 1].clone();
            }
            current[0] = rat_zero();
            if !lead.is_zero() {
                for k in 0..degree {
                    let c = BigRational::from_integer(modulus[k].clone()) * &lead;
                    current[k] -= c;
                }
            }
            power_table.push(current.clone());
        }
        CycloField {
            order: m,
            degree,
            modulus,
            power_table,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree of the extension, phi(M).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the reduction modulus Phi_M, low-degree-first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn reduced_power(&self, j: usize) -> &[BigRational] {
        &self.power_table[j]
    }
}

impl fmt::Debug for CycloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CycloField")
            .field("order", &self.order)
            .field("degree", &self.degree)
            .finish()
    }
}

/// One element of Q(zeta_M): `coeffs[k]` multiplies zeta_M^k, with the
/// vector always of length phi(M) (reduced form).
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar(order {}; [", self.field.order)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "])")
    }
}

impl CycloScalar {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloScalar {
            field: Arc::clone(field),
            coeffs: vec![rat_zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::zeta_pow(field, 0)
    }

    /// zeta_M^k for any integer k (negative exponents wrap around).
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let m = field.order as i64;
        let j = k.rem_euclid(m) as usize;
        CycloScalar {
            field: Arc::clone(field),
            coeffs: field.reduced_power(j).to_vec(),
        }
    }

    /// Element with the given rational coefficients; shorter vectors are
    /// zero-padded, longer ones are reduced through the power table.
    pub fn from_rationals(field: &Arc<CycloField>, coeffs: Vec<BigRational>) -> Self {
        let deg = field.degree;
        let mut out = vec![rat_zero(); deg];
        for (j, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < deg {
                out[j] += c;
            } else {
                for (t, r) in field
                    .reduced_power(j % field.order as usize)
                    .iter()
                    .enumerate()
                {
                    if !r.is_zero() {
                        out[t] += &c * r;
                    }
                }
            }
        }
        CycloScalar {
            field: Arc::clone(field),
            coeffs: out,
        }
    }

    pub fn from_i64_coeffs(field: &Arc<CycloField>, coeffs: &[i64]) -> Self {
        Self::from_rationals(
            field,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_ratio(field: &Arc<CycloField>, num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut s = Self::zero(field);
        s.coeffs[0] = BigRational::new(BigInt::from(num), BigInt::from(den));
        s
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn require_same_order(&self, rhs: &Self) -> Result<()> {
        if self.field.order != rhs.field.order {
            Err(AlgebraError::OrderMismatch {
                left: self.field.order,
                right: rhs.field.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.require_same_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.require_same_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.require_same_order(rhs)?;
        let deg = self.field.degree;
        if deg == 1 {
            let c = &self.coeffs[0] * &rhs.coeffs[0];
            return Ok(CycloScalar {
                field: Arc::clone(&self.field),
                coeffs: vec![c],
            });
        }
        let mut conv = vec![rat_zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut out: Vec<BigRational> = conv[..deg].to_vec();
        for (j, c) in conv.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (t, r) in self.field.reduced_power(j).iter().enumerate() {
                if !r.is_zero() {
                    out[t] += c * r;
                }
            }
        }
        Ok(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: out,
        })
    }

    pub fn negate(&self) -> Self {
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Complex conjugation, the automorphism zeta -> zeta^{M-1}.
    pub fn conjugate(&self) -> Self {
        let m = self.field.order as usize;
        let deg = self.field.degree;
        let mut out = vec![rat_zero(); deg];
        out[0] = self.coeffs[0].clone();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            for (t, r) in self.field.reduced_power(m - k).iter().enumerate() {
                if !r.is_zero() {
                    out[t] += c * r;
                }
            }
        }
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: out,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against Phi_M (which is irreducible, so any nonzero element is a
    /// unit).
    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let modulus: Vec<BigRational> = self
            .field
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = rat_ext_gcd_mod(&self.coeffs, &modulus);
        if rat_is_zero_poly(&g) || g.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(AlgebraError::Internal(format!(
                "gcd with Phi_{} is not a nonzero constant",
                self.field.order
            )));
        }
        let ginv = BigRational::one() / &g[0];
        let coeffs = s.into_iter().map(|c| c * &ginv).collect();
        Ok(Self::from_rationals(&self.field, coeffs))
    }

    /// Numeric image under zeta_M -> exp(2 pi i / M).
    pub fn to_complex(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI / self.field.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().unwrap_or_else(|| {
                // fall back to separate conversion when the ratio overflows
                let n = c.numer().to_f64().unwrap_or(f64::MAX);
                let d = c.denom().to_f64().unwrap_or(f64::MAX);
                n / d
            });
            let angle = theta * k as f64;
            acc += Complex64::new(angle.cos(), angle.sin()) * x;
        }
        acc
    }

    /// Max |numerator|, |denominator| over the coefficients; a cheap
    /// proxy for expression swell in long eliminations.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .flat_map(|c| [c.numer().abs(), c.denom().abs()])
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}
