//! Chebyshev polynomials of the second kind evaluated at `kappa / 2`,
//! where `kappa^2 = ab`.
//!
//! Values live in `Z[kappa]`: even indices are integers and odd indices are
//! integer multiples of `kappa`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::quadratic::QuadraticNumber;

/// `U_n(kappa/2) = even_part + odd_part * kappa`.
///
/// For every `n >= -2` the part of the wrong parity is zero; both parts
/// vanish at `n = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChebyshevValue {
    pub index: i64,
    pub even_part: BigInt,
    pub odd_part: BigInt,
}

impl ChebyshevValue {
    /// The nonzero-parity coefficient: `even_part` for even `n`, else `odd_part`.
    pub fn coefficient(&self) -> &BigInt {
        if self.index.rem_euclid(2) == 0 {
            &self.even_part
        } else {
            &self.odd_part
        }
    }

    pub fn is_parity_consistent(&self) -> bool {
        if self.index.rem_euclid(2) == 0 {
            self.odd_part.is_zero()
        } else {
            self.even_part.is_zero()
        }
    }

    pub fn to_quadratic(&self, ab: &BigInt) -> QuadraticNumber {
        QuadraticNumber::new(
            BigRational::from_integer(self.even_part.clone()),
            BigRational::from_integer(self.odd_part.clone()),
            ab.clone(),
        )
    }
}

/// Product of two elements of `Z[kappa]` given as `(even, odd)` pairs.
pub fn kappa_mul(ab: &BigInt, x: (&BigInt, &BigInt), y: (&BigInt, &BigInt)) -> (BigInt, BigInt) {
    (x.0 * y.0 + x.1 * y.1 * ab, x.0 * y.1 + x.1 * y.0)
}

/// `U_n(kappa/2)` for `n >= -2`.
pub fn chebyshev_u(n: i64, ab: &BigInt) -> ChebyshevValue {
    assert!(n >= -2, "Chebyshev index {n} below -2");
    ChebyshevTable::new(ab.clone(), n).get(n).clone()
}

/// The values `U_{-2}, .., U_max` computed once by the three-term recursion.
#[derive(Clone, Debug)]
pub struct ChebyshevTable {
    ab: BigInt,
    values: Vec<ChebyshevValue>,
}

impl ChebyshevTable {
    pub fn new(ab: BigInt, max: i64) -> Self {
        let mut values = vec![
            ChebyshevValue {
                index: -2,
                even_part: -BigInt::one(),
                odd_part: BigInt::zero(),
            },
            ChebyshevValue {
                index: -1,
                even_part: BigInt::zero(),
                odd_part: BigInt::zero(),
            },
        ];
        for n in 0..=max {
            let prev = &values[values.len() - 1];
            let prev2 = &values[values.len() - 2];
            // kappa * (e + o kappa) = o ab + e kappa
            let even = &prev.odd_part * &ab - &prev2.even_part;
            let odd = &prev.even_part - &prev2.odd_part;
            values.push(ChebyshevValue {
                index: n,
                even_part: even,
                odd_part: odd,
            });
        }
        Self { ab, values }
    }

    pub fn ab(&self) -> &BigInt {
        &self.ab
    }

    pub fn max_index(&self) -> i64 {
        self.values.len() as i64 - 3
    }

    pub fn get(&self, n: i64) -> &ChebyshevValue {
        assert!(n >= -2 && n <= self.max_index(), "index {n} outside table");
        &self.values[(n + 2) as usize]
    }

    fn extend_to(&mut self, max: i64) {
        if max > self.max_index() {
            *self = Self::new(self.ab.clone(), max.max(2 * self.max_index()));
        }
    }

    /// `nu * U_p / U_q` for adjacent `p`, `q`, as an exact rational, with
    /// `nu * kappa = b` and `kappa / nu = a`. `None` means the denominator
    /// vanishes (the ratio is `+infinity`).
    pub fn nu_ratio(&mut self, p: i64, q: i64, a: &BigInt, b: &BigInt) -> Option<BigRational> {
        assert_eq!((p - q).abs(), 1, "nu_ratio needs adjacent indices");
        self.extend_to(p.max(q));
        let up = self.get(p).coefficient().clone();
        let uq = self.get(q).coefficient().clone();
        if uq.is_zero() {
            return None;
        }
        let (num, den) = if p.rem_euclid(2) == 1 {
            (b * up, uq)
        } else {
            (up, a * uq)
        };
        Some(BigRational::new(num, den))
    }
}

/// `nu * U_n` for odd `n`, as an integer.
pub(crate) fn nu_times_odd(u: &ChebyshevValue, b: &BigInt) -> BigInt {
    debug_assert!(u.index.rem_euclid(2) == 1);
    &u.odd_part * b
}

/// `nu^{-1} * U_n` for odd `n`, as an integer.
pub(crate) fn nu_inv_times_odd(u: &ChebyshevValue, a: &BigInt) -> BigInt {
    debug_assert!(u.index.rem_euclid(2) == 1);
    &u.odd_part * a
}

/// Floating-point `U_n(kappa/2)` from the closed surd formula; a cross-check
/// only, never used for decisions.
pub fn chebyshev_u_f64(n: i64, ab: f64) -> f64 {
    let kappa = ab.sqrt();
    if (ab - 4.0).abs() < f64::EPSILON {
        return (n + 1) as f64;
    }
    let disc = (ab - 4.0).sqrt();
    let lambda = (kappa + disc) / 2.0;
    let mu = (kappa - disc) / 2.0;
    (lambda.powi(n as i32 + 1) - mu.powi(n as i32 + 1)) / (lambda - mu)
}
