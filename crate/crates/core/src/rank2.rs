//! Closed forms for rank-2 exchange matrices `[[0, -b], [a, 0]]` with
//! `ab >= 4`.
//!
//! Seeds are labelled by `t` in `Z`: `t > 0` is reached from the initial
//! seed by the word `1, 2, 1, ..` of length `t`, and `t < 0` by `2, 1, 2, ..`
//! of length `|t|`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chebyshev::{nu_inv_times_odd, nu_times_odd, ChebyshevTable};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quadratic::QuadraticNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

pub(crate) fn require_infinite(a: &BigInt, b: &BigInt) -> Result<()> {
    if !a.is_positive() || !b.is_positive() || a * b < BigInt::from(4) {
        return Err(Error::NotInfiniteType {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    Ok(())
}

/// The mutation word reaching the seed labelled `t`.
pub fn rank2_word(t: i64) -> Vec<usize> {
    let (first, second) = if t >= 0 { (1, 2) } else { (2, 1) };
    (0..t.unsigned_abs())
        .map(|i| if i % 2 == 0 { first } else { second })
        .collect()
}

fn mat(x: [[BigInt; 2]; 2]) -> IntMatrix {
    let [[p, q], [r, s]] = x;
    IntMatrix::from_rows(vec![vec![p, q], vec![r, s]]).expect("2x2")
}

/// `(C_t, G_t)` assembled from Chebyshev values.
pub fn rank2_matrices(t: i64, a: &BigInt, b: &BigInt) -> Result<(IntMatrix, IntMatrix)> {
    require_infinite(a, b)?;
    if t == 1 {
        let m = mat([
            [-BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ]);
        return Ok((m.clone(), m));
    }
    let n = t.abs() / 2;
    let table = ChebyshevTable::new(a * b, 2 * n + 2);
    let u = |k: i64| table.get(k).coefficient().clone();
    let nu = |k: i64| nu_times_odd(table.get(k), b);
    let nu_inv = |k: i64| nu_inv_times_odd(table.get(k), a);
    let odd = t.rem_euclid(2) == 1;
    Ok(match (t > 0, odd) {
        (true, true) => (
            mat([
                [u(2 * n - 2), -nu(2 * n - 1)],
                [nu_inv(2 * n - 3), -u(2 * n - 2)],
            ]),
            mat([
                [u(2 * n - 2), nu(2 * n - 3)],
                [-nu_inv(2 * n - 1), -u(2 * n - 2)],
            ]),
        ),
        (true, false) => (
            mat([
                [-u(2 * n - 2), nu(2 * n - 3)],
                [-nu_inv(2 * n - 3), u(2 * n - 4)],
            ]),
            mat([
                [u(2 * n - 4), nu(2 * n - 3)],
                [-nu_inv(2 * n - 3), -u(2 * n - 2)],
            ]),
        ),
        (false, true) => (
            mat([
                [u(2 * n), -nu(2 * n - 1)],
                [nu_inv(2 * n + 1), -u(2 * n)],
            ]),
            mat([
                [u(2 * n), nu(2 * n + 1)],
                [-nu_inv(2 * n - 1), -u(2 * n)],
            ]),
        ),
        (false, false) => (
            mat([
                [-u(2 * n - 2), nu(2 * n - 1)],
                [-nu_inv(2 * n - 1), u(2 * n)],
            ]),
            mat([
                [u(2 * n), nu(2 * n - 1)],
                [-nu_inv(2 * n - 1), -u(2 * n - 2)],
            ]),
        ),
    })
}

/// `g_1, .., g_m` (forward) or `g'_1, .., g'_m` (backward) by the integer
/// recursions.
pub fn g_sequence(direction: Direction, m: usize, a: &BigInt, b: &BigInt) -> Result<Vec<[BigInt; 2]>> {
    require_infinite(a, b)?;
    let (first, second, odd_factor, even_factor) = match direction {
        Direction::Forward => (
            [-BigInt::one(), BigInt::zero()],
            [BigInt::zero(), -BigInt::one()],
            a,
            b,
        ),
        Direction::Backward => (
            [b.clone(), -BigInt::one()],
            [a * b - 1, -a.clone()],
            b,
            a,
        ),
    };
    let mut seq = vec![first, second];
    while seq.len() < m {
        let k = seq.len(); // next term is g_{k+1}; recursion index k - 1
        let factor = if (k - 1) % 2 == 1 { odd_factor } else { even_factor };
        let (gm, gm1) = (&seq[k - 2], &seq[k - 1]);
        seq.push([-&gm[0] + factor * &gm1[0], -&gm[1] + factor * &gm1[1]]);
    }
    seq.truncate(m);
    Ok(seq)
}

/// The single term `g_m` or `g'_m` (1-based).
pub fn g_term(direction: Direction, m: usize, a: &BigInt, b: &BigInt) -> Result<[BigInt; 2]> {
    assert!(m >= 1, "g-sequence index starts at 1");
    Ok(g_sequence(direction, m, a, b)?.pop().expect("nonempty"))
}

/// `g_m` / `g'_m` read off the closed-form G-matrices.
pub fn g_term_closed_form(direction: Direction, m: usize, a: &BigInt, b: &BigInt) -> Result<[BigInt; 2]> {
    let m = m as i64;
    let (t, col) = match direction {
        Direction::Forward => (m, if m % 2 == 1 { 0 } else { 1 }),
        Direction::Backward => (-m, if m % 2 == 1 { 1 } else { 0 }),
    };
    let (_, g) = rank2_matrices(t, a, b)?;
    Ok([g.get(0, col).clone(), g.get(1, col).clone()])
}

/// The limit vectors `v` and `v'` of the forward and backward sequences.
pub fn limit_vectors(a: &BigInt, b: &BigInt) -> Result<([QuadraticNumber; 2], [QuadraticNumber; 2])> {
    require_infinite(a, b)?;
    let ab = a * b;
    let delta: BigInt = &ab * (&ab - BigInt::from(4));
    let x = BigRational::new(-a.clone(), BigInt::from(2));
    let y = BigRational::new(BigInt::one(), 2 * b);
    let one = QuadraticNumber::one();
    let v = [one.clone(), QuadraticNumber::new(x.clone(), -y.clone(), delta.clone())];
    let v_prime = [one, QuadraticNumber::new(x, y, delta)];
    Ok((v, v_prime))
}

/// `beta / alpha` for a g-vector `(alpha, beta)`.
pub fn slope(g: &[BigInt; 2]) -> Option<BigRational> {
    if g[0].is_zero() {
        None
    } else {
        Some(BigRational::new(g[1].clone(), g[0].clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::ExchangeMatrix;
    use crate::seed::Seed;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn pairs(v: &[[i64; 2]]) -> Vec<[BigInt; 2]> {
        v.iter().map(|&[x, y]| [big(x), big(y)]).collect()
    }

    #[test]
    fn words_follow_labelling() {
        assert_eq!(rank2_word(0), Vec::<usize>::new());
        assert_eq!(rank2_word(3), vec![1, 2, 1]);
        assert_eq!(rank2_word(-4), vec![2, 1, 2, 1]);
    }

    #[test]
    fn known_g_matrices() {
        let (a, b) = (big(3), big(2));
        let (_, g5) = rank2_matrices(5, &a, &b).unwrap();
        assert_eq!(g5, IntMatrix::from_i64(&[[5, 2], [-12, -5]]));
        let (_, g2) = rank2_matrices(2, &a, &b).unwrap();
        assert_eq!(g2, IntMatrix::from_i64(&[[-1, 0], [0, -1]]));
        let (c0, g0) = rank2_matrices(0, &a, &b).unwrap();
        assert_eq!(c0, IntMatrix::identity(2));
        assert_eq!(g0, IntMatrix::identity(2));
    }

    #[test]
    fn closed_forms_match_mutation() {
        for (a, b) in [(3, 2), (2, 2), (4, 1), (1, 4), (5, 1), (7, 3)] {
            let (a, b) = (big(a), big(b));
            let seed = Seed::initial(ExchangeMatrix::rank2(&a, &b).unwrap());
            for t in -12..=12 {
                let s = seed.apply_word(&rank2_word(t)).unwrap();
                let (c, g) = rank2_matrices(t, &a, &b).unwrap();
                assert_eq!(s.c(), &c, "C_{t} for (a,b)=({a},{b})");
                assert_eq!(s.g(), &g, "G_{t} for (a,b)=({a},{b})");
                let sign = if t.rem_euclid(2) == 0 { big(1) } else { big(-1) };
                assert_eq!(c.determinant(), sign);
            }
        }
    }

    #[test]
    fn running_example_sequences() {
        let (a, b) = (big(3), big(2));
        assert_eq!(
            g_sequence(Direction::Forward, 7, &a, &b).unwrap(),
            pairs(&[[-1, 0], [0, -1], [1, -3], [2, -5], [5, -12], [8, -19], [19, -45]])
        );
        assert_eq!(
            g_sequence(Direction::Backward, 5, &a, &b).unwrap(),
            pairs(&[[2, -1], [5, -3], [8, -5], [19, -12], [30, -19]])
        );
    }

    #[test]
    fn recursion_matches_closed_form() {
        for (a, b) in [(3, 2), (2, 2), (4, 1), (5, 1), (1, 6)] {
            let (a, b) = (big(a), big(b));
            for dir in [Direction::Forward, Direction::Backward] {
                for m in 1..=14 {
                    assert_eq!(
                        g_term(dir, m, &a, &b).unwrap(),
                        g_term_closed_form(dir, m, &a, &b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn limit_vectors_affine_and_product() {
        let (v, vp) = limit_vectors(&big(4), &big(1)).unwrap();
        assert_eq!(v, vp);
        assert_eq!(v[1], QuadraticNumber::from_integer(big(-2)));

        let (v, vp) = limit_vectors(&big(3), &big(2)).unwrap();
        let product = &v[1] * &vp[1];
        assert_eq!(product, QuadraticNumber::rational(BigRational::new(big(3), big(2))));

        let (v, vp) = limit_vectors(&big(5), &big(1)).unwrap();
        let s5 = QuadraticNumber::sqrt(big(5));
        let half = BigRational::new(big(1), big(2));
        let expected = (&QuadraticNumber::from_integer(big(-5)) - &s5).scale(&half);
        assert_eq!(v[1], expected);
        let expected = (&QuadraticNumber::from_integer(big(-5)) + &s5).scale(&half);
        assert_eq!(vp[1], expected);
        let g40 = g_term(Direction::Forward, 40, &big(5), &big(1)).unwrap();
        let numeric = slope(&g40).unwrap();
        let numeric = crate::quadratic::QuadraticNumber::rational(numeric).to_f64();
        assert!((numeric - v[1].to_f64()).abs() < 1e-6);
    }

    #[test]
    fn finite_type_rejected() {
        assert!(rank2_matrices(3, &big(1), &big(3)).is_err());
        assert!(limit_vectors(&big(1), &big(1)).is_err());
    }
}
