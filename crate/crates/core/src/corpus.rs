//! Seeded random exchange matrices for property checks.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exchange::ExchangeMatrix;
use crate::matrix::IntMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `B = S diag(d)` with `S` skew-symmetric, `|s_ij| <= max_s` and
/// `1 <= d_i <= max_d`.
pub fn random_skew_symmetrizable<R: Rng>(rng: &mut R, n: usize, max_s: i64, max_d: i64) -> ExchangeMatrix {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max_d)).collect();
    let mut s = vec![vec![0i64; n]; n];
    for (i, j) in (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))) {
        let x = rng.gen_range(-max_s..=max_s);
        s[i][j] = x;
        s[j][i] = -x;
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(s[i][j] * d[j])).collect())
        .collect();
    ExchangeMatrix::new(IntMatrix::from_rows(rows).expect("square")).expect("skew-symmetrizable by construction")
}

/// A cyclic, totally-infinite rank-3 matrix with `p_i > 0` and entries of
/// absolute value at most `max_entry`.
pub fn random_cyclic_totally_infinite<R: Rng>(rng: &mut R, max_entry: i64) -> ExchangeMatrix {
    loop {
        let d: [i64; 3] = [
            rng.gen_range(1..=4),
            rng.gen_range(1..=4),
            rng.gen_range(1..=4),
        ];
        let s21 = rng.gen_range(1..=max_entry);
        let s32 = rng.gen_range(1..=max_entry);
        let s13 = rng.gen_range(1..=max_entry);
        let entries = [
            [0, -s21 * d[1], s13 * d[2]],
            [s21 * d[0], 0, -s32 * d[2]],
            [-s13 * d[0], s32 * d[1], 0],
        ];
        if entries.iter().flatten().any(|x| x.abs() > max_entry) {
            continue;
        }
        let m = ExchangeMatrix::from_i64(&entries).expect("skew-symmetrizable by construction");
        if m.is_totally_infinite() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_contracts() {
        let mut r = rng(7);
        for _ in 0..50 {
            let m = random_cyclic_totally_infinite(&mut r, 60);
            let cp = m.cyclic_presentation().unwrap();
            assert!(cp.p.iter().all(|p| p > &BigInt::from(0)));
            assert!(m.entries().max_abs_entry() <= BigInt::from(60));
            assert!(m.is_totally_infinite());
        }
        let m = random_skew_symmetrizable(&mut r, 4, 3, 3);
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = random_skew_symmetrizable(&mut rng(42), 3, 4, 3);
        let b = random_skew_symmetrizable(&mut rng(42), 3, 4, 3);
        assert_eq!(a, b);
    }
}
