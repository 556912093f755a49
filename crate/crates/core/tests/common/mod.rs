//! Named matrices and mutation-based oracles shared by the integration tests.
#![allow(dead_code)]

use gfan_core::{ExchangeMatrix, Seed};
use num_bigint::BigInt;

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn m3(rows: [[i64; 3]; 3]) -> ExchangeMatrix {
    ExchangeMatrix::from_i64(&rows).unwrap()
}

pub fn markov() -> ExchangeMatrix {
    m3([[0, -2, 2], [2, 0, -2], [-2, 2, 0]])
}

pub fn wing() -> ExchangeMatrix {
    m3([[0, -2, -4], [3, 0, -6], [2, 2, 0]])
}

pub fn pinwheel() -> ExchangeMatrix {
    m3([[0, -2, 4], [3, 0, -6], [-2, 2, 0]])
}

pub fn tunnel() -> ExchangeMatrix {
    m3([[0, -6, 4886], [9, 0, -830], [-7329, 830, 0]])
}

pub fn wide_tunnel() -> ExchangeMatrix {
    m3([[0, -15, 2013], [2, 0, -139], [-1342, 695, 0]])
}

pub fn close_up() -> ExchangeMatrix {
    m3([[0, -16, 237602], [24, 0, -14889], [-356403, 14889, 0]])
}

pub fn c5_family(p2: i64) -> ExchangeMatrix {
    m3([[0, -2, p2], [3, 0, -3], [-p2, 2, 0]])
}

/// The rank-3 frame with `(a, b) = (3, 2)` used by the worked examples.
pub fn frame32(c0: i64, d0: i64) -> ExchangeMatrix {
    ExchangeMatrix::rank3_frame(&big(3), &big(2), &big(c0), &big(d0)).unwrap()
}

pub struct WorkedExample {
    pub name: &'static str,
    pub c0: i64,
    pub d0: i64,
}

pub const WORKED_EXAMPLES: [WorkedExample; 8] = [
    WorkedExample { name: "type 1", c0: 2, d0: 2 },
    WorkedExample { name: "type 2", c0: 2, d0: -2 },
    WorkedExample { name: "type 3", c0: -2, d0: -2 },
    WorkedExample { name: "type 4-1", c0: -2, d0: 2 },
    WorkedExample { name: "type 4-2-1", c0: -100, d0: 159 },
    WorkedExample { name: "type 4-2-2", c0: -50, d0: 79 },
    WorkedExample { name: "type 4-3-1", c0: -50, d0: 21 },
    WorkedExample { name: "type 4-3-2", c0: -500, d0: 211 },
];

/// g-vectors produced by alternating mutations in the pair `(j, k)`:
/// `forward[m-1]` is the vector created at step `m` of `j, k, j, ..` and
/// `backward[m-1]` the one of `k, j, k, ..`. Coordinates are reordered to
/// `(j, k, rest..)`.
pub fn alternating_by_mutation(b: &ExchangeMatrix, j: usize, k: usize, m_max: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = b.rank();
    let mut order = vec![j, k];
    order.extend((1..=n).filter(|&l| l != j && l != k));
    let run = |first: usize, second: usize| {
        let mut seed = Seed::initial(b.clone());
        let mut out = Vec::new();
        for m in 1..=m_max {
            let dir = if m % 2 == 1 { first } else { second };
            seed = seed.mutate(dir).unwrap();
            let col = seed.g().column(dir - 1);
            out.push(order.iter().map(|&l| col[l - 1].clone()).collect());
        }
        out
    };
    (run(j, k), run(k, j))
}

pub fn to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap()
}

/// Lifted g-vectors listed for the worked examples, in `WORKED_EXAMPLES` order:
/// `(forward, backward)` starting at `m = 1`.
pub type Lifted = (&'static [[i64; 3]], &'static [[i64; 3]]);

pub const GOLDEN_LIFTED: [Lifted; 8] = [
    // type 1
    (&[[-1, 0, 0], [0, -1, 0], [1, -3, 0], [2, -5, 0], [5, -12, 0]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    // type 2
    (&[[-1, 0, 0], [0, -1, 2], [1, -3, 6], [2, -5, 10], [5, -12, 24]],
     &[[2, -1, 2], [5, -3, 6], [8, -5, 10], [19, -12, 24], [30, -19, 38]]),
    // type 3
    (&[[-1, 0, 2], [0, -1, 6], [1, -3, 16], [2, -5, 26], [5, -12, 62]],
     &[[2, -1, 2], [5, -3, 8], [8, -5, 14], [19, -12, 34], [30, -19, 54]]),
    // type 4-1
    (&[[-1, 0, 2], [0, -1, 2], [1, -3, 4], [2, -5, 6], [5, -12, 14]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    // type 4-2-1
    (&[[-1, 0, 100], [0, -1, 41], [1, -3, 23], [2, -5, 5], [5, -12, 0], [8, -19, 0], [19, -45, 0]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    // type 4-2-2
    (&[[-1, 0, 50], [0, -1, 21], [1, -3, 13], [2, -5, 5], [5, -12, 2], [8, -19, 0], [19, -45, 0]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    // type 4-3-1
    (&[[-1, 0, 50], [0, -1, 79], [1, -3, 187], [2, -5, 295], [5, -12, 698]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 1], [71, -45, 5], [112, -71, 9]]),
    // type 4-3-2
    (&[[-1, 0, 500], [0, -1, 789], [1, -3, 1867], [2, -5, 2945], [5, -12, 6968]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0], [71, -45, 5], [112, -71, 19]]),
];

/// Every seed on the exchange tree within `depth` steps, without immediate
/// backtracking.
pub fn seeds_to_depth(b: &ExchangeMatrix, depth: usize) -> Vec<Seed> {
    let n = b.rank();
    let mut all = vec![Seed::initial(b.clone())];
    let mut level = vec![(all[0].clone(), 0usize)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (s, last) in &level {
            for k in (1..=n).filter(|k| k != last) {
                next.push((s.mutate(k).unwrap(), k));
            }
        }
        all.extend(next.iter().map(|(s, _)| s.clone()));
        level = next;
    }
    all
}

/// Matrices of every seed within `depth` steps.
pub fn matrices_to_depth(b: &ExchangeMatrix, depth: usize) -> Vec<ExchangeMatrix> {
    let n = b.rank();
    let mut all = vec![b.clone()];
    let mut level = vec![(b.clone(), 0usize)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (m, last) in &level {
            for k in (1..=n).filter(|k| k != last) {
                next.push((m.mutate(k).unwrap(), k));
            }
        }
        all.extend(next.iter().map(|(m, _)| m.clone()));
        level = next;
    }
    all
}
