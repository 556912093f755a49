//! Reference values for `gfan verify` without an input file.

/// `(name, c0, d0, forward, backward)` for the frame `(a, b) = (3, 2)`;
/// vectors start at `m = 1`.
pub type LiftedExample = (&'static str, i64, i64, &'static [[i64; 3]], &'static [[i64; 3]]);

pub const RANK2_FORWARD: [[i64; 2]; 7] = [[-1, 0], [0, -1], [1, -3], [2, -5], [5, -12], [8, -19], [19, -45]];
pub const RANK2_BACKWARD: [[i64; 2]; 5] = [[2, -1], [5, -3], [8, -5], [19, -12], [30, -19]];

pub const LIFTED: [LiftedExample; 8] = [
    ("1", 2, 2,
     &[[-1, 0, 0], [0, -1, 0], [1, -3, 0], [2, -5, 0], [5, -12, 0]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    ("2", 2, -2,
     &[[-1, 0, 0], [0, -1, 2], [1, -3, 6], [2, -5, 10], [5, -12, 24]],
     &[[2, -1, 2], [5, -3, 6], [8, -5, 10], [19, -12, 24], [30, -19, 38]]),
    ("3", -2, -2,
     &[[-1, 0, 2], [0, -1, 6], [1, -3, 16], [2, -5, 26], [5, -12, 62]],
     &[[2, -1, 2], [5, -3, 8], [8, -5, 14], [19, -12, 34], [30, -19, 54]]),
    ("4-1", -2, 2,
     &[[-1, 0, 2], [0, -1, 2], [1, -3, 4], [2, -5, 6], [5, -12, 14]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    ("4-2-1", -100, 159,
     &[[-1, 0, 100], [0, -1, 41], [1, -3, 23], [2, -5, 5], [5, -12, 0], [8, -19, 0], [19, -45, 0]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    ("4-2-2", -50, 79,
     &[[-1, 0, 50], [0, -1, 21], [1, -3, 13], [2, -5, 5], [5, -12, 2], [8, -19, 0], [19, -45, 0]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0]]),
    ("4-3-1", -50, 21,
     &[[-1, 0, 50], [0, -1, 79], [1, -3, 187], [2, -5, 295], [5, -12, 698]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 1], [71, -45, 5], [112, -71, 9]]),
    ("4-3-2", -500, 211,
     &[[-1, 0, 500], [0, -1, 789], [1, -3, 1867], [2, -5, 2945], [5, -12, 6968]],
     &[[2, -1, 0], [5, -3, 0], [8, -5, 0], [19, -12, 0], [30, -19, 0], [71, -45, 5], [112, -71, 19]]),
];

/// `(name, matrix, Markov constant, cluster-cyclic)`.
pub const MARKOV: [(&str, [[i64; 3]; 3], i64, bool); 5] = [
    ("Markov quiver", [[0, -2, 2], [2, 0, -2], [-2, 2, 0]], 4, true),
    ("pinwheel", [[0, -2, 4], [3, 0, -6], [-2, 2, 0]], 2, true),
    ("tunnel", [[0, -6, 4886], [9, 0, -830], [-7329, 830, 0]], 28, false),
    ("wide tunnel", [[0, -15, 2013], [2, 0, -139], [-1342, 695, 0]], 11, false),
    ("close-up", [[0, -16, 237602], [24, 0, -14889], [-356403, 14889, 0]], 39, false),
];
