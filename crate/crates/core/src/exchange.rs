//! Exchange matrices: mutation, skew-symmetrizers and the rank-3 cyclic
//! presentation with its Markov constant.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[inline]
pub(crate) fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

pub(crate) fn check_direction(k: usize, rank: usize) -> Result<usize> {
    if k == 0 || k > rank {
        Err(Error::IndexOutOfRange { index: k, rank })
    } else {
        Ok(k - 1)
    }
}

/// A skew-symmetrizable integer matrix together with its normalized
/// skew-symmetrizer (positive entries, gcd 1, minimal on each connected
/// component).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    entries: IntMatrix,
    symmetrizer: Vec<BigInt>,
}

impl ExchangeMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        if entries.rows() < 2 {
            return Err(Error::RankTooSmall(entries.rows()));
        }
        let symmetrizer = skew_symmetrizer(&entries)?;
        Ok(Self {
            entries,
            symmetrizer,
        })
    }

    pub fn from_i64<const N: usize>(rows: &[[i64; N]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    /// The rank-2 matrix `[[0, -b], [a, 0]]`.
    pub fn rank2(a: &BigInt, b: &BigInt) -> Result<Self> {
        let z = BigInt::zero();
        Self::new(IntMatrix::from_rows(vec![
            vec![z.clone(), -b],
            vec![a.clone(), z],
        ])?)
    }

    /// The rank-3 matrix `[[0, -b, -b c0], [a, 0, -a d0], [c0, d0, 0]]`.
    pub fn rank3_frame(a: &BigInt, b: &BigInt, c0: &BigInt, d0: &BigInt) -> Result<Self> {
        let z = BigInt::zero();
        Self::new(IntMatrix::from_rows(vec![
            vec![z.clone(), -b, -(b * c0)],
            vec![a.clone(), z.clone(), -(a * d0)],
            vec![c0.clone(), d0.clone(), z],
        ])?)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.entries.rows()
    }

    #[inline]
    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    /// Entry `b_ij` with 0-based storage indices.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.entries.get(i, j)
    }

    #[inline]
    pub fn symmetrizer(&self) -> &[BigInt] {
        &self.symmetrizer
    }

    /// Matrix mutation in direction `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let k = check_direction(k, self.rank())?;
        Ok(self.mutate_unchecked(k))
    }

    pub(crate) fn mutate_unchecked(&self, k: usize) -> Self {
        let n = self.rank();
        let b = &self.entries;
        let mut out = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == k || j == k {
                    -b.get(i, j)
                } else {
                    let bik = b.get(i, k);
                    let bkj = b.get(k, j);
                    b.get(i, j) + bik * pos(bkj) + pos(&-bik) * bkj
                };
                out.set(i, j, v);
            }
        }
        Self {
            entries: out,
            symmetrizer: self.symmetrizer.clone(),
        }
    }

    /// Applies mutations left to right.
    pub fn mutate_word(&self, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |m, &k| m.mutate(k))
    }

    /// Relabels indices: the new index `i` is the old index `perm[i]` (0-based).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            entries: self.entries.permuted(perm),
            symmetrizer: perm.iter().map(|&p| self.symmetrizer[p].clone()).collect(),
        }
    }

    /// `|b_ij b_ji|` for 1-based indices.
    pub fn pair_product(&self, i: usize, j: usize) -> Result<BigInt> {
        let i0 = check_direction(i, self.rank())?;
        let j0 = check_direction(j, self.rank())?;
        Ok((self.get(i0, j0) * self.get(j0, i0)).abs())
    }

    pub fn is_totally_infinite(&self) -> bool {
        let four = BigInt::from(4);
        let n = self.rank();
        (0..n).all(|i| {
            (i + 1..n).all(|j| (self.get(i, j) * self.get(j, i)).abs() >= four)
        })
    }

    fn require_rank3(&self) -> Result<()> {
        if self.rank() != 3 {
            return Err(Error::RankMismatch {
                expected: 3,
                found: self.rank(),
            });
        }
        Ok(())
    }

    pub fn cyclic_presentation(&self) -> Result<CyclicPresentation> {
        self.require_rank3()?;
        let b = |i: usize, j: usize| self.get(i, j).clone();
        Ok(CyclicPresentation {
            p: [b(2, 1), b(0, 2), b(1, 0)],
            p_prime: [-b(1, 2), -b(2, 0), -b(0, 1)],
        })
    }

    /// Swaps indices 1 and 2 when `p_3 < 0`; returns whether a swap happened.
    pub fn normalized_p3_positive(&self) -> Result<(Self, bool)> {
        let cp = self.cyclic_presentation()?;
        if cp.p[2].is_negative() {
            Ok((self.permuted(&[1, 0, 2]), true))
        } else {
            Ok((self.clone(), false))
        }
    }

    pub fn markov_constant(&self) -> Result<BigInt> {
        let cp = self.cyclic_presentation()?;
        if !cp.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        Ok(cp.markov_constant())
    }

    /// Cluster-cyclicity of a cyclic rank-3 matrix: totally-infinite with
    /// Markov constant at most 4.
    pub fn is_cluster_cyclic(&self) -> Result<bool> {
        let c = self.markov_constant()?;
        Ok(self.is_totally_infinite() && c <= BigInt::from(4))
    }
}

impl fmt::Debug for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExchangeMatrix({})", self.entries)
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries)
    }
}

/// Computes the normalized skew-symmetrizer `D = diag(d_1, .., d_n)` with
/// `d_i b_ij = -d_j b_ji`.
///
/// Each connected component of the support graph is scaled independently to
/// the smallest positive integer solution, so the whole tuple has gcd 1.
#[allow(clippy::needless_range_loop)]
pub fn skew_symmetrizer(entries: &IntMatrix) -> Result<Vec<BigInt>> {
    if !entries.is_square() {
        return Err(Error::NotSquare {
            rows: entries.rows(),
            cols: entries.cols(),
        });
    }
    let n = entries.rows();
    for i in 0..n {
        if !entries.get(i, i).is_zero() {
            return Err(Error::NotSkewSymmetrizable(format!(
                "nonzero diagonal entry at ({}, {})",
                i + 1,
                i + 1
            )));
        }
        for j in i + 1..n {
            let (bij, bji) = (entries.get(i, j), entries.get(j, i));
            if bij.is_zero() != bji.is_zero() {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "b_{}{} and b_{}{} are not simultaneously zero",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
            if !bij.is_zero() && bij.signum() == bji.signum() {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "b_{}{} and b_{}{} have the same sign",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    let mut d: Vec<Option<BigRational>> = vec![None; n];
    let mut out = vec![BigInt::zero(); n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(BigRational::one());
        let mut component = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                let bij = entries.get(i, j);
                if bij.is_zero() {
                    continue;
                }
                // d_j = -d_i b_ij / b_ji
                let dj = -di.clone() * BigRational::new(bij.clone(), entries.get(j, i).clone());
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::NotSkewSymmetrizable(format!(
                            "inconsistent symmetrizer around index {}",
                            j + 1
                        )));
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        let lcm = component
            .iter()
            .fold(BigInt::one(), |acc, &i| acc.lcm(d[i].as_ref().unwrap().denom()));
        let scaled: Vec<BigInt> = component
            .iter()
            .map(|&i| (d[i].as_ref().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, v) in component.iter().zip(scaled) {
            out[i] = v / &g;
        }
    }
    Ok(out)
}

/// The six off-diagonal parameters of a rank-3 matrix written as
/// `[[0, -p3', p2], [p3, 0, -p1'], [-p2', p1, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPresentation {
    pub p: [BigInt; 3],
    pub p_prime: [BigInt; 3],
}

impl CyclicPresentation {
    pub fn is_cyclic(&self) -> bool {
        self.p.iter().all(Signed::is_positive) || self.p.iter().all(Signed::is_negative)
    }

    pub fn markov_constant(&self) -> BigInt {
        let sum: BigInt = self.p.iter().zip(&self.p_prime).map(|(p, q)| p * q).sum();
        sum - (&self.p[0] * &self.p[1] * &self.p[2]).abs()
    }

    /// `p_1p_2p_3 = p'_1p'_2p'_3`, `p_i p'_i >= 0` and `p_i = 0 <=> p'_i = 0`.
    pub fn satisfies_skew_symmetrizability(&self) -> bool {
        let lhs = &self.p[0] * &self.p[1] * &self.p[2];
        let rhs = &self.p_prime[0] * &self.p_prime[1] * &self.p_prime[2];
        lhs == rhs
            && self
                .p
                .iter()
                .zip(&self.p_prime)
                .all(|(p, q)| !(p * q).is_negative() && p.is_zero() == q.is_zero())
    }

    pub fn to_matrix(&self) -> Result<ExchangeMatrix> {
        let [p1, p2, p3] = &self.p;
        let [q1, q2, q3] = &self.p_prime;
        let z = BigInt::zero();
        ExchangeMatrix::new(IntMatrix::from_rows(vec![
            vec![z.clone(), -q3, p2.clone()],
            vec![p3.clone(), z.clone(), -q1],
            vec![-q2, p1.clone(), z],
        ])?)
    }
}
