//! Seeds `(B, C, G)` along mutation words, tropical signs and G-cones.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::{check_direction, pos, ExchangeMatrix};
use crate::matrix::{dot, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn of(x: &BigInt) -> Option<Sign> {
        match x.sign() {
            num_bigint::Sign::Plus => Some(Sign::Plus),
            num_bigint::Sign::Minus => Some(Sign::Minus),
            num_bigint::Sign::NoSign => None,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => -BigInt::one(),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A vertex of the exchange tree, identified by the word that reaches it.
///
/// `c` and `g` store the c- and g-vectors as columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Seed {
    b: ExchangeMatrix,
    c: IntMatrix,
    g: IntMatrix,
    word: Vec<usize>,
}

impl Seed {
    pub fn initial(b: ExchangeMatrix) -> Self {
        let n = b.rank();
        Self {
            b,
            c: IntMatrix::identity(n),
            g: IntMatrix::identity(n),
            word: Vec::new(),
        }
    }

    /// Assembles a seed without checking any invariant; see [`Seed::verify`].
    pub fn from_parts(b: ExchangeMatrix, c: IntMatrix, g: IntMatrix, word: Vec<usize>) -> Result<Self> {
        let n = b.rank();
        for m in [&c, &g] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(Self { b, c, g, word })
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    #[inline]
    pub fn b(&self) -> &ExchangeMatrix {
        &self.b
    }

    #[inline]
    pub fn c(&self) -> &IntMatrix {
        &self.c
    }

    #[inline]
    pub fn g(&self) -> &IntMatrix {
        &self.g
    }

    #[inline]
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Sign of the c-vector `k` (1-based).
    pub fn tropical_sign(&self, k: usize) -> Result<Sign> {
        let k0 = check_direction(k, self.rank())?;
        self.sign_of_column(k0)
    }

    fn sign_of_column(&self, k0: usize) -> Result<Sign> {
        let mut sign = None;
        for i in 0..self.rank() {
            if let Some(s) = Sign::of(self.c.get(i, k0)) {
                match sign {
                    None => sign = Some(s),
                    Some(prev) if prev != s => {
                        return Err(Error::SignCoherenceViolation {
                            direction: k0 + 1,
                            word: self.word.clone(),
                        })
                    }
                    _ => {}
                }
            }
        }
        sign.ok_or_else(|| Error::SignCoherenceViolation {
            direction: k0 + 1,
            word: self.word.clone(),
        })
    }

    pub fn tropical_signs(&self) -> Result<Vec<Sign>> {
        (0..self.rank()).map(|k| self.sign_of_column(k)).collect()
    }

    /// Mutation of `(B, C, G)` in direction `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let k0 = check_direction(k, self.rank())?;
        let n = self.rank();
        let eps = self.sign_of_column(k0)?.to_bigint();
        let b = self.b.entries();

        let mut c = self.c.clone();
        for i in 0..n {
            let coeff = if i == k0 {
                None
            } else {
                Some(pos(&(&eps * b.get(k0, i))))
            };
            for r in 0..n {
                let ck = self.c.get(r, k0);
                let v = match &coeff {
                    None => -ck,
                    Some(f) if f.is_zero() => continue,
                    Some(f) => self.c.get(r, i) + f * ck,
                };
                c.set(r, i, v);
            }
        }

        let mut g = self.g.clone();
        for r in 0..n {
            let mut v = -self.g.get(r, k0);
            for j in 0..n {
                let f = pos(&(-(&eps * b.get(j, k0))));
                if !f.is_zero() {
                    v += f * self.g.get(r, j);
                }
            }
            g.set(r, k0, v);
        }

        let mut word = self.word.clone();
        word.push(k);
        Ok(Seed {
            b: self.b.mutate_unchecked(k0),
            c,
            g,
            word,
        })
    }

    pub fn apply_word(&self, word: &[usize]) -> Result<Seed> {
        word.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    pub fn g_cone(&self) -> GCone {
        GCone {
            rays: self.g.columns(),
            normals: self.c.columns(),
            key: ConeKey::from_rays(self.g.columns()),
        }
    }

    /// `D^{-1} (C^T)^{-1} D`, or `None` when `C` is not unimodular.
    pub fn g_from_duality(&self) -> Option<IntMatrix> {
        let inv = self.c.transpose().inverse_unimodular()?;
        let d = self.b.symmetrizer();
        let n = self.rank();
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let num = inv.get(i, j) * &d[j];
                if !(&num % &d[i]).is_zero() {
                    return None;
                }
                g.set(i, j, num / &d[i]);
            }
        }
        Some(g)
    }

    pub fn verify(&self) -> SeedReport {
        let n = self.rank();
        let d = self.b.symmetrizer();
        let unit = |m: &IntMatrix| m.determinant().abs().is_one();
        let sign_coherence = (0..n).all(|k| self.sign_of_column(k).is_ok());
        let duality = self.g_from_duality().is_some_and(|g| g == self.g);
        let d_orthogonality = (0..n).all(|i| {
            let dc: Vec<BigInt> = (0..n).map(|r| self.c.get(r, i) * &d[r]).collect();
            (0..n).all(|j| {
                let expected = if i == j { d[i].clone() } else { BigInt::zero() };
                dot(&dc, &self.g.column(j)) == expected
            })
        });
        SeedReport {
            det_c_unimodular: unit(&self.c),
            det_g_unimodular: unit(&self.g),
            sign_coherence,
            duality,
            d_orthogonality,
        }
    }
}

impl fmt::Debug for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Seed")
            .field("word", &self.word)
            .field("b", &self.b.entries())
            .field("c", &self.c)
            .field("g", &self.g)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeedReport {
    pub det_c_unimodular: bool,
    pub det_g_unimodular: bool,
    pub sign_coherence: bool,
    pub duality: bool,
    pub d_orthogonality: bool,
}

impl SeedReport {
    pub fn all_pass(&self) -> bool {
        self.det_c_unimodular
            && self.det_g_unimodular
            && self.sign_coherence
            && self.duality
            && self.d_orthogonality
    }

    pub fn checks(&self) -> [(&'static str, bool); 5] {
        [
            ("det C = +-1", self.det_c_unimodular),
            ("det G = +-1", self.det_g_unimodular),
            ("sign coherence", self.sign_coherence),
            ("G = D^-1 (C^T)^-1 D", self.duality),
            ("(c_i, g_j)_D = d_i delta_ij", self.d_orthogonality),
        ]
    }
}

/// Canonical identifier of a simplicial cone: its rays in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeKey(Vec<Vec<BigInt>>);

impl ConeKey {
    pub fn from_rays(mut rays: Vec<Vec<BigInt>>) -> Self {
        rays.sort();
        ConeKey(rays)
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.0
    }

    pub fn is_negative_orthant(&self) -> bool {
        let n = self.0.len();
        let mut neg: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { -BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        neg.sort();
        self.0 == neg
    }
}

impl fmt::Display for ConeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, ray) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, x) in ray.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ConeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConeKey({self})")
    }
}

impl FromStr for ConeKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rays = s
            .split(';')
            .map(|ray| {
                ray.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::MalformedDocument(format!("bad cone key {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConeKey::from_rays(rays))
    }
}

/// The cone spanned by the g-vectors of a seed.
///
/// `rays[i]` and `normals[i]` come from the same seed column, so `normals[i]`
/// pairs to `d_i` with `rays[i]` and to zero with the others.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GCone {
    pub rays: Vec<Vec<BigInt>>,
    pub normals: Vec<Vec<BigInt>>,
    pub key: ConeKey,
}

impl GCone {
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(&self.rays).expect("rays of equal length")
    }
}

/// Lexicographic comparison on words with shorter words first.
pub fn shortlex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wing() -> ExchangeMatrix {
        ExchangeMatrix::from_i64(&[[0, -2, -4], [3, 0, -6], [2, 2, 0]]).unwrap()
    }

    fn rank2(a: i64, b: i64) -> ExchangeMatrix {
        ExchangeMatrix::rank2(&a.into(), &b.into()).unwrap()
    }

    #[test]
    fn initial_seed_is_identity_with_positive_signs() {
        let s = Seed::initial(wing());
        assert_eq!(s.c(), &IntMatrix::identity(3));
        assert_eq!(s.g(), &IntMatrix::identity(3));
        assert!(s.tropical_signs().unwrap().iter().all(|&e| e == Sign::Plus));
        assert!(s.verify().all_pass());
    }

    #[test]
    fn wing_single_mutations() {
        let s = Seed::initial(wing());
        assert_eq!(
            s.mutate(3).unwrap().c(),
            &IntMatrix::from_i64(&[[1, 0, 0], [0, 1, 0], [2, 2, -1]])
        );
        assert_eq!(
            s.mutate(2).unwrap().c(),
            &IntMatrix::from_i64(&[[1, 0, 0], [3, -1, 0], [0, 0, 1]])
        );
    }

    #[test]
    fn wing_reaches_negative_orthant() {
        let s = Seed::initial(wing()).apply_word(&[1, 2, 3]).unwrap();
        let minus_one = IntMatrix::from_i64(&[[-1, 0, 0], [0, -1, 0], [0, 0, -1]]);
        assert_eq!(s.g(), &minus_one);
        assert!(s.g_cone().key.is_negative_orthant());
    }

    #[test]
    fn rank2_signs_and_g5() {
        let s0 = Seed::initial(rank2(3, 2));
        let s1 = s0.mutate(1).unwrap();
        assert_eq!(s1.tropical_sign(2).unwrap(), Sign::Plus);
        let s2 = s1.mutate(2).unwrap();
        assert_eq!(s2.tropical_sign(1).unwrap(), Sign::Minus);
        let s5 = s0.apply_word(&[1, 2, 1, 2, 1]).unwrap();
        assert_eq!(s5.g().column(0), vec![BigInt::from(5), BigInt::from(-12)]);
    }

    #[test]
    fn double_mutation_restores_matrices() {
        let s = Seed::initial(wing()).apply_word(&[2, 3, 1]).unwrap();
        let back = s.apply_word(&[2, 2]).unwrap();
        assert_eq!(back.b(), s.b());
        assert_eq!(back.c(), s.c());
        assert_eq!(back.g(), s.g());
        assert_eq!(back.word().len(), s.word().len() + 2);
    }

    #[test]
    fn zeroed_c_column_fails_duality() {
        let s = Seed::initial(wing()).apply_word(&[3, 1]).unwrap();
        let mut c = s.c().clone();
        for r in 0..3 {
            c.set(r, 1, BigInt::zero());
        }
        let broken = Seed::from_parts(s.b().clone(), c, s.g().clone(), s.word().to_vec()).unwrap();
        let report = broken.verify();
        assert!(!report.duality);
        assert!(!report.d_orthogonality);
        assert!(!report.all_pass());
    }

    #[test]
    fn permuted_rays_share_a_key() {
        let a = ConeKey::from_rays(vec![vec![1.into(), 0.into()], vec![(-1).into(), 2.into()]]);
        let b = ConeKey::from_rays(vec![vec![(-1).into(), 2.into()], vec![1.into(), 0.into()]]);
        assert_eq!(a, b);
        assert_eq!(a.to_string().parse::<ConeKey>().unwrap(), a);
    }

    #[test]
    fn out_of_range_direction() {
        let s = Seed::initial(wing());
        assert!(matches!(s.mutate(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(s.mutate(4), Err(Error::IndexOutOfRange { .. })));
    }
}
