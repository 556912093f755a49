//! Local asymptotics of G-fans around elementary vertices.
//!
//! For a vertex `i` with complementary pair `(j, k)`, the relevant data is
//! the reduced frame
//!
//! ```text
//! [[0, -b, *], [a, 0, *], [c0, d0, 0]]   in the index order (j, k, i)
//! ```
//!
//! with `a, b > 0`. Only the row of `i` matters, so the same reduction
//! applies to any row `l` against any infinite-type pair of a rank-`n`
//! matrix.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::chebyshev::ChebyshevTable;
use crate::error::{Error, Result};
use crate::exchange::{check_direction, ExchangeMatrix};
use crate::quadratic::QuadraticNumber;
use crate::rank2::{g_sequence, limit_vectors, rank2_word, require_infinite, Direction};
use crate::seed::{Seed, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexType {
    #[serde(rename = "1")]
    T1,
    #[serde(rename = "2")]
    T2,
    #[serde(rename = "3")]
    T3,
    #[serde(rename = "4-1")]
    T41,
    #[serde(rename = "4-2")]
    T42,
    #[serde(rename = "4-3")]
    T43,
}

impl VertexType {
    pub fn label(self) -> &'static str {
        match self {
            VertexType::T1 => "1",
            VertexType::T2 => "2",
            VertexType::T3 => "3",
            VertexType::T41 => "4-1",
            VertexType::T42 => "4-2",
            VertexType::T43 => "4-3",
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Sub-case of a banded type, determined by the parity of `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subtype {
    #[serde(rename = "4-2-1")]
    T421,
    #[serde(rename = "4-2-2")]
    T422,
    #[serde(rename = "4-3-1")]
    T431,
    #[serde(rename = "4-3-2")]
    T432,
}

/// Row `l` of a matrix read against an oriented infinite-type pair.
///
/// Indices are 1-based; `pair = (j, k)` satisfies `b_jk = -b < 0` and
/// `b_kj = a > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub row: usize,
    pub pair: (usize, usize),
    #[serde(serialize_with = "crate::io::ser_bigint")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::io::ser_bigint")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::io::ser_bigint")]
    pub c0: BigInt,
    #[serde(serialize_with = "crate::io::ser_bigint")]
    pub d0: BigInt,
    pub swap_applied: bool,
}

impl Frame {
    /// Orients the pair `(i, j)` and reads row `l` against it.
    pub fn for_pair(b: &ExchangeMatrix, l: usize, i: usize, j: usize) -> Result<Frame> {
        let n = b.rank();
        let l0 = check_direction(l, n)?;
        let i0 = check_direction(i, n)?;
        let j0 = check_direction(j, n)?;
        let product = (b.get(i0, j0) * b.get(j0, i0)).abs();
        if i0 == j0 || product < BigInt::from(4) {
            return Err(Error::PairNotInfinite {
                i,
                j,
                product: product.to_string(),
            });
        }
        let swap = b.get(i0, j0).is_positive();
        let (j0, k0) = if swap { (j0, i0) } else { (i0, j0) };
        Ok(Frame {
            row: l,
            pair: (j0 + 1, k0 + 1),
            a: b.get(k0, j0).clone(),
            b: -b.get(j0, k0),
            c0: b.get(l0, j0).clone(),
            d0: b.get(l0, k0).clone(),
            swap_applied: swap,
        })
    }

    /// Frame of the elementary vertex `i` of a rank-3 matrix, using the
    /// cyclic order of the complementary pair.
    pub fn for_vertex(b: &ExchangeMatrix, i: usize) -> Result<Frame> {
        require_rank3(b)?;
        let (j, k) = match i {
            1 => (2, 3),
            2 => (3, 1),
            3 => (1, 2),
            _ => return Err(Error::IndexOutOfRange { index: i, rank: 3 }),
        };
        Frame::for_pair(b, i, j, k)
    }

    pub fn matrix(&self) -> Result<ExchangeMatrix> {
        ExchangeMatrix::rank3_frame(&self.a, &self.b, &self.c0, &self.d0)
    }
}

fn require_rank3(b: &ExchangeMatrix) -> Result<()> {
    if b.rank() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: b.rank(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexTypeReport {
    pub vertex: usize,
    pub tag: VertexType,
    pub band_index: Option<u64>,
    pub boundary_equality: bool,
    pub frame: Frame,
}

impl VertexTypeReport {
    pub fn c0_d0(&self) -> (&BigInt, &BigInt) {
        (&self.frame.c0, &self.frame.d0)
    }

    pub fn swap_applied(&self) -> bool {
        self.frame.swap_applied
    }

    pub fn subtype(&self) -> Option<Subtype> {
        let even = self.band_index? % 2 == 0;
        Some(match (self.tag, even) {
            (VertexType::T42, false) => Subtype::T421,
            (VertexType::T42, true) => Subtype::T422,
            (VertexType::T43, false) => Subtype::T431,
            (VertexType::T43, true) => Subtype::T432,
            _ => return None,
        })
    }
}

/// Type of the pair `(c0, d0)` against `[[0, -b], [a, 0]]`, together with the
/// band index and boundary flag for the banded types.
///
/// `(c0, d0) = (0, 0)` is reported as Type 1.
pub fn classify(a: &BigInt, b: &BigInt, c0: &BigInt, d0: &BigInt) -> Result<(VertexType, Option<(u64, bool)>)> {
    require_infinite(a, b)?;
    let tag = if !c0.is_negative() && !d0.is_negative() {
        VertexType::T1
    } else if c0.is_positive() && d0.is_negative() {
        VertexType::T2
    } else if !c0.is_positive() && !d0.is_positive() {
        VertexType::T3
    } else {
        // c0 < 0 < d0
        let q = a * b * c0 * d0 + a * d0 * d0 + b * c0 * c0;
        if !q.is_positive() {
            VertexType::T41
        } else if (BigInt::from(2) * d0 + b * c0).is_positive() {
            VertexType::T42
        } else {
            VertexType::T43
        }
    };
    let band = match tag {
        VertexType::T42 | VertexType::T43 => Some(find_band_index(c0, d0, a, b, tag)?),
        _ => None,
    };
    Ok((tag, band))
}

fn band_search_bound(c0: &BigInt, d0: &BigInt, a: &BigInt, b: &BigInt) -> u64 {
    if a * b == BigInt::from(4) {
        // The band edges converge like 1/N here.
        let linear: BigInt = (a + b) * c0.abs() + 2;
        u64::try_from(linear).unwrap_or(u64::MAX)
    } else {
        10 * (c0.bits() + d0.bits() + a.bits() + b.bits()) + 64
    }
}

/// The band index `N >= 0` of `r = -d0/c0` and whether `r` sits on the
/// closed end of its band.
///
/// Type 4-2 bands are `[nu U_{N+1}/U_N, nu U_N/U_{N-1})` and Type 4-3 bands
/// are `[nu U_{N-1}/U_N, nu U_N/U_{N+1})`.
pub fn find_band_index(c0: &BigInt, d0: &BigInt, a: &BigInt, b: &BigInt, tag: VertexType) -> Result<(u64, bool)> {
    require_infinite(a, b)?;
    assert!(
        c0.is_negative() && d0.is_positive(),
        "band index needs c0 < 0 < d0"
    );
    let r = BigRational::new(-d0.clone(), c0.clone());
    let bound = band_search_bound(c0, d0, a, b);
    let mut table = ChebyshevTable::new(a * b, 16);
    let mut n: i64 = 0;
    while (n as u64) <= bound {
        match tag {
            VertexType::T42 => {
                let lower = table.nu_ratio(n + 1, n, a, b).expect("U_N > 0");
                if lower <= r {
                    return Ok((n as u64, lower == r));
                }
            }
            VertexType::T43 => {
                let upper = table.nu_ratio(n, n + 1, a, b).expect("U_{N+1} > 0");
                if r < upper {
                    let lower = table.nu_ratio(n - 1, n, a, b).expect("U_N > 0");
                    return Ok((n as u64, lower == r));
                }
            }
            _ => panic!("band index requested for type {tag}"),
        }
        n += 1;
    }
    Err(Error::InternalBandSearchFailure {
        c0: c0.to_string(),
        d0: d0.to_string(),
        bound,
    })
}

pub fn vertex_type(b: &ExchangeMatrix, i: usize) -> Result<VertexTypeReport> {
    let frame = Frame::for_vertex(b, i)?;
    report_for_frame(i, frame)
}

fn report_for_frame(vertex: usize, frame: Frame) -> Result<VertexTypeReport> {
    let (tag, band) = classify(&frame.a, &frame.b, &frame.c0, &frame.d0)?;
    Ok(VertexTypeReport {
        vertex,
        tag,
        band_index: band.map(|(n, _)| n),
        boundary_equality: band.is_some_and(|(_, eq)| eq),
        frame,
    })
}

/// Lifted g-vectors in frame coordinates `(j, k, i)`: `forward[m-1]` is
/// `g~_m` and `backward[m-1]` is `g~'_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedSequences {
    pub forward: Vec<[BigInt; 3]>,
    pub backward: Vec<[BigInt; 3]>,
}

/// Third components of the lifted sequences from the type formulas.
pub fn lifted_for_frame(frame: &Frame, m_max: usize) -> Result<LiftedSequences> {
    let (a, b, c0, d0) = (&frame.a, &frame.b, &frame.c0, &frame.d0);
    let (tag, band) = classify(a, b, c0, d0)?;
    let n_plus_1 = band.map(|(n, _)| n as usize + 1);
    let fwd = g_sequence(Direction::Forward, m_max, a, b)?;
    let bwd = g_sequence(Direction::Backward, m_max, a, b)?;
    let mixed = |g: &[BigInt; 2]| c0 * &g[0] + (d0 + b * c0) * &g[1];
    let zero = BigInt::zero();
    let lift = |g: &[BigInt; 2], third: BigInt| [g[0].clone(), g[1].clone(), third];

    let forward = fwd
        .iter()
        .enumerate()
        .map(|(idx, g)| {
            let m = idx + 1;
            let third = match tag {
                VertexType::T1 => zero.clone(),
                VertexType::T2 => d0 * &g[1],
                VertexType::T3 | VertexType::T41 | VertexType::T43 => mixed(g),
                VertexType::T42 => {
                    if m <= n_plus_1.expect("banded") {
                        mixed(g)
                    } else {
                        zero.clone()
                    }
                }
            };
            lift(g, third)
        })
        .collect();
    let backward = bwd
        .iter()
        .enumerate()
        .map(|(idx, g)| {
            let m = idx + 1;
            let third = match tag {
                VertexType::T1 | VertexType::T41 | VertexType::T42 => zero.clone(),
                VertexType::T2 => d0 * &g[1],
                VertexType::T3 => mixed(g),
                VertexType::T43 => {
                    if m <= n_plus_1.expect("banded") {
                        zero.clone()
                    } else {
                        mixed(g)
                    }
                }
            };
            lift(g, third)
        })
        .collect();
    Ok(LiftedSequences { forward, backward })
}

pub fn lifted_sequences(b: &ExchangeMatrix, i: usize, m_max: usize) -> Result<LiftedSequences> {
    lifted_for_frame(&Frame::for_vertex(b, i)?, m_max)
}

/// Third components of the limit rays `v~`, `v~'` from the type formulas.
pub fn limit_thirds(frame: &Frame) -> Result<(QuadraticNumber, QuadraticNumber)> {
    let (a, b, c0, d0) = (&frame.a, &frame.b, &frame.c0, &frame.d0);
    let (tag, _) = classify(a, b, c0, d0)?;
    let (v, vp) = limit_vectors(a, b)?;
    let c0q = QuadraticNumber::from_integer(c0.clone());
    let mixed = |v2: &QuadraticNumber| &c0q + &v2.scale_int(&(d0 + b * c0));
    let zero = QuadraticNumber::zero();
    Ok(match tag {
        VertexType::T1 | VertexType::T42 => (zero.clone(), zero),
        VertexType::T2 => (v[1].scale_int(d0), vp[1].scale_int(d0)),
        VertexType::T3 | VertexType::T43 => (mixed(&v[1]), mixed(&vp[1])),
        VertexType::T41 => (mixed(&v[1]), zero),
    })
}

/// Limit rays of the vertex `i` in the original coordinates.
pub fn limit_rays(b: &ExchangeMatrix, i: usize) -> Result<([QuadraticNumber; 3], [QuadraticNumber; 3])> {
    let frame = Frame::for_vertex(b, i)?;
    let (v, vp) = limit_vectors(&frame.a, &frame.b)?;
    let (t, tp) = limit_thirds(&frame)?;
    let place = |v: [QuadraticNumber; 2], third: QuadraticNumber| {
        let mut out: [QuadraticNumber; 3] = Default::default();
        let [x, y] = v;
        out[frame.pair.0 - 1] = x;
        out[frame.pair.1 - 1] = y;
        out[i - 1] = third;
        out
    };
    Ok((place(v, t), place(vp, tp)))
}

impl Default for QuadraticNumber {
    fn default() -> Self {
        QuadraticNumber::zero()
    }
}

/// Limit rays of alternating mutations in the pair `(i, j)` of a rank-`n`
/// matrix, in the original coordinates.
pub fn pair_asymptotics(b: &ExchangeMatrix, i: usize, j: usize) -> Result<(Vec<QuadraticNumber>, Vec<QuadraticNumber>)> {
    let n = b.rank();
    let base = Frame::for_pair(b, i, i, j)?;
    let (v, vp) = limit_vectors(&base.a, &base.b)?;
    let mut out = vec![QuadraticNumber::zero(); n];
    let mut out_p = vec![QuadraticNumber::zero(); n];
    let (p, q) = base.pair;
    out[p - 1] = v[0].clone();
    out[q - 1] = v[1].clone();
    out_p[p - 1] = vp[0].clone();
    out_p[q - 1] = vp[1].clone();
    for l in (1..=n).filter(|&l| l != p && l != q) {
        let frame = Frame::for_pair(b, l, p, q)?;
        let (t, tp) = limit_thirds(&frame)?;
        out[l - 1] = t;
        out_p[l - 1] = tp;
    }
    Ok((out, out_p))
}

/// `(sgn c_t, sgn d_t)` of the row of a frame along the labelled rank-2
/// path, with zeros taking the tropical sign of the matching direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignRow {
    pub t: i64,
    pub c: Sign,
    pub d: Sign,
    pub eps1: Sign,
    pub eps2: Sign,
}

pub fn sign_pattern(frame: &Frame, t_min: i64, t_max: i64) -> Result<Vec<SignRow>> {
    let b = frame.matrix()?;
    let seed = Seed::initial(b);
    (t_min..=t_max)
        .map(|t| {
            let s = seed.apply_word(&rank2_word(t))?;
            let eps1 = s.tropical_sign(1)?;
            let eps2 = s.tropical_sign(2)?;
            let c = Sign::of(s.b().get(2, 0)).unwrap_or(eps1);
            let d = Sign::of(s.b().get(2, 1)).unwrap_or(eps2);
            Ok(SignRow { t, c, d, eps1, eps2 })
        })
        .collect()
}

/// Entries that drive the g-vector recursions and disagree with the tropical
/// sign: `('c', t)` or `('d', t)`.
pub fn relevant_mismatches(rows: &[SignRow]) -> Vec<(char, i64)> {
    let mut out = Vec::new();
    for r in rows {
        let even = r.t.rem_euclid(2) == 0;
        let (c_relevant, d_relevant) = match (r.t.cmp(&0), even) {
            (std::cmp::Ordering::Equal, _) => (true, true),
            (std::cmp::Ordering::Greater, e) => (e, !e),
            (std::cmp::Ordering::Less, e) => (!e, e),
        };
        if c_relevant && r.c != r.eps1 {
            out.push(('c', r.t));
        }
        if d_relevant && r.d != r.eps2 {
            out.push(('d', r.t));
        }
    }
    out.sort_by_key(|&(ch, t)| (t, ch));
    out
}

/// Mismatch set predicted by the type of the frame.
pub fn expected_mismatches(frame: &Frame) -> Result<Vec<(char, i64)>> {
    let (tag, band) = classify(&frame.a, &frame.b, &frame.c0, &frame.d0)?;
    let n = band.map(|(n, _)| n as i64);
    let mut out = match tag {
        VertexType::T1 => vec![],
        VertexType::T2 => vec![('d', 1), ('d', 0)],
        VertexType::T3 => vec![('c', 0), ('d', 1), ('d', 0), ('c', -1)],
        VertexType::T41 => vec![('c', 0), ('d', 1)],
        VertexType::T42 | VertexType::T43 => {
            let n = n.expect("banded");
            let odd = n % 2 == 1;
            let mut v = vec![('c', 0), ('d', 1)];
            v.extend(match (tag, odd) {
                (VertexType::T42, true) => [('c', n + 1), ('d', n + 2)],
                (VertexType::T42, false) => [('d', n + 1), ('c', n + 2)],
                (_, true) => [('d', -n - 1), ('c', -n - 2)],
                (_, false) => [('c', -n - 1), ('d', -n - 2)],
            });
            v
        }
    };
    out.sort_by_key(|&(ch, t)| (t, ch));
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseLabel {
    A,
    #[serde(rename = "C-1")]
    C1,
    #[serde(rename = "C-2")]
    C2,
    #[serde(rename = "C-3")]
    C3,
    #[serde(rename = "C-4")]
    C4,
    #[serde(rename = "C-5")]
    C5,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseLabel::A => "A",
            CaseLabel::C1 => "C-1",
            CaseLabel::C2 => "C-2",
            CaseLabel::C3 => "C-3",
            CaseLabel::C4 => "C-4",
            CaseLabel::C5 => "C-5",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanTypeReport {
    pub triplet: [VertexType; 3],
    pub case_label: CaseLabel,
    #[serde(serialize_with = "crate::io::ser_opt_bigint")]
    pub markov_constant: Option<BigInt>,
    /// Whether indices 1 and 2 were exchanged to make `p_3 > 0`.
    pub normalization_swap: bool,
    pub vertices: Vec<VertexTypeReport>,
}

pub fn triplet_string(t: &[VertexType; 3]) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

pub fn fan_type(b: &ExchangeMatrix) -> Result<FanTypeReport> {
    require_rank3(b)?;
    if !b.is_totally_infinite() {
        return Err(Error::NotTotallyInfinite);
    }
    let (nb, swapped) = b.normalized_p3_positive()?;
    let vertices = (1..=3)
        .map(|i| vertex_type(&nb, i))
        .collect::<Result<Vec<_>>>()?;
    let triplet = [vertices[0].tag, vertices[1].tag, vertices[2].tag];
    let cp = nb.cyclic_presentation()?;
    if !cp.is_cyclic() {
        return Ok(FanTypeReport {
            triplet,
            case_label: CaseLabel::A,
            markov_constant: None,
            normalization_swap: swapped,
            vertices,
        });
    }
    let markov = cp.markov_constant();
    let case_label = cyclic_case(&triplet, &markov)?;
    Ok(FanTypeReport {
        triplet,
        case_label,
        markov_constant: Some(markov),
        normalization_swap: swapped,
        vertices,
    })
}

fn cyclic_case(triplet: &[VertexType; 3], markov: &BigInt) -> Result<CaseLabel> {
    use VertexType::*;
    let bad = || Error::InadmissibleTriplet(triplet_string(triplet));
    let t41: Vec<usize> = (0..3).filter(|&i| triplet[i] == T41).collect();
    match t41.len() {
        3 => Ok(if *markov <= BigInt::from(4) {
            CaseLabel::C1
        } else {
            CaseLabel::C2
        }),
        2 => {
            let other = (0..3).find(|i| !t41.contains(i)).expect("one left");
            match triplet[other] {
                T42 => Ok(CaseLabel::C3),
                T43 => Ok(CaseLabel::C4),
                _ => Err(bad()),
            }
        }
        1 => {
            let i = t41[0];
            if triplet[(i + 2) % 3] == T42 && triplet[(i + 1) % 3] == T43 {
                Ok(CaseLabel::C5)
            } else {
                Err(bad())
            }
        }
        _ => Err(bad()),
    }
}

/// Cyclic totally-infinite matrices with entries in `1..=bound` whose fan is
/// of case C-5 and `p'_2 < p_1 p_3`. No completeness is claimed.
pub fn search_c5(bound: i64) -> Vec<ExchangeMatrix> {
    let mut found = Vec::new();
    for p1 in 1..=bound {
        for p2 in 1..=bound {
            for p3 in 1..=bound {
                for q1 in 1..=bound {
                    for q3 in 1..=bound {
                        let prod = p1 * p2 * p3;
                        if prod % (q1 * q3) != 0 {
                            continue;
                        }
                        let q2 = prod / (q1 * q3);
                        if q2 > bound || q2 >= p1 * p3 {
                            continue;
                        }
                        let m = ExchangeMatrix::from_i64(&[
                            [0, -q3, p2],
                            [p3, 0, -q1],
                            [-q2, p1, 0],
                        ]);
                        let Ok(m) = m else { continue };
                        if !m.is_totally_infinite() {
                            continue;
                        }
                        if let Ok(r) = fan_type(&m) {
                            if r.case_label == CaseLabel::C5 {
                                found.push(m);
                            }
                        }
                    }
                }
            }
        }
    }
    found
}
