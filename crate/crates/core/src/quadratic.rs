//! Exact real quadratic numbers `x + y sqrt(r)` with rational `x`, `y`.
//!
//! The radicand is kept square-free (when factoring is cheap) and is `0` for
//! rational values. Comparisons are decided by sign analysis and squaring,
//! never by floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

// Trial division for square factors stops here; any larger cofactor is only
// tested for being a perfect square.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    x: BigRational,
    y: BigRational,
    radicand: BigInt,
}

impl QuadraticNumber {
    pub fn new(x: BigRational, y: BigRational, radicand: BigInt) -> Self {
        assert!(!radicand.is_negative(), "negative radicand {radicand}");
        if y.is_zero() || radicand.is_zero() {
            return Self::rational(x);
        }
        let (square, free) = split_square_factor(&radicand);
        let y = y * BigRational::from_integer(square);
        if free.is_one() {
            Self::rational(x + y)
        } else {
            Self { x, y, radicand: free }
        }
    }

    pub fn rational(x: BigRational) -> Self {
        Self {
            x,
            y: BigRational::zero(),
            radicand: BigInt::zero(),
        }
    }

    pub fn from_integer(x: BigInt) -> Self {
        Self::rational(BigRational::from_integer(x))
    }

    pub fn zero() -> Self {
        Self::from_integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(BigInt::one())
    }

    /// `sqrt(n)` for a nonnegative integer.
    pub fn sqrt(n: BigInt) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), n)
    }

    #[inline]
    pub fn rational_part(&self) -> &BigRational {
        &self.x
    }

    #[inline]
    pub fn surd_part(&self) -> &BigRational {
        &self.y
    }

    /// Square-free radicand, or 0 for a rational value.
    #[inline]
    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            x: self.x.clone(),
            y: -self.y.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// `x^2 - r y^2`.
    pub fn norm(&self) -> BigRational {
        &self.x * &self.x - &self.y * &self.y * BigRational::from_integer(self.radicand.clone())
    }

    pub fn signum(&self) -> Ordering {
        let sx = self.x.cmp(&BigRational::zero());
        let sy = self.y.cmp(&BigRational::zero());
        if sy == Ordering::Equal || sx == sy {
            return if sx == Ordering::Equal { sy } else { sx };
        }
        if sx == Ordering::Equal {
            return sy;
        }
        // Opposite signs: compare x^2 against r y^2.
        let lhs = &self.x * &self.x;
        let rhs = &self.y * &self.y * BigRational::from_integer(self.radicand.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            x: &self.x * k,
            y: &self.y * k,
            radicand: self.radicand.clone(),
        }
        .canonical()
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    pub fn to_f64(&self) -> f64 {
        let x = ratio_to_f64(&self.x);
        if self.y.is_zero() {
            return x;
        }
        x + ratio_to_f64(&self.y) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    fn canonical(mut self) -> Self {
        if self.y.is_zero() {
            self.radicand = BigInt::zero();
        }
        self
    }

    fn common_radicand(&self, other: &Self) -> BigInt {
        match (self.radicand.is_zero(), other.radicand.is_zero()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ => {
                assert_eq!(
                    self.radicand, other.radicand,
                    "quadratic numbers from different fields"
                );
                self.radicand.clone()
            }
        }
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    // Scale down huge numerators/denominators before dividing.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Splits `n = s^2 * f`, returning `(s, f)`. `f` is square-free whenever all
/// of its prime factors above the trial-division limit appear at most twice.
fn split_square_factor(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb * &pb > rest {
            break;
        }
        let mut odd = false;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            if odd {
                square *= &pb;
            }
            odd = !odd;
        }
        if odd {
            free *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // With no prime factor below its cube root, the cofactor is a prime
    // square or square-free.
    let r = rest.sqrt();
    if &r * &r == rest {
        square *= r;
    } else {
        free *= rest;
    }
    (square, free)
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            radicand: self.radicand,
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -self.clone()
    }
}

impl<'a> Add<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: Self) -> QuadraticNumber {
        let r = self.common_radicand(rhs);
        QuadraticNumber {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            radicand: r,
        }
        .canonical()
    }
}

impl<'a> Sub<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: Self) -> QuadraticNumber {
        let r = self.common_radicand(rhs);
        QuadraticNumber {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            radicand: r,
        }
        .canonical()
    }
}

impl<'a> Mul<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: Self) -> QuadraticNumber {
        let r = self.common_radicand(rhs);
        let rr = BigRational::from_integer(r.clone());
        QuadraticNumber {
            x: &self.x * &rhs.x + &self.y * &rhs.y * rr,
            y: &self.x * &rhs.y + &self.y * &rhs.x,
            radicand: r,
        }
        .canonical()
    }
}

impl<'a> Div<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn div(self, rhs: Self) -> QuadraticNumber {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero quadratic number");
        (self * &rhs.conjugate()).scale(&norm.recip())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, rhs: Self) -> QuadraticNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        let ys = if self.y.abs().is_one() {
            String::new()
        } else {
            format!("{}*", self.y.abs())
        };
        let sign = if self.y.is_negative() { "-" } else { "+" };
        if self.x.is_zero() {
            let lead = if self.y.is_negative() { "-" } else { "" };
            write!(f, "{lead}{ys}sqrt({})", self.radicand)
        } else {
            write!(f, "{} {sign} {ys}sqrt({})", self.x, self.radicand)
        }
    }
}
