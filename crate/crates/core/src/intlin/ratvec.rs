use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational vector with one shared positive denominator, kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatVector {
    num: Vec<BigInt>,
    den: BigInt,
}

impl RatVector {
    /// Normalizes `num / den`. Panics if `den` is zero.
    pub fn new(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -&*x;
            }
        }
        let g = num.iter().fold(den.clone(), |g, x| g.gcd(x));
        if !g.is_one() {
            for x in num.iter_mut() {
                *x = &*x / &g;
            }
            den /= g;
        }
        RatVector { num, den }
    }

    pub fn from_ints(v: &[BigInt]) -> Self {
        RatVector {
            num: v.to_vec(),
            den: BigInt::one(),
        }
    }

    pub fn from_i64(v: &[i64], den: i64) -> Self {
        Self::new(
            v.iter().map(|&x| BigInt::from(x)).collect(),
            BigInt::from(den),
        )
    }

    pub fn from_rationals(v: &[BigRational]) -> Self {
        let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let num = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Self::new(num, den)
    }

    pub fn zero(n: usize) -> Self {
        RatVector {
            num: vec![BigInt::zero(); n],
            den: BigInt::one(),
        }
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn get(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// Integer entries, if the vector is integral.
    pub fn as_integers(&self) -> Option<&[BigInt]> {
        self.is_integral().then_some(self.num.as_slice())
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        assert_eq!(self.len(), other.len());
        let den = self.den.lcm(&other.den);
        let (a, b) = (&den / &self.den, &den / &other.den);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(x, y)| x * &a + y * &b)
            .collect();
        RatVector::new(num, den)
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        self.add(&other.neg())
    }

    pub fn add_ints(&self, v: &[BigInt]) -> RatVector {
        assert_eq!(self.len(), v.len());
        let num = self
            .num
            .iter()
            .zip(v)
            .map(|(x, y)| x + y * &self.den)
            .collect();
        RatVector::new(num, self.den.clone())
    }

    pub fn neg(&self) -> RatVector {
        RatVector {
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }

    /// Multiplies by the rational `p / q`.
    pub fn scale(&self, p: &BigInt, q: &BigInt) -> RatVector {
        RatVector::new(self.num.iter().map(|x| x * p).collect(), &self.den * q)
    }

    pub fn half(&self) -> RatVector {
        self.scale(&BigInt::one(), &BigInt::from(2))
    }

    pub fn double(&self) -> RatVector {
        self.scale(&BigInt::from(2), &BigInt::one())
    }

    /// Pairing with an integer covector.
    pub fn pair(&self, covector: &[BigInt]) -> BigRational {
        assert_eq!(self.len(), covector.len());
        let s: BigInt = self.num.iter().zip(covector).map(|(a, b)| a * b).sum();
        BigRational::new(s, self.den.clone())
    }

    /// Entries formatted as `a/b` (or `a` when integral).
    pub fn to_strings(&self) -> Vec<String> {
        (0..self.len())
            .map(|i| format_rational(&self.get(i)))
            .collect()
    }
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses an exact rational `a`, `-a` or `a/b` with ASCII digits only.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let parse_int = |t: &str| -> Option<BigInt> {
        let digits = t
            .strip_prefix('-')
            .or_else(|| t.strip_prefix('+'))
            .unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        BigInt::from_str(t).ok()
    };
    match s.split_once('/') {
        None => parse_int(s).map(BigRational::from_integer),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() || d.is_negative() {
                return None;
            }
            Some(BigRational::new(parse_int(n)?, d))
        }
    }
}

impl Ord for RatVector {
    /// Lexicographic comparison of the rational values.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.num.iter().zip(&other.num) {
            match (a * &other.den).cmp(&(b * &self.den)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for RatVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_lowest_terms() {
        let v = RatVector::from_i64(&[2, -4], -6);
        assert_eq!(v.numerators(), &[BigInt::from(-1), BigInt::from(2)]);
        assert_eq!(v.denominator(), &BigInt::from(3));
        assert_eq!(
            RatVector::from_i64(&[0, 0], 5).denominator(),
            &BigInt::one()
        );
    }

    #[test]
    fn ordering_is_by_value() {
        let a = RatVector::from_i64(&[1, 5], 2);
        let b = RatVector::from_i64(&[3, 0], 4);
        assert!(b > a);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("-3/6").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("1.5").is_none());
        assert!(parse_rational("").is_none());
        assert!(parse_rational("١").is_none());
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }
}
