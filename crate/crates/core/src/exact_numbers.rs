//! Exact rationals, square classes and the elementary number theory the
//! rest of the crate leans on.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Default trial-division bound for integer factorization.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(q: &BigInt) -> Rational {
    Rational::from_integer(q.clone())
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Invalid(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// max(|numerator|, denominator).
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn int_cbrt_exact(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    if &r * &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let n = int_cbrt_exact(q.numer())?;
    let d = int_cbrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Factorization of |n| by trial division up to `bound`.  A cofactor below
/// `bound²` is prime; anything larger is an error.
pub fn factor_with_bound(n: &BigInt, bound: u64) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::Zero("cannot factor 0".into()));
    }
    let mut m = n.abs();
    let mut out = Vec::new();
    let push = |p: u64, m: &mut BigInt| {
        let bp = BigInt::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            *m = q;
            e += 1;
        }
        e
    };
    for p in [2u64, 3] {
        let e = push(p, &mut m);
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut d = 5u64;
    let mut step = 2u64;
    while d <= bound {
        if m.is_one() {
            break;
        }
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        if (&m % &bd).is_zero() {
            let e = push(d, &mut m);
            out.push((d, e));
        }
        d += step;
        step = 6 - step;
    }
    if !m.is_one() {
        let bb = BigInt::from(bound);
        let small_enough = &bb * &bb >= m || {
            let d = BigInt::from(d);
            &d * &d > m
        };
        match m.to_u64() {
            Some(p) if small_enough => out.push((p, 1)),
            _ => {
                return Err(Error::FactorBound {
                    value: n.to_string(),
                    cofactor: m.to_string(),
                    bound,
                })
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    factor_with_bound(n, DEFAULT_TRIAL_BOUND)
}

/// Primes dividing the numerator or the denominator of `q`.
pub fn prime_support(q: &Rational) -> Result<Vec<u64>> {
    if q.is_zero() {
        return Err(Error::Zero("prime support of 0".into()));
    }
    let mut ps: Vec<u64> = factor(q.numer())?.into_iter().map(|(p, _)| p).collect();
    ps.extend(factor(q.denom())?.into_iter().map(|(p, _)| p));
    ps.sort_unstable();
    ps.dedup();
    Ok(ps)
}

/// Element of ℚ*/ℚ*², stored as its square-free integer representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

impl SquareClass {
    pub fn one() -> Self {
        SquareClass(BigInt::one())
    }

    pub fn of(q: &Rational) -> Result<Self> {
        squarefree_part(q)
    }

    pub fn of_int(n: i64) -> Result<Self> {
        squarefree_part(&int(n))
    }

    pub fn rep(&self) -> &BigInt {
        &self.0
    }

    pub fn to_rational(&self) -> Rational {
        big(&self.0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Product in ℚ*/ℚ*²; both representatives are square-free so the
    /// product reduces by the square of their gcd.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let g = self.0.gcd(&other.0);
        SquareClass(&self.0 * &other.0 / (&g * &g))
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn squarefree_part(q: &Rational) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::Zero("square class of 0".into()));
    }
    let n = q.numer() * q.denom();
    let mut r = BigInt::one();
    for (p, e) in factor(&n)? {
        if e % 2 == 1 {
            r *= p;
        }
    }
    if n.sign() == Sign::Minus {
        r = -r;
    }
    Ok(SquareClass(r))
}

pub fn same_square_class(a: &Rational, b: &Rational) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero("square class comparison with 0".into()));
    }
    Ok(is_square(&(a / b)))
}

/// Returns `(v, m)` with `n = p^v · m`, `p ∤ m`.
pub fn split_valuation(n: &BigInt, p: u64) -> (i64, BigInt) {
    let bp = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&bp);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

pub fn padic_valuation(q: &Rational, p: u64) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::Zero("valuation of 0".into()));
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(split_valuation(q.numer(), p).0 - split_valuation(q.denom(), p).0)
}

pub fn legendre_symbol(a: &BigInt, p: u64) -> Result<i8> {
    if p == 2 || !is_prime_u64(p) {
        return Err(Error::NotOddPrime(p.to_string()));
    }
    Ok(legendre_unchecked(a, p))
}

/// Euler's criterion; `p` must be an odd prime.
pub(crate) fn legendre_unchecked(a: &BigInt, p: u64) -> i8 {
    let bp = BigInt::from(p);
    let r = a.mod_floor(&bp);
    if r.is_zero() {
        return 0;
    }
    let e = r.modpow(&BigInt::from((p - 1) / 2), &bp);
    if e.is_one() {
        1
    } else {
        -1
    }
}

/// Inverse of `a` modulo `m` when it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&int(8)).unwrap().rep(), &BigInt::from(2));
        assert_eq!(squarefree_part(&int(1)).unwrap().rep(), &BigInt::from(1));
        assert_eq!(
            squarefree_part(&rat(-45, 4)).unwrap().rep(),
            &BigInt::from(-5)
        );
        assert!(squarefree_part(&int(0)).is_err());
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&BigInt::from(2), 7).unwrap(), 1);
        assert_eq!(legendre_symbol(&BigInt::from(3), 7).unwrap(), -1);
        assert_eq!(legendre_symbol(&BigInt::from(0), 11).unwrap(), 0);
        assert!(legendre_symbol(&BigInt::from(3), 2).is_err());
        assert!(legendre_symbol(&BigInt::from(3), 9).is_err());
    }

    #[test]
    fn legendre_matches_brute_force_and_is_multiplicative() {
        for p in primes_up_to(97).into_iter().filter(|&p| p > 2) {
            let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let l = legendre_symbol(&BigInt::from(a), p).unwrap();
                let expect = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(l, expect, "({a}/{p})");
                for b in 0..p {
                    let lb = legendre_symbol(&BigInt::from(b), p).unwrap();
                    let lab = legendre_symbol(&BigInt::from(a * b), p).unwrap();
                    assert_eq!(lab, l * lb);
                }
            }
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&int(12), 2).unwrap(), 2);
        assert_eq!(padic_valuation(&rat(1, 9), 3).unwrap(), -2);
        assert_eq!(padic_valuation(&int(5), 3).unwrap(), 0);
        assert!(padic_valuation(&int(0), 3).is_err());
    }

    #[test]
    fn same_class_examples() {
        assert!(same_square_class(&int(2), &int(8)).unwrap());
        assert!(!same_square_class(&int(2), &int(-2)).unwrap());
        assert!(same_square_class(&rat(1, 2), &int(2)).unwrap());
        assert!(same_square_class(&int(0), &int(2)).is_err());
    }

    #[test]
    fn factorization_bound() {
        let n = BigInt::from(999_983u64) * BigInt::from(1_000_003u64);
        assert!(factor_with_bound(&n, 1000).is_err());
        assert_eq!(factor(&n).unwrap(), vec![(999_983, 1), (1_000_003, 1)]);
        let too_big = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        assert!(matches!(factor(&too_big), Err(Error::FactorBound { .. })));
        assert_eq!(
            factor(&BigInt::from(-360)).unwrap(),
            vec![(2, 3), (3, 2), (5, 1)]
        );
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(fmt_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(fmt_rational(&int(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn square_class_product() {
        let a = SquareClass::of_int(6).unwrap();
        let b = SquareClass::of_int(-10).unwrap();
        assert_eq!(a.mul(&b), SquareClass::of_int(-15).unwrap());
    }

    #[test]
    fn cube_roots() {
        assert_eq!(rational_cbrt(&rat(-8, 27)), Some(rat(-2, 3)));
        assert_eq!(rational_cbrt(&int(2)), None);
    }
}
