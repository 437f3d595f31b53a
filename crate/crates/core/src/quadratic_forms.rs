//! Diagonal quadratic forms over ℚ, Hilbert symbols, the Hasse–Minkowski
//! decision engine and Pfister forms.
//!
//! Pfister forms follow the convention ⟨⟨a⟩⟩ = ⟨1, −a⟩.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{
    big, is_prime_u64, is_square, legendre_unchecked, prime_support, split_valuation, Rational,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime_u64(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// Valuation and an integer with the same unit square class: for
/// q = p^v · n/d with p ∤ nd, the unit n/d has the square class of n·d.
fn unit_part(q: &Rational, p: u64) -> (i64, BigInt) {
    let (vn, n) = split_valuation(q.numer(), p);
    let (vd, d) = split_valuation(q.denom(), p);
    (vn - vd, n * d)
}

/// Hilbert symbol (a, b)_v ∈ {−1, +1}.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero("Hilbert symbol of 0".into()));
    }
    Ok(match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (al, u) = unit_part(a, 2);
            let (be, w) = unit_part(b, 2);
            let u8_ = u.mod_floor(&BigInt::from(8)).to_u64().unwrap();
            let w8 = w.mod_floor(&BigInt::from(8)).to_u64().unwrap();
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u8_) * eps(w8)
                + (al.rem_euclid(2) as u64) * omega(w8)
                + (be.rem_euclid(2) as u64) * omega(u8_);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (al, u) = unit_part(a, p);
            let (be, w) = unit_part(b, p);
            let (al, be) = (al.rem_euclid(2), be.rem_euclid(2));
            let mut s: i8 = if al * be * (((p as i64) - 1) / 2) % 2 == 1 {
                -1
            } else {
                1
            };
            if be == 1 {
                s *= legendre_unchecked(&u, p);
            }
            if al == 1 {
                s *= legendre_unchecked(&w, p);
            }
            s
        }
    })
}

/// Whether q is a square in the completion at v.
pub fn is_local_square(q: &Rational, v: Place) -> bool {
    match v {
        Place::Real => q.is_positive(),
        Place::Prime(p) => {
            let (e, u) = unit_part(q, p);
            if e % 2 != 0 {
                return false;
            }
            if p == 2 {
                u.mod_floor(&BigInt::from(8)) == BigInt::one()
            } else {
                legendre_unchecked(&u, p) == 1
            }
        }
    }
}

/// Diagonal form ⟨a₁, …, aₙ⟩ with nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    coeffs: Vec<Rational>,
}

impl QuadraticForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("quadratic form of dimension 0".into()));
        }
        if coeffs.iter().any(|c| c.is_zero()) {
            return Err(Error::Zero("zero diagonal entry".into()));
        }
        Ok(QuadraticForm { coeffs })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| crate::exact_numbers::int(x)).collect())
    }

    /// m copies of ⟨1, −1⟩.
    pub fn hyperbolic(m: usize) -> Self {
        let mut c = Vec::with_capacity(2 * m);
        for _ in 0..m {
            c.push(Rational::one());
            c.push(-Rational::one());
        }
        QuadraticForm { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn orth(&self, other: &QuadraticForm) -> QuadraticForm {
        let mut c = self.coeffs.clone();
        c.extend(other.coeffs.iter().cloned());
        QuadraticForm { coeffs: c }
    }

    pub fn scaled(&self, s: &Rational) -> Result<QuadraticForm> {
        if s.is_zero() {
            return Err(Error::Zero("scaling by 0".into()));
        }
        Ok(QuadraticForm {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        })
    }

    pub fn negated(&self) -> QuadraticForm {
        QuadraticForm {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn tensor(&self, other: &QuadraticForm) -> QuadraticForm {
        let mut c = Vec::with_capacity(self.dim() * other.dim());
        for b in &other.coeffs {
            for a in &self.coeffs {
                c.push(a * b);
            }
        }
        QuadraticForm { coeffs: c }
    }

    pub fn det(&self) -> Rational {
        self.coeffs.iter().product()
    }

    /// (number of positive entries, number of negative entries).
    pub fn signature(&self) -> (usize, usize) {
        let pos = self.coeffs.iter().filter(|c| c.is_positive()).count();
        (pos, self.dim() - pos)
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, x)| a * x * x).sum()
    }

    pub fn evaluate_int(&self, x: &[BigInt]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .map(|(a, x)| a * big(&(x * x)))
            .sum()
    }

    /// 2 and every prime dividing a numerator or denominator of an entry.
    pub fn relevant_primes(&self) -> Result<Vec<u64>> {
        let mut ps = vec![2u64];
        for c in &self.coeffs {
            ps.extend(prime_support(c)?);
        }
        ps.sort_unstable();
        ps.dedup();
        Ok(ps)
    }

    /// Hasse invariant ∏_{i<j} (aᵢ, aⱼ)_v.
    pub fn hasse(&self, v: Place) -> i8 {
        let mut s = 1i8;
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                s *= hilbert_symbol(&self.coeffs[i], &self.coeffs[j], v)
                    .expect("entries are nonzero");
            }
        }
        s
    }

    pub fn is_definite(&self) -> bool {
        let (p, n) = self.signature();
        p == 0 || n == 0
    }

    /// Isotropy over the completion at v.
    pub fn is_isotropic_at(&self, v: Place) -> bool {
        if v == Place::Real {
            return !self.is_definite();
        }
        let d = self.det();
        match self.dim() {
            1 => false,
            2 => is_local_square(&(-d), v),
            3 => {
                let lhs = hilbert_symbol(&(-Rational::one()), &(-d), v).unwrap();
                lhs == self.hasse(v)
            }
            4 => {
                if !is_local_square(&d, v) {
                    true
                } else {
                    let m1 = -Rational::one();
                    self.hasse(v) == hilbert_symbol(&m1, &m1, v).unwrap()
                }
            }
            _ => true,
        }
    }

    /// A place where the form is anisotropic, if any.
    pub fn anisotropic_place(&self) -> Result<Option<Place>> {
        if self.dim() == 2 {
            // Binary forms: global square test, then name a witness place.
            let m = -self.det();
            if is_square(&m) {
                return Ok(None);
            }
            for v in std::iter::once(Place::Real)
                .chain(self.relevant_primes()?.into_iter().map(Place::Prime))
            {
                if !self.is_isotropic_at(v) {
                    return Ok(Some(v));
                }
            }
            // A nonsquare is a nonsquare at infinitely many primes; find one
            // outside the support by scanning small primes.
            let mut p = 3u64;
            loop {
                if is_prime_u64(p) && !self.is_isotropic_at(Place::Prime(p)) {
                    return Ok(Some(Place::Prime(p)));
                }
                p += 2;
            }
        }
        if self.dim() == 1 {
            return Ok(Some(Place::Real));
        }
        if !self.is_isotropic_at(Place::Real) {
            return Ok(Some(Place::Real));
        }
        if self.dim() >= 5 {
            return Ok(None);
        }
        for p in self.relevant_primes()? {
            if !self.is_isotropic_at(Place::Prime(p)) {
                return Ok(Some(Place::Prime(p)));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(crate::exact_numbers::fmt_rational)
            .collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Hasse–Minkowski: isotropic over ℚ iff isotropic everywhere locally.
pub fn is_isotropic(f: &QuadraticForm) -> Result<bool> {
    match f.dim() {
        1 => Ok(false),
        2 => Ok(is_square(&(-f.det()))),
        _ => Ok(f.anisotropic_place()?.is_none()),
    }
}

pub fn represents(f: &QuadraticForm, b: &Rational) -> Result<bool> {
    if b.is_zero() {
        return Err(Error::Zero("represents 0".into()));
    }
    is_isotropic(&f.orth(&QuadraticForm::new(vec![-b])?))
}

/// Isometry over ℚ: dimension, signature, discriminant and Hasse invariants.
pub fn is_isometric(f: &QuadraticForm, g: &QuadraticForm) -> Result<bool> {
    if f.dim() != g.dim() || f.signature() != g.signature() {
        return Ok(false);
    }
    if !is_square(&(f.det() / g.det())) {
        return Ok(false);
    }
    let mut ps = f.relevant_primes()?;
    ps.extend(g.relevant_primes()?);
    ps.sort_unstable();
    ps.dedup();
    Ok(ps
        .into_iter()
        .all(|p| f.hasse(Place::Prime(p)) == g.hasse(Place::Prime(p))))
}

pub fn is_hyperbolic(f: &QuadraticForm) -> Result<bool> {
    if f.dim() % 2 == 1 {
        return Ok(false);
    }
    is_isometric(f, &QuadraticForm::hyperbolic(f.dim() / 2))
}

/// Equality in the Witt ring: f ⊥ −g hyperbolic.
pub fn witt_equivalent(f: &QuadraticForm, g: &QuadraticForm) -> Result<bool> {
    is_hyperbolic(&f.orth(&g.negated()))
}

/// Bounded search for a primitive integer zero with max |xᵢ| ≤ `max_height`,
/// trying boxes of growing size.
pub fn find_zero(f: &QuadraticForm, max_height: u64) -> Option<Vec<BigInt>> {
    let n = f.dim();
    if n < 2 {
        return None;
    }
    let l = f
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let a: Vec<i128> = f
        .coeffs
        .iter()
        .map(|c| (c * big(&l)).to_integer().to_i128())
        .collect::<Option<_>>()?;
    let mut h = 1u64;
    loop {
        let h_eff = h.min(max_height);
        if let Some(z) = search_box(&a, h_eff as i128) {
            return Some(z.into_iter().map(BigInt::from).collect());
        }
        if h_eff == max_height {
            return None;
        }
        h = h.saturating_mul(2);
    }
}

fn isqrt_exact(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = (v as u128).isqrt() as i128;
    (r * r == v).then_some(r)
}

/// Zero of Σ aᵢxᵢ² with |xᵢ| ≤ h, solving for the last coordinate.
fn search_box(a: &[i128], h: i128) -> Option<Vec<i128>> {
    let n = a.len();
    let last = a[n - 1];
    let mut x = vec![0i128; n];
    fn rec(a: &[i128], h: i128, last: i128, x: &mut [i128], i: usize, acc: i128, nz: bool) -> bool {
        let n = a.len();
        if i == n - 1 {
            // last·t² = −acc
            if acc % last != 0 {
                return false;
            }
            let t2 = -acc / last;
            if let Some(t) = isqrt_exact(t2) {
                if t <= h && (nz || t != 0) {
                    x[n - 1] = t;
                    return true;
                }
            }
            return false;
        }
        // The first nonzero coordinate is taken positive.
        let lo = if nz { -h } else { 0 };
        for v in lo..=h {
            x[i] = v;
            let Some(term) = a[i].checked_mul(v * v) else {
                continue;
            };
            let Some(acc2) = acc.checked_add(term) else {
                continue;
            };
            if rec(a, h, last, x, i + 1, acc2, nz || v != 0) {
                return true;
            }
        }
        false
    }
    if rec(a, h, last, &mut x, 0, 0, false) {
        let g = x.iter().fold(0i128, |g, &v| g.gcd(&v));
        Some(x.into_iter().map(|v| v / g).collect())
    } else {
        None
    }
}

/// n-fold Pfister form ⟨⟨a₁, …, aₙ⟩⟩ = ⟨1, −a₁⟩ ⊗ … ⊗ ⟨1, −aₙ⟩.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PfisterForm {
    slots: Vec<Rational>,
    expansion: QuadraticForm,
}

pub fn pfister(slots: &[Rational]) -> Result<PfisterForm> {
    if slots.iter().any(|s| s.is_zero()) {
        return Err(Error::Zero("zero Pfister slot".into()));
    }
    // Entry i is the product of −a_k over the set bits k of i.
    let mut c = vec![Rational::one()];
    for a in slots {
        let m: Vec<Rational> = c.iter().map(|x| -(x * a)).collect();
        c.extend(m);
    }
    Ok(PfisterForm {
        slots: slots.to_vec(),
        expansion: QuadraticForm { coeffs: c },
    })
}

impl PfisterForm {
    pub fn slots(&self) -> &[Rational] {
        &self.slots
    }

    pub fn fold(&self) -> usize {
        self.slots.len()
    }

    pub fn expansion(&self) -> &QuadraticForm {
        &self.expansion
    }

    /// π′ with π = ⟨1⟩ ⊥ π′.
    pub fn pure_part(&self) -> Option<QuadraticForm> {
        if self.slots.is_empty() {
            None
        } else {
            Some(QuadraticForm {
                coeffs: self.expansion.coeffs[1..].to_vec(),
            })
        }
    }

    pub fn tensor(&self, other: &PfisterForm) -> PfisterForm {
        let mut s = self.slots.clone();
        s.extend(other.slots.iter().cloned());
        pfister(&s).expect("slots already nonzero")
    }
}

impl fmt::Display for PfisterForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(crate::exact_numbers::fmt_rational)
            .collect();
        write!(f, "<<{}>>", parts.join(","))
    }
}

pub fn tensor(f: &PfisterForm, g: &PfisterForm) -> PfisterForm {
    f.tensor(g)
}

/// e_n(π) = 0, i.e. π hyperbolic.
pub fn arason_trivial(pi: &PfisterForm) -> Result<bool> {
    if pi.slots.is_empty() {
        return Ok(false);
    }
    is_hyperbolic(&pi.expansion)
}

/// Whether ⟨⟨d⟩⟩ divides π: π hyperbolic, or the pure part represents −d.
pub fn pfister_divides_1fold(d: &Rational, pi: &PfisterForm) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::Zero("zero divisor slot".into()));
    }
    if arason_trivial(pi)? {
        return Ok(true);
    }
    match pi.pure_part() {
        Some(p) => represents(&p, &(-d)),
        None => Ok(is_square(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::{int, primes_up_to, rat};

    fn qf(c: &[i64]) -> QuadraticForm {
        QuadraticForm::from_ints(c).unwrap()
    }

    fn pf(c: &[i64]) -> PfisterForm {
        pfister(&c.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        let m1 = int(-1);
        assert_eq!(hilbert_symbol(&m1, &m1, Place::Real).unwrap(), -1);
        assert_eq!(hilbert_symbol(&m1, &m1, Place::Prime(2)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&m1, &m1, Place::Prime(3)).unwrap(), 1);
        for v in [Place::Real, Place::Prime(2), Place::Prime(7)] {
            assert_eq!(hilbert_symbol(&int(1), &rat(-7, 3), v).unwrap(), 1);
        }
        assert_eq!(hilbert_symbol(&m1, &int(3), Place::Prime(3)).unwrap(), -1);
        assert!(hilbert_symbol(&int(0), &int(3), Place::Real).is_err());
    }

    /// z² = a x² + b y² has a primitive solution mod p^k.
    fn primitive_solution_mod(a: i64, b: i64, p: i64, k: u32) -> bool {
        let m = p.pow(k);
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if x % p == 0 && y % p == 0 && z % p == 0 {
                        continue;
                    }
                    if (z * z - a * x * x - b * y * y).rem_euclid(m) == 0 {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn hilbert_at_two_matches_congruence_oracle() {
        // Square-free representatives u·2^e cover every class in ℚ₂*/ℚ₂*².
        let reps = [1, 3, 5, 7, 2, 6, 10, 14, -1, -3, -2, -6];
        for &a in &reps {
            for &b in &reps {
                let s = hilbert_symbol(&int(a), &int(b), Place::Prime(2)).unwrap();
                let solvable = primitive_solution_mod(a, b, 2, 5);
                assert_eq!(s == 1, solvable, "({a},{b})_2");
            }
        }
    }

    #[test]
    fn hilbert_at_odd_primes_matches_congruence_oracle() {
        for p in [3i64, 5, 7] {
            let reps: Vec<i64> = (1..p).chain((1..p).map(|u| u * p)).collect();
            for &a in &reps {
                for &b in &reps {
                    let s = hilbert_symbol(&int(a), &int(b), Place::Prime(p as u64)).unwrap();
                    let solvable = primitive_solution_mod(a, b, p, 2);
                    assert_eq!(s == 1, solvable, "({a},{b})_{p}");
                }
            }
        }
    }

    #[test]
    fn reciprocity_small() {
        let vals = [-30, -7, -6, -3, -2, -1, 2, 3, 5, 6, 10, 15, 21, 35];
        for &a in &vals {
            for &b in &vals {
                let mut prod = hilbert_symbol(&int(a), &int(b), Place::Real).unwrap();
                for p in primes_up_to(40) {
                    prod *= hilbert_symbol(&int(a), &int(b), Place::Prime(p)).unwrap();
                }
                assert_eq!(prod, 1, "({a},{b})");
            }
        }
    }

    #[test]
    fn isotropy_examples() {
        assert!(is_isotropic(&qf(&[1, -1])).unwrap());
        assert!(!is_isotropic(&qf(&[1, 1, 1])).unwrap());
        assert!(is_isotropic(&qf(&[1, 1, 1, 1, -7])).unwrap());
        assert_eq!(
            find_zero(&qf(&[1, 1, 1, 1, -7]), 10).map(|z| qf(&[1, 1, 1, 1, -7]).evaluate_int(&z)),
            Some(Rational::zero())
        );
        assert!(!is_isotropic(&qf(&[1])).unwrap());
        // x² + y² − 3z² is anisotropic at 3.
        assert!(!is_isotropic(&qf(&[1, 1, -3])).unwrap());
        assert!(is_isotropic(&qf(&[1, 1, -2])).unwrap());
        // ⟨1,1,1,−7⟩ fails at 2 (sums of three squares).
        assert!(!is_isotropic(&qf(&[1, 1, 1, -7])).unwrap());
        assert_eq!(
            qf(&[1, 1, 1, -7]).anisotropic_place().unwrap(),
            Some(Place::Prime(2))
        );
    }

    #[test]
    fn represents_examples() {
        assert!(represents(&qf(&[1, 1]), &int(5)).unwrap());
        assert!(!represents(&qf(&[1, 1]), &int(3)).unwrap());
        assert!(represents(&qf(&[3, 7, -2]), &int(3)).unwrap());
        assert!(represents(&qf(&[1, 1]), &rat(1, 2)).unwrap());
        assert!(represents(&qf(&[1, 1]), &int(0)).is_err());
    }

    #[test]
    fn pfister_examples() {
        assert_eq!(pf(&[5]).expansion(), &qf(&[1, -5]));
        assert_eq!(pf(&[-1, -1, -1]).expansion(), &qf(&[1; 8]));
        assert!(is_hyperbolic(pf(&[1, 7]).expansion()).unwrap());
        assert!(pfister(&[int(0)]).is_err());
        assert_eq!(pf(&[2]).tensor(&pf(&[3])), pf(&[2, 3]));
        assert_eq!(pf(&[2, 3]).tensor(&pf(&[-1])).expansion().dim(), 8);
    }

    #[test]
    fn hyperbolic_examples() {
        assert!(is_hyperbolic(&qf(&[1, -1])).unwrap());
        assert!(!is_hyperbolic(&qf(&[1, 1])).unwrap());
        assert!(is_hyperbolic(pf(&[1, 2, 3]).expansion()).unwrap());
        assert!(!is_hyperbolic(&qf(&[1, -1, 1])).unwrap());
        assert!(is_hyperbolic(&qf(&[2, -2, 3, -3])).unwrap());
        assert!(witt_equivalent(&qf(&[1, 1, 1]), &qf(&[3, 1, -1, 1, 1])).is_ok());
    }

    #[test]
    fn arason_examples() {
        assert!(arason_trivial(&pf(&[1])).unwrap());
        assert!(!arason_trivial(&pf(&[-1, -1, -1])).unwrap());
        assert!(!arason_trivial(&pf(&[2, 3])).unwrap());
    }

    #[test]
    fn divisibility_examples() {
        assert!(pfister_divides_1fold(&int(3), &pf(&[3, 5, 7])).unwrap());
        assert!(pfister_divides_1fold(&int(-1), &pf(&[-1, -1, -1])).unwrap());
        assert!(!pfister_divides_1fold(&int(2), &pf(&[-1, -1, -1])).unwrap());
        assert!(pfister_divides_1fold(&int(0), &pf(&[2])).is_err());
    }

    #[test]
    fn isometry_detects_square_classes() {
        assert!(is_isometric(&qf(&[1, 1]), &qf(&[2, 2])).unwrap());
        assert!(is_isometric(&qf(&[1, 1]), &qf(&[5, 5])).unwrap());
        assert!(!is_isometric(&qf(&[1, 1]), &qf(&[3, 3])).unwrap());
    }
}
