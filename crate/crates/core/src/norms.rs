//! Norm equations used by the cohomology engine: norms from quadratic
//! extensions of ℚ and of quadratic fields, bounded searches for norms from
//! cubic fields, and square roots in cubic fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::etale::{self, CubicEtale, EtaleElement, UnitaryAlgebra};
use crate::exact_numbers::{big, int, is_square, prime_support, Rational, SquareClass};
use crate::poly;
use crate::quadratic_forms::{find_zero, hilbert_symbol, represents, Place, QuadraticForm};

/// Whether s ∈ N_{K/ℚ}(K*) for K = ℚ(√d).
pub fn is_norm_from_quadratic(d: &Rational, s: &Rational) -> Result<bool> {
    if is_square(d) {
        return Ok(true);
    }
    represents(&QuadraticForm::new(vec![Rational::one(), -d])?, s)
}

/// (x, y) with x² − d·y² = s, by bounded search on the conic.
pub fn solve_quadratic_norm(d: &Rational, s: &Rational, height: u64) -> Option<[Rational; 2]> {
    if let Some(r) = crate::exact_numbers::rational_sqrt(s) {
        return Some([r, Rational::zero()]);
    }
    if is_square(d) {
        // x² − y² = s with r² = d: (x − ry)(x + ry) = s.
        let r = crate::exact_numbers::rational_sqrt(d)?;
        let two = int(2);
        let x = (s + Rational::one()) / &two;
        let y = (s - Rational::one()) / (&two * &r);
        return Some([x, y]);
    }
    let f = QuadraticForm::new(vec![Rational::one(), -d, -s]).ok()?;
    let z = find_zero(&f, height)?;
    if z[2].is_zero() {
        return None;
    }
    let t = big(&z[2]);
    Some([big(&z[0]) / &t, big(&z[1]) / &t])
}

/// Decides σ ∈ N_{M/K₀}(M*) for K₀ = ℚ(√α₀) a field, M = K₀(√α) and
/// σ = a + b√α₀ ≠ 0, by the Hasse norm theorem. Returns the verdict and,
/// when false, a description of an obstructing place.
pub fn quad_over_quad_norm(
    alpha0: &SquareClass,
    alpha: &Rational,
    sigma: &[Rational],
) -> Result<(bool, Option<String>)> {
    let d0 = alpha0.to_rational();
    if is_square(alpha) || is_square(&(alpha * &d0)) {
        return Ok((true, None));
    }
    let (a, b) = (&sigma[0], &sigma[1]);
    let nsig = a * a - &d0 * b * b;
    // Real places of K₀.
    if d0.is_positive() && alpha.is_negative() {
        for sgn in [1i64, -1] {
            if etale::sign_of_real_quadratic(a, &(b * int(sgn)), &d0) < 0 {
                let name = if sgn == 1 { "+" } else { "-" };
                return Ok((
                    false,
                    Some(format!("real embedding sqrt(alpha0) -> {name}")),
                ));
            }
        }
    }
    let mut primes = vec![2u64];
    primes.extend(prime_support(alpha)?);
    primes.extend(prime_support(&d0)?);
    primes.extend(prime_support(&nsig)?);
    for c in [a, b] {
        if !c.is_zero() {
            primes.extend(prime_support(&big(c.denom()))?);
        }
    }
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        if let Some(r) = padic_sqrt_fn(&d0, p) {
            for sgn in [1i64, -1] {
                let y = split_image(a, b, &r, sgn, p);
                if hilbert_symbol(alpha, &y, Place::Prime(p))? == -1 {
                    let name = if sgn == 1 { "+" } else { "-" };
                    return Ok((false, Some(format!("p={p} (split, root {name})"))));
                }
            }
        } else if hilbert_symbol(alpha, &nsig, Place::Prime(p))? == -1 {
            return Ok((false, Some(format!("p={p}"))));
        }
    }
    Ok((true, None))
}

/// A p-adic square root of d to any requested precision, when d is a
/// nonzero square in ℚ_p with p ∤ d (the split case of ℚ(√d) at p).
fn padic_sqrt_fn(d: &Rational, p: u64) -> Option<impl Fn(u32) -> BigInt> {
    let dn = d.to_integer();
    if d.denom() != &BigInt::one() {
        return None;
    }
    let pb = BigInt::from(p);
    if (&dn % &pb).is_zero() {
        return None;
    }
    if p == 2 {
        if dn.mod_floor(&BigInt::from(8)) != BigInt::one() {
            return None;
        }
    } else if crate::exact_numbers::legendre_symbol(&dn, p).ok()? != 1 {
        return None;
    }
    let r0 = if p == 2 { 1u64 } else { tonelli_shanks(&dn, p) };
    Some(move |k: u32| -> BigInt {
        let pb = BigInt::from(p);
        if p == 2 {
            // Bitwise: keep r² ≡ d mod 2^(i+1); r is then right mod 2^k.
            let mut r = BigInt::one();
            for i in 3..=(k + 1) {
                let m = BigInt::one() << (i + 1);
                if ((&r * &r - &dn).mod_floor(&m)).is_zero() {
                    continue;
                }
                r += BigInt::one() << (i - 1);
            }
            r.mod_floor(&(BigInt::one() << k))
        } else {
            // Newton iteration doubles the precision.
            let mut r = BigInt::from(r0);
            let mut prec = 1u32;
            while prec < k {
                prec = (2 * prec).min(k);
                let m = pb.pow(prec);
                let inv = crate::exact_numbers::mod_inverse(&(BigInt::from(2) * &r), &m)
                    .expect("2r is a unit");
                r = (&r - (&r * &r - &dn) * inv).mod_floor(&m);
            }
            r
        }
    })
}

fn tonelli_shanks(n: &BigInt, p: u64) -> u64 {
    let n = n.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let powm = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, b);
            }
            b = mulm(b, b);
            e >>= 1;
        }
        r
    };
    if p % 4 == 3 {
        return powm(n, (p + 1) / 4);
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| powm(z, (p - 1) / 2) == p - 1).unwrap();
    let mut m = s;
    let mut c = powm(z, q);
    let mut t = powm(n, q);
    let mut r = powm(n, (q + 1) / 2);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulm(tt, tt);
            i += 1;
        }
        let b = powm(c, 1 << (m - i - 1));
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    r
}

/// A rational with the same p-adic square class as a ± b·r, where r is the
/// p-adic root supplied by `root`.
fn split_image(
    a: &Rational,
    b: &Rational,
    root: &impl Fn(u32) -> BigInt,
    sgn: i64,
    p: u64,
) -> Rational {
    let den = a.denom().lcm(b.denom());
    let an = (a * big(&den)).to_integer();
    let bn = (b * big(&den)).to_integer() * sgn;
    let pb = BigInt::from(p);
    let extra = if p == 2 { 3 } else { 1 };
    let mut k = 32u32;
    loop {
        let m = pb.pow(k);
        let x = (&an + &bn * root(k)).mod_floor(&m);
        if !x.is_zero() {
            let (v, _) = crate::exact_numbers::split_valuation(&x, p);
            if (v as u32) + extra <= k {
                // x agrees with the true value to enough digits; scaling by
                // den (≡ 1/den mod squares) keeps the class of (a ± br).
                return big(&(x * &den));
            }
        }
        k *= 2;
    }
}

/// Exhaustive search for x ∈ L (a cubic field) with N_{L/ℚ}(x) = r, over
/// x = v/(d·m) with v ∈ [−h, h]³ integral, r = n/m. Boxes grow
/// geometrically so small witnesses are found first.
pub fn cubic_norm_search(l: &CubicEtale, r: &Rational, h: i64) -> Option<EtaleElement> {
    let coeffs = l.norm_form_coeffs()?;
    if r.is_zero() {
        return None;
    }
    let m = r.denom().clone();
    let big_r = r.numer() * &m * &m;
    let rr = big_r.to_i64()?;
    let mut box_h = 2i64;
    loop {
        let hh = box_h.min(h);
        if let Some((v, d)) = cube_search_box(&coeffs, rr, hh) {
            let s = Rational::one() / (int(d) * big(&m));
            return Some(v.iter().map(|&c| int(c) * &s).collect());
        }
        if hh == h {
            return None;
        }
        box_h *= 4;
    }
}

fn icbrt(n: i64) -> Option<i64> {
    let neg = n < 0;
    let a = n.unsigned_abs();
    let (mut lo, mut hi) = (0u64, 2_097_152u64);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if (mid as u128).pow(3) <= a as u128 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    ((lo as u128).pow(3) == a as u128).then_some(if neg { -(lo as i64) } else { lo as i64 })
}

fn cube_search_box(coeffs: &[([u32; 3], i64)], r: i64, h: i64) -> Option<([i64; 3], i64)> {
    let maxc = coeffs
        .iter()
        .map(|(_, c)| c.unsigned_abs())
        .max()
        .unwrap_or(0) as u128;
    let bound = maxc * 10 * (h as u128).pow(3);
    if bound >= (1u128 << 62) {
        // Values would overflow i64; the default bounds never get here.
        return cube_search_box_wide(coeffs, r, h);
    }
    let mut cubes63 = [false; 63];
    for x in 0..63i64 {
        cubes63[((x * x * x) % 63) as usize] = true;
    }
    let coef = |e: [u32; 3]| coeffs.iter().find(|(k, _)| *k == e).map_or(0, |(_, c)| *c);
    let c300 = coef([3, 0, 0]);
    let c210 = coef([2, 1, 0]);
    let c120 = coef([1, 2, 0]);
    let c030 = coef([0, 3, 0]);
    let c201 = coef([2, 0, 1]);
    let c111 = coef([1, 1, 1]);
    let c021 = coef([0, 2, 1]);
    let c102 = coef([1, 0, 2]);
    let c012 = coef([0, 1, 2]);
    let c003 = coef([0, 0, 3]);
    let test = |n: i64| -> Option<i64> {
        if n == 0 || n % r != 0 {
            return None;
        }
        let q = n / r;
        if !cubes63[q.rem_euclid(63) as usize] {
            return None;
        }
        icbrt(q)
    };
    // Half space: the first nonzero coordinate is positive.
    for a in 0..=h {
        let blo = if a == 0 { 0 } else { -h };
        for b in blo..=h {
            let a3 = c003;
            let a2 = c102 * a + c012 * b;
            let a1 = c201 * a * a + c111 * a * b + c021 * b * b;
            let a0 = c300 * a * a * a + c210 * a * a * b + c120 * a * b * b + c030 * b * b * b;
            let clo = if a == 0 && b == 0 { 1 } else { -h };
            for c in clo..=h {
                let n = ((a3 * c + a2) * c + a1) * c + a0;
                if let Some(d) = test(n) {
                    return Some(([a, b, c], d));
                }
            }
        }
    }
    None
}

fn cube_search_box_wide(coeffs: &[([u32; 3], i64)], r: i64, h: i64) -> Option<([i64; 3], i64)> {
    for a in 0..=h {
        let blo = if a == 0 { 0 } else { -h };
        for b in blo..=h {
            let clo = if a == 0 && b == 0 { 1 } else { -h };
            for c in clo..=h {
                let v = [a as i128, b as i128, c as i128];
                let n: i128 = coeffs
                    .iter()
                    .map(|(e, k)| *k as i128 * v[0].pow(e[0]) * v[1].pow(e[1]) * v[2].pow(e[2]))
                    .sum();
                if n == 0 || n % r as i128 != 0 {
                    continue;
                }
                let q = BigInt::from(n / r as i128);
                if let Some(d) = crate::exact_numbers::int_cbrt_exact(&q) {
                    return Some(([a, b, c], d.to_i64()?));
                }
            }
        }
    }
    None
}

/// Square root in a cubic field L, if one exists.
///
/// If x² = c then the characteristic polynomial t³ + h₂t² + h₁t + h₀ of x
/// divides χ_c(t²), and x = −(h₂c + h₀)/(c + h₁).
pub fn cubic_field_sqrt(l: &CubicEtale, c: &[Rational]) -> Option<EtaleElement> {
    let alg = l.algebra();
    if etale::is_zero(c) {
        return Some(alg.zero());
    }
    if !is_square(&l.norm(c)) {
        return None;
    }
    let chi = alg.char_poly(c);
    let mut chi2 = vec![Rational::zero(); 7];
    for (i, a) in chi.iter().enumerate() {
        chi2[2 * i] = a.clone();
    }
    let factors = poly::factor(&chi2).ok()?;
    for (f, _) in factors {
        if f.len() != 4 {
            continue;
        }
        let num = etale::add(&l.scalar(&f[0]), &etale::scale(c, &f[2]));
        let den = etale::add(c, &l.scalar(&f[1]));
        let Some(di) = alg.inverse(&den) else {
            continue;
        };
        let x = etale::neg(&alg.mul(&num, &di));
        if alg.mul(&x, &x) == c {
            return Some(x);
        }
    }
    None
}

/// w ∈ E with N_{E/L}(w) = s for L a cubic field and K = ℚ(√d), searching
/// s·t² + d·y² = x² with y ∈ [−h, h]³ and t ∈ {1, 2, 3}.
pub fn search_norm_el(e: &UnitaryAlgebra, s: &[Rational], h: i64) -> Option<EtaleElement> {
    let l = e.l();
    let d = e.k().d();
    for t in 1..=3i64 {
        let st = etale::scale(s, &int(t * t));
        for y0 in -h..=h {
            for y1 in -h..=h {
                for y2 in -h..=h {
                    let y = vec![int(y0), int(y1), int(y2)];
                    let c = etale::add(&st, &etale::scale(&l.mul(&y, &y), d));
                    if let Some(x) = cubic_field_sqrt(l, &c) {
                        let inv = Rational::new(1.into(), t.into());
                        let w =
                            UnitaryAlgebra::join(&etale::scale(&x, &inv), &etale::scale(&y, &inv));
                        if e.inverse(&w).is_some() {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}
