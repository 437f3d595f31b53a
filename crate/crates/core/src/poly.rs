//! Univariate polynomials over ℚ and factorization over ℚ by the
//! Berlekamp–Zassenhaus route (Cantor–Zassenhaus mod p, Hensel lifting,
//! subset recombination).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{big, is_prime_u64, Rational};

/// Coefficients from the constant term upwards, no trailing zeros.
pub type Poly = Vec<Rational>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

pub fn from_ints(c: &[i64]) -> Poly {
    trim(c.iter().map(|&x| crate::exact_numbers::int(x)).collect())
}

pub fn degree(f: &Poly) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn add(f: &Poly, g: &Poly) -> Poly {
    let n = f.len().max(g.len());
    trim(
        (0..n)
            .map(|i| {
                f.get(i).cloned().unwrap_or_else(Rational::zero)
                    + g.get(i).cloned().unwrap_or_else(Rational::zero)
            })
            .collect(),
    )
}

pub fn neg(f: &Poly) -> Poly {
    f.iter().map(|c| -c).collect()
}

pub fn sub(f: &Poly, g: &Poly) -> Poly {
    add(f, &neg(g))
}

pub fn scale(f: &Poly, c: &Rational) -> Poly {
    trim(f.iter().map(|x| x * c).collect())
}

pub fn mul(f: &Poly, g: &Poly) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

pub fn divrem(f: &Poly, g: &Poly) -> (Poly, Poly) {
    assert!(!g.is_empty(), "polynomial division by zero");
    let mut r = f.clone();
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return (Vec::new(), r);
    }
    let lead_inv = Rational::one() / g.last().unwrap();
    let mut q = vec![Rational::zero(); r.len() - dg];
    while r.len() >= g.len() {
        let shift = r.len() - g.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, gi) in g.iter().enumerate() {
            let t = &c * gi;
            r[shift + i] -= t;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(f: &Poly) -> Poly {
    match f.last() {
        Some(l) => {
            let inv = Rational::one() / l;
            f.iter().map(|c| c * &inv).collect()
        }
        None => Vec::new(),
    }
}

pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = divrem(&a, &b).1;
        a = b;
        b = r;
    }
    monic(&a)
}

/// Returns `(s, t, g)` with `s·f + t·h = g`, `g` the monic gcd.
pub fn ext_gcd(f: &Poly, h: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (f.clone(), h.clone());
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let l = Rational::one() / r0.last().expect("gcd of two zero polynomials");
    (scale(&s0, &l), scale(&t0, &l), scale(&r0, &l))
}

pub fn derivative(f: &Poly) -> Poly {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

pub fn eval(f: &Poly, x: &Rational) -> Rational {
    f.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn is_squarefree(f: &Poly) -> bool {
    gcd(f, &derivative(f)).len() <= 1
}

/// Discriminant of a monic cubic x³ + c₂x² + c₁x + c₀.
pub fn cubic_discriminant(c0: &Rational, c1: &Rational, c2: &Rational) -> Rational {
    // b²c² − 4c³ − 4b³d − 27d² + 18bcd for x³ + bx² + cx + d.
    let (b, c, d) = (c2, c1, c0);
    b * b * c * c
        - Rational::from_integer(4.into()) * c * c * c
        - Rational::from_integer(4.into()) * b * b * b * d
        - Rational::from_integer(27.into()) * d * d
        + Rational::from_integer(18.into()) * b * c * d
}

/// Monic irreducible factors over ℚ of a polynomial, with multiplicities.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    if f.is_empty() {
        return Err(Error::Zero("factor the zero polynomial".into()));
    }
    let mut out = Vec::new();
    // Yun's square-free decomposition.
    let f = monic(f);
    if f.len() == 1 {
        return Ok(out);
    }
    let fp = derivative(&f);
    let mut a = gcd(&f, &fp);
    let mut b = divrem(&f, &a).0;
    let mut c = divrem(&fp, &a).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while b.len() > 1 {
        a = gcd(&b, &d);
        if a.len() > 1 {
            for g in factor_squarefree(&a)? {
                out.push((g, i));
            }
        }
        b = divrem(&b, &a).0;
        c = divrem(&d, &a).0;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| cmp_poly(&x.0, &y.0)));
    Ok(out)
}

fn cmp_poly(f: &Poly, g: &Poly) -> std::cmp::Ordering {
    f.len()
        .cmp(&g.len())
        .then_with(|| f.iter().rev().cmp(g.iter().rev()))
}

/// Monic irreducible factors of a square-free polynomial over ℚ.
pub fn factor_squarefree(f: &Poly) -> Result<Vec<Poly>> {
    let f = trim(f.clone());
    match f.len() {
        0 => return Err(Error::Zero("factor the zero polynomial".into())),
        1 => return Ok(Vec::new()),
        2 => return Ok(vec![monic(&f)]),
        _ => {}
    }
    if !is_squarefree(&f) {
        return Err(Error::Invalid("polynomial is not square-free".into()));
    }
    // Pull out the factor x when present so the constant term is nonzero.
    let mut out = Vec::new();
    let mut f = f;
    if f[0].is_zero() {
        out.push(vec![Rational::zero(), Rational::one()]);
        f.remove(0);
        if f.len() == 1 {
            return Ok(out);
        }
    }
    let fz = primitive_integer(&f);
    for g in zassenhaus(&fz)? {
        out.push(monic(&g.iter().map(big).collect()));
    }
    out.sort_by(cmp_poly);
    Ok(out)
}

type ZPoly = Vec<BigInt>;

fn ztrim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

/// Primitive integer multiple with positive leading coefficient.
fn primitive_integer(f: &Poly) -> ZPoly {
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut z: ZPoly = f.iter().map(|c| (c * big(&l)).to_integer()).collect();
    let g = z.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in z.iter_mut() {
        *c /= &g;
    }
    if z.last().unwrap().is_negative() {
        for c in z.iter_mut() {
            *c = -c.clone();
        }
    }
    z
}

fn zmul(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    ztrim(out)
}

/// Exact division in ℤ[x]; `None` if `g` does not divide `f`.
fn zdiv_exact(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let mut r = f.clone();
    let dg = g.len() - 1;
    if r.len() < g.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let lead = g.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - dg];
    while r.len() >= g.len() {
        let shift = r.len() - g.len();
        let (c, rem) = r.last().unwrap().div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] -= &c * gi;
        }
        q[shift] = c;
        r.pop();
        r = ztrim(r);
        if r.len() < g.len() && !r.is_empty() {
            return None;
        }
    }
    if r.is_empty() {
        Some(ztrim(q))
    } else {
        None
    }
}

fn zcontent_free(f: &ZPoly) -> ZPoly {
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: ZPoly = f.iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        out = out.into_iter().map(|c| -c).collect();
    }
    out
}

// Arithmetic in 𝔽_p[x] with p < 2³¹.

type FPoly = Vec<u64>;

fn ftrim(mut f: FPoly) -> FPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn finv(a: u64, p: u64) -> u64 {
    fpow(a, p - 2, p)
}

fn fpow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn fsub(f: &FPoly, g: &FPoly, p: u64) -> FPoly {
    let n = f.len().max(g.len());
    ftrim(
        (0..n)
            .map(|i| {
                let a = f.get(i).copied().unwrap_or(0);
                let b = g.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect(),
    )
}

fn fmul(f: &FPoly, g: &FPoly, p: u64) -> FPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    ftrim(out)
}

fn fdivrem(f: &FPoly, g: &FPoly, p: u64) -> (FPoly, FPoly) {
    let mut r = f.clone();
    if r.len() < g.len() {
        return (Vec::new(), r);
    }
    let inv = finv(*g.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - g.len() + 1];
    while r.len() >= g.len() && !r.is_empty() {
        let shift = r.len() - g.len();
        let c = r.last().unwrap() * inv % p;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * gi % p) % p;
        }
        q[shift] = c;
        r = ftrim(r);
    }
    (ftrim(q), r)
}

fn fmonic(f: &FPoly, p: u64) -> FPoly {
    let inv = finv(*f.last().unwrap(), p);
    f.iter().map(|c| c * inv % p).collect()
}

fn fgcd(f: &FPoly, g: &FPoly, p: u64) -> FPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = fdivrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fmonic(&a, p)
    }
}

/// `(s, t)` with `s·a + t·b = 1` for coprime `a`, `b`.
fn fext_gcd(a: &FPoly, b: &FPoly, p: u64) -> (FPoly, FPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fdivrem(&r0, &r1, p);
        let s2 = fsub(&s0, &fmul(&q, &s1, p), p);
        let t2 = fsub(&t0, &fmul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = finv(r0[0], p);
    (
        s0.iter().map(|c| c * inv % p).collect(),
        t0.iter().map(|c| c * inv % p).collect(),
    )
}

fn fpowmod(base: &FPoly, e: &BigUint, m: &FPoly, p: u64) -> FPoly {
    let mut result = vec![1u64];
    let mut b = fdivrem(base, m, p).1;
    for i in 0..e.bits() {
        if e.bit(i) {
            result = fdivrem(&fmul(&result, &b, p), m, p).1;
        }
        b = fdivrem(&fmul(&b, &b, p), m, p).1;
    }
    result
}

/// Deterministic xorshift used for the random splitting polynomials.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Monic irreducible factors of a monic square-free polynomial mod an odd prime.
fn factor_mod_p(f: &FPoly, p: u64) -> Vec<FPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: FPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    let mut rng = XorShift(0x9E37_79B9_7F4A_7C15);
    while rest.len() > 1 && 2 * d <= rest.len() - 1 {
        h = fpowmod(&h, &BigUint::from(p), &rest, p);
        let g = fgcd(&fsub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            rest = fdivrem(&rest, &g, p).0;
            h = fdivrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(fmonic(&rest, p));
    }
    out
}

fn equal_degree_split(g: &FPoly, d: usize, p: u64, rng: &mut XorShift, out: &mut Vec<FPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(fmonic(g, p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: FPoly = ftrim((0..n).map(|_| rng.next() % p).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fsub(&fpowmod(&a, &e, g, p), &vec![1], p);
        let h = fgcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            equal_degree_split(&h, d, p, rng, out);
            equal_degree_split(&fdivrem(g, &h, p).0, d, p, rng, out);
            return;
        }
    }
}

fn reduce_mod(f: &ZPoly, m: &BigInt) -> ZPoly {
    ztrim(f.iter().map(|c| c.mod_floor(m)).collect())
}

fn to_fp(f: &ZPoly, p: u64) -> FPoly {
    let bp = BigInt::from(p);
    ftrim(
        f.iter()
            .map(|c| c.mod_floor(&bp).to_u64().unwrap())
            .collect(),
    )
}

fn from_fp(f: &FPoly) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ g·h (mod p)` with `g` monic to `f ≡ G·H (mod p^k)`.
fn hensel_lift(f: &ZPoly, g: &FPoly, h: &FPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (_, t) = fext_gcd(g, h, p);
    let bp = BigInt::from(p);
    let mut gz = from_fp(g);
    let mut hz = from_fp(h);
    let mut pj = bp.clone();
    for _ in 1..k {
        let pj1 = &pj * &bp;
        let diff = reduce_mod(&zsub(f, &zmul(&gz, &hz)), &pj1);
        let e: FPoly = ftrim(
            diff.iter()
                .map(|c| (c / &pj).to_u64().unwrap() % p)
                .collect(),
        );
        if !e.is_empty() {
            let dg = fdivrem(&fmul(&t, &e, p), g, p).1;
            let dh = fdivrem(&fsub(&e, &fmul(&dg, h, p), p), g, p).0;
            gz = zadd(&gz, &zscale(&from_fp(&dg), &pj));
            hz = zadd(&hz, &zscale(&from_fp(&dh), &pj));
        }
        pj = pj1;
    }
    (reduce_mod(&gz, &pj), reduce_mod(&hz, &pj))
}

fn zadd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    let n = f.len().max(g.len());
    ztrim(
        (0..n)
            .map(|i| f.get(i).cloned().unwrap_or_default() + g.get(i).cloned().unwrap_or_default())
            .collect(),
    )
}

fn zsub(f: &ZPoly, g: &ZPoly) -> ZPoly {
    zadd(f, &g.iter().map(|c| -c).collect())
}

fn zscale(f: &ZPoly, c: &BigInt) -> ZPoly {
    ztrim(f.iter().map(|x| x * c).collect())
}

fn symmetric_mod(f: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Irreducible factors in ℤ[x] of a primitive square-free polynomial with
/// nonzero constant term.
fn zassenhaus(f: &ZPoly) -> Result<Vec<ZPoly>> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }
    let lc = f.last().unwrap().clone();
    let fprime: ZPoly = ztrim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    );
    let mut p = 3u64;
    let factors_p = loop {
        if is_prime_u64(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = to_fp(f, p);
            let dfp = to_fp(&fprime, p);
            if fgcd(&fp, &dfp, p).len() == 1 {
                break factor_mod_p(&fmonic(&fp, p), p);
            }
        }
        p += 2;
        if p > 1 << 30 {
            return Err(Error::Unsupported(
                "no suitable prime for factorization".into(),
            ));
        }
    };
    if factors_p.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    // Coefficient bound for factors: 2^n · ‖f‖₂ · |lc|, then margin 2.
    let norm2: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << n) * norm2 * lc.abs() * 2;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = bp.clone();
    while pk <= bound {
        pk *= &bp;
        k += 1;
    }
    // Multi-factor lift by peeling one monic factor at a time.
    let mut lifted = Vec::new();
    let mut target = f.clone();
    let mut remaining = factors_p.clone();
    while remaining.len() > 1 {
        let g = remaining.remove(0);
        let t = to_fp(&target, p);
        let h = fdivrem(&t, &g, p).0;
        let (gz, hz) = hensel_lift(&target, &g, &h, p, k);
        lifted.push(gz);
        target = hz;
    }
    let lc_inv = crate::exact_numbers::mod_inverse(target.last().unwrap(), &pk)
        .expect("leading coefficient coprime to p");
    lifted.push(reduce_mod(&zscale(&target, &lc_inv), &pk));

    // Recombination over subsets of increasing size.
    let mut result = Vec::new();
    let mut rest = f.clone();
    let mut pool: Vec<ZPoly> = lifted;
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut found = false;
        let idx: Vec<usize> = (0..pool.len()).collect();
        for subset in combinations(&idx, size) {
            let lcr = rest.last().unwrap().clone();
            let mut g: ZPoly = vec![lcr.clone()];
            for &i in &subset {
                g = reduce_mod(&zmul(&g, &pool[i]), &pk);
            }
            let g = zcontent_free(&symmetric_mod(&g, &pk));
            if let Some(q) = zdiv_exact(&rest, &g) {
                result.push(g);
                rest = zcontent_free(&q);
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, x)| x)
                    .collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if rest.len() > 1 {
        result.push(rest);
    }
    Ok(result)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(fs: &[Poly]) -> Poly {
        fs.iter().fold(vec![Rational::one()], |acc, f| mul(&acc, f))
    }

    #[test]
    fn irreducible_cubic_stays_whole() {
        let f = from_ints(&[-1, -3, 0, 1]);
        assert_eq!(factor_squarefree(&f).unwrap(), vec![f]);
    }

    #[test]
    fn splits_products_of_known_factors() {
        let parts = vec![
            from_ints(&[-2, 0, 1]),
            from_ints(&[1, 1, 1]),
            from_ints(&[-1, -3, 0, 1]),
            from_ints(&[3, 1]),
        ];
        let f = product(&parts);
        let got = factor_squarefree(&f).unwrap();
        assert_eq!(got.len(), 4);
        assert_eq!(product(&got), f);
    }

    #[test]
    fn cyclotomic_and_swinnerton_dyer_style() {
        // x⁴ + 1 is irreducible over ℚ but splits mod every prime.
        let f = from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree(&f).unwrap(), vec![f]);
        // x⁶ − 1 = (x−1)(x+1)(x²+x+1)(x²−x+1).
        let g = from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
        let got = factor_squarefree(&g).unwrap();
        assert_eq!(got.len(), 4);
        assert_eq!(product(&got), g);
    }

    #[test]
    fn non_monic_input() {
        let f = mul(&from_ints(&[1, 2]), &from_ints(&[-3, 0, 2]));
        let got = factor_squarefree(&f).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(product(&got), monic(&f));
    }

    #[test]
    fn yun_multiplicities() {
        let f = product(&[
            from_ints(&[1, 1]),
            from_ints(&[1, 1]),
            from_ints(&[-2, 0, 1]),
        ]);
        let got = factor(&f).unwrap();
        assert_eq!(
            got,
            vec![(from_ints(&[1, 1]), 2), (from_ints(&[-2, 0, 1]), 1)]
        );
    }

    #[test]
    fn ext_gcd_identity() {
        let f = from_ints(&[-1, 0, 1]);
        let g = from_ints(&[2, 1]);
        let (s, t, d) = ext_gcd(&f, &g);
        assert_eq!(add(&mul(&s, &f), &mul(&t, &g)), d);
        assert_eq!(d, from_ints(&[1]));
    }

    #[test]
    fn cubic_discriminant_example() {
        use crate::exact_numbers::int;
        assert_eq!(cubic_discriminant(&int(-1), &int(-3), &int(0)), int(81));
    }
}
