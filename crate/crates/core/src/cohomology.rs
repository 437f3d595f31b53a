//! H¹(ℚ, T) for unitary tori as admissible pairs (s, z) modulo
//! (s, z) ~ (b·s·τ(b), N_{E/K}(b)·z), with class arithmetic, triviality
//! decisions and the split decomposition for cubic L.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::etale::{self, CubicKind, EtaleElement, UnitaryAlgebra};
use crate::exact_numbers::{int, rational_sqrt, Rational, SquareClass};
use crate::norms::{
    cubic_norm_search, is_norm_from_quadratic, quad_over_quad_norm, search_norm_el,
    solve_quadratic_norm,
};
use crate::quadratic_forms::QuadraticForm;
use crate::sample::{small_vec, SampleRng};
use crate::tori::{TorusShape, UnitaryTorus};

/// Default height bound for witness searches.
pub const DEFAULT_HEIGHT_BOUND: i64 = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Search limits for witness construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Coordinate bound for the cubic-field norm search.
    pub height: i64,
    /// Coordinate bound for searches over E and over L ⊗ K.
    pub e_box: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            height: DEFAULT_HEIGHT_BOUND,
            e_box: 2,
        }
    }
}

impl SearchBounds {
    pub fn with_height(height: i64) -> Self {
        SearchBounds {
            height,
            ..Default::default()
        }
    }
}

/// A decision with its certificate: a witness w ∈ E* with s = w·τ(w) and
/// z = N_{E/K}(w) for true, an obstructing place for false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub witness: Option<EtaleElement>,
    pub obstruction: Option<String>,
    pub method: &'static str,
}

impl Decision {
    fn yes(witness: Option<EtaleElement>, method: &'static str) -> Self {
        Decision {
            verdict: Verdict::True,
            witness,
            obstruction: None,
            method,
        }
    }

    fn no(obstruction: String, method: &'static str) -> Self {
        Decision {
            verdict: Verdict::False,
            witness: None,
            obstruction: Some(obstruction),
            method,
        }
    }

    fn unknown(method: &'static str) -> Self {
        Decision {
            verdict: Verdict::Unknown,
            witness: None,
            obstruction: None,
            method,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocyclePair {
    pub s: EtaleElement,
    pub z: EtaleElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    torus: UnitaryTorus,
    pair: CocyclePair,
}

/// Validates N_{L/ℚ}(s) = z·z̄ with s ∈ L*, z ∈ K*.
pub fn make_class(t: &UnitaryTorus, s: &[Rational], z: &[Rational]) -> Result<CohomologyClass> {
    if s.len() != 3 || z.len() != 2 {
        return Err(Error::Mismatch(format!(
            "expected s with 3 and z with 2 coordinates, got {} and {}",
            s.len(),
            z.len()
        )));
    }
    let ns = t.l().norm(s);
    let nz = t.k().norm(z);
    if ns.is_zero() || nz.is_zero() {
        return Err(Error::Admissibility("s and z must be invertible".into()));
    }
    if ns != nz {
        return Err(Error::Admissibility(format!(
            "N_L(s) = {} but z·conj(z) = {}",
            crate::exact_numbers::fmt_rational(&ns),
            crate::exact_numbers::fmt_rational(&nz)
        )));
    }
    Ok(CohomologyClass {
        torus: t.clone(),
        pair: CocyclePair {
            s: s.to_vec(),
            z: z.to_vec(),
        },
    })
}

impl CohomologyClass {
    pub fn torus(&self) -> &UnitaryTorus {
        &self.torus
    }

    pub fn s(&self) -> &[Rational] {
        &self.pair.s
    }

    pub fn z(&self) -> &[Rational] {
        &self.pair.z
    }

    pub fn pair(&self) -> &CocyclePair {
        &self.pair
    }

    pub fn trivial(t: &UnitaryTorus) -> Self {
        CohomologyClass {
            torus: t.clone(),
            pair: CocyclePair {
                s: t.l().one(),
                z: t.k().one(),
            },
        }
    }

    fn check_parent(&self, other: &CohomologyClass) -> Result<()> {
        if self.torus != other.torus {
            return Err(Error::Mismatch("classes of different tori".into()));
        }
        Ok(())
    }

    /// [(s, z)][(s′, z′)] = [(ss′, zz′)].
    pub fn multiply(&self, other: &CohomologyClass) -> Result<CohomologyClass> {
        self.check_parent(other)?;
        Ok(CohomologyClass {
            torus: self.torus.clone(),
            pair: CocyclePair {
                s: self.torus.l().mul(&self.pair.s, &other.pair.s),
                z: self.torus.k().mul(&self.pair.z, &other.pair.z),
            },
        })
    }

    pub fn inverse(&self) -> CohomologyClass {
        let l = self.torus.l();
        let k = self.torus.k();
        CohomologyClass {
            torus: self.torus.clone(),
            pair: CocyclePair {
                s: l.inverse(&self.pair.s).expect("s invertible"),
                z: k.inverse(&self.pair.z).expect("z invertible"),
            },
        }
    }

    /// The representative (b·s·τ(b), N_{E/K}(b)·z).
    pub fn twist(&self, b: &[Rational]) -> Result<CohomologyClass> {
        let e = self.torus.ealg();
        if e.inverse(b).is_none() {
            return Err(Error::NotInvertible("twisting element".into()));
        }
        let s = e.mul(&e.mul(b, &e.from_l(&self.pair.s)), &e.tau(b));
        let s = e.to_l(&s).expect("b·s·τ(b) is τ-fixed");
        let z = self.torus.k().mul(&e.norm_ek(b), &self.pair.z);
        Ok(CohomologyClass {
            torus: self.torus.clone(),
            pair: CocyclePair { s, z },
        })
    }

    /// Whether `b` witnesses `self` ~ `other`.
    pub fn equivalent_via(&self, other: &CohomologyClass, b: &[Rational]) -> bool {
        self.torus == other.torus && self.twist(b).is_ok_and(|t| t.pair == other.pair)
    }

    /// Whether w witnesses triviality: s = w·τ(w), z = N_{E/K}(w).
    pub fn check_witness(&self, w: &[Rational]) -> bool {
        let e = self.torus.ealg();
        w.len() == 6 && e.norm_el(w) == self.pair.s && e.norm_ek(w) == self.pair.z
    }

    pub fn is_trivial(&self, bounds: &SearchBounds) -> Result<Decision> {
        let d = decide_trivial(self, bounds)?;
        if let Some(w) = &d.witness {
            debug_assert!(self.check_witness(w));
            if !self.check_witness(w) {
                return Err(Error::Invalid("internal witness check failed".into()));
            }
        }
        Ok(d)
    }

    /// ([(1, μ̄/μ)], u) for the class [(u, μ)].
    pub fn decompose(&self) -> Decomposition {
        let k = self.torus.k();
        let mu = &self.pair.z;
        let kp = k.div(&k.conj(mu), mu).expect("μ invertible");
        Decomposition {
            k_part: CohomologyClass {
                torus: self.torus.clone(),
                pair: CocyclePair {
                    s: self.torus.l().one(),
                    z: kp,
                },
            },
            s_part: self.pair.s.clone(),
        }
    }
}

pub fn multiply(a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    a.multiply(b)
}

pub fn is_trivial(c: &CohomologyClass, bounds: &SearchBounds) -> Result<Decision> {
    c.is_trivial(bounds)
}

pub fn decompose(c: &CohomologyClass) -> Decomposition {
    c.decompose()
}

/// Image of a class under H¹ → K₀⁽¹⁾ × S/N_{E/L}(E*).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// [(1, μ̄/μ)].
    pub k_part: CohomologyClass,
    /// Representative u of the coset in S/N_{E/L}(E*).
    pub s_part: EtaleElement,
}

impl Decomposition {
    pub fn multiply(&self, other: &Decomposition) -> Result<Decomposition> {
        let l = self.k_part.torus.l();
        Ok(Decomposition {
            k_part: self.k_part.multiply(&other.k_part)?,
            s_part: l.mul(&self.s_part, &other.s_part),
        })
    }
}

/// ψ([u]) = [(u, μ²/μ̄)] for any μ with N_{L/ℚ}(u) = μμ̄.
pub fn psi(t: &UnitaryTorus, u: &[Rational], mu: &[Rational]) -> Result<CohomologyClass> {
    let k = t.k();
    let z = k.div(&k.mul(mu, mu), &k.conj(mu))?;
    make_class(t, u, &z)
}

/// t([(u, μ)]) = [(1, μ⁻¹μ̄)].
pub fn t_map(c: &CohomologyClass) -> CohomologyClass {
    c.decompose().k_part
}

/// For μμ̄ = 1, checks t(q([(1, μ)])) = [(1, μ)] through the explicit
/// witness b = μ, which carries (1, μ̄/μ) to (1, μ).
pub fn t_q_identity_holds(t: &UnitaryTorus, mu: &[Rational]) -> Result<bool> {
    let k = t.k();
    if k.norm(mu) != Rational::one() {
        return Err(Error::Invalid("μ must have norm 1".into()));
    }
    let c = make_class(t, &t.l().one(), mu)?;
    let image = t_map(&c);
    let b = t.ealg().from_k(mu);
    Ok(image.equivalent_via(&c, &b))
}

/// A random admissible pair (N_{E/L}(b)·N(m), N_{E/K}(b)·N(m)·m) for small
/// random b ∈ E*, m ∈ K*.
pub fn sample_admissible(t: &UnitaryTorus, rng: &mut SampleRng, h: i64) -> CocyclePair {
    let e = t.ealg();
    let k = t.k();
    loop {
        let b = small_vec(rng, 6, h);
        let m = small_vec(rng, 2, h);
        let nm = k.norm(&m);
        if nm.is_zero() || e.inverse(&b).is_none() {
            continue;
        }
        let s = e.norm_el(&b);
        return CocyclePair {
            s: etale::scale(&s, &nm),
            z: k.mul(&e.norm_ek(&b), &etale::scale(&m, &nm)),
        };
    }
}

pub fn sample_class(t: &UnitaryTorus, rng: &mut SampleRng, h: i64) -> CohomologyClass {
    let p = sample_admissible(t, rng, h);
    make_class(t, &p.s, &p.z).expect("sampled pair is admissible")
}

/// Symbolic description of H¹(ℚ, T) by shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1Description {
    /// H¹ = 0 (T split or a Weil restriction of 𝔾ₘ).
    Trivial { shape: TorusShape },
    /// (ℚ*/N_K(K*))², coordinates s₁, s₂ of [(s, z)].
    SplitL3 { k: SquareClass },
    /// K₀*/N_{K⊗K₀/K₀}, coordinate σ of s = (r, σ).
    MixedL { k0: SquareClass, k: SquareClass },
    /// K⁽¹⁾/N_{E/K}(U(E,τ)) × S/N_{E/L}(E*); equivalently
    /// L₀⁽¹⁾ × M/N_{E/K}(E*) with M = {μ : μμ̄ ∈ N_L(L*)}.
    GeneralOdd,
}

impl H1Description {
    pub fn summary(&self) -> String {
        match self {
            H1Description::Trivial { shape } => format!("H1 = 0 ({shape})"),
            H1Description::SplitL3 { k } => format!("(Q*/N(Q(sqrt({k}))*))^2"),
            H1Description::MixedL { k0, k } => {
                format!("Q(sqrt({k0}))*/N(Q(sqrt({k0}),sqrt({k}))*)")
            }
            H1Description::GeneralOdd => "K^(1)/N_E/K(U(E,tau)) x S/N_E/L(E*)".to_string(),
        }
    }

    pub fn is_trivial_group(&self) -> bool {
        matches!(self, H1Description::Trivial { .. })
    }
}

pub fn h1_description(t: &UnitaryTorus) -> H1Description {
    match t.classify() {
        s @ (TorusShape::SplitRank2 | TorusShape::WeilRestriction { .. }) => {
            H1Description::Trivial { shape: s }
        }
        TorusShape::NormOneSquare { k } => H1Description::SplitL3 { k },
        TorusShape::RestrictedNormOne { k0, k } => H1Description::MixedL { k0, k },
        TorusShape::General => H1Description::GeneralOdd,
    }
}

fn obstruction_place(d: &Rational, s: &Rational) -> Result<String> {
    let f = QuadraticForm::new(vec![Rational::one(), -d, -s])?;
    Ok(match f.anisotropic_place()? {
        Some(p) => format!("p={p}"),
        None => "none".into(),
    })
}

/// Square root in K₀ = ℚ(√d0) of A + B√d0, if it exists.
fn quadratic_field_sqrt(d0: &Rational, x: &[Rational]) -> Option<EtaleElement> {
    let (a, b) = (&x[0], &x[1]);
    if b.is_zero() {
        if let Some(r) = rational_sqrt(a) {
            return Some(vec![r, Rational::zero()]);
        }
        // √(a) = c√d0 with c² = a/d0.
        return rational_sqrt(&(a / d0)).map(|c| vec![Rational::zero(), c]);
    }
    let n = rational_sqrt(&(a * a - d0 * b * b))?;
    let two = int(2);
    for s in [n.clone(), -n] {
        if let Some(p) = rational_sqrt(&((a + &s) / &two)) {
            if p.is_zero() {
                continue;
            }
            let q = b / (&two * &p);
            if &p * &p + d0 * &q * &q == *a {
                return Some(vec![p, q]);
            }
        }
    }
    None
}

/// w ∈ E with N_{E/L}(w) = s for L = ℚ × K₀, searched through
/// σt² + α·y² = x² in K₀.
fn mixed_norm_witness(e: &UnitaryAlgebra, s: &[Rational], h: i64) -> Option<EtaleElement> {
    let CubicKind::Mixed { alpha0 } = e.l().kind() else {
        return None;
    };
    let d0 = alpha0.to_rational();
    let d = e.k().d().clone();
    let [r0, r1] = solve_quadratic_norm(&d, &s[0], 200)?;
    let sigma = [s[1].clone(), s[2].clone()];
    for t in 1..=3i64 {
        let t2 = int(t * t);
        for y0 in -h..=h {
            for y1 in -h..=h {
                let (y0, y1) = (int(y0), int(y1));
                // y² = (y0² + d0 y1²) + 2 y0 y1 √d0
                let c0 = &sigma[0] * &t2 + &d * (&y0 * &y0 + &d0 * &y1 * &y1);
                let c1 = &sigma[1] * &t2 + &d * int(2) * &y0 * &y1;
                if let Some(x) = quadratic_field_sqrt(&d0, &[c0, c1]) {
                    let ti = Rational::one() / int(t);
                    let w = vec![
                        r0.clone(),
                        &x[0] * &ti,
                        &x[1] * &ti,
                        r1.clone(),
                        &y0 * &ti,
                        &y1 * &ti,
                    ];
                    if e.norm_el(&w) == s {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Given w₀ with N_{E/L}(w₀) = s, adjusts by ρ ∈ U(E, τ) so that
/// N_{E/K}(w₀ρ) = z. Needs ν ∈ N_{E/K}(E*) with ν/ν̄ = z/N_{E/K}(w₀).
fn fix_k_part(e: &UnitaryAlgebra, w0: &[Rational], z: &[Rational], h: i64) -> Option<EtaleElement> {
    let k = e.k();
    let lambda = k.div(z, &e.norm_ek(w0)).ok()?;
    if lambda == k.one() {
        return Some(w0.to_vec());
    }
    // λ = ν₀/ν̄₀ (Hilbert 90); then any ν ∈ ν₀·ℚ* works.
    let minus_one = k.scalar(&-Rational::one());
    let nu0 = if lambda == minus_one {
        vec![Rational::zero(), Rational::one()]
    } else {
        etale::add(&k.one(), &lambda)
    };
    let nu0_inv = k.inverse(&nu0)?;
    let mut beta = vec![0i64; 6];
    let side = (2 * h + 1) as usize;
    for idx in 0..side.pow(6) {
        let mut r = idx;
        for b in beta.iter_mut() {
            *b = (r % side) as i64 - h;
            r /= side;
        }
        let bq: Vec<Rational> = beta.iter().map(|&x| int(x)).collect();
        let nu = e.norm_ek(&bq);
        if nu.iter().all(|c| c.is_zero()) {
            continue;
        }
        let ratio = k.mul(&nu, &nu0_inv);
        if ratio[1].is_zero() {
            let rho = e.div(&bq, &e.tau(&bq)).ok()?;
            return Some(e.mul(w0, &rho));
        }
    }
    None
}

fn decide_trivial(c: &CohomologyClass, bounds: &SearchBounds) -> Result<Decision> {
    let t = &c.torus;
    let e = t.ealg();
    let l = t.l();
    let k = t.k();
    let (s, z) = (&c.pair.s, &c.pair.z);
    if k.is_split() {
        // E ≅ L × L with τ the switch: trivial iff z₊ ∈ N_L(L*).
        let (zp, _) = k.split_coords(z).expect("split K");
        let x = match l.kind() {
            CubicKind::Split => Some(vec![zp, Rational::one(), Rational::one()]),
            CubicKind::Mixed { .. } => Some(vec![zp, Rational::one(), Rational::zero()]),
            CubicKind::Field { .. } => cubic_norm_search(l, &zp, bounds.height),
        };
        return Ok(match x {
            Some(x) => {
                let y = l.div(s, &x)?;
                Decision::yes(
                    Some(e.from_split_components(&x, &y)),
                    "split K: norm from L",
                )
            }
            None => Decision::unknown("split K: bounded cubic norm search exhausted"),
        });
    }
    let d = k.d().clone();
    match l.kind() {
        CubicKind::Split => {
            for (i, si) in s.iter().enumerate() {
                if !is_norm_from_quadratic(&d, si)? {
                    let place = obstruction_place(&d, si)?;
                    return Ok(Decision::no(
                        format!("s{} not a norm from K at {place}", i + 1),
                        "L split: Hilbert symbols",
                    ));
                }
            }
            let mut ws = Vec::new();
            for si in s {
                match solve_quadratic_norm(&d, si, 1000) {
                    Some(w) => ws.push(w.to_vec()),
                    None => return Ok(Decision::yes(None, "L split: Hilbert symbols")),
                }
            }
            let prod = k.mul(&k.mul(&ws[0], &ws[1]), &ws[2]);
            let lambda = k.div(z, &prod)?;
            ws[2] = k.mul(&ws[2], &lambda);
            let w = vec![
                ws[0][0].clone(),
                ws[1][0].clone(),
                ws[2][0].clone(),
                ws[0][1].clone(),
                ws[1][1].clone(),
                ws[2][1].clone(),
            ];
            Ok(Decision::yes(Some(w), "L split: Hilbert symbols"))
        }
        CubicKind::Mixed { alpha0 } => {
            let sigma = [s[1].clone(), s[2].clone()];
            let w2 = if alpha0 == k.alpha() {
                // M = K₀ ⊗ K splits: x = (σ+1)/2, y = (σ−1)/(2√α₀).
                let two = int(2);
                let x = [(&sigma[0] + Rational::one()) / &two, &sigma[1] / &two];
                // (σ − 1)/(2√α₀) = (σ₁ + (σ₀ − 1)/α₀ · √α₀)/2 … in basis (1, √α₀):
                let y = [
                    &sigma[1] / &two,
                    (&sigma[0] - Rational::one()) / (&two * &d),
                ];
                Some([x[0].clone(), x[1].clone(), y[0].clone(), y[1].clone()])
            } else {
                let (ok, obs) = quad_over_quad_norm(alpha0, &d, &sigma)?;
                if !ok {
                    return Ok(Decision::no(
                        format!(
                            "sigma not a norm from K0(sqrt(alpha)) at {}",
                            obs.unwrap_or_default()
                        ),
                        "L mixed: local symbols over K0",
                    ));
                }
                mixed_norm_witness(e, s, bounds.e_box + 2)
                    .map(|w| [w[1].clone(), w[2].clone(), w[4].clone(), w[5].clone()])
            };
            let Some(w2) = w2 else {
                return Ok(Decision::yes(None, "L mixed: local symbols over K0"));
            };
            let m = vec![
                Rational::one(),
                w2[0].clone(),
                w2[1].clone(),
                Rational::zero(),
                w2[2].clone(),
                w2[3].clone(),
            ];
            let w1 = k.div(z, &e.norm_ek(&m))?;
            let w = vec![
                w1[0].clone(),
                w2[0].clone(),
                w2[1].clone(),
                w1[1].clone(),
                w2[2].clone(),
                w2[3].clone(),
            ];
            let method = if alpha0 == k.alpha() {
                "L mixed: K0 (x) K split"
            } else {
                "L mixed: local symbols over K0"
            };
            Ok(Decision::yes(Some(w), method))
        }
        CubicKind::Field { .. } => {
            let Some(w0) = search_norm_el(e, s, bounds.e_box) else {
                return Ok(Decision::unknown(
                    "L field: bounded search for N_E/L exhausted",
                ));
            };
            match fix_k_part(e, &w0, z, bounds.e_box.min(2)) {
                Some(w) => Ok(Decision::yes(Some(w), "L field: bounded witness search")),
                None => Ok(Decision::unknown(
                    "L field: bounded search for N_E/K exhausted",
                )),
            }
        }
    }
}

/// Membership u ∈ N_{E/L}(E*), the coset test of L*/N_{E/L}(E*) which
/// describes H¹ of the full unitary group U(E, τ).
pub fn h1_full_unitary(
    t: &UnitaryTorus,
    u: &[Rational],
    bounds: &SearchBounds,
) -> Result<Decision> {
    let e = t.ealg();
    let l = t.l();
    let k = t.k();
    if u.len() != 3 || l.norm(u).is_zero() {
        return Err(Error::Invalid(
            "u must be an invertible element of L".into(),
        ));
    }
    if k.is_split() {
        return Ok(Decision::yes(
            Some(e.from_split_components(u, &l.one())),
            "split K",
        ));
    }
    let d = k.d().clone();
    match l.kind() {
        CubicKind::Split => {
            let mut ws = Vec::new();
            for (i, ui) in u.iter().enumerate() {
                if !is_norm_from_quadratic(&d, ui)? {
                    let place = obstruction_place(&d, ui)?;
                    return Ok(Decision::no(
                        format!("u{} not a norm from K at {place}", i + 1),
                        "L split: Hilbert symbols",
                    ));
                }
                ws.push(solve_quadratic_norm(&d, ui, 1000));
            }
            let w = if ws.iter().all(|w| w.is_some()) {
                let ws: Vec<[Rational; 2]> = ws.into_iter().map(|w| w.unwrap()).collect();
                Some(vec![
                    ws[0][0].clone(),
                    ws[1][0].clone(),
                    ws[2][0].clone(),
                    ws[0][1].clone(),
                    ws[1][1].clone(),
                    ws[2][1].clone(),
                ])
            } else {
                None
            };
            Ok(Decision::yes(w, "L split: Hilbert symbols"))
        }
        CubicKind::Mixed { alpha0 } => {
            if !is_norm_from_quadratic(&d, &u[0])? {
                let place = obstruction_place(&d, &u[0])?;
                return Ok(Decision::no(
                    format!("u1 not a norm from K at {place}"),
                    "L mixed: Hilbert symbols",
                ));
            }
            let sigma = [u[1].clone(), u[2].clone()];
            let (ok, obs) = quad_over_quad_norm(alpha0, &d, &sigma)?;
            if !ok {
                return Ok(Decision::no(
                    format!(
                        "u2 not a norm from K0(sqrt(alpha)) at {}",
                        obs.unwrap_or_default()
                    ),
                    "L mixed: local symbols over K0",
                ));
            }
            Ok(Decision::yes(
                mixed_norm_witness(e, u, bounds.e_box + 2),
                "L mixed: local symbols over K0",
            ))
        }
        CubicKind::Field { .. } => Ok(match search_norm_el(e, u, bounds.e_box) {
            Some(w) => Decision::yes(Some(w), "L field: bounded witness search"),
            None => Decision::unknown("L field: bounded search exhausted"),
        }),
    }
}
