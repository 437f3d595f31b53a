//! Unitary tori T = SU(E, τ), their form q_T, point arithmetic and the
//! explicit structure maps for the non-field shapes of L.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::etale::{self, CubicEtale, CubicKind, EtaleElement, QuadraticEtale, UnitaryAlgebra};
use crate::exact_numbers::{Rational, SquareClass};
use crate::quadratic_forms::QuadraticForm;
use crate::sample::{small_int, small_vec, SampleRng};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TorusShape {
    /// L = ℚ³, K split: T ≅ 𝔾ₘ².
    SplitRank2,
    /// T ≅ R_{K₀/ℚ}(𝔾ₘ): L = ℚ × K₀ with K split or K ≅ K₀.
    WeilRestriction { k0: SquareClass },
    /// L = ℚ³, K a field: T ≅ K⁽¹⁾ × K⁽¹⁾.
    NormOneSquare { k: SquareClass },
    /// L = ℚ × K₀, K a field other than K₀: T ≅ R_{K₀/ℚ}(M⁽¹⁾) for M = K₀ ⊗ K.
    RestrictedNormOne { k0: SquareClass, k: SquareClass },
    /// L a cubic field.
    General,
}

impl fmt::Display for TorusShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusShape::SplitRank2 => write!(f, "SplitRank2"),
            TorusShape::WeilRestriction { k0 } => write!(f, "WeilRestriction(Q(sqrt({k0})))"),
            TorusShape::NormOneSquare { k } => write!(f, "NormOneSquare(Q(sqrt({k})))"),
            TorusShape::RestrictedNormOne { k0, k } => {
                write!(f, "RestrictedNormOne(Q(sqrt({k0})), Q(sqrt({k})))")
            }
            TorusShape::General => write!(f, "General"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryTorus {
    ealg: UnitaryAlgebra,
}

impl UnitaryTorus {
    pub fn new(l: &CubicEtale, k: &QuadraticEtale) -> Self {
        UnitaryTorus {
            ealg: UnitaryAlgebra::new(l, k),
        }
    }

    pub fn ealg(&self) -> &UnitaryAlgebra {
        &self.ealg
    }

    pub fn l(&self) -> &CubicEtale {
        self.ealg.l()
    }

    pub fn k(&self) -> &QuadraticEtale {
        self.ealg.k()
    }

    pub fn alpha(&self) -> &SquareClass {
        self.k().alpha()
    }

    pub fn delta(&self) -> SquareClass {
        self.l().discriminant()
    }

    /// q_T = ⟨1, −αδ⟩.
    pub fn q_t(&self) -> QuadraticForm {
        let ad = self.alpha().mul(&self.delta()).to_rational();
        QuadraticForm::new(vec![Rational::one(), -ad]).expect("nonzero entries")
    }

    /// αδ is a square, i.e. Disc(L) ≅ K.
    pub fn is_distinguished(&self) -> bool {
        self.alpha().mul(&self.delta()).is_one()
    }

    pub fn classify(&self) -> TorusShape {
        let k = self.k();
        match self.l().kind() {
            CubicKind::Split if k.is_split() => TorusShape::SplitRank2,
            CubicKind::Split => TorusShape::NormOneSquare {
                k: k.alpha().clone(),
            },
            CubicKind::Mixed { alpha0 } if k.is_split() || alpha0 == k.alpha() => {
                TorusShape::WeilRestriction { k0: alpha0.clone() }
            }
            CubicKind::Mixed { alpha0 } => TorusShape::RestrictedNormOne {
                k0: alpha0.clone(),
                k: k.alpha().clone(),
            },
            CubicKind::Field { .. } => TorusShape::General,
        }
    }

    /// x·τ(x) = 1 and N_{E/K}(x) = 1.
    pub fn is_point(&self, x: &[Rational]) -> bool {
        let e = &self.ealg;
        x.len() == 6 && e.mul(x, &e.tau(x)) == e.one() && e.norm_ek(x) == e.k().one()
    }

    /// (β/τβ)³ · ν̄/ν with ν = N_{E/K}(β), a point of T for any β ∈ E*.
    pub fn point_from(&self, beta: &[Rational]) -> Option<EtaleElement> {
        let e = &self.ealg;
        let k = e.k();
        let u0 = e.div(beta, &e.tau(beta)).ok()?;
        let nu = e.norm_ek(beta);
        let c = k.div(&k.conj(&nu), &nu).ok()?;
        Some(e.mul(&e.pow(&u0, 3).ok()?, &e.from_k(&c)))
    }

    pub fn sample_point(&self, rng: &mut SampleRng, h: i64) -> EtaleElement {
        loop {
            let beta = small_vec(rng, 6, h);
            if let Some(p) = self.point_from(&beta) {
                return p;
            }
        }
    }
}

pub fn q_t(t: &UnitaryTorus) -> QuadraticForm {
    t.q_t()
}

pub fn is_distinguished(t: &UnitaryTorus) -> bool {
    t.is_distinguished()
}

pub fn classify(t: &UnitaryTorus) -> TorusShape {
    t.classify()
}

pub fn is_point(t: &UnitaryTorus, x: &[Rational]) -> bool {
    t.is_point(x)
}

/// Outcome of checking a shape's explicit point-level isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub shape: TorusShape,
    pub samples: usize,
    /// Images of sampled parameters are points of T.
    pub lands_in_points: bool,
    /// The map is multiplicative on sampled pairs.
    pub homomorphism: bool,
    /// inverse ∘ map = id on sampled parameters.
    pub left_inverse: bool,
    /// map ∘ inverse = id on sampled points of T.
    pub right_inverse: bool,
}

impl ShapeReport {
    pub fn passed(&self) -> bool {
        self.lands_in_points && self.homomorphism && self.left_inverse && self.right_inverse
    }
}

/// Parameter group of a shape with its multiplication.
enum Param {
    /// ℚ* × ℚ*.
    Rationals2,
    /// K₀* (as a 2-vector in the basis 1, √α₀).
    QuadField(QuadraticEtale),
    /// K⁽¹⁾ × K⁽¹⁾ as a 4-vector.
    NormOnePair(QuadraticEtale),
    /// M⁽¹⁾ for M = K₀ ⊗ K over K₀, as a 4-vector (p_a, q_a, p_b, q_b)
    /// meaning (p_a + q_a√α₀) + (p_b + q_b√α₀)j.
    RelNormOne,
}

struct ShapeMap<'a> {
    t: &'a UnitaryTorus,
    param: Param,
}

impl ShapeMap<'_> {
    fn e(&self) -> &UnitaryAlgebra {
        self.t.ealg()
    }

    fn mul_param(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        match &self.param {
            Param::Rationals2 => vec![&a[0] * &b[0], &a[1] * &b[1]],
            Param::QuadField(k0) => k0.mul(a, b),
            Param::NormOnePair(k) => {
                let mut v = k.mul(&a[..2], &b[..2]);
                v.extend(k.mul(&a[2..], &b[2..]));
                v
            }
            Param::RelNormOne => {
                let e = self.e();
                let x = e.mul(&self.embed_m(a), &self.embed_m(b));
                vec![x[1].clone(), x[2].clone(), x[4].clone(), x[5].clone()]
            }
        }
    }

    /// (p_a, q_a, p_b, q_b) placed in the K₀-factor of E with 1 in the ℚ-factor.
    fn embed_m(&self, m: &[Rational]) -> EtaleElement {
        let (o, z) = (Rational::one(), Rational::zero());
        vec![o, m[0].clone(), m[1].clone(), z, m[2].clone(), m[3].clone()]
    }

    fn sample_param(&self, rng: &mut SampleRng) -> Vec<Rational> {
        let nonzero = |rng: &mut SampleRng| loop {
            let q = small_int(rng, 9);
            if !q.is_zero() {
                return q;
            }
        };
        match &self.param {
            Param::Rationals2 => vec![nonzero(rng), nonzero(rng)],
            Param::QuadField(k0) => loop {
                let z = small_vec(rng, 2, 6);
                if !k0.norm(&z).is_zero() {
                    return z;
                }
            },
            Param::NormOnePair(k) => {
                let mut out = Vec::new();
                while out.len() < 4 {
                    let b = small_vec(rng, 2, 6);
                    if let Ok(q) = k.div(&b, &k.conj(&b)) {
                        out.extend(q);
                    }
                }
                out
            }
            Param::RelNormOne => loop {
                let b = small_vec(rng, 4, 5);
                let e = self.e();
                let be = self.embed_m(&b);
                if let Ok(q) = e.div(&be, &e.tau(&be)) {
                    return vec![q[1].clone(), q[2].clone(), q[4].clone(), q[5].clone()];
                }
            },
        }
    }

    fn forward(&self, p: &[Rational]) -> Result<EtaleElement> {
        let e = self.e();
        let l = e.l();
        match &self.param {
            Param::Rationals2 => {
                // ε₊-component X = (a, b, (ab)⁻¹), ε₋-component X⁻¹.
                let x = vec![
                    p[0].clone(),
                    p[1].clone(),
                    Rational::one() / (&p[0] * &p[1]),
                ];
                let xi = l
                    .inverse(&x)
                    .ok_or_else(|| Error::NotInvertible("X".into()))?;
                Ok(e.from_split_components(&x, &xi))
            }
            Param::QuadField(k0) => {
                if e.k().is_split() {
                    // z ↦ ((N(z)⁻¹, z), (N(z), z⁻¹)).
                    let n = k0.norm(p);
                    let zi = k0
                        .inverse(p)
                        .ok_or_else(|| Error::NotInvertible("z".into()))?;
                    let plus = vec![Rational::one() / &n, p[0].clone(), p[1].clone()];
                    let minus = vec![n, zi[0].clone(), zi[1].clone()];
                    Ok(e.from_split_components(&plus, &minus))
                } else {
                    // K ≅ K₀: z ↦ (z̄/z, z̄⁻¹, z) in the factors K × (K₀⊗K)ε₊ × (K₀⊗K)ε₋.
                    let k = e.k();
                    let d = k.d();
                    let w1 = k.div(&k.conj(p), p)?;
                    let y = k
                        .inverse(&k.conj(p))
                        .ok_or_else(|| Error::NotInvertible("z".into()))?;
                    let z = p;
                    let two = Rational::from_integer(2.into());
                    let pa = (&y[0] + &z[0]) / &two;
                    let qb = (&y[0] - &z[0]) / (&two * d);
                    let pb = (&y[1] + &z[1]) / &two;
                    let qa = (&y[1] - &z[1]) / &two;
                    Ok(vec![w1[0].clone(), pa, qa, w1[1].clone(), pb, qb])
                }
            }
            Param::NormOnePair(k) => {
                let x = &p[..2];
                let y = &p[2..];
                let zi = k
                    .inverse(&k.mul(x, y))
                    .ok_or_else(|| Error::NotInvertible("xy".into()))?;
                Ok(vec![
                    x[0].clone(),
                    y[0].clone(),
                    zi[0].clone(),
                    x[1].clone(),
                    y[1].clone(),
                    zi[1].clone(),
                ])
            }
            Param::RelNormOne => {
                let k = e.k();
                let n = e.norm_ek(&self.embed_m(p));
                let w1 = k
                    .inverse(&n)
                    .ok_or_else(|| Error::NotInvertible("N(w)".into()))?;
                Ok(vec![
                    w1[0].clone(),
                    p[0].clone(),
                    p[1].clone(),
                    w1[1].clone(),
                    p[2].clone(),
                    p[3].clone(),
                ])
            }
        }
    }

    fn backward(&self, w: &[Rational]) -> Vec<Rational> {
        let e = self.e();
        match &self.param {
            Param::Rationals2 => {
                let (plus, _) = e.split_components(w).expect("split K");
                vec![plus[0].clone(), plus[1].clone()]
            }
            Param::QuadField(_) => {
                if e.k().is_split() {
                    let (plus, _) = e.split_components(w).expect("split K");
                    vec![plus[1].clone(), plus[2].clone()]
                } else {
                    // ε₋-component (p_a − α q_b) + (p_b − q_a)j.
                    let d = e.k().d();
                    vec![&w[1] - d * &w[5], &w[4] - &w[2]]
                }
            }
            Param::NormOnePair(_) => vec![w[0].clone(), w[3].clone(), w[1].clone(), w[4].clone()],
            Param::RelNormOne => vec![w[1].clone(), w[2].clone(), w[4].clone(), w[5].clone()],
        }
    }
}

/// Verifies the explicit isomorphism between T and its shape model on
/// `samples` random parameters and points.
pub fn shape_isomorphism_check(
    t: &UnitaryTorus,
    rng: &mut SampleRng,
    samples: usize,
) -> Result<ShapeReport> {
    let shape = t.classify();
    let param = match &shape {
        TorusShape::SplitRank2 => Param::Rationals2,
        TorusShape::WeilRestriction { k0 } => {
            Param::QuadField(QuadraticEtale::new(&k0.to_rational())?)
        }
        TorusShape::NormOneSquare { .. } => Param::NormOnePair(t.k().clone()),
        TorusShape::RestrictedNormOne { .. } => Param::RelNormOne,
        TorusShape::General => {
            return Err(Error::Unsupported(
                "no closed-form isomorphism for a cubic field L".into(),
            ))
        }
    };
    let m = ShapeMap { t, param };
    let e = t.ealg();
    let mut report = ShapeReport {
        shape,
        samples,
        lands_in_points: true,
        homomorphism: true,
        left_inverse: true,
        right_inverse: true,
    };
    for _ in 0..samples {
        let a = m.sample_param(rng);
        let b = m.sample_param(rng);
        let fa = m.forward(&a)?;
        let fb = m.forward(&b)?;
        report.lands_in_points &= t.is_point(&fa) && t.is_point(&fb);
        report.homomorphism &= m.forward(&m.mul_param(&a, &b))? == e.mul(&fa, &fb);
        report.left_inverse &= m.backward(&fa) == a;
        let w = t.sample_point(rng, 4);
        report.right_inverse &= m.forward(&m.backward(&w))? == w;
    }
    Ok(report)
}

/// Elements of L⁽¹⁾ of the form y³/N(y), used for sampling.
pub fn sample_norm_one_l(l: &CubicEtale, rng: &mut SampleRng) -> EtaleElement {
    loop {
        let y = small_vec(rng, 3, 5);
        let n = l.norm(&y);
        if !n.is_zero() {
            let y3 = l.algebra().pow(&y, 3);
            return etale::scale(&y3, &(Rational::one() / n));
        }
    }
}
