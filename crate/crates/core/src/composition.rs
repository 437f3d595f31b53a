//! Quaternion and octonion algebras by Cayley–Dickson doubling.
//!
//! At each doubling step with parameter γ the product is
//! (x₁, x₂)(y₁, y₂) = (x₁y₁ + γ·ȳ₂x₂, y₂x₁ + x₂ȳ₁) and the conjugate is
//! (x̄₁, −x₂). The norm is n(x₁, x₂) = n(x₁) − γ·n(x₂), so the norm form of
//! CD(ℚ; a, b, c) is ⟨⟨a, b, c⟩⟩ with coordinate i weighted by ∏(−a_k)
//! over the set bits k of i.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::etale::QuadraticEtale;
use crate::exact_numbers::Rational;
use crate::linalg;
use crate::quadratic_forms::{self, pfister, PfisterForm};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositionAlgebra {
    params: Vec<Rational>,
}

impl CompositionAlgebra {
    pub fn new(params: Vec<Rational>) -> Result<Self> {
        if params.is_empty() || params.len() > 3 {
            return Err(Error::Invalid(format!(
                "composition algebra needs 1 to 3 parameters, got {}",
                params.len()
            )));
        }
        if params.iter().any(|p| p.is_zero()) {
            return Err(Error::Zero("zero Cayley–Dickson parameter".into()));
        }
        Ok(CompositionAlgebra { params })
    }

    pub fn from_ints(p: &[i64]) -> Result<Self> {
        Self::new(p.iter().map(|&x| crate::exact_numbers::int(x)).collect())
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn dim(&self) -> usize {
        1 << self.params.len()
    }

    pub fn one(&self) -> Vec<Rational> {
        self.basis(0)
    }

    pub fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        let mut v = self.zero();
        v[i] = Rational::one();
        v
    }

    pub fn scalar(&self, c: &Rational) -> Vec<Rational> {
        let mut v = self.zero();
        v[0] = c.clone();
        v
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        cd_mul(&self.params, x, y)
    }

    pub fn conj(&self, x: &[Rational]) -> Vec<Rational> {
        let mut v: Vec<Rational> = x.iter().map(|c| -c).collect();
        v[0] = x[0].clone();
        v
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        self.norm_form().expansion().evaluate(x)
    }

    /// N(x, y) = n(x + y) − n(x) − n(y).
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let w = self.norm_form();
        w.expansion()
            .coeffs()
            .iter()
            .zip(x.iter().zip(y))
            .map(|(a, (u, v))| a * u * v * crate::exact_numbers::int(2))
            .sum()
    }

    /// t(x) = x + x̄ as a rational.
    pub fn trace(&self, x: &[Rational]) -> Rational {
        crate::exact_numbers::int(2) * &x[0]
    }

    pub fn inverse(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.norm(x);
        if n.is_zero() {
            None
        } else {
            let inv = Rational::one() / n;
            Some(self.conj(x).iter().map(|c| c * &inv).collect())
        }
    }

    pub fn norm_form(&self) -> PfisterForm {
        pfister(&self.params).expect("parameters are nonzero")
    }

    pub fn is_division(&self) -> Result<bool> {
        Ok(!quadratic_forms::is_isotropic(
            self.norm_form().expansion(),
        )?)
    }
}

fn cd_mul(params: &[Rational], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    if params.is_empty() {
        return vec![&x[0] * &y[0]];
    }
    let (rest, g) = params.split_at(params.len() - 1);
    let g = &g[0];
    let h = x.len() / 2;
    let (x1, x2) = x.split_at(h);
    let (y1, y2) = y.split_at(h);
    let conj = |v: &[Rational]| -> Vec<Rational> {
        let mut c: Vec<Rational> = v.iter().map(|a| -a).collect();
        c[0] = v[0].clone();
        c
    };
    let a = cd_mul(rest, x1, y1);
    let b = cd_mul(rest, &conj(y2), x2);
    let c = cd_mul(rest, y2, x1);
    let d = cd_mul(rest, x2, &conj(y1));
    let mut out: Vec<Rational> = a.iter().zip(&b).map(|(p, q)| p + g * q).collect();
    out.extend(c.iter().zip(&d).map(|(p, q)| p + q));
    out
}

pub fn multiply(c: &CompositionAlgebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    c.mul(x, y)
}

pub fn norm_form(c: &CompositionAlgebra) -> PfisterForm {
    c.norm_form()
}

pub fn is_division(c: &CompositionAlgebra) -> Result<bool> {
    c.is_division()
}

/// Whether K embeds in C: for a field K = ℚ(√α), ⟨⟨α⟩⟩ divides n_C; a
/// split K embeds iff C is split.
pub fn embeds_quadratic(k: &QuadraticEtale, c: &CompositionAlgebra) -> Result<bool> {
    if k.is_split() {
        return Ok(!c.is_division()?);
    }
    quadratic_forms::pfister_divides_1fold(k.d(), &c.norm_form())
}

/// h on K^⊥ ⊂ C for K = ℚ(j), j² = α. K-values are pairs (a, b) meaning
/// a + b·j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianData {
    pub base: CompositionAlgebra,
    pub j: Vec<Rational>,
    pub alpha: Rational,
    /// ℚ-basis v₁, v₂, v₃ of K^⊥ over K.
    pub k_basis: Vec<Vec<Rational>>,
    pub gram: Vec<Vec<[Rational; 2]>>,
}

impl HermitianData {
    /// h(x, y) = N(x, y) + α⁻¹N(jx, y)·j.
    pub fn h(&self, x: &[Rational], y: &[Rational]) -> [Rational; 2] {
        let c = &self.base;
        [
            c.bilinear(x, y),
            c.bilinear(&c.mul(&self.j, x), y) / &self.alpha,
        ]
    }

    /// (a + bj)·x computed in C.
    pub fn k_action(&self, k: &[Rational; 2], x: &[Rational]) -> Vec<Rational> {
        let c = &self.base;
        let jx = c.mul(&self.j, x);
        x.iter()
            .zip(&jx)
            .map(|(u, v)| &k[0] * u + &k[1] * v)
            .collect()
    }

    pub fn k_mul(&self, a: &[Rational; 2], b: &[Rational; 2]) -> [Rational; 2] {
        [
            &a[0] * &b[0] + &self.alpha * &a[1] * &b[1],
            &a[0] * &b[1] + &a[1] * &b[0],
        ]
    }

    pub fn k_conj(&self, a: &[Rational; 2]) -> [Rational; 2] {
        [a[0].clone(), -&a[1]]
    }

    pub fn gram_det(&self) -> [Rational; 2] {
        let g = &self.gram;
        let km = |a: &[Rational; 2], b: &[Rational; 2]| self.k_mul(a, b);
        let ks = |a: [Rational; 2], b: [Rational; 2]| [&a[0] - &b[0], &a[1] - &b[1]];
        let ka = |a: [Rational; 2], b: [Rational; 2]| [&a[0] + &b[0], &a[1] + &b[1]];
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            ks(km(&g[1][a], &g[2][b]), km(&g[1][c], &g[2][d]))
        };
        let t0 = km(&g[0][0], &minor(1, 2, 2, 1));
        let t1 = km(&g[0][1], &minor(0, 2, 2, 0));
        let t2 = km(&g[0][2], &minor(0, 1, 1, 0));
        ka(ks(t0, t1), t2)
    }
}

pub fn hermitian_structure(c: &CompositionAlgebra, j: &[Rational]) -> Result<HermitianData> {
    if c.dim() != 8 {
        return Err(Error::Invalid(
            "hermitian structure needs an octonion algebra".into(),
        ));
    }
    if j.len() != 8 {
        return Err(Error::Mismatch("j is not an octonion".into()));
    }
    if !j[0].is_zero() {
        return Err(Error::Invalid("j must be a pure octonion".into()));
    }
    let j2 = c.mul(j, j);
    if j2[1..].iter().any(|x| !x.is_zero()) || j2[0].is_zero() {
        return Err(Error::Invalid("j² is not a nonzero scalar".into()));
    }
    let alpha = j2[0].clone();
    // K^⊥ = kernel of x ↦ (N(x, 1), N(x, j)).
    let rows: linalg::Matrix = [c.one(), j.to_vec()]
        .iter()
        .map(|v| (0..8).map(|i| c.bilinear(v, &c.basis(i))).collect())
        .collect();
    let perp = linalg::kernel(&rows);
    // Greedy K-basis: keep v when v and jv enlarge the ℚ-span.
    let mut k_basis: Vec<Vec<Rational>> = Vec::new();
    let mut span: linalg::Matrix = Vec::new();
    for v in perp {
        let jv = c.mul(j, &v);
        let mut trial = span.clone();
        trial.push(v.clone());
        trial.push(jv);
        if linalg::rank(&trial) == trial.len() {
            span = trial;
            k_basis.push(v);
        }
        if k_basis.len() == 3 {
            break;
        }
    }
    if k_basis.len() != 3 {
        return Err(Error::Invalid(
            "K^⊥ is not free of rank 3; choose another j".into(),
        ));
    }
    let mut data = HermitianData {
        base: c.clone(),
        j: j.to_vec(),
        alpha,
        k_basis,
        gram: Vec::new(),
    };
    data.gram = (0..3)
        .map(|a| {
            (0..3)
                .map(|b| data.h(&data.k_basis[a], &data.k_basis[b]))
                .collect()
        })
        .collect();
    let det = data.gram_det();
    let nd = &det[0] * &det[0] - &data.alpha * &det[1] * &det[1];
    if nd.is_zero() {
        return Err(Error::Invalid("hermitian Gram matrix is singular".into()));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::int;
    use crate::quadratic_forms::QuadraticForm;
    use crate::sample::{rng, small_vec};

    fn assoc(
        c: &CompositionAlgebra,
        x: &[Rational],
        y: &[Rational],
        z: &[Rational],
    ) -> Vec<Rational> {
        let l = c.mul(&c.mul(x, y), z);
        let r = c.mul(x, &c.mul(y, z));
        l.iter().zip(&r).map(|(a, b)| a - b).collect()
    }

    #[test]
    fn doubling_basics() {
        let c = CompositionAlgebra::from_ints(&[5]).unwrap();
        let i = c.basis(1);
        assert_eq!(c.mul(&i, &i), c.scalar(&int(5)));
        let o = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        let x = vec![
            int(1),
            int(2),
            int(-3),
            int(0),
            int(4),
            int(1),
            int(1),
            int(2),
        ];
        assert_eq!(o.mul(&o.one(), &x), x);
        assert_eq!(o.mul(&x, &o.one()), x);
        let a = assoc(&o, &o.basis(1), &o.basis(2), &o.basis(4));
        assert!(a.iter().any(|v| !v.is_zero()));
    }

    #[test]
    fn norm_form_matches_coordinates() {
        let o = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        assert_eq!(
            o.norm_form().expansion(),
            &QuadraticForm::from_ints(&[1; 8]).unwrap()
        );
        let mut r = rng(1);
        let c = CompositionAlgebra::from_ints(&[2, -3, 5]).unwrap();
        for _ in 0..50 {
            let x = small_vec(&mut r, 8, 5);
            let xx = c.mul(&x, &c.conj(&x));
            assert_eq!(xx, c.scalar(&c.norm(&x)));
        }
    }

    #[test]
    fn composition_and_alternative_laws() {
        let mut r = rng(2);
        for p in [[-1i64, -1, -1], [2, 3, -7], [1, -1, 5]] {
            let c = CompositionAlgebra::from_ints(&p).unwrap();
            for _ in 0..40 {
                let x = small_vec(&mut r, 8, 6);
                let y = small_vec(&mut r, 8, 6);
                assert_eq!(c.norm(&c.mul(&x, &y)), c.norm(&x) * c.norm(&y));
                assert!(assoc(&c, &x, &x, &y).iter().all(|v| v.is_zero()));
                assert!(assoc(&c, &y, &x, &x).iter().all(|v| v.is_zero()));
            }
        }
    }

    #[test]
    fn division_examples() {
        assert!(CompositionAlgebra::from_ints(&[-1, -1, -1])
            .unwrap()
            .is_division()
            .unwrap());
        assert!(!CompositionAlgebra::from_ints(&[1, -1, -1])
            .unwrap()
            .is_division()
            .unwrap());
        assert!(!CompositionAlgebra::from_ints(&[-1, -1, 7])
            .unwrap()
            .is_division()
            .unwrap());
        assert!(CompositionAlgebra::from_ints(&[0, 1]).is_err());
        assert!(CompositionAlgebra::from_ints(&[1, 1, 1, 1]).is_err());
    }

    #[test]
    fn embedding_examples() {
        let cay = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        let qi = QuadraticEtale::new(&int(-1)).unwrap();
        let q2 = QuadraticEtale::new(&int(2)).unwrap();
        assert!(embeds_quadratic(&qi, &cay).unwrap());
        assert!(!embeds_quadratic(&q2, &cay).unwrap());
        assert!(!embeds_quadratic(&QuadraticEtale::split(), &cay).unwrap());
        let split = CompositionAlgebra::from_ints(&[1, 2, 3]).unwrap();
        for a in [-1, 2, 3, -5, 7, 1] {
            assert!(embeds_quadratic(&QuadraticEtale::new(&int(a)).unwrap(), &split).unwrap());
        }
    }

    #[test]
    fn hermitian_form_properties() {
        let c = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        let j = c.basis(1);
        let h = hermitian_structure(&c, &j).unwrap();
        assert_eq!(h.k_basis.len(), 3);
        let mut r = rng(4);
        let perp: Vec<Vec<Rational>> = h.k_basis.clone();
        for _ in 0..50 {
            let coeffs = small_vec(&mut r, 6, 5);
            let coeffs2 = small_vec(&mut r, 6, 5);
            let build = |cs: &[Rational]| {
                let mut v = c.zero();
                for (t, b) in perp.iter().enumerate() {
                    let kb = h.k_action(&[cs[2 * t].clone(), cs[2 * t + 1].clone()], b);
                    for (a, bb) in v.iter_mut().zip(&kb) {
                        *a += bb;
                    }
                }
                v
            };
            let x = build(&coeffs);
            let y = build(&coeffs2);
            let hxy = h.h(&x, &y);
            assert_eq!(h.h(&y, &x), h.k_conj(&hxy));
            assert_eq!(h.h(&x, &x), [int(2) * c.norm(&x), Rational::zero()]);
            let k = [coeffs[0].clone(), coeffs[1].clone()];
            assert_eq!(h.h(&h.k_action(&k, &x), &y), h.k_mul(&k, &hxy));
        }
        assert!(hermitian_structure(&c, &c.one()).is_err());
    }
}
