//! Quadratic and cubic étale ℚ-algebras in structure-constant form, and the
//! unitary algebra (E, τ) = (L ⊗ K, 1 ⊗ ¯).

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_numbers::{int, rational_sqrt, Rational, SquareClass};
use crate::linalg::{self, Matrix};
use crate::poly::{self, Poly};

/// Coordinates of an element in the fixed basis of its parent algebra.
pub type EtaleElement = Vec<Rational>;

/// Commutative associative unital ℚ-algebra given by structure constants:
/// `table[i][j]` holds the coordinates of eᵢ·eⱼ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    table: Vec<Vec<EtaleElement>>,
    one: EtaleElement,
}

impl Algebra {
    pub fn new(table: Vec<Vec<EtaleElement>>, one: EtaleElement) -> Result<Self> {
        let n = one.len();
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::Invalid(
                "structure constants have wrong shape".into(),
            ));
        }
        Ok(Algebra { table, one })
    }

    pub fn dim(&self) -> usize {
        self.one.len()
    }

    pub fn one(&self) -> EtaleElement {
        self.one.clone()
    }

    pub fn zero(&self) -> EtaleElement {
        vec![Rational::zero(); self.dim()]
    }

    pub fn basis(&self, i: usize) -> EtaleElement {
        let mut v = self.zero();
        v[i] = Rational::one();
        v
    }

    pub fn check(&self, x: &[Rational]) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "element of length {} in an algebra of dimension {}",
                x.len(),
                self.dim()
            )))
        }
    }

    pub fn scalar(&self, c: &Rational) -> EtaleElement {
        scale(&self.one, c)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> EtaleElement {
        let n = self.dim();
        let mut out = self.zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[Rational], e: u32) -> EtaleElement {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, x);
        }
        r
    }

    /// Matrix of y ↦ x·y; column j is x·eⱼ.
    pub fn mult_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<EtaleElement> = (0..n).map(|j| self.mul(x, &self.basis(j))).collect();
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        linalg::det(&self.mult_matrix(x))
    }

    pub fn trace(&self, x: &[Rational]) -> Rational {
        linalg::trace(&self.mult_matrix(x))
    }

    pub fn inverse(&self, x: &[Rational]) -> Option<EtaleElement> {
        linalg::solve(&self.mult_matrix(x), &self.one)
    }

    pub fn div(&self, x: &[Rational], y: &[Rational]) -> Result<EtaleElement> {
        let yi = self
            .inverse(y)
            .ok_or_else(|| Error::NotInvertible("division by a zero divisor".into()))?;
        Ok(self.mul(x, &yi))
    }

    /// Characteristic polynomial of multiplication by x (Faddeev–LeVerrier).
    pub fn char_poly(&self, x: &[Rational]) -> Poly {
        let a = self.mult_matrix(x);
        let n = self.dim();
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        let mut m = linalg::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I
            let mut mk = linalg::matmul(&a, &m);
            for (i, row) in mk.iter_mut().enumerate() {
                row[i] += &c[n - k + 1];
            }
            let am = linalg::matmul(&a, &mk);
            c[n - k] = -linalg::trace(&am) / int(k as i64);
            m = mk;
        }
        c
    }

    /// f(x) by Horner's rule.
    pub fn eval_poly(&self, f: &Poly, x: &[Rational]) -> EtaleElement {
        let mut acc = self.zero();
        for c in f.iter().rev() {
            acc = self.mul(&acc, x);
            acc = add(&acc, &self.scalar(c));
        }
        acc
    }

    /// Gram matrix of (x, y) ↦ T(xy) in the basis.
    pub fn trace_gram(&self) -> Matrix {
        let n = self.dim();
        let t: Vec<Rational> = (0..n).map(|i| self.trace(&self.basis(i))).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.table[i][j].iter().zip(&t).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect()
    }

    /// A ⊗ B with basis eᵢ ⊗ fⱼ at index i·dim B + j.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim(), other.dim());
        let mut table = vec![vec![vec![Rational::zero(); n * m]; n * m]; n * m];
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    for l in 0..m {
                        let a = &self.table[i][k];
                        let b = &other.table[j][l];
                        let dst = &mut table[i * m + j][k * m + l];
                        for (p, ap) in a.iter().enumerate() {
                            if ap.is_zero() {
                                continue;
                            }
                            for (q, bq) in b.iter().enumerate() {
                                if !bq.is_zero() {
                                    dst[p * m + q] += ap * bq;
                                }
                            }
                        }
                    }
                }
            }
        }
        let one = self
            .one
            .iter()
            .flat_map(|a| other.one.iter().map(move |b| a * b))
            .collect();
        Algebra { table, one }
    }

    /// Complete set of orthogonal primitive idempotents.
    ///
    /// Uses a primitive element x (square-free characteristic polynomial χ),
    /// factors χ over ℚ and lifts the factorization by the Chinese remainder
    /// theorem: eᵢ = Eᵢ(x) with Eᵢ ≡ 1 mod fᵢ and ≡ 0 mod χ/fᵢ.
    pub fn idempotents(&self) -> Result<Vec<EtaleElement>> {
        let n = self.dim();
        if n > 9 {
            return Err(Error::Unsupported(format!(
                "idempotent search in dimension {n}"
            )));
        }
        let (x, chi) = self.primitive_element()?;
        let factors = poly::factor_squarefree(&chi)?;
        let mut out = Vec::with_capacity(factors.len());
        for f in &factors {
            let g = poly::divrem(&chi, f).0;
            let (s, _, _) = poly::ext_gcd(&g, f);
            let e_poly = poly::divrem(&poly::mul(&s, &g), &chi).1;
            out.push(self.eval_poly(&e_poly, &x));
        }
        Ok(out)
    }

    fn primitive_element(&self) -> Result<(EtaleElement, Poly)> {
        let n = self.dim();
        for c in 1..=64i64 {
            let x: EtaleElement = (0..n).map(|i| int(c).pow(i as i32)).collect();
            let chi = self.char_poly(&x);
            if poly::is_squarefree(&chi) {
                return Ok((x, chi));
            }
        }
        Err(Error::Invalid(
            "no primitive element found; algebra is not étale".into(),
        ))
    }
}

pub fn add(x: &[Rational], y: &[Rational]) -> EtaleElement {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Rational], y: &[Rational]) -> EtaleElement {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn neg(x: &[Rational]) -> EtaleElement {
    x.iter().map(|a| -a).collect()
}

pub fn scale(x: &[Rational], c: &Rational) -> EtaleElement {
    x.iter().map(|a| a * c).collect()
}

pub fn is_zero(x: &[Rational]) -> bool {
    x.iter().all(|a| a.is_zero())
}

/// K = ℚ[j]/(j² − d), d the square-free representative of α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticEtale {
    alpha: SquareClass,
    d: Rational,
    alg: Algebra,
}

impl QuadraticEtale {
    pub fn new(alpha: &Rational) -> Result<Self> {
        let alpha = SquareClass::of(alpha)?;
        let d = alpha.to_rational();
        let (o, z) = (Rational::one(), Rational::zero());
        let table = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![d.clone(), z.clone()]],
        ];
        let alg = Algebra::new(table, vec![o, z])?;
        Ok(QuadraticEtale { alpha, d, alg })
    }

    pub fn split() -> Self {
        Self::new(&Rational::one()).expect("1 is nonzero")
    }

    pub fn alpha(&self) -> &SquareClass {
        &self.alpha
    }

    /// j² in the basis (1, j).
    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_split(&self) -> bool {
        self.alpha.is_one()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn elt(&self, a: Rational, b: Rational) -> EtaleElement {
        vec![a, b]
    }

    pub fn conj(&self, x: &[Rational]) -> EtaleElement {
        vec![x[0].clone(), -&x[1]]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> EtaleElement {
        vec![
            &x[0] * &y[0] + &self.d * &x[1] * &y[1],
            &x[0] * &y[1] + &x[1] * &y[0],
        ]
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        &x[0] * &x[0] - &self.d * &x[1] * &x[1]
    }

    pub fn trace(&self, x: &[Rational]) -> Rational {
        int(2) * &x[0]
    }

    pub fn inverse(&self, x: &[Rational]) -> Option<EtaleElement> {
        let n = self.norm(x);
        if n.is_zero() {
            None
        } else {
            Some(scale(&self.conj(x), &(Rational::one() / n)))
        }
    }

    pub fn div(&self, x: &[Rational], y: &[Rational]) -> Result<EtaleElement> {
        let yi = self
            .inverse(y)
            .ok_or_else(|| Error::NotInvertible("division by a zero divisor of K".into()))?;
        Ok(self.mul(x, &yi))
    }

    pub fn pow(&self, x: &[Rational], e: i32) -> Result<EtaleElement> {
        let base = if e < 0 {
            self.inverse(x)
                .ok_or_else(|| Error::NotInvertible("negative power of a zero divisor".into()))?
        } else {
            x.to_vec()
        };
        let mut r = self.one();
        for _ in 0..e.unsigned_abs() {
            r = self.mul(&r, &base);
        }
        Ok(r)
    }

    pub fn one(&self) -> EtaleElement {
        vec![Rational::one(), Rational::zero()]
    }

    pub fn scalar(&self, c: &Rational) -> EtaleElement {
        vec![c.clone(), Rational::zero()]
    }

    /// For split K, the coordinates (x₊, x₋) of x = a + bj in ℚ × ℚ via
    /// the idempotents (1 ± j)/2.
    pub fn split_coords(&self, x: &[Rational]) -> Option<(Rational, Rational)> {
        self.is_split().then(|| (&x[0] + &x[1], &x[0] - &x[1]))
    }

    /// Inverse of `split_coords`.
    pub fn from_split_coords(&self, p: &Rational, m: &Rational) -> EtaleElement {
        let h = Rational::new(1.into(), 2.into());
        vec![(p + m) * &h, (p - m) * &h]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubicKind {
    /// ℚ × ℚ × ℚ with coordinates per factor.
    Split,
    /// ℚ × K₀, K₀ = ℚ(√α₀) a field; (a, b, c) means (a, b + c√α₀).
    Mixed { alpha0: SquareClass },
    /// ℚ[θ]/(θ³ + c₂θ² + c₁θ + c₀), basis 1, θ, θ².
    Field { c: [i64; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicEtale {
    kind: CubicKind,
    alg: Algebra,
}

impl CubicEtale {
    pub fn split() -> Self {
        let mut table = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for (i, row) in table.iter_mut().enumerate() {
            row[i][i] = Rational::one();
        }
        CubicEtale {
            kind: CubicKind::Split,
            alg: Algebra::new(table, vec![Rational::one(); 3]).expect("shape"),
        }
    }

    pub fn mixed(alpha0: &Rational) -> Result<Self> {
        let a0 = SquareClass::of(alpha0)?;
        if a0.is_one() {
            return Err(Error::Invalid(
                "mixed cubic algebra needs a non-square alpha0".into(),
            ));
        }
        let d = a0.to_rational();
        let (o, z) = (Rational::one(), Rational::zero());
        let e = |a: &Rational, b: &Rational, c: &Rational| vec![a.clone(), b.clone(), c.clone()];
        let table = vec![
            vec![e(&o, &z, &z), e(&z, &z, &z), e(&z, &z, &z)],
            vec![e(&z, &z, &z), e(&z, &o, &z), e(&z, &z, &o)],
            vec![e(&z, &z, &z), e(&z, &z, &o), e(&z, &d, &z)],
        ];
        Ok(CubicEtale {
            kind: CubicKind::Mixed { alpha0: a0 },
            alg: Algebra::new(table, vec![o.clone(), o, z])?,
        })
    }

    /// ℚ[θ]/(f) for monic f = θ³ + c₂θ² + c₁θ + c₀, which must be
    /// irreducible over ℚ.
    pub fn field(c0: i64, c1: i64, c2: i64) -> Result<Self> {
        let f = poly::from_ints(&[c0, c1, c2, 1]);
        if c0 == 0
            || integer_divisors(c0.unsigned_abs())
                .into_iter()
                .flat_map(|d| [d as i64, -(d as i64)])
                .any(|r| poly::eval(&f, &int(r)).is_zero())
        {
            return Err(Error::Invalid(format!(
                "x^3 + {c2}x^2 + {c1}x + {c0} has a rational root"
            )));
        }
        // θ^k reduced mod f for k ≤ 4.
        let mut powers: Vec<Poly> = Vec::new();
        for k in 0..5 {
            let mut m = vec![Rational::zero(); k + 1];
            m[k] = Rational::one();
            let r = poly::divrem(&m, &f).1;
            let mut v = r;
            v.resize(3, Rational::zero());
            powers.push(v);
        }
        let table = (0..3)
            .map(|i| (0..3).map(|j| powers[i + j].clone()).collect())
            .collect();
        Ok(CubicEtale {
            kind: CubicKind::Field { c: [c0, c1, c2] },
            alg: Algebra::new(
                table,
                vec![Rational::one(), Rational::zero(), Rational::zero()],
            )?,
        })
    }

    pub fn kind(&self) -> &CubicKind {
        &self.kind
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind, CubicKind::Field { .. })
    }

    pub fn min_poly(&self) -> Option<Poly> {
        match self.kind {
            CubicKind::Field { c } => Some(poly::from_ints(&[c[0], c[1], c[2], 1])),
            _ => None,
        }
    }

    pub fn one(&self) -> EtaleElement {
        self.alg.one()
    }

    pub fn scalar(&self, c: &Rational) -> EtaleElement {
        self.alg.scalar(c)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> EtaleElement {
        self.alg.mul(x, y)
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        match &self.kind {
            CubicKind::Split => &x[0] * &x[1] * &x[2],
            CubicKind::Mixed { alpha0 } => {
                &x[0] * (&x[1] * &x[1] - alpha0.to_rational() * &x[2] * &x[2])
            }
            CubicKind::Field { .. } => self.alg.norm(x),
        }
    }

    pub fn trace(&self, x: &[Rational]) -> Rational {
        self.alg.trace(x)
    }

    pub fn inverse(&self, x: &[Rational]) -> Option<EtaleElement> {
        self.alg.inverse(x)
    }

    pub fn div(&self, x: &[Rational], y: &[Rational]) -> Result<EtaleElement> {
        self.alg.div(x, y)
    }

    /// δ with Disc(L) = ℚ(√δ): the determinant of the trace form.
    pub fn discriminant(&self) -> SquareClass {
        match &self.kind {
            CubicKind::Split => SquareClass::one(),
            CubicKind::Mixed { alpha0 } => alpha0.clone(),
            CubicKind::Field { .. } => SquareClass::of(&linalg::det(&self.alg.trace_gram()))
                .expect("trace form of an étale algebra is nondegenerate"),
        }
    }

    /// Polynomial discriminant of the defining cubic (field case).
    pub fn poly_discriminant(&self) -> Option<Rational> {
        match self.kind {
            CubicKind::Field { c } => {
                Some(poly::cubic_discriminant(&int(c[0]), &int(c[1]), &int(c[2])))
            }
            _ => None,
        }
    }

    /// Integer coefficients of the cubic form N(a + bθ + cθ²) (field case),
    /// indexed by exponent triples (i, j, k) with i + j + k = 3.
    pub fn norm_form_coeffs(&self) -> Option<Vec<([u32; 3], i64)>> {
        if !self.is_field() {
            return None;
        }
        let mats: Vec<Matrix> = (0..3)
            .map(|k| self.alg.mult_matrix(&self.alg.basis(k)))
            .collect();
        let mut coeffs = std::collections::BTreeMap::<[u32; 3], Rational>::new();
        // det(Σ v_k A_k) is multilinear in the columns.
        for k0 in 0..3 {
            for k1 in 0..3 {
                for k2 in 0..3 {
                    let m: Matrix = (0..3)
                        .map(|r| {
                            vec![
                                mats[k0][r][0].clone(),
                                mats[k1][r][1].clone(),
                                mats[k2][r][2].clone(),
                            ]
                        })
                        .collect();
                    let mut e = [0u32; 3];
                    e[k0] += 1;
                    e[k1] += 1;
                    e[k2] += 1;
                    *coeffs.entry(e).or_insert_with(Rational::zero) += linalg::det(&m);
                }
            }
        }
        Some(
            coeffs
                .into_iter()
                .map(|(e, c)| (e, c.to_integer().to_i64().expect("small coefficients")))
                .collect(),
        )
    }

    /// All ℚ-algebra automorphisms of L as coordinate matrices (column j is
    /// the image of the j-th basis vector). The identity comes first.
    pub fn automorphisms(&self) -> Vec<Matrix> {
        match &self.kind {
            CubicKind::Split => {
                let perms = [
                    [0, 1, 2],
                    [1, 0, 2],
                    [0, 2, 1],
                    [2, 1, 0],
                    [1, 2, 0],
                    [2, 0, 1],
                ];
                perms
                    .iter()
                    .map(|p| {
                        let mut m = linalg::zeros(3, 3);
                        for (j, &i) in p.iter().enumerate() {
                            m[i][j] = Rational::one();
                        }
                        m
                    })
                    .collect()
            }
            CubicKind::Mixed { .. } => {
                let id = linalg::identity(3);
                let mut c = id.clone();
                c[2][2] = -Rational::one();
                vec![id, c]
            }
            CubicKind::Field { c } => {
                let mut out = vec![linalg::identity(3)];
                let disc = self.poly_discriminant().expect("field");
                let Some(s) = rational_sqrt(&disc) else {
                    return out;
                };
                // The other roots are (−θ − c₂ ± s/f′(θ))/2.
                let theta = self.alg.basis(1);
                let fp = poly::derivative(&self.min_poly().expect("field"));
                let fpt = self.alg.eval_poly(&fp, &theta);
                let fpi = self.alg.inverse(&fpt).expect("f′(θ) invertible");
                let half = Rational::new(1.into(), 2.into());
                let base = scale(&add(&theta, &self.scalar(&int(c[2]))), &-half.clone());
                for sign in [1i64, -1] {
                    let r = add(&base, &scale(&fpi, &(&s * &half * int(sign))));
                    let r2 = self.mul(&r, &r);
                    let m: Matrix = (0..3)
                        .map(|i| vec![self.one()[i].clone(), r[i].clone(), r2[i].clone()])
                        .collect();
                    out.push(m);
                }
                out
            }
        }
    }

    pub fn apply_automorphism(&self, phi: &Matrix, x: &[Rational]) -> EtaleElement {
        linalg::mat_vec(phi, x)
    }

    /// Primitive idempotents of L.
    pub fn idempotents(&self) -> Result<Vec<EtaleElement>> {
        self.alg.idempotents()
    }
}

fn integer_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// discriminant(L) as an operation.
pub fn discriminant(l: &CubicEtale) -> SquareClass {
    l.discriminant()
}

/// (E, τ) = (L ⊗ K, 1 ⊗ ¯). Elements are six coordinates (x; y) meaning
/// x + y·j with x, y ∈ L and j² = d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryAlgebra {
    l: CubicEtale,
    k: QuadraticEtale,
    alg: Algebra,
}

pub fn unitary_algebra(l: &CubicEtale, k: &QuadraticEtale) -> UnitaryAlgebra {
    UnitaryAlgebra::new(l, k)
}

impl UnitaryAlgebra {
    pub fn new(l: &CubicEtale, k: &QuadraticEtale) -> Self {
        let la = l.algebra();
        let d = k.d();
        let mut table = vec![vec![vec![Rational::zero(); 6]; 6]; 6];
        for i in 0..3 {
            for j in 0..3 {
                let p = la.mul(&la.basis(i), &la.basis(j));
                for r in 0..3 {
                    table[i][j][r] = p[r].clone();
                    table[i][3 + j][3 + r] = p[r].clone();
                    table[3 + i][j][3 + r] = p[r].clone();
                    table[3 + i][3 + j][r] = d * &p[r];
                }
            }
        }
        let mut one = l.one();
        one.extend([Rational::zero(), Rational::zero(), Rational::zero()]);
        UnitaryAlgebra {
            l: l.clone(),
            k: k.clone(),
            alg: Algebra::new(table, one).expect("shape"),
        }
    }

    pub fn l(&self) -> &CubicEtale {
        &self.l
    }

    pub fn k(&self) -> &QuadraticEtale {
        &self.k
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn one(&self) -> EtaleElement {
        self.alg.one()
    }

    pub fn join(x: &[Rational], y: &[Rational]) -> EtaleElement {
        let mut v = x.to_vec();
        v.extend_from_slice(y);
        v
    }

    pub fn parts(w: &[Rational]) -> (EtaleElement, EtaleElement) {
        (w[..3].to_vec(), w[3..].to_vec())
    }

    pub fn from_l(&self, x: &[Rational]) -> EtaleElement {
        Self::join(x, &[Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn from_k(&self, z: &[Rational]) -> EtaleElement {
        let one = self.l.one();
        Self::join(&scale(&one, &z[0]), &scale(&one, &z[1]))
    }

    /// The L-part of a τ-fixed element.
    pub fn to_l(&self, w: &[Rational]) -> Option<EtaleElement> {
        is_zero(&w[3..]).then(|| w[..3].to_vec())
    }

    /// The K-part of an element of K ⊂ E.
    pub fn to_k(&self, w: &[Rational]) -> Option<EtaleElement> {
        let one = self.l.one();
        let (x, y) = Self::parts(w);
        let idx = one.iter().position(|c| !c.is_zero())?;
        let a = &x[idx] / &one[idx];
        let b = &y[idx] / &one[idx];
        (scale(&one, &a) == x && scale(&one, &b) == y).then(|| vec![a, b])
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> EtaleElement {
        let la = self.l.algebra();
        let (x, y) = Self::parts(a);
        let (x2, y2) = Self::parts(b);
        let re = add(&la.mul(&x, &x2), &scale(&la.mul(&y, &y2), self.k.d()));
        let im = add(&la.mul(&x, &y2), &la.mul(&y, &x2));
        Self::join(&re, &im)
    }

    pub fn tau(&self, w: &[Rational]) -> EtaleElement {
        let (x, y) = Self::parts(w);
        Self::join(&x, &neg(&y))
    }

    pub fn inverse(&self, w: &[Rational]) -> Option<EtaleElement> {
        self.alg.inverse(w)
    }

    pub fn div(&self, a: &[Rational], b: &[Rational]) -> Result<EtaleElement> {
        self.alg.div(a, b)
    }

    pub fn pow(&self, w: &[Rational], e: i32) -> Result<EtaleElement> {
        let base = if e < 0 {
            self.inverse(w)
                .ok_or_else(|| Error::NotInvertible("negative power of a zero divisor".into()))?
        } else {
            w.to_vec()
        };
        let mut r = self.one();
        for _ in 0..e.unsigned_abs() {
            r = self.mul(&r, &base);
        }
        Ok(r)
    }

    /// N_{E/L}(w) = w·τ(w) = x² − d·y².
    pub fn norm_el(&self, w: &[Rational]) -> EtaleElement {
        let la = self.l.algebra();
        let (x, y) = Self::parts(w);
        sub(&la.mul(&x, &x), &scale(&la.mul(&y, &y), self.k.d()))
    }

    /// N_{E/K}(w): determinant over K of multiplication by w on E ≅ K³.
    pub fn norm_ek(&self, w: &[Rational]) -> EtaleElement {
        let la = self.l.algebra();
        let (x, y) = Self::parts(w);
        let mx = la.mult_matrix(&x);
        let my = la.mult_matrix(&y);
        let k = &self.k;
        let m: Vec<Vec<EtaleElement>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| vec![mx[i][j].clone(), my[i][j].clone()])
                    .collect()
            })
            .collect();
        let minor = |a: usize, b: usize, c: usize, d: usize| {
            sub(&k.mul(&m[1][a], &m[2][b]), &k.mul(&m[1][c], &m[2][d]))
        };
        let t0 = k.mul(&m[0][0], &minor(1, 2, 2, 1));
        let t1 = k.mul(&m[0][1], &minor(0, 2, 2, 0));
        let t2 = k.mul(&m[0][2], &minor(0, 1, 1, 0));
        add(&sub(&t0, &t1), &t2)
    }

    /// (N_{E/K}(w), N_{E/L}(w)).
    pub fn relative_norms(&self, w: &[Rational]) -> (EtaleElement, EtaleElement) {
        (self.norm_ek(w), self.norm_el(w))
    }

    pub fn norm(&self, w: &[Rational]) -> Rational {
        self.alg.norm(w)
    }

    pub fn trace(&self, w: &[Rational]) -> Rational {
        self.alg.trace(w)
    }

    /// The idempotents (1 ± j)/2 when K is split; they are swapped by τ.
    pub fn switch_idempotents(&self) -> Option<(EtaleElement, EtaleElement)> {
        if !self.k.is_split() {
            return None;
        }
        let h = Rational::new(1.into(), 2.into());
        let one = scale(&self.l.one(), &h);
        Some((Self::join(&one, &one), Self::join(&one, &neg(&one))))
    }

    /// For split K: the two L-components (x + y, x − y) of w = x + yj.
    pub fn split_components(&self, w: &[Rational]) -> Option<(EtaleElement, EtaleElement)> {
        if !self.k.is_split() {
            return None;
        }
        let (x, y) = Self::parts(w);
        Some((add(&x, &y), sub(&x, &y)))
    }

    /// Inverse of `split_components`.
    pub fn from_split_components(&self, p: &[Rational], m: &[Rational]) -> EtaleElement {
        let h = Rational::new(1.into(), 2.into());
        Self::join(&scale(&add(p, m), &h), &scale(&sub(p, m), &h))
    }

    /// Basis of the τ-fixed subspace.
    pub fn fixed_basis(&self) -> Vec<EtaleElement> {
        let mut m = linalg::zeros(6, 6);
        for j in 0..6 {
            let e = self.alg.basis(j);
            let t = sub(&self.tau(&e), &e);
            for i in 0..6 {
                m[i][j] = t[i].clone();
            }
        }
        linalg::kernel(&m)
    }
}

/// Sign of a + b√d for d > 0 a non-square, exactly.
pub fn sign_of_real_quadratic(a: &Rational, b: &Rational, d: &Rational) -> i8 {
    let sa = a.signum();
    let sb = b.signum();
    if sb.is_zero() {
        return if sa.is_zero() {
            0
        } else if sa.is_positive() {
            1
        } else {
            -1
        };
    }
    if sa.is_zero() || sa == sb {
        return if sb.is_positive() { 1 } else { -1 };
    }
    // Opposite signs: compare a² with b²d.
    let lhs = a * a;
    let rhs = b * b * d;
    if lhs > rhs {
        if sa.is_positive() {
            1
        } else {
            -1
        }
    } else if sb.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::rat;
    use crate::sample::{rng, small_vec};

    fn v(xs: &[i64]) -> EtaleElement {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn discriminant_examples() {
        assert!(CubicEtale::split().discriminant().is_one());
        let l = CubicEtale::field(-1, -3, 0).unwrap();
        assert!(l.discriminant().is_one());
        assert_eq!(l.poly_discriminant().unwrap(), int(81));
        let m = CubicEtale::mixed(&int(-1)).unwrap();
        assert_eq!(m.discriminant(), SquareClass::of_int(-1).unwrap());
        assert_eq!(
            SquareClass::of(&linalg::det(&m.algebra().trace_gram())).unwrap(),
            SquareClass::of_int(-1).unwrap()
        );
        let f = CubicEtale::field(-2, 0, 0).unwrap();
        assert_eq!(f.discriminant(), SquareClass::of_int(-3).unwrap());
    }

    #[test]
    fn reducible_cubic_rejected() {
        assert!(CubicEtale::field(-6, 11, -6).is_err());
        assert!(CubicEtale::field(0, 1, 1).is_err());
        assert!(CubicEtale::mixed(&int(4)).is_err());
    }

    #[test]
    fn norm_examples() {
        let l = CubicEtale::field(-1, -3, 0).unwrap();
        assert_eq!(l.norm(&v(&[0, 1, 0])), int(1));
        assert_eq!(l.norm(&l.one()), int(1));
        assert_eq!(l.trace(&l.one()), int(3));
        let k = QuadraticEtale::new(&int(-1)).unwrap();
        assert_eq!(k.norm(&v(&[3, 4])), int(25));
        assert_eq!(k.algebra().norm(&v(&[3, 4])), int(25));
    }

    #[test]
    fn norm_form_coefficients_match_determinant() {
        let l = CubicEtale::field(-1, -3, 0).unwrap();
        let c = l.norm_form_coeffs().unwrap();
        let x = v(&[2, -1, 3]);
        let val: i64 = c
            .iter()
            .map(|(e, k)| k * 2i64.pow(e[0]) * (-1i64).pow(e[1]) * 3i64.pow(e[2]))
            .sum();
        assert_eq!(int(val), l.norm(&x));
    }

    #[test]
    fn unitary_algebra_fixed_part_and_norms() {
        let k = QuadraticEtale::new(&int(-1)).unwrap();
        let e = UnitaryAlgebra::new(&CubicEtale::split(), &k);
        assert_eq!(e.algebra().dim(), 6);
        let fixed = e.fixed_basis();
        assert_eq!(fixed.len(), 3);
        assert!(fixed.iter().all(|f| is_zero(&f[3..])));
        // x = (i, −i, 1)
        let x = UnitaryAlgebra::join(&v(&[0, 0, 1]), &v(&[1, -1, 0]));
        assert_eq!(e.norm_ek(&x), v(&[1, 0]));
        assert_eq!(e.norm_el(&x), v(&[1, 1, 1]));
        assert_eq!(e.norm_ek(&e.one()), v(&[1, 0]));
    }

    #[test]
    fn norm_tower_on_random_elements() {
        let mut r = rng(3);
        for l in [
            CubicEtale::split(),
            CubicEtale::mixed(&int(5)).unwrap(),
            CubicEtale::field(-1, -3, 0).unwrap(),
            CubicEtale::field(-2, 0, 0).unwrap(),
        ] {
            for kd in [1, -1, 2] {
                let k = QuadraticEtale::new(&int(kd)).unwrap();
                let e = UnitaryAlgebra::new(&l, &k);
                for _ in 0..20 {
                    let x = small_vec(&mut r, 6, 5);
                    let (nk, nl) = e.relative_norms(&x);
                    assert_eq!(l.norm(&nl), k.norm(&nk));
                    assert_eq!(e.norm(&x), k.norm(&nk));
                    assert_eq!(e.mul(&x, &e.tau(&x)), e.from_l(&nl));
                }
            }
        }
    }

    #[test]
    fn tau_is_an_involutive_automorphism() {
        let mut r = rng(5);
        let e = UnitaryAlgebra::new(
            &CubicEtale::field(-1, -3, 0).unwrap(),
            &QuadraticEtale::new(&int(-3)).unwrap(),
        );
        for _ in 0..30 {
            let x = small_vec(&mut r, 6, 4);
            let y = small_vec(&mut r, 6, 4);
            assert_eq!(e.tau(&e.tau(&x)), x);
            assert_eq!(e.tau(&e.mul(&x, &y)), e.mul(&e.tau(&x), &e.tau(&y)));
            assert_eq!(e.mul(&x, &y), e.algebra().mul(&x, &y));
        }
    }

    #[test]
    fn split_k_gives_switch_idempotents() {
        let e = UnitaryAlgebra::new(&CubicEtale::split(), &QuadraticEtale::split());
        let (p, m) = e.switch_idempotents().unwrap();
        assert_eq!(e.mul(&p, &p), p);
        assert_eq!(e.mul(&m, &m), m);
        assert!(is_zero(&e.mul(&p, &m)));
        assert_eq!(e.tau(&p), m);
        assert_eq!(add(&p, &m), e.one());
    }

    #[test]
    fn idempotents_of_small_algebras() {
        let k = QuadraticEtale::split();
        let id = k.algebra().idempotents().unwrap();
        assert_eq!(id.len(), 2);
        let field = CubicEtale::field(-1, -3, 0).unwrap();
        assert_eq!(field.idempotents().unwrap(), vec![field.one()]);
        assert_eq!(CubicEtale::split().idempotents().unwrap().len(), 3);
        assert_eq!(
            CubicEtale::mixed(&int(2))
                .unwrap()
                .idempotents()
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn cyclic_cubic_tensor_square_splits_into_three() {
        let l = CubicEtale::field(-1, -3, 0).unwrap();
        let ll = l.algebra().tensor(l.algebra());
        let ids = ll.idempotents().unwrap();
        assert_eq!(ids.len(), 3);
        let mut sum = ll.zero();
        for e in &ids {
            assert_eq!(ll.mul(e, e), *e);
            assert_eq!(linalg::rank(&ll.mult_matrix(e)), 3);
            sum = add(&sum, e);
        }
        assert_eq!(sum, ll.one());
        // Non-cyclic: L ⊗ L ≅ L × (L ⊗ Δ) with Δ a field, so 2 blocks.
        let l2 = CubicEtale::field(-2, 0, 0).unwrap();
        let ll2 = l2.algebra().tensor(l2.algebra());
        let ranks: Vec<usize> = ll2
            .idempotents()
            .unwrap()
            .iter()
            .map(|e| linalg::rank(&ll2.mult_matrix(e)))
            .collect();
        assert_eq!(ranks.len(), 2);
        assert_eq!(ranks.iter().sum::<usize>(), 9);
    }

    #[test]
    fn automorphisms_of_cyclic_cubic() {
        let l = CubicEtale::field(-1, -3, 0).unwrap();
        let auts = l.automorphisms();
        assert_eq!(auts.len(), 3);
        let f = l.min_poly().unwrap();
        let mut r = rng(9);
        for phi in &auts {
            let th = l.apply_automorphism(phi, &l.algebra().basis(1));
            assert!(is_zero(&l.algebra().eval_poly(&f, &th)));
            let x = small_vec(&mut r, 3, 5);
            let y = small_vec(&mut r, 3, 5);
            assert_eq!(
                l.apply_automorphism(phi, &l.mul(&x, &y)),
                l.mul(
                    &l.apply_automorphism(phi, &x),
                    &l.apply_automorphism(phi, &y)
                )
            );
        }
        assert_eq!(
            CubicEtale::field(-2, 0, 0).unwrap().automorphisms().len(),
            1
        );
        assert_eq!(CubicEtale::split().automorphisms().len(), 6);
    }

    #[test]
    fn discriminant_invariant_under_shift() {
        // x³ − 3x − 1 under x ↦ x + 1: x³ + 3x² − 3.
        let shifted = CubicEtale::field(-3, 0, 3).unwrap();
        assert!(shifted.discriminant().is_one());
        // x³ − 2 under x ↦ x − 1: x³ − 3x² + 3x − 3.
        let s2 = CubicEtale::field(-3, 3, -3).unwrap();
        assert_eq!(s2.discriminant(), SquareClass::of_int(-3).unwrap());
    }

    #[test]
    fn real_quadratic_signs() {
        assert_eq!(sign_of_real_quadratic(&int(1), &int(-1), &int(2)), -1);
        assert_eq!(sign_of_real_quadratic(&int(2), &int(-1), &int(2)), 1);
        assert_eq!(sign_of_real_quadratic(&rat(-3, 2), &int(1), &int(2)), -1);
    }
}
