//! Mod-2 invariants of groups of type A₂, G₂ and F₄: the trace form Q_σ and
//! f₃ of a diagonal unitary involution, Oct(G), f₅ of a reduced Albert
//! algebra, necessary conditions for torus embeddings, and the existence of
//! distinguished tori.

use std::fmt;

use num_traits::{One, Zero};

use crate::composition::{embeds_quadratic, CompositionAlgebra};
use crate::error::{Error, Result};
use crate::etale::{CubicEtale, CubicKind, EtaleElement, QuadraticEtale};
use crate::exact_numbers::{int, Rational, SquareClass};
use crate::jordan::ReducedAlbert;
use crate::linalg::{self, Matrix};
use crate::quadratic_forms::{
    arason_trivial, pfister, pfister_divides_1fold, PfisterForm, QuadraticForm,
};
use crate::tori::UnitaryTorus;

/// σ = Int(diag(a)) ∘ (conjugate transpose) on M₃(K), K = ℚ(√α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalUnitaryInvolution {
    k: QuadraticEtale,
    a: [Rational; 3],
}

/// A 3×3 matrix over K, entries as (x, y) for x + y√α.
pub type KMatrix = Vec<Vec<EtaleElement>>;

impl DiagonalUnitaryInvolution {
    pub fn new(alpha: &Rational, a: [Rational; 3]) -> Result<Self> {
        if a.iter().any(|x| x.is_zero()) {
            return Err(Error::Zero("diagonal entries must be nonzero".into()));
        }
        Ok(DiagonalUnitaryInvolution {
            k: QuadraticEtale::new(alpha)?,
            a,
        })
    }

    pub fn from_ints(alpha: i64, a: [i64; 3]) -> Result<Self> {
        Self::new(&int(alpha), [int(a[0]), int(a[1]), int(a[2])])
    }

    pub fn alpha(&self) -> &SquareClass {
        self.k.alpha()
    }

    pub fn k(&self) -> &QuadraticEtale {
        &self.k
    }

    pub fn a(&self) -> &[Rational; 3] {
        &self.a
    }

    /// σ(X)ᵢⱼ = aᵢ·conj(Xⱼᵢ)/aⱼ.
    pub fn apply(&self, x: &KMatrix) -> KMatrix {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let r = &self.a[i] / &self.a[j];
                        crate::etale::scale(&self.k.conj(&x[j][i]), &r)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_symmetric(&self, x: &KMatrix) -> bool {
        self.apply(x) == *x
    }

    /// A ℚ-basis of (B, σ)₊: the three diagonal units, then for each i < j
    /// the matrices with Xᵢⱼ = z, Xⱼᵢ = aⱼ·z̄/aᵢ for z ∈ {1, √α}.
    pub fn symmetric_basis(&self) -> Vec<KMatrix> {
        let zero = || vec![vec![self.k.scalar(&Rational::zero()); 3]; 3];
        let mut out = Vec::new();
        for i in 0..3 {
            let mut m = zero();
            m[i][i] = self.k.one();
            out.push(m);
        }
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            for z in [self.k.one(), vec![Rational::zero(), Rational::one()]] {
                let mut m = zero();
                m[j][i] = crate::etale::scale(&self.k.conj(&z), &(&self.a[j] / &self.a[i]));
                m[i][j] = z;
                out.push(m);
            }
        }
        out
    }

    pub fn kmatmul(&self, x: &KMatrix, y: &KMatrix) -> KMatrix {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        (0..3).fold(self.k.scalar(&Rational::zero()), |acc, l| {
                            crate::etale::add(&acc, &self.k.mul(&x[i][l], &y[l][j]))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Gram matrix of (x, y) ↦ T_B(xy) on `symmetric_basis`.
    pub fn trace_gram(&self) -> Matrix {
        let basis = self.symmetric_basis();
        basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| {
                        let p = self.kmatmul(x, y);
                        let t = (0..3).fold(self.k.scalar(&Rational::zero()), |acc, i| {
                            crate::etale::add(&acc, &p[i][i])
                        });
                        debug_assert!(t[1].is_zero());
                        t[0].clone()
                    })
                    .collect()
            })
            .collect()
    }

    /// Q_σ = ⟨1,1,1⟩ ⊥ ⟨2⟩·⟨⟨α⟩⟩·⟨a₁a₂, a₁a₃, a₂a₃⟩.
    pub fn trace_form(&self) -> QuadraticForm {
        let a = &self.a;
        let alpha = self.k.d();
        let mut coeffs = vec![Rational::one(); 3];
        let prods = [&a[0] * &a[1], &a[0] * &a[2], &a[1] * &a[2]];
        for s in [Rational::one(), -alpha] {
            for p in &prods {
                coeffs.push(int(2) * &s * p);
            }
        }
        QuadraticForm::new(coeffs).expect("nonzero coefficients")
    }

    /// ⟨⟨α, −a₁a₂, −a₂a₃⟩⟩.
    pub fn f3(&self) -> PfisterForm {
        let a = &self.a;
        pfister(&[self.k.d().clone(), -(&a[0] * &a[1]), -(&a[1] * &a[2])]).expect("nonzero slots")
    }

    pub fn is_distinguished(&self) -> Result<bool> {
        arason_trivial(&self.f3())
    }
}

pub fn trace_form(inv: &DiagonalUnitaryInvolution) -> QuadraticForm {
    inv.trace_form()
}

pub fn f3_involution(inv: &DiagonalUnitaryInvolution) -> PfisterForm {
    inv.f3()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupData {
    /// Aut(C).
    G2 { c: CompositionAlgebra },
    /// SU(B, σ); `division` marks a group arising from a division algebra,
    /// whose invariants are carried by the split model.
    A2 {
        involution: DiagonalUnitaryInvolution,
        division: bool,
    },
    /// Aut(A) with reduced model H₃(C, Γ).
    F4 {
        albert: ReducedAlbert,
        division: bool,
    },
}

impl GroupData {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupData::G2 { .. } => "G2",
            GroupData::A2 { .. } => "A2",
            GroupData::F4 { .. } => "F4",
        }
    }

    pub fn is_division(&self) -> bool {
        match self {
            GroupData::G2 { .. } => false,
            GroupData::A2 { division, .. } | GroupData::F4 { division, .. } => *division,
        }
    }

    pub fn oct(&self) -> CompositionAlgebra {
        match self {
            GroupData::G2 { c } => c.clone(),
            GroupData::A2 { involution, .. } => {
                CompositionAlgebra::new(involution.f3().slots().to_vec())
                    .expect("three nonzero slots")
            }
            GroupData::F4 { albert, .. } => albert.composition().clone(),
        }
    }

    pub fn f3(&self) -> PfisterForm {
        match self {
            GroupData::A2 { involution, .. } => involution.f3(),
            _ => self.oct().norm_form(),
        }
    }

    pub fn f5(&self) -> Option<PfisterForm> {
        match self {
            GroupData::F4 { albert, .. } => {
                Some(f5_albert(albert.composition(), albert.gamma()).expect("nonzero Γ"))
            }
            _ => None,
        }
    }
}

pub fn oct_of_group(g: &GroupData) -> CompositionAlgebra {
    g.oct()
}

/// n_C ⊗ ⟨⟨−γ₁⁻¹γ₂, −γ₂⁻¹γ₃⟩⟩.
pub fn f5_albert(c: &CompositionAlgebra, gamma: &[Rational; 3]) -> Result<PfisterForm> {
    if gamma.iter().any(|g| g.is_zero()) {
        return Err(Error::Zero("Γ entries must be nonzero".into()));
    }
    let extra = pfister(&[-(&gamma[1] / &gamma[0]), -(&gamma[2] / &gamma[1])])?;
    Ok(c.norm_form().tensor(&extra))
}

/// The same form read off as n_C ⊗ ⟨1, γ₁⁻¹γ₂⟩ ⊗ ⟨1, γ₂⁻¹γ₃⟩: each binary
/// factor ⟨1, x⟩ contributes the slot −x.
pub fn f5_albert_binary(c: &CompositionAlgebra, gamma: &[Rational; 3]) -> Result<PfisterForm> {
    if gamma.iter().any(|g| g.is_zero()) {
        return Err(Error::Zero("Γ entries must be nonzero".into()));
    }
    let binaries = [&gamma[1] / &gamma[0], &gamma[2] / &gamma[1]];
    let mut slots = c.params().to_vec();
    for b in binaries {
        let form = QuadraticForm::new(vec![Rational::one(), b])?;
        slots.push(-form.coeffs()[1].clone());
    }
    pfister(&slots)
}

/// L ⊂ (M₃(K), σ)₊ through the regular representation in a trace-orthogonal
/// basis of L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicEmbedding {
    pub involution: DiagonalUnitaryInvolution,
    /// Columns are the trace-orthogonal basis of L in original coordinates.
    pub change_of_basis: Matrix,
    /// Diagonal of the trace form in that basis.
    pub trace_diagonal: Vec<Rational>,
    /// Images of the original basis vectors of L.
    pub images: Vec<Matrix>,
}

impl CubicEmbedding {
    fn as_kmatrix(&self, m: &Matrix) -> KMatrix {
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|x| vec![x.clone(), Rational::zero()])
                    .collect()
            })
            .collect()
    }

    pub fn image(&self, l: &CubicEtale, x: &[Rational]) -> Matrix {
        let p = &self.change_of_basis;
        let pinv = linalg::inverse(p).expect("invertible change of basis");
        linalg::matmul(&linalg::matmul(&pinv, &l.algebra().mult_matrix(x)), p)
    }

    /// σ fixes the image of every basis vector.
    pub fn verify(&self) -> bool {
        self.images
            .iter()
            .all(|m| self.involution.is_symmetric(&self.as_kmatrix(m)))
    }
}

/// aᵢ = 1/dᵢ for the congruence diagonalization diag(d) of the trace form of
/// L, so that multiplication operators are σ-symmetric.
pub fn embed_cubic_symmetric(l: &CubicEtale, alpha: &Rational) -> Result<CubicEmbedding> {
    let g = l.algebra().trace_gram();
    let (d, p) = linalg::congruence_diagonalize(&g);
    if d.iter().any(|x| x.is_zero()) {
        return Err(Error::Invalid("degenerate trace form".into()));
    }
    let a = [
        Rational::one() / &d[0],
        Rational::one() / &d[1],
        Rational::one() / &d[2],
    ];
    let involution = DiagonalUnitaryInvolution::new(alpha, a)?;
    let mut emb = CubicEmbedding {
        involution,
        change_of_basis: p,
        trace_diagonal: d,
        images: Vec::new(),
    };
    emb.images = (0..3)
        .map(|i| emb.image(l, &l.algebra().basis(i)))
        .collect();
    if !emb.verify() {
        return Err(Error::Invalid(
            "embedded matrices are not σ-symmetric".into(),
        ));
    }
    Ok(emb)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionStatus {
    Pass,
    Fail,
    NotApplicable,
    /// Recorded for context; not a necessary condition.
    Informational,
}

impl ConditionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionStatus::Pass => "pass",
            ConditionStatus::Fail => "fail",
            ConditionStatus::NotApplicable => "not_applicable",
            ConditionStatus::Informational => "informational",
        }
    }

    fn of(b: bool) -> Self {
        if b {
            ConditionStatus::Pass
        } else {
            ConditionStatus::Fail
        }
    }
}

impl fmt::Display for ConditionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionRecord {
    pub id: &'static str,
    pub condition: String,
    pub status: ConditionStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub records: Vec<ConditionRecord>,
    /// True iff some necessary condition fails. A clean report is not a
    /// sufficiency claim.
    pub embedding_impossible: bool,
}

/// Evaluates the necessary conditions for T ↪ G that apply to G's type.
pub fn check_embedding_necessary(g: &GroupData, t: &UnitaryTorus) -> Result<ObstructionReport> {
    let alpha = t.alpha().to_rational();
    let delta = t.delta();
    let ad = t.alpha().mul(&delta).to_rational();
    let mut records = Vec::new();
    match g {
        GroupData::G2 { .. } | GroupData::A2 { .. } => {
            let nc = g.f3();
            records.push(ConditionRecord {
                id: "qt_divides_oct_norm",
                condition: format!("<<{}>> divides n_C", ad),
                status: ConditionStatus::of(pfister_divides_1fold(&ad, &nc)?),
                detail: format!("q_T = {}, n_C = {}", t.q_t(), nc),
            });
            records.push(ConditionRecord {
                id: "k_embeds_in_oct",
                condition: "K embeds in Oct(G)".into(),
                status: ConditionStatus::of(embeds_quadratic(t.k(), &g.oct())?),
                detail: format!("K = Q(sqrt({}))", t.alpha()),
            });
        }
        GroupData::F4 { .. } => {
            let f5 = g.f5().expect("F4 has f5");
            records.push(ConditionRecord {
                id: "qt_divides_f5",
                condition: format!("<<{}>> divides f5", ad),
                status: ConditionStatus::of(pfister_divides_1fold(&ad, &f5)?),
                detail: format!("q_T = {}, f5 = {}", t.q_t(), f5),
            });
            records.push(ConditionRecord {
                id: "k_norm_divides_f5",
                condition: format!("<<{}>> divides f5", alpha),
                status: ConditionStatus::of(pfister_divides_1fold(&alpha, &f5)?),
                detail: format!("<1,-alpha> with alpha = {}", t.alpha()),
            });
            let k_in_c = embeds_quadratic(t.k(), &g.oct())?;
            if delta.is_one() {
                records.push(ConditionRecord {
                    id: "k_embeds_in_oct_trivial_disc",
                    condition: "K embeds in Oct(G) when disc(L) is trivial".into(),
                    status: ConditionStatus::of(k_in_c),
                    detail: "disc(L) = 1".into(),
                });
            } else {
                records.push(ConditionRecord {
                    id: "k_embeds_in_oct_trivial_disc",
                    condition: "K embeds in Oct(G) when disc(L) is trivial".into(),
                    status: ConditionStatus::NotApplicable,
                    detail: format!("disc(L) = {delta}"),
                });
                records.push(ConditionRecord {
                    id: "k_embeds_in_oct_unconditional",
                    condition: "K embeds in Oct(G)".into(),
                    status: ConditionStatus::Informational,
                    detail: format!(
                        "{}; not necessary for F4 when disc(L) is nontrivial",
                        if k_in_c { "holds" } else { "fails" }
                    ),
                });
            }
        }
    }
    if matches!(g, GroupData::A2 { .. } | GroupData::F4 { .. }) {
        records.push(ConditionRecord {
            id: "l_is_field_for_division",
            condition: "L is a field when G arises from a division algebra".into(),
            status: if g.is_division() {
                ConditionStatus::of(t.l().is_field())
            } else {
                ConditionStatus::NotApplicable
            },
            detail: format!("division = {}", g.is_division()),
        });
    }
    let embedding_impossible = records.iter().any(|r| r.status == ConditionStatus::Fail);
    Ok(ObstructionReport {
        records,
        embedding_impossible,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedReport {
    pub verdict: bool,
    pub witness: Option<UnitaryTorus>,
    /// The Pfister form whose triviality decides the verdict.
    pub invariant: PfisterForm,
}

/// Verdict: f₃ trivial for G₂ and A₂, f₅ trivial for F₄. Witnesses are built
/// only where an explicit construction is available: T(ℚ³, ℚ×ℚ) for split
/// data, T(ℚ × F, F) for a distinguished split A₂ with center F, and for F₄
/// with Γ containing γᵢ ≡ −γⱼ, T(ℚ × F, F) with F ⊂ C.
pub fn distinguished_torus_exists(g: &GroupData) -> Result<DistinguishedReport> {
    let split_witness = || UnitaryTorus::new(&CubicEtale::split(), &QuadraticEtale::split());
    let mixed_witness = |f: &Rational| -> Result<UnitaryTorus> {
        Ok(UnitaryTorus::new(
            &CubicEtale::mixed(f)?,
            &QuadraticEtale::new(f)?,
        ))
    };
    let (invariant, witness) = match g {
        GroupData::G2 { c } => {
            let f3 = c.norm_form();
            let w = arason_trivial(&f3)?.then(split_witness);
            (f3, w)
        }
        GroupData::A2 {
            involution,
            division,
        } => {
            let f3 = involution.f3();
            let w = if arason_trivial(&f3)? && !division {
                let k = involution.k();
                Some(if k.is_split() {
                    split_witness()
                } else {
                    mixed_witness(k.d())?
                })
            } else {
                None
            };
            (f3, w)
        }
        GroupData::F4 { albert, division } => {
            let c = albert.composition();
            let f5 = f5_albert(c, albert.gamma())?;
            let w = if !arason_trivial(&f5)? || *division {
                None
            } else if !c.is_division()? {
                Some(split_witness())
            } else {
                let gm = albert.gamma();
                let opposite = (0..3).any(|i| {
                    (i + 1..3).any(|j| {
                        SquareClass::of(&-(&gm[i] / &gm[j]))
                            .expect("nonzero")
                            .is_one()
                    })
                });
                let f = &c.params()[0];
                if opposite && !SquareClass::of(f).expect("nonzero").is_one() {
                    Some(mixed_witness(f)?)
                } else {
                    None
                }
            };
            (f5, w)
        }
    };
    let verdict = arason_trivial(&invariant)?;
    Ok(DistinguishedReport {
        verdict,
        witness,
        invariant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F3aReport {
    pub l_shape: &'static str,
    pub f3_trivial: bool,
    /// L⁽¹⁾ ↪ G for this L.
    pub l1_embedding: crate::cohomology::Verdict,
    /// SL₁(D) ↪ G for some degree-3 D.
    pub sl1_embedding: crate::cohomology::Verdict,
    pub note: String,
}

/// For L with trivial discriminant: f₃(A) = 0 ⟺ some L⁽¹⁾ ↪ G ⟺ some
/// SL₁(D) ↪ G. `first_construction` records f₃(A) = 0.
pub fn f3a_check(first_construction: bool, l: &CubicEtale) -> Result<F3aReport> {
    use crate::cohomology::Verdict;
    if !l.discriminant().is_one() {
        return Err(Error::Invalid(format!(
            "discriminant of L must be trivial, got {}",
            l.discriminant()
        )));
    }
    let l_shape = match l.kind() {
        CubicKind::Split => "split",
        CubicKind::Field { .. } => "cyclic",
        CubicKind::Mixed { .. } => unreachable!("mixed algebras have nontrivial discriminant"),
    };
    let (l1, sl1, note) = if first_construction {
        if l_shape == "split" {
            (
                Verdict::True,
                Verdict::True,
                "f3=0; L = Q^3 gives L^(1) = Gm x Gm in G".to_string(),
            )
        } else {
            (
                Verdict::Unknown,
                Verdict::True,
                "f3=0; some trivial-discriminant L embeds, not necessarily this one".to_string(),
            )
        }
    } else {
        (
            Verdict::False,
            Verdict::False,
            "f3=0 required for embedding".to_string(),
        )
    };
    Ok(F3aReport {
        l_shape,
        f3_trivial: first_construction,
        l1_embedding: l1,
        sl1_embedding: sl1,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_numbers::rat;
    use crate::quadratic_forms::witt_equivalent;
    use crate::sample::{rng, small_nonzero, small_vec};

    fn inv(alpha: i64, a: [i64; 3]) -> DiagonalUnitaryInvolution {
        DiagonalUnitaryInvolution::from_ints(alpha, a).unwrap()
    }

    fn kmat(r: &mut crate::sample::SampleRng) -> KMatrix {
        (0..3)
            .map(|_| (0..3).map(|_| small_vec(r, 2, 4)).collect())
            .collect()
    }

    #[test]
    fn involution_squares_to_identity() {
        let mut r = rng(41);
        let s = inv(-1, [1, 2, -3]);
        for _ in 0..10 {
            let x = kmat(&mut r);
            assert_eq!(s.apply(&s.apply(&x)), x);
        }
        let basis = s.symmetric_basis();
        assert_eq!(basis.len(), 9);
        assert!(basis.iter().all(|b| s.is_symmetric(b)));
    }

    #[test]
    fn trace_form_matches_gram_matrix() {
        let mut r = rng(42);
        for _ in 0..10 {
            let alpha = small_nonzero(&mut r, 7);
            let a = [
                small_nonzero(&mut r, 5),
                small_nonzero(&mut r, 5),
                small_nonzero(&mut r, 5),
            ];
            let s = DiagonalUnitaryInvolution::new(&alpha, a).unwrap();
            let (d, _) = linalg::congruence_diagonalize(&s.trace_gram());
            let direct = QuadraticForm::new(d).unwrap();
            let q = s.trace_form();
            assert_eq!(q.dim(), 9);
            assert!(witt_equivalent(&q, &direct).unwrap());
        }
        let q = inv(-1, [1, 1, 1]).trace_form();
        assert!(q.is_definite());
    }

    #[test]
    fn f3_examples() {
        let f = inv(-1, [1, 1, 1]).f3();
        assert_eq!(f.slots(), &[int(-1), int(-1), int(-1)]);
        assert!(!arason_trivial(&f).unwrap());
        assert!(inv(4, [1, 2, 3]).is_distinguished().unwrap());
        for alpha in [-1, 2, 5, -7] {
            assert!(inv(alpha, [1, -1, -1]).is_distinguished().unwrap());
        }
        // Common scaling and square factors leave f₃ unchanged.
        let base = inv(-1, [1, 2, 5]).f3();
        let scaled = inv(-1, [3, 6, 15]).f3();
        let squared = inv(-1, [4, 18, 5]).f3();
        for other in [scaled, squared] {
            assert!(
                crate::quadratic_forms::is_isometric(base.expansion(), other.expansion()).unwrap()
            );
        }
    }

    #[test]
    fn oct_of_groups() {
        let g = GroupData::A2 {
            involution: inv(-1, [1, 1, 1]),
            division: false,
        };
        assert_eq!(
            g.oct(),
            CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap()
        );
        let g = GroupData::A2 {
            involution: inv(-1, [1, -1, -1]),
            division: false,
        };
        assert!(!g.oct().is_division().unwrap());
        let c = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        let a = ReducedAlbert::new(&c, [int(1), int(1), int(1)]).unwrap();
        assert_eq!(
            GroupData::F4 {
                albert: a,
                division: false
            }
            .oct(),
            c
        );
    }

    #[test]
    fn f5_examples() {
        let c = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        let g = [int(1), int(-1), int(-1)];
        assert!(arason_trivial(&f5_albert(&c, &g).unwrap()).unwrap());
        let f = f5_albert(&c, &[int(1), int(1), int(1)]).unwrap();
        assert_eq!(f.slots(), &[int(-1), int(-1), int(-1), int(-1), int(-1)]);
        assert!(!arason_trivial(&f).unwrap());
        let split = CompositionAlgebra::from_ints(&[1, -1, -1]).unwrap();
        assert!(arason_trivial(&f5_albert(&split, &[int(1), int(2), int(3)]).unwrap()).unwrap());
        assert!(f5_albert(&c, &[int(0), int(1), int(1)]).is_err());
        let mut r = rng(43);
        for _ in 0..10 {
            let g = [
                small_nonzero(&mut r, 6),
                small_nonzero(&mut r, 6),
                small_nonzero(&mut r, 6),
            ];
            let x = f5_albert(&c, &g).unwrap();
            let y = f5_albert_binary(&c, &g).unwrap();
            for (s, t) in x.slots().iter().zip(y.slots()) {
                assert_eq!(SquareClass::of(s).unwrap(), SquareClass::of(t).unwrap());
            }
        }
    }

    #[test]
    fn embedding_of_cubic_algebras() {
        let e = embed_cubic_symmetric(&CubicEtale::split(), &int(-1)).unwrap();
        for x in &e.images {
            for i in 0..3 {
                for j in 0..3 {
                    assert!(i == j || x[i][j].is_zero());
                }
            }
        }
        assert!(e
            .involution
            .a()
            .iter()
            .all(|a| SquareClass::of(a).unwrap().is_one()));
        let l = CubicEtale::field(-1, -3, 0).unwrap();
        let e = embed_cubic_symmetric(&l, &int(2)).unwrap();
        let mut classes: Vec<i64> = e
            .trace_diagonal
            .iter()
            .map(|d| SquareClass::of(d).unwrap().rep().try_into().unwrap())
            .collect();
        classes.sort();
        assert_eq!(classes, vec![2, 3, 6]);
        // T(lx, y) = T(x, ly).
        let mut r = rng(44);
        for _ in 0..20 {
            let (a, x, y) = (
                small_vec(&mut r, 3, 4),
                small_vec(&mut r, 3, 4),
                small_vec(&mut r, 3, 4),
            );
            assert_eq!(
                l.trace(&l.mul(&l.mul(&a, &x), &y)),
                l.trace(&l.mul(&x, &l.mul(&a, &y)))
            );
            let m = e.image(&l, &a);
            let km: KMatrix = m
                .iter()
                .map(|row| row.iter().map(|v| vec![v.clone(), rat(0, 1)]).collect())
                .collect();
            assert!(e.involution.is_symmetric(&km));
        }
    }

    #[test]
    fn qt_divides_f3_of_embedding() {
        for l in [
            CubicEtale::split(),
            CubicEtale::field(-1, -3, 0).unwrap(),
            CubicEtale::mixed(&int(5)).unwrap(),
            CubicEtale::field(-2, 0, 0).unwrap(),
        ] {
            for alpha in [-1, 2, -2, 5, 3] {
                let e = embed_cubic_symmetric(&l, &int(alpha)).unwrap();
                let t = UnitaryTorus::new(&l, &QuadraticEtale::new(&int(alpha)).unwrap());
                let ad = t.alpha().mul(&t.delta()).to_rational();
                assert!(pfister_divides_1fold(&ad, &e.involution.f3()).unwrap());
            }
        }
    }

    #[test]
    fn necessary_conditions() {
        let g = GroupData::A2 {
            involution: inv(-1, [1, 1, 1]),
            division: false,
        };
        let t = UnitaryTorus::new(&CubicEtale::split(), &QuadraticEtale::new(&int(2)).unwrap());
        let rep = check_embedding_necessary(&g, &t).unwrap();
        assert!(rep.embedding_impossible);
        assert_eq!(
            rep.records
                .iter()
                .find(|r| r.id == "k_embeds_in_oct")
                .unwrap()
                .status,
            ConditionStatus::Fail
        );

        let c = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        let a = ReducedAlbert::new(&c, [int(1), int(-1), int(-1)]).unwrap();
        let g = GroupData::F4 {
            albert: a,
            division: false,
        };
        let f = QuadraticEtale::new(&int(-1)).unwrap();
        let t = UnitaryTorus::new(&CubicEtale::mixed(&int(-1)).unwrap(), &f);
        let rep = check_embedding_necessary(&g, &t).unwrap();
        assert!(!rep.embedding_impossible);
        let t = UnitaryTorus::new(
            &CubicEtale::mixed(&int(-1)).unwrap(),
            &QuadraticEtale::split(),
        );
        let rep = check_embedding_necessary(&g, &t).unwrap();
        assert!(!rep.embedding_impossible);
        let info = rep
            .records
            .iter()
            .find(|r| r.id == "k_embeds_in_oct_unconditional")
            .unwrap();
        assert_eq!(info.status, ConditionStatus::Informational);
        assert!(info.detail.starts_with("fails"));
        let na = rep
            .records
            .iter()
            .find(|r| r.id == "k_embeds_in_oct_trivial_disc")
            .unwrap();
        assert_eq!(na.status, ConditionStatus::NotApplicable);

        let a = ReducedAlbert::new(&c, [int(1), int(1), int(1)]).unwrap();
        let g = GroupData::F4 {
            albert: a,
            division: true,
        };
        let rep =
            check_embedding_necessary(&g, &UnitaryTorus::new(&CubicEtale::split(), &f)).unwrap();
        assert!(rep.embedding_impossible);
    }

    #[test]
    fn distinguished_tori() {
        let g = GroupData::G2 {
            c: CompositionAlgebra::from_ints(&[1, -1, -1]).unwrap(),
        };
        let rep = distinguished_torus_exists(&g).unwrap();
        assert!(rep.verdict);
        let w = rep.witness.unwrap();
        assert_eq!(w.classify(), crate::tori::TorusShape::SplitRank2);
        assert!(w.is_distinguished());
        let g = GroupData::A2 {
            involution: inv(-1, [1, 1, 1]),
            division: false,
        };
        let rep = distinguished_torus_exists(&g).unwrap();
        assert!(!rep.verdict && rep.witness.is_none());
        let g = GroupData::A2 {
            involution: inv(-1, [1, -1, -1]),
            division: false,
        };
        assert!(distinguished_torus_exists(&g)
            .unwrap()
            .witness
            .unwrap()
            .is_distinguished());
        let c = CompositionAlgebra::from_ints(&[-1, -1, -1]).unwrap();
        for lambda in [1, -3, 7] {
            let a = ReducedAlbert::new(&c, [int(lambda), int(-lambda), int(-lambda)]).unwrap();
            let rep = distinguished_torus_exists(&GroupData::F4 {
                albert: a,
                division: false,
            })
            .unwrap();
            assert!(rep.verdict);
            assert!(rep.witness.unwrap().is_distinguished());
        }
    }

    #[test]
    fn f3a() {
        let rep = f3a_check(true, &CubicEtale::split()).unwrap();
        assert_eq!(rep.l1_embedding, crate::cohomology::Verdict::True);
        assert!(f3a_check(true, &CubicEtale::mixed(&int(2)).unwrap()).is_err());
        assert!(f3a_check(false, &CubicEtale::field(-2, 0, 0).unwrap()).is_err());
        let rep = f3a_check(false, &CubicEtale::field(-1, -3, 0).unwrap()).unwrap();
        assert_eq!(rep.l_shape, "cyclic");
        assert_eq!(rep.note, "f3=0 required for embedding");
    }
}
