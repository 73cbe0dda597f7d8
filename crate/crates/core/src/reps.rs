//! Concrete generator families: Pauli matrices, the two-dimensional
//! rotation/boost/vector matrices, the block-doubled (2⊕2) representation,
//! its momentum matrices, and the Dirac gamma matrices with their chiral
//! projectors.
//!
//! Members are indexed from 1, matching the usual physics labels: spatial
//! indices run 1..=3 and index 4 is time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, re, CMatrix, CScalar, I};

/// Hermiticity/tracelessness slack accepted when building angular momentum sets.
const GENERATOR_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepTag {
    /// Fundamental two-dimensional representation of SU(2).
    Rep2,
    /// Block-diagonal sum of two fundamentals.
    Rep2plus2,
    /// Four-vector representation of spacetime.
    Rep4,
    /// Four-vector with an appended scalar for translations.
    Rep5affine,
    SU3fund,
    SU3adjoint,
    /// Fundamental of SU(N) for general N.
    SUNfund,
    /// Adjoint of SU(N) for general N.
    SUNadjoint,
    /// Hand-assembled sets with no particular label.
    Custom,
}

impl RepTag {
    fn fixed_dim(self) -> Option<usize> {
        match self {
            RepTag::Rep2 => Some(2),
            RepTag::Rep2plus2 | RepTag::Rep4 => Some(4),
            RepTag::Rep5affine => Some(5),
            RepTag::SU3fund => Some(3),
            RepTag::SU3adjoint => Some(8),
            RepTag::SUNfund | RepTag::SUNadjoint | RepTag::Custom => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RepLabel {
    tag: RepTag,
    dim: usize,
}

impl RepLabel {
    pub fn new(tag: RepTag, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Param(
                "representation dimension must be positive".into(),
            ));
        }
        if let Some(expected) = tag.fixed_dim() {
            if expected != dim {
                return Err(Error::Dim {
                    expected,
                    found: dim,
                });
            }
        }
        Ok(Self { tag, dim })
    }

    /// Label for a tag with a fixed dimension.
    pub fn fixed(tag: RepTag) -> Self {
        let dim = tag.fixed_dim().expect("tag has no fixed dimension");
        Self { tag, dim }
    }

    pub fn tag(&self) -> RepTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    AngularMomentum,
    Boost,
    Vector,
    Momentum,
}

/// A labeled family of generators sharing one representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GeneratorSetLiteral", into = "GeneratorSetLiteral")]
pub struct GeneratorSet {
    rep: RepLabel,
    kind: GeneratorKind,
    members: Vec<CMatrix>,
}

impl GeneratorSet {
    /// Validates member count and dimensions; angular momentum members must
    /// also be hermitian and traceless.
    pub fn new(rep: RepLabel, kind: GeneratorKind, members: Vec<CMatrix>) -> Result<Self> {
        let count_ok = match kind {
            GeneratorKind::Vector | GeneratorKind::Momentum => members.len() == 4,
            GeneratorKind::Boost => members.len() == 3,
            GeneratorKind::AngularMomentum => !members.is_empty(),
        };
        if !count_ok {
            return Err(Error::Shape(format!(
                "{kind:?} set cannot have {} members",
                members.len()
            )));
        }
        for m in &members {
            if m.dim() != rep.dim() {
                return Err(Error::Dim {
                    expected: rep.dim(),
                    found: m.dim(),
                });
            }
        }
        if kind == GeneratorKind::AngularMomentum {
            for (k, m) in members.iter().enumerate() {
                if !m.is_hermitian(GENERATOR_EPS) || m.trace().norm() > GENERATOR_EPS {
                    return Err(Error::Param(format!(
                        "angular momentum member {} is not hermitian and traceless",
                        k + 1
                    )));
                }
            }
        }
        Ok(Self { rep, kind, members })
    }

    /// Copy with one entry of one member shifted by `delta`, bypassing the
    /// hermiticity check. Negative controls use this to break a set.
    pub fn perturbed(&self, member: usize, row: usize, col: usize, delta: CScalar) -> Self {
        let mut out = self.clone();
        out.members[member - 1] = out.members[member - 1].perturbed(row, col, delta);
        out
    }

    pub fn rep(&self) -> RepLabel {
        self.rep
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member by its 1-based physics index.
    pub fn member(&self, index: usize) -> &CMatrix {
        assert!(
            (1..=self.members.len()).contains(&index),
            "member index {index} out of range 1..={}",
            self.members.len()
        );
        &self.members[index - 1]
    }

    pub fn members(&self) -> &[CMatrix] {
        &self.members
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorSetLiteral {
    rep: RepTag,
    kind: GeneratorKind,
    members: Vec<CMatrix>,
}

impl From<GeneratorSet> for GeneratorSetLiteral {
    fn from(g: GeneratorSet) -> Self {
        Self {
            rep: g.rep.tag,
            kind: g.kind,
            members: g.members,
        }
    }
}

impl TryFrom<GeneratorSetLiteral> for GeneratorSet {
    type Error = Error;

    fn try_from(lit: GeneratorSetLiteral) -> Result<Self> {
        let dim = lit
            .members
            .first()
            .map(CMatrix::dim)
            .ok_or_else(|| Error::Shape("generator set has no members".into()))?;
        GeneratorSet::new(RepLabel::new(lit.rep, dim)?, lit.kind, lit.members)
    }
}

/// Constants of the (2⊕2) vector matrices: the block scales `c_plus`,
/// `c_minus` and the space/time ratio `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorParams {
    pub c_plus: CScalar,
    pub c_minus: CScalar,
    pub alpha: CScalar,
}

impl VectorParams {
    pub fn new(c_plus: CScalar, c_minus: CScalar, alpha: CScalar) -> Result<Self> {
        if alpha.norm() == 0.0 {
            return Err(Error::Param("alpha must be nonzero".into()));
        }
        Ok(Self {
            c_plus,
            c_minus,
            alpha,
        })
    }

    /// The gamma-matrix constants with a different `alpha`.
    pub fn with_alpha(alpha: CScalar) -> Result<Self> {
        let d = Self::default();
        Self::new(d.c_plus, d.c_minus, alpha)
    }
}

impl Default for VectorParams {
    /// `c₊ = −2i`, `c₋ = +2i`, `α = 1`: the values for which the vector
    /// matrices coincide with [`gamma`].
    fn default() -> Self {
        Self {
            c_plus: c(0.0, -2.0),
            c_minus: c(0.0, 2.0),
            alpha: re(1.0),
        }
    }
}

/// Which off-diagonal block a momentum set occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

/// Pauli matrix σⁱ for `i` in 1..=4, with σ⁴ the unit matrix.
pub fn pauli(i: usize) -> Result<CMatrix> {
    let z = re(0.0);
    let one = re(1.0);
    let rows = match i {
        1 => vec![vec![z, one], vec![one, z]],
        2 => vec![vec![z, -I], vec![I, z]],
        3 => vec![vec![one, z], vec![z, -one]],
        4 => vec![vec![one, z], vec![z, one]],
        _ => {
            return Err(Error::Index {
                index: i,
                lo: 1,
                hi: 4,
            })
        }
    };
    CMatrix::from_rows(rows)
}

fn sigma(i: usize) -> CMatrix {
    pauli(i).expect("pauli index in range")
}

fn set(tag: RepTag, kind: GeneratorKind, members: Vec<CMatrix>) -> GeneratorSet {
    GeneratorSet::new(RepLabel::fixed(tag), kind, members).expect("factory output is valid")
}

/// Jⁱ = σⁱ/2.
pub fn j2() -> GeneratorSet {
    set(
        RepTag::Rep2,
        GeneratorKind::AngularMomentum,
        (1..=3).map(|i| sigma(i).scale(re(0.5))).collect(),
    )
}

/// Kⁱ = +i Jⁱ in the two-dimensional representation.
pub fn k2() -> GeneratorSet {
    set(
        RepTag::Rep2,
        GeneratorKind::Boost,
        j2().members().iter().map(|j| j.scale(I)).collect(),
    )
}

/// Vᵘ = {c J¹, c J², c J³, c⁴ 𝟏}.
pub fn v2(scale: CScalar, time_scale: CScalar) -> GeneratorSet {
    let j = j2();
    let mut members: Vec<CMatrix> = j.members().iter().map(|m| m.scale(scale)).collect();
    members.push(CMatrix::identity(2).scale(time_scale));
    set(RepTag::Rep2, GeneratorKind::Vector, members)
}

fn block_diag(upper: &CMatrix, lower: &CMatrix) -> CMatrix {
    let z = CMatrix::zeros(upper.dim());
    CMatrix::from_blocks(upper, &z, &z, lower).expect("blocks share a dimension")
}

fn off_diag(upper: &CMatrix, lower: &CMatrix) -> CMatrix {
    let z = CMatrix::zeros(upper.dim());
    CMatrix::from_blocks(&z, upper, lower, &z).expect("blocks share a dimension")
}

/// Rotation and boost generators of the (2⊕2) representation:
/// J = diag(J₂, J₂), K = diag(+K₂, −K₂).
pub fn rep22_jk() -> (GeneratorSet, GeneratorSet) {
    let j = j2();
    let k = k2();
    let jj = j.members().iter().map(|m| block_diag(m, m)).collect();
    let kk = k.members().iter().map(|m| block_diag(m, &-m)).collect();
    (
        set(RepTag::Rep2plus2, GeneratorKind::AngularMomentum, jj),
        set(RepTag::Rep2plus2, GeneratorKind::Boost, kk),
    )
}

/// Upper and lower 2×2 blocks of the (2⊕2) vector matrices:
/// V₊ = c₊{J¹, J², J³, 𝟏/(2α)}, V₋ = c₋{J¹, J², J³, −𝟏/(2α)}.
fn vector_blocks(p: &VectorParams) -> (Vec<CMatrix>, Vec<CMatrix>) {
    let j = j2();
    let half_inv_alpha = re(0.5) / p.alpha;
    let family = |scale: CScalar, time_sign: f64| -> Vec<CMatrix> {
        let mut out: Vec<CMatrix> = j.members().iter().map(|m| m.scale(scale)).collect();
        out.push(CMatrix::identity(2).scale(scale * half_inv_alpha * time_sign));
        out
    };
    (family(p.c_plus, 1.0), family(p.c_minus, -1.0))
}

/// Off-block-diagonal vector matrices of the (2⊕2) representation.
pub fn rep22_v(p: &VectorParams) -> Result<GeneratorSet> {
    let p = VectorParams::new(p.c_plus, p.c_minus, p.alpha)?;
    let (upper, lower) = vector_blocks(&p);
    let members = upper
        .iter()
        .zip(&lower)
        .map(|(u, l)| off_diag(u, l))
        .collect();
    Ok(set(RepTag::Rep2plus2, GeneratorKind::Vector, members))
}

/// Momentum matrices: vector matrices with a single nonzero off-diagonal
/// block. The `Plus` branch needs `c_minus = 0`, the `Minus` branch `c_plus = 0`.
pub fn momentum(p: &VectorParams, branch: Branch) -> Result<GeneratorSet> {
    let p = VectorParams::new(p.c_plus, p.c_minus, p.alpha)?;
    let stray = match branch {
        Branch::Plus => p.c_minus,
        Branch::Minus => p.c_plus,
    };
    if stray.norm() != 0.0 {
        return Err(Error::Param(format!(
            "{branch:?} momentum matrices need the other block constant to vanish (got {stray})"
        )));
    }
    let (upper, lower) = vector_blocks(&p);
    let z = CMatrix::zeros(2);
    let members = upper
        .iter()
        .zip(&lower)
        .map(|(u, l)| match branch {
            Branch::Plus => off_diag(u, &z),
            Branch::Minus => off_diag(&z, l),
        })
        .collect();
    Ok(set(RepTag::Rep2plus2, GeneratorKind::Momentum, members))
}

/// Dirac gamma matrices γⁱ = −i[[0, σⁱ], [−σⁱ, 0]], γ⁴ = −i[[0, 𝟏], [𝟏, 0]].
pub fn gamma() -> GeneratorSet {
    let mut members: Vec<CMatrix> = (1..=3)
        .map(|i| off_diag(&sigma(i), &-&sigma(i)).scale(-I))
        .collect();
    members.push(off_diag(&sigma(4), &sigma(4)).scale(-I));
    set(RepTag::Rep2plus2, GeneratorKind::Vector, members)
}

/// γ⁵ = −i γ⁴γ¹γ²γ³.
pub fn gamma5() -> CMatrix {
    let g = gamma();
    let prod = &(&(g.member(4) * g.member(1)) * g.member(2)) * g.member(3);
    prod.scale(-I)
}

/// Chiral projectors ½(𝟏 ± γ⁵).
pub fn gamma5_projectors() -> (CMatrix, CMatrix) {
    let one = CMatrix::identity(4);
    let g5 = gamma5();
    ((&one + &g5).scale(re(0.5)), (&one - &g5).scale(re(0.5)))
}

/// Left-multiplies every member of a (2⊕2) vector set by a projector.
pub fn project(projector: &CMatrix, v: &GeneratorSet) -> Result<GeneratorSet> {
    let members = v
        .members()
        .iter()
        .map(|m| projector.try_mul(m))
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(v.rep(), GeneratorKind::Momentum, members)
}
