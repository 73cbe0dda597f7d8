//! Verification engine: each algebraic identity is evaluated over all index
//! combinations of a generator family and summarised in a [`CheckReport`].
//!
//! The residual of one index combination is the Frobenius norm of
//! `LHS − RHS`; a report carries the maximum over combinations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{anticommutator, commutator, re, CMatrix, CScalar, Tolerance, I};
use crate::reps::{
    gamma5_projectors, j2, k2, pauli, project, rep22_jk, rep22_v, v2, GeneratorKind, GeneratorSet,
    RepTag, VectorParams,
};

/// Identities checked by the engine, declared in presentation order. The
/// derived `Ord` fixes how merged report lists are sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    /// `[Jⁱ, Jʲ] = iεⁱʲᵏJᵏ` in the fundamental.
    Su2Commutator,
    /// `{Jⁱ, Jʲ} = ½δⁱʲ𝟏` in the fundamental.
    Su2Anticommutator,
    /// `[Vᵘ, Jʲ] = iεᵘʲᵏVᵏ` for the two-dimensional vector matrices.
    VectorRotation2,
    /// Rotation/boost algebra in the two-dimensional representation.
    Lorentz2,
    /// `[Vⁱ, Kʲ]` is antisymmetric in the two-dimensional representation.
    VkAntisymmetry2,
    /// `[Vᵘ, Jʲ] = iεᵘʲᵏVᵏ` in the (2⊕2) representation.
    VectorRotation22,
    /// Rotation/boost algebra in the (2⊕2) representation.
    Lorentz22,
    /// Block form of `[Vⁱ, Kʲ]` as anticommutators of the fundamental.
    VectorBoostBlocks,
    /// `[Vⁱ, Kʲ] = −iδᵢⱼ α V⁴`.
    VectorBoostSpace,
    /// `[V⁴, Kʲ] = −(i/α) Vʲ`.
    VectorBoostTime,
    /// Both momentum branches of the (2⊕2) representation commute.
    MomentumCommute22,
    /// Rotation/boost algebra for an arbitrary representation.
    LorentzAlgebra,
    /// Vector covariance `[V, J]`, `[V, K]` for an arbitrary representation.
    VectorCovariance,
    /// `[Pᵘ, Pᵛ] = 0`.
    MomentumCommute,
    /// Extracted coefficient matrices equal the closed-form 4-vector generators.
    ExtractionClosedForm,
    /// Coefficient matrices obey the same commutators as the generators they came from.
    CoefficientTransfer,
    /// Rotation/boost algebra of the 4-vector generators.
    Lorentz4,
    /// Rotations keep spatial length and time.
    RotationInvariance,
    /// Rotation-then-boost keeps the interval.
    BoostInvariance,
    /// Translations act on coordinate differences trivially; the appended one survives.
    AffineTranslation,
    /// Composition of 5×5 affine transforms.
    AffineComposition,
    /// `−det(xᵘσᵘ)` equals the interval.
    DeterminantInterval,
    /// σⁱ/2 satisfy the fundamental commutators and anticommutators.
    PauliHalf,
    /// Gamma matrices are the vector matrices for c₊ = −2i, c₋ = 2i.
    GammaAsVector,
    /// Chirally projected gamma matrices are momentum matrices.
    ChiralMomentum,
    /// Affine 5×5 generators obey the Poincaré algebra.
    AffinePoincare,
    /// `D Vᵘ D⁻¹` mixes the vector matrices like a 4-vector.
    Intertwining,
    /// Structure constants reconstruct every commutator.
    StructureReconstruction,
    /// Adjoint matrices built from the structure constants close the algebra.
    AdjointClosure,
    /// Anticommutator reduces to a multiple of the identity (no d-symbols).
    AnticommutatorSimplicity,
}

impl IdentityId {
    pub fn as_str(&self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default()
    }

    /// Whether the identity belongs to the worked exercises rather than the
    /// main construction.
    pub fn is_exercise(&self) -> bool {
        matches!(
            self,
            IdentityId::DeterminantInterval
                | IdentityId::PauliHalf
                | IdentityId::GammaAsVector
                | IdentityId::ChiralMomentum
                | IdentityId::AffinePoincare
                | IdentityId::Intertwining
                | IdentityId::StructureReconstruction
                | IdentityId::AdjointClosure
                | IdentityId::AnticommutatorSimplicity
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str())
    }
}

/// Index combination with the largest residual of a failed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub description: String,
}

/// Outcome of one identity over all its index combinations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: IdentityId,
    /// Which clause of the identity, e.g. `[J,K]`.
    pub relation: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Residual of one index combination.
#[derive(Debug, Clone)]
pub struct Term {
    pub indices: Vec<usize>,
    pub residual: f64,
    pub description: String,
}

impl Term {
    pub fn new(indices: Vec<usize>, residual: f64, description: impl Into<String>) -> Self {
        Self {
            indices,
            residual,
            description: description.into(),
        }
    }
}

impl CheckReport {
    /// Folds term residuals into a report. NaN residuals count as failures.
    pub fn from_terms(
        identity: IdentityId,
        relation: impl Into<String>,
        tolerance: f64,
        terms: impl IntoIterator<Item = Term>,
    ) -> Self {
        let mut worst: Option<Term> = None;
        for t in terms {
            let replace = match &worst {
                None => true,
                Some(w) => t.residual.is_nan() && !w.residual.is_nan() || t.residual > w.residual,
            };
            if replace {
                worst = Some(t);
            }
        }
        let max_residual = worst.as_ref().map_or(0.0, |t| t.residual);
        let passed = max_residual < tolerance;
        let witness = if passed {
            None
        } else {
            worst.map(|t| Witness {
                indices: t.indices,
                description: t.description,
            })
        };
        Self {
            identity,
            relation: relation.into(),
            max_residual,
            tolerance,
            passed,
            witness,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

/// Levi-Civita symbol on 1-based indices, vanishing whenever an index is 4.
pub fn epsilon(i: usize, j: usize, k: usize) -> f64 {
    if i == j || j == k || i == k || i > 3 || j > 3 || k > 3 || i == 0 || j == 0 || k == 0 {
        return 0.0;
    }
    // Even permutations of (1, 2, 3) are cyclic shifts.
    if (j == i % 3 + 1) && (k == j % 3 + 1) {
        1.0
    } else {
        -1.0
    }
}

pub fn kronecker(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// Σ_k coeff(k) · members[k], with `k` 1-based.
pub(crate) fn combination(set: &[CMatrix], coeff: impl Fn(usize) -> CScalar) -> CMatrix {
    let dim = set[0].dim();
    set.iter()
        .enumerate()
        .fold(CMatrix::zeros(dim), |acc, (k, m)| {
            let z = coeff(k + 1);
            if z == re(0.0) {
                acc
            } else {
                &acc + &m.scale(z)
            }
        })
}

fn residual(lhs: &CMatrix, rhs: &CMatrix) -> f64 {
    (lhs - rhs).norm_fro()
}

fn require(set: &GeneratorSet, count: usize, name: &str) -> Result<()> {
    if set.len() != count {
        return Err(Error::Shape(format!(
            "{name} needs {count} members, got {}",
            set.len()
        )));
    }
    Ok(())
}

fn require_same_dim(sets: &[&GeneratorSet]) -> Result<()> {
    let dim = sets[0].dim();
    for s in sets {
        if s.dim() != dim {
            return Err(Error::Dim {
                expected: dim,
                found: s.dim(),
            });
        }
    }
    Ok(())
}

/// `[Aⁱ, Bʲ] = s · εⁱʲᵏ Cᵏ` over all nine (i, j).
fn epsilon_relation(
    identity: IdentityId,
    relation: &str,
    a: &GeneratorSet,
    b: &GeneratorSet,
    c_set: &GeneratorSet,
    scale: CScalar,
    tol: f64,
) -> CheckReport {
    let terms = (1..=3).flat_map(|i| {
        (1..=3).map(move |j| {
            let lhs = commutator(a.member(i), b.member(j)).expect("dims checked");
            let rhs = combination(c_set.members(), |k| scale * epsilon(i, j, k));
            Term::new(
                vec![i, j],
                residual(&lhs, &rhs),
                format!("{relation} at (i={i}, j={j})"),
            )
        })
    });
    CheckReport::from_terms(identity, relation, tol, terms)
}

fn lorentz_reports(
    identity: IdentityId,
    j: &GeneratorSet,
    k: &GeneratorSet,
    tol: f64,
) -> Vec<CheckReport> {
    vec![
        epsilon_relation(identity, "[J,J]", j, j, j, I, tol),
        epsilon_relation(identity, "[J,K]", j, k, k, I, tol),
        epsilon_relation(identity, "[K,K]", k, k, j, -I, tol),
    ]
}

/// Fundamental commutators of a three-member angular momentum set and, for
/// fundamental representations, the anticommutators `{Jⁱ, Jʲ} = ½δⁱʲ𝟏`.
pub fn check_su2_fundamental(j: &GeneratorSet, tol: &Tolerance) -> Result<Vec<CheckReport>> {
    if j.kind() != GeneratorKind::AngularMomentum {
        return Err(Error::Shape(format!(
            "expected angular momentum, got {:?}",
            j.kind()
        )));
    }
    require(j, 3, "J")?;
    let mut out = vec![epsilon_relation(
        IdentityId::Su2Commutator,
        "[J,J]",
        j,
        j,
        j,
        I,
        tol.abs_eps,
    )];
    if matches!(
        j.rep().tag(),
        RepTag::Rep2 | RepTag::SU3fund | RepTag::SUNfund
    ) {
        let one = CMatrix::identity(j.dim());
        let terms = (1..=3).flat_map(|a| {
            let one = &one;
            (1..=3).map(move |b| {
                let lhs = anticommutator(j.member(a), j.member(b)).expect("same set");
                let rhs = one.scale(re(0.5 * kronecker(a, b)));
                Term::new(
                    vec![a, b],
                    residual(&lhs, &rhs),
                    format!("{{J,J}} at (i={a}, j={b})"),
                )
            })
        });
        out.push(CheckReport::from_terms(
            IdentityId::Su2Anticommutator,
            "{J,J}",
            tol.abs_eps,
            terms,
        ));
    }
    Ok(out)
}

/// `[J,J]`, `[J,K]`, `[K,K]` relations. The identity id follows the
/// representation label of `j`.
pub fn check_lorentz(
    j: &GeneratorSet,
    k: &GeneratorSet,
    tol: &Tolerance,
) -> Result<Vec<CheckReport>> {
    require(j, 3, "J")?;
    require(k, 3, "K")?;
    require_same_dim(&[j, k])?;
    let identity = match j.rep().tag() {
        RepTag::Rep2 => IdentityId::Lorentz2,
        RepTag::Rep2plus2 => IdentityId::Lorentz22,
        RepTag::Rep4 => IdentityId::Lorentz4,
        _ => IdentityId::LorentzAlgebra,
    };
    Ok(lorentz_reports(identity, j, k, tol.abs_eps))
}

/// Coefficient of Vᵛ in `[Vᵘ, Kʲ]`: `−i(α δʲᵘ δ⁴ᵛ + α⁻¹ δʲᵛ δ⁴ᵘ)`.
pub fn boost_coefficient(mu: usize, j: usize, nu: usize, alpha: CScalar) -> CScalar {
    -I * (alpha * kronecker(j, mu) * kronecker(4, nu) + kronecker(j, nu) * kronecker(4, mu) / alpha)
}

fn vector_rotation(
    identity: IdentityId,
    v: &GeneratorSet,
    j: &GeneratorSet,
    tol: f64,
) -> CheckReport {
    let terms = (1..=4).flat_map(|mu| {
        (1..=3).map(move |jj| {
            let lhs = commutator(v.member(mu), j.member(jj)).expect("dims checked");
            let rhs = combination(v.members(), |k| I * epsilon(mu, jj, k));
            Term::new(
                vec![mu, jj],
                residual(&lhs, &rhs),
                format!("[V,J] at (mu={mu}, j={jj})"),
            )
        })
    });
    CheckReport::from_terms(identity, "[V,J]", tol, terms)
}

fn vector_boost(
    identity: IdentityId,
    v: &GeneratorSet,
    k: &GeneratorSet,
    alpha: CScalar,
    tol: f64,
) -> CheckReport {
    let terms = (1..=4).flat_map(|mu| {
        (1..=3).map(move |jj| {
            let lhs = commutator(v.member(mu), k.member(jj)).expect("dims checked");
            let rhs = combination(v.members(), |nu| boost_coefficient(mu, jj, nu, alpha));
            Term::new(
                vec![mu, jj],
                residual(&lhs, &rhs),
                format!("[V,K] at (mu={mu}, j={jj})"),
            )
        })
    });
    CheckReport::from_terms(identity, "[V,K]", tol, terms)
}

fn momenta_commute(
    identity: IdentityId,
    p: &GeneratorSet,
    relation: &str,
    tol: f64,
) -> CheckReport {
    let terms = (1..=4).flat_map(|mu| {
        (1..=4).map(move |nu| {
            let lhs = commutator(p.member(mu), p.member(nu)).expect("same set");
            Term::new(
                vec![mu, nu],
                lhs.norm_fro(),
                format!("{relation} at (mu={mu}, nu={nu})"),
            )
        })
    });
    CheckReport::from_terms(identity, relation, tol, terms)
}

/// Full Poincaré check: the rotation/boost algebra, both vector covariance
/// clauses, and mutual commutation of the vector set.
///
/// The commutation report is always emitted; it is expected to fail for
/// vector sets that are not momentum matrices.
pub fn check_poincare(
    j: &GeneratorSet,
    k: &GeneratorSet,
    v: &GeneratorSet,
    tol: &Tolerance,
    alpha: CScalar,
) -> Result<Vec<CheckReport>> {
    require(j, 3, "J")?;
    require(k, 3, "K")?;
    require(v, 4, "V")?;
    require_same_dim(&[j, k, v])?;
    if alpha.norm() == 0.0 {
        return Err(Error::Param("alpha must be nonzero".into()));
    }
    let mut out = lorentz_reports(IdentityId::LorentzAlgebra, j, k, tol.abs_eps);
    out.push(vector_rotation(
        IdentityId::VectorCovariance,
        v,
        j,
        tol.abs_eps,
    ));
    out.push(vector_boost(
        IdentityId::VectorCovariance,
        v,
        k,
        alpha,
        tol.abs_eps,
    ));
    let relation = match v.kind() {
        GeneratorKind::Momentum => "[P,P]",
        _ => "[V,V]",
    };
    out.push(momenta_commute(
        IdentityId::MomentumCommute,
        v,
        relation,
        tol.abs_eps,
    ));
    Ok(out)
}

/// Shows the two-dimensional representation cannot carry the Poincaré
/// algebra: with V and K both multiples of J, `[Vⁱ, Kʲ]` is antisymmetric
/// in (i, j) while the required form is symmetric.
///
/// The residual is the norm of the symmetric part over i ≠ j. The report
/// passes when that vanishes and the antisymmetric part does not.
pub fn check_2rep_vk_asymmetry(tol: &Tolerance) -> CheckReport {
    let v = v2(re(1.0), re(1.0));
    let k = k2();
    let comm = |i, j| commutator(v.member(i), k.member(j)).expect("same rep");
    let mut terms = Vec::new();
    let mut antisym = 0.0_f64;
    for i in 1..=3 {
        for j in 1..=3 {
            if i == j {
                terms.push(Term::new(
                    vec![i, i],
                    comm(i, i).norm_fro(),
                    format!("[V,K] at ({i},{i})"),
                ));
                continue;
            }
            let sym = &comm(i, j) + &comm(j, i);
            terms.push(Term::new(
                vec![i, j],
                sym.norm_fro(),
                format!("[V^{i},K^{j}] + [V^{j},K^{i}]"),
            ));
            antisym = antisym.max(comm(i, j).norm_fro());
        }
    }
    // Distance from the required Poincaré form [V^i, K^j] = −iδ_ij V^4.
    let poincare_gap = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .map(|(i, j)| residual(&comm(i, j), &v.member(4).scale(-I * kronecker(i, j))))
        .fold(0.0, f64::max);

    let mut report = CheckReport::from_terms(
        IdentityId::VkAntisymmetry2,
        "[V,K] symmetric part",
        tol.abs_eps,
        terms,
    );
    if antisym <= tol.abs_eps {
        report.passed = false;
        report.witness = Some(Witness {
            indices: vec![1, 2],
            description: "antisymmetric part vanished; nothing demonstrated".into(),
        });
    }
    report.with_note(format!(
        "antisymmetric part {antisym:.3e}; distance from the Poincare form {poincare_gap:.3e}"
    ))
}

/// `[Vᵘ, Jʲ] = iεᵘʲᵏVᵏ` for the two-dimensional vector matrices.
pub fn check_2rep_vector(scale: CScalar, time_scale: CScalar, tol: &Tolerance) -> CheckReport {
    vector_rotation(
        IdentityId::VectorRotation2,
        &v2(scale, time_scale),
        &j2(),
        tol.abs_eps,
    )
}

/// The (2⊕2) vector relations for given constants: covariance under
/// rotations, the block form of `[Vⁱ, Kʲ]`, and its reduction to V⁴ and Vʲ.
pub fn check_rep22_vector(p: &VectorParams, tol: &Tolerance) -> Result<Vec<CheckReport>> {
    let (j, k) = rep22_jk();
    let v = rep22_v(p)?;
    let eps = tol.abs_eps;

    let blocks = (1..=3).flat_map(|a| {
        let v = &v;
        let k = &k;
        (1..=3).map(move |b| {
            let lhs = commutator(v.member(a), k.member(b)).expect("same rep");
            let one = CMatrix::identity(2);
            let d = kronecker(a, b);
            let upper = one.scale(-I * p.c_plus * 0.5 * d);
            let lower = one.scale(I * p.c_minus * 0.5 * d);
            let zero = CMatrix::zeros(2);
            let rhs = CMatrix::from_blocks(&zero, &upper, &lower, &zero).expect("2x2 blocks");
            Term::new(
                vec![a, b],
                residual(&lhs, &rhs),
                format!("[V^{a},K^{b}] blocks"),
            )
        })
    });
    let space = (1..=3).flat_map(|a| {
        let v = &v;
        let k = &k;
        (1..=3).map(move |b| {
            let lhs = commutator(v.member(a), k.member(b)).expect("same rep");
            let rhs = v.member(4).scale(-I * p.alpha * kronecker(a, b));
            Term::new(vec![a, b], residual(&lhs, &rhs), format!("[V^{a},K^{b}]"))
        })
    });
    let time = (1..=3).map(|b| {
        let lhs = commutator(v.member(4), k.member(b)).expect("same rep");
        let rhs = v.member(b).scale(-I / p.alpha);
        Term::new(vec![4, b], residual(&lhs, &rhs), format!("[V^4,K^{b}]"))
    });

    Ok(vec![
        vector_rotation(IdentityId::VectorRotation22, &v, &j, eps),
        CheckReport::from_terms(
            IdentityId::VectorBoostBlocks,
            "[V^i,K^j] blocks",
            eps,
            blocks,
        ),
        CheckReport::from_terms(IdentityId::VectorBoostSpace, "[V^i,K^j]", eps, space),
        CheckReport::from_terms(IdentityId::VectorBoostTime, "[V^4,K^j]", eps, time),
    ])
}

/// Mutual commutation of a momentum set, reported under the (2⊕2) id.
pub fn check_momentum_commute(p: &GeneratorSet, tol: &Tolerance) -> Result<CheckReport> {
    require(p, 4, "P")?;
    Ok(momenta_commute(
        IdentityId::MomentumCommute22,
        p,
        "[P,P]",
        tol.abs_eps,
    ))
}

/// σⁱ/2 built straight from the Pauli table satisfy both fundamental relations.
pub fn check_pauli_half(tol: &Tolerance) -> Result<CheckReport> {
    let members = (1..=3)
        .map(|i| pauli(i).map(|s| s.scale(re(0.5))))
        .collect::<Result<Vec<_>>>()?;
    let j = GeneratorSet::new(j2().rep(), GeneratorKind::AngularMomentum, members)?;
    let reports = check_su2_fundamental(&j, tol)?;
    let terms = reports
        .iter()
        .map(|r| Term::new(vec![], r.max_residual, r.relation.clone()));
    Ok(CheckReport::from_terms(
        IdentityId::PauliHalf,
        "[J,J] and {J,J} for sigma/2",
        tol.abs_eps,
        terms,
    ))
}

/// Projects a vector set with ½(𝟏 ± γ⁵) and checks both projections are
/// momentum matrices: covariance under J and K plus mutual commutation.
pub fn check_chiral_projection(
    v: &GeneratorSet,
    alpha: CScalar,
    tol: &Tolerance,
) -> Result<Vec<CheckReport>> {
    let (j, k) = rep22_jk();
    let (plus, minus) = gamma5_projectors();
    let mut out = Vec::new();
    for (name, proj) in [("+", &plus), ("-", &minus)] {
        let p = project(proj, v)?;
        let eps = tol.abs_eps;
        let mut rot = vector_rotation(IdentityId::ChiralMomentum, &p, &j, eps);
        rot.relation = format!("[P{name},J]");
        let mut boost = vector_boost(IdentityId::ChiralMomentum, &p, &k, alpha, eps);
        boost.relation = format!("[P{name},K]");
        let comm = momenta_commute(
            IdentityId::ChiralMomentum,
            &p,
            &format!("[P{name},P{name}]"),
            eps,
        );
        out.extend([rot, boost, comm]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;
    use crate::reps::{gamma, momentum, Branch, RepLabel};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(1, 2, 3), 1.0);
        assert_eq!(epsilon(2, 3, 1), 1.0);
        assert_eq!(epsilon(3, 1, 2), 1.0);
        assert_eq!(epsilon(1, 3, 2), -1.0);
        assert_eq!(epsilon(3, 2, 1), -1.0);
        assert_eq!(epsilon(1, 1, 2), 0.0);
        assert_eq!(epsilon(4, 1, 2), 0.0);
    }

    #[test]
    fn su2_fundamental_passes() {
        let reports = check_su2_fundamental(&j2(), &tol()).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert!(r.passed, "{r:?}");
            assert!(r.max_residual < 1e-14);
            assert!(r.witness.is_none());
        }
    }

    #[test]
    fn unhalved_member_fails_with_witness() {
        let j = j2();
        let mut members = j.members().to_vec();
        members[0] = pauli(1).unwrap();
        let broken = GeneratorSet::new(j.rep(), GeneratorKind::AngularMomentum, members).unwrap();
        let reports = check_su2_fundamental(&broken, &tol()).unwrap();
        assert!(!reports[0].passed);
        assert_eq!(reports[0].witness.as_ref().unwrap().indices, vec![1, 2]);
    }

    #[test]
    fn wrong_kind_or_count_is_shape_error() {
        assert!(matches!(
            check_su2_fundamental(&k2(), &tol()),
            Err(Error::Shape(_))
        ));
        let two = GeneratorSet::new(
            RepLabel::fixed(RepTag::Rep2),
            GeneratorKind::AngularMomentum,
            j2().members()[..2].to_vec(),
        )
        .unwrap();
        assert!(matches!(
            check_su2_fundamental(&two, &tol()),
            Err(Error::Shape(_))
        ));
        assert!(check_lorentz(&two, &k2(), &tol()).is_err());
        let (j, k) = rep22_jk();
        assert!(matches!(
            check_lorentz(&j2(), &k, &tol()),
            Err(Error::Dim { .. })
        ));
        assert!(check_poincare(&j, &k, &j, &tol(), re(1.)).is_err());
    }

    #[test]
    fn lorentz_in_both_reps() {
        let r2 = check_lorentz(&j2(), &k2(), &tol()).unwrap();
        assert!(r2
            .iter()
            .all(|r| r.passed && r.identity == IdentityId::Lorentz2));
        let (j, k) = rep22_jk();
        let r22 = check_lorentz(&j, &k, &tol()).unwrap();
        assert!(r22
            .iter()
            .all(|r| r.passed && r.identity == IdentityId::Lorentz22));
    }

    #[test]
    fn poincare_momentum_and_generic_vector() {
        let (j, k) = rep22_jk();
        let p = momentum(
            &VectorParams::new(re(1.), re(0.), re(1.)).unwrap(),
            Branch::Plus,
        )
        .unwrap();
        let reports = check_poincare(&j, &k, &p, &tol(), re(1.)).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(|r| r.passed), "{reports:#?}");

        let v = rep22_v(&VectorParams::new(c(0.3, 1.), c(-0.7, 0.2), re(1.)).unwrap()).unwrap();
        let reports = check_poincare(&j, &k, &v, &tol(), re(1.)).unwrap();
        for r in &reports {
            let expect = r.identity != IdentityId::MomentumCommute;
            assert_eq!(r.passed, expect, "{r:?}");
        }
    }

    #[test]
    fn poincare_alpha_mismatch_fails() {
        let (j, k) = rep22_jk();
        let v = rep22_v(&VectorParams::with_alpha(re(2.)).unwrap()).unwrap();
        assert!(check_poincare(&j, &k, &v, &tol(), re(2.)).unwrap()[..5]
            .iter()
            .all(|r| r.passed));
        let wrong = check_poincare(&j, &k, &v, &tol(), re(1.)).unwrap();
        assert!(!wrong[4].passed);
    }

    #[test]
    fn asymmetry_demonstrated() {
        let r = check_2rep_vk_asymmetry(&tol());
        assert!(r.passed, "{r:?}");
        assert!(r.note.unwrap().contains("antisymmetric part 7.071e-1"));
    }

    #[test]
    fn two_rep_vector_for_arbitrary_constants() {
        for (a, b) in [
            (re(1.), re(1.)),
            (c(0.4, -2.), c(3., 0.1)),
            (re(0.), re(5.)),
        ] {
            assert!(check_2rep_vector(a, b, &tol()).passed);
        }
    }

    #[test]
    fn rep22_vector_relations() {
        for p in [
            VectorParams::default(),
            VectorParams::new(c(0.3, 1.), c(-0.7, 0.2), c(-1., 0.)).unwrap(),
            VectorParams::new(re(2.), re(-5.), re(2.)).unwrap(),
        ] {
            let reports = check_rep22_vector(&p, &tol()).unwrap();
            assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
        }
    }

    #[test]
    fn pauli_half_and_chiral() {
        assert!(check_pauli_half(&tol()).unwrap().passed);
        let reports = check_chiral_projection(&gamma(), re(1.), &tol()).unwrap();
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(|r| r.passed));
    }

    #[test]
    fn report_json_line() {
        let r = check_2rep_vector(re(1.), re(1.), &tol());
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["identity"], "vector_rotation2");
        assert_eq!(v["passed"], true);
        assert!(v["witness"].is_null());
    }

    #[test]
    fn nan_residual_fails() {
        let r = CheckReport::from_terms(
            IdentityId::Lorentz4,
            "x",
            1e-12,
            [
                Term::new(vec![1], 0.0, "a"),
                Term::new(vec![2], f64::NAN, "b"),
            ],
        );
        assert!(!r.passed);
        assert_eq!(r.witness.unwrap().indices, vec![2]);
    }
}
