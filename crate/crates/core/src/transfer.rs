//! Carrying the rotation/boost algebra from the (2⊕2) representation to the
//! 4-vector representation.
//!
//! Commutators of the vector matrices with a generator are expanded back on
//! the vector matrices, `[Vᵘ, Aⁱ] = aᵘⁱᵛ Vᵛ`, and the coefficient slices
//! `(aⁱ)ᵤᵥ = aᵘⁱᵛ` become the new generators. The four 4×4 vector matrices
//! are linearly dependent as 16-component objects, so the expansion is done
//! per 2×2 off-diagonal block, where the four blocks are independent.

use serde::{Deserialize, Serialize};

use crate::check::{check_lorentz, epsilon, kronecker, CheckReport, IdentityId, Term};
use crate::error::{Error, Result};
use crate::linalg::{
    commutator, decompose_in_basis, frobenius_distance, re, CMatrix, CScalar, Tolerance, I,
};
use crate::reps::{rep22_jk, rep22_v, GeneratorKind, GeneratorSet, RepLabel, RepTag, VectorParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SourceKind {
    FromJ,
    FromK,
    /// Any other generator family.
    Other,
}

/// Three-index coefficients `aᵘⁱᵛ` with μ, ν in 1..=4 and i in 1..=3.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTensor {
    values: [[[CScalar; 4]; 3]; 4],
    source_kind: SourceKind,
    /// Set when only one off-diagonal block family was available.
    single_block: bool,
}

impl CoeffTensor {
    pub fn source_kind(&self) -> SourceKind {
        self.source_kind
    }

    /// True if extraction ran on one block family only (momentum input), so
    /// the upper/lower consistency check was skipped.
    pub fn single_block(&self) -> bool {
        self.single_block
    }

    /// Coefficient `aᵘⁱᵛ`, 1-based.
    pub fn get(&self, mu: usize, i: usize, nu: usize) -> CScalar {
        self.values[mu - 1][i - 1][nu - 1]
    }

    /// The 4×4 matrix with (μ, ν) entry `aᵘⁱᵛ`.
    pub fn slice(&self, i: usize) -> CMatrix {
        CMatrix::from_fn(4, |mu, nu| self.values[mu][i - 1][nu])
    }

    /// All three slices as a generator set in the 4-vector representation.
    pub fn to_generators(&self, kind: GeneratorKind) -> Result<GeneratorSet> {
        GeneratorSet::new(
            RepLabel::fixed(RepTag::Rep4),
            kind,
            (1..=3).map(|i| self.slice(i)).collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Serialize)]
struct CoeffTensorJson {
    source_kind: SourceKind,
    values: Vec<Vec<Vec<[f64; 2]>>>,
}

impl Serialize for CoeffTensor {
    /// `{"source_kind": ..., "values": [[[re,im] x4] x3] x4}` ordered (μ, i, ν).
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values = self
            .values
            .iter()
            .map(|per_i| {
                per_i
                    .iter()
                    .map(|per_nu| per_nu.iter().map(|z| [z.re, z.im]).collect())
                    .collect()
            })
            .collect();
        CoeffTensorJson {
            source_kind: self.source_kind,
            values,
        }
        .serialize(s)
    }
}

/// Upper-right and lower-left 2×2 blocks of an off-diagonal 4×4 matrix.
fn split_blocks(m: &CMatrix) -> (CMatrix, CMatrix) {
    (m.block(0, 2, 2), m.block(2, 0, 2))
}

fn diagonal_weight(m: &CMatrix) -> f64 {
    m.block(0, 0, 2).norm_fro().max(m.block(2, 2, 2).norm_fro())
}

/// Extracts `[Vᵘ, Aⁱ] = aᵘⁱᵛ Vᵛ` block by block.
///
/// When both block families are nonzero the upper and lower expansions
/// must agree; with a single nonzero family (momentum matrices) that family
/// alone is used and the other block of every commutator must vanish.
pub fn extract_coeffs(v: &GeneratorSet, a: &GeneratorSet, tol: &Tolerance) -> Result<CoeffTensor> {
    if v.len() != 4 || v.dim() != 4 {
        return Err(Error::Shape(
            "vector set must hold four 4x4 matrices".into(),
        ));
    }
    if a.len() != 3 || a.dim() != 4 {
        return Err(Error::Shape(
            "generator set must hold three 4x4 matrices".into(),
        ));
    }
    let eps = tol.abs_eps;
    for (k, m) in v.members().iter().enumerate() {
        if diagonal_weight(m) > eps {
            return Err(Error::Shape(format!(
                "vector matrix {} is not block off-diagonal",
                k + 1
            )));
        }
    }
    let (upper, lower): (Vec<CMatrix>, Vec<CMatrix>) = v.members().iter().map(split_blocks).unzip();
    let has_upper = upper.iter().any(|b| b.norm_fro() > eps);
    let has_lower = lower.iter().any(|b| b.norm_fro() > eps);
    if !has_upper && !has_lower {
        return Err(Error::Basis("vector matrices vanish".into()));
    }

    let mut values = [[[re(0.0); 4]; 3]; 4];
    for mu in 1..=4 {
        for i in 1..=3 {
            let comm = commutator(v.member(mu), a.member(i))?;
            let off = diagonal_weight(&comm);
            if off > eps {
                return Err(Error::NotVClosed {
                    mu,
                    i,
                    residual: off,
                });
            }
            let (cu, cl) = split_blocks(&comm);
            let solve = |target: &CMatrix, basis: &[CMatrix]| -> Result<Vec<CScalar>> {
                let d = decompose_in_basis(target, basis)?;
                if d.residual > eps {
                    return Err(Error::NotVClosed {
                        mu,
                        i,
                        residual: d.residual,
                    });
                }
                Ok(d.coeffs)
            };
            let coeffs = match (has_upper, has_lower) {
                (true, true) => {
                    let up = solve(&cu, &upper)?;
                    let lo = solve(&cl, &lower)?;
                    let diff = up
                        .iter()
                        .zip(&lo)
                        .map(|(x, y)| (x - y).norm())
                        .fold(0.0, f64::max);
                    if diff > eps {
                        return Err(Error::InconsistentBlocks { mu, i, diff });
                    }
                    up
                }
                (true, false) => {
                    if cl.norm_fro() > eps {
                        return Err(Error::NotVClosed {
                            mu,
                            i,
                            residual: cl.norm_fro(),
                        });
                    }
                    solve(&cu, &upper)?
                }
                (false, true) => {
                    if cu.norm_fro() > eps {
                        return Err(Error::NotVClosed {
                            mu,
                            i,
                            residual: cu.norm_fro(),
                        });
                    }
                    solve(&cl, &lower)?
                }
                (false, false) => unreachable!(),
            };
            values[mu - 1][i - 1].copy_from_slice(&coeffs);
        }
    }
    let source_kind = match a.kind() {
        GeneratorKind::AngularMomentum => SourceKind::FromJ,
        GeneratorKind::Boost => SourceKind::FromK,
        _ => SourceKind::Other,
    };
    Ok(CoeffTensor {
        values,
        source_kind,
        single_block: !(has_upper && has_lower),
    })
}

/// 4-vector rotation generators, `(J⁽⁴⁾ⁱ)ᵨᵤ = i ε^{ρiμ}`.
pub fn build_j4() -> GeneratorSet {
    let members = (1..=3)
        .map(|i| CMatrix::from_fn(4, |r, m| I * epsilon(r + 1, i, m + 1)))
        .collect();
    GeneratorSet::new(
        RepLabel::fixed(RepTag::Rep4),
        GeneratorKind::AngularMomentum,
        members,
    )
    .expect("closed form is hermitian and traceless")
}

/// 4-vector boost generators, `(K⁽⁴⁾ⁱ)ₐᵦ = −i(δᵢₐδ₄ᵦ + δᵢᵦδ₄ₐ)`.
pub fn build_k4() -> GeneratorSet {
    build_k4_alpha(re(1.0))
}

/// Boost generators for a general space/time ratio:
/// `(Kⁱ)ᵤᵥ = −i(α δⁱᵘ δ⁴ᵛ + α⁻¹ δⁱᵛ δ⁴ᵘ)`. Equal to [`build_k4`] at α = 1.
pub fn build_k4_alpha(alpha: CScalar) -> GeneratorSet {
    let members = (1..=3)
        .map(|i| {
            CMatrix::from_fn(4, |r, col| {
                let (mu, nu) = (r + 1, col + 1);
                -I * (alpha * kronecker(i, mu) * kronecker(4, nu)
                    + kronecker(i, nu) * kronecker(4, mu) / alpha)
            })
        })
        .collect();
    GeneratorSet::new(RepLabel::fixed(RepTag::Rep4), GeneratorKind::Boost, members)
        .expect("three 4x4 members")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    J,
    K,
}

/// Structure constants of the rotation/boost algebra, tabulated:
/// `[Aⁱ, Bᵏ] = s · εⁱᵏⁿ Cⁿ`, returned as (s, C).
fn structure(a: Family, b: Family) -> (CScalar, Family) {
    match (a, b) {
        (Family::J, Family::J) => (I, Family::J),
        (Family::J, Family::K) => (I, Family::K),
        (Family::K, Family::J) => (I, Family::K),
        (Family::K, Family::K) => (-I, Family::J),
    }
}

/// Checks that extracted coefficient matrices obey the same commutators as
/// the generators they were extracted from, for every ordered pair of
/// families drawn from {J, K}.
pub fn verify_transfer_with(
    v: &GeneratorSet,
    j: &GeneratorSet,
    k: &GeneratorSet,
    tol: &Tolerance,
) -> Result<Vec<CheckReport>> {
    let a_j = extract_coeffs(v, j, tol)?;
    let a_k = extract_coeffs(v, k, tol)?;
    let coeff = |f: Family| match f {
        Family::J => &a_j,
        Family::K => &a_k,
    };
    let name = |f: Family| match f {
        Family::J => "J",
        Family::K => "K",
    };
    let mut out = Vec::new();
    for a in [Family::J, Family::K] {
        for b in [Family::J, Family::K] {
            let (s, c_fam) = structure(a, b);
            let terms = (1..=3).flat_map(|i| {
                (1..=3).map(move |kk| {
                    let lhs = commutator(&coeff(a).slice(i), &coeff(b).slice(kk)).expect("4x4");
                    let rhs = (1..=3).fold(CMatrix::zeros(4), |acc, n| {
                        &acc + &coeff(c_fam).slice(n).scale(s * epsilon(i, kk, n))
                    });
                    Term::new(vec![i, kk], (&lhs - &rhs).norm_fro(), format!("({i},{kk})"))
                })
            });
            let relation = format!(
                "[{}_coef,{}_coef]",
                name(a).to_lowercase(),
                name(b).to_lowercase()
            );
            out.push(CheckReport::from_terms(
                IdentityId::CoefficientTransfer,
                relation,
                tol.abs_eps,
                terms,
            ));
        }
    }
    Ok(out)
}

/// Compares extracted coefficient slices with closed-form generators.
pub fn closed_form_report(
    extracted: &CoeffTensor,
    closed: &GeneratorSet,
    relation: &str,
    tol: &Tolerance,
) -> CheckReport {
    let terms = (1..=3).map(|i| {
        let d = frobenius_distance(&extracted.slice(i), closed.member(i)).expect("4x4");
        Term::new(vec![i], d, format!("slice {i}"))
    });
    let report = CheckReport::from_terms(
        IdentityId::ExtractionClosedForm,
        relation,
        tol.abs_eps,
        terms,
    );
    if extracted.single_block() {
        report.with_note("single block family; upper/lower consistency not applicable")
    } else {
        report
    }
}

/// Transfer on the canonical inputs (gamma matrices with the (2⊕2) J and
/// K): closed-form agreement of the slices, the transferred commutators,
/// and the 4-vector algebra of the closed forms themselves.
pub fn verify_transfer(tol: &Tolerance) -> Result<Vec<CheckReport>> {
    let (j, k) = rep22_jk();
    let v = rep22_v(&VectorParams::default())?;
    let mut out = vec![
        closed_form_report(&extract_coeffs(&v, &j, tol)?, &build_j4(), "J4", tol),
        closed_form_report(&extract_coeffs(&v, &k, tol)?, &build_k4(), "K4", tol),
    ];
    out.extend(verify_transfer_with(&v, &j, &k, tol)?);
    let mut lorentz = check_lorentz(&build_j4(), &build_k4(), tol)?;
    if let Some(kk) = lorentz.iter_mut().find(|r| r.relation == "[K,K]") {
        kk.note = Some(
            "checked against -i eps^{ijk} J^k; the form with K^k on the right does not hold".into(),
        );
    }
    out.extend(lorentz);
    Ok(out)
}
