//! SU(N) structure constants from commutators and anticommutators, the
//! adjoint representation they generate, and the anticommutator terms that
//! keep the boost construction from carrying over beyond SU(2).
//!
//! With generators normalised as `tr(JᵃJᵇ) = k δᵃᵇ`, the trace formulas
//!
//! ```text
//! fᵃᵇᶜ = −i tr([Jᵃ, Jᵇ] Jᶜ) / k
//! dᵃᵇᶜ =    tr({Jᵃ, Jᵇ} Jᶜ) / k
//! ```
//!
//! are exact, and tracing `{Jᵃ, Jᵃ}` gives the identity coefficient `2k/N`.

use serde::{Deserialize, Serialize};

use crate::check::{CheckReport, IdentityId, Term};
use crate::error::{Error, Result};
use crate::linalg::{anticommutator, commutator, re, CMatrix, CScalar, Tolerance, I};
use crate::reps::{GeneratorKind, GeneratorSet, RepLabel, RepTag};

/// Generalised Gell-Mann matrices of SU(n), `n² − 1` of them, normalised
/// to `tr(λᵃλᵇ) = 2δᵃᵇ`.
///
/// Ordering follows the standard n = 3 labels: for each column k = 2..n the
/// symmetric and antisymmetric off-diagonal pairs (j, k) with j < k, then
/// the k-th diagonal matrix. For n = 2 these are the Pauli matrices.
pub fn generalized_gell_mann(n: usize) -> Result<Vec<CMatrix>> {
    if n < 2 {
        return Err(Error::Param(format!("SU(N) needs N >= 2, got {n}")));
    }
    let unit = |r: usize, col: usize, z: CScalar| {
        CMatrix::from_fn(n, move |a, b| if (a, b) == (r, col) { z } else { re(0.0) })
    };
    let mut out = Vec::with_capacity(n * n - 1);
    for k in 1..n {
        for j in 0..k {
            out.push(&unit(j, k, re(1.0)) + &unit(k, j, re(1.0)));
            out.push(&unit(j, k, -I) + &unit(k, j, I));
        }
        let l = k as f64;
        let norm = (2.0 / (l * (l + 1.0))).sqrt();
        let diag: Vec<CScalar> = (0..n)
            .map(|d| match d {
                d if d < k => re(norm),
                d if d == k => re(-l * norm),
                _ => re(0.0),
            })
            .collect();
        out.push(CMatrix::diag(&diag));
    }
    Ok(out)
}

/// The eight Gell-Mann matrices λ¹…λ⁸.
pub fn gell_mann() -> Vec<CMatrix> {
    generalized_gell_mann(3).expect("n = 3 is valid")
}

/// Jᵃ = λᵃ/2 as an angular momentum set of SU(n).
pub fn su_n_generators(n: usize) -> Result<GeneratorSet> {
    let members = generalized_gell_mann(n)?
        .into_iter()
        .map(|m| m.scale(re(0.5)))
        .collect();
    let tag = match n {
        2 => RepTag::Rep2,
        3 => RepTag::SU3fund,
        _ => RepTag::SUNfund,
    };
    GeneratorSet::new(
        RepLabel::new(tag, n)?,
        GeneratorKind::AngularMomentum,
        members,
    )
}

/// Dense three-index real tensor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor3 {
    pub size: usize,
    /// Row-major (a, b, c), 0-based.
    pub values: Vec<f64>,
}

impl Tensor3 {
    fn zeros(size: usize) -> Self {
        Self {
            size,
            values: vec![0.0; size * size * size],
        }
    }

    /// Entry by 1-based indices.
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.values[((a - 1) * self.size + (b - 1)) * self.size + (c - 1)]
    }

    fn set(&mut self, a: usize, b: usize, c: usize, v: f64) {
        self.values[((a - 1) * self.size + (b - 1)) * self.size + (c - 1)] = v;
    }

    /// Largest magnitude and the first 1-based index triple attaining it.
    pub fn max_abs(&self) -> (f64, Option<[usize; 3]>) {
        let mut best = (0.0, None);
        for a in 1..=self.size {
            for b in 1..=self.size {
                for c in 1..=self.size {
                    let v = self.get(a, b, c).abs();
                    if v > best.0 {
                        best = (v, Some([a, b, c]));
                    }
                }
            }
        }
        best
    }

    /// Entries with magnitude above `eps`, as (a, b, c, value) with a ≤ b ≤ c.
    pub fn sorted_nonzeros(&self, eps: f64) -> Vec<([usize; 3], f64)> {
        let mut out = Vec::new();
        for a in 1..=self.size {
            for b in a..=self.size {
                for c in b..=self.size {
                    let v = self.get(a, b, c);
                    if v.abs() > eps {
                        out.push(([a, b, c], v));
                    }
                }
            }
        }
        out
    }

    /// Largest deviation from total antisymmetry (`sign = −1`) or total
    /// symmetry (`sign = +1`) under the transpositions generating S₃.
    pub fn permutation_defect(&self, sign: f64) -> f64 {
        let mut worst = 0.0_f64;
        for a in 1..=self.size {
            for b in 1..=self.size {
                for c in 1..=self.size {
                    let v = self.get(a, b, c);
                    worst = worst
                        .max((v - sign * self.get(b, a, c)).abs())
                        .max((v - sign * self.get(a, c, b)).abs());
                }
            }
        }
        worst
    }
}

/// Structure constants of a generator basis, with reconstruction residuals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureTensors {
    /// N of SU(N), i.e. the matrix dimension of the generators.
    pub n: usize,
    /// `[Jᵃ, Jᵇ] = i fᵃᵇᶜ Jᶜ`.
    pub f: Tensor3,
    /// `{Jᵃ, Jᵇ} = delta_coeff δᵃᵇ 𝟏 + dᵃᵇᶜ Jᶜ`.
    pub d: Tensor3,
    pub delta_coeff: f64,
    /// Largest Frobenius residual of the commutator reconstruction.
    pub commutator_residual: f64,
    /// Largest Frobenius residual of the anticommutator reconstruction.
    pub anticommutator_residual: f64,
}

/// Relative slack for the orthogonality and hermiticity preconditions.
const BASIS_EPS: f64 = 1e-10;

/// Structure constants by the trace formulas. The basis must be hermitian,
/// traceless and orthogonal with a common norm under the trace pairing.
pub fn extract_structure(generators: &[CMatrix]) -> Result<StructureTensors> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Basis("no generators given".into()))?;
    let n = first.dim();
    let count = generators.len();
    for (a, g) in generators.iter().enumerate() {
        if g.dim() != n {
            return Err(Error::Dim {
                expected: n,
                found: g.dim(),
            });
        }
        if !g.is_hermitian(BASIS_EPS) || g.trace().norm() > BASIS_EPS {
            return Err(Error::Basis(format!(
                "generator {} is not hermitian and traceless",
                a + 1
            )));
        }
    }
    let pairing = |a: &CMatrix, b: &CMatrix| (a * b).trace();
    let norm = pairing(first, first).re;
    if norm <= BASIS_EPS {
        return Err(Error::Basis("generator 1 vanishes".into()));
    }
    for a in 0..count {
        for b in 0..count {
            let want = if a == b { norm } else { 0.0 };
            if (pairing(&generators[a], &generators[b]) - re(want)).norm()
                > BASIS_EPS * norm.max(1.0)
            {
                return Err(Error::Basis(format!(
                    "generators {} and {} are not orthogonal with a common norm",
                    a + 1,
                    b + 1
                )));
            }
        }
    }

    let mut f = Tensor3::zeros(count);
    let mut d = Tensor3::zeros(count);
    for a in 1..=count {
        for b in 1..=count {
            let comm = commutator(&generators[a - 1], &generators[b - 1])?;
            let anti = anticommutator(&generators[a - 1], &generators[b - 1])?;
            for c in 1..=count {
                let gc = &generators[c - 1];
                f.set(a, b, c, (-I * pairing(&comm, gc)).re / norm);
                d.set(a, b, c, pairing(&anti, gc).re / norm);
            }
        }
    }
    let delta_coeff = 2.0 * norm / n as f64;

    let combine = |coeffs: &dyn Fn(usize) -> f64| {
        generators
            .iter()
            .enumerate()
            .fold(CMatrix::zeros(n), |acc, (c, g)| {
                &acc + &g.scale(re(coeffs(c + 1)))
            })
    };
    let one = CMatrix::identity(n);
    let mut commutator_residual = 0.0_f64;
    let mut anticommutator_residual = 0.0_f64;
    for a in 1..=count {
        for b in 1..=count {
            let comm = commutator(&generators[a - 1], &generators[b - 1])?;
            let rebuilt = combine(&|c| f.get(a, b, c)).scale(I);
            commutator_residual = commutator_residual.max((&comm - &rebuilt).norm_fro());

            let anti = anticommutator(&generators[a - 1], &generators[b - 1])?;
            let mut rebuilt = combine(&|c| d.get(a, b, c));
            if a == b {
                rebuilt = &rebuilt + &one.scale(re(delta_coeff));
            }
            anticommutator_residual = anticommutator_residual.max((&anti - &rebuilt).norm_fro());
        }
    }

    Ok(StructureTensors {
        n,
        f,
        d,
        delta_coeff,
        commutator_residual,
        anticommutator_residual,
    })
}

/// Adjoint matrices `(Jᵃ)_{bc} = i f^{bac}`.
pub fn adjoint_from_f(st: &StructureTensors) -> Result<GeneratorSet> {
    let size = st.f.size;
    let members = (1..=size)
        .map(|a| CMatrix::from_fn(size, |b, c| I * st.f.get(b + 1, a, c + 1)))
        .collect();
    let tag = if st.n == 3 {
        RepTag::SU3adjoint
    } else {
        RepTag::SUNadjoint
    };
    GeneratorSet::new(
        RepLabel::new(tag, size)?,
        GeneratorKind::AngularMomentum,
        members,
    )
}

/// Residual of `[Jᵃ, Jᵇ] = i fᵃᵇᶜ Jᶜ` for any generator list.
pub fn structure_residual(generators: &[CMatrix], f: &Tensor3) -> f64 {
    let count = generators.len();
    let mut worst = 0.0_f64;
    for a in 1..=count {
        for b in 1..=count {
            let comm = commutator(&generators[a - 1], &generators[b - 1]).expect("same dim");
            let rebuilt = generators
                .iter()
                .enumerate()
                .fold(CMatrix::zeros(comm.dim()), |acc, (c, g)| {
                    &acc + &g.scale(I * f.get(a, b, c + 1))
                });
            worst = worst.max((&comm - &rebuilt).norm_fro());
        }
    }
    worst
}

/// How far the anticommutators are from the SU(2) form `{Jᵃ, Jᵇ} ∝ δᵃᵇ𝟏`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub n: usize,
    pub max_abs_d: f64,
    /// 1-based (a, b, c) of the first entry attaining `max_abs_d`.
    pub argmax: Option<[usize; 3]>,
    pub delta_coeff: f64,
    pub obstructed: bool,
    pub statement: String,
}

/// The boost construction reduces `[Vⁱ, Kʲ]` to a single time-like vector
/// matrix only when every anticommutator is a multiple of the identity. Any
/// d-symbol above `tol.abs_eps` breaks that reduction.
pub fn boost_obstruction_report(st: &StructureTensors, tol: &Tolerance) -> ObstructionReport {
    let (max_abs_d, argmax) = st.d.max_abs();
    let obstructed = max_abs_d > tol.abs_eps;
    let statement = if obstructed {
        let [a, b, c] = argmax.expect("nonzero entry has an index");
        format!(
            "SU({}): {{J,J}} = {:.6} delta 1 + d J with max|d| = {:.6} at d^{{{a}{b}{c}}}; \
             [V^i, K^j] picks up d-weighted vector terms, so it does not reduce to a multiple of V^4 \
             and the boost construction fails (the 8+1 singlet carries no generator and is omitted)",
            st.n, st.delta_coeff, max_abs_d
        )
    } else {
        format!(
            "SU({}): {{J,J}} = {:.6} delta 1 with no d-terms; [V^i, K^j] reduces to -i delta_ij V^4 \
             and the boost construction goes through",
            st.n, st.delta_coeff
        )
    };
    ObstructionReport {
        n: st.n,
        max_abs_d,
        argmax,
        delta_coeff: st.delta_coeff,
        obstructed,
        statement,
    }
}

/// Reconstruction and adjoint-closure reports for SU(n), plus the
/// anticommutator-simplicity check, which is expected to pass only for n = 2.
pub fn su_n_reports(n: usize, tol: &Tolerance) -> Result<(StructureTensors, Vec<CheckReport>)> {
    let j = su_n_generators(n)?;
    let st = extract_structure(j.members())?;
    let label = format!("SU({n})");
    let adj = adjoint_from_f(&st)?;
    let adj_residual = structure_residual(adj.members(), &st.f);
    let reports = vec![
        CheckReport::from_terms(
            IdentityId::StructureReconstruction,
            format!("{label} [J,J] = i f J"),
            tol.abs_eps,
            [Term::new(vec![], st.commutator_residual, "commutators")],
        ),
        CheckReport::from_terms(
            IdentityId::StructureReconstruction,
            format!("{label} {{J,J}} = c delta 1 + d J"),
            tol.abs_eps,
            [Term::new(
                vec![],
                st.anticommutator_residual,
                "anticommutators",
            )],
        ),
        CheckReport::from_terms(
            IdentityId::StructureReconstruction,
            format!("{label} f antisymmetric, d symmetric"),
            tol.abs_eps,
            [
                Term::new(vec![], st.f.permutation_defect(-1.0), "f"),
                Term::new(vec![], st.d.permutation_defect(1.0), "d"),
            ],
        ),
        CheckReport::from_terms(
            IdentityId::AdjointClosure,
            format!("{label} adjoint [J,J] = i f J"),
            tol.abs_eps,
            [Term::new(vec![], adj_residual, "adjoint")],
        ),
    ];
    Ok((st, reports))
}

/// The anticommutator of `st` is a pure multiple of the identity.
pub fn simplicity_report(st: &StructureTensors, tol: &Tolerance) -> CheckReport {
    let (max_d, argmax) = st.d.max_abs();
    let indices = argmax.map(Vec::from).unwrap_or_default();
    CheckReport::from_terms(
        IdentityId::AnticommutatorSimplicity,
        format!("SU({}) max|d|", st.n),
        tol.abs_eps,
        [Term::new(indices, max_d, "largest d-symbol")],
    )
}
