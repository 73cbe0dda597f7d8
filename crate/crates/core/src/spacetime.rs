//! Finite rotations, boosts and translations of spacetime coordinates, and
//! the invariants they preserve.
//!
//! Index 4 is time and the metric is diag(1, 1, 1, −1). Transforms are
//! computed in complex arithmetic from the 4-vector generators and checked
//! to be real before they touch coordinates.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::{check_poincare, CheckReport, IdentityId, Term};
use crate::error::{Error, Result};
use crate::linalg::{det, frobenius_distance, mat_exp, re, CMatrix, CScalar, Tolerance, I};
use crate::reps::{pauli, GeneratorKind, GeneratorSet, RepLabel, RepTag};
use crate::transfer::{build_j4, build_k4};

/// Diagonal of the spacetime metric.
pub const METRIC: [f64; 4] = [1.0, 1.0, 1.0, -1.0];

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self([x1, x2, x3, x4])
    }

    /// Component by 1-based index.
    pub fn at(&self, mu: usize) -> f64 {
        self.0[mu - 1]
    }

    pub fn spatial_sq(&self) -> f64 {
        self.0[..3].iter().map(|x| x * x).sum()
    }

    pub fn euclidean_sq(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Same vector with the time component negated.
    pub fn lowered(&self) -> Self {
        let mut out = *self;
        for (x, g) in out.0.iter_mut().zip(METRIC) {
            *x *= g;
        }
        out
    }

    pub fn sub(&self, other: &FourVector) -> FourVector {
        let mut out = *self;
        for (x, y) in out.0.iter_mut().zip(other.0) {
            *x -= y;
        }
        out
    }

    fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

/// Rotation angles θ and boost rapidities φ.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RotBoostParams {
    pub theta: [f64; 3],
    pub phi: [f64; 3],
}

impl RotBoostParams {
    pub fn rotation(theta: [f64; 3]) -> Self {
        Self {
            theta,
            phi: [0.0; 3],
        }
    }

    pub fn boost(phi: [f64; 3]) -> Self {
        Self {
            theta: [0.0; 3],
            phi,
        }
    }
}

/// `i Σ aᵢ Mⁱ` over the three members of a rotation or boost set.
fn exponent(set: &GeneratorSet, angles: &[f64; 3]) -> CMatrix {
    set.members()
        .iter()
        .zip(angles)
        .fold(CMatrix::zeros(set.dim()), |acc, (m, &a)| {
            &acc + &m.scale(I * a)
        })
}

/// exp(i φᵢ Kⁱ) · exp(i θᵢ Jⁱ) for any representation: rotation first,
/// then boost.
pub fn rot_boost(j: &GeneratorSet, k: &GeneratorSet, params: &RotBoostParams) -> CMatrix {
    let rot = mat_exp(&exponent(j, &params.theta));
    let boost = mat_exp(&exponent(k, &params.phi));
    &boost * &rot
}

/// Inverse of [`rot_boost`], from the negated exponents in reverse order.
pub fn rot_boost_inverse(j: &GeneratorSet, k: &GeneratorSet, params: &RotBoostParams) -> CMatrix {
    let rot_inv = mat_exp(&exponent(j, &params.theta.map(|x| -x)));
    let boost_inv = mat_exp(&exponent(k, &params.phi.map(|x| -x)));
    &rot_inv * &boost_inv
}

/// 4-vector transformation D₍₄₎(θ, φ).
pub fn d4(params: &RotBoostParams) -> CMatrix {
    rot_boost(&build_j4(), &build_k4(), params)
}

/// Largest imaginary part of `m`; errors when above `exp_eps`.
fn check_real(m: &CMatrix, tol: &Tolerance) -> Result<()> {
    let imag = m.max_abs_imag();
    if imag > tol.exp_eps {
        return Err(Error::Purity { imag });
    }
    Ok(())
}

/// `D x` for a real 4×4 transform.
pub fn apply(d: &CMatrix, x: &FourVector, tol: &Tolerance) -> Result<FourVector> {
    if d.dim() != 4 {
        return Err(Error::Dim {
            expected: 4,
            found: d.dim(),
        });
    }
    check_real(d, tol)?;
    let v: Vec<CScalar> = x.0.iter().map(|&a| re(a)).collect();
    let out = d.mul_vec(&v)?;
    Ok(FourVector([out[0].re, out[1].re, out[2].re, out[3].re]))
}

/// `x₁² + x₂² + x₃² − x₄²`.
pub fn interval_sq(x: &FourVector) -> f64 {
    x.spatial_sq() - x.at(4) * x.at(4)
}

/// `−det(xᵘσᵘ)`, which equals [`interval_sq`].
pub fn interval_sq_via_det(x: &FourVector) -> f64 {
    let m = (1..=4).fold(CMatrix::zeros(2), |acc, mu| {
        &acc + &pauli(mu).expect("index in range").scale(re(x.at(mu)))
    });
    -det(&m).re
}

/// Lorentz part plus displacement, acting as x ↦ Λx + a.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineTransform {
    lambda: CMatrix,
    a: FourVector,
}

impl AffineTransform {
    pub fn new(lambda: CMatrix, a: FourVector) -> Result<Self> {
        if lambda.dim() != 4 {
            return Err(Error::Dim {
                expected: 4,
                found: lambda.dim(),
            });
        }
        if !a.is_finite() {
            return Err(Error::Param("displacement must be finite".into()));
        }
        if det(&lambda).norm() < 1e-300 {
            return Err(Error::Param("Lorentz part must be invertible".into()));
        }
        Ok(Self { lambda, a })
    }

    pub fn translation(a: FourVector) -> Result<Self> {
        Self::new(CMatrix::identity(4), a)
    }

    pub fn lambda(&self) -> &CMatrix {
        &self.lambda
    }

    pub fn displacement(&self) -> FourVector {
        self.a
    }

    /// The 5×5 block matrix [[Λ, a], [0, 1]].
    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_fn(5, |r, col| match (r, col) {
            (r, col) if r < 4 && col < 4 => self.lambda[(r, col)],
            (r, 4) if r < 4 => re(self.a.0[r]),
            (4, 4) => re(1.0),
            _ => re(0.0),
        })
    }

    /// Reads Λ and a back from a 5×5 block matrix.
    pub fn from_matrix(m: &CMatrix) -> Result<Self> {
        if m.dim() != 5 {
            return Err(Error::Dim {
                expected: 5,
                found: m.dim(),
            });
        }
        let lambda = m.block(0, 0, 4);
        let a = FourVector([m[(0, 4)].re, m[(1, 4)].re, m[(2, 4)].re, m[(3, 4)].re]);
        Self::new(lambda, a)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &AffineTransform) -> Result<AffineTransform> {
        Self::from_matrix(&(&self.matrix() * &first.matrix()))
    }
}

/// Λx + a, computed by acting with the 5×5 matrix on (x, 1).
pub fn affine_apply(t: &AffineTransform, x: &FourVector, tol: &Tolerance) -> Result<FourVector> {
    let m = t.matrix();
    check_real(&m, tol)?;
    let v: Vec<CScalar> = x.0.iter().map(|&a| re(a)).chain([re(1.0)]).collect();
    let out = m.mul_vec(&v)?;
    debug_assert_eq!(out[4], re(1.0));
    Ok(FourVector([out[0].re, out[1].re, out[2].re, out[3].re]))
}

/// Generators of the 5×5 affine representation.
///
/// Rotations and boosts embed the 4-vector generators in the upper-left
/// block. The translation generators carry a lowered index,
/// `Pᵘ = −i gᵘᵘ E_{μ5}`, which is what the vector covariance relations
/// require; then `exp(i aᵤ Pᵘ)` with `aᵤ = gᵤᵥ aᵛ` displaces by `aᵛ`.
pub fn affine_generators() -> (GeneratorSet, GeneratorSet, GeneratorSet) {
    let label = RepLabel::fixed(RepTag::Rep5affine);
    let embed = |set: GeneratorSet| set.members().iter().map(|m| m.embed(5)).collect::<Vec<_>>();
    let p = (0..4)
        .map(|mu| {
            CMatrix::from_fn(5, |r, col| {
                if r == mu && col == 4 {
                    -I * METRIC[mu]
                } else {
                    re(0.0)
                }
            })
        })
        .collect();
    (
        GeneratorSet::new(label, GeneratorKind::AngularMomentum, embed(build_j4())).unwrap(),
        GeneratorSet::new(label, GeneratorKind::Boost, embed(build_k4())).unwrap(),
        GeneratorSet::new(label, GeneratorKind::Momentum, p).unwrap(),
    )
}

/// exp(i aᵤ Pᵘ) in the affine representation, for a displacement given
/// with an upper index.
pub fn translation_matrix(a: &FourVector) -> CMatrix {
    let (_, _, p) = affine_generators();
    let lowered = a.lowered();
    let exponent = p
        .members()
        .iter()
        .zip(lowered.0)
        .fold(CMatrix::zeros(5), |acc, (m, x)| &acc + &m.scale(I * x));
    mat_exp(&exponent)
}

/// Λ with one index lowered and one raised, `Λ_ν^μ = (g Λᵀ g)ᵘᵥ`. For a
/// Lorentz transform this is Λ⁻¹.
pub fn lowered_transpose(lambda: &CMatrix) -> CMatrix {
    CMatrix::from_fn(4, |mu, nu| lambda[(nu, mu)] * (METRIC[mu] * METRIC[nu]))
}

/// `‖D Vᵘ D⁻¹ − Λ_ν^μ Vᵛ‖_F` maximised over μ, where D is generated by `j`,
/// `k` in their own representation and Λ = D₍₄₎ by the 4-vector
/// generators. `(j, k, v)` must close the Poincaré relations at α = 1.
pub fn intertwine_check(
    j: &GeneratorSet,
    k: &GeneratorSet,
    v: &GeneratorSet,
    params: &RotBoostParams,
    tol: &Tolerance,
) -> Result<CheckReport> {
    precheck_poincare(j, k, v, tol)?;
    Ok(intertwine_unchecked(j, k, v, params, tol, 0))
}

fn precheck_poincare(
    j: &GeneratorSet,
    k: &GeneratorSet,
    v: &GeneratorSet,
    tol: &Tolerance,
) -> Result<()> {
    let reports = check_poincare(j, k, v, tol, re(1.0))?;
    if let Some(bad) = reports
        .iter()
        .find(|r| !r.passed && r.identity != IdentityId::MomentumCommute)
    {
        return Err(Error::Precondition(format!(
            "generators fail {} {} (residual {:e})",
            bad.identity, bad.relation, bad.max_residual
        )));
    }
    Ok(())
}

fn intertwine_terms(
    j: &GeneratorSet,
    k: &GeneratorSet,
    v: &GeneratorSet,
    params: &RotBoostParams,
    trial: usize,
) -> Vec<Term> {
    let d = rot_boost(j, k, params);
    let d_inv = rot_boost_inverse(j, k, params);
    let mixing = lowered_transpose(&d4(params));
    (1..=4)
        .map(|mu| {
            let lhs = &(&d * v.member(mu)) * &d_inv;
            let rhs = (1..=4).fold(CMatrix::zeros(v.dim()), |acc, nu| {
                &acc + &v.member(nu).scale(mixing[(mu - 1, nu - 1)])
            });
            let r = frobenius_distance(&lhs, &rhs).expect("same rep");
            Term::new(vec![trial, mu], r, format!("trial {trial}, mu={mu}"))
        })
        .collect()
}

fn intertwine_unchecked(
    j: &GeneratorSet,
    k: &GeneratorSet,
    v: &GeneratorSet,
    params: &RotBoostParams,
    tol: &Tolerance,
    trial: usize,
) -> CheckReport {
    CheckReport::from_terms(
        IdentityId::Intertwining,
        "D V D^-1 = Lambda V",
        tol.exp_eps,
        intertwine_terms(j, k, v, params, trial),
    )
}

/// Random draws shared by the trial-based checks.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn four_vector(&mut self, scale: f64) -> FourVector {
        FourVector(std::array::from_fn(|_| self.rng.gen_range(-scale..=scale)))
    }

    pub fn angles(&mut self) -> [f64; 3] {
        std::array::from_fn(|_| self.rng.gen_range(-PI..=PI))
    }

    /// Rapidity vector with uniformly random direction and norm in [0, max_norm].
    pub fn rapidity(&mut self, max_norm: f64) -> [f64; 3] {
        loop {
            let dir: [f64; 3] = std::array::from_fn(|_| self.rng.gen_range(-1.0..=1.0));
            let n = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-3 && n <= 1.0 {
                let size = self.rng.gen_range(0.0..=max_norm);
                return dir.map(|x| x / n * size);
            }
        }
    }

    pub fn rot_boost(&mut self, max_rapidity: f64) -> RotBoostParams {
        RotBoostParams {
            theta: self.angles(),
            phi: self.rapidity(max_rapidity),
        }
    }
}

/// Coordinates drawn from [-COORD_SCALE, COORD_SCALE].
pub const COORD_SCALE: f64 = 10.0;
/// Largest rapidity norm drawn in the invariance trials.
pub const MAX_RAPIDITY: f64 = 3.0;

fn relative(delta: f64, x: &FourVector) -> f64 {
    let scale = x.euclidean_sq();
    if scale > 0.0 {
        delta.abs() / scale
    } else {
        delta.abs()
    }
}

/// Finite rotations keep spatial length and time: relative error over
/// `trials` random coordinates and angles.
pub fn rotation_invariance_check(trials: usize, seed: u64, tol: &Tolerance) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Param("trials must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    let mut terms = Vec::with_capacity(trials);
    for t in 0..trials {
        let x = s.four_vector(COORD_SCALE);
        let params = RotBoostParams::rotation(s.angles());
        let xp = apply(&d4(&params), &x, tol)?;
        let dist = relative(xp.spatial_sq() - x.spatial_sq(), &x);
        let time = relative((xp.at(4) - x.at(4)) * x.euclidean_sq().sqrt(), &x);
        terms.push(Term::new(vec![t], dist.max(time), format!("trial {t}")));
    }
    Ok(CheckReport::from_terms(
        IdentityId::RotationInvariance,
        "spatial length and time",
        tol.exp_eps,
        terms,
    )
    .with_note(format!("seed {seed}, {trials} trials")))
}

/// Rotation followed by a boost keeps the interval. The note records one
/// sample trial showing individual components change.
pub fn boost_invariance_check(trials: usize, seed: u64, tol: &Tolerance) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Param("trials must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    let mut terms = Vec::with_capacity(trials);
    let mut sample = String::new();
    for t in 0..trials {
        let x = s.four_vector(COORD_SCALE);
        let params = s.rot_boost(MAX_RAPIDITY);
        let xpp = apply(&d4(&params), &x, tol)?;
        let delta = interval_sq(&xpp) - interval_sq(&x);
        if t == 0 {
            sample = format!(
                "trial 0: x1 {:.4} -> {:.4}, x4 {:.4} -> {:.4}, interval {:.6} -> {:.6}",
                x.at(1),
                xpp.at(1),
                x.at(4),
                xpp.at(4),
                interval_sq(&x),
                interval_sq(&xpp)
            );
        }
        terms.push(Term::new(
            vec![t],
            relative(delta, &x),
            format!("trial {t}"),
        ));
    }
    Ok(
        CheckReport::from_terms(IdentityId::BoostInvariance, "interval", tol.exp_eps, terms)
            .with_note(format!("seed {seed}, {trials} trials; {sample}")),
    )
}

/// `−det(xᵘσᵘ)` against the interval over random coordinates.
pub fn determinant_identity_check(
    trials: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Param("trials must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    let terms = (0..trials).map(|t| {
        let x = s.four_vector(COORD_SCALE);
        let delta = interval_sq_via_det(&x) - interval_sq(&x);
        Term::new(vec![t], relative(delta, &x), format!("trial {t}"))
    });
    Ok(CheckReport::from_terms(
        IdentityId::DeterminantInterval,
        "-det(x.sigma)",
        tol.abs_eps,
        terms,
    )
    .with_note(format!("seed {seed}, {trials} trials")))
}

fn random_affine(s: &mut Sampler) -> Result<AffineTransform> {
    let lambda = d4(&s.rot_boost(MAX_RAPIDITY));
    AffineTransform::new(lambda, s.four_vector(COORD_SCALE))
}

/// Composition of random affine transforms matches the 5×5 matrix product.
pub fn affine_composition_check(trials: usize, seed: u64, tol: &Tolerance) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Param("trials must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    let mut terms = Vec::with_capacity(trials);
    for t in 0..trials {
        let t1 = random_affine(&mut s)?;
        let t2 = random_affine(&mut s)?;
        let x = s.four_vector(COORD_SCALE);
        let stepwise = affine_apply(&t2, &affine_apply(&t1, &x, tol)?, tol)?;
        let composed = affine_apply(&t2.compose(&t1)?, &x, tol)?;
        let diff = stepwise.sub(&composed);
        let scale = stepwise.euclidean_sq().max(1.0).sqrt();
        terms.push(Term::new(
            vec![t],
            diff.euclidean_sq().sqrt() / scale,
            format!("trial {t}"),
        ));
    }
    Ok(CheckReport::from_terms(
        IdentityId::AffineComposition,
        "T2(T1 x) = (T2 T1) x",
        tol.exp_eps,
        terms,
    )
    .with_note(format!("seed {seed}, {trials} trials")))
}

/// Translations by the exponential of the affine momentum generators: the
/// exponential is exactly [[𝟏, a], [0, 1]], and coordinate differences are
/// left unchanged.
pub fn affine_translation_check(trials: usize, seed: u64, tol: &Tolerance) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Param("trials must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    let mut terms = Vec::with_capacity(trials);
    for t in 0..trials {
        let a = s.four_vector(COORD_SCALE);
        let exact = AffineTransform::translation(a)?.matrix();
        let via_exp = translation_matrix(&a);
        let exp_err = frobenius_distance(&exact, &via_exp)?;

        let (x0, x1) = (s.four_vector(COORD_SCALE), s.four_vector(COORD_SCALE));
        let shift = AffineTransform::from_matrix(&via_exp)?;
        let moved = affine_apply(&shift, &x1, tol)?.sub(&affine_apply(&shift, &x0, tol)?);
        let diff_err = moved.sub(&x1.sub(&x0)).euclidean_sq().sqrt();
        terms.push(Term::new(
            vec![t],
            exp_err.max(diff_err),
            format!("trial {t}"),
        ));
    }
    Ok(CheckReport::from_terms(
        IdentityId::AffineTranslation,
        "exp(i a.P) and coordinate differences",
        tol.abs_eps,
        terms,
    )
    .with_note(format!("seed {seed}, {trials} trials")))
}

/// Poincaré relations of the 5×5 affine generators, tagged as the affine check.
pub fn affine_poincare_check(tol: &Tolerance) -> Result<Vec<CheckReport>> {
    let (j, k, p) = affine_generators();
    let mut reports = check_poincare(&j, &k, &p, tol, re(1.0))?;
    for r in &mut reports {
        r.relation = format!("{} ({})", r.relation, r.identity);
        r.identity = IdentityId::AffinePoincare;
    }
    Ok(reports)
}

/// Intertwining relation over `trials` random parameter draws.
pub fn intertwine_trials(
    j: &GeneratorSet,
    k: &GeneratorSet,
    v: &GeneratorSet,
    trials: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<CheckReport> {
    if trials == 0 {
        return Err(Error::Param("trials must be at least 1".into()));
    }
    precheck_poincare(j, k, v, tol)?;
    let mut s = Sampler::new(seed);
    let terms: Vec<Term> = (0..trials)
        .flat_map(|t| {
            let params = s.rot_boost(MAX_RAPIDITY);
            intertwine_terms(j, k, v, &params, t)
        })
        .collect();
    Ok(CheckReport::from_terms(
        IdentityId::Intertwining,
        format!("D V D^-1 = Lambda V ({:?})", v.rep().tag()),
        tol.exp_eps,
        terms,
    )
    .with_note(format!("seed {seed}, {trials} trials")))
}
