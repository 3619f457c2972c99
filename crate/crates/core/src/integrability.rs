//! Construction of the spectral elements R(w) and K(w) in the rank-two
//! diagram algebras and exact verification of the Yang-Baxter equation, the
//! reflection equations, the normalizations, and the scalar functional
//! conditions behind the boundary solution.
//!
//! All identities are checked by exact evaluation at seeded random rational
//! points; there is no floating point and no tolerance.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::diagram::{generator_e, multiply, AlgebraElement, BoundaryMode, Weights};
use crate::rings::{BigRational, QuadExt};

/// Deterministic splitmix64 stream; seeds fix reports byte for byte.
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// A small random rational with numerator in [-10, 10] and denominator
    /// in [1, 7].
    pub fn rational(&mut self) -> BigRational {
        let num = (self.next_u64() % 21) as i64 - 10;
        let den = (self.next_u64() % 7) as i64 + 1;
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// A small nonzero random rational.
    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let x = self.rational();
            if !rzero(&x) {
                return x;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// tau^2 - 1 - w vanished.
    Pole,
    /// A branch precondition is violated.
    BranchCondition,
    DiagramError(crate::diagram::DiagramError),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::Pole => write!(f, "spectral parameter hits a pole"),
            SpectralError::BranchCondition => write!(f, "branch precondition violated"),
            SpectralError::DiagramError(e) => write!(f, "{}", e),
        }
    }
}

impl From<crate::diagram::DiagramError> for SpectralError {
    fn from(e: crate::diagram::DiagramError) -> Self {
        SpectralError::DiagramError(e)
    }
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rzero(x: &BigRational) -> bool {
    num_traits::Zero::is_zero(x)
}

/// `r_1(w) = (w - 1)/tau`.
pub fn r1_coeff(w: &BigRational, tau: &BigRational) -> Result<BigRational, SpectralError> {
    if rzero(tau) {
        return Err(SpectralError::Pole);
    }
    Ok((w - rat_int(1)) / tau)
}

/// `r_2(w) = w(w - 1)/(tau^2 - 1 - w)`.
pub fn r2_coeff(w: &BigRational, tau: &BigRational) -> Result<BigRational, SpectralError> {
    let den = tau * tau - rat_int(1) - w;
    if rzero(&den) {
        return Err(SpectralError::Pole);
    }
    Ok(w * (w - rat_int(1)) / den)
}

/// Weights for the rank-two bulk algebra over exact rationals: only the
/// loop factor matters in the boundaryless mode.
pub fn bulk_weights(tau: &BigRational) -> Weights<BigRational> {
    Weights {
        tau: tau.clone(),
        r_even_odd: rat_int(0),
        r_odd_even: rat_int(0),
        l_even_odd: rat_int(0),
        l_odd_even: rat_int(0),
        theta: None,
    }
}

/// `R_i(w) = 1 + r_1(w) E_i^(1) + r_2(w) E_i^(2)` in the rank-two bulk
/// algebra on `m` bundles.
pub fn build_r(
    i: usize,
    w: &BigRational,
    tau: &BigRational,
    m: usize,
    boundary: BoundaryMode,
) -> Result<AlgebraElement<BigRational>, SpectralError> {
    let r1 = r1_coeff(w, tau)?;
    let r2 = r2_coeff(w, tau)?;
    let mut out = AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(m, 2, boundary));
    out.add_term(generator_e(i, 1, m, 2, boundary)?, r1);
    out.add_term(generator_e(i, 2, m, 2, boundary)?, r2);
    Ok(out)
}

/// Branch of the boundary solution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KBranch {
    /// Generic parameters with the chosen sign of the square root.
    Generic { plus_sign: bool },
    /// Degenerate case `tau tau_e = tau_o`.
    DegenerateE,
    /// Degenerate case `tau tau_o = tau_e`.
    DegenerateO,
}

/// The boundary parameters and the extension discriminant of a sample.
#[derive(Clone, Debug)]
pub struct KParams {
    pub tau: BigRational,
    pub tau_o: BigRational,
    pub tau_e: BigRational,
    pub branch: KBranch,
    /// `C1^2` for the generic branch; zero otherwise.
    pub disc: BigRational,
    c1: QuadExt,
    c2: QuadExt,
}

impl KParams {
    pub fn new(
        tau: BigRational,
        tau_o: BigRational,
        tau_e: BigRational,
        branch: KBranch,
    ) -> Result<Self, SpectralError> {
        let one = rat_int(1);
        match branch {
            KBranch::Generic { plus_sign } => {
                let t2m1 = &tau * &tau - &one;
                let num = &tau * &tau_o - &tau_e;
                let den_c1 = &t2m1 * &tau_e * &tau_o * (&tau * &tau_e - &tau_o);
                if rzero(&num) || rzero(&den_c1) || rzero(&t2m1) {
                    return Err(SpectralError::BranchCondition);
                }
                let disc = &num / &den_c1;
                let mut c1 = QuadExt::generator(disc.clone());
                if !plus_sign {
                    c1 = c1.neg();
                }
                let c2 = QuadExt::from_rat(-&t2m1 / &num, disc.clone());
                Ok(KParams {
                    tau,
                    tau_o,
                    tau_e,
                    branch,
                    disc,
                    c1,
                    c2,
                })
            }
            KBranch::DegenerateE => {
                if &tau * &tau_e != tau_o || rzero(&tau_e) || rzero(&tau_o) {
                    return Err(SpectralError::BranchCondition);
                }
                let disc = rat_int(0);
                Ok(KParams {
                    tau,
                    tau_o,
                    tau_e,
                    branch,
                    disc: disc.clone(),
                    c1: QuadExt::from_rat(rat_int(0), disc.clone()),
                    c2: QuadExt::from_rat(rat_int(0), disc),
                })
            }
            KBranch::DegenerateO => {
                if &tau * &tau_o != tau_e || rzero(&tau_e) || rzero(&tau_o) {
                    return Err(SpectralError::BranchCondition);
                }
                let disc = rat_int(0);
                Ok(KParams {
                    tau,
                    tau_o,
                    tau_e,
                    branch,
                    disc: disc.clone(),
                    c1: QuadExt::from_rat(rat_int(0), disc.clone()),
                    c2: QuadExt::from_rat(rat_int(0), disc),
                })
            }
        }
    }

    fn embed(&self, x: &BigRational) -> QuadExt {
        QuadExt::from_rat(x.clone(), self.disc.clone())
    }

    /// `k_1(w)` and `k_2(w)` in the extension field.
    pub fn k_coeffs(&self, w: &BigRational) -> Result<(QuadExt, QuadExt), SpectralError> {
        if rzero(w) {
            return Err(SpectralError::Pole);
        }
        let one = rat_int(1);
        match self.branch {
            KBranch::Generic { .. } => {
                let w_q = self.embed(w);
                let w2m1 = self.embed(&(w * w - &one));
                let tau = self.embed(&self.tau);
                let tau_o = self.embed(&self.tau_o);
                let tau_e = self.embed(&self.tau_e);
                let two = self.embed(&rat_int(2));
                let c1 = &self.c1;
                let c2 = &self.c2;
                // denominator: w (1 - 2 to te C1 C2 w + t te^2 C1 C2 w + te C2 w^2)
                let c1c2w = c1.mul(c2).mul(&w_q);
                let den_inner = self
                    .embed(&one)
                    .sub(&two.mul(&tau_o).mul(&tau_e).mul(&c1c2w))
                    .add(&tau.mul(&tau_e).mul(&tau_e).mul(&c1c2w))
                    .add(&tau_e.mul(c2).mul(&w_q).mul(&w_q));
                let den = w_q.mul(&den_inner);
                if den.is_zero() {
                    return Err(SpectralError::Pole);
                }
                let k1_num = c2
                    .mul(&w2m1)
                    .mul(&w_q.sub(&tau_o.mul(c1)))
                    .neg();
                let k2_num = tau.mul(c1).mul(c2).mul(&w2m1).neg();
                let k1 = k1_num.div(&den).ok_or(SpectralError::Pole)?;
                let k2 = k2_num.div(&den).ok_or(SpectralError::Pole)?;
                Ok((k1, k2))
            }
            KBranch::DegenerateE => {
                let w2 = w * w;
                let k1 = -(&w2 - &one) / (&self.tau_e * &w2);
                let k2 = &self.tau * (&w2 - &one) / (&self.tau_o * &self.tau_e * &w2);
                Ok((self.embed(&k1), self.embed(&k2)))
            }
            KBranch::DegenerateO => {
                // Here the constant in front of the square root vanishes, so
                // the rank-two coefficient drops out entirely.
                let w2 = w * w;
                let k1 = -(&w2 - &one) / (&self.tau_e * &w2);
                Ok((self.embed(&k1), self.embed(&rat_int(0))))
            }
        }
    }

    /// Weights for the one-boundary rank-two algebra over the extension
    /// field.
    pub fn weights(&self) -> Weights<QuadExt> {
        Weights {
            tau: self.embed(&self.tau),
            r_even_odd: self.embed(&self.tau_e),
            r_odd_even: self.embed(&self.tau_o),
            l_even_odd: QuadExt::from_rat(rat_int(0), self.disc.clone()),
            l_odd_even: QuadExt::from_rat(rat_int(0), self.disc.clone()),
            theta: None,
        }
    }

    /// `K_2(w) = 1 + k_1(w) E_2^(1) + k_2(w) E_2^(2)` in the one-boundary
    /// rank-two algebra on two bundles.
    pub fn build_k(&self, w: &BigRational) -> Result<AlgebraElement<QuadExt>, SpectralError> {
        let (k1, k2) = self.k_coeffs(w)?;
        let b = BoundaryMode::Right;
        let mut out =
            AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(2, 2, b));
        out.add_term(generator_e(2, 1, 2, 2, b)?, k1);
        out.add_term(generator_e(2, 2, 2, 2, b)?, k2);
        Ok(out)
    }

    /// `R_1(w)` over the extension field, same shape as `build_k`.
    pub fn build_r_ext(&self, w: &BigRational) -> Result<AlgebraElement<QuadExt>, SpectralError> {
        let r1 = r1_coeff(w, &self.tau)?;
        let r2 = r2_coeff(w, &self.tau)?;
        let b = BoundaryMode::Right;
        let mut out =
            AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(2, 2, b));
        out.add_term(generator_e(1, 1, 2, 2, b)?, self.embed(&r1));
        out.add_term(generator_e(1, 2, 2, 2, b)?, self.embed(&r2));
        Ok(out)
    }
}

/// One verified sample of a randomized identity check.
#[derive(Clone, Debug)]
pub struct SampleResult {
    pub params: Vec<(String, BigRational)>,
    pub pass: bool,
}

/// Aggregated report of a randomized identity check.
#[derive(Clone, Debug)]
pub struct Report {
    pub what: String,
    pub seed: u64,
    pub samples: Vec<SampleResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.samples.iter().all(|s| s.pass)
    }
}

fn named(pairs: &[(&str, &BigRational)]) -> Vec<(String, BigRational)> {
    pairs
        .iter()
        .map(|(n, v)| (String::from(*n), (*v).clone()))
        .collect()
}

/// Verify the Yang-Baxter equation on three bundles at seeded random
/// rational points, including the normalizations `R(1) = 1` and
/// `R(w) R(1/w) = 1`. The first sample uses `w = z`.
pub fn verify_ybe(samples: usize, seed: u64) -> Report {
    let mut rng = Rng::new(seed);
    let m = 3;
    let b = BoundaryMode::None;
    let mut out = Vec::new();
    let mut k = 0usize;
    while out.len() < samples {
        let tau = rng.nonzero_rational();
        let w = rng.nonzero_rational();
        let z = if k == 0 { w.clone() } else { rng.nonzero_rational() };
        k += 1;
        let wz = &w * &z;
        // Reject pole configurations; all spectral arguments must avoid
        // tau^2 - 1 - x = 0 and be nonzero for the unitarity checks.
        let admissible = [w.clone(), z.clone(), wz.clone(), rat_int(1) / &w]
            .iter()
            .all(|x| !rzero(&(&tau * &tau - rat_int(1) - x)))
            && !rzero(&wz);
        if !admissible {
            continue;
        }
        let ww = bulk_weights(&tau);
        let r = |i: usize, x: &BigRational| build_r(i, x, &tau, m, b).unwrap();
        let mul = |a: &AlgebraElement<BigRational>, c: &AlgebraElement<BigRational>| {
            multiply(&ww, a, c).unwrap()
        };
        let lhs = mul(&mul(&r(1, &w), &r(2, &wz)), &r(1, &z));
        let rhs = mul(&mul(&r(2, &z), &r(1, &wz)), &r(2, &w));
        let one = AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(m, 2, b));
        let norm1 = r(1, &rat_int(1)) == one;
        let unitary = mul(&r(1, &w), &r(1, &(rat_int(1) / &w))) == one;
        let pass = lhs == rhs && norm1 && unitary;
        out.push(SampleResult {
            params: named(&[("w", &w), ("z", &z), ("tau", &tau)]),
            pass,
        });
    }
    Report {
        what: String::from("ybe"),
        seed,
        samples: out,
    }
}

fn sample_branch_params(rng: &mut Rng, branch: KBranch) -> Option<KParams> {
    let tau = rng.nonzero_rational();
    match branch {
        KBranch::Generic { .. } => {
            let tau_o = rng.nonzero_rational();
            let tau_e = rng.nonzero_rational();
            KParams::new(tau, tau_o, tau_e, branch).ok()
        }
        KBranch::DegenerateE => {
            let tau_e = rng.nonzero_rational();
            let tau_o = &tau * &tau_e;
            KParams::new(tau, tau_o, tau_e, branch).ok()
        }
        KBranch::DegenerateO => {
            let tau_o = rng.nonzero_rational();
            let tau_e = &tau * &tau_o;
            KParams::new(tau, tau_o, tau_e, branch).ok()
        }
    }
}

/// Verify the right reflection equation at seeded random rational points
/// in the chosen branch, including `K(1) = 1` and `K(w) K(1/w) = 1`. The
/// extension-field reduction is exercised: both components of the
/// difference of the two sides must vanish.
pub fn verify_re(samples: usize, seed: u64, branch: KBranch) -> Report {
    let mut rng = Rng::new(seed);
    let mut out = Vec::new();
    while out.len() < samples {
        let Some(p) = sample_branch_params(&mut rng, branch) else {
            continue;
        };
        let w = rng.nonzero_rational();
        let z = rng.nonzero_rational();
        let needed = [
            &w * &z,
            rat_int(1) / (&w * &z),
            &w / &z,
            w.clone(),
            z.clone(),
            rat_int(1) / &w,
            rat_int(1),
        ];
        let spectral_ok = needed
            .iter()
            .all(|x| !rzero(&(&p.tau * &p.tau - rat_int(1) - x)));
        if !spectral_ok {
            continue;
        }
        let k_points = [w.clone(), z.clone(), rat_int(1) / &w, rat_int(1)];
        if k_points.iter().any(|x| p.k_coeffs(x).is_err()) {
            continue;
        }
        let ww = p.weights();
        let mul = |a: &AlgebraElement<QuadExt>, c: &AlgebraElement<QuadExt>| {
            multiply(&ww, a, c).unwrap()
        };
        let kw = p.build_k(&w).unwrap();
        let kz = p.build_k(&z).unwrap();
        let r_inv = p.build_r_ext(&(rat_int(1) / (&w * &z))).unwrap();
        let r_rat = p.build_r_ext(&(&w / &z)).unwrap();
        let lhs = mul(&mul(&mul(&kw, &r_inv), &kz), &r_rat);
        let rhs = mul(&mul(&mul(&r_rat, &kz), &r_inv), &kw);
        let diff = lhs.sub(&rhs);
        let one = AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(
            2,
            2,
            BoundaryMode::Right,
        ));
        let norm = p.build_k(&rat_int(1)).unwrap() == one;
        let unitary = mul(&p.build_k(&w).unwrap(), &p.build_k(&(rat_int(1) / &w)).unwrap()) == one;
        let pass = diff.is_zero() && norm && unitary;
        out.push(SampleResult {
            params: named(&[
                ("w", &w),
                ("z", &z),
                ("tau", &p.tau),
                ("tau_o", &p.tau_o),
                ("tau_e", &p.tau_e),
            ]),
            pass,
        });
    }
    Report {
        what: String::from("re"),
        seed,
        samples: out,
    }
}

/// Verify the left reflection equation for a caller-supplied boundary
/// element builder; the crate ships no left solution, only this checker.
pub fn verify_re_left_with<F>(samples: usize, seed: u64, tau: &BigRational, build_k0: F) -> Report
where
    F: Fn(&BigRational) -> AlgebraElement<BigRational>,
{
    let mut rng = Rng::new(seed);
    let b = BoundaryMode::Both;
    let m = 2;
    let mut out = Vec::new();
    let ww = Weights {
        tau: tau.clone(),
        r_even_odd: rat_int(0),
        r_odd_even: rat_int(0),
        l_even_odd: rng.nonzero_rational(),
        l_odd_even: rng.nonzero_rational(),
        theta: None,
    };
    while out.len() < samples {
        let w = rng.nonzero_rational();
        let z = rng.nonzero_rational();
        let needed = [&w * &z, &w / &z];
        if needed
            .iter()
            .any(|x| rzero(&(tau * tau - rat_int(1) - x)) || rzero(x))
        {
            continue;
        }
        let mul = |a: &AlgebraElement<BigRational>, c: &AlgebraElement<BigRational>| {
            multiply(&ww, a, c).unwrap()
        };
        let r = |x: &BigRational| build_r(1, x, tau, m, b).unwrap();
        let lhs = mul(
            &mul(&mul(&build_k0(&z), &r(&(&z * &w))), &build_k0(&w)),
            &r(&(&w / &z)),
        );
        let rhs = mul(
            &mul(&mul(&r(&(&w / &z)), &build_k0(&w)), &r(&(&w * &z))),
            &build_k0(&z),
        );
        out.push(SampleResult {
            params: named(&[("w", &w), ("z", &z), ("tau", tau)]),
            pass: lhs == rhs,
        });
    }
    Report {
        what: String::from("re-left"),
        seed,
        samples: out,
    }
}

/// Evaluate the six scalar functional conditions behind the boundary
/// solution directly on the `r` and `k` coefficient functions, at seeded
/// random points.
pub fn verify_conditions(samples: usize, seed: u64, branch: KBranch) -> Report {
    let mut rng = Rng::new(seed);
    let mut out = Vec::new();
    while out.len() < samples {
        let Some(p) = sample_branch_params(&mut rng, branch) else {
            continue;
        };
        let w = rng.nonzero_rational();
        let z = rng.nonzero_rational();
        let args = [&w / &z, rat_int(1) / (&z * &w)];
        if args
            .iter()
            .any(|x| rzero(&(&p.tau * &p.tau - rat_int(1) - x)))
        {
            continue;
        }
        let k_points = [w.clone(), z.clone(), rat_int(1) / &w];
        if k_points.iter().any(|x| p.k_coeffs(x).is_err()) {
            continue;
        }
        let pass = conditions_hold(&p, &w, &z);
        out.push(SampleResult {
            params: named(&[
                ("w", &w),
                ("z", &z),
                ("tau", &p.tau),
                ("tau_o", &p.tau_o),
                ("tau_e", &p.tau_e),
            ]),
            pass,
        });
    }
    Report {
        what: String::from("conditions"),
        seed,
        samples: out,
    }
}

/// The six scalar identities: four from the coefficients of the quadratic
/// generator words in the reflection equation, two from the normalization.
fn conditions_hold(p: &KParams, w: &BigRational, z: &BigRational) -> bool {
    let e = |x: &BigRational| p.embed(x);
    let tau = e(&p.tau);
    let tau_o = e(&p.tau_o);
    let tau_e = e(&p.tau_e);
    let r1a = e(&r1_coeff(&(w / z), &p.tau).unwrap());
    let r1b = e(&r1_coeff(&(rat_int(1) / (z * w)), &p.tau).unwrap());
    let r2a = e(&r2_coeff(&(w / z), &p.tau).unwrap());
    let r2b = e(&r2_coeff(&(rat_int(1) / (z * w)), &p.tau).unwrap());
    let (k1w, k2w) = p.k_coeffs(w).unwrap();
    let (k1z, k2z) = p.k_coeffs(z).unwrap();
    let (k1wi, k2wi) = p.k_coeffs(&(rat_int(1) / w)).unwrap();

    let m = |xs: &[&QuadExt]| -> QuadExt {
        let mut acc = xs[0].clone();
        for x in &xs[1..] {
            acc = acc.mul(x);
        }
        acc
    };

    // Coefficient of the mixed rank-one/rank-two word.
    let c1 = m(&[&r1a, &k2w])
        .add(&m(&[&r1b, &k2w]))
        .add(&m(&[&tau, &r1a, &r1b, &k2w]))
        .add(&m(&[&tau_e, &r1a, &k1z, &k2w]))
        .add(&m(&[&tau_e, &r1b, &k1z, &k2w]))
        .add(&m(&[&tau, &tau_e, &r1a, &r1b, &k1z, &k2w]))
        .add(&m(&[&r1a, &k2z]))
        .sub(&m(&[&r1b, &k2z]))
        .add(&m(&[&tau_e, &r1a, &k1w, &k2z]))
        .sub(&m(&[&tau_e, &r1b, &k1w, &k2z]))
        .add(&m(&[&tau_e, &tau_e, &r1a, &k2w, &k2z]))
        .add(&m(&[&tau_o, &tau_e, &r1a, &r1b, &k2w, &k2z]));

    let c2 = m(&[&r2a, &k1w])
        .add(&m(&[&tau, &r1b, &r2a, &k1w]))
        .add(&m(&[&r2b, &k1w]))
        .add(&m(&[&tau, &r1a, &r2b, &k1w]))
        .add(&m(&[&tau, &tau, &r2a, &r2b, &k1w]))
        .add(&m(&[&r2a, &k1z]))
        .add(&m(&[&tau, &r1b, &r2a, &k1z]))
        .sub(&m(&[&r2b, &k1z]))
        .sub(&m(&[&tau, &r1a, &r2b, &k1z]))
        .add(&m(&[&tau_e, &r2a, &k1w, &k1z]))
        .add(&m(&[&tau, &tau_e, &r1b, &r2a, &k1w, &k1z]))
        .add(&m(&[&tau, &tau_o, &r2a, &r2b, &k1w, &k1z]))
        .add(&m(&[&tau_o, &r1b, &r2a, &k2z]))
        .sub(&m(&[&tau_o, &r1a, &r2b, &k2z]))
        .add(&m(&[&tau_o, &tau_e, &r1b, &r2a, &k1w, &k2z]))
        .add(&m(&[&tau_o, &tau_o, &r2a, &r2b, &k1w, &k2z]));

    let c3 = m(&[&r2a, &k2w])
        .add(&m(&[&tau, &r1b, &r2a, &k2w]))
        .add(&m(&[&r2b, &k2w]))
        .add(&m(&[&tau, &r1a, &r2b, &k2w]))
        .add(&m(&[&tau, &tau, &r2a, &r2b, &k2w]))
        .add(&m(&[&tau_e, &r2a, &k1z, &k2w]))
        .add(&m(&[&tau, &tau_e, &r1b, &r2a, &k1z, &k2w]))
        .add(&m(&[&tau, &tau_o, &r2a, &r2b, &k1z, &k2w]))
        .add(&m(&[&r2a, &k2z]))
        .sub(&m(&[&r2b, &k2z]))
        .add(&m(&[&tau_e, &r2a, &k1w, &k2z]))
        .add(&m(&[&tau_e, &tau_e, &r2a, &k2w, &k2z]))
        .add(&m(&[&tau_o, &tau_e, &r1b, &r2a, &k2w, &k2z]))
        .add(&m(&[&tau_o, &tau_o, &r2a, &r2b, &k2w, &k2z]));

    let c4 = m(&[&r2b, &k1z, &k2w])
        .add(&m(&[&tau, &r1a, &r2b, &k1z, &k2w]))
        .sub(&m(&[&r2b, &k1w, &k2z]))
        .add(&m(&[&tau_o, &r1a, &r2b, &k2w, &k2z]));

    // Normalization conditions.
    let c5 = k1w
        .add(&k1wi)
        .add(&m(&[&tau_e, &k1w, &k1wi]));
    let c6 = k2w
        .add(&m(&[&tau_e, &k1w, &k2wi]))
        .add(&k2wi)
        .add(&m(&[&tau_e, &k1wi, &k2w]))
        .add(&m(&[&tau_e, &tau_e, &k2w, &k2wi]));

    [c1, c2, c3, c4, c5, c6].iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;

    #[test]
    fn r_coefficients() {
        // r1(1) = r2(1) = 0, so R(1) = 1.
        let tau = rat(3, 1);
        assert!(rzero(&r1_coeff(&rat(1, 1), &tau).unwrap()));
        assert!(rzero(&r2_coeff(&rat(1, 1), &tau).unwrap()));
        // r1(2) at tau = 3 is 1/3.
        assert_eq!(r1_coeff(&rat(2, 1), &tau).unwrap(), rat(1, 3));
        // Pole at tau^2 - 1 - w = 0.
        assert_eq!(r2_coeff(&rat(8, 1), &tau), Err(SpectralError::Pole));
    }

    #[test]
    fn r_unitarity_at_a_point() {
        let tau = rat(5, 1);
        let w = rat(3, 2);
        let ww = bulk_weights(&tau);
        let m = 3;
        let a = build_r(1, &w, &tau, m, BoundaryMode::None).unwrap();
        let b = build_r(1, &(rat(1, 1) / &w), &tau, m, BoundaryMode::None).unwrap();
        let one = AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(
            m,
            2,
            BoundaryMode::None,
        ));
        assert_eq!(multiply(&ww, &a, &b).unwrap(), one);
    }

    #[test]
    fn ybe_holds() {
        let report = verify_ybe(25, 7);
        assert_eq!(report.samples.len(), 25);
        assert!(report.all_pass());
    }

    #[test]
    fn re_holds_all_branches() {
        for branch in [
            KBranch::Generic { plus_sign: true },
            KBranch::Generic { plus_sign: false },
            KBranch::DegenerateE,
            KBranch::DegenerateO,
        ] {
            let report = verify_re(10, 11, branch);
            assert_eq!(report.samples.len(), 10);
            assert!(report.all_pass(), "branch {:?}", branch);
        }
    }

    #[test]
    fn conditions_vanish() {
        for branch in [
            KBranch::Generic { plus_sign: true },
            KBranch::Generic { plus_sign: false },
            KBranch::DegenerateE,
            KBranch::DegenerateO,
        ] {
            let report = verify_conditions(10, 13, branch);
            assert!(report.all_pass(), "branch {:?}", branch);
        }
    }

    #[test]
    fn degenerate_k_values() {
        // k1(w) = -(w^2-1)/(tau_e w^2), k2(w) = tau (w^2-1)/(tau_o tau_e w^2).
        let tau = rat(2, 1);
        let tau_e = rat(3, 1);
        let tau_o = &tau * &tau_e;
        let p = KParams::new(tau, tau_o, tau_e, KBranch::DegenerateE).unwrap();
        let (k1, k2) = p.k_coeffs(&rat(2, 1)).unwrap();
        assert_eq!(k1.a, rat(-1, 4));
        assert_eq!(k2.a, rat(2, 1) * rat(3, 1) / (rat(6, 1) * rat(3, 1) * rat(4, 1)));
    }

    #[test]
    fn identity_is_a_left_boundary_solution() {
        // K_0 = 1 trivially satisfies the left reflection equation.
        let tau = rat(4, 1);
        let report = verify_re_left_with(10, 3, &tau, |_| {
            AlgebraElement::basis(crate::diagram::AlgebraDiagram::identity(
                2,
                2,
                BoundaryMode::Both,
            ))
        });
        assert!(report.all_pass());
    }

    #[test]
    fn seeded_reports_are_reproducible() {
        let a = verify_ybe(5, 42);
        let b = verify_ybe(5, 42);
        for (x, y) in a.samples.iter().zip(b.samples.iter()) {
            assert_eq!(x.params, y.params);
            assert_eq!(x.pass, y.pass);
        }
    }
}
