//! Scalar special functions and quadrature on the unit sphere.
//!
//! Spherical harmonics are normalized against the *uniform probability
//! measure* `d omega` on S^2, so `Y_0^0 = 1` and all values carry a factor
//! `sqrt(4 pi)` relative to the surface-measure convention. The phase is the
//! Condon-Shortley one, fixed so that `conj(Y_l^m) = (-1)^m Y_l^{-m}`.

use num_complex::Complex64;

use crate::{domain_err, Result};

/// Index (l, m) of a scalar spherical harmonic, with |m| <= l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HarmonicIndex {
    pub ell: u32,
    pub m: i32,
}

impl HarmonicIndex {
    pub fn new(ell: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > ell {
            return domain_err(format!("harmonic index |m|={} > l={}", m.abs(), ell));
        }
        Ok(Self { ell, m })
    }
}

/// A point on S^2 in spherical coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    /// Polar angle in [0, pi].
    pub theta: f64,
    /// Azimuthal angle in [0, 2 pi).
    pub phi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// Cartesian unit vector (sin t cos p, sin t sin p, cos t).
    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }
}

/// Product quadrature grid on S^2 for the probability measure `d omega`:
/// Gauss-Legendre in cos(theta) times a uniform rule in phi. Weights sum to 1.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    pub nodes: Vec<(Direction, f64)>,
}

/// Natural log of the gamma function for x > 0 (Lanczos, g = 7).
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return domain_err(format!("log_gamma requires x > 0, got {x}"));
    }
    Ok(log_gamma_unchecked(x))
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn log_gamma_unchecked(x: f64) -> f64 {
    // ln Gamma(x) = ln Gamma(x+1) - ln x, shifted into the stable range.
    if x < 0.5 {
        return log_gamma_unchecked(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `Y_l^m(dir)` in the probability-measure normalization.
pub fn sph_harm(idx: HarmonicIndex, dir: Direction) -> Complex64 {
    let m_abs = idx.m.unsigned_abs();
    let plm = normalized_legendre(idx.ell, m_abs, dir.theta);
    let phase = Complex64::from_polar(1.0, idx.m as f64 * dir.phi);
    if idx.m >= 0 {
        plm * phase
    } else {
        // Y_l^{-m} = (-1)^m conj(Y_l^m); plm is real so only the sign matters.
        let sign = if m_abs % 2 == 0 { 1.0 } else { -1.0 };
        sign * plm * phase
    }
}

/// Fully normalized associated Legendre value N_l^m P_l^m(cos theta) with the
/// Condon-Shortley phase, where N is chosen so that the corresponding Y has
/// unit L^2(d omega) norm. Stable upward recurrence in l from the m = l seed.
fn normalized_legendre(ell: u32, m: u32, theta: f64) -> f64 {
    debug_assert!(m <= ell);
    let x = theta.cos();
    let s = theta.sin();
    // Seed: P~_m^m = (-1)^m sqrt((2m+1)!!/(2m)!!) sin^m, built up normalized.
    let mut pmm = 1.0_f64;
    for k in 1..=m {
        let k = k as f64;
        pmm *= -((2.0 * k + 1.0) / (2.0 * k)).sqrt() * s;
    }
    if ell == m {
        return pmm;
    }
    let mf = m as f64;
    let mut pm1 = pmm; // P~_{l-1}^m
    let mut p = (2.0 * mf + 3.0).sqrt() * x * pmm; // P~_{m+1}^m
    for l in (m + 2)..=ell {
        let lf = l as f64;
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0))
            .sqrt();
        let next = a * (x * p - b * pm1);
        pm1 = p;
        p = next;
    }
    p
}

/// Ladder operators acting on the `Y_l^m` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderOp {
    L3,
    Lplus,
    Lminus,
}

/// Exact action of a ladder operator: `op Y_l^m = c Y_l^m'`.
///
/// Returns `(c, None)` with `c = 0` when the target index falls off the
/// ladder. The coefficients are `m` for L3 and `sqrt((l +- m + 1)(l -+ m))`
/// for L+-.
pub fn ladder_apply(op: LadderOp, idx: HarmonicIndex) -> (f64, Option<HarmonicIndex>) {
    let l = idx.ell as i64;
    let m = idx.m as i64;
    match op {
        LadderOp::L3 => (m as f64, Some(idx)),
        LadderOp::Lplus => {
            if m >= l {
                (0.0, None)
            } else {
                let c = (((l + m + 1) * (l - m)) as f64).sqrt();
                (c, Some(HarmonicIndex { ell: idx.ell, m: idx.m + 1 }))
            }
        }
        LadderOp::Lminus => {
            if m <= -l {
                (0.0, None)
            } else {
                let c = (((l - m + 1) * (l + m)) as f64).sqrt();
                (c, Some(HarmonicIndex { ell: idx.ell, m: idx.m - 1 }))
            }
        }
    }
}

/// Build a product quadrature grid. Exact for harmonic products with
/// `l + l' <= 2 n_theta - 1` and `|m - m'| < n_phi`.
pub fn make_grid(n_theta: usize, n_phi: usize) -> Result<QuadratureGrid> {
    if n_theta == 0 || n_phi == 0 {
        return domain_err("quadrature grid sizes must be positive");
    }
    let (xs, ws) = gauss_legendre(n_theta);
    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    for (x, w) in xs.iter().zip(ws.iter()) {
        let theta = x.acos();
        for j in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
            // Halve the [-1,1] weight for the probability measure, and spread
            // uniformly over phi.
            nodes.push((Direction::new(theta, phi), 0.5 * w / n_phi as f64));
        }
    }
    Ok(QuadratureGrid { n_theta, n_phi, nodes })
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for i in 0..n {
        // Tricomi-type initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_deriv(n, x);
        xs[n - 1 - i] = x;
        ws[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (xs, ws)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Quadrature of `f` against `d omega`.
pub fn integrate<F: Fn(Direction) -> Complex64>(grid: &QuadratureGrid, f: F) -> Complex64 {
    grid.nodes
        .iter()
        .map(|&(dir, w)| w * f(dir))
        .sum()
}
