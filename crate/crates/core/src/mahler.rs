//! Complex root finding, Mahler measure, equimodular curves, and the
//! divergence certificate.
//!
//! The Mahler measure of `f = a₀ Π (z − αᵢ)` is `|a₀| Π max(1, |αᵢ|)`; the
//! Euclidean variant omits the leading coefficient. Roots come from an
//! Aberth–Ehrlich simultaneous iteration with deterministic restarts and
//! guarded Newton polishing; the only contract is the relative residual
//! bound, not the method.
//!
//! For a two-term family `c₁λ₁ⁿ + c₂λ₂ⁿ`, a point `z₀` has `|λ₁| = |λ₂|`
//! exactly when `v(t, z₀) = 0` for some `t ∈ [0, 4]`, where
//!
//! ```text
//! v(t, z) = −(λ₁(z) + λ₂(z))² + t·λ₁(z)λ₂(z),     t = 4cos²(θ/2)
//! ```
//!
//! (`λ₁/λ₂ = e^{iθ}` gives `t = (λ₁+λ₂)²/(λ₁λ₂) = 2 + 2cosθ ∈ [0, 4]`).
//! A non-isolated point of the resulting curve lying outside the unit circle
//! certifies that the Euclidean Mahler measure of the family diverges.

use crate::error::{Error, Result};
use crate::family::{family_bracket, FamilyForm};
use crate::laurent::{big_to_f64, LaurentPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

/// Default tolerance bundle: `tol_resid` bounds the relative residual of
/// every reported root, `tol_zero` is the threshold below which a value
/// counts as numerically zero, and `tol_eqm` is the allowed relative gap
/// between `|λ₁|` and `|λ₂|` at a curve point.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Relative root residual bound (default `1e-10`).
    pub tol_resid: f64,
    /// Numerical-zero threshold (default `1e-8`).
    pub tol_zero: f64,
    /// Relative equimodularity tolerance (default `1e-8`).
    pub tol_eqm: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { tol_resid: 1e-10, tol_zero: 1e-8, tol_eqm: 1e-8 }
    }
}

/// Margin on `|z| − 1` required of a divergence witness.
pub const DIVERGENCE_MARGIN: f64 = 1e-2;

/// One computed root.
#[derive(Debug, Clone, Copy)]
pub struct Root {
    /// The root itself.
    pub value: Complex64,
    /// Relative residual `|f(value)| / Σ|cⱼ||value|ʲ`.
    pub residual: f64,
    /// `|value|`.
    pub modulus: f64,
}

/// All roots of a Laurent polynomial after clearing its monomial content.
#[derive(Debug, Clone)]
pub struct RootSet {
    /// Roots sorted by (re, im); their count is the degree of the cleared
    /// ordinary polynomial.
    pub roots: Vec<Root>,
    /// Absolute value of the cleared polynomial's leading coefficient.
    pub lead_coeff_abs: f64,
    /// The cleared power of `A`.
    pub low_exp: i64,
}

const ABERTH_MAX_ITERS: usize = 400;
const ABERTH_RESTARTS: usize = 12;

/// Evaluates `p` (ascending coefficients) and its derivative at `z`.
fn horner_both(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ci in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ci;
    }
    (p, dp)
}

/// `Σ |cⱼ| rʲ` — the natural scale of an evaluation at modulus `r`.
fn eval_scale_coeffs(c: &[f64], r: f64) -> f64 {
    let mut s = 0.0;
    for &ci in c.iter().rev() {
        s = s * r + ci.abs();
    }
    s
}

/// All complex roots of the ordinary polynomial with the given ascending
/// real coefficients (trailing zeros become exact roots at the origin).
/// Aberth–Ehrlich simultaneous iteration from deterministically perturbed
/// circular starts, guarded Newton polish, relative-residual acceptance.
fn poly_roots(coeffs: &[f64], tol_resid: f64) -> Result<Vec<(Complex64, f64)>> {
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Domain("polynomial coefficient overflows f64".into()));
    }
    let Some(high) = coeffs.iter().rposition(|&c| c != 0.0) else {
        return Err(Error::Domain("cannot take roots of the zero polynomial".into()));
    };
    let low = coeffs.iter().position(|&c| c != 0.0).unwrap();
    let mut out: Vec<(Complex64, f64)> =
        (0..low).map(|_| (Complex64::new(0.0, 0.0), 0.0)).collect();
    let c = &coeffs[low..=high];
    let deg = c.len() - 1;
    if deg == 0 {
        return Ok(out);
    }
    let lead = c[deg];
    // Fujiwara bound on root moduli: 2·max_k (|c_{deg−k}|/|c_deg|)^{1/k}.
    // Unlike the Cauchy bound it stays modest for high degrees, keeping
    // z^deg finite in f64 throughout the iteration.
    let mut fuji: f64 = 0.0;
    for k in 1..=deg {
        let ratio = (c[deg - k] / lead).abs();
        if ratio > 0.0 {
            fuji = fuji.max(ratio.powf(1.0 / k as f64));
        }
    }
    let rbound = (2.0 * fuji).max(1e-3);
    let contain = 3.0 * rbound + 10.0;
    let mut best: Option<(Vec<Complex64>, Vec<f64>, f64)> = None;
    for attempt in 0..ABERTH_RESTARTS {
        let radius = rbound * (0.8 + 0.19 * attempt as f64);
        let phase = 0.7301 * attempt as f64 + std::f64::consts::FRAC_PI_4 / deg as f64;
        let mut z: Vec<Complex64> = (0..deg)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + phase;
                // Slightly varied moduli avoid symmetric stalls.
                let r = radius * (0.55 + 0.5 * (k as f64 + 1.0) / deg as f64);
                Complex64::from_polar(r, theta)
            })
            .collect();
        for _ in 0..ABERTH_MAX_ITERS {
            let mut moved = false;
            for i in 0..deg {
                let (p, dp) = horner_both(c, z[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let newton = if dp.norm() == 0.0 {
                    // Exactly at a critical point: nudge deterministically.
                    Complex64::new(1e-6, 1e-6)
                } else {
                    p / dp
                };
                let mut s = Complex64::new(0.0, 0.0);
                for (j, zj) in z.iter().enumerate() {
                    if j != i {
                        let diff = z[i] - zj;
                        if diff.norm() > 0.0 {
                            s += diff.inv();
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * s;
                let w = if denom.norm() == 0.0 { newton } else { newton / denom };
                z[i] -= w;
                if !z[i].re.is_finite() || !z[i].im.is_finite() {
                    // Deterministic reset of a runaway iterate.
                    z[i] = Complex64::from_polar(
                        rbound * (0.3 + 0.4 * (i as f64 + 1.0) / deg as f64),
                        2.61803 * i as f64 + 0.5,
                    );
                    moved = true;
                } else if z[i].norm() > contain {
                    // All roots lie within the Fujiwara disc; pull the
                    // iterate back toward it (slight per-index skew keeps
                    // clamped iterates distinct).
                    let scale = contain / z[i].norm() * (1.0 - 1e-3 * (i as f64 + 1.0) / deg as f64);
                    z[i] *= scale;
                    moved = true;
                } else if w.norm() > 1e-13 * (1.0 + z[i].norm()) {
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        // Guarded Newton polish: accept steps that reduce |p|.
        for zi in z.iter_mut() {
            for _ in 0..4 {
                let (p, dp) = horner_both(c, *zi);
                if dp.norm() == 0.0 {
                    break;
                }
                let cand = *zi - p / dp;
                let (pc, _) = horner_both(c, cand);
                if pc.norm() < p.norm() {
                    *zi = cand;
                } else {
                    break;
                }
            }
        }
        let res: Vec<f64> = z
            .iter()
            .map(|&zi| {
                let (p, _) = horner_both(c, zi);
                p.norm() / eval_scale_coeffs(c, zi.norm()).max(f64::MIN_POSITIVE)
            })
            .collect();
        let worst =
            res.iter().fold(0.0f64, |m, &r| if r.is_finite() { m.max(r) } else { f64::INFINITY });
        if worst <= tol_resid {
            let mut found: Vec<(Complex64, f64)> = z.into_iter().zip(res).collect();
            found.sort_by(|a, b| {
                a.0.re.partial_cmp(&b.0.re).unwrap().then(a.0.im.partial_cmp(&b.0.im).unwrap())
            });
            out.extend(found);
            return Ok(out);
        }
        if best.as_ref().is_none_or(|(_, _, w)| worst < *w) {
            best = Some((z, res, worst));
        }
    }
    let (z, _, worst) = best.unwrap();
    Err(Error::RootsDidNotConverge {
        roots: z.iter().map(|zi| (zi.re, zi.im)).collect(),
        residual: worst,
    })
}

/// Clears the monomial content of `f` and returns its remaining roots.
pub fn roots(f: &LaurentPoly, tol_resid: f64) -> Result<RootSet> {
    let (low_exp, coeffs) = f
        .to_real_coeffs()
        .ok_or_else(|| Error::Domain("cannot take roots of the zero polynomial".into()))?;
    let lead_coeff_abs = coeffs.last().unwrap().abs();
    let found = poly_roots(&coeffs, tol_resid)?;
    let roots = found
        .into_iter()
        .map(|(value, residual)| Root { value, residual, modulus: value.norm() })
        .collect();
    Ok(RootSet { roots, lead_coeff_abs, low_exp })
}

/// Mahler measure `|lead| · Π max(1, |root|)`; monomial factors contribute
/// nothing.
pub fn mahler(f: &LaurentPoly, tol_resid: f64) -> Result<f64> {
    let rs = roots(f, tol_resid)?;
    Ok(rs.lead_coeff_abs * rs.roots.iter().map(|r| r.modulus.max(1.0)).product::<f64>())
}

/// Euclidean Mahler measure `Π max(1, |root|)` (no leading-coefficient
/// factor).
pub fn euclidean_mahler(f: &LaurentPoly, tol_resid: f64) -> Result<f64> {
    let rs = roots(f, tol_resid)?;
    Ok(rs.roots.iter().map(|r| r.modulus.max(1.0)).product::<f64>())
}

fn lead_is_negative(p: &LaurentPoly) -> bool {
    p.max_exp().map(|e| p.coeff(e) < BigInt::zero()).unwrap_or(false)
}

/// The gauge-fixed λ-pair used by the curve machinery: common monomial
/// content stripped, λ₁'s leading coefficient positive, and λ₂'s sign then
/// flipped to make its leading coefficient positive too. Equimodularity
/// depends only on the moduli `|λᵢ(z)|`, which are invariant under the
/// common-monomial and sign changes; the per-λ sign flip swaps the curve's
/// `t`-labels `t ↔ 4 − t` while fixing the curve, and pins the conventional
/// labeling (both leads positive) used by the distinguished `t = 5/4` slice.
pub fn normalized_lambda_pair(
    l1: &LaurentPoly,
    l2: &LaurentPoly,
) -> Result<(LaurentPoly, LaurentPoly)> {
    if l1.is_zero() && l2.is_zero() {
        return Err(Error::Domain("both growth factors are identically zero".into()));
    }
    let shift = [l1, l2].iter().filter_map(|l| l.min_exp()).min().unwrap();
    let mut a = l1.mul_monomial(1, -shift);
    let mut b = l2.mul_monomial(1, -shift);
    let leader_negative = if a.is_zero() { lead_is_negative(&b) } else { lead_is_negative(&a) };
    if leader_negative {
        a = -&a;
        b = -&b;
    }
    if lead_is_negative(&b) {
        b = -&b;
    }
    Ok((a, b))
}

/// The exact curve polynomial at rational `t = t_num/t_den ∈ [0, 4]`, with
/// the denominator cleared:
/// `t_den·(−(λ₁+λ₂)²) + t_num·λ₁λ₂` on the gauge-fixed pair (same roots as
/// `v(t, ·)`).
pub fn v_poly(l1: &LaurentPoly, l2: &LaurentPoly, t_num: i64, t_den: i64) -> Result<LaurentPoly> {
    if t_den <= 0 {
        return Err(Error::Domain("t denominator must be positive".into()));
    }
    if t_num < 0 || t_num > 4 * t_den {
        return Err(Error::Domain(format!("t = {t_num}/{t_den} outside [0, 4]")));
    }
    let (p0, p1) = v_poly_symbolic(l1, l2)?;
    Ok(&p0.mul_monomial(t_den, 0) + &p1.mul_monomial(t_num, 0))
}

/// The symbolic curve polynomial as a pair `(P₀, P₁)` with
/// `v(t, z) = P₀(z) + t·P₁(z)`: `P₀ = −(λ₁+λ₂)²`, `P₁ = λ₁λ₂` on the
/// gauge-fixed pair.
pub fn v_poly_symbolic(
    l1: &LaurentPoly,
    l2: &LaurentPoly,
) -> Result<(LaurentPoly, LaurentPoly)> {
    let (a, b) = normalized_lambda_pair(l1, l2)?;
    let s = &a + &b;
    Ok((-&(&s * &s), &a * &b))
}

/// One point of the equimodular curve.
#[derive(Debug, Clone, Copy)]
pub struct EquimodularPoint {
    /// The grid parameter `t ∈ [0, 4]` whose slice produced the point.
    pub t: f64,
    /// The point itself.
    pub z: Complex64,
    /// True when `dv/dz` vanishes there (singular Jacobian: the point may be
    /// isolated rather than lie on a curve branch).
    pub isolated_flag: bool,
    /// The common modulus `|λ₁(z)| ≈ |λ₂(z)|`.
    pub lambda_mod: f64,
}

fn derivative(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.iter().filter(|(e, _)| *e != 0).map(|(e, c)| (e - 1, c * BigInt::from(e))),
    )
}

/// Points of the equimodular curve over the `t` grid: for each `t` the roots
/// of `v(t, ·)`, with roots where either `|λᵢ| < tol_zero` discarded, the
/// equimodularity `|λ₁| = |λ₂|` cross-validated within `tol_eqm`, and the
/// Jacobian flag from `|dv/dz|`. The slices `t = 0` and `t = 4` are exact
/// squares (`−(λ₁±λ₂)²`) and are root-found on their square roots. Output is
/// sorted by `(t, re, im)`.
pub fn equimodular_points(
    l1: &LaurentPoly,
    l2: &LaurentPoly,
    t_grid: &[f64],
    tols: &Tolerances,
) -> Result<Vec<EquimodularPoint>> {
    let (a, b) = normalized_lambda_pair(l1, l2)?;
    let sum = &a + &b;
    let diff = &a - &b;
    let (p0, p1) = (-&(&sum * &sum), &a * &b);
    let dp0 = derivative(&p0);
    let dp1 = derivative(&p1);
    // All of a, b, p0, p1 have nonnegative exponents by the gauge fixing.
    let coeffs_of = |p: &LaurentPoly, len: usize| -> Vec<f64> {
        let mut v = vec![0.0; len];
        for (e, c) in p.iter() {
            v[e as usize] = big_to_f64(c);
        }
        v
    };
    let len = (p0.max_exp().unwrap_or(0).max(p1.max_exp().unwrap_or(0)) + 1) as usize;
    let c0 = coeffs_of(&p0, len);
    let c1 = coeffs_of(&p1, len);
    let mut points = Vec::new();
    for &t in t_grid {
        if !(0.0..=4.0).contains(&t) {
            return Err(Error::Domain(format!("grid value t = {t} outside [0, 4]")));
        }
        let zs: Vec<(Complex64, f64)> = if t == 0.0 || t == 4.0 {
            let half = if t == 0.0 { &sum } else { &diff };
            match half.to_real_coeffs() {
                None => Vec::new(), // λ₁ ≡ ∓λ₂: the slice is identically zero
                Some((_, hc)) => poly_roots(&hc, tols.tol_resid)?,
            }
        } else {
            let vc: Vec<f64> = c0.iter().zip(&c1).map(|(x, y)| x + t * y).collect();
            poly_roots(&vc, tols.tol_resid)?
        };
        for (z, _) in zs {
            let m1 = a.eval_complex(z, 0.0)?.norm();
            let m2 = b.eval_complex(z, 0.0)?.norm();
            if m1 < tols.tol_zero || m2 < tols.tol_zero {
                continue;
            }
            let lambda_mod = 0.5 * (m1 + m2);
            if (m1 - m2).abs() > tols.tol_eqm * lambda_mod.max(1.0) {
                return Err(Error::Domain(format!(
                    "equimodularity cross-check failed at t = {t}: |λ1| = {m1}, |λ2| = {m2}"
                )));
            }
            let dv = dp0.eval_complex(z, 0.0)? + dp1.eval_complex(z, 0.0)? * t;
            let dscale = dp0.eval_scale(z.norm()) + t * dp1.eval_scale(z.norm());
            let isolated_flag = dv.norm() <= tols.tol_zero * dscale.max(1.0);
            points.push(EquimodularPoint { t, z, isolated_flag, lambda_mod });
        }
    }
    points.sort_by(|p, q| {
        p.t.partial_cmp(&q.t)
            .unwrap()
            .then(p.z.re.partial_cmp(&q.z.re).unwrap())
            .then(p.z.im.partial_cmp(&q.z.im).unwrap())
    });
    Ok(points)
}

/// The verdict of [`divergence_certificate`].
#[derive(Debug, Clone)]
pub struct DivergenceVerdict {
    /// True when a qualifying witness was found. False means "no certificate
    /// found" — inconclusive, not a proof of convergence.
    pub diverges: bool,
    /// A non-isolated curve point with `|z| > 1 +` [`DIVERGENCE_MARGIN`],
    /// preferring the slice closest to `t = 5/4`.
    pub witness: Option<EquimodularPoint>,
}

/// True when `l1 = ω·l2` for a scalar ω (no monomial shift): cross-multiply
/// by leading coefficients and compare exactly.
fn constant_ratio(l1: &LaurentPoly, l2: &LaurentPoly) -> bool {
    match (l1.max_exp(), l2.max_exp()) {
        (Some(e1), Some(e2)) => {
            let x = l1.mul_monomial(l2.coeff(e2), 0);
            let y = l2.mul_monomial(l1.coeff(e1), 0);
            x == y
        }
        _ => false,
    }
}

/// Certifies divergence of the family's Euclidean Mahler measure: sweeps the
/// equimodular curve over the grid and looks for a non-isolated point with
/// modulus above `1 + margin`. Degenerate λ-pairs (one identically zero, or
/// differing by a constant factor) make the curve meaningless and error as
/// hypothesis violations; a λ-ratio that is a nontrivial monomial times a
/// constant keeps a well-defined circle curve and proceeds.
pub fn divergence_certificate(
    form: &FamilyForm,
    t_grid: &[f64],
    tols: &Tolerances,
) -> Result<DivergenceVerdict> {
    if form.lambda1.is_zero() || form.lambda2.is_zero() {
        return Err(Error::HypothesisViolation(
            "a growth factor is identically zero".into(),
        ));
    }
    if constant_ratio(&form.lambda1, &form.lambda2) {
        return Err(Error::HypothesisViolation(
            "growth factors differ by a constant factor; the curve is degenerate".into(),
        ));
    }
    let points = equimodular_points(&form.lambda1, &form.lambda2, t_grid, tols)?;
    let witness = points
        .iter()
        .filter(|p| !p.isolated_flag && p.z.norm() > 1.0 + DIVERGENCE_MARGIN)
        .min_by(|p, q| {
            (p.t - 1.25)
                .abs()
                .partial_cmp(&(q.t - 1.25).abs())
                .unwrap()
                .then(p.t.partial_cmp(&q.t).unwrap())
                .then(p.z.re.partial_cmp(&q.z.re).unwrap())
                .then(p.z.im.partial_cmp(&q.z.im).unwrap())
        })
        .copied();
    Ok(DivergenceVerdict { diverges: witness.is_some(), witness })
}

/// The default sweep grid: 81 uniform points of `[0, 4]` together with the
/// distinguished values `{0, 5/4, 4}` (already on the uniform grid).
pub fn default_t_grid() -> Vec<f64> {
    let mut g: Vec<f64> = (0..=80).map(|k| k as f64 * 4.0 / 80.0).collect();
    g.extend([0.0, 1.25, 4.0]);
    g.sort_by(|x, y| x.partial_cmp(y).unwrap());
    g.dedup();
    g
}

/// Mahler and Euclidean Mahler measures of `family_bracket(form, n)` for
/// each listed `n`.
pub fn mahler_trend(
    form: &FamilyForm,
    n_list: &[i64],
    tol_resid: f64,
) -> Result<Vec<(i64, f64, f64)>> {
    let mut out = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let f = family_bracket(form, n)?;
        let rs = roots(&f, tol_resid)?;
        let me: f64 = rs.roots.iter().map(|r| r.modulus.max(1.0)).product();
        out.push((n, rs.lead_coeff_abs * me, me));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{builtin_family, family_closed_form};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    const TR: f64 = 1e-10;

    #[test]
    fn roots_of_quadratic() {
        let rs = roots(&lp("A^2 - 1"), TR).unwrap();
        assert_eq!(rs.roots.len(), 2);
        assert!((rs.roots[0].value.re + 1.0).abs() < 1e-12);
        assert!((rs.roots[1].value.re - 1.0).abs() < 1e-12);
        for r in &rs.roots {
            assert!(r.residual <= TR);
            assert!(r.value.im.abs() < 1e-12);
        }
    }

    #[test]
    fn roots_of_d_are_unimodular() {
        // d = −A⁻² − A² clears to −(A⁴ + 1): four 8th roots of unity.
        let rs = roots(&LaurentPoly::d(), TR).unwrap();
        assert_eq!(rs.low_exp, -2);
        assert_eq!(rs.roots.len(), 4);
        for r in &rs.roots {
            assert!((r.modulus - 1.0).abs() < 1e-10);
        }
        assert!((mahler(&LaurentPoly::d(), TR).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn roots_of_cyclotomic_factor() {
        let rs = roots(&lp("A^8 - A^4 + 1"), TR).unwrap();
        assert_eq!(rs.roots.len(), 8);
        for r in &rs.roots {
            assert!((r.modulus - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn monomial_content_is_cleared() {
        // A³ + A² = A²(A + 1): one root at −1, low_exp 2.
        let rs = roots(&lp("A^3 + A^2"), TR).unwrap();
        assert_eq!(rs.low_exp, 2);
        assert_eq!(rs.roots.len(), 1);
        assert!((rs.roots[0].value.re + 1.0).abs() < 1e-12);
    }

    #[test]
    fn mahler_basics() {
        assert!((mahler(&lp("A^5"), TR).unwrap() - 1.0).abs() < 1e-12);
        assert!((mahler(&lp("-A^-3"), TR).unwrap() - 1.0).abs() < 1e-12);
        assert!((mahler(&lp("A - 2"), TR).unwrap() - 2.0).abs() < 1e-10);
        assert!((euclidean_mahler(&lp("2*A - 4"), TR).unwrap() - 2.0).abs() < 1e-10);
        assert!((mahler(&lp("2*A - 4"), TR).unwrap() - 4.0).abs() < 1e-10);
    }

    #[test]
    fn mahler_invariance_under_units() {
        let f = lp("A^3 - 2*A + 5");
        let m = mahler(&f, TR).unwrap();
        let shifted = f.mul_monomial(-1, 7);
        assert!((mahler(&shifted, TR).unwrap() - m).abs() < 1e-9 * m);
        let timesd = &f * &LaurentPoly::d();
        assert!((mahler(&timesd, TR).unwrap() - m).abs() < 1e-6 * m);
    }

    fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> LaurentPoly {
        loop {
            let terms: Vec<(i64, BigInt)> = (0..=deg)
                .map(|e| (e as i64, BigInt::from(rng.gen_range(-5i64..=5))))
                .collect();
            let p = LaurentPoly::from_terms(terms);
            if p.max_exp() == Some(deg as i64) && !p.coeff(0).is_zero() {
                return p;
            }
        }
    }

    #[test]
    fn mahler_multiplicativity_and_schinzel_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(20260817);
        for _ in 0..25 {
            let df = rng.gen_range(2..=10);
            let f = random_poly(&mut rng, df);
            let dg = rng.gen_range(2..=10);
            let g = random_poly(&mut rng, dg);
            let mf = mahler(&f, TR).unwrap();
            let mg = mahler(&g, TR).unwrap();
            let mfg = mahler(&(&f * &g), TR).unwrap();
            assert!(
                (mfg - mf * mg).abs() <= 1e-6 * mf * mg,
                "multiplicativity: {mfg} vs {mf}*{mg}"
            );
            let l2 = big_to_f64(&BigInt::from(f.l2_norm_sq()));
            assert!(mf <= l2.sqrt() + 1e-9, "norm bound: {mf} vs sqrt {l2}");
        }
    }

    #[test]
    fn normalized_pair_fixes_anchor_gauge() {
        let fam = builtin_family("2-1").unwrap();
        let form = family_closed_form(&fam.base, &fam.tangle).unwrap();
        let (a, b) = normalized_lambda_pair(&form.lambda1, &form.lambda2).unwrap();
        assert_eq!(a, lp("A^8 - A^4 + 1"));
        assert_eq!(b, lp("A^12 - A^8 - 1"));
        let (p0, p1) = v_poly_symbolic(&form.lambda1, &form.lambda2).unwrap();
        let s = lp("A^12 - A^4");
        assert_eq!(p0, -&(&s * &s));
        assert_eq!(p1, &a * &b);
        // The t = 5/4 slice, denominator cleared: 4·P0 + 5·P1.
        let v54 = v_poly(&form.lambda1, &form.lambda2, 5, 4).unwrap();
        assert_eq!(v54, &p0.mul_monomial(4, 0) + &p1.mul_monomial(5, 0));
    }

    #[test]
    fn v_poly_domain_and_degeneracies() {
        let l = lp("A^2 + 3");
        assert!(v_poly(&l, &l, 9, 2).is_err());
        assert!(v_poly(&l, &l, -1, 1).is_err());
        assert!(v_poly(&l, &l, 5, 0).is_err());
        // t = 4 with λ₁ = λ₂ vanishes identically.
        assert!(v_poly(&l, &l, 4, 1).unwrap().is_zero());
        // λ₂ = 0 leaves −λ₁².
        let v = v_poly(&l, &LaurentPoly::zero(), 1, 1).unwrap();
        assert_eq!(v, -&(&l * &l));
    }

    #[test]
    fn twist_curve_is_the_unit_circle() {
        // λ-pair (A⁻², A⁶): ratio A⁸, so |λ₁| = |λ₂| ⟺ |z| = 1.
        let pts =
            equimodular_points(&lp("A^-2"), &lp("A^6"), &default_t_grid(), &Tolerances::default())
                .unwrap();
        assert!(!pts.is_empty());
        for p in &pts {
            assert!((p.z.norm() - 1.0).abs() < 1e-8, "t = {}, |z| = {}", p.t, p.z.norm());
        }
    }

    #[test]
    fn anchor_curve_has_outside_witness() {
        let fam = builtin_family("2-1").unwrap();
        let form = family_closed_form(&fam.base, &fam.tangle).unwrap();
        let verdict =
            divergence_certificate(&form, &default_t_grid(), &Tolerances::default()).unwrap();
        assert!(verdict.diverges);
        let w = verdict.witness.unwrap();
        assert!((w.t - 1.25).abs() < 1e-12, "witness t = {}", w.t);
        assert!(w.z.norm() > 1.0 + DIVERGENCE_MARGIN);
        assert!(!w.isolated_flag);
    }

    #[test]
    fn twist_certificate_is_inconclusive() {
        let fam = builtin_family("twist").unwrap();
        let form = family_closed_form(&fam.base, &fam.tangle).unwrap();
        let verdict =
            divergence_certificate(&form, &default_t_grid(), &Tolerances::default()).unwrap();
        assert!(!verdict.diverges);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn degenerate_pairs_violate_hypotheses() {
        let fam = builtin_family("twist").unwrap();
        let mut form = family_closed_form(&fam.base, &fam.tangle).unwrap();
        form.lambda2 = LaurentPoly::zero();
        assert!(matches!(
            divergence_certificate(&form, &default_t_grid(), &Tolerances::default()),
            Err(Error::HypothesisViolation(_))
        ));
        form.lambda2 = lp("A^2 + 1").mul_monomial(3, 0);
        form.lambda1 = lp("A^2 + 1");
        assert!(matches!(
            divergence_certificate(&form, &default_t_grid(), &Tolerances::default()),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn anchor_mahler_grows() {
        let fam = builtin_family("2-1").unwrap();
        let form = family_closed_form(&fam.base, &fam.tangle).unwrap();
        let trend = mahler_trend(&form, &[5, 10, 20], TR).unwrap();
        assert!(trend[0].1 < trend[1].1 && trend[1].1 < trend[2].1, "{trend:?}");
        // Euclidean and plain agree whenever the lead is ±1 (it is here).
        for (_, m, me) in &trend {
            assert!((m - me).abs() < 1e-9 * m.max(1.0));
        }
    }

    #[test]
    fn grid_contains_distinguished_values() {
        let g = default_t_grid();
        assert_eq!(g.len(), 81);
        assert!(g.contains(&0.0) && g.contains(&1.25) && g.contains(&4.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }
}
