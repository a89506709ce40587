//! Quadrature rules: adaptive Simpson in 1-d, composite Simpson in 1-d/2-d.

/// Adaptive Simpson quadrature of `f` on `[a, b]`.
///
/// Classic bisection scheme with the Richardson correction `(s2 - s1)/15`;
/// the tolerance is absolute and is halved on each split, which keeps the
/// total error below `tol` for integrands without non-integrable
/// singularities.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        m: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, tol, 48)
}

/// Composite Simpson rule with `n` panels (`n` is rounded up to even).
pub fn composite_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = if n % 2 == 0 { n.max(2) } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Tensor-product composite Simpson rule on `[ax, bx] x [ay, by]`.
pub fn composite_simpson_2d(
    f: &dyn Fn(f64, f64) -> f64,
    ax: f64,
    bx: f64,
    ay: f64,
    by: f64,
    nx: usize,
    ny: usize,
) -> f64 {
    let g = |y: f64| composite_simpson(&|x| f(x, y), ax, bx, nx);
    composite_simpson(&g, ay, by, ny)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adaptive_simpson_polynomial_is_exact() {
        // Simpson is exact on cubics; the adaptive wrapper must not break that.
        let v = adaptive_simpson(&|x| 3.0 * x * x - 2.0 * x + 1.0, -1.0, 2.0, 1e-12);
        assert!((v - (9.0 - 3.0 + 3.0)).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn adaptive_simpson_matches_known_transcendentals() {
        let v = adaptive_simpson(&|x| x.exp(), 0.0, 1.0, 1e-12);
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-11);
        let v = adaptive_simpson(&|x| 1.0 / (1.0 + x * x), 0.0, 1.0, 1e-12);
        assert!((v - std::f64::consts::FRAC_PI_4).abs() < 1e-11);
    }

    #[test]
    fn adaptive_simpson_handles_peaked_integrand() {
        // Narrow Lorentzian: integral of t/(x^2+t^2) over [-1,1] = 2*atan(1/t).
        let t = 1e-3;
        let v = adaptive_simpson(&|x| t / (x * x + t * t), -1.0, 1.0, 1e-12);
        assert!((v - 2.0 * (1.0 / t).atan()).abs() < 1e-9, "got {v}");
    }

    #[test]
    fn composite_2d_matches_separable_product() {
        let v = composite_simpson_2d(&|x, y| x * x * y, 0.0, 1.0, 0.0, 2.0, 64, 64);
        assert!((v - (1.0 / 3.0) * 2.0).abs() < 1e-10);
    }
}
