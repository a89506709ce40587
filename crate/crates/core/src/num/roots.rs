//! Root finding: safeguarded bisection.

use crate::error::{Error, Result};

/// Bisection on `[lo, hi]`; requires a sign change. Runs until the bracket
/// width drops below `tol` (absolute). Robust against flat spots and the
/// only rounding hazard is the midpoint, so this is the workhorse for the
/// implicit equations in the barrier constructions.
pub fn bisect(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::invalid(format!(
            "bisection bracket [{a}, {b}] has no sign change"
        )));
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= tol || m == a || m == b {
            return Ok(m);
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(&|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        let e = bisect(&|x| x * x + 1.0, -1.0, 1.0, 1e-12).unwrap_err();
        assert!(e.to_string().contains("no sign change"));
    }
}
