//! Scalar root-finding helpers: bisection with a secant refinement and a
//! Newton polish step used by the cubic solver and tangency scans.

/// Find a root of `f` in `[lo, hi]` assuming `f(lo)` and `f(hi)` have
/// opposite signs. Bisection interleaved with secant steps; always converges.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    let fhi = f(hi);
    debug_assert!(flo * fhi <= 0.0, "bisect requires a bracketing interval");
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    let mut fhi = fhi;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        // Secant candidate, clipped to the interior; fall back to midpoint.
        let mut m = (lo * fhi - hi * flo) / (fhi - flo);
        let mid = 0.5 * (lo + hi);
        if !(m.is_finite() && m > lo + 0.1 * (hi - lo) && m < hi - 0.1 * (hi - lo)) {
            m = mid;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if flo * fm < 0.0 {
            hi = m;
            fhi = fm;
        } else {
            lo = m;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

/// A few Newton iterations from `x0`, falling back to `x0` if the iteration
/// leaves `[lo, hi]` or the derivative degenerates.
pub fn newton_polish<F, G>(mut f: F, mut df: G, x0: f64, lo: f64, hi: f64) -> f64
where
    F: FnMut(f64) -> f64,
    G: FnMut(f64) -> f64,
{
    let mut x = x0;
    for _ in 0..4 {
        let d = df(x);
        if d == 0.0 || !d.is_finite() {
            return x;
        }
        let step = f(x) / d;
        let next = x - step;
        if !next.is_finite() || next < lo || next > hi {
            return x;
        }
        if (next - x).abs() <= 1e-16 * (1.0 + x.abs()) {
            return next;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14);
        assert!((r - 2.0f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn newton_polish_improves() {
        let r = newton_polish(|x| x * x - 2.0, |x| 2.0 * x, 1.4, 1.0, 2.0);
        assert!((r - 2.0f64.sqrt()).abs() < 1e-14);
    }
}
