//! Stumpff functions `c2` and `c3`, and the small-argument helpers shared by
//! the anomaly maps.

/// Below this `|z|` the Stumpff functions are summed as power series.
pub const SERIES_THRESHOLD: f64 = 1.0;

// 1/(2k+2)! and 1/(2k+3)! for k = 0..14.
const SERIES_TERMS: usize = 15;

const INV_FACTORIAL: [f64; 2 * SERIES_TERMS + 3] = {
    let mut out = [0.0; 2 * SERIES_TERMS + 3];
    let mut f = 1.0;
    out[0] = 1.0;
    let mut n = 1;
    while n < out.len() {
        f *= n as f64;
        out[n] = 1.0 / f;
        n += 1;
    }
    out
};

/// `c2(z) = (1 - cos sqrt z) / z`, continued analytically to `z <= 0`.
pub fn c2(z: f64) -> f64 {
    if z.abs() < SERIES_THRESHOLD {
        let mut sum = 0.0;
        for k in (0..SERIES_TERMS).rev() {
            sum = sum * (-z) + INV_FACTORIAL[2 * k + 2];
        }
        sum
    } else if z > 0.0 {
        let s = (0.5 * z.sqrt()).sin();
        2.0 * s * s / z
    } else {
        let s = (0.5 * (-z).sqrt()).sinh();
        -2.0 * s * s / z
    }
}

/// `c3(z) = (sqrt z - sin sqrt z) / z^(3/2)`, continued analytically to `z <= 0`.
pub fn c3(z: f64) -> f64 {
    if z.abs() < SERIES_THRESHOLD {
        let mut sum = 0.0;
        for k in (0..SERIES_TERMS).rev() {
            sum = sum * (-z) + INV_FACTORIAL[2 * k + 3];
        }
        sum
    } else if z > 0.0 {
        let w = z.sqrt();
        (w - w.sin()) / (z * w)
    } else {
        let w = (-z).sqrt();
        (w.sinh() - w) / (-z * w)
    }
}

/// `x - sin x` without cancellation near zero.
pub fn x_minus_sin(x: f64) -> f64 {
    if x.abs() < 1.0 {
        // x^3 * c3(x^2)
        x * x * x * c3(x * x)
    } else {
        x - x.sin()
    }
}

/// `sinh x - x` without cancellation near zero.
pub fn sinh_minus_x(x: f64) -> f64 {
    if x.abs() < 1.0 {
        x * x * x * c3(-x * x)
    } else {
        x.sinh() - x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_matches_closed_form_at_the_switch() {
        for &z in &[0.999_999f64, -0.999_999, 0.5, -0.5] {
            let w = z.abs().sqrt();
            let (c2_ref, c3_ref) = if z > 0.0 {
                ((1.0 - w.cos()) / z, (w - w.sin()) / (z * w))
            } else {
                ((w.cosh() - 1.0) / -z, (w.sinh() - w) / (-z * w))
            };
            assert!((c2(z) - c2_ref).abs() < 1e-15, "c2({z})");
            assert!((c3(z) - c3_ref).abs() < 1e-15, "c3({z})");
        }
        assert_eq!(c2(0.0), 0.5);
        assert_eq!(c3(0.0), 1.0 / 6.0);
    }

    #[test]
    fn continuity_across_threshold() {
        for &z in &[1.0f64, -1.0] {
            let lo = z * (1.0 - 1e-12);
            let hi = z * (1.0 + 1e-12);
            assert!((c2(lo) - c2(hi)).abs() < 1e-13);
            assert!((c3(lo) - c3(hi)).abs() < 1e-13);
        }
    }

    #[test]
    fn cancellation_free_differences() {
        let x: f64 = 1e-5;
        assert!((x_minus_sin(x) / (x * x * x / 6.0) - 1.0).abs() < 1e-9);
        assert!((sinh_minus_x(x) / (x * x * x / 6.0) - 1.0).abs() < 1e-9);
        assert!((x_minus_sin(0.9) - (0.9 - 0.9f64.sin())).abs() < 1e-16);
        assert!((sinh_minus_x(-0.9) - ((-0.9f64).sinh() + 0.9)).abs() < 1e-16);
        assert_eq!(x_minus_sin(2.0), 2.0 - 2.0f64.sin());
    }
}
