//! Gauss-Legendre quadrature.

use std::f64::consts::PI;

/// Nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Rule with `n` nodes, computed by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "need at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integral of `f` over `[a, b]`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }

    /// Composite rule on `pieces` equal subintervals.
    pub fn integrate_composite(
        &self,
        a: f64,
        b: f64,
        pieces: usize,
        mut f: impl FnMut(f64) -> f64,
    ) -> f64 {
        let h = (b - a) / pieces as f64;
        (0..pieces)
            .map(|k| {
                let lo = a + h * k as f64;
                self.integrate(lo, lo + h, &mut f)
            })
            .sum()
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integral over `[a, b]` with the number of subintervals doubled until two
/// successive estimates agree to `rel_tol`. Starts from one 64-node panel
/// per `panel_width` of the interval.
pub fn integrate_adaptive(
    a: f64,
    b: f64,
    panel_width: f64,
    rel_tol: f64,
    mut f: impl FnMut(f64) -> f64,
) -> f64 {
    let rule = GaussLegendre::new(64);
    let mut pieces = (((b - a).abs() / panel_width).ceil() as usize).max(1);
    let mut prev = rule.integrate_composite(a, b, pieces, &mut f);
    for _ in 0..8 {
        pieces *= 2;
        let next = rule.integrate_composite(a, b, pieces, &mut f);
        if (next - prev).abs() <= rel_tol * next.abs().max(f64::MIN_POSITIVE) {
            return next;
        }
        prev = next;
    }
    prev
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 16, 64] {
            let g = GaussLegendre::new(n);
            let s: f64 = g.integrate(-1.0, 1.0, |_| 1.0);
            assert!((s - 2.0).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn exact_for_polynomials() {
        let g = GaussLegendre::new(5);
        // degree 9 is exact with 5 nodes
        let v = g.integrate(0.0, 2.0, |x| x.powi(9));
        assert!((v - 102.4).abs() < 1e-12);
    }

    #[test]
    fn smooth_periodic_integrand() {
        let v = integrate_adaptive(0.0, 2.0 * PI, PI, 1e-14, |x| 1.0 / (2.0 + x.cos()));
        assert!((v - 2.0 * PI / 3f64.sqrt()).abs() < 1e-13);
    }
}
