//! Adaptive composite Gauss–Legendre quadrature on finite panels.

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for k in 0..n {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            // P_n(x) and P_n'(x) via the three-term recurrence
            let (mut p0, mut p1) = (1.0f64, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for j in 2..=n {
            let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
        nodes[n - 1 - k] = x;
        weights[n - 1 - k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

pub struct Quadrature {
    lo_nodes: Vec<f64>,
    lo_weights: Vec<f64>,
    hi_nodes: Vec<f64>,
    hi_weights: Vec<f64>,
}

pub struct QuadResult<T> {
    pub value: T,
    pub err_bound: f64,
}

impl Quadrature {
    pub fn new(order: usize) -> Self {
        let (lo_nodes, lo_weights) = gauss_legendre(order);
        let (hi_nodes, hi_weights) = gauss_legendre(2 * order);
        Quadrature {
            lo_nodes,
            lo_weights,
            hi_nodes,
            hi_weights,
        }
    }

    fn fixed<T, F>(&self, f: &F, a: f64, b: f64, hi: bool) -> T
    where
        T: Accum,
        F: Fn(f64) -> T,
    {
        let (nodes, weights) = if hi {
            (&self.hi_nodes, &self.hi_weights)
        } else {
            (&self.lo_nodes, &self.lo_weights)
        };
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = T::zero();
        for (x, w) in nodes.iter().zip(weights) {
            acc = acc.add(&f(mid + half * x).scale(w * half));
        }
        acc
    }

    /// Adaptive integration of `f` over `[a, b]` to absolute tolerance
    /// `tol`; error estimated from the low/high order difference.
    pub fn adaptive<T, F>(&self, f: &F, a: f64, b: f64, tol: f64) -> QuadResult<T>
    where
        T: Accum,
        F: Fn(f64) -> T,
    {
        let mut stack = vec![(a, b, 0u32)];
        let mut value = T::zero();
        let mut err = 0.0f64;
        while let Some((a, b, depth)) = stack.pop() {
            let coarse: T = self.fixed(f, a, b, false);
            let fine: T = self.fixed(f, a, b, true);
            let local = coarse.dist(&fine);
            // local budget proportional to panel width
            if local <= tol * ((b - a) / (1.0 + b - a)).max(0.05) || depth >= 40 {
                value = value.add(&fine);
                err += local;
            } else {
                let m = 0.5 * (a + b);
                stack.push((a, m, depth + 1));
                stack.push((m, b, depth + 1));
            }
        }
        QuadResult { value, err_bound: err }
    }
}

/// Accumulator abstraction so the same quadrature drives real and complex
/// integrands.
pub trait Accum: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, by: f64) -> Self;
    fn dist(&self, other: &Self) -> f64;
}

impl Accum for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, by: f64) -> Self {
        self * by
    }
    fn dist(&self, other: &Self) -> f64 {
        (self - other).abs()
    }
}

impl Accum for num_complex::Complex64 {
    fn zero() -> Self {
        num_complex::Complex64::new(0.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn scale(&self, by: f64) -> Self {
        self * by
    }
    fn dist(&self, other: &Self) -> f64 {
        (self - other).norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomials_exactly() {
        let q = Quadrature::new(8);
        // degree-15 polynomial is exact for 8-point GL
        let f = |x: f64| x.powi(15) + 3.0 * x.powi(4) + 1.0;
        let r = q.adaptive(&f, 0.0, 1.0, 1e-13);
        let exact = 1.0 / 16.0 + 3.0 / 5.0 + 1.0;
        assert!((r.value - exact).abs() < 1e-13);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let q = Quadrature::new(12);
        let f = |x: f64| (-(x - 0.3).powi(2) * 4000.0).exp();
        let r = q.adaptive(&f, 0.0, 1.0, 1e-12);
        let exact = (std::f64::consts::PI / 4000.0).sqrt();
        assert!((r.value - exact).abs() < 1e-10, "{} vs {exact}", r.value);
    }
}
