//! Truncated power-series arithmetic in f64, used to build the small-time
//! heat-trace expansion of the shifted-linear sequence.

/// Coefficients of e^{x t} up to t^(len-1).
pub fn exp_series(x: f64, len: usize) -> Vec<f64> {
    let mut c = vec![0.0; len];
    c[0] = 1.0;
    for k in 1..len {
        c[k] = c[k - 1] * x / k as f64;
    }
    c
}

/// Reciprocal of a series with a[0] != 0.
pub fn recip_series(a: &[f64], len: usize) -> Vec<f64> {
    let mut q = vec![0.0; len];
    q[0] = 1.0 / a[0];
    for k in 1..len {
        let mut acc = 0.0;
        for j in 1..=k.min(a.len() - 1) {
            acc += a[j] * q[k - j];
        }
        q[k] = -acc / a[0];
    }
    q
}

pub fn mul_series(a: &[f64], b: &[f64], len: usize) -> Vec<f64> {
    let mut c = vec![0.0; len];
    for i in 0..a.len().min(len) {
        if a[i] == 0.0 {
            continue;
        }
        for j in 0..b.len().min(len - i) {
            c[i + j] += a[i] * b[j];
        }
    }
    c
}

/// Coefficients of t/(e^t - 1); the generating series of B_k/k!.
pub fn t_over_expm1_series(len: usize) -> Vec<f64> {
    // e^t - 1 = t · Σ_{k≥0} t^k/(k+1)!
    let denom: Vec<f64> = {
        let mut d = vec![0.0; len];
        let mut fact = 1.0f64;
        for (k, slot) in d.iter_mut().enumerate() {
            fact *= (k + 1) as f64;
            *slot = 1.0 / fact;
        }
        d
    };
    recip_series(&denom, len)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_generating_series() {
        let c = t_over_expm1_series(10);
        // B_0 = 1, B_1 = -1/2, B_2 = 1/6, B_3 = 0, B_4 = -1/30
        assert!((c[0] - 1.0).abs() < 1e-15);
        assert!((c[1] + 0.5).abs() < 1e-15);
        assert!((c[2] - 1.0 / 12.0).abs() < 1e-15);
        assert!(c[3].abs() < 1e-15);
        assert!((c[4] + 1.0 / 720.0).abs() < 1e-16);
    }

    #[test]
    fn recip_inverts() {
        let a = exp_series(0.7, 12);
        let inv = recip_series(&a, 12);
        let prod = mul_series(&a, &inv, 12);
        assert!((prod[0] - 1.0).abs() < 1e-15);
        for c in &prod[1..] {
            assert!(c.abs() < 1e-14);
        }
    }
}
