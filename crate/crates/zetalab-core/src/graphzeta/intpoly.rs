//! Exact integer polynomial and truncated series arithmetic over BigInt,
//! fraction-free integer determinants, exact rational interpolation, and
//! square-free decomposition.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GraphError;

/// A polynomial with exact integer coefficients, ascending in T, trailing
/// zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + bigint_to_f64(c);
        }
        acc
    }

    /// Truncation to degree `deg` as a series.
    pub fn truncate(&self, deg: usize) -> TruncatedSeries {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(deg + 1).cloned().collect();
        coeffs.resize(deg + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }
}

pub fn bigint_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// A power series in T truncated at a fixed degree; exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>, // length = trunc_deg + 1
}

impl TruncatedSeries {
    pub fn one(deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    pub fn trunc_deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiply by (1 - T^len) in place, dropping overflowed degrees.
    pub fn mul_one_minus_power(&mut self, len: usize) {
        let deg = self.trunc_deg();
        for k in (0..=deg).rev() {
            if k >= len {
                let lower = self.coeffs[k - len].clone();
                self.coeffs[k] -= lower;
            }
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let deg = self.trunc_deg().min(other.trunc_deg());
        let mut out = vec![BigInt::zero(); deg + 1];
        for i in 0..=deg {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=deg - i {
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires constant term ±1 so the result is
    /// again integral.
    pub fn inverse(&self) -> Result<TruncatedSeries, GraphError> {
        let c0 = self.coeff(0);
        if !(c0.clone().abs().is_one()) {
            return Err(GraphError::Invalid(format!(
                "series inverse needs constant term ±1, got {c0}"
            )));
        }
        let deg = self.trunc_deg();
        let mut inv = vec![BigInt::zero(); deg + 1];
        inv[0] = c0.clone(); // 1/±1 = ±1
        for k in 1..=deg {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -&c0 * acc;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Exact Newton interpolation through integer points: given values
/// p(x_i) = y_i at distinct integer nodes, returns the unique polynomial
/// of degree < len. Errors if the result is not integral.
pub fn interpolate_integer(xs: &[BigInt], ys: &[BigInt]) -> Result<IntPolynomial, GraphError> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let rat = |x: &BigInt| BigRational::from_integer(x.clone());
    // divided differences
    let mut dd: Vec<BigRational> = ys.iter().map(rat).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = rat(&xs[i]) - rat(&xs[i - level]);
            dd[i] = num / den;
        }
    }
    // expand Newton form Σ dd[i] Π_{j<i} (T - x_j)
    let mut result = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::zero(); n];
    basis[0] = BigRational::one();
    let mut basis_len = 1usize;
    for (i, d) in dd.iter().enumerate() {
        for (r, b) in result.iter_mut().zip(basis.iter().take(basis_len)) {
            *r += d * b;
        }
        if i + 1 < n {
            // basis *= (T - x_i)
            for k in (0..basis_len).rev() {
                let shifted = basis[k].clone();
                basis[k + 1] += &shifted;
                basis[k] = -rat(&xs[i]) * shifted;
            }
            basis_len += 1;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for r in result {
        if !r.denom().is_one() {
            return Err(GraphError::Internal(format!(
                "interpolation produced non-integer coefficient {r}"
            )));
        }
        coeffs.push(r.numer().clone());
    }
    Ok(IntPolynomial::new(coeffs))
}

fn content(p: &IntPolynomial) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = num_bigint_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn num_bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

fn primitive_part(p: &IntPolynomial) -> IntPolynomial {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Pseudo-remainder of a by b (b nonzero).
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree();
    let lead_b = b.coeff(db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= db && !(r.degree() == 0 && db == 0) {
        let dr = r.degree();
        let lead_r = r.coeff(dr);
        // r = lead_b * r - lead_r * T^{dr-db} * b
        let mut scaled_b = vec![BigInt::zero(); dr - db];
        scaled_b.extend(b.coeffs().iter().map(|c| c * &lead_r));
        let scaled_b = IntPolynomial::new(scaled_b);
        let scaled_r = IntPolynomial::new(r.coeffs().iter().map(|c| c * &lead_b).collect());
        r = scaled_r.sub(&scaled_b);
        if r.degree() == dr && !r.is_zero() {
            // leading term must have cancelled; degree strictly drops
            break;
        }
        if db == 0 {
            return IntPolynomial::zero();
        }
    }
    r
}

/// GCD of integer polynomials (primitive, positive leading coefficient).
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return normalize_sign(primitive_part(b));
    }
    if b.is_zero() {
        return normalize_sign(primitive_part(a));
    }
    let (mut f, mut g) = if a.degree() >= b.degree() {
        (primitive_part(a), primitive_part(b))
    } else {
        (primitive_part(b), primitive_part(a))
    };
    loop {
        let r = pseudo_rem(&f, &g);
        if r.is_zero() {
            return normalize_sign(primitive_part(&g).clone());
        }
        f = g;
        g = primitive_part(&r);
        if g.degree() == 0 {
            return IntPolynomial::one();
        }
    }
}

fn normalize_sign(p: IntPolynomial) -> IntPolynomial {
    if p.coeffs().last().map(|c| c.is_negative()).unwrap_or(false) {
        IntPolynomial::new(p.coeffs().iter().map(|c| -c).collect())
    } else {
        p
    }
}

/// Exact polynomial division, panicking on nonzero remainder (used only
/// where divisibility is guaranteed).
pub fn exact_div(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero(), "division by zero polynomial");
    let mut rem: Vec<BigRational> = a
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let db = b.degree();
    let lead = BigRational::from_integer(b.coeff(db));
    if rem.len() < db + 1 {
        assert!(a.is_zero(), "exact_div: degree mismatch");
        return IntPolynomial::zero();
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let q = &rem[i + db] / &lead;
        quot[i] = q.clone();
        for (j, bc) in b.coeffs().iter().enumerate() {
            let sub = &q * BigRational::from_integer(bc.clone());
            rem[i + j] -= sub;
        }
    }
    assert!(
        rem.iter().all(|r| r.is_zero()),
        "exact_div: nonzero remainder"
    );
    IntPolynomial::new(
        quot.into_iter()
            .map(|q| {
                assert!(q.denom().is_one(), "exact_div: non-integer quotient");
                q.numer().clone()
            })
            .collect(),
    )
}

/// Yun square-free decomposition: returns (factor, multiplicity) pairs
/// with f = const · Π factor_i^{mult_i}, factors primitive, pairwise
/// coprime and square-free, sorted by multiplicity.
///
/// The w/y/z recurrence needs the true derivative content: w = f/g and
/// y = f'/g must keep their integer contents or z = y - w' never reaches
/// zero (the primitive gcd divides both exactly by the Gauss lemma).
pub fn square_free_decomposition(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    if f.is_zero() || f.degree() == 0 {
        return vec![];
    }
    let fp = f.derivative();
    let a0 = poly_gcd(f, &fp);
    let mut b = exact_div(f, &a0);
    let mut c = exact_div(&fp, &a0);
    let mut out = Vec::new();
    let mut mult = 1usize;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree() >= 1 {
                out.push((normalize_sign(primitive_part(&b)), mult));
            }
            break;
        }
        let a = poly_gcd(&b, &d);
        if a.degree() >= 1 {
            out.push((a.clone(), mult));
        }
        b = exact_div(&b, &a);
        c = exact_div(&d, &a);
        mult += 1;
        if b.degree() == 0 {
            break;
        }
    }
    out
}
