//! Small quadrature toolbox: Gauss-Legendre nodes and Richardson-extrapolated
//! (Romberg) trapezoid sums on nested dyadic node sets.

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Nodes are found by Newton iteration on the Legendre polynomial, seeded
/// with the Chebyshev estimate; this is accurate to machine precision for
/// the modest orders (`n <= 32`) used in this crate.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "need at least one quadrature node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev initial guess for the i-th positive root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_with_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
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

/// Average of `f` over `[a, b]` by Gauss-Legendre quadrature with `n` nodes.
pub fn average<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        acc += w * f(mid + half * x);
    }
    // (1/(b-a)) * (b-a)/2 * sum
    0.5 * acc
}

/// Integral of `f` over `[a, b]` by composite trapezoid sums on nested dyadic
/// node sets, accelerated with `levels` Richardson extrapolations.
///
/// `levels = 1` uses the endpoints plus one internal node (Simpson-exact),
/// `levels = 2, 3, 4` add 3, 7 and 15 internal nodes, giving errors of order
/// `O((b-a)^{2 levels + 3})` per call on smooth integrands.
pub fn romberg<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, levels: usize) -> f64 {
    let rows = levels + 1;
    // table[i][j]: trapezoid with 2^i pieces, extrapolated j times.
    let mut table = vec![vec![0.0; rows]; rows];
    let width = b - a;
    table[0][0] = 0.5 * width * (f(a) + f(b));
    for i in 1..rows {
        let pieces = 1usize << i;
        let step = width / pieces as f64;
        let mut sum = 0.0;
        for j in (1..pieces).step_by(2) {
            sum += f(a + j as f64 * step);
        }
        table[i][0] = 0.5 * table[i - 1][0] + step * sum;
        let mut factor = 4.0;
        for j in 1..=i {
            table[i][j] = (factor * table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
    }
    table[levels][levels]
}

/// Compensated (Kahan) summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Kahan-compensated dot product.
pub fn dot_compensated(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = KahanSum::default();
    for (x, y) in a.iter().zip(b) {
        acc.add(x * y);
    }
    acc.value()
}
