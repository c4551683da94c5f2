//! The Borel distribution and the asymptotic boundary laws it induces
//! for the first coordinate of a uniform parking function. Near the
//! right end of the street the coordinate behaves like a Borel variable
//! with parameter m/n; near the plateau edge the deviation from the
//! constant value is Poisson-shaped.

use statrs::function::gamma::ln_gamma;

/// P(X = j) = e^{−μj}(μj)^{j−1}/j! for j ≥ 1, computed in log space so
/// large j stay finite.
pub fn borel_pmf(mu: f64, j: u64) -> f64 {
    assert!(j >= 1, "the Borel distribution is supported on j >= 1");
    assert!((0.0..=1.0).contains(&mu), "Borel parameter must lie in [0, 1]");
    if mu == 0.0 {
        return if j == 1 { 1.0 } else { 0.0 };
    }
    let jf = j as f64;
    (-(mu * jf) + (jf - 1.0) * (mu * jf).ln() - ln_gamma(jf + 1.0)).exp()
}

/// Tail Q_μ(j) = P(X ≥ j).
///
/// For j = 1 this is the whole (proper, μ ≤ 1) distribution, hence 1.
/// Otherwise the tail is summed directly, stopping once the running
/// term drops below 1e−15 of the accumulated mass after index
/// 10/(1−μ). Close to the critical parameter that stopping index
/// explodes while the head stays short, so there the complement of the
/// head is used instead.
pub fn borel_tail(mu: f64, j: u64) -> f64 {
    assert!((0.0..=1.0).contains(&mu), "Borel parameter must lie in [0, 1]");
    if j <= 1 {
        return 1.0;
    }
    if mu > 0.99 {
        let head: f64 = (1..j).map(|i| borel_pmf(mu, i)).sum();
        return (1.0 - head).max(0.0);
    }
    let settle = (10.0 / (1.0 - mu)).ceil() as u64;
    let mut acc = 0.0f64;
    let mut i = j;
    loop {
        let term = borel_pmf(mu, i);
        acc += term;
        if i > settle && term < 1e-15 * acc {
            return acc;
        }
        i += 1;
    }
}

/// Right-hand sides of the four boundary approximations for offset j,
/// ready to compare against the exact coordinate law.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryLaws {
    pub cars: usize,
    pub spots: usize,
    pub offset: usize,
    /// Borel parameter μ = m/n.
    pub mu: f64,
    /// Poisson parameter λ = n(1−c)/e of the plateau deviation.
    pub lambda: f64,
    /// ≈ P(feasible firsts = [1, n−j]): Borel pmf at j+1, scaled by 1/n.
    pub borel_prefix: f64,
    /// ≈ P(π₁ = n−j): (1 − Q_μ(j+2))/n.
    pub borel_coordinate: f64,
    /// ≈ P([1, s+j])/P([1, s]) for s = n−m+1: the Poisson ratio λ^j/j!.
    pub poisson_prefix_ratio: f64,
    /// Exact plateau value P(π₁ = j) for j ≤ n−m+1.
    pub plateau: f64,
}

pub fn boundary_laws(m: usize, n: usize, j: usize) -> BoundaryLaws {
    assert!(m >= 1 && m <= n);
    let mu = m as f64 / n as f64;
    let lambda = n as f64 * (1.0 - mu) / std::f64::consts::E;
    let scale = 1.0 / n as f64;
    let jf = j as f64;
    BoundaryLaws {
        cars: m,
        spots: n,
        offset: j,
        mu,
        lambda,
        borel_prefix: scale * borel_pmf(mu, j as u64 + 1),
        borel_coordinate: scale * (1.0 - borel_tail(mu, j as u64 + 2)),
        poisson_prefix_ratio: if lambda > 0.0 {
            (jf * lambda.ln() - ln_gamma(jf + 1.0)).exp()
        } else {
            if j == 0 { 1.0 } else { 0.0 }
        },
        plateau: (n - m + 2) as f64 / ((n - m + 1) as f64 * (n + 1) as f64),
    }
}
