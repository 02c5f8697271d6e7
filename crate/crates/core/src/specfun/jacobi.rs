use super::dd::{two_prod, two_sum};
use crate::error::{contract, Result};
use crate::scalar::Real;

/// Jacobi polynomial `P_k^{(alpha, beta)}(x)`.
///
/// Three-term recurrence with each step's `A p1 - B p0` formed by a
/// compensated dot product.  When a recurrence denominator vanishes (only
/// possible for `alpha + beta` a negative integer) the explicit sum is used.
pub fn jacobi_p<R: Real>(k: u32, alpha: R, beta: R, x: R) -> Result<R> {
    if alpha <= -R::one() {
        return contract("jacobi_p needs alpha > -1");
    }
    if !(x >= -R::one() && x <= R::one()) {
        return contract("jacobi_p needs x in [-1, 1]");
    }
    if !beta.is_finite() || !alpha.is_finite() {
        return contract("jacobi_p parameters must be finite");
    }
    let two = R::lit(2.0);
    if k == 0 {
        return Ok(R::one());
    }
    let ab = alpha + beta;
    let p1 = (alpha + R::one()) + (ab + two) * (x - R::one()) / two;
    if k == 1 {
        return Ok(p1);
    }
    let degenerate = (2..=k).any(|n| {
        let n = R::of(n as i64);
        n + ab == R::zero() || two * n + ab - two == R::zero()
    });
    if degenerate {
        return Ok(jacobi_sum(k, alpha, beta, x));
    }
    let (mut p0, mut p1) = (R::one(), p1);
    for n in 2..=k {
        let n = R::of(n as i64);
        let c = two * n + ab;
        let denom = two * n * (n + ab) * (c - two);
        let a = (c - R::one()) * (c * (c - two) * x + alpha * alpha - beta * beta);
        let b = two * (n + alpha - R::one()) * (n + beta - R::one()) * c;
        let next = dot2(a, p1, -b, p0) / denom;
        p0 = p1;
        p1 = next;
    }
    Ok(p1)
}

/// `a*x + b*y` with twice the working precision before rounding.
fn dot2<R: Real>(a: R, x: R, b: R, y: R) -> R {
    let (p, ep) = two_prod(a, x);
    let (q, eq) = two_prod(b, y);
    let (s, es) = two_sum(p, q);
    s + (ep + eq + es)
}

/// `sum_s C(k+alpha, k-s) C(k+beta, s) ((x-1)/2)^s ((x+1)/2)^(k-s)`.
fn jacobi_sum<R: Real>(k: u32, alpha: R, beta: R, x: R) -> R {
    let two = R::lit(2.0);
    let kr = R::of(k as i64);
    let lo = (x - R::one()) / two;
    let hi = (x + R::one()) / two;
    (0..=k)
        .map(|s| {
            gen_binomial(kr + alpha, k - s)
                * gen_binomial(kr + beta, s)
                * lo.powi(s as i32)
                * hi.powi((k - s) as i32)
        })
        .sum()
}

/// `C(y, m)` for real `y`.
fn gen_binomial<R: Real>(y: R, m: u32) -> R {
    (0..m).fold(R::one(), |acc, i| acc * (y - R::of(i as i64)) / R::of((m - i) as i64))
}

#[cfg(test)]
mod tests {
    use super::super::quadrature::gauss_legendre;
    use super::*;

    #[test]
    fn low_degrees() {
        assert_eq!(jacobi_p(0, 0.3, -0.7, 0.2f64).unwrap(), 1.0);
        for x in [-1.0, -0.3, 0.0, 0.8, 1.0f64] {
            assert!((jacobi_p(1, 0.0, 0.0, x).unwrap() - x).abs() < 1e-16);
            let p2 = jacobi_p(2, 0.0, 0.0, x).unwrap();
            assert!((p2 - (1.5 * x * x - 0.5)).abs() < 1e-15);
        }
        assert!(jacobi_p(2, -1.0, 0.0, 0.0f64).is_err());
        assert!(jacobi_p(2, 0.0, 0.0, 1.5f64).is_err());
    }

    #[test]
    fn legendre_orthogonality() {
        let (nodes, weights) = gauss_legendre::<f64>(64).unwrap();
        let ip: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(&x, &w)| w * jacobi_p(2, 0.0, 0.0, x).unwrap() * jacobi_p(3, 0.0, 0.0, x).unwrap())
            .sum();
        assert!(ip.abs() <= 1e-10);
        let nn: f64 = nodes.iter().zip(&weights).map(|(&x, &w)| w * jacobi_p(3, 0.0, 0.0, x).unwrap().powi(2)).sum();
        assert!((nn - 2.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn recurrence_matches_explicit_sum() {
        for k in 0..12 {
            for (a, b) in [(0.0, 0.0), (2.0, 3.0), (0.5, -0.5), (5.0, 1.0)] {
                for x in [-0.9, -0.2, 0.4, 0.95f64] {
                    let r = jacobi_p(k, a, b, x).unwrap();
                    let s = jacobi_sum(k, a, b, x);
                    assert!((r - s).abs() < 1e-10 * (1.0 + s.abs()), "k={k} a={a} b={b} x={x}: {r} vs {s}");
                }
            }
        }
    }

    #[test]
    fn degenerate_parameters_use_sum() {
        // alpha + beta = -2 makes the n = 2 denominator vanish
        let v = jacobi_p(3, 0.5, -2.5, 0.3f64).unwrap();
        assert!((v - jacobi_sum(3, 0.5, -2.5, 0.3)).abs() < 1e-14);
    }
}
