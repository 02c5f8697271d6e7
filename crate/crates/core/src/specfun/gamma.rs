use crate::scalar::Real;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln |Gamma(x)|`.  Poles return +inf.
pub fn ln_gamma<R: Real>(x: R) -> R {
    let half = R::lit(0.5);
    if x < half {
        // reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        let s = (R::PI() * x).sin().abs();
        if s == R::zero() {
            return R::infinity();
        }
        return R::PI().ln() - s.ln() - ln_gamma(R::one() - x);
    }
    let x = x - R::one();
    let mut acc = R::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += R::lit(c) / (x + R::of(i as i64));
    }
    let t = x + R::lit(LANCZOS_G) + half;
    half * (R::TAU()).ln() + (x + half) * t.ln() - t + acc.ln()
}

/// `ln n!`; exact products below 21 where `n!` fits in a `u64`.
pub fn ln_factorial<R: Real>(n: u64) -> R {
    if n < 21 {
        let f: u64 = (1..=n).product();
        return R::lit(f as f64).ln();
    }
    ln_gamma(R::lit(n as f64 + 1.0))
}

/// `ln C(n, k)` for `0 <= k <= n`.
pub fn ln_binomial<R: Real>(n: u64, k: u64) -> R {
    assert!(k <= n, "binomial C({n}, {k}) undefined");
    ln_factorial::<R>(n) - ln_factorial::<R>(k) - ln_factorial::<R>(n - k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert!((ln_gamma(1.0f64)).abs() < 1e-15);
        assert!((ln_gamma(2.0f64)).abs() < 1e-15);
        assert!((ln_gamma(0.5f64) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-14);
        // 30! = 265252859812191058636308480000000
        let want = 265_252_859_812_191_058_636_308_480_000_000f64.ln();
        assert!((ln_factorial::<f64>(30) - want).abs() < 1e-13 * want);
        assert!((ln_gamma(-0.5f64) - (2.0 * std::f64::consts::PI.sqrt()).ln()).abs() < 1e-14);
    }

    #[test]
    fn factorial_recurrence() {
        for n in 1..200u64 {
            let d = ln_factorial::<f64>(n) - ln_factorial::<f64>(n - 1) - (n as f64).ln();
            assert!(d.abs() < 1e-12 * (n as f64).max(10.0), "n = {n}: {d}");
        }
        assert!((ln_binomial::<f64>(10, 3) - 120f64.ln()).abs() < 1e-14);
    }
}
