//! Every inequality bracketing the height: the gamma-sum bounds, the
//! prime-sum bounds with their Chebyshev-theta ingredients, the final
//! two-sided envelope, and the CM-height chain.
//!
//! Verdicts use a margin guard of `2^-(bits/2)`: an inequality counts as
//! satisfied only when cleared by more than the guard. The one genuine
//! near-equality (the prime-sum lower bound, attained exactly at prime `n`)
//! is certified by exact rational comparison instead.

use rug::{Float, Rational};

use crate::cluster::finite_coefficient;
use crate::ctx::Ctx;
use crate::exact::{euler_phi, factorize};
use crate::gamma::gamma_ratio_sum;
use crate::height::{cm_height_bounds, faltings_height};
use crate::{Error, Result};

/// Named constants from the bound displays, exact decimal fractions.
/// Each is defined once; everything else references these.
pub mod consts {
    use rug::Rational;

    /// Slope of the lower envelope: `h - (n/8) log n > -0.975 n`.
    pub fn corollary_lower_slope() -> Rational {
        Rational::from((975, 1000))
    }

    /// Linear correction of the upper envelope: `... - 0.263 n`.
    pub fn corollary_upper_slope() -> Rational {
        Rational::from((263, 1000))
    }

    /// Coefficient of `n log log n` in the upper envelopes.
    pub fn loglog_coeff() -> Rational {
        Rational::from((9, 64))
    }

    /// Additive constant in the prime-sum upper bound.
    pub fn prime_sum_constant() -> Rational {
        Rational::from((7405, 10000))
    }

    /// Factor pulling the prime-sum coefficients onto `log p / p`.
    pub fn prime_sum_factor() -> Rational {
        Rational::from((9, 8))
    }

    /// Chebyshev-theta lower slope: `theta(q) >= 0.5972 q` for primes `q >= 3`.
    pub fn theta_lower_slope() -> Rational {
        Rational::from((5972, 10000))
    }

    /// `log 2n <= 1.631 log n` for `n >= 3`.
    pub fn log2n_factor() -> Rational {
        Rational::from((1631, 1000))
    }

    /// Final CM envelope slope: `... - 0.136 n`.
    pub fn cm_final_slope() -> Rational {
        Rational::from((136, 1000))
    }

    /// Totient versus log: `phi(n) >= 1.715 log n`.
    pub fn phi_log_factor() -> Rational {
        Rational::from((1715, 1000))
    }

    /// Subvariety correction, linear coefficient: `+ 0.7457 n`.
    pub fn cm_subvariety_slope() -> Rational {
        Rational::from((7457, 10000))
    }

    /// Subvariety correction, log coefficient: `- 1.2788 log n`.
    pub fn cm_subvariety_log_coeff() -> Rational {
        Rational::from((12788, 10000))
    }

    /// Subvariety correction, constant: `- 0.7456`.
    pub fn cm_subvariety_constant() -> Rational {
        Rational::from((7456, 10000))
    }

    /// Sharper intermediate height bound, linear coefficient: `- 0.8821 n`.
    pub fn intermediate_slope() -> Rational {
        Rational::from((8821, 10000))
    }

    /// Sharper intermediate height bound, constant: `+ 1.3061`.
    pub fn intermediate_constant() -> Rational {
        Rational::from((13061, 10000))
    }

    /// CM chain constant: `+ 0.5605`.
    pub fn cm_chain_constant() -> Rational {
        Rational::from((5605, 10000))
    }

    /// CM chain linear coefficient: `- 0.1364 n`.
    pub fn cm_chain_slope() -> Rational {
        Rational::from((1364, 10000))
    }

    /// CM chain log coefficient: `- 0.7788 log n`.
    pub fn cm_chain_log_coeff() -> Rational {
        Rational::from((7788, 10000))
    }

    /// `log n <= 0.3663 n` for `n >= 3`.
    pub fn log_linear_bound() -> Rational {
        Rational::from((3663, 10000))
    }
}

/// Outcome of checking one quantity against a two-sided (possibly one-sided)
/// bound. Margins are `quantity - lower` and `upper - quantity`.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: u64,
    pub quantity: Float,
    pub lower: Float,
    pub upper: Float,
    pub satisfied: bool,
    pub margin_low: Float,
    pub margin_high: Float,
}

impl BoundReport {
    fn from_parts(n: u64, quantity: Float, lower: Float, upper: Float, satisfied: bool) -> Self {
        let wp = quantity.prec();
        let margin_low = Float::with_val(wp, &quantity - &lower);
        let margin_high = Float::with_val(wp, &upper - &quantity);
        BoundReport {
            n,
            quantity,
            lower,
            upper,
            satisfied,
            margin_low,
            margin_high,
        }
    }
}

fn check_odd(n: u64) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("need odd n >= 3, got {n}")));
    }
    Ok(())
}

fn neg_infinity(wp: u32) -> Float {
    Float::with_val(wp, rug::float::Special::NegInfinity)
}

fn infinity(wp: u32) -> Float {
    Float::with_val(wp, rug::float::Special::Infinity)
}

/// `(3 - log 2 - 36 zeta'(-1)) / 12`, the slope of the gamma-sum envelope.
pub fn gamma_sum_slope(ctx: &Ctx) -> Float {
    let wp = ctx.wp();
    let mut c = Float::with_val(wp, 3u32);
    c -= ctx.ln2();
    c -= Float::with_val(wp, &ctx.zeta_prime_minus_one() * &Float::with_val(wp, 36u32));
    c /= 12u32;
    c
}

/// Two-sided envelope on the gamma-ratio sum:
/// `C n - (1 + log 2n)/2 <= S(n) <= C n` with `C` from [`gamma_sum_slope`].
pub fn gamma_sum_bounds(n: u64, ctx: &Ctx) -> Result<BoundReport> {
    check_odd(n)?;
    let wp = ctx.wp();
    let quantity = gamma_ratio_sum(n, ctx)?;
    let mut upper = gamma_sum_slope(ctx);
    upper *= Float::with_val(wp, n);
    let mut gap = ctx.ln_u64(2 * n);
    gap += 1u32;
    gap /= 2u32;
    let lower = Float::with_val(wp, &upper - &gap);
    let guard = ctx.guard();
    let satisfied = Float::with_val(wp, &quantity - &lower) > guard
        && Float::with_val(wp, &upper - &quantity) > guard;
    Ok(BoundReport::from_parts(n, quantity, lower, upper, satisfied))
}

/// The finite prime sum `sum_{p|n} c_p log p` against
/// `log n / n <= ... < (9/8) log log n + 0.7405`.
///
/// The non-strict lower bound is certified exactly: termwise
/// `c_p >= ord_p(n)/n` as rationals, with equality exactly when `n` is
/// prime. The upper bound is strict and guarded.
pub fn prime_sum_bounds(n: u64, ctx: &Ctx) -> Result<BoundReport> {
    check_odd(n)?;
    let wp = ctx.wp();
    let factors = factorize(n).expect("n >= 3");

    let mut quantity = Float::new(wp);
    let mut lower_certified = true;
    for &(p, m) in factors.factors() {
        let c = finite_coefficient(p, m);
        let mut term = ctx.ln_u64(p);
        term *= ctx.real_from_rational(&c);
        quantity += term;
        if c < (m, n) {
            lower_certified = false;
        }
    }

    let ln_n = ctx.ln_u64(n);
    let lower = Float::with_val(wp, &ln_n / &Float::with_val(wp, n));
    let mut upper = ln_n.clone().ln();
    upper *= ctx.real_from_rational(&consts::prime_sum_factor());
    upper += ctx.real_from_rational(&consts::prime_sum_constant());

    let guard = ctx.guard();
    // paper's glue inequality log 2n <= 1.631 log n, tight near n = 3
    let mut glue = ctx.real_from_rational(&consts::log2n_factor());
    glue *= &ln_n;
    glue -= ctx.ln_u64(2 * n);
    let satisfied = lower_certified
        && Float::with_val(wp, &upper - &quantity) > guard
        && glue > -guard.clone();
    Ok(BoundReport::from_parts(n, quantity, lower, upper, satisfied))
}

/// Whether the prime-sum lower bound is attained exactly, decided purely on
/// rationals: `sum c_p log p = (log n)/n` iff every coefficient satisfies
/// `c_p = ord_p(n)/n`, which happens exactly when `n` is prime.
pub fn prime_sum_lower_is_equality(n: u64) -> Result<bool> {
    check_odd(n)?;
    let factors = factorize(n).expect("n >= 3");
    Ok(factors
        .factors()
        .iter()
        .all(|&(p, m)| finite_coefficient(p, m) == (m, n)))
}

/// Plain Eratosthenes sieve.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; (limit + 1) as usize];
    let mut primes = Vec::new();
    for q in 2..=limit {
        if !composite[q as usize] {
            primes.push(q);
            let mut multiple = q * q;
            while multiple <= limit {
                composite[multiple as usize] = true;
                multiple += q;
            }
        }
    }
    primes
}

/// The two prime-distribution ingredients, verified over every prime
/// `q <= x_max`: `theta(q) >= 0.5972 q` (for `q >= 3`; the range below 101
/// is the direct-computation branch) and `sum_{p <= q} log p / p <= log q`.
/// Two reports per prime, theta first.
pub fn rosser_schoenfeld_checks(x_max: u64, ctx: &Ctx) -> Result<Vec<BoundReport>> {
    if x_max > 1_000_000 {
        return Err(Error::InvalidArgument(format!(
            "sieve budget is 10^6, got {x_max}"
        )));
    }
    let wp = ctx.wp();
    let guard = ctx.guard();
    let theta_slope = ctx.real_from_rational(&consts::theta_lower_slope());
    let mut theta = Float::new(wp);
    let mut log_over = Float::new(wp);
    let mut reports = Vec::new();
    for q in sieve_primes(x_max) {
        let ln_q = ctx.ln_u64(q);
        theta += &ln_q;
        log_over += Float::with_val(wp, &ln_q / &Float::with_val(wp, q));

        if q >= 3 {
            let mut lower = theta_slope.clone();
            lower *= Float::with_val(wp, q);
            let satisfied = Float::with_val(wp, &theta - &lower) > guard;
            reports.push(BoundReport::from_parts(
                q,
                theta.clone(),
                lower,
                infinity(wp),
                satisfied,
            ));
        }

        let satisfied = Float::with_val(wp, &ln_q - &log_over) > guard;
        reports.push(BoundReport::from_parts(
            q,
            log_over.clone(),
            neg_infinity(wp),
            ln_q,
            satisfied,
        ));
    }
    Ok(reports)
}

/// The final two-sided envelope on `h - (n/8) log n`:
/// `-0.975 n < h - (n/8) log n < (9/64) n log log n - 0.263 n`, both strict.
pub fn corollary_bounds_check(n: u64, ctx: &Ctx) -> Result<BoundReport> {
    check_odd(n)?;
    let wp = ctx.wp();
    let h = faltings_height(n, ctx)?;
    // h - (n/8) log n, assembled from the parts so the big term never enters
    let mut quantity = h.finite_sum.clone();
    quantity += &h.pi_term;
    quantity += &h.two_term;
    quantity += &h.gamma_term;

    let mut lower = ctx.real_from_rational(&consts::corollary_lower_slope());
    lower *= Float::with_val(wp, n);
    lower = -lower;

    let lnln = ctx.ln_u64(n).ln();
    let mut upper = ctx.real_from_rational(&consts::loglog_coeff());
    upper *= Float::with_val(wp, n);
    upper *= &lnln;
    let mut slope = ctx.real_from_rational(&consts::corollary_upper_slope());
    slope *= Float::with_val(wp, n);
    upper -= slope;

    let guard = ctx.guard();
    let satisfied = Float::with_val(wp, &quantity - &lower) > guard
        && Float::with_val(wp, &upper - &quantity) > guard;
    Ok(BoundReport::from_parts(n, quantity, lower, upper, satisfied))
}

/// The sharper intermediate upper bound on the height itself:
/// `(n/8) log n + (9/64) n log log n - 0.8821 n + (1/2) log n + 1.3061`.
pub fn intermediate_upper_bound(n: u64, ctx: &Ctx) -> Result<Float> {
    check_odd(n)?;
    let wp = ctx.wp();
    let ln_n = ctx.ln_u64(n);
    let lnln = ln_n.clone().ln();
    let mut out = Float::with_val(wp, &ln_n * &ctx.real_from_rational(&Rational::from((n, 8))));
    let mut t = ctx.real_from_rational(&consts::loglog_coeff());
    t *= Float::with_val(wp, n);
    t *= &lnln;
    out += t;
    let mut t = ctx.real_from_rational(&consts::intermediate_slope());
    t *= Float::with_val(wp, n);
    out -= t;
    out += Float::with_val(wp, &ln_n / &Float::with_val(wp, 2u32));
    out += ctx.real_from_rational(&consts::intermediate_constant());
    Ok(out)
}

/// The whole CM chain at one `n`: the totient links, the subvariety bound,
/// its displayed majorant, and the final envelope. The report's quantity is
/// the subvariety bound, its upper the final envelope.
pub fn cm_chain_check(n: u64, ctx: &Ctx) -> Result<BoundReport> {
    check_odd(n)?;
    let wp = ctx.wp();
    let guard = ctx.guard();
    let mut ok = true;

    let h = faltings_height(n, ctx)?.total;
    let (remond, envelope) = cm_height_bounds(n, ctx)?;
    let ln_n = ctx.ln_u64(n);
    let phi = euler_phi(n);

    // phi(n) >= n^(log 2 / log 3): compare ln(phi) ln 3 >= ln 2 ln n; the
    // two sides are the identical expression at n = 3, so allow equality up
    // to one working ulp
    let lhs = Float::with_val(wp, &ctx.ln_u64(phi) * &ctx.ln_u64(3));
    let rhs = Float::with_val(wp, &ctx.ln2() * &ln_n);
    let ulp = Float::with_val(wp, 1u32) >> (ctx.wp() - 8);
    ok &= Float::with_val(wp, &lhs - &rhs) > -(Float::with_val(wp, &rhs.clone().abs() * &ulp));

    // phi(n) >= 1.715 log n
    let mut phi_lower = ctx.real_from_rational(&consts::phi_log_factor());
    phi_lower *= &ln_n;
    ok &= Float::with_val(wp, phi) - phi_lower > guard;

    // remond <= h + 0.7457 n - 1.2788 log n - 0.7456 (uses the phi link)
    let mut display1 = ctx.real_from_rational(&consts::cm_subvariety_slope());
    display1 *= Float::with_val(wp, n);
    display1 += &h;
    let mut t = ctx.real_from_rational(&consts::cm_subvariety_log_coeff());
    t *= &ln_n;
    display1 -= t;
    display1 -= ctx.real_from_rational(&consts::cm_subvariety_constant());
    ok &= Float::with_val(wp, &display1 - &remond) > -guard.clone();

    // h below the intermediate bound
    let intermediate = intermediate_upper_bound(n, ctx)?;
    ok &= Float::with_val(wp, &intermediate - &h) > guard;

    // chained display: (n/8) log n + (9/64) n log log n - 0.1364 n
    //                  - 0.7788 log n + 0.5605
    let lnln = ln_n.clone().ln();
    let mut display2 = Float::with_val(wp, &ln_n * &ctx.real_from_rational(&Rational::from((n, 8))));
    let mut t = ctx.real_from_rational(&consts::loglog_coeff());
    t *= Float::with_val(wp, n);
    t *= &lnln;
    display2 += t;
    let mut t = ctx.real_from_rational(&consts::cm_chain_slope());
    t *= Float::with_val(wp, n);
    display2 -= t;
    let mut t = ctx.real_from_rational(&consts::cm_chain_log_coeff());
    t *= &ln_n;
    display2 -= t;
    display2 += ctx.real_from_rational(&consts::cm_chain_constant());
    ok &= Float::with_val(wp, &display2 - &display1) > -guard.clone();

    // the chained display sits below the final envelope, and so does remond
    ok &= Float::with_val(wp, &envelope - &display2) > guard;
    ok &= Float::with_val(wp, &envelope - &remond) > guard;

    // the log-linear glue the dominance argument rests on
    let mut glue = ctx.real_from_rational(&consts::log_linear_bound());
    glue *= Float::with_val(wp, n);
    ok &= Float::with_val(wp, &glue - &ln_n) > -guard.clone();

    let satisfied = ok;
    Ok(BoundReport::from_parts(
        n,
        remond,
        neg_infinity(wp),
        envelope,
        satisfied,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::is_prime;

    fn parse(wp: u32, s: &str) -> Float {
        Float::with_val(wp, Float::parse(s).unwrap())
    }

    #[test]
    fn constants_algebra_is_exact() {
        // the chained display constants are exact differences of the chain
        // inputs
        let a = Rational::from(&consts::intermediate_slope() - &consts::cm_subvariety_slope());
        assert_eq!(a, consts::cm_chain_slope());
        let b = Rational::from(&consts::cm_subvariety_log_coeff() - &Rational::from((1, 2)));
        assert_eq!(b, consts::cm_chain_log_coeff());
        let c = Rational::from(&consts::intermediate_constant() - &consts::cm_subvariety_constant());
        assert_eq!(c, consts::cm_chain_constant());
    }

    #[test]
    fn gamma_sum_slope_value() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        let c = gamma_sum_slope(&ctx);
        let r = parse(wp, "0.68850116605469067852365630394016054761915079647558");
        assert!(Float::with_val(wp, &c - &r).abs() < Float::with_val(wp, 1u32) >> 120);
    }

    #[test]
    fn gamma_sum_bounds_small() {
        let ctx = Ctx::new(128);
        for n in [3u64, 5, 9, 45, 225] {
            let rep = gamma_sum_bounds(n, &ctx).unwrap();
            assert!(rep.satisfied, "n={n}");
            assert!(rep.margin_low > 0u32);
            assert!(rep.margin_high > 0u32);
            // the gap between the bounds is exactly (1 + log 2n)/2
            let wp = ctx.wp();
            let mut gap = ctx.ln_u64(2 * n);
            gap += 1u32;
            gap /= 2u32;
            let width = Float::with_val(wp, &rep.upper - &rep.lower);
            assert!(Float::with_val(wp, &width - &gap).abs() < Float::with_val(wp, 1u32) >> 100);
        }
    }

    #[test]
    fn prime_sum_bounds_cases() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        // n = 3: quantity (1/3) log 3 equals the lower bound exactly
        let rep = prime_sum_bounds(3, &ctx).unwrap();
        assert!(rep.satisfied);
        assert!(rep.margin_low.clone().abs() < Float::with_val(wp, 1u32) >> 140);
        let r = parse(wp, "0.36620409622270323046508174564084190154916351927425");
        assert!(Float::with_val(wp, &rep.quantity - &r).abs() < Float::with_val(wp, 1u32) >> 120);

        // prime n: equality holds exactly in the rational route
        for p in [5u64, 7, 101] {
            let rep = prime_sum_bounds(p, &ctx).unwrap();
            assert!(rep.satisfied, "prime {p}");
            assert!(rep.margin_low.clone().abs() < Float::with_val(wp, 1u32) >> 140);
        }

        // composite n: strictly above the lower bound
        for n in [9u64, 45, 225] {
            let rep = prime_sum_bounds(n, &ctx).unwrap();
            assert!(rep.satisfied, "n={n}");
            assert!(rep.margin_low > ctx.guard());
        }
    }

    #[test]
    fn theta_and_logsum_small_range() {
        let ctx = Ctx::new(128);
        let reports = rosser_schoenfeld_checks(300, &ctx).unwrap();
        assert!(reports.iter().all(|r| r.satisfied));
        // theta(101) frozen from the sieve oracle
        let wp = ctx.wp();
        let theta_101 = reports
            .iter()
            .find(|r| r.n == 101 && r.upper.is_infinite())
            .unwrap();
        let r = parse(wp, "88.3435109159051823959111211167920890747343214695");
        assert!(Float::with_val(wp, &theta_101.quantity - &r).abs() < Float::with_val(wp, 1u32) >> 110);
        // the q = 3 margin is the tight one: theta(3) - 0.5972*3 ~ 1.6e-4
        let q3 = reports.iter().find(|r| r.n == 3 && r.upper.is_infinite()).unwrap();
        assert!(q3.margin_low > 0u32);
        assert!(q3.margin_low < Float::with_val(wp, 1e-3));
    }

    #[test]
    fn rejects_oversized_sieve() {
        let ctx = Ctx::new(96);
        assert!(rosser_schoenfeld_checks(2_000_000, &ctx).is_err());
    }

    #[test]
    fn corollary_small_cases() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        let rep = corollary_bounds_check(3, &ctx).unwrap();
        assert!(rep.satisfied);
        // h(3) - (3/8) log 3, frozen
        let r = parse(wp, "-1.7330970366785790492630861597007706030126787127969");
        assert!(Float::with_val(wp, &rep.quantity - &r).abs() < Float::with_val(wp, 1u32) >> 115);
        for n in [5u64, 9, 15, 45, 225, 2401] {
            let rep = corollary_bounds_check(n, &ctx).unwrap();
            assert!(rep.satisfied, "n={n}");
        }
    }

    #[test]
    fn intermediate_bound_dominates_small() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        for n in [3u64, 9, 45, 1001, 6001] {
            let h = faltings_height(n, &ctx).unwrap().total;
            let mid = intermediate_upper_bound(n, &ctx).unwrap();
            assert!(h < mid, "n={n}");
            // and the intermediate bound is itself below the final envelope
            let rep = corollary_bounds_check(n, &ctx).unwrap();
            let mut final_upper = rep.upper.clone();
            final_upper += Float::with_val(wp, &ctx.ln_u64(n) * &ctx.real_from_rational(&Rational::from((n, 8))));
            assert!(mid < final_upper, "n={n}: mid {mid} vs {final_upper}");
        }
    }

    #[test]
    fn cm_chain_small_cases() {
        let ctx = Ctx::new(128);
        for n in [3u64, 5, 9, 15, 45, 225, 315] {
            let rep = cm_chain_check(n, &ctx).unwrap();
            assert!(rep.satisfied, "n={n}");
            if is_prime(n) {
                // quantity is exactly the height for primes
                let h = faltings_height(n, &ctx).unwrap().total;
                assert_eq!(rep.quantity, h);
            }
        }
    }

    #[test]
    fn phi_power_bound_over_small_range() {
        // phi(n) >= n^(log 2 / log 3), equality at n = 3
        let ctx = Ctx::new(96);
        let wp = ctx.wp();
        let mut n = 3u64;
        while n <= 501 {
            let lhs = Float::with_val(wp, &ctx.ln_u64(euler_phi(n)) * &ctx.ln_u64(3));
            let rhs = Float::with_val(wp, &ctx.ln2() * &ctx.ln_u64(n));
            let neg_tol: Float = -(Float::with_val(wp, 1u32) >> 80u32);
            assert!(Float::with_val(wp, &lhs - &rhs) >= neg_tol, "n={n}");
            n += 2;
        }
    }
}
