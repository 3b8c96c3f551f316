//! Assembly of the stable Faltings height of `X_n : y^2 = x^n - 1` from the
//! finite and infinite ingredients, with an always-on cross-check.
//!
//! The height splits into five summands. They are also reassembled along the
//! raw route `(8g+4) h = sum_p ord_p(Lambda) log p - log ||Lambda||`; the two
//! totals must agree to working precision on every call, which checksums the
//! whole pipeline (cluster orders, gamma sums, norm) at negligible cost.

use rug::{Float, Rational};

use crate::arch::log_lambda_norm;
use crate::cluster::{finite_coefficient, ord_lambda_coefficient_times_n};
use crate::ctx::Ctx;
use crate::exact::{euler_phi, factorize};
use crate::gamma::{gamma_ratio_sum, log_gamma_rat};
use crate::{Error, Result};

/// The five summands of the height and their total.
#[derive(Debug, Clone)]
pub struct HeightBreakdown {
    pub n: u64,
    pub genus: u64,
    /// `(n/8) sum_p c_p log p` over primes `p | n`.
    pub finite_sum: Float,
    /// `(n/8) log n`.
    pub log_n_term: Float,
    /// `-(g/2) log pi`.
    pub pi_term: Float,
    /// `(g/(2n)) log 2`.
    pub two_term: Float,
    /// `-S(n)`, the gamma-ratio sum.
    pub gamma_term: Float,
    /// Sum of the five parts.
    pub total: Float,
}

fn check_odd(n: u64) -> Result<u64> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "the height formula needs odd n >= 3, got {n}"
        )));
    }
    Ok((n - 1) / 2)
}

/// The exact rational coefficients of `log p` in the finite-place summand:
/// pairs `(p, (n/8) c_p)` with `c_p = (p^(2m)-1)/(p^(2m-1)(p^2-1))`.
pub fn finite_sum_coefficients(n: u64) -> Result<Vec<(u64, Rational)>> {
    check_odd(n)?;
    let f = factorize(n).expect("n >= 3");
    Ok(f.factors()
        .iter()
        .map(|&(p, m)| {
            let mut c = finite_coefficient(p, m);
            c *= Rational::from((n, 8));
            (p, c)
        })
        .collect())
}

/// `(n/8) sum_{p | n} c_p log p`, coefficients exact, logs at context
/// precision.
pub fn finite_place_sum(n: u64, ctx: &Ctx) -> Result<Float> {
    let coeffs = finite_sum_coefficients(n)?;
    let wp = ctx.wp();
    let mut sum = Float::new(wp);
    for (p, c) in coeffs {
        let mut term = ctx.ln_u64(p);
        term *= ctx.real_from_rational(&c);
        sum += term;
    }
    Ok(sum)
}

/// Full height breakdown at `n`, including the dual-route consistency check.
pub fn faltings_height(n: u64, ctx: &Ctx) -> Result<HeightBreakdown> {
    let g = check_odd(n)?;
    let wp = ctx.wp();

    let finite_sum = finite_place_sum(n, ctx)?;
    let mut log_n_term = ctx.ln_u64(n);
    log_n_term *= ctx.real_from_rational(&Rational::from((n, 8)));
    let mut pi_term = ctx.ln_pi();
    pi_term *= ctx.real_from_rational(&Rational::from((g, 2)));
    pi_term = -pi_term;
    let mut two_term = ctx.ln2();
    two_term *= ctx.real_from_rational(&Rational::from((g, 2 * n)));
    let gamma_term = -gamma_ratio_sum(n, ctx)?;

    let mut total = finite_sum.clone();
    total += &log_n_term;
    total += &pi_term;
    total += &two_term;
    total += &gamma_term;

    // raw route: (8g+4) h = sum_p ord(Lambda) log p - log ||Lambda||
    let mut raw = Float::new(wp);
    for (p, m) in factorize(n).expect("n >= 3").factors() {
        let ord = ord_lambda_coefficient_times_n(n, *p, *m);
        let mut term = ctx.ln_u64(*p);
        term *= ctx.real_from_rational(&ord);
        raw += term;
    }
    raw -= log_lambda_norm(n, ctx)?;
    raw /= Float::with_val(wp, 4 * n);

    let mut diff = Float::with_val(wp, &total - &raw).abs();
    let scale = Float::with_val(wp, log_n_term.clone().abs()).max(&Float::with_val(wp, 1u32));
    diff /= &scale;
    let tol = Float::with_val(wp, 1u32) >> (ctx.bits() - 16);
    if diff > tol {
        return Err(Error::ConsistencyCheck(format!(
            "height routes disagree at n = {n}: five-term {total} vs raw {raw}"
        )));
    }

    Ok(HeightBreakdown {
        n,
        genus: g,
        finite_sum,
        log_n_term,
        pi_term,
        two_term,
        gamma_term,
        total,
    })
}

/// The `n = 3` anchor: the height formula evaluated at `n = 3` next to
/// Deligne's closed form `-(1/2) log(G(1/3)^3 / (sqrt 3 G(2/3)^3))` shifted
/// by the normalization difference `-(1/2) log pi`. The pair must agree.
pub fn deligne_check(ctx: &Ctx) -> Result<(Float, Float)> {
    let wp = ctx.wp();
    let formula = faltings_height(3, ctx)?.total;
    let lg_third = log_gamma_rat(&Rational::from((1, 3)), ctx)?;
    let lg_two_thirds = log_gamma_rat(&Rational::from((2, 3)), ctx)?;
    let mut deligne = Float::with_val(wp, &lg_two_thirds - &lg_third);
    deligne *= Float::with_val(wp, Rational::from((3, 2)));
    deligne += Float::with_val(wp, &ctx.ln_u64(3) / &Float::with_val(wp, 4u32));
    deligne -= Float::with_val(wp, &ctx.ln_pi() / &Float::with_val(wp, 2u32));
    Ok((formula, deligne))
}

/// CM-height bound data: the subvariety bound
/// `h + ((n - 1 - phi(n))/2) log(pi sqrt 2)` and the closed upper envelope
/// `(n/8) log n + (9/64) n log log n - 0.136 n` it must stay under.
pub fn cm_height_bounds(n: u64, ctx: &Ctx) -> Result<(Float, Float)> {
    check_odd(n)?;
    let wp = ctx.wp();
    let h = faltings_height(n, ctx)?.total;
    let phi = euler_phi(n);
    let codim_twice = n - 1 - phi; // even, and zero exactly when n is prime
    let mut log_pi_sqrt2 = ctx.ln2();
    log_pi_sqrt2 /= 2u32;
    log_pi_sqrt2 += ctx.ln_pi();
    let mut remond = Float::with_val(wp, Rational::from((codim_twice, 2)));
    remond *= &log_pi_sqrt2;
    remond += &h;

    let corollary = cm_upper_envelope(n, ctx);
    Ok((remond, corollary))
}

/// `(n/8) log n + (9/64) n log log n - 0.136 n`.
pub fn cm_upper_envelope(n: u64, ctx: &Ctx) -> Float {
    let wp = ctx.wp();
    let ln_n = ctx.ln_u64(n);
    let lnln_n = ln_n.clone().ln();
    let mut out = ln_n;
    out *= ctx.real_from_rational(&Rational::from((n, 8)));
    let mut t = lnln_n;
    t *= ctx.real_from_rational(&Rational::from((9 * n, 64)));
    out += t;
    let mut t = ctx.real_from_rational(&crate::bounds::consts::cm_final_slope());
    t *= Float::with_val(wp, n);
    out -= t;
    out
}
