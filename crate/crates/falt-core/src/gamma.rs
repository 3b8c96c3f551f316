//! Log-gamma and derived special values.
//!
//! `log_gamma` shifts its argument upward with the recurrence
//! `ln G(x) = ln G(x+k) - ln(x (x+1) ... (x+k-1))` until the Stirling
//! asymptotic series applies, then sums that series with the explicit
//! next-term remainder bound. Shift distance and coefficient table come from
//! the context and are sized so truncation stays below `2^-(wp+4)`.

use rug::{Float, Rational};

use crate::ctx::Ctx;
use crate::{Error, Result};

/// `ln Gamma(x)` for `x > 0`. Error below `max(|ln Gamma(x)|, 1) * 2^-(bits+8)`:
/// relative in general, absolute near the zeros at `x = 1, 2` where no
/// forward evaluation can hold a relative bound.
pub fn log_gamma(x: &Float, ctx: &Ctx) -> Result<Float> {
    if !x.is_finite() || *x <= 0u32 {
        return Err(Error::InvalidArgument(format!(
            "log_gamma: argument must be positive and finite, got {x}"
        )));
    }
    Ok(log_gamma_pos(x, ctx))
}

/// `ln Gamma` at an exact rational argument, converted once at context
/// precision.
pub fn log_gamma_rat(x: &Rational, ctx: &Ctx) -> Result<Float> {
    if *x <= 0u32 {
        return Err(Error::InvalidArgument(format!(
            "log_gamma: argument must be positive, got {x}"
        )));
    }
    Ok(log_gamma_pos(&ctx.real_from_rational(x), ctx))
}

pub(crate) fn log_gamma_pos(x: &Float, ctx: &Ctx) -> Float {
    let wp = ctx.wp();
    let (shift, coeffs) = ctx.stirling();

    // Recurrence shift into the Stirling region, as one product and one log.
    let mut y = Float::with_val(wp, x);
    let mut ln_prod: Option<Float> = None;
    if y < shift {
        let steps = Float::with_val(wp, shift - &y).ceil().to_f64() as u32;
        let mut prod = y.clone();
        let mut t = y.clone();
        for _ in 1..steps {
            t += 1u32;
            prod *= &t;
        }
        y += steps;
        ln_prod = Some(prod.ln());
    }

    // ln G(y) = (y - 1/2) ln y - y + ln(2 pi)/2 + sum_k c_k y^(1-2k)
    let ln_y = y.clone().ln();
    let mut res = y.clone();
    res -= Float::with_val(wp, Rational::from((1, 2)));
    res *= &ln_y;
    res -= &y;
    let mut half_ln_2pi = ctx.ln_2pi();
    half_ln_2pi /= 2u32;
    res += half_ln_2pi;

    let u = Float::with_val(wp, y.recip_ref());
    let w = u.clone().square();
    let mut pow = u;
    let mut converged = false;
    for c in coeffs {
        let term = Float::with_val(wp, c * &pow);
        res += &term;
        if term.get_exp().unwrap_or(i32::MIN) < -(wp as i32 + 4) {
            converged = true;
            break;
        }
        pow *= &w;
    }
    assert!(
        converged,
        "Stirling series did not reach target precision; shift misconfigured"
    );

    if let Some(lp) = ln_prod {
        res -= lp;
    }
    res
}

/// `ln B(a, b) = ln G(a) + ln G(b) - ln G(a + b)` for `a, b > 0`.
pub fn log_beta(a: &Float, b: &Float, ctx: &Ctx) -> Result<Float> {
    let mut res = log_gamma(a, ctx)?;
    res += log_gamma(b, ctx)?;
    let sum = Float::with_val(ctx.wp(), a + b);
    res -= log_gamma(&sum, ctx)?;
    Ok(res)
}

/// `zeta'(-1)`, memoized on the context. See [`Ctx::zeta_prime_minus_one`]
/// for the derivation route.
pub fn zeta_prime_minus_one(ctx: &Ctx) -> Float {
    ctx.zeta_prime_minus_one()
}

/// `int_0^z ln Gamma(x) dx` at the two closed-form points this crate needs:
/// `z = 1` gives `ln(2 pi)/2` and `z = 1/2` gives
/// `1/8 + (1/4) ln 2 - ln G(1/2)` with the Barnes value from the context.
/// Other arguments are rejected.
pub fn log_gamma_integral(z: &Rational, ctx: &Ctx) -> Result<Float> {
    let wp = ctx.wp();
    if *z == 1u32 {
        let mut r = ctx.ln_2pi();
        r /= 2u32;
        Ok(r)
    } else if *z.numer() == 1u32 && *z.denom() == 2u32 {
        let mut r = Float::with_val(wp, Rational::from((1, 8)));
        let mut quarter_ln2 = ctx.ln2();
        quarter_ln2 /= 4u32;
        r += quarter_ln2;
        r -= ctx.log_barnes_g_half();
        Ok(r)
    } else {
        Err(Error::Unsupported(format!(
            "log_gamma_integral: only z = 1/2 and z = 1 are supported, got {z}"
        )))
    }
}

/// `S(n) = sum_{j=1}^{g} [ln G((2j-1)/(2n)) - ln G(1/2 + (2j-1)/(2n))]`
/// with `g = floor(n/2)`. Arguments are formed as exact rationals and
/// converted once. `n >= 2`; even `n` is allowed for the archimedean side.
pub fn gamma_ratio_sum(n: u64, ctx: &Ctx) -> Result<Float> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "gamma_ratio_sum: n must be at least 2, got {n}"
        )));
    }
    if let Some(cached) = ctx.cached_ratio_sum(n) {
        return Ok(cached);
    }
    let wp = ctx.wp();
    let g = n / 2;
    let mut sum = Float::new(wp);
    for j in 1..=g {
        let a = Rational::from((2 * j - 1, 2 * n));
        let b = Rational::from((n + 2 * j - 1, 2 * n));
        sum += log_gamma_pos(&ctx.real_from_rational(&a), ctx);
        sum -= log_gamma_pos(&ctx.real_from_rational(&b), ctx);
    }
    ctx.store_ratio_sum(n, &sum);
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctx::GUARD_BITS;

    fn tol(bits: u32, slack: u32) -> Float {
        Float::with_val(bits + GUARD_BITS, 1u32) >> (bits - slack)
    }

    fn parse(wp: u32, s: &str) -> Float {
        Float::with_val(wp, Float::parse(s).unwrap())
    }

    #[test]
    fn rejects_nonpositive() {
        let ctx = Ctx::new(128);
        assert!(log_gamma(&ctx.real(0.0), &ctx).is_err());
        assert!(log_gamma(&ctx.real(-1.5), &ctx).is_err());
    }

    #[test]
    fn gamma_at_one_and_half() {
        let ctx = Ctx::new(128);
        let z = log_gamma(&ctx.real(1.0), &ctx).unwrap();
        assert!(z.clone().abs() < tol(128, 16));
        let h = log_gamma_rat(&Rational::from((1, 2)), &ctx).unwrap();
        let mut expect = ctx.ln_pi();
        expect /= 2u32;
        let diff = Float::with_val(ctx.wp(), &h - &expect).abs();
        assert!(diff < tol(128, 16));
    }

    #[test]
    fn gamma_one_third_against_product_oracle() {
        // oracle: G(1/3) G(2/3) = 2 pi / sqrt(3), so
        // ln G(1/3) + ln G(2/3) - ln(2 pi / sqrt 3) = 0
        let ctx = Ctx::new(192);
        let wp = ctx.wp();
        let a = log_gamma_rat(&Rational::from((1, 3)), &ctx).unwrap();
        let b = log_gamma_rat(&Rational::from((2, 3)), &ctx).unwrap();
        let mut rhs = ctx.ln_2pi();
        rhs -= Float::with_val(wp, 3u32).ln() / 2u32;
        let resid = Float::with_val(wp, &(a.clone() + &b) - &rhs).abs();
        assert!(resid < tol(192, 16), "residual {resid}");
        // frozen independent series evaluation
        let reference = parse(wp, "0.98542064692776706918717403697796139173555649638589");
        let diff = Float::with_val(wp, &a - &reference).abs();
        assert!(diff < tol(160, 0), "diff {diff}");
    }

    #[test]
    fn matches_mpfr_lngamma_on_samples() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        for v in [0.03125f64, 0.21875, 0.5625, 0.96875, 1.75, 7.25, 41.5, 1000.0] {
            let x = ctx.real(v);
            let mine = log_gamma(&x, &ctx).unwrap();
            let theirs = x.clone().ln_gamma();
            let diff = Float::with_val(wp, &mine - &theirs).abs();
            let scale = Float::with_val(wp, theirs.clone().abs()).max(&Float::with_val(wp, 1u32));
            assert!(
                diff < scale * tol(128, 16),
                "x = {v}: mine {mine}, mpfr {theirs}"
            );
        }
    }

    #[test]
    fn recurrence_closure() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        for v in [0.11, 0.47, 0.93, 2.6, 17.2] {
            let x = ctx.real(v);
            let lhs = log_gamma(&Float::with_val(wp, &x + &Float::with_val(wp, 1u32)), &ctx).unwrap();
            let mut rhs = log_gamma(&x, &ctx).unwrap();
            rhs += x.clone().ln();
            let diff = Float::with_val(wp, &lhs - &rhs).abs();
            assert!(diff < tol(128, 16), "x = {v}");
        }
    }

    #[test]
    fn reflection_closure() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        for num in [1u64, 7, 13, 29, 61] {
            let x = Rational::from((num, 64));
            let one_minus = Rational::from((64 - num, 64));
            let lhs = log_gamma_rat(&x, &ctx).unwrap() + log_gamma_rat(&one_minus, &ctx).unwrap();
            let mut sin_arg = ctx.real_from_rational(&x);
            sin_arg *= ctx.pi();
            let rhs = ctx.ln_pi() - sin_arg.sin().ln();
            let diff = Float::with_val(wp, &lhs - &rhs).abs();
            assert!(diff < tol(128, 16), "x = {num}/64");
        }
    }

    #[test]
    fn monotone_and_convex_on_unit_interval() {
        let ctx = Ctx::new(96);
        let steps = 40u64;
        let vals: Vec<Float> = (1..=steps)
            .map(|k| log_gamma_rat(&Rational::from((k, steps)), &ctx).unwrap())
            .collect();
        for pair in vals.windows(2) {
            assert!(pair[1] < pair[0], "ln Gamma should decrease on (0, 1]");
        }
        for triple in vals.windows(3) {
            let second_diff =
                Float::with_val(ctx.wp(), &triple[2] - &triple[1]) - Float::with_val(ctx.wp(), &triple[1] - &triple[0]);
            assert!(second_diff > 0u32, "ln Gamma should be convex");
        }
    }

    #[test]
    fn precision_doubling() {
        let lo = Ctx::new(96);
        let hi = Ctx::new(192);
        for num in [1u64, 3, 11, 31, 63] {
            let x = Rational::from((num, 64));
            let a = log_gamma_rat(&x, &lo).unwrap();
            let b = log_gamma_rat(&x, &hi).unwrap();
            let diff = Float::with_val(hi.wp(), &a - &b).abs();
            let scale = Float::with_val(hi.wp(), b.clone().abs()).max(&Float::with_val(hi.wp(), 1u32));
            assert!(diff < scale * tol(96, 10), "x = {num}/64");
        }
    }

    #[test]
    fn beta_values() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        let one = ctx.real(1.0);
        let b11 = log_beta(&one, &one, &ctx).unwrap();
        assert!(b11.clone().abs() < tol(128, 16));

        let half = ctx.real_from_rational(&Rational::from((1, 2)));
        let bhh = log_beta(&half, &half, &ctx).unwrap();
        let diff = Float::with_val(wp, &bhh - &ctx.ln_pi()).abs();
        assert!(diff < tol(128, 16));

        // frozen from an independent quadrature oracle: ln B(1/10, 1/2)
        let tenth = ctx.real_from_rational(&Rational::from((1, 10)));
        let b = log_beta(&tenth, &half, &ctx).unwrap();
        let reference = parse(wp, "2.42684373658967114732456110164414679020492059970");
        let diff = Float::with_val(wp, &b - &reference).abs();
        assert!(diff < tol(128, 16), "diff {diff}");
    }

    #[test]
    fn ratio_sum_small_cases() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        // n = 3: single term ln G(1/6) - ln G(2/3)
        let s3 = gamma_ratio_sum(3, &ctx).unwrap();
        let term = log_gamma_rat(&Rational::from((1, 6)), &ctx).unwrap()
            - log_gamma_rat(&Rational::from((2, 3)), &ctx).unwrap();
        let diff = Float::with_val(wp, &s3 - &term).abs();
        assert!(diff < tol(128, 20));
        let reference = parse(wp, "1.41358315993071689185198349221591972161588431513");
        assert!(Float::with_val(wp, &s3 - &reference).abs() < tol(128, 16));

        // n = 5: two explicit terms
        let s5 = gamma_ratio_sum(5, &ctx).unwrap();
        let expect = log_gamma_rat(&Rational::from((1, 10)), &ctx).unwrap()
            - log_gamma_rat(&Rational::from((3, 5)), &ctx).unwrap()
            + log_gamma_rat(&Rational::from((3, 10)), &ctx).unwrap()
            - log_gamma_rat(&Rational::from((4, 5)), &ctx).unwrap();
        assert!(Float::with_val(wp, &s5 - &expect).abs() < tol(128, 20));
        let reference = parse(wp, "2.79821711008320899315172296604715432398336860551");
        assert!(Float::with_val(wp, &s5 - &reference).abs() < tol(128, 16));

        let s9 = gamma_ratio_sum(9, &ctx).unwrap();
        let reference = parse(wp, "5.55733982558935280333941496521835371487994829747");
        assert!(Float::with_val(wp, &s9 - &reference).abs() < tol(128, 16));

        assert!(gamma_ratio_sum(1, &ctx).is_err());
    }

    #[test]
    fn integral_values() {
        let ctx = Ctx::new(128);
        let wp = ctx.wp();
        let i1 = log_gamma_integral(&Rational::from(1), &ctx).unwrap();
        let reference = parse(wp, "0.91893853320467274178032973640561763986139747363778");
        assert!(Float::with_val(wp, &i1 - &reference).abs() < tol(128, 16));

        let ih = log_gamma_integral(&Rational::from((1, 2)), &ctx).unwrap();
        let reference = parse(wp, "0.80371984962968171015199302017288909374027413505668");
        assert!(Float::with_val(wp, &ih - &reference).abs() < tol(128, 16));

        // 2 I(1/2) - I(1) = 1/4 - (1/12) ln 2 - 3 zeta'(-1)
        let mut lhs = ih.clone();
        lhs *= 2u32;
        lhs -= &i1;
        let mut rhs = Float::with_val(wp, Rational::from((1, 4)));
        rhs -= Float::with_val(wp, &ctx.ln2() / &Float::with_val(wp, 12u32));
        rhs -= Float::with_val(wp, &ctx.zeta_prime_minus_one() * &Float::with_val(wp, 3u32));
        assert!(Float::with_val(wp, &lhs - &rhs).abs() < tol(128, 16));

        assert!(log_gamma_integral(&Rational::from((1, 4)), &ctx).is_err());
        assert!(log_gamma_integral(&Rational::from(2), &ctx).is_err());
    }
}
