//! Tanh-sinh (double-exponential) quadrature on (0, 1).
//!
//! The substitution `t = (1 + tanh((pi/2) sinh u)) / 2` pushes both endpoints
//! to infinity and makes the trapezoid rule converge double-exponentially,
//! which handles the power-law endpoint singularities of the period
//! integrands without per-exponent node tables.
//!
//! Nodes carry `t`, `1 - t`, and their logs, all computed from `e^{-2s}`
//! without cancellation, so integrands can be evaluated as
//! `exp(c1 * ln t + c2 * ln(1-t))` with full relative accuracy at the
//! endpoints. Levels halve the step; the error estimate is the
//! level-to-level contraction.

use rug::Float;

use crate::ctx::Ctx;
use crate::{Error, Result};

/// One abscissa: `t`, `1 - t`, their logs, and the weight factor
/// `pi * cosh(u) * t * (1 - t)` (the step `h` is applied at summation).
pub struct Node {
    pub t: Float,
    pub one_minus_t: Float,
    pub ln_t: Float,
    pub ln_one_minus_t: Float,
    pub weight: Float,
}

/// Cached node levels, shared across integrands of the same context.
pub struct TanhSinh {
    wp: u32,
    /// Truncation range in `u`; far enough out that the weight alone is
    /// below target for the slowest-decaying exponent in play.
    u_max: f64,
    base_level: u32,
    /// `levels[0]` holds the base grid (spacing `2^-base_level`), each later
    /// entry holds only the odd-index refinement nodes for its level.
    levels: Vec<Vec<Node>>,
}

const BASE_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 13;

impl TanhSinh {
    /// `min_exponent` is the smallest power-law exponent `alpha` (integrand
    /// `~ t^(alpha-1)` near 0 or symmetric) the rule must absorb; it sets the
    /// truncation range.
    pub fn new(ctx: &Ctx, min_exponent: f64) -> Self {
        let wp = ctx.wp();
        assert!(min_exponent > 0.0);
        let bits_needed = (wp as f64 + 96.0) * std::f64::consts::LN_2;
        let u_max = (bits_needed / (std::f64::consts::FRAC_PI_2 * min_exponent)).ln() + 1.0;
        TanhSinh {
            wp,
            u_max,
            base_level: BASE_LEVEL,
            levels: Vec::new(),
        }
    }

    fn node_at(&self, u: &Float) -> Node {
        let wp = self.wp;
        let pi = Float::with_val(wp, rug::float::Constant::Pi);
        let (sinh_u, cosh_u) = u.clone().sinh_cosh(Float::new(wp));
        let mut s = sinh_u;
        s *= &pi;
        s /= 2u32; // s = (pi/2) sinh u
        // t = 1/(1 + e^{-2s}), 1 - t = e^{-2s}/(1 + e^{-2s}); both exact in
        // the direction that avoids cancellation for s of either sign.
        let mut em = Float::with_val(wp, -&s);
        em *= 2u32;
        em.exp_mut(); // e^{-2s}
        let mut denom = em.clone();
        denom += 1u32;
        let t = Float::with_val(wp, denom.recip_ref());
        let one_minus_t = Float::with_val(wp, &em / &denom);
        // ln t = -ln(1 + e^{-2s}); ln(1-t) = -2s - ln(1 + e^{-2s})
        let ln1p = em.clone().ln_1p();
        let ln_t = Float::with_val(wp, -&ln1p);
        let mut ln_one_minus_t = Float::with_val(wp, -&s);
        ln_one_minus_t *= 2u32;
        ln_one_minus_t -= &ln1p;
        let mut weight = Float::with_val(wp, &t * &one_minus_t);
        weight *= &cosh_u;
        weight *= &pi;
        Node {
            t,
            one_minus_t,
            ln_t,
            ln_one_minus_t,
            weight,
        }
    }

    fn ensure_level(&mut self, level: u32) {
        while self.levels.len() <= (level - self.base_level) as usize {
            let l = self.base_level + self.levels.len() as u32;
            let wp = self.wp;
            let h = Float::with_val(wp, 1u32) >> l;
            let mut nodes = Vec::new();
            if l == self.base_level {
                // full grid: u = k h, k = 0, +-1, ..., |u| <= u_max
                let k_max = (self.u_max / h.to_f64()).floor() as i64;
                for k in -k_max..=k_max {
                    let u = Float::with_val(wp, &h * &Float::with_val(wp, k));
                    nodes.push(self.node_at(&u));
                }
            } else {
                // refinement: odd multiples only
                let k_max = (self.u_max / h.to_f64()).floor() as i64;
                let mut k = 1i64;
                while k <= k_max {
                    for sign in [1i64, -1] {
                        let u = Float::with_val(wp, &h * &Float::with_val(wp, sign * k));
                        nodes.push(self.node_at(&u));
                    }
                    k += 2;
                }
            }
            self.levels.push(nodes);
        }
    }

    /// Integrate `f` over (0, 1), where `f` receives a [`Node`] and returns
    /// the integrand value at `node.t`. Refines until two successive levels
    /// agree to `target` relative, then returns the finer value.
    pub fn integrate<F: Fn(&Node) -> Float>(&mut self, f: F, target: &Float) -> Result<Float> {
        let wp = self.wp;
        let mut partial = Float::new(wp); // sum of weight * f over all nodes so far
        let mut previous: Option<Float> = None;
        let mut last_rel = f64::INFINITY;
        for level in self.base_level..=MAX_LEVEL {
            self.ensure_level(level);
            for node in &self.levels[(level - self.base_level) as usize] {
                partial += Float::with_val(wp, &node.weight * &f(node));
            }
            let h = Float::with_val(wp, 1u32) >> level;
            let estimate = Float::with_val(wp, &partial * &h);
            if let Some(prev) = previous {
                let diff = Float::with_val(wp, &estimate - &prev).abs();
                let scale = estimate.clone().abs();
                if diff <= Float::with_val(wp, &scale * target) {
                    return Ok(estimate);
                }
                last_rel = (diff / scale).to_f64();
            }
            previous = Some(estimate);
        }
        Err(Error::QuadratureNoConvergence {
            max_level: MAX_LEVEL,
            last_rel_diff: last_rel,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_constant() {
        let ctx = Ctx::new(128);
        let mut q = TanhSinh::new(&ctx, 0.5);
        let one = q
            .integrate(|n| Float::with_val(n.t.prec(), 1u32), &ctx.quadrature_target())
            .unwrap();
        let err = Float::with_val(ctx.wp(), &one - &Float::with_val(ctx.wp(), 1u32)).abs();
        assert!(err < ctx.quadrature_target(), "err {err}");
    }

    #[test]
    fn integrates_smooth_polynomial() {
        // int_0^1 t^2 dt = 1/3
        let ctx = Ctx::new(128);
        let mut q = TanhSinh::new(&ctx, 1.0);
        let v = q
            .integrate(|n| n.t.clone().square(), &ctx.quadrature_target())
            .unwrap();
        let expect = Float::with_val(ctx.wp(), rug::Rational::from((1, 3)));
        let err = Float::with_val(ctx.wp(), &v - &expect).abs();
        assert!(err < ctx.quadrature_target());
    }

    #[test]
    fn integrates_endpoint_singularity() {
        // int_0^1 t^(-1/2) dt = 2, singular at 0
        let ctx = Ctx::new(128);
        let mut q = TanhSinh::new(&ctx, 0.5);
        let v = q
            .integrate(
                |n| {
                    let mut e = n.ln_t.clone();
                    e /= -2i32;
                    e.exp()
                },
                &ctx.quadrature_target(),
            )
            .unwrap();
        let err = Float::with_val(ctx.wp(), &v - &Float::with_val(ctx.wp(), 2u32)).abs();
        assert!(err < ctx.quadrature_target() * Float::with_val(ctx.wp(), 4u32), "err {err}");
    }

    #[test]
    fn reports_non_contraction() {
        // sign-flipping junk never contracts; the rule must give up rather
        // than return a value
        let ctx = Ctx::new(64);
        let mut q = TanhSinh::new(&ctx, 5.0);
        let flip = std::cell::Cell::new(false);
        let r = q.integrate(
            |n| {
                flip.set(!flip.get());
                Float::with_val(n.t.prec(), if flip.get() { 1.0 } else { -1.0 })
            },
            &ctx.quadrature_target(),
        );
        assert!(matches!(
            r,
            Err(crate::Error::QuadratureNoConvergence { .. })
        ));
    }

    #[test]
    fn integrates_double_singularity_beta() {
        // int_0^1 t^(-9/10) (1-t)^(-1/2) dt = B(1/10, 1/2); frozen oracle value
        let ctx = Ctx::new(160);
        let mut q = TanhSinh::new(&ctx, 0.1);
        let exponent = ctx.real_from_rational(&rug::Rational::from((-9, 10)));
        let v = q
            .integrate(
                |n| {
                    let wp = n.t.prec();
                    let mut e = Float::with_val(wp, &n.ln_t * &exponent);
                    e -= Float::with_val(wp, &n.ln_one_minus_t / &Float::with_val(wp, 2u32));
                    e.exp()
                },
                &ctx.quadrature_target(),
            )
            .unwrap();
        let expect = Float::with_val(
            ctx.wp(),
            Float::parse("11.3230869752157537214559449515699630069916354633").unwrap(),
        );
        let rel = Float::with_val(ctx.wp(), &v - &expect).abs() / expect;
        assert!(rel < ctx.quadrature_target() * Float::with_val(ctx.wp(), 8u32), "rel {rel}");
    }
}
