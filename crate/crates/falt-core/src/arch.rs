//! The infinite-place contribution: the closed-form norm of the canonical
//! section and an independent numerical period-matrix oracle.
//!
//! The `g x 2g` matrix `A` has entries
//! `A_{jk} = (2/n) zeta_n^{k(j-1/2)} B((2j-1)/(2n), 1/2)`; stacking `A` over
//! its conjugate and taking `log |det|` must reproduce
//! `-(n/2) log n + 2 (g log 2 + (g/2) log pi + S(n))`. The beta route
//! computes entries through log-gamma; the quadrature route integrates the
//! defining integral `int_0^1 t^{(2j-1)/(2n)-1} (1-t)^{-1/2} dt` directly by
//! tanh-sinh, so the two paths share nothing but the phase factor.
//!
//! Honest symplectic periods are reconstructed from `A` for the bilinear and
//! Gram tests. The radial integrals behind the columns of `A` form a chain
//! whose consecutive cycles meet once; a symplectic basis for that chain is
//! `a_i = c_{2i-1}`, `b_i = sum_{k >= i} c_{2k}` (columns 1-based), i.e.
//! `Omega_1` takes the odd columns of `A` and `Omega_2` the trailing sums of
//! even columns. This choice makes the first Riemann relation hold
//! entrywise, the Gram matrix positive definite, and `|det| form invariant;
//! it is validated for odd `n` (and `n = 2`).

use rug::{Float, Rational};

use crate::ctx::Ctx;
use crate::gamma::{gamma_ratio_sum, log_beta};
use crate::linalg::{Complex, ComplexMatrix};
use crate::quad::TanhSinh;
use crate::{Error, Result};

/// Which route builds the period-matrix entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodPath {
    /// Beta values through log-gamma.
    Beta,
    /// Direct tanh-sinh quadrature of the defining integral.
    Quadrature,
}

/// Key figures of one archimedean verification run.
#[derive(Debug, Clone)]
pub struct ArchimedeanReport {
    pub n: u64,
    pub genus: u64,
    pub bits: u32,
    pub log_norm_closed: Float,
    pub log_det_numeric: Float,
    pub rel_err: Float,
    pub gram_pd: bool,
}

fn check_n(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "archimedean computations need n >= 2, got {n}"
        )));
    }
    Ok(n / 2)
}

/// `log ||Lambda_n|| = g(4g+2) log pi - 2g log 2 - n(g+1) log n + (8g+4) S(n)`
/// with `g = floor(n/2)`; even `n` is allowed.
pub fn log_lambda_norm(n: u64, ctx: &Ctx) -> Result<Float> {
    let g = check_n(n)?;
    let wp = ctx.wp();
    let s = gamma_ratio_sum(n, ctx)?;
    let mut r = Float::with_val(wp, g * (4 * g + 2));
    r *= ctx.ln_pi();
    let mut t = Float::with_val(wp, 2 * g);
    t *= ctx.ln2();
    r -= t;
    let mut t = Float::with_val(wp, n * (g + 1));
    t *= ctx.ln_u64(n);
    r -= t;
    let mut t = Float::with_val(wp, 8 * g + 4);
    t *= &s;
    r += t;
    Ok(r)
}

/// Closed form for `log |det (A over conj A)|`:
/// `-(n/2) log n + 2 (g log 2 + (g/2) log pi + S(n))`.
pub fn closed_form_log_det(n: u64, ctx: &Ctx) -> Result<Float> {
    let g = check_n(n)?;
    let wp = ctx.wp();
    let s = gamma_ratio_sum(n, ctx)?;
    let mut inner = Float::with_val(wp, g);
    inner *= ctx.ln2();
    let mut t = Float::with_val(wp, Rational::from((g, 2)));
    t *= ctx.ln_pi();
    inner += t;
    inner += &s;
    inner *= 2u32;
    let mut first = Float::with_val(wp, Rational::from((n, 2)));
    first *= ctx.ln_u64(n);
    Ok(inner - first)
}

/// Phase factor `zeta_n^{k(j - 1/2)} = e^{i pi k (2j-1) / n}`, with the
/// angle reduced exactly mod 2 before any rounding.
fn entry_phase(j: u64, k: u64, n: u64, ctx: &Ctx) -> Complex {
    let wp = ctx.wp();
    let r = (k * (2 * j - 1)) % (2 * n);
    let mut angle = ctx.pi();
    angle *= Float::with_val(wp, Rational::from((r, n)));
    let one = Float::with_val(wp, 1u32);
    Complex::from_polar(&one, &angle)
}

/// Modulus `(2/n) B((2j-1)/(2n), 1/2)` via the gamma route.
fn beta_modulus(j: u64, n: u64, ctx: &Ctx) -> Result<Float> {
    let wp = ctx.wp();
    let a = ctx.real_from_rational(&Rational::from((2 * j - 1, 2 * n)));
    let half = ctx.real_from_rational(&Rational::from((1, 2)));
    let mut b = log_beta(&a, &half, ctx)?;
    b.exp_mut();
    let mut m = Float::with_val(wp, Rational::from((2, n)));
    m *= &b;
    Ok(m)
}

/// Modulus `(2/n) int_0^1 t^{(2j-1)/(2n) - 1} (1 - t)^{-1/2} dt` by
/// tanh-sinh quadrature; the independent oracle path.
fn quadrature_modulus(j: u64, n: u64, ctx: &Ctx, rule: &mut TanhSinh) -> Result<Float> {
    let wp = ctx.wp();
    let alpha = ctx.real_from_rational(&Rational::from((2 * j - 1, 2 * n)));
    let mut alpha_minus_one = alpha.clone();
    alpha_minus_one -= 1u32;
    let target = ctx.quadrature_target();
    let integral = rule.integrate(
        |node| {
            let mut e = Float::with_val(wp, &node.ln_t * &alpha_minus_one);
            e -= Float::with_val(wp, &node.ln_one_minus_t / &Float::with_val(wp, 2u32));
            e.exp()
        },
        &target,
    )?;
    let mut m = Float::with_val(wp, Rational::from((2, n)));
    m *= &integral;
    Ok(m)
}

/// One entry of `A` through the beta route. Indices are 1-based,
/// `1 <= j <= g`, `1 <= k <= 2g`.
pub fn beta_entry(j: u64, k: u64, n: u64, ctx: &Ctx) -> Result<Complex> {
    let g = check_n(n)?;
    if j < 1 || j > g || k < 1 || k > 2 * g {
        return Err(Error::InvalidArgument(format!(
            "entry index out of range: j={j}, k={k}, g={g}"
        )));
    }
    let m = beta_modulus(j, n, ctx)?;
    Ok(entry_phase(j, k, n, ctx).scale(&m))
}

/// One entry of `A` through the quadrature route.
pub fn quadrature_entry(j: u64, k: u64, n: u64, ctx: &Ctx, rule: &mut TanhSinh) -> Result<Complex> {
    let g = check_n(n)?;
    if j < 1 || j > g || k < 1 || k > 2 * g {
        return Err(Error::InvalidArgument(format!(
            "entry index out of range: j={j}, k={k}, g={g}"
        )));
    }
    let m = quadrature_modulus(j, n, ctx, rule)?;
    Ok(entry_phase(j, k, n, ctx).scale(&m))
}

/// Fresh quadrature rule sized for the worst exponent appearing at this `n`.
pub fn quadrature_rule(n: u64, ctx: &Ctx) -> TanhSinh {
    TanhSinh::new(ctx, 1.0 / (2.0 * n as f64))
}

/// The `g x 2g` period matrix `A` along the chosen path. Moduli depend only
/// on the row, so each is computed once.
pub fn period_matrix(n: u64, ctx: &Ctx, path: PeriodPath) -> Result<ComplexMatrix> {
    let g = check_n(n)?;
    let wp = ctx.wp();
    let mut rule = quadrature_rule(n, ctx);
    let mut out = ComplexMatrix::zero(g as usize, 2 * g as usize, wp);
    for j in 1..=g {
        let modulus = match path {
            PeriodPath::Beta => beta_modulus(j, n, ctx)?,
            PeriodPath::Quadrature => quadrature_modulus(j, n, ctx, &mut rule)?,
        };
        for k in 1..=2 * g {
            let entry = entry_phase(j, k, n, ctx).scale(&modulus);
            out.set((j - 1) as usize, (k - 1) as usize, entry);
        }
    }
    Ok(out)
}

/// `log |det|` of the stacked `2g x 2g` matrix `(A over conj A)`.
pub fn numeric_log_det(n: u64, ctx: &Ctx, path: PeriodPath) -> Result<Float> {
    let a = period_matrix(n, ctx, path)?;
    let g = a.rows();
    let wp = ctx.wp();
    let mut m = ComplexMatrix::zero(2 * g, 2 * g, wp);
    for r in 0..g {
        for c in 0..2 * g {
            m.set(r, c, a.at(r, c).clone());
            m.set(r + g, c, a.at(r, c).conj());
        }
    }
    m.log_abs_det(ctx)
}

/// Symplectic periods from the columns of `A`: `Omega_1` column `i` is the
/// odd column `2i-1` of `A`, `Omega_2` column `i` is the sum of the even
/// columns `2k` for `k >= i` (all 1-based).
pub fn omega_matrices(a: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let g = a.rows();
    let wp = a.at(0, 0).re.prec();
    let mut o1 = ComplexMatrix::zero(g, g, wp);
    let mut o2 = ComplexMatrix::zero(g, g, wp);
    for r in 0..g {
        for i in 0..g {
            o1.set(r, i, a.at(r, 2 * i).clone());
            let mut acc = Complex::zero(wp);
            for k in i..g {
                acc = acc.add(a.at(r, 2 * k + 1));
            }
            o2.set(r, i, acc);
        }
    }
    (o1, o2)
}

/// Largest entry modulus of `Omega_1 Omega_2^T - Omega_2 Omega_1^T`
/// (the first Riemann relation demands it vanish).
pub fn riemann_bilinear_residual(o1: &ComplexMatrix, o2: &ComplexMatrix) -> Float {
    let x = o1.mul_transpose(o2).sub(&o2.mul_transpose(o1));
    let wp = x.at(0, 0).re.prec();
    let mut max = Float::new(wp);
    for r in 0..x.rows() {
        for c in 0..x.cols() {
            let v = x.at(r, c).abs();
            if v > max {
                max = v;
            }
        }
    }
    max
}

/// The Faltings pairing Gram matrix
/// `(i/2) (Omega_1 conj(Omega_2)^T - Omega_2 conj(Omega_1)^T)`,
/// Hermitian positive definite.
pub fn gram_matrix(n: u64, ctx: &Ctx) -> Result<ComplexMatrix> {
    let a = period_matrix(n, ctx, PeriodPath::Beta)?;
    let (o1, o2) = omega_matrices(&a);
    let p = o1.mul_conj_transpose(&o2).sub(&o2.mul_conj_transpose(&o1));
    let g = p.rows();
    let wp = ctx.wp();
    let mut out = ComplexMatrix::zero(g, g, wp);
    for r in 0..g {
        for c in 0..g {
            // multiply by i/2
            let z = p.at(r, c);
            let re = Float::with_val(wp, -&z.im) / 2u32;
            let im = Float::with_val(wp, &z.re / &Float::with_val(wp, 2u32));
            out.set(r, c, Complex::new(re, im));
        }
    }
    Ok(out)
}

/// Positive definiteness via Sylvester's criterion: every leading principal
/// minor must be real (to tolerance) and positive.
pub fn gram_is_positive_definite(gram: &ComplexMatrix, ctx: &Ctx) -> Result<bool> {
    let tol = Float::with_val(ctx.wp(), 1u32) >> (ctx.bits() / 2);
    for k in 1..=gram.rows() {
        let d = gram.leading(k).det()?;
        let scale = Float::with_val(ctx.wp(), d.re.clone().abs()).max(&Float::with_val(ctx.wp(), 1u32));
        if d.re <= 0u32 || d.im.clone().abs() > scale * tol.clone() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run the full archimedean verification at one `n`.
pub fn archimedean_report(n: u64, ctx: &Ctx) -> Result<ArchimedeanReport> {
    let g = check_n(n)?;
    let wp = ctx.wp();
    let log_norm_closed = log_lambda_norm(n, ctx)?;
    let log_det_numeric = numeric_log_det(n, ctx, PeriodPath::Beta)?;
    let closed = closed_form_log_det(n, ctx)?;
    let mut rel_err = Float::with_val(wp, &log_det_numeric - &closed).abs();
    rel_err /= closed.abs();
    let gram = gram_matrix(n, ctx)?;
    let gram_pd = gram_is_positive_definite(&gram, ctx)?;
    Ok(ArchimedeanReport {
        n,
        genus: g,
        bits: ctx.bits(),
        log_norm_closed,
        log_det_numeric,
        rel_err,
        gram_pd,
    })
}
