//! Precision context: a bundle of mantissa precision plus the analytic
//! constants memoized at that precision.
//!
//! All operations run internally at `wp = bits + GUARD_BITS` and quote their
//! error bounds against `bits`. Constants are computed once per context on
//! first use; initialization is at-most-once and safe to race.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::float::Constant;
use rug::{Float, Integer, Rational};

/// Arbitrary-precision real number (MPFR binary float).
pub type Real = Float;

/// Extra working bits on top of the requested precision.
pub const GUARD_BITS: u32 = 32;

/// Precision context. Cheap to share by reference across threads.
pub struct Ctx {
    bits: u32,
    cache: OnceLock<Cache>,
    /// Memoized gamma-ratio sums `S(n)`, the one expensive repeated quantity
    /// (the height routes and several bound families all consume it).
    ratio_sums: Mutex<HashMap<u64, Float>>,
}

struct Cache {
    pi: Float,
    ln2: Float,
    ln_pi: Float,
    ln_2pi: Float,
    euler_gamma: Float,
    zeta_prime_2: Float,
    zeta_prime_minus_one: Float,
    log_barnes_g_half: Float,
    /// Stirling series data: arguments are shifted to at least `shift`,
    /// coefficients are `B_{2k} / (2k (2k-1))` for `k = 1..`.
    stirling_shift: u32,
    stirling_coeffs: Vec<Float>,
}

impl Ctx {
    /// A context with the given mantissa precision (at least 64 bits).
    pub fn new(bits: u32) -> Self {
        assert!(bits >= 64, "precision must be at least 64 bits, got {bits}");
        Ctx {
            bits,
            cache: OnceLock::new(),
            ratio_sums: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn cached_ratio_sum(&self, n: u64) -> Option<Float> {
        self.ratio_sums.lock().unwrap().get(&n).cloned()
    }

    pub(crate) fn store_ratio_sum(&self, n: u64, value: &Float) {
        self.ratio_sums.lock().unwrap().insert(n, value.clone());
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Internal working precision.
    pub fn wp(&self) -> u32 {
        self.bits + GUARD_BITS
    }

    /// Relative tolerance targeted by the quadrature engine: `2^-(bits/2 + 8)`.
    pub fn quadrature_target(&self) -> Float {
        let mut t = Float::with_val(self.wp(), 1u32);
        t >>= self.bits / 2 + 8;
        t
    }

    /// Margin guard for inequality verdicts: `2^-(bits/2)`.
    pub fn guard(&self) -> Float {
        let mut t = Float::with_val(self.wp(), 1u32);
        t >>= self.bits / 2;
        t
    }

    pub fn real(&self, v: f64) -> Float {
        Float::with_val(self.wp(), v)
    }

    pub fn real_from_u64(&self, v: u64) -> Float {
        Float::with_val(self.wp(), v)
    }

    /// Round an exact rational to the working precision (a single rounding).
    pub fn real_from_rational(&self, r: &Rational) -> Float {
        Float::with_val(self.wp(), r)
    }

    pub fn ln_u64(&self, v: u64) -> Float {
        Float::with_val(self.wp(), v).ln()
    }

    pub fn pi(&self) -> Float {
        self.cache().pi.clone()
    }

    pub fn ln2(&self) -> Float {
        self.cache().ln2.clone()
    }

    pub fn ln_pi(&self) -> Float {
        self.cache().ln_pi.clone()
    }

    pub fn ln_2pi(&self) -> Float {
        self.cache().ln_2pi.clone()
    }

    /// Euler's constant, by the Brent–McMillan Bessel-quotient scheme.
    pub fn euler_gamma(&self) -> Float {
        self.cache().euler_gamma.clone()
    }

    /// `zeta'(2)`, by Euler–Maclaurin summation of `-sum ln k / k^2`.
    pub fn zeta_prime_2(&self) -> Float {
        self.cache().zeta_prime_2.clone()
    }

    /// `zeta'(-1) = 1/12 - ln A`, with the Glaisher constant `ln A` assembled
    /// from Euler's constant and `zeta'(2)`.
    pub fn zeta_prime_minus_one(&self) -> Float {
        self.cache().zeta_prime_minus_one.clone()
    }

    /// `log G(1/2) = (1/24) log 2 + (3/2) zeta'(-1) - (1/4) log pi`.
    pub fn log_barnes_g_half(&self) -> Float {
        self.cache().log_barnes_g_half.clone()
    }

    pub(crate) fn stirling(&self) -> (u32, &[Float]) {
        let c = self.cache();
        (c.stirling_shift, &c.stirling_coeffs)
    }

    fn cache(&self) -> &Cache {
        self.cache.get_or_init(|| Cache::build(self.wp()))
    }
}

impl Cache {
    fn build(wp: u32) -> Cache {
        let pi = Float::with_val(wp, Constant::Pi);
        let ln2 = Float::with_val(wp, Constant::Log2);
        let ln_pi = pi.clone().ln();
        let ln_2pi = Float::with_val(wp, &ln_pi + &ln2);

        // Stirling data. Shift arguments to >= wp/4; there the series bottoms
        // out safely below 2^-(wp+4) before the coefficient table ends.
        let stirling_shift = (wp / 4).max(16);
        let n_coeffs = (wp / 4 + 8) as usize;
        let bern = bernoulli_even(2 * n_coeffs);
        let stirling_coeffs: Vec<Float> = (1..=n_coeffs)
            .map(|k| {
                let den = Rational::from((2 * k as u64) * (2 * k as u64 - 1));
                let c = Rational::from(&bern[k] / &den);
                Float::with_val(wp, &c)
            })
            .collect();

        let euler_gamma = euler_gamma_brent_mcmillan(wp);
        let zeta_prime_2 = zeta_prime_2_euler_maclaurin(wp, &bern);

        // ln A = (gamma + ln 2pi)/12 - zeta'(2)/(2 pi^2), zeta'(-1) = 1/12 - ln A.
        let mut ln_a = Float::with_val(wp, &euler_gamma + &ln_2pi);
        ln_a /= 12u32;
        let mut two_pi_sq = pi.clone().square();
        two_pi_sq *= 2u32;
        ln_a -= Float::with_val(wp, &zeta_prime_2 / &two_pi_sq);
        let mut zeta_prime_minus_one = Float::with_val(wp, Rational::from((1, 12)));
        zeta_prime_minus_one -= &ln_a;

        let mut log_barnes_g_half = ln2.clone();
        log_barnes_g_half /= 24u32;
        log_barnes_g_half += Float::with_val(wp, &zeta_prime_minus_one * &Float::with_val(wp, 1.5));
        log_barnes_g_half -= Float::with_val(wp, &ln_pi / &Float::with_val(wp, 4u32));

        Cache {
            pi,
            ln2,
            ln_pi,
            ln_2pi,
            euler_gamma,
            zeta_prime_2,
            zeta_prime_minus_one,
            log_barnes_g_half,
            stirling_shift,
            stirling_coeffs,
        }
    }
}

/// Exact Bernoulli numbers `B_0, B_2, ..., B_max_index` (even indices only;
/// odd ones past `B_1` vanish). `bernoulli_even(m)[k]` is `B_{2k}`.
pub fn bernoulli_even(max_index: usize) -> Vec<Rational> {
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k, over all indices; odd B_m
    // with m >= 3 come out zero.
    let m_max = max_index;
    let mut all: Vec<Rational> = Vec::with_capacity(m_max + 1);
    all.push(Rational::from(1));
    for m in 1..=m_max {
        // binomials C(m+1, k), built incrementally along the row
        let mut binom = Integer::from(1);
        let mut acc = Rational::new();
        for (k, b) in all.iter().enumerate() {
            acc += Rational::from(b * &Rational::from(&binom));
            // C(m+1, k+1) = C(m+1, k) * (m+1-k) / (k+1)
            binom *= (m + 1 - k) as u64;
            binom /= (k + 1) as u64;
        }
        acc /= Rational::from(-((m + 1) as i64));
        all.push(acc);
    }
    all.into_iter().step_by(2).collect()
}

/// Euler's constant at `wp` bits via the Brent–McMillan quotient
/// `A(n)/B(n) - ln n` with `A = sum (n^k/k!)^2 H_k`, `B = sum (n^k/k!)^2`.
/// The error is of order `e^{-4n}`; `n` is sized so that this is below
/// `2^-(wp+16)`.
fn euler_gamma_brent_mcmillan(wp: u32) -> Float {
    let n = ((wp as f64 + 48.0) * std::f64::consts::LN_2 / 4.0).ceil() as u32 + 2;
    let n_sq = Float::with_val(wp, n).square();
    let mut term = Float::with_val(wp, 1u32); // (n^k/k!)^2
    let mut harmonic = Float::new(wp); // H_k
    let mut num = Float::new(wp); // sum term * H_k
    let mut den = Float::with_val(wp, 1u32); // sum term
    for k in 1u32..200_000 {
        term *= &n_sq;
        term /= k;
        term /= k;
        harmonic += Float::with_val(wp, Rational::from((1u32, k)));
        num += Float::with_val(wp, &term * &harmonic);
        den += &term;
        if term.get_exp().unwrap_or(i32::MIN) < den.get_exp().unwrap_or(0) - (wp as i32 + 16) {
            break;
        }
    }
    let mut gamma = num / den;
    gamma -= Float::with_val(wp, n).ln();
    gamma
}

/// `zeta'(2) = -sum_{k>=2} ln k / k^2` by Euler–Maclaurin: direct summation
/// to `N`, then the integral tail plus Bernoulli corrections on
/// `f(x) = ln x / x^2`. The remainder is bounded by the first omitted term.
fn zeta_prime_2_euler_maclaurin(wp: u32, bern: &[Rational]) -> Float {
    let n = (wp as u64 / 8).max(64);
    let mut sum = Float::new(wp);
    for k in 2..n {
        let mut t = Float::with_val(wp, k).ln();
        t /= Rational::from(k * k);
        sum += t;
    }
    let ln_n = Float::with_val(wp, n).ln();
    // integral tail (ln N + 1)/N and the f(N)/2 term
    let mut tail = ln_n.clone();
    tail += 1u32;
    tail /= n;
    tail += Float::with_val(wp, &ln_n / &Float::with_val(wp, Rational::from(2 * n * n)));
    // f^(m)(x) = (a_m ln x + b_m) / x^(m+2); subtract B_2j/(2j)! f^(2j-1)(N)
    let mut a = Float::with_val(wp, 1u32); // a_m, starting at m = 0
    let mut b = Float::new(wp); // b_m
    let mut m = 0u64;
    let mut pow_n = Float::with_val(wp, Rational::from(n * n)); // N^(m+2)
    let mut factorial = Float::with_val(wp, 1u32); // (2j)!
    for (j, b2j) in bern.iter().enumerate().skip(1) {
        // step the derivative recurrence up to m = 2j - 1
        while m < 2 * j as u64 - 1 {
            let a_next = Float::with_val(wp, &a * &Float::with_val(wp, -((m as i64) + 2)));
            let b_next = Float::with_val(wp, &a - &Float::with_val(wp, &b * &Float::with_val(wp, (m as i64) + 2)));
            a = a_next;
            b = b_next;
            m += 1;
            pow_n *= n;
        }
        factorial *= Rational::from((2 * j as u64) * (2 * j as u64 - 1));
        let mut deriv = Float::with_val(wp, &a * &ln_n);
        deriv += &b;
        deriv /= &pow_n;
        let mut term = Float::with_val(wp, b2j);
        term /= &factorial;
        term *= &deriv;
        tail -= &term;
        if term.get_exp().unwrap_or(i32::MIN) < -(wp as i32 + 8) {
            let mut total = sum;
            total += &tail;
            return -total;
        }
    }
    panic!("zeta'(2) Euler-Maclaurin did not converge at wp = {wp}");
}
