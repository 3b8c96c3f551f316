//! Exact integer and rational arithmetic: factorization, p-adic orders, and
//! the totient. Everything here is exact; floats never enter.

use crate::{Error, Result};

/// Exact rational numbers, backed by GMP. Always canonical: the denominator
/// is positive and coprime to the numerator.
pub type Rational = rug::Rational;

/// Build a rational from a signed numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::from((num, den))
}

/// A factored positive integer: strictly increasing primes with positive
/// exponents, whose product reconstructs the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Multiply the factorization back out.
    pub fn reconstruct(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.checked_pow(e).expect("overflow"))
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// Deterministic primality by trial division. Intended for desk-scale inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factor `n >= 2` by trial division up to sqrt(n).
pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("factorize: n = {n} < 2")));
    }
    let mut m = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0u32;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= m) {
        push(d, &mut m);
        d += 2;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(PrimeFactorization { factors })
}

/// Largest `e` with `p^e | n`. Requires `p` prime and `n >= 1`.
pub fn ord_p(n: u64, p: u64) -> u32 {
    assert!(is_prime(p), "ord_p: {p} is not prime");
    assert!(n >= 1);
    let mut m = n;
    let mut e = 0u32;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// Euler's totient, from the factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let f = factorize(n).expect("n >= 2");
    f.factors().iter().fold(1u64, |acc, &(p, e)| {
        acc * p.checked_pow(e - 1).expect("overflow") * (p - 1)
    })
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
