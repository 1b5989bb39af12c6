use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

pub const TRIAL_LIMIT: u32 = 1_000_000;
/// Iterations allowed per Pollard rho attempt.
pub const RHO_ITERATIONS: u64 = 1 << 20;
pub const RHO_ATTEMPTS: u64 = 8;

fn small_primes(limit: u32) -> Vec<u32> {
    let n = limit as usize + 1;
    let mut sieve = vec![true; n];
    sieve[0] = false;
    if n > 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            for j in (i * i..n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
}

fn primes_to_limit() -> &'static [u32] {
    static PRIMES: std::sync::OnceLock<Vec<u32>> = std::sync::OnceLock::new();
    PRIMES.get_or_init(|| small_primes(TRIAL_LIMIT))
}

/// Miller-Rabin with the first 13 prime bases; deterministic below
/// `3.3 * 10^24`.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; a nontrivial factor of the composite
/// `n`, or `None` when the budget runs out.
fn rho(n: &BigUint) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for c in 1..=RHO_ATTEMPTS {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut used = 0u64;
        while g.is_one() && used < RHO_ITERATIONS {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..(r - k).min(128) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            used += r;
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factor(n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidParameter("factor of zero".into()));
    }
    let mut out: Vec<(BigUint, u32)> = vec![];
    let mut rest = n.clone();
    for &p in primes_to_limit() {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
        // a prime cofactor ends the search early
        if p == 997 && is_probable_prime(&rest) {
            break;
        }
    }
    let mut stack = vec![];
    if !rest.is_one() {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        if is_probable_prime(&m) {
            match out.iter_mut().find(|(q, _)| *q == m) {
                Some(entry) => entry.1 += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        let g = rho(&m).ok_or_else(|| Error::Unfactored(m.to_string()))?;
        stack.push(&m / &g);
        stack.push(g);
    }
    out.sort();
    Ok(out)
}

/// `v = d s^2` with `d` a squarefree integer carrying the sign of `v`.
pub fn squarefree_part(v: &Rational) -> Result<(BigInt, Rational)> {
    if v.is_zero() {
        return Err(Error::InvalidParameter("squarefree part of zero".into()));
    }
    let prod = v.numer().magnitude() * v.denom().magnitude();
    let mut d = BigUint::one();
    for (p, e) in factor(&prod)? {
        if e % 2 == 1 {
            d *= p;
        }
    }
    let sign = if v.is_negative() { Sign::Minus } else { Sign::Plus };
    let d = BigInt::from_biguint(sign, d);
    let s2 = v / Rational::from_integer(d.clone());
    let s = crate::algebra::rational_sqrt(&s2).expect("v / d is a square");
    Ok((d, s.abs()))
}

/// Trial-division squarefreeness check, for integers whose square factors
/// would be below the trial limit.
pub fn is_squarefree_by_trial(d: &BigInt) -> bool {
    let m = d.magnitude();
    primes_to_limit().iter().all(|&p| {
        let p2 = u64::from(p) * u64::from(p);
        BigUint::from(p2) > *m || !(m % p2).is_zero()
    })
}
