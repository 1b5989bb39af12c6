use serde::Serialize;

use crate::error::{Error, Result};

/// `L(T) = c_0 + c_1 T + ... + c_2g T^2g` of a curve of genus `g` over
/// `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LPolynomial {
    pub q: u64,
    pub g: usize,
    pub coeffs: Vec<i64>,
}

fn overflow() -> Error {
    Error::InvalidParameter("integer overflow in L-polynomial arithmetic".into())
}

fn qpow(q: u64, e: usize) -> Result<i64> {
    i64::try_from(q)
        .ok()
        .and_then(|q| q.checked_pow(e as u32))
        .ok_or_else(overflow)
}

/// `|N - (q^k + 1)| <= 2g q^(k/2)`, compared in squares.
pub fn within_weil(q: u64, g: usize, k: usize, n: i64) -> bool {
    let qk = (q as i128).pow(k as u32);
    let dev = n as i128 - qk - 1;
    dev * dev <= 4 * (g as i128).pow(2) * qk
}

/// Newton's identities on the first `g` counts, then the functional
/// equation.
pub fn lpoly_from_counts(q: u64, g: usize, counts: &[i64]) -> Result<LPolynomial> {
    if counts.len() < g {
        return Err(Error::InvalidParameter(format!(
            "need {g} counts, got {}",
            counts.len()
        )));
    }
    for (i, &n) in counts.iter().enumerate() {
        if !within_weil(q, g, i + 1, n) {
            return Err(Error::WeilBound(format!(
                "N_{} = {n} over F_{q}^{} with g = {g}",
                i + 1,
                i + 1
            )));
        }
    }
    let s: Vec<i64> = (1..=g)
        .map(|k| Ok(qpow(q, k)? + 1 - counts[k - 1]))
        .collect::<Result<_>>()?;
    let mut c = vec![1i64];
    for k in 1..=g {
        let acc: i64 = -(1..=k).map(|i| s[i - 1] * c[k - i]).sum::<i64>();
        if acc % k as i64 != 0 {
            return Err(Error::WeilBound(format!(
                "counts {counts:?} give a non-integral coefficient c_{k}"
            )));
        }
        c.push(acc / k as i64);
    }
    for i in g + 1..=2 * g {
        c.push(qpow(q, i - g)?.checked_mul(c[2 * g - i]).ok_or_else(overflow)?);
    }
    Ok(LPolynomial { q, g, coeffs: c })
}

impl LPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_0 = 1` and `c_{2g-i} = q^(g-i) c_i`.
    pub fn satisfies_functional_equation(&self) -> bool {
        self.coeffs.len() == 2 * self.g + 1
            && self.coeffs[0] == 1
            && (0..=self.g).all(|i| {
                qpow(self.q, self.g - i)
                    .ok()
                    .and_then(|m| m.checked_mul(self.coeffs[i]))
                    == Some(self.coeffs[2 * self.g - i])
            })
    }

    /// Power sums `S_1, ..., S_kmax` of the inverse roots.
    pub fn power_sums(&self, kmax: usize) -> Vec<i64> {
        let c = |i: usize| self.coeffs.get(i).copied().unwrap_or(0);
        let mut s: Vec<i64> = vec![];
        for k in 1..=kmax {
            let v = -(k as i64) * c(k) - (1..k).map(|i| s[i - 1] * c(k - i)).sum::<i64>();
            s.push(v);
        }
        s
    }

    /// `N_k = q^k + 1 - S_k` for `k = 1..=kmax`.
    pub fn predicted_counts(&self, kmax: usize) -> Vec<i64> {
        self.power_sums(kmax)
            .into_iter()
            .enumerate()
            .map(|(i, s)| (self.q as i64).pow(i as u32 + 1) + 1 - s)
            .collect()
    }

    pub fn mul(&self, other: &LPolynomial) -> Result<LPolynomial> {
        if self.q != other.q {
            return Err(Error::InvalidParameter("L-polynomials over different fields".into()));
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = a
                    .checked_mul(*b)
                    .and_then(|m| out[i + j].checked_add(m))
                    .ok_or_else(overflow)?;
            }
        }
        Ok(LPolynomial {
            q: self.q,
            g: self.g + other.g,
            coeffs: out,
        })
    }
}

/// Exact division in `Z[T]`. Both have constant term 1, so the quotient
/// series has integer coefficients; it divides iff the remainder vanishes.
pub fn lpoly_divides(small: &LPolynomial, big: &LPolynomial) -> (bool, Vec<i64>) {
    let (a, b) = (&small.coeffs, &big.coeffs);
    if small.q != big.q || a.len() > b.len() || a.first() != Some(&1) {
        return (false, vec![]);
    }
    let n = b.len() - a.len();
    let mut quot = vec![0i128; n + 1];
    for i in 0..=n {
        let acc: i128 = (1..=i.min(a.len() - 1)).map(|j| a[j] as i128 * quot[i - j]).sum();
        quot[i] = b[i] as i128 - acc;
    }
    let mut prod = vec![0i128; b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in quot.iter().enumerate() {
            prod[i + j] += *x as i128 * y;
        }
    }
    let exact = prod.iter().zip(b).all(|(x, y)| *x == *y as i128);
    let quot: Option<Vec<i64>> = quot.into_iter().map(|v| i64::try_from(v).ok()).collect();
    match quot {
        Some(q) if exact => (true, q),
        Some(q) => (false, q),
        None => (false, vec![]),
    }
}

/// The quotient as an L-polynomial, when `small` divides `big`.
pub fn lpoly_quotient(small: &LPolynomial, big: &LPolynomial) -> Option<LPolynomial> {
    let (ok, coeffs) = lpoly_divides(small, big);
    ok.then(|| LPolynomial {
        q: big.q,
        g: big.g.saturating_sub(small.g),
        coeffs,
    })
}

fn divisors(n: u64) -> Vec<i64> {
    let mut out = vec![];
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as i64);
            if d * d != n {
                out.push((n / d) as i64);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// A nontrivial factor over `Z` of `1 + c1 T + c2 T^2 + c3 T^3 + c4 T^4`,
/// ascending; `None` when the quartic is irreducible over `Z[T]`.
///
/// Linear factors have a root `+-1/v` with `v | c4`. A quadratic split
/// `(1 + a1 T + b1 T^2)(1 + a2 T + b2 T^2)` has `b1 b2 = c4`; for
/// `b1 != b2` the `T` and `T^3` coefficients determine `a1, a2` linearly,
/// and for `b1 = b2` they are the roots of `X^2 - c1 X + (c2 - 2 b1)`.
pub fn quartic_factor(c: &[i64; 5]) -> Option<Vec<i64>> {
    assert_eq!(c[0], 1, "constant term must be 1");
    let c4 = c[4];
    if c4 == 0 {
        return Some(vec![1]);
    }
    let ev = |num: i128, den: i128| -> i128 {
        // den^4 f(num / den)
        (0..5).map(|i| c[i] as i128 * num.pow(i as u32) * den.pow(4 - i as u32)).sum()
    };
    let divs = divisors(c4.unsigned_abs());
    for &v in &divs {
        for sgn in [1i128, -1] {
            if ev(sgn, v as i128) == 0 {
                // root sgn / v gives the factor (1 - v/sgn T) = 1 - sgn v T
                return Some(vec![1, -(sgn as i64) * v]);
            }
        }
    }
    let (c1, c2, c3) = (c[1] as i128, c[2] as i128, c[3] as i128);
    for &b1 in &divs {
        for sgn in [1i128, -1] {
            let b1 = sgn * b1 as i128;
            let b2 = c4 as i128 / b1;
            if b1 != b2 {
                // a1 + a2 = c1, a1 b2 + a2 b1 = c3
                let num = c3 - c1 * b1;
                let den = b2 - b1;
                if num % den != 0 {
                    continue;
                }
                let a1 = num / den;
                let a2 = c1 - a1;
                if b1 + b2 + a1 * a2 == c2 {
                    return Some(vec![1, a1 as i64, b1 as i64]);
                }
            } else {
                if c3 != b1 * c1 {
                    continue;
                }
                let disc = c1 * c1 - 4 * (c2 - 2 * b1);
                if let Some(r) = isqrt(disc) {
                    if (c1 + r) % 2 == 0 {
                        return Some(vec![1, ((c1 + r) / 2) as i64, b1 as i64]);
                    }
                }
            }
        }
    }
    None
}
