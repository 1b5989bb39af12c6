//! Character sums over `F_{p^k}`.
//!
//! Fields with at most [`ZECH_LIMIT`] elements are tabulated in Zech-log
//! form: a nonzero element is its discrete log to a primitive element, so
//! multiplication is addition of exponents and the quadratic character is
//! the parity of the exponent. Larger fields are reached as Kummer
//! extensions `F_{q0}(s)`, `s^r = c`, of a tabulated field.

use rayon::prelude::*;

use crate::algebra::{is_irreducible, pow_mod, prime_divisors, PolyRing, PrimeField, Ring};
use crate::error::{Error, Result};

pub const ZECH_LIMIT: u64 = 1 << 20;

/// Sentinel log of zero.
const ZERO: u32 = u32::MAX;

pub struct ZechField {
    p: u64,
    q: u64,
    /// `q - 1`, the order of the multiplicative group.
    order: u32,
    /// `log[e]` for the base-`p` encoding `e` of an element.
    log: Vec<u32>,
    /// `zech[n] = log(1 + g^n)`.
    zech: Vec<u32>,
}

/// A monic polynomial of degree `k` over `F_p` with `x` primitive modulo
/// it; the lexicographically first by coefficients `c0, ..., c_{k-1}`.
fn primitive_modulus(p: u64, k: usize) -> Result<Vec<u64>> {
    let fp = PrimeField::new(p)?;
    let ring = PolyRing::new(fp, "x");
    let q = p.pow(k as u32);
    let ls = prime_divisors((q - 1) as usize);
    let x = ring.var();
    let total = p.pow(k as u32);
    for idx in 0..total {
        let mut c: Vec<u64> = (0..k).map(|i| (idx / p.pow(i as u32)) % p).collect();
        if c[0] == 0 {
            continue;
        }
        c.push(1);
        let m = ring.from_coeffs(c.clone());
        if !is_irreducible(&ring, &m) {
            continue;
        }
        let primitive = ls
            .iter()
            .all(|&l| ring.pow_mod(&x, (q - 1) / l as u64, &m) != ring.one());
        if primitive {
            return Ok(c);
        }
    }
    Err(Error::SearchExhausted {
        p,
        k,
        attempts: total as usize,
    })
}

impl ZechField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let q = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if k == 0 || q > ZECH_LIMIT as u128 {
            return Err(Error::InvalidParameter(format!(
                "F_{p}^{k} is outside the tabulated range"
            )));
        }
        let q = q as u64;
        let m = primitive_modulus(p, k)?;
        let order = (q - 1) as u32;
        let mut log = vec![ZERO; q as usize];
        let mut exp = vec![0u32; order as usize];
        // digits of g^i, g = x (for k = 1, g = -m0)
        let mut digits = vec![0u64; k];
        if k == 1 {
            digits[0] = (p - m[0]) % p;
        } else {
            digits[0] = 1;
        }
        let encode = |d: &[u64]| d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32;
        let mut cur = vec![0u64; k];
        cur[0] = 1;
        for i in 0..order {
            let e = encode(&cur);
            exp[i as usize] = e;
            log[e as usize] = i;
            // multiply by g
            if k == 1 {
                cur[0] = cur[0] * digits[0] % p;
            } else {
                let top = cur[k - 1];
                for j in (1..k).rev() {
                    cur[j] = cur[j - 1];
                }
                cur[0] = 0;
                for j in 0..k {
                    cur[j] = (cur[j] + (p - m[j]) * top) % p;
                }
            }
        }
        let zech = (0..order as usize)
            .map(|n| {
                let e = exp[n] as u64;
                let c0 = e % p;
                let e1 = e - c0 + (c0 + 1) % p;
                log[e1 as usize]
            })
            .collect();
        Ok(ZechField {
            p,
            q,
            order,
            log,
            zech,
        })
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    /// Log of the prime-field element `c`.
    pub fn from_prime(&self, c: u64) -> u32 {
        self.log[(c % self.p) as usize]
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == ZERO || b == ZERO {
            return ZERO;
        }
        let s = a as u64 + b as u64;
        let o = self.order as u64;
        (if s >= o { s - o } else { s }) as u32
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        let d = if b >= a { b - a } else { b + self.order - a };
        let z = self.zech[d as usize];
        if z == ZERO {
            ZERO
        } else {
            self.mul(a, z)
        }
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        self.mul(a, self.order / 2)
    }

    fn scale_int(&self, a: u32, n: u64) -> u32 {
        self.mul(a, self.from_prime(n))
    }

    #[inline]
    fn chi(&self, a: u32) -> i64 {
        if a == ZERO {
            0
        } else if a % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[inline]
    fn eval(&self, f: &[u32], x: u32) -> u32 {
        f.iter().rev().fold(ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All elements: zero, then `g^0, ..., g^(q-2)`.
    fn elements(&self) -> impl ParallelIterator<Item = u32> {
        rayon::iter::once(ZERO).chain((0..self.order).into_par_iter())
    }
}

/// `F_{q0}[s] / (s^r - c)` with `c` a generator of `F_{q0}^*`, `r` in
/// `{2, 3}` dividing `q0 - 1`.
struct KummerTower<'a> {
    base: &'a ZechField,
    r: usize,
    /// Log of `c`; `c = g` so this is 1.
    c: u32,
}

type TElem = [u32; 3];

impl KummerTower<'_> {
    fn zero(&self) -> TElem {
        [ZERO; 3]
    }

    fn add(&self, x: &TElem, y: &TElem) -> TElem {
        let b = self.base;
        [b.add(x[0], y[0]), b.add(x[1], y[1]), b.add(x[2], y[2])]
    }

    fn mul(&self, x: &TElem, y: &TElem) -> TElem {
        let b = self.base;
        let mut out = [ZERO; 3];
        for i in 0..self.r {
            if x[i] == ZERO {
                continue;
            }
            for j in 0..self.r {
                let mut t = b.mul(x[i], y[j]);
                let mut k = i + j;
                if k >= self.r {
                    k -= self.r;
                    t = b.mul(t, self.c);
                }
                out[k] = b.add(out[k], t);
            }
        }
        out
    }

    fn scale(&self, x: &TElem, a: u32) -> TElem {
        let b = self.base;
        [b.mul(x[0], a), b.mul(x[1], a), b.mul(x[2], a)]
    }

    /// Norm to `F_{q0}`; the quadratic character of `F_{q0^r}` is the
    /// character of the norm.
    fn norm(&self, x: &TElem) -> u32 {
        let b = self.base;
        let cube = |v: u32| b.mul(b.mul(v, v), v);
        if self.r == 2 {
            b.add(b.mul(x[0], x[0]), b.neg(b.mul(self.c, b.mul(x[1], x[1]))))
        } else {
            let c = self.c;
            let c2 = b.mul(c, c);
            let t = b.add(b.add(cube(x[0]), b.mul(c, cube(x[1]))), b.mul(c2, cube(x[2])));
            let m = b.scale_int(b.mul(c, b.mul(x[0], b.mul(x[1], x[2]))), 3);
            b.add(t, b.neg(m))
        }
    }

    /// Coefficients of `f(y + beta)`.
    fn shift(&self, f: &[u32], beta: &TElem) -> Vec<TElem> {
        let mut g: Vec<TElem> = vec![];
        for &c in f.iter().rev() {
            // g <- g * (y + beta) + c
            let mut next = vec![self.zero(); g.len() + 1];
            for (i, gi) in g.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], gi);
                next[i] = self.add(&next[i], &self.mul(gi, beta));
            }
            next[0] = self.add(&next[0], &[c, ZERO, ZERO]);
            g = next;
        }
        g
    }
}

/// Base-`p` coefficient lists over `F_p`.
fn to_logs(z: &ZechField, f: &[u64]) -> Vec<u32> {
    f.iter().map(|&c| z.from_prime(c)).collect()
}

/// `sum_{x in F_{p^k}} prod_j (1 + chi(f_j(x)))` for `f_j` with
/// coefficients in `F_p` (ascending, reduced).
pub fn char_product_sum(p: u64, k: usize, fs: &[Vec<u64>]) -> Result<i64> {
    let q = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if q <= ZECH_LIMIT as u128 {
        let z = ZechField::new(p, k)?;
        let logs: Vec<Vec<u32>> = fs.iter().map(|f| to_logs(&z, f)).collect();
        return Ok(z
            .elements()
            .map(|x| logs.iter().map(|f| 1 + z.chi(z.eval(f, x))).product::<i64>())
            .sum());
    }
    for r in [2usize, 3] {
        if k % r != 0 || (p - 1) % r as u64 != 0 {
            continue;
        }
        let q0 = (p as u128).pow((k / r) as u32);
        if q0 <= ZECH_LIMIT as u128 {
            return tower_sum(p, k / r, r, fs);
        }
    }
    Err(Error::InvalidParameter(format!(
        "counting over F_{p}^{k} exceeds the supported range"
    )))
}

fn tower_sum(p: u64, k0: usize, r: usize, fs: &[Vec<u64>]) -> Result<i64> {
    let base = ZechField::new(p, k0)?;
    let tower = KummerTower {
        base: &base,
        r,
        c: 1,
    };
    let order = base.order as u64;
    let q0 = base.q;
    // tuples (a_1, ..., a_{r-1}), each a log in [0, order) or `order` for zero
    let ntuples = q0.pow((r - 1) as u32);
    let digit = |idx: u64, m: usize| (idx / q0.pow((m - 1) as u32)) % q0;
    let frob = |idx: u64| -> u64 {
        (1..r).fold(0, |acc, m| {
            let v = digit(idx, m);
            let w = if v == order {
                order
            } else {
                // a_m s^m -> a_m^p c^(m (p - 1) / r) s^m
                let shift = (m as u64 * (p - 1) / r as u64) % order;
                ((v * p) % order + shift) % order
            };
            acc + w * q0.pow((m - 1) as u32)
        })
    };
    let mut seen = vec![false; ntuples as usize];
    let mut reps: Vec<(u64, i64)> = vec![];
    for idx in 0..ntuples {
        if seen[idx as usize] {
            continue;
        }
        let mut size = 0;
        let mut j = idx;
        while !seen[j as usize] {
            seen[j as usize] = true;
            size += 1;
            j = frob(j);
        }
        reps.push((idx, size));
    }
    let logs: Vec<Vec<u32>> = fs.iter().map(|f| to_logs(&base, f)).collect();
    let total: i64 = reps
        .par_iter()
        .map(|&(idx, weight)| {
            let mut beta = [ZERO; 3];
            for (m, b) in beta.iter_mut().enumerate().take(r).skip(1) {
                let v = digit(idx, m);
                *b = if v == order { ZERO } else { v as u32 };
            }
            let shifted: Vec<Vec<TElem>> = logs.iter().map(|f| tower.shift(f, &beta)).collect();
            let fiber: i64 = base
                .elements()
                .map(|a0| {
                    shifted
                        .iter()
                        .map(|g| {
                            let v = g
                                .iter()
                                .rev()
                                .fold(tower.zero(), |acc, c| tower.add(&tower.scale(&acc, a0), c));
                            1 + base.chi(tower.norm(&v))
                        })
                        .product::<i64>()
                })
                .sum();
            weight * fiber
        })
        .sum();
    Ok(total)
}

/// `chi_{p^k}(c)` for `c` in `F_p`.
pub fn prime_char_in_extension(p: u64, c: u64, k: usize) -> i64 {
    let c = c % p;
    if c == 0 {
        return 0;
    }
    let base = if pow_mod(c, (p - 1) / 2, p) == 1 { 1 } else { -1 };
    if base == -1 && k % 2 == 1 {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quadratic_character, ExtField, FiniteField};

    fn slow_sum(p: u64, k: usize, fs: &[Vec<u64>]) -> i64 {
        let f = ExtField::new(p, k, 0).unwrap();
        let ring = PolyRing::new(f.clone(), "x");
        let polys: Vec<_> = fs
            .iter()
            .map(|c| ring.from_coeffs(c.iter().map(|&v| f.from_u64(v)).collect()))
            .collect();
        f.elements()
            .map(|x| {
                polys
                    .iter()
                    .map(|g| 1 + quadratic_character(&f, &ring.eval(g, &x)) as i64)
                    .product::<i64>()
            })
            .sum()
    }

    #[test]
    fn zech_tables_are_consistent() {
        for (p, k) in [(5, 1), (7, 2), (11, 2), (13, 1), (7, 3)] {
            let z = ZechField::new(p, k).unwrap();
            let q = z.size();
            assert_eq!(q, p.pow(k as u32));
            // g^(order/2) = -1
            assert_eq!(z.add(z.order / 2, 0), ZERO);
            for a in 0..z.order {
                assert_eq!(z.add(a, z.neg(a)), ZERO);
            }
            // p * 1 = 0
            let mut acc = ZERO;
            for _ in 0..p {
                acc = z.add(acc, 0);
            }
            assert_eq!(acc, ZERO);
        }
    }

    #[test]
    fn direct_matches_generic_field() {
        let fs = vec![vec![1, 6, 0, 1]];
        for k in 1..=3 {
            assert_eq!(char_product_sum(7, k, &fs).unwrap(), slow_sum(7, k, &fs));
        }
        let fs = vec![vec![1, 10, 0, 1], vec![4, 0, 8]];
        for k in 1..=2 {
            assert_eq!(char_product_sum(11, k, &fs).unwrap(), slow_sum(11, k, &fs));
        }
    }

    #[test]
    fn tower_matches_direct() {
        // F_{7^2} = F_7(sqrt 3), F_{7^3} = F_7(cbrt 3), F_{13^2}, F_{7^4} = F_{49}(s)
        let fs = vec![vec![1, 6, 0, 1], vec![3, 0, 2]];
        for (p, k0, r) in [(7, 1, 2), (7, 1, 3), (13, 1, 2), (13, 1, 3), (7, 2, 2)] {
            let k = k0 * r;
            let direct = char_product_sum(p, k, &fs).unwrap();
            assert_eq!(tower_sum(p, k0, r, &fs).unwrap(), direct, "p = {p}, k = {k}");
        }
    }

    #[test]
    fn prime_character_lifts() {
        // 3 is a non-square mod 7
        assert_eq!(prime_char_in_extension(7, 3, 1), -1);
        assert_eq!(prime_char_in_extension(7, 3, 2), 1);
        assert_eq!(prime_char_in_extension(7, 2, 3), 1);
        assert_eq!(prime_char_in_extension(7, 0, 3), 0);
        let f = ExtField::new(7, 3, 1).unwrap();
        assert_eq!(quadratic_character(&f, &f.from_u64(3)), -1);
    }
}
