use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Field, FiniteField, Poly, PolyRing, PrimeField, Ring};
use crate::error::{Error, Result};

const MAX_ATTEMPTS: usize = 10_000;

pub(crate) fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `g` of degree `k` is irreducible iff `x^(p^k) = x mod g`
/// and `gcd(x^(p^(k/l)) - x, g) = 1` for every prime `l | k`.
pub fn is_irreducible(ring: &PolyRing<PrimeField>, g: &Poly<u64>) -> bool {
    let k = match g.degree() {
        None | Some(0) => return false,
        Some(k) => k,
    };
    let p = ring.base().p();
    let g = ring.make_monic(g);
    let x = ring.var();
    // frob[j] = x^(p^j) mod g
    let mut frob = vec![ring.rem(&x, &g)];
    for j in 1..=k {
        let next = ring.pow_mod(&frob[j - 1], p, &g);
        frob.push(next);
    }
    if ring.sub(&frob[k], &frob[0]) != ring.zero() {
        return false;
    }
    prime_divisors(k).into_iter().all(|l| {
        let d = ring.sub(&frob[k / l], &x);
        ring.gcd(&d, &g).degree() == Some(0)
    })
}

/// A monic irreducible polynomial of degree `k` over `F_p`, drawn from a
/// ChaCha stream seeded with `seed`. Gives up after 10 000 candidates.
pub fn find_irreducible(p: u64, k: usize, seed: u64) -> Result<Poly<u64>> {
    let field = PrimeField::new(p)?;
    if k == 0 {
        return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
    }
    let ring = PolyRing::new(field, "x");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut c: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        c.push(1);
        let g = ring.from_coeffs(c);
        if is_irreducible(&ring, &g) {
            return Ok(g);
        }
    }
    Err(Error::SearchExhausted {
        p,
        k,
        attempts: MAX_ATTEMPTS,
    })
}

/// `F_{p^k} = F_p[x] / (modulus)`; elements are coefficient vectors of
/// length `k`.
#[derive(Clone, Debug)]
pub struct ExtField {
    prime: PrimeField,
    k: usize,
    modulus: Vec<u64>,
}

impl ExtField {
    /// Builds the field with a modulus from [`find_irreducible`].
    pub fn new(p: u64, k: usize, seed: u64) -> Result<Self> {
        let m = find_irreducible(p, k, seed)?;
        Self::with_modulus(p, m)
    }

    pub fn with_modulus(p: u64, modulus: Poly<u64>) -> Result<Self> {
        let prime = PrimeField::new(p)?;
        let ring = PolyRing::new(prime, "x");
        if !ring.is_monic(&modulus) || !is_irreducible(&ring, &modulus) {
            return Err(Error::InvalidParameter(format!(
                "modulus {} is not monic irreducible over F_{p}",
                ring.format(&modulus)
            )));
        }
        Ok(ExtField {
            prime,
            k: modulus.degree().unwrap(),
            modulus: modulus.into_coeffs(),
        })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.prime
    }

    pub fn embed(&self, c: u64) -> Vec<u64> {
        let mut v = vec![0; self.k];
        v[0] = c % self.prime.p();
        v
    }

    /// The class of `x`, a generator of the extension.
    pub fn generator(&self) -> Vec<u64> {
        if self.k == 1 {
            // x = -m_0 in F_p
            return vec![self.prime.neg(&self.modulus[0])];
        }
        let mut v = vec![0; self.k];
        v[1] = 1;
        v
    }
}

impl Ring for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }
    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.prime.add(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.prime.neg(x)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.prime.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.prime.p() as u128;
        let k = self.k;
        let mut prod = vec![0u128; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + *x as u128 * *y as u128) % p;
            }
        }
        for deg in (k..2 * k - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, m) in self.modulus[..k].iter().enumerate() {
                let sub = c * *m as u128 % p;
                prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
            }
            prod[deg] = 0;
        }
        prod[..k].iter().map(|&c| c as u64).collect()
    }
    fn from_int(&self, n: i64) -> Vec<u64> {
        self.embed(self.prime.elem(n))
    }
    fn format(&self, a: &Vec<u64>) -> String {
        let ring = PolyRing::new(self.prime, "x");
        ring.format(&ring.from_coeffs(a.clone()))
    }
}

impl Field for ExtField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.size() - 2))
        }
    }
}

impl FiniteField for ExtField {
    fn characteristic(&self) -> u64 {
        self.prime.p()
    }
    fn size(&self) -> u64 {
        self.prime.p().pow(self.k as u32)
    }
    fn element(&self, mut index: u64) -> Vec<u64> {
        let p = self.prime.p();
        (0..self.k)
            .map(|_| {
                let d = index % p;
                index /= p;
                d
            })
            .collect()
    }
    fn from_u64(&self, n: u64) -> Vec<u64> {
        self.embed(n)
    }
}
