use super::zech::{char_product_sum, prime_char_in_extension};
use crate::algebra::{quadratic_character, FiniteField, Poly, PolyRing, PrimeField, Rational, Ring};
use crate::constructions::{build_family, build_thm1, Family, SpaceCurveC};
use crate::curves::{discriminant, CubicModel};
use crate::error::{Error, Result};

fn chi<F: FiniteField>(k: &F, a: &F::Elem) -> i64 {
    quadratic_character(k, a) as i64
}

/// Points on the smooth model of `y^2 = f(x)`: two points at infinity for
/// even degree when the leading coefficient is a square, none when it is
/// not, one for odd degree.
pub fn count_hyperelliptic<F: FiniteField>(k: &F, f: &Poly<F::Elem>) -> Result<i64> {
    let ring = PolyRing::new(k.clone(), "x");
    if !ring.is_squarefree(f) {
        return Err(Error::NotSquarefree);
    }
    let affine: i64 = k.elements().map(|x| 1 + chi(k, &ring.eval(f, &x))).sum();
    let deg = f.degree().unwrap_or(0);
    let inf = if deg % 2 == 1 {
        1
    } else {
        1 + chi(k, f.leading().expect("nonzero"))
    };
    Ok(affine + inf)
}

pub fn count_weierstrass<F: FiniteField>(k: &F, c: &CubicModel<F::Elem>) -> Result<i64> {
    if k.is_zero(&discriminant(k, c)) {
        return Err(Error::Singular("singular reduction".into()));
    }
    let affine: i64 = k.elements().map(|x| 1 + chi(k, &c.rhs(k, &x))).sum();
    Ok(affine + 1)
}

/// Points on the smooth model of `C`, counted through the double cover
/// `f1: C -> E` whose fiber over `(x, y)` is `z^2 + x z + x^2 - A = 0`, of
/// discriminant `4A - 3x^2`. Over the point at infinity the fiber is the
/// pair of roots of `l^2 + l + 1`.
pub fn count_c<F: FiniteField>(k: &F, a: &F::Elem, b: &F::Elem) -> Result<i64> {
    let c = build_thm1(k, a, b)?;
    let four_a = k.mul(&k.from_int(4), a);
    let affine: i64 = k
        .elements()
        .map(|x| {
            let disc = k.sub(&four_a, &k.mul(&k.from_int(3), &k.square(&x)));
            (1 + chi(k, &c.cubic.rhs(k, &x))) * (1 + chi(k, &disc))
        })
        .sum();
    Ok(affine + 1 + chi(k, &k.from_int(-3)))
}

/// Points at infinity of a model counted from `F_p` data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Infinity {
    One,
    /// `1 + chi(c)` points.
    Pair(u64),
}

/// A smooth curve over `F_p` whose point count over `F_{p^k}` is
/// `sum_x prod_j (1 + chi(f_j(x))) + n_inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSpec {
    pub p: u64,
    pub genus: usize,
    pub factors: Vec<Vec<u64>>,
    pub infinity: Infinity,
}

impl CountSpec {
    pub fn hyperelliptic(p: u64, f: &Poly<u64>) -> Self {
        let deg = f.degree().unwrap_or(0);
        let infinity = if deg % 2 == 1 {
            Infinity::One
        } else {
            Infinity::Pair(*f.leading().expect("nonzero"))
        };
        CountSpec {
            p,
            genus: (deg.max(1) - 1) / 2,
            factors: vec![f.coeffs().to_vec()],
            infinity,
        }
    }

    pub fn weierstrass(p: u64, c: &CubicModel<u64>) -> Self {
        let fp = PrimeField::new(p).expect("prime");
        CountSpec {
            p,
            genus: 1,
            factors: vec![c.rhs_coeffs(&fp)],
            infinity: Infinity::One,
        }
    }

    pub fn space_curve(p: u64, c: &SpaceCurveC<u64>) -> Self {
        let fp = PrimeField::new(p).expect("prime");
        CountSpec {
            p,
            genus: 3,
            factors: vec![
                c.cubic.rhs_coeffs(&fp),
                vec![fp.mul(&4, &c.a), 0, fp.elem(-3)],
            ],
            infinity: Infinity::Pair(fp.elem(-3)),
        }
    }

    pub fn count(&self, k: usize) -> Result<i64> {
        let affine = char_product_sum(self.p, k, &self.factors)?;
        let inf = match self.infinity {
            Infinity::One => 1,
            Infinity::Pair(c) => 1 + prime_char_in_extension(self.p, c, k),
        };
        Ok(affine + inf)
    }

    /// `N_1, ..., N_kmax`.
    pub fn counts(&self, kmax: usize) -> Result<Vec<i64>> {
        (1..=kmax).map(|k| self.count(k)).collect()
    }
}

fn check_prime(p: u64) -> Result<PrimeField> {
    if p <= 3 {
        return Err(Error::BadPrime(p, "p must exceed 3".into()));
    }
    PrimeField::new(p).map_err(|_| Error::BadPrime(p, "not prime".into()))
}

/// The family reduced mod `p`, when `p` is good for it: `A` is
/// `p`-integral and nonzero mod `p`, and every curve of the family has
/// good reduction.
pub fn family_mod_p(a: &Rational, p: u64) -> Result<Family<u64>> {
    let fp = check_prime(p)?;
    let ap = fp
        .reduce(a)
        .ok_or_else(|| Error::BadPrime(p, "p divides the denominator of A".into()))?;
    if ap == 0 {
        return Err(Error::BadPrime(p, "A = 0 mod p".into()));
    }
    build_family(&fp, &ap).map_err(|e| Error::BadPrime(p, e.to_string()))
}

/// `C` reduced mod `p`, when `E`, `E'` are nonsingular and
/// `(x^3 - A x + B)(4A - 3x^2)` is squarefree mod `p`.
pub fn thm1_mod_p(a: &Rational, b: &Rational, p: u64) -> Result<SpaceCurveC<u64>> {
    let fp = check_prime(p)?;
    let (Some(ap), Some(bp)) = (fp.reduce(a), fp.reduce(b)) else {
        return Err(Error::BadPrime(p, "p divides a denominator".into()));
    };
    let c = build_thm1(&fp, &ap, &bp).map_err(|e| Error::BadPrime(p, e.to_string()))?;
    let ring = PolyRing::new(fp, "x");
    let prod = ring.mul(
        &ring.from_coeffs(c.cubic.rhs_coeffs(&fp)),
        &ring.from_coeffs(vec![fp.mul(&4, &ap), 0, fp.elem(-3)]),
    );
    if !ring.is_squarefree(&prod) {
        return Err(Error::BadPrime(p, "branch locus of C -> E degenerates".into()));
    }
    Ok(c)
}
