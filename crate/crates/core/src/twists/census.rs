use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::factor::squarefree_part;
use crate::algebra::{Field, PolyRing, PrimeField, Rational, RationalField};
use crate::constructions::{covering_maps, h_poly};
use crate::curves::{add_unchecked, ec_neg, on_curve, quadratic_twist, twist_point, CubicModel, EcPoint};
use crate::error::{Error, Result};

/// Bound on the order of a rational torsion point.
pub const TORSION_BOUND: usize = 12;
/// Coefficient bound of the relation search.
pub const RELATION_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistStatus {
    IndependentCandidate,
    DependentOrTorsion,
    Unfactored,
    Degenerate,
}

impl fmt::Display for TwistStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistStatus::IndependentCandidate => "independent-candidate",
            TwistStatus::DependentOrTorsion => "dependent-or-torsion",
            TwistStatus::Unfactored => "unfactored",
            TwistStatus::Degenerate => "degenerate",
        })
    }
}

/// One twist class found by the census. `d` and `s` are `None` only for
/// `unfactored` records; the points are on `y^2 = x^3 - A d^2 x + A d^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistRecord {
    pub t: Rational,
    pub d: Option<BigInt>,
    pub s: Option<Rational>,
    pub p1: EcPoint<Rational>,
    pub p2: EcPoint<Rational>,
    pub status: TwistStatus,
}

impl TwistRecord {
    pub fn height(&self) -> BigInt {
        height(&self.t)
    }
}

fn height(t: &Rational) -> BigInt {
    t.numer().abs().max(t.denom().clone())
}

/// `t = n/m` in lowest terms with `|n|, m <= bound`, ordered by height,
/// then `m`, then `n`.
pub fn rationals_of_height(bound: u64) -> Vec<Rational> {
    let b = bound as i64;
    let mut out = vec![];
    for m in 1..=b {
        for n in -b..=b {
            if n.gcd(&m) == 1 {
                out.push((n.abs().max(m), m, n));
            }
        }
    }
    out.sort_unstable();
    out.into_iter()
        .map(|(_, m, n)| Rational::new(n.into(), m.into()))
        .collect()
}

/// Number of large primes used to rule out relations before exact
/// arithmetic.
pub const PRUNING_PRIMES: usize = 6;

type Reduced = (PrimeField, CubicModel<u64>, EcPoint<u64>, EcPoint<u64>);

fn reduce_point(fp: &PrimeField, p: &EcPoint<Rational>) -> Option<EcPoint<u64>> {
    match p {
        EcPoint::Infinity => Some(EcPoint::Infinity),
        EcPoint::Affine(x, y) => Some(EcPoint::Affine(fp.reduce(x)?, fp.reduce(y)?)),
    }
}

/// Primes below `2^32` of good reduction for `e` at which both points are
/// integral.
fn pruning_primes(e: &CubicModel<Rational>, p1: &EcPoint<Rational>, p2: &EcPoint<Rational>) -> Vec<Reduced> {
    let mut out = vec![];
    let mut p = u32::MAX as u64;
    while out.len() < PRUNING_PRIMES {
        p -= 2;
        let Ok(fp) = PrimeField::new(p) else { continue };
        let Ok(ep) = e.try_map(&fp, |c| fp.reduce(c)) else { continue };
        if let (Some(r1), Some(r2)) = (reduce_point(&fp, p1), reduce_point(&fp, p2)) {
            out.push((fp, ep, r1, r2));
        }
    }
    out
}

fn multiples<F: Field>(k: &F, e: &CubicModel<F::Elem>, p: &EcPoint<F::Elem>, n: usize) -> Vec<EcPoint<F::Elem>> {
    let mut m = vec![EcPoint::Infinity];
    for i in 0..n {
        let next = add_unchecked(k, e, &m[i], p);
        m.push(next);
    }
    m
}

/// Whether `a P1 + b P2 = O`, given the multiples `0 P, ..., n P`.
fn relation_holds<F: Field>(k: &F, m1: &[EcPoint<F::Elem>], m2: &[EcPoint<F::Elem>], a: i64, b: i64) -> bool {
    let lhs = if a >= 0 { m1[a as usize].clone() } else { ec_neg(k, &m1[a.unsigned_abs() as usize]) };
    let rhs = if b >= 0 { ec_neg(k, &m2[b as usize]) } else { m2[b.unsigned_abs() as usize].clone() };
    lhs == rhs
}

/// `dependent-or-torsion` if some `n P_i` with `n <= TORSION_BOUND`
/// vanishes or some `a P1 + b P2` with `0 < max(|a|, |b|) <= RELATION_BOUND`
/// does. A relation over `Q` survives reduction, so only relations that
/// hold modulo every pruning prime are checked exactly.
pub fn independence_screen(
    e: &CubicModel<Rational>,
    p1: &EcPoint<Rational>,
    p2: &EcPoint<Rational>,
) -> Result<TwistStatus> {
    let q = RationalField;
    if !on_curve(&q, e, p1) || !on_curve(&q, e, p2) {
        return Err(Error::OffCurve);
    }
    let t = TORSION_BOUND as i64;
    let r = RELATION_BOUND as i64;
    let mut candidates: Vec<(i64, i64)> = (1..=t).flat_map(|n| [(n, 0), (0, n)]).collect();
    for a in 0..=r {
        for b in -r..=r {
            if a > 0 || b > 0 {
                candidates.push((a, b));
            }
        }
    }
    let bound = TORSION_BOUND.max(RELATION_BOUND);
    for (fp, ep, r1, r2) in pruning_primes(e, p1, p2) {
        let m1 = multiples(&fp, &ep, &r1, bound);
        let m2 = multiples(&fp, &ep, &r2, bound);
        candidates.retain(|&(a, b)| relation_holds(&fp, &m1, &m2, a, b));
        if candidates.is_empty() {
            return Ok(TwistStatus::IndependentCandidate);
        }
    }
    let m1 = multiples(&q, e, p1, bound);
    let m2 = multiples(&q, e, p2, bound);
    if candidates.iter().any(|&(a, b)| relation_holds(&q, &m1, &m2, a, b)) {
        Ok(TwistStatus::DependentOrTorsion)
    } else {
        Ok(TwistStatus::IndependentCandidate)
    }
}

enum Class {
    Twist(BigInt, Rational),
    Unfactored,
}

/// Twist classes of the rational points of `H` with `x`-coordinate of
/// height at most `height_bound`, one record per squarefree `d` (the
/// smallest `t`), sorted by `(|d|, d)`; unfactored values follow in
/// enumeration order.
pub fn census(a: &Rational, height_bound: u64) -> Result<Vec<TwistRecord>> {
    if height_bound == 0 {
        return Err(Error::InvalidParameter("height bound must be at least 1".into()));
    }
    let q = RationalField;
    let cov = covering_maps(&q, a)?;
    let [g1, g2] = cov.twist_maps()?;
    let kt = cov.ff.base();
    let h = h_poly(&PolyRing::new(q, "t"), a);
    let ring = PolyRing::new(q, "t");

    let ts = rationals_of_height(height_bound);
    let classes: Vec<Option<(Rational, Class)>> = ts
        .par_iter()
        .map(|t| {
            let v = ring.eval(&h, t);
            if v.is_zero() {
                return None;
            }
            let class = match squarefree_part(&v) {
                Ok((d, s)) => Class::Twist(d, s),
                Err(_) => Class::Unfactored,
            };
            Some((t.clone(), class))
        })
        .collect();

    let mut best: BTreeMap<(BigInt, BigInt), (Rational, Rational)> = BTreeMap::new();
    let mut unfactored = vec![];
    for (t, class) in classes.into_iter().flatten() {
        match class {
            Class::Twist(d, s) => {
                best.entry((d.abs(), d)).or_insert((t, s));
            }
            Class::Unfactored => unfactored.push(t),
        }
    }

    let entries: Vec<_> = best.into_iter().collect();
    let mut records: Vec<TwistRecord> = entries
        .into_par_iter()
        .map(|((_, d), (t, s))| -> Result<TwistRecord> {
            let dq = Rational::from_integer(d.clone());
            let ed = quadratic_twist(&q, &cov.e, &dq)?;
            let image = |g: &crate::constructions::TwistMap<Rational>| {
                g.eval(kt, &t, &s).map(|p| twist_point(&q, &dq, &p))
            };
            let (p1, p2) = match (image(&g1), image(&g2)) {
                (Ok(p1), Ok(p2)) => (p1, p2),
                _ => (EcPoint::Infinity, EcPoint::Infinity),
            };
            let status = if p1.is_infinity() || p2.is_infinity() {
                TwistStatus::Degenerate
            } else {
                independence_screen(&ed, &p1, &p2)?
            };
            Ok(TwistRecord { t, d: Some(d), s: Some(s), p1, p2, status })
        })
        .collect::<Result<_>>()?;
    records.extend(unfactored.into_iter().map(|t| TwistRecord {
        t,
        d: None,
        s: None,
        p1: EcPoint::Infinity,
        p2: EcPoint::Infinity,
        status: TwistStatus::Unfactored,
    }));
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub x: u64,
    pub n: usize,
    /// `X^(1/6) / log(X)^2` in `f64`, printed with 6 decimals (nearest).
    pub reference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub rows: Vec<GrowthRow>,
}

pub fn reference_value(x: u64) -> String {
    let xf = x as f64;
    format!("{:.6}", xf.powf(1.0 / 6.0) / xf.ln().powi(2))
}

/// `N(X)`: distinct `d` with `|d| <= X` whose record is an independent
/// candidate, for each `X` of the grid.
pub fn growth_table(records: &[TwistRecord], grid: &[u64]) -> Result<CensusSummary> {
    if let Some(x) = grid.iter().find(|&&x| x <= 1) {
        return Err(Error::InvalidParameter(format!("grid value {x} <= 1")));
    }
    let ds: BTreeSet<BigInt> = records
        .iter()
        .filter(|r| r.status == TwistStatus::IndependentCandidate)
        .filter_map(|r| r.d.clone())
        .collect();
    let rows = grid
        .iter()
        .map(|&x| GrowthRow {
            x,
            n: ds.iter().filter(|d| d.magnitude() <= &x.into()).count(),
            reference: reference_value(x),
        })
        .collect();
    Ok(CensusSummary { rows })
}

fn point_fields(p: &EcPoint<Rational>) -> [String; 4] {
    match p {
        EcPoint::Affine(x, y) => [
            x.numer().to_string(),
            x.denom().to_string(),
            y.numer().to_string(),
            y.denom().to_string(),
        ],
        EcPoint::Infinity => ["O".into(), "O".into(), "O".into(), "O".into()],
    }
}

pub const CENSUS_HEADER: &str =
    "t_num\tt_den\td\tx1_num\tx1_den\ty1_num\ty1_den\tx2_num\tx2_den\ty2_num\ty2_den\tstatus";

/// Census TSV with header; the point at infinity is written `O` and an
/// unknown `d` as `?`.
pub fn census_tsv(records: &[TwistRecord]) -> String {
    let mut out = String::from(CENSUS_HEADER);
    out.push('\n');
    for r in records {
        let mut fields = vec![
            r.t.numer().to_string(),
            r.t.denom().to_string(),
            r.d.as_ref().map_or("?".into(), |d| d.to_string()),
        ];
        fields.extend(point_fields(&r.p1));
        fields.extend(point_fields(&r.p2));
        fields.push(r.status.to_string());
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out
}

pub fn growth_tsv(summary: &CensusSummary) -> String {
    let mut out = String::from("X\tN\treference\n");
    for row in &summary.rows {
        out.push_str(&format!("{}\t{}\t{}\n", row.x, row.n, row.reference));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, rint};
    use crate::curves::ec_scalar;

    fn e_d(a: i64, d: i64) -> CubicModel<Rational> {
        let q = RationalField;
        let e = CubicModel::short(&q, rint(-a), rint(a)).unwrap();
        quadratic_twist(&q, &e, &rint(d)).unwrap()
    }

    #[test]
    fn screen_examples() {
        let q = RationalField;
        let e = e_d(-27, -339);
        let p1 = EcPoint::Affine(rint(20376), rint(2919591));
        let p2 = EcPoint::Affine(rint(34416), rint(-6393141));
        assert_eq!(independence_screen(&e, &p1, &p2).unwrap(), TwistStatus::IndependentCandidate);
        assert_eq!(
            independence_screen(&e, &p1, &ec_neg(&q, &p1)).unwrap(),
            TwistStatus::DependentOrTorsion
        );
        let p3 = ec_scalar(&q, &e, 3, &p1).unwrap();
        assert_eq!(independence_screen(&e, &p1, &p3).unwrap(), TwistStatus::DependentOrTorsion);
        // y = 0 is 2-torsion: y^2 = x^3 - 4x has (2, 0)
        let e4 = CubicModel::short(&q, rint(-4), rint(0)).unwrap();
        let t2 = EcPoint::Affine(rint(2), rint(0));
        let other = EcPoint::Affine(rint(-2), rint(0));
        assert_eq!(independence_screen(&e4, &t2, &other).unwrap(), TwistStatus::DependentOrTorsion);
        assert_eq!(
            independence_screen(&e, &p1, &EcPoint::Affine(rint(1), rint(1))),
            Err(Error::OffCurve)
        );
    }

    #[test]
    fn pruned_screen_agrees_with_exact_search() {
        let q = RationalField;
        for r in census(&rint(-27), 4).unwrap() {
            let d = Rational::from_integer(r.d.clone().unwrap());
            let e = quadratic_twist(&q, &CubicModel::short(&q, rint(27), rint(-27)).unwrap(), &d).unwrap();
            let m1 = multiples(&q, &e, &r.p1, 12);
            let m2 = multiples(&q, &e, &r.p2, 12);
            let dependent = (1..=12).any(|n| m1[n].is_infinity() || m2[n].is_infinity())
                || (-12..=12i64).any(|a| (-12..=12i64).any(|b| (a, b) != (0, 0) && relation_holds(&q, &m1, &m2, a, b)));
            let want = if dependent { TwistStatus::DependentOrTorsion } else { TwistStatus::IndependentCandidate };
            assert_eq!(r.status, want, "d = {d}");
        }
    }

    #[test]
    fn enumeration_order() {
        let ts = rationals_of_height(2);
        let want = [
            rint(-1),
            rint(0),
            rint(1),
            rint(-2),
            rint(2),
            ratio(-1, 2),
            ratio(1, 2),
        ];
        assert_eq!(ts, want);
    }

    #[test]
    fn small_census_first_rows() {
        let recs = census(&rint(-27), 3).unwrap();
        let head: Vec<_> = recs.iter().take(5).map(|r| (r.d.clone().unwrap(), r.t.clone())).collect();
        let want = [(1, rint(-1)), (-3, rint(0)), (-15, rint(1)), (-339, rint(-2)), (-719, rint(-3))];
        for ((d, t), (wd, wt)) in head.iter().zip(want) {
            assert_eq!((d, t), (&BigInt::from(wd), &wt));
        }
        assert_eq!(recs[3].p1, EcPoint::Affine(rint(20376), rint(2919591)));
        assert_eq!(recs[4].p1, EcPoint::Affine(ratio(323701, 81), ratio(262479491, 729)));
        assert_eq!(recs[4].p2, EcPoint::Affine(rint(10101), rint(-1087029)));
        let statuses: Vec<_> = recs.iter().take(5).map(|r| r.status).collect();
        assert_eq!(
            statuses,
            [
                TwistStatus::DependentOrTorsion,
                TwistStatus::DependentOrTorsion,
                TwistStatus::DependentOrTorsion,
                TwistStatus::IndependentCandidate,
                TwistStatus::IndependentCandidate
            ]
        );
    }

    #[test]
    fn growth_examples() {
        let s = growth_table(&[], &[10, 100, 1000]).unwrap();
        assert!(s.rows.iter().all(|r| r.n == 0));
        assert_eq!(s.rows[0].reference, "0.276844");
        assert!(growth_table(&[], &[1]).is_err());
        let tsv = growth_tsv(&s);
        assert!(tsv.starts_with("X\tN\treference\n10\t0\t"));
    }
}
