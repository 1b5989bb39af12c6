use super::report::VerificationReport;
use crate::algebra::{Field, PolyRing, PrimeField, Rational, RationalField, Ring};
use crate::constructions::{covering_maps, f_xz, h_poly, parametrize, Covering, FfElem};
use crate::constructions::build_family;
use crate::curves::{ec_neg, on_curve, EcPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Value of `a + b w` at `(t, w)`, if `t` is not a pole.
fn eval_ff<F: Field>(cov: &Covering<F>, f: &FfElem<F::Elem>, t: &F::Elem, w: &F::Elem) -> Option<F::Elem> {
    let kt = cov.ff.base();
    let k = kt.base();
    Some(k.add(&kt.eval(&f.a, t)?, &k.mul(&kt.eval(&f.b, t)?, w)))
}

/// Images of `(t, w)` under `f1` and `f2`, when both are affine.
pub fn images_at<F: Field>(
    cov: &Covering<F>,
    t: &F::Elem,
    w: &F::Elem,
) -> Option<(EcPoint<F::Elem>, EcPoint<F::Elem>)> {
    let pt = |m: &crate::constructions::CoveringMap<F::Elem>| {
        Some(EcPoint::Affine(eval_ff(cov, &m.e_x, t, w)?, eval_ff(cov, &m.e_y, t, w)?))
    };
    Some((pt(&cov.f1)?, pt(&cov.f2)?))
}

/// The premises of the degree argument: `F` is monic of degree 3 in `z`,
/// `f1 != f2` and `f1 != -f2`. The last two are exhibited over `F_p`.
pub fn verify_independence(a: &Rational, p: u64) -> Vec<VerificationReport> {
    let mut out = vec![];

    let qx = PolyRing::new(RationalField, "x");
    let rz = PolyRing::new(qx.clone(), "z");
    let f = f_xz(&rz, &rz.constant(qx.var()), &rz.var());
    let ok = f.degree() == Some(3) && f.leading() == Some(&qx.one());
    out.push(VerificationReport::expect("independence-degree", ok, || rz.format(&f)));

    let check = "independence-f1-ne-f2";
    match parametrize(&Rational::from_integer(2.into())) {
        Ok((x, z)) if x != z => out.push(VerificationReport::pass_with(check, format!("t = 2: x = {x}, z = {z}"))),
        Ok((x, _)) => out.push(VerificationReport::fail(check, format!("t = 2: x = z = {x}"))),
        Err(e) => out.push(VerificationReport::fail(check, e.to_string())),
    }

    out.push(independence_witness(a, p));
    out
}

fn independence_witness(a: &Rational, p: u64) -> VerificationReport {
    let check = format!("independence-f1-ne-minus-f2-F{p}");
    let fp = match PrimeField::new(p) {
        Ok(f) => f,
        Err(e) => return VerificationReport::fail(check, e.to_string()),
    };
    let Some(ap) = fp.reduce(a) else {
        return VerificationReport::fail(check, "A does not reduce");
    };
    let cov = match covering_maps(&fp, &ap) {
        Ok(c) => c,
        Err(e) => return VerificationReport::fail(check, e.to_string()),
    };
    let h = h_poly(&PolyRing::new(fp, "t"), &ap);
    let ring = PolyRing::new(fp, "t");
    for t in 0..p {
        let ht = ring.eval(&h, &t);
        if ht == 0 {
            continue;
        }
        let Some(w) = fp.sqrt(ht) else { continue };
        let Some((p1, p2)) = images_at(&cov, &t, &w) else { continue };
        if p1 != ec_neg(&fp, &p2) && p1 != p2 {
            return VerificationReport::pass_with(
                check,
                format!("(t, w) = ({t}, {w}): P1 = {}, P2 = {}", fmt_pt(&p1), fmt_pt(&p2)),
            );
        }
    }
    VerificationReport::fail(check, format!("no point over F_{p} separates f1 from -f2"))
}

fn fmt_pt(p: &EcPoint<u64>) -> String {
    match p {
        EcPoint::Infinity => "O".into(),
        EcPoint::Affine(x, y) => format!("({x}, {y})"),
    }
}

/// Pointwise form of the covering identities: every affine point of `H`
/// over `F_p` whose images are defined lands on `E`. Returns the number of
/// points checked.
pub fn check_maps_pointwise(a: u64, p: u64) -> Result<usize, String> {
    let fp = PrimeField::new(p).map_err(|e| e.to_string())?;
    let cov = covering_maps(&fp, &a).map_err(|e| e.to_string())?;
    let ring = PolyRing::new(fp, "t");
    let h = h_poly(&ring, &a);
    let mut n = 0;
    for t in 0..p {
        let ht = ring.eval(&h, &t);
        let Some(w) = fp.sqrt(ht) else { continue };
        for w in [w, fp.neg(&w)] {
            if let Some((p1, p2)) = images_at(&cov, &t, &w) {
                if !on_curve(&fp, &cov.e, &p1) || !on_curve(&fp, &cov.e, &p2) {
                    return Err(format!("(t, w) = ({t}, {w})"));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

const SPECIALIZATION_PRIMES: [u64; 23] = [
    7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
];

/// [`check_maps_pointwise`] at `count` random good pairs `(A, p)` with
/// `p <= 101`, drawn from a ChaCha stream seeded with `seed`.
pub fn verify_specializations(seed: u64, count: usize) -> VerificationReport {
    let check = format!("specializations-{count}-seed{seed}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut points = 0;
    while done < count {
        let p = SPECIALIZATION_PRIMES[rng.gen_range(0..SPECIALIZATION_PRIMES.len())];
        let a = rng.gen_range(1..p);
        let fp = PrimeField::new(p).expect("prime");
        if build_family(&fp, &a).is_err() {
            continue;
        }
        match check_maps_pointwise(a, p) {
            Ok(n) => points += n,
            Err(w) => return VerificationReport::fail(check, format!("A = {a}, p = {p}: {w}")),
        }
        done += 1;
    }
    VerificationReport::pass_with(check, format!("{points} points"))
}
