use hypercover::algebra::{rint, Rational, RationalField};
use hypercover::constructions::h_poly;
use hypercover::curves::{on_curve, quadratic_twist, CubicModel};
use hypercover::twists::{census, growth_table, is_squarefree_by_trial, TwistStatus};
use hypercover::algebra::PolyRing;
use num_bigint::BigInt;
use std::time::Instant;

#[test]
fn census_at_height_25_matches_brute_force() {
    let start = Instant::now();
    let a = rint(-27);
    let recs = census(&a, 25).unwrap();
    assert!(start.elapsed().as_secs() < 60);

    // brute-force enumeration: 401 classes, 3 of them dependent
    assert_eq!(recs.len(), 401);
    let dependent: Vec<_> = recs
        .iter()
        .filter(|r| r.status == TwistStatus::DependentOrTorsion)
        .map(|r| r.d.clone().unwrap())
        .collect();
    assert_eq!(dependent, [1, -3, -15].map(BigInt::from));
    assert_eq!(recs.iter().filter(|r| r.status == TwistStatus::IndependentCandidate).count(), 398);
    assert_eq!(recs[0].t, rint(-1));
    assert_eq!(recs[1].t, rint(0));

    let q = RationalField;
    let e = CubicModel::short(&q, -a.clone(), a.clone()).unwrap();
    let ring = PolyRing::new(q, "t");
    let h = h_poly(&ring, &a);
    for r in &recs {
        let d = r.d.clone().unwrap();
        assert!(is_squarefree_by_trial(&d));
        let dq = Rational::from_integer(d);
        let s = r.s.clone().unwrap();
        assert_eq!(ring.eval(&h, &r.t), &dq * &s * &s);
        let ed = quadratic_twist(&q, &e, &dq).unwrap();
        assert!(on_curve(&q, &ed, &r.p1) && on_curve(&q, &ed, &r.p2));
    }

    let grid = [10, 100, 1000, 10_000, 100_000, 1_000_000];
    let n: Vec<_> = growth_table(&recs, &grid).unwrap().rows.iter().map(|r| r.n).collect();
    assert_eq!(n, [0, 0, 2, 2, 2, 4]);
}
