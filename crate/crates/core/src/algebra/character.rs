use super::FiniteField;

/// Quadratic character on a finite field of odd size: `0` at zero, `+1` on
/// nonzero squares and `-1` otherwise, computed as `a^((q-1)/2)`.
pub fn quadratic_character<F: FiniteField>(field: &F, a: &F::Elem) -> i8 {
    if field.is_zero(a) {
        return 0;
    }
    let e = field.pow(a, (field.size() - 1) / 2);
    if field.is_one(&e) {
        1
    } else {
        debug_assert_eq!(e, field.neg(&field.one()));
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ExtField, PrimeField};

    #[test]
    fn f7_values() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(quadratic_character(&f, &2), 1);
        assert_eq!(quadratic_character(&f, &3), -1);
        assert_eq!(quadratic_character(&f, &0), 0);
        let squares: Vec<u64> = (1..7).filter(|a| quadratic_character(&f, a) == 1).collect();
        assert_eq!(squares, vec![1, 2, 4]);
    }

    fn check_field<F: FiniteField>(f: &F) {
        let elems: Vec<_> = f.elements().collect();
        let total: i64 = elems.iter().map(|a| quadratic_character(f, a) as i64).sum();
        assert_eq!(total, 0);
        for a in elems.iter().filter(|a| !f.is_zero(a)) {
            for b in elems.iter().filter(|b| !f.is_zero(b)) {
                assert_eq!(
                    quadratic_character(f, &f.mul(a, b)),
                    quadratic_character(f, a) * quadratic_character(f, b)
                );
            }
        }
    }

    #[test]
    fn multiplicative_and_balanced() {
        for p in [5, 7, 11, 13, 101] {
            check_field(&PrimeField::new(p).unwrap());
        }
        for (p, k) in [(5, 2), (7, 2), (11, 2), (5, 3)] {
            check_field(&ExtField::new(p, k, 0).unwrap());
        }
    }
}
