use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use gr_elementary::exact::{
    binomial, double_factorial, eulerian_explicit, eulerian_recurrence, factorial, harmonic, p_poly,
    q_poly, EulerianTable, ExactPoly, Rational,
};

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn binomial_values() {
    assert_eq!(binomial(0, 0), BigInt::one());
    assert_eq!(binomial(4, 2), BigInt::from(6));
    assert_eq!(binomial(6, 3), BigInt::from(20));
    assert!(binomial(4, -1).is_zero());
    assert!(binomial(4, 5).is_zero());
}

#[test]
fn double_factorial_values() {
    assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
    assert_eq!(double_factorial(0).unwrap(), BigInt::one());
    assert_eq!(double_factorial(7).unwrap(), BigInt::from(105));
    assert!(double_factorial(-2).is_err());
}

#[test]
fn harmonic_values() {
    assert_eq!(harmonic(1).unwrap(), ratio(1, 1));
    assert_eq!(harmonic(2).unwrap(), ratio(3, 2));
    assert_eq!(harmonic(4).unwrap(), ratio(25, 12));
    assert!(harmonic(0).is_err());
}

#[test]
fn eulerian_rows() {
    assert_eq!(eulerian_recurrence(1).unwrap(), big(&[1]));
    assert_eq!(eulerian_recurrence(3).unwrap(), big(&[1, 4, 1]));
    assert_eq!(eulerian_recurrence(4).unwrap(), big(&[1, 11, 11, 1]));
    assert_eq!(eulerian_explicit(0, 1).unwrap(), BigInt::one());
    assert_eq!(eulerian_explicit(1, 3).unwrap(), BigInt::from(4));
    assert_eq!(eulerian_explicit(2, 4).unwrap(), BigInt::from(11));
    assert!(eulerian_explicit(4, 4).is_err());
}

#[test]
fn eulerian_table_invariants() {
    let t = EulerianTable::build(12).unwrap();
    assert_eq!(t.n_rows(), 12);
    for n in 1..=12usize {
        let row = t.row(n).unwrap();
        assert_eq!(row.len(), n);
        assert!(row[0].is_one() && row[n - 1].is_one());
        assert_eq!(row.iter().sum::<BigInt>(), factorial(n as u64));
        assert!(row.iter().eq(row.iter().rev()));
        assert_eq!(row, eulerian_recurrence(n as u32).unwrap().as_slice());
        for j in 0..n {
            assert_eq!(&eulerian_explicit(j as u32, n as u32).unwrap(), t.get(j, n).unwrap());
        }
    }
}

#[test]
fn p_and_q_examples() {
    assert_eq!(p_poly(1).unwrap().coeffs(), big(&[1]).as_slice());
    assert_eq!(p_poly(3).unwrap().coeffs(), big(&[1, -4, 1]).as_slice());
    assert_eq!(p_poly(4).unwrap().coeffs(), big(&[-1, 11, -11, 1]).as_slice());
    assert_eq!(q_poly(2).unwrap().coeffs(), big(&[1, 1]).as_slice());
    assert_eq!(q_poly(4).unwrap().coeffs(), big(&[1, 11, 11, 1]).as_slice());
    assert_eq!(q_poly(5).unwrap().coeffs(), eulerian_recurrence(5).unwrap().as_slice());
    for n in 1..=12 {
        assert_eq!(p_poly(n).unwrap().degree(), Some(n as usize - 1));
    }
}

#[test]
fn q_sign_relation() {
    for n in 1..=12 {
        let reflected = p_poly(n).unwrap().reflect();
        let expected = if n % 2 == 1 { reflected } else { -&reflected };
        assert_eq!(q_poly(n).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn q_at_one_is_factorial() {
    for n in 1..=12 {
        assert_eq!(q_poly(n).unwrap().eval_int(&BigInt::one()), factorial(u64::from(n)));
    }
}

#[test]
fn q_recurrence() {
    // Q_{n+1} = (n u + 1) Q_n + u (1 - u) Q_n'
    let u_one_minus_u = ExactPoly::from_i64(&[0, 1, -1]);
    for n in 1..12u32 {
        let q = q_poly(n).unwrap();
        let factor = ExactPoly::from_i64(&[1, i64::from(n)]);
        let rhs = &(&factor * &q) + &(&u_one_minus_u * &q.derivative());
        assert_eq!(q_poly(n + 1).unwrap(), rhs, "n = {n}");
    }
}

#[test]
fn exact_rational_evaluation() {
    let q = q_poly(3).unwrap();
    assert_eq!(q.eval_rational(&ratio(1, 2)), ratio(13, 4));
    assert!(ExactPoly::new(big(&[1, 2, 0, 0])).degree() == Some(1));
    assert!(ExactPoly::zero().is_zero());
}

proptest! {
    #[test]
    fn alternating_binomial_annihilation(
        (n, coeffs) in (1u32..=10).prop_flat_map(|n| (Just(n), proptest::collection::vec(-10_000i64..=10_000, n as usize)))
    ) {
        let q = ExactPoly::from_i64(&coeffs);
        let mut sum = BigInt::zero();
        for k in 0..=n {
            let term = binomial(u64::from(n), i64::from(k)) * q.eval_int(&BigInt::from(k));
            if k % 2 == 0 { sum += term } else { sum -= term }
        }
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn rationals_stay_reduced(n in -1000i64..1000, d in 1i64..1000) {
        let r = ratio(n, d) + harmonic(3).unwrap();
        let rebuilt = Rational::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(rebuilt.numer(), r.numer());
        prop_assert!(r.denom() > &BigInt::zero());
    }
}
