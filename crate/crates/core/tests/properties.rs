use std::collections::BTreeMap;

use facpoly_core::bell::{bell_bruteforce, BellTable};
use facpoly_core::combinat::{binomial, cycle, delta, lah_signed, stirling1_signed, stirling2};
use facpoly_core::facpoly::FactorialPolynomials;
use facpoly_core::grid::{NumberGrid, TableFamily};
use facpoly_core::numfam::{power_sum_direct, power_sum_reduce, WeightScheme};
use facpoly_core::{Monomial, Poly, QSeries, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Small Laurent polynomials in X0..X4; only X0 and X1 take negative exponents.
fn poly() -> impl Strategy<Value = Poly> {
    let exps = (-2i64..=3, -2i64..=3, 0i64..=3, 0i64..=2, 0i64..=1);
    let term = (exps, -6i64..=6).prop_map(|((a, b, c, d, e), coeff)| {
        (Monomial::from_exponents(vec![a, b, c, d, e]).unwrap(), BigInt::from(coeff))
    });
    prop::collection::vec(term, 0..6).prop_map(Poly::from_terms)
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=7, any::<bool>()).prop_map(|(n, d, neg)| q(if neg { -n } else { n }, d))
}

fn assignment() -> impl Strategy<Value = BTreeMap<usize, Rational>> {
    prop::collection::vec(nonzero_rational(), 5).prop_map(|v| v.into_iter().enumerate().collect())
}

/// Invertible series: zero constant term, nonzero linear term.
fn invertible_series() -> impl Strategy<Value = QSeries> {
    (1usize..=10, nonzero_rational()).prop_flat_map(|(order, g1)| {
        prop::collection::vec((-9i64..=9, 1i64..=9), order - 1).prop_map(move |rest| {
            let mut coeffs = vec![Rational::zero(), g1.clone()];
            coeffs.extend(rest.into_iter().map(|(n, d)| q(n, d)));
            QSeries::new(coeffs).unwrap()
        })
    })
}

/// s2(n,k) from the alternating sum over surjections, independent of any recurrence.
fn stirling2_explicit(n: usize, k: usize) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j as i64) * BigInt::from(k - j).pow(n as u32);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let fact: BigInt = (1..=k).map(BigInt::from).product();
    total / fact
}

/// Coefficients of x(x-1)...(x-n+1), multiplied out by hand.
fn falling_product(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for i in 0..n {
        let mut next = vec![BigInt::zero(); c.len() + 1];
        for (d, a) in c.iter().enumerate() {
            next[d + 1] += a;
            next[d] -= a * BigInt::from(i);
        }
        c = next;
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn canonical_string_round_trip(p in poly()) {
        let text = p.to_canonical_string();
        prop_assert_eq!(text.parse::<Poly>().unwrap(), p.clone());
        prop_assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(), b in poly(), x in assignment()) {
        let ea = a.eval(&x).unwrap();
        let eb = b.eval(&x).unwrap();
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ea + &eb);
        prop_assert_eq!(a.eval_all_ones(), a.eval(&(0..5).map(|v| (v, Rational::one())).collect()).unwrap().to_integer());
    }

    #[test]
    fn compose_inverts(g in invertible_series()) {
        let h = g.invert_composition().unwrap();
        let id = QSeries::identity(g.order());
        prop_assert_eq!(g.compose(&h).unwrap(), id.clone());
        prop_assert_eq!(h.compose(&g).unwrap(), id);
    }

    #[test]
    fn stirling_matches_explicit_forms(n in 0usize..=40, k in 0usize..=40) {
        prop_assert_eq!(stirling2(n, k), stirling2_explicit(n, k));
        let coeffs = falling_product(n);
        prop_assert_eq!(stirling1_signed(n, k), coeffs.get(k).cloned().unwrap_or_default());
        prop_assert_eq!(cycle(n, k), stirling1_signed(n, k).magnitude().clone().into());
    }

    #[test]
    fn inverse_relations(n in 0usize..=40, k in 0usize..=40) {
        let st: BigInt = (k..=n).map(|j| stirling1_signed(n, j) * stirling2(j, k)).sum();
        let lah: BigInt = (k..=n).map(|j| lah_signed(n, j) * lah_signed(j, k)).sum();
        let by_stirling: BigInt = (k..=n)
            .map(|j| {
                let t = stirling1_signed(n, j) * stirling2(j, k);
                if j % 2 == 0 { t } else { -t }
            })
            .sum();
        prop_assert_eq!(st, delta(n, k));
        prop_assert_eq!(lah, delta(n, k));
        prop_assert_eq!(by_stirling, lah_signed(n, k));
    }

    #[test]
    fn reduction_matches_direct(weights in prop::collection::vec(-50i64..=50, 1..=20), n in 1usize..=20) {
        let k = weights.len();
        let scheme = WeightScheme::Custom(weights.into_iter().map(BigInt::from).collect());
        prop_assert_eq!(power_sum_reduce(&scheme, n, k).unwrap(), power_sum_direct(&scheme, n, k).unwrap());
    }

    #[test]
    fn grid_json_round_trip(which in 0usize..7, nmax in 1usize..=30, kmax in 1usize..=30) {
        let family: TableFamily = TableFamily::names()[which].parse().unwrap();
        let grid = NumberGrid::build(family, nmax, kmax).unwrap();
        prop_assert_eq!(NumberGrid::from_json(&grid.to_json()).unwrap(), grid);
    }
}

#[test]
fn family_members_round_trip_as_text() {
    let fp = FactorialPolynomials::new(8);
    let mut members = Vec::new();
    for n in 0..=8 {
        for k in 0..=n {
            members.push(fp.bell().at(n, k).clone());
            members.push(fp.lower_factorial_direct(n, k).unwrap());
            members.push(fp.upper_factorial_direct(n, k).unwrap());
        }
        for k in -3..=3 {
            members.push(fp.potential(n, k).unwrap());
        }
    }
    let a = facpoly_core::bell::a_table(8).unwrap();
    members.extend(a.entries().rows().flat_map(|r| r.iter().cloned()));
    for p in members {
        assert_eq!(p.to_canonical_string().parse::<Poly>().unwrap(), p);
    }
}

#[test]
fn shared_tables_agree_with_bruteforce() {
    let table = BellTable::new(10);
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(table.at(n, k), &bell_bruteforce(n, k).unwrap(), "B({n},{k})");
        }
    }
}
