use charclass::chow::{
    class_dual, class_tensor, pullback, pushforward, Ambient, ChowClass, LineBundleClass,
};
use charclass::milnor::{milnor_at, milnor_at_level};
use charclass::poly::{parse_poly, translate_to_origin, Poly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), rational()), 0..6)
        .prop_map(|terms| Poly::from_terms(&VARS, terms))
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 3)
}

fn ambient() -> impl Strategy<Value = Ambient> {
    prop_oneof![
        (1usize..=5).prop_map(|n| Ambient::projective(n).unwrap()),
        (2usize..=5, 1usize..=3).prop_map(|(n, m)| Ambient::blowup(n, m).unwrap()),
    ]
}

/// Class with integer coefficients on every basis element of `amb`.
fn class_on(amb: Ambient) -> impl Strategy<Value = ChowClass> {
    let n = amb.dim();
    let m = amb.points();
    (prop::collection::vec(-6i64..=6, n + 1), prop::collection::vec(-6i64..=6, n * m)).prop_map(move |(hs, es)| {
        let mut c = ChowClass::from_h_coeffs(amb, &hs);
        for (idx, a) in es.into_iter().enumerate() {
            let e = ChowClass::e_pow(amb, idx / n, idx % n + 1).unwrap();
            c = &c + &e.scale(&q(a));
        }
        c
    })
}

fn divisor_on(amb: Ambient) -> impl Strategy<Value = ChowClass> {
    (-4i64..=4, prop::collection::vec(-3i64..=3, amb.points())).prop_map(move |(a, es)| {
        let mut c = ChowClass::hyperplane_multiple(amb, a);
        for (i, b) in es.into_iter().enumerate() {
            c = &c + &ChowClass::e_pow(amb, i, 1).unwrap().scale(&q(b));
        }
        c
    })
}

fn blowup() -> impl Strategy<Value = Ambient> {
    (2usize..=5, 1usize..=3).prop_map(|(n, m)| Ambient::blowup(n, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn poly_print_parse_roundtrip(a in poly()) {
        let back = parse_poly(&a.to_string(), &VARS).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn gradient_is_linear(a in poly(), b in poly(), s in rational()) {
        let combo = &a.scale(&s) + &b;
        let lhs = combo.gradient();
        let rhs: Vec<Poly> = a.gradient().iter().zip(b.gradient()).map(|(da, db)| &da.scale(&s) + &db).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translation_inverts(a in poly(), p in point()) {
        let moved = translate_to_origin(&a, &p).unwrap();
        let minus: Vec<Rational> = p.iter().map(|x| -x).collect();
        prop_assert_eq!(translate_to_origin(&moved, &minus).unwrap(), a.clone());
        prop_assert_eq!(moved.eval(&[q(0), q(0), q(0)]).unwrap(), a.eval(&p).unwrap());
    }

    #[test]
    fn chow_ring_axioms((a, b, c) in ambient().prop_flat_map(|amb| (class_on(amb), class_on(amb), class_on(amb)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &ChowClass::one(a.ambient()), a);
    }

    #[test]
    fn projection_formula((a, x) in blowup().prop_flat_map(|amb| (class_on(amb), class_on(amb.base())))) {
        let lhs = pushforward(&(&a * &pullback(&x, a.ambient()).unwrap())).unwrap();
        prop_assert_eq!(lhs, &pushforward(&a).unwrap() * &x);
        prop_assert_eq!(pushforward(&a).unwrap().degree(), a.degree());
    }

    #[test]
    fn dual_is_involutive_ring_map((a, b) in ambient().prop_flat_map(|amb| (class_on(amb), class_on(amb)))) {
        prop_assert_eq!(class_dual(&class_dual(&a)), a.clone());
        prop_assert_eq!(class_dual(&(&a * &b)), &class_dual(&a) * &class_dual(&b));
    }

    #[test]
    fn tensor_composes(
        (a, l, m) in ambient().prop_flat_map(|amb| (class_on(amb), divisor_on(amb), divisor_on(amb)))
    ) {
        let lb = LineBundleClass::new(l.clone()).unwrap();
        let mb = LineBundleClass::new(m.clone()).unwrap();
        let both = LineBundleClass::new(&l + &m).unwrap();
        prop_assert_eq!(class_tensor(&class_tensor(&a, &lb).unwrap(), &mb).unwrap(), class_tensor(&a, &both).unwrap());
        let zero = LineBundleClass::new(ChowClass::zero(a.ambient())).unwrap();
        prop_assert_eq!(class_tensor(&a, &zero).unwrap(), a);
    }
}

/// Random unimodular 2x2 and 3x3 matrices as products of elementary moves.
fn unimodular(k: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec((0..k, 0..k, -2i64..=2), 1..6).prop_map(move |moves| {
        let mut m: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c) in moves {
            if i == j {
                m.swap(i, (i + 1) % k);
            } else {
                for col in 0..k {
                    m[i][col] += c * m[j][col];
                }
            }
        }
        m.into_iter().map(|row| row.into_iter().map(q).collect()).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn milnor_invariant_under_coordinate_change(k in 1u32..=6, mat in unimodular(2)) {
        let f = parse_poly(&format!("x^2 + y^{}", k + 1), &["x", "y"]).unwrap();
        let g = f.linear_substitute(&mat).unwrap();
        let r = milnor_at(&g, 32).unwrap();
        prop_assert!(r.certified);
        prop_assert_eq!(r.mu, u64::from(k));
    }

    #[test]
    fn milnor_d_series_invariant(k in 4u32..=6, mat in unimodular(3)) {
        // D_k: x^2*y + y^(k-1), plus z^2 to stay in three variables
        let f = parse_poly(&format!("x^2*y + y^{} + z^2", k - 1), &VARS).unwrap();
        let g = f.linear_substitute(&mat).unwrap();
        prop_assert_eq!(milnor_at(&g, 32).unwrap().mu, u64::from(k));
    }

    #[test]
    fn milnor_stable_after_certificate(k in 1u32..=6, mat in unimodular(2)) {
        let f = parse_poly(&format!("x^2 + y^{}", k + 1), &["x", "y"]).unwrap();
        let g = f.linear_substitute(&mat).unwrap();
        let r = milnor_at(&g, 32).unwrap();
        for extra in 1..=2 {
            let again = milnor_at_level(&g, r.cutoff + extra).unwrap();
            prop_assert!(again.certified);
            prop_assert_eq!(again.mu, r.mu);
        }
    }
}

#[test]
fn zero_polynomial_prints_and_parses() {
    let z = Poly::zero(&VARS);
    assert!(z.is_zero());
    assert_eq!(parse_poly(&z.to_string(), &VARS).unwrap(), z);
    assert!(Rational::zero().is_zero());
}
