use macdaha::coeffdomain::rat;
use macdaha::laurent::{mu_constant_term_formula, mu_product};
use macdaha::{AffineElement, Cyclo, LaurentPoly, Params, RatFunc, RootSystem, Scalar, SpecPair};
use proptest::prelude::*;

fn ratfunc(c: &[i64]) -> RatFunc {
    // c0 + c1 q0 + c2 s1 / (1 + c3 q0)
    let q = RatFunc::var(0);
    let s = RatFunc::var(1);
    let k = |n: i64| RatFunc::from_int(n);
    let num = k(c[0]).add(&k(c[1]).mul(&q)).add(&k(c[2]).mul(&s));
    let den = k(1).add(&k(c[3]).mul(&q));
    num.div(&den).unwrap()
}

fn field_axioms<S: Scalar>(a: &S, b: &S, c: &S) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.sub(a), S::zero());
    assert_eq!(a.conj().conj(), *a);
    assert_eq!(a.mul(b).conj(), a.conj().mul(&b.conj()));
    if let Some(i) = a.inv() {
        assert!(a.mul(&i).is_one());
        assert_eq!(a.inv().unwrap().conj(), a.conj().inv().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ratfunc_field(a in prop::collection::vec(-4i64..5, 4), b in prop::collection::vec(-4i64..5, 4), c in prop::collection::vec(-4i64..5, 4)) {
        field_axioms(&ratfunc(&a), &ratfunc(&b), &ratfunc(&c));
    }

    #[test]
    fn spec_field(a in (1i64..40, 1i64..40), b in (-40i64..40, 1i64..40), c in (1i64..40, 1i64..40)) {
        let g = |(n, d): (i64, i64)| SpecPair::generator(rat(n, d));
        let (x, y, z) = (g(a), SpecPair::from_rational(&rat(b.0, b.1)), g(c));
        field_axioms(&x, &y, &z.add(&x));
    }

    #[test]
    fn cyclo_field(e in prop::collection::vec(-20i64..20, 6), m in prop::sample::select(vec![5u32, 8, 12, 15])) {
        let z = |i: i64| Cyclo::zeta_pow(m, i);
        let a = z(e[0]).add(&z(e[1]));
        let b = z(e[2]).sub(&Cyclo::from_int(2));
        let c = z(e[3]).mul(&z(e[4])).add(&z(e[5]));
        field_axioms(&a, &b, &c);
        prop_assert_eq!(z(e[0]).conj(), z(-e[0]));
        prop_assert!(z(m as i64).is_one());
    }

    #[test]
    fn symbolic_specializes_to_rational(a in prop::collection::vec(-4i64..5, 4), b in prop::collection::vec(-4i64..5, 4)) {
        let (x, y) = (ratfunc(&a), ratfunc(&b));
        let pt = [rat(3, 7), rat(5, 3), rat(1, 1)];
        let ev = |f: &RatFunc| f.eval_in(&pt.iter().cloned().map(SpecPair::generator).collect::<Vec<_>>());
        if let (Some(ex), Some(ey), Some(exy)) = (ev(&x), ev(&y), ev(&x.mul(&y))) {
            prop_assert_eq!(ex.mul(&ey), exy);
        }
        if let (Some(ex), Some(ey), Some(es)) = (ev(&x), ev(&y), ev(&x.add(&y))) {
            prop_assert_eq!(ex.add(&ey), es);
        }
        if let (Some(ex), Some(ec)) = (ev(&x), ev(&x.conj())) {
            prop_assert_eq!(ex.conj(), ec);
        }
    }

    #[test]
    fn action_is_a_left_action(label in prop::sample::select(vec!["A1", "A2", "B2", "G2"]),
                               w1 in prop::collection::vec(0usize..3, 0..5),
                               w2 in prop::collection::vec(0usize..3, 0..5),
                               z in prop::collection::vec(-2i64..3, 2)) {
        let rs = RootSystem::from_label(label).unwrap();
        let n = rs.rank;
        let p = Params::symbolic(&rs);
        let word = |w: &[usize]| w.iter().fold(AffineElement::identity(n), |g, j| g.compose(&rs.affine_simple(j % (n + 1))));
        let (g, h) = (word(&w1), word(&w2));
        let f = LaurentPoly::x(z[..n].to_vec()).add(&LaurentPoly::one(n));
        prop_assert_eq!(f.act(&rs, &p, &h).act(&rs, &p, &g), f.act(&rs, &p, &g.compose(&h)));
    }
}

#[test]
fn mu_constant_terms() {
    let rs = RootSystem::from_label("A1").unwrap();
    let p = Params::symbolic(&rs);
    let mu = mu_product(&rs, &p, &[1]);
    let q = p.q0_pow(2 * rs.mhat);
    assert_eq!(mu.constant_term(), RatFunc::one().add(&q));
    for (label, ks) in [("A1", vec![vec![1], vec![2]]), ("A2", vec![vec![1]]), ("B2", vec![vec![1, 1], vec![1, 0], vec![0, 1]]), ("G2", vec![vec![1, 0]])] {
        let rs = RootSystem::from_label(label).unwrap();
        for k in ks {
            let p = Params::symbolic_at_k(&rs, &k);
            let mu = mu_product(&rs, &p, &k);
            assert_eq!(mu.constant_term(), mu_constant_term_formula(&rs, &p, &k).unwrap(), "{label} {k:?}");
            // normalized mu is star-invariant
            let mu1 = mu.scale(&mu.constant_term().inv().unwrap());
            assert_eq!(mu1.star(), mu1, "{label} {k:?}");
        }
    }
}
