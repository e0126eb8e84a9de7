use std::sync::Arc;

use macdaha::coeffdomain::{rat, Params, RatFunc, Scalar, SpecPair};
use macdaha::daha::{Daha, Gen, Involution, OpExpr};
use macdaha::{LaurentPoly, RootSystem};

fn spec(label: &str) -> Daha<SpecPair> {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let s: Vec<_> = (0..rs.num_classes()).map(|c| rat(3 + 2 * c as i64, 2)).collect();
    let p = Params::rational(&rs, rat(2, 3), &s).unwrap();
    Daha::new(rs, p)
}

fn sym(label: &str) -> Daha<RatFunc> {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let p = Params::symbolic(&rs);
    Daha::new(rs, p)
}

#[test]
fn t_on_constants_and_a1_monomial() {
    let d = sym("A1");
    let one = LaurentPoly::one(1);
    for j in 0..=1 {
        assert_eq!(d.t_hat(j, &one, false), LaurentPoly::constant(1, d.p.s[0].clone()));
    }
    let x1 = LaurentPoly::x(vec![1]);
    let expect = LaurentPoly::monomial(vec![-1], d.p.s[0].inv().unwrap());
    assert_eq!(d.t_hat(1, &x1, false), expect);
    // quadratic relation on x1
    let s = d.p.s[0].clone();
    let si = s.inv().unwrap();
    let a = d.t_hat(1, &x1, false).add(&x1.scale(&si));
    assert!(d.t_hat(1, &a, false).sub(&a.scale(&s)).is_zero());
}

#[test]
fn y_on_one_is_t_rho() {
    let d = sym("A1");
    let one = LaurentPoly::one(1);
    assert_eq!(d.y(&[1], &one), LaurentPoly::constant(1, d.p.s[0].clone()));
    let d = spec("B2");
    let n = 2;
    for b in [vec![1, 0], vec![0, 1], vec![-1, 2]] {
        let v = macdaha::laurent::monomial_value(&d.rs, &d.p, &b, 1, &[0, 0]);
        assert_eq!(d.y(&b, &LaurentPoly::one(n)), LaurentPoly::constant(n, v), "{b:?}");
    }
}

#[test]
fn defining_relations_small() {
    for (label, cap) in [("A1", 3), ("A2", 2), ("B2", 2), ("C2", 1), ("G2", 1)] {
        let d = spec(label);
        for r in d.verify_defining_relations(cap) {
            assert!(r.pass, "{label}: {} {}", r.id, r.detail);
        }
    }
}

#[test]
fn expansions_of_t0_and_pi() {
    for label in ["A1", "A2", "B2", "C3", "D4"] {
        let d = spec(label);
        let tests: Vec<_> = macdaha::daha::weight_box(d.n(), 1).into_iter().map(LaurentPoly::x).collect();
        let mut words = vec![vec![Gen::T(0)], vec![Gen::TInv(0)]];
        for k in 1..d.rs.pis.len() {
            words.push(vec![Gen::Pi(k)]);
            words.push(vec![Gen::PiInv(k)]);
        }
        for w in words {
            let e = d.expand_word(&w);
            for f in &tests {
                assert_eq!(d.apply_word(&w, f), d.apply_word(&e, f), "{label} {w:?}");
            }
        }
    }
}

#[test]
fn involution_images_of_t0() {
    let d = spec("A2");
    let theta = d.rs.theta_coroot().clone();
    let ntheta: Vec<i64> = theta.iter().map(|x| -x).collect();
    let st: Vec<Gen> = d.s_theta_word().into_iter().map(Gen::T).collect();
    let tests: Vec<_> = macdaha::daha::weight_box(2, 1).into_iter().map(LaurentPoly::x).collect();
    // epsilon(T0) = X_theta T0^{-1} Y_theta
    let eps = d.involution(Involution::Epsilon, &OpExpr::gen(Gen::T(0)));
    let rhs = OpExpr::word(vec![Gen::X(theta.clone()), Gen::TInv(0), Gen::Y(theta.clone())]);
    let mut xt = vec![Gen::X(theta.clone())];
    xt.extend(st.iter().cloned());
    for f in &tests {
        assert_eq!(d.apply(&eps, f), d.apply(&rhs, f));
        assert_eq!(d.apply(&eps, f), d.apply_word(&xt, f));
    }
    // phi(T0) = Y_theta^{-1} T0 X_theta^{-1}... as X_{-theta}-free form
    let phi = d.involution(Involution::Phi, &OpExpr::gen(Gen::T(0)));
    let rhs = OpExpr::word(vec![Gen::Y(ntheta.clone()), Gen::T(0), Gen::X(ntheta.clone())]);
    for f in &tests {
        assert_eq!(d.apply(&phi, f), d.apply(&rhs, f));
    }
}

#[test]
fn phi_pairing_symmetry() {
    let d = spec("A1");
    let words = [
        vec![Gen::X(vec![1]), Gen::T(1)],
        vec![Gen::Y(vec![-1]), Gen::X(vec![2])],
        vec![Gen::T(0), Gen::X(vec![-1])],
        vec![Gen::Pi(1), Gen::Y(vec![1]), Gen::X(vec![1])],
    ];
    for g in &words {
        for h in &words {
            let (g, h) = (OpExpr::<SpecPair>::word(g.clone()), OpExpr::word(h.clone()));
            let a = d.bracket_expr(&d.involution(Involution::Phi, &g).compose(&h));
            let b = d.bracket_expr(&d.involution(Involution::Phi, &h).compose(&g));
            assert_eq!(a, b);
        }
    }
}
