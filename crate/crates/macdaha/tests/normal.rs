use std::sync::Arc;

use macdaha::coeffdomain::{rat, Params, Scalar, SpecPair};
use macdaha::daha::{weight_box, Daha, Gen};
use macdaha::laurent::monomial_symmetric;
use macdaha::normal::{NormalOperator, RatX};
use macdaha::{LaurentPoly, RootSystem};

fn spec(label: &str) -> Daha<SpecPair> {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let s: Vec<_> = (0..rs.num_classes()).map(|c| rat(3 + 2 * c as i64, 2)).collect();
    let p = Params::rational(&rs, rat(2, 3), &s).unwrap();
    Daha::new(rs, p)
}

#[test]
fn normal_form_agrees_with_direct_action() {
    for label in ["A1", "A2", "B2"] {
        let d = spec(label);
        let n = d.n();
        let words = vec![
            vec![Gen::T(0)],
            vec![Gen::TInv(1), Gen::X(d.rs.unit(0))],
            vec![Gen::Y(d.rs.unit(0))],
            vec![Gen::Y(d.rs.unit(n - 1).iter().map(|x| -x).collect()), Gen::T(0)],
        ];
        for w in words {
            let op = NormalOperator::from_word(&d, &w).unwrap();
            for z in weight_box(n, 1) {
                let f = LaurentPoly::x(z);
                let direct = RatX::poly(d.apply_word(&w, &f));
                assert!(op.apply(&d.rs, &d.p, &f).equals(&direct, &d.rs, &d.p), "{label} {w:?}");
            }
        }
    }
}

// [L_{m_b}]_dagger = sum_{w in W/W_b} prod_{a>0, 0<=j<-(b,a)} (t_a^{1/2} X_{w a} q_a^j - t_a^{-1/2})/(X_{w a} q_a^j - 1) w(b)
#[test]
fn symmetric_operator_leading_coefficients() {
    for (label, b) in [("A1", vec![-1]), ("A2", vec![-1, 0]), ("B2", vec![-1, 0])] {
        let d = spec(label);
        let rs = &*d.rs;
        let n = d.n();
        let m: LaurentPoly<SpecPair> = monomial_symmetric(rs, &b).unwrap();
        let dag = NormalOperator::from_y_poly(&d, &m).unwrap().dagger(rs, &d.p);
        assert_eq!(dag.len(), rs.orbit(&b).len(), "{label}");
        for c in rs.orbit(&b) {
            let w = rs.weyl_group().unwrap().into_iter().find(|w| w.apply(&b) == c).unwrap();
            let mut expect = RatX::poly(LaurentPoly::one(n));
            for r in rs.positive_roots() {
                if rs.pair(&b, &r.coroot) == 0.into() && rs.root_pair(&b, rs.root_of_coroot(&r.coroot).unwrap()) == 0 {
                    continue;
                }
                let k = -rs.root_pair(&b, rs.root_of_coroot(&r.coroot).unwrap());
                assert!(k == 0 || k == 1);
                if k == 0 {
                    continue;
                }
                let s = d.p.s[r.class].clone();
                let wa = w.apply(&r.coroot);
                let num = LaurentPoly::from_terms([(wa.clone(), s.clone()), (vec![0; n], s.inv().unwrap().neg())]);
                expect = expect.mul(&RatX::inv_binomial(rs, &d.p, &wa, 0).unwrap().mul_poly(&num));
            }
            assert!(dag[&c].equals(&expect, rs, &d.p), "{label} {c:?}");
        }
    }
}

#[test]
fn harish_chandra_a1() {
    let d = spec("A1");
    let m: LaurentPoly<SpecPair> = monomial_symmetric(&d.rs, &[-1]).unwrap();
    let chi = NormalOperator::from_y_poly(&d, &m).unwrap().harish_chandra(&d.rs).unwrap();
    let s = d.p.s[0].clone();
    let expect = LaurentPoly::from_terms([(vec![1], s.clone()), (vec![-1], s.inv().unwrap())]);
    assert_eq!(chi, expect);
}

#[test]
fn bracket_matches_evaluation() {
    let d = spec("B2");
    let w = vec![Gen::X(vec![1, 0]), Gen::T(0), Gen::Y(vec![0, -1])];
    let op = NormalOperator::from_word(&d, &w).unwrap();
    let direct = d.bracket_expr(&macdaha::daha::OpExpr::word(w));
    assert_eq!(op.bracket(&d.rs, &d.p).unwrap(), direct);
}

#[test]
fn pointwise_coefficients_match_symbolic() {
    use macdaha::normal::{dagger_y_poly_at, Point};
    for (label, b) in [("A2", vec![-1, 0]), ("B2", vec![-1, 0])] {
        let d = spec(label);
        let rs = &*d.rs;
        let m: LaurentPoly<SpecPair> = monomial_symmetric(rs, &b).unwrap();
        let dag = NormalOperator::from_y_poly(&d, &m).unwrap().dagger(rs, &d.p);
        for c in [vec![0, 0], vec![-1, 0], vec![-1, -2]] {
            let pt = Point::t_rho_q(rs, &d.p, -1, &c);
            let vals = dagger_y_poly_at(&d, &m, &pt).unwrap();
            assert!(vals.keys().all(|e| dag.contains_key(e)));
            for (e, h) in &dag {
                assert_eq!(vals.get(e).cloned().unwrap_or_else(SpecPair::zero), h.eval_at(rs, &d.p, -1, &c).unwrap(), "{label} {e:?}");
            }
        }
    }
}
