use std::sync::Arc;

use macdaha::coeffdomain::{rat, Params, RatFunc, Scalar, SpecPair};
use macdaha::daha::Daha;
use macdaha::laurent::monomial_symmetric;
use macdaha::macdonald::*;
use macdaha::{LaurentPoly, RootSystem};

fn sym_table(label: &str) -> MacdonaldTable<RatFunc> {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let p = Params::symbolic(&rs);
    MacdonaldTable::new(Daha::new(rs, p))
}

fn spec_table(label: &str) -> MacdonaldTable<SpecPair> {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let s: Vec<_> = (0..rs.num_classes()).map(|c| rat(5 + 2 * c as i64, 3)).collect();
    let p = Params::rational(&rs, rat(3, 7), &s).unwrap();
    MacdonaldTable::new(Daha::new(rs, p))
}

fn k_table(label: &str, k: &[i64]) -> MacdonaldTable<RatFunc> {
    let rs = Arc::new(RootSystem::from_label(label).unwrap());
    let p = Params::symbolic_at_k(&rs, k);
    MacdonaldTable::new(Daha::new(rs, p))
}

#[test]
fn a1_second_polynomial() {
    let mut tb = sym_table("A1");
    let p = tb.poly(&[-2]).unwrap();
    // q = q0^4, t = s^2
    let q = tb.d.p.q0_pow(4);
    let t = tb.d.p.s_pow(0, 2);
    let one = RatFunc::one();
    let c = one.add(&q).mul(&one.sub(&t)).div(&one.sub(&q.mul(&t))).unwrap();
    let m2: LaurentPoly<RatFunc> = monomial_symmetric(tb.rs(), &[-2]).unwrap();
    assert_eq!(p, m2.add(&LaurentPoly::constant(1, c)));
    assert_eq!(tb.poly(&[0]).unwrap(), LaurentPoly::one(1));
}

#[test]
fn evaluation_formula_matches_direct() {
    for (label, bs) in [("A1", vec![vec![-1], vec![-2], vec![-3]]), ("A2", vec![vec![-1, 0], vec![-1, -1], vec![0, -2]]), ("B2", vec![vec![-1, 0], vec![0, -1], vec![-1, -1]]), ("G2", vec![vec![-1, 0], vec![0, -1]])] {
        let mut tb = sym_table(label);
        for b in bs {
            let f = evaluation_formula(tb.rs(), &tb.d.p, &b).unwrap();
            assert_eq!(tb.principal_value(&b).unwrap(), f, "{label} {b:?}");
        }
    }
}

#[test]
fn evaluation_at_t_equal_q() {
    for (label, bs) in [("A1", vec![vec![-1], vec![-3]]), ("A2", vec![vec![-1, -1], vec![0, -2]]), ("B2", vec![vec![-1, 0], vec![-1, -1]]), ("G2", vec![vec![-1, 0]])] {
        let rs = RootSystem::from_label(label).unwrap();
        let k = vec![1; rs.num_classes()];
        let mut tb = k_table(label, &k);
        for b in bs {
            let direct = tb.principal_value(&b).unwrap();
            assert_eq!(direct, evaluation_formula(tb.rs(), &tb.d.p, &b).unwrap(), "{label} {b:?}");
            assert_eq!(direct, evaluation_at_k(tb.rs(), &tb.d.p, &b, &k).unwrap(), "{label} {b:?} k-form");
            assert_eq!(direct, weyl_character_value(tb.rs(), &tb.d.p, &b).unwrap(), "{label} {b:?} Weyl");
        }
    }
}

#[test]
fn duality_spec() {
    let mut tb = spec_table("B2");
    let _ = tb.poly(&[-1, -1]).unwrap();
}

fn assert_cert(c: macdaha::certificate::Certificate) {
    assert!(c.verdict, "{}", serde_json::to_string_pretty(&c).unwrap());
}

#[test]
fn duality_small() {
    let mut tb = sym_table("A1");
    assert_cert(tb.duality_pair(&[-1], &[-2]).unwrap());
    let mut tb = sym_table("B2");
    assert_cert(tb.duality_pair(&[-1, 0], &[0, -1]).unwrap());
}

#[test]
fn norms_at_k() {
    for (label, k, bs) in [("A1", vec![1], vec![vec![-1], vec![-2]]), ("A1", vec![2], vec![vec![-2]]), ("A2", vec![1], vec![vec![-1, -1]]), ("B2", vec![1, 1], vec![vec![-1, 0], vec![0, -1]])] {
        let mut tb = k_table(label, &k);
        for b in bs {
            assert_cert(tb.norm_check(&b, &k).unwrap());
            assert_cert(tb.orthogonality_check(&b, &k).unwrap());
        }
    }
}

#[test]
fn pieri_two_routes() {
    let mut tb = spec_table("A1");
    for n in 0..3 {
        assert_cert(tb.pieri(&[-1], &[-n]).unwrap());
    }
    let r = tb.pieri_recurrence(&[-1], &[0]).unwrap();
    let s = tb.d.p.s[0].clone();
    assert_eq!(r.len(), 1);
    assert_eq!(r[&vec![-1]], s.add(&s.inv().unwrap()));
    let mut tb = spec_table("A2");
    assert_cert(tb.pieri(&[-1, 0], &[0, -1]).unwrap());
    let mut tb = spec_table("B2");
    assert_cert(tb.pieri(&[0, -1], &[-1, 0]).unwrap());
}

#[test]
fn fmg_chain() {
    let mut tb = k_table("A1", &[1]);
    assert_cert(tb.fmg_check_at_k(&[-1], &[-1], &[1]).unwrap());
    assert_cert(tb.fmg_check_at_k(&[-2], &[-2], &[1]).unwrap());
    assert_cert(tb.fmg_check_at_k(&[-2], &[0], &[1]).unwrap());
    let mut tb = k_table("A2", &[1]);
    assert_cert(tb.fmg_check_at_k(&[-1, -1], &[-1, -1], &[1]).unwrap());
    assert_cert(tb.fmg_check_at_k(&[-1, -1], &[0, 0], &[1]).unwrap());
}

#[test]
fn real_and_commuting() {
    let mut tb = sym_table("B2");
    assert_cert(tb.real_check(&[-1, -1]).unwrap());
    assert_cert(tb.commutativity_check(&[-1, -1]).unwrap());
}

#[test]
fn shift_operators() {
    let mut tb = sym_table("A1");
    let mut sh = tb.shifted_table(&[0]);
    for b in [vec![-1], vec![-2], vec![-3]] {
        assert_cert(tb.shift_check(&[0], &b, &mut sh).unwrap());
        assert_cert(tb.key_lemma_check(&[0], &b, &mut sh).unwrap());
    }
    assert_cert(tb.shift_check(&[0], &[0], &mut sh).unwrap());
    assert!(tb.key_lemma_check(&[0], &[0], &mut sh).is_err());
    // G_v m_{-r_v} = g_v(-r_v)
    let m = monomial_symmetric(tb.rs(), &[-1]).unwrap();
    let g = tb.shift_eigen(&[0], &[-1]).unwrap();
    assert_eq!(tb.shift_apply(&[0], &m).unwrap(), LaurentPoly::constant(1, g));

    let mut tb = spec_table("B2");
    let mut sh = tb.shifted_table(&[0, 1]);
    for b in [vec![-1, 0], vec![0, -1], vec![-1, -1]] {
        assert_cert(tb.shift_check(&[0, 1], &b, &mut sh).unwrap());
    }
    assert_cert(tb.key_lemma_check(&[0, 1], &[-1, -1], &mut sh).unwrap());
    assert_cert(tb.key_lemma_check(&[0, 1], &[-2, -1], &mut sh).unwrap());
    // one class only, with t = 1 on the other
    let rs = Arc::new(RootSystem::from_label("B2").unwrap());
    for v in [0usize, 1] {
        let s: Vec<_> = (0..2).map(|c| if c == v { rat(5, 3) } else { rat(1, 1) }).collect();
        let mut tb = MacdonaldTable::new(Daha::new(rs.clone(), Params::rational(&rs, rat(3, 7), &s).unwrap()));
        let mut sh = tb.shifted_table(&[v]);
        for b in [vec![-1, 0], vec![0, -1], vec![-1, -1]] {
            assert_cert(tb.shift_check(&[v], &b, &mut sh).unwrap());
            let target: Vec<i64> = b.iter().zip(tb.r_v(&[v])).map(|(x, y)| x + y).collect();
            if tb.rs().is_antidominant(&target) {
                assert_cert(tb.key_lemma_check(&[v], &b, &mut sh).unwrap());
            }
        }
    }
}

#[test]
fn gaussian_twist() {
    use macdaha::daha::Gen;
    use macdaha::normal::NormalOperator;
    let tb = spec_table("A1");
    let (rs, p) = (tb.d.rs.clone(), tb.d.p.clone());
    // multiplication operators are unchanged
    let x = NormalOperator::from_gen(&tb.d, &Gen::X(vec![3])).unwrap();
    let cx = gaussian_conjugate(&rs, &p, &x, false).unwrap();
    assert_eq!(cx.apply(&rs, &p, &LaurentPoly::x(vec![1])), x.apply(&rs, &p, &LaurentPoly::x(vec![1])));
    // translation by -b1 picks up x1 q^{1/4}
    let tr = NormalOperator::single(macdaha::AffineElement::translation(vec![-1]), macdaha::normal::RatX::poly(LaurentPoly::one(1)));
    let ct = gaussian_conjugate(&rs, &p, &tr, false).unwrap();
    let (_, h) = ct.terms.values().next().unwrap();
    assert_eq!(h.num, LaurentPoly::monomial(vec![1], p.q_power(1, 4).unwrap()));
    // tau_+ on Y through generators agrees with the cocycle on the normal form
    for w in [vec![Gen::Y(vec![1])], vec![Gen::Y(vec![-2])], vec![Gen::T(0), Gen::Y(vec![1])]] {
        let tw = tb.d.tau_plus_word(&w).unwrap();
        let nf = gaussian_conjugate(&rs, &p, &NormalOperator::from_word(&tb.d, &w).unwrap(), true).unwrap();
        for z in [vec![0], vec![1], vec![-2]] {
            let f = LaurentPoly::x(z);
            let direct = macdaha::normal::RatX::poly(tb.d.apply_word(&tw, &f));
            assert!(nf.apply(&rs, &p, &f).equals(&direct, &rs, &p), "{w:?}");
        }
    }
    let mut tb = spec_table("A1");
    for b in [vec![-1], vec![-2]] {
        assert_cert(tb.gaussian_eigen_check(&b, 2, 7).unwrap());
    }
    let mut tb = spec_table("A2");
    assert_cert(tb.gaussian_eigen_check(&[-1, 0], 2, 7).unwrap());
    assert_cert(tb.gaussian_eigen_check(&[-1, -1], 1, 7).unwrap());
    let mut tb = spec_table("B2");
    assert_cert(tb.gaussian_eigen_check(&[0, -1], 1, 7).unwrap());
}

#[test]
fn gaussian_twisted_operators_are_phi_self_adjoint() {
    use macdaha::daha::Gen;
    use macdaha::laurent::monomial_symmetric;
    for (label, fs) in [("A1", vec![vec![-1], vec![-2]]), ("A2", vec![vec![-1, 0], vec![0, -1], vec![-1, -1], vec![-2, 0]])] {
        let tb = spec_table(label);
        let n = tb.d.n();
        let mut tests: Vec<LaurentPoly<_>> = macdaha::daha::weight_box(n, 1).into_iter().map(LaurentPoly::x).collect();
        tests.push(monomial_symmetric(&tb.d.rs, &vec![-1; n]).unwrap());
        for b in fs {
            let f = monomial_symmetric(&tb.d.rs, &b).unwrap();
            assert_cert(tb.d.gaussian_self_adjoint_check(&f, &tests).unwrap());
        }
        // tau_+^{-1} undoes tau_+
        for w in [vec![Gen::T(0)], vec![Gen::Y(vec![1; n])], vec![Gen::TInv(0), Gen::Pi(1)]] {
            let there = tb.d.tau_plus_word(&w).unwrap();
            let back = tb.d.tau_plus_inv_word(&there).unwrap();
            for g in &tests[..3] {
                assert_eq!(tb.d.apply_word(&back, g), tb.d.apply_word(&w, g), "{label} {w:?}");
            }
        }
    }
}

#[test]
fn eigenvalue_law() {
    for (label, bs) in [("A1", vec![vec![-1], vec![-3]]), ("A2", vec![vec![-1, -1], vec![-2, 0]]), ("B2", vec![vec![-1, 0], vec![-1, -1]])] {
        let mut tb = sym_table(label);
        for b in bs {
            assert_cert(tb.eigenvalue_check(&b).unwrap());
        }
    }
    let mut tb = spec_table("A3");
    assert_cert(tb.eigenvalue_check(&[-1, 0, -1]).unwrap());
}

#[test]
fn three_term_and_character() {
    let mut tb = sym_table("A1");
    for n in 1..4 {
        assert_cert(tb.three_term_check(n).unwrap());
    }
    assert!(tb.three_term_check(0).is_err());
    for (label, k, bs) in [("A1", vec![1], vec![vec![-2]]), ("B2", vec![1, 1], vec![vec![-1, -1]]), ("G2", vec![1, 1], vec![vec![0, -1]])] {
        let mut tb = k_table(label, &k);
        assert_cert(tb.constant_term_check(&k).unwrap());
        for b in bs {
            assert_cert(tb.character_check(&b).unwrap());
        }
    }
}
