use macdaha::rootdata::{AffineElement, Dominance, RootSystem};
use num_rational::Ratio;
use proptest::prelude::*;

fn sys(l: &str) -> RootSystem {
    RootSystem::from_label(l).unwrap()
}

#[test]
fn constants_m_and_minuscule_nodes() {
    assert_eq!(sys("D4").m, 2);
    let g2 = sys("G2");
    assert!(g2.o_star.is_empty());
    assert_eq!(g2.pis.len(), 1);
    assert_eq!(sys("A1").m, 2);
    assert_eq!(sys("A2").o_star, vec![0, 1]);
    assert_eq!(sys("E6").o_star.len(), 2);
    assert!(sys("E8").o_star.is_empty());
    assert!(sys("F4").o_star.is_empty());
}

#[test]
fn a1_basic_data() {
    let a1 = sys("A1");
    assert_eq!(a1.positive_roots().len(), 1);
    assert_eq!(a1.pair(&[1], &[1]), Ratio::new(1, 2));
    // alpha = 2 b1
    assert_eq!(a1.positive_roots()[0].coroot, vec![2]);
}

#[test]
fn root_counts() {
    for (l, n) in [("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("E8", 120)] {
        assert_eq!(sys(l).positive_roots().len(), n, "{l}");
    }
}

#[test]
fn duality_of_bases() {
    for l in ["A2", "B2", "G2", "B3", "C3", "F4"] {
        let rs = sys(l);
        for i in 0..rs.rank {
            for j in 0..rs.rank {
                let b = rs.unit(i);
                assert_eq!(rs.root_pair(&b, j), (i == j) as i64);
            }
        }
        let a2 = sys("A2");
        assert_eq!(a2.root_pair(&[1, 0], 0), 1);
        assert_eq!(rs.pair(&rs.unit(0), &vec![0; rs.rank]), Ratio::from_integer(0));
    }
}

#[test]
fn dominance_examples() {
    let a1 = sys("A1");
    assert_eq!(a1.dominance_compare(&[-2], &[0]), Dominance::Less);
    assert_eq!(a1.dominance_compare(&[0], &[-2]), Dominance::Greater);
    assert_eq!(a1.dominance_compare(&[-1], &[-1]), Dominance::Equal);
    assert_eq!(a1.dominance_compare(&[-1], &[-2]), Dominance::Incomparable);
}

#[test]
fn translation_lengths() {
    let a1 = sys("A1");
    assert_eq!(a1.length(&AffineElement::translation(vec![1])), 1);
    let a2 = sys("A2");
    assert_eq!(a2.length(&AffineElement::translation(vec![1, 0])), 2);
    assert_eq!(a2.length(&AffineElement::identity(2)), 0);
    assert!(a2.inversions(&AffineElement::identity(2)).is_empty());
}

#[test]
fn reduced_word_examples() {
    let a1 = sys("A1");
    let (r, w) = a1.reduced_word(&AffineElement::translation(vec![1])).unwrap();
    assert_eq!((r, w), (1, vec![1]));
    let (r, w) = a1.reduced_word(&AffineElement::identity(1)).unwrap();
    assert_eq!((r, w.len()), (0, 0));
    let a2 = sys("A2");
    let (r, w) = a2.reduced_word(&AffineElement::translation(vec![1, 1])).unwrap();
    assert_eq!(r, 0);
    assert_eq!(w.len(), 4);
}

#[test]
fn dominant_translation_lengths_match_rho_pairing() {
    for l in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let rs = sys(l);
        let n = rs.rank;
        // every dominant b with coordinate sum <= 4
        let mut stack = vec![vec![0i64; n]];
        let mut seen = std::collections::HashSet::new();
        while let Some(b) = stack.pop() {
            if !seen.insert(b.clone()) {
                continue;
            }
            let g = AffineElement::translation(b.clone());
            let by_class = rs.lengths_by_class(&g);
            for c in 0..rs.num_classes() {
                assert_eq!(by_class[c] as i64, rs.rho_exp(&b, c), "{l} {b:?}");
            }
            assert_eq!(rs.length(&g), by_class.iter().sum::<usize>());
            if b.iter().sum::<i64>() < 4 {
                for i in 0..n {
                    let mut c = b.clone();
                    c[i] += 1;
                    stack.push(c);
                }
            }
        }
    }
}

#[test]
fn pi_conjugation_permutes_simple_reflections() {
    for l in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4"] {
        let rs = sys(l);
        for k in 0..rs.pis.len() {
            let p = &rs.pis[k];
            assert_eq!(rs.length(p), 0);
            for i in 0..=rs.rank {
                let lhs = p.compose(&rs.affine_simple(i)).compose(&p.inverse());
                assert_eq!(lhs, rs.affine_simple(rs.pi_perm[k][i]), "{l} pi{k} s{i}");
            }
        }
    }
}

#[test]
fn longest_element() {
    for l in ["A2", "B2", "G2", "B3", "D4"] {
        let rs = sys(l);
        assert!(rs.w0.compose(&rs.w0).is_identity());
        for r in rs.positive_roots() {
            let img = rs.w0.apply(&r.coroot);
            let idx = rs.root_of_coroot(&img).unwrap();
            assert!(!rs.is_positive(idx));
        }
    }
    assert_eq!(sys("F4").weyl_group().unwrap().len(), 1152);
    assert_eq!(sys("B3").weyl_group().unwrap().len(), 48);
}

fn random_element(rs: &RootSystem, pi: usize, word: &[usize]) -> AffineElement {
    let mut g = rs.pis[pi % rs.pis.len()].clone();
    for &j in word {
        g = g.compose(&rs.affine_simple(j % (rs.rank + 1)));
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn reduced_words_recompose(sysi in 0usize..6, pi in 0usize..4, word in proptest::collection::vec(0usize..4, 0..12)) {
        let labels = ["A1", "A2", "B2", "G2", "A3", "C3"];
        let rs = sys(labels[sysi]);
        let g = random_element(&rs, pi, &word);
        let (r, w) = rs.reduced_word(&g).unwrap();
        prop_assert_eq!(rs.compose_word(r, &w), g.clone());
        prop_assert_eq!(w.len(), rs.lengths_by_class(&g).iter().sum::<usize>());
        prop_assert_eq!(w.len(), rs.length(&g));
        // inversion set read off the word from its rightmost letter
        let mut set: Vec<(usize, i64)> = Vec::new();
        let mut prefix = AffineElement::identity(rs.rank);
        for &j in w.iter().rev() {
            let (root, k) = if j == 0 { (rs.theta + rs.npos, 1) } else { (j - 1, 0) };
            set.push(rs.act_affine_root(&prefix, root, k));
            prefix = prefix.compose(&rs.affine_simple(j));
        }
        // the set of the word is lambda of the element without the pi factor
        let tail = rs.pis[r].inverse().compose(&g);
        let mut expect = rs.inversions(&tail);
        let mut got: Vec<_> = set.into_iter().collect();
        expect.sort();
        got.sort();
        prop_assert_eq!(got, expect);
    }
}
