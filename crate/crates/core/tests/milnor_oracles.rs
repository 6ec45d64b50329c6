//! μ̄ values checked against an independent brute-force Magnus expansion,
//! plus structural properties of the invariants.

use num_bigint::BigInt;
use proptest::prelude::*;
use slicecert_core::catalog;
use slicecert_core::diagram::{cable, closure, mirror, sublink, DiagramKind, LinkDiagram};
use slicecert_core::milnor::{
    is_homotopically_trivial, is_ht_plus_pair, longitude_series, longitude_words, magnus_expand, mu_bar, non_repeating,
    MagnusSeries, Word,
};

type Ser = MagnusSeries<BigInt>;

/// Coefficient of `X_{i_1}..X_{i_k}` in the expansion of a word given as
/// letters `±1..±m`, by summing over the ways of spending the monomial on
/// the letters: `x_i` gives `1` or `X_i`, `x_i^{-1}` gives `(-X_i)^n`.
fn brute_coefficient(word: &[i64], monomial: &[usize]) -> i64 {
    fn go(word: &[i64], mono: &[usize]) -> i64 {
        let Some((&l, rest)) = word.split_first() else {
            return i64::from(mono.is_empty());
        };
        let var = l.unsigned_abs() as usize - 1;
        let mut total = go(rest, mono);
        let run = mono.iter().take_while(|&&i| i == var).count();
        let max = if l > 0 { run.min(1) } else { run };
        for n in 1..=max {
            let c = if l < 0 && n % 2 == 1 { -1 } else { 1 };
            total += c * go(rest, &mono[n..]);
        }
        total
    }
    go(word, monomial)
}

/// μ̄ from hand-written longitudes: `(value, indeterminacy)`.
fn brute_mu_bar(longs: &[Vec<i64>], idx: &[usize]) -> (i64, i64) {
    let mu = |i: &[usize]| {
        let (&last, head) = i.split_last().unwrap();
        brute_coefficient(&longs[last], head)
    };
    let n = idx.len();
    let mut delta = 0i64;
    for mask in 1u32..(1 << n) - 1 {
        if mask.count_ones() < 2 {
            continue;
        }
        let sub: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| idx[k]).collect();
        for r in 0..sub.len() {
            let rot: Vec<usize> = sub[r..].iter().chain(&sub[..r]).copied().collect();
            delta = num_integer::gcd(delta, mu(&rot));
        }
    }
    let raw = mu(idx);
    (if delta == 0 { raw } else { raw.rem_euclid(delta) }, delta)
}

fn diagram(name: &str) -> LinkDiagram {
    closure(&catalog::get(name).unwrap().diagram().unwrap())
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn brute_force_agrees_with_hand_expansion() {
    // (1 + X1)(1 + X2)(1 - X1 + X1^2)(1 - X2 + X2^2)
    let w = [1, 2, -1, -2];
    assert_eq!(brute_coefficient(&w, &[]), 1);
    assert_eq!(brute_coefficient(&w, &[0]), 0);
    assert_eq!(brute_coefficient(&w, &[0, 1]), 1);
    assert_eq!(brute_coefficient(&w, &[1, 0]), -1);
    assert_eq!(brute_coefficient(&w, &[0, 0]), 0);
    assert_eq!(brute_coefficient(&[-1, -1], &[0, 0]), 3);
}

#[test]
fn hopf_from_hand_longitudes() {
    // Two crossings: each longitude is the other meridian.
    let longs = vec![vec![2], vec![1]];
    let (v, d) = brute_mu_bar(&longs, &[0, 1]);
    assert_eq!((v, d), (1, 0));
    let e = mu_bar::<BigInt>(&diagram("hopf"), &[0, 1], None).unwrap();
    assert_eq!((e.value, e.indeterminacy), (big(v), big(d)));
    let n = mu_bar::<BigInt>(&diagram("hopf-negative"), &[0, 1], None).unwrap();
    assert_eq!(n.value, big(-1));
}

#[test]
fn whitehead_from_hand_longitudes() {
    // Read off the five-crossing diagram: each longitude is a product of
    // two commutators of the meridians.
    let longs = vec![vec![-1, -2, 1, 2, -1, 2, 1, -2], vec![-2, -1, 2, 1, -2, 1, 2, -1]];
    let d = diagram("whitehead");
    let words = longitude_words(&d, 4);
    assert_eq!(words[0].letters(), longs[0].as_slice());
    assert_eq!(words[1].letters(), longs[1].as_slice());
    for idx in [vec![0, 1], vec![1, 0], vec![0, 0, 1, 1], vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 0, 1]] {
        let (v, delta) = brute_mu_bar(&longs, &idx);
        let e = mu_bar::<BigInt>(&d, &idx, Some(4)).unwrap();
        assert_eq!((e.value, e.indeterminacy), (big(v), big(delta)), "index {idx:?}");
    }
    assert_eq!(brute_mu_bar(&longs, &[0, 1]), (0, 0));
    assert_eq!(brute_mu_bar(&longs, &[0, 0, 1, 1]).0.abs(), 1);
}

#[test]
fn borromean_from_brute_force_expansion() {
    let d = diagram("borromean");
    let words = longitude_words(&d, 3);
    let longs: Vec<Vec<i64>> = words.iter().map(|w| w.letters().to_vec()).collect();
    for idx in non_repeating(3, 3) {
        let (v, delta) = brute_mu_bar(&longs, &idx);
        let e = mu_bar::<BigInt>(&d, &idx, None).unwrap();
        assert_eq!((e.value.clone(), e.indeterminacy.clone()), (big(v), big(delta)), "index {idx:?}");
        assert!(e.is_exact());
        assert_eq!(v.abs(), 1);
    }
}

#[test]
fn cyclic_symmetry_on_borromean() {
    let d = diagram("borromean");
    let vals: Vec<BigInt> = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
        .iter()
        .map(|i| mu_bar::<BigInt>(&d, i, None).unwrap())
        .inspect(|e| assert!(e.is_exact()))
        .map(|e| e.value)
        .collect();
    assert!(vals.iter().all(|v| v == &vals[0]));
    let reversed = mu_bar::<BigInt>(&d, &[0, 2, 1], None).unwrap();
    assert_eq!(reversed.value, -vals[0].clone());
}

#[test]
fn unlinks_have_no_invariants() {
    for n in 2..=4 {
        let d = LinkDiagram::trivial(DiagramKind::Closed, n);
        for len in 2..=n {
            for idx in non_repeating(n, len) {
                assert_eq!(mu_bar::<BigInt>(&d, &idx, None).unwrap().value, big(0));
            }
        }
        assert!(is_homotopically_trivial::<BigInt>(&d).unwrap().trivial);
    }
}

#[test]
fn first_order_is_linking_number() {
    for e in catalog::entries() {
        let Ok(d) = e.diagram() else { continue };
        let d = closure(&d);
        for i in 0..d.components() {
            for j in 0..d.components() {
                if i != j {
                    let m = mu_bar::<BigInt>(&d, &[i, j], None).unwrap();
                    assert_eq!(m.value, big(d.linking_number(i, j)), "{} ({i},{j})", e.name);
                }
            }
        }
    }
}

#[test]
fn word_and_series_routes_agree() {
    for name in ["hopf", "whitehead", "borromean", "torus-2-4", "trefoil-knot"] {
        let d = diagram(name);
        let m = d.components();
        for cap in 1..=3 {
            let series: Vec<Ser> = longitude_series(&d, cap, false).unwrap();
            for (w, s) in longitude_words(&d, cap).iter().zip(&series) {
                assert_eq!(&magnus_expand::<BigInt>(w, m, cap, false).unwrap(), s, "{name} cap {cap}");
            }
        }
    }
}

#[test]
fn homotopy_verdicts_on_catalog() {
    assert!(is_homotopically_trivial::<BigInt>(&diagram("whitehead")).unwrap().trivial);
    let b = is_homotopically_trivial::<BigInt>(&diagram("borromean")).unwrap();
    assert!(!b.trivial);
    assert_eq!(b.witness().unwrap().indices, vec![0, 1, 2]);
    // A two-component link is ht+ exactly when it has linking number zero.
    for name in ["hopf", "hopf-negative", "torus-2-4", "whitehead", "unlink-2"] {
        let d = diagram(name);
        let v = is_ht_plus_pair::<BigInt>(&d, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(v.holds, d.linking_number(0, 1) == 0, "{name}");
    }
}

/// Reorders the components of `d` by `perm`.
fn relabel(d: &LinkDiagram, perm: &[usize]) -> LinkDiagram {
    sublink(d, perm).unwrap()
}

#[test]
fn homotopy_verdict_ignores_labels_and_mirroring() {
    for name in ["whitehead", "borromean", "hopf", "unlink-3", "torus-2-4"] {
        let d = diagram(name);
        let base = is_homotopically_trivial::<BigInt>(&d).unwrap();
        let n = d.components();
        let perms: Vec<Vec<usize>> =
            if n == 3 { vec![vec![1, 2, 0], vec![2, 1, 0]] } else { vec![(0..n).rev().collect()] };
        for p in perms {
            let r = relabel(&d, &p);
            let v = is_homotopically_trivial::<BigInt>(&r).unwrap();
            assert_eq!(v.trivial, base.trivial, "{name} {p:?}");
            for e in &base.table.entries {
                let moved: Vec<usize> = e.indices.iter().map(|&i| p.iter().position(|&q| q == i).unwrap()).collect();
                assert_eq!(v.table.get(&moved).unwrap().value, e.value, "{name} {p:?}");
            }
        }
        let m = is_homotopically_trivial::<BigInt>(&mirror(&d)).unwrap();
        assert_eq!(m.trivial, base.trivial, "{name} mirrored");
        for (a, b) in m.table.entries.iter().zip(&base.table.entries) {
            assert_eq!(a.value.clone() == big(0), b.value.clone() == big(0));
        }
    }
}

#[test]
fn ramification_matches_the_link() {
    // J = K plus zero-framed copies of some of its components.
    for name in ["whitehead", "hopf", "unlink-2", "borromean"] {
        let k = diagram(name);
        let n = k.components();
        let expected =
            is_ht_plus_pair::<BigInt>(&k, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>()).unwrap().holds;
        let mut mults = vec![1; n];
        mults[0] = 2;
        if n > 2 {
            mults[n - 1] = 2;
        }
        let j = cable(&k, &mults).unwrap();
        let all: Vec<usize> = (0..j.components()).collect();
        let mut originals = Vec::new();
        let mut s = 0;
        for &c in &mults {
            originals.push(s);
            s += c;
        }
        let v = is_ht_plus_pair::<BigInt>(&j, &all, &originals).unwrap();
        assert_eq!(v.holds, expected, "{name}");
    }
}

fn word_strategy(m: i64) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=m, any::<bool>()), 0..10)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, inv)| if inv { -g } else { g }).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn expansion_is_multiplicative(u in word_strategy(3), v in word_strategy(3), cap in 0usize..5, reduced in any::<bool>()) {
        let eu: Ser = magnus_expand(&u, 3, cap, reduced).unwrap();
        let ev: Ser = magnus_expand(&v, 3, cap, reduced).unwrap();
        let euv: Ser = magnus_expand(&u.mul(&v), 3, cap, reduced).unwrap();
        prop_assert_eq!(eu.mul(&ev), euv);
    }

    #[test]
    fn expansion_of_inverse_is_inverse(w in word_strategy(3), cap in 0usize..6, reduced in any::<bool>()) {
        let e: Ser = magnus_expand(&w, 3, cap, reduced).unwrap();
        let ei: Ser = magnus_expand(&w.inverse(), 3, cap, reduced).unwrap();
        prop_assert!(e.mul(&ei).is_one());
    }

    #[test]
    fn expansion_matches_brute_force(w in word_strategy(2), mono in prop::collection::vec(0usize..2, 0..4)) {
        let e: Ser = magnus_expand(&w, 2, 3, false).unwrap();
        prop_assert_eq!(e.coefficient(&mono), big(brute_coefficient(w.letters(), &mono)));
    }
}
