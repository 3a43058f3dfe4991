use num_bigint::BigInt;
use skewhook::schubert::*;
use skewhook::shapes::{rpp_bounded_count, SkewShape};

fn mac(w: &Permutation, c: usize) -> BigInt {
    upsilon_shifted(w, c, UpsilonMethod::Macdonald).unwrap()
}

fn check(kind: Family, c: usize) {
    let w = family(kind).unwrap();
    assert_eq!(upsilon_closed_form(kind, c).unwrap(), mac(&w, c), "{kind} at c = {c}");
}

#[test]
fn shifted_families_match_macdonald() {
    for n in 1..=4 {
        for c in 0..=3 {
            check(Family::W0 { n }, c);
        }
    }
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 0..=3 {
                check(Family::Box { a, b }, c);
            }
        }
    }
    for (a, c) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)] {
        check(Family::V { a }, c);
    }
    for a in 1..=3 {
        for c in 0..=2 {
            check(Family::W { a }, c);
        }
    }
}

#[test]
fn unshifted_families_match_macdonald() {
    for kind in [
        Family::S { a: 1 },
        Family::S { a: 2 },
        Family::T { a: 1 },
        Family::Doublefact { n: 3 },
        Family::Zigzag { n: 2, a: 2 },
        Family::Zigzag { n: 3, a: 2 },
    ] {
        check(kind, 0);
    }
    for n in 1..=3 {
        check(Family::X { n }, 0);
        check(Family::Y { n }, 0);
        check(Family::Z { n }, 0);
        assert!(classify(&family(Family::X { n }).unwrap()).avoid321);
    }
}

#[test]
fn dewitt_second_member() {
    check(Family::T { a: 2 }, 0);
}

#[test]
fn family_classes() {
    for a in 1..=3 {
        let v = family(Family::V { a }).unwrap();
        assert!(classify(&v.direct_sum(a)).vexillary);
        assert_eq!(v.length(), 3 * a * a);
        let u = family(Family::Box { a, b: a + 1 }).unwrap();
        let (mu, _) = vexillary_shapes(&u).unwrap();
        assert_eq!(mu.parts(), vec![a + 1; a].as_slice());
        assert!(classify(&u).dominant);
    }
}

#[test]
fn methods_agree_on_s6() {
    for w in Permutation::all(6) {
        let class = classify(&w);
        let m = upsilon(&w, UpsilonMethod::Macdonald).unwrap();
        if class.vexillary {
            assert_eq!(upsilon(&w, UpsilonMethod::VexillaryExcited).unwrap(), m, "{w}");
        }
        if class.avoid321 {
            assert_eq!(upsilon(&w, UpsilonMethod::Skew321).unwrap(), m, "{w}");
        }
    }
}

#[test]
fn fully_commutative_words_share_letter_product() {
    for w in Permutation::all(6).into_iter().filter(|w| classify(w).avoid321) {
        let words = reduced_words(&w, REDUCED_WORD_CAP).unwrap();
        let mut first = words[0].clone();
        first.sort();
        for word in &words {
            let mut s = word.clone();
            s.sort();
            assert_eq!(s, first, "{w}");
        }
    }
}

#[test]
fn dominant_shifts() {
    for n in 1..=5 {
        for w in Permutation::all(n).into_iter().filter(|w| classify(w).dominant) {
            let (mu, _) = vexillary_shapes(&w).unwrap();
            for c in 0..=3 {
                let u = mac(&w, c);
                assert_eq!(u, rpp_bounded_count(&mu, c), "{w} c={c}");
                assert_eq!(u, upsilon_dominant(&mu, c).unwrap(), "{w} c={c}");
            }
        }
    }
}

#[test]
fn shape_round_trip() {
    for shape in SkewShape::all_up_to(8) {
        if shape.size() == 0 || !shape.is_connected() || shape.diagonal_count() > 5 {
            continue;
        }
        let (w, word) = shape_perm_correspondence(&shape, None).unwrap();
        assert_eq!(w.length(), word.len());
        let (back, offset) = skewsh(&w).unwrap();
        assert_eq!(offset, 0);
        assert_eq!(back, normalize_skew(&shape), "{shape}");
    }
}

#[test]
fn length_is_diagram_size() {
    for n in 1..=7 {
        for w in Permutation::all(n) {
            assert_eq!(rothe_diagram(&w).cells.len(), w.length());
        }
    }
}
