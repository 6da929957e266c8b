mod common;

use common::*;
use tlj::braid::{bracket_closure, jones_polynomial, BraidWord};
use tlj::modular::km_bracket;
use tlj::scalars::LaurentPoly;
use tlj::{Context, Scalar};

fn words() -> Vec<(usize, Vec<i32>)> {
    let mut out: Vec<(usize, Vec<i32>)> =
        (-6..=6i32).map(|k| (2, vec![k.signum(); k.unsigned_abs() as usize])).collect();
    out.extend(reduced_words(3, 6).into_iter().map(|w| (3, w)));
    out
}

#[test]
fn skein_oracle_knows_the_trefoil() {
    let v = skein_jones(2, &[1, 1, 1]);
    assert_eq!(v, lp(&[(-4, 1), (-12, 1), (-16, -1)]));
    let fig8 = skein_jones(3, &[1, -2, 1, -2]);
    assert_eq!(fig8, lp(&[(8, 1), (4, -1), (0, 1), (-4, -1), (-8, 1)]));
}

#[test]
fn bracket_matches_state_sum() {
    let ctx = Context::generic();
    for (n, w) in words() {
        let b = BraidWord::new(n, w.clone()).unwrap();
        let lib = bracket_closure(&ctx, &b).unwrap();
        let oracle = Scalar::from_laurent(&state_sum(n, &w, &Weights::kauffman()));
        assert_eq!(lib, oracle, "{w:?}");
    }
}

#[test]
fn jones_matches_state_sum_and_skein() {
    let ctx = Context::generic();
    let mut knots = 0;
    for (n, w) in words() {
        let b = BraidWord::new(n, w.clone()).unwrap();
        let lib = jones_polynomial(&ctx, &b).unwrap();
        let from_states = normalize(&state_sum(n, &w, &Weights::kauffman()), &w);
        let from_skein = Scalar::from_laurent(&skein_jones(n, &w));
        assert_eq!(lib, from_states, "state sum {w:?}");
        assert_eq!(lib, from_skein, "skein {w:?}");
        if closure_components(n, &w) == 1 {
            knots += 1;
        }
    }
    assert!(knots > 300);
}

#[test]
fn kirby_melvin_bracket_per_crossing() {
    for (m, t) in [(12u64, 1i64), (16, 3), (20, 1), (10, 3)] {
        let ctx = Context::root(m, t).unwrap();
        for (n, w) in words().into_iter().step_by(7) {
            let b = BraidWord::new(n, w.clone()).unwrap();
            let lib = km_bracket(&ctx, &b).unwrap();
            let oracle: LaurentPoly = state_sum(n, &w, &Weights::kirby_melvin());
            let val = eval_at(&ctx, &oracle).lift(lib.cyclo_field().unwrap());
            assert_eq!(lib, val, "m={m} t={t} {w:?}");
        }
    }
}
