use num_rational::BigRational;
use proptest::prelude::*;
use tlj::annular::{check_idempotents, minimal_idempotents, PolyQuotient};
use tlj::braid::{jones_polynomial, BraidWord};
use tlj::json::{scalar_from_json, scalar_to_json};
use tlj::linalg::QMatrix;
use tlj::manifold::{maslov_index, LagrangianTriple};
use tlj::scalars::qpoly::rat_frac;
use tlj::scalars::{cyclo_field, Cyclo, LaurentPoly, QPoly};
use tlj::{Context, Scalar};

#[derive(Clone, Debug)]
enum Move {
    Conjugate(i32),
    Stabilize(bool),
}

fn apply(strands: usize, word: &[i32], mv: &Move) -> (usize, Vec<i32>) {
    match *mv {
        Move::Conjugate(g) => {
            let g = (g.unsigned_abs() as usize % (strands - 1) + 1) as i32 * g.signum();
            let mut w = vec![g];
            w.extend_from_slice(word);
            w.push(-g);
            (strands, w)
        }
        Move::Stabilize(pos) if strands < 5 => {
            let mut w = word.to_vec();
            w.push(if pos { strands as i32 } else { -(strands as i32) });
            (strands + 1, w)
        }
        Move::Stabilize(_) => (strands, word.to_vec()),
    }
}

fn letter() -> impl Strategy<Value = i32> {
    prop_oneof![Just(1), Just(-1), Just(2), Just(-2)]
}

fn moves() -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec(
        prop_oneof![
            (prop_oneof![1..5i32, -4..0i32]).prop_map(Move::Conjugate),
            any::<bool>().prop_map(Move::Stabilize)
        ],
        1..4,
    )
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| rat_frac(n, d))
}

fn symmetric(g: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-3i64..4, g * g)
        .prop_map(move |v| (0..g).map(|i| (0..g).map(|j| v[i.min(j) * g + i.max(j)]).collect()).collect())
}

/// `{(x, S x)}` for symmetric `S`, or the vertical subspace when `vertical` is set.
fn lagrangian(s: &[Vec<i64>], vertical: bool) -> QMatrix {
    let g = s.len();
    (0..g)
        .map(|i| {
            let mut v = vec![BigRational::from_integer(0.into()); 2 * g];
            if vertical {
                v[g + i] = BigRational::from_integer(1.into());
            } else {
                v[i] = BigRational::from_integer(1.into());
                for j in 0..g {
                    v[g + j] = BigRational::from_integer(s[j][i].into());
                }
            }
            v
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jones_is_markov_invariant(word in prop::collection::vec(letter(), 0..6), mvs in moves()) {
        let ctx = Context::generic();
        let before = jones_polynomial(&ctx, &BraidWord::new(3, word.clone()).unwrap()).unwrap();
        let (mut n, mut w) = (3, word);
        for m in &mvs {
            (n, w) = apply(n, &w, m);
        }
        let after = jones_polynomial(&ctx, &BraidWord::new(n, w.clone()).unwrap()).unwrap();
        prop_assert_eq!(before, after, "{:?}", w);
    }
}

proptest! {
    #[test]
    fn laurent_json_round_trip(terms in prop::collection::vec((-12i64..12, rational()), 0..6),
                               den in prop::collection::vec((-4i64..4, rational()), 1..3)) {
        let n = Scalar::from_laurent(&LaurentPoly::from_terms(terms));
        let d = Scalar::from_laurent(&LaurentPoly::from_terms(den));
        prop_assume!(!d.is_zero());
        let x = &n / &d;
        prop_assert_eq!(scalar_from_json(&scalar_to_json(&x)).unwrap(), x);
    }

    #[test]
    fn cyclotomic_json_round_trip(m in prop_oneof![Just(12u64), Just(16), Just(20), Just(24), Just(40)],
                                  t in 1i64..40,
                                  coeffs in prop::collection::vec(rational(), 0..20)) {
        let Ok(field) = cyclo_field(m, t) else { return Ok(()) };
        let x = Scalar::Cyclo(Cyclo::from_poly(&field, &QPoly::from_coeffs(coeffs)));
        let back = scalar_from_json(&scalar_to_json(&x)).unwrap();
        prop_assert_eq!(back.to_c64(), x.to_c64());
        prop_assert_eq!(back, x);
    }

    #[test]
    fn lagrange_idempotents_decompose(roots in prop::collection::btree_set((-30i64..30, 1i64..5), 1..6)) {
        let mut roots: Vec<Scalar> = roots.into_iter().map(|(n, d)| Scalar::from_rational(rat_frac(n, d))).collect();
        roots.dedup();
        let mut p: Vec<Scalar> = vec![Scalar::one()];
        for a in &roots {
            let mut next = vec![Scalar::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &(c * a);
            }
            p = next;
        }
        let es = minimal_idempotents(&p, &roots).unwrap();
        let q = PolyQuotient::new(p.clone()).unwrap();
        prop_assert!(check_idempotents(&q, &es).all());
        for (j, e) in es.iter().enumerate() {
            prop_assert!(e.iter().any(|c| !c.is_zero()));
            for (i, a) in roots.iter().enumerate() {
                let v = e.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * a) + c);
                prop_assert_eq!(v, Scalar::from_i64((i == j) as i64));
            }
        }
    }

    #[test]
    fn maslov_antisymmetric_and_degenerate(g in 1usize..4, seed in any::<u64>(),
                                           vert in prop::array::uniform3(any::<bool>())) {
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(seed);
        let mut sym = || {
            use rand::Rng;
            let v: Vec<i64> = (0..g * g).map(|_| rng.gen_range(-3..4)).collect();
            (0..g).map(|i| (0..g).map(|j| v[i.min(j) * g + i.max(j)]).collect::<Vec<_>>()).collect::<Vec<_>>()
        };
        let ls: Vec<QMatrix> = vert.iter().map(|&v| lagrangian(&sym(), v)).collect();
        let t = LagrangianTriple::new(2 * g, ls[0].clone(), ls[1].clone(), ls[2].clone()).unwrap();
        let tau = maslov_index(&t);
        prop_assert_eq!(maslov_index(&t.swapped_outer()), -tau);
        prop_assert!(tau.unsigned_abs() as usize <= g);
        let cyc = LagrangianTriple::new(2 * g, ls[1].clone(), ls[2].clone(), ls[0].clone()).unwrap();
        prop_assert_eq!(maslov_index(&cyc), tau);
        for (a, b, c) in [(0, 0, 1), (0, 1, 1), (1, 0, 1)] {
            let d = LagrangianTriple::new(2 * g, ls[a].clone(), ls[b].clone(), ls[c].clone()).unwrap();
            prop_assert_eq!(maslov_index(&d), 0);
        }
    }

    #[test]
    fn maslov_graph_triple_is_signature(s in symmetric(3)) {
        // τ(vertical, horizontal, graph of S) = ±signature(S)
        let zero = vec![vec![0i64; 3]; 3];
        let t = LagrangianTriple::new(6, lagrangian(&zero, true), lagrangian(&zero, false), lagrangian(&s, false)).unwrap();
        let q: QMatrix = s.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let sig = tlj::linalg::q_signature(&q);
        prop_assert_eq!(maslov_index(&t).abs(), sig.abs());
    }
}
