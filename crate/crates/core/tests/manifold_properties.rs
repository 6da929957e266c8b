use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tlj::manifold::{doubled_invariant, rt_invariant, signature, SurgeryPresentation};
use tlj::modular::{build_modular_data, DExtension, RootClass};

#[test]
fn split_union_is_connected_sum() {
    for r in [3usize, 4] {
        let md = build_modular_data(r, RootClass::FourR, 1).unwrap();
        let ext = DExtension::new(&md).unwrap();
        let z = |s: &SurgeryPresentation| rt_invariant(s, &md, &ext).unwrap().z;
        for p in -2..=3 {
            for q in p..=3 {
                let (x, y) = (SurgeryPresentation::lens_space(p), SurgeryPresentation::lens_space(q));
                let sum = z(&x.disjoint_union(&y).unwrap());
                // Z(X♯Y) = Z(X) Z(Y) / Z(S³)
                assert_eq!(sum, &(&z(&x) * &z(&y)) * &ext.d, "r = {r}: L({p},1) # L({q},1)");
            }
        }
    }
}

#[test]
fn doubled_values_are_nonnegative_reals() {
    for r in [3usize, 4] {
        let md = build_modular_data(r, RootClass::FourR, 1).unwrap();
        let ext = DExtension::new(&md).unwrap();
        let mut cases: Vec<SurgeryPresentation> = (-4..=4).map(SurgeryPresentation::lens_space).collect();
        cases.push(SurgeryPresentation::from_braid(2, vec![1, 1, 1], &[1]).unwrap());
        cases.push(SurgeryPresentation::from_braid(2, vec![1, 1], &[2, -1]).unwrap());
        cases.push(SurgeryPresentation::from_braid(3, vec![1, -2, 1, -2], &[-1]).unwrap());
        for s in &cases {
            let v = doubled_invariant(s, &md, &ext).unwrap();
            let c = v.exact.to_c64().unwrap();
            assert!(c.im.abs() < 1e-9 && c.re > -1e-9, "r = {r}: {c}");
            assert!((v.approx - v.from_z).abs() < 1e-9 * v.approx.abs().max(1.0));
        }
    }
}

#[test]
fn signature_matches_eigenvalue_count() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-4..=4);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        let ev = nalgebra::DMatrix::from_fn(n, n, |i, j| m[i][j] as f64).symmetric_eigen().eigenvalues;
        let pos = ev.iter().filter(|x| **x > 1e-6).count() as i64;
        let neg = ev.iter().filter(|x| **x < -1e-6).count() as i64;
        assert_eq!(signature(&m), pos - neg, "{m:?}");
    }
}
