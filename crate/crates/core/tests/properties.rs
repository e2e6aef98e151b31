use cotwist::fourier::trivial_twist;
use cotwist::ncpoly::{twist_relation, twisted_eval, twisted_product};
use cotwist::*;
use proptest::prelude::*;

const N: u32 = 4;

fn scalar(c: i64, z: i64, q: i64) -> Scalar {
    let c = if c == 0 { 1 } else { c };
    &(&Scalar::from_int(N, c).unwrap() * &Scalar::zeta_pow(N, z).unwrap()) * &Scalar::q_pow(N, q).unwrap()
}

fn poly(terms: &[(Vec<usize>, i64, i64, i64)]) -> NcPoly {
    let mut p = NcPoly::zero(N);
    for (w, c, z, q) in terms {
        p.add_term(Word(w.clone()), scalar(*c, *z, *q));
    }
    p
}

fn terms(ngens: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0..ngens, 0..5), -6i64..=6, 0i64..4, -2i64..=2), 0..6)
}

fn tetra() -> CatalogEntry {
    catalog(CatalogName::Tetrahedron, &CatalogParams::default()).unwrap()
}

fn units() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-4i64..=4, 0i64..4, -2i64..=2), 3)
}

fn field_units() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-4i64..=4, 0i64..4, Just(0i64)), 3)
}

fn lambda(values: &[(i64, i64, i64)]) -> CoboundaryForm {
    let mut v = vec![Scalar::one(N).unwrap()];
    v.extend(values.iter().map(|(c, z, q)| scalar(*c, *z, *q)));
    CoboundaryForm::new(GradingGroup::klein(), N, v).unwrap()
}

fn monomials() -> Vec<NcPoly> {
    std::iter::once(NcPoly::one(N).unwrap()).chain((0..3).map(|i| NcPoly::generator(N, i).unwrap())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kappa_round_trip_on_klein(t in terms(3)) {
        let e = tetra();
        let p = poly(&t);
        let g = &e.presentation.gens;
        prop_assert_eq!(twisted_eval(&twist_relation(&p, g, &e.twist).unwrap(), g, &e.twist).unwrap(), p);
    }

    #[test]
    fn kappa_round_trip_on_free_group(t in terms(3), a in -3i64..=3, b in -3i64..=3, c in -3i64..=3) {
        let z3 = GradingGroup::free(3);
        let g = GenSet::new(N, z3.clone(), (0..3).map(|i| (format!("x{i}"), z3.generator(i))).collect()).unwrap();
        let sigma = TwoCocycle::bilinear_q(z3, N, vec![vec![0, a, b], vec![0, 0, c], vec![0, 0, 0]]).unwrap();
        let p = poly(&t);
        prop_assert_eq!(twisted_eval(&twist_relation(&p, &g, &sigma).unwrap(), &g, &sigma).unwrap(), p);
    }

    #[test]
    fn coboundary_covariance(t in terms(3), l in units()) {
        let e = tetra();
        let g = &e.presentation.gens;
        let lam = lambda(&l);
        let shifted = TwoCocycle::product(vec![e.twist.clone(), TwoCocycle::coboundary(&lam)]).unwrap();
        let rescale: Vec<NcPoly> = (0..3)
            .map(|i| NcPoly::generator(N, i).unwrap().scale(&lam.eval(g.degree(i)).unwrap().unit_inverse().unwrap()).unwrap())
            .collect();
        for (d, c) in poly(&t).homogeneous_components(g) {
            let lhs = twist_relation(&c, g, &shifted).unwrap();
            let rhs = twist_relation(&c, g, &e.twist).unwrap().substitute(&rescale).unwrap().scale(&lam.eval(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn associativity_iff_cocycle(entries in prop::collection::vec(0i64..4, 16), corrupt in any::<bool>(), l in field_units()) {
        let v = GradingGroup::klein();
        let table: Vec<Vec<Scalar>> = if corrupt {
            entries.chunks(4).map(|r| r.iter().map(|&k| Scalar::zeta_pow(N, k).unwrap()).collect()).collect()
        } else {
            TwoCocycle::product(vec![TwoCocycle::sigma_v(N).unwrap(), TwoCocycle::coboundary(&lambda(&l))])
                .unwrap()
                .values_table()
                .unwrap()
        };
        let sigma = TwoCocycle::table(v, N, table).unwrap();
        let g = &tetra().presentation.gens;
        let ms = monomials();
        let mut associative = true;
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    let left = twisted_product(&twisted_product(a, b, g, &sigma).unwrap(), c, g, &sigma).unwrap();
                    let right = twisted_product(a, &twisted_product(b, c, g, &sigma).unwrap(), g, &sigma).unwrap();
                    associative &= left == right;
                }
            }
        }
        prop_assert_eq!(associative, sigma.check().unwrap().valid);
        prop_assert_eq!(associative, TwistedGroupAlgebra::new(&sigma).unwrap().check_associative().associative);
    }

    #[test]
    fn normal_forms_do_not_depend_on_strategy(t in terms(3), seed in any::<u64>()) {
        let tw = catalog(CatalogName::USl2, &CatalogParams::default()).unwrap().twisted().unwrap();
        let sys = tw.confluent_system().unwrap();
        let p = poly(&t);
        let mut k = seed;
        let mut pick = |n: usize| {
            k = k.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (k >> 33) as usize % n
        };
        let a = sys.normalize(&p).unwrap();
        prop_assert_eq!(&a, &sys.normalize_with(&p, &mut pick).unwrap());
        prop_assert_eq!(&sys.normalize(&a).unwrap(), &a);
    }

    #[test]
    fn parse_print_round_trip(t in terms(4)) {
        let g = catalog(CatalogName::Sl2Coord, &CatalogParams::default()).unwrap().presentation.gens;
        let p = poly(&t);
        prop_assert_eq!(parse_expression(&p.render(&g), &g).unwrap(), p);
    }

    #[test]
    fn fourier_twist_is_multiplicative(l in units()) {
        let sv = TwoCocycle::sigma_v(N).unwrap();
        let lam = lambda(&l);
        let prod = TwoCocycle::product(vec![sv.clone(), TwoCocycle::coboundary(&lam)]).unwrap();
        let lhs = cocycle_to_twist(&prod).unwrap();
        let rhs = cocycle_to_twist(&sv).unwrap().mul(&trivial_twist(&lam, N).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derived_bicharacter_is_alternating(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4) {
        let z3 = GradingGroup::free(3);
        let sigma = TwoCocycle::bilinear_q(z3, N, vec![vec![0, a, b], vec![0, 0, c], vec![0, 0, 0]]).unwrap();
        prop_assert!(sigma.check().unwrap().valid);
        prop_assert!(sigma.derived_bicharacter().unwrap().is_alternating());
    }
}

#[test]
fn module_family_shapes() {
    for n in 0..9usize {
        let e = build_e(n, N).unwrap();
        assert_eq!(e.dim(), 2 * n + 1);
        assert!(e.integral_spectrum().unwrap().iter().all(|v| v % 2 == 0));
        for sign in Sign::BOTH {
            let b = build_b(n, sign, N).unwrap();
            assert_eq!(b.dim(), n + 1);
            assert!(b.integral_spectrum().unwrap().iter().all(|v| v % 2 != 0));
            assert!(verify_relations(&b).unwrap());
            if n > 0 {
                let a = build_a(n, sign, N).unwrap();
                assert_eq!(a.dim(), n);
                assert!(verify_relations(&a).unwrap());
                let spec = a.integral_spectrum().unwrap();
                assert_eq!(spec.iter().sum::<i64>(), (0..n as i64).map(|k| 2 * n as i64 - 1 - 4 * k).sum::<i64>());
            }
        }
    }
}
