use proptest::prelude::*;

use super::*;
use crate::cyclic::{Distance, DistanceOptions};
use crate::poly::{irreducible_factors_of_xn_minus_1, reciprocal_bar, Residue};

fn gf(p: u64, r: u32) -> Field {
    Field::new(p, r).unwrap()
}

fn poly(field: &Field, s: &str) -> Poly {
    Poly::parse(field, s).unwrap()
}

fn steane() -> QcCode {
    let f2 = gf(2, 1);
    let f = poly(&f2, "x^3 + x + 1");
    QcCode::new(&f2, 7, &f, &f, &poly(&f2, "x + 1")).unwrap()
}

#[test]
fn steane_generators_and_dual() {
    let q = steane();
    assert_eq!(q.dimension(), 8);
    let g = q.generator_matrix();
    assert_eq!(g.len(), 8);
    assert_eq!(q.row_space().rank(), 8);
    let f2 = q.field().clone();
    let gp = poly(&f2, "x^4 + x^3 + x^2 + 1");
    let (a, b) = q.dual_generators(DualForm::Symplectic).unwrap();
    assert_eq!(a.first.rep(), &gp);
    let hbar = poly(&f2, "x^6 + 1");
    assert_eq!(a.second, Residue::from_poly(&hbar.mul(&gp), 7));
    assert!(b.first.is_zero());
    assert_eq!(b.second.rep(), &gp);

    // the dual is itself self-orthogonal: 6 x 6 products
    let d = q.dual_span(DualForm::Symplectic).unwrap();
    assert_eq!(d.rank(), 6);
    let mut products = 0;
    for u in d.basis() {
        for v in d.basis() {
            assert_eq!(inner_product(&f2, u, v, DualForm::Symplectic).unwrap(), 0);
            products += 1;
        }
    }
    assert_eq!(products, 36);
    for u in &g {
        for v in d.basis() {
            assert_eq!(inner_product(&f2, u, v, DualForm::Symplectic).unwrap(), 0);
        }
    }

    let c = check_self_orth_condition(&q, DualForm::Symplectic);
    assert!(c.holds);
    assert_eq!(c.branch, Some(Branch::Ii));
    let o = verify_orthogonality(&q, DualForm::Symplectic).unwrap();
    assert!(o.holds(), "{o:?}");
}

#[test]
fn steane_bounds_and_exact() {
    let q = steane();
    let opts = DistanceOptions::default();
    let b = d_q_bound(&q, &opts).unwrap();
    let lowers: Vec<Distance> = b.terms.iter().map(|t| t.lower).collect();
    assert_eq!(lowers, [3, 7, 3, 5].map(Distance::Finite));
    assert_eq!(b.value.lower, Distance::Finite(3));
    let e = d_qe_bound(&q, &opts).unwrap();
    let lowers: Vec<Distance> = e.terms.iter().map(|t| t.lower).collect();
    assert_eq!(lowers, [3, 7, 3, 6].map(Distance::Finite));
    assert_eq!(e.value.lower, Distance::Finite(3));
    let ex = exact_qc_distance(&q, DualForm::Symplectic, &opts).unwrap();
    assert_eq!(ex.lower, Distance::Finite(3));
    let w = exact_qc_weights(&q, DualForm::Euclidean, &opts).unwrap();
    assert_eq!(w.nonzero, Distance::Finite(3));
}

#[test]
fn literal_branch_i_is_not_sufficient() {
    let f2 = gf(2, 1);
    let g = poly(&f2, "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1");
    let q = QcCode::new(&f2, 7, &Poly::one(&f2), &g, &poly(&f2, "x + 1")).unwrap();
    let c = check_self_orth_condition(&q, DualForm::Symplectic);
    assert_eq!(c.literal_branch_i, Some(true));
    assert!(!c.holds);
    let o = verify_orthogonality(&q, DualForm::Symplectic).unwrap();
    assert!(o.duality_holds());
    assert!(!o.dual_contained);
}

#[test]
fn violating_chain_fails_containment() {
    let f2 = gf(2, 1);
    let q = QcCode::new(
        &f2,
        7,
        &poly(&f2, "x^3 + x + 1"),
        &poly(&f2, "x + 1"),
        &poly(&f2, "x + 1"),
    )
    .unwrap();
    assert!(!check_self_orth_condition(&q, DualForm::Euclidean).holds);
    let o = verify_orthogonality(&q, DualForm::Euclidean).unwrap();
    assert!(o.duality_holds());
    assert!(!o.dual_contained);
    // symplectically the pair is fine: x - 1 divides hbar - h for every h,
    // and g^perp (x - 1) = 0, so branch (i) applies
    let c = check_self_orth_condition(&q, DualForm::Symplectic);
    assert_eq!(c.branch, Some(Branch::I));
    assert!(verify_orthogonality(&q, DualForm::Symplectic).unwrap().holds());
}

#[test]
fn trivial_code_chain() {
    let f4 = gf(2, 2);
    let one = Poly::one(&f4);
    let q = QcCode::new(&f4, 5, &one, &one, &Poly::zero(&f4)).unwrap();
    assert_eq!(q.row_space().rank(), 10);
    for form in DualForm::ALL {
        assert!(check_self_orth_condition(&q, form).holds, "{form}");
        assert!(verify_orthogonality(&q, form).unwrap().holds());
    }
}

#[test]
fn h_zero_euclidean_duals() {
    let f2 = gf(2, 1);
    let f = poly(&f2, "x + 1");
    let g = poly(&f2, "x^3 + x + 1");
    let q = QcCode::new(&f2, 7, &f, &g, &Poly::zero(&f2)).unwrap();
    let (a, b) = q.dual_generators(DualForm::Euclidean).unwrap();
    assert!(a.first.is_zero());
    assert!(b.second.is_zero());
}

#[test]
fn rejects_bad_input() {
    let f2 = gf(2, 1);
    let one = Poly::one(&f2);
    let xn1 = Poly::xn_minus_1(&f2, 7);
    assert!(matches!(
        QcCode::new(&f2, 7, &xn1, &one, &one),
        Err(Error::DegreeTooLarge { .. })
    ));
    assert!(matches!(
        QcCode::new(&f2, 7, &poly(&f2, "x^2 + 1"), &one, &one),
        Err(Error::NotADivisor(_))
    ));
    assert!(QcCode::new(&f2, 7, &one, &one, &Poly::monomial(&f2, 1, 7)).is_err());
    assert!(matches!(
        QcCode::new(&f2, 6, &one, &one, &one),
        Err(Error::NotCoprime { .. })
    ));
    assert!(matches!(
        steane().dual_generators(DualForm::Hermitian),
        Err(Error::WrongFieldForHermitian)
    ));
}

#[test]
fn inner_product_examples() {
    let f3 = gf(3, 1);
    let mut u = vec![0u32; 6];
    u[1] = 1;
    let mut v = vec![0u32; 6];
    v[4] = 1;
    assert_eq!(inner_product(&f3, &u, &v, DualForm::Symplectic).unwrap(), 1);
    assert_eq!(inner_product(&f3, &v, &u, DualForm::Symplectic).unwrap(), 2);
    assert!(matches!(
        inner_product(&f3, &u, &v[..5], DualForm::Euclidean),
        Err(Error::LengthMismatch(6, 5))
    ));
    assert!(matches!(symplectic_weight(&[1, 0, 0]), Err(Error::OddLength(3))));
    assert_eq!(symplectic_weight(&[1, 0, 1, 0]).unwrap(), 1);
    assert_eq!(symplectic_weight(&[0; 8]).unwrap(), 0);

    let f9 = gf(3, 2);
    let z = f9.primitive();
    let e = [z, 0, 0];
    assert_eq!(inner_product(&f9, &e, &e, DualForm::Hermitian).unwrap(), f9.z_pow(4));
    assert!(inner_product(&f3, &[1], &[1], DualForm::Hermitian).is_err());
}

#[test]
fn normalization_replaces_g_by_gcd() {
    let f2 = gf(2, 1);
    let h = poly(&f2, "x^2 + x + 1");
    let f1 = poly(&f2, "x^3 + x + 1");
    let (q, changed) = QcCode::normalized(&f2, 7, &Poly::one(&f2), &h.mul(&f1), &h).unwrap();
    assert!(changed);
    assert_eq!(q.g(), &f1);
    // the literal generator spans the same module
    let lit = qc_span(
        &f2,
        7,
        &[
            GeneratorPair::new(&Poly::one(&f2), &h, 7),
            GeneratorPair::new(&Poly::zero(&f2), &h.mul(&f1), 7),
        ],
    );
    let s = q.row_space();
    assert!(lit.rank() == s.rank() && lit.contains_space(&s));
}

#[test]
fn hermitian_pair_over_gf4() {
    // over GF(4) with n = 5, x^5 - 1 = (x - 1)(x^2 + z x + 1)(x^2 + z^2 x + 1)
    let f4 = gf(2, 2);
    let facs = irreducible_factors_of_xn_minus_1(&f4, 5).unwrap();
    assert_eq!(facs.len(), 3);
    for f in &facs {
        for g in &facs {
            let q = QcCode::new(&f4, 5, f, &f.lcm(g).unwrap(), &poly(&f4, "x")).unwrap();
            let c = check_self_orth_condition(&q, DualForm::Hermitian);
            let o = verify_orthogonality(&q, DualForm::Hermitian).unwrap();
            assert!(o.duality_holds());
            if c.holds {
                assert!(o.dual_contained);
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Case {
    p: u64,
    r: u32,
    n: usize,
    fmask: u32,
    gmask: u32,
    h: Vec<u32>,
}

fn cases() -> impl Strategy<Value = Case> {
    let fields = prop::sample::select(vec![(2u64, 1u32), (3, 1), (2, 2), (3, 2)]);
    (fields, prop::sample::select(vec![5usize, 7, 8, 9, 11, 13, 15, 17]))
        .prop_filter("coprime", |&((p, _), n)| !(n as u64).is_multiple_of(p))
        .prop_flat_map(|((p, r), n)| {
            let q = p.pow(r) as u32;
            (
                Just((p, r, n)),
                any::<u32>(),
                any::<u32>(),
                prop::collection::vec(0..q, 0..n),
            )
        })
        .prop_map(|((p, r, n), fmask, gmask, h)| Case {
            p,
            r,
            n,
            fmask,
            gmask,
            h,
        })
}

fn build(c: &Case) -> QcCode {
    let field = gf(c.p, c.r);
    let facs = irreducible_factors_of_xn_minus_1(&field, c.n).unwrap();
    let pick = |mask: u32| {
        facs.iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 32) & 1 == 1)
            .fold(Poly::one(&field), |acc, (_, f)| acc.mul(f))
    };
    let mut f = pick(c.fmask);
    let mut g = pick(c.gmask);
    if f.deg() == c.n {
        f = Poly::one(&field);
    }
    if g.deg() == c.n {
        g = Poly::one(&field);
    }
    QcCode::new(&field, c.n, &f, &g, &Poly::new(&field, c.h.clone())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dimension_law(c in cases()) {
        let q = build(&c);
        prop_assert_eq!(q.row_space().rank(), q.dimension());
    }

    #[test]
    fn dual_complement_and_soundness(c in cases()) {
        let q = build(&c);
        for form in DualForm::ALL {
            if form == DualForm::Hermitian && q.field().sqrt_order().is_none() {
                continue;
            }
            let o = verify_orthogonality(&q, form).unwrap();
            prop_assert!(o.duality_holds(), "{:?}", o);
            if check_self_orth_condition(&q, form).holds {
                prop_assert!(o.dual_contained, "{} {}", q, form);
            }
        }
    }

    #[test]
    fn row_closure_under_shift(c in cases()) {
        let q = build(&c);
        let s = q.row_space();
        let n = q.n();
        for row in s.basis() {
            let shifted: Vec<u32> = (0..2 * n)
                .map(|j| if j < n { row[(j + n - 1) % n] } else { row[n + (j - n + n - 1) % n] })
                .collect();
            prop_assert!(s.contains(&shifted));
        }
    }

    #[test]
    fn bar_identity(c in cases(), a in prop::collection::vec(any::<u32>(), 40), b in prop::collection::vec(any::<u32>(), 40)) {
        let field = gf(c.p, c.r);
        let n = c.n;
        let q = field.order() as u32;
        let f = Poly::new(&field, c.h.clone());
        let g = Poly::new(&field, a.iter().take(n).map(|x| x % q).collect());
        let h = Poly::new(&field, b.iter().take(n).map(|x| x % q).collect());
        let lhs_v = Residue::from_poly(&f.mul(&g), n).to_vector();
        let fbar = reciprocal_bar(&f, n).unwrap();
        let rhs_v = fbar.mul(&Residue::from_poly(&h, n)).unwrap().to_vector();
        let lhs = inner_product(&field, &lhs_v, &Residue::from_poly(&h, n).to_vector(), DualForm::Euclidean).unwrap();
        let rhs = inner_product(&field, &Residue::from_poly(&g, n).to_vector(), &rhs_v, DualForm::Euclidean).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn bounds_below_exact_on_small_codes() {
    let opts = DistanceOptions::default();
    for (p, r, n) in [(2u64, 1u32, 7usize), (2, 1, 9), (3, 1, 4), (2, 2, 5)] {
        let field = gf(p, r);
        let facs = irreducible_factors_of_xn_minus_1(&field, n).unwrap();
        let hs: Vec<Poly> = field
            .elements()
            .flat_map(|a| field.elements().map(move |b| (a, b)))
            .map(|(a, b)| Poly::new(&field, vec![a, b, 1]))
            .filter(|h| h_admissible(h, n))
            .take(4)
            .collect();
        for mask_f in 0..(1u32 << facs.len()) {
            for mask_g in 0..(1u32 << facs.len()) {
                let pick = |m: u32| {
                    facs.iter()
                        .enumerate()
                        .filter(|(i, _)| m >> i & 1 == 1)
                        .fold(Poly::one(&field), |acc, (_, f)| acc.mul(f))
                };
                let (f, g) = (pick(mask_f), pick(mask_g));
                if f.deg() == n || g.deg() == n {
                    continue;
                }
                for h in &hs {
                    let q = QcCode::new(&field, n, &f, &g, h).unwrap();
                    if q.dimension() > 12 {
                        continue;
                    }
                    let ds = d_q_bound(&q, &opts).unwrap().value.lower;
                    let de = d_qe_bound(&q, &opts).unwrap().value.lower;
                    let ws = exact_qc_weights(&q, DualForm::Symplectic, &opts).unwrap();
                    let we = exact_qc_weights(&q, DualForm::Euclidean, &opts).unwrap();
                    assert!(ds <= ws.nonzero, "{q}: {ds} > {}", ws.nonzero);
                    assert!(de <= we.nonzero, "{q}: {de} > {}", we.nonzero);
                }
            }
        }
    }
}
