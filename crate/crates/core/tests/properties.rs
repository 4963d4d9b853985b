use epicyclic::arc::{self, ArcMorphism};
use epicyclic::bmod::{self, ChainMap, DeltaMorphism, Orientation};
use epicyclic::dualtrans::{self, ZVector};
use epicyclic::hyper::{self, SignedElem};
use epicyclic::permgeom::{self, SetMapFin};
use epicyclic::tropic::{TropElem, TropRatElem};
use proptest::prelude::*;

fn morphism(src: i64, dst: i64, degs: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = ArcMorphism> {
    degs.prop_flat_map(move |deg| {
        (prop::collection::vec(0..=deg * dst, src as usize), -3..=3i64).prop_map(move |(mut vals, shift)| {
            vals.sort_unstable();
            let vals: Vec<i64> = vals.iter().map(|v| v + shift * dst).collect();
            arc::normalize(src, dst, deg, &vals, 1).unwrap()
        })
    })
}

fn any_morphism() -> impl Strategy<Value = ArcMorphism> {
    (1..=6i64, 1..=6i64).prop_flat_map(|(n, m)| morphism(n, m, 0..=3))
}

fn chain(len: usize) -> impl Strategy<Value = Vec<ArcMorphism>> {
    prop::collection::vec(1..=5i64, len + 1).prop_flat_map(|ps| {
        ps.windows(2).map(|w| morphism(w[0], w[1], 0..=3)).collect::<Vec<_>>()
    })
}

fn linear_chain(len: usize) -> impl Strategy<Value = Vec<ArcMorphism>> {
    prop::collection::vec(1..=6i64, len + 1).prop_flat_map(|ps| {
        ps.windows(2).map(|w| morphism(w[0], w[1], 1..=1)).collect::<Vec<_>>()
    })
}

fn set_map() -> impl Strategy<Value = SetMapFin> {
    (1..=6i64, 1..=6i64).prop_flat_map(|(p, q)| {
        prop::collection::vec(0..q, p as usize).prop_map(move |t| SetMapFin::new(p, q, t).unwrap())
    })
}

fn chain_map(n: u32, m: u32) -> impl Strategy<Value = ChainMap> {
    prop::collection::vec(0..=m, n as usize).prop_map(move |mut t| {
        t.sort_unstable();
        t.insert(0, 0);
        ChainMap::new(n, m, Orientation::Primal, t).unwrap()
    })
}

fn delta_morphism(n: u32, m: u32) -> impl Strategy<Value = DeltaMorphism> {
    prop::collection::vec(1..=m, n as usize).prop_map(move |mut v| {
        v.sort_unstable();
        DeltaMorphism::new(n, m, v).unwrap()
    })
}

fn trop() -> impl Strategy<Value = TropElem> {
    prop_oneof![1 => Just(TropElem::Zero), 9 => (-1_000_000..1_000_000i64).prop_map(TropElem::Pow)]
}

proptest! {
    #[test]
    fn json_round_trip(f in any_morphism(), s in set_map(), v in -9..=9i64) {
        let back: ArcMorphism = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        prop_assert_eq!(back, f);
        let back: SetMapFin = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
        let e = SignedElem::from_signed(v);
        let back: SignedElem = serde_json::from_str(&serde_json::to_string(&e).unwrap()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn normalize_is_idempotent_and_shift_invariant(f in any_morphism(), j in -5..=5i64) {
        let shifted: Vec<i64> = f.vals().iter().map(|v| v + j * f.dst()).collect();
        prop_assert_eq!(&arc::normalize(f.src(), f.dst(), f.deg(), &shifted, 1).unwrap(), &f);
        prop_assert!((0..f.dst()).contains(&f.vals()[0]));
    }

    #[test]
    fn composition_is_associative_and_unital(fs in chain(3)) {
        let (f, g, h) = (&fs[0], &fs[1], &fs[2]);
        let lhs = arc::compose(&arc::compose(h, g).unwrap(), f).unwrap();
        let rhs = arc::compose(h, &arc::compose(g, f).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.deg(), f.deg() * g.deg() * h.deg());
        prop_assert_eq!(&arc::compose(f, &arc::identity(f.src(), 1).unwrap()).unwrap(), f);
        prop_assert_eq!(&arc::compose(&arc::identity(f.dst(), 1).unwrap(), f).unwrap(), f);
    }

    #[test]
    fn composite_is_pointwise(fs in chain(2), x in -30..30i64) {
        let gf = arc::compose(&fs[1], &fs[0]).unwrap();
        let diff = gf.eval(x) - fs[1].eval(fs[0].eval(x));
        prop_assert_eq!(diff.rem_euclid(gf.dst()), 0);
        prop_assert_eq!(diff, gf.eval(0) - fs[1].eval(fs[0].eval(0)));
    }

    #[test]
    fn transpose_is_adjoint(f in (1..=6i64, 1..=6i64).prop_flat_map(|(n, m)| morphism(n, m, 1..=1)),
                            x in -20..20i64, y in -20..20i64) {
        let t = dualtrans::transpose_at(&f, y).unwrap();
        prop_assert_eq!(f.eval(x) >= y, x >= t);
        prop_assert!(dualtrans::double_transpose_twist_check(&f).unwrap());
    }

    #[test]
    fn transpose_is_contravariant(fs in linear_chain(2)) {
        let (f, g) = (&fs[0], &fs[1]);
        let lhs = dualtrans::transpose(&arc::compose(g, f).unwrap()).unwrap();
        let rhs = arc::compose(&dualtrans::transpose(f).unwrap(), &dualtrans::transpose(g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_inverts_transpose(f in (1..=6i64, 1..=6i64).prop_flat_map(|(n, m)| morphism(n, m, 1..=1))) {
        let s = dualtrans::star_transpose(&f).unwrap();
        prop_assert_eq!(&dualtrans::transpose(&s).unwrap(), &f);
        prop_assert_eq!(dualtrans::star_transpose(&dualtrans::transpose(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn beta_twist_is_functorial(fs in chain(2), z in -20..20i64) {
        prop_assume!(fs.iter().all(|f| f.deg() >= 1));
        let zv = ZVector::from_integer(z, 1..=5).unwrap();
        let lhs = dualtrans::beta_twist(&arc::compose(&fs[1], &fs[0]).unwrap(), &zv).unwrap();
        let rhs = arc::compose(
            &dualtrans::beta_twist(&fs[1], &zv).unwrap(),
            &dualtrans::beta_twist(&fs[0], &zv).unwrap(),
        ).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lift_projects_back(s in set_map()) {
        let f = permgeom::lift(&s);
        prop_assert_eq!(&permgeom::project(&f).unwrap(), &s);
        prop_assert_eq!(f.deg(), permgeom::cdesc(&s));
        prop_assert_eq!(f.is_constant(), s.is_constant());
        if s.is_permutation() && s.src() >= 2 {
            prop_assert!((1..s.src()).contains(&f.deg()));
        }
    }

    #[test]
    fn projection_of_linear_map_has_at_most_one_descent(f in (1..=6i64, 1..=6i64).prop_flat_map(|(n, m)| morphism(n, m, 1..=1))) {
        let s = permgeom::project(&f).unwrap();
        prop_assert!(permgeom::cdesc(&s) <= 1);
    }

    #[test]
    fn hyper_addition_laws(n in 0..=8i64, x in -8..=8i64, y in -8..=8i64, z in -8..=8i64) {
        let clamp = |v: i64| SignedElem::from_signed(v.clamp(-n, n));
        let (x, y, z) = (clamp(x), clamp(y), clamp(z));
        let xy = hyper::hyper_add(x, y, n).unwrap();
        prop_assert_eq!(&xy, &hyper::hyper_add(y, x, n).unwrap());
        prop_assert!(hyper::hyper_add(x, -x, n).unwrap().contains(&SignedElem::ZERO));
        let one = |e: SignedElem| std::iter::once(e).collect::<hyper::HyperSet>();
        prop_assert_eq!(
            hyper::smile_sets(&xy, &one(z)),
            hyper::smile_sets(&one(x), &hyper::hyper_add(y, z, n).unwrap())
        );
        if hyper::hyper_add(y, z, n).unwrap().contains(&x) {
            prop_assert!(hyper::hyper_add(x, -y, n).unwrap().contains(&z));
        }
        for l in -1..=1 {
            let scaled: hyper::HyperSet = xy.iter().map(|e| e.scale(l)).collect();
            prop_assert_eq!(scaled, hyper::smile(x.scale(l), y.scale(l)));
        }
    }

    #[test]
    fn tropic_semifield_laws(x in trop(), y in trop(), z in trop()) {
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x + x, x);
        prop_assert!(x + y == x || x + y == y);
        if let Some(inv) = x.inverse() {
            prop_assert_eq!(x * inv, TropElem::ONE);
        }
    }

    #[test]
    fn rational_frobenius_is_multiplicative(a in -50..50i64, b in 1..10i64, n in 1..10i64, m in 1..10i64) {
        let x = TropRatElem::pow(a, b).unwrap();
        let r = |p: i64, q: i64| num_rational::Ratio::new(p, q);
        let lhs = x.frobenius(r(n, m)).unwrap().frobenius(r(m, n)).unwrap();
        prop_assert_eq!(lhs, x);
    }

    #[test]
    fn b_transpose_is_an_adjoint_involution(f in (0..=6u32, 0..=6u32).prop_flat_map(|(n, m)| chain_map(n, m)),
                                            x in 0..=6u32, y in 0..=6u32) {
        let t = bmod::b_transpose(&f);
        prop_assert_eq!(&bmod::b_transpose(&t), &f);
        let (x, y) = (x.min(f.src_rank()), y.min(f.dst_rank()));
        prop_assert_eq!(f.apply(x) <= y, x <= t.apply(y));
        prop_assert_eq!(bmod::b_pairing(f.apply(x), y), bmod::b_pairing(x, t.apply(y)));
    }

    #[test]
    fn delta_to_lambda_is_a_functor(
        (f, g) in (1..=5u32, 1..=5u32, 1..=5u32).prop_flat_map(|(a, b, c)| (delta_morphism(a, b), delta_morphism(b, c)))
    ) {
        let gf = bmod::delta_compose(&g, &f).unwrap();
        prop_assert_eq!(bmod::delta_to_lambda(&gf), bmod::lift_compose(&g, &f).unwrap());
        prop_assert_eq!(bmod::lambda_to_delta(&bmod::delta_to_lambda(&f)), Some(f));
    }
}
