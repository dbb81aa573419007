use proptest::prelude::*;
use qpoly_hull::field::{Basis, Elem, FieldTower};
use qpoly_hull::frob::FrobFamily;
use qpoly_hull::gram::{hull_by_adjoint, hull_dim};
use qpoly_hull::linops::QPoly;
use qpoly_hull::oracle::{hull_by_definition, image_by_enumeration, trace_dual, trace_dual_enumerated, SubspaceFq};
use qpoly_hull::render::parse_elem;

const TOWERS: [(u32, u32, u32); 7] = [(2, 1, 2), (2, 1, 3), (2, 1, 4), (3, 1, 2), (3, 1, 3), (2, 2, 2), (2, 2, 3)];

fn tower(i: usize) -> FieldTower {
    let (p, r, m) = TOWERS[i % TOWERS.len()];
    FieldTower::build(p, r, m).unwrap()
}

fn elem(t: &FieldTower, seed: u64) -> Elem {
    Elem((seed % t.top().order()) as u32)
}

fn qpoly(t: &FieldTower, seeds: &[u64]) -> QPoly {
    let c: Vec<Elem> = seeds.iter().take(t.m() as usize).map(|&s| elem(t, s)).collect();
    QPoly::new(t, &c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjoint_is_an_involution(i in 0usize..7, c in prop::collection::vec(any::<u64>(), 4)) {
        let t = tower(i);
        let l = qpoly(&t, &c);
        prop_assert_eq!(l.adjoint(&t).adjoint(&t), l);
    }

    #[test]
    fn adjoint_reverses_composition(i in 0usize..7, a in prop::collection::vec(any::<u64>(), 4), b in prop::collection::vec(any::<u64>(), 4)) {
        let t = tower(i);
        let (f, g) = (qpoly(&t, &a), qpoly(&t, &b));
        let lhs = f.compose(&t, &g).unwrap().adjoint(&t);
        let rhs = g.adjoint(&t).compose(&t, &f.adjoint(&t)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_matches_evaluation(i in 0usize..7, a in prop::collection::vec(any::<u64>(), 4), b in prop::collection::vec(any::<u64>(), 4), x in any::<u64>()) {
        let t = tower(i);
        let (f, g) = (qpoly(&t, &a), qpoly(&t, &b));
        let x = elem(&t, x);
        prop_assert_eq!(f.compose(&t, &g).unwrap().eval(&t, x), f.eval(&t, g.eval(&t, x)));
    }

    #[test]
    fn trace_pairing_identity(i in 0usize..7, c in prop::collection::vec(any::<u64>(), 4), x in any::<u64>(), y in any::<u64>()) {
        let t = tower(i);
        let l = qpoly(&t, &c);
        let (x, y) = (elem(&t, x), elem(&t, y));
        let top = t.top();
        prop_assert_eq!(t.trace(top.mul(l.eval(&t, x), y)), t.trace(top.mul(x, l.adjoint(&t).eval(&t, y))));
    }

    #[test]
    fn hull_routes_agree(i in 0usize..7, c in prop::collection::vec(any::<u64>(), 4)) {
        let t = tower(i);
        let phi = qpoly(&t, &c);
        prop_assume!(!phi.is_zero());
        let by_def = hull_by_definition(&t, &image_by_enumeration(&t, &phi).unwrap()).unwrap();
        prop_assert_eq!(hull_by_adjoint(&t, &phi).unwrap(), by_def);
        prop_assert_eq!(hull_dim(&t, &phi, &Basis::normal(&t)).unwrap().hull_dim, by_def);
        prop_assert_eq!(hull_dim(&t, &phi, t.polynomial_basis()).unwrap().hull_dim, by_def);
    }

    #[test]
    fn hull_is_bounded_by_code_and_dual(i in 0usize..7, c in prop::collection::vec(any::<u64>(), 4)) {
        let t = tower(i);
        let phi = qpoly(&t, &c);
        prop_assume!(!phi.is_zero());
        let r = hull_dim(&t, &phi, t.polynomial_basis()).unwrap();
        let m = t.m() as usize;
        prop_assert!(r.hull_dim <= r.rank_operator.min(m - r.rank_operator));
    }

    #[test]
    fn dual_routes_agree(i in 0usize..7, seeds in prop::collection::vec(any::<u64>(), 0..4)) {
        let t = tower(i);
        let elems: Vec<Elem> = seeds.iter().map(|&s| elem(&t, s)).collect();
        let s = SubspaceFq::span(&t, &elems);
        let a = trace_dual(&t, &s).unwrap();
        prop_assert_eq!(a.dim() + s.dim(), t.m() as usize);
        prop_assert!(a.same_as(&t, &trace_dual_enumerated(&t, &s).unwrap()));
    }

    #[test]
    fn frobenius_hull_invariant_under_base_scaling(i in 0usize..7, l in any::<u64>(), u in any::<u64>(), s in any::<u64>()) {
        let t = tower(i);
        prop_assume!(t.m() >= 2);
        let fam = FrobFamily::new(&t, 1).unwrap();
        let (l, u) = (elem(&t, l), elem(&t, u));
        prop_assume!(!(l.is_zero() && u.is_zero()));
        let c = t.from_base(Elem(1 + (s % (t.q() - 1)) as u32));
        let top = t.top();
        let a = fam.hull(&t, l, u).unwrap();
        let b = fam.hull(&t, top.mul(c, l), top.mul(c, u)).unwrap();
        prop_assert_eq!(a.hull_dim, b.hull_dim);
        prop_assert_eq!(a.case(), b.case());
    }

    #[test]
    fn rendering_round_trips(i in 0usize..7, x in any::<u64>()) {
        let t = tower(i);
        let x = elem(&t, x);
        prop_assert_eq!(parse_elem(t.top(), &t.render(x), 'a').unwrap(), x);
    }
}
