use std::sync::Arc;

use super::*;
use crate::module::{FPModule, ModuleMap};
use crate::ring::{Field, Ideal, PolyMatrix, PolyRing, Polynomial};

fn ring(p: u32, vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(Field::from_characteristic(p).unwrap(), vars).unwrap()
}

fn poly(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

fn matrix_map(r: &Arc<PolyRing>, rows: &[Vec<&str>], degree: i64) -> ModuleMap {
    // rows are images of the source generators
    let src = FPModule::free(r, vec![0; rows.len()]);
    let tgt = FPModule::free(r, vec![0; rows[0].len()]);
    ModuleMap::from_matrix(&src, &tgt, &PolyMatrix::parse(r, rows).unwrap(), degree).unwrap()
}

#[test]
fn trivial_determinantal_ideals() {
    let r = ring(0, &["x", "y"]);
    let a3 = FPModule::free_rank(&r, 3);
    let id = ModuleMap::identity(&a3);
    for t in 0..3 {
        assert!(determinantal_ideal(&id, t).unwrap().is_unit().unwrap());
    }
    assert!(determinantal_ideal(&id, 3).unwrap().is_zero());
    let z = ModuleMap::zero(&a3, &FPModule::free_rank(&r, 2));
    assert!(determinantal_ideal(&z, 0).unwrap().is_zero());
}

#[test]
fn symmetric_matrix_in_characteristic_two() {
    let rows = vec![vec!["0", "X1", "X2"], vec!["X1", "0", "X3"], vec!["X2", "X3", "0"]];
    let r2 = ring(2, &["X1", "X2", "X3"]);
    let f = matrix_map(&r2, &rows, 1);
    assert!(determinantal_ideal(&f, 2).unwrap().is_zero());
    let rq = ring(0, &["X1", "X2", "X3"]);
    let f = matrix_map(&rq, &rows, 1);
    let det = evaluation_matrix(&f).unwrap().det().unwrap();
    assert_eq!(det.to_string(), "2*X1*X2*X3");
    let i = determinantal_ideal(&f, 2).unwrap();
    assert!(i.equals(&Ideal::new(&rq, vec![det]).unwrap()).unwrap());
}

#[test]
fn free_case_matches_minors() {
    let r = ring(0, &["x", "y", "z"]);
    let rows = vec![vec!["x", "y", "z"], vec!["y", "z", "x"]];
    let f = matrix_map(&r, &rows, 1);
    let mat = PolyMatrix::parse(&r, &rows).unwrap();
    let minors = Ideal::new(&r, mat.minors(2)).unwrap();
    assert!(determinantal_ideal(&f, 1).unwrap().equals(&minors).unwrap());
}

#[test]
fn order_ideals() {
    let r = ring(0, &["x", "y"]);
    let a2 = FPModule::free_rank(&r, 2);
    let i = order_ideal(&a2, &[poly(&r, "x"), poly(&r, "y")]).unwrap();
    assert!(i.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
    let c = FPModule::cyclic(&r, &[poly(&r, "x")]).unwrap();
    assert!(order_ideal(&c, &[poly(&r, "y")]).unwrap().is_zero());
}

#[test]
fn generic_ideal_on_free_modules() {
    let k = ring(0, &[]);
    let g = generic_determinantal_ideal(&FPModule::free_rank(&k, 2), &FPModule::free_rank(&k, 3), 1).unwrap();
    assert_eq!(g.sym.ring().nvars(), 6);
    assert_eq!(g.ideal.gens().len(), 3);
    assert_eq!(g.sym.quotient_dimension(&g.ideal).unwrap(), 4);
    let g = generic_determinantal_ideal(&FPModule::free_rank(&k, 1), &FPModule::free_rank(&k, 1), 0).unwrap();
    assert_eq!(g.ideal.gens().len(), 1);
    assert_eq!(g.ideal.gens()[0].to_string(), "T1");
    let g = generic_determinantal_ideal(&FPModule::free_rank(&k, 2), &FPModule::free_rank(&k, 2), 2).unwrap();
    assert!(g.ideal.is_zero());
}

#[test]
fn symmetric_and_alternating_generic_matrices() {
    let k = ring(0, &[]);
    let m = FPModule::free_rank(&k, 3);
    let l = FPModule::free_rank(&k, 1);
    let s = bilinear_determinantal_ideal(&m, &l, 1, false).unwrap();
    assert!(s.epsilon.is_symmetric());
    assert_eq!(s.sym.ring().nvars(), 6);
    let a = bilinear_determinantal_ideal(&m, &l, 2, true).unwrap();
    assert!(a.epsilon.is_alternating());
    assert_eq!(a.sym.ring().nvars(), 3);
}

#[test]
fn specialization_matches_direct_ideal() {
    let r = ring(0, &["x", "y", "z"]);
    // N = coker of a single relation, so Hom and duals are not free
    let n = FPModule::from_relations(&r, vec![0, 0, 0], vec![vec![poly(&r, "x"), poly(&r, "y"), poly(&r, "z")]]).unwrap();
    let m = FPModule::free(&r, vec![0, 0]);
    let images = vec![
        vec![poly(&r, "y"), poly(&r, "-x"), poly(&r, "0")],
        vec![poly(&r, "z"), poly(&r, "0"), poly(&r, "-x")],
    ];
    let f = ModuleMap::new(&m, &n, images, 1).unwrap();
    for t in 0..2 {
        let g = generic_determinantal_ideal(&m, &n, t).unwrap();
        let h = g.hom.element_of(f.images()).unwrap();
        let values = g.values_of(&h).unwrap();
        let special = phi_specialize(&g.sym, &values, &g.ideal).unwrap();
        assert!(special.equals(&determinantal_ideal(&f, t).unwrap()).unwrap());
    }
}

#[test]
fn rank_one_lift_and_shift() {
    let r = ring(0, &["x"]);
    let e = FPModule::free_rank(&r, 1);
    let sym = crate::module::symmetric_algebra(&e).unwrap();
    let i = Ideal::new(sym.ring(), vec![sym.t_var(0)]).unwrap();
    let lift = lift_phi(&sym, &[poly(&r, "x")], &[vec![poly(&r, "1")]], &i).unwrap();
    assert_eq!(lift.ideal.gens()[0].to_string(), "Y1 + x");
    assert!(lift.check_specialization(&sym).unwrap());
    let h = psi_homogenize(&lift).unwrap();
    assert_eq!(h.images[0].to_string(), "Y1");
    assert_eq!(h.shifts[0].to_string(), "x");

    let zero = lift_phi(&sym, &[poly(&r, "0")], &[vec![poly(&r, "1")]], &i).unwrap();
    let h = psi_homogenize(&zero).unwrap();
    assert!(h.shifts[0].is_zero());
    assert_eq!(h.images, zero.images);

    let unit = lift_phi(&sym, &[poly(&r, "1")], &[vec![poly(&r, "1")]], &i).unwrap();
    assert!(matches!(psi_homogenize(&unit), Err(crate::Error::Hypothesis(_))));
    assert!(lift_phi(&sym, &[poly(&r, "x")], &[vec![poly(&r, "x")]], &i).is_err());
}

#[test]
fn bound_reports() {
    let r = ring(0, &["x", "y"]);
    let a2 = FPModule::free_rank(&r, 2);
    let spec = DegeneracySpec::generic(ModuleMap::zero(&a2, &a2), 1, 2, 2).unwrap();
    let rep = verify_dimension_bound(&spec).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(rep.dim_locus, 2);
    assert_eq!(rep.tau, 1);

    let id = DegeneracySpec::generic(ModuleMap::identity(&a2), 1, 2, 2).unwrap();
    let rep = verify_dimension_bound(&id).unwrap();
    assert_eq!(rep.dim_locus, -1);
    assert_eq!(rep.verdict, Verdict::HypothesisUnmet);
    assert!(!rep.diagnostics.f_in_max_hom);

    let order = DegeneracySpec::order(a2.clone(), vec![poly(&r, "x"), poly(&r, "y")], 2).unwrap();
    let rep = verify_dimension_bound(&order).unwrap();
    assert_eq!((rep.dim_locus, rep.tau, rep.verdict), (0, 2, Verdict::Holds));
    assert!(DegeneracySpec::generic(ModuleMap::identity(&a2), 3, 2, 2).is_err());
}
