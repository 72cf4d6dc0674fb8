use qes_core::decompose::{enumerate_preservers, Decomposer, Status, T2Template, DEFAULT_CAP};
use qes_core::module::preserves;
use qes_core::rational::int;
use qes_core::{DiffOp, GeneratorFamily, ModuleSpec};

fn check_surjective(fam: GeneratorFamily, spec: ModuleSpec) {
    let dec = Decomposer::new(fam, spec).unwrap();
    let top = match spec {
        ModuleSpec::Poly1D(n) | ModuleSpec::Tri(n) => n,
        ModuleSpec::Rect(n, m) => n + m,
        ModuleSpec::Stair { p, .. } => p,
    };
    for op in enumerate_preservers(&spec, top, DEFAULT_CAP).unwrap() {
        let d = dec.express(&op).unwrap();
        let order = op.order().unwrap();
        assert!(d.residue.is_zero(), "{spec}: {op}");
        assert!(d.kernel_remainder.is_zero() || matches!(spec, ModuleSpec::Stair { .. }));
        assert!(d.min_poly_degree <= order, "{spec}: {op} needs degree {}", d.min_poly_degree);
    }
}

#[test]
fn one_dimensional_family_is_surjective() {
    for n in 0..=4 {
        check_surjective(GeneratorFamily::Sl2(n), ModuleSpec::Poly1D(n));
    }
}

#[test]
fn rectangular_family_is_surjective() {
    for n in 0..=3 {
        for m in 0..=3 {
            check_surjective(GeneratorFamily::G11(n, m), ModuleSpec::Rect(n, m));
        }
    }
}

#[test]
fn triangular_family_is_surjective() {
    for n in 0..=3 {
        check_surjective(GeneratorFamily::G15(n), ModuleSpec::Tri(n));
    }
}

#[test]
fn staircase_nonpositive_part_is_polynomial() {
    for p in 0..=5 {
        let spec = ModuleSpec::stair(2, p);
        let ModuleSpec::Stair { q, .. } = spec else { unreachable!() };
        let dec = Decomposer::new(GeneratorFamily::G24 { r: 2, p }, spec).unwrap();
        for op in enumerate_preservers(&spec, p, DEFAULT_CAP).unwrap() {
            let b = op.bidegree().unwrap();
            let d = dec.express(&op).unwrap();
            if b.y > 0 {
                assert_eq!(d.status(), Status::NotLieAlgebraic);
                assert_eq!(d.residue, op);
                continue;
            }
            let order = op.order().unwrap();
            assert!(d.residue.is_zero());
            assert!(d.min_poly_degree <= order, "p={p} {op}: degree {}", d.min_poly_degree);
            if order <= q {
                assert!(d.kernel_remainder.is_zero(), "p={p} {op}");
            }
        }
    }
}

#[test]
fn t2_template_is_complete() {
    for p in 4..=6 {
        let t = T2Template::new(p).unwrap();
        let spec = ModuleSpec::stair(2, p);
        for term in t.terms() {
            assert!(preserves(term, &spec), "p={p} {term}");
            assert!(spec.in_complement(term));
        }
    }
    for p in 4..=5 {
        let spec = ModuleSpec::stair(2, p);
        let space = enumerate_preservers(&spec, 2, DEFAULT_CAP).unwrap();
        assert_eq!(space.len(), 33);
        let t = T2Template::new(p).unwrap();
        let vecs: Vec<_> = t.terms().iter().chain(space.iter()).map(DiffOp::to_vector).collect();
        assert_eq!(qes_core::linalg::integer_rank(&vecs), 33);
    }
    let t = T2Template::new(4).unwrap();
    let dec = Decomposer::new(GeneratorFamily::G24 { r: 2, p: 4 }, ModuleSpec::stair(2, 4)).unwrap();
    for i in t.positive_y_indices() {
        let mut a = vec![int(0); 33];
        a[i - 1] = int(1);
        let d = dec.express(&t.instantiate(&a).unwrap()).unwrap();
        assert_eq!(d.status(), Status::NotLieAlgebraic);
        assert!(d.residue.bidegree_decompose().keys().all(|b| b.y > 0));
    }
}
