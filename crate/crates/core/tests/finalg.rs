//! Artinian engine against brute-force oracles on small algebras.

use trace_lab::finalg::{product_algebra, FinAlgebra, IdealSubspace};
use trace_lab::linalg::Vector;
use trace_lab::Caps;

fn alg(p: u64, vars: &[&str], rels: &[&str]) -> FinAlgebra {
    FinAlgebra::from_strings(p, vars, rels).unwrap()
}

fn ideal(a: &FinAlgebra, gens: &[&str]) -> IdealSubspace {
    let gens: Vec<Vector> = gens.iter().map(|g| a.parse_element(g).unwrap()).collect();
    a.ideal_generate(&gens)
}

fn small_catalog() -> Vec<FinAlgebra> {
    vec![
        alg(2, &[], &[]),
        alg(2, &["x"], &["x^2"]),
        alg(2, &["x"], &["x^3"]),
        alg(3, &["x"], &["x^3"]),
        alg(2, &["x", "y"], &["x^2", "y^2"]),
        alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]),
        alg(3, &["x", "y"], &["x^2", "x*y", "y^2"]),
        alg(2, &["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]),
    ]
}

/// Every `F_p`-linear map from `i` into the whole algebra that commutes
/// with multiplication by basis elements, found by listing all matrices.
fn brute_force_hom_images(a: &FinAlgebra, i: &IdealSubspace) -> Vec<Vec<Vector>> {
    let f = a.field();
    let p = f.characteristic();
    let d = a.dim();
    let n = i.dim();
    let entries = n * d;
    let total = p.pow(entries as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        // images of the basis rows of i
        let mut images = vec![vec![0u64; d]; n];
        for img in images.iter_mut() {
            for c in img.iter_mut() {
                *c = code % p;
                code /= p;
            }
        }
        let apply = |v: &[u64]| -> Vector {
            let coords = i.coordinates(&f, v).unwrap();
            let mut acc = vec![0; d];
            for (c, img) in coords.iter().zip(&images) {
                for (x, y) in acc.iter_mut().zip(img) {
                    *x = f.add(*x, f.mul(*c, *y));
                }
            }
            acc
        };
        let linear = (0..d).all(|k| {
            let bk = a.basis_vector(k);
            i.rows().iter().zip(&images).all(|(u, img)| apply(&a.mul(&bk, u)) == a.mul(&bk, img))
        });
        if linear {
            out.push(images);
        }
    }
    out
}

fn brute_force_trace(a: &FinAlgebra, i: &IdealSubspace) -> IdealSubspace {
    let images: Vec<Vector> = brute_force_hom_images(a, i).into_iter().flatten().collect();
    a.span(images)
}

#[test]
fn ideal_generation_examples() {
    let a = alg(2, &["x"], &["x^3"]);
    assert_eq!(ideal(&a, &["x"]), a.span(vec![vec![0, 1, 0], vec![0, 0, 1]]));
    assert_eq!(ideal(&a, &["1"]), a.unit_ideal());
    assert_eq!(a.ideal_generate(&[]), a.zero_ideal());
    assert_eq!(a.render_ideal(&ideal(&a, &["x"])), "(x, x^2)");
}

#[test]
fn product_examples() {
    let a = alg(2, &["x", "y"], &["x^2", "y^2"]);
    assert_eq!(a.ideal_product(&ideal(&a, &["x"]), &ideal(&a, &["y"])), ideal(&a, &["x*y"]));
    let i = ideal(&a, &["x", "y"]);
    assert_eq!(a.ideal_product(&i, &a.unit_ideal()), i);
    let b = alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let m = b.maximal_ideal();
    assert!(b.ideal_product(&m, &m).is_zero());
}

#[test]
fn annihilator_and_colon_examples() {
    let b = alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    assert_eq!(b.annihilator(&ideal(&b, &["x"])), b.maximal_ideal());
    assert!(b.annihilator(&b.unit_ideal()).is_zero());
    let a = alg(2, &["x"], &["x^3"]);
    assert_eq!(a.annihilator(&ideal(&a, &["x^2"])), ideal(&a, &["x"]));
    assert_eq!(a.colon(&ideal(&a, &["x^2"]), &ideal(&a, &["x"])), ideal(&a, &["x"]));
    for alg in small_catalog() {
        for i in alg.enumerate_ideals(&Caps::default()).unwrap() {
            assert_eq!(alg.colon(&i, &alg.unit_ideal()), i);
            assert_eq!(alg.colon(&alg.zero_ideal(), &i), alg.annihilator(&i));
        }
    }
}

#[test]
fn colon_matches_elementwise_oracle() {
    for a in small_catalog() {
        let f = a.field();
        let ideals = a.enumerate_ideals(&Caps::default()).unwrap();
        for i in &ideals {
            for j in &ideals {
                let c = a.colon(i, j);
                for r in a.elements() {
                    let member = j.rows().iter().all(|w| i.contains(&f, &a.mul(&r, w)));
                    assert_eq!(c.contains(&f, &r), member, "{}: {:?} : {:?}", a.name(), i, j);
                }
            }
        }
    }
}

#[test]
fn hom_examples() {
    let a = alg(2, &["x"], &["x^3"]);
    let x = ideal(&a, &["x"]);
    let r = a.unit_ideal();
    assert_eq!(a.hom_module(&x, &r).dim(), 2);
    assert_eq!(brute_force_hom_images(&a, &x).len(), 4);
    assert_eq!(a.hom_module(&a.zero_ideal(), &x).dim(), 0);
    for j in a.enumerate_ideals(&Caps::default()).unwrap() {
        assert_eq!(a.hom_module(&r, &j).dim(), j.dim());
    }
}

#[test]
fn hom_dimension_matches_brute_force() {
    for a in small_catalog() {
        let p = a.field().characteristic();
        for i in a.enumerate_ideals(&Caps::default()).unwrap() {
            if i.dim() * a.dim() > 12 {
                continue;
            }
            let count = brute_force_hom_images(&a, &i).len() as u64;
            let h = a.hom_module(&i, &a.unit_ideal());
            assert_eq!(count, p.pow(h.dim() as u32), "{} {:?}", a.name(), i);
            // every basis map really is R-linear
            for m in &h.maps {
                for k in 0..a.dim() {
                    let bk = a.basis_vector(k);
                    for u in i.rows() {
                        let lhs = a.apply_hom(&h, m, &a.mul(&bk, u)).unwrap();
                        let rhs = a.mul(&bk, &a.apply_hom(&h, m, u).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn trace_examples() {
    let a = alg(2, &["x"], &["x^3"]);
    assert_eq!(a.trace_ideal(&ideal(&a, &["x"])), ideal(&a, &["x"]));
    let b = alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    assert_eq!(b.trace_ideal(&ideal(&b, &["x"])), b.maximal_ideal());
    assert_eq!(b.trace_ideal(&b.unit_ideal()), b.unit_ideal());
    assert!(b.trace_ideal(&b.zero_ideal()).is_zero());
}

#[test]
fn trace_matches_brute_force() {
    for a in small_catalog() {
        for i in a.enumerate_ideals(&Caps::default()).unwrap() {
            if i.dim() * a.dim() > 12 {
                continue;
            }
            assert_eq!(a.trace_ideal(&i), brute_force_trace(&a, &i), "{} {:?}", a.name(), i);
        }
    }
}

#[test]
fn trace_via_double_annihilator_examples() {
    let b = alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    assert_eq!(b.trace_principal_via_ann(&b.parse_element("x").unwrap()), b.maximal_ideal());
    assert_eq!(b.trace_principal_via_ann(&b.parse_element("1").unwrap()), b.unit_ideal());
    assert!(b.trace_principal_via_ann(&b.zero()).is_zero());
}

/// Searches all invertible `F_p`-linear maps `i -> j` for an `R`-linear one.
fn brute_force_isomorphic(a: &FinAlgebra, i: &IdealSubspace, j: &IdealSubspace) -> bool {
    let f = a.field();
    let p = f.characteristic();
    let n = i.dim();
    if n != j.dim() {
        return false;
    }
    for mut code in 0..p.pow((n * n) as u32) {
        let mut m = vec![vec![0u64; n]; n];
        for row in m.iter_mut() {
            for c in row.iter_mut() {
                *c = code % p;
                code /= p;
            }
        }
        if trace_lab::linalg::rank(&f, &m) != n {
            continue;
        }
        let apply = |v: &[u64]| j.combine(&f, &trace_lab::linalg::apply(&f, &m, &i.coordinates(&f, v).unwrap()));
        let linear = (0..a.dim()).all(|k| {
            let bk = a.basis_vector(k);
            i.rows().iter().all(|u| apply(&a.mul(&bk, u)) == a.mul(&bk, &apply(u)))
        });
        if linear {
            return true;
        }
    }
    false
}

#[test]
fn isomorphism_examples() {
    let budget = Caps::default().hom_budget();
    let a = alg(2, &["x", "y"], &["x^2", "y^2"]);
    let (x, y) = (ideal(&a, &["x"]), ideal(&a, &["y"]));
    // ann((x)) = (x) but ann((y)) = (y): swapping x and y is a ring map, not R-linear
    assert!(!brute_force_isomorphic(&a, &x, &y));
    assert!(!a.is_isomorphic(&x, &y, budget).unwrap());
    let b = alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let (bx, by) = (ideal(&b, &["x"]), ideal(&b, &["y"]));
    assert!(brute_force_isomorphic(&b, &bx, &by));
    let iso = b.find_isomorphism(&bx, &by, budget).unwrap().expect("both are copies of the residue field");
    assert_eq!(iso.matrix, vec![vec![1]]);
    assert!(!b.is_isomorphic(&bx, &b.maximal_ideal(), budget).unwrap());
    assert!(b.is_isomorphic(&b.maximal_ideal(), &b.maximal_ideal(), budget).unwrap());
}

#[test]
fn isomorphism_matches_brute_force() {
    let budget = Caps::default().hom_budget();
    for a in small_catalog() {
        let ids = a.enumerate_ideals(&Caps::default()).unwrap();
        for i in &ids {
            for j in &ids {
                if i.dim() == j.dim() && i.dim() <= 3 {
                    assert_eq!(
                        a.is_isomorphic(i, j, budget).unwrap(),
                        brute_force_isomorphic(&a, i, j),
                        "{} {:?} {:?}",
                        a.name(),
                        i,
                        j
                    );
                }
            }
        }
    }
}

#[test]
fn isomorphism_budget_is_enforced() {
    let b = alg(2, &["x", "y", "z"], &["x^2", "y^2", "z^2", "x*y", "x*z", "y*z"]);
    let m = b.maximal_ideal();
    let other = ideal(&b, &["x", "y", "z"]);
    assert_eq!(m, other);
    let i = ideal(&b, &["x", "y"]);
    let j = ideal(&b, &["y", "z"]);
    // Hom(i, j) is all 4 linear maps between two square-zero planes: 2^4 > 2^3
    assert!(b.is_isomorphic(&i, &j, 1 << 3).is_err());
    assert!(b.is_isomorphic(&i, &j, 1 << 4).unwrap());
}

#[test]
fn gorenstein_examples() {
    assert!(alg(2, &["x", "y"], &["x^2", "y^2"]).is_gorenstein());
    assert!(!alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]).is_gorenstein());
    assert!(alg(2, &[], &[]).is_gorenstein());
}

#[test]
fn enumeration_examples() {
    let caps = Caps::default();
    let a = alg(2, &["x"], &["x^3"]);
    let ids = a.enumerate_ideals(&caps).unwrap();
    let rendered: Vec<String> = ids.iter().map(|i| a.render_ideal(i)).collect();
    assert_eq!(rendered, ["(0)", "(x^2)", "(x, x^2)", "(1, x, x^2)"]);
    let b = alg(2, &["x", "y"], &["x^2", "x*y", "y^2"]);
    let ids = b.enumerate_ideals(&caps).unwrap();
    assert_eq!(ids.len(), 6);
    for g in ["x", "y", "x+y"] {
        assert!(ids.contains(&ideal(&b, &[g])));
    }
    assert_eq!(alg(2, &[], &[]).enumerate_ideals(&caps).unwrap().len(), 2);
    // over F_3 the plane m contains four lines
    let c = alg(3, &["x", "y"], &["x^2", "x*y", "y^2"]);
    assert_eq!(c.enumerate_ideals(&caps).unwrap().len(), 7);
}

#[test]
fn enumeration_cap() {
    let a = alg(3, &["x"], &["x^5"]);
    assert!(a.enumerate_ideals(&Caps::default()).is_err());
    let raised = Caps { dim: Some(5), ..Caps::default() };
    assert_eq!(a.enumerate_ideals(&raised).unwrap().len(), 6);
}

#[test]
fn enumerated_ideals_are_exactly_the_closed_element_sets() {
    // every ideal generated by a pair of elements shows up in the enumeration
    for a in small_catalog() {
        let ids = a.enumerate_ideals(&Caps::default()).unwrap();
        let elems: Vec<Vector> = a.elements().collect();
        for x in &elems {
            for y in &elems {
                assert!(ids.contains(&a.ideal_generate(&[x.clone(), y.clone()])));
            }
        }
    }
}

#[test]
fn product_trace_examples() {
    let caps = Caps::default();
    let a = alg(2, &["x"], &["x^2"]);
    let k = alg(2, &[], &[]);
    let p = product_algebra(&a, &k).unwrap();
    assert_eq!(p.dim(), 3);
    let x0 = p.ideal_generate(&[p.parse_element("e1*x").unwrap()]);
    assert_eq!(p.trace_ideal(&x0), x0);
    assert_eq!(p.trace_ideal(&p.unit_ideal()), p.unit_ideal());
    let zero_b = p.ideal_generate(&[p.parse_element("e2").unwrap()]);
    assert_eq!(p.trace_ideal(&zero_b), zero_b);
    assert_eq!(p.enumerate_ideals(&caps).unwrap().len(), 6);
}
