use num_traits::Zero;
use terwilliger::exactnum::{int, Rational};
use terwilliger::linalg::{kernel_basis, Matrix, SpanTracker};
use terwilliger::matgroup::{builtin_group, generate_group, GroupName, Mat2};
use terwilliger::reference;
use terwilliger::scheme::{build_scheme, AssociationScheme};
use terwilliger::terwilliger::*;

fn scheme(g: GroupName) -> AssociationScheme {
    build_scheme(builtin_group(g)).unwrap()
}

fn flat(m: &Matrix<Rational>) -> Vec<Rational> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn adjacency(s: &AssociationScheme) -> Vec<Matrix<Rational>> {
    (0..s.class_count())
        .map(|i| s.adjacency_matrix(i).to_dense())
        .collect()
}

fn duals(s: &AssociationScheme) -> Vec<Matrix<Rational>> {
    dual_idempotents(s).iter().map(|m| m.to_dense()).collect()
}

/// Algebra generated by the A_i and E_i*, by brute-force pairwise products of full matrices.
fn brute_force_algebra(s: &AssociationScheme) -> Vec<Matrix<Rational>> {
    let n = s.order();
    let mut span = SpanTracker::new(n * n);
    let mut members = Vec::new();
    for m in adjacency(s).into_iter().chain(duals(s)) {
        if span.add_dense(&flat(&m)).unwrap() {
            members.push(m);
        }
    }
    let mut start = 0;
    loop {
        let end = members.len();
        let mut fresh = Vec::new();
        for a in 0..end {
            for b in 0..end {
                if a < start && b < start {
                    continue;
                }
                let p = members[a].mul(&members[b]);
                if span.add_dense(&flat(&p)).unwrap() {
                    fresh.push(p);
                }
            }
        }
        if fresh.is_empty() {
            return members;
        }
        start = end;
        members.extend(fresh);
    }
}

#[test]
fn dual_idempotent_properties() {
    let trivial = build_scheme(generate_group(&[Mat2::identity()], 4).unwrap()).unwrap();
    let e = duals(&trivial);
    assert_eq!(e, vec![Matrix::from_rows(vec![vec![int(1)]])]);

    let s = scheme(GroupName::III);
    let e = duals(&s);
    let sizes = s.classes().sizes();
    let mut total = Matrix::zeros(s.order(), s.order());
    for (i, m) in e.iter().enumerate() {
        let trace: Rational = (0..s.order()).map(|x| m.get(x, x).clone()).sum();
        assert_eq!(trace, int(sizes[i] as i64));
        assert_eq!(m.mul(m), *m);
        for (j, other) in e.iter().enumerate() {
            if i != j {
                assert!(m.mul(other).is_zero());
            }
        }
        for r in 0..s.order() {
            for c in 0..s.order() {
                let v = total.get(r, c) + m.get(r, c);
                total.set(r, c, v);
            }
        }
    }
    assert_eq!(total, Matrix::identity(s.order()));
}

#[test]
fn triple_products_vanish_with_intersection_numbers_and_span_g1() {
    let s = scheme(GroupName::I);
    let (a, e) = (adjacency(&s), duals(&s));
    let d1 = s.class_count();
    let mut span = SpanTracker::new(s.order() * s.order());
    for i in 0..d1 {
        for (j, aj) in a.iter().enumerate() {
            for k in 0..d1 {
                let m = e[i].mul(aj).mul(&e[k]);
                assert_eq!(m.is_zero(), s.p(i, j, k) == 0, "({i},{j},{k})");
                span.add_dense(&flat(&m)).unwrap();
            }
        }
    }
    assert_eq!(span.rank(), 64);
}

#[test]
fn closure_matches_brute_force_on_small_groups() {
    for g in [GroupName::I, GroupName::IV] {
        let s = scheme(g);
        let t = TAlgebra::build(&s, DEFAULT_MAX_DEPTH).unwrap();
        let brute = brute_force_algebra(&s);
        assert_eq!(t.dim(), brute.len(), "{g:?}");
        // every computed basis element lies in the brute-force algebra
        let n = s.order();
        let mut span = SpanTracker::new(n * n);
        for m in &brute {
            span.add_dense(&flat(m)).unwrap();
        }
        for b in t.basis() {
            let m = b.element.to_sparse(&t.layout).to_dense();
            assert!(!span.add_dense(&flat(&m)).unwrap());
        }
    }
}

#[test]
fn closure_certifies_depth_two_and_respects_bounds() {
    for g in [GroupName::I, GroupName::III, GroupName::IV] {
        let s = scheme(g);
        let layout = BlockLayout::new(&s);
        let gens = all_generators(&s, &layout);
        let c = basis_closure(&layout, &gens, 2).unwrap();
        assert_eq!(c.stabilization_depth, 2);
        assert_eq!(c.basis.len(), reference::dimension(g));
        assert!(s.dimension_lower_bound() <= c.basis.len());
        assert!(c.basis.len() <= s.dimension_upper_bound());
        for b in &c.basis {
            assert!(b.element.entries.iter().all(|&v| v >= 0));
            if b.depth == 1 {
                assert!(b.element.entries.iter().all(|&v| v == 0 || v == 1));
            }
        }
    }
}

#[test]
fn closure_rejects_small_depth_and_reports_growth() {
    // one class of size 3, the single generator a 3-cycle: P, P², P³ = I need depth 3
    let layout = BlockLayout {
        classes: vec![vec![0, 1, 2]],
        class_of: vec![0; 3],
        position: vec![0, 1, 2],
    };
    let cycle = GeneratorBlock {
        source: 0,
        relation: 0,
        target: 0,
        cols: 3,
        ones: vec![vec![1], vec![2], vec![0]],
    };
    let gens = vec![vec![cycle]];
    assert!(matches!(
        basis_closure(&layout, &gens, 1),
        Err(TerwilligerError::BadDepth(1))
    ));
    assert!(matches!(
        basis_closure(&layout, &gens, 3),
        Err(TerwilligerError::DepthExceeded { depth: 3, rank: 3 })
    ));
    let c = basis_closure(&layout, &gens, 4).unwrap();
    assert_eq!(
        (c.basis.len(), c.stabilization_depth, c.spanning_depth),
        (3, 4, 3)
    );
    assert_eq!(c.rank_by_round, vec![1, 2, 3]);
}

#[test]
fn identity_class_blocks_are_one_dimensional() {
    let s = scheme(GroupName::IV);
    let brute = brute_force_algebra(&s);
    let e = duals(&s);
    for k in 0..s.class_count() {
        for (row, col) in [(0, k), (k, 0)] {
            let mut span = SpanTracker::new(s.order() * s.order());
            for m in &brute {
                span.add_dense(&flat(&e[row].mul(m).mul(&e[col]))).unwrap();
            }
            assert_eq!(span.rank(), 1, "block ({row},{col})");
        }
    }
    let t = TAlgebra::build(&s, DEFAULT_MAX_DEPTH).unwrap();
    for k in 0..s.class_count() {
        assert_eq!(t.block_counts[0][k], 1);
        assert_eq!(t.block_counts[k][0], 1);
    }
}

#[test]
fn block_counts_match_published_tables_up_to_permutation() {
    for g in [GroupName::I, GroupName::III, GroupName::IV] {
        let s = scheme(g);
        let t = TAlgebra::build(&s, DEFAULT_MAX_DEPTH).unwrap();
        let total: usize = t.block_counts.iter().flatten().sum();
        assert_eq!(total, t.dim());
        let outcome = match_block_counts(
            &s.classes().sizes(),
            &t.block_counts,
            &reference::class_sizes(g),
            &reference::block_counts(g),
        );
        assert!(
            matches!(outcome, MatchOutcome::Matched(_)),
            "{g:?}: {outcome:?}"
        );
    }
}

#[test]
fn center_agrees_with_full_commutation_system() {
    let s = scheme(GroupName::I);
    let t = TAlgebra::build(&s, DEFAULT_MAX_DEPTH).unwrap();
    assert_eq!(t.center_dim(), 5);
    // y = Σ c_m b_m over diagonal-block basis elements, commuting with every basis element
    let full: Vec<Matrix<Rational>> = t
        .basis()
        .iter()
        .map(|b| b.element.to_sparse(&t.layout).to_dense())
        .collect();
    let diag: Vec<usize> = (0..full.len())
        .filter(|&m| t.basis()[m].element.source == t.basis()[m].element.target)
        .collect();
    let mut rows = Vec::new();
    for b in &full {
        let comms: Vec<Vec<Rational>> = diag
            .iter()
            .map(|&m| {
                let (l, r) = (full[m].mul(b), b.mul(&full[m]));
                flat(&l).iter().zip(flat(&r)).map(|(x, y)| x - y).collect()
            })
            .collect();
        for e in 0..s.order() * s.order() {
            rows.push(comms.iter().map(|c| c[e].clone()).collect::<Vec<_>>());
        }
    }
    let kernel = kernel_basis(&Matrix::from_rows(rows));
    assert_eq!(kernel.len(), t.center_dim());
    // computed center elements commute with every basis element; identity is in their span
    let mut span = SpanTracker::new(s.order() * s.order());
    for z in &t.center.elements {
        let z = z.to_sparse(&t.layout).to_dense();
        for b in &full {
            assert_eq!(z.mul(b), b.mul(&z));
        }
        span.add_dense(&flat(&z)).unwrap();
    }
    assert!(!span.add_dense(&flat(&Matrix::identity(s.order()))).unwrap());
}

#[test]
fn center_dimensions() {
    for g in [GroupName::I, GroupName::III, GroupName::IV] {
        let t = TAlgebra::build(&scheme(g), DEFAULT_MAX_DEPTH).unwrap();
        assert_eq!(t.center_dim(), reference::center_dimension(g), "{g:?}");
    }
}

#[test]
fn idempotents_checked_on_full_matrices() {
    let s = scheme(GroupName::IV);
    let t = TAlgebra::build(&s, DEFAULT_MAX_DEPTH).unwrap();
    let Idempotents::Rational(eps) = &t.idempotents else {
        panic!("expected rational idempotents")
    };
    let full: Vec<Matrix<Rational>> = eps
        .iter()
        .map(|e| e.to_sparse(&t.layout).to_dense())
        .collect();
    let n = s.order();
    let mut sum = Matrix::zeros(n, n);
    for (a, e) in full.iter().enumerate() {
        assert_eq!(e.mul(e), *e);
        for (b, f) in full.iter().enumerate() {
            if a != b {
                assert!(e.mul(f).is_zero());
            }
        }
        for b in t.basis() {
            let b = b.element.to_sparse(&t.layout).to_dense();
            assert_eq!(e.mul(&b), b.mul(e));
        }
        for r in 0..n {
            for c in 0..n {
                let v = sum.get(r, c) + e.get(r, c);
                sum.set(r, c, v);
            }
        }
        // d² = dim Tε on full matrices
        let mut span = SpanTracker::new(n * n);
        for b in t.basis() {
            let b = b.element.to_sparse(&t.layout).to_dense();
            span.add_dense(&flat(&b.mul(e))).unwrap();
        }
        assert_eq!(span.rank(), t.degrees[a] * t.degrees[a]);
    }
    assert_eq!(sum, Matrix::identity(n));
}

#[test]
fn trivial_group_has_one_idempotent() {
    let s = build_scheme(generate_group(&[Mat2::identity()], 4).unwrap()).unwrap();
    let t = TAlgebra::build(&s, DEFAULT_MAX_DEPTH).unwrap();
    assert_eq!(t.dim(), 1);
    let Idempotents::Rational(eps) = &t.idempotents else {
        panic!()
    };
    assert_eq!(eps.len(), 1);
    assert_eq!(
        eps[0].to_sparse(&t.layout).to_dense(),
        Matrix::from_rows(vec![vec![int(1)]])
    );
    assert_eq!(t.degrees, vec![1]);
}

#[test]
fn wedderburn_degrees_for_small_groups() {
    let degrees = |g| {
        TAlgebra::build(&scheme(g), DEFAULT_MAX_DEPTH)
            .unwrap()
            .degrees
    };
    assert_eq!(degrees(GroupName::I), vec![1, 1, 2, 3, 7]);
    assert_eq!(degrees(GroupName::IV), vec![2, 2, 6]);
    let d3 = degrees(GroupName::III);
    assert_eq!(d3.iter().map(|d| d * d).sum::<usize>(), 300);
    assert_eq!(d3, vec![2, 10, 14]);
}

#[test]
fn structure_constants_reproduce_products() {
    let t = TAlgebra::build(&scheme(GroupName::I), DEFAULT_MAX_DEPTH).unwrap();
    let e = &t.center.elements;
    let r = structure_constants(e).unwrap();
    for a in 0..e.len() {
        for b in 0..e.len() {
            let mut acc = BlockDiagonal::zero(&t.layout);
            for (c, coeff) in r[a][b].iter().enumerate() {
                if !coeff.is_zero() {
                    acc.add_scaled(coeff, &e[c]);
                }
            }
            assert_eq!(acc, e[a].mul(&e[b]));
        }
    }
}
