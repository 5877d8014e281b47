use proptest::prelude::*;
use terwilliger::codes::{
    check_enumerator_invariance, fixtures, invariance_under, parse_generator_matrix, CodeType,
    FiniteFieldElem, InnerProduct, LinearCode,
};
use terwilliger::exactnum::{int, CycNum};
use terwilliger::invariants::BivarPoly;
use terwilliger::matgroup::GroupName;

fn brute_codewords(code: &LinearCode) -> Vec<Vec<FiniteFieldElem>> {
    // every F_q-combination of the rows, built without the library's indexing
    let q = code.q();
    let mut words = vec![vec![FiniteFieldElem::zero(q); code.length()]];
    for row in code.generator_matrix() {
        let mut next = Vec::new();
        for w in &words {
            for c in FiniteFieldElem::all(q) {
                next.push(w.iter().zip(row).map(|(a, b)| *a + c * *b).collect());
            }
        }
        words = next;
    }
    words
}

fn brute_orthogonal(code: &LinearCode, form: InnerProduct) -> usize {
    // count all vectors in F_q^n orthogonal to every codeword
    let q = code.q();
    let n = code.length();
    let words = brute_codewords(code);
    let mut count = 0;
    let total = (q as usize).pow(n as u32);
    for idx in 0..total {
        let mut v = Vec::with_capacity(n);
        let mut t = idx;
        for _ in 0..n {
            v.push(FiniteFieldElem::new(q, (t % q as usize) as u8));
            t /= q as usize;
        }
        let ok = words.iter().all(|w| {
            w.iter()
                .zip(&v)
                .fold(FiniteFieldElem::zero(q), |acc, (a, b)| {
                    let b = if form == InnerProduct::Hermitian {
                        b.conj()
                    } else {
                        *b
                    };
                    acc + *a * b
                })
                .is_zero()
        });
        count += usize::from(ok);
    }
    count
}

fn enumerator(terms: &[(i64, u32, u32)]) -> BivarPoly {
    terms.iter().fold(BivarPoly::zero(), |acc, &(c, a, b)| {
        acc.add(&BivarPoly::monomial(CycNum::from_rational(int(c)), a, b))
    })
}

#[test]
fn fixture_enumerators() {
    assert_eq!(
        fixtures::repetition2().weight_enumerator().unwrap(),
        enumerator(&[(1, 2, 0), (1, 0, 2)])
    );
    assert_eq!(
        fixtures::hamming8().weight_enumerator().unwrap(),
        enumerator(&[(1, 8, 0), (14, 4, 4), (1, 0, 8)])
    );
    assert_eq!(
        fixtures::tetracode().weight_enumerator().unwrap(),
        enumerator(&[(1, 4, 0), (8, 1, 3)])
    );
    assert_eq!(
        fixtures::hexacode().weight_enumerator().unwrap(),
        enumerator(&[(1, 6, 0), (45, 2, 4), (18, 0, 6)])
    );
    assert_eq!(
        fixtures::repetition4().weight_enumerator().unwrap(),
        enumerator(&[(1, 2, 0), (3, 0, 2)])
    );
}

#[test]
fn fixture_types_and_invariance() {
    let cases = [
        (
            fixtures::repetition2(),
            InnerProduct::Euclidean,
            CodeType::I,
        ),
        (fixtures::hamming8(), InnerProduct::Euclidean, CodeType::II),
        (
            fixtures::tetracode(),
            InnerProduct::Euclidean,
            CodeType::III,
        ),
        (fixtures::hexacode(), InnerProduct::Hermitian, CodeType::IV),
        (
            fixtures::repetition4(),
            InnerProduct::Hermitian,
            CodeType::IV,
        ),
    ];
    for (code, form, ty) in cases {
        assert_eq!(code.classify(form).unwrap(), ty);
        let report = check_enumerator_invariance(&code, form).unwrap().unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.fixed, report.elements);
    }
    // hexacode is not Euclidean self-dual
    assert_eq!(
        fixtures::hexacode()
            .classify(InnerProduct::Euclidean)
            .unwrap(),
        CodeType::None
    );
}

#[test]
fn type_one_enumerator_is_not_type_two_invariant() {
    let w = fixtures::repetition2().weight_enumerator().unwrap();
    let report = invariance_under(&w, GroupName::II);
    assert!(!report.passed());
    assert!(report.fixed > 0 && report.fixed < report.elements);
    assert!(invariance_under(&w, GroupName::I).passed());
}

#[test]
fn dual_sizes_match_brute_force() {
    for name in fixtures::NAMES {
        let code = fixtures::by_name(name).unwrap();
        for form in [InnerProduct::Euclidean, InnerProduct::Hermitian] {
            let dual = code.dual(form);
            let q = code.q() as usize;
            assert_eq!(
                q.pow(dual.dimension() as u32),
                brute_orthogonal(&code, form),
                "{name} {form:?}"
            );
        }
    }
}

#[test]
fn json_parsing() {
    let code = parse_generator_matrix("[[1,0,1,1],[0,1,1,-1]]", 3).unwrap();
    assert_eq!(code, fixtures::tetracode());
    let hex = parse_generator_matrix(
        "[[[1,0],[0,0],[0,0],[1,0],[0,1],[0,1]],[[0,0],[1,0],[0,0],[0,1],[1,0],[0,1]],[[0,0],[0,0],[1,0],[0,1],[0,1],[1,0]]]",
        4,
    )
    .unwrap();
    assert_eq!(hex, fixtures::hexacode());
    assert!(parse_generator_matrix("[[1,0],[1]]", 2).is_err());
    assert!(parse_generator_matrix("{}", 2).is_err());
    assert!(parse_generator_matrix("[[1,\"a\"]]", 2).is_err());
    assert!(parse_generator_matrix("[[1,0]]", 5).is_err());
    assert!(parse_generator_matrix("[[1,0]]", 4).is_err());
}

#[test]
fn enumeration_guard() {
    let rows: Vec<Vec<i64>> = (0..25)
        .map(|i| (0..25).map(|j| i64::from(i == j)).collect())
        .collect();
    let code = LinearCode::from_ints(2, &rows).unwrap();
    assert!(code.weight_enumerator().is_err());
}

fn arb_code() -> impl Strategy<Value = LinearCode> {
    (prop::sample::select(vec![2u8, 3, 4]), 1usize..7, 1usize..5).prop_flat_map(|(q, n, k)| {
        prop::collection::vec(prop::collection::vec(0..q, n), k).prop_map(move |rows| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| FiniteFieldElem::new(q, v)).collect())
                .collect();
            LinearCode::new(q, n, rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_dimension_and_involution(code in arb_code()) {
        for form in [InnerProduct::Euclidean, InnerProduct::Hermitian] {
            let dual = code.dual(form);
            prop_assert_eq!(code.dimension() + dual.dimension(), code.length());
            prop_assert_eq!(&dual.dual(form), &code);
        }
    }

    #[test]
    fn enumerator_counts_codewords(code in arb_code()) {
        let dist = code.weight_distribution().unwrap();
        let words = brute_codewords(&code);
        let mut brute = vec![0u64; code.length() + 1];
        let mut seen = std::collections::HashSet::new();
        for w in words {
            let key: Vec<u8> = w.iter().map(|x| x.value()).collect();
            if seen.insert(key) {
                brute[w.iter().filter(|x| !x.is_zero()).count()] += 1;
            }
        }
        prop_assert_eq!(dist, brute);
    }

    #[test]
    fn macwilliams_identity(code in arb_code()) {
        // |C| W_{C⊥}(x, y) = W_C(x + (q−1)y, x − y), checked on the Euclidean dual
        let q = i64::from(code.q());
        let w = code.weight_enumerator().unwrap();
        let wd = code.dual(InnerProduct::Euclidean).weight_enumerator().unwrap();
        let x = BivarPoly::x();
        let y = BivarPoly::y();
        let a = x.add(&y.scale_rational(&int(q - 1)));
        let b = x.sub(&y);
        let mut rhs = BivarPoly::zero();
        for (i, j, c) in w.terms() {
            rhs = rhs.add(&a.pow(i).mul(&b.pow(j)).scale(c));
        }
        let size = q.pow(code.dimension() as u32);
        prop_assert_eq!(wd.scale_rational(&int(size)), rhs);
    }
}

#[test]
fn full_space_dual_is_zero() {
    let full = LinearCode::from_ints(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    let dual = full.dual(InnerProduct::Euclidean);
    assert_eq!(dual.dimension(), 0);
    assert_eq!(dual.weight_enumerator().unwrap(), enumerator(&[(1, 3, 0)]));
}

#[test]
fn enumerator_evaluations() {
    // w(1, 1) = q^k and w(1, 0) = 1
    for name in fixtures::NAMES {
        let code = fixtures::by_name(name).unwrap();
        let w = code.weight_enumerator().unwrap();
        let at_one: CycNum = w
            .terms()
            .fold(CycNum::from_int(0), |acc, (_, _, c)| &acc + c);
        let q = i64::from(code.q());
        assert_eq!(
            at_one,
            CycNum::from_int(q.pow(code.dimension() as u32)),
            "{name}"
        );
        assert_eq!(w.coeff(code.length() as u32, 0), CycNum::from_int(1));
    }
}

#[test]
fn first_generator_fixes_self_dual_enumerators() {
    let cases = [
        (fixtures::repetition2(), GroupName::I),
        (fixtures::hamming8(), GroupName::II),
        (fixtures::tetracode(), GroupName::III),
        (fixtures::repetition4(), GroupName::IV),
        (fixtures::hexacode(), GroupName::IV),
    ];
    for (code, g) in cases {
        let w = code.weight_enumerator().unwrap();
        let first = &g.generators()[0];
        assert_eq!(w.act_on(first), w);
    }
}
