use fermijack::boson_fock::{build_operator, operator_matrix, BosonKind, FockVector};
use fermijack::coeffield::{rat, Field, ParamScalar, Symbol};
use fermijack::partitions::enumerate_level;

fn check_similar(target: BosonKind, raw: BosonKind, left: BosonKind, right: BosonKind) {
    let (target, raw) = (build_operator(target), build_operator(raw));
    let (left, right) = (build_operator(left), build_operator(right));
    for k in 0..=5 {
        for mu in enumerate_level(k) {
            let v = FockVector::basis(mu.clone());
            assert_eq!(target.apply(&v), left.apply(&raw.apply(&right.apply(&v))), "{mu}");
        }
    }
}

#[test]
fn cs_raw_is_similar_to_deformed() {
    check_similar(
        BosonKind::CsDeformed,
        BosonKind::CsRaw { background_n: None },
        BosonKind::SimilarityD { inverse: true },
        BosonKind::SimilarityD { inverse: false },
    );
}

#[test]
fn laughlin_literal_is_similar_to_deformed() {
    check_similar(
        BosonKind::Laughlin { deformed: true },
        BosonKind::Laughlin { deformed: false },
        BosonKind::SimilarityDLau { inverse: true },
        BosonKind::SimilarityDLau { inverse: false },
    );
}

#[test]
fn laughlin_is_cs_with_halved_coupling() {
    let cs = build_operator(BosonKind::CsDeformed);
    let la = build_operator(BosonKind::Laughlin { deformed: true });
    for k in 0..=5 {
        let halved = operator_matrix(&cs, k).unwrap().map(|c| c.rescale_square(Symbol::B, &rat(1, 2)).unwrap());
        assert_eq!(operator_matrix(&la, k).unwrap(), halved, "level {k}");
    }
}

#[test]
fn operators_conserve_level() {
    for kind in [
        BosonKind::CsDeformed,
        BosonKind::CsRaw { background_n: Some(3) },
        BosonKind::Laughlin { deformed: false },
        BosonKind::Laughlin { deformed: true },
    ] {
        let op = build_operator(kind);
        for k in 0..=8 {
            assert!(operator_matrix(&op, k).is_ok(), "{kind:?} level {k}");
        }
    }
}

#[test]
fn level_two_characteristic_polynomial() {
    let m = operator_matrix(&build_operator(BosonKind::CsDeformed), 2).unwrap();
    let b2 = ParamScalar::symbol(Symbol::B).pow(2);
    let one_minus = &ParamScalar::integer(1) - &b2;
    assert_eq!(m.trace(), &ParamScalar::integer(6) * &one_minus);
    for root in [&ParamScalar::integer(4) - &(&ParamScalar::integer(2) * &b2), &ParamScalar::integer(2) - &(&ParamScalar::integer(4) * &b2)] {
        let shifted = m.shift_diagonal(&root);
        let det = shifted.get(0, 0).mul(shifted.get(1, 1)).sub(&shifted.get(0, 1).mul(shifted.get(1, 0)));
        assert!(Field::is_zero(&det));
    }
}
