//! Acceptance criteria 1–11, one pass/fail line each. Runs without the
//! libtest harness so the report is always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fermijack::boson_fock::{build_operator, operator_matrix, word, BosonKind, FockVector, OperatorSpec};
use fermijack::coeffield::{rat, Assignment, Field, ParamScalar, Symbol};
use fermijack::fermion_fock::{
    boson_matrix_in_schur, boson_mode, build_fermionic, maya_from_partition, powersum_to_schur, schur_to_powersum, FermionKind, FermionOp,
};
use fermijack::halperin::{
    bi_jack, bi_powersum_to_schur, bi_schur_to_powersum, build_halperin, interaction, interaction_fermionic, omega_eigenstate,
};
use fermijack::oracle::{apply_cs_differential, expected_differential_eigenvalue, nullspace_eigenvector, restrict_to_ideal};
use fermijack::partitions::{enumerate_level, longest_chain, verify_identity, IdentityKind, Partition};
use fermijack::spectral_solver::{eigenstate, energy, to_polynomial, Model, SolverError};
use fermijack::symfunc::expand;
use num_rational::BigRational;

type Outcome = Result<String, String>;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rational(kind: FermionKind) -> FermionOp<BigRational> {
    build_fermionic(kind).map_weights(|w| w.as_rational().expect("constant weight"))
}

fn b2() -> ParamScalar {
    ParamScalar::symbol(Symbol::B).pow(2)
}

fn pairs(total: u32) -> Vec<(Partition, Partition)> {
    (0..=total)
        .flat_map(|k1| {
            let l2 = enumerate_level(total - k1);
            enumerate_level(k1).into_iter().flat_map(move |a| l2.clone().into_iter().map(move |b| (a.clone(), b)))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let lam = p(&[2, 2, 1, 1]);
    ensure(lam.hd_energy() == 20, || format!("hd_energy = {}", lam.hd_energy()))?;
    let maya = maya_from_partition(&lam);
    ensure(maya.sign == -1, || "Maya sign of (2,2,1,1) is not -1".into())?;
    let image = rational(FermionKind::Hd).apply_schur_basis(&lam);
    ensure(image == FockVector::from_pairs([(lam.clone(), rat(20, 1))]), || format!("Hd image {image:?}"))?;
    Ok("H_d on (2,2,1,1) = 20 = 16 + 4".into())
}

fn criterion_2() -> Outcome {
    let mut checks = 0;
    for k in 0..=12 {
        for lam in enumerate_level(k) {
            for kind in IdentityKind::ALL {
                let r = verify_identity(kind, &lam);
                ensure(r.holds(), || format!("{} fails on {lam}: {} != {}", kind.name(), r.lhs, r.rhs))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} identity checks, weight <= 12"))
}

fn criterion_3() -> Outcome {
    let hd = rational(FermionKind::Hd);
    let mut n = 0;
    for k in 0..=10 {
        for lam in enumerate_level(k) {
            let col_squares: i64 = lam.transpose().parts().iter().map(|&c| (c as i64) * (c as i64)).sum();
            let expected = FockVector::from_pairs([(lam.clone(), rat(col_squares, 1))]);
            ensure(hd.apply_schur_basis(&lam) == expected, || format!("H_d not diagonal with Σ(λᵗ)² on {lam}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} Maya states, |λ| <= 10"))
}

fn criterion_4() -> Outcome {
    let ht = rational(FermionKind::Ht);
    for k in 1..=8 {
        for lam in enumerate_level(k) {
            for mu in ht.apply_schur_basis(&lam).labels() {
                ensure(mu.strictly_below(&lam), || format!("H_t maps {lam} to {mu}"))?;
            }
        }
        let c = longest_chain(k);
        let m = ht.schur_matrix(k).map_err(|e| e.to_string())?;
        ensure(m.pow(c as u32).is_zero(), || format!("H_t^{c} != 0 at level {k}"))?;
    }
    Ok("strict squeezing and H_t^c(k) = 0, levels <= 8".into())
}

fn criterion_5() -> Outcome {
    let ht = rational(FermionKind::Ht);
    let cases = rational(FermionKind::HtCases);
    for k in 1..=8 {
        let m = ht.schur_matrix(k).map_err(|e| e.to_string())?;
        ensure(cases.schur_matrix(k).map_err(|e| e.to_string())? == m, || format!("five-case matrix differs at level {k}"))?;
    }
    Ok("five-case form equals H_t, levels <= 8 (first-case sign -1)".into())
}

fn criterion_6() -> Outcome {
    let mut words: Vec<Vec<i32>> = Vec::new();
    let modes: Vec<i32> = (1..=6).flat_map(|n| [n, -n]).collect();
    words.extend(modes.iter().map(|&n| vec![n]));
    let small: Vec<i32> = (1..=3).flat_map(|n| [n, -n]).collect();
    for &a in &small {
        for &b in &small {
            words.push(vec![a, b]);
            for &c in &[1, -1, 2, -2] {
                words.push(vec![a, b, c]);
            }
        }
    }
    let mut checked = 0;
    for w in &words {
        let shift: i32 = w.iter().sum();
        let bos: OperatorSpec<BigRational> = OperatorSpec::single(word(w));
        for k in 0..=6i32 {
            let target = k - shift;
            if !(0..=6).contains(&target) {
                continue;
            }
            for lam in enumerate_level(k as u32) {
                let s = FockVector::basis(lam.clone());
                let mut ferm = s.clone();
                for &n in w.iter().rev() {
                    ferm = FermionOp::<BigRational>::single(boson_mode(n)).apply_schur(&ferm);
                }
                let via_bosons = powersum_to_schur(&bos.apply(&schur_to_powersum(&s)));
                ensure(ferm == via_bosons, || format!("word {w:?} differs on {lam}"))?;
                checked += 1;
            }
        }
    }
    let bos = build_operator(BosonKind::CsDeformed);
    let decomposed = build_fermionic(FermionKind::Decomposed);
    let printed = build_fermionic(FermionKind::FullPrinted);
    for k in 0..=6 {
        let b = boson_matrix_in_schur(&bos, k).map_err(|e| e.to_string())?;
        ensure(decomposed.schur_matrix(k).map_err(|e| e.to_string())? == b, || format!("H0+(1-b²)(Hd+Ht) differs at level {k}"))?;
        ensure(printed.schur_matrix(k).map_err(|e| e.to_string())? == b, || format!("printed full H differs at level {k}"))?;
    }
    Ok(format!("{} words on {checked} states; fermionic H = bosonic H, levels <= 6", words.len()))
}

fn criterion_7() -> Outcome {
    let level_two: Vec<ParamScalar> = enumerate_level(2).iter().map(|l| energy(Model::Cs, l)).collect();
    let expected = [&ParamScalar::integer(4) - &(&ParamScalar::integer(2) * &b2()), &ParamScalar::integer(2) - &(&ParamScalar::integer(4) * &b2())];
    ensure(level_two == expected, || format!("level-2 energies {level_two:?}"))?;
    let mut n = 0;
    for model in [Model::Cs, Model::Laughlin] {
        let h = model.operator();
        let c = ParamScalar::from_rational(&model.beta_scale());
        for k in 0..=6 {
            let basis = enumerate_level(k);
            let m = operator_matrix(&h, k).map_err(|e| e.to_string())?;
            let ms = boson_matrix_in_schur(&h, k).map_err(|e| e.to_string())?;
            for lam in &basis {
                let s = eigenstate(model, lam).map_err(|e| format!("{lam}: {e}"))?;
                let rows: i64 = lam.parts().iter().map(|&x| (x as i64).pow(2)).sum();
                let cols: i64 = lam.transpose().parts().iter().map(|&x| (x as i64).pow(2)).sum();
                let closed = &ParamScalar::integer(rows) - &(&(&b2() * &c) * &ParamScalar::integer(cols));
                ensure(s.energy == closed, || format!("{model:?} {lam}: energy {} != {closed}", s.energy))?;
                let v = s.powersum_vector();
                ensure(h.apply(&v) == v.scale(&s.energy), || format!("{model:?} {lam}: eigen-relation fails"))?;
                let full = nullspace_eigenvector(&m, &s.energy, &basis).map_err(|e| format!("{lam}: {e}"))?;
                ensure(full.contains(&v), || format!("{model:?} {lam}: not in the nullspace"))?;
                let (mi, bi) = restrict_to_ideal(&ms, &basis, lam);
                let ideal = nullspace_eigenvector(&mi, &s.energy, &bi).map_err(|e| format!("{lam}: {e}"))?;
                let u = ideal.unique().map_err(|e| format!("{model:?} {lam}: {e}"))?;
                let scaled = u.scale(&u.coeff(lam).inv().ok_or("vanishing leading coefficient")?);
                ensure(scaled == s.vector, || format!("{model:?} {lam}: differs from the nullspace vector"))?;
                if !full.is_degenerate() {
                    ensure(full.unique().is_ok(), || format!("{lam}: nullspace not one-dimensional"))?;
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} eigenstates (CS and Laughlin), |λ| <= 6"))
}

fn criterion_8() -> Outcome {
    for k in 0..=6 {
        for lam in enumerate_level(k) {
            let cs = eigenstate(Model::Cs, &lam).and_then(|s| s.specialize(&rat(1, 1))).map_err(|e| e.to_string())?;
            ensure(cs.vector == FockVector::basis(lam.clone()), || format!("CS at b=1 not Schur for {lam}"))?;
            let la = eigenstate(Model::Laughlin, &lam).and_then(|s| s.specialize(&rat(2, 1))).map_err(|e| e.to_string())?;
            ensure(la.vector == FockVector::basis(lam.clone()), || format!("Laughlin at b²=2 not Schur for {lam}"))?;
        }
    }
    for k in 0..=5 {
        for lam in enumerate_level(k) {
            let la = to_polynomial(&eigenstate(Model::Laughlin, &lam).map_err(|e| e.to_string())?);
            let cs = to_polynomial(&eigenstate(Model::Cs, &lam).map_err(|e| e.to_string())?);
            let halved = cs.terms.try_map_coeffs(|c| c.rescale_square(Symbol::B, &rat(1, 2))).map_err(|e| e.to_string())?;
            ensure(la.terms == halved, || format!("Laughlin(b²) != CS(b²/2) for {lam}"))?;
        }
    }
    Ok("Schur limits |λ| <= 6; Laughlin(b²) = CS(b²/2), levels <= 5".into())
}

fn criterion_9() -> Outcome {
    let mut n = 0;
    for k in 0..=4 {
        for lam in enumerate_level(k).into_iter().filter(|l| l.len() <= 3) {
            let j = expand(&to_polynomial(&eigenstate(Model::Cs, &lam).map_err(|e| e.to_string())?), 3);
            let hj = apply_cs_differential(&j, &b2()).map_err(|e| e.to_string())?;
            ensure(hj == j.scale(&expected_differential_eigenvalue(&lam, 3)), || format!("differential eigen-relation fails on {lam}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} Jack polynomials in 3 variables, |λ| <= 4"))
}

fn criterion_10() -> Outcome {
    let mut n = 0;
    for n1 in [0, 2] {
        let h = build_halperin(n1);
        for k in 0..=4 {
            for (lam, mu) in pairs(k) {
                let s = omega_eigenstate(&lam, &mu, n1).map_err(|e| e.to_string())?;
                ensure(h.apply(&s.vector) == s.vector.scale(&s.energy), || format!("{lam}⊗{mu}, N1={n1}: eigen-relation fails"))?;
                if n1 == 0 {
                    let at = Assignment::Value(Symbol::R, rat(0, 1));
                    let limit = s.vector.try_map_coeffs(|c| c.substitute(&at)).map_err(|e| e.to_string())?;
                    ensure(limit == bi_jack(&lam, &mu).map_err(|e| e.to_string())?, || format!("{lam}⊗{mu}: r=0 limit is not the bi-Jack state"))?;
                }
                n += 1;
            }
        }
    }
    let bos = interaction(0);
    let ferm = interaction_fermionic();
    for k in 0..=3 {
        for (lam, mu) in pairs(k) {
            let s = FockVector::basis(fermijack::boson_fock::BiPartition::new(lam.clone(), mu.clone()));
            let via_bosons = bi_powersum_to_schur(&bos.apply(&bi_schur_to_powersum(&s)));
            ensure(ferm.apply_schur(&s) == via_bosons, || format!("fermionic H_int differs on {lam}⊗{mu}"))?;
        }
    }
    Ok(format!("{n} states (N1 = 0, 2), r=0 factorization, fermionic H_int, total <= 4/3"))
}

fn criterion_11() -> Outcome {
    let s = eigenstate(Model::Cs, &p(&[2])).map_err(|e| e.to_string())?;
    match s.specialize(&rat(-1, 1)) {
        Err(SolverError::Resonance { factor }) => ensure(factor == "2+2β", || format!("resonance names {factor}"))?,
        other => return Err(format!("expected a resonance, got {other:?}")),
    }
    let sp = s.specialize(&rat(1, 3)).map_err(|e| e.to_string())?;
    let at = [Assignment::Square(Symbol::B, rat(1, 3))];
    let image = build_operator(BosonKind::CsDeformed)
        .apply(&sp.powersum_vector())
        .try_map_coeffs(|c| c.specialize(&at).map(|x| ParamScalar::from_rational(&x)))
        .map_err(|e| e.to_string())?;
    ensure(image == sp.powersum_vector().scale(&sp.energy), || "specialized eigen-relation fails at β = 1/3".into())?;
    Ok("β = -1 resonates on 2+2β; β = 1/3 specializes exactly".into())
}

/// Printed forms that disagree with the validated operators, reported
/// alongside the criteria.
fn discrepancies() -> Vec<String> {
    let mut out = Vec::new();
    let ht = rational(FermionKind::Ht);
    let printed_cases = rational(FermionKind::HtCasesPrinted);
    if let Some(k) = (1..=8).find(|&k| printed_cases.schur_matrix(k).ok() != ht.schur_matrix(k).ok()) {
        out.push(format!("five-case form with first-case sign +1 differs from H_t from level {k}"));
    }
    let with_diag = rational(FermionKind::HtAsPrinted);
    if let Some(k) = (1..=8).find(|&k| with_diag.schur_matrix(k).ok() != ht.schur_matrix(k).ok()) {
        out.push(format!("H_t summed over s = -k as well differs from H_t from level {k}"));
    }
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("H_d on (2,2,1,1)", criterion_1, Duration::from_secs(1)),
        ("Frobenius identity suite", criterion_2, Duration::from_secs(60)),
        ("H_d diagonal on Maya states", criterion_3, Duration::MAX),
        ("squeezing and nilpotency", criterion_4, Duration::MAX),
        ("five-case decomposition", criterion_5, Duration::MAX),
        ("boson-fermion correspondence", criterion_6, Duration::MAX),
        ("spectrum and eigenstates", criterion_7, Duration::from_secs(60)),
        ("limits", criterion_8, Duration::MAX),
        ("differential oracle", criterion_9, Duration::from_secs(60)),
        ("Halperin", criterion_10, Duration::from_secs(300)),
        ("resonance handling", criterion_11, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > *limit => Err(format!("{msg}, but took {elapsed:.2?} (limit {limit:?})")),
            other => other,
        };
        match result {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg} [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    for d in discrepancies() {
        println!("discrepancy  {d}");
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
