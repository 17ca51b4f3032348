//! Check suites behind `fermijack verify`. Each check covers one level (or
//! weight) and one property, so a failure points at the smallest witness.

use fermijack::boson_fock::{build_operator, operator_matrix, BosonKind, FockVector};
use fermijack::coeffield::{ParamScalar, Symbol};
use fermijack::fermion_fock::{boson_matrix_in_schur, build_fermionic, FermionKind, FermionOp};
use fermijack::oracle::{apply_cs_differential, expected_differential_eigenvalue, nullspace_eigenvector, restrict_to_ideal};
use fermijack::partitions::{enumerate_level, longest_chain, verify_identity, IdentityKind, Partition};
use fermijack::spectral_solver::{eigenstate, to_polynomial, Model};
use fermijack::symfunc::expand;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::SuiteArg;

pub struct Check {
    name: String,
    passed: bool,
    detail: String,
}

pub struct Report {
    suite: &'static str,
    max_weight: u32,
    checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "max_weight": self.max_weight,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn check(name: String, failures: Vec<String>, total: usize) -> Check {
    let detail = match failures.first() {
        None => format!("{total} checked"),
        Some(first) => format!("{} of {total} failed, first: {first}", failures.len()),
    };
    Check {
        name,
        passed: failures.is_empty(),
        detail,
    }
}

fn rational(kind: FermionKind) -> FermionOp<BigRational> {
    build_fermionic(kind).map_weights(|w| w.as_rational().expect("constant weight"))
}

fn identities(w: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 0..=w {
        let all = enumerate_level(k);
        for kind in IdentityKind::ALL {
            let failures = all
                .iter()
                .map(|l| (l, verify_identity(kind, l)))
                .filter(|(_, r)| !r.holds())
                .map(|(l, r)| format!("{l}: {} != {}", r.lhs, r.rhs))
                .collect();
            out.push(check(format!("identity.{}.weight{k}", kind.name()), failures, all.len()));
        }
        let failures = all
            .iter()
            .filter(|l| l.free_fermion_energy() != l.row_square_sum() - l.hd_energy())
            .map(|l| l.to_string())
            .collect();
        out.push(check(format!("free_fermion_energy.weight{k}"), failures, all.len()));
    }
    out
}

fn squeeze(w: u32) -> Vec<Check> {
    let ht = rational(FermionKind::Ht);
    let mut out = Vec::new();
    for k in 1..=w {
        let all = enumerate_level(k);
        let mut failures = Vec::new();
        for lam in &all {
            for mu in ht.apply_schur_basis(lam).labels() {
                if !mu.strictly_below(lam) {
                    failures.push(format!("{lam} -> {mu}"));
                }
            }
        }
        out.push(check(format!("squeeze.level{k}"), failures, all.len()));
        let c = longest_chain(k);
        let nilpotent = ht.schur_matrix(k).expect("level preserving").pow(c as u32).is_zero();
        let failures = if nilpotent { vec![] } else { vec![format!("Ht^{c} != 0")] };
        out.push(check(format!("nilpotent.level{k}"), failures, 1));
    }
    out
}

fn fermionization(w: u32) -> Vec<Check> {
    let hd = rational(FermionKind::Hd);
    let ht = rational(FermionKind::Ht);
    let cases = rational(FermionKind::HtCases);
    let bos = build_operator(BosonKind::CsDeformed);
    let ferm = build_fermionic(FermionKind::Decomposed);
    let mut out = Vec::new();
    for k in 0..=w {
        let all = enumerate_level(k);
        let failures = all
            .iter()
            .filter(|l| hd.apply_schur_basis(*l) != FockVector::from_pairs([((*l).clone(), BigRational::from_integer(l.hd_energy().into()))]))
            .map(|l| l.to_string())
            .collect();
        out.push(check(format!("hd_diagonal.level{k}"), failures, all.len()));
        let same = cases.schur_matrix(k).expect("level preserving") == ht.schur_matrix(k).expect("level preserving");
        out.push(check(format!("five_cases.level{k}"), if same { vec![] } else { vec!["matrices differ".into()] }, 1));
        let same = ferm.schur_matrix(k).expect("level preserving") == boson_matrix_in_schur(&bos, k).expect("level preserving");
        out.push(check(format!("hamiltonian.level{k}"), if same { vec![] } else { vec!["matrices differ".into()] }, 1));
    }
    out
}

fn oracle(w: u32) -> Vec<Check> {
    let h = build_operator(BosonKind::CsDeformed);
    let beta = ParamScalar::symbol(Symbol::B).pow(2);
    let mut out = Vec::new();
    for k in 0..=w {
        let basis = enumerate_level(k);
        let m = operator_matrix(&h, k).expect("level preserving");
        let ms = boson_matrix_in_schur(&h, k).expect("level preserving");
        let mut failures = Vec::new();
        for lam in &basis {
            let s = match eigenstate(Model::Cs, lam) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("{lam}: {e}"));
                    continue;
                }
            };
            let v = s.powersum_vector();
            if h.apply(&v) != v.scale(&s.energy) {
                failures.push(format!("{lam}: eigen-relation"));
            }
            if !nullspace_eigenvector(&m, &s.energy, &basis).is_ok_and(|n| n.contains(&v)) {
                failures.push(format!("{lam}: outside the nullspace"));
            }
            let (mi, bi) = restrict_to_ideal(&ms, &basis, lam);
            let unique = nullspace_eigenvector(&mi, &s.energy, &bi).ok().and_then(|n| n.unique().ok().cloned());
            if !unique.is_some_and(|u| fermijack::oracle::Eigenspace { vectors: vec![u] }.contains(&s.vector)) {
                failures.push(format!("{lam}: not the unique eigenvector below λ"));
            }
        }
        out.push(check(format!("nullspace.level{k}"), failures, basis.len()));
        let small: Vec<&Partition> = basis.iter().filter(|l| l.len() <= 3).collect();
        let failures = small
            .iter()
            .filter(|lam| {
                let s = eigenstate(Model::Cs, lam).expect("formal eigenstate");
                let j = expand(&to_polynomial(&s), 3);
                apply_cs_differential(&j, &beta).map_or(true, |hj| hj != j.scale(&expected_differential_eigenvalue(lam, 3)))
            })
            .map(|l| l.to_string())
            .collect();
        out.push(check(format!("differential_n3.level{k}"), failures, small.len()));
    }
    out
}

pub fn run(suite: SuiteArg, max_weight: u32) -> Report {
    let (name, checks) = match suite {
        SuiteArg::Identities => ("identities", identities(max_weight)),
        SuiteArg::Fermionization => ("fermionization", fermionization(max_weight)),
        SuiteArg::Oracle => ("oracle", oracle(max_weight)),
        SuiteArg::Squeeze => ("squeeze", squeeze(max_weight)),
        SuiteArg::All => {
            let mut all = identities(max_weight);
            all.extend(squeeze(max_weight));
            all.extend(fermionization(max_weight));
            all.extend(oracle(max_weight));
            ("all", all)
        }
    };
    Report {
        suite: name,
        max_weight,
        checks,
    }
}
