use clifftwist_core::groups::{normal_series_check, verify_main_theorem, ClauseResult};
use clifftwist_core::sampling;
use clifftwist_core::spinors::{dagger_check, CliData, SpinorSpace};
use clifftwist_core::{Monomial, Multivector, Result};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl From<&ClauseResult> for Check {
    fn from(c: &ClauseResult) -> Self {
        Check::new(format!("({})", c.clause), c.passed, c.detail.clone())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SignatureReport {
    pub p: u32,
    pub q: u32,
    pub passed: bool,
    pub clauses_passed: usize,
    pub clauses_total: usize,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

/// All checks for one signature: the ten clauses, both normal series, the
/// basis-size identity, `star = Tε` on monomials and samples, and the dagger
/// law on generators and samples.
pub fn verify_signature(cd: &CliData, seed: u64, samples: usize) -> Result<SignatureReport> {
    let sig = cd.sig;
    let f = &cd.idempotent;
    let theorem = verify_main_theorem(f)?;
    let mut checks: Vec<Check> = theorem.clauses.iter().map(Check::from).collect();
    let clauses_total = checks.len();
    let clauses_passed = theorem.passed_count();

    let series = normal_series_check(f)?;
    checks.push(Check::new(
        "normal series",
        series.passed(),
        format!(
            "G ≥ G(f) ≥ T(f) ≥ G' ≥ 1: {}, G ≥ G(f) ≥ K(f) ≥ G' ≥ 1: {}",
            series.through_idempotent_group, series.through_field_group
        ),
    ));
    checks.push(Check::new(
        "basis sizes",
        cd.data5.len() == cd.data6.len() * cd.data7.len(),
        format!("{} = {} x {}", cd.data5.len(), cd.data6.len(), cd.data7.len()),
    ));

    let mut rng = sampling::rng(seed ^ ((sig.p() as u64) << 32 | sig.q() as u64));
    let monomials_ok = sig.monomials().all(|m| {
        let u = Multivector::basis(sig, m);
        u.star() == u.transposition()
    });
    let random: Vec<Multivector> = (0..samples).map(|_| sampling::multivector(&mut rng, sig, 12)).collect();
    let random_ok = random.iter().all(|u| u.star() == u.transposition());
    checks.push(Check::new(
        "star = transposition",
        monomials_ok && random_ok,
        format!("{} monomials, {} random elements", sig.dimension(), samples),
    ));

    let space = SpinorSpace::new(cd.clone())?;
    let mut dagger_ok = true;
    for i in 1..=sig.n() {
        dagger_ok &= dagger_check(&Multivector::basis(sig, Monomial::generator(i)), &space)?;
    }
    for u in &random {
        dagger_ok &= dagger_check(u, &space)?;
    }
    checks.push(Check::new(
        "dagger law",
        dagger_ok,
        format!("{} generators, {} random elements", sig.n(), samples),
    ));

    let mut notes = theorem.notes.clone();
    notes.extend(theorem.needs_review.iter().map(|r| format!("needs review: {r}")));
    Ok(SignatureReport {
        p: sig.p(),
        q: sig.q(),
        passed: checks.iter().all(|c| c.passed),
        clauses_passed,
        clauses_total,
        checks,
        notes,
    })
}
