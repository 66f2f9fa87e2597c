//! Exact verification sweeps. Every identity is checked as an operator
//! identity on all basis vectors whose sequences leave room for one more
//! contour (length ≤ depth − 1), except coassociativity and the counit laws,
//! which are literal equalities of tensor words.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contour::{Generator, ModuleContext};
use crate::error::Result;
use crate::hopf::algebra::{antipode_word, coproduct, counit, relations, AlgebraElement};
use crate::hopf::tensor::TensorContext;
use crate::phase::PhaseScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub basis: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn from_outcome(identity: String, outcome: Option<Counterexample>) -> Self {
        let status = if outcome.is_none() { Status::Pass } else { Status::Fail };
        Check { identity, status, counterexample: outcome }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub algebra: String,
    pub depth: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, algebra: &str, depth: usize) -> Self {
        VerificationReport { suite: suite.into(), algebra: algebra.into(), depth, checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("# {} on {} (depth {})\n", self.suite, self.algebra, self.depth);
        for c in &self.checks {
            match (&c.status, &c.counterexample) {
                (Status::Pass, _) => out.push_str(&format!("PASS  {}\n", c.identity)),
                (Status::Fail, Some(ce)) => out.push_str(&format!(
                    "FAIL  {}\n      at {}: {}  ≠  {}\n",
                    c.identity, ce.basis, ce.lhs, ce.rhs
                )),
                (Status::Fail, None) => out.push_str(&format!("FAIL  {}\n", c.identity)),
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Evaluates `check` on every basis element in parallel and returns the
/// first counterexample in basis order.
fn sweep<B, F>(basis: &[B], check: F) -> Result<Option<Counterexample>>
where
    B: Sync,
    F: Fn(&B) -> Result<Option<Counterexample>> + Sync,
{
    let outcomes: Vec<Option<Counterexample>> =
        basis.par_iter().map(&check).collect::<Result<Vec<_>>>()?;
    Ok(outcomes.into_iter().flatten().next())
}

/// The (anti-)commutation relations as operator identities on the module.
pub fn verify_relations(ctx: &ModuleContext) -> Result<VerificationReport> {
    let datum = ctx.datum();
    let mut report = VerificationReport::new("relations", datum.name(), ctx.depth());
    let basis = ctx.basis(ctx.depth() - 1);
    for rel in relations(datum) {
        let outcome = sweep(&basis, |s| {
            let u = ctx.basis_vector(s.clone());
            let lhs = rel.lhs.act(ctx, &u)?;
            let rhs = rel.rhs.act(ctx, &u)?;
            Ok((!lhs.try_eq(&rhs)?).then(|| Counterexample {
                basis: s.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }))
        })?;
        report.checks.push(Check::from_outcome(rel.name.clone(), outcome));
    }
    Ok(report)
}

/// (a) the contour-splitting `Δ(F_j)` against the closed form, and (b) `Δ`
/// applied to every relation, both on the double-tensor module.
pub fn verify_coproduct(ctx: &TensorContext) -> Result<VerificationReport> {
    let datum = ctx.datum();
    let mut report = VerificationReport::new("coproduct", datum.name(), ctx.depth());
    let basis = ctx.basis(ctx.depth() - 1);
    let names = |slot: usize| ctx.variable_name(slot);
    for j in 1..=datum.rank() {
        let outcome = sweep(&basis, |b| {
            let v = ctx.basis_vector(b.clone());
            let lhs = ctx.coproduct_f_contour(j, &v)?;
            let rhs = ctx.act_coproduct(Generator::F(j), &v)?;
            Ok((!lhs.try_eq(&rhs)?).then(|| Counterexample {
                basis: format!("{} ⊗ {}", b.0, b.1),
                lhs: lhs.render_with(&names),
                rhs: rhs.render_with(&names),
            }))
        })?;
        report
            .checks
            .push(Check::from_outcome(format!("contour split Δ(F{j}) = F{j}⊗1 + K{j}-⊗F{j}"), outcome));
    }
    for rel in relations(datum) {
        let outcome = sweep(&basis, |b| {
            let v = ctx.basis_vector(b.clone());
            let lhs = ctx.act_coproduct_of(&rel.lhs, &v)?;
            let rhs = ctx.act_coproduct_of(&rel.rhs, &v)?;
            Ok((!lhs.try_eq(&rhs)?).then(|| Counterexample {
                basis: format!("{} ⊗ {}", b.0, b.1),
                lhs: lhs.render_with(&names),
                rhs: rhs.render_with(&names),
            }))
        })?;
        report.checks.push(Check::from_outcome(format!("Δ[{}]", rel.name), outcome));
    }
    Ok(report)
}

fn literal(identity: String, lhs: String, rhs: String, equal: bool) -> Check {
    let outcome = (!equal).then(|| Counterexample { basis: "literal".into(), lhs, rhs });
    Check::from_outcome(identity, outcome)
}

/// Coassociativity, counit and antipode laws on every generator.
pub fn verify_hopf_axioms(ctx: &ModuleContext) -> Result<VerificationReport> {
    let datum = ctx.datum();
    let mut report = VerificationReport::new("hopf", datum.name(), ctx.depth());
    let basis = ctx.basis(ctx.depth() - 1);
    for g in Generator::all(datum.rank()) {
        let delta = coproduct(g);

        let left = delta.coproduct_at(0, datum);
        let right = delta.coproduct_at(1, datum);
        report.checks.push(literal(
            format!("(Δ⊗id)Δ({g}) = (id⊗Δ)Δ({g})"),
            left.to_string(),
            right.to_string(),
            left == right,
        ));

        let gen = AlgebraElement::generator(g);
        for (slot, label) in [(0, "ε⊗id"), (1, "id⊗ε")] {
            let reduced = delta.counit_at(slot).into_algebra();
            report.checks.push(literal(
                format!("({label})Δ({g}) = {g}"),
                reduced.to_string(),
                gen.to_string(),
                reduced == gen,
            ));
        }

        let ident = |w: &[Generator]| AlgebraElement::word(w.to_vec(), PhaseScalar::one(0));
        let gamma = |w: &[Generator]| antipode_word(w, datum);
        let unit = AlgebraElement::one().scale(&counit(g));
        for (label, product) in [
            ("m(γ⊗id)", delta.multiply_with(&gamma, &ident)),
            ("m(id⊗γ)", delta.multiply_with(&ident, &gamma)),
        ] {
            let outcome = sweep(&basis, |s| {
                let u = ctx.basis_vector(s.clone());
                let lhs = product.act(ctx, &u)?;
                let rhs = unit.act(ctx, &u)?;
                Ok((!lhs.try_eq(&rhs)?).then(|| Counterexample {
                    basis: s.to_string(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }))
            })?;
            report.checks.push(Check::from_outcome(format!("{label}Δ({g}) = ε({g})·1"), outcome));
        }
    }
    Ok(report)
}
