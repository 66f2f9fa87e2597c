//! Singular-vector scanner: combinations of `F`-words whose image on the
//! highest-weight vector is annihilated by every `Ê_j` at generic weight.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contour::{Generator, ModuleContext, ModuleVector, ScreeningSequence};
use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::phase::PhaseScalar;
use crate::root_data::Weight;

/// Number of `F_i` letters per index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multidegree entry `{}`", t.trim())))
            })
            .collect::<Result<_>>()?;
        if parts.len() != rank {
            return Err(Error::Parse(format!("multidegree has {} entries, rank is {rank}", parts.len())));
        }
        Ok(Multidegree(parts))
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A word `F_{a_1} F_{a_2} … F_{a_k}`; its image on `V_λ` is `U_{λ,(a_1,…,a_k)}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FWord(pub Vec<usize>);

impl FWord {
    pub fn generators(&self) -> Vec<Generator> {
        self.0.iter().map(|&i| Generator::F(i)).collect()
    }

    pub fn multidegree(&self, rank: usize) -> Multidegree {
        let mut d = vec![0; rank];
        for &i in &self.0 {
            if (1..=rank).contains(&i) {
                d[i - 1] += 1;
            }
        }
        Multidegree(d)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let gens = Generator::parse_word(&s.replace('F', " F"))?;
        gens.into_iter()
            .map(|g| match g {
                Generator::F(i) => Ok(i),
                other => Err(Error::Parse(format!("`{other}` is not a lowering generator"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(FWord)
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for i in &self.0 {
            write!(f, "F{i}")?;
        }
        Ok(())
    }
}

/// Distinct orderings of the multiset `{F_i^{d_i}}`, lexicographically.
pub fn enumerate_words(d: &Multidegree, depth: usize) -> Result<Vec<FWord>> {
    if d.total() > depth {
        return Err(Error::DepthExceeded { depth });
    }
    fn rec(counts: &mut [usize], prefix: &mut Vec<usize>, out: &mut Vec<FWord>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(FWord(prefix.clone()));
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                prefix.push(i + 1);
                rec(counts, prefix, out);
                prefix.pop();
                counts[i] += 1;
            }
        }
    }
    let mut counts = d.0.clone();
    let mut out = Vec::new();
    rec(&mut counts, &mut Vec::new(), &mut out);
    Ok(out)
}

/// One singular combination and its image.
#[derive(Clone, Debug)]
pub struct SingularCombination {
    pub coefficients: Vec<(FWord, PhaseScalar)>,
    pub image: ModuleVector,
}

#[derive(Clone, Debug)]
pub struct SingularVectorBasis {
    pub multidegree: Multidegree,
    pub words: Vec<FWord>,
    pub combinations: Vec<SingularCombination>,
}

impl SingularVectorBasis {
    pub fn dimension(&self) -> usize {
        self.combinations.len()
    }
}

/// Image of a combination of `F`-words on the highest-weight vector.
pub fn image(ctx: &ModuleContext, combination: &[(FWord, PhaseScalar)]) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero(ctx.arity());
    for (w, c) in combination {
        let v = ctx.apply_word(&w.generators(), &ctx.highest_weight())?;
        out = out.add(&v.scale(c)?)?;
    }
    Ok(out)
}

/// Solves `Ê_j(Σ_w c_w w(V_λ)) = 0` for all `j` over the given word list.
pub fn solve_singular(ctx: &ModuleContext, words: &[FWord]) -> Result<Vec<Vec<PhaseScalar>>> {
    let r = ctx.rank();
    let columns: Vec<Vec<(usize, ModuleVector)>> = words
        .par_iter()
        .map(|w| {
            let v = ctx.apply_word(&w.generators(), &ctx.highest_weight())?;
            (1..=r).map(|j| Ok((j, ctx.apply_ehat(j, &v)?))).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut rows: BTreeMap<(usize, ScreeningSequence), Vec<PhaseScalar>> = BTreeMap::new();
    for (col, images) in columns.iter().enumerate() {
        for (j, img) in images {
            for (s, c) in img.terms() {
                let row = rows
                    .entry((*j, s.clone()))
                    .or_insert_with(|| vec![PhaseScalar::zero(ctx.arity()); words.len()]);
                row[col] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<PhaseScalar>> = rows.into_values().collect();
    nullspace(&rows, words.len(), ctx.arity())
}

pub fn singular_scan(ctx: &ModuleContext, d: &Multidegree) -> Result<SingularVectorBasis> {
    if !ctx.weight().is_generic() {
        return Err(Error::Config("singular scans run at generic weight".into()));
    }
    if d.0.len() != ctx.rank() {
        return Err(Error::Parse(format!("multidegree has {} entries, rank is {}", d.0.len(), ctx.rank())));
    }
    if d.total() > ctx.depth() {
        return Err(Error::DepthExceeded { depth: ctx.depth() });
    }
    let words = enumerate_words(d, ctx.depth())?;
    let solutions = solve_singular(ctx, &words)?;
    let combinations = solutions
        .into_iter()
        .map(|x| {
            let coefficients: Vec<(FWord, PhaseScalar)> = words
                .iter()
                .cloned()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let img = image(ctx, &coefficients)?;
            Ok(SingularCombination { coefficients, image: img })
        })
        .collect::<Result<_>>()?;
    Ok(SingularVectorBasis { multidegree: d.clone(), words, combinations })
}

/// Outcome of checking a candidate combination.
#[derive(Clone, Debug)]
pub struct CandidateCheck {
    pub singular: bool,
    /// `(j, Ê_j(image))` for every `j` with a nonzero result.
    pub residuals: Vec<(usize, ModuleVector)>,
}

pub fn verify_candidate(
    ctx: &ModuleContext,
    combination: &[(FWord, PhaseScalar)],
    d: &Multidegree,
) -> Result<CandidateCheck> {
    for (w, _) in combination {
        if &w.multidegree(ctx.rank()) != d {
            return Err(Error::Parse(format!("word {w} does not have multidegree {d}")));
        }
    }
    let img = image(ctx, combination)?;
    let mut residuals = Vec::new();
    for j in 1..=ctx.rank() {
        let res = ctx.apply_ehat(j, &img)?;
        if !res.is_zero() {
            residuals.push((j, res));
        }
    }
    Ok(CandidateCheck { singular: residuals.is_empty(), residuals })
}

/// True when every `E_j = K_jÊ_j` annihilates the vector.
pub fn annihilated_by_raising(ctx: &ModuleContext, v: &ModuleVector) -> Result<bool> {
    for j in 1..=ctx.rank() {
        if !ctx.apply_e(j, v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Specializes generic coefficients to a concrete weight.
pub fn specialize(
    generic: &ModuleContext,
    combination: &[(FWord, PhaseScalar)],
    weight: &Weight,
) -> Result<Vec<(FWord, PhaseScalar)>> {
    let exps = generic.specialization_exponents(weight)?;
    combination
        .iter()
        .map(|(w, c)| Ok((w.clone(), c.substitute_z(&exps)?)))
        .collect()
}

/// Result of specializing a generic scan to one concrete weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// Every specialized combination is singular in the concrete module.
    Sound,
    /// A specialized combination is not annihilated; holds its index.
    Unsound(usize),
    /// A coefficient denominator vanishes at this weight.
    DenominatorVanishes(String),
}

pub fn check_specialization(
    generic: &ModuleContext,
    scan: &SingularVectorBasis,
    weight: &Weight,
) -> Result<Specialization> {
    let concrete = ModuleContext::new(generic.datum().clone(), weight.clone(), generic.depth())?;
    for (k, comb) in scan.combinations.iter().enumerate() {
        let coefficients = match specialize(generic, &comb.coefficients, weight) {
            Ok(c) => c,
            Err(Error::DenominatorVanishes(msg)) => return Ok(Specialization::DenominatorVanishes(msg)),
            Err(e) => return Err(e),
        };
        if !verify_candidate(&concrete, &coefficients, &scan.multidegree)?.singular {
            return Ok(Specialization::Unsound(k));
        }
    }
    Ok(Specialization::Sound)
}

/// Serialized scan result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub algebra: String,
    pub multidegree: Vec<usize>,
    pub dimension: usize,
    pub basis: Vec<BTreeMap<String, String>>,
    pub residual_checks: String,
}

impl ScanReport {
    pub fn build(ctx: &ModuleContext, scan: &SingularVectorBasis) -> Result<Self> {
        let mut all_pass = true;
        for comb in &scan.combinations {
            let check = verify_candidate(ctx, &comb.coefficients, &scan.multidegree)?;
            all_pass &= check.singular && annihilated_by_raising(ctx, &comb.image)?;
        }
        let basis = scan
            .combinations
            .iter()
            .map(|c| c.coefficients.iter().map(|(w, x)| (w.to_string(), x.to_string())).collect())
            .collect();
        Ok(ScanReport {
            algebra: ctx.datum().name().to_string(),
            multidegree: scan.multidegree.0.clone(),
            dimension: scan.dimension(),
            basis,
            residual_checks: if all_pass { "pass" } else { "fail" }.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan report serializes")
    }

    pub fn render_text(&self) -> String {
        let md: Vec<String> = self.multidegree.iter().map(|d| d.to_string()).collect();
        let mut out = format!(
            "{} multidegree ({}): dimension {}\n",
            self.algebra,
            md.join(","),
            self.dimension
        );
        for (k, comb) in self.basis.iter().enumerate() {
            let terms: Vec<String> = comb.iter().map(|(w, c)| format!("[{c}]·{w}")).collect();
            out.push_str(&format!("  v{}: {}\n", k + 1, terms.join(" + ")));
        }
        out.push_str(&format!("residual checks: {}\n", self.residual_checks));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::RootDatum;

    fn ctx(name: &str, depth: usize) -> ModuleContext {
        ModuleContext::new(RootDatum::catalog(name).unwrap(), Weight::Generic, depth).unwrap()
    }

    fn words(v: &[FWord]) -> Vec<String> {
        v.iter().map(FWord::to_string).collect()
    }

    #[test]
    fn word_enumeration() {
        let w = enumerate_words(&Multidegree(vec![2, 1]), 4).unwrap();
        assert_eq!(words(&w), vec!["F1F1F2", "F1F2F1", "F2F1F1"]);
        assert_eq!(words(&enumerate_words(&Multidegree(vec![0, 0]), 4).unwrap()), vec!["1"]);
        assert_eq!(enumerate_words(&Multidegree(vec![1, 1]), 4).unwrap().len(), 2);
        assert!(enumerate_words(&Multidegree(vec![3, 2]), 4).is_err());
    }

    #[test]
    fn fword_parse() {
        assert_eq!(FWord::parse("F1F12").unwrap(), FWord(vec![1, 12]));
        assert!(FWord::parse("F1E2").is_err());
    }

    #[test]
    fn sl2_has_no_quadratic_singular_vector() {
        let scan = singular_scan(&ctx("sl2", 4), &Multidegree(vec![2])).unwrap();
        assert_eq!(scan.dimension(), 0);
    }

    #[test]
    fn isotropic_odd_square() {
        let c = ctx("sl2_1", 4);
        let scan = singular_scan(&c, &Multidegree(vec![0, 2])).unwrap();
        assert_eq!(scan.dimension(), 1);
        let comb = &scan.combinations[0].coefficients;
        assert_eq!(comb.len(), 1);
        assert_eq!(comb[0].0, FWord(vec![2, 2]));
        assert!(comb[0].1.is_one());
    }

    #[test]
    fn candidates() {
        let c = ctx("sl2_1", 4);
        let one = PhaseScalar::one(c.arity());
        let ok = verify_candidate(&c, &[(FWord(vec![2, 2]), one.clone())], &Multidegree(vec![0, 2])).unwrap();
        assert!(ok.singular);
        assert!(verify_candidate(&c, &[], &Multidegree(vec![0, 2])).unwrap().singular);

        let s = ctx("sl2", 4);
        let one = PhaseScalar::one(s.arity());
        let bad = verify_candidate(&s, &[(FWord(vec![1, 1]), one)], &Multidegree(vec![2])).unwrap();
        assert!(!bad.singular);
        assert_eq!(bad.residuals.len(), 1);
        let z2 = s.weight_phase(1, 2);
        let q2 = s.q_pow(num::Rational64::from_integer(2));
        let expect = &(&(&s.one() + &q2) * &(&s.one() - &(&q2 * &z2))) * s.normalization(1);
        assert_eq!(bad.residuals[0].1.coefficient(&ScreeningSequence::new(vec![1])), expect);
    }

    #[test]
    fn specialization_reports_vanishing_denominators() {
        use num::Rational64;
        let c = ctx("sl2", 3);
        let norm = (&c.one() - &c.weight_phase(1, 2)).invert().unwrap();
        let scan = SingularVectorBasis {
            multidegree: Multidegree(vec![1]),
            words: vec![FWord(vec![1])],
            combinations: vec![SingularCombination {
                coefficients: vec![(FWord(vec![1]), norm)],
                image: ModuleVector::zero(c.arity()),
            }],
        };
        let at = |x: i64| Weight::Concrete(vec![Rational64::from_integer(x)]);
        assert!(matches!(
            check_specialization(&c, &scan, &at(0)).unwrap(),
            Specialization::DenominatorVanishes(_)
        ));
        assert_eq!(check_specialization(&c, &scan, &at(1)).unwrap(), Specialization::Unsound(0));

        let good = singular_scan(&ctx("sl2_1", 3), &Multidegree(vec![0, 2])).unwrap();
        let w = Weight::Concrete(vec![Rational64::new(1, 3), Rational64::from_integer(-2)]);
        assert_eq!(check_specialization(&ctx("sl2_1", 3), &good, &w).unwrap(), Specialization::Sound);
    }

    #[test]
    fn multidegree_parse() {
        assert_eq!(Multidegree::parse("0, 2", 2).unwrap(), Multidegree(vec![0, 2]));
        assert!(Multidegree::parse("2", 2).is_err());
        assert!(Multidegree::parse("a,1", 2).is_err());
    }
}
