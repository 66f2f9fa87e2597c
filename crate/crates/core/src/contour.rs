//! The space spanned by screened vertex operators `U_{λ,I}` and the actions
//! of `F_j`, `K_j^{±1}`, `Ê_j` and `E_j = K_j Ê_j` on it.
//!
//! Contour conventions: a sequence `I = (i_1, …, i_n)` lists screening
//! contours from the outermost (`i_1`) to the innermost (`i_n`). `F_j`
//! creates a new outermost contour, i.e. prepends `j`.
//!
//! Phases are expressed through the formal deformation parameter `q`:
//! `e^{iπΩ_ij} = q^{n_ij}`, `e^{iπΩ̂_ij} = (-1)^{p_i p_j} q^{n_ij}` and
//! `e^{iπΩ_jλ} = z_j` at generic weight (`q^{-α_j·λ}` at concrete weight).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::Rational64;

use crate::error::{Error, Result};
use crate::phase::{default_name, PhaseScalar};
use crate::root_data::{OmegaData, RootDatum, Weight};

/// Ordered screening labels, outermost contour first. Labels are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScreeningSequence(Vec<usize>);

impl ScreeningSequence {
    pub fn empty() -> Self {
        ScreeningSequence(Vec::new())
    }

    pub fn new(labels: Vec<usize>) -> Self {
        ScreeningSequence(labels)
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self, datum: &RootDatum) -> u8 {
        self.0.iter().map(|&i| datum.parity_unchecked(i)).sum::<u8>() % 2
    }

    pub(crate) fn prepend(&self, j: usize) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(j);
        v.extend_from_slice(&self.0);
        ScreeningSequence(v)
    }

    pub(crate) fn without(&self, pos: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(pos);
        ScreeningSequence(v)
    }

    /// All sequences over `1..=rank` of length at most `max_len`, in
    /// length-lexicographic order.
    pub fn enumerate(rank: usize, max_len: usize) -> Vec<ScreeningSequence> {
        let mut out = vec![ScreeningSequence::empty()];
        let mut layer = vec![ScreeningSequence::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * rank);
            for s in &layer {
                for j in 1..=rank {
                    let mut v = s.0.clone();
                    v.push(j);
                    next.push(ScreeningSequence(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Parses `"2,1"`, `"[2,1]"` or the empty string.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad screening label `{t}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ScreeningSequence)
    }

    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        self.0.iter().try_for_each(|&i| datum.check_index(i))
    }
}

impl Ord for ScreeningSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ScreeningSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ScreeningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "U[{}]", labels.join(","))
    }
}

/// Chevalley-type generators; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::KInv(i) => i,
        }
    }

    pub fn parity(self, datum: &RootDatum) -> u8 {
        match self {
            Generator::E(i) | Generator::F(i) => datum.parity_unchecked(i),
            Generator::K(_) | Generator::KInv(_) => 0,
        }
    }

    /// All generators over a given rank, `E_i, F_i, K_i, K_i^{-1}` per index.
    pub fn all(rank: usize) -> Vec<Generator> {
        (1..=rank)
            .flat_map(|i| [Generator::E(i), Generator::F(i), Generator::K(i), Generator::KInv(i)])
            .collect()
    }

    /// Parses whitespace-separated tokens, e.g. `"E1 F1 K2-"`.
    pub fn parse_word(s: &str) -> Result<Vec<Generator>> {
        s.split_whitespace().map(str::parse).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E{i}"),
            Generator::F(i) => write!(f, "F{i}"),
            Generator::K(i) => write!(f, "K{i}"),
            Generator::KInv(i) => write!(f, "K{i}-"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator token `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (digits, inverse) = match rest.strip_suffix('-') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let i: usize = digits.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match (head, inverse) {
            ('E', false) => Ok(Generator::E(i)),
            ('F', false) => Ok(Generator::F(i)),
            ('K', false) => Ok(Generator::K(i)),
            ('K', true) => Ok(Generator::KInv(i)),
            _ => Err(bad()),
        }
    }
}

/// Deliberate convention errors, used as negative controls for the verifiers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FaultInjection {
    /// Drop the `(-1)^{p_i p_j}` part of `Ω̂` everywhere it enters.
    pub flip_hat_sign: bool,
    /// Drop the super interchange sign when tensor words act on tensor vectors.
    pub flip_tensor_sign: bool,
    /// Use `q^{-n}` instead of `q^{n}` in the outer-contour prefactor of `Ê_j`.
    pub flip_ehat_prefactor: bool,
}

impl FaultInjection {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn is_clean(&self) -> bool {
        *self == Self::default()
    }
}

/// Sparse combination of screened vertex operators.
#[derive(Clone, Debug)]
pub struct ModuleVector {
    arity: usize,
    terms: BTreeMap<ScreeningSequence, PhaseScalar>,
}

impl ModuleVector {
    pub fn zero(arity: usize) -> Self {
        ModuleVector { arity, terms: BTreeMap::new() }
    }

    pub fn basis(arity: usize, seq: ScreeningSequence) -> Self {
        let mut v = Self::zero(arity);
        v.terms.insert(seq, PhaseScalar::one(arity));
        v
    }

    /// `V_λ = U_{λ,∅}`.
    pub fn highest_weight(arity: usize) -> Self {
        Self::basis(arity, ScreeningSequence::empty())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ScreeningSequence, &PhaseScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, seq: &ScreeningSequence) -> PhaseScalar {
        self.terms.get(seq).cloned().unwrap_or_else(|| PhaseScalar::zero(self.arity))
    }

    pub fn add_term(&mut self, seq: ScreeningSequence, coeff: PhaseScalar) -> Result<()> {
        if coeff.arity() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: coeff.arity() });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(seq) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().try_add(&coeff)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.add(&other.scale(&PhaseScalar::from_int(other.arity, -1))?)
    }

    pub fn scale(&self, c: &PhaseScalar) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(self.arity);
        for (s, v) in &self.terms {
            out.add_term(s.clone(), v.try_mul(c)?)?;
        }
        Ok(out)
    }

    pub fn try_eq(&self, other: &ModuleVector) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    /// Maximum sequence length present (0 for the zero vector).
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(ScreeningSequence::len).max().unwrap_or(0)
    }

    /// Specializes every coefficient via `z_k ↦ q^{exps[k]}`.
    pub fn substitute_z(&self, exps: &[Rational64]) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(0);
        for (s, c) in &self.terms {
            out.add_term(s.clone(), c.substitute_z(exps)?)?;
        }
        Ok(out)
    }

    pub fn render_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| render_term(c, &s.to_string(), names))
            .collect();
        parts.join(" + ")
    }
}

pub(crate) fn render_term(c: &PhaseScalar, basis: &str, names: &dyn Fn(usize) -> String) -> String {
    if c.is_one() {
        return basis.to_string();
    }
    let text = c.render_with(names);
    let needs_parens = c.is_polynomial() && c.numerator().len() > 1;
    if needs_parens {
        format!("({text}) · {basis}")
    } else {
        format!("{text} · {basis}")
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&default_name))
    }
}

/// Configuration of one module `V_{λ}`: algebra, weight, depth bound.
#[derive(Clone, Debug)]
pub struct ModuleContext {
    datum: RootDatum,
    omega: OmegaData,
    weight: Weight,
    depth: usize,
    arity: usize,
    offset: usize,
    faults: FaultInjection,
    norm_inv: Vec<PhaseScalar>,
}

impl ModuleContext {
    pub fn new(datum: RootDatum, weight: Weight, depth: usize) -> Result<Self> {
        let arity = if weight.is_generic() { datum.rank() } else { 0 };
        Self::with_slots(datum, weight, depth, arity, 0)
    }

    /// A module whose weight variables live at slots `offset..offset+rank` of a
    /// scalar context of the given arity (used for tensor factors).
    pub(crate) fn with_slots(
        datum: RootDatum,
        weight: Weight,
        depth: usize,
        arity: usize,
        offset: usize,
    ) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Config("depth must be at least 1".into()));
        }
        weight.validate(&datum)?;
        let omega = datum.omega_data();
        let mut ctx = ModuleContext {
            datum,
            omega,
            weight,
            depth,
            arity,
            offset,
            faults: FaultInjection::none(),
            norm_inv: Vec::new(),
        };
        ctx.norm_inv = (1..=ctx.rank())
            .map(|j| (&ctx.q_j(j) - &ctx.q_j(j).invert()?).invert())
            .collect::<Result<_>>()?;
        Ok(ctx)
    }

    pub fn with_faults(mut self, faults: FaultInjection) -> Self {
        self.faults = faults;
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn omega(&self) -> &OmegaData {
        &self.omega
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn faults(&self) -> FaultInjection {
        self.faults
    }

    pub fn q_pow(&self, a: Rational64) -> PhaseScalar {
        PhaseScalar::q_power(self.arity, a)
    }

    /// `q_j = q^{D_j}`.
    pub fn q_j(&self, j: usize) -> PhaseScalar {
        self.q_pow(self.datum.symmetrizers()[j - 1])
    }

    /// `1/(q_j - q_j^{-1})`.
    pub fn normalization(&self, j: usize) -> &PhaseScalar {
        &self.norm_inv[j - 1]
    }

    pub fn one(&self) -> PhaseScalar {
        PhaseScalar::one(self.arity)
    }

    pub fn highest_weight(&self) -> ModuleVector {
        ModuleVector::highest_weight(self.arity)
    }

    pub fn basis_vector(&self, seq: ScreeningSequence) -> ModuleVector {
        ModuleVector::basis(self.arity, seq)
    }

    /// Basis sequences of length at most `max_len`.
    pub fn basis(&self, max_len: usize) -> Vec<ScreeningSequence> {
        ScreeningSequence::enumerate(self.rank(), max_len)
    }

    /// `e^{iπ·power·Ω_{jλ}}`: `z_j^power`, or `q^{-power·α_j·λ}` at concrete weight.
    pub fn weight_phase(&self, j: usize, power: i64) -> PhaseScalar {
        match &self.weight {
            Weight::Generic => {
                PhaseScalar::z_power(self.arity, self.offset + j, power).expect("slot within arity")
            }
            Weight::Concrete(_) => {
                let pairing = self.weight.root_pairing(&self.datum, j).expect("validated weight");
                self.q_pow(-pairing * Rational64::from_integer(power))
            }
        }
    }

    /// `e^{iπΩ̂_{ji}}` (or `e^{iπΩ_{ji}}` when the hat sign is faulted out).
    pub(crate) fn hat_phase(&self, j: usize, i: usize) -> PhaseScalar {
        let p = self.q_pow(self.datum.inner(j, i));
        if !self.faults.flip_hat_sign && self.omega.hat_signs[j - 1][i - 1] < 0 {
            -p
        } else {
            p
        }
    }

    /// `z_k ↦ q^{-α_k·λ}` exponents for specializing generic results to `weight`.
    pub fn specialization_exponents(&self, weight: &Weight) -> Result<Vec<Rational64>> {
        (1..=self.rank()).map(|k| Ok(-weight.root_pairing(&self.datum, k)?)).collect()
    }

    fn check_vector(&self, v: &ModuleVector) -> Result<()> {
        if v.arity != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: v.arity });
        }
        Ok(())
    }

    /// `F_j`: prepends an outermost contour labelled `j`.
    pub fn apply_f(&self, j: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.datum.check_index(j)?;
        self.check_vector(v)?;
        let mut out = ModuleVector::zero(self.arity);
        for (s, c) in &v.terms {
            if s.len() >= self.depth {
                return Err(Error::DepthExceeded { depth: self.depth });
            }
            out.terms.insert(s.prepend(j), c.clone());
        }
        Ok(out)
    }

    /// Eigenvalue of `K_j` on `U_{λ,I}`: `q^{-Σ_{i∈I} n_ji} · z_j^{-1}`.
    pub fn k_eigenvalue(&self, j: usize, seq: &ScreeningSequence) -> PhaseScalar {
        let total: Rational64 = seq.labels().iter().map(|&i| self.datum.inner(j, i)).sum();
        &self.q_pow(-total) * &self.weight_phase(j, -1)
    }

    /// `K_j` (`inverse = false`) or `K_j^{-1}`.
    pub fn apply_k(&self, j: usize, inverse: bool, v: &ModuleVector) -> Result<ModuleVector> {
        self.datum.check_index(j)?;
        self.check_vector(v)?;
        let mut out = ModuleVector::zero(self.arity);
        for (s, c) in &v.terms {
            let mut ev = self.k_eigenvalue(j, s);
            if inverse {
                ev = ev.invert()?;
            }
            out.add_term(s.clone(), c.try_mul(&ev)?)?;
        }
        Ok(out)
    }

    /// Coefficient of `U_{λ, I∖{pos}}` in `Ê_j U_{λ,I}`; `I[pos]` must equal `j`.
    pub fn ehat_coefficient(&self, j: usize, seq: &ScreeningSequence, pos: usize) -> Result<PhaseScalar> {
        let labels = seq.labels();
        let inner: Rational64 = labels[pos + 1..].iter().map(|&i| self.datum.inner(j, i)).sum();
        let branch = &self.one()
            - &(&self.q_pow(inner * Rational64::from_integer(2)) * &self.weight_phase(j, 2));
        let mut outer = self.one();
        for &i in &labels[..pos] {
            let mut phase = self.hat_phase(j, i);
            if self.faults.flip_ehat_prefactor {
                phase = phase.invert()?;
            }
            outer = &outer * &phase;
        }
        Ok(&(&branch * &outer) * self.normalization(j))
    }

    /// `Ê_j`: removes one contour labelled `j`, summed over all such contours.
    pub fn apply_ehat(&self, j: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.datum.check_index(j)?;
        self.check_vector(v)?;
        let mut out = ModuleVector::zero(self.arity);
        for (s, c) in &v.terms {
            for (pos, _) in s.labels().iter().enumerate().filter(|(_, &i)| i == j) {
                let coeff = self.ehat_coefficient(j, s, pos)?;
                out.add_term(s.without(pos), c.try_mul(&coeff)?)?;
            }
        }
        Ok(out)
    }

    /// `E_j = K_j Ê_j`.
    pub fn apply_e(&self, j: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let hat = self.apply_ehat(j, v)?;
        self.apply_k(j, false, &hat)
    }

    pub fn apply_generator(&self, g: Generator, v: &ModuleVector) -> Result<ModuleVector> {
        match g {
            Generator::E(j) => self.apply_e(j, v),
            Generator::F(j) => self.apply_f(j, v),
            Generator::K(j) => self.apply_k(j, false, v),
            Generator::KInv(j) => self.apply_k(j, true, v),
        }
    }

    /// Applies a word right to left (the last letter acts first).
    pub fn apply_word(&self, word: &[Generator], v: &ModuleVector) -> Result<ModuleVector> {
        word.iter().rev().try_fold(v.clone(), |acc, &g| self.apply_generator(g, &acc))
    }

    /// Sum of operator parities of a word.
    pub fn word_parity(&self, word: &[Generator]) -> u8 {
        word.iter().map(|g| g.parity(&self.datum)).sum::<u8>() % 2
    }
}
