//! Double-tensor modules `V_{λ1} ⊗ V_{λ2}` with independent weight
//! variables per factor.

use std::collections::BTreeMap;
use std::fmt;

use num::Rational64;

use crate::contour::{render_term, FaultInjection, Generator, ModuleContext, ModuleVector, ScreeningSequence};
use crate::error::{Error, Result};
use crate::hopf::algebra::{coproduct, word_parity, AlgebraElement, TensorElement};
use crate::phase::PhaseScalar;
use crate::root_data::{RootDatum, Weight};

pub type TensorBasis = (ScreeningSequence, ScreeningSequence);

#[derive(Clone, Debug)]
pub struct TensorContext {
    left: ModuleContext,
    right: ModuleContext,
    arity: usize,
    faults: FaultInjection,
}

impl TensorContext {
    pub fn new(datum: RootDatum, left: Weight, right: Weight, depth: usize) -> Result<Self> {
        let r = datum.rank();
        let left_vars = if left.is_generic() { r } else { 0 };
        let right_vars = if right.is_generic() { r } else { 0 };
        let arity = left_vars + right_vars;
        let l = ModuleContext::with_slots(datum.clone(), left, depth, arity, 0)?;
        let rt = ModuleContext::with_slots(datum, right, depth, arity, left_vars)?;
        Ok(TensorContext { left: l, right: rt, arity, faults: FaultInjection::none() })
    }

    /// Both factors at independent generic weights.
    pub fn generic(datum: RootDatum, depth: usize) -> Result<Self> {
        Self::new(datum, Weight::Generic, Weight::Generic, depth)
    }

    pub fn with_faults(mut self, faults: FaultInjection) -> Self {
        self.left = self.left.with_faults(faults);
        self.right = self.right.with_faults(faults);
        self.faults = faults;
        self
    }

    pub fn left(&self) -> &ModuleContext {
        &self.left
    }

    pub fn right(&self) -> &ModuleContext {
        &self.right
    }

    pub fn datum(&self) -> &RootDatum {
        self.left.datum()
    }

    pub fn depth(&self) -> usize {
        self.left.depth()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Variable names: `z{j}(1)` for the first factor, `z{j}(2)` for the second.
    pub fn variable_name(&self, slot: usize) -> String {
        let r = self.datum().rank();
        if self.left.weight().is_generic() && slot < r {
            format!("z{}(1)", slot + 1)
        } else {
            let local = if self.left.weight().is_generic() { slot - r } else { slot };
            format!("z{}(2)", local + 1)
        }
    }

    pub fn basis_vector(&self, b: TensorBasis) -> TensorVector {
        TensorVector::basis(self.arity, b)
    }

    /// Pairs of sequences with each factor of length at most `max_len`.
    pub fn basis(&self, max_len: usize) -> Vec<TensorBasis> {
        let single = self.left.basis(max_len);
        let mut out = Vec::with_capacity(single.len() * single.len());
        for a in &single {
            for b in &single {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    fn check(&self, v: &TensorVector) -> Result<()> {
        if v.arity != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: v.arity });
        }
        Ok(())
    }

    /// `(A_1⊗A_2)(U_1⊗U_2) = (-1)^{p(A_2)p(U_1)} A_1(U_1) ⊗ A_2(U_2)`, extended linearly.
    pub fn act(&self, t: &TensorElement, v: &TensorVector) -> Result<TensorVector> {
        assert_eq!(t.factors(), 2, "tensor modules take 2-fold elements");
        self.check(v)?;
        let datum = self.datum();
        let mut out = TensorVector::zero(self.arity);
        for ((i1, i2), c) in &v.terms {
            let u1 = self.left.basis_vector(i1.clone());
            let u2 = self.right.basis_vector(i2.clone());
            for (w, coeff) in t.terms() {
                let x1 = self.left.apply_word(&w[0], &u1)?;
                if x1.is_zero() {
                    continue;
                }
                let x2 = self.right.apply_word(&w[1], &u2)?;
                if x2.is_zero() {
                    continue;
                }
                let odd = word_parity(&w[1], datum) & i1.parity(datum) == 1;
                let mut scale = c * &coeff.embed(self.arity, 0)?;
                if odd && !self.faults.flip_tensor_sign {
                    scale = -scale;
                }
                for (j1, c1) in x1.terms() {
                    let left = &scale * c1;
                    for (j2, c2) in x2.terms() {
                        out.add_term((j1.clone(), j2.clone()), &left * c2)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies `Δ(g)`.
    pub fn act_coproduct(&self, g: Generator, v: &TensorVector) -> Result<TensorVector> {
        self.act(&coproduct(g), v)
    }

    /// Applies `Δ(x)` for an algebra element, composing the coproducts of the
    /// letters of each word as operators (right to left).
    pub fn act_coproduct_of(&self, x: &AlgebraElement, v: &TensorVector) -> Result<TensorVector> {
        let mut out = TensorVector::zero(self.arity);
        for (w, c) in x.terms() {
            let mut acc = v.clone();
            for &g in w.iter().rev() {
                acc = self.act_coproduct(g, &acc)?;
            }
            out = out.add(&acc.scale(&c.embed(self.arity, 0)?)?)?;
        }
        Ok(out)
    }

    /// `Δ(F_j)` computed from the contour around both insertion points split into
    /// one contour around each: the first-factor term plus the crossing phase
    /// `e^{iπ(Σ_{i∈I_1}Ω̂_{ji} + Ω_{jλ_1})}` times the second-factor term.
    pub fn coproduct_f_contour(&self, j: usize, v: &TensorVector) -> Result<TensorVector> {
        self.datum().check_index(j)?;
        self.check(v)?;
        let depth = self.depth();
        let mut out = TensorVector::zero(self.arity);
        for ((i1, i2), c) in &v.terms {
            if i1.len() >= depth || i2.len() >= depth {
                return Err(Error::DepthExceeded { depth });
            }
            out.add_term((i1.prepend(j), i2.clone()), c.clone())?;
            let mut crossing = self.left.weight_phase(j, 1);
            for &i in i1.labels() {
                crossing = &crossing * &self.left.hat_phase(j, i);
            }
            out.add_term((i1.clone(), i2.prepend(j)), c * &crossing)?;
        }
        Ok(out)
    }

    /// Specializes generic variables to the given concrete weights.
    pub fn specialization_exponents(&self, left: &Weight, right: &Weight) -> Result<Vec<Rational64>> {
        let mut out = Vec::new();
        if self.left.weight().is_generic() {
            out.extend(self.left.specialization_exponents(left)?);
        }
        if self.right.weight().is_generic() {
            out.extend(self.right.specialization_exponents(right)?);
        }
        Ok(out)
    }
}

/// Sparse combination of `U_{λ1,I1} ⊗ U_{λ2,I2}`.
#[derive(Clone, Debug)]
pub struct TensorVector {
    arity: usize,
    terms: BTreeMap<TensorBasis, PhaseScalar>,
}

impl TensorVector {
    pub fn zero(arity: usize) -> Self {
        TensorVector { arity, terms: BTreeMap::new() }
    }

    pub fn basis(arity: usize, b: TensorBasis) -> Self {
        let mut v = Self::zero(arity);
        v.terms.insert(b, PhaseScalar::one(arity));
        v
    }

    pub fn from_product(left: &ModuleVector, right: &ModuleVector) -> Result<Self> {
        let mut v = Self::zero(left.arity());
        for (a, ca) in left.terms() {
            for (b, cb) in right.terms() {
                v.add_term((a.clone(), b.clone()), ca.try_mul(cb)?)?;
            }
        }
        Ok(v)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorBasis, &PhaseScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: &TensorBasis) -> PhaseScalar {
        self.terms.get(b).cloned().unwrap_or_else(|| PhaseScalar::zero(self.arity))
    }

    pub fn add_term(&mut self, b: TensorBasis, c: PhaseScalar) -> Result<()> {
        if c.arity() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: c.arity() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.remove(&b) {
            Some(old) => old.try_add(&c)?,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(b, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), -c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &PhaseScalar) -> Result<Self> {
        let mut out = Self::zero(self.arity);
        for (b, v) in &self.terms {
            out.add_term(b.clone(), v.try_mul(c)?)?;
        }
        Ok(out)
    }

    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.is_zero())
    }

    pub fn substitute_z(&self, exps: &[Rational64]) -> Result<Self> {
        let mut out = Self::zero(0);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.substitute_z(exps)?)?;
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
            .map(|((a, b), c)| render_term(c, &format!("{a} ⊗ {b}"), names))
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&crate::phase::default_name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> ScreeningSequence {
        ScreeningSequence::new(v.to_vec())
    }

    fn hw() -> TensorBasis {
        (seq(&[]), seq(&[]))
    }

    #[test]
    fn k_inverse_tensor_f_on_highest_weights() {
        let t = TensorContext::generic(RootDatum::catalog("sl2").unwrap(), 3).unwrap();
        let x = TensorElement::pure(vec![vec![Generator::KInv(1)], vec![Generator::F(1)]], PhaseScalar::one(0));
        let out = t.act(&x, &t.basis_vector(hw())).unwrap();
        let z1 = t.left().weight_phase(1, 1);
        assert_eq!(out.coefficient(&(seq(&[]), seq(&[1]))), z1);
        assert_eq!(out.terms().count(), 1);
        assert_eq!(t.variable_name(0), "z1(1)");
        assert_eq!(t.variable_name(1), "z1(2)");
    }

    #[test]
    fn odd_ehat_crossing_odd_vector_picks_sign() {
        let t = TensorContext::generic(RootDatum::catalog("sl2_1").unwrap(), 3).unwrap();
        // (1⊗Ê_2) realised as (1⊗K_2^{-1}E_2) since Ê_2 = K_2^{-1}E_2
        let x = TensorElement::pure(
            vec![vec![], vec![Generator::KInv(2), Generator::E(2)]],
            PhaseScalar::one(0),
        );
        let v = t.basis_vector((seq(&[2]), seq(&[2])));
        let out = t.act(&x, &v).unwrap();
        let z2 = t.right().weight_phase(2, 2);
        let expect = -&(&(&PhaseScalar::one(t.arity()) - &z2) * t.right().normalization(2));
        assert_eq!(out.coefficient(&(seq(&[2]), seq(&[]))), expect);
    }

    #[test]
    fn identity_acts_trivially() {
        let t = TensorContext::generic(RootDatum::catalog("sl2_1").unwrap(), 3).unwrap();
        let v = t.basis_vector((seq(&[2, 1]), seq(&[2])));
        assert!(t.act(&TensorElement::one(2), &v).unwrap().try_eq(&v).unwrap());
    }

    #[test]
    fn contour_split_on_highest_weights() {
        let t = TensorContext::generic(RootDatum::catalog("sl2_1").unwrap(), 3).unwrap();
        let out = t.coproduct_f_contour(2, &t.basis_vector(hw())).unwrap();
        assert_eq!(out.coefficient(&(seq(&[2]), seq(&[]))), PhaseScalar::one(t.arity()));
        assert_eq!(out.coefficient(&(seq(&[]), seq(&[2]))), t.left().weight_phase(2, 1));
        let closed = t.act_coproduct(Generator::F(2), &t.basis_vector(hw())).unwrap();
        assert!(closed.try_eq(&out).unwrap());
    }

    #[test]
    fn contour_split_with_odd_first_factor() {
        let t = TensorContext::generic(RootDatum::catalog("sl2_1").unwrap(), 3).unwrap();
        let v = t.basis_vector((seq(&[2]), seq(&[])));
        let out = t.coproduct_f_contour(2, &v).unwrap();
        assert_eq!(out.coefficient(&(seq(&[2, 2]), seq(&[]))), PhaseScalar::one(t.arity()));
        assert_eq!(out.coefficient(&(seq(&[2]), seq(&[2]))), -t.left().weight_phase(2, 1));
    }
}
