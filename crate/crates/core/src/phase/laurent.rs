//! Sparse Laurent polynomials in `q` (rational exponents) and the weight
//! variables `z_1..z_n` (integer exponents) with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{BigRational, Integer, One, Rational64, Zero};

use crate::error::{Error, Result};

/// Upper bound on reduction steps in [`Laurent::div_exact`]; exceeding it
/// reports "not divisible", which is always a safe answer.
const DIV_STEP_LIMIT: usize = 20_000;

/// Exponent key `q^q · Π z_k^{z[k]}`.
///
/// The derived order (q first, then z lexicographically) is a group order on
/// exponent vectors, so it is compatible with monomial multiplication.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: Rational64,
    pub z: Vec<i64>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { q: Rational64::zero(), z: vec![0; arity] }
    }

    pub fn is_one(&self) -> bool {
        self.q.is_zero() && self.z.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            q: self.q - other.q,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial { q: -self.q, z: self.z.iter().map(|e| -e).collect() }
    }
}

/// Display order: descending in `q`, then ascending in the weight variables.
pub(crate) fn render_order(a: &Monomial, b: &Monomial) -> Ordering {
    b.q.cmp(&a.q).then_with(|| a.z.cmp(&b.z))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    arity: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Laurent {
    pub fn zero(arity: usize) -> Self {
        Laurent { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::term(Monomial::one(arity), BigRational::one())
    }

    pub fn term(key: Monomial, coeff: BigRational) -> Self {
        let arity = key.z.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        Laurent { arity, terms }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        Self::term(Monomial::one(arity), c)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(k, c)| k.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| render_order(a.0, b.0));
        v
    }

    pub fn single_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub(crate) fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn check(&self, other: &Laurent) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { left: self.arity, right: other.arity })
        }
    }

    fn add_term(&mut self, key: Monomial, coeff: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Result<Laurent> {
        self.check(other)?;
        let mut out = Laurent::zero(self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.mul(kb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero(self.arity);
        }
        Laurent {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Laurent {
        Laurent {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Per-coordinate `(min, max)` exponents; coordinate 0 is `q`.
    fn ranges(&self) -> Option<(Vec<Rational64>, Vec<Rational64>)> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let coords = |m: &Monomial| -> Vec<Rational64> {
            std::iter::once(m.q).chain(m.z.iter().map(|&e| Rational64::from_integer(e))).collect()
        };
        let mut lo = coords(first);
        let mut hi = lo.clone();
        for m in iter {
            for (i, c) in coords(m).into_iter().enumerate() {
                if c < lo[i] {
                    lo[i] = c;
                }
                if c > hi[i] {
                    hi[i] = c;
                }
            }
        }
        Some((lo, hi))
    }

    /// Monomial that recenters this polynomial's exponent range around zero
    /// (exactly for `q`, to the nearest integer below for each `z_k`).
    pub(crate) fn centering_shift(&self) -> Monomial {
        match self.ranges() {
            None => Monomial::one(self.arity),
            Some((lo, hi)) => {
                let q = -(lo[0] + hi[0]) / Rational64::from_integer(2);
                let z = (1..lo.len())
                    .map(|i| {
                        let s = (lo[i] + hi[i]).to_integer();
                        -Integer::div_floor(&s, &2)
                    })
                    .collect();
                Monomial { q, z }
            }
        }
    }

    /// Exact quotient `self / divisor` when it exists in the Laurent ring.
    ///
    /// Returns `None` when the division is not exact (or the step limit is hit).
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        if divisor.is_zero() || self.arity != divisor.arity {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero(self.arity));
        }
        if let Some((k, c)) = divisor.single_term() {
            return Some(self.mul_monomial(&k.inverse()).scale(&c.recip()));
        }
        let (alo, ahi) = self.ranges()?;
        let (dlo, dhi) = divisor.ranges()?;
        let n = alo.len();
        let qlo: Vec<_> = (0..n).map(|i| alo[i] - dlo[i]).collect();
        let qhi: Vec<_> = (0..n).map(|i| ahi[i] - dhi[i]).collect();
        if (0..n).any(|i| qlo[i] > qhi[i]) {
            return None;
        }
        let (dk, dc) = divisor.leading()?;
        let (dk, dc) = (dk.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Laurent::zero(self.arity);
        let mut steps = 0;
        while let Some((rk, rc)) = rem.leading() {
            steps += 1;
            if steps > DIV_STEP_LIMIT {
                return None;
            }
            let tk = rk.div(&dk);
            let inside = std::iter::once(tk.q)
                .chain(tk.z.iter().map(|&e| Rational64::from_integer(e)))
                .enumerate()
                .all(|(i, c)| c >= qlo[i] && c <= qhi[i]);
            if !inside {
                return None;
            }
            let tc = rc / &dc;
            let t = Laurent::term(tk, tc);
            rem = rem.sub(&t.mul(divisor).ok()?).ok()?;
            quot = quot.add(&t).ok()?;
        }
        Some(quot)
    }

    /// Replaces every `z_k` by `q^{exps[k]}`; the result has arity 0.
    pub fn substitute_z(&self, exps: &[Rational64]) -> Result<Laurent> {
        if exps.len() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: exps.len() });
        }
        let mut out = Laurent::zero(0);
        for (k, c) in &self.terms {
            let q = k.z.iter().zip(exps).fold(k.q, |acc, (&e, &x)| acc + x * e);
            out.add_term(Monomial { q, z: Vec::new() }, c.clone());
        }
        Ok(out)
    }

    /// Embeds into a larger variable context; existing variables occupy the
    /// slots starting at `offset`.
    pub fn embed(&self, arity: usize, offset: usize) -> Result<Laurent> {
        if offset + self.arity > arity {
            return Err(Error::ArityMismatch { left: self.arity, right: arity });
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut z = vec![0; arity];
                z[offset..offset + self.arity].copy_from_slice(&k.z);
                (Monomial { q: k.q, z }, c.clone())
            })
            .collect();
        Ok(Laurent { arity, terms })
    }

    pub(crate) fn leading_render_coeff(&self) -> Option<&BigRational> {
        self.terms
            .iter()
            .min_by(|a, b| render_order(a.0, b.0))
            .map(|(_, c)| c)
    }
}
