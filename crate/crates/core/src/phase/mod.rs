//! Exact coefficient field: fractions of Laurent polynomials in `q` and the
//! generic-weight variables `z_k`.
//!
//! A [`PhaseScalar`] is a pair numerator/denominator. No gcds are taken;
//! equality is decided by cross-multiplication. After every operation the
//! pair is normalized: exact polynomial quotients are taken when they exist,
//! otherwise the denominator is recentered so its exponent range is
//! symmetric and its display-leading coefficient is 1.

mod laurent;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Rational64, Signed, Zero};

pub use laurent::{Laurent, Monomial};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct PhaseScalar {
    num: Laurent,
    den: Laurent,
}

impl PhaseScalar {
    pub fn zero(arity: usize) -> Self {
        PhaseScalar { num: Laurent::zero(arity), den: Laurent::one(arity) }
    }

    pub fn one(arity: usize) -> Self {
        PhaseScalar { num: Laurent::one(arity), den: Laurent::one(arity) }
    }

    pub fn from_laurent(num: Laurent) -> Self {
        let arity = num.arity();
        PhaseScalar { num, den: Laurent::one(arity) }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        Self::from_laurent(Laurent::constant(arity, c))
    }

    pub fn from_int(arity: usize, n: i64) -> Self {
        Self::constant(arity, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(arity: usize, r: Rational64) -> Self {
        Self::constant(
            arity,
            BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
        )
    }

    /// `q^a`.
    pub fn q_power(arity: usize, a: Rational64) -> Self {
        let mut key = Monomial::one(arity);
        key.q = a;
        Self::from_laurent(Laurent::term(key, BigRational::one()))
    }

    /// `z_k^n`, with `k` counted from 1.
    pub fn z_power(arity: usize, k: usize, n: i64) -> Result<Self> {
        if k == 0 || k > arity {
            return Err(Error::IndexOutOfRange { index: k, rank: arity });
        }
        let mut key = Monomial::one(arity);
        key.z[k - 1] = n;
        Ok(Self::from_laurent(Laurent::term(key, BigRational::one())))
    }

    pub fn monomial(key: Monomial, coeff: BigRational) -> Self {
        Self::from_laurent(Laurent::term(key, coeff))
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.try_eq(&Self::one(self.arity())).unwrap_or(false)
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalized(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let arity = num.arity();
        if num.is_zero() {
            return Ok(Self::zero(arity));
        }
        if den.is_one() {
            return Ok(PhaseScalar { num, den });
        }
        if let Some(quot) = num.div_exact(&den) {
            return Ok(PhaseScalar { num: quot, den: Laurent::one(arity) });
        }
        let shift = den.centering_shift();
        let num = num.mul_monomial(&shift);
        let den = den.mul_monomial(&shift);
        let lead = den.leading_render_coeff().cloned().unwrap_or_else(BigRational::one);
        let inv = lead.recip();
        Ok(PhaseScalar { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { left: self.arity(), right: other.arity() });
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num)?, self.den.clone());
        }
        if let Some(k) = other.den.div_exact(&self.den) {
            let num = self.num.mul(&k)?.add(&other.num)?;
            return Self::normalized(num, other.den.clone());
        }
        if let Some(k) = self.den.div_exact(&other.den) {
            let num = other.num.mul(&k)?.add(&self.num)?;
            return Self::normalized(num, self.den.clone());
        }
        let num = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        Self::normalized(num, self.den.mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { left: self.arity(), right: other.arity() });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity()));
        }
        let num = self.num.mul(&other.num)?;
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_laurent(num));
        }
        Self::normalized(num, self.den.mul(&other.den)?)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.invert()?)
    }

    fn neg_ref(&self) -> Self {
        PhaseScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::normalized(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut acc = Self::one(self.arity());
        for _ in 0..n.unsigned_abs() {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch { left: self.arity(), right: other.arity() });
        }
        if self.den == other.den {
            return Ok(self.num == other.num);
        }
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity());
        }
        PhaseScalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Moves the variables into a larger context starting at slot `offset`.
    pub fn embed(&self, arity: usize, offset: usize) -> Result<Self> {
        Ok(PhaseScalar { num: self.num.embed(arity, offset)?, den: self.den.embed(arity, offset)? })
    }

    /// Specializes `z_k ↦ q^{exps[k]}`. Fails when the denominator vanishes.
    pub fn substitute_z(&self, exps: &[Rational64]) -> Result<Self> {
        let den = self.den.substitute_z(exps)?;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes(self.to_string()));
        }
        Self::normalized(self.num.substitute_z(exps)?, den)
    }

    /// Canonical text with custom names for the weight variables (0-based slot).
    pub fn render_with(&self, names: &dyn Fn(usize) -> String) -> String {
        let num = render_laurent(&self.num, names);
        if self.den.is_one() {
            return num;
        }
        let den = render_laurent(&self.den, names);
        format!("{}/{}", wrap(&self.num, num), wrap(&self.den, den))
    }
}

fn wrap(p: &Laurent, s: String) -> String {
    let bare = match p.single_term() {
        Some((k, c)) => k.is_one() || c.is_one(),
        None => false,
    };
    if bare {
        s
    } else {
        format!("({s})")
    }
}

fn render_exponent(r: &Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("({r})")
    }
}

pub(crate) fn render_monomial(m: &Monomial, names: &dyn Fn(usize) -> String) -> String {
    let mut parts = Vec::new();
    if !m.q.is_zero() {
        if m.q.is_one() {
            parts.push("q".to_string());
        } else {
            parts.push(format!("q^{}", render_exponent(&m.q)));
        }
    }
    for (i, &e) in m.z.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names(i)),
            _ => parts.push(format!("{}^{}", names(i), e)),
        }
    }
    parts.join("·")
}

fn render_laurent(p: &Laurent, names: &dyn Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        let body = if m.is_one() {
            abs.to_string()
        } else if abs.is_one() {
            render_monomial(m, names)
        } else {
            format!("{}·{}", abs, render_monomial(m, names))
        };
        match (idx, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub(crate) fn default_name(i: usize) -> String {
    format!("z{}", i + 1)
}

impl fmt::Display for PhaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&default_name))
    }
}

impl PartialEq for PhaseScalar {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).unwrap_or(false)
    }
}

impl Eq for PhaseScalar {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&PhaseScalar> for &PhaseScalar {
            type Output = PhaseScalar;
            fn $method(self, rhs: &PhaseScalar) -> PhaseScalar {
                self.$checked(rhs).expect("phase scalar arity mismatch")
            }
        }
        impl $tr<PhaseScalar> for PhaseScalar {
            type Output = PhaseScalar;
            fn $method(self, rhs: PhaseScalar) -> PhaseScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &PhaseScalar {
    type Output = PhaseScalar;
    fn neg(self) -> PhaseScalar {
        self.neg_ref()
    }
}

impl Neg for PhaseScalar {
    type Output = PhaseScalar;
    fn neg(self) -> PhaseScalar {
        self.neg_ref()
    }
}

/// `[a]_base = 1 + base + … + base^{a-1}`, the polynomial form of `(1 - base^a)/(1 - base)`.
pub fn q_number(a: u32, base: &PhaseScalar) -> PhaseScalar {
    let arity = base.arity();
    let mut acc = PhaseScalar::zero(arity);
    let mut power = PhaseScalar::one(arity);
    for _ in 0..a {
        acc = &acc + &power;
        power = &power * base;
    }
    acc
}
