//! Free words in the generators, their k-fold tensor products, and the
//! coproduct, antipode and counit on them.

use std::collections::BTreeMap;
use std::fmt;


use crate::contour::{render_term, Generator, ModuleContext, ModuleVector};
use crate::error::Result;
use crate::phase::{default_name, PhaseScalar};
use crate::root_data::RootDatum;

/// A word in the generators; the empty word is the identity.
pub type Word = Vec<Generator>;

pub fn word_parity(word: &[Generator], datum: &RootDatum) -> u8 {
    word.iter().map(|g| g.parity(datum)).sum::<u8>() % 2
}

fn render_word(w: &[Generator]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(Generator::to_string).collect()
    }
}

/// Linear combination of free words with constant (`q`-only) coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, PhaseScalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::word(Vec::new(), PhaseScalar::one(0))
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(vec![g], PhaseScalar::one(0))
    }

    pub fn word(w: Word, coeff: PhaseScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(w, coeff);
        out
    }

    /// Parses whitespace-separated generator tokens into a single word.
    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::word(Generator::parse_word(s)?, PhaseScalar::one(0)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &PhaseScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Word, c: PhaseScalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&PhaseScalar::from_int(0, -1)))
    }

    pub fn scale(&self, c: &PhaseScalar) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// Acts on a module vector, each word right to left.
    pub fn act(&self, ctx: &ModuleContext, v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(ctx.arity());
        for (w, c) in &self.terms {
            let image = ctx.apply_word(w, v)?;
            out = out.add(&image.scale(&c.embed(ctx.arity(), 0)?)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| render_term(c, &render_word(w), &default_name))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Linear combination of k-fold tensor words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, PhaseScalar>,
}

impl TensorElement {
    pub fn zero(k: usize) -> Self {
        TensorElement { arity: k, terms: BTreeMap::new() }
    }

    pub fn pure(factors: Vec<Word>, coeff: PhaseScalar) -> Self {
        let mut out = Self::zero(factors.len());
        out.add_term(factors, coeff);
        out
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(k: usize) -> Self {
        Self::pure(vec![Vec::new(); k], PhaseScalar::one(0))
    }

    /// Number of tensor factors.
    pub fn factors(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &PhaseScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Vec<Word>, c: PhaseScalar) {
        debug_assert_eq!(w.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Super tensor product: `(a_1⊗…⊗a_k)(b_1⊗…⊗b_k)` carries
    /// `(-1)^{Σ_{i<j} p(a_j) p(b_i)}`.
    pub fn mul(&self, other: &Self, datum: &RootDatum) -> Self {
        assert_eq!(self.arity, other.arity, "tensor factor count mismatch");
        let mut out = Self::zero(self.arity);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut sign = 0u8;
                for i in 0..self.arity {
                    for j in i + 1..self.arity {
                        sign ^= word_parity(&a[j], datum) & word_parity(&b[i], datum);
                    }
                }
                let w = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let mut v = x.clone();
                        v.extend_from_slice(y);
                        v
                    })
                    .collect();
                let c = ca * cb;
                out.add_term(w, if sign == 1 { -c } else { c });
            }
        }
        out
    }

    /// Applies `Δ` to tensor slot `slot`, producing a (k+1)-fold element.
    pub fn coproduct_at(&self, slot: usize, datum: &RootDatum) -> Self {
        let mut out = Self::zero(self.arity + 1);
        for (w, c) in &self.terms {
            for (split, c2) in coproduct_word(&w[slot], datum).terms {
                let mut nw = w[..slot].to_vec();
                nw.extend(split);
                nw.extend_from_slice(&w[slot + 1..]);
                out.add_term(nw, c * &c2);
            }
        }
        out
    }

    /// Applies `ε` to tensor slot `slot`, producing a (k-1)-fold element.
    pub fn counit_at(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.arity - 1);
        for (w, c) in &self.terms {
            let e = counit_word(&w[slot]);
            if e.is_zero() {
                continue;
            }
            let mut nw = w.clone();
            nw.remove(slot);
            out.add_term(nw, c * &e);
        }
        out
    }

    /// Collapses a 1-fold element into the algebra.
    pub fn into_algebra(self) -> AlgebraElement {
        assert_eq!(self.arity, 1, "only 1-fold elements collapse");
        let mut out = AlgebraElement::zero();
        for (mut w, c) in self.terms {
            out.add_term(w.remove(0), c);
        }
        out
    }

    /// `m ∘ (f ⊗ g)` on a 2-fold element, with `f`, `g` even linear maps given on words.
    pub fn multiply_with(
        &self,
        left: &dyn Fn(&[Generator]) -> AlgebraElement,
        right: &dyn Fn(&[Generator]) -> AlgebraElement,
    ) -> AlgebraElement {
        assert_eq!(self.arity, 2, "multiplication needs a 2-fold element");
        let mut out = AlgebraElement::zero();
        for (w, c) in &self.terms {
            out = out.add(&left(&w[0]).mul(&right(&w[1])).scale(c));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let basis: Vec<String> = w.iter().map(|x| render_word(x)).collect();
                render_term(c, &basis.join("⊗"), &default_name)
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn one0() -> PhaseScalar {
    PhaseScalar::one(0)
}

fn minus_one0() -> PhaseScalar {
    PhaseScalar::from_int(0, -1)
}

/// `Δ(F_j) = F_j⊗1 + K_j^{-1}⊗F_j`, `Δ(K_j^{±1}) = K_j^{±1}⊗K_j^{±1}`,
/// `Δ(E_j) = E_j⊗K_j + 1⊗E_j`.
pub fn coproduct(g: Generator) -> TensorElement {
    match g {
        Generator::F(j) => TensorElement::pure(vec![vec![g], vec![]], one0())
            .add(&TensorElement::pure(vec![vec![Generator::KInv(j)], vec![g]], one0())),
        Generator::K(_) | Generator::KInv(_) => TensorElement::pure(vec![vec![g], vec![g]], one0()),
        Generator::E(j) => TensorElement::pure(vec![vec![g], vec![Generator::K(j)]], one0())
            .add(&TensorElement::pure(vec![vec![], vec![g]], one0())),
    }
}

/// `Δ` extended multiplicatively (with the super sign) to a word.
pub fn coproduct_word(word: &[Generator], datum: &RootDatum) -> TensorElement {
    word.iter()
        .fold(TensorElement::one(2), |acc, &g| acc.mul(&coproduct(g), datum))
}

/// `γ(E_j) = -E_jK_j^{-1}`, `γ(K_j^{±1}) = K_j^{∓1}`, `γ(F_j) = -K_jF_j`.
pub fn antipode(g: Generator) -> AlgebraElement {
    match g {
        Generator::E(j) => AlgebraElement::word(vec![g, Generator::KInv(j)], minus_one0()),
        Generator::F(j) => AlgebraElement::word(vec![Generator::K(j), g], minus_one0()),
        Generator::K(j) => AlgebraElement::generator(Generator::KInv(j)),
        Generator::KInv(j) => AlgebraElement::generator(Generator::K(j)),
    }
}

/// `γ` extended as a super anti-homomorphism:
/// `γ(ab) = (-1)^{p(a)p(b)} γ(b)γ(a)`.
pub fn antipode_word(word: &[Generator], datum: &RootDatum) -> AlgebraElement {
    let mut sign = 0u8;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            sign ^= word[i].parity(datum) & word[j].parity(datum);
        }
    }
    let out = word
        .iter()
        .rev()
        .fold(AlgebraElement::one(), |acc, &g| acc.mul(&antipode(g)));
    if sign == 1 {
        out.scale(&minus_one0())
    } else {
        out
    }
}

/// `ε(E_j) = ε(F_j) = 0`, `ε(K_j^{±1}) = 1`.
pub fn counit(g: Generator) -> PhaseScalar {
    match g {
        Generator::E(_) | Generator::F(_) => PhaseScalar::zero(0),
        Generator::K(_) | Generator::KInv(_) => one0(),
    }
}

pub fn counit_word(word: &[Generator]) -> PhaseScalar {
    word.iter().fold(one0(), |acc, &g| &acc * &counit(g))
}

/// A defining relation `lhs = rhs` of the algebra.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

impl Relation {
    /// `lhs - rhs`.
    pub fn difference(&self) -> AlgebraElement {
        self.lhs.sub(&self.rhs)
    }
}

/// The (anti-)commutation relations:
/// `K_iK_j = K_jK_i`, `K_iK_i^{-1} = 1`, `K_iE_j = q^{n_ij}E_jK_i`,
/// `K_iF_j = q^{-n_ij}F_jK_i`, and
/// `E_iF_j - (-1)^{p_ip_j}F_jE_i = δ_ij (K_i - K_i^{-1})/(q_i - q_i^{-1})` with `q_i = q^{D_i}`.
pub fn relations(datum: &RootDatum) -> Vec<Relation> {
    use Generator::{E, F, K, KInv};
    let r = datum.rank();
    let d = datum.symmetrizers();
    let w = |gs: &[Generator]| AlgebraElement::word(gs.to_vec(), one0());
    let mut out = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            out.push(Relation {
                name: format!("K{i}K{j} = K{j}K{i}"),
                lhs: w(&[K(i), K(j)]),
                rhs: w(&[K(j), K(i)]),
            });
        }
        out.push(Relation { name: format!("K{i}K{i}- = 1"), lhs: w(&[K(i), KInv(i)]), rhs: AlgebraElement::one() });
        out.push(Relation { name: format!("K{i}-K{i} = 1"), lhs: w(&[KInv(i), K(i)]), rhs: AlgebraElement::one() });
    }
    for i in 1..=r {
        for j in 1..=r {
            let n = datum.inner(i, j);
            out.push(Relation {
                name: format!("K{i}E{j} = q^({n})E{j}K{i}"),
                lhs: w(&[K(i), E(j)]),
                rhs: AlgebraElement::word(vec![E(j), K(i)], PhaseScalar::q_power(0, n)),
            });
            out.push(Relation {
                name: format!("K{i}F{j} = q^({})F{j}K{i}", -n),
                lhs: w(&[K(i), F(j)]),
                rhs: AlgebraElement::word(vec![F(j), K(i)], PhaseScalar::q_power(0, -n)),
            });
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            let odd = datum.parity_unchecked(i) * datum.parity_unchecked(j) == 1;
            let sign = if odd { one0() } else { minus_one0() };
            let lhs = w(&[E(i), F(j)]).add(&AlgebraElement::word(vec![F(j), E(i)], sign));
            let rhs = if i == j {
                let qi = PhaseScalar::q_power(0, d[i - 1]);
                let norm = (&qi - &qi.invert().expect("q_i is a monomial"))
                    .invert()
                    .expect("q_i - q_i^{-1} is nonzero");
                w(&[K(i)]).sub(&w(&[KInv(i)])).scale(&norm)
            } else {
                AlgebraElement::zero()
            };
            let bracket = if odd { "{" } else { "[" };
            let close = if odd { "}" } else { "]" };
            let rhs_name = if i == j {
                format!("(K{i} - K{i}-)/(q_{i} - q_{i}^-1)")
            } else {
                "0".to_string()
            };
            out.push(Relation { name: format!("{bracket}E{i},F{j}{close} = {rhs_name}"), lhs, rhs });
        }
    }
    out
}
