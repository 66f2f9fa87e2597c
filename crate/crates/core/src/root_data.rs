//! Simple-root data of a Lie superalgebra, given only through the Gram matrix
//! of the simple roots and the set of odd simple roots.

use std::collections::BTreeSet;
use std::fmt;

use num::{Rational64, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Rational64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    name: String,
    gram: Matrix,
    /// Odd simple roots, 1-based.
    odd: BTreeSet<usize>,
}

impl RootDatum {
    pub fn new(name: impl Into<String>, gram: Matrix, odd: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 {
            return Err(Error::InvalidDatum("rank must be at least 1".into()));
        }
        if gram.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidDatum("gram matrix must be square".into()));
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidDatum(format!(
                        "gram matrix not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let odd: BTreeSet<usize> = odd.into_iter().collect();
        if let Some(&bad) = odd.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        for i in 1..=rank {
            if !odd.contains(&i) && gram[i - 1][i - 1].is_zero() {
                return Err(Error::InvalidDatum(format!("even simple root {i} is isotropic")));
            }
        }
        Ok(RootDatum { name: name.into(), gram, odd })
    }

    /// Built-in distinguished simple-root systems.
    pub fn catalog(name: &str) -> Result<Self> {
        let int = |rows: &[&[i64]]| -> Matrix {
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
                .collect()
        };
        match name {
            "sl2" => Self::new(name, int(&[&[2]]), []),
            "sl3" => Self::new(name, int(&[&[2, -1], &[-1, 2]]), []),
            "sl2_1" => Self::new(name, int(&[&[2, -1], &[-1, 0]]), [2]),
            "osp1_2" => Self::new(name, int(&[&[1]]), [1]),
            _ => Err(Error::UnknownAlgebra(name.to_string())),
        }
    }

    pub const CATALOG: [&'static str; 4] = ["sl2", "sl3", "sl2_1", "osp1_2"];

    /// Parses the JSON algebra config `{"rank", "gram", "odd"}`.
    pub fn from_config_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(default)]
            name: Option<String>,
            rank: usize,
            gram: Vec<Vec<serde_json::Value>>,
            #[serde(default)]
            odd: Vec<usize>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if raw.gram.len() != raw.rank {
            return Err(Error::InvalidDatum(format!(
                "rank {} but gram has {} rows",
                raw.rank,
                raw.gram.len()
            )));
        }
        let gram = raw
            .gram
            .iter()
            .map(|row| row.iter().map(parse_json_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()?;
        Self::new(raw.name.unwrap_or_else(|| "custom".into()), gram, raw.odd)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn odd(&self) -> &BTreeSet<usize> {
        &self.odd
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    /// `α_i·α_j`, 1-based. Panics on out-of-range indices.
    pub fn inner(&self, i: usize, j: usize) -> Rational64 {
        self.gram[i - 1][j - 1]
    }

    /// `p(E_i) = p(F_i) = p(S_i)`.
    pub fn parity(&self, i: usize) -> Result<u8> {
        self.check_index(i)?;
        Ok(self.parity_unchecked(i))
    }

    pub(crate) fn parity_unchecked(&self, i: usize) -> u8 {
        u8::from(self.odd.contains(&i))
    }

    pub fn cartan_matrix(&self) -> Matrix {
        let two = Rational64::from_integer(2);
        self.gram
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let nii = self.gram[i][i];
                row.iter()
                    .map(|&nij| if nii.is_zero() { nij } else { two * nij / nii })
                    .collect()
            })
            .collect()
    }

    /// `D_i = α_i²/2`, or 1 for isotropic roots.
    pub fn symmetrizers(&self) -> Vec<Rational64> {
        (0..self.rank())
            .map(|i| {
                let nii = self.gram[i][i];
                if nii.is_zero() {
                    Rational64::from_integer(1)
                } else {
                    nii / Rational64::from_integer(2)
                }
            })
            .collect()
    }

    pub fn omega_data(&self) -> OmegaData {
        let r = self.rank();
        let hat_signs = (1..=r)
            .map(|i| {
                (1..=r)
                    .map(|j| if self.parity_unchecked(i) * self.parity_unchecked(j) == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect();
        OmegaData { numerators: self.gram.clone(), hat_signs }
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {}, odd {:?})", self.name, self.rank(), self.odd)
    }
}

fn parse_json_rational(v: &serde_json::Value) -> Result<Rational64> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(Rational64::from_integer)
            .ok_or_else(|| Error::Config(format!("gram entry {n} is not an integer"))),
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::Config(format!("gram entry {other} is not a rational"))),
    }
}

/// Parses `"p/q"` or `"n"`.
pub fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => s.parse::<i64>().map(Rational64::from_integer).map_err(|_| bad()),
    }
}

/// Braiding exponents over the formal `t`: `Ω_ij = numerators[i][j] / t`,
/// and `hat_signs[i][j] = (-1)^{p_i p_j}` for `Ω̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaData {
    pub numerators: Matrix,
    pub hat_signs: Vec<Vec<i8>>,
}

/// Highest weight of a vertex operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    /// Pairings carried by formal variables `z_j = q^{-α_j·λ}`.
    Generic,
    /// `λ = Σ c_i α_i`.
    Concrete(Vec<Rational64>),
}

impl Weight {
    pub fn is_generic(&self) -> bool {
        matches!(self, Weight::Generic)
    }

    pub fn validate(&self, datum: &RootDatum) -> Result<()> {
        match self {
            Weight::Concrete(c) if c.len() != datum.rank() => Err(Error::Config(format!(
                "weight has {} coordinates, rank is {}",
                c.len(),
                datum.rank()
            ))),
            _ => Ok(()),
        }
    }

    /// `α_j·λ` for a concrete weight.
    pub fn root_pairing(&self, datum: &RootDatum, j: usize) -> Result<Rational64> {
        match self {
            Weight::Generic => Err(Error::GenericWeight),
            Weight::Concrete(c) => {
                datum.check_index(j)?;
                Ok(c.iter().enumerate().map(|(i, ci)| *ci * datum.inner(j, i + 1)).sum())
            }
        }
    }

    /// `λ·λ'` for concrete weights.
    pub fn pairing(&self, other: &Weight, datum: &RootDatum) -> Result<Rational64> {
        match (self, other) {
            (Weight::Concrete(a), Weight::Concrete(b)) => {
                let r = datum.rank();
                let mut acc = Rational64::zero();
                for i in 0..r {
                    for j in 0..r {
                        acc += a[i] * datum.gram[i][j] * b[j];
                    }
                }
                Ok(acc)
            }
            _ => Err(Error::GenericWeight),
        }
    }

    /// Parses `generic` or a comma-separated list of rationals.
    pub fn parse(s: &str) -> Result<Weight> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("generic") {
            return Ok(Weight::Generic);
        }
        s.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight::Concrete)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Generic => f.write_str("generic"),
            Weight::Concrete(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}
