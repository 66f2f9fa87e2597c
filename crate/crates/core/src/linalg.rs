//! Nullspaces over the fraction field of Laurent polynomials.
//!
//! Rows are first cleared of denominators, then reduced by fraction-free
//! cross-multiplication (`row_i ← p·row_i − e·row_pivot`), choosing the pivot
//! with the fewest monomials. Back substitution happens in the fraction field.

use crate::error::Result;
use crate::phase::{Laurent, PhaseScalar};

/// Row with every entry multiplied by the product of the row's distinct denominators.
fn clear_denominators(row: &[PhaseScalar]) -> Result<Vec<Laurent>> {
    let mut dens: Vec<Laurent> = Vec::new();
    for x in row {
        if !x.is_zero() && !x.is_polynomial() && !dens.contains(x.denominator()) {
            dens.push(x.denominator().clone());
        }
    }
    row.iter()
        .map(|x| {
            let mut acc = x.numerator().clone();
            if x.is_zero() {
                return Ok(acc);
            }
            for d in &dens {
                if d != x.denominator() {
                    acc = acc.mul(d)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Fraction-free reduction to a form where each pivot column is zero outside
/// its pivot row. Returns the reduced rows and the pivot column of each.
pub fn reduce(rows: &[Vec<PhaseScalar>], ncols: usize) -> Result<(Vec<Vec<Laurent>>, Vec<usize>)> {
    let mut m: Vec<Vec<Laurent>> = rows
        .iter()
        .map(|r| clear_denominators(r))
        .collect::<Result<_>>()?;
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let choice = (top..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| (m[i][col].len(), i));
        let Some(p) = choice else { continue };
        m.swap(top, p);
        let pivot_row = m[top].clone();
        let pivot = pivot_row[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let e = row[col].clone();
            for k in 0..ncols {
                row[k] = row[k].mul(&pivot)?.sub(&pivot_row[k].mul(&e)?)?;
            }
        }
        pivots.push(col);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    Ok((m, pivots))
}

/// Basis of `{x : M x = 0}`, one vector per free column, each scaled so that
/// its first nonzero entry is 1.
pub fn nullspace(rows: &[Vec<PhaseScalar>], ncols: usize, arity: usize) -> Result<Vec<Vec<PhaseScalar>>> {
    let (reduced, pivots) = reduce(rows, ncols)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![PhaseScalar::zero(arity); ncols];
        x[f] = PhaseScalar::one(arity);
        for (row, &p) in reduced.iter().zip(&pivots) {
            if row[f].is_zero() {
                continue;
            }
            let num = -PhaseScalar::from_laurent(row[f].clone());
            x[p] = num.try_div(&PhaseScalar::from_laurent(row[p].clone()))?;
        }
        let lead = x.iter().find(|c| !c.is_zero()).cloned().expect("x_f = 1");
        let inv = lead.invert()?;
        basis.push(x.iter().map(|c| c * &inv).collect());
    }
    Ok(basis)
}
