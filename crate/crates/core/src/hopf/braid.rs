use crate::contour::ScreeningSequence;
use crate::error::{Error, Result};
use crate::phase::PhaseScalar;
use crate::root_data::{RootDatum, Weight};

/// Total phase picked up when `U_{λ1,I1}` is moved past `U_{λ2,I2}`:
/// the product of the pairwise exchange factors of all constituent fields,
///
/// `q^{λ1·λ2} · Π_{i∈I1} q^{-α_i·λ2} · Π_{j∈I2} q^{-α_j·λ1} · Π_{i∈I1, j∈I2} (-1)^{p_i p_j} q^{n_ij}`.
///
/// Convention: every pair is exchanged once in the same direction with phase
/// `e^{+iπΩ}`; no branch or contour-orientation data is modelled.
pub fn braid_phase(
    datum: &RootDatum,
    left: &Weight,
    left_seq: &ScreeningSequence,
    right: &Weight,
    right_seq: &ScreeningSequence,
) -> Result<PhaseScalar> {
    if left.is_generic() || right.is_generic() {
        return Err(Error::GenericWeight);
    }
    left.validate(datum)?;
    right.validate(datum)?;
    left_seq.validate(datum)?;
    right_seq.validate(datum)?;
    let mut exponent = left.pairing(right, datum)?;
    for &i in left_seq.labels() {
        exponent -= right.root_pairing(datum, i)?;
    }
    for &j in right_seq.labels() {
        exponent -= left.root_pairing(datum, j)?;
    }
    let mut odd_pairs = 0u32;
    for &i in left_seq.labels() {
        for &j in right_seq.labels() {
            exponent += datum.inner(i, j);
            odd_pairs += u32::from(datum.parity_unchecked(i) & datum.parity_unchecked(j));
        }
    }
    let phase = PhaseScalar::q_power(0, exponent);
    Ok(if odd_pairs % 2 == 1 { -phase } else { phase })
}
