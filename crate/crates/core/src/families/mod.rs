//! Five code families over finite-field towers, each paired with a verifier
//! that certifies the geometry carried by its minimum-weight codewords.
//!
//! - [`build_op18`]: length-(q+1) cyclic trace codes over F_q whose minimum
//!   zero sets are the F_{q0}-sublines of PG(1,q).
//! - [`build_op27`]: length-(q²+1) negacyclic trace codes over F_{q²} whose
//!   minimum zero sets are the Baer sublines of PG(1,q²), equivalently the
//!   secant sections of an elliptic quadric.
//! - [`op28_construct`]: four-dimensional λ-constacyclic codes of length
//!   q²+1 whose generator columns form an ovoid; such a code exists exactly
//!   when λ is a nonsquare of F_q.
//! - [`lift_code`]: the ovoid code read over the extension alphabet
//!   F_{q^e}, with its closed-form weight enumerator [`lift_formula`].
//! - [`build_mds`]: negacyclic MDS codes of length (q−1)/2 whose minimum
//!   supports saturate every coordinate subset.

mod lift;
mod mds;
mod op18;
mod op27;
mod op28;

pub use lift::{independent_tuples, lift_code, lift_formula, rank_kernel_weight, LiftEnum};
pub use mds::build_mds;
pub use op18::{build_op18, op18_classify, op18_classify_scanned, Op18Report};
pub use op27::{build_op27, op27_classify, op27_classify_scanned, Op27Report};
pub use op28::{
    op28_construct, op28_context, op28_exhaustive_necessity, op28_exists, projective_order,
    Op28Witness,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::codes::{LinearCode, SupportSet};
use crate::designs::{Design, LambdaResult};
use crate::error::{Error, Result};

/// Builds the abort report for a zero set that failed classification:
/// recovers a witness message (base-Q digits) whose codeword vanishes
/// exactly there, so the failure is reproducible from the report alone.
pub(crate) fn classification_failure(
    code: &LinearCode,
    zero_set: &[u16],
    budget: u64,
    stage: &str,
) -> Error {
    let n = code.n() as u16;
    let target: Vec<u16> = (0..n).filter(|i| !zero_set.contains(i)).collect();
    let mut message = Vec::new();
    if code.check_budget(budget).is_ok() {
        for m in 1..code.message_count() as u64 {
            let word = code.codeword(m);
            let support: Vec<u16> = word
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(i, _)| i as u16)
                .collect();
            if support == target {
                let mut digits = Vec::with_capacity(code.k());
                let mut rest = m;
                for _ in 0..code.k() {
                    digits.push((rest % code.alphabet_q()) as u16);
                    rest /= code.alphabet_q();
                }
                digits.reverse();
                message = digits;
                break;
            }
        }
    }
    Error::ClassificationFailed {
        stage: String::from(stage),
        message,
        zero_set: zero_set.to_vec(),
    }
}

/// Packages minimum supports as (zero-set design, support design, λ at
/// t = 3). The zero sets must form a Steiner 3-design; the support design
/// is its blockwise complement.
pub(crate) fn support_design_from(v: u16, supports: &SupportSet) -> Result<(Design, Design, u64)> {
    let zero_design = Design::new(v, supports.complement().sets.clone())?;
    if !zero_design.is_steiner(3)? {
        return Err(Error::Invariant(String::from(
            "minimum zero sets do not form a Steiner 3-design",
        )));
    }
    let support_design = zero_design.complement();
    let lambda = match support_design.t_design_lambda(3)? {
        LambdaResult::Uniform(l) => l,
        LambdaResult::Nonuniform { .. } => {
            return Err(Error::Invariant(String::from(
                "support design is not 3-uniform",
            )))
        }
    };
    Ok((zero_design, support_design, lambda))
}
