//! Cyclic trace codes of length q+1 over F_q, built from the quadratic
//! extension: coordinates sit on the norm-one circle 𝒰_{q+1}, and the
//! minimum zero sets pull back through the Cayley map to exactly the
//! F_{q0}-sublines of PG(1,q), q0 = p^{gcd(m,s)}.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::gcd;

use crate::codes::{LinearCode, ScanResult, WeightEnum};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::gf::{build_field, FieldCtx, FieldElem};
use crate::projline::{cayley_inv, enumerate_sublines, find_eps, is_subline, ProjPoint1, Subline};

use super::{classification_failure, support_design_from};

fn check_shift(m: u32, s: u32) -> Result<()> {
    if s == 0 || s >= m {
        return Err(Error::BadParameter(format!(
            "shift exponent must satisfy 1 <= s < m, got s = {s}, m = {m}"
        )));
    }
    Ok(())
}

/// Coordinate table: entry i sits at u_i = β^{−i}, β the canonical
/// generator of the circle 𝒰_{q+1} inside F_{q²}.
fn coordinate_circle(ctx: &FieldCtx, q: u64) -> Result<Vec<FieldElem>> {
    let beta = ctx.pow(ctx.omega(), ((q * q - 1) / (q + 1)) as u128);
    let beta_inv = ctx.inv(beta)?;
    let mut us = Vec::with_capacity((q + 1) as usize);
    let mut u = ctx.one();
    for _ in 0..=q {
        us.push(u);
        u = ctx.mul(u, beta_inv);
    }
    Ok(us)
}

/// The 4-dimensional F_q-code with entries
/// Tr_{q²/q}(a·u^{(p^s−1)/2} + b·u^{(p^s+1)/2}) at u = β^{−i}, i = 0..q,
/// messages (a,b) ∈ F_{q²}². Rows come from the canonical power basis of
/// F_{q²} over F_q; the code is closed under the plain cyclic shift.
pub fn build_op18(p: u64, m: u32, s: u32) -> Result<LinearCode> {
    check_shift(m, s)?;
    let ctx = build_field(p, 2 * m)?;
    let q = p.pow(m);
    let q2 = q * q;
    let us = coordinate_circle(&ctx, q)?;
    let ps = p.pow(s);
    let (e1, e2) = (((ps - 1) / 2) as u128, ps.div_ceil(2) as u128);
    let basis = ctx.canonical_power_basis(q, 2)?;
    let zero = ctx.zero();
    let message_basis = [
        (basis[0], zero),
        (basis[1], zero),
        (zero, basis[0]),
        (zero, basis[1]),
    ];
    let mut rows = Vec::with_capacity(4);
    for &(a, b) in &message_basis {
        let mut row = Vec::with_capacity(us.len());
        for &u in &us {
            let x = ctx.add(ctx.mul(a, ctx.pow(u, e1)), ctx.mul(b, ctx.pow(u, e2)));
            row.push(ctx.trace(x, q2, q)?);
        }
        rows.push(row);
    }
    LinearCode::new(&ctx, q, rows, Some(ctx.one()))
}

/// Everything the verifier certifies for one parameter triple.
#[derive(Clone, Debug)]
pub struct Op18Report {
    pub q: u64,
    pub q0: u64,
    pub weights: WeightEnum,
    pub min_weight: usize,
    /// Pullbacks of the minimum zero sets, sorted; equal to the full
    /// subline census of PG(1,q) over F_{q0}.
    pub sublines: Vec<Subline>,
    pub zero_design: Design,
    pub support_design: Design,
    /// λ of the support design at t = 3.
    pub support_lambda: u64,
}

/// Enumerates the code, pulls every minimum zero set back through the
/// Cayley map ϑ_ε, certifies each pullback as an F_{q0}-subline, checks
/// the collection equals the full subline census, and packages the
/// support design. Any failing zero set aborts with a witness codeword.
pub fn op18_classify(code: &LinearCode, p: u64, m: u32, s: u32, budget: u64) -> Result<Op18Report> {
    let scan = code.scan(None, budget)?;
    op18_classify_scanned(code, p, m, s, budget, &scan)
}

/// [`op18_classify`] on a scan the caller already ran (for example a merged
/// multi-thread scan); `budget` only caps the failure-witness search.
pub fn op18_classify_scanned(
    code: &LinearCode,
    p: u64,
    m: u32,
    s: u32,
    budget: u64,
    scan: &ScanResult,
) -> Result<Op18Report> {
    check_shift(m, s)?;
    let ctx = code.ctx();
    let q = p.pow(m);
    let q0 = p.pow(gcd(m, s));
    let n = (q + 1) as usize;
    if code.n() != n || code.alphabet_q() != q {
        return Err(Error::BadParameter(format!(
            "code shape ({}, alphabet {}) does not match q = {q}",
            code.n(),
            code.alphabet_q()
        )));
    }
    let weights = code.weights_from_scan(scan);
    let min_weight = weights
        .min_nonzero_weight()
        .ok_or_else(|| Error::Invariant(String::from("code has no nonzero codeword")))?;
    if min_weight != (q - q0) as usize {
        return Err(Error::Invariant(format!(
            "minimum weight {min_weight}, expected q - q0 = {}",
            q - q0
        )));
    }
    let supports = code.min_supports_from_scan(scan)?;
    let zero_sets = supports.complement();

    let eps = find_eps(ctx, q)?;
    let us = coordinate_circle(ctx, q)?;
    let mut sublines = Vec::with_capacity(zero_sets.sets.len());
    for z in &zero_sets.sets {
        let mut points: Vec<ProjPoint1> = z
            .iter()
            .map(|&i| cayley_inv(ctx, eps, us[i as usize]))
            .collect();
        if is_subline(ctx, q0, &points)?.is_none() {
            return Err(classification_failure(
                code,
                z,
                budget,
                "zero-set pullback is not a subline",
            ));
        }
        points.sort_unstable();
        sublines.push(Subline { q0, points });
    }
    sublines.sort_unstable();
    let census = enumerate_sublines(ctx, q, q0)?;
    if sublines != census {
        return Err(Error::Invariant(format!(
            "{} pullback sublines do not match the census of {}",
            sublines.len(),
            census.len()
        )));
    }

    let (zero_design, support_design, support_lambda) = support_design_from(n as u16, &supports)?;
    Ok(Op18Report {
        q,
        q0,
        weights,
        min_weight,
        sublines,
        zero_design,
        support_design,
        support_lambda,
    })
}
