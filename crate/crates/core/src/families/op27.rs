//! Negacyclic trace codes of length q²+1 over F_{q²}, q ≡ 1 (mod 4),
//! built from the quartic extension. Minimum zero sets transport through
//! i ↦ (δ^{−i})^{q+1} onto circle subsets, pull back through the Cayley
//! map to the Baer sublines of PG(1,q²), and map through the projective
//! model onto the secant sections of an elliptic quadric of PG(3,q).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::codes::{LinearCode, ScanResult, WeightEnum};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::gf::{build_field, factor_prime_power, FieldCtx, FieldElem};
use crate::pg3::{all_planes, classify_plane, iota, iota_quadric, PlaneClass, ProjPoint3};
use crate::projline::{
    cayley_inv, enumerate_sublines, find_eps, is_subline, unit_circle, ProjPoint1, Subline,
};

use super::{classification_failure, support_design_from};

fn check_q(q: u64) -> Result<(u64, u32)> {
    let (p, m) = factor_prime_power(q)?;
    if q % 4 != 1 {
        return Err(Error::BadParameter(format!("q = {q} is not 1 mod 4")));
    }
    Ok((p, m))
}

/// δ, the canonical element of order 2(q²+1) in F_{q⁴}.
fn delta(ctx: &FieldCtx, q: u64) -> FieldElem {
    ctx.pow(ctx.omega(), (ctx.group_order() / (2 * (q * q + 1))) as u128)
}

/// The 4-dimensional F_{q²}-code with entries
/// Tr_{q⁴/q²}(a·δ^{−i} + b·δ^{−(q²+q+1)i}), i = 0..q², messages
/// (a,b) ∈ F_{q⁴}². Rows come from the canonical power basis of F_{q⁴}
/// over F_{q²}; the code is negacyclic because δ^{−(q²+1)} = −1.
pub fn build_op27(q: u64) -> Result<LinearCode> {
    let (p, m) = check_q(q)?;
    let ctx = build_field(p, 4 * m)?;
    let q2 = q * q;
    let n = (q2 + 1) as usize;
    let delta_inv = ctx.inv(delta(&ctx, q))?;
    let second = (q2 + q + 1) as u128;
    let basis = ctx.canonical_power_basis(q2, 2)?;
    let zero = ctx.zero();
    let message_basis = [
        (basis[0], zero),
        (basis[1], zero),
        (zero, basis[0]),
        (zero, basis[1]),
    ];
    let mut rows = Vec::with_capacity(4);
    for &(a, b) in &message_basis {
        let mut row = Vec::with_capacity(n);
        let mut u = ctx.one();
        for _ in 0..n {
            let x = ctx.add(ctx.mul(a, u), ctx.mul(b, ctx.pow(u, second)));
            row.push(ctx.trace(x, q2 * q2, q2)?);
            u = ctx.mul(u, delta_inv);
        }
        rows.push(row);
    }
    let minus_one = ctx.neg(ctx.one());
    LinearCode::new(&ctx, q2, rows, Some(minus_one))
}

/// Everything the verifier certifies for one q.
#[derive(Clone, Debug)]
pub struct Op27Report {
    pub q: u64,
    pub weights: WeightEnum,
    pub min_weight: usize,
    /// Pullbacks of the transported minimum zero sets, sorted; equal to
    /// the full Baer-subline census of PG(1,q²).
    pub sublines: Vec<Subline>,
    /// Count of secant planes matched by the subline images under the
    /// projective model (equals the subline count).
    pub secant_sections: usize,
    pub zero_design: Design,
    pub support_design: Design,
    /// λ of the support design at t = 3.
    pub support_lambda: u64,
}

/// Enumerates the code and certifies, in order: the coordinate transport
/// i ↦ (δ^{−i})^{q+1} is a bijection onto 𝒰_{q²+1}; every transported
/// minimum zero set pulls back through the Cayley map to a Baer subline;
/// the pullbacks exhaust the census; their images under the projective
/// model are exactly the secant sections of the elliptic quadric. Emits
/// the complement design of the zero sets.
pub fn op27_classify(code: &LinearCode, q: u64, budget: u64) -> Result<Op27Report> {
    let scan = code.scan(None, budget)?;
    op27_classify_scanned(code, q, budget, &scan)
}

/// [`op27_classify`] on a scan the caller already ran (for example a merged
/// multi-thread scan); `budget` only caps the failure-witness search.
pub fn op27_classify_scanned(
    code: &LinearCode,
    q: u64,
    budget: u64,
    scan: &ScanResult,
) -> Result<Op27Report> {
    check_q(q)?;
    let ctx = code.ctx();
    let q2 = q * q;
    let n = (q2 + 1) as usize;
    if code.n() != n || code.alphabet_q() != q2 {
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
    if min_weight != (q2 - q) as usize {
        return Err(Error::Invariant(format!(
            "minimum weight {min_weight}, expected q² - q = {}",
            q2 - q
        )));
    }
    let supports = code.min_supports_from_scan(scan)?;
    let zero_sets = supports.complement();

    // coordinate transport, validated bijective onto the circle
    let delta_inv = ctx.inv(delta(ctx, q))?;
    let mut table = Vec::with_capacity(n);
    let mut u = ctx.one();
    for _ in 0..n {
        table.push(ctx.pow(u, (q + 1) as u128));
        u = ctx.mul(u, delta_inv);
    }
    let mut image = table.clone();
    image.sort_unstable();
    image.dedup();
    if image != unit_circle(ctx, q2 + 1)? {
        return Err(Error::Invariant(String::from(
            "coordinate transport is not a bijection onto the circle",
        )));
    }

    // pull back through the Cayley map of F_{q⁴}/F_{q²}
    let omega = find_eps(ctx, q2)?;
    let mut sublines = Vec::with_capacity(zero_sets.sets.len());
    for z in &zero_sets.sets {
        let mut points: Vec<ProjPoint1> = z
            .iter()
            .map(|&i| cayley_inv(ctx, omega, table[i as usize]))
            .collect();
        if is_subline(ctx, q, &points)?.is_none() {
            return Err(classification_failure(
                code,
                z,
                budget,
                "transported zero set is not a Baer subline",
            ));
        }
        points.sort_unstable();
        sublines.push(Subline { q0: q, points });
    }
    sublines.sort_unstable();
    let census = enumerate_sublines(ctx, q2, q)?;
    if sublines != census {
        return Err(Error::Invariant(format!(
            "{} pullback sublines do not match the census of {}",
            sublines.len(),
            census.len()
        )));
    }

    // subline images under the projective model = secant sections
    let zeta = find_eps(ctx, q)?;
    let quadric = iota_quadric(ctx, q, zeta)?;
    let mut images: Vec<Vec<ProjPoint3>> = Vec::with_capacity(sublines.len());
    for subline in &sublines {
        let mut img = Vec::with_capacity(subline.points.len());
        for &t in &subline.points {
            img.push(iota(ctx, q, zeta, t)?);
        }
        img.sort_unstable();
        images.push(img);
    }
    images.sort_unstable();
    let mut sections: Vec<Vec<ProjPoint3>> = Vec::new();
    for plane in all_planes(ctx, q)? {
        if let PlaneClass::Secant(mut section) = classify_plane(ctx, &plane, &quadric)? {
            section.sort_unstable();
            sections.push(section);
        }
    }
    sections.sort_unstable();
    if images != sections {
        return Err(Error::Invariant(format!(
            "{} subline images do not match {} secant sections",
            images.len(),
            sections.len()
        )));
    }

    let (zero_design, support_design, support_lambda) = support_design_from(n as u16, &supports)?;
    Ok(Op27Report {
        q,
        weights,
        min_weight,
        sublines,
        secant_sections: sections.len(),
        zero_design,
        support_design,
        support_lambda,
    })
}
