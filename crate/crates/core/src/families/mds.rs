//! Negacyclic MDS codes of length (q−1)/2: X^n + 1 splits over F_q into
//! the linear factors at the odd powers of a primitive element, so the
//! ideal generated by a product of n−k of them is a k-dimensional
//! negacyclic code, and a Vandermonde argument on the remaining roots
//! makes it MDS.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{build_field, factor_prime_power, FieldCtx, FieldElem};

/// Multiplies an ascending-degree coefficient vector by (X − root).
fn poly_mul_linear(ctx: &FieldCtx, poly: &[FieldElem], root: FieldElem) -> Vec<FieldElem> {
    let mut out = vec![ctx.zero(); poly.len() + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i + 1] = ctx.add(out[i + 1], c);
        out[i] = ctx.sub(out[i], ctx.mul(root, c));
    }
    out
}

/// Builds the k-dimensional negacyclic code of length n = (q−1)/2 over F_q
/// generated by g(X) = Π_{j<n−k}(X − ρβ^j), where ρ is the canonical
/// primitive element and β = ρ². Verifies the factorization of X^n + 1,
/// the negacyclic shift, and the MDS property before returning.
pub fn build_mds(q: u64, k: usize) -> Result<LinearCode> {
    let (p, m) = factor_prime_power(q)?;
    if p == 2 || q < 5 {
        return Err(Error::BadParameter(format!(
            "q must be an odd prime power at least 5, got {q}"
        )));
    }
    let n = ((q - 1) / 2) as usize;
    if k == 0 || k > n {
        return Err(Error::BadParameter(format!(
            "k must lie in 1..={n} for q = {q}, got {k}"
        )));
    }
    let ctx = build_field(p, m)?;
    let rho = ctx.omega();
    let beta = ctx.mul(rho, rho);
    let mut roots = Vec::with_capacity(n);
    let mut r = rho;
    for _ in 0..n {
        roots.push(r);
        r = ctx.mul(r, beta);
    }
    let mut full = vec![ctx.one()];
    for &root in &roots {
        full = poly_mul_linear(&ctx, &full, root);
    }
    let splits =
        full[0] == ctx.one() && full[n] == ctx.one() && full[1..n].iter().all(|c| c.is_zero());
    if !splits {
        return Err(Error::Invariant(String::from(
            "the odd powers of the primitive element do not split X^n + 1",
        )));
    }
    let mut g = vec![ctx.one()];
    for &root in &roots[..n - k] {
        g = poly_mul_linear(&ctx, &g, root);
    }
    // row j holds X^j·g; its degree n−k+j stays below n, so reduction mod
    // X^n + 1 never kicks in
    let mut rows = Vec::with_capacity(k);
    for j in 0..k {
        let mut row = vec![ctx.zero(); n];
        for (i, &c) in g.iter().enumerate() {
            row[i + j] = c;
        }
        rows.push(row);
    }
    let minus_one = ctx.neg(ctx.one());
    let code = LinearCode::new(&ctx, q, rows, Some(minus_one))?;
    if !code.is_constacyclic(minus_one)? {
        return Err(Error::Invariant(String::from(
            "the generator rows do not shift negacyclically",
        )));
    }
    if !code.is_mds(0)? {
        return Err(Error::Invariant(String::from(
            "some k columns of the generator are dependent",
        )));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{binomial, mds_exact_support_count, DEFAULT_ENUM_BUDGET};
    use crate::designs::{Design, LambdaResult};
    use num_bigint::BigUint;

    #[test]
    fn frozen_generator_q23() {
        let code = build_mds(23, 5).unwrap();
        let ctx = build_field(23, 1).unwrap();
        assert_eq!(ctx.omega(), ctx.from_base(5));
        assert_eq!(code.n(), 11);
        assert_eq!(code.k(), 5);
        assert_eq!(code.multiplier(), Some(ctx.from_base(22)));
        let g: [u64; 11] = [13, 14, 21, 19, 5, 7, 1, 0, 0, 0, 0];
        for (i, &c) in g.iter().enumerate() {
            assert_eq!(code.generator()[0][i], ctx.from_base(c), "coefficient {i}");
        }
        // later rows shift the first
        for j in 1..5 {
            for i in 0..11 {
                let expected = if i < j {
                    ctx.zero()
                } else {
                    code.generator()[0][i - j]
                };
                assert_eq!(code.generator()[j][i], expected, "row {j}, column {i}");
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(build_mds(15, 2), Err(Error::NotPrimePower(15))));
        assert!(matches!(build_mds(3, 1), Err(Error::BadParameter(_))));
        assert!(matches!(build_mds(4, 1), Err(Error::BadParameter(_))));
        assert!(matches!(build_mds(8, 2), Err(Error::BadParameter(_))));
        assert!(matches!(build_mds(11, 0), Err(Error::BadParameter(_))));
        assert!(matches!(build_mds(11, 6), Err(Error::BadParameter(_))));
    }

    #[test]
    fn small_codes_reach_the_singleton_bound() {
        let code = build_mds(7, 2).unwrap();
        assert_eq!((code.n(), code.k()), (3, 2));
        let weights = code.enumerate_weights(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(weights.min_nonzero_weight(), Some(2));
        assert_eq!(weights.total(), BigUint::from(49u32));

        let code = build_mds(11, 3).unwrap();
        assert_eq!((code.n(), code.k()), (5, 3));
        let weights = code.enumerate_weights(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(weights.min_nonzero_weight(), Some(3));
        for (w, count) in [(3usize, 100u32), (4, 400), (5, 830)] {
            assert_eq!(weights.count(w), BigUint::from(count), "weight {w}");
            assert_eq!(
                weights.count(w),
                binomial(5, w as u64) * mds_exact_support_count(11, 3, w).unwrap(),
                "per-support law at weight {w}"
            );
        }
        for w in 3..=5 {
            assert!(
                code.support_saturation(w, DEFAULT_ENUM_BUDGET).unwrap(),
                "weight {w} misses a support"
            );
        }
    }

    #[test]
    fn q23_enumerator_and_design() {
        let code = build_mds(23, 5).unwrap();
        let weights = code.enumerate_weights(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(weights.min_nonzero_weight(), Some(7));
        let frozen: [(usize, u64); 5] = [
            (7, 7260),
            (8, 58080),
            (9, 451330),
            (10, 1972300),
            (11, 3947372),
        ];
        for (w, count) in frozen {
            assert_eq!(weights.count(w), BigUint::from(count), "weight {w}");
            assert_eq!(
                weights.count(w),
                binomial(11, w as u64) * mds_exact_support_count(23, 7, w).unwrap(),
                "per-support law at weight {w}"
            );
        }
        assert_eq!(weights.total(), BigUint::from(23u64.pow(5)));

        let supports = code.supports_at_weight(7, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(supports.len(), 330);
        assert!(supports.values().all(|&c| c == 22));
        assert!(code.support_saturation(7, DEFAULT_ENUM_BUDGET).unwrap());
        let design = Design::new(11, supports.into_keys().collect()).unwrap();
        assert!(design.is_complete(7));
        assert_eq!(
            design.t_design_lambda(5).unwrap(),
            LambdaResult::Uniform(15)
        );
    }
}
