//! Constacyclic ovoid codes: for λ ∈ F_q*, a four-dimensional
//! λ-constacyclic code of length q²+1 whose generator columns form an
//! ovoid of PG(3,q) exists exactly when λ is a nonsquare. The
//! construction picks θ = Ω^{(q+1)c} of projective order q²+1 with
//! θ^{q²+1} = λ, then writes the orbit θ^i·v of a quadric zero v in the
//! power basis {1, θ, θ², θ³}.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::gcd;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{build_field, factor_prime_power, FieldCtx, FieldElem};
use crate::linalg::SubfieldCoords;
use crate::pg3::{Ovoid, ProjPoint3};

/// The tower hosting the construction for a given q: F_{p^{4m}}.
pub fn op28_context(q: u64) -> Result<FieldCtx> {
    let (p, m) = factor_prime_power(q)?;
    build_field(p, 4 * m)
}

/// Smallest k ≥ 1 with θ^k ∈ F_q. Bounded by the group order because
/// θ^{|F*|} = 1.
pub fn projective_order(ctx: &FieldCtx, theta: FieldElem, q: u64) -> Result<u64> {
    if theta.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut acc = theta;
    for k in 1..=ctx.group_order() {
        if ctx.is_in_subfield(acc, q)? {
            return Ok(k);
        }
        acc = ctx.mul(acc, theta);
    }
    Err(Error::Invariant(String::from(
        "projective order exceeded the group order",
    )))
}

fn check_lambda(ctx: &FieldCtx, q: u64, lambda: FieldElem) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !ctx.is_in_subfield(lambda, q)? {
        return Err(Error::NotInSubfield);
    }
    Ok(())
}

/// A λ-constacyclic ovoid code exists iff λ is a nonsquare of F_q.
pub fn op28_exists(ctx: &FieldCtx, q: u64, lambda: FieldElem) -> Result<bool> {
    check_lambda(ctx, q, lambda)?;
    Ok(!ctx.is_square_in(lambda, q)?)
}

/// The full construction record: every choice that pins the code, plus
/// the verified ovoid and the code itself.
#[derive(Clone, Debug)]
pub struct Op28Witness {
    pub q: u64,
    pub lambda: FieldElem,
    /// dlog of λ to the base ξ = Ω^{(q+1)(q²+1)}.
    pub b: u64,
    /// Smallest positive c ≡ b (mod q−1) coprime to q²+1; odd because b
    /// is odd and q−1 is even.
    pub c: u64,
    pub theta: FieldElem,
    /// Enumeration-first nonzero zero of Q(z) = Tr_{q²/q}(z^{q²+1}).
    pub v: FieldElem,
    pub basis: [FieldElem; 4],
    pub ovoid: Ovoid,
    pub code: LinearCode,
}

impl Op28Witness {
    /// Generator columns: coordinates of v, θv, …, θ^{q²}v over the basis.
    pub fn generator(&self) -> &[Vec<FieldElem>] {
        self.code.generator()
    }
}

/// Builds the witness for a nonsquare λ, verifying every step: θ^{q²+1} = λ,
/// the projective order law, θ of degree four, the power basis independent,
/// the columns an ovoid, and the code λ-constacyclic.
pub fn op28_construct(ctx: &FieldCtx, q: u64, lambda: FieldElem) -> Result<Op28Witness> {
    check_lambda(ctx, q, lambda)?;
    if ctx.is_square_in(lambda, q)? {
        return Err(Error::LambdaIsSquare);
    }
    let q2 = q * q;
    let n = q2 + 1;
    if ctx.size() != q2 * q2 {
        return Err(Error::BadParameter(format!(
            "tower size {} is not q⁴ for q = {q}",
            ctx.size()
        )));
    }
    let xi = ctx.pow(ctx.omega(), ((q + 1) * n) as u128);
    let b = ctx.dlog(lambda, xi)?;
    debug_assert_eq!(b % 2, 1, "a nonsquare dlog must be odd");
    let mut c = b;
    let mut steps = 0u64;
    while gcd(c, n) != 1 {
        c += q - 1;
        steps += 1;
        if steps > n {
            return Err(Error::CSearchExhausted { bound: n });
        }
    }
    debug_assert_eq!(c % 2, 1);
    let theta = ctx.pow(ctx.omega(), ((q + 1) as u128) * (c as u128));
    if ctx.pow(theta, n as u128) != lambda {
        return Err(Error::Invariant(String::from("theta^{q²+1} is not λ")));
    }
    let order = projective_order(ctx, theta, q)?;
    if order != n || order != n / gcd(n, c) {
        return Err(Error::Invariant(format!(
            "projective order {order} is not q²+1 = {n}"
        )));
    }
    if ctx.is_in_subfield(theta, q2)? {
        return Err(Error::Invariant(String::from(
            "theta lies in the quadratic subfield",
        )));
    }
    let theta2 = ctx.mul(theta, theta);
    let basis = [ctx.one(), theta, theta2, ctx.mul(theta2, theta)];
    let coords = SubfieldCoords::new(ctx, q, &basis)?;
    let v = (1..ctx.size())
        .map(|k| ctx.elem_at(k))
        .find_map(|z| match ctx.trace(ctx.pow(z, (q2 + 1) as u128), q2, q) {
            Ok(t) if t.is_zero() => Some(Ok(z)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .transpose()?
        .ok_or_else(|| Error::Invariant(String::from("the quadric has no nonzero zero")))?;
    let mut rows: Vec<Vec<FieldElem>> = (0..4).map(|_| Vec::with_capacity(n as usize)).collect();
    let mut points = Vec::with_capacity(n as usize);
    let mut acc = v;
    for _ in 0..n {
        let cs = coords.coords(ctx, acc)?;
        points.push(ProjPoint3::new(ctx, [cs[0], cs[1], cs[2], cs[3]])?);
        for (row, &c) in rows.iter_mut().zip(&cs) {
            row.push(c);
        }
        acc = ctx.mul(acc, theta);
    }
    let ovoid = Ovoid::new(ctx, q, points)?;
    let code = LinearCode::new(ctx, q, rows, Some(lambda))?;
    if !code.is_constacyclic(lambda)? {
        return Err(Error::Invariant(String::from(
            "the column code is not λ-constacyclic",
        )));
    }
    Ok(Op28Witness {
        q,
        lambda,
        b,
        c,
        theta,
        v,
        basis,
        ovoid,
        code,
    })
}

/// Scans every element of F_{q⁴}* of degree four over F_q: whenever the
/// projective order is q²+1, the constacyclic multiplier θ^{q²+1} must be
/// a nonsquare of F_q. Returns false on the first counterexample.
pub fn op28_exhaustive_necessity(ctx: &FieldCtx, q: u64) -> Result<bool> {
    let q2 = q * q;
    let n = q2 + 1;
    if ctx.size() != q2 * q2 {
        return Err(Error::BadParameter(format!(
            "tower size {} is not q⁴ for q = {q}",
            ctx.size()
        )));
    }
    for k in 1..ctx.size() {
        let x = ctx.elem_at(k);
        if ctx.is_in_subfield(x, q2)? {
            continue;
        }
        if projective_order(ctx, x, q)? != n {
            continue;
        }
        let lam = ctx.pow(x, n as u128);
        if !ctx.is_in_subfield(lam, q)? {
            return Err(Error::Invariant(String::from(
                "a full projective orbit left the base field",
            )));
        }
        if ctx.is_square_in(lam, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_ENUM_BUDGET;
    use num_bigint::BigUint;

    #[test]
    fn exists_matches_the_quadratic_residues() {
        for (q, nonsquares) in [
            (3u64, alloc::vec![2u64]),
            (5, alloc::vec![2, 3]),
            (7, alloc::vec![3, 5, 6]),
        ] {
            let ctx = op28_context(q).unwrap();
            for v in 1..q {
                let lambda = ctx.from_base(v);
                assert_eq!(
                    op28_exists(&ctx, q, lambda).unwrap(),
                    nonsquares.contains(&v),
                    "q = {q}, λ = {v}"
                );
            }
        }
    }

    #[test]
    fn lambda_validation() {
        let ctx = op28_context(3).unwrap();
        assert!(matches!(
            op28_exists(&ctx, 3, ctx.zero()),
            Err(Error::ZeroElement)
        ));
        assert!(matches!(
            op28_exists(&ctx, 3, ctx.omega()),
            Err(Error::NotInSubfield)
        ));
        assert!(matches!(
            op28_construct(&ctx, 3, ctx.one()),
            Err(Error::LambdaIsSquare)
        ));
    }

    #[test]
    fn q3_frozen_witness() {
        let ctx = op28_context(3).unwrap();
        let w = op28_construct(&ctx, 3, ctx.from_base(2)).unwrap();
        assert_eq!(w.b, 1);
        assert_eq!(w.c, 1);
        assert_eq!(ctx.elem_index(w.theta), 39);
        assert_eq!(w.theta, ctx.pow(ctx.omega(), 4));
        assert_eq!(ctx.elem_index(w.v), 1);
        let columns: [[u64; 4]; 10] = [
            [2, 1, 1, 0],
            [0, 2, 1, 1],
            [2, 1, 2, 0],
            [0, 2, 1, 2],
            [1, 2, 2, 2],
            [1, 0, 2, 0],
            [0, 1, 0, 2],
            [1, 2, 1, 1],
            [2, 2, 2, 0],
            [0, 2, 2, 2],
        ];
        for (i, col) in columns.iter().enumerate() {
            for (r, &value) in col.iter().enumerate() {
                assert_eq!(
                    w.generator()[r][i],
                    ctx.from_base(value),
                    "column {i}, row {r}"
                );
            }
        }
        assert_eq!(w.ovoid.points.len(), 10);
        let weights = w.code.enumerate_weights(DEFAULT_ENUM_BUDGET).unwrap();
        for (wt, c) in [(0usize, 1u32), (6, 60), (9, 20)] {
            assert_eq!(weights.count(wt), BigUint::from(c), "weight {wt}");
        }
        assert_eq!(
            w.code.minimum_supports(DEFAULT_ENUM_BUDGET).unwrap().len(),
            30
        );
    }

    #[test]
    fn q7_c_scan_skips_a_shared_factor() {
        // ξ has order 6; λ = ξ⁵ gives b = 5, and gcd(5, 50) > 1 forces the
        // scan to move to c = 11
        let q = 7u64;
        let ctx = op28_context(q).unwrap();
        let xi = ctx.pow(ctx.omega(), ((q + 1) * (q * q + 1)) as u128);
        let lambda = ctx.pow(xi, 5);
        assert!(op28_exists(&ctx, q, lambda).unwrap());
        let w = op28_construct(&ctx, q, lambda).unwrap();
        assert_eq!(w.b, 5);
        assert_eq!(w.c, 11);
        assert_eq!(projective_order(&ctx, w.theta, q).unwrap(), 50);
        assert_eq!(w.code.n(), 50);
        // secant-plane count times q−1 at the minimum weight q²−q
        let weights = w.code.enumerate_weights(DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(weights.min_nonzero_weight(), Some(42));
        assert_eq!(weights.count(42), BigUint::from(2100u32));
    }

    #[test]
    fn exhaustive_necessity_holds_for_small_fields() {
        for q in [3u64, 5] {
            let ctx = op28_context(q).unwrap();
            assert!(op28_exhaustive_necessity(&ctx, q).unwrap(), "q = {q}");
        }
    }

    #[test]
    fn projective_order_laws() {
        let ctx = op28_context(3).unwrap();
        assert_eq!(projective_order(&ctx, ctx.from_base(2), 3).unwrap(), 1);
        assert_eq!(
            projective_order(&ctx, ctx.pow(ctx.omega(), 4), 3).unwrap(),
            10
        );
        assert!(matches!(
            projective_order(&ctx, ctx.zero(), 3),
            Err(Error::ZeroElement)
        ));
        // the order of θF_q* divides the quotient group order (q⁴−1)/(q−1)
        for k in 1..ctx.size() {
            let po = projective_order(&ctx, ctx.elem_at(k), 3).unwrap();
            assert_eq!(40 % po, 0, "element {k}");
        }
    }

    #[test]
    fn degree_four_gcd_battery() {
        for q in [3u64, 5, 7, 9, 11, 23] {
            for r in [1u32, 2, 3, 6] {
                assert_eq!(gcd(q * q + 1, q.pow(r) - 1), 2, "q = {q}, r = {r}");
            }
        }
    }
}
