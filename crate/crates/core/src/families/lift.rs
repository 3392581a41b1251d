//! Ovoid codes lifted to extension alphabets: the ovoid generator matrix
//! read over F_{q^e} instead of F_q. The weight of a lifted codeword is
//! governed by the rank of its e×4 coordinate expansion, so the whole
//! weight enumerator has a closed form in the counts M_r(e) of
//! independent r-tuples.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{factor_prime_power, FieldCtx, FieldElem};
use crate::linalg::SubfieldCoords;
use crate::pg3::Ovoid;

/// Number of ordered r-tuples of F_q-linearly independent vectors in an
/// e-dimensional F_q-space: Π_{j<r} (q^e − q^j). Zero when r > e.
pub fn independent_tuples(q: u64, e: u32, r: u32) -> BigUint {
    if r > e {
        return BigUint::zero();
    }
    let qe = BigUint::from(q).pow(e);
    let mut acc = BigUint::one();
    let mut qj = BigUint::one();
    for _ in 0..r {
        acc *= &qe - &qj;
        qj *= q;
    }
    acc
}

/// Weight enumerator of the lift: nonzero weights only occur at
/// q²−q, q²−1, q², q²+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftEnum {
    pub q: u64,
    pub e: u32,
    /// Coefficient at weight q²−q.
    pub a_min: BigUint,
    /// Coefficient at weight q²−1.
    pub a_sub: BigUint,
    /// Coefficient at weight q².
    pub a_mid: BigUint,
    /// Coefficient at weight q²+1 (full support).
    pub a_full: BigUint,
}

impl LiftEnum {
    /// All (weight, coefficient) pairs, including weight 0.
    pub fn pairs(&self) -> [(usize, BigUint); 5] {
        let q2 = (self.q * self.q) as usize;
        [
            (0, BigUint::one()),
            (q2 - self.q as usize, self.a_min.clone()),
            (q2 - 1, self.a_sub.clone()),
            (q2, self.a_mid.clone()),
            (q2 + 1, self.a_full.clone()),
        ]
    }

    /// Σ coefficients = q^{4e}, the message count.
    pub fn total(&self) -> BigUint {
        self.pairs().iter().map(|(_, c)| c).sum()
    }
}

/// Closed-form weight enumerator of the lift of any q²+1-point ovoid code
/// to the alphabet F_{q^e}. Cross-checked internally against the message
/// count q^{4e}.
pub fn lift_formula(q: u64, e: u32) -> Result<LiftEnum> {
    if e == 0 {
        return Err(Error::BadParameter(String::from(
            "the lift degree e must be at least 1",
        )));
    }
    let (p, _) = factor_prime_power(q)?;
    if p == 2 {
        return Err(Error::BadParameter(format!(
            "the ovoid construction needs odd q, got {q}"
        )));
    }
    let m1 = independent_tuples(q, e, 1);
    let m2 = independent_tuples(q, e, 2);
    let m3 = independent_tuples(q, e, 3);
    let m4 = independent_tuples(q, e, 4);
    let q2 = BigUint::from(q * q);
    let n = BigUint::from(q * q + 1);
    // q²(q²+1)/2 minus-one-weight sections and as many full ones from rank 2
    let pair_sections = &q2 * &n / 2u32;
    let a_min = BigUint::from(q * q * q + q) * &m1;
    let a_sub = &pair_sections * &m2;
    let a_mid = &n * &m1 + &n * BigUint::from(q + 1) * &m2 + &n * &m3;
    let a_full = &pair_sections * &m2 + BigUint::from(q) * &n * &m3 + &m4;
    let result = LiftEnum {
        q,
        e,
        a_min,
        a_sub,
        a_mid,
        a_full,
    };
    if result.total() != BigUint::from(q).pow(4 * e) {
        return Err(Error::Invariant(format!(
            "lift enumerator for q = {q}, e = {e} does not sum to q^4e"
        )));
    }
    Ok(result)
}

/// The ovoid generator matrix as a code over F_{q^e}: same four rows,
/// message symbols drawn from the extension.
pub fn lift_code(ctx: &FieldCtx, ovoid: &Ovoid, e: u32) -> Result<LinearCode> {
    if e == 0 {
        return Err(Error::BadParameter(String::from(
            "the lift degree e must be at least 1",
        )));
    }
    let alphabet = ovoid.q.checked_pow(e).ok_or_else(|| {
        Error::BadParameter(format!("q^e overflows for q = {}, e = {e}", ovoid.q))
    })?;
    let n = ovoid.points.len();
    let mut rows: Vec<Vec<FieldElem>> = (0..4).map(|_| Vec::with_capacity(n)).collect();
    for point in &ovoid.points {
        for (row, &c) in rows.iter_mut().zip(point.coords()) {
            row.push(c);
        }
    }
    LinearCode::new(ctx, alphabet, rows, None)
}

/// Weight of the lifted codeword of a = (a₀,a₁,a₂,a₃) ∈ F_{q^e}⁴ computed
/// without touching the codeword: expand each aᵢ over the canonical power
/// basis of F_{q^e}, then count the ovoid points annihilated by the
/// resulting e×4 matrix. The entry at P is Σᵢ aᵢPᵢ = Σⱼ εⱼ(Σᵢ MⱼᵢPᵢ) with
/// the inner sums in F_q, so it vanishes exactly when every row does.
pub fn rank_kernel_weight(
    ctx: &FieldCtx,
    ovoid: &Ovoid,
    e: u32,
    a: &[FieldElem; 4],
) -> Result<usize> {
    let q = ovoid.q;
    let alphabet = q
        .checked_pow(e)
        .ok_or_else(|| Error::BadParameter(format!("q^e overflows for q = {q}, e = {e}")))?;
    let eps_basis = ctx.canonical_power_basis(q, e)?;
    let coords = SubfieldCoords::new(ctx, q, &eps_basis)?;
    let mut matrix = vec![vec![ctx.zero(); 4]; e as usize];
    for (i, &ai) in a.iter().enumerate() {
        if !ctx.is_in_subfield(ai, alphabet)? {
            return Err(Error::NotInSubfield);
        }
        for (j, &c) in coords.coords(ctx, ai)?.iter().enumerate() {
            matrix[j][i] = c;
        }
    }
    let mut killed = 0usize;
    for point in &ovoid.points {
        let annihilated = matrix.iter().all(|row| {
            let mut s = ctx.zero();
            for (&m, &p) in row.iter().zip(point.coords()) {
                s = ctx.add(s, ctx.mul(m, p));
            }
            s.is_zero()
        });
        if annihilated {
            killed += 1;
        }
    }
    Ok(ovoid.points.len() - killed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{gaussian_binomial, DEFAULT_ENUM_BUDGET};
    use crate::gf::build_field;
    use crate::pg3::elliptic_quadric;
    use crate::util::SplitMix64;

    fn quadric(q: u64) -> (FieldCtx, Ovoid) {
        let (p, m) = factor_prime_power(q).unwrap();
        let ctx = build_field(p, 4 * m).unwrap();
        let basis: [FieldElem; 4] = ctx.canonical_power_basis(q, 4).unwrap().try_into().unwrap();
        let ovoid = elliptic_quadric(&ctx, &basis).unwrap();
        (ctx, ovoid)
    }

    #[test]
    fn independent_tuple_counts() {
        assert_eq!(independent_tuples(3, 1, 0), BigUint::from(1u32));
        assert_eq!(independent_tuples(3, 1, 1), BigUint::from(2u32));
        assert_eq!(independent_tuples(3, 1, 2), BigUint::zero());
        assert_eq!(independent_tuples(3, 2, 1), BigUint::from(8u32));
        assert_eq!(independent_tuples(3, 2, 2), BigUint::from(48u32));
        assert_eq!(independent_tuples(3, 2, 3), BigUint::zero());
        assert_eq!(independent_tuples(5, 2, 2), BigUint::from(480u32));
    }

    type FrozenCase = (u64, u32, &'static [(usize, u64)]);

    #[test]
    fn formula_matches_enumeration() {
        let cases: [FrozenCase; 4] = [
            (3, 1, &[(0, 1), (6, 60), (9, 20)]),
            (3, 2, &[(0, 1), (6, 240), (8, 2160), (9, 2000), (10, 2160)]),
            (5, 1, &[(0, 1), (20, 520), (25, 104)]),
            (
                5,
                2,
                &[(0, 1), (20, 3120), (24, 156000), (25, 75504), (26, 156000)],
            ),
        ];
        for (q, e, frozen) in cases {
            let (ctx, ovoid) = quadric(q);
            let code = lift_code(&ctx, &ovoid, e).unwrap();
            assert_eq!(code.n(), (q * q + 1) as usize);
            assert_eq!(code.k(), 4);
            assert_eq!(code.alphabet_q(), q.pow(e));
            let weights = code.enumerate_weights(DEFAULT_ENUM_BUDGET).unwrap();
            let formula = lift_formula(q, e).unwrap();
            for (w, count) in formula.pairs() {
                assert_eq!(weights.count(w), count, "q = {q}, e = {e}, weight {w}");
            }
            for &(w, count) in frozen {
                assert_eq!(
                    weights.count(w),
                    BigUint::from(count),
                    "q = {q}, e = {e}, frozen weight {w}"
                );
            }
            assert_eq!(weights.total(), BigUint::from(q).pow(4 * e));
        }
    }

    #[test]
    fn message_count_identity() {
        // 1 + Σ_r [4 choose r]_q · M_r(e) counts e×4 matrices by rank
        for q in [3u64, 5, 7, 9] {
            for e in [1u32, 2, 3] {
                let mut total = BigUint::one();
                for r in 1..=4u32 {
                    total += gaussian_binomial(q, 4, r) * independent_tuples(q, e, r);
                }
                assert_eq!(total, BigUint::from(q).pow(4 * e), "q = {q}, e = {e}");
                assert_eq!(lift_formula(q, e).unwrap().total(), total);
            }
        }
    }

    #[test]
    fn rank_kernel_matches_hamming_weight() {
        let (ctx, ovoid) = quadric(3);
        let code = lift_code(&ctx, &ovoid, 2).unwrap();
        let mut rng = SplitMix64::new(0x11F7_CAFE);
        for _ in 0..1000 {
            let m = rng.next_u64() % code.message_count() as u64;
            let msg = code.message(m);
            let a: [FieldElem; 4] = [msg[0], msg[1], msg[2], msg[3]];
            let hamming = code.codeword(m).iter().filter(|c| !c.is_zero()).count();
            assert_eq!(
                rank_kernel_weight(&ctx, &ovoid, 2, &a).unwrap(),
                hamming,
                "message {m}"
            );
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        let (ctx, ovoid) = quadric(3);
        assert!(matches!(
            lift_code(&ctx, &ovoid, 0),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(lift_formula(3, 0), Err(Error::BadParameter(_))));
        assert!(matches!(lift_formula(6, 1), Err(Error::NotPrimePower(6))));
        // F_27 is not a subfield of the degree-4 tower over F_3
        assert!(matches!(
            lift_code(&ctx, &ovoid, 3),
            Err(Error::NotASubfieldSize(27))
        ));
    }

    #[test]
    fn rank_kernel_rejects_foreign_messages() {
        let (ctx, ovoid) = quadric(3);
        // Ω generates all of F_81, so it is not an F_9 message symbol
        let a = [ctx.omega(), ctx.zero(), ctx.zero(), ctx.zero()];
        assert!(matches!(
            rank_kernel_weight(&ctx, &ovoid, 2, &a),
            Err(Error::NotInSubfield)
        ));
    }
}
