//! The projective line PG(1,K) for subfields K of the tower: Möbius actions,
//! K₀-sublines with canonical witnesses, Cayley parametrizations of norm-one
//! circles, a semilinear root solver, and the unit-circle zero-set classifier.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Point of PG(1,K) = K ∪ {∞}. `Infinity` sorts first, then finite points in
/// canonical element order; this is the point order used everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ProjPoint1 {
    Infinity,
    Finite(FieldElem),
}

pub use ProjPoint1::{Finite, Infinity};

/// All q+1 points of PG(1,F_q) in canonical order.
pub fn pg1_points(ctx: &FieldCtx, q: u64) -> Result<Vec<ProjPoint1>> {
    let mut pts = Vec::with_capacity(q as usize + 1);
    pts.push(Infinity);
    pts.extend(ctx.subfield_elements(q)?.into_iter().map(Finite));
    Ok(pts)
}

/// Fractional-linear map X ↦ (aX+b)/(cX+d) with ad − bc ≠ 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mobius {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
}

impl Mobius {
    pub fn new(
        ctx: &FieldCtx,
        a: FieldElem,
        b: FieldElem,
        c: FieldElem,
        d: FieldElem,
    ) -> Result<Self> {
        let det = ctx.sub(ctx.mul(a, d), ctx.mul(b, c));
        if det.is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn identity(ctx: &FieldCtx) -> Self {
        Mobius {
            a: ctx.one(),
            b: ctx.zero(),
            c: ctx.zero(),
            d: ctx.one(),
        }
    }
}

/// L(x) with the projective conventions: L(∞) = a/c (∞ when c = 0) and the
/// pole of the denominator maps to ∞.
pub fn mobius_apply(ctx: &FieldCtx, l: &Mobius, x: ProjPoint1) -> ProjPoint1 {
    match x {
        Infinity => {
            if l.c.is_zero() {
                Infinity
            } else {
                Finite(ctx.div(l.a, l.c).expect("c is nonzero"))
            }
        }
        Finite(x) => {
            let den = ctx.add(ctx.mul(l.c, x), l.d);
            if den.is_zero() {
                Infinity
            } else {
                let num = ctx.add(ctx.mul(l.a, x), l.b);
                Finite(ctx.div(num, den).expect("denominator is nonzero"))
            }
        }
    }
}

/// Matrix product: the returned map acts as first `inner`, then `outer`.
pub fn mobius_compose(ctx: &FieldCtx, outer: &Mobius, inner: &Mobius) -> Mobius {
    Mobius {
        a: ctx.add(ctx.mul(outer.a, inner.a), ctx.mul(outer.b, inner.c)),
        b: ctx.add(ctx.mul(outer.a, inner.b), ctx.mul(outer.b, inner.d)),
        c: ctx.add(ctx.mul(outer.c, inner.a), ctx.mul(outer.d, inner.c)),
        d: ctx.add(ctx.mul(outer.c, inner.b), ctx.mul(outer.d, inner.d)),
    }
}

pub fn mobius_inverse(ctx: &FieldCtx, l: &Mobius) -> Mobius {
    Mobius {
        a: l.d,
        b: ctx.neg(l.b),
        c: ctx.neg(l.c),
        d: l.a,
    }
}

/// The unique projectivity with p1 ↦ ∞, p2 ↦ 0, p3 ↦ 1 (the cross-ratio map
/// X ↦ (X−p2)(p3−p1) / ((X−p1)(p3−p2)) with the usual degenerations when one
/// of the three points is ∞).
pub fn mobius_sending(
    ctx: &FieldCtx,
    p1: ProjPoint1,
    p2: ProjPoint1,
    p3: ProjPoint1,
) -> Result<Mobius> {
    if p1 == p2 || p1 == p3 || p2 == p3 {
        return Err(Error::PointsNotDistinct);
    }
    let one = ctx.one();
    let l = match (p1, p2, p3) {
        (Infinity, Finite(x2), Finite(x3)) => Mobius {
            a: one,
            b: ctx.neg(x2),
            c: ctx.zero(),
            d: ctx.sub(x3, x2),
        },
        (Finite(x1), Infinity, Finite(x3)) => Mobius {
            a: ctx.zero(),
            b: ctx.sub(x3, x1),
            c: one,
            d: ctx.neg(x1),
        },
        (Finite(x1), Finite(x2), Infinity) => Mobius {
            a: one,
            b: ctx.neg(x2),
            c: one,
            d: ctx.neg(x1),
        },
        (Finite(x1), Finite(x2), Finite(x3)) => {
            let m = ctx.sub(x3, x1);
            let n = ctx.sub(x3, x2);
            Mobius {
                a: m,
                b: ctx.neg(ctx.mul(x2, m)),
                c: n,
                d: ctx.neg(ctx.mul(x1, n)),
            }
        }
        _ => unreachable!("two of three distinct points cannot both be infinity"),
    };
    debug_assert!(!ctx.sub(ctx.mul(l.a, l.d), ctx.mul(l.b, l.c)).is_zero());
    debug_assert_eq!(mobius_apply(ctx, &l, p1), Infinity);
    debug_assert_eq!(mobius_apply(ctx, &l, p2), Finite(ctx.zero()));
    debug_assert_eq!(mobius_apply(ctx, &l, p3), Finite(ctx.one()));
    Ok(l)
}

/// A K₀-subline stored as its sorted point list, so set equality is list
/// equality and sublines can key ordered collections.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subline {
    pub q0: u64,
    pub points: Vec<ProjPoint1>,
}

/// The K₀-subline through three distinct points of PG(1,F_q): the preimage
/// of PG(1,F_{q0}) under the normalization sending them to ∞, 0, 1.
pub fn subline_through(
    ctx: &FieldCtx,
    q: u64,
    q0: u64,
    p1: ProjPoint1,
    p2: ProjPoint1,
    p3: ProjPoint1,
) -> Result<Subline> {
    check_proper_subfield(ctx, q, q0)?;
    let l = mobius_sending(ctx, p1, p2, p3)?;
    let linv = mobius_inverse(ctx, &l);
    let mut points: Vec<ProjPoint1> = pg1_points(ctx, q0)?
        .into_iter()
        .map(|y| mobius_apply(ctx, &linv, y))
        .collect();
    points.sort_unstable();
    Ok(Subline { q0, points })
}

fn check_proper_subfield(ctx: &FieldCtx, q: u64, q0: u64) -> Result<()> {
    if !ctx.is_subfield_size(q) || !ctx.is_subfield_size(q0) {
        return Err(Error::NotASubfieldSize(if ctx.is_subfield_size(q) {
            q0
        } else {
            q
        }));
    }
    // q0 must be a proper subfield of F_q
    let mut s = q0;
    while s < q {
        s = s.saturating_mul(q0);
    }
    if q0 >= q || s != q {
        return Err(Error::NotAProperSubfield { q, q0 });
    }
    Ok(())
}

/// All distinct K₀-sublines of PG(1,F_q), sorted, by closing over every
/// unordered point triple. The count is q(q²−1)/(q₀(q₀²−1)).
pub fn enumerate_sublines(ctx: &FieldCtx, q: u64, q0: u64) -> Result<Vec<Subline>> {
    check_proper_subfield(ctx, q, q0)?;
    let pts = pg1_points(ctx, q)?;
    let mut seen: BTreeSet<Subline> = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let s = subline_through(ctx, q, q0, pts[i], pts[j], pts[k])?;
                seen.insert(s);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Tests whether a point set is a K₀-subline by the witness construction:
/// normalize its three smallest points to ∞, 0, 1 and compare the image with
/// PG(1,F_{q0}). Returns the witness map on success.
pub fn is_subline(ctx: &FieldCtx, q0: u64, points: &[ProjPoint1]) -> Result<Option<Mobius>> {
    let mut sorted: Vec<ProjPoint1> = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: sorted.len(),
        });
    }
    if sorted.len() as u64 != q0 + 1 {
        return Ok(None);
    }
    let l = mobius_sending(ctx, sorted[0], sorted[1], sorted[2])?;
    let mut image: Vec<ProjPoint1> = sorted.iter().map(|&x| mobius_apply(ctx, &l, x)).collect();
    image.sort_unstable();
    if image == pg1_points(ctx, q0)? {
        Ok(Some(l))
    } else {
        Ok(None)
    }
}

/// The enumeration-first ε ∈ F_{Q²} with ε^Q = −ε, ε ≠ 0. Such ε exists for
/// every odd Q whose quadratic extension lies in the tower.
pub fn find_eps(ctx: &FieldCtx, q: u64) -> Result<FieldElem> {
    let ext = q.checked_mul(q).ok_or(Error::NotASubfieldSize(q))?;
    for x in ctx.subfield_elements(ext)? {
        if !x.is_zero() && ctx.frobenius(x, q)? == ctx.neg(x) {
            return Ok(x);
        }
    }
    Err(Error::Invariant(alloc::string::String::from(
        "no trace-zero unit in the quadratic extension",
    )))
}

/// Cayley parametrization ϑ_ε(x) = (x+ε)/(x−ε), ϑ_ε(∞) = 1: a bijection from
/// PG(1,F_Q) onto the norm-one circle 𝒰_{Q+1} of the quadratic extension.
pub fn cayley(ctx: &FieldCtx, eps: FieldElem, x: ProjPoint1) -> FieldElem {
    match x {
        Infinity => ctx.one(),
        Finite(x) => {
            let num = ctx.add(x, eps);
            let den = ctx.sub(x, eps);
            ctx.div(num, den)
                .expect("x - eps is nonzero for x in the base field")
        }
    }
}

/// Inverse of [`cayley`]: 1 ↦ ∞ and u ↦ ε(u+1)/(u−1) otherwise.
pub fn cayley_inv(ctx: &FieldCtx, eps: FieldElem, u: FieldElem) -> ProjPoint1 {
    if u == ctx.one() {
        return Infinity;
    }
    let num = ctx.mul(eps, ctx.add(u, ctx.one()));
    let den = ctx.sub(u, ctx.one());
    Finite(ctx.div(num, den).expect("u is not 1"))
}

/// Exact root set over PG(1,F_q) of A·X^{σ+1} + B·X^σ + C·X + D with
/// σ: x ↦ x^{p^s}, by evaluating all q+1 points; ∞ is a root iff A = 0
/// (the homogeneous form at (X₀,X₁) = (0,1) reduces to A).
pub fn solve_semilinear(
    ctx: &FieldCtx,
    q: u64,
    s: u32,
    a: FieldElem,
    b: FieldElem,
    c: FieldElem,
    d: FieldElem,
) -> Result<Vec<ProjPoint1>> {
    if a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() {
        return Err(Error::ZeroCoefficients);
    }
    let sigma = ctx.p().pow(s) as u128;
    let mut roots = Vec::new();
    if a.is_zero() {
        roots.push(Infinity);
    }
    for x in ctx.subfield_elements(q)? {
        let xs = ctx.pow(x, sigma);
        let mut v = ctx.mul(a, ctx.mul(xs, x));
        v = ctx.add(v, ctx.mul(b, xs));
        v = ctx.add(v, ctx.mul(c, x));
        v = ctx.add(v, d);
        if v.is_zero() {
            roots.push(Finite(x));
        }
    }
    Ok(roots)
}

/// Coefficients (A,B,C,D) of the semilinear form whose roots are the subline
/// L⁻¹(PG(1,F_{q0})): clearing denominators in L(X)^σ = L(X) with σ the
/// q₀-power Frobenius gives
/// (a^σ X^σ + b^σ)(cX + d) − (aX + b)(c^σ X^σ + d^σ).
pub fn subline_form(
    ctx: &FieldCtx,
    q0: u64,
    l: &Mobius,
) -> Result<(FieldElem, FieldElem, FieldElem, FieldElem)> {
    let fa = ctx.frobenius(l.a, q0)?;
    let fb = ctx.frobenius(l.b, q0)?;
    let fc = ctx.frobenius(l.c, q0)?;
    let fd = ctx.frobenius(l.d, q0)?;
    Ok((
        ctx.sub(ctx.mul(fa, l.c), ctx.mul(l.a, fc)),
        ctx.sub(ctx.mul(fa, l.d), ctx.mul(l.b, fc)),
        ctx.sub(ctx.mul(fb, l.c), ctx.mul(l.a, fd)),
        ctx.sub(ctx.mul(fb, l.d), ctx.mul(l.b, fd)),
    ))
}

/// The order-n subgroup {u : u^n = 1}, in canonical element order; n must
/// divide the top group order.
pub fn unit_circle(ctx: &FieldCtx, n: u64) -> Result<Vec<FieldElem>> {
    if n == 0 || !ctx.group_order().is_multiple_of(n) {
        return Err(Error::BadParameter(alloc::format!(
            "{n} does not divide the group order {}",
            ctx.group_order()
        )));
    }
    let g = ctx.pow(ctx.omega(), (ctx.group_order() / n) as u128);
    let mut els = Vec::with_capacity(n as usize);
    let mut acc = ctx.one();
    for _ in 0..n {
        els.push(acc);
        acc = ctx.mul(acc, g);
    }
    els.sort_unstable();
    Ok(els)
}

/// Verdict of [`classify_unit_zero_set`]. `Full` is unreachable for nonzero
/// coefficients (the polynomial has degree at most q+1 < q²+1) but kept so
/// the classification is total by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UnitZeroClass {
    Empty,
    Small(Vec<FieldElem>),
    Full,
    Baer(Subline),
}

/// Classifies the zero set on 𝒰_{q²+1} of F(Y) = aY + bY^q + cY^{q+1} + d
/// with coefficients in F_{q⁴}. Root sets with more than two points (and not
/// the whole circle) are pulled back through the Cayley map Θ_ω of the
/// extension F_{q⁴}/F_{q²} and certified as Baer sublines of PG(1,q²); the
/// verdict does not depend on which trace-zero ω is used.
pub fn classify_unit_zero_set(
    ctx: &FieldCtx,
    q: u64,
    a: FieldElem,
    b: FieldElem,
    c: FieldElem,
    d: FieldElem,
) -> Result<UnitZeroClass> {
    let omega = find_eps(ctx, q * q)?;
    classify_unit_zero_set_with(ctx, q, omega, a, b, c, d)
}

/// [`classify_unit_zero_set`] with an explicit trace-zero ω (ω^{q²} = −ω).
pub fn classify_unit_zero_set_with(
    ctx: &FieldCtx,
    q: u64,
    omega: FieldElem,
    a: FieldElem,
    b: FieldElem,
    c: FieldElem,
    d: FieldElem,
) -> Result<UnitZeroClass> {
    if a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() {
        return Err(Error::ZeroCoefficients);
    }
    let q2 = q * q;
    let circle = unit_circle(ctx, q2 + 1)?;
    let mut roots = Vec::new();
    for &y in &circle {
        let yq = ctx.pow(y, q as u128);
        let mut v = ctx.mul(a, y);
        v = ctx.add(v, ctx.mul(b, yq));
        v = ctx.add(v, ctx.mul(c, ctx.mul(y, yq)));
        v = ctx.add(v, d);
        if v.is_zero() {
            roots.push(y);
        }
    }
    if roots.is_empty() {
        return Ok(UnitZeroClass::Empty);
    }
    if roots.len() <= 2 {
        return Ok(UnitZeroClass::Small(roots));
    }
    if roots.len() == circle.len() {
        return Ok(UnitZeroClass::Full);
    }
    let mut pulled: Vec<ProjPoint1> = roots.iter().map(|&y| cayley_inv(ctx, omega, y)).collect();
    pulled.sort_unstable();
    match is_subline(ctx, q, &pulled)? {
        Some(_) => Ok(UnitZeroClass::Baer(Subline {
            q0: q,
            points: pulled,
        })),
        None => Err(Error::Invariant(alloc::string::String::from(
            "a high-root unit-circle zero set failed the Baer pullback",
        ))),
    }
}
