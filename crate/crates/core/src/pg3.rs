//! PG(3,q) incidence geometry: normalized points and planes, ovoid (cap)
//! verification, the elliptic quadric cut out by a norm-trace form on a
//! quartic extension, the ι identification of PG(1,q²) with that quadric,
//! plane pullbacks, and the full line/plane incidence inventory.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::linalg::{rank, SubfieldCoords};
use crate::projline::{solve_semilinear, Finite, Infinity, ProjPoint1};

/// Point of PG(3,q), lex-normalized so the first nonzero coordinate is 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjPoint3 {
    coords: [FieldElem; 4],
}

impl ProjPoint3 {
    pub fn new(ctx: &FieldCtx, coords: [FieldElem; 4]) -> Result<Self> {
        Ok(ProjPoint3 {
            coords: normalize4(ctx, coords)?,
        })
    }

    pub fn coords(&self) -> &[FieldElem; 4] {
        &self.coords
    }
}

/// Plane r₀X₀ + r₁X₁ + r₂X₂ + r₃X₃ = 0 of PG(3,q), coefficients
/// lex-normalized like point coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Plane {
    coeffs: [FieldElem; 4],
}

impl Plane {
    pub fn new(ctx: &FieldCtx, coeffs: [FieldElem; 4]) -> Result<Self> {
        Ok(Plane {
            coeffs: normalize4(ctx, coeffs)?,
        })
    }

    pub fn coeffs(&self) -> &[FieldElem; 4] {
        &self.coeffs
    }
}

fn normalize4(ctx: &FieldCtx, mut v: [FieldElem; 4]) -> Result<[FieldElem; 4]> {
    let lead = v
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?;
    let inv = ctx.inv(v[lead])?;
    for c in v.iter_mut() {
        *c = ctx.mul(inv, *c);
    }
    Ok(v)
}

/// The q³+q²+q+1 points of PG(3,q): leading coordinate 1, earlier
/// coordinates 0, later coordinates free over F_q.
pub fn all_points(ctx: &FieldCtx, q: u64) -> Result<Vec<ProjPoint3>> {
    let els = ctx.subfield_elements(q)?;
    let zero = ctx.zero();
    let one = ctx.one();
    let mut pts = Vec::new();
    for lead in 0..4 {
        let free = 3 - lead;
        let mut idx = alloc::vec![0usize; free];
        loop {
            let mut coords = [zero; 4];
            coords[lead] = one;
            for (j, &i) in idx.iter().enumerate() {
                coords[lead + 1 + j] = els[i];
            }
            pts.push(ProjPoint3 { coords });
            // odometer over the free coordinates
            let mut pos = free;
            loop {
                if pos == 0 {
                    break;
                }
                idx[pos - 1] += 1;
                if idx[pos - 1] < els.len() {
                    break;
                }
                idx[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    pts.sort_unstable();
    Ok(pts)
}

/// The planes of PG(3,q); the dual enumeration of [`all_points`].
pub fn all_planes(ctx: &FieldCtx, q: u64) -> Result<Vec<Plane>> {
    Ok(all_points(ctx, q)?
        .into_iter()
        .map(|p| Plane { coeffs: p.coords })
        .collect())
}

pub fn incident(ctx: &FieldCtx, point: &ProjPoint3, plane: &Plane) -> bool {
    let mut acc = ctx.zero();
    for i in 0..4 {
        acc = ctx.add(acc, ctx.mul(point.coords[i], plane.coeffs[i]));
    }
    acc.is_zero()
}

/// Cap test: exactly q²+1 distinct points and no collinear triple (every
/// 3-subset has matrix rank 3), checked exhaustively.
pub fn is_ovoid(ctx: &FieldCtx, q: u64, points: &[ProjPoint3]) -> bool {
    if points.len() as u64 != q * q + 1 {
        return false;
    }
    let distinct: BTreeSet<&ProjPoint3> = points.iter().collect();
    if distinct.len() != points.len() {
        return false;
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                let rows: Vec<Vec<FieldElem>> = [i, j, k]
                    .iter()
                    .map(|&t| points[t].coords.to_vec())
                    .collect();
                if rank(ctx, &rows) < 3 {
                    return false;
                }
            }
        }
    }
    true
}

/// An ovoid of PG(3,q), held as its sorted point list; construction verifies
/// the cap condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ovoid {
    pub q: u64,
    pub points: Vec<ProjPoint3>,
}

impl Ovoid {
    pub fn new(ctx: &FieldCtx, q: u64, mut points: Vec<ProjPoint3>) -> Result<Self> {
        points.sort_unstable();
        if !is_ovoid(ctx, q, &points) {
            return Err(Error::Invariant(String::from(
                "the point set is not an ovoid (size or cap condition fails)",
            )));
        }
        Ok(Ovoid { q, points })
    }

    pub fn contains(&self, p: &ProjPoint3) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

/// The elliptic quadric of the quartic extension: zeros of
/// Q(z) = Tr_{q²/q}(z^{q²+1}) on F_{q⁴}, written in coordinates over the
/// given F_q-basis. The nonzero zero-vector count is checked to be
/// (q−1)(q²+1), so the projective zero set has q²+1 points.
pub fn elliptic_quadric(ctx: &FieldCtx, basis: &[FieldElem; 4]) -> Result<Ovoid> {
    if !ctx.degree().is_multiple_of(4) {
        return Err(Error::BadParameter(format!(
            "field degree {} is not a multiple of 4",
            ctx.degree()
        )));
    }
    let q = ctx.p().pow(ctx.degree() / 4);
    let q2 = q * q;
    let coords = SubfieldCoords::new(ctx, q, basis)?;
    let mut zero_vectors = 0u64;
    let mut pts: BTreeSet<ProjPoint3> = BTreeSet::new();
    for k in 1..ctx.size() {
        let z = ctx.elem_at(k);
        let norm = ctx.pow(z, (q2 + 1) as u128);
        if ctx.trace(norm, q2, q)?.is_zero() {
            zero_vectors += 1;
            let c = coords.coords(ctx, z)?;
            pts.insert(ProjPoint3::new(ctx, [c[0], c[1], c[2], c[3]])?);
        }
    }
    if zero_vectors != (q - 1) * (q2 + 1) {
        return Err(Error::Invariant(format!(
            "quadric has {zero_vectors} nonzero zero vectors, expected {}",
            (q - 1) * (q2 + 1)
        )));
    }
    Ovoid::new(ctx, q, pts.into_iter().collect())
}

pub fn plane_section(ctx: &FieldCtx, plane: &Plane, o: &Ovoid) -> Vec<ProjPoint3> {
    o.points
        .iter()
        .filter(|p| incident(ctx, p, plane))
        .copied()
        .collect()
}

/// How a plane meets an ovoid: in one point or in q+1. Any other section
/// size contradicts the cap condition and is reported as an invariant error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PlaneClass {
    Tangent(ProjPoint3),
    Secant(Vec<ProjPoint3>),
}

pub fn classify_plane(ctx: &FieldCtx, plane: &Plane, o: &Ovoid) -> Result<PlaneClass> {
    let section = plane_section(ctx, plane, o);
    match section.len() as u64 {
        1 => Ok(PlaneClass::Tangent(section[0])),
        n if n == o.q + 1 => Ok(PlaneClass::Secant(section)),
        _ => Err(Error::SectionSizeInvalid(section.len())),
    }
}

/// All (q²+1)(q²+q+1) lines of PG(3,q) as sorted point-index lists into
/// [`all_points`], deduplicated over every point pair.
pub fn all_lines(ctx: &FieldCtx, q: u64) -> Result<Vec<Vec<u16>>> {
    let pts = all_points(ctx, q)?;
    let index: BTreeMap<ProjPoint3, u16> = pts
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u16))
        .collect();
    let els = ctx.subfield_elements(q)?;
    let mut lines: BTreeSet<Vec<u16>> = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let a = pts[i].coords;
            let b = pts[j].coords;
            let mut line = Vec::with_capacity(q as usize + 1);
            line.push(j as u16);
            for &t in &els {
                let mut c = [ctx.zero(); 4];
                for (k, ck) in c.iter_mut().enumerate() {
                    *ck = ctx.add(a[k], ctx.mul(t, b[k]));
                }
                line.push(index[&ProjPoint3::new(ctx, c)?]);
            }
            line.sort_unstable();
            lines.insert(line);
        }
    }
    Ok(lines.into_iter().collect())
}

/// Exhaustive plane and line census of an ovoid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Inventory {
    pub secant_planes: u64,
    pub tangent_planes: u64,
    pub secant_lines: u64,
    pub tangent_lines: u64,
    pub external_lines: u64,
    pub points_off: u64,
}

pub fn inventory(ctx: &FieldCtx, o: &Ovoid) -> Result<Inventory> {
    let q = o.q;
    let mut inv = Inventory {
        secant_planes: 0,
        tangent_planes: 0,
        secant_lines: 0,
        tangent_lines: 0,
        external_lines: 0,
        points_off: 0,
    };
    for plane in all_planes(ctx, q)? {
        match classify_plane(ctx, &plane, o)? {
            PlaneClass::Tangent(_) => inv.tangent_planes += 1,
            PlaneClass::Secant(_) => inv.secant_planes += 1,
        }
    }
    let pts = all_points(ctx, q)?;
    let on: BTreeSet<u16> = pts
        .iter()
        .enumerate()
        .filter(|(_, p)| o.contains(p))
        .map(|(i, _)| i as u16)
        .collect();
    for line in all_lines(ctx, q)? {
        let hits = line.iter().filter(|i| on.contains(i)).count();
        match hits {
            0 => inv.external_lines += 1,
            1 => inv.tangent_lines += 1,
            2 => inv.secant_lines += 1,
            n => {
                return Err(Error::Invariant(format!(
                    "a line meets the ovoid in {n} points"
                )))
            }
        }
    }
    inv.points_off = pts.len() as u64 - o.points.len() as u64;
    Ok(inv)
}

fn check_zeta(ctx: &FieldCtx, q: u64, zeta: FieldElem) -> Result<()> {
    if zeta.is_zero() || ctx.frobenius(zeta, q)? != ctx.neg(zeta) {
        return Err(Error::BadParameter(String::from(
            "zeta must be nonzero with zeta^q = -zeta",
        )));
    }
    debug_assert!(!ctx.is_square_in(ctx.mul(zeta, zeta), q).unwrap());
    Ok(())
}

/// ι: PG(1,q²) → PG(3,q), t = x + yζ ↦ ⟨(1, x, y, t^{q+1})⟩ and
/// ∞ ↦ ⟨(0,0,0,1)⟩; a bijection onto the quadric X₀X₃ = X₁² − μX₂², μ = ζ².
pub fn iota(ctx: &FieldCtx, q: u64, zeta: FieldElem, t: ProjPoint1) -> Result<ProjPoint3> {
    check_zeta(ctx, q, zeta)?;
    let point = match t {
        Infinity => [ctx.zero(), ctx.zero(), ctx.zero(), ctx.one()],
        Finite(t) => {
            if !ctx.is_in_subfield(t, q * q)? {
                return Err(Error::NotInSubfield);
            }
            let tq = ctx.frobenius(t, q)?;
            let half = ctx.inv(ctx.from_base(2))?;
            let x = ctx.mul(half, ctx.add(t, tq));
            let y = ctx.div(ctx.mul(half, ctx.sub(t, tq)), zeta)?;
            let norm = ctx.mul(t, tq);
            debug_assert!(ctx.is_in_subfield(x, q).unwrap());
            debug_assert!(ctx.is_in_subfield(y, q).unwrap());
            debug_assert!(ctx.is_in_subfield(norm, q).unwrap());
            [ctx.one(), x, y, norm]
        }
    };
    ProjPoint3::new(ctx, point)
}

/// The image of ι over all of PG(1,q²), verified to be an ovoid lying on
/// X₀X₃ = X₁² − μX₂².
pub fn iota_quadric(ctx: &FieldCtx, q: u64, zeta: FieldElem) -> Result<Ovoid> {
    let mu = ctx.mul(zeta, zeta);
    let mut pts = Vec::new();
    for t in crate::projline::pg1_points(ctx, q * q)? {
        let p = iota(ctx, q, zeta, t)?;
        let c = p.coords;
        let lhs = ctx.mul(c[0], c[3]);
        let rhs = ctx.sub(ctx.mul(c[1], c[1]), ctx.mul(mu, ctx.mul(c[2], c[2])));
        if lhs != rhs {
            return Err(Error::Invariant(String::from(
                "an iota image misses the quadric equation",
            )));
        }
        pts.push(p);
    }
    Ovoid::new(ctx, q, pts)
}

/// Pullback of the plane r₀X₀+r₁X₁+r₂X₂+r₃X₃ = 0 through ι: coefficients
/// (A, B, D) with A = r₃, D = r₀, B = r₁/2 + (r₂/(2μ))ζ, so that t lies on
/// the section iff A·t^{q+1} + B·t + B^q·t^q + D = 0.
pub fn plane_pullback(
    ctx: &FieldCtx,
    q: u64,
    zeta: FieldElem,
    plane: &Plane,
) -> Result<(FieldElem, FieldElem, FieldElem)> {
    check_zeta(ctx, q, zeta)?;
    let [r0, r1, r2, r3] = plane.coeffs;
    let half = ctx.inv(ctx.from_base(2))?;
    let mu = ctx.mul(zeta, zeta);
    let b = ctx.add(
        ctx.mul(half, r1),
        ctx.mul(ctx.div(ctx.mul(half, r2), mu)?, zeta),
    );
    Ok((r3, b, r0))
}

/// Zero set on PG(1,q²) of a plane's ι-pullback, via the semilinear solver;
/// ∞ is a root exactly when A = 0, matching ι(∞) ∈ Π ⇔ r₃ = 0.
pub fn pullback_zero_set(
    ctx: &FieldCtx,
    q: u64,
    zeta: FieldElem,
    plane: &Plane,
) -> Result<Vec<ProjPoint1>> {
    let (a, b, d) = plane_pullback(ctx, q, zeta, plane)?;
    let mut s = 0u32;
    while ctx.p().pow(s) < q {
        s += 1;
    }
    solve_semilinear(ctx, q * q, s, a, ctx.frobenius(b, q)?, b, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;
    use crate::projline::{find_eps, is_subline, pg1_points};
    use alloc::vec;

    #[test]
    fn point_and_plane_normalization() {
        let ctx = build_field(3, 1).unwrap();
        let two = ctx.from_base(2);
        let p = ProjPoint3::new(&ctx, [ctx.zero(), two, two, ctx.one()]).unwrap();
        assert_eq!(p.coords(), &[ctx.zero(), ctx.one(), ctx.one(), two]);
        assert_eq!(
            ProjPoint3::new(&ctx, [ctx.zero(); 4]).unwrap_err(),
            Error::ZeroVector
        );
        assert_eq!(
            Plane::new(&ctx, [ctx.zero(); 4]).unwrap_err(),
            Error::ZeroVector
        );
    }

    #[test]
    fn point_and_line_counts() {
        let ctx = build_field(3, 1).unwrap();
        let pts = all_points(&ctx, 3).unwrap();
        assert_eq!(pts.len(), 40);
        let distinct: BTreeSet<_> = pts.iter().collect();
        assert_eq!(distinct.len(), 40);
        let lines = all_lines(&ctx, 3).unwrap();
        assert_eq!(lines.len(), 130);
        assert!(lines.iter().all(|l| l.len() == 4));
        // every line's points are distinct
        for l in &lines {
            let s: BTreeSet<_> = l.iter().collect();
            assert_eq!(s.len(), 4);
        }
        assert_eq!(all_planes(&ctx, 3).unwrap().len(), 40);
    }

    #[test]
    fn quadric_q3_counts_and_polar_form() {
        let ctx = build_field(3, 4).unwrap();
        let b = ctx.canonical_power_basis(3, 4).unwrap();
        let basis = [b[0], b[1], b[2], b[3]];
        let o = elliptic_quadric(&ctx, &basis).unwrap();
        assert_eq!(o.points.len(), 10);
        assert!(is_ovoid(&ctx, 3, &o.points));
        // recount the zero vectors of Q(z) = Tr(z^{q^2+1}) directly
        let mut zeros = 0;
        for k in 1..81 {
            let z = ctx.elem_at(k);
            if ctx.trace(ctx.pow(z, 10), 9, 3).unwrap().is_zero() {
                zeros += 1;
            }
        }
        assert_eq!(zeros, 20);
        // polar form B(z,w) = Tr_{q^4/q}(z^{q^2} w) is nondegenerate
        for k in 1..81 {
            let z9 = ctx.pow(ctx.elem_at(k), 9);
            let hit = (0..81).any(|j| {
                !ctx.trace(ctx.mul(z9, ctx.elem_at(j)), 81, 3)
                    .unwrap()
                    .is_zero()
            });
            assert!(hit, "element {k} pairs to zero with everything");
        }
    }

    #[test]
    fn quadric_q5_size() {
        let ctx = build_field(5, 4).unwrap();
        let b = ctx.canonical_power_basis(5, 4).unwrap();
        let o = elliptic_quadric(&ctx, &[b[0], b[1], b[2], b[3]]).unwrap();
        assert_eq!(o.points.len(), 26);
    }

    #[test]
    fn dependent_basis_rejected() {
        let ctx = build_field(3, 4).unwrap();
        let b = ctx.canonical_power_basis(3, 4).unwrap();
        assert_eq!(
            elliptic_quadric(&ctx, &[b[0], b[0], b[2], b[3]]).unwrap_err(),
            Error::DependentBasis
        );
    }

    #[test]
    fn cap_condition_rejections() {
        let ctx = build_field(3, 4).unwrap();
        let b = ctx.canonical_power_basis(3, 4).unwrap();
        let o = elliptic_quadric(&ctx, &[b[0], b[1], b[2], b[3]]).unwrap();
        // wrong sizes
        assert!(!is_ovoid(&ctx, 3, &o.points[..9]));
        let pts = all_points(&ctx, 3).unwrap();
        let extra = pts.iter().find(|p| !o.contains(p)).unwrap();
        let mut eleven = o.points.clone();
        eleven.push(*extra);
        assert!(!is_ovoid(&ctx, 3, &eleven));
        // plant a collinear triple: a, b, and a+b
        let zero = ctx.zero();
        let one = ctx.one();
        let tri = [
            ProjPoint3::new(&ctx, [one, zero, zero, zero]).unwrap(),
            ProjPoint3::new(&ctx, [zero, one, zero, zero]).unwrap(),
            ProjPoint3::new(&ctx, [one, one, zero, zero]).unwrap(),
        ];
        let mut planted: Vec<ProjPoint3> = tri.to_vec();
        planted.extend(o.points.iter().filter(|p| !tri.contains(p)).take(7));
        assert_eq!(planted.len(), 10);
        assert!(!is_ovoid(&ctx, 3, &planted));
        assert!(Ovoid::new(&ctx, 3, planted).is_err());
    }

    #[test]
    fn inventory_q3_census() {
        let ctx = build_field(3, 4).unwrap();
        let b = ctx.canonical_power_basis(3, 4).unwrap();
        let o = elliptic_quadric(&ctx, &[b[0], b[1], b[2], b[3]]).unwrap();
        let inv = inventory(&ctx, &o).unwrap();
        assert_eq!(
            inv,
            Inventory {
                secant_planes: 30,
                tangent_planes: 10,
                secant_lines: 45,
                tangent_lines: 40,
                external_lines: 45,
                points_off: 30,
            }
        );
        assert_eq!(inv.secant_planes + inv.tangent_planes, 40);
        assert_eq!(
            inv.secant_lines + inv.tangent_lines + inv.external_lines,
            130
        );
    }

    #[test]
    fn inventory_q5_line_counts() {
        let ctx = build_field(5, 4).unwrap();
        let b = ctx.canonical_power_basis(5, 4).unwrap();
        let o = elliptic_quadric(&ctx, &[b[0], b[1], b[2], b[3]]).unwrap();
        let inv = inventory(&ctx, &o).unwrap();
        assert_eq!(inv.secant_lines, 325);
        assert_eq!(inv.external_lines, 325);
        assert_eq!(inv.tangent_lines, 156);
        assert_eq!(inv.secant_planes + inv.tangent_planes, 156);
        assert_eq!(inv.points_off, 130);
    }

    #[test]
    fn iota_conventions_and_quadric_membership() {
        let ctx = build_field(5, 2).unwrap();
        let zeta = find_eps(&ctx, 5).unwrap();
        let inf = iota(&ctx, 5, zeta, Infinity).unwrap();
        assert_eq!(
            inf.coords(),
            &[ctx.zero(), ctx.zero(), ctx.zero(), ctx.one()]
        );
        // iota_quadric checks the quadric equation pointwise and the ovoid
        // property; a bijection follows from the size
        let o = iota_quadric(&ctx, 5, zeta).unwrap();
        assert_eq!(o.points.len(), 26);
        // a zeta that is not trace-zero is rejected
        assert!(iota(&ctx, 5, ctx.one(), Infinity).is_err());
        assert!(iota(&ctx, 5, ctx.zero(), Infinity).is_err());
    }

    #[test]
    fn nontangent_pullbacks_are_baer_sublines() {
        let ctx = build_field(5, 2).unwrap();
        let zeta = find_eps(&ctx, 5).unwrap();
        let o = iota_quadric(&ctx, 5, zeta).unwrap();
        let mut secants = 0;
        let mut tangents = 0;
        for plane in all_planes(&ctx, 5).unwrap() {
            let zeros = pullback_zero_set(&ctx, 5, zeta, &plane).unwrap();
            // the pullback zero set maps onto the plane section under iota
            let image: BTreeSet<ProjPoint3> = zeros
                .iter()
                .map(|&t| iota(&ctx, 5, zeta, t).unwrap())
                .collect();
            let section: BTreeSet<ProjPoint3> =
                plane_section(&ctx, &plane, &o).into_iter().collect();
            assert_eq!(image, section);
            match classify_plane(&ctx, &plane, &o).unwrap() {
                PlaneClass::Secant(pts) => {
                    assert_eq!(pts.len(), 6);
                    assert!(is_subline(&ctx, 5, &zeros).unwrap().is_some());
                    secants += 1;
                }
                PlaneClass::Tangent(_) => {
                    assert_eq!(zeros.len(), 1);
                    tangents += 1;
                }
            }
        }
        assert_eq!(secants, 130);
        assert_eq!(tangents, 26);
    }

    #[test]
    fn norm_circle_solvability_matches_sections() {
        // for planes with A != 0: q+1 pullback roots iff
        // Delta = alpha^{q+1} - D/A is nonzero, else exactly one root
        let ctx = build_field(5, 2).unwrap();
        let zeta = find_eps(&ctx, 5).unwrap();
        let mut nonzero_delta = 0;
        let mut zero_delta = 0;
        for plane in all_planes(&ctx, 5).unwrap() {
            let (a, b, d) = plane_pullback(&ctx, 5, zeta, &plane).unwrap();
            if a.is_zero() {
                continue;
            }
            let alpha = ctx.div(ctx.frobenius(b, 5).unwrap(), a).unwrap();
            let delta = ctx.sub(
                ctx.mul(alpha, ctx.frobenius(alpha, 5).unwrap()),
                ctx.div(d, a).unwrap(),
            );
            assert!(ctx.is_in_subfield(delta, 5).unwrap());
            let zeros = pullback_zero_set(&ctx, 5, zeta, &plane).unwrap();
            if delta.is_zero() {
                assert_eq!(zeros.len(), 1);
                zero_delta += 1;
            } else {
                assert_eq!(zeros.len(), 6);
                nonzero_delta += 1;
            }
        }
        assert!(nonzero_delta > 0 && zero_delta > 0);
    }

    #[test]
    fn pullback_equation_matches_incidence_pointwise() {
        let ctx = build_field(5, 2).unwrap();
        let zeta = find_eps(&ctx, 5).unwrap();
        let plane = Plane::new(
            &ctx,
            [ctx.one(), ctx.from_base(2), ctx.from_base(3), ctx.one()],
        )
        .unwrap();
        let zeros: BTreeSet<ProjPoint1> = pullback_zero_set(&ctx, 5, zeta, &plane)
            .unwrap()
            .into_iter()
            .collect();
        for t in pg1_points(&ctx, 25).unwrap() {
            let p = iota(&ctx, 5, zeta, t).unwrap();
            assert_eq!(incident(&ctx, &p, &plane), zeros.contains(&t));
        }
    }

    #[test]
    fn mixed_point_set_is_not_an_ovoid() {
        // ten points that are pairwise non-collinear except for no triple is
        // a strong condition; a random-looking plane slice fails it
        let ctx = build_field(3, 4).unwrap();
        let pts = all_points(&ctx, 3).unwrap();
        let ten: Vec<ProjPoint3> = pts.into_iter().take(10).collect();
        assert!(!is_ovoid(&ctx, 3, &ten));
        assert_eq!(vec![ten.len()], vec![10]);
    }
}
