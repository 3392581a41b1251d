//! Arithmetic in one finite-field tower F_p ⊂ … ⊂ F_{p^D}.
//!
//! A single [`FieldCtx`] owns the top field; every subfield F_{p^j} with
//! j | D is the fixed set of x ↦ x^{p^j} and shares the one representation.
//! Construction is fully deterministic: the modulus is the lexicographically
//! smallest monic irreducible of its degree (coefficients compared constant
//! term first), and distinguished elements are always the first hit in
//! canonical element order. Two contexts built from the same (p, D) are
//! interchangeable.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Largest supported extension degree over the prime field.
pub const MAX_DEGREE: usize = 16;

/// Hard ceiling on p^D. Keeps trial-division factoring, element scans and
/// linear discrete logs cheap; desk-scale towers sit far below it.
pub const MAX_FIELD_SIZE: u64 = 1 << 40;

/// Element of the top field as a coefficient vector over F_p (constant term
/// first, unused tail zero). The derived ordering is the canonical element
/// order used everywhere a construction says "enumeration-first".
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldElem {
    coeffs: [u16; MAX_DEGREE],
}

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem {
        coeffs: [0; MAX_DEGREE],
    };

    pub fn coeffs(&self) -> &[u16; MAX_DEGREE] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u16 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Immutable description of one tower; all operations are pure functions of
/// (context, inputs).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldCtx {
    p: u64,
    degree: u32,
    size: u64,
    group_order: u64,
    modulus: Vec<u16>,
    reduction: [u16; MAX_DEGREE],
    omega: FieldElem,
    order_primes: Vec<u64>,
}

pub fn build_field(p: u64, degree: u32) -> Result<FieldCtx> {
    if p < 3 || p.is_multiple_of(2) || p >= 1 << 16 || !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if degree == 0 || degree as usize > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let mut size: u64 = 1;
    for _ in 0..degree {
        size = size
            .checked_mul(p)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge { p, degree })?;
    }
    let modulus = find_modulus(p, degree as usize);
    let mut reduction = [0u16; MAX_DEGREE];
    for j in 0..degree as usize {
        reduction[j] = ((p - modulus[j] as u64) % p) as u16;
    }
    let group_order = size - 1;
    let order_primes = prime_factors(group_order);
    let mut ctx = FieldCtx {
        p,
        degree,
        size,
        group_order,
        modulus,
        reduction,
        omega: FieldElem::ZERO,
        order_primes,
    };
    ctx.omega = ctx.find_primitive();
    Ok(ctx)
}

impl FieldCtx {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements of the top field.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Order of the multiplicative group of the top field.
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    /// The enumeration-first generator of the full multiplicative group.
    pub fn omega(&self) -> FieldElem {
        self.omega
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        self.from_base(1)
    }

    /// Embeds an integer as a prime-field element (reduced mod p).
    pub fn from_base(&self, v: u64) -> FieldElem {
        let mut e = FieldElem::ZERO;
        e.coeffs[0] = (v % self.p) as u16;
        e
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let mut r = FieldElem::ZERO;
        for i in 0..self.degree as usize {
            r.coeffs[i] = ((a.coeffs[i] as u64 + b.coeffs[i] as u64) % self.p) as u16;
        }
        r
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let mut r = FieldElem::ZERO;
        for i in 0..self.degree as usize {
            r.coeffs[i] = ((self.p - a.coeffs[i] as u64) % self.p) as u16;
        }
        r
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let d = self.degree as usize;
        let p = self.p;
        if d == 1 {
            let mut r = FieldElem::ZERO;
            r.coeffs[0] = (a.coeffs[0] as u64 * b.coeffs[0] as u64 % p) as u16;
            return r;
        }
        let mut acc = [0u64; 2 * MAX_DEGREE];
        for i in 0..d {
            let ai = a.coeffs[i] as u64;
            if ai != 0 {
                for j in 0..d {
                    acc[i + j] += ai * b.coeffs[j] as u64;
                }
            }
        }
        // fold X^i (i >= d) down through X^d = reduction
        for i in (d..=2 * d - 2).rev() {
            let t = acc[i] % p;
            if t != 0 {
                for j in 0..d {
                    acc[i - d + j] += t * self.reduction[j] as u64;
                }
            }
        }
        let mut r = FieldElem::ZERO;
        for (rc, &a) in r.coeffs[..d].iter_mut().zip(&acc[..d]) {
            *rc = (a % p) as u16;
        }
        r
    }

    /// x^e with the exponent reduced mod the group order (x nonzero); zero to
    /// a positive power is zero and anything to the zeroth power is one.
    pub fn pow(&self, x: FieldElem, e: u128) -> FieldElem {
        if e == 0 {
            return self.one();
        }
        if x.is_zero() {
            return FieldElem::ZERO;
        }
        let mut e = (e % self.group_order as u128) as u64;
        if e == 0 {
            return self.one();
        }
        let mut base = x;
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// Same as [`pow`](Self::pow) for exponents beyond u128.
    pub fn pow_biguint(&self, x: FieldElem, e: &BigUint) -> FieldElem {
        if x.is_zero() {
            return if *e == BigUint::ZERO {
                self.one()
            } else {
                FieldElem::ZERO
            };
        }
        let r = (e % self.group_order).to_u128().unwrap_or(0);
        let r = if r == 0 && *e != BigUint::ZERO {
            self.group_order as u128
        } else {
            r
        };
        self.pow(x, r)
    }

    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.group_order as u128 - 1))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Canonical index of an element: its position in canonical element order.
    pub fn elem_index(&self, x: FieldElem) -> u64 {
        let mut k = 0u64;
        for i in 0..self.degree as usize {
            k = k * self.p + x.coeffs[i] as u64;
        }
        k
    }

    /// Inverse of [`elem_index`](Self::elem_index); `k < size`.
    pub fn elem_at(&self, mut k: u64) -> FieldElem {
        debug_assert!(k < self.size);
        let mut e = FieldElem::ZERO;
        for i in (0..self.degree as usize).rev() {
            e.coeffs[i] = (k % self.p) as u16;
            k /= self.p;
        }
        e
    }

    /// Human-readable polynomial form in the generator symbol `w`.
    pub fn elem_string(&self, x: FieldElem) -> String {
        if x.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for i in 0..self.degree as usize {
            let c = x.coeffs[i];
            if c == 0 {
                continue;
            }
            if !first {
                s.push('+');
            }
            first = false;
            match (c, i) {
                (_, 0) => {
                    let _ = write!(s, "{c}");
                }
                (1, 1) => s.push('w'),
                (_, 1) => {
                    let _ = write!(s, "{c}w");
                }
                (1, _) => {
                    let _ = write!(s, "w^{i}");
                }
                _ => {
                    let _ = write!(s, "{c}w^{i}");
                }
            }
        }
        s
    }

    /// Sizes of all subfields in the tower, ascending.
    pub fn subfield_sizes(&self) -> Vec<u64> {
        (1..=self.degree)
            .filter(|j| self.degree.is_multiple_of(*j))
            .map(|j| self.p.pow(j))
            .collect()
    }

    fn subfield_exp(&self, q: u64) -> Result<u32> {
        let mut s = self.p;
        for j in 1..=self.degree {
            if s == q {
                return if self.degree.is_multiple_of(j) {
                    Ok(j)
                } else {
                    Err(Error::NotASubfieldSize(q))
                };
            }
            s = s.saturating_mul(self.p);
        }
        Err(Error::NotASubfieldSize(q))
    }

    pub fn is_subfield_size(&self, q: u64) -> bool {
        self.subfield_exp(q).is_ok()
    }

    pub fn frobenius(&self, x: FieldElem, q: u64) -> Result<FieldElem> {
        self.subfield_exp(q)?;
        Ok(self.pow(x, q as u128))
    }

    pub fn is_in_subfield(&self, x: FieldElem, q: u64) -> Result<bool> {
        Ok(self.frobenius(x, q)? == x)
    }

    /// Relative trace from F_from down to F_to: sum of the conjugates
    /// x^{to^i} for i below [F_from : F_to].
    pub fn trace(&self, x: FieldElem, from_q: u64, to_q: u64) -> Result<FieldElem> {
        let steps = self.relative_degree(from_q, to_q)?;
        if !self.is_in_subfield(x, from_q)? {
            return Err(Error::NotInSubfield);
        }
        let mut acc = FieldElem::ZERO;
        let mut y = x;
        for _ in 0..steps {
            acc = self.add(acc, y);
            y = self.pow(y, to_q as u128);
        }
        Ok(acc)
    }

    /// Relative norm from F_from down to F_to: product of the conjugates.
    pub fn norm(&self, x: FieldElem, from_q: u64, to_q: u64) -> Result<FieldElem> {
        let steps = self.relative_degree(from_q, to_q)?;
        if !self.is_in_subfield(x, from_q)? {
            return Err(Error::NotInSubfield);
        }
        let mut acc = self.one();
        let mut y = x;
        for _ in 0..steps {
            acc = self.mul(acc, y);
            y = self.pow(y, to_q as u128);
        }
        Ok(acc)
    }

    fn relative_degree(&self, from_q: u64, to_q: u64) -> Result<u32> {
        let jf = self.subfield_exp(from_q)?;
        let jt = self.subfield_exp(to_q)?;
        if jf % jt != 0 {
            return Err(Error::NotASubfieldExtension {
                from: from_q,
                to: to_q,
            });
        }
        Ok(jf / jt)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: FieldElem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut o = self.group_order;
        for &r in &self.order_primes {
            while o.is_multiple_of(r) && self.pow(x, (o / r) as u128) == self.one() {
                o /= r;
            }
        }
        Ok(o)
    }

    /// Euler criterion inside F_q: x is a nonzero square iff x^{(q-1)/2} = 1.
    pub fn is_square_in(&self, x: FieldElem, q: u64) -> Result<bool> {
        self.subfield_exp(q)?;
        if !self.is_in_subfield(x, q)? {
            return Err(Error::NotInSubfield);
        }
        if x.is_zero() {
            return Ok(false);
        }
        Ok(self.pow(x, ((q - 1) / 2) as u128) == self.one())
    }

    /// Smallest k >= 0 with base^k = x, by linear scan over the base's cycle.
    pub fn dlog(&self, x: FieldElem, base: FieldElem) -> Result<u64> {
        if x.is_zero() || base.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut acc = self.one();
        for k in 0..=self.group_order {
            if acc == x {
                return Ok(k);
            }
            acc = self.mul(acc, base);
            if acc == self.one() {
                break;
            }
        }
        if x == self.one() {
            return Ok(0);
        }
        Err(Error::DlogNoSolution)
    }

    fn find_primitive(&self) -> FieldElem {
        'next: for k in 1..self.size {
            let x = self.elem_at(k);
            for &r in &self.order_primes {
                if self.pow(x, (self.group_order / r) as u128) == self.one() {
                    continue 'next;
                }
            }
            return x;
        }
        unreachable!("every finite field has a primitive element")
    }

    /// Canonical generator of F_q^*: omega^{(size-1)/(q-1)}.
    pub fn subfield_generator(&self, q: u64) -> Result<FieldElem> {
        self.subfield_exp(q)?;
        Ok(self.pow(self.omega, (self.group_order / (q - 1)) as u128))
    }

    /// All elements of F_q in canonical order.
    pub fn subfield_elements(&self, q: u64) -> Result<Vec<FieldElem>> {
        self.subfield_exp(q)?;
        if q == self.size {
            return Ok((0..self.size).map(|k| self.elem_at(k)).collect());
        }
        let g = self.subfield_generator(q)?;
        let mut els = Vec::with_capacity(q as usize);
        els.push(FieldElem::ZERO);
        let mut acc = self.one();
        for _ in 0..q - 1 {
            els.push(acc);
            acc = self.mul(acc, g);
        }
        els.sort_unstable();
        Ok(els)
    }

    /// Power basis {1, g, ..., g^{deg-1}} of F_{base^deg} over F_base, where g
    /// is the enumeration-first element of exact degree `deg` over F_base.
    pub fn canonical_power_basis(&self, base_q: u64, deg: u32) -> Result<Vec<FieldElem>> {
        let jb = self.subfield_exp(base_q)?;
        if deg == 0 {
            return Err(Error::DegreeOutOfRange(0));
        }
        if deg == 1 {
            return Ok(vec![self.one()]);
        }
        let jext = jb.checked_mul(deg).ok_or(Error::DegreeOutOfRange(deg))?;
        if jext > self.degree || !self.degree.is_multiple_of(jext) {
            return Err(Error::NotASubfieldSize(base_q.pow(deg)));
        }
        let ext_q = self.p.pow(jext);
        let maximal_proper: Vec<u64> = prime_factors(deg as u64)
            .into_iter()
            .map(|r| {
                let sub_j = jb * (deg / r as u32);
                self.p.pow(sub_j)
            })
            .collect();
        for x in self.subfield_elements(ext_q)? {
            let mut exact = true;
            for &sub_q in &maximal_proper {
                if self.is_in_subfield(x, sub_q)? {
                    exact = false;
                    break;
                }
            }
            if exact {
                let mut basis = Vec::with_capacity(deg as usize);
                let mut acc = self.one();
                for _ in 0..deg {
                    basis.push(acc);
                    acc = self.mul(acc, x);
                }
                return Ok(basis);
            }
        }
        Err(Error::Invariant(String::from(
            "no element of exact extension degree found",
        )))
    }
}

/// Writes q as p^m, the only shape the tower accepts for a field size.
pub fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    let fs = prime_factors(q);
    if q < 2 || fs.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = fs[0];
    let mut m = 0u32;
    let mut t = q;
    while t > 1 {
        t /= p;
        m += 1;
    }
    Ok((p, m))
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            fs.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

// ---- build-time polynomial arithmetic over F_p (ascending coefficients,
// trimmed); only used to find and certify the modulus.

fn ptrim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn pmod(a: &mut Vec<u64>, f: &[u64], p: u64) {
    let df = f.len() - 1;
    while a.len() > df {
        let da = a.len() - 1;
        let c = a[da] % p;
        if c != 0 {
            for (ac, &fc) in a[da - df..=da].iter_mut().zip(f) {
                *ac = (*ac + (p - c) * fc) % p;
            }
        }
        a.pop();
        ptrim(a);
    }
}

fn pmulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut res = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x != 0 {
            for (j, &y) in b.iter().enumerate() {
                res[i + j] = (res[i + j] + x * y) % p;
            }
        }
    }
    pmod(&mut res, f, p);
    res
}

fn ppow_p(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = a.to_vec();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            r = pmulmod(&r, &b, f, p);
        }
        b = pmulmod(&b, &b, f, p);
        e >>= 1;
    }
    r
}

fn pmonic(a: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    ptrim(&mut a);
    if a.is_empty() {
        return a;
    }
    let lead = *a.last().unwrap();
    let inv = modpow(lead, p - 2, p);
    for c in &mut a {
        *c = *c * inv % p;
    }
    a
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        let bm = pmonic(&b, p);
        pmod(&mut a, &bm, p);
        core::mem::swap(&mut a, &mut b);
    }
    pmonic(&a, p)
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Rabin test with early rejection: walk r_j = X^{p^j} mod f upward; any
/// common factor with X^{p^j} - X for j <= D/2 proves a factor of degree
/// dividing j, and completeness requires r_D = X.
fn is_irreducible(f: &[u64], p: u64, d: usize) -> bool {
    let x = vec![0u64, 1];
    let mut r = x.clone();
    for j in 1..=d {
        r = ppow_p(&r, f, p);
        if j <= d / 2 {
            let mut t = r.clone();
            while t.len() < 2 {
                t.push(0);
            }
            t[1] = (t[1] + p - 1) % p;
            ptrim(&mut t);
            if t.is_empty() {
                return false; // f divides X^{p^j} - X: all factor degrees divide j < d
            }
            let g = pgcd(&t, f, p);
            if g.len() != 1 {
                return false;
            }
        }
    }
    r == x
}

fn find_modulus(p: u64, d: usize) -> Vec<u16> {
    if d == 1 {
        return vec![0, 1];
    }
    let size = (p as u128).pow(d as u32);
    let mut k: u128 = 0;
    while k < size {
        // digits of k, constant term most significant
        let mut digits = vec![0u64; d];
        let mut t = k;
        for i in (0..d).rev() {
            digits[i] = (t % p as u128) as u64;
            t /= p as u128;
        }
        if digits[0] == 0 {
            // divisible by X; skip the whole block with this leading digit
            k += (size / p as u128).max(1);
            continue;
        }
        let mut f = digits.clone();
        f.push(1);
        if is_irreducible(&f, p, d) {
            return f.iter().map(|&c| c as u16).collect();
        }
        k += 1;
    }
    unreachable!("irreducible polynomials of every degree exist")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(ctx: &FieldCtx, coeffs: &[u16]) -> FieldElem {
        let mut e = FieldElem::ZERO;
        e.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        let _ = ctx;
        e
    }

    #[test]
    fn canonical_moduli_and_omegas_are_frozen() {
        // independently computed with a separate implementation of the
        // same canonicalization rules
        let cases: &[(u64, u32, &[u16], u64)] = &[
            (3, 1, &[0, 1], 2),
            (3, 2, &[1, 0, 1], 4),
            (3, 3, &[1, 0, 2, 1], 2),
            (3, 4, &[1, 0, 1, 1, 1], 4),
            (3, 8, &[1, 0, 0, 0, 0, 1, 1, 0, 1], 4),
            (5, 1, &[0, 1], 2),
            (5, 2, &[1, 1, 1], 8),
            (5, 4, &[1, 0, 1, 1, 1], 6),
            (7, 1, &[0, 1], 3),
            (7, 2, &[1, 0, 1], 9),
            (7, 4, &[1, 0, 0, 1, 1], 12),
            (11, 1, &[0, 1], 2),
            (11, 4, &[1, 0, 0, 4, 1], 17),
            (23, 1, &[0, 1], 5),
        ];
        for &(p, d, modulus, omega_idx) in cases {
            let ctx = build_field(p, d).unwrap();
            assert_eq!(ctx.modulus(), modulus, "modulus for ({p},{d})");
            assert_eq!(
                ctx.elem_index(ctx.omega()),
                omega_idx,
                "omega for ({p},{d})"
            );
        }
    }

    #[test]
    fn deep_tower_modulus_is_frozen() {
        let ctx = build_field(3, 12).unwrap();
        assert_eq!(ctx.modulus(), &[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1]);
        assert_eq!(ctx.elem_index(ctx.omega()), 11);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(build_field(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(build_field(2, 3), Err(Error::NotPrime(2)));
        assert_eq!(build_field(1, 1), Err(Error::NotPrime(1)));
        assert_eq!(build_field(3, 0), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(build_field(3, 17), Err(Error::DegreeOutOfRange(17)));
        assert_eq!(
            build_field(23, 16),
            Err(Error::FieldTooLarge { p: 23, degree: 16 })
        );
    }

    #[test]
    fn same_parameters_rebuild_identically() {
        let a = build_field(3, 4).unwrap();
        let b = build_field(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.omega(), b.omega());
    }

    #[test]
    fn omega_generates_and_has_full_order() {
        for (p, d) in [(3u64, 2u32), (3, 4), (5, 2), (7, 2)] {
            let ctx = build_field(p, d).unwrap();
            assert_eq!(ctx.element_order(ctx.omega()).unwrap(), ctx.group_order());
            // the powers of omega really exhaust the nonzero elements
            let mut seen = alloc::collections::BTreeSet::new();
            let mut acc = ctx.one();
            for _ in 0..ctx.group_order() {
                seen.insert(acc);
                acc = ctx.mul(acc, ctx.omega());
            }
            assert_eq!(seen.len() as u64, ctx.group_order());
        }
    }

    #[test]
    fn f9_omega_fourth_power_is_minus_one() {
        let ctx = build_field(3, 2).unwrap();
        let w = ctx.omega();
        assert_eq!(ctx.pow(w, 4), ctx.neg(ctx.one()));
        assert_eq!(ctx.pow(w, 8), ctx.one());
    }

    #[test]
    fn field_axioms_exhaustive_f9() {
        let ctx = build_field(3, 2).unwrap();
        let all: Vec<FieldElem> = (0..9).map(|k| ctx.elem_at(k)).collect();
        for &a in &all {
            assert_eq!(ctx.pow(a, 9), a, "x^q = x on F_q");
            for &b in &all {
                assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                assert_eq!(ctx.add(a, b), ctx.add(b, a));
                if !b.is_zero() {
                    let q = ctx.div(a, b).unwrap();
                    assert_eq!(ctx.mul(q, b), a);
                }
                for &c in &all {
                    assert_eq!(
                        ctx.mul(a, ctx.add(b, c)),
                        ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn elem_index_roundtrip_and_order_agree() {
        let ctx = build_field(5, 2).unwrap();
        let mut prev: Option<FieldElem> = None;
        for k in 0..25 {
            let x = ctx.elem_at(k);
            assert_eq!(ctx.elem_index(x), k);
            if let Some(pr) = prev {
                assert!(pr < x, "canonical order must match index order");
            }
            prev = Some(x);
        }
    }

    #[test]
    fn subfield_sizes_by_fixed_point_scan() {
        let ctx = build_field(3, 8).unwrap();
        assert_eq!(ctx.subfield_sizes(), vec![3, 9, 81, 6561]);
        for q in [3u64, 9, 81, 6561] {
            let count = (0..ctx.size())
                .filter(|&k| ctx.is_in_subfield(ctx.elem_at(k), q).unwrap())
                .count() as u64;
            assert_eq!(count, q, "fixed points of x -> x^{q}");
            let els = ctx.subfield_elements(q).unwrap();
            assert_eq!(els.len() as u64, q);
            for w in els.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
        assert_eq!(
            ctx.subfield_exp(27).unwrap_err(),
            Error::NotASubfieldSize(27)
        );
    }

    #[test]
    fn trace_and_norm_against_direct_formulas() {
        let ctx = build_field(5, 2).unwrap();
        let q = 5u64;
        let mut zero_count = 0;
        for k in 0..25 {
            let x = ctx.elem_at(k);
            // norm to the prime field is x^{q+1}
            assert_eq!(ctx.norm(x, 25, 5).unwrap(), ctx.pow(x, (q + 1) as u128));
            // trace lands in F_q and matches x + x^q
            let t = ctx.trace(x, 25, 5).unwrap();
            assert_eq!(t, ctx.add(x, ctx.pow(x, q as u128)));
            assert!(ctx.is_in_subfield(t, 5).unwrap());
            if !x.is_zero() && t.is_zero() {
                zero_count += 1;
            }
        }
        // q - 1 nonzero elements of F_{q^2} have zero trace
        assert_eq!(zero_count, 4);
    }

    #[test]
    fn trace_transitivity_in_tower() {
        let ctx = build_field(3, 4).unwrap();
        for k in 0..81 {
            let x = ctx.elem_at(k);
            let via = ctx.trace(ctx.trace(x, 81, 9).unwrap(), 9, 3).unwrap();
            assert_eq!(via, ctx.trace(x, 81, 3).unwrap());
        }
    }

    #[test]
    fn square_classes_match_exhaustive_squaring() {
        // is_square_in agrees with the literal set {y^2} in each field
        for (p, d, q) in [(5u64, 1u32, 5u64), (7, 1, 7), (3, 2, 9), (3, 4, 9)] {
            let ctx = build_field(p, d).unwrap();
            let els = ctx.subfield_elements(q).unwrap();
            let squares: alloc::collections::BTreeSet<FieldElem> = els
                .iter()
                .filter(|e| !e.is_zero())
                .map(|&e| ctx.mul(e, e))
                .collect();
            for &x in &els {
                if x.is_zero() {
                    assert!(!ctx.is_square_in(x, q).unwrap());
                } else {
                    assert_eq!(ctx.is_square_in(x, q).unwrap(), squares.contains(&x));
                }
            }
        }
    }

    #[test]
    fn minus_one_square_iff_q_mod_4_is_1() {
        let f5 = build_field(5, 1).unwrap();
        assert!(f5.is_square_in(f5.neg(f5.one()), 5).unwrap());
        let f7 = build_field(7, 1).unwrap();
        assert!(!f7.is_square_in(f7.neg(f7.one()), 7).unwrap());
        // frozen nonsquare lists
        let ns5: Vec<u64> = (1..5)
            .filter(|&v| !f5.is_square_in(f5.from_base(v), 5).unwrap())
            .collect();
        assert_eq!(ns5, vec![2, 3]);
        let ns7: Vec<u64> = (1..7)
            .filter(|&v| !f7.is_square_in(f7.from_base(v), 7).unwrap())
            .collect();
        assert_eq!(ns7, vec![3, 5, 6]);
    }

    #[test]
    fn dlog_scan_and_failure() {
        let ctx = build_field(3, 2).unwrap();
        let w = ctx.omega();
        for k in [0u64, 1, 7] {
            assert_eq!(ctx.dlog(ctx.pow(w, k as u128), w).unwrap(), k);
        }
        // omega is not in the cycle of omega^2 (order 4)
        let base = ctx.pow(w, 2);
        assert_eq!(ctx.dlog(w, base), Err(Error::DlogNoSolution));
        assert_eq!(ctx.dlog(ctx.zero(), w), Err(Error::ZeroElement));
    }

    #[test]
    fn element_orders_divide_group_order() {
        let ctx = build_field(3, 4).unwrap();
        for k in 1..81 {
            let x = ctx.elem_at(k);
            let o = ctx.element_order(x).unwrap();
            assert_eq!(ctx.pow(x, o as u128), ctx.one());
            assert_eq!(80 % o, 0);
            for r in prime_factors(o) {
                assert_ne!(ctx.pow(x, (o / r) as u128), ctx.one());
            }
        }
        assert_eq!(ctx.element_order(ctx.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn pow_handles_huge_exponents() {
        let ctx = build_field(3, 4).unwrap();
        let w = ctx.omega();
        // exponents reduce mod the group order
        assert_eq!(ctx.pow(w, 80 * 12345 + 7), ctx.pow(w, 7));
        let big = BigUint::from(80u32) * BigUint::from(10u8).pow(30) + 7u32;
        assert_eq!(ctx.pow_biguint(w, &big), ctx.pow(w, 7));
        assert_eq!(ctx.pow(ctx.zero(), 0), ctx.one());
        assert_eq!(ctx.pow(ctx.zero(), 5), ctx.zero());
    }

    #[test]
    fn canonical_power_basis_is_frozen_and_independent() {
        let ctx = build_field(3, 4).unwrap();
        // first element of exact degree 2 over F_9 is w^3 (canonical index 1)
        let basis = ctx.canonical_power_basis(9, 2).unwrap();
        assert_eq!(basis[0], ctx.one());
        assert_eq!(basis[1], ctx.elem_at(1));
        assert_eq!(basis.len(), 2);
        let b1 = basis[1];
        assert!(!ctx.is_in_subfield(b1, 9).unwrap());
        // {1, g} spans F_81 over F_9: 81 distinct combinations
        let f9 = ctx.subfield_elements(9).unwrap();
        let mut seen = alloc::collections::BTreeSet::new();
        for &c0 in &f9 {
            for &c1 in &f9 {
                seen.insert(ctx.add(c0, ctx.mul(c1, b1)));
            }
        }
        assert_eq!(seen.len(), 81);
    }

    #[test]
    fn subfield_generator_has_exact_order() {
        let ctx = build_field(3, 8).unwrap();
        for q in [3u64, 9, 81] {
            let g = ctx.subfield_generator(q).unwrap();
            assert_eq!(ctx.element_order(g).unwrap(), q - 1);
            assert!(ctx.is_in_subfield(g, q).unwrap());
        }
    }

    #[test]
    fn fe_helper_matches_elem_at() {
        let ctx = build_field(3, 2).unwrap();
        assert_eq!(fe(&ctx, &[1, 1]), ctx.elem_at(4));
    }
}
