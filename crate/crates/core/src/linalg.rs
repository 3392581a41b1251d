//! Gaussian elimination over any subfield of the tower.
//!
//! Matrices are dense `Vec<Vec<FieldElem>>` rows. All entries are expected to
//! lie in one subfield; elimination then stays inside it because sums,
//! products, and inverses of subfield elements do.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row.
pub fn rref(ctx: &FieldCtx, rows: &mut Vec<Vec<FieldElem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(src) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let inv = ctx.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = ctx.sub(*x, ctx.mul(f, pv));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(ctx: &FieldCtx, rows: &[Vec<FieldElem>]) -> usize {
    let mut m: Vec<Vec<FieldElem>> = rows.to_vec();
    rref(ctx, &mut m).len()
}

/// Echelon basis of a row space, for repeated membership queries.
pub struct RowSpace {
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ctx: &FieldCtx, rows: &[Vec<FieldElem>]) -> Self {
        let mut m = rows.to_vec();
        let pivots = rref(ctx, &mut m);
        RowSpace { rows: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, ctx: &FieldCtx, v: &[FieldElem]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p];
                for (x, r) in v.iter_mut().zip(row) {
                    let t = ctx.mul(f, *r);
                    *x = ctx.sub(*x, t);
                }
            }
        }
        v.iter().all(FieldElem::is_zero)
    }
}

/// Basis of {x : M x = 0} (right kernel), from the reduced echelon form.
pub fn nullspace(ctx: &FieldCtx, rows: &[Vec<FieldElem>]) -> Vec<Vec<FieldElem>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    let pivots = rref(ctx, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![FieldElem::ZERO; ncols];
        v[f] = ctx.one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = ctx.neg(row[f]);
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, or `SingularMap` if the rank is deficient.
pub fn invert(ctx: &FieldCtx, m: &[Vec<FieldElem>]) -> Result<Vec<Vec<FieldElem>>> {
    let n = m.len();
    let mut aug: Vec<Vec<FieldElem>> = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        debug_assert_eq!(row.len(), n);
        let mut r = row.clone();
        r.extend((0..n).map(|j| if i == j { ctx.one() } else { FieldElem::ZERO }));
        aug.push(r);
    }
    let pivots = rref(ctx, &mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return Err(Error::SingularMap);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(ctx: &FieldCtx, m: &[Vec<FieldElem>], v: &[FieldElem]) -> Vec<FieldElem> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(FieldElem::ZERO, |acc, (&a, &b)| ctx.add(acc, ctx.mul(a, b)))
        })
        .collect()
}

/// Coordinates of elements of F_{p^D} in a given F_q-basis, via the dual
/// basis of the relative trace form (which is nondegenerate).
#[derive(Debug)]
pub struct SubfieldCoords {
    q: u64,
    basis: Vec<FieldElem>,
    dual: Vec<FieldElem>,
}

impl SubfieldCoords {
    /// `basis` must be F_q-linearly independent with |basis| = [top : F_q];
    /// dependence surfaces as `DependentBasis`.
    pub fn new(ctx: &FieldCtx, q: u64, basis: &[FieldElem]) -> Result<Self> {
        let n = basis.len();
        let mut gram = Vec::with_capacity(n);
        for &bi in basis {
            let mut row = Vec::with_capacity(n);
            for &bj in basis {
                row.push(ctx.trace(ctx.mul(bi, bj), ctx.size(), q)?);
            }
            gram.push(row);
        }
        let gram_inv = invert(ctx, &gram).map_err(|_| Error::DependentBasis)?;
        let dual = gram_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(basis)
                    .fold(FieldElem::ZERO, |acc, (&c, &b)| ctx.add(acc, ctx.mul(c, b)))
            })
            .collect();
        Ok(SubfieldCoords {
            q,
            basis: basis.to_vec(),
            dual,
        })
    }

    /// c_i = Tr(z · dual_i); then z = Σ c_i basis_i with all c_i in F_q.
    pub fn coords(&self, ctx: &FieldCtx, z: FieldElem) -> Result<Vec<FieldElem>> {
        let cs: Vec<FieldElem> = self
            .dual
            .iter()
            .map(|&d| ctx.trace(ctx.mul(z, d), ctx.size(), self.q))
            .collect::<Result<_>>()?;
        debug_assert_eq!(self.evaluate(ctx, &cs), z);
        Ok(cs)
    }

    pub fn evaluate(&self, ctx: &FieldCtx, coords: &[FieldElem]) -> FieldElem {
        coords
            .iter()
            .zip(&self.basis)
            .fold(FieldElem::ZERO, |acc, (&c, &b)| ctx.add(acc, ctx.mul(c, b)))
    }
}
