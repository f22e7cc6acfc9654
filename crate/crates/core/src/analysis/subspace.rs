//! Subspaces of GF(q^n) over GF(q) or GF(q^2).
//!
//! GF(q^n) is viewed as GF(Q)^D with basis 1, α, ..., α^{D−1}, where
//! (Q, D) = (q, n) or (q^2, m). This is a basis in both cases because α has
//! degree m over GF(q^2). Subspaces are enumerated through their reduced
//! echelon generator matrices, one per Schubert cell.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elt, FieldCtx};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Fq,
    Fq2,
}

impl Base {
    /// Degree of the base field over GF(q).
    pub fn degree(self) -> u32 {
        match self {
            Base::Fq => 1,
            Base::Fq2 => 2,
        }
    }

    pub fn order(self, q: u32) -> u64 {
        (q as u64).pow(self.degree())
    }

    /// Dimension of GF(q^n) over this base.
    pub fn ambient_dim(self, n: u32) -> u32 {
        n / self.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub base: Base,
    pub dim: usize,
    /// Reduced echelon basis for enumerated subspaces; for spans, the
    /// generators that were independent in the given order.
    pub basis: Vec<Elt>,
    elements: Vec<Elt>,
}

impl Subspace {
    pub fn zero(base: Base) -> Subspace {
        Subspace {
            base,
            dim: 0,
            basis: Vec::new(),
            elements: vec![Elt::ZERO],
        }
    }

    /// The span of `gens` over the base field.
    pub fn span(ctx: &FieldCtx, base: Base, gens: &[Elt]) -> Subspace {
        let scalars = ctx.subfield(base.degree());
        let mut s = Subspace::zero(base);
        for &g in gens {
            if !s.contains(g) {
                s.extend(ctx, &scalars, g);
            }
        }
        s
    }

    fn extend(&mut self, ctx: &FieldCtx, scalars: &[Elt], g: Elt) {
        let mut next = Vec::with_capacity(self.elements.len() * scalars.len());
        for &c in scalars {
            let cg = ctx.mul(c, g);
            next.extend(self.elements.iter().map(|&v| ctx.add(v, cg)));
        }
        next.sort_unstable();
        next.dedup();
        self.elements = next;
        self.basis.push(g);
        self.dim += 1;
    }

    /// All elements, sorted.
    pub fn elements(&self) -> &[Elt] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: Elt) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elt> + '_ {
        self.elements.iter().copied().filter(|e| !e.is_zero())
    }

    /// True when the element set is closed under addition and base scaling.
    pub fn is_closed(&self, ctx: &FieldCtx) -> bool {
        let scalars = ctx.subfield(self.base.degree());
        self.elements.iter().all(|&a| {
            self.elements.iter().all(|&b| self.contains(ctx.add(a, b)))
                && scalars.iter().all(|&c| self.contains(ctx.mul(c, a)))
        })
    }

    /// One representative h per coset h + V, in field order (zero first).
    pub fn coset_reps(&self, ctx: &FieldCtx) -> Vec<Elt> {
        let mut seen = vec![false; ctx.order() as usize];
        let mut reps = Vec::new();
        for h in ctx.elements() {
            let key = ctx.to_vector(h) as usize;
            if seen[key] {
                continue;
            }
            reps.push(h);
            for &v in &self.elements {
                seen[ctx.to_vector(ctx.add(h, v)) as usize] = true;
            }
        }
        reps
    }
}

/// Gaussian binomial [n choose k]_Q.
pub fn gaussian_binomial(n: u32, k: u32, big_q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = big_q as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Every `dim`-dimensional subspace over `base`, duplicate-free. Fails with
/// [`Error::TooMany`] when the count exceeds `cap`.
pub fn enumerate_subspaces(
    ctx: &FieldCtx,
    base: Base,
    dim: u32,
    cap: u128,
) -> Result<Vec<Subspace>> {
    let d = base.ambient_dim(ctx.n());
    if dim > d {
        return Err(Error::RangeError(format!(
            "subspace dimension {dim} exceeds ambient dimension {d}"
        )));
    }
    let count = gaussian_binomial(d, dim, base.order(ctx.q()));
    if count > cap {
        return Err(Error::TooMany { count, cap });
    }
    let scalars = ctx.subfield(base.degree());
    let mut out = Vec::with_capacity(count as usize);
    let mut pivots: Vec<u32> = (0..dim).collect();
    loop {
        cell(ctx, &scalars, base, d, &pivots, &mut out);
        if !next_subset(&mut pivots, d) {
            break;
        }
    }
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

fn next_subset(s: &mut [u32], n: u32) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - (k - i) as u32 {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All subspaces whose echelon basis has the given pivot columns.
fn cell(
    ctx: &FieldCtx,
    scalars: &[Elt],
    base: Base,
    d: u32,
    pivots: &[u32],
    out: &mut Vec<Subspace>,
) {
    // free slots: (row, column) with column > pivot and not a pivot column
    let free: Vec<(usize, u32)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| {
            (p + 1..d)
                .filter(move |c| !pivots.contains(c))
                .map(move |c| (i, c))
        })
        .collect();
    let qq = scalars.len();
    let mut digits = vec![0usize; free.len()];
    loop {
        let mut basis: Vec<Elt> = pivots.iter().map(|&p| ctx.alpha_pow(p as i64)).collect();
        for (&(i, c), &dg) in free.iter().zip(&digits) {
            let term = ctx.mul(scalars[dg], ctx.alpha_pow(c as i64));
            basis[i] = ctx.add(basis[i], term);
        }
        let mut s = Subspace::zero(base);
        for &b in &basis {
            s.extend(ctx, scalars, b);
        }
        out.push(s);
        // odometer over the free entries
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            digits[pos] += 1;
            if digits[pos] < qq {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Σ_{v∈V} v^i, with 0^0 = 1.
pub fn power_sum(ctx: &FieldCtx, v: &Subspace, i: u64) -> Elt {
    let e = i as i64;
    v.elements()
        .iter()
        .fold(Elt::ZERO, |acc, &x| ctx.add(acc, ctx.pow(x, e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_gaussian_binomials() {
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        for (base, dim, want) in [
            (Base::Fq, 0, 1),
            (Base::Fq, 1, 40),
            (Base::Fq, 2, 130),
            (Base::Fq, 3, 40),
            (Base::Fq2, 1, 10),
            (Base::Fq2, 2, 1),
        ] {
            let all = enumerate_subspaces(&ctx, base, dim, 1000).unwrap();
            assert_eq!(all.len(), want, "{base:?} {dim}");
            let distinct: HashSet<Vec<Elt>> = all.iter().map(|s| s.elements().to_vec()).collect();
            assert_eq!(distinct.len(), want);
            for s in &all {
                assert_eq!(s.len() as u64, base.order(3).pow(dim));
                assert!(s.is_closed(&ctx));
            }
        }
        assert!(matches!(
            enumerate_subspaces(&ctx, Base::Fq, 2, 100),
            Err(Error::TooMany {
                count: 130,
                cap: 100
            })
        ));
    }

    #[test]
    fn fq2_lines_are_fq_planes() {
        let ctx = FieldCtx::from_q(2, 4).unwrap();
        let lines = enumerate_subspaces(&ctx, Base::Fq2, 1, 100).unwrap();
        assert_eq!(lines.len(), 5);
        let planes = enumerate_subspaces(&ctx, Base::Fq, 2, 100).unwrap();
        assert_eq!(planes.len(), 35);
        let set: HashSet<Vec<Elt>> = planes.iter().map(|s| s.elements().to_vec()).collect();
        assert!(lines.iter().all(|l| set.contains(l.elements())));
    }

    #[test]
    fn span_and_cosets() {
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        let f9 = Subspace::span(&ctx, Base::Fq, &ctx.subfield(2));
        assert_eq!((f9.dim, f9.len()), (2, 9));
        assert_eq!(f9.coset_reps(&ctx).len(), 9);
        let line = Subspace::span(&ctx, Base::Fq2, &[ctx.alpha()]);
        assert_eq!(line.len(), 9);
    }

    #[test]
    fn power_sum_small_cases() {
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        let f3 = Subspace::span(&ctx, Base::Fq, &[Elt::ONE]);
        // 0 + 1 + 2 = 0, and 1 + 1 = 2 ≠ 0 at i = 2
        assert!(power_sum(&ctx, &f3, 1).is_zero());
        assert!(!power_sum(&ctx, &f3, 2).is_zero());
    }
}
