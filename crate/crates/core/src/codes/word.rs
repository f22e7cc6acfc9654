//! Codewords and the group-algebra operations on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elt, FieldCtx};

/// Punctured words have length N; extended words append the position labelled
/// by the field element 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Punctured,
    Extended,
}

impl Kind {
    pub fn length(self, big_n: u32) -> usize {
        match self {
            Kind::Punctured => big_n as usize,
            Kind::Extended => big_n as usize + 1,
        }
    }
}

/// A vector over GF(q). Position j < N carries α^j; in extended words
/// position N carries the element 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    symbols: Vec<u8>,
}

impl Codeword {
    pub fn new(symbols: Vec<u8>) -> Self {
        Codeword { symbols }
    }

    pub fn zero(len: usize) -> Self {
        Codeword {
            symbols: vec![0; len],
        }
    }

    /// Single symbol `value` at position `pos`.
    pub fn unit(len: usize, pos: usize, value: u8) -> Self {
        let mut w = Codeword::zero(len);
        w.symbols[pos] = value;
        w
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }
    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }
    pub fn len(&self) -> usize {
        self.symbols.len()
    }
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|&&v| v != 0).count()
    }
    pub fn is_zero(&self) -> bool {
        self.symbols.iter().all(|&v| v == 0)
    }
    pub fn support(&self) -> Vec<usize> {
        (0..self.symbols.len())
            .filter(|&i| self.symbols[i] != 0)
            .collect()
    }

    /// Symbols as one character each (base 36); wider alphabets use '.'-separated decimals.
    pub fn to_digit_string(&self, q: u32) -> String {
        if q <= 36 {
            self.symbols
                .iter()
                .map(|&v| std::char::from_digit(v as u32, 36).unwrap())
                .collect()
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|v| v.to_string()).collect();
            parts.join(".")
        }
    }

    pub fn from_digit_string(s: &str, q: u32) -> Result<Self> {
        let parse_err = || Error::RangeError(format!("bad digit string for q = {q}"));
        let symbols: Vec<u8> = if q <= 36 {
            s.chars()
                .map(|c| c.to_digit(36).filter(|&d| d < q).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(parse_err)?
        } else {
            s.split('.')
                .map(|t| t.parse::<u32>().ok().filter(|&d| d < q).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(parse_err)?
        };
        Ok(Codeword { symbols })
    }
}

/// Field element attached to a coordinate.
pub fn position_element(ctx: &FieldCtx, pos: usize) -> Elt {
    if pos == ctx.big_n() as usize {
        Elt::ZERO
    } else {
        ctx.alpha_pow(pos as i64)
    }
}

/// Coordinate carrying a field element (extended indexing).
pub fn element_position(ctx: &FieldCtx, e: Elt) -> usize {
    match e.log() {
        None => ctx.big_n() as usize,
        Some(k) => k as usize,
    }
}

fn kind_of(ctx: &FieldCtx, x: &Codeword) -> Result<Kind> {
    let n = ctx.big_n() as usize;
    match x.len() {
        l if l == n => Ok(Kind::Punctured),
        l if l == n + 1 => Ok(Kind::Extended),
        l => Err(Error::LengthMismatch {
            expected: n,
            got: l,
        }),
    }
}

/// ρ_s(x) = Σ x_g g^s with 0^0 = 1. For punctured words ρ_s = ρ_{s mod N};
/// for extended words s = 0 and s = N differ by the contribution of position 0.
pub fn rho(ctx: &FieldCtx, x: &Codeword, s: u64) -> Result<Elt> {
    let kind = kind_of(ctx, x)?;
    let big_n = ctx.big_n() as u64;
    let sm = s % big_n;
    let mut acc = Elt::ZERO;
    for (j, &v) in x.symbols()[..big_n as usize].iter().enumerate() {
        if v != 0 {
            let term = ctx.mul(
                ctx.sym_to_elt(v),
                ctx.alpha_pow((j as u64 * sm % big_n) as i64),
            );
            acc = ctx.add(acc, term);
        }
    }
    if kind == Kind::Extended && s == 0 {
        acc = ctx.add(acc, ctx.sym_to_elt(x.symbols()[big_n as usize]));
    }
    Ok(acc)
}

/// Appends x_0 = −Σ x_g.
pub fn extend(ctx: &FieldCtx, x: &Codeword) -> Result<Codeword> {
    if kind_of(ctx, x)? != Kind::Punctured {
        return Err(Error::LengthMismatch {
            expected: ctx.big_n() as usize,
            got: x.len(),
        });
    }
    let fq = ctx.fq();
    let sum = x.symbols().iter().fold(0u8, |a, &b| fq.add(a, b));
    let mut symbols = x.symbols().to_vec();
    symbols.push(fq.neg(sum));
    Ok(Codeword::new(symbols))
}

/// Drops position 0.
pub fn puncture(ctx: &FieldCtx, x: &Codeword) -> Result<Codeword> {
    if kind_of(ctx, x)? != Kind::Extended {
        return Err(Error::LengthMismatch {
            expected: ctx.big_n() as usize + 1,
            got: x.len(),
        });
    }
    Ok(Codeword::new(x.symbols()[..ctx.big_n() as usize].to_vec()))
}

/// The coordinate map g ↦ ug + v on extended positions.
pub fn affine_map(ctx: &FieldCtx, u: Elt, v: Elt) -> Result<Vec<usize>> {
    if u.is_zero() {
        return Err(Error::ZeroScale);
    }
    Ok((0..=ctx.big_n() as usize)
        .map(|pos| {
            let g = position_element(ctx, pos);
            element_position(ctx, ctx.add(ctx.mul(u, g), v))
        })
        .collect())
}

/// σ_{u,v}: Σ x_g (g) ↦ Σ x_g (ug + v).
pub fn affine_perm(ctx: &FieldCtx, x: &Codeword, u: Elt, v: Elt) -> Result<Codeword> {
    if kind_of(ctx, x)? != Kind::Extended {
        return Err(Error::LengthMismatch {
            expected: ctx.big_n() as usize + 1,
            got: x.len(),
        });
    }
    let map = affine_map(ctx, u, v)?;
    Ok(permute(x, &map))
}

/// y[map[i]] = x[i].
pub fn permute(x: &Codeword, map: &[usize]) -> Codeword {
    let mut out = vec![0u8; x.len()];
    for (i, &v) in x.symbols().iter().enumerate() {
        out[map[i]] = v;
    }
    Codeword::new(out)
}

/// Cyclic shift by `k` on a punctured word: x_{α^j} moves to α^{j+k}.
pub fn cyclic_shift(x: &Codeword, k: usize) -> Codeword {
    let n = x.len();
    let mut out = vec![0u8; n];
    for (j, &v) in x.symbols().iter().enumerate() {
        out[(j + k) % n] = v;
    }
    Codeword::new(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algebra {
    /// F_q[F_{q^n}^*], multiplicative convolution on punctured words.
    M,
    /// F_q[F_{q^n}], additive convolution on extended words.
    A,
}

pub fn algebra_mul(ctx: &FieldCtx, x: &Codeword, y: &Codeword, alg: Algebra) -> Result<Codeword> {
    let big_n = ctx.big_n() as usize;
    let len = match alg {
        Algebra::M => big_n,
        Algebra::A => big_n + 1,
    };
    for w in [x, y] {
        if w.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                got: w.len(),
            });
        }
    }
    let fq = ctx.fq();
    let mut out = vec![0u8; len];
    let xs = x.support();
    let ys = y.support();
    for &i in &xs {
        for &j in &ys {
            let pos = match alg {
                Algebra::M => (i + j) % big_n,
                Algebra::A => element_position(
                    ctx,
                    ctx.add(position_element(ctx, i), position_element(ctx, j)),
                ),
            };
            out[pos] = fq.add(out[pos], fq.mul(x.symbols()[i], y.symbols()[j]));
        }
    }
    Ok(Codeword::new(out))
}

/// Unit of the algebra: (α^0) in M, (0) in A.
pub fn algebra_unit(ctx: &FieldCtx, alg: Algebra) -> Codeword {
    let big_n = ctx.big_n() as usize;
    match alg {
        Algebra::M => Codeword::unit(big_n, 0, 1),
        Algebra::A => Codeword::unit(big_n + 1, big_n, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf81() -> FieldCtx {
        FieldCtx::from_q(3, 4).unwrap()
    }

    #[test]
    fn rho_of_alpha_zero() {
        let ctx = gf81();
        let x = Codeword::unit(80, 0, 1);
        for s in [0, 1, 7, 80, 161] {
            assert_eq!(rho(&ctx, &x, s).unwrap(), Elt::ONE);
        }
    }

    #[test]
    fn extension_kills_rho_zero() {
        let ctx = gf81();
        let x = Codeword::new((0..80).map(|j| (j * 7 % 3) as u8).collect());
        let e = extend(&ctx, &x).unwrap();
        assert_eq!(rho(&ctx, &e, 0).unwrap(), Elt::ZERO);
        assert_eq!(puncture(&ctx, &e).unwrap(), x);
    }

    #[test]
    fn all_ones_extension() {
        let ctx = gf81();
        let ones = Codeword::new(vec![1; 80]);
        let e = extend(&ctx, &ones).unwrap();
        assert_eq!(e.symbols()[80], 1);
        assert_eq!(e.weight(), 81);
        let z = extend(&ctx, &Codeword::zero(80)).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn subfield_indicator() {
        let ctx = gf81();
        // F_9^* = {α^{10 j}}
        let mut v = vec![0u8; 80];
        for j in 0..8 {
            v[10 * j] = 1;
        }
        let x = Codeword::new(v);
        assert_eq!(rho(&ctx, &x, 5).unwrap(), Elt::ZERO);
        let e = extend(&ctx, &x).unwrap();
        assert_eq!(e.symbols()[80], 1);
        assert_eq!(e.weight(), 9);
    }

    #[test]
    fn affine_identity_and_shift() {
        let ctx = gf81();
        let x = extend(
            &ctx,
            &Codeword::new((0..80).map(|j| (j % 3) as u8).collect()),
        )
        .unwrap();
        assert_eq!(affine_perm(&ctx, &x, Elt::ONE, Elt::ZERO).unwrap(), x);
        let shifted = affine_perm(&ctx, &x, ctx.alpha(), Elt::ZERO).unwrap();
        let p = puncture(&ctx, &x).unwrap();
        assert_eq!(puncture(&ctx, &shifted).unwrap(), cyclic_shift(&p, 1));
        assert!(matches!(
            affine_perm(&ctx, &x, Elt::ZERO, Elt::ONE),
            Err(Error::ZeroScale)
        ));
    }

    #[test]
    fn algebra_units_and_monomials() {
        let ctx = FieldCtx::from_q(2, 4).unwrap();
        let a = Codeword::unit(15, 3, 1);
        let b = Codeword::unit(15, 14, 1);
        assert_eq!(
            algebra_mul(&ctx, &a, &b, Algebra::M).unwrap(),
            Codeword::unit(15, 2, 1)
        );
        for alg in [Algebra::M, Algebra::A] {
            let len = if alg == Algebra::M { 15 } else { 16 };
            let x = Codeword::new((0..len).map(|j| (j * j % 5 % 2) as u8).collect());
            let u = algebra_unit(&ctx, alg);
            assert_eq!(algebra_mul(&ctx, &x, &u, alg).unwrap(), x);
        }
        assert!(algebra_mul(&ctx, &a, &Codeword::zero(16), Algebra::M).is_err());
    }

    #[test]
    fn digit_strings() {
        let w = Codeword::new(vec![0, 1, 2, 3]);
        assert_eq!(w.to_digit_string(4), "0123");
        assert_eq!(Codeword::from_digit_string("0123", 4).unwrap(), w);
        assert!(Codeword::from_digit_string("0123", 3).is_err());
    }

    proptest! {
        #[test]
        fn algebra_laws(xs in proptest::collection::vec(0u8..3, 81),
                        ys in proptest::collection::vec(0u8..3, 81),
                        zs in proptest::collection::vec(0u8..3, 81)) {
            let ctx = gf81();
            for alg in [Algebra::M, Algebra::A] {
                let len = if alg == Algebra::M { 80 } else { 81 };
                let x = Codeword::new(xs[..len].to_vec());
                let y = Codeword::new(ys[..len].to_vec());
                let z = Codeword::new(zs[..len].to_vec());
                let xy = algebra_mul(&ctx, &x, &y, alg).unwrap();
                prop_assert_eq!(&xy, &algebra_mul(&ctx, &y, &x, alg).unwrap());
                prop_assert_eq!(
                    algebra_mul(&ctx, &xy, &z, alg).unwrap(),
                    algebra_mul(&ctx, &x, &algebra_mul(&ctx, &y, &z, alg).unwrap(), alg).unwrap()
                );
            }
        }

        #[test]
        fn affine_maps_are_permutations(u in 0u32..80, v in 0u32..81) {
            let ctx = gf81();
            let map = affine_map(&ctx, ctx.alpha_pow(u as i64), position_element(&ctx, v as usize)).unwrap();
            let mut seen = map.clone();
            seen.sort();
            prop_assert_eq!(seen, (0..81).collect::<Vec<_>>());
        }
    }
}
