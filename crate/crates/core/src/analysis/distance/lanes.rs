//! Packed vector arithmetic for the enumeration inner loop.
//!
//! GF(2) packs one bit per coordinate. GF(3) is bitsliced into two planes
//! (bit set in plane 1 means the symbol 1, in plane 2 the symbol 2). Other
//! fields keep one byte per coordinate and go through lookup tables.

use crate::field::FqTables;

pub(crate) trait Lanes: Sync + Send {
    type W: Copy + Default + Send + Sync + PartialEq;

    /// Storage words per vector.
    fn width(&self) -> usize;

    /// Packs a vector of symbols.
    fn pack(&self, symbols: &[u8], out: &mut [Self::W]);

    /// dst = a + c·row, with c a nonzero symbol.
    fn add_scaled(&self, dst: &mut [Self::W], a: &[Self::W], row: &[Self::W], c: u8);

    fn weight(&self, v: &[Self::W]) -> u32;

    /// Symbol at coordinate i.
    #[cfg(test)]
    fn get(&self, v: &[Self::W], i: usize) -> u8;
}

pub(crate) struct Binary {
    words: usize,
}

impl Binary {
    pub(crate) fn new(len: usize) -> Self {
        Binary {
            words: len.div_ceil(64).max(1),
        }
    }
}

impl Lanes for Binary {
    type W = u64;

    fn width(&self) -> usize {
        self.words
    }

    fn pack(&self, symbols: &[u8], out: &mut [u64]) {
        out.fill(0);
        for (i, &s) in symbols.iter().enumerate() {
            if s & 1 == 1 {
                out[i / 64] |= 1 << (i % 64);
            }
        }
    }

    #[inline]
    fn add_scaled(&self, dst: &mut [u64], a: &[u64], row: &[u64], _c: u8) {
        for ((d, x), y) in dst.iter_mut().zip(a).zip(row) {
            *d = x ^ y;
        }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> u32 {
        v.iter().map(|w| w.count_ones()).sum()
    }

    #[cfg(test)]
    fn get(&self, v: &[u64], i: usize) -> u8 {
        ((v[i / 64] >> (i % 64)) & 1) as u8
    }
}

pub(crate) struct Ternary {
    words: usize,
}

impl Ternary {
    pub(crate) fn new(len: usize) -> Self {
        Ternary {
            words: len.div_ceil(64).max(1),
        }
    }
}

/// (x1, x2) + (y1, y2) over GF(3), bitsliced.
#[inline(always)]
pub(crate) fn gf3_add(x1: u64, x2: u64, y1: u64, y2: u64) -> (u64, u64) {
    let t = (x1 | y2) ^ (x2 | y1);
    ((x2 | y2) ^ t, (x1 | y1) ^ t)
}

impl Lanes for Ternary {
    type W = u64;

    fn width(&self) -> usize {
        2 * self.words
    }

    fn pack(&self, symbols: &[u8], out: &mut [u64]) {
        out.fill(0);
        let w = self.words;
        for (i, &s) in symbols.iter().enumerate() {
            match s {
                1 => out[i / 64] |= 1 << (i % 64),
                2 => out[w + i / 64] |= 1 << (i % 64),
                _ => {}
            }
        }
    }

    #[inline]
    fn add_scaled(&self, dst: &mut [u64], a: &[u64], row: &[u64], c: u8) {
        let w = self.words;
        let (a1, a2) = a.split_at(w);
        let (r1, r2) = row.split_at(w);
        let (d1, d2) = dst.split_at_mut(w);
        // 2·(y1, y2) = (y2, y1)
        let (r1, r2) = if c == 2 { (r2, r1) } else { (r1, r2) };
        for i in 0..w {
            let (s1, s2) = gf3_add(a1[i], a2[i], r1[i], r2[i]);
            d1[i] = s1;
            d2[i] = s2;
        }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> u32 {
        let w = self.words;
        (0..w).map(|i| (v[i] | v[w + i]).count_ones()).sum()
    }

    #[cfg(test)]
    fn get(&self, v: &[u64], i: usize) -> u8 {
        let w = self.words;
        if (v[i / 64] >> (i % 64)) & 1 == 1 {
            1
        } else if (v[w + i / 64] >> (i % 64)) & 1 == 1 {
            2
        } else {
            0
        }
    }
}

pub(crate) struct Generic {
    len: usize,
    fq: FqTables,
}

impl Generic {
    pub(crate) fn new(len: usize, fq: &FqTables) -> Self {
        Generic {
            len: len.max(1),
            fq: fq.clone(),
        }
    }
}

impl Lanes for Generic {
    type W = u8;

    fn width(&self) -> usize {
        self.len
    }

    fn pack(&self, symbols: &[u8], out: &mut [u8]) {
        out.fill(0);
        out[..symbols.len()].copy_from_slice(symbols);
    }

    #[inline]
    fn add_scaled(&self, dst: &mut [u8], a: &[u8], row: &[u8], c: u8) {
        for ((d, &x), &y) in dst.iter_mut().zip(a).zip(row) {
            *d = self.fq.add(x, self.fq.mul(c, y));
        }
    }

    #[inline]
    fn weight(&self, v: &[u8]) -> u32 {
        v.iter().filter(|&&b| b != 0).count() as u32
    }

    #[cfg(test)]
    fn get(&self, v: &[u8], i: usize) -> u8 {
        v[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn gf3_bitslice_exhaustive() {
        let enc = |s: u8| match s {
            0 => (0u64, 0u64),
            1 => (1, 0),
            _ => (0, 1),
        };
        for x in 0..3u8 {
            for y in 0..3u8 {
                let (x1, x2) = enc(x);
                let (y1, y2) = enc(y);
                assert_eq!(gf3_add(x1, x2, y1, y2), enc((x + y) % 3), "{x}+{y}");
            }
        }
    }

    fn roundtrip<L: Lanes>(lanes: &L, q: u8, fq: &FqTables) {
        let len = 130;
        let a: Vec<u8> = (0..len).map(|i| (i * 7 % 11) as u8 % q).collect();
        let b: Vec<u8> = (0..len).map(|i| (i * 5 % 13) as u8 % q).collect();
        let mut pa = vec![L::W::default(); lanes.width()];
        let mut pb = pa.clone();
        let mut out = pa.clone();
        lanes.pack(&a, &mut pa);
        lanes.pack(&b, &mut pb);
        for c in 1..q {
            lanes.add_scaled(&mut out, &pa, &pb, c);
            let want: Vec<u8> = a
                .iter()
                .zip(&b)
                .map(|(&x, &y)| fq.add(x, fq.mul(c, y)))
                .collect();
            let got: Vec<u8> = (0..len).map(|i| lanes.get(&out, i)).collect();
            assert_eq!(got, want);
            assert_eq!(
                lanes.weight(&out) as usize,
                want.iter().filter(|&&v| v != 0).count()
            );
        }
    }

    #[test]
    fn backends_agree_with_tables() {
        let f2 = FieldCtx::from_q(2, 2).unwrap();
        roundtrip(&Binary::new(130), 2, f2.fq());
        let f3 = FieldCtx::from_q(3, 2).unwrap();
        roundtrip(&Ternary::new(130), 3, f3.fq());
        roundtrip(&Generic::new(130, f3.fq()), 3, f3.fq());
        let f4 = FieldCtx::from_q(4, 2).unwrap();
        roundtrip(&Generic::new(130, f4.fq()), 4, f4.fq());
    }
}
