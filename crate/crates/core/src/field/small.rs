/// Addition and multiplication tables of GF(q) on symbols 0..q−1.
///
/// Symbol 0 is zero and symbol 1 is one; for prime q the symbol is the
/// residue itself.
#[derive(Debug, Clone)]
pub struct FqTables {
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FqTables {
    pub(crate) fn trivial() -> Self {
        FqTables {
            q: 0,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        }
    }

    pub(crate) fn build(q: u32, add: impl Fn(u8, u8) -> u8, mul: impl Fn(u8, u8) -> u8) -> Self {
        let qs = q as usize;
        let mut t = FqTables {
            q,
            add: vec![0; qs * qs],
            mul: vec![0; qs * qs],
            neg: vec![0; qs],
            inv: vec![0; qs],
        };
        for a in 0..qs {
            for b in 0..qs {
                let s = add(a as u8, b as u8);
                let m = mul(a as u8, b as u8);
                t.add[a * qs + b] = s;
                t.mul[a * qs + b] = m;
                if s == 0 {
                    t.neg[a] = b as u8;
                }
                if m == 1 {
                    t.inv[a] = b as u8;
                }
            }
        }
        t
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero symbol; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// Nonzero symbols 1..q−1.
    pub fn units(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }
}

#[cfg(test)]
mod tests {
    use crate::field::FieldCtx;

    #[test]
    fn prime_field_symbols_are_residues() {
        let f = FieldCtx::new(3, 1, 4, None).unwrap();
        let t = f.fq();
        for a in 0..3u8 {
            for b in 0..3u8 {
                assert_eq!(t.add(a, b), (a + b) % 3);
                assert_eq!(t.mul(a, b), (a * b) % 3);
            }
        }
        assert_eq!(t.inv(2), 2);
        assert_eq!(t.neg(1), 2);
    }

    #[test]
    fn field_axioms_gf4() {
        let f = FieldCtx::new(2, 2, 2, None).unwrap();
        let t = f.fq();
        for a in 0..4u8 {
            assert_eq!(t.add(a, t.neg(a)), 0);
            if a != 0 {
                assert_eq!(t.mul(a, t.inv(a)), 1);
            }
            for b in 0..4u8 {
                for c in 0..4u8 {
                    assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
                }
            }
        }
    }
}
