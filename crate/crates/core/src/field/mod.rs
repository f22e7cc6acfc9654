//! Table-driven arithmetic in the tower GF(p) ⊆ GF(q) ⊆ GF(q^2) ⊆ GF(q^n), q = p^l.
//!
//! Nonzero elements of GF(q^n) are stored by their discrete logarithm to a
//! fixed primitive element α; addition goes through a Zech logarithm table.
//! Symbols of the coefficient field GF(q) get their own small tables
//! ([`FqTables`]) because codewords and matrices live over GF(q).

mod poly;
mod small;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

pub use small::FqTables;

use crate::error::{Error, Result};

/// Largest field order handled with full log/antilog tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 26;
/// Largest coefficient field; symbols are stored as `u8`.
pub const MAX_SYMBOL_FIELD: u32 = 256;

const ZERO_LOG: u32 = u32::MAX;

/// An element of GF(q^n): zero or α^k with k in [0, N).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elt(u32);

impl Elt {
    pub const ZERO: Elt = Elt(ZERO_LOG);
    pub const ONE: Elt = Elt(0);

    pub fn is_zero(self) -> bool {
        self.0 == ZERO_LOG
    }

    /// Discrete logarithm to the context's α; `None` for zero.
    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }
}

impl fmt::Debug for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(k) => write!(f, "α^{k}"),
        }
    }
}

/// Arithmetic context for GF(q^n) over GF(q), q = p^l, with n even.
pub struct FieldCtx {
    p: u32,
    l: u32,
    n: u32,
    q: u32,
    big_n: u32,
    modulus: Vec<u32>,
    /// exp[k] = vector encoding of α^k (base-p digits of the polynomial basis).
    exp: Vec<u32>,
    /// log[v] for v != 0.
    log: Vec<u32>,
    /// zech[k] = log(1 + α^k), ZERO_LOG when that sum vanishes.
    zech: Vec<u32>,
    fq: FqTables,
    sym_to_elt: Vec<Elt>,
    /// GF(q)^* = {γ^j}, γ = α^{N/(q-1)}; subfield_sym[j] is the symbol of γ^j.
    subfield_sym: Vec<u8>,
    coords: OnceLock<Vec<u8>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldCtx({})", self.descriptor())
    }
}

/// Summary printed by `field info`.
#[derive(Debug, Clone, Serialize)]
pub struct FieldInfo {
    pub p: u32,
    pub l: u32,
    pub n: u32,
    pub q: u32,
    pub order: u64,
    pub big_n: u32,
    pub modulus: Vec<u32>,
    pub descriptor: String,
}

impl FieldCtx {
    /// Builds GF((p^l)^n). Without an explicit modulus the Conway polynomial of
    /// degree l·n is used when tabulated, otherwise the least primitive
    /// polynomial in lexicographic order of (c_{d-1}, ..., c_0).
    pub fn new(p: u32, l: u32, n: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if l == 0 {
            return Err(Error::RangeError("l must be positive".into()));
        }
        if n == 0 || n % 2 == 1 {
            return Err(Error::OddExtension(n));
        }
        let q = (p as u64)
            .checked_pow(l)
            .ok_or(Error::FieldTooLarge(u64::MAX))?;
        let order = q.checked_pow(n).unwrap_or(u64::MAX);
        if order > MAX_FIELD_ORDER || q > MAX_SYMBOL_FIELD as u64 {
            return Err(Error::FieldTooLarge(order));
        }
        let q = q as u32;
        let deg = (l * n) as usize;

        let modulus = match modulus {
            Some(mut f) => {
                poly::trim(&mut f);
                for c in f.iter_mut() {
                    *c %= p;
                }
                poly::trim(&mut f);
                let got = poly::degree(&f).unwrap_or(0);
                if f.len() != deg + 1 {
                    return Err(Error::BadModulus { expected: deg, got });
                }
                poly::make_monic(&mut f, p);
                if !poly::is_irreducible(&f, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                f
            }
            None => match poly::conway(p, deg as u32) {
                Some(f) => f,
                None => least_primitive(p, deg),
            },
        };

        let big_n = (order - 1) as u32;
        let exp = power_cycle(&modulus, p, deg);
        if exp.len() != big_n as usize {
            return Err(Error::NonPrimitiveModulus);
        }
        let mut log = vec![ZERO_LOG; order as usize];
        for (k, &v) in exp.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        let zech = exp
            .iter()
            .map(|&v| {
                let c0 = v % p;
                let w = v - c0 + (c0 + 1) % p;
                log[w as usize]
            })
            .collect();

        let mut ctx = FieldCtx {
            p,
            l,
            n,
            q,
            big_n,
            modulus,
            exp,
            log,
            zech,
            fq: FqTables::trivial(),
            sym_to_elt: Vec::new(),
            subfield_sym: Vec::new(),
            coords: OnceLock::new(),
        };
        ctx.init_symbols();
        Ok(ctx)
    }

    /// Convenience constructor from q and n (q must be a prime power).
    pub fn from_q(q: u32, n: u32) -> Result<Self> {
        let (p, l) = prime_power(q)?;
        Self::new(p, l, n, None)
    }

    fn init_symbols(&mut self) {
        let q = self.q;
        let step = self.big_n / (q - 1);
        let gamma = Elt(step % self.big_n);
        // symbol s = Σ c_i p^i  ↦  Σ c_i γ^i
        let mut sym_to_elt = Vec::with_capacity(q as usize);
        for s in 0..q {
            let mut acc = Elt::ZERO;
            let mut rest = s;
            for i in 0..self.l {
                let c = rest % self.p;
                rest /= self.p;
                if c != 0 {
                    let term = self.mul(self.from_vector(c), self.pow(gamma, i as i64));
                    acc = self.add(acc, term);
                }
            }
            sym_to_elt.push(acc);
        }
        let mut subfield_sym = vec![0u8; (q - 1) as usize];
        for (s, e) in sym_to_elt.iter().enumerate() {
            if let Some(k) = e.log() {
                debug_assert_eq!(k % step, 0);
                subfield_sym[(k / step) as usize] = s as u8;
            }
        }
        self.sym_to_elt = sym_to_elt;
        self.subfield_sym = subfield_sym;
        let fq = FqTables::build(
            q,
            |a, b| {
                let e = self.add(self.sym_to_elt[a as usize], self.sym_to_elt[b as usize]);
                self.elt_to_sym(e).expect("subfield closed under +")
            },
            |a, b| {
                let e = self.mul(self.sym_to_elt[a as usize], self.sym_to_elt[b as usize]);
                self.elt_to_sym(e).expect("subfield closed under ×")
            },
        );
        self.fq = fq;
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn m(&self) -> u32 {
        self.n / 2
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// q^n.
    pub fn order(&self) -> u64 {
        self.big_n as u64 + 1
    }
    /// N = q^n − 1, the order of the multiplicative group.
    pub fn big_n(&self) -> u32 {
        self.big_n
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn fq(&self) -> &FqTables {
        &self.fq
    }

    /// "GF(p^l)^n/modulus-hex": the modulus digits, high degree first, one hex
    /// digit group per coefficient.
    pub fn descriptor(&self) -> String {
        let width = format!("{:x}", self.p - 1).len();
        let hex: String = self
            .modulus
            .iter()
            .rev()
            .map(|c| format!("{:0width$x}", c, width = width))
            .collect();
        format!("GF({}^{})^{}/{}", self.p, self.l, self.n, hex)
    }

    pub fn info(&self) -> FieldInfo {
        FieldInfo {
            p: self.p,
            l: self.l,
            n: self.n,
            q: self.q,
            order: self.order(),
            big_n: self.big_n,
            modulus: self.modulus.clone(),
            descriptor: self.descriptor(),
        }
    }

    pub fn alpha(&self) -> Elt {
        Elt(1 % self.big_n)
    }

    /// α^k for any integer k.
    pub fn alpha_pow(&self, k: i64) -> Elt {
        Elt(k.rem_euclid(self.big_n as i64) as u32)
    }

    /// Element with the given base-p vector encoding in the polynomial basis.
    pub fn from_vector(&self, v: u32) -> Elt {
        if v == 0 {
            Elt::ZERO
        } else {
            Elt(self.log[v as usize])
        }
    }

    pub fn to_vector(&self, a: Elt) -> u32 {
        match a.log() {
            None => 0,
            Some(k) => self.exp[k as usize],
        }
    }

    /// All q^n elements: zero first, then α^0, α^1, ...
    pub fn elements(&self) -> impl Iterator<Item = Elt> + '_ {
        std::iter::once(Elt::ZERO).chain((0..self.big_n).map(Elt))
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let (x, y) = (a.0, b.0);
        let d = if y >= x { y - x } else { y + self.big_n - x };
        let z = self.zech[d as usize];
        if z == ZERO_LOG {
            Elt::ZERO
        } else {
            Elt(((x as u64 + z as u64) % self.big_n as u64) as u32)
        }
    }

    pub fn neg(&self, a: Elt) -> Elt {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        // −1 = α^{N/2} in odd characteristic
        Elt(((a.0 as u64 + self.big_n as u64 / 2) % self.big_n as u64) as u32)
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a.is_zero() || b.is_zero() {
            return Elt::ZERO;
        }
        Elt(((a.0 as u64 + b.0 as u64) % self.big_n as u64) as u32)
    }

    pub fn inv(&self, a: Elt) -> Result<Elt> {
        match a.log() {
            None => Err(Error::DivisionByZero),
            Some(k) => Ok(Elt((self.big_n - k) % self.big_n)),
        }
    }

    pub fn div(&self, a: Elt, b: Elt) -> Result<Elt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k for any integer k; 0^0 = 1, and 0^k for k < 0 is 0.
    pub fn pow(&self, a: Elt, k: i64) -> Elt {
        match a.log() {
            None => {
                if k == 0 {
                    Elt::ONE
                } else {
                    Elt::ZERO
                }
            }
            Some(x) => {
                let e = (x as i128 * k as i128).rem_euclid(self.big_n as i128);
                Elt(e as u32)
            }
        }
    }

    /// a ↦ a^{q^power}; negative powers invert the automorphism.
    pub fn frobenius(&self, a: Elt, power: i64) -> Elt {
        let Some(x) = a.log() else {
            return Elt::ZERO;
        };
        let pw = power.rem_euclid(self.n as i64) as u32;
        let mut e = x as u64;
        for _ in 0..pw {
            e = e * self.q as u64 % self.big_n as u64;
        }
        Elt(e as u32)
    }

    /// a ∈ GF(q^degree) for degree 1 or 2.
    pub fn in_subfield(&self, a: Elt, degree: u32) -> bool {
        self.frobenius(a, degree as i64) == a
    }

    /// The subfield GF(q^degree) as a list of elements, zero first.
    pub fn subfield(&self, degree: u32) -> Vec<Elt> {
        let sub_order = (self.q as u64).pow(degree);
        let step = self.big_n as u64 / (sub_order - 1);
        std::iter::once(Elt::ZERO)
            .chain((0..sub_order - 1).map(|j| Elt((j * step) as u32)))
            .collect()
    }

    // ---- GF(q) symbols ----

    pub fn sym_to_elt(&self, s: u8) -> Elt {
        self.sym_to_elt[s as usize]
    }

    /// Symbol of a subfield element, `None` when `e ∉ GF(q)`.
    pub fn elt_to_sym(&self, e: Elt) -> Option<u8> {
        match e.log() {
            None => Some(0),
            Some(k) => {
                let step = self.big_n / (self.q - 1);
                (k % step == 0).then(|| self.subfield_sym[(k / step) as usize])
            }
        }
    }

    /// Coordinates of `a` over GF(q) in the basis 1, α, ..., α^{n−1}.
    pub fn coords(&self, a: Elt) -> &[u8] {
        let table = self.coords.get_or_init(|| self.build_coords());
        let n = self.n as usize;
        match a.log() {
            None => &ZEROS[..n],
            Some(k) => &table[k as usize * n..(k as usize + 1) * n],
        }
    }

    /// Minimal polynomial of α over GF(q), monic, as symbols (little-endian).
    pub fn alpha_min_poly(&self) -> Vec<u8> {
        // Π_{i<n} (X − α^{q^i})
        let mut coeffs = vec![Elt::ONE];
        for i in 0..self.n {
            let root = self.frobenius(self.alpha(), i as i64);
            let mut next = vec![Elt::ZERO; coeffs.len() + 1];
            for (j, &c) in coeffs.iter().enumerate() {
                next[j + 1] = self.add(next[j + 1], c);
                next[j] = self.sub(next[j], self.mul(c, root));
            }
            coeffs = next;
        }
        coeffs
            .into_iter()
            .map(|c| {
                self.elt_to_sym(c)
                    .expect("minimal polynomial lies over GF(q)")
            })
            .collect()
    }

    fn build_coords(&self) -> Vec<u8> {
        let n = self.n as usize;
        let fq = &self.fq;
        let mu = self.alpha_min_poly();
        let mut table = Vec::with_capacity(self.big_n as usize * n);
        let mut cur = vec![0u8; n];
        cur[0] = 1;
        for _ in 0..self.big_n {
            table.extend_from_slice(&cur);
            let carry = cur[n - 1];
            for i in (1..n).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if carry != 0 {
                for (i, slot) in cur.iter_mut().enumerate() {
                    *slot = fq.sub(*slot, fq.mul(carry, mu[i]));
                }
            }
        }
        debug_assert_eq!(cur[0], 1);
        table
    }
}

static ZEROS: [u8; 64] = [0u8; 64];

/// Splits q = p^l.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NonPrime(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut l = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        l += 1;
    }
    if rest != 1 {
        return Err(Error::NonPrime(q));
    }
    Ok((p, l))
}

/// Successive powers x^0, x^1, ... modulo `f` until returning to 1, as base-p
/// vector encodings. The cycle has length N exactly when x is primitive.
fn power_cycle(f: &[u32], p: u32, deg: usize) -> Vec<u32> {
    let order = (p as u64).pow(deg as u32);
    let mut out = Vec::new();
    let mut cur = vec![0u32; deg];
    cur[0] = 1;
    loop {
        let v = cur
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p as u64 + c as u64) as u32;
        if !out.is_empty() && v == 1 {
            break;
        }
        if v == 0 || out.len() as u64 >= order {
            break;
        }
        out.push(v);
        let carry = cur[deg - 1];
        for i in (1..deg).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if carry != 0 {
            for i in 0..deg {
                cur[i] = (cur[i] + p - (carry as u64 * f[i] as u64 % p as u64) as u32) % p;
            }
        }
    }
    out
}

fn least_primitive(p: u32, deg: usize) -> Vec<u32> {
    let order = (p as u64).pow(deg as u32);
    for v in 1..order {
        // c_0 must be nonzero for x to be invertible
        if v % p as u64 == 0 {
            continue;
        }
        let mut f: Vec<u32> = (0..deg)
            .map(|i| ((v / (p as u64).pow(i as u32)) % p as u64) as u32)
            .collect();
        f.push(1);
        if poly::is_irreducible(&f, p) && power_cycle(&f, p, deg).len() as u64 == order - 1 {
            return f;
        }
    }
    unreachable!("a primitive polynomial of every degree exists")
}
