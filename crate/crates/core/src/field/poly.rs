//! Dense polynomials over a prime field GF(p), little-endian coefficient vectors.
//!
//! Only what modulus selection needs: reduction, modular powering, gcd and a
//! Rabin irreducibility test.

pub(crate) type Poly = Vec<u32>;

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(d);
            while v.is_multiple_of(d) {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat.
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut base = a as u64 % p as u64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

pub(crate) fn trim(f: &mut Poly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

pub(crate) fn degree(f: &[u32]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub(crate) fn make_monic(f: &mut Poly, p: u32) {
    trim(f);
    if let Some(&lead) = f.last() {
        let inv = inv_mod(lead, p) as u64;
        for c in f.iter_mut() {
            *c = (*c as u64 * inv % p as u64) as u32;
        }
    }
}

/// Remainder of `a` modulo monic `m`.
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = lead * c as u64 % p as u64;
            let slot = &mut r[shift + i];
            *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Poly = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

pub(crate) fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Poly {
    rem(&mul(a, b, p), m, p)
}

/// `base^(p^k) mod m`, via k successive p-th powers.
pub(crate) fn frobenius_pow(base: &[u32], k: u32, m: &[u32], p: u32) -> Poly {
    let mut acc = rem(base, m, p);
    for _ in 0..k {
        acc = powmod(&acc, p as u64, m, p);
    }
    acc
}

pub(crate) fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let len = a.len().max(b.len());
    let mut out: Poly = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        make_monic(&mut y, p);
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&mut x, p);
    x
}

/// Rabin's test for a monic polynomial of degree >= 1.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = match degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let x: Poly = vec![0, 1];
    let full = frobenius_pow(&x, d as u32, f, p);
    if sub(&full, &rem(&x, f, p), p) != Vec::<u32>::new() {
        return false;
    }
    for r in prime_factors(d as u64) {
        let h = frobenius_pow(&x, (d as u64 / r) as u32, f, p);
        let g = gcd(f, &sub(&h, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Conway polynomials (little-endian, monic) for the small fields this crate
/// meets in practice. Each entry is re-checked for primitivity and subfield
/// compatibility by the test suite.
pub(crate) const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 4, &[3, 4, 5, 0, 1]),
];

pub(crate) fn conway(p: u32, degree: u32) -> Option<Poly> {
    CONWAY
        .iter()
        .find(|(cp, cd, _)| *cp == p && *cd == degree)
        .map(|(_, _, c)| c.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&v| is_prime(v)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn rabin_small_cases() {
        // x^2 + 1 over GF(3) is irreducible, over GF(2) and GF(5) it is not.
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^4 + x^2 + 1 = (x^2+x+1)^2 over GF(2).
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(gcd(&[1, 1], &[1, 0, 1], 3), vec![1]);
        // x^2 - 1 = (x - 1)(x + 1) over GF(3)
        assert_eq!(gcd(&[2, 0, 1], &[1, 1], 3), vec![1, 1]);
    }
}
