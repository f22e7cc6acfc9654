//! Combinatorics on exponents u ∈ [0, q^n − 1].
//!
//! Everything here is modulus-independent: sets hold integers, and the zero
//! set {α^u} is only materialised at display boundaries. Membership of Z_r and
//! Θ^{(r)}_k is decided by digit scans; the closed-form counts are kept as
//! separate functions so each can be checked against the other.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Base-q digit arithmetic for exponents of GF(q^n), n = 2m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentSpace {
    q: u32,
    n: u32,
    big_n: u32,
}

impl ExponentSpace {
    pub fn new(q: u32, n: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::RangeError(format!("q = {q} must be at least 2")));
        }
        if n == 0 || n % 2 == 1 {
            return Err(Error::OddExtension(n));
        }
        let order = (q as u64)
            .checked_pow(n)
            .filter(|&o| o <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge(u64::MAX))?;
        Ok(ExponentSpace {
            q,
            n,
            big_n: (order - 1) as u32,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn m(&self) -> u32 {
        self.n / 2
    }
    /// N = q^n − 1.
    pub fn big_n(&self) -> u32 {
        self.big_n
    }
    /// n(q − 1), the largest q-weight.
    pub fn max_weight(&self) -> u32 {
        self.n * (self.q - 1)
    }

    fn check(&self, u: u32) -> Result<()> {
        if u > self.big_n {
            return Err(Error::OutOfRange {
                value: u as u64,
                max: self.big_n as u64,
            });
        }
        Ok(())
    }

    /// The n base-q digits of u, least significant first.
    pub fn digits(&self, u: u32) -> Result<Vec<u32>> {
        self.check(u)?;
        Ok(self.digits_unchecked(u).collect())
    }

    fn digits_unchecked(&self, mut u: u32) -> impl Iterator<Item = u32> + '_ {
        (0..self.n).map(move |_| {
            let d = u % self.q;
            u /= self.q;
            d
        })
    }

    /// q-weight: the base-q digit sum.
    pub fn wt(&self, u: u32) -> Result<u32> {
        self.check(u)?;
        Ok(self.wt_unchecked(u))
    }

    /// Sum of digits at odd positions.
    pub fn odd_sum(&self, u: u32) -> Result<u32> {
        self.check(u)?;
        Ok(self.odd_even(u).0)
    }

    /// Sum of digits at even positions.
    pub fn even_sum(&self, u: u32) -> Result<u32> {
        self.check(u)?;
        Ok(self.odd_even(u).1)
    }

    /// |O(u) − E(u)|.
    pub fn imbalance(&self, u: u32) -> Result<u32> {
        self.check(u)?;
        let (o, e) = self.odd_even(u);
        Ok(o.abs_diff(e))
    }

    pub(crate) fn wt_unchecked(&self, u: u32) -> u32 {
        self.digits_unchecked(u).sum()
    }

    pub(crate) fn odd_even(&self, u: u32) -> (u32, u32) {
        let mut o = 0;
        let mut e = 0;
        for (i, d) in self.digits_unchecked(u).enumerate() {
            if i % 2 == 1 {
                o += d;
            } else {
                e += d;
            }
        }
        (o, e)
    }

    /// s ⪯ t: every base-q digit of s is at most the matching digit of t.
    pub fn preceq(&self, s: u32, t: u32) -> bool {
        self.digits_unchecked(s)
            .zip(self.digits_unchecked(t))
            .all(|(a, b)| a <= b)
    }

    /// The orbit of u under s ↦ q·s mod N.
    pub fn cyclotomic_coset(&self, u: u32) -> Result<ExponentSet> {
        if u >= self.big_n {
            return Err(Error::OutOfRange {
                value: u as u64,
                max: self.big_n as u64 - 1,
            });
        }
        Ok(ExponentSet::from_iter(self.big_n, false, self.orbit(u)))
    }

    /// Orbit in visiting order u, qu, q^2u, ...
    pub fn orbit(&self, u: u32) -> Vec<u32> {
        let mut out = vec![u];
        let mut cur = self.times_q(u);
        while cur != u {
            out.push(cur);
            cur = self.times_q(cur);
        }
        out
    }

    pub(crate) fn times_q(&self, u: u32) -> u32 {
        (u as u64 * self.q as u64 % self.big_n as u64) as u32
    }

    /// M_r: even k (r even) or odd k (r odd) in [0, m(q−1)].
    pub fn parity_class(&self, r: i64) -> Vec<u32> {
        let top = self.m() * (self.q - 1);
        let parity = r.rem_euclid(2) as u32;
        (0..=top).filter(|k| k % 2 == parity).collect()
    }

    /// Exponents u ∈ (0, N] with wt_q(u) ≤ n(q−1) − r − 1, for −1 ≤ r < n(q−1).
    ///
    /// u = N stands for α^N = α^0 and is stored as 0 (it only occurs for r = −1).
    pub fn zr(&self, r: i64) -> Result<ExponentSet> {
        let top = self.max_weight() as i64;
        if r < -1 || r >= top {
            return Err(Error::RangeError(format!(
                "Z_r needs -1 <= r < {top}, got r = {r}"
            )));
        }
        let bound = top - r - 1;
        Ok(self.punctured_filter(false, |u| (self.wt_unchecked(u) as i64) <= bound))
    }

    /// Θ^{(r)}_k: wt_q(u) = n(q−1) − r and |O(u) − E(u)| = k, u ∈ [0, q^n − 1].
    /// Empty when k has the wrong parity. Both u = 0 (r = n(q−1)) and
    /// u = q^n − 1 (r = 0) name α^0 and are stored as 0.
    pub fn theta(&self, r: i64, k: u32) -> Result<ExponentSet> {
        let top = self.max_weight() as i64;
        if r < 0 || r > top {
            return Err(Error::RangeError(format!(
                "Θ^(r) needs 0 <= r <= {top}, got r = {r}"
            )));
        }
        let target = (top - r) as u32;
        Ok(self.punctured_filter(true, |u| {
            self.wt_unchecked(u) == target && {
                let (o, e) = self.odd_even(u);
                o.abs_diff(e) == k
            }
        }))
    }

    /// Z_{r,I} = Z_{r−1} \ ∪_{k∈I} Θ^{(r)}_k, checked against
    /// Z_r ∪ ∪_{k∈Ī} Θ^{(r)}_k.
    pub fn zri(&self, r: i64, i_set: &[u32]) -> Result<ExponentSet> {
        let top = self.max_weight() as i64;
        if r < 0 || r >= top {
            return Err(Error::RangeError(format!(
                "Z_(r,I) needs 0 <= r < {top}, got r = {r}"
            )));
        }
        let m_r = self.parity_class(r);
        self.check_selector(r, i_set)?;

        let mut removed = Vec::new();
        for &k in i_set {
            removed.extend(self.theta(r, k)?.iter());
        }
        let removed = ExponentSet::from_iter(self.big_n, false, removed);
        let first = self.zr(r - 1)?.difference(&removed);

        let mut second = self.zr(r)?;
        for k in m_r.iter().filter(|k| !i_set.contains(k)) {
            second = second.union(&self.theta(r, *k)?);
        }
        if first != second {
            return Err(Error::Inconsistent(format!(
                "the two descriptions of Z_({r},{i_set:?}) differ"
            )));
        }
        Ok(first)
    }

    pub(crate) fn check_selector(&self, r: i64, i_set: &[u32]) -> Result<()> {
        let m_r = self.parity_class(r);
        if i_set.iter().any(|k| !m_r.contains(k)) {
            return Err(Error::InvalidI {
                i: i_set.to_vec(),
                m: m_r,
            });
        }
        Ok(())
    }

    /// Complement Ī = M_r \ I, sorted.
    pub fn complement(&self, r: i64, i_set: &[u32]) -> Vec<u32> {
        self.parity_class(r)
            .into_iter()
            .filter(|k| !i_set.contains(k))
            .collect()
    }

    /// Exponents in (0, N] (or [0, N] with `with_zero`) satisfying `pred`,
    /// folded to [0, N − 1] since α^0 = α^N.
    fn punctured_filter(&self, with_zero: bool, pred: impl Fn(u32) -> bool) -> ExponentSet {
        let mut out: Vec<u32> = (1..self.big_n).filter(|&u| pred(u)).collect();
        if pred(self.big_n) || (with_zero && pred(0)) {
            out.insert(0, 0);
        }
        ExponentSet::from_sorted(self.big_n, false, out)
    }

    /// Δ(T) = ∪_{t∈T} {s : s ⪯ t} over [0, q^n − 1].
    pub fn delta_closure(&self, t: &ExponentSet) -> ExponentSet {
        let mut mark = vec![false; self.big_n as usize + 1];
        for u in t.iter() {
            mark[u as usize] = true;
        }
        // downward closure, one digit decrement at a time, scanning high to low
        for u in (0..=self.big_n).rev() {
            if !mark[u as usize] {
                continue;
            }
            let mut pw = 1u32;
            for _ in 0..self.n {
                if !(u / pw).is_multiple_of(self.q) {
                    mark[(u - pw) as usize] = true;
                }
                pw = pw.wrapping_mul(self.q);
            }
        }
        let elems = (0..=self.big_n).filter(|&u| mark[u as usize]).collect();
        ExponentSet::from_sorted(self.big_n, true, elems)
    }

    pub fn is_delta_closed(&self, t: &ExponentSet) -> bool {
        let closed = self.delta_closure(t);
        closed.as_slice() == t.as_slice()
    }

    /// |Θ^{(r)}_k| by inclusion–exclusion over the even and odd digit halves.
    pub fn count_theta(&self, r: i64, k: u32) -> u128 {
        let top = self.max_weight() as i64;
        if r < 0 || r > top || (k as i64 + r) % 2 != 0 {
            return 0;
        }
        let total = top - r;
        let lo = total - k as i64;
        let hi = total + k as i64;
        if lo < 0 {
            return 0;
        }
        let a = bounded_compositions(lo / 2, self.m() as i64, self.q as i64);
        let b = bounded_compositions(hi / 2, self.m() as i64, self.q as i64);
        let prod = a * b;
        let count = if k == 0 { prod } else { 2 * prod };
        count.max(0) as u128
    }

    /// dim R_q(r, n) = Σ_i (−1)^i C(n, i) C(r − iq + n, r − iq), with
    /// dim R_q(−1, n) = 0.
    pub fn dim_rm(&self, r: i64) -> Result<u128> {
        let top = self.max_weight() as i64;
        if r < -1 || r > top {
            return Err(Error::RangeError(format!(
                "dim R_q(r,n) needs -1 <= r <= {top}, got {r}"
            )));
        }
        if r == -1 {
            return Ok(0);
        }
        let n = self.n as i64;
        let q = self.q as i64;
        let mut acc: i128 = 0;
        for i in 0..=n {
            let term = binom(n, i) * binom(r - i * q + n, r - i * q);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc as u128)
    }

    /// dim C_q(r, I, n) = dim R_q(r, n) − Σ_{k∈Ī} |Θ^{(r)}_k|.
    pub fn dim_sandwich(&self, r: i64, i_set: &[u32]) -> Result<u128> {
        let top = self.max_weight() as i64;
        if r < 0 || r > top {
            return Err(Error::RangeError(format!(
                "dim C_q(r,I,n) needs 0 <= r <= {top}, got {r}"
            )));
        }
        self.check_selector(r, i_set)?;
        let full = self.dim_rm(r)?;
        let removed: u128 = self
            .complement(r, i_set)
            .into_iter()
            .map(|k| self.count_theta(r, k))
            .sum();
        Ok(full - removed)
    }
}

/// Number of ways to write `total` as an ordered sum of `parts` digits in
/// [0, q − 1], by inclusion–exclusion.
fn bounded_compositions(total: i64, parts: i64, q: i64) -> i128 {
    let mut acc: i128 = 0;
    for i in 0..=parts {
        let top = total - i * q;
        let term = binom(parts, i) * binom(top + parts - 1, top);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Binomial coefficient with C(a, b) = 0 whenever a < 0, b < 0 or b > a.
pub fn binom(a: i64, b: i64) -> i128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// A sorted set of exponents.
///
/// Punctured sets live in [0, N − 1] (0 meaning α^0). Extended defining sets
/// live in [0, N]: 0 is the constraint on all q^n coordinates (0^0 = 1) and
/// N stands for α^0 on the nonzero coordinates only.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(from = "Vec<u32>")]
pub struct ExponentSet {
    #[serde(skip)]
    modulus: u32,
    #[serde(skip)]
    extended: bool,
    elems: Vec<u32>,
}

impl From<Vec<u32>> for ExponentSet {
    fn from(mut v: Vec<u32>) -> Self {
        v.sort_unstable();
        v.dedup();
        ExponentSet {
            modulus: 0,
            extended: false,
            elems: v,
        }
    }
}

impl Serialize for ExponentSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

impl ExponentSet {
    pub fn empty(modulus: u32, extended: bool) -> Self {
        ExponentSet {
            modulus,
            extended,
            elems: Vec::new(),
        }
    }

    pub fn from_iter(modulus: u32, extended: bool, it: impl IntoIterator<Item = u32>) -> Self {
        let mut elems: Vec<u32> = it.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        ExponentSet {
            modulus,
            extended,
            elems,
        }
    }

    fn from_sorted(modulus: u32, extended: bool, elems: Vec<u32>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        ExponentSet {
            modulus,
            extended,
            elems,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
    pub fn contains(&self, u: u32) -> bool {
        self.elems.binary_search(&u).is_ok()
    }
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.elems.iter().copied()
    }
    pub fn as_slice(&self) -> &[u32] {
        &self.elems
    }
    pub fn modulus(&self) -> u32 {
        self.modulus
    }
    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn union(&self, other: &ExponentSet) -> ExponentSet {
        ExponentSet::from_iter(self.modulus, self.extended, self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &ExponentSet) -> ExponentSet {
        let elems = self.iter().filter(|&u| !other.contains(u)).collect();
        ExponentSet::from_sorted(self.modulus, self.extended, elems)
    }

    pub fn is_subset(&self, other: &ExponentSet) -> bool {
        self.iter().all(|u| other.contains(u))
    }

    /// s ∈ T ⇒ q·s mod N ∈ T (N itself and 0 are fixed points).
    pub fn is_q_closed(&self, q: u32) -> bool {
        let n = self.modulus as u64;
        self.iter().all(|s| {
            if s == 0 || s as u64 == n {
                return true;
            }
            self.contains((s as u64 * q as u64 % n) as u32)
        })
    }

    /// Extended defining set {0} ∪ T with α^0 written as N.
    pub fn to_extended(&self) -> ExponentSet {
        if self.extended {
            return self.clone();
        }
        let n = self.modulus;
        ExponentSet::from_iter(
            n,
            true,
            std::iter::once(0).chain(self.iter().map(|u| if u == 0 { n } else { u })),
        )
    }

    /// Punctured defining set: drops the extension index 0, maps N back to 0.
    pub fn to_punctured(&self) -> ExponentSet {
        if !self.extended {
            return self.clone();
        }
        let n = self.modulus;
        ExponentSet::from_iter(
            n,
            false,
            self.iter()
                .filter(|&u| u != 0)
                .map(|u| if u == n { 0 } else { u }),
        )
    }
}

/// The pair (r, I) selecting a sandwiched code; M_r is derived from r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParitySelector {
    pub r: i64,
    #[serde(rename = "I")]
    pub i: Vec<u32>,
}

impl ParitySelector {
    pub fn new(r: i64, mut i: Vec<u32>) -> Self {
        i.sort_unstable();
        i.dedup();
        ParitySelector { r, i }
    }

    pub fn m_r(&self, space: &ExponentSpace) -> Vec<u32> {
        space.parity_class(self.r)
    }

    pub fn complement(&self, space: &ExponentSpace) -> Vec<u32> {
        space.complement(self.r, &self.i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s34() -> ExponentSpace {
        ExponentSpace::new(3, 4).unwrap()
    }

    #[test]
    fn digit_statistics() {
        let s = s34();
        assert_eq!(s.digits(11).unwrap(), vec![2, 0, 1, 0]);
        assert_eq!(s.wt(11).unwrap(), 3);
        assert_eq!(s.even_sum(11).unwrap(), 3);
        assert_eq!(s.odd_sum(11).unwrap(), 0);
        assert_eq!(s.imbalance(11).unwrap(), 3);
        assert_eq!(s.wt(0).unwrap(), 0);
        assert_eq!(s.odd_sum(0).unwrap(), 0);
        assert_eq!(s.digits(69).unwrap(), vec![0, 2, 1, 2]);
        assert_eq!(s.wt(69).unwrap(), 5);
        let (o, e) = s.odd_even(69);
        assert_eq!(o as i64 - e as i64, -(0i64 - 3));
        assert!(matches!(s.wt(81), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn complement_identities_exhaustive() {
        for (q, n) in [(3, 4), (2, 4), (2, 6), (4, 4), (3, 6), (9, 4)] {
            let s = ExponentSpace::new(q, n).unwrap();
            let top = s.big_n();
            for u in 0..=top {
                let v = top - u;
                assert_eq!(s.wt_unchecked(v), s.max_weight() - s.wt_unchecked(u));
                let (ou, eu) = s.odd_even(u);
                let (ov, ev) = s.odd_even(v);
                assert_eq!(ov as i64 - ev as i64, eu as i64 - ou as i64);
                assert_eq!(s.wt_unchecked(u) % 2, (ou.abs_diff(eu)) % 2);
            }
        }
    }

    #[test]
    fn weight_and_imbalance_are_frobenius_invariant() {
        let s = s34();
        for u in 0..80 {
            let v = s.times_q(u);
            assert_eq!(s.wt_unchecked(u), s.wt_unchecked(v));
            assert_eq!(s.imbalance(u).unwrap(), s.imbalance(v).unwrap());
        }
    }

    #[test]
    fn preceq_examples() {
        let s = s34();
        assert!(s.preceq(1, 4));
        assert!(s.preceq(4, 4));
        assert!(!s.preceq(2, 4));
    }

    #[test]
    fn cosets() {
        let s = s34();
        assert_eq!(
            s.cyclotomic_coset(11).unwrap().as_slice(),
            &[11, 19, 33, 57]
        );
        assert_eq!(s.cyclotomic_coset(0).unwrap().as_slice(), &[0]);
        let b = ExponentSpace::new(2, 4).unwrap();
        assert_eq!(b.cyclotomic_coset(5).unwrap().as_slice(), &[5, 10]);
    }

    #[test]
    fn zr_listings() {
        let s = s34();
        let z5 = s.zr(5).unwrap();
        let mut want = vec![1, 3, 9, 27, 2, 6, 18, 54, 4, 12, 36, 28, 10, 30];
        want.sort();
        assert_eq!(z5.as_slice(), want.as_slice());
        let z4 = s.zr(4).unwrap();
        let mut want4 = vec![
            1, 3, 9, 27, 2, 6, 18, 54, 4, 12, 36, 28, 10, 30, 5, 15, 45, 55, 7, 21, 63, 29, 11, 33,
            19, 57, 13, 39, 37, 31,
        ];
        want4.sort();
        assert_eq!(z4.as_slice(), want4.as_slice());
        assert!(s.zr(7).unwrap().is_empty());
        // r = −1: every nonzero element, α^0 included
        assert_eq!(s.zr(-1).unwrap().len(), 80);
        assert!(s.zr(-2).is_err());
        assert!(s.zr(8).is_err());
        for r in -1..8 {
            assert!(s.zr(r).unwrap().is_q_closed(3));
        }
    }

    #[test]
    fn theta_examples() {
        let s = s34();
        assert_eq!(s.theta(5, 3).unwrap().as_slice(), &[11, 19, 33, 57]);
        assert!(s.theta(5, 2).unwrap().is_empty());
        let b = ExponentSpace::new(2, 4).unwrap();
        assert_eq!(b.theta(2, 2).unwrap().as_slice(), &[5, 10]);
        // Θ^{(n(q−1))}_0 = {0}
        assert_eq!(s.theta(0, 0).unwrap().as_slice(), &[0]);
        assert_eq!(s.count_theta(8, 0), 1);
        assert_eq!(s.theta(8, 0).unwrap().as_slice(), &[0]);
    }

    #[test]
    fn zri_example() {
        let s = s34();
        let z = s.zri(5, &[1]).unwrap();
        assert_eq!(z.len(), 18);
        assert_eq!(z, s.zr(5).unwrap().union(&s.theta(5, 3).unwrap()));
        assert_eq!(s.zri(5, &[1, 3]).unwrap(), s.zr(5).unwrap());
        assert_eq!(s.zri(5, &[]).unwrap(), s.zr(4).unwrap());
        assert!(matches!(s.zri(5, &[2]), Err(Error::InvalidI { .. })));
    }

    #[test]
    fn delta_examples() {
        let s = s34();
        let t = s.zri(5, &[1]).unwrap().to_extended();
        assert!(s.is_delta_closed(&t));
        let bad = ExponentSet::from_iter(80, true, [0, 4, 12, 36, 28]);
        assert!(!s.is_delta_closed(&bad));
        assert!(s.delta_closure(&bad).contains(1));
        let zero = ExponentSet::from_iter(80, true, [0]);
        assert!(s.is_delta_closed(&zero));
    }

    #[test]
    fn counting_examples() {
        let s = s34();
        assert_eq!(s.count_theta(5, 3), 4);
        let b = ExponentSpace::new(2, 4).unwrap();
        assert_eq!(b.count_theta(2, 2), 2);
        assert_eq!(s.dim_rm(4).unwrap(), 50);
        assert_eq!(s.dim_rm(5).unwrap(), 66);
        assert_eq!(s.dim_rm(1).unwrap(), 5);
        assert_eq!(s.dim_rm(8).unwrap(), 81);
        assert_eq!(s.dim_rm(-1).unwrap(), 0);
        assert_eq!(s.dim_sandwich(5, &[1]).unwrap(), 62);
        assert_eq!(s.dim_sandwich(8, &[0]).unwrap(), 81);
        assert_eq!(s.dim_sandwich(8, &[2]).unwrap(), 80);
        for r in 0..=8 {
            let m = s.parity_class(r);
            assert_eq!(s.dim_sandwich(r, &m).unwrap(), s.dim_rm(r).unwrap());
            assert_eq!(s.dim_sandwich(r, &[]).unwrap(), s.dim_rm(r - 1).unwrap());
        }
    }

    #[test]
    fn count_matches_enumeration() {
        for (q, n) in [(2, 4), (2, 6), (3, 4), (4, 4)] {
            let s = ExponentSpace::new(q, n).unwrap();
            for r in 0..=s.max_weight() as i64 {
                let mut by_weight = 0u128;
                for k in s.parity_class(r) {
                    let c = s.count_theta(r, k);
                    assert_eq!(
                        c,
                        s.theta(r, k).unwrap().len() as u128,
                        "q={q} n={n} r={r} k={k}"
                    );
                    by_weight += c;
                }
                let target = s.max_weight() as i64 - r;
                let direct = (0..=s.big_n())
                    .filter(|&u| s.wt_unchecked(u) as i64 == target)
                    .count() as u128;
                assert_eq!(by_weight, direct);
            }
        }
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(0, 0), 1);
    }

    #[test]
    fn selector_json() {
        let sel: ParitySelector = serde_json::from_str(r#"{"r": 5, "I": [1]}"#).unwrap();
        assert_eq!(sel, ParitySelector::new(5, vec![1]));
        assert!(serde_json::from_str::<ParitySelector>(r#"{"r": 5, "I": [1], "x": 0}"#).is_err());
        let set = s34().theta(5, 3).unwrap();
        assert_eq!(serde_json::to_string(&set).unwrap(), "[11,19,33,57]");
    }

    proptest! {
        #[test]
        fn zri_is_sandwiched(r in 0i64..8, mask in 0u32..4) {
            let s = s34();
            let m = s.parity_class(r);
            let i: Vec<u32> = m.iter().enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &k)| k).collect();
            let z = s.zri(r, &i).unwrap();
            prop_assert!(s.zr(r).unwrap().is_subset(&z));
            prop_assert!(z.is_subset(&s.zr(r - 1).unwrap()));
            prop_assert!(z.is_q_closed(3));
            prop_assert!(s.is_delta_closed(&z.to_extended()));
            prop_assert_eq!(z.to_extended().to_punctured(), z);
        }

        #[test]
        fn delta_closure_is_idempotent(seeds in proptest::collection::vec(0u32..81, 0..6)) {
            let s = s34();
            let t = ExponentSet::from_iter(80, true, seeds);
            let once = s.delta_closure(&t);
            prop_assert!(t.is_subset(&once));
            prop_assert_eq!(s.delta_closure(&once), once.clone());
            prop_assert!(s.is_delta_closed(&once));
        }
    }
}
