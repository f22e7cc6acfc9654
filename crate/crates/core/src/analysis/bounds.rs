//! Distance bounds that need no search: the BCH bound on the defining set
//! and the case analysis for dist(C_q(r+1, I, n)) in terms of r = ρ(q−1) + s.

use serde::Serialize;

use crate::codes::{Code, Family, Kind};
use crate::exponents::ExponentSpace;

/// Which branch of the case analysis applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Exact,
    AtLeast,
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseBound {
    pub branch: Branch,
    pub value: Option<u64>,
    pub rho: u32,
    pub s: u32,
    /// The literal hypothesis set intersected with I.
    pub hypothesis: Vec<u32>,
    /// Set when the hypothesis set has fewer than two values or leaves M_{r+1}.
    pub degenerate: bool,
}

/// Classifies C_q(R, I, n) with R = r + 1, 0 ≤ r ≤ n(q−1) − 2.
/// Returns `None` outside that range.
pub fn case_bound(q: u32, n: u32, big_r: i64, i_set: &[u32]) -> Option<CaseBound> {
    let space = ExponentSpace::new(q, n).ok()?;
    let top = space.max_weight() as i64;
    let r = big_r - 1;
    if r < 0 || r > top - 2 {
        return None;
    }
    let rho = (r / (q as i64 - 1)) as u32;
    let s = (r % (q as i64 - 1)) as u32;
    let qq = q as u64;
    let tail = |e: u32| qq.pow(e);
    let m_next = space.parity_class(big_r);
    let meets = |h: &[i64]| -> Vec<u32> {
        let mut v: Vec<u32> = h
            .iter()
            .filter(|&&x| x >= 0 && i_set.contains(&(x as u32)))
            .map(|&x| x as u32)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let degenerate_of = |h: &[i64]| {
        let mut d = h.to_vec();
        d.sort_unstable();
        d.dedup();
        d.len() < 2 || d.iter().any(|&x| x < 0 || !m_next.contains(&(x as u32)))
    };
    let (q, s_i) = (q as i64, s as i64);

    if rho == n - 1 {
        let h = [q - s_i - 2];
        let inter = meets(&h);
        let (branch, value) = if inter.is_empty() {
            (Branch::Exact, Some((q - s_i) as u64))
        } else {
            (Branch::NotCovered, None)
        };
        return Some(CaseBound {
            branch,
            value,
            rho,
            s,
            hypothesis: inter,
            degenerate: degenerate_of(&h),
        });
    }

    let exact = (q - s_i) as u64 * tail(n - rho - 1);
    let (h, weak_hit): ([i64; 2], i64) = if rho % 2 == 1 {
        ([q - s_i, q - s_i - 2], q - s_i)
    } else {
        ([(s_i + 1).abs(), (s_i - 1).abs()], (s_i - 1).abs())
    };
    let inter = meets(&h);
    let weak_ok = if rho % 2 == 1 { rho + 2 < n } else { s != 0 };
    let (branch, value) = if inter.is_empty() {
        (Branch::Exact, Some(exact))
    } else if weak_ok && inter == [weak_hit as u32] {
        let v = (q * q - q * s_i - 1) as u64 * tail(n - rho - 2);
        (Branch::AtLeast, Some(v))
    } else {
        (Branch::NotCovered, None)
    };
    Some(CaseBound {
        branch,
        value,
        rho,
        s,
        hypothesis: inter,
        degenerate: degenerate_of(&h),
    })
}

/// dist R_q(R, n) = (q − s)q^{n−ρ−1} with R = ρ(q−1) + s, 0 ≤ s < q − 1.
pub fn rm_distance(q: u32, n: u32, big_r: i64) -> Option<u64> {
    let top = (n * (q - 1)) as i64;
    if big_r < 0 || big_r > top {
        return None;
    }
    if big_r == top {
        return Some(1);
    }
    let rho = (big_r / (q as i64 - 1)) as u32;
    let s = (big_r % (q as i64 - 1)) as u64;
    Some((q as u64 - s) * (q as u64).pow(n - rho - 1))
}

/// 1 + the longest run c, c+b, ..., c+(δ−2)b (mod N) inside the punctured
/// defining set, over steps b coprime to N; +1 for affine-invariant extended
/// codes. Steps other than b = 1 are tried only for N ≤ 10^4.
pub fn bch_bound(code: &Code) -> usize {
    let big_n = code.ctx().big_n() as usize;
    let t = code.defining_set().to_punctured();
    let mut mark = vec![false; big_n];
    for u in t.iter() {
        mark[u as usize] = true;
    }
    let steps: Vec<usize> = if big_n <= 10_000 {
        (1..big_n.max(2)).filter(|&b| gcd(b, big_n) == 1).collect()
    } else {
        vec![1]
    };
    let mut best = 0usize;
    for b in steps {
        best = best.max(longest_run(&mark, b));
        if best >= big_n {
            break;
        }
    }
    let mut d = best.min(big_n) + 1;
    if code.kind() == Kind::Extended && code.is_affine_invariant() {
        d += 1;
    }
    d
}

fn longest_run(mark: &[bool], b: usize) -> usize {
    let n = mark.len();
    let at = |k: usize| mark[k * b % n];
    if (0..n).all(at) {
        return n;
    }
    // start right after a gap so the cyclic run is not split
    let start = (0..n).find(|&k| !at(k)).unwrap();
    let mut best = 0;
    let mut cur = 0;
    for i in 1..=n {
        if at((start + i) % n) {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DistanceBounds {
    pub bch: usize,
    pub case_bound: Option<CaseBound>,
    /// Closed-form value for R_q(r, n).
    pub rm: Option<u64>,
}

pub fn distance_bounds(code: &Code) -> DistanceBounds {
    let q = code.q();
    let n = code.ctx().n();
    let (thm, rm) = match (code.family(), code.r()) {
        (Family::Sandwich, Some(r)) => (case_bound(q, n, r, code.i_set()), None),
        (Family::Rm, Some(r)) => (case_bound(q, n, r + 1, &[]), rm_distance(q, n, r)),
        _ => (None, None),
    };
    DistanceBounds {
        bch: bch_bound(code),
        case_bound: thm,
        rm,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::CodeSpec;

    #[test]
    fn bch_on_rm_punctured() {
        let c = CodeSpec::rm(3, 4, 4).punctured().build().unwrap();
        assert_eq!(bch_bound(&c), 8);
        let e = CodeSpec::rm(3, 4, 4).build().unwrap();
        assert_eq!(bch_bound(&e), 9);
    }

    #[test]
    fn case_branches() {
        let t = case_bound(3, 4, 5, &[3]).unwrap();
        assert_eq!(
            (t.branch, t.value, t.rho, t.s),
            (Branch::Exact, Some(9), 2, 0)
        );
        let t = case_bound(3, 4, 6, &[0]).unwrap();
        assert_eq!(
            (t.branch, t.value, t.rho, t.s),
            (Branch::AtLeast, Some(5), 2, 1)
        );
        assert_eq!(t.hypothesis, vec![0]);
        let t = case_bound(3, 4, 5, &[1]).unwrap();
        assert_eq!(t.branch, Branch::NotCovered);
        // ρ = n − 1: r = 6, s = 0, hypothesis {1}
        let t = case_bound(3, 4, 7, &[3]).unwrap();
        assert_eq!((t.branch, t.value), (Branch::Exact, Some(3)));
        assert!(t.degenerate);
        assert!(case_bound(3, 4, 8, &[]).is_none());
        assert!(case_bound(3, 4, 0, &[]).is_none());
    }

    #[test]
    fn rm_closed_form() {
        let want = [81, 54, 27, 18, 9, 6, 3, 2, 1];
        for r in 0..=8 {
            assert_eq!(rm_distance(3, 4, r), Some(want[r as usize]));
        }
        assert_eq!(rm_distance(2, 4, 1), Some(8));
    }

    #[test]
    fn bounds_never_exceed_table() {
        for (r, i, d) in [(4, vec![2u32], 16u64), (2, vec![0], 45), (5, vec![1], 6)] {
            let c = CodeSpec::sandwich(3, 4, r, &i).build().unwrap();
            let b = distance_bounds(&c);
            assert!(b.bch as u64 <= d);
            if let Some(t) = b.case_bound {
                if let Some(v) = t.value {
                    assert!(v <= d);
                }
            }
        }
    }
}
