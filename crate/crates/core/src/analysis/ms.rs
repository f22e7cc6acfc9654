//! Mattson–Solomon coefficients, locator polynomials and the identities
//! linking them, evaluated on concrete codewords of length N.

use serde::Serialize;

use super::subspace::{Base, Subspace};
use crate::codes::{Code, Codeword, Family};
use crate::error::{Error, Result};
use crate::field::{Elt, FieldCtx};

/// Λ_0, ..., Λ_N with Λ_s = Σ_j x_j α^{js}; Λ_0 = Λ_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSCoefficients {
    pub lambda: Vec<Elt>,
}

impl MSCoefficients {
    /// N.
    pub fn period(&self) -> usize {
        self.lambda.len() - 1
    }

    /// Λ_i with the index taken mod N.
    pub fn get(&self, i: usize) -> Elt {
        self.lambda[i % self.period()]
    }

    /// M_x(g) = Σ_{s<N} Λ_{N−s} g^s.
    pub fn eval(&self, ctx: &FieldCtx, g: Elt) -> Elt {
        let n = self.period();
        (0..n).fold(Elt::ZERO, |acc, s| {
            ctx.add(acc, ctx.mul(self.lambda[n - s], ctx.pow(g, s as i64)))
        })
    }

    /// Λ_{qi mod N} = Λ_i^q for all i, and Λ_0 = Λ_N.
    pub fn frobenius_holds(&self, ctx: &FieldCtx) -> bool {
        let n = self.period();
        let q = ctx.q() as usize;
        self.lambda[0] == self.lambda[n]
            && (0..n).all(|i| self.lambda[q * i % n] == ctx.frobenius(self.lambda[i], 1))
    }
}

fn check_len(ctx: &FieldCtx, x: &Codeword) -> Result<()> {
    let n = ctx.big_n() as usize;
    if x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: x.len(),
        });
    }
    Ok(())
}

pub fn ms_coefficients(ctx: &FieldCtx, x: &Codeword) -> Result<MSCoefficients> {
    check_len(ctx, x)?;
    let n = ctx.big_n() as usize;
    let supp: Vec<(usize, Elt)> = x
        .symbols()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != 0)
        .map(|(j, &s)| (j, ctx.sym_to_elt(s)))
        .collect();
    let lambda = (0..=n)
        .map(|s| {
            supp.iter().fold(Elt::ZERO, |acc, &(j, c)| {
                ctx.add(acc, ctx.mul(c, ctx.alpha_pow((j * s) as i64)))
            })
        })
        .collect();
    Ok(MSCoefficients { lambda })
}

/// Inverse transform check: M_x(α^j) = −x_j for every position j.
pub fn ms_consistent(ctx: &FieldCtx, ms: &MSCoefficients, x: &Codeword) -> bool {
    x.symbols()
        .iter()
        .enumerate()
        .all(|(j, &s)| ms.eval(ctx, ctx.alpha_pow(j as i64)) == ctx.neg(ctx.sym_to_elt(s)))
}

/// σ_0 = 1, σ_1, ..., σ_w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorPoly {
    pub coeffs: Vec<Elt>,
}

impl LocatorPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, ctx: &FieldCtx, x: Elt) -> Elt {
        self.coeffs
            .iter()
            .rev()
            .fold(Elt::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// Indices with nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }
}

/// Π (1 − g X) over the locators g = α^j of the support.
pub fn locator_poly(ctx: &FieldCtx, x: &Codeword) -> Result<LocatorPoly> {
    check_len(ctx, x)?;
    if x.is_zero() {
        return Err(Error::ZeroCodeword);
    }
    let mut c = vec![Elt::ONE];
    for j in x.support() {
        let ng = ctx.neg(ctx.alpha_pow(j as i64));
        c.push(Elt::ZERO);
        for i in (1..c.len()).rev() {
            c[i] = ctx.add(c[i], ctx.mul(ng, c[i - 1]));
        }
    }
    Ok(LocatorPoly { coeffs: c })
}

/// Σ_{i≤w} σ_i Λ_{j+w−i} for one shift j.
fn identity_value(ctx: &FieldCtx, ms: &MSCoefficients, sigma: &LocatorPoly, j: usize) -> Elt {
    let w = sigma.degree();
    sigma
        .coeffs
        .iter()
        .enumerate()
        .fold(Elt::ZERO, |acc, (i, &s)| {
            ctx.add(acc, ctx.mul(s, ms.get(j + w - i)))
        })
}

#[derive(Debug, Clone, Serialize)]
pub struct NewtonReport {
    pub weight: usize,
    pub identities: usize,
    pub violations: usize,
    pub first_violation: Option<usize>,
}

impl NewtonReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Checks Λ_{j+w} + σ_1Λ_{j+w−1} + ... + σ_wΛ_j = 0 for j = 0..N−1.
pub fn newton_check(ctx: &FieldCtx, x: &Codeword) -> Result<NewtonReport> {
    let ms = ms_coefficients(ctx, x)?;
    let sigma = locator_poly(ctx, x)?;
    let n = ctx.big_n() as usize;
    let bad: Vec<usize> = (0..n)
        .filter(|&j| !identity_value(ctx, &ms, &sigma, j).is_zero())
        .collect();
    Ok(NewtonReport {
        weight: sigma.degree(),
        identities: n,
        violations: bad.len(),
        first_violation: bad.first().copied(),
    })
}

/// Checks a candidate (Λ, σ) against the full system for weight w: the N
/// shifted identities, Frobenius closure, periodicity and Λ_t = 0 on the
/// defining set of the punctured code.
pub fn sc_system_check(
    code: &Code,
    w: usize,
    ms: &MSCoefficients,
    sigma: &LocatorPoly,
) -> Result<bool> {
    let ctx = code.ctx();
    let n = ctx.big_n() as usize;
    if sigma.degree() != w || sigma.coeffs[w].is_zero() {
        return Err(Error::DegreeMismatch {
            expected: w,
            got: sigma.degree(),
        });
    }
    if ms.period() != n {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            got: ms.lambda.len(),
        });
    }
    let shifted = (1..=n).all(|j| identity_value(ctx, ms, sigma, j).is_zero());
    let zeros = code
        .defining_set()
        .to_punctured()
        .iter()
        .all(|t| ms.lambda[t as usize].is_zero());
    Ok(shifted && ms.frobenius_holds(ctx) && zeros && sigma.coeffs[0] == Elt::ONE)
}

/// I_k = {q^k − q^j : 0 ≤ j < k}.
pub fn i_k(q: u32, k: u32) -> Vec<usize> {
    let qk = (q as usize).pow(k);
    let mut v: Vec<usize> = (0..k).map(|j| qk - (q as usize).pow(j)).collect();
    v.sort_unstable();
    v
}

/// ρ when the code is eligible for case (i): C_q(ρ(q−1)+1, I, n) with I
/// avoiding {q, q−2, |q−4|} (ρ odd) or {1, 3} (ρ even). R_q(ρ(q−1), n)
/// counts as C_q(ρ(q−1)+1, ∅, n).
pub fn case_i_rho(code: &Code) -> Option<u32> {
    let q = code.q();
    let n = code.ctx().n();
    let (r, i) = match (code.family(), code.r()) {
        (Family::Sandwich, Some(r)) => (r, code.i_set().to_vec()),
        (Family::Rm, Some(r)) => (r + 1, Vec::new()),
        _ => return None,
    };
    if r < 1 || (r - 1) % (q as i64 - 1) != 0 {
        return None;
    }
    let rho = ((r - 1) / (q as i64 - 1)) as u32;
    if rho > n - 1 {
        return None;
    }
    let q_i = q as i64;
    let forbidden: Vec<i64> = if rho % 2 == 1 {
        vec![q_i, q_i - 2, (q_i - 4).abs()]
    } else {
        vec![1, 3]
    };
    (!i.iter().any(|&k| forbidden.contains(&(k as i64)))).then_some(rho)
}

#[derive(Debug, Clone, Serialize)]
pub struct LocatorFormReport {
    pub delta: usize,
    /// Λ_1 = ... = Λ_{δ−1} = 0.
    pub low_lambdas_vanish: bool,
    /// σ_u and Λ_{δ+u} vanish off I_k; σ_u = −Λ_{δ+u}/Λ_δ on it.
    pub sigma_relations: bool,
    /// σ(X) = 1 − Σ_{u∈I_k} (Λ_{δ+u}/Λ_δ) X^u.
    pub closed_form: bool,
}

impl LocatorFormReport {
    pub fn holds(&self) -> bool {
        self.low_lambdas_vanish && self.sigma_relations && self.closed_form
    }
}

/// The three clauses for a weight-δ word, δ = q^k − 1, given its data.
pub fn locator_form_clauses(
    ctx: &FieldCtx,
    k: u32,
    ms: &MSCoefficients,
    sigma: &LocatorPoly,
) -> LocatorFormReport {
    let q = ctx.q();
    let delta = (q as usize).pow(k) - 1;
    let ik = i_k(q, k);
    let ld = ms.get(delta);
    let low = (1..delta).all(|u| ms.get(u).is_zero());
    let ratio = |u: usize| -> Option<Elt> { ctx.div(ms.get(delta + u), ld).ok() };
    let sig = |u: usize| sigma.coeffs.get(u).copied().unwrap_or(Elt::ZERO);
    let rel = !ld.is_zero()
        && (1..delta).all(|u| {
            if ik.contains(&u) {
                ratio(u).is_some_and(|r| sig(u) == ctx.neg(r))
            } else {
                ms.get(delta + u).is_zero() && sig(u).is_zero()
            }
        });
    let closed = !ld.is_zero()
        && sigma.degree() == delta
        && (0..=delta).all(|u| {
            let want = if u == 0 {
                Elt::ONE
            } else if ik.contains(&u) {
                ctx.neg(ratio(u).unwrap_or(Elt::ZERO))
            } else {
                Elt::ZERO
            };
            sig(u) == want
        });
    LocatorFormReport {
        delta,
        low_lambdas_vanish: low,
        sigma_relations: rel,
        closed_form: closed,
    }
}

/// Verifies the case (i) locator description on a punctured word of weight
/// q^{n−ρ} − 1.
pub fn locator_form_check(code: &Code, x: &Codeword) -> Result<LocatorFormReport> {
    let ctx = code.ctx();
    let rho = case_i_rho(code)
        .ok_or_else(|| Error::IneligibleCode(format!("{} is not a case (i) code", code.label())))?;
    let k = ctx.n() - rho;
    let delta = (ctx.q() as usize).pow(k) - 1;
    if x.weight() != delta {
        return Err(Error::IneligibleCode(format!(
            "word of weight {} where {delta} is required",
            x.weight()
        )));
    }
    let ms = ms_coefficients(ctx, x)?;
    let sigma = locator_poly(ctx, x)?;
    Ok(locator_form_clauses(ctx, k, &ms, &sigma))
}

#[derive(Debug, Clone)]
pub struct SplitReport {
    pub splits: bool,
    pub roots: usize,
    pub subspace: Option<Subspace>,
}

/// For σ supported on {0} ∪ I_k with σ_δ ≠ 0, δ = q^k − 1: counts roots in
/// GF(q^n)^*; when there are δ of them, {0} ∪ {1/root} must be a
/// k-dimensional GF(q)-subspace.
pub fn affine_split_check(ctx: &FieldCtx, sigma: &LocatorPoly) -> Result<SplitReport> {
    let q = ctx.q() as usize;
    let delta = sigma.degree();
    let k = (1..=ctx.n())
        .find(|&k| q.pow(k) - 1 == delta)
        .ok_or_else(|| Error::BadShape(format!("degree {delta} is not q^k − 1")))?;
    let ik = i_k(ctx.q(), k);
    if sigma.coeffs[delta].is_zero() || sigma.coeffs[0] != Elt::ONE {
        return Err(Error::BadShape("σ_0 must be 1 and σ_δ nonzero".into()));
    }
    if let Some(u) = sigma
        .support()
        .into_iter()
        .find(|&u| u != 0 && !ik.contains(&u))
    {
        return Err(Error::BadShape(format!("σ_{u} ≠ 0 with {u} ∉ {ik:?}")));
    }
    let roots: Vec<Elt> = ctx
        .elements()
        .skip(1)
        .filter(|&v| sigma.eval(ctx, v).is_zero())
        .collect();
    if roots.len() != delta {
        return Ok(SplitReport {
            splits: false,
            roots: roots.len(),
            subspace: None,
        });
    }
    let inv: Vec<Elt> = roots
        .iter()
        .map(|&v| ctx.inv(v).expect("nonzero root"))
        .collect();
    let s = Subspace::span(ctx, Base::Fq, &inv);
    if s.dim as u32 != k || s.len() != delta + 1 || !inv.iter().all(|&g| s.contains(g)) {
        return Err(Error::Inconsistent(format!(
            "roots of a split affine locator span dimension {} instead of {k}",
            s.dim
        )));
    }
    Ok(SplitReport {
        splits: true,
        roots: delta,
        subspace: Some(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::CodeSpec;
    use crate::field::FieldCtx;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn indicator(ctx: &FieldCtx, elems: impl Iterator<Item = Elt>) -> Codeword {
        let mut v = vec![0u8; ctx.big_n() as usize];
        for e in elems {
            v[e.log().unwrap() as usize] = 1;
        }
        Codeword::new(v)
    }

    #[test]
    fn unit_word() {
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        let x = Codeword::unit(80, 0, 1);
        let ms = ms_coefficients(&ctx, &x).unwrap();
        assert!(ms.lambda.iter().all(|&l| l == Elt::ONE));
        assert!(ms_consistent(&ctx, &ms, &x));
        let s = locator_poly(&ctx, &x).unwrap();
        assert_eq!(s.coeffs, vec![Elt::ONE, ctx.neg(Elt::ONE)]);
        assert!(newton_check(&ctx, &x).unwrap().holds());
        assert!(matches!(
            locator_poly(&ctx, &Codeword::zero(80)),
            Err(Error::ZeroCodeword)
        ));
    }

    #[test]
    fn prime_field_locator() {
        // locators 1 and −1 = α^40: (1 − X)(1 + X) = 1 − X^2
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        let x = indicator(&ctx, [Elt::ONE, ctx.alpha_pow(40)].into_iter());
        let s = locator_poly(&ctx, &x).unwrap();
        assert_eq!(s.coeffs, vec![Elt::ONE, Elt::ZERO, ctx.neg(Elt::ONE)]);
    }

    #[test]
    fn code_words_satisfy_identities() {
        let c = CodeSpec::sandwich(3, 4, 5, &[1])
            .punctured()
            .build()
            .unwrap();
        let ctx = c.ctx();
        let t = c.defining_set().clone();
        for row in c.generator_rows() {
            let ms = ms_coefficients(ctx, &row).unwrap();
            assert!(t.iter().all(|s| ms.lambda[s as usize].is_zero()));
            assert!(ms.frobenius_holds(ctx));
            assert!(ms_consistent(ctx, &ms, &row));
            assert!(newton_check(ctx, &row).unwrap().holds());
            let sigma = locator_poly(ctx, &row).unwrap();
            assert!(sc_system_check(&c, row.weight(), &ms, &sigma).unwrap());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = c.random_codeword(&mut rng);
        let mut ms = ms_coefficients(ctx, &x).unwrap();
        let sigma = locator_poly(ctx, &x).unwrap();
        assert!(matches!(
            sc_system_check(&c, x.weight() + 1, &ms, &sigma),
            Err(Error::DegreeMismatch { .. })
        ));
        let t0 = t.iter().nth(rng.gen_range(0..t.len())).unwrap() as usize;
        ms.lambda[t0] = Elt::ONE;
        assert!(!sc_system_check(&c, x.weight(), &ms, &sigma).unwrap());
    }

    #[test]
    fn subspace_indicator_has_sparse_locator() {
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        let f9 = Subspace::span(&ctx, Base::Fq, &ctx.subfield(2));
        let x = indicator(&ctx, f9.nonzero());
        let s = locator_poly(&ctx, &x).unwrap();
        let ik = i_k(3, 2);
        assert_eq!(ik, vec![6, 8]);
        assert!(s.support().iter().all(|u| *u == 0 || ik.contains(u)));
        let rep = affine_split_check(&ctx, &s).unwrap();
        assert!(rep.splits);
        assert_eq!(rep.subspace.unwrap().elements(), f9.elements());
        // power sums: Λ_i = 0 below q-weight k(q−1) = 4
        let ms = ms_coefficients(&ctx, &x).unwrap();
        let space = crate::exponents::ExponentSpace::new(3, 4).unwrap();
        for i in 1..80u32 {
            if space.wt(i).unwrap() < 4 {
                assert!(ms.lambda[i as usize].is_zero(), "{i}");
            }
        }
    }

    #[test]
    fn non_splitting_pattern_exists() {
        let ctx = FieldCtx::from_q(3, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut found = false;
        for _ in 0..50 {
            let mut c = vec![Elt::ZERO; 9];
            c[0] = Elt::ONE;
            c[6] = ctx.alpha_pow(rng.gen_range(0..80));
            c[8] = ctx.alpha_pow(rng.gen_range(0..80));
            let rep = affine_split_check(&ctx, &LocatorPoly { coeffs: c }).unwrap();
            if !rep.splits {
                found = true;
                break;
            }
        }
        assert!(found);
        let mut c = vec![Elt::ONE; 9];
        c[1] = Elt::ONE;
        assert!(matches!(
            affine_split_check(&ctx, &LocatorPoly { coeffs: c }),
            Err(Error::BadShape(_))
        ));
    }

    #[test]
    fn locator_form_on_simplex_words() {
        // R_2(1,4)^* is case (i) with ρ = 1: weight-7 words are 3-dim subspaces
        let c = CodeSpec::rm(2, 4, 1).punctured().build().unwrap();
        assert_eq!(case_i_rho(&c), Some(1));
        let ctx = c.ctx();
        let planes = super::super::subspace::enumerate_subspaces(ctx, Base::Fq, 3, 100).unwrap();
        for v in &planes {
            let x = indicator(ctx, v.nonzero());
            assert!(c.contains(&x).unwrap());
            assert!(locator_form_check(&c, &x).unwrap().holds());
        }
        let x = indicator(ctx, planes[0].nonzero());
        let mut ms = ms_coefficients(ctx, &x).unwrap();
        let sigma = locator_poly(ctx, &x).unwrap();
        ms.lambda[1] = Elt::ONE;
        assert!(!locator_form_clauses(ctx, 3, &ms, &sigma).holds());
        let bad = CodeSpec::sandwich(3, 4, 5, &[1])
            .punctured()
            .build()
            .unwrap();
        assert!(matches!(
            locator_form_check(&bad, &x),
            Err(Error::IneligibleCode(_))
        ));
    }
}
