//! Punctured and extended cyclic codes given by defining sets: generalized
//! Reed–Muller codes R_q(r,n), sandwiched codes C_q(r,I,n), and raw codes.
//!
//! A code is a defining set plus lazily built matrices. Parity rows are the
//! GF(q)-coordinates of the constraints ρ_s(x) = 0, reduced by rank; the
//! generator is the kernel in reduced row-echelon form.

mod word;

use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use word::{
    affine_map, affine_perm, algebra_mul, algebra_unit, cyclic_shift, element_position, extend,
    permute, position_element, puncture, rho, Algebra, Codeword, Kind,
};

use crate::error::{Error, Result};
use crate::exponents::{ExponentSet, ExponentSpace};
use crate::field::FieldCtx;
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Rm,
    Sandwich,
    Raw,
}

/// Serializable code descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub q: u32,
    pub n: u32,
    #[serde(default = "default_family")]
    pub family: Family,
    pub r: i64,
    #[serde(rename = "I", default)]
    pub i: Vec<u32>,
    #[serde(default = "default_kind")]
    pub kind: Kind,
}

fn default_family() -> Family {
    Family::Sandwich
}
fn default_kind() -> Kind {
    Kind::Extended
}

impl CodeSpec {
    pub fn sandwich(q: u32, n: u32, r: i64, i: &[u32]) -> Self {
        CodeSpec {
            q,
            n,
            family: Family::Sandwich,
            r,
            i: sorted(i),
            kind: Kind::Extended,
        }
    }

    pub fn rm(q: u32, n: u32, r: i64) -> Self {
        CodeSpec {
            q,
            n,
            family: Family::Rm,
            r,
            i: Vec::new(),
            kind: Kind::Extended,
        }
    }

    pub fn punctured(mut self) -> Self {
        self.kind = Kind::Punctured;
        self
    }

    pub fn build(&self) -> Result<Code> {
        let ctx = Arc::new(FieldCtx::from_q(self.q, self.n)?);
        Code::build(ctx, self.family, self.kind, self.r, &self.i)
    }
}

fn sorted(i: &[u32]) -> Vec<u32> {
    let mut v = i.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

pub struct Code {
    ctx: Arc<FieldCtx>,
    space: ExponentSpace,
    kind: Kind,
    family: Family,
    r: Option<i64>,
    i: Vec<u32>,
    defset: ExponentSet,
    parity: OnceLock<Matrix>,
    generator: OnceLock<Matrix>,
}

impl std::fmt::Debug for Code {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Code({}, [{}, {}])",
            self.label(),
            self.length(),
            self.dimension()
        )
    }
}

impl Clone for Code {
    fn clone(&self) -> Self {
        Code {
            ctx: self.ctx.clone(),
            space: self.space,
            kind: self.kind,
            family: self.family,
            r: self.r,
            i: self.i.clone(),
            defset: self.defset.clone(),
            parity: self.parity.clone(),
            generator: self.generator.clone(),
        }
    }
}

impl Code {
    /// Builds R_q(r,n) (family rm, −1 ≤ r ≤ n(q−1)) or C_q(r,I,n)
    /// (family sandwich, 0 ≤ r ≤ n(q−1), I ⊆ M_r).
    ///
    /// At r = n(q−1) the sandwiched code is R_q(n(q−1)−1,n) when 0 ∉ I and the
    /// full space (family raw) otherwise.
    pub fn build(
        ctx: Arc<FieldCtx>,
        family: Family,
        kind: Kind,
        r: i64,
        i: &[u32],
    ) -> Result<Code> {
        let space = ExponentSpace::new(ctx.q(), ctx.n())?;
        let top = space.max_weight() as i64;
        let big_n = space.big_n();
        let i = sorted(i);
        let (family, r, i, punct) = match family {
            Family::Rm => {
                if !i.is_empty() {
                    return Err(Error::RangeError("R_q(r,n) takes no I".into()));
                }
                if r < -1 || r > top {
                    return Err(Error::RangeError(format!(
                        "R_q(r,n) needs -1 <= r <= {top}, got {r}"
                    )));
                }
                if r == top {
                    (Family::Raw, Some(r), i, None)
                } else {
                    (Family::Rm, Some(r), i, Some(space.zr(r)?))
                }
            }
            Family::Sandwich => {
                if r < 0 || r > top {
                    return Err(Error::RangeError(format!(
                        "C_q(r,I,n) needs 0 <= r <= {top}, got {r}"
                    )));
                }
                space.check_selector(r, &i)?;
                if r < top {
                    (
                        Family::Sandwich,
                        Some(r),
                        i.clone(),
                        Some(space.zri(r, &i)?),
                    )
                } else if !i.contains(&0) {
                    (
                        Family::Rm,
                        Some(top - 1),
                        Vec::new(),
                        Some(space.zr(top - 1)?),
                    )
                } else {
                    (Family::Raw, Some(r), i, None)
                }
            }
            Family::Raw => {
                return Err(Error::Unsupported(
                    "raw codes are built from a defining set".into(),
                ))
            }
        };
        let defset = match (punct, kind) {
            (Some(z), Kind::Punctured) => z,
            (Some(z), Kind::Extended) => z.to_extended(),
            (None, _) => ExponentSet::empty(big_n, kind == Kind::Extended),
        };
        Ok(Code {
            ctx,
            space,
            kind,
            family,
            r,
            i,
            defset,
            parity: OnceLock::new(),
            generator: OnceLock::new(),
        })
    }

    /// A raw code with the given defining set (punctured: [0, N−1]; extended: [0, N]).
    pub fn from_defining_set(ctx: Arc<FieldCtx>, kind: Kind, defset: &[u32]) -> Result<Code> {
        let space = ExponentSpace::new(ctx.q(), ctx.n())?;
        let big_n = space.big_n();
        let max = match kind {
            Kind::Punctured => big_n - 1,
            Kind::Extended => big_n,
        };
        if let Some(&bad) = defset.iter().find(|&&u| u > max) {
            return Err(Error::OutOfRange {
                value: bad as u64,
                max: max as u64,
            });
        }
        Ok(Code {
            ctx,
            space,
            kind,
            family: Family::Raw,
            r: None,
            i: Vec::new(),
            defset: ExponentSet::from_iter(big_n, kind == Kind::Extended, defset.iter().copied()),
            parity: OnceLock::new(),
            generator: OnceLock::new(),
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }
    pub fn ctx_arc(&self) -> Arc<FieldCtx> {
        self.ctx.clone()
    }
    pub fn space(&self) -> &ExponentSpace {
        &self.space
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }
    pub fn family(&self) -> Family {
        self.family
    }
    pub fn r(&self) -> Option<i64> {
        self.r
    }
    pub fn i_set(&self) -> &[u32] {
        &self.i
    }
    pub fn q(&self) -> u32 {
        self.ctx.q()
    }
    pub fn defining_set(&self) -> &ExponentSet {
        &self.defset
    }
    pub fn length(&self) -> usize {
        self.kind.length(self.ctx.big_n())
    }

    /// length − |T|.
    pub fn dimension(&self) -> usize {
        self.length() - self.defset.len()
    }

    /// The dimension predicted by the counting formulas (None for raw codes
    /// without parameters).
    pub fn formula_dimension(&self) -> Option<u128> {
        let r = self.r?;
        match self.family {
            Family::Rm => self.space.dim_rm(r).ok(),
            Family::Sandwich | Family::Raw => self.space.dim_sandwich(r, &self.i).ok(),
        }
    }

    pub fn spec(&self) -> Option<CodeSpec> {
        Some(CodeSpec {
            q: self.q(),
            n: self.ctx.n(),
            family: self.family,
            r: self.r?,
            i: self.i.clone(),
            kind: self.kind,
        })
    }

    /// Human-readable name such as `C_3(5,{1},4)` or `R_2(1,4)^*`.
    pub fn label(&self) -> String {
        let q = self.q();
        let n = self.ctx.n();
        let star = if self.kind == Kind::Punctured {
            "^*"
        } else {
            ""
        };
        match (self.family, self.r) {
            (Family::Rm, Some(r)) => format!("R_{q}({r},{n}){star}"),
            (Family::Sandwich, Some(r)) => format!("C_{q}({r},{},{n}){star}", fmt_set(&self.i)),
            (Family::Raw, Some(r)) if self.i.is_empty() => format!("R_{q}({r},{n}){star}"),
            (Family::Raw, Some(r)) => format!("C_{q}({r},{},{n}){star}", fmt_set(&self.i)),
            _ => format!("raw_{q}(n={n},|T|={}){star}", self.defset.len()),
        }
    }

    /// Parity-check matrix: GF(q)-coordinates of ρ_s for s in T, reduced to full rank.
    pub fn parity_matrix(&self) -> &Matrix {
        self.parity.get_or_init(|| self.build_parity())
    }

    fn build_parity(&self) -> Matrix {
        let ctx = &*self.ctx;
        let n = ctx.n() as usize;
        let len = self.length();
        let big_n = ctx.big_n() as u64;
        let mut m = Matrix::zeros(self.defset.len() * n, len);
        for (b, s) in self.defset.iter().enumerate() {
            for j in 0..big_n as usize {
                let e = ctx.alpha_pow((j as u64 * (s as u64 % big_n) % big_n) as i64);
                for (t, &c) in ctx.coords(e).iter().enumerate() {
                    m.set(b * n + t, j, c);
                }
            }
            if self.kind == Kind::Extended && s == 0 {
                // 0^0 = 1 at the position labelled 0
                m.set(b * n, big_n as usize, 1);
            }
        }
        m.rref(ctx.fq());
        m
    }

    /// Generator matrix in reduced row-echelon form.
    pub fn generator_matrix(&self) -> &Matrix {
        self.generator
            .get_or_init(|| self.parity_matrix().kernel(self.ctx.fq()))
    }

    /// Dimension recomputed from the parity-check rank; errors when it
    /// disagrees with length − |T|.
    pub fn checked_dimension(&self) -> Result<usize> {
        let by_rank = self.length() - self.parity_matrix().rows();
        if by_rank != self.dimension() || self.generator_matrix().rows() != by_rank {
            return Err(Error::Inconsistent(format!(
                "{}: rank gives dimension {by_rank}, defining set gives {}",
                self.label(),
                self.dimension()
            )));
        }
        Ok(by_rank)
    }

    fn check_len(&self, x: &Codeword) -> Result<()> {
        if x.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// x ∈ C, via the parity-check matrix.
    pub fn contains(&self, x: &Codeword) -> Result<bool> {
        self.check_len(x)?;
        let syn = self.parity_matrix().mul_vec(x.symbols(), self.ctx.fq())?;
        Ok(syn.iter().all(|&v| v == 0))
    }

    /// x ∈ C, via ρ_s(x) = 0 for every s in the defining set.
    pub fn contains_by_rho(&self, x: &Codeword) -> Result<bool> {
        self.check_len(x)?;
        for s in self.defset.iter() {
            if !rho(&self.ctx, x, s as u64)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Σ msg_i · G_i.
    pub fn encode(&self, msg: &[u8]) -> Result<Codeword> {
        let g = self.generator_matrix();
        if msg.len() != g.rows() {
            return Err(Error::LengthMismatch {
                expected: g.rows(),
                got: msg.len(),
            });
        }
        let fq = self.ctx.fq();
        let mut out = vec![0u8; self.length()];
        for (i, &c) in msg.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(g.row(i)) {
                if v != 0 {
                    *o = fq.add(*o, fq.mul(c, v));
                }
            }
        }
        Ok(Codeword::new(out))
    }

    pub fn random_codeword<R: Rng + ?Sized>(&self, rng: &mut R) -> Codeword {
        let k = self.generator_matrix().rows();
        let q = self.q();
        let msg: Vec<u8> = (0..k).map(|_| rng.gen_range(0..q) as u8).collect();
        self.encode(&msg).expect("message length matches")
    }

    pub fn generator_rows(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.generator_matrix()
            .row_iter()
            .map(|r| Codeword::new(r.to_vec()))
    }

    /// Same parameters, other kind.
    pub fn with_kind(&self, kind: Kind) -> Code {
        let defset = match kind {
            Kind::Punctured => self.defset.to_punctured(),
            Kind::Extended => {
                if self.kind == Kind::Extended {
                    self.defset.clone()
                } else if self.family == Family::Raw && self.r.is_some() {
                    // the full space stays full
                    ExponentSet::empty(self.ctx.big_n(), true)
                } else {
                    self.defset.to_extended()
                }
            }
        };
        Code {
            ctx: self.ctx.clone(),
            space: self.space,
            kind,
            family: self.family,
            r: self.r,
            i: self.i.clone(),
            defset,
            parity: OnceLock::new(),
            generator: OnceLock::new(),
        }
    }

    /// Extended codes whose defining set is Δ-closed are affine-invariant.
    pub fn is_affine_invariant(&self) -> bool {
        self.kind == Kind::Extended && self.space.is_delta_closed(&self.defset)
    }

    /// The dual code, with parameters (n(q−1) − r, Ī) for sandwiched codes and
    /// n(q−1) − r − 1 for R_q(r,n). Verified by G·G'ᵀ = 0, dimensions and the
    /// defining-set identity T' = {N − s : s ∉ T}.
    pub fn dual(&self) -> Result<Code> {
        if self.kind != Kind::Extended {
            return Err(Error::Unsupported("dual of a punctured code".into()));
        }
        let top = self.space.max_weight() as i64;
        let r = self
            .r
            .ok_or_else(|| Error::Unsupported("dual of a raw code".into()))?;
        let dual = match self.family {
            Family::Rm => Code::build(
                self.ctx.clone(),
                Family::Rm,
                Kind::Extended,
                top - r - 1,
                &[],
            )?,
            Family::Raw if self.i.is_empty() => Code::build(
                self.ctx.clone(),
                Family::Rm,
                Kind::Extended,
                top - r - 1,
                &[],
            )?,
            Family::Sandwich | Family::Raw => {
                let ibar = self.space.complement(r, &self.i);
                Code::build(
                    self.ctx.clone(),
                    Family::Sandwich,
                    Kind::Extended,
                    top - r,
                    &ibar,
                )?
            }
        };
        self.check_dual(&dual)?;
        Ok(dual)
    }

    fn check_dual(&self, dual: &Code) -> Result<()> {
        let big_n = self.ctx.big_n();
        let expected = ExponentSet::from_iter(
            big_n,
            true,
            (0..=big_n)
                .filter(|&s| !self.defset.contains(s))
                .map(|s| big_n - s),
        );
        if expected.as_slice() != dual.defset.as_slice() {
            return Err(Error::Inconsistent(format!(
                "defining set of {} is not the complement-inverse of {}",
                dual.label(),
                self.label()
            )));
        }
        if self.dimension() + dual.dimension() != self.length() {
            return Err(Error::Inconsistent("dual dimensions do not add up".into()));
        }
        let prod = self
            .generator_matrix()
            .mul_transpose(dual.generator_matrix(), self.ctx.fq())?;
        if !prod.is_zero() {
            return Err(Error::Inconsistent(format!(
                "{} and {} are not orthogonal",
                self.label(),
                dual.label()
            )));
        }
        Ok(())
    }
}

pub(crate) fn fmt_set(i: &[u32]) -> String {
    let parts: Vec<String> = i.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx81() -> Arc<FieldCtx> {
        Arc::new(FieldCtx::from_q(3, 4).unwrap())
    }

    fn sw(ctx: &Arc<FieldCtx>, kind: Kind, r: i64, i: &[u32]) -> Code {
        Code::build(ctx.clone(), Family::Sandwich, kind, r, i).unwrap()
    }

    fn rm(ctx: &Arc<FieldCtx>, kind: Kind, r: i64) -> Code {
        Code::build(ctx.clone(), Family::Rm, kind, r, &[]).unwrap()
    }

    #[test]
    fn example_dimensions() {
        let ctx = ctx81();
        let c = sw(&ctx, Kind::Extended, 5, &[1]);
        assert_eq!(c.length(), 81);
        assert_eq!(c.dimension(), 62);
        assert_eq!(c.checked_dimension().unwrap(), 62);
        assert_eq!(c.formula_dimension(), Some(62));
        assert_eq!(c.label(), "C_3(5,{1},4)");
        let r1 = rm(&ctx, Kind::Extended, 1);
        // first-order GRM in n = 4 variables: 1 + n
        assert_eq!(r1.checked_dimension().unwrap(), 5);
    }

    #[test]
    fn binary_first_order_rm() {
        let ctx = Arc::new(FieldCtx::from_q(2, 4).unwrap());
        let c = rm(&ctx, Kind::Extended, 1);
        assert_eq!(c.length(), 16);
        assert_eq!(c.checked_dimension().unwrap(), 5);
        assert!(c
            .generator_rows()
            .all(|w| w.weight() == 8 || w.weight() == 16));
    }

    #[test]
    fn boundary_cases() {
        let ctx = ctx81();
        let full = sw(&ctx, Kind::Extended, 8, &[0]);
        assert_eq!(full.family(), Family::Raw);
        assert_eq!(full.checked_dimension().unwrap(), 81);
        let almost = sw(&ctx, Kind::Extended, 8, &[2]);
        assert_eq!(almost.family(), Family::Rm);
        assert_eq!(almost.checked_dimension().unwrap(), 80);
        let zero = rm(&ctx, Kind::Extended, -1);
        assert_eq!(zero.checked_dimension().unwrap(), 0);
        assert_eq!(
            rm(&ctx, Kind::Punctured, -1).checked_dimension().unwrap(),
            0
        );
        assert_eq!(rm(&ctx, Kind::Extended, 8).checked_dimension().unwrap(), 81);
        // C_q(0, ∅) has α^0 as a zero: only the zero word
        assert_eq!(
            sw(&ctx, Kind::Extended, 0, &[])
                .checked_dimension()
                .unwrap(),
            0
        );
        assert_eq!(
            sw(&ctx, Kind::Extended, 0, &[0])
                .checked_dimension()
                .unwrap(),
            1
        );
        assert!(matches!(
            Code::build(ctx.clone(), Family::Sandwich, Kind::Extended, 5, &[2]),
            Err(Error::InvalidI { .. })
        ));
        assert!(Code::build(ctx.clone(), Family::Sandwich, Kind::Extended, 9, &[]).is_err());
    }

    #[test]
    fn membership_rules() {
        let ctx = ctx81();
        let c = sw(&ctx, Kind::Extended, 5, &[1]);
        assert!(c.contains(&Codeword::zero(81)).unwrap());
        for row in c.generator_rows() {
            assert!(c.contains(&row).unwrap());
            assert!(c.contains_by_rho(&row).unwrap());
        }
        assert!(c.contains(&Codeword::zero(80)).is_err());
        // F_9^* indicator lies in C_3(4,{0},4)^*
        let mut v = vec![0u8; 80];
        for j in 0..8 {
            v[10 * j] = 1;
        }
        let x = Codeword::new(v);
        let cp = sw(&ctx, Kind::Punctured, 4, &[0]);
        assert!(cp.contains(&x).unwrap());
        assert!(cp.contains_by_rho(&x).unwrap());
        let ce = sw(&ctx, Kind::Extended, 4, &[0]);
        assert!(ce.contains(&extend(&ctx, &x).unwrap()).unwrap());
    }

    #[test]
    fn nesting() {
        let ctx = ctx81();
        for r in 1..8 {
            let lower = rm(&ctx, Kind::Extended, r - 1);
            let upper = rm(&ctx, Kind::Extended, r);
            for i in [vec![], ctx_m(&ctx, r)] {
                let c = sw(&ctx, Kind::Extended, r, &i);
                assert!(lower.generator_rows().all(|w| c.contains(&w).unwrap()));
                assert!(c.generator_rows().all(|w| upper.contains(&w).unwrap()));
            }
        }
    }

    fn ctx_m(ctx: &FieldCtx, r: i64) -> Vec<u32> {
        ExponentSpace::new(ctx.q(), ctx.n())
            .unwrap()
            .parity_class(r)
    }

    #[test]
    fn duality_examples() {
        let ctx = ctx81();
        let c = sw(&ctx, Kind::Extended, 5, &[1]);
        let d = c.dual().unwrap();
        assert_eq!(d.label(), "C_3(3,{3},4)");
        assert_eq!((c.dimension(), d.dimension()), (62, 19));
        let dd = d.dual().unwrap();
        assert_eq!(dd.defining_set(), c.defining_set());
        for r in -1..=8 {
            let a = rm(&ctx, Kind::Extended, r);
            let b = a.dual().unwrap();
            assert_eq!(b.r(), Some(8 - r - 1));
        }
        for r in 0..=8 {
            for i in [vec![], ctx_m(&ctx, r)] {
                sw(&ctx, Kind::Extended, r, &i).dual().unwrap();
            }
        }
        assert!(sw(&ctx, Kind::Punctured, 5, &[1]).dual().is_err());
    }

    #[test]
    fn cyclic_and_affine_closure() {
        let ctx = ctx81();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = sw(&ctx, Kind::Extended, 5, &[1]);
        let cp = c.with_kind(Kind::Punctured);
        assert!(c.is_affine_invariant());
        for _ in 0..10 {
            let x = cp.random_codeword(&mut rng);
            assert!(cp.contains(&cyclic_shift(&x, 1)).unwrap());
            let y = c.random_codeword(&mut rng);
            let u = ctx.alpha_pow(rng.gen_range(0..80));
            let v = position_element(&ctx, rng.gen_range(0..81));
            assert!(c.contains(&affine_perm(&ctx, &y, u, v).unwrap()).unwrap());
            // ideal of M
            let prod = algebra_mul(&ctx, &x, &Codeword::unit(80, 1, 1), Algebra::M).unwrap();
            assert!(cp.contains(&prod).unwrap());
        }
    }

    #[test]
    fn non_delta_closed_set_breaks_affine_invariance() {
        let ctx = ctx81();
        let bad =
            Code::from_defining_set(ctx.clone(), Kind::Extended, &[0, 4, 12, 36, 28]).unwrap();
        assert!(!bad.is_affine_invariant());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut broken = false;
        for _ in 0..20 {
            let y = bad.random_codeword(&mut rng);
            let u = ctx.alpha_pow(rng.gen_range(0..80));
            let v = position_element(&ctx, rng.gen_range(0..80));
            if !bad.contains(&affine_perm(&ctx, &y, u, v).unwrap()).unwrap() {
                broken = true;
            }
        }
        assert!(broken);
    }

    #[test]
    fn spec_json() {
        let s: CodeSpec = serde_json::from_str(r#"{"q":3,"n":4,"r":5,"I":[1]}"#).unwrap();
        assert_eq!(s, CodeSpec::sandwich(3, 4, 5, &[1]));
        assert!(serde_json::from_str::<CodeSpec>(r#"{"q":3,"n":4,"r":5,"J":[1]}"#).is_err());
        let p: CodeSpec =
            serde_json::from_str(r#"{"q":2,"n":4,"r":1,"family":"rm","kind":"punctured"}"#)
                .unwrap();
        assert_eq!(p.build().unwrap().label(), "R_2(1,4)^*");
    }
}
