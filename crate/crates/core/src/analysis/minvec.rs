//! Predicted minimum vectors for the two structured cases:
//! (i) r = ρ(q−1)+1, words λ·1_V over GF(q)-subspaces of dimension n−ρ;
//! (ii) r = ρ(q−1) with ρ = 2ρ' even and {0,2} ∩ I = {0}, words over
//! GF(q^2)-subspaces of dimension m−ρ'. Extended words run over all cosets.

use serde::Serialize;

use super::ms::case_i_rho;
use super::subspace::{enumerate_subspaces, gaussian_binomial, Base};
use crate::codes::{element_position, Code, Codeword, Family};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinVecCase {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    Ii,
    #[serde(rename = "none")]
    None,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinVecPrediction {
    pub case: MinVecCase,
    pub rho: Option<u32>,
    pub base: Option<Base>,
    pub subspace_dim: Option<u32>,
    pub punctured_weight: Option<usize>,
    pub extended_weight: Option<usize>,
    #[serde(skip)]
    pub punctured: Vec<Codeword>,
    #[serde(skip)]
    pub extended: Vec<Codeword>,
    pub punctured_count: usize,
    pub extended_count: usize,
}

impl MinVecPrediction {
    fn none() -> Self {
        MinVecPrediction {
            case: MinVecCase::None,
            rho: None,
            base: None,
            subspace_dim: None,
            punctured_weight: None,
            extended_weight: None,
            punctured: Vec::new(),
            extended: Vec::new(),
            punctured_count: 0,
            extended_count: 0,
        }
    }

    /// The set matching the code's own kind.
    pub fn for_kind(&self, code: &Code) -> &[Codeword] {
        match code.kind() {
            crate::codes::Kind::Punctured => &self.punctured,
            crate::codes::Kind::Extended => &self.extended,
        }
    }
}

/// ρ when the code is eligible for case (ii).
pub fn case_ii_rho(code: &Code) -> Option<u32> {
    let q = code.q() as i64;
    let n = code.ctx().n();
    let (Family::Sandwich, Some(r)) = (code.family(), code.r()) else {
        return None;
    };
    let i = code.i_set();
    if r < 0 || r % (q - 1) != 0 {
        return None;
    }
    let rho = (r / (q - 1)) as u32;
    (rho.is_multiple_of(2) && rho < n && i.contains(&0) && !i.contains(&2)).then_some(rho)
}

/// Default cap on the number of predicted words.
pub const PREDICTION_CAP: u128 = 2_000_000;

pub fn predicted_min_vectors(code: &Code, cap: u128) -> Result<MinVecPrediction> {
    let ctx = code.ctx();
    let n = ctx.n();
    let q = code.q();
    let (case, rho, base, dim) = if let Some(rho) = case_i_rho(code) {
        (MinVecCase::I, rho, Base::Fq, n - rho)
    } else if let Some(rho) = case_ii_rho(code) {
        (MinVecCase::Ii, rho, Base::Fq2, (n - rho) / 2)
    } else {
        return Ok(MinVecPrediction::none());
    };
    let subspaces = gaussian_binomial(base.ambient_dim(n), dim, base.order(q));
    let per = (q as u128 - 1) * (1 + (q as u128).pow(rho));
    if subspaces * per > cap {
        return Err(Error::TooMany {
            count: subspaces * per,
            cap,
        });
    }
    let big_n = ctx.big_n() as usize;
    let mut punctured = Vec::new();
    let mut extended = Vec::new();
    for v in enumerate_subspaces(ctx, base, dim, cap)? {
        for lam in 1..q as u8 {
            let mut p = vec![0u8; big_n];
            for g in v.nonzero() {
                p[element_position(ctx, g)] = lam;
            }
            punctured.push(Codeword::new(p));
            for h in v.coset_reps(ctx) {
                let mut e = vec![0u8; big_n + 1];
                for &g in v.elements() {
                    e[element_position(ctx, ctx.add(g, h))] = lam;
                }
                extended.push(Codeword::new(e));
            }
        }
    }
    punctured.sort();
    extended.sort();
    let side = (q as usize).pow(n - rho);
    Ok(MinVecPrediction {
        case,
        rho: Some(rho),
        base: Some(base),
        subspace_dim: Some(dim),
        punctured_weight: Some(side - 1),
        extended_weight: Some(side),
        punctured_count: punctured.len(),
        extended_count: extended.len(),
        punctured,
        extended,
    })
}
