//! Minimum distance and minimum-weight codewords.
//!
//! Three strategies share one enumeration core:
//! * exhaustive: every message on a single systematic matrix;
//! * support: supports of increasing size, tested against the parity matrix;
//! * Brouwer–Zimmermann over disjoint information sets.
//!
//! When the code has a transitive automorphism group (cyclic shifts on a
//! punctured code, the affine group on an affine-invariant extended code) the
//! enumeration bound is averaged over the group: a codeword missed by every
//! matrix in J has at least S_J nonzeros on the union U_J of their
//! information sets, and so does each of its images, hence weight ≥ S_J·L/|U_J|.

mod enumerate;
mod lanes;
mod support;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::bounds::bch_bound;
use crate::codes::{affine_map, permute, Code, Codeword, Kind};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

use enumerate::{best_at_level, collect_at_level, level_cost, InfoSet, Packed};
use lanes::{Binary, Generic, Lanes, Ternary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Exhaustive,
    Support,
    Bz,
}

/// Source of the reported lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerMethod {
    Trivial,
    Bch,
    BzPartial,
    Exhaustive,
    Support,
}

#[derive(Debug, Clone)]
pub struct DistanceOptions {
    pub strategy: Strategy,
    /// Cap on enumerated combinations (or supports).
    pub budget: u64,
    pub parallel: bool,
    pub seed: u64,
    /// Random information sets tried for the initial upper bound.
    pub random_iters: usize,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            strategy: Strategy::Auto,
            budget: 20_000_000_000,
            parallel: true,
            seed: 0x5eed,
            random_iters: 300,
        }
    }
}

/// Largest q^K for which the exhaustive strategy is chosen automatically.
pub const EXHAUSTIVE_LIMIT: f64 = (1u64 << 24) as f64;

#[derive(Debug, Clone, Serialize)]
pub struct DistanceReport {
    pub code: String,
    pub length: usize,
    pub dimension: usize,
    pub lower_bound: usize,
    pub lower_method: LowerMethod,
    pub upper_bound: usize,
    #[serde(skip)]
    pub witness: Option<Codeword>,
    /// The witness as a digit string.
    #[serde(rename = "witness")]
    pub witness_digits: Option<String>,
    pub exact: Option<usize>,
    pub strategy: Strategy,
    /// Levels completed on each information set (BZ and exhaustive).
    pub levels: Vec<usize>,
    pub nodes: u64,
    #[serde(skip)]
    q: u32,
}

impl DistanceReport {
    fn new(code: &Code, strategy: Strategy) -> Self {
        DistanceReport {
            code: code.label(),
            length: code.length(),
            dimension: code.dimension(),
            lower_bound: 1,
            lower_method: LowerMethod::Trivial,
            upper_bound: code.length(),
            witness: None,
            witness_digits: None,
            exact: None,
            strategy,
            levels: Vec::new(),
            nodes: 0,
            q: code.q(),
        }
    }

    fn offer(&mut self, weight: usize, word: Vec<u8>) {
        if weight > 0 && (self.witness.is_none() || weight < self.upper_bound) {
            self.upper_bound = weight;
            let w = Codeword::new(word);
            self.witness_digits = Some(w.to_digit_string(self.q));
            self.witness = Some(w);
        }
    }

    fn raise(&mut self, lb: usize, method: LowerMethod) {
        if lb > self.lower_bound {
            self.lower_bound = lb;
            self.lower_method = method;
        }
    }

    fn settle(&mut self) -> bool {
        if self.witness.is_some() && self.lower_bound >= self.upper_bound {
            self.lower_bound = self.upper_bound;
            self.exact = Some(self.upper_bound);
            true
        } else {
            false
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

enum Backend {
    Binary(Binary),
    Ternary(Ternary),
    Generic(Generic),
}

impl Backend {
    fn for_code(code: &Code) -> Backend {
        let len = code.length();
        match code.q() {
            2 => Backend::Binary(Binary::new(len)),
            3 => Backend::Ternary(Ternary::new(len)),
            _ => Backend::Generic(Generic::new(len, code.ctx().fq())),
        }
    }
}

macro_rules! with_lanes {
    ($backend:expr, $l:ident => $body:expr) => {
        match $backend {
            Backend::Binary($l) => $body,
            Backend::Ternary($l) => $body,
            Backend::Generic($l) => $body,
        }
    };
}

/// True when the code admits a known transitive automorphism group.
pub fn is_transitive(code: &Code) -> bool {
    match code.kind() {
        Kind::Punctured => true,
        Kind::Extended => code.is_affine_invariant(),
    }
}

fn weight_of(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn q_pow_k(code: &Code) -> f64 {
    (code.q() as f64).powi(code.dimension() as i32)
}

/// Minimum distance with the requested strategy. Errors with
/// [`Error::BudgetExceeded`] (carrying the partial report) when the node
/// budget runs out before the bounds meet.
pub fn min_distance(code: &Code, opts: &DistanceOptions) -> Result<DistanceReport> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::IneligibleCode(format!(
            "{} is the zero code",
            code.label()
        )));
    }
    let gen = code.generator_matrix();
    let fq = code.ctx().fq();
    let mut report = DistanceReport::new(code, opts.strategy);
    let bch = bch_bound(code);
    report.raise(bch, LowerMethod::Bch);
    for row in gen.row_iter() {
        report.offer(weight_of(row), row.to_vec());
    }
    if report.settle() {
        return Ok(report);
    }

    let strategy = match opts.strategy {
        Strategy::Auto if q_pow_k(code) <= EXHAUSTIVE_LIMIT => Strategy::Exhaustive,
        s => s,
    };
    let backend = Backend::for_code(code);
    if strategy != Strategy::Exhaustive {
        with_lanes!(&backend, l => random_search(l, code, gen, opts, &mut report));
        if report.settle() {
            report.strategy = strategy;
            return Ok(report);
        }
    }
    let strategy = match strategy {
        Strategy::Auto => {
            let sets = info_sets(gen, fq);
            let bz = plan_cost(code, &sets, &report);
            let sup = support::estimate(code, report.lower_bound, report.upper_bound);
            let penalty = ((code.length() - k) as f64 / 64.0).max(1.0);
            if sup * penalty < bz {
                Strategy::Support
            } else {
                Strategy::Bz
            }
        }
        s => s,
    };
    report.strategy = strategy;
    match strategy {
        Strategy::Exhaustive => {
            with_lanes!(&backend, l => exhaustive(l, code, gen, opts, &mut report))?
        }
        Strategy::Support => support::search(code, opts, &mut report)?,
        Strategy::Bz | Strategy::Auto => {
            with_lanes!(&backend, l => bz(l, code, gen, opts, &mut report))?
        }
    }
    Ok(report)
}

fn budget_error(report: &DistanceReport) -> Error {
    Error::BudgetExceeded(Box::new(report.clone()))
}

/// Leon-style search: random column orders, levels 1 and 2 only.
fn random_search<L: Lanes>(
    lanes: &L,
    code: &Code,
    gen: &Matrix,
    opts: &DistanceOptions,
    report: &mut DistanceReport,
) {
    let fq = code.ctx().fq();
    let k = gen.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cols: Vec<usize> = (0..gen.cols()).collect();
    let top = if level_cost(k, 2, code.q()) <= 50_000.0 {
        2
    } else {
        1
    };
    for _ in 0..opts.random_iters {
        if report.lower_bound >= report.upper_bound {
            break;
        }
        cols.shuffle(&mut rng);
        let set = InfoSet::new(gen, &cols, fq);
        let packed = Packed::new(lanes, &set, code.q());
        for t in 1..=top.min(k) {
            let (best, nodes) = best_at_level(&packed, t, false);
            report.nodes += nodes;
            if let Some((wt, combo)) = best {
                if (wt as usize) < report.upper_bound {
                    report.offer(wt as usize, set.combine(&combo, fq));
                }
            }
        }
    }
}

fn exhaustive<L: Lanes>(
    lanes: &L,
    code: &Code,
    gen: &Matrix,
    opts: &DistanceOptions,
    report: &mut DistanceReport,
) -> Result<()> {
    let fq = code.ctx().fq();
    let k = gen.rows();
    let set = InfoSet::new(gen, &(0..gen.cols()).collect::<Vec<_>>(), fq);
    let packed = Packed::new(lanes, &set, code.q());
    report.levels = vec![0];
    for t in 1..=k {
        // every unseen word has at least t nonzeros on the information set
        report.raise(t, LowerMethod::Exhaustive);
        if report.settle() {
            return Ok(());
        }
        if report.nodes as f64 + level_cost(k, t, code.q()) > opts.budget as f64 {
            return Err(budget_error(report));
        }
        let (best, nodes) = best_at_level(&packed, t, opts.parallel);
        report.nodes += nodes;
        report.levels[0] = t;
        if let Some((wt, combo)) = best {
            report.offer(wt as usize, set.combine(&combo, fq));
        }
    }
    report.raise(report.upper_bound, LowerMethod::Exhaustive);
    report.settle();
    Ok(())
}

/// Greedy disjoint information sets: each reduction prefers columns not yet used.
fn info_sets(gen: &Matrix, fq: &crate::field::FqTables) -> Vec<InfoSet> {
    let l = gen.cols();
    let mut used = vec![false; l];
    let mut sets = Vec::new();
    loop {
        let free: Vec<usize> = (0..l).filter(|&c| !used[c]).collect();
        if free.is_empty() {
            break;
        }
        let set = InfoSet::new(gen, &free, fq);
        if set.rank() == 0 {
            break;
        }
        for &c in &set.pivots {
            used[c] = true;
        }
        sets.push(set);
    }
    sets
}

/// Real-valued enumeration bound for levels `t` on sets of the given ranks.
fn enum_bound(t: &[usize], ranks: &[usize], k: usize, l: usize, transitive: bool) -> f64 {
    let contrib: Vec<f64> = t
        .iter()
        .zip(ranks)
        .map(|(&tj, &rj)| (tj as i64 + 1 - (k - rj) as i64).max(0) as f64)
        .collect();
    let plain: f64 = contrib.iter().sum();
    if !transitive {
        return plain.max(1.0);
    }
    let m = t.len();
    let mut best = plain.max(1.0);
    if m <= 12 {
        for mask in 1u32..(1 << m) {
            let (mut s, mut u) = (0.0, 0usize);
            for j in 0..m {
                if mask >> j & 1 == 1 {
                    s += contrib[j];
                    u += ranks[j];
                }
            }
            if u > 0 {
                best = best.max(s * l as f64 / u as f64);
            }
        }
    } else {
        let (mut s, mut u) = (0.0, 0usize);
        for j in 0..m {
            s += contrib[j];
            u += ranks[j];
            best = best.max(s * l as f64 / u as f64);
        }
    }
    best
}

/// Integer lower bound: ceiling of the real bound, guarding float noise.
fn int_bound(x: f64) -> usize {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r as usize
    } else {
        x.ceil() as usize
    }
}

/// Picks the next set to deepen: best bound gain per combination, else the cheapest.
fn next_step(
    t: &[usize],
    ranks: &[usize],
    k: usize,
    l: usize,
    q: u32,
    transitive: bool,
) -> Option<usize> {
    let base = enum_bound(t, ranks, k, l, transitive);
    let mut best: Option<(f64, f64, usize)> = None;
    let mut cheapest: Option<(f64, usize)> = None;
    for j in 0..t.len() {
        if t[j] >= k {
            continue;
        }
        let cost = level_cost(k, t[j] + 1, q);
        let mut tt = t.to_vec();
        tt[j] += 1;
        let gain = enum_bound(&tt, ranks, k, l, transitive) - base;
        if gain > 1e-12 {
            let score = gain / cost;
            if best.is_none_or(|(s, _, _)| score > s) {
                best = Some((score, cost, j));
            }
        }
        if cheapest.is_none_or(|(c, _)| cost < c) {
            cheapest = Some((cost, j));
        }
    }
    best.map(|b| b.2).or(cheapest.map(|c| c.1))
}

/// Combinations the greedy schedule needs before the bound meets the current
/// upper bound.
fn plan_cost(code: &Code, sets: &[InfoSet], report: &DistanceReport) -> f64 {
    let k = code.dimension();
    let l = code.length();
    let ranks: Vec<usize> = sets.iter().map(|s| s.rank()).collect();
    let transitive = is_transitive(code);
    let mut t = vec![0usize; sets.len()];
    let mut cost = 0.0;
    loop {
        let lb = int_bound(enum_bound(&t, &ranks, k, l, transitive)).max(report.lower_bound);
        if lb >= report.upper_bound || t.iter().any(|&x| x >= k) {
            return cost;
        }
        let Some(j) = next_step(&t, &ranks, k, l, code.q(), transitive) else {
            return cost;
        };
        t[j] += 1;
        cost += level_cost(k, t[j], code.q());
        if cost > 1e18 {
            return cost;
        }
    }
}

fn bz<L: Lanes>(
    lanes: &L,
    code: &Code,
    gen: &Matrix,
    opts: &DistanceOptions,
    report: &mut DistanceReport,
) -> Result<()> {
    let fq = code.ctx().fq();
    let k = gen.rows();
    let l = gen.cols();
    let transitive = is_transitive(code);
    let sets = info_sets(gen, fq);
    let packed: Vec<Packed<'_, L>> = sets
        .iter()
        .map(|s| Packed::new(lanes, s, code.q()))
        .collect();
    let ranks: Vec<usize> = sets.iter().map(|s| s.rank()).collect();
    let mut t = vec![0usize; sets.len()];
    report.levels = t.clone();
    for set in &sets {
        for i in 0..k {
            let row = set.rows.row(i);
            report.offer(weight_of(row), row.to_vec());
        }
    }
    loop {
        if t.iter().any(|&x| x >= k) {
            // one matrix fully enumerated: every codeword has been seen
            report.raise(report.upper_bound, LowerMethod::BzPartial);
        } else {
            let lb = int_bound(enum_bound(&t, &ranks, k, l, transitive));
            report.raise(lb, LowerMethod::BzPartial);
        }
        if report.settle() {
            return Ok(());
        }
        let Some(j) = next_step(&t, &ranks, k, l, code.q(), transitive) else {
            return Err(budget_error(report));
        };
        let cost = level_cost(k, t[j] + 1, code.q());
        if report.nodes as f64 + cost > opts.budget as f64 {
            return Err(budget_error(report));
        }
        let (best, nodes) = best_at_level(&packed[j], t[j] + 1, opts.parallel);
        report.nodes += nodes;
        t[j] += 1;
        report.levels = t.clone();
        if let Some((wt, combo)) = best {
            if (wt as usize) < report.upper_bound {
                report.offer(wt as usize, sets[j].combine(&combo, fq));
            }
        }
    }
}

/// Every codeword of weight exactly `w` (nonzero words only), sorted.
///
/// Small codes are scanned exhaustively. Otherwise, for codes with a
/// transitive group, some image of each weight-w word has at most ⌊wK/L⌋
/// nonzeros on one information set; those are enumerated and the result is
/// closed under the group and under scalars.
pub fn min_weight_codewords(
    code: &Code,
    w: usize,
    opts: &DistanceOptions,
) -> Result<Vec<Codeword>> {
    let k = code.dimension();
    if k == 0 || w == 0 {
        return Ok(Vec::new());
    }
    let gen = code.generator_matrix();
    let fq = code.ctx().fq();
    let l = code.length();
    let set = InfoSet::new(gen, &(0..l).collect::<Vec<_>>(), fq);
    let exhaustive = q_pow_k(code) <= EXHAUSTIVE_LIMIT;
    let transitive = is_transitive(code);
    let top = if exhaustive {
        w.min(k)
    } else if transitive {
        (w * k / l).min(k)
    } else {
        return Err(Error::Unsupported(format!(
            "{}: too large for an exhaustive scan and no transitive group is known",
            code.label()
        )));
    };
    let total: f64 = (1..=top).map(|t| level_cost(k, t, code.q())).sum();
    if total > opts.budget as f64 {
        let mut report = DistanceReport::new(code, Strategy::Bz);
        report.nodes = 0;
        return Err(budget_error(&report));
    }
    let backend = Backend::for_code(code);
    let mut found: HashSet<Vec<u8>> = HashSet::new();
    with_lanes!(&backend, lanes => {
        let packed = Packed::new(lanes, &set, code.q());
        for t in 1..=top {
            let (hits, _) = collect_at_level(&packed, t, w as u32, opts.parallel);
            for combo in hits {
                found.insert(set.combine(&combo, fq));
            }
        }
    });
    let mut words: HashSet<Vec<u8>> = HashSet::new();
    for v in found {
        for c in fq.units() {
            words.insert(v.iter().map(|&x| fq.mul(c, x)).collect());
        }
    }
    if !exhaustive {
        words = group_closure(code, words);
    }
    let mut out: Vec<Codeword> = words.into_iter().map(Codeword::new).collect();
    out.sort();
    Ok(out)
}

fn group_closure(code: &Code, seed: HashSet<Vec<u8>>) -> HashSet<Vec<u8>> {
    let ctx = code.ctx();
    let gens: Vec<Vec<usize>> = match code.kind() {
        Kind::Punctured => {
            let n = code.length();
            vec![(0..n).map(|j| (j + 1) % n).collect()]
        }
        Kind::Extended => vec![
            affine_map(ctx, ctx.alpha(), crate::field::Elt::ZERO).expect("α ≠ 0"),
            affine_map(ctx, crate::field::Elt::ONE, crate::field::Elt::ONE).expect("1 ≠ 0"),
        ],
    };
    let mut seen = seed.clone();
    let mut stack: Vec<Vec<u8>> = seed.into_iter().collect();
    while let Some(v) = stack.pop() {
        let word = Codeword::new(v);
        for g in &gens {
            let img = permute(&word, g).into_symbols();
            if seen.insert(img.clone()) {
                stack.push(img);
            }
        }
    }
    seen
}
