//! Support search: a codeword of weight w exists iff some w columns of the
//! parity matrix are dependent. Supports are tried in order of size, each
//! subset built column by column against an incremental echelon basis.

use super::{budget_error, is_transitive, DistanceOptions, DistanceReport, LowerMethod};
use crate::codes::Code;
use crate::error::Result;
use crate::field::FqTables;
use crate::linalg::Matrix;

fn binom_f(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |c, i| c * (n - i) as f64 / (i + 1) as f64)
}

/// Supports examined to push the lower bound from `lb` up to `ub`.
pub(super) fn estimate(code: &Code, lb: usize, ub: usize) -> f64 {
    let l = code.length();
    let fixed = usize::from(is_transitive(code));
    (lb.max(1)..ub).map(|w| binom_f(l - fixed, w - fixed)).sum()
}

struct Search<'a> {
    cols: Vec<Vec<u8>>,
    fq: &'a FqTables,
    /// reduced basis vectors with their pivot coordinate
    basis: Vec<(Vec<u8>, usize)>,
    chosen: Vec<usize>,
    nodes: u64,
    limit: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    /// Reduces column `c`; returns false if it depends on the basis.
    fn push(&mut self, c: usize) -> bool {
        let fq = self.fq;
        let mut v = self.cols[c].clone();
        for (b, p) in &self.basis {
            let f = v[*p];
            if f != 0 {
                let nf = fq.neg(f);
                for (x, &y) in v.iter_mut().zip(b) {
                    if y != 0 {
                        *x = fq.add(*x, fq.mul(nf, y));
                    }
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                let inv = fq.inv(v[p]);
                for x in v.iter_mut() {
                    *x = fq.mul(*x, inv);
                }
                self.basis.push((v, p));
                true
            }
        }
    }

    fn dfs(&mut self, start: usize, need: usize) -> Outcome {
        if need == 0 {
            return Outcome::Exhausted;
        }
        let l = self.cols.len();
        for c in start..=l - need {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Outcome::OutOfBudget;
            }
            self.chosen.push(c);
            if !self.push(c) {
                return Outcome::Found;
            }
            match self.dfs(c + 1, need - 1) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.basis.pop();
            self.chosen.pop();
        }
        Outcome::Exhausted
    }
}

pub(super) fn search(
    code: &Code,
    opts: &DistanceOptions,
    report: &mut DistanceReport,
) -> Result<()> {
    let fq = code.ctx().fq();
    let h = code.parity_matrix();
    let l = code.length();
    let cols: Vec<Vec<u8>> = h.transpose().row_iter().map(|r| r.to_vec()).collect();
    let transitive = is_transitive(code);
    let mut s = Search {
        cols,
        fq,
        basis: Vec::new(),
        chosen: Vec::new(),
        nodes: 0,
        limit: opts.budget.saturating_sub(report.nodes),
    };
    let mut w = report.lower_bound.max(1);
    while w < report.upper_bound {
        s.basis.clear();
        s.chosen.clear();
        let outcome = if transitive {
            s.chosen.push(0);
            if s.push(0) {
                s.dfs(1, w - 1)
            } else {
                Outcome::Found
            }
        } else {
            s.dfs(0, w)
        };
        match outcome {
            Outcome::Found => {
                let word = witness(h, &s.chosen, l, fq);
                report.nodes += s.nodes;
                let wt = word.iter().filter(|&&x| x != 0).count();
                report.offer(wt, word);
                report.raise(wt, LowerMethod::Support);
                report.settle();
                return Ok(());
            }
            Outcome::OutOfBudget => {
                report.nodes += s.nodes;
                return Err(budget_error(report));
            }
            Outcome::Exhausted => {
                w += 1;
                report.raise(w, LowerMethod::Support);
            }
        }
    }
    report.nodes += s.nodes;
    report.settle();
    Ok(())
}

/// A nonzero codeword supported on `cols`.
fn witness(h: &Matrix, cols: &[usize], l: usize, fq: &FqTables) -> Vec<u8> {
    let k = h.select_columns(cols).kernel(fq);
    let mut out = vec![0u8; l];
    for (&c, &v) in cols.iter().zip(k.row(0)) {
        out[c] = v;
    }
    out
}
