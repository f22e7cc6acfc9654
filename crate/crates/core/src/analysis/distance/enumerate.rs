//! Row-combination enumeration over one systematic generator matrix.

use rayon::prelude::*;

use super::lanes::Lanes;
use crate::field::FqTables;
use crate::linalg::Matrix;

/// A generator matrix in reduced echelon form whose first `rank` rows have
/// their pivots on the information columns `pivots`. Only the remaining
/// columns are packed: a combination's weight is the number of chosen pivot
/// rows plus the packed weight.
pub(crate) struct InfoSet {
    pub rows: Matrix,
    pub pivots: Vec<usize>,
    pub rest: Vec<usize>,
}

impl InfoSet {
    /// Reduces `gen` with `priority` columns first; pivots landing in
    /// `priority` form the information set.
    pub fn new(gen: &Matrix, priority: &[usize], fq: &FqTables) -> InfoSet {
        let l = gen.cols();
        let mut in_prio = vec![false; l];
        for &c in priority {
            in_prio[c] = true;
        }
        let mut order = priority.to_vec();
        order.extend((0..l).filter(|&c| !in_prio[c]));
        let mut rows = gen.clone();
        let all = rows.rref_with_order(fq, &order);
        let pivots: Vec<usize> = all.iter().copied().filter(|&c| in_prio[c]).collect();
        let mut is_piv = vec![false; l];
        for &c in &pivots {
            is_piv[c] = true;
        }
        let rest = (0..l).filter(|&c| !is_piv[c]).collect();
        InfoSet { rows, pivots, rest }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn k(&self) -> usize {
        self.rows.rows()
    }

    /// Σ c·row_i over a combination.
    pub fn combine(&self, combo: &[(usize, u8)], fq: &FqTables) -> Vec<u8> {
        let mut out = vec![0u8; self.rows.cols()];
        for &(i, c) in combo {
            for (o, &v) in out.iter_mut().zip(self.rows.row(i)) {
                if v != 0 {
                    *o = fq.add(*o, fq.mul(c, v));
                }
            }
        }
        out
    }
}

/// Packed view of an [`InfoSet`] for one backend.
pub(crate) struct Packed<'a, L: Lanes> {
    lanes: &'a L,
    data: Vec<L::W>,
    k: usize,
    rank: usize,
    q: u8,
}

impl<'a, L: Lanes> Packed<'a, L> {
    pub fn new(lanes: &'a L, set: &InfoSet, q: u32) -> Self {
        let w = lanes.width();
        let k = set.k();
        let mut data = vec![L::W::default(); k * w];
        let mut buf = vec![0u8; set.rest.len()];
        for i in 0..k {
            let row = set.rows.row(i);
            for (slot, &c) in buf.iter_mut().zip(&set.rest) {
                *slot = row[c];
            }
            lanes.pack(&buf, &mut data[i * w..(i + 1) * w]);
        }
        Packed {
            lanes,
            data,
            k,
            rank: set.rank(),
            q: q as u8,
        }
    }

    fn row(&self, i: usize) -> &[L::W] {
        let w = self.lanes.width();
        &self.data[i * w..(i + 1) * w]
    }

    /// Visits every combination of `t` rows whose smallest index is `first`,
    /// with coefficient 1 on `first` and any nonzero coefficient elsewhere.
    /// Returns the number of combinations visited.
    pub fn level_from<F: FnMut(u32, &[(usize, u8)])>(
        &self,
        t: usize,
        first: usize,
        visit: &mut F,
    ) -> u64 {
        if t == 0 || first + t > self.k {
            return 0;
        }
        let w = self.lanes.width();
        let mut bufs = vec![L::W::default(); (t + 1) * w];
        bufs[w..2 * w].copy_from_slice(self.row(first));
        let mut combo = Vec::with_capacity(t);
        combo.push((first, 1u8));
        let mut nodes = 0;
        let base = usize::from(first < self.rank);
        self.dfs(
            1,
            t,
            first + 1,
            base,
            &mut bufs,
            &mut combo,
            visit,
            &mut nodes,
        );
        nodes
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs<F: FnMut(u32, &[(usize, u8)])>(
        &self,
        depth: usize,
        t: usize,
        start: usize,
        sys: usize,
        bufs: &mut [L::W],
        combo: &mut Vec<(usize, u8)>,
        visit: &mut F,
        nodes: &mut u64,
    ) {
        let w = self.lanes.width();
        if depth == t {
            *nodes += 1;
            let wt = sys as u32 + self.lanes.weight(&bufs[depth * w..(depth + 1) * w]);
            visit(wt, combo);
            return;
        }
        let remaining = t - depth;
        for i in start..=self.k - remaining {
            let sys_i = sys + usize::from(i < self.rank);
            for c in 1..self.q {
                let (head, tail) = bufs.split_at_mut((depth + 1) * w);
                self.lanes
                    .add_scaled(&mut tail[..w], &head[depth * w..], self.row(i), c);
                combo.push((i, c));
                self.dfs(depth + 1, t, i + 1, sys_i, bufs, combo, visit, nodes);
                combo.pop();
            }
        }
    }
}

/// Number of combinations at level t: C(k, t)·(q−1)^{t−1}.
pub(crate) fn level_cost(k: usize, t: usize, q: u32) -> f64 {
    if t == 0 || t > k {
        return 0.0;
    }
    let mut c = 1.0f64;
    for i in 0..t {
        c = c * (k - i) as f64 / (i + 1) as f64;
    }
    c * ((q - 1) as f64).powi(t as i32 - 1)
}

/// Rows with their nonzero coefficients.
pub(crate) type Combination = Vec<(usize, u8)>;

/// Lightest combination at level t: (weight, combination), ties broken by the
/// smallest first row and then by visiting order. Also returns the node count.
pub(crate) fn best_at_level<L: Lanes>(
    packed: &Packed<'_, L>,
    t: usize,
    parallel: bool,
) -> (Option<(u32, Combination)>, u64) {
    let task = |first: usize| {
        let mut best: Option<(u32, Combination)> = None;
        let nodes = packed.level_from(t, first, &mut |wt, combo| {
            if best.as_ref().is_none_or(|(b, _)| wt < *b) {
                best = Some((wt, combo.to_vec()));
            }
        });
        (best, nodes)
    };
    let results: Vec<_> = if parallel {
        (0..packed.k).into_par_iter().map(task).collect()
    } else {
        (0..packed.k).map(task).collect()
    };
    let mut best: Option<(u32, Vec<(usize, u8)>)> = None;
    let mut nodes = 0;
    for (b, n) in results {
        nodes += n;
        if let Some((wt, combo)) = b {
            if best.as_ref().is_none_or(|(bw, _)| wt < *bw) {
                best = Some((wt, combo));
            }
        }
    }
    (best, nodes)
}

/// All combinations at level t whose weight equals `target`, in index order.
pub(crate) fn collect_at_level<L: Lanes>(
    packed: &Packed<'_, L>,
    t: usize,
    target: u32,
    parallel: bool,
) -> (Vec<Vec<(usize, u8)>>, u64) {
    let task = |first: usize| {
        let mut hits = Vec::new();
        let nodes = packed.level_from(t, first, &mut |wt, combo| {
            if wt == target {
                hits.push(combo.to_vec());
            }
        });
        (hits, nodes)
    };
    let results: Vec<_> = if parallel {
        (0..packed.k).into_par_iter().map(task).collect()
    } else {
        (0..packed.k).map(task).collect()
    };
    let mut all = Vec::new();
    let mut nodes = 0;
    for (h, n) in results {
        nodes += n;
        all.extend(h);
    }
    (all, nodes)
}

#[cfg(test)]
mod tests {
    use super::super::lanes::{Generic, Ternary};
    use super::*;
    use crate::codes::CodeSpec;

    #[test]
    fn level_counts_match_formula() {
        let code = CodeSpec::sandwich(3, 4, 1, &[1]).build().unwrap();
        let g = code.generator_matrix();
        let fq = code.ctx().fq();
        let set = InfoSet::new(g, &(0..81).collect::<Vec<_>>(), fq);
        assert_eq!(set.rank(), 5);
        let lanes = Ternary::new(set.rest.len());
        let packed = Packed::new(&lanes, &set, 3);
        for t in 1..=5 {
            let (_, nodes) = collect_at_level(&packed, t, 0, false);
            assert_eq!(nodes as f64, level_cost(5, t, 3));
        }
    }

    #[test]
    fn weights_match_direct_combination() {
        let code = CodeSpec::sandwich(3, 4, 2, &[0]).build().unwrap();
        let g = code.generator_matrix();
        let fq = code.ctx().fq();
        let prio: Vec<usize> = (40..81).collect();
        let set = InfoSet::new(g, &prio, fq);
        let lanes = Ternary::new(set.rest.len());
        let generic = Generic::new(set.rest.len(), fq);
        let packed = Packed::new(&lanes, &set, 3);
        let packed_g = Packed::new(&generic, &set, 3);
        for t in 1..=3 {
            let mut seen = Vec::new();
            packed.level_from(t, 0, &mut |wt, combo| {
                let word = set.combine(combo, fq);
                assert_eq!(wt as usize, word.iter().filter(|&&v| v != 0).count());
                seen.push(wt);
            });
            let mut seen_g = Vec::new();
            packed_g.level_from(t, 0, &mut |wt, _| seen_g.push(wt));
            assert_eq!(seen, seen_g);
        }
    }
}
