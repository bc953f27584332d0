//! Standard Young tableaux, jeu-de-taquin demotion, RSK, and the statistics
//! that predict where each irreducible lands in the kernel filtration.

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;

/// A standard Young tableau in English orientation (row 1 on top).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl std::fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = StandardTableau { rows };
        if !t.is_standard() {
            return Err(Error::InvalidPartition(format!("not standard: {t}")));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        StandardTableau { rows: vec![] }
    }

    fn is_standard(&self) -> bool {
        let n: usize = self.rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for r in 0..self.rows.len() {
            if r + 1 < self.rows.len() && self.rows[r + 1].len() > self.rows[r].len() {
                return false;
            }
            for c in 0..self.rows[r].len() {
                let v = self.rows[r][c] as usize;
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
                if c > 0 && self.rows[r][c - 1] >= self.rows[r][c] {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] >= self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u8).collect())
            .expect("tableau rows decrease")
    }

    /// `positions[v-1] = (row, col)` of entry `v`, 0-based.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos[v as usize - 1] = (r, c);
            }
        }
        pos
    }

    /// Descent set: `i` is a descent when `i+1` sits in a strictly lower row
    /// (south); `n` is never a descent.
    pub fn descents(&self) -> Vec<usize> {
        let pos = self.positions();
        (1..self.n())
            .filter(|&i| pos[i].0 > pos[i - 1].0)
            .collect()
    }

    pub fn maj(&self) -> u64 {
        self.descents().iter().map(|&d| d as u64).sum()
    }

    /// The pair `(eig(Q), k(Q))`: the unique level `j` in `{0..n-2} ∪ {n}`
    /// with `1..j-1` ascents and the first ascent past `j` at an even offset
    /// `k`; `k = 0` when there is no descent.
    pub fn eig_and_k(&self) -> (usize, usize) {
        let n = self.n();
        let descents = self.descents();
        let Some(&d1) = descents.first() else {
            return (n, 0);
        };
        // first ascent at or after d1 (n is always an ascent)
        let mut a1 = d1;
        while a1 < n && descents.contains(&a1) {
            a1 += 1;
        }
        let m = a1 - d1;
        if m % 2 == 0 {
            (d1, m)
        } else {
            (d1 - 1, m + 1)
        }
    }

    pub fn eig(&self) -> usize {
        self.eig_and_k().0
    }

    /// Schützenberger demotion: slide the hole from the northwest corner out
    /// by jeu de taquin, then decrement every entry.
    pub fn demote(&self) -> Result<StandardTableau> {
        if self.rows.is_empty() {
            return Err(Error::OutOfRange("demote of empty tableau".into()));
        }
        let mut grid: Vec<Vec<Option<u8>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| Some(v)).collect())
            .collect();
        let (mut r, mut c) = (0usize, 0usize);
        grid[0][0] = None;
        loop {
            let right = grid[r].get(c + 1).copied().flatten();
            let down = grid.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            match (right, down) {
                (None, None) => break,
                (Some(_), None) => {
                    grid[r][c] = grid[r][c + 1].take();
                    c += 1;
                }
                (None, Some(_)) => {
                    grid[r][c] = grid[r + 1][c].take();
                    r += 1;
                }
                (Some(a), Some(b)) => {
                    if a < b {
                        grid[r][c] = grid[r][c + 1].take();
                        c += 1;
                    } else {
                        grid[r][c] = grid[r + 1][c].take();
                        r += 1;
                    }
                }
            }
        }
        // the hole exited at (r, c): remove that cell, shift entries down by 1
        let rows: Vec<Vec<u8>> = grid
            .into_iter()
            .map(|row| row.into_iter().flatten().map(|v| v - 1).collect())
            .filter(|row: &Vec<u8>| !row.is_empty())
            .collect();
        StandardTableau::new(rows)
    }

    pub fn demote_times(&self, j: usize) -> Result<StandardTableau> {
        let mut t = self.clone();
        for _ in 0..j {
            t = t.demote()?;
        }
        Ok(t)
    }

    /// Inverse of `demote_times` on the image of the level-`j` bijection:
    /// outward slides into the cells of `outer / shape(self)` left to right,
    /// add `j` to all entries, fill the vacated first-row cells with `1..j`.
    pub fn promote_into(&self, outer: &Partition) -> Result<StandardTableau> {
        let j = outer.sum() - self.n();
        let inner = self.shape();
        if !outer.horizontal_strip_over(&inner) {
            return Err(Error::InvalidPartition(format!(
                "{outer} over {inner} is not a horizontal strip"
            )));
        }
        let mut grid: Vec<Vec<Option<u8>>> = outer
            .parts()
            .iter()
            .map(|&p| vec![None; p as usize])
            .collect();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                grid[r][c] = Some(v);
            }
        }
        // strip cells, left to right
        let mut strip: Vec<(usize, usize)> = Vec::new();
        for (r, &p) in outer.parts().iter().enumerate() {
            let lo = inner.parts().get(r).copied().unwrap_or(0) as usize;
            for c in lo..p as usize {
                strip.push((r, c));
            }
        }
        strip.sort_by_key(|&(_, c)| c);
        for &(mut r, mut c) in &strip {
            loop {
                let up = if r > 0 { grid[r - 1][c] } else { None };
                let left = if c > 0 { grid[r][c - 1] } else { None };
                match (up, left) {
                    (None, None) => break,
                    (Some(_), None) => {
                        grid[r][c] = grid[r - 1][c].take();
                        r -= 1;
                    }
                    (None, Some(_)) => {
                        grid[r][c] = grid[r][c - 1].take();
                        c -= 1;
                    }
                    (Some(a), Some(b)) => {
                        if a > b {
                            grid[r][c] = grid[r - 1][c].take();
                            r -= 1;
                        } else {
                            grid[r][c] = grid[r][c - 1].take();
                            c -= 1;
                        }
                    }
                }
            }
        }
        // the holes must have collected in the first row
        let rows: Vec<Vec<u8>> = grid
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let filled: Vec<u8> = row.iter().flatten().map(|&v| v + j as u8).collect();
                if r == 0 {
                    let holes = row.iter().filter(|v| v.is_none()).count();
                    if holes != j {
                        return vec![];
                    }
                    let mut out: Vec<u8> = (1..=j as u8).collect();
                    out.extend(filled);
                    out
                } else {
                    filled
                }
            })
            .collect();
        if rows.first().map(|r| r.is_empty()).unwrap_or(true) && j > 0 {
            return Err(Error::InvalidPartition(
                "slides did not vacate the first row".into(),
            ));
        }
        StandardTableau::new(rows.into_iter().filter(|r| !r.is_empty()).collect())
    }

    /// The sign `ε(Q)` defined by shaving descent/ascent pairs down to the
    /// shaven desarrangement tableaux, demoting first when `eig(Q) > 0`.
    pub fn epsilon(&self) -> i8 {
        let n = self.n();
        if n == 0 {
            return 1;
        }
        let (j, _) = self.eig_and_k();
        if j > 0 {
            return self.demote_times(j).expect("nonempty").epsilon();
        }
        if let Some(sign) = self.shaven_sign() {
            return sign;
        }
        // unshaven: remove {n-1, n}; sign flips when they form a descent
        let pos = self.positions();
        let descent_pair = pos[n - 1].0 > pos[n - 2].0;
        let rows: Vec<Vec<u8>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .copied()
                    .filter(|&v| (v as usize) < n - 1)
                    .collect::<Vec<u8>>()
            })
            .filter(|r| !r.is_empty())
            .collect();
        let shaved = StandardTableau::new(rows).expect("shaving keeps standardness");
        let sub = shaved.epsilon();
        if descent_pair {
            -sub
        } else {
            sub
        }
    }

    /// `+1` / `-1` when `self` is one of the shaven desarrangement tableaux,
    /// `None` otherwise.
    fn shaven_sign(&self) -> Option<i8> {
        let n = self.n();
        if n == 0 {
            return Some(1);
        }
        // shapes (2,1^{n-2}) with first row [1, x]
        if n >= 3 && self.rows.len() == n - 1 && self.rows[0].len() == 2 {
            let col_ok = (1..n - 1).all(|r| self.rows[r].len() == 1);
            if col_ok {
                if n % 2 == 1 && self.rows[0][1] as usize == n {
                    // column must be 2..n-1
                    if (1..n - 1).all(|r| self.rows[r][0] as usize == r + 1) {
                        return Some(1);
                    }
                } else if n % 2 == 0 && n >= 4 && self.rows[0][1] as usize == n - 1 {
                    // column 2,...,n-2,n
                    let body = (1..n - 2).all(|r| self.rows[r][0] as usize == r + 1);
                    if body && self.rows[n - 2][0] as usize == n {
                        return Some(-1);
                    }
                }
            }
        }
        None
    }

    /// The shaven desarrangement tableau `Q^{(n)}_+` (n odd) or `Q^{(n)}_-`
    /// (n even) of size `n >= 3`.
    pub fn shaven(n: usize) -> StandardTableau {
        assert!(n >= 3);
        let mut rows = Vec::new();
        if n % 2 == 1 {
            rows.push(vec![1, n as u8]);
            for v in 2..n as u8 {
                rows.push(vec![v]);
            }
        } else {
            rows.push(vec![1, n as u8 - 1]);
            for v in 2..n as u8 - 1 {
                rows.push(vec![v]);
            }
            rows.push(vec![n as u8]);
        }
        StandardTableau::new(rows).expect("shaven tableau is standard")
    }
}

/// All standard Young tableaux of shape `λ`.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    let n = lambda.sum();
    let mut out = Vec::new();
    let mut lens = vec![0usize; lambda.len()];
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); lambda.len()];
    fn place(
        v: u8,
        n: usize,
        lambda: &Partition,
        lens: &mut Vec<usize>,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if v as usize > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..lambda.len() {
            let fits = lens[r] < lambda.parts()[r] as usize
                && (r == 0 || lens[r - 1] > lens[r]);
            if fits {
                rows[r].push(v);
                lens[r] += 1;
                place(v + 1, n, lambda, lens, rows, out);
                lens[r] -= 1;
                rows[r].pop();
            }
        }
    }
    place(1, n, lambda, &mut lens, &mut rows, &mut out);
    out
}

/// All standard Young tableaux of size `n`, across all shapes.
pub fn enumerate_syt_all(n: usize) -> Vec<StandardTableau> {
    partitions_of(n)
        .iter()
        .flat_map(enumerate_syt)
        .collect()
}

/// Robinson–Schensted row insertion: `w -> (P, Q)`.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for i in 1..=w.n() {
        let mut v = w.apply(i) as u8;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![v]);
                q.push(vec![i as u8]);
                break;
            }
            match p[row].iter().position(|&x| x > v) {
                None => {
                    p[row].push(v);
                    q[row].push(i as u8);
                    break;
                }
                Some(idx) => {
                    std::mem::swap(&mut p[row][idx], &mut v);
                    row += 1;
                }
            }
        }
    }
    (
        StandardTableau { rows: p },
        StandardTableau { rows: q },
    )
}

/// The predicted filtration factor at level `j`: the multiset of
/// `(shape(Q), ε(Q))` over standard tableaux with `eig(Q) = j`.
pub fn predicted_factor(n: usize, j: usize) -> Vec<(Partition, i8)> {
    let mut out: Vec<(Partition, i8)> = enumerate_syt_all(n)
        .into_iter()
        .filter(|t| t.eig() == j)
        .map(|t| (t.shape(), t.epsilon()))
        .collect();
    out.sort();
    out
}
