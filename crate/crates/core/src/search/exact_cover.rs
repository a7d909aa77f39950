//! Algorithm X over dancing links.
//!
//! Primary columns must be covered exactly once; secondary columns at most
//! once. With no secondary columns this is plain exact cover.

use alloc::vec::Vec;

const ROOT: usize = 0;

/// Sparse 0/1 matrix in dancing-links form.
#[derive(Debug, Clone)]
pub struct ExactCover {
    primary: usize,
    columns: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    rows: usize,
}

impl ExactCover {
    /// Columns `0..primary` are primary, `primary..primary + secondary` secondary.
    pub fn new(primary: usize, secondary: usize) -> Self {
        let columns = primary + secondary;
        let n = columns + 1;
        let mut m = ExactCover {
            primary,
            columns,
            left: Vec::with_capacity(n),
            right: Vec::with_capacity(n),
            up: Vec::with_capacity(n),
            down: Vec::with_capacity(n),
            col: Vec::with_capacity(n),
            row: Vec::with_capacity(n),
            size: alloc::vec![0; n],
            rows: 0,
        };
        // Node 0 is the root; node c + 1 heads column c.
        for i in 0..n {
            m.left.push(i);
            m.right.push(i);
            m.up.push(i);
            m.down.push(i);
            m.col.push(i);
            m.row.push(usize::MAX);
        }
        for c in 0..primary {
            let h = c + 1;
            let last = m.left[ROOT];
            m.right[last] = h;
            m.left[h] = last;
            m.right[h] = ROOT;
            m.left[ROOT] = h;
        }
        m
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn primary_columns(&self) -> usize {
        self.primary
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    /// Adds a row covering `cols` and returns its index. Empty rows are
    /// recorded but can never be chosen.
    pub fn add_row(&mut self, cols: &[usize]) -> usize {
        let r = self.rows;
        self.rows += 1;
        let mut first: Option<usize> = None;
        for &c in cols {
            assert!(c < self.columns, "column {c} out of range");
            let h = c + 1;
            let x = self.left.len();
            let above = self.up[h];
            self.up.push(above);
            self.down.push(h);
            self.down[above] = x;
            self.up[h] = x;
            self.col.push(h);
            self.row.push(r);
            self.size[h] += 1;
            match first {
                None => {
                    self.left.push(x);
                    self.right.push(x);
                    first = Some(x);
                }
                Some(f) => {
                    let last = self.left[f];
                    self.left.push(last);
                    self.right.push(f);
                    self.right[last] = x;
                    self.left[f] = x;
                }
            }
        }
        r
    }

    fn cover(&mut self, h: usize) {
        let (l, r) = (self.left[h], self.right[h]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[h];
        while i != h {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, h: usize) {
        let mut i = self.up[h];
        while i != h {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.col[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[h], self.right[h]);
        self.right[l] = h;
        self.left[r] = h;
    }

    /// Calls `visit` with the row set of every solution. Returning `false`
    /// from `visit` stops the enumeration.
    pub fn for_each_solution(&mut self, mut visit: impl FnMut(&[usize]) -> bool) {
        let mut chosen = Vec::new();
        self.search(&mut chosen, &mut visit);
    }

    fn search(
        &mut self,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if self.right[ROOT] == ROOT {
            let mut rows: Vec<usize> = chosen.iter().map(|&x| self.row[x]).collect();
            rows.sort_unstable();
            return visit(&rows);
        }
        // Column with fewest remaining rows; first one on ties.
        let mut best = self.right[ROOT];
        let mut h = self.right[best];
        while h != ROOT {
            if self.size[h] < self.size[best] {
                best = h;
            }
            h = self.right[h];
        }
        if self.size[best] == 0 {
            return true;
        }
        self.cover(best);
        let mut keep_going = true;
        let mut r = self.down[best];
        while r != best && keep_going {
            chosen.push(r);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.col[j]);
                j = self.right[j];
            }
            keep_going = self.search(chosen, visit);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.col[j]);
                j = self.left[j];
            }
            chosen.pop();
            r = self.down[r];
        }
        self.uncover(best);
        keep_going
    }

    pub fn solutions(&mut self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_solution(|rows| {
            out.push(rows.to_vec());
            true
        });
        out
    }

    pub fn count(&mut self) -> usize {
        let mut n = 0;
        self.for_each_solution(|_| {
            n += 1;
            true
        });
        n
    }
}

/// All row subsets covering every column exactly once.
///
/// Column ids are taken from the rows; the column count is one past the
/// largest id seen (at least `min_columns`). Each solution lists row
/// indices in ascending order.
pub fn exact_cover_solutions(min_columns: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let columns = rows
        .iter()
        .flatten()
        .map(|&c| c + 1)
        .max()
        .unwrap_or(0)
        .max(min_columns);
    let mut m = ExactCover::new(columns, 0);
    for r in rows {
        m.add_row(r);
    }
    m.solutions()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    /// Every subset of rows checked directly.
    fn brute_force(columns: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << rows.len()) {
            let mut hits = vec![0u32; columns];
            for (i, r) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for &c in r {
                        hits[c] += 1;
                    }
                }
            }
            if hits.iter().all(|&h| h == 1) {
                out.push((0..rows.len()).filter(|i| mask >> i & 1 == 1).collect());
            }
        }
        out
    }

    fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        v.sort();
        v
    }

    #[test]
    fn identity_matrix() {
        let rows = vec![vec![0], vec![1], vec![2]];
        assert_eq!(exact_cover_solutions(3, &rows), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn classic_seven_column_universe() {
        // Columns A..G = 0..6.
        let rows = vec![
            vec![2, 4, 5],
            vec![0, 3, 6],
            vec![1, 2, 5],
            vec![0, 3],
            vec![1, 6],
            vec![3, 4, 6],
        ];
        let expected = brute_force(7, &rows);
        assert_eq!(expected, vec![vec![0, 3, 4]]);
        assert_eq!(exact_cover_solutions(7, &rows), expected);
    }

    #[test]
    fn no_rows_no_cover() {
        assert!(exact_cover_solutions(3, &[]).is_empty());
    }

    #[test]
    fn secondary_columns_at_most_once() {
        // Two primaries, one shared secondary: rows {0,s} and {1,s} clash.
        let mut m = ExactCover::new(2, 1);
        m.add_row(&[0, 2]);
        m.add_row(&[1, 2]);
        m.add_row(&[1]);
        assert_eq!(m.solutions(), vec![vec![0, 2]]);
    }

    #[test]
    fn early_stop() {
        let rows = vec![vec![0], vec![0], vec![0]];
        let mut m = ExactCover::new(1, 0);
        for r in &rows {
            m.add_row(r);
        }
        let mut seen = 0;
        m.for_each_solution(|_| {
            seen += 1;
            seen < 2
        });
        assert_eq!(seen, 2);
        assert_eq!(m.count(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn agrees_with_brute_force(
            columns in 1usize..7,
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..7, 1..4), 0..15),
        ) {
            let rows: Vec<Vec<usize>> = raw
                .into_iter()
                .map(|s| s.into_iter().filter(|&c| c < columns).collect::<Vec<_>>())
                .filter(|r: &Vec<usize>| !r.is_empty())
                .collect();
            prop_assert_eq!(
                sorted(exact_cover_solutions(columns, &rows)),
                sorted(brute_force(columns, &rows))
            );
        }
    }
}
