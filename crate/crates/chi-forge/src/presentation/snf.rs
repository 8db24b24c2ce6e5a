//! Integer Smith normal form by plain elimination.
//!
//! Pivot selection is "minimal nonzero absolute value in the remaining
//! submatrix"; entries stay small for the inputs this crate feeds in, so no
//! modular arithmetic is needed.

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.cols + c] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row_a -= q * row_b
    fn sub_row(&mut self, a: usize, b: usize, q: i64) {
        for c in 0..self.cols {
            let v = self.at(b, c);
            self.entries[a * self.cols + c] -= q * v;
        }
    }

    /// col_a -= q * col_b
    fn sub_col(&mut self, a: usize, b: usize, q: i64) {
        for r in 0..self.rows {
            let v = self.at(r, b);
            self.entries[r * self.cols + a] -= q * v;
        }
    }
}

/// Returns the full diagonal `d_1 | d_2 | ... | d_k` with `k = min(rows, cols)`,
/// nonnegative, each entry dividing the next, zeros trailing.
pub fn smith_normal_form(input: &IntegerMatrix) -> Vec<i64> {
    let mut m = input.clone();
    let k = m.rows.min(m.cols);
    let mut diag = vec![0i64; k];
    for step in 0..k {
        loop {
            // pivot: minimal nonzero |entry| in the remaining submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for r in step..m.rows {
                for c in step..m.cols {
                    let v = m.at(r, c);
                    if v != 0 && pivot.is_none_or(|(pr, pc)| v.abs() < m.at(pr, pc).abs()) {
                        pivot = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = pivot else {
                return diag; // remainder is zero
            };
            m.swap_rows(step, pr);
            m.swap_cols(step, pc);

            let mut dirty = false;
            for r in step + 1..m.rows {
                let q = m.at(r, step).div_euclid(m.at(step, step));
                if q != 0 {
                    m.sub_row(r, step, q);
                }
                if m.at(r, step) != 0 {
                    dirty = true; // remainder left; smaller pivot now exists
                }
            }
            for c in step + 1..m.cols {
                let q = m.at(step, c).div_euclid(m.at(step, step));
                if q != 0 {
                    m.sub_col(c, step, q);
                }
                if m.at(step, c) != 0 {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility: fold any non-multiple into the pivot row and redo
            let d = m.at(step, step);
            let offender = (step + 1..m.rows)
                .flat_map(|r| (step + 1..m.cols).map(move |c| (r, c)))
                .find(|&(r, c)| m.at(r, c) % d != 0);
            if let Some((r, _)) = offender {
                m.sub_row(step, r, -1); // add row r to the pivot row
                continue;
            }
            diag[step] = d.abs();
            break;
        }
    }
    diag
}
