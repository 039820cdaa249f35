//! Semistandard Young tableaux.

use std::fmt;

use super::Partition;

/// A semistandard tableau: entries weakly increase along rows and strictly
/// increase down columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entry at cell `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// Content `c(α) = j − i` of cell `α = (i, j)`.
    pub fn content(i: usize, j: usize) -> i64 {
        j as i64 - i as i64
    }

    /// Cells `(i, j)` of the shape in row-major order, 1-based.
    pub fn cells(shape: &Partition) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (i, &len) in shape.parts().iter().enumerate() {
            for j in 1..=len {
                cells.push((i + 1, j));
            }
        }
        cells
    }

    /// All semistandard tableaux of `shape` with entries in `{1,…,s}`,
    /// in lexicographic order of the row-major entry word. Empty when the
    /// shape has more than `s` rows.
    pub fn enumerate_ssyt(shape: &Partition, s: usize) -> Vec<Tableau> {
        if shape.ell() > s {
            return Vec::new();
        }
        let cells = Self::cells(shape);
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut out = Vec::new();
        fill(&cells, 0, s, &mut rows, shape, &mut out);
        out
    }
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    s: usize,
    rows: &mut Vec<Vec<usize>>,
    shape: &Partition,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = 1;
    if j > 1 {
        lo = lo.max(rows[i - 1][j - 2]); // weakly increasing along the row
    }
    if i > 1 {
        lo = lo.max(rows[i - 2][j - 1] + 1); // strictly increasing down the column
    }
    for v in lo..=s {
        rows[i - 1][j - 1] = v;
        fill(cells, idx + 1, s, rows, shape, out);
    }
    rows[i - 1][j - 1] = 0;
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", v)?;
                first = false;
            }
        }
        Ok(())
    }
}
