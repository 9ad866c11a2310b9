use serde::{Deserialize, Serialize};

/// Lower-triangular store indexed by `(n, k)` with `0 <= k <= n <= nmax`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T> TriangularTable<T> {
    pub fn new() -> Self {
        TriangularTable { rows: Vec::new() }
    }

    /// Builds rows `0..=nmax`, cell by cell.
    pub fn from_fn(nmax: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let rows = (0..=nmax).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect();
        TriangularTable { rows }
    }

    /// Appends the next row. Panics unless `row.len() == self.len() + 1`.
    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.rows.len() + 1, "row {} must have {} cells", self.rows.len(), self.rows.len() + 1);
        self.rows.push(row);
    }

    /// Number of stored rows (`nmax + 1`).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&T> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    pub fn row(&self, n: usize) -> Option<&[T]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

impl<T> Default for TriangularTable<T> {
    fn default() -> Self {
        Self::new()
    }
}
