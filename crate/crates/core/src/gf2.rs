//! Dense linear algebra over GF(2).
//!
//! Vectors are single machine words, so both dimensions of a matrix are
//! limited to 64. Row reduction is Gaussian elimination with first-nonzero
//! pivoting.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{ElemSet, Ground, LabelSet};

pub const MAX_DIM: usize = 64;

/// Fixed-length vector over GF(2); entry `i` is bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    bits: u64,
    len: usize,
}

impl GF2Vector {
    pub fn zeros(len: usize) -> Self {
        assert!(len <= MAX_DIM, "GF2Vector length {len} exceeds {MAX_DIM}");
        GF2Vector { bits: 0, len }
    }

    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_DIM, "GF2Vector length {len} exceeds {MAX_DIM}");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        assert_eq!(bits & !mask, 0, "bits set beyond length {len}");
        GF2Vector { bits, len }
    }

    pub fn from_entries(entries: &[bool]) -> Self {
        let bits = entries
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
        GF2Vector::from_bits(bits, entries.len())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.bits >> i & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }
}

impl std::ops::Add for GF2Vector {
    type Output = GF2Vector;

    fn add(self, rhs: GF2Vector) -> GF2Vector {
        assert_eq!(self.len, rhs.len, "length mismatch");
        GF2Vector {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Rank of a list of words viewed as GF(2) vectors.
pub fn rank_of_words<I: IntoIterator<Item = u64>>(words: I) -> usize {
    let mut basis = Basis::default();
    words.into_iter().filter(|&w| basis.insert(w)).count()
}

/// Echelon basis keyed by leading bit, supporting incremental insertion and
/// membership tests.
#[derive(Clone)]
pub struct Basis {
    by_lead: [u64; 64],
    dim: usize,
}

impl Default for Basis {
    fn default() -> Self {
        Basis {
            by_lead: [0; 64],
            dim: 0,
        }
    }
}

impl Basis {
    pub fn reduce(&self, mut w: u64) -> u64 {
        while w != 0 {
            let lead = 63 - w.leading_zeros() as usize;
            if self.by_lead[lead] == 0 {
                break;
            }
            w ^= self.by_lead[lead];
        }
        w
    }

    /// Adds `w`; returns false if it was already in the span.
    pub fn insert(&mut self, w: u64) -> bool {
        let r = self.reduce(w);
        if r == 0 {
            return false;
        }
        let lead = 63 - r.leading_zeros() as usize;
        self.by_lead[lead] = r;
        self.dim += 1;
        true
    }

    pub fn contains(&self, w: u64) -> bool {
        self.reduce(w) == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Matrix over GF(2) with labelled columns.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: Vec<GF2Vector>,
    // columns[j] has bit r set iff entry (r, j) is 1
    columns: Vec<u64>,
    ground: Ground,
}

impl GF2Matrix {
    pub fn new(ground: Ground, rows: Vec<GF2Vector>) -> Result<Self> {
        if rows.len() > MAX_DIM {
            return Err(Error::TooLarge {
                what: "matrix rows",
                got: rows.len(),
                max: MAX_DIM,
            });
        }
        let n = ground.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::PreconditionViolated(format!(
                "row {bad} has length {}, expected {n}",
                rows[bad].len()
            )));
        }
        let columns = (0..n)
            .map(|j| {
                rows.iter()
                    .enumerate()
                    .fold(0u64, |acc, (r, row)| acc | (row.get(j) as u64) << r)
            })
            .collect();
        Ok(GF2Matrix {
            rows,
            columns,
            ground,
        })
    }

    /// Builds from column labels and 0/1 rows.
    pub fn from_rows<S: Into<String>>(labels: Vec<S>, rows: &[&[u8]]) -> Result<Self> {
        let ground = Ground::new(labels)?;
        let rows = rows
            .iter()
            .map(|r| {
                let entries: Vec<bool> = r.iter().map(|&b| b != 0).collect();
                if entries.len() > MAX_DIM {
                    return Err(Error::TooLarge {
                        what: "matrix columns",
                        got: entries.len(),
                        max: MAX_DIM,
                    });
                }
                Ok(GF2Vector::from_entries(&entries))
            })
            .collect::<Result<Vec<_>>>()?;
        GF2Matrix::new(ground, rows)
    }

    /// Builds from column vectors given as row-bit words.
    pub fn from_columns(ground: Ground, n_rows: usize, columns: &[u64]) -> Result<Self> {
        if n_rows > MAX_DIM {
            return Err(Error::TooLarge {
                what: "matrix rows",
                got: n_rows,
                max: MAX_DIM,
            });
        }
        assert_eq!(columns.len(), ground.len());
        let n = ground.len();
        let rows = (0..n_rows)
            .map(|r| {
                let bits = columns
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, c)| acc | (c >> r & 1) << j);
                GF2Vector::from_bits(bits, n)
            })
            .collect();
        GF2Matrix::new(ground, rows)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn col_labels(&self) -> &[String] {
        self.ground.labels()
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.ground.len()
    }

    pub fn rows(&self) -> &[GF2Vector] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Column `j` as a word, bit `r` = entry in row `r`.
    pub fn column_word(&self, j: usize) -> u64 {
        self.columns[j]
    }

    pub fn column(&self, label: &str) -> Result<GF2Vector> {
        let j = self.ground.index_of(label)?;
        Ok(GF2Vector::from_bits(self.columns[j], self.n_rows()))
    }

    /// Row-space dimension, by row reduction on a copy of the rows.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<u64> = self.rows.iter().map(GF2Vector::bits).collect();
        let mut rank = 0;
        for col in 0..self.n_cols() {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> col & 1 == 1 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn transpose(&self) -> GF2Matrix {
        let ground = Ground::new((0..self.n_rows()).map(|r| format!("r{r}")))
            .expect("row labels are distinct");
        let rows = self
            .columns
            .iter()
            .map(|&c| GF2Vector::from_bits(c, self.n_rows()))
            .collect();
        GF2Matrix::new(ground, rows).expect("dimensions checked at construction")
    }

    /// Rank of the columns in `cols`.
    pub fn rank_of_columns(&self, cols: ElemSet) -> usize {
        rank_of_words(cols.iter().map(|j| self.columns[j]))
    }

    pub fn columns_dependent(&self, cols: &LabelSet) -> Result<bool> {
        let mask = self.ground.mask_of(cols)?;
        Ok(self.rank_of_columns(mask) < mask.len())
    }

    pub fn column_sum(&self, cols: &LabelSet) -> Result<GF2Vector> {
        if cols.is_empty() {
            return Err(Error::PreconditionViolated(
                "column_sum needs at least one column".into(),
            ));
        }
        let mask = self.ground.mask_of(cols)?;
        let bits = mask.iter().fold(0u64, |acc, j| acc ^ self.columns[j]);
        Ok(GF2Vector::from_bits(bits, self.n_rows()))
    }

    /// Parses the text format: a header line of column labels followed by one
    /// line of space-separated 0/1 entries per row. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let Some((header_line, header)) = lines.next() else {
            return Err(Error::Parse {
                line: 1,
                msg: "missing column label line".into(),
            });
        };
        let labels: Vec<&str> = header.split_whitespace().collect();
        if labels.len() > MAX_DIM {
            return Err(Error::TooLarge {
                what: "matrix columns",
                got: labels.len(),
                max: MAX_DIM,
            });
        }
        let ground = Ground::new(labels.iter().copied()).map_err(|e| Error::Parse {
            line: header_line,
            msg: e.to_string(),
        })?;
        let mut rows = Vec::new();
        for (line, l) in lines {
            let entries = l
                .split_whitespace()
                .map(|t| match t {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    other => Err(Error::Parse {
                        line,
                        msg: format!("expected 0 or 1, found `{other}`"),
                    }),
                })
                .collect::<Result<Vec<bool>>>()?;
            if entries.len() != ground.len() {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} entries, expected {}", entries.len(), ground.len()),
                });
            }
            rows.push(GF2Vector::from_entries(&entries));
        }
        GF2Matrix::new(ground, rows)
    }

    /// Inverse of [`GF2Matrix::parse`].
    pub fn to_text(&self) -> String {
        let mut out = self.col_labels().join(" ");
        out.push('\n');
        for row in &self.rows {
            let entries: Vec<&str> = (0..self.n_cols())
                .map(|j| if row.get(j) { "1" } else { "0" })
                .collect();
            out.push_str(&entries.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            labels: &'a [String],
            rows: Vec<Vec<u8>>,
        }
        let rows = self
            .rows
            .iter()
            .map(|r| (0..self.n_cols()).map(|j| r.get(j) as u8).collect())
            .collect();
        serde_json::to_value(Repr {
            labels: self.col_labels(),
            rows,
        })
        .expect("plain data serializes")
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> GF2Matrix {
        let labels: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let cols: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        GF2Matrix::from_columns(Ground::new(labels).unwrap(), n, &cols).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(identity(3).rank(), 3);
    }

    #[test]
    fn duplicate_rows_have_rank_one() {
        let m = GF2Matrix::from_rows(vec!["p", "q", "r", "s"], &[&[1, 0, 1, 1], &[1, 0, 1, 1]])
            .unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank_of_columns(m.ground().all()), 1);
    }

    #[test]
    fn zero_column_is_dependent() {
        let m = GF2Matrix::from_rows(vec!["p", "z"], &[&[1, 0], &[0, 0]]).unwrap();
        let g = m.ground().clone();
        assert!(m.columns_dependent(&g.set(["z"]).unwrap()).unwrap());
        assert!(m.columns_dependent(&g.set(["p", "z"]).unwrap()).unwrap());
        assert!(!m.columns_dependent(&g.set(["p"]).unwrap()).unwrap());
        assert!(!m.columns_dependent(&LabelSet::empty()).unwrap());
    }

    #[test]
    fn column_sum_cancels_duplicates() {
        let m = GF2Matrix::from_rows(vec!["c", "d", "f"], &[&[1, 1, 0], &[0, 0, 1], &[1, 1, 1]])
            .unwrap();
        let g = m.ground().clone();
        assert_eq!(m.column_sum(&g.set(["c"]).unwrap()).unwrap(), m.column("c").unwrap());
        assert!(m.column_sum(&g.set(["c", "d"]).unwrap()).unwrap().is_zero());
        assert_eq!(
            m.column_sum(&LabelSet::empty()).unwrap_err(),
            Error::PreconditionViolated("column_sum needs at least one column".into())
        );
        assert_eq!(
            m.column_sum(&LabelSet::new(["q"])).unwrap_err(),
            Error::UnknownLabel("q".into())
        );
    }

    #[test]
    fn text_format_round_trips() {
        let text = "1 2 x\n1 0 1\n0 1 1\n";
        let m = GF2Matrix::parse(text).unwrap();
        assert_eq!(m.n_rows(), 2);
        assert_eq!(m.n_cols(), 3);
        assert_eq!(m.to_text(), text);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = GF2Matrix::parse("a b\n1 0\n1 2\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "expected 0 or 1, found `2`".into()
            }
        );
        let err = GF2Matrix::parse("a b\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(GF2Matrix::parse(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(GF2Matrix::parse("a a\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn basis_membership() {
        let mut b = Basis::default();
        assert!(b.insert(0b011));
        assert!(b.insert(0b110));
        assert!(!b.insert(0b101));
        assert!(b.contains(0b101));
        assert!(!b.contains(0b001));
        assert_eq!(b.dim(), 2);
    }
}
