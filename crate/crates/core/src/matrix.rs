//! Polynomial matrices with column degree shifts, and their reduction to
//! shifted weak Popov form by Mulders–Storjohann simple transformations.
//!
//! A shift vector `w` stands for right multiplication by `diag(x^w_j)`:
//! the shifted degree of entry `(i, j)` is `deg(a_ij) + w_j`. Carrying the
//! shifts as integers instead of applying them keeps entry degrees small and
//! allows negative shifts.
//!
//! Positions are 0-based throughout this module.

use thiserror::Error;

use crate::field::Field;
use crate::poly::{same_field, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has width {got}, expected {expected}")]
    WidthMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix entries over different fields")]
    FieldMismatch,
}

/// Shifted degree of a row vector; `None` for the zero vector.
pub fn shifted_degree(row: &[Poly], shifts: &[i64]) -> Option<i64> {
    row_info(row, shifts).map(|(d, _)| d)
}

/// Right-most position attaining the maximal shifted degree; `None` iff the
/// row is zero.
pub fn leading_position(row: &[Poly], shifts: &[i64]) -> Option<usize> {
    row_info(row, shifts).map(|(_, lp)| lp)
}

fn row_info(row: &[Poly], shifts: &[i64]) -> Option<(i64, usize)> {
    let mut best: Option<(i64, usize)> = None;
    for (j, (entry, &w)) in row.iter().zip(shifts).enumerate() {
        if let Some(d) = entry.degree() {
            let sd = d as i64 + w;
            if best.is_none_or(|(bd, _)| sd >= bd) {
                best = Some((sd, j));
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedPolyMatrix {
    field: Field,
    rows: Vec<Vec<Poly>>,
    shifts: Vec<i64>,
}

/// Leading position to row index lookup for a matrix in weak Popov form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowIndexByLp {
    by_position: Vec<Option<usize>>,
}

impl RowIndexByLp {
    pub fn row(&self, position: usize) -> Option<usize> {
        self.by_position.get(position).copied().flatten()
    }

    /// Positions represented by some row.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_position
            .iter()
            .enumerate()
            .filter_map(|(p, r)| r.map(|_| p))
    }
}

impl ShiftedPolyMatrix {
    pub fn new(field: &Field, rows: Vec<Vec<Poly>>, shifts: Vec<i64>) -> Result<Self, MatrixError> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shifts.len() {
                return Err(MatrixError::WidthMismatch {
                    row: i,
                    expected: shifts.len(),
                    got: row.len(),
                });
            }
            if row.iter().any(|p| !same_field(p.field(), field)) {
                return Err(MatrixError::FieldMismatch);
            }
        }
        Ok(ShiftedPolyMatrix {
            field: field.clone(),
            rows,
            shifts,
        })
    }

    pub fn identity(field: &Field, width: usize) -> Self {
        let rows = (0..width)
            .map(|i| {
                (0..width)
                    .map(|j| if i == j { Poly::one(field) } else { Poly::zero(field) })
                    .collect()
            })
            .collect();
        ShiftedPolyMatrix {
            field: field.clone(),
            rows,
            shifts: vec![0; width],
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Poly>> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.shifts.len()
    }

    /// Same matrix with `c` added to every shift.
    pub fn with_shift_offset(&self, c: i64) -> Self {
        let mut out = self.clone();
        out.shifts.iter_mut().for_each(|w| *w += c);
        out
    }

    /// Adds a uniform offset so that the smallest shift is zero. Leading
    /// positions are unaffected.
    pub fn normalize_shifts(&mut self) {
        if let Some(&min) = self.shifts.iter().min() {
            self.shifts.iter_mut().for_each(|w| *w -= min);
        }
    }

    pub fn row_degree(&self, i: usize) -> Option<i64> {
        shifted_degree(&self.rows[i], &self.shifts)
    }

    pub fn row_leading_position(&self, i: usize) -> Option<usize> {
        leading_position(&self.rows[i], &self.shifts)
    }

    /// Largest shifted degree over all entries.
    pub fn max_degree(&self) -> Option<i64> {
        (0..self.height()).filter_map(|i| self.row_degree(i)).max()
    }

    pub fn is_weak_popov(&self) -> bool {
        let mut seen = vec![false; self.width()];
        for i in 0..self.height() {
            if let Some(lp) = self.row_leading_position(i) {
                if std::mem::replace(&mut seen[lp], true) {
                    return false;
                }
            }
        }
        true
    }

    pub fn lp_index(&self) -> RowIndexByLp {
        let mut by_position = vec![None; self.width()];
        for i in 0..self.height() {
            if let Some(lp) = self.row_leading_position(i) {
                debug_assert!(by_position[lp].is_none(), "matrix not in weak Popov form");
                by_position[lp] = Some(i);
            }
        }
        RowIndexByLp { by_position }
    }

    /// The unique row with the given leading position, for a matrix in
    /// weak Popov form.
    pub fn min_row_with_lp(&self, position: usize) -> Option<&[Poly]> {
        debug_assert!(self.is_weak_popov(), "min_row_with_lp on a non-reduced matrix");
        (0..self.height())
            .find(|&i| self.row_leading_position(i) == Some(position))
            .map(|i| self.rows[i].as_slice())
    }

    /// Reduces to shifted weak Popov form; see [`Self::reduce`].
    pub fn weak_popov_form(mut self) -> Self {
        self.reduce();
        self
    }

    /// In-place Mulders–Storjohann reduction. Returns the number of simple
    /// transformations applied.
    ///
    /// Among rows whose leading position collides with another row, the one
    /// of largest shifted degree is reduced (ties: larger row index), using
    /// as pivot the other colliding row of smallest shifted degree (ties:
    /// smaller row index).
    pub fn reduce(&mut self) -> usize {
        let height = self.height();
        let width = self.width();
        let mut info: Vec<Option<(i64, usize)>> =
            self.rows.iter().map(|r| row_info(r, &self.shifts)).collect();
        let mut counts = vec![0usize; width];
        for (_, lp) in info.iter().flatten() {
            counts[*lp] += 1;
        }
        let mut steps = 0;
        loop {
            let mut target: Option<(i64, usize)> = None;
            for (i, inf) in info.iter().enumerate() {
                if let Some((d, lp)) = *inf {
                    if counts[lp] >= 2 && target.is_none_or(|(bd, _)| d >= bd) {
                        target = Some((d, i));
                    }
                }
            }
            let Some((_, i)) = target else { break };
            let (_, lp) = info[i].unwrap();
            let pivot = (0..height)
                .filter(|&j| j != i)
                .filter_map(|j| info[j].filter(|&(_, l)| l == lp).map(|(d, _)| (d, j)))
                .min()
                .map(|(_, j)| j)
                .expect("collision implies a second row");

            let pivot_row = std::mem::take(&mut self.rows[pivot]);
            let row = &mut self.rows[i];
            let a = &row[lp];
            let b = &pivot_row[lp];
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let c = self
                .field
                .div(a.leading_coeff().unwrap(), b.leading_coeff().unwrap())
                .expect("nonzero leading coefficient");
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                entry.sub_scaled_shifted(c, delta, p);
            }
            self.rows[pivot] = pivot_row;

            counts[lp] -= 1;
            info[i] = row_info(&self.rows[i], &self.shifts);
            if let Some((_, l)) = info[i] {
                counts[l] += 1;
            }
            steps += 1;
        }
        steps
    }
}
