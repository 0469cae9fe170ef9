//! Dense bit-packed linear algebra over GF(2) with row-operation tracking,
//! and the index-set selection / linking simulation built on it.

use std::collections::BTreeSet;

use crate::Error;

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Vector {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vector {
    pub fn zero(len: usize) -> Self {
        Gf2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Gf2Vector::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Gf2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

/// Dense bit matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows: vec![Gf2Vector::zero(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zero(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Gf2Matrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.rows[r].set(c, true);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Domain("ragged matrix rows".into()));
        }
        Ok(Gf2Matrix {
            rows: rows.iter().map(|r| Gf2Vector::from_bools(r)).collect(),
            cols,
        })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &Gf2Vector {
        &self.rows[r]
    }

    /// Reduced row echelon form. The oplog matrix `R` records each output
    /// row as a sum of input rows: `result = R * self`.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut oplog = Gf2Matrix::identity(m.rows.len());
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows.len()).find(|&r| m.rows[r].get(col)) else {
                continue;
            };
            m.rows.swap(pivot_row, src);
            oplog.rows.swap(pivot_row, src);
            for r in 0..m.rows.len() {
                if r != pivot_row && m.rows[r].get(col) {
                    let (pr, or) = (m.rows[pivot_row].clone(), oplog.rows[pivot_row].clone());
                    m.rows[r].xor_assign(&pr);
                    oplog.rows[r].xor_assign(&or);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows.len() {
                break;
            }
        }
        Rref {
            matrix: m,
            rank: pivot_row,
            oplog,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }
}

/// Result of `rref`: the reduced matrix, its rank, and the row-operation
/// record expressing each reduced row as a GF(2) sum of original rows.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Gf2Matrix,
    pub rank: usize,
    pub oplog: Gf2Matrix,
}

/// An index set `I` into the rows of `M` together with `V = sum_{i in I} r_i`.
#[derive(Clone, Debug)]
pub struct IndexSelection {
    pub indices: BTreeSet<usize>,
    pub v: Gf2Vector,
}

fn check_select_preconditions(m: &Gf2Matrix, n: usize) -> Result<usize, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("index selection needs n >= 2, got {n}")));
    }
    let side = (2 * n - 3) * (2 * n - 3);
    if m.row_count() != side || m.col_count() != side {
        return Err(Error::Domain(format!(
            "expected a {side}x{side} matrix for n = {n}, got {}x{}",
            m.row_count(),
            m.col_count()
        )));
    }
    for i in 0..side {
        if !m.get(i, i) {
            return Err(Error::Domain(format!("diagonal entry {} is zero", i + 1)));
        }
    }
    Ok(side)
}

/// Select a row index set `I` whose GF(2) row sum `V` has weight at least
/// `2n - 3`.
///
/// Full-rank-enough branch (rank >= 2n-3): `V` is the sum of all reduced
/// rows, which keeps one 1 per pivot column. Otherwise some reduced row has
/// at least `2n - 3` ones, because the unit diagonal forces every column of
/// the reduced matrix to be hit and only `rank` rows are available; the
/// lowest such row is taken for determinism. In both branches `I` comes from
/// the row-operation record.
pub fn select_index_set(m: &Gf2Matrix, n: usize) -> Result<IndexSelection, Error> {
    check_select_preconditions(m, n)?;
    select_index_set_with_need(m, 2 * n - 3)
}

/// The selection core for any square unit-diagonal matrix and explicit weight
/// threshold `need <= side`; `select_index_set` instantiates it with
/// `side = (2n-3)^2`, `need = 2n-3`.
pub fn select_index_set_with_need(m: &Gf2Matrix, need: usize) -> Result<IndexSelection, Error> {
    let side = m.row_count();
    if m.col_count() != side || need == 0 || need > side {
        return Err(Error::Domain(format!(
            "selection needs a square matrix with 1 <= need <= side, got {side}x{} and need {need}",
            m.col_count()
        )));
    }
    for i in 0..side {
        if !m.get(i, i) {
            return Err(Error::Domain(format!("diagonal entry {} is zero", i + 1)));
        }
    }
    let red = m.rref();
    let (v, ops) = if red.rank >= need {
        let mut v = Gf2Vector::zero(side);
        let mut ops = Gf2Vector::zero(side);
        for r in 0..side {
            v.xor_assign(red.matrix.row(r));
            ops.xor_assign(red.oplog.row(r));
        }
        (v, ops)
    } else {
        let row = (0..red.rank)
            .find(|&r| red.matrix.row(r).weight() >= need)
            .ok_or_else(|| {
                // cannot happen by the counting argument; surface loudly if
                // an input ever contradicts it
                Error::Domain(format!(
                    "no reduced row of weight >= {need} despite unit diagonal"
                ))
            })?;
        (red.matrix.row(row).clone(), red.oplog.row(row).clone())
    };
    let indices: BTreeSet<usize> = ops.ones().collect();
    let mut check = Gf2Vector::zero(side);
    for &i in &indices {
        check.xor_assign(m.row(i));
    }
    debug_assert_eq!(check, v);
    Ok(IndexSelection { indices, v })
}

/// Targets linked by the replacement cycle: `{ j : c_j xor V_j = 1 }`.
///
/// With `weight(V) >= 2n-3` and `weight(c) <= n-2`, at least `n - 1` targets
/// remain linked.
pub fn simulate_zcycle_linking(
    m: &Gf2Matrix,
    c: &Gf2Vector,
    n: usize,
) -> Result<BTreeSet<usize>, Error> {
    let side = check_select_preconditions(m, n)?;
    if c.len() != side {
        return Err(Error::Domain(format!(
            "linking vector has length {}, expected {side}",
            c.len()
        )));
    }
    if c.weight() > n - 2 {
        return Err(Error::Domain(format!(
            "linking vector weight {} exceeds n - 2 = {}",
            c.weight(),
            n - 2
        )));
    }
    let sel = select_index_set(m, n)?;
    let mut z = sel.v;
    z.xor_assign(c);
    Ok(z.ones().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_fixed_point() {
        let m = Gf2Matrix::identity(5);
        let red = m.rref();
        assert_eq!(red.matrix, m);
        assert_eq!(red.rank, 5);
        assert_eq!(red.oplog, Gf2Matrix::identity(5));
    }

    #[test]
    fn rref_zero_matrix() {
        let m = Gf2Matrix::zero(3, 4);
        let red = m.rref();
        assert_eq!(red.matrix, m);
        assert_eq!(red.rank, 0);
    }

    #[test]
    fn rref_two_by_two_ones() {
        let m = Gf2Matrix::ones(2, 2);
        let red = m.rref();
        assert_eq!(red.rank, 1);
        assert!(red.matrix.get(0, 0) && red.matrix.get(0, 1));
        assert!(!red.matrix.get(1, 0) && !red.matrix.get(1, 1));
        // second output row is r1 + r2
        assert!(red.oplog.get(1, 0) && red.oplog.get(1, 1));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Gf2Matrix::from_rows(&[
            vec![true, true, false, true],
            vec![false, true, true, true],
            vec![true, false, true, false],
        ])
        .unwrap();
        let once = m.rref().matrix;
        let twice = once.rref().matrix;
        assert_eq!(once, twice);
    }

    #[test]
    fn oplog_reconstructs_rows() {
        let m = Gf2Matrix::from_rows(&[
            vec![true, true, false],
            vec![true, false, true],
            vec![false, true, true],
        ])
        .unwrap();
        let red = m.rref();
        for r in 0..3 {
            let mut acc = Gf2Vector::zero(3);
            for i in red.oplog.row(r).ones() {
                acc.xor_assign(m.row(i));
            }
            assert_eq!(&acc, red.matrix.row(r));
        }
    }

    #[test]
    fn select_n2_singleton() {
        let m = Gf2Matrix::identity(1);
        let sel = select_index_set(&m, 2).unwrap();
        assert_eq!(sel.indices, BTreeSet::from([0]));
        assert_eq!(sel.v.weight(), 1);
    }

    #[test]
    fn select_n3_identity_full_rank() {
        let m = Gf2Matrix::identity(9);
        let sel = select_index_set(&m, 3).unwrap();
        assert_eq!(sel.indices.len(), 9);
        assert_eq!(sel.v.weight(), 9);
    }

    #[test]
    fn select_n3_all_ones_low_rank() {
        let m = Gf2Matrix::ones(9, 9);
        assert_eq!(m.rank(), 1);
        let sel = select_index_set(&m, 3).unwrap();
        assert_eq!(sel.v.weight(), 9);
        // I recovers the row as an odd-size subset of original rows
        assert_eq!(sel.indices.len() % 2, 1);
    }

    #[test]
    fn select_rejects_zero_diagonal() {
        let mut m = Gf2Matrix::identity(9);
        m.set(4, 4, false);
        assert!(select_index_set(&m, 3).is_err());
    }

    #[test]
    fn simulate_n2() {
        let m = Gf2Matrix::identity(1);
        let c = Gf2Vector::zero(1);
        let linked = simulate_zcycle_linking(&m, &c, 2).unwrap();
        assert_eq!(linked, BTreeSet::from([0]));
    }

    #[test]
    fn simulate_n3_identity_one_flip() {
        let m = Gf2Matrix::identity(9);
        let mut c = Gf2Vector::zero(9);
        c.set(2, true);
        let linked = simulate_zcycle_linking(&m, &c, 3).unwrap();
        assert_eq!(linked.len(), 8);
        assert!(!linked.contains(&2));
    }

    #[test]
    fn simulate_rejects_heavy_linking_vector() {
        let m = Gf2Matrix::identity(9);
        let mut c = Gf2Vector::zero(9);
        c.set(0, true);
        c.set(1, true);
        assert!(simulate_zcycle_linking(&m, &c, 3).is_err());
    }
}
