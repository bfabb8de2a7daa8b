//! Linear algebra over GF(2).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kernel dimension up to which minimum-weight search enumerates the coset.
pub const COSET_ENUMERATION_LIMIT: usize = 24;
pub const DEFAULT_BUDGET: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        BitVec::from_indices(len, [i])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Compares the sorted lists of set positions lexicographically.
    pub fn cmp_support(&self, other: &BitVec) -> Ordering {
        self.ones().cmp(other.ones())
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    pub fn parse_bit_string(s: &str) -> Result<BitVec> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Field {
                    field: "bits".into(),
                    message: format!("unexpected character `{other}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BitVec::from_bools(&bits))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({})", self.to_bit_string())
    }
}

impl Serialize for BitVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bit_string())
    }
}

impl<'de> Deserialize<'de> for BitVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BitVec::parse_bit_string(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    bits: Vec<BitVec>,
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for row in &self.bits {
            writeln!(f, "  {}", row.to_bit_string())?;
        }
        Ok(())
    }
}

impl Serialize for Gf2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            cols: usize,
            rows: &'a [BitVec],
        }
        Repr { cols: self.cols, rows: &self.bits }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gf2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            cols: Option<usize>,
            rows: Vec<BitVec>,
        }
        let repr = Repr::deserialize(d)?;
        let cols = repr.cols.or_else(|| repr.rows.first().map(BitVec::len)).unwrap_or(0);
        Gf2Matrix::from_rows(cols, repr.rows).map_err(serde::de::Error::custom)
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix { rows, cols, bits: vec![BitVec::zeros(cols); rows] }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::Dimension { expected: cols, actual: r.len() });
            }
        }
        Ok(Gf2Matrix { rows: rows.len(), cols, bits: rows })
    }

    /// Rows given as 0/1 strings, all the same length.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self> {
        let bits = rows.iter().map(|s| BitVec::parse_bit_string(s)).collect::<Result<Vec<_>>>()?;
        let cols = bits.first().map(BitVec::len).unwrap_or(0);
        Gf2Matrix::from_rows(cols, bits)
    }

    /// Rows given as lists of 0-based column indices.
    pub fn from_supports(cols: usize, rows: &[Vec<usize>]) -> Self {
        Gf2Matrix {
            rows: rows.len(),
            cols,
            bits: rows.iter().map(|r| BitVec::from_indices(cols, r.iter().copied())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.bits[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.bits[r].set(c, value)
    }

    pub fn to_bit_strings(&self) -> Vec<String> {
        self.bits.iter().map(BitVec::to_bit_string).collect()
    }

    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::Dimension { expected: self.cols, actual: x.len() });
        }
        let mut out = BitVec::zeros(self.rows);
        for (i, row) in self.bits.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// `yᵀ A` as a vector over columns.
    pub fn left_mul(&self, y: &BitVec) -> Result<BitVec> {
        if y.len() != self.rows {
            return Err(Error::Dimension { expected: self.rows, actual: y.len() });
        }
        let mut out = BitVec::zeros(self.cols);
        for i in y.ones() {
            out.xor_assign(&self.bits[i]);
        }
        Ok(out)
    }

    pub fn column(&self, c: usize) -> BitVec {
        BitVec::from_bools(&self.bits.iter().map(|r| r.get(c)).collect::<Vec<_>>())
    }

    pub fn select_columns(&self, keep: &[usize]) -> Gf2Matrix {
        let bits = self
            .bits
            .iter()
            .map(|r| BitVec::from_bools(&keep.iter().map(|&c| r.get(c)).collect::<Vec<_>>()))
            .collect();
        Gf2Matrix { rows: self.rows, cols: keep.len(), bits }
    }

    pub fn rank(&self) -> usize {
        Elimination::run(self, &BitVec::zeros(self.rows)).pivots.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Solved,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub particular: Option<BitVec>,
    pub kernel_basis: Vec<BitVec>,
    /// Rows whose sum reads `0 = 1`.
    pub certificate: Option<BitVec>,
}

impl SolveOutcome {
    pub fn is_solved(&self) -> bool {
        self.status == SolveStatus::Solved
    }
}

/// Row reduction of `[A | b]` that also tracks which original rows make up
/// each reduced row.
struct Elimination {
    reduced: Vec<BitVec>,
    rhs: Vec<bool>,
    combos: Vec<BitVec>,
    /// (row, column) for each pivot, in row order
    pivots: Vec<(usize, usize)>,
}

impl Elimination {
    fn run(a: &Gf2Matrix, b: &BitVec) -> Elimination {
        let mut reduced = a.bits.clone();
        let mut rhs = b.to_bools();
        let mut combos: Vec<BitVec> = (0..a.rows).map(|i| BitVec::unit(a.rows, i)).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| reduced[r].get(col)) else {
                continue;
            };
            reduced.swap(row, p);
            rhs.swap(row, p);
            combos.swap(row, p);
            let (pivot_row, pivot_rhs, pivot_combo) =
                (reduced[row].clone(), rhs[row], combos[row].clone());
            for r in 0..a.rows {
                if r != row && reduced[r].get(col) {
                    reduced[r].xor_assign(&pivot_row);
                    rhs[r] ^= pivot_rhs;
                    combos[r].xor_assign(&pivot_combo);
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        Elimination { reduced, rhs, combos, pivots }
    }
}

pub fn solve(a: &Gf2Matrix, b: &BitVec) -> Result<SolveOutcome> {
    if b.len() != a.rows {
        return Err(Error::Dimension { expected: a.rows, actual: b.len() });
    }
    let elim = Elimination::run(a, b);
    let rank = elim.pivots.len();

    let inconsistent: Vec<usize> = (rank..a.rows).filter(|&r| elim.rhs[r]).collect();
    if !inconsistent.is_empty() {
        // smallest certificate among the inconsistent reduced rows
        let certificate = inconsistent
            .iter()
            .map(|&r| elim.combos[r].clone())
            .min_by(|x, y| x.weight().cmp(&y.weight()).then(x.cmp_support(y)))
            .unwrap();
        return Ok(SolveOutcome {
            status: SolveStatus::Infeasible,
            particular: None,
            kernel_basis: Vec::new(),
            certificate: Some(certificate),
        });
    }

    let mut particular = BitVec::zeros(a.cols);
    for &(r, c) in &elim.pivots {
        if elim.rhs[r] {
            particular.set(c, true);
        }
    }
    let pivot_cols: Vec<bool> = {
        let mut v = vec![false; a.cols];
        for &(_, c) in &elim.pivots {
            v[c] = true;
        }
        v
    };
    let kernel_basis = (0..a.cols)
        .filter(|&f| !pivot_cols[f])
        .map(|f| {
            let mut k = BitVec::unit(a.cols, f);
            for &(r, c) in &elim.pivots {
                if elim.reduced[r].get(f) {
                    k.set(c, true);
                }
            }
            k
        })
        .collect();
    Ok(SolveOutcome {
        status: SolveStatus::Solved,
        particular: Some(particular),
        kernel_basis,
        certificate: None,
    })
}

/// Solves `A x = b` with some columns pinned to 1 and others to 0.
///
/// An infeasibility certificate refers to the reduced right-hand side
/// `b + A·forced_one` over the free columns.
pub fn solve_constrained(
    a: &Gf2Matrix,
    b: &BitVec,
    forced_one: &[usize],
    forced_zero: &[usize],
) -> Result<SolveOutcome> {
    if b.len() != a.rows {
        return Err(Error::Dimension { expected: a.rows, actual: b.len() });
    }
    let mut pinned = vec![None; a.cols];
    for &c in forced_one {
        if c >= a.cols {
            return Err(Error::Dimension { expected: a.cols, actual: c + 1 });
        }
        pinned[c] = Some(true);
    }
    for &c in forced_zero {
        if c >= a.cols {
            return Err(Error::Dimension { expected: a.cols, actual: c + 1 });
        }
        if pinned[c] == Some(true) {
            return Err(Error::OverlappingConstraints(c));
        }
        pinned[c] = Some(false);
    }
    let free: Vec<usize> = (0..a.cols).filter(|&c| pinned[c].is_none()).collect();
    let ones = BitVec::from_indices(a.cols, forced_one.iter().copied());
    let shifted = b.xor(&a.mul_vec(&ones)?);
    let reduced = a.select_columns(&free);
    let inner = solve(&reduced, &shifted)?;

    let lift = |v: &BitVec, base: &BitVec| {
        let mut out = base.clone();
        for (i, &c) in free.iter().enumerate() {
            if v.get(i) {
                out.set(c, true);
            }
        }
        out
    };
    let zero = BitVec::zeros(a.cols);
    Ok(SolveOutcome {
        status: inner.status,
        particular: inner.particular.as_ref().map(|p| lift(p, &ones)),
        kernel_basis: inner.kernel_basis.iter().map(|k| lift(k, &zero)).collect(),
        certificate: inner.certificate,
    })
}

/// A minimum-weight solution of `A x = b` with weight at most `budget`;
/// ties go to the lexicographically smallest support.
pub fn min_weight_solution(a: &Gf2Matrix, b: &BitVec, budget: usize) -> Result<Option<BitVec>> {
    let outcome = solve(a, b)?;
    let Some(particular) = outcome.particular else {
        return Ok(None);
    };
    let kernel = &outcome.kernel_basis;
    let best = if kernel.len() <= COSET_ENUMERATION_LIMIT {
        coset_minimum(&particular, kernel)
    } else {
        increasing_weight_search(a, b, budget)?
    };
    Ok(best.filter(|x| x.weight() <= budget))
}

fn better(candidate: &BitVec, best: &BitVec) -> bool {
    match candidate.weight().cmp(&best.weight()) {
        Ordering::Less => true,
        Ordering::Equal => candidate.cmp_support(best) == Ordering::Less,
        Ordering::Greater => false,
    }
}

/// Gray-code walk over `particular + span(kernel)`.
fn coset_minimum(particular: &BitVec, kernel: &[BitVec]) -> Option<BitVec> {
    let mut current = particular.clone();
    let mut best = current.clone();
    let total: u64 = 1 << kernel.len();
    for step in 1..total {
        let flip = step.trailing_zeros() as usize;
        current.xor_assign(&kernel[flip]);
        if better(&current, &best) {
            best = current.clone();
        }
    }
    Some(best)
}

fn increasing_weight_search(a: &Gf2Matrix, b: &BitVec, budget: usize) -> Result<Option<BitVec>> {
    let n = a.cols;
    let columns: Vec<BitVec> = (0..n).map(|c| a.column(c)).collect();
    for w in 0..=budget.min(n) {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            let mut acc = BitVec::zeros(a.rows);
            for &i in &idx {
                acc.xor_assign(&columns[i]);
            }
            if &acc == b {
                return Ok(Some(BitVec::from_indices(n, idx.iter().copied())));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic
/// order; `false` once exhausted.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let w = idx.len();
    for i in (0..w).rev() {
        if idx[i] < n - w + i {
            idx[i] += 1;
            for j in i + 1..w {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
