//! Vectors in the fixed-point basis and degree-shifting sparse operators.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exact::{Field, Ground};
use crate::partitions::{partitions_of, Partition};
use crate::Error;

/// A finite combination of fixed-point classes; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector<F>(BTreeMap<Partition, F>);

impl<F: Field> Default for FockVector<F> {
    fn default() -> Self {
        FockVector(BTreeMap::new())
    }
}

impl<F: Field> FockVector<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(p: Partition) -> Self {
        Self::single(p, F::one())
    }

    pub fn single(p: Partition, c: F) -> Self {
        let mut v = Self::zero();
        v.add_term(p, c);
        v
    }

    pub fn add_term(&mut self, p: Partition, c: F) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&p) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.0.remove(&p);
                }
            }
            None => {
                self.0.insert(p, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for (p, x) in &other.0 {
            self.add_term(p.clone(), x.clone() * c);
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> F {
        self.0.get(p).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &F)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The component of size `n`.
    pub fn graded(&self, n: usize) -> Self {
        FockVector(
            self.0
                .iter()
                .filter(|(p, _)| p.size() == n)
                .map(|(p, x)| (p.clone(), x.clone()))
                .collect(),
        )
    }
}

impl<F: Field> FromIterator<(Partition, F)> for FockVector<F> {
    fn from_iter<I: IntoIterator<Item = (Partition, F)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (p, c) in it {
            v.add_term(p, c);
        }
        v
    }
}

/// An operator of fixed degree shift, stored column by column for each
/// source degree that has been materialized.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedOperator<F> {
    shift: i32,
    blocks: BTreeMap<usize, BTreeMap<Partition, FockVector<F>>>,
}

impl<F: Field> GradedOperator<F> {
    pub fn empty(shift: i32) -> Self {
        GradedOperator {
            shift,
            blocks: BTreeMap::new(),
        }
    }

    /// Materializes the columns `[λ] -> column(λ)` for every source degree in
    /// `degrees`.
    pub fn from_columns(
        shift: i32,
        degrees: impl IntoIterator<Item = usize>,
        column: impl Fn(&Partition) -> Result<FockVector<F>, Error> + Sync,
    ) -> Result<Self, Error> {
        let mut blocks = BTreeMap::new();
        for n in degrees {
            let cols = partitions_of(n)
                .into_par_iter()
                .map(|p| column(&p).map(|c| (p, c)))
                .collect::<Result<BTreeMap<_, _>, Error>>()?;
            blocks.insert(n, cols);
        }
        Ok(GradedOperator { shift, blocks })
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.keys().copied()
    }

    pub fn has_degree(&self, n: usize) -> bool {
        self.blocks.contains_key(&n)
    }

    pub fn column(&self, p: &Partition) -> Option<&FockVector<F>> {
        self.blocks.get(&p.size()).and_then(|b| b.get(p))
    }

    /// Matrix entry `[row, col]`.
    pub fn entry(&self, row: &Partition, col: &Partition) -> F {
        self.column(col)
            .map(|c| c.coeff(row))
            .unwrap_or_else(F::zero)
    }

    pub fn apply(&self, v: &FockVector<F>) -> Result<FockVector<F>, Error> {
        let mut out = FockVector::zero();
        for (p, c) in v.iter() {
            let col = self.column(p).ok_or_else(|| {
                Error::InvalidArgument(format!("operator not materialized on {p}"))
            })?;
            out.add_scaled(col, c);
        }
        Ok(out)
    }

    /// `self ∘ inner`, on the source degrees where both factors are known.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut blocks = BTreeMap::new();
        for (&n, cols) in &inner.blocks {
            let mid = n as i64 + inner.shift as i64;
            let fits = mid < 0 || self.blocks.contains_key(&(mid as usize));
            if !fits {
                continue;
            }
            let out: BTreeMap<_, _> = cols
                .par_iter()
                .map(|(p, v)| (p.clone(), self.apply(v).expect("degree checked above")))
                .collect();
            blocks.insert(n, out);
        }
        GradedOperator {
            shift: self.shift + inner.shift,
            blocks,
        }
    }

    /// `Σ c_k O_k` on the source degrees common to every term.
    pub fn linear_combination(terms: &[(F, &Self)]) -> Self {
        assert!(!terms.is_empty());
        let shift = terms[0].1.shift;
        assert!(terms.iter().all(|(_, o)| o.shift == shift));
        let mut blocks = BTreeMap::new();
        for (&n, cols) in &terms[0].1.blocks {
            if !terms.iter().all(|(_, o)| o.blocks.contains_key(&n)) {
                continue;
            }
            let mut out = BTreeMap::new();
            for p in cols.keys() {
                let mut v = FockVector::zero();
                for (c, o) in terms {
                    v.add_scaled(&o.blocks[&n][p], c);
                }
                out.insert(p.clone(), v);
            }
            blocks.insert(n, out);
        }
        GradedOperator { shift, blocks }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::linear_combination(&[(F::one(), self), (-F::one(), other)])
    }

    /// Rescales every entry: `[row, col] -> f(row, col) * [row, col]`.
    pub fn map_entries(&self, f: impl Fn(&Partition, &Partition, &F) -> F + Sync) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|(&n, cols)| {
                let out = cols
                    .par_iter()
                    .map(|(col, v)| {
                        let w: FockVector<F> = v
                            .iter()
                            .map(|(row, x)| (row.clone(), f(row, col, x)))
                            .collect();
                        (col.clone(), w)
                    })
                    .collect();
                (n, out)
            })
            .collect();
        GradedOperator {
            shift: self.shift,
            blocks,
        }
    }

    /// All nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &F)> {
        self.blocks
            .values()
            .flat_map(|cols| cols.iter())
            .flat_map(|(col, v)| v.iter().map(move |(row, x)| (row, col, x)))
    }

    /// Dense block for one source degree: rows are the partitions of the target
    /// degree and columns those of the source, both in reverse lex order.
    pub fn block_json<G: Ground<F = F>>(&self, g: &G, n: usize) -> Option<Value> {
        let cols = self.blocks.get(&n)?;
        let target = n as i64 + self.shift as i64;
        let rows: Vec<Partition> = if target < 0 {
            Vec::new()
        } else {
            partitions_of(target as usize)
        };
        let col_labels: Vec<Partition> = partitions_of(n);
        let matrix: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                col_labels
                    .iter()
                    .map(|c| g.render(&cols[c].coeff(r)))
                    .collect()
            })
            .collect();
        Some(json!({
            "source_degree": n,
            "rows": rows.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "cols": col_labels.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "matrix": matrix,
        }))
    }

    pub fn to_json<G: Ground<F = F>>(&self, g: &G) -> Value {
        json!({
            "shift": self.shift,
            "blocks": self
                .blocks
                .keys()
                .filter_map(|&n| self.block_json(g, n))
                .collect::<Vec<_>>(),
        })
    }
}
