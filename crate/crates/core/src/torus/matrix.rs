use std::collections::BTreeMap;

use num_traits::Num;

use super::TorusBasis;

/// Sparse column: sorted `(row, value)` pairs without explicit zeros.
pub type Column<T> = Vec<(usize, T)>;

/// A linear map between two truncated torus form spaces, stored by columns.
///
/// Every operator in the lab shifts Fourier modes by at most one in each
/// direction, so columns hold a handful of entries even at large truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix<T> {
    pub name: String,
    pub domain: TorusBasis,
    pub codomain: TorusBasis,
    cols: Vec<Column<T>>,
}

fn accumulate<T: Num + Clone>(entries: impl IntoIterator<Item = (usize, T)>) -> Column<T> {
    let mut acc: BTreeMap<usize, T> = BTreeMap::new();
    for (i, v) in entries {
        let slot = acc.entry(i).or_insert_with(T::zero);
        *slot = slot.clone() + v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl<T: Num + Clone> OperatorMatrix<T> {
    /// Build column by column from the image of each basis vector, given as
    /// `((j', j, component), value)`; images outside the truncation are dropped.
    pub fn from_images<F>(name: &str, domain: TorusBasis, codomain: TorusBasis, image: F) -> Self
    where
        F: Fn(i64, i64, usize) -> Vec<((i64, i64, usize), T)>,
    {
        let cols = (0..domain.dim())
            .map(|col| {
                let (jp, j, c) = domain.mode(col);
                accumulate(
                    image(jp, j, c)
                        .into_iter()
                        .filter_map(|((tp, t, tc), v)| codomain.index(tp, t, tc).map(|i| (i, v))),
                )
            })
            .collect();
        Self { name: name.to_string(), domain, codomain, cols }
    }

    pub fn zero(name: &str, domain: TorusBasis, codomain: TorusBasis) -> Self {
        Self { name: name.to_string(), domain, codomain, cols: vec![Vec::new(); domain.dim()] }
    }

    pub fn column(&self, col: usize) -> &[(usize, T)] {
        &self.cols[col]
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.cols[col]
            .binary_search_by_key(&row, |(i, _)| *i)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// `a - b` for sparse vectors.
    pub fn combine(a: &[(usize, T)], b: &[(usize, T)]) -> Column<T> {
        accumulate(a.iter().cloned().chain(b.iter().map(|(i, v)| (*i, T::zero() - v.clone()))))
    }

    /// Matrix times a sparse vector.
    pub fn apply(&self, v: &[(usize, T)]) -> Column<T> {
        accumulate(
            v.iter()
                .flat_map(|(j, x)| self.cols[*j].iter().map(move |(i, a)| (*i, a.clone() * x.clone()))),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.domain, other.codomain, "incompatible operator degrees");
        Self {
            name: format!("{}*{}", self.name, other.name),
            domain: other.domain,
            codomain: self.codomain,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    fn zip(&self, other: &Self, name: String, sign: T) -> Self {
        assert_eq!((self.domain, self.codomain), (other.domain, other.codomain));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| accumulate(a.iter().cloned().chain(b.iter().map(|(i, v)| (*i, sign.clone() * v.clone())))))
            .collect();
        Self { name, domain: self.domain, codomain: self.codomain, cols }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, format!("({}+{})", self.name, other.name), T::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, format!("({}-{})", self.name, other.name), T::zero() - T::one())
    }

    pub fn scale(&self, c: &T) -> Self {
        let cols = self.cols.iter().map(|col| accumulate(col.iter().map(|(i, v)| (*i, c.clone() * v.clone())))).collect();
        Self { name: self.name.clone(), domain: self.domain, codomain: self.codomain, cols }
    }

    pub fn rename(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Entrywise conversion, e.g. to floating point.
    pub fn map<U: Num + Clone>(&self, f: impl Fn(&T) -> U) -> OperatorMatrix<U> {
        OperatorMatrix {
            name: self.name.clone(),
            domain: self.domain,
            codomain: self.codomain,
            cols: self.cols.iter().map(|c| accumulate(c.iter().map(|(i, v)| (*i, f(v))))).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    /// Row-major dense copy, for small truncations and inspection.
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.domain.dim()]; self.codomain.dim()];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }
}
