use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::spectra::{ktype_exists, BundleParams, KTypeLabel};

/// Finite parameter grid for the consistency suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub p: RangeInclusive<i64>,
    pub q: RangeInclusive<i64>,
    pub k: RangeInclusive<i64>,
    pub a: RangeInclusive<i64>,
    pub jp: RangeInclusive<i64>,
    pub j: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
    /// Drop labels whose harmonic spaces are empty instead of evaluating the
    /// identities on them formally.
    pub skip_nonexistent: bool,
    /// Restrict to k ≤ min(p, q) - 1.
    pub k_below_min_dim: bool,
}

impl Default for GridSpec {
    /// p, q ∈ 2..=7, k ≤ min(p, q) - 1, j', j ∈ 0..=8, r ∈ 0..=4.
    fn default() -> Self {
        Self {
            p: 2..=7,
            q: 2..=7,
            k: 0..=6,
            a: 0..=6,
            jp: 0..=8,
            j: 0..=8,
            r: 0..=4,
            skip_nonexistent: true,
            k_below_min_dim: true,
        }
    }
}

impl GridSpec {
    /// Every range must be nonempty.
    pub fn validate(&self) -> Result<()> {
        let ranges = [
            ("p", &self.p),
            ("q", &self.q),
            ("k", &self.k),
            ("a", &self.a),
            ("jp", &self.jp),
            ("j", &self.j),
            ("r", &self.r),
        ];
        for (name, range) in ranges {
            if range.is_empty() {
                return Err(Error::InvalidParams(format!("grid range for {name} is empty")));
            }
        }
        Ok(())
    }

    /// Valid bundle parameters in lexicographic (p, q, k, a) order.
    pub fn params(&self) -> Vec<BundleParams> {
        let mut out = Vec::new();
        for p in self.p.clone() {
            for q in self.q.clone() {
                for k in self.k.clone() {
                    if self.k_below_min_dim && k > p.min(q) - 1 {
                        continue;
                    }
                    for a in self.a.clone() {
                        if let Ok(params) = BundleParams::new(p, q, k, a) {
                            out.push(params);
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether a (possibly shifted) label takes part in the sweep.
    pub fn admits(&self, params: &BundleParams, label: &KTypeLabel) -> bool {
        label.jp >= 0 && label.j >= 0 && (!self.skip_nonexistent || ktype_exists(params, label))
    }

    /// The grid with r restricted to a single value.
    pub fn with_r(mut self, r: RangeInclusive<i64>) -> Self {
        self.r = r;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_params_respect_k_cap() {
        let g = GridSpec::default();
        let params = g.params();
        assert!(params.iter().all(|b| b.k < b.p.min(b.q)));
        assert!(params.contains(&BundleParams::new(2, 2, 1, 1).unwrap()));
        assert!(!params.contains(&BundleParams::new(2, 2, 2, 1).unwrap()));
        let first = params[0];
        assert_eq!((first.p, first.q, first.k, first.a), (2, 2, 0, 0));
    }

    #[test]
    fn empty_range_is_rejected() {
        #[allow(clippy::reversed_empty_ranges)]
        let g = GridSpec { r: 3..=2, ..GridSpec::default() };
        assert!(g.validate().is_err());
        assert!(GridSpec::default().validate().is_ok());
    }
}
