use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arithmetic::Rational;

/// Exact polynomial in two variables (J', J), stored sparsely by exponent
/// pair `(deg J', deg J)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, e0: u32, e1: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e0, e1), c);
        }
        Self { terms }
    }

    /// The variable J'.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    /// The variable J.
    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e0: u32, e1: u32) -> Rational {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: (u32, u32), c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn add_const(&self, c: &Rational) -> Self {
        self.add(&Self::constant(c.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a0, a1), u) in &self.terms {
            for ((b0, b1), v) in &other.terms {
                out.add_term((a0 + b0, a1 + b1), u * v);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, ((e0, e1), c)| {
            acc + c * num_traits::pow(x.clone(), *e0 as usize) * num_traits::pow(y.clone(), *e1 as usize)
        })
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// Homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a + b == degree)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Top-degree homogeneous part.
    pub fn leading_part(&self) -> Self {
        match self.total_degree() {
            Some(d) => self.homogeneous_part(d),
            None => Self::zero(),
        }
    }

    /// `Some(c)` with `self = c · other` when the two are proportional and
    /// `other` is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let (e, c) = other.terms.iter().next()?;
        let ratio = self.coeff(e.0, e.1) / c;
        (*self == other.scale(&ratio)).then_some(ratio)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((a, b), c)| format!("({c})*Jp^{a}*J^{b}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
