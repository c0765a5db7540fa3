//! Finite linear combinations of basis labels with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::parity::Parity;
use crate::rational::{self, Rational};

/// Finite linear combination over any ordered basis-label type. Zero
/// coefficients are never stored, so equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element<G: Ord> {
    terms: BTreeMap<G, Rational>,
}

impl<G: Ord + Clone> Element<G> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(g: G) -> Self {
        Self::term(g, Rational::from_integer(1.into()))
    }

    pub fn term(g: G, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(g, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (G, Rational)>) -> Self {
        let mut e = Self::zero();
        for (g, c) in terms {
            e.add_term(g, c);
        }
        e
    }

    pub fn add_term(&mut self, g: G, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (g, c) in other.iter() {
            self.add_term(g.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (g, v) in other.iter() {
            self.add_term(g.clone(), v * c);
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut e = self.clone();
        e.scale(c);
        e
    }

    pub fn negated(&self) -> Self {
        self.scaled(&Rational::from_integer((-1).into()))
    }

    pub fn sub(&mut self, other: &Self) {
        for (g, c) in other.iter() {
            self.add_term(g.clone(), -c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &G) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<G, Rational> {
        self.terms
    }
}

pub trait Graded {
    fn parity(&self) -> Parity;
}

impl Graded for crate::generator::GenId {
    fn parity(&self) -> Parity {
        self.parity()
    }
}

impl Graded for crate::generator::VGen {
    fn parity(&self) -> Parity {
        self.parity()
    }
}

impl<G: Ord + Clone + Graded> Element<G> {
    /// Parity when every term agrees; mixed or zero elements return
    /// `None` (zero is homogeneous of every parity; callers that need a
    /// parity for zero must supply one from context).
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity();
        it.all(|g| g.parity() == first).then_some(first)
    }

    /// True for zero or single-parity elements of the given parity.
    pub fn is_homogeneous_of(&self, p: Parity) -> bool {
        self.terms.keys().all(|g| g.parity() == p)
    }
}

impl<G: Ord + Clone + fmt::Display> fmt::Display for Element<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if rational::is_one(c) {
                write!(f, "{g}")?;
            } else {
                write!(f, "{}*{g}", rational::display(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::GenId;
    use crate::rational::rat;

    #[test]
    fn cancellation_drops_terms() {
        let g = GenId::named("a", Parity::Even);
        let mut e = Element::term(g.clone(), rat(2));
        e.add_term(g.clone(), rat(-2));
        assert!(e.is_zero());
        assert_eq!(e, Element::zero());
    }

    #[test]
    fn homogeneity() {
        let a = GenId::named("a", Parity::Even);
        let b = GenId::named("b", Parity::Odd);
        let mut e = Element::generator(a);
        assert_eq!(e.homogeneous_parity(), Some(Parity::Even));
        e.add_term(b, rat(1));
        assert_eq!(e.homogeneous_parity(), None);
    }
}
