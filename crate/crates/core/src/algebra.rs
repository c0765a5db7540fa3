//! ℤ₂-graded n-ary brackets and the maps between them.
//!
//! The bracket of any algebra here is defined on canonical (sorted)
//! generator tuples; values on other orders follow from the skew rule:
//! an adjacent transposition contributes −(−1)^{|a||b|}, and a repeated
//! even generator forces zero. Repeated odd generators are legal (the
//! odd-odd transposition sign is +1, so nothing vanishes).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::element::Element;
use crate::generator::GenId;
use crate::parity::Parity;
use crate::rational::{rat, Rational};
use crate::w_infinity::{self, WGen};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("bracket arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("argument {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("map must be even for this operation")]
    OddMapRejected,
    #[error("map must be homogeneous for this operation")]
    NonHomogeneousMap,
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("system too large: {0}")]
    SystemTooLarge(String),
    #[error("invalid bidegree: {0}")]
    InvalidBidegree(String),
    #[error("section is not a right inverse of the projection at {0}")]
    BadSection(String),
}

/// Sorts a generator tuple, accumulating the Koszul transposition signs.
/// Returns `None` when a repeated even generator forces zero.
pub fn canonicalize(args: &[GenId]) -> Option<(i8, Vec<GenId>)> {
    let mut v: Vec<GenId> = args.to_vec();
    let mut sign = 1i8;
    // Insertion sort with adjacent transpositions; O(n^2) with n small.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            sign *= v[j - 1].parity().swap_sign(v[j].parity());
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] && w[0].parity() == Parity::Even {
            return None;
        }
    }
    Some((sign, v))
}

/// An n-ary bracket on a graded basis. Implementations evaluate on
/// canonical tuples only; the free functions below handle signs and
/// multilinearity.
pub trait NAlgebra {
    fn arity(&self) -> usize;

    /// Bracket of a canonical tuple (sorted, no repeated even
    /// generator). Tuples outside the table or pattern list are zero.
    fn bracket_canonical(&self, args: &[GenId]) -> Element<GenId>;

    /// Bracket of a tuple in the given order. The default derives it
    /// from the canonical value by Koszul signs; table algebras loaded
    /// from files override it so that inconsistent source data remains
    /// observable to the skew checker.
    fn bracket_raw(&self, args: &[GenId]) -> Element<GenId> {
        match canonicalize(args) {
            None => Element::zero(),
            Some((sign, sorted)) => self.bracket_canonical(&sorted).scaled(&rat(sign as i64)),
        }
    }
}

/// Bracket of a generator tuple in the given order.
pub fn bracket_gens(alg: &dyn NAlgebra, args: &[GenId]) -> Element<GenId> {
    debug_assert_eq!(args.len(), alg.arity());
    alg.bracket_raw(args)
}

/// Multilinear extension to homogeneous elements.
pub fn bracket_elements(
    alg: &dyn NAlgebra,
    args: &[Element<GenId>],
) -> Result<Element<GenId>, AlgebraError> {
    if args.len() != alg.arity() {
        return Err(AlgebraError::ArityMismatch {
            expected: alg.arity(),
            got: args.len(),
        });
    }
    for (index, a) in args.iter().enumerate() {
        if !a.is_zero() && a.homogeneous_parity().is_none() {
            return Err(AlgebraError::NonHomogeneous { index });
        }
    }
    Ok(bracket_elements_unchecked(alg, args))
}

/// Multilinear extension without homogeneity validation (used internally
/// where homogeneity is structural).
pub fn bracket_elements_unchecked(alg: &dyn NAlgebra, args: &[Element<GenId>]) -> Element<GenId> {
    let mut out = Element::zero();
    let mut stack: Vec<(usize, Rational, Vec<GenId>)> =
        vec![(0, Rational::from_integer(1.into()), Vec::new())];
    while let Some((slot, coeff, gens)) = stack.pop() {
        if slot == args.len() {
            out.add_scaled(&bracket_gens(alg, &gens), &coeff);
            continue;
        }
        for (g, c) in args[slot].iter() {
            let mut next = gens.clone();
            next.push(g.clone());
            stack.push((slot + 1, &coeff * c, next));
        }
    }
    out
}

/// Table-backed algebra over named generators. Entries are kept exactly
/// as loaded; the canonical table is derived from them (first entry in
/// key order wins), so a source file whose redundant orders disagree
/// with the skew rule stays observable to the checkers.
#[derive(Clone, Debug, Default)]
pub struct TableAlgebra {
    arity: usize,
    generators: Vec<GenId>,
    raw: BTreeMap<Vec<GenId>, Element<GenId>>,
    canonical: BTreeMap<Vec<GenId>, Element<GenId>>,
}

impl TableAlgebra {
    pub fn new(
        arity: usize,
        generators: Vec<GenId>,
        entries: impl IntoIterator<Item = (Vec<GenId>, Element<GenId>)>,
    ) -> TableAlgebra {
        let raw: BTreeMap<Vec<GenId>, Element<GenId>> = entries
            .into_iter()
            .inspect(|(key, _)| debug_assert_eq!(key.len(), arity))
            .collect();
        let mut canonical = BTreeMap::new();
        for (key, value) in &raw {
            if let Some((sign, sorted)) = canonicalize(key) {
                let v = value.scaled(&rat(sign as i64));
                if !v.is_zero() {
                    canonical.entry(sorted).or_insert(v);
                }
            }
        }
        TableAlgebra {
            arity,
            generators,
            raw,
            canonical,
        }
    }

    /// The zero bracket on the given basis.
    pub fn zero(arity: usize, generators: Vec<GenId>) -> TableAlgebra {
        Self::new(arity, generators, [])
    }

    pub fn generators(&self) -> &[GenId] {
        &self.generators
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<GenId>, &Element<GenId>)> {
        self.raw.iter()
    }
}

impl NAlgebra for TableAlgebra {
    fn arity(&self) -> usize {
        self.arity
    }

    fn bracket_canonical(&self, args: &[GenId]) -> Element<GenId> {
        self.canonical
            .get(args)
            .cloned()
            .unwrap_or_else(Element::zero)
    }

    fn bracket_raw(&self, args: &[GenId]) -> Element<GenId> {
        if let Some(v) = self.raw.get(args) {
            return v.clone();
        }
        match canonicalize(args) {
            None => Element::zero(),
            Some((sign, sorted)) => self.bracket_canonical(&sorted).scaled(&rat(sign as i64)),
        }
    }
}

/// The super w-infinity 3-algebra (closed form, infinite basis).
#[derive(Clone, Copy, Debug, Default)]
pub struct WInfinityAlgebra;

impl NAlgebra for WInfinityAlgebra {
    fn arity(&self) -> usize {
        3
    }

    fn bracket_canonical(&self, args: &[GenId]) -> Element<GenId> {
        let ws: Option<Vec<&WGen>> = args
            .iter()
            .map(|g| match g {
                GenId::W(w) => Some(w),
                _ => None,
            })
            .collect();
        let Some(ws) = ws else {
            return Element::zero();
        };
        match w_infinity::bracket_canonical_triple(ws[0], ws[1], ws[2]) {
            Some((c, out)) => Element::term(out.id(), c),
            None => Element::zero(),
        }
    }
}

/// Bracket twisted by an even endomorphism: [x...]' = f([x...]).
/// Construction does not validate the Nambu identity or skew-symmetry of
/// the result; run the checkers on samples.
pub struct TwistedAlgebra<'a> {
    base: &'a dyn NAlgebra,
    map: &'a LinearMap,
}

impl<'a> TwistedAlgebra<'a> {
    pub fn new(base: &'a dyn NAlgebra, map: &'a LinearMap) -> Result<Self, AlgebraError> {
        if map.parity() != Parity::Even {
            return Err(AlgebraError::OddMapRejected);
        }
        Ok(TwistedAlgebra { base, map })
    }
}

impl NAlgebra for TwistedAlgebra<'_> {
    fn arity(&self) -> usize {
        self.base.arity()
    }

    fn bracket_canonical(&self, args: &[GenId]) -> Element<GenId> {
        self.map
            .eval_element(self.base, &self.base.bracket_canonical(args))
    }
}

/// Base algebra with one structure constant shifted; the perturbation
/// oracle behind every "corrupted table" check. A canonical perturbation
/// shifts the constant coherently across all argument orders (breaking
/// Nambu-type identities); a raw-order perturbation shifts one specific
/// order only (breaking skew-symmetry as well).
pub struct PerturbedAlgebra<'a> {
    base: &'a dyn NAlgebra,
    key: Vec<GenId>,
    delta: Element<GenId>,
    raw_order: bool,
}

impl<'a> PerturbedAlgebra<'a> {
    pub fn new(base: &'a dyn NAlgebra, key: &[GenId], delta: Element<GenId>) -> Self {
        let (_, sorted) = canonicalize(key).expect("perturbation key must be nonzero");
        PerturbedAlgebra {
            base,
            key: sorted,
            delta,
            raw_order: false,
        }
    }

    pub fn raw(base: &'a dyn NAlgebra, key: &[GenId], delta: Element<GenId>) -> Self {
        PerturbedAlgebra {
            base,
            key: key.to_vec(),
            delta,
            raw_order: true,
        }
    }
}

impl NAlgebra for PerturbedAlgebra<'_> {
    fn arity(&self) -> usize {
        self.base.arity()
    }

    fn bracket_canonical(&self, args: &[GenId]) -> Element<GenId> {
        let mut out = self.base.bracket_canonical(args);
        if !self.raw_order && args == self.key.as_slice() {
            out.add(&self.delta);
        }
        out
    }

    fn bracket_raw(&self, args: &[GenId]) -> Element<GenId> {
        let mut out = match canonicalize(args) {
            None => Element::zero(),
            Some((sign, sorted)) => self.bracket_canonical(&sorted).scaled(&rat(sign as i64)),
        };
        if self.raw_order && args == self.key.as_slice() {
            out.add(&self.delta);
        }
        out
    }
}

/// Homogeneous linear endomorphism, built from a few primitives and
/// closed under scaling, sums and composition. Evaluation needs the
/// algebra only for the inner-derivation primitive.
#[derive(Clone, Debug)]
pub enum LinearMap {
    Zero,
    Identity,
    /// Finitely supported table; zero off support.
    Table {
        parity: Parity,
        action: BTreeMap<GenId, Element<GenId>>,
    },
    /// Inner derivation z -> [x_1, ..., x_{n-1}, z].
    Ad {
        tuple: Vec<Element<GenId>>,
        parity: Parity,
    },
    /// w-infinity projection killing L and h, fixing Lb and hb.
    Phi1,
    /// w-infinity projection killing L and hb, fixing Lb and h.
    Phi2,
    /// w-infinity family-constant map: sends a generator of the first
    /// family to the same-site generator of the second, scaled; kills
    /// families that are not listed.
    Sector {
        parity: Parity,
        pairs: Vec<(w_infinity::Family, w_infinity::Family, i64)>,
    },
    Scaled(Rational, Box<LinearMap>),
    Sum(Vec<LinearMap>),
    Compose(Box<LinearMap>, Box<LinearMap>),
}

impl LinearMap {
    pub fn table(
        parity: Parity,
        action: impl IntoIterator<Item = (GenId, Element<GenId>)>,
    ) -> LinearMap {
        LinearMap::Table {
            parity,
            action: action.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Inner derivation from a homogeneous (n-1)-tuple of elements.
    pub fn ad(tuple: Vec<Element<GenId>>) -> Result<LinearMap, AlgebraError> {
        let mut parity = Parity::Even;
        for (index, x) in tuple.iter().enumerate() {
            match x.homogeneous_parity() {
                Some(p) => parity = parity + p,
                None if x.is_zero() => {}
                None => return Err(AlgebraError::NonHomogeneous { index }),
            }
        }
        Ok(LinearMap::Ad { tuple, parity })
    }

    pub fn ad_gens(gens: &[GenId]) -> LinearMap {
        LinearMap::ad(gens.iter().map(|g| Element::generator(g.clone())).collect())
            .expect("generators are homogeneous")
    }

    pub fn scaled(self, c: Rational) -> LinearMap {
        LinearMap::Scaled(c, Box::new(self))
    }

    pub fn parity(&self) -> Parity {
        match self {
            LinearMap::Zero | LinearMap::Identity | LinearMap::Phi1 | LinearMap::Phi2 => {
                Parity::Even
            }
            LinearMap::Table { parity, .. }
            | LinearMap::Ad { parity, .. }
            | LinearMap::Sector { parity, .. } => *parity,
            LinearMap::Scaled(_, m) => m.parity(),
            LinearMap::Sum(ms) => {
                let p = ms.first().map(|m| m.parity()).unwrap_or(Parity::Even);
                debug_assert!(ms.iter().all(|m| m.parity() == p));
                p
            }
            LinearMap::Compose(a, b) => a.parity() + b.parity(),
        }
    }

    pub fn eval(&self, alg: &dyn NAlgebra, g: &GenId) -> Element<GenId> {
        match self {
            LinearMap::Zero => Element::zero(),
            LinearMap::Identity => Element::generator(g.clone()),
            LinearMap::Table { action, .. } => {
                action.get(g).cloned().unwrap_or_else(Element::zero)
            }
            LinearMap::Ad { tuple, .. } => {
                let mut args = tuple.clone();
                args.push(Element::generator(g.clone()));
                bracket_elements_unchecked(alg, &args)
            }
            LinearMap::Phi1 => match g {
                GenId::W(w) if w.family.barred() => Element::generator(g.clone()),
                _ => Element::zero(),
            },
            LinearMap::Phi2 => match g {
                GenId::W(w) => match w.family {
                    w_infinity::Family::Lb | w_infinity::Family::H => {
                        Element::generator(g.clone())
                    }
                    _ => Element::zero(),
                },
                _ => Element::zero(),
            },
            LinearMap::Sector { pairs, .. } => match g {
                GenId::W(w) => {
                    let mut out = Element::zero();
                    for (from, to, c) in pairs {
                        if w.family == *from {
                            out.add_term(WGen::new(*to, w.m, w.i).id(), rat(*c));
                        }
                    }
                    out
                }
                _ => Element::zero(),
            },
            LinearMap::Scaled(c, m) => m.eval(alg, g).scaled(c),
            LinearMap::Sum(ms) => {
                let mut out = Element::zero();
                for m in ms {
                    out.add(&m.eval(alg, g));
                }
                out
            }
            LinearMap::Compose(a, b) => a.eval_element(alg, &b.eval(alg, g)),
        }
    }

    pub fn eval_element(&self, alg: &dyn NAlgebra, e: &Element<GenId>) -> Element<GenId> {
        let mut out = Element::zero();
        for (g, c) in e.iter() {
            out.add_scaled(&self.eval(alg, g), c);
        }
        out
    }
}

/// Supercommutator [D1, D2] = D1∘D2 − (−1)^{|D1||D2|} D2∘D1, of parity
/// |D1| + |D2|.
pub fn supercommutator(d1: &LinearMap, d2: &LinearMap) -> LinearMap {
    let sign = d1.parity().koszul_sign(d2.parity());
    LinearMap::Sum(vec![
        LinearMap::Compose(Box::new(d1.clone()), Box::new(d2.clone())),
        LinearMap::Compose(Box::new(d2.clone()), Box::new(d1.clone()))
            .scaled(rat(-(sign as i64))),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::w_infinity::{hbgen, hgen, lgen};

    #[test]
    fn canonicalize_signs() {
        // Even-even swap.
        let (s, v) = canonicalize(&[lgen(1, 0).id(), lgen(0, 0).id()]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(v, vec![lgen(0, 0).id(), lgen(1, 0).id()]);

        // Odd-odd swap carries +1.
        let (s, _) = canonicalize(&[hbgen(0, 0).id(), hgen(0, 0).id()]).unwrap();
        assert_eq!(s, 1);

        // Repeated odd generator survives.
        assert!(canonicalize(&[hgen(0, 0).id(), hgen(0, 0).id()]).is_some());

        // Repeated even generator is zero.
        assert!(canonicalize(&[lgen(2, 3).id(), lgen(2, 3).id()]).is_none());
    }

    #[test]
    fn canonicalize_path_independent() {
        // Bubble sort must agree with the insertion sort in tuple and sign.
        let tuples = [
            vec![hgen(0, 0).id(), lgen(1, 1).id(), hbgen(-1, 1).id()],
            vec![hbgen(2, 1).id(), hgen(2, 1).id(), lgen(0, 0).id()],
            vec![lgen(3, 2).id(), lgen(-3, 1).id(), hgen(0, 0).id()],
        ];
        for t in &tuples {
            let a = canonicalize(t).unwrap();
            let b = bubble_canonicalize(t).unwrap();
            assert_eq!(a, b);
        }
    }

    fn bubble_canonicalize(args: &[GenId]) -> Option<(i8, Vec<GenId>)> {
        let mut v = args.to_vec();
        let mut sign = 1i8;
        loop {
            let mut swapped = false;
            for j in 1..v.len() {
                if v[j - 1] > v[j] {
                    sign *= v[j - 1].parity().swap_sign(v[j].parity());
                    v.swap(j - 1, j);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        for w in v.windows(2) {
            if w[0] == w[1] && w[0].parity() == Parity::Even {
                return None;
            }
        }
        Some((sign, v))
    }

    #[test]
    fn ad_eigenvalues() {
        let alg = WInfinityAlgebra;
        // ad(L_0^1 ∧ L_0^0) multiplies X_k^h by k, on every family.
        let d = LinearMap::ad_gens(&[lgen(0, 1).id(), lgen(0, 0).id()]);
        for g in [lgen(3, 2), hbgen(-4, 1), hgen(2, 0), crate::w_infinity::lbgen(5, 0)] {
            assert_eq!(d.eval(&alg, &g.id()), g.elem().scaled(&rat(g.m)));
        }

        // ad(L_1^1 ∧ L_{-1}^0) multiplies X_k^h by (k + 1 - 2h), where h
        // is the stored integer upper index on every family.
        let d = LinearMap::ad_gens(&[lgen(1, 1).id(), lgen(-1, 0).id()]);
        for g in [lgen(3, 2), hbgen(-4, 1), hgen(2, 0)] {
            let lam = g.m + 1 - 2 * g.i;
            assert_eq!(d.eval(&alg, &g.id()), g.elem().scaled(&rat(lam)));
        }
    }

    #[test]
    fn supercommutator_of_diagonals_vanishes() {
        let alg = WInfinityAlgebra;
        let d1 = LinearMap::ad_gens(&[lgen(0, 1).id(), lgen(0, 0).id()]);
        let d2 = LinearMap::ad_gens(&[lgen(1, 1).id(), lgen(-1, 0).id()]);
        let c = supercommutator(&d1, &d2);
        for g in [lgen(3, 2).id(), hgen(-1, 1).id()] {
            assert!(c.eval(&alg, &g).is_zero());
        }
    }
}
