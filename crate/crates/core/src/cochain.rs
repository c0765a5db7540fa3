//! k-cochains: multilinear maps L(N)^k × N → V.
//!
//! A k-cochain takes k wedge arguments from the fundamental set and one
//! generator argument, and is wedge-consistent: its value on a
//! non-canonical tuple is the Koszul sign times the value on the
//! canonical tuple. The sparse representation stores canonical keys
//! only. Cochains on the Leibniz side (L(N)^k → W) get their own type.

use std::collections::BTreeMap;

use crate::generator::GenId;
use crate::parity::Parity;
use crate::rational::rat;
use crate::rep::VElement;
use crate::wedge::{wedge_normalize, WedgeTuple, WElement};

/// Canonical cochain key: k canonical wedges plus the generator slot.
/// Wedge slots are multilinear, not alternating, so no sorting happens
/// across slots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CKey {
    pub wedges: Vec<WedgeTuple>,
    pub z: GenId,
}

impl CKey {
    pub fn parity(&self) -> Parity {
        self.wedges.iter().map(|w| w.parity()).sum::<Parity>() + self.z.parity()
    }
}

impl std::fmt::Display for CKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for w in &self.wedges {
            write!(f, "{w}; ")?;
        }
        write!(f, "{})", self.z)
    }
}

/// Anything evaluable as a k-cochain with values in V.
pub trait CochainLike {
    fn degree(&self) -> usize;
    fn parity(&self) -> Parity;
    fn eval_canonical(&self, wedges: &[WedgeTuple], z: &GenId) -> VElement;
}

/// Sparse cochain over canonical keys.
#[derive(Clone, Debug, Default)]
pub struct Cochain {
    pub degree: usize,
    pub parity: Parity,
    /// Lattice bidegree tag for graded backends; ignored elsewhere.
    pub bidegree: Option<(i64, i64)>,
    body: BTreeMap<CKey, VElement>,
}

impl Cochain {
    pub fn zero(degree: usize, parity: Parity) -> Cochain {
        Cochain {
            degree,
            parity,
            bidegree: None,
            body: BTreeMap::new(),
        }
    }

    pub fn add_entry(&mut self, key: CKey, value: VElement) {
        debug_assert_eq!(key.wedges.len(), self.degree);
        if value.is_zero() {
            return;
        }
        debug_assert!(
            value.is_homogeneous_of(self.parity + key.parity()),
            "cochain value parity must be |f| + |key|"
        );
        let remove = {
            let slot = self.body.entry(key.clone()).or_insert_with(VElement::zero);
            slot.add(&value);
            slot.is_zero()
        };
        if remove {
            self.body.remove(&key);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&CKey, &VElement)> {
        self.body.iter()
    }

    pub fn support_len(&self) -> usize {
        self.body.len()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_empty()
    }

    /// Evaluation on raw (possibly non-canonical) wedge factor lists.
    pub fn eval_raw(&self, raw_wedges: &[Vec<GenId>], z: &GenId) -> VElement {
        let mut sign = 1i8;
        let mut wedges = Vec::with_capacity(raw_wedges.len());
        for raw in raw_wedges {
            match wedge_normalize(raw) {
                None => return VElement::zero(),
                Some((s, w)) => {
                    sign *= s;
                    wedges.push(w);
                }
            }
        }
        self.eval_canonical(&wedges, z).scaled(&rat(sign as i64))
    }
}

impl CochainLike for Cochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn parity(&self) -> Parity {
        self.parity
    }

    fn eval_canonical(&self, wedges: &[WedgeTuple], z: &GenId) -> VElement {
        debug_assert_eq!(wedges.len(), self.degree);
        let key = CKey {
            wedges: wedges.to_vec(),
            z: z.clone(),
        };
        self.body.get(&key).cloned().unwrap_or_else(VElement::zero)
    }
}

/// Anything evaluable as a k-cochain on L(N) with values in the induced
/// module W.
pub trait WCochainLike {
    fn degree(&self) -> usize;
    fn parity(&self) -> Parity;
    fn eval_canonical(&self, wedges: &[WedgeTuple]) -> WElement;
}

/// Sparse W-valued cochain; degree 0 is a constant element of W.
#[derive(Clone, Debug, Default)]
pub struct WCochain {
    pub degree: usize,
    pub parity: Parity,
    body: BTreeMap<Vec<WedgeTuple>, WElement>,
}

impl WCochain {
    pub fn zero(degree: usize, parity: Parity) -> WCochain {
        WCochain {
            degree,
            parity,
            body: BTreeMap::new(),
        }
    }

    pub fn constant(value: WElement, parity: Parity) -> WCochain {
        let mut c = WCochain::zero(0, parity);
        if !value.is_zero() {
            c.body.insert(Vec::new(), value);
        }
        c
    }

    pub fn add_entry(&mut self, key: Vec<WedgeTuple>, value: WElement) {
        debug_assert_eq!(key.len(), self.degree);
        if value.is_zero() {
            return;
        }
        let remove = {
            let slot = self.body.entry(key.clone()).or_insert_with(WElement::zero);
            slot.add(&value);
            slot.is_zero()
        };
        if remove {
            self.body.remove(&key);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<WedgeTuple>, &WElement)> {
        self.body.iter()
    }
}

impl WCochainLike for WCochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn parity(&self) -> Parity {
        self.parity
    }

    fn eval_canonical(&self, wedges: &[WedgeTuple]) -> WElement {
        debug_assert_eq!(wedges.len(), self.degree);
        self.body
            .get(wedges)
            .cloned()
            .unwrap_or_else(WElement::zero)
    }
}
