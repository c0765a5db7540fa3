//! Basis labels.
//!
//! A generator id carries its own parity so that sign bookkeeping never
//! needs an algebra lookup. The total order (used everywhere for
//! canonicalization) is: named generators by label, then the closed-form
//! w-infinity generators by (family, upper index, lower index), then
//! central generators of extensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::parity::Parity;
use crate::w_infinity::WGen;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GenId {
    /// Table-algebra generator with an explicit parity.
    Named { label: String, parity: Parity },
    /// Closed-form super w-infinity generator.
    W(WGen),
    /// Central generator adjoined by an extension.
    Central { label: String, parity: Parity },
}

impl GenId {
    pub fn named(label: &str, parity: Parity) -> GenId {
        GenId::Named {
            label: label.to_string(),
            parity,
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            GenId::Named { parity, .. } => *parity,
            GenId::W(w) => w.parity(),
            GenId::Central { parity, .. } => *parity,
        }
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenId::Named { label, .. } => write!(f, "{label}"),
            GenId::W(w) => write!(f, "{w}"),
            GenId::Central { label, .. } => write!(f, "c:{label}"),
        }
    }
}

/// Generator of a coefficient module. Module bases are kept disjoint
/// from algebra bases even for the adjoint representation, so wedge
/// chains never confuse the module slot with algebra slots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VGen {
    /// The single even generator of the trivial one-dimensional module.
    Unit,
    /// Wrapped algebra generator (adjoint module or explicit tables).
    Wrapped(GenId),
}

impl VGen {
    pub fn parity(&self) -> Parity {
        match self {
            VGen::Unit => Parity::Even,
            VGen::Wrapped(g) => g.parity(),
        }
    }
}

impl fmt::Display for VGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VGen::Unit => write!(f, "1"),
            VGen::Wrapped(g) => write!(f, "v({g})"),
        }
    }
}
