//! Closed-form backend for the super w-infinity 3-algebra.
//!
//! Four generator families indexed by a lower index `m ∈ ℤ` and an upper
//! index `i ∈ ℕ`: `L`, `Lb` (even) and `h`, `hb` (odd, displayed upper
//! index i + 1/2, stored as the integer i). The ternary bracket is given
//! by five closed-form family patterns; every other canonical pattern is
//! zero, and non-canonical argument orders are reached by Koszul-signed
//! transpositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::generator::GenId;
use crate::parity::Parity;
use crate::rational::{rat, Rational};

mod derivations;
mod h2;

pub use derivations::{
    claimed_derivation_basis, coefficient_vector, decompose_derivation,
    extra_degree_zero_derivations, solve_derivations, Decomposition, DerivationSolution,
};
pub use h2::{
    solve_h2, trivialize_adjoint_2cocycle, trivialize_trivial_2cocycle, H2Report,
    TrivializePath, TrivializeReport,
};

/// Generator family, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    L,
    Lb,
    H,
    Hb,
}

impl Family {
    pub fn parity(self) -> Parity {
        match self {
            Family::L | Family::Lb => Parity::Even,
            Family::H | Family::Hb => Parity::Odd,
        }
    }

    pub fn all() -> [Family; 4] {
        [Family::L, Family::Lb, Family::H, Family::Hb]
    }

    /// The barred partner within the same parity sector.
    pub fn barred(self) -> bool {
        matches!(self, Family::Lb | Family::Hb)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::Lb => "Lb",
            Family::H => "h",
            Family::Hb => "hb",
        }
    }
}

/// w-infinity generator. Field order (family, i, m) gives the canonical
/// total order used for wedge and bracket normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WGen {
    pub family: Family,
    pub i: i64,
    pub m: i64,
}

impl WGen {
    pub fn new(family: Family, m: i64, i: i64) -> WGen {
        debug_assert!(i >= 0, "upper index must be a natural number");
        WGen { family, i, m }
    }

    pub fn parity(&self) -> Parity {
        self.family.parity()
    }

    pub fn id(self) -> GenId {
        GenId::W(self)
    }

    pub fn elem(self) -> Element<GenId> {
        Element::generator(self.id())
    }
}

pub fn lgen(m: i64, i: i64) -> WGen {
    WGen::new(Family::L, m, i)
}

pub fn lbgen(m: i64, i: i64) -> WGen {
    WGen::new(Family::Lb, m, i)
}

/// `h_m^{i+1/2}`, stored upper index `i`.
pub fn hgen(m: i64, i: i64) -> WGen {
    WGen::new(Family::H, m, i)
}

pub fn hbgen(m: i64, i: i64) -> WGen {
    WGen::new(Family::Hb, m, i)
}

impl fmt::Display for WGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::L | Family::Lb => {
                write!(f, "{}[{},{}]", self.family.name(), self.m, self.i)
            }
            Family::H | Family::Hb => {
                write!(f, "{}[{},{}/2]", self.family.name(), self.m, 2 * self.i + 1)
            }
        }
    }
}

/// Bracket of a canonical (sorted) generator triple. Returns the single
/// output term, or `None` when the pattern is zero or the coefficient
/// vanishes. Coefficients are evaluated in `i128`; window indices keep
/// them far from overflow.
pub fn bracket_canonical_triple(a: &WGen, b: &WGen, c: &WGen) -> Option<(Rational, WGen)> {
    use Family::*;
    debug_assert!(a <= b && b <= c, "triple must be canonical");
    let (coeff, family): (i128, Family) = match (a.family, b.family, c.family) {
        // [L_m^i, L_n^j, L_k^h] = (h(n-m) + j(m-k) + i(k-n)) L_{m+n+k}^{i+j+h-1}
        (L, L, L) => (lll_coeff(a, b, c), L),
        // Same coefficient pattern with the barred or odd third slot.
        (L, L, Lb) => (lll_coeff(a, b, c), Lb),
        (L, L, H) => (lll_coeff(a, b, c), H),
        (L, L, Hb) => (lll_coeff(a, b, c), Hb),
        // [L_m^i, h_p^{a+1/2}, hb_r^{b+1/2}] = (i(p-r) + a(r-m) + b(m-p)) Lb_{m+p+r}^{i+a+b-1}
        (L, H, Hb) => {
            let (m, i) = (a.m as i128, a.i as i128);
            let (p, al) = (b.m as i128, b.i as i128);
            let (r, be) = (c.m as i128, c.i as i128);
            (i * (p - r) + al * (r - m) + be * (m - p), Lb)
        }
        // Every other canonical family pattern vanishes.
        _ => return None,
    };
    if coeff == 0 {
        return None;
    }
    let upper = a.i + b.i + c.i - 1;
    // The closed forms guarantee a zero coefficient whenever the output
    // upper index would be -1.
    debug_assert!(upper >= 0, "nonzero coefficient with out-of-range upper index");
    let out = WGen::new(family, a.m + b.m + c.m, upper);
    Some((rat(coeff as i64), out))
}

fn lll_coeff(a: &WGen, b: &WGen, c: &WGen) -> i128 {
    let (m, i) = (a.m as i128, a.i as i128);
    let (n, j) = (b.m as i128, b.i as i128);
    let (k, h) = (c.m as i128, c.i as i128);
    h * (n - m) + j * (m - k) + i * (k - n)
}

/// Canonical family patterns assigned zero by the supersymmetry
/// completion, for audit.
pub fn zero_patterns() -> Vec<[Family; 3]> {
    let mut out = Vec::new();
    let fams = Family::all();
    for (x, &a) in fams.iter().enumerate() {
        for (y, &b) in fams.iter().enumerate().skip(x) {
            for &c in fams.iter().skip(y) {
                let nonzero = matches!(
                    (a, b, c),
                    (Family::L, Family::L, _) | (Family::L, Family::H, Family::Hb)
                );
                if !nonzero {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// All generators with |m| <= m_bound and 0 <= i <= i_bound, in canonical
/// order.
pub fn gens_in_window(m_bound: i64, i_bound: i64) -> Vec<WGen> {
    let mut out = Vec::new();
    for family in Family::all() {
        for i in 0..=i_bound {
            for m in -m_bound..=m_bound {
                out.push(WGen::new(family, m, i));
            }
        }
    }
    out.sort();
    out
}

pub fn in_window(g: &WGen, m_bound: i64, i_bound: i64) -> bool {
    g.m.abs() <= m_bound && g.i >= 0 && g.i <= i_bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bracket_gens, WInfinityAlgebra};
    use crate::rational::rat;

    fn e(g: WGen) -> Element<GenId> {
        g.elem()
    }

    #[test]
    fn bracket_hand_values() {
        let alg = WInfinityAlgebra;
        // [L_1^1, L_{-1}^0, L_0^0] = L_0^0
        let got = bracket_gens(&alg, &[lgen(1, 1).id(), lgen(-1, 0).id(), lgen(0, 0).id()]);
        assert_eq!(got, e(lgen(0, 0)));

        // [L_2^0, L_{-1}^1, L_0^2] = -4 L_1^2
        let got = bracket_gens(&alg, &[lgen(2, 0).id(), lgen(-1, 1).id(), lgen(0, 2).id()]);
        assert_eq!(got, e(lgen(1, 2)).scaled(&rat(-4)));

        // [L_1^1, h_0^{1/2}, hb_{-1}^{3/2}] = 2 Lb_0^1
        let got = bracket_gens(&alg, &[lgen(1, 1).id(), hgen(0, 0).id(), hbgen(-1, 1).id()]);
        assert_eq!(got, e(lbgen(0, 1)).scaled(&rat(2)));

        // Koszul swap of the (odd, even) pair in front:
        // [h_0^{1/2}, L_1^1, hb_{-1}^{3/2}] = -2 Lb_0^1
        let got = bracket_gens(&alg, &[hgen(0, 0).id(), lgen(1, 1).id(), hbgen(-1, 1).id()]);
        assert_eq!(got, e(lbgen(0, 1)).scaled(&rat(-2)));

        // Repeated even generator.
        let got = bracket_gens(&alg, &[lgen(0, 0).id(), lgen(0, 0).id(), lgen(5, 3).id()]);
        assert!(got.is_zero());

        // Zero coefficient when all upper indices vanish.
        let got = bracket_gens(&alg, &[lgen(0, 0).id(), lgen(0, 0).id(), hbgen(3, 2).id()]);
        assert!(got.is_zero());
    }

    #[test]
    fn zero_pattern_audit_count() {
        // 20 canonical family patterns, 5 nonzero.
        assert_eq!(zero_patterns().len(), 15);
    }

    #[test]
    fn window_enumeration_sorted() {
        let gens = gens_in_window(1, 1);
        assert_eq!(gens.len(), 4 * 3 * 2);
        let mut sorted = gens.clone();
        sorted.sort();
        assert_eq!(gens, sorted);
    }
}
