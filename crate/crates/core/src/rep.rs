//! Representations of an n-ary algebra: the action of (n-1)-fold wedges
//! on a coefficient module.

use std::collections::BTreeMap;

use crate::algebra::{bracket_elements_unchecked, NAlgebra};
use crate::element::Element;
use crate::generator::{GenId, VGen};
use crate::wedge::WedgeTuple;

/// Module element: finite combination of module generators.
pub type VElement = Element<VGen>;

/// Coefficient module with its wedge action. The trivial and adjoint
/// modules are the two shipped representations; explicit action tables
/// are supported as data.
#[derive(Clone, Debug)]
pub enum Representation {
    /// One even generator, zero action.
    Trivial,
    /// The algebra acting on itself through the bracket; module
    /// generators are wrapped algebra generators.
    Adjoint,
    /// Explicit action table on canonical wedge factors. Missing keys
    /// act as zero.
    Table {
        module_basis: Vec<VGen>,
        action: BTreeMap<(Vec<GenId>, VGen), VElement>,
    },
}

impl Representation {
    /// Action of a canonical wedge on a module generator.
    pub fn act(&self, alg: &dyn NAlgebra, w: &WedgeTuple, v: &VGen) -> VElement {
        match self {
            Representation::Trivial => VElement::zero(),
            Representation::Adjoint => {
                let g = match v {
                    VGen::Wrapped(g) => g,
                    VGen::Unit => return VElement::zero(),
                };
                let mut args: Vec<Element<GenId>> = w
                    .factors()
                    .iter()
                    .map(|f| Element::generator(f.clone()))
                    .collect();
                args.push(Element::generator(g.clone()));
                wrap(&bracket_elements_unchecked(alg, &args))
            }
            Representation::Table { action, .. } => action
                .get(&(w.factors().to_vec(), v.clone()))
                .cloned()
                .unwrap_or_else(VElement::zero),
        }
    }

    pub fn act_element(&self, alg: &dyn NAlgebra, w: &WedgeTuple, v: &VElement) -> VElement {
        let mut out = VElement::zero();
        for (g, c) in v.iter() {
            out.add_scaled(&self.act(alg, w, g), c);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Representation::Trivial)
    }
}

/// Wraps an algebra element as a module element of the adjoint module.
pub fn wrap(e: &Element<GenId>) -> VElement {
    VElement::from_terms(e.iter().map(|(g, c)| (VGen::Wrapped(g.clone()), c.clone())))
}

/// Projects an adjoint-module element back to the algebra.
pub fn unwrap(e: &VElement) -> Element<GenId> {
    Element::from_terms(e.iter().filter_map(|(v, c)| match v {
        VGen::Wrapped(g) => Some((g.clone(), c.clone())),
        VGen::Unit => None,
    }))
}
