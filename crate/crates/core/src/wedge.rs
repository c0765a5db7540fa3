//! The fundamental set Λ^{n-1}N, its Leibniz bracket, and the induced
//! module of chains x_1 ∧ ... ∧ x_{n-2} ∧ v.
//!
//! Wedge factors obey the same transposition rule as the bracket: an
//! adjacent swap contributes −(−1)^{|a||b|}, a repeated even factor kills
//! the wedge, and repeated odd factors survive (h ∧ h is a legal basis
//! element). The module slot v is kept separate from the algebra factors
//! and never participates in canonical sorting.

use crate::algebra::{canonicalize, NAlgebra};
use crate::checks::CheckReport;
use crate::element::{Element, Graded};
use crate::generator::{GenId, VGen};
use crate::parity::{pow_sign, Parity};
use crate::rational::{rat, Rational};
use crate::rep::{Representation, VElement};

/// Canonical (n-1)-fold wedge of generators. Construction goes through
/// [`wedge_normalize`], so a stored tuple is always sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeTuple {
    factors: Vec<GenId>,
}

impl WedgeTuple {
    pub fn factors(&self) -> &[GenId] {
        &self.factors
    }

    pub fn parity(&self) -> Parity {
        self.factors.iter().map(|g| g.parity()).sum()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl Graded for WedgeTuple {
    fn parity(&self) -> Parity {
        self.parity()
    }
}

impl std::fmt::Display for WedgeTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for g in &self.factors {
            if !first {
                write!(f, "^")?;
            }
            first = false;
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Normalizes a raw factor tuple: canonical order plus the accumulated
/// transposition sign, or `None` for the zero wedge (repeated even
/// factor).
pub fn wedge_normalize(raw: &[GenId]) -> Option<(i8, WedgeTuple)> {
    let (sign, factors) = canonicalize(raw)?;
    Some((sign, WedgeTuple { factors }))
}

/// Element of the fundamental set: finite combination of canonical
/// wedges.
pub type FundElement = Element<WedgeTuple>;

/// Builds a fundamental element from one raw tuple.
pub fn wedge_elem(raw: &[GenId]) -> FundElement {
    match wedge_normalize(raw) {
        None => FundElement::zero(),
        Some((sign, w)) => FundElement::term(w, rat(sign as i64)),
    }
}

/// Inner derivation of a wedge acting on a generator:
/// ad(x_1 ∧ ... ∧ x_{n-1})(z) = [x_1, ..., x_{n-1}, z].
pub fn ad_wedge(alg: &dyn NAlgebra, w: &WedgeTuple, z: &GenId) -> Element<GenId> {
    let mut args = w.factors.clone();
    args.push(z.clone());
    crate::algebra::bracket_gens(alg, &args)
}

/// Leibniz bracket of canonical wedges, Eq-level:
/// [x, y]_L = sum_i (-1)^{|x|(|y_1|+...+|y_{i-1}|)}
///                 y_1 ∧ ... ∧ ad(x)(y_i) ∧ ... ∧ y_{n-1}.
pub fn leibniz_tuple(alg: &dyn NAlgebra, x: &WedgeTuple, y: &WedgeTuple) -> FundElement {
    let mut out = FundElement::zero();
    let xp = x.parity();
    let mut prefix = Parity::Even;
    for i in 0..y.factors.len() {
        let acted = ad_wedge(alg, x, &y.factors[i]);
        let sign = if xp.is_odd() { pow_sign(prefix) } else { 1 };
        for (g, c) in acted.iter() {
            let mut raw = y.factors.clone();
            raw[i] = g.clone();
            if let Some((s, w)) = wedge_normalize(&raw) {
                out.add_term(w, c * rat((sign * s) as i64));
            }
        }
        prefix = prefix + y.factors[i].parity();
    }
    out
}

/// Bilinear extension of the Leibniz bracket to fundamental elements.
pub fn leibniz_bracket(alg: &dyn NAlgebra, x: &FundElement, y: &FundElement) -> FundElement {
    let mut out = FundElement::zero();
    for (xu, xc) in x.iter() {
        for (yu, yc) in y.iter() {
            out.add_scaled(&leibniz_tuple(alg, xu, yu), &(xc * yc));
        }
    }
    out
}

/// Basis chain of the induced module W = L(N, V): n-2 algebra factors
/// (canonical) and one module generator in the final slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WKey {
    pub factors: Vec<GenId>,
    pub v: VGen,
}

impl WKey {
    pub fn parity(&self) -> Parity {
        self.factors.iter().map(|g| g.parity()).sum::<Parity>() + self.v.parity()
    }
}

impl Graded for WKey {
    fn parity(&self) -> Parity {
        self.parity()
    }
}

impl std::fmt::Display for WKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for g in &self.factors {
            write!(f, "{g}^")?;
        }
        write!(f, "{}", self.v)
    }
}

pub type WElement = Element<WKey>;

/// Normalizes the algebra factors of a chain; the module slot stays put.
pub fn w_normalize(raw: &[GenId], v: &VGen) -> Option<(i8, WKey)> {
    let (sign, factors) = canonicalize(raw)?;
    Some((
        sign,
        WKey {
            factors,
            v: v.clone(),
        },
    ))
}

pub fn w_elem(raw: &[GenId], v: &VGen) -> WElement {
    match w_normalize(raw, v) {
        None => WElement::zero(),
        Some((sign, k)) => WElement::term(k, rat(sign as i64)),
    }
}

/// Action of the fundamental set on W:
/// [x, y_1 ∧ ... ∧ y_{n-2} ∧ v] = sum_i (-1)^{|x|(|y_1|+...+|y_{i-1}|)}
///     y_1 ∧ ... ∧ ad(x)(y_i) ∧ ... ∧ v
///   + (-1)^{|x|(|y_1|+...+|y_{n-2}|)} y_1 ∧ ... ∧ y_{n-2} ∧ ad(x)(v),
/// with the final term acting through the representation.
pub fn w_action(
    alg: &dyn NAlgebra,
    rep: &Representation,
    x: &WedgeTuple,
    w: &WKey,
) -> WElement {
    let mut out = WElement::zero();
    let xp = x.parity();
    let mut prefix = Parity::Even;
    for i in 0..w.factors.len() {
        let acted = ad_wedge(alg, x, &w.factors[i]);
        let sign = if xp.is_odd() { pow_sign(prefix) } else { 1 };
        for (g, c) in acted.iter() {
            let mut raw = w.factors.clone();
            raw[i] = g.clone();
            if let Some((s, key)) = w_normalize(&raw, &w.v) {
                out.add_term(key, c * rat((sign * s) as i64));
            }
        }
        prefix = prefix + w.factors[i].parity();
    }
    let sign = if xp.is_odd() { pow_sign(prefix) } else { 1 };
    let acted_v = rep.act(alg, x, &w.v);
    for (vg, c) in acted_v.iter() {
        if let Some((s, key)) = w_normalize(&w.factors, vg) {
            out.add_term(key, c * rat((sign * s) as i64));
        }
    }
    out
}

pub fn w_action_element(
    alg: &dyn NAlgebra,
    rep: &Representation,
    x: &WedgeTuple,
    w: &WElement,
) -> WElement {
    let mut out = WElement::zero();
    for (k, c) in w.iter() {
        out.add_scaled(&w_action(alg, rep, x, k), c);
    }
    out
}

/// Leibniz identity on sampled wedge triples:
/// [x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]].
pub fn check_leibniz(
    alg: &dyn NAlgebra,
    samples: &[(WedgeTuple, WedgeTuple, WedgeTuple)],
) -> CheckReport {
    let mut report = CheckReport::new("leibniz");
    for (x, y, z) in samples {
        let yz = leibniz_tuple(alg, y, z);
        let lhs = leibniz_bracket(alg, &wedge_ident(x), &yz);

        let xy = leibniz_tuple(alg, x, y);
        let mut rhs = leibniz_bracket(alg, &xy, &wedge_ident(z));
        let xz = leibniz_tuple(alg, x, z);
        let sign = x.parity().koszul_sign(y.parity());
        rhs.add_scaled(&leibniz_bracket(alg, &wedge_ident(y), &xz), &rat(sign as i64));

        record_fund(&mut report, &[x, y, z], &lhs, &rhs);
    }
    report
}

fn wedge_ident(w: &WedgeTuple) -> FundElement {
    FundElement::generator(w.clone())
}

fn record_fund(
    report: &mut CheckReport,
    args: &[&WedgeTuple],
    lhs: &FundElement,
    rhs: &FundElement,
) {
    let sample = report.samples;
    report.samples += 1;
    if lhs != rhs {
        report.violations.push(crate::checks::Violation {
            sample,
            args: args.iter().map(|w| w.to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
}

fn record_v(
    report: &mut CheckReport,
    args: Vec<String>,
    lhs: &VElement,
    rhs: &VElement,
) {
    let sample = report.samples;
    report.samples += 1;
    if lhs != rhs {
        report.violations.push(crate::checks::Violation {
            sample,
            args,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
}

/// Representation axioms on samples. Each sample supplies n generators
/// x_1..x_n, n-2 generators y_2..y_{n-1}, and a module generator v.
///
/// First axiom:
/// [[x_1,...,x_n], y_2,...,y_{n-1}, v]_V
///   = sum_i (-1)^{n-i + |x_i|(|x_{i+1}|+...+|x_n|)}
///     [x_1,...,x̂_i,...,x_n, [x_i, y_2,...,y_{n-1}, v]_V]_V.
///
/// Second axiom, for x, y in N^{n-1}:
/// sum_i (-1)^{|y|(|x_1|+...+|x_{i-1}|)}
///     [x_1,...,ad(y)(x_i),...,x_{n-1}, v]_V
///   = [y, [x, v]_V]_V - (-1)^{|y||x|} [x, [y, v]_V]_V.
pub fn check_representation(
    rep: &Representation,
    alg: &dyn NAlgebra,
    samples: &[(Vec<GenId>, Vec<GenId>, VGen)],
) -> CheckReport {
    let mut report = CheckReport::new("representation");
    let n = alg.arity();
    for (xs, ys, v) in samples {
        debug_assert_eq!(xs.len(), n);
        debug_assert_eq!(ys.len(), n - 2);

        // Axiom 1.
        let braket = crate::algebra::bracket_gens(alg, xs);
        let lhs = act_raw_element(alg, rep, &braket, ys, &VElement::generator(v.clone()));
        let mut rhs = VElement::zero();
        for i in 0..n {
            let mut inner_args = vec![xs[i].clone()];
            inner_args.extend(ys.iter().cloned());
            let inner = act_raw(alg, rep, &inner_args, v);
            let rest: Vec<GenId> = xs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let term = act_gens_on_element(alg, rep, &rest, &inner);
            let suffix: Parity = xs[i + 1..].iter().map(|g| g.parity()).sum();
            // (-1)^{n-i} with the sum index starting at 1.
            let mut sign = if (n - (i + 1)) % 2 == 1 { -1i8 } else { 1 };
            if xs[i].parity().is_odd() {
                sign *= pow_sign(suffix);
            }
            rhs.add_scaled(&term, &rat(sign as i64));
        }
        let args: Vec<String> = xs
            .iter()
            .map(|g| g.to_string())
            .chain(ys.iter().map(|g| g.to_string()))
            .chain([v.to_string()])
            .collect();
        record_v(&mut report, args.clone(), &lhs, &rhs);

        // Axiom 2, reusing x = (x_1..x_{n-1}) from the sample's first
        // n-1 generators and y = (x_n, y_2..y_{n-1} rotated) is too
        // arbitrary; instead draw y from the remaining data: use the
        // tuple (x_n, y_2,...,y_{n-1}).
        let x_tuple: Vec<GenId> = xs[..n - 1].to_vec();
        let mut y_tuple: Vec<GenId> = vec![xs[n - 1].clone()];
        y_tuple.extend(ys.iter().cloned());

        let ypar: Parity = y_tuple.iter().map(|g| g.parity()).sum();
        let xpar: Parity = x_tuple.iter().map(|g| g.parity()).sum();

        let mut lhs2 = VElement::zero();
        let mut prefix = Parity::Even;
        for i in 0..x_tuple.len() {
            let mut ad_args = y_tuple.clone();
            ad_args.push(x_tuple[i].clone());
            let acted = crate::algebra::bracket_gens(alg, &ad_args);
            let sign = if ypar.is_odd() { pow_sign(prefix) } else { 1 };
            let mut slot_elems: Vec<Element<GenId>> =
                x_tuple.iter().map(|g| Element::generator(g.clone())).collect();
            slot_elems[i] = acted;
            let term = act_element_args(alg, rep, &slot_elems, &VElement::generator(v.clone()));
            lhs2.add_scaled(&term, &rat(sign as i64));
            prefix = prefix + x_tuple[i].parity();
        }

        let xv = act_raw(alg, rep, &x_tuple, v);
        let mut rhs2 = act_gens_on_element(alg, rep, &y_tuple, &xv);
        let yv = act_raw(alg, rep, &y_tuple, v);
        let sign = ypar.koszul_sign(xpar);
        rhs2.add_scaled(
            &act_gens_on_element(alg, rep, &x_tuple, &yv),
            &rat(-(sign as i64)),
        );
        record_v(&mut report, args, &lhs2, &rhs2);
    }
    report
}

/// Action of a raw (possibly unsorted) generator tuple on a module
/// generator; Koszul sign from normalization.
fn act_raw(alg: &dyn NAlgebra, rep: &Representation, raw: &[GenId], v: &VGen) -> VElement {
    match wedge_normalize(raw) {
        None => VElement::zero(),
        Some((sign, w)) => rep.act(alg, &w, v).scaled(&rat(sign as i64)),
    }
}

fn act_gens_on_element(
    alg: &dyn NAlgebra,
    rep: &Representation,
    raw: &[GenId],
    v: &VElement,
) -> VElement {
    let mut out = VElement::zero();
    for (vg, c) in v.iter() {
        out.add_scaled(&act_raw(alg, rep, raw, vg), c);
    }
    out
}

/// Multilinear action where wedge slots hold elements.
fn act_element_args(
    alg: &dyn NAlgebra,
    rep: &Representation,
    slots: &[Element<GenId>],
    v: &VElement,
) -> VElement {
    let mut out = VElement::zero();
    let mut stack: Vec<(usize, Rational, Vec<GenId>)> =
        vec![(0, rat(1), Vec::new())];
    while let Some((slot, coeff, gens)) = stack.pop() {
        if slot == slots.len() {
            out.add_scaled(&act_gens_on_element(alg, rep, &gens, v), &coeff);
            continue;
        }
        for (g, c) in slots[slot].iter() {
            let mut next = gens.clone();
            next.push(g.clone());
            stack.push((slot + 1, &coeff * c, next));
        }
    }
    out
}

/// First term of axiom 1: the bracket output (an element) acting with
/// the remaining raw generators on a module element.
fn act_raw_element(
    alg: &dyn NAlgebra,
    rep: &Representation,
    first: &Element<GenId>,
    rest: &[GenId],
    v: &VElement,
) -> VElement {
    let mut out = VElement::zero();
    for (g, c) in first.iter() {
        let mut raw = vec![g.clone()];
        raw.extend(rest.iter().cloned());
        out.add_scaled(&act_gens_on_element(alg, rep, &raw, v), c);
    }
    out
}

/// The ad compatibility of the representation (the bridge between the
/// Leibniz bracket and the module action):
/// ad([x,y]_L)(v) = ad(x)(ad(y)(v)) - (-1)^{|x||y|} ad(y)(ad(x)(v)).
pub fn check_ad_lemma(
    rep: &Representation,
    alg: &dyn NAlgebra,
    samples: &[(WedgeTuple, WedgeTuple, VGen)],
) -> CheckReport {
    let mut report = CheckReport::new("ad-lemma");
    for (x, y, v) in samples {
        let xy = leibniz_tuple(alg, x, y);
        let mut lhs = VElement::zero();
        for (w, c) in xy.iter() {
            lhs.add_scaled(&rep.act(alg, w, v), c);
        }

        let yv = rep.act(alg, y, v);
        let mut rhs = rep.act_element(alg, x, &yv);
        let xv = rep.act(alg, x, v);
        let sign = x.parity().koszul_sign(y.parity());
        rhs.add_scaled(&rep.act_element(alg, y, &xv), &rat(-(sign as i64)));

        record_v(
            &mut report,
            vec![x.to_string(), y.to_string(), v.to_string()],
            &lhs,
            &rhs,
        );
    }
    report
}

/// The module law of W over the fundamental set:
/// [[x,y]_L, w]_W = [x, [y, w]_W]_W - (-1)^{|x||y|} [y, [x, w]_W]_W.
pub fn check_w_module(
    rep: &Representation,
    alg: &dyn NAlgebra,
    samples: &[(WedgeTuple, WedgeTuple, WKey)],
) -> CheckReport {
    let mut report = CheckReport::new("w-module");
    for (x, y, w) in samples {
        let xy = leibniz_tuple(alg, x, y);
        let mut lhs = WElement::zero();
        for (u, c) in xy.iter() {
            lhs.add_scaled(&w_action(alg, rep, u, w), c);
        }

        let yw = w_action(alg, rep, y, w);
        let mut rhs = w_action_element(alg, rep, x, &yw);
        let xw = w_action(alg, rep, x, w);
        let sign = x.parity().koszul_sign(y.parity());
        let neg = rat(-(sign as i64));
        let mut sub = w_action_element(alg, rep, y, &xw);
        sub.scale(&neg);
        rhs.add(&sub);

        let sample = report.samples;
        report.samples += 1;
        if lhs != rhs {
            report.violations.push(crate::checks::Violation {
                sample,
                args: vec![x.to_string(), y.to_string(), w.to_string()],
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{TableAlgebra, WInfinityAlgebra};
    use crate::sample::Sampler;
    use crate::w_infinity::{hgen, lgen};

    fn wt(gens: &[crate::w_infinity::WGen]) -> WedgeTuple {
        let ids: Vec<GenId> = gens.iter().map(|g| g.id()).collect();
        wedge_normalize(&ids).unwrap().1
    }

    #[test]
    fn wedge_normalize_examples() {
        let (s, w) = wedge_normalize(&[lgen(1, 0).id(), lgen(0, 0).id()]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(w.factors(), &[lgen(0, 0).id(), lgen(1, 0).id()]);

        let (s, w) = wedge_normalize(&[hgen(0, 0).id(), hgen(0, 0).id()]).unwrap();
        assert_eq!(s, 1);
        assert_eq!(w.factors(), &[hgen(0, 0).id(), hgen(0, 0).id()]);

        assert!(wedge_normalize(&[lgen(2, 3).id(), lgen(2, 3).id()]).is_none());
    }

    #[test]
    fn leibniz_eigenvalue_example() {
        let alg = WInfinityAlgebra;
        // x = L_0^1 ∧ L_0^0 acts by the lower index; on L_1^0 ∧ L_2^0 the
        // eigenvalues add to 3.
        let x = wedge_elem(&[lgen(0, 1).id(), lgen(0, 0).id()]);
        let y = wedge_elem(&[lgen(1, 0).id(), lgen(2, 0).id()]);
        let got = leibniz_bracket(&alg, &x, &y);
        let mut want = y.clone();
        want.scale(&rat(3));
        assert_eq!(got, want);

        // [x, x]_L = 0 since both factors sit at lower index 0.
        let xx = leibniz_bracket(&alg, &x, &x);
        assert!(xx.is_zero());

        // Anything against the zero wedge is zero.
        let zero = FundElement::zero();
        assert!(leibniz_bracket(&alg, &x, &zero).is_zero());
    }

    #[test]
    fn leibniz_identity_on_samples() {
        let alg = WInfinityAlgebra;
        let mut s = Sampler::new(29, 10, 4);
        let mut samples = Vec::new();
        while samples.len() < 200 {
            let a = s.gen_tuple(2);
            let b = s.gen_tuple(2);
            let c = s.gen_tuple(2);
            if let (Some((_, x)), Some((_, y)), Some((_, z))) = (
                wedge_normalize(&a),
                wedge_normalize(&b),
                wedge_normalize(&c),
            ) {
                samples.push((x, y, z));
            }
        }
        let report = check_leibniz(&alg, &samples);
        assert!(report.passed(), "violations: {:?}", &report.violations[..1]);

        let zero_alg = TableAlgebra::zero(3, vec![]);
        let report = check_leibniz(&zero_alg, &samples);
        assert!(report.passed());
    }

    #[test]
    fn leibniz_identity_violated_by_perturbation() {
        let alg = WInfinityAlgebra;
        let key = [lgen(0, 0).id(), lgen(1, 0).id(), lgen(2, 1).id()];
        let bad = crate::algebra::PerturbedAlgebra::new(&alg, &key, lgen(3, 1).elem());
        let x = wt(&[lgen(0, 0), lgen(1, 0)]);
        let y = wt(&[lgen(2, 1), lgen(5, 0)]);
        let z = wt(&[lgen(-1, 1), lgen(4, 0)]);
        let report = check_leibniz(&bad, &[(x, y, z)]);
        assert!(!report.passed());
    }

    #[test]
    fn adjoint_representation_axioms() {
        let alg = WInfinityAlgebra;
        let rep = Representation::Adjoint;
        let mut s = Sampler::new(31, 8, 3);
        let samples: Vec<(Vec<GenId>, Vec<GenId>, VGen)> = (0..150)
            .map(|_| {
                (
                    s.gen_tuple(3),
                    s.gen_tuple(1),
                    VGen::Wrapped(s.gen()),
                )
            })
            .collect();
        let report = check_representation(&rep, &alg, &samples);
        assert!(report.passed(), "violations: {:?}", &report.violations[..1.min(report.violations.len())]);

        // Trivial module: both axioms degenerate to 0 = 0.
        let trivial_samples: Vec<(Vec<GenId>, Vec<GenId>, VGen)> = (0..20)
            .map(|_| (s.gen_tuple(3), s.gen_tuple(1), VGen::Unit))
            .collect();
        assert!(check_representation(&Representation::Trivial, &alg, &trivial_samples).passed());
    }

    #[test]
    fn ad_lemma_on_samples() {
        let alg = WInfinityAlgebra;
        let rep = Representation::Adjoint;
        let mut s = Sampler::new(37, 8, 3);
        let mut samples = Vec::new();
        while samples.len() < 200 {
            if let (Some((_, x)), Some((_, y))) = (
                wedge_normalize(&s.gen_tuple(2)),
                wedge_normalize(&s.gen_tuple(2)),
            ) {
                samples.push((x, y, VGen::Wrapped(s.gen())));
            }
        }
        assert!(check_ad_lemma(&rep, &alg, &samples).passed());

        // Trivial module: both sides vanish.
        let trivial: Vec<_> = samples
            .iter()
            .map(|(x, y, _)| (x.clone(), y.clone(), VGen::Unit))
            .collect();
        assert!(check_ad_lemma(&Representation::Trivial, &alg, &trivial).passed());
    }

    #[test]
    fn w_module_law_on_samples() {
        let alg = WInfinityAlgebra;
        let rep = Representation::Adjoint;
        let mut s = Sampler::new(41, 6, 3);
        let mut samples = Vec::new();
        while samples.len() < 100 {
            let x = wedge_normalize(&s.gen_tuple(2));
            let y = wedge_normalize(&s.gen_tuple(2));
            let w = w_normalize(&s.gen_tuple(1), &VGen::Wrapped(s.gen()));
            if let (Some((_, x)), Some((_, y)), Some((_, w))) = (x, y, w) {
                samples.push((x, y, w));
            }
        }
        let report = check_w_module(&rep, &alg, &samples);
        assert!(report.passed(), "violations: {:?}", &report.violations[..1.min(report.violations.len())]);
    }

    #[test]
    fn w_action_eigenvalue_example() {
        let alg = WInfinityAlgebra;
        let rep = Representation::Adjoint;
        // The element L_0^1 ∧ L_0^0 is -1 times the canonical wedge.
        let (sign, x) = wedge_normalize(&[lgen(0, 1).id(), lgen(0, 0).id()]).unwrap();
        assert_eq!(sign, -1);
        let key = WKey {
            factors: vec![lgen(1, 0).id()],
            v: VGen::Wrapped(lgen(2, 0).id()),
        };
        let got = w_action(&alg, &rep, &x, &key).scaled(&rat(sign as i64));
        assert_eq!(got, WElement::term(key, rat(3)));

        // Trivial representation: only the factor terms survive.
        let key = WKey {
            factors: vec![lgen(1, 0).id()],
            v: VGen::Unit,
        };
        let got = w_action(&alg, &Representation::Trivial, &x, &key).scaled(&rat(sign as i64));
        assert_eq!(got, WElement::term(key, rat(1)));
    }
}
