//! Windowed second cohomology of the super w-infinity 3-algebra, and
//! the constructive 2-cocycle trivializers.
//!
//! The cochain spaces here are far too large for direct elimination
//! (three free generators per key), so the solver uses the reduction
//! that drives the vanishing proofs: a diagonal probe wedge
//! pi_b = L_b^0 ∧ L_{-b}^1 acts as a grading operator, and the cocycle
//! instance (pi_b, x, z) expresses the value at any non-probe key in
//! terms of the boundary data f(pi_., -) whenever the diagonal
//! coefficient c = -(2bt + s) (adjoint) or -(b(1+2t) + s) (trivial) is
//! nonzero. The reduced system on the boundary data is solved exactly;
//! each kernel vector is trivialized by the closed-form recipe or an
//! exact fallback solve, and the match of boundary data certifies
//! f = delta(g) on every eliminable key, hence on the whole interior.
//!
//! At (s,t) = (0,0) with adjoint coefficients every diagonal probe has
//! c = 0 (a weight-(0,0) cochain is invisible to grading operators), so
//! this reduction cannot certify that cell; the solver reports it as
//! not coverable with the analysis. The same degeneracy falsifies the
//! printed Case-2 proof step, which asserts the coefficient -2 where
//! the exact eigenvalue sum is 0.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{AlgebraError, NAlgebra, WInfinityAlgebra};
use crate::cochain::{CKey, Cochain, CochainLike};
use crate::coboundary::{delta_eval, delta_terms};
use crate::generator::{GenId, VGen};
use crate::linalg::{Eliminator, SparseVec};
use crate::parity::Parity;
use crate::rational::{rat, Rational};
use crate::rep::{Representation, VElement};
use crate::w_infinity::{lgen, Family, WGen};
use crate::wedge::{wedge_normalize, WedgeTuple};
use crate::window::Window;

/// Boundary-data unknown: a probe key plus the module generator
/// carrying the coefficient.
pub type DKey = (CKey, VGen);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivializePath {
    /// The closed-form recipe matched exactly.
    Recipe,
    /// The recipe failed; an exact linear solve found the primitive.
    Fallback,
    /// No primitive exists in the windowed generator space.
    None,
}

#[derive(Clone, Debug)]
pub struct TrivializeReport {
    pub path: TrivializePath,
    pub residual_zero: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct H2Report {
    pub adjoint: bool,
    pub parity: Parity,
    pub bidegree: (i64, i64),
    pub window: Window,
    /// Whether the probe reduction covers this configuration.
    pub covered: bool,
    pub d_unknowns: usize,
    pub kernel_dim: usize,
    pub boundary_rank: usize,
    /// Certified interior cohomology dimension; `None` when the
    /// configuration is not coverable by the probe reduction.
    pub interior_h_dim: Option<usize>,
    pub trivializers: Vec<TrivializeReport>,
    pub rows_used: usize,
    pub spot_checks: usize,
    pub analysis: Option<String>,
}

/// One evaluation of a cochain, as a linear form over the boundary
/// data, separated by value component.
type KeyForm = BTreeMap<VGen, Vec<(u32, Rational)>>;

struct Solver {
    alg: WInfinityAlgebra,
    rep: Representation,
    trivial: bool,
    parity: Parity,
    s: i64,
    t: i64,
    window: Window,
    probes: Vec<WedgeTuple>,
    probe_set: BTreeSet<WedgeTuple>,
    d_keys: Vec<DKey>,
    d_index: BTreeMap<DKey, u32>,
}

fn wgen_of(g: &GenId) -> Option<&WGen> {
    match g {
        GenId::W(w) => Some(w),
        _ => None,
    }
}

fn key_totals(key: &CKey) -> Option<(i64, i64)> {
    let mut p = 0;
    let mut q = 0;
    for g in key
        .wedges
        .iter()
        .flat_map(|w| w.factors())
        .chain(std::iter::once(&key.z))
    {
        let w = wgen_of(g)?;
        p += w.m;
        q += w.i;
    }
    Some((p, q))
}

fn fams_of_parity(p: Parity) -> [Family; 2] {
    match p {
        Parity::Even => [Family::L, Family::Lb],
        Parity::Odd => [Family::H, Family::Hb],
    }
}

impl Solver {
    fn new(
        adjoint: bool,
        parity: Parity,
        s: i64,
        t: i64,
        window: Window,
    ) -> Result<Solver, AlgebraError> {
        if t < 0 {
            return Err(AlgebraError::InvalidBidegree(format!(
                "upper bidegree must be a natural number, got {t}"
            )));
        }
        let mut probes = Vec::new();
        for b in [0i64, 1, -1, 2, -2] {
            if b.abs() > window.m_bound || window.i_bound < 1 {
                continue;
            }
            let (sign, w) = wedge_normalize(&[lgen(b, 0).id(), lgen(-b, 1).id()])
                .expect("distinct probe factors");
            debug_assert_eq!(sign, 1);
            probes.push(w);
        }
        let probe_set: BTreeSet<WedgeTuple> = probes.iter().cloned().collect();
        let mut solver = Solver {
            alg: WInfinityAlgebra,
            rep: if adjoint {
                Representation::Adjoint
            } else {
                Representation::Trivial
            },
            trivial: !adjoint,
            parity,
            s,
            t,
            window,
            probes,
            probe_set,
            d_keys: Vec::new(),
            d_index: BTreeMap::new(),
        };
        let mut d_keys = Vec::new();
        for pi in &solver.probes {
            for z in solver.window.gens() {
                let key = CKey {
                    wedges: vec![pi.clone()],
                    z: z.id(),
                };
                for (dk, _) in solver.d_unknowns_of(&key) {
                    d_keys.push(dk);
                }
            }
        }
        d_keys.sort();
        d_keys.dedup();
        solver.d_index = d_keys
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i as u32))
            .collect();
        solver.d_keys = d_keys;
        Ok(solver)
    }

    /// Out-site of the cochain value on a degree-1 key.
    fn out_site(&self, key: &CKey) -> Option<(i64, i64)> {
        let (p, q) = key_totals(key)?;
        Some((p + self.s, q + self.t - 1))
    }

    /// The unknowns carrying a probe key's value (empty when the value
    /// is structurally zero).
    fn d_unknowns_of(&self, key: &CKey) -> Vec<(DKey, VGen)> {
        let Some((om, oi)) = self.out_site(key) else {
            return Vec::new();
        };
        if self.trivial {
            if key.parity() != self.parity || om != 0 || oi != 0 {
                return Vec::new();
            }
            return vec![((key.clone(), VGen::Unit), VGen::Unit)];
        }
        if oi < 0 {
            return Vec::new();
        }
        fams_of_parity(self.parity + key.parity())
            .iter()
            .map(|f| {
                let v = VGen::Wrapped(WGen::new(*f, om, oi).id());
                ((key.clone(), v.clone()), v)
            })
            .collect()
    }

    /// Resolves a probe key to its boundary-data form; None when the
    /// wedge is not a probe.
    fn resolve_probe(&self, key: &CKey) -> Option<KeyForm> {
        if !self.probe_set.contains(&key.wedges[0]) {
            return None;
        }
        let mut form = KeyForm::new();
        for (dk, vgen) in self.d_unknowns_of(key) {
            let col = *self.d_index.get(&dk)?;
            form.entry(vgen).or_default().push((col, rat(1)));
        }
        Some(form)
    }

    /// Validity of a key as a tracked value of the truncated cochain.
    fn key_tracked(&self, key: &CKey) -> bool {
        let Some((p, q)) = key_totals(key) else {
            return false;
        };
        let in_window = key
            .wedges
            .iter()
            .flat_map(|w| w.factors())
            .chain(std::iter::once(&key.z))
            .all(|g| wgen_of(g).map(|w| self.window.contains(w)).unwrap_or(false));
        if !in_window || p.abs() > self.window.m_bound {
            return false;
        }
        if self.probe_set.contains(&key.wedges[0]) {
            return true;
        }
        if self.trivial {
            return true;
        }
        let (om, oi) = (p + self.s, q + self.t - 1);
        oi < 0 || self.window.contains_site(om, oi)
    }

    /// Resolves any tracked key to a boundary-data form: probe keys
    /// directly, other keys through the single-step elimination.
    fn resolve(&self, key: &CKey) -> Option<KeyForm> {
        if !self.key_tracked(key) {
            return None;
        }
        if let Some(form) = self.resolve_probe(key) {
            return Some(form);
        }
        let Some((_, q)) = key_totals(key) else {
            return None;
        };
        if self.trivial {
            let (om, oi) = self.out_site(key)?;
            if key.parity() != self.parity || om != 0 || oi != 0 {
                return Some(KeyForm::new());
            }
        } else {
            let (_, oi) = self.out_site(key)?;
            if oi < 0 {
                return Some(KeyForm::new());
            }
        }
        let _ = q;
        self.eliminate(key)
    }

    /// Single-step elimination of a non-probe key against the probe
    /// list; fails only when every diagonal coefficient vanishes.
    fn eliminate(&self, key: &CKey) -> Option<KeyForm> {
        'probes: for pi in &self.probes {
            let wedges = [pi.clone(), key.wedges[0].clone()];
            let mut c = Rational::from_integer(0.into());
            let mut comps: KeyForm = KeyForm::new();
            for term in delta_terms(&self.alg, 1, self.parity, &wedges, &key.z) {
                if self.trivial && term.post.is_some() {
                    continue;
                }
                let fkey = CKey {
                    wedges: term.f_wedges,
                    z: term.f_z,
                };
                if fkey == *key {
                    match &term.post {
                        None => c += term.coeff,
                        Some(w) => {
                            // Diagonal action of the probe on the value.
                            let (om, oi) = self.out_site(key)?;
                            let vgen =
                                VGen::Wrapped(WGen::new(
                                    fams_of_parity(self.parity + key.parity())[0],
                                    om,
                                    oi,
                                ).id());
                            let acted = self.rep.act(&self.alg, w, &vgen);
                            let lam = acted.coeff(&vgen);
                            debug_assert!(acted.len() <= 1, "probe action must be diagonal");
                            c += &term.coeff * lam;
                        }
                    }
                    continue;
                }
                let Some(form) = self.resolve_probe(&fkey) else {
                    continue 'probes;
                };
                for (vgen, lin) in form {
                    match &term.post {
                        None => {
                            let slot = comps.entry(vgen).or_default();
                            for (col, x) in &lin {
                                slot.push((*col, &term.coeff * x));
                            }
                        }
                        Some(w) => {
                            let acted = self.rep.act(&self.alg, w, &vgen);
                            for (out, cx) in acted.iter() {
                                let slot = comps.entry(out.clone()).or_default();
                                for (col, x) in &lin {
                                    slot.push((*col, &term.coeff * cx * x));
                                }
                            }
                        }
                    }
                }
            }
            if c == rat(0) {
                continue 'probes;
            }
            // u_{key,F} = -(1/c) * (boundary terms at component F).
            let scale = -c.recip();
            let mut form = KeyForm::new();
            for (dk, vgen) in self.key_components(key) {
                let _ = dk;
                let lin = comps.remove(&vgen).unwrap_or_default();
                form.insert(
                    vgen,
                    lin.into_iter().map(|(col, x)| (col, x * &scale)).collect(),
                );
            }
            debug_assert!(comps.is_empty(), "stray components in elimination");
            return Some(form);
        }
        None
    }

    /// The component labels of a non-probe key's value.
    fn key_components(&self, key: &CKey) -> Vec<(DKey, VGen)> {
        if self.trivial {
            return vec![((key.clone(), VGen::Unit), VGen::Unit)];
        }
        let Some((om, oi)) = self.out_site(key) else {
            return Vec::new();
        };
        fams_of_parity(self.parity + key.parity())
            .iter()
            .map(|f| {
                let v = VGen::Wrapped(WGen::new(*f, om, oi).id());
                ((key.clone(), v.clone()), v)
            })
            .collect()
    }

    /// Rows of one cocycle instance over the boundary data, after
    /// substituting eliminations; None when a referenced key is
    /// untracked or uneliminable.
    fn instance_rows(
        &self,
        wedges: &[WedgeTuple],
        z: &GenId,
    ) -> Option<Vec<Vec<(u32, Rational)>>> {
        let mut comps: KeyForm = KeyForm::new();
        for term in delta_terms(&self.alg, 1, self.parity, wedges, z) {
            if self.trivial && term.post.is_some() {
                continue;
            }
            let fkey = CKey {
                wedges: term.f_wedges,
                z: term.f_z,
            };
            let form = self.resolve(&fkey)?;
            for (vgen, lin) in form {
                match &term.post {
                    None => {
                        let slot = comps.entry(vgen).or_default();
                        for (col, x) in &lin {
                            slot.push((*col, &term.coeff * x));
                        }
                    }
                    Some(w) => {
                        let acted = self.rep.act(&self.alg, w, &vgen);
                        for (out, cx) in acted.iter() {
                            let slot = comps.entry(out.clone()).or_default();
                            for (col, x) in &lin {
                                slot.push((*col, &term.coeff * cx * x));
                            }
                        }
                    }
                }
            }
        }
        Some(comps.into_values().collect())
    }

    /// The recipe primitive for a boundary-data vector: reads the probe
    /// slice prescribed by the vanishing proofs.
    fn recipe_primitive(&self, d: &SparseVec<u32>) -> Cochain {
        let mut g = Cochain::zero(0, self.parity);
        let value_at = |key: &CKey, vgen: &VGen| -> Rational {
            self.d_index
                .get(&(key.clone(), vgen.clone()))
                .and_then(|col| d.get(col).cloned())
                .unwrap_or_else(|| rat(0))
        };
        // Probe wedges for the reads: pi_0 = L_0^0 ∧ L_0^1 and the
        // canonical form of L_1^1 ∧ L_{-1}^0, which carries sign -1.
        let pi0 = wedge_normalize(&[lgen(0, 0).id(), lgen(0, 1).id()]).unwrap().1;
        let (sig1, pi1) = wedge_normalize(&[lgen(1, 1).id(), lgen(-1, 0).id()]).unwrap();
        for z in self.window.gens() {
            let (probe, scale) = if self.trivial {
                // g(X_k^h) = -(1/k) f(L_1^1 ∧ L_{-1}^0, X_k^h), zero at k = 0.
                if z.m == 0 {
                    continue;
                }
                (pi1.clone(), rat(-(sig1 as i64)) / rat(z.m))
            } else if self.s != 0 {
                // g(X) = -(1/s) f(L_0^0 ∧ L_0^1, X).
                (pi0.clone(), rat(-1) / rat(self.s))
            } else {
                // g(X) = -(1/2) f(L_1^1 ∧ L_{-1}^0, X).
                (pi1.clone(), rat(-(sig1 as i64)) / rat(2))
            };
            let key = CKey {
                wedges: vec![probe],
                z: z.id(),
            };
            let mut value = VElement::zero();
            for (_, vgen) in self.d_unknowns_of(&key) {
                value.add_term(vgen.clone(), value_at(&key, &vgen));
            }
            if !value.is_zero() {
                g.add_entry(
                    CKey {
                        wedges: vec![],
                        z: z.id(),
                    },
                    value,
                );
            }
        }
        g
    }

    /// Boundary data of delta(g) for a generator cochain supported on
    /// one generator/value pair.
    fn boundary_column(&self, ggen: &GenId, gval: &VGen) -> SparseVec<u32> {
        let mut g = Cochain::zero(0, self.parity);
        g.add_entry(
            CKey {
                wedges: vec![],
                z: ggen.clone(),
            },
            VElement::generator(gval.clone()),
        );
        self.boundary_data(&g)
    }

    /// Boundary data of delta(g) for any degree-0 cochain.
    fn boundary_data(&self, g: &Cochain) -> SparseVec<u32> {
        let mut out = SparseVec::new();
        for (dkey, col) in self.d_index.iter() {
            let value = delta_eval(&self.alg, &self.rep, g, &dkey.0.wedges, &dkey.0.z);
            let c = value.coeff(&dkey.1);
            out.add(*col, c);
        }
        out
    }

    /// The generator cochain space used for primitives: window
    /// generators with every admissible value family.
    fn primitive_space(&self) -> Vec<(GenId, VGen)> {
        let mut out = Vec::new();
        for z in self.window.gens() {
            if self.trivial {
                if z.parity() == self.parity && z.m + self.s == 0 && z.i + self.t == 0 {
                    out.push((z.id(), VGen::Unit));
                }
            } else {
                let oi = z.i + self.t;
                if oi < 0 {
                    continue;
                }
                for f in fams_of_parity(self.parity + z.parity()) {
                    out.push((
                        z.id(),
                        VGen::Wrapped(WGen::new(f, z.m + self.s, oi).id()),
                    ));
                }
            }
        }
        out
    }
}

/// Windowed second cohomology of the w-infinity algebra in one graded
/// component, computed through the probe reduction.
pub fn solve_h2(
    adjoint: bool,
    parity: Parity,
    s: i64,
    t: i64,
    window: &Window,
) -> Result<H2Report, AlgebraError> {
    let solver = Solver::new(adjoint, parity, s, t, *window)?;

    // Coverage: some probe must have a nonzero diagonal coefficient.
    let covered = if adjoint {
        (s, t) != (0, 0)
    } else {
        true
    };
    if !covered {
        return Ok(H2Report {
            adjoint,
            parity,
            bidegree: (s, t),
            window: *window,
            covered,
            d_unknowns: solver.d_keys.len(),
            kernel_dim: 0,
            boundary_rank: 0,
            interior_h_dim: None,
            trivializers: Vec::new(),
            rows_used: 0,
            spot_checks: 0,
            analysis: Some(
                "every diagonal probe is a grading operator and has zero \
                 diagonal coefficient on a weight-(0,0) cochain with adjoint \
                 coefficients; the probe reduction cannot certify this cell \
                 and direct assembly at this window is beyond exact \
                 elimination"
                    .to_string(),
            ),
        });
    }

    let gens = window.gens();
    let mut elim = Eliminator::new(solver.d_keys.len());
    let mut rows_used = 0usize;

    // Phase 1: probe-probe instances, swept in full.
    for (i, a) in solver.probes.iter().enumerate() {
        for b in solver.probes.iter().skip(i) {
            for z in &gens {
                if let Some(rows) = solver.instance_rows(&[a.clone(), b.clone()], &z.id()) {
                    for row in rows {
                        rows_used += 1;
                        elim.offer(row);
                    }
                }
            }
        }
    }

    // Phase 2: probe against a secondary wedge family; low norms swept
    // in full, the tail stopped once informative rows stall.
    let sec_gens = crate::w_infinity::gens_in_window(
        2.min(window.m_bound),
        1.min(window.i_bound),
    );
    let mut sec_wedges: Vec<WedgeTuple> = Vec::new();
    for (i, a) in sec_gens.iter().enumerate() {
        for b in &sec_gens[i..] {
            if let Some((_, w)) = wedge_normalize(&[a.id(), b.id()]) {
                sec_wedges.push(w);
            }
        }
    }
    let norm = |w: &WedgeTuple| -> i64 {
        w.factors()
            .iter()
            .filter_map(wgen_of)
            .map(|g| g.m.abs() + g.i)
            .sum()
    };
    sec_wedges.sort_by_key(|w| (norm(w), w.clone()));
    let futile_limit = 4000.max(solver.d_keys.len());
    let mut futile = 0usize;
    'outer: for w in &sec_wedges {
        let in_sweep = norm(w) <= 2;
        for pi in &solver.probes {
            for z in &gens {
                if let Some(rows) = solver.instance_rows(&[pi.clone(), w.clone()], &z.id()) {
                    for row in rows {
                        if row.is_empty() {
                            continue;
                        }
                        rows_used += 1;
                        if elim.offer(row) {
                            futile = 0;
                        } else if !in_sweep {
                            futile += 1;
                            if futile >= futile_limit {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }

    let kernel_rows = elim.nullspace();
    let kernel: Vec<SparseVec<u32>> = kernel_rows
        .iter()
        .map(|v| SparseVec::from_entries(v.iter().cloned()))
        .collect();
    let kernel_dim = kernel.len();

    // Boundary image inside the boundary data.
    let prim = solver.primitive_space();
    let columns: Vec<SparseVec<u32>> = prim
        .iter()
        .map(|(g, v)| solver.boundary_column(g, v))
        .collect();
    let mut belim = Eliminator::new(solver.d_keys.len());
    for col in &columns {
        belim.offer(col.iter().map(|(c, x)| (*c, x.clone())).collect());
    }
    let boundary_rank = belim.rank();

    // Certify each kernel vector: recipe first, exact solve second.
    let mut trivializers = Vec::new();
    let mut spot_checks = 0usize;
    for d in &kernel {
        let g = solver.recipe_primitive(d);
        let image = solver.boundary_data(&g);
        let mut diff = image.clone();
        diff.add_scaled(d, &rat(-1));
        let (path, g_final) = if diff.is_zero() {
            (TrivializePath::Recipe, Some(g))
        } else {
            match crate::linalg::in_span(d, &columns) {
                Some(coords) => {
                    let mut gf = Cochain::zero(0, solver.parity);
                    for ((ggen, gval), c) in prim.iter().zip(&coords) {
                        if !crate::rational::is_zero(c) {
                            gf.add_entry(
                                CKey {
                                    wedges: vec![],
                                    z: ggen.clone(),
                                },
                                VElement::term(gval.clone(), c.clone()),
                            );
                        }
                    }
                    (TrivializePath::Fallback, Some(gf))
                }
                None => (TrivializePath::None, None),
            }
        };
        // Spot verification on sampled non-probe keys: the
        // reconstruction of f from d must equal delta(g) exactly.
        let mut residual_zero = path != TrivializePath::None;
        let mut witness = None;
        if let Some(gc) = &g_final {
            let mut checked = 0;
            'keys: for w in sec_wedges.iter() {
                for z in gens.iter().step_by(7) {
                    if checked >= 40 {
                        break 'keys;
                    }
                    let key = CKey {
                        wedges: vec![w.clone()],
                        z: z.id(),
                    };
                    let Some(form) = solver.resolve(&key) else {
                        continue;
                    };
                    checked += 1;
                    spot_checks += 1;
                    let mut fd = VElement::zero();
                    for (vgen, lin) in &form {
                        let mut acc = rat(0);
                        for (col, x) in lin {
                            if let Some(c) = d.get(col) {
                                acc += c * x;
                            }
                        }
                        fd.add_term(vgen.clone(), acc);
                    }
                    let dg = delta_eval(&solver.alg, &solver.rep, gc, &key.wedges, &key.z);
                    if fd != dg {
                        residual_zero = false;
                        witness = Some(format!("key {key}: f = {fd}, delta g = {dg}"));
                        break 'keys;
                    }
                }
            }
        }
        trivializers.push(TrivializeReport {
            path,
            residual_zero,
            witness,
        });
    }

    // ker contains the boundary image (both satisfy every scheduled
    // instance), so the certified interior dimension is the quotient.
    let interior_h_dim = Some(kernel_dim - boundary_rank.min(kernel_dim));

    Ok(H2Report {
        adjoint,
        parity,
        bidegree: (s, t),
        window: *window,
        covered,
        d_unknowns: solver.d_keys.len(),
        kernel_dim,
        boundary_rank,
        interior_h_dim,
        trivializers,
        rows_used,
        spot_checks,
        analysis: None,
    })
}

/// Constructive trivializer for a concrete scalar-valued 2-cocycle:
/// builds the closed-form primitive g(X_k^h) = -(1/k) f(L_1^1 ∧ L_{-1}^0,
/// X_k^h) (zero at k = 0), verifies delta(g) = f exactly on every
/// relevant interior instance, and falls back to an exact linear solve
/// when the recipe misses.
pub fn trivialize_trivial_2cocycle(
    f: &Cochain,
    window: &Window,
) -> Result<(Cochain, TrivializeReport), AlgebraError> {
    trivialize_impl(f, window, false, 0)
}

/// Constructive trivializer for an adjoint-valued 2-cocycle of lower
/// degree s: g = -(1/s) f(L_0^0 ∧ L_0^1, ·) for s != 0, and
/// g = -(1/2) f(L_1^1 ∧ L_{-1}^0, ·) at s = 0.
pub fn trivialize_adjoint_2cocycle(
    f: &Cochain,
    s: i64,
    window: &Window,
) -> Result<(Cochain, TrivializeReport), AlgebraError> {
    trivialize_impl(f, window, true, s)
}

fn trivialize_impl(
    f: &Cochain,
    window: &Window,
    adjoint: bool,
    s: i64,
) -> Result<(Cochain, TrivializeReport), AlgebraError> {
    if f.degree != 1 {
        return Err(AlgebraError::InvalidBidegree(
            "trivializers take cochains with one wedge argument".into(),
        ));
    }
    let alg = WInfinityAlgebra;
    let rep = if adjoint {
        Representation::Adjoint
    } else {
        Representation::Trivial
    };

    // Recipe primitive.
    let pi0 = wedge_normalize(&[lgen(0, 0).id(), lgen(0, 1).id()]).unwrap().1;
    let (sig1, pi1) = wedge_normalize(&[lgen(1, 1).id(), lgen(-1, 0).id()]).unwrap();
    let mut g = Cochain::zero(0, f.parity);
    for z in window.gens() {
        let (probe, scale) = if !adjoint {
            if z.m == 0 {
                continue;
            }
            (pi1.clone(), rat(-(sig1 as i64)) / rat(z.m))
        } else if s != 0 {
            (pi0.clone(), rat(-1) / rat(s))
        } else {
            (pi1.clone(), rat(-(sig1 as i64)) / rat(2))
        };
        let value = f
            .eval_canonical(&[probe], &z.id())
            .scaled(&scale);
        if !value.is_zero() {
            g.add_entry(
                CKey {
                    wedges: vec![],
                    z: z.id(),
                },
                value,
            );
        }
    }

    let keys = relevant_keys(f, &g, window);
    let verify = |g: &Cochain| -> Option<String> {
        for key in &keys {
            let lhs = delta_eval(&alg, &rep, g, &key.wedges, &key.z);
            let rhs = f.eval_canonical(&key.wedges, &key.z);
            if lhs != rhs {
                return Some(format!("key {key}: delta g = {lhs}, f = {rhs}"));
            }
        }
        None
    };

    match verify(&g) {
        None => Ok((
            g,
            TrivializeReport {
                path: TrivializePath::Recipe,
                residual_zero: true,
                witness: None,
            },
        )),
        Some(_) => {
            // Exact fallback: solve delta(g) = f over window-supported
            // generator cochains on the relevant instances.
            let mut prim: Vec<(GenId, VGen)> = Vec::new();
            let mut prim_index: BTreeMap<(GenId, VGen), usize> = BTreeMap::new();
            let mut rows: Vec<(Vec<(usize, Rational)>, Rational)> = Vec::new();
            for key in &keys {
                // delta(e_{(z,v)}) entries at this key, by expansion.
                let mut comps: BTreeMap<VGen, Vec<(usize, Rational)>> = BTreeMap::new();
                for term in delta_terms(&alg, 0, f.parity, &key.wedges, &key.z) {
                    if !adjoint && term.post.is_some() {
                        continue;
                    }
                    let zslot = term.f_z.clone();
                    let Some(wz) = wgen_of(&zslot) else { continue };
                    if !window.contains(wz) {
                        continue;
                    }
                    // Admissible values at this generator.
                    let vals: Vec<VGen> = if adjoint {
                        let mut out = Vec::new();
                        for fam in Family::all() {
                            // Any site; the value parity check below
                            // filters what can contribute.
                            let _ = fam;
                        }
                        // Values live wherever f's entries point; use
                        // the generic family x site scan from g's shape:
                        // the fallback solves over the same generator
                        // space as the recipe, i.e. all families at the
                        // shifted site are handled by scanning f's
                        // support sites instead. Keep it simple: allow
                        // the four families at every site reachable from
                        // existing entries is overkill; instead allow
                        // exactly the sites used by the recipe space.
                        out
                    } else {
                        vec![VGen::Unit]
                    };
                    let _ = vals;
                    // Columns are created lazily below through closure.
                    let mut push = |v: VGen, coeff: Rational| {
                        let gk = (zslot.clone(), v.clone());
                        let idx = *prim_index.entry(gk.clone()).or_insert_with(|| {
                            prim.push(gk.clone());
                            prim.len() - 1
                        });
                        match &term.post {
                            None => comps.entry(v.clone()).or_default().push((idx, coeff)),
                            Some(w) => {
                                let acted = rep.act(&alg, w, &v);
                                for (out, cx) in acted.iter() {
                                    comps
                                        .entry(out.clone())
                                        .or_default()
                                        .push((idx, &coeff * cx));
                                }
                            }
                        }
                    };
                    if adjoint {
                        for fam in Family::all() {
                            for site_i in 0..=window.i_bound + 1 {
                                for site_m in -(window.m_bound + 2)..=(window.m_bound + 2) {
                                    let _ = (fam, site_i, site_m);
                                }
                            }
                        }
                        // Adjoint values: all four families at all
                        // plausible sites is too big; restrict to the
                        // parity-admissible families at the site
                        // determined by any graded structure is not
                        // available for a general sparse f, so allow
                        // families at sites already appearing in f or g.
                        for v in candidate_values(f, &g) {
                            if v.parity() == f.parity + wz.parity() {
                                push(v, term.coeff.clone());
                            }
                        }
                    } else {
                        if f.parity + wz.parity() == Parity::Even {
                            push(VGen::Unit, term.coeff.clone());
                        }
                    }
                }
                let target = f.eval_canonical(&key.wedges, &key.z);
                let mut comp_set: BTreeSet<VGen> = comps.keys().cloned().collect();
                for (v, _) in target.iter() {
                    comp_set.insert(v.clone());
                }
                for v in comp_set {
                    rows.push((
                        comps.get(&v).cloned().unwrap_or_default(),
                        target.coeff(&v),
                    ));
                }
            }
            let ncols = prim.len();
            let mut elim = Eliminator::new(ncols + 1);
            for (lhs, rhs) in rows {
                let mut row: Vec<(u32, Rational)> =
                    lhs.into_iter().map(|(i, c)| (i as u32, c)).collect();
                row.push((ncols as u32, -rhs));
                elim.offer(row);
            }
            match elim.solve_augmented() {
                Some(coords) => {
                    let mut gf = Cochain::zero(0, f.parity);
                    for ((zg, v), c) in prim.iter().zip(&coords) {
                        // The augmented solve negates the target.
                        let c = -c.clone();
                        if !crate::rational::is_zero(&c) {
                            gf.add_entry(
                                CKey {
                                    wedges: vec![],
                                    z: zg.clone(),
                                },
                                VElement::term(v.clone(), c),
                            );
                        }
                    }
                    match verify(&gf) {
                        None => Ok((
                            gf,
                            TrivializeReport {
                                path: TrivializePath::Fallback,
                                residual_zero: true,
                                witness: None,
                            },
                        )),
                        Some(w) => Ok((
                            gf,
                            TrivializeReport {
                                path: TrivializePath::Fallback,
                                residual_zero: false,
                                witness: Some(w),
                            },
                        )),
                    }
                }
                None => Ok((
                    g,
                    TrivializeReport {
                        path: TrivializePath::None,
                        residual_zero: false,
                        witness: Some("no windowed primitive exists".into()),
                    },
                )),
            }
        }
    }
}

/// Candidate module generators for fallback primitives: every value
/// appearing in f or in the recipe primitive, together with their
/// family partners at the same site.
fn candidate_values(f: &Cochain, g: &Cochain) -> Vec<VGen> {
    let mut out = BTreeSet::new();
    let mut add = |v: &VGen| {
        if let VGen::Wrapped(GenId::W(w)) = v {
            for fam in Family::all() {
                if fam.parity() == w.parity() {
                    out.insert(VGen::Wrapped(WGen::new(fam, w.m, w.i).id()));
                }
            }
        } else {
            out.insert(v.clone());
        }
    };
    for (_, val) in f.entries() {
        for (v, _) in val.iter() {
            add(v);
        }
    }
    for (_, val) in g.entries() {
        for (v, _) in val.iter() {
            add(v);
        }
    }
    out.into_iter().collect()
}

/// Interior instances relevant to f and g: the support of f, and every
/// interior key whose expansion can reach the support of g.
fn relevant_keys(f: &Cochain, g: &Cochain, window: &Window) -> Vec<CKey> {
    let mut keys: BTreeSet<CKey> = BTreeSet::new();
    for (key, _) in f.entries() {
        keys.insert(key.clone());
    }
    // Support generators of g.
    let gsupp: BTreeSet<GenId> = g.entries().map(|(k, _)| k.z.clone()).collect();
    let gens: Vec<WGen> = crate::w_infinity::gens_in_window(
        window.m_bound - window.margin,
        window.i_bound - window.margin,
    );
    // Keys whose bracket or factor structure touches supp(g): the
    // bracket term -g([a,b,z]) and the action terms both need a factor
    // or bracket output in the support.
    for target in &gsupp {
        let Some(tw) = wgen_of(target) else { continue };
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i..] {
                // Bracket output site must match the target site.
                let zm = tw.m - a.m - b.m;
                let zi = tw.i + 1 - a.i - b.i;
                if zi < 0 || !window.contains_site(zm, zi) {
                    continue;
                }
                for fam in Family::all() {
                    let z = WGen::new(fam, zm, zi);
                    if !window.interior_contains(&z) {
                        continue;
                    }
                    if let Some((_, w)) = wedge_normalize(&[a.id(), b.id()]) {
                        keys.insert(CKey {
                            wedges: vec![w],
                            z: z.id(),
                        });
                    }
                }
            }
        }
        // Keys with the target generator in a slot.
        for a in &gens {
            if let Some((_, w)) = wedge_normalize(&[a.id(), target.clone()]) {
                for z in gens.iter() {
                    keys.insert(CKey {
                        wedges: vec![w.clone()],
                        z: z.id(),
                    });
                }
            }
            for z in gens.iter().take(40) {
                if let Some((_, w)) = wedge_normalize(&[a.id(), z.id()]) {
                    keys.insert(CKey {
                        wedges: vec![w],
                        z: target.clone(),
                    });
                }
            }
        }
    }
    keys.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    #[test]
    fn trivializer_zero_cocycle() {
        let window = Window::new(4, 2, 1).unwrap();
        let f = Cochain::zero(1, Parity::Even);
        let (g, report) = trivialize_trivial_2cocycle(&f, &window).unwrap();
        assert!(g.is_zero());
        assert!(report.residual_zero);
    }

    #[test]
    fn h2_trivial_small_windows() {
        for (s, t) in [(0i64, 0i64), (1, 0), (0, 1), (2, 1)] {
            for parity in [Parity::Even, Parity::Odd] {
                let window = Window::new(5, 3, 2).unwrap();
                let report = solve_h2(false, parity, s, t, &window).unwrap();
                assert!(report.covered);
                assert_eq!(
                    report.interior_h_dim,
                    Some(0),
                    "trivial ({s},{t}) {parity:?}: {report:?}"
                );
                for tr in &report.trivializers {
                    assert!(tr.residual_zero, "trivializer failed: {tr:?}");
                }
            }
        }
    }

    #[test]
    fn h2_adjoint_small_windows() {
        for (s, t) in [(1i64, 0i64), (0, 1)] {
            let window = Window::new(4, 2, 1).unwrap();
            let report = solve_h2(true, Parity::Even, s, t, &window).unwrap();
            assert!(report.covered);
            assert_eq!(
                report.interior_h_dim,
                Some(0),
                "adjoint ({s},{t}): kernel {} boundary {}",
                report.kernel_dim,
                report.boundary_rank
            );
        }
    }

    #[test]
    fn h2_adjoint_degenerate_cell_reported() {
        let window = Window::new(4, 2, 1).unwrap();
        let report = solve_h2(true, Parity::Even, 0, 0, &window).unwrap();
        assert!(!report.covered);
        assert!(report.interior_h_dim.is_none());
        assert!(report.analysis.is_some());
    }

    #[test]
    fn trivializer_round_trip_coboundary() {
        // f = delta(g0) for a sparse g0 must trivialize with residual
        // zero; the returned primitive may differ from g0 by a
        // delta-annihilated functional.
        let alg = WInfinityAlgebra;
        let window = Window::new(4, 2, 1).unwrap();
        let mut s = Sampler::new(97, 2, 1);
        for adjoint in [false, true] {
            let g0 = s.random_cochain(0, Parity::Even, adjoint, 2);
            let rep = if adjoint {
                Representation::Adjoint
            } else {
                Representation::Trivial
            };
            // Materialize f = delta(g0) on all window keys reachable
            // from g0's support.
            let mut f = Cochain::zero(1, Parity::Even);
            let keys = relevant_keys(&Cochain::zero(1, Parity::Even), &g0, &window);
            for key in keys {
                let v = delta_eval(&alg, &rep, &g0, &key.wedges, &key.z);
                if !v.is_zero() {
                    f.add_entry(key, v);
                }
            }
            if f.is_zero() {
                continue;
            }
            let result = if adjoint {
                trivialize_adjoint_2cocycle(&f, 0, &window)
            } else {
                trivialize_trivial_2cocycle(&f, &window)
            };
            let (_, report) = result.unwrap();
            assert!(
                report.residual_zero,
                "round trip failed (adjoint={adjoint}): {report:?}"
            );
        }
    }
}
