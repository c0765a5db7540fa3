//! Finite index windows and direct windowed cocycle solvers.
//!
//! The w-infinity basis is infinite; every solver truncates to the
//! window |m| <= M, 0 <= i <= I and reports dimensions only after
//! restriction to the interior window (M-r, I-r), discarding solutions
//! supported near the truncation boundary. The equation set is a
//! deterministic probe-driven schedule; any subset of the full instance
//! set keeps the computed cocycle space a superset of the truth, so a
//! reported interior dimension of zero is exact.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraError, NAlgebra, WInfinityAlgebra};
use crate::cochain::CKey;
use crate::coboundary::delta_terms;
use crate::generator::{GenId, VGen};
use crate::linalg::{Eliminator, SparseVec};
use crate::parity::Parity;
use crate::rational::Rational;
use crate::rep::Representation;
use crate::w_infinity::{gens_in_window, Family, WGen};
use crate::wedge::{wedge_normalize, WedgeTuple};

/// Index window with an interior margin. Dimensions are reported after
/// restriction to the interior (m_bound - margin, i_bound - margin).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub m_bound: i64,
    pub i_bound: i64,
    pub margin: i64,
}

impl Window {
    pub fn new(m_bound: i64, i_bound: i64, margin: i64) -> Result<Window, AlgebraError> {
        if m_bound < 0 || i_bound < 0 || margin < 0 {
            return Err(AlgebraError::WindowTooSmall(
                "window bounds must be nonnegative".into(),
            ));
        }
        if m_bound - margin < 0 || i_bound - margin < 0 {
            return Err(AlgebraError::WindowTooSmall(format!(
                "interior ({}, {}) is empty",
                m_bound - margin,
                i_bound - margin
            )));
        }
        Ok(Window {
            m_bound,
            i_bound,
            margin,
        })
    }

    pub fn contains(&self, g: &WGen) -> bool {
        g.m.abs() <= self.m_bound && g.i >= 0 && g.i <= self.i_bound
    }

    pub fn interior_contains(&self, g: &WGen) -> bool {
        g.m.abs() <= self.m_bound - self.margin && g.i >= 0 && g.i <= self.i_bound - self.margin
    }

    pub fn contains_site(&self, m: i64, i: i64) -> bool {
        m.abs() <= self.m_bound && i >= 0 && i <= self.i_bound
    }

    pub fn interior_contains_site(&self, m: i64, i: i64) -> bool {
        m.abs() <= self.m_bound - self.margin && i >= 0 && i <= self.i_bound - self.margin
    }

    pub fn gens(&self) -> Vec<WGen> {
        gens_in_window(self.m_bound, self.i_bound)
    }
}

/// Unknown coordinate of a windowed cochain space: canonical key plus
/// the module generator carrying the coefficient.
pub type UnknownKey = (CKey, VGen);

/// Output of a windowed cocycle/coboundary computation.
#[derive(Clone, Debug)]
pub struct SpacesReport {
    pub k: usize,
    pub unknown_count: usize,
    pub cocycle_dim: usize,
    pub cocycle_rank_interior: usize,
    pub coboundary_rank_interior: usize,
    pub interior_h_dim: usize,
    pub cocycle_basis: Vec<SparseVec<UnknownKey>>,
    pub instances_used: usize,
}

fn wgen_of(g: &GenId) -> Option<&WGen> {
    match g {
        GenId::W(w) => Some(w),
        _ => None,
    }
}

fn key_lower_total(key: &CKey) -> i64 {
    key.wedges
        .iter()
        .flat_map(|w| w.factors())
        .chain(std::iter::once(&key.z))
        .filter_map(wgen_of)
        .map(|w| w.m)
        .sum()
}

fn key_upper_total(key: &CKey) -> i64 {
    key.wedges
        .iter()
        .flat_map(|w| w.factors())
        .chain(std::iter::once(&key.z))
        .filter_map(wgen_of)
        .map(|w| w.i)
        .sum()
}

/// Out-site of a degree-(k-1) cochain of bidegree (s,t) on `key`:
/// lower P + s, upper Q + t - (number of wedge arguments).
pub fn out_site(key: &CKey, s: i64, t: i64) -> (i64, i64) {
    let deg = key.wedges.len() as i64;
    (key_lower_total(key) + s, key_upper_total(key) + t - deg)
}

fn fams_of_parity(p: Parity) -> [Family; 2] {
    match p {
        Parity::Even => [Family::L, Family::Lb],
        Parity::Odd => [Family::H, Family::Hb],
    }
}

/// The graded component layout of a w-infinity windowed cochain space.
#[derive(Clone, Debug)]
pub struct WSpace {
    pub degree: usize,
    pub parity: Parity,
    pub bidegree: (i64, i64),
    pub window: Window,
    pub trivial: bool,
}

impl WSpace {
    /// None: the key carries untracked true values (instances touching
    /// it must be dropped). Some(empty): structurally zero.
    /// Some(list): the unknowns carrying the key's value.
    pub fn resolve(&self, key: &CKey) -> Option<Vec<(UnknownKey, VGen)>> {
        debug_assert_eq!(key.wedges.len(), self.degree);
        let (s, t) = self.bidegree;
        for g in key
            .wedges
            .iter()
            .flat_map(|w| w.factors())
            .chain(std::iter::once(&key.z))
        {
            let w = wgen_of(g)?;
            if !self.window.contains(w) {
                return None;
            }
        }
        let p = key_lower_total(key);
        if p.abs() > self.window.m_bound {
            return None;
        }
        let (om, oi) = out_site(key, s, t);
        if self.trivial {
            // Scalar values live at the zero site of the grading.
            if key.parity() != self.parity || om != 0 || oi != 0 {
                return Some(Vec::new());
            }
            return Some(vec![((key.clone(), VGen::Unit), VGen::Unit)]);
        }
        if !self.window.contains_site(om, oi) {
            return None;
        }
        let vpar = self.parity + key.parity();
        Some(
            fams_of_parity(vpar)
                .iter()
                .map(|f| {
                    let out = VGen::Wrapped(WGen::new(*f, om, oi).id());
                    ((key.clone(), out.clone()), out)
                })
                .collect(),
        )
    }

    /// All tracked unknowns, in canonical order.
    pub fn unknowns(&self) -> Result<Vec<UnknownKey>, AlgebraError> {
        let gens = self.window.gens();
        let mut keys: Vec<UnknownKey> = Vec::new();
        let push_key = |key: CKey, keys: &mut Vec<UnknownKey>| {
            if let Some(list) = self.resolve(&key) {
                for (u, _) in list {
                    keys.push(u);
                }
            }
        };
        match self.degree {
            0 => {
                for z in &gens {
                    push_key(
                        CKey {
                            wedges: vec![],
                            z: z.id(),
                        },
                        &mut keys,
                    );
                }
            }
            1 => {
                for (i, a) in gens.iter().enumerate() {
                    for b in &gens[i..] {
                        let Some((_, w)) = wedge_normalize(&[a.id(), b.id()]) else {
                            continue;
                        };
                        for z in &gens {
                            push_key(
                                CKey {
                                    wedges: vec![w.clone()],
                                    z: z.id(),
                                },
                                &mut keys,
                            );
                        }
                    }
                }
            }
            d => {
                return Err(AlgebraError::SystemTooLarge(format!(
                    "direct enumeration of degree-{d} cochain spaces"
                )))
            }
        }
        keys.sort();
        keys.dedup();
        Ok(keys)
    }

    pub fn key_interior(&self, key: &CKey) -> bool {
        let (s, t) = self.bidegree;
        for g in key
            .wedges
            .iter()
            .flat_map(|w| w.factors())
            .chain(std::iter::once(&key.z))
        {
            match wgen_of(g) {
                Some(w) if self.window.interior_contains(w) => {}
                _ => return false,
            }
        }
        let p = key_lower_total(key);
        if p.abs() > self.window.m_bound - self.window.margin {
            return false;
        }
        if self.trivial {
            return true;
        }
        let (om, oi) = out_site(key, s, t);
        self.window.interior_contains_site(om, oi)
    }
}

/// Deterministic probe schedule parameters.
pub struct Schedule {
    pub probe_m: i64,
    pub probe_i: i64,
    pub batch: usize,
    pub patience: usize,
    pub max_instances: usize,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule {
            probe_m: 3,
            probe_i: 2,
            batch: 400,
            patience: 3,
            max_instances: 4_000_000,
        }
    }
}

/// Builds the component rows of one delta instance over the unknown
/// space. Returns None when the instance references untracked keys.
pub fn instance_rows(
    alg: &dyn NAlgebra,
    rep: &Representation,
    space: &WSpace,
    index: &BTreeMap<UnknownKey, u32>,
    wedges: &[WedgeTuple],
    z: &GenId,
) -> Option<Vec<Vec<(u32, Rational)>>> {
    let mut comps: BTreeMap<VGen, Vec<(u32, Rational)>> = BTreeMap::new();
    for term in delta_terms(alg, space.degree, space.parity, wedges, z) {
        if space.trivial && term.post.is_some() {
            continue;
        }
        let key = CKey {
            wedges: term.f_wedges,
            z: term.f_z,
        };
        let resolved = space.resolve(&key)?;
        for (ukey, vgen) in resolved {
            let col = *index.get(&ukey)?;
            match &term.post {
                None => comps
                    .entry(vgen)
                    .or_default()
                    .push((col, term.coeff.clone())),
                Some(w) => {
                    let acted = rep.act(alg, w, &vgen);
                    for (out, c) in acted.iter() {
                        comps
                            .entry(out.clone())
                            .or_default()
                            .push((col, &term.coeff * c));
                    }
                }
            }
        }
    }
    Some(comps.into_values().collect())
}

/// Windowed cocycle and coboundary spaces for the w-infinity backend,
/// solved by direct assembly. `k` follows the cohomology indexing: the
/// unknowns form C^{k-1}, cocycles are the kernel of the operator into
/// C^k, and coboundaries come from C^{k-2}.
pub fn windowed_spaces_w(
    k: usize,
    rep: &Representation,
    parity: Parity,
    bidegree: (i64, i64),
    window: &Window,
    schedule: &Schedule,
    cap: usize,
) -> Result<SpacesReport, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::InvalidBidegree("k must be positive".into()));
    }
    if bidegree.1 < 0 {
        return Err(AlgebraError::InvalidBidegree(format!(
            "upper bidegree must be a natural number, got {}",
            bidegree.1
        )));
    }
    let alg = WInfinityAlgebra;
    let trivial = rep.is_trivial();
    let space = WSpace {
        degree: k - 1,
        parity,
        bidegree,
        window: *window,
        trivial,
    };
    let unknowns = space.unknowns()?;
    if unknowns.len() > cap {
        return Err(AlgebraError::SystemTooLarge(format!(
            "{} unknowns exceeds cap {}",
            unknowns.len(),
            cap
        )));
    }
    let index: BTreeMap<UnknownKey, u32> = unknowns
        .iter()
        .enumerate()
        .map(|(i, u)| (u.clone(), i as u32))
        .collect();

    // Probe wedges ordered by norm shells.
    let probe_gens = gens_in_window(
        schedule.probe_m.min(window.m_bound),
        schedule.probe_i.min(window.i_bound),
    );
    let mut probe_wedges: Vec<WedgeTuple> = Vec::new();
    for (i, a) in probe_gens.iter().enumerate() {
        for b in &probe_gens[i..] {
            if let Some((_, w)) = wedge_normalize(&[a.id(), b.id()]) {
                probe_wedges.push(w);
            }
        }
    }
    probe_wedges.sort_by_key(|w| {
        w.factors()
            .iter()
            .filter_map(wgen_of)
            .map(|g| g.m.abs() + g.i)
            .sum::<i64>()
    });
    let gens = window.gens();

    let mut elim = Eliminator::new(unknowns.len());
    let mut instances = 0usize;
    let futile_limit = (schedule.batch * schedule.patience).max(unknowns.len());
    let mut futile = 0usize;

    let wedge_norm = |w: &WedgeTuple| -> i64 {
        w.factors()
            .iter()
            .filter_map(wgen_of)
            .map(|g| g.m.abs() + g.i)
            .sum()
    };
    // Wedges up to this norm are swept in full; see the derivation
    // solver for why rank-based stopping alone is not enough.
    let full_sweep_norm = 3;
    'outer: for w1 in &probe_wedges {
        let seconds: Vec<Option<&WedgeTuple>> = if k == 1 {
            vec![None]
        } else {
            probe_wedges.iter().map(Some).collect()
        };
        for w2 in seconds {
            let in_sweep = wedge_norm(w1)
                + w2.map(wedge_norm).unwrap_or(0)
                <= full_sweep_norm;
            for z in &gens {
                let wedge_args: Vec<WedgeTuple> = match w2 {
                    None => vec![w1.clone()],
                    Some(w2) => vec![w1.clone(), w2.clone()],
                };
                instances += 1;
                if instances > schedule.max_instances {
                    break 'outer;
                }
                if let Some(rows) = instance_rows(&alg, rep, &space, &index, &wedge_args, &z.id())
                {
                    for row in rows {
                        if row.is_empty() {
                            continue;
                        }
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

    let kernel = elim.nullspace();
    let cocycle_dim = kernel.len();

    // Interior restriction of the kernel.
    let interior_cols: Vec<bool> = unknowns
        .iter()
        .map(|(key, _)| space.key_interior(key))
        .collect();
    let mut zint = Eliminator::new(unknowns.len());
    for v in &kernel {
        let restricted: Vec<(u32, Rational)> = v
            .iter()
            .filter(|(c, _)| interior_cols[*c as usize])
            .cloned()
            .collect();
        zint.offer(restricted);
    }
    let cocycle_rank_interior = zint.rank();

    // Coboundary side: the interior rank of delta applied to the
    // window-supported generator space C^{k-2}; zero when the complex
    // starts at the unknowns.
    let coboundary_rank_interior = if k == 1 {
        0
    } else {
        let lower = WSpace {
            degree: k - 2,
            parity,
            bidegree,
            window: *window,
            trivial,
        };
        let lower_unknowns = coboundary_generators(&lower);
        let lower_index: BTreeMap<UnknownKey, u32> = lower_unknowns
            .iter()
            .enumerate()
            .map(|(i, u)| (u.clone(), i as u32))
            .collect();
        let mut belim = Eliminator::new(lower_unknowns.len());
        for (ukey, out) in unknowns.iter() {
            if !space.key_interior(ukey) {
                continue;
            }
            let row = coboundary_row(&alg, rep, &lower, &lower_index, ukey, out);
            belim.offer(row);
            if belim.rank() == lower_unknowns.len() {
                break;
            }
        }
        belim.rank()
    };

    let interior_h_dim = cocycle_rank_interior.saturating_sub(coboundary_rank_interior);

    Ok(SpacesReport {
        k,
        unknown_count: unknowns.len(),
        cocycle_dim,
        cocycle_rank_interior,
        coboundary_rank_interior,
        interior_h_dim,
        cocycle_basis: kernel
            .into_iter()
            .map(|v| {
                SparseVec::from_entries(
                    v.into_iter().map(|(c, x)| (unknowns[c as usize].clone(), x)),
                )
            })
            .collect(),
        instances_used: instances,
    })
}

/// Generator cochains for the coboundary image: window-supported keys
/// without the out-site window cut (any finitely supported generator
/// map yields a genuine coboundary).
fn coboundary_generators(lower: &WSpace) -> Vec<UnknownKey> {
    assert_eq!(lower.degree, 0, "coboundary generators beyond degree 0");
    let gens = lower.window.gens();
    let (s, t) = lower.bidegree;
    let mut out = Vec::new();
    for z in &gens {
        let key = CKey {
            wedges: vec![],
            z: z.id(),
        };
        let (om, oi) = out_site(&key, s, t);
        if lower.trivial {
            if key.parity() == lower.parity && om == 0 && oi == 0 {
                out.push((key, VGen::Unit));
            }
        } else {
            if oi < 0 {
                continue;
            }
            let vpar = lower.parity + key.parity();
            for f in fams_of_parity(vpar) {
                out.push((key.clone(), VGen::Wrapped(WGen::new(f, om, oi).id())));
            }
        }
    }
    out.sort();
    out
}

/// Row of the transposed coboundary matrix: the `out` component of
/// delta(g) at `ukey`, as a linear form over the generator cochains.
fn coboundary_row(
    alg: &dyn NAlgebra,
    rep: &Representation,
    lower: &WSpace,
    lower_index: &BTreeMap<UnknownKey, u32>,
    ukey: &CKey,
    out: &VGen,
) -> Vec<(u32, Rational)> {
    let mut row: Vec<(u32, Rational)> = Vec::new();
    let (s, t) = lower.bidegree;
    for term in delta_terms(alg, lower.degree, lower.parity, &ukey.wedges, &ukey.z) {
        if lower.trivial && term.post.is_some() {
            continue;
        }
        let key = CKey {
            wedges: term.f_wedges,
            z: term.f_z,
        };
        match &term.post {
            None => {
                if let Some(col) = lower_index.get(&(key.clone(), out.clone())) {
                    row.push((*col, term.coeff.clone()));
                }
            }
            Some(w) => {
                let vpar = lower.parity + key.parity();
                let (om, oi) = out_site(&key, s, t);
                if oi < 0 {
                    continue;
                }
                for f in fams_of_parity(vpar) {
                    let vg = VGen::Wrapped(WGen::new(f, om, oi).id());
                    if let Some(col) = lower_index.get(&(key.clone(), vg.clone())) {
                        let acted = rep.act(alg, w, &vg);
                        let c = acted.coeff(out);
                        if !crate::rational::is_zero(&c) {
                            row.push((*col, &term.coeff * c));
                        }
                    }
                }
            }
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableAlgebra;

    #[test]
    fn window_validation() {
        assert!(Window::new(8, 5, 2).is_ok());
        assert!(Window::new(1, 0, 1).is_err());
    }

    #[test]
    fn zero_algebra_delta_vanishes() {
        // For the zero bracket every cochain is a cocycle: all delta
        // terms go through brackets or module actions of brackets.
        let gens = vec![
            GenId::named("a", Parity::Even),
            GenId::named("b", Parity::Odd),
        ];
        let alg = TableAlgebra::zero(3, gens.clone());
        let rep = Representation::Adjoint;
        let mut f = crate::cochain::Cochain::zero(0, Parity::Even);
        f.add_entry(
            CKey {
                wedges: vec![],
                z: gens[0].clone(),
            },
            crate::rep::VElement::generator(VGen::Wrapped(gens[0].clone())),
        );
        let (_, w) = wedge_normalize(&[gens[0].clone(), gens[1].clone()]).unwrap();
        let got = crate::coboundary::delta_eval(&alg, &rep, &f, &[w], &gens[1]);
        assert!(got.is_zero());
    }

    #[test]
    fn one_cocycle_space_small_window() {
        // Even bidegree (1,1) 1-cocycles with adjoint coefficients on a
        // small window: dimension 4 after interior restriction.
        let window = Window::new(5, 3, 1).unwrap();
        let report = windowed_spaces_w(
            1,
            &Representation::Adjoint,
            Parity::Even,
            (1, 1),
            &window,
            &Schedule::default(),
            100_000,
        )
        .unwrap();
        assert_eq!(report.coboundary_rank_interior, 0);
        assert_eq!(report.interior_h_dim, 4, "report: {report:?}");
    }
}
