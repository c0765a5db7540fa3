//! Derivations of the super w-infinity 3-algebra, degree by degree.
//!
//! A homogeneous derivation of degree (s,t) shifts the lower index by s
//! and the stored upper index by t. The solver assembles the derivation
//! identity on canonical generator triples as an exact linear system
//! over the eight coefficient families (two output families for each of
//! the four input families) and reports the interior-restricted solution
//! dimension alongside the bases claimed in closed form.

use std::collections::BTreeMap;

use crate::algebra::{bracket_gens, AlgebraError, LinearMap, NAlgebra, WInfinityAlgebra};
use crate::generator::GenId;
use crate::linalg::{in_span, Eliminator, SparseVec};
use crate::parity::{pow_sign, Parity};
use crate::rational::{rat, Rational};
use crate::w_infinity::{gens_in_window, hbgen, hgen, lbgen, lgen, Family, WGen};
use crate::window::Window;

/// Unknown coordinate: input generator and output family. The output
/// site is the input site shifted by the bidegree.
pub type DerivKey = (WGen, Family);

#[derive(Clone, Debug)]
pub struct DerivationSolution {
    pub parity: Parity,
    pub s: i64,
    pub t: i64,
    pub windowed_dimension: usize,
    /// Dimension after restriction to the interior window.
    pub dimension: usize,
    pub basis: Vec<SparseVec<DerivKey>>,
    pub claimed_in_kernel: bool,
    pub claimed_interior_rank: usize,
    /// Interior rank of the claimed basis together with the
    /// family-constant derivations at degree (0,0).
    pub extended_interior_rank: usize,
    pub instances_used: usize,
}

fn fams_of_parity(p: Parity) -> [Family; 2] {
    match p {
        Parity::Even => [Family::L, Family::Lb],
        Parity::Odd => [Family::H, Family::Hb],
    }
}

/// The closed-form derivation bases of the classification, case by
/// case on the degree.
pub fn claimed_derivation_basis(
    parity: Parity,
    s: i64,
    t: i64,
) -> Result<Vec<LinearMap>, AlgebraError> {
    if t < 0 {
        return Err(AlgebraError::InvalidBidegree(format!(
            "derivation degree (s,t) needs t >= 0, got ({s},{t})"
        )));
    }
    let ad = |a: WGen, b: WGen| LinearMap::ad_gens(&[a.id(), b.id()]);
    let basis = match parity {
        Parity::Even => {
            if s + 2 * t != 0 {
                vec![
                    ad(lgen(1 + s, t), lgen(-1, 1)),
                    ad(lgen(1, 0), lgen(-1 + s, 1 + t)),
                    ad(lbgen(1 + s, t), lgen(-1, 1)),
                    ad(lgen(1, 0), lbgen(-1 + s, 1 + t)),
                ]
            } else if t != 0 {
                vec![
                    ad(lgen(1 + s, 1 + t), lgen(-1, 0)),
                    ad(lgen(1, 1), lgen(-1 + s, t)),
                    ad(lbgen(1 + s, 1 + t), lgen(-1, 0)),
                    ad(lgen(1, 1), lbgen(-1 + s, t)),
                ]
            } else {
                vec![
                    ad(lgen(-1, 1), lgen(1, 0)),
                    ad(lgen(0, 1), lgen(0, 0)),
                    ad(hgen(0, 1), hbgen(0, 0)),
                    ad(hgen(1, 0), hbgen(-1, 1)),
                    LinearMap::Phi1,
                    LinearMap::Phi2,
                ]
            }
        }
        Parity::Odd => {
            if s + 2 * t != 0 {
                vec![
                    ad(hgen(1 + s, t), lgen(-1, 1)),
                    ad(hbgen(1 + s, t), lgen(-1, 1)),
                    ad(lgen(1, 0), hgen(-1 + s, 1 + t)),
                    ad(lgen(1, 0), hbgen(-1 + s, 1 + t)),
                ]
            } else if t != 0 {
                vec![
                    ad(hgen(1 + s, 1 + t), lgen(-1, 0)),
                    ad(hbgen(1 + s, 1 + t), lgen(-1, 0)),
                    ad(lgen(1, 1), hgen(-1 + s, t)),
                    ad(lgen(1, 1), hbgen(-1 + s, t)),
                ]
            } else {
                vec![
                    ad(lgen(1, 0), hgen(-1, 1)),
                    ad(lgen(1, 0), hbgen(-1, 1)),
                    ad(lgen(0, 0), hgen(0, 1)),
                    ad(lgen(0, 0), hbgen(0, 1)),
                ]
            }
        }
    };
    Ok(basis)
}

/// Degree-(0,0) derivations that exist beyond the classified list: the
/// family-constant maps. For each one the would-be violation of the
/// derivation law cancels identically through the antisymmetry of the
/// structure constants; all are verified against the derivation checker
/// in the tests. Even parity contributes the constants h -> hb and
/// hb -> h; odd parity contributes h -> Lb, hb -> Lb, and the coupled
/// pairs (Lb -> hb, h -> -L) and (Lb -> h, hb -> L).
pub fn extra_degree_zero_derivations(parity: Parity) -> Vec<LinearMap> {
    use Family::{Hb, Lb, H, L};
    match parity {
        Parity::Even => vec![
            LinearMap::Sector {
                parity,
                pairs: vec![(H, Hb, 1)],
            },
            LinearMap::Sector {
                parity,
                pairs: vec![(Hb, H, 1)],
            },
        ],
        Parity::Odd => vec![
            LinearMap::Sector {
                parity,
                pairs: vec![(H, Lb, 1)],
            },
            LinearMap::Sector {
                parity,
                pairs: vec![(Hb, Lb, 1)],
            },
            LinearMap::Sector {
                parity,
                pairs: vec![(Lb, Hb, 1), (H, L, -1)],
            },
            LinearMap::Sector {
                parity,
                pairs: vec![(Lb, H, 1), (Hb, L, 1)],
            },
        ],
    }
}

/// Coefficient vector of a degree-(s,t) homogeneous map over the
/// windowed unknown layout. Rejects maps that stray off the graded
/// shape.
pub fn coefficient_vector(
    map: &LinearMap,
    parity: Parity,
    s: i64,
    t: i64,
    window: &Window,
) -> Result<SparseVec<DerivKey>, AlgebraError> {
    let alg = WInfinityAlgebra;
    let mut vec = SparseVec::new();
    for g in window.gens() {
        let value = map.eval(&alg, &g.id());
        for (out, c) in value.iter() {
            let GenId::W(w) = out else {
                return Err(AlgebraError::NonHomogeneousMap);
            };
            let ok = w.m == g.m + s
                && w.i == g.i + t
                && w.parity() == g.parity() + parity;
            if !ok {
                return Err(AlgebraError::InvalidBidegree(format!(
                    "map value {out} at {g} is not of degree ({s},{t})"
                )));
            }
            vec.add((g, w.family), c.clone());
        }
    }
    Ok(vec)
}

/// Windowed derivation solver.
pub fn solve_derivations(
    parity: Parity,
    s: i64,
    t: i64,
    window: &Window,
    probe_m: i64,
    probe_i: i64,
) -> Result<DerivationSolution, AlgebraError> {
    if t < 0 {
        return Err(AlgebraError::InvalidBidegree(format!(
            "derivation degree (s,t) needs t >= 0, got ({s},{t})"
        )));
    }
    let claimed = claimed_derivation_basis(parity, s, t)?;
    // The claimed generators must be representable inside the window.
    for map in &claimed {
        if let LinearMap::Ad { tuple, .. } = map {
            for e in tuple {
                for (g, _) in e.iter() {
                    if let GenId::W(w) = g {
                        if !window.contains(w) {
                            return Err(AlgebraError::WindowTooSmall(format!(
                                "claimed basis generator {g} is outside the window"
                            )));
                        }
                    }
                }
            }
        }
    }

    let alg = WInfinityAlgebra;
    let gens = window.gens();
    let mut unknowns: Vec<DerivKey> = Vec::new();
    for g in &gens {
        for f in fams_of_parity(g.parity() + parity) {
            unknowns.push((*g, f));
        }
    }
    unknowns.sort();
    let index: BTreeMap<DerivKey, u32> = unknowns
        .iter()
        .enumerate()
        .map(|(i, u)| (*u, i as u32))
        .collect();

    // Target site of the unknown (g, F).
    let target = |g: &WGen, f: Family| WGen::new(f, g.m + s, g.i + t);

    let probes = gens_in_window(probe_m.min(window.m_bound), probe_i.min(window.i_bound));
    // Probe pairs ordered by norm shells so that every family pattern
    // appears early; a family-blocked order would let the early stop
    // starve whole constraint classes.
    let mut pairs: Vec<(WGen, WGen)> = Vec::new();
    for (ai, a) in probes.iter().enumerate() {
        for b in &probes[ai..] {
            pairs.push((*a, *b));
        }
    }
    pairs.sort_by_key(|(a, b)| (a.m.abs() + a.i + b.m.abs() + b.i, *a, *b));

    let mut elim = Eliminator::new(unknowns.len());
    let mut instances = 0usize;
    // Probe pairs up to this norm are swept in full; beyond it the
    // schedule stops once this many consecutive informative rows fail
    // to grow the rank. A full low-norm sweep is required: rank-based
    // stopping alone can starve the sparse family patterns that pin
    // the exceptional sectors.
    let full_sweep_norm = 3;
    let futile_limit = 4000.max(unknowns.len());
    let mut futile = 0usize;

    'outer: for (a, b) in &pairs {
        let in_sweep = a.m.abs() + a.i + b.m.abs() + b.i <= full_sweep_norm;
        {
            for c in &gens {
                instances += 1;
                let triple = [a.id(), b.id(), c.id()];
                let mut comps: BTreeMap<GenId, Vec<(u32, Rational)>> = BTreeMap::new();
                // Left side: f applied to the bracket output.
                let bracket = bracket_gens(&alg, &triple);
                let mut valid = true;
                for (g, coeff) in bracket.iter() {
                    let GenId::W(w) = g else {
                        valid = false;
                        break;
                    };
                    if !window.contains(w) {
                        valid = false;
                        break;
                    }
                    for fam in fams_of_parity(w.parity() + parity) {
                        let col = index[&(*w, fam)];
                        comps
                            .entry(target(w, fam).id())
                            .or_default()
                            .push((col, coeff.clone()));
                    }
                }
                if !valid {
                    continue;
                }
                // Right side: sum over slots with the parity prefix sign.
                let mut prefix = Parity::Even;
                for slot in 0..3 {
                    let gk = [a, b, c][slot];
                    let sign = if parity.is_odd() { pow_sign(prefix) } else { 1 };
                    for fam in fams_of_parity(gk.parity() + parity) {
                        let col = index[&(*gk, fam)];
                        let mut args: Vec<GenId> = triple.to_vec();
                        args[slot] = target(gk, fam).id();
                        let braket = bracket_gens(&alg, &args);
                        for (out, coeff) in braket.iter() {
                            comps
                                .entry(out.clone())
                                .or_default()
                                .push((col, coeff * rat(-(sign as i64))));
                        }
                    }
                    prefix = prefix + gk.parity();
                }
                for row in comps.into_values() {
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

    let kernel_rows = elim.nullspace();
    let windowed_dimension = kernel_rows.len();
    let kernel: Vec<SparseVec<DerivKey>> = kernel_rows
        .iter()
        .map(|v| {
            SparseVec::from_entries(v.iter().map(|(c, x)| (unknowns[*c as usize], x.clone())))
        })
        .collect();

    // Interior restriction.
    let interior = |k: &DerivKey| window.interior_contains(&k.0);
    let mut zint = Eliminator::new(unknowns.len());
    for v in &kernel_rows {
        let restricted: Vec<(u32, Rational)> = v
            .iter()
            .filter(|(c, _)| interior(&unknowns[*c as usize]))
            .cloned()
            .collect();
        zint.offer(restricted);
    }
    let dimension = zint.rank();

    // Claimed basis: membership in the windowed kernel and interior
    // span rank.
    let mut claimed_in_kernel = true;
    let mut cint = Eliminator::new(unknowns.len());
    let mut extint = Eliminator::new(unknowns.len());
    let extras = if (s, t) == (0, 0) {
        extra_degree_zero_derivations(parity)
    } else {
        Vec::new()
    };
    for (which, map) in claimed.iter().chain(extras.iter()).enumerate() {
        let vec = coefficient_vector(map, parity, s, t, window)?;
        let in_claimed = which < claimed.len();
        if in_span(&vec, &kernel).is_none() && in_claimed {
            claimed_in_kernel = false;
        }
        let restricted: Vec<(u32, Rational)> = vec
            .iter()
            .filter(|(k, _)| interior(k))
            .map(|(k, x)| (index[k], x.clone()))
            .collect();
        if in_claimed {
            cint.offer(restricted.clone());
        }
        extint.offer(restricted);
    }
    let claimed_interior_rank = cint.rank();
    let extended_interior_rank = extint.rank();

    Ok(DerivationSolution {
        parity,
        s,
        t,
        windowed_dimension,
        dimension,
        basis: kernel,
        claimed_in_kernel,
        claimed_interior_rank,
        extended_interior_rank,
        instances_used: instances,
    })
}

/// Result of expressing a derivation in the claimed basis.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub coords: Vec<Rational>,
    /// False when the closed-form recipe failed and the coordinates
    /// came from an exact linear solve instead.
    pub closed_form: bool,
    pub witness: Option<String>,
}

/// Expresses a degree-(s,t) derivation in the claimed basis: the
/// closed-form coordinate reads of the classification are tried first
/// and verified by an exact residual check on sample generators; on
/// failure the coordinates are recovered by an exact linear solve. A
/// nonzero final residual is an error carrying a witness generator.
pub fn decompose_derivation(
    map: &LinearMap,
    parity: Parity,
    s: i64,
    t: i64,
) -> Result<Decomposition, AlgebraError> {
    let alg = WInfinityAlgebra;
    let basis = claimed_derivation_basis(parity, s, t)?;
    let samples: Vec<WGen> = sample_gens();

    let residual_witness = |coords: &[Rational]| -> Option<String> {
        for g in &samples {
            let mut want = map.eval(&alg, &g.id());
            for (c, b) in coords.iter().zip(&basis) {
                want.add_scaled(&b.eval(&alg, &g.id()), &-c.clone());
            }
            if !want.is_zero() {
                return Some(format!("residual {want} at {g}"));
            }
        }
        None
    };

    if let Some(coords) = closed_form_coords(map, parity, s, t, &alg) {
        if residual_witness(&coords).is_none() {
            return Ok(Decomposition {
                coords,
                closed_form: true,
                witness: None,
            });
        }
    }

    // Exact fallback: express the evaluation table on sample generators
    // in the basis span.
    let mut universe: Vec<(WGen, GenId)> = Vec::new();
    let mut target = SparseVec::new();
    let mut columns: Vec<SparseVec<(WGen, GenId)>> = vec![SparseVec::new(); basis.len()];
    for g in &samples {
        for (out, c) in map.eval(&alg, &g.id()).iter() {
            universe.push((*g, out.clone()));
            target.add((*g, out.clone()), c.clone());
        }
        for (col, b) in columns.iter_mut().zip(&basis) {
            for (out, c) in b.eval(&alg, &g.id()).iter() {
                universe.push((*g, out.clone()));
                col.add((*g, out.clone()), c.clone());
            }
        }
    }
    universe.sort();
    universe.dedup();
    match in_span(&target, &columns) {
        Some(coords) => match residual_witness(&coords) {
            None => Ok(Decomposition {
                coords,
                closed_form: false,
                witness: None,
            }),
            Some(w) => Err(AlgebraError::InvalidBidegree(format!(
                "decomposition residual nonzero: {w}"
            ))),
        },
        None => Err(AlgebraError::InvalidBidegree(
            "derivation is not in the span of the claimed basis on samples".into(),
        )),
    }
}

fn sample_gens() -> Vec<WGen> {
    let mut out = Vec::new();
    for fam in Family::all() {
        for m in -3..=3 {
            for i in 0..=3 {
                out.push(WGen::new(fam, m, i));
            }
        }
    }
    out
}

/// The proof's closed-form coordinate reads, by degree case.
fn closed_form_coords(
    map: &LinearMap,
    parity: Parity,
    s: i64,
    t: i64,
    alg: &dyn NAlgebra,
) -> Option<Vec<Rational>> {
    let read = |g: WGen, out: WGen| -> Rational { map.eval(alg, &g.id()).coeff(&out.id()) };
    match parity {
        Parity::Even => {
            if s + 2 * t != 0 {
                let den = rat(s + 2 * t);
                let a1 = read(lgen(1, 0), lgen(1 + s, t));
                let b1 = read(lgen(1, 0), lbgen(1 + s, t));
                let am1 = read(lgen(-1, 1), lgen(-1 + s, 1 + t));
                let bm1 = read(lgen(-1, 1), lbgen(-1 + s, 1 + t));
                Some(vec![a1 / &den, am1 / &den, b1 / &den, bm1 / &den])
            } else if t != 0 {
                let den = rat(4 * t);
                let a1 = read(lgen(1, 1), lgen(1 + s, 1 + t));
                let b1 = read(lgen(1, 1), lbgen(1 + s, 1 + t));
                let am1 = read(lgen(-1, 0), lgen(-1 + s, t));
                let bm1 = read(lgen(-1, 0), lbgen(-1 + s, t));
                Some(vec![a1 / &den, am1 / &den, b1 / &den, bm1 / &den])
            } else {
                let a01 = read(lgen(0, 1), lgen(0, 1));
                let a10 = read(lgen(1, 0), lgen(1, 0));
                let b01 = read(lgen(0, 1), lbgen(0, 1));
                let b10 = read(lgen(1, 0), lbgen(1, 0));
                let d02 = read(lbgen(0, 2), lbgen(0, 2));
                let e02 = read(hgen(0, 2), hgen(0, 2));
                let three_a = rat(3) * &a01;
                Some(vec![
                    a01.clone(),
                    a10,
                    -b10,
                    b01,
                    d02 - &three_a,
                    e02 - &three_a,
                ])
            }
        }
        Parity::Odd => {
            if s + 2 * t != 0 {
                let den = rat(s + 2 * t);
                let a1 = read(lgen(1, 0), hgen(1 + s, t));
                let b1 = read(lgen(1, 0), hbgen(1 + s, t));
                let am1 = read(lgen(-1, 1), hgen(-1 + s, 1 + t));
                let bm1 = read(lgen(-1, 1), hbgen(-1 + s, 1 + t));
                Some(vec![a1 / &den, b1 / &den, am1 / &den, bm1 / &den])
            } else if t != 0 {
                let den = rat(4 * t);
                let a1 = read(lgen(1, 1), hgen(1 + s, 1 + t));
                let b1 = read(lgen(1, 1), hbgen(1 + s, 1 + t));
                let am1 = read(lgen(-1, 0), hgen(-1 + s, t));
                let bm1 = read(lgen(-1, 0), hbgen(-1 + s, t));
                Some(vec![a1 / &den, b1 / &den, am1 / &den, bm1 / &den])
            } else {
                let a01 = read(lgen(0, 1), hgen(0, 1));
                let a10 = read(lgen(1, 0), hgen(1, 0));
                let b01 = read(lgen(0, 1), hbgen(0, 1));
                let b10 = read(lgen(1, 0), hbgen(1, 0));
                Some(vec![a01, a10, b01, b10])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::check_derivation;
    use crate::sample::Sampler;

    #[test]
    fn claimed_bases_are_derivations() {
        let alg = WInfinityAlgebra;
        let mut s = Sampler::new(83, 8, 4);
        let samples = s.gen_tuples(100, 3);
        for (parity, ds, dt) in [
            (Parity::Even, 1, 1),
            (Parity::Even, -2, 1),
            (Parity::Even, 0, 0),
            (Parity::Odd, 1, 0),
            (Parity::Odd, 0, 0),
        ] {
            for map in claimed_derivation_basis(parity, ds, dt).unwrap() {
                let r = check_derivation(&map, &alg, &samples).unwrap();
                assert!(r.passed(), "claimed basis fails at ({parity:?},{ds},{dt})");
            }
        }
    }

    #[test]
    fn small_window_dimensions() {
        let window = Window::new(5, 3, 1).unwrap();
        let sol = solve_derivations(Parity::Even, 1, 1, &window, 3, 2).unwrap();
        assert_eq!(sol.dimension, 4, "solution: {sol:?}");
        assert!(sol.claimed_in_kernel);
        assert_eq!(sol.claimed_interior_rank, 4);

        let sol = solve_derivations(Parity::Odd, 1, 0, &window, 3, 2).unwrap();
        assert_eq!(sol.dimension, 4);
        assert!(sol.claimed_in_kernel);
    }

    #[test]
    fn small_window_degree_zero_dimensions() {
        // The classified list gives 6 even and 4 odd generators at
        // degree (0,0); the family-constant derivations bring the true
        // dimensions to 8 and 8, and together they span the kernel.
        let window = Window::new(5, 3, 1).unwrap();
        let sol = solve_derivations(Parity::Even, 0, 0, &window, 3, 2).unwrap();
        assert_eq!(sol.dimension, 8, "solution: {sol:?}");
        assert!(sol.claimed_in_kernel);
        assert_eq!(sol.claimed_interior_rank, 6);
        assert_eq!(sol.extended_interior_rank, 8);

        let sol = solve_derivations(Parity::Odd, 0, 0, &window, 3, 2).unwrap();
        assert_eq!(sol.dimension, 8);
        assert!(sol.claimed_in_kernel);
        assert_eq!(sol.claimed_interior_rank, 4);
        assert_eq!(sol.extended_interior_rank, 8);
    }

    #[test]
    fn extra_degree_zero_derivations_verified() {
        let alg = WInfinityAlgebra;
        let mut s = Sampler::new(89, 10, 5);
        let samples = s.gen_tuples(500, 3);
        for parity in [Parity::Even, Parity::Odd] {
            for map in extra_degree_zero_derivations(parity) {
                let r = check_derivation(&map, &alg, &samples).unwrap();
                assert!(
                    r.passed(),
                    "family-constant map {map:?} failed: {:?}",
                    &r.violations[..1]
                );
            }
        }
    }

    #[test]
    fn rejected_bidegree_and_window() {
        assert!(claimed_derivation_basis(Parity::Odd, 2, -1).is_err());
        let window = Window::new(1, 1, 1).unwrap();
        // Claimed generators fall outside a tiny window.
        assert!(matches!(
            solve_derivations(Parity::Even, 3, 0, &window, 2, 1),
            Err(AlgebraError::WindowTooSmall(_))
        ));
    }

    #[test]
    fn decompose_scaled_inner() {
        // 5 ad(L_{1+s}^t ∧ L_{-1}^1) at (s,t) = (2,1) reads back the
        // coordinate 5 in the first slot.
        let (s, t) = (2, 1);
        let d = LinearMap::ad_gens(&[lgen(1 + s, t).id(), lgen(-1, 1).id()]).scaled(rat(5));
        let dec = decompose_derivation(&d, Parity::Even, s, t).unwrap();
        assert_eq!(dec.coords[0], rat(5));
        assert!(dec.coords[1..].iter().all(|c| c == &rat(0)));
        assert!(dec.witness.is_none());
    }

    #[test]
    fn decompose_projection_coordinates() {
        let dec = decompose_derivation(&LinearMap::Phi1, Parity::Even, 0, 0).unwrap();
        assert_eq!(
            dec.coords,
            vec![rat(0), rat(0), rat(0), rat(0), rat(1), rat(0)]
        );

        let zero = decompose_derivation(&LinearMap::Zero, Parity::Even, 1, 1).unwrap();
        assert!(zero.coords.iter().all(|c| c == &rat(0)));
    }
}
