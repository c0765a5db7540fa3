use nambu_core::algebra::{LinearMap, WInfinityAlgebra};
use nambu_core::checks::check_derivation;
use nambu_core::element::Element;
use nambu_core::parity::Parity;
use nambu_core::sample::Sampler;
use nambu_core::w_infinity::{gens_in_window, solve_derivations, Family};
use nambu_core::w_infinity::WGen;
use nambu_core::window::Window;
use std::collections::BTreeSet;

fn constant_sector_map(from: Family, to: Family, parity: Parity) -> LinearMap {
    let mut action = std::collections::BTreeMap::new();
    for g in gens_in_window(40, 14) {
        if g.family == from {
            action.insert(g.id(), Element::generator(WGen::new(to, g.m, g.i).id()));
        }
    }
    LinearMap::Table { parity, action }
}

fn main() {
    let alg = WInfinityAlgebra;
    // Deep verification of the four constant-sector derivations with
    // wider index ranges (upper indices to 5).
    let mut s = Sampler::new(313, 12, 5);
    let samples = s.gen_tuples(500, 3);
    for (from, to, parity, name) in [
        (Family::H, Family::Hb, Parity::Even, "h->hb"),
        (Family::Hb, Family::H, Parity::Even, "hb->h"),
        (Family::H, Family::Lb, Parity::Odd, "h->Lb"),
        (Family::Hb, Family::Lb, Parity::Odd, "hb->Lb"),
    ] {
        let map = constant_sector_map(from, to, parity);
        let r = check_derivation(&map, &alg, &samples).unwrap();
        println!("{name} ({parity:?}): {} violations / {}", r.violations.len(), r.samples);
    }

    for parity in [Parity::Even, Parity::Odd] {
        let window = Window::new(6, 4, 2).unwrap();
        let sol = solve_derivations(parity, 0, 0, &window, 3, 2).unwrap();
        println!("== {:?} (0,0): windowed {} interior {} claimed-in-kernel {} claimed-interior-rank {}",
                 parity, sol.windowed_dimension, sol.dimension, sol.claimed_in_kernel, sol.claimed_interior_rank);
        for (i, v) in sol.basis.iter().enumerate() {
            let sectors: BTreeSet<(Family, Family)> =
                v.iter().map(|((g, f), _)| (g.family, *f)).collect();
            println!("  basis[{i}] sectors {:?}", sectors);
        }
        // other criterion cells
        for (s_, t_) in [(1i64,1i64),(3,0),(-2,2),(-2,1)] {
            if parity == Parity::Odd && !((s_,t_) == (1,1)) { continue; }
            let window = Window::new(8, 5, 2).unwrap();
            if let Ok(sol) = solve_derivations(parity, s_, t_, &window, 3, 2) {
                println!("  ({s_},{t_}) {:?}: interior {}", parity, sol.dimension);
            }
        }
    }
}
