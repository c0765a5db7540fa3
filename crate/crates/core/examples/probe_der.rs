use nambu_core::algebra::{LinearMap, WInfinityAlgebra};
use nambu_core::checks::check_derivation;
use nambu_core::element::Element;
use nambu_core::generator::GenId;
use nambu_core::parity::Parity;
use nambu_core::sample::Sampler;
use nambu_core::w_infinity::{gens_in_window, solve_derivations, Family, WGen};
use nambu_core::window::Window;

fn main() {
    let alg = WInfinityAlgebra;
    // psi2: h -> hb constant, everything else -> 0, as a finite table
    // over a biggish window (samples stay inside).
    let mut action = std::collections::BTreeMap::new();
    for g in gens_in_window(25, 8) {
        if g.family == Family::H {
            let out = WGen::new(Family::Hb, g.m, g.i);
            action.insert(g.id(), Element::generator(out.id()));
        }
    }
    let psi2 = LinearMap::Table { parity: Parity::Even, action };
    let mut s = Sampler::new(101, 8, 2);
    let samples = s.gen_tuples(500, 3);
    let r = check_derivation(&psi2, &alg, &samples).unwrap();
    println!("psi2 (h->hb const) derivation check: {} violations / {}", r.violations.len(), r.samples);

    // chi: odd map h -> Lb constant.
    let mut action = std::collections::BTreeMap::new();
    for g in gens_in_window(25, 8) {
        if g.family == Family::H {
            let out = WGen::new(Family::Lb, g.m, g.i);
            action.insert(g.id(), Element::generator(out.id()));
        }
    }
    let chi = LinearMap::Table { parity: Parity::Odd, action };
    let r = check_derivation(&chi, &alg, &samples).unwrap();
    println!("chi (h->Lb const, odd) derivation check: {} violations / {}", r.violations.len(), r.samples);

    // chi-tilde: odd map hb -> Lb constant.
    let mut action = std::collections::BTreeMap::new();
    for g in gens_in_window(25, 8) {
        if g.family == Family::Hb {
            let out = WGen::new(Family::Lb, g.m, g.i);
            action.insert(g.id(), Element::generator(out.id()));
        }
    }
    let chit = LinearMap::Table { parity: Parity::Odd, action };
    let r = check_derivation(&chit, &alg, &samples).unwrap();
    println!("chi~ (hb->Lb const, odd) derivation check: {} violations / {}", r.violations.len(), r.samples);

    // hb -> h constant (even).
    let mut action = std::collections::BTreeMap::new();
    for g in gens_in_window(25, 8) {
        if g.family == Family::Hb {
            let out = WGen::new(Family::H, g.m, g.i);
            action.insert(g.id(), Element::generator(out.id()));
        }
    }
    let psi2p = LinearMap::Table { parity: Parity::Even, action };
    let r = check_derivation(&psi2p, &alg, &samples).unwrap();
    println!("psi2' (hb->h const) derivation check: {} violations / {}", r.violations.len(), r.samples);

    for margin in [1i64, 2] {
        let window = Window::new(5 + margin - 1, 2 + margin, margin).unwrap();
        let sol = solve_derivations(Parity::Even, 0, 0, &window, 3, 2).unwrap();
        println!("even (0,0) window ({},{},{}): windowed {} interior {}",
                 window.m_bound, window.i_bound, window.margin, sol.windowed_dimension, sol.dimension);
        let sol = solve_derivations(Parity::Odd, 0, 0, &window, 3, 2).unwrap();
        println!("odd  (0,0) window ({},{},{}): windowed {} interior {}",
                 window.m_bound, window.i_bound, window.margin, sol.windowed_dimension, sol.dimension);
    }
}
