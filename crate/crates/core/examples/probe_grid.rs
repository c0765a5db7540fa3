use nambu_core::parity::Parity;
use nambu_core::w_infinity::{solve_derivations, Family, WGen};
use nambu_core::window::Window;

fn main() {
    let window = Window::new(6, 4, 2).unwrap();
    let sol = solve_derivations(Parity::Even, 0, 0, &window, 3, 2).unwrap();
    for (i, v) in sol.basis.iter().enumerate() {
        let sectors: std::collections::BTreeSet<(Family, Family)> =
            v.iter().map(|((g, f), _)| (g.family, *f)).collect();
        if sectors == [(Family::L, Family::Lb)].into_iter().collect() {
            println!("basis[{i}] (L->Lb), value at (m,i):");
            for iu in 0..=4 {
                let mut line = format!("  i={iu}: ");
                for m in -6..=6i64 {
                    let g = WGen::new(Family::L, m, iu);
                    let c = v
                        .iter()
                        .find(|((gg, f), _)| *gg == g && *f == Family::Lb)
                        .map(|(_, c)| format!("{c}"))
                        .unwrap_or_else(|| "0".into());
                    line.push_str(&format!("{c:>8}"));
                }
                println!("{line}");
            }
        }
    }
}
