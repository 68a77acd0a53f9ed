use nuchi_core::constructions::*;
use nuchi_core::limits::Limits;
use nuchi_core::presentation::parse_group;
use std::time::Instant;

fn main() {
    let input = parse_group("name: mc125\ngens: a b\nrel: a^25\nrel: b^5\nrel: b^-1 a b a^-6").unwrap();
    let mut limits = Limits::default().full_profile();
    limits.max_cosets = 13_000_000;
    limits.max_points = 13_000_000;
    let g = realize_group(&input, &limits).unwrap();
    let t0 = Instant::now();
    match build_nu(&g, &input.presentation, &BuildOptions { generator_triples: false, limits }) {
        Ok(nu) => println!(
            "|nu|={} |tensor|={} |mu|={} |delta|={} M={} elapsed {:.1?}",
            nu.nu.order(), nu.tensor.order, nu.mu.order, nu.delta.order,
            nu.schur_fingerprint.order, t0.elapsed()
        ),
        Err(e) => println!("failed after {:.1?}: {e}", t0.elapsed()),
    }
}
