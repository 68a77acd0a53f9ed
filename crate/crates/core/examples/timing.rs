use nuchi_core::constructions::*;
use nuchi_core::limits::Limits;
use nuchi_core::presentation::parse_group;
use std::time::Instant;

fn main() {
    let cases = [
        ("z9xz3", "gens: a b\nrel: a^9\nrel: b^3\nrel: [a,b]"),
        ("m27", "gens: a b\nrel: a^9\nrel: b^3\nrel: b^-1 a b a^-4"),
        ("es3", "gens: a b\nrel: a^3\nrel: b^3\nrel: [a,b]^3\nrel: [[a,b],a]\nrel: [[a,b],b]"),
        ("z27", "gens: a\nrel: a^27"),
        ("z4xz2xz2", "gens: a b c\nrel: a^4\nrel: b^2\nrel: c^2\nrel: [a,b]\nrel: [a,c]\nrel: [b,c]"),
        ("z4xz4", "gens: a b\nrel: a^4\nrel: b^4\nrel: [a,b]"),
    ];
    let limits = Limits::default();
    for (name, text) in cases {
        let input = parse_group(text).unwrap();
        let g = realize_group(&input, &limits).unwrap();
        let t0 = Instant::now();
        let nu = build_nu(&g, &input.presentation, &BuildOptions::default()).unwrap();
        let t_nu = t0.elapsed();
        let t0 = Instant::now();
        let chi = build_chi(&g, &input.presentation, &BuildOptions::default()).unwrap();
        let t_chi = t0.elapsed();
        println!(
            "{name}: |G|={} |nu|={} |tensor|={} |mu|={} |delta|={} M={} ({t_nu:.2?})  |chi|={} |L|={} |D|={} |W|={} |R|={} |T|={} ({t_chi:.2?})",
            g.order(), nu.nu.order(), nu.tensor.order, nu.mu.order, nu.delta.order,
            nu.schur_fingerprint.order,
            chi.chi.order(), chi.l.order, chi.d.order, chi.w.order, chi.r.order, chi.t_order
        );
    }
}
