//! Samples random oriented graphs and prints those that have a nice cyclic
//! ordering but no excellent one.
//!
//! Usage: `cargo run --release --example nice_vs_excellent -- [samples] [max_n] [seed]`

use orientcomp::hardness::{sat_excellent_ordering, search_nice_ordering};
use orientcomp::pog::RenderFormat;
use orientcomp::Pog;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let samples = args.first().copied().unwrap_or(2000);
    let max_n = args.get(1).copied().unwrap_or(7).clamp(3, 10) as usize;
    let mut rng = StdRng::seed_from_u64(args.get(2).copied().unwrap_or(0));
    let (mut nice, mut excellent, mut gap) = (0, 0, 0);
    for _ in 0..samples {
        let n = rng.gen_range(3..=max_n);
        let density = rng.gen_range(0.2..0.9);
        let mut d = Pog::with_size(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    let (a, b) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
                    d.add_arc(a, b).expect("fresh pair");
                }
            }
        }
        let has_nice = search_nice_ordering(&d).expect("within the search limit").is_some();
        let has_excellent = sat_excellent_ordering(&d).is_some();
        nice += has_nice as u32;
        excellent += has_excellent as u32;
        if has_nice && !has_excellent {
            gap += 1;
            println!("# nice but not excellent (n={n})\n{}", d.render(RenderFormat::Native));
        }
    }
    println!("# {samples} samples: {nice} nice, {excellent} excellent, {gap} nice only");
}
