use ringmap::catalog::enumerate_maps;
use ringmap::Caps;
use std::time::Instant;

fn main() {
    let caps = Caps::default();
    let args: Vec<String> = std::env::args().collect();
    let runs: Vec<(u32, u32, u32)> = if args.len() > 1 {
        vec![(args[1].parse().unwrap(), args[2].parse().unwrap(), args[3].parse().unwrap())]
    } else {
        vec![(5, 6, 6), (5, 6, 8), (5, 6, 10), (6, 5, 12), (5, 7, 4), (5, 7, 10)]
    };
    for (p, q, n) in runs {
        let t = Instant::now();
        match enumerate_maps(p, q, n, caps) {
            Ok(es) => {
                println!(
                    "M_{n}({p},{q}): {} maps in {:.2}s  {:?}",
                    es.len(),
                    t.elapsed().as_secs_f64(),
                    es.iter().map(|e| (e.record.v, e.record.aut_order, e.record.two_paths)).collect::<Vec<_>>()
                );
            }
            Err(e) => println!("M_{n}({p},{q}): error {e} in {:.2}s", t.elapsed().as_secs_f64()),
        }
    }
}
