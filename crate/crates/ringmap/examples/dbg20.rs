use ringmap::catalog::enumerate_maps;
use ringmap::assemble::{ring_of, extract_patch};
use ringmap::Caps;

fn main() {
    let entries = enumerate_maps(5, 7, 20, Caps::default()).unwrap();
    println!("{} entries", entries.len());
    for (i, e) in entries.iter().enumerate() {
        let r = &e.record;
        println!("--- map {i}: V={} aut={} two_paths={} self_comp={}", r.v, r.aut_order, r.two_paths, r.self_complementary);
        println!("  inner: {}  (k={})", r.inner_seq, r.inner_seq.k());
        println!("  outer: {}  (k={})", r.outer_seq, r.outer_seq.k());
        println!("  gen: {:?}", e.generator);
        println!("  plain code == other? checking below");
        let ring = ring_of(&e.map, 7).unwrap();
        println!("  ring len {}", ring.faces.len());
        for side in 0..2 {
            let p = extract_patch(&e.map, &ring, 5, side).unwrap();
            let s = p.stats();
            println!("  side {side}: v2={} v3={} x={} f={}", s.v2, s.v3, s.x, s.f);
        }
        println!("  face sizes: {:?}", e.map.face_size_counts());
    }
    if entries.len() == 2 {
        println!("plain codes equal: {}", entries[0].map.canonical_code_plain() == entries[1].map.canonical_code_plain());
        // period check on sequences
        for e in &entries {
            println!("inner period {} outer period {}", e.record.inner_seq.period(), e.record.outer_seq.period());
        }
    }
}
