use ringmap::catalog::enumerate_maps;
use ringmap::Caps;
use std::collections::BTreeMap;

fn main() {
    let entries = enumerate_maps(5, 7, 20, Caps::default()).unwrap();
    for (i, e) in entries.iter().enumerate() {
        let m = &e.map;
        // multi-edge check: count (min,max) vertex pairs over edges
        let mut pairs: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for d in 0..m.num_darts() as u32 {
            if d < m.alpha(d) {
                let (a, b) = (m.tail(d), m.head(d));
                *pairs.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        let multi: Vec<_> = pairs.iter().filter(|(_, &c)| c > 1).collect();
        println!("map {i}: aut={} multi-edge pairs: {}", e.record.aut_order, multi.len());
        // invariant: per pentagon, number of heptagon neighbors
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for f in 0..m.num_faces() {
            if m.face_size(f) == 5 {
                let mut h = std::collections::BTreeSet::new();
                for &d in m.face_darts(f) {
                    let g = m.face_of(m.alpha(d));
                    if m.face_size(g) == 7 { h.insert(g); }
                }
                *hist.entry(h.len()).or_insert(0) += 1;
            }
        }
        println!("  pentagon-by-heptagon-neighbor-count: {hist:?}");
    }
}
