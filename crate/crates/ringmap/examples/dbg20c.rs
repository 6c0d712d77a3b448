use ringmap::catalog::enumerate_maps;
use ringmap::patch::enumerate_path_patches;
use ringmap::seq::BoundarySequence;
use ringmap::Caps;
use petgraph::graph::UnGraph;

fn to_graph(m: &ringmap::map::CombinatorialMap) -> UnGraph<(), ()> {
    let mut g = UnGraph::default();
    let nodes: Vec<_> = (0..m.num_vertices()).map(|_| g.add_node(())).collect();
    for d in 0..m.num_darts() as u32 {
        if d < m.alpha(d) {
            g.add_edge(nodes[m.tail(d)], nodes[m.head(d)], ());
        }
    }
    g
}

fn main() {
    let entries = enumerate_maps(5, 7, 20, Caps::default()).unwrap();
    let g0 = to_graph(&entries[0].map);
    let g1 = to_graph(&entries[1].map);
    println!("vf2 isomorphic: {}", petgraph::algo::is_isomorphic(&g0, &g1));

    // independent route: all 16-pentagon chains and their boundaries
    let chains = enumerate_path_patches(5, 16);
    let s0: BoundarySequence = "001001011011031001001011011031".parse().unwrap();
    let s1 = s0.q_complement(7).unwrap();
    println!("complement of s0: {}", s1);
    let have0 = chains.iter().any(|c| c.boundary_sequence() == s0.canonical());
    let have1 = chains.iter().any(|c| c.boundary_sequence() == s1.canonical());
    println!("s0 in path-patch boundaries: {have0}; s1 in path-patch boundaries: {have1}");
    println!("total 16-chains: {}", chains.len());
}
