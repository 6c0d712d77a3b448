//! Building finished ring maps: the decorated-prism ring complex, gluing
//! of inner and outer patches along its two boundary faces, the named
//! explicit constructions, and ring detection on finished maps.

use std::collections::{BTreeMap, BTreeSet};

use crate::map::{map_from_vertex_faces, CombinatorialMap, Dart, MapBuilder};
use crate::patch::{single_face_patch, Filler, Patch};
use crate::seq::BoundarySequence;
use crate::{Caps, Result, RingError};

/// A ring of n q-gons realized as a decorated prism, with its two
/// boundary faces still open.
pub struct RingComplex {
    pub map: CombinatorialMap,
    pub inner_face: usize,
    pub outer_face: usize,
    /// One dart per ring q-gon, for recovering the faces after gluing.
    pub ring_darts: Vec<Dart>,
}

/// Build the ring of n q-gons with j[i] subdivision vertices on the inner
/// edge of quadrangle i (and q-4-j[i] on its outer edge).
pub fn ring_complex(n: u32, q: u32, j: &[u32]) -> Result<RingComplex> {
    if n < 2 || q < 4 || j.len() != n as usize || j.iter().any(|&x| x > q - 4) {
        return Err(RingError::Parameter(format!(
            "invalid ring parameters n={n} q={q} j={j:?}"
        )));
    }
    let n_us = n as usize;
    let mut b = MapBuilder::new();
    // inner chains: u_i -> s_1 -> ... -> s_{j_i} -> u_{i+1}
    let mut inner_chains: Vec<Vec<Dart>> = Vec::with_capacity(n_us);
    for i in 0..n_us {
        let mut chain = Vec::with_capacity(j[i] as usize + 1);
        for _ in 0..=j[i] {
            chain.push(b.new_edge().0);
        }
        inner_chains.push(chain);
    }
    let mut outer_chains: Vec<Vec<Dart>> = Vec::with_capacity(n_us);
    for i in 0..n_us {
        let jo = q - 4 - j[i];
        let mut chain = Vec::with_capacity(jo as usize + 1);
        for _ in 0..=jo {
            chain.push(b.new_edge().0);
        }
        outer_chains.push(chain);
    }
    let laterals: Vec<(Dart, Dart)> = (0..n_us).map(|_| b.new_edge()).collect();

    // inner hole face: all inner chains forward
    let inner_cycle: Vec<Dart> = inner_chains.iter().flatten().copied().collect();
    // outer hole face: all outer chains reversed
    let outer_cycle: Vec<Dart> = outer_chains
        .iter()
        .rev()
        .flat_map(|c| c.iter().rev())
        .map(|&d| d ^ 1)
        .collect();
    // quadrangle i: inner chain i backwards, lateral down to the outer
    // rim, outer chain i forward, lateral back up
    let mut ring_darts = Vec::with_capacity(n_us);
    b.add_face(inner_cycle.clone());
    b.add_face(outer_cycle.clone());
    for i in 0..n_us {
        let mut cyc: Vec<Dart> = inner_chains[i].iter().rev().map(|&d| d ^ 1).collect();
        cyc.push(laterals[i].0);
        cyc.extend(outer_chains[i].iter().copied());
        cyc.push(laterals[(i + 1) % n_us].1);
        ring_darts.push(cyc[0]);
        b.add_face(cyc);
    }
    let map = b.finish()?;
    let inner_face = map.face_of(inner_cycle[0]);
    let outer_face = map.face_of(outer_cycle[0]);
    Ok(RingComplex { map, inner_face, outer_face, ring_darts })
}

/// Glue map B onto map A by identifying the boundary walks of one face of
/// each, at rotation offset `rot`; `flip` glues the mirror image of B.
/// Fails with GlueMismatch unless the vertex degrees along the two walks
/// combine to 3 everywhere.
pub fn sew(
    a: &CombinatorialMap,
    face_a: usize,
    b: &CombinatorialMap,
    face_b: usize,
    rot: usize,
    flip: bool,
) -> Result<CombinatorialMap> {
    let wa = a.face_darts(face_a).to_vec();
    let wb = b.face_darts(face_b).to_vec();
    let l = wa.len();
    if wb.len() != l {
        return Err(RingError::GlueMismatch(format!(
            "boundary lengths differ: {} vs {}",
            l,
            wb.len()
        )));
    }
    // vertex correspondence: a-walk position t matches b-walk position
    // (rot - t) for a direct gluing, (rot + t) for a mirrored one
    let phi = |t: usize| -> usize {
        if flip {
            (rot + t) % l
        } else {
            (rot + 2 * l - t) % l
        }
    };
    for t in 0..l {
        let da = a.degree(a.tail(wa[t]));
        let db = b.degree(b.tail(wb[phi(t)]));
        if da + db != 5 {
            return Err(RingError::GlueMismatch(format!(
                "degree pattern mismatch at position {t}: {da}+{db}"
            )));
        }
    }

    // dart translation for B: boundary darts map onto A's walk darts
    // (their partners are dropped with face_b), interior darts get fresh
    // ids in α-pairs
    let nd_a = a.num_darts();
    let nd_b = b.num_darts();
    let mut b_map = vec![u32::MAX; nd_b];
    let mut dropped = vec![false; nd_b];
    for t in 0..l {
        if flip {
            // the mirrored retained faces use the walk darts themselves
            let s = (rot + t) % l;
            b_map[wb[s] as usize] = wa[t];
            dropped[b.alpha(wb[s]) as usize] = true;
        } else {
            // the retained faces use the opposite darts of the walk
            let s = (rot + 2 * l - t - 1) % l;
            b_map[b.alpha(wb[s]) as usize] = wa[t];
            dropped[wb[s] as usize] = true;
        }
    }
    let mut alpha: Vec<Dart> = (0..nd_a as u32).map(|d| a.alpha(d)).collect();
    for d in 0..nd_b {
        if b_map[d] != u32::MAX || dropped[d] {
            continue;
        }
        let e = b.alpha(d as Dart) as usize;
        debug_assert!(b_map[e] == u32::MAX && !dropped[e]);
        let fresh = alpha.len() as u32;
        alpha.push(fresh + 1);
        alpha.push(fresh);
        b_map[d] = fresh;
        b_map[e] = fresh + 1;
    }

    // faces: all of A's except face_a, then B's except face_b
    let mut faces: Vec<Vec<Dart>> = Vec::with_capacity(a.num_faces() + b.num_faces() - 2);
    for f in 0..a.num_faces() {
        if f != face_a {
            faces.push(a.face_darts(f).to_vec());
        }
    }
    for f in 0..b.num_faces() {
        if f == face_b {
            continue;
        }
        let cyc = b.face_darts(f);
        let translated: Vec<Dart> = if flip {
            cyc.iter().rev().map(|&d| b_map[b.alpha(d) as usize]).collect()
        } else {
            cyc.iter().map(|&d| b_map[d as usize]).collect()
        };
        faces.push(translated);
    }

    // derive sigma from the face cycles
    let nd = alpha.len();
    let mut next = vec![u32::MAX; nd];
    for face in &faces {
        for (i, &d) in face.iter().enumerate() {
            let e = face[(i + 1) % face.len()];
            if next[d as usize] != u32::MAX {
                return Err(RingError::Structural("dart used twice after sewing".into()));
            }
            next[d as usize] = e;
        }
    }
    if next.iter().any(|&x| x == u32::MAX) {
        return Err(RingError::Structural("dart unused after sewing".into()));
    }
    let sigma: Vec<Dart> = (0..nd).map(|d| next[alpha[d] as usize]).collect();
    CombinatorialMap::from_parts(alpha, sigma)
}

/// Glue an inner and an outer patch onto the ring of n q-gons determined
/// by the inner boundary sequence. All rotational and reflective
/// alignments of both patches are tried; the resulting 3-valent maps are
/// deduplicated by ring-marked canonical code.
pub fn assemble(inner: &Patch, outer: &Patch, q: u32) -> Result<Vec<CombinatorialMap>> {
    let a_in = inner.boundary_sequence();
    let a_out = outer.boundary_sequence();
    let expect = a_in.q_complement(q)?;
    if expect != a_out.canonical() {
        return Err(RingError::GlueMismatch(format!(
            "outer sequence {a_out} is not the {q}-complement of {a_in}"
        )));
    }
    let layout = a_in.layout(q)?;
    let ring = ring_complex(layout.n, q, &layout.j)?;
    let inner_len = ring.map.face_size(ring.inner_face);
    let outer_len = ring.map.face_size(ring.outer_face);

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for flip1 in [false, true] {
        for rot1 in 0..inner_len {
            let m1 = match sew(&ring.map, ring.inner_face, &inner.map, inner.outer_face, rot1, flip1)
            {
                Ok(m) => m,
                Err(RingError::GlueMismatch(_)) => continue,
                Err(e) => return Err(e),
            };
            // ring darts keep their ids; the outer face does too
            let outer_face_m1 = m1.face_of(ring.map.face_darts(ring.outer_face)[0]);
            debug_assert_eq!(m1.face_size(outer_face_m1), outer_len);
            for flip2 in [false, true] {
                for rot2 in 0..outer_len {
                    let m2 = match sew(&m1, outer_face_m1, &outer.map, outer.outer_face, rot2, flip2)
                    {
                        Ok(m) => m,
                        Err(RingError::GlueMismatch(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    if !m2.is_three_valent() || m2.euler_characteristic() != 2 {
                        return Err(RingError::Structural(
                            "assembled map failed validation".into(),
                        ));
                    }
                    let ring_faces: Vec<usize> =
                        ring.ring_darts.iter().map(|&d| m2.face_of(d)).collect();
                    let m2 = m2.with_ring(ring_faces);
                    let code = m2.canonical_code();
                    if seen.insert(code) {
                        out.push(m2);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The p-gonal prism: the ring map of n = p squares.
pub fn prism(p: u32) -> CombinatorialMap {
    assert!(p >= 3);
    let pu = p as usize;
    let top: Vec<usize> = (0..pu).collect();
    let bottom: Vec<usize> = (0..pu).map(|i| pu + (pu - 1 - i)).collect();
    let mut faces: Vec<Vec<usize>> = vec![top, bottom];
    for i in 0..pu {
        let i1 = (i + 1) % pu;
        faces.push(vec![i, pu + i, pu + i1, i1]);
    }
    let refs: Vec<&[usize]> = faces.iter().map(|f| f.as_slice()).collect();
    let map = map_from_vertex_faces(&refs).expect("prism construction");
    // mark the lateral ring
    let ring = if p == 4 {
        find_rings(&map, 4, 4).remove(0).faces
    } else {
        ring_of(&map, 4).expect("prism lateral ring").faces
    };
    map.with_ring(ring)
}

/// The map of four q-gons in a ring whose domains are paths of q-3
/// quadrangles, built from the q-prism by subdividing one lateral square
/// into a stack of quadrangles.
pub fn decorate_prism(q: u32) -> CombinatorialMap {
    assert!(q >= 4);
    let qu = q as usize;
    let e = qu - 4; // extra rungs
    // vertices: u_0..u_{q-1}, w_0..w_{q-1}, a_1..a_e on (u_0,w_0), b_1..b_e on (u_1,w_1)
    let u = |i: usize| i % qu;
    let w = |i: usize| qu + (i % qu);
    let a = |t: usize| 2 * qu + t - 1; // t in 1..=e
    let bv = |t: usize| 2 * qu + e + t - 1;
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let top: Vec<usize> = (0..qu).map(u).collect();
    let bottom: Vec<usize> = (0..qu).rev().map(w).collect();
    faces.push(top);
    faces.push(bottom);
    // the stack replacing lateral square 0
    let mut left: Vec<usize> = vec![u(0)];
    left.extend((1..=e).map(a));
    left.push(w(0)); // path u_0 -> a_1 .. a_e -> w_0
    let mut right: Vec<usize> = vec![u(1)];
    right.extend((1..=e).map(bv));
    right.push(w(1));
    for t in 0..=e {
        faces.push(vec![left[t], left[t + 1], right[t + 1], right[t]]);
    }
    // lateral side faces i = 1..q-1: u_i -> (down lateral i) -> w_i ->
    // w_{i+1} -> (up lateral i+1) -> u_{i+1} -> u_i
    for i in 1..qu {
        let i1 = (i + 1) % qu;
        let mut cyc = Vec::new();
        cyc.push(u(i));
        if i == 1 {
            cyc.extend((1..=e).map(bv)); // subdivided lateral 1, downwards
        }
        cyc.push(w(i));
        cyc.push(w(i1));
        if i1 == 0 {
            cyc.extend((1..=e).rev().map(a)); // subdivided lateral 0, upwards
        }
        cyc.push(u(i1));
        faces.push(cyc);
    }
    let refs: Vec<&[usize]> = faces.iter().map(|f| f.as_slice()).collect();
    let map = map_from_vertex_faces(&refs).expect("decorated prism construction");
    // the ring: top, one decorated side, bottom, the other decorated side
    let ring = if q == 4 {
        find_rings(&map, 4, 4).remove(0).faces
    } else {
        ring_of(&map, q).expect("decorated prism ring").faces
    };
    map.with_ring(ring)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FulleroidVariant {
    /// q = 5t + 2, boundary sequence bb with b = 1 1 0^(5t-4)
    Mod5Plus2,
    /// q = 5t + 3, boundary sequence bb with b = 2 0^(5t-2)
    Mod5Plus3,
}

/// The fulleroid M_4(5, q) for q = 5t+2 or 5t+3, built from its self
/// q-complementary boundary sequence.
pub fn fulleroid_m45(t: u32, variant: FulleroidVariant) -> Result<CombinatorialMap> {
    assert!(t >= 1);
    let (q, b): (u32, Vec<u32>) = match variant {
        FulleroidVariant::Mod5Plus2 => {
            let mut b = vec![1, 1];
            b.extend(std::iter::repeat(0).take(5 * t as usize - 4));
            (5 * t + 2, b)
        }
        FulleroidVariant::Mod5Plus3 => {
            let mut b = vec![2];
            b.extend(std::iter::repeat(0).take(5 * t as usize - 2));
            (5 * t + 3, b)
        }
    };
    let mut bb = b.clone();
    bb.extend(b);
    let seq = BoundarySequence::new(bb);
    if !seq.is_self_complemented(q)? {
        return Err(RingError::Structural(format!(
            "fulleroid sequence {seq} is not self {q}-complemented"
        )));
    }
    let mut filler = Filler::new(5, Caps::from_env());
    let patches = filler.enumerate(&seq)?;
    if patches.is_empty() {
        return Err(RingError::Structural(format!("sequence {seq} has no pentagon filling")));
    }
    let mut best: Option<(crate::map::CanonicalCode, CombinatorialMap)> = None;
    for pi in &patches {
        for po in &patches {
            for m in assemble(pi, po, q)? {
                let code = m.canonical_code();
                if best.as_ref().map_or(true, |(c, _)| code < *c) {
                    best = Some((code, m));
                }
            }
        }
    }
    best.map(|(_, m)| m)
        .ok_or_else(|| RingError::Structural("no assembly for fulleroid sequence".into()))
}

/// An ordered ring of faces recognized on a finished map.
#[derive(Debug, Clone)]
pub struct Ring {
    pub faces: Vec<usize>,
}

fn shared_edges(map: &CombinatorialMap, f: usize, g: usize) -> Vec<Dart> {
    let mut out = Vec::new();
    for &d in map.face_darts(f) {
        if map.face_of(map.alpha(d)) == g {
            out.push(d.min(map.alpha(d)));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Validate that the given cyclic face list is a ring: consecutive faces
/// share exactly one edge (two for n = 2), non-consecutive none, all
/// shared edges vertex-disjoint, and the complement splits into exactly
/// two domains.
pub fn check_ring(map: &CombinatorialMap, faces: &[usize]) -> Result<()> {
    let n = faces.len();
    if n < 2 {
        return Err(RingError::NotARing("fewer than two faces".into()));
    }
    let set: BTreeSet<usize> = faces.iter().copied().collect();
    if set.len() != n {
        return Err(RingError::NotARing("repeated face".into()));
    }
    let mut all_shared: Vec<Dart> = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            let consecutive = k == i + 1 || (i == 0 && k == n - 1);
            let consecutive = consecutive && !(n == 2 && i == 0 && k == 1 && false);
            let sh = shared_edges(map, faces[i], faces[k]);
            let expected = if !consecutive {
                0
            } else if n == 2 {
                2
            } else {
                1
            };
            if sh.len() != expected {
                return Err(RingError::NotARing(format!(
                    "faces {} and {} share {} edges, expected {}",
                    faces[i],
                    faces[k],
                    sh.len(),
                    expected
                )));
            }
            all_shared.extend(sh);
        }
    }
    // shared edges must be pairwise vertex-disjoint
    let mut vs = BTreeSet::new();
    for &d in &all_shared {
        for v in [map.tail(d), map.head(d)] {
            if !vs.insert(v) {
                return Err(RingError::NotARing(format!(
                    "ring edges meet at vertex {v}"
                )));
            }
        }
    }
    // the complement must fall apart into exactly two domains
    if domain_components(map, &set).len() != 2 {
        return Err(RingError::NotARing("complement is not two domains".into()));
    }
    Ok(())
}

/// Connected components of the non-ring faces under shared-edge adjacency.
fn domain_components(map: &CombinatorialMap, ring: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let nf = map.num_faces();
    let mut comp = vec![usize::MAX; nf];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for f0 in 0..nf {
        if ring.contains(&f0) || comp[f0] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![f0];
        comp[f0] = id;
        let mut members = vec![f0];
        while let Some(f) = stack.pop() {
            for &d in map.face_darts(f) {
                let g = map.face_of(map.alpha(d));
                if !ring.contains(&g) && comp[g] == usize::MAX {
                    comp[g] = id;
                    members.push(g);
                    stack.push(g);
                }
            }
        }
        comps.push(members);
    }
    comps
}

/// Recover the ring of a finished map: all faces of size q must form a
/// single valid ring. For maps carrying a ring marking (p = q), the
/// marked ring is verified instead.
pub fn ring_of(map: &CombinatorialMap, q: u32) -> Result<Ring> {
    if let Some(marked) = map.ring() {
        let faces = marked.to_vec();
        check_ring(map, &faces)?;
        return Ok(Ring { faces });
    }
    let candidates: Vec<usize> =
        (0..map.num_faces()).filter(|&f| map.face_size(f) == q as usize).collect();
    if candidates.len() < 2 {
        return Err(RingError::NotARing(format!(
            "only {} faces of size {q}",
            candidates.len()
        )));
    }
    // order candidates into a cycle by adjacency
    let set: BTreeSet<usize> = candidates.iter().copied().collect();
    let mut order = vec![candidates[0]];
    let mut prev = usize::MAX;
    loop {
        let cur = *order.last().unwrap();
        let nbrs: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&g| g != cur && !shared_edges(map, cur, g).is_empty())
            .collect();
        if nbrs.len() != 2 {
            return Err(RingError::NotARing(format!(
                "face {cur} has {} ring neighbors",
                nbrs.len()
            )));
        }
        let next = if candidates.len() == 2 {
            nbrs[0]
        } else {
            *nbrs.iter().find(|&&g| g != prev).ok_or_else(|| {
                RingError::NotARing("adjacency not cyclic".into())
            })?
        };
        if next == order[0] {
            break;
        }
        if order.len() > set.len() {
            return Err(RingError::NotARing("adjacency closes too late".into()));
        }
        prev = cur;
        order.push(next);
        if candidates.len() == 2 {
            break;
        }
    }
    if order.len() != candidates.len() {
        return Err(RingError::NotARing(format!(
            "{} of {} q-gons in the adjacency cycle",
            order.len(),
            candidates.len()
        )));
    }
    check_ring(map, &order)?;
    Ok(Ring { faces: order })
}

/// All valid rings of length n among the faces of size q (needed when
/// p = q and the ring is not determined by face sizes).
pub fn find_rings(map: &CombinatorialMap, q: u32, n: u32) -> Vec<Ring> {
    let candidates: Vec<usize> =
        (0..map.num_faces()).filter(|&f| map.face_size(f) == q as usize).collect();
    let mut found: Vec<Ring> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    // depth-first search for cycles of the required length
    fn extend(
        map: &CombinatorialMap,
        n: usize,
        path: &mut Vec<usize>,
        candidates: &[usize],
        found: &mut Vec<Ring>,
        seen: &mut BTreeSet<Vec<usize>>,
    ) {
        let cur = *path.last().unwrap();
        if path.len() == n {
            if !shared_edges(map, cur, path[0]).is_empty() && check_ring(map, path).is_ok() {
                let mut key = path.clone();
                key.sort();
                if seen.insert(key) {
                    found.push(Ring { faces: path.clone() });
                }
            }
            return;
        }
        for &g in candidates {
            // enforce a canonical start to curb duplicates
            if g <= path[0] || path.contains(&g) {
                continue;
            }
            if shared_edges(map, cur, g).is_empty() {
                continue;
            }
            path.push(g);
            extend(map, n, path, candidates, found, seen);
            path.pop();
        }
    }
    for &f0 in &candidates {
        let mut path = vec![f0];
        extend(map, n as usize, &mut path, &candidates, &mut found, &mut seen);
    }
    found
}

/// Cut a finished ring map along its ring and rebuild one domain as a
/// standalone patch.
pub fn extract_patch(map: &CombinatorialMap, ring: &Ring, p: u32, side: usize) -> Result<Patch> {
    let ring_set: BTreeSet<usize> = ring.faces.iter().copied().collect();
    let comps = domain_components(map, &ring_set);
    if comps.len() != 2 {
        return Err(RingError::NotARing("complement is not two domains".into()));
    }
    let domain: BTreeSet<usize> = comps[side].iter().copied().collect();
    // boundary darts: in a domain face, other side in a ring face
    let in_domain = |d: Dart| domain.contains(&map.face_of(d));
    let mut bnd: Vec<Dart> = Vec::new();
    for &f in &domain {
        for &d in map.face_darts(f) {
            if !in_domain(map.alpha(d)) {
                bnd.push(d);
            }
        }
    }
    // chain the boundary walk: after dart d comes the unique boundary
    // dart at head(d)
    let mut by_tail: BTreeMap<usize, Dart> = BTreeMap::new();
    for &d in &bnd {
        if by_tail.insert(map.tail(d), d).is_some() {
            return Err(RingError::NotARing("branching domain boundary".into()));
        }
    }
    let mut walk = vec![bnd[0]];
    loop {
        let d = *walk.last().unwrap();
        let next = by_tail[&map.head(d)];
        if next == walk[0] {
            break;
        }
        walk.push(next);
        if walk.len() > bnd.len() {
            return Err(RingError::NotARing("domain boundary is not a cycle".into()));
        }
    }
    if walk.len() != bnd.len() {
        return Err(RingError::NotARing("domain boundary is not a single cycle".into()));
    }

    // rebuild: translate domain darts to fresh ids, pair boundary darts
    // with fresh outer darts
    let mut translate: BTreeMap<Dart, u32> = BTreeMap::new();
    let mut alpha: Vec<u32> = Vec::new();
    for &f in &domain {
        for &d in map.face_darts(f) {
            if translate.contains_key(&d) {
                continue;
            }
            let ad = map.alpha(d);
            let id = alpha.len() as u32;
            alpha.push(id + 1);
            alpha.push(id);
            translate.insert(d, id);
            if in_domain(ad) {
                translate.insert(ad, id + 1);
            }
        }
    }
    let mut faces: Vec<Vec<u32>> = Vec::new();
    for &f in &domain {
        faces.push(map.face_darts(f).iter().map(|&d| translate[&d]).collect());
    }
    // outer face: reversed boundary walk, using the fresh partner darts
    let outer: Vec<u32> = walk.iter().rev().map(|&d| alpha[translate[&d] as usize]).collect();
    faces.push(outer.clone());
    let nd = alpha.len();
    let mut next = vec![u32::MAX; nd];
    for face in &faces {
        for (i, &d) in face.iter().enumerate() {
            next[d as usize] = face[(i + 1) % face.len()];
        }
    }
    let sigma: Vec<u32> = (0..nd).map(|d| next[alpha[d] as usize]).collect();
    let pmap = CombinatorialMap::from_parts(alpha, sigma)?;
    let outer_face = pmap.face_of(outer[0]);
    Ok(Patch { map: pmap, outer_face, p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{euler_check, is_isomorphic};
    use crate::patch::FillMode;

    fn seq(s: &str) -> BoundarySequence {
        s.parse().unwrap()
    }

    fn fill_patches(s: &str, p: u32) -> Vec<Patch> {
        match crate::patch::fill(&seq(s), p, FillMode::Enumerate, Caps::default()).unwrap() {
            crate::patch::FillResult::Enumerate(ps) => ps,
            _ => unreachable!(),
        }
    }

    #[test]
    fn prisms_validate() {
        for p in 3..=12 {
            let m = prism(p);
            assert_eq!(m.num_vertices(), 2 * p as usize);
            assert_eq!(m.num_edges(), 3 * p as usize);
            assert_eq!(m.num_faces(), p as usize + 2);
            let rep = euler_check(&m, p, 4, p);
            assert!(rep.passed(), "p={p}: {:?}", rep.failures());
            let ring = ring_of(&m, 4).unwrap();
            assert_eq!(ring.faces.len(), p as usize);
        }
    }

    #[test]
    fn cube_aut_via_prism() {
        assert_eq!(prism(4).aut_order(), 48);
        let sizes = prism(6).face_size_counts();
        assert_eq!(sizes.get(&6), Some(&2));
        assert_eq!(sizes.get(&4), Some(&6));
    }

    #[test]
    fn ring_complex_counts() {
        let rc = ring_complex(6, 5, &[1, 0, 1, 0, 1, 0]).unwrap();
        // 12 corners + 3 inner + 3 outer subdivision vertices
        assert_eq!(rc.map.num_vertices(), 18);
        assert_eq!(rc.map.num_faces(), 8); // 6 quadrangles + 2 holes
        for &d in &rc.ring_darts {
            assert_eq!(rc.map.face_size(rc.map.face_of(d)), 5);
        }
        assert_eq!(rc.map.face_size(rc.inner_face), 9);
        assert_eq!(rc.map.face_size(rc.outer_face), 9);
    }

    #[test]
    fn dodecahedron_from_degenerate_and_wheel() {
        let inner = single_face_patch(5);
        let outer = fill_patches("11111", 5).remove(0);
        let maps = assemble(&inner, &outer, 5).unwrap();
        assert_eq!(maps.len(), 1);
        let m = &maps[0];
        assert_eq!(
            (m.num_vertices(), m.num_edges(), m.num_faces()),
            (20, 30, 12)
        );
        assert!(m.face_size_counts().iter().eq([(&5usize, &12usize)]));
        assert_eq!(m.aut_order(), 120);
        let rep = euler_check(m, 5, 5, 5);
        assert!(rep.passed(), "{:?}", rep.failures());
    }

    #[test]
    fn azulenoid_n4_from_110110() {
        let ps = fill_patches("110110", 5);
        let mut all = Vec::new();
        for pi in &ps {
            for po in &ps {
                all.extend(assemble(pi, po, 7).unwrap());
            }
        }
        let mut codes: Vec<_> = all.iter().map(|m| m.canonical_code()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 1, "the n=4 azulenoid is unique");
        let m = &all[0];
        let rep = euler_check(m, 5, 7, 4);
        assert!(rep.passed(), "{:?}", rep.failures());
        let ring = ring_of(m, 7).unwrap();
        assert_eq!(ring.faces.len(), 4);
        // both domains have 8 pentagons
        for side in 0..2 {
            let patch = extract_patch(m, &ring, 5, side).unwrap();
            assert_eq!(patch.stats().f, 8);
            assert_eq!(patch.boundary_sequence(), seq("110110").canonical());
        }
    }

    #[test]
    fn decorated_prisms_validate_and_are_self_complementary() {
        for q in 4..=12 {
            let m = decorate_prism(q);
            let rep = euler_check(&m, 4, q, 4);
            assert!(rep.passed(), "q={q}: {:?}", rep.failures());
            let ring = ring_of(&m, q).unwrap();
            assert_eq!(ring.faces.len(), 4);
            let p0 = extract_patch(&m, &ring, 4, 0).unwrap();
            let p1 = extract_patch(&m, &ring, 4, 1).unwrap();
            assert_eq!(p0.stats().f, q - 3);
            assert_eq!(p1.stats().f, q - 3);
            assert_eq!(p0.canonical_code(), p1.canonical_code(), "q={q}");
            assert!(crate::map::graph_is_path(&p0.pgon_adjacency()));
        }
    }

    #[test]
    fn decorate_prism_4_is_the_cube() {
        assert!(is_isomorphic(&decorate_prism(4), &prism(4)));
    }

    #[test]
    fn decorated_prism_equals_assembled_chain() {
        for q in [5u32, 6, 8] {
            let f = q - 3;
            let chains = crate::patch::enumerate_path_patches(4, f);
            assert_eq!(chains.len(), 1);
            let maps = assemble(&chains[0], &chains[0], q).unwrap();
            assert_eq!(maps.len(), 1, "q={q}");
            assert!(is_isomorphic(&maps[0], &decorate_prism(q)), "q={q}");
        }
    }

    #[test]
    fn fulleroid_t1_matches_the_azulenoid() {
        let m = fulleroid_m45(1, FulleroidVariant::Mod5Plus2).unwrap();
        let rep = euler_check(&m, 5, 7, 4);
        assert!(rep.passed(), "{:?}", rep.failures());
        let ps = fill_patches("110110", 5);
        let direct = assemble(&ps[0], &ps[0], 7).unwrap();
        assert!(is_isomorphic(&m, &direct[0]));

        let m8 = fulleroid_m45(1, FulleroidVariant::Mod5Plus3).unwrap();
        let rep = euler_check(&m8, 5, 8, 4);
        assert!(rep.passed(), "{:?}", rep.failures());
        let ring = ring_of(&m8, 8).unwrap();
        let patch = extract_patch(&m8, &ring, 5, 0).unwrap();
        assert_eq!(patch.boundary_sequence(), seq("20002000").canonical());
    }

    #[test]
    fn small_triangle_map() {
        // two triangles inside and outside a ring of two hexagons
        let ps = fill_patches("11", 3);
        assert_eq!(ps.len(), 1);
        let maps = assemble(&ps[0], &ps[0], 6).unwrap();
        assert_eq!(maps.len(), 1);
        let m = &maps[0];
        assert_eq!(
            (m.num_vertices(), m.num_edges(), m.num_faces()),
            (8, 12, 6)
        );
        let rep = euler_check(m, 3, 6, 2);
        assert!(rep.passed(), "{:?}", rep.failures());
        let ring = ring_of(m, 6).unwrap();
        assert_eq!(ring.faces.len(), 2);
    }

    #[test]
    fn dodecahedron_has_three_ring_classes() {
        let inner = single_face_patch(5);
        let outer = fill_patches("11111", 5).remove(0);
        let dodeca = assemble(&inner, &outer, 5).unwrap().remove(0);
        let r5 = find_rings(&dodeca, 5, 5);
        let r6 = find_rings(&dodeca, 5, 6);
        // ring orbit classes under the automorphism group: all length-5
        // rings are equivalent; length-6 rings fall into two classes
        let mut classes = BTreeSet::new();
        for r in r5.iter().chain(r6.iter()) {
            classes.insert(dodeca.canonical_code_marked(&r.faces));
        }
        assert_eq!(classes.len(), 3);
    }

    #[test]
    fn non_ring_configuration_is_rejected() {
        // in the cube, three faces around a vertex pairwise share edges
        // but do not form a ring
        let c = prism(4);
        // find three faces sharing a common vertex
        let v = 0usize;
        let faces: Vec<usize> = (0..c.num_faces())
            .filter(|&f| c.face_vertices(f).contains(&v))
            .collect();
        assert_eq!(faces.len(), 3);
        assert!(check_ring(&c, &faces).is_err());
    }
}
