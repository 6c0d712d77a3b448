//! Filling a disk bounded by a given cyclic boundary word with p-gonal
//! faces whose interior vertices are 3-valent.
//!
//! The boundary of the unfilled region ("hole") is a cyclic word of
//! capacities: 0 for vertices that receive no further edge, 1 for vertices
//! that still need one edge inside the hole. Gluing a face onto a hole
//! consumes maximal capacity-0 runs (its contact arcs, which are always
//! full runs between capacity-1 vertices) joined by excursion paths of new
//! edges; each such gluing splits the hole into independent sub-holes, and
//! every filling induces a unique face at any fixed pivot edge, so
//! exhaustive recursion at a deterministic pivot is complete and free of
//! double counting.
//!
//! Two engines share that transition: a word-level decider with a memo
//! keyed on canonical cyclic words, and a concrete dart-level enumerator
//! that also supports lazily committed boundary stretches ("gaps") for
//! ring-domain enumeration where the subdivision counts j_i are not fixed
//! in advance.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::map::{
    face_adjacency_graph, CanonicalCode, CombinatorialMap, Dart, MapBuilder,
};
use crate::seq::{BoundarySequence, RingLayout};
use crate::{Caps, Result, RingError};

// ---------------------------------------------------------------------
// Euler accounting per hole word
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct HoleBudget {
    x: i64,
    f: i64,
}

/// Interior vertex and face counts forced on any filling of a hole with
/// v2 capacity-0 and v3 capacity-1 boundary vertices. For p = 6 the counts
/// come from developing the boundary onto the triangular lattice (interior
/// 3-valent hexagon complexes are locally flat), which also rejects
/// non-closing boundaries.
fn word_budget(p: u32, caps: &[u8]) -> Option<HoleBudget> {
    let v2 = caps.iter().filter(|&&c| c == 0).count() as i64;
    let v3 = caps.len() as i64 - v2;
    let p = p as i64;
    if p == 6 {
        if v2 - v3 != 6 {
            return None;
        }
        let f = hex_face_count(caps)?;
        let x = 2 * f - 2 - v3;
        if x < 0 {
            return None;
        }
        return Some(HoleBudget { x, f });
    }
    let num = 2 * p - 2 * v2 + (p - 4) * v3;
    let den = 6 - p;
    if num % den != 0 {
        return None;
    }
    let x = num / den;
    if x < 0 {
        return None;
    }
    if (2 + v3 + x) % 2 != 0 {
        return None;
    }
    let f = (2 + v3 + x) / 2;
    if f < 1 {
        return None;
    }
    Some(HoleBudget { x, f })
}

/// Unit steps of the triangular lattice in the basis (1, w) with w a sixth
/// root of unity.
const HEX_DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Face count of a hexagon filling determined by the boundary word, or
/// None when the developed boundary does not close to a positively
/// oriented curve of integral hexagon area.
fn hex_face_count(caps: &[u8]) -> Option<i64> {
    let m = caps.len();
    let mut pos = (0i64, 0i64);
    let mut dir = 0i64;
    let mut cross = 0i64;
    for i in 0..m {
        let d = HEX_DIRS[dir.rem_euclid(6) as usize];
        let np = (pos.0 + d.0, pos.1 + d.1);
        cross += pos.0 * np.1 - np.0 * pos.1;
        pos = np;
        // turn at the arrived vertex
        dir += if caps[(i + 1) % m] == 0 { 1 } else { -1 };
    }
    if pos != (0, 0) {
        return None;
    }
    if cross <= 0 || cross % 6 != 0 {
        return None;
    }
    Some(cross / 6)
}

fn canonical_word(w: &[u8]) -> Vec<u8> {
    let m = w.len();
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    let mut best: Option<Vec<u8>> = None;
    for word in [w, rev.as_slice()] {
        for s in 0..m {
            let cand: Vec<u8> = (0..m).map(|i| word[(s + i) % m]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

// ---------------------------------------------------------------------
// Word-level decider
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WordOutcome {
    Yes,
    No,
    Exhausted,
}

/// Decides fillability of cyclic capacity words for a fixed face size,
/// memoizing definitive answers on canonical word forms.
struct WordFiller {
    p: u32,
    memo: HashMap<Vec<u8>, bool>,
    nodes: u64,
    max_nodes: u64,
}

impl WordFiller {
    fn new(p: u32, max_nodes: u64) -> Self {
        WordFiller { p, memo: HashMap::new(), nodes: 0, max_nodes }
    }

    fn decide(&mut self, word: &[u8]) -> WordOutcome {
        if word_budget(self.p, word).is_none() {
            return WordOutcome::No;
        }
        let t = word.iter().filter(|&&c| c == 1).count();
        if t == 0 {
            return if word.len() == self.p as usize { WordOutcome::Yes } else { WordOutcome::No };
        }
        if t == 1 {
            return WordOutcome::No;
        }
        let key = canonical_word(word);
        if let Some(&v) = self.memo.get(&key) {
            return if v { WordOutcome::Yes } else { WordOutcome::No };
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return WordOutcome::Exhausted;
        }

        let m = key.len();
        let ones: Vec<usize> = (0..m).filter(|&i| key[i] == 1).collect();
        let t = ones.len();
        let seg_len = |s: usize| -> usize {
            let a = ones[s];
            let b = ones[(s + 1) % t];
            (b + m - a) % m
        };
        // pivot: the longest run between capacity-1 vertices (fail first)
        let i0 = (0..t).max_by_key(|&s| (seg_len(s), std::cmp::Reverse(s))).unwrap();

        let mut exhausted = false;
        let mut selection = vec![i0];
        let l1 = seg_len(i0);
        let filled =
            self.faces_over_selections(&key, &ones, i0, l1, &mut selection, &mut exhausted);
        if filled {
            self.memo.insert(key, true);
            return WordOutcome::Yes;
        }
        if exhausted {
            return WordOutcome::Exhausted;
        }
        self.memo.insert(key, false);
        WordOutcome::No
    }

    /// Extend the arc selection (hole segments contacted by the face) and
    /// try every excursion-length composition. Returns true as soon as one
    /// filling extends to completion.
    fn faces_over_selections(
        &mut self,
        word: &[u8],
        ones: &[usize],
        i0: usize,
        arc_edges: usize,
        selection: &mut Vec<usize>,
        exhausted: &mut bool,
    ) -> bool {
        let p = self.p as usize;
        let r = selection.len();
        // try closing with the current selection
        if arc_edges + r <= p {
            let q = p - arc_edges;
            let mut comp = vec![0usize; r];
            if self.compositions(word, ones, selection, q, 0, &mut comp, exhausted) {
                return true;
            }
        }
        // extend the selection with a later segment
        let t = ones.len();
        let m = word.len();
        let last = *selection.last().unwrap();
        let mut s = (last + 1) % t;
        while s != i0 {
            // consecutive chosen segments must not share an endpoint
            let prev_ok = s != (last + 1) % t;
            let wrap_ok = (s + 1) % t != i0;
            if prev_ok && wrap_ok {
                let a = ones[s];
                let b = ones[(s + 1) % t];
                let add = (b + m - a) % m;
                if arc_edges + add + r + 1 <= p {
                    selection.push(s);
                    let hit = self.faces_over_selections(
                        word,
                        ones,
                        i0,
                        arc_edges + add,
                        selection,
                        exhausted,
                    );
                    selection.pop();
                    if hit {
                        return true;
                    }
                }
            }
            s = (s + 1) % t;
        }
        false
    }

    fn compositions(
        &mut self,
        word: &[u8],
        ones: &[usize],
        selection: &[usize],
        remaining: usize,
        idx: usize,
        comp: &mut Vec<usize>,
        exhausted: &mut bool,
    ) -> bool {
        let r = selection.len();
        if idx == r {
            if remaining == 0 {
                return self.check_subholes(word, ones, selection, comp, exhausted);
            }
            return false;
        }
        let slots_left = r - idx - 1;
        for len in 1..=remaining.saturating_sub(slots_left) {
            comp[idx] = len;
            if self.compositions(word, ones, selection, remaining - len, idx + 1, comp, exhausted) {
                return true;
            }
        }
        false
    }

    fn check_subholes(
        &mut self,
        word: &[u8],
        ones: &[usize],
        selection: &[usize],
        comp: &[usize],
        exhausted: &mut bool,
    ) -> bool {
        let m = word.len();
        let t = ones.len();
        let r = selection.len();
        for a in 0..r {
            let u_pos = ones[(selection[a] + 1) % t];
            let z_pos = ones[selection[(a + 1) % r]];
            let dist = (z_pos + m - u_pos) % m;
            debug_assert!(dist >= 1);
            let mut sub = Vec::with_capacity(dist + comp[a]);
            sub.push(0u8); // consumed arc end
            for s in 1..dist {
                sub.push(word[(u_pos + s) % m]);
            }
            sub.push(0u8); // consumed next arc start
            sub.extend(std::iter::repeat(1u8).take(comp[a] - 1));
            match self.decide(&sub) {
                WordOutcome::Yes => {}
                WordOutcome::No => return false,
                WordOutcome::Exhausted => {
                    *exhausted = true;
                    return false;
                }
            }
        }
        true
    }
}

// ---------------------------------------------------------------------
// Concrete enumeration engine
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Item {
    /// Boundary vertex; `dart` is the hole-side dart of the edge to the
    /// next item and is None exactly when the next item is a Gap.
    V { vx: u32, cap: bool, dart: Option<Dart> },
    /// An uncommitted ring stretch that may still receive 0..=cap tails.
    Gap { idx: usize, cap: u32 },
}

type Hole = Vec<Item>;

#[derive(Debug, Clone, Copy)]
struct Contact {
    /// index of the arc's first vertex (capacity 1, consumed)
    z: usize,
    /// index of the arc's last vertex (capacity 1, consumed)
    u: usize,
    edges: usize,
}

struct Mark {
    alpha_len: usize,
    n_verts: u32,
    faces_len: usize,
    k_committed: u64,
    k_cap_remaining: u64,
    x_created: u64,
    undo_len: usize,
}

struct GapUndo {
    idx: usize,
    old_j: Option<u32>,
    old_record: Option<(Vec<Dart>, Vec<u32>)>,
}

/// One filling found by the enumerator: the committed layout (gap mode)
/// and the finished patch.
struct Filling {
    j: Vec<u32>,
    patch: Patch,
}

struct Grower<'w> {
    p: u32,
    words: &'w mut WordFiller,
    alpha: Vec<Dart>,
    n_verts: u32,
    faces: Vec<Vec<Dart>>,
    // gap bookkeeping (ring-domain mode)
    n_corners: u32,
    j: Vec<Option<u32>>,
    gap_records: Vec<Option<(Vec<Dart>, Vec<u32>)>>,
    undo: Vec<GapUndo>,
    k_committed: u64,
    k_cap_remaining: u64,
    k_lo: u64,
    k_hi: u64,
    /// Interior vertices created so far; for p != 6 the final total is
    /// pinned by the boundary, which prunes hard when the excess is small.
    x_created: u64,
    /// Degree-2 count of the full domain boundary, for the interior
    /// budget prune.
    domain_n: u32,
    // fixed-boundary mode: precomputed outer walk (forward darts)
    fixed_boundary: Option<Vec<Dart>>,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
    solutions: Vec<Filling>,
}

impl<'w> Grower<'w> {
    fn new_edge(&mut self) -> (Dart, Dart) {
        let d = self.alpha.len() as Dart;
        self.alpha.push(d + 1);
        self.alpha.push(d);
        (d, d + 1)
    }

    fn mark(&self) -> Mark {
        Mark {
            alpha_len: self.alpha.len(),
            n_verts: self.n_verts,
            faces_len: self.faces.len(),
            k_committed: self.k_committed,
            k_cap_remaining: self.k_cap_remaining,
            x_created: self.x_created,
            undo_len: self.undo.len(),
        }
    }

    fn rollback(&mut self, m: &Mark) {
        self.alpha.truncate(m.alpha_len);
        self.n_verts = m.n_verts;
        self.faces.truncate(m.faces_len);
        self.k_committed = m.k_committed;
        self.k_cap_remaining = m.k_cap_remaining;
        self.x_created = m.x_created;
        while self.undo.len() > m.undo_len {
            let u = self.undo.pop().unwrap();
            self.j[u.idx] = u.old_j;
            self.gap_records[u.idx] = u.old_record;
        }
    }

    /// Replace the Gap at `pos` by `jv` concrete tail vertices, allocating
    /// the jv+1 boundary edges between the flanking vertices.
    fn commit_gap(&mut self, hole: &mut Hole, pos: usize, jv: u32) {
        let (idx, cap) = match hole[pos] {
            Item::Gap { idx, cap } => (idx, cap),
            _ => panic!("commit_gap on non-gap"),
        };
        debug_assert!(jv <= cap);
        let m = hole.len();
        let prev = (pos + m - 1) % m;
        let mut chain_vxs = Vec::with_capacity(jv as usize);
        let mut chain_darts = Vec::with_capacity(jv as usize + 1);
        let mut new_items: Vec<Item> = Vec::with_capacity(jv as usize);
        for t in 0..=jv {
            let (d, _) = self.new_edge();
            chain_darts.push(d);
            if t < jv {
                let v = self.n_verts;
                self.n_verts += 1;
                chain_vxs.push(v);
                new_items.push(Item::V { vx: v, cap: true, dart: None });
            }
        }
        match &mut hole[prev] {
            Item::V { dart, .. } => *dart = Some(chain_darts[0]),
            _ => panic!("gap not preceded by a vertex"),
        }
        for (t, item) in new_items.iter_mut().enumerate() {
            if let Item::V { dart, .. } = item {
                *dart = Some(chain_darts[t + 1]);
            }
        }
        self.undo.push(GapUndo {
            idx,
            old_j: self.j[idx],
            old_record: self.gap_records[idx].take(),
        });
        self.j[idx] = Some(jv);
        self.gap_records[idx] = Some((chain_darts, chain_vxs));
        self.k_committed += jv as u64;
        self.k_cap_remaining -= cap as u64;
        hole.splice(pos..=pos, new_items);
    }

    fn hole_caps_gapless(hole: &Hole) -> Option<Vec<u8>> {
        let mut w = Vec::with_capacity(hole.len());
        for it in hole {
            match it {
                Item::V { cap, .. } => w.push(*cap as u8),
                Item::Gap { .. } => return None,
            }
        }
        Some(w)
    }

    /// Cheap feasibility window for a hole that may still contain gaps.
    fn hole_window_ok(&self, hole: &Hole) -> bool {
        let mut v2 = 0i64;
        let mut c1 = 0i64;
        let mut g = 0i64;
        for it in hole {
            match it {
                Item::V { cap, .. } => {
                    if *cap {
                        c1 += 1
                    } else {
                        v2 += 1
                    }
                }
                Item::Gap { cap, .. } => g += *cap as i64,
            }
        }
        if g == 0 {
            // the word decider performs the exact check
            return true;
        }
        let p = self.p as i64;
        if p == 6 {
            return v2 - c1 >= 6 && v2 - (c1 + g) <= 6;
        }
        for v3 in c1..=c1 + g {
            let num = 2 * p - 2 * v2 + (p - 4) * v3;
            let den = 6 - p;
            if num % den != 0 {
                continue;
            }
            let x = num / den;
            if x < 0 {
                continue;
            }
            if (2 + v3 + x) % 2 != 0 {
                continue;
            }
            if (2 + v3 + x) / 2 < 1 {
                continue;
            }
            return true;
        }
        false
    }

    /// Floor and ceiling of the domain interior count (2p - 2n + (p-4)k)
    /// / (6-p) at a given tail count. Only meaningful for p != 6.
    fn x_of_domain(p: i64, n: i64, k: i64) -> (i64, i64) {
        let num = 2 * p - 2 * n + (p - 4) * k;
        let den = 6 - p;
        if den < 0 {
            // den == -1 for p = 7
            (-num, -num)
        } else {
            (num.div_euclid(den), -((-num).div_euclid(den)))
        }
    }

    /// Sound lower bound on the interior vertices any filling of this
    /// hole must still create.
    fn hole_x_lower(p: u32, hole: &Hole) -> i64 {
        let mut v2 = 0i64;
        let mut c1 = 0i64;
        let mut g = 0i64;
        for it in hole {
            match it {
                Item::V { cap, .. } => {
                    if *cap {
                        c1 += 1
                    } else {
                        v2 += 1
                    }
                }
                Item::Gap { cap, .. } => g += *cap as i64,
            }
        }
        let p = p as i64;
        let num = |v3: i64| 2 * p - 2 * v2 + (p - 4) * v3;
        let den = 6 - p;
        let (a, b) = (num(c1), num(c1 + g));
        let (xa, xb) = if den < 0 {
            (-a, -b)
        } else {
            (a.div_euclid(den), b.div_euclid(den))
        };
        xa.min(xb).max(0)
    }

    /// Prune on the pinned interior budget: interior vertices created so
    /// far plus the per-hole minima may not exceed the largest total the
    /// reachable tail counts allow.
    fn x_budget_exceeded(&self, holes: &[Rc<Hole>]) -> bool {
        if self.p == 6 {
            return false;
        }
        let k_min = self.k_committed.max(self.k_lo) as i64;
        let k_max = (self.k_committed + self.k_cap_remaining).min(self.k_hi) as i64;
        let (_, hi_a) = Self::x_of_domain(self.p as i64, self.domain_n as i64, k_min);
        let (_, hi_b) = Self::x_of_domain(self.p as i64, self.domain_n as i64, k_max);
        let x_hi = hi_a.max(hi_b);
        let mut total = self.x_created as i64;
        for h in holes {
            total += Self::hole_x_lower(self.p, h);
            if total > x_hi {
                return true;
            }
        }
        false
    }

    fn branch_gap_commits(&mut self, holes: &[Rc<Hole>], hole: &Hole, gpos: usize) {
        let cap = match hole[gpos] {
            Item::Gap { cap, .. } => cap,
            _ => unreachable!(),
        };
        for jv in 0..=cap {
            let mk = self.mark();
            let mut h2 = hole.clone();
            self.commit_gap(&mut h2, gpos, jv);
            let mut hs = holes[..holes.len() - 1].to_vec();
            hs.push(Rc::new(h2));
            self.search(&hs);
            self.rollback(&mk);
            if self.exhausted {
                return;
            }
        }
    }

    fn search(&mut self, holes: &[Rc<Hole>]) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            return;
        }
        let Some(hole_rc) = holes.last() else {
            self.record_solution();
            return;
        };
        let hole: &Hole = hole_rc;

        if self.k_committed > self.k_hi || self.k_committed + self.k_cap_remaining < self.k_lo {
            return;
        }
        if !self.hole_window_ok(hole) {
            return;
        }
        if self.x_budget_exceeded(holes) {
            return;
        }

        if let Some(word) = Self::hole_caps_gapless(hole) {
            let t = word.iter().filter(|&&c| c == 1).count();
            if t == 0 {
                if word.len() == self.p as usize {
                    let cycle: Vec<Dart> = hole
                        .iter()
                        .map(|it| match it {
                            Item::V { dart, .. } => dart.expect("gapless hole edge"),
                            _ => unreachable!(),
                        })
                        .collect();
                    let mk = self.mark();
                    self.faces.push(cycle);
                    self.search(&holes[..holes.len() - 1]);
                    self.rollback(&mk);
                }
                return;
            }
            if t == 1 {
                return;
            }
            match self.words.decide(&word) {
                WordOutcome::No => return,
                _ => {}
            }
        }

        let m = hole.len();
        let cap1: Vec<usize> = (0..m)
            .filter(|&i| matches!(hole[i], Item::V { cap: true, .. }))
            .collect();
        if cap1.is_empty() {
            if let Some(gpos) = (0..m).find(|&i| matches!(hole[i], Item::Gap { .. })) {
                self.branch_gap_commits(holes, hole, gpos);
            }
            return;
        }

        // longest fully concrete run between capacity-1 vertices
        let mut best_seg: Option<(usize, usize)> = None; // (z, edges)
        let mut first_blocking_gap: Option<usize> = None;
        for &z in &cap1 {
            let mut pos = (z + 1) % m;
            let mut edges = 1usize;
            loop {
                match &hole[pos] {
                    Item::Gap { .. } => {
                        if first_blocking_gap.is_none() {
                            first_blocking_gap = Some(pos);
                        }
                        break;
                    }
                    Item::V { cap: true, .. } => {
                        if best_seg.map_or(true, |(_, e)| edges > e) {
                            best_seg = Some((z, edges));
                        }
                        break;
                    }
                    Item::V { cap: false, dart, .. } => {
                        if dart.is_none() {
                            let gpos = (pos + 1) % m;
                            if first_blocking_gap.is_none() {
                                first_blocking_gap = Some(gpos);
                            }
                            break;
                        }
                        pos = (pos + 1) % m;
                        edges += 1;
                        debug_assert!(edges <= m, "segment scan wrapped");
                    }
                }
            }
        }

        match best_seg {
            Some((z, edges)) => {
                // rotate so the pivot arc starts at index 0; every later
                // index is then strictly increasing and gap commitments
                // never shift recorded positions
                let rot: Hole = (0..m).map(|i| hole[(z + i) % m].clone()).collect();
                let contact = Contact { z: 0, u: edges, edges };
                self.walk(holes, rot, vec![contact], edges, edges);
            }
            None => {
                let gpos = first_blocking_gap.expect("blocked segment without gap");
                self.branch_gap_commits(holes, hole, gpos);
            }
        }
    }

    /// Recursive contact walker. The hole is rotated so that the pivot
    /// arc starts at index 0. `contacts` holds the arcs chosen so far,
    /// `scan` the index after which the next contact may start.
    fn walk(
        &mut self,
        holes: &[Rc<Hole>],
        hole: Hole,
        contacts: Vec<Contact>,
        scan: usize,
        arc_edges: usize,
    ) {
        if self.exhausted {
            return;
        }
        let p = self.p as usize;
        let r = contacts.len();
        if arc_edges + r <= p {
            let rest = p - arc_edges;
            let mut comp = vec![0usize; r];
            self.apply_compositions(holes, &hole, &contacts, rest, 0, &mut comp);
        }
        let m = hole.len();
        let mut pos = scan + 1;
        while pos < m {
            match hole[pos].clone() {
                Item::V { cap: true, .. } => {
                    self.contact_at(holes, &hole, &contacts, pos, arc_edges);
                    if self.exhausted {
                        return;
                    }
                }
                Item::V { .. } => {}
                Item::Gap { cap, .. } => {
                    // the face may land on a fresh tail inside this gap;
                    // committing the whole gap fixes the split exactly
                    if cap >= 1 && arc_edges + r + 2 <= p {
                        for before in 0..cap {
                            for after in 0..cap - before {
                                let mk = self.mark();
                                let mut h2 = hole.clone();
                                self.commit_gap(&mut h2, pos, before + 1 + after);
                                let entry = pos + before as usize;
                                self.contact_at(holes, &h2, &contacts, entry, arc_edges);
                                self.rollback(&mk);
                                if self.exhausted {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
            pos += 1;
        }
    }

    /// Try a contact entering at `entry` (a concrete capacity-1 vertex):
    /// resolve its exit by scanning forward, committing any blocking gap,
    /// then recurse into `walk` with the extended contact list.
    fn contact_at(
        &mut self,
        holes: &[Rc<Hole>],
        hole: &Hole,
        contacts: &[Contact],
        entry: usize,
        arc_edges: usize,
    ) {
        if self.exhausted {
            return;
        }
        let p = self.p as usize;
        let m = hole.len();
        let r = contacts.len();
        let mut pos = entry;
        let mut edges = 0usize;
        loop {
            // extending the arc by one edge must leave room for r+1
            // excursions of length >= 1
            if arc_edges + edges + 1 + r + 1 > p {
                return;
            }
            let dart = match &hole[pos] {
                Item::V { dart, .. } => *dart,
                _ => unreachable!("arc scan on a gap"),
            };
            if dart.is_none() {
                // the edge to the next item does not exist yet: a gap
                // follows; branch over its commitments and rescan
                let gpos = pos + 1;
                debug_assert!(gpos < m, "gap position past the pivot start");
                let cap = match hole[gpos] {
                    Item::Gap { cap, .. } => cap,
                    _ => unreachable!(),
                };
                for jv in 0..=cap {
                    let mk = self.mark();
                    let mut h2 = hole.clone();
                    self.commit_gap(&mut h2, gpos, jv);
                    self.contact_at(holes, &h2, contacts, entry, arc_edges);
                    self.rollback(&mk);
                    if self.exhausted {
                        return;
                    }
                }
                return;
            }
            let next = pos + 1;
            if next >= m {
                return; // the exit would be the pivot arc start
            }
            match hole[next] {
                Item::V { cap: true, .. } => {
                    let mut c2 = contacts.to_vec();
                    c2.push(Contact { z: entry, u: next, edges: edges + 1 });
                    self.walk(holes, hole.clone(), c2, next, arc_edges + edges + 1);
                    return;
                }
                Item::V { cap: false, .. } => {
                    pos = next;
                    edges += 1;
                }
                Item::Gap { .. } => unreachable!("dart present before a gap"),
            }
        }
    }

    fn apply_compositions(
        &mut self,
        holes: &[Rc<Hole>],
        hole: &Hole,
        contacts: &[Contact],
        remaining: usize,
        idx: usize,
        comp: &mut Vec<usize>,
    ) {
        if self.exhausted {
            return;
        }
        let r = contacts.len();
        if idx == r {
            if remaining == 0 {
                self.apply_face(holes, hole, contacts, comp);
            }
            return;
        }
        let slots_left = r - idx - 1;
        for len in 1..=remaining.saturating_sub(slots_left) {
            comp[idx] = len;
            self.apply_compositions(holes, hole, contacts, remaining - len, idx + 1, comp);
        }
    }

    fn apply_face(&mut self, holes: &[Rc<Hole>], hole: &Hole, contacts: &[Contact], comp: &[usize]) {
        let m = hole.len();
        let r = contacts.len();
        // sub-hole stretches u_i .. z_{i+1} as item index lists
        let mut stretches: Vec<Vec<usize>> = Vec::with_capacity(r);
        for i in 0..r {
            let u = contacts[i].u;
            let z_next = contacts[(i + 1) % r].z;
            let mut idxs = vec![u];
            let mut posn = (u + 1) % m;
            loop {
                idxs.push(posn);
                if posn == z_next {
                    break;
                }
                posn = (posn + 1) % m;
            }
            stretches.push(idxs);
        }
        // prune gapless sub-holes with the word decider before building
        for (i, idxs) in stretches.iter().enumerate() {
            let mut word: Vec<u8> = Vec::with_capacity(idxs.len() + comp[i]);
            let mut gapless = true;
            for (t, &ix) in idxs.iter().enumerate() {
                match &hole[ix] {
                    Item::V { cap, .. } => {
                        let c = if t == 0 || t + 1 == idxs.len() { 0 } else { *cap as u8 };
                        word.push(c);
                    }
                    Item::Gap { .. } => {
                        gapless = false;
                        break;
                    }
                }
            }
            if gapless {
                word.extend(std::iter::repeat(1u8).take(comp[i] - 1));
                if let WordOutcome::No = self.words.decide(&word) {
                    return;
                }
            }
        }

        let mk = self.mark();
        self.x_created += comp.iter().map(|&l| l as u64 - 1).sum::<u64>();
        // allocate excursions
        let mut exc_darts: Vec<Vec<Dart>> = Vec::with_capacity(r);
        let mut exc_verts: Vec<Vec<u32>> = Vec::with_capacity(r);
        for &len in comp {
            let mut darts = Vec::with_capacity(len);
            let mut verts = Vec::with_capacity(len.saturating_sub(1));
            for t in 0..len {
                let (d, _) = self.new_edge();
                darts.push(d);
                if t + 1 < len {
                    let v = self.n_verts;
                    self.n_verts += 1;
                    verts.push(v);
                }
            }
            exc_darts.push(darts);
            exc_verts.push(verts);
        }
        // face cycle: arcs and excursions in walk order
        let mut cycle: Vec<Dart> = Vec::new();
        for i in 0..r {
            let c = &contacts[i];
            let mut posn = c.z;
            for _ in 0..c.edges {
                match &hole[posn] {
                    Item::V { dart, .. } => cycle.push(dart.expect("concrete arc edge")),
                    Item::Gap { .. } => unreachable!(),
                }
                posn = (posn + 1) % m;
            }
            cycle.extend(exc_darts[i].iter().copied());
        }
        self.faces.push(cycle);

        let mut new_holes: Vec<Rc<Hole>> = holes[..holes.len() - 1].to_vec();
        for i in 0..r {
            let idxs = &stretches[i];
            let len = idxs.len();
            let mut sub: Hole = Vec::with_capacity(len + comp[i] - 1);
            for (t, &ix) in idxs.iter().enumerate() {
                match &hole[ix] {
                    Item::V { vx, cap, dart } => {
                        let c = if t == 0 || t + 1 == len { false } else { *cap };
                        let d = if t + 1 == len {
                            // the stretch end continues along the reversed
                            // excursion
                            Some(self.alpha[exc_darts[i][comp[i] - 1] as usize])
                        } else {
                            *dart
                        };
                        sub.push(Item::V { vx: *vx, cap: c, dart: d });
                    }
                    Item::Gap { idx, cap } => sub.push(Item::Gap { idx: *idx, cap: *cap }),
                }
            }
            for t in (0..comp[i] - 1).rev() {
                sub.push(Item::V {
                    vx: exc_verts[i][t],
                    cap: true,
                    dart: Some(self.alpha[exc_darts[i][t] as usize]),
                });
            }
            new_holes.push(Rc::new(sub));
        }
        self.search(&new_holes);
        self.rollback(&mk);
    }

    fn record_solution(&mut self) {
        let fwd: Vec<Dart> = match &self.fixed_boundary {
            Some(b) => b.clone(),
            None => {
                let mut b = Vec::new();
                for idx in 0..self.n_corners as usize {
                    let rec = self.gap_records[idx]
                        .as_ref()
                        .expect("all gaps committed at solution time");
                    b.extend(rec.0.iter().copied());
                }
                b
            }
        };
        let outer: Vec<Dart> = fwd.iter().rev().map(|&d| self.alpha[d as usize]).collect();
        let mut builder = MapBuilder::new();
        for _ in 0..self.alpha.len() / 2 {
            builder.new_edge();
        }
        for f in &self.faces {
            builder.add_face(f.clone());
        }
        builder.add_face(outer.clone());
        let map = match builder.finish() {
            Ok(m) => m,
            Err(_) => return,
        };
        let outer_face = map.face_of(outer[0]);
        let patch = Patch { map, outer_face, p: self.p };
        let j: Vec<u32> = self.j.iter().map(|x| x.unwrap_or(0)).collect();
        self.solutions.push(Filling { j, patch });
    }
}

// ---------------------------------------------------------------------
// Public patch type and fill API
// ---------------------------------------------------------------------

/// A disk filled by p-gons: a spherical map together with its outer face.
#[derive(Debug, Clone)]
pub struct Patch {
    pub map: CombinatorialMap,
    pub outer_face: usize,
    pub p: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatchStats {
    pub v2: u32,
    pub v3: u32,
    pub x: u32,
    pub f: u32,
}

impl Patch {
    /// Boundary vertex counts by degree, interior vertices, and face count.
    pub fn stats(&self) -> PatchStats {
        let mut v2 = 0;
        let mut v3 = 0;
        for &d in self.map.face_darts(self.outer_face) {
            match self.map.degree(self.map.tail(d)) {
                2 => v2 += 1,
                3 => v3 += 1,
                _ => unreachable!("patch boundary degrees are 2 or 3"),
            }
        }
        let boundary = self.map.face_size(self.outer_face) as u32;
        PatchStats {
            v2,
            v3,
            x: self.map.num_vertices() as u32 - boundary,
            f: self.map.num_faces() as u32 - 1,
        }
    }

    /// Runs of degree-2 vertices between degree-3 vertices around the
    /// boundary, canonicalized; degenerate when the boundary has no tails.
    pub fn boundary_sequence(&self) -> BoundarySequence {
        let darts = self.map.face_darts(self.outer_face);
        let degs: Vec<usize> =
            darts.iter().map(|&d| self.map.degree(self.map.tail(d))).collect();
        let m = degs.len();
        let tails: Vec<usize> = (0..m).filter(|&i| degs[i] == 3).collect();
        if tails.is_empty() {
            return BoundarySequence::degenerate(m as u32);
        }
        let mut entries = Vec::with_capacity(tails.len());
        for (i, &t) in tails.iter().enumerate() {
            let next = tails[(i + 1) % tails.len()];
            let gap = (next + m - t) % m;
            entries.push((gap - 1) as u32);
        }
        BoundarySequence::new(entries).canonical()
    }

    /// Canonical code of the patch: map code with the outer face marked,
    /// so equality means isomorphism as a bounded disk.
    pub fn canonical_code(&self) -> CanonicalCode {
        self.map.canonical_code_marked(&[self.outer_face])
    }

    /// Adjacency graph of the p-gonal faces.
    pub fn pgon_adjacency(&self) -> petgraph::graph::UnGraph<usize, ()> {
        let faces: Vec<usize> =
            (0..self.map.num_faces()).filter(|&f| f != self.outer_face).collect();
        face_adjacency_graph(&self.map, &faces)
    }
}

/// Stats as a tuple, mirroring the patch identity `2 v2 - (p-4) v3 +
/// (6-p) x = 2p`.
pub fn patch_stats(patch: &Patch) -> (u32, u32, u32, u32) {
    let s = patch.stats();
    (s.v2, s.v3, s.x, s.f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillMode {
    Decide,
    Count,
    Enumerate,
}

#[derive(Debug)]
pub enum FillResult {
    Decide(bool),
    Count(usize),
    Enumerate(Vec<Patch>),
}

/// Reusable filling context for one face size; the decide memo is shared
/// across queries.
pub struct Filler {
    p: u32,
    words: WordFiller,
    max_nodes: u64,
}

impl Filler {
    pub fn new(p: u32, caps: Caps) -> Self {
        Filler { p, words: WordFiller::new(p, caps.max_nodes), max_nodes: caps.max_nodes }
    }

    pub fn nodes_used(&self) -> u64 {
        self.words.nodes
    }

    fn word_of(a: &BoundarySequence) -> Vec<u8> {
        let mut w = Vec::new();
        for &e in a.entries() {
            w.push(1u8);
            w.extend(std::iter::repeat(0u8).take(e as usize));
        }
        w
    }

    pub fn decide(&mut self, a: &BoundarySequence) -> Result<bool> {
        if a.is_degenerate() {
            return Ok(a.n() == self.p);
        }
        match self.words.decide(&Self::word_of(a)) {
            WordOutcome::Yes => Ok(true),
            WordOutcome::No => Ok(false),
            WordOutcome::Exhausted => Err(RingError::ResourceExhausted(format!(
                "fill decide budget exceeded on {a}"
            ))),
        }
    }

    pub fn enumerate(&mut self, a: &BoundarySequence) -> Result<Vec<Patch>> {
        if a.is_degenerate() {
            if a.n() != self.p {
                return Ok(Vec::new());
            }
            return Ok(vec![single_face_patch(self.p)]);
        }
        if !self.decide(a)? {
            return Ok(Vec::new());
        }
        let word = Self::word_of(a);
        let l = word.len();
        let mut alpha: Vec<Dart> = Vec::with_capacity(2 * l);
        for d in 0..l as u32 {
            alpha.push(2 * d + 1);
            alpha.push(2 * d);
        }
        let fwd: Vec<Dart> = (0..l as u32).map(|i| 2 * i).collect();
        let items: Hole = (0..l)
            .map(|i| Item::V { vx: i as u32, cap: word[i] == 1, dart: Some(fwd[i]) })
            .collect();
        let k = a.k() as u64;
        let mut grower = Grower {
            p: self.p,
            words: &mut self.words,
            alpha,
            n_verts: l as u32,
            faces: Vec::new(),
            n_corners: 0,
            j: Vec::new(),
            gap_records: Vec::new(),
            undo: Vec::new(),
            k_committed: k,
            k_cap_remaining: 0,
            k_lo: k,
            k_hi: k,
            x_created: 0,
            domain_n: a.n(),
            fixed_boundary: Some(fwd),
            nodes: 0,
            max_nodes: self.max_nodes,
            exhausted: false,
            solutions: Vec::new(),
        };
        grower.search(&[Rc::new(items)]);
        if grower.exhausted {
            return Err(RingError::ResourceExhausted(format!(
                "fill enumerate budget exceeded on {a}"
            )));
        }
        let solutions = std::mem::take(&mut grower.solutions);
        drop(grower);
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for filling in solutions {
            if seen.insert(filling.patch.canonical_code()) {
                out.push(filling.patch);
            }
        }
        Ok(out)
    }

    pub fn count(&mut self, a: &BoundarySequence) -> Result<usize> {
        Ok(self.enumerate(a)?.len())
    }

    /// Enumerate all fillings of a ring inner domain whose subdivision
    /// counts are not fixed in advance: n corner vertices separated by
    /// gaps of capacity q-4, total tail count within [k_lo, k_hi].
    /// Returns deduplicated (sequence, patch) pairs.
    pub fn enumerate_ring_domains(
        &mut self,
        n: u32,
        q: u32,
        k_lo: u64,
        k_hi: u64,
    ) -> Result<Vec<(BoundarySequence, Patch)>> {
        let gap_cap = q - 4;
        let mut items: Hole = Vec::with_capacity(2 * n as usize);
        for c in 0..n {
            items.push(Item::V { vx: c, cap: false, dart: None });
            items.push(Item::Gap { idx: c as usize, cap: gap_cap });
        }
        let mut grower = Grower {
            p: self.p,
            words: &mut self.words,
            alpha: Vec::new(),
            n_verts: n,
            faces: Vec::new(),
            n_corners: n,
            j: vec![None; n as usize],
            gap_records: vec![None; n as usize],
            undo: Vec::new(),
            k_committed: 0,
            k_cap_remaining: (gap_cap as u64) * n as u64,
            k_lo,
            k_hi,
            x_created: 0,
            domain_n: n,
            fixed_boundary: None,
            nodes: 0,
            max_nodes: self.max_nodes,
            exhausted: false,
            solutions: Vec::new(),
        };
        grower.search(&[Rc::new(items)]);
        if grower.exhausted {
            return Err(RingError::ResourceExhausted(format!(
                "ring domain enumeration budget exceeded for n={n}, q={q}"
            )));
        }
        let solutions = std::mem::take(&mut grower.solutions);
        drop(grower);
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for filling in solutions {
            let layout = RingLayout { n, q, j: filling.j.clone() };
            let seq = layout.inner_sequence();
            let key = (seq.clone(), filling.patch.canonical_code());
            if seen.insert(key) {
                out.push((seq, filling.patch));
            }
        }
        Ok(out)
    }
}

/// One-shot fill entry point.
pub fn fill(a: &BoundarySequence, p: u32, mode: FillMode, caps: Caps) -> Result<FillResult> {
    let mut filler = Filler::new(p, caps);
    Ok(match mode {
        FillMode::Decide => FillResult::Decide(filler.decide(a)?),
        FillMode::Count => FillResult::Count(filler.count(a)?),
        FillMode::Enumerate => FillResult::Enumerate(filler.enumerate(a)?),
    })
}

/// The patch consisting of a single p-gon.
pub fn single_face_patch(p: u32) -> Patch {
    let mut b = MapBuilder::new();
    let mut fwd = Vec::with_capacity(p as usize);
    for _ in 0..p {
        let (d, _) = b.new_edge();
        fwd.push(d);
    }
    b.add_face(fwd.clone());
    let outer: Vec<Dart> = fwd.iter().rev().map(|&d| d ^ 1).collect();
    b.add_face(outer.clone());
    let map = b.finish().expect("cycle map");
    let outer_face = map.face_of(outer[0]);
    Patch { map, outer_face, p }
}

/// Build a patch from bounded faces given as consistently oriented vertex
/// cycles (each interior edge traversed once in each direction, boundary
/// edges once); the outer face is derived.
pub fn patch_from_face_cycles(p: u32, faces: &[Vec<usize>]) -> Result<Patch> {
    use std::collections::HashMap as Map;
    let mut seen: Map<(usize, usize), u32> = Map::new();
    for f in faces {
        for (i, &u) in f.iter().enumerate() {
            let v = f[(i + 1) % f.len()];
            *seen.entry((u, v)).or_insert(0) += 1;
        }
    }
    let mut bnd_next: Map<usize, usize> = Map::new();
    for (&(u, v), &c) in &seen {
        if c > 1 {
            return Err(RingError::Structural("edge direction traversed twice".into()));
        }
        if !seen.contains_key(&(v, u)) {
            // the outer face runs v -> u
            if bnd_next.insert(v, u).is_some() {
                return Err(RingError::Structural("boundary branches".into()));
            }
        }
    }
    if bnd_next.is_empty() {
        return Err(RingError::Structural("no boundary".into()));
    }
    let start = *bnd_next.keys().min().unwrap();
    let mut outer = vec![start];
    let mut cur = bnd_next[&start];
    while cur != start {
        outer.push(cur);
        cur = bnd_next[&cur];
        if outer.len() > bnd_next.len() {
            return Err(RingError::Structural("boundary is not a single cycle".into()));
        }
    }
    if outer.len() != bnd_next.len() {
        return Err(RingError::Structural("boundary is not a single cycle".into()));
    }
    let mut all: Vec<&[usize]> = faces.iter().map(|f| f.as_slice()).collect();
    all.push(&outer);
    let map = crate::map::map_from_vertex_faces(&all)?;
    // locate the outer face by its vertex walk
    let first_edge = (outer[0], outer[1 % outer.len()]);
    let mut outer_face = usize::MAX;
    for f in 0..map.num_faces() {
        if map.face_size(f) == outer.len() {
            let vs = map.face_vertices(f);
            let l = vs.len();
            for s in 0..l {
                if vs[s] == first_edge.0 && vs[(s + 1) % l] == first_edge.1 {
                    outer_face = f;
                }
            }
        }
    }
    if outer_face == usize::MAX {
        return Err(RingError::Structural("outer face not found".into()));
    }
    Ok(Patch { map, outer_face, p })
}

/// All patches whose p-gon adjacency graph is a path of f faces, up to
/// isomorphism. A middle face may attach its successor on any edge not
/// sharing a vertex with the incoming shared edge.
pub fn enumerate_path_patches(p: u32, f: u32) -> Vec<Patch> {
    assert!(p >= 3 && f >= 1);
    if f == 1 {
        return vec![single_face_patch(p)];
    }
    let pu = p as usize;
    let offsets: Vec<usize> = (2..=pu.saturating_sub(2)).collect();
    if f > 2 && offsets.is_empty() {
        return Vec::new(); // triangles cannot chain beyond two faces
    }
    let mut out: Vec<Patch> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut choice = vec![0usize; (f as usize).saturating_sub(2)];
    loop {
        let mut faces: Vec<Vec<usize>> = Vec::with_capacity(f as usize);
        let mut next_vertex = 0usize;
        let alloc = |k: usize, next_vertex: &mut usize| -> Vec<usize> {
            let vs: Vec<usize> = (*next_vertex..*next_vertex + k).collect();
            *next_vertex += k;
            vs
        };
        let first: Vec<usize> = alloc(pu, &mut next_vertex);
        let mut shared = (first[0], first[1]);
        faces.push(first);
        for t in 1..f as usize {
            let (a, b) = shared;
            let news = alloc(pu - 2, &mut next_vertex);
            let mut cyc = Vec::with_capacity(pu);
            cyc.push(b);
            cyc.push(a);
            cyc.extend(news.iter().copied());
            if t < f as usize - 1 {
                let o = offsets[choice[t - 1]];
                shared = (cyc[o], cyc[(o + 1) % pu]);
            }
            faces.push(cyc);
        }
        if let Ok(patch) = patch_from_face_cycles(p, &faces) {
            if seen.insert(patch.canonical_code()) {
                out.push(patch);
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < offsets.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// For each sequence length k <= k_max and every n with a non-negative
/// interior count, the set of canonical sequences fillable by pentagons.
pub fn pentagonal_table(
    k_max: u32,
    caps: Caps,
) -> Result<BTreeMap<(u32, u32), Vec<BoundarySequence>>> {
    let mut filler = Filler::new(5, caps);
    let mut out: BTreeMap<(u32, u32), Vec<BoundarySequence>> = BTreeMap::new();
    for k in 1..=k_max {
        let n_hi = (10 + k) / 2;
        for n in 0..=n_hi {
            let mut found = Vec::new();
            let candidates = if n == 0 {
                vec![BoundarySequence::new(vec![0; k as usize])]
            } else {
                crate::seq::generate_feasible_bounded(n, k, k, 3)
            };
            for a in candidates {
                if filler.decide(&a)? {
                    found.push(a);
                }
            }
            if !found.is_empty() {
                out.insert((k, n), found);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::euler_check;

    fn seq(s: &str) -> BoundarySequence {
        s.parse().unwrap()
    }

    fn filler(p: u32) -> Filler {
        Filler::new(p, Caps::default())
    }

    #[test]
    fn hex_development_calibration() {
        // single hexagon
        assert_eq!(hex_face_count(&[0, 0, 0, 0, 0, 0]), Some(1));
        // two hexagons sharing an edge: boundary word 1 0000 1 0000
        assert_eq!(hex_face_count(&[1, 0, 0, 0, 0, 1, 0, 0, 0, 0]), Some(2));
        // turning count off by one: rejected before development
        assert_eq!(word_budget(6, &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0]), None);
        // hexagon chains of three: both middle-gap splits develop to f = 3
        for patch in enumerate_path_patches(6, 3) {
            let st = patch.stats();
            assert_eq!((st.x, st.f), (0, 3));
        }
    }

    #[test]
    fn two_pentagons_from_33() {
        let mut f = filler(5);
        assert!(f.decide(&seq("33")).unwrap());
        let patches = f.enumerate(&seq("33")).unwrap();
        assert_eq!(patches.len(), 1);
        let s = patches[0].stats();
        assert_eq!((s.v2, s.v3, s.x, s.f), (6, 2, 0, 2));
        assert_eq!(patches[0].boundary_sequence(), seq("33"));
    }

    #[test]
    fn wheel_from_11111() {
        let mut f = filler(5);
        let patches = f.enumerate(&seq("11111")).unwrap();
        assert_eq!(patches.len(), 1);
        let s = patches[0].stats();
        assert_eq!((s.v2, s.v3, s.x, s.f), (5, 5, 5, 6));
        // the patch identity
        assert_eq!(2 * s.v2 - s.v3 + s.x, 10);
    }

    #[test]
    fn twenty_one_is_not_pentagonal() {
        let mut f = filler(5);
        assert!(!f.decide(&seq("21")).unwrap());
    }

    #[test]
    fn degenerate_fills_iff_n_equals_p() {
        let mut f = filler(5);
        assert!(f.decide(&BoundarySequence::degenerate(5)).unwrap());
        assert!(!f.decide(&BoundarySequence::degenerate(6)).unwrap());
        let ps = f.enumerate(&BoundarySequence::degenerate(5)).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].stats(), PatchStats { v2: 5, v3: 0, x: 0, f: 1 });
    }

    #[test]
    fn known_pentagonal_rows() {
        let mut f = filler(5);
        for s in ["33", "222", "2121", "3130", "11111", "110110", "100100", "101010", "20002000"]
        {
            assert!(f.decide(&seq(s)).unwrap(), "{s} should fill");
        }
        for s in ["3", "22", "31", "1111", "21021"] {
            assert!(!f.decide(&seq(s)).unwrap(), "{s} should not fill");
        }
    }

    #[test]
    fn eight_pentagon_patch_of_110110() {
        let mut f = filler(5);
        let ps = f.enumerate(&seq("110110")).unwrap();
        assert!(!ps.is_empty());
        for p in &ps {
            assert_eq!(p.stats().f, 8);
            assert_eq!(p.boundary_sequence(), seq("110110").canonical());
        }
    }

    #[test]
    fn patch_euler_identity_holds_on_enumerations() {
        for (p, s) in [(5u32, "2121"), (5, "202020"), (4, "22"), (6, "44")] {
            let mut f = filler(p);
            for patch in f.enumerate(&seq(s)).unwrap() {
                let st = patch.stats();
                assert_eq!(
                    2 * st.v2 as i64 - (p as i64 - 4) * st.v3 as i64
                        + (6 - p as i64) * st.x as i64,
                    2 * p as i64,
                    "p={p} s={s}"
                );
            }
        }
    }

    #[test]
    fn quadrangle_chain_sequences() {
        // a chain of f quadrangles has boundary sequence (2, 0^(f-2)) twice
        for f_count in 2..=5u32 {
            let patches = enumerate_path_patches(4, f_count);
            assert_eq!(patches.len(), 1, "f={f_count}");
            let mut b = vec![2u32];
            b.extend(std::iter::repeat(0).take(f_count as usize - 2));
            let mut bb = b.clone();
            bb.extend(b.iter().copied());
            assert_eq!(
                patches[0].boundary_sequence(),
                BoundarySequence::new(bb).canonical(),
                "f={f_count}"
            );
        }
    }

    #[test]
    fn pentagon_paths_include_the_sixteen_chain() {
        let patches = enumerate_path_patches(5, 16);
        let b = "300100101011011";
        let target = seq(&format!("{b}{b}")).canonical();
        assert!(
            patches.iter().any(|p| p.boundary_sequence() == target),
            "sixteen-pentagon chain with the expected boundary not found"
        );
        for p in &patches {
            assert!(crate::map::graph_is_path(&p.pgon_adjacency()));
            assert_eq!(p.stats().x, 0);
        }
    }

    #[test]
    fn triangles_do_not_chain_past_two() {
        assert_eq!(enumerate_path_patches(3, 2).len(), 1);
        assert!(enumerate_path_patches(3, 3).is_empty());
    }

    #[test]
    fn fill_enumerate_matches_decide() {
        for (p, n_max, k_max) in [(4u32, 5u32, 5u32), (5, 6, 6)] {
            let mut f = filler(p);
            for n in 1..=n_max {
                for a in crate::seq::generate_feasible_bounded(n, 1, k_max, p - 2) {
                    let d = f.decide(&a).unwrap();
                    let e = !f.enumerate(&a).unwrap().is_empty();
                    assert_eq!(d, e, "p={p} a={a}");
                }
            }
        }
    }

    #[test]
    fn enumerated_patches_are_valid_maps() {
        let mut f = filler(5);
        for a in ["2121", "202020", "110110"] {
            for patch in f.enumerate(&seq(a)).unwrap() {
                assert_eq!(patch.map.euler_characteristic(), 2);
                for v in 0..patch.map.num_vertices() {
                    assert!(patch.map.degree(v) == 2 || patch.map.degree(v) == 3);
                }
                for fid in 0..patch.map.num_faces() {
                    if fid != patch.outer_face {
                        assert_eq!(patch.map.face_size(fid), 5);
                    }
                }
            }
        }
    }

    #[test]
    fn ring_domain_enumeration_small_pentagon_case() {
        // inner domains of a ring of six 5-gons filled with pentagons,
        // tails within [1, 3]: the self-complementary 222 and the short
        // side 33 of the 33/2121 pair
        let mut f = filler(5);
        let found = f.enumerate_ring_domains(6, 5, 1, 3).unwrap();
        let seqs: std::collections::BTreeSet<String> =
            found.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(
            seqs,
            ["222", "33"].iter().map(|s| s.to_string()).collect()
        );
        for (s, patch) in &found {
            assert_eq!(&patch.boundary_sequence(), s);
        }
    }

    #[test]
    fn ring_domain_enumeration_matches_sequence_route() {
        // every (sequence, patch) pair found lazily must match the
        // sequence-by-sequence route, and vice versa
        for (p, q, n) in [(5u32, 5u32, 6u32), (5, 6, 5), (5, 6, 6), (4, 6, 3)] {
            let k_hi = ((q - 4) * n / 2) as u64;
            let mut f = filler(p);
            let lazy = f.enumerate_ring_domains(n, q, 1, k_hi).unwrap();
            let mut by_seq: BTreeMap<String, usize> = BTreeMap::new();
            for (s, _) in &lazy {
                *by_seq.entry(s.to_string()).or_default() += 1;
            }
            let mut expected: BTreeMap<String, usize> = BTreeMap::new();
            for (_k, seqs) in crate::seq::generate_feasible(n, q) {
                for a in seqs {
                    let cnt = f.enumerate(&a).unwrap().len();
                    if cnt > 0 {
                        expected.insert(a.to_string(), cnt);
                    }
                }
            }
            assert_eq!(by_seq, expected, "p={p} q={q} n={n}");
        }
    }

    #[test]
    fn single_face_patch_is_sane() {
        let patch = single_face_patch(7);
        assert_eq!(patch.stats(), PatchStats { v2: 7, v3: 0, x: 0, f: 1 });
        assert_eq!(patch.boundary_sequence(), BoundarySequence::degenerate(7));
        let rep = euler_check(&patch.map, 7, 7, 7);
        // a bare polygon is not a 3-valent map; only the Euler formula holds
        assert!(rep.checks.iter().any(|c| c.0 == "euler_sphere" && c.1));
    }

    #[test]
    fn pentagonal_table_small_cells() {
        let table = pentagonal_table(6, Caps::default()).unwrap();
        let cell = |k: u32, n: u32| -> Vec<String> {
            table
                .get(&(k, n))
                .map(|v| v.iter().map(|s| s.to_string()).collect())
                .unwrap_or_default()
        };
        assert_eq!(cell(2, 6), vec!["33"]);
        assert_eq!(cell(3, 6), vec!["222"]);
        assert_eq!(cell(4, 6), vec!["1212"]);
        assert_eq!(cell(4, 7), vec!["0313"]);
        assert_eq!(cell(5, 5), vec!["11111"]);
        assert_eq!(cell(6, 6), vec!["012012", "020202"]);
        assert_eq!(cell(6, 4), vec!["011011"]);
    }
}
