//! Cyclic boundary sequences of patches and their ring combinatorics.
//!
//! A boundary sequence `a_1 ... a_k` records the runs of degree-2 vertices
//! between consecutive tails around a patch boundary. Sequences compare up
//! to rotation and reversal. The q-complement of a sequence is the sequence
//! induced on the far side of a ring of q-gons realized as a decorated
//! prism: each ring quadrangle carries j_i subdivision vertices on its
//! inner edge and q-4-j_i on its outer edge.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{Result, RingError};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundarySequence {
    /// k >= 1 runs of degree-2 vertices between tails.
    Entries(Vec<u32>),
    /// The tail-free boundary of a single p-gon domain; carries n explicitly.
    Degenerate { n: u32 },
}

use BoundarySequence::*;

impl BoundarySequence {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "use Degenerate for k = 0");
        Entries(entries)
    }

    pub fn degenerate(n: u32) -> Self {
        Degenerate { n }
    }

    /// Total number of degree-2 boundary vertices (the ring length n).
    pub fn n(&self) -> u32 {
        match self {
            Entries(v) => v.iter().sum(),
            Degenerate { n } => *n,
        }
    }

    /// Number of tails.
    pub fn k(&self) -> usize {
        match self {
            Entries(v) => v.len(),
            Degenerate { .. } => 0,
        }
    }

    pub fn entries(&self) -> &[u32] {
        match self {
            Entries(v) => v,
            Degenerate { .. } => &[],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, Degenerate { .. })
    }

    /// Lexicographically minimal representative over all rotations of the
    /// sequence and of its reversal.
    pub fn canonical(&self) -> BoundarySequence {
        match self {
            Degenerate { n } => Degenerate { n: *n },
            Entries(v) => Entries(canonical_cyclic(v)),
        }
    }

    pub fn eq_cyclic(&self, other: &BoundarySequence) -> bool {
        self.canonical() == other.canonical()
    }

    /// Smallest cyclic period length (1 for the degenerate sequence).
    pub fn period(&self) -> usize {
        let v = match self {
            Degenerate { .. } => return 1,
            Entries(v) => v,
        };
        let k = v.len();
        'outer: for d in 1..=k {
            if k % d != 0 {
                continue;
            }
            for i in 0..k {
                if v[i] != v[(i + d) % k] {
                    continue 'outer;
                }
            }
            return d;
        }
        k
    }

    /// Per-quadrangle split of subdivision vertices induced by this
    /// sequence on a ring of q-gons (inner-edge counts, up to rotation).
    pub fn layout(&self, q: u32) -> Result<RingLayout> {
        if q < 4 {
            return Err(RingError::Parameter(format!("q must be at least 4, got {q}")));
        }
        let n = self.n();
        if n == 0 {
            return Err(RingError::ComplementUndefined(
                "sequence has no degree-2 vertices to anchor ring corners".into(),
            ));
        }
        // cyclic corner/tail word: tail t_i followed by a_i corners
        let mut word: Vec<bool> = Vec::new(); // true = tail, false = corner
        match self {
            Degenerate { n } => word.extend(std::iter::repeat(false).take(*n as usize)),
            Entries(v) => {
                for &a in v {
                    word.push(true);
                    word.extend(std::iter::repeat(false).take(a as usize));
                }
            }
        }
        let m = word.len();
        let corners: Vec<usize> = (0..m).filter(|&i| !word[i]).collect();
        let mut j = Vec::with_capacity(corners.len());
        for (idx, &c) in corners.iter().enumerate() {
            let next = corners[(idx + 1) % corners.len()];
            let gap = if idx + 1 == corners.len() { m - c + next } else { next - c };
            // tails strictly between this corner and the next
            let tails = (1..gap).filter(|&t| word[(c + t) % m]).count() as u32;
            if tails > q - 4 {
                return Err(RingError::ComplementUndefined(format!(
                    "a ring edge would need {tails} subdivision vertices, at most {} fit",
                    q - 4
                )));
            }
            j.push(tails);
        }
        Ok(RingLayout { n, q, j })
    }

    /// The boundary sequence induced on the opposite side of the ring,
    /// canonicalized.
    pub fn q_complement(&self, q: u32) -> Result<BoundarySequence> {
        Ok(self.layout(q)?.outer_sequence())
    }

    /// Whether the sequence equals its q-complement up to rotation and
    /// reversal.
    pub fn is_self_complemented(&self, q: u32) -> Result<bool> {
        Ok(self.q_complement(q)? == self.canonical())
    }
}

fn canonical_cyclic(v: &[u32]) -> Vec<u32> {
    let k = v.len();
    let mut best: Option<Vec<u32>> = None;
    let reversed: Vec<u32> = v.iter().rev().copied().collect();
    for word in [v, reversed.as_slice()] {
        for s in 0..k {
            let cand: Vec<u32> = (0..k).map(|i| word[(s + i) % k]).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// True when `v` is its own canonical cyclic representative (no rotation of
/// it or of its reversal compares lexicographically smaller).
pub fn is_canonical_cyclic(v: &[u32]) -> bool {
    let k = v.len();
    let rev: Vec<u32> = v.iter().rev().copied().collect();
    for word in [v, rev.as_slice()] {
        for s in 0..k {
            for i in 0..k {
                match word[(s + i) % k].cmp(&v[i]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

/// Per-quadrangle subdivision split of a ring of n q-gons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingLayout {
    pub n: u32,
    pub q: u32,
    /// Inner-edge subdivision counts, one per quadrangle, each in [0, q-4].
    pub j: Vec<u32>,
}

impl RingLayout {
    pub fn inner_tail_count(&self) -> u32 {
        self.j.iter().sum()
    }
    pub fn outer_tail_count(&self) -> u32 {
        (self.q - 4) * self.n - self.inner_tail_count()
    }

    /// Boundary sequence read on the inner side of this layout (canonical).
    pub fn inner_sequence(&self) -> BoundarySequence {
        side_sequence(&self.j, self.n)
    }

    /// Boundary sequence read on the outer side (canonical).
    pub fn outer_sequence(&self) -> BoundarySequence {
        let complement: Vec<u32> = self.j.iter().map(|&x| self.q - 4 - x).collect();
        side_sequence(&complement, self.n)
    }
}

/// Read the boundary sequence of one ring side given per-gap tail counts.
fn side_sequence(counts: &[u32], n: u32) -> BoundarySequence {
    let k: u32 = counts.iter().sum();
    if k == 0 {
        return BoundarySequence::degenerate(n);
    }
    // word per gap: one corner then counts[i] tails; runs of corners
    // between consecutive tails form the sequence
    let mut word: Vec<bool> = Vec::new(); // true = tail
    for &c in counts {
        word.push(false);
        word.extend(std::iter::repeat(true).take(c as usize));
    }
    let m = word.len();
    let tails: Vec<usize> = (0..m).filter(|&i| word[i]).collect();
    let mut seq = Vec::with_capacity(tails.len());
    for (idx, &t) in tails.iter().enumerate() {
        let next = tails[(idx + 1) % tails.len()];
        let gap = if idx + 1 == tails.len() { m - t + next } else { next - t };
        let corners = (1..gap).filter(|&s| !word[(t + s) % m]).count() as u32;
        seq.push(corners);
    }
    BoundarySequence::new(seq).canonical()
}

/// All canonical sequence classes with sum n and 1 <= k <= (q-4)n/2,
/// grouped by length. These are the candidates worth testing for a ring of
/// n q-gons; the bound keeps the inner side no longer than the outer.
pub fn generate_feasible(n: u32, q: u32) -> BTreeMap<u32, Vec<BoundarySequence>> {
    let k_max = ((q as u64 - 4) * n as u64 / 2) as u32;
    let mut out: BTreeMap<u32, Vec<BoundarySequence>> = BTreeMap::new();
    for k in 1..=k_max {
        let classes = generate_feasible_bounded(n, k, k, n);
        if !classes.is_empty() {
            out.insert(k, classes);
        }
    }
    out
}

/// Canonical sequence classes with sum n, length in [k_lo, k_hi] and every
/// entry at most `max_entry`; used by the enumeration pipeline where the
/// face size bounds each run (a run of a_i degree-2 vertices lies on a
/// single p-gon, so a_i <= p-2).
pub fn generate_feasible_bounded(
    n: u32,
    k_lo: u32,
    k_hi: u32,
    max_entry: u32,
) -> Vec<BoundarySequence> {
    let mut out = Vec::new();
    for k in k_lo.max(1)..=k_hi {
        let mut current = vec![0u32; k as usize];
        bounded_rec(k as usize, 0, n, max_entry, &mut current, &mut out);
    }
    out.sort();
    out
}

fn bounded_rec(
    k: usize,
    pos: usize,
    remaining: u32,
    max_entry: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<BoundarySequence>,
) {
    if pos == k {
        if remaining == 0 && is_canonical_cyclic(current) {
            out.push(BoundarySequence::new(current.clone()));
        }
        return;
    }
    let slots = (k - pos) as u32;
    if remaining > slots * max_entry {
        return;
    }
    for v in 0..=remaining.min(max_entry) {
        current[pos] = v;
        bounded_rec(k, pos + 1, remaining - v, max_entry, current, out);
    }
    current[pos] = 0;
}

impl fmt::Display for BoundarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degenerate { n } => write!(f, "deg({n})"),
            Entries(v) => {
                if v.iter().all(|&x| x <= 9) {
                    for x in v {
                        write!(f, "{x}")?;
                    }
                    Ok(())
                } else {
                    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    write!(f, "{}", parts.join(","))
                }
            }
        }
    }
}

impl FromStr for BoundarySequence {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("deg(").and_then(|r| r.strip_suffix(')')) {
            let n: u32 = inner
                .trim()
                .parse()
                .map_err(|_| RingError::Parameter(format!("bad degenerate sequence: {s}")))?;
            return Ok(Degenerate { n });
        }
        let entries: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| RingError::Parameter(format!("bad sequence: {s}")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or(()))
                .collect::<std::result::Result<Vec<u32>, _>>()
                .map_err(|_| RingError::Parameter(format!("bad sequence: {s}")))?
        };
        if entries.is_empty() {
            return Err(RingError::Parameter("empty sequence".into()));
        }
        Ok(Entries(entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BoundarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(seq("2121").canonical(), seq("1212"));
        assert_eq!(seq("33").canonical(), seq("33"));
        // the orbit of 310 contains its reversal 013, the lexicographic minimum
        for s in ["310", "103", "031", "013", "130", "301"] {
            assert_eq!(seq(s).canonical(), seq("013"));
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(seq("3,0,1,0,3,0,1,0"), seq("30103010"));
        assert_eq!(seq("30103010").to_string(), "30103010");
        assert_eq!(seq("deg(5)"), BoundarySequence::degenerate(5));
        assert_eq!(BoundarySequence::degenerate(5).to_string(), "deg(5)");
        assert_eq!(BoundarySequence::new(vec![10, 3]).to_string(), "10,3");
    }

    #[test]
    fn periods() {
        assert_eq!(seq("210210").period(), 3);
        assert_eq!(seq("222").period(), 1);
        assert_eq!(seq("30103010").period(), 4);
        assert_eq!(seq("311002201").period(), 9);
    }

    #[test]
    fn layout_of_2121() {
        let lay = seq("2121").layout(5).unwrap();
        assert_eq!(lay.n, 6);
        assert_eq!(lay.inner_tail_count(), 4);
        // expected split up to rotation
        let expect = [0u32, 1, 1, 0, 1, 1];
        let found = (0..6).any(|s| (0..6).all(|i| lay.j[(s + i) % 6] == expect[i]));
        assert!(found, "layout {:?}", lay.j);
    }

    #[test]
    fn layout_symmetric_and_degenerate() {
        assert_eq!(seq("11111").layout(6).unwrap().j, vec![1, 1, 1, 1, 1]);
        assert_eq!(
            BoundarySequence::degenerate(4).layout(7).unwrap().j,
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn complements_from_known_pairs() {
        assert_eq!(seq("222").q_complement(5).unwrap(), seq("222"));
        assert_eq!(seq("2121").q_complement(5).unwrap(), seq("33").canonical());
        assert_eq!(seq("110110").q_complement(7).unwrap(), seq("110110").canonical());
        let a = seq("30100103010010");
        let b = seq("2100100121001001");
        assert_eq!(a.q_complement(7).unwrap(), b.canonical());
        assert_eq!(
            BoundarySequence::degenerate(5).q_complement(5).unwrap(),
            seq("11111")
        );
        // degenerate complement for larger q has period (0^(q-5), 1)
        assert_eq!(
            BoundarySequence::degenerate(3).q_complement(7).unwrap(),
            seq("001001001").canonical()
        );
    }

    #[test]
    fn complement_undefined_when_oversaturated() {
        // four tails inside one corner gap cannot fit when q-4 = 1
        let a = BoundarySequence::new(vec![0, 0, 0, 2]);
        assert!(matches!(
            a.q_complement(5),
            Err(RingError::ComplementUndefined(_))
        ));
    }

    #[test]
    fn self_complement_checks() {
        assert!(seq("202020").is_self_complemented(6).unwrap());
        assert!(!seq("2121").is_self_complemented(5).unwrap());
        let b = "300100101011011";
        let bb: String = format!("{b}{b}");
        assert!(seq(&bb).is_self_complemented(7).unwrap());
    }

    #[test]
    fn complement_is_involutive_and_sum_preserving() {
        for (s, q) in [
            ("2121", 5),
            ("222", 5),
            ("110110", 7),
            ("30103010", 6),
            ("100100", 10),
            ("101010", 8),
            ("20002000", 8),
        ] {
            let a = seq(s);
            let c = a.q_complement(q).unwrap();
            assert_eq!(c.n(), a.n(), "{s}");
            assert_eq!(
                a.k() as u64 + c.k() as u64,
                (q as u64 - 4) * a.n() as u64,
                "{s}"
            );
            let back = c.q_complement(q).unwrap();
            assert_eq!(back, a.canonical(), "{s}");
        }
    }

    #[test]
    fn feasible_classes_for_n6_q5() {
        let by_k = generate_feasible(6, 5);
        assert_eq!(by_k.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(by_k[&1], vec![seq("6")]);
        let k2: Vec<String> = by_k[&2].iter().map(|s| s.to_string()).collect();
        assert_eq!(k2, vec!["06", "15", "24", "33"]);
        let k3: Vec<String> = by_k[&3].iter().map(|s| s.to_string()).collect();
        assert_eq!(k3, vec!["006", "015", "024", "033", "114", "123", "222"]);
        let total: usize = by_k.values().map(|v| v.len()).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn feasible_contains_known_rows() {
        let by_k = generate_feasible(4, 7);
        assert!(by_k[&6].contains(&seq("110110").canonical()));
        let by_k = generate_feasible(2, 10);
        assert!(by_k[&6].contains(&seq("100100").canonical()));
    }

    #[test]
    fn feasible_agrees_with_naive_filter() {
        // independent check: enumerate every composition, canonicalize, dedup
        fn naive(n: u32, q: u32) -> BTreeMap<u32, std::collections::BTreeSet<BoundarySequence>> {
            let k_max = ((q - 4) * n / 2) as usize;
            let mut out: BTreeMap<u32, std::collections::BTreeSet<BoundarySequence>> =
                BTreeMap::new();
            for k in 1..=k_max {
                let mut stack = vec![(Vec::<u32>::new(), n)];
                while let Some((prefix, rem)) = stack.pop() {
                    if prefix.len() == k {
                        if rem == 0 {
                            out.entry(k as u32)
                                .or_default()
                                .insert(BoundarySequence::new(prefix).canonical());
                        }
                        continue;
                    }
                    for v in 0..=rem {
                        let mut p = prefix.clone();
                        p.push(v);
                        stack.push((p, rem - v));
                    }
                }
            }
            out
        }
        for (n, q) in [(2u32, 7u32), (4, 6), (5, 5), (6, 5), (8, 5), (6, 6), (4, 7)] {
            let fast = generate_feasible(n, q);
            let slow = naive(n, q);
            let fast_sets: BTreeMap<u32, std::collections::BTreeSet<BoundarySequence>> = fast
                .into_iter()
                .map(|(k, v)| (k, v.into_iter().collect()))
                .collect();
            let slow_nonempty: BTreeMap<_, _> =
                slow.into_iter().filter(|(_, v)| !v.is_empty()).collect();
            assert_eq!(fast_sets, slow_nonempty, "n={n} q={q}");
        }
    }

    #[test]
    fn canonical_outputs_are_canonical() {
        let by_k = generate_feasible(8, 6);
        for seqs in by_k.values() {
            for s in seqs {
                assert_eq!(s, &s.canonical());
                assert!(is_canonical_cyclic(s.entries()));
            }
        }
    }

    #[test]
    fn period_divides_length() {
        for s in ["2121", "110110", "30103010", "311002201", "222", "100100"] {
            let a = seq(s);
            assert_eq!(a.k() % a.period(), 0, "{s}");
        }
    }
}
