//! Arithmetic of the parameter relation `((4-p)(q-4)+4)n + (6-p)(x+x') = 4p`
//! that every ring map must satisfy, where `x + x'` is the total number of
//! interior vertices of the two domains.
//!
//! Admissibility is necessary, never sufficient: existence is settled by
//! the search pipeline.

use crate::{Result, RingError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// The relation pins x+x' to this value.
    Admissible { excess: u32 },
    /// p = 6 satisfies the relation with x+x' unconstrained.
    AdmissibleUnconstrained,
    Inadmissible { reason: String },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        !matches!(self, Admissibility::Inadmissible { .. })
    }
    pub fn excess(&self) -> Option<u32> {
        match self {
            Admissibility::Admissible { excess } => Some(*excess),
            _ => None,
        }
    }
}

fn check_params(p: u32, q: u32, n: u32) -> Result<()> {
    if p < 3 {
        return Err(RingError::Parameter(format!("p must be at least 3, got {p}")));
    }
    if q < 4 {
        return Err(RingError::Parameter(format!("q must be at least 4, got {q}")));
    }
    if n < 2 {
        return Err(RingError::Parameter(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// Decide whether (p, q, n) satisfies the parameter relation, returning the
/// forced excess x+x' when it does.
pub fn admissible(p: u32, q: u32, n: u32) -> Result<Admissibility> {
    check_params(p, q, n)?;
    let (p_, q_, n_) = (p as i64, q as i64, n as i64);
    let coeff = (4 - p_) * (q_ - 4) + 4;
    if p == 6 {
        return Ok(if coeff * n_ == 24 {
            Admissibility::AdmissibleUnconstrained
        } else {
            Admissibility::Inadmissible { reason: format!("(12-2q)n = {} != 24", coeff * n_) }
        });
    }
    let num = 4 * p_ - coeff * n_;
    let den = 6 - p_;
    if num % den != 0 {
        return Ok(Admissibility::Inadmissible {
            reason: format!("excess {num}/{den} is not an integer"),
        });
    }
    let excess = num / den;
    if excess < 0 {
        return Ok(Admissibility::Inadmissible { reason: format!("excess {excess} is negative") });
    }
    Ok(Admissibility::Admissible { excess: excess as u32 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub adm: Admissibility,
}

/// All admissible triples in the given ranges, sorted by (p, q, n).
pub fn scan_domain(
    p_range: (u32, u32),
    q_range: (u32, u32),
    n_max: u32,
) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    for p in p_range.0..=p_range.1 {
        for q in q_range.0..=q_range.1 {
            for n in 2..=n_max {
                let adm = admissible(p, q, n)?;
                if adm.is_admissible() {
                    rows.push(ScanRow { p, q, n, adm });
                }
            }
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoPaths {
    /// The unique ring length with x+x' = 0.
    pub n: u32,
    /// Number of p-gons in each domain path, `(n-4)/(p-4)`, defined for p > 4.
    pub path_faces: Option<u32>,
}

/// The unique n for which maps with two paths of p-gons can exist, when the
/// relation `n = 4p / (4 - (p-4)(q-4))` has a positive integral solution.
pub fn two_paths_n(p: u32, q: u32) -> Option<TwoPaths> {
    if p < 3 || q < 4 {
        return None;
    }
    let den = 4 - (p as i64 - 4) * (q as i64 - 4);
    if den <= 0 || (4 * p as i64) % den != 0 {
        return None;
    }
    let n = (4 * p as i64 / den) as u32;
    if n < 2 {
        return None;
    }
    let path_faces = if p > 4 { Some((n - 4) / (p - 4)) } else { None };
    Some(TwoPaths { n, path_faces })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_triples() {
        assert_eq!(admissible(7, 5, 28).unwrap(), Admissibility::Admissible { excess: 0 });
        assert!(!admissible(7, 5, 27).unwrap().is_admissible());
        assert_eq!(admissible(6, 5, 12).unwrap(), Admissibility::AdmissibleUnconstrained);
        assert_eq!(admissible(5, 7, 5).unwrap(), Admissibility::Admissible { excess: 15 });
        assert_eq!(admissible(3, 6, 2).unwrap(), Admissibility::Admissible { excess: 0 });
        assert_eq!(admissible(4, 4, 4).unwrap(), Admissibility::Admissible { excess: 0 });
    }

    #[test]
    fn parameter_floors() {
        assert!(admissible(2, 5, 3).is_err());
        assert!(admissible(5, 3, 3).is_err());
        assert!(admissible(5, 5, 1).is_err());
    }

    #[test]
    fn high_p_scan_leaves_only_heptagon_azulenoids() {
        let rows = scan_domain((7, 12), (5, 12), 50).unwrap();
        assert!(!rows.is_empty());
        for r in &rows {
            assert_eq!((r.p, r.q), (7, 5), "{r:?}");
            assert!(r.n >= 28);
        }
    }

    #[test]
    fn pentagon_hexagon_scan_stops_at_ten() {
        let rows = scan_domain((5, 5), (6, 6), 50).unwrap();
        let ns: Vec<u32> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, (2..=10).collect::<Vec<_>>());
    }

    #[test]
    fn quadrangle_scan_stops_at_four() {
        let rows = scan_domain((4, 4), (4, 20), 50).unwrap();
        assert!(rows.iter().all(|r| r.n <= 4));
        assert!(rows.iter().any(|r| r.n == 4));
    }

    #[test]
    fn triangle_scan_is_two_triples() {
        let rows = scan_domain((3, 3), (4, 12), 50).unwrap();
        let triples: Vec<(u32, u32, u32)> = rows.iter().map(|r| (r.p, r.q, r.n)).collect();
        assert_eq!(triples, vec![(3, 4, 3), (3, 6, 2)]);
    }

    #[test]
    fn excess_substitutes_back_exactly() {
        for p in 3..=12 {
            for q in 4..=12 {
                for n in 2..=60 {
                    if let Admissibility::Admissible { excess } = admissible(p, q, n).unwrap() {
                        let lhs = ((4 - p as i64) * (q as i64 - 4) + 4) * n as i64
                            + (6 - p as i64) * excess as i64;
                        assert_eq!(lhs, 4 * p as i64, "p={p} q={q} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn two_paths_values() {
        assert_eq!(two_paths_n(7, 5), Some(TwoPaths { n: 28, path_faces: Some(8) }));
        assert_eq!(two_paths_n(5, 7), Some(TwoPaths { n: 20, path_faces: Some(16) }));
        assert_eq!(two_paths_n(3, 6), Some(TwoPaths { n: 2, path_faces: None }));
        assert_eq!(two_paths_n(6, 5), Some(TwoPaths { n: 12, path_faces: Some(4) }));
        assert_eq!(two_paths_n(5, 5), None);
        assert_eq!(two_paths_n(5, 8), None);
        // prisms: q = 4 forces n = p
        for p in 3..=12 {
            assert_eq!(two_paths_n(p, 4).map(|t| t.n), Some(p));
        }
    }

    #[test]
    fn two_paths_n_is_admissible_with_zero_excess() {
        for p in 3..=12 {
            for q in 4..=12 {
                if let Some(t) = two_paths_n(p, q) {
                    let adm = admissible(p, q, t.n).unwrap();
                    if p == 6 {
                        assert_eq!(adm, Admissibility::AdmissibleUnconstrained);
                    } else {
                        assert_eq!(adm, Admissibility::Admissible { excess: 0 });
                    }
                }
            }
        }
    }
}
