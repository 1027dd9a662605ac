//! Chord diagrams: fixed-point-free involutions on `2n` cyclically ordered
//! points with no two adjacent points paired.
//!
//! A diagram encodes a one-vertex fat graph. Walking the face permutation
//! `f(i) = m(i) + 1 (mod 2n)` recovers the boundary components ("cycles") of
//! that fat graph, and capping each with a disk yields a closed surface whose
//! genus is `(n + 1 - b) / 2` for `b` cycles. A diagram with `2g + k` chords,
//! `k + 1` cycles and no parallel chords models a system of `2g + k` loops at
//! a marked point cutting the genus-`g` surface into `k + 1` disks.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("matching must cover an even number of points, got {0}")]
    OddPointCount(usize),
    #[error("point {0} is out of range")]
    PointOutOfRange(usize),
    #[error("matching is not an involution at point {0}")]
    NotInvolution(usize),
    #[error("point {0} is matched to itself")]
    FixedPoint(usize),
    #[error("adjacent pairing at point {0}")]
    AdjacentPairing(usize),
    #[error("point {0} appears twice")]
    DuplicatePoint(usize),
    #[error("point {0} is unmatched")]
    UnmatchedPoint(usize),
}

/// A chord diagram on `2n` points, stored as the involution `m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChordDiagram {
    m: Vec<usize>,
}

/// The face cycles of a diagram. Each cycle is listed by its entry points
/// (the point at which a chord traversal starts), beginning with the least
/// entry; cycles are sorted by least entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn b(&self) -> usize {
        self.cycles.len()
    }
}

/// Rotational symmetry of a diagram: `order` divides `2n` and counts the
/// rotations fixing the matching; `perm_sign` is the sign of the chord
/// permutation induced by the minimal nontrivial such rotation (+1 when the
/// symmetry is trivial).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    pub order: usize,
    pub perm_sign: i64,
}

/// Sign of the permutation sending position `i` to `perm[i]`.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl ChordDiagram {
    /// Builds a diagram from chord endpoint pairs on points `0..2n-1`.
    pub fn new(n: usize, chords: &[(usize, usize)]) -> Result<Self, DiagramError> {
        let size = 2 * n;
        let mut m = vec![usize::MAX; size];
        for &(a, b) in chords {
            for p in [a, b] {
                if p >= size {
                    return Err(DiagramError::PointOutOfRange(p));
                }
            }
            if a == b {
                return Err(DiagramError::FixedPoint(a));
            }
            if m[a] != usize::MAX {
                return Err(DiagramError::DuplicatePoint(a));
            }
            if m[b] != usize::MAX {
                return Err(DiagramError::DuplicatePoint(b));
            }
            m[a] = b;
            m[b] = a;
        }
        if let Some(p) = m.iter().position(|&q| q == usize::MAX) {
            return Err(DiagramError::UnmatchedPoint(p));
        }
        Self::from_involution(m)
    }

    /// Builds a diagram from the raw involution vector.
    pub fn from_involution(m: Vec<usize>) -> Result<Self, DiagramError> {
        let size = m.len();
        if !size.is_multiple_of(2) {
            return Err(DiagramError::OddPointCount(size));
        }
        for i in 0..size {
            if m[i] >= size {
                return Err(DiagramError::PointOutOfRange(m[i]));
            }
            if m[i] == i {
                return Err(DiagramError::FixedPoint(i));
            }
            if m[m[i]] != i {
                return Err(DiagramError::NotInvolution(i));
            }
            if m[i] == (i + 1) % size || i == (m[i] + 1) % size {
                return Err(DiagramError::AdjacentPairing(i.min(m[i])));
            }
        }
        Ok(ChordDiagram { m })
    }

    /// The canonical zigzag `S_m` on `2m` points: chords `(0,2)`,
    /// `(2i-1, 2i+2)` for `1 <= i <= m-2`, and `(2m-3, 2m-1)`.
    pub fn zigzag(m: usize) -> Self {
        assert!(m >= 2, "zigzag needs at least 2 chords");
        let mut chords = vec![(0, 2)];
        for i in 1..=m.saturating_sub(2) {
            chords.push((2 * i - 1, 2 * i + 2));
        }
        chords.push((2 * m - 3, 2 * m - 1));
        ChordDiagram::new(m, &chords).expect("zigzag is a valid diagram")
    }

    pub fn n(&self) -> usize {
        self.m.len() / 2
    }

    pub fn points(&self) -> usize {
        self.m.len()
    }

    pub fn partner(&self, p: usize) -> usize {
        self.m[p]
    }

    pub fn involution(&self) -> &[usize] {
        &self.m
    }

    /// Chords as `(low, high)` endpoint pairs, sorted by low endpoint.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n());
        for i in 0..self.points() {
            if i < self.m[i] {
                out.push((i, self.m[i]));
            }
        }
        out
    }

    /// Index (into `chords()`) of the chord containing point `p`.
    pub fn chord_at(&self, p: usize) -> usize {
        let low = p.min(self.m[p]);
        // chords() is sorted by low endpoint, so the index is the number of
        // lower low-endpoints.
        (0..low).filter(|&i| i < self.m[i]).count()
    }

    /// Face cycles of the permutation `f(i) = m(i) + 1 (mod 2n)`.
    pub fn cycles(&self) -> CycleDecomposition {
        let size = self.points();
        let mut seen = vec![false; size];
        let mut cycles = Vec::new();
        for start in 0..size {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                cycle.push(at);
                at = (self.m[at] + 1) % size;
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// Number of boundary components of the associated fat graph.
    pub fn boundary_components(&self) -> usize {
        self.cycles().b()
    }

    /// Genus of the closed surface obtained by capping the fat graph.
    pub fn genus(&self) -> usize {
        let n = self.n();
        let b = self.boundary_components();
        debug_assert!(
            (n + 1).checked_sub(b).is_some() && (n + 1 - b).is_multiple_of(2),
            "cycle count bug: n={n} b={b}"
        );
        (n + 1 - b) / 2
    }

    /// A `k`-filling system for genus `g`: `2g+k` chords, `k+1` cycles, no
    /// parallel chords.
    pub fn is_k_filling(&self, g: usize, k: usize) -> bool {
        self.n() == 2 * g + k && self.boundary_components() == k + 1 && !self.parallel_pair_exists()
    }

    /// Whether chords `ci` and `cj` cross: exactly one endpoint of one lies
    /// strictly between the endpoints of the other in the cyclic order.
    pub fn crosses(&self, ci: usize, cj: usize) -> bool {
        let chords = self.chords();
        let (a, b) = chords[ci];
        let (c, d) = chords[cj];
        crossing_pairs((a, b), (c, d))
    }

    /// Connected components of the crossing graph, as sorted chord-index sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let chords = self.chords();
        let n = chords.len();
        let mut comp = (0..n).collect::<Vec<_>>();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let root = find(comp, comp[i]);
                comp[i] = root;
            }
            comp[i]
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if crossing_pairs(chords[i], chords[j]) {
                    let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                    if ri != rj {
                        comp[ri] = rj;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..n {
            let root = find(&mut comp, i);
            groups.entry(root).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two chords bounding a rectangular face with two outer edges.
    /// Equivalently, some face cycle makes exactly two chord traversals.
    pub fn parallel_pair_exists(&self) -> bool {
        self.cycles().cycles.iter().any(|c| c.len() == 2)
    }

    /// The diagram with every point relabelled `i -> i + r (mod 2n)`.
    pub fn rotate(&self, r: usize) -> Self {
        let size = self.points();
        let r = r % size;
        let mut m = vec![0usize; size];
        for i in 0..size {
            m[(i + r) % size] = (self.m[i] + r) % size;
        }
        ChordDiagram { m }
    }

    /// Lexicographically least matching over all rotations.
    pub fn canonical_form(&self) -> Self {
        (0..self.points())
            .map(|r| self.rotate(r))
            .min_by(|a, b| a.m.cmp(&b.m))
            .expect("diagram is nonempty")
    }

    /// Rotations `r` with `rotate(r) == target`, if any.
    pub fn rotations_to(&self, target: &ChordDiagram) -> Vec<usize> {
        (0..self.points())
            .filter(|&r| self.rotate(r).m == target.m)
            .collect()
    }

    /// Chord permutation induced by rotation `r` on a rotation-fixed diagram:
    /// `perm[i] = index of the image of chord i`.
    pub fn rotation_chord_permutation(&self, r: usize) -> Vec<usize> {
        let rotated = self.rotate(r);
        debug_assert_eq!(rotated.m, self.m, "rotation must fix the matching");
        let size = self.points();
        let chords = self.chords();
        chords
            .iter()
            .map(|&(a, _)| self.chord_at((a + r) % size))
            .collect()
    }

    pub fn symmetry(&self) -> SymmetryReport {
        let size = self.points();
        let fixing: Vec<usize> = (1..size).filter(|&r| self.rotate(r).m == self.m).collect();
        let order = fixing.len() + 1;
        if order == 1 {
            return SymmetryReport {
                order,
                perm_sign: 1,
            };
        }
        let minimal = fixing[0];
        debug_assert_eq!(minimal, size / order);
        let perm = self.rotation_chord_permutation(minimal);
        SymmetryReport {
            order,
            perm_sign: permutation_sign(&perm),
        }
    }

    /// Whether the orbit-level chain group identifies this diagram's two
    /// orientations (some fixing rotation induces an odd chord permutation).
    pub fn has_odd_symmetry(&self) -> bool {
        let s = self.symmetry();
        s.order > 1 && s.perm_sign == -1
    }

    /// Matching of a chord subset re-indexed along the ambient cyclic order.
    /// The result can violate the adjacency invariant, so it is returned raw.
    pub fn induced_matching(&self, chord_indices: &[usize]) -> Vec<usize> {
        let chords = self.chords();
        let mut points: Vec<usize> = chord_indices
            .iter()
            .flat_map(|&ci| [chords[ci].0, chords[ci].1])
            .collect();
        points.sort_unstable();
        let index_of = |p: usize| points.binary_search(&p).expect("endpoint of chosen chord");
        let mut m = vec![0usize; points.len()];
        for &p in &points {
            m[index_of(p)] = index_of(self.m[p]);
        }
        m
    }

    /// Every connected component, re-indexed on its own endpoints, is a
    /// rotation of the canonical zigzag on its chord count (at least 2).
    pub fn is_salient(&self) -> bool {
        self.components().iter().all(|comp| {
            if comp.len() < 2 {
                return false;
            }
            let induced = self.induced_matching(comp);
            let Ok(d) = ChordDiagram::from_involution(induced) else {
                return false;
            };
            d.canonical_form() == ChordDiagram::zigzag(comp.len()).canonical_form()
        })
    }

    /// Deletes one chord, renumbering the surviving points in order.
    /// `None` when the result violates a diagram invariant (which for a
    /// filling system means the sub-system cannot fill). Also returns the
    /// old-point -> new-point map restricted to survivors.
    pub fn delete_chord(&self, ci: usize) -> Option<(ChordDiagram, Vec<Option<usize>>)> {
        let (a, b) = self.chords()[ci];
        let size = self.points();
        if size <= 2 {
            return None;
        }
        let mut map = vec![None; size];
        let mut next = 0usize;
        for p in 0..size {
            if p != a && p != b {
                map[p] = Some(next);
                next += 1;
            }
        }
        let mut m = vec![0usize; size - 2];
        for p in 0..size {
            if let Some(new_p) = map[p] {
                m[new_p] = map[self.m[p]].expect("partner of a surviving point survives");
            }
        }
        ChordDiagram::from_involution(m).ok().map(|d| (d, map))
    }
}

/// Crossing test on endpoint pairs: exactly one of `c`, `d` lies strictly
/// between `a` and `b` going clockwise from `a`.
pub fn crossing_pairs((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let between = |x: usize| -> bool {
        // strictly inside the clockwise arc a -> b
        if a < b {
            a < x && x < b
        } else {
            x > a || x < b
        }
    };
    between(c) != between(d)
}

impl std::fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={};chords=", self.n())?;
        for (a, b) in self.chords() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, chords: &[(usize, usize)]) -> ChordDiagram {
        ChordDiagram::new(n, chords).unwrap()
    }

    #[test]
    fn rejects_invalid_matchings() {
        assert!(matches!(
            ChordDiagram::new(2, &[(0, 1), (2, 3)]),
            Err(DiagramError::AdjacentPairing(0))
        ));
        assert!(matches!(
            ChordDiagram::new(1, &[(0, 1)]),
            Err(DiagramError::AdjacentPairing(0))
        ));
        // wrap-around adjacency
        assert!(matches!(
            ChordDiagram::new(2, &[(0, 3), (1, 2)]),
            Err(DiagramError::AdjacentPairing(_))
        ));
        assert!(ChordDiagram::new(2, &[(0, 2), (1, 3)]).is_ok());
    }

    #[test]
    fn cycle_traversals_match_hand_walks() {
        let s2 = d(2, &[(0, 2), (1, 3)]);
        let dec = s2.cycles();
        assert_eq!(dec.b(), 1);
        assert_eq!(dec.cycles, vec![vec![0, 3, 2, 1]]);

        let rect = d(3, &[(0, 2), (1, 4), (3, 5)]);
        let dec = rect.cycles();
        assert_eq!(dec.b(), 2);
        assert_eq!(dec.cycles, vec![vec![0, 3], vec![1, 5, 4, 2]]);

        let diam = d(3, &[(0, 3), (1, 4), (2, 5)]);
        assert_eq!(diam.cycles().b(), 2);
    }

    #[test]
    fn genus_from_cycle_count() {
        assert_eq!(d(2, &[(0, 2), (1, 3)]).genus(), 1);
        assert_eq!(d(3, &[(0, 2), (1, 4), (3, 5)]).genus(), 1);
        assert_eq!(d(4, &[(0, 4), (1, 5), (2, 6), (3, 7)]).genus(), 2);
    }

    #[test]
    fn filling_predicates() {
        assert!(d(2, &[(0, 2), (1, 3)]).is_k_filling(1, 0));
        // the one-vertex torus triangulation is the genus-1 1-filling system
        assert!(d(3, &[(0, 3), (1, 4), (2, 5)]).is_k_filling(1, 1));
        assert!(!d(2, &[(0, 2), (1, 3)]).is_k_filling(1, 1));
    }

    #[test]
    fn parallel_is_a_rectangular_face() {
        // (0,2) and (3,5) bound a rectangle with the outer edges (2,3), (5,0)
        assert!(d(3, &[(0, 2), (1, 4), (3, 5)]).parallel_pair_exists());
        // three pairwise-crossing diameters have two triangular faces
        assert!(!d(3, &[(0, 3), (1, 4), (2, 5)]).parallel_pair_exists());
        assert!(!d(2, &[(0, 2), (1, 3)]).parallel_pair_exists());
        // nested adjacent chords on 8 points
        assert!(d(4, &[(0, 3), (4, 7), (1, 5), (2, 6)]).parallel_pair_exists());
    }

    #[test]
    fn crossing_and_components() {
        let s2 = d(2, &[(0, 2), (1, 3)]);
        assert!(s2.crosses(0, 1));
        // (0,2) and (3,6) sit on disjoint arcs of the circle
        let z = d(4, &[(0, 2), (1, 4), (3, 6), (5, 7)]);
        assert!(!z.crosses(0, 2));
        let two = d(4, &[(0, 2), (1, 3), (4, 6), (5, 7)]);
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn symmetry_orders_and_signs() {
        let s2 = d(2, &[(0, 2), (1, 3)]);
        assert_eq!(
            s2.symmetry(),
            SymmetryReport {
                order: 4,
                perm_sign: -1
            }
        );

        let diam8 = d(4, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        assert_eq!(
            diam8.symmetry(),
            SymmetryReport {
                order: 8,
                perm_sign: -1
            }
        );

        let s4 = ChordDiagram::zigzag(4);
        assert_eq!(
            s4.symmetry(),
            SymmetryReport {
                order: 1,
                perm_sign: 1
            }
        );

        let two = d(4, &[(0, 2), (1, 3), (4, 6), (5, 7)]);
        assert_eq!(two.symmetry().order, 2);
    }

    #[test]
    fn canonical_form_is_rotation_invariant_and_idempotent() {
        let s4 = ChordDiagram::zigzag(4);
        let canon = s4.canonical_form();
        for r in 0..8 {
            assert_eq!(s4.rotate(r).canonical_form(), canon);
        }
        assert_eq!(canon.canonical_form(), canon);
    }

    #[test]
    fn zigzags_are_connected_fillers() {
        for g in 1..=5 {
            let z = ChordDiagram::zigzag(2 * g);
            assert!(z.is_connected(), "S_{} connected", 2 * g);
            assert_eq!(z.boundary_components(), 1);
            assert_eq!(z.genus(), g);
            assert!(!z.parallel_pair_exists());
            assert!(z.is_salient());
        }
    }

    #[test]
    fn salience_examples() {
        assert!(d(2, &[(0, 2), (1, 3)]).is_salient());
        assert!(!d(4, &[(0, 4), (1, 5), (2, 6), (3, 7)]).is_salient());
        assert!(d(4, &[(0, 2), (1, 3), (4, 6), (5, 7)]).is_salient());
        // S_4 and its rotations
        let s4 = ChordDiagram::zigzag(4);
        for r in 0..8 {
            assert!(s4.rotate(r).is_salient());
        }
    }

    #[test]
    fn deletion_renumbers_and_validates() {
        let rho = d(3, &[(0, 3), (1, 4), (2, 5)]);
        for ci in 0..3 {
            let (sub, _) = rho.delete_chord(ci).unwrap();
            assert_eq!(sub.canonical_form(), d(2, &[(0, 2), (1, 3)]));
        }
        // deleting the middle chord of the rectangle diagram leaves an
        // adjacent pairing
        let rect = d(3, &[(0, 2), (1, 4), (3, 5)]);
        assert!(rect.delete_chord(1).is_none());
    }

    #[test]
    fn cycles_partition_points() {
        for diag in [
            d(2, &[(0, 2), (1, 3)]),
            d(3, &[(0, 3), (1, 4), (2, 5)]),
            d(4, &[(0, 4), (1, 5), (2, 6), (3, 7)]),
            ChordDiagram::zigzag(5),
        ] {
            let dec = diag.cycles();
            let total: usize = dec.cycles.iter().map(|c| c.len()).sum();
            assert_eq!(total, diag.points());
            let mut all: Vec<usize> = dec.cycles.concat();
            all.sort_unstable();
            assert_eq!(all, (0..diag.points()).collect::<Vec<_>>());
        }
    }
}
