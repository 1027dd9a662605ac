//! Labelled chord diagrams: each chord carries a surface-group word on one
//! side, the other side reading the inverse. The stored word is the reading
//! from the chord's lower-numbered endpoint; rotations renormalize.
//!
//! A labelling is admissible when every face cycle multiplies to the
//! identity, which is exactly the condition for the labels to close up into
//! loops bounding the complementary disks. Mapping classes act by rewriting
//! labels, leaving the underlying diagram alone.

use crate::diagram::ChordDiagram;
use crate::mapping_class::MappingClass;
use crate::oriented::{deletion_faces, marker_parity, ChainError, OrientedDiagram};
use crate::words::{GroupWord, SurfacePresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledDiagram {
    pub diagram: ChordDiagram,
    labels: Vec<GroupWord>,
}

impl LabelledDiagram {
    pub fn new(diagram: ChordDiagram, labels: Vec<GroupWord>) -> Self {
        assert_eq!(labels.len(), diagram.n());
        LabelledDiagram { diagram, labels }
    }

    /// The canonical generator: the zigzag `S_2g` labelled by the generators
    /// in chord order. Its single face cycle reads off the relator.
    pub fn generator(genus: usize) -> Self {
        let diagram = ChordDiagram::zigzag(2 * genus);
        let labels = (1..=2 * genus).map(GroupWord::generator).collect();
        LabelledDiagram { diagram, labels }
    }

    pub fn label(&self, ci: usize) -> &GroupWord {
        &self.labels[ci]
    }

    pub fn labels(&self) -> &[GroupWord] {
        &self.labels
    }

    /// The word read when traversing chord `ci` starting at `from`.
    pub fn label_from(&self, ci: usize, from: usize) -> GroupWord {
        let (low, high) = self.diagram.chords()[ci];
        debug_assert!(from == low || from == high);
        if from == low {
            self.labels[ci].clone()
        } else {
            self.labels[ci].inverse()
        }
    }

    /// Ordered label product along each face cycle.
    pub fn cycle_products(&self) -> Vec<GroupWord> {
        self.diagram
            .cycles()
            .cycles
            .iter()
            .map(|cycle| {
                let mut product = GroupWord::identity();
                for &entry in cycle {
                    let ci = self.diagram.chord_at(entry);
                    product = product.concat(&self.label_from(ci, entry));
                }
                product
            })
            .collect()
    }

    /// Every face cycle's label product is trivial.
    pub fn validate(&self, pres: &SurfacePresentation) -> bool {
        self.cycle_products().iter().all(|p| pres.is_trivial(p))
    }

    pub fn rotate(&self, r: usize) -> Self {
        let size = self.diagram.points();
        let rotated = self.diagram.rotate(r);
        let mut labels = vec![GroupWord::identity(); self.diagram.n()];
        for (ci, (low, _)) in self.diagram.chords().into_iter().enumerate() {
            let new_low_image = (low + r) % size;
            let new_ci = rotated.chord_at(new_low_image);
            let (new_low, _) = rotated.chords()[new_ci];
            labels[new_ci] = if new_low == new_low_image {
                self.labels[ci].clone()
            } else {
                self.labels[ci].inverse()
            };
        }
        LabelledDiagram {
            diagram: rotated,
            labels,
        }
    }

    /// Mapping class action: rewrite every label, keep the diagram.
    pub fn apply(&self, mc: &MappingClass) -> Self {
        LabelledDiagram {
            diagram: self.diagram.clone(),
            labels: self.labels.iter().map(|w| mc.apply(w)).collect(),
        }
    }
}

/// A labelled diagram with an orientation (marker plus sign).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedLabelled {
    pub labelled: LabelledDiagram,
    pub marker: usize,
    pub sign: i64,
}

impl OrientedLabelled {
    pub fn new(labelled: LabelledDiagram, marker: usize, sign: i64) -> Self {
        assert!(marker < labelled.diagram.points());
        assert!(sign == 1 || sign == -1);
        OrientedLabelled {
            labelled,
            marker,
            sign,
        }
    }

    pub fn plus(labelled: LabelledDiagram) -> Self {
        Self::new(labelled, 0, 1)
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.labelled.diagram
    }

    pub fn apply(&self, mc: &MappingClass) -> Self {
        OrientedLabelled {
            labelled: self.labelled.apply(mc),
            marker: self.marker,
            sign: self.sign,
        }
    }

    pub fn negate(&self) -> Self {
        OrientedLabelled {
            labelled: self.labelled.clone(),
            marker: self.marker,
            sign: -self.sign,
        }
    }

    /// When `self` and `other` present (up to rotation, label equality in the
    /// group, and orientation bookkeeping) the same basis element up to sign,
    /// returns `rho` with `self = rho * other`.
    pub fn equiv_coeff(&self, other: &OrientedLabelled, pres: &SurfacePresentation) -> Option<i64> {
        let size = self.diagram().points();
        if size != other.diagram().points() {
            return None;
        }
        for r in 0..size {
            let rotated = self.labelled.rotate(r);
            if rotated.diagram != *other.diagram() {
                continue;
            }
            let labels_match = (0..rotated.diagram.n())
                .all(|ci| pres.words_equal(rotated.label(ci), other.labelled.label(ci)));
            if !labels_match {
                continue;
            }
            let d = other.diagram();
            let rho = self.sign
                * other.sign
                * marker_parity(d, (self.marker + r) % size)
                * marker_parity(d, other.marker);
            return Some(rho);
        }
        None
    }
}

/// Integer combination of oriented labelled diagrams, merged by equivalence.
#[derive(Debug, Clone, Default)]
pub struct LabelledSum {
    terms: Vec<(i64, OrientedLabelled)>,
}

impl LabelledSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, coeff: i64, term: OrientedLabelled, pres: &SurfacePresentation) {
        if coeff == 0 {
            return;
        }
        for (c, existing) in self.terms.iter_mut() {
            if let Some(rho) = term.equiv_coeff(existing, pres) {
                *c += coeff * rho;
                if *c == 0 {
                    self.terms.retain(|(c, _)| *c != 0);
                }
                return;
            }
        }
        self.terms.push((coeff, term));
    }

    pub fn add_sum(&mut self, other: &LabelledSum, scale: i64, pres: &SurfacePresentation) {
        for (c, t) in &other.terms {
            self.add(c * scale, t.clone(), pres);
        }
    }

    /// Net coefficient of a target element.
    pub fn coeff_of(&self, target: &OrientedLabelled, pres: &SurfacePresentation) -> i64 {
        self.terms
            .iter()
            .filter_map(|(c, t)| t.equiv_coeff(target, pres).map(|rho| c * rho))
            .sum()
    }

    pub fn terms(&self) -> &[(i64, OrientedLabelled)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Signed faces of a labelled oriented `k`-filling system, labels carried
/// through the deletion. Faces that stop filling are dropped.
pub fn boundary_labelled(
    x: &OrientedLabelled,
    g: usize,
    k: usize,
    pres: &SurfacePresentation,
) -> Result<Vec<(i64, OrientedLabelled)>, ChainError> {
    let unl = OrientedDiagram::new(x.diagram().clone(), x.marker, x.sign);
    let chords = x.diagram().chords();
    let faces = deletion_faces(&unl, g, k)?;
    let mut out = Vec::with_capacity(faces.len());
    for face in faces {
        let mut labels = vec![GroupWord::identity(); face.sub.n()];
        for (ci, &(low, _)) in chords.iter().enumerate() {
            if let Some(new_low) = face.point_map[low] {
                labels[face.sub.chord_at(new_low)] = x.labelled.label(ci).clone();
            }
        }
        let labelled = LabelledDiagram::new(face.sub, labels);
        debug_assert!(
            labelled.validate(pres),
            "faces of an admissible labelling stay admissible"
        );
        out.push((face.coeff, OrientedLabelled::plus(labelled)));
    }
    Ok(out)
}

/// Merged labelled boundary.
pub fn boundary_labelled_sum(
    x: &OrientedLabelled,
    g: usize,
    k: usize,
    pres: &SurfacePresentation,
) -> Result<LabelledSum, ChainError> {
    let mut sum = LabelledSum::new();
    for (c, t) in boundary_labelled(x, g, k, pres)? {
        sum.add(c, t, pres);
    }
    Ok(sum)
}

/// Inserts a chord with one endpoint in each of two distinct gaps (gap `i`
/// sits between points `i` and `i+1`), solving the new label from the face
/// condition. Returns the extended labelled diagram and the new chord index.
pub fn insert_chord(
    l: &LabelledDiagram,
    gap1: usize,
    gap2: usize,
    pres: &SurfacePresentation,
) -> Option<(LabelledDiagram, usize)> {
    let size = l.diagram.points();
    if gap1 == gap2 || gap1 >= size || gap2 >= size {
        return None;
    }
    let (g1, g2) = (gap1.min(gap2), gap1.max(gap2));
    let point_a = g1 + 1;
    let point_b = g2 + 2;
    let map = |p: usize| p + usize::from(p > g1) + usize::from(p > g2);

    let mut m = vec![usize::MAX; size + 2];
    for p in 0..size {
        m[map(p)] = map(l.diagram.partner(p));
    }
    m[point_a] = point_b;
    m[point_b] = point_a;
    let diagram = ChordDiagram::from_involution(m).ok()?;

    let new_ci = diagram.chord_at(point_a);
    let mut labels = vec![GroupWord::identity(); diagram.n()];
    for (ci, &(low, _)) in l.diagram.chords().iter().enumerate() {
        labels[diagram.chord_at(map(low))] = l.label(ci).clone();
    }
    let mut candidate = LabelledDiagram::new(diagram.clone(), labels);

    // Solve the new label from the face through point_a: with the unknown X
    // read from point_a, the face product is X * Q, so X = Q^-1.
    let cycles = diagram.cycles();
    let cycle = cycles
        .cycles
        .iter()
        .find(|c| c.contains(&point_a))
        .expect("every point lies on a face");
    let start = cycle
        .iter()
        .position(|&e| e == point_a)
        .expect("found above");
    let mut q = GroupWord::identity();
    for i in 1..cycle.len() {
        let entry = cycle[(start + i) % cycle.len()];
        let ci = diagram.chord_at(entry);
        q = q.concat(&candidate.label_from(ci, entry));
    }
    let solved = q.inverse();
    // stored reading is from the lower endpoint, which is point_a
    debug_assert_eq!(diagram.chords()[new_ci].0, point_a);
    candidate.labels[new_ci] = solved.clone();
    if candidate.validate(pres) {
        return Some((candidate, new_ci));
    }
    candidate.labels[new_ci] = solved.inverse();
    if candidate.validate(pres) {
        return Some((candidate, new_ci));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping_class::Genus2Classes;

    fn g1_pres() -> SurfacePresentation {
        SurfacePresentation::new(1)
    }

    fn g2_pres() -> SurfacePresentation {
        SurfacePresentation::new(2)
    }

    #[test]
    fn generator_labelling_is_admissible() {
        for g in 1..=3 {
            let phi = LabelledDiagram::generator(g);
            assert!(phi.validate(&SurfacePresentation::new(g)));
        }
    }

    #[test]
    fn generator_cycle_reads_the_relator() {
        let phi = LabelledDiagram::generator(2);
        let products = phi.cycle_products();
        assert_eq!(products.len(), 1);
        assert_eq!(products[0], g2_pres().relator);
    }

    #[test]
    fn cycle_condition_is_label_homology_blind_in_genus_one() {
        // labels (1,0) and (2,1) still satisfy the face condition
        let d = ChordDiagram::new(2, &[(0, 2), (1, 3)]).unwrap();
        let l = LabelledDiagram::new(
            d,
            vec![
                GroupWord::generator(1),
                GroupWord::from_runs(&[(1, 2), (2, 1)]),
            ],
        );
        assert!(l.validate(&g1_pres()));
    }

    #[test]
    fn rotation_presents_the_same_element() {
        let pres = g2_pres();
        let phi = OrientedLabelled::plus(LabelledDiagram::generator(2));
        for r in 0..8 {
            let rotated = OrientedLabelled::new(phi.labelled.rotate(r), r, 1);
            assert_eq!(rotated.equiv_coeff(&phi, &pres), Some(1), "rotation {r}");
        }
    }

    #[test]
    fn mapping_class_action_preserves_admissibility() {
        let pres = g2_pres();
        let g2 = Genus2Classes::new();
        let phi = LabelledDiagram::generator(2);
        for mc in [&g2.r, &g2.t0, &g2.s0, &g2.r_inv] {
            assert!(phi.apply(mc).validate(&pres));
        }
    }

    #[test]
    fn genus_one_stabilizer_convention() {
        // the quarter-rotation class h = [[0,1],[-1,0]] satisfies
        // h . phi0 = -phi0
        let pres = g1_pres();
        let phi = OrientedLabelled::plus(LabelledDiagram::generator(1));
        let h = MappingClass::from_matrix([[0, 1], [-1, 0]]);
        let image = phi.apply(&h);
        assert_eq!(image.equiv_coeff(&phi, &pres), Some(-1));
    }

    #[test]
    fn insertion_builds_the_torus_triangulation() {
        let pres = g1_pres();
        let phi = LabelledDiagram::generator(1);
        let (rho, new_ci) = insert_chord(&phi, 1, 3, &pres).unwrap();
        assert_eq!(
            rho.diagram,
            ChordDiagram::new(3, &[(0, 3), (1, 4), (2, 5)]).unwrap()
        );
        assert!(rho.diagram.is_k_filling(1, 1));
        assert!(rho.validate(&pres));
        // the solved label abelianizes to (-1, 1)
        assert_eq!(rho.label(new_ci).exponent_vector(2), vec![-1, 1]);
    }

    #[test]
    fn torus_triangulation_boundary_reproduces_the_three_translates() {
        let pres = g1_pres();
        let phi = OrientedLabelled::plus(LabelledDiagram::generator(1));
        let (rho, _) = insert_chord(&phi.labelled, 1, 3, &pres).unwrap();
        let terms = boundary_labelled(&OrientedLabelled::plus(rho), 1, 1, &pres).unwrap();
        assert_eq!(terms.len(), 3);

        let expected = [
            (1, MappingClass::from_matrix([[0, -1], [1, 1]])),
            (-1, MappingClass::from_matrix([[1, -1], [0, 1]])),
            (1, MappingClass::from_matrix([[1, 0], [0, 1]])),
        ];
        for ((coeff, term), (want_sign, mc)) in terms.iter().zip(&expected) {
            let translate = phi.apply(mc);
            let rho_coeff = term.equiv_coeff(&translate, &pres).unwrap();
            assert_eq!(coeff * rho_coeff, *want_sign);
        }
    }

    #[test]
    fn labelled_sum_merges_translates() {
        let pres = g1_pres();
        let phi = OrientedLabelled::plus(LabelledDiagram::generator(1));
        let mut sum = LabelledSum::new();
        sum.add(1, phi.clone(), &pres);
        sum.add(1, phi.negate(), &pres);
        assert!(sum.is_zero());
        sum.add(2, phi.clone(), &pres);
        let rotated = OrientedLabelled::new(phi.labelled.rotate(1), 1, 1);
        sum.add(1, rotated, &pres);
        assert_eq!(sum.len(), 1);
        assert_eq!(sum.coeff_of(&phi, &pres), 3);
    }
}
