//! Oriented filling systems and the boundary operator of the chain complex,
//! at the level of unlabelled diagrams (Mod-orbits).
//!
//! An orientation is recorded as a marker point plus a sign: the chords are
//! ordered by first encounter walking clockwise from the marker, and two
//! presentations of the same object differ by a rotation together with the
//! induced chord permutation, whose sign multiplies the coefficient. At the
//! orbit level a diagram whose rotational stabilizer induces an odd chord
//! permutation is identified with its own negative, so such keys carry
//! coefficients mod 2.

use crate::diagram::{permutation_sign, ChordDiagram};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("no boundary is defined in degree 0")]
    DegreeZero,
    #[error("input is not a {k}-filling system for genus {g}")]
    NotFilling { g: usize, k: usize },
    #[error("input is not a 0-filling system")]
    NotZeroFilling,
}

/// An unlabelled diagram with a marker point and a sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    pub diagram: ChordDiagram,
    pub marker: usize,
    pub sign: i64,
}

impl OrientedDiagram {
    pub fn new(diagram: ChordDiagram, marker: usize, sign: i64) -> Self {
        assert!(marker < diagram.points());
        assert!(sign == 1 || sign == -1);
        OrientedDiagram {
            diagram,
            marker,
            sign,
        }
    }

    pub fn plus(diagram: ChordDiagram) -> Self {
        Self::new(diagram, 0, 1)
    }

    /// First-encounter chord order induced by the marker.
    pub fn chord_order(&self) -> Vec<usize> {
        chord_order(&self.diagram, self.marker)
    }
}

/// Chord indices in order of first encounter walking clockwise from `marker`.
pub fn chord_order(d: &ChordDiagram, marker: usize) -> Vec<usize> {
    let size = d.points();
    let mut seen = vec![false; d.n()];
    let mut order = Vec::with_capacity(d.n());
    for step in 0..size {
        let ci = d.chord_at((marker + step) % size);
        if !seen[ci] {
            seen[ci] = true;
            order.push(ci);
        }
    }
    order
}

/// Sign of the permutation relating two orderings of the same index set.
pub fn order_parity(a: &[usize], b: &[usize]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    let max = a.iter().copied().max().map_or(0, |m| m + 1);
    let mut pos = vec![usize::MAX; max];
    for (i, &x) in a.iter().enumerate() {
        pos[x] = i;
    }
    let perm: Vec<usize> = b.iter().map(|&x| pos[x]).collect();
    permutation_sign(&perm)
}

/// Sign relating the order from `marker` to the reference order from point 0.
pub fn marker_parity(d: &ChordDiagram, marker: usize) -> i64 {
    if marker == 0 {
        return 1;
    }
    order_parity(&chord_order(d, 0), &chord_order(d, marker))
}

/// The coefficient of the canonical basis element represented by `o`:
/// canonical matching together with the multiplier, and whether the orbit
/// carries mod-2 coefficients.
pub fn normalize(o: &OrientedDiagram) -> (Vec<usize>, i64, bool) {
    let canon = o.diagram.canonical_form();
    let torsion = canon.has_odd_symmetry();
    let r = o
        .diagram
        .rotations_to(&canon)
        .into_iter()
        .next()
        .expect("canonical form is a rotation");
    let marker = (o.marker + r) % o.diagram.points();
    let mult = o.sign * marker_parity(&canon, marker);
    let key = canon.involution().to_vec();
    (key, if torsion { 1 } else { mult }, torsion)
}

/// Formal sum over canonical unlabelled oriented diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrbitSum {
    terms: BTreeMap<Vec<usize>, i64>,
}

impl OrbitSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, o: &OrientedDiagram, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let (key, mult, torsion) = normalize(o);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff * mult;
        if torsion {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }
}

/// One deletion face: the sub-diagram, the old->new point map, and the base
/// orientation data shared by the unlabelled and labelled boundary.
pub(crate) struct DeletionFace {
    pub sub: ChordDiagram,
    pub point_map: Vec<Option<usize>>,
    pub coeff: i64,
}

/// Faces of an oriented `k`-filling system that remain `(k-1)`-filling,
/// each with its signed coefficient relative to the marker-0 orientation of
/// the sub-diagram.
pub(crate) fn deletion_faces(
    x: &OrientedDiagram,
    g: usize,
    k: usize,
) -> Result<Vec<DeletionFace>, ChainError> {
    if k == 0 {
        return Err(ChainError::DegreeZero);
    }
    if !x.diagram.is_k_filling(g, k) {
        return Err(ChainError::NotFilling { g, k });
    }
    let order = x.chord_order();
    let mut out = Vec::new();
    for (pos, &ci) in order.iter().enumerate() {
        let Some((sub, point_map)) = x.diagram.delete_chord(ci) else {
            continue;
        };
        if !sub.is_k_filling(g, k - 1) {
            continue;
        }
        let chords = x.diagram.chords();
        let new_index = |old_ci: usize| -> usize {
            let (a, _) = chords[old_ci];
            sub.chord_at(point_map[a].expect("surviving endpoint"))
        };
        let induced: Vec<usize> = order
            .iter()
            .filter(|&&c| c != ci)
            .map(|&c| new_index(c))
            .collect();
        let reference = chord_order(&sub, 0);
        let swap = order_parity(&reference, &induced);
        let alt = if pos % 2 == 0 { 1 } else { -1 };
        out.push(DeletionFace {
            sub,
            point_map,
            coeff: x.sign * alt * swap,
        });
    }
    Ok(out)
}

/// Signed face list of `x` before orbit merging, each face presented with
/// marker 0 and positive sign.
pub fn boundary_terms(
    x: &OrientedDiagram,
    g: usize,
    k: usize,
) -> Result<Vec<(i64, OrientedDiagram)>, ChainError> {
    Ok(deletion_faces(x, g, k)?
        .into_iter()
        .map(|f| (f.coeff, OrientedDiagram::plus(f.sub)))
        .collect())
}

/// The boundary in the orbit-level chain group.
pub fn boundary(x: &OrientedDiagram, g: usize, k: usize) -> Result<OrbitSum, ChainError> {
    let mut sum = OrbitSum::new();
    for (c, t) in boundary_terms(x, g, k)? {
        sum.add(&t, c);
    }
    Ok(sum)
}

/// Checks `boundary(boundary(x)) = 0` for every sample (2-filling systems).
pub fn boundary_squared_zero(samples: &[OrientedDiagram], g: usize) -> Result<bool, ChainError> {
    for x in samples {
        let mut total = OrbitSum::new();
        for (c, t) in boundary_terms(x, g, 2)? {
            for (c2, t2) in boundary_terms(&t, g, 1)? {
                total.add(&t2, c * c2);
            }
        }
        if !total.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stabilizer data of a 0-filling system: `(order, sign)` of the rotational
/// symmetry when nontrivial, giving the relation `phi = sign * h * phi`.
pub fn stabilizer_relation(d: &ChordDiagram) -> Result<Option<(usize, i64)>, ChainError> {
    let g = d.genus();
    if g == 0 || !d.is_k_filling(g, 0) {
        return Err(ChainError::NotZeroFilling);
    }
    let sym = d.symmetry();
    Ok(if sym.order > 1 {
        Some((sym.order, sym.perm_sign))
    } else {
        None
    })
}
