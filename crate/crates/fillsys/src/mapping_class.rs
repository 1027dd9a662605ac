//! Mapping classes of the once-marked surface, acting as automorphisms of
//! the closed-surface group through their generator images.
//!
//! Equality, identity and the automorphism certificate (relator maps to a
//! conjugate of the relator or its inverse) all go through the word problem,
//! so inner bookkeeping differences between free words never leak into
//! comparisons. For genus 2 the generating classes are the order-5 class `R`
//! and the Dehn twists `T0`, `S0`, with `T_i = R^i T0 R^-i` and
//! `S_i = R^i S0 R^-i`; genus 1 classes are 2x2 integer matrices.

use crate::words::{GroupWord, SurfacePresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClass {
    pub genus: usize,
    images: Vec<GroupWord>,
}

impl MappingClass {
    pub fn identity(genus: usize) -> Self {
        MappingClass {
            genus,
            images: (1..=2 * genus).map(GroupWord::generator).collect(),
        }
    }

    pub fn from_images(genus: usize, images: Vec<GroupWord>) -> Self {
        assert_eq!(images.len(), 2 * genus);
        MappingClass { genus, images }
    }

    pub fn image(&self, generator: usize) -> &GroupWord {
        &self.images[generator - 1]
    }

    /// Substitutes generator images into `w` and freely reduces.
    pub fn apply(&self, w: &GroupWord) -> GroupWord {
        let mut out = GroupWord::identity();
        for a in w.atoms() {
            let g = a.unsigned_abs() as usize;
            assert!(g <= 2 * self.genus, "generator {g} out of range");
            let img = &self.images[g - 1];
            out = out.concat(&if a > 0 { img.clone() } else { img.inverse() });
        }
        out
    }

    /// `self` after `other`: `(self ∘ other)(w) = self(other(w))`.
    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        assert_eq!(self.genus, other.genus);
        MappingClass {
            genus: self.genus,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> MappingClass {
        let mut out = MappingClass::identity(self.genus);
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    pub fn is_identity(&self, pres: &SurfacePresentation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| pres.words_equal(w, &GroupWord::generator(i + 1)))
    }

    pub fn eq_mod(&self, other: &MappingClass, pres: &SurfacePresentation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(a, b)| pres.words_equal(a, b))
    }

    /// Certificate that the generator images define an automorphism induced
    /// by a homeomorphism.
    pub fn is_automorphism(&self, pres: &SurfacePresentation) -> bool {
        pres.conjugate_of_relator(&self.apply(&pres.relator))
    }

    /// Action on first homology: column `j` is the exponent vector of the
    /// image of generator `j+1`.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = 2 * self.genus;
        let mut mat = vec![vec![0i64; n]; n];
        for (j, w) in self.images.iter().enumerate() {
            for (i, e) in w.exponent_vector(n).into_iter().enumerate() {
                mat[i][j] = e;
            }
        }
        mat
    }

    /// Genus-1 class from an integer matrix (columns are generator images).
    pub fn from_matrix(m: [[i64; 2]; 2]) -> Self {
        let col = |j: usize| GroupWord::from_runs(&[(1, m[0][j]), (2, m[1][j])]);
        MappingClass {
            genus: 1,
            images: vec![col(0), col(1)],
        }
    }
}

/// The genus-2 generating set with precomputed inverses.
pub struct Genus2Classes {
    pub r: MappingClass,
    pub r_inv: MappingClass,
    pub t0: MappingClass,
    pub t0_inv: MappingClass,
    pub s0: MappingClass,
    pub s0_inv: MappingClass,
}

impl Genus2Classes {
    pub fn new() -> Self {
        let w = |s: &str| GroupWord::parse(s, 2).unwrap();
        let r =
            MappingClass::from_images(2, vec![w("y"), w("z"), w("w"), w("z^-1 x^-1 w^-1 y^-1")]);
        let r_inv =
            MappingClass::from_images(2, vec![w("z^-1 x^-1 w^-1 y^-1"), w("x"), w("y"), w("z")]);
        let t0 = MappingClass::from_images(2, vec![w("x"), w("x^-1 y"), w("z"), w("w")]);
        let t0_inv = MappingClass::from_images(2, vec![w("x"), w("x y"), w("z"), w("w")]);
        let s0 = MappingClass::from_images(2, vec![w("y w x"), w("y"), w("z"), w("w")]);
        let s0_inv = MappingClass::from_images(2, vec![w("w^-1 y^-1 x"), w("y"), w("z"), w("w")]);
        Genus2Classes {
            r,
            r_inv,
            t0,
            t0_inv,
            s0,
            s0_inv,
        }
    }

    fn conjugate_by_r_power(&self, i: usize, core: &MappingClass) -> MappingClass {
        self.r.pow(i).compose(core).compose(&self.r_inv.pow(i))
    }

    pub fn t(&self, i: usize) -> MappingClass {
        self.conjugate_by_r_power(i, &self.t0)
    }

    pub fn t_inv(&self, i: usize) -> MappingClass {
        self.conjugate_by_r_power(i, &self.t0_inv)
    }

    pub fn s(&self, i: usize) -> MappingClass {
        self.conjugate_by_r_power(i, &self.s0)
    }

    pub fn s_inv(&self, i: usize) -> MappingClass {
        self.conjugate_by_r_power(i, &self.s0_inv)
    }
}

impl Default for Genus2Classes {
    fn default() -> Self {
        Self::new()
    }
}

/// A formal integer combination of mapping classes (a group-ring element),
/// merged up to word-problem equality.
#[derive(Debug, Clone)]
pub struct MappingClassSum {
    terms: Vec<(i64, MappingClass)>,
}

impl MappingClassSum {
    pub fn zero() -> Self {
        MappingClassSum { terms: Vec::new() }
    }

    pub fn single(coeff: i64, mc: MappingClass) -> Self {
        let mut s = Self::zero();
        s.add(coeff, mc, None);
        s
    }

    pub fn add(&mut self, coeff: i64, mc: MappingClass, pres: Option<&SurfacePresentation>) {
        if coeff == 0 {
            return;
        }
        if let Some(p) = pres {
            for (c, existing) in self.terms.iter_mut() {
                if existing.eq_mod(&mc, p) {
                    *c += coeff;
                    if *c == 0 {
                        self.terms.retain(|(c, _)| *c != 0);
                    }
                    return;
                }
            }
        }
        self.terms.push((coeff, mc));
    }

    pub fn add_sum(&mut self, other: &MappingClassSum, scale: i64, pres: &SurfacePresentation) {
        for (c, mc) in &other.terms {
            self.add(c * scale, mc.clone(), Some(pres));
        }
    }

    /// Group-ring product: every pairwise composition.
    pub fn mul(&self, other: &MappingClassSum, pres: &SurfacePresentation) -> MappingClassSum {
        let mut out = MappingClassSum::zero();
        for (ca, a) in &self.terms {
            for (cb, b) in &other.terms {
                out.add(ca * cb, a.compose(b), Some(pres));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i64, MappingClass)] {
        &self.terms
    }

    /// Equality up to an overall sign (relations are defined up to a unit).
    pub fn equals_up_to_sign(&self, other: &MappingClassSum, pres: &SurfacePresentation) -> bool {
        for sign in [1i64, -1] {
            let mut diff = MappingClassSum::zero();
            diff.add_sum(self, 1, pres);
            diff.add_sum(other, -sign, pres);
            if diff.is_zero() {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_images_as_stated() {
        let g2 = Genus2Classes::new();
        let x = GroupWord::generator(1);
        let y = GroupWord::generator(2);
        assert_eq!(g2.r.apply(&x), y);
        assert_eq!(g2.t0.apply(&y), GroupWord::parse("x^-1 y", 2).unwrap());
        assert_eq!(g2.t0.apply(&x), x);
        assert_eq!(g2.s0.apply(&x), GroupWord::parse("y w x", 2).unwrap());
    }

    #[test]
    fn inverses_and_order_five() {
        let pres = SurfacePresentation::new(2);
        let g2 = Genus2Classes::new();
        assert!(g2.r.compose(&g2.r_inv).is_identity(&pres));
        assert!(g2.t0.compose(&g2.t0_inv).is_identity(&pres));
        assert!(g2.s0.compose(&g2.s0_inv).is_identity(&pres));
        for i in 1..5 {
            assert!(!g2.r.pow(i).is_identity(&pres), "R^{i} is not the identity");
        }
        assert!(g2.r.pow(5).is_identity(&pres));
    }

    #[test]
    fn generating_classes_are_automorphisms() {
        let pres = SurfacePresentation::new(2);
        let g2 = Genus2Classes::new();
        for mc in [&g2.r, &g2.r_inv, &g2.t0, &g2.t0_inv, &g2.s0, &g2.s0_inv] {
            assert!(mc.is_automorphism(&pres));
        }
        for i in 0..5 {
            assert!(g2.t(i).compose(&g2.t_inv(i)).is_identity(&pres));
            assert!(g2.s(i).compose(&g2.s_inv(i)).is_identity(&pres));
        }
    }

    #[test]
    fn apply_distributes_over_composition() {
        let pres = SurfacePresentation::new(2);
        let g2 = Genus2Classes::new();
        let w = GroupWord::parse("x z^-1 w y^-1 x", 2).unwrap();
        for (a, b) in [(&g2.r, &g2.t0), (&g2.s0, &g2.r_inv), (&g2.t0_inv, &g2.s0)] {
            let lhs = a.compose(b).apply(&w);
            let rhs = a.apply(&b.apply(&w));
            assert!(pres.words_equal(&lhs, &rhs));
        }
    }

    #[test]
    fn genus_one_matrices() {
        let m = MappingClass::from_matrix([[0, -1], [1, 1]]);
        assert_eq!(m.abelianization(), vec![vec![0, -1], vec![1, 1]]);
        let pres = SurfacePresentation::new(1);
        let id = MappingClass::from_matrix([[1, 0], [0, 1]]);
        assert!(id.is_identity(&pres));
        // order-6 element of SL(2,Z)
        assert!(m.pow(6).is_identity(&pres));
        assert!(!m.pow(3).is_identity(&pres));
    }

    #[test]
    fn sums_merge_by_word_problem() {
        let pres = SurfacePresentation::new(2);
        let g2 = Genus2Classes::new();
        let t1 = g2.t(1);
        let mut s = MappingClassSum::zero();
        s.add(1, t1.clone(), Some(&pres));
        // same class, different free words
        s.add(2, g2.r.compose(&g2.t0).compose(&g2.r_inv), Some(&pres));
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms()[0].0, 3);
        s.add(-3, t1, Some(&pres));
        assert!(s.is_zero());
    }
}
