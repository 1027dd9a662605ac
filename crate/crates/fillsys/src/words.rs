//! Words in the fundamental group of the closed genus-g surface, with the
//! word problem solved by abelianization (genus 1) or Dehn's algorithm
//! (genus >= 2).
//!
//! The presentation is read off the canonical zigzag: labelling the chords of
//! `S_2g` by generators and walking its single face cycle yields the relator.
//! For genus 2 this reproduces `x z w^-1 z^-1 y^-1 x^-1 y w`. Every generator
//! appears in the relator exactly twice with opposite exponents, so pieces
//! between rotations of the relator have length 1 and Dehn's algorithm
//! (replace any subword longer than half of a cyclic rotation of the relator
//! or its inverse by the shorter complement) decides triviality.

use crate::diagram::ChordDiagram;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("generator index {0} out of range for genus {1}")]
    GeneratorOutOfRange(usize, usize),
    #[error("empty generator name")]
    EmptyName,
    #[error("cannot parse word token `{0}`")]
    BadToken(String),
}

/// A freely reduced word, stored run-length as (generator, exponent) with
/// 1-based generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    runs: Vec<(usize, i64)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord { runs: Vec::new() }
    }

    pub fn generator(g: usize) -> Self {
        GroupWord { runs: vec![(g, 1)] }
    }

    pub fn from_runs(runs: &[(usize, i64)]) -> Self {
        let mut w = GroupWord::identity();
        for &(g, e) in runs {
            w.push_run(g, e);
        }
        w
    }

    /// Signed atoms: `+g` / `-g` per letter.
    pub fn atoms(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for &(g, e) in &self.runs {
            let sign = if e > 0 { 1 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                out.push(sign * g as i64);
            }
        }
        out
    }

    pub fn from_atoms(atoms: &[i64]) -> Self {
        let mut w = GroupWord::identity();
        for &a in atoms {
            debug_assert!(a != 0);
            w.push_run(a.unsigned_abs() as usize, a.signum());
        }
        w
    }

    fn push_run(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push((g, e));
    }

    pub fn is_identity_word(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.runs
            .iter()
            .map(|&(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.runs {
            w.push_run(g, e);
        }
        w
    }

    pub fn max_generator(&self) -> usize {
        self.runs.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Exponent-sum vector over generators `1..=gens`.
    pub fn exponent_vector(&self, gens: usize) -> Vec<i64> {
        let mut v = vec![0i64; gens];
        for &(g, e) in &self.runs {
            v[g - 1] += e;
        }
        v
    }

    /// Conjugacy representative: strip matching first/last letters.
    pub fn cyclic_reduce(&self) -> Self {
        let mut atoms = self.atoms();
        while atoms.len() >= 2 && atoms[0] == -atoms[atoms.len() - 1] {
            atoms.remove(0);
            atoms.pop();
        }
        GroupWord::from_atoms(&atoms)
    }

    fn alias(genus: usize, name: &str) -> Option<usize> {
        let table: &[&str] = match genus {
            1 => &["x", "y"],
            2 => &["x", "y", "z", "w"],
            _ => &[],
        };
        table.iter().position(|&t| t == name).map(|i| i + 1)
    }

    /// Parses `x1 x2^-1 x1` style words; for genus 1 and 2 the letter
    /// aliases (`x,y` / `x,y,z,w`) are also accepted.
    pub fn parse(input: &str, genus: usize) -> Result<Self, WordError> {
        let mut w = GroupWord::identity();
        for token in input.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| WordError::BadToken(token.to_string()))?;
                    (n, exp)
                }
                None => (token, 1),
            };
            if name.is_empty() {
                return Err(WordError::EmptyName);
            }
            let g = if let Some(rest) = name.strip_prefix('x') {
                if rest.is_empty() {
                    Self::alias(genus, name)
                        .ok_or_else(|| WordError::BadToken(token.to_string()))?
                } else if let Ok(idx) = rest.parse::<usize>() {
                    idx
                } else {
                    return Err(WordError::BadToken(token.to_string()));
                }
            } else if let Some(g) = Self::alias(genus, name) {
                g
            } else {
                return Err(WordError::BadToken(token.to_string()));
            };
            if g == 0 || g > 2 * genus {
                return Err(WordError::GeneratorOutOfRange(g, genus));
            }
            w.push_run(g, exp);
        }
        Ok(w)
    }

    /// Renders with genus aliases when available, else `x<i>` names.
    pub fn display(&self, genus: usize) -> String {
        if self.runs.is_empty() {
            return "1".to_string();
        }
        let name = |g: usize| -> String {
            let table: &[&str] = match genus {
                1 => &["x", "y"],
                2 => &["x", "y", "z", "w"],
                _ => &[],
            };
            table
                .get(g - 1)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("x{g}"))
        };
        self.runs
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    name(g)
                } else {
                    format!("{}^{}", name(g), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Genus plus the relator read off the canonical zigzag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePresentation {
    pub genus: usize,
    pub relator: GroupWord,
}

impl SurfacePresentation {
    pub fn new(genus: usize) -> Self {
        assert!(genus >= 1);
        let z = ChordDiagram::zigzag(2 * genus);
        let dec = z.cycles();
        assert_eq!(dec.b(), 1, "zigzag has a single face");
        let mut relator = GroupWord::identity();
        for &entry in &dec.cycles[0] {
            let c = z.chord_at(entry);
            let exp = if entry < z.partner(entry) { 1 } else { -1 };
            relator = relator.concat(&GroupWord::from_runs(&[(c + 1, exp)]));
        }
        assert_eq!(relator.len(), 4 * genus);
        SurfacePresentation { genus, relator }
    }

    pub fn generators(&self) -> usize {
        2 * self.genus
    }

    /// All cyclic rotations of the relator and of its inverse, as atoms.
    fn relator_rotations(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for base in [self.relator.atoms(), self.relator.inverse().atoms()] {
            let len = base.len();
            for s in 0..len {
                let mut rot = Vec::with_capacity(len);
                rot.extend_from_slice(&base[s..]);
                rot.extend_from_slice(&base[..s]);
                out.push(rot);
            }
        }
        out
    }

    /// One pass of Dehn replacement: the leftmost subword strictly longer
    /// than half of some rotation of `r^{+-1}` is replaced by the inverse of
    /// the complementary part. Returns `None` when no replacement applies.
    fn dehn_step(&self, atoms: &[i64], rotations: &[Vec<i64>]) -> Option<Vec<i64>> {
        let half = 2 * self.genus; // relator length is 4g
        for start in 0..atoms.len() {
            let mut best: Option<(usize, &Vec<i64>)> = None;
            for rot in rotations {
                let mut l = 0;
                while start + l < atoms.len() && l < rot.len() && atoms[start + l] == rot[l] {
                    l += 1;
                }
                if l > half && best.map(|(bl, _)| l > bl).unwrap_or(true) {
                    best = Some((l, rot));
                }
            }
            if let Some((l, rot)) = best {
                let mut next = Vec::with_capacity(atoms.len() - l + (rot.len() - l));
                next.extend_from_slice(&atoms[..start]);
                // rot[..l] = matched; rot = matched * tail, and rot == 1 in
                // the group, so matched == tail^-1.
                for &a in rot[l..].iter().rev() {
                    next.push(-a);
                }
                next.extend_from_slice(&atoms[start + l..]);
                return Some(next);
            }
        }
        None
    }

    /// Dehn-reduced form (freely reduced, no subword longer than half of a
    /// relator rotation). Empty iff the word is trivial, for genus >= 2.
    pub fn dehn_reduce(&self, w: &GroupWord) -> GroupWord {
        let rotations = self.relator_rotations();
        let mut current = w.clone();
        loop {
            match self.dehn_step(&current.atoms(), &rotations) {
                Some(next) => current = GroupWord::from_atoms(&next),
                None => return current,
            }
        }
    }

    /// Word problem: genus 1 through Z^2, genus >= 2 through Dehn's algorithm.
    pub fn is_trivial(&self, w: &GroupWord) -> bool {
        if w.max_generator() > self.generators() {
            return false;
        }
        if self.genus == 1 {
            w.exponent_vector(2).iter().all(|&e| e == 0)
        } else {
            self.dehn_reduce(w).is_empty()
        }
    }

    pub fn words_equal(&self, a: &GroupWord, b: &GroupWord) -> bool {
        self.is_trivial(&a.concat(&b.inverse()))
    }

    /// Whether `w` is freely conjugate to a cyclic rotation of the relator
    /// or of its inverse (the automorphism certificate).
    pub fn conjugate_of_relator(&self, w: &GroupWord) -> bool {
        let core = w.cyclic_reduce().atoms();
        self.relator_rotations().contains(&core)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_matches_surface_presentation() {
        // genus 2: x z w^-1 z^-1 y^-1 x^-1 y w
        let p = SurfacePresentation::new(2);
        let expected = GroupWord::parse("x z w^-1 z^-1 y^-1 x^-1 y w", 2).unwrap();
        assert_eq!(p.relator, expected);

        // genus 1: a cyclic rotation of the commutator's inverse
        let p1 = SurfacePresentation::new(1);
        let comm = GroupWord::parse("x y x^-1 y^-1", 1).unwrap();
        assert!(p1.conjugate_of_relator(&comm));
    }

    #[test]
    fn free_reduction_is_eager() {
        let w = GroupWord::parse("x1 x2 x2^-1 x1^-1 x3", 2).unwrap();
        assert_eq!(w, GroupWord::generator(3));
        let u = GroupWord::parse("x y", 2).unwrap();
        assert!(u.concat(&u.inverse()).is_identity_word());
    }

    #[test]
    fn word_problem_genus_two() {
        let p = SurfacePresentation::new(2);
        assert!(p.is_trivial(&p.relator));
        let comm = GroupWord::parse("x y x^-1 y^-1", 2).unwrap();
        assert!(!p.is_trivial(&comm));
        // conjugate of the relator is trivial
        let x = GroupWord::generator(1);
        let conj = x.concat(&p.relator).concat(&x.inverse());
        assert!(p.is_trivial(&conj));
        assert!(!p.is_trivial(&GroupWord::generator(4)));
        // relator squared
        assert!(p.is_trivial(&p.relator.concat(&p.relator)));
    }

    #[test]
    fn word_problem_genus_one() {
        let p = SurfacePresentation::new(1);
        let comm = GroupWord::parse("x y x^-1 y^-1", 1).unwrap();
        assert!(p.is_trivial(&comm));
        assert!(!p.is_trivial(&GroupWord::generator(1)));
    }

    #[test]
    fn relator_conjugacy_certificate() {
        let p = SurfacePresentation::new(2);
        assert!(p.conjugate_of_relator(&p.relator));
        assert!(p.conjugate_of_relator(&p.relator.inverse()));
        let x = GroupWord::generator(1);
        let conj = x.concat(&p.relator).concat(&x.inverse());
        assert!(p.conjugate_of_relator(&conj));
        assert!(!p.conjugate_of_relator(&GroupWord::generator(2)));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w = GroupWord::parse("x1 x4^-2 x2", 2).unwrap();
        assert_eq!(w.display(2), "x w^-2 y");
        let again = GroupWord::parse(&w.display(2), 2).unwrap();
        assert_eq!(w, again);
        assert!(GroupWord::parse("q", 2).is_err());
    }

    #[test]
    fn cyclic_reduction() {
        let w = GroupWord::parse("x y x^-1", 2).unwrap();
        assert_eq!(w.cyclic_reduce(), GroupWord::generator(2));
    }
}
