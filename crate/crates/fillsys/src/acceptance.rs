//! The self-test harness: ten named checks combining exact small-genus data
//! with randomized suites, deterministic for a given seed.

use crate::diagram::ChordDiagram;
use crate::enumerate::OrbitCatalog;
use crate::labelled::{boundary_labelled, insert_chord, LabelledDiagram, OrientedLabelled};
use crate::mapping_class::{Genus2Classes, MappingClass};
use crate::oriented::{stabilizer_relation, OrientedDiagram};
use crate::presentation::{
    genus2_connected_orbits, genus2_generators, verify_genus1, verify_genus2,
};
use crate::reduction::{check_reduction_terms, h1_matrix, modular_symbol_oracle, reduce};
use crate::rng::SplitMix64;
use crate::words::SurfacePresentation;
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub format: u32,
    pub seed: u64,
    pub criteria: Vec<CriterionOutcome>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

fn outcome(
    id: usize,
    name: &str,
    limit_seconds: Option<f64>,
    body: impl FnOnce() -> (bool, String),
) -> CriterionOutcome {
    let start = Instant::now();
    let (mut passed, mut detail) = body();
    let seconds = start.elapsed().as_secs_f64();
    if let Some(limit) = limit_seconds {
        if seconds >= limit {
            passed = false;
            detail = format!("{detail}; exceeded the {limit} s budget");
        }
    }
    CriterionOutcome {
        id,
        name: name.to_string(),
        passed,
        detail,
        seconds,
    }
}

/// 1. Orbit counts in genus 1 and 2.
pub fn criterion_orbit_counts() -> CriterionOutcome {
    outcome(1, "orbit counts", Some(1.0), || {
        let g1k0 = OrbitCatalog::build(1, 0, false).unwrap();
        let g1k1 = OrbitCatalog::build(1, 1, false).unwrap();
        let g2k0 = OrbitCatalog::build(2, 0, false).unwrap();
        let pass = g1k0.total_orbits == 1
            && g1k1.total_orbits == 1
            && g2k0.total_orbits == 4
            && g2k0.connected_orbits == 3;
        (
            pass,
            format!(
                "genus 1: {} orbit(s) of 0-filling and {} of 1-filling systems; \
                 genus 2: {} orbits of 0-filling systems, {} connected",
                g1k0.total_orbits, g1k1.total_orbits, g2k0.total_orbits, g2k0.connected_orbits
            ),
        )
    })
}

/// 2. The 18 connected 1-filling orbits in genus 2.
pub fn criterion_connected_one_filling_count() -> CriterionOutcome {
    outcome(2, "genus-2 connected 1-filling orbits", Some(5.0), || {
        let cat = OrbitCatalog::build(2, 1, true).unwrap();
        (
            cat.representatives.len() == 18,
            format!(
                "{} connected orbits (expected 18)",
                cat.representatives.len()
            ),
        )
    })
}

/// 3. Rotation stabilizer data of the 0-filling generators.
pub fn criterion_symmetry_data() -> CriterionOutcome {
    outcome(3, "stabilizer orders and signs", None, || {
        let square = ChordDiagram::new(2, &[(0, 2), (1, 3)]).unwrap();
        let diam = ChordDiagram::new(4, &[(0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let zig = ChordDiagram::zigzag(4);
        let Ok((_, middle, _)) = genus2_connected_orbits() else {
            return (false, "orbit classification failed".into());
        };
        let ok = stabilizer_relation(&square) == Ok(Some((4, -1)))
            && stabilizer_relation(&diam) == Ok(Some((8, -1)))
            && stabilizer_relation(&zig) == Ok(None)
            && stabilizer_relation(&middle) == Ok(None);
        (
            ok,
            "genus-1 generator (4, -1); genus-2 third generator (8, -1); \
             genus-2 first and second generators free"
                .into(),
        )
    })
}

/// 4. The genus-1 presentation with its exact matrices.
pub fn criterion_genus1_presentation() -> CriterionOutcome {
    outcome(4, "genus-1 presentation", None, || {
        let report = verify_genus1();
        let detail = report
            .checks
            .iter()
            .map(|c| format!("{} [{}]", c.name, if c.passed { "ok" } else { "FAIL" }))
            .collect::<Vec<_>>()
            .join("; ");
        (report.passed(), detail)
    })
}

/// 5. The genus-2 identities, stabilizers and relation elimination.
pub fn criterion_genus2_presentation() -> CriterionOutcome {
    outcome(
        5,
        "genus-2 presentation",
        Some(30.0),
        || match verify_genus2() {
            Ok(report) => {
                let detail = report
                    .checks
                    .iter()
                    .map(|c| format!("{} [{}]", c.name, if c.passed { "ok" } else { "FAIL" }))
                    .collect::<Vec<_>>()
                    .join("; ");
                (report.passed(), detail)
            }
            Err(e) => (false, e.to_string()),
        },
    )
}

fn random_unimodular(rng: &mut SplitMix64) -> [[i64; 2]; 2] {
    // random word in the two standard generators of SL(2, Z)
    let mut m = [[1i64, 0], [0, 1]];
    let mul = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    };
    let len = 1 + rng.below(8);
    for _ in 0..len {
        let t = [[1, rng.sign()], [0, 1]];
        let s = [[0, -1], [1, 0]];
        m = if rng.below(2) == 0 {
            mul(m, t)
        } else {
            mul(m, s)
        };
    }
    m
}

/// 6. Genus-1 reduction soundness against the slope-boundary oracle.
pub fn criterion_genus1_reduction(seed: u64) -> CriterionOutcome {
    outcome(6, "genus-1 reduction vs slope oracle", None, || {
        let pres = SurfacePresentation::new(1);
        let phi0 = LabelledDiagram::generator(1);
        let mut rng = SplitMix64::new(seed ^ 0x6);
        let mut checked = 0usize;
        for _ in 0..120 {
            let m = random_unimodular(&mut rng);
            let marker = rng.below(4);
            let sign = rng.sign();
            let x = OrientedLabelled::new(phi0.apply(&MappingClass::from_matrix(m)), marker, sign);
            let result = match reduce(&x, 1, &pres) {
                Ok(r) => r,
                Err(e) => return (false, format!("reduce failed: {e}")),
            };
            if result.rounds > 2 {
                return (false, format!("{} rounds > 2", result.rounds));
            }
            match modular_symbol_oracle(&x, &result) {
                Ok(true) => checked += 1,
                Ok(false) => return (false, "oracle disagreed".into()),
                Err(e) => return (false, format!("oracle rejected input: {e}")),
            }
        }
        (
            checked >= 100,
            format!("{checked} random instances agreed with the oracle"),
        )
    })
}

/// 7. Genus-2 reduction of generator translates: output shape and homology
///    checks for every composition of length at most 3.
pub fn criterion_genus2_reduction() -> CriterionOutcome {
    outcome(7, "genus-2 reduction of translates", None, || {
        let pres = SurfacePresentation::new(2);
        let cls = Genus2Classes::new();
        let phi0 = OrientedLabelled::plus(LabelledDiagram::generator(2));
        let mut atoms: Vec<MappingClass> = vec![cls.r.clone()];
        for i in 0..5 {
            atoms.push(cls.t(i));
            atoms.push(cls.s(i));
        }
        let mut layer: Vec<MappingClass> = vec![MappingClass::identity(2)];
        let mut total = 0usize;
        for _len in 0..=3 {
            for a in &layer {
                total += 1;
                let x = phi0.apply(a);
                let result = match reduce(&x, 2, &pres) {
                    Ok(r) => r,
                    Err(e) => return (false, format!("reduce failed: {e}")),
                };
                if result.rounds > 4 {
                    return (false, format!("{} rounds > 4", result.rounds));
                }
                if !check_reduction_terms(&result, 2, &pres) {
                    return (
                        false,
                        "output term not a salient connected labelled zigzag".into(),
                    );
                }
                for (_, t) in result.terms.terms() {
                    if let Err(e) = h1_matrix(&t.labelled, 2) {
                        return (false, format!("homology check failed: {e}"));
                    }
                }
            }
            if _len == 3 {
                break;
            }
            let mut next = Vec::with_capacity(layer.len() * atoms.len());
            for a in &layer {
                for b in &atoms {
                    next.push(a.compose(b));
                }
            }
            layer = next;
        }
        (
            total == 1 + 11 + 121 + 1331,
            format!("{total} translates reduced with unimodular, form-preserving matrices"),
        )
    })
}

/// 8. Disconnected systems die: labelled instances of the disconnected orbit
///    reduce to the empty sum, and separating insertions have one-term
///    boundaries.
pub fn criterion_disconnected_trivial() -> CriterionOutcome {
    outcome(8, "disconnected systems are trivial", None, || {
        let pres = SurfacePresentation::new(2);
        let cat = OrbitCatalog::build(2, 0, false).unwrap();
        let disconnected: Vec<&ChordDiagram> = cat
            .representatives
            .iter()
            .filter(|d| !d.is_connected())
            .collect();
        if disconnected.len() != 1 {
            return (
                false,
                format!("{} disconnected orbits (expected 1)", disconnected.len()),
            );
        }
        let target = disconnected[0].canonical_form();

        // harvest labelled instances of that orbit from boundaries of
        // one-chord extensions of the verified generators
        let Ok(gens) = genus2_generators() else {
            return (false, "generator reconstruction failed".into());
        };
        let mut instances: Vec<OrientedLabelled> = Vec::new();
        for base in [&gens.phi0, &gens.phi1] {
            let size = base.diagram().points();
            for gap1 in 0..size {
                for gap2 in gap1 + 1..size {
                    let Some((ext, _)) = insert_chord(&base.labelled, gap1, gap2, &pres) else {
                        continue;
                    };
                    if !ext.diagram.is_k_filling(2, 1) {
                        continue;
                    }
                    for (_, t) in
                        boundary_labelled(&OrientedLabelled::plus(ext), 2, 1, &pres).unwrap()
                    {
                        if !t.diagram().is_connected() {
                            if t.diagram().canonical_form() != target {
                                return (false, "disconnected face outside the known orbit".into());
                            }
                            instances.push(t);
                        }
                    }
                }
            }
        }
        if instances.is_empty() {
            return (false, "no labelled disconnected instances found".into());
        }
        for x in &instances {
            match reduce(x, 2, &pres) {
                Ok(r) if r.terms.is_zero() => {}
                Ok(_) => return (false, "disconnected system reduced to a nonzero sum".into()),
                Err(e) => return (false, format!("reduce failed: {e}")),
            }
        }

        // separating insertions: the new chord crosses nothing and has
        // components on both sides; the boundary then has exactly one term
        let mut separating = 0usize;
        for x in instances.iter().take(4) {
            let size = x.diagram().points();
            for gap1 in 0..size {
                for gap2 in gap1 + 1..size {
                    let Some((ext, new_ci)) = insert_chord(&x.labelled, gap1, gap2, &pres) else {
                        continue;
                    };
                    if !ext.diagram.is_k_filling(2, 1) {
                        continue;
                    }
                    let crossings = (0..ext.diagram.n())
                        .filter(|&j| j != new_ci && ext.diagram.crosses(new_ci, j))
                        .count();
                    if crossings != 0 {
                        continue;
                    }
                    let (low, high) = ext.diagram.chords()[new_ci];
                    let inside = high - low - 1;
                    if inside == 0 || inside == ext.diagram.points() - 2 {
                        continue;
                    }
                    separating += 1;
                    let faces =
                        boundary_labelled(&OrientedLabelled::plus(ext), 2, 1, &pres).unwrap();
                    if faces.len() != 1 {
                        return (
                            false,
                            format!("separating insertion has {} boundary terms", faces.len()),
                        );
                    }
                    let (c, t) = &faces[0];
                    if c.abs() != 1 || t.equiv_coeff(x, &pres).is_none() {
                        return (false, "one-term boundary is not +-(the input)".into());
                    }
                }
            }
        }
        if separating == 0 {
            return (false, "no separating insertions found".into());
        }
        (
            true,
            format!(
                "{} labelled instances reduce to zero; {} separating insertions have one-term boundaries",
                instances.len(),
                separating
            ),
        )
    })
}

/// 9. The boundary squares to zero on seeded random 2-filling systems.
pub fn criterion_boundary_squared(seed: u64) -> CriterionOutcome {
    outcome(9, "boundary squares to zero", None, || {
        let mut rng = SplitMix64::new(seed ^ 0x9);
        let mut samples: Vec<OrientedDiagram> = Vec::new();
        let mut attempts = 0usize;
        while samples.len() < 50 && attempts < 200_000 {
            attempts += 1;
            let mut m = vec![usize::MAX; 12];
            for p in 0..12 {
                if m[p] != usize::MAX {
                    continue;
                }
                let free: Vec<usize> = (p + 1..12).filter(|&q| m[q] == usize::MAX).collect();
                if free.is_empty() {
                    break;
                }
                let q = free[rng.below(free.len())];
                m[p] = q;
                m[q] = p;
            }
            if m.contains(&usize::MAX) {
                continue;
            }
            let Ok(d) = ChordDiagram::from_involution(m) else {
                continue;
            };
            if d.is_k_filling(2, 2) {
                let marker = rng.below(12);
                let sign = rng.sign();
                samples.push(OrientedDiagram::new(d, marker, sign));
            }
        }
        if samples.len() < 50 {
            return (false, format!("only {} samples generated", samples.len()));
        }
        match crate::oriented::boundary_squared_zero(&samples, 2) {
            Ok(true) => (true, "d(d(x)) = 0 on 50 random 2-filling systems".into()),
            Ok(false) => (false, "d o d /= 0 on some sample".into()),
            Err(e) => (false, format!("boundary failed: {e}")),
        }
    })
}

/// 10. The diagonal-complex sphere family.
pub fn criterion_theta_spheres() -> CriterionOutcome {
    outcome(10, "diagonal-complex spheres", Some(60.0), || {
        let mut details = Vec::new();
        let mut pass = true;
        for (g, expect) in [(1usize, 0usize), (2, 2), (3, 4)] {
            match crate::homology::theta_sphere_check(g) {
                Ok(report) => {
                    let torsion_free = report.homology.iter().all(|(_, _, t)| t.is_empty());
                    if report.sphere_dimension != Some(expect) || !torsion_free {
                        pass = false;
                    }
                    details.push(format!(
                        "genus {g}: sphere dimension {:?} (expected {expect})",
                        report.sphere_dimension
                    ));
                }
                Err(e) => {
                    pass = false;
                    details.push(format!("genus {g}: {e}"));
                }
            }
        }
        (pass, details.join("; "))
    })
}

pub fn run_all(seed: u64) -> SelftestReport {
    let criteria = vec![
        criterion_orbit_counts(),
        criterion_connected_one_filling_count(),
        criterion_symmetry_data(),
        criterion_genus1_presentation(),
        criterion_genus2_presentation(),
        criterion_genus1_reduction(seed),
        criterion_genus2_reduction(),
        criterion_disconnected_trivial(),
        criterion_boundary_squared(seed),
        criterion_theta_spheres(),
    ];
    SelftestReport {
        format: 1,
        seed,
        criteria,
    }
}
