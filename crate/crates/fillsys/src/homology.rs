//! Integer simplicial homology through Smith normal form, plus the boundary
//! of the dual associahedron as a built-in complex: vertices are the
//! diagonals of a convex polygon, simplices the sets of pairwise noncrossing
//! diagonals, facets the triangulations.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("facet is empty")]
    EmptyFacet,
    #[error("polygon must have at least 4 vertices, got {0}")]
    PolygonTooSmall(usize),
    #[error("cannot parse facet line `{0}`")]
    BadFacetLine(String),
}

/// Facet-listed simplicial complex; faces are implied downward-closed.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Keeps only inclusion-maximal faces of the input.
    pub fn from_facets(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let mut cleaned: Vec<BTreeSet<usize>> = Vec::new();
        for f in &facets {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            for &v in f {
                if v >= vertex_count {
                    return Err(ComplexError::VertexOutOfRange(v, vertex_count));
                }
            }
            cleaned.push(f.iter().copied().collect());
        }
        let maximal: Vec<Vec<usize>> = cleaned
            .iter()
            .enumerate()
            .filter(|(i, f)| {
                !cleaned
                    .iter()
                    .enumerate()
                    .any(|(j, g)| j != *i && f.is_subset(g) && (f.len() < g.len() || j < *i))
            })
            .map(|(_, f)| f.iter().copied().collect())
            .collect();
        Ok(SimplicialComplex {
            vertex_count,
            facets: maximal,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn dimension(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All faces of dimension `dim` (vertex lists sorted), in sorted order.
    pub fn faces(&self, dim: usize) -> Vec<Vec<usize>> {
        let k = dim + 1;
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            if f.len() < k {
                continue;
            }
            subsets_of_size(f, k, &mut out);
        }
        out.into_iter().collect()
    }

    /// Signed incidence matrix from `dim`-faces to `(dim-1)`-faces with the
    /// alternating convention on sorted vertex lists. For `dim = 0` this is
    /// the augmentation row.
    pub fn boundary_matrix(&self, dim: usize) -> Vec<Vec<i64>> {
        let cols = self.faces(dim);
        if dim == 0 {
            return vec![vec![1i64; cols.len()]];
        }
        let rows = self.faces(dim - 1);
        let index: BTreeMap<&[usize], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, face) in cols.iter().enumerate() {
            for (omit, _) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(omit);
                let i = index[sub.as_slice()];
                m[i][j] = if omit % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }
}

fn subsets_of_size(f: &[usize], k: usize, out: &mut BTreeSet<Vec<usize>>) {
    let n = f.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.insert(idx.iter().map(|&i| f[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Diagonal of the Smith normal form with the divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<i128>,
    pub rank: usize,
}

/// Exact integer Smith normal form by row/column reduction with
/// minimal-absolute-value pivoting.
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> SnfResult {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut diagonal: Vec<i128> = Vec::new();
    let mut top = 0usize;
    while top < rows.min(cols) {
        // minimal nonzero pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if a[i][j] != 0
                    && pivot
                        .map(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(top, pi);
        for row in a.iter_mut() {
            row.swap(top, pj);
        }
        loop {
            let mut clean = true;
            for i in top + 1..rows {
                if a[i][top] != 0 {
                    let q = a[i][top].div_euclid(a[top][top]);
                    for j in top..cols {
                        let v = a[top][j].checked_mul(q).expect("snf overflow");
                        a[i][j] = a[i][j].checked_sub(v).expect("snf overflow");
                    }
                    if a[i][top] != 0 {
                        a.swap(top, i);
                        clean = false;
                    }
                }
            }
            for j in top + 1..cols {
                if a[top][j] != 0 {
                    let q = a[top][j].div_euclid(a[top][top]);
                    for row in a.iter_mut().skip(top) {
                        let v = row[top].checked_mul(q).expect("snf overflow");
                        row[j] = row[j].checked_sub(v).expect("snf overflow");
                    }
                    if a[top][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(top, j);
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        diagonal.push(a[top][top].abs());
        top += 1;
    }
    // enforce the divisibility chain d1 | d2 | ...
    let mut changed = true;
    while changed {
        changed = false;
        for i in 1..diagonal.len() {
            let (a0, b0) = (diagonal[i - 1], diagonal[i]);
            if a0 != 0 && b0 % a0 != 0 {
                let g = gcd_i128(a0, b0);
                let l = a0 / g * b0;
                diagonal[i - 1] = g;
                diagonal[i] = l;
                changed = true;
            }
        }
        diagonal.sort_by_key(|&d| if d == 0 { i128::MAX } else { d });
    }
    let rank = diagonal.iter().filter(|&&d| d != 0).count();
    SnfResult { diagonal, rank }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduced homology in degree `dim`: Betti number and torsion coefficients.
pub fn homology(complex: &SimplicialComplex, dim: usize) -> (usize, Vec<i128>) {
    let faces = complex.faces(dim).len();
    if faces == 0 {
        return (0, Vec::new());
    }
    let rank_d = smith_normal_form(&complex.boundary_matrix(dim)).rank;
    let snf_up = smith_normal_form(&complex.boundary_matrix(dim + 1));
    let betti = faces - rank_d - snf_up.rank;
    let torsion: Vec<i128> = snf_up.diagonal.iter().copied().filter(|&d| d > 1).collect();
    (betti, torsion)
}

impl SimplicialComplex {
    /// Parses the facet-per-line format: space-separated vertex indices,
    /// blank lines and `#` comments ignored.
    pub fn parse_facets(text: &str) -> Result<Self, ComplexError> {
        let mut facets = Vec::new();
        let mut max_vertex = 0usize;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut facet = Vec::new();
            for tok in line.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| ComplexError::BadFacetLine(line.to_string()))?;
                max_vertex = max_vertex.max(v);
                facet.push(v);
            }
            facets.push(facet);
        }
        SimplicialComplex::from_facets(max_vertex + 1, facets)
    }

    /// One facet per line, space-separated vertex indices.
    pub fn to_facet_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Diagonals of a convex `n`-gon, as vertex pairs that are not edges.
pub fn polygon_diagonals(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if b - a >= 2 && !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether two diagonals of the polygon cross in its interior.
fn diagonals_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let strictly_between = |x: usize| a < x && x < b;
    (strictly_between(c) != strictly_between(d)) && a != c && a != d && b != c && b != d
}

/// The simplicial complex of pairwise noncrossing diagonal sets of a convex
/// `n`-gon. Its facets are the triangulations, each with `n - 3` diagonals.
pub fn associahedron_dual_boundary(n: usize) -> Result<SimplicialComplex, ComplexError> {
    if n < 4 {
        return Err(ComplexError::PolygonTooSmall(n));
    }
    let diagonals = polygon_diagonals(n);
    let index: BTreeMap<(usize, usize), usize> =
        diagonals.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let boundary_edge = |a: usize, b: usize| (b + n - a) % n == 1 || (a + n - b) % n == 1;

    // every triangulation of poly has a unique triangle on the closing edge
    // (poly[0], poly[last]); recursing on its apex enumerates each one once
    fn triangulations(
        poly: &[usize],
        index: &BTreeMap<(usize, usize), usize>,
        boundary_edge: &dyn Fn(usize, usize) -> bool,
    ) -> Vec<Vec<usize>> {
        if poly.len() < 3 {
            return vec![Vec::new()];
        }
        let (a, b) = (poly[0], poly[poly.len() - 1]);
        let mut out = Vec::new();
        for k in 1..poly.len() - 1 {
            let c = poly[k];
            let mut added = Vec::new();
            for &(u, v) in &[(a.min(c), a.max(c)), (c.min(b), c.max(b))] {
                if !boundary_edge(u, v) {
                    added.push(index[&(u, v)]);
                }
            }
            for left in triangulations(&poly[0..=k], index, boundary_edge) {
                for right in triangulations(&poly[k..], index, boundary_edge) {
                    let mut f = added.clone();
                    f.extend(left.iter().copied());
                    f.extend(right.iter().copied());
                    f.sort_unstable();
                    out.push(f);
                }
            }
        }
        out
    }

    let poly: Vec<usize> = (0..n).collect();
    let facets = triangulations(&poly, &index, &boundary_edge);
    debug_assert!(facets.iter().all(|f| f.len() == n - 3));
    debug_assert!(facets.iter().all(|f| {
        f.iter().enumerate().all(|(i, &d1)| {
            f.iter()
                .skip(i + 1)
                .all(|&d2| !diagonals_cross(diagonals[d1], diagonals[d2]))
        })
    }));
    SimplicialComplex::from_facets(diagonals.len(), facets)
}

/// Report of the sphere check for the diagonal complex of a `(2g+2)`-gon.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub genus: usize,
    pub polygon: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub facet_size: usize,
    pub homology: Vec<(usize, usize, Vec<i128>)>,
    pub sphere_dimension: Option<usize>,
}

/// Builds the diagonal complex of the `(2g+2)`-gon, computes all reduced
/// homology groups, and reports the unique degree carrying a `Z`.
pub fn theta_sphere_check(g: usize) -> Result<ThetaReport, ComplexError> {
    let n = 2 * g + 2;
    let complex = associahedron_dual_boundary(n)?;
    let facet_size = n - 3;
    let top = complex.dimension().max(0) as usize;
    let mut rows = Vec::new();
    let mut sphere_dimension = None;
    let mut unique = true;
    for dim in 0..=top {
        let (betti, torsion) = homology(&complex, dim);
        if betti > 0 {
            if sphere_dimension.is_some() || betti > 1 {
                unique = false;
            } else {
                sphere_dimension = Some(dim);
            }
        }
        if !torsion.is_empty() {
            unique = false;
        }
        rows.push((dim, betti, torsion));
    }
    Ok(ThetaReport {
        genus: g,
        polygon: n,
        vertex_count: complex.faces(0).len(),
        facet_count: complex.facets().len(),
        facet_size,
        homology: rows,
        sphere_dimension: if unique { sphere_dimension } else { None },
    })
}
