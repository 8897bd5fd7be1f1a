//! Degree-one rational cohomology of graphs and the zero-divisor cup-length
//! of `H*(G × G)`.
//!
//! For a graph only `H^0` and `H^1` are non-zero, so by Künneth the ring
//! `H*(G × G)` in degrees `≤ 2` is `Q ⊕ (H^1⊗1 ⊕ 1⊗H^1) ⊕ (H^1⊗H^1)` and
//! everything above degree two vanishes. [`KunnethElement`] stores exactly
//! those components.

use num_traits::{One, Zero};

use crate::graph::{spanning_forest, EdgeId, GraphError, MultiGraph, Rational};

/// Basis of `H^1(G; Q)` indexed by the non-forest edges of the canonical
/// spanning forest: the class dual to the fundamental cycle of each such edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleBasis {
    edges: Vec<EdgeId>,
}

impl CocycleBasis {
    pub fn dimension(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Coordinate vector of the `i`-th basis class.
    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dimension()];
        v[i] = Rational::one();
        v
    }
}

pub fn h1_basis(g: &MultiGraph) -> Result<CocycleBasis, GraphError> {
    g.ensure_connected()?;
    Ok(CocycleBasis { edges: spanning_forest(g).non_forest_edges() })
}

/// An element of `H^{≤2}(G × G; Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethElement {
    pub unit: Rational,
    /// Coefficients on `a_i ⊗ 1`.
    pub left: Vec<Rational>,
    /// Coefficients on `1 ⊗ a_i`.
    pub right: Vec<Rational>,
    /// `matrix[i][j]` is the coefficient on `a_i ⊗ a_j`.
    pub matrix: Vec<Vec<Rational>>,
}

impl KunnethElement {
    pub fn zero(dim: usize) -> Self {
        KunnethElement {
            unit: Rational::zero(),
            left: vec![Rational::zero(); dim],
            right: vec![Rational::zero(); dim],
            matrix: vec![vec![Rational::zero(); dim]; dim],
        }
    }

    pub fn dimension(&self) -> usize {
        self.left.len()
    }

    /// `a ⊗ 1 - 1 ⊗ a` for a class `a` given in coordinates.
    pub fn zero_divisor(a: &[Rational]) -> Self {
        let mut z = Self::zero(a.len());
        z.left = a.to_vec();
        z.right = a.iter().map(|x| -x).collect();
        z
    }

    pub fn degree_one(left: Vec<Rational>, right: Vec<Rational>) -> Self {
        let mut z = Self::zero(left.len());
        z.left = left;
        z.right = right;
        z
    }

    pub fn degree_two(matrix: Vec<Vec<Rational>>) -> Self {
        let mut z = Self::zero(matrix.len());
        z.matrix = matrix;
        z
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
            && self.left.iter().all(Zero::is_zero)
            && self.right.iter().all(Zero::is_zero)
            && self.matrix.iter().flatten().all(Zero::is_zero)
    }

    pub fn matrix_is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    /// Graded-commutative cup product, truncated above degree two (where the
    /// ring of `G × G` vanishes).
    pub fn cup(&self, other: &Self) -> Self {
        let n = self.dimension();
        assert_eq!(n, other.dimension(), "elements of different rings");
        let (c, d) = (self.unit, other.unit);
        let mut out = Self::zero(n);
        out.unit = c * d;
        for i in 0..n {
            out.left[i] = c * other.left[i] + d * self.left[i];
            out.right[i] = c * other.right[i] + d * self.right[i];
        }
        for i in 0..n {
            for j in 0..n {
                // (a_i⊗1)(1⊗a_j) = a_i⊗a_j;  (1⊗a_j)(a_i⊗1) = -(a_i⊗a_j)
                out.matrix[i][j] = c * other.matrix[i][j]
                    + d * self.matrix[i][j]
                    + self.left[i] * other.right[j]
                    - other.left[i] * self.right[j];
            }
        }
        out
    }

    /// Image under the diagonal `Δ*: H*(G × G) → H*(G)`, as `(unit, H^1 part)`.
    /// The degree-two part maps to `H^2(G) = 0`.
    pub fn restrict_to_diagonal(&self) -> (Rational, Vec<Rational>) {
        (self.unit, self.left.iter().zip(&self.right).map(|(a, b)| a + b).collect())
    }
}

/// Basis of the nullspace of a rational matrix given by rows.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f];
            }
            v
        })
        .collect()
}

/// Homogeneous spanning set of `Ker Δ*` in degrees one and two.
pub fn diagonal_kernel(dim: usize) -> Vec<KunnethElement> {
    // degree one: (left, right) ↦ left + right
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row = vec![Rational::zero(); 2 * dim];
            row[i] = Rational::one();
            row[dim + i] = Rational::one();
            row
        })
        .collect();
    let mut out: Vec<KunnethElement> = nullspace(&rows, 2 * dim)
        .into_iter()
        .map(|v| KunnethElement::degree_one(v[..dim].to_vec(), v[dim..].to_vec()))
        .collect();
    // degree two: all of H^1 ⊗ H^1, since H^2(G) = 0
    for i in 0..dim {
        for j in 0..dim {
            let mut m = vec![vec![Rational::zero(); dim]; dim];
            m[i][j] = Rational::one();
            out.push(KunnethElement::degree_two(m));
        }
    }
    out
}

/// Length of the longest non-zero product of elements of `Ker Δ*`.
///
/// Products of three or more positive-degree classes land in degree `≥ 3`,
/// which is zero for `G × G`, so the answer is at most two.
pub fn zero_divisor_cuplength(g: &MultiGraph) -> Result<usize, GraphError> {
    let basis = h1_basis(g)?;
    let kernel = diagonal_kernel(basis.dimension());
    if kernel.iter().all(KunnethElement::is_zero) {
        return Ok(0);
    }
    let mut products = Vec::new();
    for a in &kernel {
        for b in &kernel {
            let p = a.cup(b);
            if !p.is_zero() {
                products.push(p);
            }
        }
    }
    if products.is_empty() {
        return Ok(1);
    }
    let triple = products.iter().any(|p| kernel.iter().any(|k| !p.cup(k).is_zero()));
    Ok(if triple { 3 } else { 2 })
}

/// Cohomological lower bound for `TC(G)`; equal to `tc_graph(g)` for every graph.
pub fn tc_lower_bound(g: &MultiGraph) -> Result<usize, GraphError> {
    zero_divisor_cuplength(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(h1_basis(&fixtures::path(4)).unwrap().dimension(), 0);
        assert_eq!(h1_basis(&fixtures::cycle(3)).unwrap().dimension(), 1);
        assert_eq!(h1_basis(&fixtures::complete(4)).unwrap().dimension(), 3);
    }

    #[test]
    fn cuplength_values() {
        assert_eq!(zero_divisor_cuplength(&fixtures::path(3)).unwrap(), 0);
        assert_eq!(zero_divisor_cuplength(&fixtures::cycle(3)).unwrap(), 1);
        assert_eq!(zero_divisor_cuplength(&fixtures::figure_eight()).unwrap(), 2);
        assert_eq!(tc_lower_bound(&fixtures::complete(4)).unwrap(), 2);
    }

    #[test]
    fn zero_divisor_squares_vanish() {
        let z = KunnethElement::zero_divisor(&[q(2), q(-3), q(5)]);
        let sq = z.cup(&z);
        assert!(sq.is_zero());
    }

    #[test]
    fn two_independent_zero_divisors() {
        // (a⊗1 - 1⊗a)(b⊗1 - 1⊗b) = -a⊗b + b⊗a
        let a = KunnethElement::zero_divisor(&[q(1), q(0)]);
        let b = KunnethElement::zero_divisor(&[q(0), q(1)]);
        let p = a.cup(&b);
        assert_eq!(p.matrix, vec![vec![q(0), q(-1)], vec![q(1), q(0)]]);
        assert_eq!(p.restrict_to_diagonal().1, vec![q(0), q(0)]);
    }

    #[test]
    fn kernel_elements_restrict_to_zero() {
        for k in diagonal_kernel(3) {
            let (u, v) = k.restrict_to_diagonal();
            assert!(u.is_zero() && v.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let ns = nullspace(&[vec![q(1), q(1), q(1)]], 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(v.iter().sum::<Rational>(), q(0));
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = crate::graph::GraphSpec::new().vertex("a").vertex("b").build().unwrap();
        assert!(zero_divisor_cuplength(&g).is_err());
    }
}
