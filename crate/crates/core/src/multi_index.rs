//! Multi-indices in ℕᵈ with the graded lexicographic order.

use std::cmp::Ordering;

/// Ordered tuple of non-negative exponents; indexes both the Hermite basis
/// and the Fock-space monomials.
///
/// The derived/`Ord` total order is graded lexicographic: degree first,
/// then lexicographic within a degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: impl Into<Vec<u32>>) -> Self {
        let v = exponents.into();
        assert!(!v.is_empty(), "multi-index dimension must be at least 1");
        MultiIndex(v)
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1);
        MultiIndex(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Total degree |α| = Σ αⱼ.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    /// True iff at least one exponent is odd.
    pub fn has_odd_entry(&self) -> bool {
        self.0.iter().any(|&a| a % 2 == 1)
    }

    /// Componentwise doubling, α ↦ 2α.
    pub fn doubled(&self) -> Self {
        MultiIndex(self.0.iter().map(|&a| 2 * a).collect())
    }

    /// Componentwise halving; `None` unless every entry is even.
    pub fn halved(&self) -> Option<Self> {
        if self.has_odd_entry() {
            None
        } else {
            Some(MultiIndex(self.0.iter().map(|&a| a / 2).collect()))
        }
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        // within a degree, higher leading exponents come first:
        // (1,0) precedes (0,1)
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (j, a) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex::new(v)
    }
}

/// All α ∈ ℕ^dim with |α| ≤ max_degree, in graded lexicographic order.
///
/// The count is C(dim + max_degree, dim).
pub fn enumerate_multi_indices(dim: usize, max_degree: u32) -> Vec<MultiIndex> {
    assert!(dim >= 1);
    let mut out = Vec::new();
    let mut scratch = vec![0u32; dim];
    for degree in 0..=max_degree {
        emit_degree(&mut scratch, 0, degree, &mut out);
    }
    out
}

/// All α ∈ ℕ^dim with |α| = degree, in lexicographic order.
pub fn enumerate_shell(dim: usize, degree: u32) -> Vec<MultiIndex> {
    assert!(dim >= 1);
    let mut out = Vec::new();
    let mut scratch = vec![0u32; dim];
    emit_degree(&mut scratch, 0, degree, &mut out);
    out
}

fn emit_degree(scratch: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == scratch.len() {
        scratch[pos] = remaining;
        out.push(MultiIndex::new(scratch.to_vec()));
        return;
    }
    // lex order wants the leading entry largest first
    for lead in (0..=remaining).rev() {
        scratch[pos] = lead;
        emit_degree(scratch, pos + 1, remaining - lead, out);
    }
}
