use std::sync::Arc;

use super::{cayley_dickson, gamma_involution, hermitian_subalgebra, matrix_algebra, plus_algebra, CdParams};
use crate::algebra::{AlgebraTable, Family, LinearMap};
use crate::error::{Error, Result};
use crate::exactmath::{vector, FieldSpec, Matrix, Scalar, Subspace};

/// `γ₁, γ₂, γ₃`, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaParams {
    gamma: [Scalar; 3],
}

impl GammaParams {
    pub fn new(gamma: [Scalar; 3]) -> Result<Self> {
        if gamma.iter().any(Scalar::is_zero) {
            return Err(Error::BadParams("gamma entries must be nonzero".into()));
        }
        let f = gamma[0].field();
        if gamma.iter().any(|g| g.field() != f) {
            return Err(Error::FieldMismatch);
        }
        Ok(GammaParams { gamma })
    }

    pub fn ones(field: FieldSpec) -> Self {
        GammaParams { gamma: [field.one(), field.one(), field.one()] }
    }

    pub fn gamma(&self) -> &[Scalar; 3] {
        &self.gamma
    }
}

/// What the norm, Peirce and witness routines need to know about an
/// Albert-type table.
#[derive(Debug)]
pub struct AlbertData {
    pub cd: CdParams,
    pub gamma: GammaParams,
    pub octonions: AlgebraTable,
    pub conj: LinearMap,
    /// `72 x 27`: basis of the 27-dim algebra inside `C₃`.
    pub embedding: Matrix,
    /// `e₁₁, e₂₂, e₃₃` in the 27-dim basis.
    pub idempotents: [Vec<Scalar>; 3],
    /// `J11, J22, J33, J12, J13, J23` in that order.
    pub peirce: Vec<(String, Subspace)>,
}

pub(crate) const SLOTS: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];

impl AlbertData {
    /// Index of `C₃` coordinate `k` of entry `(i, j)`.
    pub fn c3_index(i: usize, j: usize, k: usize) -> usize {
        (i * 3 + j) * 8 + k
    }

    /// The `3x3` octonion matrix of an element, as a 72-vector.
    pub fn matrix_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.embedding.mul_vec(x).expect("27 coordinates")
    }

    /// Octonion in entry `(i, j)` of the matrix of `x`.
    pub fn entry(&self, x: &[Scalar], i: usize, j: usize) -> Vec<Scalar> {
        let m = self.matrix_of(x);
        m[Self::c3_index(i, j, 0)..Self::c3_index(i, j, 8)].to_vec()
    }

    pub fn component(&self, name: &str) -> Option<&Subspace> {
        self.peirce.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

/// `H(C₃, *γ)` over the stage-3 Cayley–Dickson algebra with parameters `cd`.
pub fn albert_type(field: FieldSpec, cd: &CdParams, gamma: &GammaParams) -> Result<AlgebraTable> {
    if cd.field() != field || gamma.gamma[0].field() != field {
        return Err(Error::FieldMismatch);
    }
    let (octonions, conj) = cayley_dickson(field, cd, 3)?;
    let c3 = matrix_algebra(&octonions, 3)?;
    let sigma = gamma_involution(&c3, gamma, &conj)?;
    let h = hermitian_subalgebra(&plus_algebra(&c3), &sigma)?;
    if h.table.dim() != 27 {
        return Err(Error::InvariantViolation(format!("hermitian part has dimension {}", h.table.dim())));
    }

    // classify each basis vector by the matrix slot it occupies
    let mut slot_of = Vec::with_capacity(27);
    for col in 0..27 {
        let v = h.embedding.column(col);
        let support: Vec<usize> = (0..72).filter(|&i| !v[i].is_zero()).collect();
        let (i, j) = (support[0] / 24, (support[0] / 8) % 3);
        let slot = SLOTS.iter().position(|&s| s == (i.min(j), i.max(j))).expect("slot");
        if support.iter().any(|&t| {
            let (a, b) = (t / 24, (t / 8) % 3);
            (a.min(b), a.max(b)) != SLOTS[slot]
        }) {
            return Err(Error::InvariantViolation("basis vector spans two matrix slots".into()));
        }
        slot_of.push(slot);
    }
    let names = ["J11", "J22", "J33", "J12", "J13", "J23"];
    let mut peirce = Vec::new();
    for (s, name) in names.iter().enumerate() {
        let vecs: Vec<Vec<Scalar>> =
            (0..27).filter(|&c| slot_of[c] == s).map(|c| vector::unit_vec(field, 27, c)).collect();
        peirce.push((name.to_string(), Subspace::span(field, 27, &vecs)?));
    }
    let idempotents = [0, 1, 2].map(|i| {
        let mut e = vector::zero_vec(field, 72);
        e[AlbertData::c3_index(i, i, 0)] = field.one();
        h.fixed.coordinates(&e).expect("diagonal idempotent is hermitian")
    });
    let mut counters = [0usize; 6];
    let labels = slot_of
        .iter()
        .map(|&s| {
            let (i, j) = SLOTS[s];
            let k = counters[s];
            counters[s] += 1;
            if i == j {
                format!("x{}{}", i + 1, j + 1)
            } else {
                format!("x{}{}_{}", i + 1, j + 1, k)
            }
        })
        .collect();

    let data = AlbertData {
        cd: cd.clone(),
        gamma: gamma.clone(),
        octonions,
        conj,
        embedding: h.embedding,
        idempotents,
        peirce,
    };
    Ok(h.table.with_labels(labels)?.with_family(Family::Albert(Arc::new(data))))
}
