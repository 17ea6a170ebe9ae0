use crate::error::{Error, Result};
use crate::pauli::{Complex, SpinSign, IDENTITY_TOL};

use super::{four_prob_complex, four_prob_symmetrized, AxisQuadruple, SignQuadruple, Slot, Symmetry};

/// Sixteen signed weights indexed by [`SignQuadruple`], normalized to 1.
///
/// Entries are stored exactly as computed; negative values are the point.
#[derive(Debug, Clone, PartialEq)]
pub struct FourProbTable {
    entries: [f64; 16],
    symmetry: Symmetry,
    axes: Option<AxisQuadruple>,
}

impl FourProbTable {
    /// Wraps caller-supplied weights (canonical [`SignQuadruple::index`]
    /// order). Rejects non-finite entries and sums further than `1e-12`
    /// from one.
    pub fn new(entries: [f64; 16], symmetry: Symmetry) -> Result<Self> {
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("four-probability table"));
        }
        let sum: f64 = entries.iter().sum();
        if (sum - 1.0).abs() > IDENTITY_TOL {
            return Err(Error::Unnormalized { what: "four-probability table", sum });
        }
        Ok(FourProbTable { entries, symmetry, axes: None })
    }

    pub fn uniform(symmetry: Symmetry) -> Self {
        FourProbTable { entries: [1.0 / 16.0; 16], symmetry, axes: None }
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    /// The axes the table was evaluated on, if it came from [`table2`].
    pub fn axes(&self) -> Option<&AxisQuadruple> {
        self.axes.as_ref()
    }

    pub fn get(&self, s: SignQuadruple) -> f64 {
        self.entries[s.index()]
    }

    pub fn entries(&self) -> &[f64; 16] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (SignQuadruple, f64)> + '_ {
        SignQuadruple::all().map(move |s| (s, self.get(s)))
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.entries.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Same weights with the signs on `b₁, b₂` reversed; this maps the
    /// symmetric table onto the antisymmetric one and back.
    pub fn flip_b(&self) -> Self {
        let mut entries = [0.0; 16];
        for s in SignQuadruple::all() {
            entries[s.flip_b().index()] = self.get(s);
        }
        FourProbTable { entries, symmetry: self.symmetry.other(), axes: self.axes }
    }

    /// `P(q) = P(−q)` for every quadruple.
    pub fn is_flip_symmetric(&self, tol: f64) -> bool {
        SignQuadruple::all().all(|s| (self.get(s) - self.get(s.negated())).abs() <= tol)
    }

    /// Sum over the two slots not in `keep`, with `signs` fixed on the kept
    /// slots.
    pub fn marginal_pair(&self, keep: (Slot, Slot), signs: (SpinSign, SpinSign)) -> Result<f64> {
        marginal_indices(keep, signs).map(|idx| idx.iter().map(|&i| self.entries[i]).sum())
    }
}

/// Unsymmetrized table of complex traces in the fixed order
/// `(a₁, a₂, b₁, b₂)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexFourProbTable {
    entries: [Complex; 16],
    symmetry: Symmetry,
}

impl ComplexFourProbTable {
    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn get(&self, s: SignQuadruple) -> Complex {
        self.entries[s.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SignQuadruple, Complex)> + '_ {
        SignQuadruple::all().map(|s| (s, self.entries[s.index()]))
    }

    pub fn sum(&self) -> Complex {
        self.entries.iter().sum()
    }

    pub fn marginal_pair(&self, keep: (Slot, Slot), signs: (SpinSign, SpinSign)) -> Result<Complex> {
        marginal_indices(keep, signs).map(|idx| idx.iter().map(|&i| self.entries[i]).sum())
    }
}

fn marginal_indices(keep: (Slot, Slot), signs: (SpinSign, SpinSign)) -> Result<Vec<usize>> {
    if keep.0 == keep.1 {
        return Err(Error::DuplicateSlots);
    }
    Ok(SignQuadruple::all()
        .filter(|q| q.get(keep.0) == signs.0 && q.get(keep.1) == signs.1)
        .map(|q| q.index())
        .collect())
}

/// The full symmetrized table on `q`.
pub fn table2(q: &AxisQuadruple, symmetry: Symmetry) -> FourProbTable {
    let entries = std::array::from_fn(|i| four_prob_symmetrized(q, SignQuadruple::from_index(i), symmetry));
    FourProbTable { entries, symmetry, axes: Some(*q) }
}

/// The full unsymmetrized complex table on `q`.
pub fn complex_table(q: &AxisQuadruple, symmetry: Symmetry) -> ComplexFourProbTable {
    let entries = std::array::from_fn(|i| four_prob_complex(q, SignQuadruple::from_index(i), symmetry));
    ComplexFourProbTable { entries, symmetry }
}
