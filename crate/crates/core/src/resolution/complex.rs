use serde::{Deserialize, Serialize};

use crate::algebra::{Degree, FreeModule, GradedMatrix, MatrixJson, Ring};
use crate::betti::BettiTable;
use crate::error::{Error, Result};

/// A complex of graded free modules `C_0 ← C_1 ← … ← C_n`.
///
/// `diffs[i]` is the differential `C_{i+1} → C_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex {
    modules: Vec<FreeModule>,
    diffs: Vec<GradedMatrix>,
}

impl ChainComplex {
    pub fn new(modules: Vec<FreeModule>, diffs: Vec<GradedMatrix>) -> Result<Self> {
        if modules.is_empty() || diffs.len() + 1 != modules.len() {
            return Err(Error::Domain("a complex needs one more module than differentials".into()));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.target() != &modules[i] || d.source() != &modules[i + 1] {
                return Err(Error::Domain(format!("differential {} does not match the module twists", i + 1)));
            }
        }
        Ok(ChainComplex { modules, diffs })
    }

    /// Builds the complex from its differentials `∂_1, ∂_2, …`.
    pub fn from_diffs(c0: FreeModule, diffs: Vec<GradedMatrix>) -> Result<Self> {
        let mut modules = vec![c0];
        modules.extend(diffs.iter().map(|d| d.source().clone()));
        Self::new(modules, diffs)
    }

    /// A single free module in homological degree 0.
    pub fn concentrated(c0: FreeModule) -> Self {
        ChainComplex { modules: vec![c0], diffs: vec![] }
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &FreeModule {
        &self.modules[i]
    }

    pub fn diffs(&self) -> &[GradedMatrix] {
        &self.diffs
    }

    /// `∂_i : C_i → C_{i-1}` for `1 ≤ i ≤ n`.
    pub fn differential(&self, i: usize) -> &GradedMatrix {
        &self.diffs[i - 1]
    }

    /// Number of modules minus one (the top index, which may hold a zero module).
    pub fn top(&self) -> usize {
        self.diffs.len()
    }

    /// Largest index with a nonzero module.
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|m| m.rank() > 0).unwrap_or(0)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    pub fn is_complex(&self, ring: &Ring) -> bool {
        self.diffs.windows(2).all(|w| w[0].compose(ring, &w[1]).map(|c| c.is_zero()).unwrap_or(false))
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        !self.diffs.iter().any(|d| d.has_unit_entry())
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (i, m) in self.modules.iter().enumerate() {
            for tw in m.twists() {
                t.add(i, tw.clone(), 1);
            }
        }
        t
    }

    /// Drops trailing zero modules.
    pub fn trimmed(mut self) -> Self {
        let len = self.length();
        self.modules.truncate(len + 1);
        self.diffs.truncate(len);
        self
    }

    /// `D_j = Hom(C_{n-j}, S)` with transposed differentials, `n` the length.
    pub fn dual(&self, ring: &Ring) -> ChainComplex {
        let c = self.clone().trimmed();
        let n = c.top();
        let modules = (0..=n).map(|j| c.modules[n - j].dual(ring)).collect();
        // D_{j+1} → D_j is the transpose of ∂_{n-j}: C_{n-j} → C_{n-j-1}.
        let diffs = (0..n).map(|j| c.diffs[n - j - 1].transpose(ring)).collect();
        ChainComplex { modules, diffs }
    }

    /// Twists of `C_i`, or empty past the end.
    pub fn twists(&self, i: usize) -> &[Degree] {
        self.modules.get(i).map_or(&[], |m| m.twists())
    }

    pub fn to_json(&self, ring: &Ring) -> ComplexJson {
        ComplexJson {
            twists: self.modules.iter().map(|m| m.twists().to_vec()).collect(),
            differentials: self.diffs.iter().map(|d| d.to_json(ring)).collect(),
        }
    }

    pub fn from_json(ring: &Ring, j: &ComplexJson) -> Result<Self> {
        let diffs = j.differentials.iter().map(|d| GradedMatrix::from_json(ring, d)).collect::<Result<Vec<_>>>()?;
        let modules = j.twists.iter().map(|t| FreeModule::new(ring, t.clone())).collect();
        Self::new(modules, diffs).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A complex together with a map from the ambient module of the presented module
/// into `C_0`, inducing `M ≅ coker ∂_1` up to the relevant comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct AugmentedComplex {
    pub complex: ChainComplex,
    /// Map from the presentation's ambient free module to `C_0`.
    pub augmentation: GradedMatrix,
}

/// Degreewise direct sum; the length is the largest input length.
pub fn direct_sum(ring: &Ring, parts: &[ChainComplex]) -> ChainComplex {
    let top = parts.iter().map(|c| c.top()).max().unwrap_or(0);
    let empty = FreeModule::new(ring, vec![]);
    let module_at = |c: &ChainComplex, i: usize| if i <= c.top() { c.module(i).clone() } else { empty.clone() };
    let mut modules = vec![empty.clone(); top + 1];
    let mut diffs: Vec<GradedMatrix> = (0..top).map(|_| GradedMatrix::zero(empty.clone(), empty.clone())).collect();
    for c in parts {
        for i in 0..=top {
            let next = module_at(c, i);
            if i >= 1 {
                let d = if i <= c.top() {
                    c.differential(i).clone()
                } else {
                    GradedMatrix::zero(module_at(c, i - 1), next.clone())
                };
                let prev = &diffs[i - 1];
                diffs[i - 1] = GradedMatrix::from_blocks(
                    ring,
                    prev.target(),
                    d.target(),
                    prev.source(),
                    d.source(),
                    [[Some(prev), None], [None, Some(&d)]],
                );
            }
            modules[i] = modules[i].direct_sum(ring, &next);
        }
    }
    ChainComplex { modules, diffs }
}

/// Direct sum of virtual resolutions of modules with a common ambient `F`, augmented by
/// the diagonal `F → ⊕ C_0`.
pub fn direct_sum_resolutions(ring: &Ring, parts: &[AugmentedComplex]) -> Result<AugmentedComplex> {
    let first = parts.first().ok_or_else(|| Error::Domain("direct sum of no complexes".into()))?;
    let ambient = first.augmentation.source().clone();
    if parts.iter().any(|p| p.augmentation.source() != &ambient) {
        return Err(Error::Domain("augmentations have different sources".into()));
    }
    let complex = direct_sum(ring, &parts.iter().map(|p| p.complex.clone()).collect::<Vec<_>>());
    let empty = FreeModule::new(ring, vec![]);
    let mut aug = GradedMatrix::zero(empty.clone(), ambient.clone());
    for p in parts {
        let a = &p.augmentation;
        aug = GradedMatrix::from_blocks(
            ring,
            aug.target(),
            a.target(),
            &ambient,
            &empty,
            [[Some(&aug), None], [Some(a), None]],
        );
    }
    Ok(AugmentedComplex { complex, augmentation: aug })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    /// Twist list of each module, by homological degree.
    pub twists: Vec<Vec<Degree>>,
    pub differentials: Vec<MatrixJson>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::field::PrimeField;

    #[test]
    fn koszul_on_p1_dualizes() {
        let r = Ring::product(&[2], PrimeField::default()).unwrap();
        let p = |s: &str| Polynomial::parse(s, &r).unwrap();
        let c0 = FreeModule::free(&r, 1);
        let c1 = FreeModule::new(&r, vec![vec![1], vec![1]]);
        let c2 = FreeModule::new(&r, vec![vec![2]]);
        let d1 = GradedMatrix::from_entries(&r, c0.clone(), c1.clone(), &[vec![p("x0"), p("x1")]]).unwrap();
        let d2 = GradedMatrix::from_entries(&r, c1, c2, &[vec![p("x1")], vec![p("-x0")]]).unwrap();
        let k = ChainComplex::from_diffs(c0, vec![d1, d2]).unwrap();
        assert!(k.is_complex(&r) && k.is_minimal());
        assert_eq!(k.ranks(), vec![1, 2, 1]);
        let d = k.dual(&r);
        assert!(d.is_complex(&r));
        assert_eq!(d.module(0).twists(), &[vec![-2]]);
        let j = k.to_json(&r);
        assert_eq!(ChainComplex::from_json(&r, &j).unwrap(), k);
        assert_eq!(k.betti().get(1, &[1]), 2);
    }

    #[test]
    fn direct_sum_with_zero_complex() {
        let r = Ring::product(&[2], PrimeField::default()).unwrap();
        let c0 = FreeModule::free(&r, 1);
        let c1 = FreeModule::new(&r, vec![vec![1]]);
        let d1 = GradedMatrix::from_entries(&r, c0.clone(), c1, &[vec![Polynomial::var(0)]]).unwrap();
        let k = ChainComplex::from_diffs(c0, vec![d1]).unwrap();
        let zero = ChainComplex::concentrated(FreeModule::new(&r, vec![]));
        assert_eq!(direct_sum(&r, &[k.clone(), zero]), k);
        let two = direct_sum(&r, &[k.clone(), k]);
        assert_eq!(two.ranks(), vec![2, 2]);
        assert!(two.is_complex(&r));
    }
}
