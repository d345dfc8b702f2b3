use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::verify::cubic_roots;

/// One eigenvalue, either an exact rational or a real root of an integer
/// cubic identified by its position among the cubic's roots.
#[derive(Debug, Clone, PartialEq)]
pub enum EigenValue {
    Exact(BigRational),
    /// Root number `index` (0 = largest) of `c0 + c1·λ + c2·λ² + c3·λ³`,
    /// roots counted with multiplicity in descending order.
    CubicRoot {
        cubic: [BigInt; 4],
        index: usize,
    },
}

impl EigenValue {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Self::Exact(BigRational::from_integer(v.into()))
    }

    /// Numeric value. Cubic roots are only resolved here.
    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Self::CubicRoot { cubic, index } => {
                let c = cubic.each_ref().map(|x| x.to_f64().unwrap_or(f64::NAN));
                // construction already checked the roots are real
                cubic_roots(c, f64::INFINITY)
                    .map(|r| r[*index])
                    .unwrap_or(f64::NAN)
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact(_))
    }
}

impl fmt::Display for EigenValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(q) => write!(f, "{q}"),
            Self::CubicRoot { index, .. } => write!(f, "cubic root #{index} ≈ {}", self.to_f64()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub value: EigenValue,
    pub multiplicity: usize,
}

/// Eigenvalues with multiplicities, sorted by decreasing value with equal
/// values merged.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Canonical form: zero multiplicities dropped, sorted descending, equal
    /// exact values merged. A cubic root within `merge_tol` of an exact value
    /// is absorbed into it.
    pub fn from_entries(entries: Vec<SpectrumEntry>, merge_tol: f64) -> Self {
        let mut keyed: Vec<(f64, SpectrumEntry)> = entries
            .into_iter()
            .filter(|e| e.multiplicity > 0)
            .map(|e| (e.value.to_f64(), e))
            .collect();
        keyed.sort_by(|(x, a), (y, b)| {
            y.partial_cmp(x)
                .unwrap_or(Ordering::Equal)
                .then_with(|| b.value.is_exact().cmp(&a.value.is_exact()))
        });

        let mut merged: Vec<(f64, SpectrumEntry)> = Vec::with_capacity(keyed.len());
        for (x, entry) in keyed {
            if let Some((lx, last)) = merged.last_mut() {
                let same = match (&last.value, &entry.value) {
                    (EigenValue::Exact(a), EigenValue::Exact(b)) => a == b,
                    _ => (*lx - x).abs() <= merge_tol,
                };
                if same {
                    last.multiplicity += entry.multiplicity;
                    if !last.value.is_exact() && entry.value.is_exact() {
                        last.value = entry.value;
                        *lx = x;
                    }
                    continue;
                }
            }
            merged.push((x, entry));
        }
        Self {
            entries: merged.into_iter().map(|(_, e)| e).collect(),
        }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn multiplicity_of(&self, value: &BigRational) -> usize {
        self.entries
            .iter()
            .filter(|e| matches!(&e.value, EigenValue::Exact(q) if q == value))
            .map(|e| e.multiplicity)
            .sum()
    }

    /// All eigenvalues repeated by multiplicity, descending.
    pub fn to_f64_multiset(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value.to_f64(), e.multiplicity))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(v: i64, m: usize) -> SpectrumEntry {
        SpectrumEntry {
            value: EigenValue::integer(v),
            multiplicity: m,
        }
    }

    #[test]
    fn canonical_order_and_merge() {
        let s = Spectrum::from_entries(
            vec![exact(1, 1), exact(-3, 1), exact(1, 2), exact(0, 0)],
            1e-9,
        );
        assert_eq!(s.entries(), &[exact(1, 3), exact(-3, 1)]);
        assert_eq!(s.dimension(), 4);
    }

    #[test]
    fn cubic_root_merges_into_exact_value() {
        // −(λ − 3)(λ + 1)²: roots 3, −1, −1
        let cubic = [3, 5, 1, -1].map(BigInt::from);
        let root = |index| SpectrumEntry {
            value: EigenValue::CubicRoot {
                cubic: cubic.clone(),
                index,
            },
            multiplicity: 1,
        };
        let s = Spectrum::from_entries(vec![root(0), root(1), root(2), exact(-1, 1)], 1e-6);
        assert_eq!(s.dimension(), 4);
        assert_eq!(
            s.multiplicity_of(&BigRational::from_integer((-1).into())),
            3
        );
        assert!((s.to_f64_multiset()[0] - 3.0).abs() < 1e-9);
    }
}
