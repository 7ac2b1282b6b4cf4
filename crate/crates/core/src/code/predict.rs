//! Closed-form parameters of incidence codes for the structured cases.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CodeParams;
use crate::ring::{
    expand, totient_of, CaseTag, Factorization, ParityCase, RingSpec, StructureProfile,
};

/// Which closed form produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremSource {
    /// Two odd prime powers, binary code.
    #[serde(rename = "S4_C2")]
    S4C2,
    /// Odd prime power and a power of two, odd field.
    #[serde(rename = "S4_Cr")]
    S4Cr,
    /// Two products of two odd prime powers, binary code.
    #[serde(rename = "S5_C2")]
    S5C2,
    /// Products of two prime powers, one modulus even, odd field.
    #[serde(rename = "S5_Cr")]
    S5Cr,
    /// Conjectured general form, both moduli odd, binary code.
    #[serde(rename = "ConjII_C2")]
    ConjIIC2,
    /// Conjectured general form, one modulus even, odd field.
    #[serde(rename = "ConjII_Cr")]
    ConjIICr,
    None,
}

impl TheoremSource {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremSource::S4C2 => "S4_C2",
            TheoremSource::S4Cr => "S4_Cr",
            TheoremSource::S5C2 => "S5_C2",
            TheoremSource::S5Cr => "S5_Cr",
            TheoremSource::ConjIIC2 => "ConjII_C2",
            TheoremSource::ConjIICr => "ConjII_Cr",
            TheoremSource::None => "None",
        }
    }

    /// Proven (as opposed to conjectured or absent).
    pub fn is_theorem(self) -> bool {
        matches!(
            self,
            TheoremSource::S4C2 | TheoremSource::S4Cr | TheoremSource::S5C2 | TheoremSource::S5Cr
        )
    }
}

impl fmt::Display for TheoremSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredictedParams {
    pub primal: Option<CodeParams>,
    pub dual: Option<CodeParams>,
    pub source: TheoremSource,
}

impl PredictedParams {
    fn none() -> Self {
        Self {
            primal: None,
            dual: None,
            source: TheoremSource::None,
        }
    }
}

/// Predicted primal and dual parameters of the incidence code of
/// G(ℤn ⊕ ℤm) over GF(r).
pub fn predict(profile: &StructureProfile, r: u64) -> PredictedParams {
    let odd_field = r % 2 == 1;
    let (n, m) = (profile.spec.n(), profile.spec.m());
    let mn = n * m;
    match profile.case_tag {
        CaseTag::PpOddOdd | CaseTag::PpppOddOdd if r == 2 => {
            let units = totient_of(&profile.n_factorization) * totient_of(&profile.m_factorization);
            let length = (mn - 1) * units / 2;
            PredictedParams {
                primal: Some(CodeParams::exact(length, mn - 1, units - 1)),
                dual: Some(CodeParams::exact(length, (mn - 1) * (units - 2) / 2, 3)),
                source: if profile.case_tag == CaseTag::PpOddOdd {
                    TheoremSource::S4C2
                } else {
                    TheoremSource::S5C2
                },
            }
        }
        CaseTag::PpOddTwo if odd_field => {
            let (even, odd) = profile.even_odd_split().expect("one modulus is even");
            let b = even[0].1;
            let big_n = expand(odd);
            let phi_n = totient_of(odd);
            let four = 1u64 << (2 * (b - 1));
            let two_b = 1u64 << b;
            let length = big_n * phi_n * four;
            PredictedParams {
                primal: Some(CodeParams::exact(
                    length,
                    two_b * big_n - 1,
                    (two_b / 2) * phi_n,
                )),
                dual: Some(CodeParams::exact(
                    length,
                    phi_n * big_n * four - two_b * big_n + 1,
                    if two_b * big_n == 6 { 6 } else { 4 },
                )),
                source: TheoremSource::S4Cr,
            }
        }
        CaseTag::PpppOneEven if odd_field => {
            let units = even_case_lambda(profile);
            let length = mn * units / 2;
            PredictedParams {
                primal: Some(CodeParams::exact(length, mn - 1, units)),
                dual: Some(CodeParams::exact(length, (mn * (units - 2) + 2) / 2, 4)),
                source: TheoremSource::S5Cr,
            }
        }
        CaseTag::GeneralOddOdd | CaseTag::GeneralOneEven => match conjecture_ii(profile.spec, r) {
            Some(primal) => PredictedParams {
                primal: Some(primal),
                dual: None,
                source: if r == 2 {
                    TheoremSource::ConjIIC2
                } else {
                    TheoremSource::ConjIICr
                },
            },
            None => PredictedParams::none(),
        },
        _ => PredictedParams::none(),
    }
}

/// The conjectured general parameters: both moduli odd with a binary code, or
/// exactly one even with an odd field. `None` outside those two regimes.
pub fn conjecture_ii(spec: RingSpec, r: u64) -> Option<CodeParams> {
    let units = spec.unit_count();
    let mn = spec.order();
    match spec.parity_case() {
        ParityCase::BothOdd if r == 2 => {
            Some(CodeParams::exact((mn - 1) * units / 2, mn - 1, units - 1))
        }
        ParityCase::ExactlyOneEven if r % 2 == 1 => {
            Some(CodeParams::exact(mn * units / 2, mn - 1, units))
        }
        _ => None,
    }
}

/// Closed-form edge connectivity for the structured cases.
pub fn lambda_formula(profile: &StructureProfile) -> Option<u64> {
    match profile.case_tag {
        CaseTag::PpOddOdd | CaseTag::PpppOddOdd => {
            Some(totient_of(&profile.n_factorization) * totient_of(&profile.m_factorization) - 1)
        }
        CaseTag::PpOddTwo | CaseTag::PpppOneEven => Some(even_case_lambda(profile)),
        _ => None,
    }
}

/// `2^(a−1) · φ(q^b) · φ(odd)` for an even modulus `2^a q^b` (`q^b` possibly 1).
fn even_case_lambda(profile: &StructureProfile) -> u64 {
    let (even, odd) = profile.even_odd_split().expect("one modulus is even");
    let (two, a) = even[0];
    debug_assert_eq!(two, 2);
    let rest: Factorization = even[1..].to_vec();
    (1u64 << (a - 1)) * totient_of(&rest) * totient_of(odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::euler_phi;

    fn pred(n: u64, m: u64, r: u64) -> PredictedParams {
        predict(&RingSpec::new(n, m).unwrap().classify(), r)
    }

    #[test]
    fn worked_values() {
        let p = pred(9, 5, 2);
        assert_eq!(p.source, TheoremSource::S4C2);
        assert_eq!(p.primal, Some(CodeParams::exact(528, 44, 23)));
        assert_eq!(p.dual, Some(CodeParams::exact(528, 484, 3)));

        let p = pred(3, 4, 5);
        assert_eq!(p.source, TheoremSource::S4Cr);
        assert_eq!(p.primal, Some(CodeParams::exact(24, 11, 4)));
        assert_eq!(p.dual, Some(CodeParams::exact(24, 13, 4)));

        let p = pred(15, 21, 2);
        assert_eq!(p.source, TheoremSource::S5C2);
        assert_eq!(p.primal, Some(CodeParams::exact(15072, 314, 95)));

        let p = pred(3, 5, 2);
        assert_eq!(p.primal, Some(CodeParams::exact(56, 14, 7)));
        assert_eq!(p.dual.unwrap().dimension, 42);
        assert_eq!(p.dual.unwrap().min_distance.exact(), Some(3));

        let p = pred(3, 2, 3);
        assert_eq!(p.primal, Some(CodeParams::exact(6, 5, 2)));
        assert_eq!(p.dual, Some(CodeParams::exact(6, 1, 6)));
    }

    #[test]
    fn order_of_moduli_does_not_matter() {
        for (n, m) in [(3, 4), (9, 5), (15, 6), (15, 21), (5, 8)] {
            for r in [2, 3, 5] {
                assert_eq!(pred(n, m, r), pred(m, n, r), "({n},{m}) r={r}");
            }
        }
    }

    #[test]
    fn sources_by_case() {
        assert_eq!(pred(15, 6, 3).source, TheoremSource::S5Cr);
        assert_eq!(pred(15, 15, 2).source, TheoremSource::S5C2);
        assert_eq!(pred(3, 9, 3).source, TheoremSource::None);
        assert_eq!(pred(3, 4, 2).source, TheoremSource::None);
        assert_eq!(pred(45, 7, 2).source, TheoremSource::ConjIIC2);
        assert_eq!(pred(6, 9, 5).source, TheoremSource::ConjIICr);
        assert_eq!(pred(4, 6, 3).source, TheoremSource::None);
        assert!(pred(6, 9, 5).dual.is_none());
    }

    #[test]
    fn closed_forms_agree_with_generic_counts() {
        // Every structured formula reduces to the edge count, mn−1 and the unit count.
        for n in 2..=40u64 {
            for m in 2..=40u64 {
                let spec = RingSpec::new(n, m).unwrap();
                let profile = spec.classify();
                let units = euler_phi(n) * euler_phi(m);
                for r in [2, 3] {
                    let p = predict(&profile, r);
                    if let Some(primal) = p.primal {
                        assert_eq!(primal, conjecture_ii(spec, r).unwrap(), "({n},{m}) r={r}");
                        if let Some(dual) = p.dual {
                            assert_eq!(dual.length, primal.length);
                            assert_eq!(dual.dimension, primal.length - primal.dimension);
                        }
                    }
                }
                if let Some(lambda) = lambda_formula(&profile) {
                    let expected = if spec.parity_case() == ParityCase::BothOdd {
                        units - 1
                    } else {
                        units
                    };
                    assert_eq!(lambda, expected);
                }
            }
        }
    }
}
