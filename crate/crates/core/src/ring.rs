//! Arithmetic and unit structure of the direct sum ℤn ⊕ ℤm.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ring ℤn ⊕ ℤm with componentwise addition and multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingSpec {
    n: u64,
    m: u64,
}

/// An element `(a, b)` with `a ∈ ℤn`, `b ∈ ℤm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    pub a: u64,
    pub b: u64,
}

/// Parity of the two moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityCase {
    BothOdd,
    ExactlyOneEven,
    BothEven,
}

/// Which family of closed-form results an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// Two odd prime powers.
    #[serde(rename = "PP_OddOdd")]
    PpOddOdd,
    /// An odd prime power and a power of two.
    #[serde(rename = "PP_OddTwo")]
    PpOddTwo,
    /// Each modulus a product of two distinct odd prime powers.
    #[serde(rename = "PPPP_OddOdd")]
    PpppOddOdd,
    /// Odd modulus `p1^a p2^b`, even modulus `2^c q^d` with `q` odd.
    #[serde(rename = "PPPP_OneEven")]
    PpppOneEven,
    GeneralOddOdd,
    GeneralOneEven,
    BothEven,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::PpOddOdd => "PP_OddOdd",
            CaseTag::PpOddTwo => "PP_OddTwo",
            CaseTag::PpppOddOdd => "PPPP_OddOdd",
            CaseTag::PpppOneEven => "PPPP_OneEven",
            CaseTag::GeneralOddOdd => "GeneralOddOdd",
            CaseTag::GeneralOneEven => "GeneralOneEven",
            CaseTag::BothEven => "BothEven",
        }
    }

    pub fn parity(self) -> ParityCase {
        match self {
            CaseTag::PpOddOdd | CaseTag::PpppOddOdd | CaseTag::GeneralOddOdd => ParityCase::BothOdd,
            CaseTag::PpOddTwo | CaseTag::PpppOneEven | CaseTag::GeneralOneEven => {
                ParityCase::ExactlyOneEven
            }
            CaseTag::BothEven => ParityCase::BothEven,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub type Factorization = Vec<(u64, u32)>;

/// Factorizations of both moduli plus the case they fall into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureProfile {
    pub spec: RingSpec,
    pub n_factorization: Factorization,
    pub m_factorization: Factorization,
    pub case_tag: CaseTag,
}

impl RingSpec {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Self { n, m })
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of ring elements, `n·m`.
    pub fn order(&self) -> u64 {
        self.n * self.m
    }

    pub fn parity_case(&self) -> ParityCase {
        match (self.n % 2 == 0, self.m % 2 == 0) {
            (false, false) => ParityCase::BothOdd,
            (true, true) => ParityCase::BothEven,
            _ => ParityCase::ExactlyOneEven,
        }
    }

    pub fn element(&self, a: u64, b: u64) -> RingElement {
        RingElement {
            a: a % self.n,
            b: b % self.m,
        }
    }

    pub fn contains(&self, x: RingElement) -> bool {
        x.a < self.n && x.b < self.m
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        debug_assert!(self.contains(x) && self.contains(y));
        RingElement {
            a: (x.a + y.a) % self.n,
            b: (x.b + y.b) % self.m,
        }
    }

    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement {
            a: (x.a * y.a) % self.n,
            b: (x.b * y.b) % self.m,
        }
    }

    /// A unit of ℤn ⊕ ℤm is a pair of units; tested by gcd.
    pub fn is_unit(&self, x: RingElement) -> bool {
        gcd(x.a, self.n) == 1 && gcd(x.b, self.m) == 1
    }

    /// `|U(ℤn ⊕ ℤm)| = φ(n)·φ(m)`.
    pub fn unit_count(&self) -> u64 {
        euler_phi(self.n) * euler_phi(self.m)
    }

    /// Elements in canonical order: index `a·m + b`.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.n).flat_map(move |a| (0..self.m).map(move |b| RingElement { a, b }))
    }

    pub fn classify(&self) -> StructureProfile {
        let n_factorization = factorize(self.n);
        let m_factorization = factorize(self.m);
        let case_tag = case_tag(self.n, &n_factorization, self.m, &m_factorization);
        StructureProfile {
            spec: *self,
            n_factorization,
            m_factorization,
            case_tag,
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{} + Z{}", self.n, self.m)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

fn case_tag(n: u64, nf: &Factorization, m: u64, mf: &Factorization) -> CaseTag {
    let odd_pp = |f: &Factorization, k: u64| k % 2 == 1 && f.len() == 1;
    let odd_two_pp = |f: &Factorization, k: u64| k % 2 == 1 && f.len() == 2;
    match (n % 2 == 0, m % 2 == 0) {
        (false, false) => {
            if odd_pp(nf, n) && odd_pp(mf, m) {
                CaseTag::PpOddOdd
            } else if odd_two_pp(nf, n) && odd_two_pp(mf, m) {
                CaseTag::PpppOddOdd
            } else {
                CaseTag::GeneralOddOdd
            }
        }
        (true, true) => CaseTag::BothEven,
        (n_even, _) => {
            let (odd, of, ef) = if n_even { (m, mf, nf) } else { (n, nf, mf) };
            // ef[0] is the prime 2 since the even modulus has 2 as smallest factor.
            if odd_pp(of, odd) && ef.len() == 1 {
                CaseTag::PpOddTwo
            } else if odd_two_pp(of, odd) && ef.len() == 2 {
                CaseTag::PpppOneEven
            } else {
                CaseTag::GeneralOneEven
            }
        }
    }
}

impl StructureProfile {
    /// Recompute `(n, m)` from the factorizations.
    pub fn reconstruct(&self) -> (u64, u64) {
        (expand(&self.n_factorization), expand(&self.m_factorization))
    }

    /// The even modulus and the odd one, when exactly one is even.
    pub fn even_odd_split(&self) -> Option<(&Factorization, &Factorization)> {
        match self.case_tag.parity() {
            ParityCase::ExactlyOneEven => {
                if self.spec.n % 2 == 0 {
                    Some((&self.n_factorization, &self.m_factorization))
                } else {
                    Some((&self.m_factorization, &self.n_factorization))
                }
            }
            _ => None,
        }
    }
}

pub fn expand(f: &Factorization) -> u64 {
    f.iter().map(|&(p, e)| p.pow(e)).product()
}

/// φ from a factorization: `∏ p^(e-1)(p-1)`.
pub fn totient_of(f: &Factorization) -> u64 {
    f.iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Trial-division factorization. `factorize(1)` is empty.
pub fn factorize(mut k: u64) -> Factorization {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            let mut e = 0;
            while k % p == 0 {
                k /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}

/// Euler's totient. `euler_phi(0)` is defined as 0.
pub fn euler_phi(k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    totient_of(&factorize(k))
}

/// Deterministic primality by trial division.
pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    if k < 4 {
        return true;
    }
    if k % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= k {
        if k % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u64, m: u64) -> RingSpec {
        RingSpec::new(n, m).unwrap()
    }

    /// The zero-product scan: `x` is a non-unit iff some nonzero `y` has `x·y = 0`.
    fn is_unit_by_scan(spec: &RingSpec, x: RingElement) -> bool {
        let zero = RingElement { a: 0, b: 0 };
        if x == zero {
            return false;
        }
        !spec
            .elements()
            .filter(|&y| y != zero)
            .any(|y| spec.mul(x, y) == zero)
    }

    #[test]
    fn addition_examples() {
        let r = ring(4, 5);
        assert_eq!(r.add(r.element(3, 4), r.element(1, 1)), r.element(0, 0));
        let r = ring(5, 5);
        assert_eq!(r.add(r.element(0, 0), r.element(2, 3)), r.element(2, 3));
        let r = ring(6, 4);
        assert_eq!(r.add(r.element(5, 3), r.element(2, 2)), r.element(1, 1));
    }

    #[test]
    fn unit_examples() {
        assert!(ring(5, 5).is_unit(RingElement { a: 1, b: 1 }));
        assert!(!ring(4, 5).is_unit(RingElement { a: 2, b: 3 }));
        assert!(!ring(5, 5).is_unit(RingElement { a: 0, b: 1 }));
    }

    #[test]
    fn unit_count_examples() {
        assert_eq!(ring(5, 5).unit_count(), 16);
        assert_eq!(ring(4, 5).unit_count(), 8);
        assert_eq!(ring(2, 2).unit_count(), 1);
        for (n, m, expected) in [(5, 5, 16), (4, 5, 8), (2, 2, 1)] {
            let r = ring(n, m);
            assert_eq!(
                r.elements().filter(|&x| r.is_unit(x)).count() as u64,
                expected
            );
        }
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(27), 18);
    }

    #[test]
    fn rejects_small_moduli() {
        assert_eq!(RingSpec::new(1, 5), Err(Error::InvalidModulus(1)));
        assert_eq!(RingSpec::new(5, 0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn unit_count_matches_enumeration_up_to_30() {
        for n in 2..=30 {
            for m in 2..=30 {
                let r = ring(n, m);
                let counted = r.elements().filter(|&x| r.is_unit(x)).count() as u64;
                assert_eq!(counted, r.unit_count(), "({n},{m})");
            }
        }
    }

    #[test]
    fn gcd_test_agrees_with_zero_product_scan() {
        for n in 2..=12 {
            for m in 2..=12 {
                let r = ring(n, m);
                for x in r.elements() {
                    assert_eq!(r.is_unit(x), is_unit_by_scan(&r, x), "{x} in {r}");
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let p = ring(9, 25).classify();
        assert_eq!(p.case_tag, CaseTag::PpOddOdd);
        assert_eq!(p.n_factorization, vec![(3, 2)]);
        assert_eq!(p.m_factorization, vec![(5, 2)]);

        assert_eq!(ring(15, 4).classify().case_tag, CaseTag::GeneralOneEven);

        let p = ring(15, 21).classify();
        assert_eq!(p.case_tag, CaseTag::PpppOddOdd);
        assert_eq!(p.n_factorization, vec![(3, 1), (5, 1)]);
        assert_eq!(p.m_factorization, vec![(3, 1), (7, 1)]);
    }

    #[test]
    fn classify_edge_cases() {
        assert_eq!(ring(3, 2).classify().case_tag, CaseTag::PpOddTwo);
        assert_eq!(ring(8, 27).classify().case_tag, CaseTag::PpOddTwo);
        assert_eq!(ring(15, 6).classify().case_tag, CaseTag::PpppOneEven);
        assert_eq!(ring(12, 35).classify().case_tag, CaseTag::PpppOneEven);
        assert_eq!(ring(3, 6).classify().case_tag, CaseTag::GeneralOneEven);
        assert_eq!(ring(3, 15).classify().case_tag, CaseTag::GeneralOddOdd);
        assert_eq!(ring(105, 15).classify().case_tag, CaseTag::GeneralOddOdd);
        assert_eq!(ring(30, 7).classify().case_tag, CaseTag::GeneralOneEven);
        assert_eq!(ring(6, 4).classify().case_tag, CaseTag::BothEven);
    }

    #[test]
    fn parity_case_matches_tag() {
        for n in 2..=40 {
            for m in 2..=40 {
                let r = ring(n, m);
                assert_eq!(r.classify().case_tag.parity(), r.parity_case());
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&k| is_prime(k)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn classify_reconstructs_moduli(n in 2u64..5000, m in 2u64..5000) {
                let p = RingSpec::new(n, m).unwrap().classify();
                prop_assert_eq!(p.reconstruct(), (n, m));
            }

            #[test]
            fn totient_counts_coprime_residues(k in 1u64..3000) {
                let brute = (1..=k).filter(|&i| gcd(i, k) == 1).count() as u64;
                prop_assert_eq!(euler_phi(k), brute);
            }
        }
    }
}
