//! Exact evaluation of the closed-form products over arbitrary-precision
//! integers and rationals. Nothing here ever touches floating point;
//! divisions are asserted exact and ratio comparisons are left to callers
//! as cross-multiplied integer checks.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::region::{build_e, build_e_prime, BuildError};
use crate::spec::{Fern, IndexSet, Orientation};

pub type BigCount = BigUint;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("expected {expected} dents, got {got}")]
    DentCount { expected: usize, got: usize },
    #[error("product is not an integer: {0}")]
    NonIntegral(String),
    #[error("{0}")]
    Parity(String),
    #[error("shuffle hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("{0}")]
    Region(#[from] BuildError),
}

/// 0!·1!·…·(n-1)!.
pub fn hyperfactorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    let mut fact = BigUint::one();
    for k in 1..n {
        fact *= BigUint::from(k);
        acc *= &fact;
    }
    acc
}

/// Rising factorial x(x+1)…(x+n-1); 1 when n = 0.
pub fn pochhammer(x: i64, n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 0..n as i64 {
        acc *= BigInt::from(x + k);
    }
    acc
}

/// Boxed-plane-partition product, evaluated through hyperfactorials:
/// H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(b+c)H(c+a)).
pub fn pp(a: u32, b: u32, c: u32) -> BigUint {
    let num = hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c)
        * hyperfactorial(a + b + c);
    let den = hyperfactorial(a + b) * hyperfactorial(b + c) * hyperfactorial(c + a);
    exact_div(num, &den, "pp")
}

/// Product of pairwise differences of a strictly increasing set; 1 when
/// |S| <= 1.
pub fn delta_prod(s: &IndexSet) -> BigUint {
    let v = s.as_slice();
    let mut acc = BigUint::one();
    for j in 1..v.len() {
        for i in 0..j {
            acc *= BigUint::from(v[j] - v[i]);
        }
    }
    acc
}

/// Tiling count of the dented semihexagon: prod_{i<j} (s_j - s_i)/(j - i),
/// which is Delta(dents) / H(a).
pub fn clp_count(a: u32, _b: u32, dents: &IndexSet) -> Result<BigUint, FormulaError> {
    if dents.len() != a as usize {
        return Err(FormulaError::DentCount {
            expected: a as usize,
            got: dents.len(),
        });
    }
    let num = delta_prod(dents);
    let den = hyperfactorial(a);
    try_exact_div(num, &den, "clp_count")
}

/// Delta(S)/H(|S|) as an exact rational, the per-orientation factor of the
/// shuffling ratio.
fn clp_ratio(s: &IndexSet) -> BigRational {
    BigRational::new(
        BigInt::from(delta_prod(s)),
        BigInt::from(hyperfactorial(s.len() as u32)),
    )
}

/// Hyperfactorial window product for the generalized dented semihexagon.
/// Even-length sequences first drop their trailing entry, which only pads
/// the base and leaves the count unchanged.
pub fn s_fn(seq: &[u32]) -> Result<BigUint, FormulaError> {
    let mut seq = seq;
    if seq.len() % 2 == 0 && !seq.is_empty() {
        seq = &seq[..seq.len() - 1];
    }
    if seq.is_empty() {
        return Ok(BigUint::one());
    }
    let m = seq.len();
    let mut prefix = vec![0u32; m + 1];
    for (i, &v) in seq.iter().enumerate() {
        prefix[i + 1] = prefix[i] + v;
    }
    let odd_total: u32 = seq.iter().step_by(2).sum();
    let mut num = BigUint::one();
    let mut den = hyperfactorial(odd_total);
    for i in 0..m {
        for j in i..m {
            let window = prefix[j + 1] - prefix[i];
            if (j - i) % 2 == 0 {
                num *= hyperfactorial(window);
            } else {
                den *= hyperfactorial(window);
            }
        }
    }
    try_exact_div(num, &den, "s_fn")
}

fn check_shuffle_hypothesis(
    u: &IndexSet,
    d: &IndexSet,
    u2: &IndexSet,
    d2: &IndexSet,
) -> Result<(), FormulaError> {
    if u.union(d) != u2.union(d2) {
        return Err(FormulaError::Hypothesis(format!(
            "unions differ: {} vs {}",
            u.union(d),
            u2.union(d2)
        )));
    }
    if u.intersection(d) != u2.intersection(d2) {
        return Err(FormulaError::Hypothesis(format!(
            "intersections differ: {} vs {}",
            u.intersection(d),
            u2.intersection(d2)
        )));
    }
    Ok(())
}

/// Predicted tiling ratio M(H(U;D;B)) / M(H(U';D';B)) under a shuffle of the
/// dent orientations.
pub fn shuffle_ratio(
    u: &IndexSet,
    d: &IndexSet,
    u2: &IndexSet,
    d2: &IndexSet,
    y: u32,
) -> Result<BigRational, FormulaError> {
    check_shuffle_hypothesis(u, d, u2, d2)?;
    let num = clp_ratio(u)
        * clp_ratio(d)
        * BigRational::from(BigInt::from(pp(u.len() as u32, d.len() as u32, y)));
    let den = clp_ratio(u2)
        * clp_ratio(d2)
        * BigRational::from(BigInt::from(pp(u2.len() as u32, d2.len() as u32, y)));
    Ok(num / den)
}

/// Predicted ratio of centrally symmetric tiling counts: the quotient of the
/// pairwise-difference products of the full up-dent index sets.
pub fn cs_shuffle_ratio(
    x: u32,
    y: u32,
    u: &IndexSet,
    d: &IndexSet,
    u2: &IndexSet,
    d2: &IndexSet,
) -> Result<BigRational, FormulaError> {
    check_shuffle_hypothesis(u, d, u2, d2)?;
    let n = u.union(d).len() as u32;
    let n1 = x + y + 2 * n + 1;
    let full = u.union(&d.mirrored(n1));
    let full2 = u2.union(&d2.mirrored(n1));
    if full.len() != u.len() + d.len() || full2.len() != u2.len() + d2.len() {
        return Err(FormulaError::Hypothesis(
            "dent set meets its mirror image".into(),
        ));
    }
    Ok(BigRational::new(
        BigInt::from(delta_prod(&full)),
        BigInt::from(delta_prod(&full2)),
    ))
}

/// Closed form for the centrally symmetric tilings of the region left over
/// when both ferns of the lattice-point-centered instance collapse to single
/// up-triangles of sizes a and c. Requires x and y even.
pub fn mc_b_closed(x: u32, y: u32, a: u32, c: u32) -> Result<BigUint, FormulaError> {
    if x % 2 != 0 || y % 2 != 0 {
        return Err(FormulaError::Parity(format!(
            "x = {x} and y = {y} must both be even"
        )));
    }
    let (xh, yh) = (x / 2, y / 2);
    let mut num = BigInt::from(pp(yh + a + c, yh, c));
    let mut den = BigInt::one();
    for i in 1..=(yh + a) as i64 {
        num *= pochhammer(xh as i64 + i, c);
        den *= pochhammer(i, c);
    }
    for i in 1..=yh as i64 {
        for len in [yh + a, yh + a + c] {
            num *= pochhammer((xh + c) as i64 + i, len);
            den *= pochhammer(c as i64 + i, len);
        }
    }
    signed_exact_div(num, den, "mc_b_closed")
}

/// Which of the two opposite-parity cases of the mid-edge-centered closed
/// form applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BPrimeCase {
    /// x odd, y even.
    XOdd,
    /// x even, y odd.
    YOdd,
}

impl BPrimeCase {
    pub fn for_parities(x: u32, y: u32) -> Result<BPrimeCase, FormulaError> {
        match (x % 2, y % 2) {
            (1, 0) => Ok(BPrimeCase::XOdd),
            (0, 1) => Ok(BPrimeCase::YOdd),
            _ => Err(FormulaError::Parity(format!(
                "x = {x} and y = {y} must have opposite parities"
            ))),
        }
    }
}

/// Closed form for the centrally symmetric tilings of the region left over
/// when both ferns of the mid-edge-centered instance collapse to single
/// up-triangles of sizes a and c.
pub fn mc_bprime_closed(
    x: u32,
    y: u32,
    a: u32,
    c: u32,
    case: BPrimeCase,
) -> Result<BigUint, FormulaError> {
    if BPrimeCase::for_parities(x, y)? != case {
        return Err(FormulaError::Parity(format!(
            "case {case:?} does not match x = {x}, y = {y}"
        )));
    }
    let mut num;
    let mut den = BigInt::one();
    match case {
        BPrimeCase::XOdd => {
            let yh = y / 2;
            num = BigInt::from(pp((x + 1) / 2 + c, yh, c));
            for i in 1..=((x - 1) / 2) as i64 {
                num *= pochhammer((yh + a) as i64 + i, c);
                den *= pochhammer(i, c);
            }
            for i in 1..=yh as i64 {
                for len in [(x - 1) / 2, (x + 1) / 2 + c] {
                    num *= pochhammer((yh + a + c) as i64 + i, len);
                    den *= pochhammer(c as i64 + i, len);
                }
            }
        }
        BPrimeCase::YOdd => {
            let yh = (y - 1) / 2;
            num = BigInt::from(pp(x / 2 + c, yh, c + 1));
            for i in 1..=yh as i64 {
                num *= pochhammer((yh + a + c + 1) as i64 + i, c);
                den *= pochhammer((c + 1) as i64 + i, c);
            }
            for i in 1..=(x / 2) as i64 {
                let long = yh + c + 1;
                num *= pochhammer((yh + a) as i64 + i, long);
                den *= pochhammer(i, long);
                num *= pochhammer((yh + a + 2 * c + 1) as i64 + i, yh);
                den *= pochhammer((2 * c + 1) as i64 + i, yh);
            }
        }
    }
    signed_exact_div(num, den, "mc_bprime_closed")
}

fn fern_starts_up(f: &Fern, name: &str) -> Result<(), FormulaError> {
    if f.first != Orientation::Up {
        return Err(FormulaError::Hypothesis(format!(
            "{name} must start with an up-pointing triangle"
        )));
    }
    Ok(())
}

/// Right-hand side of the closed-form count for the lattice-point-centered
/// symmetric hexagon with two mirrored ferns: the dent-sequence window
/// product over PP, times the collapsed-fern closed form. The dent sequence
/// is read off the constructed region rather than assembled symbolically.
pub fn thm24_rhs(x: u32, y: u32, f1: &Fern, f2: &Fern) -> Result<BigUint, FormulaError> {
    if x % 2 != 0 || y % 2 != 0 {
        return Err(FormulaError::Parity(format!(
            "x = {x} and y = {y} must both be even"
        )));
    }
    fern_starts_up(f1, "first fern")?;
    fern_starts_up(f2, "second fern")?;
    let (a, c) = (f1.total(), f2.total());
    let region = build_e(x, y, &[f1.clone(), f2.clone()], &[(x + y) / 2])?;
    let s_val = s_fn(&region.upper_dent_seq())?;
    let b_val = mc_b_closed(x, y, a, c)?;
    let denom = pp(a, (x + y) / 2, c);
    try_exact_div(s_val * b_val, &denom, "thm24_rhs")
}

/// Mid-edge analogue: the same assembly for the region whose center is the
/// midpoint of a unit gap.
pub fn thm25_rhs(x: u32, y: u32, f1: &Fern, f2: &Fern) -> Result<BigUint, FormulaError> {
    let case = BPrimeCase::for_parities(x, y)?;
    fern_starts_up(f1, "first fern")?;
    fern_starts_up(f2, "second fern")?;
    let (a, c) = (f1.total(), f2.total());
    let region = build_e_prime(x, y, &[f1.clone(), f2.clone()], &[(x + y - 1) / 2])?;
    let s_val = s_fn(&region.upper_dent_seq())?;
    let b_val = mc_bprime_closed(x, y, a, c, case)?;
    let denom = pp(a, (x + y - 1) / 2, c);
    try_exact_div(s_val * b_val, &denom, "thm25_rhs")
}

fn exact_div(num: BigUint, den: &BigUint, what: &str) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: non-integral result");
    q
}

fn try_exact_div(num: BigUint, den: &BigUint, what: &str) -> Result<BigUint, FormulaError> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(FormulaError::NonIntegral(format!("{what}: {num} / {den}")))
    }
}

fn signed_exact_div(num: BigInt, den: BigInt, what: &str) -> Result<BigUint, FormulaError> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || q.is_negative() {
        return Err(FormulaError::NonIntegral(format!("{what}: {num} / {den}")));
    }
    Ok(q.to_biguint().expect("non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hyperfactorial_values() {
        assert_eq!(hyperfactorial(0), BigUint::from(1u32));
        assert_eq!(hyperfactorial(1), BigUint::from(1u32));
        assert_eq!(hyperfactorial(2), BigUint::from(1u32));
        assert_eq!(hyperfactorial(4), BigUint::from(12u32));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(5, 0), BigInt::from(1));
        assert_eq!(pochhammer(3, 2), BigInt::from(12));
        assert_eq!(pochhammer(1, 4), BigInt::from(24));
    }

    #[test]
    fn pp_values() {
        assert_eq!(pp(3, 5, 0), BigUint::from(1u32));
        assert_eq!(pp(1, 1, 1), BigUint::from(2u32));
        assert_eq!(pp(1, 2, 3), BigUint::from(10u32));
        assert_eq!(pp(2, 2, 2), BigUint::from(20u32));
        // direct triple-product cross-check
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                for c in 0..=4u32 {
                    let mut r = BigRational::one();
                    for i in 1..=a as i64 {
                        for j in 1..=b as i64 {
                            for k in 1..=c as i64 {
                                r *= BigRational::new(
                                    BigInt::from(i + j + k - 1),
                                    BigInt::from(i + j + k - 2),
                                );
                            }
                        }
                    }
                    assert!(r.is_integer());
                    assert_eq!(BigInt::from(pp(a, b, c)), r.to_integer());
                }
            }
        }
    }

    #[test]
    fn delta_prod_values() {
        assert_eq!(delta_prod(&idx(&[5])), BigUint::from(1u32));
        assert_eq!(delta_prod(&idx(&[1, 3, 4])), BigUint::from(6u32));
        assert_eq!(delta_prod(&idx(&[1, 2, 6, 9])), BigUint::from(3360u32));
    }

    #[test]
    fn clp_values() {
        // consecutive dents force everything
        assert_eq!(clp_count(3, 2, &idx(&[1, 2, 3])).unwrap(), BigUint::one());
        assert_eq!(clp_count(2, 1, &idx(&[1, 3])).unwrap(), BigUint::from(2u32));
        assert!(matches!(
            clp_count(2, 1, &idx(&[1])),
            Err(FormulaError::DentCount { .. })
        ));
    }

    #[test]
    fn s_fn_values() {
        assert_eq!(s_fn(&[2]).unwrap(), BigUint::one());
        assert_eq!(s_fn(&[1, 1, 1]).unwrap(), BigUint::from(2u32));
        // trailing entry of an even-length sequence is padding
        assert_eq!(s_fn(&[1, 1, 1, 5]).unwrap(), s_fn(&[1, 1, 1]).unwrap());
        assert_eq!(s_fn(&[]).unwrap(), BigUint::one());
        // the three-window case coincides with the boxed product
        for a in 0..=3 {
            for g in 0..=3 {
                for c in 0..=3 {
                    assert_eq!(s_fn(&[a, g, c]).unwrap(), pp(a, g, c), "s({a},{g},{c})");
                }
            }
        }
    }

    #[test]
    fn shuffle_ratio_values() {
        let one = shuffle_ratio(&idx(&[1, 3]), &idx(&[2]), &idx(&[1, 3]), &idx(&[2]), 5).unwrap();
        assert_eq!(one, BigRational::one());
        let r = shuffle_ratio(&idx(&[1, 3]), &idx(&[2]), &idx(&[1]), &idx(&[2, 3]), 1).unwrap();
        assert_eq!(r, BigRational::from(BigInt::from(2)));
        assert!(matches!(
            shuffle_ratio(&idx(&[1]), &idx(&[2]), &idx(&[1]), &idx(&[3]), 1),
            Err(FormulaError::Hypothesis(_))
        ));
    }

    #[test]
    fn cs_shuffle_ratio_values() {
        let one =
            cs_shuffle_ratio(2, 2, &idx(&[1]), &idx(&[2]), &idx(&[1]), &idx(&[2])).unwrap();
        assert_eq!(one, BigRational::one());
        let r = cs_shuffle_ratio(2, 2, &idx(&[1, 2]), &IndexSet::empty(), &idx(&[1]), &idx(&[2]))
            .unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(1), BigInt::from(6)));
    }

    #[test]
    fn mc_closed_forms_trivial_instances() {
        assert_eq!(mc_b_closed(0, 0, 0, 0).unwrap(), BigUint::one());
        // plain 2,2,2 hexagon has four centrally symmetric tilings
        assert_eq!(mc_b_closed(2, 2, 0, 0).unwrap(), BigUint::from(4u32));
        assert!(mc_b_closed(1, 2, 0, 0).is_err());
        assert_eq!(
            mc_bprime_closed(1, 0, 0, 0, BPrimeCase::XOdd).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            mc_bprime_closed(0, 1, 0, 0, BPrimeCase::YOdd).unwrap(),
            BigUint::one()
        );
        assert!(mc_bprime_closed(1, 0, 0, 0, BPrimeCase::YOdd).is_err());
    }

    #[test]
    fn thm_rhs_trivial_instances() {
        let empty = Fern::empty();
        // empty ferns reduce to the plain hexagon count of symmetric tilings
        assert_eq!(thm24_rhs(2, 2, &empty, &empty).unwrap(), BigUint::from(4u32));
        assert_eq!(thm24_rhs(0, 0, &empty, &empty).unwrap(), BigUint::one());
    }
}
