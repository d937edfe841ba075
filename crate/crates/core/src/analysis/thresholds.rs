use std::cmp::Ordering;

use crate::constructions::Rational;
use crate::error::{Error, Result};

/// A real number known to lie in `[lo / den, hi / den]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifiedInterval {
    pub lo: u128,
    pub hi: u128,
    pub den: u128,
}

impl CertifiedInterval {
    pub fn lo_f64(&self) -> f64 {
        self.lo as f64 / self.den as f64
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi as f64 / self.den as f64
    }

    pub fn midpoint(&self) -> f64 {
        (self.lo_f64() + self.hi_f64()) / 2.0
    }

    /// Whether `(hi - lo) / lo < 1 / inv_eps`.
    pub fn relative_width_below(&self, inv_eps: u128) -> bool {
        (self.hi - self.lo) * inv_eps < self.lo
    }

    /// Certified comparison with a non-negative rational: `Some(Less)` if the
    /// whole interval is below `r`, `Some(Greater)` if it is at or above `r`
    /// and not a point equal to `r`, `None` if `r` falls inside.
    pub fn cmp_rational(&self, r: Rational) -> Option<Ordering> {
        let (p, q) = (*r.numer() as u128, *r.denom() as u128);
        let scaled = |x: u128| x.checked_mul(q).expect("interval comparison overflow");
        let rhs = p.checked_mul(self.den).expect("interval comparison overflow");
        if scaled(self.hi) < rhs {
            Some(Ordering::Less)
        } else if scaled(self.lo) > rhs {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && scaled(self.lo) == rhs {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r.checked_mul(r).is_none_or(|sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}

/// Encloses `(a + sqrt(d)) / (2k)` using the largest scale `2^m` with `d·4^m < 2^126`.
fn enclose(a: u128, d: u128, k: u128) -> CertifiedInterval {
    let mut m = 0u32;
    while m < 60 && (d << (2 * (m + 1))) >> (2 * (m + 1)) == d && d << (2 * (m + 1)) < (1u128 << 126) {
        m += 1;
    }
    let scaled = d << (2 * m);
    let s = isqrt(scaled);
    let exact = s * s == scaled;
    let base = a << m;
    CertifiedInterval { lo: base + s, hi: base + s + u128::from(!exact), den: (2 * k) << m }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofThresholds {
    pub k: usize,
    /// `(41k²+36k + sqrt((41k²+36k)² + 4k(54k³-156k²))) / 2k`
    pub n0: CertifiedInterval,
    /// `(35k²+72k + sqrt((35k²+72k)² - 4k(54k³+24k²))) / 2k`
    pub n1: CertifiedInterval,
    /// `42.5k + 48`
    pub hypothesis_bound: Rational,
    /// `(85k+72)/2`, the intermediate upper estimate for `n0`.
    pub n0_estimate: Rational,
    /// `(67k+145)/2`, the intermediate upper estimate for `n1`.
    pub n1_estimate: Rational,
}

impl ProofThresholds {
    /// Certified `42.5k + 48 > max(n0, n1)`; `None` if undecided at this precision.
    pub fn bound_exceeds_both(&self) -> Option<bool> {
        let below = |iv: &CertifiedInterval| iv.cmp_rational(self.hypothesis_bound).map(|o| o == Ordering::Less);
        Some(below(&self.n0)? && below(&self.n1)?)
    }

    /// Certified `n0 < (85k+72)/2`.
    pub fn n0_estimate_holds(&self) -> Option<bool> {
        self.n0.cmp_rational(self.n0_estimate).map(|o| o == Ordering::Less)
    }

    /// Certified `n1 < (67k+145)/2`.
    pub fn n1_estimate_holds(&self) -> Option<bool> {
        self.n1.cmp_rational(self.n1_estimate).map(|o| o == Ordering::Less)
    }
}

pub const MAX_THRESHOLD_K: usize = 10_000_000;

pub fn proof_thresholds(k: usize) -> Result<ProofThresholds> {
    if !(3..=MAX_THRESHOLD_K).contains(&k) {
        return Err(Error::InvalidParams(format!("thresholds need 3 <= k <= {MAX_THRESHOLD_K}, got {k}")));
    }
    let kk = k as u128;
    let a0 = 41 * kk * kk + 36 * kk;
    let d0 = a0 * a0 + 4 * kk * (54 * kk * kk * kk) - 4 * kk * (156 * kk * kk);
    let a1 = 35 * kk * kk + 72 * kk;
    let d1 = (a1 * a1)
        .checked_sub(4 * kk * (54 * kk * kk * kk + 24 * kk * kk))
        .ok_or_else(|| Error::InvalidParams("negative radicand".into()))?;
    let ki = k as i64;
    Ok(ProofThresholds {
        k,
        n0: enclose(a0, d0, kk),
        n1: enclose(a1, d1, kk),
        hypothesis_bound: Rational::new(85 * ki + 96, 2),
        n0_estimate: Rational::new(85 * ki + 72, 2),
        n1_estimate: Rational::new(67 * ki + 145, 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_edges() {
        for x in [0u128, 1, 2, 3, 4, 15, 16, 17, 1 << 100, (1 << 126) - 1] {
            let r = isqrt(x);
            assert!(r * r <= x && (r + 1) * (r + 1) > x, "{x}");
        }
    }

    #[test]
    fn small_k_values() {
        let t = proof_thresholds(3).unwrap();
        assert!((t.n0.midpoint() - 159.1).abs() < 0.1, "{}", t.n0.midpoint());
        assert!((t.n1.midpoint() - 173.8).abs() < 0.1, "{}", t.n1.midpoint());
        assert_eq!(t.hypothesis_bound, Rational::new(351, 2));
        assert_eq!(t.bound_exceeds_both(), Some(true));
        assert_eq!(t.n1_estimate_holds(), Some(false));

        let t = proof_thresholds(10).unwrap();
        assert_eq!(t.hypothesis_bound, Rational::from_integer(473));
        assert_eq!(t.bound_exceeds_both(), Some(true));
    }

    #[test]
    fn intermediate_estimates() {
        let t = proof_thresholds(100).unwrap();
        assert_eq!(t.n0_estimate_holds(), Some(true));
        assert!(t.hypothesis_bound > t.n0_estimate);
        assert_eq!(proof_thresholds(17).unwrap().n1_estimate_holds(), Some(false));
        assert_eq!(proof_thresholds(18).unwrap().n1_estimate_holds(), Some(true));
    }

    #[test]
    fn narrow_intervals() {
        for k in [3, 4, 1000, 1_000_000] {
            let t = proof_thresholds(k).unwrap();
            assert!(t.n0.relative_width_below(1_000_000_000));
            assert!(t.n1.relative_width_below(1_000_000_000));
        }
    }

    #[test]
    fn rejects_small_k() {
        assert!(proof_thresholds(2).is_err());
    }
}
