//! Exact evaluation of the published color-count bounds in arbitrary
//! precision: the exponentials overflow 64 bits almost immediately.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, Zero};

/// Every bound keyed by its formula name; integer-valued bounds are kept as
/// integers, the two bounds with a factorial denominator and the recursion
/// value as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub r: usize,
    pub t: usize,
    /// 2^{r−1}(t−1) — rainbow-free classes achieved by construction.
    pub ab_lower: BigUint,
    /// t^{rt}(t−1)/t! — counting upper bound.
    pub alon_upper: BigRational,
    /// (t(r+1))^{2r+1} = (r+1)^{2r+1} t^{2r+1} — first guarantee threshold.
    pub thm1: BigUint,
    /// (r+1)^{r+1}(t−1)t^{2r} — partite reduction threshold.
    pub thm2: BigUint,
    /// r^r(r+1)^{r+1}(t−1)t^{2r}/r! — general-mode reduction threshold.
    pub nonpartite: BigRational,
    /// 8^{rt} — closed-form bound implied by the split recursion.
    pub thm4: BigUint,
    /// Exact value of the split recursion
    /// B(r,t) = 2^{rt}/C(t,⌈t/2⌉) · (B(r,⌈t/2⌉) + ⌊t/2⌋), B(r,1) = 0.
    pub recursion: BigRational,
}

impl BoundReport {
    /// Table rows as (formula name, rendered value), in report order.
    pub fn rows(&self) -> Vec<(&'static str, String)> {
        vec![
            ("ab_lower", self.ab_lower.to_string()),
            ("alon_upper", render_ratio(&self.alon_upper)),
            ("thm1", self.thm1.to_string()),
            ("thm2", self.thm2.to_string()),
            ("nonpartite", render_ratio(&self.nonpartite)),
            ("thm4", self.thm4.to_string()),
            ("recursion", render_ratio(&self.recursion)),
        ]
    }
}

/// Evaluate every bound at (r, t). Callers must pass r, t ≥ 2; the formulas
/// below are published only on that range.
pub fn bounds(r: usize, t: usize) -> BoundReport {
    assert!(r >= 2 && t >= 2, "bounds are defined for r, t >= 2");
    let ab_lower = upow(&BigUint::from(2u32), r - 1) * (t as u32 - 1);
    let alon_upper = BigRational::new(
        signed(upow(&BigUint::from(t), r * t) * (t as u32 - 1)),
        signed(factorial(t)),
    );
    let thm1 = upow(&BigUint::from(t * (r + 1)), 2 * r + 1);
    let thm2 = upow(&BigUint::from(r + 1), r + 1)
        * (t as u32 - 1)
        * upow(&BigUint::from(t), 2 * r);
    let nonpartite = BigRational::new(
        signed(upow(&BigUint::from(r), r) * thm2.clone()),
        signed(factorial(r)),
    );
    let thm4 = upow(&BigUint::from(8u32), r * t);
    BoundReport {
        r,
        t,
        ab_lower,
        alon_upper,
        thm1,
        thm2,
        nonpartite,
        thm4,
        recursion: recursion_bound(r, t),
    }
}

/// The split recursion unrolled exactly: B(r,1) = 0 and
/// B(r,t) = 2^{rt}/C(t,⌈t/2⌉) · (B(r,⌈t/2⌉) + ⌊t/2⌋).
pub fn recursion_bound(r: usize, t: usize) -> BigRational {
    assert!(r >= 1 && t >= 1);
    if t == 1 {
        return BigRational::zero();
    }
    let half_up = t.div_ceil(2);
    let half_down = t / 2;
    let factor = BigRational::new(
        signed(upow(&BigUint::from(2u32), r * t)),
        signed(binomial(t, half_up)),
    );
    let inner = recursion_bound(r, half_up) + BigRational::from(BigInt::from(half_down));
    factor * inner
}

fn signed(x: BigUint) -> BigInt {
    BigInt::from(x)
}

fn upow(base: &BigUint, exp: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

fn binomial(n: usize, k: usize) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn render_ratio(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
