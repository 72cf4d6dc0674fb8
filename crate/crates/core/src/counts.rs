//! Closed-form counting formulas, plus the sums they are derived from.

use crate::rational::{frac, int, Rational};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Order-`k` words in the triangular basis.
pub fn sl3_order_words(k: u64) -> u64 {
    (k + 1).pow(3)
}

/// Dimension of the image of order `<= k` in the triangular case.
pub fn sl3_image_dim(k: u64) -> u64 {
    (k + 1).pow(2) * (k + 2).pow(2) / 4
}

/// Order-`k` words in the staircase image basis.
pub fn g24_order_words(r: u64, k: u64) -> u64 {
    (k + 1) * (k + 2) * ((r + 2) * k + 3) / 6
}

/// `dim S^{<=k}(sl2) - (k+1)^2`.
pub fn ker_rho_1d(k: u64) -> u64 {
    (k + 1) * k * k.saturating_sub(1) / 6
}

/// Symbol-level kernel in one variable.
pub fn ker_symbol_1d(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Symbol-level kernel for `sl3`.
pub fn ker_symbol_sl3(k: u64) -> u64 {
    let poly = k.pow(4) + 28 * k.pow(3) + 323 * k.pow(2) + 1988 * k + 2052;
    (k + 1) * k * k.saturating_sub(1) * poly / 5040
}

/// `dim T_n`.
pub fn tau(n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        (n + 1) * (n + 2) / 2
    }
}

/// `dim S(r0, p0, q0) = (q0 + 1)(p0 + 1 - r0 q0 / 2)`, as a rational.
pub fn sigma(r0: i64, p0: i64, q0: i64) -> Rational {
    int(q0 + 1) * (int(p0 + 1) - frac(r0 * q0, 2))
}

/// Closed form for the nonpositive-`y`-degree complement of `S(r, p, q)`.
pub fn n_rpq(r: i64, p: i64, q: i64) -> Rational {
    frac((q + 1) * (q + 2), 2) * (int((p + 1) * (p + 1 - q * r)) + frac(q * r * r * (3 * q + 1), 12))
}

fn staircase_sum(r: i64, p: i64, q: i64, f0: impl Fn(i64) -> i64) -> i64 {
    let mut total = Rational::from_integer(0.into());
    for j in 0..=q {
        if p - j * r < 0 {
            break;
        }
        for s in 0..=p - j * r {
            let f = if s >= 1 { 2 } else { f0(j) };
            let q0 = q.min((p - s) / r) - j;
            total += int(f) * sigma(r, p - s - j * r, q0);
        }
    }
    assert!(total.is_integer());
    total.to_integer().try_into().expect("small count")
}

/// The word-count sum whose closed form is [`n_rpq`].
pub fn n_rpq_sum(r: i64, p: i64, q: i64) -> i64 {
    staircase_sum(r, p, q, |j| j * r + 1)
}

/// Closed form for odd maps `S(r, p-1, q) -> S(r, p, q)` of nonpositive `y`-degree.
pub fn n_r_minus(r: i64, p: i64, q: i64) -> Rational {
    frac((q + 1) * (q + 2), 2)
        * (int(p * (p + 1)) - int(q * r) * (int(p) + frac(2, 3)) + frac(q * r * r * (3 * q + 1), 12))
}

/// The word-count sum whose closed form is [`n_r_minus`].
pub fn n_r_minus_sum(r: i64, p: i64, q: i64) -> i64 {
    staircase_sum(r, p - 1, q, |j| j * r + 2)
}

/// Closed form for odd maps `S(r, p, q) -> S(r, p-1, q)` of nonpositive `y`-degree.
pub fn n_r_plus(r: i64, p: i64, q: i64) -> Rational {
    frac((q + 1) * (q + 2), 2)
        * (int(p * (p + 1)) - int(q * r) * (int(p) + frac(1, 3)) + frac(q * r * r * (3 * q + 1), 12))
}

/// `N_k^±` for the triangular rank-2 module with gap `delta`; `plus`
/// selects the `+` sign.
pub fn tri_super_n(k: i64, delta: i64, plus: bool) -> i64 {
    let d = if plus { -delta } else { delta };
    let (a, b) = (k + d + 1, k + d + 2);
    if plus && delta > k {
        return 0;
    }
    (k + 1) * (k + 2) * a * b / 4
}

/// The shell sum behind [`tri_super_n`].
pub fn tri_super_n_sum(k: i64, delta: i64, plus: bool) -> i64 {
    let top = if plus { k - delta } else { k };
    if top < 0 {
        return 0;
    }
    let mut total = (delta + 1) * (delta + 2) / 2 * tau(top);
    for l in 1..=top {
        total += 3 * (2 * l + delta) * tau(top - l);
    }
    total
}

/// Order-`<= k` dimension of the triangular rank-2 complement.
pub fn tri_super_dim(k: i64, delta: i64) -> i64 {
    (k + 1) * (k + 2) * (2 * k * k + 6 * k + 4 + delta * delta) / 2
}
