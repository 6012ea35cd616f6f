//! Counts of restricted k-subsets of linear and circular arrangements, and
//! the closed forms for the center number of several graph families.
//!
//! | fn   | arrangement | forbidden                         |
//! |------|-------------|-----------------------------------|
//! | `L`  | linear      | three consecutive chosen          |
//! | `L1` | linear      | two chosen at distance two        |
//! | `L2` | linear      | two consecutive chosen            |
//! | `R`  | circular    | three consecutive chosen          |
//! | `R1` | circular    | two chosen at cyclic distance two |
//!
//! Arguments are signed: a negative size or count, or a count larger than
//! the arrangement, evaluates to 0. This lets the recurrences and the
//! alternating sums truncate naturally.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CountFn {
    L,
    L1,
    L2,
    R,
    R1,
}

impl CountFn {
    pub const ALL: [CountFn; 5] = [CountFn::L, CountFn::L1, CountFn::L2, CountFn::R, CountFn::R1];

    pub fn is_circular(self) -> bool {
        matches!(self, CountFn::R | CountFn::R1)
    }

    /// Value via closed form or recurrence.
    pub fn eval(self, n: i64, k: i64) -> Result<u64> {
        match self {
            CountFn::L => count_l(n, k),
            CountFn::L1 => count_l1(n, k),
            CountFn::L2 => count_l2(n, k),
            CountFn::R => count_r(n, k),
            CountFn::R1 => count_r1(n, k),
        }
    }
}

impl fmt::Display for CountFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CountFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "L" => Ok(CountFn::L),
            "L1" => Ok(CountFn::L1),
            "L2" => Ok(CountFn::L2),
            "R" => Ok(CountFn::R),
            "R1" => Ok(CountFn::R1),
            _ => Err(Error::BadParams(format!("unknown counting function {s:?}"))),
        }
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<u64> {
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc is C(n, i) * (n - i) / (i + 1) = C(n, i + 1)
        acc = acc.checked_mul(n - i).ok_or(Error::Overflow("binomial"))? / (i + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial"))
}

fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// No three consecutive: the coefficient of `t^k` in
/// `(1 + t + t^2)^(n - k + 1)`, by truncated polynomial powering.
pub fn count_l(n: i64, k: i64) -> Result<u64> {
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    let k = k as usize;
    let exponent = n as usize - k + 1;
    let mut poly = vec![0u64; k + 1];
    poly[0] = 1;
    for _ in 0..exponent {
        for d in (0..=k).rev() {
            let mut c = poly[d];
            if d >= 1 {
                c = add(c, poly[d - 1], "L")?;
            }
            if d >= 2 {
                c = add(c, poly[d - 2], "L")?;
            }
            poly[d] = c;
        }
    }
    Ok(poly[k])
}

/// The same count as an inclusion-exclusion sum:
/// `sum_j (-1)^j C(n-k+1, j) C(n-3j, k-3j)`.
pub fn count_l_alternating(n: i64, k: i64) -> Result<u64> {
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    let m = n - k + 1;
    let mut total: i128 = 0;
    for j in 0..=k / 3 {
        let term = binomial(m, j)? as i128 * binomial(n - 3 * j, k - 3 * j)? as i128;
        total += if j % 2 == 0 { term } else { -term };
    }
    u64::try_from(total).map_err(|_| Error::Overflow("L"))
}

/// No two consecutive: `C(n - k + 1, k)`.
pub fn count_l2(n: i64, k: i64) -> Result<u64> {
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    binomial(n - k + 1, k)
}

/// No two at distance two: odd and even positions are independent
/// no-two-consecutive problems of sizes `ceil(n/2)` and `floor(n/2)`.
pub fn count_l1(n: i64, k: i64) -> Result<u64> {
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    let (odd, even) = ((n + 1) / 2, n / 2);
    let mut total = 0u64;
    for l in 0..=k {
        total = add(total, mul(count_l2(odd, l)?, count_l2(even, k - l)?, "L1")?, "L1")?;
    }
    Ok(total)
}

fn require_circular(n: i64) -> Result<()> {
    if n < 4 {
        Err(Error::BadParams(format!("circular counts need n >= 4, got {n}")))
    } else {
        Ok(())
    }
}

/// Circular, no three consecutive. Splits on whether position `n` and its
/// neighbours are chosen.
pub fn count_r(n: i64, k: i64) -> Result<u64> {
    require_circular(n)?;
    match k {
        _ if k < 0 || k > n => Ok(0),
        0 => Ok(1),
        1 => Ok(n as u64),
        _ => {
            let a = count_l(n - 1, k)?;
            let b = mul(2, count_l(n - 4, k - 2)?, "R")?;
            let c = count_l(n - 3, k - 1)?;
            add(add(a, b, "R")?, c, "R")
        }
    }
}

/// Circular, no two at cyclic distance two. Splits on the choice status of
/// positions `n - 1` and `n`.
pub fn count_r1(n: i64, k: i64) -> Result<u64> {
    require_circular(n)?;
    match k {
        _ if k < 0 || k > n => Ok(0),
        0 => Ok(1),
        1 => Ok(n as u64),
        2 if n <= 5 => Ok(n as u64),
        _ if n <= 5 => Ok(0),
        _ => {
            let a = count_l1(n - 2, k)?;
            let b = mul(2, count_l1(n - 5, k - 1)?, "R1")?;
            let c = mul(3, count_l1(n - 6, k - 2)?, "R1")?;
            add(add(a, b, "R1")?, c, "R1")
        }
    }
}

/// Largest `n` accepted by [`oracle_count`].
pub const ORACLE_MAX_N: i64 = 24;

/// Exhaustive count over all `k`-subsets of `0..n` encoded as bitmasks,
/// checking the forbidden pattern of `label` directly.
pub fn oracle_count(label: CountFn, n: i64, k: i64) -> Result<u64> {
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge { n: n as usize, cap: ORACLE_MAX_N as usize });
    }
    if label.is_circular() {
        require_circular(n)?;
    }
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    let n = n as u32;
    let full: u64 = (1u64 << n) - 1;
    let rot = |m: u64, s: u32| ((m >> s) | (m << (n - s))) & full;
    let ok = |m: u64| match label {
        CountFn::L => m & (m >> 1) & (m >> 2) == 0,
        CountFn::L1 => m & (m >> 2) == 0,
        CountFn::L2 => m & (m >> 1) == 0,
        CountFn::R => m & rot(m, 1) & rot(m, 2) == 0,
        CountFn::R1 => m & rot(m, 2) == 0,
    };
    if k == 0 {
        return Ok(1);
    }
    // Gosper's hack: iterate the k-bit masks below 2^n in increasing order
    let mut m: u64 = (1u64 << k) - 1;
    let mut count = 0;
    while m <= full {
        if ok(m) {
            count += 1;
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    Ok(count)
}

/// Values of one counting function for `n` in a range and all `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub label: CountFn,
    pub values: BTreeMap<(i64, i64), u64>,
}

impl CountTable {
    pub fn build(label: CountFn, ns: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for n in ns {
            for k in 0..=n {
                values.insert((n, k), label.eval(n, k)?);
            }
        }
        Ok(CountTable { label, values })
    }

    pub fn get(&self, n: i64, k: i64) -> Option<u64> {
        self.values.get(&(n, k)).copied()
    }

    pub fn row(&self, n: i64) -> Vec<u64> {
        self.values.range((n, 0)..=(n, i64::MAX)).map(|(_, &v)| v).collect()
    }
}

/// Graph families with a closed-form center number. Cycles are indexed by
/// half-length: `EvenCycle(h)` is `C_{2h}`, `OddCycle(h)` is `C_{2h+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CnFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Tree(usize),
    KnMinusE(usize),
    Wheel(usize),
    EvenCycle(usize),
    OddCycle(usize),
}

impl CnFamily {
    pub const TAGS: [&'static str; 7] =
        ["complete", "complete-bipartite", "tree", "kn-minus-e", "wheel", "even-cycle", "odd-cycle"];

    pub fn from_tag(tag: &str, m: Option<usize>, n: usize) -> Result<Self> {
        Ok(match tag {
            "complete" => CnFamily::Complete(n),
            "complete-bipartite" => CnFamily::CompleteBipartite(
                m.ok_or_else(|| Error::BadParams("complete-bipartite needs --m".into()))?,
                n,
            ),
            "tree" => CnFamily::Tree(n),
            "kn-minus-e" => CnFamily::KnMinusE(n),
            "wheel" => CnFamily::Wheel(n),
            "even-cycle" => CnFamily::EvenCycle(n),
            "odd-cycle" => CnFamily::OddCycle(n),
            other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
        })
    }
}

/// Closed-form center number.
///
/// For `K_{m,n}` this is `mn + m + n + 3`: `V`, both parts, the `m + n`
/// singletons and the `mn` cross pairs.
pub fn cn_formula(family: CnFamily) -> Result<u64> {
    let bad = |msg: &str| Err(Error::BadParams(msg.into()));
    match family {
        CnFamily::Complete(n) if n >= 2 => Ok(n as u64 + 1),
        CnFamily::Complete(_) => bad("cn(K_n) formula needs n >= 2"),
        CnFamily::CompleteBipartite(m, n) if m > 1 && n > 1 => {
            let (m, n) = (m as u64, n as u64);
            Ok(m * n + m + n + 3)
        }
        CnFamily::CompleteBipartite(..) => bad("cn(K_{m,n}) formula needs m, n > 1"),
        CnFamily::Tree(n) if n >= 1 => Ok(2 * n as u64 - 1),
        CnFamily::Tree(_) => bad("a tree has at least one vertex"),
        CnFamily::KnMinusE(n) if n >= 4 => Ok(n as u64 + 4),
        CnFamily::KnMinusE(_) => bad("cn(K_n - e) formula needs n >= 4"),
        CnFamily::Wheel(5) => Ok(19),
        CnFamily::Wheel(n) if n >= 6 => Ok(4 * n as u64 - 3),
        CnFamily::Wheel(_) => bad("cn(W_n) formula needs n >= 5 vertices"),
        CnFamily::EvenCycle(h) if h >= 2 => {
            let n = 2 * h as i64;
            let top = 4 * h as i64 / 3;
            (1..=top).try_fold(1u64, |acc, k| add(acc, count_r(n, k)?, "cn"))
        }
        CnFamily::EvenCycle(_) => bad("even-cycle formula needs C_2n with n >= 2"),
        CnFamily::OddCycle(h) if h >= 2 => {
            let n = 2 * h as i64 + 1;
            (1..=h as i64).try_fold(1u64, |acc, k| add(acc, count_r1(n, k)?, "cn"))
        }
        CnFamily::OddCycle(_) => bad("odd-cycle formula needs C_{2n+1} with n >= 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Reference values from a standalone enumeration over
    /// `itertools.combinations`, independent of the bitmask oracle.
    #[test]
    fn frozen_examples() {
        assert_eq!(count_l(5, 3).unwrap(), 7);
        assert_eq!(count_l(3, 3).unwrap(), 0);
        assert_eq!(count_l2(4, 2).unwrap(), 3);
        assert_eq!(count_l2(5, 3).unwrap(), 1);
        assert_eq!(count_l1(4, 2).unwrap(), 4);
        assert_eq!(count_l1(5, 3).unwrap(), 2);
        assert_eq!(count_r(6, 3).unwrap(), 14);
        assert_eq!(count_r(6, 4).unwrap(), 3);
        assert_eq!(count_r1(5, 2).unwrap(), 5);
        assert_eq!(count_r1(4, 2).unwrap(), 4);
        assert_eq!(count_r1(7, 3).unwrap(), 7);
        assert_eq!(count_r1(9, 4).unwrap(), 9);
        let row: Vec<u64> = (0..=10).map(|k| count_l(10, k).unwrap()).collect();
        assert_eq!(row, vec![1, 10, 45, 112, 161, 126, 45, 4, 0, 0, 0]);
    }

    #[test]
    fn trivial_values() {
        for n in 0..12 {
            assert_eq!(count_l(n, 0).unwrap(), 1);
            assert_eq!(count_l2(n, 1).unwrap(), n as u64);
            assert_eq!(count_l1(n, 1).unwrap(), n as u64);
        }
        for n in 4..12 {
            assert_eq!(count_r(n, 1).unwrap(), n as u64);
            assert_eq!(count_r1(n, 0).unwrap(), 1);
        }
        assert_eq!(count_l(-1, 0).unwrap(), 0);
        assert_eq!(count_l2(3, 4).unwrap(), 0);
    }

    #[test]
    fn circular_needs_four() {
        assert!(matches!(count_r(3, 1), Err(Error::BadParams(_))));
        assert!(matches!(count_r1(2, 0), Err(Error::BadParams(_))));
        assert!(matches!(oracle_count(CountFn::R, 3, 1), Err(Error::BadParams(_))));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_count(CountFn::L, 5, 3).unwrap(), 7);
        assert_eq!(oracle_count(CountFn::R1, 5, 2).unwrap(), 5);
        assert_eq!(oracle_count(CountFn::L2, 4, 2).unwrap(), 3);
        assert!(matches!(oracle_count(CountFn::L, 25, 1), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3).unwrap(), 120);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(-2, 1).unwrap(), 0);
        assert_eq!(binomial(64, 32).unwrap(), 1_832_624_140_942_590_534);
        assert_eq!(binomial(68, 34), Err(Error::Overflow("binomial")));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(count_l2(200, 60), Err(Error::Overflow(_))));
    }

    #[test]
    fn fibonacci_row_sums() {
        let mut fib = vec![0u64, 1];
        for i in 2..40 {
            fib.push(fib[i - 1] + fib[i - 2]);
        }
        for n in 0..30i64 {
            let s: u64 = (0..=n).map(|k| count_l2(n, k).unwrap()).sum();
            assert_eq!(s, fib[n as usize + 2], "n = {n}");
        }
    }

    #[test]
    fn cn_examples() {
        assert_eq!(cn_formula(CnFamily::Complete(4)).unwrap(), 5);
        assert_eq!(cn_formula(CnFamily::EvenCycle(3)).unwrap(), 39);
        assert_eq!(cn_formula(CnFamily::OddCycle(2)).unwrap(), 11);
        assert_eq!(cn_formula(CnFamily::Wheel(5)).unwrap(), 19);
        assert_eq!(cn_formula(CnFamily::Wheel(6)).unwrap(), 21);
        assert_eq!(cn_formula(CnFamily::CompleteBipartite(2, 3)).unwrap(), 14);
        assert_eq!(cn_formula(CnFamily::KnMinusE(4)).unwrap(), 8);
        assert_eq!(cn_formula(CnFamily::Tree(4)).unwrap(), 7);
        assert!(cn_formula(CnFamily::KnMinusE(3)).is_err());
        assert!(cn_formula(CnFamily::CompleteBipartite(1, 3)).is_err());
        assert!(cn_formula(CnFamily::OddCycle(1)).is_err());
    }

    #[test]
    fn table_rows() {
        let t = CountTable::build(CountFn::R, 4..=6).unwrap();
        assert_eq!(t.row(6), vec![1, 6, 15, 14, 3, 0, 0]);
        assert_eq!(t.get(4, 2), Some(6));
        assert_eq!(t.get(3, 0), None);
    }

    proptest! {
        #[test]
        fn generating_function_matches_alternating_sum(n in 0i64..40, k in 0i64..40) {
            prop_assert_eq!(count_l(n, k).unwrap(), count_l_alternating(n, k).unwrap());
        }

        #[test]
        fn formulas_match_oracle(n in 4i64..=16, k in 0i64..=16, which in 0usize..5) {
            let label = CountFn::ALL[which];
            prop_assert_eq!(label.eval(n, k).unwrap(), oracle_count(label, n, k).unwrap());
        }
    }
}
