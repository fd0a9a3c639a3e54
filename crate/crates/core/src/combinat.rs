//! Signatures, interlacing, Gelfand-Tsetlin patterns and the shift
//! conventions `ρ`, `ρ̃`, `λ̃`, `λ̄`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// An integer vector indexing polynomials and weights. Most operations
/// require it to be dominant (weakly decreasing); negative parts are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<i64>);

impl Signature {
    pub fn new(parts: Vec<i64>) -> Self {
        Signature(parts)
    }

    /// Parses and checks dominance.
    pub fn dominant(parts: Vec<i64>) -> Result<Self, Error> {
        let s = Signature(parts);
        if s.is_dominant() {
            Ok(s)
        } else {
            Err(Error::NotDominant(s.to_string()))
        }
    }

    pub fn zero(n: usize) -> Self {
        Signature(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `λ + c·(1, …, 1)`.
    pub fn shifted_by(&self, c: i64) -> Signature {
        Signature(self.0.iter().map(|x| x + c).collect())
    }

    /// All but the last part.
    pub fn truncated(&self) -> Signature {
        Signature(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    /// Dominance partial order on signatures of equal size: `self ≤ other`.
    pub fn dominated_by(&self, other: &Signature) -> bool {
        if self.size() != other.size() || self.len() != other.len() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for (x, y) in self.0.iter().zip(&other.0) {
            a += x;
            b += y;
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Comma-separated integers, e.g. `"2,1,0"` or `"1,-1"`; the empty string
    /// is the empty signature.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Signature(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad signature entry {p:?}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(Signature)
    }
}

impl From<Vec<i64>> for Signature {
    fn from(v: Vec<i64>) -> Self {
        Signature(v)
    }
}

impl From<&[i64]> for Signature {
    fn from(v: &[i64]) -> Self {
        Signature(v.to_vec())
    }
}

/// `μ ≺ λ`: `λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{n-1} ≥ λ_n`.
pub fn interlaces(mu: &Signature, lam: &Signature) -> Result<bool, Error> {
    if mu.len() + 1 != lam.len() {
        return Err(Error::LengthMismatch { expected: lam.len().saturating_sub(1), found: mu.len() });
    }
    Ok((0..mu.len()).all(|i| lam.0[i] >= mu.0[i] && mu.0[i] >= lam.0[i + 1]))
}

/// Checks `μ ≺ λ`, reporting a descriptive error otherwise.
pub fn require_interlacing(mu: &Signature, lam: &Signature) -> Result<(), Error> {
    if interlaces(mu, lam)? {
        Ok(())
    } else {
        Err(Error::NotInterlacing { mu: mu.to_string(), lam: lam.to_string() })
    }
}

/// All `μ` of length `n-1` with `λ_{i+1} - slack ≤ μ_i ≤ λ_i`, in
/// lexicographic order. With `slack = 0` these are the `μ ≺ λ`.
pub fn window(lam: &Signature, slack: i64) -> Vec<Signature> {
    let n = lam.len();
    if n == 0 {
        return Vec::new();
    }
    let ranges: Vec<(i64, i64)> = (0..n - 1).map(|i| (lam.0[i + 1] - slack, lam.0[i])).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n - 1);
    fn rec(r: &[(i64, i64)], cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
        if cur.len() == r.len() {
            out.push(Signature(cur.clone()));
            return;
        }
        let (lo, hi) = r[cur.len()];
        for v in lo..=hi {
            cur.push(v);
            rec(r, cur, out);
            cur.pop();
        }
    }
    rec(&ranges, &mut cur, &mut out);
    out
}

/// The signatures interlacing `λ`.
pub fn interlacing(lam: &Signature) -> Vec<Signature> {
    window(lam, 0)
}

/// A Gelfand-Tsetlin pattern: `rows[l-1]` has length `l`, and the last row
/// is the top signature.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GTPattern {
    pub rows: Vec<Signature>,
}

impl GTPattern {
    pub fn top(&self) -> Option<&Signature> {
        self.rows.last()
    }

    pub fn is_valid(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| r.len() == i + 1)
            && self.rows.windows(2).all(|w| interlaces(&w[0], &w[1]).unwrap_or(false))
    }

    fn order_key(&self) -> Vec<i64> {
        self.rows.iter().flat_map(|r| r.0.iter().copied()).collect()
    }
}

/// All Gelfand-Tsetlin patterns with top row `λ`, ordered lexicographically
/// by the concatenation of rows from the bottom up.
pub fn gt_enumerate(lam: &Signature) -> Result<Vec<GTPattern>, Error> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    let mut out = Vec::new();
    let mut rows = vec![lam.clone()];
    fn rec(rows: &mut Vec<Signature>, out: &mut Vec<GTPattern>) {
        let last = rows.last().unwrap();
        if last.len() <= 1 {
            let mut r = rows.clone();
            r.reverse();
            if r.first().is_some_and(|s| s.is_empty()) {
                r.clear();
            }
            out.push(GTPattern { rows: r });
            return;
        }
        for mu in interlacing(last) {
            rows.push(mu);
            rec(rows, out);
            rows.pop();
        }
    }
    rec(&mut rows, &mut out);
    out.sort_by_key(|p| p.order_key());
    Ok(out)
}

/// `(|μ^n| - |μ^{n-1}|, …, |μ^2| - |μ^1|, |μ^1|)`.
pub fn gt_weight(p: &GTPattern) -> Vec<i64> {
    let sizes: Vec<i64> = p.rows.iter().map(|r| r.size()).collect();
    (0..sizes.len())
        .rev()
        .map(|l| sizes[l] - if l == 0 { 0 } else { sizes[l - 1] })
        .collect()
}

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HalfInt {
    pub doubled: i64,
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// `ρ_i = (n + 1 - 2i) / 2`.
pub fn rho(n: usize) -> Vec<HalfInt> {
    rho_doubled(n).into_iter().map(|d| HalfInt { doubled: d }).collect()
}

/// `2ρ_i = n + 1 - 2i`.
pub fn rho_doubled(n: usize) -> Vec<i64> {
    (1..=n as i64).map(|i| n as i64 + 1 - 2 * i).collect()
}

/// `ρ̃_i = -(i - 1)`.
pub fn rho_tilde(n: usize) -> Vec<i64> {
    (0..n as i64).map(|i| -i).collect()
}

/// The two shift conventions: `λ̃_i = λ_i - (k-1)(i-1)` and
/// `λ̄_i = λ_i - k(i-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ShiftVariant {
    Tilde,
    Bar,
}

/// A signature together with a shift convention.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedSig {
    pub base: Signature,
    pub k: i64,
    pub variant: ShiftVariant,
}

impl ShiftedSig {
    pub fn values(&self) -> Vec<i64> {
        shift(&self.base, self.k, self.variant)
    }
}

pub fn shift(lam: &Signature, k: i64, variant: ShiftVariant) -> Vec<i64> {
    let step = match variant {
        ShiftVariant::Tilde => k - 1,
        ShiftVariant::Bar => k,
    };
    lam.0.iter().enumerate().map(|(i, x)| x - step * i as i64).collect()
}

/// `λ̃`.
pub fn tilde(lam: &Signature, k: i64) -> Vec<i64> {
    shift(lam, k, ShiftVariant::Tilde)
}

/// `λ̄`.
pub fn bar(lam: &Signature, k: i64) -> Vec<i64> {
    shift(lam, k, ShiftVariant::Bar)
}

/// All chains `μ^1, …, μ^n = λ` with
/// `μ^{i+1}_j ≥ μ^i_j ≥ μ^{i+1}_{j+1} - (k-1)`, ordered lexicographically by
/// the concatenated rows from the bottom up. The rows need not be dominant.
pub fn shifted_chain_enumerate(lam: &Signature, k: i64) -> Result<Vec<Vec<Signature>>, Error> {
    chains(lam, k, false)
}

/// The chains of [`shifted_chain_enumerate`] whose rows are all dominant.
pub fn dominant_shifted_chains(lam: &Signature, k: i64) -> Result<Vec<Vec<Signature>>, Error> {
    chains(lam, k, true)
}

fn chains(lam: &Signature, k: i64, dominant_only: bool) -> Result<Vec<Vec<Signature>>, Error> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.to_string()));
    }
    if k < 1 {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    let mut out = Vec::new();
    let mut rows = vec![lam.clone()];
    fn rec(rows: &mut Vec<Signature>, k: i64, dom: bool, out: &mut Vec<Vec<Signature>>) {
        let last = rows.last().unwrap();
        if last.len() <= 1 {
            let mut r = rows.clone();
            r.reverse();
            out.push(r);
            return;
        }
        for mu in window(last, k - 1) {
            if dom && !mu.is_dominant() {
                continue;
            }
            rows.push(mu);
            rec(rows, k, dom, out);
            rows.pop();
        }
    }
    if lam.is_empty() {
        return Ok(vec![vec![lam.clone()]]);
    }
    rec(&mut rows, k, dominant_only, &mut out);
    out.sort_by_key(|c| c.iter().flat_map(|r| r.0.iter().copied()).collect::<Vec<_>>());
    Ok(out)
}

/// All dominant signatures of length `n` with non-negative parts summing to
/// `d`, in decreasing lexicographic order.
pub fn partitions(d: i64, n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(rem: i64, max: i64, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
        if cur.len() == n {
            if rem == 0 {
                out.push(Signature(cur.clone()));
            }
            return;
        }
        let slots = (n - cur.len()) as i64;
        for v in (0..=max.min(rem)).rev() {
            if v * slots < rem {
                break;
            }
            cur.push(v);
            rec(rem - v, v, n, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Signature(Vec::new()));
        }
        return out;
    }
    rec(d, d, n, &mut cur, &mut out);
    out
}

/// All partitions of length `n` with `|λ| ≤ maxdeg`, by increasing size.
pub fn partitions_up_to(maxdeg: i64, n: usize) -> Vec<Signature> {
    (0..=maxdeg).flat_map(|d| partitions(d, n)).collect()
}

/// Distinct permutations of a multiset, in lexicographic order.
pub fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur: Vec<i64> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// `k`-element subsets of `0..n` as sorted index vectors, in lexicographic
/// order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[i64]) -> Signature {
        Signature(v.to_vec())
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&sig(&[1]), &sig(&[2, 0])).unwrap());
        assert!(!interlaces(&sig(&[3]), &sig(&[2, 0])).unwrap());
        assert!(interlaces(&sig(&[1, 0]), &sig(&[1, 1, 0])).unwrap());
        assert!(interlaces(&sig(&[1, 0]), &sig(&[2, 0])).is_err());
    }

    #[test]
    fn gt_enumeration_examples() {
        assert_eq!(gt_enumerate(&sig(&[1, 0])).unwrap().len(), 2);
        assert_eq!(gt_enumerate(&sig(&[2, 0])).unwrap().len(), 3);
        assert_eq!(gt_enumerate(&sig(&[1, 1, 0])).unwrap().len(), 3);
        assert_eq!(gt_enumerate(&sig(&[])).unwrap().len(), 1);
        assert!(gt_enumerate(&sig(&[0, 1])).is_err());
    }

    #[test]
    fn gt_weight_examples() {
        let p = GTPattern { rows: vec![sig(&[0]), sig(&[1, 0])] };
        assert_eq!(gt_weight(&p), vec![1, 0]);
        let p = GTPattern { rows: vec![sig(&[1]), sig(&[1, 0])] };
        assert_eq!(gt_weight(&p), vec![0, 1]);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(rho(3).iter().map(|h| h.to_string()).collect::<Vec<_>>(), ["1", "0", "-1"]);
        assert_eq!(rho(2)[0].to_string(), "1/2");
        assert_eq!(rho_tilde(4), vec![0, -1, -2, -3]);
        assert_eq!(shift(&sig(&[2, 0]), 2, ShiftVariant::Bar), vec![2, -2]);
        assert_eq!(tilde(&sig(&[2, 0, 0]), 3), vec![2, -2, -4]);
    }

    #[test]
    fn chain_examples() {
        let c = shifted_chain_enumerate(&sig(&[0, 0]), 2).unwrap();
        let bottoms: Vec<_> = c.iter().map(|ch| ch[0].clone()).collect();
        assert_eq!(bottoms, vec![sig(&[-1]), sig(&[0])]);
        let lam = sig(&[2, 1, 0]);
        assert_eq!(shifted_chain_enumerate(&lam, 1).unwrap().len(), gt_enumerate(&lam).unwrap().len());
    }

    #[test]
    fn signature_parsing() {
        assert_eq!("2,1,0".parse::<Signature>().unwrap(), sig(&[2, 1, 0]));
        assert_eq!("1,-1".parse::<Signature>().unwrap(), sig(&[1, -1]));
        assert!("1,x".parse::<Signature>().is_err());
        assert_eq!(sig(&[1, -1]).to_string(), "(1,-1)");
    }

    #[test]
    fn helpers() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(partitions(4, 3).len(), 4);
        assert!(sig(&[1, 1]).dominated_by(&sig(&[2, 0])));
    }
}
