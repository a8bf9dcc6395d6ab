//! The multigraded sign of a permutation acting on homogeneous arguments.

use crate::gvs::Parity;

use super::CochainError;

/// Parities `(x_1, ..., x_k)` of a tuple of homogeneous arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParityWord(pub Vec<Parity>);

impl ParityWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σx = (x_{σ(0)}, ..., x_{σ(k-1)})`.
    pub fn permuted(&self, sigma: &[usize]) -> ParityWord {
        ParityWord(sigma.iter().map(|&i| self.0[i]).collect())
    }

    pub fn total(&self) -> Parity {
        self.0.iter().copied().sum()
    }
}

impl From<Vec<Parity>> for ParityWord {
    fn from(v: Vec<Parity>) -> Self {
        ParityWord(v)
    }
}

/// `sign(σ, x)` as `±1`, for `σ` in one-line notation (`sigma[a] = σ(a)`,
/// 0-based) so that `Φ(X_{σ(0)}, ..., X_{σ(k-1)}) = sign(σ, x) Φ(X_0, ...)`.
///
/// Each inversion contributes `-(-1)^{x x'}` for the parities of the two
/// arguments it exchanges; that is `sign(σ)` times the sign induced on the
/// odd arguments.
pub fn multigraded_sign(sigma: &[usize], x: &ParityWord) -> Result<i32, CochainError> {
    let k = sigma.len();
    if x.len() != k {
        return Err(CochainError::LengthMismatch {
            expected: k,
            found: x.len(),
        });
    }
    let mut seen = vec![false; k];
    for &s in sigma {
        if s >= k || seen[s] {
            return Err(CochainError::NotAPermutation);
        }
        seen[s] = true;
    }
    Ok(if multigraded_sign_is_negative(sigma, &x.0) { -1 } else { 1 })
}

/// Unchecked form of [`multigraded_sign`]: `true` when the sign is `-1`.
pub(crate) fn multigraded_sign_is_negative(sigma: &[usize], x: &[Parity]) -> bool {
    let mut negative = false;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            if sigma[a] > sigma[b] && !(x[sigma[a]].is_odd() && x[sigma[b]].is_odd()) {
                negative = !negative;
            }
        }
    }
    negative
}

/// All `(p, q)`-shuffles of `0..p+q` as the increasing position lists taken
/// by the first block, in lexicographic order.
pub fn shuffles(p: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, p + q, p, &mut Vec::with_capacity(p), &mut out);
    out
}

/// The shuffle permutation in one-line notation: first block `first`, then
/// the remaining positions in increasing order.
pub fn shuffle_permutation(first: &[usize], n: usize) -> Vec<usize> {
    let mut perm = first.to_vec();
    perm.extend((0..n).filter(|i| !first.contains(i)));
    perm
}
