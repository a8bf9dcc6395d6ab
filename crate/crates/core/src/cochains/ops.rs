//! Wedge product, the `[·,·]∧` bracket and the (covariant) Chevalley
//! differentials on graded-antisymmetric cochains.
//!
//! Both products are computed as sums over shuffles: each coset of
//! `S_p × S_q` in `S_{p+q}` contributes one identical summand, so the
//! shuffle sum equals the `1/(p! q!)`-normalised sum over all permutations.
//!
//! Sign convention of the differential, for arguments `X_0, ..., X_p` of
//! parities `x_0, ..., x_p`:
//!
//! ```text
//! a_i    = x_i (x_0 + ... + x_{i-1}) + i
//! a_ij   = a_i + a_j + x_i x_j
//! (δ_α Φ)(X_0..X_p) = Σ_i (-1)^{x_i y + a_i} α_{X_i} Φ(.., X̂_i, ..)
//!                   + Σ_{i<j} (-1)^{a_ij} Φ([X_i, X_j], .., X̂_i, .., X̂_j, ..)
//! ```
//!
//! The prefix sum in `a_i` runs over every preceding argument, starting at
//! `X_0`.

use num_traits::Zero;

use crate::gvs::{axpy, zero_vector, Parity, Scalar, SuperVectorSpace};
use crate::superlie::SuperLieAlgebra;

use super::cochain::{canonical_tuples, Cochain, Connection};
use super::sign::{multigraded_sign_is_negative, shuffle_permutation, shuffles};
use super::CochainError;

fn minus_one(odd: bool) -> Scalar {
    Scalar::from_integer(if odd { -1 } else { 1 }.into())
}

/// Sign and weight factor of one shuffle term: `sign(σ, x) (-1)^{w b}` where
/// `b` is the parity sum of the first block.
fn shuffle_factor(tuple: &[usize], first: &[usize], source: &SuperVectorSpace, w: Parity) -> bool {
    let x: Vec<Parity> = tuple.iter().map(|&i| source.parity(i)).collect();
    let sigma = shuffle_permutation(first, tuple.len());
    let b: Parity = first.iter().map(|&a| x[a]).sum();
    multigraded_sign_is_negative(&sigma, &x) ^ (w * b).is_odd()
}

fn split(tuple: &[usize], first: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = first.iter().map(|&i| tuple[i]).collect();
    let b = (0..tuple.len())
        .filter(|i| !first.contains(i))
        .map(|i| tuple[i])
        .collect();
    (a, b)
}

/// `ψ ∧ Φ` for a scalar-valued `ψ` (target the trivial even line).
pub fn wedge(psi: &Cochain, phi: &Cochain) -> Result<Cochain, CochainError> {
    if !psi.target().is_trivial_line() {
        return Err(CochainError::NotScalar);
    }
    if psi.source() != phi.source() {
        return Err(CochainError::Incompatible);
    }
    let (q, p) = (psi.arity(), phi.arity());
    let source = phi.source();
    let mut out = Cochain::zero(
        source.clone(),
        phi.target().clone(),
        q + p,
        psi.weight() + phi.weight(),
    );
    let blocks = shuffles(q, p);
    for t in canonical_tuples(source.parities(), q + p) {
        let mut value = zero_vector(phi.target().dim());
        for first in &blocks {
            let (a, b) = split(&t, first);
            let Some(s) = psi.canonical_value(&a) else { continue };
            let Some(v) = phi.canonical_value(&b) else { continue };
            let c = minus_one(shuffle_factor(&t, first, source, phi.weight())) * &s[0];
            axpy(&mut value, &c, v);
        }
        out.insert_unchecked(t, value);
    }
    Ok(out)
}

/// `[Φ, Ψ]∧` with values bracketed in `h`.
pub fn nr_bracket(
    phi: &Cochain,
    psi: &Cochain,
    h: &SuperLieAlgebra,
) -> Result<Cochain, CochainError> {
    if phi.source() != psi.source() {
        return Err(CochainError::Incompatible);
    }
    if phi.target().parities() != h.space().parities()
        || psi.target().parities() != h.space().parities()
    {
        return Err(CochainError::TargetNotAlgebra);
    }
    let (p, q) = (phi.arity(), psi.arity());
    let source = phi.source();
    let mut out = Cochain::zero(
        source.clone(),
        phi.target().clone(),
        p + q,
        phi.weight() + psi.weight(),
    );
    let blocks = shuffles(p, q);
    for t in canonical_tuples(source.parities(), p + q) {
        let mut value = zero_vector(h.dim());
        for first in &blocks {
            let (a, b) = split(&t, first);
            let Some(u) = phi.canonical_value(&a) else { continue };
            let Some(v) = psi.canonical_value(&b) else { continue };
            let c = minus_one(shuffle_factor(&t, first, source, psi.weight()));
            axpy(&mut value, &c, &h.bracket(u, v));
        }
        out.insert_unchecked(t, value);
    }
    Ok(out)
}

/// Covariant exterior derivative `δ_α Φ`; see the module docs for signs.
pub fn covariant_delta(
    g: &SuperLieAlgebra,
    alpha: &Connection,
    phi: &Cochain,
) -> Result<Cochain, CochainError> {
    check_delta_inputs(g, alpha, phi)?;
    let source = phi.source();
    let mut out = Cochain::zero(source.clone(), phi.target().clone(), phi.arity() + 1, phi.weight());
    for t in canonical_tuples(source.parities(), phi.arity() + 1) {
        let value = delta_value(g, alpha, phi, &t);
        out.insert_unchecked(t, value);
    }
    Ok(out)
}

/// The defining formula of `(δ_α Φ)(e_{t_0}, ..., e_{t_p})` evaluated
/// directly on an arbitrary basis tuple, without canonical reordering of the
/// output.
pub fn covariant_delta_at(
    g: &SuperLieAlgebra,
    alpha: &Connection,
    phi: &Cochain,
    tuple: &[usize],
) -> Result<Vec<Scalar>, CochainError> {
    check_delta_inputs(g, alpha, phi)?;
    if tuple.len() != phi.arity() + 1 {
        return Err(CochainError::LengthMismatch {
            expected: phi.arity() + 1,
            found: tuple.len(),
        });
    }
    if let Some(&bad) = tuple.iter().find(|&&i| i >= g.dim()) {
        return Err(CochainError::IndexOutOfRange(bad));
    }
    Ok(delta_value(g, alpha, phi, tuple))
}

fn check_delta_inputs(
    g: &SuperLieAlgebra,
    alpha: &Connection,
    phi: &Cochain,
) -> Result<(), CochainError> {
    if alpha.source().parities() != g.space().parities()
        || phi.source().parities() != g.space().parities()
        || alpha.target().parities() != phi.target().parities()
    {
        return Err(CochainError::Incompatible);
    }
    Ok(())
}

fn delta_value(g: &SuperLieAlgebra, alpha: &Connection, phi: &Cochain, t: &[usize]) -> Vec<Scalar> {
    let source = phi.source();
    let p = phi.arity();
    let y = phi.weight();
    let x: Vec<Parity> = t.iter().map(|&i| source.parity(i)).collect();
    let mut prefix = Parity::Even;
    let mut a = Vec::with_capacity(p + 1);
    for (i, &xi) in x.iter().enumerate() {
        a.push(xi * prefix + Parity::from_usize(i));
        prefix = prefix + xi;
    }
    let mut value = zero_vector(phi.target().dim());
    if !alpha.is_zero() {
        for i in 0..=p {
            let rest: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &v)| v)
                .collect();
            let v = phi.evaluate_unchecked(&rest);
            let image = alpha.operator(t[i]).apply(&v).expect("operator on target");
            let odd = (x[i] * y + a[i]).is_odd();
            axpy(&mut value, &minus_one(odd), &image);
        }
    }
    let mut args = vec![0; p];
    for i in 0..=p {
        for j in i + 1..=p {
            let c = g.bracket_basis(t[i], t[j]);
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let sign = minus_one((a[i] + a[j] + x[i] * x[j]).is_odd());
            let mut slot = 1;
            for (k, &v) in t.iter().enumerate() {
                if k != i && k != j {
                    args[slot] = v;
                    slot += 1;
                }
            }
            for (k, ck) in c.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                args[0] = k;
                let v = phi.evaluate_unchecked(&args);
                axpy(&mut value, &(&sign * ck), &v);
            }
        }
    }
    value
}

/// Chevalley differential with zero action: only the bracket-insertion term.
pub fn chevalley_delta(g: &SuperLieAlgebra, psi: &Cochain) -> Result<Cochain, CochainError> {
    let alpha = Connection::zero(g.space().clone(), psi.target().clone());
    covariant_delta(g, &alpha, psi)
}
