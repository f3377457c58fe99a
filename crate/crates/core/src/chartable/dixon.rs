//! Dixon–Schneider: character values are recovered from the simultaneous
//! eigenvectors of the class matrices over a prime field `F_p` with
//! `p ≡ 1 (mod exponent)`, then lifted to exact cyclotomics.

use rayon::prelude::*;

use super::modular::{self, Matrix};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::permgroup::ConjugacyData;

/// All class multiplication coefficients `a_{ijk}`, the number of `x ∈ C_i`
/// with `x⁻¹ z ∈ C_j` for the fixed representative `z` of `C_k`.
#[derive(Clone, Debug)]
pub struct ClassCoefficients {
    k: usize,
    data: Vec<u32>,
}

impl ClassCoefficients {
    pub fn compute(conj: &ConjugacyData) -> Self {
        let k = conj.num_classes();
        let per_target: Vec<Vec<u32>> = (0..k)
            .into_par_iter()
            .map(|target| {
                let z = conj.representative(target);
                let mut counts = vec![0u32; k * k];
                for (i, class) in conj.classes().iter().enumerate() {
                    for &x in &class.members {
                        let w = conj.elements().get(x as usize).inverse().then(z);
                        let j = conj.class_of(&w).expect("closed under products");
                        counts[i * k + j] += 1;
                    }
                }
                counts
            })
            .collect();
        let mut data = vec![0u32; k * k * k];
        for (target, counts) in per_target.iter().enumerate() {
            for (ij, &c) in counts.iter().enumerate() {
                data[ij * k + target] = c;
            }
        }
        Self { k, data }
    }

    pub fn num_classes(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.k + j) * self.k + k]
    }

    /// Class matrix `A^(i)` with entries `A[j][k] = a_{ijk} mod p`.
    pub fn matrix(&self, i: usize, p: u64) -> Matrix {
        (0..self.k)
            .map(|j| (0..self.k).map(|k| self.get(i, j, k) as u64 % p).collect())
            .collect()
    }
}

/// A single coefficient `a_{ijk}`, counted directly.
pub fn class_mult_coeff(conj: &ConjugacyData, i: usize, j: usize, k: usize) -> u64 {
    let z = conj.representative(k);
    conj.classes()[i]
        .members
        .iter()
        .filter(|&&x| {
            let w = conj.elements().get(x as usize).inverse().then(z);
            conj.class_of(&w) == Some(j)
        })
        .count() as u64
}

/// The modular setting for one table computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DixonContext {
    pub prime: u64,
    pub primitive_root: u64,
    /// Element of exact order `exponent` in `F_p^×`; stands in for `ζ_e`.
    pub root: u64,
    pub exponent: u64,
    pub group_order: u64,
}

pub fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

pub fn floor_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2⌈√|G|⌉`.
pub fn select_prime(conj: &ConjugacyData) -> DixonContext {
    let e = conj.exponent();
    let order = conj.group_order() as u64;
    let bound = 2 * ceil_sqrt(order);
    let mut p = e + 1;
    while p <= bound || !modular::is_prime(p) {
        p += e;
    }
    let g = modular::primitive_root(p);
    let root = modular::pow_mod(g, (p - 1) / e, p);
    assert_eq!(modular::order_mod(root, p), e, "root of wrong order");
    DixonContext {
        prime: p,
        primitive_root: g,
        root,
        exponent: e,
        group_order: order,
    }
}

// Subspaces are kept as row bases in reduced row echelon form.
fn split_subspace(basis: &Matrix, a: &Matrix, p: u64) -> Result<Vec<Matrix>> {
    let d = basis.len();
    let k = a.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    // b[s][r]: coordinate s of A·w_r
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|w| {
            (0..k)
                .map(|j| a[j].iter().zip(w).fold(0, |acc, (x, y)| (acc + x * y) % p))
                .collect()
        })
        .collect();
    let b: Matrix = (0..d)
        .map(|s| (0..d).map(|r| images[r][pivots[s]]).collect())
        .collect();

    let scalar = (0..d).all(|s| {
        (0..d).all(|r| {
            if r == s {
                b[s][r] == b[0][0]
            } else {
                b[s][r] == 0
            }
        })
    });
    if scalar {
        return Ok(vec![basis.clone()]);
    }

    let cp = modular::charpoly(&b, p);
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in modular::roots(&cp, p) {
        let shifted: Matrix = (0..d)
            .map(|s| {
                (0..d)
                    .map(|r| {
                        if r == s {
                            (b[s][r] + p - lambda) % p
                        } else {
                            b[s][r]
                        }
                    })
                    .collect()
            })
            .collect();
        let kernel = modular::nullspace(&shifted, d, p);
        let mut piece: Matrix = kernel
            .iter()
            .map(|x| {
                (0..k)
                    .map(|col| {
                        x.iter()
                            .zip(basis)
                            .fold(0, |acc, (c, w)| (acc + c * w[col]) % p)
                    })
                    .collect()
            })
            .collect();
        modular::rref(&mut piece, p);
        total += piece.len();
        pieces.push(piece);
    }
    if total != d {
        return Err(Error::SplitFailure(format!(
            "class matrix restricted to a {d}-dimensional subspace has only {total} dimensions of eigenvectors over F_{p}"
        )));
    }
    Ok(pieces)
}

/// Common eigenvectors of all class matrices, each scaled so that its
/// identity-class entry is 1. These are the central characters mod `p`.
pub fn central_characters(coeffs: &ClassCoefficients, p: u64) -> Result<Vec<Vec<u64>>> {
    let k = coeffs.num_classes();
    let identity: Matrix = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut pending = vec![identity];
    let mut done: Vec<Vec<u64>> = Vec::new();
    for i in 1..=k {
        let (ones, rest): (Vec<Matrix>, Vec<Matrix>) =
            pending.into_iter().partition(|w| w.len() == 1);
        done.extend(ones.into_iter().map(|mut w| w.remove(0)));
        pending = rest;
        if pending.is_empty() || i == k {
            break;
        }
        let a = coeffs.matrix(i, p);
        let mut next = Vec::new();
        for w in &pending {
            next.extend(split_subspace(w, &a, p)?);
        }
        pending = next;
    }
    if !pending.is_empty() {
        let dims: Vec<usize> = pending.iter().map(Vec::len).collect();
        return Err(Error::SplitFailure(format!(
            "subspaces of dimensions {dims:?} survive all class matrices"
        )));
    }
    done.into_iter()
        .map(|v| {
            if v[0] == 0 {
                return Err(Error::SplitFailure(
                    "eigenvector vanishes on the identity class".into(),
                ));
            }
            let inv = modular::inv_mod(v[0], p);
            Ok(v.iter().map(|x| x * inv % p).collect())
        })
        .collect()
}

/// Degree `d` from a central character: the unique `1 ≤ d ≤ ⌊√|G|⌋` with
/// `d² ≡ |G| / Σ_i ω_i ω_{i*} / |C_i|`.
pub fn degree_of(omega: &[u64], conj: &ConjugacyData, ctx: &DixonContext) -> Result<u64> {
    let p = ctx.prime;
    let norm = (0..omega.len()).fold(0u64, |acc, i| {
        let term = omega[i] * omega[conj.inverse_class(i)] % p
            * modular::inv_mod(conj.size(i) as u64 % p, p)
            % p;
        (acc + term) % p
    });
    if norm == 0 {
        return Err(Error::VerificationFailure(
            "central character has zero norm mod p".into(),
        ));
    }
    let target = ctx.group_order % p * modular::inv_mod(norm, p) % p;
    (1..=floor_sqrt(ctx.group_order))
        .find(|d| d * d % p == target)
        .ok_or_else(|| {
            Error::VerificationFailure(format!("no degree d ≤ √|G| with d² ≡ {target} mod {p}"))
        })
}

/// One irreducible character: degree and exact values at conductor `e`.
pub fn lift_character(
    row: usize,
    omega: &[u64],
    conj: &ConjugacyData,
    ctx: &DixonContext,
) -> Result<(u64, Vec<Cyclotomic>)> {
    let p = ctx.prime;
    let e = ctx.exponent;
    let degree = degree_of(omega, conj, ctx)?;
    let modular_values: Vec<u64> = omega
        .iter()
        .enumerate()
        .map(|(j, &w)| degree % p * w % p * modular::inv_mod(conj.size(j) as u64 % p, p) % p)
        .collect();

    let mut values = Vec::with_capacity(omega.len());
    for class in 0..omega.len() {
        let m = conj.element_order(class);
        let zm_inv = modular::inv_mod(modular::pow_mod(ctx.root, e / m, p), p);
        let m_inv = modular::inv_mod(m % p, p);
        let samples: Vec<u64> = (0..m as i64)
            .map(|t| modular_values[conj.power_map(class, t)])
            .collect();
        let mut terms = Vec::new();
        for l in 0..m {
            let step = modular::pow_mod(zm_inv, l, p);
            let mut twiddle = 1u64;
            let mut acc = 0u64;
            for &s in &samples {
                acc = (acc + s * twiddle) % p;
                twiddle = twiddle * step % p;
            }
            let c = acc * m_inv % p;
            if c > degree {
                return Err(Error::LiftOutOfRange {
                    row,
                    class,
                    value: c,
                    degree,
                });
            }
            if c != 0 {
                terms.push(((l * (e / m)) as i64, c as i64));
            }
        }
        values.push(Cyclotomic::from_exponents(e as u32, terms));
    }
    Ok((degree, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{PermGroup, Permutation, DEFAULT_BUDGET};

    fn conj(gens: &[&str], degree: usize) -> ConjugacyData {
        PermGroup::new(
            gens.iter()
                .map(|g| Permutation::parse_cycles(g, Some(degree)).unwrap())
                .collect(),
        )
        .unwrap()
        .conjugacy_data(DEFAULT_BUDGET)
        .unwrap()
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(ceil_sqrt(2), 2);
        assert_eq!(ceil_sqrt(60), 8);
        assert_eq!(ceil_sqrt(64), 8);
        assert_eq!(floor_sqrt(60), 7);
        assert_eq!(floor_sqrt(1), 1);
    }

    #[test]
    fn identity_class_acts_trivially() {
        let s4 = conj(&["(0,1)", "(0,1,2,3)"], 4);
        let coeffs = ClassCoefficients::compute(&s4);
        for j in 0..s4.num_classes() {
            for k in 0..s4.num_classes() {
                assert_eq!(coeffs.get(0, j, k), u32::from(j == k));
                assert_eq!(class_mult_coeff(&s4, 0, j, k), u64::from(j == k));
            }
        }
    }

    #[test]
    fn prime_selection() {
        let c2 = conj(&["(0,1)"], 2);
        let ctx = select_prime(&c2);
        assert_eq!(ctx.prime, 5);
        assert_eq!(modular::order_mod(ctx.root, ctx.prime), 2);
    }
}
