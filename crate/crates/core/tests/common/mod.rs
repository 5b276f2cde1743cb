//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use catena::field::Field;
use catena::groebner::IdealHandle;
use catena::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn names(v: usize) -> Vec<String> {
    (0..v).map(|i| format!("x{i}")).collect()
}

pub fn rational_ring(v: usize) -> Arc<Ring> {
    Ring::new(Field::Rationals, &names(v)).unwrap()
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn monomial_poly(ring: &Arc<Ring>, exps: &[u32]) -> Polynomial {
    Polynomial::from_monomial(ring, Monomial::new(exps.to_vec()))
}

/// Squarefree generators as bitmasks over `v` variables, none empty.
pub fn random_squarefree(rng: &mut ChaCha8Rng, v: usize, max_gens: usize) -> Vec<u64> {
    let k = rng.gen_range(0..=max_gens);
    (0..k).map(|_| rng.gen_range(1..(1u64 << v))).collect()
}

pub fn mask_exponents(mask: u64, v: usize) -> Vec<u32> {
    (0..v).map(|i| ((mask >> i) & 1) as u32).collect()
}

/// Random monomial generators with exponents `0..=max_exp`, none constant.
pub fn random_monomials(rng: &mut ChaCha8Rng, v: usize, max_gens: usize, max_exp: u32) -> Vec<Vec<u32>> {
    let k = rng.gen_range(0..=max_gens);
    let mut out = Vec::new();
    while out.len() < k {
        let e: Vec<u32> = (0..v)
            .map(|_| if rng.gen_bool(0.35) { rng.gen_range(1..=max_exp) } else { 0 })
            .collect();
        if e.iter().any(|&x| x > 0) {
            out.push(e);
        }
    }
    out
}

/// Minimal primes of a monomial ideal by enumerating every subset of the
/// variables: `(S)` contains `I` iff every generator's support meets `S`.
pub fn brute_force_minimal_primes(supports: &[u64], v: usize) -> Vec<u64> {
    let contains = |s: u64| supports.iter().all(|g| g & s != 0);
    let candidates: Vec<u64> = (0..(1u64 << v)).filter(|&s| contains(s)).collect();
    candidates
        .iter()
        .copied()
        .filter(|&s| !candidates.iter().any(|&t| t != s && t & s == t))
        .collect()
}

pub fn brute_force_dim(supports: &[u64], v: usize) -> usize {
    brute_force_minimal_primes(supports, v)
        .iter()
        .map(|s| v - s.count_ones() as usize)
        .max()
        .unwrap_or(v)
}

/// Random polynomial with small integer coefficients, total degree `<= max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, terms: usize, max_deg: u32) -> Polynomial {
    let v = ring.nvars();
    let mut t = Vec::new();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        t.push((q(rng.gen_range(-3..=3)), random_monomial_of_degree(rng, v, d)));
    }
    Polynomial::from_terms(ring, MonomialOrder::Grevlex, t)
}

pub fn random_monomial_of_degree(rng: &mut ChaCha8Rng, v: usize, d: u32) -> Monomial {
    let mut e = vec![0u32; v];
    for _ in 0..d {
        e[rng.gen_range(0..v)] += 1;
    }
    Monomial::new(e)
}

/// Homogeneous polynomial of degree `d` with `terms` random terms (may cancel to zero).
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, terms: usize, d: u32) -> Polynomial {
    let v = ring.nvars();
    let t = (0..terms)
        .map(|_| (q(rng.gen_range(-3..=3)), random_monomial_of_degree(rng, v, d)))
        .collect();
    Polynomial::from_terms(ring, MonomialOrder::Grevlex, t)
}

pub fn shuffled<T: Clone>(rng: &mut ChaCha8Rng, xs: &[T]) -> Vec<T> {
    let mut v = xs.to_vec();
    v.shuffle(rng);
    v
}

/// All exponent vectors of total degree `d` in `v` variables.
pub fn monomials_of_degree(v: usize, d: u32) -> Vec<Vec<u32>> {
    if v == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(v - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                for j in c..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn coefficient_row(f: &Polynomial, basis: &[Vec<u32>]) -> Vec<BigRational> {
    basis
        .iter()
        .map(|m| {
            f.terms()
                .iter()
                .find(|t| t.mono.exponents() == m.as_slice())
                .map_or_else(BigRational::zero, |t| t.coeff.clone())
        })
        .collect()
}

/// Membership of `f` in the ideal generated by homogeneous `gens`, decided
/// degree by degree: the degree-`d` part of `f` must lie in the span of
/// `m * g` for monomials `m` of degree `d - deg g`.
pub fn linear_algebra_member(ring: &Arc<Ring>, gens: &[Polynomial], f: &Polynomial) -> bool {
    let v = ring.nvars();
    let max_deg = f.terms().iter().map(|t| t.mono.total_degree()).max().unwrap_or(0);
    for d in 0..=max_deg {
        let part: Vec<_> = f
            .terms()
            .iter()
            .filter(|t| t.mono.total_degree() == d)
            .map(|t| (t.coeff.clone(), t.mono.clone()))
            .collect();
        if part.is_empty() {
            continue;
        }
        let part = Polynomial::from_terms(ring, MonomialOrder::Grevlex, part);
        let basis = monomials_of_degree(v, d);
        let mut rows = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let gd = g.total_degree().unwrap();
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(v, d - gd) {
                let one = BigRational::one();
                rows.push(coefficient_row(&g.mul_term(&one, &Monomial::new(m)), &basis));
            }
        }
        let r0 = rank(rows.clone());
        rows.push(coefficient_row(&part, &basis));
        if rank(rows) != r0 {
            return false;
        }
    }
    true
}

pub fn ideal(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> IdealHandle {
    IdealHandle::new(ring, gens).unwrap()
}
