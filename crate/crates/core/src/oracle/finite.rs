use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{Count, FieldScalar, FieldTag};
use crate::arrangement::Arrangement;
use crate::engine::CharPoly;
use crate::error::{Error, Result};

pub const MAX_FINITE_DIM: usize = 3;

/// Smallest prime tried by [`charpoly_by_interpolation`].
pub const FIRST_PRIME: u64 = 101;

/// Later rounds start here when verification fails.
const RETRY_STARTS: [u64; 2] = [499, 1999];

/// Number of points of `F_p^d` on none of the hyperplanes reduced mod `p`.
///
/// Rows are cleared of denominators and made primitive before reduction.
/// Fails with [`Error::PrimeTooSmall`] if `p` divides a denominator or a
/// normal vector vanishes mod `p`.
pub fn count_points_mod_p(arr: &Arrangement, p: u64) -> Result<Count> {
    if arr.field() != FieldTag::Rational {
        return Err(Error::Unsupported(format!("point counting needs a rational arrangement, got {}", arr.field())));
    }
    let d = arr.dim();
    if d > MAX_FINITE_DIM {
        return Err(Error::Unsupported(format!("point counting limited to dimension {MAX_FINITE_DIM}, got {d}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > u32::MAX as u64 {
        return Err(Error::Unsupported(format!("prime {p} too large for point counting")));
    }
    let rows = arr
        .hyperplanes()
        .iter()
        .map(|h| reduce_row(h.coeffs.iter().chain(std::iter::once(&h.constant)), p))
        .collect::<Result<Vec<_>>>()?;

    if d == 0 {
        return Ok(Count::one());
    }
    let tuples = p.pow(d.saturating_sub(1) as u32);
    let count: u64 = (0..tuples)
        .into_par_iter()
        .map_init(
            || vec![false; p as usize],
            |hit, t| free_on_line(&rows, d, p, t, hit),
        )
        .sum();
    Ok(Count::from(count))
}

/// Points `(x', z)` with `x'` the `t`-th tuple of the first `d - 1`
/// coordinates that avoid every hyperplane.
fn free_on_line(rows: &[Vec<u64>], d: usize, p: u64, t: u64, hit: &mut [bool]) -> u64 {
    let mut x = vec![0u64; d.saturating_sub(1)];
    let mut rest = t;
    for xi in x.iter_mut() {
        *xi = rest % p;
        rest /= p;
    }
    hit.iter_mut().for_each(|h| *h = false);
    let mut excluded = 0u64;
    for r in rows {
        let partial = x.iter().zip(r).fold(0u64, |acc, (xi, ai)| (acc + xi * ai) % p);
        // a' x' + a_d z = c
        let rhs = (r[d] + p - partial) % p;
        let a = r[d - 1];
        if a == 0 {
            if rhs == 0 {
                return 0;
            }
            continue;
        }
        let z = (rhs * inv_mod(a, p)) % p;
        if !hit[z as usize] {
            hit[z as usize] = true;
            excluded += 1;
        }
    }
    p - excluded
}

fn reduce_row<'a>(entries: impl Iterator<Item = &'a FieldScalar>, p: u64) -> Result<Vec<u64>> {
    let entries: Vec<_> = entries
        .map(|x| match x {
            FieldScalar::Rational(r) => (r.numer(), r.denom()),
            FieldScalar::Quadratic(_) => unreachable!("rational arrangement"),
        })
        .collect();
    let pb = BigInt::from(p);
    if entries.iter().any(|(_, den)| (den % &pb).is_zero()) {
        return Err(Error::PrimeTooSmall(p));
    }
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, den)| acc.lcm(den));
    let ints: Vec<BigInt> = entries.iter().map(|(num, den)| num * (&lcm / den)).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let reduced: Vec<u64> = ints
        .iter()
        .map(|x| (x / &gcd).mod_floor(&pb).to_u64().expect("residue below p"))
        .collect();
    if reduced[..reduced.len() - 1].iter().all(|&x| x == 0) {
        return Err(Error::PrimeTooSmall(p));
    }
    Ok(reduced)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

/// `χ(t)` of a rational arrangement with `d ≤ 3`, interpolated from point
/// counts at `d + 1` primes and checked at one more.
///
/// Primes start at [`FIRST_PRIME`]; primes that divide a denominator are
/// skipped. If the check fails, or the interpolant is not a monic integer
/// polynomial, the search restarts from larger primes before giving up with
/// [`Error::InterpolationFailed`].
pub fn charpoly_by_interpolation(arr: &Arrangement) -> Result<CharPoly> {
    for start in std::iter::once(FIRST_PRIME).chain(RETRY_STARTS) {
        if let Some(poly) = attempt(arr, start)? {
            return Ok(poly);
        }
    }
    Err(Error::InterpolationFailed)
}

fn attempt(arr: &Arrangement, start: u64) -> Result<Option<CharPoly>> {
    let d = arr.dim();
    let mut samples = Vec::with_capacity(d + 2);
    for p in primes_from(start) {
        match count_points_mod_p(arr, p) {
            Ok(c) => samples.push((BigInt::from(p), BigInt::from(c.as_biguint().clone()))),
            Err(Error::PrimeTooSmall(_)) => continue,
            Err(e) => return Err(e),
        }
        if samples.len() == d + 2 {
            break;
        }
    }
    let (check, fit) = samples.split_last().expect("d + 2 samples");
    let coeffs = lagrange(fit);
    if !coeffs.iter().all(|c| c.is_integer()) || !coeffs[d].is_one() {
        return Ok(None);
    }
    // descending order
    let poly = CharPoly::from_coefficients(coeffs.iter().rev().map(|c| c.to_integer()).collect());
    Ok((poly.eval(&check.0) == check.1).then_some(poly))
}

/// Ascending coefficients of the polynomial through `points`.
fn lagrange(points: &[(BigInt, BigInt)]) -> Vec<BigRational> {
    let n = points.len();
    let mut total = vec![BigRational::zero(); n];
    for (k, (xk, yk)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for (m, (xm, _)) in points.iter().enumerate() {
            if m == k {
                continue;
            }
            // basis *= (t - xm)
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, c) in basis.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * BigRational::from_integer(xm.clone());
            }
            basis = next;
            denom *= xk - xm;
        }
        let scale = BigRational::new(yk.clone(), denom);
        for (t, b) in total.iter_mut().zip(&basis) {
            *t += b * &scale;
        }
    }
    total
}
