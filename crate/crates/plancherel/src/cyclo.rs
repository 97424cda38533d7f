//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! A [`Cyclo`] stores rational coordinates with respect to the power basis
//! 1, ζ, …, ζ^{φ(n)−1} of ℚ(ζ_n), i.e. the coefficient vector is always
//! reduced modulo the n-th cyclotomic polynomial Φ_n. Reduction makes the
//! representation canonical, so `==` decides equality of values. Mixed
//! orders are handled by lifting both operands into ℚ(ζ_lcm).
//!
//! No inversion is provided; the library only ever divides by explicit
//! integers.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num::{BigInt, BigRational, One, Signed, Zero};
use num_complex::Complex64;
use once_cell::sync::Lazy;

use crate::scalar::Coeff;

/// Basis data for one cyclotomic order: Φ_n and the reduced coordinates of
/// every power ζ^j, j = 0..n.
struct Basis {
    order: u64,
    degree: usize,
    /// Coordinates of ζ^j in the power basis, for j in 0..order.
    powers: Vec<Vec<BigRational>>,
}

static BASES: Lazy<Mutex<HashMap<u64, Arc<Basis>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of Φ_n, ascending degree, computed by dividing
/// x^n − 1 by the cyclotomic polynomials of the proper divisors.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials (divisor monic), ascending coeffs.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn basis(order: u64) -> Arc<Basis> {
    let mut cache = BASES.lock().unwrap();
    if let Some(b) = cache.get(&order) {
        return b.clone();
    }
    let phi: Vec<BigRational> = cyclotomic_poly(order)
        .into_iter()
        .map(|c| BigRational::from_integer(c))
        .collect();
    let degree = phi.len() - 1;
    // powers[j] = ζ^j reduced: start from 1 and multiply by ζ step by step.
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![BigRational::zero(); degree];
    cur[0] = BigRational::one();
    for _ in 0..order {
        powers.push(cur.clone());
        // cur <- ζ·cur, reduced mod Φ.
        let mut next = vec![BigRational::zero(); degree];
        let top = cur[degree - 1].clone();
        for i in (1..degree).rev() {
            next[i] = cur[i - 1].clone();
        }
        if !top.is_zero() {
            // ζ^degree = -Φ[0..degree] (Φ monic).
            for i in 0..degree {
                next[i] -= &top * &phi[i];
            }
        }
        cur = next;
    }
    let b = Arc::new(Basis {
        order,
        degree,
        powers,
    });
    cache.insert(order, b.clone());
    b
}

/// An element of ℚ(ζ_order) in reduced power-basis coordinates.
#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn rational(value: BigRational) -> Self {
        Cyclo {
            order: 1,
            coeffs: vec![value],
        }
    }

    pub fn integer(n: i64) -> Self {
        Cyclo::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Cyclo::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// e^{2πi·num/den}, stored at the reduced order den/gcd(num, den).
    pub fn unity_root(num: i64, den: i64) -> Self {
        assert!(den > 0, "root order must be positive");
        let k = num.rem_euclid(den) as u64;
        let den = den as u64;
        let g = gcd(k, den);
        let (k, order) = if k == 0 { (0, 1) } else { (k / g, den / g) };
        let b = basis(order);
        Cyclo {
            order,
            coeffs: b.powers[k as usize].clone(),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Lift into ℚ(ζ_target); target must be a multiple of the current order.
    fn lift(&self, target: u64) -> Cyclo {
        if target == self.order {
            return self.clone();
        }
        debug_assert_eq!(target % self.order, 0);
        let step = (target / self.order) as usize;
        let b = basis(target);
        let mut coeffs = vec![BigRational::zero(); b.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                for (i, p) in b.powers[k * step].iter().enumerate() {
                    coeffs[i] += c * p;
                }
            }
        }
        Cyclo {
            order: target,
            coeffs,
        }
    }

    /// Drop to order 1 when the value is rational; keeps orders from creeping
    /// up across long computations.
    fn normalize(mut self) -> Cyclo {
        if self.order > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn binary<F>(&self, rhs: &Cyclo, f: F) -> Cyclo
    where
        F: Fn(&BigRational, &BigRational) -> BigRational,
    {
        let target = lcm(self.order, rhs.order);
        let a = self.lift(target);
        let b = rhs.lift(target);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| f(x, y))
            .collect();
        Cyclo {
            order: target,
            coeffs,
        }
        .normalize()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let target = lcm(self.order, other.order);
        self.lift(target).coeffs == other.lift(target).coeffs
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        self.binary(&rhs, |a, b| a + b)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self.binary(&rhs, |a, b| a - b)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        let target = lcm(self.order, rhs.order);
        let a = self.lift(target);
        let b = rhs.lift(target);
        let bas = basis(target);
        let deg = bas.degree;
        // Convolve, then fold exponents >= deg back through the power table.
        let mut raw = vec![BigRational::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        let mut coeffs = raw[..deg].to_vec();
        for (e, c) in raw.iter().enumerate().skip(deg) {
            if !c.is_zero() {
                for (i, p) in bas.powers[e].iter().enumerate() {
                    coeffs[i] += c * p;
                }
            }
        }
        Cyclo {
            order: target,
            coeffs,
        }
        .normalize()
    }
}

impl Coeff for Cyclo {
    const EXACT: bool = true;

    fn zero() -> Self {
        Cyclo::integer(0)
    }
    fn one() -> Self {
        Cyclo::integer(1)
    }
    fn from_int(n: i64) -> Self {
        Cyclo::integer(n)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Cyclo::ratio(num, den)
    }
    fn root_of_unity(num: i64, den: i64) -> Self {
        Cyclo::unity_root(num, den)
    }
    fn conj(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let b = basis(self.order);
        let mut coeffs = vec![BigRational::zero(); b.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((self.order - k as u64) % self.order) as usize;
                for (i, p) in b.powers[e].iter().enumerate() {
                    coeffs[i] += c * p;
                }
            }
        }
        Cyclo {
            order: self.order,
            coeffs,
        }
        .normalize()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn is_negligible(&self) -> bool {
        Coeff::is_zero(self)
    }
    fn to_c64(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let x = rational_to_f64(c);
                acc += Complex64::root_of_unity(k as i64, self.order as i64) * x;
            }
        }
        acc
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back for magnitudes outside f64 integer range.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(k: i64, n: i64) -> Cyclo {
        Cyclo::unity_root(k, n)
    }

    #[test]
    fn primitive_root_sums_vanish() {
        for p in [2u32, 3, 5, 7] {
            let mut sum = Cyclo::integer(0);
            for k in 0..p {
                sum = sum + zeta(k as i64, p as i64);
            }
            assert!(Coeff::is_zero(&sum), "sum of C_{p} roots should vanish");
        }
    }

    #[test]
    fn gaussian_product() {
        let i = zeta(1, 4);
        let one_plus_i = Cyclo::integer(1) + i.clone();
        let one_minus_i = Cyclo::integer(1) - i;
        assert_eq!(one_plus_i * one_minus_i, Cyclo::integer(2));
    }

    #[test]
    fn conjugation_is_inversion_on_roots() {
        for (k, n) in [(1i64, 5i64), (2, 7), (3, 8), (5, 12)] {
            let z = zeta(k, n);
            assert_eq!(z.conj(), zeta(n - k, n));
            assert_eq!(z.clone() * z.conj(), Cyclo::integer(1));
        }
    }

    #[test]
    fn cross_order_equality() {
        // ζ_6^3 = -1 regardless of the order it is written in.
        assert_eq!(zeta(3, 6), Cyclo::integer(-1));
        assert_eq!(zeta(2, 6), zeta(1, 3));
        assert_eq!(zeta(2, 8), zeta(1, 4));
    }

    #[test]
    fn float_projection_matches() {
        let z = zeta(1, 12);
        let w = z.clone() * z.clone() + Cyclo::ratio(1, 3);
        let expect = Complex64::root_of_unity(2, 12) + Complex64::new(1.0 / 3.0, 0.0);
        assert!((w.to_c64() - expect).norm() < 1e-12);
    }

    proptest! {
        #[test]
        fn ring_axioms(a_k in 0i64..12, b_k in 0i64..8, c_k in 0i64..6,
                       qa in -6i64..7, qb in -6i64..7) {
            let a = zeta(a_k, 12) * Cyclo::ratio(qa, 4);
            let b = zeta(b_k, 8) + Cyclo::integer(qb);
            let c = zeta(c_k, 6);
            prop_assert_eq!(
                (a.clone() * b.clone()) * c.clone(),
                a.clone() * (b.clone() * c.clone())
            );
            prop_assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
            prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
            let proj = (a.clone() + b.clone()).to_c64();
            let direct = a.to_c64() + b.to_c64();
            prop_assert!((proj - direct).norm() < 1e-9);
        }
    }
}
