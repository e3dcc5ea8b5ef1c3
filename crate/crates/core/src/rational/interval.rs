//! Certified complex interval arithmetic with dyadic rational endpoints,
//! and certified root enclosures for separable rational polynomials.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{Poly, QPoly};

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).floor().to_integer(), s)
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).ceil().to_integer(), s)
}

fn round_nearest(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).round().to_integer(), s)
}

/// Dyadic `r >= sqrt(q)` within about `2^-bits`.
pub fn sqrt_upper(q: &BigRational, bits: u32) -> BigRational {
    let s = pow2(2 * bits);
    let n = (q * BigRational::from_integer(s)).ceil().to_integer();
    let mut r = n.sqrt();
    if &r * &r < n {
        r += 1;
    }
    BigRational::new(r, pow2(bits))
}

/// A closed real interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Self {
        Self { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    /// Widen outward to multiples of `2^-bits`.
    pub fn round(&self, bits: u32) -> Self {
        Self { lo: round_down(&self.lo, bits), hi: round_up(&self.hi, bits) }
    }
}

/// A rectangle `re × im` in the complex plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn point(z: &Complex<BigRational>) -> Self {
        Self { re: Interval::point(z.re.clone()), im: Interval::point(z.im.clone()) }
    }

    pub fn real(x: BigRational) -> Self {
        Self { re: Interval::point(x), im: Interval::point(BigRational::zero()) }
    }

    /// The square of half-width `r` around `z`.
    pub fn around(z: &Complex<BigRational>, r: &BigRational) -> Self {
        Self {
            re: Interval::new(&z.re - r, &z.re + r),
            im: Interval::new(&z.im - r, &z.im + r),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains(&self, z: &Complex<BigRational>) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        Self { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn round(&self, bits: u32) -> Self {
        Self { re: self.re.round(bits), im: self.im.round(bits) }
    }

    pub fn midpoint_f64(&self) -> Complex64 {
        let two = BigRational::from_integer(2.into());
        let re = ((&self.re.lo + &self.re.hi) / &two).to_f64().unwrap_or(f64::NAN);
        let im = ((&self.im.lo + &self.im.hi) / &two).to_f64().unwrap_or(f64::NAN);
        Complex64::new(re, im)
    }
}

/// Interval products and sums rounded outward after every step.
pub struct Rounded {
    pub bits: u32,
}

impl Rounded {
    pub fn mul(&self, a: &ComplexInterval, b: &ComplexInterval) -> ComplexInterval {
        a.mul(b).round(self.bits)
    }

    pub fn add(&self, a: &ComplexInterval, b: &ComplexInterval) -> ComplexInterval {
        a.add(b).round(self.bits)
    }

    pub fn sub(&self, a: &ComplexInterval, b: &ComplexInterval) -> ComplexInterval {
        a.sub(b).round(self.bits)
    }

    /// 3x3 determinant by cofactor expansion along the first row.
    pub fn det3(&self, m: &[[ComplexInterval; 3]; 3]) -> ComplexInterval {
        let minor = |a: usize, b: usize| self.sub(&self.mul(&m[1][a], &m[2][b]), &self.mul(&m[1][b], &m[2][a]));
        let t0 = self.mul(&m[0][0], &minor(1, 2));
        let t1 = self.mul(&m[0][1], &minor(0, 2));
        let t2 = self.mul(&m[0][2], &minor(0, 1));
        self.add(&self.sub(&t0, &t1), &t2)
    }
}

/// Approximate roots of a polynomial by the Durand–Kerner iteration.
pub fn approximate_roots(f: &QPoly) -> Vec<Complex64> {
    let n = f.degree().unwrap_or(0);
    let m = f.monic();
    let c: Vec<Complex64> = m.coeffs().iter().map(|x| Complex64::new(x.to_f64().unwrap_or(0.0), 0.0)).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let scale = 1.0 + c.iter().take(n).map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * scale).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * scale {
            break;
        }
    }
    z
}

fn to_dyadic(x: f64, bits: u32) -> BigRational {
    round_nearest(&BigRational::from_f64(x).unwrap_or_else(BigRational::zero), bits)
}

fn abs2(z: &Complex<BigRational>) -> BigRational {
    &z.re * &z.re + &z.im * &z.im
}

/// Disjoint enclosures, one per root, each certified to contain a root:
/// a disc of radius `n·|f(z)/f'(z)|` about any `z` contains a root of a
/// degree-`n` polynomial. Fails with `Indeterminate(bits)` when the discs
/// cannot be separated at this precision.
pub fn certified_roots(f: &QPoly, bits: u32) -> Result<Vec<ComplexInterval>> {
    let n = f.degree().unwrap_or(0);
    let cf: Poly<Complex<BigRational>> =
        Poly::new(f.coeffs().iter().map(|c| Complex::new(c.clone(), BigRational::zero())).collect());
    let cd = cf.derivative();
    let tolerance = BigRational::new(BigInt::one(), pow2(bits));
    let tol2 = &tolerance * &tolerance;
    let mut centers = Vec::with_capacity(n);
    let mut radii = Vec::with_capacity(n);
    for z0 in approximate_roots(f) {
        let mut z = Complex::new(to_dyadic(z0.re, bits), to_dyadic(z0.im, bits));
        for _ in 0..64 + bits {
            let d = cd.eval(&z);
            if d.is_zero() {
                return Err(Error::Indeterminate(bits));
            }
            let step = cf.eval(&z) / d;
            z = Complex::new(round_nearest(&(&z.re - &step.re), bits), round_nearest(&(&z.im - &step.im), bits));
            if abs2(&step) < tol2 {
                break;
            }
        }
        let d = cd.eval(&z);
        if d.is_zero() {
            return Err(Error::Indeterminate(bits));
        }
        let nn = BigRational::from_integer(BigInt::from(n * n));
        let r = sqrt_upper(&(nn * abs2(&cf.eval(&z)) / abs2(&d)), bits + 8);
        centers.push(z);
        radii.push(r);
    }
    for i in 0..n {
        for j in i + 1..n {
            let diff = &centers[i] - &centers[j];
            let sum = &radii[i] + &radii[j];
            if abs2(&diff) <= &sum * &sum {
                return Err(Error::Indeterminate(bits));
            }
        }
    }
    Ok(centers.iter().zip(&radii).map(|(z, r)| ComplexInterval::around(z, r).round(bits + 8)).collect())
}

/// Largest side length among the boxes, as a float.
pub fn max_width(boxes: &[ComplexInterval]) -> f64 {
    boxes
        .iter()
        .map(|b| b.re.width().max(b.im.width()).to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}
