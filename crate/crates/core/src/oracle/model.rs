//! Cohomology of a principally polarized abelian variety of dimension `d` as
//! the exterior algebra on `a_1, b_1, ..., a_d, b_d`.
//!
//! Generator `a_i` has index `2(i-1)` and `b_i` index `2(i-1)+1`, so the
//! increasing-index top form is `a_1 b_1 ... a_d b_d`, whose integral is 1.
//! On `B x B` the second copy is shifted by `2d`.

use std::fmt;

use rand::Rng;

use super::multivector::{wedge_sign, Multivector};
use crate::rational::Rational;

/// A class in `H^*(B)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtClass {
    d: usize,
    mv: Multivector,
}

/// A class in `H^*(B x B)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProductClass {
    d: usize,
    mv: Multivector,
}

fn full_mask(bits: u32) -> u32 {
    if bits == 32 {
        u32::MAX
    } else {
        (1u32 << bits) - 1
    }
}

impl ExtClass {
    pub fn new(d: usize, mv: Multivector) -> Self {
        assert_eq!(mv.gens(), 2 * d as u32, "wrong generator count");
        ExtClass { d, mv }
    }

    pub fn zero(d: usize) -> Self {
        Self::new(d, Multivector::zero(2 * d as u32))
    }

    pub fn one(d: usize) -> Self {
        Self::new(d, Multivector::one(2 * d as u32))
    }

    pub fn basis(d: usize, mask: u32) -> Self {
        Self::new(d, Multivector::basis(2 * d as u32, mask, Rational::one()))
    }

    /// The class of a point, `a_1 b_1 ... a_d b_d`.
    pub fn point(d: usize) -> Self {
        Self::basis(d, full_mask(2 * d as u32))
    }

    /// `theta = sum_i a_i b_i`.
    pub fn theta(d: usize) -> Self {
        let mut mv = Multivector::zero(2 * d as u32);
        for i in 0..d {
            mv.add_term(0b11 << (2 * i), Rational::one());
        }
        Self::new(d, mv)
    }

    /// Random class with small integer coefficients on a random subset of
    /// basis monomials.
    pub fn random(d: usize, rng: &mut impl Rng) -> Self {
        let mut mv = Multivector::zero(2 * d as u32);
        for mask in 0..=full_mask(2 * d as u32) {
            if rng.gen_bool(0.4) {
                mv.add_term(mask, Rational::integer(rng.gen_range(-4..=4)));
            }
        }
        Self::new(d, mv)
    }

    /// Random class concentrated in even degrees.
    pub fn random_even(d: usize, rng: &mut impl Rng) -> Self {
        let x = Self::random(d, rng);
        let mv = (0..=2 * d as u32)
            .step_by(2)
            .fold(Multivector::zero(2 * d as u32), |acc, k| &acc + &x.mv.degree_part(k));
        Self::new(d, mv)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn is_zero(&self) -> bool {
        self.mv.is_zero()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.mv.degrees()
    }

    pub fn degree_part(&self, deg: u32) -> Self {
        Self::new(self.d, self.mv.degree_part(deg))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.d, self.mv.scale(c))
    }

    pub fn wedge(&self, other: &Self) -> Self {
        Self::new(self.d, self.mv.wedge(&other.mv))
    }

    pub fn inv(&self) -> Self {
        Self::new(self.d, self.mv.inv())
    }

    pub fn integral(&self) -> Rational {
        self.mv.coefficient(full_mask(2 * self.d as u32))
    }

    /// `c` with `self = c * other`, if any.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        self.mv.ratio_to(&other.mv)
    }
}

impl std::ops::Add for &ExtClass {
    type Output = ExtClass;
    fn add(self, rhs: &ExtClass) -> ExtClass {
        ExtClass::new(self.d, &self.mv + &rhs.mv)
    }
}

impl std::ops::Sub for &ExtClass {
    type Output = ExtClass;
    fn sub(self, rhs: &ExtClass) -> ExtClass {
        ExtClass::new(self.d, &self.mv - &rhs.mv)
    }
}

impl std::ops::Neg for &ExtClass {
    type Output = ExtClass;
    fn neg(self) -> ExtClass {
        ExtClass::new(self.d, -&self.mv)
    }
}

impl fmt::Display for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.d)
            .flat_map(|i| [format!("a{}", i + 1), format!("b{}", i + 1)])
            .collect();
        let mut first = true;
        for (mask, c) in self.mv.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<&str> = (0..2 * self.d)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| names[k].as_str())
                .collect();
            if word.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}", word.join("^"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl ProductClass {
    pub fn new(d: usize, mv: Multivector) -> Self {
        assert_eq!(mv.gens(), 4 * d as u32, "wrong generator count");
        ProductClass { d, mv }
    }

    pub fn zero(d: usize) -> Self {
        Self::new(d, Multivector::zero(4 * d as u32))
    }

    pub fn one(d: usize) -> Self {
        Self::new(d, Multivector::one(4 * d as u32))
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn is_zero(&self) -> bool {
        self.mv.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.d, self.mv.scale(c))
    }

    pub fn wedge(&self, other: &Self) -> Self {
        Self::new(self.d, self.mv.wedge(&other.mv))
    }

    /// Integral over `B x B` with the product orientation.
    pub fn integral(&self) -> Rational {
        self.mv.coefficient(full_mask(4 * self.d as u32))
    }
}

impl std::ops::Add for &ProductClass {
    type Output = ProductClass;
    fn add(self, rhs: &ProductClass) -> ProductClass {
        ProductClass::new(self.d, &self.mv + &rhs.mv)
    }
}

impl std::ops::Sub for &ProductClass {
    type Output = ProductClass;
    fn sub(self, rhs: &ProductClass) -> ProductClass {
        ProductClass::new(self.d, &self.mv - &rhs.mv)
    }
}

/// `p_1^*`.
pub fn p1_pull(x: &ExtClass) -> ProductClass {
    let mut mv = Multivector::zero(4 * x.d as u32);
    for (m, c) in x.mv.terms() {
        mv.add_term(m, c.clone());
    }
    ProductClass::new(x.d, mv)
}

/// `p_2^*`.
pub fn p2_pull(y: &ExtClass) -> ProductClass {
    let shift = 2 * y.d as u32;
    let mut mv = Multivector::zero(4 * y.d as u32);
    for (m, c) in y.mv.terms() {
        mv.add_term(m << shift, c.clone());
    }
    ProductClass::new(y.d, mv)
}

/// `mu^*` for the group law, `x_k -> x_k' + x_k''`.
pub fn mu_pull(x: &ExtClass) -> ProductClass {
    let d = x.d;
    let images: Vec<Multivector> = (0..2 * d as u32)
        .map(|k| &Multivector::generator(4 * d as u32, k) + &Multivector::generator(4 * d as u32, k + 2 * d as u32))
        .collect();
    ProductClass::new(d, x.mv.map_generators(4 * d as u32, &images))
}

/// `l = mu^* theta - p_1^* theta - p_2^* theta`.
pub fn poincare_class(d: usize) -> ProductClass {
    let t = ExtClass::theta(d);
    &(&mu_pull(&t) - &p1_pull(&t)) - &p2_pull(&t)
}

/// Integration over the first factor: the coefficient of the first copy's
/// top form, which is written first.
pub fn push_p2(x: &ProductClass) -> ExtClass {
    let bits = 2 * x.d as u32;
    let top = full_mask(bits);
    let mut mv = Multivector::zero(bits);
    for (m, c) in x.mv.terms() {
        if m & top == top {
            mv.add_term(m >> bits, c.clone());
        }
    }
    ExtClass::new(x.d, mv)
}

/// `int x . y` over `B x B` without forming the product.
fn integrate_wedge(x: &ProductClass, y: &ProductClass) -> Rational {
    let top = full_mask(4 * x.d as u32);
    y.mv.terms().fold(Rational::zero(), |acc, (u, c)| {
        let v = top ^ u;
        let xv = x.mv.coefficient(v);
        if xv.is_zero() {
            acc
        } else {
            let term = xv * c.clone();
            if wedge_sign(v, u) > 0 {
                acc + term
            } else {
                acc - term
            }
        }
    })
}

/// Precomputed data for one dimension `d`.
#[derive(Clone, Debug)]
pub struct Oracle {
    d: usize,
    exp_l: ProductClass,
}

impl Oracle {
    pub fn new(d: usize) -> Self {
        assert!(d <= 8, "the exterior model supports d <= 8");
        Oracle {
            d,
            exp_l: ProductClass::new(d, poincare_class(d).mv.exp()),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// `e^l` on `B x B`.
    pub fn exp_l(&self) -> &ProductClass {
        &self.exp_l
    }

    /// `F(x) = p_2*(e^l . p_1^* x)`.
    pub fn fourier(&self, x: &ExtClass) -> ExtClass {
        push_p2(&self.exp_l.wedge(&p1_pull(x)))
    }

    /// `x * y = mu_*(p_1^*x . p_2^*y)`, with `mu_*` adjoint to `mu^*`:
    /// `int mu_*(Z) . e = int Z . mu^* e`.
    pub fn pontryagin(&self, x: &ExtClass, y: &ExtClass) -> ExtClass {
        let bits = 2 * self.d as u32;
        let top = full_mask(bits);
        let z = p1_pull(x).wedge(&p2_pull(y));
        let mut mv = Multivector::zero(bits);
        for s in 0..=top {
            let comp = top ^ s;
            let pairing = integrate_wedge(&z, &mu_pull(&ExtClass::basis(self.d, comp)));
            if !pairing.is_zero() {
                // int e_s . e_comp = wedge_sign(s, comp)
                let c = if wedge_sign(s, comp) > 0 { pairing } else { -pairing };
                mv.add_term(s, c);
            }
        }
        ExtClass::new(self.d, mv)
    }

    /// `c` with `F(x * y) = c F(x) . F(y)`, when both sides are nonzero and
    /// proportional.
    pub fn intertwining_constant(&self, x: &ExtClass, y: &ExtClass) -> Option<Rational> {
        let lhs = self.fourier(&self.pontryagin(x, y));
        let rhs = self.fourier(x).wedge(&self.fourier(y));
        if rhs.is_zero() {
            return None;
        }
        lhs.ratio_to(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poincare_class_small() {
        assert!(poincare_class(0).is_zero());
        // a b' + a' b with a=x0, b=x1, a'=x2, b'=x3: a^b' is 0b1001, a'^b is
        // -(b^a') = -0b0110
        let l = poincare_class(1);
        assert_eq!(l.mv.coefficient(0b1001), Rational::one());
        assert_eq!(l.mv.coefficient(0b0110), Rational::integer(-1));
        assert_eq!(l.mv.terms().count(), 2);
    }

    #[test]
    fn poincare_class_vanishes_on_axes() {
        for d in 0..4 {
            let l = poincare_class(d);
            // restricting to B x {0} kills every second-copy generator
            let copy1 = full_mask(2 * d as u32);
            assert!(l.mv.terms().all(|(m, _)| m & copy1 != 0 && m & !copy1 != 0));
        }
    }

    #[test]
    fn push_examples() {
        let d = 2;
        let y = ExtClass::basis(d, 0b0101);
        assert_eq!(push_p2(&p1_pull(&ExtClass::point(d)).wedge(&p2_pull(&y))), y);
        assert!(push_p2(&p1_pull(&ExtClass::theta(d))).is_zero());
        assert!(push_p2(&p2_pull(&y)).is_zero());
    }

    #[test]
    fn fourier_on_a_curve() {
        let o = Oracle::new(1);
        assert_eq!(o.fourier(&ExtClass::point(1)), ExtClass::one(1));
        assert_eq!(o.fourier(&ExtClass::one(1)), -&ExtClass::point(1));
        assert_eq!(o.fourier(&ExtClass::basis(1, 0b01)), -&ExtClass::basis(1, 0b01));
        assert_eq!(o.fourier(&ExtClass::basis(1, 0b10)), -&ExtClass::basis(1, 0b10));
    }

    #[test]
    fn fourier_of_theta_power() {
        for d in 0..4 {
            let o = Oracle::new(d);
            let mut t = ExtClass::one(d);
            for _ in 0..d {
                t = t.wedge(&ExtClass::theta(d));
            }
            let t = t.scale(&Rational::factorial(d as u32).recip());
            assert_eq!(t, ExtClass::point(d));
            assert_eq!(o.fourier(&t), ExtClass::one(d));
        }
    }

    #[test]
    fn point_is_the_unit_of_pontryagin() {
        for d in 0..3 {
            let o = Oracle::new(d);
            let pt = ExtClass::point(d);
            assert_eq!(o.pontryagin(&pt, &pt), pt);
            if d > 0 {
                let y = ExtClass::basis(d, 0b11);
                assert_eq!(o.pontryagin(&pt, &y), y);
                assert_eq!(o.pontryagin(&y, &pt), y);
            }
        }
    }
}
