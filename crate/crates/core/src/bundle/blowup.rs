//! The blow-up `V~` of `P x P` along `P_1 x P_2` and `P_2 x P_1`.
//!
//! Classes on an exceptional divisor `E_ij` are written `pi^*a . xi + pi^*b`
//! over `B x B` (via the isomorphism `P_i x P_j -> B x B`), with `xi^2`
//! reduced by `xi^2 = (gamma_j - gamma_i) xi + gamma_i gamma_j`.

use std::fmt;

use super::projective::{CycleP, CyclePP};
use crate::base::product::{self, CycleBB};
use crate::rational::Rational;

/// Which exceptional divisor: over `P_1 x P_2` or over `P_2 x P_1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Div {
    E12,
    E21,
}

impl Div {
    pub const ALL: [Div; 2] = [Div::E12, Div::E21];

    /// `gamma_i` and `gamma_j` for `E_ij`.
    fn gammas(self, dim: usize) -> (CycleBB, CycleBB) {
        match self {
            Div::E12 => (product::gamma1(dim), product::gamma2(dim)),
            Div::E21 => (product::gamma2(dim), product::gamma1(dim)),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Div::E12 => "12",
            Div::E21 => "21",
        }
    }
}

/// `pi^*a . xi + pi^*b` on the exceptional divisor `div`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleE {
    pub div: Div,
    pub a: CycleBB,
    pub b: CycleBB,
}

impl CycleE {
    pub fn zero(div: Div, dim: usize) -> CycleE {
        CycleE {
            div,
            a: CycleBB::zero(dim),
            b: CycleBB::zero(dim),
        }
    }

    /// `pi^*b`.
    pub fn pull(div: Div, b: &CycleBB) -> CycleE {
        CycleE {
            div,
            a: CycleBB::zero(b.dim()),
            b: b.clone(),
        }
    }

    pub fn xi(div: Div, dim: usize) -> CycleE {
        CycleE {
            div,
            a: CycleBB::one(dim),
            b: CycleBB::zero(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> CycleE {
        CycleE {
            div: self.div,
            a: self.a.scale(k),
            b: self.b.scale(k),
        }
    }

    pub fn mul_base(&self, y: &CycleBB) -> CycleE {
        CycleE {
            div: self.div,
            a: &self.a * y,
            b: &self.b * y,
        }
    }

    fn same_div(&self, other: &CycleE) {
        assert_eq!(self.div, other.div, "classes on different exceptional divisors");
    }

    /// `xi^k` by repeated multiplication and reduction.
    pub fn xi_power_iterated(div: Div, k: u32, dim: usize) -> CycleE {
        let xi = Self::xi(div, dim);
        (0..k).fold(Self::pull(div, &CycleBB::one(dim)), |acc, _| &acc * &xi)
    }

    /// `xi^k` in closed form: `(phi_k, gamma_1 gamma_2 phi_(k-1))` on `E_12`,
    /// and the same with signs `(-1)^(k+1)`, `(-1)^k` on `E_21`.
    pub fn xi_power(div: Div, k: u32, dim: usize) -> CycleE {
        if k == 0 {
            return Self::pull(div, &CycleBB::one(dim));
        }
        let g12 = product::gammas(1, 1, dim);
        CycleE {
            div,
            a: phi_for(div, k, dim),
            b: &g12 * &phi_for(div, k - 1, dim),
        }
    }
}

/// `A_ij(k)` read over `B x B`: `phi_k` for `E_12`, `(-1)^(k+1) phi_k` for
/// `E_21`.
pub fn phi_for(div: Div, k: u32, dim: usize) -> CycleBB {
    let p = product::phi(k, dim);
    match div {
        Div::E12 => p,
        Div::E21 => p.scale(&Rational::sign(k as i64 + 1)),
    }
}

impl std::ops::Add for &CycleE {
    type Output = CycleE;
    fn add(self, rhs: &CycleE) -> CycleE {
        self.same_div(rhs);
        CycleE {
            div: self.div,
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl std::ops::Mul for &CycleE {
    type Output = CycleE;
    fn mul(self, rhs: &CycleE) -> CycleE {
        self.same_div(rhs);
        let (gi, gj) = self.div.gammas(self.dim());
        let aa = &self.a * &rhs.a;
        // xi^2 = (gamma_j - gamma_i) xi + gamma_i gamma_j
        let a = &(&(&self.a * &rhs.b) + &(&self.b * &rhs.a)) + &(&aa * &(&gj - &gi));
        let b = &(&self.b * &rhs.b) + &(&aa * &(&gi * &gj));
        CycleE { div: self.div, a, b }
    }
}

impl fmt::Display for CycleE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}[({})*xi + ({})]", self.div.label(), self.a, self.b)
    }
}

/// `lambda_ij*(psi^* alpha) = (q x q)^*alpha . (eta_1 eta_2 - eta_i gamma_j)`.
pub fn lambda_push(div: Div, alpha: &CycleBB) -> CyclePP {
    let dim = alpha.dim();
    let mut out = CyclePP::zero(dim);
    out.c[1][1] = alpha.clone();
    match div {
        Div::E12 => out.c[1][0] = -(alpha * &product::gamma2(dim)),
        Div::E21 => out.c[0][1] = -(alpha * &product::gamma1(dim)),
    }
    out
}

/// Restriction to `P_i x P_j`, read over `B x B`.
///
/// `eta|_{P_1} = gamma` (normal bundle `J`) and `eta|_{P_2} = 0` since the
/// sections are disjoint.
pub fn lambda_restrict(div: Div, y: &CyclePP) -> CycleBB {
    let dim = y.dim();
    match div {
        Div::E12 => &y.c[0][0] + &(&y.c[1][0] * &product::gamma1(dim)),
        Div::E21 => &y.c[0][0] + &(&y.c[0][1] * &product::gamma2(dim)),
    }
}

/// `tau^*(main) + eps_12*(e12) + eps_21*(e21)` on the blow-up.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleV {
    pub main: CyclePP,
    pub e12: CycleE,
    pub e21: CycleE,
}

impl CycleV {
    pub fn zero(dim: usize) -> CycleV {
        Self::tau_pull(&CyclePP::zero(dim))
    }

    pub fn one(dim: usize) -> CycleV {
        Self::tau_pull(&CyclePP::one(dim))
    }

    pub fn tau_pull(y: &CyclePP) -> CycleV {
        let dim = y.dim();
        CycleV {
            main: y.clone(),
            e12: CycleE::zero(Div::E12, dim),
            e21: CycleE::zero(Div::E21, dim),
        }
    }

    /// `eps_*` of a class on one exceptional divisor.
    pub fn eps_push(e: &CycleE) -> CycleV {
        let mut out = Self::zero(e.dim());
        *out.exceptional_mut(e.div) = e.clone();
        out
    }

    /// The divisor class `E_ij = eps_*(1)`.
    pub fn divisor(div: Div, dim: usize) -> CycleV {
        Self::eps_push(&CycleE::pull(div, &CycleBB::one(dim)))
    }

    pub fn dim(&self) -> usize {
        self.main.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.main.is_zero() && self.e12.is_zero() && self.e21.is_zero()
    }

    pub fn exceptional(&self, div: Div) -> &CycleE {
        match div {
            Div::E12 => &self.e12,
            Div::E21 => &self.e21,
        }
    }

    fn exceptional_mut(&mut self, div: Div) -> &mut CycleE {
        match div {
            Div::E12 => &mut self.e12,
            Div::E21 => &mut self.e21,
        }
    }

    pub fn scale(&self, k: &Rational) -> CycleV {
        CycleV {
            main: self.main.scale(k),
            e12: self.e12.scale(k),
            e21: self.e21.scale(k),
        }
    }

    pub fn pow(&self, k: u32) -> CycleV {
        (0..k).fold(Self::one(self.dim()), |acc, _| &acc * self)
    }

    /// `tau_*`: `tau_* tau^* = id`, and `pi_* (pi^*a xi + pi^*b) = a`.
    pub fn tau_push(&self) -> CyclePP {
        Div::ALL.iter().fold(self.main.clone(), |acc, &div| {
            &acc + &lambda_push(div, &self.exceptional(div).a)
        })
    }

    /// `E_ij^k = (-1)^(k-1) eps_*(xi^(k-1))`.
    pub fn e_power(div: Div, k: u32, dim: usize) -> CycleV {
        assert!(k >= 1, "E^0 is the unit, not an exceptional class");
        Self::eps_push(&CycleE::xi_power(div, k - 1, dim).scale(&Rational::sign(k as i64 - 1)))
    }

    /// `e^(-E_12 - E_21) = 1 + sum_{k=1}^{kmax} (-1)^k/k! (E_12^k + E_21^k)`.
    pub fn exp_minus_e(dim: usize, kmax: u32) -> CycleV {
        (1..=kmax).fold(Self::one(dim), |acc, k| {
            let c = Rational::sign(k as i64) * Rational::factorial(k).recip();
            let ek = &Self::e_power(Div::E12, k, dim) + &Self::e_power(Div::E21, k, dim);
            &acc + &ek.scale(&c)
        })
    }
}

impl std::ops::Add for &CycleV {
    type Output = CycleV;
    fn add(self, rhs: &CycleV) -> CycleV {
        CycleV {
            main: &self.main + &rhs.main,
            e12: &self.e12 + &rhs.e12,
            e21: &self.e21 + &rhs.e21,
        }
    }
}

impl std::ops::Sub for &CycleV {
    type Output = CycleV;
    fn sub(self, rhs: &CycleV) -> CycleV {
        self + &rhs.scale(&Rational::integer(-1))
    }
}

impl std::ops::Mul for &CycleV {
    type Output = CycleV;
    /// `tau^*y . eps_*e = eps_*(y|_E . e)`, `eps_*e . eps_*e' = eps_*(-xi e e')`
    /// on one divisor, and `E_12 . E_21 = 0`.
    fn mul(self, rhs: &CycleV) -> CycleV {
        let dim = self.dim();
        let mut out = CycleV::tau_pull(&(&self.main * &rhs.main));
        for div in Div::ALL {
            let (l, r) = (self.exceptional(div), rhs.exceptional(div));
            let mut e = CycleE::zero(div, dim);
            if !r.is_zero() {
                e = &e + &r.mul_base(&lambda_restrict(div, &self.main));
            }
            if !l.is_zero() {
                e = &e + &l.mul_base(&lambda_restrict(div, &rhs.main));
                if !r.is_zero() {
                    let minus_xi = CycleE::xi(div, dim).scale(&Rational::integer(-1));
                    e = &e + &(&(l * r) * &minus_xi);
                }
            }
            *out.exceptional_mut(div) = e;
        }
        out
    }
}

impl fmt::Display for CycleV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau^*({}) + eps*({}) + eps*({})", self.main, self.e12, self.e21)
    }
}

/// `tau_*(tau^* p_1^* x . (E_12^k + E_21^k))` in closed form:
///
/// `sum_{m=0}^{k-2} (-1)^m { q1^*[((-1)^(k+1) - 1) z + (-1)^(k+1) w gamma) gamma^m] eta_1 eta_2
///   + (-1)^k q1^*[(z + w gamma) gamma^m] eta_1 gamma_2
///   + q1^*(z gamma^(m+1)) eta_2 } gamma_2^(k-2-m)`.
pub fn tau_push_xe_closed(x: &CycleP, k: u32) -> CyclePP {
    let dim = x.dim();
    let mut out = CyclePP::zero(dim);
    if k < 2 {
        return out;
    }
    let gamma = crate::base::CycleB::gamma(dim);
    let sk1 = Rational::sign(k as i64 + 1);
    let z_plus = &x.z + &(&x.w * &gamma);
    let c11_base = &x.z.scale(&(&sk1 - &Rational::one())) + &(&x.w * &gamma).scale(&sk1);
    for m in 0..=k - 2 {
        let gm = crate::base::CycleB::gamma_pow(m, dim);
        let sign = Rational::sign(m as i64);
        let g2 = product::gammas(0, k - 2 - m, dim);
        let c11 = &product::q1(&(&c11_base * &gm)) * &g2;
        let c10 = &(&product::q1(&(&z_plus * &gm)) * &g2) * &product::gamma2(dim);
        let c01 = &product::q1(&(&x.z * &(&gm * &gamma))) * &g2;
        out.c[1][1] = &out.c[1][1] + &c11.scale(&sign);
        out.c[1][0] = &out.c[1][0] + &c10.scale(&(&sign * &Rational::sign(k as i64)));
        out.c[0][1] = &out.c[0][1] + &c01.scale(&sign);
    }
    out
}

/// The same quantity through the generic blow-up calculus.
pub fn tau_push_xe_generic(x: &CycleP, k: u32) -> CyclePP {
    let dim = x.dim();
    let pulled = CycleV::tau_pull(&CyclePP::p1_pull(x));
    let ek = &CycleV::e_power(Div::E12, k, dim) + &CycleV::e_power(Div::E21, k, dim);
    (&pulled * &ek).tau_push()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::product::{gamma1, gamma2, gammas, q1};
    use crate::base::CycleB;

    fn sym(name: &str, i: i32, j: i32, d: usize) -> CycleB {
        CycleB::symbol(name, i, j, d).unwrap()
    }

    #[test]
    fn xi_powers_small() {
        let d = 4;
        assert_eq!(CycleE::xi_power(Div::E12, 1, d), CycleE::xi(Div::E12, d));
        let x2 = CycleE::xi_power(Div::E12, 2, d);
        assert_eq!(x2.a, &gamma2(d) - &gamma1(d));
        assert_eq!(x2.b, gammas(1, 1, d));
        let x3 = CycleE::xi_power(Div::E12, 3, d);
        assert_eq!(x3.a, &(&gammas(2, 0, d) - &gammas(1, 1, d)) + &gammas(0, 2, d));
        assert_eq!(x3.b, &gammas(1, 2, d) - &gammas(2, 1, d));
    }

    #[test]
    fn xi_closed_form_matches_iteration() {
        for d in 0..5 {
            for div in Div::ALL {
                for k in 0..=2 * (d as u32 + 1) {
                    assert_eq!(
                        CycleE::xi_power(div, k, d),
                        CycleE::xi_power_iterated(div, k, d),
                        "d={d} {div:?} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn exceptional_products() {
        let d = 2;
        let e12 = CycleV::divisor(Div::E12, d);
        let e21 = CycleV::divisor(Div::E21, d);
        assert!((&e12 * &e21).is_zero());
        assert_eq!(&e12 * &e12, CycleV::e_power(Div::E12, 2, d));
        assert_eq!(
            CycleV::e_power(Div::E12, 2, d),
            CycleV::eps_push(&CycleE::xi(Div::E12, d).scale(&Rational::integer(-1)))
        );
        for k in 1..6 {
            assert_eq!(e21.pow(k), CycleV::e_power(Div::E21, k, d));
        }
        let y = CyclePP::eta1(d);
        assert_eq!(&CycleV::tau_pull(&y) * &CycleV::one(d), CycleV::tau_pull(&y));
    }

    #[test]
    fn lambda_examples() {
        let d = 2;
        let l12 = lambda_push(Div::E12, &CycleBB::one(d));
        let expect = &(&CyclePP::eta1(d) * &CyclePP::eta2(d)) - &CyclePP::with_component(&gamma2(d), 1, 0);
        assert_eq!(l12, expect);
        let l21 = lambda_push(Div::E21, &CycleBB::one(d));
        let expect = &(&CyclePP::eta1(d) * &CyclePP::eta2(d)) - &CyclePP::with_component(&gamma1(d), 0, 1);
        assert_eq!(l21, expect);
        assert!(lambda_push(Div::E12, &CycleBB::zero(d)).is_zero());
        assert_eq!(lambda_restrict(Div::E12, &CyclePP::eta1(d)), gamma1(d));
        assert!(lambda_restrict(Div::E12, &CyclePP::eta2(d)).is_zero());
        assert_eq!(lambda_restrict(Div::E21, &CyclePP::eta2(d)), gamma2(d));
    }

    #[test]
    fn pushforward_of_a_over_section_product() {
        // (q x q)_* lambda_* A_ij(k) = (-1)^((k+1) j) phi_k
        let d = 3;
        for k in 0..8 {
            for div in Div::ALL {
                let a = CycleE::xi_power(div, k, d).a;
                let j = if div == Div::E12 { 2 } else { 1 };
                let expect = product::phi(k, d).scale(&Rational::sign((k as i64 + 1) * j));
                assert_eq!(lambda_push(div, &a).qq_push(), expect);
            }
        }
    }

    #[test]
    fn tau_push_basics() {
        let d = 2;
        let y = CyclePP::pull(&q1(&sym("z", 1, 0, d)));
        assert_eq!(CycleV::tau_pull(&y).tau_push(), y);
        let e = CycleE::pull(Div::E12, &gamma1(d));
        assert!(CycleV::eps_push(&e).tau_push().is_zero());
        let x = CycleP::new(sym("z", 1, 1, d), sym("w", 0, 0, d)).unwrap();
        assert!(tau_push_xe_generic(&x, 1).is_zero());
        assert!(tau_push_xe_closed(&x, 1).is_zero());
    }

    #[test]
    fn closed_lemma_matches_generic() {
        for d in 0..4 {
            let x = CycleP::new(&sym("z", 1.min(d as i32), 0, d) + &sym("y", 0, 0, d), sym("w", 0, 0, d)).unwrap();
            for k in 1..=2 * (d as u32 + 1) {
                assert_eq!(tau_push_xe_closed(&x, k), tau_push_xe_generic(&x, k), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn exp_minus_e_coefficients() {
        let d = 1;
        let e = CycleV::exp_minus_e(d, 4);
        let lin = &CycleV::divisor(Div::E12, d) + &CycleV::divisor(Div::E21, d);
        let literal = (0..=4u32).fold(CycleV::zero(d), |acc, k| {
            let c = Rational::sign(k as i64) * Rational::factorial(k).recip();
            &acc + &lin.pow(k).scale(&c)
        });
        assert_eq!(e, literal);
    }

    #[test]
    fn projection_formula() {
        let d = 2;
        let y = &CyclePP::pull(&q1(&sym("z", 1, 1, d))) + &CyclePP::eta2(d);
        let v = &CycleV::exp_minus_e(d, 6) + &CycleV::tau_pull(&CyclePP::eta1(d));
        let lhs = (&CycleV::tau_pull(&y) * &v).tau_push();
        assert_eq!(lhs, &y * &v.tau_push());
    }
}
