//! The P^1-bundle `P = P(J + O)` over `B` and the product `P x P`.
//!
//! `CH(P) = CH(B)[eta] / (eta^2 - eta . q^*gamma)`, so every class is
//! `q^*z + q^*w . eta` and products of `eta_1`, `eta_2` reduce to degree
//! at most one in each.

use std::fmt;

use crate::base::product::{self, CycleBB};
use crate::base::CycleB;
use crate::error::CycleError;
use crate::rational::Rational;

/// `q^*z + q^*w . eta` on `P`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleP {
    pub z: CycleB,
    pub w: CycleB,
}

impl CycleP {
    pub fn new(z: CycleB, w: CycleB) -> Result<CycleP, CycleError> {
        if z.dim() != w.dim() {
            return Err(CycleError::MixedSpace {
                left: format!("B(d={})", z.dim()),
                right: format!("B(d={})", w.dim()),
            });
        }
        Ok(CycleP { z, w })
    }

    pub fn zero(dim: usize) -> CycleP {
        CycleP {
            z: CycleB::zero(dim),
            w: CycleB::zero(dim),
        }
    }

    pub fn one(dim: usize) -> CycleP {
        CycleP {
            z: CycleB::one(dim),
            w: CycleB::zero(dim),
        }
    }

    /// `eta = [P_1]`, the hyperplane class.
    pub fn eta(dim: usize) -> CycleP {
        CycleP {
            z: CycleB::zero(dim),
            w: CycleB::one(dim),
        }
    }

    /// `[P_2] = eta - q^*gamma`.
    pub fn section2(dim: usize) -> CycleP {
        CycleP {
            z: -CycleB::gamma(dim),
            w: CycleB::one(dim),
        }
    }

    pub fn pull(z: &CycleB) -> CycleP {
        CycleP {
            z: z.clone(),
            w: CycleB::zero(z.dim()),
        }
    }

    pub fn dim(&self) -> usize {
        self.z.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.w.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> CycleP {
        CycleP {
            z: self.z.scale(c),
            w: self.w.scale(c),
        }
    }

    /// `q_*`: the `eta`-coefficient, since `q_* eta = 1` and `q_* q^* = 0`.
    pub fn q_push(&self) -> CycleB {
        self.w.clone()
    }

    /// Applies a linear map on `B` to both parts.
    pub fn map(&self, f: impl Fn(&CycleB) -> CycleB) -> CycleP {
        CycleP {
            z: f(&self.z),
            w: f(&self.w),
        }
    }
}

impl std::ops::Add for &CycleP {
    type Output = CycleP;
    fn add(self, rhs: &CycleP) -> CycleP {
        CycleP {
            z: &self.z + &rhs.z,
            w: &self.w + &rhs.w,
        }
    }
}

impl std::ops::Sub for &CycleP {
    type Output = CycleP;
    fn sub(self, rhs: &CycleP) -> CycleP {
        CycleP {
            z: &self.z - &rhs.z,
            w: &self.w - &rhs.w,
        }
    }
}

impl std::ops::Neg for &CycleP {
    type Output = CycleP;
    fn neg(self) -> CycleP {
        CycleP {
            z: -&self.z,
            w: -&self.w,
        }
    }
}

impl std::ops::Mul for &CycleP {
    type Output = CycleP;
    /// `(z1 + w1 eta)(z2 + w2 eta) = z1 z2 + (z1 w2 + w1 z2 + w1 w2 gamma) eta`.
    fn mul(self, rhs: &CycleP) -> CycleP {
        let g = CycleB::gamma(self.dim());
        let ww = &self.w * &rhs.w;
        CycleP {
            z: &self.z * &rhs.z,
            w: &(&(&self.z * &rhs.w) + &(&self.w * &rhs.z)) + &(&ww * &g),
        }
    }
}

impl fmt::Display for CycleP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^*({}) + q^*({})*eta", self.z, self.w)
    }
}

/// `sum (q x q)^*(c[e1][e2]) . eta_1^e1 . eta_2^e2` on `P x P`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclePP {
    pub c: [[CycleBB; 2]; 2],
}

impl CyclePP {
    pub fn zero(dim: usize) -> CyclePP {
        let z = CycleBB::zero(dim);
        CyclePP {
            c: [[z.clone(), z.clone()], [z.clone(), z]],
        }
    }

    pub fn one(dim: usize) -> CyclePP {
        Self::pull(&CycleBB::one(dim))
    }

    /// `(q x q)^*`.
    pub fn pull(x: &CycleBB) -> CyclePP {
        Self::with_component(x, 0, 0)
    }

    /// `(q x q)^*(x) . eta_1^e1 . eta_2^e2` for `e1, e2 in {0, 1}`.
    pub fn with_component(x: &CycleBB, e1: usize, e2: usize) -> CyclePP {
        let mut out = Self::zero(x.dim());
        out.c[e1][e2] = x.clone();
        out
    }

    pub fn eta1(dim: usize) -> CyclePP {
        Self::with_component(&CycleBB::one(dim), 1, 0)
    }

    pub fn eta2(dim: usize) -> CyclePP {
        Self::with_component(&CycleBB::one(dim), 0, 1)
    }

    pub fn dim(&self) -> usize {
        self.c[0][0].dim()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(|x| x.is_zero())
    }

    pub fn component(&self, e1: usize, e2: usize) -> &CycleBB {
        &self.c[e1][e2]
    }

    pub fn scale(&self, k: &Rational) -> CyclePP {
        self.map(|x| x.scale(k))
    }

    /// Multiplies every component by a class pulled back from `B x B`.
    pub fn mul_base(&self, y: &CycleBB) -> CyclePP {
        self.map(|x| x * y)
    }

    pub fn map(&self, f: impl Fn(&CycleBB) -> CycleBB) -> CyclePP {
        CyclePP {
            c: [
                [f(&self.c[0][0]), f(&self.c[0][1])],
                [f(&self.c[1][0]), f(&self.c[1][1])],
            ],
        }
    }

    /// `p_1^*(q^*z + q^*w eta) = (q x q)^* q_1^* z + (q x q)^* q_1^* w . eta_1`.
    pub fn p1_pull(x: &CycleP) -> CyclePP {
        let mut out = Self::zero(x.dim());
        out.c[0][0] = product::q1(&x.z);
        out.c[1][0] = product::q1(&x.w);
        out
    }

    /// `p_{2*}`: terms without `eta_1` die, and
    /// `p_{2*}((q x q)^* y . eta_1) = q^* q_{2*} y`.
    pub fn p2_push(&self) -> CycleP {
        CycleP {
            z: product::q2_push(&self.c[1][0]),
            w: product::q2_push(&self.c[1][1]),
        }
    }

    /// `(q x q)_*`, which keeps the `eta_1 eta_2` coefficient.
    pub fn qq_push(&self) -> CycleBB {
        self.c[1][1].clone()
    }
}

impl std::ops::Add for &CyclePP {
    type Output = CyclePP;
    fn add(self, rhs: &CyclePP) -> CyclePP {
        CyclePP {
            c: [
                [&self.c[0][0] + &rhs.c[0][0], &self.c[0][1] + &rhs.c[0][1]],
                [&self.c[1][0] + &rhs.c[1][0], &self.c[1][1] + &rhs.c[1][1]],
            ],
        }
    }
}

impl std::ops::Sub for &CyclePP {
    type Output = CyclePP;
    fn sub(self, rhs: &CyclePP) -> CyclePP {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &CyclePP {
    type Output = CyclePP;
    fn neg(self) -> CyclePP {
        self.map(|x| -x)
    }
}

impl std::ops::Mul for &CyclePP {
    type Output = CyclePP;
    /// Uses `eta_i^2 = eta_i . gamma_i`.
    fn mul(self, rhs: &CyclePP) -> CyclePP {
        let dim = self.dim();
        let reduce = [product::gamma1(dim), product::gamma2(dim)];
        let mut out = CyclePP::zero(dim);
        for a1 in 0..2 {
            for a2 in 0..2 {
                if self.c[a1][a2].is_zero() {
                    continue;
                }
                for b1 in 0..2 {
                    for b2 in 0..2 {
                        if rhs.c[b1][b2].is_zero() {
                            continue;
                        }
                        let mut x = &self.c[a1][a2] * &rhs.c[b1][b2];
                        if a1 + b1 == 2 {
                            x = &x * &reduce[0];
                        }
                        if a2 + b2 == 2 {
                            x = &x * &reduce[1];
                        }
                        let (e1, e2) = ((a1 + b1).min(1), (a2 + b2).min(1));
                        out.c[e1][e2] = &out.c[e1][e2] + &x;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CyclePP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const ETA: [[&str; 2]; 2] = [["1", "eta2"], ["eta1", "eta1*eta2"]];
        let mut first = true;
        for (e1, row) in ETA.iter().enumerate() {
            for (e2, label) in row.iter().enumerate() {
                if self.c[e1][e2].is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "[{}]*{label}", self.c[e1][e2])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
