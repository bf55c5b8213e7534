//! Classes on `B x B` of the form `q1^*(u) . q2^*(v) . l^n`.

use std::fmt;

use super::atom::{Atom, MonoB};
use super::cycle_b::CycleB;
use crate::expr::{Expr, Monomial};
use crate::grade::Bigrade;
use crate::rational::Rational;

/// A monic monomial `q1^*(u) q2^*(v) l^n` on `B x B`.
///
/// `dim` passed to the [`Monomial`] methods is `d = dim B`; the product has
/// dimension `2d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct MonoBB {
    pub u: MonoB,
    pub v: MonoB,
    pub ell: u32,
}

impl Monomial for MonoBB {
    const SPACE: &'static str = "BxB";

    fn one() -> Self {
        MonoBB::default()
    }

    fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_one() && self.ell == 0
    }

    fn grade(&self, dim: usize) -> Bigrade {
        self.u.grade(dim) + self.v.grade(dim) + Bigrade::new(self.ell as i32, 0)
    }

    fn mul(&self, other: &Self, dim: usize) -> Option<Self> {
        MonoBB {
            u: self.u.mul(&other.u, dim)?,
            v: self.v.mul(&other.v, dim)?,
            ell: self.ell + other.ell,
        }
        .canonical(dim)
    }

    fn canonical(self, dim: usize) -> Option<Self> {
        let m = MonoBB {
            u: self.u.canonical(dim)?,
            v: self.v.canonical(dim)?,
            ell: self.ell,
        };
        if m.grade(dim).codim > 2 * dim as i32 {
            None
        } else {
            Some(m)
        }
    }
}

impl fmt::Display for MonoBB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.u.is_one() {
            parts.push(format!("q1({})", self.u));
        }
        if !self.v.is_one() {
            parts.push(format!("q2({})", self.v));
        }
        match self.ell {
            0 => {}
            1 => parts.push("l".to_string()),
            n => parts.push(format!("l^{n}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Display for Expr<MonoBB> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::cycle_b::write_linear(f, self.terms())
    }
}

/// A class on `B x B`.
pub type CycleBB = Expr<MonoBB>;

/// `q1^*`.
pub fn q1(x: &CycleB) -> CycleBB {
    x.flat_map(x.dim(), |m| {
        Expr::monomial(
            x.dim(),
            MonoBB {
                u: m.clone(),
                ..MonoBB::default()
            },
        )
    })
}

/// `q2^*`.
pub fn q2(x: &CycleB) -> CycleBB {
    x.flat_map(x.dim(), |m| {
        Expr::monomial(
            x.dim(),
            MonoBB {
                v: m.clone(),
                ..MonoBB::default()
            },
        )
    })
}

/// `q1^*(x) . q2^*(y)`.
pub fn outer(x: &CycleB, y: &CycleB) -> CycleBB {
    &q1(x) * &q2(y)
}

/// `gamma_1^a gamma_2^b`.
pub fn gammas(a: u32, b: u32, dim: usize) -> CycleBB {
    Expr::monomial(
        dim,
        MonoBB {
            u: MonoB::atom_pow(Atom::Gamma, a),
            v: MonoB::atom_pow(Atom::Gamma, b),
            ell: 0,
        },
    )
}

pub fn gamma1(dim: usize) -> CycleBB {
    gammas(1, 0, dim)
}

pub fn gamma2(dim: usize) -> CycleBB {
    gammas(0, 1, dim)
}

/// `l^n`, the `n`-th power of the Poincare class.
pub fn ell_pow(n: u32, dim: usize) -> CycleBB {
    Expr::monomial(
        dim,
        MonoBB {
            ell: n,
            ..MonoBB::default()
        },
    )
}

/// `e^l = sum_{n <= 2d} l^n / n!`, exact after truncation.
pub fn exp_l(dim: usize) -> CycleBB {
    Expr::from_terms(
        dim,
        (0..=2 * dim as u32).map(|n| {
            (
                MonoBB {
                    ell: n,
                    ..MonoBB::default()
                },
                Rational::factorial(n).recip(),
            )
        }),
    )
}

/// `q2_*` on `B x B`.
///
/// `F_B(u)` is concentrated in codimension `d - i + j`, so of the pieces
/// `q2_*(l^n q1^* u)` only `n = 2(d - i) + j` survives, and it equals
/// `n! F_B(u)`.
pub fn q2_push(y: &CycleBB) -> CycleB {
    let dim = y.dim();
    let d = dim as i32;
    y.flat_map(dim, |m| {
        let g = m.u.grade(dim);
        if m.ell as i32 != 2 * (d - g.codim) + g.weight {
            return CycleB::zero(dim);
        }
        let fu = Expr::monomial(dim, m.u.clone()).fb();
        (&fu * &Expr::monomial(dim, m.v.clone())).scale(&Rational::factorial(m.ell))
    })
}

/// `phi_k = sum_{m < k} (-1)^m gamma_1^m gamma_2^(k-1-m)`.
pub fn phi(k: u32, dim: usize) -> CycleBB {
    Expr::from_terms(
        dim,
        (0..k).map(|m| {
            (
                MonoBB {
                    u: MonoB::atom_pow(Atom::Gamma, m),
                    v: MonoB::atom_pow(Atom::Gamma, k - 1 - m),
                    ell: 0,
                },
                Rational::sign(m as i64),
            )
        }),
    )
}

/// Exchanges the two factors.
pub fn swap(y: &CycleBB) -> CycleBB {
    y.flat_map(y.dim(), |m| {
        Expr::monomial(
            y.dim(),
            MonoBB {
                u: m.v.clone(),
                v: m.u.clone(),
                ell: m.ell,
            },
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str, i: i32, j: i32, d: usize) -> CycleB {
        CycleB::symbol(name, i, j, d).unwrap()
    }

    #[test]
    fn exp_l_coefficients() {
        assert_eq!(exp_l(0), CycleBB::one(0));
        let e = exp_l(1);
        assert_eq!(e.len(), 3);
        assert_eq!(
            e.coefficient(&MonoBB {
                ell: 2,
                ..MonoBB::default()
            }),
            Rational::new(1, 2)
        );
        for n in 0..=6 {
            let c = exp_l(3).coefficient(&MonoBB {
                ell: n,
                ..MonoBB::default()
            });
            assert_eq!(c, Rational::factorial(n).recip());
        }
        assert!(ell_pow(7, 3).is_zero());
    }

    #[test]
    fn point_pushes_to_second_factor() {
        for d in 0..4 {
            let v = sym("v", 1.min(d as i32), 0, d);
            assert_eq!(q2_push(&outer(&CycleB::point(d), &v)), v);
        }
    }

    #[test]
    fn kernel_integral_is_the_transform() {
        let d = 3;
        for i in 0..=3 {
            for j in 0..=i {
                let u = sym("u", i, j, d);
                let pushed = q2_push(&(&exp_l(d) * &q1(&u)));
                assert_eq!(pushed, u.fb());
                if i < d as i32 {
                    assert!(q2_push(&q1(&u)).is_zero());
                }
            }
        }
    }

    #[test]
    fn phi_small_cases() {
        assert!(phi(0, 2).is_zero());
        assert_eq!(phi(1, 2), CycleBB::one(2));
        assert_eq!(phi(2, 2), &gamma2(2) - &gamma1(2));
        // phi_{k+1} = (b - a) phi_k + ab phi_{k-1}
        let d = 4;
        let ab = gammas(1, 1, d);
        for k in 1..8 {
            let rec = &(&(&gamma2(d) - &gamma1(d)) * &phi(k, d)) + &(&ab * &phi(k - 1, d));
            assert_eq!(phi(k + 1, d), rec);
        }
    }

    #[test]
    fn truncation_on_product() {
        let d = 1;
        let p = outer(&CycleB::point(d), &CycleB::point(d));
        assert!((&p * &ell_pow(1, d)).is_zero());
        assert!((&gamma1(d) * &gamma1(d)).is_zero());
        assert_eq!((&gamma1(d) * &gamma2(d)).len(), 1);
    }
}
