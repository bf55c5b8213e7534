//! Numeric replay of the blow-up computation in cohomology.
//!
//! With `gamma = 0` the relations become `eta^2 = 0` and `xi^2 = 0`, the
//! restriction to either section product forgets `eta`, and
//! `lambda_* alpha = alpha eta_1 eta_2`. Every class is a concrete
//! multivector, so nothing here shares code with the symbolic engine.

use super::model::{p1_pull, push_p2, ExtClass, Oracle, ProductClass};
use crate::rational::Rational;

/// `sum c[e1][e2] eta_1^e1 eta_2^e2` on `P x P`.
#[derive(Clone, Debug)]
struct NumPP {
    c: [[ProductClass; 2]; 2],
}

impl NumPP {
    fn zero(d: usize) -> Self {
        let z = ProductClass::zero(d);
        NumPP {
            c: [[z.clone(), z.clone()], [z.clone(), z]],
        }
    }

    fn with(d: usize, e1: usize, e2: usize, x: ProductClass) -> Self {
        let mut out = Self::zero(d);
        out.c[e1][e2] = x;
        out
    }

    fn add(&self, o: &Self) -> Self {
        NumPP {
            c: [
                [&self.c[0][0] + &o.c[0][0], &self.c[0][1] + &o.c[0][1]],
                [&self.c[1][0] + &o.c[1][0], &self.c[1][1] + &o.c[1][1]],
            ],
        }
    }

    fn mul(&self, o: &Self, d: usize) -> Self {
        let mut out = Self::zero(d);
        for a1 in 0..2 {
            for a2 in 0..2 {
                for b1 in 0..2 - a1 {
                    for b2 in 0..2 - a2 {
                        let x = self.c[a1][a2].wedge(&o.c[b1][b2]);
                        out.c[a1 + b1][a2 + b2] = &out.c[a1 + b1][a2 + b2] + &x;
                    }
                }
            }
        }
        out
    }

    fn restrict(&self) -> ProductClass {
        self.c[0][0].clone()
    }
}

/// `a xi + b` on an exceptional divisor.
#[derive(Clone, Debug)]
struct NumE {
    a: ProductClass,
    b: ProductClass,
}

impl NumE {
    fn zero(d: usize) -> Self {
        NumE {
            a: ProductClass::zero(d),
            b: ProductClass::zero(d),
        }
    }

    fn add(&self, o: &Self) -> Self {
        NumE {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        NumE {
            a: &self.a.wedge(&o.b) + &self.b.wedge(&o.a),
            b: self.b.wedge(&o.b),
        }
    }

    fn times_base(&self, y: &ProductClass) -> Self {
        NumE {
            a: y.wedge(&self.a),
            b: y.wedge(&self.b),
        }
    }

    /// Multiplication by `-xi`.
    fn times_minus_xi(&self) -> Self {
        NumE {
            a: self.b.scale(&Rational::integer(-1)),
            b: ProductClass::zero(self.a.dim()),
        }
    }
}

#[derive(Clone, Debug)]
struct NumV {
    main: NumPP,
    e: [NumE; 2],
}

impl NumV {
    fn tau_pull(main: NumPP, d: usize) -> Self {
        NumV {
            main,
            e: [NumE::zero(d), NumE::zero(d)],
        }
    }

    fn divisor(k: usize, d: usize) -> Self {
        let mut v = Self::tau_pull(NumPP::zero(d), d);
        v.e[k].b = ProductClass::one(d);
        v
    }

    fn add(&self, o: &Self) -> Self {
        NumV {
            main: self.main.add(&o.main),
            e: [self.e[0].add(&o.e[0]), self.e[1].add(&o.e[1])],
        }
    }

    fn scale(&self, c: &Rational) -> Self {
        let s = |x: &ProductClass| x.scale(c);
        NumV {
            main: NumPP {
                c: [
                    [s(&self.main.c[0][0]), s(&self.main.c[0][1])],
                    [s(&self.main.c[1][0]), s(&self.main.c[1][1])],
                ],
            },
            e: [
                NumE {
                    a: s(&self.e[0].a),
                    b: s(&self.e[0].b),
                },
                NumE {
                    a: s(&self.e[1].a),
                    b: s(&self.e[1].b),
                },
            ],
        }
    }

    fn mul(&self, o: &Self, d: usize) -> Self {
        let e = |k: usize| {
            self.e[k]
                .times_base(&o.main.restrict())
                .add(&o.e[k].times_base(&self.main.restrict()))
                .add(&self.e[k].mul(&o.e[k]).times_minus_xi())
        };
        NumV {
            main: self.main.mul(&o.main, d),
            e: [e(0), e(1)],
        }
    }

    fn tau_push(&self, d: usize) -> NumPP {
        self.e
            .iter()
            .fold(self.main.clone(), |acc, e| acc.add(&NumPP::with(d, 1, 1, e.a.clone())))
    }
}

/// The special-fibre computation carried out on concrete cohomology classes.
/// Returns `(a, b)`; it must equal `(F(w), -F(z))`.
pub fn numeric_direct_limit(oracle: &Oracle, z: &ExtClass, w: &ExtClass) -> (ExtClass, ExtClass) {
    let d = oracle.dim();
    let g = d as u32 + 1;
    let px = NumPP::with(d, 0, 0, p1_pull(z)).add(&NumPP::with(d, 1, 0, p1_pull(w)));
    let kernel_l = NumPP::with(d, 0, 0, oracle.exp_l().clone());
    let pulled = NumV::tau_pull(kernel_l.mul(&px, d), d);

    let mut exp_e = NumV::tau_pull(NumPP::with(d, 0, 0, ProductClass::one(d)), d);
    for k in 0..2 {
        let div = NumV::divisor(k, d);
        let mut power = div.clone();
        for n in 1..=2 * g {
            let c = Rational::sign(n as i64) * Rational::factorial(n).recip();
            exp_e = exp_e.add(&power.scale(&c));
            power = power.mul(&div, d);
        }
    }
    let pushed = exp_e.mul(&pulled, d).tau_push(d);
    (push_p2(&pushed.c[1][0]), push_p2(&pushed.c[1][1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_input() {
        for d in 0..3 {
            let o = Oracle::new(d);
            let (a, b) = numeric_direct_limit(&o, &ExtClass::zero(d), &ExtClass::one(d));
            assert_eq!(a, o.fourier(&ExtClass::one(d)));
            assert!(b.is_zero());
            let (a, b) = numeric_direct_limit(&o, &ExtClass::zero(d), &ExtClass::zero(d));
            assert!(a.is_zero() && b.is_zero());
        }
    }
}
