//! Two worked degenerations: the nodal cubic threefold and a one-nodal curve.

use crate::base::{star_rule_sign, CycleB, Symbol};
use crate::error::CycleError;
use crate::grade::Bigrade;
use crate::limit::{beauville_specialize, limit_fm_alg, BeauvilleRow, LimitResult};
use crate::rational::Rational;

/// Inputs and results of the cubic threefold computation (`g = 5`, `B` the
/// Jacobian of a genus-4 curve `C` with `[C] = C0 + C1` algebraically).
#[derive(Clone, Debug)]
pub struct CubicThreefold {
    pub g: usize,
    pub c0: Symbol,
    pub c1: Symbol,
    pub z: CycleB,
    pub w: CycleB,
    pub phi: LimitResult,
    /// `(1/2 F(C).F(C), -F(C))`.
    pub expected_phi: (CycleB, CycleB),
    /// Weight-one part of the limit.
    pub phi1: (CycleB, CycleB),
    /// `(F(C0).F(C1), -F(C1))`.
    pub expected_phi1: (CycleB, CycleB),
    /// Bigrades of `F(C0)`, `F(C1)` and their product.
    pub grades: [Bigrade; 3],
    /// The limit split by weight, `j = 0, 1, 2`.
    pub components: Vec<(i32, CycleB, CycleB)>,
    /// Constant `c` in `F(x * y) = c F(x) F(y)` used for the star terms.
    pub star_sign: Rational,
}

impl CubicThreefold {
    pub fn phi_matches(&self) -> bool {
        (self.phi.a.clone(), self.phi.b.clone()) == self.expected_phi
    }

    pub fn phi1_matches(&self) -> bool {
        self.phi1 == self.expected_phi1
    }

    /// The weight-one limit is nonzero as soon as `C1` is: its `eta`-part is
    /// `-F(C1)` and `F` is invertible.
    pub fn weight_one_nonzero(&self) -> bool {
        self.phi1_matches() && !self.phi1.1.is_zero()
    }

    pub fn verdict(&self) -> String {
        if self.weight_one_nonzero() {
            "C1 != 0 implies phi0^(1) != 0, so Sigma^(1) != 0: the Fano surface is homologous \
             but not algebraically equivalent to Theta^3/3!"
                .to_string()
        } else {
            "weight-one limit did not reduce to a nonzero multiple of F(C1); no conclusion".to_string()
        }
    }
}

pub fn cubic_threefold() -> CubicThreefold {
    let g = 5;
    let d = g - 1;
    let c0 = Symbol::new("C", Bigrade::new(3, 0));
    let c1 = Symbol::new("C", Bigrade::new(3, 1));
    let star = |x: &Symbol, y: &Symbol| CycleB::star(x, y, d).expect("curve classes have codim 3 on d = 4");
    let z = &CycleB::from_symbol(&c0, d) + &CycleB::from_symbol(&c1, d);
    // [C * C] = C0*C0 + 2 C0*C1 + C1*C1
    let cc = &(&star(&c0, &c0) + &star(&c0, &c1).scale(&Rational::integer(2))) + &star(&c1, &c1);
    let w = cc.scale(&Rational::new(1, 2));
    let phi = limit_fm_alg(&z, &w, g);

    let f0 = CycleB::from_symbol(&c0, d).fb();
    let f1 = CycleB::from_symbol(&c1, d).fb();
    let fc = &f0 + &f1;
    let expected_phi = ((&fc * &fc).scale(&Rational::new(1, 2)), -fc.clone());
    let phi1 = (phi.a.weight_part(1), phi.b.weight_part(1));
    let expected_phi1 = (&f0 * &f1, -f1.clone());
    let grade_of = |x: &CycleB| x.grades().first().copied().unwrap_or_default();
    let grades = [grade_of(&f0), grade_of(&f1), grade_of(&(&f0 * &f1))];
    let components = (0..=2)
        .map(|j| (j, phi.a.weight_part(j), phi.b.weight_part(j)))
        .collect();

    CubicThreefold {
        g,
        c0,
        c1,
        z,
        w,
        phi,
        expected_phi,
        phi1,
        expected_phi1,
        grades,
        components,
        star_sign: star_rule_sign(d),
    }
}

/// A genus-`g` curve acquiring one node: `c0 = nu_*(q^*[pt] + q^*c~ . eta)`
/// on the compactified Jacobian, with `c~` the Abel-Jacobi curve of the
/// normalization in `B` of dimension `g - 1`.
#[derive(Clone, Debug)]
pub struct NodalCurve {
    pub g: usize,
    pub z_components: Vec<(i32, CycleB)>,
    pub w_components: Vec<(i32, CycleB)>,
    pub rows: Vec<BeauvilleRow>,
}

impl NodalCurve {
    /// `(0, c~^(j))` for `j != 0` and `([pt], c~^(0))` for `j = 0`.
    pub fn expected_row(&self, j: i32) -> (CycleB, CycleB) {
        let d = self.g - 1;
        let w = self
            .w_components
            .iter()
            .find(|(k, _)| *k == j)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| CycleB::zero(d));
        let z = if j == 0 { CycleB::point(d) } else { CycleB::zero(d) };
        (z, w)
    }

    pub fn table_matches(&self) -> bool {
        self.rows.iter().all(|r| {
            let (z, w) = self.expected_row(r.weight);
            r.z == z && r.w == w && r.routes_agree()
        })
    }
}

/// Builds the nodal-curve example for genus `g >= 3`, so that the curve
/// class `c~` has codimension `g - 2 >= 1` in `B`; its components have
/// weights `0..=g-2`.
pub fn nodal_curve(g: usize) -> Result<NodalCurve, CycleError> {
    if g < 3 {
        return Err(CycleError::InvalidSymbol(format!(
            "the nodal-curve example needs genus at least 3, got {g}"
        )));
    }
    let d = g - 1;
    let codim = d as i32 - 1;
    let z_components = vec![(0, CycleB::point(d))];
    let w_components: Vec<(i32, CycleB)> = (0..=codim)
        .map(|j| CycleB::symbol("c", codim, j, d).map(|c| (j, c)))
        .collect::<Result<_, _>>()?;
    let rows = beauville_specialize(&z_components, &w_components, g)?;
    Ok(NodalCurve {
        g,
        z_components,
        w_components,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_threefold_matches_display() {
        let r = cubic_threefold();
        assert!(r.phi_matches());
        assert!(r.phi1_matches());
        assert!(r.weight_one_nonzero());
        assert_eq!(r.grades, [Bigrade::new(1, 0), Bigrade::new(2, 1), Bigrade::new(3, 1)]);
        assert_eq!(r.phi1.0.to_string(), "FB(C[3,0])*FB(C[3,1])");
        assert_eq!(r.phi1.1.to_string(), "-FB(C[3,1])");
    }

    #[test]
    fn nodal_curve_table() {
        for g in 3..6 {
            let r = nodal_curve(g).unwrap();
            assert_eq!(r.rows.len(), g - 1);
            assert!(r.table_matches());
        }
        assert!(nodal_curve(2).is_err());
    }
}
