use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Bigrade `(codim, weight)` of a class in `A^i_(j)`.
///
/// Multiplication by `n` acts on such a class by `n^(2i - j)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Bigrade {
    pub codim: i32,
    pub weight: i32,
}

impl Bigrade {
    pub const ZERO: Bigrade = Bigrade { codim: 0, weight: 0 };

    pub const fn new(codim: i32, weight: i32) -> Self {
        Bigrade { codim, weight }
    }

    /// Exponent of `n` in `n^* x = n^(2i - j) x`.
    pub fn eigen_exponent(self) -> i32 {
        2 * self.codim - self.weight
    }

    /// Whether `j` lies in the range `i - dim <= j <= i` where Beauville
    /// components can be nonzero.
    pub fn is_admissible(self, dim: usize) -> bool {
        self.weight <= self.codim && self.weight >= self.codim - dim as i32
    }
}

impl Add for Bigrade {
    type Output = Bigrade;
    fn add(self, rhs: Bigrade) -> Bigrade {
        Bigrade::new(self.codim + rhs.codim, self.weight + rhs.weight)
    }
}

impl AddAssign for Bigrade {
    fn add_assign(&mut self, rhs: Bigrade) {
        self.codim += rhs.codim;
        self.weight += rhs.weight;
    }
}

impl Sub for Bigrade {
    type Output = Bigrade;
    fn sub(self, rhs: Bigrade) -> Bigrade {
        Bigrade::new(self.codim - rhs.codim, self.weight - rhs.weight)
    }
}

impl Neg for Bigrade {
    type Output = Bigrade;
    fn neg(self) -> Bigrade {
        Bigrade::new(-self.codim, -self.weight)
    }
}

impl Mul<i32> for Bigrade {
    type Output = Bigrade;
    fn mul(self, k: i32) -> Bigrade {
        Bigrade::new(self.codim * k, self.weight * k)
    }
}

impl fmt::Display for Bigrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.codim, self.weight)
    }
}
