use super::{Bigraded, Frame};

/// The twistor coframe `s1, s2, dm` (type `(1,0)`) and `sb1, sb2, dmb` (type `(0,1)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Sigma;

impl Frame for Sigma {
    const NAMES: [&'static str; 6] = ["s1", "s2", "dm", "sb1", "sb2", "dmb"];
    const CONJUGATE: [usize; 6] = [3, 4, 5, 0, 1, 2];
}

impl Bigraded for Sigma {
    const HOLOMORPHIC_MASK: u8 = 0b000_111;
}

/// Flat coordinate frame `dz1, dz2, dzb1, dzb2, dm, dmb`; every generator is closed.
///
/// These generators are not of pure twistor bidegree, so the frame is not [`Bigraded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dz;

impl Frame for Dz {
    const NAMES: [&'static str; 6] = ["dz1", "dz2", "dzb1", "dzb2", "dm", "dmb"];
    const CONJUGATE: [usize; 6] = [2, 3, 0, 1, 5, 4];
}

/// Generators of the [`Sigma`] frame, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S1,
    S2,
    Dm,
    Sb1,
    Sb2,
    Dmb,
}

impl Generator {
    pub const ALL: [Generator; 6] = [
        Generator::S1,
        Generator::S2,
        Generator::Dm,
        Generator::Sb1,
        Generator::Sb2,
        Generator::Dmb,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        Sigma::NAMES[self.index()]
    }

    pub fn conjugate(self) -> Generator {
        Self::ALL[Sigma::CONJUGATE[self.index()]]
    }

    /// `(1, 0)` or `(0, 1)`.
    pub fn bidegree(self) -> (usize, usize) {
        if self.index() < 3 {
            (1, 0)
        } else {
            (0, 1)
        }
    }
}

/// Generators of the [`Dz`] frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DzGenerator {
    Dz1,
    Dz2,
    Dzb1,
    Dzb2,
    Dm,
    Dmb,
}

impl DzGenerator {
    pub const ALL: [DzGenerator; 6] = [
        DzGenerator::Dz1,
        DzGenerator::Dz2,
        DzGenerator::Dzb1,
        DzGenerator::Dzb2,
        DzGenerator::Dm,
        DzGenerator::Dmb,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        Dz::NAMES[self.index()]
    }

    pub fn conjugate(self) -> DzGenerator {
        Self::ALL[Dz::CONJUGATE[self.index()]]
    }
}
