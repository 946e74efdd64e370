//! The fixed symbol universe.
//!
//! Every indeterminate the library ever uses has a slot here. The declaration
//! order is the lexicographic priority of the canonical term order: `q` is the
//! most significant symbol, then `l` (for ℓ), then `L` (for ℓ^{1/2}).

use core::fmt;

/// Number of registered symbols.
pub const NSYM: usize = 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Sym {
    Q,
    Ell,
    HalfEll,
    A,
    B,
    W,
    R,
    S,
    Pa,
    Pb,
    Pc,
    X1,
    X2,
    X3,
    Y,
    T1,
    T2,
    T3,
    P1,
    P2,
    P3,
    U,
    Z,
    X,
    Y1,
    Y2,
    E1,
    E2,
}

const NAMES: [&str; NSYM] = [
    "q", "l", "L", "A", "B", "w", "r", "s", "a", "b", "c", "x1", "x2", "x3", "y", "t1", "t2",
    "t3", "T1", "T2", "T3", "u", "z", "x", "y1", "y2", "e1", "e2",
];

const ALL: [Sym; NSYM] = [
    Sym::Q,
    Sym::Ell,
    Sym::HalfEll,
    Sym::A,
    Sym::B,
    Sym::W,
    Sym::R,
    Sym::S,
    Sym::Pa,
    Sym::Pb,
    Sym::Pc,
    Sym::X1,
    Sym::X2,
    Sym::X3,
    Sym::Y,
    Sym::T1,
    Sym::T2,
    Sym::T3,
    Sym::P1,
    Sym::P2,
    Sym::P3,
    Sym::U,
    Sym::Z,
    Sym::X,
    Sym::Y1,
    Sym::Y2,
    Sym::E1,
    Sym::E2,
];

impl Sym {
    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Sym {
        ALL[i]
    }

    pub fn name(self) -> &'static str {
        NAMES[self as usize]
    }

    pub fn from_name(name: &str) -> Option<Sym> {
        NAMES.iter().position(|n| *n == name).map(|i| ALL[i])
    }

    pub fn all() -> &'static [Sym; NSYM] {
        &ALL
    }

    /// Position variables `t1, t2, t3`.
    pub const T: [Sym; 3] = [Sym::T1, Sym::T2, Sym::T3];
    /// Classical momenta `T1, T2, T3`.
    pub const MOM: [Sym; 3] = [Sym::P1, Sym::P2, Sym::P3];
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Position variable `t_{j+1}` for `j = 0, 1, ...`. Only three slots exist in
/// the universe; larger `n` uses the auxiliary slots in a fixed order.
pub fn tvar(j: usize) -> Sym {
    const EXTRA: [Sym; 3] = [Sym::X1, Sym::X2, Sym::X3];
    match j {
        0..=2 => Sym::T[j],
        3..=5 => EXTRA[j - 3],
        _ => panic!("at most six position variables are supported"),
    }
}
