//! Named graphs and families with pinned labellings.
//!
//! The seven-cycle based graphs use vertices `a0..a6` as indices `0..6`, with
//! the rim `a0 a1 ... a6 a0`. Any added vertex (`u` in `H2PLUS`, the extra
//! vertex of `COUNTEREXAMPLE8`, the apex of a wheel) is the last index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    H0,
    H1,
    H2,
    H2Plus,
    C7Bar,
    Wheel(usize),
    Andrasfai(usize),
    Delta(usize),
    H2PlusAug,
    Counterexample8,
}

/// Index of `u` in `H2PLUS` and `H2PLUS_AUG`.
pub const H2PLUS_U: usize = 7;

impl FamilyId {
    /// Representative members, for listings.
    pub fn catalogue() -> Vec<FamilyId> {
        use FamilyId::*;
        vec![H0, H1, H2, H2Plus, C7Bar, Wheel(7), Andrasfai(3), Delta(3), H2PlusAug, Counterexample8]
    }

    pub fn description(&self) -> String {
        use FamilyId::*;
        match self {
            H0 => "C7 plus chords a5a0, a0a2, a1a3, a4a6".into(),
            H1 => "C7 plus chords a3a5, a5a0, a0a2, a2a4, a6a1".into(),
            H2 => "C7bar minus the edge a6a1".into(),
            H2Plus => "H2 plus u adjacent to a0, a2, a5".into(),
            C7Bar => "complement (and square) of the 7-cycle".into(),
            Wheel(k) => format!("{k}-cycle plus an apex"),
            Andrasfai(i) => format!("complement of C_{}^{}", 3 * i - 1, i - 1),
            Delta(l) => format!("complement of C_{}^{}", 4 * l - 1, l - 1),
            H2PlusAug => "H2PLUS plus edges u a3, u a4, a2a6, a1a5".into(),
            Counterexample8 => "H2 plus a vertex adjacent to a6, a0, a1, a3".into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyId::Wheel(k) if k < 3 => Err(Error::InvalidParameter(format!("WHEEL needs k >= 3, got {k}"))),
            FamilyId::Andrasfai(0) => Err(Error::InvalidParameter("ANDRASFAI needs i >= 1".into())),
            FamilyId::Delta(l) if l < 2 => Err(Error::InvalidParameter(format!("DELTA needs l >= 2, got {l}"))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyId::*;
        match self {
            H0 => write!(f, "H0"),
            H1 => write!(f, "H1"),
            H2 => write!(f, "H2"),
            H2Plus => write!(f, "H2PLUS"),
            C7Bar => write!(f, "C7BAR"),
            Wheel(k) => write!(f, "WHEEL({k})"),
            Andrasfai(i) => write!(f, "ANDRASFAI({i})"),
            Delta(l) => write!(f, "DELTA({l})"),
            H2PlusAug => write!(f, "H2PLUS_AUG"),
            Counterexample8 => write!(f, "COUNTEREXAMPLE8"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Accepts the display form (`WHEEL(7)`) and the compact form (`WHEEL7`),
    /// case-insensitively.
    fn from_str(s: &str) -> Result<FamilyId> {
        let up = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidParameter(format!("unknown family `{s}`"));
        let simple = match up.as_str() {
            "H0" => Some(FamilyId::H0),
            "H1" => Some(FamilyId::H1),
            "H2" => Some(FamilyId::H2),
            "H2PLUS" | "H2+" => Some(FamilyId::H2Plus),
            "C7BAR" => Some(FamilyId::C7Bar),
            "H2PLUS_AUG" => Some(FamilyId::H2PlusAug),
            "COUNTEREXAMPLE8" => Some(FamilyId::Counterexample8),
            _ => None,
        };
        if let Some(id) = simple {
            return Ok(id);
        }
        for (prefix, make) in [
            ("WHEEL", FamilyId::Wheel as fn(usize) -> FamilyId),
            ("ANDRASFAI", FamilyId::Andrasfai),
            ("DELTA", FamilyId::Delta),
        ] {
            if let Some(rest) = up.strip_prefix(prefix) {
                let rest = rest.trim();
                let arg = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
                let p: usize = arg.trim().parse().map_err(|_| bad())?;
                let id = make(p);
                id.validate()?;
                return Ok(id);
            }
        }
        Err(bad())
    }
}

fn c7_plus(chords: &[(usize, usize)]) -> Graph {
    let mut g = Graph::cycle(7).expect("valid cycle");
    for &(u, v) in chords {
        g.add_edge(u, v);
    }
    g
}

/// Builds the named graph.
pub fn generate(id: FamilyId) -> Result<Graph> {
    id.validate()?;
    use FamilyId::*;
    Ok(match id {
        H0 => c7_plus(&[(5, 0), (0, 2), (1, 3), (4, 6)]),
        H1 => c7_plus(&[(3, 5), (5, 0), (0, 2), (2, 4), (6, 1)]),
        H2 => c7_plus(&[(1, 3), (3, 5), (5, 0), (0, 2), (2, 4), (4, 6)]),
        H2Plus => generate(H2)?.with_vertex(&[0, 2, 5])?,
        C7Bar => Graph::cycle_power(7, 2)?,
        Wheel(k) => {
            let rim: Vec<usize> = (0..k).collect();
            Graph::cycle(k)?.with_vertex(&rim)?
        }
        Andrasfai(1) => Graph::complete(2),
        Andrasfai(i) => Graph::cycle_power(3 * i - 1, i - 1)?.complement(),
        Delta(l) => Graph::cycle_power(4 * l - 1, l - 1)?.complement(),
        H2PlusAug => {
            let mut g = generate(H2Plus)?;
            for (u, v) in [(H2PLUS_U, 3), (H2PLUS_U, 4), (2, 6), (1, 5)] {
                g.add_edge(u, v);
            }
            g
        }
        Counterexample8 => generate(H2)?.with_vertex(&[6, 0, 1, 3])?,
    })
}

/// The figure weighting of `H2`, scaled to integers (total 11).
pub const H2_FIGURE_WEIGHTS: [i64; 7] = [3, 1, 2, 1, 1, 2, 1];
/// The figure weighting of `H2PLUS` with `0+` read as zero, scaled to integers
/// (total 9), in the order `a0..a6, u`.
pub const H2PLUS_FIGURE_WEIGHTS: [i64; 8] = [2, 0, 2, 1, 1, 2, 0, 1];
/// The figure weighting of `COUNTEREXAMPLE8`, scaled to integers (total 11).
pub const COUNTEREXAMPLE8_FIGURE_WEIGHTS: [i64; 8] = [2, 1, 1, 2, 1, 2, 1, 1];
/// The figure 4-colouring of `H2PLUS_AUG` in the order `u, a0..a6`.
pub const H2PLUS_AUG_FIGURE_COLOURING: [usize; 8] = [1, 2, 1, 3, 2, 4, 3, 1];

/// The figure 4-colouring of `H2PLUS_AUG` indexed by vertex (`a0..a6, u`).
pub fn h2plus_aug_colouring() -> Vec<usize> {
    let c = H2PLUS_AUG_FIGURE_COLOURING;
    let mut out = c[1..].to_vec();
    out.push(c[0]);
    out
}
