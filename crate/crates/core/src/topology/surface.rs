use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A closed orientable surface, determined by its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Surface {
    pub genus: u32,
}

impl Surface {
    pub const SPHERE: Surface = Surface { genus: 0 };
    pub const TORUS: Surface = Surface { genus: 1 };

    pub fn new(genus: u32) -> Self {
        Surface { genus }
    }

    pub fn euler_characteristic(self) -> i64 {
        2 - 2 * i64::from(self.genus)
    }

    /// Inverse of [`Surface::euler_characteristic`]; `chi` must be even and at most 2.
    pub fn from_euler_characteristic(chi: i64) -> Result<Self> {
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "Euler characteristic {chi} is not that of a closed orientable surface"
            )));
        }
        let genus = u32::try_from((2 - chi) / 2)
            .map_err(|_| Error::InvalidArgument(format!("genus for χ = {chi} overflows")))?;
        Ok(Surface { genus })
    }
}

/// `V - E + C` for a cell decomposition.
pub fn euler_characteristic_from_counts(vertices: usize, edges: usize, faces: usize) -> i64 {
    vertices as i64 - edges as i64 + faces as i64
}

/// Smallest genus not ruled out by `3C <= 2E`.
///
/// Every face of an embedded simple graph with at least three vertices has
/// at least three sides, so `C <= 2E/3` and `2 - 2g = V - E + C` gives
/// `g >= (E - 3V + 6) / 6`. Graphs with fewer than three vertices get 0.
pub fn min_genus_lower_bound(g: &Graph) -> Result<u32> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if g.vertex_count() < 3 {
        return Ok(0);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let excess = g.edge_count() as i64 - 3 * g.vertex_count() as i64 + 6;
    if excess <= 0 {
        return Ok(0);
    }
    Ok(((excess + 5) / 6) as u32)
}
