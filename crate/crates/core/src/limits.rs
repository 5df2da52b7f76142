use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size caps for the exact solvers. Exceeding one is an error, never a
/// silent switch to a heuristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by the exact kernels.
    pub max_order: usize,
    /// Largest edge count accepted by the edge-coloring kernels.
    pub max_size: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_order: 16,
        max_size: 28,
    };

    /// Bitset representation bounds; overrides above these are refused.
    pub const HARD_MAX_ORDER: usize = 64;
    pub const HARD_MAX_SIZE: usize = 63;

    pub fn new(max_order: usize, max_size: usize) -> Result<Self> {
        if max_order > Self::HARD_MAX_ORDER {
            return Err(Error::invalid(format!(
                "order cap {max_order} is above the supported maximum {}",
                Self::HARD_MAX_ORDER
            )));
        }
        if max_size > Self::HARD_MAX_SIZE {
            return Err(Error::invalid(format!(
                "size cap {max_size} is above the supported maximum {}",
                Self::HARD_MAX_SIZE
            )));
        }
        Ok(Limits {
            max_order,
            max_size,
        })
    }

    pub fn check_order(&self, g: &Graph) -> Result<()> {
        if g.order() > self.max_order {
            return Err(Error::CapExceeded {
                what: "graph order",
                value: g.order(),
                cap: self.max_order,
            });
        }
        Ok(())
    }

    pub fn check_size(&self, g: &Graph) -> Result<()> {
        self.check_order(g)?;
        if g.size() > self.max_size {
            return Err(Error::CapExceeded {
                what: "graph size",
                value: g.size(),
                cap: self.max_size,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
