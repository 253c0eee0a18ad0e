/// Largest group order any table in this crate can represent.
pub const MAX_ORDER: usize = 256;
pub const DEFAULT_ORDER_CAP: usize = 64;
/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;
pub const SAMPLED_TRIPLES: usize = 100_000;

/// Size and work bounds shared by every construction and search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    /// Node budget for homomorphism searches.
    pub search_nodes: u64,
    /// Branch-node budget for minimum set cover.
    pub cover_nodes: u64,
    /// Node budget for the cochain search before falling back to sections.
    pub coboundary_nodes: u64,
    /// Seed for sampled associativity checks above the exhaustive threshold.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            order_cap: DEFAULT_ORDER_CAP,
            search_nodes: 10_000_000,
            cover_nodes: 100_000_000,
            coboundary_nodes: 10_000_000,
            seed: 0,
        }
    }
}

impl Limits {
    pub fn with_order_cap(mut self, cap: usize) -> Self {
        self.order_cap = cap.min(MAX_ORDER);
        self
    }

    pub(crate) fn check_order(&self, order: usize) -> crate::Result<()> {
        let cap = self.order_cap.min(MAX_ORDER);
        if order > cap {
            Err(crate::Error::OrderCapExceeded { order, cap })
        } else {
            Ok(())
        }
    }
}
