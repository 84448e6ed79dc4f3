//! Resource caps guarding against accidental combinatorial explosions.

use serde::{Deserialize, Serialize};

/// Size limits for the enumerative operations. All values must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Guard on m*n when constructing a [`crate::Superalgebra`].
    pub max_block_product: usize,
    /// Maximum number of integral weights in an order interval.
    pub window: usize,
    /// Maximum support size of the odd product factor and of character
    /// convolutions.
    pub odd_support: usize,
    /// Maximum number of Gelfand-Tsetlin patterns per gl(k) block.
    pub patterns: usize,
    /// Maximum number of states explored by the Delta-set backtracking
    /// oracle.
    pub oracle_states: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_block_product: 30,
            window: 200_000,
            odd_support: 1_000_000,
            patterns: 1_000_000,
            oracle_states: 1_000_000,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> crate::Result<()> {
        let fields = [
            ("max_block_product", self.max_block_product),
            ("window", self.window),
            ("odd_support", self.odd_support),
            ("patterns", self.patterns),
            ("oracle_states", self.oracle_states),
        ];
        for (name, value) in fields {
            if value == 0 {
                return Err(crate::Error::Config(format!(
                    "cap `{name}` must be positive"
                )));
            }
        }
        Ok(())
    }
}
