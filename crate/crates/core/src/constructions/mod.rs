//! Generators for the concrete atom structures the workbench studies, the
//! blow-up-and-blur splitting, and the copy-join embedding verifier.

pub mod blur;
pub mod monk;
pub mod rainbow;
pub mod rainbow_rules;
pub mod split;

pub use blur::{split_blur, theta_embed, EmbeddingReport, SplitBlurResult};
pub use monk::{monk_ra, MonkParams};
pub use rainbow::{rainbow_finite, RainbowParams};
pub use split::{split_ra, SplitParams};
