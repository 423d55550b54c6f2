//! Scoring toolkit for decentralized multi-agent navigation scenarios.
//!
//! The pipeline: generate or load a scenario, simulate it across a swept
//! family of steering parameters, abstract each agent's trajectories into
//! discrete modes by their distance to the agent's solo trajectory, then
//! score inter-agent interaction as the mutual information between one
//! agent's mode and the modes of all others. Domain diversity is scored
//! from obstacle-configuration labels and discretized start/goal cells,
//! and the two combine into a single source/target ranking estimate.

pub mod diversity;
pub mod geom;
pub mod nav;
pub mod rank;
pub mod scene;
pub mod score;
pub mod sim;
pub mod traj;

pub use geom::{Rect, Vec2};

pub(crate) mod util {
    /// splitmix64 step; derives independent RNG streams from one seed.
    pub fn mix_seed(seed: u64, stream: u64) -> u64 {
        let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}
