use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent generator for sub-stream `stream` of a run seeded with `seed`.
///
/// Every parallel unit of work (config row, batch, grid cell) draws from its
/// own stream so results do not depend on scheduling.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
