//! Deterministic random substreams.
//!
//! Every stochastic computation derives a ChaCha8 generator from a base seed
//! plus a stream id, so results do not depend on thread scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stream id for a (session, round, actor) triple.
pub fn session_stream(session: u64, round: u64, actor: u64) -> u64 {
    (session << 24) ^ (round << 8) ^ actor
}
