from typing import List, Union

import numpy as np
from dict_hash import Hashable


def _draw_seed(sequence: np.random.SeedSequence) -> int:
    return int(sequence.generate_state(1)[0])


def replication_seeds(base_seed: int, n_reps: int) -> List[int]:
    """Seeds of the replications, one per child spawned from `base_seed`.

    Neighbouring base seeds share no replication stream, and the seeds are
    plain integers so that each replication can be rerun alone with `run`."""
    return [_draw_seed(child) for child in np.random.SeedSequence(base_seed).spawn(n_reps)]


def point_seed(base_seed: int, *keys: Hashable) -> int:
    """The seed of one point of a sweep.

    It mixes `base_seed` with the consistent hashes of the objects naming
    the point, so it does not depend on the position of the point in its
    grid and two points never share a seed by accident."""
    entropy = [int(base_seed)] + [int(key.consistent_hash(), 16) for key in keys]
    return _draw_seed(np.random.SeedSequence(entropy))


def chunk_streams(
    seed: Union[int, np.random.SeedSequence],
    n_items: int,
    chunk_size: int
) -> List[np.random.SeedSequence]:
    """One child SeedSequence per chunk of a Monte Carlo batch.

    The split depends only on `n_items` and `chunk_size`, never on how many
    workers consume the chunks."""
    n_chunks = max(1, -(-n_items // chunk_size))
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return seed.spawn(n_chunks)
