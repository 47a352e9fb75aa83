import numpy as np

MASK_64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix(master_seed: int, index: int) -> int:
    """
    Derives the seed of work item `index` from a master seed (SplitMix64 finalizer).

    Every generator in the repository (dataset pairs, training pairs, mock OCR pages) derives
    its per-item seed through this function, so items can be produced in any order or in
    parallel with identical outputs.
    :param master_seed: 64-bit master seed
    :param index: non-negative item index
    :return: 64-bit derived seed
    """
    z = (master_seed + (index + 1) * GOLDEN_GAMMA) & MASK_64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK_64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK_64
    return z ^ (z >> 31)


def create_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & MASK_64))
