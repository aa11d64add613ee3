"""Random monotone enumerations, and ways of breaking them."""

from __future__ import annotations

import random
from typing import List, Tuple

from .enumeration import Enumeration, Seq, canonical

Stages = List[Tuple[int, frozenset]]


def random_valid(rng: random.Random, max_stages: int = 6, max_entry: int = 8,
                 max_new: int = 3, max_step: int = 2) -> Enumeration:
    """A random monotone enumeration.

    Each later stage picks a current leaf and adds up to ``max_new``
    sequences extending it by 1 to ``max_step`` entries, so the leaf is the
    longest earlier initial segment of every one of them.
    """
    stages: Stages = [(0, frozenset({()}))]
    enumerated = {()}
    index = 0
    for _ in range(rng.randint(0, max_stages - 1)):
        index += rng.randint(1, 2)
        inner = {s[:k] for s in enumerated for k in range(len(s))}
        leaves = canonical(enumerated - inner)
        root = rng.choice(leaves)
        new = set()
        for _ in range(rng.randint(1, max_new)):
            tail = tuple(rng.randint(0, max_entry) for _ in range(rng.randint(1, max_step)))
            new.add(root + tail)
        new -= enumerated
        if not new:
            continue
        stages.append((index, frozenset(new)))
        enumerated |= new
    return Enumeration(stages)


def mutate(rng: random.Random, e: Enumeration, max_entry: int = 8) -> Stages:
    """A small random edit of ``e``'s stages; the result may or may not be valid."""
    stages: Stages = [(st.index, st.new) for st in e.stages]
    seen = {s for _, new in stages for s in new}
    op = rng.randrange(5)
    k = rng.randrange(len(stages))
    index, new = stages[k]
    if op == 0 and new:
        # drop one sequence
        gone = rng.choice(canonical(new))
        stages[k] = (index, new - {gone})
    elif op == 1:
        # add a fresh sequence somewhere in the tree
        base = rng.choice(canonical(seen))
        fresh = base + (rng.randint(0, max_entry),)
        if fresh not in seen:
            stages[k] = (index, new | {fresh})
    elif op == 2 and len(stages) > 1:
        # swap two stages' contents
        j = rng.randrange(len(stages))
        stages[k], stages[j] = (index, stages[j][1]), (stages[j][0], new)
    elif op == 3 and new:
        # move a sequence to another stage
        moved = rng.choice(canonical(new))
        j = rng.randrange(len(stages))
        stages[k] = (index, new - {moved})
        stages[j] = (stages[j][0], stages[j][1] | {moved})
    elif new:
        # change the last entry of a sequence
        old = rng.choice(canonical(new))
        if old:
            changed = old[:-1] + (rng.randint(0, max_entry),)
            if changed not in seen:
                stages[k] = (index, (new - {old}) | {changed})
    return stages
