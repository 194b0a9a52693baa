"""Size/diameter/degree tables for folded networks.

Rows come from the additive laws (N = n^alpha, D = alpha*D, k = alpha*k);
products small enough are also built and their diameter measured by BFS.
"""

import logging

import pandas as pd

from topology import Graph, diameter, is_regular
from validation import ScalingSchema, validate_dataframe

from .cartesian import folded_power

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_LIMIT = 4096


def folded_scaling(bases: dict[str, Graph], alpha_max: int, verify_limit: int = DEFAULT_VERIFY_LIMIT) -> pd.DataFrame:
    rows = []
    for name, base in bases.items():
        base_diameter = diameter(base)
        base_degree = is_regular(base)
        for alpha in range(1, alpha_max + 1):
            n = base.n**alpha
            predicted = alpha * base_diameter
            verified = False
            if n <= verify_limit:
                measured = diameter(folded_power(base, alpha).graph)
                if measured != predicted:
                    raise RuntimeError(f"folded {name}^{alpha}: BFS diameter {measured} != {predicted}")
                verified = True
            rows.append(
                {
                    "topology": name,
                    "alpha": alpha,
                    "n": n,
                    "diameter": predicted,
                    "degree": alpha * base_degree if base_degree is not None else -1,
                    "bfs_verified": verified,
                }
            )
        logger.info(f"Scaling rows for {name}: alpha 1..{alpha_max}")
    return validate_dataframe(pd.DataFrame(rows), ScalingSchema, "folded scaling")
