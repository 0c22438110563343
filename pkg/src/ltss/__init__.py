"""Longest tandem scattered subsequence: the longest subsequence that
occurs twice in a string without the two occurrences overlapping.

The search runs one comparator scan over every prefix/suffix split,
backed by a dynamic LIS structure that supports appends, batched appends,
extract-min and full enumeration of the optimal subsequences.
"""

from .dynamic_lis import Counters, ThresholdStructure
from .ordered_list import INF, LisEntry, OpCounter, OrderedList, StructureError
from .string_compare import Comparator, MatchIndex
from .tandem import LtssResult, RunStats, compute_ltss, ltss_stats, replay_split

__all__ = [
    "Comparator",
    "Counters",
    "INF",
    "LisEntry",
    "LtssResult",
    "MatchIndex",
    "OpCounter",
    "OrderedList",
    "RunStats",
    "StructureError",
    "ThresholdStructure",
    "compute_ltss",
    "ltss_stats",
    "replay_split",
]
