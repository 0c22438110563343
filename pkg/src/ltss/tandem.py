"""Longest tandem scattered subsequence driver.

Scan every prefix/suffix split of the input: at step t the comparator
drops letter t off the suffix and appends it to the prefix, so the tracked
length is the common-subsequence length of F[1..t] against F[t+1..n].  The
best split (earliest on ties) is then replayed once to recover a witness
and its two disjoint occurrences.
"""

import time
from dataclasses import dataclass

from .string_compare import Comparator


@dataclass
class LtssResult:
    """Best tandem: its length, the winning prefix length, the repeated
    subsequence, and the two occurrence position lists (1-based, the first
    entirely at or before split_index, the second entirely after)."""
    length: int
    split_index: int
    witness: str
    first_occurrence: list
    second_occurrence: list


@dataclass
class RunStats:
    """Scan-wide instrumentation for one input string."""
    n: int
    matches: int        # equal-letter position pairs fed to the structure
    lambda_max: int
    extract_mins: int
    transfers: dict
    tree_ops: int
    elapsed: float


def _scan(f):
    """Run the split scan; return (best_len, best_split, comparator)."""
    comp = Comparator(f)
    append_to_p = comp.append_to_p
    drop = comp.drop_front_of_s
    ts = comp.ts
    best_len = 0
    best_split = 0
    for t in range(1, len(f)):
        drop()
        append_to_p(f[t - 1])
        lam = ts.lis_length
        # earliest split wins ties, and every new overall maximum first
        # appears as a new high-water mark of the tracked length
        if lam > best_len:
            best_len = lam
            best_split = t
    return best_len, best_split, comp

def replay_split(f, split):
    """Fresh comparator advanced to the given split of f."""
    comp = Comparator(f)
    for t in range(1, split + 1):
        comp.drop_front_of_s()
        comp.append_to_p(f[t - 1])
    return comp

def compute_ltss(f):
    """Longest subsequence occurring twice without overlap in f."""
    best_len, best_split, _ = _scan(f)
    if best_len == 0:
        return LtssResult(0, 0, "", [], [])
    pairs = replay_split(f, best_split).witness()
    first = [p for p, _ in pairs]
    second = [s for _, s in pairs]
    witness = "".join(f[p - 1] for p in first)
    return LtssResult(best_len, best_split, witness, first, second)

def ltss_stats(f):
    """Run the scan alone and report its instrumentation."""
    start = time.perf_counter()
    best_len, _, comp = _scan(f)
    elapsed = time.perf_counter() - start
    st = comp.ts.stats
    return RunStats(
        n=len(f),
        matches=st.append_calls,
        lambda_max=best_len,
        extract_mins=st.extract_min_calls,
        transfers=dict(st.transfers_out),
        tree_ops=st.tree_ops(),
        elapsed=elapsed,
    )
