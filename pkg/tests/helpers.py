"""Shared test plumbing: structure builders and randomized trace drivers."""

from ltss.dynamic_lis import ThresholdStructure
from ltss.ordered_list import OrderedList

WORKED_STREAM = [8, 2, 1, 6, 5, 4, 3, 6, 5, 4]


def build_ordered(values, start=1):
    """OrderedList from values inserted in the given order, positions
    assigned 1, 2, 3, ... (or from start)."""
    lst = OrderedList()
    pos = start
    for v in values:
        lst.insert(v, pos)
        pos += 1
    return lst


def build_structure(values, batch=False):
    ts = ThresholdStructure()
    feed = ts.append_batch if batch else ts.append
    for v in values:
        feed(v)
    return ts


def random_ops(rng, length, vmax, p_extract=0.3):
    """Mixed op stream: an int means append it, 'x' requests an extract
    (runners skip extracts that hit an empty structure)."""
    return ["x" if rng.random() < p_extract else rng.randint(1, vmax)
            for _ in range(length)]


def drop_min(shadow):
    """Shadow-list extract: delete every occurrence of the minimum."""
    m = min(shadow)
    shadow[:] = [x for x in shadow if x != m]
