"""Partition of a finite item sequence into connected components with witnesses."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ClassPartition:
    """Connected components of items under a (symmetrised) edge relation.

    items     canonical sequence; classes refer to items by index.
    classes   tuple of index tuples, each sorted, ordered by smallest member.
    witnesses (i, j) -> connecting witness, for each ordered edge that was found.
    """

    items: tuple
    classes: tuple
    witnesses: dict

    def __len__(self):
        return len(self.classes)

    @property
    def representatives(self):
        """Canonical representative of each class: its smallest-index item."""
        return tuple(self.items[cls[0]] for cls in self.classes)

    def class_of(self, index):
        for k, cls in enumerate(self.classes):
            if index in cls:
                return k
        raise KeyError(index)


def partition_from_edges(items, edge_witness):
    """Partition items by the symmetric-transitive closure of one-directional edges.

    edge_witness(a, b) returns a witness that b is reachable from a in one step,
    or None.  Both directions of every unordered pair are probed so the witness
    table is complete; the closure itself is direction-blind.
    """
    items = tuple(items)
    n = len(items)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    witnesses = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            w = edge_witness(items[i], items[j])
            if w is not None:
                witnesses[(i, j)] = w
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    classes = tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))
    return ClassPartition(items=items, classes=classes, witnesses=witnesses)
