"""
k-Pieri chains, k-Monk chains, and p-markings.

A k-Pieri chain from w is a directed path in the quantum Bruhat graph whose
labels (a,b) all satisfy a <= k < b, subject to:

  (P0) no label repeats;
  (P1) the column entries b are weakly decreasing along the path;
  (P2) if the row entry a of a non-final label already occurred strictly
       earlier, that label must precede its successor in the label order.

By (P1) the labels with a fixed column m form one contiguous (possibly
empty) run, the (*,m)-segment; segments appear in strictly decreasing
column order.

A p-marking of a chain is a p-subset M of its labels with:

  (1) a marked label is the first occurrence of its row;
  (2) an unmarked non-final label precedes its successor in the label order;
  (3) whenever the first t labels share one column with strictly decreasing
      rows, the t-th label is marked.

Conditions (2)-(3) force a definite subset of labels into every marking;
condition (1) restricts the rest to first-occurrences of the remaining
rows, which gives the closed-form count

  #markings = C(m0 - m, p - m),

m0 = number of distinct rows, m = number of forced labels (0 if a forced
label is not a first occurrence: then no marking exists).

All enumeration runs inside the ambient bound N = max(support, k) + 1: no
QBG edge usable by these chains has column beyond N, which is re-asserted
at every enumeration frontier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .permutations import Label, Permutation, label_precedes, label_sort_key
from .qbg import DirectedPath, edge_kind


@dataclass(frozen=True)
class PieriChain:
    path: DirectedPath
    k: int

    def __post_init__(self) -> None:
        problem = pieri_violation(self.path.labels, self.k)
        if problem is not None:
            raise ValueError(f"not a {self.k}-Pieri chain: {problem}")

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.path.labels

    @property
    def start(self) -> Permutation:
        return self.path.start

    @property
    def end(self) -> Permutation:
        return self.path.end

    def __len__(self) -> int:
        return len(self.path.labels)

    def segment_of_b(self, m: int) -> range:
        """Index range of the (*,m)-segment (contiguous by (P1))."""
        lo = 0
        while lo < len(self.labels) and self.labels[lo][1] > m:
            lo += 1
        hi = lo
        while hi < len(self.labels) and self.labels[hi][1] == m:
            hi += 1
        return range(lo, hi)

    def segment_labels(self, m: int) -> tuple[Label, ...]:
        rng = self.segment_of_b(m)
        return self.labels[rng.start : rng.stop]

    def segment_after(self, label: Label) -> tuple[Label, ...]:
        """Labels of the (*,m)-segment strictly after `label` (same column m)."""
        seg = self.segment_labels(label[1])
        if label not in seg:
            raise ValueError(f"{label} not in its column segment")
        return seg[seg.index(label) + 1 :]

    def columns(self) -> list[int]:
        """Distinct columns in decreasing order."""
        out: list[int] = []
        for _, b in self.labels:
            if not out or out[-1] != b:
                out.append(b)
        return out

    def n_row(self, a: int) -> int:
        return sum(1 for x, _ in self.labels if x == a)

    def n_col(self, b: int) -> int:
        return sum(1 for _, y in self.labels if y == b)

    def final_label(self) -> Label:
        if not self.labels:
            raise ValueError("empty chain has no final label")
        return self.labels[-1]

    def __repr__(self) -> str:
        return f"PieriChain(k={self.k}, {self.path.render()})"


def pieri_violation(labels: tuple[Label, ...], k: int) -> str | None:
    """None if (P0)-(P2) hold for a k-Pieri chain, else a description."""
    r = len(labels)
    seen = set()
    for a, b in labels:
        if not a <= k < b:
            return f"label ({a},{b}) outside rows 1..{k} / columns > {k}"
        if (a, b) in seen:
            return f"label ({a},{b}) repeats"
        seen.add((a, b))
    for i in range(r - 1):
        if labels[i][1] < labels[i + 1][1]:
            return f"columns increase at index {i}"
    if r >= 3:
        rows_before: set[int] = {labels[0][0]}
        for s in range(1, r - 1):
            if labels[s][0] in rows_before and not label_precedes(labels[s], labels[s + 1]):
                return f"repeated row {labels[s][0]} not followed in order at index {s}"
            rows_before.add(labels[s][0])
    return None


def _assert_root_bound(x: Permutation, k: int, bound: int) -> None:
    # ambient-bound audit at the start vertex: no first edge can reach
    # column bound+1 (later columns are capped by the first one through
    # the weakly-decreasing-column condition)
    for a in range(1, k + 1):
        if edge_kind(x, (a, bound + 1)) is not None:
            raise AssertionError(
                f"ambient bound {bound} unsound: edge ({a},{bound + 1}) from {x!r}"
            )


def enumerate_pieri_chains(w: Permutation, k: int, audit_bound: bool = True) -> list[PieriChain]:
    """
    All k-Pieri chains from w, in depth-first order with extensions tried
    in label order.  Exhaustive within N = max(support(w), k) + 1: no first
    edge can reach column N+1 (audited at the start when `audit_bound`),
    and (P1) caps every later column at the first one.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    bound = max(w.support, k) + 1
    pool = sorted(
        ((a, b) for a in range(1, k + 1) for b in range(k + 1, bound + 1)),
        key=label_sort_key,
    )
    out: list[PieriChain] = []
    if audit_bound:
        _assert_root_bound(w, k, bound)

    def dfs(path: DirectedPath, rows_before: set[int]) -> None:
        out.append(PieriChain(path, k))
        labels = path.labels
        for label in pool:
            if labels:
                last = labels[-1]
                if label[1] > last[1] or label == last:
                    continue
                if label in labels:
                    continue
                # (P2) for the label that stops being final
                if len(labels) >= 2 and last[0] in rows_before and not label_precedes(last, label):
                    continue
            nxt = path.extend(label)
            if nxt is None:
                continue
            rows_now = rows_before | {last[0]} if labels else set()
            dfs(nxt, rows_now)

    dfs(DirectedPath.empty(w), set())
    return out


@dataclass(frozen=True)
class MonkChain:
    """
    A k-Monk chain: a path of the shape

      (a_1,k), ..., (a_s,k), (k,b_t), ..., (k,b_1)

    with k > a_1 > ... > a_s >= 1 and k < b_1 < ... < b_t; `s` and `t` are
    the lengths of the (*,k)- and (k,*)-segments.
    """

    path: DirectedPath
    k: int
    s: int
    t: int

    def __post_init__(self) -> None:
        labels = self.path.labels
        rows = [lab for lab in labels if lab[1] == self.k]
        cols = [lab for lab in labels if lab[0] == self.k]
        if len(rows) + len(cols) != len(labels) or labels != tuple(rows + cols):
            raise ValueError(f"not a {self.k}-Monk chain shape: {labels}")
        if (self.s, self.t) != (len(rows), len(cols)):
            raise ValueError("segment lengths disagree with labels")
        avals = [a for a, _ in rows]
        bvals = [b for _, b in cols]
        if avals != sorted(avals, reverse=True) or len(set(avals)) != len(avals):
            raise ValueError(f"row part not strictly decreasing: {avals}")
        if bvals != sorted(bvals, reverse=True) or len(set(bvals)) != len(bvals):
            raise ValueError(f"column part not applied in decreasing order: {bvals}")

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.path.labels

    @property
    def start(self) -> Permutation:
        return self.path.start

    @property
    def end(self) -> Permutation:
        return self.path.end

    def row_segment(self) -> tuple[Label, ...]:
        """The (*,k)-segment."""
        return self.path.labels[: self.s]

    def col_segment(self) -> tuple[Label, ...]:
        """The (k,*)-segment."""
        return self.path.labels[self.s :]

    def is_empty(self) -> bool:
        return not self.path.labels

    def initial_label(self) -> Label | None:
        return self.path.labels[0] if self.path.labels else None

    def __repr__(self) -> str:
        return f"MonkChain(k={self.k}, {self.path.render()})"


def enumerate_monk_chains(x: Permutation, k: int) -> list[MonkChain]:
    """
    All k-Monk chains from x, including the empty one.  Column labels are
    bounded by N = max(support(x), k) + 1: the row part never moves values
    beyond position k, and the first column edge from a vertex in S_N-1
    cannot exceed N (audited per frontier).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    bound = max(x.support, k) + 1
    out: list[MonkChain] = []

    def dfs_cols(path: DirectedPath, s: int, t: int, last_b: int) -> None:
        out.append(MonkChain(path, k, s, t))
        for b in range(last_b - 1, k, -1):
            nxt = path.extend((k, b))
            if nxt is not None:
                dfs_cols(nxt, s, t + 1, b)

    def dfs_rows(path: DirectedPath, s: int, last_a: int) -> None:
        # column phase starts here; its first (largest) column is bounded
        if edge_kind(path.end, (k, bound + 1)) is not None:
            raise AssertionError(
                f"ambient bound {bound} unsound: edge ({k},{bound + 1}) from {path.end!r}"
            )
        dfs_cols(path, s, 0, bound + 1)
        for a in range(last_a - 1, 0, -1):
            nxt = path.extend((a, k))
            if nxt is not None:
                dfs_rows(nxt, s + 1, a)

    dfs_rows(DirectedPath.empty(x), 0, k)
    return out


# --- markings -------------------------------------------------------------

Marking = frozenset  # of Label


def first_occurrences(chain: PieriChain) -> set[Label]:
    """Labels that are the first occurrence of their row."""
    seen: set[int] = set()
    out: set[Label] = set()
    for a, b in chain.labels:
        if a not in seen:
            out.add((a, b))
            seen.add(a)
    return out


def forced_marks(chain: PieriChain) -> set[Label]:
    """
    Labels every marking must contain: the ends of initial constant-column
    strictly-decreasing-row prefixes (condition (3)), plus every non-final
    label not preceding its successor (condition (2)).
    """
    labels = chain.labels
    forced: set[Label] = set()
    for t in range(1, len(labels) + 1):
        head = labels[:t]
        if all(x[1] == head[0][1] for x in head) and all(
            head[i][0] > head[i + 1][0] for i in range(t - 1)
        ):
            forced.add(head[t - 1])
        else:
            break
    for s in range(len(labels) - 1):
        if not label_precedes(labels[s], labels[s + 1]):
            forced.add(labels[s])
    return forced


def enumerate_markings(chain: PieriChain, p: int) -> list[Marking]:
    """
    All p-markings, in a deterministic order.  Forced labels are always
    included; the remaining choices range over first occurrences of the
    unforced rows.
    """
    if p < 0 or p > len(chain):
        return []
    forced = forced_marks(chain)
    firsts = first_occurrences(chain)
    if not forced <= firsts:
        return []
    free = sorted(firsts - forced, key=lambda lab: chain.labels.index(lab))
    need = p - len(forced)
    if need < 0 or need > len(free):
        return []
    out = [frozenset(forced) | frozenset(extra) for extra in itertools.combinations(free, need)]
    return out


def marking_count(chain: PieriChain, p: int) -> int:
    """
    Closed form for the number of p-markings:
    C(m0 - m, p - m) with m0 = #rows, m = #forced; 0 when infeasible.
    """
    if p < 0 or p > len(chain):
        return 0
    forced = forced_marks(chain)
    if not forced <= first_occurrences(chain):
        return 0
    m0 = len({a for a, _ in chain.labels})
    m = len(forced)
    if p < m or p > m0:
        return 0
    return comb(m0 - m, p - m)


def is_marking(chain: PieriChain, marks: frozenset) -> bool:
    """Direct check of conditions (1)-(3); used as the enumeration oracle."""
    labels = chain.labels
    if not marks <= set(labels):
        return False
    for s, lab in enumerate(labels):
        if lab in marks:
            if any(labels[u][0] == lab[0] for u in range(s)):
                return False
        elif s < len(labels) - 1 and not label_precedes(lab, labels[s + 1]):
            return False
    for t in range(1, len(labels) + 1):
        head = labels[:t]
        if all(x[1] == head[0][1] for x in head) and all(
            head[i][0] > head[i + 1][0] for i in range(t - 1)
        ):
            if head[t - 1] not in marks:
                return False
        else:
            break
    return True


def chains_with_markings(w: Permutation, k: int, p: int) -> list[tuple[PieriChain, list[Marking]]]:
    """Chains from w paired with their (possibly empty) lists of p-markings."""
    return [(c, enumerate_markings(c, p)) for c in enumerate_pieri_chains(w, k)]
