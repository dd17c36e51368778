"""Closed-form bounds on minimum cover sizes and the interval ledger.

f(n,k,d) is the least size of a (k,d)-cover of F_2^n; g(n,k,d;s) fixes the
origin count at s.  Formula bounds are exact integers; the one genuinely
irrational bound (the Hamming-style packing bound) is compared through an
equivalent integer inequality so no floating-point ordering can leak in.
propagate() closes a rectangle of [lo,hi] intervals under the dimension
and multiplicity recursions and records which rule set each endpoint.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources


def lb_double_count(n: int, k: int, d: int, s: int = 0) -> int:
    """Incidence-count lower bound 2^d k - floor((k-s) / 2^(n-d)) on g(n,k,d;s)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if not 0 <= s < k:
        raise ValueError(f"need 0 <= s < k, got s={s}, k={k}")
    return (k << d) - ((k - s) >> (n - d))


def exact_thm_a(n: int, k: int, d: int) -> int | None:
    """f(n,k,d) in the dense regime k >= 2^(n-d-1); None outside it."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n - d - 1 >= 0 and k < (1 << (n - d - 1)):
        return None
    return (k << d) - (k >> (n - d))


def bounds_thm_bc(n: int, k: int, d: int) -> tuple[int, int] | None:
    """The general-position interval for f(n,k,d) when k >= 2.

    hi is always n + 2^d k - d - 2.  lo matches hi for n exponentially
    large, is the ceiling of n + 2^d k - d - log2(2k) in the intermediate
    range n >= floor(log2 k) + d + 1, and falls back to the incidence
    bound below that.  Returns None for k < 2.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if k < 2:
        return None
    hi = n + (k << d) - d - 2
    log_k = k.bit_length() - 1
    if n > (1 << ((k << d) - d - k + 1)):
        lo = hi
    elif n >= log_k + d + 1:
        # ceil(x - log2(2k)) for integer x, exact in integers
        lo = n + (k << d) - d - 1 - log_k
    else:
        lo = lb_double_count(n, k, d)
    return lo, hi


def lb_hamming_s0(n: int, k: int) -> Fraction:
    """Packing lower bound n + floor((k-1)/2) * log2(2n/(k-1)) on g(n,k,1;0).

    The log2 factor is evaluated in double precision and returned as the
    exact rational value of that evaluation; use hamming_ceil() whenever
    an integer comparison is needed.
    """
    if k < 2 or n < 1:
        raise ValueError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    t = (k - 1) // 2
    if t == 0:
        return Fraction(n)
    return n + t * (Fraction(math.log2(2 * n)) - Fraction(math.log2(k - 1)))


def hamming_ceil(n: int, k: int) -> int:
    """Least integer m with m >= lb_hamming_s0(n,k), by exact integer arithmetic.

    m >= n + t*log2(2n/(k-1)) iff (k-1)^t * 2^(m-n) >= (2n)^t, which is an
    integer comparison; the search over the shift is a few steps.
    """
    if k < 2 or n < 1:
        raise ValueError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    t = (k - 1) // 2
    if t == 0:
        return n
    want = (2 * n) ** t
    have = (k - 1) ** t
    c = 0
    while (have << c) < want:
        c += 1
    if c == 0:
        while have >= (want << (1 - c)):
            c -= 1
    return n + c


def g_smax_formula(n: int, k: int, d: int) -> int:
    """Exact g(n,k,d;k-1) = n + 2^d k - d - 1."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return n + (k << d) - d - 1


def lb_g_restriction(n: int, k: int, d: int, s: int) -> int:
    """g(n,k,d;s) >= k(2^d - 1) + s + (n - d) for 0 <= s <= k-1.

    Restricting to a well-chosen linear hyperplane loses one subspace and
    keeps k, d, and s, so g descends by at least 1 per dimension down to
    the n = d base, where subspaces are single points and the size is
    forced to k(2^d - 1) + s exactly.  At s = k-1 this meets
    g_smax_formula, which is tight.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if not 0 <= s < k:
        raise ValueError(f"need 0 <= s <= k-1, got s={s}, k={k}")
    return k * ((1 << d) - 1) + s + (n - d)


def origin_mult_floor(n: int, k: int, d: int) -> int:
    """Provable least origin count of an optimal cover: k-2 for huge n, else 0."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if k > 2 and n > (1 << ((k << d) - k - d + 1)):
        return k - 2
    return 0


def jamison_value(n: int, d: int) -> int:
    """Exact f(n,1,d) = n + 2^d - d - 1 (classical single-cover value)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return n + (1 << d) - d - 1


def all_points_value(n: int, k: int) -> int:
    """Exact f(n,k,n) = k(2^n - 1): covering by points forces k copies each."""
    return k * ((1 << n) - 1)


@dataclass(frozen=True)
class Anchor:
    """An externally established fact about one cell, one or both sides."""

    n: int
    k: int
    d: int
    lo: int | None = None
    hi: int | None = None
    source: str = "anchor"

    def __post_init__(self) -> None:
        if self.lo is None and self.hi is None:
            raise ValueError("an anchor must carry a lo bound, a hi bound, or both")

    def to_json(self) -> dict:
        doc: dict = {"n": self.n, "k": self.k, "d": self.d, "source": self.source}
        if self.lo is not None and self.lo == self.hi:
            doc["value"] = self.lo
        else:
            if self.lo is not None:
                doc["lo"] = self.lo
            if self.hi is not None:
                doc["hi"] = self.hi
        return doc


def exact_anchor(n: int, k: int, d: int, value: int, source: str) -> Anchor:
    return Anchor(n=n, k=k, d=d, lo=value, hi=value, source=source)


def anchors_from_json(doc: dict) -> tuple[Anchor, ...]:
    out = []
    for item in doc["anchors"]:
        if "value" in item:
            lo = hi = int(item["value"])
        else:
            lo = int(item["lo"]) if "lo" in item else None
            hi = int(item["hi"]) if "hi" in item else None
        out.append(
            Anchor(
                n=int(item["n"]), k=int(item["k"]), d=int(item["d"]),
                lo=lo, hi=hi, source=str(item.get("source", "anchor")),
            )
        )
    return tuple(out)


def bundled_search_anchors() -> tuple[Anchor, ...]:
    """The shipped anchor set: exhaustive-search cell values plus the Golay bound."""
    text = resources.files("f2cover").joinpath("data/search_anchors.json").read_text()
    return anchors_from_json(json.loads(text))


@dataclass(frozen=True)
class BoundEntry:
    n: int
    k: int
    d: int
    lo: int
    hi: int
    lo_provenance: tuple[str, ...] = ()
    hi_provenance: tuple[str, ...] = ()

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_json(self) -> dict:
        return {
            "n": self.n, "k": self.k, "d": self.d, "lo": self.lo, "hi": self.hi,
            "lo_provenance": list(self.lo_provenance),
            "hi_provenance": list(self.hi_provenance),
        }


class LedgerContradiction(Exception):
    """lo exceeded hi somewhere: at least one anchor (or rule) is wrong."""


@dataclass
class BoundLedger:
    """[lo,hi] intervals for f(n,k,d) over a rectangle, closed under all rules."""

    d: int
    n_range: tuple[int, int]
    k_range: tuple[int, int]
    anchors: tuple[Anchor, ...]
    cells: dict[tuple[int, int, int], BoundEntry] = field(default_factory=dict)

    def entry(self, n: int, k: int) -> BoundEntry:
        return self.cells[(n, k, self.d)]

    def value(self, n: int, k: int) -> int:
        e = self.entry(n, k)
        if not e.exact:
            raise ValueError(f"f({n},{k},{self.d}) not pinned: [{e.lo},{e.hi}]")
        return e.lo

    def to_json(self) -> dict:
        return {
            "version": 1,
            "d": self.d,
            "n_range": list(self.n_range),
            "k_range": list(self.k_range),
            "anchors": [a.to_json() for a in self.anchors],
            "cells": [e.to_json() for _, e in sorted(self.cells.items())],
        }


def _closed_form_rules(n: int, k: int, d: int):
    """Per-cell (tag, side, value) contributions; side is 'lo', 'hi', or 'both'."""
    rules: list[tuple[str, str, int]] = []
    rules.append(("DoubleCount", "lo", lb_double_count(n, k, d)))
    a = exact_thm_a(n, k, d)
    if a is not None:
        rules.append(("ThmA", "both", a))
    if k == 1:
        rules.append(("Anchor(jamison)", "both", jamison_value(n, d)))
    if d == n:
        rules.append(("Anchor(allpoints)", "both", all_points_value(n, k)))
    if k >= 2:
        hi = n + (k << d) - d - 2
        rules.append(("Construction(l31)", "hi", hi))
        log_k = k.bit_length() - 1
        if n > (1 << ((k << d) - d - k + 1)):
            rules.append(("ThmB", "both", hi))
        elif n >= log_k + d + 1:
            rules.append(("ThmC", "lo", n + (k << d) - d - 1 - log_k))
    rules.append(("Construction(smax)", "hi", g_smax_formula(n, k, d)))
    if d == 1 and n == k and k >= 4:
        rules.append(("Construction(diag)", "hi", 3 * k - 4))
    return rules


def propagate(
    n_max: int,
    k_max: int,
    d: int = 1,
    anchors: tuple[Anchor, ...] | list[Anchor] = (),
) -> BoundLedger:
    """Least fixpoint of all bound rules over d <= n <= n_max, 1 <= k <= k_max.

    Anchors referring to cells outside the rectangle (or to another d) are
    ignored.  Raises LedgerContradiction when some cell's lower bounds
    exceed its upper bounds, which signals a wrong anchor.
    """
    if n_max < d or k_max < 1:
        raise ValueError(f"empty rectangle: n_max={n_max}, k_max={k_max}, d={d}")
    cells = [(n, k) for n in range(d, n_max + 1) for k in range(1, k_max + 1)]
    lo: dict[tuple[int, int], int] = {}
    hi: dict[tuple[int, int], int] = {}
    anchor_lo: dict[tuple[int, int], list[Anchor]] = {}
    anchor_hi: dict[tuple[int, int], list[Anchor]] = {}
    for a in anchors:
        if a.d != d or not (d <= a.n <= n_max and 1 <= a.k <= k_max):
            continue
        if a.lo is not None:
            anchor_lo.setdefault((a.n, a.k), []).append(a)
        if a.hi is not None:
            anchor_hi.setdefault((a.n, a.k), []).append(a)

    for n, k in cells:
        best_lo, best_hi = 0, n + (k << d)  # slack start; smax tightens immediately
        for _, side, value in _closed_form_rules(n, k, d):
            if side in ("lo", "both"):
                best_lo = max(best_lo, value)
            if side in ("hi", "both"):
                best_hi = min(best_hi, value)
        for a in anchor_lo.get((n, k), ()):
            best_lo = max(best_lo, a.lo)
        for a in anchor_hi.get((n, k), ()):
            best_hi = min(best_hi, a.hi)
        lo[(n, k)], hi[(n, k)] = best_lo, best_hi

    def relational(n: int, k: int) -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
        lo_rules: list[tuple[str, int]] = []
        hi_rules: list[tuple[str, int]] = []
        if (n - 1, k) in lo:
            lo_rules.append(("NRecursion", lo[(n - 1, k)] + 1))
        if (n + 1, k) in hi:
            hi_rules.append(("NRecursion", hi[(n + 1, k)] - 1))
        if (n, k - 1) in lo:
            lo_rules.append(("KRecursionLo", lo[(n, k - 1)] + 1))
            if d == 1:
                hi_rules.append(("KRecursionHi", hi[(n, k - 1)] + 2))
        if (n, k + 1) in hi:
            hi_rules.append(("KRecursionLo", hi[(n, k + 1)] - 1))
            if d == 1:
                lo_rules.append(("KRecursionHi", lo[(n, k + 1)] - 2))
        return lo_rules, hi_rules

    changed = True
    while changed:
        changed = False
        for n, k in cells:
            lo_rules, hi_rules = relational(n, k)
            new_lo = max([lo[(n, k)]] + [v for _, v in lo_rules])
            new_hi = min([hi[(n, k)]] + [v for _, v in hi_rules])
            if new_lo != lo[(n, k)] or new_hi != hi[(n, k)]:
                lo[(n, k)], hi[(n, k)] = new_lo, new_hi
                changed = True
            if new_lo > new_hi:
                raise LedgerContradiction(
                    f"f({n},{k},{d}): lower bound {new_lo} exceeds upper bound {new_hi}; "
                    "check the anchor inputs"
                )

    ledger = BoundLedger(
        d=d, n_range=(d, n_max), k_range=(1, k_max), anchors=tuple(anchors)
    )
    for n, k in cells:
        final_lo, final_hi = lo[(n, k)], hi[(n, k)]
        lp: list[str] = []
        hp: list[str] = []
        for tag, side, value in _closed_form_rules(n, k, d):
            if side in ("lo", "both") and value == final_lo:
                lp.append(tag)
            if side in ("hi", "both") and value == final_hi:
                hp.append(tag)
        lo_rules, hi_rules = relational(n, k)
        lp += [tag for tag, v in lo_rules if v == final_lo and tag not in lp]
        hp += [tag for tag, v in hi_rules if v == final_hi and tag not in hp]
        for a in anchor_lo.get((n, k), ()):
            if a.lo == final_lo:
                lp.append(f"Anchor({a.source})")
        for a in anchor_hi.get((n, k), ()):
            if a.hi == final_hi:
                hp.append(f"Anchor({a.source})")
        ledger.cells[(n, k, d)] = BoundEntry(
            n=n, k=k, d=d, lo=final_lo, hi=final_hi,
            lo_provenance=tuple(lp), hi_provenance=tuple(hp),
        )
    return ledger


def is_fixpoint(ledger: BoundLedger) -> bool:
    """True when re-running propagation with the same anchors changes nothing."""
    again = propagate(
        n_max=ledger.n_range[1], k_max=ledger.k_range[1], d=ledger.d,
        anchors=ledger.anchors,
    )
    return all(
        (e.lo, e.hi) == (again.cells[key].lo, again.cells[key].hi)
        for key, e in ledger.cells.items()
    )


@dataclass(frozen=True)
class N0Report:
    """Where the column k settles onto the linear value n + 2^d k - d - 2."""

    k: int
    status: str  # determined | at_least | at_most | open
    n0: int | None = None
    n0_min: int | None = None
    n0_max: int | None = None

    def to_json(self) -> dict:
        doc: dict = {"k": self.k, "status": self.status}
        for key in ("n0", "n0_min", "n0_max"):
            value = getattr(self, key)
            if value is not None:
                doc[key] = value
        return doc


def n0_report(k: int, ledger: BoundLedger) -> N0Report:
    """Threshold bookkeeping for one column of the ledger.

    Compares each exact cell against the linear target n + 2^d k - d - 2;
    once a column cell hits the target it stays there for all larger n, so
    the least such n determines the threshold when the cell just below is
    known to fall strictly short.
    """
    d = ledger.d
    n_lo, n_hi = ledger.n_range
    target = lambda n: n + (k << d) - d - 2
    below = None
    first_exact = None
    for n in range(max(n_lo, d), n_hi + 1):
        e = ledger.cells.get((n, k, d))
        if e is None:
            continue
        if e.hi < target(n):
            below = n
        if e.exact and e.lo == target(n) and first_exact is None:
            first_exact = n
    if first_exact is not None and below == first_exact - 1:
        return N0Report(k=k, status="determined", n0=first_exact,
                        n0_min=first_exact, n0_max=first_exact)
    if first_exact is not None and below is None:
        if first_exact == max(n_lo, d):
            return N0Report(k=k, status="at_most", n0_max=first_exact)
        return N0Report(k=k, status="open", n0_max=first_exact)
    if first_exact is None and below is not None:
        return N0Report(k=k, status="at_least", n0_min=below + 1)
    if first_exact is not None:
        return N0Report(k=k, status="open", n0_min=below + 1, n0_max=first_exact)
    return N0Report(k=k, status="open")


def _cell_text(e: BoundEntry) -> str:
    formula_hi = e.n + (e.k << e.d) - e.d - 2
    if e.exact:
        return f"{e.lo}*" if e.lo == formula_hi else str(e.lo)
    return f"{e.lo}..{e.hi}"


def format_table(
    ledger: BoundLedger,
    fmt: str = "md",
    n_lo: int | None = None,
    n_hi: int | None = None,
    k_lo: int | None = None,
    k_hi: int | None = None,
) -> str:
    """Render a rectangle of the ledger; asterisks mark cells equal to the
    linear upper-bound formula, intervals appear as lo..hi."""
    d = ledger.d
    n_a = max(ledger.n_range[0], n_lo if n_lo is not None else ledger.n_range[0])
    n_b = min(ledger.n_range[1], n_hi if n_hi is not None else ledger.n_range[1])
    k_a = max(ledger.k_range[0], k_lo if k_lo is not None else ledger.k_range[0])
    k_b = min(ledger.k_range[1], k_hi if k_hi is not None else ledger.k_range[1])
    ks = list(range(k_a, k_b + 1))
    rows = []
    for n in range(max(n_a, d), n_b + 1):
        texts = [_cell_text(ledger.cells[(n, k, d)]) for k in ks]
        rows.append((n, texts))
    if fmt == "csv":
        lines = ["n\\k," + ",".join(str(k) for k in ks)]
        lines += [f"{n}," + ",".join(texts) for n, texts in rows]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        lines = ["| n\\k | " + " | ".join(str(k) for k in ks) + " |"]
        lines.append("|" + " --- |" * (len(ks) + 1))
        lines += ["| " + " | ".join([str(n)] + texts) + " |" for n, texts in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")
