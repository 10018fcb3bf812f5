"""Exhaustive generation of path families and exact q,t-enumerators.

Members are emitted in a canonical order: lexicographic by area word,
then by labels, then by decoration set.  Generators are streams with a
configurable size cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from qtcomb.paths import (
    DecoratedLabelledPath,
    PolyominoWord,
    knm_runs,
    two_shuffle_runs,
    word_in_runs,
)
from qtcomb.qt import QtPolynomial

FAMILIES = (
    "d",
    "ld",
    "pld",
    "catalan-pld",
    "pf2",
    "two-shuffle",
    "shuffle-knm",
    "rp",
)

R_SEMANTICS = ("nonghost", "ghost")


class FamilySpecError(ValueError):
    """A family descriptor is malformed or inconsistent."""


class CapacityError(RuntimeError):
    """A generation stream exceeded its size cap."""


@dataclass(frozen=True)
class FamilySpec:
    """Parameters naming one finite path family."""

    family: str
    m: int = 0
    n: int = 0
    k: int = 0
    r: int | None = None
    r_sem: str = "ghost"
    content: tuple | None = None
    ghost: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilySpecError(f"unknown family {self.family!r}")
        if self.m < 0 or self.n < 0 or self.k < 0:
            raise FamilySpecError("family parameters must be non-negative")
        if self.r_sem not in R_SEMANTICS:
            raise FamilySpecError(f"unknown r semantics {self.r_sem!r}")
        if self.content is not None:
            c = tuple(self.content)
            if any(x < 1 for x in c) or list(c) != sorted(c, reverse=True):
                raise FamilySpecError("content must be a partition")
            object.__setattr__(self, "content", c)
        f = self.family
        if f == "d" and (self.m or self.content):
            raise FamilySpecError("d takes only n and k")
        if f in ("ld", "pld"):
            if self.content is None:
                raise FamilySpecError(f"{f} enumeration requires a content partition")
            if sum(self.content) != self.n:
                raise FamilySpecError("content weight must equal n")
            if f == "ld" and self.m:
                raise FamilySpecError("ld has no zero labels")
            if self.k and self.k >= self.n:
                raise FamilySpecError("pld requires n > k >= 0")
        if f == "catalan-pld" and self.k:
            raise FamilySpecError("catalan-pld decorations are forced, k must be 0")
        if f == "pf2" and self.r is not None:
            lo = 0 if self.r_sem == "nonghost" else 1
            if self.r < lo:
                raise FamilySpecError("bucket index below its semantic range")
        if f in ("two-shuffle", "shuffle-knm", "pf2") and self.k > min(self.m, self.n):
            raise FamilySpecError("k exceeds min(m, n)")
        if f == "shuffle-knm" and self.ghost:
            raise FamilySpecError("shuffle paths carry no ghost row")

    @property
    def size(self):
        if self.family == "d":
            return self.n
        if self.family == "shuffle-knm":
            return self.m + self.n - self.k
        if self.family == "rp":
            return self.m + self.n + 1
        return self.m + self.n


# -- raw generators (lexicographic) ------------------------------------


def _area_words(size):
    word = []

    def rec(i):
        if i == size:
            yield tuple(word)
            return
        top = word[-1] + 1 if word else 0
        for a in range(top + 1):
            word.append(a)
            yield from rec(i + 1)
            word.pop()

    yield from rec(0)


def _labelled_paths(size, multiset, first_nonzero):
    """All (area_word, labels) over a fixed label multiset, lex order."""
    counts = {}
    for x in multiset:
        counts[x] = counts.get(x, 0) + 1
    values = sorted(counts)
    word, labels = [], []

    def rec(i):
        if i == size:
            yield tuple(word), tuple(labels)
            return
        top = word[-1] + 1 if word else 0
        for a in range(top + 1):
            rise = bool(word) and a == word[-1] + 1
            for v in values:
                if not counts[v]:
                    continue
                if rise and v <= labels[-1]:
                    continue
                if i == 0 and first_nonzero and v == 0:
                    continue
                counts[v] -= 1
                word.append(a)
                labels.append(v)
                yield from rec(i + 1)
                word.pop()
                labels.pop()
                counts[v] += 1

    yield from rec(0)


def _decorated(path_iter, k):
    for path in path_iter:
        for dec in combinations(sorted(path.rises()), k):
            yield DecoratedLabelledPath(
                path.area_word, path.labels, dec, path.ghost_row
            )


def _gen_catalan_pld(m, n):
    """Rows are either zero valleys or positively-labelled decorated rises;
    positive labels are canonical (1..n in reading order)."""
    rows = []  # entries: ("z", a) or ("p",)

    def rec(zeros_left, pos_left, prev_a):
        if not zeros_left and not pos_left:
            yield _assemble_catalan(rows)
            return
        if rows:
            if zeros_left:
                for z in range(prev_a + 1):
                    rows.append(("z", z))
                    yield from rec(zeros_left - 1, pos_left, z)
                    rows.pop()
            if pos_left:
                rows.append(("p", prev_a + 1))
                yield from rec(zeros_left, pos_left - 1, prev_a + 1)
                rows.pop()
        else:
            rows.append(("z", 0))
            yield from rec(zeros_left - 1, pos_left, 0)
            rows.pop()

    yield from rec(m + 1, n, 0)


def _assemble_catalan(rows):
    word = tuple(a for _, a in rows)
    order = sorted(
        (i for i, (kind, _) in enumerate(rows) if kind == "p"),
        key=lambda i: (word[i], i),
    )
    labels = [0] * len(rows)
    for value, i in enumerate(order, start=1):
        labels[i] = value
    dec = tuple(i + 1 for i, (kind, _) in enumerate(rows) if kind == "p")
    return DecoratedLabelledPath(word, labels, dec)


def _gen_rp(m, n):
    letters = [(0, False)]

    def rec(unbarred_left, barred_left):
        if not unbarred_left and not barred_left:
            yield PolyominoWord(tuple(letters))
            return
        v, barred = letters[-1]
        top_key = 2 * v + (2 if barred else 1)  # key of the successor letter
        for key in range(top_key + 1):
            cand = (key // 2, bool(key % 2))
            left = unbarred_left - (not cand[1])
            bleft = barred_left - cand[1]
            if left < 0 or bleft < 0:
                continue
            letters.append(cand)
            yield from rec(left, bleft)
            letters.pop()

    yield from rec(m, n)


def _rp_decorated(words, k):
    for w in words:
        for dec in combinations(sorted(w.rises()), k):
            yield PolyominoWord(w.letters, dec)


def _parking_paths(size):
    """Labelled Dyck paths whose labels are 1..size, each once."""
    return _labelled_paths(size, range(1, size + 1), first_nonzero=True)


def generate(spec, cap=10_000_000):
    """Stream the members of a family once each, in canonical order."""
    count = 0
    for member in _generate(spec):
        count += 1
        if count > cap:
            raise CapacityError(f"family stream exceeded cap {cap}")
        yield member


def _generate(spec):
    f = spec.family
    if f == "d":
        paths = (
            DecoratedLabelledPath(w) for w in _area_words(spec.n)
        )
        yield from _decorated(paths, spec.k)
    elif f in ("ld", "pld"):
        multiset = [0] * spec.m
        for i, mult in enumerate(spec.content, start=1):
            multiset += [i] * mult
        paths = (
            DecoratedLabelledPath(w, l)
            for w, l in _labelled_paths(spec.size, multiset, first_nonzero=True)
        )
        yield from _decorated(paths, spec.k)
    elif f == "catalan-pld":
        yield from _gen_catalan_pld(spec.m, spec.n)
    elif f == "pf2":
        multiset = [1] * spec.n + [2] * spec.m
        paths = (
            DecoratedLabelledPath(w, l)
            for w, l in _labelled_paths(spec.size, multiset, first_nonzero=False)
        )
        for path in _decorated(paths, spec.k):
            member = path.with_ghost() if spec.ghost else path
            if spec.r is None or bucket_index(member, spec.r_sem) == spec.r:
                yield member
    elif f == "two-shuffle":
        runs = two_shuffle_runs(spec.m, spec.n)
        paths = (
            DecoratedLabelledPath(w, l)
            for w, l in _parking_paths(spec.size)
        )
        paths = (p for p in paths if word_in_runs(p.reading_word(), runs))
        yield from _decorated(paths, spec.k)
    elif f == "shuffle-knm":
        runs = knm_runs(spec.k, spec.n, spec.m)
        for w, l in _parking_paths(spec.size):
            path = DecoratedLabelledPath(w, l)
            if word_in_runs(path.reading_word(), runs):
                if spec.r is None or shuffle_bucket_index(
                    path, spec.n, spec.r_sem
                ) == spec.r:
                    yield path
    elif f == "rp":
        yield from _rp_decorated(_gen_rp(spec.m, spec.n), spec.k)


# -- diagonal big-car buckets -------------------------------------------


def bucket_index(path, r_sem="ghost"):
    """Diagonal 2-car count of a two-car path under the given semantics.

    "nonghost" counts the diagonal 2-cars of the underlying path;
    "ghost" counts one more (the conventional diagonal car, whether or
    not it is materialized as a ghost row).
    """
    skip = 1 if path.ghost_row else 0
    count = sum(
        1
        for i in range(skip, path.size)
        if path.area_word[i] == 0 and path.labels[i] == 2
    )
    return count if r_sem == "nonghost" else count + 1


def shuffle_bucket_index(path, n, r_sem="ghost"):
    """Diagonal big-car count of a (k,n,m)-shuffle path (labels > n)."""
    count = sum(
        1
        for i in range(path.size)
        if path.area_word[i] == 0 and path.labels[i] > n
    )
    return count if r_sem == "nonghost" else count + 1


# -- enumerators --------------------------------------------------------


def qt_enumerator(spec, cap=10_000_000):
    """Sum of q^dinv t^area over the family."""
    total = QtPolynomial.zero()
    for member in generate(spec, cap=cap):
        total += QtPolynomial.monomial(1, member.dinv(), member.area())
    return total


def qt_enumerator_by_content(m, n, k, cap=10_000_000):
    """Map from content partition to the enumerator of matching members."""
    out = {}
    for lam in partitions(n):
        spec = FamilySpec("pld" if m else "ld", m=m, n=n, k=k, content=lam)
        out[lam] = qt_enumerator(spec, cap=cap)
    return out


def partitions(n, max_part=None):
    """Partitions of n, largest part first, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


# -- family validation ----------------------------------------------------


def validate_family(obj, spec):
    """Check membership of a path or polyomino word in the named family.

    Returns (ok, diagnostic); the diagnostic names the failed condition.
    """
    f = spec.family
    if f == "rp":
        if not isinstance(obj, PolyominoWord):
            return False, "expected a polyomino word"
        if obj.m != spec.m or obj.n != spec.n:
            return False, f"size is {obj.m}x{obj.n}, expected {spec.m}x{spec.n}"
        if len(obj.decorated_rises) != spec.k:
            return False, f"expected {spec.k} decorated rises"
        return True, "ok"

    if not isinstance(obj, DecoratedLabelledPath):
        return False, "expected a labelled path"

    if f == "d":
        if obj.labels is not None:
            return False, "unlabelled family"
        if obj.size != spec.n:
            return False, "wrong size"
        if len(obj.decorated_rises) != spec.k:
            return False, f"expected {spec.k} decorated rises"
        return True, "ok"

    if obj.labels is None:
        return False, "family requires labels"

    if f == "ld":
        if obj.size != spec.n:
            return False, "wrong size"
        if any(l < 1 for l in obj.labels):
            return False, "labels must be positive"
        return True, "ok"

    if f == "pld":
        if obj.size != spec.m + spec.n:
            return False, "wrong size"
        if sum(1 for l in obj.labels if l == 0) != spec.m:
            return False, f"expected {spec.m} zero labels"
        if obj.labels and obj.labels[0] == 0:
            return False, "zero label in the bottom-left corner"
        if len(obj.decorated_rises) != spec.k:
            return False, f"expected {spec.k} decorated rises"
        if spec.content is not None and obj.content() != tuple(
            sorted(
                [i for i, mult in enumerate(spec.content, 1) for _ in range(mult)]
            )
        ):
            return False, "content mismatch"
        return True, "ok"

    if f == "catalan-pld":
        if obj.size != spec.m + 1 + spec.n:
            return False, "wrong size"
        zeros = [i for i, l in enumerate(obj.labels, 1) if l == 0]
        if len(zeros) != spec.m + 1:
            return False, f"expected {spec.m + 1} zero labels"
        zv = obj.zero_valleys()
        if set(zeros) != set(zv):
            return False, "every zero label must be a zero valley"
        pos = obj.positive_rows()
        if len(pos) != spec.n:
            return False, f"expected {spec.n} positive labels"
        if obj.decorated_rises != frozenset(pos):
            return False, "every positive step must be a decorated rise"
        if list(obj.reading_word()) != list(range(1, spec.n + 1)):
            return False, "positive labels must read 1..n"
        return True, "ok"

    if f == "pf2":
        body = obj.without_ghost() if obj.ghost_row else obj
        if spec.ghost != obj.ghost_row:
            return False, "ghost row flag mismatch"
        if body.size != spec.m + spec.n:
            return False, "wrong size"
        if body.labels.count(1) != spec.n or body.labels.count(2) != spec.m:
            return False, "wrong car counts"
        if set(body.labels) - {1, 2}:
            return False, "labels must be 1 or 2"
        if len(obj.decorated_rises) != spec.k:
            return False, f"expected {spec.k} decorated rises"
        if spec.r is not None and bucket_index(obj, spec.r_sem) != spec.r:
            return False, "wrong diagonal big-car bucket"
        return True, "ok"

    if f in ("two-shuffle", "shuffle-knm"):
        if obj.size != spec.size:
            return False, "wrong size"
        if sorted(obj.labels) != list(range(1, spec.size + 1)):
            return False, "labels must be a permutation of 1..size"
        runs = (
            two_shuffle_runs(spec.m, spec.n)
            if f == "two-shuffle"
            else knm_runs(spec.k, spec.n, spec.m)
        )
        if not word_in_runs(obj.reading_word(), runs):
            return False, "reading word not in the shuffle"
        want_dec = spec.k if f == "two-shuffle" else 0
        if len(obj.decorated_rises) != want_dec:
            return False, f"expected {want_dec} decorated rises"
        return True, "ok"

    return False, f"unhandled family {f!r}"
