"""Lattice path objects and their statistics.

Paths are represented canonically by area words: a labelled Dyck path of
size N is the word a_1..a_N (a_1 = 0, a_{i+1} <= a_i + 1) together with
per-row labels and a set of decorated rises.  Reduced parallelogram
polyominoes are area words over the doubled alphabet
0 < 0b < 1 < 1b < 2 < ... (b marks a barred letter), with the ghost
letter 0 at index 0.  Step-grid geometry is derived, not stored.
"""

from __future__ import annotations

import json


class InvalidPathError(ValueError):
    """A structural invariant of a path object is violated."""


class DomainError(ValueError):
    """An operation was applied outside its stated domain."""


class GeometryError(ValueError):
    """A step-path pair does not form a valid reduced polyomino."""


class Composition(tuple):
    """A composition: positive parts with a fixed total."""

    def __new__(cls, parts):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise InvalidPathError("composition parts must be >= 1")
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)


class DecoratedLabelledPath:
    """A (partially) labelled Dyck path with decorated rises.

    ``labels`` is None for an unlabelled path.  ``decorated_rises`` holds
    1-based row indices; every decorated index must be a rise.
    ``ghost_row`` marks row 1 as a conventional car excluded from content
    (its label must then be 2 on the main diagonal).
    """

    __slots__ = ("area_word", "labels", "decorated_rises", "ghost_row")

    def __init__(self, area_word, labels=None, decorated_rises=(), ghost_row=False):
        self.area_word = tuple(area_word)
        self.labels = None if labels is None else tuple(labels)
        self.decorated_rises = frozenset(decorated_rises)
        self.ghost_row = bool(ghost_row)
        self._validate()

    def _validate(self):
        a = self.area_word
        n = len(a)
        if n and a[0] != 0:
            raise InvalidPathError("area word must start with 0")
        for i in range(1, n):
            if a[i] < 0 or a[i] > a[i - 1] + 1:
                raise InvalidPathError(
                    f"area word steps by more than +1 at row {i + 1}"
                )
        if self.labels is not None:
            if len(self.labels) != n:
                raise InvalidPathError("labels length differs from area word")
            if any(l < 0 for l in self.labels):
                raise InvalidPathError("labels must be non-negative")
            for i in range(1, n):
                if a[i] == a[i - 1] + 1 and self.labels[i] <= self.labels[i - 1]:
                    raise InvalidPathError(
                        f"labels not strictly increasing in column at row {i + 1}"
                    )
        rises = self.rises()
        for i in self.decorated_rises:
            if i not in rises:
                raise InvalidPathError(f"decorated index {i} is not a rise")
        if self.ghost_row:
            if self.labels is None or n == 0:
                raise InvalidPathError("ghost row requires a labelled row 1")
            if self.labels[0] != 2 or a[0] != 0:
                raise InvalidPathError("ghost row must be the car 2 at level 0")

    # -- basic structure ----------------------------------------------

    @property
    def size(self):
        return len(self.area_word)

    def rises(self):
        """1-based indices i with a_i > a_{i-1}."""
        a = self.area_word
        return frozenset(
            i + 1 for i in range(1, len(a)) if a[i] > a[i - 1]
        )

    def valleys(self):
        """1-based indices of non-rise rows (row 1 included)."""
        a = self.area_word
        return frozenset([1] if a else []) | frozenset(
            i + 1 for i in range(1, len(a)) if a[i] <= a[i - 1]
        )

    def zero_valleys(self):
        """Valleys carrying the label 0."""
        if self.labels is None:
            return frozenset()
        return frozenset(i for i in self.valleys() if self.labels[i - 1] == 0)

    def positive_rows(self):
        if self.labels is None:
            return tuple(range(1, self.size + 1))
        return tuple(
            i + 1 for i, l in enumerate(self.labels) if l > 0
        )

    def content(self):
        """Multiset of positive labels (ghost row excluded)."""
        if self.labels is None:
            return ()
        start = 1 if self.ghost_row else 0
        return tuple(sorted(l for l in self.labels[start:] if l > 0))

    # -- statistics ---------------------------------------------------

    def area(self):
        return sum(
            a
            for i, a in enumerate(self.area_word, start=1)
            if i not in self.decorated_rises
        )

    def dinv_pairs(self):
        """(primary, secondary) lists of inverting index pairs (1-based)."""
        a, l = self.area_word, self.labels
        primary, secondary = [], []
        n = len(a)
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] == a[j] and (l is None or l[i] < l[j]):
                    primary.append((i + 1, j + 1))
                elif a[i] == a[j] + 1 and (l is None or l[i] > l[j]):
                    secondary.append((i + 1, j + 1))
        return primary, secondary

    def dinv(self):
        primary, secondary = self.dinv_pairs()
        return len(primary) + len(secondary)

    def reading_word(self):
        """Positive labels read along diagonals bottom to top."""
        if self.labels is None:
            raise DomainError("reading word needs labels")
        rows = sorted(range(self.size), key=lambda i: (self.area_word[i], i))
        return tuple(self.labels[i] for i in rows if self.labels[i] > 0)

    def reading_order(self):
        """All 1-based row indices sorted by (level, row)."""
        return tuple(
            i + 1
            for i in sorted(range(self.size), key=lambda i: (self.area_word[i], i))
        )

    def zero_composition(self):
        """Groups of 0-labels split at the 0-labels on the main diagonal."""
        if self.labels is None or self.size == 0 or self.labels[0] != 0:
            raise DomainError("zero composition needs a 0 in the bottom-left corner")
        anchors = [
            i
            for i in range(self.size)
            if self.area_word[i] == 0 and self.labels[i] == 0
        ]
        zeros = [i for i in range(self.size) if self.labels[i] == 0]
        parts = []
        for j, start in enumerate(anchors):
            end = anchors[j + 1] if j + 1 < len(anchors) else self.size
            parts.append(sum(1 for i in zeros if start <= i < end))
        return Composition(parts)

    def big_car_composition(self):
        """Groups of 2-cars split at the 2-cars on the main diagonal."""
        if self.labels is None or not set(self.labels) <= {1, 2}:
            raise DomainError("big car composition needs labels in {1, 2}")
        anchors = [
            i
            for i in range(self.size)
            if self.area_word[i] == 0 and self.labels[i] == 2
        ]
        bigs = [i for i in range(self.size) if self.labels[i] == 2]
        if not anchors:
            raise DomainError("no big car on the main diagonal")
        if bigs and bigs[0] < anchors[0]:
            raise DomainError("big car before the first diagonal big car")
        parts = []
        for j, start in enumerate(anchors):
            end = anchors[j + 1] if j + 1 < len(anchors) else self.size
            parts.append(sum(1 for i in bigs if start <= i < end))
        return Composition(parts)

    # -- ghost handling -----------------------------------------------

    def with_ghost(self):
        """Prepend the conventional diagonal 2-car as row 1."""
        if self.ghost_row:
            raise DomainError("path already has a ghost row")
        if self.labels is None:
            raise DomainError("ghost row needs a labelled path")
        return DecoratedLabelledPath(
            (0,) + self.area_word,
            (2,) + self.labels,
            frozenset(i + 1 for i in self.decorated_rises),
            ghost_row=True,
        )

    def without_ghost(self):
        if not self.ghost_row:
            raise DomainError("path has no ghost row")
        return DecoratedLabelledPath(
            self.area_word[1:],
            self.labels[1:],
            frozenset(i - 1 for i in self.decorated_rises),
            ghost_row=False,
        )

    # -- serialization ------------------------------------------------

    def to_json(self, family=""):
        return {
            "family": family,
            "area_word": list(self.area_word),
            "labels": None if self.labels is None else list(self.labels),
            "decorated_rises": sorted(self.decorated_rises),
            "ghost_row": self.ghost_row,
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            obj["area_word"],
            obj.get("labels"),
            obj.get("decorated_rises", ()),
            obj.get("ghost_row", False),
        )

    def __eq__(self, other):
        if not isinstance(other, DecoratedLabelledPath):
            return NotImplemented
        return (
            self.area_word == other.area_word
            and self.labels == other.labels
            and self.decorated_rises == other.decorated_rises
            and self.ghost_row == other.ghost_row
        )

    def __hash__(self):
        return hash(
            (self.area_word, self.labels, self.decorated_rises, self.ghost_row)
        )

    def __repr__(self):
        aw = "".join(map(str, self.area_word)) or "()"
        if self.labels is None:
            return f"Path({aw})"
        ls = ",".join(map(str, self.labels))
        dec = "".join(f"*{i}" for i in sorted(self.decorated_rises))
        ghost = " ghost" if self.ghost_row else ""
        return f"Path({aw}; {ls}{dec}{ghost})"


# -- polyomino words --------------------------------------------------


def _letter_key(letter):
    """Rank of a letter in the order 0 < 0b < 1 < 1b < 2 < ..."""
    v, barred = letter
    return 2 * v + (1 if barred else 0)


def letter_successor(letter):
    v, barred = letter
    return (v + 1, False) if barred else (v, True)


class PolyominoWord:
    """Area word of a reduced parallelogram polyomino.

    ``letters`` are (value, barred) pairs indexed from 0; index 0 is the
    ghost letter, always the unbarred 0.  A word with m+1 unbarred and n
    barred letters encodes an m x n polyomino.
    """

    __slots__ = ("letters", "decorated_rises")

    def __init__(self, letters, decorated_rises=()):
        self.letters = tuple((int(v), bool(b)) for v, b in letters)
        self.decorated_rises = frozenset(decorated_rises)
        self._validate()

    def _validate(self):
        w = self.letters
        if not w:
            raise InvalidPathError("polyomino word cannot be empty")
        if w[0] != (0, False):
            raise InvalidPathError("first letter must be the unbarred 0")
        if any(v < 0 for v, _ in w):
            raise InvalidPathError("letter values must be non-negative")
        for i in range(1, len(w)):
            if _letter_key(w[i]) > _letter_key(w[i - 1]) + 1:
                raise InvalidPathError(
                    f"letter {i} exceeds the successor of letter {i - 1}"
                )
        rises = self.rises()
        for i in self.decorated_rises:
            if i not in rises:
                raise InvalidPathError(f"decorated index {i} is not a rise")

    @property
    def m(self):
        return sum(1 for _, b in self.letters if not b) - 1

    @property
    def n(self):
        return sum(1 for _, b in self.letters if b)

    def rises(self):
        w = self.letters
        return frozenset(
            i for i in range(1, len(w)) if w[i][0] > w[i - 1][0]
        )

    def area(self):
        return sum(
            v
            for i, (v, _) in enumerate(self.letters)
            if i not in self.decorated_rises
        )

    def dinv_pairs(self):
        w = self.letters
        return [
            (i, j)
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] == letter_successor(w[j])
        ]

    def dinv(self):
        return len(self.dinv_pairs())

    def to_json(self):
        return {
            "letters": [{"v": v, "barred": b} for v, b in self.letters],
            "decorated_rises": sorted(self.decorated_rises),
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            [(d["v"], d["barred"]) for d in obj["letters"]],
            obj.get("decorated_rises", ()),
        )

    @classmethod
    def from_string(cls, s, decorated_rises=()):
        """Parse '0 0b 1 1b' style words ('b' marks a barred letter)."""
        letters = []
        for tok in s.split():
            if tok.endswith("b"):
                letters.append((int(tok[:-1]), True))
            else:
                letters.append((int(tok), False))
        return cls(letters, decorated_rises)

    def __str__(self):
        return " ".join(f"{v}b" if b else str(v) for v, b in self.letters)

    def __eq__(self, other):
        if not isinstance(other, PolyominoWord):
            return NotImplemented
        return (
            self.letters == other.letters
            and self.decorated_rises == other.decorated_rises
        )

    def __hash__(self):
        return hash((self.letters, self.decorated_rises))

    def __repr__(self):
        dec = "".join(f"*{i}" for i in sorted(self.decorated_rises))
        return f"Word({self}{dec})"


class PolyominoPaths:
    """A reduced polyomino as a pair of N/E step strings from (0,0) to (m,n).

    The red path must stay weakly above the green one.  The conventional
    overlapping ghost steps from (-1,0) to (0,0) are implicit.
    """

    __slots__ = ("m", "n", "red", "green")

    def __init__(self, m, n, red, green):
        self.m, self.n = int(m), int(n)
        self.red, self.green = str(red), str(green)
        self._validate()

    def _validate(self):
        for name, path in (("red", self.red), ("green", self.green)):
            if set(path) - {"N", "E"}:
                raise GeometryError(f"{name} path has steps other than N/E")
            if path.count("E") != self.m or path.count("N") != self.n:
                raise GeometryError(
                    f"{name} path does not go from (0,0) to ({self.m},{self.n})"
                )
        gh = self.green_heights()
        rh = self.red_heights()
        if any(g > r for g, r in zip(gh, rh)):
            raise GeometryError("red path dips below the green path")

    def _horizontal_heights(self, path):
        """Height of the horizontal step crossing each column 0..m-1."""
        heights, y = [], 0
        for step in path:
            if step == "N":
                y += 1
            else:
                heights.append(y)
        return heights

    def red_heights(self):
        return self._horizontal_heights(self.red)

    def green_heights(self):
        return self._horizontal_heights(self.green)

    def cells(self):
        """Unit squares strictly between the two paths, as (col, row) pairs."""
        gh, rh = self.green_heights(), self.red_heights()
        return {
            (c, y) for c in range(self.m) for y in range(gh[c], rh[c])
        }

    def area(self):
        return len(self.cells())

    def __eq__(self, other):
        if not isinstance(other, PolyominoPaths):
            return NotImplemented
        return (self.m, self.n, self.red, self.green) == (
            other.m,
            other.n,
            other.red,
            other.green,
        )

    def __hash__(self):
        return hash((self.m, self.n, self.red, self.green))

    def __repr__(self):
        return f"PolyominoPaths({self.m}x{self.n}, red={self.red!r}, green={self.green!r})"


def polyomino_encode(paths, decorated_rises=()):
    """Area word of a reduced polyomino given as a path pair.

    Each green horizontal step carries the length of the slope -1 diagonal
    drawn from its endpoint inside the polyomino; each red vertical step
    carries the barred count of squares in its row missed by all those
    diagonals.  Labels are read by sweeping the slope -1 lines x + y = d
    through the step endpoints, red label before green at ties.
    """
    cells = paths.cells()

    green_events = [(0, 0)]  # ghost step ends at the origin
    x = y = 0
    for step in paths.green:
        if step == "N":
            y += 1
        else:
            x += 1
            green_events.append((x, y))

    red_tops = []
    x = y = 0
    for step in paths.red:
        if step == "N":
            y += 1
            red_tops.append((x, y))
        else:
            x += 1

    crossed = set()
    events = []
    for gx, gy in green_events:
        v = 0
        while (gx - 1 - v, gy + v) in cells:
            crossed.add((gx - 1 - v, gy + v))
            v += 1
        events.append((gx + gy, 1, (v, False)))
    for rx, ry in red_tops:
        dots = sum(
            1 for c in range(paths.m) if (c, ry - 1) in cells and (c, ry - 1) not in crossed
        )
        events.append((rx + ry, 0, (dots, True)))

    events.sort(key=lambda e: (e[0], e[1]))
    return PolyominoWord([e[2] for e in events], decorated_rises)


def polyomino_decode(word):
    """Path pair of a polyomino area word.

    Letter j lies on the sweep line x + y = j - value(j); that locates the
    endpoint of each step: the i-th barred letter is the red vertical
    ending at height i, the k-th unbarred letter the green horizontal
    ending at x = k.
    """
    m, n = word.m, word.n
    red_x, green_y = [], []
    bar_seen = unbar_seen = 0
    for j, (v, barred) in enumerate(word.letters):
        d = j - v
        if barred:
            bar_seen += 1
            red_x.append(d - bar_seen)
        else:
            green_y.append(d - unbar_seen)
            unbar_seen += 1
    # green_y[0] belongs to the ghost step; real horizontals follow.
    if green_y[0] != 0:
        raise GeometryError("ghost letter does not sit at the origin")

    def monotone(xs, lo, hi, what):
        prev = lo
        for x in xs:
            if x < prev or x > hi:
                raise GeometryError(f"{what} positions not monotone in range")
            prev = x

    monotone(red_x, 0, m, "red vertical")
    monotone(green_y[1:], 0, n, "green horizontal")

    red, x = [], 0
    for rx in red_x:
        red.append("E" * (rx - x) + "N")
        x = rx
    red.append("E" * (m - x))
    green, y = [], 0
    for gy in green_y[1:]:
        green.append("N" * (gy - y) + "E")
        y = gy
    green.append("N" * (n - y))
    return PolyominoPaths(m, n, "".join(red), "".join(green))


# -- shuffle run membership -------------------------------------------


def word_in_runs(word, runs):
    """True iff, for every (lo, hi, increasing) run, the subsequence of
    values in [lo, hi] is exactly lo..hi in the stated direction."""
    for lo, hi, increasing in runs:
        sub = [x for x in word if lo <= x <= hi]
        want = list(range(lo, hi + 1))
        if not increasing:
            want.reverse()
        if sub != want:
            return False
    return True


def knm_runs(k, n, m):
    """Runs of a (k,n,m)-shuffle: 1..k up, n..k+1 down, m+n-k..n+1 down."""
    return [(1, k, True), (k + 1, n, False), (n + 1, m + n - k, False)]


def two_shuffle_runs(m, n):
    """Runs of a two-shuffle word: n..1 down, m+n..n+1 down."""
    return [(1, n, False), (n + 1, m + n, False)]
