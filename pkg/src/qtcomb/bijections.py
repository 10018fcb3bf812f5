"""Statistic-preserving bijections between path families.

The maps implemented here:

* ``eta_inverse`` / ``eta``: Catalan-type partially labelled paths
  <-> reduced polyominoes (area-preserving).
* ``psi`` / ``psi_inverse``: polyomino words <-> two-car parking
  functions with a leading diagonal 2 (dinv- and area-preserving).
* ``phi`` and the recursive statistic ``ndinv`` on domino sequences.
* ``pld_recursive_step``: the direct path-level form of
  eta o psi_inverse o phi o psi o eta_inverse.
* ``ehh_forward`` / ``ehh_inverse``: (k,n,m)-shuffle paths <-> decorated
  two-car parking functions ((dinv, area)-preserving).
* ``shuffle_recursion_step``: the diagonal-deletion step on shuffle
  paths feeding the bucketed recursion.
"""

from __future__ import annotations

from qtcomb.families import FamilySpec, validate_family
from qtcomb.paths import (
    DecoratedLabelledPath,
    DomainError,
    PolyominoPaths,
    PolyominoWord,
    polyomino_decode,
    polyomino_encode,
)


def _require(obj, spec, what):
    ok, why = validate_family(obj, spec)
    if not ok:
        raise DomainError(f"{what}: {why}")


# -- eta ---------------------------------------------------------------


def eta_inverse(path):
    """Catalan-type path -> reduced polyomino word.

    Zero valleys become horizontal red steps (row 1 gives the ghost
    step), positive rows become vertical red steps; the k-th green
    horizontal sits below the k-th red one at distance equal to the
    area value of the corresponding zero-valley row.
    """
    m = len(path.zero_valleys()) - 1
    n = len(path.positive_rows())
    if m < 0:
        raise DomainError("eta_inverse: path has no zero valleys")
    _require(path, FamilySpec("catalan-pld", m=m, n=n), "eta_inverse")

    red, green = [], []
    y_red = 0
    y_green_prev = 0
    for i in range(path.size):
        if path.labels[i] == 0:
            z = path.area_word[i]
            if i > 0:
                red.append("E")
            y_green = y_red - z
            if y_green < y_green_prev:
                raise DomainError("eta_inverse: green heights not monotone")
            if i > 0:
                green.append("N" * (y_green - y_green_prev) + "E")
                y_green_prev = y_green
            elif z != 0:
                raise DomainError("eta_inverse: corner row must sit on the diagonal")
        else:
            red.append("N")
            y_red += 1
    green.append("N" * (n - y_green_prev))
    paths = PolyominoPaths(m, n, "".join(red), "".join(green))
    return polyomino_encode(paths)


def eta(word):
    """Reduced polyomino word -> Catalan-type path (inverse of eta_inverse)."""
    if word.decorated_rises:
        raise DomainError("eta expects an undecorated polyomino")
    paths = polyomino_decode(word)
    red_h = paths.red_heights()
    green_h = paths.green_heights()

    rows = [("z", 0)]
    k = 0
    prev_a = 0
    for step in paths.red:
        if step == "E":
            z = red_h[k] - green_h[k]
            k += 1
            if z > prev_a:
                raise DomainError("eta: valley deeper than the previous row allows")
            rows.append(("z", z))
            prev_a = z
        else:
            prev_a = prev_a + 1
            rows.append(("p", prev_a))

    area_word = tuple(a for _, a in rows)
    order = sorted(
        (i for i, (kind, _) in enumerate(rows) if kind == "p"),
        key=lambda i: (area_word[i], i),
    )
    labels = [0] * len(rows)
    for value, i in enumerate(order, start=1):
        labels[i] = value
    dec = tuple(i + 1 for i, (kind, _) in enumerate(rows) if kind == "p")
    return DecoratedLabelledPath(area_word, labels, dec)


# -- psi ---------------------------------------------------------------


def psi(word):
    """Polyomino word -> two-car parking function with leading diagonal 2.

    The area word is the word with bars disregarded; barred letters
    become 1-cars, unbarred become 2-cars; decorations transfer by index.
    """
    area_word = tuple(v for v, _ in word.letters)
    labels = tuple(1 if barred else 2 for _, barred in word.letters)
    dec = frozenset(i + 1 for i in word.decorated_rises)
    return DecoratedLabelledPath(area_word, labels, dec, ghost_row=True)


def psi_inverse(path):
    """Inverse of psi: bar the 1-car rows."""
    if not path.ghost_row:
        raise DomainError("psi_inverse expects the leading diagonal 2-car")
    if path.labels is None or set(path.labels) - {1, 2}:
        raise DomainError("psi_inverse expects labels in {1, 2}")
    letters = tuple(
        (a, l == 1) for a, l in zip(path.area_word, path.labels)
    )
    dec = frozenset(i - 1 for i in path.decorated_rises)
    return PolyominoWord(letters, dec)


# -- dominoes and phi ---------------------------------------------------


class DominoSequence:
    """Sequence of dominoes (label, level) viewed over a two-car path
    with its leading diagonal 2-car."""

    __slots__ = ("dominoes",)

    def __init__(self, dominoes):
        self.dominoes = tuple((int(l), int(a)) for l, a in dominoes)
        d = self.dominoes
        if d:
            if d[0] != (2, 0):
                raise DomainError("domino sequence must start with [2,0]")
            if any(l not in (1, 2) for l, _ in d):
                raise DomainError("domino labels must be 1 or 2")
            if d[0][1] != 0 or any(
                d[i][1] > d[i - 1][1] + 1 or d[i][1] < 0 for i in range(1, len(d))
            ):
                raise DomainError("domino levels do not form an area word")

    @classmethod
    def from_path(cls, path):
        if not path.ghost_row:
            raise DomainError("domino view needs the leading diagonal 2-car")
        return cls(tuple(zip(path.labels, path.area_word)))

    def to_path(self):
        if not self.dominoes:
            raise DomainError("empty domino sequence has no path form")
        labels = tuple(l for l, _ in self.dominoes)
        word = tuple(a for _, a in self.dominoes)
        return DecoratedLabelledPath(word, labels, (), ghost_row=True)

    def __len__(self):
        return len(self.dominoes)

    def __eq__(self, other):
        if not isinstance(other, DominoSequence):
            return NotImplemented
        return self.dominoes == other.dominoes

    def __hash__(self):
        return hash(self.dominoes)

    def __repr__(self):
        return "Dominoes(%s)" % ", ".join(f"[{l},{a}]" for l, a in self.dominoes)


def phi(seq):
    """One block step on a domino sequence.

    The block runs from the leading [2,0] up to (excluding) the next
    [2,0].  A singleton block is deleted.  Otherwise the domino right
    after the leading [2,0] is removed (it must be [1,0]), every other
    [2,a] in the block drops to [2,a-1], each adjacent pair
    [2,x][1,x+1] is rewritten as [1,x][2,x+1], and the block (leading
    [2,0] kept unchanged) moves to the end of the sequence.
    """
    d = list(seq.dominoes)
    if not d:
        raise DomainError("phi needs a nonempty sequence")
    end = len(d)
    for i in range(1, len(d)):
        if d[i] == (2, 0):
            end = i
            break
    block, rest = d[:end], d[end:]
    if len(block) == 1:
        return DominoSequence(rest)
    if block[1] != (1, 0):
        raise DomainError("phi: domino after the leading [2,0] must be [1,0]")
    body = [
        (l, a - 1) if l == 2 else (l, a) for l, a in block[2:]
    ]
    i = 0
    while i + 1 < len(body):
        (l1, a1), (l2, a2) = body[i], body[i + 1]
        if l1 == 2 and l2 == 1 and a2 == a1 + 1:
            body[i], body[i + 1] = (1, a1), (2, a2)
            i += 2
        else:
            i += 1
    return DominoSequence(rest + [(2, 0)] + body)


def _as_dominoes(obj, n=None):
    if isinstance(obj, DominoSequence):
        return obj
    if isinstance(obj, DecoratedLabelledPath):
        if obj.ghost_row:
            return DominoSequence.from_path(obj)
        if obj.labels is not None and set(obj.labels) <= {1, 2}:
            return DominoSequence.from_path(obj.with_ghost())
        # two-shuffle path: cars <= n become 1-cars, the rest 2-cars,
        # and the conventional diagonal 2-car is prepended
        if obj.labels is not None and sorted(obj.labels) == list(
            range(1, obj.size + 1)
        ):
            if n is None:
                raise DomainError(
                    "two-shuffle input needs the split parameter n"
                )
            spec = FamilySpec("two-shuffle", m=obj.size - n, n=n)
            _require(
                DecoratedLabelledPath(obj.area_word, obj.labels),
                spec,
                "ndinv",
            )
            labels = tuple(1 if l <= n else 2 for l in obj.labels)
            return DominoSequence.from_path(
                DecoratedLabelledPath(obj.area_word, labels).with_ghost()
            )
    raise DomainError("ndinv needs a two-car or two-shuffle path")


def _phi_block_is_singleton(seq):
    d = seq.dominoes
    return len(d) == 1 or d[1] == (2, 0)


def ndinv(obj, n=None):
    """The recursive statistic: each nontrivial phi step contributes
    (number of [2,0] dominoes) - 1; the trivial step that deletes a lone
    [2,0] block contributes nothing.

    The zero contribution of trivial steps is forced by the path-level
    picture, where deleting one of two leading diagonal zero valleys
    leaves dinv unchanged.
    """
    seq = _as_dominoes(obj, n)
    total = 0
    while len(seq):
        if not _phi_block_is_singleton(seq):
            total += sum(1 for dom in seq.dominoes if dom == (2, 0)) - 1
        seq = phi(seq)
    return total


# -- direct path-level recursive step -----------------------------------


def pld_recursive_step(path):
    """Direct form of eta o psi_inverse o phi o psi o eta_inverse.

    If the path starts with two diagonal zero valleys, one is deleted.
    Otherwise row 2 (the first non-valley vertical step) is deleted, the
    region before the second diagonal zero valley loses one column (its
    zero valleys move one step toward the diagonal), and the region is
    cycled to the end.
    """
    m = len(path.zero_valleys()) - 1
    n = len(path.positive_rows())
    if m < 0:
        raise DomainError("pld_recursive_step: path has no zero valleys")
    _require(path, FamilySpec("catalan-pld", m=m, n=n), "pld_recursive_step")
    rows = [
        ("z", path.area_word[i]) if path.labels[i] == 0 else ("p", None)
        for i in range(path.size)
    ]
    if len(rows) == 1:
        return DecoratedLabelledPath((), (), ())
    if rows[1] == ("z", 0):
        return _assemble_pld(rows[1:])
    # row 2 is positive here: a non-diagonal valley at row 2 would need
    # a level below 0.
    second = next(
        (i for i in range(1, len(rows)) if rows[i] == ("z", 0)), len(rows)
    )
    region = [rows[0]] + [
        ("z", z - 1) if kind == "z" else ("p", None)
        for kind, z in rows[2:second]
    ]
    return _assemble_pld(rows[second:] + region)


def _assemble_pld(rows):
    word, prev = [], 0
    for kind, z in rows:
        prev = z if kind == "z" else prev + 1
        word.append(prev)
    order = sorted(
        (i for i, (kind, _) in enumerate(rows) if kind == "p"),
        key=lambda i: (word[i], i),
    )
    labels = [0] * len(rows)
    for value, i in enumerate(order, start=1):
        labels[i] = value
    dec = tuple(i + 1 for i, (kind, _) in enumerate(rows) if kind == "p")
    return DecoratedLabelledPath(word, labels, dec)


def composite_recursive_step(path):
    """eta o psi_inverse o phi o psi o eta_inverse, composed literally."""
    image = phi(DominoSequence.from_path(psi(eta_inverse(path))))
    if not len(image):
        return DecoratedLabelledPath((), (), ())
    return eta(psi_inverse(image.to_path()))


# -- the shuffle <-> two-car bijection ----------------------------------


def ehh_forward(path, k, n, m):
    """(k,n,m)-shuffle path -> two-car parking function with k decorated
    rises and the leading diagonal 2-car; preserves (dinv, area).

    Cars k+1..n become 1-cars and n+1..m+n-k become 2-cars; then, for
    i = k down to 1, a decorated 2-car rise is inserted directly above
    the car i, which itself becomes a 1-car.
    """
    _require(path, FamilySpec("shuffle-knm", m=m, n=n, k=k), "ehh_forward")
    rows = []
    for a, l in zip(path.area_word, path.labels):
        if l <= k:
            rows.append([a, ("small", l), False])
        elif l <= n:
            rows.append([a, ("one",), False])
        else:
            rows.append([a, ("two",), False])
    for i in range(k, 0, -1):
        pos = next(
            j for j, row in enumerate(rows) if row[1] == ("small", i)
        )
        rows[pos][1] = ("one",)
        rows.insert(pos + 1, [rows[pos][0] + 1, ("two",), True])
    word = (0,) + tuple(r[0] for r in rows)
    labels = (2,) + tuple(1 if r[1] == ("one",) else 2 for r in rows)
    dec = tuple(i + 2 for i, r in enumerate(rows) if r[2])
    image = DecoratedLabelledPath(word, labels, dec, ghost_row=True)
    _require(
        image, FamilySpec("pf2", m=m, n=n, k=k, ghost=True), "ehh_forward image"
    )
    return image


def ehh_inverse(path, k, n, m):
    """Inverse of ehh_forward."""
    _require(
        path, FamilySpec("pf2", m=m, n=n, k=k, ghost=True), "ehh_inverse"
    )
    body = path.without_ghost()
    dec = sorted(body.decorated_rises)
    for i in dec:
        if i + 1 <= body.size and i + 1 in body.rises():
            raise DomainError(
                "ehh_inverse: more than two consecutive vertical steps"
            )
        if body.labels[i - 1] != 2 or body.labels[i - 2] != 1:
            raise DomainError("ehh_inverse: decorated rise not above a 1-car")
    companions = {i - 1 for i in dec}

    order = body.reading_order()
    new_labels = list(body.labels)
    next_one = n
    next_two = m + n - k
    for row in order:
        if row in companions or row in body.decorated_rises:
            continue
        if body.labels[row - 1] == 1:
            new_labels[row - 1] = next_one
            next_one -= 1
        else:
            new_labels[row - 1] = next_two
            next_two -= 1
    comp_order = [row for row in order if row in companions]
    for value, row in enumerate(comp_order, start=1):
        new_labels[row - 1] = value

    keep = [i for i in range(body.size) if i + 1 not in body.decorated_rises]
    word = tuple(body.area_word[i] for i in keep)
    labels = tuple(new_labels[i] for i in keep)
    out = DecoratedLabelledPath(word, labels)
    _require(out, FamilySpec("shuffle-knm", m=m, n=n, k=k), "ehh_inverse image")
    return out


# -- the shuffle recursion step ------------------------------------------


def shuffle_recursion_step(path, k, n, m):
    """Delete the diagonal medium/big cars, convert diagonal small cars
    to big cars, push everything else one level down, and delete the
    resulting first-position big car.

    Returns (image, summary) where the summary reports the diagonal
    small count h, the diagonal small+medium count s, the diagonal big
    count, and the level-1 big count of the input.
    """
    _require(path, FamilySpec("shuffle-knm", m=m, n=n, k=k), "shuffle_recursion_step")

    def kind(l):
        return "small" if l <= k else ("medium" if l <= n else "big")

    diag = [i for i in range(path.size) if path.area_word[i] == 0]
    h = sum(1 for i in diag if kind(path.labels[i]) == "small")
    s = h + sum(1 for i in diag if kind(path.labels[i]) == "medium")
    diag_big = sum(1 for i in diag if kind(path.labels[i]) == "big")
    level1_big = sum(
        1
        for i in range(path.size)
        if path.area_word[i] == 1 and kind(path.labels[i]) == "big"
    )
    summary = {
        "s": s,
        "h": h,
        "diag_big": diag_big,
        "level1_big": level1_big,
        "base_case": n == 0,
    }
    if n == 0:
        return DecoratedLabelledPath((), (), ()), summary

    rows = []
    for i in range(path.size):
        a, l = path.area_word[i], path.labels[i]
        if a == 0 and kind(l) in ("medium", "big"):
            continue
        if a == 0:
            rows.append(("big", 0))
        else:
            rows.append((kind(l), a - 1))
    deleted_first = bool(rows)
    if rows:
        if rows[0] != ("big", 0):
            raise DomainError(
                "shuffle_recursion_step: first car is not a big on the diagonal"
            )
        rows = rows[1:]

    # one big is deleted per diagonal big, plus the first-position big
    # when anything survived the diagonal deletions
    k2, n2, m2 = k - h, n - s, m - diag_big - (1 if deleted_first else 0)
    word = tuple(a for _, a in rows)
    order = sorted(range(len(rows)), key=lambda i: (rows[i][1], i))
    labels = [0] * len(rows)
    next_small = 1
    next_medium = n2
    next_big = m2 + n2 - k2
    for i in order:
        c = rows[i][0]
        if c == "small":
            labels[i] = next_small
            next_small += 1
        elif c == "medium":
            labels[i] = next_medium
            next_medium -= 1
        else:
            labels[i] = next_big
            next_big -= 1
    image = DecoratedLabelledPath(word, labels)
    _require(
        image, FamilySpec("shuffle-knm", m=m2, n=n2, k=k2), "shuffle_recursion_step image"
    )
    return image, summary
