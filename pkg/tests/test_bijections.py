"""Bijections: eta, psi, phi/ndinv, the recursive steps, and the
shuffle <-> two-car map."""

import pytest

from qtcomb.bijections import (
    DominoSequence,
    composite_recursive_step,
    ehh_forward,
    ehh_inverse,
    eta,
    eta_inverse,
    ndinv,
    phi,
    pld_recursive_step,
    psi,
    psi_inverse,
    shuffle_recursion_step,
)
from qtcomb.families import FamilySpec, generate, qt_enumerator
from qtcomb.paths import DecoratedLabelledPath, DomainError, PolyominoWord
from qtcomb.qt import QtPolynomial

# Worked pair: the Catalan-type path and its polyomino (area 13).
CAT_PATH = DecoratedLabelledPath(
    (0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3),
    (0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0),
    (2, 3, 7, 8, 10),
)
CAT_WORD = PolyominoWord.from_string("0 0b 1 1b 2 1 0b 1 1b 2 2 2b")

# Worked 6x11 polyomino and its image under the block step.
BIG_WORD = PolyominoWord.from_string("0 0b 1 1b 2 1b 1b 0 0b 0b 1 0b 0b 0b 1 1 1b 1b")
BIG_STEPPED = PolyominoWord.from_string("0 0b 0b 1 0b 0b 0b 1 1 1b 1b 0 0b 1 1 1b 1b")


class TestEta:
    def test_worked_pair(self):
        assert eta_inverse(CAT_PATH) == CAT_WORD
        assert eta(CAT_WORD) == CAT_PATH

    def test_area_preserved(self):
        assert CAT_PATH.area() == CAT_WORD.area() == 13

    def test_single_row(self):
        p = DecoratedLabelledPath((0,), (0,))
        assert str(eta_inverse(p)) == "0"

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            eta_inverse(DecoratedLabelledPath((0, 1), (1, 2)))

    def test_roundtrip_exhaustive(self):
        for m in range(4):
            for n in range(4 - m + 1):
                for p in generate(FamilySpec("catalan-pld", m=m, n=n)):
                    w = eta_inverse(p)
                    assert (w.m, w.n) == (m, n)
                    assert w.area() == p.area()
                    assert eta(w) == p


class TestPsi:
    def test_worked_pair(self):
        pf = psi(CAT_WORD)
        assert pf.area_word == (0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2)
        assert pf.labels == (2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1)
        assert pf.ghost_row

    def test_ghost_word(self):
        pf = psi(PolyominoWord.from_string("0"))
        assert pf.area_word == (0,) and pf.labels == (2,)

    def test_statistics_and_roundtrip(self):
        for m in range(4):
            for n in range(4 - m):
                for k in range(min(m, n) + 1):
                    for w in generate(FamilySpec("rp", m=m, n=n, k=k)):
                        pf = psi(w)
                        assert (pf.dinv(), pf.area()) == (w.dinv(), w.area())
                        assert psi_inverse(pf) == w

    def test_psi_inverse_domain(self):
        with pytest.raises(DomainError):
            psi_inverse(DecoratedLabelledPath((0, 1), (1, 2)))


class TestPhi:
    def test_single_domino(self):
        assert phi(DominoSequence([(2, 0)])) == DominoSequence([])

    def test_singleton_block(self):
        assert phi(DominoSequence([(2, 0), (2, 0)])) == DominoSequence([(2, 0)])

    def test_invariant_violation(self):
        with pytest.raises(DomainError, match=r"\[1,0\]"):
            phi(DominoSequence([(2, 0), (2, 1), (1, 1)]))

    def test_worked_block_step(self):
        image = phi(DominoSequence.from_path(psi(BIG_WORD)))
        assert psi_inverse(image.to_path()) == BIG_STEPPED

    def test_output_valid_and_shorter(self):
        for m in range(3):
            for n in range(4 - m):
                for p in generate(FamilySpec("pf2", m=m, n=n, ghost=True)):
                    seq = DominoSequence.from_path(p)
                    out = phi(seq)
                    assert len(out) == len(seq) - 1
                    if len(out):
                        out.to_path()  # validity check


class TestNdinv:
    def test_bases(self):
        assert ndinv(DominoSequence([])) == 0
        assert ndinv(DominoSequence([(2, 0)])) == 0

    def test_matches_dinv_through_the_composite(self):
        for m in range(4):
            for n in range(4 - m + 1):
                for p in generate(FamilySpec("catalan-pld", m=m, n=n)):
                    image = psi(eta_inverse(p))
                    assert ndinv(image) == p.dinv()
                    assert image.area() == p.area()
                    assert image.big_car_composition() == p.zero_composition()

    def test_two_shuffle_entry_point(self):
        p = DecoratedLabelledPath((0, 0, 0), (3, 1, 2))
        # split n=1: car 1 is the lone small label, 2 and 3 are big
        assert ndinv(p, n=1) == ndinv(
            DominoSequence([(2, 0), (2, 0), (1, 0), (2, 0)])
        )
        with pytest.raises(DomainError):
            ndinv(p)  # split parameter required


class TestPldStep:
    def test_double_valley_keeps_dinv(self):
        p = DecoratedLabelledPath((0, 0, 1), (0, 0, 1), (3,))
        out = pld_recursive_step(p)
        assert out.size == 2 and out.dinv() == p.dinv()

    def test_single_row_empties(self):
        p = DecoratedLabelledPath((0,), (0,))
        assert pld_recursive_step(p).size == 0

    def test_extensional_equality_and_dinv_drop(self):
        for m in range(4):
            for n in range(4 - m + 1):
                for p in generate(FamilySpec("catalan-pld", m=m, n=n)):
                    step = pld_recursive_step(p)
                    assert step == composite_recursive_step(p)
                    doubled = (
                        p.size >= 2
                        and p.area_word[1] == 0
                        and p.labels[1] == 0
                    )
                    touches = sum(
                        1
                        for i in range(p.size)
                        if p.area_word[i] == 0 and p.labels[i] == 0
                    )
                    drop = 0 if doubled else touches - 1
                    assert p.dinv() - step.dinv() == drop, p


# Worked shuffle path with reading word 51827364 and its two-car image.
SHUFFLE_SRC = DecoratedLabelledPath((0, 1, 1, 1, 0, 1, 2, 2), (5, 8, 2, 7, 1, 3, 6, 4))
SHUFFLE_IMG = DecoratedLabelledPath(
    (0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2),
    (2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1),
    (5, 8, 10),
    ghost_row=True,
)


class TestEhh:
    def test_worked_pair(self):
        assert SHUFFLE_SRC.reading_word() == (5, 1, 8, 2, 7, 3, 6, 4)
        img = ehh_forward(SHUFFLE_SRC, 3, 5, 6)
        assert img == SHUFFLE_IMG
        assert ehh_inverse(img, 3, 5, 6) == SHUFFLE_SRC

    def test_k_zero_is_relabelling(self):
        p = DecoratedLabelledPath((0, 0), (1, 2))
        img = ehh_forward(p, 0, 1, 1)
        assert img.area_word == (0, 0, 0)
        assert img.labels == (2, 1, 2)
        assert not img.decorated_rises

    def test_domain_guards(self):
        # reading word (1,2) is not a decreasing medium run
        with pytest.raises(DomainError):
            ehh_forward(DecoratedLabelledPath((0, 0), (1, 2)), 0, 2, 0)
        with pytest.raises(DomainError):
            ehh_inverse(SHUFFLE_IMG, 2, 5, 6)

    def test_bijection_exhaustive(self):
        for k in range(0, 4):
            for n in range(k, 5):
                for m in range(k, 5):
                    if not 0 < m + n - k <= 4:
                        continue
                    lhs = QtPolynomial.zero()
                    images = set()
                    for p in generate(FamilySpec("shuffle-knm", m=m, n=n, k=k)):
                        img = ehh_forward(p, k, n, m)
                        assert (img.dinv(), img.area()) == (p.dinv(), p.area())
                        assert ehh_inverse(img, k, n, m) == p
                        images.add(img)
                        lhs += QtPolynomial.monomial(1, p.dinv(), p.area())
                    rhs = qt_enumerator(FamilySpec("pf2", m=m, n=n, k=k, ghost=True))
                    assert lhs == rhs, (k, n, m)
                    assert len(images) == lhs.eval(1, 1)


class TestShuffleStep:
    def test_two_row_instance(self):
        # one medium on the diagonal, one big at level 1: everything goes
        p = DecoratedLabelledPath((0, 1), (1, 2))
        img, summary = shuffle_recursion_step(p, 0, 1, 1)
        assert img.size == 0
        assert summary == {
            "s": 1,
            "h": 0,
            "diag_big": 0,
            "level1_big": 1,
            "base_case": False,
        }

    def test_big_staircase_is_base(self):
        p = DecoratedLabelledPath((0, 0), (2, 1))
        img, summary = shuffle_recursion_step(p, 0, 0, 2)
        assert summary["base_case"] and img.size == 0

    def test_area_bookkeeping(self):
        for k in range(0, 4):
            for n in range(max(k, 1), 5):
                for m in range(k, 5):
                    if not 0 < m + n - k <= 4:
                        continue
                    for p in generate(FamilySpec("shuffle-knm", m=m, n=n, k=k)):
                        img, summary = shuffle_recursion_step(p, k, n, m)
                        diag = summary["s"] + summary["diag_big"]
                        assert p.area() - img.area() == p.size - diag

    def test_image_bucket_matches_u(self):
        from qtcomb.families import shuffle_bucket_index

        for n in range(1, 4):
            for m in range(0, 4):
                if m + n > 4:
                    continue
                for p in generate(FamilySpec("shuffle-knm", m=m, n=n, k=0)):
                    img, summary = shuffle_recursion_step(p, 0, n, m)
                    if img.size:
                        u = summary["h"] + summary["level1_big"]
                        n2 = n - summary["s"]
                        assert shuffle_bucket_index(img, n2, "nonghost") == u - 1
