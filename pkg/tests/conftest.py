"""Shared shape lists and independent oracles for the test suite."""

from oddbox.rect import RectShape

# every shape with m + n <= 9, and the coprime ones among them
ALL_SHAPES = [
    RectShape(n, m) for total in range(2, 10) for n in range(1, total) for m in [total - n]
]
COPRIME_SHAPES = [s for s in ALL_SHAPES if s.coprime]
CLASS_SHAPES = [s for s in COPRIME_SHAPES if (s.n, s.m) != (1, 1)]


def boxes(shape, parts):
    """The diagram as a set of (row, column) boxes; row n is the bottom row."""
    return {
        (i, j)
        for i in range(1, shape.n + 1)
        for j in range(1, parts[shape.n - i] + 1)
    }


def is_box_diagram(shape, cells):
    """Whether a set of boxes is bottom-left justified inside the box."""
    for (i, j) in cells:
        if not (1 <= i <= shape.n and 1 <= j <= shape.m):
            return False
        if i + 1 <= shape.n and (i + 1, j) not in cells:
            return False
        if j > 1 and (i, j - 1) not in cells:
            return False
    return True


def oracle_corners(shape, parts):
    """Brute-force addable/removable boxes via box-set surgery."""
    cells = boxes(shape, parts)
    outer, inner = set(), set()
    for i in range(1, shape.n + 1):
        for j in range(1, shape.m + 1):
            if (i, j) not in cells and is_box_diagram(shape, cells | {(i, j)}):
                outer.add((i, j))
            if (i, j) in cells and is_box_diagram(shape, cells - {(i, j)}):
                inner.add((i, j))
    return outer, inner


def oracle_word(shape, parts):
    """Border word by walking the boundary lattice path point by point."""
    word = []
    a = b = 0
    while a < shape.n or b < shape.m:
        if a < shape.n and parts[shape.n - a - 1] == b:
            word.append("d")
            a += 1
        else:
            word.append("r")
            b += 1
    return "".join(word)
