"""Matrices printed in the reference text for d = 2, 3, 4, 6, 12 and 20.

Entries are transcribed as short symbol strings (``"-ij2"`` is ``-i * j**2``)
and parsed into exact exponents, so the tables can be read side by side with
the printed displays. Nothing here is derived; comparison against generated
constructions lives in :mod:`mubkit.fixtures`.
"""
import re
from functools import lru_cache

from mubkit.matrix import PhaseMatrix, diagonal, tensor

_TOKEN = re.compile(r"(i)?(?:([qjw])(\d*))?")


def parse_phase(token, modulus, base_orders):
    """Exponent of a printed unit such as ``"1"``, ``"-i"``, ``"q2"``, ``"-ij2"``.

    ``base_orders`` maps a letter to the order of that root of unity. ``"0"``
    parses to ``None``.
    """
    token = token.strip()
    if token == "0":
        return None
    neg = token.startswith("-")
    body = token[1:] if neg else token
    if body == "1":
        body = ""
    elif body == "":
        raise ValueError(f"cannot parse entry {token!r}")
    m = _TOKEN.fullmatch(body)
    if m is None:
        raise ValueError(f"cannot parse entry {token!r}")
    imag, letter, power = m.groups()
    e = modulus // 2 if neg else 0
    if imag:
        e += modulus // 4
    if letter:
        order = base_orders[letter]
        if modulus % order:
            raise ValueError(f"modulus {modulus} cannot hold order-{order} roots")
        e += int(power or 1) * (modulus // order)
    return e % modulus


def _grid(rows, modulus, scale_m, base_orders=None):
    base_orders = base_orders or {}
    entries = [[parse_phase(t, modulus, base_orders) for t in row.split()] for row in rows]
    return PhaseMatrix.from_entries(entries, modulus, scale_m)


# d = 2 ---------------------------------------------------------------------

def d2_P0():
    return _grid(["1 1", "1 -1"], 8, 2)


def d2_P1():
    return _grid(["1 1", "i -i"], 8, 2)


# d = 3 (q = exp(2 pi i / 3)) -------------------------------------------------

_Q3 = {"q": 3}


def d3_P0():
    return _grid(["1 1 1", "1 q q2", "1 q2 q"], 12, 3, _Q3)


def d3_P1():
    return _grid(["1 1 1", "q2 1 q", "1 q2 q"], 12, 3, _Q3)


def d3_P2():
    return _grid(["1 1 1", "q q2 1", "1 q2 q"], 12, 3, _Q3)


def d3_P1_alt():
    """The alternative unbiased matrix used in the second d=3 MUM."""
    return _grid(["1 1 q", "1 q 1", "q 1 1"], 12, 3, _Q3)


# d = 4 ---------------------------------------------------------------------

def d4_P0_prime():
    return _grid(["1 1", "-1 1"], 8, 2)


def d4_P1_prime():
    return _grid(["1 1", "-i i"], 8, 2)


def _blocks(coeffs, blocks, modulus):
    """Assemble a block matrix from a grid of phase coefficients and 2x2 blocks.

    ``coeffs[r][c]`` is a (exponent, block_name) pair.
    """
    n = len(coeffs)
    b = next(iter(blocks.values()))
    db = b.dim
    lifted = {k: v.lift(modulus) for k, v in blocks.items()}
    scale = b.scale_m
    grid = [[None] * (n * db) for _ in range(n * db)]
    for r, row in enumerate(coeffs):
        for c, (e, name) in enumerate(row):
            blk = lifted[name]
            if blk.scale_m != scale:
                raise ValueError("blocks must share a scale")
            for i in range(db):
                for j in range(db):
                    x = blk.exponents[i, j]
                    grid[r * db + i][c * db + j] = None if x < 0 else int((x + e) % modulus)
    return PhaseMatrix.from_entries(grid, modulus, scale * n)


def d4_P01_prime():
    """``(1/sqrt 2) [[P0, P0], [-i P0', i P0']]``."""
    blocks = {"P0": d2_P0(), "P0'": d4_P0_prime()}
    return _blocks([[(0, "P0"), (0, "P0")], [(6, "P0'"), (2, "P0'")]], blocks, 8)


def d4_P10_prime():
    """``(1/sqrt 2) [[P1, P1], [-P1', P1']]``."""
    blocks = {"P1": d2_P1(), "P1'": d4_P1_prime()}
    return _blocks([[(0, "P1"), (0, "P1")], [(4, "P1'"), (0, "P1'")]], blocks, 8)


def d4_A():
    """``exp(-i pi/4)/sqrt 2`` times the printed 4x4 pattern of 1 and i."""
    base = _grid(["1 0 0 i", "0 1 i 0", "0 i 1 0", "i 0 0 1"], 8, 2)
    return PhaseMatrix(
        [[-1 if x < 0 else (x - 1) % 8 for x in row] for row in base.exponents], 8, 2
    )


def d4_block_identity():
    """Printed value of the upper-left block identity: ``[[1, -i], [-i, 1]]``."""
    return _grid(["1 -i", "-i 1"], 8, 1)


# d = 6 (j = exp(2 pi i / 6)) ---------------------------------------------------

_J6 = {"j": 6}


def d6_P0():
    return _grid(
        [
            "1 1 1 1 1 1",
            "1 j j2 -1 -j -j2",
            "1 j2 -j 1 j2 -j",
            "1 -1 1 -1 1 -1",
            "1 -j j2 1 -j j2",
            "1 -j2 -j -1 j2 j",
        ],
        12,
        6,
        _J6,
    )


def d6_P1():
    return _grid(
        [
            "1 1 1 1 1 1",
            "-ij2 i ij ij2 -i -ij",
            "1 j2 -j 1 j2 -j",
            "-i i -i i -i i",
            "j2 1 -j j2 1 -j",
            "-i ij2 ij i -ij2 -ij",
        ],
        12,
        6,
        _J6,
    )


def d6_Dtilde():
    entries = [parse_phase(t, 12, _J6) for t in "1 -ij2 1 -i j2 -i".split()]
    return diagonal(entries, 12)


# d = 12 and d = 20 -------------------------------------------------------------

def _coeff_grid(rows, modulus, base_orders):
    return [[parse_phase(t, modulus, base_orders) for t in row.split()] for row in rows]


# coefficient patterns multiplying the 4x4 blocks Q_j (over 1/sqrt 3)
D12_COEFFS = (
    ["1 1 1", "1 q q2", "1 q2 q"],
    ["1 1 1", "q2 1 q", "1 q2 q"],
    ["1 1 1", "q q2 1", "1 q2 q"],
)

# coefficient patterns multiplying the 5x5 blocks P_j (over 1/2)
D20_COEFFS = (
    ["1 1 1 1", "1 -1 1 -1", "1 1 -1 -1", "1 -1 -1 1"],
    ["1 1 1 1", "1 -1 1 -1", "-i -i i i", "i -i -i i"],
    ["1 1 1 1", "i -i i -i", "-1 -1 1 1", "i -i -i i"],
    ["1 1 1 1", "i -i i -i", "i i -i -i", "-1 1 1 -1"],
)


def d4_Q():
    """The four d=4 bases in lexicographic order (00, 01, 10, 11)."""
    p0, p1 = d2_P0(), d2_P1()
    return (tensor(p0, p0), d4_P01_prime(), d4_P10_prime(), tensor(p1, p1))


def _coefficient_times_block(coeff_rows, base_orders, scale_m, block):
    exps = _coeff_grid(coeff_rows, 12, base_orders)
    coeff = PhaseMatrix.from_entries(exps, 12, scale_m)
    return tensor(coeff, block)


@lru_cache(maxsize=None)
def d12_R():
    """Printed ``R_j``: 3x3 block form with blocks ``Q_j``."""
    q = d4_Q()
    return tuple(_coefficient_times_block(D12_COEFFS[j], _Q3, 3, q[j]) for j in range(3))


@lru_cache(maxsize=None)
def d20_R():
    """Printed ``R'_j``: 4x4 block form with blocks ``P_j`` of dimension 5."""
    from mubkit.constructions import build_Pk_odd

    return tuple(
        _coefficient_times_block(D20_COEFFS[j], {}, 4, build_Pk_odd(5, j)) for j in range(4)
    )
