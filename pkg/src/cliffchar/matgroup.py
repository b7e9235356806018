"""
Clifford group elements as unitary matrices over Q(zeta_8) modulo global phase.

Internally a matrix is an integer array ``A`` of shape (d, d, 4) together with
a shift ``s``; the entry (i, j) is ``sum_k A[i, j, k] z8^k / 2^s``.  Every
Clifford matrix has entries in Z[z8, 1/2], so this is exact.  The canonical
representative of a phase class ``{w^k M}`` is fixed by:

* ``s`` minimal (the numerators are not all even unless s == 0), and
* the first nonzero entry, row-major, has the lexicographically smallest
  coefficient vector among its eight phase rotations.

Since the phase rotations of a nonzero entry are pairwise distinct, this is
the lexicographically smallest entry list over the whole phase orbit.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence, Union

import numpy as np

from .cyclo import Cyclotomic

__all__ = [
    "PhaseMatrix",
    "GroupTable",
    "EnumerationCapExceeded",
    "gen_hadamard",
    "gen_phase",
    "gen_cz",
    "gen_pauli",
    "gen_swap",
    "identity",
    "mat_mul",
    "mat_inv",
    "parse_word",
    "format_word",
    "invert_word",
    "evaluate_word",
    "clifford_generators",
    "bfs_closure",
    "clifford_group",
    "group_order_formula",
    "DEFAULT_CAP",
    "MAX_ELEMENT_ORDER",
]

DEFAULT_CAP = 10**6
MAX_ELEMENT_ORDER = 48
_OVERFLOW_GUARD = 2**40

Word = tuple[tuple[str, int], ...]


class EnumerationCapExceeded(RuntimeError):
    pass


# -- arithmetic in Z[z8] on length-4 coefficient vectors ---------------------

def _rotation_matrices() -> np.ndarray:
    R = np.zeros((4, 4), dtype=np.int64)
    R[0, 1] = R[1, 2] = R[2, 3] = 1
    R[3, 0] = -1
    out = [np.eye(4, dtype=np.int64)]
    for _ in range(7):
        out.append(out[-1] @ R)
    return np.stack(out)


# _ROT[k]: row vector v -> coefficients of w^k * v
_ROT = _rotation_matrices()


def _zmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # row k of the multiplication matrix of b is z^k * b
    L = np.stack([b @ _ROT[k] for k in range(4)])
    return a @ L


def _big(A: np.ndarray) -> np.ndarray:
    """(..., d, d, 4) -> (..., 4d, 4d) integer matrix of right multiplication."""
    d = A.shape[-2]
    rot = np.einsum("...tjm,kmn->...tjkn", A, _ROT[:4])  # [t, j, k, n]
    rot = np.swapaxes(rot, -3, -2)  # [t, k, j, n]
    return rot.reshape(A.shape[:-3] + (4 * d, 4 * d))


def _normalize(A: np.ndarray, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Canonicalize a batch: clear common powers of two, then fix the phase."""
    N = A.shape[0]
    flat = A.reshape(N, -1)
    if np.abs(flat).max(initial=0) >= _OVERFLOW_GUARD:
        raise OverflowError("matrix coefficients exceed the machine-integer fast path")
    g = np.gcd.reduce(flat, axis=1)
    if np.any(g == 0):
        raise ValueError("zero matrix is not a group element")
    low = g & -g
    tz = np.rint(np.log2(low)).astype(np.int64)
    r = np.minimum(tz, s)
    if np.any(r):
        A = A >> r[:, None, None, None]
        s = s - r
    e4 = A.reshape(N, -1, 4)
    first = np.any(e4 != 0, axis=2).argmax(axis=1)
    v = e4[np.arange(N), first]  # (N, 4)
    V = np.einsum("ni,kij->nkj", v, _ROT)  # (N, 8, 4)
    cand = np.ones((N, 8), dtype=bool)
    for c in range(4):
        col = V[:, :, c]
        mn = np.where(cand, col, np.iinfo(np.int64).max).min(axis=1)
        cand &= col == mn[:, None]
    k = cand.argmax(axis=1)
    A = np.einsum("nabi,nij->nabj", A, _ROT[k])
    return np.ascontiguousarray(A), s


def _batch_mul(A1, s1, A2, s2) -> tuple[np.ndarray, np.ndarray]:
    """Products A1[i] @ A2[i] (A2 may be a single matrix, broadcast)."""
    N, d = A1.shape[0], A1.shape[1]
    left = A1.reshape(N, d, 4 * d)
    big = _big(A2)
    C = (left @ big).reshape(N, d, d, 4)
    return _normalize(C, s1 + s2)


def _batch_conj_transpose(A, s):
    c = np.stack([A[..., 0], -A[..., 3], -A[..., 2], -A[..., 1]], axis=-1)
    return _normalize(np.ascontiguousarray(np.swapaxes(c, 1, 2)), s.copy())


def _key(A: np.ndarray, s: int) -> bytes:
    return int(s).to_bytes(1, "little") + A.tobytes()


def _keys(A: np.ndarray, s: np.ndarray) -> list[bytes]:
    return [_key(A[i], s[i]) for i in range(A.shape[0])]


# -- PhaseMatrix ---------------------------------------------------------------

class PhaseMatrix:
    """A 2^n x 2^n unitary over Q(zeta_8), canonical modulo <w I>."""

    __slots__ = ("n", "_A", "_s", "key")

    def __init__(self, n: int, A: np.ndarray, s: int, *, canonical: bool = False):
        if not canonical:
            Ab, sb = _normalize(np.asarray(A, dtype=np.int64)[None], np.array([s], dtype=np.int64))
            A, s = Ab[0], int(sb[0])
        A = np.ascontiguousarray(A, dtype=np.int64)
        A.setflags(write=False)
        self.n = n
        self._A = A
        self._s = int(s)
        self.key = _key(A, self._s)

    @property
    def dim(self) -> int:
        return self._A.shape[0]

    @classmethod
    def from_entries(cls, n: int, entries: Sequence[Sequence[Cyclotomic]]) -> "PhaseMatrix":
        d = 2**n
        rows = [[Cyclotomic.coerce(x).lift(8) if Cyclotomic.coerce(x).conductor != 8 else x
                 for x in row] for row in entries]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError(f"expected a {d}x{d} matrix")
        den = 1
        for row in rows:
            for x in row:
                for c in x.coeffs:
                    den = max(den, c.denominator)
        s = den.bit_length() - 1
        if 2**s != den and den != 1:
            s += 1
        A = np.zeros((d, d, 4), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                for k, c in enumerate(x.coeffs):
                    q = c * 2**s
                    if q.denominator != 1:
                        raise ValueError("entries must lie in Z[z8, 1/2]")
                    A[i, j, k] = int(q)
        return cls(n, A, s)

    @property
    def entries(self) -> list[list[Cyclotomic]]:
        den = 2**self._s
        d = self.dim
        return [[Cyclotomic(8, [Fraction(int(c), den) for c in self._A[i, j]]) for j in range(d)]
                for i in range(d)]

    def trace(self) -> Cyclotomic:
        t = self._A.diagonal(axis1=0, axis2=1).sum(axis=1)
        return Cyclotomic(8, [Fraction(int(c), 2**self._s) for c in t])

    def to_complex(self) -> np.ndarray:
        w = np.exp(2j * np.pi * np.arange(4) / 8)
        return (self._A @ w) / 2**self._s

    def is_identity(self) -> bool:
        return self.key == identity(self.n).key

    def is_unitary(self) -> bool:
        """Exact check of M M^dagger = I (no phase normalisation involved)."""
        d, A = self.dim, self._A
        dag = np.stack([A[..., 0], -A[..., 3], -A[..., 2], -A[..., 1]], axis=-1).swapaxes(0, 1)
        C = (A.reshape(1, d, 4 * d) @ _big(np.ascontiguousarray(dag))).reshape(d, d, 4)
        target = np.zeros((d, d, 4), dtype=np.int64)
        target[np.arange(d), np.arange(d), 0] = 4**self._s
        return np.array_equal(C, target)

    def __mul__(self, other: "PhaseMatrix") -> "PhaseMatrix":
        return mat_mul(self, other)

    __matmul__ = __mul__

    def __pow__(self, k: int) -> "PhaseMatrix":
        base = self if k >= 0 else mat_inv(self)
        k = abs(k)
        result = identity(self.n)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, PhaseMatrix) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"PhaseMatrix(n={self.n}, [{rows}])"


def mat_mul(a: PhaseMatrix, b: PhaseMatrix) -> PhaseMatrix:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} qubits vs {b.n} qubits")
    A, s = _batch_mul(a._A[None], np.array([a._s]), b._A, np.array([b._s]))
    return PhaseMatrix(a.n, A[0], int(s[0]), canonical=True)


def mat_inv(a: PhaseMatrix) -> PhaseMatrix:
    """Inverse of a unitary: the conjugate transpose."""
    A, s = _batch_conj_transpose(a._A[None], np.array([a._s]))
    return PhaseMatrix(a.n, A[0], int(s[0]), canonical=True)


# -- generators ----------------------------------------------------------------

def _kron(A1, s1, A2, s2):
    d1, d2 = A1.shape[0], A2.shape[0]
    out = np.zeros((d1 * d2, d1 * d2, 4), dtype=np.int64)
    for i in range(d1):
        for j in range(d1):
            if not A1[i, j].any():
                continue
            for k in range(d2):
                for l in range(d2):
                    out[i * d2 + k, j * d2 + l] = _zmul(A1[i, j], A2[k, l])
    return out, s1 + s2


def _arr(rows) -> np.ndarray:
    return np.array(rows, dtype=np.int64)


_ONE, _ZERO = [1, 0, 0, 0], [0, 0, 0, 0]
_MINUS, _I = [-1, 0, 0, 0], [0, 0, 1, 0]
_R2 = [0, 1, 0, -1]  # z8 - z8^3 = sqrt(2)
_MR2 = [0, -1, 0, 1]

_SINGLE = {
    "I": (_arr([[_ONE, _ZERO], [_ZERO, _ONE]]), 0),
    "H": (_arr([[_R2, _R2], [_R2, _MR2]]), 1),
    "P": (_arr([[_ONE, _ZERO], [_ZERO, _I]]), 0),
    "X": (_arr([[_ZERO, _ONE], [_ONE, _ZERO]]), 0),
    "Y": (_arr([[_ZERO, [0, 0, -1, 0]], [_I, _ZERO]]), 0),
    "Z": (_arr([[_ONE, _ZERO], [_ZERO, _MINUS]]), 0),
}
_CZ = (_arr([[_ONE if i == j and i < 3 else (_MINUS if i == j else _ZERO) for j in range(4)]
             for i in range(4)]), 0)
_SWAP = (_arr([[_ONE if (i, j) in {(0, 0), (1, 2), (2, 1), (3, 3)} else _ZERO for j in range(4)]
               for i in range(4)]), 0)


def _embed(n: int, blocks: list[tuple[np.ndarray, int]]) -> PhaseMatrix:
    A, s = np.array([[[1, 0, 0, 0]]], dtype=np.int64), 0
    for B, t in blocks:
        A, s = _kron(A, s, B, t)
    return PhaseMatrix(n, A, s)


def _check_qubit(i: int, n: int, limit: int | None = None) -> None:
    hi = n if limit is None else limit
    if not 1 <= i <= hi:
        raise IndexError(f"qubit index {i} out of range 1..{hi} for n={n}")


def _single(op: str, i: int, n: int) -> PhaseMatrix:
    _check_qubit(i, n)
    eye = _SINGLE["I"]
    return _embed(n, [eye] * (i - 1) + [_SINGLE[op]] + [eye] * (n - i))


@lru_cache(maxsize=None)
def gen_hadamard(i: int, n: int) -> PhaseMatrix:
    return _single("H", i, n)


@lru_cache(maxsize=None)
def gen_phase(i: int, n: int) -> PhaseMatrix:
    return _single("P", i, n)


@lru_cache(maxsize=None)
def gen_pauli(axis: str, i: int, n: int) -> PhaseMatrix:
    axis = axis.upper()
    if axis not in ("X", "Y", "Z"):
        raise ValueError(f"unknown Pauli axis {axis!r}")
    return _single(axis, i, n)


def _two(block, j: int, n: int) -> PhaseMatrix:
    _check_qubit(j, n, n - 1)
    eye = _SINGLE["I"]
    return _embed(n, [eye] * (j - 1) + [block] + [eye] * (n - j - 1))


@lru_cache(maxsize=None)
def gen_cz(j: int, n: int) -> PhaseMatrix:
    """Controlled-Z on qubits j, j+1."""
    return _two(_CZ, j, n)


@lru_cache(maxsize=None)
def gen_swap(j: int, n: int) -> PhaseMatrix:
    return _two(_SWAP, j, n)


@lru_cache(maxsize=None)
def identity(n: int) -> PhaseMatrix:
    d = 2**n
    A = np.zeros((d, d, 4), dtype=np.int64)
    A[np.arange(d), np.arange(d), 0] = 1
    return PhaseMatrix(n, A, 0)


def clifford_generators(n: int) -> list[tuple[str, PhaseMatrix]]:
    """The standard generating set h1..hn, p1..pn, z1..z(n-1)."""
    gens = [(f"h{i}", gen_hadamard(i, n)) for i in range(1, n + 1)]
    gens += [(f"p{i}", gen_phase(i, n)) for i in range(1, n + 1)]
    gens += [(f"z{j}", gen_cz(j, n)) for j in range(1, n)]
    return gens


# -- words -----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))(?:\^(-?\d+))?|([a-z]+)(\d*)(?:\^(-?\d+))?|(\*))", re.IGNORECASE)


def parse_word(text: Union[str, Iterable]) -> Word:
    """Parse 'h1 p1^-1 (z1 h2 h1)^3' into ((name, exponent), ...).

    Parenthesised groups are expanded.  'e' and the empty string denote the identity.
    """
    if not isinstance(text, str):
        return tuple((str(a).lower(), int(b)) for a, b in text)
    stack: list[list[tuple[str, int]]] = [[]]
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {s[pos]!r} in word {text!r}")
        pos = m.end()
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) == 1:
                raise ValueError(f"unbalanced ')' in word {text!r}")
            inner = stack.pop()
            k = int(m.group(3)) if m.group(3) else 1
            stack[-1].extend(inner * k if k >= 0 else list(invert_word(tuple(inner))) * (-k))
        elif m.group(4):
            name = (m.group(4) + m.group(5)).lower()
            k = int(m.group(6)) if m.group(6) else 1
            if name == "e":
                continue
            if not re.fullmatch(r"[hpzxy]\d+", name):
                raise ValueError(f"unknown generator token {name!r} in word {text!r}")
            stack[-1].append((name, k))
    if len(stack) != 1:
        raise ValueError(f"unbalanced '(' in word {text!r}")
    return tuple(stack[0])


def format_word(word: Word) -> str:
    return " ".join(name if k == 1 else f"{name}^{k}" for name, k in word)


def invert_word(word: Word) -> Word:
    return tuple((name, -k) for name, k in reversed(word))


def _generator(name: str, n: int) -> PhaseMatrix:
    kind, idx = name[0], int(name[1:])
    if kind == "h":
        return gen_hadamard(idx, n)
    if kind == "p":
        return gen_phase(idx, n)
    if kind == "z":
        return gen_cz(idx, n)
    if kind in "xy":
        return gen_pauli(kind, idx, n)
    raise ValueError(f"unknown generator {name!r}")


def evaluate_word(word, n: int) -> PhaseMatrix:
    """Left-to-right product of the generator matrices named in ``word``."""
    result = identity(n)
    for name, k in parse_word(word):
        result = result * (_generator(name, n) ** k)
    return result


# -- enumeration -------------------------------------------------------------------

class GroupTable:
    """A fully enumerated matrix group (modulo phase).

    Element 0 is the identity; elements are numbered breadth-first by word
    length in the generators, ties ordered by canonical entries.
    """

    def __init__(self, n, A, s, keys, generators, parent, parent_gen, right):
        self.n = n
        self._A = A
        self._s = s
        self.keys = keys
        self.index = {k: i for i, k in enumerate(keys)}
        self.generators = generators  # list of (name, element id)
        self.parent = parent
        self.parent_gen = parent_gen
        self._right = right  # generator position -> array of ids of x*g
        self._orders = None
        self._inverse = None
        self._elements = None

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def order(self) -> int:
        return len(self.keys)

    @property
    def elements(self) -> list[PhaseMatrix]:
        if self._elements is None:
            self._elements = [PhaseMatrix(self.n, self._A[i], int(self._s[i]), canonical=True)
                              for i in range(len(self))]
        return self._elements

    def element(self, i: int) -> PhaseMatrix:
        return PhaseMatrix(self.n, self._A[i], int(self._s[i]), canonical=True)

    def lookup(self, m: PhaseMatrix) -> int:
        try:
            return self.index[m.key]
        except KeyError:
            raise KeyError("matrix is not an element of this group") from None

    def lookup_word(self, word) -> int:
        return self.lookup(evaluate_word(word, self.n))

    def word(self, i: int) -> Word:
        """A shortest word in the generators for element i (from BFS parents)."""
        names = [name for name, _ in self.generators]
        letters = []
        while i != 0:
            letters.append(names[self.parent_gen[i]])
            i = self.parent[i]
        out: list[tuple[str, int]] = []
        for name in reversed(letters):
            if out and out[-1][0] == name:
                out[-1] = (name, out[-1][1] + 1)
            else:
                out.append((name, 1))
        return tuple(out)

    def _lookup_batch(self, A, s) -> np.ndarray:
        idx = self.index
        try:
            return np.array([idx[k] for k in _keys(A, s)], dtype=np.int64)
        except KeyError:
            raise KeyError("product left the enumerated group") from None

    def mul(self, i: int, j: int) -> int:
        A, s = _batch_mul(self._A[i:i + 1], self._s[i:i + 1], self._A[j], self._s[j:j + 1])
        return self.index[_key(A[0], s[0])]

    def mul_right(self, ids: np.ndarray, j: int) -> np.ndarray:
        """ids of x * g_j for every x in ids."""
        ids = np.asarray(ids, dtype=np.int64)
        out = np.empty(len(ids), dtype=np.int64)
        for lo in range(0, len(ids), 8192):
            chunk = ids[lo:lo + 8192]
            A, s = _batch_mul(self._A[chunk], self._s[chunk], self._A[j], self._s[j:j + 1])
            out[lo:lo + 8192] = self._lookup_batch(A, s)
        return out

    def mul_left(self, j: int, ids: np.ndarray) -> np.ndarray:
        """ids of g_j * x, computed as (x^T g_j^T)^T."""
        ids = np.asarray(ids, dtype=np.int64)
        gT = np.ascontiguousarray(np.swapaxes(self._A[j], 0, 1))
        out = np.empty(len(ids), dtype=np.int64)
        for lo in range(0, len(ids), 8192):
            chunk = ids[lo:lo + 8192]
            XT = np.ascontiguousarray(np.swapaxes(self._A[chunk], 1, 2))
            A, s = _batch_mul(XT, self._s[chunk], gT, self._s[j:j + 1])
            A, s = _normalize(np.ascontiguousarray(np.swapaxes(A, 1, 2)), s)
            out[lo:lo + 8192] = self._lookup_batch(A, s)
        return out

    def power(self, i: int, m: int) -> int:
        return self.lookup(self.element(i) ** m)

    @property
    def inverses(self) -> np.ndarray:
        if self._inverse is None:
            A, s = _batch_conj_transpose(self._A, self._s)
            self._inverse = self._lookup_batch(A, s)
        return self._inverse

    def right_action(self, gen_pos: int) -> np.ndarray:
        return self._right[gen_pos]

    def left_action(self, gen_pos: int) -> np.ndarray:
        gid = self.generators[gen_pos][1]
        return self.mul_left(gid, np.arange(len(self)))

    @property
    def orders(self) -> np.ndarray:
        """Multiplicative order (mod phase) of every element."""
        if self._orders is None:
            N = len(self)
            orders = np.zeros(N, dtype=np.int64)
            id_key = self.keys[0]
            for lo in range(0, N, 4096):
                X, sx = self._A[lo:lo + 4096], self._s[lo:lo + 4096]
                bigX = _big(X)
                P, sp = X.copy(), sx.copy()
                todo = np.arange(len(X))
                o = np.zeros(len(X), dtype=np.int64)
                for k in range(1, MAX_ELEMENT_ORDER + 1):
                    done = np.array([_key(P[t], sp[t]) == id_key for t in range(len(todo))], dtype=bool)
                    o[todo[done]] = k
                    keep = ~done
                    todo, P, sp = todo[keep], P[keep], sp[keep]
                    if not len(todo):
                        break
                    d = P.shape[1]
                    C = (P.reshape(len(todo), d, 4 * d) @ bigX[todo]).reshape(P.shape)
                    P, sp = _normalize(C, sp + sx[todo])
                if len(todo):
                    raise RuntimeError(
                        f"element order exceeds the bound {MAX_ELEMENT_ORDER}; raise MAX_ELEMENT_ORDER")
                orders[lo:lo + len(X)] = o
            self._orders = orders
        return self._orders

    @property
    def exponent(self) -> int:
        return int(np.lcm.reduce(np.unique(self.orders)))


def bfs_closure(generators, element_cap: int = DEFAULT_CAP, names: Sequence[str] | None = None) -> GroupTable:
    """Enumerate the group generated by ``generators`` (PhaseMatrix list or (name, matrix) pairs)."""
    gens = list(generators)
    if gens and isinstance(gens[0], tuple):
        names = [nm for nm, _ in gens]
        gens = [g for _, g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    if names is None:
        names = [f"g{i}" for i in range(len(gens))]
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators act on different numbers of qubits")
    e = identity(n)
    A_list = [e._A[None]]
    s_list = [np.array([0], dtype=np.int64)]
    keys = [e.key]
    index = {e.key: 0}
    parent, parent_gen = [-1], [-1]
    right: list[list[tuple[int, int]]] = [[] for _ in gens]
    frontier = np.array([0])
    FA, Fs = A_list[0], s_list[0]
    total = 1
    while len(frontier):
        new_keys: dict[bytes, int] = {}
        new_A, new_s, new_parent, new_gen = [], [], [], []
        pending: list[tuple[int, int, bytes]] = []
        for gi, g in enumerate(gens):
            P, sp = _batch_mul(FA, Fs, g._A, np.array([g._s]))
            for t, k in enumerate(_keys(P, sp)):
                pending.append((gi, int(frontier[t]), k))
                if k not in index and k not in new_keys:
                    new_keys[k] = len(new_A)
                    new_A.append(P[t])
                    new_s.append(sp[t])
                    new_parent.append(int(frontier[t]))
                    new_gen.append(gi)
        if total + len(new_A) > element_cap:
            raise EnumerationCapExceeded(
                f"group enumeration exceeded element_cap={element_cap}; "
                "increase the cap (unsupported for full 3-qubit enumeration)")
        if new_A:
            NA = np.stack(new_A)
            Ns = np.array(new_s, dtype=np.int64)
            smax = int(Ns.max())
            scaled = NA.reshape(len(NA), -1) << (smax - Ns)[:, None]
            order = np.lexsort(scaled.T[::-1])
            for rank, old in enumerate(order):
                gid = total + rank
                k = _key(NA[old], Ns[old])
                index[k] = gid
                keys.append(k)
                parent.append(new_parent[old])
                parent_gen.append(new_gen[old])
            A_list.append(NA[order])
            s_list.append(Ns[order])
            frontier = np.arange(total, total + len(NA))
            FA, Fs = A_list[-1], s_list[-1]
            total += len(NA)
        else:
            frontier = np.array([], dtype=np.int64)
        for gi, src, k in pending:
            right[gi].append((src, index[k]))
    A = np.concatenate(A_list)
    s = np.concatenate(s_list)
    right_arrays = []
    for lst in right:
        arr = np.empty(total, dtype=np.int64)
        for src, dst in lst:
            arr[src] = dst
        right_arrays.append(arr)
    gen_ids = [(nm, index[g.key]) for nm, g in zip(names, gens)]
    return GroupTable(n, A, s, keys, gen_ids, np.array(parent), np.array(parent_gen), right_arrays)


def group_order_formula(n: int) -> int:
    """|C_n| = 2^(n^2 + 2n) * prod_{j=1..n} (4^j - 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 ** (n * n + 2 * n) * prod(4**j - 1 for j in range(1, n + 1))


@lru_cache(maxsize=4)
def clifford_group(n: int, element_cap: int = DEFAULT_CAP) -> GroupTable:
    """Enumerate C_n from its standard generators (refused when |C_n| > element_cap)."""
    expected = group_order_formula(n)
    if expected > element_cap:
        raise EnumerationCapExceeded(
            f"|C_{n}| = {expected} exceeds element_cap={element_cap}; "
            "full enumeration is out of reach, use the embedded-table workflow instead")
    table = bfs_closure(clifford_generators(n), element_cap)
    if len(table) != expected:
        raise RuntimeError(f"enumerated {len(table)} elements, expected {expected}")
    return table
