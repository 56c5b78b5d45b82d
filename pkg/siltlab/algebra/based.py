"""Finite-dimensional algebras with a fixed set of primitive idempotents.

A :class:`BasedAlgebra` is stored presentation-free as Peirce blocks. Block
``(i, j)`` (0-based) holds a basis of ``e_i A e_j``; in diagonal blocks basis
index 0 is the idempotent ``e_i`` and every other basis element lies in the
radical. Multiplication ``e_i A e_j x e_j A e_k -> e_i A e_k`` is the tensor
``tensors[(i, j, k)]`` of shape ``(d_ij, d_jk, d_ik)``.

Projectives are right modules ``P_i = e_i A`` so ``Hom(P_i, P_j) = e_j A e_i``
and composing ``g o f`` is the product ``g * f``. Public helpers taking vertex
sets use the 1-based labels of presentations.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np
import numpy.typing as npt

from siltlab.algebra.field import FMatrix, kernel_basis, rref
from siltlab.algebra.quiver import Arrow, Quiver, Relation
from siltlab.errors import NotCentral, NotInRadical, SiltlabError

Block = tuple[int, int]
Triple = tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class BasedAlgebra:
    """An algebra given by Peirce blocks and block structure constants."""

    p: int
    n: int
    labels: Mapping[Block, tuple[str, ...]]
    tensors: Mapping[Triple, FMatrix]
    arrows: Mapping[str, tuple[int, int, FMatrix]] = field(default_factory=dict)
    name: str = ""
    quiver: Quiver | None = None
    relations: tuple[Relation, ...] = ()

    def __post_init__(self) -> None:
        for i, j in product(range(self.n), repeat=2):
            if (i, j) not in self.labels:
                raise SiltlabError(f"Missing Peirce block ({i}, {j})")
            if i == j and self.dim(i, i) < 1:
                raise SiltlabError(f"Block ({i}, {i}) must contain the idempotent")
        for i, j, k in product(range(self.n), repeat=3):
            shape = (self.dim(i, j), self.dim(j, k), self.dim(i, k))
            got = self.tensors[(i, j, k)].shape
            if got != shape:
                raise SiltlabError(
                    f"Tensor ({i}, {j}, {k}) has shape {got}, expected {shape}"
                )

    # -- dimensions -----------------------------------------------------

    def dim(self, i: int, j: int) -> int:
        return len(self.labels[(i, j)])

    @cached_property
    def dimension(self) -> int:
        return sum(len(v) for v in self.labels.values())

    @cached_property
    def offsets(self) -> dict[Block, int]:
        """Start of each block inside a flat element vector."""
        out: dict[Block, int] = {}
        pos = 0
        for i, j in product(range(self.n), repeat=2):
            out[(i, j)] = pos
            pos += self.dim(i, j)
        return out

    def cartan_matrix(self) -> FMatrix:
        """Entry ``(i, j)`` is ``dim e_i A e_j``: ``[P_i : S_j]``."""
        return np.array(
            [[self.dim(i, j) for j in range(self.n)] for i in range(self.n)],
            dtype=np.int64,
        )

    # -- elements -------------------------------------------------------

    def zero(self) -> FMatrix:
        return np.zeros(self.dimension, dtype=np.int64)

    def block(self, x: npt.ArrayLike, i: int, j: int) -> FMatrix:
        start = self.offsets[(i, j)]
        return np.asarray(x, dtype=np.int64)[start : start + self.dim(i, j)]

    def embed(self, i: int, j: int, coords: npt.ArrayLike) -> FMatrix:
        """Flat element with the given coordinates in block ``(i, j)``."""
        x = self.zero()
        start = self.offsets[(i, j)]
        x[start : start + self.dim(i, j)] = np.asarray(coords, dtype=np.int64) % self.p
        return x

    def idempotent(self, i: int) -> FMatrix:
        return self.embed(i, i, np.eye(self.dim(i, i), dtype=np.int64)[0])

    def unit(self) -> FMatrix:
        return sum((self.idempotent(i) for i in range(self.n)), self.zero()) % self.p

    def basis_element(self, i: int, j: int, index: int) -> FMatrix:
        return self.embed(i, j, np.eye(self.dim(i, j), dtype=np.int64)[index])

    def arrow_element(self, name: str) -> FMatrix:
        try:
            i, j, coords = self.arrows[name]
        except KeyError as exc:
            raise SiltlabError(f"Algebra {self.name!r} has no arrow {name!r}") from exc
        return self.embed(i, j, coords)

    def path_element(self, word: Sequence[str]) -> FMatrix:
        """Product of the arrows of ``word`` composed left to right."""
        if not word:
            raise SiltlabError("Empty word; use idempotent() for trivial paths")
        x = self.arrow_element(word[0])
        for name in word[1:]:
            x = self.multiply(x, self.arrow_element(name))
        return x

    def block_product(
        self, i: int, j: int, k: int, x: npt.ArrayLike, y: npt.ArrayLike
    ) -> FMatrix:
        tensor = self.tensors[(i, j, k)]
        return np.einsum("a,b,abz->z", np.asarray(x), np.asarray(y), tensor) % self.p

    def multiply(self, x: npt.ArrayLike, y: npt.ArrayLike) -> FMatrix:
        out = self.zero()
        for i, j, k in product(range(self.n), repeat=3):
            if not (self.dim(i, j) and self.dim(j, k) and self.dim(i, k)):
                continue
            xb = self.block(x, i, j)
            yb = self.block(y, j, k)
            if not xb.any() or not yb.any():
                continue
            start = self.offsets[(i, k)]
            out[start : start + self.dim(i, k)] += self.block_product(i, j, k, xb, yb)
        return out % self.p

    def left_operator(self, i: int, j: int, k: int, x: npt.ArrayLike) -> FMatrix:
        """``y -> x * y`` from ``e_j A e_k`` to ``e_i A e_k``; ``x`` in block (i, j)."""
        return np.einsum("a,abz->zb", np.asarray(x), self.tensors[(i, j, k)]) % self.p

    def right_operator(self, i: int, j: int, k: int, y: npt.ArrayLike) -> FMatrix:
        """``x -> x * y`` from ``e_i A e_j`` to ``e_i A e_k``; ``y`` in block (j, k)."""
        return np.einsum("b,abz->za", np.asarray(y), self.tensors[(i, j, k)]) % self.p

    def is_radical(self, x: npt.ArrayLike) -> bool:
        return all(int(self.block(x, i, i)[0]) % self.p == 0 for i in range(self.n))

    def radical_basis(self, i: int, j: int) -> FMatrix:
        """Rows spanning ``rad A`` inside block ``(i, j)``."""
        eye = np.eye(self.dim(i, j), dtype=np.int64)
        return eye[1:] if i == j else eye

    def format_element(self, x: npt.ArrayLike) -> str:
        terms: list[str] = []
        for (i, j), names in self.labels.items():
            for coeff, label in zip(self.block(x, i, j), names):
                c = int(coeff) % self.p
                if c:
                    terms.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(terms) or "0"

    # -- structural checks ----------------------------------------------

    def check_unit(self) -> bool:
        """Idempotents act as two-sided identities on every block."""
        for i, j in product(range(self.n), repeat=2):
            eye = np.eye(self.dim(i, j), dtype=np.int64)
            if not np.array_equal(self.tensors[(i, i, j)][0] % self.p, eye):
                return False
            if not np.array_equal(self.tensors[(i, j, j)][:, 0, :] % self.p, eye):
                return False
        return True

    def check_associative(self) -> bool:
        """Exhaustive ``(xy)z == x(yz)`` on all basis triples."""
        for i, j, k, q in product(range(self.n), repeat=4):
            left = np.einsum(
                "abz,zcw->abcw", self.tensors[(i, j, k)], self.tensors[(i, k, q)]
            )
            right = np.einsum(
                "bcy,ayw->abcw", self.tensors[(j, k, q)], self.tensors[(i, j, q)]
            )
            if not np.array_equal(left % self.p, right % self.p):
                return False
        return True

    def radical_power(self, k: int) -> dict[Block, FMatrix]:
        """Row bases of ``rad^k A`` per block."""
        if k < 1:
            raise ValueError("Radical power needs k >= 1")
        current = {
            (i, j): self.radical_basis(i, j)
            for i, j in product(range(self.n), repeat=2)
        }
        for _ in range(k - 1):
            nxt: dict[Block, FMatrix] = {}
            for i, q in product(range(self.n), repeat=2):
                rows = []
                for j in range(self.n):
                    left = current[(i, j)]
                    right = self.radical_basis(j, q)
                    if left.shape[0] == 0 or right.shape[0] == 0 or self.dim(i, q) == 0:
                        continue
                    prods = np.einsum(
                        "ra,sb,abz->rsz", left, right, self.tensors[(i, j, q)]
                    ).reshape(-1, self.dim(i, q))
                    rows.append(prods % self.p)
                nxt[(i, q)] = _row_basis(rows, self.dim(i, q), self.p)
            current = nxt
        return current

    def radical_power_zero(self, k: int) -> bool:
        return all(v.shape[0] == 0 for v in self.radical_power(k).values())

    def loewy_length(self) -> int:
        k = 1
        while not self.radical_power_zero(k):
            k += 1
        return k

    def is_central(self, x: npt.ArrayLike) -> bool:
        for (i, j), names in self.labels.items():
            for a in range(len(names)):
                b = self.basis_element(i, j, a)
                if not np.array_equal(self.multiply(x, b), self.multiply(b, x)):
                    return False
        return True


def _row_basis(chunks: list[FMatrix], cols: int, p: int) -> FMatrix:
    if not chunks:
        return np.zeros((0, cols), dtype=np.int64)
    red = rref(np.concatenate(chunks, axis=0), p)
    return red.matrix[: red.rank]


def cartan_matrix(algebra: BasedAlgebra) -> FMatrix:
    return algebra.cartan_matrix()


def is_central(algebra: BasedAlgebra, x: npt.ArrayLike) -> bool:
    return algebra.is_central(x)


def radical_power_zero(algebra: BasedAlgebra, k: int) -> bool:
    return algebra.radical_power_zero(k)


def reduce_blocks(
    algebra: BasedAlgebra,
    kernels: Mapping[Block, npt.ArrayLike],
    name: str | None = None,
) -> BasedAlgebra:
    """Pass to the algebra spanned by coset representatives of ``kernels``.

    ``kernels[(i, j)]`` holds rows spanning the subspace of block ``(i, j)``
    to discard (missing blocks keep everything). Products of a discarded
    element with any surviving basis element must land in the discarded
    span; this holds for two-sided ideals and for the upper triangular
    construction of the sign decomposition.
    """
    p = algebra.p
    keep: dict[Block, list[int]] = {}
    reduction: dict[Block, FMatrix] = {}
    for i, j in product(range(algebra.n), repeat=2):
        d = algebra.dim(i, j)
        raw = kernels.get((i, j))
        red = None
        if d and raw is not None:
            rows = np.asarray(raw, dtype=np.int64).reshape(-1, d)
            if rows.shape[0]:
                red = rref(rows, p)
        pivots = set(red.pivots) if red else set()
        kept = [c for c in range(d) if c not in pivots]
        mat = np.zeros((d, len(kept)), dtype=np.int64)
        for t, c in enumerate(kept):
            mat[c, t] = 1
        if red is not None:
            for r, c in enumerate(red.pivots):
                mat[c] = (-red.matrix[r, kept]) % p
        keep[(i, j)] = kept
        reduction[(i, j)] = mat

    labels = {
        blk: tuple(algebra.labels[blk][c] for c in keep[blk]) for blk in keep
    }
    tensors: dict[Triple, FMatrix] = {}
    for i, j, k in product(range(algebra.n), repeat=3):
        sub = algebra.tensors[(i, j, k)][np.ix_(keep[(i, j)], keep[(j, k)])]
        tensors[(i, j, k)] = (
            np.einsum("abz,zc->abc", sub, reduction[(i, k)]) % p
        ).astype(np.int64)
    arrows = {
        arrow: (i, j, (coords @ reduction[(i, j)]) % p)
        for arrow, (i, j, coords) in algebra.arrows.items()
    }
    arrows = {a: v for a, v in arrows.items() if v[2].any()}
    return BasedAlgebra(
        p=p,
        n=algebra.n,
        labels=labels,
        tensors=tensors,
        arrows=arrows,
        name=name if name is not None else algebra.name,
    )


def _as_element(
    algebra: BasedAlgebra, gen: npt.ArrayLike | Sequence[str]
) -> tuple[FMatrix, str]:
    if isinstance(gen, (list, tuple)) and gen and all(isinstance(g, str) for g in gen):
        word = [str(g) for g in gen]
        return algebra.path_element(word), "*".join(word)
    x = np.asarray(gen, dtype=np.int64) % algebra.p
    return x, algebra.format_element(x)


def quotient_central(
    algebra: BasedAlgebra,
    gens: Iterable[npt.ArrayLike | Sequence[str]],
    name: str | None = None,
) -> BasedAlgebra:
    """Quotient by the ideal generated by central radical elements.

    Generators are flat element vectors or arrow words. For central ``g`` the
    ideal ``AgA`` equals ``gA``, so its Peirce blocks are spanned by the
    blocks of ``g * b`` over basis elements ``b``.
    """
    chunks: dict[Block, list[FMatrix]] = {}
    for gen in gens:
        x, label = _as_element(algebra, gen)
        if not algebra.is_radical(x):
            raise NotInRadical(label)
        if not algebra.is_central(x):
            raise NotCentral(label)
        for (j, k), names in algebra.labels.items():
            for b in range(len(names)):
                prod_ = algebra.multiply(x, algebra.basis_element(j, k, b))
                for i in range(algebra.n):
                    part = algebra.block(prod_, i, k)
                    if part.any():
                        chunks.setdefault((i, k), []).append(part.reshape(1, -1))
    kernels = {
        blk: np.concatenate(rows, axis=0) for blk, rows in chunks.items()
    }
    return reduce_blocks(algebra, kernels, name=name)


def idempotent_truncation(
    algebra: BasedAlgebra, vertices: Iterable[int], name: str | None = None
) -> BasedAlgebra:
    """``eAe`` for ``e`` the sum of the idempotents at the given 1-based vertices."""
    chosen = sorted({v - 1 for v in vertices})
    if not chosen:
        raise SiltlabError("Idempotent truncation needs a nonempty vertex set")
    for v in chosen:
        if not 0 <= v < algebra.n:
            raise SiltlabError(f"Vertex {v + 1} outside 1..{algebra.n}")
    index = {old: new for new, old in enumerate(chosen)}
    picked = ",".join(str(v + 1) for v in chosen)
    labels = {
        (index[i], index[j]): algebra.labels[(i, j)]
        for i, j in product(chosen, repeat=2)
    }
    tensors = {
        (index[i], index[j], index[k]): algebra.tensors[(i, j, k)]
        for i, j, k in product(chosen, repeat=3)
    }
    arrows = {
        a: (index[i], index[j], coords)
        for a, (i, j, coords) in algebra.arrows.items()
        if i in index and j in index
    }
    return BasedAlgebra(
        p=algebra.p,
        n=len(chosen),
        labels=labels,
        tensors=tensors,
        arrows=arrows,
        name=name if name is not None else f"{algebra.name}[{picked}]",
    )


def opposite(algebra: BasedAlgebra) -> BasedAlgebra:
    """Same basis, reversed multiplication; block ``(i, j)`` becomes ``(j, i)``."""
    n = algebra.n
    labels = {(i, j): algebra.labels[(j, i)] for i, j in product(range(n), repeat=2)}
    tensors = {
        (i, j, k): np.ascontiguousarray(algebra.tensors[(k, j, i)].transpose(1, 0, 2))
        for i, j, k in product(range(n), repeat=3)
    }
    arrows = {a: (j, i, coords) for a, (i, j, coords) in algebra.arrows.items()}
    quiver = None
    relations: tuple[Relation, ...] = ()
    if algebra.quiver is not None:
        quiver = Quiver(
            algebra.quiver.n,
            tuple(
                Arrow(a.name, a.target, a.source) for a in algebra.quiver.arrows
            ),
            labels=algebra.quiver.labels,
        )
        relations = tuple(
            Relation(tuple((c, tuple(reversed(w))) for c, w in rel.terms))
            for rel in algebra.relations
        )
    return BasedAlgebra(
        p=algebra.p,
        n=n,
        labels=labels,
        tensors=tensors,
        arrows=arrows,
        name=f"{algebra.name}^op" if algebra.name else "",
        quiver=quiver,
        relations=relations,
    )


def semisimple(n: int, p: int, name: str = "") -> BasedAlgebra:
    """The product of ``n`` copies of the field."""
    labels: dict[Block, tuple[str, ...]] = {}
    for i, j in product(range(n), repeat=2):
        labels[(i, j)] = (f"e{i + 1}",) if i == j else ()
    tensors: dict[Triple, FMatrix] = {}
    for i, j, k in product(range(n), repeat=3):
        shape = (len(labels[(i, j)]), len(labels[(j, k)]), len(labels[(i, k)]))
        tensors[(i, j, k)] = np.ones(shape, dtype=np.int64)
    return BasedAlgebra(p=p, n=n, labels=labels, tensors=tensors, name=name)


def null_space_rows(matrix: FMatrix, p: int) -> FMatrix:
    """Rows ``x`` with ``x @ matrix == 0``."""
    return kernel_basis(matrix.T, p, cols=matrix.shape[0])
