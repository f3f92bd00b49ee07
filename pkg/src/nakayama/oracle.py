"""Brute-force matrix oracle over a small prime field.

Realizes modules as quiver representations and answers hom, Ext^1,
injectivity and AR-translate questions by Gaussian elimination mod p,
independently of the combinatorial engine.  The point is cross-checking:
the only shared ingredients are the Kupisch lengths and the vertex-shift
convention, never the counting formulas being tested.

Everything here is exact integer arithmetic; p = 2 by default and the
answers must not depend on p (monomial relations), which the tests check.
"""

from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from .core import KupischSeries
from .errors import DimensionCapExceeded, InternalInconsistency
from .modules import IntervalModule, ModuleSum, _as_sum, indecomposables

__all__ = [
    "MatrixRep",
    "realize",
    "oracle_hom_dim",
    "oracle_ext1_dim",
    "oracle_is_injective",
    "oracle_socle_vector",
    "oracle_tau",
]

DEFAULT_DIM_CAP = 128
DEFAULT_COMBO_CAP = 4096


def _check_prime(p: int):
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"field order must be prime, got {p}")


# -- linear algebra mod p ----------------------------------------------------


def _rref(mat: np.ndarray, p: int):
    """Row-reduce mod p; returns (reduced matrix, pivot column list)."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        lead = r + int(hits[0])
        if lead != r:
            m[[r, lead]] = m[[lead, r]]
        m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p
        other = np.nonzero(m[:, c])[0]
        for rr in other:
            if rr != r:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def _rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(_rref(mat, p)[1])


def _nullspace(mat: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of the right kernel, one vector per free column."""
    rows, cols = mat.shape
    if cols == 0:
        return []
    if rows == 0:
        return [v for v in np.eye(cols, dtype=np.int64)]
    red, pivots = _rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = np.zeros(cols, dtype=np.int64)
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-red[r, fc]) % p
        basis.append(vec)
    return basis


# -- representations ---------------------------------------------------------


class MatrixRep:
    """A finite-dimensional representation of the algebra's quiver.

    dims[w-1] is the dimension at vertex w; maps[u] is the action of the
    arrow out of u (toward shift(u, 1)) as a (target x source) matrix.
    basis[w-1] records, per vertex, which (summand, position) pair each
    local coordinate came from.
    """

    def __init__(self, alg: KupischSeries, p: int):
        self.alg = alg
        self.p = p
        v = alg.num_vertices
        self.basis: list[list[tuple[int, int]]] = [[] for _ in range(v)]
        self.dims = [0] * v
        self.maps: dict[int, np.ndarray] = {}

    def arrow_sources(self) -> list[int]:
        v = self.alg.num_vertices
        return list(range(1, v + 1)) if self.alg.cyclic else list(range(1, v))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def realize(
    alg: KupischSeries, m, p: int = 2, dim_cap: int = DEFAULT_DIM_CAP
) -> MatrixRep:
    """Matrix realization of a module: one basis vector per composition
    factor, arrows shifting basis vectors one step toward the socle, so
    every length-c_i path from i acts as zero."""
    _check_prime(p)
    msum = _as_sum(m)
    if msum.dim > dim_cap:
        raise DimensionCapExceeded(
            f"module dimension {msum.dim} exceeds cap {dim_cap}"
        )
    rep = MatrixRep(alg, p)
    for s_idx, piece in enumerate(msum):
        for r in range(piece.length):
            w = alg.shift(piece.start, r)
            rep.basis[w - 1].append((s_idx, r))
            rep.dims[w - 1] += 1
    index = {}
    for w0, items in enumerate(rep.basis):
        for loc, item in enumerate(items):
            index[item] = (w0, loc)
    lengths = [piece.length for piece in msum]
    for u in rep.arrow_sources():
        t = alg.shift(u, 1)
        mat = np.zeros((rep.dims[t - 1], rep.dims[u - 1]), dtype=np.int64)
        for loc, (s_idx, r) in enumerate(rep.basis[u - 1]):
            if r + 1 < lengths[s_idx]:
                _, tloc = index[(s_idx, r + 1)]
                mat[tloc, loc] = 1
        rep.maps[u] = mat
    return rep


def _hom_system(x: MatrixRep, y: MatrixRep) -> tuple[np.ndarray, list[int], int]:
    """Linear system for intertwiners f: x -> y.

    Unknowns are the entries of the per-vertex blocks f_w, stacked in
    vertex order (row-major per block).  Returns (system, offsets, nvars).
    """
    v = x.alg.num_vertices
    offs = [0] * (v + 1)
    for w in range(v):
        offs[w + 1] = offs[w] + y.dims[w] * x.dims[w]
    nvars = offs[v]
    rows = []
    for u in x.arrow_sources():
        t = x.alg.shift(u, 1)
        ax, ay = x.maps[u], y.maps[u]
        du, dt = u - 1, t - 1
        # f_t @ ax == ay @ f_u, entrywise over (a, b)
        for a in range(y.dims[dt]):
            for b in range(x.dims[du]):
                row = np.zeros(nvars, dtype=np.int64)
                for c in range(x.dims[dt]):
                    if ax[c, b]:
                        row[offs[dt] + a * x.dims[dt] + c] += ax[c, b]
                for c in range(y.dims[du]):
                    if ay[a, c]:
                        row[offs[du] + c * x.dims[du] + b] -= ay[a, c]
                if row.any():
                    rows.append(row)
    system = (
        np.array(rows, dtype=np.int64)
        if rows
        else np.zeros((0, nvars), dtype=np.int64)
    )
    return system, offs, nvars


def _unvec(vec: np.ndarray, x: MatrixRep, y: MatrixRep, offs) -> list[np.ndarray]:
    blocks = []
    for w in range(x.alg.num_vertices):
        block = vec[offs[w] : offs[w + 1]].reshape(y.dims[w], x.dims[w])
        blocks.append(block % x.p)
    return blocks


def _vec(blocks: Iterable[np.ndarray]) -> np.ndarray:
    flat = [b.reshape(-1) for b in blocks]
    return np.concatenate(flat) if flat else np.zeros(0, dtype=np.int64)


def _hom_basis(x: MatrixRep, y: MatrixRep) -> list[list[np.ndarray]]:
    system, offs, nvars = _hom_system(x, y)
    if nvars == 0:
        return []
    return [_unvec(vec, x, y, offs) for vec in _nullspace(system, x.p)]


def oracle_hom_dim(
    alg: KupischSeries, x, y, p: int = 2, dim_cap: int = DEFAULT_DIM_CAP
) -> int:
    """dim Hom(x, y) as the nullity of the intertwiner system."""
    xr = realize(alg, x, p, dim_cap)
    yr = realize(alg, y, p, dim_cap)
    system, _, nvars = _hom_system(xr, yr)
    return nvars - _rank(system, p)


def _presentation_kernel(alg, x: IntervalModule, p, dim_cap):
    """The kernel of the cover P(x) ->> x, as a subrepresentation.

    In the realization of P_{start}, the cover kills basis positions
    0..l-1, so the kernel is spanned by the tail positions l..c-1; the
    arrow action restricts to the tail.  Returns (kernel rep, inclusion
    blocks into P(x), P(x) rep)."""
    c = alg.loewy_length(x.start)
    cover = realize(alg, IntervalModule(x.start, c), p, dim_cap)
    v = alg.num_vertices
    kernel = MatrixRep(alg, p)
    keep: list[list[int]] = [[] for _ in range(v)]
    for w0 in range(v):
        for loc, (_, r) in enumerate(cover.basis[w0]):
            if r >= x.length:
                keep[w0].append(loc)
                kernel.basis[w0].append((0, r - x.length))
                kernel.dims[w0] += 1
    inclusion = []
    for w0 in range(v):
        blk = np.zeros((cover.dims[w0], kernel.dims[w0]), dtype=np.int64)
        for kloc, ploc in enumerate(keep[w0]):
            blk[ploc, kloc] = 1
        inclusion.append(blk)
    for u in kernel.arrow_sources():
        t = alg.shift(u, 1)
        full = cover.maps[u]
        rows = keep[t - 1]
        cols = keep[u - 1]
        kernel.maps[u] = full[np.ix_(rows, cols)] if rows and cols else np.zeros(
            (len(rows), len(cols)), dtype=np.int64
        )
    return kernel, inclusion, cover


def oracle_ext1_dim(
    alg: KupischSeries,
    x: IntervalModule,
    y,
    p: int = 2,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> int:
    """dim Ext^1(x, y) = dim coker(Hom(P(x), y) -> Hom(K, y)) where
    0 -> K -> P(x) -> x -> 0 is the explicit minimal presentation."""
    _check_prime(p)
    kernel, inclusion, cover = _presentation_kernel(alg, x, p, dim_cap)
    yr = realize(alg, y, p, dim_cap)
    ksys, koffs, knvars = _hom_system(kernel, yr)
    dim_hom_k = knvars - _rank(ksys, p)
    if dim_hom_k == 0:
        return 0
    rows = []
    for g in _hom_basis(cover, yr):
        comp = [g[w] @ inclusion[w] % p for w in range(alg.num_vertices)]
        rows.append(_vec(comp))
    if not rows:
        return dim_hom_k
    return dim_hom_k - _rank(np.array(rows, dtype=np.int64), p)


def _col_space_sig(block: np.ndarray, p: int) -> bytes:
    red, pivots = _rref(block.T, p)
    return red[: len(pivots)].tobytes()


def _is_mono(blocks, x: MatrixRep, p: int) -> bool:
    for w0 in range(x.alg.num_vertices):
        if x.dims[w0] and _rank(blocks[w0], p) < x.dims[w0]:
            return False
    return True


def oracle_is_injective(
    alg: KupischSeries,
    m: IntervalModule,
    p: int = 2,
    dim_cap: int = DEFAULT_DIM_CAP,
    combo_cap: int = DEFAULT_COMBO_CAP,
) -> bool:
    """Test injectivity by the lifting property: for every inclusion
    between indecomposables, every map into m must extend.  Inclusions
    with the same image give the same lifting problem, so they are
    deduplicated by image subspace."""
    _check_prime(p)
    mr = realize(alg, m, p, dim_cap)
    reps = {w: realize(alg, w, p, dim_cap) for w in indecomposables(alg)}
    hom_into_m = {w: _hom_basis(reps[w], mr) for w in reps}
    for xmod, xr in reps.items():
        target = hom_into_m[xmod]
        if not target:
            continue  # nothing to lift
        target_dim = len(target)
        for ymod, yr in reps.items():
            if any(xr.dims[w] > yr.dims[w] for w in range(alg.num_vertices)):
                continue  # no chance of a mono
            hb = _hom_basis(xr, yr)
            h = len(hb)
            if h == 0:
                continue
            if p**h - 1 > combo_cap:
                raise DimensionCapExceeded(
                    f"{p}^{h} hom-space elements exceed cap {combo_cap}"
                )
            seen = set()
            lifts = hom_into_m[ymod]
            for coeffs in itertools.product(range(p), repeat=h):
                if not any(coeffs):
                    continue
                blocks = [
                    sum(c * g[w] for c, g in zip(coeffs, hb)) % p
                    for w in range(alg.num_vertices)
                ]
                if not _is_mono(blocks, xr, p):
                    continue
                sig = tuple(_col_space_sig(b, p) for b in blocks)
                if sig in seen:
                    continue
                seen.add(sig)
                rows = [
                    _vec([g[w] @ blocks[w] % p for w in range(alg.num_vertices)])
                    for g in lifts
                ]
                got = (
                    _rank(np.array(rows, dtype=np.int64), p) if rows else 0
                )
                if got < target_dim:
                    return False
    return True


def oracle_socle_vector(
    alg: KupischSeries, m, p: int = 2, dim_cap: int = DEFAULT_DIM_CAP
) -> tuple[int, ...]:
    """Dimension vector of the socle: per vertex, the kernel of the
    outgoing arrow action (everything, if there is no outgoing arrow)."""
    rep = realize(alg, m, p, dim_cap)
    v = alg.num_vertices
    out = []
    sources = set(rep.arrow_sources())
    for w in range(1, v + 1):
        if w in sources:
            mat = rep.maps[w]
            out.append(rep.dims[w - 1] - _rank(mat, p))
        else:
            out.append(rep.dims[w - 1])
    return tuple(out)


def oracle_tau(
    alg: KupischSeries,
    m: IntervalModule,
    p: int = 2,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> ModuleSum:
    """AR translate via transpose-dual of the minimal presentation.

    Hom(-, algebra) turns the presentation map between projectives into
    right multiplication between spaces of paths with fixed endpoint; the
    transpose is the cokernel presentation of Tr m, and dualizing that
    left module componentwise gives tau m.  All steps are explicit basis
    bookkeeping plus one rank computation for the top."""
    _check_prime(p)
    i, l = m.start, m.length
    c = alg.loewy_length(i)
    if l == c:
        return ModuleSum.zero()  # projective, translate is zero
    if alg.total_dim > dim_cap:
        raise DimensionCapExceeded(
            f"algebra dimension {alg.total_dim} exceeds cap {dim_cap}"
        )
    v = alg.num_vertices
    items = [
        (j, t) for j in alg.vertices() for t in range(alg.loewy_length(j))
    ]

    def endpoint(j, t):
        return alg.shift(j, t)

    end_i = [b for b in items if endpoint(*b) == i]
    end_il = [b for b in items if endpoint(*b) == alg.shift(i, l)]
    image = {
        (j, t + l)
        for (j, t) in end_i
        if t + l <= alg.loewy_length(j) - 1
    }
    coker = [b for b in end_il if b not in image]
    if len(coker) != l:
        raise InternalInconsistency(
            f"transpose of {m} over {alg.lengths} has dimension "
            f"{len(coker)}, expected {l}"
        )
    comp = {w: [b for b in coker if b[0] == w] for w in alg.vertices()}
    pos = {w: {b: k for k, b in enumerate(comp[w])} for w in alg.vertices()}
    dims = {w: len(comp[w]) for w in alg.vertices()}
    tops = []
    for w in alg.vertices():
        if alg.cyclic:
            pred = alg.shift(w, -1)
        else:
            pred = w - 1 if w > 1 else None
        if pred is None:
            incoming_rank = 0
        else:
            # left action of the arrow out of pred maps start-vertex
            # component at w to the one at pred; its transpose is the
            # incoming right action at w of the dual module
            mat = np.zeros((dims[pred], dims[w]), dtype=np.int64)
            for b in comp[w]:
                j, t = b
                lifted = (pred, t + 1)
                if t + 1 <= alg.loewy_length(pred) - 1 and lifted in pos[pred]:
                    mat[pos[pred][lifted], pos[w][b]] = 1
            incoming_rank = _rank(mat, p)
        tops.append(dims[w] - incoming_rank)
    if sum(tops) != 1:
        raise InternalInconsistency(
            f"transpose-dual of {m} over {alg.lengths} is not uniserial: "
            f"top vector {tuple(tops)}"
        )
    a = tops.index(1) + 1
    return ModuleSum.of(IntervalModule(a, l))
