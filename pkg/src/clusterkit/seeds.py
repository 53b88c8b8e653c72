"""Seeds, exchange matrices, validation, and the two mutation rules.

An exchange matrix is an m x n integer matrix whose first n rows form the
principal part; a seed couples such a matrix with an m-tuple of cluster
entries, stored as exact Laurent polynomials in the initial variables, and
the word of mutation indices that produced it.  Mutation indices and
variable indices are 1-based throughout the public surface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import LaurentPoly, ParseError, exact_div


class InvalidSeed(ValueError):
    """A seed or exchange matrix violates the defining conditions."""


class NotSkewSymmetric(ValueError):
    """Operation requires a skew-symmetric principal part."""


def default_names(m: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(m))


@dataclass(frozen=True)
class SeedProfile:
    """Index bookkeeping: n mutable entries, p invertible, m ambient variables."""

    n: int
    p: int
    m: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if min(self.n, self.p, self.m) < 0:
            raise ValueError("profile counts must be nonnegative")
        if not self.names:
            object.__setattr__(self, "names", default_names(self.m))
        elif len(self.names) != self.m:
            raise ValueError(f"{len(self.names)} names for {self.m} variables")

    def violations(self) -> list[str]:
        out = []
        if not (self.m >= self.p >= self.n >= 1):
            out.append(f"profile: need m >= p >= n >= 1, got n={self.n} p={self.p} m={self.m}")
        if self.m <= 1:
            out.append(f"profile: need m > 1, got m={self.m}")
        return out


class ExchangeMatrix:
    """Immutable m x n integer matrix with a seed profile."""

    __slots__ = ("entries", "profile")

    def __init__(self, entries: Sequence[Sequence[int]], profile: SeedProfile):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if len(rows) != profile.m:
            raise ValueError(f"{len(rows)} rows for profile m={profile.m}")
        for row in rows:
            if len(row) != profile.n:
                raise ValueError(f"row of length {len(row)} for profile n={profile.n}")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "profile", profile)

    def __setattr__(self, name, value):
        raise AttributeError("ExchangeMatrix is immutable")

    def entry(self, i: int, j: int) -> int:
        """b_ij, 1-indexed."""
        return self.entries[i - 1][j - 1]

    def column(self, k: int) -> tuple[int, ...]:
        return tuple(row[k - 1] for row in self.entries)

    def principal(self) -> tuple[tuple[int, ...], ...]:
        n = self.profile.n
        return tuple(row[:n] for row in self.entries[:n])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return self.entries == other.entries and self.profile == other.profile

    def __hash__(self) -> int:
        return hash((self.entries, self.profile))

    def __repr__(self) -> str:
        return f"ExchangeMatrix({render_matrix(self)!r})"


def _delta_connected(B: ExchangeMatrix) -> bool:
    # graph on 1..m with an edge i-j when b_ij or b_ji is nonzero
    m, n = B.profile.m, B.profile.n
    adj: list[set[int]] = [set() for _ in range(m)]
    for i in range(m):
        for j in range(n):
            if B.entries[i][j] and i != j:
                adj[i].add(j)
                adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == m


def _diagonal_scaler(A: Sequence[Sequence[int]], skew: bool) -> tuple[int, ...] | None:
    """Minimal positive integer d with d_i*A_ij = sign*d_j*A_ji, or None.

    sign is -1 for skew-symmetrizers and +1 for symmetrizers.  The vector
    is found by ratio propagation along the nonzero pattern and made
    minimal per connected component.
    """
    n = len(A)
    sign = -1 if skew else 1
    if skew and any(A[i][i] != 0 for i in range(n)):
        return None
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or (A[i][j] == 0 and A[j][i] == 0):
                    continue
                if A[i][j] == 0 or A[j][i] == 0:
                    return None  # one-sided zero cannot be scaled away
                ratio = sign * Fraction(A[i][j], A[j][i])
                if ratio <= 0:
                    return None
                val = d[i] * ratio
                if d[j] is None:
                    d[j] = val
                    component.append(j)
                    stack.append(j)
                elif d[j] != val:
                    return None
        # scale the component to minimal positive integers
        denom_lcm = 1
        for i in component:
            denom_lcm = denom_lcm * d[i].denominator // _gcd(denom_lcm, d[i].denominator)
        ints = [int(d[i] * denom_lcm) for i in component]
        g = 0
        for v in ints:
            g = _gcd(g, v)
        for i, v in zip(component, ints):
            d[i] = Fraction(v // g)
    # final consistency sweep over every pair
    for i in range(n):
        for j in range(n):
            if d[i] * A[i][j] != sign * d[j] * A[j][i]:
                return None
    return tuple(int(v) for v in d)


def _gcd(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def skew_symmetrizer(B: ExchangeMatrix) -> tuple[int, ...] | None:
    """Minimal positive integer diagonal making the principal part skew, or None."""
    return _diagonal_scaler(B.principal(), skew=True)


def validate(B: ExchangeMatrix) -> tuple[str, ...]:
    """Check the seed conditions; returns violation descriptions (empty = ok)."""
    out = list(B.profile.violations())
    if not _delta_connected(B):
        out.append("connectivity: the nonzero pattern does not connect all variables")
    if skew_symmetrizer(B) is None:
        out.append("skew: the principal part is not skew-symmetrizable")
    return tuple(out)


def matrix_mutate(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Mutate the exchange matrix in direction k (1-based mutable index).

    The result is validated; a violation (possible in principle only for
    connectivity, which mutation is not known to preserve in general) is
    surfaced as InvalidSeed instead of being silently returned.
    """
    n, m = B.profile.n, B.profile.m
    if not 1 <= k <= n:
        raise IndexError(f"mutation index {k} outside 1..{n}")
    kk = k - 1
    old = B.entries
    rows = []
    for i in range(m):
        row = []
        for j in range(n):
            if i == kk or j == kk:
                row.append(-old[i][j])
            else:
                bik, bkj = old[i][kk], old[kk][j]
                row.append(old[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        rows.append(row)
    out = ExchangeMatrix(rows, B.profile)
    bad = validate(out)
    if bad:
        raise InvalidSeed(f"mutation at {k} produced an invalid matrix: " + "; ".join(bad))
    return out


class Seed:
    """Cluster (m Laurent polynomials in the initial variables), matrix, word."""

    __slots__ = ("matrix", "cluster", "word", "_hash")

    def __init__(self, matrix: ExchangeMatrix, cluster: Sequence[LaurentPoly], word: Sequence[int]):
        cluster = tuple(cluster)
        m = matrix.profile.m
        if len(cluster) != m:
            raise InvalidSeed(f"cluster of length {len(cluster)} for m={m}")
        for c in cluster:
            if c.m != m:
                raise InvalidSeed("cluster entry in wrong ambient ring")
            if c.is_zero:
                raise InvalidSeed("cluster entries must be nonzero")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "cluster", cluster)
        object.__setattr__(self, "word", tuple(int(w) for w in word))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Seed is immutable")

    @classmethod
    def initial(cls, matrix: ExchangeMatrix) -> "Seed":
        """The seed whose cluster is the m coordinate monomials."""
        bad = validate(matrix)
        if bad:
            raise InvalidSeed("; ".join(bad))
        m = matrix.profile.m
        return cls(matrix, [LaurentPoly.variable(m, i + 1) for i in range(m)], ())

    @property
    def profile(self) -> SeedProfile:
        return self.matrix.profile

    def mutable_entries(self) -> tuple[LaurentPoly, ...]:
        return self.cluster[: self.profile.n]

    # equality ignores the word: it is provenance, not identity
    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return self.matrix == other.matrix and self.cluster == other.cluster

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.matrix, self.cluster))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        word = ",".join(map(str, self.word)) or "()"
        return f"Seed(word={word}, n={self.profile.n}, m={self.profile.m})"


def exchange_monomials(s: Seed, k: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The two products M1, M2 of the exchange relation x_k * x_k' = M1 + M2."""
    m = s.profile.m
    col = s.matrix.column(k)
    m1 = LaurentPoly.const(m, 1)
    m2 = LaurentPoly.const(m, 1)
    for i in range(m):
        b = col[i]
        if b > 0:
            m1 = m1 * s.cluster[i] ** b
        elif b < 0:
            m2 = m2 * s.cluster[i] ** (-b)
    return m1, m2


def seed_mutate(s: Seed, k: int) -> Seed:
    """Mutate the seed in direction k: exchange relation plus matrix mutation."""
    n = s.profile.n
    if not 1 <= k <= n:
        raise IndexError(f"mutation index {k} outside 1..{n}")
    m1, m2 = exchange_monomials(s, k)
    if m1 == m2:
        raise InvalidSeed(f"degenerate exchange at {k}: both exchange monomials equal")
    new_entry = exact_div(m1 + m2, s.cluster[k - 1])  # NotDivisible propagates
    cluster = list(s.cluster)
    cluster[k - 1] = new_entry
    return Seed(matrix_mutate(s.matrix, k), cluster, s.word + (k,))


def apply_word(s: Seed, word: Iterable[int]) -> Seed:
    """Left-to-right composition of seed mutations."""
    for k in word:
        s = seed_mutate(s, k)
    return s


# ---------------------------------------------------------------------------
# quiver encodings and rank
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph: arrows as ((source, target), multiplicity)."""

    vertex_count: int
    arrows: tuple[tuple[tuple[int, int], int], ...]

    def multiplicity(self, i: int, j: int) -> int:
        for (a, b), mult in self.arrows:
            if (a, b) == (i, j):
                return mult
        return 0


def sigma_quiver(B: ExchangeMatrix) -> Quiver:
    """Sign-pattern quiver on the mutable indices: an arrow i->j when b_ij > 0."""
    n = B.profile.n
    arrows = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if B.entry(i, j) > 0:
                arrows[(i, j)] = 1
    return Quiver(n, tuple(sorted(arrows.items())))


def gamma_quiver(B: ExchangeMatrix) -> Quiver:
    """Arrow-multiplicity quiver on all m vertices; requires skew-symmetric principal part.

    Entry b_ij > 0 contributes b_ij arrows i -> j and b_ij < 0 contributes
    -b_ij arrows j -> i; the two principal entries of a pair describe the
    same arrows and are counted once.
    """
    n, m = B.profile.n, B.profile.m
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if B.entry(i, j) != -B.entry(j, i):
                raise NotSkewSymmetric("principal part is not skew-symmetric")
    arrows: dict[tuple[int, int], int] = {}
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            if i <= n and i <= j:
                continue  # principal pair handled via its lower entry
            b = B.entry(i, j)
            if b > 0:
                arrows[(i, j)] = arrows.get((i, j), 0) + b
            elif b < 0:
                arrows[(j, i)] = arrows.get((j, i), 0) - b
    return Quiver(m, tuple(sorted(arrows.items())))


def is_acyclic(B: ExchangeMatrix) -> bool:
    """True when the sign-pattern quiver has no oriented cycle."""
    n = B.profile.n
    succ = [[j for j in range(n) if B.entries[i][j] > 0] for i in range(n)]
    state = [0] * n  # 0 unseen, 1 on stack, 2 done
    for start in range(n):
        if state[start]:
            continue
        stack = [(start, iter(succ[start]))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == 1:
                    return False
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    advanced = True
                    break
            if not advanced:
                state[v] = 2
                stack.pop()
    return True


def matrix_rank(B: ExchangeMatrix) -> int:
    """Exact integer rank via fraction-free (Bareiss) elimination."""
    M = [list(row) for row in B.entries]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                M[i][j] = (M[i][j] * M[r][c] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        r += 1
    return r


# ---------------------------------------------------------------------------
# matrix text and JSON forms
# ---------------------------------------------------------------------------


def render_matrix(B: ExchangeMatrix) -> str:
    """Canonical text: header 'n p m', then rows joined by '; '."""
    pr = B.profile
    body = "; ".join(" ".join(str(v) for v in row) for row in B.entries)
    return f"{pr.n} {pr.p} {pr.m}\n{body}"


def matrix_to_json(B: ExchangeMatrix) -> dict:
    pr = B.profile
    return {"n": pr.n, "p": pr.p, "m": pr.m, "rows": [list(row) for row in B.entries]}


def parse_matrix(text: str) -> ExchangeMatrix:
    """Parse the text form (header 'n p m', ';'- or newline-separated rows) or JSON."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix", 0)
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON matrix: {exc.msg}", exc.pos) from None
        for key in ("n", "p", "m", "rows"):
            if key not in data:
                raise ParseError(f"JSON matrix missing field {key!r}", 0)
        profile = SeedProfile(int(data["n"]), int(data["p"]), int(data["m"]))
        try:
            return ExchangeMatrix(data["rows"], profile)
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc), 0) from None
    lines = stripped.splitlines()
    header = lines[0].split()
    if len(header) != 3:
        raise ParseError("header must be 'n p m'", 0)
    try:
        n, p, m = (int(v) for v in header)
    except ValueError:
        raise ParseError("header must contain three integers", 0) from None
    body = " ".join(lines[1:])
    row_texts = [r.strip() for r in body.split(";") if r.strip()]
    rows = []
    for r in row_texts:
        try:
            rows.append([int(v) for v in r.split()])
        except ValueError:
            raise ParseError(f"non-integer matrix entry in row {r!r}", text.find(r)) from None
    try:
        return ExchangeMatrix(rows, SeedProfile(n, p, m))
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None
