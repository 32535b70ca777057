"""Bead displays on n runners, n-quotients, and n-decomposability.

A partition p with at most t*n parts is displayed by placing beads at the
positions p_j + (t*n - j) for j = 1..t*n (parts padded with zeros), where
position q sits on runner q mod n at row q div n.  Removing a border strip
of n boxes is exactly moving one bead up one row on its own runner, so all
strip-related structure can be read off the display:

* the n-core is reached by pushing every bead as far up its runner as it
  will go;
* the n-quotient collects, runner by runner, the partition encoded by the
  bead rows;
* a skew shape lambda/mu is n-decomposable when both displays (drawn with
  the same number of beads) put equally many beads on each runner, with the
  mu-beads rowwise no lower than the lambda-beads.  This happens precisely
  when some border-strip tableau of shape lambda/mu and type (n,...,n)
  exists.

The relabelling permutation matches the beads of the lambda-display to the
mu-beads they migrate to; its parity is the sign that relates signed strip
counts on lambda/mu to signed strip counts on the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .borderstrips import BorderStripTableau, _partition_of_betas
from .partitions import Partition, SkewPartition
from .perms import parity


class AbacusDisplay:
    """An abacus with ``runners`` runners and beads at distinct positions.

    The number of beads is always a multiple of the number of runners.
    """

    __slots__ = ("runners", "beads")

    runners: int
    beads: frozenset[int]

    def __init__(self, runners: int, beads):
        beads = frozenset(int(b) for b in beads)
        if runners < 1:
            raise ValueError("need at least one runner")
        if any(b < 0 for b in beads):
            raise ValueError("bead positions must be non-negative")
        if len(beads) % runners != 0:
            raise ValueError("bead count must be a multiple of the runner count")
        object.__setattr__(self, "runners", runners)
        object.__setattr__(self, "beads", beads)

    def __setattr__(self, name, value):
        raise AttributeError("AbacusDisplay is immutable")

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    @property
    def row_count(self) -> int:
        if not self.beads:
            return 0
        return max(max(self.beads) // self.runners + 1, len(self.beads) // self.runners)

    def partition(self) -> Partition:
        """The partition this display encodes."""
        return Partition(_partition_of_betas(self.beads))

    def runner_rows(self, i: int) -> tuple[int, ...]:
        """Ascending rows of the beads on runner i."""
        return tuple(
            sorted(b // self.runners for b in self.beads if b % self.runners == i)
        )

    def numbering(self) -> dict[int, int]:
        """Bead numbers 1..N in increasing order of position."""
        return {pos: k for k, pos in enumerate(sorted(self.beads), start=1)}

    def render(self) -> str:
        """One line per row; beads print as a numbered ● and gaps as o."""
        numbering = self.numbering()
        width = len(str(self.bead_count)) + 1
        lines = []
        for row in range(self.row_count):
            cells = []
            for i in range(self.runners):
                pos = row * self.runners + i
                cell = f"●{numbering[pos]}" if pos in self.beads else "o"
                cells.append(cell.ljust(width))
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AbacusDisplay)
            and self.runners == other.runners
            and self.beads == other.beads
        )

    def __hash__(self) -> int:
        return hash((self.runners, self.beads))

    def __repr__(self) -> str:
        return f"AbacusDisplay({self.runners}, {sorted(self.beads)!r})"


def display(p, n: int, rows: int | None = None) -> AbacusDisplay:
    """The canonical n-runner display of a partition.

    By default the smallest positive number of full rows is used,
    t = max(1, ceil(len(p) / n)); pass ``rows`` to draw more beads, e.g. to
    put two nested partitions on displays of the same size.
    """
    p = Partition(p)
    if n < 1:
        raise ValueError("need at least one runner")
    t_min = max(1, -(-len(p) // n))
    t = t_min if rows is None else rows
    if t * n < len(p) or t < 1:
        raise ValueError(f"{t} rows cannot hold {len(p)} parts on {n} runners")
    nbeads = t * n
    parts = p.parts + (0,) * (nbeads - len(p))
    return AbacusDisplay(n, (parts[j] + (nbeads - 1 - j) for j in range(nbeads)))


def n_core(p, n: int) -> Partition:
    """Push every bead to the top of its runner and read off the partition."""
    d = display(p, n)
    core_beads: list[int] = []
    for i in range(n):
        count = len(d.runner_rows(i))
        core_beads.extend(i + n * r for r in range(count))
    return Partition(_partition_of_betas(core_beads))


def _paired_displays(shape: SkewPartition, n: int) -> tuple[AbacusDisplay, AbacusDisplay]:
    # same bead count for both, sized from the outer shape
    t = max(1, -(-len(shape.outer) // n))
    return display(shape.outer, n, rows=t), display(shape.inner, n, rows=t)


def is_n_decomposable(shape: SkewPartition, n: int) -> bool:
    """Whether shape admits a border-strip tableau of type (n, ..., n).

    Read off the paired displays: each runner must carry equally many
    lambda-beads and mu-beads, with the mu-rows dominated by the
    lambda-rows when both are sorted.
    """
    if n < 1:
        raise ValueError("need at least one runner")
    if shape.size % n != 0:
        raise ValueError(f"|{shape}| = {shape.size} is not divisible by {n}")
    d_outer, d_inner = _paired_displays(shape, n)
    for i in range(n):
        rows_outer = d_outer.runner_rows(i)
        rows_inner = d_inner.runner_rows(i)
        if len(rows_outer) != len(rows_inner):
            return False
        if any(y > x for x, y in zip(rows_outer, rows_inner)):
            return False
    return True


@dataclass(frozen=True)
class QuotientData:
    """The n-quotient of a skew shape together with its sign.

    ``components[i]`` is the skew shape cut out on runner i; ``relabelling``
    maps each bead number of the outer display to the number, in the inner
    display, of the bead it migrates to (as a tuple, 1-based on both sides);
    ``sign`` is the parity of that permutation.
    """

    components: tuple[SkewPartition, ...]
    relabelling: tuple[int, ...]
    sign: int

    @property
    def n(self) -> int:
        return len(self.components)


def n_quotient(shape: SkewPartition, n: int) -> QuotientData:
    """Quotient components, relabelling, and sign of an n-decomposable shape."""
    if not is_n_decomposable(shape, n):
        raise ValueError(f"{shape} is not {n}-decomposable")
    d_outer, d_inner = _paired_displays(shape, n)
    num_outer = d_outer.numbering()
    num_inner = d_inner.numbering()
    components = []
    rho = [0] * d_outer.bead_count
    for i in range(n):
        rows_outer = d_outer.runner_rows(i)
        rows_inner = d_inner.runner_rows(i)
        components.append(
            SkewPartition(
                _partition_of_betas(rows_outer), _partition_of_betas(rows_inner)
            )
        )
        for x, y in zip(rows_outer, rows_inner):
            rho[num_outer[i + n * x] - 1] = num_inner[i + n * y]
    relabelling = tuple(rho)
    sgn = parity(tuple(r - 1 for r in relabelling))
    return QuotientData(tuple(components), relabelling, sgn)


def is_horizontal_strip(shape: SkewPartition) -> bool:
    """True when no column of the skew shape holds two boxes."""
    outer, inner = shape.outer, shape.inner
    return all(
        outer.part(r + 1) <= inner.part(r) for r in range(1, len(outer))
    )


def unique_cycle_tableau(
    shape: SkewPartition, m: int, n: int
) -> tuple[BorderStripTableau, int] | None:
    """The unique m-strip tableau of type (n), when it exists.

    Returns None unless shape is n-decomposable with every quotient
    component a horizontal strip; in that case there is exactly one
    m-border-strip tableau of shape lambda/mu and type (n), built here by
    repeatedly lifting the lowest liftable bead, and its sign is the
    quotient sign.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    if shape.size != m * n:
        raise ValueError(f"|{shape}| = {shape.size} must equal m * n = {m * n}")
    if shape.size % n != 0 or not is_n_decomposable(shape, n):
        return None
    quotient = n_quotient(shape, n)
    if any(not is_horizontal_strip(c) for c in quotient.components):
        return None
    d_outer, d_inner = _paired_displays(shape, n)
    current = set(d_outer.beads)
    chain = [Partition(_partition_of_betas(current))]
    for _ in range(m):
        pos = max(current - d_inner.beads)
        target = pos - n
        if target < 0 or target in current:
            raise RuntimeError("bead lift blocked; quotient invariant broken")
        current.remove(pos)
        current.add(target)
        chain.append(Partition(_partition_of_betas(current)))
    if current != set(d_inner.beads):
        raise RuntimeError("bead lifts did not reach the inner display")
    tableau = BorderStripTableau(reversed(chain))
    return tableau, tableau.sign


def quotient_bijection(t: BorderStripTableau, n: int) -> list[BorderStripTableau]:
    """Cut a tableau whose strip lengths are multiples of n along runners.

    For a border-strip tableau of shape lambda/mu and type n*alpha (alpha a
    partition), every strip is a single bead migration on one runner, so the
    chain projects to one labelled border-strip tableau per runner; the i-th
    output has shape and type the i-th quotient components, and keeps the
    original labels on its strips.  The tableau sign is the quotient sign
    times the product of the component signs.
    """
    if n < 1:
        raise ValueError("need at least one runner")
    type_ = t.type.parts
    if any(c % n != 0 for c in type_):
        raise ValueError(f"strip lengths {type_} are not all multiples of {n}")
    alpha = tuple(c // n for c in type_)
    if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError(f"type {type_} is not n times a partition")
    outer = t.chain[-1]
    rows = max(1, -(-len(outer) // n))
    displays = [display(p, n, rows=rows) for p in t.chain]
    runner_chains: list[list[Partition]] = []
    runner_labels: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        runner_chains.append(
            [Partition(_partition_of_betas(displays[0].runner_rows(i)))]
        )
    for step, (before, after) in enumerate(zip(displays, displays[1:])):
        gone = before.beads - after.beads
        new = after.beads - before.beads
        if len(gone) != 1 or len(new) != 1:
            raise RuntimeError("chain step is not a single bead migration")
        (src,), (dst,) = gone, new
        if src % n != dst % n:
            raise RuntimeError("bead migration crosses runners")
        i = src % n
        runner_chains[i].append(
            Partition(_partition_of_betas(after.runner_rows(i)))
        )
        runner_labels[i].append(t.labels[step])
    return [
        BorderStripTableau(runner_chains[i], runner_labels[i]) for i in range(n)
    ]
