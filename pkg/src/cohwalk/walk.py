"""Single-particle scattering walk on an N-path interferometer graph.

The graph has two Fourier vertices A and B joined by N parallel paths.
Path j carries a phase shifter that multiplies transmitted amplitude by
a sign s_j in {+1, -1}.  A finite chain of pass-through vertices hangs
off each Fourier vertex: the entry tail 0, -1, -2, ... on the A side and
the exit tail N+1, N+2, ... on the B side.

The particle lives on *directed edge states* |u,v>: "on the edge {u,v},
moving toward v".  |u,v> and |v,u> are distinct orthogonal states.  One
time step routes every occupied state through the vertex it points at:

* A and B apply a discrete Fourier transform over their N+1 incident
  edges, kernel exp(2i*pi*j*k/(N+1)) / sqrt(N+1).  At A the incident
  edges are indexed by the neighbor labels {0, 1..N}; at B by
  {1..N, N+1}, where the label N+1 is congruent to 0 mod N+1.
* Path vertex j transmits and multiplies by s_j, in both directions.
* Tail vertices transmit outward with unit coefficient.

Amplitudes are stored sparsely as a dict keyed by edge state; the walk
is only ever a few steps long, so the support stays tiny.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

Vertex = int | str  # 'A', 'B', or an integer tail/path label
EdgeState = tuple[Vertex, Vertex]

NORM_TOL = 1e-12

START_EDGE = (0, "A")


class BoundaryError(RuntimeError):
    """Amplitude reached the truncation boundary; tail_depth is too small."""


@dataclass(frozen=True)
class PhasePattern:
    """The N phase shifter settings as signs e^{i*phi_j} in {+1, -1}.

    ``promise`` tags which ensemble the pattern belongs to:

    * ``"constant"``  - every sign equal,
    * ``"balanced"``  - exactly half +1 and half -1 (N even),
    * ``"epsilon"``   - mean sign equal to ``epsilon``, which forces
      (1+epsilon)*N/2 to be an integer.
    """

    signs: tuple
    promise: str
    epsilon: float | None = None

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) < 1:
            raise ValueError("need at least one path")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        n = len(signs)
        total = sum(signs)
        if self.promise == "constant":
            if len(set(signs)) != 1:
                raise ValueError("constant promise requires all signs equal")
        elif self.promise == "balanced":
            if n % 2 != 0:
                raise ValueError("balanced promise requires an even number of paths")
            if total != 0:
                raise ValueError("balanced promise requires exactly half +1 signs")
        elif self.promise == "epsilon":
            eps = self.epsilon
            if eps is None or not 0 < eps < 1:
                raise ValueError("epsilon promise requires epsilon in (0, 1)")
            k = (1 + eps) * n / 2
            if abs(k - round(k)) > 1e-9:
                raise ValueError(f"(1+epsilon)*N/2 = {k} is not an integer")
            if total != 2 * round(k) - n:
                raise ValueError("sign sum does not match the promised bias")
        else:
            raise ValueError(f"unknown promise {self.promise!r}")

    @property
    def n_paths(self):
        return len(self.signs)

    @classmethod
    def constant(cls, n_paths, sign=1):
        return cls((sign,) * n_paths, "constant")

    @classmethod
    def balanced(cls, n_paths):
        """Canonical balanced pattern: first half +1, second half -1."""
        half = n_paths // 2
        return cls((1,) * half + (-1,) * (n_paths - half), "balanced")

    @classmethod
    def epsilon_biased(cls, n_paths, epsilon):
        """Canonical biased pattern with (1+epsilon)*N/2 leading +1 signs."""
        k = (1 + epsilon) * n_paths / 2
        n_plus = round(k)
        return cls((1,) * n_plus + (-1,) * (n_paths - n_plus), "epsilon", epsilon)


@dataclass
class WalkGraph:
    """Truncated interferometer graph: vertex layout and edge-state list.

    ``tail_depth`` counts the edges in each tail chain, including (0, A)
    and (B, N+1).  The entry tail uses vertices 0, -1, ..., -(tail_depth-1)
    and the exit tail N+1, ..., N+tail_depth.  Every undirected edge
    contributes two directed states, 4*(tail_depth + n_paths) in total.
    """

    n_paths: int
    tail_depth: int = 4
    edge_states: tuple = field(init=False)
    _index: dict = field(init=False, repr=False)
    _neighbors: dict = field(init=False, repr=False)

    def __post_init__(self):
        if self.n_paths < 2:
            raise ValueError("n_paths must be at least 2")
        if self.tail_depth < 4:
            raise ValueError("tail_depth must be at least 4")
        n, depth = self.n_paths, self.tail_depth
        undirected = [(0, "A")]
        undirected += [(-k - 1, -k) for k in range(depth - 1)]
        for j in range(1, n + 1):
            undirected += [("A", j), (j, "B")]
        undirected.append(("B", n + 1))
        undirected += [(n + k, n + k + 1) for k in range(1, depth)]

        states = []
        neighbors = {}
        for u, v in undirected:
            states.append((u, v))
            states.append((v, u))
            neighbors.setdefault(u, []).append(v)
            neighbors.setdefault(v, []).append(u)
        self.edge_states = tuple(states)
        self._index = {e: i for i, e in enumerate(states)}
        self._neighbors = neighbors

    @property
    def exit_edge(self):
        return ("B", self.n_paths + 1)

    def state_index(self, edge):
        return self._index[edge]


def build_graph(n_paths, tail_depth=4):
    """Build the truncated interferometer graph for ``n_paths`` paths."""
    return WalkGraph(n_paths, tail_depth)


def transition_table(graph, pattern):
    """Single-step routing for every directed edge state.

    Returns a dict mapping each source state to a list of
    ``(destination, coefficient, path_vertex)`` triples, where
    ``path_vertex`` is the phase-shifter label when the hop transits a
    path vertex (used by the ancilla-coupled simulation) and ``None``
    otherwise.  States pointing at an outermost tail vertex map to
    ``None``: routing them means the truncation is too shallow.
    """
    if pattern.n_paths != graph.n_paths:
        raise ValueError("pattern and graph disagree on the number of paths")
    n, depth = graph.n_paths, graph.tail_depth
    norm = 1.0 / math.sqrt(n + 1)
    omega = 2j * math.pi / (n + 1)
    a_labels = list(range(n + 1))          # neighbors of A: 0 and 1..N
    b_labels = list(range(1, n + 2))       # neighbors of B: 1..N and N+1
    leftmost = -(depth - 1)
    rightmost = n + depth

    table = {}
    for u, v in graph.edge_states:
        if v == "A":
            j = 0 if u == 0 else u
            table[(u, v)] = [
                (("A", k), norm * cmath.exp(omega * j * k), None) for k in a_labels
            ]
        elif v == "B":
            table[(u, v)] = [
                (("B", k), norm * cmath.exp(omega * u * k), None) for k in b_labels
            ]
        elif 1 <= v <= n:
            dst = (v, "B") if u == "A" else (v, "A")
            table[(u, v)] = [(dst, complex(pattern.signs[v - 1]), v)]
        elif v == leftmost or v == rightmost:
            table[(u, v)] = None
        else:
            # interior tail vertex: transmit outward
            (other,) = [w for w in graph._neighbors[v] if w != u]
            table[(u, v)] = [((v, other), 1.0 + 0j, None)]
    return table


def initial_state():
    """Particle entering the interferometer: all amplitude on |0,A>."""
    return {START_EDGE: 1.0 + 0j}


def state_norm(state):
    return math.sqrt(sum(abs(a) ** 2 for a in state.values()))


def step(state, pattern, graph, _table=None):
    """Advance the walk one time step.

    Raises ``BoundaryError`` if any amplitude would have to leave the
    truncated tails, and checks that the step preserves the norm.
    """
    table = _table if _table is not None else transition_table(graph, pattern)
    new = {}
    for src, amp in state.items():
        routes = table[src]
        if routes is None:
            raise BoundaryError(
                f"amplitude on {src} hit the tail truncation; increase tail_depth"
            )
        for dst, coeff, _ in routes:
            new[dst] = new.get(dst, 0j) + amp * coeff
    new = {e: a for e, a in new.items() if a != 0}
    before, after = state_norm(state), state_norm(new)
    if abs(after - before) > NORM_TOL:
        raise AssertionError(f"step broke the norm: {before} -> {after}")
    return new


def run_walk(pattern, steps=3, tail_depth=4):
    """Run the walk from |0,A> for ``steps`` steps and return the state."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if steps > tail_depth - 1:
        raise ValueError(
            f"steps={steps} exceeds the safe horizon tail_depth-1={tail_depth - 1}"
        )
    graph = build_graph(pattern.n_paths, tail_depth)
    table = transition_table(graph, pattern)
    state = initial_state()
    for _ in range(steps):
        state = step(state, pattern, graph, _table=table)
    return state


def exit_amplitude(pattern, tail_depth=4):
    """Amplitude on the exit edge |B,N+1> after the standard 3 steps."""
    state = run_walk(pattern, steps=3, tail_depth=tail_depth)
    return state.get(("B", pattern.n_paths + 1), 0j)


def exit_probability_ideal(pattern):
    """Closed form for the fully coherent exit probability.

    After three steps the exit-edge amplitude is (sum_j s_j) / (N+1), so
    the probability is (sum_j s_j)^2 / (N+1)^2: N^2/(N+1)^2 for constant
    patterns, 0 for balanced ones, (eps*N)^2/(N+1)^2 for biased ones.
    """
    total = sum(pattern.signs)
    n = pattern.n_paths
    return (total * total) / ((n + 1) * (n + 1))
