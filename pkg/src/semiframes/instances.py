"""Named families, operators and instance generators for the proposition suite.

Three sources of instances:

* :func:`builtin_instances` - the worked examples (weighted bases, the
  rank-one-block operator, the even/odd pair) wired to the propositions they
  illustrate;
* :func:`random_bindings` - seeded random diagonal and permutation-weighted
  instances with periodic weights drawn log-uniformly from ``[1/16, 16]``;
  ``stress=True`` also draws power weights ``n^p`` (``p`` in -1, 0, 1),
  zero weights and narrower constants;
* :func:`counterexample_instances` - instances on which a directional check
  is genuinely FALSIFIED.  They are kept out of the default suite.
"""

import numpy as np

from .formulas import BlockPermutation, CompressedIndex, Expr, Periodic
from .ladder import DEFAULT_SETTINGS, as_ladder
from .operators import Diagonal, Explicit, PermutationWeighted, example_3_8_operator
from .sequences import PointwiseSum, WeightedBasis, standard_basis


# -- named objects --------------------------------------------------------

def weighted_basis(weight):
    """``{w(n) e_n}``."""
    return WeightedBasis(Expr(weight))


def scaled_basis():
    """``{n e_n}``: a lower semi-frame that is not Bessel."""
    return weighted_basis("n")


def shrunk_basis():
    """``{e_n / n}``: Bessel but not a lower semi-frame."""
    return weighted_basis("1/n")


def even_odd_pair():
    """The interleaved pair ``f = {0, 2e_1, 0, 4e_2, ...}``, ``g = {e_1, 0, 3e_2, 0, ...}``.

    ``f`` lives in ``H1`` (coefficient slots at even ``n``), ``g`` in ``H2``
    (odd ``n``); their analysis ranges are complementary coordinate
    subspaces, and ``{f_n (+) g_n}`` is unitarily ``{n e_n}``.
    """
    f = WeightedBasis(Expr("n*(1 - n%2)"), Expr("n/2"), Expr("d//2", "d"))
    g = WeightedBasis(Expr("n*(n%2)"), Expr("(n+1)/2"), Expr("(d+1)//2", "d"))
    return f, g


def even_odd_embeddings():
    """Embeddings placing ``H1`` on even and ``H2`` on odd ambient coordinates."""
    return Expr("2*n"), Expr("2*n - 1")


def _bind(pid, label, ladder, settings, **objs):
    objs.update(label=label, ladder=ladder, settings=settings)
    return pid, objs


def builtin_instances(ladder=(8, 16, 32, 64, 128), settings=DEFAULT_SETTINGS):
    """``(id, bindings)`` pairs for the worked examples; none is FALSIFIED."""
    ladder = as_ladder(ladder)
    b = []

    def add(pid, label, **objs):
        b.append(_bind(pid, label, ladder, settings, **objs))

    nf, unit = scaled_basis(), standard_basis()
    recip, scale = Diagonal(Expr("1/n")), Diagonal(Expr("n"))
    rank_one = example_3_8_operator()
    f, g = even_odd_pair()
    left, right = even_odd_embeddings()

    # diagonal shrink of {n e_n}
    ex34 = "example-3.4"
    for pid in ("Prop-3.2.fwd", "Prop-3.2.rev", "Prop-3.3", "Prop-3.5.fwd", "Prop-3.5.rev",
                "Prop-3.7", "Prop-3.9.fwd", "Prop-3.9.rev", "Prop-3.10"):
        add(pid, ex34, f=nf, L=recip)
    for pid in ("Prop-3.3", "Prop-3.6.fwd", "Prop-3.6.rev", "Prop-3.7"):
        add(pid, ex34 + "-unit", f=unit, L=recip)
    for pid in ("Prop-2.4", "Prop-3.1"):
        add(pid, ex34, L=recip)

    # rank-one block operator
    ex38 = "example-3.8"
    for pid in ("Prop-3.2.fwd", "Prop-3.2.rev", "Prop-3.3", "Prop-3.7", "Prop-3.9.rev",
                "Prop-3.10"):
        add(pid, ex38, f=nf, L=rank_one)
    for pid in ("Prop-2.4", "Prop-3.1"):
        add(pid, ex38, L=rank_one)

    # invertible rescaling
    for pid in ("Prop-3.5.fwd", "Prop-3.5.rev", "Prop-3.6.fwd", "Prop-3.6.rev",
                "Prop-3.9.fwd", "Prop-3.9.rev", "Prop-3.10"):
        add(pid, "unit-scaled", f=unit, L=scale)

    # perturbations
    big = Diagonal(Expr("2 + 1/n"))
    for pid in ("Prop-4.1", "Cor-4.2", "Cor-4.4"):
        add(pid, "identity-plus", f=nf, L=big)
        add(pid, "identity-plus-unit", f=unit, L=Diagonal(Expr("-3")))
    add("Prop-4.3", "operator-sum", f=nf, L=Diagonal(Expr("n + 2")), L2=Diagonal(Expr("-1")))
    add("Prop-4.3", "operator-sum-unit", f=unit, L=Diagonal(Expr("3")),
        L2=PermutationWeighted(BlockPermutation((2, 1)), Expr("1/2")))
    add("Prop-4.5", "family-sum", f=unit, g=weighted_basis("-1/2"))
    add("Prop-4.5", "family-sum-scaled", f=nf, g=weighted_basis("1/2"))

    # even/odd pair
    ex57 = "example-5.7"
    for pid in ("Prop-5.2.fwd", "Prop-5.2.rev", "Cor-5.3", "Prop-5.4", "Prop-5.5.fwd",
                "Prop-5.5.rev", "Cor-5.6", "Prop-5.8"):
        add(pid, ex57, f=f, g=g, left_index=left, right_index=right)
    add("Prop-5.8", "rf-unit", f=unit, g=nf)
    add("Prop-5.4", "same-family", f=unit, g=unit)
    return b


def counterexample_instances(ladder=(8, 16, 32, 64, 128), settings=DEFAULT_SETTINGS):
    """Instances on which a directional check is FALSIFIED."""
    ladder = as_ladder(ladder)
    inv, unit = shrunk_basis(), standard_basis()
    odd = WeightedBasis(Expr("n%2"), Expr("(n+1)/2"), Expr("d/2", "d"))
    tilted = PointwiseSum(odd, WeightedBasis(Expr("(1 - n%2)*2/n"), Expr("n/2"),
                                             Expr("d/2", "d")))
    return [
        _bind("Prop-3.5.fwd", "diag(n) undoes {e_n/n}", ladder, settings,
              f=inv, L=Diagonal(Expr("n"))),
        _bind("Prop-3.9.fwd", "diag(n) undoes {e_n/n}", ladder, settings,
              f=inv, L=Diagonal(Expr("n"))),
        _bind("Prop-3.9.fwd", "incomplete lower semi-frame sequence", ladder, settings,
              f=WeightedBasis(Expr("n%2")), L=Diagonal(Expr("1"))),
        _bind("Prop-4.3", "L1* not injective", ladder, settings,
              f=unit, L=Diagonal(Expr("5*(1 - n%2)")), L2=Diagonal(Expr("1/n"))),
        _bind("Prop-5.4", "ranges disjoint, sum not closed", ladder, settings,
              f=odd, g=tilted),
    ]


# -- random generators ----------------------------------------------------

_RANGE = (1 / 16, 16.0)
_STRESS_RANGE = (0.5, 2.0)


class RandomSource:
    """Seeded sampler of periodic weights, index maps, families and operators."""

    def __init__(self, rng, stress=False):
        self.rng = rng
        self.stress = stress

    def magnitudes(self, k):
        lo, hi = _STRESS_RANGE if self.stress else _RANGE
        return np.exp(self.rng.uniform(np.log(lo), np.log(hi), size=k))

    def weight(self, period=None, zeros=None, allow_zero=None):
        rng = self.rng
        k = period or int(rng.choice([1, 2, 4]))
        vals = self.magnitudes(k) * rng.choice([-1.0, 1.0], size=k)
        allow_zero = self.stress if allow_zero is None else allow_zero
        if allow_zero and rng.random() < 0.25:
            vals[rng.integers(k)] = 0.0
        if zeros is not None:
            vals[list(zeros)] = 0.0
        power = int(rng.choice([-1, 0, 1])) if self.stress else 0
        return Periodic(tuple(float(v) for v in vals), power)

    def index(self):
        rng = self.rng
        if rng.random() < 0.5:
            return Expr("n")
        b = int(rng.choice([2, 4, 8]))
        return BlockPermutation(tuple(int(p) + 1 for p in rng.permutation(b)))

    def family(self):
        return WeightedBasis(self.weight(), self.index())

    def operator(self):
        if self.rng.random() < 0.5:
            return Diagonal(self.weight())
        return PermutationWeighted(self.index(), self.weight())

    def dense_operator(self, size):
        rng = self.rng
        m = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
        if rng.random() < 0.3:
            m[:, rng.integers(size)] = 0.0
        return Explicit(tuple(map(tuple, m / np.sqrt(size))))

    def supported_family(self, modulus, residues):
        """Family living on the coefficient slots ``residues`` modulo ``modulus``."""
        off = [r - 1 for r in range(1, modulus + 1) if r not in residues]
        w = self.weight(period=modulus, zeros=off)
        dim = Expr(f"d*{len(residues)}/{modulus}", "d")
        return WeightedBasis(w, CompressedIndex(modulus, tuple(residues)), dim)

    def pair(self, complementary=False):
        rng = self.rng
        modulus = int(rng.choice([2, 4]))
        all_res = list(range(1, modulus + 1))
        size = int(rng.integers(1, modulus))
        left = sorted(int(r) for r in rng.choice(all_res, size=size, replace=False))
        mode = "complement" if complementary else rng.choice(
            ["complement", "overlap", "same"], p=[0.5, 0.3, 0.2])
        if mode == "complement":
            right = [r for r in all_res if r not in left]
        elif mode == "overlap":
            right = sorted(int(r) for r in rng.choice(all_res, size=int(rng.integers(1, modulus + 1)),
                                                      replace=False))
        else:
            right = left
        f = self.supported_family(modulus, left)
        g = f if mode == "same" else self.supported_family(modulus, right)
        return f, g, (modulus, left, right)


def spread_index(modulus, residues):
    """Inverse of :class:`CompressedIndex` as an expression in ``n``."""
    r = len(residues)
    if r == 1:
        return Expr(f"{modulus}*(n - 1) + {residues[0]}")
    # piecewise over (n-1) % r, written with indicator polynomials
    terms = []
    for j, res in enumerate(residues):
        ind = " * ".join(f"((((n - 1) % {r}) - {i}) / ({j} - {i}))"
                         for i in range(r) if i != j)
        terms.append(f"({res}) * {ind}")
    return Expr(f"{modulus}*((n - 1)//{r}) + " + " + ".join(terms))


_FAMILY_OP = ("Prop-3.2.fwd", "Prop-3.2.rev", "Prop-3.3", "Prop-3.5.fwd", "Prop-3.5.rev",
              "Prop-3.6.fwd", "Prop-3.6.rev", "Prop-3.7", "Prop-3.9.fwd", "Prop-3.9.rev",
              "Prop-3.10", "Prop-4.1", "Cor-4.2", "Cor-4.4")
_PAIRS = ("Prop-5.2.fwd", "Prop-5.2.rev", "Prop-5.4", "Prop-5.5.fwd", "Prop-5.5.rev")


def random_bindings(pid, rng, ladder, settings=DEFAULT_SETTINGS, stress=False):
    """One random instance for proposition ``pid``."""
    src = RandomSource(rng, stress)
    ladder = as_ladder(ladder)
    out = {"ladder": ladder, "settings": settings}
    if pid in ("Prop-2.4", "Prop-3.1"):
        out["L"] = src.dense_operator(ladder.levels[-1]) if rng.random() < 0.5 \
            else src.operator()
    elif pid in _FAMILY_OP:
        out.update(f=src.family(), L=src.operator())
    elif pid == "Prop-4.3":
        out.update(f=src.family(), L=src.operator(), L2=src.operator())
    elif pid in ("Prop-4.5", "Prop-5.8"):
        out.update(f=src.family(), g=src.family())
    elif pid in _PAIRS:
        f, g, _ = src.pair()
        out.update(f=f, g=g)
    elif pid in ("Cor-5.3", "Cor-5.6"):
        f, g, (modulus, left, right) = src.pair(complementary=True)
        out.update(f=f, g=g, left_index=spread_index(modulus, left),
                   right_index=spread_index(modulus, right))
    else:
        raise KeyError(pid)
    return out
