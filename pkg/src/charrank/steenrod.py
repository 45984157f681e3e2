"""Steenrod squares on Stiefel cohomology.

On the real rings, Sq^i sends a generator a_j to binom(j, i) * a_{j+i}
(zero when j+i exceeds n-1), and extends to monomials through the Cartan
formula. On the complex and quaternionic rings Sq^1 is taken to be zero:
Sq^1 is the mod-2 Bockstein and these manifolds have torsion-free integral
cohomology. Higher squares there are not defined by this engine and raise.
"""

from __future__ import annotations

from .rings import Element, FieldTag, Monomial, RingPresentation

SQ1_ZERO_ASSUMPTION = (
    "Sq^1 = 0 on all generators of complex/quaternionic Stiefel rings "
    "(Bockstein vanishes: integral cohomology is torsion-free)"
)


def binom_mod2(j: int, i: int) -> int:
    """Parity of binom(j, i): 1 iff every base-2 digit of i is <= that of j."""
    if j < 0 or i < 0:
        raise ValueError("binom_mod2 expects nonnegative arguments")
    return 1 if (j & i) == i else 0


def sq_on_generator(ring: RingPresentation, i: int, label: int) -> Element:
    """Sq^i of the generator with the given label."""
    gen = ring.generator(label)
    if i < 0:
        raise ValueError("Steenrod index must be nonnegative")
    if i == 0:
        return ring.generator_element(label)
    if ring.field is not FieldTag.REAL:
        if i == 1:
            return ring.zero(gen.degree + 1)
        raise NotImplementedError(
            f"Sq^{i} is not defined on {ring.field.value} Stiefel generators "
            "(only Sq^0 and Sq^1 are supported there)"
        )
    j = gen.label  # real generators have degree equal to their label
    if j + i <= ring.n - 1 and binom_mod2(j, i):
        return ring.generator_element(j + i)
    return ring.zero(gen.degree + i)


class SqTable:
    """Steenrod-square evaluator with a (i, monomial) memo.

    The memo is a pure cache: entries always equal recomputation, so sharing
    a table across readers is safe.
    """

    def __init__(self, ring: RingPresentation):
        self.ring = ring
        self._memo: dict[tuple[int, Monomial], Element] = {}

    def sq(self, i: int, x: Element) -> Element:
        if i < 0:
            raise ValueError("Steenrod index must be nonnegative")
        if i == 0:
            return x
        if self.ring.field is not FieldTag.REAL and i >= 2:
            raise NotImplementedError(
                f"Sq^{i} is not defined on {self.ring.field.value} Stiefel rings"
            )
        target = x.degree + i
        if target > self.ring.max_degree:
            raise ValueError(
                f"Sq^{i} on degree {x.degree} exceeds truncation bound "
                f"{self.ring.max_degree}"
            )
        acc = self.ring.zero(target)
        basis = self.ring.basis(x.degree)
        for idx in x.coords.support():
            acc = acc + self._sq_monomial(i, basis[idx])
        return acc

    def _sq_monomial(self, i: int, mono: Monomial) -> Element:
        key = (i, mono)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if not mono:
            result = self.ring.unit() if i == 0 else self.ring.zero(i)
        else:
            head, rest = mono[0], mono[1:]
            degree = self.ring.monomial_degree(mono)
            result = self.ring.zero(degree + i)
            rest_degree = self.ring.monomial_degree(rest)
            for i1 in range(i + 1):
                # Cartan: Sq^i(g * m) = sum over i1+i2=i of Sq^i1(g) Sq^i2(m)
                i2 = i - i1
                if i2 > rest_degree:
                    continue  # vanishes above the degree of the tail
                left = sq_on_generator(self.ring, i1, head)
                if left.is_zero:
                    continue
                right = self._sq_monomial(i2, rest)
                if right.is_zero:
                    continue
                result = result + self.ring.multiply(left, right)
        self._memo[key] = result
        return result

    def table_json(self, max_i: int | None = None) -> dict:
        """Deterministic dump of Sq^i on every basis monomial."""
        if max_i is None:
            max_i = self.ring.max_degree if self.ring.field is FieldTag.REAL else 1
        entries = []
        for d in range(self.ring.max_degree + 1):
            for mono in self.ring.basis(d):
                top = min(max_i, d, self.ring.max_degree - d)
                squares = {}
                for i in range(top + 1):
                    value = self.sq(i, self.ring.monomial_element(mono))
                    squares[str(i)] = self.ring.format_element(value)
                entries.append(
                    {
                        "monomial": self.ring.format_monomial(mono),
                        "degree": d,
                        "squares": squares,
                    }
                )
        out = {
            "ring": self.ring.to_json_dict(),
            "table": entries,
        }
        if self.ring.field is not FieldTag.REAL:
            out["assumptions"] = [SQ1_ZERO_ASSUMPTION]
        return out
