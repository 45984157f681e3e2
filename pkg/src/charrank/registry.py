"""Static registry of witness bundles that certify lower bounds.

Each record names a concrete bundle on a family of Stiefel manifolds (keyed
by field, an n range, and a k pattern) together with the nonzero part of its
Stiefel-Whitney data and the characteristic rank it achieves. The engine
re-verifies every claim before using it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .rings import FieldTag, Monomial

PrefixData = tuple[tuple[int, tuple[Monomial, ...]], ...]


@dataclass(frozen=True)
class WitnessRecord:
    id: str
    field: FieldTag
    k_pattern: str | int
    claimed_charrank: int
    prefix: PrefixData
    provenance: str
    n_exact: int | None = None
    n_min: int | None = None
    n_max: int | None = None

    def resolve_k(self, n: int) -> int:
        if isinstance(self.k_pattern, int):
            return self.k_pattern
        if self.k_pattern == "n":
            return n
        if self.k_pattern.startswith("n-"):
            return n - int(self.k_pattern[2:])
        raise ValueError(f"witness {self.id}: bad k pattern {self.k_pattern!r}")

    def applies_to(self, field: FieldTag, n: int, k: int) -> bool:
        if field is not self.field:
            return False
        if self.n_exact is not None and n != self.n_exact:
            return False
        if self.n_min is not None and n < self.n_min:
            return False
        if self.n_max is not None and n > self.n_max:
            return False
        return self.resolve_k(n) == k

    def to_json_dict(self) -> dict:
        out: dict = {"id": self.id, "field": self.field.value}
        if self.n_exact is not None:
            out["n"] = self.n_exact
        if self.n_min is not None:
            out["n_min"] = self.n_min
        if self.n_max is not None:
            out["n_max"] = self.n_max
        out["k"] = self.k_pattern
        out["prefix"] = {
            str(d): [list(m) for m in monomials] for d, monomials in self.prefix
        }
        out["claimed_charrank"] = self.claimed_charrank
        out["provenance"] = self.provenance
        return out


def _parse_record(raw: dict) -> WitnessRecord:
    try:
        prefix = tuple(
            sorted(
                (int(degree), tuple(tuple(mono) for mono in monomials))
                for degree, monomials in raw["prefix"].items()
            )
        )
        return WitnessRecord(
            id=raw["id"],
            field=FieldTag(raw["field"]),
            k_pattern=raw["k"],
            claimed_charrank=raw["claimed_charrank"],
            prefix=prefix,
            provenance=raw.get("provenance", ""),
            n_exact=raw.get("n"),
            n_min=raw.get("n_min"),
            n_max=raw.get("n_max"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed witness record {raw.get('id', '?')!r}: {exc}")


@lru_cache(maxsize=1)
def load_witnesses() -> tuple[WitnessRecord, ...]:
    """Witness records bundled with the package."""
    text = resources.files(__package__).joinpath("witnesses.json").read_text()
    data = json.loads(text)
    if data.get("schema") != 1:
        raise ValueError(f"unsupported witness registry schema {data.get('schema')!r}")
    return tuple(_parse_record(raw) for raw in data["witnesses"])


def witness_by_id(witness_id: str) -> WitnessRecord:
    for record in load_witnesses():
        if record.id == witness_id:
            return record
    raise KeyError(witness_id)
