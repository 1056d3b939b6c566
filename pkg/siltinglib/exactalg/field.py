from __future__ import annotations

import random
from functools import lru_cache
from typing import Any, Literal, Optional

from pydantic import BaseModel, model_validator
from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ


@lru_cache(maxsize=None)
def _domain(kind: str, p: Optional[int]):
    # one domain object per field so that elements always share a class
    if kind == "rationals":
        return QQ
    return GF(p, symmetric=False)


class FieldSpec(BaseModel):
    """
    The ground field: either the rationals or a prime field F_p.
    """

    kind: Literal["rationals", "prime"] = "rationals"
    p: Optional[int] = None

    class Config:
        frozen = True

    @model_validator(mode="after")
    def validate_prime(self):
        if self.kind == "prime":
            if self.p is None or not isprime(self.p):
                raise ValueError(f"prime field needs a prime modulus, got {self.p}")
        elif self.p is not None:
            raise ValueError("the rationals take no modulus")
        return self

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(kind="rationals")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(kind="prime", p=p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parses ``Q`` or ``F p``."""
        parts = text.split()
        if parts == ["Q"]:
            return cls.rationals()
        if len(parts) == 2 and parts[0] == "F" and parts[1].isdigit():
            return cls.prime(int(parts[1]))
        raise ValueError(f"unknown field {text!r}, expected 'Q' or 'F p'")

    def __str__(self) -> str:
        return "Q" if self.kind == "rationals" else f"F {self.p}"

    @property
    def domain(self):
        return _domain(self.kind, self.p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rationals" else self.p

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __call__(self, value: Any):
        """Coerces an int, a sympy number or a string such as ``-3/4`` into the field."""
        K = self.domain
        if isinstance(value, str):
            value = Rational(value.strip())
        if isinstance(value, Rational) and not value.is_Integer:
            return K.convert(value.p) / K.convert(value.q)
        if isinstance(value, Rational):
            return K.convert(int(value))
        return K.convert(value)

    def render(self, x) -> str:
        """Canonical text form: ``a/b`` in lowest terms, or ``0 <= e < p``."""
        value = self.domain.to_sympy(x)
        if self.kind == "prime":
            return str(int(value) % self.p)
        return str(value)

    def random_element(self, rng: random.Random, bound: int = 2**31):
        if self.kind == "prime":
            return self.domain.convert(rng.randrange(self.p))
        return self.domain.convert(rng.randrange(-bound, bound + 1))

    def elements(self):
        """All field elements; only meaningful over a prime field."""
        if self.kind != "prime":
            raise ValueError("the rationals cannot be enumerated")
        return [self.domain.convert(i) for i in range(self.p)]
