"""Exact coefficient rings and sparse linear combinations over arbitrary labels.

Three rings are supported: the integers ("z"), the rationals ("q") and the
integers modulo n ("zmod:<n>").  Ring elements are plain Python values --
arbitrary-precision ints, reduced Fractions, or residues in [0, n) -- kept
canonical by the ring object, so equality of elements is plain ``==``.

A :class:`LinComb` is an immutable sparse linear combination of hashable
labels with coefficients in one ring.  Zero coefficients are never stored
and labels serialize in a fixed total order, so two equal elements have
byte-identical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for 64-bit inputs; moduli here are tiny anyway
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """One of the integers, the rationals, or the integers modulo n >= 2."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("z", "q", "zmod"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "zmod":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError("modulus must be an integer >= 2")
        elif self.modulus is not None:
            raise ValueError("modulus only makes sense for zmod")

    @classmethod
    def integers(cls) -> "CoefficientRing":
        return cls("z")

    @classmethod
    def rationals(cls) -> "CoefficientRing":
        return cls("q")

    @classmethod
    def integers_mod(cls, n: int) -> "CoefficientRing":
        return cls("zmod", n)

    @property
    def zero(self):
        return Fraction(0) if self.kind == "q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "q" else 1 % self.modulus if self.kind == "zmod" else 1

    def normalize(self, value):
        """Coerce ``value`` into canonical form, rejecting non-exact input."""
        if self.kind == "q":
            if isinstance(value, float):
                raise TypeError("rationals require exact input, not float")
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise TypeError(f"{value} is not an element of {self}")
            value = value.numerator
        if not isinstance(value, int):
            raise TypeError(f"{value!r} is not an element of {self}")
        return value % self.modulus if self.kind == "zmod" else value

    def from_int(self, k: int):
        """Image of the integer k under the canonical map from the integers."""
        if not isinstance(k, int):
            raise TypeError("from_int expects an int")
        return self.normalize(k)

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        a = self.normalize(a)
        if self.kind == "z":
            return a in (1, -1)
        if self.kind == "q":
            return a != 0
        return gcd(a, self.modulus) == 1

    @property
    def is_field(self) -> bool:
        if self.kind == "q":
            return True
        if self.kind == "zmod":
            return _is_probable_prime(self.modulus)
        return False

    def format_coeff(self, a) -> str:
        return str(self.normalize(a))

    def parse_coeff(self, s: str):
        if self.kind == "q":
            return Fraction(s)
        if "/" in s:
            num, den = s.split("/", 1)
            if int(den) != 1:
                raise ValueError(f"{s!r} is not an element of {self}")
            return self.normalize(int(num))
        return self.normalize(int(s))

    @property
    def tag(self) -> str:
        """Short serialization tag: "z", "q" or "zmod:<n>"."""
        return f"zmod:{self.modulus}" if self.kind == "zmod" else self.kind

    def __str__(self):
        if self.kind == "z":
            return "Z"
        if self.kind == "q":
            return "Q"
        return f"Z/{self.modulus}"


ZZ = CoefficientRing.integers()
QQ = CoefficientRing.rationals()


def integers_mod(n: int) -> CoefficientRing:
    return CoefficientRing.integers_mod(n)


def parse_ring(tag: str) -> CoefficientRing:
    """Inverse of :attr:`CoefficientRing.tag`."""
    if tag == "z":
        return ZZ
    if tag == "q":
        return QQ
    if tag.startswith("zmod:"):
        return integers_mod(int(tag.split(":", 1)[1]))
    raise ValueError(f"unknown ring tag {tag!r}")


def _label_key(label):
    """Deterministic total order on labels: a label's own sort_key if any."""
    return getattr(label, "sort_key", label)


class LinComb:
    """An immutable sparse linear combination of labels over one ring.

    ``terms`` may be a mapping or an iterable of (label, coefficient) pairs;
    repeated labels are summed and zero coefficients dropped.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: CoefficientRing, terms=()):
        self.ring = ring
        tally: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for label, coeff in items:
            coeff = ring.normalize(coeff)
            if label in tally:
                coeff = tally[label] + coeff
                coeff = ring.normalize(coeff)
            tally[label] = coeff
        self._terms = {l: c for l, c in tally.items() if c != 0}
        self._hash = None

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "LinComb":
        return cls(ring)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __contains__(self, label):
        return label in self._terms

    def coeff(self, label):
        return self._terms.get(label, self.ring.zero)

    def labels(self):
        return self._terms.keys()

    def items(self):
        """Terms in the deterministic label order."""
        return sorted(self._terms.items(), key=lambda kv: _label_key(kv[0]))

    def combine(self, other: "LinComb", ca=1, cb=1) -> "LinComb":
        """Return ca*self + cb*other."""
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        ring = self.ring
        ca, cb = ring.normalize(ca), ring.normalize(cb)
        out = {}
        if ca != 0:
            for l, c in self._terms.items():
                out[l] = ca * c
        if cb != 0:
            for l, c in other._terms.items():
                out[l] = out.get(l, 0) + cb * c
        return LinComb(ring, out)

    def __add__(self, other):
        return self.combine(other)

    def __sub__(self, other):
        return self.combine(other, 1, -1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c) -> "LinComb":
        c = self.ring.normalize(c)
        if c == 0:
            return LinComb(self.ring)
        return LinComb(self.ring, {l: c * v for l, v in self._terms.items()})

    def map_labels(self, f) -> "LinComb":
        """Linear extension of a basis map: f(label) must return a LinComb."""
        out = LinComb(self.ring)
        for label, c in self._terms.items():
            image = f(label)
            if image.ring != self.ring:
                raise ValueError("ring mismatch")
            out = out.combine(image, 1, c)
        return out

    def change_ring(self, target: CoefficientRing) -> "LinComb":
        """Push integral coefficients through the canonical map Z -> target."""
        if self.ring.kind != "z":
            raise ValueError("only integral elements can change ring")
        return LinComb(target, {l: target.from_int(c) for l, c in self._terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            items = tuple(sorted(self._terms.items(), key=lambda kv: _label_key(kv[0])))
            self._hash = hash((self.ring, items))
        return self._hash

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = []
        for label, c in self.items():
            bits.append(f"{c}*{label!r}")
        return " + ".join(bits)

    def to_json(self, label_to_json) -> dict:
        return {
            "ring": self.ring.tag,
            "terms": [
                {"coeff": self.ring.format_coeff(c), "label": label_to_json(l)}
                for l, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, label_from_json) -> "LinComb":
        ring = parse_ring(obj["ring"])
        terms = [
            (label_from_json(entry["label"]), ring.parse_coeff(entry["coeff"]))
            for entry in obj["terms"]
        ]
        return cls(ring, terms)
