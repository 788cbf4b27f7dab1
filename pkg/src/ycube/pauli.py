"""Pauli strings over an indexed set of edge qubits.

A PauliString is a pair of bitsets (x_bits, z_bits) over n qubits; overall
phases are dropped, so multiplication is plain XOR and two strings commute
exactly when the symplectic form <a.x, b.z> + <a.z, b.x> vanishes mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class PauliString:
    n: int
    x_bits: int = 0
    z_bits: int = 0

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if (self.x_bits | self.z_bits) & ~mask:
            raise ValueError("support outside qubit range")

    def __mul__(self, other: "PauliString") -> "PauliString":
        if other.n != self.n:
            raise ValueError("length mismatch")
        return PauliString(self.n, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits)

    def commutes(self, other: "PauliString") -> bool:
        if other.n != self.n:
            raise ValueError("length mismatch")
        form = (self.x_bits & other.z_bits).bit_count() + (self.z_bits & other.x_bits).bit_count()
        return form % 2 == 0

    def symplectic_form(self, other: "PauliString") -> int:
        return ((self.x_bits & other.z_bits).bit_count() + (self.z_bits & other.x_bits).bit_count()) % 2

    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    def support(self) -> List[int]:
        bits = self.x_bits | self.z_bits
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def letter_at(self, i: int) -> str:
        x = (self.x_bits >> i) & 1
        z = (self.z_bits >> i) & 1
        return "IXZY"[x + 2 * z]

    def to_text(self) -> str:
        """Sparse form like 'X@12 Z@40 Y@7', ascending by qubit index."""
        parts = []
        for i in self.support():
            parts.append(f"{self.letter_at(i)}@{i}")
        return " ".join(parts)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @classmethod
    def single(cls, n: int, pauli: str, index: int) -> "PauliString":
        return cls.from_ops(n, [(pauli, index)])

    @classmethod
    def from_ops(cls, n: int, ops: Iterable[Tuple[str, int]]) -> "PauliString":
        x = z = 0
        for pauli, i in ops:
            if not 0 <= i < n:
                raise ValueError(f"qubit index {i} out of range")
            p = pauli.upper()
            if p == "X":
                x ^= 1 << i
            elif p == "Z":
                z ^= 1 << i
            elif p == "Y":
                x ^= 1 << i
                z ^= 1 << i
            else:
                raise ValueError(f"unknown Pauli letter {pauli!r}")
        return cls(n, x, z)

    @classmethod
    def from_text(cls, n: int, text: str) -> "PauliString":
        ops = []
        for token in text.split():
            if "@" not in token:
                raise ValueError(f"bad token {token!r}, expected LETTER@index")
            letter, _, idx = token.partition("@")
            ops.append((letter, int(idx)))
        return cls.from_ops(n, ops)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    return a * b


def commutes(a: PauliString, b: PauliString) -> bool:
    return a.commutes(b)


def product(items: Iterable[PauliString], n: int | None = None) -> PauliString:
    acc: PauliString | None = None
    for it in items:
        acc = it if acc is None else acc * it
    if acc is None:
        if n is None:
            raise ValueError("empty product needs an explicit length")
        return PauliString.identity(n)
    return acc


def x_on(n: int, edges: Iterable[int]) -> PauliString:
    bits = 0
    for e in edges:
        bits ^= 1 << e
    return PauliString(n, bits, 0)


def z_on(n: int, edges: Iterable[int]) -> PauliString:
    bits = 0
    for e in edges:
        bits ^= 1 << e
    return PauliString(n, 0, bits)
