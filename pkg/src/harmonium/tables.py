"""Built-in reference generating functions for small graph families.

The tables were transcribed once into data/reference_tables.json; the test
suite validates every entry by expanding its low-order series coefficients
and comparing them against independently computed brute-force counts, so a
transcription typo cannot silently survive.
"""

from __future__ import annotations

import json
from importlib import resources

from .algebra import Polynomial, RationalGeneratingFunction

_cache: dict | None = None


def _load() -> dict:
    global _cache
    if _cache is None:
        text = (
            resources.files("harmonium") / "data" / "reference_tables.json"
        ).read_text()
        _cache = json.loads(text)
    return _cache


def available() -> list[tuple[str, int, str]]:
    """All (family, n, form) triples present in the reference tables."""
    out = []
    for fam, sizes in _load().items():
        for n, forms in sizes.items():
            for form in forms:
                out.append((fam, int(n), form))
    return out


def reference_gf(
    family: str, n: int, form: str = "unreduced"
) -> RationalGeneratingFunction | None:
    """The stored generating function, or None when not tabulated."""
    entry = _load().get(family, {}).get(str(n), {}).get(form)
    if entry is None:
        return None
    return RationalGeneratingFunction(
        numerator=Polynomial(entry["numerator"]),
        denominator_factors=tuple((k, e) for k, e in entry["denominator"]),
    )
