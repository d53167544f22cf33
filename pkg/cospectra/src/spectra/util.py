import hashlib
import json
import re
from collections.abc import Iterator
from typing import Any

_range_re = re.compile(r"^\s*(?P<lo>\d+)\s*(?:(?:\.\.|-|:)\s*(?P<hi>\d+))?\s*$")


def parse_n_range(s: str) -> tuple[int, int]:
    # "1..8" => (1, 8); "20" => (20, 20)
    m = _range_re.match(s or "")
    if not m:
        raise ValueError(f"Invalid n-range {s!r}; expected N or A..B")
    lo = int(m.group("lo"))
    hi = int(m.group("hi")) if m.group("hi") is not None else lo
    if lo < 1 or hi < lo:
        raise ValueError(f"Invalid n-range {s!r}; need 1 <= A <= B")
    return lo, hi


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(data: Any) -> str:
    return hashlib.sha256(canonical_json(data).encode("ascii")).hexdigest()
