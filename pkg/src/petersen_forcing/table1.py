"""Reference forcing polynomials of P(n, 2), 3 <= n <= 36, shipped as data."""

from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources

from .polynomial import ForcingPolynomial, parse_polynomial

SHA256 = "11e6d266ffb1e3d05fd54e3a27b7b1ff8830a96e4f2db29e142709d2532df275"
N_RANGE = range(3, 37)


@lru_cache(maxsize=1)
def load() -> dict[int, ForcingPolynomial]:
    raw = resources.files(__package__).joinpath("data/table1.tsv").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != SHA256:
        raise RuntimeError(f"table1.tsv checksum mismatch: {digest}")
    rows = {}
    for line in raw.decode().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        n_text, body = line.split("\t")
        left, right = body.split(")+(")
        t1 = parse_polynomial(left)
        t2 = parse_polynomial(right)
        total = dict(t1)
        for e, c in t2.items():
            total[e] = total.get(e, 0) + c
        n = int(n_text)
        rows[n] = ForcingPolynomial(total, t1, t2, n)
    return rows


def reference(n: int) -> ForcingPolynomial:
    rows = load()
    if n not in rows:
        raise KeyError(f"no reference polynomial for n={n} (table covers {N_RANGE.start}..{N_RANGE.stop - 1})")
    return rows[n]
