"""Acceptance suites: the checks that define a working build.

Each suite is a function taking a seed and returning ``(ok, detail)``.
The same suites back ``bandbrick verify`` and the acceptance tests, so
the CLI and the test run cannot drift apart.
"""

from __future__ import annotations

import itertools
import math
import random
import xml.etree.ElementTree as ET
from fractions import Fraction

from . import dyck, forms, gentle, render, words
from .errors import BadDimension, MultipleCycles

Result = tuple[bool, str]


def _alpha(s: str) -> tuple[int, ...]:
    return tuple(ord(c) - ord("a") + 1 for c in s)


def _digits(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


def _fails(checks: list[tuple[str, bool]]) -> list[str]:
    return [name for name, ok in checks if not ok]


def golden(seed: int = 0) -> Result:
    """Exact input/output pairs for every transform."""
    checks: list[tuple[str, bool]] = []

    def ck(name: str, ok: bool) -> None:
        checks.append((name, ok))

    ck("bw acab", words.bw_transform(_alpha("acab")) == _alpha("cbaa"))
    ck("bw acba", words.bw_transform(_alpha("acba")) == _alpha("baca"))
    w10 = _alpha("acacacbbbc")
    ck("bw acacacbbbc", words.bw_transform(w10) == _alpha("ccccbbbaaa"))
    ck("pcw acacacbbbc", words.is_perfectly_clustering(w10))
    ck(
        "bw-inverse ccccbbbaaa",
        words.bw_inverse(_alpha("ccccbbbaaa")) == words.necklace(w10),
    )

    ck(
        "st baaacaba",
        words.standard_permutation(_alpha("baaacaba")) == (6, 1, 2, 3, 8, 4, 7, 5),
    )

    ms = words.phi(_alpha("baacbcab"))
    ck("phi baacbcab", ms == (_alpha("aaacb"), _alpha("b"), _alpha("bc")))
    ck("phi-inverse of that", words.phi_inverse(ms) == _alpha("baacbcab"))

    try:
        words.bw_inverse(_alpha("cba"))
        ck("bw-inverse cba raises", False)
    except MultipleCycles:
        ck("bw-inverse cba raises", True)

    ck(
        "circular words (-1,-1,2)",
        dyck.circular_words((-1, -1, 2)) == ((1, 3, 2, 3),),
    )
    ck(
        "circular words (-3,-1,3,-2,3)",
        dyck.circular_words((-3, -1, 3, -2, 3))
        == ((1, 3, 1, 5, 4, 5, 4, 5), (1, 3, 2, 3)),
    )
    ck(
        "circular words (-8,2,2,4)",
        dyck.circular_words((-8, 2, 2, 4))
        == ((1, 2, 1, 4, 1, 3, 1, 4), (1, 2, 1, 4, 1, 3, 1, 4)),
    )
    erased = dyck.erase_ones(dyck.circular_words((-8, 2, 2, 4)))
    ck("erase ones (-8,2,2,4) vs phi(44443322)", erased == words.phi(_digits("44443322")))
    ck("erase ones (-8,2,2,4) value", erased == ((2, 4, 3, 4), (2, 4, 3, 4)))

    ck(
        "walk of 23223",
        gentle.walk_to_str(gentle.psi(_digits("23223")))
        == "a1 b1- a1 a2 b2- b1- a1 b1- a1 b1- a1 a2 b2- b1-",
    )
    ck(
        "g-vector of walk(23223)",
        gentle.g_vector_of_band(gentle.psi(_digits("23223"))) == (-5, 3, 2),
    )

    m = gentle.band_module(gentle.psi(_digits("2")), Fraction(5))
    ck("module dims psi(2)", m.dims == (1, 1))
    ck("module a1 entry", m.mats[("a", 1)] == ((Fraction(5),),))
    ck("module b1 entry", m.mats[("b", 1)] == ((Fraction(1),),))

    fl = _fails(checks)
    return (not fl, f"{len(checks)} exact checks" + (f"; failed: {fl}" if fl else ""))


def brick_pcw(seed: int = 0) -> Result:
    """Perfectly clustering equals brick, swept over two alphabets."""
    sweeps = [((2, 3), 10, 3), ((2, 3, 4), 7, 4)]
    total = 0
    mismatches: list[tuple[int, ...]] = []
    for letters, maxlen, n in sweeps:
        for length in range(1, maxlen + 1):
            for w in itertools.product(letters, repeat=length):
                if not words.is_primitive(w):
                    continue
                total += 1
                pcw = words.is_perfectly_clustering(w)
                walk = gentle.psi(w, n)
                brick = all(
                    gentle.is_brick(gentle.band_module(walk, Fraction(lam), n))
                    for lam in (1, 2, 3)
                )
                if pcw != brick:
                    mismatches.append(w)
    ok = not mismatches
    detail = f"{total} primitive words over two alphabets"
    if mismatches:
        detail += f"; mismatches: {mismatches[:5]}"
    return (ok, detail)


def curves_words(seed: int = 0) -> Result:
    """Erased curve words equal the necklace image of the sorted word."""
    total = 0
    bad: list[tuple[int, ...]] = []
    for n in range(2, 6):
        for s in range(1, 8):
            for rest in itertools.product(range(s + 1), repeat=n - 1):
                if sum(rest) != s:
                    continue
                g = (-s,) + rest
                total += 1
                erased = dyck.erase_ones(dyck.circular_words(g))
                word = []
                for i in range(n, 1, -1):
                    word.extend([i] * g[i - 1])
                expected = words.phi(tuple(word))
                if erased != expected:
                    bad.append(g)
    ok = not bad
    detail = f"{total} nonnegative-tail g-vectors, n <= 5, weight <= 7"
    if bad:
        detail += f"; failures: {bad[:5]}"
    return (ok, detail)


def _random_valid_gvector(
    rng: random.Random, nmax: int = 5, entry: int = 4, weight: int = 16
) -> tuple[int, ...]:
    while True:
        n = rng.randint(2, nmax)
        head = [rng.randint(-entry, entry) for _ in range(n - 1)]
        g = tuple(head) + (-sum(head),)
        if sum(abs(a) for a in g) > weight:
            continue
        try:
            if dyck.validate_gvector(g):
                return g
        except BadDimension:
            continue


def _walk_pool(rng: random.Random, count: int) -> list[tuple[gentle.Step, ...]]:
    # All walks live over n = 4 so their g-vectors share a length.
    pool: dict[str, tuple[gentle.Step, ...]] = {}
    while len(pool) < count:
        if rng.random() < 0.5:
            length = rng.randint(1, 5)
            w = tuple(rng.randint(2, 4) for _ in range(length))
            if not words.is_primitive(w):
                continue
            walks = [gentle.psi(w, 4)]
        else:
            g = _random_valid_gvector(rng, nmax=4, entry=3, weight=10)
            g = g + (0,) * (4 - len(g))
            try:
                dyck.validate_gvector(g)
            except BadDimension:
                continue
            comps = dyck.reconstruct_multislalom(g).components
            walks = [gentle.slalom_to_band_walk(c) for c in comps]
        for walk in walks:
            if len(walk) <= 16:
                pool[gentle.walk_to_str(walk)] = walk
    return [pool[k] for k in sorted(pool)]


def hom_euler(seed: int = 0) -> Result:
    """Euler form equals the Hom difference on random band pairs."""
    rng = random.Random(seed)
    pool = _walk_pool(rng, 30)
    trials = 200
    bad = 0
    for _ in range(trials):
        z1 = rng.choice(pool)
        z2 = rng.choice(pool)
        if not forms.hom_difference_check(z1, z2):
            bad += 1
    ok = bad == 0
    return (ok, f"{trials} band pairs from a pool of {len(pool)} walks; {bad} failed")


def bricks_n4(seed: int = 0) -> Result:
    """Closed-form four-vertex brick test against structural tests."""
    named = {
        (-2, -1, -3, 6): True,
        (-2, -3, 1, 4): True,
        (-4, 3, -2, 3): True,
        (-1, 1, 0, 0): True,
        (0, 0, -1, 1): True,
    }
    checks: list[tuple[str, bool]] = []
    for g, want in named.items():
        checks.append((f"named {g}", forms.is_brick_gvector_n4(g) == want))

    wide = 0
    for g in itertools.product(range(-8, 9), repeat=4):
        try:
            if not dyck.validate_gvector(g):
                continue
        except BadDimension:
            continue
        wide += 1
        single = len(dyck.reconstruct_multislalom(g).components) == 1
        if forms.is_brick_gvector_n4(g) != single:
            checks.append((f"component {g}", False))

    narrow = 0
    for g in itertools.product(range(-5, 6), repeat=4):
        try:
            if not dyck.validate_gvector(g):
                continue
        except BadDimension:
            continue
        narrow += 1
        if forms.is_brick_gvector_n4(g) != forms.is_brick_gvector(g):
            checks.append((f"endomorphism {g}", False))

    fl = _fails(checks)
    detail = (
        f"{wide} vectors vs component count (box 8), "
        f"{narrow} vs endomorphism test (box 5)"
    )
    if fl:
        detail += f"; failed: {fl[:5]}"
    return (not fl, detail)


def max_compat(seed: int = 0) -> Result:
    """Maximum pairwise-compatible brick sets match the ceiling bound."""
    checks: list[tuple[str, bool]] = []
    for n in (3, 4, 5):
        size, found = forms.max_compatible_search(n, 2)
        expected = math.ceil((n - 1) / 2)
        checks.append((f"n={n} box=2 size", size == expected))
        family = tuple(sorted(forms.witness_family(n)))
        checks.append((f"n={n} witness family", found == family))
        for i, g in enumerate(found):
            for h in found[i:]:
                checks.append((f"n={n} pair {g},{h}", forms.compatible(g, h)))
    size4, _ = forms.max_compatible_search(3, 4)
    checks.append(("n=3 box=4 size", size4 == 1))
    fl = _fails(checks)
    detail = "boxes for n in {3,4,5}; sizes match ceil((n-1)/2), witnesses match"
    if fl:
        detail += f"; failed: {fl[:5]}"
    return (not fl, detail)


def necklace_bound(seed: int = 0) -> Result:
    """Distinct-necklace count of sorted words stays within the bound."""
    rng = random.Random(seed)
    total = 0
    bad: list[tuple[int, ...]] = []
    for alpha in itertools.product(range(11), repeat=3):
        if not any(alpha) or sum(alpha) > 10:
            continue
        total += 1
        if not forms.necklace_count_bound_check(alpha):
            bad.append(alpha)
    sampled = 0
    while sampled < 500:
        n = rng.randint(2, 8)
        alpha = tuple(rng.randint(0, 3) for _ in range(n - 1))
        if not any(alpha) or sum(alpha) > 16:
            continue
        sampled += 1
        total += 1
        if not forms.necklace_count_bound_check(alpha):
            bad.append(alpha)
    ok = not bad
    detail = f"{total} multiplicity vectors (exhaustive n=4 plus 500 sampled, n up to 8)"
    if bad:
        detail += f"; failures: {bad[:5]}"
    return (ok, detail)


def christoffel(seed: int = 0) -> Result:
    """Two-letter regime: coprimality and the determinant identity."""
    checks: list[tuple[str, bool]] = []
    pairs = [(a, b) for a in range(13) for b in range(13) if (a, b) != (0, 0)]
    for a, b in pairs:
        g = (-a - b, a, b)
        want = math.gcd(a, b) == 1
        if forms.is_brick_gvector(g) != want:
            checks.append((f"brick ({a},{b})", False))
    dets = 0
    for a, b in pairs:
        for c, d in pairs:
            x = (-a - b, a, b)
            y = (-c - d, c, d)
            if forms.euler_form(x, y) != a * d - b * c:
                checks.append((f"det ({a},{b}),({c},{d})", False))
            dets += 1
    fl = _fails(checks)
    detail = f"{len(pairs)} slope vectors, {dets} determinant pairs"
    if fl:
        detail += f"; failed: {fl[:5]}"
    return (not fl, detail)


def witness(seed: int = 0) -> Result:
    """Euler-orthogonal pair that the Hom test still rejects."""
    x = (-1, -2, -2, 5)
    y = (-3, 0, -4, 7)
    checks = [
        ("euler xy", forms.euler_form(x, y) == 0),
        ("euler yx", forms.euler_form(y, x) == 0),
        ("brick x", forms.is_brick_gvector(x)),
        ("brick y", forms.is_brick_gvector(y)),
        ("not compatible", not forms.compatible(x, y)),
        ("midpoint brick", forms.is_brick_gvector((-2, -1, -3, 6))),
    ]
    fl = _fails(checks)
    detail = "orthogonal pair rejected by Hom test; midpoint is a brick"
    if fl:
        detail += f"; failed: {fl}"
    return (not fl, detail)


def structural(seed: int = 0) -> Result:
    """Random-instance invariants: decomposition, round trips, renderer."""
    rng = random.Random(seed)
    checks: list[tuple[str, bool]] = []

    decompositions = 0
    for _ in range(300):
        g = _random_valid_gvector(rng)
        comps = dyck.component_gvectors(g)
        total = tuple(sum(col) for col in zip(*comps))
        if total != g:
            checks.append((f"component sum {g}", False))
        for c in comps:
            if not forms.is_brick_gvector(c):
                checks.append((f"component brick {g} -> {c}", False))
        for i, c1 in enumerate(comps):
            for c2 in comps[i + 1 :]:
                if not forms.compatible(c1, c2):
                    checks.append((f"component compat {g}", False))
        decompositions += 1

    round_trips = 0
    for _ in range(200):
        k = rng.randint(1, 4)
        necklaces = []
        size = 0
        for _ in range(k):
            length = rng.randint(1, 5)
            while True:
                w = tuple(rng.randint(1, 3) for _ in range(length))
                if words.is_primitive(w):
                    break
            necklaces.append(words.necklace(w))
            size += length
            if size >= 14:
                break
        ms = tuple(sorted(necklaces))
        if words.phi(words.phi_inverse(ms)) != ms:
            checks.append((f"phi round trip {ms}", False))
        round_trips += 1

    for g in [(-1, 1), (-3, -1, 3, -2, 3), (-8, 2, 2, 4)]:
        a = render.render_dyck(g)
        b = render.render_dyck(g)
        if a != b:
            checks.append((f"render deterministic {g}", False))
        try:
            ET.fromstring(a)
        except ET.ParseError:
            checks.append((f"render well-formed {g}", False))

    fl = _fails(checks)
    detail = (
        f"{decompositions} decompositions, {round_trips} necklace round trips, "
        f"3 renders"
    )
    if fl:
        detail += f"; failed: {fl[:5]}"
    return (not fl, detail)


SUITES: list[tuple[int, str, "object"]] = [
    (1, "golden", golden),
    (2, "brick-pcw", brick_pcw),
    (3, "curves-words", curves_words),
    (4, "hom-euler", hom_euler),
    (5, "bricks-n4", bricks_n4),
    (6, "max-compat", max_compat),
    (7, "necklace-bound", necklace_bound),
    (8, "christoffel", christoffel),
    (9, "witness", witness),
    (10, "structural", structural),
]


def run_suite(name: str, seed: int = 0) -> Result:
    for _, suite_name, fn in SUITES:
        if suite_name == name:
            return fn(seed)
    raise KeyError(name)


def suite_names() -> list[str]:
    return [name for _, name, _ in SUITES]
