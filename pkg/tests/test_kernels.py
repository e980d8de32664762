import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thueplane import kernels
from thueplane._kernels_py import z_array


def naive_square(seq, max_half=0):
    """Independent quadratic oracle: scan every (start, half) block."""
    n = len(seq)
    for s in range(n):
        top = (n - s) // 2
        if max_half:
            top = min(top, max_half)
        for r in range(1, top + 1):
            if seq[s : s + r] == seq[s + r : s + 2 * r]:
                return (s, r)
    return None


def naive_z(s):
    n = len(s)
    out = []
    for i in range(n):
        k = 0
        while i + k < n and s[k] == s[i + k]:
            k += 1
        out.append(k if i else n)
    return out


def test_z_array_matches_naive():
    rnd = random.Random(7)
    for _ in range(300):
        s = [rnd.randrange(3) for _ in range(rnd.randrange(0, 30))]
        assert z_array(s) == naive_z(s)


@given(st.lists(st.integers(min_value=0, max_value=3), max_size=48), st.integers(0, 4))
@settings(max_examples=400, deadline=None)
def test_find_square_agrees_with_oracle(seq, max_half):
    got = kernels.find_square(seq, max_half)
    want = naive_square(seq, max_half)
    assert (got is None) == (want is None)
    if got is not None:
        s, r = got
        assert seq[s : s + r] == seq[s + r : s + 2 * r]
        if max_half:
            assert r <= max_half


def test_backends_agree():
    backends = kernels.available_backends()
    rnd = random.Random(11)
    for _ in range(300):
        seq = [rnd.randrange(4) for _ in range(rnd.randrange(0, 40))]
        answers = {name: fn(seq, 0) is not None for name, fn in backends.items()}
        assert len(set(answers.values())) == 1, (seq, answers)


def test_compiled_backend_is_available():
    # the build ships a compiled kernel; the pure fallback stays importable
    assert "python" in kernels.available_backends()
    assert kernels.BACKEND in ("compiled", "python")


def test_use_backend_switch():
    kernels.use_backend("python")
    assert kernels.BACKEND == "python"
    kernels.use_backend(None)
    with pytest.raises(ValueError):
        kernels.use_backend("bogus")


def test_long_squarefree_word_is_clean():
    from thueplane.words import ternary_nonrepetitive

    w = list(ternary_nonrepetitive(5000))
    assert kernels.find_square(w) is None
    w[2500] = w[2499]
    assert kernels.find_square(w) is not None
