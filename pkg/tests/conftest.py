import pytest

from treeset.generators import chacon, fibonacci, fibonacci_block2, tribonacci

HORIZON = 60


@pytest.fixture(scope="session")
def fib():
    return fibonacci.factor_set(HORIZON)


@pytest.fixture(scope="session")
def trib():
    return tribonacci.factor_set(HORIZON)


@pytest.fixture(scope="session")
def cha():
    return chacon.factor_set(HORIZON)


@pytest.fixture(scope="session")
def fib2():
    return fibonacci_block2.factor_set(HORIZON)


def words(F, *texts):
    return {F.parse(t) for t in texts}


def fmt_set(F, ws):
    return {F.format(w) for w in ws}


# Plain-string reference words used as independent oracles.
def fib_string(n):
    a, b = "a", "ab"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def trib_string(n):
    w = "a"
    rules = {"a": "ab", "b": "ac", "c": "a"}
    while len(w) < n:
        w = "".join(rules[c] for c in w)
    return w[:n]


def chacon_string(n):
    w = "a"
    rules = {"a": "aabc", "b": "bc", "c": "abc"}
    while len(w) < n:
        w = "".join(rules[c] for c in w)
    return w[:n]


def fib2_string(n):
    f = fib_string(2 * n)
    table = {"aa": "u", "ab": "v", "ba": "w"}
    return "".join(table[f[i:i + 2]] for i in range(0, 2 * n, 2))


def string_factors(s, n):
    return {s[i:i + n] for i in range(len(s) - n + 1)}


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        status, title = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
