import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from whtorsion.group_ring import CyclicGroupSpec, GroupRingElement, parse_element
from whtorsion.whitehead import GeneratorRegistry, WhiteheadClass, class_of, generators, scale, zero_class

Z5 = CyclicGroupSpec(5)
SIGMA_TEXT = "1 - t - t^4"


@pytest.fixture(scope="session")
def registry():
    return GeneratorRegistry.load()


@pytest.fixture
def sigma():
    return class_of(parse_element(SIGMA_TEXT, Z5))


def groups(orders=(1, 2, 3, 4, 5, 6, 7, 8, 9, 12)):
    def build(n, eps):
        return CyclicGroupSpec(n, eps if n % 2 == 0 else 1)
    return st.builds(build, st.sampled_from(orders), st.sampled_from([1, -1]))


def elements(group, lo=-6, hi=6):
    return st.lists(st.integers(lo, hi), min_size=group.n, max_size=group.n).map(
        lambda cs: GroupRingElement(group, tuple(cs))
    )


@st.composite
def element_pairs(draw, orders=(1, 2, 3, 5, 6, 7, 8)):
    g = draw(groups(orders))
    return draw(elements(g)), draw(elements(g))


@st.composite
def element_triples(draw, orders=(2, 3, 5, 7, 8)):
    g = draw(groups(orders))
    return draw(elements(g)), draw(elements(g)), draw(elements(g))


def _gens(n, eps):
    gens, _ = generators(n, GeneratorRegistry.load(), eps)
    return gens


@st.composite
def whitehead_classes(draw, group, max_exp=2):
    """Random class: a small combination of generators (plus trivial-unit noise)."""
    gens = _gens(group.n, group.epsilon)
    c = zero_class(group)
    for g in gens:
        e = draw(st.integers(-max_exp, max_exp))
        if e:
            c = c + scale(e, g)
    k = draw(st.integers(0, group.n - 1))
    sign = draw(st.sampled_from([1, -1]))
    rep = c.rep * GroupRingElement.monomial(group, k, sign)
    return WhiteheadClass(group, rep)


def units(group, max_exp=2):
    return whitehead_classes(group, max_exp).map(lambda c: c.rep)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, label = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {label}")
