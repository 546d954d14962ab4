"""
Pytest configuration and fixtures for adfnlp tests.
"""

import pytest

from adfnlp.logic import Interpretation3
from adfnlp.parsers import parse_adf, parse_program, parse_setaf

ADF_TEXT = """\
% five statements, two mutually attacking pairs
s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)).
ac(b,neg(a)).
ac(c,and(neg(b),e)).
ac(d,neg(c)).
ac(e,neg(d)).
"""

ADFPLUS_TEXT = """\
s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)).
ac(b,neg(a)).
ac(c,or(and(neg(c),neg(a)),and(neg(c),neg(d)))).
ac(d,neg(d)).
ac(e,and(neg(e),neg(b))).
"""

KLEENE_ADF_TEXT = """\
s(a). s(b). s(c).
ac(a,c(v)).
ac(b,or(neg(a),c)).
ac(c,b).
"""

REDUNDANT_ADF_TEXT = """\
s(a). s(b). s(c).
ac(a,or(and(b,neg(c)),and(neg(b),neg(c)))).
ac(b,c(v)).
ac(c,c(v)).
"""

PROGRAM_TEXT = """\
b :- c, not a.
a :- not b.
c :- d.
p :- c, d, not p.
p :- not a.
d.
"""

CHAINED_PROGRAM_TEXT = """\
c.
b :- not b.
a :- b.
a :- c.
"""

GUARDED_PROGRAM_TEXT = """\
c.
b :- not b.
a :- b, not c.
a :- c, not b.
a :- b, c.
"""

SETAF_TEXT = """\
arg(a). arg(b). arg(c).
att([a,b],c).
att([c],a).
"""


def interp(universe, text):
    """Build an interpretation from ``{a, ~b}``-style literals."""
    literals = [item.strip() for item in text.strip("{} ").split(",") if item.strip()]
    return Interpretation3.from_literals(universe, literals)


def as_set(models):
    """Interpretations as a set of literal sets."""
    return {model.to_literals() for model in models}


def literal_sets(*texts):
    return {
        frozenset(item.strip() for item in text.strip("{} ").split(",") if item.strip())
        for text in texts
    }


@pytest.fixture
def sample_adf():
    """a[¬b], b[¬a], c[¬b∧e], d[¬c], e[¬d]."""
    return parse_adf(ADF_TEXT)


@pytest.fixture
def sample_adfplus():
    """An ADF+ without stable models and with a unique L-stable model."""
    return parse_adf(ADFPLUS_TEXT)


@pytest.fixture
def kleene_adf():
    """a[⊤], b[¬a∨c], c[b]."""
    return parse_adf(KLEENE_ADF_TEXT)


@pytest.fixture
def redundant_adf():
    """a[(b∧¬c)∨(¬b∧¬c)], b[⊤], c[⊤] with the redundant link (b,a)."""
    return parse_adf(REDUNDANT_ADF_TEXT)


@pytest.fixture
def sample_program():
    """Six-rule program with three partial stable models."""
    return parse_program(PROGRAM_TEXT)


@pytest.fixture
def chained_program():
    return parse_program(CHAINED_PROGRAM_TEXT)


@pytest.fixture
def guarded_program():
    return parse_program(GUARDED_PROGRAM_TEXT)


@pytest.fixture
def sample_setaf():
    return parse_setaf(SETAF_TEXT)


@pytest.fixture
def write_input(tmp_path):
    """Write text to a temporary input file and return its path."""

    def _write(text, name="input.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
