import pytest

from ktdual.groups import resolve_group
from ktdual.repring import parse_rep


@pytest.fixture
def rep():
    def make(group, spec):
        g = resolve_group(group)
        return parse_rep(g, spec)

    return make
