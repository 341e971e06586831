import pytest
from hypothesis import settings

from stratum_atlas import ComponentDescriptor, HypFlag, Kind, Signature

# exact arithmetic can be slow on a loaded machine; correctness is what is checked
settings.register_profile("atlas", deadline=None)
settings.load_profile("atlas")


@pytest.fixture
def sig():
    return lambda *degrees: Signature(tuple(degrees))


def comp(kind, *degrees, flag=None, **kw):
    s = Signature(tuple(degrees))
    if flag is None:
        flag = HypFlag.YES if kind is Kind.HYPERELLIPTIC else HypFlag.NO
    return ComponentDescriptor(s, kind, flag, **kw)
