import pytest

from legquad import catalog
from legquad.liealg import close_and_present


@pytest.fixture(scope="session")
def entries():
    """All catalog entries, built once per session."""
    return {name: catalog.get_entry(name) for name in catalog.entry_names()}


@pytest.fixture(scope="session")
def algebras(entries):
    """Quadric Lie algebras of the six main fixtures, built once."""
    out = {}
    for name in ("twisted-cubic", "segre-3", "segre-4", "segre-5",
                 "segre-split-3", "gr36", "grl36", "spinor-s6", "e7"):
        pres = entries[name].presentation
        quadrics = [g for g in pres.generators if g.homogeneous_degree() == 2]
        out[name] = close_and_present(quadrics, pres.form)
    return out
