import pytest

from prefcheck.axioms import AxiomEngine
from prefcheck.catalog import ENTRY_IDS, load_entry, run_entry


@pytest.fixture(scope="session")
def entry_engines():
    """One shared AxiomEngine per catalog entry (caches sections/verdicts)."""
    return {
        eid: AxiomEngine(load_entry(eid).relation, load_entry(eid).universe)
        for eid in ENTRY_IDS
    }


@pytest.fixture(scope="session")
def entry_reports():
    return {eid: run_entry(eid) for eid in ENTRY_IDS}
