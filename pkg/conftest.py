import pytest

from algebra.catalog import named_instances
from models.report_models import Caps


@pytest.fixture(scope="session")
def caps():
    return Caps()


@pytest.fixture(scope="session")
def named(caps):
    """Named catalog by instance name, tags included."""
    return {instance.name: instance for instance in named_instances(caps)}
