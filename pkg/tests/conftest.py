import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def all_entries():
    from semiringlab.corpus import corpus

    return corpus()


@pytest.fixture(scope="session")
def commutative_entries(all_entries):
    from semiringlab.tables import check_laws

    return tuple(
        e for e in all_entries if check_laws(e.structure).is_commutative_semiring
    )
